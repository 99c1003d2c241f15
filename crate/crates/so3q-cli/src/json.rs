use num_complex::Complex64;
use serde_json::{json, Value};
use so3q::tqft::CMatrix;

pub fn complex(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn complex_list(v: &[Complex64]) -> Value {
    Value::Array(v.iter().copied().map(complex).collect())
}

/// Row-major list of rows.
pub fn matrix(m: &CMatrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array((0..m.ncols()).map(|j| complex(m[(i, j)])).collect()))
            .collect(),
    )
}
