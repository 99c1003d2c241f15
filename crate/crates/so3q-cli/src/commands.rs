use std::fs;

use num_complex::Complex64;
use serde_json::{json, Value};
use so3q::geom::{modular_phase_check, verify, FrameGenerator, QuantizationContext};
use so3q::jones::{colored_jones, default_backend, Backend, JonesData, KnotPresentation};
use so3q::knot_state::{
    knot_state_with_precision, l2_norm_formula_with_precision, quadrature_norm_sq, reference_volume, to_csv,
    volume_sequence,
};
use so3q::skein::{colored_bracket, kauffman_bracket, BraidWord, LinkDiagram, RootContext};
use so3q::tqft::{curve_operator_skein, kirby_constants, rep_s, rep_t, rt_invariant, sl2z_rep, MappingClassWord};
use so3q::Error;

use crate::args::{
    BracketArgs, Format, GeomArgs, JonesArgs, KnotArgs, KnotStateArgs, RtArgs, TqftArgs, TqftEmit, VolumeArgs,
};
use crate::error::CliError;
use crate::json::{complex, complex_list, matrix};

pub enum Payload {
    Json(Value),
    Csv(String),
}

/// Result of one command; `failed` carries the reason when a check did not pass.
pub struct Report {
    pub payload: Payload,
    pub failed: Option<String>,
}

impl Report {
    fn json(v: Value) -> Self {
        Self {
            payload: Payload::Json(v),
            failed: None,
        }
    }
}

fn required<T>(v: Option<T>, flag: &str, cmd: &str) -> Result<T, CliError> {
    v.ok_or_else(|| {
        CliError::Config(format!(
            "{cmd} needs --{flag} (or `{}` in the [{cmd}] config table)",
            flag.replace('-', "_")
        ))
    })
}

fn parse_backend(s: Option<&str>, k: &KnotPresentation) -> Result<Backend, CliError> {
    match s {
        None => Ok(default_backend(k)),
        Some("exact") => Ok(Backend::Exact),
        Some("rmatrix" | "r-matrix") => Ok(Backend::RMatrix),
        Some("catalog") => Ok(Backend::Catalog),
        Some(other) => Err(CliError::Config(format!(
            "unknown backend '{other}'; use exact, rmatrix or catalog"
        ))),
    }
}

fn parse_braid(word: &str, strands: Option<usize>) -> Result<BraidWord, CliError> {
    let strands = match strands {
        Some(s) => s,
        None => {
            let probe = BraidWord::parse(word, usize::MAX)?;
            probe
                .gens
                .iter()
                .map(|g| g.unsigned_abs() as usize + 1)
                .max()
                .unwrap_or(1)
        }
    };
    Ok(BraidWord::parse(word, strands)?)
}

pub fn resolve_knot(a: &KnotArgs, cmd: &str) -> Result<KnotPresentation, CliError> {
    match (&a.knot, &a.braid) {
        (Some(_), Some(_)) => Err(CliError::Config(format!(
            "{cmd}: give either --knot or --braid, not both"
        ))),
        (Some(name), None) => Ok(KnotPresentation::catalog(name)?),
        (None, Some(word)) => Ok(KnotPresentation::from_braid(parse_braid(word, a.strands)?)?),
        (None, None) => Err(CliError::Config(format!("{cmd} needs --knot NAME or --braid WORD"))),
    }
}

/// Parse `i`, `2i`, `-0.5+1.2i`, `1e-1+3i`, or a real number.
pub fn parse_tau(s: &str) -> Result<Complex64, CliError> {
    let bad = || {
        CliError::Config(format!(
            "cannot parse tau '{s}'; expected a complex number like 0.3+1.7i"
        ))
    };
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|x| Complex64::new(x, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re.parse::<f64>().map_err(|_| bad())?, im))
}

pub fn jones(a: &JonesArgs, bits: u32) -> Result<Report, CliError> {
    let k = resolve_knot(&a.knot, "jones")?;
    let n = required(a.n, "n", "jones")?;
    let mut out = json!({ "knot": k.name, "n": n });
    if a.exact {
        let p = colored_jones(&k, n, &RootContext::new(3)?, Backend::Exact)?;
        let JonesData::Exact(poly) = &p.value else {
            unreachable!("exact backend returns a polynomial");
        };
        out["variable"] = json!("t");
        out["laurent"] = json!(poly.to_string_var("t"));
    }
    if let Some(r) = a.r {
        let ctx = RootContext::with_precision(r, bits)?;
        let backend = if a.exact && a.backend.is_none() {
            Backend::Exact
        } else {
            parse_backend(a.backend.as_deref(), &k)?
        };
        let v = colored_jones(&k, n, &ctx, backend)?.at(&ctx);
        out["r"] = json!(r);
        out["backend"] = json!(backend.name());
        out["value"] = complex(v);
        out["abs"] = json!(v.norm());
    } else if !a.exact {
        return Err(CliError::Config("jones needs --exact, --r R, or both".into()));
    }
    Ok(Report::json(out))
}

pub fn bracket(a: &BracketArgs) -> Result<Report, CliError> {
    let d = match (&a.pd, &a.knot.knot, &a.knot.braid) {
        (Some(path), None, None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read PD file {}: {e}", path.display())))?;
            LinkDiagram::parse(&text)?
        }
        (None, Some(_), None) => resolve_knot(&a.knot, "bracket")?.braid.closure_diagram()?,
        (None, None, Some(word)) => parse_braid(word, a.knot.strands)?.closure_diagram()?,
        (None, None, None) => return Err(CliError::Config("bracket needs --pd FILE, --knot or --braid".into())),
        _ => {
            return Err(CliError::Config(
                "bracket: give exactly one of --pd, --knot, --braid".into(),
            ))
        }
    };
    let poly = match a.color {
        None => kauffman_bracket(&d)?,
        Some(c) => colored_bracket(&d, &vec![c; d.components().len().max(1)])?,
    };
    let mut out = json!({
        "components": d.components().len() + d.free_loops(),
        "crossings": d.crossings().len(),
        "writhe": d.writhe(),
        "variable": "A",
        "laurent": poly.to_string_var("A"),
    });
    if let Some(c) = a.color {
        out["color"] = json!(c);
    }
    if let Some(r) = a.r {
        out["r"] = json!(r);
        out["value"] = complex(RootContext::new(r)?.eval(&poly));
    }
    Ok(Report::json(out))
}

fn parse_curve(s: &str) -> Result<(i64, i64), CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => Ok((a, b)),
            _ => Err(CliError::Config(format!("curve '{s}' must be two integers 'a,b'"))),
        },
        _ => Err(CliError::Config(format!("curve '{s}' must be two integers 'a,b'"))),
    }
}

pub fn tqft(a: &TqftArgs) -> Result<Report, CliError> {
    let r = required(a.r, "r", "tqft")?;
    let emit = a.emit.unwrap_or(match (&a.word, &a.curve) {
        (Some(_), _) => TqftEmit::Word,
        (None, Some(_)) => TqftEmit::Curve,
        _ => TqftEmit::Matrices,
    });
    let out = match emit {
        TqftEmit::Matrices => json!({
            "r": r,
            "rep_t": matrix(&rep_t(r)?),
            "rep_s": matrix(&rep_s(r)?),
        }),
        TqftEmit::Kirby => {
            let k = kirby_constants(r)?;
            json!({
                "r": r,
                "eta": k.eta,
                "kappa": complex(k.kappa),
                "omega": complex_list(&k.omega_coeffs),
            })
        }
        TqftEmit::Word => {
            let w: MappingClassWord = required(a.word.as_deref(), "word", "tqft")?.parse()?;
            json!({
                "r": r,
                "word": w.to_string(),
                "sl2z": w.matrix,
                "rep": matrix(&sl2z_rep(&w, r)?),
            })
        }
        TqftEmit::Curve => {
            let (p, q) = parse_curve(required(a.curve.as_deref(), "curve", "tqft")?)?;
            json!({
                "r": r,
                "curve": [p, q],
                "operator": matrix(&curve_operator_skein(p, q, r)?),
            })
        }
    };
    Ok(Report::json(out))
}

pub fn geom_verify(a: &GeomArgs) -> Result<Report, CliError> {
    let r = required(a.r, "r", "geom-verify")?;
    let tau = parse_tau(a.tau.as_deref().unwrap_or("i"))?;
    let ctx = QuantizationContext::new(r, tau)?;
    let rep = verify(&ctx)?;
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "residual": c.residual, "tolerance": c.tolerance, "passed": c.passed }))
        .collect();
    let mut modular = Vec::new();
    for g in [FrameGenerator::T, FrameGenerator::S] {
        let m = modular_phase_check(g, &ctx)?;
        modular.push(json!({
            "generator": g.to_string(),
            "global_phase": complex(m.global_phase),
            "projective_deviation": m.projective_deviation,
            "in_space_residual": m.in_space_residual,
            "literal_deviation": m.literal_deviation,
            "measured": matrix(&m.measured),
        }));
    }
    let failed: Vec<&str> = rep
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    Ok(Report {
        payload: Payload::Json(json!({
            "r": r,
            "tau": complex(tau),
            "all_passed": failed.is_empty(),
            "checks": checks,
            "modular": modular,
        })),
        failed: (!failed.is_empty()).then(|| failed.join(", ")),
    })
}

pub fn knot_state(a: &KnotStateArgs, bits: u32) -> Result<Report, CliError> {
    let k = resolve_knot(&a.knot, "knot-state")?;
    let r = required(a.r, "r", "knot-state")?;
    let backend = parse_backend(a.backend.as_deref(), &k)?;
    let state = knot_state_with_precision(&k, r, backend, bits)?;
    let norm = l2_norm_formula_with_precision(&k, r, backend, bits)?;
    let mut out = json!({
        "knot": k.name,
        "r": r,
        "backend": backend.name(),
        "coefficients": complex_list(&state.coeffs),
        "norm_sq": norm.norm_sq,
        "norm": norm.norm,
        "v_r": 2.0 * std::f64::consts::PI / r as f64 * norm.norm.ln(),
    });
    if state.section.is_some() {
        out["quadrature_norm_sq"] = json!(quadrature_norm_sq(&state)?);
    }
    Ok(Report::json(out))
}

pub fn volume_seq(a: &VolumeArgs, bits: u32, format: Format) -> Result<Report, CliError> {
    let k = resolve_knot(&a.knot, "volume-seq")?;
    let r_min = required(a.r_min, "r-min", "volume-seq")?;
    let r_max = a.r_max.unwrap_or(r_min);
    let step = a.step.unwrap_or(1);
    if step == 0 || r_max < r_min {
        return Err(CliError::Config(format!(
            "volume-seq needs step >= 1 and r-max >= r-min (got {r_min}..{r_max} step {step})"
        )));
    }
    let levels: Vec<u32> = (r_min..=r_max).step_by(step as usize).collect();
    let backend = parse_backend(a.backend.as_deref(), &k)?;
    let ref_vol = match reference_volume(&k.name, a.ref_vol) {
        Err(Error::UnknownCatalogEntry(name)) => {
            return Err(CliError::Config(format!(
                "no reference volume for '{name}'; pass --ref-vol"
            )))
        }
        other => other?,
    };
    let rows = volume_sequence(&k, &levels, backend, bits, ref_vol)?;
    let payload = match format {
        Format::Csv => Payload::Csv(to_csv(&rows)),
        Format::Json => Payload::Json(json!({
            "knot": k.name,
            "backend": backend.name(),
            "rows": rows.iter().map(|w| json!({
                "r": w.r,
                "norm_sq": w.norm_sq,
                "v_r": w.v_r,
                "argmax_n": w.argmax_n,
                "ref_vol": w.ref_vol,
                "rel_err": w.rel_err,
            })).collect::<Vec<_>>(),
        })),
    };
    Ok(Report { payload, failed: None })
}

pub fn rt(a: &RtArgs) -> Result<Report, CliError> {
    let r = required(a.r, "r", "rt")?;
    let framing = a.framing.unwrap_or(0);
    let knot = if a.knot.knot.is_none() && a.knot.braid.is_none() {
        None
    } else {
        Some(resolve_knot(&a.knot, "rt")?)
    };
    let backend = match &knot {
        Some(k) => parse_backend(a.backend.as_deref(), k)?,
        None => Backend::Catalog,
    };
    let v = rt_invariant(knot.as_ref(), framing, r, backend)?;
    Ok(Report::json(json!({
        "knot": knot.as_ref().map(|k| k.name.clone()),
        "framing": framing,
        "r": r,
        "backend": backend.name(),
        "value": complex(v),
    })))
}
