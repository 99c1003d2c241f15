use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bracket::{bracket_raw, MAX_STATE_SUM_CROSSINGS};
use super::diagram::{Crossing, LinkDiagram, UnionFind};
use super::poly::LaurentPoly;
use crate::{Error, Result};

/// Chebyshev color `e_n` written in powers of `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebyshevColor {
    pub n: u32,
    /// `coeffs[k]` is the coefficient of `z^k`.
    pub coeffs: Vec<BigInt>,
}

/// `e_0 = 1`, `e_1 = z`, `e_{n+1} = z e_n - e_{n-1}`.
pub fn chebyshev_coeffs(n: u32) -> ChebyshevColor {
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    if n == 0 {
        return ChebyshevColor { n, coeffs: prev };
    }
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..n {
        let mut next: Vec<BigInt> = std::iter::once(BigInt::zero()).chain(cur.iter().cloned()).collect();
        for (k, c) in prev.iter().enumerate() {
            next[k] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    ChebyshevColor { n, coeffs: cur }
}

/// Bracket of the diagram with component `j` replaced by `copies[j]`
/// blackboard-parallel copies (zero copies deletes the component).
pub fn cabled_bracket(d: &LinkDiagram, copies: &[usize]) -> Result<LaurentPoly> {
    let (crossings, free) = cable(d, copies)?;
    bracket_raw(&crossings, free)
}

/// Crossing tuples and free-loop count of the cabled diagram.
pub(crate) fn cable(d: &LinkDiagram, copies: &[usize]) -> Result<(Vec<Crossing>, usize)> {
    let comps = d.components();
    if copies.len() != comps.len() {
        return Err(Error::DimensionMismatch {
            expected: comps.len(),
            got: copies.len(),
        });
    }
    let arc_comp = d.arc_component();
    let k_of = |arc: u32| copies[arc_comp[&arc]];
    let total: usize = d.crossings().iter().map(|x| k_of(x[0]) * k_of(x[1])).sum();
    if total > MAX_STATE_SUM_CROSSINGS {
        return Err(Error::TooManyCrossings {
            crossings: total,
            limit: MAX_STATE_SUM_CROSSINGS,
        });
    }

    // Labels: boundary (arc, copy) pairs first, then grid-interior arcs.
    let mut labels: HashMap<(u32, usize), u32> = HashMap::new();
    let mut fresh = 0u32;
    let mut label = |key: (u32, usize), labels: &mut HashMap<(u32, usize), u32>| -> u32 {
        *labels.entry(key).or_insert_with(|| {
            fresh += 1;
            fresh - 1
        })
    };
    let mut small: Vec<Crossing> = Vec::with_capacity(total);
    let mut glue: Vec<(u32, u32)> = Vec::new();
    let mut interior = 1u32 << 30;

    for (ci, x) in d.crossings().iter().enumerate() {
        let [a, b, c, dd] = *x;
        let ku = k_of(a);
        let ko = k_of(b);
        let from_d = d.over_from_d(ci);
        // Copy 1 is rightmost with respect to the strand orientation.
        let over_copy_at_row = |row: usize| if from_d { row + 1 } else { ko - row };
        if ku == 0 || ko == 0 {
            for j in 1..=ku {
                let (p, q) = (label((a, j), &mut labels), label((c, j), &mut labels));
                glue.push((p, q));
            }
            for i in 1..=ko {
                let (p, q) = (label((dd, i), &mut labels), label((b, i), &mut labels));
                glue.push((p, q));
            }
            continue;
        }
        // v[row][col]: vertical segment entering row `row` in column `col`;
        // h[row][col]: horizontal segment entering column `col` in row `row`.
        let mut v = vec![vec![0u32; ku]; ko + 1];
        for col in 0..ku {
            let copy = ku - col;
            v[0][col] = label((a, copy), &mut labels);
            v[ko][col] = label((c, copy), &mut labels);
            for row in v.iter_mut().take(ko).skip(1) {
                row[col] = interior;
                interior += 1;
            }
        }
        let mut hcols = vec![vec![0u32; ku + 1]; ko];
        for (row, hrow) in hcols.iter_mut().enumerate() {
            let copy = over_copy_at_row(row);
            hrow[0] = label((dd, copy), &mut labels);
            hrow[ku] = label((b, copy), &mut labels);
            for slot in hrow.iter_mut().take(ku).skip(1) {
                *slot = interior;
                interior += 1;
            }
        }
        for row in 0..ko {
            for col in 0..ku {
                small.push([v[row][col], hcols[row][col + 1], v[row + 1][col], hcols[row][col]]);
            }
        }
    }

    // Free loops: copies of crossingless components, plus glued classes that
    // never reach a crossing.
    let mut free = 0usize;
    for (ci, comp) in comps.iter().enumerate() {
        if comp.arcs.is_empty() {
            free += copies[ci];
        }
    }
    if glue.is_empty() {
        return Ok((small, free));
    }
    let mut ids: Vec<u32> = labels.values().copied().collect();
    ids.extend(small.iter().flatten().copied());
    ids.sort_unstable();
    ids.dedup();
    let dense: HashMap<u32, u32> = ids.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
    let mut uf = UnionFind::new(ids.len());
    for (p, q) in &glue {
        uf.union(dense[p], dense[q]);
    }
    let used: HashSet<u32> = small.iter().flatten().map(|x| uf.find(dense[x])).collect();
    let glued: HashSet<u32> = glue.iter().map(|(p, _)| uf.find(dense[p])).collect();
    free += glued.difference(&used).count();
    let rep: BTreeMap<u32, u32> = ids.iter().map(|&x| (x, uf.find(dense[&x]))).collect();
    let renamed = small.iter().map(|x| x.map(|a| rep[&a])).collect();
    Ok((renamed, free))
}

/// Colored bracket `<e_{n_1}, ..., e_{n_m}>` of a framed diagram.
///
/// Each color is expanded in powers of `z` and every monomial becomes a
/// cable. Components whose framing differs from the blackboard writhe pick
/// up the twist `((-1)^n A^(n^2+2n))^(framing - writhe)`.
pub fn colored_bracket(d: &LinkDiagram, colors: &[u32]) -> Result<LaurentPoly> {
    let comps = d.components();
    if colors.len() != comps.len() {
        return Err(Error::DimensionMismatch {
            expected: comps.len(),
            got: colors.len(),
        });
    }
    let expansions: Vec<ChebyshevColor> = colors.iter().map(|&n| chebyshev_coeffs(n)).collect();
    let mut out = LaurentPoly::zero();
    let mut copies = vec![0usize; colors.len()];
    loop {
        let coef: BigInt = expansions
            .iter()
            .zip(&copies)
            .map(|(e, &k)| e.coeffs[k].clone())
            .product();
        if !coef.is_zero() {
            out = &out + &cabled_bracket(d, &copies)?.scale(&coef);
        }
        // odometer over powers 0..=n_j
        let mut j = 0;
        loop {
            if j == copies.len() {
                return Ok(apply_framing(d, colors, out));
            }
            if copies[j] < colors[j] as usize {
                copies[j] += 1;
                break;
            }
            copies[j] = 0;
            j += 1;
        }
    }
}

fn apply_framing(d: &LinkDiagram, colors: &[u32], mut p: LaurentPoly) -> LaurentPoly {
    for ((comp, &f), &n) in d.components().iter().zip(d.framings()).zip(colors) {
        let k = f - comp.writhe;
        if k != 0 && n != 0 {
            p = &p * &twist_power(n as i64, k);
        }
    }
    p
}

/// `((-1)^n A^(n^2+2n))^k` as a Laurent monomial.
pub fn twist_power(n: i64, k: i64) -> LaurentPoly {
    let sign = if (n * k).rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, (n * n + 2 * n) * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn chebyshev_small() {
        assert_eq!(chebyshev_coeffs(0).coeffs, poly(&[1]));
        assert_eq!(chebyshev_coeffs(2).coeffs, poly(&[-1, 0, 1]));
        assert_eq!(chebyshev_coeffs(5).coeffs, poly(&[0, 3, 0, -4, 0, 1]));
    }

    #[test]
    fn cable_counts_crossings() {
        let d = LinkDiagram::new(vec![[2, 2, 1, 1]], 0).unwrap();
        let (xs, free) = cable(&d, &[3]).unwrap();
        assert_eq!(xs.len(), 9);
        assert_eq!(free, 0);
        let (xs, free) = cable(&d, &[0]).unwrap();
        assert!(xs.is_empty());
        assert_eq!(free, 0);
    }
}
