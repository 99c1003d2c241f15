use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use super::diagram::{Crossing, LinkDiagram, UnionFind};
use super::poly::LaurentPoly;
use crate::{Error, Result};

/// Largest crossing count accepted by the `2^c` state sum.
pub const MAX_STATE_SUM_CROSSINGS: usize = 24;

/// Kauffman bracket of a diagram, `<empty> = 1` and each loop `-A^2 - A^-2`.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    bracket_raw(d.crossings(), d.free_loops())
}

/// State sum over bare crossing tuples plus a number of split unknots.
pub(crate) fn bracket_raw(crossings: &[Crossing], free_loops: usize) -> Result<LaurentPoly> {
    let c = crossings.len();
    if c > MAX_STATE_SUM_CROSSINGS {
        return Err(Error::TooManyCrossings {
            crossings: c,
            limit: MAX_STATE_SUM_CROSSINGS,
        });
    }
    let mut index: HashMap<u32, u32> = HashMap::new();
    let dense: Vec<[u32; 4]> = crossings
        .iter()
        .map(|x| {
            x.map(|a| {
                let n = index.len() as u32;
                *index.entry(a).or_insert(n)
            })
        })
        .collect();
    let arcs = index.len();

    // tally[(number of A-smoothings, loops)] = number of states
    let tally = tally_states(&dense, arcs);

    let delta = LaurentPoly::loop_value();
    let mut delta_pows: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    let mut out = LaurentPoly::zero();
    for ((n_a, loops), count) in tally {
        let total = loops + free_loops;
        while delta_pows.len() <= total {
            let next = delta_pows.last().unwrap() * &delta;
            delta_pows.push(next);
        }
        let exp = 2 * n_a as i64 - c as i64;
        out = &out + &delta_pows[total].shift(exp).scale(&BigInt::from(count));
    }
    Ok(out)
}

fn loops_in_state(dense: &[[u32; 4]], arcs: usize, state: u64) -> usize {
    let mut uf = UnionFind::new(arcs);
    let mut comps = arcs;
    for (i, x) in dense.iter().enumerate() {
        let (p, q) = if state >> i & 1 == 1 {
            ((x[0], x[1]), (x[2], x[3]))
        } else {
            ((x[0], x[3]), (x[1], x[2]))
        };
        comps -= uf.union(p.0, p.1) as usize;
        comps -= uf.union(q.0, q.1) as usize;
    }
    comps
}

fn tally_range(dense: &[[u32; 4]], arcs: usize, lo: u64, hi: u64) -> BTreeMap<(u32, usize), u64> {
    let mut t = BTreeMap::new();
    for state in lo..hi {
        let loops = loops_in_state(dense, arcs, state);
        *t.entry((state.count_ones(), loops)).or_insert(0) += 1;
    }
    t
}

#[cfg(feature = "parallel")]
fn tally_states(dense: &[[u32; 4]], arcs: usize) -> BTreeMap<(u32, usize), u64> {
    use rayon::prelude::*;
    let total = 1u64 << dense.len();
    let chunk = 1u64 << 14;
    if total <= chunk {
        return tally_range(dense, arcs, 0, total);
    }
    let parts: Vec<BTreeMap<(u32, usize), u64>> = (0..total / chunk)
        .into_par_iter()
        .map(|k| tally_range(dense, arcs, k * chunk, (k + 1) * chunk))
        .collect();
    let mut t = BTreeMap::new();
    for part in parts {
        for (k, v) in part {
            *t.entry(k).or_insert(0) += v;
        }
    }
    t
}

#[cfg(not(feature = "parallel"))]
fn tally_states(dense: &[[u32; 4]], arcs: usize) -> BTreeMap<(u32, usize), u64> {
    tally_range(dense, arcs, 0, 1u64 << dense.len())
}
