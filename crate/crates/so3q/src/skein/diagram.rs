use std::collections::{BTreeMap, HashMap};

use crate::{Error, Result};

/// One crossing `X a b c d`: arcs listed counterclockwise starting at the
/// incoming under-arc, so the under strand runs `a -> c` and the over strand
/// joins `b` and `d`.
pub type Crossing = [u32; 4];

/// Planar-diagram presentation of a framed link.
///
/// Crossings carry the geometry; `free_loops` counts split crossingless
/// unknotted components. Framings are per component and default to the
/// blackboard framing (the writhe of the component).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    components: Vec<Component>,
    framings: Vec<i64>,
    over_from_d: Vec<bool>,
}

/// A component of a diagram: its arcs in traversal order and its writhe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Arc labels in orientation order; empty for a free loop.
    pub arcs: Vec<u32>,
    pub writhe: i64,
}

/// Minimal union-find over dense indices.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// Returns `true` if two distinct classes were merged.
    pub(crate) fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra as usize] = rb;
        true
    }
}

impl LinkDiagram {
    /// Build a diagram and check that every arc label occurs exactly twice.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &crossings {
            for &a in x {
                *count.entry(a).or_default() += 1;
            }
        }
        if let Some((a, c)) = count.iter().find(|(_, &c)| c != 2) {
            return Err(Error::MalformedDiagram(format!(
                "arc {a} appears {c} times, expected exactly 2"
            )));
        }
        let (mut components, over_from_d) = orient(&crossings)?;
        components.extend((0..free_loops).map(|_| Component {
            arcs: Vec::new(),
            writhe: 0,
        }));
        let framings = components.iter().map(|c| c.writhe).collect();
        Ok(Self {
            crossings,
            free_loops,
            components,
            framings,
            over_from_d,
        })
    }

    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Self::new(Vec::new(), 1).expect("empty diagram is well formed")
    }

    /// Replace the per-component framings.
    pub fn with_framings(mut self, framings: Vec<i64>) -> Result<Self> {
        if framings.len() != self.components.len() {
            return Err(Error::DimensionMismatch {
                expected: self.components.len(),
                got: framings.len(),
            });
        }
        self.framings = framings;
        Ok(self)
    }

    /// Parse the text format: `X a b c d` per crossing, optional `F f1 f2 ...`
    /// framing header, `#` comments. Without crossings each `F` entry is a
    /// free unknot with that framing.
    pub fn parse(text: &str) -> Result<Self> {
        let mut crossings = Vec::new();
        let mut framings: Option<Vec<i64>> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tok = line.split_whitespace();
            let head = tok.next().unwrap();
            let err = |msg: String| Error::Parse { line: i + 1, msg };
            match head {
                "X" => {
                    let vals: Vec<u32> = tok
                        .map(|t| t.parse::<u32>().map_err(|e| err(format!("bad arc '{t}': {e}"))))
                        .collect::<Result<_>>()?;
                    if vals.len() != 4 {
                        return Err(err(format!("crossing needs 4 arcs, got {}", vals.len())));
                    }
                    crossings.push([vals[0], vals[1], vals[2], vals[3]]);
                }
                "F" => {
                    if framings.is_some() {
                        return Err(err("duplicate framing header".into()));
                    }
                    framings = Some(
                        tok.map(|t| t.parse::<i64>().map_err(|e| err(format!("bad framing '{t}': {e}"))))
                            .collect::<Result<_>>()?,
                    );
                }
                other => return Err(err(format!("unknown record '{other}'"))),
            }
        }
        let free = if crossings.is_empty() {
            framings.as_ref().map_or(0, Vec::len)
        } else {
            0
        };
        let d = Self::new(crossings, free)?;
        match framings {
            Some(f) => d.with_framings(f),
            None => Ok(d),
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    /// Sum of all crossing signs.
    pub fn writhe(&self) -> i64 {
        (0..self.crossings.len()).map(|i| self.sign(i)).sum()
    }

    /// `+1` when the over strand of crossing `i` runs `d -> b`.
    pub fn sign(&self, i: usize) -> i64 {
        if self.over_from_d[i] {
            1
        } else {
            -1
        }
    }

    /// Whether the over strand of crossing `i` enters at `d`.
    pub fn over_from_d(&self, i: usize) -> bool {
        self.over_from_d[i]
    }

    /// Component index owning each arc label.
    pub fn arc_component(&self) -> HashMap<u32, usize> {
        let mut m = HashMap::new();
        for (ci, c) in self.components.iter().enumerate() {
            for &a in &c.arcs {
                m.insert(a, ci);
            }
        }
        m
    }
}

/// Traverse every strand, returning the components (ordered by their
/// smallest arc label) and the over-strand direction at each crossing.
fn orient(crossings: &[Crossing]) -> Result<(Vec<Component>, Vec<bool>)> {
    let mut ends: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (i, x) in crossings.iter().enumerate() {
        for (p, &a) in x.iter().enumerate() {
            ends.entry(a).or_default().push((i, p));
        }
    }
    let other_end = |arc: u32, here: (usize, usize)| -> (usize, usize) {
        let e = &ends[&arc];
        if e[0] == here {
            e[1]
        } else {
            e[0]
        }
    };
    let mut over_from_d: Vec<Option<bool>> = vec![None; crossings.len()];
    let mut visited: HashMap<(usize, usize), usize> = HashMap::new();
    let mut comps: Vec<Vec<u32>> = Vec::new();

    // Entry points: incoming under-arcs first, then any over position so that
    // components with no under-crossing still get traversed.
    let mut starts: Vec<(usize, usize)> = (0..crossings.len()).map(|i| (i, 0)).collect();
    starts.extend((0..crossings.len()).map(|i| (i, 3)));
    for start in starts {
        if visited.contains_key(&start) {
            continue;
        }
        let ci = comps.len();
        let mut arcs = Vec::new();
        let mut cur = start;
        loop {
            if visited.insert(cur, ci).is_some() {
                break;
            }
            let (i, p) = cur;
            let exit = (p + 2) % 4;
            visited.insert((i, exit), ci);
            match p {
                3 => over_from_d[i] = Some(true),
                1 => over_from_d[i] = Some(false),
                _ => {}
            }
            let arc = crossings[i][exit];
            arcs.push(arc);
            cur = other_end(arc, (i, exit));
            if cur == start {
                break;
            }
        }
        comps.push(arcs);
    }
    let over: Vec<bool> = over_from_d
        .into_iter()
        .map(|o| o.ok_or_else(|| Error::MalformedDiagram("unreached crossing".into())))
        .collect::<Result<_>>()?;

    let mut comp_of_pos = visited;
    let mut order: Vec<usize> = (0..comps.len()).collect();
    order.sort_by_key(|&c| comps[c].iter().min().copied());
    let mut writhe = vec![0i64; comps.len()];
    for i in 0..crossings.len() {
        let under = comp_of_pos.remove(&(i, 0)).unwrap();
        let over_c = comp_of_pos[&(i, 1)];
        if under == over_c {
            writhe[under] += if over[i] { 1 } else { -1 };
        }
    }
    let components = order
        .iter()
        .map(|&c| Component {
            arcs: comps[c].clone(),
            writhe: writhe[c],
        })
        .collect::<Vec<_>>();
    Ok((components, over))
}

/// Signed braid word on a fixed number of strands; `k > 0` is `sigma_k`,
/// `k < 0` is `sigma_|k|^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub gens: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, gens: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        for &g in &gens {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidBraid(format!(
                    "generator {g} is out of range for {strands} strands"
                )));
            }
        }
        Ok(Self { strands, gens })
    }

    /// Parse whitespace-separated signed integers.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let gens = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|e| Error::InvalidBraid(format!("bad generator '{t}': {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, gens)
    }

    /// Sum of generator signs.
    pub fn writhe(&self) -> i64 {
        self.gens.iter().map(|g| g.signum() as i64).sum()
    }

    /// Number of components of the closure (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &g in &self.gens {
            let i = g.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }

    /// Planar diagram of the closure with blackboard framing.
    ///
    /// Strands run upward; `sigma_i` is a positive crossing. Strands never
    /// touched by a generator become free loops.
    pub fn closure_diagram(&self) -> Result<LinkDiagram> {
        let s = self.strands;
        let start: Vec<u32> = (1..=s as u32).collect();
        let mut cur = start.clone();
        let mut next = s as u32 + 1;
        let mut crossings = Vec::with_capacity(self.gens.len());
        for &g in &self.gens {
            let i = g.unsigned_abs() as usize - 1;
            let j = i + 1;
            let (ni, nj) = (next, next + 1);
            next += 2;
            if g > 0 {
                crossings.push([cur[j], nj, ni, cur[i]]);
            } else {
                crossings.push([cur[i], cur[j], nj, ni]);
            }
            cur[i] = ni;
            cur[j] = nj;
        }
        let rename: HashMap<u32, u32> = cur
            .iter()
            .zip(&start)
            .filter(|(c, s)| c != s)
            .map(|(&c, &s)| (c, s))
            .collect();
        for x in &mut crossings {
            for a in x.iter_mut() {
                if let Some(&s) = rename.get(a) {
                    *a = s;
                }
            }
        }
        let free = cur.iter().zip(&start).filter(|(c, s)| c == s).count();
        LinkDiagram::new(crossings, free)
    }
}
