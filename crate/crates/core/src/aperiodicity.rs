//! Aperiodicity and exact mixing times.
//!
//! For a monic structure the slice matrix `M_(i,j)` is the one-step transfer
//! relation of a walk that enters a tuple at position `i` and leaves at `j`.
//! The mixing time is the least `τ` for which every product of `τ` slice
//! matrices is `J`; the level sets of such products are iterated until they
//! collapse to `{J}` or repeat.
//!
//! Pattern positions are 0-based throughout.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::boolmat::{is_irreducible, is_primitive, slice_matrices, BoolMatrix};
use crate::error::{input, Result};
use crate::structures::{monic_product, RelationalStructure};

/// `τ` rows of distinct position pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TauPattern {
    rows: Vec<(usize, usize)>,
}

impl TauPattern {
    pub fn new(rows: Vec<(usize, usize)>, arity: usize) -> Result<Self> {
        if rows.is_empty() {
            return input("a pattern needs at least one row");
        }
        for (k, &(p, q)) in rows.iter().enumerate() {
            if p == q {
                return input(format!("pattern row {k} repeats position {p}"));
            }
            if p >= arity || q >= arity {
                return input(format!("pattern row {k} ({p},{q}) exceeds arity {arity}"));
            }
        }
        Ok(TauPattern { rows })
    }

    /// Every row `(0, 1)`: a directed walk in a digraph.
    pub fn directed(tau: usize) -> Self {
        TauPattern {
            rows: vec![(0, 1); tau],
        }
    }

    /// Rows alternate `(0, 1)`, `(1, 0)`, …
    pub fn alternating(tau: usize) -> Self {
        TauPattern {
            rows: (0..tau).map(|i| if i % 2 == 0 { (0, 1) } else { (1, 0) }).collect(),
        }
    }

    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Vertices `a_0..a_τ` and, for each step, the index of the tuple used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaWalk {
    pub vertices: Vec<usize>,
    pub tuples: Vec<usize>,
}

impl LambdaWalk {
    pub fn is_valid(&self, a: &RelationalStructure, pattern: &TauPattern) -> bool {
        let rel = a.relation(0);
        self.vertices.len() == pattern.len() + 1
            && self.tuples.len() == pattern.len()
            && pattern.rows().iter().enumerate().all(|(i, &(p, q))| {
                self.tuples[i] < rel.len() && {
                    let t = &rel.tuples()[self.tuples[i]];
                    t[p] == self.vertices[i] && t[q] == self.vertices[i + 1]
                }
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Aperiodic,
    NotAperiodic,
    UndecidedAtCap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// No pattern exists over fewer than two positions.
    ArityBelowTwo { arity: usize },
    /// No tuple has `vertex` at position `row.0`, so no walk following a
    /// pattern that starts with `row` can leave `vertex`.
    ZeroSliceRow { row: (usize, usize), vertex: usize },
    /// No tuple has `vertex` at position `row.1`.
    ZeroSliceColumn { row: (usize, usize), vertex: usize },
    /// The level set at step `repeated_at` equals the one at `first_seen`,
    /// so the iteration cycles without reaching `{J}`. `pattern` has no walk
    /// from `from` to `to`.
    LevelSetRepeat {
        first_seen: u64,
        repeated_at: u64,
        pattern: TauPattern,
        from: usize,
        to: usize,
    },
    /// Digraph criterion: `M` primitive and `MMᵀ` irreducible.
    Digraph { primitive: bool, mmt_irreducible: bool },
    CapReached { cap: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AperiodicityReport {
    pub status: Status,
    pub aperiodic: bool,
    pub mixing_time: Option<u64>,
    pub upper_bound_used: Option<u64>,
    pub levels_explored: u64,
    pub largest_level: usize,
    pub certificate: Option<Certificate>,
}

impl AperiodicityReport {
    fn negative(certificate: Certificate, levels: u64, largest: usize, cap: Option<u64>) -> Self {
        AperiodicityReport {
            status: Status::NotAperiodic,
            aperiodic: false,
            mixing_time: None,
            upper_bound_used: cap,
            levels_explored: levels,
            largest_level: largest,
            certificate: Some(certificate),
        }
    }
}

/// `n⁴ − 2n³ + 2n²`, the mixing-time bound for aperiodic digraphs.
pub fn digraph_mixing_bound(n: usize) -> u64 {
    let n = n as u64;
    n.pow(4) + 2 * n * n - 2 * n.pow(3)
}

/// Level-set iteration cap used when none is given.
pub fn default_cap(a: &RelationalStructure) -> u64 {
    if a.monic_arity() == Some(2) {
        2 * digraph_mixing_bound(a.domain_size())
    } else {
        1_000_000
    }
}

struct Level {
    mats: Vec<BoolMatrix>,
    /// (index in previous level, slice index) per matrix
    back: Vec<(usize, usize)>,
}

/// Exact mixing time of a monic structure.
pub fn mixing_time_monic(a: &RelationalStructure, cap: Option<u64>) -> Result<AperiodicityReport> {
    let Some(r) = a.monic_arity() else {
        return input("mixing_time_monic needs a monic structure");
    };
    let cap = cap.unwrap_or_else(|| default_cap(a));
    if r < 2 {
        return Ok(AperiodicityReport::negative(Certificate::ArityBelowTwo { arity: r }, 0, 0, Some(cap)));
    }
    let slices = slice_matrices(a)?;
    for (&row, m) in &slices {
        if let Some(v) = m.zero_row() {
            return Ok(AperiodicityReport::negative(
                Certificate::ZeroSliceRow { row, vertex: v },
                0,
                0,
                Some(cap),
            ));
        }
        if let Some(v) = m.zero_column() {
            return Ok(AperiodicityReport::negative(
                Certificate::ZeroSliceColumn { row, vertex: v },
                0,
                0,
                Some(cap),
            ));
        }
    }
    // distinct slice supports, each with one representative row
    let mut distinct: BTreeMap<BoolMatrix, (usize, usize)> = BTreeMap::new();
    for (&row, m) in &slices {
        distinct.entry(m.clone()).or_insert(row);
    }
    let slice_list: Vec<(BoolMatrix, (usize, usize))> = distinct.into_iter().collect();

    let first = Level {
        mats: slice_list.iter().map(|(m, _)| m.clone()).collect(),
        back: (0..slice_list.len()).map(|k| (usize::MAX, k)).collect(),
    };
    let mut levels = vec![first];
    let mut seen: HashMap<Vec<BoolMatrix>, u64> = HashMap::new();
    let mut largest = 0;
    let n = a.domain_size();
    let full = BoolMatrix::full(n);
    let mut t: u64 = 1;
    loop {
        let cur = levels.last().unwrap();
        largest = largest.max(cur.mats.len());
        if cur.mats.len() == 1 && cur.mats[0] == full {
            return Ok(AperiodicityReport {
                status: Status::Aperiodic,
                aperiodic: true,
                mixing_time: Some(t),
                upper_bound_used: Some(cap),
                levels_explored: t,
                largest_level: largest,
                certificate: None,
            });
        }
        if let Some(&t0) = seen.get(&cur.mats) {
            let (pattern, from, to) = witness(&levels, &slice_list, &full);
            return Ok(AperiodicityReport::negative(
                Certificate::LevelSetRepeat {
                    first_seen: t0,
                    repeated_at: t,
                    pattern,
                    from,
                    to,
                },
                t,
                largest,
                Some(cap),
            ));
        }
        if t >= cap {
            return Ok(AperiodicityReport {
                status: Status::UndecidedAtCap,
                aperiodic: false,
                mixing_time: None,
                upper_bound_used: Some(cap),
                levels_explored: t,
                largest_level: largest,
                certificate: Some(Certificate::CapReached { cap }),
            });
        }
        seen.insert(cur.mats.clone(), t);
        let mut next: BTreeMap<BoolMatrix, (usize, usize)> = BTreeMap::new();
        for (i, s) in cur.mats.iter().enumerate() {
            for (k, (m, _)) in slice_list.iter().enumerate() {
                next.entry(s.mul(m)).or_insert((i, k));
            }
        }
        let (mats, back) = next.into_iter().unzip();
        levels.push(Level { mats, back });
        t += 1;
    }
}

/// A pattern of the final level length with a missing walk.
fn witness(
    levels: &[Level],
    slices: &[(BoolMatrix, (usize, usize))],
    full: &BoolMatrix,
) -> (TauPattern, usize, usize) {
    let last = levels.last().unwrap();
    let idx = last.mats.iter().position(|m| m != full).expect("level is not {J}");
    let m = &last.mats[idx];
    let n = m.n();
    let (from, to) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !m.get(i, j))
        .unwrap();
    let mut rows = Vec::with_capacity(levels.len());
    let mut i = idx;
    for level in levels.iter().rev() {
        let (p, k) = level.back[i];
        rows.push(slices[k].1);
        i = p;
    }
    rows.reverse();
    (TauPattern { rows }, from, to)
}

/// Aperiodicity of an arbitrary structure, via its monic product.
pub fn is_aperiodic(a: &RelationalStructure) -> Result<AperiodicityReport> {
    mixing_time_monic(&monic_product(a), None)
}

/// Digraph criterion: `M` primitive and `MMᵀ` irreducible. When it holds the
/// exact mixing time is computed too and checked against the digraph bound.
pub fn digraph_aperiodicity(m: &BoolMatrix) -> Result<AperiodicityReport> {
    let n = m.n();
    if n == 0 {
        return input("empty matrix");
    }
    let primitive = is_primitive(m);
    let mmt_irreducible = is_irreducible(&m.mul(&m.transpose()));
    let cert = Certificate::Digraph {
        primitive,
        mmt_irreducible,
    };
    let bound = digraph_mixing_bound(n);
    if !(primitive && mmt_irreducible) {
        return Ok(AperiodicityReport::negative(cert, 0, 0, Some(bound)));
    }
    let structure = matrix_digraph(m)?;
    let mut rep = mixing_time_monic(&structure, None)?;
    let tau = rep.mixing_time.expect("criterion and level sets disagree");
    assert!(tau <= bound, "mixing time {tau} exceeds {bound}");
    rep.upper_bound_used = Some(bound);
    rep.certificate = Some(cert);
    Ok(rep)
}

/// The digraph whose adjacency matrix is `m`.
pub fn matrix_digraph(m: &BoolMatrix) -> Result<RelationalStructure> {
    let n = m.n();
    let edges = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| m.get(i, j));
    crate::structures::digraph(n, edges.collect::<Vec<_>>())
}

/// Least `t <= max_t` such that every pair is joined by both a directed and
/// an alternating walk of length `t`.
pub fn directed_alternating_length(m: &BoolMatrix, max_t: u64) -> Option<u64> {
    let mt = m.transpose();
    let mut directed = m.clone();
    let mut alternating = m.clone();
    for t in 1..=max_t {
        if directed.is_full() && alternating.is_full() {
            return Some(t);
        }
        directed = directed.mul(m);
        alternating = alternating.mul(if t % 2 == 0 { m } else { &mt });
    }
    None
}

/// A λ-walk from `from` to `to`, choosing least-index vertices and tuples.
pub fn find_lambda_walk(
    a: &RelationalStructure,
    pattern: &TauPattern,
    from: usize,
    to: usize,
) -> Result<Option<LambdaWalk>> {
    let Some(r) = a.monic_arity() else {
        return input("find_lambda_walk needs a monic structure");
    };
    TauPattern::new(pattern.rows.clone(), r)?;
    let n = a.domain_size();
    if from >= n || to >= n {
        return input(format!("vertex out of range for domain size {n}"));
    }
    let tuples = a.relation(0).tuples();
    let mut by_pos: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; r];
    for (k, t) in tuples.iter().enumerate() {
        for (p, &v) in t.iter().enumerate() {
            by_pos[p][v].push(k);
        }
    }
    let tau = pattern.len();
    let mut back: Vec<Vec<Option<(usize, usize)>>> = Vec::with_capacity(tau);
    let mut reach = vec![false; n];
    reach[from] = true;
    for &(p, q) in pattern.rows() {
        let mut step = vec![None; n];
        for u in 0..n {
            if !reach[u] {
                continue;
            }
            for &k in &by_pos[p][u] {
                let v = tuples[k][q];
                if step[v].is_none() {
                    step[v] = Some((u, k));
                }
            }
        }
        reach = step.iter().map(Option::is_some).collect();
        back.push(step);
    }
    if !reach[to] {
        return Ok(None);
    }
    let mut vertices = vec![to];
    let mut used = Vec::with_capacity(tau);
    let mut v = to;
    for step in back.iter().rev() {
        let (u, k) = step[v].unwrap();
        used.push(k);
        vertices.push(u);
        v = u;
    }
    vertices.reverse();
    used.reverse();
    Ok(Some(LambdaWalk {
        vertices,
        tuples: used,
    }))
}
