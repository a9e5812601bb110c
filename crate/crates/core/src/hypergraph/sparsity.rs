//! Sparsity predicates with exact rational thresholds.
//!
//! A subhypergraph is identified with its edge set `E'` on the vertex set
//! `∪E'`; extra isolated vertices only make the inequalities easier.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::rational::{self, Rational};

use super::flow::{Network, INF};
use super::Hypergraph;

/// How a sparsity verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SparsityMode {
    /// Decided by exhaustive enumeration or an equivalent exact reduction.
    Exact,
    /// True because a stronger property (hereditary sparsity) holds.
    Implied,
    /// Neither route finished within the enumeration budget.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparsityVerdict {
    /// `None` when `mode` is `Unknown`.
    pub holds: Option<bool>,
    pub mode: SparsityMode,
    /// A violating edge set, when one was found.
    pub witness: Option<Vec<usize>>,
}

impl SparsityVerdict {
    fn yes(mode: SparsityMode) -> Self {
        SparsityVerdict {
            holds: Some(true),
            mode,
            witness: None,
        }
    }

    fn no(witness: Vec<usize>) -> Self {
        SparsityVerdict {
            holds: Some(false),
            mode: SparsityMode::Exact,
            witness: Some(witness),
        }
    }

    fn unknown() -> Self {
        SparsityVerdict {
            holds: None,
            mode: SparsityMode::Unknown,
            witness: None,
        }
    }
}

fn check_beta(beta: &Rational) -> Result<()> {
    if *beta <= Rational::one() {
        return input(format!("beta must exceed 1, got {}", rational::format(beta)));
    }
    Ok(())
}

/// `β/(r−1)`, the edge-per-vertex density threshold.
fn density(h: &Hypergraph, beta: &Rational) -> Rational {
    beta / Rational::from_integer(BigInt::from(h.r() - 1))
}

/// `m < β/(r−1) · n`.
pub fn is_beta_sparse(h: &Hypergraph, beta: &Rational) -> Result<bool> {
    check_beta(beta)?;
    let m = Rational::from_integer(BigInt::from(h.m()));
    let n = Rational::from_integer(BigInt::from(h.n()));
    Ok(m < density(h, beta) * n)
}

fn small(x: &BigInt) -> Result<i128> {
    x.to_i64().map(i128::from).ok_or_else(|| Error::TooLarge {
        what: "max-closure capacities",
        detail: format!("threshold component {x} does not fit in 64 bits"),
    })
}

/// Some nonempty edge set `E'` with `|E'| >= ν |∪E'|`, found by max-closure,
/// or `None` if every nonempty edge set has `|E'| < ν |∪E'|`.
///
/// Writing `ν = a/b`, the closure maximises `K(b|E'| − a|∪E'|) + |E'|` with
/// `K = m + 1`; the optimum is positive exactly when some nonempty `E'` has
/// `b|E'| − a|∪E'| >= 0`.
pub fn density_violation(h: &Hypergraph, nu: &Rational) -> Result<Option<Vec<usize>>> {
    let m = h.m();
    if m == 0 {
        return Ok(None);
    }
    let a = small(nu.numer())?;
    let b = small(nu.denom())?;
    let k = m as i128 + 1;
    let edge_w = k * b + 1;
    let vert_w = k * a;
    let n = h.n();
    let (s, t) = (m + n, m + n + 1);
    let mut net = Network::new(m + n + 2);
    for (e, verts) in h.edges().iter().enumerate() {
        net.add_arc(s, e, edge_w);
        for &v in verts {
            net.add_arc(e, m + v, INF);
        }
    }
    for v in 0..n {
        if h.degree(v) > 0 {
            net.add_arc(m + v, t, vert_w);
        }
    }
    let cut = net.max_flow(s, t);
    let best = edge_w * m as i128 - cut;
    if best <= 0 {
        return Ok(None);
    }
    let side = net.source_side(s);
    let chosen: Vec<usize> = (0..m).filter(|&e| side[e]).collect();
    debug_assert!(!chosen.is_empty());
    Ok(Some(chosen))
}

/// A nonempty edge set that is not β-sparse, if any.
pub fn hereditary_violation(h: &Hypergraph, beta: &Rational) -> Result<Option<Vec<usize>>> {
    check_beta(beta)?;
    density_violation(h, &density(h, beta))
}

pub fn is_hereditarily_beta_sparse(h: &Hypergraph, beta: &Rational) -> Result<bool> {
    Ok(hereditary_violation(h, beta)?.is_none())
}

fn covered(h: &Hypergraph, edges: &[usize]) -> usize {
    let mut vs: Vec<usize> = edges.iter().flat_map(|&e| h.edge(e).iter().copied()).collect();
    vs.sort_unstable();
    vs.dedup();
    vs.len()
}

/// Visits every connected edge set with at most `max_edges` edges covering at
/// most `max_vertices` vertices, each exactly once (ESU enumeration on the
/// line graph). The visitor gets the edges and the covered-vertex count and
/// returns `false` to stop early. Returns `Ok(false)` if stopped early and an
/// error when more than `budget` sets would be visited.
pub fn connected_edge_subsets(
    h: &Hypergraph,
    max_edges: usize,
    max_vertices: usize,
    budget: u64,
    mut visit: impl FnMut(&[usize], usize) -> bool,
) -> Result<bool> {
    struct Esu<'a, F> {
        h: &'a Hypergraph,
        adj: Vec<Vec<usize>>,
        max_edges: usize,
        max_vertices: usize,
        budget: u64,
        visited: u64,
        cover: Vec<u32>,
        vcount: Vec<u32>,
        verts: usize,
        sub: Vec<usize>,
        visit: F,
    }
    impl<F: FnMut(&[usize], usize) -> bool> Esu<'_, F> {
        fn push(&mut self, w: usize) {
            self.sub.push(w);
            self.cover[w] += 1;
            for &u in &self.adj[w] {
                self.cover[u] += 1;
            }
            for &v in self.h.edge(w) {
                if self.vcount[v] == 0 {
                    self.verts += 1;
                }
                self.vcount[v] += 1;
            }
        }

        fn pop(&mut self) {
            let w = self.sub.pop().unwrap();
            self.cover[w] -= 1;
            for &u in &self.adj[w] {
                self.cover[u] -= 1;
            }
            for &v in self.h.edge(w) {
                self.vcount[v] -= 1;
                if self.vcount[v] == 0 {
                    self.verts -= 1;
                }
            }
        }

        fn new_vertices(&self, w: usize) -> usize {
            self.h.edge(w).iter().filter(|&&v| self.vcount[v] == 0).count()
        }

        fn extend(&mut self, mut ext: Vec<usize>, root: usize) -> Result<bool> {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::Budget {
                    what: "connected edge-set enumeration",
                    needed: self.visited as u128,
                    budget: self.budget as u128,
                });
            }
            if !(self.visit)(&self.sub, self.verts) {
                return Ok(false);
            }
            if self.sub.len() == self.max_edges {
                return Ok(true);
            }
            while let Some(w) = ext.pop() {
                if self.verts + self.new_vertices(w) > self.max_vertices {
                    continue;
                }
                let mut next = ext.clone();
                for &u in &self.adj[w] {
                    if u > root && self.cover[u] == 0 {
                        next.push(u);
                    }
                }
                self.push(w);
                let go_on = self.extend(next, root)?;
                self.pop();
                if !go_on {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
    if max_edges == 0 || max_vertices < h.r() {
        return Ok(true);
    }
    let adj: Vec<Vec<usize>> = (0..h.m()).map(|e| h.adjacent_edges(e)).collect();
    let mut esu = Esu {
        h,
        adj,
        max_edges,
        max_vertices,
        budget,
        visited: 0,
        cover: vec![0; h.m()],
        vcount: vec![0; h.n()],
        verts: 0,
        sub: Vec::new(),
        visit: &mut visit,
    };
    for root in 0..h.m() {
        let ext: Vec<usize> = esu.adj[root].iter().copied().filter(|&u| u > root).collect();
        esu.push(root);
        let go_on = esu.extend(ext, root)?;
        esu.pop();
        if !go_on {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumeration budget for exact threshold checks beyond the brute-force
/// range.
pub const DEFAULT_SUBSET_BUDGET: u64 = 2_000_000;

/// `(γ, β)`-threshold sparsity: every subhypergraph with at most `γ` edges is
/// β-sparse.
///
/// Exact by brute force over edge subsets when `m <= 20`. Otherwise a
/// max-closure pass settles hereditary sparsity (which implies the property)
/// or yields a violating set; if that set is too large, connected edge sets
/// of size at most `γ` are enumerated within `budget` (every violating set
/// has a violating connected component).
pub fn is_threshold_sparse(
    h: &Hypergraph,
    gamma: &Rational,
    beta: &Rational,
    budget: u64,
) -> Result<SparsityVerdict> {
    check_beta(beta)?;
    if *gamma < Rational::from_integer(0.into()) {
        return input("gamma must be non-negative");
    }
    let cap = rational::floor_u64(gamma).min(h.m() as u64) as usize;
    if cap == 0 {
        return Ok(SparsityVerdict::yes(SparsityMode::Exact));
    }
    let nu = density(h, beta);
    let violates = |m_sub: usize, n_sub: usize| {
        Rational::from_integer(BigInt::from(m_sub)) >= &nu * Rational::from_integer(BigInt::from(n_sub))
    };
    if h.m() <= 20 {
        let m = h.m();
        let mut buf = Vec::with_capacity(m);
        for mask in 1u32..(1u32 << m) {
            if mask.count_ones() as usize > cap {
                continue;
            }
            buf.clear();
            buf.extend((0..m).filter(|&e| mask >> e & 1 == 1));
            if violates(buf.len(), covered(h, &buf)) {
                return Ok(SparsityVerdict::no(buf));
            }
        }
        return Ok(SparsityVerdict::yes(SparsityMode::Exact));
    }
    match density_violation(h, &nu)? {
        None => return Ok(SparsityVerdict::yes(SparsityMode::Implied)),
        Some(w) if w.len() <= cap => return Ok(SparsityVerdict::no(w)),
        Some(_) => {}
    }
    let mut witness = None;
    let res = connected_edge_subsets(h, cap, usize::MAX, budget, |sub, nv| {
        if violates(sub.len(), nv) {
            witness = Some(sub.to_vec());
            false
        } else {
            true
        }
    });
    match res {
        Ok(_) => Ok(match witness {
            Some(mut w) => {
                w.sort_unstable();
                SparsityVerdict::no(w)
            }
            None => SparsityVerdict::yes(SparsityMode::Exact),
        }),
        Err(Error::Budget { .. }) => Ok(SparsityVerdict::unknown()),
        Err(e) => Err(e),
    }
}

/// `(μ, ν)`-vertex-threshold sparsity: every subhypergraph on at most `μ n`
/// vertices has fewer than `ν` edges per vertex. `mu_n` is `⌊μ n⌋`.
pub fn is_vertex_threshold_sparse(
    h: &Hypergraph,
    mu_n: usize,
    nu: &Rational,
    budget: u64,
) -> Result<SparsityVerdict> {
    if mu_n < h.r() || h.m() == 0 {
        return Ok(SparsityVerdict::yes(SparsityMode::Exact));
    }
    let violates = |m_sub: usize, n_sub: usize| {
        Rational::from_integer(BigInt::from(m_sub)) >= nu * Rational::from_integer(BigInt::from(n_sub))
    };
    if h.m() <= 20 {
        let m = h.m();
        let mut buf = Vec::with_capacity(m);
        for mask in 1u32..(1u32 << m) {
            buf.clear();
            buf.extend((0..m).filter(|&e| mask >> e & 1 == 1));
            let nv = covered(h, &buf);
            if nv <= mu_n && violates(buf.len(), nv) {
                return Ok(SparsityVerdict::no(buf));
            }
        }
        return Ok(SparsityVerdict::yes(SparsityMode::Exact));
    }
    match density_violation(h, nu)? {
        None => return Ok(SparsityVerdict::yes(SparsityMode::Implied)),
        Some(w) if covered(h, &w) <= mu_n => return Ok(SparsityVerdict::no(w)),
        Some(_) => {}
    }
    let mut witness = None;
    let res = connected_edge_subsets(h, usize::MAX, mu_n, budget, |sub, nv| {
        if violates(sub.len(), nv) {
            witness = Some(sub.to_vec());
            false
        } else {
            true
        }
    });
    match res {
        Ok(_) => Ok(match witness {
            Some(mut w) => {
                w.sort_unstable();
                SparsityVerdict::no(w)
            }
            None => SparsityVerdict::yes(SparsityMode::Exact),
        }),
        Err(Error::Budget { .. }) => Ok(SparsityVerdict::unknown()),
        Err(e) => Err(e),
    }
}
