//! `r`-uniform hypergraphs and the exact analytics used on instances:
//! links, pendent edges, maximal fibers, τ-fibrosity, joints, Berge girth,
//! degree-reciprocal sums, sparsity predicates and colourings.

mod coloring;
mod flow;
mod girth;
mod sparsity;

use std::collections::HashSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{input, Result};
use crate::rational::{self, Rational};

pub use coloring::{chromatic_number, independence_number, k_coloring, ColoringLimits};
pub use girth::{berge_cycles, girth};
pub use sparsity::{
    connected_edge_subsets, density_violation, hereditary_violation, is_beta_sparse,
    is_hereditarily_beta_sparse, is_threshold_sparse, is_vertex_threshold_sparse, SparsityMode,
    SparsityVerdict, DEFAULT_SUBSET_BUDGET,
};

/// `r`-uniform hypergraph on `0..n`. Edges are stored sorted, and the edge
/// list itself is kept in lexicographic order so equal hypergraphs compare
/// equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, r: usize, mut edges: Vec<Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return input(format!("uniformity must be >= 2, got {r}"));
        }
        for (i, e) in edges.iter_mut().enumerate() {
            if e.len() != r {
                return input(format!("edge #{i} has {} vertices, expected {r}", e.len()));
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return input(format!("edge #{i} {e:?} repeats a vertex"));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return input(format!("edge #{i}: vertex {v} out of range for n = {n}"));
            }
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return input(format!("duplicate edge {:?}", w[0]));
        }
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        Ok(Hypergraph {
            n,
            r,
            edges,
            incidence,
        })
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Hypergraph::new(n, r, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    /// Edge indices incident to `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn edge_index(&self, e: &[usize]) -> Option<usize> {
        let mut e = e.to_vec();
        e.sort_unstable();
        self.edges.binary_search(&e).ok()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Subhypergraph induced by `keep`, re-indexed in ascending order; returns
    /// the new-to-old vertex map as well.
    pub fn induced(&self, keep: &[usize]) -> Result<(Hypergraph, Vec<usize>)> {
        let mut old = keep.to_vec();
        old.sort_unstable();
        old.dedup();
        if let Some(&v) = old.iter().find(|&&v| v >= self.n) {
            return input(format!("vertex {v} out of range"));
        }
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| new_of[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| new_of[v]).collect())
            .collect();
        Ok((Hypergraph::new(old.len(), self.r, edges)?, old))
    }

    /// Subhypergraph with the given edges on the vertices they cover.
    pub fn edge_induced(&self, edge_ids: &[usize]) -> Result<(Hypergraph, Vec<usize>)> {
        let mut verts: Vec<usize> = edge_ids.iter().flat_map(|&e| self.edges[e].iter().copied()).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            new_of[v] = i;
        }
        let edges = edge_ids
            .iter()
            .map(|&e| self.edges[e].iter().map(|&v| new_of[v]).collect())
            .collect();
        Ok((Hypergraph::new(verts.len(), self.r, edges)?, verts))
    }

    /// Drops isolated vertices.
    pub fn without_isolated(&self) -> Result<(Hypergraph, Vec<usize>)> {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        self.induced(&keep)
    }

    /// Disjoint union, `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.r != other.r {
            return input("disjoint union of hypergraphs with different uniformity");
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e.iter().map(|&v| v + self.n).collect()));
        Hypergraph::new(self.n + other.n, self.r, edges)
    }

    /// Edges sharing a vertex with edge `e` (excluding `e`), ascending.
    pub fn adjacent_edges(&self, e: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.edges[e]
            .iter()
            .flat_map(|&v| self.incidence[v].iter().copied())
            .filter(|&f| f != e)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Graph (`r = 2`) convenience constructor.
    pub fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Hypergraph::new(n, 2, edges.iter().map(|&(u, v)| vec![u, v]).collect())
    }
}

/// Edges where exactly two vertices have degree 2 and the rest degree 1.
pub fn links(h: &Hypergraph) -> Vec<usize> {
    (0..h.m()).filter(|&e| is_link(h, e)).collect()
}

pub fn is_link(h: &Hypergraph, e: usize) -> bool {
    let mut twos = 0;
    for &v in h.edge(e) {
        match h.degree(v) {
            1 => {}
            2 => twos += 1,
            _ => return false,
        }
    }
    twos == 2
}

/// Edges with at most one vertex of degree at least 2.
pub fn pendent_edges(h: &Hypergraph) -> Vec<usize> {
    (0..h.m()).filter(|&e| is_pendent(h, e)).collect()
}

pub fn is_pendent(h: &Hypergraph, e: usize) -> bool {
    h.edge(e).iter().filter(|&&v| h.degree(v) >= 2).count() <= 1
}

/// A maximal fiber as a chain of link indices, consecutive links adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub edges: Vec<usize>,
    pub degenerate: bool,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberDecomposition {
    pub links: Vec<usize>,
    pub maximal_fibers: Vec<Fiber>,
    pub pendent_edges: Vec<usize>,
}

impl FiberDecomposition {
    pub fn fbr_max(&self) -> usize {
        self.maximal_fibers.len()
    }

    /// `Σ ⌊|f| / τ⌋` over maximal fibers.
    pub fn tau_fibrosity(&self, tau: usize) -> usize {
        assert!(tau >= 1, "tau must be positive");
        self.maximal_fibers.iter().map(|f| f.len() / tau).sum()
    }

    /// Mutually disjoint τ-fibers realising the fibrosity: consecutive arcs
    /// cut from each maximal fiber.
    pub fn disjoint_tau_fibers(&self, tau: usize) -> Vec<Vec<usize>> {
        self.maximal_fibers
            .iter()
            .flat_map(|f| f.edges.chunks_exact(tau).map(<[usize]>::to_vec))
            .collect()
    }
}

/// For each link, the (shared vertex, neighbouring link) pairs through its
/// degree-2 vertices.
fn link_neighbours(h: &Hypergraph, is_l: &[bool]) -> Vec<Vec<(usize, usize)>> {
    let mut nb = vec![Vec::new(); h.m()];
    for e in 0..h.m() {
        if !is_l[e] {
            continue;
        }
        for &v in h.edge(e) {
            if h.degree(v) == 2 {
                let other = h.incident(v).iter().copied().find(|&f| f != e).unwrap();
                if is_l[other] {
                    nb[e].push((v, other));
                }
            }
        }
        nb[e].sort_unstable_by_key(|&(v, f)| (f, v));
    }
    nb
}

/// Groups links into maximal fibers. Open chains start at their least-index
/// end link; closed chains start at their least-index link and proceed
/// towards its least-index neighbour.
pub fn fiber_decomposition(h: &Hypergraph) -> FiberDecomposition {
    let is_l: Vec<bool> = (0..h.m()).map(|e| is_link(h, e)).collect();
    let nb = link_neighbours(h, &is_l);
    let links: Vec<usize> = (0..h.m()).filter(|&e| is_l[e]).collect();
    let mut seen = vec![false; h.m()];
    let mut fibers = Vec::new();
    for &start in &links {
        if seen[start] {
            continue;
        }
        // collect the component
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            for &(_, f) in &nb[comp[i]] {
                if !seen[f] {
                    seen[f] = true;
                    comp.push(f);
                }
            }
            i += 1;
        }
        let closed = comp.iter().all(|&e| nb[e].len() == 2);
        let first = if closed {
            *comp.iter().min().unwrap()
        } else {
            *comp.iter().filter(|&&e| nb[e].len() < 2).min().unwrap()
        };
        let mut chain = vec![first];
        // the vertex we arrived through; for the first link pick the side
        // not leading to the first chosen neighbour
        let mut incoming = if closed { nb[first][1].0 } else { usize::MAX };
        let mut cur = first;
        loop {
            let next = nb[cur].iter().find(|&&(v, _)| v != incoming).copied();
            match next {
                Some((v, f)) if f != first && chain.len() < comp.len() => {
                    chain.push(f);
                    incoming = v;
                    cur = f;
                }
                _ => break,
            }
        }
        debug_assert_eq!(chain.len(), comp.len());
        fibers.push(Fiber {
            edges: chain,
            degenerate: closed,
        });
    }
    FiberDecomposition {
        links,
        maximal_fibers: fibers,
        pendent_edges: pendent_edges(h),
    }
}

pub fn tau_fibrosity(h: &Hypergraph, tau: usize) -> usize {
    fiber_decomposition(h).tau_fibrosity(tau)
}

/// Checks that `chain` is a fiber: distinct links, consecutive ones adjacent.
pub fn is_fiber_chain(h: &Hypergraph, chain: &[usize]) -> bool {
    let distinct: HashSet<_> = chain.iter().collect();
    distinct.len() == chain.len()
        && chain.iter().all(|&e| e < h.m() && is_link(h, e))
        && chain
            .windows(2)
            .all(|w| h.edge(w[0]).iter().any(|v| h.edge(w[1]).contains(v)))
}

/// `Σ_{v∈e} 1/deg(v)` as an exact rational.
pub fn sdr(h: &Hypergraph, e: usize) -> Rational {
    h.edge(e)
        .iter()
        .map(|&v| Rational::new(BigInt::from(1), BigInt::from(h.degree(v))))
        .sum()
}

/// Sum of `sdr` over all edges, with whether the identity `Σ sdr = n` is
/// guaranteed (no isolated vertices).
pub fn sdr_total(h: &Hypergraph) -> (Rational, bool) {
    let total = (0..h.m()).map(|e| sdr(h, e)).sum();
    (total, h.isolated_vertices().is_empty())
}

/// What a joint belongs to.
#[derive(Clone, Copy, Debug)]
pub enum JointOwner<'a> {
    /// A fiber given as a chain of adjacent links.
    Fiber(&'a [usize]),
    Pendent(usize),
}

/// One or two boundary vertices of a fiber or pendent edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Joint {
    pub vertices: Vec<usize>,
    pub degenerate: bool,
}

/// Joint selection: the maximum-degree vertex of a pendent edge; the two
/// vertices of a non-degenerate fiber touching outside edges; a degree-2
/// vertex of a degenerate fiber. Ties go to the least index. `_seed` is
/// accepted for interface stability; the choice is deterministic.
pub fn joint_of(h: &Hypergraph, owner: JointOwner<'_>, _seed: u64) -> Result<Joint> {
    match owner {
        JointOwner::Pendent(e) => {
            if e >= h.m() || !is_pendent(h, e) {
                return input(format!("edge {e} is not pendent"));
            }
            let v = *h
                .edge(e)
                .iter()
                .max_by(|&&a, &&b| h.degree(a).cmp(&h.degree(b)).then(b.cmp(&a)))
                .unwrap();
            Ok(Joint {
                vertices: vec![v],
                degenerate: false,
            })
        }
        JointOwner::Fiber(chain) => {
            if chain.is_empty() || !is_fiber_chain(h, chain) {
                return input("owner is not a fiber");
            }
            let inside: HashSet<usize> = chain.iter().copied().collect();
            let mut verts: Vec<usize> = chain.iter().flat_map(|&e| h.edge(e).iter().copied()).collect();
            verts.sort_unstable();
            verts.dedup();
            let boundary: Vec<usize> = verts
                .iter()
                .copied()
                .filter(|&v| h.incident(v).iter().any(|f| !inside.contains(f)))
                .collect();
            if boundary.is_empty() {
                let v = verts.iter().copied().find(|&v| h.degree(v) == 2).unwrap();
                Ok(Joint {
                    vertices: vec![v],
                    degenerate: true,
                })
            } else {
                Ok(Joint {
                    vertices: boundary,
                    degenerate: false,
                })
            }
        }
    }
}

/// Exact structural summary of a hypergraph at one τ.
#[derive(Clone, Debug, Serialize)]
pub struct FibrosityReport {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub tau: usize,
    pub fbr_tau: usize,
    pub fbr_max: usize,
    pub pendency: usize,
    pub link_count: usize,
    pub degenerate_fibers: usize,
    /// `None` stands for infinite girth.
    pub girth: Option<usize>,
    #[serde(with = "crate::rational")]
    pub sdr_total: Rational,
    pub sdr_identity_holds: bool,
    pub isolated_vertices: usize,
    pub beta: Option<SparsitySummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SparsitySummary {
    #[serde(with = "crate::rational")]
    pub beta: Rational,
    pub beta_sparse: bool,
    pub hereditarily_beta_sparse: bool,
}

pub fn fibrosity_report(h: &Hypergraph, tau: usize, beta: Option<&Rational>) -> Result<FibrosityReport> {
    if tau == 0 {
        return input("tau must be positive");
    }
    let dec = fiber_decomposition(h);
    let (sdr_total, ok) = sdr_total(h);
    let beta = beta
        .map(|b| -> Result<SparsitySummary> {
            Ok(SparsitySummary {
                beta: b.clone(),
                beta_sparse: is_beta_sparse(h, b)?,
                hereditarily_beta_sparse: is_hereditarily_beta_sparse(h, b)?,
            })
        })
        .transpose()?;
    Ok(FibrosityReport {
        n: h.n(),
        m: h.m(),
        r: h.r(),
        tau,
        fbr_tau: dec.tau_fibrosity(tau),
        fbr_max: dec.fbr_max(),
        pendency: dec.pendent_edges.len(),
        link_count: dec.links.len(),
        degenerate_fibers: dec.maximal_fibers.iter().filter(|f| f.degenerate).count(),
        girth: girth(h),
        sdr_identity_holds: ok && sdr_total == rational::int(h.n() as i64),
        sdr_total,
        isolated_vertices: h.isolated_vertices().len(),
        beta,
    })
}
