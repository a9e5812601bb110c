//! Slow, direct reimplementations used to cross-check the library.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use pcsp_width::hypergraph::Hypergraph;
use pcsp_width::structures::RelationalStructure;

/// A partial map as `(variable, value)` pairs sorted by variable.
pub type Map = Vec<(usize, usize)>;

pub struct Homs<'a> {
    x: &'a RelationalStructure,
    targets: Vec<HashSet<Vec<usize>>>,
}

impl<'a> Homs<'a> {
    pub fn new(x: &'a RelationalStructure, a: &RelationalStructure) -> Self {
        let targets = a.relations().iter().map(|r| r.tuples().iter().cloned().collect()).collect();
        Homs { x, targets }
    }

    /// Every tuple of `x` inside the domain of `f` lands in `a`.
    pub fn respects(&self, f: &[(usize, usize)]) -> bool {
        let get = |v: usize| f.iter().find(|p| p.0 == v).map(|p| p.1);
        self.x.relations().iter().zip(&self.targets).all(|(rel, target)| {
            rel.tuples().iter().all(|t| match t.iter().map(|&v| get(v)).collect::<Option<Vec<_>>>() {
                Some(img) => target.contains(&img),
                None => true,
            })
        })
    }

    pub fn respects_total(&self, f: &[usize]) -> bool {
        self.x
            .relations()
            .iter()
            .zip(&self.targets)
            .all(|(rel, target)| rel.tuples().iter().all(|t| target.contains(&t.iter().map(|&v| f[v]).collect::<Vec<_>>())))
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All maps `0..len -> 0..d` as value vectors.
pub fn assignments(len: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..d).map(move |b| {
                    let mut w = v.clone();
                    w.push(b);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn brute_hom(x: &RelationalStructure, a: &RelationalStructure) -> bool {
    let homs = Homs::new(x, a);
    assignments(x.domain_size(), a.domain_size()).iter().any(|f| homs.respects_total(f))
}

/// Greatest family of partial homomorphisms with at most `k` points closed
/// under restriction and, below `k` points, under one-point extension.
/// Recomputed by whole passes until nothing changes.
pub fn lc_family(x: &RelationalStructure, a: &RelationalStructure, k: usize) -> HashSet<Map> {
    let (n, d) = (x.domain_size(), a.domain_size());
    let homs = Homs::new(x, a);
    let mut fam = HashSet::new();
    for size in 0..=k.min(n) {
        for dom in subsets(n, size) {
            for vals in assignments(size, d) {
                let f: Map = dom.iter().copied().zip(vals).collect();
                if homs.respects(&f) {
                    fam.insert(f);
                }
            }
        }
    }
    loop {
        let snapshot: Vec<Map> = fam.iter().cloned().collect();
        let mut changed = false;
        for f in snapshot {
            let restr = (0..f.len()).all(|i| {
                let mut g = f.clone();
                g.remove(i);
                fam.contains(&g)
            });
            let ext = f.len() >= k
                || (0..n).filter(|y| f.iter().all(|p| p.0 != *y)).all(|y| {
                    (0..d).any(|b| {
                        let mut g = f.clone();
                        g.push((y, b));
                        g.sort_unstable();
                        fam.contains(&g)
                    })
                });
            if !(restr && ext) {
                fam.remove(&f);
                changed = true;
            }
        }
        if !changed {
            return fam;
        }
    }
}

pub fn lc_oracle(x: &RelationalStructure, a: &RelationalStructure, k: usize) -> bool {
    lc_family(x, a, k).contains(&Vec::new())
}

/// Adjacency lists of the graph underlying a binary structure or a
/// 2-uniform hypergraph.
pub fn adjacency(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for (u, v) in edges {
        if u != v && !adj[u].contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    adj
}

pub fn graph_adjacency(h: &Hypergraph) -> Vec<Vec<usize>> {
    assert_eq!(h.r(), 2);
    adjacency(h.n(), h.edges().iter().map(|e| (e[0], e[1])))
}

/// A proper `k`-colouring by DSATUR-ordered backtracking.
pub fn colouring(adj: &[Vec<usize>], k: usize) -> Option<Vec<usize>> {
    fn go(adj: &[Vec<usize>], k: usize, col: &mut Vec<Option<usize>>, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let mut best = None;
        let mut best_key = (usize::MAX, 0);
        for v in 0..adj.len() {
            if col[v].is_some() {
                continue;
            }
            let used: HashSet<usize> = adj[v].iter().filter_map(|&u| col[u]).collect();
            let key = (k.saturating_sub(used.len()), usize::MAX - adj[v].len());
            if key < best_key {
                best_key = key;
                best = Some(v);
            }
        }
        let v = best.unwrap();
        let top = col.iter().flatten().max().map_or(0, |&c| c + 1);
        for c in 0..k.min(top + 1) {
            if adj[v].iter().all(|&u| col[u] != Some(c)) {
                col[v] = Some(c);
                if go(adj, k, col, left - 1) {
                    return true;
                }
                col[v] = None;
            }
        }
        false
    }
    let mut col = vec![None; adj.len()];
    go(adj, k, &mut col, adj.len()).then(|| col.into_iter().map(Option::unwrap).collect())
}

pub fn has_triangle(adj: &[Vec<usize>]) -> bool {
    (0..adj.len()).any(|u| adj[u].iter().any(|&v| adj[v].iter().any(|w| adj[u].contains(w))))
}

/// Least `t <= max_t` such that every pattern of `t` position pairs joins
/// every ordered pair of elements, found by enumerating the patterns.
pub fn mixing_time_by_patterns(a: &RelationalStructure, max_t: usize) -> Option<usize> {
    let r = a.relation(0).arity();
    let n = a.domain_size();
    let rows: Vec<(usize, usize)> = (0..r).flat_map(|p| (0..r).map(move |q| (p, q))).filter(|(p, q)| p != q).collect();
    let step: HashMap<(usize, usize), Vec<Vec<usize>>> = rows
        .iter()
        .map(|&(p, q)| {
            let mut succ = vec![Vec::new(); n];
            for t in a.relation(0).tuples() {
                succ[t[p]].push(t[q]);
            }
            ((p, q), succ)
        })
        .collect();
    'outer: for t in 1..=max_t {
        for pattern in assignments(t, rows.len()) {
            for u in 0..n {
                let mut cur = vec![false; n];
                cur[u] = true;
                for &k in &pattern {
                    let mut next = vec![false; n];
                    for v in (0..n).filter(|&v| cur[v]) {
                        for &w in &step[&rows[k]][v] {
                            next[w] = true;
                        }
                    }
                    cur = next;
                }
                if !cur.iter().all(|&b| b) {
                    continue 'outer;
                }
            }
        }
        return Some(t);
    }
    None
}

/// Row-major boolean matrices on at most 8 vertices as bitmasks.
pub fn mat_mul(a: u64, b: u64, n: usize) -> u64 {
    let mut c = 0;
    for i in 0..n {
        for j in 0..n {
            if (0..n).any(|k| a >> (i * n + k) & 1 == 1 && b >> (k * n + j) & 1 == 1) {
                c |= 1 << (i * n + j);
            }
        }
    }
    c
}

pub fn mat_transpose(a: u64, n: usize) -> u64 {
    let mut c = 0;
    for i in 0..n {
        for j in 0..n {
            if a >> (i * n + j) & 1 == 1 {
                c |= 1 << (j * n + i);
            }
        }
    }
    c
}

pub fn full_mask(n: usize) -> u64 {
    if n * n == 64 {
        u64::MAX
    } else {
        (1 << (n * n)) - 1
    }
}

/// Least `t` with `M^t = J`, following the power sequence until it cycles.
pub fn first_full_power(m: u64, n: usize) -> Option<u64> {
    let mut seen = HashSet::new();
    let mut p = m;
    let mut t = 1;
    while seen.insert(p) {
        if p == full_mask(n) {
            return Some(t);
        }
        p = mat_mul(p, m, n);
        t += 1;
    }
    None
}

/// Largest number of pairwise edge-disjoint `tau`-fibers, by exhaustive
/// search over link subsets.
pub fn brute_fibrosity(h: &Hypergraph, tau: usize) -> usize {
    let deg = |v: usize| h.edges().iter().filter(|e| e.contains(&v)).count();
    let links: Vec<usize> = (0..h.m())
        .filter(|&e| {
            let ds: Vec<usize> = h.edge(e).iter().map(|&v| deg(v)).collect();
            ds.iter().filter(|&&d| d == 2).count() == 2 && ds.iter().all(|&d| d == 1 || d == 2)
        })
        .collect();
    let adjacent = |e: usize, f: usize| h.edge(e).iter().any(|v| h.edge(f).contains(v));
    let chainable = |set: &[usize]| {
        fn perms(rest: &mut Vec<usize>, last: Option<usize>, ok: &dyn Fn(usize, usize) -> bool) -> bool {
            if rest.is_empty() {
                return true;
            }
            for i in 0..rest.len() {
                let e = rest[i];
                if last.is_none_or(|l| ok(l, e)) {
                    rest.remove(i);
                    let found = perms(rest, Some(e), ok);
                    rest.insert(i, e);
                    if found {
                        return true;
                    }
                }
            }
            false
        }
        perms(&mut set.to_vec(), None, &adjacent)
    };
    let fibers: Vec<u32> = subsets(links.len(), tau)
        .into_iter()
        .map(|s| s.iter().map(|&i| links[i]).collect::<Vec<_>>())
        .filter(|s| chainable(s))
        .map(|s| s.iter().fold(0u32, |acc, &e| acc | 1 << e))
        .collect();
    fn pack(fibers: &[u32], used: u32) -> usize {
        match fibers.split_first() {
            None => 0,
            Some((&f, rest)) => {
                let skip = pack(rest, used);
                if f & used == 0 {
                    skip.max(1 + pack(rest, used | f))
                } else {
                    skip
                }
            }
        }
    }
    pack(&fibers, 0)
}
