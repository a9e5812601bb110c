use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

use super::Hypergraph;

/// Length of the shortest Berge cycle, `None` when the hypergraph is a
/// (Berge-)forest. Half the girth of the vertex/edge incidence graph.
pub fn girth(h: &Hypergraph) -> Option<usize> {
    // two edges sharing two vertices already give a 2-cycle
    let mut pairs = HashSet::new();
    for e in h.edges() {
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if !pairs.insert((e[i], e[j])) {
                    return Some(2);
                }
            }
        }
    }
    // incidence graph: vertices 0..n, edge nodes n..n+m
    let n = h.n();
    let total = n + h.m();
    let neighbours = |x: usize| -> &[usize] {
        if x < n {
            h.incident(x)
        } else {
            h.edge(x - n)
        }
    };
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; total];
    let mut parent = vec![usize::MAX; total];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if h.degree(root) < 2 {
            continue;
        }
        let mut touched = vec![root];
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y0 in neighbours(x) {
                let y = if x < n { y0 + n } else { y0 };
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
        for x in touched {
            dist[x] = usize::MAX;
            parent[x] = usize::MAX;
        }
    }
    (best != usize::MAX).then_some(best / 2)
}

/// Edge sets of all Berge cycles of length at most `max_len` (each set listed
/// once, sorted). Fails with `TooLarge` when more than `limit` are found.
pub fn berge_cycles(h: &Hypergraph, max_len: usize, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut found: HashSet<Vec<usize>> = HashSet::new();
    if max_len < 2 {
        return Ok(Vec::new());
    }
    struct Walk<'a> {
        h: &'a Hypergraph,
        max_len: usize,
        limit: usize,
        start_vertex: usize,
        first_edge: usize,
        edges: Vec<usize>,
        used_v: Vec<bool>,
        used_e: Vec<bool>,
    }
    impl Walk<'_> {
        fn extend(&mut self, at: usize, found: &mut HashSet<Vec<usize>>) -> Result<()> {
            for &e in self.h.incident(at) {
                if e <= self.first_edge || self.used_e[e] {
                    continue;
                }
                if self.h.edge(e).contains(&self.start_vertex) {
                    let mut cyc = self.edges.clone();
                    cyc.push(e);
                    cyc.sort_unstable();
                    found.insert(cyc);
                    if found.len() > self.limit {
                        return Err(Error::TooLarge {
                            what: "short-cycle enumeration",
                            detail: format!("more than {} cycles", self.limit),
                        });
                    }
                }
                if self.edges.len() + 1 < self.max_len {
                    self.used_e[e] = true;
                    self.edges.push(e);
                    for &v in self.h.edge(e) {
                        if !self.used_v[v] {
                            self.used_v[v] = true;
                            self.extend(v, found)?;
                            self.used_v[v] = false;
                        }
                    }
                    self.edges.pop();
                    self.used_e[e] = false;
                }
            }
            Ok(())
        }
    }
    for e0 in 0..h.m() {
        for &v0 in h.edge(e0) {
            for &v1 in h.edge(e0) {
                if v1 == v0 {
                    continue;
                }
                let mut w = Walk {
                    h,
                    max_len,
                    limit,
                    start_vertex: v0,
                    first_edge: e0,
                    edges: vec![e0],
                    used_v: vec![false; h.n()],
                    used_e: vec![false; h.m()],
                };
                w.used_v[v0] = true;
                w.used_v[v1] = true;
                w.used_e[e0] = true;
                w.extend(v1, &mut found)?;
            }
        }
    }
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort();
    Ok(out)
}
