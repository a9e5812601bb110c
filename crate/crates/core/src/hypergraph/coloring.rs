//! Exact weak colourings (no monochromatic edge) and independence numbers.

use crate::error::{Error, Result};

use super::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColoringLimits {
    /// Search nodes allowed per query before giving up with `Error::Budget`.
    pub node_budget: u64,
}

impl Default for ColoringLimits {
    fn default() -> Self {
        ColoringLimits {
            node_budget: 50_000_000,
        }
    }
}

fn over_budget(what: &'static str, used: u64, budget: u64) -> Error {
    Error::Budget {
        what,
        needed: used as u128,
        budget: budget as u128,
    }
}

/// Vertices whose removal order leaves the `k`-core: repeatedly strips a
/// vertex lying in fewer than `k` remaining edges. Such a vertex can always be
/// coloured last, since each edge forbids at most one colour.
fn peel(h: &Hypergraph, k: usize) -> (Vec<usize>, Vec<bool>, Vec<bool>) {
    let mut alive_e = vec![true; h.m()];
    let mut alive_v = vec![true; h.n()];
    let mut deg: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    let mut stack: Vec<usize> = (0..h.n()).filter(|&v| deg[v] < k).collect();
    let mut queued = vec![false; h.n()];
    for &v in &stack {
        queued[v] = true;
    }
    let mut order = Vec::new();
    while let Some(v) = stack.pop() {
        alive_v[v] = false;
        order.push(v);
        for &e in h.incident(v) {
            if !alive_e[e] {
                continue;
            }
            alive_e[e] = false;
            for &u in h.edge(e) {
                deg[u] -= 1;
                if deg[u] < k && !queued[u] {
                    queued[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    (order, alive_v, alive_e)
}

struct ColorSearch<'a> {
    h: &'a Hypergraph,
    k: usize,
    r: usize,
    active_e: &'a [bool],
    color: Vec<Option<usize>>,
    /// `counts[e * k + c]`: vertices of edge `e` coloured `c`.
    counts: Vec<usize>,
    todo: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl ColorSearch<'_> {
    fn forbidden(&self, v: usize) -> u64 {
        let mut mask = 0u64;
        for &e in self.h.incident(v) {
            if !self.active_e[e] {
                continue;
            }
            for c in 0..self.k {
                if self.counts[e * self.k + c] == self.r - 1 {
                    mask |= 1 << c;
                }
            }
        }
        mask
    }

    fn assign(&mut self, v: usize, c: Option<usize>) {
        let (old, add) = match c {
            Some(c) => (c, true),
            None => (self.color[v].unwrap(), false),
        };
        for &e in self.h.incident(v) {
            if self.active_e[e] {
                let slot = &mut self.counts[e * self.k + old];
                if add {
                    *slot += 1;
                } else {
                    *slot -= 1;
                }
            }
        }
        self.color[v] = c;
    }

    fn solve(&mut self, used: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(over_budget("k-colouring search", self.nodes, self.budget));
        }
        // most constrained uncoloured vertex, ties to higher degree
        let mut pick: Option<(usize, u32, usize, u64)> = None;
        for &v in &self.todo {
            if self.color[v].is_some() {
                continue;
            }
            let f = self.forbidden(v);
            let sat = f.count_ones();
            if sat as usize >= self.k {
                return Ok(false);
            }
            let deg = self.h.degree(v);
            let better = match pick {
                None => true,
                Some((_, s, d, _)) => (sat, deg) > (s, d),
            };
            if better {
                pick = Some((v, sat, deg, f));
            }
        }
        let Some((v, _, _, forbidden)) = pick else {
            return Ok(true);
        };
        // colours beyond the first unused one are interchangeable
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            self.assign(v, Some(c));
            if self.solve(used.max(c + 1))? {
                return Ok(true);
            }
            self.assign(v, None);
        }
        Ok(false)
    }
}

/// A weak `k`-colouring (every edge meets two colour classes), or `None`.
pub fn k_coloring(h: &Hypergraph, k: usize, limits: ColoringLimits) -> Result<Option<Vec<usize>>> {
    if h.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    if k > 64 {
        return Err(Error::TooLarge {
            what: "k-colouring",
            detail: format!("k = {k} exceeds 64 colours"),
        });
    }
    if k == 1 {
        return Ok((h.m() == 0).then(|| vec![0; h.n()]));
    }
    let (order, core_v, core_e) = peel(h, k);
    let mut s = ColorSearch {
        h,
        k,
        r: h.r(),
        active_e: &core_e,
        color: vec![None; h.n()],
        counts: vec![0; h.m() * k],
        todo: (0..h.n()).filter(|&v| core_v[v]).collect(),
        nodes: 0,
        budget: limits.node_budget,
    };
    if !s.solve(0)? {
        return Ok(None);
    }
    let mut color = s.color;
    for &v in order.iter().rev() {
        let mut forbidden = 0u64;
        for &e in h.incident(v) {
            let others: Vec<Option<usize>> =
                h.edge(e).iter().filter(|&&u| u != v).map(|&u| color[u]).collect();
            if let Some(Some(c)) = others.first() {
                if others.iter().all(|o| *o == Some(*c)) {
                    forbidden |= 1 << c;
                }
            }
        }
        let c = (0..k).find(|&c| forbidden >> c & 1 == 0).expect("peeled vertex has a free colour");
        color[v] = Some(c);
    }
    Ok(Some(color.into_iter().map(Option::unwrap).collect()))
}

/// Exact weak chromatic number (1 for edgeless, 0 for the empty vertex set).
pub fn chromatic_number(h: &Hypergraph, limits: ColoringLimits) -> Result<usize> {
    if h.n() == 0 {
        return Ok(0);
    }
    if h.m() == 0 {
        return Ok(1);
    }
    let mut k = 2;
    loop {
        if k_coloring(h, k, limits)?.is_some() {
            return Ok(k);
        }
        k += 1;
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Cand,
    In,
    Out,
}

struct IndSearch<'a> {
    h: &'a Hypergraph,
    state: Vec<Slot>,
    ins: Vec<usize>,
    outs: Vec<usize>,
    trail: Vec<usize>,
    size: usize,
    cands: usize,
    best: usize,
    nodes: u64,
    budget: u64,
}

impl IndSearch<'_> {
    fn set(&mut self, v: usize, s: Slot) {
        debug_assert!(self.state[v] == Slot::Cand);
        self.state[v] = s;
        self.cands -= 1;
        for &e in self.h.incident(v) {
            match s {
                Slot::In => self.ins[e] += 1,
                Slot::Out => self.outs[e] += 1,
                Slot::Cand => unreachable!(),
            }
        }
        if s == Slot::In {
            self.size += 1;
        }
        self.trail.push(v);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            let s = self.state[v];
            for &e in self.h.incident(v) {
                match s {
                    Slot::In => self.ins[e] -= 1,
                    Slot::Out => self.outs[e] -= 1,
                    Slot::Cand => unreachable!(),
                }
            }
            if s == Slot::In {
                self.size -= 1;
            }
            self.state[v] = Slot::Cand;
            self.cands += 1;
        }
    }

    fn live_degree(&self, v: usize) -> usize {
        self.h.incident(v).iter().filter(|&&e| self.outs[e] == 0).count()
    }

    /// Includes `v` and excludes every candidate that would complete an edge.
    fn include(&mut self, v: usize) {
        self.set(v, Slot::In);
        let r = self.h.r();
        for &e in self.h.incident(v) {
            if self.outs[e] == 0 && self.ins[e] == r - 1 {
                let u = *self.h.edge(e).iter().find(|&&u| self.state[u] == Slot::Cand).unwrap();
                self.set(u, Slot::Out);
            }
        }
    }

    fn search(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(over_budget("independence search", self.nodes, self.budget));
        }
        if self.size + self.cands <= self.best {
            return Ok(());
        }
        let mut pick = None;
        let mut top = 0;
        for v in 0..self.h.n() {
            if self.state[v] == Slot::Cand {
                let d = self.live_degree(v);
                if d > top {
                    top = d;
                    pick = Some(v);
                }
            }
        }
        let Some(v) = pick else {
            // every remaining candidate is unconstrained
            self.best = self.size + self.cands;
            return Ok(());
        };
        let mark = self.trail.len();
        self.include(v);
        self.search()?;
        self.undo_to(mark);
        self.set(v, Slot::Out);
        self.search()?;
        self.undo_to(mark);
        Ok(())
    }
}

/// Size of a largest vertex set containing no whole edge.
pub fn independence_number(h: &Hypergraph, limits: ColoringLimits) -> Result<usize> {
    let mut s = IndSearch {
        h,
        state: vec![Slot::Cand; h.n()],
        ins: vec![0; h.m()],
        outs: vec![0; h.m()],
        trail: Vec::new(),
        size: 0,
        cands: h.n(),
        best: 0,
        nodes: 0,
        budget: limits.node_budget,
    };
    s.search()?;
    Ok(s.best)
}
