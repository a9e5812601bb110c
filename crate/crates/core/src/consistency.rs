//! The κ-level local-consistency algorithm and consistency gaps.
//!
//! Partial maps with domain size at most κ live in a dense index space:
//! level `k` holds `C(n, k) · d^k` slots, addressed by the colex rank of the
//! (sorted) domain and the base-`d` code of the values. A map is alive while
//! it belongs to the family; deletions propagate through a worklist.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::rational::{self, Rational};
use crate::structures::{is_partial_homomorphism, HomSearch, PartialMap, RelationalStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeletionOrder {
    Fifo,
    /// Pops a uniformly random pending deletion; the fixpoint is the same.
    Shuffled(u64),
}

#[derive(Clone, Copy, Debug)]
pub struct LcOptions {
    /// Upper limit on `Σ_{k≤κ} C(n_X, k) · n_A^k`.
    pub budget: u128,
    pub order: DeletionOrder,
}

impl Default for LcOptions {
    fn default() -> Self {
        LcOptions {
            budget: 400_000_000,
            order: DeletionOrder::Fifo,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }
}

#[derive(Clone, Debug)]
struct Space {
    n: usize,
    d: usize,
    kmax: usize,
    binom: Vec<Vec<u64>>,
    pow: Vec<u64>,
    offset: Vec<u64>,
}

impl Space {
    fn new(n: usize, d: usize, kmax: usize, budget: u128) -> Result<Self> {
        let mut binom = vec![vec![0u64; kmax + 1]; n + 1];
        for i in 0..=n {
            binom[i][0] = 1;
            for k in 1..=kmax.min(i) {
                binom[i][k] = binom[i - 1][k - 1].saturating_add(if k < i { binom[i - 1][k] } else { 0 });
            }
        }
        let mut total: u128 = 0;
        let mut offset = Vec::with_capacity(kmax + 2);
        let mut pow = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            offset.push(total as u64);
            let p = (d as u128).pow(k as u32);
            pow.push(p.min(u64::MAX as u128) as u64);
            total += binom[n][k] as u128 * p;
            if total > budget {
                // report the full requirement
                let full: u128 = (k + 1..=kmax).fold(total, |acc, j| {
                    acc.saturating_add(binom[n][j] as u128 * (d as u128).pow(j as u32))
                });
                return Err(Error::Budget {
                    what: "local-consistency partial maps",
                    needed: full,
                    budget,
                });
            }
        }
        offset.push(total as u64);
        Ok(Space {
            n,
            d,
            kmax,
            binom,
            pow,
            offset,
        })
    }

    fn total(&self) -> u64 {
        self.offset[self.kmax + 1]
    }

    fn rank(&self, verts: &[usize]) -> u64 {
        verts.iter().enumerate().map(|(i, &v)| self.binom[v][i + 1]).sum()
    }

    fn unrank(&self, mut rank: u64, k: usize, out: &mut Vec<usize>) {
        out.clear();
        out.resize(k, 0);
        let mut v = self.n;
        for i in (1..=k).rev() {
            v -= 1;
            while self.binom[v][i] > rank {
                v -= 1;
            }
            out[i - 1] = v;
            rank -= self.binom[v][i];
        }
    }

    fn index(&self, verts: &[usize], vals: &[usize]) -> u64 {
        let k = verts.len();
        let code = vals.iter().rev().fold(0u64, |acc, &a| acc * self.d as u64 + a as u64);
        self.offset[k] + self.rank(verts) * self.pow[k] + code
    }

    fn decode(&self, idx: u64, verts: &mut Vec<usize>, vals: &mut Vec<usize>) {
        let k = (0..=self.kmax).rev().find(|&k| self.offset[k] <= idx).unwrap();
        let local = idx - self.offset[k];
        self.unrank(local / self.pow[k], k, verts);
        let mut code = local % self.pow[k];
        vals.clear();
        for _ in 0..k {
            vals.push((code % self.d as u64) as usize);
            code /= self.d as u64;
        }
    }
}

/// Index of `f ∪ {x ↦ a}` for `x ∉ dom(f)`.
fn extended(space: &Space, verts: &[usize], vals: &[usize], x: usize, a: usize, sv: &mut Vec<usize>, sa: &mut Vec<usize>) -> u64 {
    let pos = verts.partition_point(|&v| v < x);
    sv.clear();
    sv.extend_from_slice(&verts[..pos]);
    sv.push(x);
    sv.extend_from_slice(&verts[pos..]);
    sa.clear();
    sa.extend_from_slice(&vals[..pos]);
    sa.push(a);
    sa.extend_from_slice(&vals[pos..]);
    space.index(sv, sa)
}

/// Index of `f` minus its `i`-th domain element.
fn removed(space: &Space, verts: &[usize], vals: &[usize], i: usize, sv: &mut Vec<usize>, sa: &mut Vec<usize>) -> u64 {
    sv.clear();
    sa.clear();
    for j in 0..verts.len() {
        if j != i {
            sv.push(verts[j]);
            sa.push(vals[j]);
        }
    }
    space.index(sv, sa)
}

#[derive(Clone, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: u64) -> Self {
        Bits(vec![0; len.div_ceil(64) as usize])
    }
    fn get(&self, i: u64) -> bool {
        self.0[(i / 64) as usize] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: u64, v: bool) {
        let w = &mut self.0[(i / 64) as usize];
        if v {
            *w |= 1 << (i % 64);
        } else {
            *w &= !(1 << (i % 64));
        }
    }
}

/// The surviving family of a YES run.
#[derive(Clone, Debug)]
pub struct Strategy {
    kappa: usize,
    space: Space,
    alive: Bits,
}

impl Strategy {
    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn len(&self) -> u64 {
        self.alive.0.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Surviving maps per domain size.
    pub fn sizes(&self) -> Vec<u64> {
        (0..=self.space.kmax)
            .map(|k| (self.space.offset[k]..self.space.offset[k + 1]).filter(|&i| self.alive.get(i)).count() as u64)
            .collect()
    }

    pub fn contains(&self, f: &PartialMap) -> bool {
        if f.len() > self.space.kmax {
            return false;
        }
        let verts: Vec<usize> = f.domain().collect();
        let vals: Vec<usize> = f.iter().map(|(_, a)| a).collect();
        if verts.iter().any(|&v| v >= self.space.n) || vals.iter().any(|&a| a >= self.space.d) {
            return false;
        }
        self.alive.get(self.space.index(&verts, &vals))
    }

    pub fn maps(&self) -> impl Iterator<Item = PartialMap> + '_ {
        let mut verts = Vec::new();
        let mut vals = Vec::new();
        (0..self.space.total()).filter(|&i| self.alive.get(i)).map(move |i| {
            self.space.decode(i, &mut verts, &mut vals);
            PartialMap::from_pairs(verts.iter().copied().zip(vals.iter().copied())).unwrap()
        })
    }

    /// Re-checks the strategy laws from scratch over an explicit set of maps:
    /// every member is a partial homomorphism, the family is closed under
    /// restrictions, and members below size κ extend to every vertex.
    pub fn audit(&self, x: &RelationalStructure, a: &RelationalStructure) -> std::result::Result<(), String> {
        let family: HashSet<PartialMap> = self.maps().collect();
        if !family.contains(&PartialMap::new()) {
            return Err("empty map missing".into());
        }
        for f in &family {
            if !is_partial_homomorphism(x, a, f) {
                return Err(format!("{f:?} is not a partial homomorphism"));
            }
            for v in f.domain() {
                let mut g = f.clone();
                g.remove(v);
                if !family.contains(&g) {
                    return Err(format!("restriction of {f:?} dropping {v} missing"));
                }
            }
            if f.len() < self.kappa {
                for v in 0..x.domain_size() {
                    if f.get(v).is_some() {
                        continue;
                    }
                    let ok = (0..a.domain_size()).any(|b| {
                        let mut g = f.clone();
                        g.insert(v, b);
                        family.contains(&g)
                    });
                    if !ok {
                        return Err(format!("{f:?} does not extend to {v}"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct LcResult {
    pub answer: Answer,
    pub kappa: usize,
    /// Size of the index space, `Σ_{k≤κ} C(n, k) d^k`.
    pub maps_considered: u64,
    /// Partial homomorphisms before pruning.
    pub initial_family: u64,
    pub deletions: u64,
    pub surviving: u64,
    pub strategy: Option<Strategy>,
}

#[derive(Serialize)]
pub struct LcSummary {
    pub answer: Answer,
    pub kappa: usize,
    pub maps_considered: u64,
    pub initial_family: u64,
    pub deletions: u64,
    pub surviving: u64,
    pub surviving_by_size: Vec<u64>,
}

impl LcResult {
    pub fn summary(&self) -> LcSummary {
        LcSummary {
            answer: self.answer,
            kappa: self.kappa,
            maps_considered: self.maps_considered,
            initial_family: self.initial_family,
            deletions: self.deletions,
            surviving: self.surviving,
            surviving_by_size: self.strategy.as_ref().map(Strategy::sizes).unwrap_or_default(),
        }
    }
}

pub fn lc(x: &RelationalStructure, a: &RelationalStructure, kappa: usize) -> Result<LcResult> {
    lc_with(x, a, kappa, &LcOptions::default())
}

pub fn lc_with(x: &RelationalStructure, a: &RelationalStructure, kappa: usize, opts: &LcOptions) -> Result<LcResult> {
    if !x.signature().compatible(a.signature()) {
        return input(format!(
            "signatures differ: arities {:?} vs {:?}",
            x.signature().arities(),
            a.signature().arities()
        ));
    }
    let n = x.domain_size();
    let d = a.domain_size();
    let kmax = kappa.min(n);
    let space = Space::new(n, d, kmax, opts.budget)?;
    let mut alive = Bits::new(space.total());

    // tuples of X grouped by their exact vertex set, for sets of size <= kmax
    let mut groups: HashMap<(usize, u64), Vec<(usize, usize)>> = HashMap::new();
    for (ri, rel) in x.relations().iter().enumerate() {
        for (ti, t) in rel.tuples().iter().enumerate() {
            let mut s = t.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() <= kmax {
                groups.entry((s.len(), space.rank(&s))).or_default().push((ri, ti));
            }
        }
    }

    let mut verts = Vec::new();
    let mut vals = Vec::new();
    let (mut sv, mut sa) = (Vec::new(), Vec::new());
    let mut img = Vec::new();
    let mut initial = 0u64;
    for k in 0..=kmax {
        for rank in 0..space.binom[n][k] {
            space.unrank(rank, k, &mut verts);
            let group = groups.get(&(k, rank));
            for code in 0..space.pow[k] {
                let idx = space.offset[k] + rank * space.pow[k] + code;
                let mut c = code;
                vals.clear();
                for _ in 0..k {
                    vals.push((c % d as u64) as usize);
                    c /= d as u64;
                }
                let restrictions_ok = (0..k).all(|i| alive.get(removed(&space, &verts, &vals, i, &mut sv, &mut sa)));
                if !restrictions_ok {
                    continue;
                }
                let tuples_ok = group.is_none_or(|g| {
                    g.iter().all(|&(ri, ti)| {
                        img.clear();
                        for v in &x.relation(ri).tuples()[ti] {
                            img.push(vals[verts.binary_search(v).unwrap()]);
                        }
                        a.relation(ri).contains(&img)
                    })
                });
                if tuples_ok {
                    alive.set(idx, true);
                    initial += 1;
                }
            }
        }
    }

    let mut deletions = 0u64;
    let mut queue: VecDeque<u64> = VecDeque::new();
    let mut kill = |alive: &mut Bits, queue: &mut VecDeque<u64>, idx: u64| {
        if alive.get(idx) {
            alive.set(idx, false);
            queue.push_back(idx);
            deletions += 1;
        }
    };

    // maps below κ that already lack a one-point extension
    for k in 0..kmax {
        for idx in space.offset[k]..space.offset[k + 1] {
            if !alive.get(idx) {
                continue;
            }
            space.decode(idx, &mut verts, &mut vals);
            let stuck = (0..n).filter(|x| verts.binary_search(x).is_err()).any(|x| {
                !(0..d).any(|b| alive.get(extended(&space, &verts, &vals, x, b, &mut sv, &mut sa)))
            });
            if stuck {
                kill(&mut alive, &mut queue, idx);
            }
        }
    }

    let mut rng = match opts.order {
        DeletionOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        DeletionOrder::Fifo => None,
    };
    loop {
        let idx = match rng.as_mut() {
            None => queue.pop_front(),
            Some(r) if !queue.is_empty() => {
                let i = r.gen_range(0..queue.len());
                queue.swap_remove_back(i)
            }
            Some(_) => None,
        };
        let Some(idx) = idx else { break };
        space.decode(idx, &mut verts, &mut vals);
        let k = verts.len();
        if k < kmax {
            for x in 0..n {
                if verts.binary_search(&x).is_ok() {
                    continue;
                }
                for b in 0..d {
                    let e = extended(&space, &verts, &vals, x, b, &mut sv, &mut sa);
                    kill(&mut alive, &mut queue, e);
                }
            }
        }
        for i in 0..k {
            let g = removed(&space, &verts, &vals, i, &mut sv, &mut sa);
            if !alive.get(g) {
                continue;
            }
            let y = verts[i];
            let gv = sv.clone();
            let ga = sa.clone();
            let (mut tv, mut ta) = (Vec::new(), Vec::new());
            let supported = (0..d).any(|b| alive.get(extended(&space, &gv, &ga, y, b, &mut tv, &mut ta)));
            if !supported {
                kill(&mut alive, &mut queue, g);
            }
        }
    }

    let answer = if alive.get(0) { Answer::Yes } else { Answer::No };
    let strategy = Strategy {
        kappa,
        space,
        alive,
    };
    let surviving = strategy.len();
    Ok(LcResult {
        answer,
        kappa,
        maps_considered: strategy.space.total(),
        initial_family: initial,
        deletions,
        surviving,
        strategy: answer.is_yes().then_some(strategy),
    })
}

/// Whether some homomorphism from the substructure formed by `tuples`
/// (pairs of relation index and tuple index in `x`) agrees with `f` on the
/// vertices the two share.
pub fn is_consistent_with(
    x: &RelationalStructure,
    a: &RelationalStructure,
    f: &PartialMap,
    tuples: &[(usize, usize)],
) -> Result<bool> {
    let mut new_of: HashMap<usize, usize> = HashMap::new();
    let mut rels = vec![Vec::new(); x.relations().len()];
    for &(ri, ti) in tuples {
        let Some(t) = x.relations().get(ri).and_then(|r| r.tuples().get(ti)) else {
            return input(format!("tuple ({ri},{ti}) does not exist"));
        };
        let mapped = t
            .iter()
            .map(|&v| {
                let next = new_of.len();
                *new_of.entry(v).or_insert(next)
            })
            .collect();
        rels[ri].push(mapped);
    }
    if new_of.is_empty() {
        return Ok(true);
    }
    let y = RelationalStructure::new(x.signature().clone(), new_of.len(), rels)?;
    let fixed = PartialMap::from_pairs(f.iter().filter_map(|(v, b)| new_of.get(&v).map(|&w| (w, b))))?;
    Ok(HomSearch::new(&y, a).with_fixed(fixed).find()?.is_some())
}

#[derive(Clone, Debug, Serialize)]
pub struct GapWitness {
    pub map: PartialMap,
    /// `(relation, tuple)` pairs of a smallest substructure `f` is
    /// inconsistent with.
    pub tuples: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GapVerdict {
    pub holds: bool,
    /// `⌊γ / n_A⌋` and `⌊γ⌋`, capped at the tuple count.
    pub small_limit: usize,
    pub large_limit: usize,
    pub maps_checked: u64,
    pub witness: Option<GapWitness>,
}

fn for_each_combination(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
    if k > m {
        return Ok(true);
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if !f(&c)? {
            return Ok(false);
        }
        let Some(i) = (0..k).rev().find(|&i| c[i] != i + m - k) else {
            return Ok(true);
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Decides the `(κ, γ)`-consistency gap by exhaustion. `f` ranges over all
/// functions on at most κ vertices (a substructure with no tuples admits every
/// function). Consistency only shrinks as the substructure grows, so "with
/// every substructure of at most `s` tuples" is checked on the subsets of
/// size exactly `min(s, m)`.
pub fn check_consistency_gap(
    x: &RelationalStructure,
    a: &RelationalStructure,
    kappa: usize,
    gamma: &Rational,
    budget: u128,
) -> Result<GapVerdict> {
    if *gamma < rational::int(0) {
        return input("gamma must be non-negative");
    }
    let all: Vec<(usize, usize)> = x
        .relations()
        .iter()
        .enumerate()
        .flat_map(|(ri, r)| (0..r.len()).map(move |ti| (ri, ti)))
        .collect();
    let m = all.len();
    let n = x.domain_size();
    let d = a.domain_size();
    let large = (rational::floor_u64(gamma) as usize).min(m);
    let small = (rational::floor_u64(&(gamma / rational::int(d as i64))) as usize).min(m);
    let kmax = kappa.min(n);
    let maps: u128 = (0..=kmax).map(|k| binomial(n, k) * (d as u128).pow(k as u32)).sum();
    let per_map: u128 = binomial(m, small) + (small + 1..=large).map(|k| binomial(m, k)).sum::<u128>();
    let work = maps.saturating_mul(per_map.max(1));
    if work > budget {
        return Err(Error::Budget {
            what: "consistency-gap checks",
            needed: work,
            budget,
        });
    }
    let mut checked = 0u64;
    let space = Space::new(n, d, kmax, u128::MAX)?;
    let mut verts = Vec::new();
    let mut vals = Vec::new();
    for idx in 0..space.total() {
        space.decode(idx, &mut verts, &mut vals);
        let f = PartialMap::from_pairs(verts.iter().copied().zip(vals.iter().copied()))?;
        checked += 1;
        let consistent_with_all = |size: usize| -> Result<bool> {
            for_each_combination(m, size, |c| {
                let ys: Vec<_> = c.iter().map(|&i| all[i]).collect();
                is_consistent_with(x, a, &f, &ys)
            })
        };
        if !consistent_with_all(small)? || consistent_with_all(large)? {
            continue;
        }
        for size in small + 1..=large {
            let mut found = None;
            for_each_combination(m, size, |c| {
                let ys: Vec<_> = c.iter().map(|&i| all[i]).collect();
                if is_consistent_with(x, a, &f, &ys)? {
                    Ok(true)
                } else {
                    found = Some(ys);
                    Ok(false)
                }
            })?;
            if let Some(tuples) = found {
                return Ok(GapVerdict {
                    holds: false,
                    small_limit: small,
                    large_limit: large,
                    maps_checked: checked,
                    witness: Some(GapWitness { map: f, tuples }),
                });
            }
        }
        unreachable!("inconsistent at size {large} but no witness found");
    }
    Ok(GapVerdict {
        holds: true,
        small_limit: small,
        large_limit: large,
        maps_checked: checked,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{clique_structure, cycle_graph, find_homomorphism, RelationalStructure};

    fn k(n: usize) -> RelationalStructure {
        clique_structure(2, n).unwrap()
    }

    #[test]
    fn index_space_round_trips() {
        let s = Space::new(6, 3, 3, u128::MAX).unwrap();
        let (mut v, mut a) = (Vec::new(), Vec::new());
        for idx in 0..s.total() {
            s.decode(idx, &mut v, &mut a);
            assert!(v.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(s.index(&v, &a), idx);
        }
        assert_eq!(s.total(), 1 + 6 * 3 + 15 * 9 + 20 * 27);
    }

    #[test]
    fn level_zero_always_accepts() {
        let r = lc(&k(4), &k(3), 0).unwrap();
        assert_eq!(r.answer, Answer::Yes);
    }

    #[test]
    fn k4_against_k3() {
        assert_eq!(lc(&k(4), &k(3), 1).unwrap().answer, Answer::Yes);
        assert_eq!(lc(&k(4), &k(3), 2).unwrap().answer, Answer::Yes);
        // maps on three vertices never need to extend at level 3
        assert_eq!(lc(&k(4), &k(3), 3).unwrap().answer, Answer::Yes);
        assert_eq!(lc(&k(4), &k(3), 4).unwrap().answer, Answer::No);
    }

    #[test]
    fn yes_strategies_pass_audit() {
        let c5 = cycle_graph(5).unwrap();
        for kappa in 0..4 {
            let r = lc(&c5, &k(3), kappa).unwrap();
            r.strategy.unwrap().audit(&c5, &k(3)).unwrap();
        }
        let r = lc(&k(4), &k(3), 3).unwrap();
        r.strategy.unwrap().audit(&k(4), &k(3)).unwrap();
    }

    #[test]
    fn full_level_decides_homomorphism() {
        let c5 = cycle_graph(5).unwrap();
        let c3 = cycle_graph(3).unwrap();
        assert_eq!(lc(&c3, &c5, 3).unwrap().answer.is_yes(), find_homomorphism(&c3, &c5).unwrap().is_some());
        assert_eq!(lc(&c5, &c3, 5).unwrap().answer, Answer::Yes);
    }

    #[test]
    fn shuffled_order_reaches_the_same_fixpoint() {
        let x = crate::structures::graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let a = crate::structures::graph(3, &[(0, 1), (1, 2)]).unwrap();
        for kappa in 1..4 {
            let fifo = lc(&x, &a, kappa).unwrap();
            for seed in 0..5 {
                let opts = LcOptions {
                    order: DeletionOrder::Shuffled(seed),
                    ..LcOptions::default()
                };
                let sh = lc_with(&x, &a, kappa, &opts).unwrap();
                assert_eq!(sh.answer, fifo.answer);
                assert_eq!(sh.surviving, fifo.surviving);
                assert_eq!(sh.deletions, fifo.deletions);
            }
        }
    }

    #[test]
    fn budget_guard() {
        let opts = LcOptions {
            budget: 10,
            ..LcOptions::default()
        };
        assert!(matches!(lc_with(&k(4), &k(3), 2, &opts), Err(Error::Budget { .. })));
    }

    #[test]
    fn consistency_probe() {
        let c4 = cycle_graph(4).unwrap();
        let k3 = k(3);
        let all: Vec<(usize, usize)> = (0..c4.relation(0).len()).map(|i| (0, i)).collect();
        let free = PartialMap::new();
        assert!(is_consistent_with(&c4, &k3, &free, &all).unwrap());
        let bad = PartialMap::from_pairs([(0, 1), (1, 1)]).unwrap();
        assert!(!is_consistent_with(&c4, &k3, &bad, &all).unwrap());
        // the tuples avoiding vertex 1 do not see the clash
        let partial: Vec<_> = all
            .iter()
            .copied()
            .filter(|&(_, t)| !c4.relation(0).tuples()[t].contains(&1))
            .collect();
        assert!(is_consistent_with(&c4, &k3, &bad, &partial).unwrap());
        let k4 = k(4);
        let k4_all: Vec<_> = (0..12).map(|i| (0, i)).collect();
        assert!(!is_consistent_with(&k4, &k3, &free, &k4_all).unwrap());
    }

    /// Two diamonds glued at a vertex, one orientation per edge. In every
    /// 3-colouring the two tips of each diamond agree.
    fn diamond_chain() -> RelationalStructure {
        let edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)];
        RelationalStructure::monic("E", 2, 7, edges.iter().map(|&(u, v)| vec![u, v]).collect()).unwrap()
    }

    #[test]
    fn gap_fails_on_diamond_chain() {
        let x = diamond_chain();
        let v = check_consistency_gap(&x, &k(3), 2, &rational::int(10), 10_000_000).unwrap();
        assert!(!v.holds);
        assert_eq!(v.small_limit, 3);
        let w = v.witness.unwrap();
        // one whole diamond, with its tips coloured differently
        assert_eq!(w.tuples.len(), 5);
        let pairs: Vec<_> = w.map.iter().collect();
        assert_eq!(pairs.len(), 2);
        assert_ne!(pairs[0].1, pairs[1].1);
        assert!(!is_consistent_with(&x, &k(3), &w.map, &w.tuples).unwrap());
    }

    #[test]
    fn gap_holds_trivially() {
        let x = diamond_chain();
        // γ < 1: only the empty substructure is involved
        let v = check_consistency_gap(&x, &k(3), 2, &rational::ratio(1, 2), 10_000_000).unwrap();
        assert!(v.holds);
        // 3-colourable path: every partial colouring that survives single
        // edges extends
        let p = RelationalStructure::monic("E", 2, 4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let v = check_consistency_gap(&p, &k(3), 2, &rational::int(3), 10_000_000).unwrap();
        assert!(v.holds);
    }
}
