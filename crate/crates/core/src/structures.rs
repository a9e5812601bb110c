//! Finite relational structures, homomorphism search and the standard
//! constructions (cycles, cliques `K_{r,c}`, group structures, monic products,
//! orientations of hypergraphs).

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

/// Ordered list of relation symbols with unique names and positive arities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    symbols: Vec<Symbol>,
}

impl Signature {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return input("signature has no symbols");
        }
        let mut seen = HashSet::new();
        for s in &symbols {
            if s.arity == 0 {
                return input(format!("symbol {:?} has arity 0", s.name));
            }
            if !seen.insert(s.name.as_str()) {
                return input(format!("duplicate symbol {:?}", s.name));
            }
        }
        Ok(Signature { symbols })
    }

    pub fn monic(name: &str, arity: usize) -> Result<Self> {
        Signature::new(vec![Symbol {
            name: name.to_string(),
            arity,
        }])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn arities(&self) -> Vec<usize> {
        self.symbols.iter().map(|s| s.arity).collect()
    }

    /// Symbols are matched by position; names are labels only.
    pub fn compatible(&self, other: &Signature) -> bool {
        self.symbols.len() == other.symbols.len()
            && self.symbols.iter().zip(&other.symbols).all(|(a, b)| a.arity == b.arity)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// A set of tuples of one fixed arity, kept sorted for deterministic
/// iteration, with a hash index for membership.
#[derive(Clone, Debug)]
pub struct Relation {
    arity: usize,
    tuples: Vec<Vec<usize>>,
    index: HashSet<Vec<usize>>,
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.tuples == other.tuples
    }
}

impl Eq for Relation {}

impl Relation {
    fn from_sorted(arity: usize, mut tuples: Vec<Vec<usize>>) -> Self {
        tuples.sort();
        tuples.dedup();
        let index = tuples.iter().cloned().collect();
        Relation {
            arity,
            tuples,
            index,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, t: &[usize]) -> bool {
        self.index.contains(t)
    }
}

/// Finite structure on the dense domain `0..domain_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationalStructure {
    signature: Signature,
    domain_size: usize,
    relations: Vec<Relation>,
}

impl RelationalStructure {
    /// Builds a structure, rejecting out-of-range entries and wrong tuple
    /// lengths. Duplicate tuples are merged.
    pub fn new(
        signature: Signature,
        domain_size: usize,
        relations: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if domain_size == 0 {
            return input("domain must be nonempty");
        }
        if relations.len() != signature.len() {
            return input(format!(
                "{} relations given for a signature of {} symbols",
                relations.len(),
                signature.len()
            ));
        }
        let mut rels = Vec::with_capacity(relations.len());
        for (sym, tuples) in signature.symbols.iter().zip(relations) {
            for (ti, t) in tuples.iter().enumerate() {
                if t.len() != sym.arity {
                    return input(format!(
                        "relation {:?}, tuple #{ti}: length {} but arity is {}",
                        sym.name,
                        t.len(),
                        sym.arity
                    ));
                }
                if let Some((pos, v)) = t.iter().enumerate().find(|(_, &v)| v >= domain_size) {
                    return input(format!(
                        "relation {:?}, tuple #{ti}, position {pos}: entry {v} out of range for domain size {domain_size}",
                        sym.name
                    ));
                }
            }
            rels.push(Relation::from_sorted(sym.arity, tuples));
        }
        Ok(RelationalStructure {
            signature,
            domain_size,
            relations: rels,
        })
    }

    /// Single-symbol structure.
    pub fn monic(name: &str, arity: usize, domain_size: usize, tuples: Vec<Vec<usize>>) -> Result<Self> {
        RelationalStructure::new(Signature::monic(name, arity)?, domain_size, vec![tuples])
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation(&self, i: usize) -> &Relation {
        &self.relations[i]
    }

    pub fn is_monic(&self) -> bool {
        self.signature.len() == 1
    }

    /// Arity of the single symbol of a monic structure.
    pub fn monic_arity(&self) -> Option<usize> {
        self.is_monic().then(|| self.relations[0].arity)
    }

    /// Total number of tuples over all relations.
    pub fn tuple_count(&self) -> usize {
        self.relations.iter().map(Relation::len).sum()
    }

    /// Number of tuple occurrences of each vertex (with multiplicity).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.domain_size];
        for rel in &self.relations {
            for t in &rel.tuples {
                for &v in t {
                    deg[v] += 1;
                }
            }
        }
        deg
    }

    fn same_signature(&self, other: &RelationalStructure) -> Result<()> {
        if !self.signature.compatible(&other.signature) {
            return input(format!(
                "signatures differ: arities {:?} vs {:?}",
                self.signature.arities(),
                other.signature.arities()
            ));
        }
        Ok(())
    }
}

/// Finite partial function between dense vertex sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap(BTreeMap<usize, usize>);

impl PartialMap {
    pub fn new() -> Self {
        PartialMap::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut m = BTreeMap::new();
        for (x, a) in pairs {
            if let Some(prev) = m.insert(x, a) {
                if prev != a {
                    return input(format!("vertex {x} mapped to both {prev} and {a}"));
                }
            }
        }
        Ok(PartialMap(m))
    }

    pub fn from_total(values: &[usize]) -> Self {
        PartialMap(values.iter().copied().enumerate().collect())
    }

    pub fn get(&self, x: usize) -> Option<usize> {
        self.0.get(&x).copied()
    }

    pub fn insert(&mut self, x: usize, a: usize) -> Option<usize> {
        self.0.insert(x, a)
    }

    pub fn remove(&mut self, x: usize) -> Option<usize> {
        self.0.remove(&x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&x, &a)| (x, a))
    }

    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> PartialMap {
        PartialMap(self.0.iter().filter(|(&x, _)| keep(x)).map(|(&x, &a)| (x, a)).collect())
    }

    pub fn extends(&self, other: &PartialMap) -> bool {
        other.iter().all(|(x, a)| self.get(x) == Some(a))
    }
}

impl Serialize for PartialMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self.iter().map(|(x, a)| [x, a]).collect();
        pairs.serialize(s)
    }
}

/// Monic structure of arity `r >= 2` where every tuple has `r` distinct
/// entries and no two tuples share an entry set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedMonicStructure(RelationalStructure);

impl OrientedMonicStructure {
    pub fn new(s: RelationalStructure) -> Result<Self> {
        let Some(r) = s.monic_arity() else {
            return input("oriented structure must be monic");
        };
        if r < 2 {
            return input("oriented structure needs arity >= 2");
        }
        let mut sets = HashSet::new();
        for (i, t) in s.relations[0].tuples.iter().enumerate() {
            let mut set = t.clone();
            set.sort_unstable();
            set.dedup();
            if set.len() != r {
                return input(format!("tuple #{i} {t:?} has repeated entries"));
            }
            if !sets.insert(set) {
                return input(format!("tuple #{i} {t:?} repeats the entry set of another tuple"));
            }
        }
        Ok(OrientedMonicStructure(s))
    }

    pub fn structure(&self) -> &RelationalStructure {
        &self.0
    }

    pub fn into_structure(self) -> RelationalStructure {
        self.0
    }

    pub fn arity(&self) -> usize {
        self.0.relations[0].arity
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        self.0.relations[0].tuples()
    }

    /// The unique tuple whose entry set is `edge` (sorted).
    pub fn tuple_for_edge(&self, edge: &[usize]) -> Option<&[usize]> {
        self.tuples().iter().map(Vec::as_slice).find(|t| {
            let mut s = t.to_vec();
            s.sort_unstable();
            s == edge
        })
    }
}

/// Checks that a total map is a homomorphism `x -> a`.
pub fn is_homomorphism(x: &RelationalStructure, a: &RelationalStructure, map: &[usize]) -> bool {
    if !x.signature.compatible(&a.signature) || map.len() != x.domain_size {
        return false;
    }
    if map.iter().any(|&v| v >= a.domain_size) {
        return false;
    }
    let mut img = Vec::new();
    x.relations.iter().zip(&a.relations).all(|(rx, ra)| {
        rx.tuples.iter().all(|t| {
            img.clear();
            img.extend(t.iter().map(|&v| map[v]));
            ra.contains(&img)
        })
    })
}

/// Checks that `f` is a homomorphism from the substructure of `x` induced by
/// `dom(f)`.
pub fn is_partial_homomorphism(x: &RelationalStructure, a: &RelationalStructure, f: &PartialMap) -> bool {
    let mut img = Vec::new();
    x.relations.iter().zip(&a.relations).all(|(rx, ra)| {
        rx.tuples.iter().all(|t| {
            img.clear();
            for &v in t {
                match f.get(v) {
                    Some(a) => img.push(a),
                    None => return true,
                }
            }
            ra.contains(&img)
        })
    })
}

#[derive(Clone, Copy, Debug)]
struct Constraint {
    rel: usize,
    tuple: usize,
}

/// Backtracking homomorphism search with forward checking.
///
/// Variables are taken by descending number of tuple occurrences (ties by
/// index), values in ascending order, so the result is deterministic.
pub struct HomSearch<'a> {
    x: &'a RelationalStructure,
    a: &'a RelationalStructure,
    fixed: PartialMap,
    budget: Option<u64>,
}

impl<'a> HomSearch<'a> {
    pub fn new(x: &'a RelationalStructure, a: &'a RelationalStructure) -> Self {
        HomSearch {
            x,
            a,
            fixed: PartialMap::new(),
            budget: None,
        }
    }

    /// Pre-seeds the search: vertices in `dom(fixed)` keep their values.
    pub fn with_fixed(mut self, fixed: PartialMap) -> Self {
        self.fixed = fixed;
        self
    }

    /// Caps the number of search nodes.
    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.budget = Some(nodes);
        self
    }

    pub fn find(&self) -> Result<Option<Vec<usize>>> {
        self.x.same_signature(self.a)?;
        let n = self.x.domain_size;
        let d = self.a.domain_size;
        if d > 128 {
            return Err(Error::TooLarge {
                what: "homomorphism search",
                detail: format!("template has {d} elements, at most 128 supported"),
            });
        }
        for (v, val) in self.fixed.iter() {
            if v >= n || val >= d {
                return input(format!("fixed pair ({v},{val}) out of range"));
            }
        }
        let mut state = SearchState::new(self.x, self.a);
        for (v, val) in self.fixed.iter() {
            let keep = state.dom[v] & (1u128 << val);
            if keep == 0 {
                return Ok(None);
            }
            state.dom[v] = keep;
        }
        if !state.propagate_all() {
            return Ok(None);
        }
        let deg = self.x.degrees();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&u, &v| deg[v].cmp(&deg[u]).then(u.cmp(&v)));
        let mut nodes = 0u64;
        let found = state.search(&order, 0, &mut nodes, self.budget)?;
        Ok(found.then(|| {
            state
                .dom
                .iter()
                .map(|&m| m.trailing_zeros() as usize)
                .collect()
        }))
    }
}

/// Domain of each variable as a bitmask over template values. Templates are
/// limited to 128 elements; larger templates are rejected up front.
struct SearchState<'a> {
    x: &'a RelationalStructure,
    a: &'a RelationalStructure,
    dom: Vec<u128>,
    by_var: Vec<Vec<Constraint>>,
}

impl<'a> SearchState<'a> {
    fn new(x: &'a RelationalStructure, a: &'a RelationalStructure) -> Self {
        let full = if a.domain_size == 128 {
            u128::MAX
        } else {
            (1u128 << a.domain_size) - 1
        };
        let mut by_var = vec![Vec::new(); x.domain_size];
        for (ri, rel) in x.relations.iter().enumerate() {
            for (ti, t) in rel.tuples.iter().enumerate() {
                let mut seen: Vec<usize> = t.clone();
                seen.sort_unstable();
                seen.dedup();
                for v in seen {
                    by_var[v].push(Constraint { rel: ri, tuple: ti });
                }
            }
        }
        SearchState {
            x,
            a,
            dom: vec![full; x.domain_size],
            by_var,
        }
    }

    /// Narrows the domains of the variables of one constraint to supported
    /// values, recording changed variables. Returns `false` on a wipe-out.
    fn revise(&mut self, c: Constraint, changed: &mut Vec<usize>) -> bool {
        let t = &self.x.relations[c.rel].tuples[c.tuple];
        let mut support = vec![0u128; t.len()];
        'tuples: for at in &self.a.relations[c.rel].tuples {
            for (pos, &v) in t.iter().enumerate() {
                if self.dom[v] & (1u128 << at[pos]) == 0 {
                    continue 'tuples;
                }
                // repeated variables must receive equal values
                if let Some(prev) = t[..pos].iter().position(|&u| u == v) {
                    if at[prev] != at[pos] {
                        continue 'tuples;
                    }
                }
            }
            for (pos, &val) in at.iter().enumerate() {
                support[pos] |= 1u128 << val;
            }
        }
        for (pos, &v) in t.iter().enumerate() {
            let nd = self.dom[v] & support[pos];
            if nd == 0 {
                return false;
            }
            if nd != self.dom[v] {
                self.dom[v] = nd;
                changed.push(v);
            }
        }
        true
    }

    /// Generalised arc consistency over all constraints.
    fn propagate_all(&mut self) -> bool {
        let all: Vec<usize> = (0..self.x.domain_size).collect();
        self.propagate_from(all)
    }

    fn propagate_from(&mut self, mut queue: Vec<usize>) -> bool {
        let mut queued = vec![false; self.x.domain_size];
        for &v in &queue {
            queued[v] = true;
        }
        let mut changed = Vec::new();
        while let Some(v) = queue.pop() {
            queued[v] = false;
            for ci in 0..self.by_var[v].len() {
                let c = self.by_var[v][ci];
                changed.clear();
                if !self.revise(c, &mut changed) {
                    return false;
                }
                for &u in &changed {
                    if !queued[u] {
                        queued[u] = true;
                        queue.push(u);
                    }
                }
            }
        }
        true
    }

    fn search(
        &mut self,
        order: &[usize],
        depth: usize,
        nodes: &mut u64,
        budget: Option<u64>,
    ) -> Result<bool> {
        if depth == order.len() {
            return Ok(true);
        }
        *nodes += 1;
        if let Some(b) = budget {
            if *nodes > b {
                return Err(Error::Budget {
                    what: "homomorphism search nodes",
                    needed: *nodes as u128,
                    budget: b as u128,
                });
            }
        }
        let v = order[depth];
        let mut values = self.dom[v];
        if values.count_ones() == 1 {
            return self.search(order, depth + 1, nodes, budget);
        }
        while values != 0 {
            let val = values.trailing_zeros() as usize;
            values &= values - 1;
            let saved = self.dom.clone();
            self.dom[v] = 1u128 << val;
            if self.propagate_from(vec![v]) && self.search(order, depth + 1, nodes, budget)? {
                return Ok(true);
            }
            self.dom = saved;
        }
        Ok(false)
    }
}

/// Finds a homomorphism `x -> a`, if one exists.
pub fn find_homomorphism(x: &RelationalStructure, a: &RelationalStructure) -> Result<Option<Vec<usize>>> {
    HomSearch::new(x, a).find()
}

/// The single-symbol structure whose relation is the product of all
/// relations of `a` (tuples concatenated in signature order).
pub fn monic_product(a: &RelationalStructure) -> RelationalStructure {
    let arity: usize = a.relations.iter().map(Relation::arity).sum();
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    for rel in &a.relations {
        let mut next = Vec::with_capacity(acc.len() * rel.len());
        for prefix in &acc {
            for t in &rel.tuples {
                let mut v = prefix.clone();
                v.extend_from_slice(t);
                next.push(v);
            }
        }
        acc = next;
    }
    let name = a
        .signature
        .symbols
        .iter()
        .map(|s| s.name.as_str())
        .collect::<Vec<_>>()
        .join("*");
    RelationalStructure::monic(&name, arity, a.domain_size, acc)
        .expect("product of valid relations is valid")
}

/// True iff some element `b` has the constant tuple `(b,...,b)` in every
/// relation.
pub fn has_loop(b: &RelationalStructure) -> bool {
    loop_element(b).is_some()
}

pub fn loop_element(b: &RelationalStructure) -> Option<usize> {
    (0..b.domain_size).find(|&v| {
        b.relations
            .iter()
            .all(|rel| rel.contains(&vec![v; rel.arity]))
    })
}

/// Substructure induced by `keep`, re-indexed to `0..|keep|` in ascending
/// order of the original indices. Returns the structure and the map from new
/// to old indices.
pub fn induced_substructure(
    x: &RelationalStructure,
    keep: &[usize],
) -> Result<(RelationalStructure, Vec<usize>)> {
    let mut old: Vec<usize> = keep.to_vec();
    old.sort_unstable();
    old.dedup();
    if old.is_empty() {
        return input("induced substructure on an empty vertex set");
    }
    if let Some(&v) = old.iter().find(|&&v| v >= x.domain_size) {
        return input(format!("vertex {v} out of range"));
    }
    let mut new_of = vec![usize::MAX; x.domain_size];
    for (i, &v) in old.iter().enumerate() {
        new_of[v] = i;
    }
    let rels = x
        .relations
        .iter()
        .map(|rel| {
            rel.tuples
                .iter()
                .filter(|t| t.iter().all(|&v| new_of[v] != usize::MAX))
                .map(|t| t.iter().map(|&v| new_of[v]).collect())
                .collect()
        })
        .collect();
    let s = RelationalStructure::new(x.signature.clone(), old.len(), rels)?;
    Ok((s, old))
}

/// Orients every hyperedge: seed 0 keeps each edge in ascending order, any
/// other seed permutes each edge with a seeded ChaCha stream.
pub fn orient(h: &Hypergraph, seed: u64) -> OrientedMonicStructure {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples = h
        .edges()
        .iter()
        .map(|e| {
            let mut t = e.clone();
            if seed != 0 {
                t.shuffle(&mut rng);
            }
            t
        })
        .collect();
    let s = RelationalStructure::monic("R", h.r(), h.n(), tuples)
        .expect("hypergraph edges are in range");
    OrientedMonicStructure::new(s).expect("distinct edges give an oriented structure")
}

/// Hypergraph on the same vertex set whose edges are the entry sets of the
/// tuples.
pub fn symmetrize(x: &OrientedMonicStructure) -> Hypergraph {
    let edges = x
        .tuples()
        .iter()
        .map(|t| {
            let mut e = t.clone();
            e.sort_unstable();
            e
        })
        .collect();
    Hypergraph::new(x.0.domain_size, x.arity(), edges).expect("oriented tuples are valid edges")
}

/// Undirected cycle `C_n` as a symmetric digraph.
pub fn cycle_graph(n: usize) -> Result<RelationalStructure> {
    if n < 3 {
        return input(format!("cycle length must be >= 3, got {n}"));
    }
    let mut tuples = Vec::with_capacity(2 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        tuples.push(vec![i, j]);
        tuples.push(vec![j, i]);
    }
    RelationalStructure::monic("E", 2, n, tuples)
}

/// `K_{r,c}`: domain `[c]`, the `r`-ary relation of all non-constant tuples.
pub fn clique_structure(r: usize, c: usize) -> Result<RelationalStructure> {
    if r == 0 || c == 0 {
        return input("clique structure needs r >= 1 and c >= 1");
    }
    let total = (c as u128).checked_pow(r as u32).filter(|&t| t <= 50_000_000);
    let Some(total) = total else {
        return input(format!("K_{{{r},{c}}} has too many tuples"));
    };
    let mut tuples = Vec::new();
    for code in 0..total as usize {
        let mut t = Vec::with_capacity(r);
        let mut rest = code;
        for _ in 0..r {
            t.push(rest % c);
            rest /= c;
        }
        t.reverse();
        if t.iter().any(|&v| v != t[0]) {
            tuples.push(t);
        }
    }
    RelationalStructure::monic("R", r, c, tuples)
}

/// Structure with one ternary relation `R_g = {(h1,h2,h3) : h1 h2 h3 = g}` per
/// group element `g`. The table is validated as a group first.
pub fn group_structure(table: &[Vec<usize>]) -> Result<RelationalStructure> {
    let n = table.len();
    if n == 0 {
        return input("empty Cayley table");
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return input(format!("Cayley table row {i} has length {}", row.len()));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return input(format!("Cayley table row {i} has out-of-range entry {v}"));
        }
    }
    let mul = |a: usize, b: usize| table[a][b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return input(format!("not associative at ({a},{b},{c})"));
                }
            }
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a)) else {
        return input("no identity element");
    };
    for a in 0..n {
        if !(0..n).any(|b| mul(a, b) == e && mul(b, a) == e) {
            return input(format!("element {a} has no inverse"));
        }
    }
    let symbols = (0..n)
        .map(|g| Symbol {
            name: format!("R{g}"),
            arity: 3,
        })
        .collect();
    let mut rels = vec![Vec::new(); n];
    for h1 in 0..n {
        for h2 in 0..n {
            for h3 in 0..n {
                rels[mul(mul(h1, h2), h3)].push(vec![h1, h2, h3]);
            }
        }
    }
    RelationalStructure::new(Signature::new(symbols)?, n, rels)
}

/// Cayley table of the cyclic group `Z_n`.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Digraph structure (single binary symbol `E`) from an adjacency predicate.
pub fn digraph(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<RelationalStructure> {
    RelationalStructure::monic("E", 2, n, edges.into_iter().map(|(u, v)| vec![u, v]).collect())
}

/// Undirected graph as a symmetric digraph.
pub fn graph(n: usize, edges: &[(usize, usize)]) -> Result<RelationalStructure> {
    digraph(n, edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]))
}
