//! Square 0/1 matrices over the boolean semiring, stored as row bitsets.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{input, Result};
use crate::structures::RelationalStructure;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BoolMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BoolMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn full(n: usize) -> Self {
        BoolMatrix::from_fn(n, |_, _| true)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = BoolMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut m = BoolMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return input(format!("row {i} has {} entries, expected {n}", row.len()));
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return input(format!("entry ({i},{j}) = {x} is not 0/1")),
                }
            }
        }
        Ok(m)
    }

    /// Matrix with `(u, v)` set for each listed pair.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = BoolMatrix::zeros(n);
        for &(u, v) in edges {
            m.set(u, v, true);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.bits[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_full(&self) -> bool {
        self.count_ones() == self.n * self.n
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn zero_row(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.row(i).iter().all(|&w| w == 0))
    }

    pub fn zero_column(&self) -> Option<usize> {
        let mut any = vec![0u64; self.words];
        for i in 0..self.n {
            for (a, w) in any.iter_mut().zip(self.row(i)) {
                *a |= w;
            }
        }
        (0..self.n).find(|&j| any[j / 64] >> (j % 64) & 1 == 0)
    }

    /// `supp(self) ⊆ supp(other)`.
    pub fn is_subset_of(&self, other: &BoolMatrix) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        out
    }

    pub fn transpose(&self) -> BoolMatrix {
        BoolMatrix::from_fn(self.n, |i, j| self.get(j, i))
    }

    /// Boolean product; panics on a dimension mismatch (see [`bool_product`]).
    pub fn mul(&self, other: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = BoolMatrix::zeros(self.n);
        let w = self.words;
        for i in 0..self.n {
            let dst = i * w;
            for k in 0..self.n {
                if self.get(i, k) {
                    for x in 0..w {
                        out.bits[dst + x] |= other.bits[k * w + x];
                    }
                }
            }
        }
        out
    }

    /// `self^t` by repeated squaring; `t = 0` gives `I`.
    pub fn pow(&self, mut t: u64) -> BoolMatrix {
        let mut acc = BoolMatrix::identity(self.n);
        let mut base = self.clone();
        while t > 0 {
            if t & 1 == 1 {
                acc = acc.mul(&base);
            }
            t >>= 1;
            if t > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// 0/1 text grid, one row per line.
    pub fn to_grid(&self) -> String {
        let mut s = String::with_capacity(self.n * (self.n + 1));
        for i in 0..self.n {
            for j in 0..self.n {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix({})", self.n)?;
        f.write_str(&self.to_grid())
    }
}

pub fn bool_product(m1: &BoolMatrix, m2: &BoolMatrix) -> Result<BoolMatrix> {
    if m1.n() != m2.n() {
        return input(format!("dimension mismatch: {} vs {}", m1.n(), m2.n()));
    }
    Ok(m1.mul(m2))
}

/// A sequence over `{-1, +1}`; `+1` stands for `M`, `-1` for `Mᵀ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IndicatorTuple(Vec<i8>);

impl IndicatorTuple {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if let Some(x) = entries.iter().find(|&&x| x != 1 && x != -1) {
            return input(format!("indicator entries must be ±1, got {x}"));
        }
        Ok(IndicatorTuple(entries))
    }

    /// `(1, -1, 1, …)` of length `t`.
    pub fn alternating(t: usize) -> Self {
        IndicatorTuple((0..t).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect())
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_balanced(&self) -> bool {
        self.0.iter().map(|&x| x as i64).sum::<i64>() == 0
    }

    pub fn concat(&self, other: &IndicatorTuple) -> IndicatorTuple {
        IndicatorTuple([self.0.as_slice(), other.0.as_slice()].concat())
    }
}

/// `M^x`: left-to-right product with `Mᵀ` wherever `x_i = -1`; `I` for the
/// empty tuple.
pub fn indicator_power(m: &BoolMatrix, x: &IndicatorTuple) -> BoolMatrix {
    let mt = m.transpose();
    x.0.iter().fold(BoolMatrix::identity(m.n()), |acc, &s| {
        acc.mul(if s == 1 { m } else { &mt })
    })
}

/// Strong connectivity with positive-length walks for every pair, `i = j`
/// included (so a 1×1 matrix needs its entry set).
pub fn is_irreducible(m: &BoolMatrix) -> bool {
    let n = m.n();
    if n == 0 {
        return false;
    }
    // Warshall closure over paths of length >= 1
    let mut c = m.clone();
    let w = c.words;
    for k in 0..n {
        let row_k: Vec<u64> = c.row(k).to_vec();
        for i in 0..n {
            if c.get(i, k) {
                for (dst, src) in c.bits[i * w..(i + 1) * w].iter_mut().zip(&row_k) {
                    *dst |= src;
                }
            }
        }
    }
    c.is_full()
}

/// `n² − 2n + 2`, the largest possible index of primitivity.
pub fn wielandt_bound(n: usize) -> u64 {
    let n = n as u64;
    n * n + 2 - 2 * n
}

pub fn is_primitive(m: &BoolMatrix) -> bool {
    m.n() > 0 && m.pow(wielandt_bound(m.n())).is_full()
}

/// Least `t >= 1` with `M^t = J`.
pub fn index_of_primitivity(m: &BoolMatrix) -> Option<u64> {
    if m.n() == 0 || m.zero_row().is_some() || m.zero_column().is_some() {
        return None;
    }
    let cap = wielandt_bound(m.n());
    let mut p = m.clone();
    for t in 1..=cap {
        if p.is_full() {
            return Some(t);
        }
        p = p.mul(m);
    }
    None
}

/// `M_(i,j)(a, b) = 1` iff some tuple has `a` at position `i` and `b` at
/// position `j`. Positions are 0-based; all ordered pairs `i ≠ j` appear.
pub fn slice_matrices(a: &RelationalStructure) -> Result<BTreeMap<(usize, usize), BoolMatrix>> {
    let Some(r) = a.monic_arity() else {
        return input("slice matrices need a monic structure");
    };
    if r < 2 {
        return input(format!("slice matrices need arity >= 2, got {r}"));
    }
    let n = a.domain_size();
    let mut out = BTreeMap::new();
    for i in 0..r {
        for j in 0..r {
            if i != j {
                out.insert((i, j), BoolMatrix::zeros(n));
            }
        }
    }
    for t in a.relation(0).tuples() {
        for i in 0..r {
            for j in 0..r {
                if i != j {
                    out.get_mut(&(i, j)).unwrap().set(t[i], t[j], true);
                }
            }
        }
    }
    Ok(out)
}
