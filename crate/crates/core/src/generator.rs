//! Random uniform hypergraphs with large girth and chromatic number, and the
//! parameter formulas that make such hypergraphs threshold-sparse.

use std::collections::BTreeMap;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::hypergraph::{
    berge_cycles, chromatic_number, girth, independence_number, is_threshold_sparse, is_vertex_threshold_sparse,
    k_coloring, ColoringLimits, Hypergraph, SparsityMode, SparsityVerdict, DEFAULT_SUBSET_BUDGET,
};
use crate::rational::{self, Rational};

/// Derived constants for a target girth `g`, chromatic number `h`, sparsity
/// `β` and uniformity `r`. Logarithms are natural and kept alongside the
/// values because `μ` underflows quickly as `β` approaches 1.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorParams {
    pub r: usize,
    pub g: usize,
    pub h: usize,
    #[serde(with = "crate::rational")]
    pub beta: Rational,
    pub ell: f64,
    pub nu: f64,
    pub theta: f64,
    pub ln_theta: f64,
    pub mu: f64,
    pub ln_mu: f64,
    pub delta: f64,
    /// Never computed: the existence argument needs `n` "large enough" at
    /// steps that come with no explicit constant.
    pub n0: Option<u64>,
    pub n0_note: &'static str,
}

impl GeneratorParams {
    /// Edge probability `ℓ n^{1−r}`.
    pub fn edge_probability(&self, n: usize) -> f64 {
        (self.ell * (n as f64).powi(1 - self.r as i32)).min(1.0)
    }

    /// The two side conditions the failure bound relies on, in log form:
    /// `μ ≤ (ν/ℓ)^{1/(r−1)} (r/e)^{r/(r−1)}` and `μ^{β−1} θ ≤ 1/3`.
    pub fn side_conditions(&self) -> (bool, bool) {
        let r1 = (self.r - 1) as f64;
        let first = (self.nu / self.ell).ln() / r1 + self.r as f64 / r1 * ((self.r as f64).ln() - 1.0);
        let b1 = rational::to_f64(&self.beta) - 1.0;
        let eps = 1e-12;
        (
            self.ln_mu <= first + eps * first.abs().max(1.0),
            b1 * self.ln_mu + self.ln_theta <= -(3f64.ln()) + eps,
        )
    }
}

fn ln_theta(r: usize, ell: f64, nu: f64) -> f64 {
    let r = r as f64;
    nu * ell.ln() + 1.0 + (r + 1.0) * nu - r * nu * r.ln() - nu * nu.ln()
}

pub fn paper_params(g: usize, h: usize, beta: &Rational, r: usize) -> Result<GeneratorParams> {
    if g < 1 || h < 1 {
        return input("g and h must be at least 1");
    }
    if r < 2 {
        return input(format!("uniformity must be >= 2, got {r}"));
    }
    if *beta <= rational::int(1) {
        return input(format!("beta must exceed 1, got {}", rational::format(beta)));
    }
    let (hf, rf) = (h as f64, r as f64);
    let ell = (3.0 * hf * rf).powf(rf) / (2.0 * hf) * (3.0 * std::f64::consts::E * hf).ln() + 1.0;
    let b = rational::to_f64(beta);
    let nu = b / (rf - 1.0);
    let lt = ln_theta(r, ell, nu);
    let first = (nu / ell).ln() / (rf - 1.0) + rf / (rf - 1.0) * (rf.ln() - 1.0);
    let second = -(3f64.ln() + lt) / (b - 1.0);
    let ln_mu = first.min(second);
    let mu = ln_mu.exp();
    Ok(GeneratorParams {
        r,
        g,
        h,
        beta: beta.clone(),
        ell,
        nu,
        theta: lt.exp(),
        ln_theta: lt,
        mu,
        ln_mu,
        delta: b * mu / (rf - 1.0),
        n0: None,
        n0_note: "existence threshold unquantified in source",
    })
}

fn binomial_u128(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}

/// Largest number of candidate edges `sample_er` will index.
const MAX_CANDIDATES: u128 = 1 << 60;
/// Largest expected edge count `sample_er` will materialise.
const MAX_EXPECTED_EDGES: f64 = 5e7;

/// Writes the `rank`-th `r`-subset of `0..n` in colex order into `out`.
fn colex_unrank(mut rank: u128, n: usize, r: usize, out: &mut Vec<usize>) {
    out.clear();
    out.resize(r, 0);
    let mut v = n;
    for i in (1..=r).rev() {
        loop {
            v -= 1;
            if binomial_u128(v, i).unwrap() <= rank {
                break;
            }
        }
        out[i - 1] = v;
        rank -= binomial_u128(v, i).unwrap();
    }
}

/// The rng behind attempt `attempt` of a seeded experiment.
pub fn attempt_rng(seed: u64, attempt: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt);
    rng
}

/// `H(n, p)`: each `r`-subset becomes an edge independently with probability
/// `p`. Candidates are visited in lexicographic order, jumping between
/// accepted ones with geometric gaps.
pub fn sample_er(n: usize, p: f64, r: usize, seed: u64) -> Result<Hypergraph> {
    sample_er_with(n, p, r, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn sample_er_with(n: usize, p: f64, r: usize, rng: &mut impl RngCore) -> Result<Hypergraph> {
    if !(0.0..=1.0).contains(&p) {
        return input(format!("edge probability must lie in [0, 1], got {p}"));
    }
    if r < 2 {
        return input(format!("uniformity must be >= 2, got {r}"));
    }
    let total = match binomial_u128(n, r) {
        Some(t) if t <= MAX_CANDIDATES => t,
        _ => {
            return Err(Error::TooLarge {
                what: "random hypergraph",
                detail: format!("C({n}, {r}) candidate edges"),
            })
        }
    };
    if p * total as f64 > MAX_EXPECTED_EDGES {
        return Err(Error::TooLarge {
            what: "random hypergraph",
            detail: format!("about {:.0} expected edges", p * total as f64),
        });
    }
    let mut edges = Vec::new();
    let mut buf = Vec::with_capacity(r);
    let mut push = |k: u128, edges: &mut Vec<Vec<usize>>| {
        // lexicographic rank k of S is colex rank total-1-k of {n-1-s}
        colex_unrank(total - 1 - k, n, r, &mut buf);
        let mut e: Vec<usize> = buf.iter().map(|&v| n - 1 - v).collect();
        e.reverse();
        edges.push(e);
    };
    if p >= 1.0 {
        for k in 0..total {
            push(k, &mut edges);
        }
    } else if p > 0.0 {
        let log_q = (-p).ln_1p();
        let mut k: u128 = 0;
        loop {
            let u: f64 = 1.0 - rng.gen::<f64>();
            let skip = (u.ln() / log_q).floor();
            if skip >= (total - k) as f64 {
                break;
            }
            k += skip as u128;
            push(k, &mut edges);
            k += 1;
            if k >= total {
                break;
            }
        }
    }
    Hypergraph::new(n, r, edges)
}

#[derive(Clone, Debug)]
pub struct BrokenCycles {
    pub hypergraph: Hypergraph,
    /// The removed vertex set, in original labels.
    pub removed: Vec<usize>,
    /// New-to-old vertex map of the result.
    pub kept: Vec<usize>,
    pub short_cycles: usize,
}

/// Most short cycles a single call will enumerate.
const SHORT_CYCLE_LIMIT: usize = 2_000_000;

/// Deletes a vertex set meeting every Berge cycle of length below `g`,
/// greedily taking the vertex on the most remaining cycles (lowest index on
/// ties). With `pad`, random further vertices are deleted until exactly
/// `budget` are gone. Fails with `Error::Budget` if more than `budget`
/// deletions are needed.
pub fn break_short_cycles(h: &Hypergraph, g: usize, budget: usize, seed: u64, pad: bool) -> Result<BrokenCycles> {
    if budget >= h.n() {
        return input(format!("deletion budget {budget} would leave no vertices of {}", h.n()));
    }
    let cycles = if g >= 3 {
        berge_cycles(h, g - 1, SHORT_CYCLE_LIMIT)?
    } else {
        Vec::new()
    };
    let short = cycles.len();
    let cycle_vertices: Vec<Vec<usize>> = cycles
        .iter()
        .map(|c| {
            let mut vs: Vec<usize> = c.iter().flat_map(|&e| h.edge(e).iter().copied()).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    let mut on: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (ci, vs) in cycle_vertices.iter().enumerate() {
        for &v in vs {
            on[v].push(ci);
        }
    }
    let mut count: Vec<usize> = on.iter().map(Vec::len).collect();
    let mut alive = vec![true; short];
    let mut remaining = short;
    let mut removed = Vec::new();
    let mut gone = vec![false; h.n()];
    while remaining > 0 {
        let v = (0..h.n()).max_by_key(|&v| (count[v], std::cmp::Reverse(v))).unwrap();
        removed.push(v);
        gone[v] = true;
        if removed.len() > budget {
            return Err(Error::Budget {
                what: "short-cycle hitting set",
                needed: removed.len() as u128,
                budget: budget as u128,
            });
        }
        for &c in &on[v] {
            if alive[c] {
                alive[c] = false;
                remaining -= 1;
                for &w in &cycle_vertices[c] {
                    count[w] -= 1;
                }
            }
        }
    }
    if pad && removed.len() < budget {
        let mut rest: Vec<usize> = (0..h.n()).filter(|&v| !gone[v]).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let need = budget - removed.len();
        for i in 0..need {
            let j = rng.gen_range(i..rest.len());
            rest.swap(i, j);
        }
        removed.extend_from_slice(&rest[..need]);
        for &v in &rest[..need] {
            gone[v] = true;
        }
    }
    removed.sort_unstable();
    let keep: Vec<usize> = (0..h.n()).filter(|&v| !gone[v]).collect();
    let (hypergraph, kept) = h.induced(&keep)?;
    if girth(&hypergraph).is_some_and(|len| len < g) {
        unreachable!("a short cycle survived the hitting set");
    }
    Ok(BrokenCycles {
        hypergraph,
        removed,
        kept,
        short_cycles: short,
    })
}

/// Natural log of the failure probability bound
/// `Σ_{i=1}^{⌊μn⌋} ((n/i)^{1−(r−1)ν} ℓ^ν e^{1+(r+1)ν} r^{−rν} ν^{−ν})^i`,
/// `-∞` for an empty sum.
pub fn sparsity_failure_log_bound(r: usize, ell: f64, n: u64, mu: f64, nu: f64) -> Result<f64> {
    if r < 2 || n == 0 {
        return input("need r >= 2 and n >= 1");
    }
    if !(mu > 0.0 && nu > 0.0 && ell > 0.0) {
        return input("mu, nu and ell must be positive");
    }
    let nf = n as f64;
    let r1 = (r - 1) as f64;
    if ell < 1.0 {
        return input(format!("1 <= ell fails: ell = {ell}"));
    }
    if ell.ln() > r1 * nf.ln() * (1.0 + 1e-12) {
        return input(format!("ell <= n^(r-1) fails: ell = {ell}, n = {n}"));
    }
    let mu_max = ((nu / ell).ln() / r1 + r as f64 / r1 * ((r as f64).ln() - 1.0)).exp();
    if mu > mu_max * (1.0 + 1e-12) {
        return input(format!("mu <= (nu/ell)^(1/(r-1)) (r/e)^(r/(r-1)) fails: mu = {mu}, bound = {mu_max}"));
    }
    let terms = (mu * nf).floor();
    if terms > 1e8 {
        return Err(Error::TooLarge {
            what: "failure bound",
            detail: format!("{terms} terms"),
        });
    }
    let lt = ln_theta(r, ell, nu);
    let expo = 1.0 - r1 * nu;
    let mut acc = f64::NEG_INFINITY;
    for i in 1..=terms as u64 {
        let fi = i as f64;
        let term = fi * (expo * (nf / fi).ln() + lt);
        acc = log_add(acc, term);
    }
    Ok(acc)
}

fn log_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

pub fn sparsity_failure_bound(r: usize, ell: f64, n: u64, mu: f64, nu: f64) -> Result<f64> {
    Ok(sparsity_failure_log_bound(r, ell, n, mu, nu)?.exp())
}

/// `(μ, ν)`-vertex-threshold sparsity with exact rational `μ`, `ν`.
pub fn vertex_threshold_sparse(h: &Hypergraph, mu: &Rational, nu: &Rational) -> Result<SparsityVerdict> {
    if *mu <= rational::int(0) || *nu <= rational::int(0) {
        return input("mu and nu must be positive");
    }
    let mu_n = rational::floor_u64(&(mu * rational::int(h.n() as i64))) as usize;
    is_vertex_threshold_sparse(h, mu_n, nu, DEFAULT_SUBSET_BUDGET)
}

/// Whether the numeric premises under which `(μ, ν)`-vertex-threshold
/// sparsity gives `(γ, β)`-threshold sparsity hold: `β/ν ≥ r−1` and
/// `n ≥ (r−1) γ / (β μ)`.
pub fn vertex_sparsity_transfers(
    r: usize,
    n: usize,
    mu: &Rational,
    nu: &Rational,
    gamma: &Rational,
    beta: &Rational,
) -> bool {
    let r1 = rational::int(r as i64 - 1);
    *beta > rational::int(1)
        && *mu > rational::int(0)
        && *nu > rational::int(0)
        && beta / nu >= r1
        && rational::int(n as i64) >= &r1 * gamma / (beta * mu)
}

#[derive(Clone, Debug)]
pub struct GenerateConfig {
    pub n: usize,
    pub p: f64,
    pub r: usize,
    pub g: usize,
    pub h: usize,
    pub beta: Rational,
    pub delta: Rational,
    pub max_attempts: u64,
    pub seed: u64,
    /// Deletes exactly `n/2` vertices when breaking short cycles.
    pub proof_faithful: bool,
    /// Vertices that may be deleted to break short cycles; `n/2` if unset.
    pub cycle_budget: Option<usize>,
    /// Accept instances whose sparsity check ran out of budget.
    pub allow_unknown: bool,
    /// Skip the threshold-sparsity requirement altogether (still reported).
    pub require_sparsity: bool,
    pub coloring: ColoringLimits,
    pub subset_budget: u64,
}

impl GenerateConfig {
    pub fn new(n: usize, p: f64, r: usize, g: usize, h: usize) -> Self {
        GenerateConfig {
            n,
            p,
            r,
            g,
            h,
            beta: rational::ratio(3, 2),
            delta: rational::ratio(1, 10),
            max_attempts: 100,
            seed: 0,
            proof_faithful: false,
            cycle_budget: None,
            allow_unknown: false,
            require_sparsity: true,
            coloring: ColoringLimits::default(),
            subset_budget: DEFAULT_SUBSET_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// `None` when the check could not be completed.
    pub holds: Option<bool>,
    /// `exact`, `implied`, `trivial` or `unknown`.
    pub mode: String,
    pub detail: String,
}

impl Verdict {
    fn exact(holds: bool, detail: impl Into<String>) -> Self {
        Verdict {
            holds: Some(holds),
            mode: "exact".into(),
            detail: detail.into(),
        }
    }

    fn trivial(detail: impl Into<String>) -> Self {
        Verdict {
            holds: Some(true),
            mode: "trivial".into(),
            detail: detail.into(),
        }
    }

    fn unknown(detail: impl Into<String>) -> Self {
        Verdict {
            holds: None,
            mode: "unknown".into(),
            detail: detail.into(),
        }
    }

    fn from_sparsity(v: &SparsityVerdict) -> Self {
        let mode = match v.mode {
            SparsityMode::Exact => "exact",
            SparsityMode::Implied => "implied",
            SparsityMode::Unknown => "unknown",
        };
        Verdict {
            holds: v.holds,
            mode: mode.into(),
            detail: match &v.witness {
                Some(w) => format!("violating edge set {w:?}"),
                None => String::new(),
            },
        }
    }

    fn passes(&self, allow_unknown: bool) -> bool {
        self.holds == Some(true) || (allow_unknown && self.holds.is_none())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AttemptSummary {
    pub attempt: u64,
    pub n: usize,
    pub m: usize,
    /// First property that failed, `None` on success.
    pub failed: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationReport {
    pub seed: u64,
    pub attempts: u64,
    pub success: bool,
    /// Attempt index of the reported hypergraph.
    pub attempt: Option<u64>,
    pub n_sampled: usize,
    pub p: f64,
    pub n: usize,
    pub m: usize,
    pub removed_vertices: usize,
    pub short_cycles: usize,
    pub chromatic_number: Option<usize>,
    pub independence_number: Option<usize>,
    /// Keys `girth`, `chromatic` and `threshold_sparsity`.
    pub verified: BTreeMap<String, Verdict>,
    pub history: Vec<AttemptSummary>,
}

#[derive(Clone, Debug)]
pub struct Generated {
    /// The accepted hypergraph, or the best failing one.
    pub hypergraph: Option<Hypergraph>,
    pub report: GenerationReport,
}

impl Generated {
    pub fn success(&self) -> bool {
        self.report.success
    }
}

struct Candidate {
    hypergraph: Option<Hypergraph>,
    verified: BTreeMap<String, Verdict>,
    passed: usize,
    n: usize,
    m: usize,
    removed: usize,
    short_cycles: usize,
    chi: Option<usize>,
    alpha: Option<usize>,
    failed: Option<String>,
}

fn chromatic_certificate(h: &Hypergraph, target: usize, limits: ColoringLimits) -> (Verdict, Option<usize>, Option<usize>) {
    if target <= 1 {
        return (Verdict::trivial("every hypergraph needs at least one colour"), None, None);
    }
    if h.n() == 0 {
        return (Verdict::exact(false, "no vertices"), Some(0), None);
    }
    if h.n() <= 60 {
        if let Ok(chi) = chromatic_number(h, limits) {
            return (Verdict::exact(chi >= target, format!("chromatic number {chi}")), Some(chi), None);
        }
    }
    let mut alpha_found = None;
    if let Ok(alpha) = independence_number(h, limits) {
        alpha_found = Some(alpha);
        let bound = h.n().div_ceil(alpha.max(1));
        if bound >= target {
            return (
                Verdict::exact(true, format!("independence number {alpha} gives chromatic number >= {bound}")),
                None,
                Some(alpha),
            );
        }
    }
    match k_coloring(h, target - 1, limits) {
        Ok(Some(_)) => (
            Verdict::exact(false, format!("found a {}-colouring", target - 1)),
            None,
            alpha_found,
        ),
        Ok(None) => (
            Verdict::exact(true, format!("no {}-colouring exists", target - 1)),
            None,
            alpha_found,
        ),
        Err(_) => (Verdict::unknown("colouring search exhausted its budget"), None, alpha_found),
    }
}

fn run_attempt(cfg: &GenerateConfig, attempt: u64) -> Result<Candidate> {
    let mut rng = attempt_rng(cfg.seed, attempt);
    let h = sample_er_with(cfg.n, cfg.p, cfg.r, &mut rng)?;
    let budget = if cfg.proof_faithful {
        cfg.n / 2
    } else {
        cfg.cycle_budget.unwrap_or(cfg.n / 2)
    };
    let mut cand = Candidate {
        hypergraph: None,
        verified: BTreeMap::new(),
        passed: 0,
        n: cfg.n,
        m: h.m(),
        removed: 0,
        short_cycles: 0,
        chi: None,
        alpha: None,
        failed: None,
    };
    let budget = budget.min(cfg.n.saturating_sub(1));
    let broken = match break_short_cycles(&h, cfg.g, budget, rng.next_u64(), cfg.proof_faithful) {
        Ok(b) => b,
        Err(Error::Budget { .. }) | Err(Error::TooLarge { .. }) => {
            cand.verified.insert(
                "girth".into(),
                Verdict::exact(false, format!("short cycles need more than {budget} deletions")),
            );
            cand.failed = Some("girth".into());
            return Ok(cand);
        }
        Err(e) => return Err(e),
    };
    let x = broken.hypergraph;
    cand.n = x.n();
    cand.m = x.m();
    cand.removed = broken.removed.len();
    cand.short_cycles = broken.short_cycles;

    let girth_verdict = if cfg.g <= 2 {
        Verdict::trivial("every hypergraph has girth at least 2")
    } else {
        let gi = girth(&x);
        let detail = match gi {
            Some(len) => format!("girth {len}"),
            None => "no cycles".into(),
        };
        Verdict::exact(gi.is_none_or(|len| len >= cfg.g), detail)
    };
    let ok = girth_verdict.passes(false);
    cand.verified.insert("girth".into(), girth_verdict);
    if !ok {
        cand.failed = Some("girth".into());
        cand.hypergraph = Some(x);
        return Ok(cand);
    }
    cand.passed += 1;

    let (chrom, chi, alpha) = chromatic_certificate(&x, cfg.h, cfg.coloring);
    cand.chi = chi;
    cand.alpha = alpha;
    let ok = chrom.passes(cfg.allow_unknown);
    cand.verified.insert("chromatic".into(), chrom);
    if !ok {
        cand.failed = Some("chromatic".into());
        cand.hypergraph = Some(x);
        return Ok(cand);
    }
    cand.passed += 1;

    let gamma = &cfg.delta * rational::int(x.n() as i64);
    let sparse = Verdict::from_sparsity(&is_threshold_sparse(&x, &gamma, &cfg.beta, cfg.subset_budget)?);
    let ok = !cfg.require_sparsity || sparse.passes(cfg.allow_unknown);
    cand.verified.insert("threshold_sparsity".into(), sparse);
    if ok {
        cand.passed += 1;
    } else {
        cand.failed = Some("threshold_sparsity".into());
    }
    cand.hypergraph = Some(x);
    Ok(cand)
}

/// Rejection sampling: sample `H(n, p)`, break short cycles, then verify
/// girth, the chromatic bound and `(δn, β)`-threshold sparsity. Returns the
/// first success, or the attempt that got furthest.
pub fn generate_verified(cfg: &GenerateConfig) -> Result<Generated> {
    if cfg.n == 0 {
        return input("n must be positive");
    }
    if cfg.beta <= rational::int(1) {
        return input("beta must exceed 1");
    }
    if cfg.delta <= rational::int(0) {
        return input("delta must be positive");
    }
    let mut best: Option<(u64, Candidate)> = None;
    let mut history = Vec::new();
    let mut attempts = 0;
    for attempt in 0..cfg.max_attempts {
        attempts += 1;
        let cand = run_attempt(cfg, attempt)?;
        history.push(AttemptSummary {
            attempt,
            n: cand.n,
            m: cand.m,
            failed: cand.failed.clone(),
        });
        let done = cand.failed.is_none();
        if best.as_ref().is_none_or(|(_, b)| cand.passed > b.passed) {
            best = Some((attempt, cand));
        }
        if done {
            break;
        }
    }
    let (attempt, cand) = match best {
        Some((a, c)) => (Some(a), Some(c)),
        None => (None, None),
    };
    let success = cand.as_ref().is_some_and(|c| c.failed.is_none());
    let report = GenerationReport {
        seed: cfg.seed,
        attempts,
        success,
        attempt,
        n_sampled: cfg.n,
        p: cfg.p,
        n: cand.as_ref().map_or(0, |c| c.n),
        m: cand.as_ref().map_or(0, |c| c.m),
        removed_vertices: cand.as_ref().map_or(0, |c| c.removed),
        short_cycles: cand.as_ref().map_or(0, |c| c.short_cycles),
        chromatic_number: cand.as_ref().and_then(|c| c.chi),
        independence_number: cand.as_ref().and_then(|c| c.alpha),
        verified: cand.as_ref().map(|c| c.verified.clone()).unwrap_or_default(),
        history,
    };
    Ok(Generated {
        hypergraph: cand.and_then(|c| c.hypergraph),
        report,
    })
}
