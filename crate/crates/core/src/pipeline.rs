//! Extending homomorphisms over fibers and pendent edges, and the end-to-end
//! search for instances that fool local consistency.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::aperiodicity::{find_lambda_walk, mixing_time_monic, TauPattern};
use crate::consistency::{lc_with, Answer, LcOptions};
use crate::error::{input, Error, Result};
use crate::generator::{generate_verified, GenerateConfig, GenerationReport};
use crate::hypergraph::{girth, is_fiber_chain, is_pendent, ColoringLimits, Hypergraph, Joint};
use crate::rational::{self, Rational};
use crate::structures::{
    clique_structure, find_homomorphism, has_loop, is_partial_homomorphism, monic_product, orient, symmetrize,
    HomSearch, OrientedMonicStructure, PartialMap, RelationalStructure,
};

/// Extension procedures against a fixed aperiodic template.
pub struct Extender<'a> {
    a: &'a RelationalStructure,
    tau: usize,
}

impl<'a> Extender<'a> {
    pub fn new(a: &'a RelationalStructure) -> Result<Self> {
        let report = mixing_time_monic(a, None)?;
        match report.mixing_time {
            Some(t) if report.aperiodic => Ok(Extender { a, tau: t as usize }),
            _ => Err(Error::Precondition("template is not aperiodic".into())),
        }
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    fn check_h(&self, x: &OrientedMonicStructure, h: &PartialMap) -> Result<()> {
        if !is_partial_homomorphism(x.structure(), self.a, h) {
            return Err(Error::Precondition("h is not a homomorphism on its domain".into()));
        }
        Ok(())
    }

    /// Extends `h` (a homomorphism on everything outside the fiber plus its
    /// joint) over the links of `fiber`, given as a chain of edge indices of
    /// `symmetrize(x)`. Values `h` assigns to inner fiber vertices are
    /// discarded.
    pub fn over_fiber(
        &self,
        x: &OrientedMonicStructure,
        fiber: &[usize],
        joint: &Joint,
        h: &PartialMap,
    ) -> Result<PartialMap> {
        let hs = symmetrize(x);
        if !is_fiber_chain(&hs, fiber) {
            return input("not a fiber of the symmetrised instance");
        }
        if fiber.len() != self.tau {
            return Err(Error::Precondition(format!(
                "fiber has {} links but the template mixes in {}",
                fiber.len(),
                self.tau
            )));
        }
        let (u, v) = match joint.vertices.as_slice() {
            [u] => (*u, *u),
            [u, v] => (*u, *v),
            _ => return input("a joint has one or two vertices"),
        };
        let (chain, w) = walk_order(&hs, fiber, u, v).ok_or_else(|| Error::Input("joint does not bound the fiber".into()))?;
        let inner: HashSet<usize> = chain
            .iter()
            .flat_map(|&e| hs.edge(e).iter().copied())
            .filter(|&y| y != u && y != v)
            .collect();
        let base = h.restrict(|y| !inner.contains(&y));
        self.check_h(x, &base)?;
        let (Some(hu), Some(hv)) = (base.get(u), base.get(v)) else {
            return input("h must be defined on the joint");
        };
        let mut rows = Vec::with_capacity(chain.len());
        let mut tuples = Vec::with_capacity(chain.len());
        for (i, &e) in chain.iter().enumerate() {
            let t = x.tuple_for_edge(hs.edge(e)).expect("every edge has its tuple");
            let p = t.iter().position(|&y| y == w[i]).unwrap();
            let q = t.iter().position(|&y| y == w[i + 1]).unwrap();
            rows.push((p, q));
            tuples.push(t.to_vec());
        }
        let pattern = TauPattern::new(rows, x.arity())?;
        let Some(walk) = find_lambda_walk(self.a, &pattern, hu, hv)? else {
            return Err(Error::Precondition(format!("no walk from {hu} to {hv}; mixing time is wrong")));
        };
        let rel = self.a.relation(0).tuples();
        let mut out = base;
        for (t, &k) in tuples.iter().zip(&walk.tuples) {
            for (&y, &b) in t.iter().zip(&rel[k]) {
                out.insert(y, b);
            }
        }
        if !is_partial_homomorphism(x.structure(), self.a, &out) {
            return Err(Error::Precondition("extension failed to verify".into()));
        }
        Ok(out)
    }

    /// Extends `h` over the free vertices of the pendent edge `e`, whose
    /// joint is `joint`.
    pub fn over_pendent(&self, x: &OrientedMonicStructure, e: usize, joint: &Joint, h: &PartialMap) -> Result<PartialMap> {
        let hs = symmetrize(x);
        if e >= hs.m() || !is_pendent(&hs, e) {
            return input(format!("edge {e} is not pendent"));
        }
        let [v] = joint.vertices.as_slice() else {
            return input("a pendent edge has a one-vertex joint");
        };
        let edge = hs.edge(e);
        if !edge.contains(v) {
            return input("joint is not on the edge");
        }
        let base = h.restrict(|y| y == *v || !edge.contains(&y));
        self.check_h(x, &base)?;
        let Some(hv) = base.get(*v) else {
            return input("h must be defined on the joint");
        };
        let t = x.tuple_for_edge(edge).expect("every edge has its tuple");
        let j = t.iter().position(|y| y == v).unwrap();
        let Some(a_t) = self.a.relation(0).tuples().iter().find(|a_t| a_t[j] == hv) else {
            return Err(Error::Precondition(format!("no template tuple has {hv} at position {j}")));
        };
        let mut out = base;
        for (&y, &b) in t.iter().zip(a_t) {
            out.insert(y, b);
        }
        if !is_partial_homomorphism(x.structure(), self.a, &out) {
            return Err(Error::Precondition("extension failed to verify".into()));
        }
        Ok(out)
    }
}

/// Orders the chain so that walking from `u` through its degree-2 vertices
/// ends at `v`; returns the ordered links and the vertices `w_0..w_τ`.
fn walk_order(h: &Hypergraph, fiber: &[usize], u: usize, v: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let len = fiber.len();
    let mut orders = Vec::new();
    for rev in [false, true] {
        let mut c = fiber.to_vec();
        if rev {
            c.reverse();
        }
        // rotations only matter for closed chains
        for s in 0..len {
            let mut r = c.clone();
            r.rotate_left(s);
            orders.push(r);
        }
    }
    'next: for chain in orders {
        let mut w = vec![u];
        for (i, &e) in chain.iter().enumerate() {
            let prev = w[i];
            if !h.edge(e).contains(&prev) {
                continue 'next;
            }
            let nxt = if i + 1 == len {
                if v == prev || !h.edge(e).contains(&v) {
                    continue 'next;
                }
                v
            } else {
                let next_edge = h.edge(chain[i + 1]);
                match h.edge(e).iter().copied().find(|&y| y != prev && h.degree(y) == 2 && next_edge.contains(&y)) {
                    Some(y) => y,
                    None => continue 'next,
                }
            };
            w.push(nxt);
        }
        return Some((chain, w));
    }
    None
}

pub fn extend_over_fiber(
    x: &OrientedMonicStructure,
    a: &RelationalStructure,
    fiber: &[usize],
    joint: &Joint,
    h: &PartialMap,
) -> Result<PartialMap> {
    Extender::new(a)?.over_fiber(x, fiber, joint, h)
}

pub fn extend_over_pendent(
    x: &OrientedMonicStructure,
    a: &RelationalStructure,
    e: usize,
    joint: &Joint,
    h: &PartialMap,
) -> Result<PartialMap> {
    Extender::new(a)?.over_pendent(x, e, joint, h)
}

/// `1/(10rτ) − β + 1`, the slack left by `β`.
fn slack(r: usize, tau: usize, beta: &Rational) -> Rational {
    rational::ratio(1, 10 * (r * tau) as i64) - beta + rational::int(1)
}

/// `min(1/n₀, (1/(10rτ) − β + 1)(r − 1)δ / (β n_A))`, exactly.
pub fn epsilon_bound(n_a: usize, r: usize, tau: usize, beta: &Rational, delta: &Rational, n0: u64) -> Result<Rational> {
    if r < 2 || tau < 1 || n_a < 1 {
        return input("need r >= 2, tau >= 1 and a nonempty template");
    }
    let s = slack(r, tau, beta);
    if *beta <= rational::int(1) || s <= rational::int(0) {
        return input(format!(
            "beta must lie strictly between 1 and 1 + 1/{}, got {}",
            10 * r * tau,
            rational::format(beta)
        ));
    }
    if *delta <= rational::int(0) || n0 == 0 {
        return input("delta and n0 must be positive");
    }
    let second = s * rational::int(r as i64 - 1) * delta / (beta * rational::int(n_a as i64));
    let first = rational::ratio(1, n0 as i64);
    Ok(if first < second { first } else { second })
}

/// `(1/(10rτ) − β + 1)(r − 1)/β`, at most 1 for admissible `β`.
pub fn epsilon_normalization(r: usize, tau: usize, beta: &Rational) -> Rational {
    slack(r, tau, beta) * rational::int(r as i64 - 1) / beta
}

#[derive(Clone, Debug)]
pub struct FoolingConfig {
    pub n: usize,
    pub p: f64,
    pub kappas: Vec<usize>,
    pub seed: u64,
    /// Fresh instances tried before giving up.
    pub runs: u64,
    /// Rejection attempts per instance.
    pub attempts_per_run: u64,
    pub lc_budget: u128,
    pub hom_budget: u64,
    pub coloring: ColoringLimits,
    /// Threshold-sparsity target `δ`; `β` is fixed halfway into its range.
    pub delta: Rational,
    /// Also require the sparsity hypothesis, not just report it.
    pub require_sparsity: bool,
}

impl FoolingConfig {
    pub fn new(n: usize, p: f64) -> Self {
        FoolingConfig {
            n,
            p,
            kappas: vec![0, 1, 2, 3],
            seed: 0,
            runs: 10,
            attempts_per_run: 20,
            lc_budget: LcOptions::default().budget,
            hom_budget: 50_000_000,
            coloring: ColoringLimits::default(),
            delta: rational::ratio(1, 10),
            require_sparsity: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LcVerdict {
    Yes,
    No,
    Budget,
}

#[derive(Clone, Debug, Serialize)]
pub struct NonHomCertificate {
    /// `chromatic` (symmetrisation needs more than `c` colours) or `search`
    /// (exhaustive homomorphism search).
    pub method: String,
    pub exact: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Hypotheses {
    pub girth_at_least_tau: Option<bool>,
    #[serde(with = "crate::rational")]
    pub beta: Rational,
    #[serde(with = "crate::rational")]
    pub gamma: Rational,
    pub threshold_sparse: Option<bool>,
    pub sparsity_mode: String,
    /// LC was run directly rather than inferred from the hypotheses.
    pub lc_checked_directly: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunSummary {
    pub run: u64,
    pub seed: u64,
    pub generated: bool,
    pub fooled_at: Vec<usize>,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FoolingReport {
    pub n_template: usize,
    pub n_weak: usize,
    pub converted_to_monic: bool,
    pub arity: usize,
    pub tau: usize,
    pub weak_chromatic_number: usize,
    pub seed: u64,
    pub run_seed: Option<u64>,
    pub runs: Vec<RunSummary>,
    pub fooled: bool,
    /// κ values at which the instance is fooled.
    pub fooled_at: Vec<usize>,
    pub lc: BTreeMap<usize, LcVerdict>,
    pub certificate: Option<NonHomCertificate>,
    pub hypotheses: Option<Hypotheses>,
    pub generation: Option<GenerationReport>,
    pub n: usize,
    pub m: usize,
    pub girth: Option<usize>,
    /// Largest fooled κ over `n`.
    pub achieved_ratio: Option<f64>,
    /// Unavailable: needs an explicit `n₀`.
    pub epsilon: Option<String>,
    #[serde(skip)]
    pub instance: Option<OrientedMonicStructure>,
}

fn to_monic(s: &RelationalStructure) -> (RelationalStructure, bool) {
    if s.is_monic() {
        (s.clone(), false)
    } else {
        (monic_product(s), true)
    }
}

/// Least `c` with `b → K_{r,c}`.
fn weak_chromatic_number(b: &RelationalStructure, r: usize) -> Result<usize> {
    for c in 1..=b.domain_size() {
        if find_homomorphism(b, &clique_structure(r, c)?)?.is_some() {
            return Ok(c);
        }
    }
    unreachable!("a loopless structure maps to K_(r,n) by the identity")
}

fn derive_seed(seed: u64, run: u64) -> u64 {
    use rand::RngCore;
    crate::generator::attempt_rng(seed, u64::MAX - run).next_u64()
}

/// Generates instances of girth at least the mixing time of `a` whose
/// symmetrisation needs more colours than `b`, and runs local consistency on
/// each until some level `κ ≥ 1` accepts.
pub fn fooling_pipeline(a: &RelationalStructure, b: &RelationalStructure, cfg: &FoolingConfig) -> Result<FoolingReport> {
    if !a.signature().compatible(b.signature()) {
        return input("template and weak template have different signatures");
    }
    let (am, ca) = to_monic(a);
    let (bm, cb) = to_monic(b);
    if has_loop(&bm) {
        return Err(Error::Precondition("weak template has a loop; every instance is accepted".into()));
    }
    if find_homomorphism(&am, &bm)?.is_none() {
        return Err(Error::Precondition("template does not map to the weak template".into()));
    }
    let ext = Extender::new(&am)?;
    let tau = ext.tau();
    let r = am.monic_arity().unwrap();
    if r < 2 {
        return Err(Error::Precondition("arity must be at least 2".into()));
    }
    let c = weak_chromatic_number(&bm, r)?;
    let beta = rational::int(1) + rational::ratio(1, 20 * (r * tau) as i64);

    let mut report = FoolingReport {
        n_template: am.domain_size(),
        n_weak: bm.domain_size(),
        converted_to_monic: ca || cb,
        arity: r,
        tau,
        weak_chromatic_number: c,
        seed: cfg.seed,
        run_seed: None,
        runs: Vec::new(),
        fooled: false,
        fooled_at: Vec::new(),
        lc: BTreeMap::new(),
        certificate: None,
        hypotheses: None,
        generation: None,
        n: 0,
        m: 0,
        girth: None,
        achieved_ratio: None,
        epsilon: Some("not computable: the source gives no explicit n0".into()),
        instance: None,
    };

    for run in 0..cfg.runs {
        let run_seed = derive_seed(cfg.seed, run);
        let mut gcfg = GenerateConfig::new(cfg.n, cfg.p, r, tau, c + 1);
        gcfg.seed = run_seed;
        gcfg.max_attempts = cfg.attempts_per_run;
        gcfg.beta = beta.clone();
        gcfg.delta = cfg.delta.clone();
        gcfg.require_sparsity = cfg.require_sparsity;
        gcfg.coloring = cfg.coloring;
        let gen = generate_verified(&gcfg)?;
        let mut summary = RunSummary {
            run,
            seed: run_seed,
            generated: gen.success(),
            fooled_at: Vec::new(),
            note: String::new(),
        };
        if !gen.success() {
            summary.note = "generation failed".into();
            report.runs.push(summary);
            if report.generation.is_none() {
                report.generation = Some(gen.report);
            }
            continue;
        }
        let hg = gen.hypergraph.clone().unwrap();
        let x = orient(&hg, run_seed);

        let certificate = non_hom_certificate(&x, &bm, &gen.report, c, cfg.hom_budget)?;
        let mut lc = BTreeMap::new();
        let mut fooled_at = Vec::new();
        for &kappa in &cfg.kappas {
            let opts = LcOptions {
                budget: cfg.lc_budget,
                ..LcOptions::default()
            };
            let v = match lc_with(x.structure(), &am, kappa, &opts) {
                Ok(res) if res.answer == Answer::Yes => LcVerdict::Yes,
                Ok(_) => LcVerdict::No,
                Err(Error::Budget { .. }) => LcVerdict::Budget,
                Err(e) => return Err(e),
            };
            if matches!(v, LcVerdict::Yes) && kappa >= 1 && certificate.exact {
                fooled_at.push(kappa);
            }
            lc.insert(kappa, v);
        }
        let sparsity = &gen.report.verified["threshold_sparsity"];
        let hyp = Hypotheses {
            girth_at_least_tau: gen.report.verified["girth"].holds,
            beta: beta.clone(),
            gamma: &cfg.delta * rational::int(hg.n() as i64),
            threshold_sparse: sparsity.holds,
            sparsity_mode: sparsity.mode.clone(),
            lc_checked_directly: true,
        };
        summary.fooled_at = fooled_at.clone();
        summary.note = if !certificate.exact {
            "instance not certified outside the weak template".into()
        } else if fooled_at.is_empty() {
            "local consistency rejected at every tested level".into()
        } else {
            "fooled".into()
        };
        report.runs.push(summary);
        let fooled = !fooled_at.is_empty();
        if fooled || report.instance.is_none() {
            report.run_seed = Some(run_seed);
            report.fooled = fooled;
            report.achieved_ratio = fooled_at.iter().max().map(|&k| k as f64 / hg.n() as f64);
            report.fooled_at = fooled_at;
            report.lc = lc;
            report.certificate = Some(certificate);
            report.hypotheses = Some(hyp);
            report.generation = Some(gen.report);
            report.n = hg.n();
            report.m = hg.m();
            report.girth = girth(&hg);
            report.instance = Some(x);
        }
        if fooled {
            break;
        }
    }
    Ok(report)
}

fn non_hom_certificate(
    x: &OrientedMonicStructure,
    b: &RelationalStructure,
    gen: &GenerationReport,
    c: usize,
    budget: u64,
) -> Result<NonHomCertificate> {
    let chrom = &gen.verified["chromatic"];
    if chrom.holds == Some(true) && chrom.mode == "exact" {
        return Ok(NonHomCertificate {
            method: "chromatic".into(),
            exact: true,
            detail: format!("{}; the weak template is {c}-colourable", chrom.detail),
        });
    }
    match HomSearch::new(x.structure(), b).with_budget(budget).find() {
        Ok(Some(_)) => Ok(NonHomCertificate {
            method: "search".into(),
            exact: false,
            detail: "a homomorphism to the weak template exists".into(),
        }),
        Ok(None) => Ok(NonHomCertificate {
            method: "search".into(),
            exact: true,
            detail: "exhaustive search found no homomorphism".into(),
        }),
        Err(Error::Budget { .. }) | Err(Error::TooLarge { .. }) => Ok(NonHomCertificate {
            method: "search".into(),
            exact: false,
            detail: "homomorphism search exhausted its budget".into(),
        }),
        Err(e) => Err(e),
    }
}
