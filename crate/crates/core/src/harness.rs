//! Regression suite for the A(n,k) family, closure fuzzing over a seeded corpus and
//! property runs for the silting machinery. Every check reports pass/fail with a witness.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, DEFAULT_MAX_PATH_LEN};
use crate::classifier::{
    catalogs_agree, module_label, classify_catalog, enumerate_indecomposables, ClassificationReport, IndecCatalog,
    DEFAULT_KNITTING_CAP,
};
use crate::derived::{
    certify, left_mutation, perp_completion, right_mutation, silting_reduce, two_term_completion, DerivedObject,
    Summand, DEFAULT_SHIFT_WINDOW,
};
use crate::error::{Error, Result};
use crate::exactla::PrimeField;
use crate::families::{generate_ank, linear_path_algebra, random_monomial_linear};
#[cfg(test)]
use crate::families::linear_monomial;
use crate::io::{builtin_name, write_algebra};
use crate::module::{ext1_dim, HomDim, Representation};
use crate::presenter::{
    gabriel_presentation, module_endomorphism_algebra, presentations_isomorphic, presents_as, DEFAULT_ISO_BUDGET,
};
use crate::taured::{
    bongartz_completion, enumerate_support_tau_tilting, is_tau_rigid, is_tau_rigid_indices, mutation_walk_count,
    tau_tilting_reduction,
};

/// Limits shared by every computation of a run.
#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub field: PrimeField,
    pub max_path_len: usize,
    pub knitting_cap: usize,
    pub shift_window: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            field: PrimeField::default(),
            max_path_len: DEFAULT_MAX_PATH_LEN,
            knitting_cap: DEFAULT_KNITTING_CAP,
            shift_window: DEFAULT_SHIFT_WINDOW,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    /// number of instances examined
    pub instances: usize,
    /// first counterexample, reproducible from the CLI
    pub witness: Option<String>,
    pub detail: String,
    pub runtime_ms: u128,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    /// control checks that may fail without failing the run
    pub informational: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.informational.extend(other.informational);
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.informational.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let line = |c: &Check| {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            let mut s = format!("{tag} {} ({} instances, {} ms) [{}]", c.name, c.instances, c.runtime_ms, c.anchor);
            if !c.detail.is_empty() {
                s += &format!(": {}", c.detail);
            }
            if let Some(w) = &c.witness {
                s += &format!("\n     witness: {w}");
            }
            s + "\n"
        };
        for c in &self.checks {
            out += &line(c);
        }
        if !self.informational.is_empty() {
            out += "informational:\n";
            for c in &self.informational {
                out += &line(c);
            }
        }
        out
    }
}

/// Runs `f` over instances; `f` returns `Ok(None)` on success and `Ok(Some(witness))` on a
/// violation. Errors count as violations.
fn run_check<I>(
    name: &str,
    anchor: &str,
    items: impl IntoIterator<Item = I>,
    f: impl Fn(&I) -> Result<Option<String>>,
) -> Check {
    let start = Instant::now();
    let mut instances = 0;
    let mut failures = 0;
    let mut witness = None;
    for item in items {
        instances += 1;
        let res = f(&item).unwrap_or_else(|e| Some(format!("error: {e}")));
        if let Some(w) = res {
            failures += 1;
            witness.get_or_insert(w);
        }
    }
    Check {
        name: name.into(),
        anchor: anchor.into(),
        status: if failures == 0 { Status::Pass } else { Status::Fail },
        instances,
        witness,
        detail: if failures == 0 { String::new() } else { format!("{failures} violations") },
        runtime_ms: start.elapsed().as_millis(),
    }
}

fn ank(cfg: &Config, n: usize, k: usize) -> Result<Algebra> {
    generate_ank(cfg.field, n, k)
}

fn ank_pairs(max_n: usize, strict: bool) -> Vec<(usize, usize)> {
    (2..=max_n).flat_map(|n| (2..=n).filter(move |&k| !strict || k < n).map(move |k| (n, k))).collect()
}

/// The tilting module `P(1)⊕⋯⊕P(k−1)⊕P(n)⊕I(k+1)⊕⋯⊕I(n)` over `A(n,k)`.
pub fn ank_tilting_module(alg: &Algebra, k: usize) -> Vec<Representation> {
    let n = alg.vertex_count();
    let mut t: Vec<Representation> = (0..k - 1).map(|v| Representation::projective(alg, v)).collect();
    t.push(Representation::projective(alg, n - 1));
    t.extend((k..n).map(|v| Representation::injective(alg, v)));
    t
}

fn check_gl_dim(cfg: &Config, max_n: usize) -> Check {
    run_check("gl_dim", "Prop §5: gl.dim A(n, k) = k - 1", ank_pairs(max_n, false), |&(n, k)| {
        let c = enumerate_indecomposables(&ank(cfg, n, k)?, cfg.knitting_cap)?;
        let g = c.gl_dim();
        Ok((g != HomDim::Finite(k - 1)).then(|| format!("A({n},{k}): gl.dim = {g}")))
    })
}

fn check_endo_tilting(cfg: &Config, max_n: usize) -> Check {
    check_endo_tilting_with(cfg, &ank_pairs(max_n, true), |n, k| ank(cfg, n, k))
}

/// The endomorphism check with `A(n,k)` replaced by `build(n, k)`; the target stays `A(n,k+1)`.
pub fn check_endo_tilting_with(
    cfg: &Config,
    pairs: &[(usize, usize)],
    build: impl Fn(usize, usize) -> Result<Algebra>,
) -> Check {
    run_check("endo_tilting", "Prop §5: End_{A(n, k)} T ≅ A(n, k + 1)", pairs.iter().copied(), |&(n, k)| {
        let alg = build(n, k)?;
        let t = ank_tilting_module(&alg, k);
        if let Some((i, j)) =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| ext1_dim(&t[i], &t[j]) != 0)
        {
            return Ok(Some(format!("A({n},{k}): Ext¹(T{}, T{}) != 0", i + 1, j + 1)));
        }
        if !is_tau_rigid(&t) {
            return Ok(Some(format!("A({n},{k}): Hom(T, τT) != 0")));
        }
        let b = module_endomorphism_algebra(&t)?;
        let target = ank(cfg, n, k + 1)?;
        Ok((!presents_as(&b, &target)?).then(|| format!("A({n},{k}): End(T) is not A({n},{})", k + 1)))
    })
}

fn check_classification(cfg: &Config, max_n: usize) -> Check {
    run_check(
        "classification",
        "Prop classification of A(n,k): A(n, 4) is a strictly shod",
        ank_pairs(max_n, false),
        |&(n, k)| {
            let c = enumerate_indecomposables(&ank(cfg, n, k)?, cfg.knitting_cap)?;
            let r = classify_catalog(&c);
            let ok = match k {
                2 => r.hereditary,
                3 => r.shod && r.gl_dim == HomDim::Finite(2),
                4 => r.strictly_shod,
                _ => !r.shod && r.witness.iter().any(|w| w.verdict == "shod" && w.module.is_some()),
            };
            Ok((!ok).then(|| format!("A({n},{k}): {}", summary(&r))))
        },
    )
}

fn summary(r: &ClassificationReport) -> String {
    format!(
        "gl.dim {}, hereditary {}, shod {}, strictly shod {}, weakly shod {}",
        r.gl_dim, r.hereditary, r.shod, r.strictly_shod, r.weakly_shod
    )
}

fn check_example_quasitilted(cfg: &Config) -> Check {
    run_check("example_quasitilted", "Example: tau-tilted alg from quasitilted", [()], |_| {
        let a = ank(cfg, 4, 3)?;
        let c = enumerate_indecomposables(&a, cfg.knitting_cap)?;
        let i4 = c.find(&Representation::injective(&a, 3)).ok_or(Error::InvalidInput("I(4) missing".into()))?;
        let u = bongartz_completion(&c, &[i4])?;
        let mut expected: Vec<usize> = [0, 1, 3].iter().map(|&v| c.projectives[v]).collect();
        expected.push(i4);
        expected.sort_unstable();
        if u != expected {
            let got: Vec<String> = u.iter().map(|&i| c.label(i)).collect();
            return Ok(Some(format!("U_I(4) = {}", got.join(" + "))));
        }
        let summands: Vec<Representation> = u.iter().map(|&i| c.modules[i].clone()).collect();
        let b = module_endomorphism_algebra(&summands)?;
        let a44 = ank(cfg, 4, 4)?;
        Ok((!presents_as(&b, &a44)?).then(|| "End(U_I(4)) is not A(4,4)".to_string()))
    })
}

fn check_example_shod(cfg: &Config) -> Check {
    run_check("example_shod", "Example: tau-tilted alg from shod is not shod; pd_B S(3) = id_B S(3) = 2", [()], |_| {
        let a = ank(cfg, 5, 4)?;
        let c = enumerate_indecomposables(&a, cfg.knitting_cap)?;
        let i5 = c.find(&Representation::injective(&a, 4)).ok_or(Error::InvalidInput("I(5) missing".into()))?;
        let u = bongartz_completion(&c, &[i5])?;
        let mut expected: Vec<usize> = [0, 1, 2, 4].iter().map(|&v| c.projectives[v]).collect();
        expected.push(i5);
        expected.sort_unstable();
        if u != expected {
            let got: Vec<String> = u.iter().map(|&i| c.label(i)).collect();
            return Ok(Some(format!("U_I(5) = {}", got.join(" + "))));
        }
        let summands: Vec<Representation> = u.iter().map(|&i| c.modules[i].clone()).collect();
        let b = gabriel_presentation(&module_endomorphism_algebra(&summands)?)?.algebra;
        let a55 = ank(cfg, 5, 5)?;
        let Some(sigma) = presentations_isomorphic(&b, &a55, DEFAULT_ISO_BUDGET)? else {
            return Ok(Some("End(U_I(5)) is not A(5,5)".into()));
        };
        let cb = enumerate_indecomposables(&b, cfg.knitting_cap)?;
        let r = classify_catalog(&cb);
        if r.shod {
            return Ok(Some("End(U_I(5)) is shod".into()));
        }
        // the vertex of B matched with vertex 3 of A(5,5)
        let v = sigma.iter().position(|&x| x == 2).expect("bijection");
        let s = cb.find(&Representation::simple(&b, v)).expect("simple in catalog");
        let ok = cb.pd[s] == HomDim::Finite(2) && cb.id[s] == HomDim::Finite(2);
        Ok((!ok).then(|| format!("pd S(3) = {}, id S(3) = {}", cb.pd[s], cb.id[s])))
    })
}

fn check_support_count(cfg: &Config) -> Check {
    run_check("support_tau_count", "support tau-tilting modules over kA_2: 5", [()], |_| {
        let a2 = linear_path_algebra(cfg.field, 2)?;
        let exhaustive = enumerate_support_tau_tilting(&a2, cfg.knitting_cap)?.len();
        let walk = mutation_walk_count(&enumerate_indecomposables(&a2, cfg.knitting_cap)?)?;
        Ok((exhaustive != 5 || walk != 5).then(|| format!("exhaustive {exhaustive}, mutation walk {walk}")))
    })
}

/// Corpus: every `A(n,k)` with `n <= max_n`, then `random` seeded monomial linear algebras.
#[derive(Clone, Debug, Serialize)]
pub struct CorpusSpec {
    pub max_n: usize,
    pub random_count: usize,
    pub random_n: usize,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { max_n: 6, random_count: 50, random_n: 6, seed: 0 }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub name: String,
    /// CLI arguments regenerating the algebra
    pub gen: String,
    pub algebra: Algebra,
}

impl CorpusSpec {
    pub fn expand(&self, cfg: &Config) -> Result<Vec<CorpusItem>> {
        let mut out = Vec::new();
        for (n, k) in ank_pairs(self.max_n, false) {
            out.push(CorpusItem {
                name: format!("A({n},{k})"),
                gen: format!("gen ank --n {n} --k {k}"),
                algebra: ank(cfg, n, k)?,
            });
        }
        for i in 0..self.random_count {
            let seed = self.seed.wrapping_mul(1_000_003).wrapping_add(i as u64);
            out.push(CorpusItem {
                name: format!("random(n={}, seed={seed})", self.random_n),
                gen: format!("gen random --n {} --seed {seed}", self.random_n),
                algebra: random_monomial_linear(cfg.field, self.random_n, seed)?,
            });
        }
        Ok(out)
    }
}

fn check_oracles(cfg: &Config, corpus: &[CorpusItem]) -> Vec<Check> {
    let knit = run_check("knitting_vs_intervals", "oracle: knitting agrees with interval enumeration", corpus, |it| {
        let c = enumerate_indecomposables(&it.algebra, cfg.knitting_cap)?;
        Ok((catalogs_agree(&c) != Some(true)).then(|| it.name.clone()))
    });
    let round = run_check("presentation_round_trip", "oracle: gabriel_presentation of build_algebra", corpus, |it| {
        let p = gabriel_presentation(&it.algebra.to_assoc())?;
        Ok(presentations_isomorphic(&p.algebra, &it.algebra, DEFAULT_ISO_BUDGET)?.is_none().then(|| it.name.clone()))
    });
    vec![knit, round]
}

/// The A(n,k) suite: dimensions, the tilting module, the classification,
/// both examples and the oracle cross-checks. `only` filters by check name.
pub fn verify_paper(cfg: &Config, only: Option<&str>) -> Result<VerificationReport> {
    let want = |name: &str| only.is_none_or(|o| name.starts_with(o));
    let mut report = VerificationReport::default();
    if want("gl_dim") {
        report.checks.push(check_gl_dim(cfg, 7));
    }
    if want("endo_tilting") {
        report.checks.push(check_endo_tilting(cfg, 7));
    }
    if want("classification") {
        report.checks.push(check_classification(cfg, 7));
    }
    if want("example_quasitilted") {
        report.checks.push(check_example_quasitilted(cfg));
    }
    if want("example_shod") {
        report.checks.push(check_example_shod(cfg));
    }
    if want("support_tau_count") {
        report.checks.push(check_support_count(cfg));
    }
    if want("knitting_vs_intervals") || want("presentation_round_trip") {
        let corpus = CorpusSpec::default().expand(cfg)?;
        report.checks.extend(check_oracles(cfg, &corpus).into_iter().filter(|c| want(&c.name)));
    }
    report.checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(report)
}

#[derive(Clone, Copy, Debug)]
struct Verdict {
    shod: bool,
    weakly_shod: bool,
    quasi_tilted: bool,
}

/// Classifications keyed by presentation text; corners and quotients repeat across the corpus.
struct VerdictCache {
    cfg: Config,
    map: Mutex<HashMap<String, Verdict>>,
}

impl VerdictCache {
    fn verdict(&self, alg: &Algebra) -> Result<Verdict> {
        let key = write_algebra(alg);
        if let Some(v) = self.map.lock().unwrap().get(&key) {
            return Ok(*v);
        }
        let r = classify_catalog(&enumerate_indecomposables(alg, self.cfg.knitting_cap)?);
        let v = Verdict { shod: r.shod, weakly_shod: r.weakly_shod, quasi_tilted: r.shod && r.gl_dim.at_most(2) };
        self.map.lock().unwrap().insert(key, v);
        Ok(v)
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    witness: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.witness.push(witness());
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.instances += other.instances;
        self.witness.extend(other.witness);
    }
}

const CLOSURE_CHECKS: [(&str, &str); 6] = [
    ("closure_quotient_shod", "Thm quotient-closed: shod is idem-quotient closed"),
    ("closure_quotient_weakly_shod", "Thm quotient-closed: is a laura algebra, then so is"),
    ("closure_corner_shod", "Thm idempotent-subalg-closed: shod is idem-subalg closed"),
    ("closure_taured_shod", "Thm quasisilted is tau-tilting reduction closed"),
    ("left_right_parts", "Prop L and R: pd on L_A, id on R_A at most 1"),
    ("control_quotient_quasi_tilted", "Remark: does not hold for tilted algebras"),
];

fn module_ref(m: &Representation) -> String {
    builtin_name(m).map_or_else(|| module_label(m), |b| format!("'{b}'"))
}

fn vertex_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << n)).map(move |m| (0..n).filter(|&v| m & (1 << v) != 0).collect())
}

fn fuzz_item(it: &CorpusItem, cache: &VerdictCache) -> Result<[Tally; 6]> {
    let cfg = cache.cfg;
    let a = &it.algebra;
    let n = a.vertex_count();
    let c = enumerate_indecomposables(a, cfg.knitting_cap)?;
    let base = cache.verdict(a)?;
    let mut t: [Tally; 6] = Default::default();
    for e in vertex_subsets(n) {
        let one_based = e.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",");
        let at = |op: &str| format!("{} [silt {}] {op} {one_based}", it.name, it.gen);
        if e.len() < n {
            let q = a.idempotent_quotient(&e)?;
            let v = cache.verdict(&q)?;
            t[0].record(!base.shod || v.shod, || at("quotient --cut"));
            t[1].record(!base.weakly_shod || v.weakly_shod, || at("quotient --cut"));
            t[5].record(!base.quasi_tilted || v.quasi_tilted, || at("quotient --cut"));
        }
        let corner = gabriel_presentation(&a.corner_algebra(&e))?.algebra;
        let v = cache.verdict(&corner)?;
        t[2].record(!base.shod || v.shod, || at("corner --keep"));
    }
    if n >= 2 {
        for z in (0..c.len()).filter(|&z| is_tau_rigid_indices(&c, &[z])) {
            let r = tau_tilting_reduction(&c, &[z])?;
            let v = cache.verdict(&r.presentation.algebra)?;
            t[3].record(!base.shod || v.shod, || format!("{} [silt {}] taured --module {}", it.name, it.gen, module_ref(&c.modules[z])));
        }
    }
    for i in c.left_part() {
        t[4].record(c.pd[i].at_most(1), || format!("{}: {} in L_A with pd {}", it.name, c.label(i), c.pd[i]));
    }
    for i in c.right_part() {
        t[4].record(c.id[i].at_most(1), || format!("{}: {} in R_A with id {}", it.name, c.label(i), c.id[i]));
    }
    Ok(t)
}

/// Closure of shod and weakly shod under idempotent quotients, of shod under corners and
/// τ-tilting reduction, over every corpus algebra and vertex subset.
pub fn closure_fuzz(cfg: &Config, spec: &CorpusSpec) -> Result<VerificationReport> {
    let start = Instant::now();
    let corpus = spec.expand(cfg)?;
    let cache = VerdictCache { cfg: *cfg, map: Mutex::new(HashMap::new()) };
    let results: Vec<(String, Result<[Tally; 6]>)> =
        corpus.par_iter().map(|it| (it.name.clone(), fuzz_item(it, &cache))).collect();
    let mut totals: [Tally; 6] = Default::default();
    let mut errors = Vec::new();
    for (name, r) in results {
        match r {
            Ok(t) => {
                for (acc, x) in totals.iter_mut().zip(t) {
                    acc.absorb(x);
                }
            }
            Err(e) => errors.push(format!("{name}: {e}")),
        }
    }
    let runtime_ms = start.elapsed().as_millis();
    let mut report = VerificationReport::default();
    for (i, (name, anchor)) in CLOSURE_CHECKS.iter().enumerate() {
        let t = &totals[i];
        let control = i == 5;
        let failed = !t.witness.is_empty() || (!control && !errors.is_empty());
        let check = Check {
            name: (*name).into(),
            anchor: (*anchor).into(),
            status: if control {
                Status::Info
            } else if failed {
                Status::Fail
            } else {
                Status::Pass
            },
            instances: t.instances,
            witness: t.witness.first().cloned().or_else(|| (!control).then(|| errors.first().cloned()).flatten()),
            detail: format!(
                "{} violations over {} algebras{}",
                t.witness.len(),
                corpus.len(),
                if errors.is_empty() { String::new() } else { format!(", {} errors", errors.len()) }
            ),
            runtime_ms,
        };
        if control {
            report.informational.push(check);
        } else {
            report.checks.push(check);
        }
    }
    report.checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(report)
}

/// A random silting object over `kA_n` reached by `steps` mutations from `A`, keeping every
/// shift inside `[-window, window]`.
pub fn random_silting(alg: &Algebra, steps: usize, window: i32, rng: &mut ChaCha8Rng) -> Result<DerivedObject> {
    let mut t = DerivedObject::regular(alg);
    for _ in 0..steps {
        let i = rng.gen_range(0..t.len());
        let mu = if rng.gen_bool(0.5) { left_mutation(&t, i)? } else { right_mutation(&t, i)? };
        if mu.result.summands().iter().all(|s| s.shift.abs() <= window) {
            t = mu.result;
        }
    }
    Ok(t)
}

fn random_subset(len: usize, rng: &mut ChaCha8Rng, proper: bool) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (0..len).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() && (!proper || s.len() < len) {
            return s;
        }
    }
}

/// Mutation and completion properties over `kA_n`, `n <= max_n`, along seeded random walks
/// inside the shift window `±window`.
pub fn silting_properties(cfg: &Config, max_n: usize, walks: usize, seed: u64, window: i32) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mutation = Tally::default();
    let mut cardinality = Tally::default();
    let mut completion = Tally::default();
    let (mut t_mut, mut t_comp) = (0u128, 0u128);
    for n in 1..=max_n {
        let alg = linear_path_algebra(cfg.field, n)?;
        let cat = enumerate_indecomposables(&alg, cfg.knitting_cap)?;
        for w in 0..walks {
            let start = Instant::now();
            let mut t = DerivedObject::regular(&alg);
            for step in 0..8 {
                let i = rng.gen_range(0..n);
                let left = rng.gen_bool(0.5);
                let mu = if left { left_mutation(&t, i) } else { right_mutation(&t, i) };
                let tag = || format!("kA_{n} walk {w} step {step}: {} at {i} of {}", if left { "left" } else { "right" }, t.label());
                let mu = match mu {
                    Ok(mu) => mu,
                    Err(e) => {
                        mutation.record(false, || format!("{}: {e}", tag()));
                        break;
                    }
                };
                let cert = certify(&mu.result);
                let changed = (0..n).filter(|&j| !mu.result.summands()[j].same_class(&t.summands()[j])).count();
                mutation.record(cert.silting && !cert.non_basic && changed == 1, || format!("{} gave {}", tag(), mu.result.label()));
                cardinality.record(mu.result.len() == n && cert.summand_classes == n, tag);
                if mu.result.summands().iter().any(|s| s.shift.abs() > window) {
                    continue;
                }
                t = mu.result;
            }
            t_mut += start.elapsed().as_millis();
            let start = Instant::now();
            let sub = random_subset(n, &mut rng, false);
            let nobj = t.select(&sub);
            match perp_completion(&nobj, &cat, cfg.shift_window) {
                Ok(out) => {
                    let full = nobj.sum(&out.complement);
                    let span = full.shift_span().map_or(0, |(lo, hi)| hi - lo) + 2;
                    let orth = out.complement.summands().iter().all(|d| {
                        nobj.summands().iter().all(|y| (-span..=span).all(|m| d.hom_dim(y, m) == 0))
                    });
                    let increasing = out.counters.iter().all(|l| l.windows(2).all(|p| p[0] < p[1]) && l.last() == Some(&n));
                    completion.record(certify(&full).silting && orth && increasing, || {
                        format!("kA_{n}: completion of {} gave {} with counters {:?}", nobj.label(), out.complement.label(), out.counters)
                    });
                }
                Err(e) => completion.record(false, || format!("kA_{n}: completion of {}: {e}", nobj.label())),
            }
            t_comp += start.elapsed().as_millis();
        }
    }
    let mk = |name: &str, anchor: &str, t: &Tally, ms: u128| Check {
        name: name.into(),
        anchor: anchor.into(),
        status: if t.witness.is_empty() { Status::Pass } else { Status::Fail },
        instances: t.instances,
        witness: t.witness.first().cloned(),
        detail: format!("{} violations", t.witness.len()),
        runtime_ms: ms,
    };
    let mut report = VerificationReport::default();
    report.checks.push(mk("silting_mutation", "§2.2 left mutation of T with respect to M", &mutation, t_mut));
    report.checks.push(mk("silting_cardinality", "Cor cardinality: silting if and only if |T| = rank K0", &cardinality, t_mut));
    report.checks.push(mk("perp_completion", "Thm perp-completion: (thick D, thick N) is a torsion pair", &completion, t_comp));
    Ok(report)
}

/// Silting reduction against `End(T)/⟨e_D⟩` on random `(T, D)`, and against τ-tilting
/// reduction on matched two-term instances `T = T_D`, `D = Z`.
pub fn reduction_consistency(cfg: &Config, count: usize, seed: u64, window: i32) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algs = [linear_path_algebra(cfg.field, 3)?, linear_path_algebra(cfg.field, 4)?];
    let cats: Vec<IndecCatalog> =
        algs.iter().map(|a| enumerate_indecomposables(a, cfg.knitting_cap)).collect::<Result<_>>()?;
    let mut instances = Vec::new();
    for i in 0..count {
        let alg = &algs[i % 2];
        let t = random_silting(alg, 6, window, &mut rng)?;
        let d = random_subset(t.len(), &mut rng, true);
        instances.push((t, d));
    }
    let silting = run_check(
        "silting_reduction",
        "Thm idempotent-factor-closed: End(T)/<e_D> ≅ End(S_N)",
        &instances,
        |(t, d)| {
            let r = silting_reduce(t, d)?;
            Ok((!r.consistent()?).then(|| format!("T = {}, D = {:?}, S_N = {}", t.label(), d, r.s_n.label())))
        },
    );
    let mut matched = Vec::new();
    for i in 0..count {
        let which = i % 2;
        let c = &cats[which];
        let mut pool: Vec<usize> = (0..c.len()).collect();
        pool.shuffle(&mut rng);
        let mut z: Vec<usize> = Vec::new();
        let want = rng.gen_range(1..algs[which].vertex_count());
        for x in pool {
            let mut cand = z.clone();
            cand.push(x);
            if z.len() < want && is_tau_rigid_indices(c, &cand) {
                z = cand;
            }
        }
        matched.push((which, z));
    }
    let jasso = run_check(
        "taured_vs_silting_reduction",
        "Thm tau-tilt red and silt red",
        &matched,
        |(which, z)| {
            let (alg, c) = (&algs[*which], &cats[*which]);
            let d = DerivedObject::from_summands(alg, z.iter().map(|&i| Summand::new(c.modules[i].clone(), 0)).collect());
            let td = two_term_completion(&DerivedObject::regular(alg), &d)?;
            let u = bongartz_completion(c, z)?;
            let u_obj =
                DerivedObject::from_summands(alg, u.iter().map(|&i| Summand::new(c.modules[i].clone(), 0)).collect());
            if !td.same_as(&u_obj) {
                return Ok(Some(format!("T_D = {} but U_Z = {}", td.label(), u_obj.label())));
            }
            let d_idx: Vec<usize> = (0..td.len()).filter(|&i| d.position_of(&td.summands()[i]).is_some()).collect();
            let r = silting_reduce(&td, &d_idx)?;
            let tau = tau_tilting_reduction(c, z)?;
            let label = || z.iter().map(|&i| c.label(i)).collect::<Vec<_>>().join(" + ");
            if !r.consistent()? {
                return Ok(Some(format!("Z = {}: silting reduction inconsistent", label())));
            }
            if tau.c.dim() != r.endo_sn.dim() {
                return Ok(Some(format!("Z = {}: dims {} vs {}", label(), tau.c.dim(), r.endo_sn.dim())));
            }
            if tau.c.dim() == 0 {
                return Ok(None);
            }
            let p = gabriel_presentation(&r.endo_sn)?.algebra;
            let iso = presentations_isomorphic(&tau.presentation.algebra, &p, DEFAULT_ISO_BUDGET)?;
            Ok(iso.is_none().then(|| format!("Z = {}: presentations differ", label())))
        },
    );
    Ok(VerificationReport { checks: vec![silting, jasso], informational: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_examples_pass() {
        let cfg = Config::default();
        for only in ["example", "support"] {
            let r = verify_paper(&cfg, Some(only)).unwrap();
            assert!(r.passed(), "{}", r.render_text());
            assert!(!r.checks.is_empty());
        }
    }

    #[test]
    fn small_closure_run() {
        let cfg = Config::default();
        let spec = CorpusSpec { max_n: 4, random_count: 3, random_n: 4, seed: 7 };
        let r = closure_fuzz(&cfg, &spec).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert_eq!(r.checks.len(), 5);
        assert_eq!(r.informational.len(), 1);
    }

    #[test]
    fn injected_wrong_relation_is_caught() {
        // A(4,3) with the zero relation moved from a2.a1 to a3.a2
        let cfg = Config::default();
        let c = check_endo_tilting_with(&cfg, &[(4, 3)], |n, _| linear_monomial(cfg.field, n, &[2]));
        assert_eq!(c.status, Status::Fail);
        assert!(c.witness.unwrap().starts_with("A(4,3)"));
        let c = check_endo_tilting_with(&cfg, &[(4, 3)], |n, k| ank(&cfg, n, k));
        assert_eq!(c.status, Status::Pass);
    }

    #[test]
    fn report_renders() {
        let cfg = Config::default();
        let r = reduction_consistency(&cfg, 2, 1, 3).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["checks"][0]["status"], "pass");
    }
}
