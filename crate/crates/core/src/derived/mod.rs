//! The bounded derived category of a hereditary algebra: objects as sums of shifted
//! indecomposable modules, realized by two-term projective complexes.
//!
//! Over a hereditary algebra `Hom(X[s], Y[t])` is `Hom(X, Y)` for `t = s`, `Ext¹(X, Y)` for
//! `t = s + 1` and zero otherwise, so every vanishing test below only looks at shift
//! offsets 0 and 1.

mod complex;
#[cfg(test)]
mod tests;

pub use complex::{cone, ChainMap, HomSpace, ProjComplex};

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::assoc::AssociativeAlgebra;
use crate::classifier::{module_label, IndecCatalog};
use crate::error::{Error, Result};
use crate::module::{decompose, ext1_dim, hom_dim, is_isomorphic_indecomposable, proj_resolution, ProjMap, Representation};
use crate::presenter::{endomorphism_algebra, gabriel_presentation, presentations_isomorphic, DEFAULT_ISO_BUDGET};

/// Default cap on the width of the shift window searched by [`perp_completion`].
pub const DEFAULT_SHIFT_WINDOW: usize = 8;

/// An indecomposable module placed in degree `-shift`.
#[derive(Clone)]
pub struct Summand {
    pub module: Representation,
    pub shift: i32,
}

impl Summand {
    pub fn new(module: Representation, shift: i32) -> Self {
        Summand { module, shift }
    }

    pub fn label(&self) -> String {
        format!("{}[{}]", module_label(&self.module), self.shift)
    }

    pub fn same_class(&self, other: &Summand) -> bool {
        self.shift == other.shift && is_isomorphic_indecomposable(&self.module, &other.module)
    }

    /// `dim Hom(self, other[m])`.
    pub fn hom_dim(&self, other: &Summand, m: i32) -> usize {
        match other.shift + m - self.shift {
            0 => hom_dim(&self.module, &other.module),
            1 => ext1_dim(&self.module, &other.module),
            _ => 0,
        }
    }

    /// `Hom(self, other[ℤ]) = 0`.
    pub fn orthogonal_to(&self, other: &Summand) -> bool {
        hom_dim(&self.module, &other.module) == 0 && ext1_dim(&self.module, &other.module) == 0
    }

    /// Minimal projective resolution `P_1 -> P_0` placed in degrees `-shift-1, -shift`.
    pub fn complex(&self) -> Result<ProjComplex> {
        let res = proj_resolution(&self.module, 2);
        match res.terms.len() {
            1 => Ok(ProjComplex::new(-self.shift, res.terms, Vec::new())),
            2 => Ok(ProjComplex::new(-self.shift - 1, vec![res.terms[1].clone(), res.terms[0].clone()], res.differentials)),
            _ => Err(Error::InvalidInput(format!(
                "{} has projective dimension above 1; the algebra is not hereditary",
                module_label(&self.module)
            ))),
        }
    }
}

impl fmt::Debug for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A finite direct sum of shifted indecomposable modules.
#[derive(Clone)]
pub struct DerivedObject {
    alg: Algebra,
    summands: Vec<Summand>,
    complexes: OnceLock<Vec<ProjComplex>>,
}

impl fmt::Debug for DerivedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl DerivedObject {
    /// Splits every module into indecomposables; the algebra must be hereditary on them.
    pub fn new(alg: &Algebra, parts: Vec<(Representation, i32)>) -> Result<Self> {
        let mut summands = Vec::new();
        for (m, s) in parts {
            for x in decompose(&m)? {
                summands.push(Summand::new(x, s));
            }
        }
        let obj = Self::from_summands(alg, summands);
        obj.complexes()?;
        Ok(obj)
    }

    pub fn from_summands(alg: &Algebra, summands: Vec<Summand>) -> Self {
        DerivedObject { alg: alg.clone(), summands, complexes: OnceLock::new() }
    }

    pub fn zero(alg: &Algebra) -> Self {
        Self::from_summands(alg, Vec::new())
    }

    /// The regular module `A` in degree 0.
    pub fn regular(alg: &Algebra) -> Self {
        let s = (0..alg.vertex_count()).map(|v| Summand::new(Representation::projective(alg, v), 0)).collect();
        Self::from_summands(alg, s)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn label(&self) -> String {
        if self.summands.is_empty() {
            return "0".into();
        }
        self.summands.iter().map(Summand::label).collect::<Vec<_>>().join(" + ")
    }

    pub fn shifted(&self, k: i32) -> Self {
        let s = self.summands.iter().map(|x| Summand::new(x.module.clone(), x.shift + k)).collect();
        Self::from_summands(&self.alg, s)
    }

    pub fn select(&self, idx: &[usize]) -> Self {
        Self::from_summands(&self.alg, idx.iter().map(|&i| self.summands[i].clone()).collect())
    }

    pub fn without(&self, i: usize) -> Self {
        let idx: Vec<usize> = (0..self.len()).filter(|&j| j != i).collect();
        self.select(&idx)
    }

    pub fn with(&self, extra: Summand) -> Self {
        let mut s = self.summands.clone();
        s.push(extra);
        Self::from_summands(&self.alg, s)
    }

    pub fn sum(&self, other: &DerivedObject) -> Self {
        let mut s = self.summands.clone();
        s.extend(other.summands.iter().cloned());
        Self::from_summands(&self.alg, s)
    }

    pub fn shift_span(&self) -> Option<(i32, i32)> {
        let lo = self.summands.iter().map(|s| s.shift).min()?;
        let hi = self.summands.iter().map(|s| s.shift).max()?;
        Some((lo, hi))
    }

    /// Per-summand complexes.
    pub fn complexes(&self) -> Result<&[ProjComplex]> {
        if let Some(c) = self.complexes.get() {
            return Ok(c);
        }
        let c = self.summands.iter().map(Summand::complex).collect::<Result<Vec<_>>>()?;
        Ok(self.complexes.get_or_init(|| c))
    }

    pub fn complex(&self) -> Result<ProjComplex> {
        let parts = self.complexes()?;
        let refs: Vec<&ProjComplex> = parts.iter().collect();
        Ok(ProjComplex::direct_sum(&self.alg, &refs))
    }

    /// Canonical form `⊕ H^d(C)[-d]` of a complex; summands sorted by shift, then dimension vector.
    pub fn from_complex(alg: &Algebra, c: &ProjComplex) -> Result<Self> {
        let mut summands = Vec::new();
        for (d, h) in c.cohomology(alg) {
            for x in decompose(&h)? {
                summands.push(Summand::new(x, -d));
            }
        }
        summands.sort_by(|a, b| a.shift.cmp(&b.shift).then_with(|| a.module.dims().cmp(b.module.dims())));
        Ok(Self::from_summands(alg, summands))
    }

    /// Indices of a maximal set of pairwise non-isomorphic summands.
    pub fn basic_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for i in 0..self.len() {
            if !out.iter().any(|&j| self.summands[j].same_class(&self.summands[i])) {
                out.push(i);
            }
        }
        out
    }

    pub fn basic(&self) -> Self {
        self.select(&self.basic_indices())
    }

    pub fn position_of(&self, s: &Summand) -> Option<usize> {
        self.summands.iter().position(|x| x.same_class(s))
    }

    /// Same summand classes with multiplicity.
    pub fn same_as(&self, other: &DerivedObject) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut used = vec![false; other.len()];
        self.summands.iter().all(|x| match (0..other.len()).find(|&j| !used[j] && other.summands[j].same_class(x)) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        })
    }
}

/// `Hom_{D^b}(X, Y)` as chain maps of the projective realizations up to homotopy.
pub fn dhom(x: &DerivedObject, y: &DerivedObject) -> Result<HomSpace> {
    Ok(HomSpace::new(&x.alg, &x.complex()?, &y.complex()?))
}

pub fn dhom_basis(x: &DerivedObject, y: &DerivedObject) -> Result<Vec<ChainMap>> {
    Ok(dhom(x, y)?.basis())
}

/// Componentwise `dim Hom(X, Y)`.
pub fn dhom_dim(x: &DerivedObject, y: &DerivedObject) -> usize {
    x.summands.iter().map(|a| y.summands.iter().map(|b| a.hom_dim(b, 0)).sum::<usize>()).sum()
}

/// A cone together with its canonical form.
#[derive(Clone, Debug)]
pub struct Cone {
    pub complex: ProjComplex,
    pub object: DerivedObject,
    /// `Y -> C`
    pub inclusion: ChainMap,
    /// `C -> X[1]`
    pub projection: ChainMap,
}

/// Cone of `f: X -> Y`, given on the complexes of `x` and `y`.
pub fn dcone(x: &DerivedObject, y: &DerivedObject, f: &ChainMap) -> Result<Cone> {
    let (complex, inclusion, projection) = cone(&x.alg, &x.complex()?, &y.complex()?, f);
    let object = DerivedObject::from_complex(&x.alg, &complex)?;
    Ok(Cone { complex, object, inclusion, projection })
}

/// Summands ordered by shift with `Hom(T_j, T_i) = 0` for `i < j`; ties by dimension vector.
/// Returns indices into `t`.
pub fn canonical_ordering(t: &DerivedObject) -> Result<Vec<usize>> {
    let n = t.len();
    let s = &t.summands;
    let mut order = Vec::with_capacity(n);
    let mut shifts: Vec<i32> = s.iter().map(|x| x.shift).collect();
    shifts.sort_unstable();
    shifts.dedup();
    for sh in shifts {
        let mut left: Vec<usize> = (0..n).filter(|&i| s[i].shift == sh).collect();
        // edge i -> j when Hom(T_i, T_j) != 0 between distinct classes
        let edge = |i: usize, j: usize| !s[i].same_class(&s[j]) && s[i].hom_dim(&s[j], 0) > 0;
        while !left.is_empty() {
            let mut ready: Vec<usize> = left.iter().copied().filter(|&j| !left.iter().any(|&i| i != j && edge(i, j))).collect();
            if ready.is_empty() {
                return Err(Error::CycleDetected);
            }
            ready.sort_by(|&a, &b| s[a].module.dims().cmp(s[b].module.dims()).then(a.cmp(&b)));
            let next = ready[0];
            order.push(next);
            left.retain(|&i| i != next);
        }
    }
    Ok(order)
}

/// Outcome of the presilting and silting tests.
#[derive(Clone, Debug, Serialize)]
pub struct SiltingCertificate {
    /// `(i, j, m)` with `Hom(T_i, T_j[m]) != 0`, `m > 0`
    pub failures: Vec<(usize, usize, i32)>,
    /// number of checked pairs `(i, j, m)`
    pub checked: usize,
    pub summand_classes: usize,
    pub rank: usize,
    pub non_basic: bool,
    pub presilting: bool,
    pub silting: bool,
}

/// Checks `Hom(T, T[m]) = 0` for `1 <= m <= span + 1`; nothing else can be nonzero.
pub fn certify(t: &DerivedObject) -> SiltingCertificate {
    let span = t.shift_span().map_or(0, |(lo, hi)| hi - lo);
    let mut failures = Vec::new();
    let mut checked = 0;
    for (i, a) in t.summands.iter().enumerate() {
        for (j, b) in t.summands.iter().enumerate() {
            for m in 1..=span + 1 {
                checked += 1;
                if a.hom_dim(b, m) > 0 {
                    failures.push((i, j, m));
                }
            }
        }
    }
    let classes = t.basic_indices().len();
    let presilting = failures.is_empty();
    SiltingCertificate {
        failures,
        checked,
        summand_classes: classes,
        rank: t.alg.vertex_count(),
        non_basic: classes != t.len(),
        presilting,
        silting: presilting && classes == t.alg.vertex_count(),
    }
}

pub fn is_presilting(t: &DerivedObject) -> bool {
    certify(t).presilting
}

pub fn is_silting(t: &DerivedObject) -> bool {
    certify(t).silting
}

/// `Hom(T, M[i]) = 0` for every indecomposable `M` and `i ∉ {0, 1}`.
pub fn is_two_term(t: &DerivedObject, catalog: &IndecCatalog) -> bool {
    t.summands.iter().all(|x| {
        let hom_bad = !(0..=1).contains(&x.shift);
        let ext_bad = !(0..=1).contains(&(x.shift + 1));
        catalog.modules.iter().all(|m| {
            !(hom_bad && hom_dim(&x.module, m) > 0) && !(ext_bad && ext1_dim(&x.module, m) > 0)
        })
    })
}

/// Indecomposables `M` with `Hom(X, M) = 0 = Ext¹(X, M)` for every summand module `X` of `D`.
pub fn perpendicular_category(d: &DerivedObject, catalog: &IndecCatalog) -> Vec<usize> {
    (0..catalog.len())
        .filter(|&i| {
            let m = &catalog.modules[i];
            d.summands.iter().all(|x| hom_dim(&x.module, m) == 0 && ext1_dim(&x.module, m) == 0)
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// Minimal left (`f: M -> E`) or right (`f: E -> M`) approximation of `m` by `add(targets)`.
/// Returns the chosen targets (indices into `targets`, with repetition) and the map.
fn approximation(
    m: &DerivedObject,
    targets: &[DerivedObject],
    side: Side,
) -> Result<(Vec<usize>, Vec<ChainMap>, Vec<HomSpace>)> {
    let alg = &m.alg;
    let mc = m.complex()?;
    let tc: Vec<ProjComplex> = targets.iter().map(DerivedObject::complex).collect::<Result<_>>()?;
    let spaces: Vec<HomSpace> = tc
        .iter()
        .map(|t| if side == Side::Left { HomSpace::new(alg, &mc, t) } else { HomSpace::new(alg, t, &mc) })
        .collect();
    let between: Vec<Vec<HomSpace>> =
        tc.iter().map(|a| tc.iter().map(|b| HomSpace::new(alg, a, b)).collect()).collect();
    let mut chosen: Vec<(usize, ChainMap)> = Vec::new();
    for (j, s) in spaces.iter().enumerate() {
        for phi in s.basis() {
            chosen.push((j, phi));
        }
    }
    // does `set` still approximate: Hom(M, T_k) = Σ Hom(T_l, T_k) ∘ φ_l (dually on the right)?
    let approximates = |set: &[(usize, ChainMap)]| -> bool {
        (0..targets.len()).all(|k| {
            let mut images = Vec::new();
            for (l, phi) in set {
                let hs = if side == Side::Left { &between[*l][k] } else { &between[k][*l] };
                for g in hs.basis() {
                    images.push(if side == Side::Left { g.compose(alg, phi) } else { phi.compose(alg, &g) });
                }
            }
            spaces[k].rank_of(&images) == spaces[k].dim()
        })
    };
    let mut i = 0;
    while i < chosen.len() {
        let mut rest = chosen.clone();
        rest.remove(i);
        if approximates(&rest) {
            chosen = rest;
        } else {
            i += 1;
        }
    }
    let (idx, maps) = chosen.into_iter().unzip();
    Ok((idx, maps, spaces))
}

/// Stacks `φ_l: M -> T_{j_l}` into `M -> ⊕ T_{j_l}` (left) or `T_{j_l} -> M` into `⊕ T_{j_l} -> M`.
fn assemble(alg: &Algebra, m: &ProjComplex, parts: &[&ProjComplex], maps: &[ChainMap], side: Side) -> ChainMap {
    let sum = ProjComplex::direct_sum(alg, parts);
    let mut out = ChainMap::default();
    if sum.is_zero() || m.is_zero() {
        return out;
    }
    for d in m.lo.max(sum.lo)..=m.hi().min(sum.hi()) {
        let mut c = if side == Side::Left {
            ProjMap::zero(alg, m.term(d), sum.term(d))
        } else {
            ProjMap::zero(alg, sum.term(d), m.term(d))
        };
        let mut off = 0;
        for (p, phi) in parts.iter().zip(maps) {
            if let Some(x) = phi.comps.get(&d) {
                if side == Side::Left {
                    complex::place(&mut c, off, 0, x);
                } else {
                    complex::place(&mut c, 0, off, x);
                }
            }
            off += p.term(d).len();
        }
        out.comps.insert(d, c);
    }
    out
}

/// A mutation `T = M ⊕ T̄ ↦ N ⊕ T̄` at one summand.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub result: DerivedObject,
    /// position of the new summand in `result` (the position of `M` in `T`)
    pub position: usize,
    /// summand indices of `T` (with repetition) forming the approximation
    pub approximation: Vec<usize>,
}

fn mutate(t: &DerivedObject, i: usize, side: Side) -> Result<Mutation> {
    let alg = &t.alg;
    let m = t.select(&[i]);
    let others: Vec<usize> = (0..t.len()).filter(|&j| j != i).collect();
    let targets: Vec<DerivedObject> = others.iter().map(|&j| t.select(&[j])).collect();
    let (idx, maps, _) = approximation(&m, &targets, side)?;
    let parts: Vec<ProjComplex> = idx.iter().map(|&l| targets[l].complex()).collect::<Result<_>>()?;
    let refs: Vec<&ProjComplex> = parts.iter().collect();
    let mc = m.complex()?;
    let f = assemble(alg, &mc, &refs, &maps, side);
    let e = ProjComplex::direct_sum(alg, &refs);
    let n = match side {
        Side::Left => DerivedObject::from_complex(alg, &cone(alg, &mc, &e, &f).0)?,
        Side::Right => DerivedObject::from_complex(alg, &cone(alg, &e, &mc, &f).0)?.shifted(-1),
    };
    if n.len() != 1 {
        return Err(Error::NotSilting(format!("mutation of {} at {} produced {}", t.label(), m.label(), n.label())));
    }
    let mut summands = t.summands.clone();
    summands[i] = n.summands[0].clone();
    let result = DerivedObject::from_summands(alg, summands);
    let cert = certify(&result);
    if !cert.silting || cert.non_basic {
        return Err(Error::NotSilting(format!("mutation produced {}", result.label())));
    }
    Ok(Mutation { result, position: i, approximation: idx.iter().map(|&l| others[l]).collect() })
}

/// `μ⁻_M(T)`: replaces `M = T_i` by the cone of its minimal left `add T̄`-approximation.
pub fn left_mutation(t: &DerivedObject, i: usize) -> Result<Mutation> {
    if !is_silting(t) {
        return Err(Error::NotSilting(t.label()));
    }
    mutate(t, i, Side::Left)
}

/// `μ⁺_M(T)`: replaces `M = T_i` by the cocone of its minimal right `add T̄`-approximation.
/// Inverse to [`left_mutation`] at the same position.
pub fn right_mutation(t: &DerivedObject, i: usize) -> Result<Mutation> {
    if !is_silting(t) {
        return Err(Error::NotSilting(t.label()));
    }
    mutate(t, i, Side::Right)
}

/// Greedy completion of a presilting object inside a growing shift window.
fn initial_completion(n: &DerivedObject, catalog: &IndecCatalog, window_cap: usize) -> Result<DerivedObject> {
    let rank = n.alg.vertex_count();
    let (lo, hi) = n.shift_span().unwrap_or((0, 0));
    let base = (hi - lo) as usize;
    let (mut lo, mut hi) = (lo - 1, hi + 1);
    loop {
        // the cap bounds the window beyond the span of `n` itself
        let width = (hi - lo + 1) as usize - base;
        if width > window_cap {
            return Err(Error::CompletionSearchExhausted(window_cap));
        }
        let mut cur = n.clone();
        'scan: for s in lo..=hi {
            for m in &catalog.modules {
                if cur.len() == rank {
                    break 'scan;
                }
                let cand = Summand::new(m.clone(), s);
                if cur.position_of(&cand).is_some() {
                    continue;
                }
                let next = cur.with(cand);
                if is_presilting(&next) {
                    cur = next;
                }
            }
        }
        if cur.len() == rank {
            return Ok(cur.select(&(n.len()..rank).collect::<Vec<_>>()));
        }
        lo -= 1;
        hi += 1;
    }
}

/// Result of [`perp_completion`].
#[derive(Clone, Debug)]
pub struct PerpCompletion {
    pub complement: DerivedObject,
    /// the counter `p` after each step, one sequence per complement summand
    pub counters: Vec<Vec<usize>>,
}

/// `p_T - 1`: the length of the initial run of `A_i` (in the given order) with
/// `Hom(X, A_i[ℤ]) = 0`.
fn counter(a: &DerivedObject, order: &[usize], x: &Summand) -> usize {
    order.iter().take_while(|&&i| x.orthogonal_to(&a.summands[i])).count()
}

/// Completes a presilting `N` to a silting `N ⊕ D` with `Hom(D, N[ℤ]) = 0`.
///
/// Starts from any completion `N ⊕ U` and replaces each `U_i` in turn: with the rest fixed,
/// left mutations at the free summand raise the counter `p` until it is orthogonal to
/// everything else.
pub fn perp_completion(n: &DerivedObject, catalog: &IndecCatalog, window_cap: usize) -> Result<PerpCompletion> {
    let n = n.basic();
    if !is_presilting(&n) {
        return Err(Error::InvalidInput(format!("{} is not presilting", n.label())));
    }
    let rank = n.alg.vertex_count();
    let u = initial_completion(&n, catalog, window_cap)?;
    let mut current = n.sum(&u);
    let mut counters = Vec::new();

    for pos in n.len()..rank {
        let a = current.without(pos);
        let order = canonical_ordering(&a)?;
        let mut x = current.summands[pos].clone();
        let mut log = Vec::new();
        loop {
            let p = counter(&a, &order, &x) + 1;
            if let Some(&prev) = log.last() {
                if p <= prev {
                    return Err(Error::InvalidInput(format!("completion counter did not increase ({prev} -> {p})")));
                }
            }
            log.push(p);
            if p == rank {
                break;
            }
            let last = a.len();
            let mut mu = left_mutation(&a.with(x.clone()), last)?;
            // a zero approximation only shifts X, which leaves p unchanged; fold such
            // steps into the next counted one
            let shift_cap = a.with(x.clone()).shift_span().map_or(0, |(lo, hi)| (hi - lo) as usize) + 2;
            let mut shifts = 0;
            while mu.approximation.is_empty() {
                shifts += 1;
                if shifts > shift_cap {
                    return Err(Error::ApproximationDiverged(shift_cap));
                }
                x = mu.result.summands[last].clone();
                mu = left_mutation(&a.with(x.clone()), last)?;
            }
            let y = mu.result.summands[last].clone();
            let hits_p = mu.approximation.iter().any(|&j| a.summands[j].same_class(&a.summands[order[p - 1]]));
            x = if hits_p {
                y
            } else {
                let t2 = a.with(y);
                left_mutation(&t2, last)?.result.summands[last].clone()
            };
        }
        let mut s = current.summands.clone();
        s[pos] = x;
        current = DerivedObject::from_summands(&n.alg, s);
        counters.push(log);
    }
    let complement = current.select(&(n.len()..rank).collect::<Vec<_>>());
    if !is_silting(&current) || !complement.summands.iter().all(|d| n.summands.iter().all(|y| d.orthogonal_to(y))) {
        return Err(Error::NotSilting(format!("completion {} failed its certificate", current.label())));
    }
    Ok(PerpCompletion { complement, counters })
}

/// Morphisms between summands of a fixed object, tagged by source and target index.
#[derive(Clone)]
struct Tagged {
    src: usize,
    dst: usize,
    map: ChainMap,
}

/// `End_{D^b}(⊕ T_i)` with one vertex per summand, in summand order.
pub fn derived_endomorphism_algebra(t: &DerivedObject) -> Result<AssociativeAlgebra> {
    let alg = &t.alg;
    let cs = t.complexes()?;
    let spaces: Vec<Vec<HomSpace>> = cs.iter().map(|a| cs.iter().map(|b| HomSpace::new(alg, a, b)).collect()).collect();
    endomorphism_algebra(
        alg.field(),
        t.len(),
        |i, j| spaces[i][j].basis().into_iter().map(|map| Tagged { src: i, dst: j, map }).collect(),
        |g: &Tagged, f: &Tagged| Tagged { src: f.src, dst: g.dst, map: g.map.compose(alg, &f.map) },
        |x: &Tagged| spaces[x.src][x.dst].normal_form(&x.map),
        |i| Tagged { src: i, dst: i, map: cs[i].identity(alg) },
    )
}

/// Result of [`silting_reduce`].
#[derive(Clone, Debug)]
pub struct SiltingReduction {
    /// `S_N`, one summand per summand of `N` in order
    pub s_n: DerivedObject,
    /// `End(T)/⟨e_D⟩`
    pub endo_t_mod_ed: AssociativeAlgebra,
    /// `End(S_N)`
    pub endo_sn: AssociativeAlgebra,
    /// approximation rounds used per summand of `N`
    pub rounds: Vec<usize>,
}

impl SiltingReduction {
    /// Whether the two algebras have isomorphic Gabriel presentations.
    pub fn consistent(&self) -> Result<bool> {
        if self.endo_t_mod_ed.dim() != self.endo_sn.dim() {
            return Ok(false);
        }
        if self.endo_sn.dim() == 0 {
            return Ok(true);
        }
        let p = gabriel_presentation(&self.endo_t_mod_ed)?;
        let q = gabriel_presentation(&self.endo_sn)?;
        Ok(presentations_isomorphic(&p.algebra, &q.algebra, DEFAULT_ISO_BUDGET)?.is_some())
    }
}

/// Passes from `Y` to the cone of its minimal right `add(D[ℤ])`-approximation until
/// `Hom(D[ℤ], Y) = 0`. Returns the final object and the number of rounds.
fn thick_orthogonal(y: &DerivedObject, d: &DerivedObject, cap: usize) -> Result<(DerivedObject, usize)> {
    let alg = &y.alg;
    let mut cur = y.clone();
    for round in 0..=cap {
        // D_k[i] maps to Y_j only for i ∈ {t_j - s_k - 1, t_j - s_k}
        let mut shifts: BTreeSet<(usize, i32)> = BTreeSet::new();
        for (k, dk) in d.summands.iter().enumerate() {
            for yj in &cur.summands {
                for i in [yj.shift - dk.shift - 1, yj.shift - dk.shift] {
                    let probe = Summand::new(dk.module.clone(), dk.shift + i);
                    if probe.hom_dim(yj, 0) > 0 {
                        shifts.insert((k, i));
                    }
                }
            }
        }
        if shifts.is_empty() {
            return Ok((cur, round));
        }
        let keys: Vec<(usize, i32)> = shifts.into_iter().collect();
        let targets: Vec<DerivedObject> = keys
            .iter()
            .map(|&(k, i)| DerivedObject::from_summands(alg, vec![Summand::new(d.summands[k].module.clone(), d.summands[k].shift + i)]))
            .collect();
        let (idx, maps, _) = approximation(&cur, &targets, Side::Right)?;
        let parts: Vec<ProjComplex> = idx.iter().map(|&l| targets[l].complex()).collect::<Result<_>>()?;
        let refs: Vec<&ProjComplex> = parts.iter().collect();
        let yc = cur.complex()?;
        let g = assemble(alg, &yc, &refs, &maps, Side::Right);
        let e = ProjComplex::direct_sum(alg, &refs);
        cur = DerivedObject::from_complex(alg, &cone(alg, &e, &yc, &g).0)?;
    }
    Err(Error::ApproximationDiverged(cap))
}

/// Silting reduction of `T = D ⊕ N` at the summands `d` of `T`.
pub fn silting_reduce(t: &DerivedObject, d: &[usize]) -> Result<SiltingReduction> {
    if !is_silting(t) {
        return Err(Error::NotSilting(t.label()));
    }
    let alg = &t.alg;
    let dobj = t.select(d);
    let n_idx: Vec<usize> = (0..t.len()).filter(|i| !d.contains(i)).collect();
    let span = t.shift_span().map_or(0, |(lo, hi)| hi - lo) as usize;
    let cap = 2 * dobj.len().max(1) * (span + 2);
    let mut s_n = Vec::new();
    let mut rounds = Vec::new();
    for &i in &n_idx {
        let (y, r) = thick_orthogonal(&t.select(&[i]), &dobj, cap)?;
        if y.len() != 1 {
            return Err(Error::NotSilting(format!("reduction of {} gave {}", t.summands[i].label(), y.label())));
        }
        s_n.push(y.summands[0].clone());
        rounds.push(r);
    }
    let s_n = DerivedObject::from_summands(alg, s_n);
    let endo_t = derived_endomorphism_algebra(t)?;
    let endo_t_mod_ed = endo_t.quotient_by_idempotents(d);
    let endo_sn = derived_endomorphism_algebra(&s_n)?;
    Ok(SiltingReduction { s_n, endo_t_mod_ed, endo_sn, rounds })
}

/// Jasso's two-term completion `T_D = X_D ⊕ D` of a presilting `D`, from the triangle
/// `T -> X_D -> D' -> T[1]` with `D' -> T[1]` a minimal right `add D`-approximation.
pub fn two_term_completion(t: &DerivedObject, d: &DerivedObject) -> Result<DerivedObject> {
    let alg = &t.alg;
    let t1 = t.shifted(1);
    let targets: Vec<DerivedObject> = (0..d.len()).map(|i| d.select(&[i])).collect();
    let (idx, maps, _) = approximation(&t1, &targets, Side::Right)?;
    let parts: Vec<ProjComplex> = idx.iter().map(|&l| targets[l].complex()).collect::<Result<_>>()?;
    let refs: Vec<&ProjComplex> = parts.iter().collect();
    let tc = t1.complex()?;
    let g = assemble(alg, &tc, &refs, &maps, Side::Right);
    let e = ProjComplex::direct_sum(alg, &refs);
    let x_d = DerivedObject::from_complex(alg, &cone(alg, &e, &tc, &g).0)?.shifted(-1);
    let out = d.sum(&x_d).basic();
    if !is_silting(&out) {
        return Err(Error::NotSilting(format!("two-term completion {} is not silting", out.label())));
    }
    Ok(out)
}
