//! τ-rigid modules, Bongartz completion, support τ-tilting modules and τ-tilting reduction.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::algebra::Algebra;
use crate::assoc::AssociativeAlgebra;
use crate::classifier::{enumerate_indecomposables, IndecCatalog};
use crate::error::{Error, Result};
use crate::module::{decompose, hom_dim, tau, Representation};
use crate::presenter::{gabriel_presentation, module_endomorphism_algebra, AlgebraPresentation};

/// Largest vertex count accepted by the support τ-tilting enumerators.
pub const SUPPORT_ENUMERATION_CAP: usize = 8;

/// `Hom(Z_i, τ Z_j) = 0` for all summands `i, j` (τ of a projective is zero).
pub fn is_tau_rigid(summands: &[Representation]) -> bool {
    let taus: Vec<Representation> = summands.iter().map(tau).collect();
    summands.iter().all(|x| taus.iter().all(|t| t.is_zero() || hom_dim(x, t) == 0))
}

/// τ-rigidity of an arbitrary module, via its indecomposable summands.
pub fn is_tau_rigid_module(m: &Representation) -> Result<bool> {
    Ok(is_tau_rigid(&decompose(m)?))
}

/// Catalog version of [`is_tau_rigid`].
pub fn is_tau_rigid_indices(c: &IndecCatalog, z: &[usize]) -> bool {
    z.iter().all(|&x| z.iter().all(|&y| c.tau_of(y).is_none_or(|t| c.hom_dims[x][t] == 0)))
}

/// Catalog indices of the indecomposable summands of `m`.
pub fn summand_indices(c: &IndecCatalog, m: &Representation) -> Result<Vec<usize>> {
    decompose(m)?
        .iter()
        .map(|x| c.find(x).ok_or_else(|| Error::InvalidInput(format!("summand {} not in catalog", x.dim_label()))))
        .collect()
}

/// Bongartz completion `U_Z`: the Ext-projective indecomposables of the torsion class
/// `⊥(τZ) = {X : Hom(X, τZ) = 0}`. Returns sorted catalog indices and checks that the result
/// is τ-tilting and contains `Z`.
pub fn bongartz_completion(c: &IndecCatalog, z: &[usize]) -> Result<Vec<usize>> {
    if !is_tau_rigid_indices(c, z) {
        return Err(Error::InvalidInput("module is not τ-rigid".into()));
    }
    let taus: Vec<usize> = z.iter().filter_map(|&x| c.tau_of(x)).collect();
    let torsion: Vec<usize> = (0..c.len()).filter(|&x| taus.iter().all(|&t| c.hom_dims[x][t] == 0)).collect();
    let ext = c.ext1_dims();
    let u: Vec<usize> = torsion.iter().copied().filter(|&m| torsion.iter().all(|&x| ext[m][x] == 0)).collect();
    let n = c.alg.vertex_count();
    if u.len() != n || !is_tau_rigid_indices(c, &u) || !z.iter().all(|x| u.contains(x)) {
        return Err(Error::InvalidInput(format!(
            "Bongartz completion has {} summands over an algebra with {n} vertices",
            u.len()
        )));
    }
    Ok(u)
}

/// Jasso's reduction `C = End(U_Z)/⟨e_Z⟩` at a τ-rigid `Z`.
#[derive(Clone, Debug)]
pub struct TauReduction {
    /// catalog indices of the summands of `U_Z`, in the vertex order of `b`
    pub completion: Vec<usize>,
    /// vertices of `b` belonging to summands of `Z`
    pub z_vertices: Vec<usize>,
    pub b: AssociativeAlgebra,
    pub c: AssociativeAlgebra,
    pub presentation: AlgebraPresentation,
}

pub fn tau_tilting_reduction(c: &IndecCatalog, z: &[usize]) -> Result<TauReduction> {
    let mut z: Vec<usize> = z.to_vec();
    z.sort_unstable();
    z.dedup();
    let completion = bongartz_completion(c, &z)?;
    let summands: Vec<Representation> = completion.iter().map(|&i| c.modules[i].clone()).collect();
    let b = module_endomorphism_algebra(&summands)?;
    let z_vertices: Vec<usize> = (0..completion.len()).filter(|&v| z.contains(&completion[v])).collect();
    let quotient = b.quotient_by_idempotents(&z_vertices);
    let presentation = gabriel_presentation(&quotient)?;
    Ok(TauReduction { completion, z_vertices, b, c: quotient, presentation })
}

/// A support τ-tilting module: a τ-tilting module over `A/⟨e⟩`, lifted to `A`.
#[derive(Clone, Debug)]
pub struct SupportTauTilting {
    /// vertices of `e`
    pub cut: Vec<usize>,
    pub summands: Vec<Representation>,
}

impl SupportTauTilting {
    pub fn count(&self) -> usize {
        self.summands.len()
    }
}

fn all_cuts(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect())
}

/// All support τ-tilting modules: for every vertex set `e`, the τ-tilting `A/⟨e⟩`-modules,
/// found as the cliques of size `|A/⟨e⟩|` in the pairwise τ-rigidity graph.
pub fn enumerate_support_tau_tilting(alg: &Algebra, knitting_cap: usize) -> Result<Vec<SupportTauTilting>> {
    let n = alg.vertex_count();
    if n > SUPPORT_ENUMERATION_CAP {
        return Err(Error::BudgetExceeded(format!(
            "support τ-tilting enumeration is limited to {SUPPORT_ENUMERATION_CAP} vertices"
        )));
    }
    let mut out = Vec::new();
    for cut in all_cuts(n) {
        let size = n - cut.len();
        if size == 0 {
            out.push(SupportTauTilting { cut, summands: Vec::new() });
            continue;
        }
        let quotient = alg.idempotent_quotient(&cut)?;
        let c = enumerate_indecomposables(&quotient, knitting_cap)?;
        let rigid: Vec<usize> = (0..c.len()).filter(|&x| is_tau_rigid_indices(&c, &[x])).collect();
        let compatible = |x: usize, y: usize| is_tau_rigid_indices(&c, &[x, y]);
        let mut cliques = Vec::new();
        extend_clique(&rigid, &compatible, size, &mut Vec::new(), 0, &mut cliques);
        for clique in cliques {
            let summands =
                clique.iter().map(|&i| Representation::from_quotient(alg, &c.modules[i], &cut)).collect();
            out.push(SupportTauTilting { cut: cut.clone(), summands });
        }
    }
    Ok(out)
}

fn extend_clique(
    pool: &[usize],
    compatible: &impl Fn(usize, usize) -> bool,
    size: usize,
    current: &mut Vec<usize>,
    start: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for i in start..pool.len() {
        let x = pool[i];
        if current.iter().all(|&y| compatible(x, y)) {
            current.push(x);
            extend_clique(pool, compatible, size, current, i + 1, out);
            current.pop();
        }
    }
}

/// A summand of a support τ-tilting pair `(M, P)`: an indecomposable module or a shifted
/// indecomposable projective `P(v)[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairSummand {
    Module(usize),
    Shifted(usize),
}

/// Number of support τ-tilting pairs reachable from `(A, 0)` by mutation. Each almost
/// complete pair has exactly two completions, so mutation replaces one summand by the only
/// other compatible candidate.
pub fn mutation_walk_count(c: &IndecCatalog) -> Result<usize> {
    let n = c.alg.vertex_count();
    if n > SUPPORT_ENUMERATION_CAP {
        return Err(Error::BudgetExceeded(format!(
            "support τ-tilting enumeration is limited to {SUPPORT_ENUMERATION_CAP} vertices"
        )));
    }
    let fits = |pair: &[PairSummand], cand: PairSummand| -> bool {
        pair.iter().all(|&x| match (x, cand) {
            (PairSummand::Module(a), PairSummand::Module(b)) => is_tau_rigid_indices(c, &[a, b]),
            (PairSummand::Module(a), PairSummand::Shifted(v)) | (PairSummand::Shifted(v), PairSummand::Module(a)) => {
                c.modules[a].dims()[v] == 0
            }
            (PairSummand::Shifted(v), PairSummand::Shifted(w)) => v != w,
        })
    };
    let candidates: Vec<PairSummand> = (0..c.len())
        .filter(|&x| is_tau_rigid_indices(c, &[x]))
        .map(PairSummand::Module)
        .chain((0..n).map(PairSummand::Shifted))
        .collect();
    let start: BTreeSet<PairSummand> = c.projectives.iter().map(|&p| PairSummand::Module(p)).collect();
    let mut seen: HashSet<BTreeSet<PairSummand>> = HashSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start);
    while let Some(pair) = queue.pop_front() {
        for &x in &pair {
            let rest: Vec<PairSummand> = pair.iter().copied().filter(|&y| y != x).collect();
            let others: Vec<PairSummand> =
                candidates.iter().copied().filter(|&y| y != x && !rest.contains(&y) && fits(&rest, y)).collect();
            if others.len() != 1 {
                return Err(Error::InvalidInput(format!(
                    "almost complete pair has {} completions besides the original",
                    others.len()
                )));
            }
            let mut next: BTreeSet<PairSummand> = rest.into_iter().collect();
            next.insert(others[0]);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::DEFAULT_KNITTING_CAP;
    use crate::exactla::PrimeField;
    use crate::families::{generate_ank, linear_path_algebra};
    use crate::presenter::{presentations_isomorphic, DEFAULT_ISO_BUDGET};

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn catalog(a: &Algebra) -> IndecCatalog {
        enumerate_indecomposables(a, DEFAULT_KNITTING_CAP).unwrap()
    }

    #[test]
    fn tau_rigidity() {
        let a = generate_ank(f(), 4, 3).unwrap();
        assert!(is_tau_rigid(&[Representation::injective(&a, 3)]));
        assert!(is_tau_rigid(&(0..4).map(|v| Representation::projective(&a, v)).collect::<Vec<_>>()));
        let a2 = linear_path_algebra(f(), 2).unwrap();
        assert!(!is_tau_rigid(&[Representation::simple(&a2, 0), Representation::simple(&a2, 1)]));
    }

    #[test]
    fn bongartz_examples() {
        let a = generate_ank(f(), 4, 3).unwrap();
        let c = catalog(&a);
        let i4 = c.find(&Representation::injective(&a, 3)).unwrap();
        let u = bongartz_completion(&c, &[i4]).unwrap();
        let mut expected: Vec<usize> = [0, 1, 3].iter().map(|&v| c.projectives[v]).collect();
        expected.push(i4);
        expected.sort_unstable();
        assert_eq!(u, expected);
        let all = c.projectives.clone();
        let mut sorted = all.clone();
        sorted.sort_unstable();
        assert_eq!(bongartz_completion(&c, &all).unwrap(), sorted);
    }

    #[test]
    fn reductions_at_extremes() {
        let a = generate_ank(f(), 4, 3).unwrap();
        let c = catalog(&a);
        let r = tau_tilting_reduction(&c, &[]).unwrap();
        assert!(presentations_isomorphic(&r.presentation.algebra, &a, DEFAULT_ISO_BUDGET).unwrap().is_some());
        let r = tau_tilting_reduction(&c, &c.projectives).unwrap();
        assert_eq!(r.c.dim(), 0);
        let i4 = c.find(&Representation::injective(&a, 3)).unwrap();
        let r = tau_tilting_reduction(&c, &[i4]).unwrap();
        let a44 = generate_ank(f(), 4, 4).unwrap();
        let b = gabriel_presentation(&r.b).unwrap();
        assert!(presentations_isomorphic(&b.algebra, &a44, DEFAULT_ISO_BUDGET).unwrap().is_some());
        assert_eq!(r.c.vertex_count(), 3);
    }

    #[test]
    fn support_tau_tilting_counts() {
        let a1 = linear_path_algebra(f(), 1).unwrap();
        assert_eq!(enumerate_support_tau_tilting(&a1, 100).unwrap().len(), 2);
        let a2 = linear_path_algebra(f(), 2).unwrap();
        assert_eq!(enumerate_support_tau_tilting(&a2, 100).unwrap().len(), 5);
        assert_eq!(mutation_walk_count(&catalog(&a2)).unwrap(), 5);
        // linear A_3: Catalan number 14
        let a3 = linear_path_algebra(f(), 3).unwrap();
        assert_eq!(enumerate_support_tau_tilting(&a3, 100).unwrap().len(), 14);
        assert_eq!(mutation_walk_count(&catalog(&a3)).unwrap(), 14);
        let a33 = generate_ank(f(), 3, 3).unwrap();
        let exhaustive = enumerate_support_tau_tilting(&a33, 100).unwrap().len();
        assert_eq!(mutation_walk_count(&catalog(&a33)).unwrap(), exhaustive);
    }
}
