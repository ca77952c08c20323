//! Krull–Schmidt decomposition by Fitting splitting of random endomorphisms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{poly, Fp, Matrix};

use super::{hom_basis, ModuleMorphism, Representation};

const SPLIT_TRIES: usize = 64;
const SEED: u64 = 0x5ee7_d1a6;

enum Attempt {
    /// complementary submodules, as per-vertex column bases
    Split(Vec<Matrix>, Vec<Matrix>),
    /// the characteristic polynomial is a power of a single irreducible
    Single,
    Inconclusive,
}

fn random_endo(f: crate::exactla::PrimeField, basis: &[ModuleMorphism], rng: &mut ChaCha8Rng) -> ModuleMorphism {
    let coeffs: Vec<Fp> = basis.iter().map(|_| rng.gen_range(0..f.p())).collect();
    ModuleMorphism::combination(basis, &coeffs).expect("nonempty basis")
}

fn nilpotent(maps: &[Matrix]) -> bool {
    maps.iter().all(|m| m.rows() == 0 || m.pow(m.rows() as u32).is_zero())
}

/// Fitting decomposition `M = ker ψ^N ⊕ im ψ^N` with `ψ = g(φ)`, if both parts are nonzero.
fn fitting(m: &Representation, phi: &ModuleMorphism, g: &[Fp]) -> Option<(Vec<Matrix>, Vec<Matrix>)> {
    let n = m.total_dim().max(1) as u32;
    let powers: Vec<Matrix> = phi.maps.iter().map(|x| poly::eval_matrix(g, x).pow(n)).collect();
    let ker: Vec<Matrix> = powers.iter().map(Matrix::kernel_basis).collect();
    let img: Vec<Matrix> = powers.iter().map(Matrix::image_basis).collect();
    let kd: usize = ker.iter().map(Matrix::cols).sum();
    if kd == 0 || kd == m.total_dim() {
        None
    } else {
        Some((ker, img))
    }
}

fn attempt(m: &Representation, phi: &ModuleMorphism) -> Attempt {
    let f = m.field();
    let cp = phi.maps.iter().fold(vec![1], |acc, x| poly::mul(f, &acc, &poly::charpoly(x)));
    let parts = poly::distinct_degree_parts(f, &cp);
    for &lambda in &poly::roots(f, &cp) {
        if let Some((a, b)) = fitting(m, phi, &[f.neg(lambda), 1]) {
            return Attempt::Split(a, b);
        }
    }
    for (d, g) in &parts {
        if *d > 1 {
            if let Some((a, b)) = fitting(m, phi, g) {
                return Attempt::Split(a, b);
            }
        }
    }
    if parts.len() == 1 && parts[0].1.len() == parts[0].0 + 1 {
        Attempt::Single
    } else {
        Attempt::Inconclusive
    }
}

fn search(m: &Representation, basis: &[ModuleMorphism], rng: &mut ChaCha8Rng) -> Result<Option<(Vec<Matrix>, Vec<Matrix>)>> {
    let mut inconclusive = false;
    for _ in 0..SPLIT_TRIES {
        let phi = random_endo(m.field(), basis, rng);
        match attempt(m, &phi) {
            Attempt::Split(a, b) => return Ok(Some((a, b))),
            Attempt::Single => {}
            Attempt::Inconclusive => inconclusive = true,
        }
    }
    if inconclusive {
        Err(Error::IdempotentLiftFailure(m.total_dim()))
    } else {
        Ok(None)
    }
}

fn rng_for(m: &Representation) -> ChaCha8Rng {
    let salt = m.dims().iter().fold(SEED, |h, &d| h.wrapping_mul(31).wrapping_add(d as u64));
    ChaCha8Rng::seed_from_u64(salt)
}

/// Whether the algebra spanned by `end_basis` (a basis of `End M`) is local, i.e. `M` is
/// indecomposable. Randomized with a fixed seed; a failure probability of about `2^-64`.
pub fn is_local_span(m: &Representation, end_basis: &[ModuleMorphism]) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    if end_basis.len() == 1 {
        return Ok(true);
    }
    let mut rng = rng_for(m);
    Ok(search(m, end_basis, &mut rng)?.is_none())
}

/// One nontrivial direct sum decomposition, as complementary per-vertex submodule bases.
pub fn split_once(m: &Representation) -> Result<Option<(Vec<Matrix>, Vec<Matrix>)>> {
    if m.is_zero() {
        return Ok(None);
    }
    let basis = hom_basis(m, m);
    if basis.len() == 1 {
        return Ok(None);
    }
    let mut rng = rng_for(m);
    search(m, &basis, &mut rng)
}

pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    Ok(!m.is_zero() && split_once(m)?.is_none())
}

/// Indecomposable summands; their sum is isomorphic to `m`.
pub fn decompose(m: &Representation) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(&x)? {
            None => out.push(x),
            Some((a, b)) => {
                stack.push(x.submodule(&a).0);
                stack.push(x.submodule(&b).0);
            }
        }
    }
    out.sort_by(|a, b| a.dims().cmp(b.dims()));
    Ok(out)
}

fn indecomposables_isomorphic(m: &Representation, n: &Representation) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    let there = hom_basis(m, n);
    if there.is_empty() {
        return false;
    }
    let back = hom_basis(n, m);
    // End M is local: M ≅ N iff Hom(N,M)∘Hom(M,N) leaves the radical
    there.iter().any(|phi| back.iter().any(|psi| !nilpotent(&psi.compose(phi).maps)))
}

pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let xs = decompose(m)?;
    let mut ys = decompose(n)?;
    if xs.len() != ys.len() {
        return Ok(false);
    }
    for x in &xs {
        match ys.iter().position(|y| indecomposables_isomorphic(x, y)) {
            Some(i) => {
                ys.swap_remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Isomorphism test for two modules already known to be indecomposable.
pub fn is_isomorphic_indecomposable(m: &Representation, n: &Representation) -> bool {
    indecomposables_isomorphic(m, n)
}
