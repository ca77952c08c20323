//! Generators for the algebra families used by the regression suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{build_algebra, Algebra, DEFAULT_MAX_PATH_LEN};
use crate::error::{Error, Result};
use crate::exactla::PrimeField;
use crate::quiver::{Quiver, Relation};

/// Linear quiver `n -> n-1 -> ... -> 1` with arrow `a{i}: i+1 -> i`.
pub fn linear_quiver(n: usize) -> Quiver {
    let mut q = Quiver::new(n);
    for i in 1..n {
        q.add_arrow(&format!("a{i}"), i, i - 1).expect("fresh names");
    }
    q
}

/// Linear algebra with `a{i+1}.a{i} = 0` for each listed `i` (1-based).
pub fn linear_monomial(field: PrimeField, n: usize, zero_at: &[usize]) -> Result<Algebra> {
    let q = linear_quiver(n);
    let rels = zero_at.iter().map(|&i| Relation::monomial(vec![i, i - 1])).collect();
    build_algebra(field, q, rels, DEFAULT_MAX_PATH_LEN)
}

/// `A(n,k)`: the linear quiver on `n` vertices with `a{i+1}.a{i} = 0` for `1 <= i <= k-2`.
pub fn generate_ank(field: PrimeField, n: usize, k: usize) -> Result<Algebra> {
    if n < 2 || k < 2 || k > n {
        return Err(Error::InvalidInput(format!("A(n,k) needs n >= 2 and 2 <= k <= n, got ({n},{k})")));
    }
    linear_monomial(field, n, &(1..=k - 2).collect::<Vec<_>>())
}

/// Path algebra of the linear quiver `A_n` (no relations).
pub fn linear_path_algebra(field: PrimeField, n: usize) -> Result<Algebra> {
    linear_monomial(field, n, &[])
}

/// Linear `A_n` where each length-two path is killed independently with probability 1/3.
pub fn random_monomial_linear(field: PrimeField, n: usize, seed: u64) -> Result<Algebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero_at: Vec<usize> = (1..n.saturating_sub(1)).filter(|_| rng.gen_range(0..3) == 0).collect();
    linear_monomial(field, n, &zero_at)
}

/// The 1-based positions `i` with `a{i+1}.a{i} = 0`, or `None` if the algebra is not a
/// monomial linear algebra of this shape.
pub fn linear_zero_relations(alg: &Algebra) -> Option<Vec<usize>> {
    let q = alg.quiver();
    let n = q.vertex_count();
    if q.arrows().len() + 1 != n.max(1) {
        return None;
    }
    for (i, a) in q.arrows().iter().enumerate() {
        if a.source != i + 1 || a.target != i {
            return None;
        }
    }
    let mut out = Vec::new();
    for r in alg.relations() {
        if !r.is_monomial() {
            return None;
        }
        let p = &r.terms[0].1;
        match p.as_slice() {
            [x, y] if *x == *y + 1 => out.push(*x),
            _ => return None,
        }
    }
    out.sort_unstable();
    out.dedup();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ank_dimensions() {
        let f = PrimeField::default();
        for n in 2..=7 {
            assert_eq!(generate_ank(f, n, 2).unwrap().dim(), n * (n + 1) / 2);
            assert_eq!(generate_ank(f, n, n).unwrap().dim(), 2 * n - 1);
        }
        assert_eq!(generate_ank(f, 4, 3).unwrap().dim(), 8);
        assert!(generate_ank(f, 4, 5).is_err());
    }

    #[test]
    fn random_corpus_is_deterministic() {
        let f = PrimeField::default();
        let a = random_monomial_linear(f, 6, 7).unwrap();
        let b = random_monomial_linear(f, 6, 7).unwrap();
        assert_eq!(linear_zero_relations(&a), linear_zero_relations(&b));
        assert_eq!(linear_zero_relations(&generate_ank(f, 6, 4).unwrap()), Some(vec![1, 2]));
    }
}
