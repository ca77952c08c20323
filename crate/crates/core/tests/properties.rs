use proptest::prelude::*;

use silt_core::classifier::{catalogs_agree, enumerate_indecomposables, DEFAULT_KNITTING_CAP};
use silt_core::derived::{
    certify, dhom, dhom_dim, left_mutation, perp_completion, right_mutation, DerivedObject, Summand,
    DEFAULT_SHIFT_WINDOW,
};
use silt_core::families::{linear_monomial, linear_path_algebra};
use silt_core::io::{parse_algebra, parse_module, write_algebra, write_module};
use silt_core::module::{decompose, hom_dim, is_isomorphic};
use silt_core::taured::{bongartz_completion, is_tau_rigid_indices};
use silt_core::{Algebra, PrimeField};

fn a(n: usize) -> Algebra {
    linear_path_algebra(PrimeField::default(), n).unwrap()
}

fn monomial(n: usize, mask: u32) -> Algebra {
    let zero_at: Vec<usize> = (1..n.saturating_sub(1)).filter(|i| mask & (1 << i) != 0).collect();
    linear_monomial(PrimeField::default(), n, &zero_at).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mutation_walks_stay_silting(n in 1usize..=4, steps in prop::collection::vec((0usize..4, any::<bool>()), 1..10)) {
        let alg = a(n);
        let mut t = DerivedObject::regular(&alg);
        for (i, left) in steps {
            let i = i % n;
            let mu = if left { left_mutation(&t, i).unwrap() } else { right_mutation(&t, i).unwrap() };
            let cert = certify(&mu.result);
            prop_assert!(cert.silting && !cert.non_basic);
            let back = if left { right_mutation(&mu.result, i) } else { left_mutation(&mu.result, i) };
            prop_assert!(back.unwrap().result.same_as(&t));
            t = mu.result;
        }
    }

    #[test]
    fn completions_of_random_summands(n in 2usize..=4, steps in prop::collection::vec((0usize..4, any::<bool>()), 0..8), keep in 1u32..16) {
        let alg = a(n);
        let cat = enumerate_indecomposables(&alg, DEFAULT_KNITTING_CAP).unwrap();
        let mut t = DerivedObject::regular(&alg);
        for (i, left) in steps {
            let i = i % n;
            t = if left { left_mutation(&t, i) } else { right_mutation(&t, i) }.unwrap().result;
        }
        let idx: Vec<usize> = (0..n).filter(|i| keep & (1 << i) != 0).collect();
        let nobj = t.select(&idx);
        let out = perp_completion(&nobj, &cat, DEFAULT_SHIFT_WINDOW).unwrap();
        prop_assert!(certify(&nobj.sum(&out.complement)).silting);
        prop_assert!(out.complement.summands().iter().all(|d| nobj.summands().iter().all(|y| d.orthogonal_to(y))));
    }

    #[test]
    fn derived_hom_is_componentwise(x in 0usize..10, y in 0usize..10, s in -2i32..=2) {
        let alg = a(4);
        let cat = enumerate_indecomposables(&alg, DEFAULT_KNITTING_CAP).unwrap();
        let xo = DerivedObject::from_summands(&alg, vec![Summand::new(cat.modules[x].clone(), 0)]);
        let yo = DerivedObject::from_summands(&alg, vec![Summand::new(cat.modules[y].clone(), s)]);
        prop_assert_eq!(dhom(&xo, &yo).unwrap().dim(), dhom_dim(&xo, &yo));
    }

    #[test]
    fn knitting_matches_intervals(n in 1usize..=7, mask in any::<u32>()) {
        let alg = monomial(n, mask);
        let cat = enumerate_indecomposables(&alg, DEFAULT_KNITTING_CAP).unwrap();
        prop_assert_eq!(catalogs_agree(&cat), Some(true));
    }

    #[test]
    fn bongartz_completion_is_tau_tilting(n in 2usize..=5, mask in any::<u32>(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let alg = monomial(n, mask);
        let cat = enumerate_indecomposables(&alg, DEFAULT_KNITTING_CAP).unwrap();
        let mut z: Vec<usize> = Vec::new();
        for p in picks {
            let mut cand = z.clone();
            cand.push(p.index(cat.len()));
            cand.sort_unstable();
            cand.dedup();
            if is_tau_rigid_indices(&cat, &cand) {
                z = cand;
            }
        }
        let u = bongartz_completion(&cat, &z).unwrap();
        prop_assert_eq!(u.len(), n);
        prop_assert!(is_tau_rigid_indices(&cat, &u));
        prop_assert!(z.iter().all(|i| u.contains(i)));
    }

    #[test]
    fn text_round_trips(n in 1usize..=6, mask in any::<u32>(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..3)) {
        let alg = monomial(n, mask);
        let again = parse_algebra(&write_algebra(&alg), alg.field(), 30).unwrap();
        prop_assert!(again.same_presentation(&alg));
        let cat = enumerate_indecomposables(&alg, DEFAULT_KNITTING_CAP).unwrap();
        for p in picks {
            let m = &cat.modules[p.index(cat.len())];
            let back = parse_module(&write_module(m), &alg).unwrap();
            prop_assert!(is_isomorphic(m, &back).unwrap());
            prop_assert_eq!(decompose(&back).unwrap().len(), 1);
            prop_assert_eq!(hom_dim(m, &back), hom_dim(m, m));
        }
    }
}
