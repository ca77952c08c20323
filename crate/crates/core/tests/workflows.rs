use std::path::Path;

use silt_core::classifier::{classify, classify_catalog, enumerate_indecomposables, DEFAULT_KNITTING_CAP};
use silt_core::derived::{certify, perp_completion, silting_reduce};
use silt_core::families::generate_ank;
use silt_core::io::{load_summands, parse_algebra, parse_dobj, write_dobj};
use silt_core::presenter::{gabriel_presentation, module_endomorphism_algebra, presents_as};
use silt_core::taured::{summand_indices, tau_tilting_reduction};
use silt_core::PrimeField;

const KA3: &str = "\
vertices 3
arrow a 2 1
arrow b 3 2
";

fn field() -> PrimeField {
    PrimeField::default()
}

#[test]
fn corner_of_a44_agrees_with_direct_classification() {
    let a = generate_ank(field(), 4, 4).unwrap();
    let corner = gabriel_presentation(&a.corner_algebra(&[0, 2])).unwrap().algebra;
    // e_1 A e_3 = 0 once the length-two paths vanish: two isolated vertices
    assert_eq!(corner.vertex_count(), 2);
    assert_eq!(corner.dim(), 2);
    let r = classify(&corner, DEFAULT_KNITTING_CAP).unwrap();
    assert!(r.hereditary && r.shod);
    assert!(classify(&a, DEFAULT_KNITTING_CAP).unwrap().shod);
}

#[test]
fn quotient_of_ank_is_smaller_ank() {
    // cutting the sink of A(5,4) leaves the relations a3.a2 = 0 and the free arrow a4
    let a = generate_ank(field(), 5, 4).unwrap();
    let q = a.idempotent_quotient(&[0]).unwrap();
    assert_eq!(q.vertex_count(), 4);
    let r = classify(&q, DEFAULT_KNITTING_CAP).unwrap();
    assert_eq!(r.gl_dim.finite(), Some(2));
}

#[test]
fn tau_reduction_from_builtin_names() {
    let a = generate_ank(field(), 4, 3).unwrap();
    let c = enumerate_indecomposables(&a, DEFAULT_KNITTING_CAP).unwrap();
    let z = load_summands(&["I(4)".to_string()], &a, Path::new(".")).unwrap();
    let zi = summand_indices(&c, &z[0]).unwrap();
    let r = tau_tilting_reduction(&c, &zi).unwrap();
    assert_eq!(r.completion.len(), 4);
    assert_eq!(r.presentation.algebra.vertex_count(), 3);
    let u: Vec<_> = r.completion.iter().map(|&i| c.modules[i].clone()).collect();
    let b = module_endomorphism_algebra(&u).unwrap();
    assert!(presents_as(&b, &generate_ank(field(), 4, 4).unwrap()).unwrap());
    let cb = classify_catalog(&enumerate_indecomposables(&gabriel_presentation(&b).unwrap().algebra, DEFAULT_KNITTING_CAP).unwrap());
    assert!(cb.strictly_shod);
}

#[test]
fn derived_objects_from_files() {
    let alg = parse_algebra(KA3, field(), 30).unwrap();
    let t = parse_dobj("dobj\nsummand 0 P(1)\nsummand 0 interval(1,3)\nsummand -1 S(2)\n", &alg, Path::new(".")).unwrap();
    let cert = certify(&t);
    assert!(cert.silting, "{cert:?}");
    assert!(silting_reduce(&t, &[0]).unwrap().consistent().unwrap());
    // Ext¹(S(2), P(1)) != 0 rules out S(2)[1]
    let bad = parse_dobj("dobj\nsummand 0 P(1)\nsummand 1 S(2)\n", &alg, Path::new(".")).unwrap();
    assert!(!certify(&bad).presilting);
    let n = parse_dobj("dobj\nsummand 0 P(2)\n", &alg, Path::new(".")).unwrap();
    let cat = enumerate_indecomposables(&alg, DEFAULT_KNITTING_CAP).unwrap();
    let full = n.sum(&perp_completion(&n, &cat, 8).unwrap().complement);
    let again = parse_dobj(&write_dobj(&full).unwrap(), &alg, Path::new(".")).unwrap();
    assert!(again.same_as(&full));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let err = parse_algebra("vertices 2\narrow a 2 1\nrelation 1 a.q\n", field(), 30).unwrap_err();
    assert!(err.to_string().contains("line 3"), "{err}");
    let err = parse_algebra("vertices 2\narrow a 3 1\n", field(), 30).unwrap_err();
    assert!(err.to_string().contains("line 2"), "{err}");
}
