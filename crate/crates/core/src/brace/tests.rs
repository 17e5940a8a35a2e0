use super::*;
use crate::catalog;
use crate::config::Caps;
use crate::samples::{
    conjugation_lambda, cyclic_inversion_brace, cyclic_inversion_lambda, op_brace, twisted_conjugation_lambda,
};

fn caps() -> Caps {
    Caps::default()
}

/// D4 characters on `r^i s^j` (stored at `i + 4j`).
fn chi1(x: usize) -> usize {
    (x % 4) % 2
}

fn chi2(x: usize) -> usize {
    x / 4
}

#[test]
fn lambda_examples() {
    let s3 = catalog::symmetric3();
    let t = SkewBrace::trivial(&s3);
    assert_eq!(t.lambda().kernel, vec![0, 1, 2, 3, 4, 5]);

    let op = op_brace(&s3);
    for a in s3.elements() {
        for b in s3.elements() {
            assert_eq!(op.lam(a, b), s3.conj(s3.inv(a), b));
        }
    }
    assert!(op.lambda().anti_homomorphic_on_add);

    let z4 = cyclic_inversion_brace(4);
    assert_eq!(z4.lambda().kernel, vec![0, 2]);
    assert_eq!(z4.lambda().image_order, 2);
}

#[test]
fn non_brace_tables_are_rejected() {
    let add = FiniteGroup::cyclic(6);
    let circ = catalog::symmetric3();
    match SkewBrace::new(add.clone(), circ.clone()) {
        Err(Error::LambdaNotAutomorphism(_)) => {}
        other => panic!("{other:?}"),
    }
    assert!(!verify_brace(&add, &circ).left_ok);
}

#[test]
fn verify_examples() {
    let s3 = catalog::symmetric3();
    let r = verify_brace(&s3, &s3);
    assert!(r.left_ok && r.right_ok && r.two_sided);
    let r = verify_brace(&s3, &s3.opposite());
    assert!(r.left_ok);
    // (ab)∘c = cab vs (a∘c)c⁻¹(b∘c) = cac⁻¹cb = cab: the op brace is two-sided
    assert!(r.right_ok);
    let z4 = cyclic_inversion_brace(4);
    let r = verify_brace(z4.add(), z4.circ());
    assert!(r.left_ok && r.right_ok);
}

#[test]
fn classify_examples() {
    let s3 = catalog::symmetric3();
    let c = classify(&SkewBrace::trivial(&s3)).unwrap();
    assert!(c.lambda_homomorphic && c.lambda_anti_homomorphic && c.symmetric && c.lambda_cyclic && !c.natural);
    let c = classify(&SkewBrace::trivial(&FiniteGroup::cyclic(4))).unwrap();
    assert!(c.natural);

    let c = classify(&op_brace(&s3)).unwrap();
    assert!(c.lambda_anti_homomorphic && c.symmetric && !c.lambda_homomorphic && c.natural);

    let c = classify(&cyclic_inversion_brace(4)).unwrap();
    assert!(c.lambda_homomorphic && c.symmetric && c.lambda_cyclic);
}

#[test]
fn construct_from_lambda_checks() {
    let z4 = FiniteGroup::cyclic(4);
    let id: Vec<Vec<usize>> = vec![(0..4).collect(); 4];
    assert!(construct_from_lambda(&z4, &id, LambdaMode::Homomorphic).unwrap().is_trivial());

    let s3 = catalog::symmetric3();
    let op = construct_from_lambda(&s3, &conjugation_lambda(&s3), LambdaMode::AntiHomomorphic).unwrap();
    assert_eq!(op.circ(), &s3.opposite());
    // conjugation is not a homomorphism from S₃
    assert!(matches!(
        construct_from_lambda(&s3, &conjugation_lambda(&s3), LambdaMode::Homomorphic),
        Err(Error::NotHomomorphism(..))
    ));

    let mut bad = cyclic_inversion_lambda(4);
    bad[1] = vec![0, 2, 1, 3];
    assert!(matches!(construct_from_lambda(&z4, &bad, LambdaMode::Homomorphic), Err(Error::NotAutomorphism(1))));

    // on ℤ₃ inversion^a is not a homomorphism from ℤ₃ (2·1 ≠ 0 mod 2)
    let z3 = FiniteGroup::cyclic(3);
    let inv3 = crate::samples::power_lambda(&z3, &[0, 2, 1], |a| a as i64);
    assert!(construct_from_lambda(&z3, &inv3, LambdaMode::Homomorphic).is_err());

    // ℤ₂×ℤ₂ with λ_a = swap^{a₁}: the kernel condition fails
    let k = catalog::by_name("Z2^2").unwrap();
    let swap = vec![0, 2, 1, 3];
    let lam = crate::samples::power_lambda(&k, &swap, |a| (a / 2) as i64);
    assert!(matches!(construct_from_lambda(&k, &lam, LambdaMode::Homomorphic), Err(Error::KernelConditionFails(..))));
}

#[test]
fn inverse_identities_for_constructed_braces() {
    for brace in [cyclic_inversion_brace(4), op_brace(&catalog::symmetric3()), op_brace(&catalog::dihedral(4))] {
        let (add, circ) = (brace.add(), brace.circ());
        for a in add.elements() {
            let abar = circ.inv(a);
            let lam_inv = perm::invert(&brace.lambda().maps[a].images);
            assert_eq!(abar, lam_inv[add.inv(a)]);
            if brace.lambda().anti_homomorphic_on_add {
                assert!(brace.lambda().kernel.contains(&add.mul(abar, a)));
            }
        }
    }
}

#[test]
fn exact_factorization_examples() {
    let s3 = catalog::symmetric3();
    let a3 = s3.derived_subgroup();
    let b = construct_exact_factorization(&s3, &s3.elements().collect::<Vec<_>>(), &[0]).unwrap();
    assert!(b.is_trivial());
    let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
    let b = construct_exact_factorization(&s3, &a3, &[0, t]).unwrap();
    let c = classify(&b).unwrap();
    assert!(c.symmetric && c.lambda_anti_homomorphic);
    assert!(b.circ().is_abelian());
    assert_eq!(b.circ().exponent(), 6);
    for x in s3.elements() {
        for y in s3.elements() {
            let b1 = if a3.contains(&x) { 0 } else { t };
            assert_eq!(b.lam(x, y), s3.conj(b1, y));
        }
    }

    let z6 = FiniteGroup::cyclic(6);
    assert!(construct_exact_factorization(&z6, &[0, 2, 4], &[0, 3]).unwrap().is_trivial());
    assert!(matches!(
        construct_exact_factorization(&z6, &[0, 2, 4], &[0, 2, 4]),
        Err(Error::NotExactFactorization(_))
    ));
}

#[test]
fn unification_examples() {
    let d4 = catalog::dihedral(4);
    let e = vec![0; 8];
    let zero = vec![vec![0; 8]; 8];
    assert!(construct_unification(&d4, &e, &zero, 1).unwrap().is_trivial());

    let alpha: Vec<Vec<usize>> =
        d4.elements().map(|a| d4.elements().map(|b| if chi1(a) * chi2(b) == 1 { 2 } else { 0 }).collect()).collect();
    for eps in [1, -1] {
        let b = construct_unification(&d4, &e, &alpha, eps).unwrap();
        assert!(!b.is_trivial());
        assert!(verify_brace(b.add(), b.circ()).left_ok);
        assert!(classify(&b).unwrap().symmetric);
    }

    let f: Vec<usize> = d4.elements().map(|x| x % 4).collect();
    for eps in [1i8, -1] {
        let b = construct_unification(&d4, &f, &zero, eps).unwrap();
        for a in d4.elements() {
            let fa = d4.pow(f[a], -i64::from(eps));
            for x in d4.elements() {
                assert_eq!(b.lam(a, x), d4.conj(fa, x));
            }
        }
    }

    let not_bilinear: Vec<Vec<usize>> =
        d4.elements().map(|a| d4.elements().map(|b| if a == 1 && b == 1 { 2 } else { 0 }).collect()).collect();
    assert!(matches!(construct_unification(&d4, &e, &not_bilinear, 1), Err(Error::NotBilinear(..))));
    // the identity of S₃ is not abelian modulo the (trivial) center
    let s3 = catalog::symmetric3();
    let f_all: Vec<usize> = s3.elements().collect();
    let zero3 = vec![vec![0; 6]; 6];
    assert!(matches!(construct_unification(&s3, &f_all, &zero3, 1), Err(Error::ImageNotAbelianModCenter(..))));
    let f_bad: Vec<usize> = d4.elements().map(|x| if x == 1 { 1 } else { 0 }).collect();
    assert!(matches!(construct_unification(&d4, &f_bad, &zero, 1), Err(Error::NotEndomorphismModCenter(..))));
}

#[test]
fn opposite_examples() {
    let z4 = FiniteGroup::cyclic(4);
    assert!(opposite(&SkewBrace::trivial(&z4)).unwrap().is_trivial);
    let s3 = catalog::symmetric3();
    assert!(opposite(&op_brace(&s3)).unwrap().is_trivial);
    let inv = cyclic_inversion_brace(4);
    assert_eq!(opposite(&inv).unwrap().brace, inv);
}

#[test]
fn opposite_symmetry_examples() {
    let r = opposite_symmetry_check(&SkewBrace::trivial(&FiniteGroup::cyclic(5))).unwrap();
    assert!(r.opposite_symmetric && r.inn_centralizes_lambda);
    let r = opposite_symmetry_check(&cyclic_inversion_brace(4)).unwrap();
    assert!(r.opposite_symmetric && r.inn_centralizes_lambda);

    let d4 = catalog::dihedral(4);
    let f: Vec<usize> = d4.elements().map(|x| x % 4).collect();
    let b = construct_unification(&d4, &f, &vec![vec![0; 8]; 8], 1).unwrap();
    let r = opposite_symmetry_check(&b).unwrap();
    assert!(r.agree);
    assert!(opposite_symmetry_check(&op_brace(&catalog::symmetric3())).is_err());
}

#[test]
fn link_examples() {
    let s3 = catalog::symmetric3();
    let op = op_brace(&s3);
    let r = link_check(&op, &op).unwrap();
    assert!(r.is_brace);
    let r = link_check(&op, &SkewBrace::trivial(&s3)).unwrap();
    assert!(r.is_brace && r.cond_i);
    assert!(matches!(
        link_check(&op, &SkewBrace::trivial(&FiniteGroup::cyclic(6))),
        Err(Error::AdditiveTablesDiffer)
    ));

    let d8 = catalog::dihedral(8);
    let b1 = op_brace(&d8);
    let b2 = construct_from_lambda(&d8, &twisted_conjugation_lambda(&d8, 1), LambdaMode::AntiHomomorphic).unwrap();
    assert!(!b2.is_trivial());
    let r = link_check(&b1, &b2).unwrap();
    assert!(r.hypotheses_met);
    assert!(r.is_symmetric && r.cond_i && r.cond_ii);
}

#[test]
fn cross_compatibility_examples() {
    let s3 = catalog::symmetric3();
    let r = cross_compatibility_check(&s3, &s3, &s3).unwrap();
    assert!(r.is_brace && r.condition_holds);

    let inv = cyclic_inversion_brace(4);
    let z4 = FiniteGroup::cyclic(4);
    let r = cross_compatibility_check(&z4, &z4, inv.circ()).unwrap();
    assert!(r.is_brace);

    let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
    let ef = construct_exact_factorization(&s3, &s3.derived_subgroup(), &[0, t]).unwrap();
    let r = cross_compatibility_check(&s3, &s3.opposite(), ef.circ()).unwrap();
    assert!(!r.condition_holds || r.is_brace);
}

#[test]
fn enumeration_counts() {
    let count = |g: &FiniteGroup| enumerate_circ_ops(g, &caps()).unwrap().len();
    assert_eq!(count(&FiniteGroup::trivial()), 1);
    assert_eq!(count(&FiniteGroup::cyclic(2)), 1);
    assert_eq!(count(&FiniteGroup::cyclic(3)), 1);
    assert_eq!(count(&FiniteGroup::cyclic(4)), 2);
    let k = catalog::by_name("Z2^2").unwrap();
    let braces = enumerate_circ_ops(&k, &caps()).unwrap();
    assert_eq!(braces.len(), 4);
    let klein = braces.iter().filter(|b| b.circ().exponent() == 2).count();
    assert_eq!(klein, 1);
    assert!(braces.windows(2).all(|w| w[0].circ().rows() < w[1].circ().rows()));
}

#[test]
fn z4_enumeration_contains_inversion_brace() {
    let braces = enumerate_circ_ops(&FiniteGroup::cyclic(4), &caps()).unwrap();
    assert!(braces.contains(&cyclic_inversion_brace(4)));
    assert!(braces.iter().any(|b| b.is_trivial()));
}

#[test]
fn isomorphism_examples() {
    let inv = cyclic_inversion_brace(4);
    let id = brace_isomorphic(&inv, &inv, &caps()).unwrap().unwrap();
    assert!(perm::is_identity(&id.images));
    let triv = SkewBrace::trivial(&FiniteGroup::cyclic(4));
    assert!(brace_isomorphic(&triv, &inv, &caps()).unwrap().is_none());

    let phi = vec![0, 3, 2, 1];
    let pushed = inv.relabeled(&phi).unwrap();
    let found = brace_isomorphic(&inv, &pushed, &caps()).unwrap().unwrap();
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(found.images[inv.circ().mul(a, b)], pushed.circ().mul(found.images[a], found.images[b]));
        }
    }
    assert!(brace_isomorphic(&inv, &SkewBrace::trivial(&FiniteGroup::cyclic(3)), &caps()).unwrap().is_none());
}

#[test]
fn trivial_group_brace() {
    let b = SkewBrace::trivial(&FiniteGroup::trivial());
    let c = classify(&b).unwrap();
    assert!(c.symmetric && c.natural);
    assert!(verify_brace(b.add(), b.circ()).two_sided);
}
