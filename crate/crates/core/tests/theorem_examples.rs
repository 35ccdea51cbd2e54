//! Worked theorem instances with independently computed expectations.
//!
//! Expected values come from set-product and congruence oracles computed
//! here, not from the construction paths under test.

use starreg_core::algebra::{
    find_isomorphism, product, Congruence, FiniteAlgebra, Subalgebra,
};
use starreg_core::star::{IdealContext, MonicStar};
use starreg_core::theorems::{
    asymmetric_join_star, asymmetric_join_sub, diamond_iso, double_quotient_iso, set_product,
    supremum_kernel_stars, verify_good_theory_simplifications, verify_property_star,
    zassenhaus, TheoremError,
};

fn a3_of_s3(s3: &starreg_core::AlgebraRef) -> Subalgebra {
    let idx: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) != 2).collect();
    Subalgebra::new(s3.clone(), idx).unwrap()
}

fn subgroup_star(sub: &Subalgebra) -> MonicStar {
    MonicStar::from_subgroup(sub).unwrap()
}

fn congruence_star(c: &Congruence) -> MonicStar {
    MonicStar::from_congruence(c)
}

fn mod_star(ring: &starreg_core::AlgebraRef, modulus: usize) -> MonicStar {
    congruence_star(&Congruence::generated(ring.clone(), &[(0, modulus)]).unwrap())
}

#[test]
fn asymmetric_join_of_a3_and_transposition_is_all_of_s3() {
    let s3 = FiniteAlgebra::symmetric_group(3);
    let a3 = a3_of_s3(&s3);
    let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
    let m = Subalgebra::generated(s3.clone(), &[t]).unwrap();
    let join = asymmetric_join_sub(&subgroup_star(&a3), &m).unwrap();
    // oracle: the set product KM
    let km = set_product(&s3, a3.elements(), m.elements());
    assert_eq!(join.elements(), &km[..]);
    assert!(join.is_full());
}

#[test]
fn asymmetric_join_with_trivial_kernel_is_m_itself() {
    let d4 = FiniteAlgebra::dihedral_group(4);
    let trivial = Subalgebra::smallest(d4.clone());
    let m = Subalgebra::generated(d4.clone(), &[4]).unwrap();
    let join = asymmetric_join_sub(&subgroup_star(&trivial), &m).unwrap();
    assert_eq!(join, m);
}

#[test]
fn asymmetric_join_in_d4_center_with_reflection_is_klein() {
    let d4 = FiniteAlgebra::dihedral_group(4);
    // center {1, r^2} = {0, 2}; reflection s = 4
    let center = Subalgebra::new(d4.clone(), vec![0, 2]).unwrap();
    let m = Subalgebra::generated(d4.clone(), &[4]).unwrap();
    let join = asymmetric_join_sub(&subgroup_star(&center), &m).unwrap();
    let km = set_product(&d4, center.elements(), m.elements());
    assert_eq!(join.elements(), &km[..]);
    assert_eq!(join.elements(), &[0, 2, 4, 6]);
    // Klein four-group: all non-identity orders are 2
    let (alg, _) = join.to_algebra();
    assert!((1..4).all(|x| alg.element_order(x) == 2));
}

#[test]
fn asymmetric_join_star_with_diagonal_recovers_the_kernel_star() {
    let s3 = FiniteAlgebra::symmetric_group(3);
    let f = subgroup_star(&a3_of_s3(&s3));
    let diag = MonicStar::diagonal(IdealContext::Pointed, &s3).unwrap();
    assert_eq!(asymmetric_join_star(&f, &diag).unwrap(), f);
}

#[test]
fn asymmetric_join_star_is_idempotent_on_its_own_kernel_star() {
    let z12 = FiniteAlgebra::cyclic_ring(12);
    let f = mod_star(&z12, 6);
    assert_eq!(asymmetric_join_star(&f, &f).unwrap(), f);
}

#[test]
fn asymmetric_join_star_mod6_with_mod4_is_mod2_on_z12() {
    let z12 = FiniteAlgebra::cyclic_ring(12);
    let f = mod_star(&z12, 6);
    let r = mod_star(&z12, 4);
    let expected = mod_star(&z12, 2);
    assert_eq!(asymmetric_join_star(&f, &r).unwrap(), expected);
}

#[test]
fn supremum_of_z6_subgroup_stars_is_everything() {
    let z6 = FiniteAlgebra::cyclic_group(6);
    let k = Subalgebra::new(z6.clone(), vec![0, 3]).unwrap();
    let l = Subalgebra::new(z6.clone(), vec![0, 2, 4]).unwrap();
    let sup = supremum_kernel_stars(&subgroup_star(&k), &subgroup_star(&l)).unwrap();
    assert_eq!(sup.encoded_subobject().unwrap().elements(), &[0, 1, 2, 3, 4, 5]);
}

#[test]
fn supremum_is_idempotent_commutative_and_minimal() {
    let z12 = FiniteAlgebra::cyclic_ring(12);
    let f = mod_star(&z12, 4);
    let g = mod_star(&z12, 6);
    assert_eq!(supremum_kernel_stars(&f, &f).unwrap(), f);
    let fg = supremum_kernel_stars(&f, &g).unwrap();
    let gf = supremum_kernel_stars(&g, &f).unwrap();
    assert_eq!(fg, gf);
    assert_eq!(fg, mod_star(&z12, 2));
    assert!(f.is_subset_of(&fg) && g.is_subset_of(&fg));
    // minimal among all kernel stars containing both
    for c in starreg_core::catalog::enumerate_congruences(&z12) {
        let candidate = congruence_star(&c);
        if f.is_subset_of(&candidate) && g.is_subset_of(&candidate) {
            assert!(fg.is_subset_of(&candidate));
        }
    }
}

#[test]
fn property_star_examples() {
    // pointed Z4: F = star of {0,2}, G = star of Z4
    let z4 = FiniteAlgebra::cyclic_group(4);
    let f = subgroup_star(&Subalgebra::new(z4.clone(), vec![0, 2]).unwrap());
    let g = subgroup_star(&Subalgebra::full(z4));
    assert!(verify_property_star(&f, &g).unwrap());
    assert!(verify_property_star(&f, &f).unwrap());

    // total Z12: F = mod 6, G = mod 3
    let z12 = FiniteAlgebra::cyclic_ring(12);
    let f = mod_star(&z12, 6);
    let g = mod_star(&z12, 3);
    assert!(verify_property_star(&f, &g).unwrap());

    // nesting violations are rejected
    let err = verify_property_star(&g, &f);
    assert!(matches!(err, Err(TheoremError::NotNested)));
}

#[test]
fn diamond_theorem_on_s3() {
    let s3 = FiniteAlgebra::symmetric_group(3);
    let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
    let m = Subalgebra::generated(s3.clone(), &[t]).unwrap();
    let outcome = diamond_iso(&subgroup_star(&a3_of_s3(&s3)), &m).unwrap();
    assert!(outcome.holds());
    assert_eq!(outcome.verdict.lhs.size(), 2);
    assert_eq!(outcome.verdict.rhs.size(), 2);
    let witness = outcome.verdict.witness.as_ref().unwrap();
    assert!(witness.is_isomorphism());
}

#[test]
fn diamond_theorem_with_m_inside_kernel_is_trivial() {
    let z4 = FiniteAlgebra::cyclic_group(4);
    let f = subgroup_star(&Subalgebra::new(z4.clone(), vec![0, 2]).unwrap());
    let m = Subalgebra::new(z4, vec![0, 2]).unwrap();
    let outcome = diamond_iso(&f, &m).unwrap();
    assert!(outcome.holds());
    assert_eq!(outcome.verdict.lhs.size(), 1);
    assert_eq!(outcome.verdict.rhs.size(), 1);
}

#[test]
fn diamond_theorem_on_d4_center_and_reflection() {
    let d4 = FiniteAlgebra::dihedral_group(4);
    let center = Subalgebra::new(d4.clone(), vec![0, 2]).unwrap();
    let m = Subalgebra::generated(d4, &[4]).unwrap();
    let outcome = diamond_iso(&subgroup_star(&center), &m).unwrap();
    assert!(outcome.holds());
    assert_eq!(outcome.verdict.lhs.size(), 2);
}

#[test]
fn double_quotient_on_z12_spot_instance() {
    // Z12/(mod 3) has size 3 and equals (Z12/(mod 6)) / (image of mod 3)
    let z12 = FiniteAlgebra::cyclic_ring(12);
    let f = mod_star(&z12, 6);
    let g = mod_star(&z12, 3);
    let outcome = double_quotient_iso(&f, &g).unwrap();
    assert!(outcome.holds());
    assert_eq!(outcome.verdict.lhs.size(), 3);
    assert_eq!(outcome.verdict.rhs.size(), 3);
}

#[test]
fn double_quotient_with_equal_stars_collapses() {
    let z12 = FiniteAlgebra::cyclic_ring(12);
    let f = mod_star(&z12, 6);
    let outcome = double_quotient_iso(&f, &f).unwrap();
    assert!(outcome.holds());
    assert_eq!(outcome.verdict.lhs.size(), 6);
}

#[test]
fn double_quotient_pointed_d4_rotation_tower() {
    // K = <r^2> inside L = <r>: D4/<r> and (D4/<r^2>)/(<r>/<r^2>) are both Z2
    let d4 = FiniteAlgebra::dihedral_group(4);
    let k = subgroup_star(&Subalgebra::new(d4.clone(), vec![0, 2]).unwrap());
    let l = subgroup_star(&Subalgebra::new(d4.clone(), vec![0, 1, 2, 3]).unwrap());
    let outcome = double_quotient_iso(&k, &l).unwrap();
    assert!(outcome.holds());
    assert_eq!(outcome.verdict.lhs.size(), 2);
    let z2 = FiniteAlgebra::cyclic_group(2);
    assert!(find_isomorphism(&outcome.verdict.lhs, &z2).is_some());
}

#[test]
fn zassenhaus_on_z4_x_z2_gives_three_z2_quotients() {
    let z4 = FiniteAlgebra::cyclic_group(4);
    let z2 = FiniteAlgebra::cyclic_group(2);
    let a = product(&z4, &z2).unwrap().algebra;
    // pair (x, y) has index 2x + y
    let u = Subalgebra::new(a.clone(), vec![0, 2, 4, 6]).unwrap();
    let v = Subalgebra::full(a.clone());
    let (u_alg, _) = u.to_algebra();
    let (v_alg, _) = v.to_algebra();
    // N1 = {0,2} x {0} lives at u-local positions of global {0, 4}
    let n1_local: Vec<usize> = [0usize, 4].iter().map(|&x| u.position(x).unwrap()).collect();
    let f = subgroup_star(&Subalgebra::new(u_alg, n1_local).unwrap());
    // N2 = {0} x Z2 = global {0, 1}
    let g = subgroup_star(&Subalgebra::new(v_alg, vec![0, 1]).unwrap());
    let outcome = zassenhaus(&a, &u, &v, &f, &g).unwrap();
    assert!(outcome.holds(), "trace: {}", outcome.trace_string());
    let z2 = FiniteAlgebra::cyclic_group(2);
    for q in [&outcome.left, &outcome.middle, &outcome.right] {
        assert_eq!(q.size(), 2);
        assert!(find_isomorphism(q, &z2).is_some());
    }
}

#[test]
fn zassenhaus_degenerate_u_equals_v() {
    let s3 = FiniteAlgebra::symmetric_group(3);
    let u = Subalgebra::full(s3.clone());
    let (u_alg, _) = u.to_algebra();
    let a3_local: Vec<usize> = (0..6).filter(|&x| u_alg.element_order(x) != 2).collect();
    let f = subgroup_star(&Subalgebra::new(u_alg, a3_local).unwrap());
    let outcome = zassenhaus(&s3, &u, &u, &f, &f).unwrap();
    assert!(outcome.holds());
    // all three quotients are U/F = S3/A3 of order 2
    assert_eq!(outcome.left.size(), 2);
    assert_eq!(outcome.middle.size(), 2);
    assert_eq!(outcome.right.size(), 2);
}

#[test]
fn zassenhaus_sweeps_s3_x_z2_with_classical_oracle() {
    // the classical subgroup form is checked inside every pointed instance
    let s3 = FiniteAlgebra::symmetric_group(3);
    let z2 = FiniteAlgebra::cyclic_group(2);
    let a = product(&s3, &z2).unwrap().algebra;
    let subs = starreg_core::catalog::enumerate_subalgebras(&a);
    let mut instances = 0;
    for u in &subs {
        let (u_alg, _) = u.to_algebra();
        let f_stars = starreg_core::catalog::enumerate_kernel_stars(&u_alg, IdealContext::Pointed)
            .unwrap();
        for v in &subs {
            let (v_alg, _) = v.to_algebra();
            let g_stars =
                starreg_core::catalog::enumerate_kernel_stars(&v_alg, IdealContext::Pointed)
                    .unwrap();
            for f in &f_stars {
                for g in &g_stars {
                    let outcome = zassenhaus(&a, u, v, f, g).unwrap();
                    assert!(
                        outcome.holds(),
                        "U={:?} V={:?} trace: {}",
                        u.elements(),
                        v.elements(),
                        outcome.trace_string()
                    );
                    assert_eq!(outcome.classical_group_form, Some(true));
                    instances += 1;
                }
            }
        }
    }
    assert!(instances > 500, "expected a real sweep, got {instances}");
}

#[test]
fn zassenhaus_sweeps_the_z2_x_z6_ring() {
    // a total-context instance of size 12: every admissible
    // (U, V, F, G) combination over the subrings of Z2 x Z6
    let z2 = FiniteAlgebra::cyclic_ring(2);
    let z6 = FiniteAlgebra::cyclic_ring(6);
    let a = product(&z2, &z6).unwrap().algebra;
    let subs = starreg_core::catalog::enumerate_subalgebras(&a);
    assert!(subs.len() >= 2, "expected a proper subring besides the whole ring");
    let mut instances = 0;
    for u in &subs {
        let (u_alg, _) = u.to_algebra();
        let f_stars =
            starreg_core::catalog::enumerate_kernel_stars(&u_alg, IdealContext::Total).unwrap();
        for v in &subs {
            let (v_alg, _) = v.to_algebra();
            let g_stars =
                starreg_core::catalog::enumerate_kernel_stars(&v_alg, IdealContext::Total)
                    .unwrap();
            for f in &f_stars {
                for g in &g_stars {
                    let outcome = zassenhaus(&a, u, v, f, g).unwrap();
                    assert!(
                        outcome.holds(),
                        "U={:?} V={:?} trace: {}",
                        u.elements(),
                        v.elements(),
                        outcome.trace_string()
                    );
                    instances += 1;
                }
            }
        }
    }
    assert!(instances >= 100, "expected a real sweep, got {instances}");
}

#[test]
fn good_theory_examples() {
    let z6 = FiniteAlgebra::cyclic_group(6);
    let k = subgroup_star(&Subalgebra::new(z6.clone(), vec![0, 3]).unwrap());
    let l = subgroup_star(&Subalgebra::new(z6.clone(), vec![0, 2, 4]).unwrap());
    let outcome = verify_good_theory_simplifications(&k, &l).unwrap();
    assert!(outcome.holds());
    assert_eq!(
        asymmetric_join_star(&k, &l).unwrap().encoded_subobject().unwrap().elements(),
        &[0, 1, 2, 3, 4, 5]
    );

    let outcome = verify_good_theory_simplifications(&k, &k).unwrap();
    assert!(outcome.holds());

    let z12 = FiniteAlgebra::cyclic_ring(12);
    let f = mod_star(&z12, 4);
    let g = mod_star(&z12, 6);
    let outcome = verify_good_theory_simplifications(&f, &g).unwrap();
    assert!(outcome.holds());
}

#[test]
fn asymmetric_join_three_way_agreement_up_to_order_16() {
    // join = set product = generated subgroup, for every normal subgroup
    // and subgroup of every catalog group
    for a in starreg_core::catalog::list_groups(16).unwrap() {
        let normals = starreg_core::catalog::enumerate_normal_subgroups(&a).unwrap();
        let subs = starreg_core::catalog::enumerate_subalgebras(&a);
        for n in &normals {
            let star = subgroup_star(n);
            for m in &subs {
                let join = asymmetric_join_sub(&star, m).unwrap();
                let km = set_product(&a, n.elements(), m.elements());
                assert_eq!(join.elements(), &km[..], "{}: KM mismatch", a.name());
                let mut seed = n.elements().to_vec();
                seed.extend_from_slice(m.elements());
                let generated = Subalgebra::generated(a.clone(), &seed).unwrap();
                assert_eq!(join, generated, "{}: generated mismatch", a.name());
            }
        }
    }
}

#[test]
fn supremum_minimality_over_small_catalogs() {
    // the supremum contains both arguments and refines every kernel star
    // that does, for every pair on every object of size <= 8
    let mut algebras = starreg_core::catalog::list_groups(8).unwrap();
    algebras.extend(starreg_core::catalog::list_rings(8).unwrap());
    for a in algebras {
        let ctx = if a.is_group() { IdealContext::Pointed } else { IdealContext::Total };
        let stars = starreg_core::catalog::enumerate_kernel_stars(&a, ctx).unwrap();
        for f in &stars {
            for g in &stars {
                let sup = supremum_kernel_stars(f, g).unwrap();
                assert!(f.is_subset_of(&sup) && g.is_subset_of(&sup));
                assert_eq!(sup, supremum_kernel_stars(g, f).unwrap());
                for candidate in &stars {
                    if f.is_subset_of(candidate) && g.is_subset_of(candidate) {
                        assert!(sup.is_subset_of(candidate));
                    }
                }
            }
        }
    }
}

#[test]
fn non_kernel_star_inputs_are_rejected() {
    let s3 = FiniteAlgebra::symmetric_group(3);
    let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
    let non_normal = Subalgebra::generated(s3.clone(), &[t]).unwrap();
    let bad = subgroup_star(&non_normal);
    let m = Subalgebra::smallest(s3);
    assert!(matches!(
        asymmetric_join_sub(&bad, &m),
        Err(TheoremError::NotKernelStar)
    ));
}
