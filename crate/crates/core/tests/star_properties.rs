//! Structural properties of the star calculus, checked by enumeration.
//!
//! The universal-property checks (coequalizer, star-pullback, largest
//! monic substar) run by full enumeration on bases of size <= 5; beyond
//! that the constructive definitions take over.

mod common;

use common::{all_monic_stars, all_monic_stars_within};
use starreg_core::algebra::{
    find_isomorphism, Congruence, FiniteAlgebra, Morphism, Relation, Subalgebra,
};
use starreg_core::catalog::{
    enumerate_congruences, enumerate_kernel_stars, list_groups, list_rings, sample_morphisms,
};
use starreg_core::star::{
    coequalizer_of_star, image_star, inverse_image_star, is_kernel_star, kernel_star,
    mono_criterion_holds, n_kernel, star_of_relation, IdealContext, MonicStar,
};

fn contexts_for(a: &starreg_core::AlgebraRef) -> Vec<IdealContext> {
    if a.is_group() {
        vec![IdealContext::Pointed, IdealContext::Total]
    } else {
        vec![IdealContext::Total]
    }
}

fn small_bases() -> Vec<starreg_core::AlgebraRef> {
    let mut out: Vec<starreg_core::AlgebraRef> =
        list_groups(5).unwrap().into_iter().collect();
    out.extend(list_rings(5).unwrap());
    out
}

/// A mixed sample of homomorphisms around `a` with both endpoints of size
/// at most 5 (the full-enumeration budget): identities, quotient maps,
/// subalgebra embeddings and their composites, the diagonal into `a × a`,
/// and (for groups) the zero map. Embeddings and the diagonal keep the
/// sample from being surjective-only.
fn enumeration_morphisms(a: &starreg_core::AlgebraRef) -> Vec<Morphism> {
    let mut out: Vec<Morphism> = sample_morphisms(a);
    let square = starreg_core::algebra::product(a, a).unwrap().algebra;
    let diag: Vec<usize> =
        (0..a.size()).map(|x| starreg_core::algebra::pair_index(x, x, a.size())).collect();
    out.push(Morphism::new(a.clone(), square, diag).unwrap());
    if let Some(e) = a.pointed_unit() {
        out.push(Morphism::constant(a, a, e).unwrap());
    }
    out.retain(|f| f.dom().size() <= 5 && f.cod().size() <= 5);
    out
}

#[test]
fn star_of_relation_is_the_largest_monic_star_below() {
    for a in small_bases() {
        for ctx in contexts_for(&a) {
            for rel in [
                Relation::full(a.clone()),
                Relation::diagonal(a.clone()),
                Relation::generated(a.clone(), &[(0, a.size() - 1)]).unwrap(),
            ] {
                let star = star_of_relation(&rel, ctx).unwrap();
                // contained in the relation
                assert!(star
                    .pairs()
                    .iter()
                    .all(|&p| rel.pairs().binary_search(&p).is_ok()));
                // and the largest such monic star
                for candidate in all_monic_stars_within(&rel, ctx) {
                    assert!(
                        candidate.is_subset_of(&star),
                        "{} ctx {ctx}: candidate with {} pairs escapes the star",
                        a.name(),
                        candidate.len()
                    );
                }
            }
        }
    }
}

#[test]
fn coequalizer_universality_by_congruence_enumeration() {
    for a in small_bases() {
        for ctx in contexts_for(&a) {
            for star in all_monic_stars(&a, ctx) {
                let (quotient, q) = coequalizer_of_star(&star).unwrap();
                // q coequalizes the star
                for &(x, y) in star.pairs() {
                    assert_eq!(q.apply(x), q.apply(y));
                }
                // universality: every quotient coequalizing the star factors
                // through q, uniquely since q is surjective
                for c in enumerate_congruences(&a) {
                    let coequalizes = star.pairs().iter().all(|&(x, y)| c.relates(x, y));
                    if !coequalizes {
                        continue;
                    }
                    let (target, m) = c.quotient().unwrap();
                    let mut factor = vec![usize::MAX; quotient.size()];
                    for x in 0..a.size() {
                        let class = q.apply(x);
                        let value = m.apply(x);
                        assert!(
                            factor[class] == usize::MAX || factor[class] == value,
                            "factorization through the coequalizer is ill-defined"
                        );
                        factor[class] = value;
                    }
                    let h = Morphism::new(quotient.clone(), target, factor).unwrap();
                    assert!(h.is_homomorphism());
                    assert_eq!(Morphism::compose(&h, &q).unwrap(), m);
                }
            }
        }
    }
}

#[test]
fn star_pullback_universality_of_inverse_images() {
    // over a mixed sample: bijections, surjections and non-surjective maps
    for a in small_bases() {
        for ctx in contexts_for(&a) {
            for f in enumeration_morphisms(&a) {
                let stars_on_dom = all_monic_stars(f.dom(), ctx);
                for t in all_monic_stars(f.cod(), ctx) {
                    let pre = inverse_image_star(&f, &t).unwrap();
                    // the image of the preimage lands inside t
                    assert!(image_star(&f, &pre).unwrap().is_subset_of(&t));
                    // universality: any star whose image lands in t factors
                    // through the preimage, i.e. is contained in it
                    for s in &stars_on_dom {
                        if image_star(&f, s).unwrap().is_subset_of(&t) {
                            assert!(s.is_subset_of(&pre));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn inverse_image_equals_star_of_preimage_relation() {
    // definitional identity: the star-pullback result is the star of the
    // plain inverse-image relation
    for a in small_bases() {
        for ctx in contexts_for(&a) {
            for q in enumeration_morphisms(&a) {
                let dom = q.dom().clone();
                for t in all_monic_stars(q.cod(), ctx) {
                    let pre = inverse_image_star(&q, &t).unwrap();
                    let mut pairs = Vec::new();
                    for x in 0..dom.size() {
                        for y in 0..dom.size() {
                            if t.contains((q.apply(x), q.apply(y))) {
                                pairs.push((x, y));
                            }
                        }
                    }
                    let rel = Relation::new(dom.clone(), pairs).unwrap();
                    assert_eq!(pre, star_of_relation(&rel, ctx).unwrap());
                }
            }
        }
    }
}

#[test]
fn kernel_stars_biject_with_their_coequalizers() {
    for a in list_groups(8).unwrap() {
        for ctx in contexts_for(&a) {
            for star in enumerate_kernel_stars(&a, ctx).unwrap() {
                assert!(is_kernel_star(&star).unwrap());
                let (_, q) = coequalizer_of_star(&star).unwrap();
                assert_eq!(kernel_star(&q, ctx).unwrap(), star);
            }
        }
    }
    for a in list_rings(8).unwrap() {
        for star in enumerate_kernel_stars(&a, IdealContext::Total).unwrap() {
            let (_, q) = coequalizer_of_star(&star).unwrap();
            assert_eq!(kernel_star(&q, IdealContext::Total).unwrap(), star);
        }
    }
}

#[test]
fn n_kernel_inclusions_are_injective_homomorphisms() {
    for a in list_groups(8).unwrap() {
        for f in sample_morphisms(&a) {
            for ctx in [IdealContext::Pointed, IdealContext::Total] {
                let k = n_kernel(&f, ctx).unwrap();
                let (_, embedding) = k.to_algebra();
                assert!(embedding.is_injective());
                assert!(embedding.is_homomorphism());
            }
        }
    }
}

#[test]
fn mono_criterion_over_catalog_morphisms() {
    for a in list_groups(8).unwrap() {
        for f in sample_morphisms(&a) {
            for ctx in [IdealContext::Pointed, IdealContext::Total] {
                assert!(mono_criterion_holds(&f, ctx).unwrap(), "{f} in {ctx}");
            }
        }
    }
    for a in list_rings(8).unwrap() {
        for f in sample_morphisms(&a) {
            assert!(mono_criterion_holds(&f, IdealContext::Total).unwrap(), "{f}");
        }
    }
}

#[test]
fn image_star_preserves_the_pointed_leg() {
    // the image of a pointed star along any homomorphism is again pointed:
    // its pairs keep the identity in the first component
    for a in list_groups(8).unwrap() {
        let stars = all_monic_stars(&a, IdealContext::Pointed);
        for f in sample_morphisms(&a) {
            if f.dom() != &a {
                continue;
            }
            let e = f.cod().group_identity();
            for s in &stars {
                let img = image_star(&f, s).unwrap();
                assert!(img.pairs().iter().all(|&(x, _)| x == e));
                assert!(img.encoded_subobject().is_some());
            }
        }
    }
}

#[test]
fn pointed_kernel_star_encodes_the_classical_kernel() {
    let s3 = FiniteAlgebra::symmetric_group(3);
    let z2 = FiniteAlgebra::cyclic_group(2);
    let sign: Vec<usize> = (0..6).map(|x| usize::from(s3.element_order(x) == 2)).collect();
    let f = Morphism::new(s3.clone(), z2, sign).unwrap();
    let ks = kernel_star(&f, IdealContext::Pointed).unwrap();
    let classical = n_kernel(&f, IdealContext::Pointed).unwrap();
    assert_eq!(ks.encoded_subobject().unwrap(), classical);
}

#[test]
fn quotients_by_isomorphic_congruences_are_isomorphic() {
    // sanity link between congruences, stars and quotients on one object
    let z12 = FiniteAlgebra::cyclic_ring(12);
    let c = Congruence::generated(z12.clone(), &[(0, 4)]).unwrap();
    let star = MonicStar::from_congruence(&c);
    let (via_star, _) = coequalizer_of_star(&star).unwrap();
    let (via_congruence, _) = c.quotient().unwrap();
    assert!(find_isomorphism(&via_star, &via_congruence).is_some());
}

#[test]
fn subalgebra_minimality_against_enumeration() {
    // generated subalgebras are minimal among enumerated subalgebras
    // containing the seed
    for a in list_groups(8).unwrap().into_iter().chain(list_rings(8).unwrap()) {
        let subs = starreg_core::catalog::enumerate_subalgebras(&a);
        for seed in [vec![], vec![a.size() - 1], vec![0, a.size() / 2]] {
            let generated = Subalgebra::generated(a.clone(), &seed).unwrap();
            for candidate in &subs {
                if seed.iter().all(|&x| candidate.contains(x)) {
                    assert!(generated.is_subset_of(candidate));
                }
            }
        }
    }
}

#[test]
fn congruence_minimality_against_enumeration() {
    for a in list_groups(8).unwrap().into_iter().chain(list_rings(8).unwrap()) {
        let congruences = enumerate_congruences(&a);
        let pairs = vec![(0, a.size() - 1)];
        let generated = Congruence::generated(a.clone(), &pairs).unwrap();
        for candidate in &congruences {
            if pairs.iter().all(|&(x, y)| candidate.relates(x, y)) {
                assert!(generated.is_refinement_of(candidate));
            }
        }
    }
}
