//! Property tests over randomized inputs: relabelings, random seeds and
//! random pair sets, plus fixture-format roundtrips.

use proptest::prelude::*;

use starreg_core::algebra::{
    find_isomorphism, text, Congruence, FiniteAlgebra, Subalgebra,
};

fn catalog_member(index: usize) -> starreg_core::AlgebraRef {
    let all: Vec<starreg_core::AlgebraRef> = vec![
        FiniteAlgebra::cyclic_group(6),
        FiniteAlgebra::cyclic_group(8),
        FiniteAlgebra::dihedral_group(4),
        FiniteAlgebra::symmetric_group(3),
        FiniteAlgebra::quaternion_group(),
        FiniteAlgebra::cyclic_ring(8),
        FiniteAlgebra::cyclic_ring(12),
    ];
    all[index % all.len()].clone()
}

/// Relabels a group's carrier by a permutation; the result is a group with
/// the same structure, so the isomorphism search must find a witness.
fn relabel(a: &starreg_core::AlgebraRef, perm: &[usize]) -> starreg_core::AlgebraRef {
    let n = a.size();
    let mut inverse = vec![0usize; n];
    for (i, &p) in perm.iter().enumerate() {
        inverse[p] = i;
    }
    if a.is_group() {
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| perm[a.group_mul(inverse[i], inverse[j])]).collect())
            .collect();
        FiniteAlgebra::group_from_mul("relabeled", &mul).unwrap()
    } else {
        let add: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| perm[a.ring_add(inverse[i], inverse[j])]).collect())
            .collect();
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| perm[a.ring_mul(inverse[i], inverse[j])]).collect())
            .collect();
        FiniteAlgebra::ring_from_tables("relabeled", &add, &mul).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabeled_structures_are_found_isomorphic(
        index in 0usize..7,
        seed in any::<u64>(),
    ) {
        let a = catalog_member(index);
        let n = a.size();
        // Fisher-Yates from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let b = relabel(&a, &perm);
        let witness = find_isomorphism(&a, &b);
        prop_assert!(witness.is_some());
        prop_assert!(witness.unwrap().is_isomorphism());
    }

    #[test]
    fn generated_subalgebra_is_closed_idempotent_superset(
        index in 0usize..7,
        raw_seed in proptest::collection::vec(0usize..24, 0..4),
    ) {
        let a = catalog_member(index);
        let seed: Vec<usize> = raw_seed.into_iter().map(|x| x % a.size()).collect();
        let sub = Subalgebra::generated(a.clone(), &seed).unwrap();
        for &x in &seed {
            prop_assert!(sub.contains(x));
        }
        let again = Subalgebra::generated(a.clone(), sub.elements()).unwrap();
        prop_assert_eq!(&again, &sub);
        // closure really is closed
        prop_assert!(Subalgebra::new(a, sub.elements().to_vec()).is_ok());
    }

    #[test]
    fn generated_congruence_contains_pairs_and_is_least(
        index in 0usize..7,
        raw_pairs in proptest::collection::vec((0usize..24, 0usize..24), 0..3),
    ) {
        let a = catalog_member(index);
        let pairs: Vec<(usize, usize)> =
            raw_pairs.into_iter().map(|(x, y)| (x % a.size(), y % a.size())).collect();
        let c = Congruence::generated(a.clone(), &pairs).unwrap();
        for &(x, y) in &pairs {
            prop_assert!(c.relates(x, y));
        }
        for candidate in starreg_core::catalog::enumerate_congruences(&a) {
            if pairs.iter().all(|&(x, y)| candidate.relates(x, y)) {
                prop_assert!(c.is_refinement_of(&candidate));
            }
        }
    }

    #[test]
    fn fixture_text_roundtrips(index in 0usize..7) {
        let a = catalog_member(index);
        let text = text::write_algebra(&a);
        let back = text::parse_algebra(&text).unwrap();
        prop_assert_eq!(&back, &a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn relabelings_never_fake_an_isomorphism(
        pair in 0usize..10,
        seed in any::<u64>(),
    ) {
        // relabel one side of a non-isomorphic pair arbitrarily; the search
        // must still refute
        let z2 = FiniteAlgebra::cyclic_group(2);
        let order8: Vec<starreg_core::AlgebraRef> = vec![
            FiniteAlgebra::cyclic_group(8),
            starreg_core::algebra::product(&z2, &FiniteAlgebra::cyclic_group(4))
                .unwrap()
                .algebra,
            starreg_core::algebra::product(
                &z2,
                &starreg_core::algebra::product(&z2, &z2).unwrap().algebra,
            )
            .unwrap()
            .algebra,
            FiniteAlgebra::dihedral_group(4),
            FiniteAlgebra::quaternion_group(),
        ];
        // the 10 unordered distinct pairs among the five order-8 groups
        let (i, j) = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)][pair];
        let mut perm: Vec<usize> = (0..8).collect();
        let mut state = seed | 1;
        for k in (1..8usize).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let l = (state >> 33) as usize % (k + 1);
            perm.swap(k, l);
        }
        let scrambled = relabel(&order8[j], &perm);
        prop_assert!(find_isomorphism(&order8[i], &scrambled).is_none());
        prop_assert!(find_isomorphism(&scrambled, &order8[i]).is_none());
    }
}

#[test]
fn fixture_files_roundtrip_on_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixtures.txt");
    let algebras = vec![
        FiniteAlgebra::symmetric_group(3),
        FiniteAlgebra::cyclic_ring(6),
        FiniteAlgebra::quaternion_group(),
    ];
    text::write_catalog_file(&path, &algebras).unwrap();
    let back = text::read_catalog_file(&path).unwrap();
    assert_eq!(back, algebras);
}
