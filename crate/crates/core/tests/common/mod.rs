//! Shared oracles for the integration tests. Everything here enumerates or
//! brute-forces independently of the code paths under test.

use starreg_core::algebra::{AlgebraRef, Relation};
use starreg_core::star::{star_of_relation, IdealContext, MonicStar};

/// Every subalgebra of `X × X` contained in the given relation, found by
/// breadth-first closure: each subalgebra arises by adding one generator
/// pair at a time.
pub fn all_subrelations(rel: &Relation) -> Vec<Relation> {
    let base = rel.base().clone();
    let bottom = Relation::generated(base.clone(), &[]).expect("empty seed");
    if !bottom.is_subset_of(rel) {
        return Vec::new();
    }
    let mut found: Vec<Relation> = vec![bottom];
    let mut frontier = found.clone();
    while let Some(current) = frontier.pop() {
        for &pair in rel.pairs() {
            if current.contains(pair) {
                continue;
            }
            let mut seed = current.pairs().to_vec();
            seed.push(pair);
            let bigger = Relation::generated(base.clone(), &seed).expect("seed in range");
            if bigger.is_subset_of(rel) && !found.contains(&bigger) {
                found.push(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    found
}

/// Every monic star on the base contained in the given relation.
pub fn all_monic_stars_within(rel: &Relation, context: IdealContext) -> Vec<MonicStar> {
    let mut out = Vec::new();
    for sub in all_subrelations(rel) {
        if let Ok(star) = MonicStar::new(context, sub.base().clone(), sub.pairs().to_vec()) {
            if !out.contains(&star) {
                out.push(star);
            }
        }
    }
    out
}

/// Every monic star on an algebra.
pub fn all_monic_stars(a: &AlgebraRef, context: IdealContext) -> Vec<MonicStar> {
    let full = Relation::full(a.clone());
    match context {
        IdealContext::Total => all_monic_stars_within(&full, context),
        IdealContext::Pointed => {
            // pointed stars are cut out of {e} × X first, which keeps the
            // enumeration small
            let star = star_of_relation(&full, context).expect("groups admit pointed");
            all_monic_stars_within(&star.as_relation(), context)
        }
    }
}
