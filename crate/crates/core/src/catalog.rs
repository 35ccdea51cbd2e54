//! Generators and exhaustive enumerators of small structures.
//!
//! The catalogs feed every verification sweep: small groups (cyclics,
//! products of cyclics, dihedrals, symmetric groups, the quaternion group)
//! and small rings (modular rings and their products), plus exhaustive
//! enumeration of subalgebras, normal subgroups, congruences and kernel
//! stars per object.

use thiserror::Error;

use crate::algebra::{
    find_isomorphism, product, AlgebraError, AlgebraRef, Congruence, FiniteAlgebra, Morphism,
    Subalgebra,
};
use crate::star::{IdealContext, MonicStar, StarError};

/// Hard cap on group catalog orders.
pub const GROUP_CAP: usize = 16;
/// Hard cap on ring catalog sizes.
pub const RING_CAP: usize = 12;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("requested size {requested} exceeds the {family} cap {cap}")]
    CapExceeded { family: &'static str, requested: usize, cap: usize },
    #[error("unknown constructor name {0:?}")]
    UnknownConstructor(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Star(#[from] StarError),
}

/// Which family a catalog draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Groups,
    Rings,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Groups => write!(f, "groups"),
            Family::Rings => write!(f, "rings"),
        }
    }
}

/// Selection of a catalog: family, size bound, extra named constructors.
#[derive(Debug, Clone)]
pub struct CatalogSpec {
    pub family: Family,
    pub max_size: usize,
    /// Extra constructors by name (`"Z12"`, `"D5"`, `"S4"`, `"Q8"`,
    /// `"Z2xZ2"`), included regardless of `max_size` but still capped.
    pub extras: Vec<String>,
    /// Deduplicate up to isomorphism (on by default).
    pub dedup: bool,
}

impl CatalogSpec {
    pub fn groups(max_size: usize) -> Self {
        CatalogSpec { family: Family::Groups, max_size, extras: Vec::new(), dedup: true }
    }

    pub fn rings(max_size: usize) -> Self {
        CatalogSpec { family: Family::Rings, max_size, extras: Vec::new(), dedup: true }
    }

    pub fn cap(&self) -> usize {
        match self.family {
            Family::Groups => GROUP_CAP,
            Family::Rings => RING_CAP,
        }
    }

    fn check_cap(&self) -> Result<(), CatalogError> {
        if self.max_size > self.cap() {
            return Err(CatalogError::CapExceeded {
                family: match self.family {
                    Family::Groups => "group",
                    Family::Rings => "ring",
                },
                requested: self.max_size,
                cap: self.cap(),
            });
        }
        Ok(())
    }

    /// Builds the catalog this spec describes.
    pub fn build(&self) -> Result<Vec<AlgebraRef>, CatalogError> {
        self.check_cap()?;
        let mut all = match self.family {
            Family::Groups => raw_groups(self.max_size),
            Family::Rings => raw_rings(self.max_size),
        };
        for name in &self.extras {
            let extra = constructor_by_name(name)?;
            let matches_family = match self.family {
                Family::Groups => extra.is_group(),
                Family::Rings => extra.is_ring(),
            };
            if !matches_family {
                return Err(CatalogError::UnknownConstructor(format!(
                    "{name} is not in the {} family",
                    self.family
                )));
            }
            if extra.size() > self.cap() {
                return Err(CatalogError::CapExceeded {
                    family: match self.family {
                        Family::Groups => "group",
                        Family::Rings => "ring",
                    },
                    requested: extra.size(),
                    cap: self.cap(),
                });
            }
            all.push(extra);
        }
        Ok(if self.dedup { dedup_up_to_isomorphism(all) } else { all })
    }
}

/// Groups up to `max_order`, deduplicated up to isomorphism.
pub fn list_groups(max_order: usize) -> Result<Vec<AlgebraRef>, CatalogError> {
    if max_order > GROUP_CAP {
        return Err(CatalogError::CapExceeded {
            family: "group",
            requested: max_order,
            cap: GROUP_CAP,
        });
    }
    Ok(dedup_up_to_isomorphism(raw_groups(max_order)))
}

/// Rings up to `max_size`, deduplicated up to isomorphism.
pub fn list_rings(max_size: usize) -> Result<Vec<AlgebraRef>, CatalogError> {
    if max_size > RING_CAP {
        return Err(CatalogError::CapExceeded {
            family: "ring",
            requested: max_size,
            cap: RING_CAP,
        });
    }
    Ok(dedup_up_to_isomorphism(raw_rings(max_size)))
}

fn raw_groups(max_order: usize) -> Vec<AlgebraRef> {
    let mut out: Vec<AlgebraRef> = Vec::new();
    for n in 1..=max_order {
        out.push(FiniteAlgebra::cyclic_group(n));
    }
    out.extend(cyclic_products(max_order, Family::Groups));
    for n in 3..=8 {
        if 2 * n <= max_order {
            out.push(FiniteAlgebra::dihedral_group(n));
        }
    }
    if 6 <= max_order {
        out.push(FiniteAlgebra::symmetric_group(3));
    }
    if 24 <= max_order {
        out.push(FiniteAlgebra::symmetric_group(4));
    }
    if 8 <= max_order {
        out.push(FiniteAlgebra::quaternion_group());
    }
    out
}

fn raw_rings(max_size: usize) -> Vec<AlgebraRef> {
    let mut out: Vec<AlgebraRef> = Vec::new();
    for n in 1..=max_size {
        out.push(FiniteAlgebra::cyclic_ring(n));
    }
    out.extend(cyclic_products(max_size, Family::Rings));
    out
}

/// All products of at least two cyclic factors (each of size >= 2) with
/// total size within the bound, factors in non-decreasing order.
fn cyclic_products(max_size: usize, family: Family) -> Vec<AlgebraRef> {
    let mut out = Vec::new();
    let mut factors: Vec<usize> = Vec::new();
    fn recurse(
        factors: &mut Vec<usize>,
        size: usize,
        min_factor: usize,
        max_size: usize,
        family: Family,
        out: &mut Vec<AlgebraRef>,
    ) {
        if factors.len() >= 2 {
            out.push(build_cyclic_product(factors, family));
        }
        for f in min_factor..=max_size {
            if size * f > max_size {
                break;
            }
            factors.push(f);
            recurse(factors, size * f, f, max_size, family, out);
            factors.pop();
        }
    }
    recurse(&mut factors, 1, 2, max_size, family, &mut out);
    out
}

fn build_cyclic_product(factors: &[usize], family: Family) -> AlgebraRef {
    let make = |n: usize| match family {
        Family::Groups => FiniteAlgebra::cyclic_group(n),
        Family::Rings => FiniteAlgebra::cyclic_ring(n),
    };
    let mut acc = make(factors[0]);
    for &f in &factors[1..] {
        acc = product(&acc, &make(f)).expect("same signature").algebra;
    }
    acc
}

/// Resolves a constructor name: `Z<n>`, `D<n>`, `S<n>`, `Q8`, or a product
/// like `Z2xZ4`. Ring names use the prefix `R` (`R6`, `R2xR3`).
pub fn constructor_by_name(name: &str) -> Result<AlgebraRef, CatalogError> {
    let parts: Vec<&str> = name.split('x').collect();
    let mut algebras = Vec::new();
    for part in &parts {
        algebras.push(single_constructor(part.trim())?);
    }
    let mut iter = algebras.into_iter();
    let mut acc = iter.next().ok_or_else(|| CatalogError::UnknownConstructor(name.into()))?;
    for next in iter {
        acc = product(&acc, &next).map_err(CatalogError::Algebra)?.algebra;
    }
    Ok(acc)
}

fn single_constructor(name: &str) -> Result<AlgebraRef, CatalogError> {
    let bad = || CatalogError::UnknownConstructor(name.to_string());
    let (prefix, digits) = name.split_at(1);
    let n: usize = digits.parse().map_err(|_| bad())?;
    match prefix {
        "Z" => Ok(FiniteAlgebra::cyclic_group(n)),
        "R" => Ok(FiniteAlgebra::cyclic_ring(n)),
        "D" if n >= 1 => Ok(FiniteAlgebra::dihedral_group(n)),
        "S" if (1..=4).contains(&n) => Ok(FiniteAlgebra::symmetric_group(n)),
        "Q" if n == 8 => Ok(FiniteAlgebra::quaternion_group()),
        _ => Err(bad()),
    }
}

fn dedup_up_to_isomorphism(all: Vec<AlgebraRef>) -> Vec<AlgebraRef> {
    let mut kept: Vec<AlgebraRef> = Vec::new();
    for candidate in all {
        if !kept.iter().any(|k| find_isomorphism(k, &candidate).is_some()) {
            kept.push(candidate);
        }
    }
    kept
}

/// Every subalgebra of `a`.
///
/// Closure of all seeds of size <= 2, then joins to a fixed point. Complete
/// because any subalgebra is the join of the one-generated subalgebras of
/// its elements; validated against all-subsets enumeration in the tests.
pub fn enumerate_subalgebras(a: &AlgebraRef) -> Vec<Subalgebra> {
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let push = |elements: Vec<usize>, seen: &mut Vec<Vec<usize>>| -> bool {
        if seen.contains(&elements) {
            false
        } else {
            seen.push(elements);
            true
        }
    };
    for x in 0..a.size() {
        for y in x..a.size() {
            let sub = Subalgebra::generated(a.clone(), &[x, y]).expect("in range");
            push(sub.elements().to_vec(), &mut seen);
        }
    }
    push(Subalgebra::smallest(a.clone()).elements().to_vec(), &mut seen);
    loop {
        let mut added = false;
        let snapshot = seen.clone();
        for (i, s) in snapshot.iter().enumerate() {
            for t in &snapshot[i + 1..] {
                let mut union = s.clone();
                union.extend_from_slice(t);
                let join = Subalgebra::generated(a.clone(), &union).expect("in range");
                added |= push(join.elements().to_vec(), &mut seen);
            }
        }
        if !added {
            break;
        }
    }
    seen.sort_by(|s, t| s.len().cmp(&t.len()).then_with(|| s.cmp(t)));
    seen.into_iter()
        .map(|elements| Subalgebra::new(a.clone(), elements).expect("closed by construction"))
        .collect()
}

/// Subgroups stable under conjugation by every element.
pub fn enumerate_normal_subgroups(a: &AlgebraRef) -> Result<Vec<Subalgebra>, CatalogError> {
    if !a.is_group() {
        return Err(CatalogError::Algebra(AlgebraError::SignatureMismatch(
            a.signature(),
            crate::algebra::Signature::Group,
        )));
    }
    Ok(enumerate_subalgebras(a)
        .into_iter()
        .filter(|sub| {
            (0..a.size()).all(|g| {
                sub.elements().iter().all(|&x| {
                    sub.contains(a.group_mul(a.group_mul(g, x), a.group_inv(g)))
                })
            })
        })
        .collect())
}

/// Every congruence of `a`: closure of the principal congruences under
/// binary joins (each congruence is a join of principal ones), plus the
/// diagonal.
pub fn enumerate_congruences(a: &AlgebraRef) -> Vec<Congruence> {
    let mut seen: Vec<Congruence> = vec![Congruence::diagonal(a.clone())];
    for x in 0..a.size() {
        for y in x + 1..a.size() {
            let c = Congruence::generated(a.clone(), &[(x, y)]).expect("in range");
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
    }
    loop {
        let mut added = false;
        let snapshot = seen.clone();
        for (i, c) in snapshot.iter().enumerate() {
            for d in &snapshot[i + 1..] {
                let join = c.join(d).expect("same parent");
                if !seen.contains(&join) {
                    seen.push(join);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    seen.sort_by_key(|c| {
        let mut classes: Vec<Vec<usize>> = c.classes();
        classes.sort();
        (c.class_count(), format!("{classes:?}"))
    });
    seen
}

/// Every kernel star on `a` in the given context: pointed kernel stars are
/// the stars of normal subgroups, total kernel stars are congruences.
pub fn enumerate_kernel_stars(
    a: &AlgebraRef,
    context: IdealContext,
) -> Result<Vec<MonicStar>, CatalogError> {
    match context {
        IdealContext::Pointed => enumerate_normal_subgroups(a)?
            .iter()
            .map(|n| MonicStar::from_subgroup(n).map_err(CatalogError::Star))
            .collect(),
        IdealContext::Total => {
            Ok(enumerate_congruences(a).iter().map(MonicStar::from_congruence).collect())
        }
    }
}

/// A mixed morphism sample for one object: the identity, all subalgebra
/// embeddings, all congruence quotient maps, and their composites
/// (embedding followed by quotient).
pub fn sample_morphisms(a: &AlgebraRef) -> Vec<Morphism> {
    let mut out = vec![Morphism::identity(a)];
    let subs = enumerate_subalgebras(a);
    let quotients: Vec<Morphism> = enumerate_congruences(a)
        .iter()
        .map(|c| c.quotient().expect("valid congruence").1)
        .collect();
    for sub in &subs {
        let (_, embedding) = sub.to_algebra();
        for q in &quotients {
            out.push(Morphism::compose(q, &embedding).expect("endpoints line up"));
        }
        out.push(embedding);
    }
    out.extend(quotients);
    out
}

/// All surjective quotient maps out of `a`, one per congruence.
pub fn surjections_from(a: &AlgebraRef) -> Vec<Morphism> {
    enumerate_congruences(a)
        .iter()
        .map(|c| c.quotient().expect("valid congruence").1)
        .collect()
}
