//! Subalgebras as canonical sorted index sets.

use super::{AlgebraError, AlgebraRef, FiniteAlgebra, Morphism};

/// A subset of a carrier closed under all operations and containing the
/// distinguished elements. Elements are sorted, so equality is syntactic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    parent: AlgebraRef,
    elements: Vec<usize>,
}

impl Subalgebra {
    /// Validates closure and membership of the distinguished elements.
    pub fn new(parent: AlgebraRef, mut elements: Vec<usize>) -> Result<Self, AlgebraError> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&bad) = elements.iter().find(|&&x| x >= parent.size()) {
            return Err(AlgebraError::IndexOutOfRange { index: bad, size: parent.size() });
        }
        let member = membership(parent.size(), &elements);
        for c in parent.constants() {
            if !member[c] {
                return Err(AlgebraError::NotClosed { op: "constant" });
            }
        }
        for op in parent.unary_ops() {
            for &x in &elements {
                if !member[op.apply(x)] {
                    return Err(AlgebraError::NotClosed { op: op.name });
                }
            }
        }
        for op in parent.binary_ops() {
            for &x in &elements {
                for &y in &elements {
                    if !member[op.apply(x, y)] {
                        return Err(AlgebraError::NotClosed { op: op.name });
                    }
                }
            }
        }
        Ok(Subalgebra { parent, elements })
    }

    /// Least subalgebra containing `seed`: the distinguished elements are
    /// added and the set is closed under all operations to a fixed point.
    pub fn generated(parent: AlgebraRef, seed: &[usize]) -> Result<Self, AlgebraError> {
        if let Some(&bad) = seed.iter().find(|&&x| x >= parent.size()) {
            return Err(AlgebraError::IndexOutOfRange { index: bad, size: parent.size() });
        }
        let elements = close_elements(&parent, seed.iter().copied());
        Ok(Subalgebra { parent, elements })
    }

    /// The whole algebra as a subalgebra of itself.
    pub fn full(parent: AlgebraRef) -> Self {
        let elements = (0..parent.size()).collect();
        Subalgebra { parent, elements }
    }

    /// The subalgebra generated by the distinguished elements alone.
    pub fn smallest(parent: AlgebraRef) -> Self {
        Self::generated(parent, &[]).expect("empty seed is in range")
    }

    pub fn parent(&self) -> &AlgebraRef {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.elements.len() == self.parent.size()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Index of `x` inside the sorted element list.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn is_subset_of(&self, other: &Subalgebra) -> bool {
        self.parent == other.parent && self.elements.iter().all(|&x| other.contains(x))
    }

    /// Set intersection; always a subalgebra.
    pub fn intersect(&self, other: &Subalgebra) -> Result<Subalgebra, AlgebraError> {
        if self.parent != other.parent {
            return Err(AlgebraError::ParentMismatch);
        }
        let elements: Vec<usize> =
            self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Ok(Subalgebra { parent: self.parent.clone(), elements })
    }

    /// Reindexes the subalgebra as a standalone algebra, returning it along
    /// with the inclusion homomorphism back into the parent.
    pub fn to_algebra(&self) -> (AlgebraRef, Morphism) {
        let parent = &self.parent;
        let n = self.elements.len();
        let pos = |x: usize| self.position(x).expect("closure guarantees membership");
        let algebra = match parent.signature() {
            super::Signature::Group => {
                let mul: Vec<Vec<usize>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| pos(parent.group_mul(self.elements[i], self.elements[j])))
                            .collect()
                    })
                    .collect();
                FiniteAlgebra::group_from_mul(self.display_name(), &mul)
                    .expect("subalgebra of a group is a group")
            }
            super::Signature::Ring => {
                let add: Vec<Vec<usize>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| pos(parent.ring_add(self.elements[i], self.elements[j])))
                            .collect()
                    })
                    .collect();
                let mul: Vec<Vec<usize>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| pos(parent.ring_mul(self.elements[i], self.elements[j])))
                            .collect()
                    })
                    .collect();
                FiniteAlgebra::ring_from_tables(self.display_name(), &add, &mul)
                    .expect("subring of a ring is a ring")
            }
        };
        let embedding = Morphism::new(algebra.clone(), parent.clone(), self.elements.clone())
            .expect("inclusion is in range");
        (algebra, embedding)
    }

    fn display_name(&self) -> String {
        if self.elements.len() == self.parent.size() {
            self.parent.name().to_string()
        } else if self.elements.len() <= 8 {
            let list: Vec<String> = self.elements.iter().map(|x| x.to_string()).collect();
            format!("{}[{}]", self.parent.name(), list.join(" "))
        } else {
            format!("{}[{} elements]", self.parent.name(), self.elements.len())
        }
    }
}

fn membership(size: usize, elements: &[usize]) -> Vec<bool> {
    let mut member = vec![false; size];
    for &x in elements {
        member[x] = true;
    }
    member
}

/// Closure of a seed set under constants and all operations.
pub(crate) fn close_elements(
    parent: &AlgebraRef,
    seed: impl IntoIterator<Item = usize>,
) -> Vec<usize> {
    let size = parent.size();
    let mut member = vec![false; size];
    let mut queue: Vec<usize> = Vec::new();
    let push = |x: usize, member: &mut Vec<bool>, queue: &mut Vec<usize>| {
        if !member[x] {
            member[x] = true;
            queue.push(x);
        }
    };
    for c in parent.constants() {
        push(c, &mut member, &mut queue);
    }
    for x in seed {
        push(x, &mut member, &mut queue);
    }
    let unary = parent.unary_ops();
    let binary = parent.binary_ops();
    let mut processed: Vec<usize> = Vec::new();
    while let Some(x) = queue.pop() {
        for op in &unary {
            push(op.apply(x), &mut member, &mut queue);
        }
        for op in &binary {
            push(op.apply(x, x), &mut member, &mut queue);
            for &y in &processed {
                push(op.apply(x, y), &mut member, &mut queue);
                push(op.apply(y, x), &mut member, &mut queue);
            }
        }
        processed.push(x);
    }
    (0..size).filter(|&x| member[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::super::FiniteAlgebra;
    use super::*;

    #[test]
    fn s3_is_generated_by_a_transposition_and_a_three_cycle() {
        let s3 = FiniteAlgebra::symmetric_group(3);
        let transposition = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let cycle = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        let sub = Subalgebra::generated(s3.clone(), &[transposition, cycle]).unwrap();
        assert!(sub.is_full());
    }

    #[test]
    fn empty_seed_gives_trivial_subgroup() {
        let d4 = FiniteAlgebra::dihedral_group(4);
        let sub = Subalgebra::smallest(d4.clone());
        assert_eq!(sub.elements(), &[d4.group_identity()]);
    }

    #[test]
    fn z6_ring_is_generated_by_its_unit() {
        // 1 generates Z6 additively, so the empty seed closes to everything.
        let z6 = FiniteAlgebra::cyclic_ring(6);
        let sub = Subalgebra::smallest(z6);
        assert!(sub.is_full());
    }

    #[test]
    fn closure_is_idempotent() {
        let s3 = FiniteAlgebra::symmetric_group(3);
        for seed in 0..6 {
            let once = Subalgebra::generated(s3.clone(), &[seed]).unwrap();
            let twice = Subalgebra::generated(s3.clone(), once.elements()).unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn out_of_range_seed_is_rejected() {
        let z4 = FiniteAlgebra::cyclic_group(4);
        assert!(Subalgebra::generated(z4, &[7]).is_err());
    }

    #[test]
    fn non_closed_set_is_rejected() {
        let z4 = FiniteAlgebra::cyclic_group(4);
        assert!(Subalgebra::new(z4.clone(), vec![0, 1]).is_err());
        assert!(Subalgebra::new(z4, vec![0, 2]).is_ok());
    }

    #[test]
    fn to_algebra_roundtrip() {
        let z4 = FiniteAlgebra::cyclic_group(4);
        let sub = Subalgebra::new(z4.clone(), vec![0, 2]).unwrap();
        let (alg, embed) = sub.to_algebra();
        assert_eq!(alg.size(), 2);
        assert!(embed.is_homomorphism());
        assert!(embed.is_injective());
        assert_eq!(embed.cod(), &z4);
    }
}
