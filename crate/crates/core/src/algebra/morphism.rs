//! Total element maps between algebras, with homomorphism checks.

use std::fmt;

use super::{AlgebraError, AlgebraRef, Subalgebra};

/// A total map between two carriers. Whether it is a homomorphism is a
/// property ([`Morphism::is_homomorphism`]), not a construction invariant:
/// the engine needs to exhibit *failing* candidates too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    dom: AlgebraRef,
    cod: AlgebraRef,
    map: Vec<usize>,
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.dom.name(), self.cod.name())
    }
}

impl Morphism {
    pub fn new(
        dom: AlgebraRef,
        cod: AlgebraRef,
        map: Vec<usize>,
    ) -> Result<Self, AlgebraError> {
        if map.len() != dom.size() {
            return Err(AlgebraError::MalformedTable);
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= cod.size()) {
            return Err(AlgebraError::IndexOutOfRange { index: bad, size: cod.size() });
        }
        Ok(Morphism { dom, cod, map })
    }

    pub fn identity(a: &AlgebraRef) -> Self {
        Morphism { dom: a.clone(), cod: a.clone(), map: (0..a.size()).collect() }
    }

    /// The constant map onto a distinguished element (groups: identity).
    pub fn constant(dom: &AlgebraRef, cod: &AlgebraRef, value: usize) -> Result<Self, AlgebraError> {
        cod.size().gt(&value).then_some(()).ok_or(AlgebraError::IndexOutOfRange {
            index: value,
            size: cod.size(),
        })?;
        Ok(Morphism { dom: dom.clone(), cod: cod.clone(), map: vec![value; dom.size()] })
    }

    pub fn dom(&self) -> &AlgebraRef {
        &self.dom
    }

    pub fn cod(&self) -> &AlgebraRef {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `outer ∘ inner`, defined when `inner.cod == outer.dom`.
    pub fn compose(outer: &Morphism, inner: &Morphism) -> Result<Morphism, AlgebraError> {
        if inner.cod != outer.dom {
            return Err(AlgebraError::CompositionMismatch);
        }
        let map = inner.map.iter().map(|&x| outer.map[x]).collect();
        Ok(Morphism { dom: inner.dom.clone(), cod: outer.cod.clone(), map })
    }

    /// Entry-wise check that every operation and distinguished element is
    /// preserved.
    pub fn is_homomorphism(&self) -> bool {
        if self.dom.signature() != self.cod.signature() {
            return false;
        }
        for (c_dom, c_cod) in self.dom.constants().into_iter().zip(self.cod.constants()) {
            if self.map[c_dom] != c_cod {
                return false;
            }
        }
        for (op_d, op_c) in self.dom.unary_ops().into_iter().zip(self.cod.unary_ops()) {
            for x in 0..self.dom.size() {
                if self.map[op_d.apply(x)] != op_c.apply(self.map[x]) {
                    return false;
                }
            }
        }
        for (op_d, op_c) in self.dom.binary_ops().into_iter().zip(self.cod.binary_ops()) {
            for x in 0..self.dom.size() {
                for y in 0..self.dom.size() {
                    if self.map[op_d.apply(x, y)] != op_c.apply(self.map[x], self.map[y]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.size() == self.cod.size() && self.is_injective()
    }

    /// The inverse map when this one is bijective.
    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0usize; self.cod.size()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(Morphism { dom: self.cod.clone(), cod: self.dom.clone(), map: inv })
    }

    /// Whether this map is a bijective homomorphism whose inverse is also a
    /// homomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.is_bijective()
            && self.is_homomorphism()
            && self.inverse().is_some_and(|inv| inv.is_homomorphism())
    }

    /// Element-wise image of a subalgebra of the domain.
    pub fn image_sub(&self, s: &Subalgebra) -> Result<Subalgebra, AlgebraError> {
        if s.parent() != &self.dom {
            return Err(AlgebraError::ParentMismatch);
        }
        let elements: Vec<usize> = s.elements().iter().map(|&x| self.map[x]).collect();
        Subalgebra::new(self.cod.clone(), elements)
    }

    /// Element-wise preimage of a subalgebra of the codomain.
    pub fn preimage_sub(&self, t: &Subalgebra) -> Result<Subalgebra, AlgebraError> {
        if t.parent() != &self.cod {
            return Err(AlgebraError::ParentMismatch);
        }
        let elements: Vec<usize> =
            (0..self.dom.size()).filter(|&x| t.contains(self.map[x])).collect();
        Subalgebra::new(self.dom.clone(), elements)
    }

    /// Image of the whole domain as a subalgebra of the codomain.
    pub fn image(&self) -> Result<Subalgebra, AlgebraError> {
        let elements: Vec<usize> = self.map.clone();
        Subalgebra::new(self.cod.clone(), elements)
    }
}

#[cfg(test)]
mod tests {
    use super::super::FiniteAlgebra;
    use super::*;

    #[test]
    fn mod_two_map_is_homomorphism() {
        let z4 = FiniteAlgebra::cyclic_group(4);
        let z2 = FiniteAlgebra::cyclic_group(2);
        let f = Morphism::new(z4, z2, vec![0, 1, 0, 1]).unwrap();
        assert!(f.is_homomorphism());
        assert!(f.is_surjective());
        assert!(!f.is_injective());
    }

    #[test]
    fn identity_is_homomorphism() {
        let z6 = FiniteAlgebra::cyclic_ring(6);
        assert!(Morphism::identity(&z6).is_homomorphism());
    }

    #[test]
    fn map_failing_at_one_plus_one_is_rejected() {
        // sends only 1 to 1, the rest to 0: 1+1=2 maps to 0 but 1+1=0 in Z2
        let z4 = FiniteAlgebra::cyclic_group(4);
        let z2 = FiniteAlgebra::cyclic_group(2);
        let f = Morphism::new(z4, z2, vec![0, 1, 0, 0]).unwrap();
        assert!(!f.is_homomorphism());
    }

    #[test]
    fn compose_checks_endpoints() {
        let z4 = FiniteAlgebra::cyclic_group(4);
        let z2 = FiniteAlgebra::cyclic_group(2);
        let f = Morphism::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        let id4 = Morphism::identity(&z4);
        let composed = Morphism::compose(&f, &id4).unwrap();
        assert_eq!(composed, f);
        assert!(Morphism::compose(&id4, &f).is_err());
    }

    #[test]
    fn image_and_preimage_of_subalgebras() {
        use super::super::{product, Subalgebra};
        let z2 = FiniteAlgebra::cyclic_group(2);
        let klein = product(&z2, &z2).unwrap();
        // S = {(0,0),(1,0)} = indices {0, 2}; its image under the first
        // projection is all of Z2
        let s = Subalgebra::new(klein.algebra.clone(), vec![0, 2]).unwrap();
        let image = klein.left.image_sub(&s).unwrap();
        assert_eq!(image.elements(), &[0, 1]);
        // the identity maps a subalgebra to itself
        let id = Morphism::identity(&klein.algebra);
        assert_eq!(id.image_sub(&s).unwrap(), s);
        // preimage of {0} under mod-2 is {0, 2}
        let z4 = FiniteAlgebra::cyclic_group(4);
        let z2b = FiniteAlgebra::cyclic_group(2);
        let f = Morphism::new(z4, z2b.clone(), vec![0, 1, 0, 1]).unwrap();
        let zero = Subalgebra::new(z2b, vec![0]).unwrap();
        assert_eq!(f.preimage_sub(&zero).unwrap().elements(), &[0, 2]);
    }

    #[test]
    fn ring_homomorphisms_preserve_one() {
        // Z6 -> Z6: x -> 3x preserves + and * but not 1, so it is rejected
        let z6 = FiniteAlgebra::cyclic_ring(6);
        let f = Morphism::new(z6.clone(), z6.clone(), vec![0, 3, 0, 3, 0, 3]).unwrap();
        assert!(!f.is_homomorphism());
    }
}
