//! Exhaustive isomorphism search with invariant pruning.
//!
//! The search backtracks over images of a generating sequence and lets
//! constraint propagation determine everything else, so at catalog sizes
//! (orders up to 16, with 24 for S4) absence of a witness is definitive.

use super::{AlgebraRef, Morphism, Signature, Subalgebra};

/// Isomorphism-invariant fingerprint of a single element.
///
/// Groups: `[order, conjugacy class size]`. Rings: `[additive order,
/// unit flag, additive order of the square]`. Any isomorphism must map an
/// element onto one with the same fingerprint, which is what makes the
/// backtracking sharp enough for exhaustive sweeps.
pub fn element_invariant(a: &AlgebraRef, x: usize) -> Vec<usize> {
    match a.signature() {
        Signature::Group => vec![a.element_order(x), a.conjugacy_class_size(x)],
        Signature::Ring => vec![
            a.element_order(x),
            usize::from(a.ring_is_unit(x)),
            a.element_order(a.ring_mul(x, x)),
        ],
    }
}

/// A sequence of elements that generates the whole algebra, chosen greedily
/// so each entry strictly enlarges the generated subalgebra.
pub fn generating_sequence(a: &AlgebraRef) -> Vec<usize> {
    let mut generated = Subalgebra::smallest(a.clone());
    let mut gens = Vec::new();
    while !generated.is_full() {
        let next = (0..a.size()).find(|&x| !generated.contains(x)).expect("not yet full");
        gens.push(next);
        let mut seed = generated.elements().to_vec();
        seed.push(next);
        generated = Subalgebra::generated(a.clone(), &seed).expect("seed in range");
    }
    gens
}

/// Searches for an isomorphism between two algebras of the same signature.
///
/// Returns a bijective homomorphism whose inverse is also a homomorphism,
/// or `None` when no isomorphism exists. The search is exhaustive: it
/// enumerates all images of a generating sequence compatible with the
/// element fingerprints, and propagation extends each partial assignment
/// to the generated subalgebra or refutes it.
pub fn find_isomorphism(a: &AlgebraRef, b: &AlgebraRef) -> Option<Morphism> {
    if a.signature() != b.signature() || a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let inv_a: Vec<Vec<usize>> = (0..n).map(|x| element_invariant(a, x)).collect();
    let inv_b: Vec<Vec<usize>> = (0..n).map(|x| element_invariant(b, x)).collect();
    {
        let mut profile_a = inv_a.clone();
        let mut profile_b = inv_b.clone();
        profile_a.sort();
        profile_b.sort();
        if profile_a != profile_b {
            return None;
        }
    }
    let gens = generating_sequence(a);
    let mut state = State::new(a, b);
    // constants must correspond; propagate their consequences first
    for (ca, cb) in a.constants().into_iter().zip(b.constants()) {
        if !state.assign(ca, cb) {
            return None;
        }
    }
    search(&gens, 0, &state, &inv_a, &inv_b).and_then(|map| {
        let f = Morphism::new(a.clone(), b.clone(), map).ok()?;
        (f.is_isomorphism()).then_some(f)
    })
}

fn search(
    gens: &[usize],
    i: usize,
    state: &State<'_>,
    inv_a: &[Vec<usize>],
    inv_b: &[Vec<usize>],
) -> Option<Vec<usize>> {
    if i == gens.len() {
        return state.total_map();
    }
    let g = gens[i];
    if let Some(fixed) = state.map[g] {
        // already forced by propagation; just sanity-filter on fingerprints
        if inv_a[g] == inv_b[fixed] {
            return search(gens, i + 1, state, inv_a, inv_b);
        }
        return None;
    }
    for y in 0..state.map.len() {
        if state.used[y] || inv_a[g] != inv_b[y] {
            continue;
        }
        let mut next = state.clone();
        if next.assign(g, y) {
            if let Some(found) = search(gens, i + 1, &next, inv_a, inv_b) {
                return Some(found);
            }
        }
    }
    None
}

#[derive(Clone)]
struct State<'a> {
    a: &'a AlgebraRef,
    b: &'a AlgebraRef,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    mapped: Vec<usize>,
}

impl<'a> State<'a> {
    fn new(a: &'a AlgebraRef, b: &'a AlgebraRef) -> Self {
        State {
            a,
            b,
            map: vec![None; a.size()],
            used: vec![false; b.size()],
            mapped: Vec::new(),
        }
    }

    /// Records `x -> y` and propagates all operation consequences.
    /// Returns false when the assignment contradicts the partial map.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = Vec::new();
        if !self.put(x, y, &mut queue) {
            return false;
        }
        let (a, b) = (self.a, self.b);
        let un_a = a.unary_ops();
        let un_b = b.unary_ops();
        let bin_a = a.binary_ops();
        let bin_b = b.binary_ops();
        while let Some(z) = queue.pop() {
            let fz = self.map[z].expect("queued elements are mapped");
            for (oa, ob) in un_a.iter().zip(&un_b) {
                if !self.put(oa.apply(z), ob.apply(fz), &mut queue) {
                    return false;
                }
            }
            for (oa, ob) in bin_a.iter().zip(&bin_b) {
                if !self.put(oa.apply(z, z), ob.apply(fz, fz), &mut queue) {
                    return false;
                }
                for idx in 0..self.mapped.len() {
                    let w = self.mapped[idx];
                    if w == z {
                        continue;
                    }
                    let fw = self.map[w].expect("mapped");
                    if !self.put(oa.apply(z, w), ob.apply(fz, fw), &mut queue)
                        || !self.put(oa.apply(w, z), ob.apply(fw, fz), &mut queue)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn put(&mut self, x: usize, y: usize, queue: &mut Vec<usize>) -> bool {
        match self.map[x] {
            Some(existing) => existing == y,
            None => {
                if self.used[y] {
                    return false;
                }
                self.map[x] = Some(y);
                self.used[y] = true;
                self.mapped.push(x);
                queue.push(x);
                true
            }
        }
    }

    fn total_map(&self) -> Option<Vec<usize>> {
        self.map.iter().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{product, FiniteAlgebra};
    use super::*;

    /// Brute-force oracle: try every bijection.
    fn iso_by_all_bijections(a: &AlgebraRef, b: &AlgebraRef) -> Option<Vec<usize>> {
        if a.size() != b.size() || a.signature() != b.signature() {
            return None;
        }
        let mut perm: Vec<usize> = (0..a.size()).collect();
        loop {
            let f = Morphism::new(a.clone(), b.clone(), perm.clone()).unwrap();
            if f.is_homomorphism() {
                return Some(perm);
            }
            if !next_permutation(&mut perm) {
                return None;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        if p.len() < 2 {
            return false;
        }
        let mut i = p.len() - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = p.len() - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn z4_and_klein_are_not_isomorphic() {
        let z4 = FiniteAlgebra::cyclic_group(4);
        let z2 = FiniteAlgebra::cyclic_group(2);
        let klein = product(&z2, &z2).unwrap().algebra;
        assert!(find_isomorphism(&z4, &klein).is_none());
        // oracle agrees over all 24 bijections
        assert!(iso_by_all_bijections(&z4, &klein).is_none());
    }

    #[test]
    fn identity_is_found_on_self() {
        let d4 = FiniteAlgebra::dihedral_group(4);
        let f = find_isomorphism(&d4, &d4).unwrap();
        assert!(f.is_isomorphism());
    }

    #[test]
    fn z6_and_z2xz3_are_isomorphic() {
        let z6 = FiniteAlgebra::cyclic_group(6);
        let z2 = FiniteAlgebra::cyclic_group(2);
        let z3 = FiniteAlgebra::cyclic_group(3);
        let p = product(&z2, &z3).unwrap().algebra;
        let f = find_isomorphism(&z6, &p).unwrap();
        assert!(f.is_isomorphism());
        // the generator must land on an element of order 6
        assert_eq!(p.element_order(f.apply(1)), 6);
    }

    #[test]
    fn agrees_with_bijection_oracle_up_to_size_six() {
        let structures: Vec<AlgebraRef> = vec![
            FiniteAlgebra::cyclic_group(1),
            FiniteAlgebra::cyclic_group(2),
            FiniteAlgebra::cyclic_group(3),
            FiniteAlgebra::cyclic_group(4),
            product(&FiniteAlgebra::cyclic_group(2), &FiniteAlgebra::cyclic_group(2))
                .unwrap()
                .algebra,
            FiniteAlgebra::cyclic_group(5),
            FiniteAlgebra::cyclic_group(6),
            FiniteAlgebra::symmetric_group(3),
            product(&FiniteAlgebra::cyclic_group(2), &FiniteAlgebra::cyclic_group(3))
                .unwrap()
                .algebra,
        ];
        for a in &structures {
            for b in &structures {
                let fast = find_isomorphism(a, b).is_some();
                let slow = iso_by_all_bijections(a, b).is_some();
                assert_eq!(fast, slow, "{} vs {}", a.name(), b.name());
            }
        }
    }

    #[test]
    fn ring_iso_z6_vs_z2xz3() {
        let z6 = FiniteAlgebra::cyclic_ring(6);
        let z2 = FiniteAlgebra::cyclic_ring(2);
        let z3 = FiniteAlgebra::cyclic_ring(3);
        let p = product(&z2, &z3).unwrap().algebra;
        assert!(find_isomorphism(&z6, &p).is_some());
        let z4 = FiniteAlgebra::cyclic_ring(4);
        let z2z2 = product(&z2, &z2).unwrap().algebra;
        assert!(find_isomorphism(&z4, &z2z2).is_none());
    }
}
