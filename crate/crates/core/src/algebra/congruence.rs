//! Congruences (operation-compatible partitions) and quotient algebras.

use super::{AlgebraError, AlgebraRef, FiniteAlgebra, Morphism};

/// A partition of a carrier compatible with every operation. Class indices
/// are canonical: classes are numbered by first occurrence, so equality of
/// congruences is syntactic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    parent: AlgebraRef,
    class_of: Vec<usize>,
    class_count: usize,
}

impl Congruence {
    /// Builds a congruence from a class-index array, canonicalizing the
    /// numbering and checking compatibility with every operation.
    pub fn new(parent: AlgebraRef, class_of: Vec<usize>) -> Result<Self, AlgebraError> {
        if class_of.len() != parent.size() {
            return Err(AlgebraError::MalformedTable);
        }
        let (class_of, class_count) = canonicalize(&class_of);
        let cong = Congruence { parent, class_of, class_count };
        cong.check_compatible()?;
        Ok(cong)
    }

    /// Builds a congruence from explicit classes (must cover the carrier).
    pub fn from_partition(
        parent: AlgebraRef,
        classes: &[Vec<usize>],
    ) -> Result<Self, AlgebraError> {
        let mut class_of = vec![usize::MAX; parent.size()];
        for (k, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= parent.size() {
                    return Err(AlgebraError::IndexOutOfRange { index: x, size: parent.size() });
                }
                if class_of[x] != usize::MAX {
                    return Err(AlgebraError::MalformedTable);
                }
                class_of[x] = k;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(AlgebraError::MalformedTable);
        }
        Self::new(parent, class_of)
    }

    /// Least congruence containing the given pairs: union-find seeded with
    /// the pairs, then closed under all operation translations until stable.
    pub fn generated(
        parent: AlgebraRef,
        pairs: &[(usize, usize)],
    ) -> Result<Self, AlgebraError> {
        let n = parent.size();
        for &(a, b) in pairs {
            if a >= n {
                return Err(AlgebraError::IndexOutOfRange { index: a, size: n });
            }
            if b >= n {
                return Err(AlgebraError::IndexOutOfRange { index: b, size: n });
            }
        }
        let mut uf = UnionFind::new(n);
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                for y in x + 1..n {
                    if uf.find(x) != uf.find(y) {
                        continue;
                    }
                    for op in parent.unary_ops() {
                        changed |= uf.union(op.apply(x), op.apply(y));
                    }
                    for op in parent.binary_ops() {
                        for z in 0..n {
                            changed |= uf.union(op.apply(x, z), op.apply(y, z));
                            changed |= uf.union(op.apply(z, x), op.apply(z, y));
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let raw: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
        let (class_of, class_count) = canonicalize(&raw);
        // closure under translations makes compatibility automatic
        Ok(Congruence { parent, class_of, class_count })
    }

    /// The discrete congruence (every class a singleton).
    pub fn diagonal(parent: AlgebraRef) -> Self {
        let n = parent.size();
        Congruence { parent, class_of: (0..n).collect(), class_count: n }
    }

    /// The codiscrete congruence (one class).
    pub fn total(parent: AlgebraRef) -> Self {
        let n = parent.size();
        Congruence { parent, class_of: vec![0; n], class_count: n.min(1) }
    }

    /// Kernel pair of a map: `a ~ b` iff `f(a) = f(b)`. A congruence exactly
    /// when `f` is a homomorphism, which is checked.
    pub fn kernel_pair(f: &Morphism) -> Result<Self, AlgebraError> {
        Self::new(f.dom().clone(), f.map().to_vec())
    }

    pub fn parent(&self) -> &AlgebraRef {
        &self.parent
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn relates(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// All related pairs, sorted. This is the congruence as a relation.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.parent.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.relates(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Refinement order: every class of `self` is inside a class of `other`.
    pub fn is_refinement_of(&self, other: &Congruence) -> bool {
        self.parent == other.parent
            && (0..self.parent.size()).all(|x| {
                (0..self.parent.size())
                    .all(|y| !self.relates(x, y) || other.relates(x, y))
            })
    }

    /// Join in the congruence lattice.
    pub fn join(&self, other: &Congruence) -> Result<Congruence, AlgebraError> {
        if self.parent != other.parent {
            return Err(AlgebraError::ParentMismatch);
        }
        let mut pairs = relating_pairs(&self.class_of);
        pairs.extend(relating_pairs(&other.class_of));
        Congruence::generated(self.parent.clone(), &pairs)
    }

    fn check_compatible(&self) -> Result<(), AlgebraError> {
        let n = self.parent.size();
        for op in self.parent.unary_ops() {
            for x in 0..n {
                for y in 0..n {
                    if self.relates(x, y) && !self.relates(op.apply(x), op.apply(y)) {
                        return Err(AlgebraError::IncompatiblePartition { op: op.name });
                    }
                }
            }
        }
        for op in self.parent.binary_ops() {
            for x in 0..n {
                for y in 0..n {
                    if !self.relates(x, y) {
                        continue;
                    }
                    for z in 0..n {
                        if !self.relates(op.apply(x, z), op.apply(y, z))
                            || !self.relates(op.apply(z, x), op.apply(z, y))
                        {
                            return Err(AlgebraError::IncompatiblePartition { op: op.name });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Quotient algebra and the surjective class map. Compatibility is
    /// re-checked so corrupted input is rejected rather than silently
    /// producing ill-defined tables.
    pub fn quotient(&self) -> Result<(AlgebraRef, Morphism), AlgebraError> {
        self.check_compatible()?;
        let parent = &self.parent;
        let m = self.class_count;
        let reps: Vec<usize> = {
            let mut reps = vec![usize::MAX; m];
            for x in (0..parent.size()).rev() {
                reps[self.class_of[x]] = x;
            }
            reps
        };
        let name = format!("{}/~{}", parent.name(), m);
        let quotient = match parent.signature() {
            super::Signature::Group => {
                let mul: Vec<Vec<usize>> = (0..m)
                    .map(|i| {
                        (0..m)
                            .map(|j| self.class_of[parent.group_mul(reps[i], reps[j])])
                            .collect()
                    })
                    .collect();
                FiniteAlgebra::group_from_mul(name, &mul)
                    .expect("quotient of a group by a congruence is a group")
            }
            super::Signature::Ring => {
                let add: Vec<Vec<usize>> = (0..m)
                    .map(|i| {
                        (0..m)
                            .map(|j| self.class_of[parent.ring_add(reps[i], reps[j])])
                            .collect()
                    })
                    .collect();
                let mul: Vec<Vec<usize>> = (0..m)
                    .map(|i| {
                        (0..m)
                            .map(|j| self.class_of[parent.ring_mul(reps[i], reps[j])])
                            .collect()
                    })
                    .collect();
                FiniteAlgebra::ring_from_tables(name, &add, &mul)
                    .expect("quotient of a ring by a congruence is a ring")
            }
        };
        let map = Morphism::new(parent.clone(), quotient.clone(), self.class_of.clone())
            .expect("class map is in range");
        Ok((quotient, map))
    }
}

fn canonicalize(raw: &[usize]) -> (Vec<usize>, usize) {
    let mut rename: Vec<Option<usize>> = vec![None; raw.len().max(raw.iter().max().map_or(0, |m| m + 1))];
    let mut next = 0;
    let mut out = Vec::with_capacity(raw.len());
    for &c in raw {
        let id = *rename[c].get_or_insert_with(|| {
            let id = next;
            next += 1;
            id
        });
        out.push(id);
    }
    (out, next)
}

fn relating_pairs(class_of: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..class_of.len() {
        for b in a + 1..class_of.len() {
            if class_of[a] == class_of[b] {
                out.push((a, b));
            }
        }
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            false
        } else {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
            true
        }
    }
}
