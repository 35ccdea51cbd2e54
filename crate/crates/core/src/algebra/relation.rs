//! Binary relations on a carrier, stored as canonical sorted pair sets.
//!
//! A relation here is always a subalgebra of `X × X`: closure is checked
//! component-wise, which avoids materializing the product tables.

use super::{AlgebraError, AlgebraRef, Congruence};

/// A subalgebra of `X × X` as a sorted, deduplicated pair set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    base: AlgebraRef,
    pairs: Vec<(usize, usize)>,
}

impl Relation {
    /// Validates component-wise closure and membership of the diagonal
    /// images of the distinguished elements.
    pub fn new(base: AlgebraRef, mut pairs: Vec<(usize, usize)>) -> Result<Self, AlgebraError> {
        pairs.sort_unstable();
        pairs.dedup();
        for &(a, b) in &pairs {
            if a >= base.size() {
                return Err(AlgebraError::IndexOutOfRange { index: a, size: base.size() });
            }
            if b >= base.size() {
                return Err(AlgebraError::IndexOutOfRange { index: b, size: base.size() });
            }
        }
        let rel = Relation { base, pairs };
        rel.check_closed()?;
        Ok(rel)
    }

    /// Closure of a pair set under constants and component-wise operations.
    pub fn generated(
        base: AlgebraRef,
        seed: &[(usize, usize)],
    ) -> Result<Self, AlgebraError> {
        for &(a, b) in seed {
            if a >= base.size() {
                return Err(AlgebraError::IndexOutOfRange { index: a, size: base.size() });
            }
            if b >= base.size() {
                return Err(AlgebraError::IndexOutOfRange { index: b, size: base.size() });
            }
        }
        let pairs = close_pairs(&base, seed.iter().copied());
        Ok(Relation { base, pairs })
    }

    pub fn diagonal(base: AlgebraRef) -> Self {
        let pairs = (0..base.size()).map(|x| (x, x)).collect();
        Relation { base, pairs }
    }

    pub fn full(base: AlgebraRef) -> Self {
        let n = base.size();
        let mut pairs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                pairs.push((a, b));
            }
        }
        Relation { base, pairs }
    }

    pub fn from_congruence(c: &Congruence) -> Self {
        Relation { base: c.parent().clone(), pairs: c.pairs() }
    }

    pub fn base(&self) -> &AlgebraRef {
        &self.base
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    pub fn is_subset_of(&self, other: &Relation) -> bool {
        self.base == other.base && self.pairs.iter().all(|&p| other.contains(p))
    }

    /// Pair-set intersection; closure is preserved.
    pub fn intersect(&self, other: &Relation) -> Result<Relation, AlgebraError> {
        if self.base != other.base {
            return Err(AlgebraError::ParentMismatch);
        }
        let pairs: Vec<(usize, usize)> =
            self.pairs.iter().copied().filter(|&p| other.contains(p)).collect();
        Ok(Relation { base: self.base.clone(), pairs })
    }

    fn check_closed(&self) -> Result<(), AlgebraError> {
        for c in self.base.constants() {
            if !self.contains((c, c)) {
                return Err(AlgebraError::NotClosed { op: "constant" });
            }
        }
        for op in self.base.unary_ops() {
            for &(a, b) in &self.pairs {
                if !self.contains((op.apply(a), op.apply(b))) {
                    return Err(AlgebraError::NotClosed { op: op.name });
                }
            }
        }
        for op in self.base.binary_ops() {
            for &(a1, b1) in &self.pairs {
                for &(a2, b2) in &self.pairs {
                    if !self.contains((op.apply(a1, a2), op.apply(b1, b2))) {
                        return Err(AlgebraError::NotClosed { op: op.name });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Closure of a pair seed under constants and component-wise operations.
pub(crate) fn close_pairs(
    base: &AlgebraRef,
    seed: impl IntoIterator<Item = (usize, usize)>,
) -> Vec<(usize, usize)> {
    let n = base.size();
    let mut member = vec![false; n * n];
    let mut queue: Vec<(usize, usize)> = Vec::new();
    let push = |p: (usize, usize), member: &mut Vec<bool>, queue: &mut Vec<(usize, usize)>| {
        let idx = p.0 * n + p.1;
        if !member[idx] {
            member[idx] = true;
            queue.push(p);
        }
    };
    for c in base.constants() {
        push((c, c), &mut member, &mut queue);
    }
    for p in seed {
        push(p, &mut member, &mut queue);
    }
    let unary = base.unary_ops();
    let binary = base.binary_ops();
    let mut processed: Vec<(usize, usize)> = Vec::new();
    while let Some((a, b)) = queue.pop() {
        for op in &unary {
            push((op.apply(a), op.apply(b)), &mut member, &mut queue);
        }
        for op in &binary {
            push((op.apply(a, a), op.apply(b, b)), &mut member, &mut queue);
            for &(c, d) in &processed {
                push((op.apply(a, c), op.apply(b, d)), &mut member, &mut queue);
                push((op.apply(c, a), op.apply(d, b)), &mut member, &mut queue);
            }
        }
        processed.push((a, b));
    }
    let mut out: Vec<(usize, usize)> = (0..n * n)
        .filter(|&idx| member[idx])
        .map(|idx| (idx / n, idx % n))
        .collect();
    out.sort_unstable();
    out
}
