//! Finite algebraic structures as operation tables.
//!
//! A [`FiniteAlgebra`] is a carrier `0..n-1` together with total lookup
//! tables for its signature (group: multiplication, inverse, identity;
//! ring: addition, negation, zero, multiplication, one). All values are
//! immutable after construction and validated against the axioms
//! entry-wise, so everything downstream may assume the laws hold.

mod congruence;
mod iso;
mod morphism;
mod relation;
mod subalgebra;
pub mod text;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use congruence::Congruence;
pub use iso::{element_invariant, find_isomorphism, generating_sequence};
pub use morphism::Morphism;
pub use relation::Relation;
pub use subalgebra::Subalgebra;

/// Shared handle to an immutable algebra. Cheap to clone, safe to send.
pub type AlgebraRef = Arc<FiniteAlgebra>;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),
    #[error("element index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("operation table has the wrong shape")]
    MalformedTable,
    #[error("{law} fails: {detail}")]
    AxiomViolation { law: &'static str, detail: String },
    #[error("partition is not compatible with operation `{op}`")]
    IncompatiblePartition { op: &'static str },
    #[error("objects belong to different parent algebras")]
    ParentMismatch,
    #[error("domain/codomain of the morphisms do not line up")]
    CompositionMismatch,
    #[error("element set is not closed under `{op}`")]
    NotClosed { op: &'static str },
    #[error("malformed table text: {0}")]
    Parse(String),
}

/// The two signatures handled by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Signature {
    Group,
    Ring,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Signature::Group => write!(f, "group"),
            Signature::Ring => write!(f, "ring"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Tables {
    Group {
        mul: Vec<usize>,
        inv: Vec<usize>,
        identity: usize,
    },
    Ring {
        add: Vec<usize>,
        neg: Vec<usize>,
        zero: usize,
        mul: Vec<usize>,
        one: usize,
    },
}

/// A finite group or unital ring given by total operation tables.
///
/// Equality ignores the display name: two algebras are equal exactly when
/// they have the same signature, size and tables. Derived objects are
/// canonicalized everywhere, so syntactic equality is the semantic one.
#[derive(Debug, Clone)]
pub struct FiniteAlgebra {
    name: String,
    size: usize,
    tables: Tables,
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.tables == other.tables
    }
}

impl Eq for FiniteAlgebra {}

impl std::hash::Hash for FiniteAlgebra {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.size.hash(state);
        self.tables.hash(state);
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} of order {})", self.name, self.signature(), self.size)
    }
}

/// View of one binary operation table.
#[derive(Clone, Copy)]
pub struct BinOp<'a> {
    pub name: &'static str,
    table: &'a [usize],
    size: usize,
}

impl BinOp<'_> {
    #[inline]
    pub fn apply(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }
}

/// View of one unary operation table.
#[derive(Clone, Copy)]
pub struct UnOp<'a> {
    pub name: &'static str,
    table: &'a [usize],
}

impl UnOp<'_> {
    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }
}

impl FiniteAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn signature(&self) -> Signature {
        match self.tables {
            Tables::Group { .. } => Signature::Group,
            Tables::Ring { .. } => Signature::Ring,
        }
    }

    pub fn is_group(&self) -> bool {
        self.signature() == Signature::Group
    }

    pub fn is_ring(&self) -> bool {
        self.signature() == Signature::Ring
    }

    /// All binary operations of the signature, in a fixed order.
    pub fn binary_ops(&self) -> Vec<BinOp<'_>> {
        match &self.tables {
            Tables::Group { mul, .. } => vec![BinOp { name: "mul", table: mul, size: self.size }],
            Tables::Ring { add, mul, .. } => vec![
                BinOp { name: "add", table: add, size: self.size },
                BinOp { name: "mul", table: mul, size: self.size },
            ],
        }
    }

    /// All unary operations of the signature.
    pub fn unary_ops(&self) -> Vec<UnOp<'_>> {
        match &self.tables {
            Tables::Group { inv, .. } => vec![UnOp { name: "inv", table: inv }],
            Tables::Ring { neg, .. } => vec![UnOp { name: "neg", table: neg }],
        }
    }

    /// Distinguished elements: `[identity]` for a group, `[zero, one]` for a ring.
    pub fn constants(&self) -> Vec<usize> {
        match &self.tables {
            Tables::Group { identity, .. } => vec![*identity],
            Tables::Ring { zero, one, .. } => vec![*zero, *one],
        }
    }

    /// The identity element when the algebra is a group.
    ///
    /// The pointed ideal context exists only for groups, which is why this
    /// is the "unit" the star machinery keys on.
    pub fn pointed_unit(&self) -> Option<usize> {
        match &self.tables {
            Tables::Group { identity, .. } => Some(*identity),
            Tables::Ring { .. } => None,
        }
    }

    pub fn group_identity(&self) -> usize {
        self.pointed_unit().expect("not a group")
    }

    pub fn group_mul(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Tables::Group { mul, .. } => mul[a * self.size + b],
            Tables::Ring { .. } => panic!("not a group"),
        }
    }

    pub fn group_inv(&self, a: usize) -> usize {
        match &self.tables {
            Tables::Group { inv, .. } => inv[a],
            Tables::Ring { .. } => panic!("not a group"),
        }
    }

    pub fn ring_add(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Tables::Ring { add, .. } => add[a * self.size + b],
            Tables::Group { .. } => panic!("not a ring"),
        }
    }

    pub fn ring_mul(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Tables::Ring { mul, .. } => mul[a * self.size + b],
            Tables::Group { .. } => panic!("not a ring"),
        }
    }

    pub fn ring_neg(&self, a: usize) -> usize {
        match &self.tables {
            Tables::Ring { neg, .. } => neg[a],
            Tables::Group { .. } => panic!("not a ring"),
        }
    }

    pub fn ring_zero(&self) -> usize {
        match &self.tables {
            Tables::Ring { zero, .. } => *zero,
            Tables::Group { .. } => panic!("not a ring"),
        }
    }

    pub fn ring_one(&self) -> usize {
        match &self.tables {
            Tables::Ring { one, .. } => *one,
            Tables::Group { .. } => panic!("not a ring"),
        }
    }

    /// Multiplicative order of a group element; additive order of a ring element.
    pub fn element_order(&self, x: usize) -> usize {
        match &self.tables {
            Tables::Group { identity, .. } => {
                let mut acc = x;
                let mut k = 1;
                while acc != *identity {
                    acc = self.group_mul(acc, x);
                    k += 1;
                }
                k
            }
            Tables::Ring { zero, .. } => {
                let mut acc = x;
                let mut k = 1;
                while acc != *zero {
                    acc = self.ring_add(acc, x);
                    k += 1;
                }
                k
            }
        }
    }

    /// Size of the conjugacy class of `x` (groups only).
    pub fn conjugacy_class_size(&self, x: usize) -> usize {
        let mut seen = vec![false; self.size];
        let mut count = 0;
        for g in 0..self.size {
            let c = self.group_mul(self.group_mul(g, x), self.group_inv(g));
            if !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }

    /// Whether a ring element has a two-sided multiplicative inverse.
    pub fn ring_is_unit(&self, x: usize) -> bool {
        let one = self.ring_one();
        (0..self.size).any(|y| self.ring_mul(x, y) == one && self.ring_mul(y, x) == one)
    }

    // ------------------------------------------------------------------
    // Constructors
    // ------------------------------------------------------------------

    /// Builds a group from a multiplication table, deriving the identity and
    /// inverses and validating the axioms entry-wise.
    pub fn group_from_mul(
        name: impl Into<String>,
        mul: &[Vec<usize>],
    ) -> Result<AlgebraRef, AlgebraError> {
        let n = mul.len();
        if n == 0 || mul.iter().any(|row| row.len() != n) {
            return Err(AlgebraError::MalformedTable);
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in mul {
            for &v in row {
                if v >= n {
                    return Err(AlgebraError::IndexOutOfRange { index: v, size: n });
                }
                flat.push(v);
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| flat[e * n + a] == a && flat[a * n + e] == a))
            .ok_or_else(|| AlgebraError::AxiomViolation {
                law: "group identity",
                detail: "no two-sided identity element".into(),
            })?;
        let mut inv = vec![0usize; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| flat[a * n + b] == identity && flat[b * n + a] == identity)
                .ok_or_else(|| AlgebraError::AxiomViolation {
                    law: "group inverse",
                    detail: format!("element {a} has no two-sided inverse"),
                })?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if flat[flat[a * n + b] * n + c] != flat[a * n + flat[b * n + c]] {
                        return Err(AlgebraError::AxiomViolation {
                            law: "group associativity",
                            detail: format!("({a}*{b})*{c} != {a}*({b}*{c})"),
                        });
                    }
                }
            }
        }
        Ok(Arc::new(FiniteAlgebra {
            name: name.into(),
            size: n,
            tables: Tables::Group { mul: flat, inv, identity },
        }))
    }

    /// Builds a unital ring from addition and multiplication tables, deriving
    /// zero, one and negation and validating all ring axioms entry-wise.
    pub fn ring_from_tables(
        name: impl Into<String>,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
    ) -> Result<AlgebraRef, AlgebraError> {
        let n = add.len();
        if n == 0
            || mul.len() != n
            || add.iter().any(|row| row.len() != n)
            || mul.iter().any(|row| row.len() != n)
        {
            return Err(AlgebraError::MalformedTable);
        }
        let flatten = |t: &[Vec<usize>]| -> Result<Vec<usize>, AlgebraError> {
            let mut flat = Vec::with_capacity(n * n);
            for row in t {
                for &v in row {
                    if v >= n {
                        return Err(AlgebraError::IndexOutOfRange { index: v, size: n });
                    }
                    flat.push(v);
                }
            }
            Ok(flat)
        };
        let add = flatten(add)?;
        let mul = flatten(mul)?;
        let zero = (0..n)
            .find(|&z| (0..n).all(|a| add[z * n + a] == a && add[a * n + z] == a))
            .ok_or_else(|| AlgebraError::AxiomViolation {
                law: "additive identity",
                detail: "no zero element".into(),
            })?;
        let one = (0..n)
            .find(|&o| (0..n).all(|a| mul[o * n + a] == a && mul[a * n + o] == a))
            .ok_or_else(|| AlgebraError::AxiomViolation {
                law: "multiplicative identity",
                detail: "no two-sided unit".into(),
            })?;
        let mut neg = vec![0usize; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == zero).ok_or_else(|| {
                AlgebraError::AxiomViolation {
                    law: "additive inverse",
                    detail: format!("element {a} has no negative"),
                }
            })?;
        }
        for a in 0..n {
            for b in 0..n {
                if add[a * n + b] != add[b * n + a] {
                    return Err(AlgebraError::AxiomViolation {
                        law: "additive commutativity",
                        detail: format!("{a}+{b} != {b}+{a}"),
                    });
                }
                for c in 0..n {
                    if add[add[a * n + b] * n + c] != add[a * n + add[b * n + c]] {
                        return Err(AlgebraError::AxiomViolation {
                            law: "additive associativity",
                            detail: format!("at ({a},{b},{c})"),
                        });
                    }
                    if mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]] {
                        return Err(AlgebraError::AxiomViolation {
                            law: "multiplicative associativity",
                            detail: format!("at ({a},{b},{c})"),
                        });
                    }
                    if mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]] {
                        return Err(AlgebraError::AxiomViolation {
                            law: "left distributivity",
                            detail: format!("at ({a},{b},{c})"),
                        });
                    }
                    if mul[add[a * n + b] * n + c] != add[mul[a * n + c] * n + mul[b * n + c]] {
                        return Err(AlgebraError::AxiomViolation {
                            law: "right distributivity",
                            detail: format!("at ({a},{b},{c})"),
                        });
                    }
                }
            }
        }
        Ok(Arc::new(FiniteAlgebra {
            name: name.into(),
            size: n,
            tables: Tables::Ring { add, neg, zero, mul, one },
        }))
    }

    /// Cyclic group of order `n`.
    pub fn cyclic_group(n: usize) -> AlgebraRef {
        assert!(n >= 1, "order must be positive");
        let mul: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::group_from_mul(format!("Z{n}"), &mul).expect("cyclic table is a group")
    }

    pub fn trivial_group() -> AlgebraRef {
        Self::cyclic_group(1)
    }

    /// Dihedral group of order `2n`; element `j*n + i` stands for `s^j r^i`.
    pub fn dihedral_group(n: usize) -> AlgebraRef {
        assert!(n >= 1, "rotation order must be positive");
        let size = 2 * n;
        let mut mul = vec![vec![0usize; size]; size];
        for j1 in 0..2 {
            for i1 in 0..n {
                for j2 in 0..2 {
                    for i2 in 0..n {
                        // s^j1 r^i1 · s^j2 r^i2 = s^(j1+j2) r^(±i1 + i2)
                        let j = (j1 + j2) % 2;
                        let i1_signed = if j2 == 1 { (n - i1) % n } else { i1 };
                        let i = (i1_signed + i2) % n;
                        mul[j1 * n + i1][j2 * n + i2] = j * n + i;
                    }
                }
            }
        }
        Self::group_from_mul(format!("D{n}"), &mul).expect("dihedral table is a group")
    }

    /// Symmetric group on `n` letters; elements are permutations in
    /// lexicographic order, composed left-to-right over arguments
    /// (`(p·q)(x) = p(q(x))`).
    pub fn symmetric_group(n: usize) -> AlgebraRef {
        assert!((1..=4).contains(&n), "supported range is 1..=4");
        let perms = all_permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let size = perms.len();
        let mut mul = vec![vec![0usize; size]; size];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                mul[a][b] = index_of(&composed);
            }
        }
        Self::group_from_mul(format!("S{n}"), &mul).expect("symmetric table is a group")
    }

    /// Quaternion group of order 8; element `s*4 + u` stands for `(-1)^s · u`
    /// with units ordered `1, i, j, k`.
    pub fn quaternion_group() -> AlgebraRef {
        // unit_mul[u][v] = (sign, unit)
        const UNIT_MUL: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mut mul = vec![vec![0usize; 8]; 8];
        for s1 in 0..2 {
            for u1 in 0..4 {
                for s2 in 0..2 {
                    for u2 in 0..4 {
                        let (s3, u3) = UNIT_MUL[u1][u2];
                        let sign = (s1 + s2 + s3) % 2;
                        mul[s1 * 4 + u1][s2 * 4 + u2] = sign * 4 + u3;
                    }
                }
            }
        }
        Self::group_from_mul("Q8", &mul).expect("quaternion table is a group")
    }

    /// The ring of integers modulo `n`.
    pub fn cyclic_ring(n: usize) -> AlgebraRef {
        assert!(n >= 1, "size must be positive");
        let add: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let mul: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| (i * j) % n).collect()).collect();
        Self::ring_from_tables(format!("Z{n}"), &add, &mul).expect("modular table is a ring")
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute(&mut current, 0, &mut out);
    out.sort();
    out
}

fn permute(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permute(current, k + 1, out);
        current.swap(k, i);
    }
}

/// A direct product together with its two projection homomorphisms.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub algebra: AlgebraRef,
    pub left: Morphism,
    pub right: Morphism,
}

/// Encodes the pair `(a, b)` as an index into the product carrier.
#[inline]
pub fn pair_index(a: usize, b: usize, right_size: usize) -> usize {
    a * right_size + b
}

/// Splits a product-carrier index back into its components.
#[inline]
pub fn pair_split(k: usize, right_size: usize) -> (usize, usize) {
    (k / right_size, k % right_size)
}

/// Component-wise direct product of two algebras of the same signature.
pub fn product(a: &AlgebraRef, b: &AlgebraRef) -> Result<DirectProduct, AlgebraError> {
    if a.signature() != b.signature() {
        return Err(AlgebraError::SignatureMismatch(a.signature(), b.signature()));
    }
    let n = a.size * b.size;
    let name = format!("{}x{}", a.name, b.name);
    let combine = |ta: &[usize], tb: &[usize]| -> Vec<usize> {
        let mut t = vec![0usize; n * n];
        for a1 in 0..a.size {
            for b1 in 0..b.size {
                for a2 in 0..a.size {
                    for b2 in 0..b.size {
                        let x = pair_index(a1, b1, b.size);
                        let y = pair_index(a2, b2, b.size);
                        t[x * n + y] =
                            pair_index(ta[a1 * a.size + a2], tb[b1 * b.size + b2], b.size);
                    }
                }
            }
        }
        t
    };
    let combine_un = |ta: &[usize], tb: &[usize]| -> Vec<usize> {
        (0..n)
            .map(|k| {
                let (x, y) = pair_split(k, b.size);
                pair_index(ta[x], tb[y], b.size)
            })
            .collect()
    };
    let tables = match (&a.tables, &b.tables) {
        (
            Tables::Group { mul: ma, inv: ia, identity: ea },
            Tables::Group { mul: mb, inv: ib, identity: eb },
        ) => Tables::Group {
            mul: combine(ma, mb),
            inv: combine_un(ia, ib),
            identity: pair_index(*ea, *eb, b.size),
        },
        (
            Tables::Ring { add: aa, neg: na, zero: za, mul: ma, one: oa },
            Tables::Ring { add: ab, neg: nb, zero: zb, mul: mb, one: ob },
        ) => Tables::Ring {
            add: combine(aa, ab),
            neg: combine_un(na, nb),
            zero: pair_index(*za, *zb, b.size),
            mul: combine(ma, mb),
            one: pair_index(*oa, *ob, b.size),
        },
        _ => unreachable!("signatures already checked"),
    };
    let algebra = Arc::new(FiniteAlgebra { name, size: n, tables });
    let left_map: Vec<usize> = (0..n).map(|k| pair_split(k, b.size).0).collect();
    let right_map: Vec<usize> = (0..n).map(|k| pair_split(k, b.size).1).collect();
    let left = Morphism::new(algebra.clone(), a.clone(), left_map)?;
    let right = Morphism::new(algebra.clone(), b.clone(), right_map)?;
    Ok(DirectProduct { algebra, left, right })
}
