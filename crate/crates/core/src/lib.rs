//! Constructive checks of the Noether isomorphism theorems and the
//! Zassenhaus lemma over finite algebraic structures.
//!
//! Everything is computed concretely: groups and unital rings are operation
//! tables over dense carriers `0..n-1`, relations are canonical sorted pair
//! sets, and every `≅` verdict carries an explicit witness found by
//! exhaustive search. Two ideal contexts are supported:
//!
//! * **pointed** — morphisms in the ideal are the constant-at-identity maps;
//!   stars encode (normal) subgroups. Only meaningful for groups.
//! * **total** — every morphism is in the ideal; stars encode arbitrary
//!   relations and kernel stars are congruences. Works for any signature.
//!
//! The [`theorems`] module builds the diamond and double-quotient
//! isomorphism theorems and the Zassenhaus lemma object-by-object, the
//! [`hopf`] module replays the Zassenhaus construction for group-algebra
//! Hopf algebras over prime fields, and [`suite`] packages exhaustive
//! catalog sweeps into machine-readable reports.

pub mod algebra;
pub mod catalog;
pub mod hopf;
pub mod star;
pub mod suite;
pub mod theorems;

pub use algebra::{
    AlgebraRef, Congruence, FiniteAlgebra, Morphism, Relation, Signature, Subalgebra,
};
pub use star::{Diamond, IdealContext, MonicStar};
pub use theorems::IsoVerdict;
