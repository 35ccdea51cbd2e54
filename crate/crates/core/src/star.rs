//! Ideal contexts, monic stars, kernel stars and their calculus.
//!
//! A star on `X` is a pair of parallel maps whose first leg lies in the
//! chosen ideal of morphisms; a monic star is a jointly-injective one and is
//! stored here in factored canonical form, as a sorted pair set that is a
//! subalgebra of `X × X`. In the pointed context (groups) the first leg is
//! constant at the identity, so a monic star is exactly `{e} × K` for a
//! subgroup `K`; in the total context it is an arbitrary relation that is a
//! subalgebra of the product.

use std::fmt;

use thiserror::Error;

use crate::algebra::{
    AlgebraError, AlgebraRef, Congruence, Morphism, Relation, Signature, Subalgebra,
};

#[derive(Debug, Error)]
pub enum StarError {
    #[error("the pointed context applies only to groups (no zero object for {0})")]
    PointedRequiresGroup(Signature),
    #[error("ideal contexts of the operands differ")]
    ContextMismatch,
    #[error("bases of the operands differ")]
    BaseMismatch,
    #[error("morphism is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("morphism is not surjective: {0}")]
    NotSurjective(String),
    #[error("star is malformed: {0}")]
    Malformed(String),
    #[error("diamond does not commute")]
    NotCommuting,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The ideal of morphisms the star machinery is instantiated with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealContext {
    /// Zero morphisms: maps constant at the group identity.
    Pointed,
    /// All morphisms.
    Total,
}

impl fmt::Display for IdealContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealContext::Pointed => write!(f, "pointed"),
            IdealContext::Total => write!(f, "total"),
        }
    }
}

impl IdealContext {
    /// Whether the context is available for a signature. The pointed
    /// context needs a zero object to factor through, which groups have
    /// and unital rings do not.
    pub fn admits(&self, signature: Signature) -> bool {
        match self {
            IdealContext::Pointed => signature == Signature::Group,
            IdealContext::Total => true,
        }
    }

    fn check(&self, signature: Signature) -> Result<(), StarError> {
        if self.admits(signature) {
            Ok(())
        } else {
            Err(StarError::PointedRequiresGroup(signature))
        }
    }

    /// Membership of a morphism in the ideal.
    pub fn contains_morphism(&self, f: &Morphism) -> Result<bool, StarError> {
        match self {
            IdealContext::Total => Ok(true),
            IdealContext::Pointed => {
                self.check(f.dom().signature())?;
                self.check(f.cod().signature())?;
                let e = f.cod().group_identity();
                Ok(f.map().iter().all(|&y| y == e))
            }
        }
    }
}

/// A monic star in canonical form: a pair set on `base` that is a
/// subalgebra of `base × base`, with the context's first-leg constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicStar {
    context: IdealContext,
    base: AlgebraRef,
    pairs: Vec<(usize, usize)>,
}

impl fmt::Display for MonicStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "star[{} pairs on {}]", self.pairs.len(), self.base.name())
    }
}

impl MonicStar {
    /// Validates the relation invariant and the context constraint.
    pub fn new(
        context: IdealContext,
        base: AlgebraRef,
        pairs: Vec<(usize, usize)>,
    ) -> Result<Self, StarError> {
        context.check(base.signature())?;
        let rel = Relation::new(base, pairs)?;
        Self::from_relation_unchecked(context, rel)
    }

    fn from_relation_unchecked(context: IdealContext, rel: Relation) -> Result<Self, StarError> {
        let base = rel.base().clone();
        let pairs = rel.pairs().to_vec();
        if context == IdealContext::Pointed {
            let e = base.group_identity();
            if let Some(&(a, _)) = pairs.iter().find(|&&(a, _)| a != e) {
                return Err(StarError::Malformed(format!(
                    "pointed star has a pair with first component {a} != identity"
                )));
            }
        }
        Ok(MonicStar { context, base, pairs })
    }

    /// The star of the discrete relation: `{(e, e)}` pointed, the full
    /// diagonal total.
    pub fn diagonal(context: IdealContext, base: &AlgebraRef) -> Result<Self, StarError> {
        star_of_relation(&Relation::diagonal(base.clone()), context)
    }

    /// Pointed star encoding a subobject: `{e} × K`.
    pub fn from_subgroup(k: &Subalgebra) -> Result<Self, StarError> {
        let base = k.parent().clone();
        IdealContext::Pointed.check(base.signature())?;
        let e = base.group_identity();
        let pairs: Vec<(usize, usize)> = k.elements().iter().map(|&x| (e, x)).collect();
        MonicStar::new(IdealContext::Pointed, base, pairs)
    }

    /// Total star of a congruence.
    pub fn from_congruence(c: &Congruence) -> Self {
        MonicStar {
            context: IdealContext::Total,
            base: c.parent().clone(),
            pairs: c.pairs(),
        }
    }

    pub fn context(&self) -> IdealContext {
        self.context
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

    pub fn is_subset_of(&self, other: &MonicStar) -> bool {
        self.base == other.base
            && self.context == other.context
            && self.pairs.iter().all(|&p| other.contains(p))
    }

    pub fn as_relation(&self) -> Relation {
        Relation::new(self.base.clone(), self.pairs.clone())
            .expect("star invariant guarantees a valid relation")
    }

    /// The subobject a pointed star encodes: second components of `{e} × K`.
    pub fn encoded_subobject(&self) -> Option<Subalgebra> {
        if self.context != IdealContext::Pointed {
            return None;
        }
        let elements: Vec<usize> = self.pairs.iter().map(|&(_, b)| b).collect();
        Subalgebra::new(self.base.clone(), elements).ok()
    }

    pub fn is_diagonal(&self) -> bool {
        MonicStar::diagonal(self.context, &self.base)
            .map(|d| d == *self)
            .unwrap_or(false)
    }
}

/// The largest subobject whose composite with `f` lies in the ideal.
/// Pointed: the preimage of the identity. Total: the whole domain.
pub fn n_kernel(f: &Morphism, context: IdealContext) -> Result<Subalgebra, StarError> {
    require_hom(f)?;
    context.check(f.dom().signature())?;
    context.check(f.cod().signature())?;
    match context {
        IdealContext::Total => Ok(Subalgebra::full(f.dom().clone())),
        IdealContext::Pointed => {
            let e = f.cod().group_identity();
            let elements: Vec<usize> =
                (0..f.dom().size()).filter(|&x| f.apply(x) == e).collect();
            Ok(Subalgebra::new(f.dom().clone(), elements)?)
        }
    }
}

/// The largest monic star contained in a relation: pointed keeps the pairs
/// whose first component is the identity, total keeps everything.
pub fn star_of_relation(rel: &Relation, context: IdealContext) -> Result<MonicStar, StarError> {
    context.check(rel.base().signature())?;
    match context {
        IdealContext::Total => MonicStar::from_relation_unchecked(context, rel.clone()),
        IdealContext::Pointed => {
            let e = rel.base().group_identity();
            let pairs: Vec<(usize, usize)> =
                rel.pairs().iter().copied().filter(|&(a, _)| a == e).collect();
            // a filtered subalgebra: the intersection with {e} x X
            Ok(MonicStar { context, base: rel.base().clone(), pairs })
        }
    }
}

/// Kernel star of a morphism: the star of its kernel pair.
pub fn kernel_star(f: &Morphism, context: IdealContext) -> Result<MonicStar, StarError> {
    require_hom(f)?;
    context.check(f.dom().signature())?;
    let n = f.dom().size();
    let mut pairs = Vec::new();
    match context {
        IdealContext::Total => {
            for a in 0..n {
                for b in 0..n {
                    if f.apply(a) == f.apply(b) {
                        pairs.push((a, b));
                    }
                }
            }
        }
        IdealContext::Pointed => {
            let e = f.dom().group_identity();
            let fe = f.apply(e);
            for b in 0..n {
                if f.apply(b) == fe {
                    pairs.push((e, b));
                }
            }
        }
    }
    Ok(MonicStar { context, base: f.dom().clone(), pairs })
}

/// Coequalizer of a star: the quotient by the congruence its pairs generate,
/// together with the canonical surjection.
pub fn coequalizer_of_star(s: &MonicStar) -> Result<(AlgebraRef, Morphism), StarError> {
    let congruence = Congruence::generated(s.base.clone(), &s.pairs)?;
    Ok(congruence.quotient()?)
}

/// Image of a star along a morphism: the element-wise `(f × f)`-image.
///
/// The image of a subalgebra under a homomorphism is a subalgebra, and in
/// the pointed context the first leg stays in the ideal, so no refactoring
/// is needed; the constructor re-validates both facts.
pub fn image_star(f: &Morphism, s: &MonicStar) -> Result<MonicStar, StarError> {
    require_hom(f)?;
    if s.base() != f.dom() {
        return Err(StarError::BaseMismatch);
    }
    let pairs: Vec<(usize, usize)> =
        s.pairs.iter().map(|&(a, b)| (f.apply(a), f.apply(b))).collect();
    MonicStar::new(s.context, f.cod().clone(), pairs)
}

/// Star-inverse image: the `(f × f)`-preimage followed by the star of the
/// resulting relation.
pub fn inverse_image_star(f: &Morphism, t: &MonicStar) -> Result<MonicStar, StarError> {
    require_hom(f)?;
    if t.base() != f.cod() {
        return Err(StarError::BaseMismatch);
    }
    let n = f.dom().size();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if t.contains((f.apply(a), f.apply(b))) {
                pairs.push((a, b));
            }
        }
    }
    let rel = Relation::new(f.dom().clone(), pairs)?;
    star_of_relation(&rel, t.context())
}

/// Whether a star is the kernel star of its own coequalizer.
pub fn is_kernel_star(s: &MonicStar) -> Result<bool, StarError> {
    let (_, q) = coequalizer_of_star(s)?;
    Ok(kernel_star(&q, s.context)? == *s)
}

/// The monomorphism criterion: a map is injective exactly when its kernel
/// star is the diagonal star.
pub fn mono_criterion_holds(f: &Morphism, context: IdealContext) -> Result<bool, StarError> {
    let ks = kernel_star(f, context)?;
    let diag = MonicStar::diagonal(context, f.dom())?;
    Ok(f.is_injective() == (ks == diag))
}

/// A commuting square `g ∘ e = h ∘ f` drawn as a diamond.
#[derive(Debug, Clone)]
pub struct Diamond {
    pub e: Morphism,
    pub f: Morphism,
    pub g: Morphism,
    pub h: Morphism,
}

impl Diamond {
    pub fn new(e: Morphism, f: Morphism, g: Morphism, h: Morphism) -> Result<Self, StarError> {
        if e.dom() != f.dom() || g.dom() != e.cod() || h.dom() != f.cod() || g.cod() != h.cod() {
            return Err(StarError::BaseMismatch);
        }
        let left = Morphism::compose(&g, &e)?;
        let right = Morphism::compose(&h, &f)?;
        if left != right {
            return Err(StarError::NotCommuting);
        }
        Ok(Diamond { e, f, g, h })
    }

    /// The diamond with identity legs that defines a saturating morphism.
    pub fn degenerate(f: &Morphism) -> Self {
        Diamond {
            e: Morphism::identity(f.dom()),
            f: f.clone(),
            g: f.clone(),
            h: Morphism::identity(f.cod()),
        }
    }
}

/// Saturation verdict for a diamond.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Saturation {
    pub left: bool,
    pub right: bool,
}

/// Checks both saturation equalities: left means the image of the kernel
/// star of `f` along `e` is the kernel star of `g`; right swaps the roles.
pub fn check_diamond_saturation(
    d: &Diamond,
    context: IdealContext,
) -> Result<Saturation, StarError> {
    let left = image_star(&d.e, &kernel_star(&d.f, context)?)? == kernel_star(&d.g, context)?;
    let right = image_star(&d.f, &kernel_star(&d.e, context)?)? == kernel_star(&d.h, context)?;
    Ok(Saturation { left, right })
}

/// Result of one star-regularity instance check.
#[derive(Debug, Clone)]
pub struct StarRegularCheck {
    pub description: String,
    /// The comparison map from the coequalizer of the kernel star to the
    /// codomain is an isomorphism.
    pub comparison_iso: bool,
    /// The monomorphism criterion holds for this morphism.
    pub mono_criterion: bool,
    pub error: Option<String>,
}

impl StarRegularCheck {
    pub fn passed(&self) -> bool {
        self.comparison_iso && self.mono_criterion && self.error.is_none()
    }
}

/// Report of a star-regularity sweep over a sample of surjections.
#[derive(Debug, Clone)]
pub struct StarRegularReport {
    pub checks: Vec<StarRegularCheck>,
}

impl StarRegularReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(StarRegularCheck::passed)
    }
}

/// For each surjective homomorphism, verifies the defining property of
/// star-regularity on its instance: the comparison map from the coequalizer
/// of its kernel star to the codomain is an isomorphism. The monomorphism
/// criterion is checked alongside. Failing instances are reported, not
/// thrown.
pub fn verify_star_regular(
    sample: &[Morphism],
    context: IdealContext,
) -> Result<StarRegularReport, StarError> {
    for f in sample {
        require_hom(f)?;
        if !f.is_surjective() {
            return Err(StarError::NotSurjective(f.to_string()));
        }
    }
    let checks = sample
        .iter()
        .map(|f| {
            let description = format!("{f}");
            match star_regular_instance(f, context) {
                Ok((comparison_iso, mono_criterion)) => StarRegularCheck {
                    description,
                    comparison_iso,
                    mono_criterion,
                    error: None,
                },
                Err(e) => StarRegularCheck {
                    description,
                    comparison_iso: false,
                    mono_criterion: false,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    Ok(StarRegularReport { checks })
}

fn star_regular_instance(
    f: &Morphism,
    context: IdealContext,
) -> Result<(bool, bool), StarError> {
    let ks = kernel_star(f, context)?;
    let (quotient, q) = coequalizer_of_star(&ks)?;
    // comparison map: class of x -> f(x); well-defined because the
    // congruence generated by the kernel star refines the kernel pair of f
    let mut comparison = vec![usize::MAX; quotient.size()];
    for x in 0..f.dom().size() {
        let c = q.apply(x);
        let v = f.apply(x);
        if comparison[c] == usize::MAX {
            comparison[c] = v;
        } else if comparison[c] != v {
            return Ok((false, mono_criterion_holds(f, context)?));
        }
    }
    let m = Morphism::new(quotient, f.cod().clone(), comparison)?;
    let comparison_iso = m.is_isomorphism();
    Ok((comparison_iso, mono_criterion_holds(f, context)?))
}

fn require_hom(f: &Morphism) -> Result<(), StarError> {
    if f.is_homomorphism() {
        Ok(())
    } else {
        Err(StarError::NotAHomomorphism(f.to_string()))
    }
}
