//! Monoidal functors, monoidal natural transformations, and their composites.

use std::fmt;

use serde::Serialize;

use crate::category::{MonoidalCategory, Mor, Obj};
use crate::error::{CatError, Result};

pub type Src<F> = <F as MonoidalFunctor>::Source;
pub type Tgt<F> = <F as MonoidalFunctor>::Target;

/// How strongly a functor preserves the monoidal structure. Ordered from
/// weakest to strongest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    Lax,
    Strong,
    Strict,
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strength::Lax => "lax",
            Strength::Strong => "strong",
            Strength::Strict => "strict",
        })
    }
}

/// A monoidal functor `(F, γ, u)`.
///
/// `gamma(X, Y): F(X) ⊠ F(Y) → F(X ⊗ Y)` and `unit_map(): 1 → F(1)`.
/// The inverses are only available for strong and strict functors.
pub trait MonoidalFunctor {
    type Source: MonoidalCategory;
    type Target: MonoidalCategory;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;

    fn map_obj(&self, x: &Obj<Self::Source>) -> Result<Obj<Self::Target>>;
    fn map_mor(&self, f: &Mor<Self::Source>) -> Result<Mor<Self::Target>>;

    fn gamma(&self, x: &Obj<Self::Source>, y: &Obj<Self::Source>) -> Result<Mor<Self::Target>>;
    fn gamma_inv(&self, x: &Obj<Self::Source>, y: &Obj<Self::Source>)
        -> Result<Mor<Self::Target>>;
    fn unit_map(&self) -> Result<Mor<Self::Target>>;
    fn unit_map_inv(&self) -> Result<Mor<Self::Target>>;

    fn strength(&self) -> Strength;
}

impl<F: MonoidalFunctor + ?Sized> MonoidalFunctor for &F {
    type Source = F::Source;
    type Target = F::Target;

    fn source(&self) -> &Self::Source {
        (**self).source()
    }
    fn target(&self) -> &Self::Target {
        (**self).target()
    }
    fn map_obj(&self, x: &Obj<Self::Source>) -> Result<Obj<Self::Target>> {
        (**self).map_obj(x)
    }
    fn map_mor(&self, f: &Mor<Self::Source>) -> Result<Mor<Self::Target>> {
        (**self).map_mor(f)
    }
    fn gamma(&self, x: &Obj<Self::Source>, y: &Obj<Self::Source>) -> Result<Mor<Self::Target>> {
        (**self).gamma(x, y)
    }
    fn gamma_inv(
        &self,
        x: &Obj<Self::Source>,
        y: &Obj<Self::Source>,
    ) -> Result<Mor<Self::Target>> {
        (**self).gamma_inv(x, y)
    }
    fn unit_map(&self) -> Result<Mor<Self::Target>> {
        (**self).unit_map()
    }
    fn unit_map_inv(&self) -> Result<Mor<Self::Target>> {
        (**self).unit_map_inv()
    }
    fn strength(&self) -> Strength {
        (**self).strength()
    }
}

/// A monoidal natural transformation between two functors with the same
/// source and target.
pub trait MonoidalNat {
    type From: MonoidalFunctor;
    type To: MonoidalFunctor<Source = Src<Self::From>, Target = Tgt<Self::From>>;

    fn from(&self) -> &Self::From;
    fn to(&self) -> &Self::To;

    /// `α_X: F(X) → G(X)`
    fn component(&self, x: &Obj<Src<Self::From>>) -> Result<Mor<Tgt<Self::From>>>;
}

impl<A: MonoidalNat + ?Sized> MonoidalNat for &A {
    type From = A::From;
    type To = A::To;

    fn from(&self) -> &Self::From {
        (**self).from()
    }
    fn to(&self) -> &Self::To {
        (**self).to()
    }
    fn component(&self, x: &Obj<Src<Self::From>>) -> Result<Mor<Tgt<Self::From>>> {
        (**self).component(x)
    }
}

/// The identity functor, strict with identity coherence data.
#[derive(Debug, Clone)]
pub struct IdentityFunctor<C> {
    category: C,
}

impl<C: MonoidalCategory> IdentityFunctor<C> {
    pub fn new(category: C) -> Self {
        IdentityFunctor { category }
    }
}

impl<C: MonoidalCategory> MonoidalFunctor for IdentityFunctor<C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        &self.category
    }
    fn target(&self) -> &C {
        &self.category
    }
    fn map_obj(&self, x: &C::Obj) -> Result<C::Obj> {
        Ok(x.clone())
    }
    fn map_mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(f.clone())
    }
    fn gamma(&self, x: &C::Obj, y: &C::Obj) -> Result<C::Mor> {
        self.category.identity(&self.category.tensor_obj(x, y)?)
    }
    fn gamma_inv(&self, x: &C::Obj, y: &C::Obj) -> Result<C::Mor> {
        self.gamma(x, y)
    }
    fn unit_map(&self) -> Result<C::Mor> {
        self.category.identity(&self.category.unit())
    }
    fn unit_map_inv(&self) -> Result<C::Mor> {
        self.unit_map()
    }
    fn strength(&self) -> Strength {
        Strength::Strict
    }
}

/// `F2 ∘ F1` with `u'' = F2(u1) ∘ u2` and `γ'' = F2(γ1) ∘ γ2`.
#[derive(Debug, Clone)]
pub struct Composite<F2, F1> {
    outer: F2,
    inner: F1,
}

/// Compose `outer ∘ inner`. The model types must line up; the value-level
/// models are taken on trust.
pub fn compose_functors<F2, F1>(outer: F2, inner: F1) -> Composite<F2, F1>
where
    F1: MonoidalFunctor,
    F2: MonoidalFunctor,
    F2::Source: MonoidalCategory<Obj = Obj<F1::Target>, Mor = Mor<F1::Target>>,
{
    Composite { outer, inner }
}

impl<F2, F1> Composite<F2, F1> {
    pub fn outer(&self) -> &F2 {
        &self.outer
    }
    pub fn inner(&self) -> &F1 {
        &self.inner
    }
}

impl<F2, F1> MonoidalFunctor for Composite<F2, F1>
where
    F1: MonoidalFunctor,
    F2: MonoidalFunctor,
    F2::Source: MonoidalCategory<Obj = Obj<F1::Target>, Mor = Mor<F1::Target>>,
{
    type Source = F1::Source;
    type Target = F2::Target;

    fn source(&self) -> &Self::Source {
        self.inner.source()
    }
    fn target(&self) -> &Self::Target {
        self.outer.target()
    }
    fn map_obj(&self, x: &Obj<Self::Source>) -> Result<Obj<Self::Target>> {
        self.outer.map_obj(&self.inner.map_obj(x)?)
    }
    fn map_mor(&self, f: &Mor<Self::Source>) -> Result<Mor<Self::Target>> {
        self.outer.map_mor(&self.inner.map_mor(f)?)
    }
    fn gamma(&self, x: &Obj<Self::Source>, y: &Obj<Self::Source>) -> Result<Mor<Self::Target>> {
        let fx = self.inner.map_obj(x)?;
        let fy = self.inner.map_obj(y)?;
        let outer_gamma = self.outer.gamma(&fx, &fy)?;
        let lifted = self.outer.map_mor(&self.inner.gamma(x, y)?)?;
        self.target().compose(&lifted, &outer_gamma)
    }
    fn gamma_inv(
        &self,
        x: &Obj<Self::Source>,
        y: &Obj<Self::Source>,
    ) -> Result<Mor<Self::Target>> {
        let fx = self.inner.map_obj(x)?;
        let fy = self.inner.map_obj(y)?;
        let outer_inv = self.outer.gamma_inv(&fx, &fy)?;
        let lifted = self.outer.map_mor(&self.inner.gamma_inv(x, y)?)?;
        self.target().compose(&outer_inv, &lifted)
    }
    fn unit_map(&self) -> Result<Mor<Self::Target>> {
        let lifted = self.outer.map_mor(&self.inner.unit_map()?)?;
        self.target().compose(&lifted, &self.outer.unit_map()?)
    }
    fn unit_map_inv(&self) -> Result<Mor<Self::Target>> {
        let lifted = self.outer.map_mor(&self.inner.unit_map_inv()?)?;
        self.target().compose(&self.outer.unit_map_inv()?, &lifted)
    }
    fn strength(&self) -> Strength {
        self.outer.strength().min(self.inner.strength())
    }
}

/// A functor given by closures, for fixtures and tests.
pub struct FnFunctor<C: MonoidalCategory, D: MonoidalCategory> {
    pub source: C,
    pub target: D,
    pub strength: Strength,
    #[allow(clippy::type_complexity)]
    pub obj: Box<dyn Fn(&Obj<C>) -> Result<Obj<D>>>,
    #[allow(clippy::type_complexity)]
    pub mor: Box<dyn Fn(&Mor<C>) -> Result<Mor<D>>>,
    #[allow(clippy::type_complexity)]
    pub gamma: Box<dyn Fn(&Obj<C>, &Obj<C>) -> Result<Mor<D>>>,
    #[allow(clippy::type_complexity)]
    pub gamma_inv: Box<dyn Fn(&Obj<C>, &Obj<C>) -> Result<Mor<D>>>,
    pub unit: Box<dyn Fn() -> Result<Mor<D>>>,
    pub unit_inv: Box<dyn Fn() -> Result<Mor<D>>>,
}

impl<C: MonoidalCategory, D: MonoidalCategory> MonoidalFunctor for FnFunctor<C, D> {
    type Source = C;
    type Target = D;

    fn source(&self) -> &C {
        &self.source
    }
    fn target(&self) -> &D {
        &self.target
    }
    fn map_obj(&self, x: &Obj<C>) -> Result<Obj<D>> {
        (self.obj)(x)
    }
    fn map_mor(&self, f: &Mor<C>) -> Result<Mor<D>> {
        (self.mor)(f)
    }
    fn gamma(&self, x: &Obj<C>, y: &Obj<C>) -> Result<Mor<D>> {
        (self.gamma)(x, y)
    }
    fn gamma_inv(&self, x: &Obj<C>, y: &Obj<C>) -> Result<Mor<D>> {
        if self.strength == Strength::Lax {
            return Err(CatError::NotInvertible("γ of a lax functor".into()));
        }
        (self.gamma_inv)(x, y)
    }
    fn unit_map(&self) -> Result<Mor<D>> {
        (self.unit)()
    }
    fn unit_map_inv(&self) -> Result<Mor<D>> {
        if self.strength == Strength::Lax {
            return Err(CatError::NotInvertible("u of a lax functor".into()));
        }
        (self.unit_inv)()
    }
    fn strength(&self) -> Strength {
        self.strength
    }
}

/// Wraps a functor and rewrites its value on selected morphisms.
///
/// Used to falsify uniqueness and factorisation claims: a law that still
/// holds after a mutation is not actually being checked.
pub struct MutatedFunctor<F: MonoidalFunctor> {
    inner: F,
    #[allow(clippy::type_complexity)]
    mutate: Box<dyn Fn(&Mor<F::Source>, Mor<F::Target>) -> Result<Mor<F::Target>>>,
}

impl<F: MonoidalFunctor> MutatedFunctor<F> {
    pub fn new(
        inner: F,
        mutate: impl Fn(&Mor<F::Source>, Mor<F::Target>) -> Result<Mor<F::Target>> + 'static,
    ) -> Self {
        MutatedFunctor {
            inner,
            mutate: Box::new(mutate),
        }
    }
}

impl<F: MonoidalFunctor> MonoidalFunctor for MutatedFunctor<F> {
    type Source = F::Source;
    type Target = F::Target;

    fn source(&self) -> &Self::Source {
        self.inner.source()
    }
    fn target(&self) -> &Self::Target {
        self.inner.target()
    }
    fn map_obj(&self, x: &Obj<Self::Source>) -> Result<Obj<Self::Target>> {
        self.inner.map_obj(x)
    }
    fn map_mor(&self, f: &Mor<Self::Source>) -> Result<Mor<Self::Target>> {
        (self.mutate)(f, self.inner.map_mor(f)?)
    }
    fn gamma(&self, x: &Obj<Self::Source>, y: &Obj<Self::Source>) -> Result<Mor<Self::Target>> {
        self.inner.gamma(x, y)
    }
    fn gamma_inv(
        &self,
        x: &Obj<Self::Source>,
        y: &Obj<Self::Source>,
    ) -> Result<Mor<Self::Target>> {
        self.inner.gamma_inv(x, y)
    }
    fn unit_map(&self) -> Result<Mor<Self::Target>> {
        self.inner.unit_map()
    }
    fn unit_map_inv(&self) -> Result<Mor<Self::Target>> {
        self.inner.unit_map_inv()
    }
    fn strength(&self) -> Strength {
        self.inner.strength()
    }
}

/// The identity transformation `F ⇒ F`.
pub struct IdentityNat<F> {
    functor: F,
}

impl<F: MonoidalFunctor> IdentityNat<F> {
    pub fn new(functor: F) -> Self {
        IdentityNat { functor }
    }
}

impl<F: MonoidalFunctor> MonoidalNat for IdentityNat<F> {
    type From = F;
    type To = F;

    fn from(&self) -> &F {
        &self.functor
    }
    fn to(&self) -> &F {
        &self.functor
    }
    fn component(&self, x: &Obj<F::Source>) -> Result<Mor<F::Target>> {
        self.functor
            .target()
            .identity(&self.functor.map_obj(x)?)
    }
}

/// A transformation given by a component closure.
pub struct FnNat<F: MonoidalFunctor, G> {
    from: F,
    to: G,
    #[allow(clippy::type_complexity)]
    component: Box<dyn Fn(&Obj<F::Source>) -> Result<Mor<F::Target>>>,
}

impl<F, G> FnNat<F, G>
where
    F: MonoidalFunctor,
    G: MonoidalFunctor<Source = F::Source, Target = F::Target>,
{
    pub fn new(
        from: F,
        to: G,
        component: impl Fn(&Obj<F::Source>) -> Result<Mor<F::Target>> + 'static,
    ) -> Self {
        FnNat {
            from,
            to,
            component: Box::new(component),
        }
    }
}

impl<F, G> MonoidalNat for FnNat<F, G>
where
    F: MonoidalFunctor,
    G: MonoidalFunctor<Source = F::Source, Target = F::Target>,
{
    type From = F;
    type To = G;

    fn from(&self) -> &F {
        &self.from
    }
    fn to(&self) -> &G {
        &self.to
    }
    fn component(&self, x: &Obj<F::Source>) -> Result<Mor<F::Target>> {
        (self.component)(x)
    }
}

/// Vertical composite `α2 ∘ α1`, componentwise.
pub struct Vertical<A2, A1> {
    second: A2,
    first: A1,
}

pub fn vertical<A2, A1>(second: A2, first: A1) -> Vertical<A2, A1>
where
    A1: MonoidalNat,
    A2: MonoidalNat<From = A1::To>,
{
    Vertical { second, first }
}

impl<A2, A1> MonoidalNat for Vertical<A2, A1>
where
    A1: MonoidalNat,
    A2: MonoidalNat<From = A1::To>,
    A2::To: MonoidalFunctor<Source = Src<A1::From>, Target = Tgt<A1::From>>,
{
    type From = A1::From;
    type To = A2::To;

    fn from(&self) -> &Self::From {
        self.first.from()
    }
    fn to(&self) -> &Self::To {
        self.second.to()
    }
    fn component(&self, x: &Obj<Src<Self::From>>) -> Result<Mor<Tgt<Self::From>>> {
        let first = self.first.component(x)?;
        let second = self.second.component(x)?;
        self.first.from().target().compose(&second, &first)
    }
}

/// Horizontal composite `α2 * α1: F2 F1 ⇒ G2 G1` with component
/// `G2(α1_X) ∘ α2_{F1 X}`.
pub struct Horizontal<'a, A2: MonoidalNat, A1: MonoidalNat> {
    outer: &'a A2,
    inner: &'a A1,
    from: Composite<&'a A2::From, &'a A1::From>,
    to: Composite<&'a A2::To, &'a A1::To>,
}

pub fn horizontal<'a, A2, A1>(outer: &'a A2, inner: &'a A1) -> Horizontal<'a, A2, A1>
where
    A1: MonoidalNat,
    A2: MonoidalNat,
    Src<A2::From>: MonoidalCategory<Obj = Obj<Tgt<A1::From>>, Mor = Mor<Tgt<A1::From>>>,
{
    Horizontal {
        outer,
        inner,
        from: Composite {
            outer: outer.from(),
            inner: inner.from(),
        },
        to: Composite {
            outer: outer.to(),
            inner: inner.to(),
        },
    }
}

impl<'a, A2, A1> MonoidalNat for Horizontal<'a, A2, A1>
where
    A1: MonoidalNat,
    A2: MonoidalNat,
    Src<A2::From>: MonoidalCategory<Obj = Obj<Tgt<A1::From>>, Mor = Mor<Tgt<A1::From>>>,
{
    type From = Composite<&'a A2::From, &'a A1::From>;
    type To = Composite<&'a A2::To, &'a A1::To>;

    fn from(&self) -> &Self::From {
        &self.from
    }
    fn to(&self) -> &Self::To {
        &self.to
    }
    fn component(&self, x: &Obj<Src<Self::From>>) -> Result<Mor<Tgt<Self::From>>> {
        let f1x = self.inner.from().map_obj(x)?;
        let outer_part = self.outer.component(&f1x)?;
        let inner_part = self.outer.to().map_mor(&self.inner.component(x)?)?;
        self.outer.from().target().compose(&inner_part, &outer_part)
    }
}

pub(crate) fn require_strong<F: MonoidalFunctor>(f: &F) -> Result<()> {
    if f.strength() < Strength::Strong {
        return Err(CatError::Precondition("functor must be strong monoidal".into()));
    }
    Ok(())
}
