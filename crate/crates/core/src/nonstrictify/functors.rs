//! Functors into and out of `C_q`: the embedding `j`, the shape-directed
//! parenthesisation `Par_q`, the lifts `F̂` and `α̂` along `j`, and the
//! 2-functor action `F_q`, `α_q`.

use crate::category::{MonoidalCategory, Mor, Obj};
use crate::error::{CatError, Result};
use crate::functor::{require_strong, MonoidalFunctor, MonoidalNat, Src, Strength, Tgt};

use super::{shape_fold, NonStrictification, QMor, QMorphism, QObject};

/// The embedding `j: C → C_q`, strong with `η` and `u` carrying identity
/// payloads.
#[derive(Debug, Clone)]
pub struct EmbeddingQ<C> {
    source: C,
    target: NonStrictification<C>,
}

impl<C: MonoidalCategory + Clone> EmbeddingQ<C> {
    pub fn new(c: C) -> Self {
        EmbeddingQ {
            target: NonStrictification::new(c.clone()),
            source: c,
        }
    }
}

impl<C: MonoidalCategory + Clone> MonoidalFunctor for EmbeddingQ<C> {
    type Source = C;
    type Target = NonStrictification<C>;

    fn source(&self) -> &C {
        &self.source
    }
    fn target(&self) -> &NonStrictification<C> {
        &self.target
    }
    fn map_obj(&self, x: &C::Obj) -> Result<QObject<C::Obj>> {
        Ok(self.target.embed_j(x))
    }
    fn map_mor(&self, f: &C::Mor) -> Result<QMor<C>> {
        Ok(self.target.embed_j_mor(f))
    }
    fn gamma(&self, x: &C::Obj, y: &C::Obj) -> Result<QMor<C>> {
        self.target.eta_q(x, y)
    }
    fn gamma_inv(&self, x: &C::Obj, y: &C::Obj) -> Result<QMor<C>> {
        Ok(self.target.reversed_identity(self.target.eta_q(x, y)?))
    }
    fn unit_map(&self) -> Result<QMor<C>> {
        self.target.unit_uq()
    }
    fn unit_map_inv(&self) -> Result<QMor<C>> {
        Ok(self.target.reversed_identity(self.target.unit_uq()?))
    }
    fn strength(&self) -> Strength {
        Strength::Strong
    }
}

/// `Par_q: C_q → C`, strong with `γ = θ_q` and `u = id_1`.
#[derive(Debug, Clone)]
pub struct ParQ<C> {
    source: NonStrictification<C>,
    target: C,
}

impl<C: MonoidalCategory + Clone> ParQ<C> {
    pub fn new(c: C) -> Self {
        ParQ {
            source: NonStrictification::new(c.clone()),
            target: c,
        }
    }
}

impl<C: MonoidalCategory + Clone> MonoidalFunctor for ParQ<C> {
    type Source = NonStrictification<C>;
    type Target = C;

    fn source(&self) -> &NonStrictification<C> {
        &self.source
    }
    fn target(&self) -> &C {
        &self.target
    }
    fn map_obj(&self, o: &QObject<C::Obj>) -> Result<C::Obj> {
        self.source.par_q(o)
    }
    fn map_mor(&self, f: &QMor<C>) -> Result<C::Mor> {
        Ok(f.payload.clone())
    }
    fn gamma(&self, o: &QObject<C::Obj>, o2: &QObject<C::Obj>) -> Result<C::Mor> {
        self.source.theta_q(o, o2)
    }
    fn gamma_inv(&self, o: &QObject<C::Obj>, o2: &QObject<C::Obj>) -> Result<C::Mor> {
        self.source.theta_q_inv(o, o2)
    }
    fn unit_map(&self) -> Result<C::Mor> {
        self.target.identity(&self.target.unit())
    }
    fn unit_map_inv(&self) -> Result<C::Mor> {
        self.unit_map()
    }
    fn strength(&self) -> Strength {
        Strength::Strong
    }
}

fn par_in<C: MonoidalCategory>(c: &C, o: &QObject<C::Obj>) -> Result<C::Obj> {
    shape_fold(o.shape(), o.seq(), &|| Ok(c.unit()), &|x, y| c.tensor_obj(x, y))
}

/// `F` applied entrywise and folded along the shape in the target.
fn lifted_obj<F: MonoidalFunctor>(f: &F, o: &QObject<Obj<Src<F>>>) -> Result<Obj<Tgt<F>>> {
    let d = f.target();
    let images = o
        .seq()
        .iter()
        .map(|x| f.map_obj(x))
        .collect::<Result<Vec<_>>>()?;
    shape_fold(o.shape(), &images, &|| Ok(d.unit()), &|x, y| d.tensor_obj(x, y))
}

/// `β_o: F̂(o) → F(Par o)`: `u` on `(∅, 1)`, the identity on `((X), •)`,
/// and `γ_{Par o1, Par o2} ∘ (β_{o1} ⊠ β_{o2})` on `o1 * o2`.
pub fn beta_q<F: MonoidalFunctor>(f: &F, o: &QObject<Obj<Src<F>>>) -> Result<Mor<Tgt<F>>> {
    let d = f.target();
    match o.len() {
        0 => f.unit_map(),
        1 => d.identity(&f.map_obj(&o.seq()[0])?),
        _ => {
            let (o1, o2) = o.split()?;
            let both = d.tensor_mor(&beta_q(f, &o1)?, &beta_q(f, &o2)?)?;
            let c = f.source();
            let g = f.gamma(&par_in(c, &o1)?, &par_in(c, &o2)?)?;
            d.compose(&g, &both)
        }
    }
}

/// `β_o⁻¹`, built from `γ⁻¹` and `u⁻¹`.
pub fn beta_q_inv<F: MonoidalFunctor>(f: &F, o: &QObject<Obj<Src<F>>>) -> Result<Mor<Tgt<F>>> {
    let d = f.target();
    match o.len() {
        0 => f.unit_map_inv(),
        1 => d.identity(&f.map_obj(&o.seq()[0])?),
        _ => {
            let (o1, o2) = o.split()?;
            let both = d.tensor_mor(&beta_q_inv(f, &o1)?, &beta_q_inv(f, &o2)?)?;
            let c = f.source();
            let g = f.gamma_inv(&par_in(c, &o1)?, &par_in(c, &o2)?)?;
            d.compose(&both, &g)
        }
    }
}

fn transport_q<F: MonoidalFunctor>(
    f: &F,
    dom: &QObject<Obj<Src<F>>>,
    cod: &QObject<Obj<Src<F>>>,
    payload: &Mor<Src<F>>,
) -> Result<Mor<Tgt<F>>> {
    f.target().compose_path(&[
        beta_q(f, dom)?,
        f.map_mor(payload)?,
        beta_q_inv(f, cod)?,
    ])
}

/// `F̂: C_q → D` with `F̂ ∘ j = F`. Objects are folded along their shape;
/// `γ̂` is `ℓ'` or `r'` of `D` when a factor is empty and the identity
/// otherwise, and `û` is the identity.
#[derive(Debug, Clone)]
pub struct QLift<F: MonoidalFunctor> {
    functor: F,
    source: NonStrictification<F::Source>,
}

/// Lift a strong functor into a non-strict target along `j`. A strict target
/// is rejected: its lift belongs to `C^str`.
pub fn lift_nonstrict<F>(functor: F) -> Result<QLift<F>>
where
    F: MonoidalFunctor,
    F::Source: Clone,
{
    if functor.target().is_strict() {
        return Err(CatError::StrictnessMismatch("strict"));
    }
    lift_nonstrict_unchecked(functor)
}

/// As [`lift_nonstrict`] without the non-strictness check on the target.
pub fn lift_nonstrict_unchecked<F>(functor: F) -> Result<QLift<F>>
where
    F: MonoidalFunctor,
    F::Source: Clone,
{
    require_strong(&functor)?;
    Ok(QLift {
        source: NonStrictification::new(functor.source().clone()),
        functor,
    })
}

impl<F: MonoidalFunctor> QLift<F> {
    pub fn functor(&self) -> &F {
        &self.functor
    }
}

impl<F: MonoidalFunctor> MonoidalFunctor for QLift<F> {
    type Source = NonStrictification<F::Source>;
    type Target = F::Target;

    fn source(&self) -> &Self::Source {
        &self.source
    }
    fn target(&self) -> &F::Target {
        self.functor.target()
    }
    fn map_obj(&self, o: &QObject<Obj<F::Source>>) -> Result<Obj<F::Target>> {
        lifted_obj(&self.functor, o)
    }
    fn map_mor(&self, m: &QMor<F::Source>) -> Result<Mor<F::Target>> {
        transport_q(&self.functor, &m.dom, &m.cod, &m.payload)
    }
    fn gamma(
        &self,
        o: &QObject<Obj<F::Source>>,
        o2: &QObject<Obj<F::Source>>,
    ) -> Result<Mor<F::Target>> {
        let d = self.target();
        if o.is_empty() {
            d.lunitor(&self.map_obj(o2)?)
        } else if o2.is_empty() {
            d.runitor(&self.map_obj(o)?)
        } else {
            d.identity(&d.tensor_obj(&self.map_obj(o)?, &self.map_obj(o2)?)?)
        }
    }
    fn gamma_inv(
        &self,
        o: &QObject<Obj<F::Source>>,
        o2: &QObject<Obj<F::Source>>,
    ) -> Result<Mor<F::Target>> {
        let d = self.target();
        if o.is_empty() {
            d.lunitor_inv(&self.map_obj(o2)?)
        } else if o2.is_empty() {
            d.runitor_inv(&self.map_obj(o)?)
        } else {
            d.identity(&d.tensor_obj(&self.map_obj(o)?, &self.map_obj(o2)?)?)
        }
    }
    fn unit_map(&self) -> Result<Mor<F::Target>> {
        let d = self.target();
        d.identity(&d.unit())
    }
    fn unit_map_inv(&self) -> Result<Mor<F::Target>> {
        self.unit_map()
    }
    fn strength(&self) -> Strength {
        if self.target().is_strict() {
            Strength::Strict
        } else {
            Strength::Strong
        }
    }
}

fn folded_components<A: MonoidalNat>(
    alpha: &A,
    o: &QObject<Obj<Src<A::From>>>,
) -> Result<Mor<Tgt<A::From>>> {
    let d = alpha.from().target();
    let parts = o
        .seq()
        .iter()
        .map(|x| alpha.component(x))
        .collect::<Result<Vec<_>>>()?;
    shape_fold(
        o.shape(),
        &parts,
        &|| d.identity(&d.unit()),
        &|f, g| d.tensor_mor(f, g),
    )
}

/// `α̂: F̂ ⇒ Ĝ` with `α̂ j = α`: the components of `α` tensored along the
/// shape.
pub struct QLiftNat<'a, A: MonoidalNat> {
    alpha: &'a A,
    from: QLift<&'a A::From>,
    to: QLift<&'a A::To>,
}

pub fn lift_nat_nonstrict<A>(alpha: &A) -> Result<QLiftNat<'_, A>>
where
    A: MonoidalNat,
    Src<A::From>: Clone,
{
    Ok(QLiftNat {
        from: lift_nonstrict(alpha.from())?,
        to: lift_nonstrict(alpha.to())?,
        alpha,
    })
}

impl<'a, A: MonoidalNat> MonoidalNat for QLiftNat<'a, A> {
    type From = QLift<&'a A::From>;
    type To = QLift<&'a A::To>;

    fn from(&self) -> &Self::From {
        &self.from
    }
    fn to(&self) -> &Self::To {
        &self.to
    }
    fn component(&self, o: &QObject<Obj<Src<A::From>>>) -> Result<Mor<Tgt<A::From>>> {
        folded_components(self.alpha, o)
    }
}

/// `F_q: C_q → D_q`, `(S, t) ↦ (F S, t)`, strict.
#[derive(Debug, Clone)]
pub struct QFunctor<F: MonoidalFunctor> {
    functor: F,
    source: NonStrictification<F::Source>,
    target: NonStrictification<F::Target>,
}

pub fn q_functor<F>(functor: F) -> Result<QFunctor<F>>
where
    F: MonoidalFunctor,
    F::Source: Clone,
    F::Target: Clone,
{
    require_strong(&functor)?;
    Ok(QFunctor {
        source: NonStrictification::new(functor.source().clone()),
        target: NonStrictification::new(functor.target().clone()),
        functor,
    })
}

impl<F: MonoidalFunctor> QFunctor<F> {
    pub fn functor(&self) -> &F {
        &self.functor
    }
}

impl<F: MonoidalFunctor> MonoidalFunctor for QFunctor<F> {
    type Source = NonStrictification<F::Source>;
    type Target = NonStrictification<F::Target>;

    fn source(&self) -> &Self::Source {
        &self.source
    }
    fn target(&self) -> &Self::Target {
        &self.target
    }
    fn map_obj(&self, o: &QObject<Obj<F::Source>>) -> Result<QObject<Obj<F::Target>>> {
        QObject::new(
            o.seq()
                .iter()
                .map(|x| self.functor.map_obj(x))
                .collect::<Result<Vec<_>>>()?,
            o.shape().clone(),
        )
    }
    fn map_mor(&self, m: &QMor<F::Source>) -> Result<QMor<F::Target>> {
        Ok(QMorphism {
            dom: self.map_obj(&m.dom)?,
            cod: self.map_obj(&m.cod)?,
            payload: transport_q(&self.functor, &m.dom, &m.cod, &m.payload)?,
        })
    }
    fn gamma(
        &self,
        o: &QObject<Obj<F::Source>>,
        o2: &QObject<Obj<F::Source>>,
    ) -> Result<QMor<F::Target>> {
        self.target.identity(&self.map_obj(&o.star(o2))?)
    }
    fn gamma_inv(
        &self,
        o: &QObject<Obj<F::Source>>,
        o2: &QObject<Obj<F::Source>>,
    ) -> Result<QMor<F::Target>> {
        self.gamma(o, o2)
    }
    fn unit_map(&self) -> Result<QMor<F::Target>> {
        self.target.identity(&QObject::empty())
    }
    fn unit_map_inv(&self) -> Result<QMor<F::Target>> {
        self.unit_map()
    }
    fn strength(&self) -> Strength {
        Strength::Strict
    }
}

/// `α_q: F_q ⇒ G_q` with payload the components tensored along the shape.
pub struct QNat<'a, A: MonoidalNat> {
    alpha: &'a A,
    from: QFunctor<&'a A::From>,
    to: QFunctor<&'a A::To>,
}

pub fn q_nat<A>(alpha: &A) -> Result<QNat<'_, A>>
where
    A: MonoidalNat,
    Src<A::From>: Clone,
    Tgt<A::From>: Clone,
{
    Ok(QNat {
        from: q_functor(alpha.from())?,
        to: q_functor(alpha.to())?,
        alpha,
    })
}

impl<'a, A: MonoidalNat> MonoidalNat for QNat<'a, A> {
    type From = QFunctor<&'a A::From>;
    type To = QFunctor<&'a A::To>;

    fn from(&self) -> &Self::From {
        &self.from
    }
    fn to(&self) -> &Self::To {
        &self.to
    }
    fn component(&self, o: &QObject<Obj<Src<A::From>>>) -> Result<QMor<Tgt<A::From>>> {
        Ok(QMorphism {
            dom: self.from.map_obj(o)?,
            cod: self.to.map_obj(o)?,
            payload: folded_components(self.alpha, o)?,
        })
    }
}
