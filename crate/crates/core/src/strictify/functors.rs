//! Functors into and out of `C^str`: the embedding `i`, the
//! parenthesisation `Par`, the universal lifts `F̂` and `α̂`, and the
//! 2-functor action `F^str`, `α^str`.

use crate::category::{MonoidalCategory, Mor, Obj};
use crate::error::{CatError, Result};
use crate::functor::{require_strong, MonoidalFunctor, MonoidalNat, Src, Strength, Tgt};

use super::{StrMor, StrMorphism, StrObject, Strictification};

/// The embedding `i: C → C^str`, strong with `η` and `u` carrying identity
/// payloads.
#[derive(Debug, Clone)]
pub struct Embedding<C> {
    source: C,
    target: Strictification<C>,
}

impl<C: MonoidalCategory + Clone> Embedding<C> {
    pub fn new(c: C) -> Self {
        Embedding {
            target: Strictification::new(c.clone()),
            source: c,
        }
    }
}

impl<C: MonoidalCategory + Clone> MonoidalFunctor for Embedding<C> {
    type Source = C;
    type Target = Strictification<C>;

    fn source(&self) -> &C {
        &self.source
    }
    fn target(&self) -> &Strictification<C> {
        &self.target
    }
    fn map_obj(&self, x: &C::Obj) -> Result<StrObject<C::Obj>> {
        Ok(self.target.embed_i(x))
    }
    fn map_mor(&self, f: &C::Mor) -> Result<StrMor<C>> {
        Ok(self.target.embed_i_mor(f))
    }
    fn gamma(&self, x: &C::Obj, y: &C::Obj) -> Result<StrMor<C>> {
        self.target.eta(x, y)
    }
    fn gamma_inv(&self, x: &C::Obj, y: &C::Obj) -> Result<StrMor<C>> {
        Ok(self.target.reversed_identity(self.target.eta(x, y)?))
    }
    fn unit_map(&self) -> Result<StrMor<C>> {
        self.target.unit_u()
    }
    fn unit_map_inv(&self) -> Result<StrMor<C>> {
        Ok(self.target.reversed_identity(self.target.unit_u()?))
    }
    fn strength(&self) -> Strength {
        Strength::Strong
    }
}

/// `Par: C^str → C`, strong with `γ = θ` and `u = id_1`; strict when `C` is.
#[derive(Debug, Clone)]
pub struct ParFunctor<C> {
    source: Strictification<C>,
    target: C,
}

impl<C: MonoidalCategory + Clone> ParFunctor<C> {
    pub fn new(c: C) -> Self {
        ParFunctor {
            source: Strictification::new(c.clone()),
            target: c,
        }
    }
}

impl<C: MonoidalCategory + Clone> MonoidalFunctor for ParFunctor<C> {
    type Source = Strictification<C>;
    type Target = C;

    fn source(&self) -> &Strictification<C> {
        &self.source
    }
    fn target(&self) -> &C {
        &self.target
    }
    fn map_obj(&self, s: &StrObject<C::Obj>) -> Result<C::Obj> {
        self.source.par_seq(s)
    }
    fn map_mor(&self, f: &StrMor<C>) -> Result<C::Mor> {
        Ok(f.payload.clone())
    }
    fn gamma(&self, s: &StrObject<C::Obj>, s2: &StrObject<C::Obj>) -> Result<C::Mor> {
        self.source.theta(s, s2)
    }
    fn gamma_inv(&self, s: &StrObject<C::Obj>, s2: &StrObject<C::Obj>) -> Result<C::Mor> {
        self.source.theta_inv(s, s2)
    }
    fn unit_map(&self) -> Result<C::Mor> {
        self.target.identity(&self.target.unit())
    }
    fn unit_map_inv(&self) -> Result<C::Mor> {
        self.unit_map()
    }
    fn strength(&self) -> Strength {
        if self.target.is_strict() {
            Strength::Strict
        } else {
            Strength::Strong
        }
    }
}

/// `β_S: Par_D(F X1, .., F Xn) → F(Par S)`: `u` on the empty sequence, the
/// identity on a singleton, and `γ_{Par S̄, X} ∘ (β_S̄ ⊠ id)` for `S̄ * (X)`.
pub fn beta<F: MonoidalFunctor>(f: &F, s: &[Obj<Src<F>>]) -> Result<Mor<Tgt<F>>> {
    let c = f.source();
    let d = f.target();
    match s.split_last() {
        None => f.unit_map(),
        Some((x, [])) => d.identity(&f.map_obj(x)?),
        Some((x, rest)) => {
            let inner = beta(f, rest)?;
            let g = f.gamma(&c.tensor_fold_obj(rest)?, x)?;
            d.compose(&g, &d.whisker_right(&inner, &f.map_obj(x)?)?)
        }
    }
}

/// `β_S⁻¹`, built from `γ⁻¹` and `u⁻¹`.
pub fn beta_inv<F: MonoidalFunctor>(f: &F, s: &[Obj<Src<F>>]) -> Result<Mor<Tgt<F>>> {
    let c = f.source();
    let d = f.target();
    match s.split_last() {
        None => f.unit_map_inv(),
        Some((x, [])) => d.identity(&f.map_obj(x)?),
        Some((x, rest)) => {
            let inner = beta_inv(f, rest)?;
            let g = f.gamma_inv(&c.tensor_fold_obj(rest)?, x)?;
            d.compose(&d.whisker_right(&inner, &f.map_obj(x)?)?, &g)
        }
    }
}

/// `β_{S'}⁻¹ ∘ F(payload) ∘ β_S`
fn transport<F: MonoidalFunctor>(
    f: &F,
    dom: &[Obj<Src<F>>],
    cod: &[Obj<Src<F>>],
    payload: &Mor<Src<F>>,
) -> Result<Mor<Tgt<F>>> {
    f.target().compose_path(&[
        beta(f, dom)?,
        f.map_mor(payload)?,
        beta_inv(f, cod)?,
    ])
}

/// The unique strict `F̂: C^str → D` with `F̂ ∘ i = F`.
#[derive(Debug, Clone)]
pub struct StrictLift<F: MonoidalFunctor> {
    functor: F,
    source: Strictification<F::Source>,
}

/// Lift a strong functor into a strict target along `i`.
pub fn lift_strict<F>(functor: F) -> Result<StrictLift<F>>
where
    F: MonoidalFunctor,
    F::Source: Clone,
{
    if !functor.target().is_strict() {
        return Err(CatError::StrictnessMismatch("non-strict"));
    }
    require_strong(&functor)?;
    Ok(StrictLift {
        source: Strictification::new(functor.source().clone()),
        functor,
    })
}

impl<F: MonoidalFunctor> StrictLift<F> {
    pub fn functor(&self) -> &F {
        &self.functor
    }
}

impl<F: MonoidalFunctor> MonoidalFunctor for StrictLift<F> {
    type Source = Strictification<F::Source>;
    type Target = F::Target;

    fn source(&self) -> &Self::Source {
        &self.source
    }
    fn target(&self) -> &F::Target {
        self.functor.target()
    }
    fn map_obj(&self, s: &StrObject<Obj<F::Source>>) -> Result<Obj<F::Target>> {
        let images = s
            .seq
            .iter()
            .map(|x| self.functor.map_obj(x))
            .collect::<Result<Vec<_>>>()?;
        self.target().tensor_fold_obj(&images)
    }
    fn map_mor(&self, m: &StrMor<F::Source>) -> Result<Mor<F::Target>> {
        transport(&self.functor, &m.dom.seq, &m.cod.seq, &m.payload)
    }
    fn gamma(
        &self,
        s: &StrObject<Obj<F::Source>>,
        s2: &StrObject<Obj<F::Source>>,
    ) -> Result<Mor<F::Target>> {
        let d = self.target();
        d.identity(&d.tensor_obj(&self.map_obj(s)?, &self.map_obj(s2)?)?)
    }
    fn gamma_inv(
        &self,
        s: &StrObject<Obj<F::Source>>,
        s2: &StrObject<Obj<F::Source>>,
    ) -> Result<Mor<F::Target>> {
        self.gamma(s, s2)
    }
    fn unit_map(&self) -> Result<Mor<F::Target>> {
        let d = self.target();
        d.identity(&d.unit())
    }
    fn unit_map_inv(&self) -> Result<Mor<F::Target>> {
        self.unit_map()
    }
    fn strength(&self) -> Strength {
        Strength::Strict
    }
}

/// The unique `α̂: F̂ ⇒ Ĝ` with `α̂ i = α`: the left-nested tensor of the
/// components of `α` along the sequence.
pub struct StrictLiftNat<'a, A: MonoidalNat> {
    alpha: &'a A,
    from: StrictLift<&'a A::From>,
    to: StrictLift<&'a A::To>,
}

pub fn lift_nat_strict<A>(alpha: &A) -> Result<StrictLiftNat<'_, A>>
where
    A: MonoidalNat,
    Src<A::From>: Clone,
{
    Ok(StrictLiftNat {
        from: lift_strict(alpha.from())?,
        to: lift_strict(alpha.to())?,
        alpha,
    })
}

impl<'a, A: MonoidalNat> MonoidalNat for StrictLiftNat<'a, A> {
    type From = StrictLift<&'a A::From>;
    type To = StrictLift<&'a A::To>;

    fn from(&self) -> &Self::From {
        &self.from
    }
    fn to(&self) -> &Self::To {
        &self.to
    }
    fn component(&self, s: &StrObject<Obj<Src<A::From>>>) -> Result<Mor<Tgt<A::From>>> {
        let parts = s
            .seq
            .iter()
            .map(|x| self.alpha.component(x))
            .collect::<Result<Vec<_>>>()?;
        self.alpha.from().target().tensor_fold_mor(&parts)
    }
}

/// `F^str: C^str → D^str`, entrywise on objects, strict.
#[derive(Debug, Clone)]
pub struct StrFunctor<F: MonoidalFunctor> {
    functor: F,
    source: Strictification<F::Source>,
    target: Strictification<F::Target>,
}

pub fn str_functor<F>(functor: F) -> Result<StrFunctor<F>>
where
    F: MonoidalFunctor,
    F::Source: Clone,
    F::Target: Clone,
{
    require_strong(&functor)?;
    Ok(StrFunctor {
        source: Strictification::new(functor.source().clone()),
        target: Strictification::new(functor.target().clone()),
        functor,
    })
}

impl<F: MonoidalFunctor> StrFunctor<F> {
    pub fn functor(&self) -> &F {
        &self.functor
    }
}

impl<F: MonoidalFunctor> MonoidalFunctor for StrFunctor<F> {
    type Source = Strictification<F::Source>;
    type Target = Strictification<F::Target>;

    fn source(&self) -> &Self::Source {
        &self.source
    }
    fn target(&self) -> &Self::Target {
        &self.target
    }
    fn map_obj(&self, s: &StrObject<Obj<F::Source>>) -> Result<StrObject<Obj<F::Target>>> {
        Ok(StrObject::new(
            s.seq
                .iter()
                .map(|x| self.functor.map_obj(x))
                .collect::<Result<Vec<_>>>()?,
        ))
    }
    fn map_mor(&self, m: &StrMor<F::Source>) -> Result<StrMor<F::Target>> {
        Ok(StrMorphism {
            dom: self.map_obj(&m.dom)?,
            cod: self.map_obj(&m.cod)?,
            payload: transport(&self.functor, &m.dom.seq, &m.cod.seq, &m.payload)?,
        })
    }
    fn gamma(
        &self,
        s: &StrObject<Obj<F::Source>>,
        s2: &StrObject<Obj<F::Source>>,
    ) -> Result<StrMor<F::Target>> {
        self.target.identity(&self.map_obj(&s.concat(s2))?)
    }
    fn gamma_inv(
        &self,
        s: &StrObject<Obj<F::Source>>,
        s2: &StrObject<Obj<F::Source>>,
    ) -> Result<StrMor<F::Target>> {
        self.gamma(s, s2)
    }
    fn unit_map(&self) -> Result<StrMor<F::Target>> {
        self.target.identity(&StrObject::empty())
    }
    fn unit_map_inv(&self) -> Result<StrMor<F::Target>> {
        self.unit_map()
    }
    fn strength(&self) -> Strength {
        Strength::Strict
    }
}

/// `α^str: F^str ⇒ G^str` with payload the left-nested tensor of components.
pub struct StrNat<'a, A: MonoidalNat> {
    alpha: &'a A,
    from: StrFunctor<&'a A::From>,
    to: StrFunctor<&'a A::To>,
}

pub fn str_nat<A>(alpha: &A) -> Result<StrNat<'_, A>>
where
    A: MonoidalNat,
    Src<A::From>: Clone,
    Tgt<A::From>: Clone,
{
    Ok(StrNat {
        from: str_functor(alpha.from())?,
        to: str_functor(alpha.to())?,
        alpha,
    })
}

impl<'a, A: MonoidalNat> MonoidalNat for StrNat<'a, A> {
    type From = StrFunctor<&'a A::From>;
    type To = StrFunctor<&'a A::To>;

    fn from(&self) -> &Self::From {
        &self.from
    }
    fn to(&self) -> &Self::To {
        &self.to
    }
    fn component(
        &self,
        s: &StrObject<Obj<Src<A::From>>>,
    ) -> Result<StrMor<Tgt<A::From>>> {
        let parts = s
            .seq
            .iter()
            .map(|x| self.alpha.component(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(StrMorphism {
            dom: self.from.map_obj(s)?,
            cod: self.to.map_obj(s)?,
            payload: self.alpha.from().target().tensor_fold_mor(&parts)?,
        })
    }
}
