//! The strictification `C^str`: finite sequences of objects of `C`, with
//! morphisms transported along the left-nested parenthesisation.

mod functors;
mod realise;

use std::fmt;

use crate::category::MonoidalCategory;
use crate::error::{CatError, Result};

pub use functors::{
    beta, beta_inv, lift_nat_strict, lift_strict, str_functor, str_nat, Embedding, ParFunctor,
    StrFunctor, StrNat, StrictLift, StrictLiftNat,
};
pub use realise::{SeqFunctor, TildeMor, TildeStr};

/// An object of `C^str`: a finite, possibly empty, sequence of objects of `C`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StrObject<O> {
    pub seq: Vec<O>,
}

impl<O: Clone> StrObject<O> {
    pub fn new(seq: Vec<O>) -> Self {
        StrObject { seq }
    }

    pub fn empty() -> Self {
        StrObject { seq: Vec::new() }
    }

    pub fn single(x: O) -> Self {
        StrObject { seq: vec![x] }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// `S * S'`
    pub fn concat(&self, other: &Self) -> Self {
        let mut seq = self.seq.clone();
        seq.extend(other.seq.iter().cloned());
        StrObject { seq }
    }

    /// Every sequence of length at most `max_len` over `objects`, shortest
    /// first.
    pub fn all_up_to(objects: &[O], max_len: usize) -> Vec<Self> {
        let mut out = vec![Self::empty()];
        let mut layer = vec![Self::empty()];
        for _ in 0..max_len {
            let next: Vec<Self> = layer
                .iter()
                .flat_map(|s| objects.iter().map(move |x| s.concat(&Self::single(x.clone()))))
                .collect();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl<O: fmt::Debug> fmt::Debug for StrObject<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.seq).finish()
    }
}

/// A morphism `S → S'` of `C^str`: a morphism `Par(S) → Par(S')` of `C`.
#[derive(Clone)]
pub struct StrMorphism<O, M> {
    pub dom: StrObject<O>,
    pub cod: StrObject<O>,
    pub payload: M,
}

impl<O: fmt::Debug, M: fmt::Debug> fmt::Debug for StrMorphism<O, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} : {:?}", self.dom, self.cod, self.payload)
    }
}

/// `C^str` over an ambient model `C`.
#[derive(Debug, Clone)]
pub struct Strictification<C> {
    inner: C,
}

pub type StrMor<C> = StrMorphism<<C as MonoidalCategory>::Obj, <C as MonoidalCategory>::Mor>;

impl<C: MonoidalCategory> Strictification<C> {
    pub fn new(inner: C) -> Self {
        Strictification { inner }
    }

    pub fn inner(&self) -> &C {
        &self.inner
    }

    /// `Par(S) = (..(X1 ⊗ X2) ⊗ ..) ⊗ Xn`, and `Par(∅) = 1`.
    pub fn par_seq(&self, s: &StrObject<C::Obj>) -> Result<C::Obj> {
        self.inner.tensor_fold_obj(&s.seq)
    }

    /// `θ_{S,S'}: Par(S) ⊗ Par(S') → Par(S * S')`, by induction on `S'`
    /// from the right. The `S = ∅` case takes precedence, so `θ_{∅,∅} = ℓ_1`.
    pub fn theta(&self, s: &StrObject<C::Obj>, s2: &StrObject<C::Obj>) -> Result<C::Mor> {
        let c = &self.inner;
        if s.is_empty() {
            return c.lunitor(&self.par_seq(s2)?);
        }
        let ps = self.par_seq(s)?;
        match s2.seq.split_last() {
            None => c.runitor(&ps),
            Some((x, [])) => c.identity(&c.tensor_obj(&ps, x)?),
            Some((x, rest)) => {
                let bar = StrObject::new(rest.to_vec());
                let inner = self.theta(s, &bar)?;
                let a = c.associator_inv(&ps, &self.par_seq(&bar)?, x)?;
                c.compose(&c.whisker_right(&inner, x)?, &a)
            }
        }
    }

    /// `θ⁻¹_{S,S'}`, mirroring the recursion of `theta`.
    pub fn theta_inv(&self, s: &StrObject<C::Obj>, s2: &StrObject<C::Obj>) -> Result<C::Mor> {
        let c = &self.inner;
        if s.is_empty() {
            return c.lunitor_inv(&self.par_seq(s2)?);
        }
        let ps = self.par_seq(s)?;
        match s2.seq.split_last() {
            None => c.runitor_inv(&ps),
            Some((x, [])) => c.identity(&c.tensor_obj(&ps, x)?),
            Some((x, rest)) => {
                let bar = StrObject::new(rest.to_vec());
                let inner = self.theta_inv(s, &bar)?;
                let a = c.associator(&ps, &self.par_seq(&bar)?, x)?;
                c.compose(&a, &c.whisker_right(&inner, x)?)
            }
        }
    }

    pub fn star_objects(&self, s: &StrObject<C::Obj>, s2: &StrObject<C::Obj>) -> StrObject<C::Obj> {
        s.concat(s2)
    }

    /// `f * g` with payload `θ_{S2,S2'} ∘ (f ⊗ g) ∘ θ⁻¹_{S1,S1'}`.
    pub fn star_arrows(&self, f: &StrMor<C>, g: &StrMor<C>) -> Result<StrMor<C>> {
        let c = &self.inner;
        let payload = c.compose_path(&[
            self.theta_inv(&f.dom, &g.dom)?,
            c.tensor_mor(&f.payload, &g.payload)?,
            self.theta(&f.cod, &g.cod)?,
        ])?;
        Ok(StrMorphism {
            dom: f.dom.concat(&g.dom),
            cod: f.cod.concat(&g.cod),
            payload,
        })
    }

    /// A morphism `S → S'` from a payload `Par(S) → Par(S')`, checking the
    /// payload's endpoints.
    pub fn morphism(
        &self,
        dom: StrObject<C::Obj>,
        cod: StrObject<C::Obj>,
        payload: C::Mor,
    ) -> Result<StrMor<C>> {
        let (pd, pc) = (self.par_seq(&dom)?, self.par_seq(&cod)?);
        if self.inner.dom(&payload) != pd || self.inner.cod(&payload) != pc {
            return Err(CatError::Precondition(format!(
                "payload {} does not go {} -> {}",
                self.inner.mor_label(&payload),
                self.inner.obj_label(&pd),
                self.inner.obj_label(&pc)
            )));
        }
        Ok(StrMorphism { dom, cod, payload })
    }

    /// `i(X) = (X)`
    pub fn embed_i(&self, x: &C::Obj) -> StrObject<C::Obj> {
        StrObject::single(x.clone())
    }

    pub fn embed_i_mor(&self, f: &C::Mor) -> StrMor<C> {
        StrMorphism {
            dom: StrObject::single(self.inner.dom(f)),
            cod: StrObject::single(self.inner.cod(f)),
            payload: f.clone(),
        }
    }

    /// `δ_S: S → (Par S)` with identity payload.
    pub fn delta(&self, s: &StrObject<C::Obj>) -> Result<StrMor<C>> {
        let p = self.par_seq(s)?;
        Ok(StrMorphism {
            dom: s.clone(),
            cod: StrObject::single(p.clone()),
            payload: self.inner.identity(&p)?,
        })
    }

    /// `η_{X,Y}: (X, Y) → (X ⊗ Y)` with identity payload.
    pub fn eta(&self, x: &C::Obj, y: &C::Obj) -> Result<StrMor<C>> {
        let xy = self.inner.tensor_obj(x, y)?;
        Ok(StrMorphism {
            dom: StrObject::new(vec![x.clone(), y.clone()]),
            cod: StrObject::single(xy.clone()),
            payload: self.inner.identity(&xy)?,
        })
    }

    /// `u: ∅ → (1)` with identity payload.
    pub fn unit_u(&self) -> Result<StrMor<C>> {
        let one = self.inner.unit();
        Ok(StrMorphism {
            dom: StrObject::empty(),
            cod: StrObject::single(one.clone()),
            payload: self.inner.identity(&one)?,
        })
    }

    /// Swap the endpoints of a morphism whose payload is an identity.
    pub(crate) fn reversed_identity(&self, f: StrMor<C>) -> StrMor<C> {
        StrMorphism {
            dom: f.cod,
            cod: f.dom,
            payload: f.payload,
        }
    }

    fn seq_label(&self, s: &StrObject<C::Obj>) -> String {
        if s.is_empty() {
            return "∅".into();
        }
        let parts: Vec<String> = s.seq.iter().map(|x| self.inner.obj_label(x)).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl<C: MonoidalCategory> MonoidalCategory for Strictification<C> {
    type Obj = StrObject<C::Obj>;
    type Mor = StrMor<C>;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        f.dom.clone()
    }
    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        f.cod.clone()
    }
    fn identity(&self, s: &Self::Obj) -> Result<Self::Mor> {
        Ok(StrMorphism {
            dom: s.clone(),
            cod: s.clone(),
            payload: self.inner.identity(&self.par_seq(s)?)?,
        })
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        if f.cod != g.dom {
            return Err(CatError::NotComposable {
                g: self.mor_label(g),
                f: self.mor_label(f),
                cod: self.seq_label(&f.cod),
                dom: self.seq_label(&g.dom),
            });
        }
        Ok(StrMorphism {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            payload: self.inner.compose(&g.payload, &f.payload)?,
        })
    }
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        f.dom == g.dom && f.cod == g.cod && self.inner.mor_eq(&f.payload, &g.payload)
    }
    fn unit(&self) -> Self::Obj {
        StrObject::empty()
    }
    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Obj> {
        Ok(x.concat(y))
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.star_arrows(f, g)
    }
    fn associator(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor> {
        self.identity(&x.concat(y).concat(z))
    }
    fn associator_inv(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor> {
        self.identity(&x.concat(y).concat(z))
    }
    fn lunitor(&self, x: &Self::Obj) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn lunitor_inv(&self, x: &Self::Obj) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn runitor(&self, x: &Self::Obj) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn runitor_inv(&self, x: &Self::Obj) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn is_strict(&self) -> bool {
        true
    }
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Option<Vec<Self::Mor>> {
        let (px, py) = (self.par_seq(x).ok()?, self.par_seq(y).ok()?);
        let payloads = self.inner.hom(&px, &py)?;
        Some(
            payloads
                .into_iter()
                .map(|payload| StrMorphism {
                    dom: x.clone(),
                    cod: y.clone(),
                    payload,
                })
                .collect(),
        )
    }
    fn obj_label(&self, x: &Self::Obj) -> String {
        self.seq_label(x)
    }
    fn mor_label(&self, f: &Self::Mor) -> String {
        format!(
            "{} -> {} : {}",
            self.seq_label(&f.dom),
            self.seq_label(&f.cod),
            self.inner.mor_label(&f.payload)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{FreeThinModel, ThinMor};
    use crate::terms::MagmaTerm;
    use crate::trace::Traced;

    fn t(s: &str) -> MagmaTerm {
        s.parse().unwrap()
    }

    fn seq(items: &[&str]) -> StrObject<MagmaTerm> {
        StrObject::new(items.iter().map(|s| t(s)).collect())
    }

    #[test]
    fn par_of_sequences() {
        let c = Strictification::new(FreeThinModel::new());
        assert_eq!(c.par_seq(&seq(&[])).unwrap(), MagmaTerm::Unit);
        assert_eq!(c.par_seq(&seq(&["x"])).unwrap(), t("x"));
        assert_eq!(c.par_seq(&seq(&["x", "y", "z"])).unwrap(), t("((x y) z)"));
    }

    #[test]
    fn theta_on_two_pairs_is_the_thin_morphism() {
        let c = Strictification::new(FreeThinModel::new());
        let s = seq(&["•", "•"]);
        let th = c.theta(&s, &s).unwrap();
        let expected = ThinMor::between(&t("((• •) (• •))"), &t("(((• •) •) •)")).unwrap();
        assert_eq!(th, expected);
    }

    #[test]
    fn theta_base_cases_are_traced() {
        let c = Strictification::new(Traced::new(FreeThinModel::new()));
        let tr = c.inner();
        assert_eq!(tr.render(&c.theta(&seq(&[]), &seq(&["x", "y"])).unwrap()), vec!["ℓ[(x y)]"]);
        assert_eq!(tr.render(&c.theta(&seq(&["x"]), &seq(&[])).unwrap()), vec!["r[x]"]);
        assert!(c.theta(&seq(&["x"]), &seq(&["y"])).unwrap().trace.is_empty());
        assert_eq!(
            tr.render(&c.theta(&seq(&["x"]), &seq(&["y", "z"])).unwrap()),
            vec!["a⁻¹[x,y,z]"]
        );
    }

    #[test]
    fn star_objects_is_concatenation() {
        let c = Strictification::new(FreeThinModel::new());
        let (x, y, z) = (seq(&["x"]), seq(&["y"]), seq(&["z"]));
        assert_eq!(c.star_objects(&x, &y), seq(&["x", "y"]));
        assert_eq!(c.star_objects(&x, &c.unit()), x);
        assert_eq!(
            c.star_objects(&c.star_objects(&x, &y), &z),
            c.star_objects(&x, &c.star_objects(&y, &z))
        );
    }

    #[test]
    fn all_up_to_counts() {
        let objs = vec![1, 2, 3];
        assert_eq!(StrObject::all_up_to(&objs, 2).len(), 1 + 3 + 9);
    }
}
