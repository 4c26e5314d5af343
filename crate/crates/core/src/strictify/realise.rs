//! The strictification of a category whose objects are magma terms and whose
//! tensor is the magma product, realised on words.

use std::fmt;

use crate::category::MonoidalCategory;
use crate::error::{CatError, Result};
use crate::functor::{MonoidalFunctor, Strength};
use crate::terms::{MagmaTerm, Word};

use super::{StrMor, StrMorphism, StrObject, Strictification};

/// A morphism `w → w'` of the realisation: a morphism
/// `Par(Seq w) → Par(Seq w')` of the ambient category.
#[derive(Clone)]
pub struct TildeMor<M> {
    pub dom: Word,
    pub cod: Word,
    pub payload: M,
}

impl<M: fmt::Debug> fmt::Debug for TildeMor<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} : {:?}", self.dom, self.cod, self.payload)
    }
}

/// The strict category on words with `hom(w, w') = hom_{C^str}(Seq w, Seq w')`.
#[derive(Debug, Clone)]
pub struct TildeStr<C> {
    strict: Strictification<C>,
}

impl<C: MonoidalCategory<Obj = MagmaTerm>> TildeStr<C> {
    /// Checks on a few sample terms that the tensor is the magma product.
    pub fn new(c: C) -> Result<Self> {
        let x = MagmaTerm::leaf("x");
        let y = MagmaTerm::leaf("y");
        let samples = [
            (x.clone(), y.clone()),
            (MagmaTerm::Unit, x.clone()),
            (x.clone(), MagmaTerm::Unit),
        ];
        for (a, b) in &samples {
            if c.tensor_obj(a, b)? != MagmaTerm::product(a, b) {
                return Err(CatError::Precondition(
                    "tensor on objects is not the magma product".into(),
                ));
            }
        }
        if c.unit() != MagmaTerm::Unit {
            return Err(CatError::Precondition("unit is not the empty term".into()));
        }
        Ok(TildeStr {
            strict: Strictification::new(c),
        })
    }

    pub fn strictification(&self) -> &Strictification<C> {
        &self.strict
    }

    /// `Seq(x1 .. xn) = (x1, .., xn)`
    pub fn seq(&self, w: &Word) -> StrObject<MagmaTerm> {
        StrObject::new(
            w.letters()
                .iter()
                .map(|g| MagmaTerm::Leaf(g.clone()))
                .collect(),
        )
    }

    pub fn seq_mor(&self, f: &TildeMor<C::Mor>) -> StrMor<C> {
        StrMorphism {
            dom: self.seq(&f.dom),
            cod: self.seq(&f.cod),
            payload: f.payload.clone(),
        }
    }

    /// `ρ_v: v → Par(Seq(U v))`: identities on the empty term and on leaves,
    /// `θ ∘ (ρ_{v1} ⊗ ρ_{v2})` for `v = v1 v2`.
    pub fn rho(&self, v: &MagmaTerm) -> Result<C::Mor> {
        let c = self.strict.inner();
        match v {
            MagmaTerm::Unit | MagmaTerm::Leaf(_) => c.identity(v),
            MagmaTerm::Pair(v1, v2) => {
                let both = c.tensor_mor(&self.rho(v1)?, &self.rho(v2)?)?;
                let th = self.strict.theta(
                    &self.seq(&v1.forget_parens()),
                    &self.seq(&v2.forget_parens()),
                )?;
                c.compose(&th, &both)
            }
        }
    }

    /// `ρ_v⁻¹`
    pub fn rho_inv(&self, v: &MagmaTerm) -> Result<C::Mor> {
        let c = self.strict.inner();
        match v {
            MagmaTerm::Unit | MagmaTerm::Leaf(_) => c.identity(v),
            MagmaTerm::Pair(v1, v2) => {
                let both = c.tensor_mor(&self.rho_inv(v1)?, &self.rho_inv(v2)?)?;
                let th = self.strict.theta_inv(
                    &self.seq(&v1.forget_parens()),
                    &self.seq(&v2.forget_parens()),
                )?;
                c.compose(&both, &th)
            }
        }
    }

    /// The isomorphism `S → Seq(U(v1) .. U(vn))` in `C^str` witnessing that
    /// `Seq` is essentially surjective; its payload is `ρ_{Par S}`.
    pub fn essential_witness(&self, s: &StrObject<MagmaTerm>) -> Result<StrMor<C>> {
        let p = self.strict.par_seq(s)?;
        Ok(StrMorphism {
            dom: s.clone(),
            cod: self.seq(&p.forget_parens()),
            payload: self.rho(&p)?,
        })
    }

    fn lift(&self, f: StrMor<C>) -> TildeMor<C::Mor> {
        TildeMor {
            dom: self.word_of(&f.dom),
            cod: self.word_of(&f.cod),
            payload: f.payload,
        }
    }

    fn word_of(&self, s: &StrObject<MagmaTerm>) -> Word {
        s.seq
            .iter()
            .fold(Word::empty(), |acc, v| acc.concat(&v.forget_parens()))
    }
}

impl<C: MonoidalCategory<Obj = MagmaTerm>> MonoidalCategory for TildeStr<C> {
    type Obj = Word;
    type Mor = TildeMor<C::Mor>;

    fn dom(&self, f: &Self::Mor) -> Word {
        f.dom.clone()
    }
    fn cod(&self, f: &Self::Mor) -> Word {
        f.cod.clone()
    }
    fn identity(&self, w: &Word) -> Result<Self::Mor> {
        Ok(self.lift(self.strict.identity(&self.seq(w))?))
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        Ok(self.lift(self.strict.compose(&self.seq_mor(g), &self.seq_mor(f))?))
    }
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        f.dom == g.dom && f.cod == g.cod && self.strict.inner().mor_eq(&f.payload, &g.payload)
    }
    fn unit(&self) -> Word {
        Word::empty()
    }
    fn tensor_obj(&self, x: &Word, y: &Word) -> Result<Word> {
        Ok(x.concat(y))
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok(self.lift(self.strict.star_arrows(&self.seq_mor(f), &self.seq_mor(g))?))
    }
    fn associator(&self, x: &Word, y: &Word, z: &Word) -> Result<Self::Mor> {
        self.identity(&x.concat(y).concat(z))
    }
    fn associator_inv(&self, x: &Word, y: &Word, z: &Word) -> Result<Self::Mor> {
        self.identity(&x.concat(y).concat(z))
    }
    fn lunitor(&self, x: &Word) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn lunitor_inv(&self, x: &Word) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn runitor(&self, x: &Word) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn runitor_inv(&self, x: &Word) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn is_strict(&self) -> bool {
        true
    }
    fn hom(&self, x: &Word, y: &Word) -> Option<Vec<Self::Mor>> {
        let homs = self.strict.hom(&self.seq(x), &self.seq(y))?;
        Some(homs.into_iter().map(|f| self.lift(f)).collect())
    }
    fn obj_label(&self, x: &Word) -> String {
        x.to_string()
    }
    fn mor_label(&self, f: &Self::Mor) -> String {
        format!(
            "{} -> {} : {}",
            f.dom,
            f.cod,
            self.strict.inner().mor_label(&f.payload)
        )
    }
}

/// `Seq`: the realisation on words → `C^str`, strict.
#[derive(Debug, Clone)]
pub struct SeqFunctor<C> {
    source: TildeStr<C>,
}

impl<C: MonoidalCategory<Obj = MagmaTerm>> SeqFunctor<C> {
    pub fn new(source: TildeStr<C>) -> Self {
        SeqFunctor { source }
    }
}

impl<C: MonoidalCategory<Obj = MagmaTerm>> MonoidalFunctor for SeqFunctor<C> {
    type Source = TildeStr<C>;
    type Target = Strictification<C>;

    fn source(&self) -> &TildeStr<C> {
        &self.source
    }
    fn target(&self) -> &Strictification<C> {
        &self.source.strict
    }
    fn map_obj(&self, w: &Word) -> Result<StrObject<MagmaTerm>> {
        Ok(self.source.seq(w))
    }
    fn map_mor(&self, f: &TildeMor<C::Mor>) -> Result<StrMor<C>> {
        Ok(self.source.seq_mor(f))
    }
    fn gamma(&self, x: &Word, y: &Word) -> Result<StrMor<C>> {
        self.target().identity(&self.source.seq(&x.concat(y)))
    }
    fn gamma_inv(&self, x: &Word, y: &Word) -> Result<StrMor<C>> {
        self.gamma(x, y)
    }
    fn unit_map(&self) -> Result<StrMor<C>> {
        self.target().identity(&StrObject::empty())
    }
    fn unit_map_inv(&self) -> Result<StrMor<C>> {
        self.unit_map()
    }
    fn strength(&self) -> Strength {
        Strength::Strict
    }
}
