//! The non-strictification of a category whose objects are words and whose
//! tensor is concatenation, realised on magma terms.

use std::fmt;

use crate::category::MonoidalCategory;
use crate::error::{CatError, Result};
use crate::terms::{MagmaTerm, Word};

use super::{NonStrictification, QMor, QMorphism, QObject};

/// A morphism `v → v'` of the realisation: a morphism
/// `Par_q(Seq_q v) → Par_q(Seq_q v')` of the ambient category.
#[derive(Clone)]
pub struct TildeQMor<M> {
    pub dom: MagmaTerm,
    pub cod: MagmaTerm,
    pub payload: M,
}

impl<M: fmt::Debug> fmt::Debug for TildeQMor<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} : {:?}", self.dom, self.cod, self.payload)
    }
}

/// The category on magma terms with `hom(v, v') = hom_{C_q}(Seq_q v, Seq_q v')`.
#[derive(Debug, Clone)]
pub struct TildeQ<C> {
    q: NonStrictification<C>,
}

impl<C: MonoidalCategory<Obj = Word>> TildeQ<C> {
    /// Checks on a few sample words that the tensor is concatenation.
    pub fn new(c: C) -> Result<Self> {
        let x = Word::from_letters(["x"]);
        let yz = Word::from_letters(["y", "z"]);
        for (a, b) in [(&x, &yz), (&yz, &x), (&Word::empty(), &x)] {
            if c.tensor_obj(a, b)? != a.concat(b) {
                return Err(CatError::Precondition(
                    "tensor on objects is not concatenation".into(),
                ));
            }
        }
        if c.unit() != Word::empty() {
            return Err(CatError::Precondition("unit is not the empty word".into()));
        }
        Ok(TildeQ {
            q: NonStrictification::new(c),
        })
    }

    pub fn nonstrictification(&self) -> &NonStrictification<C> {
        &self.q
    }

    /// `Seq_q(v) = ((x1), .., (xn); shape of v)`
    pub fn seq_q(&self, v: &MagmaTerm) -> QObject<Word> {
        let letters = v
            .forget_parens()
            .letters()
            .iter()
            .map(|g| Word(vec![g.clone()]))
            .collect();
        QObject {
            seq: letters,
            shape: v.collapse(),
        }
    }

    pub fn seq_q_mor(&self, f: &TildeQMor<C::Mor>) -> QMor<C> {
        QMorphism {
            dom: self.seq_q(&f.dom),
            cod: self.seq_q(&f.cod),
            payload: f.payload.clone(),
        }
    }

    /// The term with the same shape and the concatenated letters, when every
    /// entry of `o` is a single letter.
    pub fn term_of(&self, o: &QObject<Word>) -> Option<MagmaTerm> {
        let labels = o
            .seq()
            .iter()
            .map(|w| match w.letters() {
                [g] => Some(g.clone()),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        MagmaTerm::from_shape(o.shape(), &labels).ok()
    }

    /// An isomorphism `o → Seq_q(v)` in `C_q` with identity payload, where
    /// `v` is the left comb on the concatenation of the entries of `o`.
    /// Fails if the parenthesisations of the two sides differ.
    pub fn essential_witness(&self, o: &QObject<Word>) -> Result<QMor<C>> {
        let word = o.seq().iter().fold(Word::empty(), |acc, w| acc.concat(w));
        let target = self.seq_q(&MagmaTerm::left_comb_of(&word));
        let (p, p2) = (self.q.par_q(o)?, self.q.par_q(&target)?);
        if p != p2 {
            return Err(CatError::Precondition(format!(
                "Par_q differs: {p} vs {p2}"
            )));
        }
        self.q.morphism(o.clone(), target, self.q.inner().identity(&p)?)
    }

    fn lift(&self, f: QMor<C>) -> Result<TildeQMor<C::Mor>> {
        let missing = || CatError::Precondition("entry is not a single letter".into());
        Ok(TildeQMor {
            dom: self.term_of(&f.dom).ok_or_else(missing)?,
            cod: self.term_of(&f.cod).ok_or_else(missing)?,
            payload: f.payload,
        })
    }
}

impl<C: MonoidalCategory<Obj = Word>> MonoidalCategory for TildeQ<C> {
    type Obj = MagmaTerm;
    type Mor = TildeQMor<C::Mor>;

    fn dom(&self, f: &Self::Mor) -> MagmaTerm {
        f.dom.clone()
    }
    fn cod(&self, f: &Self::Mor) -> MagmaTerm {
        f.cod.clone()
    }
    fn identity(&self, v: &MagmaTerm) -> Result<Self::Mor> {
        self.lift(self.q.identity(&self.seq_q(v))?)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        self.lift(self.q.compose(&self.seq_q_mor(g), &self.seq_q_mor(f))?)
    }
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        f.dom == g.dom && f.cod == g.cod && self.q.inner().mor_eq(&f.payload, &g.payload)
    }
    fn unit(&self) -> MagmaTerm {
        MagmaTerm::Unit
    }
    fn tensor_obj(&self, x: &MagmaTerm, y: &MagmaTerm) -> Result<MagmaTerm> {
        Ok(MagmaTerm::product(x, y))
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.lift(self.q.star_q_arrows(&self.seq_q_mor(f), &self.seq_q_mor(g))?)
    }
    fn associator(&self, x: &MagmaTerm, y: &MagmaTerm, z: &MagmaTerm) -> Result<Self::Mor> {
        self.lift(self.q.assoc_q(&self.seq_q(x), &self.seq_q(y), &self.seq_q(z))?)
    }
    fn associator_inv(&self, x: &MagmaTerm, y: &MagmaTerm, z: &MagmaTerm) -> Result<Self::Mor> {
        self.lift(
            self.q
                .assoc_q_inv(&self.seq_q(x), &self.seq_q(y), &self.seq_q(z))?,
        )
    }
    fn lunitor(&self, x: &MagmaTerm) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn lunitor_inv(&self, x: &MagmaTerm) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn runitor(&self, x: &MagmaTerm) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn runitor_inv(&self, x: &MagmaTerm) -> Result<Self::Mor> {
        self.identity(x)
    }
    fn is_strict(&self) -> bool {
        false
    }
    fn hom(&self, x: &MagmaTerm, y: &MagmaTerm) -> Option<Vec<Self::Mor>> {
        let homs = self.q.hom(&self.seq_q(x), &self.seq_q(y))?;
        homs.into_iter().map(|f| self.lift(f).ok()).collect()
    }
    fn obj_label(&self, x: &MagmaTerm) -> String {
        x.to_string()
    }
    fn mor_label(&self, f: &Self::Mor) -> String {
        format!(
            "{} -> {} : {}",
            f.dom,
            f.cod,
            self.q.inner().mor_label(&f.payload)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::FreeThinModel;
    use crate::strictify::TildeStr;

    fn realisation() -> TildeQ<TildeStr<FreeThinModel>> {
        TildeQ::new(TildeStr::new(FreeThinModel::new()).unwrap()).unwrap()
    }

    #[test]
    fn seq_q_keeps_the_shape() {
        let r = realisation();
        let v: MagmaTerm = "((x y) z)".parse().unwrap();
        let o = r.seq_q(&v);
        assert_eq!(o.len(), 3);
        assert_eq!(o.shape().to_string(), "((• •) •)");
        assert_eq!(r.term_of(&o), Some(v));
    }

    #[test]
    fn essential_witness_exists_for_multi_letter_entries() {
        let r = realisation();
        let o = QObject::new(
            vec![Word::from_letters(["x", "y"]), Word::from_letters(["z"])],
            "(• •)".parse().unwrap(),
        )
        .unwrap();
        let w = r.essential_witness(&o).unwrap();
        assert_eq!(w.cod, r.seq_q(&"((x y) z)".parse().unwrap()));
    }
}
