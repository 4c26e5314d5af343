//! The non-strictification `C_q`: pairs of a sequence and a parenthesisation
//! shape, with morphisms transported along the shape-directed
//! parenthesisation.
//!
//! The empty object `(∅, 1)` is a strict two-sided unit. When one factor of
//! a product is empty, `Par(o * o')` is `Par(o)` or `Par(o')` rather than
//! `Par(o) ⊗ Par(o')`, so products of arrows and the associator are corrected
//! by the unitors of `C` at empty factors. With all factors nonempty they are
//! the plain `f ⊗ g` and `a`.

mod functors;
mod realise;

use std::fmt;

use crate::category::MonoidalCategory;
use crate::error::{CatError, Result};
use crate::terms::Shape;

pub use functors::{
    beta_q, beta_q_inv, lift_nat_nonstrict, lift_nonstrict, lift_nonstrict_unchecked, q_functor,
    q_nat, EmbeddingQ, ParQ, QFunctor, QLift, QLiftNat, QNat,
};
pub use realise::{TildeQ, TildeQMor};

/// An object `(S, t)` of `C_q` with `|t| = |S|`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QObject<O> {
    seq: Vec<O>,
    shape: Shape,
}

impl<O: Clone> QObject<O> {
    pub fn new(seq: Vec<O>, shape: Shape) -> Result<Self> {
        if seq.len() != shape.leaf_count() {
            return Err(CatError::LengthMismatch {
                seq: seq.len(),
                leaves: shape.leaf_count(),
            });
        }
        Ok(QObject { seq, shape })
    }

    /// `(∅, 1)`
    pub fn empty() -> Self {
        QObject {
            seq: Vec::new(),
            shape: Shape::empty(),
        }
    }

    /// `((X), •)`
    pub fn single(x: O) -> Self {
        QObject {
            seq: vec![x],
            shape: Shape::bullet(),
        }
    }

    pub fn seq(&self) -> &[O] {
        &self.seq
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    /// `(S, t) * (S', t') = (S * S', t t')`, with `(∅, 1)` as strict unit.
    pub fn star(&self, other: &Self) -> Self {
        let mut seq = self.seq.clone();
        seq.extend(other.seq.iter().cloned());
        QObject {
            seq,
            shape: Shape::product(&self.shape, &other.shape),
        }
    }

    /// The unique `o1 * o2 = self` with both factors nonempty.
    pub fn split(&self) -> Result<(Self, Self)> {
        let (t1, t2) = self.shape.split()?;
        let (s1, s2) = self.seq.split_at(t1.leaf_count());
        Ok((
            QObject {
                seq: s1.to_vec(),
                shape: t1,
            },
            QObject {
                seq: s2.to_vec(),
                shape: t2,
            },
        ))
    }

    /// Every object with at most `max_leaves` entries drawn from `objects`.
    pub fn all_up_to(objects: &[O], max_leaves: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for shape in Shape::all_up_to(max_leaves) {
            let mut seqs: Vec<Vec<O>> = vec![Vec::new()];
            for _ in 0..shape.leaf_count() {
                seqs = seqs
                    .iter()
                    .flat_map(|s| {
                        objects.iter().map(move |x| {
                            let mut s = s.clone();
                            s.push(x.clone());
                            s
                        })
                    })
                    .collect();
            }
            out.extend(seqs.into_iter().map(|seq| QObject {
                seq,
                shape: shape.clone(),
            }));
        }
        out
    }
}

impl<O: fmt::Debug> fmt::Debug for QObject<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.seq, self.shape)
    }
}

/// Fold `items` along `shape`: `unit` for the empty shape, the item at a
/// leaf, `pair` at each binary node.
pub(crate) fn shape_fold<T: Clone>(
    shape: &Shape,
    items: &[T],
    unit: &dyn Fn() -> Result<T>,
    pair: &dyn Fn(&T, &T) -> Result<T>,
) -> Result<T> {
    match shape.leaf_count() {
        0 => unit(),
        1 => Ok(items[0].clone()),
        _ => {
            let (t1, t2) = shape.split()?;
            let (i1, i2) = items.split_at(t1.leaf_count());
            let l = shape_fold(&t1, i1, unit, pair)?;
            let r = shape_fold(&t2, i2, unit, pair)?;
            pair(&l, &r)
        }
    }
}

/// A morphism `o → o'` of `C_q`: a morphism `Par(o) → Par(o')` of `C`.
#[derive(Clone)]
pub struct QMorphism<O, M> {
    pub dom: QObject<O>,
    pub cod: QObject<O>,
    pub payload: M,
}

impl<O: fmt::Debug, M: fmt::Debug> fmt::Debug for QMorphism<O, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} : {:?}", self.dom, self.cod, self.payload)
    }
}

pub type QMor<C> = QMorphism<<C as MonoidalCategory>::Obj, <C as MonoidalCategory>::Mor>;
pub type QObj<C> = QObject<<C as MonoidalCategory>::Obj>;

/// `C_q` over an ambient model `C`.
#[derive(Debug, Clone)]
pub struct NonStrictification<C> {
    inner: C,
}

impl<C: MonoidalCategory> NonStrictification<C> {
    pub fn new(inner: C) -> Self {
        NonStrictification { inner }
    }

    pub fn inner(&self) -> &C {
        &self.inner
    }

    /// `Par(S, t)`: the entries of `S` placed at the leaves of `t`.
    pub fn par_q(&self, o: &QObj<C>) -> Result<C::Obj> {
        let c = &self.inner;
        shape_fold(&o.shape, &o.seq, &|| Ok(c.unit()), &|x, y| c.tensor_obj(x, y))
    }

    pub fn star_q_objects(&self, o: &QObj<C>, o2: &QObj<C>) -> QObj<C> {
        o.star(o2)
    }

    /// `Par(o) ⊗ Par(o') → Par(o * o')`: `ℓ` if `o` is empty, `r` if `o'` is,
    /// and the identity otherwise.
    pub fn theta_q(&self, o: &QObj<C>, o2: &QObj<C>) -> Result<C::Mor> {
        let c = &self.inner;
        if o.is_empty() {
            c.lunitor(&self.par_q(o2)?)
        } else if o2.is_empty() {
            c.runitor(&self.par_q(o)?)
        } else {
            c.identity(&c.tensor_obj(&self.par_q(o)?, &self.par_q(o2)?)?)
        }
    }

    pub fn theta_q_inv(&self, o: &QObj<C>, o2: &QObj<C>) -> Result<C::Mor> {
        let c = &self.inner;
        if o.is_empty() {
            c.lunitor_inv(&self.par_q(o2)?)
        } else if o2.is_empty() {
            c.runitor_inv(&self.par_q(o)?)
        } else {
            c.identity(&c.tensor_obj(&self.par_q(o)?, &self.par_q(o2)?)?)
        }
    }

    /// `f * g`: the payload `f ⊗ g`, corrected by unitors at empty factors.
    pub fn star_q_arrows(&self, f: &QMor<C>, g: &QMor<C>) -> Result<QMor<C>> {
        let c = &self.inner;
        let fg = c.tensor_mor(&f.payload, &g.payload)?;
        let payload = if f.dom.is_empty() || f.cod.is_empty() || g.dom.is_empty() || g.cod.is_empty()
        {
            c.compose_path(&[
                self.theta_q_inv(&f.dom, &g.dom)?,
                fg,
                self.theta_q(&f.cod, &g.cod)?,
            ])?
        } else {
            fg
        };
        Ok(QMorphism {
            dom: f.dom.star(&g.dom),
            cod: f.cod.star(&g.cod),
            payload,
        })
    }

    /// `a_q: (o * o') * o'' → o * (o' * o'')`, with payload the associator
    /// of `C` at `(Par o, Par o', Par o'')` when all three are nonempty.
    pub fn assoc_q(&self, o: &QObj<C>, o2: &QObj<C>, o3: &QObj<C>) -> Result<QMor<C>> {
        let c = &self.inner;
        let (p1, p2, p3) = (self.par_q(o)?, self.par_q(o2)?, self.par_q(o3)?);
        let a = c.associator(&p1, &p2, &p3)?;
        let payload = if o.is_empty() || o2.is_empty() || o3.is_empty() {
            c.compose_path(&[
                self.theta_q_inv(&o.star(o2), o3)?,
                c.whisker_right(&self.theta_q_inv(o, o2)?, &p3)?,
                a,
                c.whisker_left(&p1, &self.theta_q(o2, o3)?)?,
                self.theta_q(o, &o2.star(o3))?,
            ])?
        } else {
            a
        };
        Ok(QMorphism {
            dom: o.star(o2).star(o3),
            cod: o.star(&o2.star(o3)),
            payload,
        })
    }

    pub fn assoc_q_inv(&self, o: &QObj<C>, o2: &QObj<C>, o3: &QObj<C>) -> Result<QMor<C>> {
        let c = &self.inner;
        let (p1, p2, p3) = (self.par_q(o)?, self.par_q(o2)?, self.par_q(o3)?);
        let a = c.associator_inv(&p1, &p2, &p3)?;
        let payload = if o.is_empty() || o2.is_empty() || o3.is_empty() {
            c.compose_path(&[
                self.theta_q_inv(o, &o2.star(o3))?,
                c.whisker_left(&p1, &self.theta_q_inv(o2, o3)?)?,
                a,
                c.whisker_right(&self.theta_q(o, o2)?, &p3)?,
                self.theta_q(&o.star(o2), o3)?,
            ])?
        } else {
            a
        };
        Ok(QMorphism {
            dom: o.star(&o2.star(o3)),
            cod: o.star(o2).star(o3),
            payload,
        })
    }

    /// A morphism `o → o'` from a payload `Par(o) → Par(o')`, checking its
    /// endpoints.
    pub fn morphism(&self, dom: QObj<C>, cod: QObj<C>, payload: C::Mor) -> Result<QMor<C>> {
        let (pd, pc) = (self.par_q(&dom)?, self.par_q(&cod)?);
        if self.inner.dom(&payload) != pd || self.inner.cod(&payload) != pc {
            return Err(CatError::Precondition(format!(
                "payload {} does not go {} -> {}",
                self.inner.mor_label(&payload),
                self.inner.obj_label(&pd),
                self.inner.obj_label(&pc)
            )));
        }
        Ok(QMorphism { dom, cod, payload })
    }

    /// `j(X) = ((X), •)`
    pub fn embed_j(&self, x: &C::Obj) -> QObj<C> {
        QObject::single(x.clone())
    }

    pub fn embed_j_mor(&self, f: &C::Mor) -> QMor<C> {
        QMorphism {
            dom: QObject::single(self.inner.dom(f)),
            cod: QObject::single(self.inner.cod(f)),
            payload: f.clone(),
        }
    }

    /// `δ_o: o → ((Par o), •)` with identity payload.
    pub fn delta_q(&self, o: &QObj<C>) -> Result<QMor<C>> {
        let p = self.par_q(o)?;
        Ok(QMorphism {
            dom: o.clone(),
            cod: QObject::single(p.clone()),
            payload: self.inner.identity(&p)?,
        })
    }

    /// `η_{X,Y}: ((X, Y), ••) → ((X ⊗ Y), •)` with identity payload.
    pub fn eta_q(&self, x: &C::Obj, y: &C::Obj) -> Result<QMor<C>> {
        let xy = self.inner.tensor_obj(x, y)?;
        Ok(QMorphism {
            dom: QObject::single(x.clone()).star(&QObject::single(y.clone())),
            cod: QObject::single(xy.clone()),
            payload: self.inner.identity(&xy)?,
        })
    }

    /// `u: (∅, 1) → ((1), •)` with identity payload.
    pub fn unit_uq(&self) -> Result<QMor<C>> {
        let one = self.inner.unit();
        Ok(QMorphism {
            dom: QObject::empty(),
            cod: QObject::single(one.clone()),
            payload: self.inner.identity(&one)?,
        })
    }

    pub(crate) fn reversed_identity(&self, f: QMor<C>) -> QMor<C> {
        QMorphism {
            dom: f.cod,
            cod: f.dom,
            payload: f.payload,
        }
    }

    fn q_label(&self, o: &QObj<C>) -> String {
        if o.is_empty() {
            return "(∅, 1)".into();
        }
        let parts: Vec<String> = o.seq.iter().map(|x| self.inner.obj_label(x)).collect();
        format!("([{}], {})", parts.join(", "), o.shape)
    }
}

impl<C: MonoidalCategory> MonoidalCategory for NonStrictification<C> {
    type Obj = QObj<C>;
    type Mor = QMor<C>;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        f.dom.clone()
    }
    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        f.cod.clone()
    }
    fn identity(&self, o: &Self::Obj) -> Result<Self::Mor> {
        Ok(QMorphism {
            dom: o.clone(),
            cod: o.clone(),
            payload: self.inner.identity(&self.par_q(o)?)?,
        })
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        if f.cod != g.dom {
            return Err(CatError::NotComposable {
                g: self.mor_label(g),
                f: self.mor_label(f),
                cod: self.q_label(&f.cod),
                dom: self.q_label(&g.dom),
            });
        }
        Ok(QMorphism {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            payload: self.inner.compose(&g.payload, &f.payload)?,
        })
    }
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        f.dom == g.dom && f.cod == g.cod && self.inner.mor_eq(&f.payload, &g.payload)
    }
    fn unit(&self) -> Self::Obj {
        QObject::empty()
    }
    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Obj> {
        Ok(x.star(y))
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.star_q_arrows(f, g)
    }
    fn associator(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor> {
        self.assoc_q(x, y, z)
    }
    fn associator_inv(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor> {
        self.assoc_q_inv(x, y, z)
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
        false
    }
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Option<Vec<Self::Mor>> {
        let (px, py) = (self.par_q(x).ok()?, self.par_q(y).ok()?);
        let payloads = self.inner.hom(&px, &py)?;
        Some(
            payloads
                .into_iter()
                .map(|payload| QMorphism {
                    dom: x.clone(),
                    cod: y.clone(),
                    payload,
                })
                .collect(),
        )
    }
    fn obj_label(&self, x: &Self::Obj) -> String {
        self.q_label(x)
    }
    fn mor_label(&self, f: &Self::Mor) -> String {
        format!(
            "{} -> {} : {}",
            self.q_label(&f.dom),
            self.q_label(&f.cod),
            self.inner.mor_label(&f.payload)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{FreeThinModel, MatrixModCategory};
    use crate::terms::MagmaTerm;

    fn t(s: &str) -> MagmaTerm {
        s.parse().unwrap()
    }

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn par_q_follows_the_shape() {
        let c = NonStrictification::new(FreeThinModel::new());
        let xs: Vec<MagmaTerm> = ["x1", "x2", "x3", "x4", "x5"].iter().map(|s| t(s)).collect();
        let o = QObject::new(xs, shape("(((• •) •) (• •))")).unwrap();
        assert_eq!(c.par_q(&o).unwrap(), t("(((x1 x2) x3) (x4 x5))"));
        assert_eq!(c.par_q(&QObject::empty()).unwrap(), MagmaTerm::Unit);
        assert_eq!(c.par_q(&QObject::single(t("x"))).unwrap(), t("x"));
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let err = QObject::new(vec![t("x")], shape("(• •)")).unwrap_err();
        assert_eq!(err, CatError::LengthMismatch { seq: 1, leaves: 2 });
    }

    #[test]
    fn star_pairs_shapes_and_absorbs_the_unit() {
        let x = QObject::single(t("x"));
        let y = QObject::single(t("y"));
        let xy = x.star(&y);
        assert_eq!(xy.seq(), &[t("x"), t("y")]);
        assert_eq!(xy.shape(), &shape("(• •)"));
        assert_eq!(x.star(&QObject::empty()), x);
        assert_eq!(QObject::empty().star(&x), x);
    }

    #[test]
    fn associator_endpoints_differ_over_a_strict_model() {
        let c = NonStrictification::new(MatrixModCategory::default());
        let o = QObject::single(2usize);
        let a = c.assoc_q(&o, &o, &o).unwrap();
        assert_ne!(a.dom, a.cod);
        assert!(c.inner().is_identity(&a.payload).unwrap());
    }

    #[test]
    fn all_up_to_counts_objects() {
        // shapes: 1 + 1 + 1 + 2 with 1, 2, 4, 8 labellings
        assert_eq!(QObject::all_up_to(&[1, 2], 3).len(), 1 + 2 + 4 + 2 * 8);
    }
}
