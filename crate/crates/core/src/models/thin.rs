//! The free thin monoidal category on a set of generators.
//!
//! Objects are magma terms. There is exactly one morphism `v → w` when `v`
//! and `w` read the same word after forgetting parentheses, and none
//! otherwise. Every diagram of morphisms commutes, which makes this model a
//! brute-force coherence oracle: two composites built independently are
//! equal iff their endpoints are.

use std::fmt;

use crate::category::MonoidalCategory;
use crate::error::{CatError, Result};
use crate::terms::{Generator, MagmaTerm, Shape};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThinMor {
    dom: MagmaTerm,
    cod: MagmaTerm,
}

impl ThinMor {
    /// The unique morphism `dom → cod`, if it exists.
    pub fn between(dom: &MagmaTerm, cod: &MagmaTerm) -> Result<Self> {
        if dom.forget_parens() != cod.forget_parens() {
            return Err(CatError::Precondition(format!(
                "no morphism {dom} -> {cod} in the thin model"
            )));
        }
        Ok(ThinMor {
            dom: dom.clone(),
            cod: cod.clone(),
        })
    }

    pub fn dom(&self) -> &MagmaTerm {
        &self.dom
    }

    pub fn cod(&self) -> &MagmaTerm {
        &self.cod
    }
}

impl fmt::Debug for ThinMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.dom, self.cod)
    }
}

#[derive(Debug, Clone, Default)]
pub struct FreeThinModel;

impl FreeThinModel {
    pub fn new() -> Self {
        FreeThinModel
    }

    /// Every object whose underlying shape has at most `max_leaves` leaves,
    /// labelled by the single generator `•`. Includes the unit.
    pub fn shapes_up_to(max_leaves: usize) -> Vec<MagmaTerm> {
        Shape::all_up_to(max_leaves)
            .into_iter()
            .map(|s| s.as_term().clone())
            .collect()
    }

    /// Every object over `labels` (one fixed labelling per shape: leaves
    /// take the labels in order, cycling).
    pub fn labelled_up_to(max_leaves: usize, labels: &[Generator]) -> Result<Vec<MagmaTerm>> {
        Shape::all_up_to(max_leaves)
            .iter()
            .map(|s| {
                let word: Vec<Generator> = (0..s.leaf_count())
                    .map(|i| labels[i % labels.len()].clone())
                    .collect();
                MagmaTerm::from_shape(s, &word)
            })
            .collect()
    }

    /// All morphisms among `objects`.
    pub fn morphisms_among(objects: &[MagmaTerm]) -> Vec<ThinMor> {
        let mut out = Vec::new();
        for x in objects {
            for y in objects {
                if let Ok(m) = ThinMor::between(x, y) {
                    out.push(m);
                }
            }
        }
        out
    }
}

impl MonoidalCategory for FreeThinModel {
    type Obj = MagmaTerm;
    type Mor = ThinMor;

    fn dom(&self, f: &ThinMor) -> MagmaTerm {
        f.dom.clone()
    }
    fn cod(&self, f: &ThinMor) -> MagmaTerm {
        f.cod.clone()
    }
    fn identity(&self, x: &MagmaTerm) -> Result<ThinMor> {
        Ok(ThinMor {
            dom: x.clone(),
            cod: x.clone(),
        })
    }
    fn compose(&self, g: &ThinMor, f: &ThinMor) -> Result<ThinMor> {
        if f.cod != g.dom {
            return Err(CatError::NotComposable {
                g: format!("{g:?}"),
                f: format!("{f:?}"),
                cod: f.cod.to_string(),
                dom: g.dom.to_string(),
            });
        }
        Ok(ThinMor {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
        })
    }
    fn mor_eq(&self, f: &ThinMor, g: &ThinMor) -> bool {
        f == g
    }
    fn unit(&self) -> MagmaTerm {
        MagmaTerm::Unit
    }
    fn tensor_obj(&self, x: &MagmaTerm, y: &MagmaTerm) -> Result<MagmaTerm> {
        Ok(MagmaTerm::product(x, y))
    }
    fn tensor_mor(&self, f: &ThinMor, g: &ThinMor) -> Result<ThinMor> {
        Ok(ThinMor {
            dom: MagmaTerm::product(&f.dom, &g.dom),
            cod: MagmaTerm::product(&f.cod, &g.cod),
        })
    }
    fn associator(&self, x: &MagmaTerm, y: &MagmaTerm, z: &MagmaTerm) -> Result<ThinMor> {
        let xy = MagmaTerm::product(x, y);
        let yz = MagmaTerm::product(y, z);
        Ok(ThinMor {
            dom: MagmaTerm::product(&xy, z),
            cod: MagmaTerm::product(x, &yz),
        })
    }
    fn associator_inv(&self, x: &MagmaTerm, y: &MagmaTerm, z: &MagmaTerm) -> Result<ThinMor> {
        let a = self.associator(x, y, z)?;
        Ok(ThinMor {
            dom: a.cod,
            cod: a.dom,
        })
    }
    fn lunitor(&self, x: &MagmaTerm) -> Result<ThinMor> {
        self.identity(x)
    }
    fn lunitor_inv(&self, x: &MagmaTerm) -> Result<ThinMor> {
        self.identity(x)
    }
    fn runitor(&self, x: &MagmaTerm) -> Result<ThinMor> {
        self.identity(x)
    }
    fn runitor_inv(&self, x: &MagmaTerm) -> Result<ThinMor> {
        self.identity(x)
    }
    fn is_strict(&self) -> bool {
        false
    }
    fn hom(&self, x: &MagmaTerm, y: &MagmaTerm) -> Option<Vec<ThinMor>> {
        Some(ThinMor::between(x, y).into_iter().collect())
    }
    fn obj_label(&self, x: &MagmaTerm) -> String {
        x.to_string()
    }
    fn mor_label(&self, f: &ThinMor) -> String {
        format!("{f:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_sets_have_at_most_one_element() {
        let c = FreeThinModel::new();
        let objs = FreeThinModel::shapes_up_to(4);
        for x in &objs {
            for y in &objs {
                let hom = c.hom(x, y).unwrap();
                assert!(hom.len() <= 1);
                assert_eq!(hom.len() == 1, x.leaf_count() == y.leaf_count());
            }
        }
    }

    #[test]
    fn unit_is_absorbed() {
        let c = FreeThinModel::new();
        let x: MagmaTerm = "(a b)".parse().unwrap();
        assert_eq!(c.tensor_obj(&c.unit(), &x).unwrap(), x);
        assert_eq!(c.tensor_obj(&x, &c.unit()).unwrap(), x);
    }

    #[test]
    fn no_morphism_between_different_words() {
        let x: MagmaTerm = "(a b)".parse().unwrap();
        let y: MagmaTerm = "(b a)".parse().unwrap();
        assert!(ThinMor::between(&x, &y).is_err());
    }
}
