//! The monoidal category interface every model and construction implements.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{CatError, Result};

pub type Obj<C> = <C as MonoidalCategory>::Obj;
pub type Mor<C> = <C as MonoidalCategory>::Mor;

/// A monoidal category with decidable morphism equality.
///
/// Composition is written `compose(g, f)` for `g ∘ f`. Structural
/// isomorphisms come with explicitly stored inverses. Implementations are
/// read-only after construction.
pub trait MonoidalCategory {
    type Obj: Clone + Eq + Hash + Debug;
    type Mor: Clone + Debug;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Result<Self::Mor>;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool;

    fn unit(&self) -> Self::Obj;
    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Obj>;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    /// `(X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)`
    fn associator(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor>;
    fn associator_inv(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor>;
    /// `1 ⊗ X → X`
    fn lunitor(&self, x: &Self::Obj) -> Result<Self::Mor>;
    fn lunitor_inv(&self, x: &Self::Obj) -> Result<Self::Mor>;
    /// `X ⊗ 1 → X`
    fn runitor(&self, x: &Self::Obj) -> Result<Self::Mor>;
    fn runitor_inv(&self, x: &Self::Obj) -> Result<Self::Mor>;

    fn is_strict(&self) -> bool;

    /// Every object, for finite models.
    fn objects(&self) -> Option<Vec<Self::Obj>> {
        None
    }

    /// Every morphism, for finite models.
    fn morphisms(&self) -> Option<Vec<Self::Mor>> {
        None
    }

    /// The hom-set `X → Y` when it can be enumerated.
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Option<Vec<Self::Mor>> {
        let all = self.morphisms()?;
        Some(
            all.into_iter()
                .filter(|f| &self.dom(f) == x && &self.cod(f) == y)
                .collect(),
        )
    }

    fn obj_label(&self, x: &Self::Obj) -> String {
        format!("{x:?}")
    }

    fn mor_label(&self, f: &Self::Mor) -> String {
        format!("{f:?}")
    }

    /// Compose a path given in application order: `path[0]` first.
    fn compose_path(&self, path: &[Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = path
            .split_first()
            .ok_or_else(|| CatError::Precondition("empty composition path".into()))?;
        rest.iter()
            .try_fold(first.clone(), |acc, next| self.compose(next, &acc))
    }

    /// Left-nested tensor `(..(X1 ⊗ X2) ⊗ ..) ⊗ Xn`, unit for the empty list.
    fn tensor_fold_obj(&self, xs: &[Self::Obj]) -> Result<Self::Obj> {
        match xs.split_first() {
            None => Ok(self.unit()),
            Some((first, rest)) => rest
                .iter()
                .try_fold(first.clone(), |acc, x| self.tensor_obj(&acc, x)),
        }
    }

    /// Left-nested tensor of morphisms, identity on the unit for the empty list.
    fn tensor_fold_mor(&self, fs: &[Self::Mor]) -> Result<Self::Mor> {
        match fs.split_first() {
            None => self.identity(&self.unit()),
            Some((first, rest)) => rest
                .iter()
                .try_fold(first.clone(), |acc, f| self.tensor_mor(&acc, f)),
        }
    }

    /// `f ⊗ id_Y`
    fn whisker_right(&self, f: &Self::Mor, y: &Self::Obj) -> Result<Self::Mor> {
        self.tensor_mor(f, &self.identity(y)?)
    }

    /// `id_X ⊗ f`
    fn whisker_left(&self, x: &Self::Obj, f: &Self::Mor) -> Result<Self::Mor> {
        self.tensor_mor(&self.identity(x)?, f)
    }

    /// `f` equals the identity on its domain and has equal endpoints.
    fn is_identity(&self, f: &Self::Mor) -> Result<bool> {
        let d = self.dom(f);
        Ok(d == self.cod(f) && self.mor_eq(f, &self.identity(&d)?))
    }
}

impl<C: MonoidalCategory + ?Sized> MonoidalCategory for &C {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        (**self).dom(f)
    }
    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        (**self).cod(f)
    }
    fn identity(&self, x: &Self::Obj) -> Result<Self::Mor> {
        (**self).identity(x)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        (**self).compose(g, f)
    }
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        (**self).mor_eq(f, g)
    }
    fn unit(&self) -> Self::Obj {
        (**self).unit()
    }
    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Obj> {
        (**self).tensor_obj(x, y)
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        (**self).tensor_mor(f, g)
    }
    fn associator(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor> {
        (**self).associator(x, y, z)
    }
    fn associator_inv(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor> {
        (**self).associator_inv(x, y, z)
    }
    fn lunitor(&self, x: &Self::Obj) -> Result<Self::Mor> {
        (**self).lunitor(x)
    }
    fn lunitor_inv(&self, x: &Self::Obj) -> Result<Self::Mor> {
        (**self).lunitor_inv(x)
    }
    fn runitor(&self, x: &Self::Obj) -> Result<Self::Mor> {
        (**self).runitor(x)
    }
    fn runitor_inv(&self, x: &Self::Obj) -> Result<Self::Mor> {
        (**self).runitor_inv(x)
    }
    fn is_strict(&self) -> bool {
        (**self).is_strict()
    }
    fn objects(&self) -> Option<Vec<Self::Obj>> {
        (**self).objects()
    }
    fn morphisms(&self) -> Option<Vec<Self::Mor>> {
        (**self).morphisms()
    }
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Option<Vec<Self::Mor>> {
        (**self).hom(x, y)
    }
    fn obj_label(&self, x: &Self::Obj) -> String {
        (**self).obj_label(x)
    }
    fn mor_label(&self, f: &Self::Mor) -> String {
        (**self).mor_label(f)
    }
}
