//! A wrapper model that records, next to each morphism, the list of
//! structural factors it was built from.
//!
//! Traces are symbolic: they name associator and unitor components by their
//! object arguments, so the same construction yields the same trace over any
//! model. Replaying a trace in the underlying model reproduces the payload.

use std::fmt::Debug;

use crate::category::MonoidalCategory;
use crate::error::{CatError, Result};
use crate::models::{FreeThinModel, ThinMor};
use crate::strictify::TildeStr;
use crate::terms::MagmaTerm;

/// One factor of a composite.
#[derive(Debug, Clone)]
pub enum Factor<O, M> {
    Assoc(O, O, O),
    AssocInv(O, O, O),
    LUnit(O),
    LUnitInv(O),
    RUnit(O),
    RUnitInv(O),
    /// A non-structural morphism of the underlying model.
    Arrow(M),
    /// `φ ⊗ id_O`
    TensorRight(Box<Factor<O, M>>, O),
    /// `id_O ⊗ φ`
    TensorLeft(O, Box<Factor<O, M>>),
}

impl<O: Clone + PartialEq, M: Clone> Factor<O, M> {
    /// The inverse factor; arrows have none.
    pub fn inverse(&self) -> Option<Self> {
        use Factor::*;
        Some(match self {
            Assoc(x, y, z) => AssocInv(x.clone(), y.clone(), z.clone()),
            AssocInv(x, y, z) => Assoc(x.clone(), y.clone(), z.clone()),
            LUnit(x) => LUnitInv(x.clone()),
            LUnitInv(x) => LUnit(x.clone()),
            RUnit(x) => RUnitInv(x.clone()),
            RUnitInv(x) => RUnit(x.clone()),
            Arrow(_) => return None,
            TensorRight(f, o) => TensorRight(Box::new(f.inverse()?), o.clone()),
            TensorLeft(o, f) => TensorLeft(o.clone(), Box::new(f.inverse()?)),
        })
    }

    /// Structural equality; arrows never compare equal.
    pub fn same_as(&self, other: &Self) -> bool {
        use Factor::*;
        match (self, other) {
            (Assoc(a, b, c), Assoc(x, y, z)) | (AssocInv(a, b, c), AssocInv(x, y, z)) => {
                a == x && b == y && c == z
            }
            (LUnit(a), LUnit(x))
            | (LUnitInv(a), LUnitInv(x))
            | (RUnit(a), RUnit(x))
            | (RUnitInv(a), RUnitInv(x)) => a == x,
            (TensorRight(f, a), TensorRight(g, x)) => a == x && f.same_as(g),
            (TensorLeft(a, f), TensorLeft(x, g)) => a == x && f.same_as(g),
            _ => false,
        }
    }

    fn cancels(&self, next: &Self) -> bool {
        self.inverse().is_some_and(|inv| inv.same_as(next))
    }

    /// True when the factor is built only from associators and unitors.
    pub fn is_structural(&self) -> bool {
        match self {
            Factor::Arrow(_) => false,
            Factor::TensorRight(f, _) | Factor::TensorLeft(_, f) => f.is_structural(),
            _ => true,
        }
    }
}

/// Evaluate a single factor in `c`.
pub fn replay_factor<C: MonoidalCategory>(c: &C, f: &Factor<C::Obj, C::Mor>) -> Result<C::Mor> {
    use Factor::*;
    match f {
        Assoc(x, y, z) => c.associator(x, y, z),
        AssocInv(x, y, z) => c.associator_inv(x, y, z),
        LUnit(x) => c.lunitor(x),
        LUnitInv(x) => c.lunitor_inv(x),
        RUnit(x) => c.runitor(x),
        RUnitInv(x) => c.runitor_inv(x),
        Arrow(m) => Ok(m.clone()),
        TensorRight(f, o) => c.whisker_right(&replay_factor(c, f)?, o),
        TensorLeft(o, f) => c.whisker_left(o, &replay_factor(c, f)?),
    }
}

/// Evaluate a trace (application order) starting at `dom`.
pub fn replay<C: MonoidalCategory>(
    c: &C,
    dom: &C::Obj,
    trace: &[Factor<C::Obj, C::Mor>],
) -> Result<C::Mor> {
    trace
        .iter()
        .try_fold(c.identity(dom)?, |acc, f| c.compose(&replay_factor(c, f)?, &acc))
}

/// Check that the factors chain from `dom` to `cod` in `c`: each factor
/// exists, and each codomain is the next domain.
pub fn validate_trace<C: MonoidalCategory>(
    c: &C,
    dom: &C::Obj,
    cod: &C::Obj,
    trace: &[Factor<C::Obj, C::Mor>],
) -> Result<bool> {
    let mut at = dom.clone();
    for f in trace {
        let m = replay_factor(c, f)?;
        if c.dom(&m) != at {
            return Ok(false);
        }
        at = c.cod(&m);
    }
    Ok(&at == cod)
}

/// Render a factor with the model's object labels: `a[x,y,z]`, `ℓ⁻¹[x]`,
/// `(a[x,y,z] ⊗ id[w])`.
pub fn render_factor<C: MonoidalCategory>(c: &C, f: &Factor<C::Obj, C::Mor>) -> String {
    use Factor::*;
    let o = |x: &C::Obj| c.obj_label(x);
    match f {
        Assoc(x, y, z) => format!("a[{},{},{}]", o(x), o(y), o(z)),
        AssocInv(x, y, z) => format!("a⁻¹[{},{},{}]", o(x), o(y), o(z)),
        LUnit(x) => format!("ℓ[{}]", o(x)),
        LUnitInv(x) => format!("ℓ⁻¹[{}]", o(x)),
        RUnit(x) => format!("r[{}]", o(x)),
        RUnitInv(x) => format!("r⁻¹[{}]", o(x)),
        Arrow(m) => c.mor_label(m),
        TensorRight(f, x) => format!("({} ⊗ id[{}])", render_factor(c, f), o(x)),
        TensorLeft(x, f) => format!("(id[{}] ⊗ {})", o(x), render_factor(c, f)),
    }
}

/// A morphism of `C` together with the factors that produced it.
#[derive(Debug, Clone)]
pub struct TracedMor<O, M> {
    pub payload: M,
    pub trace: Vec<Factor<O, M>>,
}

/// `C` with every morphism carrying its trace. Equality of morphisms is the
/// underlying model's; traces are annotations.
#[derive(Debug, Clone)]
pub struct Traced<C> {
    inner: C,
}

impl<C: MonoidalCategory> Traced<C> {
    pub fn new(inner: C) -> Self {
        Traced { inner }
    }

    pub fn inner(&self) -> &C {
        &self.inner
    }

    /// A plain morphism of `C` as a one-factor trace.
    pub fn arrow(&self, m: C::Mor) -> TracedMor<C::Obj, C::Mor> {
        TracedMor {
            payload: m.clone(),
            trace: vec![Factor::Arrow(m)],
        }
    }

    fn structural(
        &self,
        payload: Result<C::Mor>,
        f: Factor<C::Obj, C::Mor>,
    ) -> Result<TracedMor<C::Obj, C::Mor>> {
        Ok(TracedMor {
            payload: payload?,
            trace: vec![f],
        })
    }

    /// Invert a morphism whose trace is purely structural.
    pub fn invert(&self, f: &TracedMor<C::Obj, C::Mor>) -> Result<TracedMor<C::Obj, C::Mor>> {
        let trace = f
            .trace
            .iter()
            .rev()
            .map(|x| x.inverse())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                CatError::NotInvertible(format!("{:?} (trace has an arrow)", f.payload))
            })?;
        let payload = replay(&self.inner, &self.inner.cod(&f.payload), &trace)?;
        Ok(TracedMor { payload, trace })
    }

    pub fn render(&self, f: &TracedMor<C::Obj, C::Mor>) -> Vec<String> {
        f.trace
            .iter()
            .map(|x| render_factor(&self.inner, x))
            .collect()
    }
}

/// The canonical isomorphism `from → to` between two terms that read the
/// same word, computed as `ρ_to⁻¹ ∘ ρ_from` in the thin model with traces.
pub fn coherence(from: &MagmaTerm, to: &MagmaTerm) -> Result<TracedMor<MagmaTerm, ThinMor>> {
    if from.leaf_count() != to.leaf_count() {
        return Err(CatError::LengthMismatch {
            seq: from.leaf_count(),
            leaves: to.leaf_count(),
        });
    }
    if from.forget_parens() != to.forget_parens() {
        return Err(CatError::Precondition(format!(
            "{from} and {to} read different words"
        )));
    }
    let r = TildeStr::new(Traced::new(FreeThinModel::new()))?;
    let c = r.strictification().inner();
    c.compose(&r.rho_inv(to)?, &r.rho(from)?)
}

fn concat<O: Clone + PartialEq, M: Clone>(
    first: &[Factor<O, M>],
    then: &[Factor<O, M>],
) -> Vec<Factor<O, M>> {
    let mut out: Vec<Factor<O, M>> = first.to_vec();
    for f in then {
        match out.last() {
            Some(last) if last.cancels(f) => {
                out.pop();
            }
            _ => out.push(f.clone()),
        }
    }
    out
}

impl<C: MonoidalCategory> MonoidalCategory for Traced<C>
where
    C::Obj: Debug,
{
    type Obj = C::Obj;
    type Mor = TracedMor<C::Obj, C::Mor>;

    fn dom(&self, f: &Self::Mor) -> C::Obj {
        self.inner.dom(&f.payload)
    }
    fn cod(&self, f: &Self::Mor) -> C::Obj {
        self.inner.cod(&f.payload)
    }
    fn identity(&self, x: &C::Obj) -> Result<Self::Mor> {
        Ok(TracedMor {
            payload: self.inner.identity(x)?,
            trace: Vec::new(),
        })
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        Ok(TracedMor {
            payload: self.inner.compose(&g.payload, &f.payload)?,
            trace: concat(&f.trace, &g.trace),
        })
    }
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        self.inner.mor_eq(&f.payload, &g.payload)
    }
    fn unit(&self) -> C::Obj {
        self.inner.unit()
    }
    fn tensor_obj(&self, x: &C::Obj, y: &C::Obj) -> Result<C::Obj> {
        self.inner.tensor_obj(x, y)
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        let right_of = self.inner.dom(&g.payload);
        let left_of = self.inner.cod(&f.payload);
        let first = f
            .trace
            .iter()
            .map(|x| Factor::TensorRight(Box::new(x.clone()), right_of.clone()));
        let then = g
            .trace
            .iter()
            .map(|x| Factor::TensorLeft(left_of.clone(), Box::new(x.clone())));
        Ok(TracedMor {
            payload: self.inner.tensor_mor(&f.payload, &g.payload)?,
            trace: first.chain(then).collect(),
        })
    }
    fn associator(&self, x: &C::Obj, y: &C::Obj, z: &C::Obj) -> Result<Self::Mor> {
        self.structural(
            self.inner.associator(x, y, z),
            Factor::Assoc(x.clone(), y.clone(), z.clone()),
        )
    }
    fn associator_inv(&self, x: &C::Obj, y: &C::Obj, z: &C::Obj) -> Result<Self::Mor> {
        self.structural(
            self.inner.associator_inv(x, y, z),
            Factor::AssocInv(x.clone(), y.clone(), z.clone()),
        )
    }
    fn lunitor(&self, x: &C::Obj) -> Result<Self::Mor> {
        self.structural(self.inner.lunitor(x), Factor::LUnit(x.clone()))
    }
    fn lunitor_inv(&self, x: &C::Obj) -> Result<Self::Mor> {
        self.structural(self.inner.lunitor_inv(x), Factor::LUnitInv(x.clone()))
    }
    fn runitor(&self, x: &C::Obj) -> Result<Self::Mor> {
        self.structural(self.inner.runitor(x), Factor::RUnit(x.clone()))
    }
    fn runitor_inv(&self, x: &C::Obj) -> Result<Self::Mor> {
        self.structural(self.inner.runitor_inv(x), Factor::RUnitInv(x.clone()))
    }
    fn is_strict(&self) -> bool {
        self.inner.is_strict()
    }
    fn objects(&self) -> Option<Vec<C::Obj>> {
        self.inner.objects()
    }
    fn obj_label(&self, x: &C::Obj) -> String {
        self.inner.obj_label(x)
    }
    fn mor_label(&self, f: &Self::Mor) -> String {
        if f.trace.is_empty() {
            format!("id[{}]", self.inner.obj_label(&self.inner.dom(&f.payload)))
        } else {
            self.render(f).join(" ; ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(s: &str) -> MagmaTerm {
        s.parse().unwrap()
    }

    #[test]
    fn associator_then_inverse_cancels() {
        let c = Traced::new(FreeThinModel::new());
        let (x, y, z) = (term("x"), term("y"), term("z"));
        let a = c.associator(&x, &y, &z).unwrap();
        let ai = c.associator_inv(&x, &y, &z).unwrap();
        let id = c.compose(&ai, &a).unwrap();
        assert!(id.trace.is_empty());
    }

    #[test]
    fn tensor_trace_whiskers_both_sides() {
        let c = Traced::new(FreeThinModel::new());
        let (x, y, z, w) = (term("x"), term("y"), term("z"), term("w"));
        let a = c.associator(&x, &y, &z).unwrap();
        let l = c.lunitor(&w).unwrap();
        let t = c.tensor_mor(&a, &l).unwrap();
        assert_eq!(
            c.render(&t),
            vec!["(a[x,y,z] ⊗ id[w])", "(id[(x (y z))] ⊗ ℓ[w])"]
        );
        let replayed = replay(c.inner(), &c.dom(&t), &t.trace).unwrap();
        assert!(c.inner().mor_eq(&replayed, &t.payload));
    }

    #[test]
    fn invert_reverses_structural_traces() {
        let c = Traced::new(FreeThinModel::new());
        let (x, y, z) = (term("x"), term("y"), term("z"));
        let a = c.associator(&x, &y, &z).unwrap();
        let inv = c.invert(&a).unwrap();
        assert_eq!(c.render(&inv), vec!["a⁻¹[x,y,z]"]);
        assert_eq!(c.dom(&inv), c.cod(&a));
    }

    #[test]
    fn coherence_of_one_rotation_is_one_factor() {
        let c = Traced::new(FreeThinModel::new());
        let f = coherence(&term("(x (y z))"), &term("((x y) z)")).unwrap();
        assert_eq!(c.render(&f), vec!["a⁻¹[x,y,z]"]);
        let same = coherence(&term("(x (y z))"), &term("(x (y z))")).unwrap();
        assert!(same.trace.is_empty());
    }

    #[test]
    fn coherence_rejects_mismatched_terms() {
        assert_eq!(
            coherence(&term("(x y)"), &term("x")).unwrap_err(),
            CatError::LengthMismatch { seq: 2, leaves: 1 }
        );
        assert!(matches!(
            coherence(&term("(x y)"), &term("(y x)")),
            Err(CatError::Precondition(_))
        ));
    }
}
