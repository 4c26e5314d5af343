//! The shipped fixture categories, functors and transformations.

use std::path::PathBuf;

use crate::category::MonoidalCategory;
use crate::error::{CatError, Result};
use crate::functor::{FnFunctor, FnNat, Strength};
use crate::models::{FreeThinModel, LoadError, MatrixModCategory, TableCategory, TableMor, ThinMor};
use crate::terms::{Generator, MagmaTerm};

/// Fixture directory: `$MONCATKIT_FIXTURES` if set, else the crate's own
/// `fixtures/` directory.
pub fn fixture_dir() -> PathBuf {
    match std::env::var_os("MONCATKIT_FIXTURES") {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

/// Load `<fixture_dir>/<name>.json`.
pub fn load_fixture(name: &str) -> std::result::Result<TableCategory, LoadError> {
    TableCategory::load(fixture_dir().join(format!("{name}.json")))
}

pub fn trivial() -> TableCategory {
    load_fixture("trivial").expect("shipped fixture trivial.json loads")
}

pub fn ns2() -> TableCategory {
    load_fixture("ns2").expect("shipped fixture ns2.json loads")
}

/// `Xk` with `k` reduced mod 3.
fn z3(c: &TableCategory, obj: &str, k: i64) -> Result<TableMor> {
    c.morphism(&format!("{obj}{}", k.rem_euclid(3)))
}

/// The exponent `k` of `Xk`.
fn z3_exponent(m: &TableMor) -> Result<i64> {
    m.id[1..]
        .parse()
        .map_err(|_| CatError::UnknownMorphism(m.id.to_string()))
}

fn pair_index(x: &str, y: &str) -> usize {
    match (x, y) {
        ("I", "I") => 0,
        ("I", "A") => 1,
        ("A", "I") => 2,
        _ => 3,
    }
}

type TableFunctor<D> = FnFunctor<TableCategory, D>;

/// An endofunctor of `ns2`: identity on objects, `Xk ↦ X(-k)`, with `γ_{X,Y}`
/// given by exponents in the order `II, IA, AI, AA`.
fn ns2_endo(gamma: [i64; 4], unit: i64) -> TableFunctor<TableCategory> {
    let c = ns2();
    let (c1, c2, c3, c4) = (c.clone(), c.clone(), c.clone(), c.clone());
    let c5 = c.clone();
    FnFunctor {
        source: c.clone(),
        target: c,
        strength: Strength::Strong,
        obj: Box::new(|x| Ok(x.clone())),
        mor: Box::new(move |f| z3(&c1, &f.dom, -z3_exponent(f)?)),
        gamma: Box::new(move |x, y| {
            z3(&c2, &c2.tensor_obj(x, y)?, gamma[pair_index(x, y)])
        }),
        gamma_inv: Box::new(move |x, y| {
            z3(&c3, &c3.tensor_obj(x, y)?, -gamma[pair_index(x, y)])
        }),
        unit: Box::new(move || z3(&c4, "I", unit)),
        unit_inv: Box::new(move || z3(&c5, "I", -unit)),
    }
}

/// `F: ns2 → ns2`, strong, with non-identity `γ` and `u`.
pub fn ns2_f() -> TableFunctor<TableCategory> {
    ns2_endo([0, 1, 0, 0], 2)
}

/// `G: ns2 → ns2`, strong, sharing its action on morphisms with [`ns2_f`].
pub fn ns2_g() -> TableFunctor<TableCategory> {
    ns2_endo([1, 2, 1, 0], 1)
}

/// `α: F ⇒ G` on `ns2`, with components `I2` and `A0`.
pub fn ns2_alpha() -> FnNat<TableFunctor<TableCategory>, TableFunctor<TableCategory>> {
    let c = ns2();
    FnNat::new(ns2_f(), ns2_g(), move |x| {
        z3(&c, x, if &**x == "I" { 2 } else { 0 })
    })
}

fn from_trivial(gamma: i64, unit: i64) -> TableFunctor<TableCategory> {
    let d = ns2();
    let (d1, d2, d3) = (d.clone(), d.clone(), d.clone());
    let (d4, d5, d6) = (d.clone(), d.clone(), d.clone());
    FnFunctor {
        source: trivial(),
        target: d,
        strength: Strength::Strong,
        obj: Box::new(move |_| d1.object("I")),
        mor: Box::new(move |_| z3(&d2, "I", 0)),
        gamma: Box::new(move |_, _| z3(&d3, "I", gamma)),
        gamma_inv: Box::new(move |_, _| z3(&d4, "I", -gamma)),
        unit: Box::new(move || z3(&d5, "I", unit)),
        unit_inv: Box::new(move || z3(&d6, "I", -unit)),
    }
}

/// `trivial → ns2` sending the object to the unit, with `γ = I1`, `u = I0`.
pub fn trivial_to_ns2_f() -> TableFunctor<TableCategory> {
    from_trivial(1, 0)
}

/// `trivial → ns2` with `γ = I0`, `u = I1`.
pub fn trivial_to_ns2_g() -> TableFunctor<TableCategory> {
    from_trivial(0, 1)
}

/// The transformation between the two functors out of `trivial`, with
/// component `I1`.
pub fn trivial_alpha() -> FnNat<TableFunctor<TableCategory>, TableFunctor<TableCategory>> {
    let d = ns2();
    FnNat::new(trivial_to_ns2_f(), trivial_to_ns2_g(), move |_| z3(&d, "I", 1))
}

fn to_matrix(gamma: [i64; 4], unit: i64) -> TableFunctor<MatrixModCategory> {
    let m = MatrixModCategory::default();
    // 2 has order 3 mod 7, so Xk ↦ [2^k] is a representation of Z/3.
    let power = |k: i64| -> i64 { [1, 2, 4][k.rem_euclid(3) as usize] };
    let (m1, m2, m3, m4, m5) = (m.clone(), m.clone(), m.clone(), m.clone(), m.clone());
    FnFunctor {
        source: ns2(),
        target: m,
        strength: Strength::Strong,
        obj: Box::new(|_| Ok(1)),
        mor: Box::new(move |f| Ok(m1.scalar(power(z3_exponent(f)?)))),
        gamma: Box::new(move |x, y| Ok(m2.scalar(power(gamma[pair_index(x, y)])))),
        gamma_inv: Box::new(move |x, y| Ok(m3.scalar(power(-gamma[pair_index(x, y)])))),
        unit: Box::new(move || Ok(m4.scalar(power(unit)))),
        unit_inv: Box::new(move || Ok(m5.scalar(power(-unit)))),
    }
}

/// `K: ns2 → Mat_7`, strong, every object to dimension 1.
pub fn ns2_to_matrix_k() -> TableFunctor<MatrixModCategory> {
    to_matrix([0, 1, 0, 0], 2)
}

/// `K': ns2 → Mat_7` with the same action on morphisms as [`ns2_to_matrix_k`].
pub fn ns2_to_matrix_k2() -> TableFunctor<MatrixModCategory> {
    to_matrix([1, 2, 1, 0], 1)
}

/// `κ: K ⇒ K'` with components `[4]` at `I` and `[1]` at `A`.
pub fn matrix_kappa() -> FnNat<TableFunctor<MatrixModCategory>, TableFunctor<MatrixModCategory>> {
    let m = MatrixModCategory::default();
    FnNat::new(ns2_to_matrix_k(), ns2_to_matrix_k2(), move |x| {
        Ok(m.scalar(if &**x == "I" { 4 } else { 1 }))
    })
}

fn relabel_term(v: &MagmaTerm, rename: &dyn Fn(&Generator) -> Generator) -> MagmaTerm {
    match v {
        MagmaTerm::Unit => MagmaTerm::Unit,
        MagmaTerm::Leaf(g) => MagmaTerm::Leaf(rename(g)),
        MagmaTerm::Pair(l, r) => MagmaTerm::product(&relabel_term(l, rename), &relabel_term(r, rename)),
    }
}

/// The strict endofunctor of the thin model that renames every generator
/// `g` to `g'`.
pub fn thin_relabel() -> FnFunctor<FreeThinModel, FreeThinModel> {
    let rename = |g: &Generator| Generator::new(&format!("{}'", g.as_str()));
    let map = move |v: &MagmaTerm| relabel_term(v, &rename);
    let id = move |v: &MagmaTerm| ThinMor::between(&map(v), &map(v));
    FnFunctor {
        source: FreeThinModel::new(),
        target: FreeThinModel::new(),
        strength: Strength::Strict,
        obj: Box::new(move |v| Ok(map(v))),
        mor: Box::new(move |f| ThinMor::between(&map(f.dom()), &map(f.cod()))),
        gamma: Box::new(move |x, y| id(&MagmaTerm::product(x, y))),
        gamma_inv: Box::new(move |x, y| id(&MagmaTerm::product(x, y))),
        unit: Box::new(|| ThinMor::between(&MagmaTerm::Unit, &MagmaTerm::Unit)),
        unit_inv: Box::new(|| ThinMor::between(&MagmaTerm::Unit, &MagmaTerm::Unit)),
    }
}

/// The strict functor from the thin model to `Mat_7` sending every object to
/// dimension 1 and every morphism to `[1]`.
pub fn thin_to_matrix() -> FnFunctor<FreeThinModel, MatrixModCategory> {
    let m = MatrixModCategory::default();
    let one = m.scalar(1);
    let (o1, o2, o3, o4, o5) = (one.clone(), one.clone(), one.clone(), one.clone(), one);
    FnFunctor {
        source: FreeThinModel::new(),
        target: m,
        strength: Strength::Strict,
        obj: Box::new(|_| Ok(1)),
        mor: Box::new(move |_| Ok(o1.clone())),
        gamma: Box::new(move |_, _| Ok(o2.clone())),
        gamma_inv: Box::new(move |_, _| Ok(o3.clone())),
        unit: Box::new(move || Ok(o4.clone())),
        unit_inv: Box::new(move || Ok(o5.clone())),
    }
}
