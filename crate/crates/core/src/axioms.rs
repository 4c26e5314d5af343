//! Checkers for the monoidal axioms, one instance at a time.
//!
//! Each `*_sides` function returns the two composites that must agree; the
//! `check_*` wrappers compare them with the model's `mor_eq`. Exhaustive
//! drivers live in `models::validate` and `laws`.

use crate::category::{MonoidalCategory, Mor, Obj};
use crate::error::Result;
use crate::functor::{Composite, MonoidalFunctor, MonoidalNat, Src, Tgt};

pub use crate::functor::compose_functors;

/// Two composites that a law claims are equal.
pub type Sides<M> = (M, M);

fn agree<C: MonoidalCategory>(c: &C, sides: Result<Sides<C::Mor>>) -> Result<bool> {
    let (l, r) = sides?;
    Ok(c.dom(&l) == c.dom(&r) && c.cod(&l) == c.cod(&r) && c.mor_eq(&l, &r))
}

/// `a_{X,Y,Z⊗M} ∘ a_{X⊗Y,Z,M}` against
/// `(id_X ⊗ a_{Y,Z,M}) ∘ a_{X,Y⊗Z,M} ∘ (a_{X,Y,Z} ⊗ id_M)`.
pub fn pentagon_sides<C: MonoidalCategory>(
    c: &C,
    x: &C::Obj,
    y: &C::Obj,
    z: &C::Obj,
    m: &C::Obj,
) -> Result<Sides<C::Mor>> {
    let xy = c.tensor_obj(x, y)?;
    let zm = c.tensor_obj(z, m)?;
    let yz = c.tensor_obj(y, z)?;
    let left = c.compose(&c.associator(x, y, &zm)?, &c.associator(&xy, z, m)?)?;
    let right = c.compose_path(&[
        c.whisker_right(&c.associator(x, y, z)?, m)?,
        c.associator(x, &yz, m)?,
        c.whisker_left(x, &c.associator(y, z, m)?)?,
    ])?;
    Ok((left, right))
}

pub fn check_pentagon<C: MonoidalCategory>(
    c: &C,
    x: &C::Obj,
    y: &C::Obj,
    z: &C::Obj,
    m: &C::Obj,
) -> Result<bool> {
    agree(c, pentagon_sides(c, x, y, z, m))
}

/// `(id_X ⊗ ℓ_Y) ∘ a_{X,1,Y}` against `r_X ⊗ id_Y`.
pub fn triangle_sides<C: MonoidalCategory>(
    c: &C,
    x: &C::Obj,
    y: &C::Obj,
) -> Result<Sides<C::Mor>> {
    let one = c.unit();
    let left = c.compose(&c.whisker_left(x, &c.lunitor(y)?)?, &c.associator(x, &one, y)?)?;
    let right = c.whisker_right(&c.runitor(x)?, y)?;
    Ok((left, right))
}

pub fn check_triangle<C: MonoidalCategory>(c: &C, x: &C::Obj, y: &C::Obj) -> Result<bool> {
    agree(c, triangle_sides(c, x, y))
}

/// `F(a) ∘ γ_{X⊗Y,Z} ∘ (γ_{X,Y} ⊠ id)` against `γ_{X,Y⊗Z} ∘ (id ⊠ γ_{Y,Z}) ∘ a'`.
pub fn hexagon_sides<F: MonoidalFunctor>(
    f: &F,
    x: &Obj<Src<F>>,
    y: &Obj<Src<F>>,
    z: &Obj<Src<F>>,
) -> Result<Sides<Mor<Tgt<F>>>> {
    let c = f.source();
    let d = f.target();
    let (fx, fy, fz) = (f.map_obj(x)?, f.map_obj(y)?, f.map_obj(z)?);
    let xy = c.tensor_obj(x, y)?;
    let yz = c.tensor_obj(y, z)?;
    let left = d.compose_path(&[
        d.whisker_right(&f.gamma(x, y)?, &fz)?,
        f.gamma(&xy, z)?,
        f.map_mor(&c.associator(x, y, z)?)?,
    ])?;
    let right = d.compose_path(&[
        d.associator(&fx, &fy, &fz)?,
        d.whisker_left(&fx, &f.gamma(y, z)?)?,
        f.gamma(x, &yz)?,
    ])?;
    Ok((left, right))
}

pub fn check_hexagon<F: MonoidalFunctor>(
    f: &F,
    x: &Obj<Src<F>>,
    y: &Obj<Src<F>>,
    z: &Obj<Src<F>>,
) -> Result<bool> {
    agree(f.target(), hexagon_sides(f, x, y, z))
}

/// The left and right unit squares at `X`:
/// `F(ℓ_X) ∘ γ_{1,X} ∘ (u ⊠ id) = ℓ'_{FX}` and `F(r_X) ∘ γ_{X,1} ∘ (id ⊠ u) = r'_{FX}`.
pub fn unit_square_sides<F: MonoidalFunctor>(
    f: &F,
    x: &Obj<Src<F>>,
) -> Result<[Sides<Mor<Tgt<F>>>; 2]> {
    let c = f.source();
    let d = f.target();
    let one = c.unit();
    let fx = f.map_obj(x)?;
    let u = f.unit_map()?;
    let left_square = (
        d.compose_path(&[
            d.whisker_right(&u, &fx)?,
            f.gamma(&one, x)?,
            f.map_mor(&c.lunitor(x)?)?,
        ])?,
        d.lunitor(&fx)?,
    );
    let right_square = (
        d.compose_path(&[
            d.whisker_left(&fx, &u)?,
            f.gamma(x, &one)?,
            f.map_mor(&c.runitor(x)?)?,
        ])?,
        d.runitor(&fx)?,
    );
    Ok([left_square, right_square])
}

pub fn check_unit_squares<F: MonoidalFunctor>(f: &F, x: &Obj<Src<F>>) -> Result<bool> {
    let [l, r] = unit_square_sides(f, x)?;
    Ok(agree(f.target(), Ok(l))? && agree(f.target(), Ok(r))?)
}

/// `α_{X⊗Y} ∘ γ^F_{X,Y} = γ^G_{X,Y} ∘ (α_X ⊠ α_Y)`.
pub fn monoidal_nat_sides<A: MonoidalNat>(
    alpha: &A,
    x: &Obj<Src<A::From>>,
    y: &Obj<Src<A::From>>,
) -> Result<Sides<Mor<Tgt<A::From>>>> {
    let c = alpha.from().source();
    let d = alpha.from().target();
    let xy = c.tensor_obj(x, y)?;
    let left = d.compose(&alpha.component(&xy)?, &alpha.from().gamma(x, y)?)?;
    let right = d.compose(
        &alpha.to().gamma(x, y)?,
        &d.tensor_mor(&alpha.component(x)?, &alpha.component(y)?)?,
    )?;
    Ok((left, right))
}

/// `α_1 ∘ u^F = u^G`.
pub fn monoidal_nat_unit_sides<A: MonoidalNat>(alpha: &A) -> Result<Sides<Mor<Tgt<A::From>>>> {
    let d = alpha.from().target();
    let one = alpha.from().source().unit();
    let left = d.compose(&alpha.component(&one)?, &alpha.from().unit_map()?)?;
    Ok((left, alpha.to().unit_map()?))
}

/// Both monoidality diagrams, at `(X, Y)` and at the unit.
pub fn check_monoidal_nat<A: MonoidalNat>(
    alpha: &A,
    x: &Obj<Src<A::From>>,
    y: &Obj<Src<A::From>>,
) -> Result<bool> {
    let d = alpha.from().target();
    Ok(agree(d, monoidal_nat_sides(alpha, x, y))? && agree(d, monoidal_nat_unit_sides(alpha))?)
}

/// `G(f) ∘ α_dom = α_cod ∘ F(f)`.
pub fn naturality_sides<A: MonoidalNat>(
    alpha: &A,
    f: &Mor<Src<A::From>>,
) -> Result<Sides<Mor<Tgt<A::From>>>> {
    let c = alpha.from().source();
    let d = alpha.from().target();
    let left = d.compose(&alpha.to().map_mor(f)?, &alpha.component(&c.dom(f))?)?;
    let right = d.compose(&alpha.component(&c.cod(f))?, &alpha.from().map_mor(f)?)?;
    Ok((left, right))
}

pub fn check_naturality<A: MonoidalNat>(alpha: &A, f: &Mor<Src<A::From>>) -> Result<bool> {
    agree(alpha.from().target(), naturality_sides(alpha, f))
}

/// `F(g ∘ f) = F(g) ∘ F(f)`.
pub fn functoriality_sides<F: MonoidalFunctor>(
    f: &F,
    g: &Mor<Src<F>>,
    h: &Mor<Src<F>>,
) -> Result<Sides<Mor<Tgt<F>>>> {
    let gh = f.source().compose(g, h)?;
    let left = f.map_mor(&gh)?;
    let right = f.target().compose(&f.map_mor(g)?, &f.map_mor(h)?)?;
    Ok((left, right))
}

/// `F(id_X) = id_{FX}`.
pub fn identity_sides<F: MonoidalFunctor>(f: &F, x: &Obj<Src<F>>) -> Result<Sides<Mor<Tgt<F>>>> {
    let left = f.map_mor(&f.source().identity(x)?)?;
    let right = f.target().identity(&f.map_obj(x)?)?;
    Ok((left, right))
}

/// Naturality of γ: `γ_{X',Y'} ∘ (F(g) ⊠ F(h)) = F(g ⊗ h) ∘ γ_{X,Y}`.
pub fn gamma_naturality_sides<F: MonoidalFunctor>(
    f: &F,
    g: &Mor<Src<F>>,
    h: &Mor<Src<F>>,
) -> Result<Sides<Mor<Tgt<F>>>> {
    let c = f.source();
    let d = f.target();
    let left = d.compose(
        &f.gamma(&c.cod(g), &c.cod(h))?,
        &d.tensor_mor(&f.map_mor(g)?, &f.map_mor(h)?)?,
    )?;
    let right = d.compose(
        &f.map_mor(&c.tensor_mor(g, h)?)?,
        &f.gamma(&c.dom(g), &c.dom(h))?,
    )?;
    Ok((left, right))
}

/// `γ⁻¹ ∘ γ = id` and `γ ∘ γ⁻¹ = id` at `(X, Y)`.
pub fn check_gamma_invertible<F: MonoidalFunctor>(
    f: &F,
    x: &Obj<Src<F>>,
    y: &Obj<Src<F>>,
) -> Result<bool> {
    let d = f.target();
    let g = f.gamma(x, y)?;
    let gi = f.gamma_inv(x, y)?;
    Ok(d.is_identity(&d.compose(&gi, &g)?)? && d.is_identity(&d.compose(&g, &gi)?)?)
}

/// `u⁻¹ ∘ u = id` and `u ∘ u⁻¹ = id`.
pub fn check_unit_invertible<F: MonoidalFunctor>(f: &F) -> Result<bool> {
    let d = f.target();
    let u = f.unit_map()?;
    let ui = f.unit_map_inv()?;
    Ok(d.is_identity(&d.compose(&ui, &u)?)? && d.is_identity(&d.compose(&u, &ui)?)?)
}

/// Strictness at `(X, Y)`: `F(X ⊗ Y) = FX ⊠ FY`, `F(1) = 1'`, and `γ`, `u`
/// are identities.
pub fn check_strict_at<F: MonoidalFunctor>(
    f: &F,
    x: &Obj<Src<F>>,
    y: &Obj<Src<F>>,
) -> Result<bool> {
    let c = f.source();
    let d = f.target();
    let on_objects = f.map_obj(&c.tensor_obj(x, y)?)?
        == d.tensor_obj(&f.map_obj(x)?, &f.map_obj(y)?)?
        && f.map_obj(&c.unit())? == d.unit();
    Ok(on_objects && d.is_identity(&f.gamma(x, y)?)? && d.is_identity(&f.unit_map()?)?)
}

/// Compare two functors with the same source and target componentwise at
/// one object pair: object images, `γ`, and `u`.
pub fn functors_agree_at<F, G>(
    f: &F,
    g: &G,
    x: &Obj<Src<F>>,
    y: &Obj<Src<F>>,
) -> Result<bool>
where
    F: MonoidalFunctor,
    G: MonoidalFunctor<Source = F::Source, Target = F::Target>,
{
    let d = f.target();
    Ok(f.map_obj(x)? == g.map_obj(x)?
        && d.mor_eq(&f.gamma(x, y)?, &g.gamma(x, y)?)
        && d.mor_eq(&f.unit_map()?, &g.unit_map()?))
}

/// `F ∘ Id`, a convenience for the unit law of composition.
pub fn precompose_identity<F>(f: F) -> Composite<F, crate::functor::IdentityFunctor<F::Source>>
where
    F: MonoidalFunctor,
    F::Source: Clone,
{
    let id = crate::functor::IdentityFunctor::new(f.source().clone());
    compose_functors(f, id)
}
