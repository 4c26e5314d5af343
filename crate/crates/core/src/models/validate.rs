//! Exhaustive validation of a model over a finite universe of objects and
//! morphisms.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::axioms::{pentagon_sides, triangle_sides};
use crate::category::MonoidalCategory;
use crate::error::{CatError, Result};
use crate::models::{FreeThinModel, MatrixModCategory};
use crate::report::LawReport;

/// The objects and morphisms a validation run quantifies over.
#[derive(Debug, Clone)]
pub struct Universe<C: MonoidalCategory> {
    pub objects: Vec<C::Obj>,
    pub morphisms: Vec<C::Mor>,
}

impl<C: MonoidalCategory> Universe<C> {
    /// Everything a finite model enumerates.
    pub fn full(c: &C) -> Result<Self> {
        let objects = c
            .objects()
            .ok_or_else(|| CatError::Precondition("model has no finite object list".into()))?;
        let morphisms = c
            .morphisms()
            .ok_or_else(|| CatError::Precondition("model has no finite morphism list".into()))?;
        Ok(Universe { objects, morphisms })
    }
}

/// Shapes up to `max_obj_leaves` as objects; all morphisms among shapes up
/// to `max_mor_leaves`.
pub fn thin_universe(max_obj_leaves: usize, max_mor_leaves: usize) -> Universe<FreeThinModel> {
    let objects = FreeThinModel::shapes_up_to(max_obj_leaves);
    let small = FreeThinModel::shapes_up_to(max_mor_leaves);
    Universe {
        objects,
        morphisms: FreeThinModel::morphisms_among(&small),
    }
}

/// Dimensions `1..=max_dim`, identities, and `per_pair` seeded random
/// matrices for every dimension pair.
pub fn matrix_universe(
    c: &MatrixModCategory,
    max_dim: usize,
    per_pair: usize,
    seed: u64,
) -> Universe<MatrixModCategory> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let objects: Vec<usize> = (1..=max_dim).collect();
    let mut morphisms = Vec::new();
    for &n in &objects {
        morphisms.push(c.identity(&n).expect("identity"));
    }
    for &rows in &objects {
        for &cols in &objects {
            for _ in 0..per_pair {
                morphisms.push(c.random(rows, cols, &mut rng));
            }
        }
    }
    Universe { objects, morphisms }
}

/// Run every category and monoidal-category law over `u`. Failures name the
/// check and its arguments.
pub fn validate_category<C: MonoidalCategory>(c: &C, u: &Universe<C>) -> LawReport {
    validate_with_seed(c, u, 0)
}

pub fn validate_with_seed<C: MonoidalCategory>(c: &C, u: &Universe<C>, seed: u64) -> LawReport {
    let mut report = LawReport::new("category", seed);
    let o = |x: &C::Obj| c.obj_label(x);
    let m = |f: &C::Mor| c.mor_label(f);
    let objs = &u.objects;
    let mors = &u.morphisms;

    for f in mors {
        report.check_sides(
            c,
            || format!("left identity({})", m(f)),
            c.identity(&c.cod(f))
                .and_then(|id| c.compose(&id, f))
                .map(|l| (l, f.clone())),
        );
        report.check_sides(
            c,
            || format!("right identity({})", m(f)),
            c.identity(&c.dom(f))
                .and_then(|id| c.compose(f, &id))
                .map(|l| (l, f.clone())),
        );
    }

    let composable: Vec<(&C::Mor, &C::Mor)> = mors
        .iter()
        .flat_map(|g| mors.iter().map(move |f| (g, f)))
        .filter(|(g, f)| c.cod(f) == c.dom(g))
        .collect();

    for &(g, f) in &composable {
        for h in mors.iter().filter(|h| c.dom(h) == c.cod(g)) {
            report.check_sides(
                c,
                || format!("associativity({},{},{})", m(h), m(g), m(f)),
                (|| {
                    let left = c.compose(&c.compose(h, g)?, f)?;
                    let right = c.compose(h, &c.compose(g, f)?)?;
                    Ok((left, right))
                })(),
            );
        }
    }

    for &(g, f) in &composable {
        for &(g2, f2) in &composable {
            report.check_sides(
                c,
                || format!("interchange({},{},{},{})", m(g), m(f), m(g2), m(f2)),
                (|| {
                    let left = c.compose(&c.tensor_mor(g, g2)?, &c.tensor_mor(f, f2)?)?;
                    let right = c.tensor_mor(&c.compose(g, f)?, &c.compose(g2, f2)?)?;
                    Ok((left, right))
                })(),
            );
        }
    }

    for x in objs {
        for y in objs {
            report.check_sides(
                c,
                || format!("tensor of identities({},{})", o(x), o(y)),
                (|| {
                    let left = c.tensor_mor(&c.identity(x)?, &c.identity(y)?)?;
                    let right = c.identity(&c.tensor_obj(x, y)?)?;
                    Ok((left, right))
                })(),
            );
        }
    }

    for f in mors {
        for g in mors {
            for h in mors {
                report.check_sides(
                    c,
                    || format!("associator naturality({},{},{})", m(f), m(g), m(h)),
                    (|| {
                        let (x, y, z) = (c.dom(f), c.dom(g), c.dom(h));
                        let (x2, y2, z2) = (c.cod(f), c.cod(g), c.cod(h));
                        let left = c.compose(
                            &c.associator(&x2, &y2, &z2)?,
                            &c.tensor_mor(&c.tensor_mor(f, g)?, h)?,
                        )?;
                        let right = c.compose(
                            &c.tensor_mor(f, &c.tensor_mor(g, h)?)?,
                            &c.associator(&x, &y, &z)?,
                        )?;
                        Ok((left, right))
                    })(),
                );
            }
        }
    }

    let one = c.unit();
    for f in mors {
        report.check_sides(
            c,
            || format!("left unitor naturality({})", m(f)),
            (|| {
                let left = c.compose(&c.lunitor(&c.cod(f))?, &c.whisker_left(&one, f)?)?;
                let right = c.compose(f, &c.lunitor(&c.dom(f))?)?;
                Ok((left, right))
            })(),
        );
        report.check_sides(
            c,
            || format!("right unitor naturality({})", m(f)),
            (|| {
                let left = c.compose(&c.runitor(&c.cod(f))?, &c.whisker_right(f, &one)?)?;
                let right = c.compose(f, &c.runitor(&c.dom(f))?)?;
                Ok((left, right))
            })(),
        );
    }

    let inverse_pair = |a: Result<C::Mor>, b: Result<C::Mor>| -> Result<bool> {
        let (a, b) = (a?, b?);
        Ok(c.is_identity(&c.compose(&b, &a)?)? && c.is_identity(&c.compose(&a, &b)?)?)
    };
    for x in objs {
        for y in objs {
            for z in objs {
                report.check_true(
                    || format!("associator inverse({},{},{})", o(x), o(y), o(z)),
                    inverse_pair(c.associator(x, y, z), c.associator_inv(x, y, z)),
                );
            }
        }
        report.check_true(
            || format!("left unitor inverse({})", o(x)),
            inverse_pair(c.lunitor(x), c.lunitor_inv(x)),
        );
        report.check_true(
            || format!("right unitor inverse({})", o(x)),
            inverse_pair(c.runitor(x), c.runitor_inv(x)),
        );
    }

    for x in objs {
        for y in objs {
            for z in objs {
                for w in objs {
                    report.check_sides(
                        c,
                        || format!("pentagon({},{},{},{})", o(x), o(y), o(z), o(w)),
                        pentagon_sides(c, x, y, z, w),
                    );
                }
            }
        }
    }
    for x in objs {
        for y in objs {
            report.check_sides(
                c,
                || format!("triangle({},{})", o(x), o(y)),
                triangle_sides(c, x, y),
            );
        }
    }

    report.check_sides(
        c,
        || format!("left and right unitor agree at the unit({})", o(&one)),
        c.lunitor(&one).and_then(|l| Ok((l, c.runitor(&one)?))),
    );

    if c.is_strict() {
        for x in objs {
            for y in objs {
                for z in objs {
                    report.check_true(
                        || format!("strict associator({},{},{})", o(x), o(y), o(z)),
                        c.associator(x, y, z).and_then(|a| c.is_identity(&a)),
                    );
                }
            }
            report.check_true(
                || format!("strict unitors({})", o(x)),
                (|| Ok(c.is_identity(&c.lunitor(x)?)? && c.is_identity(&c.runitor(x)?)?))(),
            );
        }
    }

    report
}
