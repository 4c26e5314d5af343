//! Exhaustive and sampled drivers for the 2-categorical laws: the 2-functor
//! laws of `(-)^str` and `(-)_q`, and the round trips and naturality of the
//! lifting bijections along `i` and `j`.
//!
//! Functor spaces cannot be enumerated, so every claim is checked on the
//! shipped fixture functors, componentwise over a finite universe.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::axioms::{
    compose_functors, gamma_naturality_sides, hexagon_sides, monoidal_nat_sides,
    monoidal_nat_unit_sides, naturality_sides, unit_square_sides,
};
use crate::category::{MonoidalCategory, Obj};
use crate::fixtures;
use crate::functor::{horizontal, IdentityFunctor, IdentityNat, MonoidalFunctor, MonoidalNat, Src, Tgt};
use crate::models::{
    matrix_universe, thin_universe, validate_with_seed, FreeThinModel, MatrixModCategory, ThinMor, Universe,
};
use crate::nonstrictify::{
    lift_nat_nonstrict, lift_nonstrict, q_functor, q_nat, EmbeddingQ, NonStrictification, ParQ,
    QObject,
};
use crate::strictify::{
    lift_nat_strict, lift_strict, str_functor, str_nat, Embedding, ParFunctor, StrObject,
    Strictification,
};
use crate::terms::{Generator, MagmaTerm};

pub use crate::report::{Failure, LawReport};

/// Bounds and seed shared by the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Longest sequence in `C^str` universes.
    pub max_seq_len: usize,
    /// Most leaves in `C_q` universes.
    pub max_leaves: usize,
    /// Cap on morphism pairs per check; larger sets are sampled with `seed`.
    pub max_pairs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            max_seq_len: 3,
            max_leaves: 3,
            max_pairs: 2000,
        }
    }
}

/// Sequences of length `≤ max_len` over `base.objects`, with every morphism
/// between them when the model enumerates homs. Otherwise the morphisms are
/// identities, `i(f)`, and `i(f) * i(g)` for `f, g` in `base`.
pub fn str_universe<C: MonoidalCategory>(
    s: &Strictification<C>,
    base: &Universe<C>,
    max_len: usize,
) -> Universe<Strictification<C>> {
    let objects = StrObject::all_up_to(&base.objects, max_len);
    let mut morphisms = Vec::new();
    let mut enumerable = true;
    'outer: for x in &objects {
        for y in &objects {
            match s.hom(x, y) {
                Some(h) => morphisms.extend(h),
                None => {
                    enumerable = false;
                    break 'outer;
                }
            }
        }
    }
    if !enumerable {
        morphisms = objects.iter().filter_map(|x| s.identity(x).ok()).collect();
        let singles: Vec<_> = base.morphisms.iter().map(|f| s.embed_i_mor(f)).collect();
        for f in &singles {
            for g in &singles {
                if let Ok(fg) = s.star_arrows(f, g) {
                    morphisms.push(fg);
                }
            }
        }
        morphisms.extend(singles);
    }
    Universe { objects, morphisms }
}

/// Objects of `C_q` with `≤ max_leaves` entries from `base.objects`, and
/// morphisms as in [`str_universe`] with `j` for `i`.
pub fn q_universe<C: MonoidalCategory>(
    q: &NonStrictification<C>,
    base: &Universe<C>,
    max_leaves: usize,
) -> Universe<NonStrictification<C>> {
    let objects = QObject::all_up_to(&base.objects, max_leaves);
    let mut morphisms = Vec::new();
    let mut enumerable = true;
    'outer: for x in &objects {
        for y in &objects {
            match q.hom(x, y) {
                Some(h) => morphisms.extend(h),
                None => {
                    enumerable = false;
                    break 'outer;
                }
            }
        }
    }
    if !enumerable {
        morphisms = objects.iter().filter_map(|x| q.identity(x).ok()).collect();
        let singles: Vec<_> = base.morphisms.iter().map(|f| q.embed_j_mor(f)).collect();
        for f in &singles {
            for g in &singles {
                if let Ok(fg) = q.star_q_arrows(f, g) {
                    morphisms.push(fg);
                }
            }
        }
        morphisms.extend(singles);
    }
    Universe { objects, morphisms }
}

/// All pairs from `items`, or `cap` of them drawn with `seed` when there are
/// more.
fn pairs<T>(items: &[T], cap: usize, seed: u64) -> Vec<(&T, &T)> {
    let all: Vec<(&T, &T)> = items
        .iter()
        .flat_map(|a| items.iter().map(move |b| (a, b)))
        .collect();
    if all.len() <= cap {
        return all;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    all.choose_multiple(&mut rng, cap).copied().collect()
}

/// Compare two functors with the same source and target on objects,
/// morphisms, `γ` at every object pair, and `u`.
pub fn compare_functors<F, G>(law: &str, f: &F, g: &G, u: &Universe<F::Source>, seed: u64) -> LawReport
where
    F: MonoidalFunctor,
    G: MonoidalFunctor<Source = F::Source, Target = F::Target>,
{
    let c = f.source();
    let d = f.target();
    let mut report = LawReport::new(law, seed);
    for x in &u.objects {
        report.check_eq(|| format!("object {}", c.obj_label(x)), f.map_obj(x), g.map_obj(x));
    }
    for m in &u.morphisms {
        report.check_sides(
            d,
            || format!("arrow {}", c.mor_label(m)),
            f.map_mor(m).and_then(|l| Ok((l, g.map_mor(m)?))),
        );
    }
    for x in &u.objects {
        for y in &u.objects {
            report.check_sides(
                d,
                || format!("gamma({}, {})", c.obj_label(x), c.obj_label(y)),
                f.gamma(x, y).and_then(|l| Ok((l, g.gamma(x, y)?))),
            );
        }
    }
    report.check_sides(
        d,
        || "unit".into(),
        f.unit_map().and_then(|l| Ok((l, g.unit_map()?))),
    );
    report
}

/// Compare two transformations with the same source and target componentwise.
pub fn compare_nats<A, B>(law: &str, a: &A, b: &B, objects: &[Obj<Src<A::From>>], seed: u64) -> LawReport
where
    A: MonoidalNat,
    B: MonoidalNat,
    B::From: MonoidalFunctor<Source = Src<A::From>, Target = Tgt<A::From>>,
{
    let c = a.from().source();
    let d = a.from().target();
    let mut report = LawReport::new(law, seed);
    for x in objects {
        report.check_sides(
            d,
            || format!("component {}", c.obj_label(x)),
            a.component(x).and_then(|l| Ok((l, b.component(x)?))),
        );
    }
    report
}

/// Functoriality, `γ` naturality, the hexagon and both unit squares over `u`.
/// Morphism pairs and object triples beyond `cfg.max_pairs` are sampled.
pub fn check_monoidal_functor<F: MonoidalFunctor>(
    law: &str,
    f: &F,
    u: &Universe<F::Source>,
    cfg: &SuiteConfig,
) -> LawReport {
    let c = f.source();
    let d = f.target();
    let mut report = LawReport::new(law, cfg.seed);
    for (g, h) in pairs(&u.morphisms, cfg.max_pairs, cfg.seed) {
        if c.cod(h) == c.dom(g) {
            report.check_sides(
                d,
                || format!("functoriality({}, {})", c.mor_label(g), c.mor_label(h)),
                crate::axioms::functoriality_sides(f, g, h),
            );
        }
        report.check_sides(
            d,
            || format!("gamma naturality({}, {})", c.mor_label(g), c.mor_label(h)),
            gamma_naturality_sides(f, g, h),
        );
    }
    let triples: Vec<_> = pairs(&u.objects, cfg.max_pairs, cfg.seed)
        .into_iter()
        .flat_map(|(x, y)| u.objects.iter().map(move |z| (x, y, z)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let triples: Vec<_> = if triples.len() > cfg.max_pairs {
        triples.choose_multiple(&mut rng, cfg.max_pairs).copied().collect()
    } else {
        triples
    };
    for (x, y, z) in triples {
        report.check_sides(
            d,
            || format!("hexagon({}, {}, {})", c.obj_label(x), c.obj_label(y), c.obj_label(z)),
            hexagon_sides(f, x, y, z),
        );
    }
    for x in &u.objects {
        match unit_square_sides(f, x) {
            Ok([l, r]) => {
                report.check_sides(d, || format!("left unit square({})", c.obj_label(x)), Ok(l));
                report.check_sides(d, || format!("right unit square({})", c.obj_label(x)), Ok(r));
            }
            Err(e) => report.check_sides(d, || format!("unit squares({})", c.obj_label(x)), Err(e)),
        }
    }
    report
}

/// Naturality at every morphism of `u` and monoidality at every object pair
/// and at the unit.
pub fn check_monoidal_nat_on<A: MonoidalNat>(
    law: &str,
    alpha: &A,
    u: &Universe<Src<A::From>>,
    seed: u64,
) -> LawReport {
    let c = alpha.from().source();
    let d = alpha.from().target();
    let mut report = LawReport::new(law, seed);
    for m in &u.morphisms {
        report.check_sides(
            d,
            || format!("naturality({})", c.mor_label(m)),
            naturality_sides(alpha, m),
        );
    }
    for x in &u.objects {
        for y in &u.objects {
            report.check_sides(
                d,
                || format!("monoidal({}, {})", c.obj_label(x), c.obj_label(y)),
                monoidal_nat_sides(alpha, x, y),
            );
        }
    }
    report.check_sides(d, || "monoidal(unit)".into(), monoidal_nat_unit_sides(alpha));
    report
}

fn errored(law: &str, seed: u64, e: crate::error::CatError) -> LawReport {
    let mut report = LawReport::new(law, seed);
    report.universe_size = 1;
    report.fail("construction".into(), format!("error: {e}"), String::new());
    report
}

macro_rules! or_report {
    ($law:expr, $seed:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return errored($law, $seed, e),
        }
    };
}

/// `(F2 ∘ F1)^str = F2^str ∘ F1^str` on `C1^str`.
pub fn str_composition_law<F2, F1>(
    law: &str,
    f2: &F2,
    f1: &F1,
    base: &Universe<F1::Source>,
    cfg: &SuiteConfig,
) -> LawReport
where
    F1: MonoidalFunctor,
    F2: MonoidalFunctor<Source = F1::Target>,
    F1::Source: Clone,
    F1::Target: Clone,
    F2::Target: Clone,
{
    let whole = or_report!(law, cfg.seed, str_functor(compose_functors(f2, f1)));
    let s2 = or_report!(law, cfg.seed, str_functor(f2));
    let s1 = or_report!(law, cfg.seed, str_functor(f1));
    let parts = compose_functors(s2, s1);
    let u = str_universe(whole.source(), base, cfg.max_seq_len);
    compare_functors(law, &whole, &parts, &u, cfg.seed)
}

/// `(F2 ∘ F1)_q = (F2)_q ∘ (F1)_q` on `(C1)_q`.
pub fn q_composition_law<F2, F1>(
    law: &str,
    f2: &F2,
    f1: &F1,
    base: &Universe<F1::Source>,
    cfg: &SuiteConfig,
) -> LawReport
where
    F1: MonoidalFunctor,
    F2: MonoidalFunctor<Source = F1::Target>,
    F1::Source: Clone,
    F1::Target: Clone,
    F2::Target: Clone,
{
    let whole = or_report!(law, cfg.seed, q_functor(compose_functors(f2, f1)));
    let q2 = or_report!(law, cfg.seed, q_functor(f2));
    let q1 = or_report!(law, cfg.seed, q_functor(f1));
    let parts = compose_functors(q2, q1);
    let u = q_universe(whole.source(), base, cfg.max_leaves);
    compare_functors(law, &whole, &parts, &u, cfg.seed)
}

/// `(α2 * α1)^str = α2^str * α1^str` on `C1^str`.
pub fn str_horizontal_law<A2, A1>(
    law: &str,
    a2: &A2,
    a1: &A1,
    base: &Universe<Src<A1::From>>,
    cfg: &SuiteConfig,
) -> LawReport
where
    A1: MonoidalNat,
    A2: MonoidalNat,
    A2::From: MonoidalFunctor<Source = Tgt<A1::From>>,
    Src<A1::From>: Clone,
    Tgt<A1::From>: Clone,
    Tgt<A2::From>: Clone,
{
    let h = horizontal(a2, a1);
    let whole = or_report!(law, cfg.seed, str_nat(&h));
    let s2 = or_report!(law, cfg.seed, str_nat(a2));
    let s1 = or_report!(law, cfg.seed, str_nat(a1));
    let parts = horizontal(&s2, &s1);
    let objects = StrObject::all_up_to(&base.objects, cfg.max_seq_len);
    compare_nats(law, &whole, &parts, &objects, cfg.seed)
}

/// `(α2 * α1)_q = (α2)_q * (α1)_q` on `(C1)_q`.
pub fn q_horizontal_law<A2, A1>(
    law: &str,
    a2: &A2,
    a1: &A1,
    base: &Universe<Src<A1::From>>,
    cfg: &SuiteConfig,
) -> LawReport
where
    A1: MonoidalNat,
    A2: MonoidalNat,
    A2::From: MonoidalFunctor<Source = Tgt<A1::From>>,
    Src<A1::From>: Clone,
    Tgt<A1::From>: Clone,
    Tgt<A2::From>: Clone,
{
    let h = horizontal(a2, a1);
    let whole = or_report!(law, cfg.seed, q_nat(&h));
    let q2 = or_report!(law, cfg.seed, q_nat(a2));
    let q1 = or_report!(law, cfg.seed, q_nat(a1));
    let parts = horizontal(&q2, &q1);
    let objects = QObject::all_up_to(&base.objects, cfg.max_leaves);
    compare_nats(law, &whole, &parts, &objects, cfg.seed)
}

/// `Id^str = Id`, `(id_F)^str = id_{F^str}`, and the same for `(-)_q`.
pub fn identity_laws<F>(name: &str, f: &F, base: &Universe<F::Source>, cfg: &SuiteConfig) -> Vec<LawReport>
where
    F: MonoidalFunctor,
    F::Source: Clone,
    F::Target: Clone,
{
    let c = f.source().clone();
    let mut out = Vec::new();

    let law = format!("str identity functor on {name}");
    out.push(match str_functor(IdentityFunctor::new(c.clone())) {
        Ok(id_str) => {
            let s = Strictification::new(c.clone());
            let u = str_universe(&s, base, cfg.max_seq_len);
            compare_functors(&law, &id_str, &IdentityFunctor::new(s), &u, cfg.seed)
        }
        Err(e) => errored(&law, cfg.seed, e),
    });

    let law = format!("q identity functor on {name}");
    out.push(match q_functor(IdentityFunctor::new(c.clone())) {
        Ok(id_q) => {
            let q = NonStrictification::new(c.clone());
            let u = q_universe(&q, base, cfg.max_leaves);
            compare_functors(&law, &id_q, &IdentityFunctor::new(q), &u, cfg.seed)
        }
        Err(e) => errored(&law, cfg.seed, e),
    });

    let law = format!("str identity transformation on {name}");
    out.push((|| {
        let id = IdentityNat::new(f);
        let lifted = or_report!(&law, cfg.seed, str_nat(&id));
        let target = IdentityNat::new(or_report!(&law, cfg.seed, str_functor(f)));
        let objects = StrObject::all_up_to(&base.objects, cfg.max_seq_len);
        compare_nats(&law, &lifted, &target, &objects, cfg.seed)
    })());

    let law = format!("q identity transformation on {name}");
    out.push((|| {
        let id = IdentityNat::new(f);
        let lifted = or_report!(&law, cfg.seed, q_nat(&id));
        let target = IdentityNat::new(or_report!(&law, cfg.seed, q_functor(f)));
        let objects = QObject::all_up_to(&base.objects, cfg.max_leaves);
        compare_nats(&law, &lifted, &target, &objects, cfg.seed)
    })());
    out
}

/// Round trips of the lifting bijection along `i` for a strong `F: C → D`
/// into a strict `D`: `lift(G ∘ i) = G` for the strict `G = Par ∘ F^str`,
/// and `lift(F) ∘ i = F`. Also checks that the lift is a strict monoidal
/// functor.
pub fn str_round_trips<F>(name: &str, f: &F, base: &Universe<F::Source>, cfg: &SuiteConfig) -> Vec<LawReport>
where
    F: MonoidalFunctor,
    F::Source: Clone,
    F::Target: Clone,
{
    let c = f.source().clone();
    let d = f.target().clone();
    let mut out = Vec::new();

    let law = format!("str round trip lift(G i) = G for {name}");
    out.push((|| {
        let fs = or_report!(&law, cfg.seed, str_functor(f));
        let g = compose_functors(ParFunctor::new(d.clone()), fs);
        let lifted = or_report!(&law, cfg.seed, lift_strict(compose_functors(&g, Embedding::new(c.clone()))));
        let u = str_universe(g.source(), base, cfg.max_seq_len);
        compare_functors(&law, &lifted, &g, &u, cfg.seed)
    })());

    let law = format!("str round trip lift(F) i = F for {name}");
    out.push((|| {
        let lifted = or_report!(&law, cfg.seed, lift_strict(f));
        let back = compose_functors(&lifted, Embedding::new(c.clone()));
        compare_functors(&law, &back, f, base, cfg.seed)
    })());

    let law = format!("str lift of {name} is monoidal");
    out.push((|| {
        let lifted = or_report!(&law, cfg.seed, lift_strict(f));
        let u = str_universe(lifted.source(), base, cfg.max_seq_len);
        check_monoidal_functor(&law, &lifted, &u, cfg)
    })());
    out
}

/// The same round trips along `j` into a non-strict `D`, with
/// `G = Par_q ∘ F_q`.
pub fn q_round_trips<F>(name: &str, f: &F, base: &Universe<F::Source>, cfg: &SuiteConfig) -> Vec<LawReport>
where
    F: MonoidalFunctor,
    F::Source: Clone,
    F::Target: Clone,
{
    let c = f.source().clone();
    let d = f.target().clone();
    let mut out = Vec::new();

    let law = format!("q round trip lift(G j) = G for {name}");
    out.push((|| {
        let fq = or_report!(&law, cfg.seed, q_functor(f));
        let g = compose_functors(ParQ::new(d.clone()), fq);
        let lifted = or_report!(&law, cfg.seed, lift_nonstrict(compose_functors(&g, EmbeddingQ::new(c.clone()))));
        let u = q_universe(g.source(), base, cfg.max_leaves);
        compare_functors(&law, &lifted, &g, &u, cfg.seed)
    })());

    let law = format!("q round trip lift(F) j = F for {name}");
    out.push((|| {
        let lifted = or_report!(&law, cfg.seed, lift_nonstrict(f));
        let back = compose_functors(&lifted, EmbeddingQ::new(c.clone()));
        compare_functors(&law, &back, f, base, cfg.seed)
    })());

    let law = format!("q lift of {name} is monoidal");
    out.push((|| {
        let lifted = or_report!(&law, cfg.seed, lift_nonstrict(f));
        let u = q_universe(lifted.source(), base, cfg.max_leaves);
        check_monoidal_functor(&law, &lifted, &u, cfg)
    })());
    out
}

/// Naturality of the bijection in the source: `F ∘ H = F̂ ∘ H^str ∘ i₂`.
pub fn str_naturality_law<H, F>(
    law: &str,
    h: &H,
    f: &F,
    base: &Universe<H::Source>,
    cfg: &SuiteConfig,
) -> LawReport
where
    H: MonoidalFunctor,
    F: MonoidalFunctor<Source = H::Target>,
    H::Source: Clone,
    H::Target: Clone,
{
    let direct = compose_functors(f, h);
    let lifted = or_report!(law, cfg.seed, lift_strict(f));
    let hs = or_report!(law, cfg.seed, str_functor(h));
    let via = compose_functors(&lifted, compose_functors(hs, Embedding::new(h.source().clone())));
    compare_functors(law, &direct, &via, base, cfg.seed)
}

/// `F ∘ H = F̂ ∘ H_q ∘ j₂`.
pub fn q_naturality_law<H, F>(
    law: &str,
    h: &H,
    f: &F,
    base: &Universe<H::Source>,
    cfg: &SuiteConfig,
) -> LawReport
where
    H: MonoidalFunctor,
    F: MonoidalFunctor<Source = H::Target>,
    H::Source: Clone,
    H::Target: Clone,
{
    let direct = compose_functors(f, h);
    let lifted = or_report!(law, cfg.seed, lift_nonstrict(f));
    let hq = or_report!(law, cfg.seed, q_functor(h));
    let via = compose_functors(&lifted, compose_functors(hq, EmbeddingQ::new(h.source().clone())));
    compare_functors(law, &direct, &via, base, cfg.seed)
}

/// `ε^str i₂ = i₁ ε`: the component of `ε^str` at `(X)` is `i₁(ε_X)`.
pub fn str_whisker_law<A>(law: &str, eps: &A, base: &Universe<Src<A::From>>, cfg: &SuiteConfig) -> LawReport
where
    A: MonoidalNat,
    Src<A::From>: Clone,
    Tgt<A::From>: Clone,
{
    let lifted = or_report!(law, cfg.seed, str_nat(eps));
    let target = Strictification::new(eps.from().target().clone());
    let mut report = LawReport::new(law, cfg.seed);
    for x in &base.objects {
        report.check_sides(
            &target,
            || format!("component {}", eps.from().source().obj_label(x)),
            lifted
                .component(&StrObject::single(x.clone()))
                .and_then(|l| Ok((l, target.embed_i_mor(&eps.component(x)?)))),
        );
    }
    report
}

/// `ε_q j₂ = j₁ ε`.
pub fn q_whisker_law<A>(law: &str, eps: &A, base: &Universe<Src<A::From>>, cfg: &SuiteConfig) -> LawReport
where
    A: MonoidalNat,
    Src<A::From>: Clone,
    Tgt<A::From>: Clone,
{
    let lifted = or_report!(law, cfg.seed, q_nat(eps));
    let target = NonStrictification::new(eps.from().target().clone());
    let mut report = LawReport::new(law, cfg.seed);
    for x in &base.objects {
        report.check_sides(
            &target,
            || format!("component {}", eps.from().source().obj_label(x)),
            lifted
                .component(&QObject::single(x.clone()))
                .and_then(|l| Ok((l, target.embed_j_mor(&eps.component(x)?)))),
        );
    }
    report
}

/// `α̂ i = α`, and `α̂` is a monoidal natural transformation on `C^str`.
pub fn str_nat_lift_laws<A>(name: &str, alpha: &A, base: &Universe<Src<A::From>>, cfg: &SuiteConfig) -> Vec<LawReport>
where
    A: MonoidalNat,
    Src<A::From>: Clone,
{
    let law = format!("str lifted transformation restricts to {name}");
    let restricts = (|| {
        let lifted = or_report!(&law, cfg.seed, lift_nat_strict(alpha));
        let d = alpha.from().target();
        let mut report = LawReport::new(&law, cfg.seed);
        for x in &base.objects {
            report.check_sides(
                d,
                || format!("component {}", alpha.from().source().obj_label(x)),
                lifted
                    .component(&StrObject::single(x.clone()))
                    .and_then(|l| Ok((l, alpha.component(x)?))),
            );
        }
        report
    })();
    let law = format!("str lifted transformation {name} is monoidal");
    let monoidal = (|| {
        let lifted = or_report!(&law, cfg.seed, lift_nat_strict(alpha));
        let u = str_universe(lifted.from().source(), base, cfg.max_seq_len);
        check_monoidal_nat_on(&law, &lifted, &u, cfg.seed)
    })();
    vec![restricts, monoidal]
}

/// `α̂ j = α`, and `α̂` is a monoidal natural transformation on `C_q`.
pub fn q_nat_lift_laws<A>(name: &str, alpha: &A, base: &Universe<Src<A::From>>, cfg: &SuiteConfig) -> Vec<LawReport>
where
    A: MonoidalNat,
    Src<A::From>: Clone,
{
    let law = format!("q lifted transformation restricts to {name}");
    let restricts = (|| {
        let lifted = or_report!(&law, cfg.seed, lift_nat_nonstrict(alpha));
        let d = alpha.from().target();
        let mut report = LawReport::new(&law, cfg.seed);
        for x in &base.objects {
            report.check_sides(
                d,
                || format!("component {}", alpha.from().source().obj_label(x)),
                lifted
                    .component(&QObject::single(x.clone()))
                    .and_then(|l| Ok((l, alpha.component(x)?))),
            );
        }
        report
    })();
    let law = format!("q lifted transformation {name} is monoidal");
    let monoidal = (|| {
        let lifted = or_report!(&law, cfg.seed, lift_nat_nonstrict(alpha));
        let u = q_universe(lifted.from().source(), base, cfg.max_leaves);
        check_monoidal_nat_on(&law, &lifted, &u, cfg.seed)
    })();
    vec![restricts, monoidal]
}

/// Every object and morphism of a fixture table.
fn full<C: MonoidalCategory>(c: &C) -> Universe<C> {
    Universe::full(c).expect("fixture tables are finite")
}

/// The thin model on `1`, `x` and `(x y)`, with all morphisms among them.
pub fn thin_base() -> Universe<FreeThinModel> {
    let labels = [Generator::new("x"), Generator::new("y")];
    let objects = FreeThinModel::labelled_up_to(2, &labels).expect("labels are nonempty");
    let morphisms: Vec<ThinMor> = FreeThinModel::morphisms_among(&objects);
    Universe { objects, morphisms }
}

/// Dimensions 1 and 2 with identities and one seeded matrix per pair.
pub fn matrix_base(seed: u64) -> Universe<MatrixModCategory> {
    matrix_universe(&MatrixModCategory::default(), 2, 1, seed)
}

/// The category axioms on every shipped model: `trivial`, `ns2`, the thin
/// model on shapes with at most `cfg.max_leaves + 2` leaves, and matrices of
/// dimension at most 3.
pub fn run_axiom_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let named = |mut r: LawReport, name: &str| {
        r.law = format!("axioms {name}");
        r
    };
    let thin = thin_universe(cfg.max_leaves + 2, cfg.max_leaves + 1);
    let m = MatrixModCategory::default();
    vec![
        named(validate_with_seed(&fixtures::trivial(), &full(&fixtures::trivial()), cfg.seed), "trivial"),
        named(validate_with_seed(&fixtures::ns2(), &full(&fixtures::ns2()), cfg.seed), "ns2"),
        named(validate_with_seed(&FreeThinModel::new(), &thin, cfg.seed), "thin"),
        named(validate_with_seed(&m, &matrix_universe(&m, 3, 1, cfg.seed), cfg.seed), "matrix"),
    ]
}

/// The 2-functor laws of `(-)^str` and `(-)_q` on every composable pair of
/// fixture functors and transformations, and the identity laws.
pub fn run_2functor_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let trivial = full(&fixtures::trivial());
    let ns2 = full(&fixtures::ns2());
    let thin = thin_base();
    let (f1, f2, g2) = (fixtures::trivial_to_ns2_f(), fixtures::ns2_f(), fixtures::ns2_g());
    let k = fixtures::ns2_to_matrix_k();
    let (relabel, to_mat) = (fixtures::thin_relabel(), fixtures::thin_to_matrix());
    let (a1, a2, kappa) = (fixtures::trivial_alpha(), fixtures::ns2_alpha(), fixtures::matrix_kappa());

    let mut out = vec![
        str_composition_law("str composition F2 F1 (trivial -> ns2 -> ns2)", &f2, &f1, &trivial, cfg),
        str_composition_law("str composition G2 F2 (ns2 -> ns2 -> ns2)", &g2, &f2, &ns2, cfg),
        str_composition_law("str composition K F2 (ns2 -> ns2 -> matrix)", &k, &f2, &ns2, cfg),
        str_composition_law("str composition T R (thin -> thin -> matrix)", &to_mat, &relabel, &thin, cfg),
        q_composition_law("q composition F2 F1 (trivial -> ns2 -> ns2)", &f2, &f1, &trivial, cfg),
        q_composition_law("q composition G2 F2 (ns2 -> ns2 -> ns2)", &g2, &f2, &ns2, cfg),
        q_composition_law("q composition K F2 (ns2 -> ns2 -> matrix)", &k, &f2, &ns2, cfg),
        q_composition_law("q composition T R (thin -> thin -> matrix)", &to_mat, &relabel, &thin, cfg),
        str_horizontal_law("str horizontal a2 * a1 (trivial -> ns2 -> ns2)", &a2, &a1, &trivial, cfg),
        str_horizontal_law("str horizontal kappa * a2 (ns2 -> ns2 -> matrix)", &kappa, &a2, &ns2, cfg),
        q_horizontal_law("q horizontal a2 * a1 (trivial -> ns2 -> ns2)", &a2, &a1, &trivial, cfg),
        q_horizontal_law("q horizontal kappa * a2 (ns2 -> ns2 -> matrix)", &kappa, &a2, &ns2, cfg),
    ];
    out.extend(identity_laws("trivial", &f1, &trivial, cfg));
    out.extend(identity_laws("ns2", &f2, &ns2, cfg));
    out.extend(identity_laws("thin", &relabel, &thin, cfg));
    out
}

/// The lifting bijection along `i` into strict targets: both round trips,
/// naturality in the source, the whiskering identity, and the 2-cell lift.
pub fn run_adjunction_suite_str(cfg: &SuiteConfig) -> Vec<LawReport> {
    let trivial = full(&fixtures::trivial());
    let ns2 = full(&fixtures::ns2());
    let thin = thin_base();
    let mat = matrix_base(cfg.seed);
    let m = MatrixModCategory::default();
    let (f1, f2) = (fixtures::trivial_to_ns2_f(), fixtures::ns2_f());
    let (k, k2) = (fixtures::ns2_to_matrix_k(), fixtures::ns2_to_matrix_k2());
    let (relabel, to_mat) = (fixtures::thin_relabel(), fixtures::thin_to_matrix());
    let kf1 = compose_functors(&k, &f1);
    let id_mat = IdentityFunctor::new(m);

    let mut out = Vec::new();
    out.extend(str_round_trips("K", &k, &ns2, cfg));
    out.extend(str_round_trips("K'", &k2, &ns2, cfg));
    out.extend(str_round_trips("K F1", &kf1, &trivial, cfg));
    out.extend(str_round_trips("T", &to_mat, &thin, cfg));
    // Tensor products of long matrix sequences grow as 2^n; keep them short.
    let short = SuiteConfig {
        max_seq_len: cfg.max_seq_len.min(2),
        ..*cfg
    };
    out.extend(str_round_trips("Id(matrix)", &id_mat, &mat, &short));
    out.push(str_naturality_law("str naturality K F2 = K^ F2^str i", &f2, &k, &ns2, cfg));
    out.push(str_naturality_law("str naturality K F1 = K^ F1^str i", &f1, &k, &trivial, cfg));
    out.push(str_naturality_law("str naturality T R = T^ R^str i", &relabel, &to_mat, &thin, cfg));
    out.push(str_naturality_law("str naturality Id Id (matrix)", &id_mat, &id_mat, &mat, cfg));
    out.push(str_whisker_law("str whiskering a2^str i = i a2", &fixtures::ns2_alpha(), &ns2, cfg));
    out.push(str_whisker_law("str whiskering a1^str i = i a1", &fixtures::trivial_alpha(), &trivial, cfg));
    out.extend(str_nat_lift_laws("kappa", &fixtures::matrix_kappa(), &ns2, cfg));
    out
}

/// The lifting bijection along `j` into non-strict targets.
pub fn run_adjunction_suite_q(cfg: &SuiteConfig) -> Vec<LawReport> {
    let trivial = full(&fixtures::trivial());
    let ns2 = full(&fixtures::ns2());
    let (f1, g1) = (fixtures::trivial_to_ns2_f(), fixtures::trivial_to_ns2_g());
    let (f2, g2) = (fixtures::ns2_f(), fixtures::ns2_g());
    let id_ns2 = IdentityFunctor::new(fixtures::ns2());

    let mut out = Vec::new();
    out.extend(q_round_trips("F2", &f2, &ns2, cfg));
    out.extend(q_round_trips("G2", &g2, &ns2, cfg));
    out.extend(q_round_trips("F1", &f1, &trivial, cfg));
    out.extend(q_round_trips("G1", &g1, &trivial, cfg));
    out.extend(q_round_trips("Id(ns2)", &id_ns2, &ns2, cfg));
    out.push(q_naturality_law("q naturality G2 F2 = G2^ F2_q j", &f2, &g2, &ns2, cfg));
    out.push(q_naturality_law("q naturality F2 F1 = F2^ F1_q j", &f1, &f2, &trivial, cfg));
    out.push(q_naturality_law("q naturality Id Id (ns2)", &id_ns2, &id_ns2, &ns2, cfg));
    out.push(q_whisker_law("q whiskering a2_q j = j a2", &fixtures::ns2_alpha(), &ns2, cfg));
    out.push(q_whisker_law("q whiskering a1_q j = j a1", &fixtures::trivial_alpha(), &trivial, cfg));
    out.extend(q_nat_lift_laws("a2", &fixtures::ns2_alpha(), &ns2, cfg));
    out.extend(q_nat_lift_laws("a1", &fixtures::trivial_alpha(), &trivial, cfg));
    out
}

/// Terms on generators `x1, x2, ..` for every shape with `1..=max` leaves.
pub fn labelled_terms(max: usize) -> Vec<MagmaTerm> {
    (1..=max)
        .flat_map(|n| {
            let labels: Vec<Generator> = (1..=n).map(|i| Generator::new(&format!("x{i}"))).collect();
            crate::terms::Shape::all_with_leaves(n)
                .into_iter()
                .map(move |s| MagmaTerm::from_shape(&s, &labels).expect("labels match leaves"))
        })
        .collect()
}
