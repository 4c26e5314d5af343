use moncatkit::axioms::compose_functors;
use moncatkit::fixtures;
use moncatkit::functor::{FnFunctor, IdentityFunctor, MonoidalFunctor, MutatedFunctor, Strength};
use moncatkit::laws::{
    compare_functors, run_2functor_suite, run_adjunction_suite_q, run_adjunction_suite_str,
    str_composition_law, str_universe, q_universe, LawReport, SuiteConfig,
};
use moncatkit::models::{MatrixModCategory, TableCategory, Universe};
use moncatkit::nonstrictify::{lift_nonstrict, q_functor, EmbeddingQ};
use moncatkit::strictify::{lift_strict, str_functor, Embedding};
use moncatkit::{CatError, MonoidalCategory};

fn all_pass(reports: &[LawReport]) {
    for r in reports {
        assert!(r.passed(), "{r}: {:?}", r.failures.first());
        assert!(r.universe_size > 0, "{r} checked nothing");
    }
}

fn ns2_universe() -> Universe<TableCategory> {
    Universe::full(&fixtures::ns2()).unwrap()
}

#[test]
fn two_functor_suite_passes() {
    all_pass(&run_2functor_suite(&SuiteConfig::default()));
}

#[test]
fn adjunction_suites_pass() {
    let cfg = SuiteConfig::default();
    all_pass(&run_adjunction_suite_str(&cfg));
    all_pass(&run_adjunction_suite_q(&cfg));
}

#[test]
fn identity_chain_composes() {
    let id = IdentityFunctor::new(fixtures::ns2());
    let r = str_composition_law("id id", &id, &id, &ns2_universe(), &SuiteConfig::default());
    assert!(r.passed());
}

#[test]
fn corrupted_str_image_is_caught_and_named() {
    let (f1, f2) = (fixtures::trivial_to_ns2_f(), fixtures::ns2_f());
    let trivial = Universe::full(&fixtures::trivial()).unwrap();
    let cfg = SuiteConfig::default();
    let whole = str_functor(compose_functors(&f2, &f1)).unwrap();
    let ns2 = fixtures::ns2();
    let i1 = ns2.morphism("I1").unwrap();
    let corrupted = MutatedFunctor::new(str_functor(&f2).unwrap(), move |m, mut v| {
        if m.dom.len() == 2 {
            v.payload = ns2.compose(&i1, &v.payload)?;
        }
        Ok(v)
    });
    let parts = compose_functors(corrupted, str_functor(&f1).unwrap());
    let u = str_universe(whole.source(), &trivial, cfg.max_seq_len);
    let r = compare_functors("corrupted", &whole, &parts, &u, cfg.seed);
    assert!(!r.passed());
    // every failure is an arrow out of, or a γ landing on, the length-2 sequence
    for f in &r.failures {
        assert!(f.left.starts_with("[I, I] ->"), "{f:?}");
    }
    assert!(r.failures.iter().any(|f| f.instance.starts_with("arrow [I, I]")));
}

#[test]
fn perturbed_str_image_breaks_naturality() {
    let (h, k) = (fixtures::ns2_f(), fixtures::ns2_to_matrix_k());
    let ns2 = fixtures::ns2();
    let a1 = ns2.morphism("A1").unwrap();
    let perturbed = MutatedFunctor::new(str_functor(&h).unwrap(), move |m, mut v| {
        if &*m.payload.id == "A1" {
            v.payload = ns2.compose(&a1, &v.payload)?;
        }
        Ok(v)
    });
    let lifted = lift_strict(&k).unwrap();
    let via = compose_functors(&lifted, compose_functors(perturbed, Embedding::new(fixtures::ns2())));
    let r = compare_functors("perturbed", &compose_functors(&k, &h), &via, &ns2_universe(), 0);
    assert_eq!(r.failures.len(), 1);
    assert!(r.failures[0].instance.contains("A1"));
}

#[test]
fn perturbed_q_image_breaks_naturality() {
    let (h, f) = (fixtures::ns2_f(), fixtures::ns2_g());
    let ns2 = fixtures::ns2();
    let a2 = ns2.morphism("A2").unwrap();
    let perturbed = MutatedFunctor::new(q_functor(&h).unwrap(), move |m, mut v| {
        if &*m.payload.id == "A0" && m.dom.len() == 1 {
            v.payload = ns2.compose(&a2, &v.payload)?;
        }
        Ok(v)
    });
    let lifted = lift_nonstrict(&f).unwrap();
    let via = compose_functors(&lifted, compose_functors(perturbed, EmbeddingQ::new(fixtures::ns2())));
    let r = compare_functors("perturbed", &compose_functors(&f, &h), &via, &ns2_universe(), 0);
    assert!(!r.passed());
}

#[test]
fn lifts_check_strictness_of_the_target() {
    let k = fixtures::ns2_to_matrix_k();
    let f = fixtures::ns2_f();
    assert!(matches!(lift_strict(&f), Err(CatError::StrictnessMismatch(_))));
    assert!(matches!(lift_nonstrict(&k), Err(CatError::StrictnessMismatch(_))));
    assert!(moncatkit::nonstrictify::lift_nonstrict_unchecked(&k).is_ok());
}

#[test]
fn lax_functors_do_not_lift() {
    let m = MatrixModCategory::default();
    let one = m.scalar(1);
    let (o1, o2, o3) = (one.clone(), one.clone(), one);
    let lax: FnFunctor<MatrixModCategory, MatrixModCategory> = FnFunctor {
        source: m.clone(),
        target: m,
        strength: Strength::Lax,
        obj: Box::new(|_| Ok(1)),
        mor: Box::new(move |_| Ok(o1.clone())),
        gamma: Box::new(move |_, _| Ok(o2.clone())),
        gamma_inv: Box::new(|_, _| unreachable!()),
        unit: Box::new(move || Ok(o3.clone())),
        unit_inv: Box::new(|| unreachable!()),
    };
    assert!(matches!(lift_strict(&lax), Err(CatError::Precondition(_))));
    assert!(matches!(str_functor(&lax), Err(CatError::Precondition(_))));
}

#[test]
fn q_universe_counts_objects() {
    let q = moncatkit::nonstrictify::NonStrictification::new(fixtures::ns2());
    let u = q_universe(&q, &ns2_universe(), 2);
    // (∅,1); 2 singletons; 4 pairs
    assert_eq!(u.objects.len(), 7);
}

#[test]
fn reports_are_deterministic_and_echo_the_seed() {
    let cfg = SuiteConfig {
        seed: 17,
        ..SuiteConfig::default()
    };
    let a = serde_json::to_string(&run_adjunction_suite_str(&cfg)).unwrap();
    let b = serde_json::to_string(&run_adjunction_suite_str(&cfg)).unwrap();
    assert_eq!(a, b);
    let reports: Vec<LawReport> = serde_json::from_str(&a).unwrap();
    assert!(reports.iter().all(|r| r.seed == 17));
    let value: serde_json::Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&str> = value[0].as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["failures", "law", "seed", "universe_size"]);
}
