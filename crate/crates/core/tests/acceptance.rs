//! The acceptance gate. Each criterion runs against its time bound and
//! prints one `criterion N: pass` or `criterion N: FAIL` line.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use moncatkit::axioms::{
    check_pentagon, check_triangle, functoriality_sides, gamma_naturality_sides, identity_sides,
};
use moncatkit::fixtures;
use moncatkit::functor::{compose_functors, IdentityFunctor, MonoidalFunctor, MutatedFunctor, Src, Tgt};
use moncatkit::laws::{
    check_monoidal_functor, compare_functors, labelled_terms, matrix_base, q_nat_lift_laws,
    q_round_trips, q_universe, run_2functor_suite, run_adjunction_suite_q,
    run_adjunction_suite_str, run_axiom_suite, str_nat_lift_laws, str_round_trips, str_universe,
    thin_base, LawReport, SuiteConfig,
};
use moncatkit::models::{
    matrix_universe, FreeThinModel, Matrix, MatrixModCategory, TableCategory, TableMor, ThinMor,
    Universe,
};
use moncatkit::nonstrictify::{
    lift_nonstrict, lift_nonstrict_unchecked, q_functor, EmbeddingQ, NonStrictification, ParQ,
    QObject, TildeQ,
};
use moncatkit::strictify::{lift_strict, StrObject, Strictification, TildeStr};
use moncatkit::trace::{coherence, replay, validate_trace, Traced, TracedMor};
use moncatkit::{Generator, MagmaTerm, MonoidalCategory, Mor, Shape, Word};

type Outcome = Result<(), String>;

fn e<T>(r: moncatkit::Result<T>) -> Result<T, String> {
    r.map_err(|err| err.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(reports: &[LawReport]) -> Outcome {
    for r in reports {
        ensure(r.passed(), || format!("{r}: {:?}", r.failures.first()))?;
        ensure(r.universe_size > 0, || format!("{r} checked nothing"))?;
    }
    Ok(())
}

fn letters(n: usize) -> Vec<Generator> {
    (1..=n).map(|i| Generator::new(&format!("x{i}"))).collect()
}

/// Every sequence of terms on `x1 .. xn` in order, for `n ≤ max`, with each
/// entry of any shape.
fn labelled_sequences(max: usize) -> Vec<StrObject<MagmaTerm>> {
    fn go(labels: &[Generator], acc: &mut Vec<MagmaTerm>, out: &mut Vec<StrObject<MagmaTerm>>) {
        if labels.is_empty() {
            out.push(StrObject::new(acc.clone()));
            return;
        }
        for k in 1..=labels.len() {
            for shape in Shape::all_with_leaves(k) {
                acc.push(MagmaTerm::from_shape(&shape, &labels[..k]).expect("leaf count matches"));
                go(&labels[k..], acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    for n in 0..=max {
        go(&letters(n), &mut Vec::new(), &mut out);
    }
    out
}

/// Words over `{x, y}` of length at most `max`.
fn words(max: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut last = vec![Word::empty()];
    for _ in 0..max {
        last = last
            .iter()
            .flat_map(|w| ["x", "y"].map(|l| w.concat(&Word::from_letters([l]))))
            .collect();
        out.extend(last.iter().cloned());
    }
    out
}

fn criterion_1() -> Outcome {
    // the thin model is checked on shapes with up to max_leaves + 2 = 5 leaves
    let cfg = SuiteConfig {
        max_leaves: 3,
        ..SuiteConfig::default()
    };
    all_pass(&run_axiom_suite(&cfg))?;
    let five = FreeThinModel::shapes_up_to(5)
        .into_iter()
        .filter(|v| v.leaf_count() == 5)
        .count();
    ensure(five == 14, || format!("{five} five-leaf shapes"))
}

/// Strict associativity and unitality of `*` on every triple of sequences of
/// length ≤ 4, identity structural maps on triples of total length ≤ 4, and
/// associativity of `*` on arrows of the embedded generators.
fn str_strictness<C: MonoidalCategory + Clone>(name: &str, c: C, objects: &[C::Obj], gens: &[C::Mor]) -> Outcome {
    let s = Strictification::new(c);
    ensure(s.is_strict(), || format!("{name}: C^str reports non-strict"))?;
    let seqs = StrObject::all_up_to(objects, 4);
    let empty = StrObject::empty();
    for a in &seqs {
        ensure(
            s.star_objects(a, &empty) == *a && s.star_objects(&empty, a) == *a,
            || format!("{name}: unit law at {a:?}"),
        )?;
        for b in &seqs {
            let ab = s.star_objects(a, b);
            for c3 in &seqs {
                ensure(
                    s.star_objects(&ab, c3) == s.star_objects(a, &s.star_objects(b, c3)),
                    || format!("{name}: associativity at {a:?} {b:?} {c3:?}"),
                )?;
            }
        }
    }
    for a in seqs.iter().filter(|a| a.len() <= 4) {
        let l = e(s.lunitor(a))?;
        let r = e(s.runitor(a))?;
        ensure(e(s.is_identity(&l))? && e(s.is_identity(&r))?, || format!("{name}: unitor at {a:?}"))?;
        for b in seqs.iter().filter(|b| a.len() + b.len() <= 4) {
            for c3 in seqs.iter().filter(|c3| a.len() + b.len() + c3.len() <= 4) {
                let m = e(s.associator(a, b, c3))?;
                ensure(m.dom == m.cod && e(s.is_identity(&m))?, || {
                    format!("{name}: associator at {a:?} {b:?} {c3:?}")
                })?;
            }
        }
    }
    let arrows: Vec<_> = gens.iter().map(|f| s.embed_i_mor(f)).collect();
    let id_empty = e(s.identity(&empty))?;
    for f in &arrows {
        ensure(
            s.mor_eq(&e(s.star_arrows(f, &id_empty))?, f) && s.mor_eq(&e(s.star_arrows(&id_empty, f))?, f),
            || format!("{name}: unit law at {}", s.mor_label(f)),
        )?;
        for g in &arrows {
            let fg = e(s.star_arrows(f, g))?;
            for h in &arrows {
                let left = e(s.star_arrows(&fg, h))?;
                let right = e(s.star_arrows(f, &e(s.star_arrows(g, h))?))?;
                ensure(s.mor_eq(&left, &right), || {
                    format!("{name}: associativity at {} {} {}", s.mor_label(f), s.mor_label(g), s.mor_label(h))
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let trivial = fixtures::trivial();
    let t = e(Universe::full(&trivial))?;
    str_strictness("trivial", trivial, &t.objects, &t.morphisms)?;
    let ns2 = fixtures::ns2();
    let n = e(Universe::full(&ns2))?;
    str_strictness("ns2", ns2, &n.objects, &n.morphisms)?;
    let thin_objects: Vec<MagmaTerm> = ["x", "y", "(x y)"].iter().map(|s| s.parse().unwrap()).collect();
    let thin_arrows = FreeThinModel::morphisms_among(&thin_objects);
    str_strictness("thin", FreeThinModel::new(), &thin_objects, &thin_arrows)?;
    let m = MatrixModCategory::default();
    let mu = matrix_universe(&m, 3, 1, 0);
    str_strictness("matrix", m, &mu.objects, &mu.morphisms)
}

fn criterion_3() -> Outcome {
    let m = MatrixModCategory::default();
    ensure(m.is_strict(), || "matrix model is not strict".into())?;
    let q = NonStrictification::new(m);
    ensure(!q.is_strict(), || "C_q reports strict".into())?;
    let nonempty: Vec<QObject<usize>> = QObject::all_up_to(&[1, 2], 3)
        .into_iter()
        .filter(|o| !o.is_empty())
        .collect();
    let mut triples = 0;
    for a in &nonempty {
        for b in &nonempty {
            for c in nonempty.iter().filter(|c| a.len() + b.len() + c.len() <= 5) {
                let assoc = e(q.assoc_q(a, b, c))?;
                ensure(assoc.dom != assoc.cod, || format!("a_q has equal endpoints at {a:?} {b:?} {c:?}"))?;
                triples += 1;
            }
        }
    }
    ensure(triples > 0, || "no triples".into())?;
    let all = QObject::all_up_to(&[2], 5);
    for a in &all {
        for b in all.iter().filter(|b| a.len() + b.len() <= 5) {
            ensure(e(check_triangle(&q, a, b))?, || format!("triangle at {a:?} {b:?}"))?;
            for c in all.iter().filter(|c| a.len() + b.len() + c.len() <= 5) {
                for d in all.iter().filter(|d| a.len() + b.len() + c.len() + d.len() <= 5) {
                    ensure(e(check_pentagon(&q, a, b, c, d))?, || {
                        format!("pentagon at {a:?} {b:?} {c:?} {d:?}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

type ThinTraced = TracedMor<MagmaTerm, ThinMor>;

/// `v → left comb` by rotating right-nested pairs with `a⁻¹` until the right
/// factor is a leaf, then normalising the left factor.
fn normalise(c: &Traced<FreeThinModel>, v: &MagmaTerm) -> moncatkit::Result<ThinTraced> {
    match v {
        MagmaTerm::Pair(l, r) => match &**r {
            MagmaTerm::Pair(r1, r2) => {
                let step = c.associator_inv(l, r1, r2)?;
                let rest = normalise(c, &c.cod(&step))?;
                c.compose(&rest, &step)
            }
            _ => c.whisker_right(&normalise(c, l)?, r),
        },
        _ => c.identity(v),
    }
}

fn check_trace(thin: &FreeThinModel, dom: &MagmaTerm, cod: &MagmaTerm, f: &ThinTraced) -> Outcome {
    ensure(e(validate_trace(thin, dom, cod, &f.trace))?, || format!("trace {dom} -> {cod} does not validate"))?;
    ensure(f.payload == e(ThinMor::between(dom, cod))?, || format!("payload of {dom} -> {cod}"))
}

fn criterion_4() -> Outcome {
    let thin = FreeThinModel::new();
    let traced = Traced::new(thin.clone());
    let s = Strictification::new(traced.clone());
    for seq in labelled_sequences(5) {
        for i in 0..=seq.len() {
            let a = StrObject::new(seq.seq[..i].to_vec());
            let b = StrObject::new(seq.seq[i..].to_vec());
            let dom = e(thin.tensor_obj(&e(s.par_seq(&a))?, &e(s.par_seq(&b))?))?;
            let cod = e(s.par_seq(&seq))?;
            check_trace(&thin, &dom, &cod, &e(s.theta(&a, &b))?)?;
            check_trace(&thin, &cod, &dom, &e(s.theta_inv(&a, &b))?)?;
        }
    }
    let r = e(TildeStr::new(traced.clone()))?;
    let mut terms = labelled_terms(5);
    terms.push(MagmaTerm::Unit);
    for v in &terms {
        let cod = e(r.strictification().par_seq(&r.seq(&v.forget_parens())))?;
        check_trace(&thin, v, &cod, &e(r.rho(v))?)?;
        check_trace(&thin, &cod, v, &e(r.rho_inv(v))?)?;
    }
    for n in 1..=5 {
        let same: Vec<&MagmaTerm> = terms.iter().filter(|v| v.leaf_count() == n).collect();
        let comb = MagmaTerm::left_comb_of(&Word(letters(n)));
        for a in &same {
            let norm = e(normalise(&traced, a))?;
            check_trace(&thin, a, &comb, &norm)?;
            let coh = e(coherence(a, &comb))?;
            ensure(
                traced.mor_eq(&norm, &coh)
                    && e(replay(&thin, a, &norm.trace))? == e(replay(&thin, a, &coh.trace))?,
                || format!("normal forms of {a} disagree"),
            )?;
            for b in &same {
                let direct = e(coherence(a, b))?;
                check_trace(&thin, a, b, &direct)?;
                let via = e(traced.compose(&e(coherence(&comb, b))?, &norm))?;
                ensure(traced.mor_eq(&direct, &via), || format!("parallel composites {a} -> {b} differ"))?;
            }
        }
    }
    Ok(())
}

/// The round trips along `j` for a functor into a strict target, through the
/// lift that skips the target strictness check.
fn q_round_trips_into_strict<F>(name: &str, f: &F, base: &Universe<F::Source>, cfg: &SuiteConfig) -> Outcome
where
    F: MonoidalFunctor,
    F::Source: Clone,
    F::Target: Clone,
{
    let c = f.source().clone();
    let lifted = e(lift_nonstrict_unchecked(f))?;
    let back = compose_functors(&lifted, EmbeddingQ::new(c.clone()));
    all_pass(&[compare_functors(&format!("q lift(F) j = F for {name}"), &back, f, base, cfg.seed)])?;
    let g = compose_functors(ParQ::new(f.target().clone()), e(q_functor(f))?);
    let lifted_g = e(lift_nonstrict_unchecked(compose_functors(&g, EmbeddingQ::new(c))))?;
    let u = q_universe(g.source(), base, cfg.max_leaves);
    all_pass(&[
        compare_functors(&format!("q lift(G j) = G for {name}"), &lifted_g, &g, &u, cfg.seed),
        check_monoidal_functor(&format!("q lift of {name}"), &lifted, &u, cfg),
    ])
}

type Mutation<F> = fn(&Tgt<F>, Mor<Tgt<F>>) -> Mor<Tgt<F>>;

/// Rewrites the lifted value of each morphism of `u` in turn and requires
/// that the factorisation through the embedding, functoriality, or
/// monoidality notices.
fn mutation_sweep<F>(
    name: &str,
    lifted: &F,
    u: &Universe<Src<F>>,
    expected: impl Fn(&Mor<Src<F>>) -> Option<Mor<Tgt<F>>>,
    mutate: Mutation<F>,
) -> Outcome
where
    F: MonoidalFunctor,
    Src<F>: Clone + 'static,
    Tgt<F>: Clone + 'static,
    Mor<Src<F>>: 'static,
    Mor<Tgt<F>>: 'static,
{
    let (c, d) = (lifted.source(), lifted.target());
    let ms = &u.morphisms;
    let canon: Vec<usize> = ms
        .iter()
        .map(|m| ms.iter().position(|x| c.mor_eq(x, m)).expect("present"))
        .collect();
    let find = |m: &Mor<Src<F>>| ms.iter().position(|x| c.mor_eq(x, m)).map(|i| canon[i]);
    let mut comps = Vec::new();
    let mut stars = Vec::new();
    for (gi, g) in ms.iter().enumerate() {
        for (fi, f) in ms.iter().enumerate() {
            if c.dom(g) == c.cod(f) {
                comps.push((gi, fi, find(&e(c.compose(g, f))?)));
            }
            stars.push((gi, fi, find(&e(c.tensor_mor(g, f))?)));
        }
    }
    let touches = |k: usize, (a, b, ab): (usize, usize, Option<usize>)| canon[a] == k || canon[b] == k || ab == Some(k);
    let mut swept = 0;
    for k in (0..ms.len()).filter(|&k| canon[k] == k) {
        let target = ms[k].clone();
        let (src, tgt) = (c.clone(), d.clone());
        let mutated = MutatedFunctor::new(lifted, move |m, v| {
            Ok(if src.mor_eq(m, &target) { mutate(&tgt, v) } else { v })
        });
        let label = || format!("{name}: mutation at {}", c.mor_label(&ms[k]));
        let changed = e(mutated.map_mor(&ms[k]))?;
        ensure(!d.mor_eq(&changed, &e(lifted.map_mor(&ms[k]))?), || format!("{} is a no-op", label()))?;
        let mut caught = expected(&ms[k]).is_some_and(|want| !d.mor_eq(&changed, &want));
        if !caught && c.dom(&ms[k]) == c.cod(&ms[k]) && e(c.is_identity(&ms[k]))? {
            let (l, r) = e(identity_sides(&mutated, &c.dom(&ms[k])))?;
            caught = !d.mor_eq(&l, &r);
        }
        for &p in comps.iter().filter(|&&p| touches(k, p)) {
            if caught {
                break;
            }
            let (l, r) = e(functoriality_sides(&mutated, &ms[p.0], &ms[p.1]))?;
            caught = !d.mor_eq(&l, &r);
        }
        for &p in stars.iter().filter(|&&p| touches(k, p)) {
            if caught {
                break;
            }
            let (l, r) = e(gamma_naturality_sides(&mutated, &ms[p.0], &ms[p.1]))?;
            caught = !d.mor_eq(&l, &r);
        }
        ensure(caught, || format!("{} went undetected", label()))?;
        swept += 1;
    }
    ensure(swept > 0, || format!("{name}: nothing to mutate"))
}

fn bump(m: &MatrixModCategory, x: Matrix) -> Matrix {
    let mut entries: Vec<i64> = x.entries().iter().map(|&v| v as i64).collect();
    entries[0] += 1;
    m.matrix(x.rows(), x.cols(), &entries).expect("same shape")
}

fn twist(c: &TableCategory, x: TableMor) -> TableMor {
    let rotate = c.morphism(&format!("{}1", c.cod(&x))).expect("ns2 has a rotation on each object");
    c.compose(&rotate, &x).expect("composable")
}

fn criterion_5() -> Outcome {
    let cfg = SuiteConfig::default();
    let trivial = e(Universe::full(&fixtures::trivial()))?;
    let ns2 = e(Universe::full(&fixtures::ns2()))?;
    let thin = thin_base();
    let mat = matrix_base(cfg.seed);
    let (f1, g1) = (fixtures::trivial_to_ns2_f(), fixtures::trivial_to_ns2_g());
    let (f2, g2) = (fixtures::ns2_f(), fixtures::ns2_g());
    let (k, k2) = (fixtures::ns2_to_matrix_k(), fixtures::ns2_to_matrix_k2());
    let (relabel, to_mat) = (fixtures::thin_relabel(), fixtures::thin_to_matrix());
    let kf1 = compose_functors(&k, &f1);
    let id_mat = IdentityFunctor::new(MatrixModCategory::default());
    let id_ns2 = IdentityFunctor::new(fixtures::ns2());
    let short = SuiteConfig {
        max_seq_len: 2,
        max_leaves: 2,
        ..cfg
    };

    // into strict targets: both lifts
    all_pass(&str_round_trips("K", &k, &ns2, &cfg))?;
    all_pass(&str_round_trips("K'", &k2, &ns2, &cfg))?;
    all_pass(&str_round_trips("K F1", &kf1, &trivial, &cfg))?;
    all_pass(&str_round_trips("T", &to_mat, &thin, &cfg))?;
    all_pass(&str_round_trips("Id(matrix)", &id_mat, &mat, &short))?;
    q_round_trips_into_strict("K", &k, &ns2, &cfg)?;
    q_round_trips_into_strict("K'", &k2, &ns2, &cfg)?;
    q_round_trips_into_strict("K F1", &kf1, &trivial, &cfg)?;
    q_round_trips_into_strict("T", &to_mat, &thin, &cfg)?;
    q_round_trips_into_strict("Id(matrix)", &id_mat, &mat, &short)?;
    // into non-strict targets: the lift along j
    all_pass(&q_round_trips("F2", &f2, &ns2, &cfg))?;
    all_pass(&q_round_trips("G2", &g2, &ns2, &cfg))?;
    all_pass(&q_round_trips("F1", &f1, &trivial, &cfg))?;
    all_pass(&q_round_trips("G1", &g1, &trivial, &cfg))?;
    all_pass(&q_round_trips("R", &relabel, &thin, &cfg))?;
    all_pass(&q_round_trips("Id(ns2)", &id_ns2, &ns2, &cfg))?;

    let lk = e(lift_strict(&k))?;
    let u = str_universe(lk.source(), &ns2, 2);
    mutation_sweep("str K", &lk, &u, |m| (m.dom.len() == 1 && m.cod.len() == 1).then(|| k.map_mor(&m.payload).unwrap()), bump)?;
    let lt = e(lift_strict(&to_mat))?;
    let u = str_universe(lt.source(), &thin, 2);
    mutation_sweep("str T", &lt, &u, |m| (m.dom.len() == 1 && m.cod.len() == 1).then(|| to_mat.map_mor(&m.payload).unwrap()), bump)?;
    for (name, f) in [("q F2", &f2), ("q G2", &g2)] {
        let lf = e(lift_nonstrict(f))?;
        let u = q_universe(lf.source(), &ns2, 2);
        mutation_sweep(name, &lf, &u, |m| (m.dom.len() == 1 && m.cod.len() == 1).then(|| f.map_mor(&m.payload).unwrap()), twist)?;
    }
    let lk = e(lift_nonstrict_unchecked(&k))?;
    let u = q_universe(lk.source(), &ns2, 2);
    mutation_sweep("q K", &lk, &u, |m| (m.dom.len() == 1 && m.cod.len() == 1).then(|| k.map_mor(&m.payload).unwrap()), bump)
}

fn criterion_6() -> Outcome {
    let cfg = SuiteConfig::default();
    let trivial = e(Universe::full(&fixtures::trivial()))?;
    let ns2 = e(Universe::full(&fixtures::ns2()))?;
    all_pass(&str_nat_lift_laws("kappa", &fixtures::matrix_kappa(), &ns2, &cfg))?;
    all_pass(&q_nat_lift_laws("a2", &fixtures::ns2_alpha(), &ns2, &cfg))?;
    all_pass(&q_nat_lift_laws("a1", &fixtures::trivial_alpha(), &trivial, &cfg))
}

fn criterion_7() -> Outcome {
    all_pass(&run_2functor_suite(&SuiteConfig::default()))
}

fn criterion_8() -> Outcome {
    for seed in [0, 17] {
        let cfg = SuiteConfig {
            seed,
            ..SuiteConfig::default()
        };
        for run in [run_adjunction_suite_str as fn(&SuiteConfig) -> Vec<LawReport>, run_adjunction_suite_q] {
            let first = run(&cfg);
            all_pass(&first)?;
            ensure(first.iter().all(|r| r.seed == seed), || format!("seed {seed} not echoed"))?;
            let a = serde_json::to_string(&first).map_err(|err| err.to_string())?;
            let b = serde_json::to_string(&run(&cfg)).map_err(|err| err.to_string())?;
            ensure(a == b, || format!("reports differ between runs with seed {seed}"))?;
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let thin = FreeThinModel::new();
    let r = e(TildeStr::new(thin.clone()))?;
    let s = r.strictification();
    let ws = words(5);
    for w in &ws {
        for w2 in ws.iter().filter(|w2| w.len() + w2.len() <= 5) {
            ensure(
                r.seq(&e(r.tensor_obj(w, w2))?) == s.star_objects(&r.seq(w), &r.seq(w2)),
                || format!("Seq({w} {w2})"),
            )?;
            let (f, g) = (e(r.identity(w))?, e(r.identity(w2))?);
            let fg = r.seq_mor(&e(r.tensor_mor(&f, &g))?);
            ensure(
                s.mor_eq(&fg, &e(s.star_arrows(&r.seq_mor(&f), &r.seq_mor(&g)))?),
                || format!("Seq(id {w} ⊗ id {w2})"),
            )?;
        }
    }
    for seq in labelled_sequences(5) {
        let w = e(r.essential_witness(&seq))?;
        let word = seq.seq.iter().fold(Word::empty(), |acc, v| acc.concat(&v.forget_parens()));
        ensure(w.dom == seq && w.cod == r.seq(&word), || format!("witness of {seq:?}"))?;
        ensure(
            w.payload.dom() == &e(s.par_seq(&seq))? && w.payload.cod() == &MagmaTerm::left_comb_of(&word),
            || format!("witness payload of {seq:?}"),
        )?;
    }
    let rt = e(TildeStr::new(Traced::new(thin.clone())))?;
    for v in labelled_terms(5) {
        let cod = MagmaTerm::left_comb_of(&v.forget_parens());
        check_trace(&thin, &v, &cod, &e(rt.rho(&v))?)?;
    }

    let rq = e(TildeQ::new(e(TildeStr::new(thin.clone()))?))?;
    let q = rq.nonstrictification();
    let mut terms = labelled_terms(5);
    terms.push(MagmaTerm::Unit);
    for v in &terms {
        for w in terms.iter().filter(|w| v.leaf_count() + w.leaf_count() <= 5) {
            ensure(
                rq.seq_q(&e(rq.tensor_obj(v, w))?) == q.star_q_objects(&rq.seq_q(v), &rq.seq_q(w)),
                || format!("Seq_q({v} {w})"),
            )?;
        }
    }
    let small: Vec<&MagmaTerm> = terms.iter().filter(|v| v.leaf_count() <= 2).collect();
    let mut arrows = Vec::new();
    for a in &small {
        arrows.push(e(rq.identity(a))?);
        for b in &small {
            for c in small.iter().filter(|c| a.leaf_count() + b.leaf_count() + c.leaf_count() <= 3) {
                arrows.push(e(rq.associator(a, b, c))?);
            }
        }
    }
    for f in &arrows {
        for g in arrows.iter().filter(|g| f.dom.leaf_count() + g.dom.leaf_count() <= 5) {
            let fg = rq.seq_q_mor(&e(rq.tensor_mor(f, g))?);
            let star = e(q.star_q_arrows(&rq.seq_q_mor(f), &rq.seq_q_mor(g)))?;
            ensure(q.mor_eq(&fg, &star), || format!("Seq_q({} ⊗ {})", rq.mor_label(f), rq.mor_label(g)))?;
        }
    }
    // entries are the words of every split of x1 .. xn, under every shape
    let mut objects = vec![QObject::empty()];
    let mut seen = HashSet::new();
    for seq in labelled_sequences(5).into_iter().filter(|s| !s.is_empty()) {
        let entries: Vec<Word> = seq.seq.iter().map(|v| v.forget_parens()).collect();
        if !seen.insert(entries.clone()) {
            continue;
        }
        for shape in Shape::all_with_leaves(entries.len()) {
            objects.push(e(QObject::new(entries.clone(), shape))?);
        }
    }
    for o in &objects {
        let w = e(rq.essential_witness(o))?;
        let word = o.seq().iter().fold(Word::empty(), |acc, x| acc.concat(x));
        ensure(
            w.dom == *o && w.cod == rq.seq_q(&MagmaTerm::left_comb_of(&word)),
            || format!("witness of {o:?}"),
        )?;
    }
    Ok(())
}

/// Number, time bound in seconds, check.
type Criterion = (u32, u64, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        (1, 5, criterion_1),
        (2, 10, criterion_2),
        (3, 10, criterion_3),
        (4, 5, criterion_4),
        (5, 10, criterion_5),
        (6, 5, criterion_6),
        (7, 5, criterion_7),
        (8, 5, criterion_8),
        (9, 5, criterion_9),
    ];
    let mut failed = 0;
    for (n, bound, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(()) if took <= Duration::from_secs(bound) => {
                println!("criterion {n}: pass ({:.2} s)", took.as_secs_f64())
            }
            Ok(()) => {
                println!("criterion {n}: FAIL (took {:.2} s, bound {bound} s)", took.as_secs_f64());
                failed += 1;
            }
            Err(msg) => {
                println!("criterion {n}: FAIL ({msg})");
                failed += 1;
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
