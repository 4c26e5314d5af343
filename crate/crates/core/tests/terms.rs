use moncatkit::models::{Matrix, MatrixModCategory};
use moncatkit::strictify::{StrObject, Strictification};
use moncatkit::{MagmaTerm, MonoidalCategory, Shape, Word};
use proptest::prelude::*;

fn term_strategy() -> impl Strategy<Value = MagmaTerm> {
    let leaf = prop_oneof![Just("x"), Just("y"), Just("z"), Just("w")].prop_map(MagmaTerm::leaf);
    leaf.prop_recursive(5, 24, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| MagmaTerm::pair(l, r).unwrap())
    })
}

fn maybe_unit() -> impl Strategy<Value = MagmaTerm> {
    prop_oneof![1 => Just(MagmaTerm::Unit), 4 => term_strategy()]
}

/// Independent count: binary trees with n leaves, by the convolution
/// recurrence rather than the closed form.
fn binary_trees(n: usize) -> usize {
    let mut t = vec![0usize; n + 1];
    if n >= 1 {
        t[1] = 1;
    }
    for k in 2..=n {
        t[k] = (1..k).map(|i| t[i] * t[k - i]).sum();
    }
    t[n]
}

#[test]
fn shape_counts_follow_the_tree_recurrence() {
    assert_eq!(Shape::all_with_leaves(0).len(), 1);
    for n in 1..=8 {
        assert_eq!(Shape::all_with_leaves(n).len(), binary_trees(n), "n = {n}");
    }
    // 1, 1, 1, 2, 5, 14 with the unit shape included
    assert_eq!(Shape::all_up_to(5).len(), 24);
}

#[test]
fn five_leaf_shapes_are_distinct() {
    let shapes = Shape::all_with_leaves(5);
    let unique: std::collections::HashSet<_> = shapes.iter().collect();
    assert_eq!(unique.len(), 14);
}

proptest! {
    #[test]
    fn render_then_parse_round_trips(v in term_strategy()) {
        let text = v.to_string();
        let back: MagmaTerm = text.parse().unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn split_then_pair_round_trips(v in term_strategy()) {
        if v.leaf_count() >= 2 {
            let (l, r) = v.split().unwrap();
            prop_assert_eq!(l.leaf_count() + r.leaf_count(), v.leaf_count());
            prop_assert_eq!(MagmaTerm::pair(l, r).unwrap(), v);
        }
    }

    #[test]
    fn collapse_and_forget_keep_leaf_count(v in maybe_unit()) {
        prop_assert_eq!(v.collapse().leaf_count(), v.leaf_count());
        prop_assert_eq!(v.forget_parens().len(), v.leaf_count());
        let relabelled = MagmaTerm::from_shape(&v.collapse(), v.forget_parens().letters()).unwrap();
        prop_assert_eq!(relabelled, v);
    }

    #[test]
    fn product_absorbs_the_unit(v in maybe_unit()) {
        prop_assert_eq!(MagmaTerm::product(&MagmaTerm::Unit, &v), v.clone());
        prop_assert_eq!(MagmaTerm::product(&v, &MagmaTerm::Unit), v);
    }

    #[test]
    fn product_reads_the_concatenated_word(v in maybe_unit(), w in maybe_unit()) {
        let vw = MagmaTerm::product(&v, &w);
        prop_assert_eq!(vw.forget_parens(), v.forget_parens().concat(&w.forget_parens()));
        let comb = MagmaTerm::left_comb_of(&vw.forget_parens());
        prop_assert_eq!(comb.forget_parens(), vw.forget_parens());
    }

    #[test]
    fn word_display_parses_back(letters in proptest::collection::vec("[a-z]", 0..6)) {
        let w = Word::from_letters(letters.iter().map(|s| s.as_str()));
        prop_assert_eq!(Word::parse(&w.to_string()), w);
    }

    #[test]
    fn star_objects_is_strictly_associative(
        a in proptest::collection::vec(1usize..4, 0..4),
        b in proptest::collection::vec(1usize..4, 0..4),
        c in proptest::collection::vec(1usize..4, 0..4),
    ) {
        let s = Strictification::new(MatrixModCategory::default());
        let (a, b, c) = (StrObject::new(a), StrObject::new(b), StrObject::new(c));
        prop_assert_eq!(
            s.star_objects(&s.star_objects(&a, &b), &c),
            s.star_objects(&a, &s.star_objects(&b, &c))
        );
        prop_assert_eq!(s.star_objects(&a, &StrObject::empty()), a);
    }

    #[test]
    fn matrix_interchange_law(
        dims in (1usize..3, 1usize..3, 1usize..3, 1usize..3, 1usize..3, 1usize..3),
        seed in any::<u64>(),
    ) {
        use rand::SeedableRng;
        let (n1, n2, n3, m1, m2, m3) = dims;
        let c = MatrixModCategory::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f: Matrix = c.random(n2, n1, &mut rng);
        let g = c.random(n3, n2, &mut rng);
        let h = c.random(m2, m1, &mut rng);
        let k = c.random(m3, m2, &mut rng);
        let left = c.tensor_mor(&c.compose(&g, &f).unwrap(), &c.compose(&k, &h).unwrap()).unwrap();
        let right = c
            .compose(&c.tensor_mor(&g, &k).unwrap(), &c.tensor_mor(&f, &h).unwrap())
            .unwrap();
        prop_assert!(c.mor_eq(&left, &right));
    }
}
