use std::time::Instant;

use moncatkit::fixtures::{self, fixture_dir};
use moncatkit::models::{
    matrix_universe, thin_universe, validate_category, FreeThinModel, LoadError,
    MatrixModCategory, TableCategory, Universe,
};
use moncatkit::MonoidalCategory;

#[test]
fn trivial_has_one_object() {
    let c = fixtures::trivial();
    assert_eq!(c.objects().unwrap().len(), 1);
    assert!(c.is_strict());
    let report = validate_category(&c, &Universe::full(&c).unwrap());
    assert!(report.passed(), "{report}");
}

#[test]
fn ns2_validates_with_nonidentity_unitors() {
    let c = fixtures::ns2();
    let i = c.object("I").unwrap();
    assert!(!c.is_identity(&c.lunitor(&i).unwrap()).unwrap());
    assert!(!c.is_strict());
    let report = validate_category(&c, &Universe::full(&c).unwrap());
    assert!(report.passed(), "{report}");
    assert!(report.universe_size > 0);
}

#[test]
fn corrupted_fixture_names_the_tuple() {
    let c = TableCategory::load(fixture_dir().join("ns2_corrupted.json")).unwrap();
    let report = validate_category(&c, &Universe::full(&c).unwrap());
    assert!(!report.passed());
    assert!(report
        .failures
        .iter()
        .any(|f| f.instance == "triangle(A,A)"), "{report}");
}

#[test]
fn missing_compose_entry_is_a_totality_error() {
    let err = TableCategory::load(fixture_dir().join("ns2_missing_compose.json")).unwrap_err();
    assert!(matches!(err, LoadError::Totality(ref m) if m.contains("A1,A2")), "{err}");
}

#[test]
fn missing_file_is_an_io_error() {
    let err = TableCategory::load(fixture_dir().join("no_such_file.json")).unwrap_err();
    assert!(matches!(err, LoadError::Io { .. }));
}

#[test]
fn malformed_json_is_a_parse_error() {
    assert!(matches!(
        TableCategory::from_json("{ not json").unwrap_err(),
        LoadError::Parse(_)
    ));
}

#[test]
fn unknown_ids_are_referential_errors() {
    let text = std::fs::read_to_string(fixture_dir().join("trivial.json")).unwrap();
    let bad = text.replace("\"unit\": \"I\"", "\"unit\": \"J\"");
    assert!(matches!(
        TableCategory::from_json(&bad).unwrap_err(),
        LoadError::Referential(_)
    ));
}

#[test]
fn save_after_load_is_byte_identical() {
    for name in ["trivial", "ns2", "ns2_corrupted"] {
        let path = fixture_dir().join(format!("{name}.json"));
        let text = std::fs::read_to_string(&path).unwrap();
        let c = TableCategory::load(&path).unwrap();
        assert_eq!(c.to_json(), text, "{name}");
    }
}

#[test]
fn thin_model_validates_up_to_five_leaves() {
    let start = Instant::now();
    let c = FreeThinModel::new();
    let u = thin_universe(5, 4);
    assert!(u.objects.len() >= 14);
    let report = validate_category(&c, &u);
    assert!(report.passed(), "{report}");
    eprintln!("thin: {} instances in {:?}", report.universe_size, start.elapsed());
}

#[test]
fn matrix_model_validates_up_to_dim_three() {
    let start = Instant::now();
    let c = MatrixModCategory::default();
    let u = matrix_universe(&c, 3, 1, 0);
    let report = validate_category(&c, &u);
    assert!(report.passed(), "{report}");
    eprintln!("matrix: {} instances in {:?}", report.universe_size, start.elapsed());
}
