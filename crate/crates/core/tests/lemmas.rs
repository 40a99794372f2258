use rectcross::kite::configuration_between;
use rectcross::{
    classify_configuration, color_by_hulls, count_non_concentric_crossings, parse_bytes, tally_by_label, verify_drawing,
    ColoredDrawing, Colour, ConfigClass, RuleId, Suite,
};

fn load(name: &str) -> ColoredDrawing {
    let bytes = std::fs::read(format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap();
    color_by_hulls(&parse_bytes(&bytes).unwrap().drawing).unwrap()
}

#[test]
fn corpus_k6_classes() {
    for (name, class) in [("k6_ccc.pts", ConfigClass::Ccc), ("k6_vvv.pts", ConfigClass::Vvv)] {
        let cd = load(name);
        assert_eq!(classify_configuration(&cd).unwrap().class, class);
        assert_eq!(count_non_concentric_crossings(&cd).unwrap(), class.non_concentric_count());
    }
}

#[test]
fn symmetric_k9_passes_every_k9_rule() {
    let cd = load("k9_symmetric.pts");
    let reports = verify_drawing(cd.drawing(), &Suite::K9.rules(), 1);
    assert!(reports.iter().all(|r| r.passed()), "{reports:?}");
}

/// A 36-crossing nested K9 whose green-blue part is VVV. It has three gb×bb
/// crossings, so the "at most two" clause fails while internal = 9 holds.
#[test]
fn nine_max_counterexample_fixture() {
    let bytes = std::fs::read(format!("{}/tests/data/k9_36_gbbb3.pts", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let cd = color_by_hulls(&parse_bytes(&bytes).unwrap().drawing).unwrap();
    assert_eq!(cd.total(), 36);
    let hist = tally_by_label(&cd);
    assert_eq!((hist.of("gb_bb"), hist.of("rb_gb")), (3, 6));
    assert_eq!(configuration_between(&cd, Colour::Green, Colour::Blue).unwrap().class, ConfigClass::Vvv);
    let reports = verify_drawing(cd.drawing(), &[RuleId::InternalNine, RuleId::K9ConcentricOptimum, RuleId::NineMax], 1);
    let outcome: Vec<bool> = reports.iter().map(|r| r.passed()).collect();
    assert_eq!(outcome, [true, true, false]);
}
