use kw1::input::{parse_input, render_input, PMapOverride};
use kw1_core::builtin;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

#[test]
fn every_builtin_round_trips() {
    let mut all = builtin::all();
    all.push(builtin::lookup("abelian:4").unwrap());
    for pres in all {
        let parsed = parse_input(&render_input(&pres, None)).unwrap();
        assert_eq!(parsed.presentation, pres, "{}", pres.name());
        assert_eq!(parsed.pmap_override, None);
    }
}

#[test]
fn sl2_document() {
    let parsed = parse_input(&render_input(&builtin::sl2(), None)).unwrap();
    let values: Vec<String> = parsed.presentation.constants().values().map(|c| c.to_string()).collect();
    assert_eq!(values, ["2", "-2", "1"]);
}

#[test]
fn remark_document() {
    let text = render_input(&builtin::remark(2, 3).unwrap(), None);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["brackets"][0], serde_json::json!({"left": "h", "right": "x", "result": {"x": "2"}}));
    assert_eq!(doc["brackets"][1], serde_json::json!({"left": "h", "right": "y", "result": {"y": "3"}}));
    assert_eq!(doc["brackets"].as_array().unwrap().len(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        rng_seed: RngSeed::Fixed(0x6b77_0002),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn pmap_override_round_trips(
        which in 0..9usize,
        entries in prop::collection::vec((0..4usize, prop::collection::vec((-9i64..9, 1i64..6), 4)), 0..4),
    ) {
        let pres = builtin::all().swap_remove(which);
        let n = pres.dim();
        let mut over = PMapOverride::new();
        for (i, row) in entries {
            if i < n {
                over.insert(i, row.into_iter().take(n).map(|(a, b)| BigRational::new(a.into(), b.into())).collect());
            }
        }
        let parsed = parse_input(&render_input(&pres, Some(&over))).unwrap();
        prop_assert_eq!(parsed.presentation, pres);
        prop_assert_eq!(parsed.pmap_override, Some(over));
    }
}
