use stairstep::cli::run;
use stairstep::json::{resolution_from_json, resolution_to_json};
use stairstep_core::oracle::{verify, FieldConfig};
use stairstep_core::text::parse_ideal;
use stairstep_core::build_resolution;

const IDEALS: [&str; 9] = ["x2y,xy2", "xy2,y4", "x3,xy,y3", "x4y,x2y2,y3", "y", "x2y3", "x,y", "x4,y", "x3,y7"];

#[test]
fn json_reload_verifies_identically() {
    for text in IDEALS {
        let m = parse_ideal(text).unwrap();
        let res = build_resolution(&m, 7);
        let mut out = Vec::new();
        let code = run(["stairstep", "resolve", text, "--stages", "7", "--format", "json"], &mut out, &mut Vec::new());
        assert_eq!(code, 0);
        let loaded = resolution_from_json(std::str::from_utf8(&out).unwrap()).unwrap();
        assert_eq!(loaded.ranks(), res.ranks());
        assert_eq!(loaded.decomposition(), res.decomposition());
        let a = verify(&res, 6, 20, FieldConfig::ExactRationals).unwrap();
        let b = verify(&loaded, 6, 20, FieldConfig::ExactRationals).unwrap();
        assert!(a.passed(), "{text}");
        assert_eq!(a, b, "{text}");
        assert_eq!(resolution_to_json(&loaded), resolution_to_json(&res));
    }
}

#[test]
fn labels_survive_the_round_trip() {
    let res = build_resolution(&parse_ideal("x2y,xy2").unwrap(), 6);
    let loaded = resolution_from_json(&resolution_to_json(&res)).unwrap();
    for (a, b) in res.modules().zip(loaded.modules()) {
        assert_eq!(a, b);
    }
}
