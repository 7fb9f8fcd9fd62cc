//! The certificate's JSON shape is a stable interface: field names, decimal
//! strings for big integers, and audit records keyed by name.

use num_bigint::BigUint;
use serde_json::Value;

use ljunggren::quadform;
use ljunggren::quartic::{solve_ljunggren, LjunggrenCertificate};

#[test]
fn stable_field_names() {
    let mut cert = solve_ljunggren(7);
    cert.audits.insert(
        "square_sums".into(),
        quadform::audit_square_sums(14).unwrap(),
    );
    let value: Value = serde_json::to_value(&cert).unwrap();

    let object = value.as_object().unwrap();
    for field in ["solution_bound", "solutions", "squares_in_seq2", "audits"] {
        assert!(object.contains_key(field), "missing {field}");
    }

    let audit = &value["audits"]["square_sums"];
    for field in ["range", "pass", "counterexamples"] {
        assert!(audit.as_object().unwrap().contains_key(field), "missing {field}");
    }

    assert_eq!(value["solutions"][1]["x"], "239");
    assert_eq!(value["solutions"][1]["y"], "13");
    assert_eq!(value["squares_in_seq2"][0]["index"], 0);
    assert_eq!(value["squares_in_seq2"][0]["value"], "1");
    assert_eq!(value["squares_in_seq2"][1]["root"], "13");
}

#[test]
fn big_integers_serialize_as_decimal_strings() {
    // the 40th negative-Pell y-value has dozens of digits; the certificate
    // must carry it losslessly
    let cert = solve_ljunggren(40);
    let value: Value = serde_json::to_value(&cert).unwrap();
    let squares = value["squares_in_seq2"].as_array().unwrap();
    assert_eq!(squares.len(), 2);
    for sol in value["solutions"].as_array().unwrap() {
        let x = sol["x"].as_str().unwrap();
        assert!(x.bytes().all(|b| b.is_ascii_digit()));
        let parsed: BigUint = x.parse().unwrap();
        assert_eq!(parsed.to_string(), x);
    }
}

#[test]
fn json_round_trips() {
    let mut cert = solve_ljunggren(10);
    cert.audits.insert(
        "ratio_claim".into(),
        quadform::audit_ratio_claim(10).unwrap().record,
    );
    let text = serde_json::to_string(&cert).unwrap();
    let back: LjunggrenCertificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, cert);
}
