use froblift_wasm_demo::{fano_chi_json, p1_coefficient_value, xi_det_text};

#[test]
fn xi_det_of_the_toric_chart() {
    assert_eq!(xi_det_text(3, "x, y", "x^3\ny^3").unwrap(), "x^2*y^2");
    assert_eq!(xi_det_text(2, "x", "x^2 + 2*x").unwrap(), "x + 1");
}

#[test]
fn xi_det_rejects_bad_input() {
    assert!(xi_det_text(4, "x", "x^4").is_err());
    assert!(xi_det_text(3, "x", "x^2").is_err());
    assert!(xi_det_text(3, "x,y", "x^3").is_err());
    assert!(xi_det_text(3, "x", "x^3 + w").is_err());
    assert!(xi_det_text(3, "", "").is_err());
}

#[test]
fn p1_coefficients() {
    assert_eq!(p1_coefficient_value(2).unwrap(), 1);
    for p in [3, 5, 7, 11, 13] {
        assert_eq!(p1_coefficient_value(p).unwrap(), 0);
    }
    assert!(p1_coefficient_value(9).is_err());
}

#[test]
fn fano_chi_values() {
    let v: serde_json::Value = serde_json::from_str(&fano_chi_json(64, 1, 0).unwrap()).unwrap();
    assert_eq!(v["chi_tangent"], 15);
    assert_eq!(v["verdict"], "PossiblyRigid");
    let v: serde_json::Value = serde_json::from_str(&fano_chi_json(4, 1, 60).unwrap()).unwrap();
    assert_eq!(v["chi_tangent"], -45);
    assert_eq!(v["verdict"], "NotRigid");
    assert!(fano_chi_json(4, 1, 3).is_err());
}
