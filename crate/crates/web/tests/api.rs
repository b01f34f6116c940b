use idemring_web::{check_text, describe_text, survey_text};

#[test]
fn describe_lists_nilpotents() {
    let text = describe_text("Z(4)", false).unwrap();
    assert!(text.contains("nilpotents   2: {0, 2}"), "{text}");
}

#[test]
fn survey_has_one_row_per_nonzero_idempotent() {
    let text = survey_text("Z(6)", false).unwrap();
    assert!(text.starts_with("Z(6): 3 nonzero idempotents"), "{text}");
}

#[test]
fn check_reports_the_verdict() {
    let text = check_text("U(2,Z(3))", "right-e-reversible", "[[1,1],[0,0]]", false).unwrap();
    assert!(text.contains("✓ holds"), "{text}");
    let json = check_text("U(2,Z(3))", "left-e-reversible", "[[1,1],[0,0]]", true).unwrap();
    assert!(json.contains("\"status\": \"fails\""), "{json}");
}

#[test]
fn errors_are_messages() {
    assert!(describe_text("K(Z(2)", false)
        .unwrap_err()
        .starts_with("syntax error: 1:"));
    assert!(check_text("Z(4)", "right-e-reversible", "2", false)
        .unwrap_err()
        .contains("not idempotent"));
    assert!(check_text("Z(4)", "nonsense", "", false).is_err());
    assert!(describe_text("M(3,Z(3))", false).unwrap_err().contains("exceeds"));
}
