use std::process::{Command, Output};

use idemring::dsl::{build, parse, parse_element, resolve};
use idemring::report::{Entry, Report};
use idemring::Guards;

fn idemring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idemring"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_reports_a_failing_verdict_with_exit_zero() {
    let o = idemring(&["check", "U(2,Z(3))", "right-e-reversible", "--e", "[[0,0],[0,1]]"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("✗ fails"), "{out}");
    assert!(out.contains("witness"), "{out}");
}

#[test]
fn json_reports_round_trip_byte_for_byte() {
    for args in [
        &[
            "--format",
            "json",
            "check",
            "M(3,Z(2))",
            "right-e-reversible",
            "--e",
            "[[1,0,0],[0,0,0],[0,0,1]]",
        ][..],
        &["--format", "json", "describe", "D(3,Z(2))"],
        &["--format", "json", "survey", "K(Z(2),0)"],
        &["--format", "json", "laws", "--law", "dorroh"],
        &["--format", "json", "laws"],
    ] {
        let o = idemring(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let text = stdout(&o);
        let report = Report::from_json(&text).unwrap();
        assert_eq!(report.to_json(), text, "{args:?}");
    }
}

#[test]
fn witness_labels_parse_back_to_the_reported_elements() {
    let o = idemring(&[
        "--format",
        "json",
        "check",
        "M(3,Z(2))",
        "right-e-reversible",
        "--e",
        "[[1,0,0],[0,0,0],[0,0,1]]",
    ]);
    let report = Report::from_json(&stdout(&o)).unwrap();
    let Entry::Verdict(v) = &report.results[0] else {
        panic!("expected a verdict")
    };
    let w = v.witness().expect("M_3(Z_2) is not right (E11+E33)-reversible");
    let ring = build(&parse("M(3,Z(2))").unwrap(), &Guards::default()).unwrap();
    let idx: Vec<usize> = w
        .labels
        .iter()
        .map(|l| resolve(&ring, &parse_element(l).unwrap()).unwrap())
        .collect();
    assert_eq!(idx, w.indices);
}

#[test]
fn describe_z4() {
    let o = idemring(&["describe", "Z(4)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("order"), "{out}");
    let json = stdout(&idemring(&["--format", "json", "describe", "Z(4)"]));
    let report = Report::from_json(&json).unwrap();
    let Entry::Description(d) = &report.results[0] else {
        panic!("expected a description")
    };
    assert_eq!(d.order, 4);
    assert_eq!(d.nilpotents, vec!["0".to_string(), "2".to_string()]);
    let ids: Vec<&str> = d.idempotents.iter().map(|i| i.label.as_str()).collect();
    assert_eq!(ids, ["0", "1"]);
}

#[test]
fn syntax_errors_exit_two_with_a_caret() {
    let o = idemring(&["describe", "K(Z(2)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("syntax error: 1:7"), "{err}");
    assert!(err.contains("      ^"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["check", "Z(6)", "right-e-reversible"][..],
        &["check", "Z(6)", "reversible", "--e", "3"],
        &["check", "Z(6)", "right-e-reversible", "--e", "2"],
        &["check", "Z(6)", "no-such-property"],
        &["check", "H(Z(4),2,1)", "reversible"],
        &["laws", "--law", "no-such-law"],
        &["laws", "--corpus", "/nonexistent/corpus.txt"],
    ] {
        let o = idemring(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn bad_manifest_lines_are_located() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "Z(2)\n# fine\nQ(3)\n").unwrap();
    let o = idemring(&["laws", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.txt:3:"), "{}", stderr(&o));
}

#[test]
fn guard_trips_exit_three() {
    let o = idemring(&["--max-pair-order", "4", "describe", "U(2,Z(2))"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn small_corpus_laws_are_clean() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("small.txt");
    std::fs::write(&path, "Z(6)\nU(2,Z(2))\nM(2,Z(2))\n").unwrap();
    let o = idemring(&["laws", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("0 violations"), "{}", stdout(&o));
}

#[test]
fn timings_only_when_asked() {
    let plain = stdout(&idemring(&["--format", "json", "describe", "Z(6)"]));
    assert!(!plain.contains("\"timings\""));
    let timed = stdout(&idemring(&["--format", "json", "--timings", "describe", "Z(6)"]));
    assert!(timed.contains("\"timings\""));
}

#[test]
fn cache_hits_give_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["--cache", cache, "--format", "json", "survey", "U(2,Z(3))"];
    let first = idemring(&args);
    let second = idemring(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let timed = stdout(&idemring(&["--cache", cache, "--timings", "survey", "U(2,Z(3))"]));
    assert!(timed.contains("build (cached)"), "{timed}");
}
