use super::*;

fn small_corpus(text: &str) -> Corpus {
    Corpus::from_manifest(text, "inline", Guards::default()).unwrap()
}

#[test]
fn comments_and_index_literals() {
    let c = small_corpus("# header\nZ(4)  # trailing\n\nquot(Z(12),#4)\n");
    assert_eq!(c.members.len(), 2);
    assert_eq!(c.members[0].line, 2);
    assert_eq!(c.members[1].order, Some(4));
}

#[test]
fn manifest_errors_carry_the_line() {
    let err = Corpus::from_manifest("Z(2)\nZ(\n", "m.txt", Guards::default()).unwrap_err();
    assert!(err.to_string().starts_with("m.txt:2:"), "{err}");
}

#[test]
fn oversized_members_are_skipped() {
    let guards = Guards {
        max_pair_order: 16,
        max_triple_order: 8,
    };
    let c = Corpus::from_manifest("Z(2)\nM(2,Z(3))\n", "m", guards).unwrap();
    assert!(c.members[0].skipped.is_none());
    assert!(c.members[1].skipped.is_some());
    assert_eq!(c.rings().count(), 1);
}

#[test]
fn law_ids_are_unique() {
    let mut ids: Vec<_> = all_laws().iter().map(|l| l.id).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), all_laws().len());
    assert!(find_law("ere").is_some());
    assert!(find_law("nope").is_none());
}

#[test]
fn structural_laws_hold_on_a_small_corpus() {
    let c = small_corpus("Z(4)\nU(2,Z(2))\nM(2,Z(2))\nprod(Z(2),Z(3))\n");
    let ctx = LawContext::new(&c);
    for id in ["ere", "chain", "one-reversible", "eae", "hab1", "bul", "min-abel"] {
        let rep = find_law(id).unwrap().run(&ctx).unwrap();
        assert!(rep.is_clean(), "{id}: {:?}", rep.violations().next());
        assert!(rep.totals.holds > 0, "{id}");
    }
}

#[test]
fn golden_ids_are_unique() {
    let mut ids: Vec<_> = GOLDEN.iter().map(|(k, _)| *k).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), GOLDEN.len());
}

#[test]
fn status_serializes_with_a_tag() {
    let s = serde_json::to_string(&Status::NotApplicable { reason: "r".into() }).unwrap();
    assert_eq!(s, r#"{"status":"not-applicable","reason":"r"}"#);
}
