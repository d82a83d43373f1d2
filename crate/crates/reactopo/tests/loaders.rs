use reactopo::corpus::{bundled_corpus, parse_corpus};
use reactopo::propagator_file::{bundled_propagators, parse_propagators, BUNDLED_PROPAGATORS};
use reactopo::registry_file::{bundled_registry, parse_registry, write_registry, BUNDLED_REGISTRY};
use reactopo_core::reaction::check;

#[test]
fn registry_write_then_read_is_lossless() {
    let registry = bundled_registry();
    let text = write_registry(&registry);
    let again = parse_registry(&text, "roundtrip").unwrap();
    assert_eq!(again.len(), registry.len());
    for p in registry.iter() {
        assert_eq!(again.get(&p.id), Some(p), "{}", p.id);
    }
}

#[test]
fn registry_rejects_broken_invariants_with_line() {
    let mut lines: Vec<String> = BUNDLED_REGISTRY.lines().map(str::to_owned).collect();
    let proton = lines
        .iter()
        .position(|l| l.contains("\"id\": \"p\""))
        .unwrap();
    lines[proton] = lines[proton].replace("\"charge\": \"1\"", "\"charge\": \"2\"");
    let err = parse_registry(&lines.join("\n"), "edited.jsonl").unwrap_err();
    assert_eq!(err.line, Some(proton + 1));
    assert!(err
        .to_string()
        .starts_with(&format!("edited.jsonl:{}:", proton + 1)));
}

#[test]
fn registry_rejects_duplicates_and_unknown_fields() {
    let first = BUNDLED_REGISTRY.lines().next().unwrap();
    let err = parse_registry(&format!("{first}\n{first}\n"), "dup").unwrap_err();
    assert_eq!(err.line, Some(2));
    let extra = first.replacen('{', "{\"colour\": 3, ", 1);
    assert_eq!(parse_registry(&extra, "extra").unwrap_err().line, Some(1));
}

#[test]
fn bundled_corpus_matches_expectations() {
    let registry = bundled_registry();
    let corpus = bundled_corpus(&registry);
    assert!(corpus.len() >= 35);
    for entry in &corpus {
        assert_eq!(
            check(&entry.reaction).classification,
            entry.expected,
            "{}",
            entry.label
        );
    }
}

#[test]
fn corpus_errors_name_the_line() {
    let registry = bundled_registry();
    let err = parse_corpus(
        "# header\np -> n + e+ + nu_e\tallowed-weak\nq -> p\tforbidden\n",
        &registry,
        "c.tsv",
    )
    .unwrap_err();
    assert_eq!(err.line, Some(3));
    let err = parse_corpus("p -> p\tsometimes\n", &registry, "c.tsv").unwrap_err();
    assert_eq!(err.line, Some(1));
}

#[test]
fn bundled_propagators_validate() {
    let registry = bundled_registry();
    let entries = bundled_propagators(&registry);
    assert_eq!(entries.len(), 8);
    for e in &entries {
        assert!(
            e.presentation.is_valid(),
            "{}: {:?}",
            e.presentation.name,
            e.presentation.validate()
        );
        assert!(
            e.presentation.exchangion_class_check().is_empty(),
            "{}",
            e.presentation.name
        );
    }
}

#[test]
fn propagator_schema_is_checked() {
    let registry = bundled_registry();
    let wrong = BUNDLED_PROPAGATORS.replacen("\"schema\": 1", "\"schema\": 9", 1);
    assert!(parse_propagators(&wrong, &registry, "p.json").is_err());
    let unknown = BUNDLED_PROPAGATORS.replacen("\"H-1\"", "\"H-9\"", 1);
    assert!(parse_propagators(&unknown, &registry, "p.json").is_err());
}
