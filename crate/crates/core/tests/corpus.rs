use blockgalois::verify::{default_corpus, run_corpus, Mode, RunConfig};

#[test]
fn full_corpus_has_no_failures_and_is_deterministic() {
    let base = RunConfig {
        modes: vec![Mode::TheoremA, Mode::ConjectureB, Mode::Suite1],
        primes: vec![2, 3, 5, 7],
        ..RunConfig::default()
    };
    let corpus = default_corpus();
    let serial = run_corpus(
        &corpus,
        &RunConfig {
            jobs: Some(1),
            ..base.clone()
        },
    )
    .unwrap();
    let s = &serial.summary;
    assert_eq!(s.groups, corpus.len());
    assert_eq!(
        (s.fail, s.inconsistent, s.errors, s.resource_caps),
        (0, 0, 0, 0),
        "{s:?}"
    );
    assert!(s.pass > 1000, "{s:?}");
    assert_eq!(serial.exit_code(), 0);

    let parallel = run_corpus(
        &corpus,
        &RunConfig {
            jobs: Some(4),
            ..base
        },
    )
    .unwrap();
    assert_eq!(
        serial.to_json_string().unwrap(),
        parallel.to_json_string().unwrap()
    );
}
