use metaplectic::verify::{corpus, run_suite, sample_gl2, SampleConfig, Status};
use metaplectic::{Error, PadicContext, GL2};

fn cfg(trials: usize, contexts: &[(u64, u32)]) -> SampleConfig {
    let ctxs = contexts
        .iter()
        .map(|&(p, n)| PadicContext::new(p, n).unwrap())
        .collect();
    SampleConfig::new(42, 12, trials, ctxs).unwrap()
}

#[test]
fn config_is_validated() {
    let ctx = vec![PadicContext::new(3, 2).unwrap()];
    assert!(SampleConfig::new(1, 12, 0, ctx.clone()).is_err());
    assert!(SampleConfig::new(1, 1, 10, ctx).is_err());
    assert!(SampleConfig::new(1, 12, 10, vec![]).is_err());
}

#[test]
fn unknown_suite_is_rejected() {
    assert!(matches!(
        run_suite("bogus", &cfg(1, &[(3, 2)])),
        Err(Error::UnknownSuite(_))
    ));
}

#[test]
fn cocycle_suite_passes() {
    let reports = run_suite("cocycle", &cfg(100, &[(3, 2), (7, 3)])).unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports
        .iter()
        .all(|r| r.failures.is_empty() && r.status == Status::Pass));
}

#[test]
fn obstruction_not_applicable_for_n_two() {
    let reports = run_suite("obstruction", &cfg(10, &[(5, 2), (5, 4)])).unwrap();
    assert_eq!(reports[0].status, Status::NotApplicable);
    assert_eq!(reports[1].status, Status::Pass);
    assert!(reports[1].trials >= 500);
}

#[test]
fn sampling_is_deterministic_and_starts_with_corpus() {
    let c = cfg(10, &[(5, 4)]);
    let ctx = &c.contexts[0];
    assert_eq!(sample_gl2(&c, ctx, 0), GL2::identity());
    for i in 0..200 {
        let g = sample_gl2(&c, ctx, i);
        assert_eq!(g, sample_gl2(&c, ctx, i));
        assert!(!g.det().numer().eq(&0.into()));
    }
    assert!(corpus(ctx).len() > 10);
}
