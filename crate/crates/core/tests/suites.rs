use hombracket::corpus;
use hombracket::suite::{perturbed_sl2, run_suite, SuiteConfig, SUITES};
use hombracket::Error;

#[test]
fn every_suite_passes_on_the_corpus() {
    let cfg = SuiteConfig::new(7).unwrap();
    for s in SUITES {
        let reports = run_suite(s, &cfg).unwrap();
        for r in &reports {
            assert!(r.pass(), "{r}");
            assert_eq!(r.seed, Some(7));
        }
    }
}

#[test]
fn unknown_suite() {
    let cfg = SuiteConfig::new(1).unwrap();
    assert_eq!(run_suite("nope", &cfg), Err(Error::UnknownSuite("nope".into())));
}

#[test]
fn suites_are_deterministic() {
    let cfg = SuiteConfig::new(11).unwrap();
    for s in ["nr", "nijenhuis"] {
        assert_eq!(run_suite(s, &cfg).unwrap(), run_suite(s, &cfg).unwrap());
    }
}

#[test]
fn perturbed_bracket_is_caught() {
    let mut cfg = SuiteConfig::new(3).unwrap();
    cfg.corpus = vec![perturbed_sl2().unwrap()];
    for suite in ["nr", "axioms"] {
        let reports = run_suite(suite, &cfg).unwrap();
        let c = reports[0].condition("hom-jacobi").unwrap();
        assert!(!c.pass, "{suite}");
        assert!(c.witness.is_some());
    }
    // {mu, mu} detects the same failure.
    let reports = run_suite("axioms", &cfg).unwrap();
    assert!(reports[0].condition("mu-mu-vanishes-iff-hom-jacobi").unwrap().pass);
}

#[test]
fn max_dim_filters_the_corpus() {
    let mut cfg = SuiteConfig::new(7).unwrap();
    cfg.max_dim = 2;
    let reports = run_suite("axioms", &cfg).unwrap();
    let dim2 = corpus::all().unwrap().iter().filter(|i| i.dim() <= 2).count();
    assert_eq!(reports.len(), dim2);
}
