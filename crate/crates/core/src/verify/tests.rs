use super::*;

fn cfg(name: &str) -> SuiteConfig {
    SuiteConfig::new(CartanDatum::preset(name).unwrap())
}

#[test]
fn suite_names_roundtrip() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!(matches!("nope".parse::<Suite>(), Err(VerifyError::UnknownSuite(_))));
}

#[test]
fn report_is_sorted() {
    let o = |s: &str, i: &str| Outcome {
        suite: s.into(),
        instance: i.into(),
        pass: true,
        counterexample: None,
    };
    let r = Report::new(3, vec![o("zw", "b"), o("center", "x"), o("zw", "a")]);
    let keys: Vec<_> = r.outcomes.iter().map(|o| (o.suite.as_str(), o.instance.as_str())).collect();
    assert_eq!(keys, vec![("center", "x"), ("zw", "a"), ("zw", "b")]);
    assert!(r.to_json().contains("\"schema\": 1"));
}

#[test]
fn every_suite_passes_on_a1() {
    let c = cfg("A1");
    for s in Suite::ALL {
        let out = run_suite(s, &c).unwrap();
        assert!(!out.is_empty(), "{s}");
        let bad: Vec<_> = out.iter().filter(|o| !o.pass).collect();
        assert!(bad.is_empty(), "{s}: {bad:?}");
    }
}

#[test]
fn fault_flag_fails_relations() {
    let mut c = cfg("A1");
    c.fault = true;
    let out = run_suite(Suite::Relations, &c).unwrap();
    let bad: Vec<_> = out.iter().filter(|o| !o.pass).collect();
    assert!(!bad.is_empty());
    assert!(bad.iter().all(|o| o.counterexample.is_some()));
}

#[test]
fn seed_changes_only_the_sampled_checks() {
    let a = run_suite(Suite::Coord, &cfg("A2").with_seed(1)).unwrap();
    let b = run_suite(Suite::Coord, &cfg("A2").with_seed(1)).unwrap();
    assert_eq!(a, b);
}

