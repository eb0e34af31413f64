use schurpath::identities::{
    verify, verify_cauchy, verify_main_lemma_with, VerifyArgs, IDENTITIES,
};
use schurpath::{run_suite, Status, SuiteConfig};

/// Top-level keys in the order they were written.
fn key_order(json: &str) -> Vec<String> {
    let value: serde_json::Value = serde_json::from_str(json).unwrap();
    let mut keys: Vec<(usize, String)> = value
        .as_object()
        .unwrap()
        .keys()
        .map(|k| (json.find(&format!("\"{k}\":")).unwrap(), k.clone()))
        .collect();
    keys.sort();
    keys.into_iter().map(|(_, k)| k).collect()
}

#[test]
fn config_parsing() {
    let cfg: SuiteConfig = serde_json::from_str(
        r#"{"max_partition_size": 3, "max_n": 2, "cauchy_cap": 2, "dual_max": 1, "newton_max": 2, "only": ["newton", "cauchy"]}"#,
    )
    .unwrap();
    assert_eq!(cfg.max_n, 2);
    assert_eq!(cfg.lemma_max, SuiteConfig::default().lemma_max);
    cfg.validate().unwrap();
    let reports = run_suite(&cfg);
    let names: Vec<_> = reports.iter().map(|r| r.identity.as_str()).collect();
    assert_eq!(names, ["cauchy", "cauchy", "newton", "newton", "newton"]);

    assert!(serde_json::from_str::<SuiteConfig>(r#"{"max_n": "four"}"#).is_err());
    assert!(serde_json::from_str::<SuiteConfig>(r#"{"maxn": 4}"#).is_err());
    assert_eq!(
        serde_json::from_str::<SuiteConfig>("{}").unwrap(),
        SuiteConfig::default()
    );
}

#[test]
fn mismatch_reports_carry_both_sides() {
    let r = verify_main_lemma_with(4, 4, true);
    assert_eq!(r.status, Status::Mismatch);
    assert_eq!(
        key_order(&serde_json::to_string(&r).unwrap()),
        [
            "identity",
            "params",
            "status",
            "lhs",
            "rhs",
            "message",
            "elapsed_ms"
        ]
    );
    assert!(!r.lhs.unwrap().is_empty());
}

#[test]
fn verified_reports_omit_sides() {
    let r = verify_cauchy(1, 3);
    assert!(r.is_verified());
    assert_eq!(
        key_order(&serde_json::to_string(&r).unwrap()),
        ["identity", "params", "status", "elapsed_ms"]
    );
}

#[test]
fn dispatch_by_name() {
    for name in IDENTITIES {
        let r = verify(
            name,
            &VerifyArgs {
                n: Some(2),
                ..VerifyArgs::default()
            },
        )
        .unwrap();
        assert!(r.is_verified(), "{r}");
        assert_eq!(r.identity, name);
    }
    assert!(verify("nosuch", &VerifyArgs::default()).is_err());
}

#[test]
fn suite_order_is_deterministic() {
    let cfg = SuiteConfig {
        max_partition_size: 3,
        max_n: 2,
        ..SuiteConfig::default()
    };
    let strip = |rs: Vec<schurpath::CheckReport>| -> Vec<_> {
        rs.into_iter()
            .map(|r| (r.identity, r.params, r.status))
            .collect()
    };
    assert_eq!(strip(run_suite(&cfg)), strip(run_suite(&cfg)));
}
