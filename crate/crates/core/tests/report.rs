use fano_core::verify::{run_all, CheckRecord, Config, Status};

#[test]
fn records_round_trip_through_json() {
    let cfg = Config::new(None, Some(3), Some("scroll")).unwrap();
    for r in run_all(&cfg) {
        let text = serde_json::to_string(&r).unwrap();
        let back: CheckRecord = serde_json::from_str(&text).unwrap();
        assert!(back.same_outcome(&r));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["status"], "PASS");
        assert!(v.get("paper_ref").is_some() && v.get("anchor").is_none());
        assert!(v["elapsed"].is_f64());
    }
}

#[test]
fn runs_are_reproducible_for_a_fixed_seed() {
    let cfg = Config::new(None, Some(99), None).unwrap();
    let a = run_all(&cfg);
    let b = run_all(&cfg);
    assert_eq!(a.len(), b.len());
    assert!(a.iter().zip(&b).all(|(x, y)| x.same_outcome(y)));
    assert!(a.iter().all(|r| r.status == Status::Pass));
}

#[test]
fn status_text() {
    let s: Status = serde_json::from_str("\"SKIP\"").unwrap();
    assert_eq!(s, Status::Skip);
    assert_eq!(Status::Fail.to_string(), "FAIL");
}
