use hallprim::verify::{run_check, CHECKS};

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (id, _) in CHECKS {
        let outcome = run_check(id, false).expect("known check");
        println!("{}", outcome.line());
        for w in &outcome.warnings {
            println!("    warning: {w}");
        }
        if !outcome.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
