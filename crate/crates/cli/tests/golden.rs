use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hallprim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn primitive_of_degree_two() {
    assert_eq!(stdout(&["hall", "primitive", "2", "--method", "center"]), "[2] + (1-q)[1,1]");
    assert_eq!(stdout(&["hall", "primitive", "2", "--method", "macdonald"]), "[2] + (1-q)[1,1]");
}

#[test]
fn hall_polynomial_of_two_simples() {
    assert_eq!(stdout(&["hall", "polynomial", "1", "1", "1,1"]), "q + 1");
    assert_eq!(stdout(&["hall", "polynomial", "1", "1", "2"]), "1");
}

#[test]
fn enumerated_hall_number() {
    assert_eq!(stdout(&["fq", "hallnum", "--m", "1", "--q", "2", "--R", "1,1", "--sub", "1", "--quot", "1"]), "3");
    assert_eq!(
        stdout(&["fq", "hallnum", "--m", "2", "--q", "3", "--R", "[1;2]", "--sub", "[0;1]", "--quot", "[1;1]"]),
        "1"
    );
}

#[test]
fn degree_three_warns_about_printed_form() {
    let out = run(&["hall", "primitive", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim_end(),
        "[3] + (1-q)[2,1] + (1-q-q^2+q^3)[1,1,1]"
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["fq", "z", "--m", "2", "--r", "2", "--q", "3"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn json_envelope_round_trips() {
    let text = stdout(&["--json", "fq", "z", "--m", "2", "--r", "1", "--q", "2"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["conventions"]["vertices"], 2);
    assert_eq!(v["conventions"]["substitution"], "t -> q^-2");
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
    let z = hallprim::NumHallElem::from_json(&v["result"]).unwrap();
    assert_eq!(z, hallprim::cyclic_fq::z_r_numeric(2, 1, 2).unwrap());

    let text = stdout(&["--json", "hall", "mul", "1", "1"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let x = hallprim::HallElem::from_json(&v["result"]).unwrap();
    let one = hallprim::HallElem::basis("1".parse().unwrap());
    assert_eq!(x, hallprim::hall_jordan::mul(&one, &one).unwrap());

    let text = stdout(&["--json", "symf", "c-in-p", "3"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(hallprim::SymFunc::from_json(&v["result"]).unwrap(), hallprim::symfunc::c_in_p(3));
}

#[test]
fn latex_output() {
    assert_eq!(stdout(&["--latex", "hall", "polynomial", "1", "1", "1,1"]), "q + 1");
    assert!(stdout(&["--latex", "symf", "macdonald", "2"]).contains("P_{"));
}

#[test]
fn verifications_report_success() {
    assert!(stdout(&["hall", "verify-primitive", "3"]).contains("center: yes"));
    assert!(stdout(&["fq", "verify-central", "--m", "2", "--r", "1", "--q", "2", "--dim-cap", "3"]).ends_with("yes"));
    assert!(stdout(&["fq", "verify-primitive", "--m", "2", "--n", "1", "--q", "2"]).ends_with("primitive: yes"));
    assert!(stdout(&["fq", "crosscheck", "--max-weight", "3", "--q", "2"]).ends_with("all equal"));
    assert!(stdout(&["hall", "identity", "4", "2,1,1"]).ends_with("equal: yes"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["hall", "mul", "1,2", "1"]).status.code(), Some(2));
    assert_eq!(run(&["fq", "z", "--m", "1", "--r", "1", "--q", "4"]).status.code(), Some(2));
    assert_eq!(run(&["fq", "z", "--m", "3", "--r", "3", "--q", "2"]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn full_suite_reports_the_two_vertex_mismatch() {
    let out = run(&["verify", "all", "--fast"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 11);
    assert!(text.lines().all(|l| l.starts_with("PASS") || l.starts_with("FAIL")));
    let failing: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failing.len(), 1, "{text}");
    assert!(failing[0].contains("criterion 10"));
    assert_eq!(out.status.code(), Some(1));
}
