use std::process::{Command, Output};

const I23: &str = "n=3; (x1*x2, x1*x3, x2*x3)";

fn monsat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monsat"))
        .args(args)
        .env_remove("MONSAT_MAX_POWER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sat_of_squared_cycle() {
    let o = monsat(&["sat", "n=5; (x1*x2, x2*x3, x3*x4, x4*x5, x5*x1^2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("sat=0\n"));
    let o = monsat(&["--format", "csv", "sat", "n=2; (x1^2, x1*x2, x2^2)"]);
    assert_eq!(stdout(&o), "sat\n2\n");
}

#[test]
fn sat_table_csv_is_byte_stable() {
    let args = ["--format", "csv", "sat-table", I23, "-K", "8"];
    let first = monsat(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(
        stdout(&first),
        "k,sat\n1,0\n2,1\n3,1\n4,2\n5,2\n6,3\n7,3\n8,4\n"
    );
    assert_eq!(first.stdout, monsat(&args).stdout);
}

#[test]
fn sat_table_text_reports_fit() {
    let out = stdout(&monsat(&["sat-table", I23, "-K", "8"]));
    assert!(out.contains("period=2\n"), "{out}");
    assert!(out.contains("f_1(k)=(1/2)*k+(-1/2)"), "{out}");
}

#[test]
fn veronese_check_csv() {
    let o = monsat(&[
        "--format",
        "csv",
        "veronese-sat",
        "-d",
        "2",
        "-n",
        "3",
        "-K",
        "3",
        "--check",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "k,d,n,expected,computed,pass\n1,2,3,0,0,true\n2,2,3,1,1,true\n3,2,3,1,1,true\n"
    );
}

#[test]
fn verify_paper_passes() {
    let o = monsat(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.starts_with("PASS ")).count() >= 16);
    assert!(!out.contains("FAIL"));
}

#[test]
fn file_input_in_record_form() {
    let dir = std::env::temp_dir().join(format!("monsat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m2.txt");
    std::fs::write(&path, "n 2\n2 0\n1 1\n0 2\n").unwrap();
    let o = monsat(&[
        "--format",
        "records",
        "sat",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n 2\n0 0\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn closure_and_order() {
    let o = monsat(&["closure", "-k", "1", "-n", "3", "x2*x3"]);
    assert_eq!(stdout(&o), "n=3; (x1*x2, x1*x3, x2*x3)\n");
    assert_eq!(
        stdout(&monsat(&[
            "precedes", "-k", "1", "-n", "3", "x1*x3", "x2*x3"
        ])),
        "true\n"
    );
    assert_eq!(
        stdout(&monsat(&[
            "precedes", "-k", "1", "-n", "3", "x2*x3", "x1*x3"
        ])),
        "false\n"
    );
}

#[test]
fn decompose_bounded_cubics() {
    let o = monsat(&[
        "decompose",
        "n=3; (x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3, x1*x3^2, x2^2*x3, x2*x3^2)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "F = {1,2} ^ 1\nF = {1,3} ^ 1\nF = {2,3} ^ 1\nF = {1,2,3} ^ 3\nsat=1\n"
    );
}

#[test]
fn scaling_check_reports_violation_without_failing() {
    let o = monsat(&["scaling-check", I23, "-K", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("law=violated at k=2"));
    let o = monsat(&[
        "scaling-check",
        "n=3; (x1*x2, x1*x3, x2^2, x2*x3)",
        "-K",
        "4",
    ]);
    assert!(stdout(&o).contains("law=holds"), "{}", stdout(&o));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let o = monsat(&["sat", "n=3; (x0)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 1, column 7"), "{err}");
}

#[test]
fn usage_and_domain_errors_exit_2() {
    assert_eq!(monsat(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(monsat(&["sat"]).status.code(), Some(2));
    assert_eq!(
        monsat(&["decompose", "n=2; (x1, x2^2)"]).status.code(),
        Some(2)
    );
    assert_eq!(
        monsat(&["sat-table", I23, "-K", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn guardrails_exit_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_monsat"))
        .args(["sat-table", I23, "-K", "5"])
        .env("MONSAT_MAX_POWER", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_monsat"))
        .args(["sat", I23])
        .env("MONSAT_MAX_VARS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_monsat"))
        .args(["sat", I23])
        .env("MONSAT_MAX_VARS", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
