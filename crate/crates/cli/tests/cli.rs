use std::process::{Command, Output};

use lambek::report::{parse_csv, parse_json, parse_text};

fn lambek(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lambek"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lambek(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn particle_table_text_row() {
    let text = stdout(&["tables", "1"]);
    assert!(
        text.lines().any(|l| l == "e- (1,-1,-1,-1) +1 -1 -1 -1/2"),
        "{text}"
    );
}

#[test]
fn unit_table_csv_shape() {
    let csv = stdout(&["tables", "2", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("name,w,x,y,z,F_nb,Z_el"));
    assert_eq!(lines.count(), 24);
    assert!(csv.contains("\nh2,1/2,1/2,1/2,-1/2,+1/2,+1/6\n"));
}

#[test]
fn unit_form_gluon_row() {
    let text = stdout(&["tables", "3"]);
    let row = text.lines().find(|l| l.starts_with("g_BbarG ")).unwrap();
    assert!(row.ends_with(" +h6-h7"), "{row}");
}

#[test]
fn formats_agree() {
    for args in [
        &["tables", "1"][..],
        &["tables", "3"],
        &["verify"],
        &["decompose", "(1,-1,0,0)", "--mode", "sum"],
        &["groups", "q24", "classes"],
        &["explore-q48"],
    ] {
        let with = |f: &str| {
            let mut a = args.to_vec();
            a.extend(["--format", f]);
            stdout(&a)
        };
        let json = parse_json(&with("json")).unwrap();
        let text = parse_text(&with("text")).unwrap();
        let csv = parse_csv(
            &with("csv"),
            &json
                .payload
                .tables
                .first()
                .map(|t| t.title.clone())
                .unwrap_or_default(),
        )
        .unwrap();
        assert_eq!(text.tables, json.payload.tables, "{args:?}");
        assert_eq!(text.checks, json.payload.checks, "{args:?}");
        assert_eq!(csv.tables, json.payload.tables, "{args:?}");
        assert_eq!(csv.checks, json.payload.checks, "{args:?}");
    }
}

#[test]
fn verify_is_deterministic_and_green() {
    let a = lambek(&["verify"]);
    let b = lambek(&["verify"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let json = parse_json(&stdout(&["verify", "--format", "json"])).unwrap();
    assert!(json.pass_count >= 12);
    assert_eq!(json.fail_count, 0);
    assert_eq!(json.schema_version, 1);
}

#[test]
fn corrupted_registry_fails_with_exit_1() {
    let out = lambek(&["verify", "--corrupt", "e-", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = parse_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(r.fail_count >= 1);
    assert!(!r.check("heisenberg").unwrap().pass);
}

#[test]
fn decompose_examples() {
    let diff = parse_json(&stdout(&[
        "decompose",
        "(0,1,1,1)",
        "--mode",
        "diff",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(diff.payload.tables[0].rows[0][2], "2");
    let d = stdout(&[
        "decompose",
        "(1,0,1,1)",
        "(1,-1,0,0)",
        "--mode",
        "doublet",
        "--format",
        "csv",
    ]);
    assert!(d.contains("n,m\nh5,h1\n"), "{d}");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(lambek(&["tables", "4"]).status.code(), Some(2));
    assert_eq!(lambek(&["frobnicate"]).status.code(), Some(2));
    let bad = lambek(&["decompose", "(1, 2, x, 4)"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("7"));
    assert_eq!(
        lambek(&["decompose", "(sqrt(2),0,0,0)"]).status.code(),
        Some(2)
    );
}

#[test]
fn groups_commands() {
    let n = parse_json(&stdout(&[
        "groups",
        "q120",
        "normal-subgroups",
        "--format",
        "json",
    ]))
    .unwrap();
    let orders: Vec<&str> = n.payload.tables[0]
        .rows
        .iter()
        .map(|r| r[1].as_str())
        .collect();
    assert_eq!(orders, ["1", "2", "120"]);
    assert!(stdout(&["groups", "q24", "check-normal", "q8"]).contains("[PASS]"));
    assert!(stdout(&["groups", "q48", "order"]).contains("\nQ48 48 2\n"));
    let bad = lambek(&["groups", "q8", "check-normal", "q24"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("[FAIL]"));
}

#[test]
fn cayley_json_has_index_matrix() {
    let j = parse_json(&stdout(&["groups", "q8", "cayley", "--format", "json"])).unwrap();
    let g = j.payload.group.unwrap();
    assert_eq!(g.order, 8);
    assert_eq!(g.cayley.len(), 8);
}
