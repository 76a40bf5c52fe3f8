use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn eqdom(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqdom"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn gen_writes_canonical_edge_lists() {
    let dir = TempDir::new().unwrap();
    assert_eq!(
        code(&eqdom(dir.path(), &["gen", "path", "5", "-o", "p5.g"])),
        0
    );
    assert_eq!(
        fs::read_to_string(dir.path().join("p5.g")).unwrap(),
        "5 4\n1 2\n2 3\n3 4\n4 5\n"
    );

    let w4 = eqdom(dir.path(), &["gen", "wheel", "4"]);
    assert!(stdout(&w4).starts_with("5 8\n"));
    let c5 = eqdom(dir.path(), &["gen", "--complement", "cycle", "5"]);
    assert!(stdout(&c5).starts_with("5 5\n"));
}

#[test]
fn gen_rejects_bad_parameters() {
    let dir = TempDir::new().unwrap();
    let o = eqdom(dir.path(), &["gen", "wheel", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("t ≥ 3 required"), "{}", stderr(&o));
    assert_eq!(code(&eqdom(dir.path(), &["gen", "bistar", "3"])), 1);
    assert_ne!(code(&eqdom(dir.path(), &["gen", "petersen", "3"])), 0);
}

#[test]
fn chromatic_values_and_witness() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    eqdom(d, &["gen", "complete-bipartite", "2", "4", "-o", "k.g"]);
    let o = eqdom(d, &["chromatic", "k.g", "--invariant", "chi-d"]);
    assert_eq!((code(&o), stdout(&o)), (0, "chi-d = 2\n".to_owned()));

    eqdom(d, &["gen", "--complement", "cycle", "3", "-o", "c3.g"]);
    let o = eqdom(d, &["chromatic", "c3.g", "-o", "w.c"]);
    assert_eq!(stdout(&o), "chi-ed = 3\n");
    let v = eqdom(d, &["verify", "c3.g", "w.c"]);
    assert_eq!(code(&v), 0);

    eqdom(d, &["gen", "wheel", "7", "-o", "w7.g"]);
    let o = eqdom(
        d,
        &["chromatic", "w7.g", "--invariant", "chi-ed", "-o", "w7.c"],
    );
    assert_eq!(stdout(&o), "chi-ed = 5\n");
    assert_eq!(code(&eqdom(d, &["verify", "w7.g", "w7.c"])), 0);
}

#[test]
fn chromatic_budget_exhaustion_exits_2() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    eqdom(d, &["gen", "path", "11", "-o", "p.g"]);
    let o = eqdom(d, &["chromatic", "p.g", "--budget", "10"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("≤ chi-ed ≤ 11"), "{}", stderr(&o));
}

#[test]
fn chromatic_rejects_malformed_files() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("bad.g"), "3 2\n1 2\n2 2\n").unwrap();
    let o = eqdom(dir.path(), &["chromatic", "bad.g"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    assert_eq!(code(&eqdom(dir.path(), &["chromatic", "missing.g"])), 1);
}

#[test]
fn verify_reports_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    eqdom(d, &["gen", "path", "11", "-o", "p11.g"]);
    let coloring: String = [1, 2, 1, 3, 4, 3, 5, 6, 5, 7, 8]
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{} {c}\n", i + 1))
        .collect();
    fs::write(d.join("fig.c"), coloring).unwrap();
    let o = eqdom(d, &["verify", "p11.g", "fig.c"]);
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["equitable_dominator"], true);
    assert_eq!(report["num_colors"], 8);

    eqdom(d, &["gen", "path", "3", "-o", "p3.g"]);
    fs::write(d.join("bad.c"), "1 1\n2 1\n3 2\n").unwrap();
    let o = eqdom(d, &["verify", "p3.g", "bad.c"]);
    assert_eq!(code(&o), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["proper"], false);

    fs::write(d.join("2k2.g"), "4 2\n1 2\n3 4\n").unwrap();
    fs::write(d.join("alt.c"), "1 1\n2 2\n3 1\n4 2\n").unwrap();
    let o = eqdom(d, &["verify", "2k2.g", "alt.c"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        (report["proper"].clone(), report["dominator"].clone()),
        (true.into(), false.into())
    );
    assert_eq!(code(&o), 1);

    fs::write(d.join("short.c"), "1 1\n2 2\n").unwrap();
    let o = eqdom(d, &["verify", "p3.g", "short.c"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).is_empty());
}

#[test]
fn construct_then_verify() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let cases: &[&[&str]] = &[
        &["path", "11"],
        &["cycle", "8"],
        &["wheel", "11"],
        &["helm", "5"],
        &["bistar", "4", "6"],
        &["complete-bipartite", "2", "7"],
        &["--complement", "helm", "6"],
        &["--complement", "bistar", "3", "2"],
    ];
    for case in cases {
        let mut args = vec!["construct"];
        args.extend_from_slice(case);
        args.extend(["-o", "c.txt"]);
        let o = eqdom(d, &args);
        assert_eq!(code(&o), 0, "{case:?}: {}", stderr(&o));
        let mut gen = vec!["gen"];
        gen.extend_from_slice(case);
        gen.extend(["-o", "g.txt"]);
        assert_eq!(code(&eqdom(d, &gen)), 0);
        assert_eq!(
            code(&eqdom(d, &["verify", "g.txt", "c.txt"])),
            0,
            "{case:?}"
        );
    }
    let o = eqdom(d, &["construct", "wheel", "11", "-o", "w.c"]);
    assert_eq!(stdout(&o), "wheel 11: 7 colors\n");
    let o = eqdom(d, &["construct", "path", "11"]);
    assert!(stdout(&o).starts_with("1 1\n2 2\n3 1\n4 3\n"));
}

#[test]
fn construct_refuses_out_of_range() {
    let dir = TempDir::new().unwrap();
    let o = eqdom(dir.path(), &["construct", "helm", "4"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("t ≥ 5 required"), "{}", stderr(&o));
    let o = eqdom(dir.path(), &["construct", "--complement", "cycle", "4"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("n ≥ 5 required"));
}

#[test]
fn bipartite_prints_value_and_partitions() {
    let dir = TempDir::new().unwrap();
    let o = eqdom(dir.path(), &["bipartite", "2", "4"]);
    assert_eq!(stdout(&o), "chi-ed(K_{2,4}) = 3\n2 = 2\n4 = 2+2\n");
    let o = eqdom(dir.path(), &["bipartite", "100", "101"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("chi-ed(K_{100,101}) = 2\n"));
    assert_eq!(code(&eqdom(dir.path(), &["bipartite", "0", "3"])), 1);
}

#[test]
fn survey_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let args = [
        "survey",
        "--families",
        "path,wheel,complement-cycle",
        "--max-size",
        "7",
    ];
    let a = eqdom(dir.path(), &args);
    let b = eqdom(dir.path(), &args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let reordered = eqdom(
        dir.path(),
        &[
            "survey",
            "--families",
            "complement-cycle,wheel,path",
            "--max-size",
            "7",
        ],
    );
    assert_eq!(a.stdout, reordered.stdout);
}

#[test]
fn survey_csv_and_json_hold_the_same_records() {
    let dir = TempDir::new().unwrap();
    let base = ["survey", "--families", "all", "--max-size", "5"];
    let json = eqdom(dir.path(), &[&base[..], &["--format", "json"]].concat());
    let csv = eqdom(dir.path(), &[&base[..], &["--format", "csv"]].concat());
    let report: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let records = report["records"].as_array().unwrap();

    let text = stdout(&csv);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("family,params,formula,in_range,oracle,verdict")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), records.len());

    let field = |v: &serde_json::Value| match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    for (row, rec) in rows.iter().zip(records) {
        let from_json: Vec<String> = [
            "family", "params", "formula", "in_range", "oracle", "verdict",
        ]
        .iter()
        .map(|k| field(&rec[*k]))
        .collect();
        assert_eq!(row, &from_json);
    }
    let summary = &report["summary"];
    let tally = |v: &str| rows.iter().filter(|r| r[5] == v).count() as u64;
    assert_eq!(summary["agree"], tally("agree"));
    assert_eq!(summary["diverge"], tally("diverge"));
    assert_eq!(summary["out_of_range_info"], tally("out-of-range-info"));
    assert_eq!(summary["unknown"], tally("unknown"));
}

#[test]
fn survey_paths_and_complement_cycles() {
    let dir = TempDir::new().unwrap();
    let o = eqdom(
        dir.path(),
        &[
            "survey",
            "--families",
            "path",
            "--max-size",
            "9",
            "--format",
            "csv",
        ],
    );
    let text = stdout(&o);
    let verdicts: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(verdicts.len(), 9);
    // P_8 needs 5 colors; the closed form says 6.
    assert_eq!(text.lines().nth(8), Some("path,8,6,true,5,diverge"));
    assert_eq!(verdicts.iter().filter(|v| **v == "agree").count(), 8);

    let o = eqdom(
        dir.path(),
        &[
            "survey",
            "--families",
            "complement-cycle",
            "--min-size",
            "3",
            "--max-size",
            "6",
            "--format",
            "csv",
        ],
    );
    assert_eq!(
        stdout(&o),
        "family,params,formula,in_range,oracle,verdict\n\
         complement-cycle,3,2,false,3,out-of-range-info\n\
         complement-cycle,4,2,false,3,out-of-range-info\n\
         complement-cycle,5,3,true,3,agree\n\
         complement-cycle,6,3,true,3,agree\n"
    );
}

#[test]
fn survey_reports_unknown_on_small_budgets() {
    let dir = TempDir::new().unwrap();
    let o = eqdom(
        dir.path(),
        &[
            "survey",
            "--families",
            "path",
            "--min-size",
            "9",
            "--max-size",
            "9",
            "--budget",
            "3",
            "--format",
            "csv",
        ],
    );
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("path,9,6,true,unknown(budget),unknown"));
}

#[test]
fn survey_complete_bipartite_agrees() {
    let dir = TempDir::new().unwrap();
    let o = eqdom(
        dir.path(),
        &[
            "survey",
            "--families",
            "complete-bipartite",
            "--max-size",
            "4",
            "--format",
            "csv",
        ],
    );
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 17);
    assert!(
        text.lines().skip(1).all(|l| l.ends_with(",agree")),
        "{text}"
    );
}

#[test]
fn bounds_check_passes() {
    let dir = TempDir::new().unwrap();
    let o = eqdom(dir.path(), &["bounds", "--count", "30", "--max-n", "7"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["violations"], 0);
    assert_eq!(report["graphs"], 30);
}
