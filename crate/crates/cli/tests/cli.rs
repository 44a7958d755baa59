//! End-to-end tests of the `binomiacci` binary: reference outputs, output
//! formats and their round-trips, exit codes, and determinism.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_binomiacci"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
        output.status.code().expect("exit code present"),
    )
}

fn csv_data_rows(stdout: &str) -> Vec<Vec<String>> {
    stdout
        .lines()
        .skip(1)
        .map(|line| line.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn table_pretty_marks_diagonal() {
    let (stdout, _, code) = run(&["table", "--rows", "4", "--cols", "7"]);
    assert_eq!(code, 0);
    for marked in ["*1*", "*2*", "*8*", "*30*", "*114*"] {
        assert!(stdout.contains(marked), "missing {marked} in:\n{stdout}");
    }
    assert!(stdout.contains("720"));
}

#[test]
fn table_csv_reference_block() {
    let (stdout, _, code) = run(&["table", "--rows", "4", "--cols", "7", "--format", "csv"]);
    assert_eq!(code, 0);
    let want = "\
k,n0,n1,n2,n3,n4,n5,n6,n7
0,1,1,2,3,5,8,13,21
1,1,2,4,7,12,20,33,54
2,2,4,8,15,27,47,80,134
3,3,7,15,30,57,104,184,318
4,5,12,27,57,114,218,402,720
";
    assert_eq!(stdout, want);
}

#[test]
fn table_csv_eight_by_eight_diagonal() {
    let (stdout, _, code) = run(&["table", "--rows", "8", "--cols", "8", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows = csv_data_rows(&stdout);
    assert_eq!(rows.len(), 9);
    let diagonal: Vec<&str> = rows
        .iter()
        .enumerate()
        .map(|(k, r)| r[k + 1].as_str())
        .collect();
    assert_eq!(
        diagonal,
        ["1", "2", "8", "30", "114", "436", "1676", "6468", "25040"]
    );
}

#[test]
fn table_single_fibonacci_row() {
    let (stdout, _, code) = run(&["table", "--rows", "0", "--cols", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "k,n0,n1,n2,n3\n0,1,1,2,3\n");
}

#[test]
fn triangle_bottom_row_and_apex() {
    let (stdout, _, code) = run(&["triangle", "--rows", "7"]);
    assert_eq!(code, 0);
    let last = stdout.lines().last().unwrap();
    assert_eq!(last, "13 20 27 30 27 20 13");

    let (stdout, _, code) = run(&["triangle", "--rows", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1\n");
}

#[test]
fn triangle_rows_are_palindromic() {
    let (stdout, _, code) = run(&["triangle", "--rows", "9", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows = csv_data_rows(&stdout);
    assert_eq!(rows[0], ["0", "0", "1"]);
    for m in 0..9usize {
        let values: Vec<&str> = rows
            .iter()
            .filter(|r| r[0] == m.to_string())
            .map(|r| r[2].as_str())
            .collect();
        assert_eq!(values.len(), m + 1);
        for k in 0..=m {
            assert_eq!(values[k], values[m - k], "row {m} not palindromic");
        }
    }
}

#[test]
fn series_listings() {
    let (stdout, _, code) = run(&["series", "--which", "central", "--order", "5"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1 2 8 30 114 436\n");

    let (stdout, _, code) = run(&["series", "--which", "fib", "--order", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1 1 2 3 5 8 13\n");

    let (stdout, _, code) = run(&["series", "--which", "row:2", "--order", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "2 4 8 15 27\n");
}

#[test]
fn series_bivariate_grid() {
    let (stdout, _, code) = run(&[
        "series",
        "--which",
        "bivariate",
        "--order",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let rows = csv_data_rows(&stdout);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0], ["0", "1", "1", "2"]);
    assert_eq!(rows[1], ["1", "1", "2", "4"]);
    assert_eq!(rows[2], ["2", "2", "4", "8"]);
}

#[test]
fn series_rejects_unknown_kind() {
    let (_, stderr, code) = run(&["series", "--which", "diag", "--order", "4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown series"));
}

#[test]
fn asympt_first_row() {
    let (stdout, _, code) = run(&["asympt", "--max", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows = csv_data_rows(&stdout);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], "1");
    assert_eq!(rows[0][1], "2");
    let estimate: f64 = rows[0][2].parse().unwrap();
    let ratio: f64 = rows[0][3].parse().unwrap();
    assert!((estimate - 6.77).abs() < 0.01);
    assert!((ratio - 3.385).abs() < 0.01);
}

#[test]
fn asympt_matches_reference_rows() {
    let (stdout, _, code) = run(&["asympt", "--max", "15", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows = csv_data_rows(&stdout);
    assert_eq!(rows.len(), 15);
    for (i, row) in rows.iter().enumerate() {
        let estimate: f64 = row[2].parse().unwrap();
        let ratio: f64 = row[3].parse().unwrap();
        let estimate_ref = binomiacci_core::verify::REFERENCE_ESTIMATES[i];
        let ratio_ref = binomiacci_core::verify::REFERENCE_RATIOS[i];
        assert_eq!(
            row[1],
            binomiacci_core::verify::REFERENCE_CENTRAL[i].to_string()
        );
        assert!((estimate - estimate_ref).abs() < 0.001 * estimate_ref);
        assert!((ratio - ratio_ref).abs() < 0.01);
    }
}

#[test]
fn asympt_ratio_strictly_decreasing_to_200() {
    let (stdout, _, code) = run(&["asympt", "--max", "200", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows = csv_data_rows(&stdout);
    assert_eq!(rows.len(), 200);
    let ratios: Vec<f64> = rows.iter().map(|r| r[3].parse().unwrap()).collect();
    for pair in ratios.windows(2) {
        assert!(pair[1] < pair[0]);
    }
}

#[test]
fn verify_suite_gf_passes() {
    let (stdout, _, code) = run(&["verify", "--suite", "gf"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS  gf/row_gf_equals_recurrence_k16_n64"));
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn verify_all_passes_with_check_count() {
    let (stdout, _, code) = run(&["verify", "--suite", "all"]);
    assert_eq!(code, 0);
    let summary = stdout.lines().last().unwrap();
    assert!(summary.ends_with("0 failed"));
    let count: usize = summary.split(' ').next().unwrap().parse().unwrap();
    assert!(count >= 20, "only {count} checks");
}

#[test]
fn verify_rejects_unknown_suite() {
    let (_, stderr, code) = run(&["verify", "--suite", "bogus"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown suite"));
}

#[test]
fn missing_arguments_are_usage_errors() {
    let (_, _, code) = run(&["table"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn size_guard_and_force_override() {
    let (_, stderr, code) = run(&["table", "--rows", "10001", "--cols", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--force"));

    let (stdout, _, code) = run(&[
        "table", "--rows", "10001", "--cols", "0", "--format", "csv", "--force",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 10_003);
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [
        vec!["table", "--rows", "3", "--cols", "5", "--format", "json"],
        vec!["triangle", "--rows", "6", "--format", "json"],
        vec![
            "series", "--which", "central", "--order", "8", "--format", "json",
        ],
        vec!["asympt", "--max", "12", "--format", "json"],
        vec!["verify", "--suite", "recurrence", "--format", "json"],
    ] {
        let (stdout, _, code) = run(&args);
        assert_eq!(code, 0);
        let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
        let reserialized = serde_json::to_string(&value).unwrap() + "\n";
        assert_eq!(
            stdout, reserialized,
            "round trip changed bytes for {args:?}"
        );
        assert_eq!(value["command"], args[0]);
        assert!(value["rows"].is_array());
    }
}

#[test]
fn csv_round_trips_byte_identically() {
    let (stdout, _, code) = run(&["table", "--rows", "5", "--cols", "9", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(!stdout.contains('\r'));
    let reserialized: String = stdout
        .lines()
        .map(|line| line.split(',').collect::<Vec<_>>().join(",") + "\n")
        .collect();
    assert_eq!(stdout, reserialized);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["verify", "--suite", "residues"],
        vec!["asympt", "--max", "40", "--format", "json"],
    ] {
        let (first, _, _) = run(&args);
        let (second, _, _) = run(&args);
        assert_eq!(first, second, "nondeterministic output for {args:?}");
    }
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let path = std::env::temp_dir().join(format!("binomiacci-out-{}.csv", std::process::id()));
    let path_str = path.to_str().unwrap();
    let (stdout, _, code) = run(&["table", "--rows", "2", "--cols", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let (piped, _, code) = run(&[
        "table", "--rows", "2", "--cols", "2", "--format", "csv", "--out", path_str,
    ]);
    assert_eq!(code, 0);
    assert!(piped.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, stdout);
}
