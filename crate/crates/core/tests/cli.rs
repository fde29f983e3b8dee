use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scheme-walk"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect()
}

#[test]
fn walk_at_time_zero() {
    let o = run(&["walk", "--graph", "catalog:petersen", "--times", "0", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "t,stratum,re,im,prob\n\
         0.000000000000,0,1.000000000000,0.000000000000,1.000000000000\n\
         0.000000000000,1,0.000000000000,0.000000000000,0.000000000000\n\
         0.000000000000,2,0.000000000000,0.000000000000,0.000000000000\n"
    );
}

#[test]
fn emitted_probabilities_match_emitted_parts() {
    let o = run(&["walk", "--graph", "group:dihedral:7", "--t1", "20", "--steps", "33"]);
    assert!(o.status.success());
    for r in rows(&stdout(&o)) {
        assert!((r[4] - (r[2] * r[2] + r[3] * r[3])).abs() <= 1e-12);
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = [
        "walk",
        "--graph",
        "catalog:hamming:3,3",
        "--t1",
        "7",
        "--steps",
        "20",
        "--vertex-level",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn json_records() {
    let o = run(&[
        "walk",
        "--graph",
        r#"{"kind":"srg","n":10,"k":3,"lambda":0,"mu":1}"#,
        "--times",
        "0,1.5",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 6);
    assert_eq!(records[3]["t"], 1.5);
    assert_eq!(records[3]["stratum"], 0);
}

#[test]
fn spectrum_of_petersen() {
    let o = run(&["spectrum", "--graph", "catalog:petersen"]);
    let r = rows(&stdout(&o));
    assert_eq!(r, vec![vec![-2.0, 0.4], vec![1.0, 0.5], vec![3.0, 0.1]]);
}

#[test]
fn average_matches_quadrature_formula() {
    let o = run(&["average", "--graph", "srg:10,3,0,1"]);
    let r = rows(&stdout(&o));
    // (1/a_k) Σ_l B_l² P_k(x_l)² with P_1 = x, P_2 = x² - 3
    let atoms = [(-2.0f64, 0.4f64), (1.0, 0.5), (3.0, 0.1)];
    let sizes = [1.0, 3.0, 6.0];
    for (k, row) in r.iter().enumerate() {
        let want: f64 = atoms
            .iter()
            .map(|(x, b)| {
                let p = [1.0, *x, x * x - 3.0][k];
                (b * p).powi(2)
            })
            .sum::<f64>()
            / sizes[k];
        assert!((row[1] - want).abs() < 1e-12, "stratum {k}");
    }
}

#[test]
fn normalized_complete_graph() {
    let o = run(&[
        "walk",
        "--graph",
        "catalog:complete:5",
        "--times",
        "2",
        "--normalized",
        "--engine",
        "character",
    ]);
    let r = rows(&stdout(&o));
    let want = (num_complex::Complex64::new(0.0, -2.0).exp() + num_complex::Complex64::new(0.0, 0.5).exp() * 4.0) / 5.0;
    assert!((r[0][2] - want.re).abs() < 1e-12 && (r[0][3] - want.im).abs() < 1e-12);
}

#[test]
fn characters_csv() {
    let o = run(&["characters", "--group", "symmetric", "--n", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    let json = run(&["characters", "--group", r#"{"group":"cyclic","n":4}"#]);
    assert!(json.status.success());
    assert!(stdout(&json).contains("0.000000000000+1.000000000000i"));
}

#[test]
fn catalog_commands() {
    let list = stdout(&run(&["catalog", "list"]));
    assert!(list.lines().any(|l| l.starts_with("wells,")));
    let show = run(&["catalog", "show", "cycle", "--params", "7"]);
    assert!(stdout(&show).contains("c_forward,2 1 1\nb_backward,1 1 1\n"));
    let o = run(&["catalog", "show", "nothing"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("unknown_catalog_name: "));
}

#[test]
fn verify_passes_on_petersen() {
    let o = run(&["verify", "--graph", "catalog:petersen", "--t1", "20", "--steps", "64"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",PASS")));
    assert!(text.contains("quantum_decomposition"));
}

#[test]
fn tail_tolerance_from_environment() {
    let coarse = Command::new(env!("CARGO_BIN_EXE_scheme-walk"))
        .args(["spectrum", "--meixner", "0.5"])
        .env("SCHEME_WALK_TAIL_TOL", "1e-3")
        .output()
        .unwrap();
    let fine = run(&["spectrum", "--meixner", "0.5"]);
    assert!(stdout(&coarse).lines().count() < stdout(&fine).lines().count());
    let bad = Command::new(env!("CARGO_BIN_EXE_scheme-walk"))
        .args(["spectrum", "--meixner", "0.5"])
        .env("SCHEME_WALK_TAIL_TOL", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn error_paths() {
    for (args, code, prefix) in [
        (vec!["walk", "--graph", "{oops", "--times", "1"], 2, "schema_error: "),
        (
            vec![
                "walk",
                "--graph",
                r#"{"kind":"product","n":3,"copies":2,"extra":0}"#,
                "--times",
                "1",
            ],
            2,
            "schema_error: ",
        ),
        (
            vec!["walk", "--graph", "srg:10,3,0,2", "--times", "1"],
            2,
            "infeasible_parameters: ",
        ),
        (
            vec![
                "walk",
                "--graph",
                "catalog:petersen",
                "--times",
                "1",
                "--engine",
                "character",
            ],
            1,
            "engine_spec_mismatch: ",
        ),
        (
            vec!["walk", "--graph", "catalog:petersen", "--times", "-1"],
            1,
            "bad_parameter: ",
        ),
        (
            vec!["walk", "--graph", "catalog:petersen", "--times", "1", "--class", "1"],
            2,
            "bad_parameter: ",
        ),
        (
            vec!["spectrum", "--graph", "group:symmetric:9"],
            2,
            "unsupported_order: ",
        ),
        (vec!["bogus"], 2, "usage: "),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(code), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty(), "{args:?}");
        let err = stderr(&o);
        assert_eq!(err.lines().count(), 1, "{args:?}");
        assert!(err.starts_with(prefix), "{args:?}: {err}");
    }
}
