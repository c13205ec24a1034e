use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_diskpos"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn polygon_document(n: usize, r: f64) -> String {
    let disks: Vec<String> = (1..=n)
        .map(|j| {
            let t = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            format!(r#"{{"center":[{},{}],"radius":{r}}}"#, t.cos(), t.sin())
        })
        .collect();
    format!(r#"{{"disks":[{}]}}"#, disks.join(","))
}

const TANGENT: &str = r#"{"disks":[{"center":[-1,0],"radius":1},{"center":[1,0],"radius":1}]}"#;

#[test]
fn tangent_disks_are_positive() {
    let o = run(&["check", "--format", "json"], Some(TANGENT));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "PositiveDefinite");
    assert_eq!(v["beta"].as_f64(), Some(1.0));
    assert_eq!(v["admissible"], true);
}

#[test]
fn tangent_disks_exact_mode() {
    let o = run(&["check", "--mode", "exact"], Some(TANGENT));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("verdict: PositiveDefinite"), "{out}");
    assert!(out.contains("leading minors"), "{out}");
}

#[test]
fn empty_list_is_a_schema_error() {
    let o = run(&["check"], Some(r#"{"disks":[]}"#));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("disks"));
}

#[test]
fn malformed_json_is_a_schema_error() {
    let o = run(&["check"], Some("{\"disks\": [\n  {\"center\": [0, 0]}\n]}"));
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("radius") && err.contains("line"), "{err}");
}

#[test]
fn triangle_documents_around_rho_3() {
    let o = run(&["check"], Some(&polygon_document(3, 0.9)));
    assert!(stdout(&o).contains("verdict: PositiveDefinite"));
    let o = run(&["check"], Some(&polygon_document(3, 1.1)));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: NotPositiveDefinite"));
}

#[test]
fn strict_admissibility() {
    let doc = r#"{"disks":[{"center":[0,0],"radius":3},{"center":[1,0],"radius":0.1}]}"#;
    assert_eq!(run(&["check"], Some(doc)).status.code(), Some(0));
    assert_eq!(run(&["check", "--strict-admissible"], Some(doc)).status.code(), Some(3));
    assert_eq!(run(&["check", "--strict-admissible"], Some(TANGENT)).status.code(), Some(0));
}

#[test]
fn reads_a_file_and_reports_scale() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(TANGENT.as_bytes()).unwrap();
    let o = run(&["check", "--scale", "--format", "json", f.path().to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["scale"].as_f64().unwrap() - std::f64::consts::SQRT_2).abs() < 1e-8);
}

#[test]
fn eigen_certificate() {
    let o = run(&["check", "--eigen", "--format", "json"], Some(TANGENT));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["certificate"]["eigenvalues"].as_array().unwrap().len(), 2);
    assert_eq!(run(&["check", "--eigen", "--mode", "exact"], Some(TANGENT)).status.code(), Some(2));
}

#[test]
fn exact_mode_rejects_binary_floats() {
    let doc = r#"{"disks":[{"center":[0.1,0],"radius":1}]}"#;
    assert_eq!(run(&["check", "--mode", "exact"], Some(doc)).status.code(), Some(2));
    let doc = r#"{"disks":[{"center":["1/10",0],"radius":1}]}"#;
    assert_eq!(run(&["check", "--mode", "exact"], Some(doc)).status.code(), Some(0));
}

#[test]
fn rho_table() {
    let o = run(&["rho", "--n", "2..5", "--csv"], None);
    assert_eq!(o.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let rhos: Vec<f64> = reader.records().map(|r| r.unwrap()[1].parse().unwrap()).collect();
    let expected = [std::f64::consts::SQRT_2, 1.0, (2.0f64 / 3.0).sqrt(), 0.5f64.sqrt()];
    assert_eq!(rhos.len(), 4);
    for (a, b) in rhos.iter().zip(expected) {
        assert!((a - b).abs() < 1e-11, "{a} vs {b}");
    }
}

#[test]
fn rho_limits_row() {
    let o = run(&["rho", "--n", "4", "--csv", "--limits"], None);
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("limit,"), "{text}");
    assert!(last.contains("3.831705970"), "{last}");
    assert!(last.contains("1.21966989"), "{last}");
}

#[test]
fn rho_rejects_bad_ranges() {
    assert_eq!(run(&["rho", "--n", "1"], None).status.code(), Some(2));
    assert_eq!(run(&["rho", "--n", "5..3"], None).status.code(), Some(2));
    assert_eq!(run(&["rho", "--n", "x"], None).status.code(), Some(2));
    assert_eq!(run(&["rho"], None).status.code(), Some(2));
}

#[test]
fn csv_round_trip_at_printed_precision() {
    let o = run(&["rho", "--n", "2..12", "--csv"], None);
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let header = reader.headers().unwrap().clone();
    assert_eq!(header.iter().collect::<Vec<_>>(), ["n", "rho", "mu", "lower_bound", "upper_bound", "beta", "n_rho"]);
    for rec in reader.records() {
        let rec = rec.unwrap();
        let n: f64 = rec[0].parse().unwrap();
        let rho: f64 = rec[1].parse().unwrap();
        let mu: f64 = rec[2].parse().unwrap();
        let n_rho: f64 = rec[6].parse().unwrap();
        assert!((rho * rho - 1.0 - mu).abs() < 1e-11);
        assert!((n * rho - n_rho).abs() < 1e-10 * n_rho);
        for cell in rec.iter().skip(1).filter(|c| !c.is_empty()) {
            let v: f64 = cell.parse().unwrap();
            // reprinting at 12 significant digits reproduces the cell
            let again: f64 = format!("{v:.11e}").parse().unwrap();
            assert_eq!(again.to_string(), cell);
        }
    }
}

#[test]
fn output_is_deterministic() {
    let a = run(&["rho", "--n", "2..10", "--limits"], None);
    let b = run(&["rho", "--n", "2..10", "--limits"], None);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["verify", "--suite", "core", "--seed", "7"], None);
    let b = run(&["verify", "--suite", "core", "--seed", "7"], None);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["check", "--format", "json", "--scale"], Some(&polygon_document(5, 0.6)));
    let b = run(&["check", "--format", "json", "--scale"], Some(&polygon_document(5, 0.6)));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_triangle_passes() {
    let o = run(&["verify", "--suite", "triangle"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("triangle: PASS"));
}

#[test]
fn verify_symmetric_to_twelve() {
    let o = run(&["verify", "--suite", "symmetric", "--nmax", "12"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(run(&["verify", "--suite", "bogus"], None).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "orthopoly", "--nmax", "99"], None).status.code(), Some(2));
}

#[test]
fn triangle_command() {
    let o = run(&["triangle", "1", "1", "0.9", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["positive"], true);
    assert_eq!(v["matrix_verdict"], "PositiveDefinite");
    let o = run(&["triangle", "1", "1", "1.1"], None);
    assert!(stdout(&o).contains("positive: false"));
    assert_eq!(run(&["triangle", "1", "1", "2"], None).status.code(), Some(2));
    assert_eq!(run(&["triangle", "1", "1", "-1"], None).status.code(), Some(2));
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(run(&["--help"], None).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
}
