use std::io::Write;
use std::process::{Command, Output};

use hyperarr_cli::report::Report;
use tempfile::NamedTempFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperarr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn three_lines() -> NamedTempFile {
    file("# x = 0, y = 0, x + y = 1\ndim 2\n1 0 | 0\n0 1 | 0\n1 1 | 1\n")
}

fn json(args: &[&str]) -> (String, Report) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let report: Report = serde_json::from_str(&text).unwrap();
    (text, report)
}

#[test]
fn shi_chi_by_all_methods() {
    let o = run(&["chi", "--family", "shi", "--n", "3", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("chi(t) = t^3 - 6t^2 + 9t"), "{out}");
    assert!(!out.contains("DISAGREES"));
    let (_, r) = json(&["chi", "--family", "shi", "--n", "3", "--method", "all"]);
    let chi = r.chi.unwrap();
    assert_eq!(chi.coefficients, ["0", "9", "-6", "1"]);
    assert_eq!(chi.methods.len(), 3);
    assert!(r.checks.iter().all(|c| c.passed));
}

#[test]
fn catalan_region_counts() {
    let out = stdout(&run(&["regions", "--family", "catalan", "--n", "3"]));
    assert!(out.contains("regions: 30") && out.contains("bounded: 12"), "{out}");
}

#[test]
fn chi_from_file() {
    let f = three_lines();
    let out = stdout(&run(&["chi", "--file", f.path().to_str().unwrap()]));
    assert!(out.contains("t^2 - 3t + 3"), "{out}");
}

#[test]
fn json_round_trips_byte_for_byte() {
    let f = three_lines();
    let path = f.path().to_str().unwrap();
    let g = file("vertices 4\n1 2\n2 3\n3 4\n1 4\n");
    let cases: Vec<Vec<&str>> = vec![
        vec!["chi", "--file", path, "--method", "all"],
        vec!["regions", "--file", path, "--enumerate"],
        vec!["parking", "--n", "3", "--labels"],
        vec!["ballot", "--n", "3"],
        vec!["os", "--file", path],
        vec!["linial-roots", "--n", "6"],
        vec![
            "graph",
            "--file",
            g.path().to_str().unwrap(),
            "--chromatic",
            "--acyclic",
        ],
        vec!["selftest", "--criterion", "2"],
    ];
    for args in cases {
        let (text, report) = json(&args);
        assert_eq!(report.to_json(), text, "{args:?}");
        // Rationals are strings, never floats.
        if let Some(chi) = &report.chi {
            assert!(chi
                .coefficients
                .iter()
                .all(|c| c.parse::<i64>().is_ok() || c.contains('/')));
        }
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "regions", "--family", "shi", "--n", "3", "--enumerate"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
    let mut threaded = vec!["--threads", "2"];
    threaded.extend_from_slice(&args);
    assert_eq!(stdout(&run(&args)), stdout(&run(&threaded)));
}

#[test]
fn region_payloads() {
    let f = three_lines();
    let (_, r) = json(&["regions", "--file", f.path().to_str().unwrap(), "--bounded"]);
    let regions = r.regions.unwrap();
    assert_eq!(regions.len(), 1);
    assert_eq!(regions[0].signs, "++-");
    assert_eq!(r.counts.unwrap().regions, 7);
}

#[test]
fn combinatorial_subcommands() {
    let (_, r) = json(&["parking", "--n", "3", "--labels"]);
    let p = r.parking.unwrap();
    assert_eq!(p.count, 16);
    assert_eq!(p.labels.unwrap().len(), 16);

    let (_, r) = json(&["ballot", "--n", "3"]);
    let b = r.ballots.unwrap();
    assert_eq!(b.sequences.len(), 5);
    assert_eq!(b.sequences.iter().filter(|s| s.bounded).count(), 2);

    let (_, r) = json(&["linial-roots", "--n", "5", "--tol", "1e-9"]);
    let roots = r.linial_roots.unwrap();
    assert_eq!(roots.real_parts.len(), 4);
    assert!(roots.max_deviation < 1e-9);

    let g = file("vertices 3\n1 2\n2 3\n1 3\n");
    let (_, r) = json(&["graph", "--file", g.path().to_str().unwrap()]);
    let g = r.graph.unwrap();
    assert_eq!(g.chromatic.as_deref(), Some("t^3 - 3t^2 + 2t"));
    assert_eq!(g.acyclic_orientations, Some(6));
    assert_eq!(g.regions, Some(6));

    let f = three_lines();
    let (_, r) = json(&["os", "--file", f.path().to_str().unwrap()]);
    assert_eq!(r.orlik_solomon.unwrap().graded_dimensions, [1, 3, 3]);
}

#[test]
fn exit_codes() {
    let bad = file("dim 2\n1 x | 0\n");
    assert_eq!(
        run(&["chi", "--file", bad.path().to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["chi", "--file", "/no/such/file.arr"]).status.code(), Some(2));
    assert_eq!(run(&["chi", "--family", "braid"]).status.code(), Some(2));
    assert_eq!(run(&["chi", "--family", "nonsense", "--n", "2"]).status.code(), Some(2));
    let budget = [
        "--max-points",
        "50",
        "chi",
        "--family",
        "braid",
        "--n",
        "3",
        "--method",
        "finitefield",
    ];
    assert_eq!(run(&budget).status.code(), Some(1));
    let regions = [
        "--max-regions",
        "3",
        "regions",
        "--family",
        "braid",
        "--n",
        "3",
        "--enumerate",
    ];
    assert_eq!(run(&regions).status.code(), Some(1));
    assert_eq!(run(&["parking", "--n", "5", "--labels"]).status.code(), Some(1));
    assert_eq!(run(&["linial-roots", "--n", "4", "--tol", "0"]).status.code(), Some(1));
    assert_eq!(run(&["selftest", "--criterion", "3"]).status.code(), Some(0));
}
