use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn mcfilter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcfilter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Two interleaved Gaussian-ish blobs with a textual label in the middle column.
fn write_blobs(path: &Path) {
    let mut text = String::new();
    for i in 0..40 {
        let t = i as f64 * 0.37;
        let (cx, label) = if i % 2 == 0 { (0.0, "good") } else { (4.0, "bad") };
        text.push_str(&format!("{},{label},{}\n", cx + t.sin(), (1.7 * t).cos()));
    }
    fs::write(path, text).unwrap();
}

#[test]
fn embed_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("blobs.csv");
    write_blobs(&input);
    let csv = dir.path().join("emb.csv");
    let svg = dir.path().join("emb.svg");
    let out = mcfilter(&[
        "embed", "--input", path_arg(&input), "--label-col", "1", "--epsilon", "2",
        "--filter", "min", "--out-csv", path_arg(&csv), "--out-svg", path_arg(&svg),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout(&out);
    let line = report.lines().find(|l| l.starts_with("half-space error: ")).unwrap();
    assert!(line.ends_with('%'));
    assert_eq!(line, "half-space error: 0.0%");

    let table = fs::read_to_string(&csv).unwrap();
    let mut lines = table.lines();
    assert_eq!(lines.next(), Some("index,phi1,phi2,label"));
    assert_eq!(lines.count(), 40);
    assert!(!table.contains('\r'));
    let drawing = fs::read_to_string(&svg).unwrap();
    assert_eq!(drawing.matches("<circle").count(), 40);
}

#[test]
fn embed_three_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("blobs.csv");
    write_blobs(&input);
    let csv = dir.path().join("emb3.csv");
    let out = mcfilter(&[
        "embed", "--input", path_arg(&input), "--label-col", "1", "--epsilon", "2",
        "--dims", "3", "--out-csv", path_arg(&csv),
    ]);
    assert!(out.status.success());
    let table = fs::read_to_string(&csv).unwrap();
    assert!(table.starts_with("index,phi1,phi2,phi3,label\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let two = dir.path().join("two.csv");
    fs::write(&two, "0,0\n1,0\n").unwrap();

    // strict annihilation of a two-point chain is a numerical failure
    let out = mcfilter(&["embed", "--input", path_arg(&two), "--epsilon", "1", "--filter", "min"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("filter failed"));

    let missing = dir.path().join("missing.csv");
    let out = mcfilter(&["embed", "--input", path_arg(&missing), "--epsilon", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let ragged = dir.path().join("ragged.csv");
    fs::write(&ragged, "0,0\n1\n2,2\n").unwrap();
    let out = mcfilter(&["embed", "--input", path_arg(&ragged), "--epsilon", "1"]);
    assert_eq!(out.status.code(), Some(2));

    for bad in [
        vec!["embed", "--input", path_arg(&two), "--epsilon", "-1"],
        vec!["embed", "--input", path_arg(&two), "--epsilon", "1", "--dims", "4"],
        vec!["embed", "--input", path_arg(&two), "--epsilon", "1", "--filter", "min", "--filter-k", "1"],
        vec!["simulate", "--graph", "ring:5", "--p", "0.1"],
        vec!["simulate", "--graph", "cycle:10", "--p", "1.5"],
        vec!["circle", "--points", "5", "--edges", "11"],
        vec!["frobnicate"],
    ] {
        let out = mcfilter(&bad);
        assert_eq!(out.status.code(), Some(1), "{bad:?}");
    }

    let out = mcfilter(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn simulate_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("c7.txt");
    let list: String = (0..7).map(|v| format!("{v} {}\n", (v + 1) % 7)).collect();
    fs::write(&edges, list).unwrap();
    let csv = dir.path().join("sim.csv");
    let out = mcfilter(&[
        "simulate", "--graph", &format!("file:{}", edges.display()), "--p", "0.1",
        "--trials", "25", "--seed", "5", "--out-csv", path_arg(&csv),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("(n = 7, c = 4)"));
    let table = fs::read_to_string(&csv).unwrap();
    assert!(table.starts_with("trial,N_ordered,N_unordered\n"));
    assert_eq!(table.lines().count(), 26);

    // isolated vertex 3 in the base graph
    fs::write(&edges, "0 1\n1 2\n2 0\n4 3\n5 5\n").unwrap();
    let out = mcfilter(&["simulate", "--graph", &format!("file:{}", edges.display()), "--p", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
    fs::write(&edges, "0 1\n1 2\n2 0\n4 5\n").unwrap();
    let out = mcfilter(&["simulate", "--graph", &format!("file:{}", edges.display()), "--p", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn grid_simulation_reports_annihilation() {
    let out = mcfilter(&["simulate", "--graph", "grid:10", "--p", "0", "--trials", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mean annihilated columns: 100.000 / 100"));
    assert!(text.contains("all columns annihilated in every trial"));
    assert!(text.contains("result: PASS"));
}

#[test]
fn circle_outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let mut runs = Vec::new();
    for run in 0..2 {
        let csv = dir.path().join(format!("run{run}.csv"));
        let svg = dir.path().join(format!("run{run}.svg"));
        let out = mcfilter(&[
            "circle", "--edges", "5", "--seed", "7", "--out-csv", path_arg(&csv), "--out-svg", path_arg(&svg),
        ]);
        assert!(out.status.success());
        let read = |name: &str| fs::read(dir.path().join(name)).unwrap();
        runs.push((
            read(&format!("run{run}_p.csv")),
            read(&format!("run{run}_q.csv")),
            read(&format!("run{run}_p.svg")),
            stdout(&out),
        ));
        let svg_text = String::from_utf8(read(&format!("run{run}_q.svg"))).unwrap();
        assert_eq!(svg_text.matches("<circle").count(), 100);
    }
    assert_eq!(runs[0], runs[1]);
}
