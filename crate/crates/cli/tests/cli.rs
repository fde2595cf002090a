use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn plotkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plotkin")).args(args).current_dir(root()).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn eval_prints_parameters_and_table_use() {
    let o = plotkin(&["eval", "recipes/c122_91.rcp"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "[122,91] over GF(4) d>=12 d<=22 (propagated; table bounds for tmp2, c1, c2)\n");
    let o = plotkin(&["eval", "recipes/c122_91.rcp", "--no-table"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[122,91] over GF(4) d=? (propagated)\n");
}

#[test]
fn eval_writes_matrix_that_distance_reads() {
    let dir = tempfile::tempdir().unwrap();
    let recipe = write(dir.path(), "h.rcp", "h = bch(2, 7, 3)\n");
    let mat = dir.path().join("h.mat");
    let o = plotkin(&["eval", &recipe, "--out", mat.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("[7,4] over GF(2)"));
    let o = plotkin(&["distance", mat.to_str().unwrap(), "--method", "exhaustive"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("Exact d=3"), "{}", stdout(&o));
    let o = plotkin(&["distance", mat.to_str().unwrap(), "--method", "bz"]);
    assert!(stdout(&o).contains("Exact d=3"), "{}", stdout(&o));
    let o = plotkin(&["distance", mat.to_str().unwrap(), "--method", "witness", "--target", "3", "--seed", "7"]);
    let out = stdout(&o);
    assert!(out.contains("seed 7") && out.contains("witness weight 3"), "{out}");
}

#[test]
fn eval_loads_relative_to_the_recipe() {
    let o = plotkin(&["eval", "recipes/c124_78.rcp"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("[124,78] over GF(3) d>=16"), "{}", stdout(&o));
}

#[test]
fn data_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.rcp", "a = bch(2, 7, 3)\nc = plotkin(a, b)\n");
    let o = plotkin(&["eval", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("2:16: undefined name `b`"), "{}", stderr(&o));
    let o = plotkin(&["eval", "no/such.rcp"]);
    assert_eq!(o.status.code(), Some(2));
    let table = write(dir.path(), "t.tbl", "4 10 3 5 -\n4 10 3 9 -\n");
    let o = plotkin(&["stats", "--table", &table]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(plotkin(&[]).status.code(), Some(1));
    assert_eq!(plotkin(&["distance", "x.mat", "--method", "guess"]).status.code(), Some(1));
    assert_eq!(plotkin(&["scan", "--q", "4"]).status.code(), Some(1));
    assert_eq!(plotkin(&["--threads", "0", "stats", "--table", "fixtures/paper_sixteen.tbl"]).status.code(), Some(1));
    assert_eq!(plotkin(&["--help"]).status.code(), Some(0));
}

#[test]
fn scan_reports_improvements() {
    let o = plotkin(&["scan", "--table", "fixtures/paper_sixteen.tbl", "--q", "4", "--shorten"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let tsv = stdout(&o);
    let mut lines = tsv.lines();
    assert_eq!(lines.next().unwrap(), "q\t2n\tk\tplotkin_d\ttable_d_low\ttable_d_high\tclass\tn\tk1\tk2\tshortened");
    assert!(tsv.contains("4\t126\t95\t12\t11\t-\tImproves\t63\t53\t42\t0\n"), "{tsv}");
    assert!(tsv.contains("4\t127\t96\t12\t11\t-\tImproves\t64\t54\t43\t1\n"), "{tsv}");
    assert!(stderr(&o).contains("cells: 3 Improves, 10 Matches"), "{}", stderr(&o));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("f.tsv");
    let o = plotkin(&["--threads", "1", "scan", "--table", "fixtures/paper_sixteen.tbl", "--q", "4", "--shorten", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), tsv);
}

#[test]
fn stats_table() {
    let o = plotkin(&["stats", "--table", "fixtures/paper_sixteen.tbl"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    let totals: Vec<(&str, &str)> = rows.iter().map(|r| (r[0], r[1])).collect();
    assert_eq!(
        totals,
        [("2", "16512"), ("3", "14762"), ("4", "16512"), ("5", "4290"), ("7", "2550"), ("8", "4290"), ("9", "4290")]
    );
}
