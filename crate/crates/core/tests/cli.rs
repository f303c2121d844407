use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalan-poset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn map_both_directions() {
    let o = run(&["map", "f", "{1,4,6}/{2,3}/{5}/{7,8}"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "64573812\n");
    let o = run(&["map", "finv", "64573812"]);
    assert_eq!(stdout(&o), "{1,4,6}/{2,3}/{5}/{7,8}\n");
}

#[test]
fn data_errors_exit_one() {
    assert_eq!(run(&["map", "f", "{1,3}/{2,4}"]).status.code(), Some(1));
    assert_eq!(run(&["map", "finv", "132"]).status.code(), Some(1));
    assert_eq!(run(&["poset", "P", "--n", "11"]).status.code(), Some(1));
    assert_eq!(run(&["census", "--n", "15"]).status.code(), Some(1));
    assert_eq!(
        run(&["verify", "--n", "9", "--checks", "sperner"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        run(&["verify", "--n", "4", "--checks", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "perms", "--n", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "ncp", "--n", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["poset", "P"]).status.code(), Some(2));
}

#[test]
fn enumerate_counts_and_limit() {
    let o = run(&["enumerate", "av132", "--n", "5"]);
    assert_eq!(stdout(&o).lines().count(), 42);
    let o = run(&["enumerate", "ncp", "--n", "4", "--limit", "3"]);
    assert_eq!(stdout(&o), "{1,2,3,4}\n{1,2,3}/{4}\n{1,2,4}/{3}\n");
}

#[test]
fn verify_reports_one_line_per_check() {
    let o = run(&["verify", "--n", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().all(|l| l.ends_with(" PASS")));
    let o = run(&["verify", "--n", "10", "--checks", "lemma"]);
    assert_eq!(stdout(&o), "lemma n=10 examined=512 violations=0 PASS\n");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["poset", "P", "--n", "5", "--format", "json"][..],
        &["poset", "Q", "--n", "5", "--format", "dot"][..],
        &["census", "--n", "7"][..],
        &["verify", "--n", "6"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("catalan-poset-cli-{}.csv", std::process::id()));
    let o = run(&["census", "--n", "3", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("descent_set_text,size,count\n"));
}
