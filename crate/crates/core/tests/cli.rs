use std::io::Write;
use std::process::{Command, Stdio};

use syncswitch::automaton::parse_dfa;
use syncswitch::cli::run;

fn call(args: &[&str], input: &str) -> (i32, String, String) {
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("syncswitch").chain(args.iter().copied());
    let code = run(argv, &mut stdin, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str], input: &str) -> String {
    let (code, out, err) = call(args, input);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn gen_pipes_into_sw() {
    assert_eq!(ok(&["sw", "-"], &ok(&["gen", "cerny", "4"], "")), "5\n");
    assert_eq!(ok(&["sw", "-"], &ok(&["gen", "a", "9"], "")), "41\n");
    assert_eq!(ok(&["ssl", "-"], &ok(&["gen", "r", "5"], "")), "16\n");
}

#[test]
fn every_family_round_trips() {
    let cases = [
        ("cerny", "7"),
        ("p", "5"),
        ("p-variant", "5"),
        ("r", "6"),
        ("q", "8"),
        ("a", "7"),
        ("b", "6"),
    ];
    for (family, n) in cases {
        let text = ok(&["gen", family, n], "");
        let dfa = parse_dfa(&text).unwrap();
        assert_eq!(syncswitch::automaton::serialize_dfa(&dfa), text);
    }
    for fixture in ["t3", "t7", "t8a", "cyclic-counterexample"] {
        parse_dfa(&ok(&["gen", fixture], "")).unwrap();
    }
}

#[test]
fn opt_and_count() {
    let t8a = ok(&["gen", "t8a"], "");
    let line = ok(&["opt", "-", "--objective", "switch-then-length"], &t8a);
    assert!(line.starts_with("word="));
    assert!(line.trim_end().ends_with(" len=43 sw=31"), "{line}");
    let line = ok(&["opt", "-", "--objective", "length"], &t8a);
    assert!(line.trim_end().ends_with(" len=42 sw=33"), "{line}");

    let t3 = ok(&["gen", "t3"], "");
    assert_eq!(ok(&["opt", "-", "--objective", "length"], &t3), "word=aba len=3 sw=3\n");
    assert_eq!(
        ok(&["count", "-", "--objective", "length"], &ok(&["gen", "t7"], "")),
        "3\n"
    );

    let (code, _, err) = call(
        &["count", "-", "--objective", "switch"],
        &ok(&["gen", "cerny", "3"], ""),
    );
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn closure_and_transforms() {
    let c4 = ok(&["gen", "cerny", "4"], "");
    let closed = ok(&["closure", "-"], &c4);
    assert!(closed.starts_with("# c = a^2\n# d = a^3\n"));
    assert_eq!(ok(&["ssl", "-"], &closed), "5\n");

    assert_eq!(ok(&["sw", "-"], &ok(&["transform", "f", "-"], &c4)), "18\n");
    assert_eq!(ok(&["sw", "-"], &ok(&["transform", "f2", "-"], &c4)), "18\n");
    let (code, _, _) = call(&["transform", "f2", "-"], &closed);
    assert_eq!(code, 1);
}

#[test]
fn error_exit_codes() {
    let (code, out, err) = call(&["sw", "-"], "2 2\n0 1\n1 0\n");
    assert_eq!((code, out.as_str()), (1, ""));
    assert_eq!(err.trim(), "not synchronizing");

    assert_eq!(call(&["ssl", "-"], "3 2\n0 1\n").0, 2);
    assert_eq!(call(&["ssl", "-"], "2 1\n0\n7\n").0, 2);
    assert_eq!(call(&["opt", "-", "--objective", "fastest"], "1 1\n0\n").0, 2);
    assert_eq!(call(&["gen", "cerny"], "").0, 2);
    assert_eq!(call(&["gen", "q", "5"], "").0, 2);
    assert_eq!(call(&["search"], "").0, 2);
    assert_eq!(call(&["sw", "/nonexistent/automaton.txt"], "").0, 1);
    assert_eq!(call(&["search", "--n", "7"], "").0, 1);
    assert_eq!(call(&["cyclic-search", "--n", "4", "--k", "5"], "").0, 1);
}

#[test]
fn reads_files() {
    let path = std::env::temp_dir().join(format!("syncswitch-cli-{}.txt", std::process::id()));
    std::fs::write(&path, ok(&["gen", "p", "6"], "")).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(ok(&["sw", p], ""), "15\n");
    assert_eq!(ok(&["ssl", p], ""), "15\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn search_reports() {
    let (code, out, err) = call(&["search", "--n", "3", "--jobs", "1", "--shards", "4"], "");
    assert_eq!(code, 0);
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("REPORT n=3 k=2 max=3 "), "{first}");
    assert!(
        first.ends_with("forms[states]=12 forms[states-and-symbols]=6"),
        "{first}"
    );
    assert_eq!(out.matches("# form ").count(), 6);
    assert_eq!(err.lines().filter(|l| l.starts_with("SHARD ")).count(), 4);

    let again = call(&["search", "--n", "3", "--jobs", "1", "--shards", "4"], "").1;
    assert_eq!(out, again);

    let out = ok(&["cyclic-search", "--n", "5", "--k", "2"], "");
    assert!(out.starts_with("REPORT n=5 k=2 max=7 "), "{out}");
}

#[test]
fn lemma_report() {
    let out = ok(&["verify-lemmas", "--n", "6", "--samples", "500"], "");
    assert!(
        out.lines().all(|l| l.starts_with("LEMMA ") && l.contains(" PASS ")),
        "{out}"
    );
    assert_eq!(call(&["verify-lemmas", "--n", "7"], "").0, 1);
}

#[test]
fn binary_runs_as_a_pipeline() {
    let exe = env!("CARGO_BIN_EXE_syncswitch");
    let gen = Command::new(exe).args(["gen", "cerny", "5"]).output().unwrap();
    assert!(gen.status.success());
    let mut sw = Command::new(exe)
        .args(["sw", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    sw.stdin.take().unwrap().write_all(&gen.stdout).unwrap();
    let done = sw.wait_with_output().unwrap();
    assert!(done.status.success());
    assert_eq!(String::from_utf8(done.stdout).unwrap(), "7\n");

    let bad = Command::new(exe).arg("nonsense").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
