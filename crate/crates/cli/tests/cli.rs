use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn nprob(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nprob"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn nprob");
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn popescu_in_percent() {
    let path = fixture("popescu.np");
    let out = nprob(&["--style", "percent", "eval", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("NP(Popescu) = ([40%..60%], [20%..25%] U [30%..35%], {10%, 20%, 30%})"));
    assert!(text.contains("n_sup = 125%"), "{text}");
    assert!(text.contains("labels: faillibilist, pseudoparadoxist"));
}

#[test]
fn fraction_is_the_default_style() {
    let out = nprob(&["eval", fixture("popescu.np").to_str().unwrap()], None);
    assert!(stdout(&out).contains("n_sup = 5/4"));
}

#[test]
fn empty_program_prints_nothing() {
    let file = tempfile::NamedTempFile::new().unwrap();
    let out = nprob(&["eval", file.path().to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn unbound_name_is_an_evaluation_error() {
    let out = nprob(&["eval", "-"], Some("let A = ({1}, {0}, {0})\nNP(A and Z)\n"));
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("`Z`"), "{}", stderr(&out));
    assert!(stderr(&out).contains("2:10"));
}

#[test]
fn syntax_error_reports_position() {
    let out = nprob(&["eval"], Some("let A = ({1}, {0}, {0})\nNP(A and)\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("2:9"), "{}", stderr(&out));
}

#[test]
fn missing_file_is_an_io_error() {
    let out = nprob(&["eval", "/nonexistent/program.np"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_falls_back_to_declarations() {
    let src = "let Classic = ({.5}, {0}, {.5})\nlet Over = ({1+}, {0}, {0})\n";
    let out = nprob(&["classify"], Some(src));
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("classify(Classic) = ({1/2}, {0}, {1/2})"));
    assert!(text.contains("labels: classical"));
    assert!(text.contains("labels: pseudoparadoxist, tautologic"));
    assert!(text.contains("flags: overprobable"));
}

#[test]
fn json_is_stable() {
    let path = fixture("popescu.np");
    let args = ["--json", "eval", path.to_str().unwrap()];
    let first = nprob(&args, None);
    let second = nprob(&args, None);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let line = stdout(&first).lines().next().unwrap().to_string();
    assert!(line.starts_with(r#"{"query":"NP(Popescu)","T":[{"lo":{"v":"2/5","tag":"0"},"hi":{"v":"3/5","tag":"0"}}]"#));
    assert!(line.ends_with(r#""n_inf":"7/10","n_sup":"5/4","labels":["faillibilist","pseudoparadoxist"],"flags":[]}"#));
}

#[test]
fn json_values_are_always_fractions() {
    let out = nprob(&["--json", "eval"], Some("let A = ({1+}, {0}, {0-})\nNP(A)"));
    let text = stdout(&out);
    assert!(text.contains(r#"{"lo":{"v":"1/1","tag":"+"},"hi":{"v":"1/1","tag":"+"}}"#), "{text}");
    assert!(text.contains(r#"{"v":"0/1","tag":"-"}"#));
}

#[test]
fn world_corners() {
    let out = nprob(&["worlds", fixture("corners.json").to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "B_is_B: (1+, 0-, 0-) tautology\n\
         C_is_not_C: (0-, 1+, 0-) contradiction\n\
         Sometimes: (1 @ 1/3, 1 @ 1/3, 1 @ 1/3)\n"
    );
}

#[test]
fn paradox_and_relative_truth() {
    let out = nprob(&["worlds"], Some(r#"{"worlds":["w"],"statements":{"L":["TF"]}}"#));
    assert_eq!(stdout(&out), "L: (1, 1, 1) paradox\n");
    let out = nprob(&["worlds"], Some(r#"{"worlds":["u","v"],"statements":{"A":["T","I"]}}"#));
    assert_eq!(stdout(&out), "A: (1 @ 1/2, 0, 1 @ 1/2)\n");
}

#[test]
fn malformed_statements_are_not_applicable() {
    let table = r#"{"worlds":["u","v"],"statements":{"A":["T","I"],"Bad":["T","X"],"Short":["T"]}}"#;
    let out = nprob(&["worlds"], Some(table));
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out), "A: (1 @ 1/2, 0, 1 @ 1/2)\nBad: n/a\nShort: n/a\n");
    let out = nprob(&["worlds"], Some("{not json"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_with_no_cases() {
    let out = nprob(&["check", "--cases", "0"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("0 cases"));
}

#[test]
fn check_passes_by_default() {
    let out = nprob(&["check"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("1000 cases"));
}

#[test]
fn broken_build_is_caught() {
    let out = nprob(&["check", "--fault", "--cases", "200"], None);
    assert_eq!(out.status.code(), Some(4));
    let text = stdout(&out);
    assert!(text.contains("oracle suite"), "{text}");
    assert!(text.contains("  A = ") && text.contains("  B = "));
    assert!(text.contains("expected") && text.contains("actual"));
}

#[test]
fn check_verdict_does_not_depend_on_threads() {
    let args = ["--json", "check", "--fault", "--seed", "5", "--cases", "300"];
    let parallel = nprob(&args, None);
    let sequential = nprob(&[&args[..], &["--sequential"]].concat(), None);
    assert_eq!(parallel.status.code(), Some(4));
    assert_eq!(parallel.stdout, sequential.stdout);
}
