use std::io::Write;
use std::process::{Command, Output};

fn hmorph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hmorph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn tau_h_of_zero_to_simple() {
    let o = hmorph(&["tau-h", "--algebra", "builtin:x2", "--object", "0->S"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("(S = S)_1"), "{out}");
    assert!(out.contains("T2 route: agrees"), "{out}");
}

#[test]
fn tau_h_powers_close_up() {
    let o = hmorph(&["tau-h", "--algebra", "builtin:x2", "--object", "0->S", "--power", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("(0 -> S)"), "{}", stdout(&o));
}

#[test]
fn check_paper_passes_on_dual_numbers() {
    let o = hmorph(&["check-paper", "--algebra", "builtin:x2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("0 failed"), "{out}");
    assert!(out.contains("A3"), "{out}");
}

#[test]
fn structured_output_carries_the_schema() {
    let o = hmorph(&["check-paper", "--algebra", "builtin:x2", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("valid JSON");
    let text = v.to_string();
    assert!(text.contains("hmorph.report/1"), "{text}");
}

#[test]
fn malformed_file_exits_2() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "[algebra]\np = 2").unwrap();
    let path = f.path().to_str().unwrap();
    let o = hmorph(&["knit", "--algebra", path]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("vertices"), "{err}");
}

#[test]
fn user_file_round_trip() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"
[algebra]
p = 3
vertices = ["1"]
arrows = [{{ name = "x", from = "1", to = "1" }}]
relations = ["x*x"]
bound = 2

[objects.g]
a = "S"
b = "P"
f = {{ "1" = [[0], [1]] }}
"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap();
    let o = hmorph(&["tau-h", "--algebra", path, "--object", "g"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("(Λ -> S)_p"), "{}", stdout(&o));
}

#[test]
fn projective_input_exits_3() {
    let o = hmorph(&["ass", "--algebra", "builtin:x2", "--object", "Λ=Λ"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn unknown_object_exits_2() {
    let o = hmorph(&["tau-h", "--algebra", "builtin:x2", "--object", "Q->0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn knit_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let o = hmorph(&["knit", "--algebra", "builtin:x2", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph"), "{text}");
}

#[test]
fn periodicity_flags_strict_divisors() {
    let o = hmorph(&["periodicity", "--algebra", "builtin:x2", "--object", "cover:S"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("period 2  (strict divisor of 4)"), "{}", stdout(&o));
}
