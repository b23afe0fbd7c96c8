use std::path::PathBuf;
use std::process::{Command, Output};

fn qsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsym"))
        .args(args)
        .output()
        .expect("run qsym")
}

fn stdout(args: &[&str]) -> String {
    let out = qsym(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    qsym(args).status.code().unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn straighten_examples() {
    assert_eq!(stdout(&["straighten", "1,4"]), "- s[3,2]\n");
    assert_eq!(stdout(&["straighten", "2,3"]), "0\n");
    assert_eq!(stdout(&["straighten", "5"]), "+ s[5]\n");
    assert_eq!(stdout(&["straighten", "(3,1,4)"]), "- s[3,3,2]\n");
}

#[test]
fn straighten_trace() {
    assert_eq!(
        stdout(&["straighten", "--trace", "1,3,5"]),
        "i=2: (1,3,5) -> (2,2,5)\ni=3: (2,2,5) -> (2,4,3)\ni=2: (2,4,3) -> (3,3,3)\n- s[3,3,3]\n"
    );
    assert_eq!(
        stdout(&["straighten", "--trace", "2,3"]),
        "i=2: (2,3) is fixed\n0\n"
    );
    assert_eq!(
        stdout(&["straighten", "--trace", "--json", "1,4"]),
        "{\"input\":[1,4],\"result\":{\"sign\":-1,\"shape\":[3,2]},\"trace\":[{\"index\":2,\"before\":[1,4],\"after\":[3,2]}]}\n"
    );
}

#[test]
fn straighten_rejects_bad_compositions() {
    assert_eq!(code(&["straighten", "1,0"]), 2);
    assert_eq!(code(&["straighten", "2,-1"]), 2);
    assert_eq!(code(&["straighten", "a,b"]), 2);
    let err = String::from_utf8(qsym(&["straighten", "3,0"]).stderr).unwrap();
    assert!(err.contains("part 2 is 0"), "{err}");
}

#[test]
fn convert_examples() {
    assert_eq!(
        stdout(&["convert", "F[4,1]+F[3,2]+F[2,3]+F[1,4]"]),
        "s[4,1]\n"
    );
    assert_eq!(stdout(&["convert", "s[2,2]"]), "s[2,2]\n");
    assert_eq!(stdout(&["convert", ""]), "0\n");
    assert_eq!(stdout(&["convert", "s[1,4] + s[3,2]"]), "0\n");
    assert_eq!(stdout(&["convert", "-F[2,1] - F[1,2]"]), "-s[2,1]\n");
    assert_eq!(
        stdout(&["convert", "--json", "F[2,1]+F[1,2] + 3*s[2]"]),
        "[{\"basis\":\"s\",\"index\":[2],\"coeff\":3},{\"basis\":\"s\",\"index\":[2,1],\"coeff\":1}]\n"
    );
}

#[test]
fn convert_symmetry_gate() {
    let out = qsym(&["convert", "--check-symmetric", "F[1,2]"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("not symmetric") && err.contains("F[1,2]"),
        "{err}"
    );
    assert!(out.stdout.is_empty());
    assert_eq!(
        stdout(&[
            "convert",
            "--check-symmetric",
            "F[4,1]+F[3,2]+F[2,3]+F[1,4]"
        ]),
        "s[4,1]\n"
    );
}

#[test]
fn convert_reads_files() {
    let json = temp_file(
        "convert_input.json",
        r#"[{"basis":"F","index":[2,1],"coeff":2},{"basis":"F","index":[1,2],"coeff":2}]"#,
    );
    assert_eq!(
        stdout(&[
            "convert",
            "--check-symmetric",
            "--input",
            json.to_str().unwrap()
        ]),
        "2*s[2,1]\n"
    );
    let text = temp_file("convert_input.txt", "F[2]\n + s[1,1]\n");
    assert_eq!(
        stdout(&["convert", "--input", text.to_str().unwrap()]),
        "s[2] + s[1,1]\n"
    );
    let bad = temp_file(
        "convert_bad.json",
        r#"[{"basis":"F","index":[0],"coeff":1}]"#,
    );
    assert_eq!(code(&["convert", "--input", bad.to_str().unwrap()]), 2);
    assert_eq!(code(&["convert", "--input", "/nonexistent/input.txt"]), 2);
}

#[test]
fn convert_parse_errors() {
    let out = qsym(&["convert", "F[1,2] + G[3]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 1, column 10"), "{err}");
    assert_eq!(code(&["convert", "F[1,0]"]), 2);
    assert_eq!(code(&["convert"]), 2);
}

#[test]
fn verify_examples() {
    let out = stdout(&["verify", "--shape", "4,1"]);
    assert_eq!(
        out,
        "#1 [[1,2,3,4],[5]]  C=(4,1)  + s[4,1]  SUPERSTANDARD\n\
         #2 [[1,2,3,5],[4]]  C=(3,2)  + s[3,2]  pairs with #4 via i=2\n\
         #3 [[1,2,4,5],[3]]  C=(2,3)  0  FIXED via i=2\n\
         #4 [[1,3,4,5],[2]]  C=(1,4)  - s[3,2]  pairs with #2 via i=2\n\
         4 tableaux: 1 superstandard, 1 fixed, 2 paired, 0 undefined\n\
         sum = s[4,1]  telescopes to s[4,1]\n"
    );
    let out = stdout(&["verify", "--shape", "3"]);
    assert!(
        out.starts_with("#1 [[1,2,3]]  C=(3)  + s[3]  SUPERSTANDARD\n1 tableaux: 1 superstandard"),
        "{out}"
    );
    let out = stdout(&["verify", "--shape", "2,2"]);
    assert!(
        out.contains("2 tableaux: 1 superstandard, 1 fixed, 0 paired, 0 undefined"),
        "{out}"
    );
    assert_eq!(code(&["verify", "--shape", "1,2"]), 2);
}

#[test]
fn verify_reports_undefined_theta_but_still_telescopes() {
    let out = stdout(&["verify", "--shape", "2,1,1"]);
    assert!(
        out.contains("#3 [[1,4],[2],[3]]  C=(1,1,2)  0  UNDEFINED"),
        "{out}"
    );
    assert!(
        out.ends_with("sum = s[2,1,1]  telescopes to s[2,1,1]\n"),
        "{out}"
    );
}

#[test]
fn verify_json() {
    let out = stdout(&["verify", "--json", "--shape", "2,1"]);
    assert_eq!(
        out,
        "{\"shape\":[2,1],\"entries\":[\
         {\"tableau\":[[1,2],[3]],\"composition\":[2,1],\"value\":{\"sign\":1,\"shape\":[2,1]},\"role\":\"superstandard\"},\
         {\"tableau\":[[1,3],[2]],\"composition\":[1,2],\"value\":{\"sign\":0,\"shape\":[]},\"role\":\"fixed\",\"raise_index\":2}],\
         \"sum\":[{\"basis\":\"s\",\"index\":[2,1],\"coeff\":1}],\"telescopes\":true}\n"
    );
}

#[test]
fn theta_examples() {
    assert_eq!(
        stdout(&["theta", "--tableau", "[[1,2,3,4,5],[6,7,9],[8]]"]),
        "[[1,2,3,4,5],[6,8,9],[7]]\nC=(5,1,3)\ni=3\n"
    );
    assert_eq!(
        stdout(&["theta", "--tableau", "[[1,2,5],[3,4]]"]),
        "[[1,2,5],[3,4]]\nC=(2,3)\ni=2 (fixed point)\n"
    );
    assert_eq!(
        stdout(&["theta", "--json", "--tableau", "[[1,2,3,6],[4,5]]"]),
        "{\"tableau\":[[1,2,5,6],[3,4]],\"composition\":[2,4],\"raise_index\":2,\"fixed\":false}\n"
    );
}

#[test]
fn theta_errors() {
    let out = qsym(&["theta", "--tableau", "[[1,2,3],[4,5],[6]]"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(
        String::from_utf8(out.stderr).unwrap(),
        "error: superstandard: theta undefined\n"
    );
    assert_eq!(code(&["theta", "--tableau", "[[1,4],[2],[3]]"]), 4);
    assert_eq!(code(&["theta", "--tableau", "[[1,3],[2,5]]"]), 2);
    assert_eq!(code(&["theta", "--tableau", "[[1,2],[3]"]), 2);
}

#[test]
fn expand_examples() {
    assert_eq!(
        stdout(&["expand", "--vars", "2", "s[2]"]),
        "x1^2 + x1*x2 + x2^2\n"
    );
    assert_eq!(stdout(&["expand", "F[1,1]"]), "x1*x2\n");
    assert_eq!(stdout(&["expand", "--vars", "3", "s[1,2]"]), "0\n");
    assert_eq!(stdout(&["expand", "-F[1]"]), "-x1\n");
    assert_eq!(
        stdout(&["expand", "--json", "--vars", "2", "F[2]"]),
        "{\"nvars\":2,\"terms\":[{\"exp\":[2,0],\"coeff\":1},{\"exp\":[1,1],\"coeff\":1},{\"exp\":[0,2],\"coeff\":1}]}\n"
    );
}

#[test]
fn convert_then_expand_agrees() {
    let input = "F[3,1] + F[2,2] + F[1,3] + F[2,1,1] + F[1,2,1] + F[1,1,2] - F[1,1,1,1]";
    let converted = stdout(&["convert", "--check-symmetric", input]);
    let before = stdout(&["expand", "--vars", "4", input]);
    let after = stdout(&["expand", "--vars", "4", converted.trim()]);
    assert_eq!(before, after);
}

#[test]
fn syt_listing() {
    assert_eq!(
        stdout(&["syt", "--shape", "4,1"]),
        "[[1,2,3,4],[5]]  D={4}  C=(4,1)\n\
         [[1,2,3,5],[4]]  D={3}  C=(3,2)\n\
         [[1,2,4,5],[3]]  D={2}  C=(2,3)\n\
         [[1,3,4,5],[2]]  D={1}  C=(1,4)\n\
         4 standard tableaux of shape (4,1)\n"
    );
    assert_eq!(
        stdout(&["syt", "--json", "--shape", "1,1"]),
        "{\"shape\":[1,1],\"tableaux\":[{\"tableau\":[[1],[2]],\"descents\":[1],\"composition\":[1,1]}]}\n"
    );
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["verify", "--shape", "3,2,1"][..],
        &["syt", "--shape", "3,3"],
        &["expand", "--vars", "3", "s[2,1] + F[1,2]"],
        &["convert", "--json", "F[1,2]+F[2,1]"],
    ] {
        assert_eq!(qsym(args).stdout, qsym(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["verify"]), 2);
    assert_eq!(code(&["expand", "--vars", "x", "F[1]"]), 2);
}
