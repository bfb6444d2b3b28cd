//! End-to-end tests of the command surface: golden outputs, the 0/1/2 exit
//! status contract, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn ghorkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghorkit"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

#[test]
fn matchings_listing() {
    let out = ghorkit(&["matchings", "corpus/ex-fig1.dqif", "--names", "corpus/ex-fig1.names"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "z=a,c' simple\nu=b,b' -\nx=b,d' simple\ny=b',d simple\nv=c,c' -\nw=d,d' -\n"
    );
    let out = ghorkit(&[
        "matchings",
        "corpus/ex-fig1.dqif",
        "--names",
        "corpus/ex-fig1.names",
        "--simple-only",
    ]);
    assert_eq!(stdout(&out), "z=a,c' simple\nx=b,d' simple\ny=b',d simple\n");
}

#[test]
fn eq_reports() {
    let out =
        ghorkit(&["eq", "corpus/ex-fig1.dqif", "b.a.a.d@3", "b'.a.a.d'@3", "--dimer", "--bound", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "ghor: equal\ndimer: not-equal-within-bound\n");
    let out = ghorkit(&["eq", "corpus/ex-fig1.dqif", "a.d.c.b@1", "d.c'.b@1", "--dimer"]);
    assert_eq!(stdout(&out), "ghor: equal\ndimer: equal\n");
}

#[test]
fn report_lines() {
    let out = ghorkit(&["report", "corpus/hex-c3.dqif"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "N=2 dimS=3 bound=3 RS=equal-up-to-bound(6)\n");
    let out = ghorkit(&["report", "corpus/ex-fig1.dqif", "--names", "corpus/ex-fig1.names"]);
    assert_eq!(stdout(&out), "N=2 dimS=3 bound=3 RS=strictly-smaller(6) witness=z\n");
    let out = ghorkit(&["report", "corpus/pent-g2.dqif", "--bound", "4"]);
    assert_eq!(stdout(&out), "N=4 dimS=5 bound=5 RS=equal-up-to-bound(4)\n");
}

#[test]
fn cycle_algebra_report() {
    let out = ghorkit(&["cycle-algebra", "corpus/ex-fig1.dqif", "--names", "corpus/ex-fig1.names"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "generators: y^2, x*y, x^2, z, y^2*z, x*y*z, x^2*z\ndimS=3\n"
    );
}

#[test]
fn geodesic_exit_codes() {
    let out = ghorkit(&["geodesic", "corpus/ex-fig1.dqif"]);
    assert_eq!(code(&out), 1, "failed check exits 1");
    assert_eq!(stdout(&out), "geodesic=fails witness_class=(1,0)\n");
    let out = ghorkit(&["geodesic", "corpus/hex-c3.dqif", "--bound", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "geodesic=up-to-bound(4)\n");
}

#[test]
fn validate_contract() {
    let out = ghorkit(&["validate", "corpus/ex-fig1.dqif"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("valid=true\n"));

    // a tampered copy fails with status 1
    let dir = std::env::temp_dir().join("ghorkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.dqif");
    let mut text =
        std::fs::read_to_string(workspace_root().join("corpus/hex-c3.dqif")).unwrap();
    text = text.replace("arrow l3 1 1 -1 -1", "arrow l3 1 1 0 0");
    std::fs::write(&path, text).unwrap();
    let out = ghorkit(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("check face-crossing-sum-zero: FAIL"));
    assert!(stdout(&out).ends_with("valid=false\n"));
}

#[test]
fn resolve_reports() {
    let out = ghorkit(&["resolve", "corpus/hex-c3.dqif", "corpus/hex-c3-235.mod"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "term 0: rank 1, basis [koszul=1 escape=0 bd=0]\n\
         term 1: rank 9, basis [koszul=9 escape=0 bd=0]\n\
         term 2: rank 64, basis [koszul=64 escape=0 bd=0]\n\
         term 3: rank 144, basis [koszul=144 escape=0 bd=0]\n\
         d2=ok\npd=3\ncase=full\n"
    );
}

#[test]
fn module_check_contract() {
    let out = ghorkit(&["module-check", "corpus/ex-fig1.dqif", "corpus/ex-fig1-vsimple.mod"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("valid=true\n"));

    let dir = std::env::temp_dir().join("ghorkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.mod");
    std::fs::write(&path, "module\nsupport 1 2\nscalar b 1\n").unwrap();
    let out = ghorkit(&["module-check", "corpus/ex-fig1.dqif", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("check support-strongly-connected: FAIL"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(code(&ghorkit(&[])), 2);
    assert_eq!(code(&ghorkit(&["frobnicate"])), 2);
    assert_eq!(code(&ghorkit(&["matchings"])), 2, "missing input");
    assert_eq!(code(&ghorkit(&["matchings", "corpus/ex-fig1.dqif", "--wat"])), 2);
    assert_eq!(code(&ghorkit(&["matchings", "no-such-file.dqif"])), 2);
    assert_eq!(code(&ghorkit(&["eq", "corpus/ex-fig1.dqif", "b.c@1", "b.c@1"])), 2);
    assert_eq!(code(&ghorkit(&["geodesic", "corpus/hex-c3.dqif", "--bound", "0"])), 2);

    let dir = std::env::temp_dir().join("ghorkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    for (k, garbage) in [
        "",
        "surface\n",
        "surface 2\nvertices 1\narrow",
        "surface 1\n",
        "\u{0}\u{1}\u{2}",
        "face ccw l1\n",
    ]
    .iter()
    .enumerate()
    {
        let path = dir.join(format!("garbage-{k}.dqif"));
        std::fs::write(&path, garbage).unwrap();
        let out = ghorkit(&["validate", path.to_str().unwrap()]);
        assert_eq!(code(&out), 2, "garbage case {k}: {:?}", stdout(&out));
    }
}

#[test]
fn manifest_listing() {
    let out = ghorkit(&["manifest", "corpus"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("ex-fig1\tex-fig1.dqif\t"));
    assert!(text.contains("hex-c3\thex-c3.dqif\tderived one-vertex torus quiver"));
    assert!(text.contains("pent-g2\t"));

    let empty = std::env::temp_dir().join("ghorkit-empty-corpus");
    std::fs::create_dir_all(&empty).unwrap();
    let out = ghorkit(&["manifest", empty.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "");
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["labels", "corpus/ex-fig1.dqif", "--names", "corpus/ex-fig1.names"],
        vec!["cycles", "corpus/ex-fig1.dqif", "--names", "corpus/ex-fig1.names"],
        vec!["center", "corpus/ex-fig1.dqif", "--bound", "4"],
        vec!["compare-rs", "corpus/hex-c3.dqif", "--bound", "5"],
    ] {
        let first = ghorkit(&args);
        let second = ghorkit(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(code(&first), code(&second));
    }
}
