use std::process::{Command, Output};

fn thompson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thompson")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = thompson(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    thompson(args).status.code().unwrap()
}

#[test]
fn element_algebra() {
    let x2 = stdout(&["el", "parse", "x2"]);
    assert_eq!(stdout(&["el", "mul", "x0^-1 x1 x0"]), x2);
    assert_eq!(stdout(&["el", "mul", "x0^-1", "x1", "x0"]), x2);
    assert_eq!(stdout(&["el", "inv", "x0"]), "(.,(.,.));((.,.),.)\n");
    assert_eq!(stdout(&["el", "eval", "--elem", "x0", "--r", "1/3"]), "7/12\n");
    assert_eq!(stdout(&["el", "fixes", "--elem", "@g0101", "--r", "1/3"]), "true\n");
    assert_eq!(stdout(&["el", "fixes", "--elem", "x0", "--r", "1/2"]), "false\n");
}

#[test]
fn membership() {
    assert_eq!(stdout(&["el", "member", "--elem", "x0", "--sub", "commutator"]), "false\n");
    assert_eq!(stdout(&["el", "member", "--elem", "x0^2", "--sub", "rect:2,2"]), "true\n");
    assert_eq!(stdout(&["el", "member", "--elem", "x0", "--sub", "rect:2,2"]), "false\n");
    assert_eq!(stdout(&["el", "member", "--elem", "@g0101", "--sub", "stab:1/3"]), "true\n");
    assert_eq!(code(&["el", "member", "--elem", "x0", "--sub", "rect:0,1"]), 2);
}

#[test]
fn links() {
    let cube = stdout(&["link", "invariants", "--elem", "x0^3"]);
    assert!(cube.starts_with("{\"components\":2,\"determinant\":0,"), "{cube}");
    let clasp = stdout(&["link", "invariants", "--raw-pair", "(.,.);(.,.)"]);
    assert!(clasp.starts_with("{\"components\":2,"), "{clasp}");
    let pd = stdout(&["link", "pd", "--elem", "@trefoil"]);
    assert_eq!(pd.lines().count(), 8);
    assert!(pd.lines().all(|l| l.starts_with("X(")));
    let svg = stdout(&["link", "svg", "--elem", "x0"]);
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
}

#[test]
fn mirror_inverts_the_variable() {
    let plain = stdout(&["link", "invariants", "--elem", "@trefoil"]);
    let mirrored = stdout(&["--mirror", "link", "invariants", "--elem", "@trefoil"]);
    assert!(plain.contains("A^-4 + A^-12 - A^-16"), "{plain}");
    assert!(mirrored.contains("-A^16 + A^12 + A^4"), "{mirrored}");
}

#[test]
fn stabilizer_construction() {
    let out = stdout(&["stab", "construct", "--r", "1/3"]);
    let g0101 = stdout(&["el", "parse", "@g0101"]);
    assert_eq!(out.lines().next().unwrap(), format!("element: {}", g0101.trim()));
    let out = stdout(&["stab", "construct", "--r", "0.01111", "--target", "@trefoil"]);
    assert!(out.contains("point: 15/32"));
    assert!(out.contains("fixes: true"));
    assert!(out.contains("match: true"));
    assert!(out.contains("\"determinant\":3"));
    let half = thompson(&["stab", "construct", "--r", "1/2"]);
    assert_eq!(half.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&half.stderr).contains("split link"));
}

#[test]
fn enumeration() {
    let one = stdout(&["enumerate", "--leaves", "1"]);
    assert_eq!(one, "pair,components,determinant,col2,col3,col5,col7,kauffman_f\n\".;.\",1,1,2,3,5,7,\"1\"\n");
    let three = stdout(&["enumerate", "--leaves", "3"]);
    assert!(three.contains("\"((.,.),.);(.,(.,.))\",1,1,2,3,5,7,\"1\""));
    let found = stdout(&["enumerate", "--leaves", "5", "--find", "components=1,det=3"]);
    assert_eq!(found.lines().count(), 2);
    assert_eq!(stdout(&["enumerate", "--leaves", "5"]), stdout(&["enumerate", "--leaves", "5"]));
    assert_eq!(code(&["enumerate", "--leaves", "9"]), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["el", "parse", "x1 y2"]), 2);
    assert_eq!(code(&["el", "parse", "@nothing"]), 2);
    assert_eq!(code(&["link", "invariants", "--raw-pair", "(.,.);."]), 2);
    assert_eq!(code(&["el", "eval", "--elem", "x0", "--r", "3/2"]), 3);
    assert_eq!(code(&["stab", "construct", "--r", "0.0111..."]), 3);
    assert_eq!(code(&["--bracket-cap", "4", "link", "invariants", "--elem", "@trefoil"]), 4);
}
