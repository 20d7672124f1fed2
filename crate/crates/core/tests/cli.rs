use std::io::Write;
use std::process::{Command, Output};

fn hx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hx"))
        .args(args)
        .output()
        .unwrap()
}

fn hx_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hx"))
        .args(args)
        .env(key, value)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn family_and_file_inputs_agree() {
    let out = hx(&["family", "K:3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "graph 3\n# name K:3\ne 0 1\ne 0 2\ne 1 2\n");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.hgf");
    assert_eq!(
        hx(&["family", "C:5", "-o", path.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    let from_file = hx(&["chromatic", path.to_str().unwrap()]);
    let from_desc = hx(&["chromatic", "C:5"]);
    assert_eq!(stdout(&from_file), stdout(&from_desc));
    assert!(stdout(&from_desc).starts_with("chi = 3"));
}

#[test]
fn hom_and_power() {
    assert_eq!(stdout(&hx(&["hom", "C:7", "C:5"])), "yes\n");
    assert_eq!(stdout(&hx(&["hom", "C:5", "C:7"])), "no\n");
    assert_eq!(
        stdout(&hx(&["hom", "C:5", "K:3", "--count", "1000"])),
        "30\n"
    );
    let cube = stdout(&hx(&["power", "-k", "3", "C:5"]));
    assert!(cube.starts_with("graph 5\n"));
    assert_eq!(cube.lines().filter(|l| l.starts_with("e ")).count(), 10);
    assert!(stdout(&hx(&["odd-girth", "KG:5,2"])).contains("odd_girth=5"));
}

#[test]
fn reduce_sh_reports_survivors() {
    let out = hx(&["reduce-sh", "SGk:5,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("survivors equal SH:5,2,2: yes"));
}

#[test]
fn verify_exit_codes() {
    let out = hx(&["verify", "dist", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("report suite=dist seed=42 verdict=pass"));
    assert_eq!(hx(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(hx(&["verify", "dist", "bogus=1"]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.hgf");
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(b"graph 3\ne 0 5\n").unwrap();
    let out = hx(&["chromatic", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(hx(&["chromatic", "Q:4"]).status.code(), Some(2));
    assert_eq!(hx(&["chromatic", "no-such-file"]).status.code(), Some(2));
    assert_eq!(hx(&["power", "C:5"]).status.code(), Some(2));
}

#[test]
fn caps_exceeded_exit_3() {
    let out = hx_env(&["chromatic", "KG:5,2"], "HELIX_CAPS", "chromatic=5");
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        hx_env(&["chromatic", "K:3"], "HELIX_CAPS", "chromatic=x")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn pentagon_probe_on_petersen() {
    let out = hx(&["probe", "pentagon", "KG:5,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("instance=KG:5,2/hom_C5 expected=- observed=no"));
    assert!(text.contains("instance=KG:5,2/chi_S2_pow5_le_3 expected=- observed=no"));
}
