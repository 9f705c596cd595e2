use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn askzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_askzeta")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn wsharp_of_single_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let k1 = write(dir.path(), "k1.txt", "n 1\n");
    let o = askzeta(&["wsharp", "--graph", &k1]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1 - X^-1*T) / (1 - T)^2\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("reflexive closure"));
}

#[test]
fn wminus_rejects_non_cographs() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.txt", "n 4\n0 1\n1 2\n2 3\n");
    let o = askzeta(&["wminus", "--graph", &p4]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Unsupported: not a cograph"));
}

#[test]
fn usage_and_format_errors_exit_2() {
    assert_eq!(askzeta(&["wsharp"]).status.code(), Some(2));
    assert_eq!(askzeta(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "0 1\n");
    assert_eq!(askzeta(&["wsharp", "--graph", &bad]).status.code(), Some(2));
    assert_eq!(askzeta(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn output_modes() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "n 2\n0 1\n");
    let plain = askzeta(&["wminus", "--graph", &k2]);
    assert_eq!(stdout(&plain), "(1 - X^-1*T) / (1 - X*T) * (1 - T)\n");
    let series = askzeta(&["wminus", "--graph", &k2, "--series", "2"]);
    assert_eq!(stdout(&series), "T^0: 1\nT^1: X + 1 - X^-1\nT^2: X^2 + X - X^-1\n");
    let q = askzeta(&["wminus", "--graph", &k2, "--at-q", "3"]);
    assert_eq!(stdout(&q), "(1 - 1/3*T) / (1 - 4*T + 3*T^2)\n");
    let latex = askzeta(&["wminus", "--graph", &k2, "--latex"]);
    assert_eq!(stdout(&latex), "\\frac{1 - X^{-1}T}{(1 - XT)(1 - T)}\n");
    let model = askzeta(&["model", "--graph", &k2]);
    assert_eq!(stdout(&model), "{\"vertices\":2,\"hyperedges\":[[0,1]]}\n");
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_askzeta"))
        .args(["wsharp", "--graph", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(b"n 1\n0 0\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "(1 - X^-1*T) / (1 - T)^2\n");
}

#[test]
fn joins_agree_with_direct_computation() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "n 2\n0 1\n");
    let e2 = write(dir.path(), "e2.txt", "n 2\n");
    let joined = write(dir.path(), "j.txt", "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n");
    let via_parts = askzeta(&["join", "--left", &k2, "--right", &e2]);
    assert_eq!(stdout(&via_parts), stdout(&askzeta(&["wminus", "--graph", &joined])));
    let sharp = askzeta(&["join", "--left", &k2, "--right", &e2, "--sharp"]);
    assert_eq!(stdout(&sharp), stdout(&askzeta(&["wsharp", "--graph", &joined])));
    let k1 = write(dir.path(), "k1.txt", "n 1\n");
    let k3 = write(dir.path(), "k3.txt", "n 3\n0 1\n0 2\n1 2\n");
    let power = askzeta(&["joinpower", "--graph", &k1, "--k", "3"]);
    assert_eq!(stdout(&power), stdout(&askzeta(&["wminus", "--graph", &k3])));
    assert_eq!(askzeta(&["joinpower", "--graph", &k1, "--k", "0"]).status.code(), Some(2));
}

#[test]
fn animations_and_minors() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "n 2\n0 1\n");
    let o = askzeta(&["animations", "--graph", &k2]);
    assert_eq!(
        stdout(&o),
        "deg=0 class=nil odlen=0 map=- mon=1\n\
         deg=1 class=nil odlen=0 map=1->0 mon=X_0\n\
         deg=1 class=nil odlen=0 map=0->1 mon=X_1\n\
         deg=2 class=ani odlen=0 map=0->1,1->0 mon=X_0*X_1\n"
    );
    let check = askzeta(&["minors", "--graph", &k2, "--sign", "+", "--check", "animations"]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(stdout(&check), "k=0 PASS expected=1 found=1\nk=1 PASS expected=2 found=2\n");
    let emit = askzeta(&["minors", "--graph", &k2, "--emit", "1"]);
    assert_eq!(stdout(&emit), "- 1 X_1 0 0\n+ 1 X_0 0 1\n");
    let tri = write(dir.path(), "tri.json", r#"{"vertices": 3, "hyperedges": [[0, 1], [1, 2], [0, 2]]}"#);
    let sel = askzeta(&["minors", "--hyper", &tri, "--check", "selectors"]);
    assert_eq!(sel.status.code(), Some(0));
    assert_eq!(stdout(&sel).lines().count(), 4);
    assert!(stdout(&sel).lines().all(|l| l.contains("PASS")));
}

#[test]
fn oracle_reports() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "n 2\n0 1\n");
    let o = askzeta(&["oracle", "--graph", &k2, "--sign", "-", "--p", "3", "--k", "1"]);
    assert_eq!(stdout(&o), "ask=11/3 formula=11/3 verdict=PASS\n");
    let h = write(dir.path(), "h.json", r#"{"vertices": 1, "hyperedges": [[0]]}"#);
    let o = askzeta(&["oracle", "--hyper", &h, "--p", "2", "--k", "1"]);
    assert_eq!(stdout(&o), "ask=3/2 formula=3/2 verdict=PASS\n");
    let big = write(dir.path(), "k4.txt", "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let o = askzeta(&["--budget", "10", "oracle", "--graph", &big, "--p", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_askzeta"))
        .args(["oracle", "--graph", &big, "--p", "3"])
        .env("ASKZETA_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let looped = write(dir.path(), "l.txt", "n 2\n0 0\n1 1\n0 1\n");
    let o = askzeta(&["--jobs", "2", "oracle", "--graph", &looped, "--sign", "+", "--p", "3", "--k", "2"]);
    assert!(stdout(&o).ends_with("verdict=PASS\n"));
}

#[test]
fn cache_replays_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache = cache.to_str().unwrap();
    let c4 = write(dir.path(), "c4.txt", "n 4\n0 1\n1 2\n2 3\n0 3\n");
    let cold = askzeta(&["--cache-dir", cache, "--stats", "wsharp", "--graph", &c4]);
    let warm = askzeta(&["--cache-dir", cache, "--stats", "wsharp", "--graph", &c4]);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, askzeta(&["wsharp", "--graph", &c4]).stdout);
    assert!(String::from_utf8_lossy(&cold.stderr).contains("hits=0 misses=1"));
    assert!(String::from_utf8_lossy(&warm.stderr).contains("hits=1 misses=0"));
    for entry in fs::read_dir(cache).unwrap() {
        fs::write(entry.unwrap().path(), "corrupt").unwrap();
    }
    let again = askzeta(&["--cache-dir", cache, "--stats", "wsharp", "--graph", &c4]);
    assert_eq!(again.stdout, cold.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("misses=1"));
}

#[test]
fn batch_catalogue() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.txt", "n 1\n");
    write(dir.path(), "b.txt", "n 3\n0 1\n");
    let o = askzeta(&["batch", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["file"], "a.txt");
    assert_eq!(lines[0]["wsharp"], "(1 - X^-1*T) / (1 - T)^2");
    assert_eq!(lines[0]["pole_order"], 2);
    assert_eq!(lines[1]["pole_order"], 3);
    assert!(lines[1]["local_poles"].as_array().unwrap().iter().all(|a| a.as_i64().unwrap() <= 0));
}

#[test]
fn verify_single_suite() {
    let o = askzeta(&["verify", "--suite", "table4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS 18/18"));
}
