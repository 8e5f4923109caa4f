use std::fs;
use std::process::Command;

const TRACE: &str = r#"{"t":0,"kind":"create","min_w":50,"min_h":50,"max_w":400,"max_h":400,"x":10,"y":10,"w":100,"h":100,"anchor":"fixed","components":[{"name":"ok","w":40,"h":20,"required":true,"priority":0}]}
{"t":1,"kind":"snapshot"}
"#;

fn wmsim() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wmsim"))
}

#[test]
fn replay_writes_goldens_that_verify() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.trace");
    let out = dir.path().join("out");
    fs::write(&trace, TRACE).unwrap();

    let status = wmsim().args(["replay", "--trace"]).arg(&trace).arg("--out").arg(&out).status().unwrap();
    assert!(status.success());
    let snaps = fs::read_to_string(out.join("snapshots.txt")).unwrap();
    assert_eq!(snaps.lines().count(), 1);
    assert!(fs::read_to_string(out.join("events.txt")).unwrap().contains(r#""kind":"created""#));

    let ok = wmsim().args(["verify", "--trace"]).arg(&trace).arg("--golden").arg(&out).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));

    fs::write(out.join("snapshots.txt"), snaps.replace(r#""clock":1"#, r#""clock":2"#)).unwrap();
    let bad = wmsim().args(["verify", "--trace"]).arg(&trace).arg("--golden").arg(&out).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("FAIL"));
}

#[test]
fn unreadable_trace_exits_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = wmsim()
        .args(["replay", "--trace"])
        .arg(dir.path().join("missing.trace"))
        .arg("--out")
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
