//! Replay a recorded trace, verify it against its own output, and show what
//! a divergence report looks like.
//!
//! Run with `cargo run --example replay_trace`.

use panekit::trace::{replay, verify};

const TRACE: &str = r#"# two windows, one protected
{"t":0,"kind":"display","w":800,"h":600}
{"t":0,"kind":"create","min_w":50,"min_h":50,"max_w":800,"max_h":600,"x":200,"y":150,"w":300,"h":200,"anchor":"fixed","components":[{"name":"ok","w":40,"h":20,"required":true,"priority":0}]}
{"t":0,"kind":"create","min_w":50,"min_h":50,"max_w":800,"max_h":600,"x":100,"y":100,"w":300,"h":200,"anchor":"proportional","components":[{"name":"ok","w":40,"h":20,"required":true,"priority":0}]}
{"t":10,"kind":"unobscure","target":2,"protected":1,"strategy":"auto"}
{"t":10,"kind":"snapshot"}
{"t":20,"kind":"display","w":1024,"h":768}
{"t":20,"kind":"snapshot"}
"#;

pub fn run() {
    let out = replay(TRACE).unwrap();
    println!("events:\n{}", out.events_text());
    println!("snapshots:\n{}", out.snapshots_text());

    let golden = out.snapshots_text();
    let report = verify(TRACE, &golden).unwrap();
    println!("{report}");
    assert!(report.passed());

    // Tamper with the golden and the first divergence is located.
    let tampered = golden.replacen("\"x\":", "\"x\":1", 1);
    let report = verify(TRACE, &tampered).unwrap();
    println!("{report}");
    assert!(!report.passed());
}

#[allow(dead_code)]
fn main() {
    run();
}
