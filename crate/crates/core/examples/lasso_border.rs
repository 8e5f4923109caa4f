//! Select a window border by looping the pointer across it, then drag it.
//!
//! Run with `cargo run --example lasso_border`.

use panekit::lasso::push_sample;
use panekit::limits::Edge;
use panekit::trace::{replay, TraceRecord};
use panekit::{Anchor, Desktop, DisplayBounds, Point, Rect, Size, WindowComponent, WindowSpec};

pub fn run() {
    let mut desk = Desktop::new(DisplayBounds::new(800, 600).unwrap());
    let id = desk
        .create_window(WindowSpec {
            rect: Rect::new(100, 100, 200, 150),
            min_size: Size::new(60, 60),
            max_size: Size::new(400, 400),
            components: vec![WindowComponent::new("ok", 40, 20, true, 0)],
            anchor: Anchor::Fixed,
        })
        .unwrap();

    // A small "o" drawn around the right edge: out, back in, out again.
    let path = [(290, 170), (310, 165), (315, 180), (305, 190), (292, 185)];
    let mut selected = None;
    for (i, (x, y)) in path.into_iter().enumerate() {
        let t = 20 * i as i64;
        let sel = push_sample(&mut desk, t, Point::new(x, y)).unwrap();
        println!("t={t:<3} ({x},{y}) -> {:?}", sel.as_ref().map(|s| s.part));
        selected = selected.or(sel);
    }
    let sel = selected.expect("the loop selects a border");
    assert_eq!((sel.window, sel.part), (id, Edge::Right));

    // Straight strokes across a border never select anything.
    let mut desk2 = desk.clone();
    desk2.lasso.clear();
    for (i, x) in [250, 280, 310, 340].into_iter().enumerate() {
        assert!(push_sample(&mut desk2, 1000 + 20 * i as i64, Point::new(x, 200)).unwrap().is_none());
    }

    // The same gesture as a trace: the selection arms a resize of that edge.
    let mut lines = vec![
        r#"{"t":0,"kind":"create","min_w":60,"min_h":60,"max_w":400,"max_h":400,"x":100,"y":100,"w":200,"h":150,"anchor":"fixed","components":[{"name":"ok","w":40,"h":20,"required":true,"priority":0}]}"#.to_string(),
    ];
    for (i, (x, y)) in path.into_iter().enumerate() {
        lines.push(format!(r#"{{"t":{},"kind":"pointer","x":{x},"y":{y}}}"#, 20 * i));
    }
    lines.push(r#"{"t":200,"kind":"pointer","x":342,"y":185}"#.into());
    lines.push(r#"{"t":200,"kind":"snapshot"}"#.into());
    for l in &lines {
        TraceRecord::parse(l).unwrap();
    }
    let out = replay(&lines.join("\n")).unwrap();
    print!("{}", out.events_text());
    assert!(out.snapshots_text().contains(r#""w":250"#));
}

#[allow(dead_code)]
fn main() {
    run();
}
