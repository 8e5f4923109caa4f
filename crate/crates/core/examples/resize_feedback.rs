//! Drag window borders past their size limits and watch the feedback.
//!
//! Run with `cargo run --example resize_feedback`.

use panekit::limits::{resize_drag, Edge};
use panekit::{Anchor, Desktop, DisplayBounds, Rect, Size, WindowComponent, WindowSpec};

pub fn run() {
    let mut desk = Desktop::new(DisplayBounds::new(800, 600).unwrap());
    let id = desk
        .create_window(WindowSpec {
            rect: Rect::new(100, 100, 120, 120),
            min_size: Size::new(80, 80),
            max_size: Size::new(200, 200),
            components: vec![WindowComponent::new("ok", 40, 20, true, 0)],
            anchor: Anchor::Fixed,
        })
        .unwrap();

    // Within limits: applied as requested, no feedback.
    let out = resize_drag(&mut desk, id, Edge::Right, 30, 0).unwrap();
    println!("right +30     -> {} feedback={:?}", out.applied, out.feedback);
    assert!(out.feedback.is_none());

    // Too wide and too short at once: both limits reported.
    let out = resize_drag(&mut desk, id, Edge::BottomRight, 500, -100).unwrap();
    let fb = out.feedback.expect("clamped drag reports its limits");
    println!("requested     {}", out.requested);
    println!("applied       {} limited={:?}", out.applied, fb.limited);
    assert_eq!(out.applied.size(), Size::new(200, 80));

    // Top-left drags keep the bottom-right corner anchored.
    let before = desk.window(id).unwrap().rect;
    let out = resize_drag(&mut desk, id, Edge::TopLeft, -400, -400).unwrap();
    println!("top_left      {} (right/bottom kept at {},{})", out.applied, before.right(), before.bottom());
    assert_eq!((out.applied.right(), out.applied.bottom()), (before.right(), before.bottom()));
}

#[allow(dead_code)]
fn main() {
    run();
}
