//! Move and resize windows with a two-button chord and key toggles.
//!
//! Run with `cargo run --example chord_move_resize`.

use panekit::chord::{handle_chord_input, ChordPhase, InputEvent};
use panekit::{Anchor, Desktop, DisplayBounds, Point, Rect, Size, WindowComponent, WindowSpec};

pub fn run() {
    let mut desk = Desktop::new(DisplayBounds::new(800, 600).unwrap());
    let spec = |rect| WindowSpec {
        rect,
        min_size: Size::new(60, 60),
        max_size: Size::new(400, 400),
        components: vec![WindowComponent::new("ok", 40, 20, true, 0)],
        anchor: Anchor::Fixed,
    };
    let a = desk.create_window(spec(Rect::new(100, 100, 200, 150))).unwrap();
    let _b = desk.create_window(spec(Rect::new(250, 200, 200, 150))).unwrap();

    let feed = |desk: &mut Desktop, ev: InputEvent| {
        let label = format!("{ev:?}");
        for change in handle_chord_input(desk, ev) {
            println!("{label:<40} {}", serde_json::to_string(&change).unwrap());
        }
    };

    // Chord over the lower window raises it and starts a move.
    feed(&mut desk, InputEvent::BothButtonsDown(Point::new(110, 110)));
    feed(&mut desk, InputEvent::PointerMove { dx: 20, dy: 10 });
    feed(&mut desk, InputEvent::BothButtonsUp);
    assert_eq!(desk.window(a).unwrap().rect.origin(), Point::new(120, 110));
    assert_eq!(desk.z_order().last(), Some(&a));

    // With the chord released, the resize key grabs the corner nearest the
    // last pointer position. Escape ends the resize.
    feed(&mut desk, InputEvent::BothButtonsDown(Point::new(310, 250)));
    feed(&mut desk, InputEvent::BothButtonsUp);
    feed(&mut desk, InputEvent::Key("resize".into()));
    feed(&mut desk, InputEvent::PointerMove { dx: 500, dy: 500 });
    feed(&mut desk, InputEvent::Key("escape".into()));
    assert_eq!(desk.input.phase, ChordPhase::Idle);
    let rect = desk.window(a).unwrap().rect;
    println!("final rect {rect}");
    assert_eq!(rect, Rect::new(120, 110, 400, 400));
}

#[allow(dead_code)]
fn main() {
    run();
}
