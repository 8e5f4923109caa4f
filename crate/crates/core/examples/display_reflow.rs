//! Shrink and grow the display and see how windows are re-laid out.
//!
//! Run with `cargo run --example display_reflow`.

use panekit::reflow::reflow;
use panekit::{Anchor, Desktop, DisplayBounds, Rect, Size, WindowComponent, WindowSpec};

fn show(desk: &Desktop) {
    for w in desk.windows() {
        println!("  {} {:<12} {:?}", w.id, w.rect.to_string(), w.anchor);
    }
}

pub fn run() {
    let mut desk = Desktop::new(DisplayBounds::new(1600, 1200).unwrap());
    let components = vec![
        WindowComponent::new("toolbar", 200, 30, true, 0),
        WindowComponent::new("list", 200, 120, false, 1),
        WindowComponent::new("status", 200, 20, false, 2),
    ];
    // The floor is the required toolbar plus title bar and borders: 204x54.
    let spec = |rect, anchor| WindowSpec {
        rect,
        min_size: Size::new(204, 54),
        max_size: Size::new(1000, 800),
        components: components.clone(),
        anchor,
    };
    let p = desk.create_window(spec(Rect::new(1200, 900, 300, 200), Anchor::Proportional)).unwrap();
    desk.create_window(spec(Rect::new(40, 40, 204, 54), Anchor::Fixed)).unwrap();
    println!("1600x1200");
    show(&desk);

    for (w, h) in [(800, 600), (400, 300), (1920, 1200)] {
        let report = reflow(&mut desk, DisplayBounds::new(w, h).unwrap()).unwrap();
        println!("{w}x{h}");
        show(&desk);
        for e in &report.windows {
            assert!(desk.display.contains(&e.new_rect));
            println!("    {} components visible: {}", e.id, e.components_visible);
        }
    }

    // A display smaller than some window's floor is refused without changes.
    let before = desk.clone();
    let err = reflow(&mut desk, DisplayBounds::new(100, 100).unwrap()).unwrap_err();
    println!("100x100 refused: {err}");
    assert_eq!(desk, before);
    assert!(desk.window(p).unwrap().rect.w >= 204);
}

#[allow(dead_code)]
fn main() {
    run();
}
