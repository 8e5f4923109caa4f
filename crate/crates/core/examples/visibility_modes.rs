//! Normal, timed, locked and timed-icon windows driven by a logical clock.
//!
//! Run with `cargo run --example visibility_modes`.

use panekit::visibility::{expose, set_mode, tick, VisibilityMode};
use panekit::{Anchor, Desktop, DisplayBounds, Rect, Size, WindowComponent, WindowSpec, WindowState};

pub fn run() {
    let mut desk = Desktop::new(DisplayBounds::new(800, 600).unwrap());
    let spec = |rect| WindowSpec {
        rect,
        min_size: Size::new(50, 50),
        max_size: Size::new(400, 400),
        components: vec![WindowComponent::new("ok", 40, 20, true, 0)],
        anchor: Anchor::Fixed,
    };
    let normal = desk.create_window(spec(Rect::new(10, 10, 100, 100))).unwrap();
    let timed = desk.create_window(spec(Rect::new(150, 10, 100, 100))).unwrap();
    let icon = desk.create_window(spec(Rect::new(300, 10, 100, 100))).unwrap();
    let locked = desk.create_window(spec(Rect::new(50, 50, 100, 100))).unwrap();

    set_mode(&mut desk, timed, VisibilityMode::Timed { t_show: 1000 }).unwrap();
    set_mode(&mut desk, icon, VisibilityMode::TimedIcon { t_show: 500 }).unwrap();
    set_mode(&mut desk, locked, VisibilityMode::Locked).unwrap();

    for t in [499, 500, 999, 1000] {
        for tr in tick(&mut desk, t).unwrap() {
            println!("t={t:<5} {} {:?} -> {:?} (deadline {})", tr.window, tr.from, tr.to, tr.deadline);
            assert_eq!(tr.deadline, t);
        }
    }
    let state = |d: &Desktop, id| d.window(id).unwrap().state;
    assert_eq!(state(&desk, normal), WindowState::Exposed);
    assert_eq!(state(&desk, timed), WindowState::Invisible);
    assert_eq!(state(&desk, icon), WindowState::Icon);
    println!("icon parked at {}", desk.window(icon).unwrap().rect);

    // Exposing again restarts the period and restores the home rect.
    expose(&mut desk, icon).unwrap();
    println!("icon restored to {}", desk.window(icon).unwrap().rect);
    assert_eq!(tick(&mut desk, 1499).unwrap(), vec![]);
    assert_eq!(tick(&mut desk, 1500).unwrap().len(), 1);

    // Locked windows stay on top of everything else.
    assert_eq!(desk.z_order().last(), Some(&locked));
    desk.raise(normal).unwrap();
    assert_eq!(desk.z_order().last(), Some(&locked));
    println!("z order bottom->top: {:?}", desk.z_order());
}

#[allow(dead_code)]
fn main() {
    run();
}
