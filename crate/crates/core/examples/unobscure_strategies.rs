//! The three ways to stop a window from covering a protected one, plus the
//! automatic choice between them.
//!
//! Run with `cargo run --example unobscure_strategies`.

use panekit::occlusion::{apply_plan, end_action, plan_unobscure, PlanAction, UnobscureStrategy};
use panekit::{Anchor, Desktop, DisplayBounds, Rect, Size, WindowComponent, WindowId, WindowSpec};

fn setup() -> (Desktop, WindowId, WindowId) {
    let mut desk = Desktop::new(DisplayBounds::new(800, 600).unwrap());
    let spec = |rect| WindowSpec {
        rect,
        min_size: Size::new(50, 50),
        max_size: Size::new(800, 600),
        components: vec![WindowComponent::new("ok", 40, 20, true, 0)],
        anchor: Anchor::Fixed,
    };
    let protected = desk.create_window(spec(Rect::new(200, 150, 300, 200))).unwrap();
    let target = desk.create_window(spec(Rect::new(100, 100, 300, 200))).unwrap();
    (desk, protected, target)
}

pub fn run() {
    for strategy in
        [UnobscureStrategy::MoveAway, UnobscureStrategy::Reduce, UnobscureStrategy::Disappear, UnobscureStrategy::Auto]
    {
        let (mut desk, protected, target) = setup();
        let before = desk.occluded_fraction(protected).unwrap();
        let plan = plan_unobscure(&desk, target, protected, strategy).unwrap();
        apply_plan(&mut desk, &plan).unwrap();
        let after = desk.occluded_fraction(protected).unwrap();
        println!("{strategy:?}: {:?} residual={} occluded {before} -> {after}", plan.action, plan.residual_overlap);
        assert_eq!(after, 0.into());

        // A move is permanent. Hide and reduce are undone once the action
        // that needed the protected window is over.
        if matches!(plan.action, PlanAction::MoveTo { .. }) {
            assert!(end_action(&mut desk, target).is_err());
            continue;
        }
        end_action(&mut desk, target).unwrap();
        let w = desk.window(target).unwrap();
        println!("  after end_action: {} {:?}", w.rect, w.state);
        assert_eq!(w.rect, Rect::new(100, 100, 300, 200));
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
