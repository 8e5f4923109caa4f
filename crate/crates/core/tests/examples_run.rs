//! Every example doubles as a smoke test: each `run` asserts what it prints.

#[path = "../examples/resize_feedback.rs"]
mod resize_feedback;

#[path = "../examples/unobscure_strategies.rs"]
mod unobscure_strategies;

#[path = "../examples/chord_move_resize.rs"]
mod chord_move_resize;

#[path = "../examples/display_reflow.rs"]
mod display_reflow;

#[path = "../examples/lasso_border.rs"]
mod lasso_border;

#[path = "../examples/visibility_modes.rs"]
mod visibility_modes;

#[path = "../examples/replay_trace.rs"]
mod replay_trace;

#[test]
fn resize_feedback_runs() {
    resize_feedback::run();
}

#[test]
fn unobscure_strategies_runs() {
    unobscure_strategies::run();
}

#[test]
fn chord_move_resize_runs() {
    chord_move_resize::run();
}

#[test]
fn display_reflow_runs() {
    display_reflow::run();
}

#[test]
fn lasso_border_runs() {
    lasso_border::run();
}

#[test]
fn visibility_modes_runs() {
    visibility_modes::run();
}

#[test]
fn replay_trace_runs() {
    replay_trace::run();
}
