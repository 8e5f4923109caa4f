//! Move and resize through a two-button chord or a key combination, so the
//! pointer never has to land on a border.

use serde::{Deserialize, Serialize};

use crate::desktop::{Desktop, WindowId};
use crate::geom::{Point, Rect};
use crate::limits::{self, Edge, LimitFeedback};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(tag = "phase", rename_all = "snake_case")]
pub enum ChordPhase {
    #[default]
    Idle,
    Moving {
        window: WindowId,
    },
    Resizing {
        window: WindowId,
        part: Edge,
    },
}

impl ChordPhase {
    pub fn window(&self) -> Option<WindowId> {
        match *self {
            ChordPhase::Idle => None,
            ChordPhase::Moving { window } | ChordPhase::Resizing { window, .. } => Some(window),
        }
    }
}

/// Names of the key combinations the engine reacts to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordBindings {
    pub move_combo: String,
    pub resize_combo: String,
    pub escape: String,
}

impl Default for ChordBindings {
    fn default() -> Self {
        Self { move_combo: "move".into(), resize_combo: "resize".into(), escape: "escape".into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChordState {
    pub phase: ChordPhase,
    pub bindings: ChordBindings,
    /// Last known pointer position.
    pub pointer: Option<Point>,
}

impl ChordState {
    pub fn reset(&mut self) {
        self.phase = ChordPhase::Idle;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputEvent {
    BothButtonsDown(Point),
    BothButtonsUp,
    /// A key combination, matched against [`ChordBindings`].
    Key(String),
    PointerMove {
        dx: i64,
        dy: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "change", rename_all = "snake_case")]
pub enum StateChange {
    Phase { from: ChordPhase, to: ChordPhase },
    Raised { window: WindowId },
    Moved { window: WindowId, rect: Rect },
    Resized { window: WindowId, rect: Rect, feedback: Option<LimitFeedback> },
}

/// Corner of `r` nearest to `p`. Ties resolve in the order of
/// [`Edge::CORNERS`].
pub fn nearest_corner(r: &Rect, p: Point) -> Edge {
    let dist = |e: Edge| {
        let c = e.corner_of(r).expect("corner");
        let (dx, dy) = (c.x - p.x, c.y - p.y);
        dx * dx + dy * dy
    };
    Edge::CORNERS.into_iter().min_by_key(|e| dist(*e)).expect("four corners")
}

fn enter(desktop: &mut Desktop, to: ChordPhase, out: &mut Vec<StateChange>) {
    let from = desktop.input.phase;
    desktop.input.phase = to;
    if from != to {
        out.push(StateChange::Phase { from, to });
    }
}

/// Put the state machine into resize mode on `part` of `window`.
pub fn arm_resize(desktop: &mut Desktop, window: WindowId, part: Edge) -> Vec<StateChange> {
    let mut out = Vec::new();
    if desktop.exposed_window(window).is_ok() {
        enter(desktop, ChordPhase::Resizing { window, part }, &mut out);
    }
    out
}

pub fn handle_chord_input(desktop: &mut Desktop, event: InputEvent) -> Vec<StateChange> {
    desktop.drop_stale_input();
    let mut out = Vec::new();
    let phase = desktop.input.phase;
    let bindings = desktop.input.bindings.clone();

    match event {
        InputEvent::Key(k) if k == bindings.escape => enter(desktop, ChordPhase::Idle, &mut out),
        InputEvent::BothButtonsUp => enter(desktop, ChordPhase::Idle, &mut out),
        InputEvent::BothButtonsDown(p) => {
            desktop.input.pointer = Some(p);
            if phase == ChordPhase::Idle {
                start_move(desktop, p, &mut out);
            }
        }
        InputEvent::Key(k) if phase == ChordPhase::Idle => {
            let Some(p) = desktop.input.pointer else {
                return out;
            };
            if k == bindings.move_combo {
                start_move(desktop, p, &mut out);
            } else if k == bindings.resize_combo {
                if let Some(window) = desktop.hit_test(p) {
                    let rect = desktop.window(window).map(|w| w.rect).expect("hit window is live");
                    let part = nearest_corner(&rect, p);
                    enter(desktop, ChordPhase::Resizing { window, part }, &mut out);
                }
            }
        }
        InputEvent::Key(_) => {}
        InputEvent::PointerMove { dx, dy } => {
            if let Some(p) = desktop.input.pointer.as_mut() {
                *p = Point::new(p.x + dx, p.y + dy);
            }
            match phase {
                ChordPhase::Idle => {}
                ChordPhase::Moving { window } => {
                    if let Ok(w) = desktop.window_mut(window) {
                        // Not clamped to the display; reflow brings windows back.
                        w.rect = w.rect.translated(dx, dy);
                        out.push(StateChange::Moved { window, rect: w.rect });
                    }
                }
                ChordPhase::Resizing { window, part } => {
                    if let Ok(r) = limits::resize_drag(desktop, window, part, dx, dy) {
                        out.push(StateChange::Resized { window, rect: r.applied, feedback: r.feedback });
                    }
                }
            }
        }
    }
    out
}

fn start_move(desktop: &mut Desktop, p: Point, out: &mut Vec<StateChange>) {
    if let Some(window) = desktop.hit_test(p) {
        enter(desktop, ChordPhase::Moving { window }, out);
        let before = desktop.z_order().to_vec();
        desktop.raise(window).expect("hit window is live");
        if desktop.z_order() != before {
            out.push(StateChange::Raised { window });
        }
    }
}
