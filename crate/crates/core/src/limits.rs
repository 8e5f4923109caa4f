//! Border-drag resizing with min/max clamping. Every clamped drag produces a
//! [`LimitFeedback`] naming the limits that stopped it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::desktop::{Desktop, WindowId};
use crate::error::Result;
use crate::geom::{Point, Rect};

/// A window edge or corner. Corners act on both axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Edge {
    Left,
    Right,
    Top,
    Bottom,
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

impl Edge {
    pub const CORNERS: [Edge; 4] = [Edge::TopLeft, Edge::TopRight, Edge::BottomLeft, Edge::BottomRight];

    pub fn moves_left(self) -> bool {
        matches!(self, Edge::Left | Edge::TopLeft | Edge::BottomLeft)
    }

    pub fn moves_right(self) -> bool {
        matches!(self, Edge::Right | Edge::TopRight | Edge::BottomRight)
    }

    pub fn moves_top(self) -> bool {
        matches!(self, Edge::Top | Edge::TopLeft | Edge::TopRight)
    }

    pub fn moves_bottom(self) -> bool {
        matches!(self, Edge::Bottom | Edge::BottomLeft | Edge::BottomRight)
    }

    pub fn is_corner(self) -> bool {
        Self::CORNERS.contains(&self)
    }

    /// Position of a corner of `r`; `None` for plain edges.
    pub fn corner_of(self, r: &Rect) -> Option<Point> {
        Some(match self {
            Edge::TopLeft => Point::new(r.x, r.y),
            Edge::TopRight => Point::new(r.right(), r.y),
            Edge::BottomLeft => Point::new(r.x, r.bottom()),
            Edge::BottomRight => Point::new(r.right(), r.bottom()),
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Limit {
    MaxWidth,
    MaxHeight,
    MinWidth,
    MinHeight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitFeedback {
    pub window: WindowId,
    pub limited: BTreeSet<Limit>,
    pub at_clock: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResizeOutcome {
    /// The rect the pointer asked for. May have negative extent when the
    /// drag crossed the opposite edge.
    pub requested: Rect,
    pub applied: Rect,
    pub feedback: Option<LimitFeedback>,
}

/// Rect obtained by moving the edges named by `edge` by the pointer delta
/// while the opposite edges stay put.
pub fn requested_rect(r: &Rect, edge: Edge, dx: i64, dy: i64) -> Rect {
    let (mut left, mut top, mut right, mut bottom) = (r.x, r.y, r.right(), r.bottom());
    if edge.moves_left() {
        left += dx;
    }
    if edge.moves_right() {
        right += dx;
    }
    if edge.moves_top() {
        top += dy;
    }
    if edge.moves_bottom() {
        bottom += dy;
    }
    Rect::new(left, top, right - left, bottom - top)
}

/// Clamp one axis. Returns (start, extent, limit hit).
fn clamp_axis(start: i64, extent: i64, moves_start: bool, min: i64, max: i64) -> (i64, i64, Option<bool>) {
    let clamped = extent.clamp(min, max);
    let hit = if extent > max {
        Some(true)
    } else if extent < min {
        Some(false)
    } else {
        None
    };
    // Keep the fixed (non-dragged) edge where it is.
    let start = if moves_start { start + extent - clamped } else { start };
    (start, clamped, hit)
}

/// Drag `edge` of window `id` by `(dx, dy)`, clamped into the window's
/// size limits.
pub fn resize_drag(desktop: &mut Desktop, id: WindowId, edge: Edge, dx: i64, dy: i64) -> Result<ResizeOutcome> {
    let clock = desktop.clock;
    let win = desktop.exposed_window(id)?;
    let requested = requested_rect(&win.rect, edge, dx, dy);
    let (x, w, w_hit) = clamp_axis(requested.x, requested.w, edge.moves_left(), win.min_size.w, win.max_size.w);
    let (y, h, h_hit) = clamp_axis(requested.y, requested.h, edge.moves_top(), win.min_size.h, win.max_size.h);
    let applied = Rect::new(x, y, w, h);

    let mut limited = BTreeSet::new();
    match w_hit {
        Some(true) => {
            limited.insert(Limit::MaxWidth);
        }
        Some(false) => {
            limited.insert(Limit::MinWidth);
        }
        None => {}
    }
    match h_hit {
        Some(true) => {
            limited.insert(Limit::MaxHeight);
        }
        Some(false) => {
            limited.insert(Limit::MinHeight);
        }
        None => {}
    }
    let feedback = (!limited.is_empty()).then_some(LimitFeedback { window: id, limited, at_clock: clock });

    desktop.window_mut(id)?.rect = applied;
    Ok(ResizeOutcome { requested, applied, feedback })
}
