//! Border selection by looping the pointer across a window border.
//!
//! The last few pointer samples form a polyline. When that polyline crosses
//! one border of the topmost window under it at least twice, with the two
//! latest crossings close together, the border is selected. Samples older
//! than the configured time window are discarded before every check.

use std::collections::VecDeque;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::desktop::{Desktop, WindowId};
use crate::error::{Error, Result};
use crate::geom::{Point, Rect};
use crate::limits::Edge;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LassoConfig {
    /// Queue capacity.
    pub n_max: usize,
    /// Maximum age of a sample, in ms, relative to the newest one.
    pub t_lasso: i64,
    /// Maximum distance, in px, between the two crossings of one loop.
    pub proximity_d: i64,
}

impl Default for LassoConfig {
    fn default() -> Self {
        Self { n_max: 32, t_lasso: 500, proximity_d: 24 }
    }
}

impl LassoConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.n_max < 4 {
            return Err(format!("n_max must be at least 4, got {}", self.n_max));
        }
        if self.t_lasso <= 0 || self.proximity_d <= 0 {
            return Err("t_lasso and proximity_d must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointerSample {
    pub t: i64,
    pub p: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorderSelection {
    pub window: WindowId,
    pub part: Edge,
    pub at_clock: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointerSampleQueue {
    config: LassoConfig,
    samples: VecDeque<PointerSample>,
    last_t: Option<i64>,
}

impl PointerSampleQueue {
    pub fn new(config: LassoConfig) -> Self {
        Self { config, samples: VecDeque::with_capacity(config.n_max), last_t: None }
    }

    pub fn config(&self) -> LassoConfig {
        self.config
    }

    pub fn samples(&self) -> impl Iterator<Item = &PointerSample> {
        self.samples.iter()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn clear(&mut self) {
        self.samples.clear();
    }

    /// Append a sample, then trim to capacity and to the time window.
    pub fn push(&mut self, sample: PointerSample) -> Result<()> {
        if let Some(last) = self.last_t {
            if sample.t < last {
                return Err(Error::NonMonotonicTime { t: sample.t, last });
            }
        }
        self.last_t = Some(sample.t);
        self.samples.push_back(sample);
        while self.samples.len() > self.config.n_max {
            self.samples.pop_front();
        }
        while self.samples.front().is_some_and(|s| sample.t - s.t > self.config.t_lasso) {
            self.samples.pop_front();
        }
        Ok(())
    }
}

/// A border segment running from `start` to `end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSegment {
    pub edge: Edge,
    pub start: Point,
    pub end: Point,
    /// Corner at `start` and at `end`.
    pub corners: (Edge, Edge),
}

impl EdgeSegment {
    pub fn length(&self) -> i64 {
        (self.end.x - self.start.x).abs() + (self.end.y - self.start.y).abs()
    }
}

/// The four border segments of `r`, in the order Left, Right, Top, Bottom.
pub fn border_segments(r: &Rect) -> [EdgeSegment; 4] {
    let (x0, y0, x1, y1) = (r.x, r.y, r.right(), r.bottom());
    [
        EdgeSegment {
            edge: Edge::Left,
            start: Point::new(x0, y0),
            end: Point::new(x0, y1),
            corners: (Edge::TopLeft, Edge::BottomLeft),
        },
        EdgeSegment {
            edge: Edge::Right,
            start: Point::new(x1, y0),
            end: Point::new(x1, y1),
            corners: (Edge::TopRight, Edge::BottomRight),
        },
        EdgeSegment {
            edge: Edge::Top,
            start: Point::new(x0, y0),
            end: Point::new(x1, y0),
            corners: (Edge::TopLeft, Edge::TopRight),
        },
        EdgeSegment {
            edge: Edge::Bottom,
            start: Point::new(x0, y1),
            end: Point::new(x1, y1),
            corners: (Edge::BottomLeft, Edge::BottomRight),
        },
    ]
}

/// An intersection of the pointer polyline with a border segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// Index of the polyline segment.
    pub segment: usize,
    /// Parameter along that polyline segment, in `[0, 1]`.
    pub s: Ratio<i64>,
    /// Distance from the border segment's start, in px.
    pub along: Ratio<i64>,
    pub x: Ratio<i64>,
    pub y: Ratio<i64>,
}

fn orient(a: Point, b: Point, c: Point) -> i64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn straddles(d1: i64, d2: i64) -> bool {
    (d1 <= 0 && d2 >= 0) || (d1 >= 0 && d2 <= 0)
}

/// Intersections of `polyline` with `edge`, in polyline order.
///
/// Segments collinear with the edge contribute nothing. A crossing exactly
/// at a vertex shared by two polyline segments is reported once.
pub fn crossings(polyline: &[Point], edge: &EdgeSegment) -> Vec<Crossing> {
    let (c, d) = (edge.start, edge.end);
    let len = edge.length();
    let mut out = Vec::new();
    for (i, seg) in polyline.windows(2).enumerate() {
        let (a, b) = (seg[0], seg[1]);
        if a == b {
            continue;
        }
        let d1 = orient(c, d, a);
        let d2 = orient(c, d, b);
        if d1 == 0 && d2 == 0 {
            continue;
        }
        let d3 = orient(a, b, c);
        let d4 = orient(a, b, d);
        if !straddles(d1, d2) || !straddles(d3, d4) {
            continue;
        }
        let s = Ratio::new(d1, d1 - d2);
        if i > 0 && s == Ratio::from_integer(0) {
            continue;
        }
        let along = if d3 == d4 {
            // Degenerate edge (zero length): the intersection is its start.
            Ratio::from_integer(0)
        } else {
            Ratio::new(d3, d3 - d4) * len
        };
        let x = Ratio::from_integer(a.x) + s * (b.x - a.x);
        let y = Ratio::from_integer(a.y) + s * (b.y - a.y);
        out.push(Crossing { segment: i, s, along, x, y });
    }
    out
}

/// Closed-rect test of `r` against the bounding box of `pts`.
fn touches_bbox(r: &Rect, pts: &[Point]) -> bool {
    let min_x = pts.iter().map(|p| p.x).min().unwrap_or(0);
    let max_x = pts.iter().map(|p| p.x).max().unwrap_or(0);
    let min_y = pts.iter().map(|p| p.y).min().unwrap_or(0);
    let max_y = pts.iter().map(|p| p.y).max().unwrap_or(0);
    r.x <= max_x && min_x <= r.right() && r.y <= max_y && min_y <= r.bottom()
}

/// Topmost exposed window whose border rect touches the polyline's bounding
/// box.
pub fn candidate_window(desktop: &Desktop, polyline: &[Point]) -> Option<WindowId> {
    desktop
        .z_order()
        .iter()
        .rev()
        .filter_map(|id| desktop.window(*id).ok())
        .find(|w| w.is_exposed() && touches_bbox(&w.rect, polyline))
        .map(|w| w.id)
}

/// The border part a polyline selects on `rect`, if any.
pub fn select_part(polyline: &[Point], rect: &Rect, proximity_d: i64) -> Option<Edge> {
    let d = Ratio::from_integer(proximity_d);
    let mut best: Option<((usize, Ratio<i64>), Edge)> = None;
    for seg in border_segments(rect) {
        let xs = crossings(polyline, &seg);
        let [.., first, last] = xs.as_slice() else {
            continue;
        };
        let gap = if last.along > first.along { last.along - first.along } else { first.along - last.along };
        if gap > d {
            continue;
        }
        let len = Ratio::from_integer(seg.length());
        let near_start = first.along <= d && last.along <= d;
        let near_end = len - first.along <= d && len - last.along <= d;
        let part = match (near_start, near_end) {
            (true, true) => {
                if first.along + last.along <= len * 2 - first.along - last.along {
                    seg.corners.0
                } else {
                    seg.corners.1
                }
            }
            (true, false) => seg.corners.0,
            (false, true) => seg.corners.1,
            (false, false) => seg.edge,
        };
        let recency = (last.segment, last.s);
        // Latest crossing wins; equal recency keeps the earlier border.
        if best.as_ref().is_none_or(|(r, _)| recency > *r) {
            best = Some((recency, part));
        }
    }
    best.map(|(_, part)| part)
}

/// Record a pointer sample and check the queued trajectory for a lasso.
/// A selection clears the queue.
pub fn push_sample(desktop: &mut Desktop, t: i64, p: Point) -> Result<Option<BorderSelection>> {
    desktop.lasso.push(PointerSample { t, p })?;
    let polyline: Vec<Point> = desktop.lasso.samples().map(|s| s.p).collect();
    if polyline.len() < 2 {
        return Ok(None);
    }
    let Some(window) = candidate_window(desktop, &polyline) else {
        return Ok(None);
    };
    let rect = desktop.window(window)?.rect;
    let selection = select_part(&polyline, &rect, desktop.lasso.config().proximity_d).map(|part| BorderSelection {
        window,
        part,
        at_clock: t,
    });
    if selection.is_some() {
        desktop.lasso.clear();
    }
    Ok(selection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desktop::tests::{desk, spec};

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn right_edge() -> EdgeSegment {
        border_segments(&Rect::new(100, 50, 100, 100))[1]
    }

    #[test]
    fn polyline_left_of_edge_has_no_crossings() {
        assert!(crossings(&pts(&[(0, 60), (50, 80), (90, 120)]), &right_edge()).is_empty());
    }

    #[test]
    fn single_segment_crosses_once() {
        let xs = crossings(&pts(&[(190, 100), (210, 110)]), &right_edge());
        assert_eq!(xs.len(), 1);
        assert_eq!(xs[0].x, Ratio::from_integer(200));
        assert_eq!(xs[0].y, Ratio::from_integer(105));
        assert_eq!(xs[0].along, Ratio::from_integer(55));
    }

    #[test]
    fn octagon_loop_around_edge_midpoint_crosses_twice() {
        // Eight samples around (200, 100).
        let o = pts(&[
            (210, 100),
            (207, 107),
            (200, 110),
            (193, 107),
            (190, 100),
            (193, 93),
            (200, 90),
            (207, 93),
            (210, 100),
        ]);
        let xs = crossings(&o, &right_edge());
        assert_eq!(xs.len(), 2);
        assert_eq!(xs[0].y, Ratio::from_integer(110));
        assert_eq!(xs[1].y, Ratio::from_integer(90));
    }

    #[test]
    fn shared_vertex_on_edge_counts_once() {
        let xs = crossings(&pts(&[(190, 100), (200, 100), (210, 100)]), &right_edge());
        assert_eq!(xs.len(), 1);
    }

    #[test]
    fn collinear_segment_counts_zero() {
        let xs = crossings(&pts(&[(200, 60), (200, 140)]), &right_edge());
        assert!(xs.is_empty());
    }

    fn push_all(d: &mut Desktop, path: &[(i64, i64, i64)]) -> Option<BorderSelection> {
        let mut sel = None;
        for &(t, x, y) in path {
            if let Some(s) = push_sample(d, t, Point::new(x, y)).unwrap() {
                sel = Some(s);
            }
        }
        sel
    }

    #[test]
    fn straight_pass_selects_nothing() {
        let mut d = desk();
        d.create_window(spec(Rect::new(100, 50, 100, 100))).unwrap();
        let sel = push_all(&mut d, &[(0, 50, 100), (50, 100, 100), (100, 150, 100)]);
        assert_eq!(sel, None);
    }

    #[test]
    fn loop_across_right_edge_selects_it() {
        let mut d = desk();
        let id = d.create_window(spec(Rect::new(100, 50, 100, 100))).unwrap();
        // Crosses x=200 at y=100 going out, at y=112 coming back.
        let sel = push_all(&mut d, &[(0, 190, 100), (100, 210, 100), (200, 210, 112), (300, 190, 112)]);
        assert_eq!(sel, Some(BorderSelection { window: id, part: Edge::Right, at_clock: 300 }));
        assert!(d.lasso.is_empty());
    }

    #[test]
    fn slow_loop_ages_out() {
        let mut d = desk();
        d.create_window(spec(Rect::new(100, 50, 100, 100))).unwrap();
        let sel = push_all(&mut d, &[(0, 190, 100), (100, 210, 100), (600, 210, 112), (800, 190, 112)]);
        assert_eq!(sel, None);
    }

    #[test]
    fn loop_near_corner_selects_corner() {
        let mut d = desk();
        let id = d.create_window(spec(Rect::new(100, 50, 100, 100))).unwrap();
        let sel = push_all(&mut d, &[(0, 190, 140), (10, 210, 140), (20, 210, 145), (30, 190, 145)]);
        assert_eq!(sel.map(|s| (s.window, s.part)), Some((id, Edge::BottomRight)));
    }

    #[test]
    fn crossings_far_apart_are_not_a_loop() {
        let mut d = desk();
        d.create_window(spec(Rect::new(100, 50, 100, 100))).unwrap();
        let sel = push_all(&mut d, &[(0, 190, 70), (10, 210, 70), (20, 210, 130), (30, 190, 130)]);
        assert_eq!(sel, None);
    }

    #[test]
    fn queue_respects_capacity_and_order() {
        let mut q = PointerSampleQueue::new(LassoConfig { n_max: 4, t_lasso: 1000, proximity_d: 24 });
        for t in 0..10 {
            q.push(PointerSample { t, p: Point::new(t, 0) }).unwrap();
            assert!(q.len() <= 4);
        }
        assert_eq!(q.samples().next().unwrap().t, 6);
        assert_eq!(q.push(PointerSample { t: 3, p: Point::new(0, 0) }), Err(Error::NonMonotonicTime { t: 3, last: 9 }));
    }

    #[test]
    fn config_validation() {
        assert!(LassoConfig::default().validate().is_ok());
        assert!(LassoConfig { n_max: 3, ..Default::default() }.validate().is_err());
        assert!(LassoConfig { t_lasso: 0, ..Default::default() }.validate().is_err());
    }
}
