//! Integer-pixel geometry shared by every policy.
//!
//! Rects are half-open: a rect at `x` with width `w` covers pixel columns
//! `x..x + w`. All areas are exact integers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Size {
    pub w: i64,
    pub h: i64,
}

impl Size {
    pub const fn new(w: i64, h: i64) -> Self {
        Self { w, h }
    }

    /// Componentwise `self <= other`.
    pub fn fits_within(self, other: Size) -> bool {
        self.w <= other.w && self.h <= other.h
    }

    pub fn max(self, other: Size) -> Size {
        Size::new(self.w.max(other.w), self.h.max(other.h))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Rect {
    pub x: i64,
    pub y: i64,
    pub w: i64,
    pub h: i64,
}

impl Rect {
    pub const fn new(x: i64, y: i64, w: i64, h: i64) -> Self {
        Self { x, y, w, h }
    }

    pub fn from_origin_size(origin: Point, size: Size) -> Self {
        Self::new(origin.x, origin.y, size.w, size.h)
    }

    pub fn origin(&self) -> Point {
        Point::new(self.x, self.y)
    }

    pub fn size(&self) -> Size {
        Size::new(self.w, self.h)
    }

    pub fn right(&self) -> i64 {
        self.x + self.w
    }

    pub fn bottom(&self) -> i64 {
        self.y + self.h
    }

    pub fn area(&self) -> i64 {
        self.w.max(0) * self.h.max(0)
    }

    pub fn is_empty(&self) -> bool {
        self.w <= 0 || self.h <= 0
    }

    /// Half-open containment: the right and bottom pixel lines are outside.
    pub fn contains_point(&self, p: Point) -> bool {
        p.x >= self.x && p.x < self.right() && p.y >= self.y && p.y < self.bottom()
    }

    pub fn contains_rect(&self, other: &Rect) -> bool {
        other.x >= self.x && other.y >= self.y && other.right() <= self.right() && other.bottom() <= self.bottom()
    }

    pub fn intersection(&self, other: &Rect) -> Option<Rect> {
        let x0 = self.x.max(other.x);
        let y0 = self.y.max(other.y);
        let x1 = self.right().min(other.right());
        let y1 = self.bottom().min(other.bottom());
        (x1 > x0 && y1 > y0).then(|| Rect::new(x0, y0, x1 - x0, y1 - y0))
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Rect {
        Rect::new(self.x + dx, self.y + dy, self.w, self.h)
    }

    pub fn with_origin(&self, p: Point) -> Rect {
        Rect::new(p.x, p.y, self.w, self.h)
    }

    pub fn with_size(&self, s: Size) -> Rect {
        Rect::new(self.x, self.y, s.w, s.h)
    }
}

/// The display area. The origin is fixed at (0, 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DisplayBounds {
    pub w: i64,
    pub h: i64,
}

impl std::fmt::Display for Rect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}+{}+{}", self.w, self.h, self.x, self.y)
    }
}

impl DisplayBounds {
    pub fn new(w: i64, h: i64) -> Result<Self> {
        if w <= 0 || h <= 0 {
            return Err(Error::BadDisplay { w, h });
        }
        Ok(Self { w, h })
    }

    pub fn rect(&self) -> Rect {
        Rect::new(0, 0, self.w, self.h)
    }

    pub fn size(&self) -> Size {
        Size::new(self.w, self.h)
    }

    pub fn contains(&self, r: &Rect) -> bool {
        self.rect().contains_rect(r)
    }
}

/// Area of the intersection of `a` and `b`, zero when they are disjoint.
pub fn overlap_area(a: &Rect, b: &Rect) -> i64 {
    a.intersection(b).map_or(0, |r| r.area())
}

/// Translate `r` into `bounds` with the smallest possible displacement on
/// each axis. The size never changes.
pub fn translate_into(r: &Rect, bounds: DisplayBounds) -> Result<Rect> {
    if r.w > bounds.w || r.h > bounds.h {
        return Err(Error::DoesNotFit { rect: *r, display: bounds });
    }
    let x = r.x.clamp(0, bounds.w - r.w);
    let y = r.y.clamp(0, bounds.h - r.h);
    Ok(r.with_origin(Point::new(x, y)))
}

/// Exact area of the union of `rects`, via coordinate compression.
pub fn union_area(rects: &[Rect]) -> i64 {
    let rects: Vec<&Rect> = rects.iter().filter(|r| !r.is_empty()).collect();
    if rects.is_empty() {
        return 0;
    }
    let mut xs: Vec<i64> = rects.iter().flat_map(|r| [r.x, r.right()]).collect();
    let mut ys: Vec<i64> = rects.iter().flat_map(|r| [r.y, r.bottom()]).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();

    let mut total = 0;
    for xw in xs.windows(2) {
        for yw in ys.windows(2) {
            let cell = Rect::new(xw[0], yw[0], xw[1] - xw[0], yw[1] - yw[0]);
            if rects.iter().any(|r| r.contains_rect(&cell)) {
                total += cell.area();
            }
        }
    }
    total
}
