//! Brute-force oracles and random desktop generators shared by the
//! integration tests. Nothing here calls the engine's own geometry code.

#![allow(dead_code)]

use num_rational::Ratio;
use rand::Rng;

use panekit::desktop::{Anchor, Desktop, WindowComponent, WindowId, WindowSpec, WindowState};
use panekit::geom::{DisplayBounds, Point, Rect, Size};
use panekit::lasso::LassoConfig;
use panekit::limits::Edge;
use panekit::reflow::Chrome;
use panekit::visibility::{self, VisibilityMode};

pub const NO_CHROME: Chrome = Chrome { title: 0, border: 0 };

fn covers(r: &Rect, x: i64, y: i64) -> bool {
    x >= r.x && x < r.x + r.w && y >= r.y && y < r.y + r.h
}

/// Covered fraction of `id` counted pixel by pixel.
pub fn raster_occluded_fraction(desktop: &Desktop, id: WindowId) -> Ratio<i64> {
    let target = desktop.window(id).unwrap();
    let above: Vec<Rect> =
        desktop.windows().filter(|w| w.state == WindowState::Exposed && w.z > target.z).map(|w| w.rect).collect();
    let r = target.rect;
    let mut covered = 0;
    for y in r.y..r.y + r.h {
        for x in r.x..r.x + r.w {
            if above.iter().any(|a| covers(a, x, y)) {
                covered += 1;
            }
        }
    }
    Ratio::new(covered, r.w * r.h)
}

fn raster_overlap(a: &Rect, b: &Rect) -> i64 {
    let mut n = 0;
    for y in a.y..a.y + a.h {
        for x in a.x..a.x + a.w {
            if covers(b, x, y) {
                n += 1;
            }
        }
    }
    n
}

/// Overlap computed from interval lengths, independent of `geom`.
pub fn interval_overlap(a: &Rect, b: &Rect) -> i64 {
    let w = (a.x + a.w).min(b.x + b.w) - a.x.max(b.x);
    let h = (a.y + a.h).min(b.y + b.h) - a.y.max(b.y);
    w.max(0) * h.max(0)
}

pub struct MoveOracle {
    /// Smallest L-infinity displacement among zero-overlap positions.
    pub best_zero_displacement: Option<i64>,
    /// Whether some zero-overlap position lies on the 8 px grid.
    pub grid_cell_exists: bool,
}

/// Scan every on-screen 1 px position of `target`'s rect.
pub fn move_away_oracle(display: DisplayBounds, target: &Rect, protected: &Rect) -> MoveOracle {
    let mut best = None::<i64>;
    let mut grid = false;
    for y in 0..=display.h - target.h {
        for x in 0..=display.w - target.w {
            let cand = Rect::new(x, y, target.w, target.h);
            if interval_overlap(&cand, protected) == 0 {
                let d = (x - target.x).abs().max((y - target.y).abs());
                best = Some(best.map_or(d, |b| b.min(d)));
                if x % 8 == 0 && y % 8 == 0 {
                    grid = true;
                }
            }
        }
    }
    MoveOracle { best_zero_displacement: best, grid_cell_exists: grid }
}

/// Pixel-counted overlap; used to spot-check the interval formula.
pub fn raster_overlap_check(a: &Rect, b: &Rect) -> bool {
    raster_overlap(a, b) == interval_overlap(a, b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCrossing {
    pub segment: usize,
    pub s: Ratio<i64>,
    pub along: Ratio<i64>,
}

/// Crossings of `poly` with an axis-aligned border segment, solved per axis.
/// `vertical` edges sit at `x = fixed` and span `lo..=hi` in y.
pub fn axis_crossings(poly: &[Point], vertical: bool, fixed: i64, lo: i64, hi: i64) -> Vec<OracleCrossing> {
    let mut out = Vec::new();
    for i in 0..poly.len().saturating_sub(1) {
        let (a, b) = (poly[i], poly[i + 1]);
        let (a_n, b_n, a_t, b_t) = if vertical { (a.x, b.x, a.y, b.y) } else { (a.y, b.y, a.x, b.x) };
        if a_n == b_n {
            // Parallel to the edge: collinear or disjoint, neither counts.
            continue;
        }
        if fixed < a_n.min(b_n) || fixed > a_n.max(b_n) {
            continue;
        }
        let s = Ratio::new(fixed - a_n, b_n - a_n);
        let pos = Ratio::from_integer(a_t) + s * (b_t - a_t);
        if pos < Ratio::from_integer(lo) || pos > Ratio::from_integer(hi) {
            continue;
        }
        if i > 0 && s == Ratio::from_integer(0) {
            continue;
        }
        out.push(OracleCrossing { segment: i, s, along: pos - lo });
    }
    out
}

/// Brute-force lasso decision over a polyline and one window rect.
pub fn lasso_oracle(poly: &[Point], r: &Rect, d: i64) -> Option<Edge> {
    let (x0, y0, x1, y1) = (r.x, r.y, r.x + r.w, r.y + r.h);
    let edges = [
        (Edge::Left, true, x0, y0, y1, Edge::TopLeft, Edge::BottomLeft),
        (Edge::Right, true, x1, y0, y1, Edge::TopRight, Edge::BottomRight),
        (Edge::Top, false, y0, x0, x1, Edge::TopLeft, Edge::TopRight),
        (Edge::Bottom, false, y1, x0, x1, Edge::BottomLeft, Edge::BottomRight),
    ];
    let d = Ratio::from_integer(d);
    let mut best: Option<((usize, Ratio<i64>), Edge)> = None;
    for (edge, vertical, fixed, lo, hi, c0, c1) in edges {
        let xs = axis_crossings(poly, vertical, fixed, lo, hi);
        if xs.len() < 2 {
            continue;
        }
        let (p, q) = (xs[xs.len() - 2], xs[xs.len() - 1]);
        let gap = if p.along > q.along { p.along - q.along } else { q.along - p.along };
        if gap > d {
            continue;
        }
        let len = Ratio::from_integer(hi - lo);
        let near0 = p.along <= d && q.along <= d;
        let near1 = len - p.along <= d && len - q.along <= d;
        let part = match (near0, near1) {
            (true, true) => {
                let to0 = p.along + q.along;
                let to1 = (len - p.along) + (len - q.along);
                if to0 <= to1 {
                    c0
                } else {
                    c1
                }
            }
            (true, false) => c0,
            (false, true) => c1,
            _ => edge,
        };
        let key = (q.segment, q.s);
        if best.is_none_or(|(k, _)| key > k) {
            best = Some((key, part));
        }
    }
    best.map(|(_, p)| p)
}

/// Topmost exposed window whose closed rect meets the polyline's bbox.
pub fn oracle_candidate(desktop: &Desktop, poly: &[Point]) -> Option<WindowId> {
    let min_x = poly.iter().map(|p| p.x).min()?;
    let max_x = poly.iter().map(|p| p.x).max()?;
    let min_y = poly.iter().map(|p| p.y).min()?;
    let max_y = poly.iter().map(|p| p.y).max()?;
    let mut ws: Vec<_> = desktop.windows().filter(|w| w.state == WindowState::Exposed).collect();
    ws.sort_by_key(|w| std::cmp::Reverse(w.z));
    ws.into_iter()
        .find(|w| {
            w.rect.x <= max_x && min_x <= w.rect.x + w.rect.w && w.rect.y <= max_y && min_y <= w.rect.y + w.rect.h
        })
        .map(|w| w.id)
}

pub fn tiny_components() -> Vec<WindowComponent> {
    vec![WindowComponent::new("dot", 1, 1, true, 1)]
}

/// Random desktop without chrome so that windows can be as small as 1x1.
pub fn random_desk<R: Rng>(rng: &mut R, display: DisplayBounds, max_windows: usize, hide: bool) -> Desktop {
    let mut d = Desktop::with_config(display, NO_CHROME, LassoConfig::default());
    let n = rng.gen_range(1..=max_windows);
    for _ in 0..n {
        let w = rng.gen_range(1..=display.w * 3 / 4);
        let h = rng.gen_range(1..=display.h * 3 / 4);
        let x = rng.gen_range(-w / 2..display.w - w / 2);
        let y = rng.gen_range(-h / 2..display.h - h / 2);
        d.create_window(WindowSpec {
            rect: Rect::new(x, y, w, h),
            min_size: Size::new(1, 1),
            max_size: Size::new(display.w * 2, display.h * 2),
            components: tiny_components(),
            anchor: Anchor::Fixed,
        })
        .unwrap();
    }
    let ids: Vec<WindowId> = d.windows().map(|w| w.id).collect();
    for _ in 0..rng.gen_range(0..=n) {
        let id = ids[rng.gen_range(0..ids.len())];
        d.raise(id).unwrap();
    }
    if hide {
        let t = d.clock;
        for id in &ids {
            if rng.gen_bool(0.2) {
                visibility::set_mode(&mut d, *id, VisibilityMode::Timed { t_show: 1 }).unwrap();
            }
        }
        visibility::tick(&mut d, t + 1).unwrap();
    }
    d
}
