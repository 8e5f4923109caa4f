//! Keeping a target window from obscuring a protected one by moving it
//! away, hiding it for the duration of an action, or reducing its size.

use serde::{Deserialize, Serialize};

use crate::desktop::{Desktop, Window, WindowId, WindowState};
use crate::error::{Error, Result};
use crate::geom::{overlap_area, Point, Rect, Size};

/// Spacing of candidate positions for [`UnobscureStrategy::MoveAway`].
pub const GRID_STEP: i64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnobscureStrategy {
    MoveAway,
    Disappear,
    Reduce,
    /// The first of move-away and reduce that fully clears the protected
    /// window, falling back to disappear.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlanAction {
    MoveTo { rect: Rect },
    HideUntilActionEnd,
    ReduceTo { rect: Rect },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnobscurePlan {
    pub target: WindowId,
    pub action: PlanAction,
    /// Overlap with the protected window left after the plan is applied.
    pub residual_overlap: i64,
    /// Target rect and z the plan was computed against.
    pub planned_rect: Rect,
    pub planned_z: usize,
}

/// Overlap score of placing the target at `rect`.
fn score(desktop: &Desktop, target: WindowId, protected: &Rect, rect: &Rect) -> (i64, i64) {
    let others: i64 =
        desktop.windows().filter(|w| w.id != target && w.is_exposed()).map(|w| overlap_area(rect, &w.rect)).sum();
    let prot = overlap_area(rect, protected);
    (prot, others - prot)
}

fn linf(a: Point, b: Point) -> i64 {
    (a.x - b.x).abs().max((a.y - b.y).abs())
}

/// (protected overlap, other overlap, distance, y, x)
type ScanKey = (i64, i64, i64, i64, i64);

/// Best on-screen grid position for the target, scored by overlap with the
/// protected window, then overlap with every other exposed window, then
/// distance from where it is now. Ties go to the smaller y, then smaller x.
fn plan_move_away(desktop: &Desktop, target: &Window, protected: &Rect) -> (Rect, i64) {
    let current = target.rect;
    let current_overlap = overlap_area(&current, protected);
    let display = desktop.display;
    let mut best: Option<(ScanKey, Rect)> = None;
    let mut y = 0;
    while y + current.h <= display.h {
        let mut x = 0;
        while x + current.w <= display.w {
            let cand = current.with_origin(Point::new(x, y));
            let (prot, others) = score(desktop, target.id, protected, &cand);
            let key = (prot, others, linf(cand.origin(), current.origin()), y, x);
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, cand));
            }
            x += GRID_STEP;
        }
        y += GRID_STEP;
    }
    match best {
        Some(((prot, ..), rect)) if prot <= current_overlap => (rect, prot),
        // Nothing on the grid does better than staying put.
        _ => (current, current_overlap),
    }
}

/// Largest size no bigger than the current one, keeping the top-left fixed,
/// that clears the protected window without going below the minimum size.
fn plan_reduce(target: &Window, protected: &Rect) -> (Rect, i64) {
    let r = target.rect;
    let min = target.min_size;
    let mut options: Vec<Size> = Vec::new();
    if protected.x > r.x {
        let w = r.w.min(protected.x - r.x);
        if w >= min.w {
            options.push(Size::new(w, r.h));
        }
    }
    if protected.y > r.y {
        let h = r.h.min(protected.y - r.y);
        if h >= min.h {
            options.push(Size::new(r.w, h));
        }
    }
    // Largest area, then the wider.
    match options.into_iter().max_by_key(|s| (s.w * s.h, s.w)) {
        Some(size) => (r.with_size(size), 0),
        None => {
            let rect = r.with_size(min);
            (rect, overlap_area(&rect, protected))
        }
    }
}

pub fn plan_unobscure(
    desktop: &Desktop,
    target: WindowId,
    protected: WindowId,
    strategy: UnobscureStrategy,
) -> Result<UnobscurePlan> {
    if target == protected {
        return Err(Error::SameWindow(target));
    }
    let t = desktop.exposed_window(target)?;
    let p = desktop.exposed_window(protected)?;
    if t.is_locked() {
        return Err(Error::LockedTarget(target));
    }
    let plan = |action, residual_overlap| UnobscurePlan {
        target,
        action,
        residual_overlap,
        planned_rect: t.rect,
        planned_z: t.z,
    };

    if overlap_area(&t.rect, &p.rect) == 0 {
        return Ok(plan(PlanAction::MoveTo { rect: t.rect }, 0));
    }
    let moved = || {
        let (rect, residual) = plan_move_away(desktop, t, &p.rect);
        plan(PlanAction::MoveTo { rect }, residual)
    };
    let reduced = || {
        let (rect, residual) = plan_reduce(t, &p.rect);
        plan(PlanAction::ReduceTo { rect }, residual)
    };
    let hidden = || plan(PlanAction::HideUntilActionEnd, 0);

    Ok(match strategy {
        UnobscureStrategy::MoveAway => moved(),
        UnobscureStrategy::Reduce => reduced(),
        UnobscureStrategy::Disappear => hidden(),
        UnobscureStrategy::Auto => {
            let m = moved();
            if m.residual_overlap == 0 {
                m
            } else {
                let r = reduced();
                if r.residual_overlap == 0 {
                    r
                } else {
                    hidden()
                }
            }
        }
    })
}

pub fn apply_plan(desktop: &mut Desktop, plan: &UnobscurePlan) -> Result<()> {
    let w = desktop.window(plan.target).map_err(|_| Error::StalePlan(plan.target))?;
    if !w.is_exposed() || w.rect != plan.planned_rect || w.z != plan.planned_z {
        return Err(Error::StalePlan(plan.target));
    }
    if w.is_locked() && !matches!(plan.action, PlanAction::MoveTo { .. }) {
        return Err(Error::LockedTarget(plan.target));
    }
    let w = desktop.window_mut(plan.target)?;
    match plan.action {
        PlanAction::MoveTo { rect } => w.rect = rect,
        PlanAction::ReduceTo { rect } => {
            w.saved_rect.get_or_insert(w.rect);
            w.rect = rect;
        }
        PlanAction::HideUntilActionEnd => {
            w.saved_rect.get_or_insert(w.rect);
            w.state = WindowState::HiddenForAction;
        }
    }
    desktop.drop_stale_input();
    Ok(())
}

/// Undo a hide or reduce once the action that needed the protected window
/// has finished.
pub fn end_action(desktop: &mut Desktop, target: WindowId) -> Result<()> {
    let w = desktop.window_mut(target)?;
    let restorable = matches!(w.state, WindowState::HiddenForAction | WindowState::Exposed);
    match w.saved_rect {
        Some(saved) if restorable => {
            w.rect = saved;
            w.saved_rect = None;
            w.state = WindowState::Exposed;
            Ok(())
        }
        _ => Err(Error::NothingToRestore(target)),
    }
}
