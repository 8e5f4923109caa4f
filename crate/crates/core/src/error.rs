use thiserror::Error;

use crate::desktop::{WindowId, WindowState};
use crate::geom::{DisplayBounds, Rect};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by engine operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("display bounds must be positive, got {w}x{h}")]
    BadDisplay { w: i64, h: i64 },
    #[error("rect {rect} does not fit in a {}x{} display", display.w, display.h)]
    DoesNotFit { rect: Rect, display: DisplayBounds },
    #[error("size limits violate min <= max")]
    BadLimits,
    #[error("rect {0} is outside the window's size limits")]
    BadRect(Rect),
    #[error("component {0:?} must have positive width and height")]
    BadComponent(String),
    #[error("window {0} does not exist")]
    NoSuchWindow(WindowId),
    #[error("window {0} is not exposed")]
    NotExposed(WindowId),
    #[error("window {0} has zero area")]
    ZeroArea(WindowId),
    #[error("target and protected window are the same ({0})")]
    SameWindow(WindowId),
    #[error("window {0} is locked and cannot be moved, hidden or reduced")]
    LockedTarget(WindowId),
    #[error("plan for window {0} no longer matches the desktop")]
    StalePlan(WindowId),
    #[error("window {0} has nothing to restore")]
    NothingToRestore(WindowId),
    #[error("window {0} has no required component")]
    NoRequiredComponent(WindowId),
    #[error("display {}x{} is too small for window {window}", display.w, display.h)]
    DisplayTooSmall { window: WindowId, display: DisplayBounds },
    #[error("pointer sample at t={t} precedes the last sample at t={last}")]
    NonMonotonicTime { t: i64, last: i64 },
    #[error("window {0} is already exposed")]
    AlreadyExposed(WindowId),
    #[error("window {id} cannot be exposed from state {state:?}")]
    CannotExpose { id: WindowId, state: WindowState },
    #[error("clock cannot move backwards from {clock} to {t}")]
    ClockRegression { clock: i64, t: i64 },
    #[error("timed modes need a positive display period, got {0}")]
    BadPeriod(i64),
}
