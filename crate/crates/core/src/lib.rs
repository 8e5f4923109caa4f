//! A headless, deterministic window-management policy engine.
//!
//! The engine models a desktop of rectangular windows and implements six
//! policies as pure state transitions:
//!
//! - [`limits`]: resize with min/max clamping and limit feedback events
//! - [`occlusion`]: keep a window from covering a protected one
//! - [`chord`]: move/resize through a button chord or key combination
//! - [`reflow`]: re-layout after display size changes
//! - [`lasso`]: select a border by looping the pointer across it
//! - [`visibility`]: normal, timed, locked and timed-icon display modes
//!
//! Time only advances through explicit logical clocks, so any sequence of
//! inputs can be recorded as a [`trace`] and replayed bit-for-bit.

pub mod bridge;
pub mod chord;
pub mod desktop;
pub mod error;
pub mod geom;
pub mod lasso;
pub mod limits;
pub mod occlusion;
pub mod reflow;
pub mod trace;
pub mod visibility;

pub use desktop::{Anchor, Desktop, Window, WindowComponent, WindowId, WindowSpec, WindowState};
pub use error::{Error, Result};
pub use geom::{DisplayBounds, Point, Rect, Size};
