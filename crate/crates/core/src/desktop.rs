//! Desktop state: windows, stacking order, logical clock and the queries
//! every policy builds on (hit-testing and occlusion).

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::chord::ChordState;
use crate::error::{Error, Result};
use crate::geom::{self, DisplayBounds, Point, Rect, Size};
use crate::lasso::{LassoConfig, PointerSampleQueue};
use crate::reflow::{self, Chrome};
use crate::visibility::VisibilityMode;

/// Side length of an icon slot in the tray along the bottom display edge.
pub const ICON_SLOT: i64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WindowId(pub u64);

impl fmt::Display for WindowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A piece of window content whose visibility defines useful window size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowComponent {
    pub name: String,
    pub w: i64,
    pub h: i64,
    pub required: bool,
    /// Lower values are more integral to the window.
    pub priority: i32,
}

impl WindowComponent {
    pub fn new(name: impl Into<String>, w: i64, h: i64, required: bool, priority: i32) -> Self {
        Self { name: name.into(), w, h, required, priority }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowState {
    Exposed,
    Invisible,
    Icon,
    HiddenForAction,
}

/// How a window's position follows display changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Anchor {
    Proportional,
    Fixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub id: WindowId,
    pub rect: Rect,
    /// Dense stacking rank, 0 at the bottom.
    pub z: usize,
    pub min_size: Size,
    pub max_size: Size,
    pub components: Vec<WindowComponent>,
    pub mode: VisibilityMode,
    /// Clock value when the current timed exposure began.
    pub exposure_started: Option<i64>,
    pub state: WindowState,
    pub saved_rect: Option<Rect>,
    pub anchor: Anchor,
}

impl Window {
    pub fn is_exposed(&self) -> bool {
        self.state == WindowState::Exposed
    }

    pub fn is_locked(&self) -> bool {
        self.mode == VisibilityMode::Locked
    }

    /// The rect the window occupies when shown. Iconified windows keep it in
    /// `saved_rect` while `rect` holds the tray slot.
    pub fn home_rect(&self) -> Rect {
        match (self.state, self.saved_rect) {
            (WindowState::Icon, Some(saved)) => saved,
            _ => self.rect,
        }
    }
}

/// Parameters for [`Desktop::create_window`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowSpec {
    pub rect: Rect,
    pub min_size: Size,
    pub max_size: Size,
    pub components: Vec<WindowComponent>,
    pub anchor: Anchor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Desktop {
    pub display: DisplayBounds,
    pub clock: i64,
    pub chrome: Chrome,
    pub input: ChordState,
    pub lasso: PointerSampleQueue,
    windows: BTreeMap<WindowId, Window>,
    /// Bottom to top.
    z_order: Vec<WindowId>,
    next_id: u64,
}

impl Desktop {
    pub fn new(display: DisplayBounds) -> Self {
        Self::with_config(display, Chrome::default(), LassoConfig::default())
    }

    pub fn with_config(display: DisplayBounds, chrome: Chrome, lasso: LassoConfig) -> Self {
        Self {
            display,
            clock: 0,
            chrome,
            input: ChordState::default(),
            lasso: PointerSampleQueue::new(lasso),
            windows: BTreeMap::new(),
            z_order: Vec::new(),
            next_id: 1,
        }
    }

    pub fn window(&self, id: WindowId) -> Result<&Window> {
        self.windows.get(&id).ok_or(Error::NoSuchWindow(id))
    }

    pub(crate) fn window_mut(&mut self, id: WindowId) -> Result<&mut Window> {
        self.windows.get_mut(&id).ok_or(Error::NoSuchWindow(id))
    }

    pub(crate) fn exposed_window(&self, id: WindowId) -> Result<&Window> {
        let w = self.window(id)?;
        if !w.is_exposed() {
            return Err(Error::NotExposed(id));
        }
        Ok(w)
    }

    /// Windows in id order.
    pub fn windows(&self) -> impl Iterator<Item = &Window> {
        self.windows.values()
    }

    pub(crate) fn windows_mut(&mut self) -> impl Iterator<Item = &mut Window> {
        self.windows.values_mut()
    }

    pub fn len(&self) -> usize {
        self.windows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.windows.is_empty()
    }

    /// Live window ids from bottom to top.
    pub fn z_order(&self) -> &[WindowId] {
        &self.z_order
    }

    pub fn create_window(&mut self, spec: WindowSpec) -> Result<WindowId> {
        let WindowSpec { rect, min_size, max_size, components, anchor } = spec;
        if min_size.w < 0 || min_size.h < 0 || !min_size.fits_within(max_size) {
            return Err(Error::BadLimits);
        }
        if let Some(c) = components.iter().find(|c| c.w <= 0 || c.h <= 0) {
            return Err(Error::BadComponent(c.name.clone()));
        }
        let id = WindowId(self.next_id);
        let content_min = reflow::min_rect_for(&components, self.chrome).ok_or(Error::NoRequiredComponent(id))?;
        if !content_min.fits_within(min_size) {
            return Err(Error::BadLimits);
        }
        if !min_size.fits_within(rect.size()) || !rect.size().fits_within(max_size) {
            return Err(Error::BadRect(rect));
        }

        self.next_id += 1;
        self.windows.insert(
            id,
            Window {
                id,
                rect,
                z: 0,
                min_size,
                max_size,
                components,
                mode: VisibilityMode::Normal,
                exposure_started: None,
                state: WindowState::Exposed,
                saved_rect: None,
                anchor,
            },
        );
        let at = self.top_insert_index();
        self.z_order.insert(at, id);
        self.redensify();
        Ok(id)
    }

    pub fn destroy(&mut self, id: WindowId) -> Result<()> {
        let removed = self.windows.remove(&id).ok_or(Error::NoSuchWindow(id))?;
        self.z_order.retain(|w| *w != id);
        self.redensify();
        if removed.state == WindowState::Icon {
            self.pack_icon_tray();
        }
        self.drop_stale_input();
        Ok(())
    }

    /// Move `id` to the top of its stacking band. Locked windows form a band
    /// above all others, so ordinary windows stop just below them.
    pub fn raise(&mut self, id: WindowId) -> Result<()> {
        self.window(id)?;
        self.z_order.retain(|w| *w != id);
        let at = if self.windows[&id].is_locked() { self.z_order.len() } else { self.top_insert_index() };
        self.z_order.insert(at, id);
        self.redensify();
        Ok(())
    }

    fn top_insert_index(&self) -> usize {
        self.z_order
            .iter()
            .position(|w| self.windows.get(w).is_some_and(Window::is_locked))
            .unwrap_or(self.z_order.len())
    }

    fn redensify(&mut self) {
        for (rank, id) in self.z_order.iter().enumerate() {
            if let Some(w) = self.windows.get_mut(id) {
                w.z = rank;
            }
        }
    }

    /// Topmost exposed window containing `p`.
    pub fn hit_test(&self, p: Point) -> Option<WindowId> {
        self.z_order
            .iter()
            .rev()
            .map(|id| &self.windows[id])
            .find(|w| w.is_exposed() && w.rect.contains_point(p))
            .map(|w| w.id)
    }

    /// Exposed windows stacked above `id`, nearest first.
    pub(crate) fn exposed_above(&self, id: WindowId) -> impl Iterator<Item = &Window> {
        self.z_order.iter().skip_while(move |w| **w != id).skip(1).map(|w| &self.windows[w]).filter(|w| w.is_exposed())
    }

    /// Fraction of `id`'s rect covered by exposed windows stacked above it.
    pub fn occluded_fraction(&self, id: WindowId) -> Result<Ratio<i64>> {
        let win = self.exposed_window(id)?;
        let area = win.rect.area();
        if area == 0 {
            return Err(Error::ZeroArea(id));
        }
        let covers: Vec<Rect> = self.exposed_above(id).filter_map(|w| w.rect.intersection(&win.rect)).collect();
        Ok(Ratio::new(geom::union_area(&covers), area))
    }

    /// Tray slot of the `index`-th icon: rows fill left to right along the
    /// bottom edge, then wrap upwards.
    pub fn icon_slot(&self, index: usize) -> Rect {
        let per_row = (self.display.w / ICON_SLOT).max(1) as usize;
        let col = (index % per_row) as i64;
        let row = (index / per_row) as i64;
        Rect::new(col * ICON_SLOT, self.display.h - ICON_SLOT * (row + 1), ICON_SLOT, ICON_SLOT)
    }

    /// Re-assign tray slots to iconified windows in id order.
    pub(crate) fn pack_icon_tray(&mut self) {
        let icons: Vec<WindowId> =
            self.windows.values().filter(|w| w.state == WindowState::Icon).map(|w| w.id).collect();
        for (i, id) in icons.into_iter().enumerate() {
            let slot = self.icon_slot(i);
            if let Some(w) = self.windows.get_mut(&id) {
                w.rect = slot;
            }
        }
    }

    /// Reset chord input if it refers to a window that can no longer be
    /// operated.
    pub(crate) fn drop_stale_input(&mut self) {
        if let Some(id) = self.input.phase.window() {
            if !self.windows.get(&id).is_some_and(Window::is_exposed) {
                self.input.reset();
            }
        }
    }

    /// Checks the structural invariants; used by tests and the replay harness.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut ids: Vec<WindowId> = self.z_order.clone();
        ids.sort();
        let live: Vec<WindowId> = self.windows.keys().copied().collect();
        if ids != live {
            return Err(format!("z-order {:?} is not a permutation of {:?}", self.z_order, live));
        }
        for (rank, id) in self.z_order.iter().enumerate() {
            let w = &self.windows[id];
            if w.z != rank {
                return Err(format!("window {id} has z {} but rank {rank}", w.z));
            }
            if w.is_exposed() && !(w.min_size.fits_within(w.rect.size()) && w.rect.size().fits_within(w.max_size)) {
                return Err(format!("window {id} rect {:?} violates its size limits", w.rect));
            }
            if w.state == WindowState::Icon && w.saved_rect.is_none() {
                return Err(format!("icon {id} has no saved rect"));
            }
            let timed_visible =
                w.mode.is_timed() && matches!(w.state, WindowState::Exposed | WindowState::HiddenForAction);
            if timed_visible != w.exposure_started.is_some() {
                return Err(format!("window {id} exposure stamp inconsistent with mode/state"));
            }
        }
        let locked_seen_below =
            self.z_order.windows(2).any(|p| self.windows[&p[0]].is_locked() && !self.windows[&p[1]].is_locked());
        if locked_seen_below {
            return Err("an unlocked window is stacked above a locked one".into());
        }
        Ok(())
    }
}
