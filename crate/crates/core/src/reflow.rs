//! Re-layout after a display change: re-anchor, shrink to fit, move into the
//! visible area, then grow to reveal further components where room allows.

use serde::{Deserialize, Serialize};

use crate::desktop::{Anchor, Desktop, Window, WindowComponent, WindowId, WindowState};
use crate::error::{Error, Result};
use crate::geom::{translate_into, DisplayBounds, Point, Rect, Size};

/// Fixed window decoration around the content region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chrome {
    pub title: i64,
    pub border: i64,
}

impl Default for Chrome {
    fn default() -> Self {
        Self { title: 20, border: 2 }
    }
}

impl Chrome {
    /// Outer size needed to show a content region of `content`.
    pub fn outer(&self, content: Size) -> Size {
        Size::new(content.w + 2 * self.border, content.h + self.title + 2 * self.border)
    }
}

/// Components in layout order: required ones first, each group by priority,
/// ties in declaration order.
pub fn layout_order(components: &[WindowComponent]) -> Vec<&WindowComponent> {
    let mut ordered: Vec<&WindowComponent> = components.iter().collect();
    ordered.sort_by_key(|c| (!c.required, c.priority));
    ordered
}

/// Outer size needed to show the first `count` components stacked
/// vertically.
fn needed_for(ordered: &[&WindowComponent], count: usize, chrome: Chrome) -> Size {
    let shown = &ordered[..count];
    let w = shown.iter().map(|c| c.w).max().unwrap_or(0);
    let h = shown.iter().map(|c| c.h).sum();
    chrome.outer(Size::new(w, h))
}

pub(crate) fn min_rect_for(components: &[WindowComponent], chrome: Chrome) -> Option<Size> {
    let ordered = layout_order(components);
    let first = ordered.first().filter(|c| c.required)?;
    Some(chrome.outer(Size::new(first.w, first.h)))
}

/// Smallest size that still shows the window's most integral required
/// component.
pub fn min_rect(window: &Window, chrome: Chrome) -> Result<Size> {
    min_rect_for(&window.components, chrome).ok_or(Error::NoRequiredComponent(window.id))
}

/// How many components (in layout order) are visible at `size`.
pub fn components_visible(components: &[WindowComponent], size: Size, chrome: Chrome) -> usize {
    let ordered = layout_order(components);
    (1..=ordered.len()).take_while(|&k| needed_for(&ordered, k, chrome).fits_within(size)).count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflowEntry {
    pub id: WindowId,
    pub old_rect: Rect,
    pub new_rect: Rect,
    pub shrunk_to_min: bool,
    pub moved_into_area: bool,
    pub components_visible: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflowReport {
    pub old_display: DisplayBounds,
    pub new_display: DisplayBounds,
    /// One entry per live window, bottom of the stack first.
    pub windows: Vec<ReflowEntry>,
}

struct Placement {
    rect: Rect,
    shrunk_to_min: bool,
    moved_into_area: bool,
}

fn scale_floor(v: i64, new: i64, old: i64) -> i64 {
    (v * new).div_euclid(old)
}

/// Anchor, fit and relocate one rect. Growth is handled separately.
fn place(r: Rect, anchor: Anchor, floor: Size, old: DisplayBounds, new: DisplayBounds) -> Placement {
    let origin = match anchor {
        Anchor::Fixed => r.origin(),
        Anchor::Proportional => Point::new(scale_floor(r.x, new.w, old.w), scale_floor(r.y, new.h, old.h)),
    };
    let size = Size::new(r.w.min(new.w), r.h.min(new.h));
    let shrunk_to_min = (size.w < r.w && size.w == floor.w) || (size.h < r.h && size.h == floor.h);
    let fitted = Rect::from_origin_size(origin, size);
    // Cannot fail: size was clamped to the display above.
    let inside = translate_into(&fitted, new).unwrap_or(fitted);
    Placement { rect: inside, shrunk_to_min, moved_into_area: inside.origin() != fitted.origin() }
}

/// Grow rightward and downward, one component at a time in layout order,
/// while the display edge and the size limit leave room.
fn grow(r: Rect, window: &Window, display: DisplayBounds, chrome: Chrome) -> Rect {
    let ordered = layout_order(&window.components);
    let room = Size::new(window.max_size.w.min(display.w - r.x), window.max_size.h.min(display.h - r.y));
    let mut size = r.size();
    for k in 1..=ordered.len() {
        let want = size.max(needed_for(&ordered, k, chrome));
        if !want.fits_within(room) {
            break;
        }
        size = want;
    }
    r.with_size(size)
}

/// Replace the display bounds and re-lay out every window.
pub fn reflow(desktop: &mut Desktop, new_display: DisplayBounds) -> Result<ReflowReport> {
    let old_display = desktop.display;
    let order: Vec<WindowId> = desktop.z_order().to_vec();

    for id in &order {
        let w = desktop.window(*id)?;
        let floor = w.min_size.max(min_rect(w, desktop.chrome)?);
        if !floor.fits_within(new_display.size()) {
            return Err(Error::DisplayTooSmall { window: *id, display: new_display });
        }
    }

    let chrome = desktop.chrome;
    desktop.display = new_display;
    let mut entries = Vec::with_capacity(order.len());
    for id in order {
        let w = desktop.window(id)?;
        let old_rect = w.home_rect();
        let floor = w.min_size.max(min_rect(w, chrome)?);

        let (new_rect, shrunk_to_min, moved_into_area) = if old_display == new_display {
            (old_rect, false, false)
        } else {
            let p = place(old_rect, w.anchor, floor, old_display, new_display);
            let rect = match w.anchor {
                Anchor::Proportional => grow(p.rect, w, new_display, chrome),
                Anchor::Fixed => p.rect,
            };
            (rect, p.shrunk_to_min, p.moved_into_area)
        };
        let restore = match (w.state, w.saved_rect) {
            (WindowState::Exposed, Some(saved)) if old_display != new_display => {
                Some(place(saved, w.anchor, floor, old_display, new_display).rect)
            }
            _ => None,
        };
        let components_visible = components_visible(&w.components, new_rect.size(), chrome);

        let w = desktop.window_mut(id)?;
        match w.state {
            WindowState::Icon => w.saved_rect = Some(new_rect),
            WindowState::HiddenForAction => {
                w.rect = new_rect;
                w.saved_rect = Some(new_rect);
            }
            WindowState::Exposed | WindowState::Invisible => {
                w.rect = new_rect;
                if restore.is_some() {
                    w.saved_rect = restore;
                }
            }
        }
        entries.push(ReflowEntry { id, old_rect, new_rect, shrunk_to_min, moved_into_area, components_visible });
    }
    desktop.pack_icon_tray();
    Ok(ReflowReport { old_display, new_display, windows: entries })
}
