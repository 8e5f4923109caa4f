//! Per-window display modes: normal, timed, locked and timed icon.
//!
//! Time only advances through [`tick`]; there are no timers.

use serde::{Deserialize, Serialize};

use crate::desktop::{Desktop, WindowId, WindowState};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VisibilityMode {
    /// Shown until explicitly hidden.
    Normal,
    /// Returns to invisible `t_show` ms after being exposed.
    Timed { t_show: i64 },
    /// Always shown, stacked above other windows, immune to auto-hide and
    /// to being hidden or reduced by the occlusion policy.
    Locked,
    /// Collapses to a tray icon `t_show` ms after being exposed.
    TimedIcon { t_show: i64 },
}

impl VisibilityMode {
    pub fn is_timed(&self) -> bool {
        matches!(self, Self::Timed { .. } | Self::TimedIcon { .. })
    }

    pub fn period(&self) -> Option<i64> {
        match *self {
            Self::Timed { t_show } | Self::TimedIcon { t_show } => Some(t_show),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Transition {
    pub window: WindowId,
    pub from: WindowState,
    pub to: WindowState,
    /// Clock value at which the exposure expired.
    pub deadline: i64,
}

pub fn set_mode(desktop: &mut Desktop, id: WindowId, mode: VisibilityMode) -> Result<()> {
    if let Some(p) = mode.period() {
        if p <= 0 {
            return Err(Error::BadPeriod(p));
        }
    }
    let was_locked = desktop.window(id)?.is_locked();
    if mode == VisibilityMode::Locked {
        // A locked window is always shown.
        let w = desktop.window(id)?;
        if w.state == WindowState::Icon || w.state == WindowState::HiddenForAction {
            restore_saved(desktop, id)?;
        } else if w.state == WindowState::Invisible {
            desktop.window_mut(id)?.state = WindowState::Exposed;
        }
    }

    let clock = desktop.clock;
    let w = desktop.window_mut(id)?;
    w.mode = mode;
    let shown = matches!(w.state, WindowState::Exposed | WindowState::HiddenForAction);
    w.exposure_started = (shown && mode.is_timed()).then_some(clock);

    if mode == VisibilityMode::Locked || was_locked {
        // Moves the window into (or out of) the locked band.
        desktop.raise(id)?;
    }
    desktop.drop_stale_input();
    Ok(())
}

fn restore_saved(desktop: &mut Desktop, id: WindowId) -> Result<()> {
    let w = desktop.window_mut(id)?;
    let was_icon = w.state == WindowState::Icon;
    if let Some(saved) = w.saved_rect.take() {
        w.rect = saved;
    }
    w.state = WindowState::Exposed;
    if was_icon {
        desktop.pack_icon_tray();
    }
    Ok(())
}

/// Show an invisible or iconified window at its prior rect.
pub fn expose(desktop: &mut Desktop, id: WindowId) -> Result<()> {
    let state = desktop.window(id)?.state;
    match state {
        WindowState::Exposed => return Err(Error::AlreadyExposed(id)),
        WindowState::HiddenForAction => return Err(Error::CannotExpose { id, state }),
        WindowState::Invisible | WindowState::Icon => {}
    }
    restore_saved(desktop, id)?;
    let clock = desktop.clock;
    let w = desktop.window_mut(id)?;
    w.exposure_started = w.mode.is_timed().then_some(clock);
    Ok(())
}

/// Advance the clock to `t` and expire timed exposures whose deadline is
/// at or before `t`. Transitions are reported in window-id order.
pub fn tick(desktop: &mut Desktop, t: i64) -> Result<Vec<Transition>> {
    if t < desktop.clock {
        return Err(Error::ClockRegression { clock: desktop.clock, t });
    }
    desktop.clock = t;

    let mut transitions = Vec::new();
    for w in desktop.windows_mut() {
        if w.state != WindowState::Exposed {
            continue;
        }
        let (Some(start), Some(period)) = (w.exposure_started, w.mode.period()) else {
            continue;
        };
        let deadline = start + period;
        if deadline > t {
            continue;
        }
        let to = match w.mode {
            VisibilityMode::TimedIcon { .. } => {
                w.saved_rect = Some(w.rect);
                WindowState::Icon
            }
            _ => WindowState::Invisible,
        };
        w.state = to;
        w.exposure_started = None;
        transitions.push(Transition { window: w.id, from: WindowState::Exposed, to, deadline });
    }
    if transitions.iter().any(|tr| tr.to == WindowState::Icon) {
        desktop.pack_icon_tray();
    }
    if !transitions.is_empty() {
        desktop.drop_stale_input();
    }
    Ok(transitions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desktop::tests::{desk, spec};
    use crate::geom::Rect;
    use proptest::prelude::*;

    fn one_window() -> (Desktop, WindowId) {
        let mut d = desk();
        let id = d.create_window(spec(Rect::new(10, 10, 100, 100))).unwrap();
        (d, id)
    }

    #[test]
    fn normal_windows_stay_exposed() {
        let (mut d, id) = one_window();
        set_mode(&mut d, id, VisibilityMode::Normal).unwrap();
        assert!(tick(&mut d, 1_000_000).unwrap().is_empty());
        assert!(d.window(id).unwrap().is_exposed());
    }

    #[test]
    fn timed_mode_stamps_exposure_on_set() {
        let (mut d, id) = one_window();
        tick(&mut d, 400).unwrap();
        set_mode(&mut d, id, VisibilityMode::Timed { t_show: 1000 }).unwrap();
        assert_eq!(d.window(id).unwrap().exposure_started, Some(400));
    }

    #[test]
    fn deadline_is_inclusive() {
        let (mut d, id) = one_window();
        set_mode(&mut d, id, VisibilityMode::Timed { t_show: 1000 }).unwrap();
        assert!(tick(&mut d, 999).unwrap().is_empty());
        let tr = tick(&mut d, 1000).unwrap();
        assert_eq!(
            tr,
            vec![Transition { window: id, from: WindowState::Exposed, to: WindowState::Invisible, deadline: 1000 }]
        );
        assert_eq!(d.window(id).unwrap().state, WindowState::Invisible);
        assert!(tick(&mut d, 5000).unwrap().is_empty());
    }

    #[test]
    fn expose_stamps_and_hides_again_after_the_period() {
        let (mut d, id) = one_window();
        d.window_mut(id).unwrap().state = WindowState::Invisible;
        set_mode(&mut d, id, VisibilityMode::Timed { t_show: 500 }).unwrap();
        assert_eq!(d.window(id).unwrap().exposure_started, None);
        tick(&mut d, 100).unwrap();
        expose(&mut d, id).unwrap();
        assert_eq!(d.window(id).unwrap().exposure_started, Some(100));
        assert!(tick(&mut d, 599).unwrap().is_empty());
        assert_eq!(tick(&mut d, 600).unwrap().len(), 1);
        assert_eq!(d.window(id).unwrap().state, WindowState::Invisible);
    }

    #[test]
    fn timed_icon_collapses_once_and_round_trips() {
        let (mut d, id) = one_window();
        set_mode(&mut d, id, VisibilityMode::TimedIcon { t_show: 200 }).unwrap();
        let tr = tick(&mut d, 1000).unwrap();
        assert_eq!(tr.len(), 1);
        assert_eq!(tr[0].to, WindowState::Icon);
        assert_eq!(tr[0].deadline, 200);
        let w = d.window(id).unwrap();
        assert_eq!(w.saved_rect, Some(Rect::new(10, 10, 100, 100)));
        assert_eq!(w.rect, d.icon_slot(0));
        assert!(tick(&mut d, 2000).unwrap().is_empty());

        expose(&mut d, id).unwrap();
        let w = d.window(id).unwrap();
        assert_eq!(w.rect, Rect::new(10, 10, 100, 100));
        assert_eq!(w.saved_rect, None);
        assert_eq!(w.exposure_started, Some(2000));
        d.check_invariants().unwrap();
    }

    #[test]
    fn expose_errors() {
        let (mut d, id) = one_window();
        assert_eq!(expose(&mut d, id), Err(Error::AlreadyExposed(id)));
        assert_eq!(expose(&mut d, WindowId(5)), Err(Error::NoSuchWindow(WindowId(5))));
        d.window_mut(id).unwrap().state = WindowState::HiddenForAction;
        assert!(matches!(expose(&mut d, id), Err(Error::CannotExpose { .. })));
    }

    #[test]
    fn clock_cannot_regress() {
        let (mut d, _) = one_window();
        tick(&mut d, 10).unwrap();
        assert_eq!(tick(&mut d, 9), Err(Error::ClockRegression { clock: 10, t: 9 }));
    }

    #[test]
    fn bad_period_is_rejected() {
        let (mut d, id) = one_window();
        assert_eq!(set_mode(&mut d, id, VisibilityMode::Timed { t_show: 0 }), Err(Error::BadPeriod(0)));
    }

    #[test]
    fn locked_windows_rise_above_and_stay_above() {
        let mut d = desk();
        let a = d.create_window(spec(Rect::new(0, 0, 100, 100))).unwrap();
        let b = d.create_window(spec(Rect::new(0, 0, 100, 100))).unwrap();
        set_mode(&mut d, a, VisibilityMode::Locked).unwrap();
        assert_eq!(d.z_order(), &[b, a]);
        d.raise(b).unwrap();
        assert_eq!(d.z_order(), &[b, a]);
        let c = d.create_window(spec(Rect::new(0, 0, 100, 100))).unwrap();
        assert_eq!(d.z_order(), &[b, c, a]);
        set_mode(&mut d, a, VisibilityMode::Normal).unwrap();
        assert_eq!(d.z_order(), &[b, c, a]);
        d.check_invariants().unwrap();
    }

    #[test]
    fn locking_an_invisible_window_shows_it() {
        let (mut d, id) = one_window();
        set_mode(&mut d, id, VisibilityMode::Timed { t_show: 5 }).unwrap();
        tick(&mut d, 5).unwrap();
        set_mode(&mut d, id, VisibilityMode::Locked).unwrap();
        assert!(d.window(id).unwrap().is_exposed());
        assert!(tick(&mut d, 10_000).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn split_ticks_compose(period in 1i64..2000, a in 0i64..4000, extra in 0i64..4000) {
            let b = a + extra;
            let (mut split, id) = one_window();
            set_mode(&mut split, id, VisibilityMode::TimedIcon { t_show: period }).unwrap();
            let mut whole = split.clone();
            let mut seen = tick(&mut split, a).unwrap();
            seen.extend(tick(&mut split, b).unwrap());
            let direct = tick(&mut whole, b).unwrap();
            prop_assert_eq!(seen, direct);
            prop_assert_eq!(split, whole);
        }
    }
}
