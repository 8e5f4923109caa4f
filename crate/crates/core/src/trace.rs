//! Line-delimited event traces, deterministic replay and golden
//! verification.
//!
//! A trace is UTF-8 text with one JSON object per line. Blank lines and
//! lines starting with `#` are ignored. Every record carries a logical time
//! `t` and a `kind`; the remaining keys depend on the kind:
//!
//! | kind           | keys                                                                |
//! |----------------|---------------------------------------------------------------------|
//! | `create`       | `min_w min_h max_w max_h x y w h anchor components`                 |
//! | `destroy`      | `id`                                                                |
//! | `pointer`      | `x y` (absolute)                                                    |
//! | `button`       | `action`: `both_down` or `both_up`                                  |
//! | `key`          | `combo`: `move`, `resize` or `escape`                               |
//! | `display`      | `w h`                                                               |
//! | `set_mode`     | `id mode` and `t_show` for `timed` / `timed_icon`                   |
//! | `expose`       | `id`                                                                |
//! | `resize`       | `id edge dx dy`                                                     |
//! | `unobscure`    | `target protected strategy`                                         |
//! | `begin_action` | `target protected`                                                  |
//! | `end_action`   | `target`                                                            |
//! | `tick`         | none                                                                |
//! | `snapshot`     | none                                                                |
//!
//! Records apply strictly in file order; records sharing a `t` are not
//! reordered. The desktop starts with an 800x600 display.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chord::{self, ChordPhase, InputEvent, StateChange};
use crate::desktop::{Anchor, Desktop, WindowComponent, WindowId, WindowSpec, WindowState};
use crate::error::Error;
use crate::geom::{DisplayBounds, Point, Rect, Size};
use crate::lasso::{self, BorderSelection};
use crate::limits::{self, Edge, LimitFeedback};
use crate::occlusion::{self, UnobscurePlan, UnobscureStrategy};
use crate::reflow::{self, ReflowReport};
use crate::visibility::{self, Transition, VisibilityMode};

pub const DEFAULT_DISPLAY: (i64, i64) = (800, 600);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRecord {
    pub name: String,
    pub w: i64,
    pub h: i64,
    pub required: bool,
    pub priority: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ButtonAction {
    BothDown,
    BothUp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeName {
    Normal,
    Timed,
    Locked,
    TimedIcon,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Record {
    Create {
        min_w: i64,
        min_h: i64,
        max_w: i64,
        max_h: i64,
        x: i64,
        y: i64,
        w: i64,
        h: i64,
        anchor: Anchor,
        components: Vec<ComponentRecord>,
    },
    Destroy {
        id: WindowId,
    },
    Pointer {
        x: i64,
        y: i64,
    },
    Button {
        action: ButtonAction,
    },
    Key {
        combo: String,
    },
    Display {
        w: i64,
        h: i64,
    },
    SetMode {
        id: WindowId,
        mode: ModeName,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        t_show: Option<i64>,
    },
    Expose {
        id: WindowId,
    },
    Resize {
        id: WindowId,
        edge: Edge,
        dx: i64,
        dy: i64,
    },
    Unobscure {
        target: WindowId,
        protected: WindowId,
        strategy: UnobscureStrategy,
    },
    BeginAction {
        target: WindowId,
        protected: WindowId,
    },
    EndAction {
        target: WindowId,
    },
    Tick {},
    Snapshot {},
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    pub t: i64,
    pub record: Record,
}

impl TraceRecord {
    pub fn new(t: i64, record: Record) -> Self {
        Self { t, record }
    }

    /// Parse one trace line. Returns `Ok(None)` for blank and comment lines.
    pub fn parse(line: &str) -> Result<Option<Self>, String> {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return Ok(None);
        }
        let mut value: Value = serde_json::from_str(trimmed).map_err(|e| e.to_string())?;
        let obj = value.as_object_mut().ok_or("record must be a JSON object")?;
        let t = obj.remove("t").ok_or("missing key `t`")?.as_i64().ok_or("`t` must be an integer")?;
        let record: Record = serde_json::from_value(value).map_err(|e| e.to_string())?;
        Ok(Some(Self { t, record }))
    }

    /// Serialize as a trace line, `t` first.
    pub fn to_line(&self) -> String {
        let mut out = serde_json::Map::new();
        out.insert("t".into(), self.t.into());
        if let Ok(Value::Object(fields)) = serde_json::to_value(&self.record) {
            out.extend(fields);
        }
        Value::Object(out).to_string()
    }
}

/// Records that end a replay.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TraceError {
    #[error("line {line}: parse error: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: clock regression from {clock} to {t}")]
    ClockRegression { line: usize, clock: i64, t: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutputEvent {
    Created { id: WindowId },
    LimitFeedback(LimitFeedback),
    BorderSelected(BorderSelection),
    VisibilityTransition(Transition),
    Reflow(ReflowReport),
    Plan(UnobscurePlan),
    Input { changes: Vec<StateChange> },
    Error { message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventRecord {
    pub line: usize,
    pub t: i64,
    #[serde(flatten)]
    pub event: OutputEvent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSnapshot {
    pub id: WindowId,
    pub rect: Rect,
    pub z: usize,
    pub state: WindowState,
    pub mode: VisibilityMode,
    pub components_visible: usize,
}

/// Canonical desktop state. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub line: usize,
    pub clock: i64,
    pub display: DisplayBounds,
    pub windows: Vec<WindowSnapshot>,
    pub input: ChordPhase,
}

impl Snapshot {
    pub fn capture(desktop: &Desktop, line: usize) -> Self {
        let windows = desktop
            .windows()
            .map(|w| WindowSnapshot {
                id: w.id,
                rect: w.rect,
                z: w.z,
                state: w.state,
                mode: w.mode,
                components_visible: reflow::components_visible(&w.components, w.home_rect().size(), desktop.chrome),
            })
            .collect();
        Self { line, clock: desktop.clock, display: desktop.display, windows, input: desktop.input.phase }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("snapshot serializes")
    }
}

/// Result of applying one record.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Applied {
    pub events: Vec<EventRecord>,
    pub snapshot: Option<Snapshot>,
}

/// Feeds trace records into a desktop one at a time.
#[derive(Debug, Clone)]
pub struct Replayer {
    desktop: Desktop,
    line: usize,
}

impl Default for Replayer {
    fn default() -> Self {
        let (w, h) = DEFAULT_DISPLAY;
        Self::new(Desktop::new(DisplayBounds::new(w, h).expect("default display")))
    }
}

impl Replayer {
    pub fn new(desktop: Desktop) -> Self {
        Self { desktop, line: 0 }
    }

    pub fn desktop(&self) -> &Desktop {
        &self.desktop
    }

    pub fn into_desktop(self) -> Desktop {
        self.desktop
    }

    /// Lines consumed so far.
    pub fn line(&self) -> usize {
        self.line
    }

    /// Parse and apply the next trace line.
    pub fn apply_line(&mut self, text: &str) -> Result<Applied, TraceError> {
        self.line += 1;
        let line = self.line;
        match TraceRecord::parse(text) {
            Ok(Some(rec)) => self.apply_at(line, &rec),
            Ok(None) => Ok(Applied::default()),
            Err(message) => Err(TraceError::Parse { line, message }),
        }
    }

    /// Apply a record as the next line.
    pub fn apply(&mut self, rec: &TraceRecord) -> Result<Applied, TraceError> {
        self.line += 1;
        self.apply_at(self.line, rec)
    }

    fn apply_at(&mut self, line: usize, rec: &TraceRecord) -> Result<Applied, TraceError> {
        let t = rec.t;
        let transitions = visibility::tick(&mut self.desktop, t).map_err(|_| TraceError::ClockRegression {
            line,
            clock: self.desktop.clock,
            t,
        })?;

        let mut out = Applied::default();
        let mut emit = |event| out.events.push(EventRecord { line, t, event });
        for tr in transitions {
            emit(OutputEvent::VisibilityTransition(tr));
        }
        let mut sink = Vec::new();
        match self.dispatch(&rec.record, &mut sink) {
            Ok(snapshot) => {
                for e in sink {
                    emit(e);
                }
                out.snapshot = snapshot.then(|| Snapshot::capture(&self.desktop, line));
            }
            Err(err) => {
                for e in sink {
                    emit(e);
                }
                emit(OutputEvent::Error { message: err.to_string() });
            }
        }
        Ok(out)
    }

    /// Returns whether a snapshot was requested.
    fn dispatch(&mut self, record: &Record, out: &mut Vec<OutputEvent>) -> Result<bool, Error> {
        let d = &mut self.desktop;
        match record {
            Record::Create { min_w, min_h, max_w, max_h, x, y, w, h, anchor, components } => {
                let id = d.create_window(WindowSpec {
                    rect: Rect::new(*x, *y, *w, *h),
                    min_size: Size::new(*min_w, *min_h),
                    max_size: Size::new(*max_w, *max_h),
                    components: components
                        .iter()
                        .map(|c| WindowComponent::new(c.name.clone(), c.w, c.h, c.required, c.priority))
                        .collect(),
                    anchor: *anchor,
                })?;
                out.push(OutputEvent::Created { id });
            }
            Record::Destroy { id } => d.destroy(*id)?,
            Record::Pointer { x, y } => self.pointer(Point::new(*x, *y), out)?,
            Record::Button { action } => {
                let event = match action {
                    ButtonAction::BothDown => match d.input.pointer {
                        Some(p) => InputEvent::BothButtonsDown(p),
                        None => return Ok(false),
                    },
                    ButtonAction::BothUp => InputEvent::BothButtonsUp,
                };
                let changes = chord::handle_chord_input(d, event);
                push_changes(changes, out);
            }
            Record::Key { combo } => {
                let changes = chord::handle_chord_input(d, InputEvent::Key(combo.clone()));
                push_changes(changes, out);
            }
            Record::Display { w, h } => {
                let report = reflow::reflow(d, DisplayBounds::new(*w, *h)?)?;
                out.push(OutputEvent::Reflow(report));
            }
            Record::SetMode { id, mode, t_show } => {
                let period = || t_show.ok_or(Error::BadPeriod(0));
                let mode = match mode {
                    ModeName::Normal => VisibilityMode::Normal,
                    ModeName::Locked => VisibilityMode::Locked,
                    ModeName::Timed => VisibilityMode::Timed { t_show: period()? },
                    ModeName::TimedIcon => VisibilityMode::TimedIcon { t_show: period()? },
                };
                visibility::set_mode(d, *id, mode)?;
            }
            Record::Expose { id } => visibility::expose(d, *id)?,
            Record::Resize { id, edge, dx, dy } => {
                let r = limits::resize_drag(d, *id, *edge, *dx, *dy)?;
                if let Some(fb) = r.feedback {
                    out.push(OutputEvent::LimitFeedback(fb));
                }
            }
            Record::Unobscure { target, protected, strategy } => {
                let plan = occlusion::plan_unobscure(d, *target, *protected, *strategy)?;
                out.push(OutputEvent::Plan(plan));
                occlusion::apply_plan(d, &plan)?;
            }
            Record::BeginAction { target, protected } => {
                let plan = occlusion::plan_unobscure(d, *target, *protected, UnobscureStrategy::Disappear)?;
                out.push(OutputEvent::Plan(plan));
                occlusion::apply_plan(d, &plan)?;
            }
            Record::EndAction { target } => occlusion::end_action(d, *target)?,
            Record::Tick {} => {}
            Record::Snapshot {} => return Ok(true),
        }
        Ok(false)
    }

    /// Pointer samples drive the active chord mode, or feed lasso detection
    /// when no mode is active. A lasso selection arms resize mode.
    fn pointer(&mut self, p: Point, out: &mut Vec<OutputEvent>) -> Result<(), Error> {
        let d = &mut self.desktop;
        if d.input.phase != ChordPhase::Idle {
            d.lasso.clear();
            if let Some(prev) = d.input.pointer {
                let changes =
                    chord::handle_chord_input(d, InputEvent::PointerMove { dx: p.x - prev.x, dy: p.y - prev.y });
                push_changes(changes, out);
            }
            d.input.pointer = Some(p);
            return Ok(());
        }
        d.input.pointer = Some(p);
        let t = d.clock;
        if let Some(sel) = lasso::push_sample(d, t, p)? {
            out.push(OutputEvent::BorderSelected(sel));
            let changes = chord::arm_resize(d, sel.window, sel.part);
            push_changes(changes, out);
        }
        Ok(())
    }
}

fn push_changes(changes: Vec<StateChange>, out: &mut Vec<OutputEvent>) {
    if changes.is_empty() {
        return;
    }
    let feedback: Vec<LimitFeedback> = changes
        .iter()
        .filter_map(|c| match c {
            StateChange::Resized { feedback: Some(fb), .. } => Some(fb.clone()),
            _ => None,
        })
        .collect();
    out.push(OutputEvent::Input { changes });
    out.extend(feedback.into_iter().map(OutputEvent::LimitFeedback));
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReplayOutput {
    pub snapshots: Vec<Snapshot>,
    pub events: Vec<EventRecord>,
}

impl ReplayOutput {
    pub fn snapshot_lines(&self) -> Vec<String> {
        self.snapshots.iter().map(Snapshot::to_line).collect()
    }

    pub fn event_lines(&self) -> Vec<String> {
        self.events.iter().map(|e| serde_json::to_string(e).expect("event serializes")).collect()
    }

    /// Contents of `snapshots.txt`.
    pub fn snapshots_text(&self) -> String {
        join_lines(&self.snapshot_lines())
    }

    /// Contents of `events.txt`.
    pub fn events_text(&self) -> String {
        join_lines(&self.event_lines())
    }
}

fn join_lines(lines: &[String]) -> String {
    lines.iter().map(|l| format!("{l}\n")).collect()
}

/// Replay a whole trace from the default starting desktop.
pub fn replay(trace: &str) -> Result<ReplayOutput, TraceError> {
    replay_with(Replayer::default(), trace).map(|(out, _)| out)
}

/// Replay a trace with a custom starting replayer; also returns the final
/// replayer state.
pub fn replay_with(mut replayer: Replayer, trace: &str) -> Result<(ReplayOutput, Replayer), TraceError> {
    let mut out = ReplayOutput::default();
    for text in trace.lines() {
        let applied = replayer.apply_line(text)?;
        out.events.extend(applied.events);
        out.snapshots.extend(applied.snapshot);
    }
    Ok((out, replayer))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Divergence {
    CountMismatch {
        expected: usize,
        actual: usize,
    },
    Snapshot {
        /// Zero-based snapshot index.
        index: usize,
        /// Trace line that produced the replayed snapshot.
        trace_line: usize,
        /// Line number within the golden file.
        golden_line: usize,
        expected: String,
        actual: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub compared: usize,
    pub divergence: Option<Divergence>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.divergence.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.divergence {
            None => write!(f, "ok: {} snapshots match", self.compared),
            Some(Divergence::CountMismatch { expected, actual }) => {
                write!(f, "FAIL: snapshot count mismatch: golden has {expected}, replay produced {actual}")
            }
            Some(Divergence::Snapshot {
                index,
                trace_line,
                golden_line,
                expected,
                actual,
            }) => write!(
                f,
                "FAIL: snapshot {index} (trace line {trace_line}, golden line {golden_line}) differs\n  golden: {expected}\n  replay: {actual}"
            ),
        }
    }
}

/// Replay `trace` and compare its snapshots byte-for-byte with `golden`
/// (the contents of a `snapshots.txt`).
pub fn verify(trace: &str, golden: &str) -> Result<VerifyReport, TraceError> {
    let out = replay(trace)?;
    let actual = out.snapshot_lines();
    let expected: Vec<(usize, &str)> =
        golden.lines().enumerate().filter(|(_, l)| !l.is_empty()).map(|(i, l)| (i + 1, l)).collect();
    if expected.len() != actual.len() {
        return Ok(VerifyReport {
            compared: 0,
            divergence: Some(Divergence::CountMismatch { expected: expected.len(), actual: actual.len() }),
        });
    }
    for (index, ((golden_line, exp), act)) in expected.iter().zip(&actual).enumerate() {
        if *exp != act {
            return Ok(VerifyReport {
                compared: index,
                divergence: Some(Divergence::Snapshot {
                    index,
                    trace_line: out.snapshots[index].line,
                    golden_line: *golden_line,
                    expected: exp.to_string(),
                    actual: act.clone(),
                }),
            });
        }
    }
    Ok(VerifyReport { compared: actual.len(), divergence: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    const CREATE: &str = r#"{"t":0,"kind":"create","min_w":44,"min_h":44,"max_w":400,"max_h":400,"x":10,"y":10,"w":100,"h":100,"anchor":"fixed","components":[{"name":"ok","w":40,"h":20,"required":true,"priority":1}]}"#;

    #[test]
    fn parse_skips_comments_and_blanks() {
        assert_eq!(TraceRecord::parse("   ").unwrap(), None);
        assert_eq!(TraceRecord::parse("# hello").unwrap(), None);
    }

    #[test]
    fn parse_rejects_unknown_kinds_and_keys() {
        assert!(TraceRecord::parse(r#"{"t":0,"kind":"teleport"}"#).is_err());
        assert!(TraceRecord::parse(r#"{"t":0,"kind":"tick","extra":1}"#).is_err());
        assert!(TraceRecord::parse(r#"{"kind":"tick"}"#).is_err());
        assert!(TraceRecord::parse(r#"{"t":1.5,"kind":"tick"}"#).is_err());
        assert!(TraceRecord::parse("[1,2]").is_err());
    }

    #[test]
    fn record_lines_round_trip() {
        let rec = TraceRecord::parse(CREATE).unwrap().unwrap();
        assert_eq!(TraceRecord::parse(&rec.to_line()).unwrap().unwrap(), rec);
        let rec = TraceRecord::new(5, Record::SetMode { id: WindowId(1), mode: ModeName::Timed, t_show: Some(10) });
        assert_eq!(rec.to_line(), r#"{"t":5,"kind":"set_mode","id":1,"mode":"timed","t_show":10}"#);
    }

    #[test]
    fn empty_trace_produces_nothing() {
        assert_eq!(replay("").unwrap(), ReplayOutput::default());
    }

    #[test]
    fn create_then_snapshot() {
        let out = replay(&format!("{CREATE}\n{{\"t\":0,\"kind\":\"snapshot\"}}\n")).unwrap();
        assert_eq!(out.snapshots.len(), 1);
        let s = &out.snapshots[0];
        assert_eq!(s.windows.len(), 1);
        assert_eq!(s.windows[0].z, 0);
        assert_eq!(s.line, 2);
        assert_eq!(
            s.to_line(),
            r#"{"line":2,"clock":0,"display":{"w":800,"h":600},"windows":[{"id":1,"rect":{"x":10,"y":10,"w":100,"h":100},"z":0,"state":"exposed","mode":{"kind":"normal"},"components_visible":1}],"input":{"phase":"idle"}}"#
        );
    }

    #[test]
    fn timed_scenario_hides_window() {
        let trace = format!(
            "{CREATE}\n{}\n{}\n{}\n",
            r#"{"t":0,"kind":"set_mode","id":1,"mode":"timed","t_show":1000}"#,
            r#"{"t":1000,"kind":"tick"}"#,
            r#"{"t":1000,"kind":"snapshot"}"#,
        );
        let out = replay(&trace).unwrap();
        let transitions: Vec<_> =
            out.events.iter().filter(|e| matches!(e.event, OutputEvent::VisibilityTransition(_))).collect();
        assert_eq!(transitions.len(), 1);
        assert_eq!(transitions[0].line, 3);
        assert_eq!(out.snapshots[0].windows[0].state, WindowState::Invisible);
    }

    #[test]
    fn records_at_the_same_t_apply_in_file_order() {
        let resize = r#"{"t":5,"kind":"resize","id":1,"edge":"right","dx":40,"dy":0}"#;
        let snap = r#"{"t":5,"kind":"snapshot"}"#;
        let before = replay(&format!("{CREATE}\n{snap}\n{resize}\n")).unwrap();
        let after = replay(&format!("{CREATE}\n{resize}\n{snap}\n")).unwrap();
        assert!(before.snapshots_text().contains(r#""w":100"#));
        assert!(after.snapshots_text().contains(r#""w":140"#));
    }

    #[test]
    fn module_errors_are_soft() {
        let trace = format!("{}\n{CREATE}\n{}\n", r#"{"t":0,"kind":"expose","id":7}"#, r#"{"t":0,"kind":"snapshot"}"#);
        let out = replay(&trace).unwrap();
        assert!(matches!(&out.events[0].event, OutputEvent::Error { message } if message.contains("#7")));
        assert_eq!(out.snapshots[0].windows.len(), 1);
    }

    #[test]
    fn hard_errors_carry_line_numbers() {
        let err = replay("{\"t\":5,\"kind\":\"tick\"}\n\n{\"t\":4,\"kind\":\"tick\"}\n").unwrap_err();
        assert_eq!(err, TraceError::ClockRegression { line: 3, clock: 5, t: 4 });
        let err = replay("{\"t\":5,\"kind\":\"tick\"}\nnot json\n").unwrap_err();
        assert!(matches!(err, TraceError::Parse { line: 2, .. }));
    }

    #[test]
    fn verify_reports_divergences() {
        let trace = format!("{CREATE}\n{}\n{}\n", r#"{"t":0,"kind":"snapshot"}"#, r#"{"t":3,"kind":"snapshot"}"#);
        let golden = replay(&trace).unwrap().snapshots_text();
        assert!(verify(&trace, &golden).unwrap().passed());

        let altered = golden.replacen("\"x\":10", "\"x\":11", 1);
        let report = verify(&trace, &altered).unwrap();
        assert!(matches!(
            report.divergence,
            Some(Divergence::Snapshot { index: 0, trace_line: 2, golden_line: 1, .. })
        ));

        let truncated: String = golden.lines().take(1).map(|l| format!("{l}\n")).collect();
        let report = verify(&trace, &truncated).unwrap();
        assert_eq!(report.divergence, Some(Divergence::CountMismatch { expected: 1, actual: 2 }));
    }
}
