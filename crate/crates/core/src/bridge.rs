//! Newline-delimited bridge for interactive clients.
//!
//! Clients send trace records, one per line. After each record the server
//! answers with the record's output events (same encoding as `events.txt`)
//! followed by one `{"snapshot": ...}` line. Lines that cannot be applied
//! get a single `{"error": ...}` line and leave the desktop unchanged.
//!
//! One session thread owns the desktop. Connections are served
//! concurrently, but every record is applied whole before the next one
//! starts, so clients never interleave mid-record.

use std::io::{self, BufRead, BufReader, Write};
use std::net::{TcpListener, TcpStream};
use std::sync::mpsc;
use std::thread;

use serde_json::json;

use crate::trace::Replayer;

#[derive(Debug, Default)]
pub struct Session {
    replayer: Replayer,
}

impl Session {
    pub fn new(replayer: Replayer) -> Self {
        Self { replayer }
    }

    pub fn replayer(&self) -> &Replayer {
        &self.replayer
    }

    /// Apply one inbound line and return the outbound messages.
    pub fn handle_line(&mut self, line: &str) -> Vec<String> {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return Vec::new();
        }
        match self.replayer.apply_line(trimmed) {
            Ok(applied) => {
                let mut out: Vec<String> =
                    applied.events.iter().map(|e| serde_json::to_string(e).expect("event serializes")).collect();
                let snap = crate::trace::Snapshot::capture(self.replayer.desktop(), self.replayer.line());
                out.push(json!({ "snapshot": snap }).to_string());
                out
            }
            Err(err) => vec![json!({ "error": err.to_string() }).to_string()],
        }
    }
}

type Job = (String, mpsc::Sender<Vec<String>>);

/// Accept connections forever, feeding all of them into one session.
pub fn serve(listener: TcpListener, session: Session) -> io::Result<()> {
    let (jobs, inbox) = mpsc::channel::<Job>();
    thread::spawn(move || {
        let mut session = session;
        for (line, reply) in inbox {
            let _ = reply.send(session.handle_line(&line));
        }
    });
    for stream in listener.incoming() {
        let stream = stream?;
        let jobs = jobs.clone();
        thread::spawn(move || {
            if let Err(e) = handle_client(stream, jobs) {
                log_client_error(&e);
            }
        });
    }
    Ok(())
}

fn log_client_error(e: &io::Error) {
    if e.kind() != io::ErrorKind::BrokenPipe {
        eprintln!("wmsim: client error: {e}");
    }
}

fn handle_client(stream: TcpStream, jobs: mpsc::Sender<Job>) -> io::Result<()> {
    let mut writer = stream.try_clone()?;
    let reader = BufReader::new(stream);
    for line in reader.lines() {
        let line = line?;
        let (tx, rx) = mpsc::channel();
        if jobs.send((line, tx)).is_err() {
            break;
        }
        let Ok(messages) = rx.recv() else { break };
        for m in messages {
            writer.write_all(m.as_bytes())?;
            writer.write_all(b"\n")?;
        }
        writer.flush()?;
    }
    Ok(())
}
