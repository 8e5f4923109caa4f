use std::fs;
use std::net::TcpListener;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use panekit::bridge::{self, Session};
use panekit::trace;

#[derive(Parser)]
#[command(name = "wmsim", about = "Replay, verify and serve window-management traces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay a trace, writing snapshots.txt and events.txt into DIR.
    Replay {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Replay a trace and compare its snapshots with DIR/snapshots.txt.
    Verify {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        golden: PathBuf,
    },
    /// Serve the line-delimited bridge protocol on localhost.
    Serve {
        #[arg(long)]
        port: u16,
    },
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Replay { trace, out } => {
            let text = fs::read_to_string(&trace).with_context(|| trace.display().to_string())?;
            let output = trace::replay(&text).with_context(|| trace.display().to_string())?;
            fs::create_dir_all(&out).with_context(|| out.display().to_string())?;
            fs::write(out.join("snapshots.txt"), output.snapshots_text()).context("writing snapshots.txt")?;
            fs::write(out.join("events.txt"), output.events_text()).context("writing events.txt")?;
            println!("{}: {} snapshots, {} events", trace.display(), output.snapshots.len(), output.events.len());
            Ok(true)
        }
        Command::Verify { trace, golden } => {
            let text = fs::read_to_string(&trace).with_context(|| trace.display().to_string())?;
            let path = golden.join("snapshots.txt");
            let expected = fs::read_to_string(&path).with_context(|| path.display().to_string())?;
            let report = trace::verify(&text, &expected).with_context(|| trace.display().to_string())?;
            println!("{}: {report}", trace.display());
            Ok(report.passed())
        }
        Command::Serve { port } => {
            let listener = TcpListener::bind(("127.0.0.1", port)).context("bind")?;
            eprintln!("wmsim: listening on {}", listener.local_addr().context("local addr")?);
            bridge::serve(listener, Session::default()).context("serve")?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("wmsim: {e:#}");
            ExitCode::from(2)
        }
    }
}
