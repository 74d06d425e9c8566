use burch_cas::cli;
use clap::Parser;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact computation of Burch-type ideal invariants and minimal graded free
/// resolutions over quotient rings, driven by a session file.
#[derive(Parser)]
#[command(name = "burch", version, about)]
struct Args {
    /// Session file (`-` reads stdin)
    session: PathBuf,
    /// Output format
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
    /// Override the coefficient prime of the session
    #[arg(long)]
    prime: Option<u64>,
    /// Override the seed of every fuzz command in the session
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = if args.session.as_os_str() == "-" {
        use std::io::Read;
        let mut buf = String::new();
        if std::io::stdin().read_to_string(&mut buf).is_err() {
            eprintln!("burch: failed to read stdin");
            return ExitCode::from(1);
        }
        buf
    } else {
        match std::fs::read_to_string(&args.session) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("burch: cannot read {}: {e}", args.session.display());
                return ExitCode::from(1);
            }
        }
    };
    let mut spec = match cli::parse_session(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("burch: {e}");
            return ExitCode::from(1);
        }
    };
    if let Some(p) = args.prime {
        spec.prime = p;
        if let Err(e) = spec.ring() {
            eprintln!("burch: {e}");
            return ExitCode::from(1);
        }
    }
    if let Some(seed) = args.seed {
        for c in &mut spec.commands {
            if let cli::Command::Fuzz { seed: s, .. } = c {
                *s = seed;
            }
        }
    }
    let name = args.session.display().to_string();
    let (exit, output) = cli::run(&spec, &name);
    match args.format.as_str() {
        "json" => println!(
            "{}",
            serde_json::to_string_pretty(&output).expect("serializable output")
        ),
        _ => print!("{}", cli::render_text(&output)),
    }
    ExitCode::from(exit as u8)
}
