use std::io::{self, BufRead, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use euclid::session::{Config, Format, Session};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

/// Exact calculator for Euclidean numbers, numerosities, ordinals and
/// infinitesimal calculus.
///
/// With a command on the command line, runs it once. Otherwise reads one
/// command per line from standard input. Type `help` for the syntax.
#[derive(Debug, Parser)]
#[command(name = "euclid", version)]
struct Cli {
    /// Truncation order of series expansions.
    #[arg(long, default_value_t = euclid_core::calculus::DEFAULT_ORDER,
          value_parser = clap::value_parser!(i64).range(1..=64))]
    order: i64,
    /// Decimal digits for numeric decisions about real constants.
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(20..=1000))]
    precision: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// No prompt and no banner.
    #[arg(long)]
    quiet: bool,
    /// A command to run once, e.g. `num Q` or `deriv mean abs(x) at 0`.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    command: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = Config {
        order: cli.order,
        precision: cli.precision,
        format: match cli.format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Structured => Format::Structured,
        },
    };
    let mut session = Session::new(config);
    if !cli.command.is_empty() {
        let (text, code) = session.render_line(&cli.command.join(" "));
        if code == 0 {
            println!("{}", text);
        } else {
            eprintln!("{}", text);
        }
        return ExitCode::from(code as u8);
    }

    let stdin = io::stdin();
    let interactive = stdin.is_terminal() && !cli.quiet;
    let mut stdout = io::stdout();
    let mut worst = 0;
    let prompt = |out: &mut io::Stdout| {
        if interactive {
            let _ = write!(out, "> ");
            let _ = out.flush();
        }
    };
    prompt(&mut stdout);
    for line in stdin.lock().lines() {
        let Ok(line) = line else { break };
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            prompt(&mut stdout);
            continue;
        }
        if matches!(line, "quit" | "exit") {
            break;
        }
        let (text, code) = session.render_line(line);
        let _ = writeln!(stdout, "{}", text);
        worst = worst.max(code);
        prompt(&mut stdout);
    }
    ExitCode::from(worst as u8)
}
