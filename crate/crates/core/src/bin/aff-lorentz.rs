use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use aff_lorentz::cli::{color_enabled, paint, run};

fn main() -> ExitCode {
    let outcome = run(std::env::args_os());
    if !outcome.stdout.is_empty() {
        let mut out = std::io::stdout().lock();
        // a closed pipe is not worth a panic
        let _ = out.write_all(outcome.stdout.as_bytes());
    }
    if !outcome.stderr.is_empty() {
        let no_color = std::env::var("NO_COLOR").ok();
        let color = color_enabled(no_color.as_deref(), std::io::stderr().is_terminal());
        eprintln!("{}", paint(&outcome.stderr, color));
    }
    ExitCode::from(outcome.code as u8)
}
