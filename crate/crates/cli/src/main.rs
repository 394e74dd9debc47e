use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::Parser;
use sheafcones_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let code = catch_unwind(AssertUnwindSafe(|| {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        let code = run(cli.command, &mut out);
        let _ = out.flush();
        code
    }))
    .unwrap_or_else(|_| {
        eprintln!("internal error: unexpected panic");
        3
    });
    std::process::exit(code);
}
