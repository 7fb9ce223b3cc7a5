use std::io::{self, Write};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = rees_cli::run(&argv, &mut out, &mut err);
    let _ = out.flush();
    let _ = err.flush();
    std::process::exit(code);
}
