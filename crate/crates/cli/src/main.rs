use std::io::Write;

fn main() {
    let outcome = homlie_cli::run(std::env::args_os());
    // Ignore broken pipes when the output is cut short by the reader.
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
