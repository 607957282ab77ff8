use std::io::Write;

fn main() {
    let out = rtk::cli::run_args(std::env::args_os().skip(1), std::io::stdin().lock());
    // A closed pipe (e.g. `| head`) is not an error worth panicking over.
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
