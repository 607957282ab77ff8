// Drive the command line front end in-process: build, validate, classify.

use rtk::cli::run_args;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let built = run_args(
        ["build", "--family", "su", "--n", "2", "--p", "1"],
        std::io::empty(),
    );
    println!(
        "build exit {}, {} bytes of triple JSON",
        built.code,
        built.stdout.len()
    );
    let validated = run_args(["validate", "-"], built.stdout.as_bytes());
    println!("validate exit {}", validated.code);
    let classified = run_args(["classify", "-"], built.stdout.as_bytes());
    println!("classify exit {}:\n{}", classified.code, classified.stdout);
    let bad = run_args(["classify", "-"], "{".as_bytes());
    println!("malformed input exit {}: {}", bad.code, bad.stderr.trim());
    if built.code != 0 || validated.code != 0 || classified.code != 0 || bad.code != 2 {
        return Err("unexpected exit codes".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli_in_process example");
}
