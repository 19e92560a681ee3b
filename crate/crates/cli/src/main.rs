use std::io::Write;

fn main() {
    let run = lambda_schur_cli::invoke(std::env::args_os().skip(1));
    std::io::stdout().write_all(run.stdout.as_bytes()).expect("write stdout");
    std::io::stderr().write_all(run.stderr.as_bytes()).expect("write stderr");
    std::process::exit(run.code);
}
