use std::process::ExitCode;

fn main() -> ExitCode {
    raagprobe::cli::run(std::env::args_os())
}
