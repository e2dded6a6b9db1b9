use std::process::ExitCode;

fn main() -> ExitCode {
    akcores::cli::main_with_args(std::env::args_os())
}
