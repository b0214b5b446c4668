use std::process::ExitCode;

fn main() -> ExitCode {
    eulercert::cli::main_with_args(std::env::args_os())
}
