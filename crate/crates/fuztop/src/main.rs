use std::process::ExitCode;

fn main() -> ExitCode {
    fuztop::cli::run()
}
