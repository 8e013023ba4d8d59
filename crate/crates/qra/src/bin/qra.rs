use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(qra::cli::main())
}
