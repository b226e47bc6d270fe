use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(linkgeom::cli::run())
}
