use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(volterra_radius::cli::run(std::env::args()) as u8)
}
