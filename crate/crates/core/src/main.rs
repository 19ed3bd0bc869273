use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = bcontact::cli::run_cli(std::env::args_os(), &mut io::stdin(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(status as u8)
}
