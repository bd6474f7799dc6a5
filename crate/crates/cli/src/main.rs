use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = monomial_crystal_cli::run(std::env::args_os());
    if code == monomial_crystal_cli::EXIT_OK || code == monomial_crystal_cli::EXIT_FAIL {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
