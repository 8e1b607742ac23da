use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = spk_core::cli::run(std::env::args_os());
    if code == 1 {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(code as u8)
}
