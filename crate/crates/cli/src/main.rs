use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = match qcong_cli::parse_cli(std::env::args_os()) {
        Ok(config) => qcong_cli::run(&config, &mut io::stdout().lock(), &mut io::stderr().lock()),
        Err(e) => {
            if e.code == qcong_cli::EXIT_OK {
                print!("{}", e.message);
            } else {
                eprint!("{}", e.message);
                if !e.message.ends_with('\n') {
                    eprintln!();
                }
            }
            e.code
        }
    };
    ExitCode::from(code as u8)
}
