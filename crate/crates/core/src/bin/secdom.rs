use std::io::Write;

fn main() {
    let result = secdom::cli::run(std::env::args_os());
    let out = result.output();
    if result.exit_code() == 2 {
        let _ = std::io::stderr().write_all(out.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    std::process::exit(result.exit_code());
}
