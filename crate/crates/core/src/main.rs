use std::io::Write;

fn main() {
    let o = supernatural::cli::run(std::env::args_os());
    print!("{}", o.stdout);
    eprint!("{}", o.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(o.code);
}
