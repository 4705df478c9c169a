use std::io;

fn main() {
    let code = metaplectic_gg::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
