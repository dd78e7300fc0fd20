use clap::Parser;
use se_revise::cli::{run, Invocation};

fn main() {
    let inv = Invocation::parse();
    let code = run(
        &inv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
