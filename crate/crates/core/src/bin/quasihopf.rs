fn main() {
    let outcome = quasihopf::cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    std::process::exit(outcome.exit_code);
}
