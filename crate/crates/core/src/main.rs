fn main() {
    costress::cli::init_threads();
    let code = costress::cli::run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
