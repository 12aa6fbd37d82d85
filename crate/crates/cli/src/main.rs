fn main() {
    std::process::exit(mhsolve::main_with_args(std::env::args_os()));
}
