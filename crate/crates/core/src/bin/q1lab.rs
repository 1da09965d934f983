fn main() {
    std::process::exit(q1lab::cli::main());
}
