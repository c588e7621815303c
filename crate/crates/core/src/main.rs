fn main() {
    std::process::exit(ckikit::cli::main_with_std());
}
