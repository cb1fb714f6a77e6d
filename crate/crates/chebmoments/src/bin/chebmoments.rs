fn main() {
    std::process::exit(chebmoments::cli::main_entry());
}
