fn main() {
    std::process::exit(netcomm::cli::main_entry());
}
