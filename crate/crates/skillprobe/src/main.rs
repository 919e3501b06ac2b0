fn main() {
    std::process::exit(skillprobe::cli::run());
}
