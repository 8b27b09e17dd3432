fn main() -> std::process::ExitCode {
    gdm::cli::main()
}
