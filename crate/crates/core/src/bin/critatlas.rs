fn main() -> std::process::ExitCode {
    critatlas::cli::main()
}
