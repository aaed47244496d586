fn main() -> std::process::ExitCode {
    cherednik_centre::cli::main()
}
