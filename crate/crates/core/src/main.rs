fn main() {
    std::process::exit(hessenpave::cli::main_with_args(std::env::args_os()));
}
