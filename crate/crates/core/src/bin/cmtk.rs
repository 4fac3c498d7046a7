fn main() {
    std::process::exit(cmtk::cli::main_with(std::env::args_os()));
}
