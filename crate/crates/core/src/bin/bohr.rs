fn main() {
    std::process::exit(bohr_radius::cli::run());
}
