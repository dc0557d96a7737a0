fn main() {
    std::process::exit(coarse_geom::cli::run(std::env::args_os()));
}
