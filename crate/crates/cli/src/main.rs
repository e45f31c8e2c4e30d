fn main() {
    std::process::exit(bottleneck_voronoi_cli::run(std::env::args_os()));
}
