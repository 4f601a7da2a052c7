fn main() {
    eprintln!("landen: not yet wired up");
    std::process::exit(2);
}
