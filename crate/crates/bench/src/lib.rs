//! Fixture loading shared by the benchmarks in `benches/`.

use amalgam_core::triangulation::parse_triangulation;
use amalgam_core::Triangulation;

pub fn fixture(name: &str) -> Triangulation {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    let text = std::fs::read_to_string(&path).expect("fixture file");
    parse_triangulation(&text).expect("fixture parses")
}
