//! Benchmark fixtures shared by the criterion targets in `benches/`.

use qtensor::{parse_presentation, Presentation};

/// The two-generator presentation used for hom-search timings, with the
/// conjugating word `(b a)^m`.
pub fn twist_spun_presentation(m: u32) -> Presentation {
    parse_presentation(&format!("gens a b\nrel b = a^((b a)^{m})\nrel b^(a^2) = b\n")).expect("fixture parses")
}
