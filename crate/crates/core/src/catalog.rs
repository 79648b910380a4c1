//! Named seed graphs with their expected classification.
//!
//! Every entry is a nut graph; the suite recomputes the classification so a
//! transcription slip shows up as a failing test. Labels are 0-based.

use thiserror::Error;

use crate::constructions::{antiprism, fowler};
use crate::graph::Graph;
use crate::kernel::ClassTag;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: Graph,
    pub expected_class: ClassTag,
    pub expected_order: usize,
    pub expected_degree: Option<usize>,
    /// Frozen graph6 encoding for bit-exact regression.
    pub graph6: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown seed {0:?}")]
pub struct UnknownSeed(pub String);

pub const SEED_NAMES: [&str; 14] = [
    "nut7_a", "nut7_b", "nut7_c", "antiprism4", "frucht", "cubic20", "cubic22", "cubic26",
    "cubic28", "quartic12", "quartic15", "quartic17", "quartic19", "quartic21",
];

const NUT7_A_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 4), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6),
];

// The drawing this was read from omits (0, 2); without it the graph is
// nonsingular, with it this is the remaining 7-vertex nut graph.
const NUT7_B_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (4, 5), (5, 6),
];

const NUT7_C_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 3), (0, 4), (0, 6), (1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5),
    (5, 6),
];

const ANTIPRISM4_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (1, 6), (2, 3), (2, 6), (2, 7), (3, 4),
    (3, 7), (4, 5), (4, 7), (5, 6), (6, 7),
];

const FRUCHT_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 9), (0, 10), (1, 2), (1, 8), (2, 3), (2, 8), (3, 4), (3, 11), (4, 5), (4, 11),
    (5, 6), (5, 10), (6, 7), (6, 9), (7, 8), (7, 9), (10, 11),
];

const CUBIC20_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 9), (0, 10), (1, 2), (1, 11), (2, 3), (2, 12), (3, 4), (3, 13), (4, 5),
    (4, 14), (5, 6), (5, 15), (6, 7), (6, 16), (7, 8), (7, 17), (8, 9), (8, 18), (9, 19),
    (10, 12), (10, 14), (11, 17), (11, 19), (12, 16), (13, 15), (13, 17), (14, 18), (15, 19),
    (16, 18),
];

const CUBIC22_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 11), (3, 12), (3, 13), (4, 5), (4, 16),
    (5, 16), (6, 7), (6, 17), (7, 8), (7, 14), (8, 9), (8, 14), (9, 10), (9, 15), (10, 11),
    (10, 15), (11, 20), (12, 13), (12, 21), (13, 21), (14, 18), (15, 19), (16, 17), (17, 18),
    (18, 19), (19, 20), (20, 21),
];

const CUBIC26_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 7), (3, 8), (4, 9), (4, 10),
    (5, 6), (5, 11), (6, 12), (7, 13), (8, 14), (8, 15), (9, 15), (9, 16), (10, 11), (10, 17),
    (11, 18), (12, 13), (12, 18), (13, 14), (14, 19), (15, 20), (16, 21), (16, 22), (17, 22),
    (17, 23), (18, 19), (19, 20), (20, 24), (21, 24), (21, 25), (22, 23), (23, 25), (24, 25),
];

/// A cubic graph on 28 vertices published as a nut graph. It is nonsingular,
/// so the `cubic28` seed is built as `F(cubic22, 0)` instead.
pub const CUBIC28_AS_DRAWN_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 7), (3, 8), (4, 9), (4, 10),
    (5, 6), (5, 11), (6, 12), (7, 13), (8, 14), (8, 15), (9, 15), (9, 16), (10, 11), (10, 17),
    (11, 18), (12, 13), (12, 18), (13, 14), (14, 19), (15, 20), (16, 21), (16, 22), (17, 22),
    (17, 23), (18, 19), (19, 20), (20, 24), (21, 24), (21, 27), (22, 23), (23, 26), (24, 25),
    (25, 26), (25, 27), (26, 27),
];

const QUARTIC12_EDGES: &[(usize, usize)] = &[
    (0, 5), (0, 6), (0, 9), (0, 11), (1, 6), (1, 7), (1, 8), (1, 9), (2, 6), (2, 8), (2, 9),
    (2, 10), (3, 7), (3, 8), (3, 10), (3, 11), (4, 8), (4, 9), (4, 10), (4, 11), (5, 7),
    (5, 10), (5, 11), (6, 7),
];

const QUARTIC15_EDGES: &[(usize, usize)] = &[
    (0, 6), (0, 8), (0, 10), (0, 11), (1, 6), (1, 9), (1, 11), (1, 12), (2, 7), (2, 9),
    (2, 11), (2, 12), (3, 7), (3, 10), (3, 12), (3, 14), (4, 8), (4, 9), (4, 13), (4, 14),
    (5, 8), (5, 12), (5, 13), (5, 14), (6, 10), (6, 13), (7, 11), (7, 13), (8, 14), (9, 10),
];

const QUARTIC17_EDGES: &[(usize, usize)] = &[
    (0, 6), (0, 10), (0, 15), (0, 16), (1, 7), (1, 8), (1, 11), (1, 12), (2, 7), (2, 9),
    (2, 14), (2, 15), (3, 8), (3, 11), (3, 12), (3, 14), (4, 9), (4, 10), (4, 13), (4, 14),
    (5, 11), (5, 12), (5, 15), (5, 16), (6, 13), (6, 14), (6, 16), (7, 12), (7, 13), (8, 10),
    (8, 15), (9, 11), (9, 13), (10, 16),
];

const QUARTIC19_EDGES: &[(usize, usize)] = &[
    (0, 7), (0, 8), (0, 13), (0, 17), (1, 7), (1, 11), (1, 12), (1, 16), (2, 8), (2, 12),
    (2, 14), (2, 17), (3, 9), (3, 11), (3, 15), (3, 18), (4, 9), (4, 12), (4, 13), (4, 15),
    (5, 10), (5, 14), (5, 15), (5, 16), (6, 10), (6, 16), (6, 17), (6, 18), (7, 11), (7, 13),
    (8, 13), (8, 14), (9, 16), (9, 18), (10, 17), (10, 18), (11, 14), (12, 15),
];

const QUARTIC21_EDGES: &[(usize, usize)] = &[
    (0, 9), (0, 11), (0, 13), (0, 14), (1, 9), (1, 13), (1, 18), (1, 20), (2, 10), (2, 12),
    (2, 14), (2, 15), (3, 10), (3, 13), (3, 15), (3, 16), (4, 11), (4, 12), (4, 19), (4, 20),
    (5, 11), (5, 17), (5, 18), (5, 20), (6, 12), (6, 17), (6, 19), (6, 20), (7, 14), (7, 15),
    (7, 16), (7, 19), (8, 14), (8, 16), (8, 18), (8, 19), (9, 16), (9, 17), (10, 15), (10, 18),
    (11, 13), (12, 17),
];

fn entry(
    name: &'static str,
    description: &'static str,
    graph: Graph,
    degree: Option<usize>,
    graph6: &'static str,
) -> SeedEntry {
    SeedEntry {
        name,
        description,
        expected_order: graph.order(),
        graph,
        expected_class: ClassTag::Nut,
        expected_degree: degree,
        graph6,
    }
}

fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("catalog edge lists are simple")
}

pub fn seed(name: &str) -> Result<SeedEntry, UnknownSeed> {
    let e = match name {
        "nut7_a" => entry("nut7_a", "nut graph on 7 vertices, 8 edges", from_edges(7, NUT7_A_EDGES), None, "FhcGW"),
        "nut7_b" => entry("nut7_b", "nut graph on 7 vertices, 12 edges, one vertex of degree 6", from_edges(7, NUT7_B_EDGES), None, "FxmhG"),
        "nut7_c" => entry("nut7_c", "nut graph on 7 vertices, 12 edges", from_edges(7, NUT7_C_EDGES), None, "Flk{G"),
        "antiprism4" => entry("antiprism4", "antiprism A4, the smallest quartic nut graph", from_edges(8, ANTIPRISM4_EDGES), Some(4), "GlfJHs"),
        "frucht" => entry("frucht", "Frucht graph, a smallest cubic nut graph", from_edges(12, FRUCHT_EDGES), Some(3), "KhCGGD`_sGB@"),
        "cubic20" => entry("cubic20", "cubic nut graph on 20 vertices", from_edges(20, CUBIC20_EDGES), Some(3), "ShCGGC@_K?G?GAC?@@?GA?__@D?@@O?g_"),
        "cubic22" => entry("cubic22", "cubic nut graph on 22 vertices", from_edges(22, CUBIC22_EDGES), Some(3), "UhaI?C@?G?c@C?C?_K??oB??A?G?@G??c?C@??oG"),
        "cubic26" => entry("cubic26", "cubic nut graph on 26 vertices", from_edges(26, CUBIC26_EDGES), Some(3), "YsP@H_OA?O?`?_?O_CG@_?C??G??K??@C??P??A???W???`???K???D_"),
        "cubic28" => entry(
            "cubic28",
            "cubic nut graph on 28 vertices, F(cubic22, 0)",
            fowler(&from_edges(22, CUBIC22_EDGES), 0).expect("vertex 0 has degree 3"),
            Some(3),
            "[H?I?C@?G?c@C?C?_K??oB??A?G?@G??c?C@??oK???O???_???O??@`??@OG??W",
        ),
        "quartic12" => entry("quartic12", "quartic nut graph on 12 vertices", from_edges(12, QUARTIC12_EDGES), Some(4), "K?AFAlwy@wR_"),
        "quartic15" => entry("quartic15", "the quartic nut graph on 15 vertices", from_edges(15, QUARTIC15_EDGES), Some(4), r"N??E@aKYCc{G\?BoBc?"),
        "quartic17" => entry("quartic17", "quartic nut graph on 17 vertices", from_edges(17, QUARTIC17_EDGES), Some(4), "P??CB@OICPIaTOAsFODH?`a?"),
        "quartic19" => entry("quartic19", "quartic nut graph on 19 vertices", from_edges(19, QUARTIC19_EDGES), Some(4), "R???EA_E?KIGY?aWCc_wCPcAaG?co?"),
        "quartic21" => entry("quartic21", "quartic nut graph on 21 vertices", from_edges(21, QUARTIC21_EDGES), Some(4), "T??????o@_P_I_s@SK@aOC[?EQAHO?V?@M??"),
        other => return Err(UnknownSeed(other.to_string())),
    };
    Ok(e)
}

/// All seeds in catalog order.
pub fn all_seeds() -> Vec<SeedEntry> {
    SEED_NAMES.iter().map(|n| seed(n).expect("listed seed exists")).collect()
}

/// The antiprism A_n used where no drawing is needed (A5, A7).
pub(crate) fn antiprism_seed(n: usize) -> Graph {
    antiprism(n).expect("n >= 3")
}
