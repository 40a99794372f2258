//! Exact-arithmetic toolkit for rectilinear drawings of complete graphs.
//!
//! Counts crossings with integer predicates, peels convex hull layers and
//! colours them, classifies kite configurations of nested triangles,
//! machine-checks crossing-count lemmas on concrete drawings, searches for
//! low-crossing drawings, and computes crossing-number bounds.

pub mod bounds;
pub mod color;
pub mod error;
pub mod geometry;
pub mod hull;
pub mod io;
pub mod kite;
pub mod lemma;
pub mod render;
pub mod search;

pub use color::{
    are_concentric, color_by_hulls, color_with_white, count_non_concentric_crossings, label_crossing,
    tally_by_label, Arity, ColorLabel, ColoredDrawing, Colour, LabelHistogram, WhiteZone,
};
pub use error::{Error, Result};
pub use geometry::{
    count_crossings, crossing_count, is_general_position, orientation, responsibility, segments_cross, Crossing,
    CrossingSet, Drawing, Orientation, Point, COORD_BOUND,
};
pub use hull::{is_nested_triangle_drawing, peel_hulls, HullDecomposition};
pub use kite::{
    classify_configuration, containment_quadrilateral, extract_kite, free_zone_contains, ConfigClass, Kite,
    KiteConfiguration, KiteShape,
};
pub use bounds::{
    jensen_upper, k11_candidates, known_lower_bound, nu_star_bracket, ratio_lower_bound, recursive_lower_bound,
    subgraph_lower_bound, BoundsRow, BoundsTable, KNOWN_VALUES,
};
pub use io::{parse_bytes, parse_drawing, parse_file, write_drawing, DrawingFile};
pub use lemma::{run_suite, verify_counting, verify_drawing, verify_geometric_lemma, CheckReport, Outcome, RuleId, Suite, SuiteSummary, Witness};
pub use render::{render_colored, render_svg, RenderSpec, Rgb};
pub use search::{grid_exhaustive, improve_drawing, local_search, SearchParams, SearchResult, SeedTrace};
