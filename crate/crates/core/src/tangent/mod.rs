//! Tangent graphs `G_*`, `tG`, `τG` and their iterates, vertex sections,
//! differentials of homomorphisms and the cubical structure of `tG`.

mod build;
mod cubical;
mod edges;
mod maps;
mod verify;

pub use build::{
    build_tangent, iterate_tangent, orientation_classify, Flavor, Orientation, Tangent2Vertex, TangentGraph,
    TangentGraphJson,
};
pub use cubical::{build_cubical, lambda_line_graph, line_graph, CubicalComplex, CubicalJson, LambdaLine};
pub use edges::DirectedEdgeTable;
pub use maps::{
    differential_of_hom, section_count, vertex_sections, Differential, SectionMode, Sections, SECTION_LIMIT,
};
pub use verify::{
    fiber_decomposition, group_action_check, orientation_counts_check, verify_counting, verify_extremal,
    verify_second_order, ExtremalReport, FiberDecomposition,
};
