//! Spinal quadrangulations of closed orientable surfaces.
//!
//! A spine graph `G` is thickened to a surface whose genus is the cycle rank
//! of `G`; its 2-fold interlacement `G[:]` embeds on that surface with every
//! face a quadrilateral. This crate builds those embeddings, verifies them
//! as surfaces without trusting the construction, and checks the homology,
//! genus, coloring and minimality statements that go with them.
//!
//! ```
//! use spinal_core::{complete_graph, default_rotations, quadrangulate, verify_surface};
//!
//! let k3 = complete_graph(3).unwrap();
//! let q = quadrangulate(&k3, &default_rotations(&k3)).unwrap();
//! let report = verify_surface(&q);
//! assert!(report.passed());
//! assert_eq!(report.hand(), Some(1));
//! ```

pub mod coloring;
pub mod constructors;
pub mod embed;
pub mod error;
pub mod graph;
pub mod homology;
pub mod interlacement;
pub mod surface;

pub use coloring::{
    chromatic_equality_check, chromatic_number_exact, face_coloring_from_sources, lift_coloring,
    parse_face_coloring, parse_vertex_coloring, verify_proper_faces, verify_proper_vertices,
    ChromaticEquality, FaceColoring, VertexColoring, DEFAULT_SOLVER_CAP,
};
pub use constructors::{
    complete_graph, complete_minus_clique, complete_minus_edge, eq6_bound, minimality_report,
    random_tree, spine_for, MinimalityCertificate, SpineRecipe,
};
pub use embed::{
    default_rotations, parse_quad, permute_rotations, quadrangulate, ParsedQuad, QuadEmbedding,
    QuadFace, QuadHeader, RotationSystem,
};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, Graph, VertexId, VertexLabel, VertexPartition};
pub use homology::{parse_complex, BettiVector, EulerPoincare, SimplicialComplex};
pub use interlacement::{interlace, Interlacement, TwinCopy, TwinVertex};
pub use surface::{
    check_lemma21, check_remark22, surface_betti, thickening_report, thickening_report_with,
    verify_surface,
    BoundaryBettiCheck, ComponentHandleCheck, ComponentReport, SurfaceReport, Thickening,
};
