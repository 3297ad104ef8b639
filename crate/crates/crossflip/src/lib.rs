//! Balanced triangulations of combinatorial manifolds and the cross-flip
//! moves connecting them.
//!
//! A triangulation is balanced when its vertices can be properly colored
//! with dim + 1 colors. Cross-flips exchange an induced piece of the
//! boundary of a cross-polytope for its complementary piece, preserving
//! both the topology and the coloring. This crate builds such complexes,
//! enumerates the flip catalog in each dimension, locates and applies
//! flips, searches for small triangulations, and verifies topological
//! invariants (homology over GF(2), surface classification, shellings,
//! pseudomanifold conditions).

pub mod balance;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod flips;
pub mod io;
pub mod iso;
pub mod search;
pub mod topology;

pub use balance::{color_signature, find_coloring, Coloring};
pub use complex::{
    cross_polytope_boundary, cross_polytope_on, face, standard_sphere, Complex, DualGraph, FVector,
    Face, Vertex,
};
pub use constructions::{
    build_bundle_double, connected_sum, handle_addition, orientable_bundle_16,
    stacked_cross_polytopal_sphere, suspension_tower, twisted_bundle_12, walkup_equality_gap,
    Assembly, BundleKind, Gluing,
};
pub use error::{Error, Result};
pub use flips::{
    apply_flip, find_embeddings, flip_catalog, full_scan, refresh_cache, reverse_index,
    template_for, Embedding, EmbeddingCache, FlipKind, FlipResult, FlipTemplate,
};
pub use io::{
    read_coloring, read_edges, read_face_list, read_facets, write_coloring, write_facets,
    write_flip_log,
};
pub use iso::{find_free_involution, is_isomorphic, relabel};
pub use search::{
    explore_flip_graph, is_irreducible, reduce, removable_candidates, score, FlipEvent, FlipGraph,
    FlipGraphNode, ReduceOptions, SearchState,
};
pub use topology::{
    all_vertex_links_isomorphic, betti_f2, classify_surface, dunce_relations,
    is_normal_pseudomanifold, singular_faces, verify_shelling, BettiProfile, SingularityReport,
    SurfaceType,
};
