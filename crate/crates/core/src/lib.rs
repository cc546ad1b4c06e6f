//! Chordality and perfection of plane near triangulations.
//!
//! Inputs are combinatorial embeddings ([`PlaneGraph`]) that validate to a
//! [`NearTriangulation`]. The graph is split along external chords and
//! separating triangles ([`decompose`]); the leaves are then judged by local
//! neighborhood structure: a leaf is non-chordal exactly when some internal
//! vertex's link is a hole, and for leaves without induced `W5`, perfection
//! comes down to odd wheels and three even wheels around a common face.
//!
//! Every negative verdict carries a [`Certificate`] that [`verify_certificate`]
//! re-checks with plain adjacency queries. The [`oracle`] module provides
//! exhaustive induced-cycle search as ground truth, and [`campaign`] runs the
//! two against each other on generated instances.

pub mod campaign;
pub mod certificate;
pub mod decide;
pub mod generate;
pub mod instance;
pub mod oracle;
pub mod plane;
pub mod triangulation;

pub use certificate::{Certificate, OddHoleCertificate, WDeltaCertificate, WheelCertificate};
pub use decide::{
    check_lemma1, find_odd_wheel, find_w5, find_w_delta, is_chordal, is_perfect, is_perfect_w5free,
    link_of, shared_faces, ChordalVerdict, DecideError, PerfectVerdict, PerfectWitness,
};
pub use oracle::{
    find_chordless_cycle, find_odd_hole, is_perfect_oracle, verify_certificate, CertificateFlaw,
    HoleSearchReport, OracleError, DEFAULT_BUDGET,
};
pub use plane::{Face, FaceKind, FaceStats, PlaneError, PlaneGraph, RotationSystem, SimpleGraph, VertexId};
pub use triangulation::{
    classify_leaf, decompose, face_stats, find_external_chords, find_separating_triangles, split_on, validate,
    DecompositionTree, LeafClass, NearTriangulation, Separator, TriangulationError,
};
