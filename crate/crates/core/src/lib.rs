//! Decidability of submonoid and rational subset membership for Artin
//! groups, decided from the defining graph and backed by certificates.
//!
//! * [`detector`] finds forbidden labeled induced subgraphs and builds the
//!   [`Verdict`](detector::Verdict).
//! * [`decompose`] builds the elementary decomposition of clean graphs.
//! * [`witness`] turns a forbidden pattern into explicit words generating
//!   `A(P4)` or `A(C4)` and verifies their commutations.
//! * [`dihedral`], [`raag`] and [`elementary`] solve the word problem in
//!   dihedral Artin groups, right-angled Artin groups and clean Artin groups.
//! * [`oracle`] is a bounded, sound membership search on top of those.

pub mod cli;
pub mod decompose;
pub mod detector;
pub mod dihedral;
pub mod elementary;
pub mod graph;
pub mod oracle;
pub mod raag;
pub mod witness;
pub mod word;

pub use decompose::{decompose, decompose_structural, find_central_vertex, DecomposeError, DecompositionTree};
pub use detector::{classify, find_forbidden, Decidability, Evidence, ForbiddenPattern, PatternKind, Verdict};
pub use dihedral::{dihedral_commutes, garside_nf, hn_coset, DihedralError, DihedralGroup, GarsideNF, Simple};
pub use elementary::{elementary_equal, normal_key, CleanContext, ElementaryError};
pub use graph::{ArtinGraph, GraphError, VertexId, VertexSet};
pub use oracle::{member_rational, member_submonoid, GroupContext, MembershipResult, OracleError, RationalExpr};
pub use raag::{raag_reduce, raag_retraction, RaagContext, RaagError};
pub use witness::{make_witness, verify_witness, Target, WitnessError, WitnessReport};
pub use word::{alternating_word, Letter, Word, WordError};
