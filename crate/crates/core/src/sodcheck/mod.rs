//! Exceptional collections, semi-orthogonality and long exact sequences.

pub mod collection;
pub mod les;
pub mod odp;

pub use collection::{check_exceptional, check_orthogonal_to_f, ext_provider, CollectionSpec, ExtensionNote, SodObject, SodReport, Witness};
pub use les::{les_propagate, Annotation, Dim, LesComputation, LesResult, RankClaim, Variance};
pub use odp::{verify_odp_hypotheses, Check, LocalModel, OdpAudit, OdpBundle};
