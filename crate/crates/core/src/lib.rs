//! Finite commutative semirings as explicit operation tables, with the
//! classification, construction, ideal-theoretic, localization, semimodule,
//! enumeration, and claim-checking machinery built on top.
//!
//! Everything is exact and deterministic: structures are index tables,
//! decisions come with replayable witnesses, and reports serialize to
//! canonical JSON so independent runs can be compared byte for byte.

pub mod census;
pub mod claims;
pub mod classify;
pub mod construct;
pub mod decide;
pub mod ideals;
pub mod localize;
pub mod semimodule;
pub mod error;
pub mod iso;
pub mod par;
pub mod semiring;

pub use census::{census_stats, enumerate_semirings, CensusRecord};
pub use claims::{run_claim, run_suite, ClaimId, ClaimReport, SuiteConfig, SuiteReport};
pub use classify::{classify, structure_flags, Classification, ElementProfile, StructureFlags};
pub use error::{Error, Result};
pub use par::Parallelism;
pub use semiring::{AxiomReport, FiniteSemiring, Violation};
