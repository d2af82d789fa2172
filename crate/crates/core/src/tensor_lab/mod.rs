//! Explicit multilinear algebra over `V = k^n` for small `n`: bases of
//! exterior and symmetric powers, comultiplication, Schur modules and Pieri
//! maps, all with exact coefficients.

pub mod comult;
pub mod linalg;
pub mod pieri;
pub mod scalar;
pub mod schur;
pub mod space;

pub use comult::{coassociativity_holds, comult_ext};
pub use linalg::{bareiss_rank, rank, Echelon};
pub use pieri::{labeled_embedding, pieri_inclusion, sam_composite, verify_sam, Bracketing, PieriMode};
pub use scalar::Scalar;
pub use schur::{schur_module, semistandard_tableaux, SchurModule, Tableau};
pub use space::{Domain, Factor, Key, LinMap, TensorSpace, TensorVec, DEFAULT_BASIS_CAP};
