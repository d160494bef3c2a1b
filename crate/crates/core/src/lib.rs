//! Graded characters of extension algebras for the type A nilpotent cone and
//! the type B exotic nilpotent cone.
//!
//! The pipeline runs [`weyl`] (character tables and Molien series with
//! `deg t* = 2`) into [`springer`] (orbit posets with their dimension
//! function) into [`lsalgo`] (the Lusztig-Shoji factorization
//! `[P:L] = K^T D K` and the normalized Kostka polynomials). [`verify`] checks
//! the output against reciprocity, the Cartan determinant formula, positivity,
//! parity and, for type A, the charge statistic.

pub mod lsalgo;
pub mod render;
pub mod ring;
pub mod springer;
pub mod verify;
pub mod weyl;

pub use lsalgo::{kostka_normalize, ls_factorize, GradedMatrix, LsError, LsResult};
pub use ring::{LaurentPoly, RatFunc, RingError};
pub use springer::{build_poset, Family, Label, OrbitPoset, Partition, SpringerError, WeylType};
pub use render::Table;
pub use verify::{verify_all, Report, Suite};
pub use weyl::{char_table, fake_degree, graded_mult, pl_matrix, CharTable, WeylError};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Springer(#[from] SpringerError),
    #[error(transparent)]
    Ls(#[from] LsError),
    #[error(transparent)]
    Verify(#[from] verify::VerifyError),
}
