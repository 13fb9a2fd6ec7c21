//! Constructive toolkit for linearly joined arrangements of linear spaces and
//! square-free monomial ideals with 2-linear resolution: order verification,
//! the D/Delta/P decomposition, Schmitt-Vogel triangle tableaux, closed-form
//! homological invariants, and an independent Betti-number oracle.

pub mod arrangement;
pub mod decomp;
pub mod exactlin;
pub mod invariants;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod tableau;

/// Exact scalar used everywhere: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

pub use arrangement::{Arrangement, Component};
pub use decomp::LJDecomposition;
pub use exactlin::{LinForm, LinearSpace};
pub use poly::Poly;
pub use tableau::Tableau;

#[cfg(test)]
pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
