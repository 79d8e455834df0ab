//! Schur expansions of higher Lie characters through refined Thrall subsets of
//! standard Young tableaux, with an exact symmetric-function oracle.

pub mod domino;
pub mod error;
pub mod jdt;
pub mod rsk;
pub mod shapes;
pub mod symfunc;
pub mod tableau;
pub mod thrall;
pub mod vanleeuwen;
pub mod verification;

pub use error::{Error, Result};
pub use shapes::{Cell, Interval, Partition, SkewShape};
pub use tableau::{StandardTableau, Tableau};
