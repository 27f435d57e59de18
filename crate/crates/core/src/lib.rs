//! Exact computations around the Morita–Mumford–Miller classes of surface
//! bundles.
//!
//! * [`poly`]: integer polynomials over weighted variables.
//! * [`newton`]: the Newton polynomials `f_n` and their identities.
//! * [`symfun`]: independent symmetric-function and fiber-splitting oracles.
//! * [`charnum`]: MMM numbers as combinations of Pontryagin/Chern numbers.
//! * [`akfamily`]: invariants of Atiyah–Kodaira multi-fiberings.
//! * [`cli`]: the `mmmcalc` command line.

pub mod akfamily;
pub mod charnum;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod newton;
pub mod poly;
pub mod symfun;

pub use error::{Error, Result};
