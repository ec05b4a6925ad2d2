//! Exact computations over F2 with the bordered algebras B(n,k), B!(n,k) and the
//! DD and DA bimodules of a singular crossing.

pub mod algebra;
pub mod bimodule;
pub mod f2;
pub mod paper_data;
pub mod report;

pub use f2::F2Sum;
pub use report::{Failure, Report};
