//! Exact construction of the Eulerian polynomials of types A, B and D and of
//! the derivative polynomials of `tanh` and `sech`, together with Sturm-based
//! certification of their real-rootedness, zero interleaving and
//! compatibility.

pub mod cli;
pub mod derivpoly;
pub mod error;
pub mod eulerian;
pub mod poly;
pub mod rational;
pub mod report;
pub mod rootcert;
pub mod series;
mod zpoly;

pub use error::{Error, Result};
pub use poly::{MobiusMap, Poly};
pub use rational::Rational;
pub use report::{CheckEntry, Report};
