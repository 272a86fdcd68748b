pub mod canon;
pub mod cli;
pub mod coeff;
pub mod dual;
pub mod enumerate;
pub mod error;
pub mod fg;
pub mod graph;
pub mod hopf;
pub mod lincomb;
pub mod qp;
pub mod realization;
pub mod sg;
pub mod verify;

pub use coeff::{Coefficient, QParam, Rational};
pub use error::{Error, Result};
pub use graph::{FeynmanGraph, Partition, PartialInjection, SimpleDigraph};
pub use lincomb::LinComb;
