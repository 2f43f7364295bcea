//! Exact-arithmetic decision engine for primitive elements of finite product
//! algebras k[x1,...,xn]/(f1(x1),...,fn(xn)) and for the common-source
//! question on commuting matrices: construct a matrix C with every input a
//! polynomial in C, or certify that no such C exists.

pub mod engine;
pub mod error;
pub mod generators;
pub mod matrix;
mod modp;
pub mod multipoly;
pub mod poly;
pub mod quotient;
pub mod rat;
pub mod subalgebra;

pub use engine::{analyze, AnalysisReport, AnalyzeOptions, Verdict};
pub use error::{Error, Result};
pub use matrix::QMatrix;
pub use multipoly::MultiPoly;
pub use poly::UniPoly;
pub use quotient::{GridSpec, LinearForm, QElem, QuotientAlgebra};
pub use rat::Rat;
