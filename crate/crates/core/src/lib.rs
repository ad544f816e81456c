//! Right conjugacy closed loops built from conjugacy classes of `GL(2,q)`.

pub mod error;
pub mod field;

pub use error::{Error, Result};
pub use field::{Elem, FiniteField, Quadratic};
pub mod matrix;

pub use matrix::Mat2;
pub mod loops;

pub use loops::{Loop, LoopTable, Perm, Subloop};
pub mod construct;

pub use construct::{Pair, RccLoop};
pub mod analysis;
pub use analysis::{analyze_loop, analyze_rcc, StructureReport};
pub mod iso;
