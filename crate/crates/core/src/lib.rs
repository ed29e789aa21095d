pub mod arith;
pub mod cli;
pub mod code;
pub mod cyclotomic;
pub mod diophantine;
pub mod error;
pub mod field;
pub mod jacobi;
pub mod linalg;
pub mod scanner;

pub use cyclotomic::CycInt;
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec, LogTable};
