//! Coefficient fields: exact rationals, Q[t] and Q(t).

pub mod interp;
pub mod poly;
pub mod rat;
pub mod ratfunc;

pub use poly::RatPoly;
pub use rat::{ops, BigRat};
pub use ratfunc::RatFunc;
