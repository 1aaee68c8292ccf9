//! Ore polynomial rings: differential operators over Q(x) and Laurent
//! recurrence operators over Q(n), with Euclidean division and common
//! divisors/multiples on both sides.

pub mod apply;
pub mod diffop;
pub mod euclid;
pub mod recop;

pub use apply::{diff_apply, diff_apply_poly, rec_apply, rec_apply_at};
pub use diffop::DiffOp;
pub use euclid::{divmod_left, divmod_right, gcld, gcrd, lclm, lcrm, lcrm_cofactors, xgcd, Bezout, Side};
pub use recop::{RecOp, Unit};
