//! Operators acting on sequences (`S·u_n = u_{n+1}`) and on functions
//! (`∂·f = f'`).

use super::diffop::DiffOp;
use super::recop::RecOp;
use crate::error::{Error, Result};
use crate::field::{BigRat, RatFunc, RatPoly};
use crate::scalar::Scalar;

/// `u_k` with the Chebyshev symmetric extension `u_{-k} = u_k`.
pub fn sym_index<T>(u: &[T], k: i64) -> Option<&T> {
    u.get(k.unsigned_abs() as usize)
}

/// `(a·u)_n = Σ_j r_j(n) u_{n+j}` for every `n` in `ns`.
pub fn rec_apply<T: Scalar>(
    a: &RecOp,
    u: &[T],
    ns: impl IntoIterator<Item = i64>,
) -> Result<Vec<T>> {
    ns.into_iter().map(|n| rec_apply_at(a, u, n)).collect()
}

pub fn rec_apply_at<T: Scalar>(a: &RecOp, u: &[T], n: i64) -> Result<T> {
    let nn = BigRat::from_i64(n);
    let mut acc = T::zero();
    for (j, r) in a.terms() {
        let c = r.eval(&nn).map_err(|_| Error::Pole { index: n })?;
        let v = sym_index(u, n + j).ok_or_else(|| {
            Error::Precondition(format!("sequence too short for index {}", n + j))
        })?;
        acc = acc.add(&T::from_rat(&c).mul(v));
    }
    Ok(acc)
}

/// `L·f` for `f` given by its derivatives: `derivs(m, x) = f^{(m)}(x)`.
pub fn diff_apply<'a, F>(a: &'a DiffOp, derivs: F) -> impl Fn(f64) -> f64 + 'a
where
    F: Fn(usize, f64) -> f64 + 'a,
{
    move |x| {
        a.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| c.eval_f64(x) * derivs(i, x))
            .sum()
    }
}

/// `L·p` computed exactly for a polynomial `p`.
pub fn diff_apply_poly(a: &DiffOp, p: &RatPoly) -> RatFunc {
    let mut d = p.clone();
    let mut acc = RatFunc::zero();
    for c in a.coeffs() {
        if !c.is_zero() && !d.is_zero() {
            acc = &acc + &c.mul_poly(&d);
        }
        d = d.derivative();
    }
    acc
}
