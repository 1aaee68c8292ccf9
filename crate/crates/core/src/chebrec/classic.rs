//! Lewanowicz, Paszkowski and Rebillard algorithms, returning exact
//! (un-normalized) operators.

use super::symbols::{delta, eval_at, i_power_closed_form, phi_polynomial, to_integral_form, x_k};
use crate::error::{Error, Result};
use crate::field::{RatFunc, RatPoly};
use crate::ore::{divmod_right, DiffOp, RecOp, Unit};

pub(crate) fn poly_coeffs(l: &DiffOp) -> Result<Vec<RatPoly>> {
    if l.is_zero() {
        return Err(Error::ZeroOperator);
    }
    l.poly_coeffs()
        .ok_or_else(|| Error::Precondition("operator coefficients must be polynomials".into()))
}

/// Horner evaluation of `φ(L)` as a left fraction `Q^{-1}P`; returns `(Q, P)`.
///
/// Each step computes `lclm(S^{-1} - S, P) = P̂P = Û(S^{-1} - S)` and sets
/// `Q := P̂Q`, `P := Û·2n + Q·p_i(X)`.
pub fn lewanowicz_core(l: &DiffOp) -> Result<(RecOp, RecOp)> {
    let p = poly_coeffs(l)?;
    let k = p.len() - 1;
    let delta = delta();
    let two_n = RecOp::n().scale_const(&2.into());
    let mut num = phi_polynomial(&p[k]);
    let mut den = RecOp::one();
    for i in (0..k).rev() {
        let phi_i = phi_polynomial(&p[i]);
        if num.is_zero() {
            den = RecOp::one();
            num = phi_i;
            continue;
        }
        let (u_hat, p_hat) = lclm_with_delta(&num, &delta)?;
        let (u_hat, p_hat) = polynomial_cofactors(u_hat, p_hat);
        den = &p_hat * &den;
        num = &(&u_hat * &two_n) + &(&den * &phi_i);
        // Rescale both sides by the same left unit to keep sizes down.
        if !num.is_zero() {
            let u = joint_unit(&num, &den);
            num = num.apply_left_unit(&u);
            den = den.apply_left_unit(&u);
        }
    }
    Ok((den, num))
}

/// `(Û, P̂)` with `P̂·P = Û·(S^{-1} - S)` and `P̂` of minimal order.
///
/// `A` is a left multiple of `S^{-1} - S = S^{-1}(1 - S²)` iff it kills
/// the sequences `1` and `(-1)^n`. With `v = P·1` and
/// `P·(-1)^n = (-1)^n w`, `P̂ = Σ_{i≤r} h_i S^i` must satisfy
/// `Σ h_i v(n+i) = 0` and `Σ (-1)^i h_i w(n+i) = 0`.
fn lclm_with_delta(p: &RecOp, delta: &RecOp) -> Result<(RecOp, RecOp)> {
    let mut v = RatFunc::zero();
    let mut w = RatFunc::zero();
    for (j, c) in p.terms() {
        v = &v + c;
        w = if j.rem_euclid(2) == 0 { &w + c } else { &w - c };
    }
    let row_v = |i: i64| v.shift(i);
    let row_w = |i: i64| {
        let x = w.shift(i);
        if i % 2 == 0 { x } else { -x }
    };
    let h: Vec<RatFunc> = if v.is_zero() && w.is_zero() {
        vec![RatFunc::one()]
    } else {
        let (a, b) = (row_v(0), row_v(1));
        let (c, d) = (row_w(0), row_w(1));
        if (&(&a * &d) - &(&b * &c)).is_zero() {
            // rank ≤ 1: a nonzero row (x, y) gives the kernel (-y, x)
            let (x, y) = if a.is_zero() && b.is_zero() { (c, d) } else { (a, b) };
            vec![-y, x]
        } else {
            let (e, f) = (row_v(2), row_w(2));
            vec![
                &(&b * &f) - &(&e * &d),
                &(&e * &c) - &(&a * &f),
                &(&a * &d) - &(&b * &c),
            ]
        }
    };
    let p_hat = RecOp::new(0, h);
    let (u_hat, rem) = divmod_right(&(&p_hat * p), delta)?;
    if !rem.is_zero() {
        return Err(Error::Internal("left multiple of S^-1 - S is not divisible".into()));
    }
    Ok((u_hat, p_hat))
}

/// Left unit making `a` and `b` jointly canonical: polynomial
/// coefficients without a common factor, content 1, `a` starting at `S^0`.
fn joint_unit(a: &RecOp, b: &RecOp) -> Unit {
    // b·S^gap keeps its coefficients and separates the supports, so one
    // left unit normalizes both.
    let gap = a.hi() - b.lo() + 1;
    let stacked = a + &b.shift_right(gap);
    stacked.left_canonical_with_unit().1
}

fn polynomial_cofactors(u_hat: RecOp, p_hat: RecOp) -> (RecOp, RecOp) {
    let unit = joint_unit(&p_hat, &u_hat);
    (u_hat.apply_left_unit(&unit), p_hat.apply_left_unit(&unit))
}

/// `I^k φ(L) = Σ_i I^{k-i} q_i(X)` with `L = Σ ∂^i q_i`.
pub fn paszkowski_core(l: &DiffOp) -> Result<RecOp> {
    poly_coeffs(l)?;
    let q: Vec<RatPoly> = to_integral_form(l)
        .into_iter()
        .map(|c| c.num().clone())
        .collect();
    let k = q.len() - 1;
    let mut r = phi_polynomial(&q[k]);
    for i in 1..=k {
        let qi = &q[k - i];
        if qi.is_zero() {
            continue;
        }
        r = &r + &(&i_power_closed_form(i) * &phi_polynomial(qi));
    }
    Ok(r)
}

/// `I^k φ(L) = Σ_i p_i(X_k) I^{k-i}`.
pub fn rebillard_core(l: &DiffOp) -> Result<RecOp> {
    let p = poly_coeffs(l)?;
    let k = p.len() - 1;
    let xk = x_k(k);
    let mut r = eval_at(&p[k], &xk);
    for i in 1..=k {
        let pi = &p[k - i];
        if pi.is_zero() {
            continue;
        }
        r = &r + &(&eval_at(pi, &xk) * &i_power_closed_form(i));
    }
    Ok(r)
}

/// `true` when `(1 - x²)^i` divides `p_i` for every `i`.
pub fn h_prime_syntactic(l: &DiffOp) -> bool {
    let w = RatPoly::from_i64s(&[1, 0, -1]);
    l.coeffs().iter().enumerate().all(|(i, c)| {
        if c.is_zero() {
            return true;
        }
        let Some(p) = c.is_poly().then(|| c.num()) else {
            return false;
        };
        p.divmod(&w.pow(i as u32)).map(|(_, r)| r.is_zero()).unwrap_or(false)
    })
}
