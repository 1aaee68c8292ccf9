//! Euclidean division, gcrd/lclm and gcld/lcrm in Q(n)⟨S, S^{-1}⟩.
//!
//! Division works directly on Laurent supports: cancelling the top term
//! never lowers the bottom exponent while the dividend spans at least as
//! much as the divisor, so the loop ends with `span(r) < span(b)`.

use super::recop::{RecOp, Unit};
use crate::error::{Error, Result};
use crate::field::ops;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `a = q·b + r`; common right divisors, left multiples.
    Right,
    /// `a = b·q + r`; common left divisors, right multiples.
    Left,
}

/// `a = q·b + r` with `span(r) < span(b)` (or `r = 0`).
pub fn divmod_right(a: &RecOp, b: &RecOp) -> Result<(RecOp, RecOp)> {
    divmod(Side::Right, a, b)
}

/// `a = b·q + r` with `span(r) < span(b)` (or `r = 0`).
pub fn divmod_left(a: &RecOp, b: &RecOp) -> Result<(RecOp, RecOp)> {
    divmod(Side::Left, a, b)
}

pub fn divmod(side: Side, a: &RecOp, b: &RecOp) -> Result<(RecOp, RecOp)> {
    let Some(bl) = b.leading() else {
        return Err(Error::ZeroDivisor);
    };
    let m = b.order();
    let mut q = RecOp::zero();
    let mut r = a.clone();
    while !r.is_zero() && r.order() >= m {
        let e = r.hi() - b.hi();
        let top = r.leading().expect("nonzero");
        let term = match side {
            Side::Right => {
                let c = (top / &bl.shift(e))?;
                RecOp::shift(e).scale_left(&c)
            }
            Side::Left => {
                let h = b.hi();
                let c = (&top.shift(-h) / &bl.shift(-h))?;
                RecOp::shift(e).scale_left(&c)
            }
        };
        let sub = combine(side, &term, b);
        let next = &r - &sub;
        if !next.is_zero() && next.hi() >= r.hi() {
            return Err(Error::Internal("division step did not cancel the top term".into()));
        }
        q = &q + &term;
        r = next;
    }
    Ok((q, r))
}

/// `q·x` on the right side, `x·q` on the left side.
fn combine(side: Side, q: &RecOp, x: &RecOp) -> RecOp {
    match side {
        Side::Right => q * x,
        Side::Left => x * q,
    }
}

fn canonical(side: Side, x: &RecOp) -> (RecOp, Unit) {
    match side {
        Side::Right => x.left_canonical_with_unit(),
        Side::Left => x.right_canonical_with_unit(),
    }
}

fn apply_unit(side: Side, x: &RecOp, u: &Unit) -> RecOp {
    match side {
        Side::Right => x.apply_left_unit(u),
        Side::Left => x.apply_right_unit(u),
    }
}

/// Output of the extended Euclidean algorithm.
///
/// Right side: `gcd = s·a + t·b` and `u·a + v·b = 0` with `u·a` the lclm.
/// Left side: `gcd = a·s + b·t` and `a·u + b·v = 0` with `a·u` the lcrm.
#[derive(Clone, Debug)]
pub struct Bezout {
    pub gcd: RecOp,
    pub s: RecOp,
    pub t: RecOp,
    pub u: RecOp,
    pub v: RecOp,
}

pub fn xgcd(side: Side, a: &RecOp, b: &RecOp) -> Result<Bezout> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroOperator);
    }
    let (mut r0, mut s0, mut t0) = (a.clone(), RecOp::one(), RecOp::zero());
    let (mut r1, mut s1, mut t1) = (b.clone(), RecOp::zero(), RecOp::one());
    while !r1.is_zero() {
        let (q, r) = divmod(side, &r0, &r1)?;
        let s2 = &s0 - &combine(side, &q, &s1);
        let t2 = &t0 - &combine(side, &q, &t1);
        let (r2, unit) = canonical(side, &r);
        let (s2, t2) = if r.is_zero() {
            (s2, t2)
        } else {
            (apply_unit(side, &s2, &unit), apply_unit(side, &t2, &unit))
        };
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let (gcd, unit) = canonical(side, &r0);
    Ok(Bezout {
        gcd,
        s: apply_unit(side, &s0, &unit),
        t: apply_unit(side, &t0, &unit),
        u: s1,
        v: t1,
    })
}

fn check_bezout(side: Side, a: &RecOp, b: &RecOp, z: &Bezout) -> bool {
    ops::paused(|| {
        let g = &combine(side, &z.s, a) + &combine(side, &z.t, b);
        let zero = &combine(side, &z.u, a) + &combine(side, &z.v, b);
        g == z.gcd && zero.is_zero()
    })
}

/// Greatest common right divisor, left-canonical.
pub fn gcrd(a: &RecOp, b: &RecOp) -> Result<RecOp> {
    let z = xgcd(Side::Right, a, b)?;
    debug_assert!(check_bezout(Side::Right, a, b, &z), "Bezout identity");
    Ok(z.gcd)
}

/// Greatest common left divisor, right-canonical.
pub fn gcld(a: &RecOp, b: &RecOp) -> Result<RecOp> {
    let z = xgcd(Side::Left, a, b)?;
    debug_assert!(check_bezout(Side::Left, a, b, &z), "Bezout identity");
    Ok(z.gcd)
}

/// `(L, Q1, Q2)` with `L = Q1·a = Q2·b` the least common left multiple,
/// left-canonical.
pub fn lclm(a: &RecOp, b: &RecOp) -> Result<(RecOp, RecOp, RecOp)> {
    multiple(Side::Right, a, b)
}

/// Least common right multiple, right-canonical.
pub fn lcrm(a: &RecOp, b: &RecOp) -> Result<RecOp> {
    Ok(lcrm_cofactors(a, b)?.0)
}

/// `(L, Q1, Q2)` with `L = a·Q1 = b·Q2`.
pub fn lcrm_cofactors(a: &RecOp, b: &RecOp) -> Result<(RecOp, RecOp, RecOp)> {
    multiple(Side::Left, a, b)
}

fn multiple(side: Side, a: &RecOp, b: &RecOp) -> Result<(RecOp, RecOp, RecOp)> {
    let z = xgcd(side, a, b)?;
    let l = combine(side, &z.u, a);
    if l.is_zero() {
        return Ok((RecOp::zero(), z.u, -&z.v));
    }
    let (l, unit) = canonical(side, &l);
    let q1 = apply_unit(side, &z.u, &unit);
    let q2 = -&apply_unit(side, &z.v, &unit);
    Ok((l, q1, q2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{RatFunc, RatPoly};
    use crate::ore::recop::tests::{arb_nonzero_recop, arb_recop};
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(RatPoly::from_i64s(n), RatPoly::from_i64s(d)).unwrap()
    }

    /// P = (n+1)^{-1}(S+1), Q = nS + n + 2.
    fn example_pair() -> (RecOp, RecOp) {
        let p = RecOp::new(0, vec![rf(&[1], &[1, 1]), rf(&[1], &[1, 1])]);
        let q = RecOp::from_i64_table(0, &[&[2, 1], &[0, 1]]);
        (p, q)
    }

    #[test]
    fn q_right_divides_p_squared_but_not_p() {
        let (p, q) = example_pair();
        let (_, r) = divmod_right(&(&p * &p), &q).unwrap();
        assert!(r.is_zero());
        assert!(gcrd(&p, &q).unwrap().is_one());
        let (_, r) = divmod_right(&p, &q).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn exact_divisions() {
        let a = RecOp::from_i64_table(0, &[&[-1], &[], &[1]]);
        let b = RecOp::from_i64_table(0, &[&[-1], &[1]]);
        let (q, r) = divmod_right(&a, &b).unwrap();
        assert_eq!(q, RecOp::from_i64_table(0, &[&[1], &[1]]));
        assert!(r.is_zero());
        let (q, r) = divmod_right(&a, &RecOp::one()).unwrap();
        assert_eq!((q, r), (a.clone(), RecOp::zero()));
        let (q, r) = divmod_left(&a, &RecOp::one()).unwrap();
        assert_eq!((q, r), (a, RecOp::zero()));
        assert_eq!(divmod_right(&b, &RecOp::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn lclm_of_shift_factors() {
        let a = RecOp::from_i64_table(0, &[&[-1], &[1]]);
        let b = RecOp::from_i64_table(0, &[&[1], &[1]]);
        let (l, q1, q2) = lclm(&a, &b).unwrap();
        assert_eq!(l.order(), 2);
        assert_eq!(&q1 * &a, l);
        assert_eq!(&q2 * &b, l);
        assert_eq!(l, RecOp::from_i64_table(0, &[&[-1], &[], &[1]]));
    }

    #[test]
    fn lclm_with_itself() {
        let (p, _) = example_pair();
        let (l, q1, q2) = lclm(&p, &p).unwrap();
        assert!(l.eq_up_to_left_unit(&p));
        assert!(q1.is_unit() && q2.is_unit());
    }

    #[test]
    fn gcld_with_one() {
        let (p, q) = example_pair();
        assert!(gcld(&p, &RecOp::one()).unwrap().is_one());
        assert!(gcld(&q, &RecOp::one()).unwrap().is_one());
        assert_eq!(gcrd(&RecOp::zero(), &RecOp::zero()), Err(Error::ZeroOperator));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn division_multiplies_back(a in arb_recop(), b in arb_nonzero_recop()) {
            let (q, r) = divmod_right(&a, &b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a.clone());
            prop_assert!(r.is_zero() || r.order() < b.order());
            let (q, r) = divmod_left(&a, &b).unwrap();
            prop_assert_eq!(&(&b * &q) + &r, a.clone());
            prop_assert!(r.is_zero() || r.order() < b.order());
        }

        #[test]
        fn bezout_and_multiples(a in arb_recop(), b in arb_nonzero_recop()) {
            for side in [Side::Right, Side::Left] {
                let z = xgcd(side, &a, &b).unwrap();
                prop_assert!(check_bezout(side, &a, &b, &z));
            }
            let g = gcrd(&a, &b).unwrap();
            let (l, q1, q2) = lclm(&a, &b).unwrap();
            prop_assert_eq!(&q1 * &a, l.clone());
            prop_assert_eq!(&q2 * &b, l.clone());
            prop_assert_eq!(l.order() + g.order(), a.order() + b.order());
            prop_assert!(divmod_right(&a, &g).unwrap().1.is_zero());
            prop_assert!(divmod_right(&b, &g).unwrap().1.is_zero());

            let h = gcld(&a, &b).unwrap();
            let (m, p1, p2) = lcrm_cofactors(&a, &b).unwrap();
            prop_assert_eq!(&a * &p1, m.clone());
            prop_assert_eq!(&b * &p2, m.clone());
            prop_assert_eq!(m.order() + h.order(), a.order() + b.order());
            prop_assert!(divmod_left(&a, &h).unwrap().1.is_zero());
        }

        #[test]
        fn gcld_of_common_left_factor(a in arb_nonzero_recop(), b in arb_nonzero_recop(), c in arb_recop()) {
            let lhs = gcld(&(&a * &b), &(&a * &c)).unwrap();
            let rhs = &a * &gcld(&b, &c).unwrap();
            prop_assert!(lhs.eq_up_to_right_unit(&rhs));
        }
    }
}
