//! Left fractions `Q^{-1}P` of recurrence operators.

use std::fmt;

use crate::error::{Error, Result};
use crate::ore::{gcld, lclm, RecOp};

/// The left fraction `den^{-1}·num`. Sums and products are not reduced
/// automatically; see [`RecFrac::reduce`].
#[derive(Clone, PartialEq, Eq)]
pub struct RecFrac {
    den: RecOp,
    num: RecOp,
}

impl RecFrac {
    pub fn new(den: RecOp, num: RecOp) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(RecFrac::zero());
        }
        Ok(RecFrac { den, num })
    }

    /// `1^{-1}·p`.
    pub fn from_op(p: RecOp) -> Self {
        if p.is_zero() {
            return RecFrac::zero();
        }
        RecFrac {
            den: RecOp::one(),
            num: p,
        }
    }

    pub fn zero() -> Self {
        RecFrac {
            den: RecOp::one(),
            num: RecOp::zero(),
        }
    }

    pub fn one() -> Self {
        RecFrac::from_op(RecOp::one())
    }

    pub fn den(&self) -> &RecOp {
        &self.den
    }

    pub fn num(&self) -> &RecOp {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `gcld(num, den) = 1`.
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.num.is_zero() {
            return Ok(self.den.is_unit());
        }
        Ok(gcld(&self.num, &self.den)?.is_one())
    }

    /// `Q̃₁P₁` and `Q̃₂P₂` over the common denominator `lclm(Q₁, Q₂)`.
    fn common(&self, other: &RecFrac) -> Result<(RecOp, RecOp, RecOp)> {
        let (l, c1, c2) = lclm(&self.den, &other.den)?;
        Ok((l, &c1 * &self.num, &c2 * &other.num))
    }

    pub fn equiv(&self, other: &RecFrac) -> Result<bool> {
        let (_, a, b) = self.common(other)?;
        Ok(a == b)
    }

    pub fn add(&self, other: &RecFrac) -> Result<RecFrac> {
        let (l, a, b) = self.common(other)?;
        RecFrac::new(l, &a + &b)
    }

    pub fn neg(&self) -> RecFrac {
        RecFrac {
            den: self.den.clone(),
            num: -&self.num,
        }
    }

    pub fn sub(&self, other: &RecFrac) -> Result<RecFrac> {
        self.add(&other.neg())
    }

    /// `(Q₁^{-1}P₁)(Q₂^{-1}P₂) = (P̂₁Q₁)^{-1}(Q̂₂P₂)` with
    /// `lclm(Q₂, P₁) = P̂₁P₁ = Q̂₂Q₂`.
    pub fn mul(&self, other: &RecFrac) -> Result<RecFrac> {
        if self.num.is_zero() || other.num.is_zero() {
            return Ok(RecFrac::zero());
        }
        let (_, q2_hat, p1_hat) = lclm(&other.den, &self.num)?;
        RecFrac::new(&p1_hat * &self.den, &q2_hat * &other.num)
    }

    pub fn inv(&self) -> Result<RecFrac> {
        if self.num.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(RecFrac {
            den: self.num.clone(),
            num: self.den.clone(),
        })
    }

    /// Equivalent irreducible fraction, scaled so that the numerator is
    /// normalized.
    pub fn reduce(&self) -> Result<RecFrac> {
        if self.num.is_zero() {
            return Ok(RecFrac::zero());
        }
        let g = gcld(&self.num, &self.den)?;
        let (p, q) = if g.is_one() {
            (self.num.clone(), self.den.clone())
        } else {
            let (p, rp) = crate::ore::divmod_left(&self.num, &g)?;
            let (q, rq) = crate::ore::divmod_left(&self.den, &g)?;
            if !rp.is_zero() || !rq.is_zero() {
                return Err(Error::Internal("gcld does not divide".into()));
            }
            (p, q)
        };
        let (p, u) = p.normalized_with_unit();
        Ok(RecFrac {
            den: q.apply_left_unit(&u),
            num: p,
        })
    }
}

impl fmt::Debug for RecFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^-1 ({})", self.den, self.num)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{RatFunc, RatPoly};
    use crate::ore::recop::tests::arb_nonzero_recop;
    use proptest::prelude::*;

    fn x_op() -> RecOp {
        RecOp::new(
            -1,
            vec![RatFunc::constant(crate::field::BigRat::frac(1, 2)), RatFunc::zero(), RatFunc::constant(crate::field::BigRat::frac(1, 2))],
        )
    }

    fn d_frac() -> RecFrac {
        let den = &RecOp::shift(-1) - &RecOp::shift(1);
        RecFrac::new(den, RecOp::n().scale_const(&2.into())).unwrap()
    }

    fn i_op() -> RecOp {
        let inv2n = RatFunc::new(RatPoly::one(), RatPoly::from_i64s(&[0, 2])).unwrap();
        (&RecOp::shift(-1) - &RecOp::shift(1)).scale_left(&inv2n)
    }

    fn arb_frac() -> impl Strategy<Value = RecFrac> {
        (arb_nonzero_recop(), arb_nonzero_recop()).prop_map(|(q, p)| RecFrac::new(q, p).unwrap())
    }

    #[test]
    fn d_and_i_are_inverse() {
        let d = d_frac();
        let i = RecFrac::from_op(i_op());
        assert!(d.equiv(&RecFrac::new(i_op(), RecOp::one()).unwrap()).unwrap());
        assert!(d.mul(&i).unwrap().equiv(&RecFrac::one()).unwrap());
        assert!(d.inv().unwrap().equiv(&i).unwrap());
    }

    #[test]
    fn shifted_derivative() {
        // D - 1 = (S^{-1} - S)^{-1} (2n - (S^{-1} - S))
        let delta = &RecOp::shift(-1) - &RecOp::shift(1);
        let expect = RecFrac::new(
            delta.clone(),
            &RecOp::n().scale_const(&2.into()) - &delta,
        )
        .unwrap();
        let got = d_frac().sub(&RecFrac::one()).unwrap();
        assert!(got.equiv(&expect).unwrap());
    }

    #[test]
    fn commutation_of_x_and_d() {
        let x = RecFrac::from_op(x_op());
        let d = d_frac();
        let lhs = x.mul(&d).unwrap().add(&RecFrac::one()).unwrap();
        let rhs = d.mul(&x).unwrap();
        assert!(lhs.equiv(&rhs).unwrap());
    }

    #[test]
    fn zero_conventions() {
        let z = RecFrac::zero();
        assert!(z.den().is_one() && z.num().is_zero());
        assert!(RecFrac::new(RecOp::zero(), RecOp::one()).is_err());
        assert!(z.inv().is_err());
        assert!(d_frac().mul(&z).unwrap().is_zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn equivalence_relation(a in arb_frac(), r in arb_nonzero_recop()) {
            prop_assert!(a.equiv(&a).unwrap());
            let b = RecFrac::new(&r * a.den(), &r * a.num()).unwrap();
            prop_assert!(a.equiv(&b).unwrap());
            prop_assert!(b.equiv(&a).unwrap());
            let c = b.reduce().unwrap();
            prop_assert!(a.equiv(&c).unwrap() && b.equiv(&c).unwrap());
        }

        #[test]
        fn field_operations(a in arb_frac(), b in arb_frac()) {
            prop_assert!(a.add(&RecFrac::zero()).unwrap().equiv(&a).unwrap());
            prop_assert!(a.sub(&a).unwrap().is_zero());
            prop_assert!(a.mul(&RecFrac::one()).unwrap().equiv(&a).unwrap());
            prop_assert!(a.mul(&a.inv().unwrap()).unwrap().equiv(&RecFrac::one()).unwrap());
            prop_assert!(a.inv().unwrap().inv().unwrap().equiv(&a).unwrap());
            let ab = a.add(&b).unwrap();
            prop_assert!(ab.equiv(&b.add(&a).unwrap()).unwrap());
        }

        #[test]
        fn associativity_and_distributivity(a in arb_frac(), b in arb_frac(), c in arb_frac()) {
            let l = a.mul(&b).unwrap().mul(&c).unwrap();
            let r = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert!(l.equiv(&r).unwrap());
            let l = a.mul(&b.add(&c).unwrap()).unwrap();
            let r = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert!(l.equiv(&r).unwrap());
        }

        #[test]
        fn reduction_is_irreducible(a in arb_frac(), g in arb_nonzero_recop()) {
            let big = RecFrac::new(&g * a.den(), &g * a.num()).unwrap();
            let r = big.reduce().unwrap();
            prop_assert!(r.is_irreducible().unwrap());
            let r2 = a.reduce().unwrap();
            prop_assert!(r.num().eq_up_to_left_unit(r2.num()));
            prop_assert_eq!(r.reduce().unwrap(), r.clone());
        }

        #[test]
        fn polynomial_times_irreducible_stays_irreducible(
            p in arb_nonzero_recop(), b in arb_frac()
        ) {
            let b = b.reduce().unwrap();
            let prod = RecFrac::from_op(p).mul(&b).unwrap();
            prop_assert!(prod.is_irreducible().unwrap());
        }
    }
}
