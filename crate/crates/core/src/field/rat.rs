//! Exact rationals with a thread-local arithmetic-operation counter.
//!
//! Every multiplication or division of two [`BigRat`] values (and every
//! integer multiplication/exact division performed inside the polynomial
//! gcd) bumps a per-thread counter. Benchmarks read it to compare
//! algorithms independently of the machine they run on.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

thread_local! {
    static OPS: Cell<u64> = const { Cell::new(0) };
    static PAUSED: Cell<u32> = const { Cell::new(0) };
}

/// Operation counter for the current thread.
pub mod ops {
    use super::{OPS, PAUSED};

    #[inline]
    pub(crate) fn tick(n: u64) {
        PAUSED.with(|p| {
            if p.get() == 0 {
                OPS.with(|c| c.set(c.get().wrapping_add(n)));
            }
        });
    }

    /// Current value of this thread's counter.
    pub fn count() -> u64 {
        OPS.with(|c| c.get())
    }

    pub fn reset() {
        OPS.with(|c| c.set(0));
    }

    /// Runs `f` and returns its result with the number of counted
    /// operations it performed.
    pub fn measure<T>(f: impl FnOnce() -> T) -> (T, u64) {
        let before = count();
        let out = f();
        (out, count().wrapping_sub(before))
    }

    /// Runs `f` without counting (used by internal consistency checks).
    pub fn paused<T>(f: impl FnOnce() -> T) -> T {
        PAUSED.with(|p| p.set(p.get() + 1));
        let out = f();
        PAUSED.with(|p| p.set(p.get() - 1));
        out
    }
}

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BigRat(BigRational);

impl BigRat {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        BigRat(BigRational::new(num, den))
    }

    pub fn from_integer(n: BigInt) -> Self {
        BigRat(BigRational::from_integer(n))
    }

    pub fn from_i64(n: i64) -> Self {
        BigRat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        BigRat::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn zero() -> Self {
        BigRat(BigRational::zero())
    }

    pub fn one() -> Self {
        BigRat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> BigRat {
        BigRat(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<BigRat> {
        if self.is_zero() {
            return None;
        }
        ops::tick(1);
        Some(BigRat(self.0.recip()))
    }

    pub fn pow(&self, e: u32) -> BigRat {
        let mut acc = BigRat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        match self.0.to_f64() {
            Some(v) => v,
            None => f64::NAN,
        }
    }

    pub fn as_inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for BigRat {
    fn from(n: i64) -> Self {
        BigRat::from_i64(n)
    }
}

impl From<BigInt> for BigRat {
    fn from(n: BigInt) -> Self {
        BigRat::from_integer(n)
    }
}

impl From<BigRational> for BigRat {
    fn from(r: BigRational) -> Self {
        BigRat(r)
    }
}

impl FromStr for BigRat {
    type Err = String;

    /// Accepts `a` or `a/b` with integer `a`, `b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| format!("bad integer '{n}'"))?;
        let d: BigInt = d.parse().map_err(|_| format!("bad integer '{d}'"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(BigRat::new(n, d))
    }
}

impl fmt::Debug for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $count:expr) => {
        impl<'a, 'b> $tr<&'b BigRat> for &'a BigRat {
            type Output = BigRat;
            #[inline]
            fn $m(self, rhs: &'b BigRat) -> BigRat {
                if $count {
                    ops::tick(1);
                }
                BigRat((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<BigRat> for BigRat {
            type Output = BigRat;
            #[inline]
            fn $m(self, rhs: BigRat) -> BigRat {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b BigRat> for BigRat {
            type Output = BigRat;
            #[inline]
            fn $m(self, rhs: &'b BigRat) -> BigRat {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<BigRat> for &'a BigRat {
            type Output = BigRat;
            #[inline]
            fn $m(self, rhs: BigRat) -> BigRat {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, false);
forward_binop!(Sub, sub, false);
forward_binop!(Mul, mul, true);
forward_binop!(Div, div, true);

impl AddAssign<&BigRat> for BigRat {
    fn add_assign(&mut self, rhs: &BigRat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&BigRat> for BigRat {
    fn sub_assign(&mut self, rhs: &BigRat) {
        self.0 -= &rhs.0;
    }
}

impl Neg for BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-self.0)
    }
}

impl Neg for &BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-&self.0)
    }
}
