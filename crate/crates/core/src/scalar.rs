//! Numeric types a recurrence can act on: `f64`, exact [`BigRat`], and
//! elements of a real quadratic field.

use std::fmt;

use crate::field::BigRat;

pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn from_rat(r: &BigRat) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// `None` when dividing by zero.
    fn div(&self, o: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// Approximate absolute value, for growth diagnostics.
    fn magnitude(&self) -> f64;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_rat(r: &BigRat) -> Self {
        r.to_f64()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Option<Self> {
        (*o != 0.0).then(|| self / o)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for BigRat {
    fn zero() -> Self {
        BigRat::zero()
    }
    fn from_rat(r: &BigRat) -> Self {
        r.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Option<Self> {
        (!o.is_zero()).then(|| self / o)
    }
    fn is_zero(&self) -> bool {
        BigRat::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64()
    }
}

/// `a + b·√d` with rational `a`, `b` and a fixed non-square integer `d > 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Surd {
    pub a: BigRat,
    pub b: BigRat,
    pub d: i64,
}

impl Surd {
    pub fn new(a: BigRat, b: BigRat, d: i64) -> Self {
        Surd { a, b, d }
    }

    pub fn rational(a: BigRat, d: i64) -> Self {
        Surd::new(a, BigRat::zero(), d)
    }

    /// Nearest `f64`; opposite-signed parts are combined through the exact
    /// norm `a² − d·b²` to avoid cancellation.
    pub fn to_f64(&self) -> f64 {
        let r = (self.d as f64).sqrt();
        let (a, b) = (self.a.to_f64(), self.b.to_f64() * r);
        if self.a.is_zero() || self.b.is_zero() || (a > 0.0) == (b > 0.0) {
            return a + b;
        }
        let norm = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &BigRat::from_i64(self.d));
        norm.to_f64() / (a - b)
    }

    pub fn pow(&self, e: u32) -> Surd {
        let mut acc = Surd::rational(BigRat::one(), self.d);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn same_field(&self, o: &Surd) -> i64 {
        if self.b.is_zero() {
            o.d
        } else {
            debug_assert!(o.b.is_zero() || o.d == self.d, "mixed quadratic fields");
            self.d
        }
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
    }
}

impl Scalar for Surd {
    fn zero() -> Self {
        // Field tag is taken from the other operand on first mixing.
        Surd::rational(BigRat::zero(), 0)
    }
    fn from_rat(r: &BigRat) -> Self {
        Surd::rational(r.clone(), 0)
    }
    fn add(&self, o: &Self) -> Self {
        Surd::new(&self.a + &o.a, &self.b + &o.b, self.same_field(o))
    }
    fn sub(&self, o: &Self) -> Self {
        Surd::new(&self.a - &o.a, &self.b - &o.b, self.same_field(o))
    }
    fn mul(&self, o: &Self) -> Self {
        let d = self.same_field(o);
        let dd = BigRat::from_i64(d);
        Surd::new(
            &(&self.a * &o.a) + &(&(&self.b * &o.b) * &dd),
            &(&self.a * &o.b) + &(&self.b * &o.a),
            d,
        )
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if Scalar::is_zero(o) {
            return None;
        }
        let d = self.same_field(o);
        let dd = BigRat::from_i64(d);
        // (a + b√d)/(c + e√d) = (a + b√d)(c - e√d)/(c² - d e²)
        let norm = &(&o.a * &o.a) - &(&(&o.b * &o.b) * &dd);
        let conj = Surd::new(o.a.clone(), -&o.b, d);
        let p = self.mul(&conj);
        Some(Surd::new(&p.a / &norm, &p.b / &norm, d))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}
