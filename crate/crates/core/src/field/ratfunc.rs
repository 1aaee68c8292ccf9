//! Rational functions over Q in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::RatPoly;
use super::rat::BigRat;
use crate::error::{Error, Result};

/// `num / den` with `den` monic and `gcd(num, den) = 1`; zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: RatPoly,
    den: RatPoly,
}

impl RatFunc {
    /// Builds and normalizes `num / den`.
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: RatPoly, den: RatPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc = den.lead();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().expect("nonzero denominator");
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: RatPoly::zero(),
            den: RatPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(RatPoly::one())
    }

    pub fn from_poly(p: RatPoly) -> Self {
        RatFunc {
            num: p,
            den: RatPoly::one(),
        }
    }

    pub fn constant(c: BigRat) -> Self {
        RatFunc::from_poly(RatPoly::constant(c))
    }

    pub fn from_i64(c: i64) -> Self {
        RatFunc::constant(BigRat::from_i64(c))
    }

    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn inverse(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &BigRat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplies by a polynomial.
    pub fn mul_poly(&self, p: &RatPoly) -> RatFunc {
        if self.den.is_one() {
            return RatFunc::from_poly(&self.num * p);
        }
        let g = p.gcd(&self.den);
        if g.is_one() {
            return RatFunc {
                num: &self.num * p,
                den: self.den.clone(),
            };
        }
        let p = p.div_exact(&g).expect("gcd divides");
        let den = self.den.div_exact(&g).expect("gcd divides");
        RatFunc::normalize(&self.num * &p, den)
    }

    /// `f(t + j)`.
    pub fn shift(&self, j: i64) -> RatFunc {
        RatFunc {
            num: self.num.shift(j),
            den: self.den.shift(j),
        }
    }

    pub fn derivative(&self) -> RatFunc {
        if self.den.is_one() {
            return RatFunc::from_poly(self.num.derivative());
        }
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::normalize(n, &self.den * &self.den)
    }

    pub fn eval(&self, t: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(&self.num.eval(t) / &d)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.fmt_var(var);
        }
        format!("({})/({})", self.num.fmt_var(var), self.den.fmt_var(var))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("t"))
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return RatFunc::normalize(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let b = self.den.div_exact(&g).expect("gcd divides");
        let d = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        let den = &(&b * &d) * &g;
        if g.is_one() {
            // num is coprime to b*d already; only the leading coefficient matters.
            RatFunc::normalize_coprime(num, den)
        } else {
            RatFunc::normalize(num, den)
        }
    }
}

impl RatFunc {
    fn normalize_coprime(num: RatPoly, den: RatPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lc = den.lead();
        if lc.is_one() {
            return RatFunc { num, den };
        }
        let inv = lc.inv().expect("nonzero denominator");
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // (a/b)(c/d) with gcd(a,d) and gcd(c,b) cancelled first.
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        let num = &a * &c;
        let den = &b * &d;
        RatFunc::normalize_coprime(num, den)
    }
}

fn cancel(n: &RatPoly, d: &RatPoly) -> (RatPoly, RatPoly) {
    if d.is_one() || n.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = n.gcd(d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (
            n.div_exact(&g).expect("gcd divides"),
            d.div_exact(&g).expect("gcd divides"),
        )
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = Result<RatFunc>;
    fn div(self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.inverse()?)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}
