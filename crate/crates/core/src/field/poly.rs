//! Dense univariate polynomials over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{ops, BigRat};
use crate::error::{Error, Result};

/// Dense polynomial with rational coefficients, `coeffs[i]` the coefficient
/// of the `i`-th power. The zero polynomial has no coefficients; otherwise
/// the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(BigRat::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| BigRat::from_i64(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        RatPoly::new(coeffs.iter().cloned().map(BigRat::from_integer).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        RatPoly::new(vec![c])
    }

    /// The monomial `c * t^e`.
    pub fn monomial(c: BigRat, e: usize) -> Self {
        let mut v = vec![BigRat::zero(); e + 1];
        v[e] = c;
        RatPoly::new(v)
    }

    /// The variable itself.
    pub fn var() -> Self {
        RatPoly::monomial(BigRat::one(), 1)
    }

    /// `t + a`.
    pub fn linear(a: i64) -> Self {
        RatPoly::from_i64s(&[a, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn lead(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn scale(&self, c: &BigRat) -> RatPoly {
        if c.is_zero() {
            return RatPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> RatPoly {
        let mut acc = RatPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `t` (Horner).
    pub fn eval(&self, t: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    pub fn eval_i64(&self, t: i64) -> BigRat {
        self.eval(&BigRat::from_i64(t))
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64())
    }

    /// `p(t + j)`.
    pub fn shift(&self, j: i64) -> RatPoly {
        if j == 0 || self.is_constant() {
            return self.clone();
        }
        // Taylor shift by repeated synthetic division, O(deg^2).
        let jr = BigRat::from_i64(j);
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for k in (i..n - 1).rev() {
                let t = &c[k + 1] * &jr;
                c[k] += &t;
            }
        }
        RatPoly::new(c)
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRat::from_i64(i as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn divmod(&self, b: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let db = b.degree().ok_or(Error::ZeroDivisor)?;
        let Some(da) = self.degree() else {
            return Ok((RatPoly::zero(), RatPoly::zero()));
        };
        if da < db {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let inv_lead = b.lead().inv().ok_or(Error::ZeroDivisor)?;
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRat::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = &r[i + db] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (k, bk) in b.coeffs.iter().enumerate() {
                let t = &c * bk;
                r[i + k] -= &t;
            }
            q[i] = c;
        }
        r.truncate(db);
        Ok((RatPoly::new(q), RatPoly::new(r)))
    }

    /// Exact quotient; errors if `b` does not divide `self`.
    pub fn div_exact(&self, b: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.divmod(b)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> RatPoly {
        match self.lead().inv() {
            Some(inv) => self.scale(&inv),
            None => RatPoly::zero(),
        }
    }

    /// Positive rational `c` with `self = c * p`, `p` having coprime integer
    /// coefficients and positive leading coefficient. Zero maps to 1.
    pub fn content(&self) -> BigRat {
        if self.is_zero() {
            return BigRat::one();
        }
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in &self.coeffs {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        let c = BigRat::new(g, l);
        if self.lead().is_negative() {
            -c
        } else {
            c
        }
    }

    /// `self / content(self)`: integer coefficients, gcd 1, positive lead.
    pub fn primitive_part(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let c = self.content();
        match c.inv() {
            Some(inv) => self.scale(&inv),
            None => RatPoly::zero(),
        }
    }

    /// Integer coefficients when every coefficient is an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.numer().clone()))
            .collect()
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    ///
    /// Primitive-part Euclid over Z: each pseudo-remainder has its integer
    /// content removed before the next step.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return RatPoly::one();
        }
        let mut a = to_primitive_ints(self);
        let mut b = to_primitive_ints(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            if b.len() == 1 {
                return RatPoly::one();
            }
            let r = int_prem(&a, &b);
            a = b;
            b = int_primitive(r);
        }
        RatPoly::from_bigints(&a).monic()
    }

    /// Least common multiple, monic.
    pub fn lcm(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let g = self.gcd(other);
        let q = self.div_exact(&g).expect("gcd divides");
        (&q * other).monic()
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

fn to_primitive_ints(p: &RatPoly) -> Vec<BigInt> {
    let pp = p.primitive_part();
    pp.coeffs.iter().map(|c| c.numer().clone()).collect()
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    if !g.is_one() {
        ops::tick(v.len() as u64);
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Pseudo-remainder of integer polynomials, `lc(b)^(da-db+1) a mod b`.
fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        ops::tick((r.len() + b.len()) as u64);
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, bk) in b.iter().enumerate() {
            r[dr - db + k] -= &lr * bk;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("t"))
    }
}

impl Add<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.coeffs.clone();
        for (i, s) in short.coeffs.iter().enumerate() {
            c[i] += s;
        }
        RatPoly::new(c)
    }
}

impl Sub<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let mut c = self.coeffs.clone();
        if c.len() < rhs.coeffs.len() {
            c.resize(rhs.coeffs.len(), BigRat::zero());
        }
        for (i, s) in rhs.coeffs.iter().enumerate() {
            c[i] -= s;
        }
        RatPoly::new(c)
    }
}

impl Mul<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut c = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                c[i + j] += &t;
            }
        }
        RatPoly::new(c)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: &RatPoly) -> RatPoly {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}
