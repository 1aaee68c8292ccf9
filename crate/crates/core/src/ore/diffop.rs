//! Differential operators `Σ p_i(x) ∂^i` over Q(x), with `∂·p = p·∂ + p'`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{BigRat, RatFunc, RatPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiffOp {
    coeffs: Vec<RatFunc>,
}

impl DiffOp {
    pub fn new(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn from_polys(ps: Vec<RatPoly>) -> Self {
        DiffOp::new(ps.into_iter().map(RatFunc::from_poly).collect())
    }

    /// Integer coefficient lists in ascending powers of x, indexed by the
    /// power of ∂.
    pub fn from_i64_table(table: &[&[i64]]) -> Self {
        DiffOp::from_polys(table.iter().map(|c| RatPoly::from_i64s(c)).collect())
    }

    pub fn zero() -> Self {
        DiffOp { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DiffOp::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        DiffOp::new(vec![c])
    }

    /// `∂_x`.
    pub fn dx() -> Self {
        DiffOp::new(vec![RatFunc::zero(), RatFunc::one()])
    }

    /// Multiplication by `x`.
    pub fn x() -> Self {
        DiffOp::scalar(RatFunc::from_poly(RatPoly::var()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest power of ∂ (0 for the zero operator).
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RatFunc {
        self.coeffs.get(i).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn leading(&self) -> Option<&RatFunc> {
        self.coeffs.last()
    }

    /// Coefficients as polynomials, if they all are.
    pub fn poly_coeffs(&self) -> Option<Vec<RatPoly>> {
        self.coeffs
            .iter()
            .map(|c| c.is_poly().then(|| c.num().clone()))
            .collect()
    }

    /// Largest x-degree of a coefficient numerator.
    pub fn x_degree(&self) -> usize {
        self.coeffs.iter().map(|c| c.num().deg0()).max().unwrap_or(0)
    }

    /// `(c·self, c)` with `c(x)` the monic lcm of the coefficient
    /// denominators, so that `c·self` has polynomial coefficients.
    pub fn clear_denominators(&self) -> (DiffOp, RatPoly) {
        let l = self
            .coeffs
            .iter()
            .fold(RatPoly::one(), |acc, c| acc.lcm(c.den()));
        if l.is_one() {
            return (self.clone(), l);
        }
        let lf = RatFunc::from_poly(l.clone());
        (DiffOp::new(self.coeffs.iter().map(|c| c * &lf).collect()), l)
    }

    /// `c(x)·self`.
    pub fn scale_left(&self, c: &RatFunc) -> DiffOp {
        DiffOp::new(self.coeffs.iter().map(|p| p * c).collect())
    }

    pub fn scale_const(&self, c: &BigRat) -> DiffOp {
        DiffOp::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn pow(&self, e: u32) -> DiffOp {
        let mut acc = DiffOp::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = c.fmt_var(var);
            let d = match i {
                0 => String::new(),
                1 => "Dx".into(),
                _ => format!("Dx^{i}"),
            };
            parts.push(match (body.as_str(), d.is_empty()) {
                (_, true) => format!("({body})"),
                ("1", false) => d,
                _ => format!("({body})*{d}"),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("x"))
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("x"))
    }
}

impl Add<&DiffOp> for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub<&DiffOp> for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        self + &(-rhs)
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        DiffOp {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&DiffOp> for &DiffOp {
    type Output = DiffOp;
    /// `p ∂^i · q ∂^j = Σ_m C(i,m) p q^{(m)} ∂^{i+j-m}` (Leibniz).
    fn mul(self, rhs: &DiffOp) -> DiffOp {
        if self.is_zero() || rhs.is_zero() {
            return DiffOp::zero();
        }
        let k = self.order();
        // derivs[j][m] = m-th derivative of rhs_j, m = 0..=k
        let derivs: Vec<Vec<RatFunc>> = rhs
            .coeffs
            .iter()
            .map(|q| {
                let mut v = vec![q.clone()];
                for m in 1..=k {
                    let next = v[m - 1].derivative();
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let mut binom = BigRat::one();
            for m in 0..=i {
                for (j, dq) in derivs.iter().enumerate() {
                    if dq[m].is_zero() {
                        continue;
                    }
                    let t = (p * &dq[m]).scale(&binom);
                    out[i + j - m] = &out[i + j - m] + &t;
                }
                binom = &(&binom * &BigRat::from_i64((i - m) as i64))
                    / &BigRat::from_i64(m as i64 + 1);
            }
        }
        DiffOp::new(out)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for DiffOp {
            type Output = DiffOp;
            fn $m(self, rhs: DiffOp) -> DiffOp {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        -&self
    }
}
