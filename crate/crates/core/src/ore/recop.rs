//! Laurent recurrence operators `Σ_{j=lo..hi} r_j(n) S^j` over Q(n), with
//! `S·r(n) = r(n+1)·S` and `S^{-1}·r(n) = r(n-1)·S^{-1}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{BigRat, RatFunc, RatPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RecOp {
    lo: i64,
    coeffs: Vec<RatFunc>,
}

/// A unit of Q(n)⟨S, S^{-1}⟩: `c(n)·S^shift` when acting on the left,
/// `S^shift·c(n)` when acting on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit {
    pub shift: i64,
    pub scale: RatFunc,
}

impl Unit {
    pub fn identity() -> Self {
        Unit {
            shift: 0,
            scale: RatFunc::one(),
        }
    }

    /// `c(n)·S^shift`.
    pub fn as_left_op(&self) -> RecOp {
        RecOp::shift(self.shift).scale_left(&self.scale)
    }

    /// `S^shift·c(n)`.
    pub fn as_right_op(&self) -> RecOp {
        RecOp::shift(self.shift).scale_right(&self.scale)
    }
}

impl RecOp {
    /// Operator with `coeffs[i]` at `S^{lo+i}`; zero coefficients at either
    /// end are dropped.
    pub fn new(lo: i64, mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return RecOp::zero();
        }
        coeffs.drain(..lead_zeros);
        RecOp {
            lo: lo + lead_zeros as i64,
            coeffs,
        }
    }

    /// Sparse construction from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms(terms: &[(i64, RatFunc)]) -> Self {
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return RecOp::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(lo);
        let mut c = vec![RatFunc::zero(); (hi - lo + 1) as usize];
        for (j, r) in terms {
            let k = (j - lo) as usize;
            c[k] = &c[k] + r;
        }
        RecOp::new(lo, c)
    }

    /// Polynomial coefficients given as integer lists (ascending powers of n).
    pub fn from_i64_table(lo: i64, table: &[&[i64]]) -> Self {
        RecOp::new(
            lo,
            table
                .iter()
                .map(|c| RatFunc::from_poly(RatPoly::from_i64s(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RecOp {
            lo: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        RecOp::scalar(RatFunc::one())
    }

    /// `S^j`.
    pub fn shift(j: i64) -> Self {
        RecOp {
            lo: j,
            coeffs: vec![RatFunc::one()],
        }
    }

    pub fn scalar(c: RatFunc) -> Self {
        RecOp::new(0, vec![c])
    }

    /// The multiplication operator `n`.
    pub fn n() -> Self {
        RecOp::scalar(RatFunc::from_poly(RatPoly::var()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// A nonzero operator supported on a single power of S.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest exponent; `lo - 1` for the zero operator.
    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    /// `hi - lo`, the S-degree after moving the support to `[0, m]`.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    /// Coefficient of `S^j` (zero outside the support).
    pub fn coeff(&self, j: i64) -> RatFunc {
        let k = j - self.lo;
        if k < 0 || k as usize >= self.coeffs.len() {
            RatFunc::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &RatFunc)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    pub fn leading(&self) -> Option<&RatFunc> {
        self.coeffs.last()
    }

    pub fn trailing(&self) -> Option<&RatFunc> {
        self.coeffs.first()
    }

    pub fn has_poly_coeffs(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_poly)
    }

    /// Largest n-degree of a coefficient numerator.
    pub fn n_degree(&self) -> usize {
        self.coeffs.iter().map(|c| c.num().deg0()).max().unwrap_or(0)
    }

    /// `S^j · self`.
    pub fn shift_left(&self, j: i64) -> RecOp {
        if self.is_zero() {
            return RecOp::zero();
        }
        RecOp {
            lo: self.lo + j,
            coeffs: self.coeffs.iter().map(|c| c.shift(j)).collect(),
        }
    }

    /// `self · S^j`.
    pub fn shift_right(&self, j: i64) -> RecOp {
        if self.is_zero() {
            return RecOp::zero();
        }
        RecOp {
            lo: self.lo + j,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `c(n) · self`.
    pub fn scale_left(&self, c: &RatFunc) -> RecOp {
        if c.is_one() {
            return self.clone();
        }
        RecOp::new(self.lo, self.coeffs.iter().map(|r| r * c).collect())
    }

    /// `self · c(n)`.
    pub fn scale_right(&self, c: &RatFunc) -> RecOp {
        if c.is_one() {
            return self.clone();
        }
        RecOp::new(
            self.lo,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, r)| r * &c.shift(self.lo + i as i64))
                .collect(),
        )
    }

    pub fn scale_const(&self, c: &BigRat) -> RecOp {
        RecOp::new(self.lo, self.coeffs.iter().map(|r| r.scale(c)).collect())
    }

    pub fn apply_left_unit(&self, u: &Unit) -> RecOp {
        self.shift_left(u.shift).scale_left(&u.scale)
    }

    pub fn apply_right_unit(&self, u: &Unit) -> RecOp {
        self.shift_right(u.shift).scale_right(&u.scale)
    }

    pub fn pow(&self, e: u32) -> RecOp {
        let mut acc = RecOp::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Left unit `u` making `u·self` normalized: support `[0, m]`,
    /// polynomial coefficients with joint integer content 1, positive
    /// leading integer. Polynomial factors common to all coefficients are
    /// kept unless `strip_common` is set.
    fn left_unit(&self, strip_common: bool) -> (RecOp, Unit) {
        if self.is_zero() {
            return (RecOp::zero(), Unit::identity());
        }
        let b = self.shift_left(-self.lo);
        let den = b
            .coeffs
            .iter()
            .fold(RatPoly::one(), |acc, c| acc.lcm(c.den()));
        let mut polys: Vec<RatPoly> = b
            .coeffs
            .iter()
            .map(|c| {
                if c.den() == &den {
                    c.num().clone()
                } else {
                    c.num() * &den.div_exact(c.den()).expect("lcm is a multiple")
                }
            })
            .collect();
        let mut common = RatPoly::one();
        if strip_common {
            common = polys
                .iter()
                .fold(RatPoly::zero(), |acc, p| acc.gcd(p));
            if !common.is_one() {
                for p in &mut polys {
                    *p = p.div_exact(&common).expect("gcd divides");
                }
            }
        }
        let c = joint_content(&polys);
        let inv = c.inv().expect("nonzero content");
        let polys: Vec<RatFunc> = polys
            .into_iter()
            .map(|p| RatFunc::from_poly(p.scale(&inv)))
            .collect();
        let scale = RatFunc::new(den.scale(&inv), common).expect("nonzero gcd");
        (
            RecOp {
                lo: 0,
                coeffs: polys,
            },
            Unit {
                shift: -self.lo,
                scale,
            },
        )
    }

    /// Normal form used for printed recurrences: support `[0, m]`,
    /// polynomial coefficients, joint content 1, positive leading integer.
    pub fn normalized(&self) -> RecOp {
        self.left_unit(false).0
    }

    pub fn normalized_with_unit(&self) -> (RecOp, Unit) {
        self.left_unit(false)
    }

    /// Canonical representative of the class `{u·self : u a unit}`.
    pub fn left_canonical(&self) -> RecOp {
        self.left_unit(true).0
    }

    pub fn left_canonical_with_unit(&self) -> (RecOp, Unit) {
        self.left_unit(true)
    }

    /// Canonical representative of the class `{self·u : u a unit}`.
    pub fn right_canonical(&self) -> RecOp {
        self.right_canonical_with_unit().0
    }

    pub fn right_canonical_with_unit(&self) -> (RecOp, Unit) {
        if self.is_zero() {
            return (RecOp::zero(), Unit::identity());
        }
        // self·S^{-lo}·c(n) has coefficient b_j(n) c(n+j) at S^j.
        let b = self.shift_right(-self.lo);
        let l = b
            .coeffs
            .iter()
            .enumerate()
            .fold(RatPoly::one(), |acc, (j, c)| acc.lcm(&c.den().shift(-(j as i64))));
        let mut polys: Vec<RatPoly> = b
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let lj = l.shift(j as i64);
                c.num() * &lj.div_exact(c.den()).expect("shifted lcm is a multiple")
            })
            .collect();
        let g = polys
            .iter()
            .enumerate()
            .fold(RatPoly::zero(), |acc, (j, p)| acc.gcd(&p.shift(-(j as i64))));
        if !g.is_one() {
            for (j, p) in polys.iter_mut().enumerate() {
                *p = p.div_exact(&g.shift(j as i64)).expect("shifted gcd divides");
            }
        }
        let c = joint_content(&polys);
        let inv = c.inv().expect("nonzero content");
        let coeffs: Vec<RatFunc> = polys
            .into_iter()
            .map(|p| RatFunc::from_poly(p.scale(&inv)))
            .collect();
        let scale = RatFunc::new(l.scale(&inv), g).expect("nonzero gcd");
        (
            RecOp { lo: 0, coeffs },
            Unit {
                shift: -self.lo,
                scale,
            },
        )
    }

    /// `self = u·other` for some unit `u`.
    pub fn eq_up_to_left_unit(&self, other: &RecOp) -> bool {
        self.left_canonical() == other.left_canonical()
    }

    /// `self = other·u` for some unit `u`.
    pub fn eq_up_to_right_unit(&self, other: &RecOp) -> bool {
        self.right_canonical() == other.right_canonical()
    }

    /// Integer coefficient table (ascending powers of n) when every
    /// coefficient is a polynomial with integer coefficients.
    pub fn integer_table(&self) -> Option<Vec<Vec<num_bigint::BigInt>>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_poly() { c.num().integer_coeffs() } else { None })
            .collect()
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let single = self.terms().count() == 1;
        let mut out = String::new();
        for (j, c) in self.terms() {
            let monomial = c.is_poly() && c.num().coeffs().iter().filter(|x| !x.is_zero()).count() == 1;
            let neg = monomial && c.num().lead().is_negative();
            let body = if neg { (-c).fmt_var(var) } else { c.fmt_var(var) };
            let coef = if monomial || (single && j == 0) {
                body
            } else {
                format!("({body})")
            };
            let sym = match j {
                0 => String::new(),
                1 => "S".into(),
                _ => format!("S^{j}"),
            };
            let term = if sym.is_empty() {
                coef
            } else if coef == "1" {
                sym
            } else {
                format!("{coef}*{sym}")
            };
            match (out.is_empty(), neg) {
                (true, true) => out = format!("-{term}"),
                (true, false) => out = term,
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&term);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&term);
                }
            }
        }
        out
    }
}

/// Positive rational `c` such that all `polys / c` have coprime integer
/// coefficients, signed so that the last polynomial's lead becomes positive.
fn joint_content(polys: &[RatPoly]) -> BigRat {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for p in polys {
        for c in p.coeffs() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
    }
    let c = BigRat::new(g, l);
    match polys.iter().rev().find(|p| !p.is_zero()) {
        Some(p) if p.lead().is_negative() => -c,
        _ => c,
    }
}

impl fmt::Debug for RecOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("n"))
    }
}

impl fmt::Display for RecOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("n"))
    }
}

impl Add<&RecOp> for &RecOp {
    type Output = RecOp;
    fn add(self, rhs: &RecOp) -> RecOp {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.hi().max(rhs.hi());
        let coeffs = (lo..=hi).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect();
        RecOp::new(lo, coeffs)
    }
}

impl Sub<&RecOp> for &RecOp {
    type Output = RecOp;
    fn sub(self, rhs: &RecOp) -> RecOp {
        self + &(-rhs)
    }
}

impl Neg for &RecOp {
    type Output = RecOp;
    fn neg(self) -> RecOp {
        RecOp {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&RecOp> for &RecOp {
    type Output = RecOp;
    /// `(Σ a_i S^i)(Σ b_k S^k) = Σ a_i(n) b_k(n+i) S^{i+k}`.
    fn mul(self, rhs: &RecOp) -> RecOp {
        if self.is_zero() || rhs.is_zero() {
            return RecOp::zero();
        }
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let s = self.lo + i as i64;
            for (k, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * &b.shift(s);
                out[i + k] = &out[i + k] + &t;
            }
        }
        RecOp::new(self.lo + rhs.lo, out)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RecOp {
            type Output = RecOp;
            fn $m(self, rhs: RecOp) -> RecOp {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for RecOp {
    type Output = RecOp;
    fn neg(self) -> RecOp {
        -&self
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(RatPoly::from_i64s(n), RatPoly::from_i64s(d)).unwrap()
    }

    /// Small random operators with rational-function coefficients.
    pub(crate) fn arb_recop() -> impl Strategy<Value = RecOp> {
        (
            -2i64..2,
            prop::collection::vec(
                (
                    prop::collection::vec(-4i64..5, 1..3),
                    prop::option::of(-3i64..3),
                ),
                1..4,
            ),
        )
            .prop_map(|(lo, cs)| {
                let coeffs = cs
                    .into_iter()
                    .map(|(n, d)| match d {
                        Some(a) => rf(&n, &[a, 1]),
                        None => RatFunc::from_poly(RatPoly::from_i64s(&n)),
                    })
                    .collect();
                RecOp::new(lo, coeffs)
            })
    }

    pub(crate) fn arb_nonzero_recop() -> impl Strategy<Value = RecOp> {
        arb_recop().prop_filter("nonzero", |a| !a.is_zero())
    }

    #[test]
    fn commutation_rules() {
        let n = RecOp::n();
        assert_eq!(
            &RecOp::shift(1) * &n,
            RecOp::from_terms(&[(1, rf(&[1, 1], &[1]))])
        );
        assert_eq!(
            &RecOp::shift(-1) * &n,
            RecOp::from_terms(&[(-1, rf(&[-1, 1], &[1]))])
        );
    }

    #[test]
    fn square_of_difference() {
        let d = &RecOp::shift(1) - &RecOp::shift(-1);
        let expect = RecOp::from_i64_table(-2, &[&[1], &[], &[-2], &[], &[1]]);
        assert_eq!(&d * &d, expect);
    }

    #[test]
    fn trimming_and_zero() {
        let z = RecOp::new(5, vec![RatFunc::zero(), RatFunc::zero()]);
        assert_eq!(z, RecOp::zero());
        assert_eq!(z.lo(), 0);
        let a = RecOp::new(-1, vec![RatFunc::zero(), RatFunc::one(), RatFunc::zero()]);
        assert_eq!(a, RecOp::one());
    }

    #[test]
    fn normal_forms() {
        // (1/(n+1))·S^{-1}·(2S - 4)  ->  S - 2 on [0, 1]
        let a = RecOp::new(-1, vec![rf(&[-4], &[1, 1]), rf(&[2], &[1, 1])]);
        let (na, u) = a.normalized_with_unit();
        assert_eq!(na, RecOp::from_i64_table(0, &[&[-2], &[1]]));
        assert_eq!(a.apply_left_unit(&u), na);

        // n·(S - 1) keeps its polynomial factor but loses it canonically.
        let b = RecOp::from_i64_table(0, &[&[0, -2], &[0, 2]]);
        assert_eq!(b.normalized(), RecOp::from_i64_table(0, &[&[0, -1], &[0, 1]]));
        assert_eq!(b.left_canonical(), RecOp::from_i64_table(0, &[&[-1], &[1]]));

        // (S - 1)·n = (n+1)S - n: right canonical form is S - 1.
        let c = &(&RecOp::shift(1) - &RecOp::one()) * &RecOp::n();
        let (rc, u) = c.right_canonical_with_unit();
        assert_eq!(rc, RecOp::from_i64_table(0, &[&[-1], &[1]]));
        assert_eq!(c.apply_right_unit(&u), rc);
    }

    #[test]
    fn display() {
        let a = RecOp::from_i64_table(-1, &[&[-1], &[0, 2], &[1]]);
        assert_eq!(a.to_string(), "-S^-1 + 2*n + S");
        let b = RecOp::from_i64_table(0, &[&[-1, -2], &[], &[3, 2]]);
        assert_eq!(b.to_string(), "(-2*n - 1) + (2*n + 3)*S^2");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_laws(a in arb_recop(), b in arb_recop(), c in arb_recop()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn degree_is_additive(a in arb_nonzero_recop(), b in arb_nonzero_recop()) {
            let p = &a * &b;
            prop_assert!(!p.is_zero());
            prop_assert_eq!(p.order(), a.order() + b.order());
            prop_assert_eq!(p.lo(), a.lo() + b.lo());
        }

        #[test]
        fn units_are_consistent(a in arb_recop()) {
            let (l, u) = a.left_canonical_with_unit();
            prop_assert_eq!(&u.as_left_op() * &a, l.clone());
            prop_assert_eq!(l.left_canonical(), l);
            let (r, v) = a.right_canonical_with_unit();
            prop_assert_eq!(&a * &v.as_right_op(), r.clone());
            prop_assert_eq!(r.right_canonical(), r);
        }
    }
}
