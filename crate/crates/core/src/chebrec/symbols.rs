//! Images of `x` and `∂_x` under the Chebyshev morphism, powers of the
//! integration operator `I`, and the integral form of a differential
//! operator.

use crate::field::{BigRat, RatFunc, RatPoly};
use crate::fraction::RecFrac;
use crate::ore::{DiffOp, RecOp};

/// `X = (S + S^{-1})/2`, `D = (S^{-1} - S)^{-1}·2n`, `I = D^{-1}`.
#[derive(Clone, Debug)]
pub struct ChebSymbols {
    pub x: RecOp,
    pub d: RecFrac,
    pub i: RecOp,
}

impl ChebSymbols {
    pub fn new() -> Self {
        ChebSymbols {
            x: x_op(),
            d: RecFrac::new(delta(), RecOp::n().scale_const(&BigRat::from_i64(2)))
                .expect("nonzero denominator"),
            i: i_power_closed_form(1),
        }
    }
}

impl Default for ChebSymbols {
    fn default() -> Self {
        ChebSymbols::new()
    }
}

pub fn x_op() -> RecOp {
    let half = RatFunc::constant(BigRat::frac(1, 2));
    RecOp::new(-1, vec![half.clone(), RatFunc::zero(), half])
}

/// `S^{-1} - S`.
pub fn delta() -> RecOp {
    &RecOp::shift(-1) - &RecOp::shift(1)
}

/// `X_k = (2n)^{-1}((n+k)S + (n-k)S^{-1})`.
pub fn x_k(k: usize) -> RecOp {
    let k = k as i64;
    let inv2n = RatFunc::new(RatPoly::one(), RatPoly::from_i64s(&[0, 2])).expect("nonzero");
    RecOp::new(
        -1,
        vec![
            RatFunc::from_poly(RatPoly::linear(-k)) * inv2n.clone(),
            RatFunc::zero(),
            RatFunc::from_poly(RatPoly::linear(k)) * inv2n,
        ],
    )
}

/// `p(y)` for a recurrence operator `y`, by Horner's rule.
pub fn eval_at(p: &RatPoly, y: &RecOp) -> RecOp {
    let mut acc = RecOp::zero();
    for c in p.coeffs().iter().rev() {
        acc = &acc * y;
        if !c.is_zero() {
            acc = &acc + &RecOp::scalar(RatFunc::constant(c.clone()));
        }
    }
    acc
}

/// `φ(p) = p(X)`, supported on `[-deg p, deg p]`.
pub fn phi_polynomial(p: &RatPoly) -> RecOp {
    eval_at(p, &x_op())
}

/// `q_0, …, q_k` (indexed by the power of ∂) with `L = Σ ∂^i q_i(x)`.
///
/// Peels off the top term: `q_k = p_k`, then recurses on `L - ∂^k q_k`.
pub fn to_integral_form(l: &DiffOp) -> Vec<RatFunc> {
    let k = l.order();
    let mut rest = l.clone();
    let mut q = vec![RatFunc::zero(); k + 1];
    for i in (0..=k).rev() {
        let qi = rest.coeff(i);
        if qi.is_zero() {
            continue;
        }
        let term = &DiffOp::dx().pow(i as u32) * &DiffOp::scalar(qi.clone());
        rest = &rest - &term;
        q[i] = qi;
    }
    debug_assert!(rest.is_zero());
    q
}

/// `(a)_i = a(a+1)…(a+i-1)` with `a = n + c`.
fn pochhammer(c: i64, i: usize) -> RatPoly {
    (0..i as i64).fold(RatPoly::one(), |acc, t| &acc * &RatPoly::linear(c + t))
}

fn binomial(n: usize, k: usize) -> BigRat {
    (0..k).fold(BigRat::one(), |acc, t| {
        &(&acc * &BigRat::from_i64((n - t) as i64)) / &BigRat::from_i64(t as i64 + 1)
    })
}

/// `r(i) = 2^i n ∏_{k=1}^{i-1}(n² - k²)`, with `r(0) = 1`.
pub fn r_poly(i: usize) -> RatPoly {
    if i == 0 {
        return RatPoly::one();
    }
    r_ratio(1, i).scale(&BigRat::from_i64(2)) * RatPoly::var()
}

/// `r(b)/r(a)` for `a ≤ b`, a polynomial.
pub fn r_ratio(a: usize, b: usize) -> RatPoly {
    assert!(a <= b);
    if a == 0 {
        return r_poly(b);
    }
    let mut acc = RatPoly::constant(BigRat::from_i64(2).pow((b - a) as u32));
    for s in a..b {
        let s2 = (s * s) as i64;
        acc = &acc * &RatPoly::from_i64s(&[-s2, 0, 1]);
    }
    acc
}

/// Polynomial coefficients of `r(i)·I^i` at `S^{-i}, S^{-i+1}, …, S^i`
/// (odd offsets from `-i` vanish).
pub fn scaled_i_power(i: usize) -> Vec<RatPoly> {
    assert!(i >= 1);
    let ii = i as i64;
    let mut out = vec![RatPoly::zero(); 2 * i + 1];
    out[0] = pochhammer(1, i - 1);
    for k in 1..i {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let s = pochhammer(k as i64 + 1, i - 1 - k)
            * pochhammer(1 - ii, k - 1)
            * RatPoly::linear(2 * k as i64 - ii);
        out[2 * k] = s.scale(&(&binomial(i, k) * &BigRat::from_i64(sign)));
    }
    let last = pochhammer(1 - ii, i - 1);
    out[2 * i] = if i % 2 == 0 { last } else { -&last };
    out
}

/// `I^i` from the closed form; `I^0 = 1`.
pub fn i_power_closed_form(i: usize) -> RecOp {
    if i == 0 {
        return RecOp::one();
    }
    let r = r_poly(i);
    let coeffs = scaled_i_power(i)
        .into_iter()
        .map(|c| RatFunc::new(c, r.clone()).expect("nonzero"))
        .collect();
    RecOp::new(-(i as i64), coeffs)
}

/// `r(i)·I^i` as an operator with polynomial coefficients.
pub fn scaled_i_power_op(i: usize) -> RecOp {
    if i == 0 {
        return RecOp::one();
    }
    RecOp::new(
        -(i as i64),
        scaled_i_power(i).into_iter().map(RatFunc::from_poly).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ore::diffop::tests::arb_diffop;
    use proptest::prelude::*;

    #[test]
    fn images_of_x() {
        assert_eq!(phi_polynomial(&RatPoly::one()), RecOp::one());
        assert_eq!(phi_polynomial(&RatPoly::var()), x_op());
        let x = x_op();
        let x2 = phi_polynomial(&RatPoly::from_i64s(&[0, 0, 1]));
        assert_eq!(x2, &x * &x);
        assert_eq!((x2.lo(), x2.hi()), (-2, 2));
        // 4(X² - 1) = (S^{-1} - S)²
        let lhs = (&x2 - &RecOp::one()).scale_const(&BigRat::from_i64(4));
        assert_eq!(lhs, &delta() * &delta());
    }

    #[test]
    fn first_power_of_i() {
        let inv2n = RatFunc::new(RatPoly::one(), RatPoly::from_i64s(&[0, 2])).unwrap();
        assert_eq!(i_power_closed_form(1), delta().scale_left(&inv2n));
        let s = ChebSymbols::new();
        assert!(s.d.mul(&RecFrac::from_op(s.i.clone())).unwrap().equiv(&RecFrac::one()).unwrap());
    }

    #[test]
    fn closed_form_matches_repeated_product() {
        let i1 = i_power_closed_form(1);
        let mut acc = i1.clone();
        for i in 2..=8 {
            acc = &acc * &i1;
            assert_eq!(i_power_closed_form(i), acc, "i = {i}");
        }
    }

    #[test]
    fn bidegree_of_scaled_power() {
        for i in 1..=8 {
            let op = scaled_i_power_op(i);
            assert_eq!(op.order(), 2 * i);
            assert_eq!(op.n_degree(), i - 1);
            assert_eq!(
                op,
                i_power_closed_form(i).scale_left(&RatFunc::from_poly(r_poly(i)))
            );
        }
    }

    #[test]
    fn r_ratios() {
        for a in 0..5 {
            for b in a..7 {
                assert_eq!(&r_ratio(a, b) * &r_poly(a), r_poly(b));
            }
        }
    }

    #[test]
    fn x_k_identity() {
        // X_k = I^k X D^k, checked as fractions: D^k = (I^k)^{-1}.
        let s = ChebSymbols::new();
        for k in 1..=5 {
            let ik = i_power_closed_form(k);
            let lhs = RecFrac::from_op(&ik * &s.x)
                .mul(&RecFrac::new(ik.clone(), RecOp::one()).unwrap())
                .unwrap();
            assert!(lhs.equiv(&RecFrac::from_op(x_k(k))).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn integral_form_examples() {
        // ∂x = x∂ + 1 is already ∂·q_1 with q_1 = x.
        let l = &DiffOp::dx() * &DiffOp::x();
        let q = to_integral_form(&l);
        assert_eq!(q, vec![RatFunc::zero(), RatFunc::from_poly(RatPoly::var())]);
        // x∂ = ∂·x - 1
        let q = to_integral_form(&(&DiffOp::x() * &DiffOp::dx()));
        assert_eq!(q, vec![RatFunc::from_i64(-1), RatFunc::from_poly(RatPoly::var())]);
    }

    proptest! {
        #[test]
        fn integral_form_round_trip(l in arb_diffop(3, 4)) {
            let q = to_integral_form(&l);
            let back = q.iter().enumerate().fold(DiffOp::zero(), |acc, (i, qi)| {
                &acc + &(&DiffOp::dx().pow(i as u32) * &DiffOp::scalar(qi.clone()))
            });
            prop_assert_eq!(back, l.clone());
            let d = l.x_degree();
            prop_assert!(q.iter().all(|qi| qi.num().deg0() <= d));
        }
    }
}
