//! Exact interpolation at consecutive integers and the evaluation–
//! interpolation product built on it.

use super::poly::RatPoly;
use super::rat::BigRat;
use crate::error::{Error, Result};

/// Polynomial of degree `< values.len()` taking `values[i]` at `t0 + i`.
///
/// Newton's forward-difference form, converted to the monomial basis with a
/// Horner-style pass.
pub fn interpolate_consecutive(t0: i64, values: &[BigRat]) -> RatPoly {
    let diffs = forward_differences(values);
    newton_to_monomial(t0, &diffs)
}

/// Like [`interpolate_consecutive`] but `values` must contain one sample
/// more than `degree + 1`; the extra sample has to agree with the degree
/// bound, otherwise an internal consistency error is returned.
pub fn interpolate_checked(t0: i64, values: &[BigRat], degree: usize) -> Result<RatPoly> {
    if values.len() != degree + 2 {
        return Err(Error::Internal(format!(
            "interpolation needs {} samples, got {}",
            degree + 2,
            values.len()
        )));
    }
    let diffs = forward_differences(values);
    if !diffs[degree + 1].is_zero() {
        return Err(Error::Internal(format!(
            "interpolated polynomial exceeds predicted degree {degree}"
        )));
    }
    Ok(newton_to_monomial(t0, &diffs[..=degree]))
}

fn forward_differences(values: &[BigRat]) -> Vec<BigRat> {
    let mut work = values.to_vec();
    let mut out = Vec::with_capacity(values.len());
    for i in 0..values.len() {
        out.push(work[0].clone());
        for j in 0..values.len() - i - 1 {
            work[j] = &work[j + 1] - &work[j];
        }
    }
    out
}

fn newton_to_monomial(t0: i64, diffs: &[BigRat]) -> RatPoly {
    let Some(last) = diffs.last() else {
        return RatPoly::zero();
    };
    // p = d_D; p = p * (t - t0 - i) / (i + 1) + d_i for i = D-1 .. 0
    let mut p: Vec<BigRat> = vec![last.clone()];
    for i in (0..diffs.len() - 1).rev() {
        let shift = BigRat::from_i64(-(t0 + i as i64));
        let inv = BigRat::frac(1, i as i64 + 1);
        let mut next = vec![BigRat::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c * &inv;
            next[k] += &(&c * &shift);
            next[k + 1] += &c;
        }
        next[0] += &diffs[i];
        p = next;
    }
    RatPoly::new(p)
}

/// Product of two polynomials by evaluation at `deg a + deg b + 1`
/// consecutive integers and interpolation.
pub fn mul_by_evaluation(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return RatPoly::zero();
    };
    let n = da + db + 1;
    let values: Vec<BigRat> = (0..n as i64)
        .map(|t| &a.eval_i64(t) * &b.eval_i64(t))
        .collect();
    interpolate_consecutive(0, &values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn recovers_cubic() {
        let p = RatPoly::new(vec![
            BigRat::frac(1, 3),
            BigRat::from_i64(-2),
            BigRat::zero(),
            BigRat::frac(5, 7),
        ]);
        let vals: Vec<_> = (4..8).map(|t| p.eval_i64(t)).collect();
        assert_eq!(interpolate_consecutive(4, &vals), p);
        let vals: Vec<_> = (4..9).map(|t| p.eval_i64(t)).collect();
        assert_eq!(interpolate_checked(4, &vals, 3).unwrap(), p);
        assert!(interpolate_checked(4, &vals[..4], 2).is_err());
    }

    #[test]
    fn degree_violation_detected() {
        let p = RatPoly::from_i64s(&[0, 0, 0, 1]);
        let vals: Vec<_> = (0..4).map(|t| p.eval_i64(t)).collect();
        assert!(matches!(interpolate_checked(0, &vals, 2), Err(Error::Internal(_))));
    }

    proptest! {
        #[test]
        fn matches_schoolbook(a in prop::collection::vec(-9i64..9, 0..6),
                              b in prop::collection::vec(-9i64..9, 0..6)) {
            let a = RatPoly::from_i64s(&a);
            let b = RatPoly::from_i64s(&b);
            prop_assert_eq!(mul_by_evaluation(&a, &b), &a * &b);
        }
    }
}
