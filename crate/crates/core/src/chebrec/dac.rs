//! Divide-and-conquer evaluation of `Σ_i I^i a_i(X)` with a fast product
//! by powers of `I`.
//!
//! Intermediate results are kept as `(m, N)` meaning `N / r(m)`, where `N`
//! has polynomial coefficients in n and `m` is the local order.

use std::collections::HashMap;

use super::classic::poly_coeffs;
use super::symbols::{phi_polynomial, r_poly, r_ratio, scaled_i_power, to_integral_form};
use crate::error::{Error, Result};
use crate::field::interp::interpolate_checked;
use crate::field::{BigRat, RatFunc, RatPoly};
use crate::ore::{DiffOp, RecOp};

/// Polynomial coefficients of `r(ℓ)·I^ℓ`, computed once per `ℓ`.
#[derive(Default)]
pub struct IPowerCache {
    table: HashMap<usize, Vec<RatPoly>>,
}

impl IPowerCache {
    pub fn get(&mut self, ell: usize) -> &[RatPoly] {
        self.table.entry(ell).or_insert_with(|| scaled_i_power(ell))
    }
}

/// `N = Σ_i A_i S^{off_i}` with each block `A_i` of S-degree at most `2ℓ`
/// and support starting at 0. Only coefficients move.
pub fn block_decomposition(n: &RecOp, ell: usize) -> Vec<(i64, RecOp)> {
    if n.is_zero() {
        return Vec::new();
    }
    let width = 2 * ell + 1;
    n.coeffs()
        .chunks(width)
        .enumerate()
        .map(|(b, chunk)| {
            let off = n.lo() + (b * width) as i64;
            (off, RecOp::new(0, chunk.to_vec()))
        })
        .filter(|(_, a)| !a.is_zero())
        .map(|(off, a)| (off + a.lo(), a.shift_right(-a.lo())))
        .collect()
}

/// Numerator of `r(ℓ+m)·I^ℓ·(N / r(m))`, a polynomial-coefficient operator.
///
/// Coefficient `t` of the result is
/// `[r(ℓ+m)/r(ℓ)](n) Σ_j c_j(n) N_{t-j}(n+j) / r(m)(n+j)`, where `c_j` are
/// the coefficients of `r(ℓ)I^ℓ`. It is sampled at consecutive integers
/// `n ≥ ℓ+m` (so every `n+j` lies outside the zeros of `r(m)`), block by
/// block, and interpolated. One sample beyond the degree bound is taken
/// and must agree with it.
pub(crate) fn mul_scaled(cache: &mut IPowerCache, ell: usize, m: usize, n: &RecOp) -> Result<RecOp> {
    if n.is_zero() {
        return Ok(RecOp::zero());
    }
    let deg_n = n.n_degree();
    let deg = if m >= 1 { ell + deg_n } else { ell - 1 + deg_n };
    let npts = deg + 2;
    let t0 = (ell + m) as i64;
    let l = ell as i64;

    let c = cache.get(ell).to_vec();
    // "FFT" of r(ℓ)I^ℓ: values of each c_j at the sample points.
    let c_vals: Vec<Option<Vec<BigRat>>> = c
        .iter()
        .map(|cj| {
            (!cj.is_zero()).then(|| (0..npts as i64).map(|p| cj.eval_i64(t0 + p)).collect())
        })
        .collect();
    // 1/r(m) on the shifted window t0-ℓ .. t0+npts-1+ℓ.
    let window = npts + 2 * ell;
    let rm = r_poly(m);
    let rm_inv: Vec<BigRat> = (0..window as i64)
        .map(|p| {
            rm.eval_i64(t0 - l + p)
                .inv()
                .ok_or_else(|| Error::Internal("sample point hits a pole".into()))
        })
        .collect::<Result<_>>()?;

    let t_lo = n.lo() - l;
    let span = n.order() + 2 * ell + 1;
    let mut table: Vec<Vec<BigRat>> = vec![vec![BigRat::zero(); npts]; span];

    for (off, block) in block_decomposition(n, ell) {
        for (e_local, ne) in block.terms() {
            let e = off + e_local;
            let ne = ne.num();
            let vals: Vec<BigRat> = (0..window)
                .map(|p| &ne.eval_i64(t0 - l + p as i64) * &rm_inv[p])
                .collect();
            for (jj, cv) in c_vals.iter().enumerate() {
                let Some(cv) = cv else { continue };
                let j = jj as i64 - l;
                let row = &mut table[(e + j - t_lo) as usize];
                for p in 0..npts {
                    // sample n = t0 + p reads N_e at n + j = t0 - ℓ + (p + jj)
                    row[p] += &(&cv[p] * &vals[p + jj]);
                }
            }
        }
    }

    let pre = r_ratio(ell, ell + m);
    let pre_vals: Option<Vec<BigRat>> =
        (!pre.is_constant()).then(|| (0..npts as i64).map(|p| pre.eval_i64(t0 + p)).collect());
    let coeffs = table
        .into_iter()
        .map(|mut row| {
            if row.iter().all(BigRat::is_zero) {
                return Ok(RatFunc::zero());
            }
            match &pre_vals {
                Some(pv) => {
                    for (v, w) in row.iter_mut().zip(pv) {
                        *v = &*v * w;
                    }
                }
                None => {
                    let k = pre.coeff(0);
                    for v in row.iter_mut() {
                        *v = &*v * &k;
                    }
                }
            }
            interpolate_checked(t0, &row, deg).map(RatFunc::from_poly)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RecOp::new(t_lo, coeffs))
}

/// `I^ℓ·P` for `P = Σ_{i≤ℓ} I^i a_i(X)` with `deg a_i ≤ d`.
///
/// `r(ℓ)P` has polynomial coefficients; the product is formed blockwise by
/// evaluation and interpolation and divided by `r(2ℓ)` at the end.
pub fn fast_mul_by_i_power(ell: usize, p: &RecOp, d: usize) -> Result<RecOp> {
    if ell == 0 {
        return Ok(p.clone());
    }
    let n = p.scale_left(&RatFunc::from_poly(r_poly(ell)));
    if !n.has_poly_coeffs() {
        return Err(Error::Precondition("r(ℓ)·P must have polynomial coefficients".into()));
    }
    let blocks = block_decomposition(&n, ell).len();
    if blocks > (ell + d) / ell + 1 {
        return Err(Error::Precondition(format!(
            "{blocks} blocks exceed the bound for ℓ = {ell}, d = {d}"
        )));
    }
    let v = mul_scaled(&mut IPowerCache::default(), ell, ell, &n)?;
    let inv = RatFunc::new(RatPoly::one(), r_poly(2 * ell))?;
    Ok(v.scale_left(&inv))
}

/// `Σ_{i=0}^{k} I^i a_i(X)` as `(k, N)` with the value `N / r(k)`.
fn dac_rec(cache: &mut IPowerCache, a: &[RatPoly]) -> Result<(usize, RecOp)> {
    let k = a.len() - 1;
    if k == 0 {
        return Ok((0, phi_polynomial(&a[0])));
    }
    let ell = k.div_ceil(2);
    let (m_left, left) = dac_rec(cache, &a[..ell])?;
    let (m_right, right) = dac_rec(cache, &a[ell..])?;
    debug_assert_eq!((m_left, m_right), (ell - 1, k - ell));
    let prod = mul_scaled(cache, ell, m_right, &right)?;
    let lift = r_ratio(m_left, k);
    let left = if lift.is_one() {
        left
    } else {
        left.scale_left(&RatFunc::from_poly(lift))
    };
    Ok((k, &left + &prod))
}

/// `I^k φ(L)` as `(r(k), N)` with `I^k φ(L) = N / r(k)`.
pub fn dac_core(l: &DiffOp) -> Result<(RatPoly, RecOp)> {
    poly_coeffs(l)?;
    let mut a: Vec<RatPoly> = to_integral_form(l)
        .into_iter()
        .map(|c| c.num().clone())
        .collect();
    a.reverse(); // a_i = q_{k-i}
    let mut cache = IPowerCache::default();
    let (k, n) = dac_rec(&mut cache, &a)?;
    Ok((r_poly(k), n))
}
