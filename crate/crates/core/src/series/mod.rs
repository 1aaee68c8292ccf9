//! Chebyshev coefficients of catalog functions and numerical checks of
//! recurrences against them.

pub mod catalog;

use std::f64::consts::PI;

pub use catalog::{bessel_i, catalog, lookup, CatalogFunction, CoeffSource, Parity};

use crate::chebrec::{compute, Algorithm};
use crate::error::{Error, Result};
use crate::field::BigRat;
use crate::ore::RecOp;
use crate::scalar::Scalar;

/// Roundoff of quadrature coefficients, in units of `EPSILON·max|c|`.
pub const NOISE_ULPS: f64 = 64.0;

/// `c_0, …, c_n` of `f` by Gauss–Chebyshev quadrature at `m` interior
/// nodes; the series is `c_0/2 + Σ c_n T_n`.
pub fn cheb_coeffs(f: impl Fn(f64) -> f64, n: usize, m: usize) -> Result<Vec<f64>> {
    if n < 4 || m < 2 * n {
        return Err(Error::Precondition(format!("need n ≥ 4 and m ≥ 2n (n = {n}, m = {m})")));
    }
    let mut c = vec![0.0; n + 1];
    for j in 0..m {
        let theta = (2 * j + 1) as f64 * PI / (2 * m) as f64;
        let v = f(theta.cos());
        if !v.is_finite() {
            return Err(Error::NonFinite { node: j, value: v });
        }
        for (k, ck) in c.iter_mut().enumerate() {
            *ck += v * (k as f64 * theta).cos();
        }
    }
    let scale = 2.0 / m as f64;
    c.iter_mut().for_each(|ck| *ck *= scale);
    Ok(c)
}

/// `c_0/2 + Σ_{n≥1} c_n T_n(x)` by Clenshaw's recurrence.
pub fn truncated_eval(c: &[f64], x: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c.iter().skip(1).rev() {
        let b0 = 2.0 * x * b1 - b2 + ck;
        b2 = b1;
        b1 = b0;
    }
    let c0 = c.first().copied().unwrap_or(0.0);
    x * b1 - b2 + c0 / 2.0
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnnihilationReport {
    /// Largest relative residual over checked rows.
    pub max_residual: f64,
    pub worst_n: i64,
    pub n_min: i64,
    pub n_max: i64,
    pub checked: usize,
    /// Rows whose terms all lie below the noise floor.
    pub skipped: usize,
    pub tol: f64,
    pub pass: bool,
}

/// Relative residual `|Σ_j r_j(n)c_{n+j}| / (max_j |r_j(n)c_{n+j}| + ε_n)`
/// over `n ∈ [n_min, N−m]`.
///
/// `ε_n = η·max_j|r_j(n)|` with `η = NOISE_ULPS·EPSILON·max|c|` guards
/// rows that are zero up to roundoff. Rows whose largest term is below
/// `ε_n/tol` cannot be resolved at `tol` in double precision and are
/// skipped.
pub fn verify_annihilation(
    p: &RecOp,
    c: &[f64],
    n_min: i64,
    tol: f64,
) -> Result<AnnihilationReport> {
    if p.is_zero() {
        return Err(Error::ZeroOperator);
    }
    let n_max = c.len() as i64 - 1 - p.hi();
    let n_min = n_min.max(-p.lo());
    if n_min > n_max {
        return Err(Error::EmptyWindow);
    }
    let scale = c.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let eta = NOISE_ULPS * f64::EPSILON * scale;
    let mut report = AnnihilationReport {
        max_residual: 0.0,
        worst_n: n_min,
        n_min,
        n_max,
        checked: 0,
        skipped: 0,
        tol,
        pass: false,
    };
    for n in n_min..=n_max {
        let nn = BigRat::from_i64(n);
        let (mut sum, mut row, mut rmax) = (0.0, 0.0f64, 0.0f64);
        for (j, r) in p.terms() {
            let rv = r.eval(&nn).map_err(|_| Error::Pole { index: n })?.to_f64();
            let t = rv * c[(n + j) as usize];
            sum += t;
            row = row.max(t.abs());
            rmax = rmax.max(rv.abs());
        }
        let eps = eta * rmax;
        if row < eps / tol {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        let res = sum.abs() / (row + eps);
        if res > report.max_residual {
            report.max_residual = res;
            report.worst_n = n;
        }
    }
    report.pass = report.checked > 0 && report.max_residual <= tol;
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ForwardSolution<T> {
    pub values: Vec<T>,
    /// `max|c_n| / max|initial|`.
    pub growth_ratio: f64,
    /// `log10` of the product of per-step cancellation factors
    /// `max_j |r_j c_{n+j}| / |r_m c_{n+m}|`; an estimate of how much
    /// rounding errors in the initial values can be amplified.
    pub log10_amplification: f64,
    pub unstable: bool,
}

/// Amplification above which a floating-point forward solution is
/// flagged.
pub const UNSTABLE_LOG10: f64 = 6.0;

/// Iterates `c_{n+m} = −(Σ_{j<m} r_j(n)c_{n+j}) / r_m(n)` from
/// `c_0 … c_{m−1}` up to index `n_last`.
pub fn solve_forward<T: Scalar>(p: &RecOp, initial: &[T], n_last: usize) -> Result<ForwardSolution<T>> {
    if p.is_zero() {
        return Err(Error::ZeroOperator);
    }
    if p.lo() != 0 {
        return Err(Error::Precondition("operator must be supported on [0, m]".into()));
    }
    let m = p.order();
    if initial.len() != m {
        return Err(Error::Precondition(format!(
            "expected {m} initial values, got {}",
            initial.len()
        )));
    }
    let mut c = initial.to_vec();
    let mut log_amp = 0.0;
    for n in 0..(n_last + 1).saturating_sub(m) as i64 {
        let nn = BigRat::from_i64(n);
        let lead = p.coeff(m as i64).eval(&nn).map_err(|_| Error::Pole { index: n })?;
        if lead.is_zero() {
            return Err(Error::SingularLeading { index: n });
        }
        let mut acc = T::zero();
        let mut biggest = 0.0f64;
        for (j, r) in p.terms().filter(|(j, _)| *j < m as i64) {
            let rv = r.eval(&nn).map_err(|_| Error::Pole { index: n })?;
            let t = T::from_rat(&rv).mul(&c[n as usize + j as usize]);
            biggest = biggest.max(t.magnitude());
            acc = acc.add(&t);
        }
        let next = T::zero()
            .sub(&acc)
            .div(&T::from_rat(&lead))
            .ok_or(Error::SingularLeading { index: n })?;
        let out = next.magnitude() * lead.abs().to_f64();
        if out > 0.0 && biggest > out {
            log_amp += (biggest / out).log10();
        }
        c.push(next);
    }
    let init_max = initial.iter().fold(0.0f64, |a, v| a.max(v.magnitude()));
    let all_max = c.iter().fold(0.0f64, |a, v| a.max(v.magnitude()));
    let growth_ratio = if init_max > 0.0 { all_max / init_max } else { 0.0 };
    c.truncate(n_last + 1);
    Ok(ForwardSolution {
        values: c,
        growth_ratio,
        log10_amplification: log_amp,
        unstable: log_amp > UNSTABLE_LOG10,
    })
}

/// Coefficients `c_0..c_n` of a catalog function from its configured
/// source.
pub fn catalog_coeffs(f: &CatalogFunction, n: usize) -> Result<Vec<f64>> {
    match (f.source, f.known_coeffs) {
        (CoeffSource::ClosedForm, Some(k)) => Ok((0..=n).map(k).collect()),
        _ => cheb_coeffs(f.eval, n, f.nodes.max(2 * n)),
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub function: &'static str,
    pub algorithm: Algorithm,
    pub operator: RecOp,
    pub source: CoeffSource,
    pub annihilation: AnnihilationReport,
}

/// Computes a recurrence for `f` with `algo` and checks it on the first
/// `n + 1` coefficients.
pub fn verify_function(
    f: &CatalogFunction,
    algo: Algorithm,
    n: usize,
    tol: f64,
) -> Result<VerifyReport> {
    let r = compute(algo, &f.verification_operator())?;
    let c = catalog_coeffs(f, n)?;
    let annihilation = verify_annihilation(&r.operator, &c, 1, tol)?;
    Ok(VerifyReport {
        function: f.name,
        algorithm: algo,
        operator: r.operator,
        source: f.source,
        annihilation,
    })
}

#[cfg(test)]
mod tests;
