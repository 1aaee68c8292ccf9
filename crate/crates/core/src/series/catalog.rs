//! Built-in functions with their defining differential operators.

use libm::erf;
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::ore::DiffOp;

/// Where `verify` takes coefficients from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffSource {
    Quadrature,
    /// Endpoint singularities make quadrature converge too slowly.
    ClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug)]
pub struct CatalogFunction {
    pub name: &'static str,
    pub description: &'static str,
    pub eval: fn(f64) -> f64,
    /// Operator annihilating the function, in the CLI grammar.
    pub operator_text: &'static str,
    /// Integer table of the defining operator (ascending powers of x,
    /// indexed by the power of Dx).
    operator: &'static [&'static [i64]],
    /// Left factor applied before computing a recurrence to verify.
    premultiplier: Option<&'static [i64]>,
    pub known_coeffs: Option<fn(usize) -> f64>,
    pub parity: Option<Parity>,
    pub source: CoeffSource,
    /// Quadrature nodes used by `verify`.
    pub nodes: usize,
}

impl CatalogFunction {
    pub fn operator(&self) -> DiffOp {
        DiffOp::from_i64_table(self.operator)
    }

    /// Operator handed to the algorithms when verifying: the defining
    /// operator, premultiplied by a polynomial where needed.
    pub fn verification_operator(&self) -> DiffOp {
        let l = self.operator();
        match self.premultiplier {
            Some(p) => &DiffOp::from_i64_table(&[p]) * &l,
            None => l,
        }
    }
}

/// `I_k(z)` by its power series.
pub fn bessel_i(k: usize, z: f64) -> f64 {
    let h = z / 2.0;
    let mut term = (0..k).fold(1.0, |t, j| t * h / (j + 1) as f64);
    let mut sum = term;
    for m in 1..200 {
        term *= h * h / (m as f64 * (m + k) as f64);
        sum += term;
        if term < sum * f64::EPSILON {
            break;
        }
    }
    sum
}

fn exp_coeff(n: usize) -> f64 {
    2.0 * bessel_i(n, 1.0)
}

fn arctan_coeff(n: usize) -> f64 {
    if n % 2 == 0 {
        return 0.0;
    }
    let k = n / 2;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    sign * 2.0 * (2f64.sqrt() - 1.0).powi(n as i32) / n as f64
}

fn erf_coeff(n: usize) -> f64 {
    if n % 2 == 0 {
        return 0.0;
    }
    let k = n / 2;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    sign * 2.0 / std::f64::consts::PI.sqrt() * (-0.5f64).exp()
        * (bessel_i(k, 0.5) + bessel_i(k + 1, 0.5))
        / n as f64
}

fn arctanh_coeff(n: usize) -> f64 {
    if n % 2 == 0 {
        0.0
    } else {
        2.0 / n as f64
    }
}

fn arccos_coeff(n: usize) -> f64 {
    use std::f64::consts::PI;
    match n {
        0 => PI,
        _ if n % 2 == 0 => 0.0,
        _ => -4.0 / (PI * (n * n) as f64),
    }
}

/// `c_{2k} = 2Γ(k+1/4) / (√π Γ(k+3/4))`, odd coefficients vanish.
fn quarter_coeff(n: usize) -> f64 {
    if n % 2 == 1 {
        return 0.0;
    }
    let k = (n / 2) as f64;
    2.0 / std::f64::consts::PI.sqrt() * (ln_gamma(k + 0.25) - ln_gamma(k + 0.75)).exp()
}

pub fn catalog() -> Vec<CatalogFunction> {
    vec![
        CatalogFunction {
            name: "exp",
            description: "exp(x)",
            eval: f64::exp,
            operator_text: "Dx - 1",
            operator: &[&[-1], &[1]],
            premultiplier: None,
            known_coeffs: Some(exp_coeff),
            parity: None,
            source: CoeffSource::Quadrature,
            nodes: 128,
        },
        CatalogFunction {
            name: "arctan",
            description: "arctan(x)",
            eval: f64::atan,
            operator_text: "(x^2+1)*Dx^2 + 2*x*Dx",
            operator: &[&[], &[0, 2], &[1, 0, 1]],
            premultiplier: None,
            known_coeffs: Some(arctan_coeff),
            parity: Some(Parity::Odd),
            source: CoeffSource::Quadrature,
            nodes: 256,
        },
        CatalogFunction {
            name: "erf",
            description: "erf(x)",
            eval: erf,
            operator_text: "Dx^2 + 2*x*Dx",
            operator: &[&[], &[0, 2], &[1]],
            premultiplier: None,
            known_coeffs: Some(erf_coeff),
            parity: Some(Parity::Odd),
            source: CoeffSource::Quadrature,
            nodes: 128,
        },
        CatalogFunction {
            name: "arctanh",
            description: "arctanh(x)",
            eval: f64::atanh,
            operator_text: "(x^2-1)*Dx^2 + 2*x*Dx",
            operator: &[&[], &[0, 2], &[-1, 0, 1]],
            premultiplier: None,
            known_coeffs: Some(arctanh_coeff),
            parity: Some(Parity::Odd),
            source: CoeffSource::ClosedForm,
            nodes: 1 << 16,
        },
        CatalogFunction {
            name: "arccos",
            description: "arccos(x); verified with (1-x^2)*L",
            eval: f64::acos,
            operator_text: "(1-x^2)*Dx^2 - x*Dx",
            operator: &[&[], &[0, -1], &[1, 0, -1]],
            premultiplier: Some(&[1, 0, -1]),
            known_coeffs: Some(arccos_coeff),
            parity: None,
            source: CoeffSource::Quadrature,
            nodes: 1 << 17,
        },
        CatalogFunction {
            name: "quarter",
            description: "(1-x^2)^(-1/4)",
            eval: |x| (1.0 - x * x).powf(-0.25),
            operator_text: "2*(1-x^2)*Dx - x",
            operator: &[&[0, -1], &[2, 0, -2]],
            premultiplier: None,
            known_coeffs: Some(quarter_coeff),
            parity: Some(Parity::Even),
            source: CoeffSource::ClosedForm,
            nodes: 1 << 16,
        },
    ]
}

pub fn lookup(name: &str) -> Result<CatalogFunction> {
    catalog()
        .into_iter()
        .find(|f| f.name.eq_ignore_ascii_case(name.trim()))
        .ok_or_else(|| Error::UnknownFunction(name.to_string()))
}
