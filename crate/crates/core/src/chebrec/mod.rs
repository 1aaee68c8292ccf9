//! Recurrences for Chebyshev coefficients: the morphism `x ↦ X`,
//! `∂_x ↦ D` and four algorithms computing a numerator of `φ(L)`.

pub mod classic;
pub mod dac;
pub mod symbols;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{RatFunc, RatPoly};
use crate::ore::{divmod_left, gcld, DiffOp, RecOp, Unit};

pub use classic::{h_prime_syntactic, lewanowicz_core, paszkowski_core, rebillard_core};
pub use dac::{block_decomposition, dac_core, fast_mul_by_i_power};
pub use symbols::{
    delta, i_power_closed_form, phi_polynomial, r_poly, scaled_i_power_op, to_integral_form,
    x_k, x_op, ChebSymbols,
};

pub const DISCLAIMER: &str = "The recurrence annihilates the Chebyshev coefficients of a solution \
only under analytic hypotheses on that solution, which are not checked. Without them it can fail: \
for arccos, L = (1-x^2)Dx^2 - x*Dx gives the numerator n^2, which does not describe the \
coefficients; multiplying L on the left by (1-x^2) repairs this.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Lewanowicz,
    Paszkowski,
    Rebillard,
    Dac,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Lewanowicz,
        Algorithm::Paszkowski,
        Algorithm::Rebillard,
        Algorithm::Dac,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Lewanowicz => "lewanowicz",
            Algorithm::Paszkowski => "paszkowski",
            Algorithm::Rebillard => "rebillard",
            Algorithm::Dac => "dac",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// A recurrence `operator·c = 0` with its provenance.
#[derive(Clone, Debug)]
pub struct RecurrenceResult {
    pub algorithm: Algorithm,
    /// Normalized numerator: support `[0, m]`, polynomial coefficients,
    /// content 1, positive leading integer. A polynomial factor common to
    /// all coefficients is removed unless the operator is a single term.
    pub operator: RecOp,
    pub order: usize,
    /// `Q` with `φ(L') = Q^{-1}·operator`, where `L'` is the pre-scaled
    /// input. For the integration-based algorithms this is a left unit
    /// times `I^k`.
    pub denominator: RecOp,
    /// `c(x)` such that the algorithm ran on `c(x)·L`.
    pub prescale: RatPoly,
    /// Order of the input differential operator.
    pub diff_order: usize,
    pub hypothesis_note: &'static str,
    /// `(1-x²)^i | p_i` for all `i`.
    pub h_prime: bool,
}

impl RecurrenceResult {
    /// `S^{-⌊m/2⌋}·operator`, supported on `[-⌊m/2⌋, ⌈m/2⌉]`.
    pub fn centered(&self) -> RecOp {
        self.operator.shift_left(-(self.order as i64 / 2))
    }
}

/// Runs `algo` on `l`, clearing coefficient denominators first.
pub fn compute(algo: Algorithm, l: &DiffOp) -> Result<RecurrenceResult> {
    if l.is_zero() {
        return Err(Error::ZeroOperator);
    }
    let (l, prescale) = l.clear_denominators();
    let k = l.order();
    let (numer, den): (RecOp, Option<RecOp>) = match algo {
        Algorithm::Lewanowicz => {
            let (q, p) = lewanowicz_core(&l)?;
            (p, Some(q))
        }
        Algorithm::Paszkowski => (paszkowski_core(&l)?, None),
        Algorithm::Rebillard => (rebillard_core(&l)?, None),
        Algorithm::Dac => {
            let (r, n) = dac_core(&l)?;
            (n.scale_left(&RatFunc::new(RatPoly::one(), r)?), None)
        }
    };
    if numer.is_zero() {
        return Err(Error::Internal("algorithm produced the zero operator".into()));
    }
    let den = den.unwrap_or_else(|| i_power_closed_form(k));
    Ok(finish(algo, numer, den, prescale, k, &l))
}

/// Normal form of a numerator and the left unit producing it.
pub fn recurrence_form(op: &RecOp) -> (RecOp, Unit) {
    if op.terms().count() > 1 {
        op.left_canonical_with_unit()
    } else {
        op.normalized_with_unit()
    }
}

/// Normalizes `den^{-1}·numer` by a common left unit.
fn finish(
    algo: Algorithm,
    numer: RecOp,
    den: RecOp,
    prescale: RatPoly,
    k: usize,
    l: &DiffOp,
) -> RecurrenceResult {
    let (operator, unit) = recurrence_form(&numer);
    RecurrenceResult {
        algorithm: algo,
        order: operator.order(),
        denominator: den.apply_left_unit(&unit),
        operator,
        prescale,
        diff_order: k,
        hypothesis_note: DISCLAIMER,
        h_prime: h_prime_syntactic(l),
    }
}

pub fn lewanowicz(l: &DiffOp) -> Result<RecurrenceResult> {
    compute(Algorithm::Lewanowicz, l)
}

pub fn paszkowski(l: &DiffOp) -> Result<RecurrenceResult> {
    compute(Algorithm::Paszkowski, l)
}

pub fn rebillard(l: &DiffOp) -> Result<RecurrenceResult> {
    compute(Algorithm::Rebillard, l)
}

pub fn dac(l: &DiffOp) -> Result<RecurrenceResult> {
    compute(Algorithm::Dac, l)
}

/// Divides out `g = gcld(operator, denominator)` on the left of both.
pub fn reduce_order(r: &RecurrenceResult) -> Result<RecurrenceResult> {
    let g = gcld(&r.operator, &r.denominator)?;
    if g.is_one() {
        return Ok(r.clone());
    }
    let (p, rp) = divmod_left(&r.operator, &g)?;
    let (q, rq) = divmod_left(&r.denominator, &g)?;
    if !rp.is_zero() || !rq.is_zero() {
        return Err(Error::Internal("gcld does not divide".into()));
    }
    let (operator, unit) = recurrence_form(&p);
    Ok(RecurrenceResult {
        order: operator.order(),
        denominator: q.apply_left_unit(&unit),
        operator,
        ..r.clone()
    })
}
