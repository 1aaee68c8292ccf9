//! Printable and serializable form of a recurrence.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::chebrec::RecurrenceResult;
use crate::error::{Error, Result};
use crate::field::{BigRat, RatFunc, RatPoly};
use crate::ore::RecOp;

/// `Q = Σ_j q_j(n) S^{lo+j}` with rational coefficients written as strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DenominatorDoc {
    pub lo: i64,
    pub coefficients: Vec<Vec<String>>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceDocument {
    pub algorithm: String,
    pub input: String,
    pub recurrence: String,
    pub order: usize,
    /// The equation is printed for `operator` shifted by `S^support_offset`.
    pub support_offset: i64,
    /// Row `j` lists the coefficient of `c[n+j]` in ascending powers of n.
    pub coefficients: Vec<Vec<Number>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator: Option<DenominatorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prescale: Option<String>,
    pub reduced: bool,
    pub disclaimer: String,
    pub timing_ms: f64,
    pub op_count: u64,
}

fn index(j: i64) -> String {
    match j {
        0 => "c[n]".into(),
        j if j > 0 => format!("c[n+{j}]"),
        j => format!("c[n{j}]"),
    }
}

/// `Σ_j r_j(n) c[n+j+offset] = 0` with terms in ascending index order.
pub fn equation(op: &RecOp, offset: i64) -> String {
    let op = op.shift_left(offset);
    let mut out = String::new();
    for (j, r) in op.terms() {
        let p = r.num();
        let c = index(j);
        let single = p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        let neg = single && p.lead().is_negative();
        let body = if single {
            let a = if neg { -p } else { p.clone() };
            match a.fmt_var("n").as_str() {
                "1" => c,
                s => format!("{s}*{c}"),
            }
        } else {
            format!("({})*{c}", p.fmt_var("n"))
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out.push_str(" = 0");
    out
}

fn int_number(v: &BigInt) -> Number {
    Number::from_str(&v.to_string()).expect("integer literal")
}

impl RecurrenceDocument {
    pub fn new(
        r: &RecurrenceResult,
        input: &str,
        centered: bool,
        reduced: bool,
        timing_ms: f64,
        op_count: u64,
    ) -> Result<Self> {
        let offset = if centered { -(r.order as i64 / 2) } else { 0 };
        let table = r
            .operator
            .integer_table()
            .ok_or_else(|| Error::Internal("operator is not integral".into()))?;
        let denominator = (r.algorithm == crate::chebrec::Algorithm::Lewanowicz).then(|| {
            let q = &r.denominator;
            DenominatorDoc {
                lo: q.lo(),
                coefficients: q
                    .coeffs()
                    .iter()
                    .map(|c| c.num().coeffs().iter().map(|v| v.to_string()).collect())
                    .collect(),
                text: q.to_string(),
            }
        });
        Ok(RecurrenceDocument {
            algorithm: r.algorithm.name().into(),
            input: input.into(),
            recurrence: equation(&r.operator, offset),
            order: r.order,
            support_offset: offset,
            coefficients: table
                .iter()
                .map(|row| row.iter().map(int_number).collect())
                .collect(),
            denominator,
            prescale: (!r.prescale.is_one()).then(|| r.prescale.fmt_var("x")),
            reduced,
            disclaimer: r.hypothesis_note.into(),
            timing_ms,
            op_count,
        })
    }

    /// The normalized operator described by `coefficients`.
    pub fn operator(&self) -> Result<RecOp> {
        parse_table(&self.coefficients)
    }

    /// The denominator, when present.
    pub fn denominator_op(&self) -> Result<Option<RecOp>> {
        let Some(d) = &self.denominator else {
            return Ok(None);
        };
        let coeffs = d
            .coefficients
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_rat(s))
                    .collect::<Result<Vec<_>>>()
                    .map(|v| RatFunc::from_poly(RatPoly::new(v)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(RecOp::new(d.lo, coeffs)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let rows: Vec<String> = self
            .coefficients
            .iter()
            .map(|r| {
                let items: Vec<String> = r.iter().map(Number::to_string).collect();
                format!("[{}]", items.join(", "))
            })
            .collect();
        let mut out = format!(
            "algorithm:    {}{}\ninput:        {}\nrecurrence:   {}\norder:        {}\ncoefficients: [{}]\n",
            self.algorithm,
            if self.reduced { " (reduced)" } else { "" },
            self.input,
            self.recurrence,
            self.order,
            rows.join(", "),
        );
        if let Some(d) = &self.denominator {
            out.push_str(&format!("denominator:  {}\n", d.text));
        }
        if let Some(p) = &self.prescale {
            out.push_str(&format!("prescale:     {p}\n"));
        }
        out.push_str(&format!(
            "cost:         {:.3} ms, {} rational operations\nnote:         {}\n",
            self.timing_ms, self.op_count, self.disclaimer
        ));
        out
    }
}

fn parse_rat(s: &str) -> Result<BigRat> {
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("invalid rational '{s}'"),
    };
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    let a: BigInt = a.trim().parse().map_err(|_| bad())?;
    let b: BigInt = b.trim().parse().map_err(|_| bad())?;
    if b == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRat::new(a, b))
}

/// Operator supported on `[0, m]` from an integer coefficient table.
pub fn parse_table(rows: &[Vec<Number>]) -> Result<RecOp> {
    let coeffs = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    BigInt::from_str(&v.to_string())
                        .map(BigRat::from_integer)
                        .map_err(|_| Error::Parse {
                            pos: 0,
                            msg: format!("non-integer coefficient {v}"),
                        })
                })
                .collect::<Result<Vec<_>>>()
                .map(|v| RatFunc::from_poly(RatPoly::new(v)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RecOp::new(0, coeffs))
}

/// Parses a table written as JSON, e.g. `[[-1], [2, 2], [1]]`.
pub fn parse_table_str(s: &str) -> Result<RecOp> {
    let rows: Vec<Vec<Number>> = serde_json::from_str(s).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    parse_table(&rows)
}
