//! Seeded random operators and timing of the algorithm cores.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chebrec::{dac_core, lewanowicz_core, paszkowski_core, rebillard_core, Algorithm};
use crate::error::Result;
use crate::field::{ops, RatPoly};
use crate::ore::DiffOp;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random order-`k` operator with integer coefficients in `[-5, 5]` of
/// degree at most `d`; `p_k` is nonzero.
pub fn random_operator(rng: &mut impl Rng, d: usize, k: usize) -> DiffOp {
    let mut coeffs: Vec<RatPoly> = (0..=k)
        .map(|_| {
            let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-5..=5)).collect();
            RatPoly::from_i64s(&c)
        })
        .collect();
    if coeffs[k].is_zero() {
        coeffs[k] = RatPoly::constant(rng.gen_range(1..=5).into());
    }
    DiffOp::from_polys(coeffs)
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub k: usize,
    pub d: usize,
    pub algorithm: Algorithm,
    pub millis: f64,
    pub ops: u64,
    /// S-span of the raw operator.
    pub span: usize,
}

/// Runs the core of `algo` on `l`, returning the raw numerator's span,
/// elapsed time and operation count.
pub fn time_core(algo: Algorithm, l: &DiffOp) -> Result<(usize, f64, u64)> {
    let start = Instant::now();
    let (span, count) = ops::measure(|| -> Result<usize> {
        Ok(match algo {
            Algorithm::Lewanowicz => lewanowicz_core(l)?.1.order(),
            Algorithm::Paszkowski => paszkowski_core(l)?.order(),
            Algorithm::Rebillard => rebillard_core(l)?.order(),
            Algorithm::Dac => dac_core(l)?.1.order(),
        })
    });
    Ok((span?, start.elapsed().as_secs_f64() * 1e3, count))
}

/// One operator per `k` (degree `d`, drawn from a generator seeded by
/// `seed` and `k`), timed under every algorithm in `algos`.
pub fn run_bench(d: usize, ks: &[usize], seed: u64, algos: &[Algorithm]) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &k in ks {
        let l = random_operator(&mut rng(seed ^ (k as u64).wrapping_mul(0x9E37_79B9)), d, k);
        for &algorithm in algos {
            let (span, millis, ops) = time_core(algorithm, &l)?;
            rows.push(BenchRow {
                k,
                d,
                algorithm,
                millis,
                ops,
                span,
            });
        }
    }
    Ok(rows)
}

/// `1, 2, 4, …` up to `kmax`, always including `kmax`.
pub fn doubling(kmax: usize) -> Vec<usize> {
    let mut ks: Vec<usize> = std::iter::successors(Some(1usize), |k| Some(k * 2))
        .take_while(|&k| k <= kmax)
        .collect();
    if ks.last() != Some(&kmax) && kmax > 0 {
        ks.push(kmax);
    }
    ks
}

pub fn format_table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:>4} {:>3} {:<11} {:>12} {:>14} {:>5}\n",
        "k", "d", "algorithm", "time_ms", "ops", "span"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>4} {:>3} {:<11} {:>12.3} {:>14} {:>5}\n",
            r.k,
            r.d,
            r.algorithm.name(),
            r.millis,
            r.ops,
            r.span
        ));
    }
    let ks: Vec<usize> = {
        let mut v: Vec<usize> = rows.iter().map(|r| r.k).collect();
        v.dedup();
        v
    };
    let pick = |k: usize, a: Algorithm| rows.iter().find(|r| r.k == k && r.algorithm == a);
    let mut ratios = Vec::new();
    for k in ks {
        if let (Some(p), Some(q)) = (pick(k, Algorithm::Paszkowski), pick(k, Algorithm::Dac)) {
            ratios.push(format!("k={k}: {:.2}", p.ops as f64 / q.ops.max(1) as f64));
        }
    }
    if !ratios.is_empty() {
        out.push_str(&format!("paszkowski/dac ops: {}\n", ratios.join(", ")));
    }
    out
}
