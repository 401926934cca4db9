//! Code-capacity Monte Carlo: i.i.d. depolarizing errors on data qubits,
//! perfect syndromes, lookup-table decoding.
//!
//! Shots are grouped in fixed blocks of [`SHOTS_PER_BLOCK`]. Block `b` draws
//! from ChaCha8 seeded with `seed` on stream `b`, so a run is reproducible
//! from `(seed, p, shots)` regardless of how blocks are scheduled.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decoder::{classify_trivial_syndrome, syndrome_index, DecoderTable};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::pauli::{Letter, PauliOperator};
use crate::stabcode::StabilizerCode;

pub const SHOTS_PER_BLOCK: u64 = 4096;

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959_963_984_540_054;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseModel {
    p: f64,
}

impl NoiseModel {
    /// Each qubit independently suffers X, Y or Z with probability `p/3`
    /// each.
    pub fn depolarizing(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        Ok(NoiseModel { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn sample_error<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> PauliOperator {
        let mut e = PauliOperator::identity(n);
        self.sample_into(&mut e, rng);
        e
    }

    fn sample_into<R: Rng + ?Sized>(&self, e: &mut PauliOperator, rng: &mut R) {
        e.clear();
        for q in 0..e.n() {
            if rng.gen::<f64>() < self.p {
                e.set_letter(q, Letter::NONTRIVIAL[rng.gen_range(0..3)]);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimReport {
    pub p: f64,
    pub shots: u64,
    pub failures: u64,
    pub ler: f64,
    /// 95% Wilson score interval for the logical error rate.
    pub wilson_interval: (f64, f64),
    pub seed: u64,
}

impl SimReport {
    /// `p shots failures ler lo hi seed`
    pub fn to_line(&self) -> String {
        format!(
            "{} {} {} {:.6e} {:.6e} {:.6e} {}",
            self.p,
            self.shots,
            self.failures,
            self.ler,
            self.wilson_interval.0,
            self.wilson_interval.1,
            self.seed
        )
    }
}

impl fmt::Display for SimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// 95% Wilson score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = Z95 / denom * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
    let lo = if successes == 0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if successes == trials { 1.0 } else { (center + half).min(1.0) };
    (lo, hi)
}

/// Least-squares slope of `ln y` against `ln x`. `None` with fewer than two
/// points or any non-positive coordinate.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let m = logs.len() as f64;
    let mx = logs.iter().map(|l| l.0).sum::<f64>() / m;
    let my = logs.iter().map(|l| l.1).sum::<f64>() / m;
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

fn run_block(
    code: &StabilizerCode,
    table: &DecoderTable,
    model: &NoiseModel,
    seed: u64,
    block: u64,
    shots: u64,
) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    let mut e = PauliOperator::identity(code.n());
    let mut failures = 0;
    for _ in 0..shots {
        model.sample_into(&mut e, &mut rng);
        let correction = table.entry(syndrome_index(code, &e));
        e.xor_pattern(correction);
        if !classify_trivial_syndrome(code, &e).is_success() {
            failures += 1;
        }
    }
    failures
}

pub fn run(
    code: &StabilizerCode,
    table: &DecoderTable,
    model: &NoiseModel,
    shots: u64,
    seed: u64,
    exec: Exec,
) -> Result<SimReport> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let blocks = shots.div_ceil(SHOTS_PER_BLOCK);
    let failures = exec.sum_indexed(blocks, |b| {
        let len = SHOTS_PER_BLOCK.min(shots - b * SHOTS_PER_BLOCK);
        run_block(code, table, model, seed, b, len)
    });
    Ok(SimReport {
        p: model.p(),
        shots,
        failures,
        ler: failures as f64 / shots as f64,
        wilson_interval: wilson_interval(failures, shots),
        seed,
    })
}

/// Decodes every error of weight `<= max_weight` (identity included).
/// Returns `(trials, failures)`.
pub fn inject_exhaustive(
    code: &StabilizerCode,
    table: &DecoderTable,
    max_weight: usize,
) -> (u64, u64) {
    let mut trials = 0;
    let mut failures = 0;
    let errors = (0..=max_weight.min(code.n()))
        .flat_map(|w| PauliOperator::all_of_weight(code.n(), w));
    for mut e in errors {
        trials += 1;
        e.xor_pattern(table.entry(syndrome_index(code, &e)));
        if !classify_trivial_syndrome(code, &e).is_success() {
            failures += 1;
        }
    }
    (trials, failures)
}
