use rand::{Rng, SeedableRng};
use rand_pcg::Lcg64Xsh32;
use serde::Serialize;

use super::{circ_eval, FreeAutomorphism, FreeWord};
use crate::error::Result;

/// Seeded random reduced words: up to `max_len` syllables, exponents in `[-3, 3] \ {0}`.
pub struct WordSampler {
    rng: Lcg64Xsh32,
    rank: usize,
    max_len: usize,
}

impl WordSampler {
    pub fn new(rank: usize, max_len: usize, seed: u64) -> Self {
        Self { rng: Lcg64Xsh32::seed_from_u64(seed), rank, max_len }
    }

    pub fn word(&mut self) -> FreeWord {
        let len = self.rng.random_range(0..=self.max_len);
        let mut syllables: Vec<(usize, i64)> = Vec::with_capacity(len);
        for _ in 0..len {
            let prev = syllables.last().map(|s| s.0);
            let g = match prev {
                Some(p) if self.rank > 1 => {
                    let g = self.rng.random_range(1..self.rank);
                    if g >= p { g + 1 } else { g }
                }
                _ => self.rng.random_range(1..=self.rank),
            };
            let e = self.rng.random_range(1..=3) * if self.rng.random_bool(0.5) { 1 } else { -1 };
            syllables.push((g, e));
        }
        FreeWord::from_syllables(self.rank, syllables)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleFailure {
    pub check: &'static str,
    pub words: Vec<FreeWord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraceSampleReport {
    pub theta: FreeAutomorphism,
    pub samples: usize,
    pub max_len: usize,
    pub seed: u64,
    pub brace_failures: usize,
    pub symmetry_failures: usize,
    pub inverse_failures: usize,
    pub homomorphism_failures: usize,
    pub witnesses: Vec<SampleFailure>,
}

impl BraceSampleReport {
    pub fn failures(&self) -> usize {
        self.brace_failures + self.symmetry_failures + self.inverse_failures + self.homomorphism_failures
    }
}

const MAX_WITNESSES: usize = 5;

/// Checks on sampled words that `λ_a = θ^{l(a)}` gives a symmetric skew brace:
/// the left brace law, `λ_{a∘b} = λ_{b·a}`, the `∘`-inverse `λ_a⁻¹(a⁻¹)`,
/// and that `θ` is multiplicative.
pub fn sampled_brace_check(theta: &FreeAutomorphism, samples: usize, max_len: usize, seed: u64) -> Result<BraceSampleReport> {
    let mut rng = WordSampler::new(theta.rank, max_len, seed);
    let mut report = BraceSampleReport {
        theta: theta.clone(),
        samples,
        max_len,
        seed,
        brace_failures: 0,
        symmetry_failures: 0,
        inverse_failures: 0,
        homomorphism_failures: 0,
        witnesses: Vec::new(),
    };
    let fail = |report: &mut BraceSampleReport, check: &'static str, words: Vec<FreeWord>| {
        if report.witnesses.len() < MAX_WITNESSES {
            report.witnesses.push(SampleFailure { check, words });
        }
    };
    for _ in 0..samples {
        let (a, b, c) = (rng.word(), rng.word(), rng.word());
        let lhs = circ_eval(&a, &b.mul(&c)?, theta)?;
        let rhs = circ_eval(&a, &b, theta)?.mul(&a.inv())?.mul(&circ_eval(&a, &c, theta)?)?;
        if lhs != rhs {
            report.brace_failures += 1;
            fail(&mut report, "left_brace", vec![a.clone(), b.clone(), c.clone()]);
        }

        let ab = circ_eval(&a, &b, theta)?;
        let ba = b.mul(&a)?;
        if theta.apply_power(ab.exp_sum(), &c)? != theta.apply_power(ba.exp_sum(), &c)? {
            report.symmetry_failures += 1;
            fail(&mut report, "symmetry", vec![a.clone(), b.clone(), c.clone()]);
        }

        let bar = theta.apply_power(-a.exp_sum(), &a.inv())?;
        if !circ_eval(&a, &bar, theta)?.is_identity() || !circ_eval(&bar, &a, theta)?.is_identity() {
            report.inverse_failures += 1;
            fail(&mut report, "circ_inverse", vec![a.clone()]);
        }

        if theta.apply(&a.mul(&b)?)? != theta.apply(&a)?.mul(&theta.apply(&b)?)? {
            report.homomorphism_failures += 1;
            fail(&mut report, "theta_homomorphism", vec![a, b]);
        }
    }
    Ok(report)
}
