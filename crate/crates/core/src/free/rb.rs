use serde::Serialize;

use super::{FreeWord, WordSampler};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RbKind {
    Homomorphism,
    AntiHomomorphism,
}

/// A self-map of `F_n` given by generator images, extended multiplicatively
/// (or anti-multiplicatively).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeRbOp {
    pub rank: usize,
    pub images: Vec<FreeWord>,
    pub kind: RbKind,
}

impl FreeRbOp {
    pub fn new(images: Vec<FreeWord>, kind: RbKind) -> Result<Self> {
        let rank = images.len();
        if let Some(w) = images.iter().find(|w| w.rank() != rank) {
            return Err(Error::RankMismatch(rank, w.rank()));
        }
        Ok(Self { rank, images, kind })
    }

    /// `B(x_i) = x1` for every generator.
    pub fn exponent_sum_operator(rank: usize) -> Self {
        Self { rank, images: vec![FreeWord::generator(rank, 1, 1); rank], kind: RbKind::Homomorphism }
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        match self.kind {
            RbKind::Homomorphism => w.substitute(&self.images),
            RbKind::AntiHomomorphism => {
                FreeWord::from_syllables(w.rank(), w.syllables().iter().rev().copied()).substitute(&self.images)
            }
        }
    }

    /// `B(g)B(h)` and `B(g B(g) h B(g)⁻¹)`.
    pub fn rb_sides(&self, g: &FreeWord, h: &FreeWord) -> (FreeWord, FreeWord) {
        let bg = self.apply(g);
        let lhs = bg.mul_unchecked(&self.apply(h));
        let rhs = self.apply(&FreeWord::product(self.rank, [g, &bg, h, &bg.inv()]));
        (lhs, rhs)
    }

    /// First failing pair among `samples` seeded pairs.
    pub fn rb_witness(&self, samples: usize, seed: u64) -> Option<(FreeWord, FreeWord)> {
        let mut rng = WordSampler::new(self.rank, 8, seed);
        (0..samples).map(|_| (rng.word(), rng.word())).find(|(g, h)| {
            let (l, r) = self.rb_sides(g, h);
            l != r
        })
    }
}

/// `a ∘_m b = a x1^{m·l(a)} b x1^{-m·l(a)}`.
pub fn free_rb_example(m: i64, a: &FreeWord, b: &FreeWord) -> Result<FreeWord> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(a.rank(), b.rank()));
    }
    let c = FreeWord::generator(a.rank(), 1, m.checked_mul(a.exp_sum()).ok_or(Error::Overflow)?);
    Ok(FreeWord::product(a.rank(), [a, &c, b, &c.inv()]))
}

fn circ_inverse(m: i64, a: &FreeWord) -> FreeWord {
    let c = FreeWord::generator(a.rank(), 1, m * a.exp_sum());
    FreeWord::product(a.rank(), [&c.inv(), &a.inv(), &c])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionStep {
    pub m: i64,
    /// Failures of `B` as an RB operator on `(F_2, ∘_m)`.
    pub rb_failures: usize,
    /// Pairs where `x ∘_m B(x) ∘_m y ∘_m B(x)^{∘_m(-1)}` differs from `∘_{m+1}`.
    pub next_level_mismatches: usize,
    /// Same, against `∘_{2m+1}`.
    pub doubled_level_mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeRbCheck {
    pub samples: usize,
    pub seed: u64,
    pub rb_failures: usize,
    /// `(m, failures)` of the compatibility of `(∘_m, ∘_{m+1})`.
    pub consecutive_failures: Vec<(i64, usize)>,
    pub recursion: Vec<RecursionStep>,
}

impl FreeRbCheck {
    pub fn consecutive_ok(&self) -> bool {
        self.rb_failures == 0 && self.consecutive_failures.iter().all(|c| c.1 == 0)
    }
}

/// Sampled checks of the operator `B(x1) = B(x2) = x1` on `F_2` and the
/// family `∘_m` for `0 ≤ m ≤ max_m`.
pub fn free_rb_check(max_m: i64, samples: usize, seed: u64) -> Result<FreeRbCheck> {
    let b = FreeRbOp::exponent_sum_operator(2);
    let mut rng = WordSampler::new(2, 8, seed);
    let triples: Vec<[FreeWord; 3]> = (0..samples).map(|_| [rng.word(), rng.word(), rng.word()]).collect();

    let rb_failures = triples
        .iter()
        .filter(|[g, h, _]| {
            let (l, r) = b.rb_sides(g, h);
            l != r
        })
        .count();

    let op = |m: i64, x: &FreeWord, y: &FreeWord| free_rb_example(m, x, y);
    let mut consecutive_failures = Vec::new();
    let mut recursion = Vec::new();
    for m in 0..=max_m {
        let mut fails = 0;
        let mut step = RecursionStep { m, rb_failures: 0, next_level_mismatches: 0, doubled_level_mismatches: 0 };
        for [a, x, c] in &triples {
            // a ∘_{m+1} (x ∘_m c) = (a ∘_{m+1} x) ∘_m a^{∘_m(-1)} ∘_m (a ∘_{m+1} c)
            let lhs = op(m + 1, a, &op(m, x, c)?)?;
            let rhs = op(m, &op(m, &op(m + 1, a, x)?, &circ_inverse(m, a))?, &op(m + 1, a, c)?)?;
            fails += usize::from(lhs != rhs);

            let ba = b.apply(a);
            let derived = op(m, &op(m, &op(m, a, &ba)?, x)?, &circ_inverse(m, &ba))?;
            step.rb_failures += usize::from(op(m, &ba, &b.apply(x))? != b.apply(&derived));
            step.next_level_mismatches += usize::from(derived != op(m + 1, a, x)?);
            step.doubled_level_mismatches += usize::from(derived != op(2 * m + 1, a, x)?);
        }
        consecutive_failures.push((m, fails));
        recursion.push(step);
    }
    Ok(FreeRbCheck { samples, seed, rb_failures, consecutive_failures, recursion })
}
