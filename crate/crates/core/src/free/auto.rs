use serde::Serialize;

use super::FreeWord;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AutoKind {
    /// `x1 ↦ x2 ↦ … ↦ xn ↦ x1`.
    GeneratorCycle,
    /// `u ↦ w u w⁻¹`.
    Inner { word: FreeWord },
    Power { base: Box<FreeAutomorphism>, k: i64 },
    /// Applied right to left.
    Compose { parts: Vec<FreeAutomorphism> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeAutomorphism {
    pub rank: usize,
    pub kind: AutoKind,
}

impl FreeAutomorphism {
    pub fn generator_cycle(rank: usize) -> Self {
        Self { rank, kind: AutoKind::GeneratorCycle }
    }

    pub fn inner(word: FreeWord) -> Self {
        Self { rank: word.rank(), kind: AutoKind::Inner { word } }
    }

    pub fn identity(rank: usize) -> Self {
        Self::inner(FreeWord::identity(rank))
    }

    pub fn power(self, k: i64) -> Self {
        Self { rank: self.rank, kind: AutoKind::Power { base: Box::new(self), k } }
    }

    pub fn compose(rank: usize, parts: Vec<FreeAutomorphism>) -> Result<Self> {
        if let Some(p) = parts.iter().find(|p| p.rank != rank) {
            return Err(Error::RankMismatch(rank, p.rank));
        }
        Ok(Self { rank, kind: AutoKind::Compose { parts } })
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        self.apply_power(1, w)
    }

    /// `θ^k(w)` for any integer `k`.
    pub fn apply_power(&self, k: i64, w: &FreeWord) -> Result<FreeWord> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch(self.rank, w.rank()));
        }
        Ok(self.power_unchecked(k, w))
    }

    fn power_unchecked(&self, k: i64, w: &FreeWord) -> FreeWord {
        if k == 0 {
            return w.clone();
        }
        match &self.kind {
            AutoKind::GeneratorCycle => {
                let n = self.rank as i64;
                let shift = k.rem_euclid(n);
                FreeWord::from_syllables(
                    self.rank,
                    w.syllables().iter().map(|&(g, e)| (((g as i64 - 1 + shift) % n + 1) as usize, e)),
                )
            }
            AutoKind::Inner { word } => {
                let c = word.pow(k);
                c.mul_unchecked(w).mul_unchecked(&c.inv())
            }
            AutoKind::Power { base, k: j } => base.power_unchecked(j * k, w),
            AutoKind::Compose { parts } => {
                let mut out = w.clone();
                for _ in 0..k.unsigned_abs() {
                    if k > 0 {
                        for p in parts.iter().rev() {
                            out = p.power_unchecked(1, &out);
                        }
                    } else {
                        for p in parts {
                            out = p.power_unchecked(-1, &out);
                        }
                    }
                }
                out
            }
        }
    }
}

/// `a ∘ b = a·θ^{l(a)}(b)`, the operation of `λ_a = θ^{l(a)}`.
pub fn circ_eval(a: &FreeWord, b: &FreeWord, theta: &FreeAutomorphism) -> Result<FreeWord> {
    let image = theta.apply_power(a.exp_sum(), b)?;
    a.mul(&image)
}

/// `(θ^p, a)` in `⟨θ⟩ ⋉ F_n`, multiplied by `(f,a)(g,b) = (fg, a·f(b))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolElement {
    pub power: i64,
    pub word: FreeWord,
}

impl HolElement {
    pub fn new(power: i64, word: FreeWord) -> Self {
        Self { power, word }
    }

    /// `(1, w)`.
    pub fn translation(word: FreeWord) -> Self {
        Self { power: 0, word }
    }

    pub fn mul(&self, other: &Self, theta: &FreeAutomorphism) -> Self {
        let moved = theta.power_unchecked(self.power, &other.word);
        Self { power: self.power + other.power, word: self.word.mul_unchecked(&moved) }
    }

    pub fn inv(&self, theta: &FreeAutomorphism) -> Self {
        Self { power: -self.power, word: theta.power_unchecked(-self.power, &self.word.inv()) }
    }

    pub fn pow(&self, k: i64, theta: &FreeAutomorphism) -> Self {
        let base = if k < 0 { self.inv(theta) } else { self.clone() };
        let mut out = Self::translation(FreeWord::identity(self.word.rank()));
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base, theta);
        }
        out
    }

    /// `s⁻¹ x s`.
    pub fn conjugate_by(&self, s: &Self, theta: &FreeAutomorphism) -> Self {
        s.inv(theta).mul(self, theta).mul(s, theta)
    }
}
