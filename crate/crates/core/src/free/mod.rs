//! Free groups `F_n` on `x1, …, xn`, words kept in syllable normal form.

mod auto;
mod rb;
mod sample;
mod schreier;
mod theorems;

pub use auto::{circ_eval, FreeAutomorphism, HolElement};
pub use rb::{free_rb_check, free_rb_example, FreeRbCheck, FreeRbOp, RbKind};
pub use sample::{sampled_brace_check, BraceSampleReport, SampleFailure, WordSampler};
pub use schreier::{Modulus, SchreierGen, SchreierRewriter};
pub use theorems::{verify_cyclic1, verify_t4, Cyclic1Report, FormulaCheck, T4Report, DEFAULT_T4_WINDOW};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    /// `(generator, exponent)` with generators `1..=rank`, exponents nonzero,
    /// and no two neighbours on the same generator.
    syllables: Vec<(usize, i64)>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        Self { rank, syllables: Vec::new() }
    }

    /// `x_i^e`.
    pub fn generator(rank: usize, i: usize, e: i64) -> Self {
        assert!((1..=rank).contains(&i), "generator x{i} outside rank {rank}");
        Self::from_syllables(rank, [(i, e)])
    }

    pub fn from_syllables(rank: usize, syllables: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Self::identity(rank);
        for (g, e) in syllables {
            assert!((1..=rank).contains(&g), "generator x{g} outside rank {rank}");
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters `x_i^{±1}`.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|s| s.1.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Exponent sum `l(w)`.
    pub fn exp_sum(&self) -> i64 {
        self.syllables.iter().map(|s| s.1).sum()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &(g, e) in &other.syllables {
            out.push(g, e);
        }
        out
    }

    pub fn inv(&self) -> Self {
        Self { rank: self.rank, syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut out = Self::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            out = out.mul_unchecked(&base);
        }
        out
    }

    /// Product of a list of words of one rank.
    pub fn product<'a>(rank: usize, words: impl IntoIterator<Item = &'a FreeWord>) -> Self {
        words.into_iter().fold(Self::identity(rank), |acc, w| acc.mul_unchecked(w))
    }

    /// Substitutes `x_i ↦ images[i-1]` letter by letter.
    pub fn substitute(&self, images: &[FreeWord]) -> Self {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = Self::identity(rank);
        for &(g, e) in &self.syllables {
            out = out.mul_unchecked(&images[g - 1].pow(e));
        }
        out
    }

    /// Parses `"x1 x2^-1 x1^3"`; `"e"`, `"1"` or blank mean the identity.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut w = Self::identity(rank);
        let mut pos = 0;
        for token in text.split_whitespace() {
            let at = text[pos..].find(token).map_or(pos, |i| pos + i);
            pos = at + token.len();
            if token == "e" || token == "1" {
                continue;
            }
            let err = |msg: &str| Error::Parse { pos: at, msg: format!("{msg} in {token:?}") };
            let body = token.strip_prefix('x').ok_or_else(|| err("expected x<i>"))?;
            let (gen, exp) = match body.split_once('^') {
                Some((g, e)) => (g, e.parse::<i64>().map_err(|_| err("bad exponent"))?),
                None => (body, 1),
            };
            let gen: usize = gen.parse().map_err(|_| err("bad generator index"))?;
            if gen == 0 || gen > rank {
                return Err(err(&format!("generator outside rank {rank}")));
            }
            w.push(gen, exp);
        }
        Ok(w)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if e == 1 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "x{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses with the rank taken from the largest generator index present.
impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let rank = text
            .split_whitespace()
            .filter_map(|t| t.strip_prefix('x'))
            .filter_map(|t| t.split('^').next()?.parse::<usize>().ok())
            .max()
            .unwrap_or(1);
        Self::parse(text, rank.max(1))
    }
}
