use std::fmt;

use serde::{Serialize, Serializer};

use super::FreeWord;
use crate::error::{Error, Result};

/// Index of `Ker λ` for `λ_a = θ^{l(a)}`: the order of `θ`, or infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Modulus {
    Finite(u64),
    Infinite,
}

/// Named free generators of `Ker λ` over the transversal `{x1^k}`:
/// `z_{j,k} = x1^k x_j x1^{-k-1}` and, for a finite modulus `n`, `y_i = x1^{n-1} x_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchreierGen {
    Z { j: usize, k: i64 },
    Y { i: usize },
}

impl fmt::Display for SchreierGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchreierGen::Z { j, k } => write!(f, "z{{{j},{k}}}"),
            SchreierGen::Y { i } => write!(f, "y{i}"),
        }
    }
}

impl Serialize for SchreierGen {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug)]
pub struct SchreierRewriter {
    pub rank: usize,
    pub modulus: Modulus,
}

impl SchreierRewriter {
    pub fn new(rank: usize, modulus: Modulus) -> Self {
        Self { rank, modulus }
    }

    fn x1(&self, k: i64) -> FreeWord {
        FreeWord::generator(self.rank, 1, k)
    }

    fn coset(&self, k: i64) -> i64 {
        match self.modulus {
            Modulus::Finite(n) => k.rem_euclid(n as i64),
            Modulus::Infinite => k,
        }
    }

    /// The Schreier generator of the pair (coset `x1^k`, letter `x_j`), or
    /// `None` when it is trivial.
    pub fn generator_for(&self, k: i64, j: usize) -> Option<SchreierGen> {
        match self.modulus {
            Modulus::Finite(n) if k == n as i64 - 1 => Some(SchreierGen::Y { i: j }),
            _ if j == 1 => None,
            _ => Some(SchreierGen::Z { j, k }),
        }
    }

    pub fn expand_gen(&self, g: SchreierGen) -> FreeWord {
        match g {
            SchreierGen::Z { j: 1, .. } => FreeWord::identity(self.rank),
            SchreierGen::Z { j, k } => {
                self.x1(k).mul_unchecked(&FreeWord::generator(self.rank, j, 1)).mul_unchecked(&self.x1(-k - 1))
            }
            SchreierGen::Y { i } => {
                let n = match self.modulus {
                    Modulus::Finite(n) => n as i64,
                    Modulus::Infinite => panic!("y_i needs a finite modulus"),
                };
                self.x1(n - 1).mul_unchecked(&FreeWord::generator(self.rank, i, 1))
            }
        }
    }

    pub fn expand(&self, gens: &[(SchreierGen, i64)]) -> FreeWord {
        gens.iter().fold(FreeWord::identity(self.rank), |acc, &(g, e)| acc.mul_unchecked(&self.expand_gen(g).pow(e)))
    }

    /// The nontrivial Schreier generators for a finite modulus.
    pub fn generators(&self) -> Vec<SchreierGen> {
        let n = match self.modulus {
            Modulus::Finite(n) => n as i64,
            Modulus::Infinite => return Vec::new(),
        };
        let mut out: Vec<SchreierGen> =
            (0..n).flat_map(|k| (1..=self.rank).filter_map(move |j| self.generator_for(k, j))).collect();
        out.retain(|&g| !self.expand_gen(g).is_identity());
        out.sort();
        out
    }

    /// Rewrites a kernel word as a product of Schreier generators by a left
    /// to right scan over cosets; the expansion is checked against `w`.
    pub fn rewrite(&self, w: &FreeWord) -> Result<Vec<(SchreierGen, i64)>> {
        let l = w.exp_sum();
        if self.coset(l) != 0 {
            return Err(Error::NotInKernel(l));
        }
        let mut out: Vec<(SchreierGen, i64)> = Vec::new();
        let mut emit = |g: Option<SchreierGen>, e: i64| {
            if let Some(g) = g {
                match out.last_mut() {
                    Some(last) if last.0 == g => {
                        last.1 += e;
                        if last.1 == 0 {
                            out.pop();
                        }
                    }
                    _ => out.push((g, e)),
                }
            }
        };
        let mut k = 0i64;
        for &(j, e) in w.syllables() {
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    emit(self.generator_for(k, j), 1);
                    k = self.coset(k + 1);
                } else {
                    k = self.coset(k - 1);
                    emit(self.generator_for(k, j), -1);
                }
            }
        }
        let back = self.expand(&out);
        if &back != w {
            return Err(Error::FormulaMismatch { id: "schreier_round_trip".into(), lhs: back.to_string(), rhs: w.to_string() });
        }
        Ok(out)
    }
}
