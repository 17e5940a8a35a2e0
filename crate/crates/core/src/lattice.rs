//! The brace system on ℤ² driven by `λ_a = M^{s(a)}`, `s(a) = a₁ + a₂`,
//! where `M` sends `x₁ ↦ (1+p)x₁ − p x₂` and `x₂ ↦ p x₁ + (1−p)x₂`.

use rand::{Rng, SeedableRng};
use rand_pcg::Lcg64Xsh32;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeVector(pub i64, pub i64);

fn add(x: i64, y: i64) -> Result<i64> {
    x.checked_add(y).ok_or(Error::Overflow)
}

fn mul(x: i64, y: i64) -> Result<i64> {
    x.checked_mul(y).ok_or(Error::Overflow)
}

impl LatticeVector {
    pub const ZERO: Self = Self(0, 0);

    pub fn s(&self) -> Result<i64> {
        add(self.0, self.1)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Ok(Self(add(self.0, o.0)?, add(self.1, o.1)?))
    }

    pub fn neg(&self) -> Result<Self> {
        Ok(Self(self.0.checked_neg().ok_or(Error::Overflow)?, self.1.checked_neg().ok_or(Error::Overflow)?))
    }
}

/// A 2×2 integer matrix acting on column vectors, rows first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeAuto(pub [[i64; 2]; 2]);

impl LatticeAuto {
    pub const IDENTITY: Self = Self([[1, 0], [0, 1]]);

    pub fn det(&self) -> Result<i64> {
        let [[a, b], [c, d]] = self.0;
        mul(a, d)?.checked_sub(mul(b, c)?).ok_or(Error::Overflow)
    }

    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector> {
        let [[a, b], [c, d]] = self.0;
        Ok(LatticeVector(add(mul(a, v.0)?, mul(b, v.1)?)?, add(mul(c, v.0)?, mul(d, v.1)?)?))
    }

    pub fn compose(&self, o: &Self) -> Result<Self> {
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = add(mul(self.0[i][0], o.0[0][j])?, mul(self.0[i][1], o.0[1][j])?)?;
            }
        }
        Ok(Self(out))
    }

    fn minus_identity(&self) -> Self {
        let [[a, b], [c, d]] = self.0;
        Self([[a - 1, b], [c, d - 1]])
    }

    /// `M^k = I + k(M − I)`, valid since `(M − I)² = 0`.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let [[a, b], [c, d]] = self.minus_identity().0;
        Ok(Self([[add(1, mul(k, a)?)?, mul(k, b)?], [mul(k, c)?, add(1, mul(k, d)?)?]]))
    }

    fn pow_by_multiplication(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.pow(-1)? } else { *self };
        let mut out = Self::IDENTITY;
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base)?;
        }
        Ok(out)
    }
}

pub fn lattice_lambda(p: i64) -> Result<LatticeAuto> {
    let one_plus = add(1, p)?;
    let one_minus = 1i64.checked_sub(p).ok_or(Error::Overflow)?;
    let m = LatticeAuto([[one_plus, p], [p.checked_neg().ok_or(Error::Overflow)?, one_minus]]);
    let n = m.minus_identity();
    assert_eq!(n.compose(&n)?, LatticeAuto([[0, 0], [0, 0]]), "(M - I)^2 != 0");
    Ok(m)
}

/// `a ∘_i b = a + M^{i·s(a)} b`.
pub fn lattice_circ(a: &LatticeVector, b: &LatticeVector, p: i64, level: i64) -> Result<LatticeVector> {
    let m = lattice_lambda(p)?;
    a.add(&m.pow(mul(level, a.s()?)?)?.apply(b)?)
}

/// `∘_0 = +`, `a ∘_{i+1} b = a ∘_i λ_a(b)`.
pub fn lattice_circ_iterated(a: &LatticeVector, b: &LatticeVector, p: i64, level: u32) -> Result<LatticeVector> {
    let lam = lattice_lambda(p)?.pow_by_multiplication(a.s()?)?;
    let mut arg = *b;
    for _ in 0..level {
        arg = lam.apply(&arg)?;
    }
    a.add(&arg)
}

fn circ_inverse(a: &LatticeVector, p: i64, level: i64) -> Result<LatticeVector> {
    let m = lattice_lambda(p)?;
    m.pow(mul(-level, a.s()?)?)?.apply(a)?.neg()
}

fn circ_pow(a: &LatticeVector, k: i64, p: i64, level: i64) -> Result<LatticeVector> {
    let mut base = if k < 0 { circ_inverse(a, p, level)? } else { *a };
    let mut out = LatticeVector::ZERO;
    let mut e = k.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            out = lattice_circ(&out, &base, p, level)?;
        }
        base = lattice_circ(&base, &base, p, level)?;
        e >>= 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub level: i64,
    pub closed_form_failures: usize,
    pub associativity_failures: usize,
    pub inverse_failures: usize,
    pub commutativity_failures: usize,
    pub torsion_failures: usize,
    pub generation_failures: usize,
    /// Failures of the brace law for `(ℤ², ∘_j, ∘_level)` over all `j < level`.
    pub compatibility_failures: usize,
}

impl LevelReport {
    fn failures(&self) -> usize {
        self.closed_form_failures
            + self.associativity_failures
            + self.inverse_failures
            + self.commutativity_failures
            + self.torsion_failures
            + self.generation_failures
            + self.compatibility_failures
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub p: i64,
    pub depth: u32,
    pub samples: usize,
    pub seed: u64,
    pub lambda_hom_failures: usize,
    pub kernel_condition_failures: usize,
    pub levels: Vec<LevelReport>,
}

impl LatticeReport {
    pub fn failures(&self) -> usize {
        self.lambda_hom_failures + self.kernel_condition_failures + self.levels.iter().map(|l| l.failures()).sum::<usize>()
    }
}

const SAMPLE_RADIUS: i64 = 20;

/// Sampled checks that every `∘_i`, `i ≤ depth`, is an abelian group operation
/// generated by `e₁, e₂` without torsion, and that `(ℤ², ∘_j, ∘_i)` is a brace for `j < i`.
pub fn lattice_system_check(p: i64, depth: u32, samples: usize, seed: u64) -> Result<LatticeReport> {
    if depth > 8 {
        return Err(Error::PreconditionFails(format!("depth {depth} exceeds 8")));
    }
    let m = lattice_lambda(p)?;
    let mut rng = Lcg64Xsh32::seed_from_u64(seed);
    let mut vec = || LatticeVector(rng.random_range(-SAMPLE_RADIUS..=SAMPLE_RADIUS), rng.random_range(-SAMPLE_RADIUS..=SAMPLE_RADIUS));
    let triples: Vec<[LatticeVector; 3]> = (0..samples).map(|_| [vec(), vec(), vec()]).collect();
    let mut report = LatticeReport {
        p,
        depth,
        samples,
        seed,
        lambda_hom_failures: 0,
        kernel_condition_failures: 0,
        levels: Vec::new(),
    };
    for [a, b, _] in &triples {
        let (sa, sb) = (a.s()?, b.s()?);
        if m.pow(add(sa, sb)?)? != m.pow(sa)?.compose(&m.pow(sb)?)? {
            report.lambda_hom_failures += 1;
        }
        let moved = m.pow(sa)?.apply(b)?;
        if moved.add(&b.neg()?)?.s()? != 0 {
            report.kernel_condition_failures += 1;
        }
    }
    let (e1, e2) = (LatticeVector(1, 0), LatticeVector(0, 1));
    for level in 0..=depth as i64 {
        let op = |x: &LatticeVector, y: &LatticeVector| lattice_circ(x, y, p, level);
        let mut r = LevelReport { level, ..Default::default() };
        for [a, b, c] in &triples {
            if level <= 4 && op(a, b)? != lattice_circ_iterated(a, b, p, level as u32)? {
                r.closed_form_failures += 1;
            }
            if op(&op(a, b)?, c)? != op(a, &op(b, c)?)? {
                r.associativity_failures += 1;
            }
            let ai = circ_inverse(a, p, level)?;
            if op(a, &ai)? != LatticeVector::ZERO || op(&ai, a)? != LatticeVector::ZERO || op(a, &LatticeVector::ZERO)? != *a
            {
                r.inverse_failures += 1;
            }
            if op(a, b)? != op(b, a)? {
                r.commutativity_failures += 1;
            }
            if *a != LatticeVector::ZERO && (1..=6).any(|k| circ_pow(a, k, p, level).map(|v| v == LatticeVector::ZERO).unwrap_or(true)) {
                r.torsion_failures += 1;
            }
            // a = e₁^{∘α} ∘ e₂^{∘β} with α + β = s(a)
            let s = a.s()?;
            let q = mul(level, p)?;
            let beta = add(s - a.0, mul(q, mul(s, s - 1)? / 2)?)?;
            let alpha = s - beta;
            if op(&circ_pow(&e1, alpha, p, level)?, &circ_pow(&e2, beta, p, level)?)? != *a {
                r.generation_failures += 1;
            }
            for j in 0..level {
                let add_op = |x: &LatticeVector, y: &LatticeVector| lattice_circ(x, y, p, j);
                let lhs = op(a, &add_op(b, c)?)?;
                let rhs = add_op(&add_op(&op(a, b)?, &circ_inverse(a, p, j)?)?, &op(a, c)?)?;
                if lhs != rhs {
                    r.compatibility_failures += 1;
                }
            }
        }
        report.levels.push(r);
    }
    Ok(report)
}
