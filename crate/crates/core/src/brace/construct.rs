use std::str::FromStr;

use serde::Serialize;

use super::{classify, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap};
use crate::perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaMode {
    Homomorphic,
    AntiHomomorphic,
}

impl FromStr for LambdaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "homomorphic" | "hom" => Ok(Self::Homomorphic),
            "anti_homomorphic" | "anti-homomorphic" | "anti" => Ok(Self::AntiHomomorphic),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown lambda mode {s:?}") }),
        }
    }
}

/// Builds `a∘b = a·λ_a(b)` after checking that each `λ_a` is an
/// automorphism, that `λ` is a (anti-)homomorphism from `(G,·)`, and the
/// matching kernel condition.
pub fn construct_from_lambda(g: &FiniteGroup, lam: &[Vec<usize>], mode: LambdaMode) -> Result<SkewBrace> {
    let n = g.order();
    if g.identity() != 0 || lam.len() != n {
        return Err(Error::PreconditionFails("expected one map per element of a group with identity 0".into()));
    }
    for (a, images) in lam.iter().enumerate() {
        if images.len() != n || !GroupMap::new(g, images.clone()).is_automorphism {
            return Err(Error::NotAutomorphism(a));
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let expected = match mode {
                LambdaMode::Homomorphic => perm::compose(&lam[a], &lam[b]),
                LambdaMode::AntiHomomorphic => perm::compose(&lam[b], &lam[a]),
            };
            if lam[g.mul(a, b)] != expected {
                return Err(Error::NotHomomorphism(a, b));
            }
        }
    }
    let in_kernel: Vec<bool> = lam.iter().map(|m| perm::is_identity(m)).collect();
    for a in g.elements() {
        for b in g.elements() {
            let w = match mode {
                LambdaMode::Homomorphic => g.mul(g.inv(b), lam[a][b]),
                LambdaMode::AntiHomomorphic => g.product(&[a, lam[a][b], g.inv(a), g.inv(b)]),
            };
            if !in_kernel[w] {
                return Err(Error::KernelConditionFails(a, b));
            }
        }
    }
    let circ = FiniteGroup::from_fn(n, |a, b| g.mul(a, lam[a][b]))?;
    let brace = SkewBrace::new(g.clone(), circ)?;
    if mode == LambdaMode::AntiHomomorphic && !classify(&brace)?.symmetric {
        return Err(Error::CriterionMismatch("anti-homomorphic brace is not symmetric".into()));
    }
    Ok(brace)
}

/// `(a₁b₁)∘(a₂b₂) = a₁a₂b₂b₁` for an exact factorization `G = AB`.
pub fn construct_exact_factorization(g: &FiniteGroup, a_set: &[usize], b_set: &[usize]) -> Result<SkewBrace> {
    let fail = |m: &str| Error::NotExactFactorization(m.into());
    if !g.is_subgroup(a_set) {
        return Err(fail("A is not a subgroup"));
    }
    if !g.is_subgroup(b_set) {
        return Err(fail("B is not a subgroup"));
    }
    if a_set.len() * b_set.len() != g.order() || a_set.iter().filter(|x| b_set.contains(x)).count() != 1 {
        return Err(fail("A ∩ B must be trivial with |A||B| = |G|"));
    }
    let mut parts = vec![(usize::MAX, usize::MAX); g.order()];
    for &a in a_set {
        for &b in b_set {
            parts[g.mul(a, b)] = (a, b);
        }
    }
    if parts.iter().any(|p| p.0 == usize::MAX) {
        return Err(fail("products AB do not cover G"));
    }
    let circ = FiniteGroup::from_fn(g.order(), |x, y| {
        let ((a1, b1), (a2, b2)) = (parts[x], parts[y]);
        g.product(&[a1, a2, b2, b1])
    })?;
    let brace = SkewBrace::new(g.clone(), circ)?;
    if g.is_normal(a_set) {
        let c = classify(&brace)?;
        if !c.lambda_anti_homomorphic || !c.symmetric {
            return Err(Error::CriterionMismatch("normal factor should give an anti-homomorphic brace".into()));
        }
    }
    Ok(brace)
}

/// `λ_a(b) = f(a)^{−ε} b f(a)^{ε} α(a,b)` with `f` an endomorphism modulo
/// the center into an abelian-mod-center subgroup and `α` bilinear into the
/// center, vanishing on the center.
pub fn construct_unification(g: &FiniteGroup, f: &[usize], alpha: &[Vec<usize>], epsilon: i8) -> Result<SkewBrace> {
    let n = g.order();
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::PreconditionFails("epsilon must be 1 or -1".into()));
    }
    if f.len() != n || alpha.len() != n || alpha.iter().any(|r| r.len() != n) {
        return Err(Error::PreconditionFails("f and alpha must be total on G".into()));
    }
    let center = g.center();
    let mut central = vec![false; n];
    for &z in &center {
        central[z] = true;
    }
    for a in g.elements() {
        for b in g.elements() {
            if !central[g.commutator(f[a], f[b])] {
                return Err(Error::ImageNotAbelianModCenter(a, b));
            }
            if !central[g.product(&[g.inv(f[g.mul(a, b)]), f[a], f[b]])] {
                return Err(Error::NotEndomorphismModCenter(a, b));
            }
            if !central[alpha[a][b]] {
                return Err(Error::NotBilinear(a, b, b));
            }
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            for c in g.elements() {
                let left = alpha[g.mul(a, b)][c] == g.mul(alpha[a][c], alpha[b][c]);
                let right = alpha[a][g.mul(b, c)] == g.mul(alpha[a][b], alpha[a][c]);
                if !left || !right {
                    return Err(Error::NotBilinear(a, b, c));
                }
            }
        }
    }
    for &z in &center {
        for a in g.elements() {
            if alpha[z][a] != 0 || alpha[a][z] != 0 {
                return Err(Error::NotBilinear(z, a, a));
            }
        }
    }
    let derived = g.derived_subgroup();
    if derived.iter().any(|&d| g.elements().any(|a| alpha[d][a] != 0 || alpha[a][d] != 0)) {
        return Err(Error::CriterionMismatch("bilinear alpha does not vanish on the derived subgroup".into()));
    }

    let lam = unification_lambda(g, f, alpha, epsilon);
    let brace = construct_from_lambda(g, &lam, LambdaMode::Homomorphic)?;
    let c = classify(&brace)?;
    if !c.lambda_homomorphic || !c.symmetric {
        return Err(Error::CriterionMismatch("unification brace should be symmetric and lambda-homomorphic".into()));
    }
    // shifting f by central elements must not change λ
    let shifted: Vec<usize> = g.elements().map(|a| g.mul(f[a], center[(a + 1) % center.len()])).collect();
    if unification_lambda(g, &shifted, alpha, epsilon) != lam {
        return Err(Error::CriterionMismatch("lambda depends on the representative of f".into()));
    }
    Ok(brace)
}

fn unification_lambda(g: &FiniteGroup, f: &[usize], alpha: &[Vec<usize>], epsilon: i8) -> Vec<Vec<usize>> {
    let e = i64::from(epsilon);
    g.elements()
        .map(|a| {
            let (left, right) = (g.pow(f[a], -e), g.pow(f[a], e));
            g.elements().map(|b| g.product(&[left, b, right, alpha[a][b]])).collect()
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct OppositeBrace {
    pub brace: SkewBrace,
    pub is_trivial: bool,
}

/// `(G, ·^op, ∘)`.
pub fn opposite(brace: &SkewBrace) -> Result<OppositeBrace> {
    let op = SkewBrace::new(brace.add().opposite(), brace.circ().clone())
        .map_err(|e| Error::CriterionMismatch(format!("opposite brace failed: {e}")))?;
    let is_trivial = op.is_trivial();
    Ok(OppositeBrace { brace: op, is_trivial })
}
