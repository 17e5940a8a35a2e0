use serde::Serialize;

use super::{classify, is_left_brace, lambda_of_tables, opposite, SkewBrace};
use crate::automorphism::homomorphisms;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap};
use crate::perm::{self, Perm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OppositeSymmetryReport {
    pub opposite_symmetric: bool,
    pub inn_centralizes_lambda: bool,
    pub agree: bool,
}

/// For a λ-homomorphic brace, compares symmetry of the opposite brace with
/// `Inn(G,·)` centralizing `λ(G)`. Disagreement is reported, not raised.
pub fn opposite_symmetry_check(brace: &SkewBrace) -> Result<OppositeSymmetryReport> {
    if !brace.lambda().homomorphic_on_add {
        return Err(Error::PreconditionFails("brace is not lambda-homomorphic".into()));
    }
    let opposite_symmetric = classify(&opposite(brace)?.brace)?.symmetric;
    let inner: Vec<Perm> = brace.add().inner_automorphisms().into_iter().map(|m| m.images).collect();
    let image = &brace.lambda().image;
    let inn_centralizes_lambda =
        inner.iter().all(|i| image.iter().all(|l| perm::compose(i, l) == perm::compose(l, i)));
    Ok(OppositeSymmetryReport {
        opposite_symmetric,
        inn_centralizes_lambda,
        agree: opposite_symmetric == inn_centralizes_lambda,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkReport {
    pub is_brace: bool,
    pub is_symmetric: bool,
    pub cond_i: bool,
    pub cond_ii: bool,
    pub images_commute: bool,
    pub hypotheses_met: bool,
    pub advisory: Option<String>,
}

fn commutator_in_kernel(g: &FiniteGroup, acting: &[GroupMap], kernel: &[usize]) -> bool {
    g.elements().all(|a| g.elements().all(|b| kernel.binary_search(&g.mul(acting[a].images[b], g.inv(b))).is_ok()))
}

/// Decides whether `(G,∘,★)` is a (symmetric) skew brace directly and
/// through the commutator conditions; when both braces are λ-anti-homomorphic
/// (or λ-homomorphic with abelian image) and their λ-images commute, the two
/// answers must agree.
pub fn link_check(b1: &SkewBrace, b2: &SkewBrace) -> Result<LinkReport> {
    if b1.add() != b2.add() {
        return Err(Error::AdditiveTablesDiffer);
    }
    let g = b1.add();
    let (l1, l2) = (b1.lambda(), b2.lambda());
    let is_brace = is_left_brace(b1.circ(), b2.circ());
    let is_symmetric = is_brace && is_left_brace(b2.circ(), b1.circ());
    let cond_i = commutator_in_kernel(g, &l2.maps, &l1.kernel);
    let cond_ii = commutator_in_kernel(g, &l1.maps, &l2.kernel);
    let images_commute =
        l1.image.iter().all(|p| l2.image.iter().all(|q| perm::compose(p, q) == perm::compose(q, p)));
    let kinds_ok = (l1.anti_homomorphic_on_add && l2.anti_homomorphic_on_add)
        || (l1.homomorphic_on_add && l2.homomorphic_on_add && l1.image_abelian && l2.image_abelian);
    let hypotheses_met = kinds_ok && images_commute;
    let advisory = if hypotheses_met {
        if is_brace != cond_i || is_symmetric != (cond_i && cond_ii) {
            return Err(Error::CriterionMismatch(format!(
                "link criterion: is_brace {is_brace} cond_i {cond_i} is_symmetric {is_symmetric} cond_ii {cond_ii}"
            )));
        }
        None
    } else if !kinds_ok {
        Some("HypothesisNotMet: braces are not both lambda-anti-homomorphic or lambda-homomorphic with abelian image".into())
    } else {
        Some("HypothesisNotMet: lambda images do not commute".into())
    };
    Ok(LinkReport { is_brace, is_symmetric, cond_i, cond_ii, images_commute, hypotheses_met, advisory })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrossReport {
    pub is_brace: bool,
    pub condition_holds: bool,
}

/// With `λ` from `(G,·,∘_i)` and `μ` from `(G,·,∘_j)`, checks
/// `μ_a(λ_b(c)) = λ_x(ā)·λ_{x·λ_x(ā)}(a·μ_a(c))`, `x = a·μ_a(b)`, `ā = λ_a⁻¹(a⁻¹)`,
/// against a direct check of `(G,∘_i,∘_j)`.
pub fn cross_compatibility_check(add: &FiniteGroup, circ_i: &FiniteGroup, circ_j: &FiniteGroup) -> Result<CrossReport> {
    let lam = lambda_of_tables(add, circ_i)?;
    let mu = lambda_of_tables(add, circ_j)?;
    let l = |a: usize, b: usize| lam.maps[a].images[b];
    let m = |a: usize, b: usize| mu.maps[a].images[b];
    let lam_inv: Vec<Perm> = lam.maps.iter().map(|p| perm::invert(&p.images)).collect();
    let mut condition_holds = true;
    'outer: for a in add.elements() {
        let abar = lam_inv[a][add.inv(a)];
        for b in add.elements() {
            let x = add.mul(a, m(a, b));
            let t = l(x, abar);
            let y = add.mul(x, t);
            for c in add.elements() {
                if m(a, l(b, c)) != add.mul(t, l(y, add.mul(a, m(a, c)))) {
                    condition_holds = false;
                    break 'outer;
                }
            }
        }
    }
    let is_brace = is_left_brace(circ_i, circ_j);
    if condition_holds && !is_brace {
        return Err(Error::CriterionMismatch("compatibility condition holds but (G,∘_i,∘_j) is not a brace".into()));
    }
    Ok(CrossReport { is_brace, condition_holds })
}

/// A permutation that is an isomorphism of both operations, found among
/// additive isomorphisms `φ` with `φ λ_a φ⁻¹ = μ_{φ(a)}`.
pub fn brace_isomorphic(b1: &SkewBrace, b2: &SkewBrace, caps: &Caps) -> Result<Option<GroupMap>> {
    if b1.order() != b2.order() {
        return Ok(None);
    }
    caps.check_group(b1.order())?;
    let (add1, add2) = (b1.add(), b2.add());
    for phi in homomorphisms(add1, add2, true) {
        let conj_ok = add1.elements().all(|a| {
            add1.elements().all(|x| phi[b1.lam(a, x)] == b2.lam(phi[a], phi[x]))
        });
        if !conj_ok {
            continue;
        }
        let circ_ok = add1
            .elements()
            .all(|a| add1.elements().all(|b| phi[b1.circ().mul(a, b)] == b2.circ().mul(phi[a], phi[b])));
        if !circ_ok {
            return Err(Error::CriterionMismatch("lambda-conjugate map is not multiplicative".into()));
        }
        return Ok(Some(GroupMap::new(add1, phi)));
    }
    Ok(None)
}
