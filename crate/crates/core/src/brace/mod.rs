//! Skew left braces `(G, ·, ∘)` stored as two tables on one carrier.

mod construct;
mod criteria;
mod enumerate;

pub use construct::{
    construct_exact_factorization, construct_from_lambda, construct_unification, opposite, LambdaMode,
    OppositeBrace,
};
pub use criteria::{
    brace_isomorphic, cross_compatibility_check, link_check, opposite_symmetry_check, CrossReport, LinkReport,
    OppositeSymmetryReport,
};
pub use enumerate::enumerate_circ_ops;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap};
use crate::perm::{self, Perm};

#[derive(Clone, Debug)]
pub struct SkewBrace {
    add: FiniteGroup,
    circ: FiniteGroup,
    lambda: LambdaMap,
}

impl PartialEq for SkewBrace {
    fn eq(&self, other: &Self) -> bool {
        self.add == other.add && self.circ == other.circ
    }
}

impl Eq for SkewBrace {}

impl SkewBrace {
    /// Accepts two groups on the same carrier with identity 0 whose tables
    /// satisfy `a∘(b·c) = (a∘b)·a⁻¹·(a∘c)`.
    pub fn new(add: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        if add.order() != circ.order() {
            return Err(Error::PreconditionFails("tables of different orders".into()));
        }
        if add.identity() != 0 || circ.identity() != 0 {
            return Err(Error::PreconditionFails("identity must be 0 in both operations".into()));
        }
        let lambda = lambda_of_tables(&add, &circ)?;
        Ok(Self { add, circ, lambda })
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::new(g.clone(), g.clone()).expect("trivial brace")
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }

    pub fn lambda(&self) -> &LambdaMap {
        &self.lambda
    }

    /// `λ_a(b)`.
    #[inline]
    pub fn lam(&self, a: usize, b: usize) -> usize {
        self.lambda.maps[a].images[b]
    }

    pub fn is_trivial(&self) -> bool {
        self.add == self.circ
    }

    /// The brace pushed forward along a relabeling `p[old] = new` fixing 0.
    pub fn relabeled(&self, p: &[usize]) -> Result<Self> {
        Self::new(self.add.relabeled(p), self.circ.relabeled(p))
    }
}

/// The family `a ↦ λ_a` with derived data.
#[derive(Clone, Debug, Serialize)]
pub struct LambdaMap {
    pub maps: Vec<GroupMap>,
    pub kernel: Vec<usize>,
    /// Distinct maps in `λ(G)`, sorted.
    pub image: Vec<Perm>,
    pub image_order: usize,
    pub image_exponent: usize,
    pub homomorphic_on_add: bool,
    pub anti_homomorphic_on_add: bool,
    pub image_abelian: bool,
}

impl LambdaMap {
    pub fn is_image_cyclic(&self) -> bool {
        self.image.iter().any(|p| perm::order(p) == self.image_order)
    }
}

pub fn lambda_of(brace: &SkewBrace) -> &LambdaMap {
    brace.lambda()
}

/// `λ_a(b) = a⁻¹·(a∘b)`; fails unless every `λ_a` is an automorphism of `(G,·)`.
pub fn lambda_of_tables(add: &FiniteGroup, circ: &FiniteGroup) -> Result<LambdaMap> {
    let raw: Vec<Vec<usize>> =
        add.elements().map(|a| add.elements().map(|b| add.mul(add.inv(a), circ.mul(a, b))).collect()).collect();
    lambda_from_images(add, raw)
}

pub(crate) fn lambda_from_images(add: &FiniteGroup, raw: Vec<Vec<usize>>) -> Result<LambdaMap> {
    let mut maps = Vec::with_capacity(raw.len());
    for (a, images) in raw.into_iter().enumerate() {
        let m = GroupMap::new(add, images);
        if !m.is_automorphism {
            return Err(Error::LambdaNotAutomorphism(a));
        }
        maps.push(m);
    }
    let kernel = add.elements().filter(|&a| perm::is_identity(&maps[a].images)).collect();
    let image: Vec<Perm> = maps.iter().map(|m| m.images.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    let image_exponent = image.iter().map(|p| perm::order(p)).fold(1, perm::lcm);
    let homomorphic_on_add = add.elements().all(|a| {
        add.elements().all(|b| maps[add.mul(a, b)].images == perm::compose(&maps[a].images, &maps[b].images))
    });
    let anti_homomorphic_on_add = add.elements().all(|a| {
        add.elements().all(|b| maps[add.mul(a, b)].images == perm::compose(&maps[b].images, &maps[a].images))
    });
    let image_abelian =
        image.iter().all(|p| image.iter().all(|q| perm::compose(p, q) == perm::compose(q, p)));
    Ok(LambdaMap {
        maps,
        kernel,
        image_order: image.len(),
        image,
        image_exponent,
        homomorphic_on_add,
        anti_homomorphic_on_add,
        image_abelian,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraceReport {
    pub left_ok: bool,
    pub right_ok: bool,
    pub two_sided: bool,
    pub left_witness: Option<[usize; 3]>,
    pub right_witness: Option<[usize; 3]>,
}

/// Checks `a∘(b·c) = (a∘b)·a⁻¹·(a∘c)` and `(a·b)∘c = (a∘c)·c⁻¹·(b∘c)` on every triple.
pub fn verify_brace(add: &FiniteGroup, circ: &FiniteGroup) -> BraceReport {
    let left_witness = left_witness(add, circ);
    let right_witness = right_witness(add, circ);
    BraceReport {
        left_ok: left_witness.is_none(),
        right_ok: right_witness.is_none(),
        two_sided: left_witness.is_none() && right_witness.is_none(),
        left_witness,
        right_witness,
    }
}

pub fn left_witness(add: &FiniteGroup, circ: &FiniteGroup) -> Option<[usize; 3]> {
    if add.order() != circ.order() {
        return Some([0, 0, 0]);
    }
    for a in add.elements() {
        let ai = add.inv(a);
        for b in add.elements() {
            let ab = circ.mul(a, b);
            let lhs_row = add.mul(ab, ai);
            for c in add.elements() {
                if circ.mul(a, add.mul(b, c)) != add.mul(lhs_row, circ.mul(a, c)) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

fn right_witness(add: &FiniteGroup, circ: &FiniteGroup) -> Option<[usize; 3]> {
    for c in add.elements() {
        let ci = add.inv(c);
        for a in add.elements() {
            let left = add.mul(circ.mul(a, c), ci);
            for b in add.elements() {
                if circ.mul(add.mul(a, b), c) != add.mul(left, circ.mul(b, c)) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub fn is_left_brace(add: &FiniteGroup, circ: &FiniteGroup) -> bool {
    left_witness(add, circ).is_none()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub lambda_homomorphic: bool,
    pub lambda_anti_homomorphic: bool,
    pub symmetric: bool,
    pub lambda_cyclic: bool,
    pub natural: bool,
}

/// Symmetry is decided twice, by `λ_{a∘b} = λ_{b·a}` and by checking
/// `(G,∘,·)` directly; disagreement is an error.
pub fn classify(brace: &SkewBrace) -> Result<Classification> {
    let criterion = symmetric_by_criterion(brace);
    let direct = is_left_brace(brace.circ(), brace.add());
    if criterion != direct {
        return Err(Error::CriterionMismatch(format!(
            "symmetry criterion {criterion} but direct check {direct}"
        )));
    }
    let l = brace.lambda();
    Ok(Classification {
        lambda_homomorphic: l.homomorphic_on_add,
        lambda_anti_homomorphic: l.anti_homomorphic_on_add,
        symmetric: criterion,
        lambda_cyclic: l.is_image_cyclic(),
        natural: brace.circ() == &brace.add().opposite(),
    })
}

pub fn symmetric_by_criterion(brace: &SkewBrace) -> bool {
    let (add, circ, maps) = (brace.add(), brace.circ(), &brace.lambda().maps);
    add.elements().all(|a| add.elements().all(|b| maps[circ.mul(a, b)].images == maps[add.mul(b, a)].images))
}

#[cfg(test)]
mod tests;
