//! Rota–Baxter operators of weight 1: `B(g)B(h) = B(g B(g) h B(g)⁻¹)`.
//! Tables on finite groups here; generator images on free groups in
//! [`crate::free`], re-exported below.

use serde::Serialize;

use crate::automorphism::endomorphisms;
use crate::brace::{classify, SkewBrace};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub use crate::free::{free_rb_check, free_rb_example, FreeRbCheck, FreeRbOp, RbKind};

/// First pair `(g, h)` violating the identity, if any.
pub fn rb_witness(g: &FiniteGroup, b: &[usize]) -> Option<(usize, usize)> {
    if b.len() != g.order() || b.iter().any(|&x| x >= g.order()) {
        return Some((0, 0));
    }
    for x in g.elements() {
        let bx = b[x];
        let left = g.mul(x, bx);
        let bxi = g.inv(bx);
        for y in g.elements() {
            if g.mul(bx, b[y]) != b[g.product(&[left, y, bxi])] {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_rb(g: &FiniteGroup, b: &[usize]) -> bool {
    rb_witness(g, b).is_none()
}

fn require_rb(g: &FiniteGroup, b: &[usize]) -> Result<()> {
    match rb_witness(g, b) {
        Some((x, y)) => Err(Error::NotRotaBaxter(x, y)),
        None => Ok(()),
    }
}

/// `x ∘ y = x B(x) y B(x)⁻¹` without any checks.
pub(crate) fn derived_op(g: &FiniteGroup, b: &[usize]) -> Result<FiniteGroup> {
    FiniteGroup::from_fn(g.order(), |x, y| g.product(&[x, b[x], y, g.inv(b[x])]))
}

/// The derived group, after checking that `B` is Rota–Baxter on it and a
/// homomorphism from it to `(G,·)`.
pub fn derived_group(g: &FiniteGroup, b: &[usize]) -> Result<FiniteGroup> {
    require_rb(g, b)?;
    let d = derived_op(g, b)?;
    if let Some((x, y)) = rb_witness(&d, b) {
        return Err(Error::CriterionMismatch(format!("B is not Rota-Baxter on the derived group at ({x}, {y})")));
    }
    for x in g.elements() {
        for y in g.elements() {
            if b[d.mul(x, y)] != g.mul(b[x], b[y]) {
                return Err(Error::CriterionMismatch(format!("B is not multiplicative from the derived group at ({x}, {y})")));
            }
        }
    }
    Ok(d)
}

/// `(G, ·, ∘)` with `λ_a(b) = B(a) b B(a)⁻¹`.
pub fn rb_brace(g: &FiniteGroup, b: &[usize]) -> Result<SkewBrace> {
    let d = derived_group(g, b)?;
    let brace = SkewBrace::new(g.clone(), d)?;
    for a in g.elements() {
        for x in g.elements() {
            if brace.lam(a, x) != g.conj(b[a], x) {
                return Err(Error::CriterionMismatch("lambda is not conjugation by B(a)".into()));
            }
        }
    }
    Ok(brace)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CenterCriterion {
    pub direct: bool,
    pub center_condition: bool,
}

fn central_for_all(g: &FiniteGroup, f: impl Fn(usize, usize) -> usize) -> bool {
    let center = g.center();
    g.elements().all(|a| g.elements().all(|c| center.binary_search(&f(a, c)).is_ok()))
}

/// Symmetry of the brace against `B(c)⁻¹ B(a)⁻¹ B(ca) ∈ Z(G)`.
pub fn rb_symmetry_check(g: &FiniteGroup, b: &[usize]) -> Result<CenterCriterion> {
    let brace = rb_brace(g, b)?;
    let direct = classify(&brace)?.symmetric;
    let center_condition = central_for_all(g, |a, c| g.product(&[g.inv(b[c]), g.inv(b[a]), b[g.mul(c, a)]]));
    if direct != center_condition {
        return Err(Error::CriterionMismatch(format!(
            "symmetric {direct} but center condition {center_condition}"
        )));
    }
    Ok(CenterCriterion { direct, center_condition })
}

/// λ-homomorphy of the brace against `B(ac)⁻¹ B(a) B(c) ∈ Z(G)`.
pub fn rb_lambda_hom_check(g: &FiniteGroup, b: &[usize]) -> Result<CenterCriterion> {
    let brace = rb_brace(g, b)?;
    let direct = brace.lambda().homomorphic_on_add;
    let center_condition = central_for_all(g, |a, c| g.product(&[g.inv(b[g.mul(a, c)]), b[a], b[c]]));
    if direct != center_condition {
        return Err(Error::CriterionMismatch(format!(
            "lambda-homomorphic {direct} but center condition {center_condition}"
        )));
    }
    Ok(CenterCriterion { direct, center_condition })
}

pub fn is_anti_homomorphism(g: &FiniteGroup, b: &[usize]) -> bool {
    g.elements().all(|x| g.elements().all(|y| b[g.mul(x, y)] == g.mul(b[y], b[x])))
}

/// `[B(b), B²(a) B(a)] = 1` for an anti-homomorphic operator.
pub fn rb_anti_hom_lemma_check(g: &FiniteGroup, b: &[usize]) -> Result<bool> {
    require_rb(g, b)?;
    if !is_anti_homomorphism(g, b) {
        return Err(Error::PreconditionFails("B is not an anti-homomorphism".into()));
    }
    Ok(g.elements().all(|x| g.elements().all(|y| g.commutator(b[y], g.mul(b[b[x]], b[x])) == g.identity())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WordEvaluation {
    pub fold: usize,
    pub formula: usize,
}

/// Evaluates `a₁^{∘k₁} ∘ … ∘ a_s^{∘k_s}` by folding in the derived group and by
/// `(a₁B(a₁))^{k₁} … (a_sB(a_s))^{k_s} B(a_s)^{−k_s} … B(a₁)^{−k₁}`.
pub fn circ_word_expand(g: &FiniteGroup, b: &[usize], letters: &[(usize, i64)]) -> Result<WordEvaluation> {
    let d = derived_group(g, b)?;
    circ_word_expand_in(g, &d, b, letters)
}

pub(crate) fn circ_word_expand_in(
    g: &FiniteGroup,
    d: &FiniteGroup,
    b: &[usize],
    letters: &[(usize, i64)],
) -> Result<WordEvaluation> {
    let fold = letters.iter().fold(d.identity(), |acc, &(a, k)| d.mul(acc, d.pow(a, k)));
    let mut formula = g.identity();
    for &(a, k) in letters {
        formula = g.mul(formula, g.pow(g.mul(a, b[a]), k));
    }
    for &(a, k) in letters.iter().rev() {
        formula = g.mul(formula, g.pow(b[a], -k));
    }
    if fold != formula {
        return Err(Error::CriterionMismatch(format!("circ word: fold {fold} but formula {formula}")));
    }
    Ok(WordEvaluation { fold, formula })
}

/// Derived operations `∘_0 = ·, ∘_1, …, ∘_k`, each the derived group of `B`
/// on the previous one.
pub fn rb_levels(g: &FiniteGroup, b: &[usize], k: usize) -> Result<Vec<FiniteGroup>> {
    require_rb(g, b)?;
    let mut levels = vec![g.clone()];
    for _ in 0..k {
        let prev = levels.last().expect("level 0");
        levels.push(derived_op(prev, b)?);
    }
    Ok(levels)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedExpansionReport {
    pub circ2_mismatches: usize,
    pub lambda1_mismatches: usize,
    pub pairs: usize,
}

/// Compares the closed forms printed for `x ∘₂ y` and `λ⁽¹⁾_x(y)` against
/// the recursive definition.
pub fn printed_expansion_check(g: &FiniteGroup, b: &[usize]) -> Result<PrintedExpansionReport> {
    let levels = rb_levels(g, b, 2)?;
    let (c1, c2) = (&levels[1], &levels[2]);
    let inv = |x| g.inv(x);
    let mut circ2_mismatches = 0;
    let mut lambda1_mismatches = 0;
    for x in g.elements() {
        let (bx, b2x) = (b[x], b[b[x]]);
        for y in g.elements() {
            let by = b[y];
            let printed = g.product(&[x, bx, bx, b2x, y, by, inv(b2x), inv(bx), b2x, inv(by), inv(b2x), inv(bx)]);
            if printed != c2.mul(x, y) {
                circ2_mismatches += 1;
            }
            let lam1 = c1.mul(c1.mul(bx, y), c1.inv(bx));
            let printed = g.product(&[bx, b2x, y, by, inv(b2x), inv(bx), b2x, inv(by), inv(b2x)]);
            if printed != lam1 {
                lambda1_mismatches += 1;
            }
        }
    }
    Ok(PrintedExpansionReport { circ2_mismatches, lambda1_mismatches, pairs: g.order() * g.order() })
}

/// Every Rota–Baxter operator, by backtracking over all self-maps.
pub fn all_rb_operators(g: &FiniteGroup, max_order: usize) -> Result<Vec<Vec<usize>>> {
    if g.order() > max_order {
        return Err(Error::OrderCapExceeded { what: "self-map search", order: g.order(), cap: max_order });
    }
    let n = g.order();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    search(g, &mut map, 0, &mut out);
    Ok(out)
}

fn search(g: &FiniteGroup, map: &mut Vec<usize>, next: usize, out: &mut Vec<Vec<usize>>) {
    if next == map.len() {
        if is_rb(g, map) {
            out.push(map.clone());
        }
        return;
    }
    for v in g.elements() {
        map[next] = v;
        if consistent_so_far(g, map, next) {
            search(g, map, next + 1, out);
        }
    }
    map[next] = usize::MAX;
}

/// Checks the identity on pairs whose three values are already assigned.
fn consistent_so_far(g: &FiniteGroup, map: &[usize], last: usize) -> bool {
    for x in 0..=last {
        let bx = map[x];
        let left = g.mul(x, bx);
        let bxi = g.inv(bx);
        for y in 0..=last {
            if x != last && y != last {
                continue;
            }
            let z = g.product(&[left, y, bxi]);
            if z <= last && g.mul(bx, map[y]) != map[z] {
                return false;
            }
        }
    }
    true
}

/// Rota–Baxter operators among the endomorphisms.
pub fn rb_endomorphisms(g: &FiniteGroup, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    Ok(endomorphisms(g, caps)?.into_iter().map(|m| m.images).filter(|m| is_rb(g, m)).collect())
}

/// Rota–Baxter operators among the anti-endomorphisms.
pub fn rb_anti_endomorphisms(g: &FiniteGroup, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    Ok(crate::automorphism::anti_endomorphisms(g, caps)?
        .into_iter()
        .map(|m| m.images)
        .filter(|m| is_rb(g, m))
        .collect())
}

pub fn inversion_operator(g: &FiniteGroup) -> Vec<usize> {
    g.elements().map(|x| g.inv(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::samples::op_brace;

    #[test]
    fn is_rb_examples() {
        let s3 = catalog::symmetric3();
        assert!(is_rb(&s3, &[0; 6]));
        assert!(is_rb(&s3, &inversion_operator(&s3)));
        let id: Vec<usize> = s3.elements().collect();
        let (x, y) = rb_witness(&s3, &id).unwrap();
        assert_ne!(s3.mul(x, y), s3.mul(y, x));
        let z4 = FiniteGroup::cyclic(4);
        assert!(is_rb(&z4, &[0, 1, 2, 3]));
    }

    #[test]
    fn derived_examples() {
        let s3 = catalog::symmetric3();
        assert_eq!(derived_group(&s3, &[0; 6]).unwrap(), s3);
        let inv = inversion_operator(&s3);
        assert_eq!(derived_group(&s3, &inv).unwrap(), s3.opposite());
        assert_eq!(rb_brace(&s3, &inv).unwrap(), op_brace(&s3));
        assert!(rb_brace(&s3, &[0; 6]).unwrap().is_trivial());
        let id: Vec<usize> = s3.elements().collect();
        assert!(matches!(derived_group(&s3, &id), Err(Error::NotRotaBaxter(..))));

        let d4 = catalog::dihedral(4);
        // onto the rotation subgroup ⟨r⟩ ≅ ℤ₄: r^i s^j ↦ r^{2j}
        let b: Vec<usize> = d4.elements().map(|x| if x >= 4 { 2 } else { 0 }).collect();
        assert!(crate::group::GroupMap::new(&d4, b.clone()).is_endomorphism);
        if is_rb(&d4, &b) {
            derived_group(&d4, &b).unwrap();
        }
        // B ≡ z (central) is RB exactly when z = e
        assert!(!is_rb(&d4, &[2; 8]));
    }

    #[test]
    fn criteria_examples() {
        let z6 = FiniteGroup::cyclic(6);
        let b: Vec<usize> = z6.elements().map(|x| (2 * x) % 6).collect();
        if is_rb(&z6, &b) {
            let r = rb_symmetry_check(&z6, &b).unwrap();
            assert!(r.direct && r.center_condition);
        }
        let s3 = catalog::symmetric3();
        let inv = inversion_operator(&s3);
        let r = rb_symmetry_check(&s3, &inv).unwrap();
        assert!(r.direct && r.center_condition);
        let r = rb_lambda_hom_check(&s3, &inv).unwrap();
        assert!(!r.direct && !r.center_condition);
        let r = rb_lambda_hom_check(&s3, &[0; 6]).unwrap();
        assert!(r.direct && r.center_condition);
    }

    #[test]
    fn anti_hom_lemma() {
        let s3 = catalog::symmetric3();
        assert!(rb_anti_hom_lemma_check(&s3, &[0; 6]).unwrap());
        assert!(rb_anti_hom_lemma_check(&s3, &inversion_operator(&s3)).unwrap());
        let z4 = FiniteGroup::cyclic(4);
        assert!(rb_anti_hom_lemma_check(&z4, &[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn word_expansion() {
        let s3 = catalog::symmetric3();
        let inv = inversion_operator(&s3);
        for a in s3.elements() {
            assert_eq!(circ_word_expand(&s3, &inv, &[(a, 1)]).unwrap().fold, a);
            let e = circ_word_expand(&s3, &inv, &[(a, -1)]).unwrap();
            assert_eq!(e.formula, s3.inv(a));
        }
    }

    #[test]
    fn self_map_search_matches_filter() {
        let z4 = FiniteGroup::cyclic(4);
        let found = all_rb_operators(&z4, 6).unwrap();
        let mut brute = Vec::new();
        for code in 0..4usize.pow(4) {
            let m: Vec<usize> = (0..4).map(|i| (code / 4usize.pow(i)) % 4).collect();
            if is_rb(&z4, &m) {
                brute.push(m);
            }
        }
        brute.sort();
        let mut found_sorted = found.clone();
        found_sorted.sort();
        assert_eq!(found_sorted, brute);
        assert!(all_rb_operators(&FiniteGroup::cyclic(7), 6).is_err());
    }
}
