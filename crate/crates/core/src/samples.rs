//! Ready-made λ-maps and braces used by the CLI, the demo and the tests.

use crate::brace::{construct_from_lambda, LambdaMode, SkewBrace};
use crate::group::FiniteGroup;
use crate::perm;

/// `λ_a = τ^{χ(a)}` for an automorphism `τ` and a map `χ: G → ℤ`.
pub fn power_lambda(g: &FiniteGroup, tau: &[usize], chi: impl Fn(usize) -> i64) -> Vec<Vec<usize>> {
    g.elements().map(|a| perm::power(tau, chi(a))).collect()
}

/// On `ℤ_n` (n even), `λ_a = (b ↦ −b)^a`.
pub fn cyclic_inversion_lambda(n: usize) -> Vec<Vec<usize>> {
    let g = FiniteGroup::cyclic(n);
    let inversion: Vec<usize> = g.elements().map(|b| g.inv(b)).collect();
    power_lambda(&g, &inversion, |a| a as i64)
}

pub fn cyclic_inversion_brace(n: usize) -> SkewBrace {
    construct_from_lambda(&FiniteGroup::cyclic(n), &cyclic_inversion_lambda(n), LambdaMode::Homomorphic)
        .expect("inversion brace")
}

/// `λ_a(b) = a⁻¹ b a`; yields `a∘b = b·a`.
pub fn conjugation_lambda(g: &FiniteGroup) -> Vec<Vec<usize>> {
    g.elements().map(|a| g.elements().map(|b| g.conj(g.inv(a), b)).collect()).collect()
}

pub fn op_brace(g: &FiniteGroup) -> SkewBrace {
    construct_from_lambda(g, &conjugation_lambda(g), LambdaMode::AntiHomomorphic).expect("op brace")
}

/// `λ_a(b) = c_a⁻¹ b c_a` with `c_a = a⁻¹ x⁻¹ a x`.
pub fn twisted_conjugation_lambda(g: &FiniteGroup, x: usize) -> Vec<Vec<usize>> {
    g.elements()
        .map(|a| {
            let c = g.product(&[g.inv(a), g.inv(x), a, x]);
            g.elements().map(|b| g.conj(g.inv(c), b)).collect()
        })
        .collect()
}

/// On `ℤ₂×ℤ₄` (pairs `(g,h)` at `4g + h`), `λ_a = τ^{h_a}` where `τ(g,h) = (g, h+2g)`.
pub fn z2xz4_central_lambda() -> Vec<Vec<usize>> {
    let g = crate::catalog::product_of(&[2, 4]);
    let tau: Vec<usize> = g.elements().map(|x| 4 * (x / 4) + (x % 4 + 2 * (x / 4)) % 4).collect();
    power_lambda(&g, &tau, |a| (a % 4) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn samples_build() {
        let b = cyclic_inversion_brace(4);
        assert_eq!(b.circ().mul(1, 1), 0);
        assert!(b.circ().elements().all(|a| b.circ().element_order(a) <= 2));
        let s3 = catalog::symmetric3();
        assert_eq!(op_brace(&s3).circ(), &s3.opposite());
        let g = catalog::product_of(&[2, 4]);
        assert!(construct_from_lambda(&g, &z2xz4_central_lambda(), LambdaMode::Homomorphic).is_ok());
    }
}
