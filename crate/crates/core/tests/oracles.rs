//! Brute-force oracles that share no code with the library's search paths.

use std::collections::BTreeSet;

use skewbrace::brace::{classify, enumerate_circ_ops};
use skewbrace::catalog::{self, small_groups};
use skewbrace::{Caps, FiniteGroup};

mod common;

use common::{brace_law, latin_oracle, Table};

fn caps() -> Caps {
    Caps::default()
}

fn circ_tables(g: &FiniteGroup) -> BTreeSet<Table> {
    enumerate_circ_ops(g, &caps()).unwrap().into_iter().map(|b| b.circ().rows()).collect()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn full_scan_automorphisms(add: &Table) -> Vec<Vec<usize>> {
    let n = add.len();
    all_perms(n).into_iter().filter(|p| (0..n).all(|a| (0..n).all(|b| p[add[a][b]] == add[p[a]][p[b]]))).collect()
}

/// Solves `λ_{a·λ_a(b)} = λ_a ∘ λ_b` over `Aut(G)` by choosing `λ` on the
/// smallest free element and propagating.
fn lambda_oracle(add: &Table) -> BTreeSet<Table> {
    let n = add.len();
    let auts = full_scan_automorphisms(add);
    let mut lam: Vec<Option<Vec<usize>>> = vec![None; n];
    lam[0] = Some((0..n).collect());
    let mut out = BTreeSet::new();
    search(add, &auts, &lam, &mut out);
    out
}

fn propagate(add: &Table, lam: &mut [Option<Vec<usize>>]) -> bool {
    let n = add.len();
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                let (Some(la), Some(lb)) = (&lam[a], &lam[b]) else { continue };
                let c = add[a][la[b]];
                let lc: Vec<usize> = (0..n).map(|x| la[lb[x]]).collect();
                match &lam[c] {
                    Some(existing) if *existing != lc => return false,
                    Some(_) => {}
                    None => {
                        lam[c] = Some(lc);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(add: &Table, auts: &[Vec<usize>], lam: &[Option<Vec<usize>>], out: &mut BTreeSet<Table>) {
    let n = add.len();
    let Some(a) = (0..n).find(|&a| lam[a].is_none()) else {
        let circ: Table = (0..n).map(|a| (0..n).map(|b| add[a][lam[a].as_ref().unwrap()[b]]).collect()).collect();
        let bijective = (0..n).all(|a| circ[a].iter().collect::<BTreeSet<_>>().len() == n);
        if bijective {
            out.insert(circ);
        }
        return;
    };
    for f in auts {
        let mut next = lam.to_vec();
        next[a] = Some(f.clone());
        if propagate(add, &mut next) {
            search(add, auts, &next, out);
        }
    }
}

#[test]
fn latin_square_oracle_matches_enumeration() {
    let expected = [("Z2", 1), ("Z3", 1), ("Z4", 2), ("Z2^2", 4)];
    for (name, count) in expected {
        let g = catalog::by_name(name).unwrap();
        let oracle = latin_oracle(&g.rows());
        assert_eq!(oracle.len(), count, "{name}");
        assert_eq!(oracle, circ_tables(&g), "{name}");
    }
}

#[test]
fn latin_square_oracle_order_five_and_six() {
    for name in ["Z5", "Z6", "S3"] {
        let g = catalog::by_name(name).unwrap();
        assert_eq!(latin_oracle(&g.rows()), circ_tables(&g), "{name}");
    }
}

#[test]
fn lambda_oracle_matches_enumeration_up_to_order_8() {
    for (name, g) in small_groups(8) {
        let oracle = lambda_oracle(&g.rows());
        assert!(!oracle.is_empty(), "{name}");
        assert_eq!(oracle, circ_tables(&g), "{name}");
    }
}

#[test]
fn full_scan_automorphisms_match_backtracking() {
    for (name, g) in small_groups(8) {
        let fast: BTreeSet<Vec<usize>> =
            skewbrace::automorphism::automorphism_group(&g, &caps()).unwrap().into_iter().map(|m| m.images).collect();
        let slow: BTreeSet<Vec<usize>> = full_scan_automorphisms(&g.rows()).into_iter().collect();
        assert_eq!(fast, slow, "{name}");
    }
}

/// λ recomputed from raw tables as `a⁻¹·(a∘b)`; flags rederived without
/// the library's `LambdaMap`.
#[test]
fn lambda_recount_and_flags() {
    for (name, g) in small_groups(8) {
        let n = g.order();
        for brace in enumerate_circ_ops(&g, &caps()).unwrap() {
            let (add, circ) = (brace.add().rows(), brace.circ().rows());
            let inv: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| add[a][b] == 0).unwrap()).collect();
            let lam: Table = (0..n).map(|a| (0..n).map(|b| add[inv[a]][circ[a][b]]).collect()).collect();
            for (m, row) in brace.lambda().maps.iter().zip(&lam) {
                assert_eq!(&m.images, row, "{name}");
            }
            let comp = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..n).map(|x| p[q[x]]).collect() };
            let hom = (0..n).all(|a| (0..n).all(|b| lam[add[a][b]] == comp(&lam[a], &lam[b])));
            let anti = (0..n).all(|a| (0..n).all(|b| lam[add[a][b]] == comp(&lam[b], &lam[a])));
            let circ_hom = (0..n).all(|a| (0..n).all(|b| lam[circ[a][b]] == comp(&lam[a], &lam[b])));
            let opposite: Table = (0..n).map(|a| (0..n).map(|b| add[b][a]).collect()).collect();
            let c = classify(&brace).unwrap();
            assert!(circ_hom, "{name}");
            assert_eq!(c.lambda_homomorphic, hom, "{name}");
            assert_eq!(c.lambda_anti_homomorphic, anti, "{name}");
            assert_eq!(c.natural, circ == opposite, "{name}");
            assert_eq!(c.symmetric, brace_law(&circ, &add), "{name}");
            let kernel_is_all = lam.iter().all(|l| l.iter().enumerate().all(|(i, &x)| i == x));
            assert_eq!(brace.is_trivial(), kernel_is_all, "{name}");
        }
    }
}
