//! Named small groups. `Dn` is dihedral of order `2n`, `Dicn` dicyclic of order `4n`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::{self, Perm};

/// `r^i s^j` stored at `i + n*j`.
pub fn dihedral(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn(2 * n, |x, y| {
        let (i, a) = (x % n, x / n);
        let (k, b) = (y % n, y / n);
        let rot = if a == 0 { (i + k) % n } else { (i + n - k) % n };
        rot + n * ((a + b) % 2)
    })
    .expect("dihedral table")
}

/// `a^i x^j` with `a^{2n} = 1`, `x² = a^n`, `x a x⁻¹ = a⁻¹`; stored at `i + 2n*j`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    let m = 2 * n;
    FiniteGroup::from_fn(2 * m, |x, y| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        match (j, l) {
            (0, _) => (i + k) % m + m * l,
            (_, 0) => (i + m - k) % m + m,
            _ => (i + m - k + n) % m,
        }
    })
    .expect("dicyclic table")
}

pub fn symmetric3() -> FiniteGroup {
    permutation_group(3, &["(1 2 3)", "(1 2)"]).expect("S3")
}

pub fn alternating4() -> FiniteGroup {
    permutation_group(4, &["(1 2 3)", "(1 2)(3 4)"]).expect("A4")
}

pub fn symmetric4() -> FiniteGroup {
    permutation_group(4, &["(1 2 3 4)", "(1 2)"]).expect("S4")
}

pub fn quaternion() -> FiniteGroup {
    dicyclic(2)
}

pub fn product_of(factors: &[usize]) -> FiniteGroup {
    factors
        .iter()
        .fold(FiniteGroup::trivial(), |acc, &n| acc.direct_product(&FiniteGroup::cyclic(n)))
}

/// Closure of permutations given in cycle notation, elements sorted by
/// their image arrays (so the identity comes first). `a·b` applies `b` first.
pub fn permutation_group(degree: usize, generators: &[&str]) -> Result<FiniteGroup> {
    let gens: Vec<Perm> = generators.iter().map(|g| perm::parse_cycles(g, degree)).collect::<Result<_>>()?;
    let elems = perm_closure(degree, &gens, 5040)?;
    let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    FiniteGroup::from_fn(elems.len(), |a, b| index[&perm::compose(&elems[a], &elems[b])])
}

fn perm_closure(degree: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    let id = perm::identity(degree);
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = perm::compose(&p, g);
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return Err(Error::OrderCapExceeded { what: "permutation group", order: seen.len(), cap });
                }
                queue.push_back(q);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Looks up a group by name: `Zn`, `Z2xZ4`, `Z2^3`, `Dn`, `Dicn`, `Q8`, `S3`, `S4`, `A4`, `trivial`.
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    let name = name.trim();
    match name {
        "trivial" | "1" => return Some(FiniteGroup::trivial()),
        "S3" => return Some(symmetric3()),
        "S4" => return Some(symmetric4()),
        "A4" => return Some(alternating4()),
        "Q8" => return Some(quaternion()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("Dic") {
        return rest.parse().ok().filter(|&n: &usize| (2..=64).contains(&n)).map(dicyclic);
    }
    if let Some(rest) = name.strip_prefix('D') {
        return rest.parse().ok().filter(|&n: &usize| (2..=128).contains(&n)).map(dihedral);
    }
    let mut factors = Vec::new();
    for part in name.split('x') {
        let part = part.strip_prefix('Z')?;
        let (base, reps) = match part.split_once('^') {
            Some((b, r)) => (b.parse::<usize>().ok()?, r.parse::<usize>().ok()?),
            None => (part.parse::<usize>().ok()?, 1),
        };
        if base == 0 || reps == 0 || reps > 8 {
            return None;
        }
        factors.extend(std::iter::repeat_n(base, reps));
    }
    let order: usize = factors.iter().product();
    if order == 0 || order > 4096 {
        return None;
    }
    if factors.len() == 1 {
        return Some(FiniteGroup::cyclic(factors[0]));
    }
    Some(product_of(&factors))
}

/// One representative of every isomorphism class of order `≤ max` (supported up to 12).
pub fn small_groups(max: usize) -> Vec<(&'static str, FiniteGroup)> {
    const NAMES: [(usize, &str); 24] = [
        (1, "trivial"),
        (2, "Z2"),
        (3, "Z3"),
        (4, "Z4"),
        (4, "Z2^2"),
        (5, "Z5"),
        (6, "Z6"),
        (6, "S3"),
        (7, "Z7"),
        (8, "Z8"),
        (8, "Z2xZ4"),
        (8, "Z2^3"),
        (8, "D4"),
        (8, "Q8"),
        (9, "Z9"),
        (9, "Z3^2"),
        (10, "Z10"),
        (10, "D5"),
        (11, "Z11"),
        (12, "Z12"),
        (12, "Z2xZ6"),
        (12, "A4"),
        (12, "D6"),
        (12, "Dic3"),
    ];
    assert!(max <= 12, "catalog is complete only up to order 12");
    NAMES
        .iter()
        .filter(|(n, _)| *n <= max)
        .map(|&(_, name)| (name, by_name(name).expect("catalog name")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_profile(g: &FiniteGroup) -> Vec<usize> {
        let mut v: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn catalog_orders_and_shapes() {
        let all = small_groups(12);
        assert_eq!(all.len(), 24);
        for (name, g) in &all {
            assert_eq!(g.identity(), 0, "{name}");
        }
        let q8 = quaternion();
        assert_eq!(order_profile(&q8), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        let d4 = dihedral(4);
        assert_eq!(order_profile(&d4), vec![1, 2, 2, 2, 2, 2, 4, 4]);
        assert_eq!(alternating4().center(), vec![0]);
        assert_eq!(symmetric4().order(), 24);
        assert!(!dicyclic(3).is_abelian());
        assert_eq!(dicyclic(3).center().len(), 2);
        assert_eq!(by_name("Z2xZ4").unwrap().exponent(), 4);
        assert_eq!(by_name("Z2^3").unwrap().order(), 8);
        assert!(by_name("nonsense").is_none());
    }

    #[test]
    fn catalog_entries_pairwise_distinct() {
        let all = small_groups(12);
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let (a, b) = (&all[i].1, &all[j].1);
                if a.order() == b.order() {
                    let same = order_profile(a) == order_profile(b)
                        && a.is_abelian() == b.is_abelian()
                        && a.center().len() == b.center().len();
                    assert!(!same, "{} vs {}", all[i].0, all[j].0);
                }
            }
        }
    }

    #[test]
    fn d8_has_class_three() {
        let g = dihedral(8);
        assert_eq!(g.order(), 16);
        assert_eq!(g.center().len(), 2);
        assert_eq!(g.derived_subgroup().len(), 4);
    }
}
