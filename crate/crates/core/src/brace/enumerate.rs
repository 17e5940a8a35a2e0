use std::collections::{BTreeMap, HashSet, VecDeque};

use super::SkewBrace;
use crate::config::Caps;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::holomorph::{build_holomorph, Holomorph};

/// One brace per regular subgroup of `Hol G`, sorted by the `∘` table.
///
/// Subgroups are grown one generator at a time: the smallest uncovered
/// element `a` is paired with every automorphism `f`, and closures whose
/// second coordinates collide are dropped.
pub fn enumerate_circ_ops(g: &FiniteGroup, caps: &Caps) -> Result<Vec<SkewBrace>> {
    let hol = build_holomorph(g, caps)?;
    let n = g.order();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut found: BTreeMap<Vec<usize>, SkewBrace> = BTreeMap::new();
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![], vec![0])];
    while let Some((gens, members)) = stack.pop() {
        if members.len() == n {
            let brace = brace_of_regular(&hol, &members)?;
            let key: Vec<usize> = brace.circ().rows().concat();
            found.insert(key, brace);
            continue;
        }
        let mut covered = vec![false; n];
        for &x in &members {
            covered[hol.pair_of(x).1] = true;
        }
        let a = (0..n).find(|&a| !covered[a]).expect("uncovered element");
        for f in 0..hol.automorphisms().len() {
            let mut next = gens.clone();
            next.push(hol.index_of(f, a));
            if let Some(closure) = bounded_closure(&hol, &next, n) {
                if seen.insert(closure.clone()) {
                    stack.push((next, closure));
                }
            }
        }
    }
    Ok(found.into_values().collect())
}

/// Closure of `gens`, or `None` once two elements share a second coordinate.
fn bounded_closure(hol: &Holomorph, gens: &[usize], n: usize) -> Option<Vec<usize>> {
    let mut members = vec![0usize];
    let mut inside = std::collections::HashSet::from([0usize]);
    let mut second = vec![false; n];
    second[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = hol.mul(x, s);
            if inside.insert(y) {
                let b = hol.pair_of(y).1;
                if second[b] {
                    return None;
                }
                second[b] = true;
                members.push(y);
                queue.push_back(y);
            }
        }
    }
    members.sort_unstable();
    Some(members)
}

/// `a∘b = a·f(b)` where `(f, a)` is the element of the subgroup over `a`.
fn brace_of_regular(hol: &Holomorph, members: &[usize]) -> Result<SkewBrace> {
    let g = hol.base();
    let mut aut_over = vec![0usize; g.order()];
    for &x in members {
        let (f, a) = hol.pair_of(x);
        aut_over[a] = f;
    }
    let auts = hol.automorphisms();
    let circ = FiniteGroup::from_fn(g.order(), |a, b| g.mul(a, auts[aut_over[a]].apply(b)))?;
    SkewBrace::new(g.clone(), circ)
}
