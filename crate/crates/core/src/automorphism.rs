//! Homomorphism search by backtracking over generator images.

use crate::config::Caps;
use crate::error::Result;
use crate::group::{FiniteGroup, GroupMap};

/// Word tree over the greedy generators: each non-identity element is
/// reached as `parent · gens[via]`.
struct WordTree {
    gens: Vec<usize>,
    steps: Vec<(usize, usize, usize)>,
}

impl WordTree {
    fn new(g: &FiniteGroup) -> Self {
        let gens = g.generators();
        let mut seen = vec![false; g.order()];
        seen[g.identity()] = true;
        let mut frontier = vec![g.identity()];
        let mut steps = Vec::new();
        let mut i = 0;
        while i < frontier.len() {
            let x = frontier[i];
            for (k, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    steps.push((x, k, y));
                    frontier.push(y);
                }
            }
            i += 1;
        }
        Self { gens, steps }
    }

    /// Extends generator images to a map and checks `φ(x s) = φ(x) φ(s)`
    /// for every element and generator.
    fn extend(&self, g: &FiniteGroup, h: &FiniteGroup, gen_images: &[usize]) -> Option<Vec<usize>> {
        let mut phi = vec![usize::MAX; g.order()];
        phi[g.identity()] = h.identity();
        for &(x, k, y) in &self.steps {
            phi[y] = h.mul(phi[x], gen_images[k]);
        }
        for x in g.elements() {
            for (k, &s) in self.gens.iter().enumerate() {
                if phi[g.mul(x, s)] != h.mul(phi[x], gen_images[k]) {
                    return None;
                }
            }
        }
        Some(phi)
    }
}

/// All homomorphisms `G → H` (sorted image arrays). With `bijective`, only isomorphisms.
pub fn homomorphisms(g: &FiniteGroup, h: &FiniteGroup, bijective: bool) -> Vec<Vec<usize>> {
    if bijective && g.order() != h.order() {
        return Vec::new();
    }
    let tree = WordTree::new(g);
    let h_orders: Vec<usize> = h.elements().map(|x| h.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = tree
        .gens
        .iter()
        .map(|&s| {
            let o = g.element_order(s);
            h.elements()
                .filter(|&x| if bijective { h_orders[x] == o } else { o.is_multiple_of(h_orders[x]) })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(tree.gens.len());
    backtrack(&tree, g, h, &candidates, &mut chosen, bijective, &mut out);
    out.sort();
    out
}

fn backtrack(
    tree: &WordTree,
    g: &FiniteGroup,
    h: &FiniteGroup,
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    bijective: bool,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == tree.gens.len() {
        if let Some(phi) = tree.extend(g, h, chosen) {
            if !bijective || crate::perm::is_permutation(&phi) {
                out.push(phi);
            }
        }
        return;
    }
    for &c in &candidates[chosen.len()] {
        if bijective && chosen.contains(&c) {
            continue;
        }
        chosen.push(c);
        backtrack(tree, g, h, candidates, chosen, bijective, out);
        chosen.pop();
    }
}

/// Every automorphism, lexicographic on image arrays, identity first.
pub fn automorphism_group(g: &FiniteGroup, caps: &Caps) -> Result<Vec<GroupMap>> {
    caps.check_group(g.order())?;
    Ok(homomorphisms(g, g, true).into_iter().map(|m| GroupMap::new(g, m)).collect())
}

pub fn endomorphisms(g: &FiniteGroup, caps: &Caps) -> Result<Vec<GroupMap>> {
    caps.check_group(g.order())?;
    Ok(homomorphisms(g, g, false).into_iter().map(|m| GroupMap::new(g, m)).collect())
}

/// All anti-endomorphisms, i.e. homomorphisms `G → G^op`.
pub fn anti_endomorphisms(g: &FiniteGroup, caps: &Caps) -> Result<Vec<GroupMap>> {
    caps.check_group(g.order())?;
    let op = g.opposite();
    Ok(homomorphisms(g, &op, false).into_iter().map(|m| GroupMap::new(g, m)).collect())
}

pub fn first_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    homomorphisms(g, h, true).into_iter().next()
}
