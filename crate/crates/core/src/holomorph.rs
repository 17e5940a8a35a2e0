//! The holomorph `Aut G ⋉ G` with `(f,a)(g,b) = (fg, a·f(b))`.
//!
//! Pairs `(f, a)` are indexed `f * |G| + a`; the identity is index 0.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::automorphism::automorphism_group;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap};
use crate::perm;

#[derive(Debug)]
pub struct Holomorph {
    base: FiniteGroup,
    automorphisms: Vec<GroupMap>,
    aut_mul: Vec<u32>,
    aut_inv: Vec<u32>,
    group: OnceLock<FiniteGroup>,
}

pub fn build_holomorph(g: &FiniteGroup, caps: &Caps) -> Result<Holomorph> {
    let automorphisms = automorphism_group(g, caps)?;
    let order = automorphisms.len() * g.order();
    if order > caps.max_holomorph_order {
        return Err(Error::OrderCapExceeded { what: "holomorph", order, cap: caps.max_holomorph_order });
    }
    let index: HashMap<&[usize], usize> =
        automorphisms.iter().enumerate().map(|(i, f)| (f.images.as_slice(), i)).collect();
    let k = automorphisms.len();
    let mut aut_mul = vec![0u32; k * k];
    let mut aut_inv = vec![0u32; k];
    for (i, f) in automorphisms.iter().enumerate() {
        aut_inv[i] = index[perm::invert(&f.images).as_slice()] as u32;
        for (j, h) in automorphisms.iter().enumerate() {
            aut_mul[i * k + j] = index[perm::compose(&f.images, &h.images).as_slice()] as u32;
        }
    }
    Ok(Holomorph { base: g.clone(), automorphisms, aut_mul, aut_inv, group: OnceLock::new() })
}

impl Holomorph {
    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn automorphisms(&self) -> &[GroupMap] {
        &self.automorphisms
    }

    pub fn order(&self) -> usize {
        self.automorphisms.len() * self.base.order()
    }

    pub fn pair_of(&self, x: usize) -> (usize, usize) {
        (x / self.base.order(), x % self.base.order())
    }

    pub fn index_of(&self, f: usize, a: usize) -> usize {
        f * self.base.order() + a
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        let (f, a) = self.pair_of(x);
        let (g, b) = self.pair_of(y);
        let fg = self.aut_mul[f * self.automorphisms.len() + g] as usize;
        self.index_of(fg, self.base.mul(a, self.automorphisms[f].apply(b)))
    }

    pub fn inv(&self, x: usize) -> usize {
        let (f, a) = self.pair_of(x);
        let fi = self.aut_inv[f] as usize;
        self.index_of(fi, self.automorphisms[fi].apply(self.base.inv(a)))
    }

    /// The full multiplication table, built on first use.
    pub fn group(&self) -> &FiniteGroup {
        self.group.get_or_init(|| {
            FiniteGroup::from_fn(self.order(), |x, y| self.mul(x, y)).expect("holomorph is a group")
        })
    }

    /// Seeds for the translation subgroup `{(id, a)}`.
    pub fn translation_seeds(&self) -> Vec<usize> {
        self.base.generators().into_iter().map(|a| self.index_of(0, a)).collect()
    }

    pub fn subgroup_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in seeds {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&i| inside[i]).collect()
    }

    /// True iff `s` has `|G|` elements with distinct second coordinates.
    pub fn is_regular_subgroup(&self, s: &[usize]) -> Result<bool> {
        let mut inside = vec![false; self.order()];
        for &x in s {
            if x >= self.order() {
                return Err(Error::NotASubgroup);
            }
            inside[x] = true;
        }
        if !inside[0] || !s.iter().all(|&x| s.iter().all(|&y| inside[self.mul(x, y)])) {
            return Err(Error::NotASubgroup);
        }
        if s.len() != self.base.order() {
            return Ok(false);
        }
        let mut seen = vec![false; self.base.order()];
        for &x in s {
            let a = self.pair_of(x).1;
            if seen[a] {
                return Ok(false);
            }
            seen[a] = true;
        }
        Ok(true)
    }
}
