//! Finite groups given by Cayley tables.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, GroupViolation, Result};
use crate::perm;

/// A group on `{0, .., n-1}`; `table[a * n + b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
}

/// Result of [`verify_group`]: the group with identity moved to 0 and the
/// relabeling used (`relabel[old] = new`).
#[derive(Clone, Debug)]
pub struct VerifiedGroup {
    pub group: FiniteGroup,
    pub relabel: Vec<usize>,
}

/// Validates a raw table and normalizes its identity to index 0.
pub fn verify_group(rows: &[Vec<usize>]) -> Result<VerifiedGroup> {
    let g = FiniteGroup::from_rows(rows)?;
    let mut relabel = perm::identity(g.order);
    relabel.swap(0, g.identity);
    let group = g.relabeled(&relabel);
    Ok(VerifiedGroup { group, relabel })
}

/// Lists every violated axiom of a raw table. Empty means the table is a group.
pub fn group_violations(rows: &[Vec<usize>]) -> Vec<GroupViolation> {
    let n = rows.len();
    if n == 0 {
        return vec![GroupViolation::NotSquare { row: 0, len: 0 }];
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return vec![GroupViolation::NotSquare { row: r, len: row.len() }];
        }
        if let Some(c) = row.iter().position(|&v| v >= n) {
            return vec![GroupViolation::OutOfRange { row: r, col: c, value: row[c] }];
        }
    }
    let at = |a: usize, b: usize| rows[a][b];
    let mut out = Vec::new();

    let bad_row = (0..n).find(|&r| !perm::is_permutation(&rows[r]));
    let bad_col = (0..n).find(|&c| {
        let col: Vec<usize> = (0..n).map(|r| at(r, c)).collect();
        !perm::is_permutation(&col)
    });
    let latin = bad_row.is_none() && bad_col.is_none();
    if !latin {
        out.push(GroupViolation::NotLatinSquare { row: bad_row, col: bad_col });
    }

    let identity = (0..n).find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a));
    if identity.is_none() {
        out.push(GroupViolation::NoIdentity);
    }

    if let Some(w) = associativity_witness(n, &at, identity) {
        out.push(GroupViolation::NotAssociative { a: w.0, b: w.1, c: w.2 });
    }

    if let Some(e) = identity {
        if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| at(a, b) == e && at(b, a) == e)) {
            out.push(GroupViolation::NoInverse { a });
        }
    }
    out
}

/// Light's test against a magma generating set, falling back to the full
/// triple scan when no identity is available.
fn associativity_witness(
    n: usize,
    at: &dyn Fn(usize, usize) -> usize,
    identity: Option<usize>,
) -> Option<(usize, usize, usize)> {
    let gens = match identity {
        Some(e) => magma_generators(n, at, e),
        None => (0..n).collect(),
    };
    for x in 0..n {
        for &g in &gens {
            let xg = at(x, g);
            for y in 0..n {
                if at(xg, y) != at(x, at(g, y)) {
                    return Some((x, g, y));
                }
            }
        }
    }
    None
}

fn magma_generators(n: usize, at: &dyn Fn(usize, usize) -> usize, e: usize) -> Vec<usize> {
    let mut inside = vec![false; n];
    let mut members = vec![e];
    inside[e] = true;
    let mut gens = Vec::new();
    for cand in 0..n {
        if inside[cand] {
            continue;
        }
        gens.push(cand);
        let mut queue = VecDeque::from([cand]);
        inside[cand] = true;
        members.push(cand);
        while let Some(x) = queue.pop_front() {
            let snapshot = members.len();
            for i in 0..snapshot {
                let y = members[i];
                for z in [at(x, y), at(y, x)] {
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                        queue.push_back(z);
                    }
                }
            }
        }
        if members.len() == n {
            break;
        }
    }
    gens
}

impl FiniteGroup {
    /// Validates a table, keeping its labels.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let v = group_violations(rows);
        if !v.is_empty() {
            return Err(Error::InvalidGroup(v));
        }
        let n = rows.len();
        let table: Vec<u32> = rows.iter().flatten().map(|&x| x as u32).collect();
        Ok(Self::assemble(n, table))
    }

    /// Builds and validates the table `f(a, b)`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Self::from_rows(&rows)
    }

    fn assemble(n: usize, table: Vec<u32>) -> Self {
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e * n + a] as usize == a))
            .expect("validated table has an identity");
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] as usize == identity {
                    inverse[a] = b as u32;
                    break;
                }
            }
        }
        Self { order: n, table, identity, inverse }
    }

    pub fn trivial() -> Self {
        Self { order: 1, table: vec![0], identity: 0, inverse: vec![0] }
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        Self::assemble(n, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a)).collect()
    }

    pub fn row(&self, a: usize) -> Vec<usize> {
        let n = self.order;
        self.table[a * n..(a + 1) * n].iter().map(|&x| x as usize).collect()
    }

    /// Product of a left-to-right sequence.
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, perm::lcm)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.product(&[self.inv(a), self.inv(b), a, b])
    }

    /// `g x g⁻¹`.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The same set with `a ·op b = b · a`.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let table = (0..n * n).map(|i| self.table[(i % n) * n + i / n]).collect();
        Self { order: n, table, identity: self.identity, inverse: self.inverse.clone() }
    }

    /// Pushes the structure forward along `p` (`p[old] = new`).
    pub fn relabeled(&self, p: &[usize]) -> Self {
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[p[a] * n + p[b]] = p[self.mul(a, b)] as u32;
            }
        }
        Self::assemble(n, table)
    }

    /// `G × H` with `(g, h)` stored at `g * |H| + h`.
    pub fn direct_product(&self, other: &Self) -> Self {
        let m = other.order;
        let n = self.order * m;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let g = self.mul(x / m, y / m);
                let h = other.mul(x % m, y % m);
                table[x * n + y] = (g * m + h) as u32;
            }
        }
        Self::assemble(n, table)
    }

    /// Sorted subgroup generated by `seeds`.
    pub fn closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        let gens: Vec<usize> = seeds.to_vec();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&i| inside[i]).collect()
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &s in set {
            if s >= self.order {
                return false;
            }
            inside[s] = true;
        }
        inside[self.identity]
            && set.iter().all(|&a| inside[self.inv(a)] && set.iter().all(|&b| inside[self.mul(a, b)]))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &s in set {
            inside[s] = true;
        }
        self.is_subgroup(set) && self.elements().all(|g| set.iter().all(|&h| inside[self.conj(g, h)]))
    }

    /// Greedy generating set: smallest elements first.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in self.elements() {
            if span.len() == self.order {
                break;
            }
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.closure(&gens);
            }
        }
        gens
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms: Vec<usize> =
            self.elements().flat_map(|a| self.elements().map(move |b| (a, b))).map(|(a, b)| self.commutator(a, b)).collect();
        comms.sort_unstable();
        comms.dedup();
        self.closure(&comms)
    }

    /// Conjugations `x ↦ g x g⁻¹`, one per coset of the center, in order of
    /// the smallest representative.
    pub fn inner_automorphisms(&self) -> Vec<GroupMap> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for g in self.elements() {
            let images: Vec<usize> = self.elements().map(|x| self.conj(g, x)).collect();
            if seen.insert(images.clone()) {
                out.push(GroupMap::new(self, images));
            }
        }
        out
    }

    /// Every subgroup, as sorted element lists in lexicographic order.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found = std::collections::BTreeSet::new();
        let trivial = vec![self.identity];
        found.insert(trivial.clone());
        let mut queue = VecDeque::from([trivial]);
        while let Some(h) = queue.pop_front() {
            let mut inside = vec![false; self.order];
            for &x in &h {
                inside[x] = true;
            }
            for x in self.elements() {
                if inside[x] {
                    continue;
                }
                let mut seeds = h.clone();
                seeds.push(x);
                let k = self.closure(&seeds);
                if found.insert(k.clone()) {
                    queue.push_back(k);
                }
            }
        }
        found.into_iter().collect()
    }
}

/// A self-map of a group with its homomorphism flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupMap {
    pub images: Vec<usize>,
    pub is_endomorphism: bool,
    pub is_automorphism: bool,
    pub is_anti_homomorphism: bool,
}

impl GroupMap {
    pub fn new(g: &FiniteGroup, images: Vec<usize>) -> Self {
        let is_endomorphism = is_hom_between(g, g, &images);
        let is_anti_homomorphism =
            g.elements().all(|a| g.elements().all(|b| images[g.mul(a, b)] == g.mul(images[b], images[a])));
        let is_automorphism = is_endomorphism && perm::is_permutation(&images);
        Self { images, is_endomorphism, is_automorphism, is_anti_homomorphism }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Self::new(g, perm::identity(g.order()))
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }
}

/// `images[a·b] = images[a]·images[b]` for a map `G → H`.
pub fn is_hom_between(g: &FiniteGroup, h: &FiniteGroup, images: &[usize]) -> bool {
    images.len() == g.order()
        && images.iter().all(|&x| x < h.order())
        && g.elements().all(|a| g.elements().all(|b| images[g.mul(a, b)] == h.mul(images[a], images[b])))
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureSubgroups {
    pub center: Vec<usize>,
    pub derived_subgroup: Vec<usize>,
    pub inner_automorphisms: Vec<GroupMap>,
}

pub fn structure_subgroups(g: &FiniteGroup) -> StructureSubgroups {
    StructureSubgroups {
        center: g.center(),
        derived_subgroup: g.derived_subgroup(),
        inner_automorphisms: g.inner_automorphisms(),
    }
}
