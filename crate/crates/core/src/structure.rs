//! Ideals, quotient braces and the triviality step.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::automorphism::automorphism_group;
use crate::brace::SkewBrace;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{is_hom_between, FiniteGroup, GroupMap};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdealChecks {
    pub lambda_invariant: bool,
    pub normal_add: bool,
    pub normal_circ: bool,
}

impl IdealChecks {
    pub fn all(&self) -> bool {
        self.lambda_invariant && self.normal_add && self.normal_circ
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ideal {
    elements: Vec<usize>,
    checks: IdealChecks,
}

impl Ideal {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn checks(&self) -> IdealChecks {
        self.checks
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Why a set is not an ideal. Witnesses are `(a, s)` with `λ_a(s)`, `a·s·a⁻¹`
/// or `a∘s∘ā` outside the set; `None` when the set is not even a subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealFailure {
    pub elements: Vec<usize>,
    pub checks: IdealChecks,
    pub lambda_witness: Option<(usize, usize)>,
    pub add_witness: Option<(usize, usize)>,
    pub circ_witness: Option<(usize, usize)>,
}

fn normal_witness(g: &FiniteGroup, inside: &[bool], set: &[usize]) -> (bool, Option<(usize, usize)>) {
    if !g.is_subgroup(set) {
        return (false, None);
    }
    for a in g.elements() {
        for &s in set {
            if !inside[g.conj(a, s)] {
                return (false, Some((a, s)));
            }
        }
    }
    (true, None)
}

pub fn is_ideal(brace: &SkewBrace, set: &[usize]) -> std::result::Result<Ideal, IdealFailure> {
    let n = brace.order();
    let mut elements: Vec<usize> = set.iter().copied().filter(|&x| x < n).collect();
    elements.sort_unstable();
    elements.dedup();
    let mut inside = vec![false; n];
    for &x in &elements {
        inside[x] = true;
    }
    let lambda_witness = (0..n).flat_map(|a| elements.iter().map(move |&s| (a, s))).find(|&(a, s)| !inside[brace.lam(a, s)]);
    let (normal_add, add_witness) = normal_witness(brace.add(), &inside, &elements);
    let (normal_circ, circ_witness) = normal_witness(brace.circ(), &inside, &elements);
    let checks = IdealChecks { lambda_invariant: lambda_witness.is_none() && elements.len() == set.len(), normal_add, normal_circ };
    if checks.all() {
        Ok(Ideal { elements, checks })
    } else {
        Err(IdealFailure { elements, checks, lambda_witness, add_witness, circ_witness })
    }
}

/// `Ker λ`, on which `∘` and `·` agree. It is a normal subgroup of `(G,∘)`
/// but need not be an ideal unless `λ` is a homomorphism or an
/// anti-homomorphism from `(G,·)`; three braces on `S₃` fail.
pub fn kernel_ideal(brace: &SkewBrace) -> Result<Ideal> {
    let kernel = brace.lambda().kernel.clone();
    let (add, circ) = (brace.add(), brace.circ());
    let acts_trivially: Vec<usize> =
        add.elements().filter(|&a| add.elements().all(|b| circ.mul(a, b) == add.mul(a, b))).collect();
    assert_eq!(kernel, acts_trivially, "Ker λ differs from {{a : a∘b = a·b}}");
    assert!(kernel.iter().all(|&a| kernel.iter().all(|&b| circ.mul(a, b) == add.mul(a, b))));
    is_ideal(brace, &kernel).map_err(|_| Error::NotAnIdeal)
}

/// Cosets of an ideal, numbered by their smallest element.
#[derive(Clone, Debug)]
pub struct Cosets {
    pub representatives: Vec<usize>,
    pub coset_of: Vec<usize>,
}

fn cosets(add: &FiniteGroup, ideal: &[usize]) -> Cosets {
    let n = add.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for a in add.elements() {
        if coset_of[a] == usize::MAX {
            for &s in ideal {
                coset_of[add.mul(a, s)] = representatives.len();
            }
            representatives.push(a);
        }
    }
    Cosets { representatives, coset_of }
}

fn induced(g: &FiniteGroup, c: &Cosets) -> Result<FiniteGroup> {
    let m = c.representatives.len();
    let table = |i: usize, j: usize| c.coset_of[g.mul(c.representatives[i], c.representatives[j])];
    for x in g.elements() {
        for y in g.elements() {
            if c.coset_of[g.mul(x, y)] != table(c.coset_of[x], c.coset_of[y]) {
                return Err(Error::NotAnIdeal);
            }
        }
    }
    FiniteGroup::from_fn(m, table)
}

pub fn quotient_brace(brace: &SkewBrace, ideal: &Ideal) -> Result<SkewBrace> {
    if is_ideal(brace, ideal.elements()).is_err() {
        return Err(Error::NotAnIdeal);
    }
    let c = cosets(brace.add(), ideal.elements());
    let q = SkewBrace::new(induced(brace.add(), &c)?, induced(brace.circ(), &c)?)?;
    debug_assert!(crate::brace::verify_brace(q.add(), q.circ()).left_ok);
    Ok(q)
}

pub fn ideals(brace: &SkewBrace) -> Vec<Ideal> {
    brace.add().subgroups().into_iter().filter_map(|s| is_ideal(brace, &s).ok()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialityChain {
    pub chain: Vec<Ideal>,
    pub step: usize,
}

/// `J/I` is a trivial brace: `(a·b)⁻¹·(a∘b) ∈ I` for all `a, b ∈ J`.
fn trivial_layer(brace: &SkewBrace, lower: &Ideal, upper: &Ideal) -> bool {
    let (add, circ) = (brace.add(), brace.circ());
    lower.elements.iter().all(|x| upper.contains(*x))
        && upper.elements.iter().all(|&a| {
            upper.elements.iter().all(|&b| lower.contains(add.mul(add.inv(add.mul(a, b)), circ.mul(a, b))))
        })
}

/// Shortest chain `{e} = I₀ ≤ … ≤ I_n = G` of ideals with trivial layers.
pub fn triviality_step(brace: &SkewBrace, caps: &Caps) -> Result<Option<TrivialityChain>> {
    if brace.order() > caps.max_structure_order {
        return Err(Error::OrderCapExceeded { what: "structure", order: brace.order(), cap: caps.max_structure_order });
    }
    let all = ideals(brace);
    let bottom = 0;
    let top = all.iter().position(|i| i.len() == brace.order()).expect("G is an ideal");
    if brace.order() == 1 {
        return Ok(Some(TrivialityChain { chain: vec![all[0].clone()], step: 0 }));
    }
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::from([bottom]);
    parent.insert(bottom, bottom);
    while let Some(i) = queue.pop_front() {
        if i == top {
            let mut chain = vec![all[top].clone()];
            let mut cur = top;
            while cur != bottom {
                cur = parent[&cur];
                chain.push(all[cur].clone());
            }
            chain.reverse();
            let step = chain.len() - 1;
            return Ok(Some(TrivialityChain { chain, step }));
        }
        for j in 0..all.len() {
            if !parent.contains_key(&j) && all[j].len() > all[i].len() && trivial_layer(brace, &all[i], &all[j]) {
                parent.insert(j, i);
                queue.push_back(j);
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalityReport {
    pub is_natural: bool,
    pub quotient_natural: bool,
}

pub fn naturality_report(brace: &SkewBrace) -> Result<NaturalityReport> {
    let add = brace.add();
    if !brace.lambda().anti_homomorphic_on_add {
        let maps = &brace.lambda().maps;
        let (a, b) = add
            .elements()
            .flat_map(|a| add.elements().map(move |b| (a, b)))
            .find(|&(a, b)| {
                maps[add.mul(a, b)].images != crate::perm::compose(&maps[b].images, &maps[a].images)
            })
            .expect("witness");
        return Err(Error::NotAntiHomomorphic(a, b));
    }
    let is_natural = brace.circ() == &add.opposite();
    let q = quotient_brace(brace, &kernel_ideal(brace)?)?;
    let quotient_natural = q.circ() == &q.add().opposite();
    if !(is_natural || quotient_natural) {
        return Err(Error::CriterionMismatch("neither the brace nor G/Ker λ is natural".into()));
    }
    Ok(NaturalityReport { is_natural, quotient_natural })
}

/// Permutations that are automorphisms of both `(G,·)` and `(G,∘)`.
pub fn brace_automorphisms(brace: &SkewBrace, caps: &Caps) -> Result<Vec<GroupMap>> {
    if brace.order() > caps.max_structure_order {
        return Err(Error::OrderCapExceeded { what: "structure", order: brace.order(), cap: caps.max_structure_order });
    }
    let out: Vec<GroupMap> = automorphism_group(brace.add(), caps)?
        .into_iter()
        .filter(|m| is_hom_between(brace.circ(), brace.circ(), &m.images))
        .collect();
    let l = brace.lambda();
    if l.homomorphic_on_add && l.image_abelian {
        for p in &l.image {
            if !out.iter().any(|m| &m.images == p) {
                return Err(Error::CriterionMismatch("a λ_a is not a brace automorphism".into()));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub ideals: Vec<Vec<usize>>,
    pub st: Option<usize>,
    pub chain: Vec<Vec<usize>>,
}

pub fn structure_report(brace: &SkewBrace, caps: &Caps) -> Result<StructureReport> {
    let chain = triviality_step(brace, caps)?;
    Ok(StructureReport {
        ideals: ideals(brace).into_iter().map(|i| i.elements).collect(),
        st: chain.as_ref().map(|c| c.step),
        chain: chain.map(|c| c.chain.into_iter().map(|i| i.elements).collect()).unwrap_or_default(),
    })
}
