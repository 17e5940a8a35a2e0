//! Brace systems: families of operations on one carrier with a graph of
//! the ordered pairs `(∘_u, ∘_v)` that form skew braces.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::brace::{is_left_brace, lambda_from_images, link_check, SkewBrace};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm;
use crate::rota_baxter::rb_levels;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemKind {
    General,
    Symmetric,
    FullSymmetric,
    Linear,
    Rooted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeStatus {
    Verified,
    Failed,
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub label: String,
    pub op: FiniteGroup,
}

#[derive(Clone, Debug)]
pub struct BraceSystemGraph {
    pub carrier_order: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize, EdgeStatus)>,
    pub kind: SystemKind,
    /// Level `i` of a linear family to the vertex holding `∘_i`.
    pub levels: BTreeMap<i64, usize>,
    pub image_exponent: Option<usize>,
}

impl BraceSystemGraph {
    /// Vertices deduplicated by table (first occurrence wins), with every
    /// listed ordered pair checked and tagged.
    pub fn from_operations(
        carrier_order: usize,
        ops: Vec<(String, FiniteGroup)>,
        pairs: impl Fn(usize, usize) -> bool,
        kind: SystemKind,
    ) -> Result<Self> {
        let mut vertices: Vec<Vertex> = Vec::new();
        let mut slot = Vec::with_capacity(ops.len());
        for (label, op) in ops {
            if op.order() != carrier_order {
                return Err(Error::CarrierMismatch);
            }
            match vertices.iter().position(|v| v.op == op) {
                Some(i) => slot.push(i),
                None => {
                    slot.push(vertices.len());
                    vertices.push(Vertex { label, op });
                }
            }
        }
        let mut edges = Vec::new();
        for u in 0..vertices.len() {
            for v in 0..vertices.len() {
                if u != v && pairs(u, v) {
                    let ok = is_left_brace(&vertices[u].op, &vertices[v].op);
                    edges.push((u, v, if ok { EdgeStatus::Verified } else { EdgeStatus::Failed }));
                }
            }
        }
        let levels = slot.iter().enumerate().map(|(i, &s)| (i as i64, s)).collect();
        Ok(Self { carrier_order, vertices, edges, kind, levels, image_exponent: None })
    }

    pub fn vertex_at_level(&self, level: i64) -> Option<usize> {
        self.levels.get(&level).copied()
    }

    pub fn edge(&self, u: usize, v: usize) -> Option<EdgeStatus> {
        self.edges.iter().find(|e| e.0 == u && e.1 == v).map(|e| e.2)
    }

    pub fn all_verified(&self) -> bool {
        self.edges.iter().all(|e| e.2 == EdgeStatus::Verified)
    }

    /// Verified edges are closed under reversal.
    pub fn is_symmetric(&self) -> bool {
        self.edges
            .iter()
            .filter(|e| e.2 == EdgeStatus::Verified)
            .all(|e| self.edge(e.1, e.0) == Some(EdgeStatus::Verified))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinearLaws {
    pub closed_form: bool,
    pub kernel_level_independent: bool,
    pub image_level_independent: bool,
    pub lambda_automorphic_all_levels: bool,
    pub all_pairs_verified: bool,
    pub all_pairs_symmetric: bool,
}

#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub graph: BraceSystemGraph,
    pub laws: LinearLaws,
}

/// `∘_0 = ·`, `a ∘_{i+1} b = a ∘_i λ_a(b)` for `i < depth` (and with `λ_a⁻¹`
/// for negative levels). `λ` must be a homomorphism with abelian image and
/// `b⁻¹λ_a(b) ∈ Ker λ`.
pub fn build_linear_system(
    g: &FiniteGroup,
    lam: &[Vec<usize>],
    depth: Option<usize>,
    include_negative: bool,
    caps: &Caps,
) -> Result<LinearSystem> {
    let n = g.order();
    if g.identity() != 0 || lam.len() != n {
        return Err(Error::PreconditionFails("expected one map per element of a group with identity 0".into()));
    }
    let lmap = lambda_from_images(g, lam.to_vec())
        .map_err(|e| Error::PreconditionFails(format!("lambda is not into Aut(G): {e}")))?;
    for a in g.elements() {
        for b in g.elements() {
            if lam[g.mul(a, b)] != perm::compose(&lam[a], &lam[b]) {
                return Err(Error::PreconditionFails(format!("lambda is not a homomorphism at ({a}, {b})")));
            }
            if lmap.kernel.binary_search(&g.mul(g.inv(b), lam[a][b])).is_err() {
                return Err(Error::PreconditionFails(format!("b⁻¹λ_a(b) not in Ker λ at ({a}, {b})")));
            }
        }
    }
    if !lmap.image_abelian {
        return Err(Error::PreconditionFails("lambda image is not abelian".into()));
    }
    let depth = depth.unwrap_or(lmap.image_exponent);
    let count = 1 + depth * if include_negative { 2 } else { 1 };
    if count > caps.max_system_vertices {
        return Err(Error::OrderCapExceeded { what: "system", order: count, cap: caps.max_system_vertices });
    }

    let xi: Vec<Vec<usize>> = lam.iter().map(|p| perm::invert(p)).collect();
    let closed = |i: i64| -> Result<FiniteGroup> {
        let powers: Vec<Vec<usize>> = lam.iter().map(|p| perm::power(p, i)).collect();
        FiniteGroup::from_fn(n, |a, b| g.mul(a, powers[a][b]))
    };
    let mut ops: Vec<(i64, FiniteGroup)> = vec![(0, g.clone())];
    let mut closed_form = true;
    for (sign, step) in [(1i64, lam), (-1, xi.as_slice())] {
        if sign < 0 && !include_negative {
            break;
        }
        let mut cur = g.clone();
        for i in 1..=depth as i64 {
            let next = FiniteGroup::from_fn(n, |a, b| cur.mul(a, step[a][b]))?;
            closed_form &= next == closed(sign * i)?;
            ops.push((sign * i, next.clone()));
            cur = next;
        }
    }
    if !closed_form {
        return Err(Error::CriterionMismatch("iterated table differs from a·λ_a^i(b)".into()));
    }

    let labels: Vec<(String, FiniteGroup)> = ops.iter().map(|(i, op)| (format!("∘_{i}"), op.clone())).collect();
    let mut graph = BraceSystemGraph::from_operations(n, labels, |_, _| true, SystemKind::Linear)?;
    graph.levels = ops
        .iter()
        .map(|(i, op)| (*i, graph.vertices.iter().position(|v| &v.op == op).expect("vertex")))
        .collect();
    graph.image_exponent = Some(lmap.image_exponent);

    let mut kernel_level_independent = true;
    let mut image_level_independent = true;
    let mut lambda_automorphic_all_levels = true;
    for &level in graph.levels.keys() {
        let here = closed(level)?;
        let above = closed(level + 1)?;
        let l = crate::brace::lambda_of_tables(&here, &above)?;
        kernel_level_independent &= l.kernel == lmap.kernel;
        image_level_independent &= l.maps.iter().zip(lam).all(|(m, p)| &m.images == p);
        lambda_automorphic_all_levels &= lam.iter().all(|p| crate::group::is_hom_between(&here, &here, p));
    }
    let all_pairs_verified = graph.all_verified();
    let all_pairs_symmetric = graph.is_symmetric();
    Ok(LinearSystem {
        graph,
        laws: LinearLaws {
            closed_form,
            kernel_level_independent,
            image_level_independent,
            lambda_automorphic_all_levels,
            all_pairs_verified,
            all_pairs_symmetric,
        },
    })
}

/// Smallest `p ≥ 1` with `∘_p = ∘_0`, checked to divide the image exponent.
pub fn detect_period(sys: &BraceSystemGraph) -> Result<Option<usize>> {
    let base = sys.vertex_at_level(0);
    let period = sys.levels.iter().filter(|(&i, _)| i >= 1).find(|(_, &v)| Some(v) == base).map(|(&i, _)| i as usize);
    if let (Some(p), Some(e)) = (period, sys.image_exponent) {
        if e % p != 0 {
            return Err(Error::CriterionMismatch(format!("period {p} does not divide image exponent {e}")));
        }
    }
    Ok(period)
}

#[derive(Clone, Debug)]
pub struct UnionReport {
    pub graph: BraceSystemGraph,
    pub hypotheses_met: bool,
    pub advisory: Option<String>,
}

/// Merges two linear systems over the same base operation and checks every
/// cross pair `(∘_i, ★_j)` directly.
pub fn union_systems(s1: &BraceSystemGraph, s2: &BraceSystemGraph) -> Result<UnionReport> {
    if s1.carrier_order != s2.carrier_order {
        return Err(Error::CarrierMismatch);
    }
    let op_at = |s: &BraceSystemGraph, i: i64| s.vertex_at_level(i).map(|v| s.vertices[v].op.clone());
    let base = op_at(s1, 0).ok_or(Error::BaseMismatch)?;
    if Some(&base) != op_at(s2, 0).as_ref() || base.identity() != 0 {
        return Err(Error::BaseMismatch);
    }
    let mut hypotheses_met = false;
    let mut advisory = None;
    match (op_at(s1, 1), op_at(s2, 1)) {
        (Some(c1), Some(c2)) => {
            let b1 = SkewBrace::new(base.clone(), c1)?;
            let b2 = SkewBrace::new(base.clone(), c2)?;
            let r = link_check(&b1, &b2)?;
            let (l1, l2) = (b1.lambda(), b2.lambda());
            let kinds = l1.homomorphic_on_add && l2.homomorphic_on_add && l1.image_abelian && l2.image_abelian;
            hypotheses_met = kinds && r.images_commute && r.cond_i && r.cond_ii;
            if !hypotheses_met {
                advisory = Some(format!(
                    "HypothesisNotMet: homomorphic+abelian {kinds}, images commute {}, cond_i {}, cond_ii {}",
                    r.images_commute, r.cond_i, r.cond_ii
                ));
            }
        }
        _ => advisory = Some("HypothesisNotMet: a system lacks level 1".into()),
    }

    let mut ops: Vec<(String, FiniteGroup)> = Vec::new();
    let mut origin = Vec::new();
    for (tag, s) in [("∘", s1), ("★", s2)] {
        for (&level, &v) in &s.levels {
            ops.push((format!("{tag}_{level}"), s.vertices[v].op.clone()));
            origin.push((tag, level));
        }
    }
    let mut graph = BraceSystemGraph::from_operations(s1.carrier_order, ops.clone(), |_, _| true, SystemKind::General)?;
    graph.levels = BTreeMap::new();
    let vertex_of = |op: &FiniteGroup| graph.vertices.iter().position(|v| &v.op == op).expect("vertex");
    let mut cross_ok = true;
    for (i, (ta, la)) in origin.iter().enumerate() {
        for (j, (tb, lb)) in origin.iter().enumerate() {
            if *ta == "∘" && *tb == "★" && *la >= 1 && *lb >= 1 {
                let (u, v) = (vertex_of(&ops[i].1), vertex_of(&ops[j].1));
                if u != v {
                    cross_ok &= graph.edge(u, v) == Some(EdgeStatus::Verified)
                        && graph.edge(v, u) == Some(EdgeStatus::Verified);
                }
            }
        }
    }
    if hypotheses_met && !cross_ok {
        return Err(Error::CriterionMismatch("union of systems has an unverified cross pair".into()));
    }
    if graph.is_symmetric() {
        graph.kind = if graph.all_verified() { SystemKind::FullSymmetric } else { SystemKind::Symmetric };
    }
    Ok(UnionReport { graph, hypotheses_met, advisory })
}

/// `∘_0 = ·`, `x ∘_{i+1} y = x ∘_i B(x) ∘_i y ∘_i B(x)^{∘_i(−1)}`; consecutive
/// pairs must be braces, the others are only tagged.
pub fn build_rb_multibrace(g: &FiniteGroup, b: &[usize], k: usize) -> Result<BraceSystemGraph> {
    let levels = rb_levels(g, b, k)?;
    let ops: Vec<(String, FiniteGroup)> =
        levels.iter().enumerate().map(|(i, op)| (format!("∘_{i}"), op.clone())).collect();
    let mut graph = BraceSystemGraph::from_operations(g.order(), ops, |_, _| true, SystemKind::Linear)?;
    graph.levels = levels
        .iter()
        .enumerate()
        .map(|(i, op)| (i as i64, graph.vertices.iter().position(|v| &v.op == op).expect("vertex")))
        .collect();
    for i in 1..=k as i64 {
        let (u, v) = (graph.levels[&(i - 1)], graph.levels[&i]);
        if u != v && graph.edge(u, v) != Some(EdgeStatus::Verified) {
            return Err(Error::CriterionMismatch(format!("multibrace pair ({}, {i}) fails", i - 1)));
        }
    }
    Ok(graph)
}

#[derive(Serialize)]
struct GraphJson<'a> {
    carrier_order: usize,
    vertices: Vec<Vec<Vec<usize>>>,
    edges: Vec<(usize, usize, EdgeStatus)>,
    kind: &'a SystemKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

pub fn export_graph(sys: &BraceSystemGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => {
            let doc = GraphJson {
                carrier_order: sys.carrier_order,
                vertices: sys.vertices.iter().map(|v| v.op.rows()).collect(),
                edges: sys.edges.clone(),
                kind: &sys.kind,
            };
            serde_json::to_string(&doc).expect("graph serializes")
        }
        GraphFormat::Dot => {
            let mut out = String::from("digraph brace_system {\n");
            for (i, v) in sys.vertices.iter().enumerate() {
                let _ = writeln!(out, "  v{i} [label=\"{}\"];", v.label);
            }
            for &(u, v, status) in &sys.edges {
                match status {
                    EdgeStatus::Verified => {
                        let _ = writeln!(out, "  v{u} -> v{v};");
                    }
                    EdgeStatus::Failed => {
                        let _ = writeln!(out, "  v{u} -> v{v} [status=failed, style=dashed];");
                    }
                }
            }
            out.push_str("}\n");
            out
        }
    }
}
