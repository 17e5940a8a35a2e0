use std::fs;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use skewbrace::brace::{
    classify, construct_exact_factorization, construct_from_lambda, enumerate_circ_ops, verify_brace, LambdaMode,
};
use skewbrace::catalog;
use skewbrace::free::{
    free_rb_check, sampled_brace_check, verify_cyclic1, verify_t4, FreeAutomorphism, FreeWord,
};
use skewbrace::group::group_violations;
use skewbrace::io::{BraceFile, GroupFile, LoadedGroup, RbFile};
use skewbrace::lattice::{lattice_circ, lattice_system_check, LatticeVector};
use skewbrace::rota_baxter::{
    derived_group, inversion_operator, is_rb, printed_expansion_check, rb_brace, rb_lambda_hom_check,
    rb_symmetry_check, rb_witness,
};
use skewbrace::samples::op_brace;
use skewbrace::structure::{kernel_ideal, naturality_report, structure_report};
use skewbrace::system::{
    build_linear_system, build_rb_multibrace, detect_period, export_graph, BraceSystemGraph, GraphFormat, SystemKind,
};
use skewbrace::{Caps, Error, FiniteGroup, SkewBrace};

use crate::args::{
    BraceSource, Command, ConstructKind, Format, FreeCommand, GroupSource, SystemChoice, ThetaChoice,
};

pub struct Context {
    pub seed: u64,
    pub samples: usize,
    pub caps: Caps,
    pub format: Format,
}

pub struct Outcome {
    pub ok: bool,
    pub result: Value,
    pub dot: Option<String>,
}

impl Outcome {
    fn new(ok: bool, result: Value) -> Self {
        Self { ok, result, dot: None }
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable or malformed input: exit 2.
    Usage(String),
    /// A check raised an error: exit 1 with the error in the report.
    Check(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::Json { .. }
            | Error::OrderCapExceeded { .. }
            | Error::WindowTooSmall { .. }
            | Error::RankMismatch(..)
            | Error::UnsupportedFormat(_) => Failure::Usage(e.to_string()),
            other => Failure::Check(other),
        }
    }
}

type Run = Result<Outcome, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {}", path.display(), Error::from(e))))
}

/// Maps internal labels (identity 0) back to the labels of the input file.
struct Labels {
    to_input: Vec<usize>,
}

impl Labels {
    fn from_relabel(relabel: &[usize]) -> Self {
        let mut to_input = vec![0; relabel.len()];
        for (old, &new) in relabel.iter().enumerate() {
            to_input[new] = old;
        }
        Self { to_input }
    }

    fn elems(&self, xs: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = xs.iter().map(|&x| self.to_input[x]).collect();
        out.sort_unstable();
        out
    }

    fn table(&self, g: &FiniteGroup) -> Vec<Vec<usize>> {
        let n = g.order();
        let mut rows = vec![vec![0; n]; n];
        for a in g.elements() {
            for b in g.elements() {
                rows[self.to_input[a]][self.to_input[b]] = self.to_input[g.mul(a, b)];
            }
        }
        rows
    }

    /// Transports maps given in input labels to internal labels.
    fn maps_in(&self, maps: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, Failure> {
        let n = self.to_input.len();
        if maps.len() != n || maps.iter().any(|m| m.len() != n || m.iter().any(|&x| x >= n)) {
            return Err(usage(format!("expected {n} maps of {n} entries in 0..{n}")));
        }
        let mut to_internal = vec![0; n];
        for (new, &old) in self.to_input.iter().enumerate() {
            to_internal[old] = new;
        }
        let mut out = vec![vec![0; n]; n];
        for (a, m) in maps.iter().enumerate() {
            for (x, &y) in m.iter().enumerate() {
                out[to_internal[a]][to_internal[x]] = to_internal[y];
            }
        }
        Ok(out)
    }
}

fn load_group(source: &GroupSource) -> Result<(LoadedGroup, Labels), Failure> {
    let loaded = match (&source.path, &source.group) {
        (Some(path), _) => read_json::<GroupFile>(path)?.load()?,
        (None, Some(name)) => {
            let group = catalog::by_name(name).ok_or_else(|| usage(format!("unknown group name {name:?}")))?;
            let relabel = group.elements().collect();
            LoadedGroup { name: Some(name.clone()), group, relabel }
        }
        (None, None) => return Err(usage("a group is required: --in PATH or --group NAME")),
    };
    let labels = Labels::from_relabel(&loaded.relabel);
    Ok((loaded, labels))
}

fn load_brace_tables(source: &BraceSource) -> Result<(BraceFile, Labels), Failure> {
    let file: BraceFile = read_json(&source.path)?;
    let add = skewbrace::group::verify_group(&file.add).map_err(|e| usage(format!("additive table: {e}")))?;
    Ok((file, Labels::from_relabel(&add.relabel)))
}

fn load_brace(source: &BraceSource) -> Result<(SkewBrace, Labels), Failure> {
    let (file, labels) = load_brace_tables(source)?;
    let (add, circ) = file.load_tables().map_err(|e| usage(e.to_string()))?;
    Ok((SkewBrace::new(add, circ)?, labels))
}

fn brace_summary(brace: &SkewBrace, labels: &Labels) -> Result<Value, Failure> {
    let l = brace.lambda();
    Ok(json!({
        "order": brace.order(),
        "classification": classify(brace)?,
        "trivial": brace.is_trivial(),
        "lambda_kernel": labels.elems(&l.kernel),
        "lambda_image_order": l.image_order,
        "lambda_image_exponent": l.image_exponent,
        "lambda_image_abelian": l.image_abelian,
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LambdaFile {
    maps: Vec<Vec<usize>>,
    #[serde(default)]
    mode: Option<String>,
}

fn load_lambda(path: &Path, labels: &Labels) -> Result<(Vec<Vec<usize>>, LambdaMode), Failure> {
    let file: LambdaFile = read_json(path)?;
    let mode = match file.mode.as_deref() {
        None => LambdaMode::Homomorphic,
        Some(m) => m.parse()?,
    };
    Ok((labels.maps_in(&file.maps)?, mode))
}

fn finite_rb_map(map: &[usize], group: &LoadedGroup) -> Result<Vec<usize>, Failure> {
    Ok(RbFile::finite_map(map, group)?)
}

fn graph_value(graph: &BraceSystemGraph) -> Value {
    serde_json::from_str(&export_graph(graph, GraphFormat::Json)).expect("graph export is JSON")
}

fn graph_outcome(ctx: &Context, graph: &BraceSystemGraph, ok: bool, mut result: Value) -> Outcome {
    result["graph"] = graph_value(graph);
    result["all_edges_verified"] = json!(graph.all_verified());
    result["symmetric"] = json!(graph.is_symmetric());
    let dot = (ctx.format == Format::Dot).then(|| export_graph(graph, GraphFormat::Dot));
    Outcome { ok, result, dot }
}

pub fn run(ctx: &Context, command: &Command) -> Run {
    let graph_command = matches!(command, Command::System { .. });
    if ctx.format == Format::Dot && !graph_command {
        return Err(Error::UnsupportedFormat("dot output is only available for `system`".into()).into());
    }
    match command {
        Command::VerifyGroup { source } => verify_group_cmd(source),
        Command::VerifyBrace { source } => verify_brace_cmd(source),
        Command::Classify { source } => {
            let (brace, labels) = load_brace(source)?;
            Ok(Outcome::new(true, brace_summary(&brace, &labels)?))
        }
        Command::Construct { source, kind, lambda, a, b } => construct_cmd(ctx, source, *kind, lambda.as_deref(), a, b),
        Command::Enumerate { source, classify } => enumerate_cmd(ctx, source, *classify),
        Command::System { source, kind, lambda, depth, negative, map } => {
            system_cmd(ctx, source, *kind, lambda.as_deref(), *depth, *negative, map.as_deref())
        }
        Command::Structure { source } => structure_cmd(ctx, source),
        Command::Freegroup { command } => free_cmd(ctx, command),
        Command::Lattice { p, depth, a, b, level } => lattice_cmd(ctx, *p, *depth, a, b, *level),
        Command::Rb { path, group_file, group, levels } => rb_cmd(ctx, path, group_file.as_deref(), group.as_deref(), *levels),
    }
}

fn verify_group_cmd(source: &GroupSource) -> Run {
    if let Some(path) = &source.path {
        let file: GroupFile = read_json(path)?;
        if let Some(rows) = &file.table {
            let violations = group_violations(rows);
            if !violations.is_empty() {
                return Ok(Outcome::new(false, json!({ "group_ok": false, "order": rows.len(), "violations": violations })));
            }
        }
    }
    let (loaded, labels) = load_group(source)?;
    let g = &loaded.group;
    Ok(Outcome::new(
        true,
        json!({
            "group_ok": true,
            "name": loaded.name,
            "order": g.order(),
            "identity": labels.to_input[0],
            "abelian": g.is_abelian(),
            "exponent": g.exponent(),
            "center": labels.elems(&g.center()),
            "derived_subgroup": labels.elems(&g.derived_subgroup()),
        }),
    ))
}

fn verify_brace_cmd(source: &BraceSource) -> Run {
    let file: BraceFile = read_json(&source.path)?;
    let add_violations = group_violations(&file.add);
    let circ_violations = group_violations(&file.circ);
    if !add_violations.is_empty() || !circ_violations.is_empty() {
        return Ok(Outcome::new(
            false,
            json!({ "groups_ok": false, "add_violations": add_violations, "circ_violations": circ_violations }),
        ));
    }
    let (add, circ) = match file.load_tables() {
        Ok(t) => t,
        Err(e) => return Ok(Outcome::new(false, json!({ "groups_ok": true, "left_ok": false, "reason": e.to_string() }))),
    };
    let labels = Labels::from_relabel(&skewbrace::group::verify_group(&file.add)?.relabel);
    let report = verify_brace(&add, &circ);
    let witness = |w: Option<[usize; 3]>| w.map(|w| w.map(|x| labels.to_input[x]));
    Ok(Outcome::new(
        report.left_ok,
        json!({
            "groups_ok": true,
            "left_ok": report.left_ok,
            "right_ok": report.right_ok,
            "two_sided": report.two_sided,
            "left_witness": witness(report.left_witness),
            "right_witness": witness(report.right_witness),
        }),
    ))
}

fn construct_cmd(
    ctx: &Context,
    source: &GroupSource,
    kind: ConstructKind,
    lambda: Option<&Path>,
    a: &[usize],
    b: &[usize],
) -> Run {
    let (loaded, labels) = load_group(source)?;
    let g = &loaded.group;
    ctx.caps.check_group(g.order())?;
    let brace = match kind {
        ConstructKind::Trivial => SkewBrace::trivial(g),
        ConstructKind::Op => op_brace(g),
        ConstructKind::Inversion => rb_brace(g, &inversion_operator(g))?,
        ConstructKind::Lambda => {
            let path = lambda.ok_or_else(|| usage("--kind lambda needs --lambda PATH"))?;
            let (maps, mode) = load_lambda(path, &labels)?;
            construct_from_lambda(g, &maps, mode)?
        }
        ConstructKind::Factorization => {
            let n = g.order();
            if a.is_empty() || b.is_empty() || a.iter().chain(b).any(|&x| x >= n) {
                return Err(usage(format!("--kind factorization needs --a and --b with elements in 0..{n}")));
            }
            let inward = |xs: &[usize]| -> Vec<usize> {
                xs.iter().map(|&x| labels.to_input.iter().position(|&o| o == x).expect("label")).collect()
            };
            construct_exact_factorization(g, &inward(a), &inward(b))?
        }
    };
    let mut result = brace_summary(&brace, &labels)?;
    result["add"] = json!(labels.table(brace.add()));
    result["circ"] = json!(labels.table(brace.circ()));
    Ok(Outcome::new(true, result))
}

fn enumerate_cmd(ctx: &Context, source: &GroupSource, with_classes: bool) -> Run {
    let (loaded, labels) = load_group(source)?;
    let braces = enumerate_circ_ops(&loaded.group, &ctx.caps)?;
    let mut list = Vec::with_capacity(braces.len());
    for (i, b) in braces.iter().enumerate() {
        let mut entry = json!({ "index": i, "circ": labels.table(b.circ()) });
        if with_classes {
            entry["classification"] = json!(classify(b)?);
        }
        list.push(entry);
    }
    Ok(Outcome::new(true, json!({ "order": loaded.group.order(), "count": braces.len(), "braces": list })))
}

fn system_cmd(
    ctx: &Context,
    source: &GroupSource,
    kind: SystemChoice,
    lambda: Option<&Path>,
    depth: Option<usize>,
    negative: bool,
    map: Option<&Path>,
) -> Run {
    let (loaded, labels) = load_group(source)?;
    let g = &loaded.group;
    match kind {
        SystemChoice::Linear => {
            let path = lambda.ok_or_else(|| usage("--kind linear needs --lambda PATH"))?;
            let (maps, _) = load_lambda(path, &labels)?;
            let sys = build_linear_system(g, &maps, depth, negative, &ctx.caps)?;
            let period = detect_period(&sys.graph)?;
            let result = json!({
                "laws": sys.laws,
                "period": period,
                "image_exponent": sys.graph.image_exponent,
                "levels": sys.graph.levels,
            });
            Ok(graph_outcome(ctx, &sys.graph, sys.laws.all_pairs_verified, result))
        }
        SystemChoice::Rooted => {
            let braces = enumerate_circ_ops(g, &ctx.caps)?;
            let mut ops = vec![("·".to_string(), g.clone())];
            ops.extend(braces.into_iter().enumerate().map(|(i, b)| (format!("∘_{i}"), b.circ().clone())));
            let graph = BraceSystemGraph::from_operations(g.order(), ops, |u, _| u == 0, SystemKind::Rooted)?;
            let ok = graph.all_verified();
            Ok(graph_outcome(ctx, &graph, ok, json!({ "root": 0 })))
        }
        SystemChoice::Rb => {
            let path = map.ok_or_else(|| usage("--kind rb needs --map PATH"))?;
            let RbFile::Finite { map, .. } = read_json::<RbFile>(path)? else {
                return Err(usage("--map expects a finite operator {\"order\", \"map\"}"));
            };
            let b = finite_rb_map(&map, &loaded)?;
            let graph = build_rb_multibrace(g, &b, depth.unwrap_or(3))?;
            let ok = graph.all_verified();
            Ok(graph_outcome(ctx, &graph, ok, json!({ "levels": graph.levels })))
        }
    }
}

fn structure_cmd(ctx: &Context, source: &BraceSource) -> Run {
    let (brace, labels) = load_brace(source)?;
    let report = structure_report(&brace, &ctx.caps)?;
    let kernel = kernel_ideal(&brace).ok().map(|i| labels.elems(i.elements()));
    let naturality = if brace.lambda().anti_homomorphic_on_add { Some(naturality_report(&brace)?) } else { None };
    Ok(Outcome::new(
        true,
        json!({
            "order": brace.order(),
            "ideals": report.ideals.iter().map(|i| labels.elems(i)).collect::<Vec<_>>(),
            "st": report.st,
            "chain": report.chain.iter().map(|i| labels.elems(i)).collect::<Vec<_>>(),
            "kernel_ideal": kernel,
            "naturality": naturality,
        }),
    ))
}

fn parse_word(text: &str, rank: usize) -> Result<FreeWord, Failure> {
    FreeWord::parse(text, rank).map_err(|e| usage(format!("word {text:?}: {e}")))
}

fn free_cmd(ctx: &Context, command: &FreeCommand) -> Run {
    match command {
        FreeCommand::VerifyCyclic { n } => {
            if *n < 2 {
                return Err(usage("--n must be at least 2"));
            }
            let r = verify_cyclic1(*n)?;
            let mut result = json!(r);
            result["kernel_rank"] = json!(r.nielsen_schreier_rank);
            result["mismatch_count"] = json!(r.mismatches.len());
            Ok(Outcome::new(r.ok(), result))
        }
        FreeCommand::T4 { n, word, window } => {
            let w = parse_word(word, *n)?;
            let r = verify_t4(*n, &w, *window)?;
            Ok(Outcome::new(r.ok(), json!(r)))
        }
        FreeCommand::Sample { theta, n, word, max_len } => {
            let theta = match theta {
                ThetaChoice::Identity => FreeAutomorphism::identity(*n),
                ThetaChoice::Cycle => FreeAutomorphism::generator_cycle(*n),
                ThetaChoice::Inner => {
                    let text = word.as_deref().ok_or_else(|| usage("--theta inner needs --word"))?;
                    FreeAutomorphism::inner(parse_word(text, *n)?)
                }
            };
            let r = sampled_brace_check(&theta, ctx.samples, *max_len, ctx.seed)?;
            Ok(Outcome::new(r.failures() == 0, json!(r)))
        }
        FreeCommand::Rb { max_m } => {
            let r = free_rb_check(*max_m, ctx.samples, ctx.seed)?;
            Ok(Outcome::new(r.consecutive_ok(), json!(r)))
        }
    }
}

fn lattice_cmd(ctx: &Context, p: i64, depth: u32, a: &[i64], b: &[i64], level: i64) -> Run {
    let r = lattice_system_check(p, depth, ctx.samples, ctx.seed)?;
    let mut result = json!(r);
    result["failures"] = json!(r.failures());
    match (a, b) {
        ([], []) => {}
        (&[a0, a1], &[b0, b1]) => {
            let c = lattice_circ(&LatticeVector(a0, a1), &LatticeVector(b0, b1), p, level)?;
            result["evaluation"] = json!({ "a": [a0, a1], "b": [b0, b1], "level": level, "circ": [c.0, c.1] });
        }
        _ => return Err(usage("--a and --b each take two comma-separated integers")),
    }
    Ok(Outcome::new(r.failures() == 0, result))
}

fn rb_cmd(ctx: &Context, path: &Path, group_file: Option<&Path>, group: Option<&str>, levels: usize) -> Run {
    match read_json::<RbFile>(path)? {
        rb @ RbFile::Free { .. } => {
            let op = rb.free_op()?;
            let witness = op.rb_witness(ctx.samples, ctx.seed);
            Ok(Outcome::new(witness.is_none(), json!({ "operator": op, "samples": ctx.samples, "witness": witness })))
        }
        RbFile::Finite { group: inline, order, map } => {
            let loaded = match (inline, group_file, group) {
                (Some(file), _, _) => file.load()?,
                (None, Some(p), _) => read_json::<GroupFile>(p)?.load()?,
                (None, None, Some(name)) => {
                    let g = catalog::by_name(name).ok_or_else(|| usage(format!("unknown group name {name:?}")))?;
                    LoadedGroup { name: Some(name.into()), relabel: g.elements().collect(), group: g }
                }
                (None, None, None) => return Err(usage("a finite operator needs a group: inline, --group-file or --group")),
            };
            let g = &loaded.group;
            if order.is_some_and(|n| n != g.order()) {
                return Err(usage(format!("operator order {} does not match the group order {}", order.unwrap(), g.order())));
            }
            let b = finite_rb_map(&map, &loaded)?;
            let labels = Labels::from_relabel(&loaded.relabel);
            if !is_rb(g, &b) {
                let w = rb_witness(g, &b).map(|(x, y)| [labels.to_input[x], labels.to_input[y]]);
                return Ok(Outcome::new(false, json!({ "rota_baxter": false, "witness": w })));
            }
            let derived = derived_group(g, &b)?;
            let brace = rb_brace(g, &b)?;
            let graph = build_rb_multibrace(g, &b, levels)?;
            Ok(Outcome::new(
                true,
                json!({
                    "rota_baxter": true,
                    "derived_abelian": derived.is_abelian(),
                    "brace": brace_summary(&brace, &labels)?,
                    "symmetry_center": rb_symmetry_check(g, &b)?,
                    "lambda_hom_center": rb_lambda_hom_check(g, &b)?,
                    "printed_expansion": printed_expansion_check(g, &b)?,
                    "multibrace": graph_value(&graph),
                    "multibrace_verified": graph.all_verified(),
                }),
            ))
        }
    }
}
