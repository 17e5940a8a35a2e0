//! JSON input files for groups, braces and Rota–Baxter operators.

use serde::Deserialize;

use crate::brace::SkewBrace;
use crate::catalog;
use crate::error::{Error, Result};
use crate::free::{FreeRbOp, FreeWord, RbKind};
use crate::group::{verify_group, FiniteGroup};

/// `{"name", "order"?, "table"}`, `{"name"?, "degree", "generators"}` or a
/// catalog name alone, as in `{"name": "D4"}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub order: Option<usize>,
    #[serde(default)]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub degree: Option<usize>,
    #[serde(default)]
    pub generators: Option<Vec<String>>,
}

/// A group read from a file, identity at 0.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub name: Option<String>,
    pub group: FiniteGroup,
    /// `relabel[old] = new`; the identity map unless a table was given.
    pub relabel: Vec<usize>,
}

impl GroupFile {
    pub fn load(self) -> Result<LoadedGroup> {
        if let Some(rows) = &self.table {
            if let Some(n) = self.order {
                if n != rows.len() {
                    return Err(bad(format!("order {n} does not match a table with {} rows", rows.len())));
                }
            }
            let v = verify_group(rows)?;
            return Ok(LoadedGroup { name: self.name, group: v.group, relabel: v.relabel });
        }
        let group = if let (Some(d), Some(gens)) = (self.degree, &self.generators) {
            let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
            catalog::permutation_group(d, &gens)?
        } else if let Some(name) = &self.name {
            catalog::by_name(name).ok_or_else(|| bad(format!("unknown group name {name:?}")))?
        } else {
            return Err(bad("expected \"table\", \"degree\" with \"generators\", or a catalog \"name\"".into()));
        };
        if let Some(n) = self.order {
            if n != group.order() {
                return Err(bad(format!("order {n} does not match the generated group of order {}", group.order())));
            }
        }
        let relabel = (0..group.order()).collect();
        Ok(LoadedGroup { name: self.name, group, relabel })
    }
}

/// `{"order", "add", "circ"}`; both tables share one labeling.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceFile {
    #[serde(default)]
    pub order: Option<usize>,
    pub add: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
}

impl BraceFile {
    /// Relabels so that the common identity is 0. The pair is not checked
    /// against the brace law here.
    pub fn load_tables(&self) -> Result<(FiniteGroup, FiniteGroup)> {
        if let Some(n) = self.order {
            if n != self.add.len() || n != self.circ.len() {
                return Err(bad(format!("order {n} does not match the table sizes")));
            }
        }
        let add = verify_group(&self.add)?;
        if self.circ.len() != self.add.len() {
            return Err(Error::PreconditionFails("tables of different orders".into()));
        }
        let circ = FiniteGroup::from_rows(&self.circ)?.relabeled(&add.relabel);
        if circ.identity() != 0 {
            return Err(Error::PreconditionFails("the two operations have different identities".into()));
        }
        Ok((add.group, circ))
    }

    pub fn load(&self) -> Result<SkewBrace> {
        let (add, circ) = self.load_tables()?;
        SkewBrace::new(add, circ)
    }
}

/// `{"order", "map"}` over a group given separately (or inline as
/// `"group"`), or `{"rank", "images", "kind"?}` on a free group.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum RbFile {
    Finite {
        #[serde(default)]
        group: Option<GroupFile>,
        #[serde(default)]
        order: Option<usize>,
        map: Vec<usize>,
    },
    Free {
        rank: usize,
        images: Vec<String>,
        #[serde(default)]
        kind: Option<String>,
    },
}

pub fn parse_rb_kind(s: &str) -> Result<RbKind> {
    match s {
        "homomorphism" | "hom" | "homomorphic" => Ok(RbKind::Homomorphism),
        "anti_homomorphism" | "anti-homomorphism" | "anti" | "anti_homomorphic" => Ok(RbKind::AntiHomomorphism),
        _ => Err(bad(format!("unknown operator kind {s:?}"))),
    }
}

impl RbFile {
    /// Builds the free operator; errors on a finite file.
    pub fn free_op(&self) -> Result<FreeRbOp> {
        match self {
            RbFile::Free { rank, images, kind } => {
                if images.len() != *rank {
                    return Err(bad(format!("rank {rank} needs {rank} images, got {}", images.len())));
                }
                let images = images.iter().map(|t| FreeWord::parse(t, *rank)).collect::<Result<Vec<_>>>()?;
                let kind = kind.as_deref().map_or(Ok(RbKind::Homomorphism), parse_rb_kind)?;
                FreeRbOp::new(images, kind)
            }
            RbFile::Finite { .. } => Err(bad("expected a free operator".into())),
        }
    }

    /// The map transported along the group's relabeling.
    pub fn finite_map(map: &[usize], group: &LoadedGroup) -> Result<Vec<usize>> {
        let n = group.group.order();
        if map.len() != n {
            return Err(bad(format!("map has {} entries for a group of order {n}", map.len())));
        }
        if let Some(&x) = map.iter().find(|&&x| x >= n) {
            return Err(bad(format!("map entry {x} outside 0..{n}")));
        }
        let mut out = vec![0; n];
        for (old, &img) in map.iter().enumerate() {
            out[group.relabel[old]] = group.relabel[img];
        }
        Ok(out)
    }
}

fn bad(msg: String) -> Error {
    Error::Parse { pos: 0, msg }
}

pub fn parse_group(text: &str) -> Result<LoadedGroup> {
    serde_json::from_str::<GroupFile>(text)?.load()
}

pub fn parse_brace(text: &str) -> Result<SkewBrace> {
    serde_json::from_str::<BraceFile>(text)?.load()
}

pub fn parse_rb(text: &str) -> Result<RbFile> {
    Ok(serde_json::from_str(text)?)
}
