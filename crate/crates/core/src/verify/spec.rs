use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructions;
use crate::error::{Error, Result};
use crate::group::{parse_group_file, split_group_files, PermGroup};

const TRANSITIVE: &str = include_str!("../../data/transitive.grp");
const AFFINE_F11: &str = include_str!("../../data/f11sq_sl2_5.grp");

/// Files shipped inside the library, addressed as `bundled:<name>`.
pub const BUNDLED_FILES: &[(&str, &str)] = &[
    ("transitive.grp", TRANSITIVE),
    ("f11sq_sl2_5.grp", AFFINE_F11),
];

/// Largest field size accepted by the projective line constructions.
pub const MAX_PSL2_Q: u64 = 32;

/// How a group is built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    File { path: String },
    Symmetric { n: usize },
    Alternating { n: usize },
    Dihedral { order: usize },
    Cyclic { n: usize },
    Quaternion { order: usize },
    DirectProduct { factors: Vec<GroupSpec> },
    Psl2 { q: u64 },
    Pgl2 { q: u64 },
    Pgammal2 { q: u64 },
    TransitiveLibrary { degree: usize, index: usize },
}

/// A named group construction, as found in corpus manifests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    #[serde(flatten)]
    pub construction: Construction,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, construction: Construction) -> Self {
        GroupSpec {
            name: name.into(),
            construction,
        }
    }

    /// Builds the group. Deterministic: the same spec always yields the same
    /// generators.
    pub fn build(&self) -> Result<PermGroup> {
        use Construction::*;
        match &self.construction {
            File { path } => parse_group_file(&read_group_text(path)?),
            Symmetric { n } => constructions::symmetric(*n),
            Alternating { n } => constructions::alternating(*n),
            Dihedral { order } => constructions::dihedral(*order),
            Cyclic { n } => constructions::cyclic(*n),
            Quaternion { order } => constructions::quaternion(*order),
            DirectProduct { factors } => {
                let groups = factors
                    .iter()
                    .map(|f| f.build())
                    .collect::<Result<Vec<_>>>()?;
                constructions::direct_product(&groups)
            }
            Psl2 { q } => projective(*q, constructions::psl2),
            Pgl2 { q } => projective(*q, constructions::pgl2),
            Pgammal2 { q } => projective(*q, constructions::pgammal2),
            TransitiveLibrary { degree, index } => transitive_group(*degree, *index),
        }
    }

    /// Parses the short command-line form: `sym:5`, `alt:6`, `dihedral:10`,
    /// `cyclic:9`, `quaternion:8`, `psl2:7`, `pgl2:7`, `pgammal2:9`,
    /// `transitive:6:3`, `prod:<spec>,<spec>,...`, `bundled:<file>`, or a path
    /// to a group file.
    pub fn parse_short(text: &str) -> Result<GroupSpec> {
        let bad = || Error::InvalidArgument(format!("unrecognised group spec {text:?}"));
        let num = |s: &str| s.parse::<u64>().map_err(|_| bad());
        let (head, rest) = text.split_once(':').unwrap_or((text, ""));
        let construction = match head {
            "sym" | "symmetric" => Construction::Symmetric {
                n: num(rest)? as usize,
            },
            "alt" | "alternating" => Construction::Alternating {
                n: num(rest)? as usize,
            },
            "dihedral" => Construction::Dihedral {
                order: num(rest)? as usize,
            },
            "cyclic" => Construction::Cyclic {
                n: num(rest)? as usize,
            },
            "quaternion" => Construction::Quaternion {
                order: num(rest)? as usize,
            },
            "psl2" => Construction::Psl2 { q: num(rest)? },
            "pgl2" => Construction::Pgl2 { q: num(rest)? },
            "pgammal2" => Construction::Pgammal2 { q: num(rest)? },
            "transitive" => {
                let (d, i) = rest.split_once(':').ok_or_else(bad)?;
                Construction::TransitiveLibrary {
                    degree: num(d)? as usize,
                    index: num(i)? as usize,
                }
            }
            "prod" => {
                let factors = rest
                    .split(',')
                    .map(GroupSpec::parse_short)
                    .collect::<Result<Vec<_>>>()?;
                Construction::DirectProduct { factors }
            }
            "bundled" => Construction::File {
                path: text.to_string(),
            },
            _ if rest.is_empty() || Path::new(text).exists() => Construction::File {
                path: text.to_string(),
            },
            _ => return Err(bad()),
        };
        Ok(GroupSpec {
            name: text.to_string(),
            construction,
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn projective(q: u64, build: fn(u64) -> Result<PermGroup>) -> Result<PermGroup> {
    if q > MAX_PSL2_Q {
        return Err(Error::InvalidArgument(format!(
            "q = {q} exceeds {MAX_PSL2_Q}"
        )));
    }
    build(q)
}

/// Text of a group file; `bundled:<name>` reads the copy compiled into the
/// library.
pub fn read_group_text(path: &str) -> Result<String> {
    match path.strip_prefix("bundled:") {
        Some(name) => BUNDLED_FILES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, text)| text.to_string())
            .ok_or_else(|| Error::InvalidArgument(format!("no bundled file {name:?}"))),
        None => Ok(std::fs::read_to_string(path)?),
    }
}

/// Number of library groups of each degree `1..=7`.
pub fn transitive_counts() -> Vec<usize> {
    let mut counts = vec![0; 7];
    for chunk in split_group_files(TRANSITIVE) {
        if let Some(d) = degree_of(&chunk) {
            counts[d - 1] += 1;
        }
    }
    counts
}

fn degree_of(chunk: &str) -> Option<usize> {
    chunk
        .lines()
        .find_map(|l| l.trim().strip_prefix("degree"))
        .and_then(|d| d.trim().parse().ok())
}

/// The `index`-th (1-based) transitive group of the given degree in the
/// bundled library.
pub fn transitive_group(degree: usize, index: usize) -> Result<PermGroup> {
    let chunk = split_group_files(TRANSITIVE)
        .into_iter()
        .filter(|c| degree_of(c) == Some(degree))
        .nth(index.wrapping_sub(1))
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "no transitive group {degree}.{index} in the library"
            ))
        })?;
    parse_group_file(&chunk)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library() {
        assert_eq!(transitive_counts(), vec![1, 1, 2, 5, 5, 16, 7]);
        assert_eq!(transitive_group(4, 5).unwrap().order_u64(), Some(24));
        assert_eq!(transitive_group(7, 7).unwrap().order_u64(), Some(5040));
        assert!(transitive_group(3, 3).is_err());
        assert!(transitive_group(8, 1).is_err());
    }

    #[test]
    fn short_forms() {
        let s = GroupSpec::parse_short("prod:sym:3,cyclic:2").unwrap();
        assert_eq!(s.build().unwrap().order_u64(), Some(12));
        assert_eq!(
            GroupSpec::parse_short("transitive:5:3")
                .unwrap()
                .build()
                .unwrap()
                .order_u64(),
            Some(20)
        );
        assert!(GroupSpec::parse_short("psl2:37").unwrap().build().is_err());
        assert!(GroupSpec::parse_short("bogus:3").is_err());
    }

    #[test]
    fn json_round_trip() {
        let spec = GroupSpec::new(
            "S3xC2",
            Construction::DirectProduct {
                factors: vec![
                    GroupSpec::new("S3", Construction::Symmetric { n: 3 }),
                    GroupSpec::new("C2", Construction::Cyclic { n: 2 }),
                ],
            },
        );
        let text = serde_json::to_string(&spec).unwrap();
        assert!(text.contains("\"kind\":\"direct_product\""));
        let back: GroupSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);
    }
}
