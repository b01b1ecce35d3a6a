use super::spec::{transitive_counts, Construction, GroupSpec};
use crate::error::Result;

fn spec(name: impl Into<String>, c: Construction) -> GroupSpec {
    GroupSpec::new(name, c)
}

fn sym(n: usize) -> GroupSpec {
    spec(format!("S{n}"), Construction::Symmetric { n })
}

fn alt(n: usize) -> GroupSpec {
    spec(format!("A{n}"), Construction::Alternating { n })
}

fn cyc(n: usize) -> GroupSpec {
    spec(format!("C{n}"), Construction::Cyclic { n })
}

fn dih(order: usize) -> GroupSpec {
    spec(format!("D{order}"), Construction::Dihedral { order })
}

fn quat(order: usize) -> GroupSpec {
    spec(format!("Q{order}"), Construction::Quaternion { order })
}

fn psl(q: u64) -> GroupSpec {
    spec(format!("PSL(2,{q})"), Construction::Psl2 { q })
}

fn prod(factors: Vec<GroupSpec>) -> GroupSpec {
    let name = factors
        .iter()
        .map(|f| f.name.as_str())
        .collect::<Vec<_>>()
        .join("x");
    spec(name, Construction::DirectProduct { factors })
}

/// The affine group `F_11^2 : SL(2,5)` of order 14520.
pub fn affine_f11_sl2_5() -> GroupSpec {
    spec(
        "F11^2:SL(2,5)",
        Construction::File {
            path: "bundled:f11sq_sl2_5.grp".into(),
        },
    )
}

/// Default corpus: every transitive group of degree at most 7 from the
/// bundled library, followed by named constructions of order at most 20000.
pub fn default_corpus() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for (d, &count) in transitive_counts().iter().enumerate() {
        for index in 1..=count {
            out.push(spec(
                format!("T{}.{index}", d + 1),
                Construction::TransitiveLibrary {
                    degree: d + 1,
                    index,
                },
            ));
        }
    }
    out.extend([alt(5), alt(6), alt(7)]);
    out.extend([4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31].map(psl));
    out.extend([5, 7, 9, 11, 13].map(|q| spec(format!("PGL(2,{q})"), Construction::Pgl2 { q })));
    out.extend([8, 9, 16].map(|q| spec(format!("PGammaL(2,{q})"), Construction::Pgammal2 { q })));
    out.extend([6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30, 36, 40, 42].map(dih));
    out.extend([2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 25, 27].map(cyc));
    out.extend([8, 16, 32].map(quat));
    out.extend([
        prod(vec![cyc(2), cyc(2), cyc(2)]),
        prod(vec![cyc(4), cyc(2)]),
        prod(vec![cyc(3), cyc(3)]),
        prod(vec![cyc(9), cyc(3)]),
        prod(vec![cyc(3), cyc(3), cyc(3)]),
        prod(vec![cyc(5), cyc(5)]),
        prod(vec![sym(3), cyc(3)]),
        prod(vec![sym(3), cyc(4)]),
        prod(vec![sym(3), sym(3)]),
        prod(vec![alt(4), cyc(2)]),
        prod(vec![alt(4), cyc(3)]),
        prod(vec![alt(4), alt(4)]),
        prod(vec![sym(4), cyc(2)]),
        prod(vec![sym(4), cyc(3)]),
        prod(vec![sym(4), sym(3)]),
        prod(vec![quat(8), cyc(2)]),
        prod(vec![quat(8), cyc(3)]),
        prod(vec![quat(8), sym(3)]),
        prod(vec![dih(10), cyc(3)]),
        prod(vec![alt(5), cyc(2)]),
        prod(vec![alt(5), cyc(3)]),
        prod(vec![alt(5), alt(5)]),
        prod(vec![psl(7), cyc(2)]),
        prod(vec![psl(7), cyc(3)]),
    ]);
    out.push(affine_f11_sl2_5());
    out
}

/// Parses a corpus manifest: a JSON list of group specs.
pub fn parse_manifest(text: &str) -> Result<Vec<GroupSpec>> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_round_trip() {
        let corpus = default_corpus();
        assert!((110..=130).contains(&corpus.len()), "{}", corpus.len());
        let text = serde_json::to_string(&corpus).unwrap();
        assert_eq!(parse_manifest(&text).unwrap(), corpus);
        assert!(parse_manifest("[]").unwrap().is_empty());
        assert!(parse_manifest("{").is_err());
    }
}
