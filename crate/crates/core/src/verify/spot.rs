use serde::Serialize;

use super::checks::{GroupAnalysis, Status};
use crate::blocks::principal_block;
use crate::chartab::CharacterTable;
use crate::constructions::{alternating, pgammal2, pgl2, psl2, symmetric};
use crate::error::{Error, Result};
use crate::galois_action::fixed_pprime_set;
use crate::group::PermGroup;
use crate::perm::Perm;

/// Fixed p'-degree characters of the principal block of a simple group,
/// tested for conjugacy under a realized automorphism group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpotCheck {
    pub group: String,
    pub automorphisms: String,
    pub p: u64,
    pub sylow_cyclic: bool,
    pub fixed: Vec<usize>,
    pub count: usize,
    /// orbit label (least member) of every entry of `fixed`
    pub aut_orbit: Vec<usize>,
    /// nontrivial members of `fixed` invariant under a Sylow p-subgroup of
    /// the automorphism group
    pub sylow_invariant: Vec<usize>,
    pub status: Status,
}

/// Row permutation induced by conjugation with `a`, which must normalize
/// the table's group.
pub fn row_permutation(table: &CharacterTable, a: &Perm) -> Result<Vec<usize>> {
    let classes = table.classes();
    let class_map = classes
        .representatives
        .iter()
        .map(|g| classes.class_of(&g.conjugate_by(a)).ok_or(Error::NotMember))
        .collect::<Result<Vec<_>>>()?;
    (0..table.len())
        .map(|chi| {
            let row = table.character(chi).values();
            let image: Vec<_> = class_map.iter().map(|&j| row[j].clone()).collect();
            table
                .find_irreducible(&image)
                .ok_or_else(|| Error::internal("conjugate of an irreducible is not a row"))
        })
        .collect()
}

/// Least member of each row's orbit under the given normalizing elements.
pub fn row_orbits(table: &CharacterTable, gens: &[Perm]) -> Result<Vec<usize>> {
    let perms = gens
        .iter()
        .map(|a| row_permutation(table, a))
        .collect::<Result<Vec<_>>>()?;
    let mut label: Vec<usize> = (0..table.len()).collect();
    loop {
        let mut changed = false;
        for perm in &perms {
            for chi in 0..table.len() {
                let (a, b) = (label[chi], label[perm[chi]]);
                if a != b {
                    let m = a.min(b);
                    label[chi] = m;
                    label[perm[chi]] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(label);
        }
    }
}

/// Runs the check for a simple group `s` inside `aut`, a realization of its
/// automorphism group on the same points.
pub fn spot_check(
    name: &str,
    s: &PermGroup,
    aut_name: &str,
    aut: &PermGroup,
    p: u64,
) -> Result<SpotCheck> {
    if s.degree() != aut.degree() || !aut.is_normal_subgroup(s) {
        return Err(Error::NotNormal);
    }
    let analysis = GroupAnalysis::new(name, s)?;
    let table = &analysis.table;
    let b0 = principal_block(table, p)?;
    let fixed = fixed_pprime_set(&b0, 0, table, 1)?.fixed;
    let orbits = row_orbits(table, aut.generators())?;
    let x = aut.sylow_subgroup(p)?;
    let x_perms = x
        .generators()
        .iter()
        .map(|a| row_permutation(table, a))
        .collect::<Result<Vec<_>>>()?;
    let sylow_invariant: Vec<usize> = fixed
        .iter()
        .copied()
        .filter(|&chi| chi != 0 && x_perms.iter().all(|perm| perm[chi] == chi))
        .collect();
    let sylow_cyclic = s.sylow_subgroup(p)?.is_cyclic()?;
    let aut_orbit: Vec<usize> = fixed.iter().map(|&c| orbits[c]).collect();
    let mut nontrivial_orbits: Vec<usize> = fixed
        .iter()
        .filter(|&&c| c != 0)
        .map(|&c| orbits[c])
        .collect();
    nontrivial_orbits.sort_unstable();
    nontrivial_orbits.dedup();
    let has_trivial = fixed.first() == Some(&0);
    let ok = if sylow_cyclic {
        has_trivial
            && fixed.len() == 3
            && nontrivial_orbits.len() == 2
            && !sylow_invariant.is_empty()
    } else {
        has_trivial && nontrivial_orbits.len() >= 3 && !sylow_invariant.is_empty()
    };
    Ok(SpotCheck {
        group: name.to_string(),
        automorphisms: aut_name.to_string(),
        p,
        sylow_cyclic,
        count: fixed.len(),
        fixed,
        aut_orbit,
        sylow_invariant,
        status: if ok { Status::Pass } else { Status::Fail },
    })
}

/// The four simple groups with small automorphism group realizations, at
/// `p = 3`: `A5 < S5`, `PSL(2,7) < PGL(2,7)`, `A6 = PSL(2,9) < PGammaL(2,9)`
/// and `A7 < S7`.
pub fn standard_spot_checks() -> Result<Vec<SpotCheck>> {
    Ok(vec![
        spot_check("A5", &alternating(5)?, "S5", &symmetric(5)?, 3)?,
        spot_check("PSL(2,7)", &psl2(7)?, "PGL(2,7)", &pgl2(7)?, 3)?,
        spot_check("A6", &psl2(9)?, "PGammaL(2,9)", &pgammal2(9)?, 3)?,
        spot_check("A7", &alternating(7)?, "S7", &symmetric(7)?, 3)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_in_s5() {
        let c = spot_check(
            "A5",
            &alternating(5).unwrap(),
            "S5",
            &symmetric(5).unwrap(),
            3,
        )
        .unwrap();
        // degrees 1, 4, 5: rational and pairwise of distinct degree
        assert_eq!(c.count, 3);
        assert_eq!(c.status, Status::Pass);
        let table = GroupAnalysis::new("A5", &alternating(5).unwrap())
            .unwrap()
            .table;
        let orbits = row_orbits(&table, symmetric(5).unwrap().generators()).unwrap();
        // the two degree-3 characters are swapped by S5
        assert_eq!(orbits[1], orbits[2]);
    }
}
