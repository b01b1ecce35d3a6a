use std::collections::BTreeSet;

use serde::Serialize;

use crate::blocks::{block_partition, defect_group, principal_from, theta_lambda, Block};
use crate::chartab::{character_table, class_fusion, CharacterTable};
use crate::error::{Error, Result};
use crate::galois_action::{
    fixed_height_zero_set, fixed_pprime_set, sigma_for_table, sigma_permutation,
};
use crate::group::PermGroup;
use crate::numtheory::split_p_part;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Skipped,
    /// A conjecture-level disagreement; reported but not a software failure.
    Inconsistent,
}

/// Result of comparing a fixed-point count with a cyclicity prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub group: String,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<u32>,
    /// cyclicity of the Sylow subgroup, or of the defect group for blocks
    pub sylow_cyclic: Option<bool>,
    pub count: Option<usize>,
    pub fixed: Vec<usize>,
    /// the predicted truth value of `count == p`
    pub theorem_prediction: Option<bool>,
    /// the observed truth value of `count == p`
    pub observed: Option<bool>,
    pub status: Status,
}

impl Verdict {
    fn not_applicable(group: &str, p: u64) -> Self {
        Verdict {
            group: group.to_string(),
            p,
            block: None,
            defect: None,
            sylow_cyclic: None,
            count: None,
            fixed: Vec::new(),
            theorem_prediction: None,
            observed: None,
            status: Status::NotApplicable,
        }
    }
}

/// One entry of the block property suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteEntry {
    pub group: String,
    pub p: u64,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<usize>,
    pub status: Status,
    pub detail: String,
}

/// Per-prime block data of an analysed group.
#[derive(Clone, Debug)]
pub struct PrimeData {
    pub p: u64,
    pub blocks: Vec<Block>,
    pub defect_groups: Vec<PermGroup>,
    pub sylow: PermGroup,
}

impl PrimeData {
    pub fn principal(&self) -> &Block {
        &self.blocks[0]
    }
}

/// A group with its character table.
#[derive(Clone, Debug)]
pub struct GroupAnalysis {
    pub name: String,
    pub table: CharacterTable,
}

impl GroupAnalysis {
    pub fn new(name: impl Into<String>, group: &PermGroup) -> Result<Self> {
        Ok(GroupAnalysis {
            name: name.into(),
            table: character_table(group)?,
        })
    }

    pub fn group(&self) -> &PermGroup {
        self.table.group()
    }

    pub fn order(&self) -> u64 {
        self.table.order()
    }

    pub fn divides_order(&self, p: u64) -> bool {
        self.order().is_multiple_of(p)
    }

    /// Blocks (principal first), their defect groups and a Sylow subgroup.
    pub fn prime_data(&self, p: u64) -> Result<PrimeData> {
        let blocks = block_partition(&self.table, p)?;
        let b0 = principal_from(&self.table, blocks.clone())?;
        debug_assert_eq!(b0, blocks[0]);
        let defect_groups = blocks
            .iter()
            .map(|b| defect_group(b, &self.table))
            .collect::<Result<Vec<_>>>()?;
        let sylow = self.group().sylow_subgroup(p)?;
        Ok(PrimeData {
            p,
            blocks,
            defect_groups,
            sylow,
        })
    }
}

fn restricted_prime(p: u64) -> bool {
    p == 2 || p == 3
}

/// Principal block criterion: `|Irr_{p'}(B_0)^{sigma_1}| = p` exactly when a
/// Sylow p-subgroup is cyclic. Not applicable unless `p` is 2 or 3 and
/// divides the group order.
pub fn verify_theorem_a(analysis: &GroupAnalysis, p: u64) -> Result<Verdict> {
    if !restricted_prime(p) || !analysis.divides_order(p) {
        return Ok(Verdict::not_applicable(&analysis.name, p));
    }
    let data = analysis.prime_data(p)?;
    theorem_a_from(analysis, &data)
}

pub fn theorem_a_from(analysis: &GroupAnalysis, data: &PrimeData) -> Result<Verdict> {
    let p = data.p;
    if !restricted_prime(p) || !analysis.divides_order(p) {
        return Ok(Verdict::not_applicable(&analysis.name, p));
    }
    let report = fixed_pprime_set(data.principal(), 0, &analysis.table, 1)?;
    let cyclic = data.sylow.is_cyclic()?;
    let observed = report.count as u64 == p;
    Ok(Verdict {
        group: analysis.name.clone(),
        p,
        block: None,
        defect: None,
        sylow_cyclic: Some(cyclic),
        count: Some(report.count),
        fixed: report.fixed,
        theorem_prediction: Some(cyclic),
        observed: Some(observed),
        status: if observed == cyclic {
            Status::Pass
        } else {
            Status::Fail
        },
    })
}

/// Block-wise criterion: for each block of nontrivial defect,
/// `|Irr_0(B)^{sigma_1}| = p` exactly when the defect group is cyclic.
/// Disagreements are `Inconsistent`, not failures.
pub fn verify_conjecture_b(analysis: &GroupAnalysis, p: u64) -> Result<Vec<Verdict>> {
    if !restricted_prime(p) || !analysis.divides_order(p) {
        return Ok(vec![Verdict::not_applicable(&analysis.name, p)]);
    }
    let data = analysis.prime_data(p)?;
    conjecture_b_from(analysis, &data)
}

pub fn conjecture_b_from(analysis: &GroupAnalysis, data: &PrimeData) -> Result<Vec<Verdict>> {
    let p = data.p;
    if !restricted_prime(p) || !analysis.divides_order(p) {
        return Ok(vec![Verdict::not_applicable(&analysis.name, p)]);
    }
    let mut out = Vec::new();
    for (i, (b, d)) in data.blocks.iter().zip(&data.defect_groups).enumerate() {
        if b.defect == 0 {
            continue;
        }
        let report = fixed_height_zero_set(b, i, &analysis.table, 1)?;
        let cyclic = d.is_cyclic()?;
        let observed = report.count as u64 == p;
        out.push(Verdict {
            group: analysis.name.clone(),
            p,
            block: Some(i),
            defect: Some(b.defect),
            sylow_cyclic: Some(cyclic),
            count: Some(report.count),
            fixed: report.fixed,
            theorem_prediction: Some(cyclic),
            observed: Some(observed),
            status: if observed == cyclic {
                Status::Pass
            } else {
                Status::Inconsistent
            },
        });
    }
    Ok(out)
}

/// Names of the suite checks, in report order.
pub const SUITE_CHECKS: &[&str] = &[
    "sigma-preserves-blocks",
    "cyclic-defect-bound",
    "divisibility",
    "normal-defect-description",
    "normal-sylow-kernel",
];

/// Runs the block property suite at `p`. Every check reports pass, fail or
/// skipped with a reason; a p'-group skips everything.
pub fn verify_section1_suite(analysis: &GroupAnalysis, p: u64) -> Result<Vec<SuiteEntry>> {
    if !analysis.divides_order(p) {
        return Ok(SUITE_CHECKS
            .iter()
            .map(|c| {
                entry(
                    analysis,
                    p,
                    c,
                    None,
                    Status::Skipped,
                    format!("{p} does not divide the group order"),
                )
            })
            .collect());
    }
    let data = analysis.prime_data(p)?;
    suite_from(analysis, &data)
}

fn entry(
    analysis: &GroupAnalysis,
    p: u64,
    check: &str,
    block: Option<usize>,
    status: Status,
    detail: String,
) -> SuiteEntry {
    SuiteEntry {
        group: analysis.name.clone(),
        p,
        check: check.to_string(),
        block,
        status,
        detail,
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

pub fn suite_from(analysis: &GroupAnalysis, data: &PrimeData) -> Result<Vec<SuiteEntry>> {
    let p = data.p;
    let table = &analysis.table;
    let mut out = Vec::new();

    let sigma = sigma_permutation(table, &sigma_for_table(table, p, 1)?)?;
    let preserved = data.blocks.iter().all(|b| {
        b.characters.iter().all(|&c| {
            b.height(sigma[c]) == b.height(c) && table.degrees()[sigma[c]] == table.degrees()[c]
        })
    });
    out.push(entry(
        analysis,
        p,
        "sigma-preserves-blocks",
        None,
        pass_if(preserved),
        "sigma_1 maps every block to itself preserving degrees and heights".into(),
    ));

    let zero_sets = data
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| fixed_height_zero_set(b, i, table, 1))
        .collect::<Result<Vec<_>>>()?;

    for (i, (b, d)) in data.blocks.iter().zip(&data.defect_groups).enumerate() {
        let count = zero_sets[i].count as u64;
        if !d.is_cyclic()? {
            out.push(entry(
                analysis,
                p,
                "cyclic-defect-bound",
                Some(i),
                Status::Skipped,
                "defect group not cyclic".into(),
            ));
            continue;
        }
        let mut ok = (1..=p).contains(&count) && ((count == 1) == (b.defect == 0));
        if restricted_prime(p) && b.defect > 0 {
            ok &= count == p;
        }
        out.push(entry(
            analysis,
            p,
            "cyclic-defect-bound",
            Some(i),
            pass_if(ok),
            format!("defect {}, |Irr_0(B)^sigma_1| = {count}", b.defect),
        ));
    }

    for (i, b) in data.blocks.iter().enumerate() {
        if !restricted_prime(p) {
            out.push(entry(
                analysis,
                p,
                "divisibility",
                Some(i),
                Status::Skipped,
                "p is not 2 or 3".into(),
            ));
        } else if b.defect == 0 {
            out.push(entry(
                analysis,
                p,
                "divisibility",
                Some(i),
                Status::Skipped,
                "defect zero".into(),
            ));
        } else {
            let count = zero_sets[i].count as u64;
            out.push(entry(
                analysis,
                p,
                "divisibility",
                Some(i),
                pass_if(count.is_multiple_of(p)),
                format!("|Irr_0(B)^sigma_1| = {count}"),
            ));
        }
    }

    for (i, (b, d)) in data.blocks.iter().zip(&data.defect_groups).enumerate() {
        if !analysis.group().is_normal_subgroup(d) {
            out.push(entry(
                analysis,
                p,
                "normal-defect-description",
                Some(i),
                Status::Skipped,
                "defect group not normal".into(),
            ));
            continue;
        }
        let expected = normal_defect_fixed_set(analysis, b, d)?;
        let observed = &zero_sets[i].fixed;
        let detail = match &expected {
            Some(e) => {
                format!("union over Irr(D/Phi(D)) gives {e:?}, fixed height-zero set {observed:?}")
            }
            None => "no canonical character found".into(),
        };
        out.push(entry(
            analysis,
            p,
            "normal-defect-description",
            Some(i),
            pass_if(expected.as_ref() == Some(observed)),
            detail,
        ));
    }

    if analysis.group().is_normal_subgroup(&data.sylow) {
        let kernel = normal_sylow_kernel_set(analysis, data)?;
        let fixed = fixed_pprime_set(data.principal(), 0, table, 1)?.fixed;
        out.push(entry(
            analysis,
            p,
            "normal-sylow-kernel",
            Some(0),
            pass_if(kernel == fixed),
            format!("kernel containing O_p'(G)Phi(P): {kernel:?}, fixed p'-degree set {fixed:?}"),
        ));
    } else {
        out.push(entry(
            analysis,
            p,
            "normal-sylow-kernel",
            Some(0),
            Status::Skipped,
            "Sylow subgroup not normal".into(),
        ));
    }
    Ok(out)
}

/// Rows whose kernel contains `O_{p'}(G) Phi(P)`, for a normal Sylow `P`.
pub fn normal_sylow_kernel_set(analysis: &GroupAnalysis, data: &PrimeData) -> Result<Vec<usize>> {
    let g = analysis.group();
    if !g.is_normal_subgroup(&data.sylow) {
        return Err(Error::NotNormal);
    }
    let core = g.p_prime_core(data.p)?;
    let phi = data.sylow.frattini_subgroup_of_p_group(data.p)?;
    let n = core.join(&phi)?;
    analysis
        .table
        .characters_with_kernel_containing(n.generators())
}

/// For a block with normal defect group `D`: the union of `Irr(G | theta_lambda)`
/// over `lambda` in `Irr(D/Phi(D))`, where `theta` is a canonical character
/// of the block in `C_G(D) D`. `None` if no canonical character is found.
pub fn normal_defect_fixed_set(
    analysis: &GroupAnalysis,
    block: &Block,
    d: &PermGroup,
) -> Result<Option<Vec<usize>>> {
    let p = block.p;
    if block.defect == 0 {
        return Ok(Some(block.characters.clone()));
    }
    let g = analysis.group();
    let cd_group = g.centralizer_of_subgroup(d)?.join(d)?;
    let own_table;
    let cd = if cd_group.order() == g.order() {
        &analysis.table
    } else {
        own_table = character_table(&cd_group)?;
        &own_table
    };
    let d_table = character_table(d)?;
    let d_into_cd = class_fusion(&d_table, cd)?;
    let cd_into_g = class_fusion(cd, &analysis.table)?;
    let index_p_part = split_p_part(cd.order() / d_table.order(), p).0;

    let mut theta = None;
    for psi in cd.irreducibles() {
        let deg = psi.degree().to_rational().expect("degrees are rational");
        let deg = deg.to_integer().try_into().unwrap_or(0u64);
        if split_p_part(deg, p).0 != index_p_part {
            continue;
        }
        let res = d_into_cd.restrict(psi, &d_table, cd)?;
        if res.values().iter().any(|v| v != res.degree()) {
            continue;
        }
        let over = cd_into_g.irr_over(psi, cd, &analysis.table)?;
        if over.iter().all(|&c| block.contains(c)) {
            theta = Some(psi.clone());
            break;
        }
    }
    let Some(theta) = theta else { return Ok(None) };

    let phi = d.frattini_subgroup_of_p_group(p)?;
    let lambdas = d_table.characters_with_kernel_containing(phi.generators())?;
    debug_assert_eq!(
        Some(lambdas.len() as u64),
        d.order_u64().zip(phi.order_u64()).map(|(a, b)| a / b)
    );
    let mut union = BTreeSet::new();
    for l in lambdas {
        let tl = theta_lambda(&theta, d_table.character(l), cd, &d_table, &d_into_cd, p)?;
        union.extend(cd_into_g.irr_over(&tl, cd, &analysis.table)?);
    }
    Ok(Some(union.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    fn analyse(name: &str, g: PermGroup) -> GroupAnalysis {
        GroupAnalysis::new(name, &g).unwrap()
    }

    #[test]
    fn theorem_a_examples() {
        let s3 = analyse("S3", symmetric(3).unwrap());
        let v = verify_theorem_a(&s3, 3).unwrap();
        assert_eq!(
            (v.count, v.sylow_cyclic, v.status),
            (Some(3), Some(true), Status::Pass)
        );
        let s4 = analyse("S4", symmetric(4).unwrap());
        let v = verify_theorem_a(&s4, 2).unwrap();
        assert_eq!(
            (v.count, v.sylow_cyclic, v.status),
            (Some(4), Some(false), Status::Pass)
        );
        let c5 = analyse("C5", cyclic(5).unwrap());
        assert_eq!(
            verify_theorem_a(&c5, 2).unwrap().status,
            Status::NotApplicable
        );
        assert_eq!(
            verify_theorem_a(&s3, 5).unwrap().status,
            Status::NotApplicable
        );
    }

    #[test]
    fn conjecture_b_a5() {
        let a5 = analyse("A5", alternating(5).unwrap());
        let v2 = verify_conjecture_b(&a5, 2).unwrap();
        assert_eq!(v2.len(), 1);
        assert_eq!(
            (v2[0].count, v2[0].sylow_cyclic, v2[0].status),
            (Some(4), Some(false), Status::Pass)
        );
        let v3 = verify_conjecture_b(&a5, 3).unwrap();
        assert_eq!(
            (v3[0].count, v3[0].sylow_cyclic, v3[0].status),
            (Some(3), Some(true), Status::Pass)
        );
    }

    #[test]
    fn suite_q8_and_d10() {
        let q8 = analyse("Q8", quaternion(8).unwrap());
        let suite = verify_section1_suite(&q8, 2).unwrap();
        assert!(suite.iter().all(|e| e.status != Status::Fail), "{suite:?}");
        let data = q8.prime_data(2).unwrap();
        assert_eq!(normal_sylow_kernel_set(&q8, &data).unwrap().len(), 4);
        let nd = suite
            .iter()
            .find(|e| e.check == "normal-defect-description")
            .unwrap();
        assert_eq!(nd.status, Status::Pass);

        let d10 = analyse("D10", dihedral(10).unwrap());
        let suite = verify_section1_suite(&d10, 5).unwrap();
        let bound = suite
            .iter()
            .find(|e| e.check == "cyclic-defect-bound" && e.block == Some(0))
            .unwrap();
        assert_eq!(bound.status, Status::Pass);
        assert!(bound.detail.ends_with("= 4"));
        assert!(suite.iter().all(|e| e.status != Status::Fail));
    }

    #[test]
    fn pprime_group_skips() {
        let c5 = analyse("C5", cyclic(5).unwrap());
        let suite = verify_section1_suite(&c5, 3).unwrap();
        assert!(suite.iter().all(|e| e.status == Status::Skipped));
    }

    #[test]
    fn normal_defect_nonprincipal() {
        // S3 x C3 at p = 3 and A4 x C2 at p = 2 have normal Sylow subgroups
        for (name, g, p) in [
            (
                "S3xC3",
                direct_product(&[symmetric(3).unwrap(), cyclic(3).unwrap()]).unwrap(),
                3,
            ),
            (
                "A4xC2",
                direct_product(&[alternating(4).unwrap(), cyclic(2).unwrap()]).unwrap(),
                2,
            ),
            ("D10", dihedral(10).unwrap(), 5),
        ] {
            let a = analyse(name, g);
            let suite = verify_section1_suite(&a, p).unwrap();
            assert!(
                suite.iter().all(|e| e.status != Status::Fail),
                "{name}: {suite:?}"
            );
            assert!(suite
                .iter()
                .any(|e| e.check == "normal-defect-description" && e.status == Status::Pass));
        }
    }
}
