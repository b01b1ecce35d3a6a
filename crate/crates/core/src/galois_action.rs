//! The action of `sigma_e` on irreducible characters.

use serde::Serialize;

use crate::blocks::Block;
use crate::chartab::{CharacterTable, ClassFunction};
use crate::cyclotomic::{sigma_e, GaloisAut};
use crate::error::{Error, Result};
use crate::numtheory::prime_divisors;

/// Characters of one block fixed by `sigma_e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedSetReport {
    pub group: String,
    pub p: u64,
    pub e: u32,
    pub block: usize,
    pub fixed: Vec<usize>,
    pub count: usize,
}

impl FixedSetReport {
    pub fn with_group(mut self, name: impl Into<String>) -> Self {
        self.group = name.into();
        self
    }
}

/// `sigma_e` at modulus `exp(G)`.
pub fn sigma_for_table(table: &CharacterTable, p: u64, e: u32) -> Result<GaloisAut> {
    sigma_e(p, e, table.exponent())
}

/// Apply an automorphism valuewise.
pub fn apply_sigma_values(
    chi: &ClassFunction,
    table: &CharacterTable,
    aut: &GaloisAut,
) -> Result<ClassFunction> {
    if !aut.modulus().is_multiple_of(table.exponent()) {
        return Err(Error::ConductorMismatch {
            conductor: table.exponent(),
            modulus: aut.modulus(),
        });
    }
    let values = chi
        .values()
        .iter()
        .map(|v| aut.apply(v))
        .collect::<Result<Vec<_>>>()?;
    table.class_function(values)
}

/// Row index of `chi^sigma` for row `chi`.
pub fn apply_sigma(table: &CharacterTable, chi: usize, aut: &GaloisAut) -> Result<usize> {
    let image = apply_sigma_values(table.character(chi), table, aut)?;
    table.find_irreducible(image.values()).ok_or_else(|| {
        Error::internal(format!(
            "image of row {chi} is not an irreducible character"
        ))
    })
}

/// The permutation of rows induced by `aut`.
pub fn sigma_permutation(table: &CharacterTable, aut: &GaloisAut) -> Result<Vec<usize>> {
    (0..table.len())
        .map(|chi| apply_sigma(table, chi, aut))
        .collect()
}

fn fixed_among(
    table: &CharacterTable,
    block_index: usize,
    candidates: Vec<usize>,
    p: u64,
    e: u32,
) -> Result<FixedSetReport> {
    let aut = sigma_for_table(table, p, e)?;
    let mut fixed = Vec::new();
    for chi in candidates {
        if apply_sigma(table, chi, &aut)? == chi {
            fixed.push(chi);
        }
    }
    Ok(FixedSetReport {
        group: String::new(),
        p,
        e,
        block: block_index,
        count: fixed.len(),
        fixed,
    })
}

/// `Irr_{p'}(B)^{sigma_e}`.
pub fn fixed_pprime_set(
    block: &Block,
    block_index: usize,
    table: &CharacterTable,
    e: u32,
) -> Result<FixedSetReport> {
    let p = block.p;
    let candidates = block
        .characters
        .iter()
        .copied()
        .filter(|&c| !table.degrees()[c].is_multiple_of(p))
        .collect();
    fixed_among(table, block_index, candidates, p, e)
}

/// `Irr_0(B)^{sigma_e}`.
pub fn fixed_height_zero_set(
    block: &Block,
    block_index: usize,
    table: &CharacterTable,
    e: u32,
) -> Result<FixedSetReport> {
    fixed_among(table, block_index, block.height_zero_set(), block.p, e)
}

/// Orbit sizes of `aut` on `Irr_0(B)`, in order of least member; `aut` must
/// have p-power order.
pub fn orbit_structure(
    block: &Block,
    table: &CharacterTable,
    aut: &GaloisAut,
) -> Result<Vec<usize>> {
    let ord = aut.order();
    if prime_divisors(ord).iter().any(|&r| r != block.p) {
        return Err(Error::InvalidArgument(format!(
            "automorphism of order {ord} is not a {}-element",
            block.p
        )));
    }
    let members = block.height_zero_set();
    let perm = sigma_permutation(table, aut)?;
    let mut seen = vec![false; table.len()];
    let mut sizes = Vec::new();
    for &chi in &members {
        if seen[chi] {
            continue;
        }
        let mut size = 0;
        let mut x = chi;
        while !seen[x] {
            seen[x] = true;
            size += 1;
            x = perm[x];
        }
        if !block.contains(x) {
            return Err(Error::internal("sigma does not preserve the block"));
        }
        sizes.push(size);
    }
    Ok(sizes)
}
