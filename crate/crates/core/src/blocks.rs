//! Brauer p-blocks of ordinary characters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::chartab::{CharacterTable, ClassFunction, ClassFusion};
use crate::cyclotomic::{Cyclotomic, FieldElem, ModPEmbedding};
use crate::error::{Error, Result};
use crate::group::{p_part_decomposition, PermGroup};
use crate::numtheory::{is_prime, valuation};

/// A p-block: its characters (table rows, increasing), defect and heights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub p: u64,
    pub characters: Vec<usize>,
    pub defect: u32,
    /// height of each member, parallel to `characters`
    pub heights: Vec<u32>,
    /// least p-regular class with nonzero central character and minimal
    /// centralizer p-part
    pub defect_class: usize,
    /// reduced central character, one entry per class
    pub central_character: Vec<FieldElem>,
}

impl Block {
    pub fn contains(&self, chi: usize) -> bool {
        self.characters.binary_search(&chi).is_ok()
    }

    pub fn is_principal(&self) -> bool {
        self.characters.first() == Some(&0)
    }

    pub fn height(&self, chi: usize) -> Option<u32> {
        self.characters
            .binary_search(&chi)
            .ok()
            .map(|i| self.heights[i])
    }

    /// `Irr_0(B)`.
    pub fn height_zero_set(&self) -> Vec<usize> {
        self.characters
            .iter()
            .zip(&self.heights)
            .filter(|(_, &h)| h == 0)
            .map(|(&c, _)| c)
            .collect()
    }
}

/// `w_chi(K_j) = |K_j| chi(g_j) / chi(1)` for every class.
pub fn central_character(table: &CharacterTable, chi: usize) -> Result<Vec<Cyclotomic>> {
    let classes = table.classes();
    let d = BigInt::from(table.degrees()[chi]);
    let row = table.character(chi);
    (0..classes.len())
        .map(|j| {
            let f = BigRational::new(BigInt::from(classes.sizes[j]), d.clone());
            let w = row.value(j).scale(&f);
            if !w.is_integral() {
                return Err(Error::NonIntegral(format!(
                    "central character of row {chi} at class {j}: {w}"
                )));
            }
            Ok(w)
        })
        .collect()
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Blocks for the standard reduction map at modulus `exp(G)`.
pub fn block_partition(table: &CharacterTable, p: u64) -> Result<Vec<Block>> {
    require_prime(p)?;
    let emb = ModPEmbedding::new(p, table.exponent())?;
    block_partition_with(table, &emb)
}

/// Blocks for a given reduction map; ordered by least member, so the
/// principal block comes first.
pub fn block_partition_with(table: &CharacterTable, emb: &ModPEmbedding) -> Result<Vec<Block>> {
    let p = emb.p();
    let classes = table.classes();
    let order = table.order();
    let a = valuation(order, p);
    let mut groups: BTreeMap<Vec<FieldElem>, Vec<usize>> = BTreeMap::new();
    let mut first_seen: Vec<Vec<FieldElem>> = Vec::new();
    for chi in 0..table.len() {
        let omega = central_character(table, chi)?;
        let reduced = omega
            .iter()
            .map(|w| emb.reduce(w))
            .collect::<Result<Vec<_>>>()?;
        let members = groups.entry(reduced.clone()).or_default();
        if members.is_empty() {
            first_seen.push(reduced);
        }
        members.push(chi);
    }
    let mut blocks = Vec::with_capacity(first_seen.len());
    for key in first_seen {
        let characters = groups.remove(&key).expect("key recorded");
        let valuations: Vec<u32> = characters
            .iter()
            .map(|&c| valuation(table.degrees()[c], p))
            .collect();
        let min_val = *valuations.iter().min().expect("blocks are nonempty");
        let defect = a - min_val;
        let heights = valuations.iter().map(|v| v - min_val).collect();
        let zero = emb.field().zero();
        let best = (0..classes.len())
            .filter(|&j| classes.is_p_regular(j, p) && key[j] != zero)
            .map(|j| {
                (
                    crate::numtheory::split_p_part(classes.centralizer_order(j), p).0,
                    j,
                )
            })
            .min()
            .ok_or_else(|| {
                Error::internal("block without a p-regular class of nonzero central character")
            })?;
        if best.0 != p.pow(defect) {
            return Err(Error::internal(format!(
                "minimal class defect {} does not match block defect p^{defect}",
                best.0
            )));
        }
        blocks.push(Block {
            p,
            characters,
            defect,
            heights,
            defect_class: best.1,
            central_character: key,
        });
    }
    Ok(blocks)
}

/// Rows `chi` with a nonzero sum of `|K| chi(g_K)` over p-regular classes.
pub fn principal_block_by_regular_sums(table: &CharacterTable, p: u64) -> Vec<usize> {
    let classes = table.classes();
    (0..table.len())
        .filter(|&chi| {
            let terms: Vec<Cyclotomic> = (0..classes.len())
                .filter(|&j| classes.is_p_regular(j, p))
                .map(|j| {
                    table
                        .character(chi)
                        .value(j)
                        .scale(&BigRational::from_integer(BigInt::from(classes.sizes[j])))
                })
                .collect();
            !Cyclotomic::sum(terms.iter()).is_zero()
        })
        .collect()
}

/// The block containing the trivial character, confirmed by the p-regular
/// sum criterion.
pub fn principal_block(table: &CharacterTable, p: u64) -> Result<Block> {
    let blocks = block_partition(table, p)?;
    principal_from(table, blocks)
}

pub(crate) fn principal_from(table: &CharacterTable, blocks: Vec<Block>) -> Result<Block> {
    let b0 = blocks
        .into_iter()
        .find(|b| b.is_principal())
        .ok_or_else(|| Error::internal("no block contains the trivial character"))?;
    let other = principal_block_by_regular_sums(table, b0.p);
    if other != b0.characters {
        return Err(Error::internal(format!(
            "principal block criteria disagree: {:?} vs {:?}",
            b0.characters, other
        )));
    }
    Ok(b0)
}

/// A defect group: a Sylow p-subgroup of the centralizer of the defect class
/// representative.
pub fn defect_group(block: &Block, table: &CharacterTable) -> Result<PermGroup> {
    let group = table.group();
    if block.defect == 0 {
        return Ok(PermGroup::trivial(group.degree()));
    }
    let rep = &table.classes().representatives[block.defect_class];
    let d = group.centralizer(rep)?.sylow_subgroup(block.p)?;
    if d.order_u64() != Some(block.p.pow(block.defect)) {
        return Err(Error::internal(
            "defect group order does not match the defect",
        ));
    }
    if block.is_principal() && block.defect != group.p_valuation(block.p) {
        return Err(Error::internal(
            "principal block defect group is not a Sylow subgroup",
        ));
    }
    Ok(d)
}

/// `theta_lambda(x) = lambda(x_p) theta(x_p')` when `x_p` lies in `D`, else 0.
///
/// `theta` lives on the table of `CD`, `lambda` on the table of the normal
/// p-subgroup `D`, and `fusion` fuses `D` into `CD`.
pub fn theta_lambda(
    theta: &ClassFunction,
    lambda: &ClassFunction,
    cd: &CharacterTable,
    d: &CharacterTable,
    fusion: &ClassFusion,
    p: u64,
) -> Result<ClassFunction> {
    require_prime(p)?;
    if theta.table_id() != cd.id() || lambda.table_id() != d.id() {
        return Err(Error::TableMismatch);
    }
    let _ = fusion.restrict(theta, d, cd)?;
    let classes = cd.classes();
    let values = classes
        .representatives
        .iter()
        .map(|x| {
            let (xp, xq) = p_part_decomposition(x, p)?;
            if !d.group().contains(&xp) {
                return Ok(Cyclotomic::zero());
            }
            let cd_class = classes.class_of(&xq).ok_or(Error::NotMember)?;
            let d_class = d.classes().class_of(&xp).ok_or(Error::NotMember)?;
            Ok(lambda.value(d_class) * theta.value(cd_class))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = cd.class_function(values)?;
    if cd.inner_product(&f, &f)? != BigRational::one() {
        return Err(Error::InvalidArgument(
            "theta_lambda is not irreducible".into(),
        ));
    }
    Ok(f)
}

/// JSON summary of a block partition.
pub fn blocks_to_json(table: &CharacterTable, blocks: &[Block]) -> Result<serde_json::Value> {
    #[derive(Serialize)]
    struct BlockJson {
        index: usize,
        characters: Vec<usize>,
        degrees: Vec<u64>,
        defect: u32,
        heights: Vec<u32>,
        defect_class: usize,
        defect_group_order: u64,
        defect_group_cyclic: bool,
    }
    let mut out = Vec::with_capacity(blocks.len());
    for (index, b) in blocks.iter().enumerate() {
        let dg = defect_group(b, table)?;
        out.push(BlockJson {
            index,
            characters: b.characters.clone(),
            degrees: b.characters.iter().map(|&c| table.degrees()[c]).collect(),
            defect: b.defect,
            heights: b.heights.clone(),
            defect_class: b.defect_class,
            defect_group_order: b.p.pow(b.defect),
            defect_group_cyclic: dg.is_cyclic()?,
        });
    }
    Ok(serde_json::to_value(out)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::perm::Perm;

    fn table(n: usize, gens: &[&str]) -> CharacterTable {
        let gens: Vec<Perm> = gens
            .iter()
            .map(|s| Perm::parse_cycles(n, s).unwrap())
            .collect();
        character_table(&PermGroup::from_generators(n, &gens).unwrap()).unwrap()
    }

    #[test]
    fn a5_blocks() {
        let t = table(5, &["(0 1 2 3 4)", "(2 3 4)"]);
        let b3 = block_partition(&t, 3).unwrap();
        let sets: Vec<Vec<usize>> = b3.iter().map(|b| b.characters.clone()).collect();
        assert_eq!(sets, vec![vec![0, 3, 4], vec![1], vec![2]]);
        assert_eq!(b3[1].defect, 0);
        assert_eq!(defect_group(&b3[0], &t).unwrap().order_u64(), Some(3));
        assert_eq!(b3[0].height_zero_set(), vec![0, 3, 4]);
        let b0 = principal_block(&t, 2).unwrap();
        assert_eq!(b0.characters, vec![0, 1, 2, 4]);
    }

    #[test]
    fn s4_single_block() {
        let t = table(4, &["(0 1 2 3)", "(0 1)"]);
        let blocks = block_partition(&t, 2).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(defect_group(&blocks[0], &t).unwrap().order_u64(), Some(8));
        assert_eq!(blocks[0].height_zero_set(), vec![0, 1, 3, 4]);
        // p not dividing the order: singleton blocks of defect zero
        let b5 = block_partition(&t, 5).unwrap();
        assert_eq!(b5.len(), 5);
        assert!(b5.iter().all(|b| b.defect == 0));
    }
}
