use std::collections::{BTreeMap, HashMap};

use super::PermGroup;
use crate::error::{Error, Result};
use crate::numtheory::prime_divisors;
use crate::perm::Perm;

/// Conjugacy classes of a permutation group with power maps.
///
/// Classes are ordered by (element order, class size, least element image
/// sequence); class 0 is the identity. The representative of each class is
/// its lexicographically least element.
#[derive(Clone, Debug)]
pub struct ConjClassData {
    pub representatives: Vec<Perm>,
    pub sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    /// For each prime `r` dividing the exponent, class `i` maps to the class of `g_i^r`.
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    pub inverse_map: Vec<usize>,
    /// `powers[i][k]` is the class of `g_i^k` for `0 <= k < element_orders[i]`.
    powers: Vec<Vec<usize>>,
    group_order: u64,
    exponent: u64,
    base: Vec<u32>,
    lookup: HashMap<Vec<u32>, u32>,
}

impl ConjClassData {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.group_order / self.sizes[class]
    }

    /// Class of `g`, which must be an element of the group the data was built
    /// for (elements outside the group may alias a class).
    pub fn class_of(&self, g: &Perm) -> Option<usize> {
        let key: Vec<u32> = self.base.iter().map(|&b| g.image(b)).collect();
        self.lookup.get(&key).map(|&c| c as usize)
    }

    /// Class of `g_class^k`.
    pub fn power_class(&self, class: usize, k: i64) -> usize {
        let o = self.element_orders[class] as i64;
        self.powers[class][k.rem_euclid(o) as usize]
    }

    /// True when the class consists of elements of order prime to `p`.
    pub fn is_p_regular(&self, class: usize, p: u64) -> bool {
        !self.element_orders[class].is_multiple_of(p)
    }
}

/// Compute the conjugacy classes by orbit enumeration under conjugation.
pub fn conjugacy_classes(group: &PermGroup) -> Result<ConjClassData> {
    let order = group.enumerable_order()?;
    let base = group.base();
    let elements = group.elements()?;
    let key = |g: &Perm| -> Vec<u32> { base.iter().map(|&b| g.image(b)).collect() };
    let mut index: HashMap<Vec<u32>, u32> = HashMap::with_capacity(elements.len());
    for (i, g) in elements.iter().enumerate() {
        index.insert(key(g), i as u32);
    }
    let gens = group.generators();
    let mut class_of = vec![u32::MAX; elements.len()];
    // (order, size, least element) per provisional class
    let mut raw: Vec<(u64, u64, usize)> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    for start in 0..elements.len() {
        if class_of[start] != u32::MAX {
            continue;
        }
        let cid = raw.len() as u32;
        class_of[start] = cid;
        queue.clear();
        queue.push(start);
        let mut head = 0;
        let mut least = start;
        while head < queue.len() {
            let x = &elements[queue[head]];
            head += 1;
            for s in gens {
                let y = x.conjugate_by(s);
                let j = index[&key(&y)] as usize;
                if class_of[j] == u32::MAX {
                    class_of[j] = cid;
                    queue.push(j);
                    if elements[j].images() < elements[least].images() {
                        least = j;
                    }
                }
            }
        }
        raw.push((elements[start].order(), queue.len() as u64, least));
    }

    let mut perm: Vec<usize> = (0..raw.len()).collect();
    perm.sort_by(|&a, &b| {
        let (oa, sa, la) = raw[a];
        let (ob, sb, lb) = raw[b];
        oa.cmp(&ob)
            .then(sa.cmp(&sb))
            .then_with(|| elements[la].images().cmp(elements[lb].images()))
    });
    let mut new_id = vec![0u32; raw.len()];
    for (new, &old) in perm.iter().enumerate() {
        new_id[old] = new as u32;
    }
    let representatives: Vec<Perm> = perm.iter().map(|&c| elements[raw[c].2].clone()).collect();
    let sizes: Vec<u64> = perm.iter().map(|&c| raw[c].1).collect();
    let element_orders: Vec<u64> = perm.iter().map(|&c| raw[c].0).collect();

    let lookup: HashMap<Vec<u32>, u32> = index
        .into_iter()
        .map(|(k, i)| (k, new_id[class_of[i as usize] as usize]))
        .collect();
    drop(elements);

    let class_lookup = |g: &Perm| -> usize { lookup[&key(g)] as usize };
    let mut powers = Vec::with_capacity(representatives.len());
    let mut exponent = 1u64;
    for (rep, &o) in representatives.iter().zip(&element_orders) {
        exponent = crate::numtheory::lcm(exponent, o);
        let mut row = Vec::with_capacity(o as usize);
        let mut x = group.identity();
        for _ in 0..o {
            row.push(class_lookup(&x));
            x = x.compose(rep);
        }
        powers.push(row);
    }
    let inverse_map: Vec<usize> = powers
        .iter()
        .zip(&element_orders)
        .map(|(row, &o)| row[((o - 1) % o) as usize])
        .collect();
    let mut power_maps = BTreeMap::new();
    for r in prime_divisors(exponent) {
        let map = powers
            .iter()
            .zip(&element_orders)
            .map(|(row, &o)| row[(r % o) as usize])
            .collect();
        power_maps.insert(r, map);
    }

    let total: u64 = sizes.iter().sum();
    if total != order
        || representatives
            .first()
            .map(|g| !g.is_identity())
            .unwrap_or(true)
    {
        return Err(Error::internal("class equation does not balance"));
    }

    Ok(ConjClassData {
        representatives,
        sizes,
        element_orders,
        power_maps,
        inverse_map,
        powers,
        group_order: order,
        exponent,
        base,
        lookup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Perm> = gens
            .iter()
            .map(|s| Perm::parse_cycles(n, s).unwrap())
            .collect();
        PermGroup::from_generators(n, &gens).unwrap()
    }

    #[test]
    fn s4_classes() {
        let g = group(4, &["(0 1 2 3)", "(0 1)"]);
        let cl = conjugacy_classes(&g).unwrap();
        // order, then size: double transpositions precede transpositions
        assert_eq!(cl.sizes, vec![1, 3, 6, 8, 6]);
        assert_eq!(cl.element_orders, vec![1, 2, 2, 3, 4]);
        assert_eq!(cl.power_maps[&2], vec![0, 0, 0, 3, 1]);
        assert_eq!(cl.inverse_map, vec![0, 1, 2, 3, 4]);
        assert_eq!(cl.exponent(), 12);
    }

    #[test]
    fn a5_classes() {
        let g = group(5, &["(0 1 2 3 4)", "(2 3 4)"]);
        let cl = conjugacy_classes(&g).unwrap();
        assert_eq!(cl.sizes, vec![1, 15, 20, 12, 12]);
        // the two 5-classes are swapped by squaring
        assert_eq!(cl.power_maps[&2][3], 4);
        assert_eq!(cl.power_maps[&2][4], 3);
    }

    #[test]
    fn cyclic_classes_are_singletons() {
        let g = group(5, &["(0 1 2 3 4)"]);
        let cl = conjugacy_classes(&g).unwrap();
        assert_eq!(cl.sizes, vec![1; 5]);
        assert_eq!(cl.inverse_map, vec![0, 4, 3, 2, 1]);
    }

    #[test]
    fn class_lookup_matches_representatives() {
        let g = group(6, &["(0 1 2 3 4 5)", "(0 1)"]);
        let cl = conjugacy_classes(&g).unwrap();
        for (i, r) in cl.representatives.iter().enumerate() {
            assert_eq!(cl.class_of(r), Some(i));
        }
        assert_eq!(cl.len(), 11);
    }
}
