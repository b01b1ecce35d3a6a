//! Permutation groups backed by a base and strong generating set.
//!
//! The stabiliser chain is built with the deterministic Schreier-Sims
//! algorithm. Everything downstream (membership, order, enumeration, class
//! lookup by base image) goes through the chain.

mod classes;
mod io;
mod subgroups;

pub use classes::{conjugacy_classes, ConjClassData};
pub use io::{parse_group_file, split_group_files, write_group_file};
pub use subgroups::p_part_decomposition;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Groups above this order are never enumerated element by element.
pub const ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Clone)]
struct Level {
    base_point: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// position of each point in `orbit`, or `u32::MAX`
    position: Vec<u32>,
    transversal: Vec<Perm>,
    inv_transversal: Vec<Perm>,
}

impl Level {
    fn new(degree: usize, base_point: u32) -> Self {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            position: vec![u32::MAX; degree],
            transversal: Vec::new(),
            inv_transversal: Vec::new(),
        };
        level.recompute_orbit();
        level
    }

    fn recompute_orbit(&mut self) {
        let degree = self.position.len();
        self.position.iter_mut().for_each(|p| *p = u32::MAX);
        self.orbit.clear();
        self.transversal.clear();
        self.orbit.push(self.base_point);
        self.position[self.base_point as usize] = 0;
        self.transversal.push(Perm::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let a = self.orbit[head];
            for s in &self.gens {
                let b = s.image(a);
                if self.position[b as usize] == u32::MAX {
                    self.position[b as usize] = self.orbit.len() as u32;
                    self.orbit.push(b);
                    let rep = self.transversal[head].compose(s);
                    self.transversal.push(rep);
                }
            }
            head += 1;
        }
        self.inv_transversal = self.transversal.iter().map(Perm::inverse).collect();
    }

    #[inline]
    fn rep_index(&self, point: u32) -> Option<usize> {
        let p = self.position[point as usize];
        (p != u32::MAX).then_some(p as usize)
    }
}

/// A finite permutation group with a verified base and strong generating set.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    levels: Vec<Level>,
    order: BigUint,
}

impl PermGroup {
    /// The group generated by `gens` on `degree` points. An empty generator
    /// list gives the trivial group.
    pub fn from_generators(degree: usize, gens: &[Perm]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut generators: Vec<Perm> = Vec::new();
        for g in gens {
            if !g.is_identity() && !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        let levels = schreier_sims(degree, &generators);
        let order = levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
        Ok(PermGroup {
            degree,
            generators,
            levels,
            order,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
            order: BigUint::one(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    /// Order as `u64`, failing with a resource-cap error when it does not fit
    /// or exceeds the enumeration cap.
    pub fn enumerable_order(&self) -> Result<u64> {
        match self.order_u64() {
            Some(n) if n <= ENUMERATION_CAP => Ok(n),
            _ => Err(Error::ResourceCap(format!(
                "group of order {} exceeds the enumeration cap {ENUMERATION_CAP}",
                self.order
            ))),
        }
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    /// Sift `g` through the chain starting at level `from`; returns the
    /// residue and the level at which sifting stopped.
    fn sift_from(&self, g: &Perm, from: usize) -> (Perm, usize) {
        sift(&self.levels, g, from)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, level) = self.sift_from(g, 0);
        level == self.levels.len() && h.is_identity()
    }

    pub fn contains_subgroup(&self, h: &PermGroup) -> bool {
        h.degree == self.degree && h.generators.iter().all(|g| self.contains(g))
    }

    /// Images of the base points; determines an element of the group uniquely.
    pub fn base_image(&self, g: &Perm) -> Vec<u32> {
        self.levels.iter().map(|l| g.image(l.base_point)).collect()
    }

    /// Call `f` on every element, in a fixed order determined by the chain.
    pub fn for_each_element(&self, mut f: impl FnMut(&Perm)) {
        let k = self.levels.len();
        if k == 0 {
            f(&self.identity());
            return;
        }
        // element = u_{k-1} * ... * u_0, with the index of level 0 varying fastest
        let mut idx = vec![0usize; k];
        let mut partial: Vec<Perm> = vec![self.identity(); k + 1];
        for l in (0..k).rev() {
            partial[l] = partial[l + 1].compose(&self.levels[l].transversal[0]);
        }
        loop {
            f(&partial[0]);
            let mut l = 0;
            loop {
                idx[l] += 1;
                if idx[l] < self.levels[l].orbit.len() {
                    break;
                }
                idx[l] = 0;
                l += 1;
                if l == k {
                    return;
                }
            }
            for m in (0..=l).rev() {
                partial[m] = partial[m + 1].compose(&self.levels[m].transversal[idx[m]]);
            }
        }
    }

    pub fn elements(&self) -> Result<Vec<Perm>> {
        let n = self.enumerable_order()?;
        let mut out = Vec::with_capacity(n as usize);
        self.for_each_element(|g| out.push(g.clone()));
        Ok(out)
    }

    /// The element with mixed-radix index `index` in the enumeration order.
    pub fn element_at(&self, mut index: u64) -> Perm {
        let mut g = self.identity();
        let mut digits = Vec::with_capacity(self.levels.len());
        for l in &self.levels {
            let len = l.orbit.len() as u64;
            digits.push((index % len) as usize);
            index /= len;
        }
        for (l, d) in self.levels.iter().zip(digits).rev() {
            g = g.compose(&l.transversal[d]);
        }
        g
    }

    /// Group generated by the generators of `self` together with `extra`.
    pub fn with_generators(&self, extra: &[Perm]) -> Result<PermGroup> {
        let mut gens = self.generators.clone();
        let mut changed = false;
        for g in extra {
            if !self.contains(g) {
                gens.push(g.clone());
                changed = true;
            }
        }
        if !changed {
            return Ok(self.clone());
        }
        PermGroup::from_generators(self.degree, &gens)
    }

    /// Subgroup generated by `gens`, which must lie in `self`.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<PermGroup> {
        for g in gens {
            if !self.contains(g) {
                return Err(Error::NotMember);
            }
        }
        PermGroup::from_generators(self.degree, gens)
    }

    /// Exponent of the group, via its elements.
    pub fn exponent(&self) -> Result<u64> {
        self.enumerable_order()?;
        let mut e = 1u64;
        self.for_each_element(|g| e = crate::numtheory::lcm(e, g.order()));
        Ok(e)
    }

    /// Check the stored chain: strong generators fix their base prefix, the
    /// orbit product equals the order, and every generator sifts.
    pub fn verify_chain(&self) -> bool {
        for (i, l) in self.levels.iter().enumerate() {
            for g in &l.gens {
                if self.levels[..i]
                    .iter()
                    .any(|m| g.image(m.base_point) != m.base_point)
                {
                    return false;
                }
            }
            for (k, &pt) in l.orbit.iter().enumerate() {
                if l.transversal[k].image(l.base_point) != pt {
                    return false;
                }
            }
        }
        let product = self
            .levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
        product == self.order && self.generators.iter().all(|g| self.contains(g))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, gens [",
            self.degree, self.order
        )?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

fn sift(levels: &[Level], g: &Perm, from: usize) -> (Perm, usize) {
    let mut h = g.clone();
    for (i, level) in levels.iter().enumerate().skip(from) {
        let b = h.image(level.base_point);
        match level.rep_index(b) {
            Some(k) => h = h.compose(&level.inv_transversal[k]),
            None => return (h, i),
        }
    }
    (h, levels.len())
}

fn schreier_sims(degree: usize, gens: &[Perm]) -> Vec<Level> {
    let mut base: Vec<u32> = Vec::new();
    for g in gens {
        if base.iter().all(|&b| g.image(b) == b) {
            let moved = g
                .first_moved_point()
                .expect("identity generators are filtered");
            base.push(moved);
        }
    }
    let mut levels: Vec<Level> = Vec::with_capacity(base.len());
    for (i, &b) in base.iter().enumerate() {
        let mut level = Level::new(degree, b);
        level.gens = gens
            .iter()
            .filter(|g| base[..i].iter().all(|&c| g.image(c) == c))
            .cloned()
            .collect();
        level.recompute_orbit();
        levels.push(level);
    }

    let mut i = levels.len() as isize - 1;
    while i >= 0 {
        let iu = i as usize;
        match find_failing_schreier_generator(&levels, iu) {
            None => i -= 1,
            Some((h, j)) => {
                if j == levels.len() {
                    let b = h.first_moved_point().expect("residue is not the identity");
                    levels.push(Level::new(degree, b));
                }
                for level in levels.iter_mut().take(j + 1).skip(iu + 1) {
                    level.gens.push(h.clone());
                    level.recompute_orbit();
                }
                i = j as isize;
            }
        }
    }
    levels
}

fn find_failing_schreier_generator(levels: &[Level], i: usize) -> Option<(Perm, usize)> {
    let level = &levels[i];
    for (a, &pt) in level.orbit.iter().enumerate() {
        for s in &level.gens {
            let b = s.image(pt);
            let k = level
                .rep_index(b)
                .expect("orbit is closed under generators");
            let sg = level.transversal[a]
                .compose(s)
                .compose(&level.inv_transversal[k]);
            if sg.is_identity() {
                continue;
            }
            let (h, j) = sift(levels, &sg, i + 1);
            if j < levels.len() || !h.is_identity() {
                return Some((h, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        let s4 = PermGroup::from_generators(4, &[p(4, "(0 1 2 3)"), p(4, "(0 1)")]).unwrap();
        assert_eq!(s4.order_u64(), Some(24));
        assert!(s4.verify_chain());
        let a5 = PermGroup::from_generators(5, &[p(5, "(0 1 2 3 4)"), p(5, "(2 3 4)")]).unwrap();
        assert_eq!(a5.order_u64(), Some(60));
        assert!(a5.contains(&p(5, "(0 1)(2 3)")));
        assert!(!a5.contains(&p(5, "(0 1)")));
    }

    #[test]
    fn trivial_from_empty() {
        let g = PermGroup::from_generators(5, &[]).unwrap();
        assert_eq!(g.order_u64(), Some(1));
        assert_eq!(g.elements().unwrap(), vec![Perm::identity(5)]);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let r = PermGroup::from_generators(4, &[p(3, "(0 1)")]);
        assert!(matches!(r, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn enumeration_is_complete_and_distinct() {
        let g = PermGroup::from_generators(6, &[p(6, "(0 1 2 3 4 5)"), p(6, "(0 1)")]).unwrap();
        let els = g.elements().unwrap();
        assert_eq!(els.len(), 720);
        let set: std::collections::HashSet<_> = els.iter().collect();
        assert_eq!(set.len(), 720);
        assert_eq!(g.element_at(17), els[17]);
    }

    #[test]
    fn large_symmetric_order_is_exact() {
        let n = 25;
        let cycle: Vec<u32> = (0..n as u32).collect();
        let g = PermGroup::from_generators(
            n,
            &[Perm::from_cycles(n, &[cycle]).unwrap(), p(n, "(0 1)")],
        )
        .unwrap();
        let fact = (1..=n as u64).fold(BigUint::one(), |a, k| a * BigUint::from(k));
        assert_eq!(g.order(), &fact);
        assert!(g.enumerable_order().is_err());
    }
}
