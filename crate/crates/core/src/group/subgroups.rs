//! Subgroup constructions: centralisers, normal closures, Sylow subgroups,
//! Frattini subgroups of p-groups and p'-cores.

use std::collections::HashMap;
use std::hash::Hash;

use super::PermGroup;
use crate::error::{Error, Result};
use crate::numtheory::{crt_pair, is_prime, split_p_part, valuation_big};
use crate::perm::Perm;

/// Split `g` as `(g_p, g_p')`: commuting powers of `g` whose orders are the
/// p-part and p'-part of the order of `g`, with `g = g_p * g_p'`.
pub fn p_part_decomposition(g: &Perm, p: u64) -> Result<(Perm, Perm)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = g.order();
    let (pa, m) = split_p_part(order, p);
    // s = 1 mod p^a, s = 0 mod m
    let s = crt_pair(1, pa, 0, m);
    let xp = g.pow(s as i64);
    let xq = g.pow(1 - s as i64);
    Ok((xp, xq))
}

impl PermGroup {
    /// Stabiliser of `point` under a right action of the group.
    pub fn stabilizer_of<T, F>(&self, point: T, act: F) -> Result<PermGroup>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &Perm) -> T,
    {
        let mut orbit = vec![point.clone()];
        let mut reps = vec![self.identity()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(point, 0);
        let mut head = 0;
        while head < orbit.len() {
            for s in &self.generators {
                let b = act(&orbit[head], s);
                if !index.contains_key(&b) {
                    index.insert(b.clone(), orbit.len());
                    orbit.push(b);
                    reps.push(reps[head].compose(s));
                }
            }
            head += 1;
        }
        let mut stab = PermGroup::trivial(self.degree);
        for (a, pt) in orbit.iter().enumerate() {
            for s in &self.generators {
                let b = index[&act(pt, s)];
                let sg = reps[a].compose(s).compose(&reps[b].inverse());
                if !stab.contains(&sg) {
                    stab = stab.with_generators(&[sg])?;
                }
            }
        }
        Ok(stab)
    }

    pub fn centralizer(&self, g: &Perm) -> Result<PermGroup> {
        if !self.contains(g) {
            return Err(Error::NotMember);
        }
        self.stabilizer_of(g.clone(), |x, s| x.conjugate_by(s))
    }

    /// Centraliser in `self` of every generator of `h`.
    pub fn centralizer_of_subgroup(&self, h: &PermGroup) -> Result<PermGroup> {
        let mut c = self.clone();
        for g in h.generators() {
            c = c.stabilizer_of(g.clone(), |x, s| x.conjugate_by(s))?;
        }
        Ok(c)
    }

    /// Smallest normal subgroup of `self` containing `elements`.
    pub fn normal_closure(&self, elements: &[Perm]) -> Result<PermGroup> {
        for g in elements {
            if !self.contains(g) {
                return Err(Error::NotMember);
            }
        }
        let mut n = PermGroup::from_generators(self.degree, elements)?;
        let mut pending: Vec<Perm> = n.generators().to_vec();
        while let Some(x) = pending.pop() {
            for s in &self.generators {
                let y = x.conjugate_by(s);
                if !n.contains(&y) {
                    n = n.with_generators(std::slice::from_ref(&y))?;
                    pending.push(y);
                }
            }
        }
        Ok(n)
    }

    pub fn is_normal_subgroup(&self, h: &PermGroup) -> bool {
        self.contains_subgroup(h)
            && h.generators().iter().all(|x| {
                self.generators
                    .iter()
                    .all(|s| h.contains(&x.conjugate_by(s)))
            })
    }

    /// Does `g` normalise `h`?
    pub fn normalizes(h: &PermGroup, g: &Perm) -> bool {
        h.generators()
            .iter()
            .all(|x| h.contains(&x.conjugate_by(g)))
    }

    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        self.with_generators(other.generators())
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        let pa = num_bigint::BigUint::from(p).pow(valuation_big(&self.order, p));
        pa == self.order
    }

    /// p-part of the group order, as a power `p^a`; returns `a`.
    pub fn p_valuation(&self, p: u64) -> u32 {
        valuation_big(&self.order, p)
    }

    /// A Sylow p-subgroup. Starting from the trivial group, repeatedly adjoin
    /// the p-part of the first element (in enumeration order) that normalises
    /// the current p-subgroup without its p-part lying in it.
    pub fn sylow_subgroup(&self, p: u64) -> Result<PermGroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = num_bigint::BigUint::from(p).pow(valuation_big(&self.order, p));
        let mut sylow = PermGroup::trivial(self.degree);
        if target == num_bigint::BigUint::from(1u32) {
            return Ok(sylow);
        }
        self.enumerable_order()?;
        while *sylow.order() < target {
            let mut found: Option<Perm> = None;
            // A p-subgroup that is not Sylow has p | |N(P):P|, so some
            // p-element of N(P) lies outside P.
            let mut scan = |g: &Perm| {
                if found.is_some() || !g.order().is_multiple_of(p) {
                    return;
                }
                let (gp, _) = p_part_decomposition(g, p).expect("p is prime");
                if !sylow.contains(&gp) && PermGroup::normalizes(&sylow, &gp) {
                    found = Some(gp);
                }
            };
            self.for_each_element(&mut scan);
            let y = found
                .ok_or_else(|| Error::internal("no p-element normalises a non-Sylow p-subgroup"))?;
            sylow = sylow.with_generators(&[y])?;
            if !sylow.is_p_group(p) {
                return Err(Error::internal("Sylow extension produced a non-p-group"));
            }
        }
        Ok(sylow)
    }

    /// Cyclic iff some element has order equal to the group order.
    pub fn is_cyclic(&self) -> Result<bool> {
        if self.is_trivial() {
            return Ok(true);
        }
        let n = self.enumerable_order()?;
        if self.generators.len() == 1 {
            return Ok(self.generators[0].order() == n);
        }
        let mut cyclic = false;
        self.for_each_element(|g| {
            if !cyclic && g.order() == n {
                cyclic = true;
            }
        });
        Ok(cyclic)
    }

    /// Frattini subgroup of a p-group: the normal closure of the commutators
    /// and p-th powers of the generators.
    pub fn frattini_subgroup_of_p_group(&self, p: u64) -> Result<PermGroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !self.is_p_group(p) {
            return Err(Error::NotPGroup(p));
        }
        let gens = &self.generators;
        let mut seeds = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            seeds.push(a.pow(p as i64));
            for b in &gens[i + 1..] {
                seeds.push(Perm::commutator(a, b));
            }
        }
        self.normal_closure(&seeds)
    }

    /// Largest normal subgroup of order prime to `p`: the join of the normal
    /// closures of p-regular class representatives whose closure is a p'-group.
    pub fn p_prime_core(&self, p: u64) -> Result<PermGroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let classes = super::conjugacy_classes(self)?;
        let mut core = PermGroup::trivial(self.degree);
        for (rep, &o) in classes.representatives.iter().zip(&classes.element_orders) {
            if o % p == 0 || o == 1 || core.contains(rep) {
                continue;
            }
            let closure = self.normal_closure(std::slice::from_ref(rep))?;
            if closure.p_valuation(p) == 0 {
                core = core.join(&closure)?;
            }
        }
        if core.p_valuation(p) != 0 {
            return Err(Error::internal(
                "join of normal p'-subgroups is not a p'-group",
            ));
        }
        Ok(core)
    }
}
