//! Permutations of `{0, .., n-1}`.
//!
//! Composition acts on the right: `i^(a*b) = (i^a)^b`, so `a * b` applies
//! `a` first. Conjugation follows the same convention, `x^g = g^-1 x g`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::numtheory::lcm;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    /// Build a permutation from its image list, checking bijectivity.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Permutation from a list of disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside degree {degree}",
                        a.max(b)
                    )));
                }
                if touched[a as usize] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {a} appears twice in cycle notation"
                    )));
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Perm::new(images)
    }

    /// Parse disjoint-cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let bad = |m: String| Error::InvalidPermutation(m);
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad(format!("expected '(' in {text:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| bad(format!("unbalanced parenthesis in {text:?}")))?;
            let body = &rest[1..close];
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u32>()
                        .map_err(|e| bad(format!("bad point {s:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm::from_images_unchecked(inv)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm::from_images_unchecked(
            self.images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        )
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        // i^(g^-1 x g): for j = i^g^-1 we have j -> j^x -> (j^x)^g, i.e. i^g maps to (i^x)^g.
        let mut out = vec![0u32; self.degree()];
        for (i, &xi) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[xi as usize];
        }
        Perm::from_images_unchecked(out)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Commutator `a^-1 b^-1 a b`.
    pub fn commutator(a: &Perm, b: &Perm) -> Perm {
        a.inverse().compose(&b.inverse()).compose(a).compose(b)
    }

    pub fn pow(&self, exp: i64) -> Perm {
        let n = self.degree();
        let order = self.order() as i64;
        let e = exp.rem_euclid(order);
        if e == 0 {
            return Perm::identity(n);
        }
        // Walk each cycle by e steps.
        let mut out = vec![0u32; n];
        let mut done = vec![false; n];
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            let mut j = self.images[start];
            while j as usize != start {
                cycle.push(j);
                j = self.images[j as usize];
            }
            let len = cycle.len();
            let shift = (e as usize) % len;
            for (k, &pt) in cycle.iter().enumerate() {
                out[pt as usize] = cycle[(k + shift) % len];
                done[pt as usize] = true;
            }
        }
        Perm::from_images_unchecked(out)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            done[start] = true;
            let mut j = self.images[start];
            while j as usize != start {
                cycle.push(j);
                done[j as usize] = true;
                j = self.images[j as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut done = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut len = 0u64;
            let mut j = start;
            while !done[j] {
                done[j] = true;
                j = self.images[j] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Points moved by the permutation, lowest first.
    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i as u32)
    }

    /// Disjoint union action: `self` on the first block of points, `other` shifted after it.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let shift = self.degree() as u32;
        let mut images = self.images.to_vec();
        images.extend(other.images.iter().map(|&j| j + shift));
        Perm::from_images_unchecked(images)
    }
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}[{}]", self, self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse_cycles(5, "(0 1 2)(3 4)").unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p.order(), 6);
        assert!(Perm::parse_cycles(3, "()").unwrap().is_identity());
        assert!(Perm::parse_cycles(3, "(0 3)").is_err());
        assert!(Perm::parse_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Perm::parse_cycles(3, "(0 1").is_err());
    }

    #[test]
    fn right_action_composition() {
        let a = Perm::parse_cycles(3, "(0 1)").unwrap();
        let b = Perm::parse_cycles(3, "(1 2)").unwrap();
        // 0 -> 1 under a, then 1 -> 2 under b
        assert_eq!((&a * &b).image(0), 2);
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
    }

    #[test]
    fn conjugation_matches_product() {
        let x = Perm::parse_cycles(5, "(0 1 2 3 4)").unwrap();
        let g = Perm::parse_cycles(5, "(1 4)(2 3)").unwrap();
        let expected = g.inverse().compose(&x).compose(&g);
        assert_eq!(x.conjugate_by(&g), expected);
    }

    #[test]
    fn powers() {
        let x = Perm::parse_cycles(6, "(0 1 2)(3 4)").unwrap();
        assert_eq!(x.pow(6), Perm::identity(6));
        assert_eq!(x.pow(-1), x.inverse());
        assert_eq!(x.pow(2), x.compose(&x));
        assert!(Perm::new(vec![0, 0]).is_err());
    }
}
