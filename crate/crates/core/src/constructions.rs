//! Standard permutation groups.

use crate::cyclotomic::{FieldElem, GaloisField};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::numtheory::factorize;
use crate::perm::Perm;

fn perm(images: Vec<u32>) -> Perm {
    Perm::new(images).expect("construction yields a bijection")
}

fn cycle(n: usize, points: &[u32]) -> Perm {
    Perm::from_cycles(n, &[points.to_vec()]).expect("valid cycle")
}

/// The symmetric group on `n >= 1` points.
pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let long: Vec<u32> = (0..n as u32).collect();
    PermGroup::from_generators(n, &[cycle(n, &long), cycle(n, &[0, 1])])
}

/// The alternating group on `n >= 1` points.
pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let gens: Vec<Perm> = (2..n as u32).map(|i| cycle(n, &[0, 1, i])).collect();
    PermGroup::from_generators(n, &gens)
}

/// The cyclic group of order `n` acting regularly.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    let long: Vec<u32> = (0..n as u32).collect();
    let gens = if n == 1 {
        Vec::new()
    } else {
        vec![cycle(n, &long)]
    };
    PermGroup::from_generators(n, &gens)
}

/// The dihedral group of the given (even) order: on `order / 2` points for
/// `order >= 6`, regular for orders 2 and 4.
pub fn dihedral(order: usize) -> Result<PermGroup> {
    if order == 0 || !order.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "dihedral order {order} must be even"
        )));
    }
    match order {
        2 => cyclic(2),
        4 => PermGroup::from_generators(4, &[perm(vec![1, 0, 3, 2]), perm(vec![2, 3, 0, 1])]),
        _ => {
            let n = order / 2;
            let rotation: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
            let reflection: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
            PermGroup::from_generators(n, &[perm(rotation), perm(reflection)])
        }
    }
}

/// The generalized quaternion group of order `2^k >= 8` in its regular
/// representation: `<a, b | a^(2^(k-1)), b^2 = a^(2^(k-2)), a^b = a^-1>`.
pub fn quaternion(order: usize) -> Result<PermGroup> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "quaternion order {order} must be 2^k >= 8"
        )));
    }
    let n = order / 2;
    let half = n / 2;
    // element a^i b^j has index i + j n
    let mult = |(i, j): (usize, usize), (s, t): (usize, usize)| -> (usize, usize) {
        let s = if j == 1 { (n - s) % n } else { s };
        let i = (i + s) % n;
        if j + t == 2 {
            ((i + half) % n, 0)
        } else {
            (i, j + t)
        }
    };
    let right = |g: (usize, usize)| -> Perm {
        perm(
            (0..order)
                .map(|x| {
                    let (i, j) = mult((x % n, x / n), g);
                    (i + j * n) as u32
                })
                .collect(),
        )
    };
    PermGroup::from_generators(order, &[right((1, 0)), right((0, 1))])
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(factors: &[PermGroup]) -> Result<PermGroup> {
    if factors.is_empty() {
        return Ok(PermGroup::trivial(1));
    }
    let degree: usize = factors.iter().map(|g| g.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for g in factors {
        for s in g.generators() {
            let left = Perm::identity(offset);
            let right = Perm::identity(degree - offset - g.degree());
            let mut x = if offset == 0 {
                s.clone()
            } else {
                left.direct_sum(s)
            };
            if right.degree() > 0 {
                x = x.direct_sum(&right);
            }
            gens.push(x);
        }
        offset += g.degree();
    }
    PermGroup::from_generators(degree, &gens)
}

/// Projective line over `GF(q)`: field elements by index, infinity last.
struct ProjectiveLine {
    field: GaloisField,
    q: u64,
}

impl ProjectiveLine {
    fn new(q: u64) -> Result<Self> {
        let f = factorize(q);
        if f.len() != 1 {
            return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
        }
        let (p, k) = f[0];
        Ok(ProjectiveLine {
            field: GaloisField::new(p, k as usize)?,
            q,
        })
    }

    /// Permutation induced by a map on `GF(q) u {inf}`.
    fn induced(&self, f: impl Fn(Option<&FieldElem>) -> Option<FieldElem>) -> Perm {
        let images = (0..=self.q)
            .map(|i| {
                let x = (i < self.q).then(|| self.field.element(i));
                match f(x.as_ref()) {
                    Some(y) => self.field.index_of(&y) as u32,
                    None => self.q as u32,
                }
            })
            .collect();
        perm(images)
    }

    fn translations(&self) -> Vec<Perm> {
        let k = self.field.degree();
        (0..k)
            .map(|i| {
                let a = self
                    .field
                    .element(self.field.characteristic().pow(i as u32));
                self.induced(|x| x.map(|x| self.field.add(x, &a)))
            })
            .collect()
    }

    fn inversion(&self) -> Perm {
        let fld = &self.field;
        self.induced(|x| match x {
            None => Some(fld.zero()),
            Some(x) if x.is_zero() => None,
            Some(x) => Some(fld.neg(&fld.inverse(x).unwrap())),
        })
    }

    fn scaling(&self, c: &FieldElem) -> Perm {
        self.induced(|x| x.map(|x| self.field.mul(x, c)))
    }

    fn frobenius(&self) -> Perm {
        self.induced(|x| x.map(|x| self.field.frobenius(x)))
    }
}

/// `PSL(2, q)` on the `q + 1` points of the projective line.
pub fn psl2(q: u64) -> Result<PermGroup> {
    let line = ProjectiveLine::new(q)?;
    let mut gens = line.translations();
    gens.push(line.inversion());
    PermGroup::from_generators(q as usize + 1, &gens)
}

/// `PGL(2, q)` on the projective line.
pub fn pgl2(q: u64) -> Result<PermGroup> {
    let line = ProjectiveLine::new(q)?;
    let mut gens = line.translations();
    gens.push(line.inversion());
    gens.push(line.scaling(&line.field.least_primitive_element()?));
    PermGroup::from_generators(q as usize + 1, &gens)
}

/// `PGammaL(2, q)` on the projective line.
pub fn pgammal2(q: u64) -> Result<PermGroup> {
    let line = ProjectiveLine::new(q)?;
    let mut gens = line.translations();
    gens.push(line.inversion());
    gens.push(line.scaling(&line.field.least_primitive_element()?));
    gens.push(line.frobenius());
    PermGroup::from_generators(q as usize + 1, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let ord = |g: Result<PermGroup>| g.unwrap().order_u64().unwrap();
        assert_eq!(ord(symmetric(5)), 120);
        assert_eq!(ord(alternating(6)), 360);
        assert_eq!(ord(alternating(2)), 1);
        assert_eq!(ord(cyclic(12)), 12);
        assert_eq!(ord(dihedral(10)), 10);
        assert_eq!(ord(dihedral(4)), 4);
        assert_eq!(ord(quaternion(8)), 8);
        assert_eq!(ord(quaternion(16)), 16);
        assert_eq!(
            ord(direct_product(&[cyclic(2).unwrap(), cyclic(3).unwrap()])),
            6
        );
        assert_eq!(ord(psl2(7)), 168);
        assert_eq!(ord(psl2(8)), 504);
        assert_eq!(ord(psl2(9)), 360);
        assert_eq!(ord(psl2(4)), 60);
        assert_eq!(ord(pgl2(7)), 336);
        assert_eq!(ord(pgammal2(9)), 1440);
        assert!(psl2(6).is_err());
    }

    #[test]
    fn quaternion_structure() {
        let q8 = quaternion(8).unwrap();
        // exactly one involution
        let involutions = q8
            .elements()
            .unwrap()
            .iter()
            .filter(|g| g.order() == 2)
            .count();
        assert_eq!(involutions, 1);
        let q16 = quaternion(16).unwrap();
        let involutions = q16
            .elements()
            .unwrap()
            .iter()
            .filter(|g| g.order() == 2)
            .count();
        assert_eq!(involutions, 1);
    }
}
