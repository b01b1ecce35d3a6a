//! Ordinary character tables and the class-function toolkit.

pub mod dixon;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, ConjClassData, PermGroup};
use crate::numtheory::{inv_mod, mul_mod, pow_mod};

static NEXT_TABLE_ID: AtomicU64 = AtomicU64::new(1);

/// A class function owned by one character table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    table_id: u64,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn table_id(&self) -> u64 {
        self.table_id
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> ClassFunction {
        ClassFunction {
            table_id: self.table_id,
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.table_id != other.table_id {
            return Err(Error::TableMismatch);
        }
        Ok(ClassFunction {
            table_id: self.table_id,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        self.map(|v| v.scale(c))
    }
}

/// Class data plus the irreducible characters of a permutation group.
///
/// Rows are ordered by degree, then with the trivial character first, then
/// by the value lists; row 0 is the trivial character.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    id: u64,
    group: PermGroup,
    classes: ConjClassData,
    irreducibles: Vec<ClassFunction>,
    degrees: Vec<u64>,
    exponent: u64,
}

/// Compute the character table of `group` by the Dixon-Schneider method.
pub fn character_table(group: &PermGroup) -> Result<CharacterTable> {
    let classes = conjugacy_classes(group)?;
    CharacterTable::from_classes(group, classes)
}

impl CharacterTable {
    pub fn from_classes(group: &PermGroup, classes: ConjClassData) -> Result<Self> {
        let order = classes.group_order();
        let exponent = classes.exponent();
        let q = dixon::dixon_prime(order, exponent);
        let z = dixon::primitive_root(q);
        let vectors = dixon::common_eigenvectors(group, &classes, q)?;
        let r = classes.len();
        let root = crate::numtheory::isqrt(order);

        let mut rows: Vec<(u64, Vec<Cyclotomic>)> = Vec::with_capacity(r);
        for w in vectors {
            // chi(1)^2 = |G| / sum_j w_j w_{j*} / h_j
            let mut s = 0u64;
            for j in 0..r {
                let h_inv = inv_mod(classes.sizes[j] % q, q).expect("q does not divide |G|");
                let t = mul_mod(mul_mod(w[j], w[classes.inverse_map[j]], q), h_inv, q);
                s = (s + t) % q;
            }
            let s_inv = inv_mod(s, q).ok_or_else(|| Error::internal("degenerate eigenvector"))?;
            let d2 = mul_mod(order % q, s_inv, q);
            let d = (1..=root)
                .find(|&d| mul_mod(d, d, q) == d2 && order.is_multiple_of(d))
                .ok_or_else(|| Error::internal("no admissible character degree"))?;
            let modq: Vec<u64> = (0..r)
                .map(|j| {
                    let h_inv = inv_mod(classes.sizes[j] % q, q).unwrap();
                    mul_mod(mul_mod(w[j], d % q, q), h_inv, q)
                })
                .collect();
            let values = (0..r)
                .map(|k| lift_value(&classes, &modq, k, d, q, z))
                .collect::<Result<Vec<_>>>()?;
            rows.push((d, values));
        }
        let trivial: Vec<Cyclotomic> = vec![Cyclotomic::one(); r];
        rows.sort_by(|a, b| {
            a.0.cmp(&b.0)
                .then_with(|| (a.1 != trivial).cmp(&(b.1 != trivial)))
                .then_with(|| a.1.cmp(&b.1))
        });
        let sum_sq: u128 = rows.iter().map(|(d, _)| (*d as u128) * (*d as u128)).sum();
        if sum_sq != order as u128 || rows.first().map(|row| row.1 != trivial).unwrap_or(true) {
            return Err(Error::internal(
                "character degrees do not satisfy the sum of squares",
            ));
        }
        let id = NEXT_TABLE_ID.fetch_add(1, Ordering::Relaxed);
        let degrees = rows.iter().map(|(d, _)| *d).collect();
        let irreducibles = rows
            .into_iter()
            .map(|(_, values)| ClassFunction {
                table_id: id,
                values,
            })
            .collect();
        Ok(CharacterTable {
            id,
            group: group.clone(),
            classes,
            irreducibles,
            degrees,
            exponent,
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjClassData {
        &self.classes
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.classes.group_order()
    }

    pub fn class_function(&self, values: Vec<Cyclotomic>) -> Result<ClassFunction> {
        if values.len() != self.classes.len() {
            return Err(Error::InvalidArgument(format!(
                "{} values for {} classes",
                values.len(),
                self.classes.len()
            )));
        }
        Ok(ClassFunction {
            table_id: self.id,
            values,
        })
    }

    pub fn trivial_character(&self) -> &ClassFunction {
        &self.irreducibles[0]
    }

    pub fn regular_character(&self) -> ClassFunction {
        let mut values = vec![Cyclotomic::zero(); self.classes.len()];
        values[0] = Cyclotomic::from_integer(self.order() as i64);
        ClassFunction {
            table_id: self.id,
            values,
        }
    }

    fn check_owned(&self, f: &ClassFunction) -> Result<()> {
        if f.table_id != self.id {
            return Err(Error::TableMismatch);
        }
        Ok(())
    }

    /// `(1/|G|) sum_j |K_j| a(g_j) conj(b(g_j))`.
    pub fn inner_product(&self, a: &ClassFunction, b: &ClassFunction) -> Result<BigRational> {
        self.check_owned(a)?;
        self.check_owned(b)?;
        let terms: Vec<Cyclotomic> = (0..self.classes.len())
            .map(|j| {
                let h = BigRational::from_integer(BigInt::from(self.classes.sizes[j]));
                (&a.values[j] * &b.values[j].complex_conjugate()).scale(&h)
            })
            .collect();
        let total = Cyclotomic::sum(terms.iter());
        let total = total
            .to_rational()
            .ok_or_else(|| Error::internal("inner product is not rational"))?;
        Ok(total / BigRational::from_integer(BigInt::from(self.order())))
    }

    /// Row index of an irreducible character given by its values.
    pub fn find_irreducible(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.irreducibles.iter().position(|c| c.values == values)
    }

    /// Classes on which `chi` takes the value `chi(1)`.
    pub fn kernel_classes(&self, chi: &ClassFunction) -> Result<Vec<usize>> {
        self.check_owned(chi)?;
        Ok((0..self.classes.len())
            .filter(|&j| chi.values[j] == chi.values[0])
            .collect())
    }

    /// The kernel of a character as a normal subgroup.
    pub fn kernel_group(&self, chi: &ClassFunction) -> Result<PermGroup> {
        let reps: Vec<_> = self
            .kernel_classes(chi)?
            .into_iter()
            .filter(|&j| j != 0)
            .map(|j| self.classes.representatives[j].clone())
            .collect();
        self.group.normal_closure(&reps)
    }

    /// Rows whose kernel contains every listed element of the group.
    pub fn characters_with_kernel_containing(
        &self,
        elements: &[crate::perm::Perm],
    ) -> Result<Vec<usize>> {
        let classes: Vec<usize> = elements
            .iter()
            .map(|g| self.classes.class_of(g).ok_or(Error::NotMember))
            .collect::<Result<_>>()?;
        Ok((0..self.len())
            .filter(|&i| {
                let chi = &self.irreducibles[i];
                classes.iter().all(|&j| chi.values[j] == chi.values[0])
            })
            .collect())
    }

    /// Exact check of both orthogonality relations.
    pub fn check_orthogonality(&self) -> Result<bool> {
        let r = self.len();
        for i in 0..r {
            for j in i..r {
                let ip = self.inner_product(&self.irreducibles[i], &self.irreducibles[j])?;
                let expected = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                if ip != expected {
                    return Ok(false);
                }
            }
        }
        for k in 0..r {
            for l in k..r {
                let terms: Vec<Cyclotomic> = self
                    .irreducibles
                    .iter()
                    .map(|chi| &chi.values[k] * &chi.values[l].complex_conjugate())
                    .collect();
                let s = Cyclotomic::sum(terms.iter());
                let expected = if k == l {
                    self.classes.centralizer_order(k) as i64
                } else {
                    0
                };
                if s != Cyclotomic::from_integer(expected) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// JSON export with class metadata and serialized values.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct ClassJson {
            index: usize,
            representative: String,
            order: u64,
            size: u64,
            centralizer_order: u64,
        }
        #[derive(Serialize)]
        struct TableJson<'a> {
            group_order: u64,
            exponent: u64,
            classes: Vec<ClassJson>,
            power_maps: BTreeMap<String, &'a Vec<usize>>,
            inverse_map: &'a [usize],
            degrees: &'a [u64],
            characters: Vec<Vec<String>>,
        }
        let classes = (0..self.classes.len())
            .map(|j| ClassJson {
                index: j,
                representative: self.classes.representatives[j].to_string(),
                order: self.classes.element_orders[j],
                size: self.classes.sizes[j],
                centralizer_order: self.classes.centralizer_order(j),
            })
            .collect();
        let json = TableJson {
            group_order: self.order(),
            exponent: self.exponent,
            classes,
            power_maps: self
                .classes
                .power_maps
                .iter()
                .map(|(p, m)| (p.to_string(), m))
                .collect(),
            inverse_map: &self.classes.inverse_map,
            degrees: &self.degrees,
            characters: self
                .irreducibles
                .iter()
                .map(|c| c.values.iter().map(|v| v.to_string()).collect())
                .collect(),
        };
        serde_json::to_value(json).expect("table serializes")
    }
}

/// Recover `chi(g_k)` from its reductions mod `q` on the powers of `g_k`.
fn lift_value(
    classes: &ConjClassData,
    modq: &[u64],
    k: usize,
    d: u64,
    q: u64,
    z: u64,
) -> Result<Cyclotomic> {
    let o = classes.element_orders[k];
    let eps = pow_mod(z, (q - 1) / o, q);
    let eps_inv = inv_mod(eps, q).expect("unit");
    let o_inv = inv_mod(o % q, q).expect("q does not divide the exponent");
    let samples: Vec<u64> = (0..o)
        .map(|s| modq[classes.power_class(k, s as i64)])
        .collect();
    let mut coeffs = Vec::new();
    let mut total = 0u64;
    for l in 0..o {
        // m_l = (1/o) sum_s chi(g^s) eps^(-ls)
        let step = pow_mod(eps_inv, l, q);
        let mut acc = 0u64;
        let mut w = 1u64;
        for &x in &samples {
            acc = (acc + mul_mod(x, w, q)) % q;
            w = mul_mod(w, step, q);
        }
        let m = mul_mod(acc, o_inv, q);
        if m > d {
            return Err(Error::internal("eigenvalue multiplicity out of range"));
        }
        total += m;
        if m != 0 {
            coeffs.push((l, BigRational::from_integer(BigInt::from(m))));
        }
    }
    if total != d {
        return Err(Error::internal(
            "eigenvalue multiplicities do not sum to the degree",
        ));
    }
    Ok(Cyclotomic::from_coefficients(o, &coeffs))
}

/// Map from the classes of a subgroup `H` to the classes of `G`.
#[derive(Clone, Debug)]
pub struct ClassFusion {
    sub_id: u64,
    super_id: u64,
    map: Vec<usize>,
}

impl ClassFusion {
    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

/// Fusion of the classes of `sub` into those of `sup`; `sub` must be a
/// subgroup of `sup` on the same points.
pub fn class_fusion(sub: &CharacterTable, sup: &CharacterTable) -> Result<ClassFusion> {
    if sub.group.degree() != sup.group.degree() || !sup.group.contains_subgroup(&sub.group) {
        return Err(Error::NotSubgroup);
    }
    let map = sub
        .classes
        .representatives
        .iter()
        .map(|g| sup.classes.class_of(g).ok_or(Error::NotMember))
        .collect::<Result<_>>()?;
    Ok(ClassFusion {
        sub_id: sub.id,
        super_id: sup.id,
        map,
    })
}

impl ClassFusion {
    fn check(&self, sub: &CharacterTable, sup: &CharacterTable) -> Result<()> {
        if self.sub_id != sub.id || self.super_id != sup.id {
            return Err(Error::TableMismatch);
        }
        Ok(())
    }

    /// Restriction of a class function of the overgroup.
    pub fn restrict(
        &self,
        chi: &ClassFunction,
        sub: &CharacterTable,
        sup: &CharacterTable,
    ) -> Result<ClassFunction> {
        self.check(sub, sup)?;
        sup.check_owned(chi)?;
        Ok(ClassFunction {
            table_id: sub.id,
            values: self.map.iter().map(|&j| chi.values[j].clone()).collect(),
        })
    }

    /// Induction of a class function of the subgroup.
    pub fn induce(
        &self,
        theta: &ClassFunction,
        sub: &CharacterTable,
        sup: &CharacterTable,
    ) -> Result<ClassFunction> {
        self.check(sub, sup)?;
        sub.check_owned(theta)?;
        let mut buckets: Vec<Vec<Cyclotomic>> = vec![Vec::new(); sup.classes.len()];
        for (c, &k) in self.map.iter().enumerate() {
            let h = BigRational::from_integer(BigInt::from(sub.classes.sizes[c]));
            buckets[k].push(theta.values[c].scale(&h));
        }
        let values = buckets
            .iter()
            .enumerate()
            .map(|(k, terms)| {
                let factor = BigRational::new(
                    BigInt::from(sup.classes.centralizer_order(k)),
                    BigInt::from(sub.order()),
                );
                Cyclotomic::sum(terms.iter()).scale(&factor)
            })
            .collect();
        Ok(ClassFunction {
            table_id: sup.id,
            values,
        })
    }

    /// Rows `chi` of the overgroup table with `[chi_N, theta] != 0`; the
    /// subgroup must be normal.
    pub fn irr_over(
        &self,
        theta: &ClassFunction,
        sub: &CharacterTable,
        sup: &CharacterTable,
    ) -> Result<Vec<usize>> {
        self.check(sub, sup)?;
        if !sup.group.is_normal_subgroup(&sub.group) {
            return Err(Error::NotNormal);
        }
        let mut out = Vec::new();
        for (i, chi) in sup.irreducibles.iter().enumerate() {
            let res = self.restrict(chi, sub, sup)?;
            if !sub.inner_product(&res, theta)?.is_zero() {
                out.push(i);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Perm> = gens
            .iter()
            .map(|s| Perm::parse_cycles(n, s).unwrap())
            .collect();
        PermGroup::from_generators(n, &gens).unwrap()
    }

    #[test]
    fn small_tables() {
        let s4 = character_table(&group(4, &["(0 1 2 3)", "(0 1)"])).unwrap();
        assert_eq!(s4.degrees(), &[1, 1, 2, 3, 3]);
        assert!(s4.check_orthogonality().unwrap());
        let c3 = character_table(&group(3, &["(0 1 2)"])).unwrap();
        assert_eq!(c3.degrees(), &[1, 1, 1]);
        assert_eq!(c3.character(1).value(1).conductor(), 3);
        let a5 = character_table(&group(5, &["(0 1 2 3 4)", "(2 3 4)"])).unwrap();
        assert_eq!(a5.degrees(), &[1, 3, 3, 4, 5]);
        assert!(a5.check_orthogonality().unwrap());
        let triv = character_table(&PermGroup::trivial(3)).unwrap();
        assert_eq!(triv.degrees(), &[1]);
    }

    #[test]
    fn induction_and_restriction() {
        let s3 = character_table(&group(3, &["(0 1 2)", "(0 1)"])).unwrap();
        let a3 = character_table(&group(3, &["(0 1 2)"])).unwrap();
        let fus = class_fusion(&a3, &s3).unwrap();
        let ind = fus.induce(a3.trivial_character(), &a3, &s3).unwrap();
        let expected = s3.character(0).add(s3.character(1)).unwrap();
        assert_eq!(ind, expected);
        let res = fus.restrict(s3.character(2), &a3, &s3).unwrap();
        assert_eq!(res, a3.character(1).add(a3.character(2)).unwrap());
        assert_eq!(fus.irr_over(a3.character(1), &a3, &s3).unwrap(), vec![2]);
        assert_eq!(fus.irr_over(a3.character(0), &a3, &s3).unwrap(), vec![0, 1]);
    }

    #[test]
    fn inner_products_and_kernels() {
        let s3 = character_table(&group(3, &["(0 1 2)", "(0 1)"])).unwrap();
        let mut psi = s3.character(0).scale(&BigRational::zero());
        for chi in s3.irreducibles() {
            let d = BigRational::from_integer(BigInt::from(
                s3.degrees()[s3.find_irreducible(chi.values()).unwrap()],
            ));
            psi = psi.add(&chi.scale(&d)).unwrap();
        }
        assert_eq!(
            s3.inner_product(&psi, &psi).unwrap(),
            BigRational::from_integer(6.into())
        );
        let reg = s3.regular_character();
        assert_eq!(
            s3.inner_product(s3.trivial_character(), &reg).unwrap(),
            BigRational::one()
        );
        let s4 = character_table(&group(4, &["(0 1 2 3)", "(0 1)"])).unwrap();
        assert_eq!(
            s4.kernel_group(s4.character(1)).unwrap().order_u64(),
            Some(12)
        );
        assert_eq!(
            s4.kernel_group(s4.character(0)).unwrap().order_u64(),
            Some(24)
        );
    }
}
