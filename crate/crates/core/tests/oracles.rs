mod common;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use blockgalois::blocks::{
    block_partition, block_partition_with, defect_group, principal_block_by_regular_sums,
};
use blockgalois::chartab::{character_table, class_fusion};
use blockgalois::constructions::*;
use blockgalois::cyclotomic::{sigma_e, ModPEmbedding};
use blockgalois::numtheory::{split_p_part, valuation};
use blockgalois::verify::{default_corpus, transitive_counts, transitive_group};
use blockgalois::{conjugacy_classes, Perm, PermGroup};
use common::*;

fn small_groups() -> Vec<(String, PermGroup)> {
    let mut out = Vec::new();
    for (d, &n) in transitive_counts().iter().enumerate().take(6) {
        for i in 1..=n {
            out.push((
                format!("T{}.{i}", d + 1),
                transitive_group(d + 1, i).unwrap(),
            ));
        }
    }
    out.push(("Q8".into(), quaternion(8).unwrap()));
    out.push(("Q16".into(), quaternion(16).unwrap()));
    out.push(("D20".into(), dihedral(20).unwrap()));
    out.push((
        "C3xS3".into(),
        direct_product(&[cyclic(3).unwrap(), symmetric(3).unwrap()]).unwrap(),
    ));
    out.push(("PSL(2,7)".into(), psl2(7).unwrap()));
    out
}

#[test]
fn orders_match_closure() {
    for (name, g) in small_groups() {
        let elems = closure(g.degree(), g.generators());
        assert_eq!(g.order_u64(), Some(elems.len() as u64), "{name}");
        assert!(elems.iter().all(|x| g.contains(x)), "{name}");
    }
    // an element outside
    let a5 = alternating(5).unwrap();
    assert!(!a5.contains(&Perm::parse_cycles(5, "(0 1)").unwrap()));
}

#[test]
fn classes_match_brute_force() {
    for (name, g) in small_groups() {
        let elems = closure(g.degree(), g.generators());
        let brute = brute_classes(&elems, g.generators());
        let classes = conjugacy_classes(&g).unwrap();
        assert_eq!(brute.len(), classes.len(), "{name}");
        for members in &brute {
            let c = classes.class_of(&elems[members[0]]).unwrap();
            assert_eq!(classes.sizes[c] as usize, members.len(), "{name}");
            assert!(
                members
                    .iter()
                    .all(|&m| classes.class_of(&elems[m]) == Some(c)),
                "{name}"
            );
            let o = elems[members[0]].order();
            assert_eq!(classes.element_orders[c], o, "{name}");
        }
        // power maps
        for c in 0..classes.len() {
            for k in [2i64, 3, -1] {
                let x = classes.representatives[c].pow(k);
                assert_eq!(
                    classes.class_of(&x),
                    Some(classes.power_class(c, k)),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn character_tables_match_numeric_method() {
    for (name, g) in small_groups() {
        let table = character_table(&g).unwrap();
        let numeric = numeric_table(&g, table.classes(), 7);
        assert!(
            matches_up_to_row_permutation(&table, &numeric, 1e-6),
            "{name}"
        );
        assert!(table.check_orthogonality().unwrap(), "{name}");
    }
}

#[test]
fn subgroup_constructions_brute_force() {
    for (name, g) in small_groups() {
        let elems = closure(g.degree(), g.generators());
        let order = elems.len() as u64;
        for p in [2u64, 3, 5] {
            let sylow = g.sylow_subgroup(p).unwrap();
            assert_eq!(
                sylow.order_u64(),
                Some(split_p_part(order, p).0),
                "{name} {p}"
            );
            assert!(g.contains_subgroup(&sylow));

            let pe = closure(sylow.degree(), sylow.generators());
            // Frattini subgroup of P: generated by all commutators and p-th powers
            let mut seeds = Vec::new();
            for x in &pe {
                seeds.push(x.pow(p as i64));
                for y in &pe {
                    seeds.push(Perm::commutator(x, y));
                }
            }
            let phi_brute = closure(g.degree(), &seeds).len() as u64;
            let phi = sylow.frattini_subgroup_of_p_group(p).unwrap();
            assert_eq!(phi.order_u64(), Some(phi_brute), "{name} Phi at {p}");

            // O_p'(G): normal, of p'-order, and maximal with these properties
            let core = g.p_prime_core(p).unwrap();
            assert!(g.is_normal_subgroup(&core));
            assert_ne!(core.order_u64().unwrap() % p, 0, "{name}");
            for x in &elems {
                if x.order() % p != 0 && !core.contains(x) {
                    let n = g
                        .normal_closure(std::slice::from_ref(x))
                        .unwrap()
                        .join(&core)
                        .unwrap();
                    assert_eq!(
                        n.order_u64().unwrap() % p,
                        0,
                        "{name}: O_p' not maximal at {p}"
                    );
                }
            }
        }
        // centralizers
        let x = &g
            .generators()
            .first()
            .cloned()
            .unwrap_or_else(|| g.identity());
        let brute = elems.iter().filter(|y| y.commutes_with(x)).count() as u64;
        assert_eq!(g.centralizer(x).unwrap().order_u64(), Some(brute), "{name}");
    }
}

#[test]
fn frobenius_reciprocity() {
    let pairs = [
        (symmetric(4).unwrap(), alternating(4).unwrap()),
        (
            alternating(5).unwrap(),
            alternating(5)
                .unwrap()
                .stabilizer_of(4u32, |x, g| g.image(*x))
                .unwrap(),
        ),
        (
            psl2(7).unwrap(),
            psl2(7).unwrap().sylow_subgroup(7).unwrap(),
        ),
        (
            symmetric(5).unwrap(),
            symmetric(5).unwrap().sylow_subgroup(2).unwrap(),
        ),
    ];
    for (g, h) in pairs {
        let (tg, th) = (character_table(&g).unwrap(), character_table(&h).unwrap());
        let f = class_fusion(&th, &tg).unwrap();
        for theta in th.irreducibles() {
            let ind = f.induce(theta, &th, &tg).unwrap();
            let mut norm = BigRational::from_integer(BigInt::from(0));
            for chi in tg.irreducibles() {
                let res = f.restrict(chi, &th, &tg).unwrap();
                let lhs = tg.inner_product(&ind, chi).unwrap();
                assert_eq!(lhs, th.inner_product(theta, &res).unwrap());
                assert!(lhs.is_integer());
                norm += &lhs * &lhs;
            }
            assert_eq!(norm, tg.inner_product(&ind, &ind).unwrap());
        }
    }
}

#[test]
fn sigma_matches_definition() {
    for (p, n) in [(2u64, 24u64), (3, 36), (5, 50), (2, 8), (3, 7), (7, 98)] {
        for e in 1..=3u32 {
            let s = sigma_e(p, e, n).unwrap();
            let (pa, m) = split_p_part(n, p);
            let t = s.exponent();
            assert_eq!(t % m, 1 % m);
            assert_eq!(t % pa, (p.pow(e) + 1) % pa);
            // p-power order
            let mut o = s.order();
            while o.is_multiple_of(p) {
                o /= p;
            }
            assert_eq!(o, 1);
        }
    }
}

/// Blocks checked against facts independent of the partition algorithm:
/// defect-zero blocks are exactly the characters of full p-part degree; the
/// principal block matches the p-regular sum criterion; a cyclic-defect
/// block with defect group of order p^d has e + (p^d - 1)/e characters for
/// some e dividing p - 1, all of height zero; and the partition is the
/// same under a second reduction map.
#[test]
fn block_oracles() {
    let mut groups: Vec<(String, PermGroup)> = small_groups();
    groups.push(("A6".into(), alternating(6).unwrap()));
    groups.push(("PSL(2,11)".into(), psl2(11).unwrap()));
    groups.push(("PSL(2,13)".into(), psl2(13).unwrap()));
    for (name, g) in groups {
        let table = character_table(&g).unwrap();
        let order = table.order();
        for p in [2u64, 3, 5, 7, 11, 13] {
            if !order.is_multiple_of(p) {
                continue;
            }
            let a = valuation(order, p);
            let blocks = block_partition(&table, p).unwrap();
            let full: HashSet<usize> = (0..table.len())
                .filter(|&c| valuation(table.degrees()[c], p) == a)
                .collect();
            let zero: HashSet<usize> = blocks
                .iter()
                .filter(|b| b.defect == 0)
                .map(|b| b.characters[0])
                .collect();
            assert_eq!(full, zero, "{name} p={p}");
            assert!(blocks
                .iter()
                .filter(|b| b.defect == 0)
                .all(|b| b.characters.len() == 1));
            assert_eq!(
                principal_block_by_regular_sums(&table, p),
                blocks[0].characters
            );
            for b in &blocks {
                let d = defect_group(b, &table).unwrap();
                if b.defect > 0 && d.is_cyclic().unwrap() {
                    let k = b.characters.len() as u64;
                    let pd = p.pow(b.defect);
                    let ok = (1..p)
                        .filter(|e| (p - 1) % e == 0)
                        .any(|e| (pd - 1) % e == 0 && k == e + (pd - 1) / e);
                    assert!(
                        ok,
                        "{name} p={p}: cyclic block of size {k}, defect {}",
                        b.defect
                    );
                    assert!(b.heights.iter().all(|&h| h == 0));
                }
            }
            let alt = ModPEmbedding::alternative(p, table.exponent()).unwrap();
            let other = block_partition_with(&table, &alt).unwrap();
            let key = |bs: &[blockgalois::blocks::Block]| {
                bs.iter().map(|b| b.characters.clone()).collect::<Vec<_>>()
            };
            assert_eq!(key(&blocks), key(&other), "{name} p={p}");
        }
    }
}

#[test]
fn corpus_specs_build() {
    for spec in default_corpus() {
        let g = spec.build().unwrap();
        let n = g.order_u64().unwrap();
        assert!(n <= 20_000, "{} has order {n}", spec.name);
    }
}
