use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use blockgalois::constructions::symmetric;
use blockgalois::cyclotomic::{Cyclotomic, GaloisAut, ModPEmbedding};
use blockgalois::group::p_part_decomposition;
use blockgalois::numtheory::{gcd, is_prime};
use blockgalois::{Perm, PermGroup};

const CONDUCTORS: &[u64] = &[1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 21, 24, 27, 36, 45, 60];

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn element(n: u64, integral: bool) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((0..n, -6i64..=6, 1i64..=4), 0..6).prop_map(move |raw| {
        let coeffs: Vec<(u64, BigRational)> = raw
            .into_iter()
            .map(|(k, a, d)| (k, if integral { rat(a, 1) } else { rat(a, d) }))
            .collect();
        Cyclotomic::from_coefficients(n, &coeffs)
    })
}

fn triple(integral: bool) -> impl Strategy<Value = (u64, Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(CONDUCTORS).prop_flat_map(move |n| {
        (
            Just(n),
            element(n, integral),
            element(n, integral),
            element(n, integral),
        )
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-7 && (a.1 - b.1).abs() < 1e-7
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms((_n, a, b, c) in triple(false)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
        prop_assert_eq!(&a + &Cyclotomic::zero(), a.clone());
        prop_assert_eq!(&(-&a) + &a, Cyclotomic::zero());
    }

    #[test]
    fn arithmetic_matches_complex_numbers((_n, a, b, _c) in triple(false)) {
        let (x, y) = (a.approx(), b.approx());
        let sum = (x.0 + y.0, x.1 + y.1);
        let prod = (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        prop_assert!(close((&a + &b).approx(), sum));
        prop_assert!(close((&a * &b).approx(), prod));
        let conj = a.complex_conjugate().approx();
        prop_assert!(close(conj, (x.0, -x.1)));
    }

    #[test]
    fn normal_form_is_canonical(n in prop::sample::select(CONDUCTORS), k in 0u64..200, m in 1u64..4) {
        // E(n)^k written at conductor m n is the same element
        let a = Cyclotomic::root_of_unity(n, k as i64);
        let b = Cyclotomic::root_of_unity(n * m, (k * m) as i64);
        prop_assert_eq!(&a, &b);
        // a root of unity of order d has conductor d, or d / 2 when d = 2 mod 4
        let d = n / gcd(k % n, n);
        let expected = if d % 4 == 2 { d / 2 } else { d };
        prop_assert_eq!(a.conductor(), expected);
    }

    #[test]
    fn galois_is_a_ring_homomorphism((n, a, b, _c) in triple(false), t in 1i64..200) {
        let n = n.max(1);
        prop_assume!(gcd(t as u64, n) == 1);
        let s = GaloisAut::new(n, t).unwrap();
        let ap = s.apply(&a).unwrap();
        let bp = s.apply(&b).unwrap();
        prop_assert_eq!(s.apply(&(&a + &b)).unwrap(), &ap + &bp);
        prop_assert_eq!(s.apply(&(&a * &b)).unwrap(), &ap * &bp);
        // complex conjugation commutes with every automorphism
        prop_assert_eq!(s.apply(&a.complex_conjugate()).unwrap(), ap.complex_conjugate());
        // rationals are fixed
        let q = Cyclotomic::from_rational(rat(t, 7));
        prop_assert_eq!(s.apply(&q).unwrap(), q);
    }

    #[test]
    fn text_and_json_round_trip((_n, a, _b, _c) in triple(false)) {
        let text = a.to_string();
        let back: Cyclotomic = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        let json = serde_json::to_string(&a).unwrap();
        let back: Cyclotomic = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(
        (n, a, b, _c) in triple(true),
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
        k in -20i64..20,
    ) {
        let modulus = n.max(1) * p;
        let emb = ModPEmbedding::new(p, modulus).unwrap();
        let f = emb.field();
        let (ra, rb) = (emb.reduce(&a).unwrap(), emb.reduce(&b).unwrap());
        prop_assert_eq!(emb.reduce(&(&a + &b)).unwrap(), f.add(&ra, &rb));
        prop_assert_eq!(emb.reduce(&(&a * &b)).unwrap(), f.mul(&ra, &rb));
        prop_assert_eq!(emb.reduce(&Cyclotomic::from_integer(k)).unwrap(), emb.reduce_integer(k));
        // p-power roots of unity reduce to 1
        prop_assert_eq!(emb.reduce(&Cyclotomic::root_of_unity(p, 1)).unwrap(), f.one());
        // a non-p-integral value is rejected
        let bad = Cyclotomic::from_rational(rat(1, p as i64));
        prop_assert!(emb.reduce(&bad).is_err());
    }

    #[test]
    fn p_part_decomposition_properties(images in Just((0u32..7).collect::<Vec<_>>()).prop_shuffle(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let g = Perm::new(images).unwrap();
        let (gp, gq) = p_part_decomposition(&g, p).unwrap();
        prop_assert_eq!(gp.compose(&gq), g.clone());
        prop_assert!(gp.commutes_with(&gq));
        let mut o = gp.order();
        while o % p == 0 {
            o /= p;
        }
        prop_assert_eq!(o, 1);
        prop_assert!(gq.order() % p != 0);
        prop_assert!(is_prime(p));
    }

    #[test]
    fn random_subgroups_have_consistent_orders(a in Just((0u32..6).collect::<Vec<_>>()).prop_shuffle(), b in Just((0u32..6).collect::<Vec<_>>()).prop_shuffle()) {
        let (a, b) = (Perm::new(a).unwrap(), Perm::new(b).unwrap());
        let h = PermGroup::from_generators(6, &[a.clone(), b.clone()]).unwrap();
        let n = h.order_u64().unwrap();
        prop_assert_eq!(720 % n, 0);
        prop_assert_eq!(h.elements().unwrap().len() as u64, n);
        prop_assert!(symmetric(6).unwrap().contains_subgroup(&h));
        prop_assert!(h.contains(&a.compose(&b).inverse()));
        prop_assert!(h.verify_chain());
    }
}
