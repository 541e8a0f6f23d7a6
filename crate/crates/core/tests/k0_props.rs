mod common;

use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;
use quiver_slope::rational::{q, Q};
use quiver_slope::{K0Class, OrderedSpace, OrderedVector, SlopeData};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::random_slope;

fn slope(seed: u64, n: usize) -> SlopeData {
    random_slope(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

fn effective(n: usize) -> impl Strategy<Value = K0Class> {
    prop::collection::vec(0i64..4, n)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x > 0))
        .prop_map(K0Class::new)
}

fn sized() -> impl Strategy<Value = (u64, usize, K0Class, K0Class)> {
    (any::<u64>(), 1usize..=4).prop_flat_map(|(seed, n)| (Just(seed), Just(n), effective(n), effective(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn c_and_d_are_additive((seed, n, a, b) in sized()) {
        let s = slope(seed, n);
        let sum = a.checked_add(&b).unwrap();
        prop_assert_eq!(s.c_of(&sum).unwrap(), &s.c_of(&a).unwrap() + &s.c_of(&b).unwrap());
        prop_assert_eq!(s.d_of(&sum).unwrap(), s.d_of(&a).unwrap() + s.d_of(&b).unwrap());
    }

    #[test]
    fn seesaw_holds((seed, n, a, c) in sized()) {
        let s = slope(seed, n);
        prop_assert!(s.seesaw_verify(&a, &a.checked_add(&c).unwrap(), &c).unwrap());
    }

    #[test]
    fn determinant_rule_matches_division_in_one_dimension(
        c in prop::collection::vec(-9i64..=9, 3),
        d in prop::collection::vec(1i64..=9, 3),
        a in effective(3),
        b in effective(3),
    ) {
        let labels = vec!["1".into(), "2".into(), "3".into()];
        let s = SlopeData::new(
            labels,
            OrderedSpace::new(1).unwrap(),
            c.iter().map(|&x| OrderedVector::from_ints(&[x])).collect(),
            d.iter().map(|&x| q(x)).collect(),
        )
        .unwrap();
        let quotient = |k: &K0Class| -> Q {
            let num: i64 = k.mults().iter().zip(&c).map(|(m, x)| m * x).sum();
            let den: i64 = k.mults().iter().zip(&d).map(|(m, x)| m * x).sum();
            Q::new(num.into(), den.into())
        };
        prop_assert_eq!(s.compare_slopes(&a, &b).unwrap(), quotient(&a).cmp(&quotient(&b)));
    }

    #[test]
    fn integer_character_reproduces_signs(seed in any::<u64>(), n in 1usize..=3, gamma in prop::collection::vec(0i64..3, 3)) {
        let gamma = K0Class::new(gamma[..n].to_vec());
        prop_assume!(!gamma.is_zero());
        let s = slope(seed, n);
        let theta = s.integerize_character(&gamma).unwrap();
        prop_assert_eq!(theta.eval(&gamma).unwrap(), BigInt::from(0));
        let (cg, dg) = (s.c_of(&gamma).unwrap(), s.d_of(&gamma).unwrap());
        for beta in gamma.sub_box().unwrap() {
            let hat = &cg.scale(&s.d_of(&beta).unwrap()) - &s.c_of(&beta).unwrap().scale(&dg);
            prop_assert_eq!(theta.eval(&beta).unwrap().cmp(&BigInt::from(0)), hat.lex_sign(), "at {}", beta);
        }
    }

    #[test]
    fn pull_back_commutes_with_slopes(
        seed in any::<u64>(),
        map in prop::collection::vec(prop::collection::vec(0i64..3, 2), 3),
        beta in effective(2),
    ) {
        prop_assume!((0..2).all(|j| map.iter().any(|r| r[j] > 0)));
        let s = slope(seed, 3);
        let pulled = s.pull_back(&map, vec!["x".into(), "y".into()]).unwrap();
        let image = K0Class::new(map.iter().map(|r| r[0] * beta.mults()[0] + r[1] * beta.mults()[1]).collect());
        let a = pulled.slope_value(&beta).unwrap();
        let b = s.slope_value(&image).unwrap();
        prop_assert!(a.determinant(&b).is_zero());
        prop_assert_eq!(a.cmp(&b), Ordering::Equal);
    }
}

#[test]
fn non_effective_classes_have_no_slope() {
    let s = slope(1, 2);
    assert!(s.slope_value(&K0Class::zero(2)).is_err());
    assert!(s.slope_value(&K0Class::new(vec![1, -1])).is_err());
    assert!(s.slope_value(&K0Class::new(vec![1])).is_err());
}
