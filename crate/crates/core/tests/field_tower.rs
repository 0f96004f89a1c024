mod common;

use dyadic_lattice::field::enumerate_residues;
use dyadic_lattice::{DyadicField, Error, FieldElement, FieldSpec};
use proptest::prelude::*;
use serde_json::json;

fn element(k: &DyadicField, val: i64, coefs: &[i64]) -> FieldElement {
    let (f, e) = (k.f() as usize, k.e() as usize);
    let terms: Vec<_> = (0..f * e)
        .map(|idx| {
            let c = if idx == 0 { coefs[0] | 1 } else { coefs[idx] };
            json!([c, idx % f, idx / f])
        })
        .collect();
    k.element_from_json(&json!({ "val": val, "unit": terms })).unwrap()
}

fn any_field() -> impl Strategy<Value = DyadicField> {
    prop_oneof![
        Just(DyadicField::q2()),
        Just(DyadicField::q2_sqrt2()),
        Just(DyadicField::q4()),
    ]
}

fn field_and_elements(n: usize) -> impl Strategy<Value = (DyadicField, Vec<FieldElement>)> {
    (any_field(), prop::collection::vec((-8i64..8, prop::collection::vec(-4096i64..4096, 2)), n)).prop_map(
        |(k, raw)| {
            let xs = raw.iter().map(|(v, c)| element(&k, *v, c)).collect();
            (k, xs)
        },
    )
}

#[test]
fn field_construction() {
    let q2 = DyadicField::from_spec(&FieldSpec::q2()).unwrap();
    assert_eq!((q2.e(), q2.f(), q2.degree()), (1, 1, 1));
    assert_eq!(q2.ord(&q2.from_i64(2)), Some(1));

    let ram = DyadicField::new(&[1, 1], &[vec![-2], vec![0], vec![1]], 30).unwrap();
    assert_eq!((ram.e(), ram.f()), (2, 1));
    assert_eq!(ram.ord(&ram.from_i64(2)), Some(2));

    let unr = DyadicField::new(&[1, 1, 1], &[vec![-2], vec![1]], 30).unwrap();
    assert_eq!((unr.e(), unr.f()), (1, 2));
    assert_eq!(unr.ord(&unr.from_i64(2)), Some(1));

    assert!(matches!(
        DyadicField::new(&[1, 1], &[vec![-4], vec![0], vec![1]], 30),
        Err(Error::NotEisenstein(_))
    ));
    assert!(matches!(
        DyadicField::new(&[1, 0, 1], &[vec![-2], vec![1]], 30),
        Err(Error::NotIrreducibleUnramified(_))
    ));
    assert!(matches!(
        DyadicField::q2_with_precision(7),
        Err(Error::PrecisionTooSmall { needed: 8, have: 7 })
    ));
}

#[test]
fn ring_examples() {
    let k = DyadicField::q2_with_precision(8).unwrap();
    let eight = k.add(&k.from_i64(3), &k.from_i64(5)).unwrap();
    assert_eq!(eight.ord(), Some(3));
    assert!(k.approx_eq(&eight, &k.pi_pow(3)));
    let p = k.mul(&k.pi_pow(-2), &k.pi_pow(3));
    assert!(k.approx_eq(&p, &k.from_i64(2)));
    assert_eq!(k.div(&k.one(), &k.zero()), Err(Error::DivisionByZero));

    let k = DyadicField::q2_with_precision(12).unwrap();
    let one = k.one();
    let d = k.sub(&k.from_i64(1 + (1 << 11)), &one).unwrap();
    assert_eq!((d.ord(), d.precision()), (Some(11), Some(1)));
    assert!(matches!(k.sub(&one, &k.from_i64(1 + (1 << 13))), Err(Error::PrecisionLoss(_))));

    let k = DyadicField::q2();
    assert_eq!(k.ord(&k.from_i64(12)), Some(2));
    assert_eq!(k.ord(&k.zero()), None);
    assert_eq!(DyadicField::q2_sqrt2().ord(&DyadicField::q2_sqrt2().from_i64(2)), Some(2));
}

#[test]
fn residue_enumeration() {
    let k = DyadicField::q2();
    let all: Vec<_> = enumerate_residues(&k, 1, false).unwrap().map(|x| k.display(&x)).collect();
    assert_eq!(all, ["0", "1"]);
    let units: Vec<_> = enumerate_residues(&k, 3, true).unwrap().map(|x| k.display(&x)).collect();
    assert_eq!(units, ["1", "3", "5", "7"]);

    let r = DyadicField::q2_sqrt2();
    let units: Vec<_> = enumerate_residues(&r, 2, true).unwrap().map(|x| r.display(&x)).collect();
    assert_eq!(units, ["1", "1 + π"]);

    for (_, k) in common::fields() {
        for digits in 1..=4 {
            let n = enumerate_residues(&k, digits, false).unwrap().count() as u64;
            assert_eq!(n, 1u64 << (k.f() * digits));
        }
    }
    assert!(matches!(
        enumerate_residues(&k, k.precision() + 1, false).map(|_| ()),
        Err(Error::PrecisionTooSmall { .. })
    ));
}

#[test]
fn two_has_order_e() {
    for (_, k) in common::fields() {
        let two = k.from_i64(2);
        assert_eq!(k.ord(&two), Some(k.e() as i64));
        let u = k.div(&k.pi_pow(k.e() as i64), &two).unwrap();
        assert_eq!(u.ord(), Some(0));
    }
}

proptest! {
    #[test]
    fn order_is_additive((k, xs) in field_and_elements(2)) {
        let p = k.mul(&xs[0], &xs[1]);
        prop_assert_eq!(p.ord().unwrap(), xs[0].ord().unwrap() + xs[1].ord().unwrap());
    }

    #[test]
    fn order_of_sum((k, xs) in field_and_elements(2)) {
        let (a, b) = (&xs[0], &xs[1]);
        let (va, vb) = (a.ord().unwrap(), b.ord().unwrap());
        match k.add(a, b) {
            Ok(s) => {
                if let Some(vs) = s.ord() {
                    prop_assert!(vs >= va.min(vb));
                    if va != vb {
                        prop_assert_eq!(vs, va.min(vb));
                    }
                }
            }
            Err(Error::PrecisionLoss(_)) => prop_assert_eq!(va, vb),
            Err(other) => prop_assert!(false, "unexpected {other}"),
        }
    }

    #[test]
    fn json_round_trip((k, xs) in field_and_elements(1)) {
        let back = k.element_from_json(&k.element_to_json(&xs[0])).unwrap();
        prop_assert_eq!(back, xs[0].clone());
    }

    #[test]
    fn inverse_and_distributivity((k, xs) in field_and_elements(3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        let one = k.mul(a, &k.inv(a).unwrap());
        prop_assert!(k.approx_eq(&one, &k.one()));
        prop_assert!(k.approx_eq(&k.mul(a, b), &k.mul(b, a)));
        if let (Ok(s), Ok(t)) = (k.add(b, c), k.add(&k.mul(a, b), &k.mul(a, c))) {
            prop_assert!(k.approx_eq(&k.mul(a, &s), &t));
        }
    }

    #[test]
    fn self_difference_loses_precision((k, xs) in field_and_elements(1)) {
        prop_assert!(matches!(k.sub(&xs[0], &xs[0]), Err(Error::PrecisionLoss(_))));
    }
}
