mod common;

use common::{el, fields};
use dyadic_lattice::lattice::GramLattice;
use dyadic_lattice::oracle::{oracle_defect, oracle_isotropic, oracle_represents};
use dyadic_lattice::symbols::{
    find_delta, hilbert, is_square, quadratic_defect, space_isotropic, space_represents_element,
    space_represents_space, space_universal, square_class_reps,
};
use dyadic_lattice::{Defect, DiagonalSpace, DyadicField, Error};

fn space(k: &DyadicField, xs: &[&str]) -> DiagonalSpace {
    DiagonalSpace::new(k, xs.iter().map(|s| el(k, s)).collect()).unwrap()
}

#[test]
fn defect_examples() {
    let k = DyadicField::q2();
    let d = |s: &str| quadratic_defect(&k, &el(&k, s)).unwrap();
    assert_eq!(d("1"), Defect::Infinite);
    assert_eq!(d("2"), Defect::Finite(0));
    assert_eq!(d("6"), Defect::Finite(0));
    assert_eq!(d("3"), Defect::Finite(1));
    assert_eq!(d("5"), Defect::Finite(2));
    assert_eq!(d("7"), Defect::Finite(1));
    assert_eq!(d("-1"), Defect::Finite(1));
    assert_eq!(d("4"), Defect::Infinite);
    assert_eq!(quadratic_defect(&k, &k.zero()), Err(Error::ZeroArgument));
    assert_eq!(oracle_defect(&k, &el(&k, "5")).unwrap(), Defect::Finite(2));
    assert_eq!(oracle_defect(&k, &el(&k, "6")).unwrap(), Defect::Finite(0));
}

#[test]
fn defect_values_are_admissible() {
    for (_, k) in fields() {
        let e = k.e();
        for u in common::units(&k) {
            match quadratic_defect(&k, &u).unwrap() {
                Defect::Infinite => {}
                Defect::Finite(d) => assert!(d == 2 * e || (d % 2 == 1 && d < 2 * e), "d = {d}"),
            }
        }
    }
}

#[test]
fn defect_algorithm_matches_oracle() {
    for (name, k) in fields() {
        let bad = common::defect_mismatches(&k);
        assert!(bad.is_empty(), "{name}: {bad:?}");
    }
}

#[test]
fn delta() {
    let k = DyadicField::q2();
    let (rho, delta) = find_delta(&k).unwrap();
    assert_eq!(k.display(&rho), "1");
    assert_eq!(k.display(&delta), "-3");
    for (_, k) in fields() {
        let (_, delta) = find_delta(&k).unwrap();
        assert_eq!(quadratic_defect(&k, &delta).unwrap(), Defect::Finite(2 * k.e()));
    }
}

#[test]
fn defect_of_product() {
    for (_, k) in fields() {
        let reps = square_class_reps(&k, &[0, 1]).unwrap();
        for a in &reps {
            for b in &reps {
                let dab = quadratic_defect(&k, &k.mul(a, b)).unwrap();
                let lo = quadratic_defect(&k, a).unwrap().min(quadratic_defect(&k, b).unwrap());
                assert!(dab >= lo);
            }
        }
    }
}

#[test]
fn class_representatives() {
    let k = DyadicField::q2();
    let show = |o: &[i64]| -> Vec<String> {
        square_class_reps(&k, o).unwrap().iter().map(|x| k.display(x)).collect()
    };
    assert_eq!(show(&[0]), ["1", "3", "5", "7"]);
    assert_eq!(show(&[0, 1]), ["1", "3", "5", "7", "2", "6", "10", "14"]);
    for (_, k) in fields() {
        for order in [0, 1] {
            let reps = square_class_reps(&k, &[order]).unwrap();
            assert_eq!(reps.len(), 1 << (k.degree() + 1));
            for (i, a) in reps.iter().enumerate() {
                assert_eq!(a.ord(), Some(order));
                for b in &reps[..i] {
                    let ratio = k.div(a, b).unwrap();
                    assert!(!oracle_defect(&k, &ratio).unwrap().is_infinite());
                    assert!(!is_square(&k, &ratio).unwrap());
                }
            }
        }
    }
}

#[test]
fn hilbert_examples() {
    let k = DyadicField::q2();
    let h = |a: &str, b: &str| hilbert(&k, &el(&k, a), &el(&k, b)).unwrap();
    assert_eq!(h("-1", "-1"), -1);
    assert_eq!(h("2", "5"), -1);
    assert_eq!(h("2", "7"), 1);
    for a in ["1", "2", "3", "5", "6", "7", "10", "14"] {
        assert_eq!(h(a, "1"), 1);
    }
}

#[test]
fn symbol_laws() {
    for (name, k) in fields() {
        let bad = common::symbol_law_violations(&k);
        assert!(bad.is_empty(), "{name}: {bad:?}");
    }
}

#[test]
fn space_examples() {
    let k = DyadicField::q2();
    assert!(space_isotropic(&space(&k, &["1", "-1"])).unwrap());
    assert!(!space_isotropic(&space(&k, &["1", "1", "1"])).unwrap());
    assert!(!space_isotropic(&space(&k, &["1", "1", "1", "1"])).unwrap());
    assert!(space_isotropic(&space(&k, &["1", "1", "1", "7"])).unwrap());
    assert!(oracle_isotropic(&space(&k, &["1", "1", "1", "1", "1"])).unwrap());
    assert!(space_isotropic(&space(&k, &["1", "1", "1", "1", "1"])).unwrap());

    let seven = el(&k, "7");
    assert!(!space_represents_element(&seven, &space(&k, &["1", "1", "1"])).unwrap());
    assert!(!space_represents_element(&seven, &space(&k, &["1", "1"])).unwrap());
    assert!(space_represents_element(&el(&k, "3"), &space(&k, &["3", "5"])).unwrap());
    assert_eq!(
        space_represents_element(&k.zero(), &space(&k, &["1"])),
        Err(Error::ZeroArgument)
    );
    assert_eq!(DiagonalSpace::new(&k, vec![k.one(), k.zero()]).unwrap_err(), Error::DegenerateSpace);

    assert!(space_universal(&space(&k, &["1", "-1"])).unwrap());
    assert!(!space_universal(&space(&k, &["1", "1", "1"])).unwrap());
    assert!(space_universal(&space(&k, &["1", "1", "1", "1"])).unwrap());
    assert!(!space_universal(&space(&k, &["1"])).unwrap());

    let s11 = space(&k, &["1", "1"]);
    assert!(space_represents_space(&s11, &s11).unwrap());
    assert!(space_represents_space(&space(&k, &["1"]), &s11).unwrap());
    assert!(!space_represents_space(&space(&k, &["7"]), &s11).unwrap());
    assert!(space_represents_space(&s11, &space(&k, &["5", "5"])).unwrap());
    assert!(!space_represents_space(&s11, &space(&k, &["1", "5"])).unwrap());
    assert_eq!(
        space_represents_space(&space(&k, &["1"]), &space(&k, &["1", "1", "1"])),
        Err(Error::BadCodimension(2))
    );
}

/// The ternary formula and the quaternary enumeration against direct
/// isotropy search, on every triple of classes and a sample of quadruples.
#[test]
fn isotropy_matches_oracle() {
    for (_, k) in fields() {
        let reps = square_class_reps(&k, &[0, 1]).unwrap();
        for a in &reps {
            for b in &reps {
                for c in &reps {
                    let s = DiagonalSpace::new(&k, vec![a.clone(), b.clone(), c.clone()]).unwrap();
                    assert_eq!(space_isotropic(&s).unwrap(), oracle_isotropic(&s).unwrap());
                }
                let s = DiagonalSpace::new(&k, vec![a.clone(), b.clone()]).unwrap();
                assert_eq!(space_isotropic(&s).unwrap(), oracle_isotropic(&s).unwrap());
            }
        }
    }
    let k = DyadicField::q2();
    let reps = square_class_reps(&k, &[0, 1]).unwrap();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i..] {
            let s = DiagonalSpace::new(&k, vec![k.one(), k.one(), a.clone(), b.clone()]).unwrap();
            assert_eq!(space_isotropic(&s).unwrap(), oracle_isotropic(&s).unwrap());
        }
    }
}

/// `b` is a value of `S` iff `S ⊥ [-b]` is isotropic, and every value of
/// the diagonal lattice on the same coefficients is a value of `S`.
#[test]
fn element_representation_matches_oracle() {
    for (_, k) in fields() {
        let reps = square_class_reps(&k, &[0, 1]).unwrap();
        let mut coeff_sets = Vec::new();
        for a in &reps {
            for b in &reps {
                coeff_sets.push(vec![a.clone(), b.clone()]);
            }
        }
        for (i, a) in reps.iter().enumerate().step_by(3) {
            for b in reps.iter().skip(i % 2).step_by(2) {
                coeff_sets.push(vec![k.one(), a.clone(), b.clone()]);
            }
        }
        for coeffs in coeff_sets {
            let s = DiagonalSpace::new(&k, coeffs.clone()).unwrap();
            let g = GramLattice::diagonal(&k, coeffs).unwrap();
            for b in &reps {
                let by_formula = space_represents_element(b, &s).unwrap();
                let by_search = oracle_isotropic(&s.extend(k.neg(b)).unwrap()).unwrap();
                assert_eq!(by_formula, by_search, "{} in {:?}", k.display(b), s.coeffs());
                if oracle_represents(&g, b).unwrap() {
                    assert!(by_formula);
                }
            }
        }
    }
}

#[test]
fn five_variables_represent_everything() {
    for (_, k) in fields() {
        let reps = square_class_reps(&k, &[0, 1]).unwrap();
        for a in &reps {
            let s = DiagonalSpace::new(&k, vec![a.clone(), a.clone(), a.clone(), a.clone()]).unwrap();
            for b in &reps {
                assert!(space_represents_element(b, &s).unwrap());
                let five = s.extend(k.neg(b)).unwrap();
                assert!(oracle_isotropic(&five).unwrap());
            }
        }
    }
}
