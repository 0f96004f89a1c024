//! Arithmetic in the three test fields: Q2, the ramified Q2(sqrt 2) and the
//! unramified quadratic extension, with relative precision tracking.

use dyadic_lattice::{DyadicField, Error};

fn main() -> dyadic_lattice::Result<()> {
    for (name, k) in [
        ("Q2", DyadicField::q2()),
        ("Q2(sqrt 2)", DyadicField::q2_sqrt2()),
        ("Q4", DyadicField::q4()),
    ] {
        let pi = k.uniformizer();
        let two = k.from_i64(2);
        println!("{name}: e = {}, f = {}, N = {}", k.e(), k.f(), k.precision());
        println!("  ord 2 = {:?}, pi^2 / 2 = {}", two.ord(), k.display(&k.div(&k.square(&pi), &two)?));

        let w = k.unramified_generator();
        let x = k.add(&k.one(), &k.mul(&w, &pi))?;
        let y = k.inv(&x)?;
        println!("  x = {}, 1/x = {}", k.display(&x), k.display(&y));
        println!("  x * (1/x) == 1: {}", k.approx_eq(&k.mul(&x, &y), &k.one()));
    }

    // Cancellation drops known digits; total cancellation is an error.
    let k = DyadicField::q2_with_precision(12)?;
    let a = k.add(&k.one(), &k.pi_pow(11))?;
    let d = k.sub(&a, &k.one())?;
    println!("Q2, N = 12: (1 + 2^11) - 1 = {} with {:?} known digit(s)", k.display(&d), d.precision());
    match k.sub(&k.one(), &k.add(&k.one(), &k.pi_pow(13))?) {
        Err(Error::PrecisionLoss(n)) => println!("1 - (1 + 2^13) vanishes mod pi^{n}"),
        other => println!("unexpected: {other:?}"),
    }

    // The wire format.
    let k = DyadicField::q2_sqrt2();
    let z = k.shift(&k.add(&k.one(), &k.uniformizer())?, -3);
    let json = k.element_to_json(&z);
    println!("{} encodes as {json}", k.display(&z));
    assert!(k.approx_eq(&k.element_from_json(&json)?, &z));
    Ok(())
}
