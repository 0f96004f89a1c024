//! Deciding universality by the closed-form case analysis and by the sweep
//! over unary targets, with the clause each verdict rests on.

use dyadic_lattice::{decide_universal_lemma, decide_universal_thm, explain, DyadicField, GoodBongLattice};

fn main() -> dyadic_lattice::Result<()> {
    let k = DyadicField::q2();
    for xs in [
        &["1", "1", "1"][..],
        &["1", "1", "1", "1"],
        &["1", "2"],
        &["1", "-1/4"],
        &["1", "3/4"],
        &["1", "2", "8", "16"],
        &["1", "2", "2", "4"],
        &["3"],
    ] {
        let a = xs.iter().map(|s| k.parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
        let l = GoodBongLattice::new(&k, a)?;
        let thm = decide_universal_thm(&l);
        let lem = decide_universal_lemma(&l);
        println!("{}", l.display());
        println!("  theorem: {}", explain(&thm));
        println!("  lemma:   {}", explain(&lem));
        assert_eq!(thm.universal, lem.universal);
    }

    // Verdicts serialize with the clause bindings.
    let l = GoodBongLattice::new(&k, vec![k.one(), k.from_i64(2), k.from_i64(8), k.from_i64(16)])?;
    println!("{}", serde_json::to_string_pretty(&decide_universal_thm(&l).trace.bindings).unwrap());
    Ok(())
}
