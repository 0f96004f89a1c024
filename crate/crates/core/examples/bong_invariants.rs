//! Validation of good BONGs and their invariants R_i, alpha_i, the
//! truncated defects d[...] and the thresholds A_i.

use dyadic_lattice::bong::{a_invariant, d_bracket_cross};
use dyadic_lattice::{DyadicField, GoodBongLattice};

fn bong(k: &DyadicField, xs: &[&str]) -> dyadic_lattice::Result<GoodBongLattice> {
    let a = xs.iter().map(|s| k.parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
    GoodBongLattice::new(k, a)
}

fn main() -> dyadic_lattice::Result<()> {
    let k = DyadicField::q2();
    for xs in [
        &["1", "2"][..],
        &["2", "-1/2"],
        &["1", "3/4"],
        &["1", "1", "1", "1"],
        &["1", "2", "8", "16"],
    ] {
        let l = bong(&k, xs)?;
        println!("{}: R = {:?}, alpha = {:?}", l.display(), l.orders(), l.alphas());
    }

    // Rejected inputs name the offending index.
    for xs in [&["1", "1/8"][..], &["2", "1/2"], &["4", "8", "6"]] {
        println!("<{}>: {}", xs.join(","), bong(&k, xs).unwrap_err());
    }

    // alpha is unchanged by scaling, and the dual reverses it.
    let l = bong(&k, &["1", "2", "8", "16"])?;
    let scaled = l.scaled(&k.from_i64(6))?;
    println!("6 * {}: alpha = {:?}", l.display(), scaled.alphas());
    println!("dual {}: alpha = {:?}", l.dual()?.display(), l.dual()?.alphas());

    // Comparing a lattice with a unary target N = <b>.
    let m = bong(&k, &["1", "1", "1"])?;
    for b in ["1", "3", "2"] {
        let n = bong(&k, &[b])?;
        println!(
            "M = {}, N = <{b}>: d[a_1 b_1] = {}, A_1 = {}",
            m.display(),
            d_bracket_cross(&m, &n, &k.one(), 1, 1)?,
            a_invariant(&m, &n, 1)?
        );
    }

    let k = DyadicField::q2_sqrt2();
    let l = GoodBongLattice::new(&k, vec![k.one(), k.uniformizer(), k.pi_pow(2)])?;
    println!("Q2(sqrt 2), {}: R = {:?}, alpha = {:?}", l.display(), l.orders(), l.alphas());
    Ok(())
}
