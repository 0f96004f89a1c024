//! From a good BONG to an explicit Gram matrix, and the norm, scale and
//! determinant read off it.

use dyadic_lattice::lattice::{bong_to_gram, bong_to_gram_with, gram_invariants, ShiftChoice};
use dyadic_lattice::oracle::{value_set, DEFAULT_BUDGET};
use dyadic_lattice::{DyadicField, GoodBongLattice};

fn main() -> dyadic_lattice::Result<()> {
    let k = DyadicField::q2();
    let sc = k.square_classes()?;
    for xs in [&["1", "-1/4"][..], &["1", "2"], &["2", "-1/2"], &["1", "3/4", "2"]] {
        let a = xs.iter().map(|s| k.parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
        let l = GoodBongLattice::new(&k, a)?;
        let g = bong_to_gram(&l)?;
        let inv = gram_invariants(&g)?;
        println!(
            "{} -> {}: norm ord {}, scale ord {}, det class {}",
            l.display(),
            g.to_json(),
            inv.norm_ord,
            inv.scale_ord,
            k.display(sc.rep(inv.det_class))
        );
    }

    // Different admissible shifts give different bases of the same lattice.
    let k = DyadicField::q2_sqrt2();
    let l = GoodBongLattice::new(&k, vec![k.one(), k.shift(&k.from_i64(-1), -2)])?;
    let first = bong_to_gram_with(&l, ShiftChoice::First)?;
    let last = bong_to_gram_with(&l, ShiftChoice::Last)?;
    println!("{}: first shift {}, last shift {}", l.display(), first.to_json(), last.to_json());
    let same = value_set(&first, 5, DEFAULT_BUDGET)? == value_set(&last, 5, DEFAULT_BUDGET)?;
    println!("same values mod pi^5: {same}");
    Ok(())
}
