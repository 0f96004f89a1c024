//! The classification theorem as an isometry test, checked against value
//! sets of the Gram matrices.

use dyadic_lattice::bong::lattices_isometric;
use dyadic_lattice::lattice::bong_to_gram;
use dyadic_lattice::oracle::{value_set, DEFAULT_BUDGET};
use dyadic_lattice::{DyadicField, GoodBongLattice};

fn main() -> dyadic_lattice::Result<()> {
    let k = DyadicField::q2();
    let bong = |xs: &[i64]| GoodBongLattice::new(&k, xs.iter().map(|&n| k.from_i64(n)).collect());
    let pairs = [
        ([1, 1], [5, 5]),
        ([1, 1], [3, 3]),
        ([1, 3], [5, 7]),
        ([1, 2], [3, 6]),
        ([1, 2], [1, 6]),
    ];
    let digits = 2 * k.e() + 3;
    for (x, y) in pairs {
        let (l, m) = (bong(&x)?, bong(&y)?);
        let iso = lattices_isometric(&l, &m)?;
        let vl = value_set(&bong_to_gram(&l)?, digits, DEFAULT_BUDGET)?;
        let vm = value_set(&bong_to_gram(&m)?, digits, DEFAULT_BUDGET)?;
        println!(
            "{} ~ {}: {iso}; same values mod pi^{digits}: {}",
            l.display(),
            m.display(),
            vl == vm
        );
    }
    Ok(())
}
