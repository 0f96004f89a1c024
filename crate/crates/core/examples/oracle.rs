//! The brute-force oracle: isotropy, representation and universality by
//! exhaustive enumeration of residues modulo certified lifting bounds.

use dyadic_lattice::oracle::{oracle_isotropic, oracle_represents, oracle_universal, value_set, SearchBound, DEFAULT_BUDGET};
use dyadic_lattice::{DiagonalSpace, DyadicField, GramLattice};

fn main() -> dyadic_lattice::Result<()> {
    let k = DyadicField::q2();
    let ints = |v: &[i64]| v.iter().map(|&n| k.from_i64(n)).collect::<Vec<_>>();

    for v in [&[1, -1][..], &[1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1, 1]] {
        let s = DiagonalSpace::new(&k, ints(v))?;
        println!("{v:?} isotropic: {}", oracle_isotropic(&s)?);
    }

    let b = SearchBound::representation(&k, 0)?;
    println!("units are decided mod pi^{} ({})", b.digits, b.derivation);

    let g = GramLattice::diagonal(&k, ints(&[1, 2]))?;
    for t in [3, 7] {
        println!("x^2 + 2y^2 represents {t}: {}", oracle_represents(&g, &k.from_i64(t))?);
    }
    let vals = value_set(&g, 3, DEFAULT_BUDGET)?;
    println!("x^2 + 2y^2 mod 8 takes {} values", vals.len());

    let hyperbolic = GramLattice::new(
        &k,
        vec![vec![k.one(), k.from_rational(1, 2)?], vec![k.from_rational(1, 2)?, k.zero()]],
    )?;
    for (name, g) in [
        ("[[1,1/2],[1/2,0]]", hyperbolic),
        ("diag(1,1,1)", GramLattice::diagonal(&k, ints(&[1, 1, 1]))?),
        ("diag(1,2,8,16)", GramLattice::diagonal(&k, ints(&[1, 2, 8, 16]))?),
        ("diag(1,1,1,1)", GramLattice::diagonal(&k, ints(&[1, 1, 1, 1]))?),
    ] {
        let r = oracle_universal(&g)?;
        let missing: Vec<String> = r.missing.iter().map(|x| k.display(x)).collect();
        println!("{name}: universal {}, missing {missing:?}", r.universal);
    }
    Ok(())
}
