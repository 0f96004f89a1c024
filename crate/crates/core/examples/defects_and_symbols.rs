//! Quadratic defects, the unit Delta = 1 - 4 rho, square classes and the
//! Hilbert symbol table of each test field.

use dyadic_lattice::oracle::oracle_defect;
use dyadic_lattice::symbols::{find_delta, quadratic_defect, square_class_reps};
use dyadic_lattice::DyadicField;

fn main() -> dyadic_lattice::Result<()> {
    for (name, k) in [
        ("Q2", DyadicField::q2()),
        ("Q2(sqrt 2)", DyadicField::q2_sqrt2()),
        ("Q4", DyadicField::q4()),
    ] {
        let sc = k.square_classes()?;
        let (rho, delta) = find_delta(&k)?;
        println!(
            "{name}: {} square classes, rho = {}, Delta = {}, d(Delta) = {}",
            sc.len(),
            k.display(&rho),
            k.display(&delta),
            quadratic_defect(&k, &delta)?
        );

        let reps = square_class_reps(&k, &[0, 1])?;
        let line: Vec<String> = reps
            .iter()
            .map(|a| format!("d({}) = {}", k.display(a), quadratic_defect(&k, a).unwrap()))
            .collect();
        println!("  {}", line.join(", "));
        let agree = reps
            .iter()
            .all(|a| quadratic_defect(&k, a).unwrap() == oracle_defect(&k, a).unwrap());
        println!("  defect algorithm matches brute force: {agree}");

        if k.e() == 1 && k.f() == 1 {
            println!("  Hilbert symbols (a, b):");
            for x in sc.all() {
                let row: Vec<String> = sc.all().map(|y| format!("{:>2}", sc.hilbert(x, y))).collect();
                println!("  {:>3} | {}", k.display(sc.rep(x)), row.join(" "));
            }
        }
    }
    Ok(())
}
