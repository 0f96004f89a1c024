//! Theorem route vs lemma route vs residue oracle, over an exhaustive box of
//! Q2 lattices and a seeded random sample over the two quadratic extensions.
//!
//! Run with `cargo run --release --example sweep`.

use std::time::Instant;

use dyadic_lattice::sweep::{run_sweep, SweepConfig, SweepMode};
use dyadic_lattice::DyadicField;

fn main() -> dyadic_lattice::Result<()> {
    let q2 = DyadicField::q2();
    let mut cfg = SweepConfig::new(&q2)?;
    cfg.max_rank = 4;
    let t = Instant::now();
    let r = run_sweep(&cfg)?;
    println!(
        "Q2 exhaustive, m in 2..=4, R in [-2, 2]: {} candidates, {} valid, {} universal, {} mismatches ({:.1?})",
        r.total,
        r.valid,
        r.universal_count,
        r.mismatches.len(),
        t.elapsed()
    );

    for (name, k) in [("Q2(sqrt 2)", DyadicField::q2_sqrt2()), ("Q4", DyadicField::q4())] {
        let mut cfg = SweepConfig::new(&k)?;
        cfg.min_rank = 2;
        cfg.max_rank = 5;
        cfg.min_order = -2 * k.e() as i64;
        cfg.max_order = 2 * k.e() as i64 + 2;
        cfg.first_order = Some(0);
        cfg.seed = 1234;
        cfg.mode = SweepMode::Random { count: 500 };
        let t = Instant::now();
        let r = run_sweep(&cfg)?;
        println!(
            "{name} random(500) with R1 = 0, seed 1234: {} drawn, {} universal, {} mismatches ({:.1?})",
            r.total,
            r.universal_count,
            r.mismatches.len(),
            t.elapsed()
        );
        println!("  decisive clauses: {:?}", r.theorem_clauses);
        for m in r.mismatches.iter().take(5) {
            println!("  {}", serde_json::to_string(m).unwrap());
        }
    }
    Ok(())
}
