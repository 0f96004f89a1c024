//! Batch comparison of the two deciders with the residue oracle over boxes
//! of candidate BONGs `≺u_1 pi^{R_1}, ..., u_m pi^{R_m}≻`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::bong::GoodBongLattice;
use crate::error::{Error, Result};
use crate::field::{enumerate_residues, DyadicField, FieldElement};
use crate::lattice::bong_to_gram;
use crate::oracle::{oracle_universal_with_budget, DEFAULT_BUDGET};
use crate::symbols::square_class_reps;
use crate::universality::{decide_universal_lemma, decide_universal_thm, UniversalityVerdict};

/// Verdicts of the theorem route, the lemma route and the oracle on one lattice.
#[derive(Clone, Debug)]
pub struct Agreement {
    pub theorem: UniversalityVerdict,
    pub lemma: UniversalityVerdict,
    /// `None` when the oracle was not run.
    pub oracle: Option<bool>,
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        let t = self.theorem.universal;
        t == self.lemma.universal && self.oracle.map_or(true, |o| o == t)
    }
}

/// Runs both deciders and, if asked, the oracle on `bong_to_gram(l)`.
///
/// The oracle refuses non-integral lattices; such a lattice has a value of
/// negative order, so it counts as not universal here.
pub fn three_way(l: &GoodBongLattice, with_oracle: bool, budget: u128) -> Result<Agreement> {
    let theorem = decide_universal_thm(l);
    let lemma = decide_universal_lemma(l);
    let oracle = if with_oracle {
        let g = bong_to_gram(l)?;
        Some(match oracle_universal_with_budget(&g, budget) {
            Ok(r) => r.universal,
            Err(Error::NonIntegralLattice(_)) => false,
            Err(e) => return Err(e),
        })
    } else {
        None
    };
    Ok(Agreement {
        theorem,
        lemma,
        oracle,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Every candidate in the box once.
    Exhaustive,
    /// This many valid lattices drawn by rejection sampling.
    Random { count: usize },
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub field: DyadicField,
    pub min_rank: usize,
    pub max_rank: usize,
    pub min_order: i64,
    pub max_order: i64,
    /// Units for the exhaustive box. Defaults to the unit square-class
    /// representatives. Random mode draws units mod `pi^(2e+1)` instead.
    pub units: Vec<FieldElement>,
    /// Pins `R_1`; universal lattices all have `R_1 = 0`.
    pub first_order: Option<i64>,
    pub seed: u64,
    pub mode: SweepMode,
    pub budget: u128,
    pub oracle: bool,
}

impl SweepConfig {
    pub fn new(field: &DyadicField) -> Result<SweepConfig> {
        Ok(SweepConfig {
            units: square_class_reps(field, &[0])?,
            field: field.clone(),
            first_order: None,
            min_rank: 2,
            max_rank: 3,
            min_order: -2,
            max_order: 2,
            seed: 0,
            mode: SweepMode::Exhaustive,
            budget: DEFAULT_BUDGET,
            oracle: true,
        })
    }
}

/// A lattice on which the three verdicts differ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub bong: String,
    pub entries: Vec<Value>,
    pub theorem: bool,
    pub theorem_clause: String,
    pub lemma: bool,
    pub lemma_clause: String,
    pub oracle: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    /// Candidates generated (attempts, in random mode).
    pub total: u64,
    /// Candidates that are good BONGs.
    pub valid: u64,
    pub rejected: u64,
    pub universal_count: u64,
    /// Decisive theorem-route clause, with its outcome, per lattice.
    pub theorem_clauses: BTreeMap<String, u64>,
    pub mismatches: Vec<Mismatch>,
}

fn candidate(k: &DyadicField, orders: &[i64], units: &[&FieldElement]) -> Vec<FieldElement> {
    orders.iter().zip(units).map(|(&r, u)| k.shift(u, r)).collect()
}

fn exhaustive_candidates(cfg: &SweepConfig) -> Vec<Vec<FieldElement>> {
    let k = &cfg.field;
    let width = (cfg.max_order - cfg.min_order + 1).max(0) as usize;
    let nu = cfg.units.len();
    let mut out = Vec::new();
    if width == 0 || nu == 0 {
        return out;
    }
    for m in cfg.min_rank..=cfg.max_rank {
        let count = (width * nu).pow(m as u32);
        for mut idx in 0..count {
            let mut orders = Vec::with_capacity(m);
            let mut units = Vec::with_capacity(m);
            for _ in 0..m {
                let d = idx % (width * nu);
                idx /= width * nu;
                orders.push(cfg.min_order + (d / nu) as i64);
                units.push(&cfg.units[d % nu]);
            }
            if cfg.first_order.map_or(true, |r| r == orders[0]) {
                out.push(candidate(k, &orders, &units));
            }
        }
    }
    out
}

/// Draws candidates until `count` are valid, or gives up after
/// `1000 * count` attempts (an infeasible box).
fn random_candidates(cfg: &SweepConfig, count: usize) -> Result<(u64, Vec<GoodBongLattice>)> {
    let k = &cfg.field;
    let units: Vec<FieldElement> = enumerate_residues(k, 2 * k.e() + 1, true)?.collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut attempts = 0u64;
    let mut out = Vec::with_capacity(count);
    let limit = 1000 * count as u64;
    if cfg.min_rank > cfg.max_rank || cfg.min_order > cfg.max_order || units.is_empty() {
        return Ok((0, out));
    }
    while out.len() < count && attempts < limit {
        attempts += 1;
        let m = rng.gen_range(cfg.min_rank..=cfg.max_rank);
        let mut orders: Vec<i64> = (0..m).map(|_| rng.gen_range(cfg.min_order..=cfg.max_order)).collect();
        if let Some(r) = cfg.first_order {
            orders[0] = r;
        }
        let us: Vec<&FieldElement> = (0..m).map(|_| &units[rng.gen_range(0..units.len())]).collect();
        if let Ok(l) = GoodBongLattice::new(k, candidate(k, &orders, &us)) {
            out.push(l);
        }
    }
    Ok((attempts, out))
}

fn clause_of(v: &UniversalityVerdict) -> String {
    v.trace.clause.label().to_string()
}

/// Runs the sweep. The report depends only on the configuration.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let k = &cfg.field;
    let (total, lattices) = match cfg.mode {
        SweepMode::Exhaustive => {
            let cands = exhaustive_candidates(cfg);
            let total = cands.len() as u64;
            let ls: Vec<GoodBongLattice> = cands
                .into_par_iter()
                .filter_map(|a| GoodBongLattice::new(k, a).ok())
                .collect();
            (total, ls)
        }
        SweepMode::Random { count } => random_candidates(cfg, count)?,
    };
    let results: Vec<Agreement> = lattices
        .par_iter()
        .map(|l| three_way(l, cfg.oracle, cfg.budget))
        .collect::<Result<_>>()?;
    let mut report = SweepReport {
        total,
        valid: lattices.len() as u64,
        rejected: total - lattices.len() as u64,
        universal_count: 0,
        theorem_clauses: BTreeMap::new(),
        mismatches: Vec::new(),
    };
    for (l, r) in lattices.iter().zip(&results) {
        if r.theorem.universal {
            report.universal_count += 1;
        }
        let outcome = if r.theorem.universal { "pass" } else { "fail" };
        *report
            .theorem_clauses
            .entry(format!("{} {outcome}", clause_of(&r.theorem)))
            .or_default() += 1;
        if !r.agrees() {
            report.mismatches.push(Mismatch {
                bong: l.display(),
                entries: l.entries().iter().map(|x| k.element_to_json(x)).collect(),
                theorem: r.theorem.universal,
                theorem_clause: clause_of(&r.theorem),
                lemma: r.lemma.universal,
                lemma_clause: clause_of(&r.lemma),
                oracle: r.oracle,
            });
        }
    }
    Ok(report)
}
