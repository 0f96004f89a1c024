//! Ground truth by exhaustive residue enumeration.
//!
//! Every search runs modulo `pi^m` for a bound `m` produced by one of the
//! [`SearchBound`] constructors, which also record why `m` digits suffice.
//! Sets of residues are bitsets over packed keys; sums of independent value
//! sets are formed as sumsets rather than by enumerating the product space.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{DyadicField, FieldElement, Int, Packing};
use crate::lattice::GramLattice;
use crate::symbols::{square_class_reps, Defect, DiagonalSpace};

/// Default cap on the number of enumerated states per search.
pub const DEFAULT_BUDGET: u128 = 1 << 32;

/// Largest residue ring whose bitset the oracle will allocate.
const MAX_SET_BITS: u32 = 30;

/// Number of digits a search runs at, with the reason it is enough.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBound {
    pub digits: u32,
    pub derivation: &'static str,
}

impl SearchBound {
    /// `1 + pi^{2e+1} O` consists of squares (Local Square Theorem), so the
    /// defect of a unit is decided by its residue modulo `pi^{2e+1}`.
    pub fn defect(k: &DyadicField) -> Result<SearchBound> {
        Self {
            digits: 2 * k.e() + 1,
            derivation: "local square theorem: 1 + pi^(2e+1) O lies in the squares",
        }
        .checked(k)
    }

    /// Coefficients normalized to orders `0 .. s`. A primitive `x` has a unit
    /// coordinate `x_i`; along it `dQ/dx_i = 2 a_i x_i` has order at most
    /// `e + s`, and Newton's lemma lifts any `x` with
    /// `ord Q(x) > 2(e + s)` to an exact zero.
    pub fn isotropy(k: &DyadicField, spread: u32) -> Result<SearchBound> {
        Self {
            digits: 2 * (k.e() + spread) + 1,
            derivation: "newton lifting: ord Q(x) > 2 ord(2 a_i x_i) at a unit coordinate",
        }
        .checked(k)
    }

    /// `Q(x) ≡ b (mod pi^{ord b + 2e + 1})` makes `Q(x)/b ≡ 1 (mod pi^{2e+1})`
    /// a square `u^2`, and then `Q(x/u) = b`. Reduction modulo `pi^m` is well
    /// defined because `2 s(L) ⊆ n(L) ⊆ O`.
    pub fn representation(k: &DyadicField, ord_b: u32) -> Result<SearchBound> {
        Self {
            digits: ord_b + 2 * k.e() + 1,
            derivation: "local square theorem applied to Q(x)/b",
        }
        .checked(k)
    }

    fn checked(self, k: &DyadicField) -> Result<SearchBound> {
        if self.digits > k.precision() {
            return Err(Error::PrecisionTooSmall {
                needed: self.digits,
                have: k.precision(),
            });
        }
        Ok(self)
    }
}

/// A set of residues modulo `pi^m`.
#[derive(Clone, Debug)]
pub struct ValueSet {
    packing: Packing,
    bits: Vec<u64>,
}

impl PartialEq for ValueSet {
    fn eq(&self, other: &Self) -> bool {
        self.packing.digits() == other.packing.digits() && self.bits == other.bits
    }
}

impl Eq for ValueSet {}

impl ValueSet {
    fn empty(packing: &Packing) -> ValueSet {
        let words = (packing.size() as usize).div_ceil(64);
        ValueSet {
            packing: packing.clone(),
            bits: vec![0; words],
        }
    }

    fn singleton_zero(packing: &Packing) -> ValueSet {
        let mut s = Self::empty(packing);
        s.insert(0);
        s
    }

    #[inline]
    fn insert(&mut self, key: u64) {
        self.bits[(key >> 6) as usize] |= 1u64 << (key & 63);
    }

    #[inline]
    pub fn contains_key(&self, key: u64) -> bool {
        self.bits[(key >> 6) as usize] >> (key & 63) & 1 == 1
    }

    fn union_with(&mut self, other: &ValueSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    fn keys(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                Some(((w as u64) << 6) | bit)
            })
        })
    }

    pub fn digits(&self) -> u32 {
        self.packing.digits()
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether the residue of the integral element `b` lies in the set.
    pub fn contains(&self, k: &DyadicField, b: &FieldElement) -> Result<bool> {
        let key = self.packing.pack(&k.integral_residue(b, self.digits())?);
        Ok(self.contains_key(key))
    }

    /// `{x + y}` over all pairs.
    fn sumset(&self, other: &ValueSet) -> ValueSet {
        let ys: Vec<u64> = other.keys().collect();
        let mut out = Self::empty(&self.packing);
        for x in self.keys() {
            for &y in &ys {
                out.insert(self.packing.add(x, y));
            }
        }
        out
    }
}

fn budget_check(states: u128, budget: u128) -> Result<()> {
    if states > budget {
        return Err(Error::BudgetExceeded { states, budget });
    }
    Ok(())
}

fn set_packing(k: &DyadicField, digits: u32) -> Result<Packing> {
    let bits = k.f() * digits;
    if bits > MAX_SET_BITS {
        return Err(Error::BudgetExceeded {
            states: 1u128 << bits.min(127),
            budget: 1u128 << MAX_SET_BITS,
        });
    }
    Packing::new(k.tower(), digits)
}

/// `d(a)` by maximizing `ord(eps - x^2)` over unit residues `x`.
pub fn oracle_defect(k: &DyadicField, a: &FieldElement) -> Result<Defect> {
    let v = a.ord().ok_or(Error::ZeroArgument)?;
    if v.rem_euclid(2) == 1 {
        return Ok(Defect::Finite(0));
    }
    let bound = SearchBound::defect(k)?;
    let m = bound.digits;
    let t = k.tower();
    let packing = Packing::new(t, m)?;
    let eps = k.unit_residue(a, m)?;
    let best = (0..packing.size())
        .filter(|&x| packing.is_unit(x))
        .map(|x| {
            let x = packing.unpack(x);
            let diff = t.truncate(&t.sub(&eps, &t.square(&x)), m);
            t.ord(&diff).unwrap_or(m)
        })
        .max()
        .unwrap_or(0);
    Ok(if best >= m {
        Defect::Infinite
    } else {
        Defect::Finite(best)
    })
}

/// `{c x^2}` and `{c x^2 : x a unit}` modulo `pi^m`.
fn square_multiples(k: &DyadicField, packing: &Packing, c: &Int) -> (ValueSet, ValueSet) {
    let t = k.tower();
    let m = packing.digits();
    let mut all = ValueSet::empty(packing);
    let mut units = ValueSet::empty(packing);
    for x in 0..packing.size() {
        let xi = packing.unpack(x);
        let key = packing.pack(&t.truncate(&t.mul(c, &t.square(&xi)), m));
        all.insert(key);
        if packing.is_unit(x) {
            units.insert(key);
        }
    }
    (all, units)
}

/// Isotropy of `[a_1, ..., a_n]` by a primitive-zero search.
///
/// Orders are reduced modulo 2 (scaling a coefficient by `pi^2` is a change of
/// variable) and, if every order is then `1`, all are divided by `pi`; the
/// spread is then at most `1`. The space is isotropic iff for some `i`,
/// `0 ∈ {a_i x^2 : x unit} + sum_{j≠i} {a_j x^2}` modulo `pi^m`.
pub(crate) fn isotropic_brute(k: &DyadicField, coeffs: &[FieldElement]) -> Result<bool> {
    if coeffs.iter().any(FieldElement::is_zero) {
        return Err(Error::DegenerateSpace);
    }
    if coeffs.len() < 2 {
        return Ok(false);
    }
    let mut scaled: Vec<FieldElement> = coeffs
        .iter()
        .map(|a| {
            let v = a.ord().expect("nonzero");
            k.shift(a, -2 * v.div_euclid(2))
        })
        .collect();
    if scaled.iter().all(|a| a.ord() == Some(1)) {
        scaled = scaled.iter().map(|a| k.shift(a, -1)).collect();
    }
    let spread = scaled.iter().filter_map(FieldElement::ord).max().unwrap_or(0) as u32;
    let bound = SearchBound::isotropy(k, spread)?;
    let packing = set_packing(k, bound.digits)?;
    let t = k.tower();

    let sets: Vec<(ValueSet, ValueSet)> = scaled
        .iter()
        .map(|a| Ok(square_multiples(k, &packing, &k.integral_residue(a, bound.digits)?)))
        .collect::<Result<_>>()?;
    let n = sets.len();
    for i in 0..n {
        let mut acc = ValueSet::singleton_zero(&packing);
        for (j, (all, _)) in sets.iter().enumerate() {
            if j != i {
                acc = acc.sumset(all);
            }
        }
        let hit = sets[i].1.keys().any(|u| {
            let neg = packing.pack(&t.truncate(&t.neg(&packing.unpack(u)), bound.digits));
            acc.contains_key(neg)
        });
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Isotropy by enumeration, for any dimension.
pub fn oracle_isotropic(space: &DiagonalSpace) -> Result<bool> {
    isotropic_brute(space.field(), space.coeffs())
}

/// The polynomial coefficients of `Q` modulo `pi^m`: `G_ii` on the diagonal
/// and `2 G_ij` off it.
fn integral_coefficients(g: &GramLattice, digits: u32) -> Result<Vec<Vec<Int>>> {
    let k = g.field();
    let n = g.rank();
    let two = k.from_i64(2);
    if let Some(v) = g.norm_ord() {
        if v < 0 {
            return Err(Error::NonIntegralLattice(v));
        }
    }
    let mut c = vec![vec![Int::ZERO; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = if i == j {
                g.entry(i, i).clone()
            } else {
                k.mul(&two, g.entry(i, j))
            };
            c[i][j] = k.integral_residue(&x, digits)?;
        }
    }
    Ok(c)
}

/// Connected components of the coupling graph `c_ij ≠ 0`.
fn components(c: &[Vec<Int>]) -> Vec<Vec<usize>> {
    let n = c.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if c[i][j] != Int::ZERO {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if index[r] == usize::MAX {
            index[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[index[r]].push(i);
    }
    groups
}

/// Values of one coupled block, by odometer over `(O/pi^m)^rank`, split
/// across threads on the first coordinate.
fn block_values(
    k: &DyadicField,
    packing: &Packing,
    c: &[Vec<Int>],
    block: &[usize],
    budget: u128,
) -> Result<ValueSet> {
    let t = k.tower();
    let m = packing.digits();
    let size = packing.size();
    let r = block.len();
    let states = (size as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    budget_check(states, budget)?;
    if r == 1 {
        let i = block[0];
        return Ok(square_multiples(k, packing, &c[i][i]).0);
    }
    let xs: Vec<Int> = (0..size).map(|x| packing.unpack(x)).collect();
    // diag[p][x] = c_pp x^2
    let diag: Vec<Vec<Int>> = block
        .iter()
        .map(|&i| xs.iter().map(|x| t.truncate(&t.mul(&c[i][i], &t.square(x)), m)).collect())
        .collect();
    let coupling = |p: usize, q: usize| -> &Int {
        let (i, j) = (block[p].min(block[q]), block[p].max(block[q]));
        &c[i][j]
    };
    let partial: Vec<ValueSet> = (0..size)
        .into_par_iter()
        .map(|x0| {
            let mut out = ValueSet::empty(packing);
            let mut digits = vec![0u64; r];
            digits[0] = x0;
            loop {
                let mut q = Int::ZERO;
                for p in 0..r {
                    q = t.add(&q, &diag[p][digits[p] as usize]);
                    for s in p + 1..r {
                        let cpq = coupling(p, s);
                        if *cpq != Int::ZERO {
                            let xy = t.mul(&xs[digits[p] as usize], &xs[digits[s] as usize]);
                            q = t.add(&q, &t.mul(cpq, &xy));
                        }
                    }
                }
                out.insert(packing.pack(&t.truncate(&q, m)));
                // advance coordinates 1..r
                let mut p = 1;
                while p < r {
                    digits[p] += 1;
                    if digits[p] < size {
                        break;
                    }
                    digits[p] = 0;
                    p += 1;
                }
                if p == r {
                    break;
                }
            }
            out
        })
        .collect();
    let mut acc = ValueSet::empty(packing);
    for s in &partial {
        acc.union_with(s);
    }
    Ok(acc)
}

/// `Q(L)` modulo `pi^digits` for an integral lattice.
pub fn value_set(g: &GramLattice, digits: u32, budget: u128) -> Result<ValueSet> {
    let k = g.field();
    if digits > k.precision() {
        return Err(Error::PrecisionTooSmall {
            needed: digits,
            have: k.precision(),
        });
    }
    let packing = set_packing(k, digits)?;
    let c = integral_coefficients(g, digits)?;
    let mut acc = ValueSet::singleton_zero(&packing);
    for block in components(&c) {
        let vals = block_values(k, &packing, &c, &block, budget)?;
        budget_check(acc.len() as u128 * vals.len() as u128, budget)?;
        acc = acc.sumset(&vals);
    }
    Ok(acc)
}

pub fn oracle_represents(g: &GramLattice, b: &FieldElement) -> Result<bool> {
    oracle_represents_with_budget(g, b, DEFAULT_BUDGET)
}

pub fn oracle_represents_with_budget(
    g: &GramLattice,
    b: &FieldElement,
    budget: u128,
) -> Result<bool> {
    let v = b.ord().ok_or(Error::ZeroArgument)?;
    let k = g.field();
    if v < 0 {
        integral_coefficients(g, 0)?;
        return Ok(false);
    }
    let bound = SearchBound::representation(k, v as u32)?;
    value_set(g, bound.digits, budget)?.contains(k, b)
}

/// Outcome of the universality oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalReport {
    pub universal: bool,
    /// Square-class representatives of order `0` or `1` that are not values.
    pub missing: Vec<FieldElement>,
}

pub fn oracle_universal(g: &GramLattice) -> Result<UniversalReport> {
    oracle_universal_with_budget(g, DEFAULT_BUDGET)
}

/// An integral lattice is universal iff it represents every element of
/// order `0` and `1`, i.e. every square class of those orders.
pub fn oracle_universal_with_budget(g: &GramLattice, budget: u128) -> Result<UniversalReport> {
    let k = g.field();
    let mut missing = Vec::new();
    for order in [0u32, 1] {
        let bound = SearchBound::representation(k, order)?;
        let values = value_set(g, bound.digits, budget)?;
        for b in square_class_reps(k, &[order as i64])? {
            if !values.contains(k, &b)? {
                missing.push(b);
            }
        }
    }
    Ok(UniversalReport {
        universal: missing.is_empty(),
        missing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        let k = DyadicField::q2_sqrt2();
        assert_eq!(SearchBound::defect(&k).unwrap().digits, 5);
        assert_eq!(SearchBound::isotropy(&k, 1).unwrap().digits, 7);
        assert_eq!(SearchBound::representation(&k, 1).unwrap().digits, 6);
    }

    #[test]
    fn small_isotropy() {
        let k = DyadicField::q2();
        let iso = |v: &[i64]| {
            let c: Vec<_> = v.iter().map(|&n| k.from_i64(n)).collect();
            isotropic_brute(&k, &c).unwrap()
        };
        assert!(iso(&[1, -1]));
        assert!(!iso(&[1, 1, 1]));
        assert!(!iso(&[1, 1, 1, 1]));
        assert!(iso(&[1, 1, 1, 7]));
        assert!(iso(&[1, 1, 1, 1, 1]));
    }
}
