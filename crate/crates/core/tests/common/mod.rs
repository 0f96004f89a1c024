#![allow(dead_code)]

use dyadic_lattice::bong::{d_bracket_cross, GoodBongLattice, HalfInt};
use dyadic_lattice::field::enumerate_residues;
use dyadic_lattice::{DyadicField, FieldElement};
use rand::Rng;
use std::sync::OnceLock;

/// The three test fields. Handles are shared so their class tables are
/// built once per test binary.
pub fn fields() -> Vec<(&'static str, DyadicField)> {
    static FIELDS: OnceLock<Vec<(&'static str, DyadicField)>> = OnceLock::new();
    FIELDS
        .get_or_init(|| {
            vec![
                ("Q2", DyadicField::q2()),
                ("Q2sqrt2", DyadicField::q2_sqrt2()),
                ("Q4", DyadicField::q4()),
            ]
        })
        .clone()
}

pub fn el(k: &DyadicField, s: &str) -> FieldElement {
    k.parse_rational(s).unwrap()
}

pub fn bong(k: &DyadicField, xs: &[&str]) -> GoodBongLattice {
    GoodBongLattice::new(k, xs.iter().map(|s| el(k, s)).collect()).unwrap()
}

pub fn units(k: &DyadicField) -> Vec<FieldElement> {
    enumerate_residues(k, 2 * k.e() + 1, true).unwrap().collect()
}

/// Orders stay inside `[-LIMIT, LIMIT]`, the range the default precision
/// of the library constructors covers.
const LIMIT: i64 = 12;

/// A random good BONG grown one entry at a time. Each new entry has
/// `R_{i+1} >= max(R_i - 2e, R_{i-1})` and a random unit; entries that break
/// admissibility are redrawn.
pub fn random_bong<R: Rng>(
    k: &DyadicField,
    us: &[FieldElement],
    rng: &mut R,
    ranks: std::ops::RangeInclusive<usize>,
    first: Option<i64>,
) -> GoodBongLattice {
    let e = k.e() as i64;
    'outer: loop {
        let m = rng.gen_range(ranks.clone());
        let r1 = first.unwrap_or_else(|| rng.gen_range(-3..=3));
        let mut a = vec![k.shift(&us[rng.gen_range(0..us.len())], r1)];
        let mut r = vec![r1];
        while a.len() < m {
            let last = *r.last().unwrap();
            let mut lo = last - 2 * e;
            if r.len() >= 2 {
                lo = lo.max(r[r.len() - 2]);
            }
            let hi = (last + 2 * e + 3).min(LIMIT);
            if lo.max(-LIMIT) > hi {
                continue 'outer;
            }
            let mut placed = false;
            for _ in 0..50 {
                let ri = rng.gen_range(lo.max(-LIMIT)..=hi);
                let mut cand = a.clone();
                cand.push(k.shift(&us[rng.gen_range(0..us.len())], ri));
                if GoodBongLattice::new(k, cand.clone()).is_ok() {
                    a = cand;
                    r.push(ri);
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'outer;
            }
        }
        return GoodBongLattice::new(k, a).unwrap();
    }
}

fn h(n: i64) -> HalfInt {
    HalfInt::int(n)
}

fn half(twice: i64) -> HalfInt {
    HalfInt::halves(twice)
}

/// Checks the listed properties of the `alpha_i` of `l`, with `c` a scaling
/// factor for the scale-invariance check. Returns one line per violation.
pub fn alpha_violations(l: &GoodBongLattice, c: &FieldElement) -> Vec<String> {
    let k = l.field();
    let e = k.e() as i64;
    let m = l.rank();
    let mut bad = Vec::new();
    let mut fail = |what: &str, i: usize| bad.push(format!("{} {what} at i={i}", l.display()));
    let minus_one = k.from_i64(-1);
    let two_e = h(2 * e);
    for i in 1..m {
        let a = l.alpha(i);
        let diff = l.big_r(i + 1) - l.big_r(i);
        let closed = half(diff + 2 * e);
        if i + 1 < m {
            if !(h(l.big_r(i)) + a <= h(l.big_r(i + 1)) + l.alpha(i + 1)) {
                fail("(1) R_i + alpha_i not nondecreasing", i);
            }
            if !(a - l.big_r(i + 1) >= l.alpha(i + 1) - l.big_r(i + 2)) {
                fail("(1) -R_(i+1) + alpha_i not nonincreasing", i);
            }
        }
        if a < h(0) || ((a == h(0)) != (diff == -2 * e)) {
            fail("(2)", i);
        }
        if diff <= 2 * e {
            if a < h(diff) {
                fail("(3) alpha_i < R_(i+1) - R_i", i);
            }
            if (a == h(diff)) != (diff == 2 * e || diff.rem_euclid(2) == 1) {
                fail("(3) equality case", i);
            }
        }
        if ([-2 * e, 2 - 2 * e, 2 * e - 2].contains(&diff) || diff >= 2 * e) && a != closed {
            fail("(4)", i);
        }
        if a.cmp(&two_e) != diff.cmp(&(2 * e)) {
            fail("(5)", i);
        }
        if a != closed && !(a.is_integer() && a.as_int().unwrap().rem_euclid(2) == 1) {
            fail("(6)", i);
        }
        if !a.is_integer() && !(diff.rem_euclid(2) == 1 && diff > 2 * e) {
            fail("(7)", i);
        }
        let in_range = if a <= two_e { a.is_integer() && a >= h(0) } else { !a.is_inf() };
        if !in_range {
            fail("(8)", i);
        }
        let pair = l.square_classes().product([l.class(i), l.class(i + 1), square_class_of(l, &minus_one)]);
        let mut rec = closed.min(l.d(pair) + diff);
        if i > 1 {
            rec = rec.min(l.alpha(i - 1) + diff);
        }
        if i + 1 < m {
            rec = rec.min(l.alpha(i + 1) + diff);
        }
        if rec != a {
            fail("(9) recursion", i);
        }
        let db = l.d_bracket_interval(&minus_one, i, i + 1).unwrap();
        if closed.min(db + diff) != a {
            fail("compact formula", i);
        }
        // What alpha_i = 0 and alpha_i = 1 force on d[-a_{i,i+1}].
        if a == h(0) && db < two_e {
            fail("alpha=0 bracket bound", i);
        }
        if a == h(1) {
            if !(-2 * e < diff && diff <= 1) {
                fail("alpha=1 difference range", i);
            }
            if db < h(1 - diff) || (diff != 2 - 2 * e && db != h(1 - diff)) {
                fail("alpha=1 bracket value", i);
            }
        }
        if (diff == 2 - 2 * e || diff == 1) && a != h(1) {
            fail("alpha=1 forced", i);
        }
        if 2 - 2 * e < diff && diff <= 0 && (a == h(1)) != (db == h(1 - diff)) {
            fail("alpha=1 iff bracket", i);
        }
    }
    match l.scaled(c) {
        Ok(s) => {
            if s.alphas() != l.alphas() {
                bad.push(format!("{} (10) alphas change under scaling", l.display()));
            }
        }
        Err(err) => bad.push(format!("{} (10) scaling rejected: {err}", l.display())),
    }
    match l.dual() {
        Ok(d) => {
            for i in 1..=m {
                if d.big_r(i) != -l.big_r(m + 1 - i) {
                    bad.push(format!("{} (11) R of dual at i={i}", l.display()));
                }
            }
            for i in 1..m {
                if d.alpha(i) != l.alpha(m - i) {
                    bad.push(format!("{} (11) alpha of dual at i={i}", l.display()));
                }
            }
        }
        Err(err) => bad.push(format!("{} (11) dual rejected: {err}", l.display())),
    }
    bad
}

fn square_class_of(l: &GoodBongLattice, x: &FieldElement) -> dyadic_lattice::symbols::SquareClass {
    l.square_classes().class_of(l.field(), x).unwrap()
}

/// `d[ee' a_{1,i} c_{1,k}] >= min(d[e a_{1,i} b_{1,j}], d[e' b_{1,j} c_{1,k}])`
/// over every `i, j, k`.
pub fn domination_violations(
    a: &GoodBongLattice,
    b: &GoodBongLattice,
    c: &GoodBongLattice,
    eps: &FieldElement,
    eps2: &FieldElement,
) -> Vec<String> {
    let k = a.field();
    let prod = k.mul(eps, eps2);
    let mut bad = Vec::new();
    for i in 0..=a.rank() {
        for j in 0..=b.rank() {
            for l in 0..=c.rank() {
                let lhs = d_bracket_cross(a, c, &prod, i, l).unwrap();
                let x = d_bracket_cross(a, b, eps, i, j).unwrap();
                let y = d_bracket_cross(b, c, eps2, j, l).unwrap();
                if lhs < x.min(y) {
                    bad.push(format!(
                        "domination {} {} {} at ({i},{j},{l}): {lhs:?} < min({x:?}, {y:?})",
                        a.display(),
                        b.display(),
                        c.display()
                    ));
                }
            }
        }
    }
    bad
}

/// Unit residues mod `pi^(2e+1)` on which the defect algorithm and the
/// defect oracle disagree, plus a line if `d(Delta) != 2e`.
pub fn defect_mismatches(k: &DyadicField) -> Vec<String> {
    use dyadic_lattice::oracle::oracle_defect;
    use dyadic_lattice::symbols::{find_delta, quadratic_defect};
    let mut bad = Vec::new();
    for u in units(k) {
        let (x, y) = (quadratic_defect(k, &u).unwrap(), oracle_defect(k, &u).unwrap());
        if x != y {
            bad.push(format!("d({}) = {x} but the oracle finds {y}", k.display(&u)));
        }
    }
    let (_, delta) = find_delta(k).unwrap();
    let d = quadratic_defect(k, &delta).unwrap();
    if d != dyadic_lattice::Defect::Finite(2 * k.e()) || oracle_defect(k, &delta).unwrap() != d {
        bad.push(format!("d(Delta) = {d}"));
    }
    bad
}

/// Symmetry, bimultiplicativity, `(a, -a) = 1`, the defect bound for
/// `(a, b) = 1`, the `(a, b) = -1` witness with `d(b) = 2e - d(a)`, and the
/// class table against direct isotropy of `[a, b, -1]`.
pub fn symbol_law_violations(k: &DyadicField) -> Vec<String> {
    use dyadic_lattice::oracle::oracle_isotropic;
    use dyadic_lattice::{Defect, DiagonalSpace};
    let sc = k.square_classes().unwrap();
    let m1 = sc.minus_one(k);
    let e = k.e();
    let dv = |d: Defect| d.finite().map_or(u64::MAX / 4, u64::from);
    let classes: Vec<_> = sc.all().collect();
    let mut bad = Vec::new();
    for &a in &classes {
        if sc.hilbert(a, sc.mul(a, m1)) != 1 {
            bad.push(format!("(a,-a) != 1 for a = {}", k.display(sc.rep(a))));
        }
        for &b in &classes {
            let h = sc.hilbert(a, b);
            if h != sc.hilbert(b, a) {
                bad.push(format!("asymmetric at {} {}", a.index(), b.index()));
            }
            for &c in &classes {
                if sc.hilbert(a, sc.mul(b, c)) != h * sc.hilbert(a, c) {
                    bad.push(format!("not bimultiplicative at {} {} {}", a.index(), b.index(), c.index()));
                }
            }
            if dv(sc.defect(a)) + dv(sc.defect(b)) > 2 * e as u64 && h != 1 {
                bad.push(format!("d(a)+d(b) > 2e but (a,b) = -1 at {} {}", a.index(), b.index()));
            }
            let (ra, rb) = (sc.rep(a), sc.rep(b));
            let space = DiagonalSpace::new(k, vec![ra.clone(), rb.clone(), k.from_i64(-1)]).unwrap();
            let direct = if oracle_isotropic(&space).unwrap() { 1 } else { -1 };
            if direct != h {
                bad.push(format!("({}, {}) table {h} vs isotropy {direct}", k.display(ra), k.display(rb)));
            }
        }
        if let Defect::Finite(da) = sc.defect(a) {
            let found = classes.iter().any(|&b| {
                sc.defect(b) == Defect::Finite(2 * e - da)
                    && sc.hilbert(a, b) == -1
                    && (da == 2 * e || sc.parity(b) == 0)
            });
            if !found {
                bad.push(format!("no (a,b) = -1 witness for a = {}", k.display(sc.rep(a))));
            }
        }
    }
    bad
}

/// Fixed Q2 lattices with their expected verdict and decisive theorem
/// clause, each checked on both routes and against the oracle.
pub const PINNED: &[(&[&str], bool, &str)] = &[
    (&["1", "1", "1"], false, "II(c)"),
    (&["1", "1", "1", "1"], true, "II(a)"),
    (&["1", "2"], false, "II(a)"),
    (&["1", "-1/4"], true, "I(a)"),
    (&["1", "3/4"], false, "I(b)"),
    (&["1", "2", "8", "16"], false, "II(b)"),
    (&["1", "2", "2", "4"], true, "II(a)"),
];

pub fn pinned_violations() -> Vec<String> {
    use dyadic_lattice::lattice::bong_to_gram;
    use dyadic_lattice::oracle::oracle_universal;
    use dyadic_lattice::{decide_universal_lemma, decide_universal_thm};
    let k = fields()[0].1.clone();
    let mut bad = Vec::new();
    for &(xs, want, clause) in PINNED {
        let l = bong(&k, xs);
        let t = decide_universal_thm(&l);
        let lm = decide_universal_lemma(&l);
        let o = oracle_universal(&bong_to_gram(&l).unwrap()).unwrap();
        if (t.universal, t.trace.clause.label()) != (want, clause) {
            bad.push(format!("{xs:?}: theorem {} at {}", t.universal, t.trace.clause));
        }
        if lm.universal != want || o.universal != want {
            bad.push(format!("{xs:?}: lemma {} oracle {}", lm.universal, o.universal));
        }
        if xs == ["1", "2"] {
            let missing: Vec<String> = o.missing.iter().map(|x| k.display(x)).collect();
            if missing != ["5", "7", "10", "14"] {
                bad.push(format!("<1,2> misses {missing:?}"));
            }
            let w = lm.witness.as_ref().map(|w| w.display.clone()).unwrap_or_default();
            if !missing.contains(&w) {
                bad.push(format!("<1,2> lemma witness {w}"));
            }
        }
    }
    bad
}

/// Determinant class, norm and scale of `bong_to_gram(l)` against the
/// BONG invariants.
pub fn gram_violations(l: &GoodBongLattice) -> Vec<String> {
    use dyadic_lattice::lattice::{bong_to_gram, gram_invariants};
    use dyadic_lattice::symbols::quadratic_defect;
    let k = l.field();
    let mut bad = Vec::new();
    let g = match bong_to_gram(l) {
        Ok(g) => g,
        Err(err) => return vec![format!("{}: {err}", l.display())],
    };
    let inv = gram_invariants(&g).unwrap();
    let prod = l.entries().iter().fold(inv.det.clone(), |acc, a| k.mul(&acc, a));
    if !quadratic_defect(k, &prod).unwrap().is_infinite() {
        bad.push(format!("{}: det * a_1...a_m is not a square", l.display()));
    }
    let r1 = l.big_r(1);
    if inv.norm_ord != r1 {
        bad.push(format!("{}: norm {} != R_1", l.display(), inv.norm_ord));
    }
    let scale = if l.rank() >= 2 { r1.min((r1 + l.big_r(2)).div_euclid(2)) } else { r1 };
    if inv.scale_ord != scale {
        bad.push(format!("{}: scale {} != {scale}", l.display(), inv.scale_ord));
    }
    bad
}
