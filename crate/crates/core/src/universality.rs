//! Two independent decisions of `Q(M) = O` for a lattice given by a good
//! BONG.
//!
//! [`decide_universal_thm`] evaluates the closed-form case analysis in the
//! invariants `R_i`, `alpha_i` and the isotropy of `[a_1, a_2]` and
//! `[a_1, a_2, a_3]`. [`decide_universal_lemma`] instead runs every unary
//! target `≺b≻` with `ord b ∈ {0, 1}` through the representation conditions
//! (i), `FN -> FM`, (ii), (iii') and (iv). Neither uses the other, and both
//! report which clause settled the answer.

use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::bong::{a_invariant, cross_class, GoodBongLattice, HalfInt};
use crate::field::FieldElement;
use crate::symbols::{
    space_isotropic, space_represents_element, square_class_reps, DiagonalSpace, SquareClass,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Theorem,
    Lemma,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Theorem => "theorem",
            Route::Lemma => "lemma",
        })
    }
}

/// A named condition of either decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Clause {
    RankAtLeastTwo,
    NormZero,
    Ia,
    Ib,
    Ic,
    IIa,
    IIb,
    IIc,
    Integral,
    Space,
    RepI,
    RepII,
    RepIIIPrime,
    RepIV,
    AllTargets,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::RankAtLeastTwo => "m≥2",
            Clause::NormZero => "R₁=0",
            Clause::Ia => "I(a)",
            Clause::Ib => "I(b)",
            Clause::Ic => "I(c)",
            Clause::IIa => "II(a)",
            Clause::IIb => "II(b)",
            Clause::IIc => "II(c)",
            Clause::Integral => "integral",
            Clause::Space => "space",
            Clause::RepI => "(i)",
            Clause::RepII => "(ii)",
            Clause::RepIIIPrime => "(iii')",
            Clause::RepIV => "(iv)",
            Clause::AllTargets => "all targets pass",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Clause {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClauseStatus {
    Holds,
    Vacuous,
    Fails,
}

/// Why a lattice was rejected before any case was examined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reason {
    RankOne,
    NonIntegralOrWrongNorm,
}

/// One evaluated clause with the numbers it was evaluated on.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClauseCheck {
    pub clause: Clause,
    pub status: ClauseStatus,
    pub bindings: Map<String, Value>,
    pub detail: String,
}

impl ClauseCheck {
    fn new(clause: Clause, status: ClauseStatus, bindings: Map<String, Value>, detail: String) -> Self {
        ClauseCheck {
            clause,
            status,
            bindings,
            detail,
        }
    }
}

/// The decisive clause (the failed one, or the case that applied) and every
/// clause evaluated on the way.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trace {
    pub clause: Clause,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Reason>,
    pub bindings: Map<String, Value>,
    pub checks: Vec<ClauseCheck>,
}

impl Trace {
    pub fn failed(&self) -> Option<&ClauseCheck> {
        self.checks.iter().find(|c| c.status == ClauseStatus::Fails)
    }
}

/// A target `b_1` that the lattice fails to represent.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    #[serde(skip)]
    pub element: FieldElement,
    #[serde(rename = "value")]
    pub json: Value,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UniversalityVerdict {
    pub universal: bool,
    pub route: Route,
    pub trace: Trace,
    pub witness: Option<Witness>,
}

impl UniversalityVerdict {
    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("verdicts serialize");
        if let Some(w) = &self.witness {
            v["witness"] = w.json.clone();
            v["witness_display"] = Value::String(w.display.clone());
        }
        v
    }
}

fn bind(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn hv(h: HalfInt) -> Value {
    serde_json::to_value(h).expect("half-integers serialize")
}

fn iso(s: &DiagonalSpace) -> bool {
    space_isotropic(s).expect("binary and ternary isotropy reads the class tables")
}

fn represents(b: &FieldElement, s: &DiagonalSpace) -> bool {
    space_represents_element(b, s).expect("representation by a space reads the class tables")
}

fn show_space(l: &GoodBongLattice, j: usize) -> String {
    let k = l.field();
    let parts: Vec<String> = l.entries()[..j].iter().map(|x| k.display(x)).collect();
    format!("[{}]", parts.join(","))
}

struct Builder {
    route: Route,
    checks: Vec<ClauseCheck>,
}

impl Builder {
    fn push(&mut self, c: ClauseCheck) -> bool {
        let ok = c.status != ClauseStatus::Fails;
        self.checks.push(c);
        ok
    }

    fn fail(self, reason: Option<Reason>, witness: Option<Witness>) -> UniversalityVerdict {
        let last = self.checks.last().expect("a failing check was pushed");
        UniversalityVerdict {
            universal: false,
            route: self.route,
            trace: Trace {
                clause: last.clause,
                reason,
                bindings: last.bindings.clone(),
                checks: self.checks,
            },
            witness,
        }
    }

    fn pass(self, clause: Clause, bindings: Map<String, Value>) -> UniversalityVerdict {
        UniversalityVerdict {
            universal: true,
            route: self.route,
            trace: Trace {
                clause,
                reason: None,
                bindings,
                checks: self.checks,
            },
            witness: None,
        }
    }
}

/// Shared gate of the theorem route: `m >= 2` and `R_1 = 0`.
fn preliminaries(l: &GoodBongLattice, t: &mut Builder) -> Option<Reason> {
    use ClauseStatus::*;
    let m = l.rank();
    if m < 2 {
        t.push(ClauseCheck::new(Clause::RankAtLeastTwo, Fails, bind(&[("m", json!(m))]), format!("m={m}")));
        return Some(Reason::RankOne);
    }
    t.push(ClauseCheck::new(Clause::RankAtLeastTwo, Holds, bind(&[("m", json!(m))]), format!("m={m}")));
    let r1 = l.big_r(1);
    let b = bind(&[("R1", json!(r1))]);
    if r1 != 0 {
        let why = if r1 < 0 { " (not integral)" } else { "" };
        t.push(ClauseCheck::new(Clause::NormZero, Fails, b, format!("R₁={r1}{why}")));
        return Some(Reason::NonIntegralOrWrongNorm);
    }
    t.push(ClauseCheck::new(Clause::NormZero, Holds, b, "R₁=0".into()));
    None
}

/// Universality by the closed-form case analysis.
///
/// `M` is universal iff `m >= 2`, `R_1 = 0` and either
///
/// * I: `alpha_1 = 0`; if `R_3 > 1` then `[a_1, a_2]` is isotropic; if
///   `R_3 = 1` and `R_4 > 2e + 1` then `[a_1, a_2]` is isotropic; or
/// * II: `m >= 3` and `alpha_1 = 1`; if `R_2 = 1` or `R_3 > 1` then `m >= 4`
///   and `alpha_3 <= 2(e - floor((R_3 - R_2)/2)) - 1`; if `R_2 <= 0`,
///   `R_3 <= 1` and `R_4 - R_3 > 2e` then `[a_1, a_2, a_3]` is isotropic.
///
/// Here `R_i = +∞` for `i > m`, which absorbs the `m = 2` and `m = 3`
/// alternatives. A lattice with `R_1 < 0` is not integral and gets the same
/// `R₁=0` failure as one with `R_1 > 0`.
pub fn decide_universal_thm(l: &GoodBongLattice) -> UniversalityVerdict {
    use ClauseStatus::*;
    let mut t = Builder {
        route: Route::Theorem,
        checks: Vec::new(),
    };
    if let Some(reason) = preliminaries(l, &mut t) {
        return t.fail(Some(reason), None);
    }
    let m = l.rank();
    let e = l.field().e() as i64;
    let two_e = HalfInt::int(2 * e);
    let r = |i| l.r_or_inf(i);
    let one = HalfInt::int(1);
    let alpha1 = l.alpha(1);

    if alpha1 == HalfInt::ZERO {
        t.push(ClauseCheck::new(
            Clause::Ia,
            Holds,
            bind(&[("alpha1", hv(alpha1)), ("R2", hv(r(2)))]),
            format!("α₁=0, R₂={}", r(2)),
        ));
        let iso2 = iso(&l.prefix_space(2));
        let b = bind(&[("R3", hv(r(3))), ("isotropic_a1a2", json!(iso2))]);
        let ib = if r(3) > one {
            let status = if iso2 { Holds } else { Fails };
            let word = if iso2 { "isotropic" } else { "anisotropic" };
            ClauseCheck::new(Clause::Ib, status, b, format!("R₃={}>1, {} {word}", r(3), show_space(l, 2)))
        } else {
            ClauseCheck::new(Clause::Ib, Vacuous, b, format!("vacuous (R₃={}≤1)", r(3)))
        };
        if !t.push(ib) {
            return t.fail(None, None);
        }
        let b = bind(&[("R3", hv(r(3))), ("R4", hv(r(4))), ("isotropic_a1a2", json!(iso2))]);
        let ic = if r(3) == one && r(4) > two_e + 1 {
            let status = if iso2 { Holds } else { Fails };
            let word = if iso2 { "isotropic" } else { "anisotropic" };
            ClauseCheck::new(
                Clause::Ic,
                status,
                b,
                format!("R₃=1, R₄={}>{}, {} {word}", r(4), 2 * e + 1, show_space(l, 2)),
            )
        } else {
            ClauseCheck::new(
                Clause::Ic,
                Vacuous,
                b,
                format!("vacuous (R₃={}, R₄={}, threshold 2e+1={})", r(3), r(4), 2 * e + 1),
            )
        };
        if !t.push(ic) {
            return t.fail(None, None);
        }
        return t.pass(Clause::Ia, bind(&[("alpha1", hv(alpha1))]));
    }

    let b = bind(&[("m", json!(m)), ("alpha1", hv(alpha1))]);
    if alpha1 != one {
        t.push(ClauseCheck::new(Clause::IIa, Fails, b, format!("α₁={alpha1}, neither 0 nor 1")));
        return t.fail(None, None);
    }
    if m < 3 {
        t.push(ClauseCheck::new(Clause::IIa, Fails, b, "α₁=1 but m=2".into()));
        return t.fail(None, None);
    }
    t.push(ClauseCheck::new(Clause::IIa, Holds, b, "α₁=1".into()));

    let (r2, r3) = (l.big_r(2), l.big_r(3));
    if r2 == 1 || r3 > 1 {
        let bound = 2 * (e - (r3 - r2).div_euclid(2)) - 1;
        let alpha3 = if m >= 4 { l.alpha(3) } else { HalfInt::INF };
        let b = bind(&[
            ("R2", json!(r2)),
            ("R3", json!(r3)),
            ("m", json!(m)),
            ("alpha3", hv(alpha3)),
            ("bound", json!(bound)),
        ]);
        let check = if m < 4 {
            ClauseCheck::new(Clause::IIb, Fails, b, format!("R₂={r2}, R₃={r3} but m=3"))
        } else if alpha3 <= HalfInt::int(bound) {
            ClauseCheck::new(Clause::IIb, Holds, b, format!("α₃={alpha3}≤{bound}"))
        } else {
            ClauseCheck::new(Clause::IIb, Fails, b, format!("α₃={alpha3}>{bound}=2(e−⌊(R₃−R₂)/2⌋)−1"))
        };
        if !t.push(check) {
            return t.fail(None, None);
        }
    } else {
        t.push(ClauseCheck::new(
            Clause::IIb,
            Vacuous,
            bind(&[("R2", json!(r2)), ("R3", json!(r3))]),
            format!("vacuous (R₂={r2},R₃={r3})"),
        ));
    }

    let gap = r(4) - r3;
    let iso3 = iso(&l.prefix_space(3));
    let b = bind(&[
        ("R2", json!(r2)),
        ("R3", json!(r3)),
        ("R4", hv(r(4))),
        ("isotropic_a1a2a3", json!(iso3)),
    ]);
    let check = if r2 <= 0 && r3 <= 1 && gap > two_e {
        let status = if iso3 { Holds } else { Fails };
        let word = if iso3 { "isotropic" } else { "anisotropic" };
        ClauseCheck::new(Clause::IIc, status, b, format!("R₄−R₃={gap}>{}, {} {word}", 2 * e, show_space(l, 3)))
    } else if r2 <= 0 && r3 <= 1 {
        ClauseCheck::new(Clause::IIc, Vacuous, b, format!("vacuous (R₄−R₃={gap}≤{})", 2 * e))
    } else {
        ClauseCheck::new(Clause::IIc, Vacuous, b, format!("vacuous (R₂={r2},R₃={r3})"))
    };
    if !t.push(check) {
        return t.fail(None, None);
    }
    t.pass(Clause::IIa, bind(&[("alpha1", hv(alpha1))]))
}

/// The conditions for `≺b≻ -> M` with `n = 1`, evaluated in order and cut
/// at the first failure.
///
/// * (i): `R_1 <= S_1`;
/// * space: `b` is a value of `FM`;
/// * (ii): `d[a_1 b_1] >= A_1` (for `m >= 2`);
/// * (iii'): if `m >= 3`, `R_3 > S_1` and
///   `d[-a_{1,2}] + d[-a_{1,3} b_1] > 2e + S_1 - R_3`, then `[b_1] -> [a_1, a_2]`;
/// * (iv): if `m >= 4`, `R_3 <= S_1` and `R_4 - S_1 > 2e`, then
///   `[b_1] -> [a_1, a_2, a_3]`.
pub fn lemma_target_checks(l: &GoodBongLattice, b: &FieldElement) -> crate::Result<Vec<ClauseCheck>> {
    use ClauseStatus::*;
    let k = l.field();
    let n = GoodBongLattice::new(k, vec![b.clone()])?;
    let sc = l.square_classes();
    let m = l.rank();
    let e = k.e() as i64;
    let s1 = n.big_r(1);
    let bd = k.display(b);
    let mut out = Vec::new();

    let r1 = l.big_r(1);
    let ok = r1 <= s1;
    out.push(ClauseCheck::new(
        Clause::RepI,
        if ok { Holds } else { Fails },
        bind(&[("R1", json!(r1)), ("S1", json!(s1))]),
        format!("R₁={r1}{}S₁={s1}", if ok { "≤" } else { ">" }),
    ));
    if !ok {
        return Ok(out);
    }

    let fm = l.space();
    let rep = represents(b, &fm);
    out.push(ClauseCheck::new(
        Clause::Space,
        if rep { Holds } else { Fails },
        bind(&[("b1", json!(bd)), ("represented", json!(rep))]),
        if rep {
            format!("[{bd}] represented by {}", show_space(l, m))
        } else {
            format!("[{bd}] not represented by {}", show_space(l, m))
        },
    ));
    if !rep {
        return Ok(out);
    }

    if m >= 2 {
        let d = cross_class(l, &n, SquareClass::ONE, 1, 1);
        let a1 = a_invariant(l, &n, 1)?;
        let ok = d >= a1;
        out.push(ClauseCheck::new(
            Clause::RepII,
            if ok { Holds } else { Fails },
            bind(&[("d_a1b1", hv(d)), ("A1", hv(a1))]),
            format!("d[a₁b₁]={d}{}A₁={a1}", if ok { "≥" } else { "<" }),
        ));
        if !ok {
            return Ok(out);
        }
    } else {
        out.push(ClauseCheck::new(Clause::RepII, Vacuous, Map::new(), "vacuous (m=1)".into()));
    }

    let minus = sc.minus_one(k);
    if m >= 3 {
        let r3 = l.big_r(3);
        let lhs = cross_class(l, &n, minus, 2, 0) + cross_class(l, &n, minus, 3, 1);
        let rhs = 2 * e + s1 - r3;
        let mut b2 = bind(&[
            ("R3", json!(r3)),
            ("S1", json!(s1)),
            ("lhs", hv(lhs)),
            ("rhs", json!(rhs)),
        ]);
        if r3 > s1 && lhs > HalfInt::int(rhs) {
            let rep = represents(b, &l.prefix_space(2));
            b2.insert("represented".into(), json!(rep));
            let word = if rep { "represented" } else { "not represented" };
            out.push(ClauseCheck::new(
                Clause::RepIIIPrime,
                if rep { Holds } else { Fails },
                b2,
                format!("[{bd}] {word} by {}", show_space(l, 2)),
            ));
            if !rep {
                return Ok(out);
            }
        } else {
            out.push(ClauseCheck::new(
                Clause::RepIIIPrime,
                Vacuous,
                b2,
                format!("vacuous (R₃={r3}, S₁={s1}, {lhs}≤{rhs} or R₃≤S₁)"),
            ));
        }
    } else {
        out.push(ClauseCheck::new(Clause::RepIIIPrime, Vacuous, Map::new(), format!("vacuous (m={m})")));
    }

    if m >= 4 {
        let (r3, r4) = (l.big_r(3), l.big_r(4));
        let mut b4 = bind(&[("R3", json!(r3)), ("R4", json!(r4)), ("S1", json!(s1))]);
        if r3 <= s1 && r4 - s1 > 2 * e {
            let rep = represents(b, &l.prefix_space(3));
            b4.insert("represented".into(), json!(rep));
            let word = if rep { "represented" } else { "not represented" };
            out.push(ClauseCheck::new(
                Clause::RepIV,
                if rep { Holds } else { Fails },
                b4,
                format!("[{bd}] {word} by {}", show_space(l, 3)),
            ));
        } else {
            out.push(ClauseCheck::new(
                Clause::RepIV,
                Vacuous,
                b4,
                format!("vacuous (R₃={r3}, R₄={r4}, S₁={s1})"),
            ));
        }
    } else {
        out.push(ClauseCheck::new(Clause::RepIV, Vacuous, Map::new(), format!("vacuous (m={m})")));
    }
    Ok(out)
}

/// Universality by checking every unary target `≺b≻`, `b` running over the
/// square-class representatives of order `0` and then of order `1`.
///
/// The verdict is `false` with the first target that fails one of the
/// conditions of [`lemma_target_checks`]. The conditions presuppose an
/// integral lattice, so `R_1 < 0` is rejected up front.
pub fn decide_universal_lemma(l: &GoodBongLattice) -> UniversalityVerdict {
    let k = l.field();
    let mut t = Builder {
        route: Route::Lemma,
        checks: Vec::new(),
    };
    let r1 = l.big_r(1);
    if r1 < 0 {
        t.push(ClauseCheck::new(
            Clause::Integral,
            ClauseStatus::Fails,
            bind(&[("R1", json!(r1))]),
            format!("R₁={r1}<0, not integral"),
        ));
        return t.fail(Some(Reason::NonIntegralOrWrongNorm), None);
    }
    let targets = square_class_reps(k, &[0, 1]).expect("class tables exist for a validated lattice");
    for b in &targets {
        let checks = lemma_target_checks(l, b).expect("unary targets are valid good BONGs");
        if checks.iter().any(|c| c.status == ClauseStatus::Fails) {
            t.checks = checks;
            let witness = Witness {
                element: b.clone(),
                json: k.element_to_json(b),
                display: k.display(b),
            };
            return t.fail(None, Some(witness));
        }
    }
    t.pass(Clause::AllTargets, bind(&[("targets", json!(targets.len()))]))
}

/// One-line human-readable account of a verdict.
pub fn explain(v: &UniversalityVerdict) -> String {
    let tr = &v.trace;
    if v.universal {
        let mut parts = Vec::new();
        for c in &tr.checks {
            match c.clause {
                Clause::RankAtLeastTwo | Clause::NormZero => {}
                cl if cl == tr.clause => parts.push(format!("case {cl}, {}", c.detail)),
                cl => parts.push(format!("{cl} {}", c.detail)),
            }
        }
        if v.route == Route::Lemma {
            let n = tr.bindings.get("targets").cloned().unwrap_or(Value::Null);
            return format!("universal: all {n} targets pass");
        }
        return format!("universal: {}", parts.join(", "));
    }
    let Some(c) = tr.failed() else {
        return "non-universal".into();
    };
    match c.clause {
        Clause::RankAtLeastTwo | Clause::NormZero | Clause::Integral => {
            format!("non-universal: {}", c.detail)
        }
        cl => match &v.witness {
            Some(w) => format!("non-universal: witness b₁={}, clause {cl}: {}", w.display, c.detail),
            None => format!("non-universal: clause {cl}: {}", c.detail),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DyadicField;

    fn bong(k: &DyadicField, xs: &[&str]) -> GoodBongLattice {
        let a = xs.iter().map(|s| k.parse_rational(s).unwrap()).collect();
        GoodBongLattice::new(k, a).unwrap()
    }

    #[test]
    fn explain_formats() {
        let k = DyadicField::q2();
        let v = decide_universal_thm(&bong(&k, &["1", "1", "1", "1"]));
        assert_eq!(
            explain(&v),
            "universal: case II(a), α₁=1, II(b) vacuous (R₂=0,R₃=0), II(c) vacuous (R₄−R₃=0≤2)"
        );
        let v = decide_universal_thm(&bong(&k, &["3"]));
        assert_eq!(explain(&v), "non-universal: m=1");
        let v = decide_universal_lemma(&bong(&k, &["1", "1", "1"]));
        assert_eq!(explain(&v), "non-universal: witness b₁=7, clause space: [7] not represented by [1,1,1]");
    }

    #[test]
    fn small_verdicts() {
        let k = DyadicField::q2();
        for (xs, want, clause) in [
            (&["1", "1", "1"][..], false, Clause::IIc),
            (&["1", "2"][..], false, Clause::IIa),
            (&["1", "2", "8", "16"][..], false, Clause::IIb),
            (&["1", "2", "2", "4"][..], true, Clause::IIa),
            (&["1", "-1/4"][..], true, Clause::Ia),
        ] {
            let l = bong(&k, xs);
            let v = decide_universal_thm(&l);
            assert_eq!((v.universal, v.trace.clause), (want, clause), "{xs:?}");
            assert_eq!(decide_universal_lemma(&l).universal, want, "{xs:?}");
        }
    }
}
