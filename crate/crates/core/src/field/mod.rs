//! Dyadic local fields `F / Q_2` as an unramified extension of degree `f`
//! followed by an Eisenstein extension of degree `e`, with elements kept in
//! the normalized form `pi^v * unit` at a fixed relative precision.

mod codec;
pub(crate) mod gf2;
pub(crate) mod int;
mod residue;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbols::SquareClasses;
use gf2::{is_irreducible_mod2, ResidueField};
pub(crate) use int::Int;
use int::{Tower, MAX_DEGREE};

pub(crate) use residue::Packing;
pub use residue::{enumerate_residues, ResidueRing};

/// Description of a field, as accepted on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Base {
        base: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        precision: Option<u32>,
    },
    Tower {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        unramified: Option<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eisenstein: Option<Vec<Vec<i64>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        precision: Option<u32>,
    },
}

impl FieldSpec {
    pub fn q2() -> FieldSpec {
        FieldSpec::Base {
            base: "Q2".into(),
            precision: None,
        }
    }

    pub fn precision(&self) -> Option<u32> {
        match self {
            FieldSpec::Base { precision, .. } | FieldSpec::Tower { precision, .. } => *precision,
        }
    }

    pub fn with_precision(&self, n: u32) -> FieldSpec {
        let mut s = self.clone();
        match &mut s {
            FieldSpec::Base { precision, .. } | FieldSpec::Tower { precision, .. } => {
                *precision = Some(n)
            }
        }
        s
    }

    /// Ramification index implied by the description, without validating it.
    pub fn ramification(&self) -> u32 {
        match self {
            FieldSpec::Base { .. } => 1,
            FieldSpec::Tower { eisenstein, .. } => eisenstein
                .as_ref()
                .map_or(1, |h| h.len().saturating_sub(1).max(1) as u32),
        }
    }
}

/// Working precision used when none is requested: room for valuations up
/// to `max_abs_ord` plus `6e + 8` digits.
pub fn default_precision(e: u32, max_abs_ord: u32) -> u32 {
    max_abs_ord + 6 * e + 8
}

const LIBRARY_DEFAULT_ORD: u32 = 16;

struct FieldInner {
    spec: FieldSpec,
    tower: Tower,
    residue: ResidueField,
    /// Coefficients of `g` as given (for display and equality).
    unramified: Vec<i64>,
    eisenstein: Vec<Vec<i64>>,
    precision: u32,
    /// Square-class tables, built on first use.
    classes: OnceLock<Result<Arc<SquareClasses>>>,
}

/// Handle to a dyadic field. Cheap to clone; immutable.
#[derive(Clone)]
pub struct DyadicField {
    inner: Arc<FieldInner>,
}

impl PartialEq for DyadicField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.unramified == other.inner.unramified
                && self.inner.eisenstein == other.inner.eisenstein
                && self.inner.precision == other.inner.precision)
    }
}

impl Eq for DyadicField {}

impl fmt::Debug for DyadicField {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fmt, "{}", self)
    }
}

impl fmt::Display for DyadicField {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f() == 1 && self.e() == 1 {
            write!(fmt, "Q2 (N={})", self.precision())
        } else {
            write!(
                fmt,
                "Q2[w]/{:?}[pi]/{:?} (e={}, f={}, N={})",
                self.inner.unramified,
                self.inner.eisenstein,
                self.e(),
                self.f(),
                self.precision()
            )
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Scaled {
    val: i64,
    /// Canonical residue of the unit modulo `pi^prec`.
    unit: Int,
    prec: u32,
}

/// An element `pi^v * unit` of a [`DyadicField`], exact modulo
/// `pi^{v + prec}`, or the zero element.
///
/// Arithmetic goes through the owning field (`k.add(&a, &b)`); elements do
/// not carry a field handle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement(Option<Scaled>);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(None);

    pub fn is_zero(&self) -> bool {
        self.0.is_none()
    }

    /// Valuation; `None` stands for infinity (the zero element).
    pub fn ord(&self) -> Option<i64> {
        self.0.as_ref().map(|s| s.val)
    }

    /// Number of known digits of the unit part (`None` for zero).
    pub fn precision(&self) -> Option<u32> {
        self.0.as_ref().map(|s| s.prec)
    }
}

impl DyadicField {
    /// The 2-adic numbers at the library default precision.
    pub fn q2() -> DyadicField {
        Self::q2_with_precision(default_precision(1, LIBRARY_DEFAULT_ORD)).expect("valid precision")
    }

    pub fn q2_with_precision(precision: u32) -> Result<DyadicField> {
        Self::new(&[1, 1], &[vec![-2], vec![1]], precision)
    }

    /// `Q_2(sqrt 2)`, ramified of degree 2, from the Eisenstein polynomial `x^2 - 2`.
    pub fn q2_sqrt2() -> DyadicField {
        Self::new(&[1, 1], &[vec![-2], vec![0], vec![1]], default_precision(2, LIBRARY_DEFAULT_ORD))
            .expect("x^2 - 2 is Eisenstein")
    }

    /// The unramified quadratic extension, from `x^2 + x + 1`.
    pub fn q4() -> DyadicField {
        Self::new(&[1, 1, 1], &[vec![-2], vec![1]], default_precision(1, LIBRARY_DEFAULT_ORD))
            .expect("x^2 + x + 1 is irreducible mod 2")
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<DyadicField> {
        match spec {
            FieldSpec::Base { base, precision } => {
                if base != "Q2" {
                    return Err(Error::UnsupportedField(format!("unknown base field {base:?}")));
                }
                let n = precision.unwrap_or(default_precision(1, LIBRARY_DEFAULT_ORD));
                Self::q2_with_precision(n)
            }
            FieldSpec::Tower {
                unramified,
                eisenstein,
                precision,
            } => {
                let g = unramified.clone().unwrap_or_else(|| vec![1, 1]);
                let h = eisenstein.clone().unwrap_or_else(|| vec![vec![-2], vec![1]]);
                let e = (h.len().max(2) - 1) as u32;
                let n = precision.unwrap_or(default_precision(e, LIBRARY_DEFAULT_ORD));
                let k = Self::new(&g, &h, n)?;
                Ok(k)
            }
        }
    }

    /// Builds and validates a field from the unramified polynomial
    /// `[c_0, ..., c_{f-1}, 1]` and the Eisenstein polynomial, whose
    /// coefficients are coordinate vectors over the unramified subring.
    pub fn new(unramified: &[i64], eisenstein: &[Vec<i64>], precision: u32) -> Result<DyadicField> {
        if unramified.len() < 2 {
            return Err(Error::NotIrreducibleUnramified("degree must be at least 1".into()));
        }
        let f = unramified.len() - 1;
        if unramified[f] != 1 {
            return Err(Error::NotIrreducibleUnramified("polynomial must be monic".into()));
        }
        if eisenstein.len() < 2 {
            return Err(Error::NotEisenstein("degree must be at least 1".into()));
        }
        let e = eisenstein.len() - 1;
        if f * e > MAX_DEGREE {
            return Err(Error::UnsupportedField(format!(
                "absolute degree {} exceeds {MAX_DEGREE}",
                f * e
            )));
        }
        let mut bits = 0u64;
        for (a, &c) in unramified.iter().enumerate() {
            bits |= ((c.rem_euclid(2)) as u64) << a;
        }
        if !is_irreducible_mod2(bits) {
            return Err(Error::NotIrreducibleUnramified(format!("{unramified:?}")));
        }
        let coord = |v: &Vec<i64>| -> Result<[u64; MAX_DEGREE]> {
            if v.len() > f {
                return Err(Error::NotEisenstein(format!(
                    "coefficient {v:?} has more than {f} coordinates"
                )));
            }
            let mut out = [0u64; MAX_DEGREE];
            for (i, &c) in v.iter().enumerate() {
                out[i] = c as u64;
            }
            Ok(out)
        };
        let lead = coord(&eisenstein[e])?;
        if lead[0] != 1 || lead[1..].iter().any(|&c| c != 0) {
            return Err(Error::NotEisenstein("polynomial must be monic".into()));
        }
        let mut h = Vec::with_capacity(e);
        for (b, v) in eisenstein[..e].iter().enumerate() {
            let c = coord(v)?;
            let v2 = c[..f].iter().filter(|&&x| x != 0).map(|x| x.trailing_zeros()).min();
            match (b, v2) {
                (0, Some(1)) => {}
                (0, _) => {
                    return Err(Error::NotEisenstein(
                        "constant coefficient must have valuation exactly 1".into(),
                    ))
                }
                (_, None) => {}
                (_, Some(v)) if v >= 1 => {}
                _ => {
                    return Err(Error::NotEisenstein(format!(
                        "coefficient of degree {b} must be divisible by 2"
                    )))
                }
            }
            h.push(c);
        }
        let min_precision = 4 * e as u32 + 4;
        if precision < min_precision {
            return Err(Error::PrecisionTooSmall {
                needed: min_precision,
                have: precision,
            });
        }
        if precision > 56 * e as u32 {
            return Err(Error::UnsupportedField(format!(
                "precision {precision} exceeds {} for e = {e}",
                56 * e
            )));
        }
        let mut g = [0u64; MAX_DEGREE];
        for a in 0..f {
            g[a] = unramified[a] as u64;
        }
        let tower = Tower::new(f, e, g, h);
        let residue = ResidueField::new(f as u32, bits as u32);
        let spec = if f == 1 && e == 1 {
            FieldSpec::Base {
                base: "Q2".into(),
                precision: Some(precision),
            }
        } else {
            FieldSpec::Tower {
                unramified: Some(unramified.to_vec()),
                eisenstein: Some(eisenstein.to_vec()),
                precision: Some(precision),
            }
        };
        Ok(DyadicField {
            inner: Arc::new(FieldInner {
                spec,
                tower,
                residue,
                unramified: unramified.to_vec(),
                eisenstein: eisenstein.to_vec(),
                precision,
                classes: OnceLock::new(),
            }),
        })
    }

    /// Ramification index, equal to `ord 2`.
    pub fn e(&self) -> u32 {
        self.inner.tower.e as u32
    }

    /// Residue degree.
    pub fn f(&self) -> u32 {
        self.inner.tower.f as u32
    }

    /// Absolute degree `[F : Q_2]`.
    pub fn degree(&self) -> u32 {
        self.e() * self.f()
    }

    /// Working precision `N`: digits retained past the valuation.
    pub fn precision(&self) -> u32 {
        self.inner.precision
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.inner.spec
    }

    pub(crate) fn tower(&self) -> &Tower {
        &self.inner.tower
    }

    pub(crate) fn residue_field(&self) -> &ResidueField {
        &self.inner.residue
    }

    /// The square-class tables of this field, built once and shared by
    /// every clone of the handle.
    pub fn square_classes(&self) -> Result<Arc<SquareClasses>> {
        self.inner
            .classes
            .get_or_init(|| SquareClasses::build(self).map(Arc::new))
            .clone()
    }

    // ---- construction -------------------------------------------------

    /// Normalizes `pi^val * x` where `x` is known modulo `pi^digits`.
    pub(crate) fn normalize(&self, val: i64, x: &Int, digits: u32) -> Result<FieldElement> {
        let t = self.tower();
        let x = t.truncate(x, digits);
        let k = match t.ord(&x) {
            Some(k) if k < digits => k,
            _ => return Err(Error::PrecisionLoss(val + digits as i64)),
        };
        let unit = t.div_pi_pow(&x, k);
        let prec = (digits - k).min(self.precision());
        Ok(FieldElement(Some(Scaled {
            val: val + k as i64,
            unit: t.truncate(&unit, prec),
            prec,
        })))
    }

    pub(crate) fn from_unit_int(&self, val: i64, unit: &Int, prec: u32) -> FieldElement {
        let t = self.tower();
        debug_assert!(t.residue(unit) != 0);
        let prec = prec.min(self.precision());
        FieldElement(Some(Scaled {
            val,
            unit: t.truncate(unit, prec),
            prec,
        }))
    }

    /// Element given by a coordinate vector with small exact coordinates,
    /// e.g. a residue representative. Exact to working precision.
    pub(crate) fn from_exact_int(&self, x: &Int) -> FieldElement {
        let t = self.tower();
        match t.ord(x) {
            None => FieldElement::ZERO,
            Some(k) => {
                let unit = t.div_pi_pow(x, k);
                self.from_unit_int(k as i64, &unit, self.precision())
            }
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        self.from_unit_int(0, &Int::constant(1), self.precision())
    }

    /// `(pi^e / 2)^{-s}`, the unit part of `2^s`.
    fn two_power_unit(&self, s: i64) -> Int {
        let t = self.tower();
        if s >= 0 {
            t.pow(&t.eta_inv, s as u64)
        } else {
            let eta = t.inv_unit(&t.eta_inv);
            t.pow(&eta, (-s) as u64)
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        if n == 0 {
            return FieldElement::ZERO;
        }
        let s = n.trailing_zeros() as i64;
        let odd = n >> s;
        self.from_odd_times_two_power(odd, s)
    }

    fn from_odd_times_two_power(&self, odd: i64, s: i64) -> FieldElement {
        let t = self.tower();
        // 2^s = pi^{es} * eta^s
        let unit = t.mul(&Int::constant(odd as u64), &t.inv_unit(&self.two_power_unit(s)));
        self.from_unit_int(self.e() as i64 * s, &unit, self.precision())
    }

    /// The rational `p / q`, embedded 2-adically.
    pub fn from_rational(&self, p: i64, q: i64) -> Result<FieldElement> {
        if q == 0 {
            return Err(Error::DivisionByZero);
        }
        if p == 0 {
            return Ok(FieldElement::ZERO);
        }
        let sp = p.trailing_zeros() as i64;
        let sq = q.trailing_zeros() as i64;
        let (po, qo) = (p >> sp, q >> sq);
        let t = self.tower();
        let num = self.from_odd_times_two_power(po, sp - sq);
        let inv = t.inv_unit(&Int::constant(qo as u64));
        Ok(self.mul_unit_int(&num, &inv))
    }

    fn mul_unit_int(&self, a: &FieldElement, u: &Int) -> FieldElement {
        match &a.0 {
            None => FieldElement::ZERO,
            Some(s) => self.from_unit_int(s.val, &self.tower().mul(&s.unit, u), s.prec),
        }
    }

    /// The uniformizer `pi`.
    pub fn uniformizer(&self) -> FieldElement {
        self.pi_pow(1)
    }

    pub fn pi_pow(&self, k: i64) -> FieldElement {
        self.from_unit_int(k, &Int::constant(1), self.precision())
    }

    /// The unramified generator `w` (equal to a root of the unramified
    /// polynomial); `1` when `f = 1`.
    pub fn unramified_generator(&self) -> FieldElement {
        if self.f() == 1 {
            return self.one();
        }
        let mut x = Int::ZERO;
        x.0[1] = 1;
        self.from_unit_int(0, &x, self.precision())
    }

    /// Lifts a residue-field element (bit mask over `1, w, ...`) to a unit
    /// with coordinates in `{0, 1}`.
    pub fn lift_residue(&self, r: u32) -> FieldElement {
        if r == 0 {
            return FieldElement::ZERO;
        }
        self.from_unit_int(0, &self.tower().lift_residue(r), self.precision())
    }

    // ---- ring operations ---------------------------------------------

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let (x, y) = match (&a.0, &b.0) {
            (None, _) => return Ok(b.clone()),
            (_, None) => return Ok(a.clone()),
            (Some(x), Some(y)) => (x, y),
        };
        let (lo, hi) = if x.val <= y.val { (x, y) } else { (y, x) };
        let t = self.tower();
        let shift = hi.val - lo.val;
        let abs = (lo.val + lo.prec as i64).min(hi.val + hi.prec as i64);
        let digits = (abs - lo.val) as u32;
        let sum = if shift >= digits as i64 {
            lo.unit
        } else {
            t.add(&lo.unit, &t.mul_pi_pow(&hi.unit, shift as u32))
        };
        self.normalize(lo.val, &sum, digits)
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match &a.0 {
            None => FieldElement::ZERO,
            Some(s) => self.from_unit_int(s.val, &self.tower().neg(&s.unit), s.prec),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (&a.0, &b.0) {
            (Some(x), Some(y)) => self.from_unit_int(
                x.val + y.val,
                &self.tower().mul(&x.unit, &y.unit),
                x.prec.min(y.prec),
            ),
            _ => FieldElement::ZERO,
        }
    }

    pub fn square(&self, a: &FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        match &a.0 {
            None => Err(Error::DivisionByZero),
            Some(x) => Ok(self.from_unit_int(-x.val, &self.tower().inv_unit(&x.unit), x.prec)),
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, k: i64) -> Result<FieldElement> {
        let base = if k < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }

    /// Multiplies by `pi^k`.
    pub fn shift(&self, a: &FieldElement, k: i64) -> FieldElement {
        match &a.0 {
            None => FieldElement::ZERO,
            Some(s) => FieldElement(Some(Scaled {
                val: s.val + k,
                ..s.clone()
            })),
        }
    }

    /// `pi`-adic valuation; `None` is infinity.
    pub fn ord(&self, a: &FieldElement) -> Option<i64> {
        a.ord()
    }

    /// The unit `pi^{-ord a} a`.
    pub fn unit_part(&self, a: &FieldElement) -> Option<FieldElement> {
        a.0.as_ref().map(|s| FieldElement(Some(Scaled { val: 0, ..s.clone() })))
    }

    /// Equality modulo the precision both operands carry.
    pub fn approx_eq(&self, a: &FieldElement, b: &FieldElement) -> bool {
        match (&a.0, &b.0) {
            (None, None) => true,
            (Some(x), Some(y)) => {
                let p = x.prec.min(y.prec);
                let t = self.tower();
                x.val == y.val && t.truncate(&x.unit, p) == t.truncate(&y.unit, p)
            }
            _ => false,
        }
    }

    /// Residue of an integral element modulo `pi^digits` as a coordinate
    /// vector. Errors when the element is not integral or not known that far.
    pub(crate) fn integral_residue(&self, a: &FieldElement, digits: u32) -> Result<Int> {
        match &a.0 {
            None => Ok(Int::ZERO),
            Some(s) if s.val < 0 => Err(Error::NonIntegralLattice(s.val)),
            Some(s) if s.val >= digits as i64 => Ok(Int::ZERO),
            Some(s) => {
                if s.val + s.prec as i64 + 0 < digits as i64 {
                    return Err(Error::PrecisionTooSmall {
                        needed: digits,
                        have: (s.val + s.prec as i64) as u32,
                    });
                }
                let t = self.tower();
                Ok(t.truncate(&t.mul_pi_pow(&s.unit, s.val as u32), digits))
            }
        }
    }

    /// Unit residue modulo `pi^digits`.
    pub(crate) fn unit_residue(&self, a: &FieldElement, digits: u32) -> Result<Int> {
        match &a.0 {
            None => Err(Error::ZeroArgument),
            Some(s) if s.prec < digits => Err(Error::PrecisionLoss(s.val + s.prec as i64)),
            Some(s) => Ok(self.tower().truncate(&s.unit, digits)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_basics() {
        let k = DyadicField::q2();
        assert_eq!(k.e(), 1);
        assert_eq!(k.f(), 1);
        let a = k.from_i64(3);
        let b = k.from_i64(5);
        let s = k.add(&a, &b).unwrap();
        assert!(k.approx_eq(&s, &k.pi_pow(3)));
        assert_eq!(s.ord(), Some(3));
        assert_eq!(k.from_i64(12).ord(), Some(2));
        assert_eq!(k.zero().ord(), None);
        let p = k.mul(&k.pi_pow(-2), &k.pi_pow(3));
        assert_eq!(p, k.from_i64(2));
    }

    #[test]
    fn two_has_order_e() {
        for k in [DyadicField::q2(), DyadicField::q2_sqrt2(), DyadicField::q4()] {
            let two = k.from_i64(2);
            assert_eq!(two.ord(), Some(k.e() as i64));
            let eta = k.div(&k.pi_pow(k.e() as i64), &two).unwrap();
            assert_eq!(eta.ord(), Some(0));
        }
    }

    #[test]
    fn rationals() {
        let k = DyadicField::q2();
        let q = k.from_rational(-1, 4).unwrap();
        assert_eq!(q.ord(), Some(-2));
        let back = k.mul(&q, &k.from_i64(-4));
        assert_eq!(back, k.one());
        let third = k.from_rational(1, 3).unwrap();
        assert_eq!(k.mul(&third, &k.from_i64(3)), k.one());
    }

    #[test]
    fn ramified_field_arithmetic() {
        let k = DyadicField::q2_sqrt2();
        let pi = k.uniformizer();
        assert_eq!(k.square(&pi), k.from_i64(2));
        assert_eq!(k.from_i64(2).ord(), Some(2));
        let x = k.add(&k.one(), &pi).unwrap();
        let y = k.inv(&x).unwrap();
        assert_eq!(k.mul(&x, &y), k.one());
    }

    #[test]
    fn cancellation_rules() {
        let k = DyadicField::q2_with_precision(12).unwrap();
        // 1 + 2^11 - 1 keeps its leading digit
        let a = k.from_i64(1 + (1 << 11));
        let d = k.sub(&a, &k.one()).unwrap();
        assert!(k.approx_eq(&d, &k.pi_pow(11)));
        assert_eq!(d.precision(), Some(1));
        // 1 and 1 + 2^13 agree in every retained digit
        let b = k.from_i64(1 + (1 << 13));
        assert_eq!(k.sub(&k.one(), &b), Err(Error::PrecisionLoss(12)));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            DyadicField::new(&[1, 1], &[vec![-4], vec![0], vec![1]], 40),
            Err(Error::NotEisenstein(_))
        ));
        assert!(matches!(
            DyadicField::new(&[1, 0, 1], &[vec![-2], vec![1]], 40),
            Err(Error::NotIrreducibleUnramified(_))
        ));
        assert!(matches!(
            DyadicField::q2_with_precision(7),
            Err(Error::PrecisionTooSmall { needed: 8, have: 7 })
        ));
        assert!(matches!(
            DyadicField::new(&[1, 1], &[vec![2], vec![1], vec![1]], 40),
            Err(Error::NotEisenstein(_))
        ));
    }

    #[test]
    fn division_by_zero() {
        let k = DyadicField::q2();
        assert_eq!(k.div(&k.one(), &k.zero()), Err(Error::DivisionByZero));
    }
}
