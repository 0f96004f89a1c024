//! Lattices given by good BONGs `≺a_1, ..., a_m≻` and their invariants
//! `R_i`, `alpha_i`, the truncated defects `d[...]` and the thresholds `A_i`.
//!
//! Indices in this module follow the usual 1-based notation; `alpha(i)` is
//! `alpha_i` for `1 <= i <= m - 1`.

use std::cmp::min;
use std::fmt;
use std::ops::{Add, Sub};
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{DyadicField, FieldElement};
use crate::symbols::{
    space_represents_space, Defect, DiagonalSpace, SquareClass, SquareClasses,
};

/// A number in `½Z ∪ {+∞}`, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const INF: HalfInt = HalfInt(i64::MAX);
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn int(n: i64) -> HalfInt {
        HalfInt(2 * n)
    }

    pub fn halves(twice: i64) -> HalfInt {
        HalfInt(twice)
    }

    pub fn is_inf(self) -> bool {
        self == Self::INF
    }

    /// Twice the value, `None` for infinity.
    pub fn twice(self) -> Option<i64> {
        (!self.is_inf()).then_some(self.0)
    }

    pub fn is_integer(self) -> bool {
        !self.is_inf() && self.0 % 2 == 0
    }

    /// The value when it is a finite integer.
    pub fn as_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }
}

impl From<Defect> for HalfInt {
    fn from(d: Defect) -> HalfInt {
        match d {
            Defect::Finite(d) => HalfInt::int(d as i64),
            Defect::Infinite => HalfInt::INF,
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        if self.is_inf() || rhs.is_inf() {
            HalfInt::INF
        } else {
            HalfInt(self.0 + rhs.0)
        }
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        self + HalfInt::int(rhs)
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        self + HalfInt::int(-rhs)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.twice() {
            None => f.write_str("inf"),
            Some(t) if t % 2 == 0 => write!(f, "{}", t / 2),
            Some(t) => write!(f, "{t}/2"),
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.twice() {
            None => s.serialize_str("inf"),
            Some(t) if t % 2 == 0 => s.serialize_i64(t / 2),
            Some(t) => s.serialize_f64(t as f64 / 2.0),
        }
    }
}

/// A lattice `≺a_1, ..., a_m≻` relative to a validated good BONG.
#[derive(Clone)]
pub struct GoodBongLattice {
    field: DyadicField,
    sc: Arc<SquareClasses>,
    a: Vec<FieldElement>,
    classes: Vec<SquareClass>,
    r: Vec<i64>,
    alpha: Vec<HalfInt>,
}

impl fmt::Debug for GoodBongLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl GoodBongLattice {
    /// Validates `a` as a good BONG: nonzero entries, `R_i <= R_{i+2}`, and
    /// `a_{i+1}/a_i` admissible, i.e. `R_{i+1} - R_i >= -2e` and
    /// `R_{i+1} - R_i + d(-a_i a_{i+1}) >= 0`.
    pub fn new(k: &DyadicField, a: Vec<FieldElement>) -> Result<GoodBongLattice> {
        let sc = k.square_classes()?;
        let mut r = Vec::with_capacity(a.len());
        let mut classes = Vec::with_capacity(a.len());
        for (i, x) in a.iter().enumerate() {
            let v = x.ord().ok_or(Error::ZeroEntry(i + 1))?;
            r.push(v);
            classes.push(sc.class_of(k, x)?);
        }
        let e = k.e() as i64;
        let m1 = sc.minus_one(k);
        let m = a.len();
        for i in 0..m.saturating_sub(1) {
            let diff = r[i + 1] - r[i];
            let d = HalfInt::from(sc.defect(sc.product([m1, classes[i], classes[i + 1]])));
            if diff < -2 * e || d + diff < HalfInt::ZERO {
                return Err(Error::NotAdjacentAdmissible(i + 1));
            }
        }
        for i in 0..m.saturating_sub(2) {
            if r[i] > r[i + 2] {
                return Err(Error::NotGood(i + 1));
            }
        }
        let mut lat = GoodBongLattice {
            field: k.clone(),
            sc,
            a,
            classes,
            r,
            alpha: Vec::new(),
        };
        lat.alpha = (1..m).map(|i| lat.alpha_by_definition(i)).collect();
        Ok(lat)
    }

    pub fn field(&self) -> &DyadicField {
        &self.field
    }

    pub fn square_classes(&self) -> &SquareClasses {
        &self.sc
    }

    /// `m`.
    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.a
    }

    /// `a_i`, 1-based.
    pub fn a(&self, i: usize) -> &FieldElement {
        &self.a[i - 1]
    }

    pub fn class(&self, i: usize) -> SquareClass {
        self.classes[i - 1]
    }

    /// `R_1, ..., R_m`.
    pub fn orders(&self) -> &[i64] {
        &self.r
    }

    /// `R_i`, 1-based.
    pub fn big_r(&self, i: usize) -> i64 {
        self.r[i - 1]
    }

    /// `R_i` with the convention `R_i = +∞` for `i > m`.
    pub fn r_or_inf(&self, i: usize) -> HalfInt {
        if i <= self.rank() {
            HalfInt::int(self.big_r(i))
        } else {
            HalfInt::INF
        }
    }

    /// `alpha_1, ..., alpha_{m-1}`.
    pub fn alphas(&self) -> &[HalfInt] {
        &self.alpha
    }

    /// `alpha_i`, 1-based.
    pub fn alpha(&self, i: usize) -> HalfInt {
        self.alpha[i - 1]
    }

    fn e(&self) -> i64 {
        self.field.e() as i64
    }

    /// `d(x)` for a square class.
    pub fn d(&self, c: SquareClass) -> HalfInt {
        self.sc.defect(c).into()
    }

    fn minus_one(&self) -> SquareClass {
        self.sc.minus_one(&self.field)
    }

    /// Class of `a_i ... a_j` (empty product `1` when `i = j + 1`).
    pub fn product_class(&self, i: usize, j: usize) -> SquareClass {
        self.sc.product((i..=j).map(|l| self.class(l)))
    }

    /// `d(-a_j a_{j+1})`.
    fn adjacent_defect(&self, j: usize) -> HalfInt {
        self.d(self.sc.product([self.minus_one(), self.class(j), self.class(j + 1)]))
    }

    /// `alpha_i` as the minimum of
    /// `{(R_{i+1} - R_i)/2 + e} ∪ {R_{i+1} - R_j + d(-a_j a_{j+1}) : j <= i}
    ///  ∪ {R_{j+1} - R_i + d(-a_j a_{j+1}) : j >= i}`.
    fn alpha_by_definition(&self, i: usize) -> HalfInt {
        let m = self.rank();
        let ri = self.big_r(i);
        let rn = self.big_r(i + 1);
        let mut best = HalfInt::halves(rn - ri + 2 * self.e());
        for j in 1..=i {
            best = min(best, self.adjacent_defect(j) + (rn - self.big_r(j)));
        }
        for j in i..m {
            best = min(best, self.adjacent_defect(j) + (self.big_r(j + 1) - ri));
        }
        best
    }

    /// `d[eps a_{i,j}] = min{d(eps a_i ... a_j), alpha_{i-1}, alpha_j}`, the
    /// alphas ignored at indices `0` and `m`. Needs `1 <= i <= j + 1 <= m + 1`.
    pub fn d_bracket_interval(&self, eps: &FieldElement, i: usize, j: usize) -> Result<HalfInt> {
        let m = self.rank();
        if i < 1 || i > j + 1 || j > m {
            return Err(Error::IndexOutOfRange(format!(
                "d[a_{{i,j}}] needs 1 <= i <= j+1 <= m+1, got i={i}, j={j}, m={m}"
            )));
        }
        let ec = self.sc.class_of(&self.field, eps)?;
        Ok(self.d_interval_class(ec, i, j))
    }

    pub(crate) fn d_interval_class(&self, eps: SquareClass, i: usize, j: usize) -> HalfInt {
        let m = self.rank();
        let mut v = self.d(self.sc.mul(eps, self.product_class(i, j)));
        if i - 1 != 0 && i - 1 != m {
            v = min(v, self.alpha(i - 1));
        }
        if j != 0 && j != m {
            v = min(v, self.alpha(j));
        }
        v
    }

    /// `≺a_m^{-1}, ..., a_1^{-1}≻`, the dual lattice.
    pub fn dual(&self) -> Result<GoodBongLattice> {
        let k = &self.field;
        let a = self
            .a
            .iter()
            .rev()
            .map(|x| k.inv(x))
            .collect::<Result<Vec<_>>>()?;
        GoodBongLattice::new(k, a)
    }

    /// `≺c a_1, ..., c a_m≻`.
    pub fn scaled(&self, c: &FieldElement) -> Result<GoodBongLattice> {
        let k = &self.field;
        if c.is_zero() {
            return Err(Error::ZeroArgument);
        }
        GoodBongLattice::new(k, self.a.iter().map(|x| k.mul(c, x)).collect())
    }

    /// The ambient space `[a_1, ..., a_m]`.
    pub fn space(&self) -> DiagonalSpace {
        DiagonalSpace::new(&self.field, self.a.clone()).expect("BONG entries are nonzero")
    }

    /// The space `[a_1, ..., a_j]`.
    pub fn prefix_space(&self, j: usize) -> DiagonalSpace {
        DiagonalSpace::new(&self.field, self.a[..j].to_vec()).expect("BONG entries are nonzero")
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self.a.iter().map(|x| self.field.display(x)).collect();
        format!("≺{}≻", parts.join(", "))
    }
}

fn same_field(m: &GoodBongLattice, n: &GoodBongLattice) -> Result<()> {
    if m.field != n.field {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// `d[eps a_{1,i} b_{1,j}] = min{d(eps a_1...a_i b_1...b_j), alpha_i, beta_j}`,
/// with `alpha_i` ignored for `i ∈ {0, m}` and `beta_j` for `j ∈ {0, n}`.
pub fn d_bracket_cross(
    m: &GoodBongLattice,
    n: &GoodBongLattice,
    eps: &FieldElement,
    i: usize,
    j: usize,
) -> Result<HalfInt> {
    same_field(m, n)?;
    if i > m.rank() || j > n.rank() {
        return Err(Error::IndexOutOfRange(format!(
            "d[a_{{1,i}} b_{{1,j}}] needs i <= {}, j <= {}, got i={i}, j={j}",
            m.rank(),
            n.rank()
        )));
    }
    let ec = m.sc.class_of(&m.field, eps)?;
    Ok(cross_class(m, n, ec, i, j))
}

pub(crate) fn cross_class(
    m: &GoodBongLattice,
    n: &GoodBongLattice,
    eps: SquareClass,
    i: usize,
    j: usize,
) -> HalfInt {
    let sc = &m.sc;
    let c = sc.product([eps, m.product_class(1, i), n.product_class(1, j)]);
    let mut v = m.d(c);
    if i != 0 && i != m.rank() {
        v = min(v, m.alpha(i));
    }
    if j != 0 && j != n.rank() {
        v = min(v, n.alpha(j));
    }
    v
}

/// `A_i(M, N)` for `1 <= i <= min{m - 1, n}`:
/// `min{(R_{i+1} - S_i)/2 + e, R_{i+1} - S_i + d[-a_{1,i+1} b_{1,i-1}],
///  R_{i+1} + R_{i+2} - S_{i-1} - S_i + d[a_{1,i+2} b_{1,i-2}]}`,
/// the last term ignored for `i ∈ {1, m - 1}`.
pub fn a_invariant(m: &GoodBongLattice, n: &GoodBongLattice, i: usize) -> Result<HalfInt> {
    same_field(m, n)?;
    let (mm, nn) = (m.rank(), n.rank());
    if i < 1 || i > min(mm.saturating_sub(1), nn) {
        return Err(Error::IndexOutOfRange(format!(
            "A_i needs 1 <= i <= min(m-1, n) = {}, got {i}",
            min(mm.saturating_sub(1), nn)
        )));
    }
    let e = m.e();
    let r = |l| m.big_r(l);
    let s = |l| n.big_r(l);
    let one = SquareClass::ONE;
    let mut v = HalfInt::halves(r(i + 1) - s(i) + 2 * e);
    v = min(v, cross_class(m, n, m.minus_one(), i + 1, i - 1) + (r(i + 1) - s(i)));
    if i != 1 && i != mm - 1 {
        let w = cross_class(m, n, one, i + 2, i - 2) + (r(i + 1) + r(i + 2) - s(i - 1) - s(i));
        v = min(v, w);
    }
    Ok(v)
}

/// `S_{n+1} + A_{n+1}` for `n <= m - 2`, where `S_{n+1}` and `A_{n+1}` are
/// not defined separately:
/// `min{R_{n+2} + d[-a_{1,n+2} b_{1,n}], R_{n+2} + R_{n+3} - S_n + d[a_{1,n+3} b_{1,n-1}]}`,
/// the second term ignored when `n = m - 2`.
pub fn a_composite(m: &GoodBongLattice, n: &GoodBongLattice) -> Result<HalfInt> {
    same_field(m, n)?;
    let (mm, nn) = (m.rank(), n.rank());
    if nn < 1 || nn + 2 > mm {
        return Err(Error::IndexOutOfRange(format!(
            "S_(n+1) + A_(n+1) needs 1 <= n <= m-2, got n={nn}, m={mm}"
        )));
    }
    let r = |l| m.big_r(l);
    let mut v = cross_class(m, n, m.minus_one(), nn + 2, nn) + r(nn + 2);
    if nn != mm - 2 {
        let w = cross_class(m, n, SquareClass::ONE, nn + 3, nn - 1) + (r(nn + 2) + r(nn + 3) - n.big_r(nn));
        v = min(v, w);
    }
    Ok(v)
}

/// The classification theorem: `L ≅ K` iff `FL ≅ FK`, `R_i = S_i`,
/// `alpha_i = beta_i`, `d(a_1...a_i b_1...b_i) >= alpha_i` for `i < m`, and
/// `[b_1, ..., b_{i-1}] -> [a_1, ..., a_i]` whenever `1 < i < m` and
/// `alpha_{i-1} + alpha_i > 2e`.
pub fn lattices_isometric(l: &GoodBongLattice, k: &GoodBongLattice) -> Result<bool> {
    same_field(l, k)?;
    let m = l.rank();
    if m != k.rank() || l.r != k.r || l.alpha != k.alpha {
        return Ok(false);
    }
    if !space_represents_space(&l.space(), &k.space())? {
        return Ok(false);
    }
    let sc = &l.sc;
    for i in 1..m {
        let c = sc.mul(l.product_class(1, i), k.product_class(1, i));
        if l.d(c) < l.alpha(i) {
            return Ok(false);
        }
    }
    let two_e = HalfInt::int(2 * l.e());
    for i in 2..m {
        if l.alpha(i - 1) + l.alpha(i) > two_e
            && !space_represents_space(&k.prefix_space(i - 1), &l.prefix_space(i))?
        {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bong(k: &DyadicField, xs: &[&str]) -> Result<GoodBongLattice> {
        let a = xs.iter().map(|s| k.parse_rational(s).unwrap()).collect();
        GoodBongLattice::new(k, a)
    }

    #[test]
    fn validation_examples() {
        let k = DyadicField::q2();
        let l = bong(&k, &["1", "2"]).unwrap();
        assert_eq!(l.orders(), &[0, 1]);
        assert_eq!(l.alphas(), &[HalfInt::int(1)]);
        assert_eq!(bong(&k, &["1", "1/8"]).unwrap_err(), Error::NotAdjacentAdmissible(1));
        // -Delta/4 with Delta = -3
        let l = bong(&k, &["1", "3/4"]).unwrap();
        assert_eq!(l.orders(), &[0, -2]);
        assert_eq!(bong(&k, &["2", "-1/2"]).unwrap().alphas(), &[HalfInt::ZERO]);
        assert_eq!(bong(&k, &["2", "1/2"]).unwrap_err(), Error::NotAdjacentAdmissible(1));
        assert_eq!(bong(&k, &["1", "0"]).unwrap_err(), Error::ZeroEntry(2));
        assert_eq!(bong(&k, &["4", "8", "6"]).unwrap_err(), Error::NotGood(1));
    }

    #[test]
    fn halfint_display() {
        assert_eq!(HalfInt::halves(5).to_string(), "5/2");
        assert_eq!(HalfInt::halves(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::int(3).to_string(), "3");
        assert_eq!(HalfInt::INF.to_string(), "inf");
        assert!(HalfInt::INF > HalfInt::int(1_000_000));
        assert_eq!(HalfInt::INF + (-5), HalfInt::INF);
    }
}
