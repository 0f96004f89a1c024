//! Quadratic defects, square classes and Hilbert symbols of a dyadic field,
//! and the classical decisions for diagonal quadratic spaces built on them.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{DyadicField, FieldElement, Int, Packing};
use crate::oracle;

/// Order of the relative quadratic defect: `0`, an odd number below `2e`,
/// `2e`, or infinity (squares).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Defect {
    Finite(u32),
    Infinite,
}

impl Defect {
    pub fn is_infinite(self) -> bool {
        self == Defect::Infinite
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Defect::Finite(d) => Some(d),
            Defect::Infinite => None,
        }
    }
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::Finite(d) => write!(f, "{d}"),
            Defect::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Defect {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Defect::Finite(d) => s.serialize_u32(*d),
            Defect::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Defect of a unit known modulo `pi^{2e+1}`.
///
/// First the residue is made `1` by a residue-field square root. Then, while
/// `eps = 1 + delta` with `ord delta = k` even and below `2e`, the leading
/// term of `delta` is a square `s^2 pi^k` and dividing by `(1 + s pi^{k/2})^2`
/// pushes `k` up, since the cross term has order `e + k/2 > k`. An odd `k`
/// is the defect. At `k = 2e` we have `eps = 1 + 4 rho'` and
/// `(1 + 2x)^2 = 1 + 4(x^2 + x)`, so `eps` is a square iff `rho'` has
/// absolute trace `0` in the residue field.
pub(crate) fn unit_defect(k: &DyadicField, unit: &Int) -> Defect {
    let t = k.tower();
    let rf = k.residue_field();
    let e = k.e();
    let digits = 2 * e + 1;
    let one = Int::constant(1);

    let root = t.lift_residue(rf.sqrt(t.residue(unit)));
    let mut eps = t.truncate(&t.mul(unit, &t.inv_unit(&t.square(&root))), digits);
    loop {
        let delta = t.truncate(&t.sub(&eps, &one), digits);
        let Some(order) = t.ord(&delta) else {
            return Defect::Infinite;
        };
        if order % 2 == 1 {
            return Defect::Finite(order);
        }
        let lead = t.residue(&t.div_pi_pow(&delta, order));
        if order == 2 * e {
            // delta / 4 = lead * eta^2 with eta = pi^e / 2
            let eta = rf.inv(t.residue(&t.eta_inv));
            let rho = rf.mul(lead, rf.mul(eta, eta));
            return if rf.trace(rho) == 0 {
                Defect::Infinite
            } else {
                Defect::Finite(2 * e)
            };
        }
        let s = t.mul_pi_pow(&t.lift_residue(rf.sqrt(lead)), order / 2);
        let y = t.add(&one, &s);
        eps = t.truncate(&t.mul(&eps, &t.inv_unit(&t.square(&y))), digits);
    }
}

/// `d(a)`: `0` for odd order, otherwise the defect order of the unit part.
pub fn quadratic_defect(k: &DyadicField, a: &FieldElement) -> Result<Defect> {
    let v = a.ord().ok_or(Error::ZeroArgument)?;
    if v.rem_euclid(2) == 1 {
        return Ok(Defect::Finite(0));
    }
    let unit = k.unit_residue(a, 2 * k.e() + 1)?;
    Ok(unit_defect(k, &unit))
}

pub fn is_square(k: &DyadicField, a: &FieldElement) -> Result<bool> {
    Ok(quadratic_defect(k, a)?.is_infinite())
}

/// The unit `rho` (first residue of absolute trace `1`, lifted) and
/// `Delta = 1 - 4 rho`, whose defect is exactly `2e`.
pub fn find_delta(k: &DyadicField) -> Result<(FieldElement, FieldElement)> {
    let rf = k.residue_field();
    let r = (1..rf.size())
        .find(|&r| rf.trace(r) == 1)
        .expect("the trace form is onto");
    let rho = k.lift_residue(r);
    let delta = k.sub(&k.one(), &k.mul(&k.from_i64(4), &rho))?;
    if quadratic_defect(k, &delta)? != Defect::Finite(2 * k.e()) {
        return Err(Error::PrecisionTooSmall {
            needed: 2 * k.e() + 1,
            have: k.precision(),
        });
    }
    Ok((rho, delta))
}

/// A class of `F* / F*^2`, numbered `parity * U + u` where `U` is the number
/// of unit classes and `u` the index of the unit part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass(u16);

impl SquareClass {
    pub const ONE: SquareClass = SquareClass(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Largest `f (2e + 1)` for which class tables are built.
const MAX_CLASS_BITS: u32 = 24;
const NOT_A_UNIT: u16 = u16::MAX;

/// Square-class tables of one field: a map from unit residues modulo
/// `pi^{2e+1}` to classes, representatives, the class group law, defects and
/// Hilbert symbols.
#[derive(Debug)]
pub struct SquareClasses {
    packing: Packing,
    units: usize,
    class_of_key: Vec<u16>,
    reps: Vec<FieldElement>,
    unit_mul: Vec<u16>,
    defect: Vec<Defect>,
    hilbert: Vec<i8>,
}

impl SquareClasses {
    /// Builds the tables from scratch. Goes only through the defect algorithm
    /// and brute-force isotropy, never through the field's cached copy.
    pub(crate) fn build(k: &DyadicField) -> Result<SquareClasses> {
        let t = k.tower();
        let digits = 2 * k.e() + 1;
        if k.f() * digits > MAX_CLASS_BITS {
            return Err(Error::UnsupportedField(format!(
                "square-class tables need f(2e+1) <= {MAX_CLASS_BITS}"
            )));
        }
        let packing = Packing::new(t, digits)?;
        let size = packing.size();
        let mul_keys = |x: u64, y: u64| {
            packing.pack(&t.truncate(&t.mul(&packing.unpack(x), &packing.unpack(y)), digits))
        };

        let mut squares: Vec<u64> = (0..size)
            .filter(|&x| packing.is_unit(x))
            .map(|x| mul_keys(x, x))
            .collect();
        squares.sort_unstable();
        squares.dedup();

        let mut class_of_key = vec![NOT_A_UNIT; size as usize];
        let mut rep_keys = Vec::new();
        for key in 0..size {
            if !packing.is_unit(key) || class_of_key[key as usize] != NOT_A_UNIT {
                continue;
            }
            let idx = rep_keys.len() as u16;
            for &s in &squares {
                class_of_key[mul_keys(key, s) as usize] = idx;
            }
            rep_keys.push(key);
        }
        let units = rep_keys.len();
        let expected = 1usize << (k.degree() + 1);
        if units != expected {
            return Err(Error::UnsupportedField(format!(
                "found {units} unit square classes, expected {expected}"
            )));
        }

        let mut unit_mul = vec![0u16; units * units];
        for (i, &x) in rep_keys.iter().enumerate() {
            for (j, &y) in rep_keys.iter().enumerate() {
                unit_mul[i * units + j] = class_of_key[mul_keys(x, y) as usize];
            }
        }

        let mut reps: Vec<FieldElement> = rep_keys
            .iter()
            .map(|&key| k.from_exact_int(&packing.unpack(key)))
            .collect();
        let odd: Vec<FieldElement> = reps.iter().map(|r| k.shift(r, 1)).collect();
        reps.extend(odd);

        let mut defect: Vec<Defect> = rep_keys
            .iter()
            .map(|&key| unit_defect(k, &packing.unpack(key)))
            .collect();
        defect.extend(std::iter::repeat(Defect::Finite(0)).take(units));

        let n = 2 * units;
        let minus_one = k.from_i64(-1);
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let signs: Vec<Result<i8>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let iso = oracle::isotropic_brute(
                    k,
                    &[reps[i].clone(), reps[j].clone(), minus_one.clone()],
                )?;
                Ok(if iso { 1 } else { -1 })
            })
            .collect();
        let mut hilbert = vec![0i8; n * n];
        for (&(i, j), s) in pairs.iter().zip(signs) {
            let s = s?;
            hilbert[i * n + j] = s;
            hilbert[j * n + i] = s;
        }

        Ok(SquareClasses {
            packing,
            units,
            class_of_key,
            reps,
            unit_mul,
            defect,
            hilbert,
        })
    }

    /// Number of classes in `F* / F*^2`.
    pub fn len(&self) -> usize {
        2 * self.units
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn unit_count(&self) -> usize {
        self.units
    }

    pub fn all(&self) -> impl Iterator<Item = SquareClass> {
        (0..self.len() as u16).map(SquareClass)
    }

    pub fn class_of(&self, k: &DyadicField, a: &FieldElement) -> Result<SquareClass> {
        let v = a.ord().ok_or(Error::ZeroArgument)?;
        let unit = k.unit_residue(a, self.packing.digits())?;
        let u = self.class_of_key[self.packing.pack(&unit) as usize];
        debug_assert_ne!(u, NOT_A_UNIT);
        Ok(SquareClass(v.rem_euclid(2) as u16 * self.units as u16 + u))
    }

    /// Representative: a unit residue of smallest packed key, times `pi`
    /// for odd classes.
    pub fn rep(&self, c: SquareClass) -> &FieldElement {
        &self.reps[c.index()]
    }

    pub fn parity(&self, c: SquareClass) -> u32 {
        (c.index() >= self.units) as u32
    }

    pub fn mul(&self, x: SquareClass, y: SquareClass) -> SquareClass {
        let u = self.units;
        let (px, ux) = (x.index() / u, x.index() % u);
        let (py, uy) = (y.index() / u, y.index() % u);
        SquareClass(((px ^ py) * u) as u16 + self.unit_mul[ux * u + uy])
    }

    pub fn product(&self, cs: impl IntoIterator<Item = SquareClass>) -> SquareClass {
        cs.into_iter().fold(SquareClass::ONE, |acc, c| self.mul(acc, c))
    }

    pub fn defect(&self, c: SquareClass) -> Defect {
        self.defect[c.index()]
    }

    pub fn hilbert(&self, x: SquareClass, y: SquareClass) -> i8 {
        self.hilbert[x.index() * self.len() + y.index()]
    }

    /// Class of `-1`.
    pub fn minus_one(&self, k: &DyadicField) -> SquareClass {
        self.class_of(k, &k.from_i64(-1)).expect("-1 is a unit")
    }
}

pub fn square_class(k: &DyadicField, a: &FieldElement) -> Result<SquareClass> {
    k.square_classes()?.class_of(k, a)
}

/// One representative per square class of each requested order, order by
/// order, in canonical order within each.
pub fn square_class_reps(k: &DyadicField, orders: &[i64]) -> Result<Vec<FieldElement>> {
    let sc = k.square_classes()?;
    let u = sc.unit_count();
    let mut out = Vec::with_capacity(orders.len() * u);
    for &o in orders {
        let parity = o.rem_euclid(2) as usize;
        for i in 0..u {
            out.push(k.shift(&sc.reps[parity * u + i], o - parity as i64));
        }
    }
    Ok(out)
}

/// `(a, b)`: `+1` iff `z^2 = a x^2 + b y^2` has a nontrivial solution.
pub fn hilbert(k: &DyadicField, a: &FieldElement, b: &FieldElement) -> Result<i8> {
    let sc = k.square_classes()?;
    Ok(sc.hilbert(sc.class_of(k, a)?, sc.class_of(k, b)?))
}

/// A nondegenerate quadratic space `[a_1, ..., a_n]`.
#[derive(Clone, Debug)]
pub struct DiagonalSpace {
    field: DyadicField,
    coeffs: Vec<FieldElement>,
}

impl DiagonalSpace {
    pub fn new(k: &DyadicField, coeffs: Vec<FieldElement>) -> Result<DiagonalSpace> {
        if coeffs.iter().any(FieldElement::is_zero) {
            return Err(Error::DegenerateSpace);
        }
        Ok(DiagonalSpace {
            field: k.clone(),
            coeffs,
        })
    }

    pub fn field(&self) -> &DyadicField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    fn classes(&self, sc: &SquareClasses) -> Result<Vec<SquareClass>> {
        self.coeffs.iter().map(|a| sc.class_of(&self.field, a)).collect()
    }

    /// Determinant class.
    pub fn det_class(&self) -> Result<SquareClass> {
        let sc = self.field.square_classes()?;
        Ok(sc.product(self.classes(&sc)?))
    }

    /// Hasse invariant `prod_{i<j} (a_i, a_j)`.
    pub fn hasse(&self) -> Result<i8> {
        let sc = self.field.square_classes()?;
        let cs = self.classes(&sc)?;
        let mut s = 1;
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                s *= sc.hilbert(cs[i], cs[j]);
            }
        }
        Ok(s)
    }

    /// `self ⊥ [c]`.
    pub fn extend(&self, c: FieldElement) -> Result<DiagonalSpace> {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(c);
        DiagonalSpace::new(&self.field, coeffs)
    }
}

/// Binary: `-a_1 a_2` is a square. Ternary: `(-a_1 a_2, -a_2 a_3) = 1`.
/// Quaternary: residue enumeration. Five or more variables: always.
pub fn space_isotropic(s: &DiagonalSpace) -> Result<bool> {
    let k = &s.field;
    match s.dim() {
        0 | 1 => Ok(false),
        2 | 3 => {
            let sc = k.square_classes()?;
            let cs = s.classes(&sc)?;
            let m1 = sc.minus_one(k);
            let x = sc.product([m1, cs[0], cs[1]]);
            if s.dim() == 2 {
                Ok(x == SquareClass::ONE)
            } else {
                let y = sc.product([m1, cs[1], cs[2]]);
                Ok(sc.hilbert(x, y) == 1)
            }
        }
        4 => oracle::isotropic_brute(k, &s.coeffs),
        _ => Ok(true),
    }
}

/// Whether `b` is a value of the space.
pub fn space_represents_element(b: &FieldElement, s: &DiagonalSpace) -> Result<bool> {
    if b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let k = &s.field;
    let sc = k.square_classes()?;
    let bc = sc.class_of(k, b)?;
    let cs = s.classes(&sc)?;
    let m1 = sc.minus_one(k);
    match cs.len() {
        0 => Ok(false),
        1 => Ok(bc == cs[0]),
        2 => Ok(sc.hilbert(sc.mul(cs[0], bc), sc.product([m1, cs[0], cs[1]])) == 1),
        3 => {
            let neg_det = sc.product([m1, cs[0], cs[1], cs[2]]);
            Ok(bc != neg_det || space_isotropic(s)?)
        }
        _ => Ok(true),
    }
}

pub fn space_universal(s: &DiagonalSpace) -> Result<bool> {
    match s.dim() {
        0 | 1 => Ok(false),
        2 | 3 => space_isotropic(s),
        _ => Ok(true),
    }
}

/// `U -> V` for codimension `0` (isometry: dimension, determinant and Hasse
/// invariant) or `1` (`V ≅ U ⊥ [dU dV]`).
pub fn space_represents_space(u: &DiagonalSpace, v: &DiagonalSpace) -> Result<bool> {
    if u.field != v.field {
        return Err(Error::FieldMismatch);
    }
    let codim = v.dim() as i64 - u.dim() as i64;
    match codim {
        0 => Ok(u.det_class()? == v.det_class()? && u.hasse()? == v.hasse()?),
        1 => {
            let k = &u.field;
            let sc = k.square_classes()?;
            let c = sc.mul(u.det_class()?, v.det_class()?);
            let w = u.extend(sc.rep(c).clone())?;
            space_represents_space(&w, v)
        }
        _ => Err(Error::BadCodimension(codim)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defects_over_q2() {
        let k = DyadicField::q2();
        let d = |n| quadratic_defect(&k, &k.from_i64(n)).unwrap();
        assert_eq!(d(1), Defect::Infinite);
        assert_eq!(d(2), Defect::Finite(0));
        assert_eq!(d(3), Defect::Finite(1));
        assert_eq!(d(5), Defect::Finite(2));
        assert_eq!(d(7), Defect::Finite(1));
        assert_eq!(d(-1), Defect::Finite(1));
        assert_eq!(d(17), Defect::Infinite);
        assert_eq!(quadratic_defect(&k, &k.zero()), Err(Error::ZeroArgument));
    }

    #[test]
    fn q2_tables() {
        let k = DyadicField::q2();
        let reps = square_class_reps(&k, &[0, 1]).unwrap();
        let ints: Vec<_> = reps.iter().map(|r| k.element_to_json(r)).collect();
        assert_eq!(ints, serde_json::json!([1, 3, 5, 7, 2, 6, 10, 14]).as_array().unwrap().clone());
        let h = |a, b| hilbert(&k, &k.from_i64(a), &k.from_i64(b)).unwrap();
        assert_eq!(h(-1, -1), -1);
        assert_eq!(h(2, 5), -1);
        assert_eq!(h(2, 7), 1);
        assert_eq!(h(3, 1), 1);
    }
}
