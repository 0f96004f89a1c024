//! Gram matrices, and the bridge from good BONGs to them.

use serde_json::Value;

use crate::bong::GoodBongLattice;
use crate::error::{Error, Result};
use crate::field::{enumerate_residues, DyadicField, FieldElement};
use crate::symbols::{square_class, SquareClass};

/// A lattice with a basis, given by its symmetric Gram matrix `B(x_i, x_j)`.
#[derive(Clone, Debug)]
pub struct GramLattice {
    field: DyadicField,
    g: Vec<Vec<FieldElement>>,
}

impl GramLattice {
    /// Checks shape, symmetry and nondegeneracy at working precision.
    pub fn new(k: &DyadicField, g: Vec<Vec<FieldElement>>) -> Result<GramLattice> {
        let n = g.len();
        if n == 0 || g.iter().any(|row| row.len() != n) {
            return Err(Error::Parse("Gram matrix must be square and nonempty".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                if !k.approx_eq(&g[i][j], &g[j][i]) {
                    return Err(Error::Parse(format!("Gram matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        let lat = GramLattice { field: k.clone(), g };
        lat.det()?;
        Ok(lat)
    }

    pub fn diagonal(k: &DyadicField, diag: Vec<FieldElement>) -> Result<GramLattice> {
        let n = diag.len();
        let mut g = vec![vec![FieldElement::ZERO; n]; n];
        for (i, x) in diag.into_iter().enumerate() {
            g[i][i] = x;
        }
        GramLattice::new(k, g)
    }

    pub fn field(&self) -> &DyadicField {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.g.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.g[i][j]
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.g
    }

    /// `c G`.
    pub fn scaled(&self, c: &FieldElement) -> Result<GramLattice> {
        let k = &self.field;
        let g = self
            .g
            .iter()
            .map(|row| row.iter().map(|x| k.mul(c, x)).collect())
            .collect();
        GramLattice::new(k, g)
    }

    /// Order of the norm ideal, generated by the `G_ii` and the `2 G_ij`.
    pub fn norm_ord(&self) -> Option<i64> {
        let e = self.field.e() as i64;
        let n = self.rank();
        let mut best: Option<i64> = None;
        for i in 0..n {
            for j in i..n {
                if let Some(v) = self.g[i][j].ord() {
                    let v = if i == j { v } else { v + e };
                    best = Some(best.map_or(v, |b| b.min(v)));
                }
            }
        }
        best
    }

    /// Order of the scale ideal, generated by all entries.
    pub fn scale_ord(&self) -> Option<i64> {
        self.g.iter().flatten().filter_map(FieldElement::ord).min()
    }

    /// Determinant by elimination with full pivoting on the smallest order.
    /// Entries that cancel below working precision are taken to be zero.
    pub fn det(&self) -> Result<FieldElement> {
        let k = &self.field;
        let mut a = self.g.clone();
        let n = a.len();
        let mut det = k.one();
        for col in 0..n {
            let mut pivot: Option<(usize, usize, i64)> = None;
            for i in col..n {
                for j in col..n {
                    if let Some(v) = a[i][j].ord() {
                        if pivot.map_or(true, |(_, _, b)| v < b) {
                            pivot = Some((i, j, v));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = pivot else {
                return Err(Error::DegenerateGram);
            };
            if pi != col {
                a.swap(pi, col);
                det = k.neg(&det);
            }
            if pj != col {
                for row in a.iter_mut() {
                    row.swap(pj, col);
                }
                det = k.neg(&det);
            }
            let p = a[col][col].clone();
            det = k.mul(&det, &p);
            for i in col + 1..n {
                if a[i][col].is_zero() {
                    continue;
                }
                let f = k.div(&a[i][col], &p)?;
                for j in col..n {
                    let x = k.mul(&f, &a[col][j]);
                    a[i][j] = match k.sub(&a[i][j], &x) {
                        Ok(y) => y,
                        Err(Error::PrecisionLoss(_)) => FieldElement::ZERO,
                        Err(e) => return Err(e),
                    };
                }
            }
        }
        Ok(det)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.g
                .iter()
                .map(|row| Value::Array(row.iter().map(|x| self.field.element_to_json(x)).collect()))
                .collect(),
        )
    }
}

/// Norm, scale and determinant of a Gram lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramInvariants {
    pub norm_ord: i64,
    pub scale_ord: i64,
    pub det: FieldElement,
    pub det_class: SquareClass,
}

pub fn gram_invariants(g: &GramLattice) -> Result<GramInvariants> {
    let det = g.det()?;
    Ok(GramInvariants {
        norm_ord: g.norm_ord().ok_or(Error::DegenerateGram)?,
        scale_ord: g.scale_ord().ok_or(Error::DegenerateGram)?,
        det_class: square_class(g.field(), &det)?,
        det,
    })
}

/// Which admissible shift `t` a binary block uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ShiftChoice {
    #[default]
    First,
    Last,
}

/// Gram matrix of `≺a_1, ..., a_m≻` with the first admissible shifts.
pub fn bong_to_gram(l: &GoodBongLattice) -> Result<GramLattice> {
    bong_to_gram_with(l, ShiftChoice::First)
}

/// Block-diagonal Gram matrix of a good BONG lattice.
///
/// Where `R_{i+1} >= R_i` the lattice splits and `a_i` is a unary block.
/// Where `R_{i+1} < R_i` the pair `(i, i+1)` gets the basis
/// `{x_i, t x_i + x_{i+1}}` with `ord t = (R_{i+1} - R_i)/2` and
/// `ord(t^2 a_i + a_{i+1}) >= R_i`, giving
/// `[[a_i, t a_i], [t a_i, t^2 a_i + a_{i+1}]]` of determinant `a_i a_{i+1}`.
/// Since `R_i <= R_{i+2}`, descents never chain and greedy pairing works.
pub fn bong_to_gram_with(l: &GoodBongLattice, choice: ShiftChoice) -> Result<GramLattice> {
    let k = l.field();
    let m = l.rank();
    let mut g = vec![vec![FieldElement::ZERO; m]; m];
    let mut i = 1;
    while i <= m {
        if i == m || l.big_r(i + 1) >= l.big_r(i) {
            g[i - 1][i - 1] = l.a(i).clone();
            i += 1;
            continue;
        }
        let (ai, an) = (l.a(i), l.a(i + 1));
        let half = (l.big_r(i + 1) - l.big_r(i)) / 2;
        let digits = (-half + 1) as u32;
        let target = l.big_r(i);
        let mut found = None;
        for u in enumerate_residues(k, digits, true)? {
            let t = k.shift(&u, half);
            let corner = k.add(&k.mul(&k.square(&t), ai), an);
            let corner = match corner {
                Ok(c) if c.ord().map_or(true, |v| v >= target) => c,
                Ok(_) => continue,
                Err(Error::PrecisionLoss(_)) => FieldElement::ZERO,
                Err(e) => return Err(e),
            };
            found = Some((t, corner));
            if choice == ShiftChoice::First {
                break;
            }
        }
        let (t, corner) = found.ok_or(Error::NoAdmissibleT(i))?;
        let off = k.mul(&t, ai);
        g[i - 1][i - 1] = ai.clone();
        g[i - 1][i] = off.clone();
        g[i][i - 1] = off;
        g[i][i] = corner;
        i += 2;
    }
    GramLattice::new(k, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_block() {
        let k = DyadicField::q2();
        let l = GoodBongLattice::new(&k, vec![k.one(), k.from_rational(-1, 4).unwrap()]).unwrap();
        let g = bong_to_gram(&l).unwrap();
        assert_eq!(g.entry(0, 0), &k.one());
        assert!(k.approx_eq(g.entry(0, 1), &k.from_rational(1, 2).unwrap()));
        assert!(g.entry(1, 1).is_zero());
        let inv = gram_invariants(&g).unwrap();
        assert_eq!((inv.norm_ord, inv.scale_ord), (0, -1));
        assert_eq!(inv.det_class, square_class(&k, &k.from_i64(-1)).unwrap());
    }
}
