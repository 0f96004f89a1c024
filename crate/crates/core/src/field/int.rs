//! Arithmetic in `O / 2^64 O`, the ring of integers truncated at `pi^{64e}`.
//!
//! An element is a coordinate vector over the monomials `w^a pi^b`
//! (`0 <= a < f`, `0 <= b < e`), stored at index `b * f + a`, each
//! coordinate a residue mod `2^64`. Because `1, w, ..., w^{f-1}` is an
//! integral basis of the unramified subring and `pi` is a root of an
//! Eisenstein polynomial, the monomials form a `Z_2`-basis of `O`, so
//! `O / 2^64 O` is exactly `(Z / 2^64)[w, pi] / (g(w), h(pi))` and wrapping
//! `u64` arithmetic computes in it without error. Truncating to fewer
//! digits is a per-coordinate mask.

pub(crate) const MAX_DEGREE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct Int(pub [u64; MAX_DEGREE]);

impl Int {
    pub const ZERO: Int = Int([0; MAX_DEGREE]);

    pub fn constant(c: u64) -> Int {
        let mut x = Int::ZERO;
        x.0[0] = c;
        x
    }
}

/// The structure constants of the tower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Tower {
    pub f: usize,
    pub e: usize,
    /// Non-leading coefficients of the unramified polynomial `g`.
    pub g: [u64; MAX_DEGREE],
    /// Non-leading coefficients `h_0, ..., h_{e-1}` of the Eisenstein
    /// polynomial, each a vector over `1, w, ..., w^{f-1}`.
    pub h: Vec<[u64; MAX_DEGREE]>,
    /// `(pi^e / 2)^{-1}`, used to divide by `pi`.
    pub eta_inv: Int,
}

impl Tower {
    pub fn new(f: usize, e: usize, g: [u64; MAX_DEGREE], h: Vec<[u64; MAX_DEGREE]>) -> Tower {
        let mut t = Tower {
            f,
            e,
            g,
            h,
            eta_inv: Int::ZERO,
        };
        // eta = pi^e / 2 = -sum (h_b / 2) pi^b
        let mut eta = Int::ZERO;
        for b in 0..e {
            for a in 0..f {
                eta.0[b * f + a] = ((t.h[b][a] as i64) >> 1).wrapping_neg() as u64;
            }
        }
        t.eta_inv = t.inv_unit(&eta);
        t
    }

    pub fn degree(&self) -> usize {
        self.e * self.f
    }

    fn unram_mul(&self, x: &[u64], y: &[u64]) -> [u64; MAX_DEGREE] {
        let f = self.f;
        let mut p = [0u64; 2 * MAX_DEGREE];
        for (i, &xi) in x.iter().enumerate().take(f) {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate().take(f) {
                p[i + j] = p[i + j].wrapping_add(xi.wrapping_mul(yj));
            }
        }
        for k in (f..2 * f - 1).rev() {
            let c = p[k];
            if c == 0 {
                continue;
            }
            for a in 0..f {
                p[k - f + a] = p[k - f + a].wrapping_sub(c.wrapping_mul(self.g[a]));
            }
        }
        let mut out = [0u64; MAX_DEGREE];
        out[..f].copy_from_slice(&p[..f]);
        out
    }

    pub fn add(&self, x: &Int, y: &Int) -> Int {
        let mut z = Int::ZERO;
        for i in 0..self.degree() {
            z.0[i] = x.0[i].wrapping_add(y.0[i]);
        }
        z
    }

    pub fn sub(&self, x: &Int, y: &Int) -> Int {
        let mut z = Int::ZERO;
        for i in 0..self.degree() {
            z.0[i] = x.0[i].wrapping_sub(y.0[i]);
        }
        z
    }

    pub fn neg(&self, x: &Int) -> Int {
        let mut z = Int::ZERO;
        for i in 0..self.degree() {
            z.0[i] = x.0[i].wrapping_neg();
        }
        z
    }

    pub fn mul(&self, x: &Int, y: &Int) -> Int {
        let (f, e) = (self.f, self.e);
        if f == 1 && e == 1 {
            return Int::constant(x.0[0].wrapping_mul(y.0[0]));
        }
        let mut tmp = [[0u64; MAX_DEGREE]; 2 * MAX_DEGREE];
        for b1 in 0..e {
            let xs = &x.0[b1 * f..b1 * f + f];
            if xs.iter().all(|&c| c == 0) {
                continue;
            }
            for b2 in 0..e {
                let ys = &y.0[b2 * f..b2 * f + f];
                if ys.iter().all(|&c| c == 0) {
                    continue;
                }
                let p = self.unram_mul(xs, ys);
                for a in 0..f {
                    tmp[b1 + b2][a] = tmp[b1 + b2][a].wrapping_add(p[a]);
                }
            }
        }
        // pi^e = -sum h_b pi^b
        for k in (e..2 * e - 1).rev() {
            let c = tmp[k];
            if c[..f].iter().all(|&v| v == 0) {
                continue;
            }
            for b in 0..e {
                let p = self.unram_mul(&c[..f], &self.h[b][..f]);
                for a in 0..f {
                    tmp[k - e + b][a] = tmp[k - e + b][a].wrapping_sub(p[a]);
                }
            }
        }
        let mut z = Int::ZERO;
        for b in 0..e {
            z.0[b * f..b * f + f].copy_from_slice(&tmp[b][..f]);
        }
        z
    }

    pub fn square(&self, x: &Int) -> Int {
        self.mul(x, x)
    }

    pub fn mul_pi(&self, x: &Int) -> Int {
        let (f, e) = (self.f, self.e);
        let mut z = Int::ZERO;
        for b in 1..e {
            for a in 0..f {
                z.0[b * f + a] = x.0[(b - 1) * f + a];
            }
        }
        let top = &x.0[(e - 1) * f..e * f];
        if top.iter().any(|&c| c != 0) {
            for b in 0..e {
                let p = self.unram_mul(top, &self.h[b][..f]);
                for a in 0..f {
                    z.0[b * f + a] = z.0[b * f + a].wrapping_sub(p[a]);
                }
            }
        }
        z
    }

    /// Exact division by `pi`; the argument must have positive valuation.
    /// The top bit of each touched coordinate becomes unknown, i.e. the
    /// result is only meaningful modulo `pi^{63e}`.
    pub fn div_pi(&self, x: &Int) -> Int {
        let (f, e) = (self.f, self.e);
        debug_assert!(x.0[..f].iter().all(|&c| c & 1 == 0));
        let mut rest = Int::ZERO;
        for b in 1..e {
            for a in 0..f {
                rest.0[(b - 1) * f + a] = x.0[b * f + a];
            }
        }
        // x_0 / pi = (x_0 / 2) * pi^{e-1} / eta
        let mut half = Int::ZERO;
        for a in 0..f {
            half.0[(e - 1) * f + a] = ((x.0[a] as i64) >> 1) as u64;
        }
        let shifted = self.mul(&half, &self.eta_inv);
        self.add(&rest, &shifted)
    }

    pub fn div_pi_pow(&self, x: &Int, k: u32) -> Int {
        let mut y = *x;
        for _ in 0..k {
            y = self.div_pi(&y);
        }
        y
    }

    pub fn mul_pi_pow(&self, x: &Int, k: u32) -> Int {
        let mut y = *x;
        for _ in 0..k {
            y = self.mul_pi(&y);
        }
        y
    }

    /// `pi`-adic valuation, `None` when every coordinate is zero.
    pub fn ord(&self, x: &Int) -> Option<u32> {
        let (f, e) = (self.f, self.e);
        let mut best: Option<u32> = None;
        for b in 0..e {
            for a in 0..f {
                let c = x.0[b * f + a];
                if c != 0 {
                    let v = e as u32 * c.trailing_zeros() + b as u32;
                    best = Some(best.map_or(v, |w| w.min(v)));
                }
            }
        }
        best
    }

    /// Number of bits of the coordinate at `pi`-degree `b` that survive
    /// reduction modulo `pi^digits`.
    pub fn coord_bits(&self, b: usize, digits: u32) -> u32 {
        let e = self.e as u32;
        let b = b as u32;
        if digits <= b {
            0
        } else {
            ((digits - b).div_ceil(e)).min(64)
        }
    }

    /// Canonical reduction modulo `pi^digits`.
    pub fn truncate(&self, x: &Int, digits: u32) -> Int {
        let f = self.f;
        let mut z = Int::ZERO;
        for b in 0..self.e {
            let bits = self.coord_bits(b, digits);
            let mask = if bits >= 64 { u64::MAX } else { (1u64 << bits) - 1 };
            for a in 0..f {
                z.0[b * f + a] = x.0[b * f + a] & mask;
            }
        }
        z
    }

    /// Image in the residue field as a bit mask over `1, w, ..., w^{f-1}`.
    pub fn residue(&self, x: &Int) -> u32 {
        let mut r = 0u32;
        for a in 0..self.f {
            r |= ((x.0[a] & 1) as u32) << a;
        }
        r
    }

    /// Teichmuller-free lift: coordinates in `{0, 1}`.
    pub fn lift_residue(&self, r: u32) -> Int {
        let mut x = Int::ZERO;
        for a in 0..self.f {
            x.0[a] = ((r >> a) & 1) as u64;
        }
        x
    }

    /// Residue field multiplication, for the inverse seed.
    fn residue_mul(&self, x: u32, y: u32) -> u32 {
        let mut p = self.unram_mul(&self.lift_residue(x).0[..self.f], &self.lift_residue(y).0[..self.f]);
        for c in p.iter_mut() {
            *c &= 1;
        }
        let mut r = 0;
        for a in 0..self.f {
            r |= (p[a] as u32) << a;
        }
        r
    }

    /// Inverse of a unit by Newton iteration `y <- y (2 - x y)`.
    pub fn inv_unit(&self, x: &Int) -> Int {
        let r = self.residue(x);
        debug_assert!(r != 0, "inverting a non-unit");
        let size = 1u32 << self.f;
        let r_inv = (1..size)
            .find(|&s| self.residue_mul(r, s) == 1)
            .expect("residue field element has an inverse");
        let mut y = self.lift_residue(r_inv);
        let one = Int::constant(1);
        for _ in 0..16 {
            let t = self.sub(&one, &self.mul(x, &y));
            match self.ord(&t) {
                None => break,
                Some(v) if v >= 62 * self.e as u32 => break,
                _ => {}
            }
            y = self.mul(&y, &self.add(&one, &t));
        }
        y
    }

    pub fn pow(&self, x: &Int, mut k: u64) -> Int {
        let mut base = *x;
        let mut acc = Int::constant(1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(v: &[i64]) -> [u64; MAX_DEGREE] {
        let mut out = [0u64; MAX_DEGREE];
        for (i, &c) in v.iter().enumerate() {
            out[i] = c as u64;
        }
        out
    }

    fn sqrt2_tower() -> Tower {
        // g(w) = w - 1 is the trivial extension; h(pi) = pi^2 - 2
        Tower::new(1, 2, coeffs(&[1]), vec![coeffs(&[-2]), coeffs(&[0])])
    }

    #[test]
    fn pi_squared_is_two() {
        let t = sqrt2_tower();
        let mut pi = Int::ZERO;
        pi.0[1] = 1;
        let sq = t.mul(&pi, &pi);
        assert_eq!(sq, Int::constant(2));
        assert_eq!(t.ord(&sq), Some(2));
        assert_eq!(t.mul_pi(&pi), Int::constant(2));
        assert_eq!(t.div_pi(&Int::constant(2)), pi);
    }

    #[test]
    fn inverse_of_unit() {
        let t = sqrt2_tower();
        let mut x = Int::constant(3);
        x.0[1] = 5;
        let y = t.inv_unit(&x);
        assert_eq!(t.truncate(&t.mul(&x, &y), 100), Int::constant(1));
    }

    #[test]
    fn truncation_widths() {
        let t = sqrt2_tower();
        // pi^5: coordinate 0 keeps 3 bits (2^0..2^2 -> digits 0,2,4), coordinate 1 keeps 2 bits
        assert_eq!(t.coord_bits(0, 5), 3);
        assert_eq!(t.coord_bits(1, 5), 2);
        assert_eq!(t.coord_bits(1, 1), 0);
    }
}
