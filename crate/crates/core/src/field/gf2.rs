//! The residue field `F_{2^f}`, elements packed as bit masks over the
//! basis `1, w, ..., w^{f-1}`.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ResidueField {
    f: u32,
    /// Defining polynomial mod 2 including the leading bit.
    modulus: u32,
}

impl ResidueField {
    pub fn new(f: u32, modulus: u32) -> Self {
        debug_assert_eq!(32 - modulus.leading_zeros(), f + 1);
        ResidueField { f, modulus }
    }

    pub fn size(&self) -> u32 {
        1 << self.f
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let mut acc: u32 = 0;
        let mut x = x;
        let mut y = y;
        while y != 0 {
            if y & 1 == 1 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x >> self.f & 1 == 1 {
                x ^= self.modulus;
            }
        }
        acc
    }

    pub fn pow(&self, x: u32, mut k: u64) -> u32 {
        let mut base = x;
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: u32) -> u32 {
        debug_assert!(x != 0);
        self.pow(x, (1u64 << self.f) - 2)
    }

    /// Frobenius is a bijection, so every element has a unique square root.
    pub fn sqrt(&self, x: u32) -> u32 {
        let mut r = x;
        for _ in 1..self.f {
            r = self.mul(r, r);
        }
        r
    }

    /// Absolute trace down to `F_2`.
    pub fn trace(&self, x: u32) -> u32 {
        let mut t = 0;
        let mut y = x;
        for _ in 0..self.f {
            t ^= y;
            y = self.mul(y, y);
        }
        debug_assert!(t <= 1);
        t
    }
}

/// Carry-less remainder of `a` modulo `b` over `F_2[x]`.
fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= db {
        a ^= b << (63 - a.leading_zeros() - db);
    }
    a
}

/// Irreducibility over `F_2` by trial division with every polynomial of
/// degree at most half the degree.
pub(crate) fn is_irreducible_mod2(poly: u64) -> bool {
    if poly < 2 {
        return false;
    }
    let deg = 63 - poly.leading_zeros();
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for p in (1u64 << d)..(1u64 << (d + 1)) {
            if poly_rem(poly, p) == 0 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility() {
        assert!(is_irreducible_mod2(0b10)); // x
        assert!(is_irreducible_mod2(0b11)); // x + 1
        assert!(is_irreducible_mod2(0b111)); // x^2 + x + 1
        assert!(!is_irreducible_mod2(0b101)); // (x + 1)^2
        assert!(is_irreducible_mod2(0b1011)); // x^3 + x + 1
        assert!(!is_irreducible_mod2(0b1111)); // (x + 1)(x^2 + x + 1)
    }

    #[test]
    fn f4_arithmetic() {
        let k = ResidueField::new(2, 0b111);
        // w^2 = w + 1
        assert_eq!(k.mul(0b10, 0b10), 0b11);
        for x in 1..4 {
            assert_eq!(k.mul(x, k.inv(x)), 1);
            let s = k.sqrt(x);
            assert_eq!(k.mul(s, s), x);
        }
        assert_eq!(k.trace(1), 0);
        assert_eq!(k.trace(0b10), 1);
        assert_eq!(k.trace(0b11), 1);
    }
}
