//! The finite rings `O / pi^k O`, with residues packed into integers.
//!
//! Coordinate `(a, b)` of a residue keeps `ceil((k - b) / e)` bits; the
//! fields are laid out back to back, so the packed keys of `O / pi^k` are
//! exactly `0 .. 2^{f k}`. Addition is coordinate-wise, which lets packed
//! keys be added with a carry-isolating SWAR trick.

use super::int::Tower;
use super::{DyadicField, FieldElement, Int};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
struct Slot {
    coord: usize,
    shift: u32,
    bits: u32,
}

/// Largest ring handed out; larger ones would not be enumerable anyway.
pub(crate) const MAX_RESIDUE_BITS: u32 = 40;

/// Bit layout of packed residues modulo `pi^digits`, independent of any
/// field handle.
#[derive(Clone, Debug)]
pub(crate) struct Packing {
    digits: u32,
    slots: Vec<Slot>,
    total_bits: u32,
    high: u64,
    /// Bits of the slots at `pi`-degree 0; a residue is a unit iff one of
    /// their lowest bits is set.
    unit_probe: u64,
}

impl Packing {
    pub fn new(t: &Tower, digits: u32) -> Result<Packing> {
        let total_bits = t.f as u32 * digits;
        if total_bits > MAX_RESIDUE_BITS {
            return Err(Error::BudgetExceeded {
                states: 1u128 << total_bits.min(127),
                budget: 1u128 << MAX_RESIDUE_BITS,
            });
        }
        let mut slots = Vec::new();
        let mut shift = 0;
        let mut high = 0u64;
        let mut unit_probe = 0u64;
        for b in 0..t.e {
            let bits = t.coord_bits(b, digits);
            if bits == 0 {
                continue;
            }
            for a in 0..t.f {
                slots.push(Slot {
                    coord: b * t.f + a,
                    shift,
                    bits,
                });
                high |= 1u64 << (shift + bits - 1);
                if b == 0 {
                    unit_probe |= 1u64 << shift;
                }
                shift += bits;
            }
        }
        debug_assert_eq!(shift, total_bits);
        Ok(Packing {
            digits,
            slots,
            total_bits,
            high,
            unit_probe,
        })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn size(&self) -> u64 {
        1u64 << self.total_bits
    }

    pub fn pack(&self, x: &Int) -> u64 {
        let mut key = 0u64;
        for s in &self.slots {
            let mask = (1u64 << s.bits) - 1;
            key |= (x.0[s.coord] & mask) << s.shift;
        }
        key
    }

    pub fn unpack(&self, key: u64) -> Int {
        let mut x = Int::ZERO;
        for s in &self.slots {
            x.0[s.coord] = (key >> s.shift) & ((1u64 << s.bits) - 1);
        }
        x
    }

    #[inline]
    pub fn add(&self, x: u64, y: u64) -> u64 {
        let low = !self.high;
        ((x & low) + (y & low)) ^ ((x ^ y) & self.high)
    }

    #[inline]
    pub fn is_unit(&self, key: u64) -> bool {
        key & self.unit_probe != 0
    }
}

/// The ring `O / pi^k` of a field, with packed keys `0 .. 2^{fk}`.
#[derive(Clone, Debug)]
pub struct ResidueRing {
    field: DyadicField,
    packing: Packing,
}

impl ResidueRing {
    pub fn new(field: &DyadicField, digits: u32) -> Result<ResidueRing> {
        Ok(ResidueRing {
            field: field.clone(),
            packing: Packing::new(field.tower(), digits)?,
        })
    }

    pub fn field(&self) -> &DyadicField {
        &self.field
    }

    pub fn digits(&self) -> u32 {
        self.packing.digits
    }

    /// Number of residues, `(2^f)^k`.
    pub fn size(&self) -> u64 {
        self.packing.size()
    }

    pub(crate) fn pack(&self, x: &Int) -> u64 {
        self.packing.pack(x)
    }

    pub(crate) fn unpack(&self, key: u64) -> Int {
        self.packing.unpack(key)
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        self.packing.add(x, y)
    }

    pub fn is_unit(&self, key: u64) -> bool {
        self.packing.is_unit(key)
    }

    /// Packed residue of an integral element.
    pub fn key_of(&self, a: &FieldElement) -> Result<u64> {
        Ok(self.pack(&self.field.integral_residue(a, self.digits())?))
    }

    /// The canonical representative of a packed residue.
    pub fn element(&self, key: u64) -> FieldElement {
        self.field.from_exact_int(&self.unpack(key))
    }
}

/// One representative per class of `O / pi^k`, or of its unit group when
/// `units_only` is set, in packed-key order.
pub fn enumerate_residues(
    field: &DyadicField,
    k: u32,
    units_only: bool,
) -> Result<impl Iterator<Item = FieldElement>> {
    if k > field.precision() {
        return Err(Error::PrecisionTooSmall {
            needed: k,
            have: field.precision(),
        });
    }
    let ring = ResidueRing::new(field, k)?;
    Ok((0..ring.size()).filter_map(move |key| {
        (!units_only || ring.is_unit(key)).then(|| ring.element(key))
    }))
}
