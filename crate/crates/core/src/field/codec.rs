//! JSON encoding of field elements.
//!
//! Over `Q_2` elements print as integers or `"p/q"` strings. In general
//! they are objects `{"val": v, "unit": [[coef, wdeg, pideg], ...]}`
//! listing the nonzero coordinates of the unit part, with an optional
//! `"prec"` when fewer than `N` digits are known.

use serde_json::{json, Value};

use super::{DyadicField, FieldElement, Int};
use crate::error::{Error, Result};

fn parse_i64(s: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

/// Accepts `n` or `b^t`.
fn parse_power(s: &str) -> Result<i64> {
    let s = s.trim();
    if let Some((base, exp)) = s.split_once('^') {
        let base = parse_i64(base)?;
        let exp: u32 = exp
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
        base.checked_pow(exp)
            .ok_or_else(|| Error::Parse(format!("denominator overflows: {s:?}")))
    } else {
        parse_i64(s)
    }
}

impl DyadicField {
    /// Parses `"m"`, `"p/q"`, where either side may be a power `"b^t"`.
    pub fn parse_rational(&self, s: &str) -> Result<FieldElement> {
        match s.split_once('/') {
            None => Ok(self.from_i64(parse_power(s)?)),
            Some((p, q)) => self.from_rational(parse_power(p)?, parse_power(q)?),
        }
    }

    pub fn element_from_json(&self, v: &Value) -> Result<FieldElement> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(|n| self.from_i64(n))
                .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
            Value::String(s) => self.parse_rational(s),
            Value::Object(map) => {
                let val = map
                    .get("val")
                    .and_then(Value::as_i64)
                    .ok_or_else(|| Error::Parse("element object needs integer \"val\"".into()))?;
                let terms = map
                    .get("unit")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("element object needs array \"unit\"".into()))?;
                let prec = match map.get("prec") {
                    None => self.precision(),
                    Some(p) => p
                        .as_u64()
                        .map(|p| p as u32)
                        .ok_or_else(|| Error::Parse("\"prec\" must be a positive integer".into()))?,
                };
                let (f, e) = (self.f() as u64, self.e() as u64);
                let mut x = Int::ZERO;
                for term in terms {
                    let t = term
                        .as_array()
                        .filter(|t| t.len() == 3)
                        .ok_or_else(|| Error::Parse(format!("bad unit term {term}")))?;
                    let coef = t[0]
                        .as_i64()
                        .ok_or_else(|| Error::Parse(format!("bad coefficient in {term}")))?;
                    let (a, b) = match (t[1].as_u64(), t[2].as_u64()) {
                        (Some(a), Some(b)) if a < f && b < e => (a, b),
                        _ => return Err(Error::Parse(format!("bad monomial degrees in {term}"))),
                    };
                    let idx = (b * f + a) as usize;
                    x.0[idx] = x.0[idx].wrapping_add(coef as u64);
                }
                let t = self.tower();
                match t.ord(&t.truncate(&x, prec)) {
                    None => Err(Error::Parse("unit part vanishes at the stated precision".into())),
                    Some(k) if k >= prec => {
                        Err(Error::Parse("unit part vanishes at the stated precision".into()))
                    }
                    Some(k) => {
                        let unit = t.div_pi_pow(&t.truncate(&x, prec), k);
                        Ok(self.from_unit_int(val + k as i64, &unit, prec - k))
                    }
                }
            }
            _ => Err(Error::Parse(format!("cannot read an element from {v}"))),
        }
    }

    fn signed_coord(&self, c: u64, bits: u32) -> i64 {
        if bits >= 64 {
            return c as i64;
        }
        if bits > 0 && c >= 1u64 << (bits - 1) {
            c as i64 - (1i64 << bits)
        } else {
            c as i64
        }
    }

    pub fn element_to_json(&self, a: &FieldElement) -> Value {
        let Some(s) = &a.0 else {
            return json!(0);
        };
        let t = self.tower();
        if self.f() == 1 && self.e() == 1 && s.prec == self.precision() && s.prec < 63 {
            let u = self.signed_coord(s.unit.0[0], s.prec);
            if s.val >= 0 && s.val + s.prec as i64 <= 62 {
                return json!(u << s.val);
            }
            if s.val < 0 && -s.val <= 62 {
                return json!(format!("{}/{}", u, 1i64 << -s.val));
            }
        }
        let mut terms = Vec::new();
        for b in 0..t.e {
            let bits = t.coord_bits(b, s.prec);
            for a in 0..t.f {
                let c = s.unit.0[b * t.f + a];
                if c != 0 {
                    terms.push(json!([self.signed_coord(c, bits), a, b]));
                }
            }
        }
        let mut obj = json!({ "val": s.val, "unit": terms });
        if s.prec != self.precision() {
            obj["prec"] = json!(s.prec);
        }
        obj
    }

    /// Compact human-readable form used in traces: the `Q_2` shorthand, or
    /// a polynomial in the unramified generator `w` and `π`.
    pub fn display(&self, a: &FieldElement) -> String {
        let v = self.element_to_json(a);
        let (val, terms) = match &v {
            Value::String(s) => return s.clone(),
            Value::Number(n) => return n.to_string(),
            Value::Object(map) => (
                map["val"].as_i64().unwrap_or(0),
                map["unit"].as_array().cloned().unwrap_or_default(),
            ),
            _ => return v.to_string(),
        };
        let coord = |t: &Value, i: usize| t[i].as_i64().unwrap_or(0);
        if let [t] = terms.as_slice() {
            return monomial(coord(t, 0), coord(t, 1), coord(t, 2) + val);
        }
        let mut body = String::new();
        for (i, t) in terms.iter().enumerate() {
            let m = monomial(coord(t, 0), coord(t, 1), coord(t, 2));
            match m.strip_prefix('-') {
                Some(rest) if i > 0 => body.push_str(&format!(" - {rest}")),
                None if i > 0 => body.push_str(&format!(" + {m}")),
                _ => body.push_str(&m),
            }
        }
        match val {
            0 => body,
            1 => format!("π({body})"),
            _ => format!("π^{val}({body})"),
        }
    }
}

/// `c w^a π^b` with unit exponents and coefficients elided.
fn monomial(c: i64, a: i64, b: i64) -> String {
    let mut s = String::new();
    let symbols = a != 0 || b != 0;
    match c {
        1 if symbols => {}
        -1 if symbols => s.push('-'),
        _ => s.push_str(&c.to_string()),
    }
    match a {
        0 => {}
        1 => s.push('w'),
        _ => s.push_str(&format!("w^{a}")),
    }
    match b {
        0 => {}
        1 => s.push('π'),
        _ => s.push_str(&format!("π^{b}")),
    }
    s
}
