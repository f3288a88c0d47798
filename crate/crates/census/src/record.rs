//! The census record: one curve per row, with model data, point counts,
//! L-polynomial, and isogeny-class assignment.
//!
//! The JSONL schema (one object per line) is part of the external contract:
//! {"id", "family", "q", "p", "quadric", "cubic", "pretty", "N", "a", "L",
//! "iso_class", "iso_size"}, where "q"/"p" are lowercase-hex polynomial
//! masks (hyperelliptic rows only) and "cubic" is the 5-hex-digit mask of
//! the cubic form (trigonal rows only).

use serde::{Deserialize, Serialize};

use crate::forms4::CubicForm4;
use crate::polyf2::PolyF2;
use crate::trig::Quadric;
use crate::zeta::LPolynomial;

/// Model payload of a census entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveModel {
    Hyperelliptic { q: PolyF2, p: PolyF2 },
    Trigonal { quadric: Quadric, cubic: CubicForm4 },
}

/// One census row.
#[derive(Debug, Clone)]
pub struct CurveRecord {
    pub id: u32,
    pub model: CurveModel,
    /// Point counts over F_2, F_4, F_8, F_16, F_32.
    pub n: [i64; 5],
    /// Points of degree exactly 1..=5.
    pub a: [i64; 5],
    pub l: LPolynomial,
    pub iso_class: u32,
    pub iso_size: u32,
}

impl CurveRecord {
    pub fn is_hyperelliptic(&self) -> bool {
        matches!(self.model, CurveModel::Hyperelliptic { .. })
    }

    pub fn family(&self) -> &'static str {
        match self.model {
            CurveModel::Hyperelliptic { .. } => "hyp",
            CurveModel::Trigonal { .. } => "trig",
        }
    }

    /// Quadric label for trigonal rows.
    pub fn quadric_label(&self) -> Option<&'static str> {
        match self.model {
            CurveModel::Trigonal { quadric, .. } => Some(quadric.label()),
            CurveModel::Hyperelliptic { .. } => None,
        }
    }

    /// Human-readable equation(s), using y²+q·y=p or the X,Y,Z,T forms.
    pub fn pretty(&self) -> String {
        match self.model {
            CurveModel::Hyperelliptic { q, p } => {
                if q == PolyF2::ONE {
                    format!("y^2 + y = {p}")
                } else {
                    format!("y^2 + ({q})*y = {p}")
                }
            }
            CurveModel::Trigonal { quadric, cubic } => {
                format!("{} = 0; {} = 0", quadric.form(), cubic)
            }
        }
    }

    pub fn to_row(&self) -> Row {
        let (q, p, quadric, cubic) = match self.model {
            CurveModel::Hyperelliptic { q, p } => (
                Some(format!("{:x}", q.bits())),
                Some(format!("{:x}", p.bits())),
                None,
                None,
            ),
            CurveModel::Trigonal { quadric, cubic } => (
                None,
                None,
                Some(quadric.label().to_string()),
                Some(format!("{:05x}", cubic.bits())),
            ),
        };
        Row {
            id: self.id,
            family: self.family().to_string(),
            q,
            p,
            quadric,
            cubic,
            pretty: self.pretty(),
            n: self.n.to_vec(),
            a: self.a.to_vec(),
            l: self.l.c.to_vec(),
            iso_class: self.iso_class,
            iso_size: self.iso_size,
        }
    }

    pub fn from_row(row: &Row) -> Option<CurveRecord> {
        let model = match row.family.as_str() {
            "hyp" => CurveModel::Hyperelliptic {
                q: PolyF2::new(u64::from_str_radix(row.q.as_deref()?, 16).ok()?),
                p: PolyF2::new(u64::from_str_radix(row.p.as_deref()?, 16).ok()?),
            },
            "trig" => CurveModel::Trigonal {
                quadric: Quadric::from_label(row.quadric.as_deref()?)?,
                cubic: CubicForm4::new(
                    u32::from_str_radix(row.cubic.as_deref()?, 16).ok()?,
                ),
            },
            _ => return None,
        };
        Some(CurveRecord {
            id: row.id,
            model,
            n: row.n.clone().try_into().ok()?,
            a: row.a.clone().try_into().ok()?,
            l: LPolynomial { c: row.l.clone().try_into().ok()? },
            iso_class: row.iso_class,
            iso_size: row.iso_size,
        })
    }
}

/// Serialized form of a census row; field order is the wire order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Row {
    pub id: u32,
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadric: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cubic: Option<String>,
    pub pretty: String,
    #[serde(rename = "N")]
    pub n: Vec<i64>,
    pub a: Vec<i64>,
    #[serde(rename = "L")]
    pub l: Vec<i64>,
    pub iso_class: u32,
    pub iso_size: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CurveRecord {
        CurveRecord {
            id: 1,
            model: CurveModel::Hyperelliptic {
                q: PolyF2::new(0b11001),
                p: PolyF2::new(0b10_0000_0001),
            },
            n: [3, 9, 9, 21, 33],
            a: [3, 3, 2, 3, 6],
            l: LPolynomial { c: [1, 0, 2, 0, 3, 0, 8, 0, 16] },
            iso_class: 7,
            iso_size: 7,
        }
    }

    #[test]
    fn json_round_trip() {
        let rec = sample();
        let line = serde_json::to_string(&rec.to_row()).unwrap();
        assert!(line.contains("\"family\":\"hyp\""));
        assert!(line.contains("\"q\":\"19\""));
        assert!(!line.contains("quadric"));
        let row: Row = serde_json::from_str(&line).unwrap();
        let back = CurveRecord::from_row(&row).unwrap();
        assert_eq!(back.n, rec.n);
        assert_eq!(back.l.c, rec.l.c);
        assert!(matches!(back.model, CurveModel::Hyperelliptic { .. }));
    }

    #[test]
    fn pretty_strings() {
        assert_eq!(sample().pretty(), "y^2 + (x^4 + x^3 + 1)*y = x^9 + 1");
        let trig = CurveRecord {
            model: CurveModel::Trigonal {
                quadric: Quadric::Hyperbolic,
                cubic: CubicForm4::from_monomials(&[(0, 0, 0)]),
            },
            ..sample()
        };
        assert_eq!(trig.pretty(), "X*Y + Z*T = 0; X^3 = 0");
        assert_eq!(trig.to_row().cubic.unwrap(), "00001");
    }
}
