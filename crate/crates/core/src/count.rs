use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A non-negative count that may be infinite.
///
/// Every restricted edge-connectivity takes values here: when no
/// qualifying cut exists the value is `Infinity`. `Infinity` compares
/// above every finite value, so `min` behaves as expected.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum ExtendedCount {
    Finite(u64),
    #[default]
    Infinity,
}

impl ExtendedCount {
    pub const ZERO: Self = ExtendedCount::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedCount::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedCount::Finite(v) => Some(v),
            ExtendedCount::Infinity => None,
        }
    }
}

impl From<u64> for ExtendedCount {
    fn from(v: u64) -> Self {
        ExtendedCount::Finite(v)
    }
}

impl PartialOrd for ExtendedCount {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedCount {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedCount::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinity) => Ordering::Less,
            (Infinity, Finite(_)) => Ordering::Greater,
            (Infinity, Infinity) => Ordering::Equal,
        }
    }
}

impl Add for ExtendedCount {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ExtendedCount::Finite(a), ExtendedCount::Finite(b)) => ExtendedCount::Finite(a + b),
            _ => ExtendedCount::Infinity,
        }
    }
}

/// Scaling by a non-negative integer; `Infinity * 0` is zero, `Infinity * c` is
/// `Infinity` for `c > 0`.
impl Mul<u64> for ExtendedCount {
    type Output = Self;

    fn mul(self, rhs: u64) -> Self {
        match self {
            ExtendedCount::Finite(a) => ExtendedCount::Finite(a * rhs),
            ExtendedCount::Infinity if rhs == 0 => ExtendedCount::ZERO,
            ExtendedCount::Infinity => ExtendedCount::Infinity,
        }
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedCount::Finite(v) => write!(f, "{v}"),
            ExtendedCount::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtendedCount {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "Infinity" | "infinity" => Ok(ExtendedCount::Infinity),
            other => other
                .parse::<u64>()
                .map(ExtendedCount::Finite)
                .map_err(|e| format!("invalid count {other:?}: {e}")),
        }
    }
}

// Finite values serialize as JSON numbers, infinity as the string "inf".
impl Serialize for ExtendedCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedCount::Finite(v) => serializer.serialize_u64(*v),
            ExtendedCount::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CountVisitor;

        impl Visitor<'_> for CountVisitor {
            type Value = ExtendedCount;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                Ok(ExtendedCount::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
                u64::try_from(v)
                    .map(ExtendedCount::Finite)
                    .map_err(|_| E::custom("negative count"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(CountVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_exceeds_every_finite() {
        assert!(ExtendedCount::Infinity > ExtendedCount::Finite(u64::MAX));
        assert_eq!(
            ExtendedCount::Infinity.min(ExtendedCount::Finite(7)),
            ExtendedCount::Finite(7)
        );
    }

    #[test]
    #[allow(clippy::erasing_op)]
    fn arithmetic_propagates_infinity() {
        assert_eq!(ExtendedCount::Infinity * 3, ExtendedCount::Infinity);
        assert_eq!(ExtendedCount::Infinity * 0, ExtendedCount::ZERO);
        assert_eq!(ExtendedCount::Finite(4) * 5, ExtendedCount::Finite(20));
        assert_eq!(
            ExtendedCount::Finite(1) + ExtendedCount::Infinity,
            ExtendedCount::Infinity
        );
    }

    #[test]
    fn json_uses_inf_string() {
        let s = serde_json::to_string(&[ExtendedCount::Finite(8), ExtendedCount::Infinity]).unwrap();
        assert_eq!(s, r#"[8,"inf"]"#);
        let back: Vec<ExtendedCount> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vec![ExtendedCount::Finite(8), ExtendedCount::Infinity]);
    }
}
