use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::FareyError;

/// A vertex of the Farey graph: a reduced rational `p/q` or infinity `1/0`.
///
/// Canonical form: `gcd(|p|, q) = 1`, `q >= 0`, sign carried by `p`, and
/// infinity stored as `1/0`. Construction through [`Slope::new`] enforces
/// this, so equality of slopes is equality of fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    /// Infinity, `1/0`.
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };
    /// Zero, `0/1`.
    pub const ZERO: Slope = Slope { p: 0, q: 1 };

    /// Canonicalize `(p, q)`; rejects `(0, 0)`.
    pub fn new(p: i64, q: i64) -> Result<Slope, FareyError> {
        if p == 0 && q == 0 {
            return Err(FareyError::ZeroZero);
        }
        if q == 0 {
            return Ok(Slope::INFINITY);
        }
        let g = gcd(p.unsigned_abs(), q.unsigned_abs()) as i64;
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub fn numerator(self) -> i64 {
        self.p
    }

    pub fn denominator(self) -> i64 {
        self.q
    }

    pub fn is_infinity(self) -> bool {
        self.q == 0
    }
}

/// Order by `(denominator, numerator)`: the tie-break order used by
/// geodesic construction and by every deterministic enumeration.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.q, self.p).cmp(&(other.q, other.p))
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = FareyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || FareyError::ParseSlope(text.to_string());
        let (p, q) = text.split_once('/').ok_or_else(bad)?;
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if p == 0 && q == 0 {
            return Err(bad());
        }
        Slope::new(p, q)
    }
}

impl From<Slope> for String {
    fn from(s: Slope) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Slope {
    type Error = FareyError;

    fn try_from(text: String) -> Result<Self, Self::Error> {
        text.parse()
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["0/1", "1/0", "-3/7", "22/7"] {
            let s: Slope = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert_eq!("4/6".parse::<Slope>().unwrap().to_string(), "2/3");
        assert!("0/0".parse::<Slope>().is_err());
        assert!("x/1".parse::<Slope>().is_err());
        assert!("7".parse::<Slope>().is_err());
    }
}
