use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{FareyError, Slope};

/// An integer matrix `[[a, b], [c, d]]` with determinant plus or minus one,
/// acting on slopes by Möbius transformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Unimodular {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Unimodular {
    pub const IDENTITY: Unimodular = Unimodular { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Unimodular, FareyError> {
        let det = (a as i128 * d as i128 - b as i128 * c as i128).try_into()
            .map_err(|_| FareyError::Overflow)?;
        match det {
            1 | -1 => Ok(Unimodular { a, b, c, d }),
            other => Err(FareyError::NotUnimodular(other)),
        }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    /// Hyperbolic as an isometry of the hyperbolic plane: `|trace| >= 3`.
    pub fn is_hyperbolic(&self) -> bool {
        self.trace().abs() >= 3
    }

    /// `canonical((a p + b q) / (c p + d q))`. Preserves Farey edges.
    pub fn apply(&self, s: Slope) -> Slope {
        let (p, q) = (s.numerator() as i128, s.denominator() as i128);
        let np = self.a as i128 * p + self.b as i128 * q;
        let nq = self.c as i128 * p + self.d as i128 * q;
        let np: i64 = np.try_into().expect("Möbius image overflows i64");
        let nq: i64 = nq.try_into().expect("Möbius image overflows i64");
        Slope::new(np, nq).expect("unimodular matrices act without kernel")
    }

    pub fn inverse(&self) -> Unimodular {
        let s = self.det();
        Unimodular { a: s * self.d, b: -s * self.b, c: -s * self.c, d: s * self.a }
    }

    pub fn compose(&self, rhs: &Unimodular) -> Result<Unimodular, FareyError> {
        let mul = |x: i64, y: i64, z: i64, w: i64| -> Result<i64, FareyError> {
            (x as i128 * y as i128 + z as i128 * w as i128)
                .try_into()
                .map_err(|_| FareyError::Overflow)
        };
        Unimodular::new(
            mul(self.a, rhs.a, self.b, rhs.c)?,
            mul(self.a, rhs.b, self.b, rhs.d)?,
            mul(self.c, rhs.a, self.d, rhs.c)?,
            mul(self.c, rhs.b, self.d, rhs.d)?,
        )
    }
}

impl fmt::Display for Unimodular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

/// Parses `a,b,c,d`.
impl FromStr for Unimodular {
    type Err = FareyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || FareyError::ParseMatrix(text.to_string());
        let parts: Vec<i64> = text
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let [a, b, c, d]: [i64; 4] = parts.try_into().map_err(|_| bad())?;
        Unimodular::new(a, b, c, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::is_farey_edge;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn apply_examples() {
        let id = Unimodular::IDENTITY;
        assert_eq!(id.apply(s(5, 7)), s(5, 7));
        let shift = Unimodular::new(1, 1, 0, 1).unwrap();
        assert_eq!(shift.apply(Slope::ZERO), s(1, 1));
        let m = Unimodular::new(2, 1, 1, 1).unwrap();
        assert_eq!(m.apply(Slope::INFINITY), s(2, 1));
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(matches!(
            Unimodular::new(2, 0, 0, 2),
            Err(FareyError::NotUnimodular(4))
        ));
    }

    #[test]
    fn inverse_and_compose() {
        let m = Unimodular::new(3, -1, 1, 0).unwrap();
        let mi = m.inverse();
        assert_eq!(m.compose(&mi).unwrap(), Unimodular::IDENTITY);
        let n = Unimodular::new(0, 1, 1, 0).unwrap(); // det -1
        assert_eq!(n.compose(&n.inverse()).unwrap(), Unimodular::IDENTITY);
        assert_eq!(n.inverse().det(), -1);
    }

    #[test]
    fn moebius_preserves_edges() {
        // Random-ish unimodular words applied to small slope pairs.
        let gens = [
            Unimodular::new(1, 1, 0, 1).unwrap(),
            Unimodular::new(1, 0, 1, 1).unwrap(),
            Unimodular::new(0, 1, 1, 0).unwrap(),
        ];
        let mut ms = vec![Unimodular::IDENTITY];
        for i in 0..100usize {
            let prev = *ms.last().unwrap();
            ms.push(prev.compose(&gens[i % 3]).unwrap());
        }
        let verts = crate::farey::oracle::vertices(3);
        for m in &ms {
            for &a in &verts {
                for &b in &verts {
                    assert_eq!(is_farey_edge(a, b), is_farey_edge(m.apply(a), m.apply(b)));
                }
            }
        }
    }
}
