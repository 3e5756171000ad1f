//! The Farey graph on slopes.
//!
//! Vertices are reduced rationals `p/q` together with `1/0` (infinity); two
//! slopes `p/q` and `r/s` span an edge exactly when `|p*s - q*r| = 1`. The
//! graph is connected, locally infinite, and every enumeration here is
//! therefore bound-parameterized.
//!
//! Distances are computed by normalizing one endpoint to `1/0` with a
//! unimodular matrix and reading off the nearest-integer continued fraction
//! of the image; the expansion length is the graph distance. The
//! [`oracle`] module provides an independent breadth-first search used to
//! certify this on finite ranges.

mod axis;
mod matrix;
mod slope;

pub mod oracle;

pub use axis::periodic_axis;
pub use matrix::Unimodular;
pub use slope::Slope;

use thiserror::Error;

/// Errors from slope parsing and Farey-graph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FareyError {
    /// `0/0` does not name a slope.
    #[error("0/0 is not a slope")]
    ZeroZero,
    /// Matrix determinant is not plus or minus one.
    #[error("matrix determinant {0} is not \u{b1}1")]
    NotUnimodular(i64),
    /// The operation needs a hyperbolic matrix (|trace| >= 3).
    #[error("matrix with trace {0} is not hyperbolic")]
    NotHyperbolic(i64),
    /// Intermediate values exceeded 64-bit range.
    #[error("integer overflow in Farey computation")]
    Overflow,
    /// Text did not parse as `p/q`.
    #[error("invalid slope syntax: {0:?}")]
    ParseSlope(String),
    /// Text did not parse as `a,b,c,d`.
    #[error("invalid matrix syntax: {0:?}")]
    ParseMatrix(String),
    /// Axis construction failed validation.
    #[error("axis validation failed: {0}")]
    AxisValidation(String),
}

/// Reduce `(p, q)` to the canonical representative of its slope.
///
/// The canonical form has `q >= 0` with the sign carried by `p`, and
/// infinity is `1/0`. Rejects `(0, 0)`.
pub fn canonical_slope(p: i64, q: i64) -> Result<Slope, FareyError> {
    Slope::new(p, q)
}

/// Farey adjacency: `|p_a q_b - q_a p_b| = 1`.
///
/// Symmetric, and false on equal slopes.
pub fn is_farey_edge(a: Slope, b: Slope) -> bool {
    det(a, b).abs() == 1
}

/// The determinant `p_a q_b - q_a p_b` of a pair of slopes, saturating at
/// the i64 range (adjacency only needs `|det| = 1`).
pub fn det(a: Slope, b: Slope) -> i64 {
    let d = a.numerator() as i128 * b.denominator() as i128
        - a.denominator() as i128 * b.numerator() as i128;
    d.clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

/// All Farey neighbors `b` of `a` with `max(|p_b|, q_b) <= bound`,
/// in increasing `(denominator, numerator)` order.
pub fn neighbors(a: Slope, bound: u32) -> Vec<Slope> {
    let bound = i64::from(bound);
    let (p, q) = (a.numerator(), a.denominator());
    // Base solution of p*y - q*x = 1 from the extended Euclidean algorithm,
    // then the two solution families (x0 + t*p, y0 + t*q) for det = +-1.
    let (alpha, beta) = ext_gcd(p, q);
    let mut out = std::collections::BTreeSet::new();
    for (x0, y0) in [(-beta, alpha), (beta, -alpha)] {
        for t in t_range(x0, p, bound).into_iter().flatten() {
            let (x, y) = (x0 + t * p, y0 + t * q);
            if x.abs() <= bound && y.abs() <= bound {
                let s = Slope::new(x, y).expect("unimodular pair is nonzero");
                if s.numerator().abs() <= bound && s.denominator() <= bound {
                    out.insert(s);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Candidate parameter range for one solution family. When `p == 0` the
/// `x` coordinate is fixed and `t` is constrained by the other coordinate;
/// the caller re-checks both bounds.
fn t_range(x0: i64, p: i64, bound: i64) -> Option<std::ops::RangeInclusive<i64>> {
    if p != 0 {
        let lo = (-bound - x0).div_euclid(p).min((bound - x0).div_euclid(p)) - 1;
        let hi = (-bound - x0).div_euclid(p).max((bound - x0).div_euclid(p)) + 1;
        Some(lo..=hi)
    } else {
        // q is then +-1; y = y0 + t*q sweeps all integers.
        Some(-bound - 2..=bound + 2)
    }
}

/// `(alpha, beta)` with `alpha*p + beta*q = gcd(p, q) = 1` for a canonical slope.
fn ext_gcd(p: i64, q: i64) -> (i64, i64) {
    let (mut r0, mut r1) = (p, q);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let k = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - k * r1);
        (s0, s1) = (s1, s0 - k * s1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    if r0 < 0 {
        (-s0, -t0)
    } else {
        (s0, t0)
    }
}

/// Exact distance in the Farey graph.
///
/// One endpoint is moved to `1/0` by a unimodular matrix; the distance to
/// `1/0` is the number of digits in the nearest-integer continued fraction
/// of the image (first digit unrestricted, later digits of absolute value
/// at least 2). Certified against [`oracle`] on finite ranges.
pub fn distance(a: Slope, b: Slope) -> u32 {
    if a == b {
        return 0;
    }
    let m = normalize_to_infinity(a);
    let x = m.apply(b);
    nicf_digits(x.numerator(), x.denominator()).len() as u32
}

/// A geodesic from `a` to `b`: consecutive entries are Farey edges and the
/// length equals [`distance`]. Ties between equally short continuations are
/// broken toward the vertex with smaller denominator, then smaller numerator.
pub fn geodesic(a: Slope, b: Slope) -> Vec<Slope> {
    if a == b {
        return vec![a];
    }
    let m = normalize_to_infinity(a);
    let minv = m.inverse();
    let x = m.apply(b);
    let digits = nicf_digits_tiebroken(x.numerator(), x.denominator(), &minv);
    // Convergents of the minus-continued-fraction: h_k = a_k h_{k-1} - h_{k-2}.
    let mut path = vec![a];
    let (mut pm1, mut qm1) = (1i64, 0i64);
    let (mut p0, mut q0) = (digits[0], 1i64);
    path.push(minv.apply(Slope::new(p0, q0).expect("convergent")));
    for &d in &digits[1..] {
        let p1 = d * p0 - pm1;
        let q1 = d * q0 - qm1;
        (pm1, qm1) = (p0, q0);
        (p0, q0) = (p1, q1);
        path.push(minv.apply(Slope::new(p0, q0).expect("convergent")));
    }
    debug_assert_eq!(*path.last().unwrap(), b);
    path
}

/// Unimodular matrix sending `a` to `1/0`.
fn normalize_to_infinity(a: Slope) -> Unimodular {
    let (p, q) = (a.numerator(), a.denominator());
    let (alpha, beta) = ext_gcd(p, q);
    Unimodular::new(alpha, beta, -q, p).expect("determinant alpha*p + beta*q = 1")
}

/// Nearest-integer continued fraction digits of `p/q` (q >= 1), minus
/// convention: `x = a0 - 1/(a1 - 1/(...))`. Ties round half up.
fn nicf_digits(mut p: i64, mut q: i64) -> Vec<i64> {
    assert!(q >= 1, "finite slope expected");
    let mut digits = Vec::new();
    loop {
        // Nearest integer to p/q, half rounds up.
        let a = (2 * p + q).div_euclid(2 * q);
        let mut r = p - a * q;
        digits.push(a);
        if r == 0 {
            return digits;
        }
        // x' = -q / r, canonicalized to positive denominator.
        let mut np = -q;
        if r < 0 {
            np = -np;
            r = -r;
        }
        (p, q) = (np, r);
    }
}

/// Digits as in [`nicf_digits`], but at exact-half ties both roundings are
/// tried and the one whose next path vertex (mapped back through `minv`)
/// is smaller in `(denominator, numerator)` order wins.
fn nicf_digits_tiebroken(p: i64, q: i64, minv: &Unimodular) -> Vec<i64> {
    assert!(q >= 1);
    let mut digits = Vec::new();
    let (mut p, mut q) = (p, q);
    let (mut pm1, mut qm1) = (1i64, 0i64);
    let (mut pc, mut qc): (Option<i64>, Option<i64>) = (None, None);
    loop {
        let lo = p.div_euclid(q);
        let tie = 2 * (p - lo * q) == q;
        let a = if tie {
            // Both roundings give geodesics; pick by the mapped-back vertex.
            let pick = |d: i64| {
                let (cp, cq) = match (pc, qc) {
                    (Some(x), Some(y)) => (d * x - pm1, d * y - qm1),
                    _ => (d, 1),
                };
                minv.apply(Slope::new(cp, cq).expect("convergent"))
            };
            if pick(lo) <= pick(lo + 1) {
                lo
            } else {
                lo + 1
            }
        } else {
            (2 * p + q).div_euclid(2 * q)
        };
        let mut r = p - a * q;
        digits.push(a);
        // Advance the convergent pair for later tie decisions.
        let (np0, nq0) = match (pc, qc) {
            (Some(x), Some(y)) => (a * x - pm1, a * y - qm1),
            _ => (a, 1),
        };
        if let (Some(x), Some(y)) = (pc, qc) {
            (pm1, qm1) = (x, y);
        }
        (pc, qc) = (Some(np0), Some(nq0));
        if r == 0 {
            return digits;
        }
        let mut np = -q;
        if r < 0 {
            np = -np;
            r = -r;
        }
        (p, q) = (np, r);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(s(2, 4), s(1, 2));
        assert_eq!(s(-3, -6), s(1, 2));
        assert_eq!(s(5, 0), Slope::INFINITY);
        assert_eq!(canonical_slope(0, 0), Err(FareyError::ZeroZero));
        // Idempotent by construction.
        let c = s(-4, 6);
        assert_eq!(Slope::new(c.numerator(), c.denominator()).unwrap(), c);
        assert_eq!((c.numerator(), c.denominator()), (-2, 3));
    }

    #[test]
    fn edge_examples() {
        assert!(is_farey_edge(Slope::ZERO, Slope::INFINITY));
        assert!(is_farey_edge(s(1, 2), s(1, 3)));
        assert!(!is_farey_edge(s(1, 3), s(2, 3)));
        assert!(!is_farey_edge(s(1, 3), s(1, 3)));
    }

    #[test]
    fn neighbors_of_infinity_bound_two() {
        let n = neighbors(Slope::INFINITY, 2);
        let expect: Vec<Slope> = [(-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1)]
            .iter()
            .map(|&(p, q)| s(p, q))
            .collect();
        assert_eq!(n, expect);
    }

    #[test]
    fn neighbors_of_zero_bound_three() {
        // Brute-force oracle: scan every canonical slope in the bound.
        let mut expect: Vec<Slope> = oracle::vertices(3)
            .into_iter()
            .filter(|&b| is_farey_edge(Slope::ZERO, b))
            .collect();
        expect.sort();
        assert_eq!(neighbors(Slope::ZERO, 3), expect);
        assert_eq!(expect.len(), 7); // 1/0, +-1/1, +-1/2, +-1/3
    }

    #[test]
    fn neighbors_bound_zero_empty() {
        assert!(neighbors(Slope::INFINITY, 0).is_empty());
        assert!(neighbors(s(2, 5), 0).is_empty());
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(s(3, 7), s(3, 7)), 0);
        assert_eq!(distance(Slope::ZERO, Slope::INFINITY), 1);
        assert_eq!(distance(Slope::INFINITY, s(5, 2)), 2);
    }

    #[test]
    fn geodesic_examples() {
        assert_eq!(geodesic(s(2, 5), s(2, 5)), vec![s(2, 5)]);
        assert_eq!(geodesic(Slope::ZERO, s(1, 1)), vec![Slope::ZERO, s(1, 1)]);
        let g = geodesic(Slope::INFINITY, s(5, 2));
        assert_eq!(g.len(), 3);
        assert_eq!(g, vec![Slope::INFINITY, s(2, 1), s(5, 2)]);
    }

    #[test]
    fn geodesics_are_edge_paths_of_the_right_length() {
        let verts = oracle::vertices(5);
        for &a in &verts {
            for &b in &verts {
                let g = geodesic(a, b);
                assert_eq!(g.len() as u32, distance(a, b) + 1);
                for w in g.windows(2) {
                    assert!(is_farey_edge(w[0], w[1]), "{} {}", w[0], w[1]);
                }
                assert_eq!(g[0], a);
                assert_eq!(*g.last().unwrap(), b);
            }
        }
    }

    #[test]
    fn distance_matches_certified_oracle_small() {
        let verts = oracle::vertices(4);
        for &a in &verts {
            for &b in &verts {
                let d = oracle::certified_distance(a, b, 16).expect("certified");
                assert_eq!(distance(a, b), d, "pair {a} {b}");
            }
        }
    }

    #[test]
    fn metric_axioms_on_small_sample() {
        let verts = oracle::vertices(3);
        for &a in &verts {
            for &b in &verts {
                assert_eq!(distance(a, b), distance(b, a));
                assert_eq!(distance(a, b) == 0, a == b);
                for &c in &verts {
                    assert!(distance(a, c) <= distance(a, b) + distance(b, c));
                }
            }
        }
    }
}
