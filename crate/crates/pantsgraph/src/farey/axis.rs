//! Invariant bi-infinite paths for hyperbolic matrices.

use super::{distance, geodesic, FareyError, Slope, Unimodular};

/// A `(2*window + 1)`-vertex segment of a bi-infinite Farey path invariant
/// under `m` up to an index shift.
///
/// The segment is centered on a vertex of minimal displacement `d(s, m s)`;
/// the path is the union of `m`-translates of one geodesic from the center
/// to its image, so invariance holds by construction. Every subsegment of
/// length at most 8 is checked to be geodesic against [`distance`], and the
/// construction is rejected if the check fails. Calling with a larger
/// window extends the same line on both ends.
pub fn periodic_axis(m: &Unimodular, window: u32) -> Result<Vec<Slope>, FareyError> {
    if !m.is_hyperbolic() {
        return Err(FareyError::NotHyperbolic(m.trace()));
    }
    let base = minimal_displacement_vertex(m)?;
    if window == 0 {
        return Ok(vec![base]);
    }
    let segment = geodesic(base, m.apply(base));
    let period = (segment.len() - 1) as i64;
    debug_assert!(period >= 1);

    // Vertex at global index k: write k = j*period + i with 0 <= i < period,
    // then it is m^j applied to segment[i].
    let vertex_at = |k: i64| -> Result<Slope, FareyError> {
        let j = k.div_euclid(period);
        let i = k.rem_euclid(period) as usize;
        let mut s = segment[i];
        let step = if j >= 0 { *m } else { m.inverse() };
        for _ in 0..j.abs() {
            s = step.apply(s);
        }
        Ok(s)
    };

    let w = i64::from(window);
    let mut axis = Vec::with_capacity(2 * window as usize + 1);
    for k in -w..=w {
        axis.push(vertex_at(k)?);
    }

    for pair in axis.windows(2) {
        if !super::is_farey_edge(pair[0], pair[1]) {
            return Err(FareyError::AxisValidation(format!(
                "consecutive vertices {} and {} are not adjacent",
                pair[0], pair[1]
            )));
        }
    }
    validate_local_geodesy(&axis)?;
    Ok(axis)
}

/// Search for a vertex minimizing `d(s, m s)`, starting from small slopes
/// and repeatedly moving to the best vertex on the geodesic toward the
/// image. Ties break toward the smaller slope in `(q, p)` order.
fn minimal_displacement_vertex(m: &Unimodular) -> Result<Slope, FareyError> {
    let mut best = Slope::INFINITY;
    let mut best_d = displacement(m, best);
    for s in super::oracle::vertices(3) {
        let d = displacement(m, s);
        if d < best_d || (d == best_d && s < best) {
            best = s;
            best_d = d;
        }
    }
    for _ in 0..64 {
        let mut improved = false;
        for s in geodesic(best, m.apply(best)) {
            let d = displacement(m, s);
            if d < best_d {
                best = s;
                best_d = d;
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    Ok(best)
}

fn displacement(m: &Unimodular, s: Slope) -> u32 {
    distance(s, m.apply(s))
}

/// Every subsegment of length at most 8 must realise the Farey distance
/// between its endpoints.
fn validate_local_geodesy(axis: &[Slope]) -> Result<(), FareyError> {
    for len in 2..=8usize.min(axis.len().saturating_sub(1)) {
        for win in axis.windows(len + 1) {
            let d = distance(win[0], win[len]);
            if d != len as u32 {
                return Err(FareyError::AxisValidation(format!(
                    "subpath {} .. {} has length {} but distance {}",
                    win[0],
                    win[len],
                    len,
                    d
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_parabolic() {
        let shear = Unimodular::new(1, 1, 0, 1).unwrap();
        assert!(matches!(
            periodic_axis(&shear, 2),
            Err(FareyError::NotHyperbolic(2))
        ));
    }

    #[test]
    fn window_zero_is_single_vertex() {
        let m = Unimodular::new(3, -1, 1, 0).unwrap();
        assert_eq!(periodic_axis(&m, 0).unwrap().len(), 1);
    }

    #[test]
    fn trace_three_axis_is_consecutive_convergents() {
        let m = Unimodular::new(3, -1, 1, 0).unwrap();
        let axis = periodic_axis(&m, 2).unwrap();
        assert_eq!(axis.len(), 5);
        for pair in axis.windows(2) {
            assert!(crate::farey::is_farey_edge(pair[0], pair[1]));
        }
        // Invariance up to shift: applying m maps axis[k] to axis[k + L].
        let l = {
            let base = axis[2];
            distance(base, m.apply(base)) as usize
        };
        for k in 0..axis.len() - l {
            assert_eq!(m.apply(axis[k]), axis[k + l]);
        }
    }

    #[test]
    fn larger_window_extends_both_ends() {
        let m = Unimodular::new(3, -1, 1, 0).unwrap();
        let small = periodic_axis(&m, 2).unwrap();
        let large = periodic_axis(&m, 4).unwrap();
        assert_eq!(&large[2..7], &small[..]);
    }

    #[test]
    fn axis_of_det_minus_one_hyperbolic() {
        let m = Unimodular::new(4, 1, 3, 1).unwrap();
        assert_eq!(m.det(), 1);
        let axis = periodic_axis(&m, 3).unwrap();
        assert_eq!(axis.len(), 7);
    }
}
