//! Minimum of a max of squared edge lengths along a segment.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::GeomError;
use crate::geom::{EdgeRef, Instance, Point};
use crate::scalar::Scalar;

/// Exact minimizer and minimum of `t ↦ max_e ‖b_e + t − a_e‖²` over the closed segment `[p, q]`.
///
/// Along `t = p + s(q − p)` every squared length is the same quadratic in `s`
/// plus a term linear in `s`, so the maximum is that quadratic plus the upper
/// envelope of the linear terms. The envelope is walked exactly and each piece
/// is minimized in closed form. Among equal minima the one closest to `p` wins.
pub fn min_envelope_on_segment(
    inst: &Instance,
    edges: &[EdgeRef],
    seg: (&Point, &Point),
) -> Result<(Point, Scalar), GeomError> {
    if edges.is_empty() {
        return Err(GeomError::NoEdges);
    }
    for &e in edges {
        inst.check_edge(e)?;
    }
    let (p, q) = seg;
    let value_at = |t: &Point| edges.iter().map(|&e| inst.sq_len(e, t)).max().unwrap_or_else(Scalar::zero);
    let v = q - p;
    let vv = v.norm2();
    if vv.is_zero() {
        return Ok((p.clone(), value_at(p)));
    }

    // ‖t − d‖² = ‖t‖² + (‖d‖² − 2⟨p, d⟩) + s·(−2⟨v, d⟩)
    let two = Scalar::from_int(2);
    let mut lines: Vec<(Scalar, Scalar)> = edges
        .iter()
        .map(|&e| {
            let d = inst.site(e);
            let c = d.norm2() - &two * p.dot(&d);
            let m = -(&two * v.dot(&d));
            (m, c)
        })
        .collect();
    lines.sort();
    lines.dedup();

    let pv2 = &two * p.dot(&v);
    let zero = Scalar::zero();
    let one = Scalar::one();

    // Current line: maximal at s = 0, steepest among ties.
    let mut cur = 0;
    for i in 1..lines.len() {
        if lines[i].1 > lines[cur].1 || (lines[i].1 == lines[cur].1 && lines[i].0 > lines[cur].0) {
            cur = i;
        }
    }
    let mut start = zero.clone();
    let mut best: Option<(Scalar, Point)> = None;
    loop {
        // Next breakpoint: the earliest crossing by a steeper line.
        let mut next: Option<(Scalar, usize)> = None;
        for (i, (m, c)) in lines.iter().enumerate() {
            if *m <= lines[cur].0 {
                continue;
            }
            let s = (&lines[cur].1 - c) / (m - &lines[cur].0);
            if s < start {
                continue;
            }
            let better = match &next {
                None => true,
                Some((bs, bi)) => s < *bs || (s == *bs && *m > lines[*bi].0),
            };
            if better {
                next = Some((s, i));
            }
        }
        let end = match &next {
            Some((s, _)) if *s < one => s.clone(),
            _ => one.clone(),
        };
        // Minimize vv·s² + (2⟨p,v⟩ + m)·s on [start, end].
        let lin = &pv2 + &lines[cur].0;
        let mut s = -lin / (&two * &vv);
        if s < start {
            s = start.clone();
        } else if s > end {
            s = end.clone();
        }
        let t = p.lerp(q, &s);
        let val = value_at(&t);
        let better = match &best {
            None => true,
            Some((bv, _)) => val < *bv,
        };
        if better {
            best = Some((val, t));
        }
        match next {
            Some((s, i)) if s < one => {
                start = s;
                cur = i;
            }
            _ => break,
        }
    }
    let (val, t) = best.expect("envelope has at least one piece");
    debug_assert!(val.signum() != Ordering::Less);
    Ok((t, val))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn clamped_projection() {
        let inst = Instance::from_ints(&[(2, 0)], &[(0, 0)]).unwrap();
        let (t, v) = min_envelope_on_segment(&inst, &[EdgeRef::new(0, 0)], (&pt(0, 0), &pt(1, 0))).unwrap();
        assert_eq!((t, v), (pt(1, 0), Scalar::one()));
    }

    #[test]
    fn interior_zero() {
        let inst = Instance::from_ints(&[(1, 0)], &[(0, 0)]).unwrap();
        let (t, v) = min_envelope_on_segment(&inst, &[EdgeRef::new(0, 0)], (&pt(0, 0), &pt(3, 0))).unwrap();
        assert_eq!((t, v), (pt(1, 0), Scalar::zero()));
    }

    #[test]
    fn crossover_at_midpoint() {
        let inst = Instance::from_ints(&[(0, 0), (2, 0)], &[(0, 0)]).unwrap();
        let edges = vec![EdgeRef::new(0, 0), EdgeRef::new(1, 0)];
        let (t, v) = min_envelope_on_segment(&inst, &edges, (&pt(0, 0), &pt(2, 0))).unwrap();
        assert_eq!((t, v), (pt(1, 0), Scalar::one()));
    }

    #[test]
    fn offset_segment_and_errors() {
        let inst = Instance::from_ints(&[(0, 0), (2, 0)], &[(0, 0)]).unwrap();
        let edges = vec![EdgeRef::new(0, 0), EdgeRef::new(1, 0)];
        let (t, v) = min_envelope_on_segment(&inst, &edges, (&pt(-3, 2), &pt(5, 2))).unwrap();
        assert_eq!((t, v), (pt(1, 2), Scalar::from_int(5)));
        assert_eq!(min_envelope_on_segment(&inst, &[], (&pt(0, 0), &pt(1, 0))), Err(GeomError::NoEdges));
    }
}
