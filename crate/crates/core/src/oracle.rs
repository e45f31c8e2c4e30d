//! Brute-force references, independent of the diagram pipeline.
//!
//! Everything here enumerates: all injections `B ↪ A`, or all candidate
//! optimizers of the full bisector arrangement. Inputs over budget are
//! rejected, never sampled.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::OracleError;
use crate::geom::{EdgeRef, Instance, Line, Point};
use crate::matching::{LexCostVector, Matching};
use crate::polygon::{erode_polygon, ConvexPolygon};
use crate::scalar::Scalar;

/// Largest number of injections an oracle will enumerate.
pub const INJECTION_BUDGET: u128 = 1_000_000;

/// `n! / (n − k)!`, saturating.
pub fn injection_count(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    ((n - k + 1)..=n).fold(1u128, |acc, x| acc.saturating_mul(x as u128))
}

fn check_budget(inst: &Instance) -> Result<(), OracleError> {
    let count = injection_count(inst.n(), inst.k());
    if count > INJECTION_BUDGET {
        Err(OracleError::TooLarge { count, budget: INJECTION_BUDGET })
    } else {
        Ok(())
    }
}

/// Dense ranks of the squared lengths at `t`, indexed `b * n + a`. Lengths are
/// compared as integers after scaling by the common denominator of all coordinates.
fn length_ranks(inst: &Instance, t: &Point) -> Vec<u32> {
    let coords = inst.a().iter().chain(inst.b()).chain(core::iter::once(t)).flat_map(|p| [&p.x, &p.y]);
    let den = coords.fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
    let int = |c: &Scalar| c.numer() * (&den / c.denom());
    let (tx, ty) = (int(&t.x), int(&t.y));
    let mut lens = Vec::with_capacity(inst.n() * inst.k());
    for b in inst.b() {
        let (bx, by) = (int(&b.x) + &tx, int(&b.y) + &ty);
        for a in inst.a() {
            let dx = &bx - int(&a.x);
            let dy = &by - int(&a.y);
            lens.push(&dx * &dx + &dy * &dy);
        }
    }
    let mut sorted: Vec<&BigInt> = lens.iter().collect();
    sorted.sort();
    sorted.dedup();
    lens.iter().map(|l| sorted.binary_search(&l).expect("present") as u32).collect()
}

/// Calls `visit` with every injection, as `a` per `b`.
fn for_each_injection(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    fn go(n: usize, k: usize, used: &mut [bool], cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for a in 0..n {
            if !used[a] {
                used[a] = true;
                cur.push(a);
                go(n, k, used, cur, visit);
                cur.pop();
                used[a] = false;
            }
        }
    }
    go(n, k, &mut vec![false; n], &mut Vec::with_capacity(k), &mut visit);
}

fn as_matching(assign: &[usize]) -> Matching {
    Matching::new(assign.iter().enumerate().map(|(b, &a)| EdgeRef::new(a, b)).collect())
        .expect("injections are matchings")
}

/// `E(t)` by enumerating every injection; the first optimum found is returned.
pub fn brute_force_e(inst: &Instance, t: &Point) -> Result<(Scalar, Matching), OracleError> {
    check_budget(inst)?;
    let n = inst.n();
    let ranks = length_ranks(inst, t);
    let mut best: Option<(u32, Vec<usize>)> = None;
    for_each_injection(n, inst.k(), |assign| {
        let worst = assign.iter().enumerate().map(|(b, &a)| ranks[b * n + a]).max().unwrap_or(0);
        if best.as_ref().map_or(true, |(w, _)| worst < *w) {
            best = Some((worst, assign.to_vec()));
        }
    });
    let (_, assign) = best.expect("k ≤ n");
    let m = as_matching(&assign);
    let value = m.edges().iter().map(|&e| inst.sq_len(e, t)).max().unwrap_or_else(Scalar::zero);
    Ok((value, m))
}

/// Lexicographically smallest decreasing length vector and every injection attaining it.
pub fn brute_force_lex_all(inst: &Instance, t: &Point) -> Result<(LexCostVector, Vec<Matching>), OracleError> {
    check_budget(inst)?;
    let n = inst.n();
    let ranks = length_ranks(inst, t);
    let mut best: Option<Vec<u32>> = None;
    let mut winners: Vec<Vec<usize>> = Vec::new();
    for_each_injection(n, inst.k(), |assign| {
        let mut key: Vec<u32> = assign.iter().enumerate().map(|(b, &a)| ranks[b * n + a]).collect();
        key.sort_by(|x, y| y.cmp(x));
        match best.as_ref().map(|b| key.cmp(b)) {
            None | Some(core::cmp::Ordering::Less) => {
                best = Some(key);
                winners.clear();
                winners.push(assign.to_vec());
            }
            Some(core::cmp::Ordering::Equal) => winners.push(assign.to_vec()),
            Some(core::cmp::Ordering::Greater) => {}
        }
    });
    let matchings: Vec<Matching> = winners.iter().map(|w| as_matching(w)).collect();
    let cost = LexCostVector::from_lengths(matchings[0].edges().iter().map(|&e| inst.sq_len(e, t)).collect());
    Ok((cost, matchings))
}

pub fn brute_force_lex(inst: &Instance, t: &Point) -> Result<LexCostVector, OracleError> {
    Ok(brute_force_lex_all(inst, t)?.0)
}

/// Candidate optimizers of `E` over the plane: every site, every crossing of two
/// bisectors of the full arrangement, and every projection of a site onto a bisector.
pub fn translation_candidates(inst: &Instance) -> Vec<Point> {
    let sites: BTreeSet<Point> = inst.edges().map(|e| inst.site(e)).collect();
    let sites: Vec<Point> = sites.into_iter().collect();
    let mut lines: Vec<Line> = Vec::new();
    for i in 0..sites.len() {
        for j in i + 1..sites.len() {
            if let Some(l) = Line::perpendicular_bisector(&sites[i], &sites[j]) {
                lines.push(l);
            }
        }
    }
    lines.sort();
    lines.dedup();
    let mut out: BTreeSet<Point> = sites.iter().cloned().collect();
    for (i, l) in lines.iter().enumerate() {
        for m in &lines[i + 1..] {
            if let Some(p) = l.intersect(m) {
                out.insert(p);
            }
        }
        for s in &sites {
            out.insert(l.project(s));
        }
    }
    out.into_iter().collect()
}

/// Minimum of `E` over the plane by exhaustive candidate evaluation.
/// Ties go to the lexicographically smallest translation.
pub fn oracle_optimal_translation(inst: &Instance) -> Result<(Point, Scalar), OracleError> {
    check_budget(inst)?;
    let mut best: Option<(Scalar, Point)> = None;
    for t in translation_candidates(inst) {
        let (v, _) = brute_force_e(inst, &t)?;
        if best.as_ref().map_or(true, |(bv, _)| v < *bv) {
            best = Some((v, t));
        }
    }
    let (v, t) = best.expect("at least one site");
    Ok((t, v))
}

/// Lattice points `lo + (i·w/r, j·h/r)`, `0 ≤ i, j ≤ r`, over the bounding box
/// of `region`, restricted to `region`. Lattices for `r` and `2r` nest.
pub fn grid_points(region: &ConvexPolygon, resolution: u32) -> Vec<Point> {
    let r = resolution.max(1) as i64;
    let (lo, hi) = region.bounding_box();
    let dx = (&hi.x - &lo.x) / Scalar::from_int(r);
    let dy = (&hi.y - &lo.y) / Scalar::from_int(r);
    let mut out = Vec::new();
    for i in 0..=r {
        for j in 0..=r {
            let p = Point::new(&lo.x + &dx * Scalar::from_int(i), &lo.y + &dy * Scalar::from_int(j));
            if region.contains(&p) {
                out.push(p);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Lower bound on the cover radius: max of brute-force `E` over [`grid_points`] of `Q̂`.
pub fn grid_cover_radius(inst: &Instance, q: &ConvexPolygon, resolution: u32) -> Result<Scalar, OracleError> {
    check_budget(inst)?;
    let region = erode_polygon(q, inst.b()).ok_or(OracleError::EmptyRegion)?;
    let mut best = Scalar::zero();
    for p in grid_points(&region, resolution) {
        let (v, _) = brute_force_e(inst, &p)?;
        best = best.max(v);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn e_examples() {
        let inst = Instance::from_ints(&[(0, 0), (10, 0)], &[(0, 0), (1, 0)]).unwrap();
        assert_eq!(brute_force_e(&inst, &pt(0, 0)).unwrap().0, Scalar::from_int(81));
        let k1 = Instance::from_ints(&[(5, 5), (1, -1), (-3, 0)], &[(0, 0)]).unwrap();
        assert_eq!(brute_force_e(&k1, &pt(0, 0)).unwrap().0, Scalar::from_int(2));
    }

    #[test]
    fn budget_is_enforced() {
        let a: Vec<(i64, i64)> = (0..12).map(|i| (i, i * i)).collect();
        let b: Vec<(i64, i64)> = (0..7).map(|i| (i, -i)).collect();
        let inst = Instance::from_ints(&a, &b).unwrap();
        assert!(matches!(brute_force_e(&inst, &pt(0, 0)), Err(OracleError::TooLarge { .. })));
        assert_eq!(injection_count(6, 3), 120);
    }

    #[test]
    fn lex_refines_ties() {
        // Two bottleneck matchings share the longest edge; lex prefers the shorter rest.
        let inst = Instance::from_ints(&[(0, 0), (10, 0), (1, 0)], &[(0, 0), (6, 0)]).unwrap();
        let (cost, all) = brute_force_lex_all(&inst, &pt(0, 0)).unwrap();
        assert_eq!(cost.values(), &[Scalar::from_int(16), Scalar::zero()]);
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn optimal_translation_hand_case() {
        let inst = Instance::from_ints(&[(0, 0), (2, 0)], &[(0, 0), (3, 0)]).unwrap();
        let (t, v) = oracle_optimal_translation(&inst).unwrap();
        assert_eq!(t, Point::new(Scalar::ratio(-1, 2), Scalar::zero()));
        assert_eq!(v, Scalar::ratio(1, 4));
        let overlay = Instance::from_ints(&[(0, 0), (1, 4), (7, 7)], &[(10, 10), (11, 14)]).unwrap();
        assert_eq!(oracle_optimal_translation(&overlay).unwrap().1, Scalar::zero());
    }

    #[test]
    fn grid_examples() {
        let inst = Instance::from_ints(&[(0, 0)], &[(0, 0)]).unwrap();
        let sq = ConvexPolygon::rectangle(Scalar::from_int(-1), Scalar::from_int(-1), Scalar::one(), Scalar::one());
        assert_eq!(grid_cover_radius(&inst, &sq, 3).unwrap(), Scalar::from_int(2));
        assert_eq!(grid_cover_radius(&inst, &sq, 1).unwrap(), Scalar::from_int(2));
        let coarse = grid_points(&sq, 8);
        let fine = grid_points(&sq, 16);
        assert!(coarse.iter().all(|p| fine.contains(p)));
        let wide = Instance::from_ints(&[(0, 0), (9, 0)], &[(0, 0), (9, 0)]).unwrap();
        assert_eq!(grid_cover_radius(&wide, &sq, 4), Err(OracleError::EmptyRegion));
    }
}
