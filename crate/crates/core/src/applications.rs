//! Queries answered from a labeled diagram: optimal translation, minimax
//! (bottleneck) paths between translations, and the cover radius of a convex polygon.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::diagram::{Diagram, LabelMode, LabeledDiagram, Selection};
use crate::envelope::min_envelope_on_segment;
use crate::error::ArrangementError;
use crate::geom::{Instance, Point};
use crate::matching::Matching;
use crate::polygon::{closest_point_in_polygon, erode_polygon, ConvexPolygon};
use crate::scalar::Scalar;

/// A translation with its optimal matching and squared bottleneck value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Translation {
    pub t: Point,
    pub matching: Matching,
    pub value: Scalar,
}

/// A polyline between two translations and the maximum of `E` along it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathResult {
    pub polyline: Vec<Point>,
    /// `E` at each polyline vertex.
    pub values: Vec<Scalar>,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    pub value: Scalar,
    pub witness: Point,
    /// The region `Q̂` of translations placing `B` inside `Q`.
    pub region: ConvexPolygon,
}

fn labeled(inst: &Instance, selection: Selection, extra: &[Point]) -> LabeledDiagram {
    LabeledDiagram::new(Diagram::build(inst, selection, extra), LabelMode::Recompute)
        .expect("recompute labeling does not fail")
}

/// Global minimizer of `E`.
pub fn optimal_translation(inst: &Instance) -> Translation {
    optimal_translation_in(&labeled(inst, Selection::Used, &[]))
}

/// Global minimizer of `E` from an existing labeled diagram.
///
/// In each cell the label's longest edge `ab` is fixed, so the cell minimum is
/// at the point of the cell closest to `a − b`. Ties go to the smallest `(x, y)`.
pub fn optimal_translation_in(ld: &LabeledDiagram) -> Translation {
    let inst = ld.instance();
    let arr = ld.arrangement();
    let mut best: Option<(Scalar, Point, usize)> = None;
    for (c, label) in ld.cells().iter().enumerate() {
        let t0 = inst.site(label.longest);
        let t = closest_point_in_polygon(&t0, &arr.cell_polygon(c));
        let v = ld.label_cost(c, &t);
        let better = match &best {
            None => true,
            Some((bv, bt, _)) => v < *bv || (v == *bv && t < *bt),
        };
        if better {
            best = Some((v, t, c));
        }
    }
    let (value, t, c) = best.expect("at least one cell");
    Translation { t, matching: ld.cells()[c].matching.clone(), value }
}

/// Minimax path from `t0` to `t1` over a diagram of the used bisectors.
pub fn bottleneck_path(inst: &Instance, t0: &Point, t1: &Point) -> PathResult {
    bottleneck_path_with(inst, t0, t1, Selection::Used)
}

/// As [`bottleneck_path`], choosing which bisectors to build on.
pub fn bottleneck_path_with(inst: &Instance, t0: &Point, t1: &Point, selection: Selection) -> PathResult {
    let ld = labeled(inst, selection, &[t0.clone(), t1.clone()]);
    bottleneck_path_in(&ld, t0, t1).expect("box contains both endpoints")
}

/// Minimax path on the dual graph of `ld`.
///
/// Each bisector edge is weighted by the minimum of `E` along it, found from
/// the label of an incident cell. A Dijkstra search minimizing the largest
/// weight runs from the cells containing `t0` to those containing `t1`; the
/// polyline visits the minimizing point of every crossed edge.
pub fn bottleneck_path_in(ld: &LabeledDiagram, t0: &Point, t1: &Point) -> Result<PathResult, ArrangementError> {
    let inst = ld.instance();
    let arr = ld.arrangement();
    let sources = arr.cells_containing(t0)?;
    let targets = arr.cells_containing(t1)?;
    let nc = arr.cell_count();

    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nc];
    let mut weight: Vec<Option<(Point, Scalar)>> = vec![None; arr.edges().len()];
    for de in arr.dual_edges() {
        let (a, b) = de.cells;
        let e = &arr.edges()[de.edge];
        let seg = (&arr.vertices()[e.from], &arr.vertices()[e.to]);
        let w = min_envelope_on_segment(inst, ld.cells()[a].matching.edges(), seg).expect("labels are nonempty");
        weight[de.edge] = Some(w);
        adj[a].push((b, de.edge));
        adj[b].push((a, de.edge));
    }

    let mut dist: Vec<Option<Scalar>> = vec![None; nc];
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; nc];
    let mut heap = BinaryHeap::new();
    for &s in &sources {
        dist[s] = Some(Scalar::zero());
        heap.push(Reverse((Scalar::zero(), s)));
    }
    let mut reached = None;
    while let Some(Reverse((d, c))) = heap.pop() {
        if dist[c].as_ref() != Some(&d) {
            continue;
        }
        if targets.contains(&c) {
            reached = Some(c);
            break;
        }
        for &(nb, e) in &adj[c] {
            let w = &weight[e].as_ref().expect("weighted").1;
            let nd = d.clone().max(w.clone());
            if dist[nb].as_ref().map_or(true, |old| nd < *old) {
                dist[nb] = Some(nd.clone());
                prev[nb] = Some((c, e));
                heap.push(Reverse((nd, nb)));
            }
        }
    }
    let end = reached.expect("the dual graph is connected");
    let mut crossed = Vec::new();
    let mut c = end;
    while let Some((p, e)) = prev[c] {
        crossed.push(e);
        c = p;
    }
    crossed.reverse();

    let mut polyline = vec![t0.clone()];
    for e in crossed {
        polyline.push(weight[e].as_ref().expect("weighted").0.clone());
    }
    polyline.push(t1.clone());
    polyline.dedup();
    let d = ld.diagram();
    let values: Vec<Scalar> = polyline.iter().map(|p| d.eval(p).0).collect();
    let value = values.iter().cloned().max().unwrap_or_else(Scalar::zero);
    Ok(PathResult { polyline, values, value })
}

/// Maximum of `E` over all translations placing `B` inside `q`; `None` if there are none.
pub fn cover_radius(inst: &Instance, q: &ConvexPolygon) -> Option<CoverResult> {
    let region = erode_polygon(q, inst.b())?;
    let ld = labeled(inst, Selection::Used, region.vertices());
    Some(cover_radius_in(&ld, q).expect("box contains the region").expect("region is nonempty"))
}

/// Cover radius from an existing labeled diagram whose box must contain `Q̂`.
///
/// Each cell is clipped to `Q̂`; `E` is evaluated at every vertex of the
/// clipped pieces and the maximum returned (ties go to the smallest point).
pub fn cover_radius_in(ld: &LabeledDiagram, q: &ConvexPolygon) -> Result<Option<CoverResult>, ArrangementError> {
    let inst = ld.instance();
    let arr = ld.arrangement();
    let Some(region) = erode_polygon(q, inst.b()) else {
        return Ok(None);
    };
    if !region.vertices().iter().all(|p| arr.contains(p)) {
        return Err(ArrangementError::OutsideBox);
    }
    let halfplanes = region.halfplanes();
    let mut points: BTreeSet<Point> = region.vertices().iter().cloned().collect();
    for c in 0..arr.cell_count() {
        if let Some(piece) = arr.cell_polygon(c).clip_all(halfplanes.iter()) {
            points.extend(piece.vertices().iter().cloned());
        }
    }
    let d = ld.diagram();
    let mut best: Option<(Scalar, Point)> = None;
    for p in points {
        let (v, _) = d.eval(&p);
        if best.as_ref().map_or(true, |(bv, _)| v > *bv) {
            best = Some((v, p));
        }
    }
    let (value, witness) = best.expect("region has a vertex");
    Ok(Some(CoverResult { value, witness, region }))
}
