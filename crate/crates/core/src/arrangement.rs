//! Bisector generation, the used-bisector filter, and the clipped line arrangement.
//!
//! The arrangement is a half-edge structure over an axis-aligned box. All
//! lines cross the box interior, so every bounded face is a convex cell.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::ArrangementError;
use crate::geom::{orient, EdgeRef, Instance, Line, Point};
pub use crate::matching::PairKind;
use crate::polygon::ConvexPolygon;
use crate::scalar::Scalar;

/// An inducing edge pair of a bisector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePair {
    pub first: EdgeRef,
    pub second: EdgeRef,
    pub kind: PairKind,
}

/// A bisector line with every edge pair that induces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bisector {
    pub line: Line,
    pub pairs: Vec<EdgePair>,
}

/// One bisector per distinct line over all non-equivalent edge pairs, sorted by line.
pub fn all_bisectors(inst: &Instance) -> Vec<Bisector> {
    let edges: Vec<EdgeRef> = inst.edges().collect();
    let sites: Vec<Point> = edges.iter().map(|&e| inst.site(e)).collect();
    let mut by_line: BTreeMap<Line, Vec<EdgePair>> = BTreeMap::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let Some(line) = Line::perpendicular_bisector(&sites[i], &sites[j]) else {
                continue;
            };
            let (first, second) = (edges[i], edges[j]);
            let kind = if first.b == second.b { PairKind::SameB } else { PairKind::DiffB };
            by_line.entry(line).or_default().push(EdgePair { first, second, kind });
        }
    }
    by_line.into_iter().map(|(line, pairs)| Bisector { line, pairs }).collect()
}

/// Minimum over the line of the number of `others` strictly inside the disk
/// centered on the line and passing through `p` (which must be equidistant
/// from the line as the pair partner).
fn min_coverage(line: &Line, p: &Point, others: &[Point]) -> usize {
    let m = line.anchor();
    let u = line.direction();
    let mp = m.dist2(p);
    let mut always = 0;
    // q is inside for s < x (left) or s > x (right)
    let mut left: Vec<Scalar> = Vec::new();
    let mut right: Vec<Scalar> = Vec::new();
    for q in others {
        let a = m.dist2(q) - &mp;
        let b = (p - q).dot(&u);
        let b = &b + &b;
        match b.signum() {
            Ordering::Equal => {
                if a.signum() == Ordering::Less {
                    always += 1;
                }
            }
            Ordering::Greater => left.push(-a / b),
            Ordering::Less => right.push(-a / b),
        }
    }
    left.sort();
    right.sort();
    let mut best = left.len().min(right.len());
    for x in left.iter().chain(right.iter()) {
        let l = left.len() - left.partition_point(|v| v <= x);
        let r = right.partition_point(|v| v < x);
        best = best.min(l + r);
    }
    always + best
}

fn pair_is_used(inst: &Instance, line: &Line, pair: &EdgePair) -> bool {
    let k = inst.k();
    let p = inst.site(pair.first);
    match pair.kind {
        PairKind::SameB => {
            let b = &inst.b()[pair.first.b];
            let sites: Vec<Point> = inst.a().iter().map(|a| a - b).collect();
            min_coverage(line, &p, &sites) < k
        }
        PairKind::DiffB => {
            let mut merged = BTreeSet::new();
            for b in [pair.first.b, pair.second.b] {
                let bp = &inst.b()[b];
                merged.extend(inst.a().iter().map(|a| a - bp));
            }
            let sites: Vec<Point> = merged.into_iter().collect();
            min_coverage(line, &p, &sites) <= 2 * k - 2
        }
    }
}

/// Keeps the bisectors for which some inducing pair could be simultaneously
/// relevant to the candidate sets somewhere along the line.
///
/// For a same-`b` pair the disk through the two sites must, somewhere on the
/// line, contain at most `k − 1` sites of `A − b`; for pairs at `b ≠ b′` at most
/// `2k − 2` of the merged sites of `A − b` and `A − b′`. The result is a superset
/// of the bisectors that can ever change a label.
pub fn used_bisectors(inst: &Instance, bisectors: &[Bisector]) -> Vec<Bisector> {
    bisectors
        .iter()
        .filter(|h| h.pairs.iter().any(|pair| pair_is_used(inst, &h.line, pair)))
        .cloned()
        .collect()
}

/// A face of the arrangement: a cell (2-face), an edge or a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceRef {
    Cell(usize),
    Edge(usize),
    Vertex(usize),
}

/// An undirected arrangement edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrEdge {
    pub from: usize,
    pub to: usize,
    /// Supporting input line; `None` on the box boundary.
    pub line: Option<usize>,
    /// Cell left of `from → to`.
    pub left: Option<usize>,
    /// Cell right of `from → to`; `None` only outside the box.
    pub right: Option<usize>,
}

/// Adjacency of two cells across a line-supported edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub edge: usize,
    pub cells: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    lo: Point,
    hi: Point,
    lines: Vec<Line>,
    vertices: Vec<Point>,
    vertex_index: BTreeMap<Point, usize>,
    vertex_lines: Vec<Vec<usize>>,
    edges: Vec<ArrEdge>,
    /// Vertex indices of each cell, counterclockwise.
    cells: Vec<Vec<usize>>,
    /// Undirected edges bounding each cell.
    cell_edges: Vec<Vec<usize>>,
    dual: Vec<DualEdge>,
    outer_face_size: usize,
}

fn upper_half(d: &Point) -> bool {
    d.y > Scalar::zero() || (d.y.is_zero() && d.x > Scalar::zero())
}

fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    match (upper_half(a), upper_half(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => Ordering::Equal.then(Scalar::zero().cmp(&a.cross(b))),
    }
}

fn bounding_box(points: &[Point]) -> (Point, Point) {
    let mut lo = points[0].clone();
    let mut hi = points[0].clone();
    for p in &points[1..] {
        if p.x < lo.x {
            lo.x = p.x.clone();
        }
        if p.y < lo.y {
            lo.y = p.y.clone();
        }
        if p.x > hi.x {
            hi.x = p.x.clone();
        }
        if p.y > hi.y {
            hi.y = p.y.clone();
        }
    }
    (lo, hi)
}

/// Endpoints of a line clipped to the box, ordered by [`Line::param`].
fn clip_line(line: &Line, lo: &Point, hi: &Point) -> (Point, Point) {
    let mut hits: Vec<Point> = Vec::with_capacity(4);
    let (a, b, g) = (line.alpha(), line.beta(), line.gamma());
    if !b.is_zero() {
        for x in [&lo.x, &hi.x] {
            let y = (g - a * x) / b;
            if y >= lo.y && y <= hi.y {
                hits.push(Point::new(x.clone(), y));
            }
        }
    }
    if !a.is_zero() {
        for y in [&lo.y, &hi.y] {
            let x = (g - b * y) / a;
            if x >= lo.x && x <= hi.x {
                hits.push(Point::new(x, y.clone()));
            }
        }
    }
    let first = hits.iter().min_by(|p, q| line.param(p).cmp(&line.param(q))).cloned();
    let last = hits.iter().max_by(|p, q| line.param(p).cmp(&line.param(q))).cloned();
    (first.expect("line crosses the box"), last.expect("line crosses the box"))
}

/// Arrangement of distinct `lines` inside an axis-aligned box that strictly
/// contains every pairwise intersection and every `must_contain` point.
pub fn build_arrangement(lines: &[Line], must_contain: &[Point]) -> Arrangement {
    let m = lines.len();
    let mut crossings: Vec<Vec<Point>> = vec![Vec::new(); m];
    let mut anchors: Vec<Point> = must_contain.to_vec();
    for i in 0..m {
        for j in i + 1..m {
            assert!(lines[i] != lines[j], "duplicate line");
            if let Some(p) = lines[i].intersect(&lines[j]) {
                crossings[i].push(p.clone());
                crossings[j].push(p.clone());
                anchors.push(p);
            }
        }
    }
    if anchors.is_empty() {
        anchors.push(Point::origin());
    }
    // Every line must pass through the box interior.
    let (lo, hi) = bounding_box(&anchors);
    let centre = lo.midpoint(&hi);
    for l in lines {
        anchors.push(l.project(&centre));
    }
    let (mut lo, mut hi) = bounding_box(&anchors);
    let one = Scalar::one();
    lo = Point::new(&lo.x - &one, &lo.y - &one);
    hi = Point::new(&hi.x + &one, &hi.y + &one);

    let mut vertex_index: BTreeMap<Point, usize> = BTreeMap::new();
    let mut vertices: Vec<Point> = Vec::new();
    let mut vertex_lines: Vec<Vec<usize>> = Vec::new();
    let mut intern = |p: Point, line: Option<usize>, vertices: &mut Vec<Point>, vl: &mut Vec<Vec<usize>>| -> usize {
        let id = *vertex_index.entry(p.clone()).or_insert_with(|| {
            vertices.push(p);
            vl.push(Vec::new());
            vertices.len() - 1
        });
        if let Some(l) = line {
            if !vl[id].contains(&l) {
                vl[id].push(l);
            }
        }
        id
    };

    let mut raw_edges: Vec<(usize, usize, Option<usize>)> = Vec::new();
    let mut on_boundary: Vec<Point> = Vec::new();
    for (i, l) in lines.iter().enumerate() {
        let (s, e) = clip_line(l, &lo, &hi);
        on_boundary.push(s.clone());
        on_boundary.push(e.clone());
        let mut pts = core::mem::take(&mut crossings[i]);
        pts.push(s);
        pts.push(e);
        let mut keyed: Vec<(Scalar, Point)> = pts.into_iter().map(|p| (l.param(&p), p)).collect();
        keyed.sort();
        keyed.dedup();
        let ids: Vec<usize> = keyed
            .into_iter()
            .map(|(_, p)| intern(p, Some(i), &mut vertices, &mut vertex_lines))
            .collect();
        for w in ids.windows(2) {
            raw_edges.push((w[0], w[1], Some(i)));
        }
    }

    // Box sides, counterclockwise from the lower-left corner.
    let corners = [
        lo.clone(),
        Point::new(hi.x.clone(), lo.y.clone()),
        hi.clone(),
        Point::new(lo.x.clone(), hi.y.clone()),
    ];
    for s in 0..4 {
        let (u, v) = (&corners[s], &corners[(s + 1) % 4]);
        let d = v - u;
        let mut pts: Vec<(Scalar, Point)> = vec![(Scalar::zero(), u.clone()), (d.norm2(), v.clone())];
        for p in &on_boundary {
            if orient(u, v, p) == Ordering::Equal {
                let s = (p - u).dot(&d);
                if s > Scalar::zero() && s < d.norm2() {
                    pts.push((s, p.clone()));
                }
            }
        }
        pts.sort();
        pts.dedup();
        let ids: Vec<usize> = pts.into_iter().map(|(_, p)| intern(p, None, &mut vertices, &mut vertex_lines)).collect();
        for w in ids.windows(2) {
            raw_edges.push((w[0], w[1], None));
        }
    }

    // Half-edge 2i runs from → to of raw edge i, 2i + 1 the reverse.
    let nv = vertices.len();
    let nh = raw_edges.len() * 2;
    let origin = |h: usize| if h % 2 == 0 { raw_edges[h / 2].0 } else { raw_edges[h / 2].1 };
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for h in 0..nh {
        outgoing[origin(h)].push(h);
    }
    let dir = |h: usize| &vertices[origin(h ^ 1)] - &vertices[origin(h)];
    for out in outgoing.iter_mut() {
        out.sort_by(|&a, &b| angle_cmp(&dir(a), &dir(b)));
    }
    let mut pos = vec![0usize; nh];
    for out in &outgoing {
        for (i, &h) in out.iter().enumerate() {
            pos[h] = i;
        }
    }
    // next(h): at the head of h, the outgoing edge clockwise after twin(h).
    let next: Vec<usize> = (0..nh)
        .map(|h| {
            let t = h ^ 1;
            let out = &outgoing[origin(t)];
            out[(pos[t] + out.len() - 1) % out.len()]
        })
        .collect();

    let mut face_of = vec![usize::MAX; nh];
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for h0 in 0..nh {
        if face_of[h0] != usize::MAX {
            continue;
        }
        let f = faces.len();
        let mut cycle = Vec::new();
        let mut h = h0;
        loop {
            face_of[h] = f;
            cycle.push(h);
            h = next[h];
            if h == h0 {
                break;
            }
        }
        faces.push(cycle);
    }
    let area2 = |cycle: &[usize]| {
        let mut s = Scalar::zero();
        for &h in cycle {
            s += &vertices[origin(h)].cross(&vertices[origin(h ^ 1)]);
        }
        s
    };
    let outer: Vec<usize> = (0..faces.len()).filter(|&f| area2(&faces[f]).signum() != Ordering::Greater).collect();
    assert_eq!(outer.len(), 1, "exactly one unbounded face");
    let outer = outer[0];
    let mut cell_id = vec![usize::MAX; faces.len()];
    let mut cells = Vec::new();
    let mut cell_edges = Vec::new();
    for (f, cycle) in faces.iter().enumerate() {
        if f == outer {
            continue;
        }
        cell_id[f] = cells.len();
        cells.push(cycle.iter().map(|&h| origin(h)).collect::<Vec<_>>());
        cell_edges.push(cycle.iter().map(|&h| h / 2).collect::<Vec<_>>());
    }
    let as_cell = |f: usize| if f == outer { None } else { Some(cell_id[f]) };
    let edges: Vec<ArrEdge> = raw_edges
        .iter()
        .enumerate()
        .map(|(i, &(from, to, line))| ArrEdge {
            from,
            to,
            line,
            left: as_cell(face_of[2 * i]),
            right: as_cell(face_of[2 * i + 1]),
        })
        .collect();
    let dual = edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.line.is_some())
        .map(|(i, e)| {
            let (l, r) = (e.left.expect("interior edge"), e.right.expect("interior edge"));
            DualEdge { edge: i, cells: (l.min(r), l.max(r)) }
        })
        .collect();
    for vl in vertex_lines.iter_mut() {
        vl.sort_unstable();
    }
    let outer_face_size = faces[outer].len();
    Arrangement {
        lo,
        hi,
        lines: lines.to_vec(),
        vertices,
        vertex_index,
        vertex_lines,
        edges,
        cells,
        cell_edges,
        dual,
        outer_face_size,
    }
}

impl Arrangement {
    /// Lower-left and upper-right corners of the clipping box.
    pub fn bounds(&self) -> (&Point, &Point) {
        (&self.lo, &self.hi)
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Input lines through vertex `v`, ascending.
    pub fn lines_through(&self, v: usize) -> &[usize] {
        &self.vertex_lines[v]
    }

    pub fn edges(&self) -> &[ArrEdge] {
        &self.edges
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Vertex indices of a cell, counterclockwise (may include collinear box vertices).
    pub fn cell_vertices(&self, c: usize) -> &[usize] {
        &self.cells[c]
    }

    pub fn cell_edges(&self, c: usize) -> &[usize] {
        &self.cell_edges[c]
    }

    pub fn cell_polygon(&self, c: usize) -> ConvexPolygon {
        let pts = self.cells[c].iter().map(|&v| self.vertices[v].clone()).collect();
        ConvexPolygon::from_raw(pts).expect("cells are nonempty")
    }

    /// Vertex centroid of a cell, strictly inside it.
    pub fn cell_sample(&self, c: usize) -> Point {
        let m = Scalar::from_int(self.cells[c].len() as i64);
        let mut sx = Scalar::zero();
        let mut sy = Scalar::zero();
        for &v in &self.cells[c] {
            sx += &self.vertices[v].x;
            sy += &self.vertices[v].y;
        }
        Point::new(sx / &m, sy / &m)
    }

    pub fn edge_midpoint(&self, e: usize) -> Point {
        let ed = &self.edges[e];
        self.vertices[ed.from].midpoint(&self.vertices[ed.to])
    }

    /// Cell adjacencies across line-supported edges.
    pub fn dual_edges(&self) -> &[DualEdge] {
        &self.dual
    }

    /// Number of faces of every dimension (cells, edges, vertices).
    pub fn face_count(&self) -> usize {
        self.cells.len() + self.edges.len() + self.vertices.len()
    }

    /// `V − E + F`, counting the unbounded face; 2 for a valid subdivision.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.cells.len() as i64 + 1
    }

    /// Length of the boundary cycle of the unbounded face.
    pub fn outer_boundary_len(&self) -> usize {
        self.outer_face_size
    }

    pub fn contains(&self, t: &Point) -> bool {
        t.x >= self.lo.x && t.x <= self.hi.x && t.y >= self.lo.y && t.y <= self.hi.y
    }

    /// The lowest-dimensional face whose closure contains `t`.
    pub fn locate(&self, t: &Point) -> Result<FaceRef, ArrangementError> {
        if !self.contains(t) {
            return Err(ArrangementError::OutsideBox);
        }
        if let Some(&v) = self.vertex_index.get(t) {
            return Ok(FaceRef::Vertex(v));
        }
        for (i, e) in self.edges.iter().enumerate() {
            let (u, w) = (&self.vertices[e.from], &self.vertices[e.to]);
            if orient(u, w, t) == Ordering::Equal && (t - u).dot(&(t - w)).signum() == Ordering::Less {
                return Ok(FaceRef::Edge(i));
            }
        }
        for c in 0..self.cells.len() {
            let vs = &self.cells[c];
            let inside = (0..vs.len()).all(|i| {
                orient(&self.vertices[vs[i]], &self.vertices[vs[(i + 1) % vs.len()]], t) == Ordering::Greater
            });
            if inside {
                return Ok(FaceRef::Cell(c));
            }
        }
        unreachable!("point inside the box lies in some face")
    }

    /// A cell whose closure contains `t` (the lowest-index one when several do).
    pub fn cell_containing(&self, t: &Point) -> Result<usize, ArrangementError> {
        Ok(self.cells_containing(t)?[0])
    }

    /// All cells whose closure contains `t`, ascending.
    pub fn cells_containing(&self, t: &Point) -> Result<Vec<usize>, ArrangementError> {
        let mut out: Vec<usize> = match self.locate(t)? {
            FaceRef::Cell(c) => vec![c],
            FaceRef::Edge(e) => self.edges[e].left.iter().chain(self.edges[e].right.iter()).copied().collect(),
            FaceRef::Vertex(v) => (0..self.cells.len()).filter(|&c| self.cells[c].contains(&v)).collect(),
        };
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn vertical(x: i64) -> Line {
        Line::through(&pt(x, 0), &pt(x, 1)).unwrap()
    }

    #[test]
    fn bisector_counts() {
        let inst = Instance::from_ints(&[(0, 0), (3, 1)], &[(0, 0)]).unwrap();
        let hs = all_bisectors(&inst);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].pairs.len(), 1);
        assert_eq!(hs[0].pairs[0].kind, PairKind::SameB);

        let inst = Instance::from_ints(&[(0, 0), (1, 0)], &[(5, 0), (6, 0)]).unwrap();
        let hs = all_bisectors(&inst);
        let pairs: usize = hs.iter().map(|h| h.pairs.len()).sum();
        assert_eq!(pairs, 5);
        let degenerate = (EdgeRef::new(0, 0), EdgeRef::new(1, 1));
        assert!(hs.iter().all(|h| h.pairs.iter().all(|p| (p.first, p.second) != degenerate)));

        let inst = Instance::from_ints(&[(-1, 0), (1, 0)], &[(0, -1), (0, 1)]).unwrap();
        let x0 = vertical(0);
        let h = all_bisectors(&inst).into_iter().find(|h| h.line == x0).unwrap();
        assert_eq!(h.pairs.len(), 2);
    }

    #[test]
    fn used_filter_examples() {
        let tri = Instance::from_ints(&[(0, 0), (4, 0), (1, 3)], &[(0, 0)]).unwrap();
        assert_eq!(used_bisectors(&tri, &all_bisectors(&tri)).len(), 3);

        let line = Instance::from_ints(&[(0, 0), (2, 0), (4, 0)], &[(0, 0)]).unwrap();
        let used = used_bisectors(&line, &all_bisectors(&line));
        assert_eq!(used.len(), 2);
        assert!(used.iter().all(|h| h.line != vertical(2)));

        let full = Instance::from_ints(&[(0, 0), (2, 1), (5, 3)], &[(0, 0), (1, 7), (3, 2)]).unwrap();
        let all = all_bisectors(&full);
        assert_eq!(used_bisectors(&full, &all), all);
    }

    #[test]
    fn face_counts() {
        let empty = build_arrangement(&[], &[]);
        assert_eq!(empty.cell_count(), 1);
        assert!(empty.dual_edges().is_empty());
        assert_eq!(empty.euler_characteristic(), 2);

        let par = build_arrangement(&[vertical(0), vertical(3)], &[]);
        assert_eq!(par.cell_count(), 3);
        assert_eq!(par.dual_edges().len(), 2);
        assert_eq!(par.euler_characteristic(), 2);

        let three = [vertical(0), Line::through(&pt(0, 0), &pt(1, 1)).unwrap(), Line::through(&pt(0, 2), &pt(1, 2)).unwrap()];
        let arr = build_arrangement(&three, &[]);
        assert_eq!(arr.cell_count(), 7);
        assert_eq!(arr.euler_characteristic(), 2);

        let concurrent = [vertical(0), Line::through(&pt(0, 0), &pt(1, 1)).unwrap(), Line::through(&pt(0, 0), &pt(1, 0)).unwrap()];
        let arr = build_arrangement(&concurrent, &[]);
        assert_eq!(arr.cell_count(), 6);
        assert_eq!(arr.euler_characteristic(), 2);
    }

    #[test]
    fn box_contains_requested_points() {
        let arr = build_arrangement(&[vertical(0)], &[pt(50, -7)]);
        assert!(arr.contains(&pt(50, -7)));
        assert!(arr.contains(&pt(51, -8)));
    }

    #[test]
    fn location() {
        let arr = build_arrangement(&[vertical(0), Line::through(&pt(0, 0), &pt(1, 0)).unwrap()], &[pt(3, 3), pt(-3, -3)]);
        assert!(matches!(arr.locate(&pt(0, 0)), Ok(FaceRef::Vertex(_))));
        assert!(matches!(arr.locate(&pt(0, 1)), Ok(FaceRef::Edge(_))));
        let c = arr.locate(&pt(1, 1)).unwrap();
        assert!(matches!(c, FaceRef::Cell(_)));
        assert_ne!(c, arr.locate(&pt(-1, 1)).unwrap());
        assert_eq!(arr.locate(&pt(100, 0)), Err(ArrangementError::OutsideBox));
        assert_eq!(arr.cells_containing(&pt(0, 0)).unwrap().len(), 4);
        assert_eq!(arr.cells_containing(&pt(0, 1)).unwrap().len(), 2);
    }

    #[test]
    fn cells_are_convex() {
        let lines = [
            vertical(1),
            Line::through(&pt(0, 0), &pt(2, 1)).unwrap(),
            Line::through(&pt(0, 3), &pt(3, 0)).unwrap(),
            Line::through(&pt(0, -1), &pt(1, 4)).unwrap(),
        ];
        let arr = build_arrangement(&lines, &[]);
        for c in 0..arr.cell_count() {
            let poly = arr.cell_polygon(c);
            assert!(ConvexPolygon::new(poly.vertices().to_vec()).is_ok());
            assert!(poly.contains_strictly(&arr.cell_sample(c)));
        }
    }
}
