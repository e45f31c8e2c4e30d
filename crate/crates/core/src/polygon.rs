//! Convex polygons, half-plane clipping, closest points and erosion.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::GeomError;
use crate::geom::{orient, Point};
use crate::scalar::Scalar;

/// Closed half-plane `α·x + β·y ≤ γ` (not normalized).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
}

impl HalfPlane {
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar) -> Self {
        HalfPlane { alpha, beta, gamma }
    }

    /// `α·x + β·y − γ`; nonpositive inside.
    pub fn eval(&self, p: &Point) -> Scalar {
        &self.alpha * &p.x + &self.beta * &p.y - &self.gamma
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).signum() != Ordering::Greater
    }

    /// Half-plane whose boundary passes through `u → v` with the interior on the left.
    pub fn left_of(u: &Point, v: &Point) -> Self {
        let alpha = &v.y - &u.y;
        let beta = &u.x - &v.x;
        let gamma = &alpha * &u.x + &beta * &u.y;
        HalfPlane::new(alpha, beta, gamma)
    }

    pub fn translate(&self, v: &Point) -> Self {
        HalfPlane::new(
            self.alpha.clone(),
            self.beta.clone(),
            &self.gamma + &self.alpha * &v.x + &self.beta * &v.y,
        )
    }
}

/// Closed convex region given by its vertices in counterclockwise order.
///
/// Three or more vertices form a strictly convex polygon (no repeats, no three
/// collinear). One vertex is a point and two vertices a segment; these
/// degenerate shapes arise when clipping or eroding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Validates a counterclockwise strictly convex vertex list (or a point or segment).
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeomError> {
        match vertices.len() {
            0 => return Err(GeomError::EmptyPolygon),
            1 => {}
            2 => {
                if vertices[0] == vertices[1] {
                    return Err(GeomError::NotConvex);
                }
            }
            m => {
                for i in 0..m {
                    let (p, q, r) = (&vertices[i], &vertices[(i + 1) % m], &vertices[(i + 2) % m]);
                    if orient(p, q, r) != Ordering::Greater {
                        return Err(GeomError::NotConvex);
                    }
                }
                // A star-shaped winding that turns left everywhere can still wrap twice.
                let mut turns = 0;
                for i in 1..m {
                    let d0 = &vertices[i] - &vertices[i - 1];
                    let d1 = &vertices[(i + 1) % m] - &vertices[i];
                    if half(&d1) != half(&d0) {
                        turns += 1;
                    }
                }
                if turns > 2 {
                    return Err(GeomError::NotConvex);
                }
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    /// Axis-aligned rectangle `[x0, x1] × [y0, y1]` (requires `x0 < x1`, `y0 < y1`).
    pub fn rectangle(x0: Scalar, y0: Scalar, x1: Scalar, y1: Scalar) -> Self {
        ConvexPolygon {
            vertices: alloc::vec![
                Point::new(x0.clone(), y0.clone()),
                Point::new(x1.clone(), y0),
                Point::new(x1, y1.clone()),
                Point::new(x0, y1),
            ],
        }
    }

    /// Normalizes the output of a clipping step: drops repeats and collinear
    /// vertices, collapsing to a segment or point when the area vanishes.
    pub(crate) fn from_raw(mut pts: Vec<Point>) -> Option<Self> {
        pts.dedup();
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        if pts.is_empty() {
            return None;
        }
        let collinear = pts.len() < 3
            || pts[2..].iter().all(|p| orient(&pts[0], &pts[1], p) == Ordering::Equal);
        if collinear {
            let lo = pts.iter().min().cloned()?;
            let hi = pts.iter().max().cloned()?;
            let vertices = if lo == hi { alloc::vec![lo] } else { alloc::vec![lo, hi] };
            return Some(ConvexPolygon { vertices });
        }
        let mut out: Vec<Point> = Vec::with_capacity(pts.len());
        let m = pts.len();
        for i in 0..m {
            let prev = &pts[(i + m - 1) % m];
            let next = &pts[(i + 1) % m];
            if orient(prev, &pts[i], next) != Ordering::Equal {
                out.push(pts[i].clone());
            }
        }
        Some(ConvexPolygon { vertices: out })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    /// Boundary segments; a segment polygon yields its segment once.
    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        let m = self.vertices.len();
        let count = match m {
            1 => 0,
            2 => 1,
            _ => m,
        };
        (0..count).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % m]))
    }

    /// Half-planes whose intersection is exactly this region.
    pub fn halfplanes(&self) -> Vec<HalfPlane> {
        let v = &self.vertices;
        match v.len() {
            1 => {
                let p = &v[0];
                let one = Scalar::one;
                let zero = Scalar::zero;
                alloc::vec![
                    HalfPlane::new(one(), zero(), p.x.clone()),
                    HalfPlane::new(-one(), zero(), -&p.x),
                    HalfPlane::new(zero(), one(), p.y.clone()),
                    HalfPlane::new(zero(), -one(), -&p.y),
                ]
            }
            2 => {
                let (u, w) = (&v[0], &v[1]);
                let d = w - u;
                let side = HalfPlane::left_of(u, w);
                let other = HalfPlane::left_of(w, u);
                // ⟨d, p⟩ ≥ ⟨d, u⟩ and ⟨d, p⟩ ≤ ⟨d, w⟩
                let lo = HalfPlane::new(-&d.x, -&d.y, -d.dot(u));
                let hi = HalfPlane::new(d.x.clone(), d.y.clone(), d.dot(w));
                alloc::vec![side, other, lo, hi]
            }
            m => (0..m).map(|i| HalfPlane::left_of(&v[i], &v[(i + 1) % m])).collect(),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        let v = &self.vertices;
        match v.len() {
            1 => &v[0] == p,
            2 => {
                orient(&v[0], &v[1], p) == Ordering::Equal
                    && (p - &v[0]).dot(&(p - &v[1])).signum() != Ordering::Greater
            }
            m => (0..m).all(|i| orient(&v[i], &v[(i + 1) % m], p) != Ordering::Less),
        }
    }

    /// Strict interior (empty for degenerate shapes).
    pub fn contains_strictly(&self, p: &Point) -> bool {
        let v = &self.vertices;
        v.len() >= 3 && (0..v.len()).all(|i| orient(&v[i], &v[(i + 1) % v.len()], p) == Ordering::Greater)
    }

    /// Intersection with a closed half-plane.
    pub fn clip(&self, h: &HalfPlane) -> Option<Self> {
        let v = &self.vertices;
        let vals: Vec<Scalar> = v.iter().map(|p| h.eval(p)).collect();
        if vals.iter().all(|s| s.signum() != Ordering::Greater) {
            return Some(self.clone());
        }
        if v.len() == 1 {
            return None;
        }
        let m = v.len();
        let mut out = Vec::with_capacity(m + 1);
        for i in 0..m {
            let j = (i + 1) % m;
            let (si, sj) = (vals[i].signum(), vals[j].signum());
            if si != Ordering::Greater {
                out.push(v[i].clone());
            }
            if (si == Ordering::Less && sj == Ordering::Greater) || (si == Ordering::Greater && sj == Ordering::Less) {
                let s = &vals[i] / &(&vals[i] - &vals[j]);
                out.push(v[i].lerp(&v[j], &s));
            }
        }
        ConvexPolygon::from_raw(out)
    }

    pub fn clip_all<'a>(&self, hs: impl IntoIterator<Item = &'a HalfPlane>) -> Option<Self> {
        let mut cur = self.clone();
        for h in hs {
            cur = cur.clip(h)?;
        }
        Some(cur)
    }

    pub fn translate(&self, v: &Point) -> Self {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|p| p + v).collect(),
        }
    }

    /// Average of the vertices; strictly interior for nondegenerate polygons.
    pub fn centroid(&self) -> Point {
        let m = Scalar::from_int(self.vertices.len() as i64);
        let mut sx = Scalar::zero();
        let mut sy = Scalar::zero();
        for p in &self.vertices {
            sx += &p.x;
            sy += &p.y;
        }
        Point::new(sx / &m, sy / &m)
    }

    /// `(min corner, max corner)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for p in &self.vertices[1..] {
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

    /// Twice the signed area.
    pub fn double_area(&self) -> Scalar {
        let v = &self.vertices;
        let mut s = Scalar::zero();
        for i in 0..v.len() {
            s += &v[i].cross(&v[(i + 1) % v.len()]);
        }
        s
    }
}

fn half(d: &Point) -> bool {
    d.y > Scalar::zero() || (d.y.is_zero() && d.x > Scalar::zero())
}

/// Projection of `p` onto segment `[u, v]` when it falls strictly inside it.
pub(crate) fn project_onto_segment(p: &Point, u: &Point, v: &Point) -> Option<Point> {
    let d = v - u;
    let len2 = d.norm2();
    if len2.is_zero() {
        return None;
    }
    let s = (p - u).dot(&d) / &len2;
    if s > Scalar::zero() && s < Scalar::one() {
        Some(u.lerp(v, &s))
    } else {
        None
    }
}

/// The point of the closed polygon nearest to `p`.
pub fn closest_point_in_polygon(p: &Point, poly: &ConvexPolygon) -> Point {
    if poly.contains(p) {
        return p.clone();
    }
    let mut best: Option<(Scalar, Point)> = None;
    let mut consider = |q: Point| {
        let d = p.dist2(&q);
        let better = match &best {
            None => true,
            Some((bd, bq)) => d < *bd || (d == *bd && q < *bq),
        };
        if better {
            best = Some((d, q));
        }
    };
    for v in poly.vertices() {
        consider(v.clone());
    }
    for (u, v) in poly.edges() {
        if let Some(q) = project_onto_segment(p, u, v) {
            consider(q);
        }
    }
    best.map(|(_, q)| q).unwrap_or_else(|| p.clone())
}

/// `{t : B + t ⊆ Q}`: each supporting half-plane of `Q` is shifted by the
/// point of `B` extreme in its outward normal direction.
pub fn erode_polygon(q: &ConvexPolygon, b: &[Point]) -> Option<ConvexPolygon> {
    let first = match b.first() {
        Some(p) => p,
        None => return Some(q.clone()),
    };
    let start = q.translate(&-first);
    let shifted: Vec<HalfPlane> = q
        .halfplanes()
        .into_iter()
        .map(|h| {
            let normal = Point::new(h.alpha.clone(), h.beta.clone());
            let reach = b.iter().map(|p| normal.dot(p)).max().unwrap_or_else(Scalar::zero);
            HalfPlane::new(h.alpha, h.beta, h.gamma - reach)
        })
        .collect();
    start.clip_all(shifted.iter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn square(lo: i64, hi: i64) -> ConvexPolygon {
        ConvexPolygon::rectangle(Scalar::from_int(lo), Scalar::from_int(lo), Scalar::from_int(hi), Scalar::from_int(hi))
    }

    #[test]
    fn validation() {
        assert!(ConvexPolygon::new(vec![pt(0, 0), pt(1, 0), pt(0, 1)]).is_ok());
        assert_eq!(ConvexPolygon::new(vec![pt(0, 0), pt(0, 1), pt(1, 0)]), Err(GeomError::NotConvex));
        assert_eq!(
            ConvexPolygon::new(vec![pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)]),
            Err(GeomError::NotConvex)
        );
        assert_eq!(ConvexPolygon::new(vec![]), Err(GeomError::EmptyPolygon));
        // pentagram: every turn is left but the boundary winds twice
        let star = vec![pt(0, 10), pt(-6, -8), pt(10, 3), pt(-10, 3), pt(6, -8)];
        assert!(ConvexPolygon::new(star.clone()).is_err());
    }

    #[test]
    fn closest_points() {
        let sq = square(0, 1);
        assert_eq!(closest_point_in_polygon(&pt(5, 5), &sq), pt(1, 1));
        let inside = Point::new(Scalar::ratio(1, 3), Scalar::ratio(1, 2));
        assert_eq!(closest_point_in_polygon(&inside, &sq), inside);
        let above = Point::new(Scalar::ratio(1, 2), Scalar::from_int(3));
        assert_eq!(closest_point_in_polygon(&above, &sq), Point::new(Scalar::ratio(1, 2), Scalar::one()));
        let seg = ConvexPolygon::new(vec![pt(0, 0), pt(4, 0)]).unwrap();
        assert_eq!(closest_point_in_polygon(&pt(1, 7), &seg), pt(1, 0));
    }

    #[test]
    fn erosion() {
        let q = square(0, 4);
        let e = erode_polygon(&q, &[pt(0, 0), pt(1, 0)]).unwrap();
        assert_eq!(e, ConvexPolygon::rectangle(Scalar::zero(), Scalar::zero(), Scalar::from_int(3), Scalar::from_int(4)));
        assert_eq!(erode_polygon(&q, &[pt(0, 0)]).unwrap(), q);
        assert_eq!(erode_polygon(&square(0, 1), &[pt(0, 0), pt(5, 0)]), None);
        // exactly as wide as Q: a segment of translations remains
        let seg = erode_polygon(&square(0, 1), &[pt(0, 0), pt(1, 0)]).unwrap();
        assert_eq!(seg.vertices(), &[pt(0, 0), pt(0, 1)]);
        // exactly as wide and tall: one translation remains
        let one = erode_polygon(&square(0, 1), &[pt(0, 0), pt(1, 1)]).unwrap();
        assert_eq!(one.vertices(), &[pt(0, 0)]);
    }

    #[test]
    fn clipping_collapses_cleanly() {
        let sq = square(0, 2);
        let h = HalfPlane::new(Scalar::one(), Scalar::zero(), Scalar::zero()); // x ≤ 0
        let edge = sq.clip(&h).unwrap();
        assert_eq!(edge.vertices(), &[pt(0, 0), pt(0, 2)]);
        let h2 = HalfPlane::new(Scalar::zero(), Scalar::one(), Scalar::zero()); // y ≤ 0
        assert_eq!(edge.clip(&h2).unwrap().vertices(), &[pt(0, 0)]);
        let h3 = HalfPlane::new(Scalar::one(), Scalar::zero(), Scalar::from_int(-1));
        assert!(sq.clip(&h3).is_none());
    }
}
