//! Exact planar primitives: points, the instance `(A, B)`, edges, bisector lines
//! and edge equivalence classes.
//!
//! An edge `ab` joins `a ∈ A` and `b ∈ B`. Under a translation `t` of `B` its
//! squared length is `‖b + t − a‖² = ‖t − (a − b)‖²`, so every edge is
//! represented geometrically by its *site* `a − b`: the translation at which
//! the edge has length zero. Two edges tie exactly on the perpendicular
//! bisector of their sites, and edges with the same site tie everywhere.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::GeomError;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Scalar::from_int(x), Scalar::from_int(y))
    }

    pub fn origin() -> Self {
        Point::default()
    }

    pub fn dot(&self, other: &Point) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the cross product.
    pub fn cross(&self, other: &Point) -> Scalar {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm2(&self) -> Scalar {
        self.dot(self)
    }

    pub fn dist2(&self, other: &Point) -> Scalar {
        (self - other).norm2()
    }

    pub fn scale(&self, s: &Scalar) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    /// `self + s·(other − self)`.
    pub fn lerp(&self, other: &Point, s: &Scalar) -> Point {
        self + &(other - self).scale(s)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = Scalar::ratio(1, 2);
        Point::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl<'a, 'b> Add<&'b Point> for &'a Point {
    type Output = Point;
    fn add(self, rhs: &'b Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a, 'b> Sub<&'b Point> for &'a Point {
    type Output = Point;
    fn sub(self, rhs: &'b Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

/// Orientation of `c` relative to the directed line `a → b`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    (b - a).cross(&(c - a)).signum()
}

/// An edge `(A[a], B[b])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub a: usize,
    pub b: usize,
}

impl EdgeRef {
    pub fn new(a: usize, b: usize) -> Self {
        EdgeRef { a, b }
    }
}

/// The two point sets: `A` (size `n`) and the translatable pattern `B` (size `k ≤ n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    a: Vec<Point>,
    b: Vec<Point>,
    sites: ScaledSites,
}

/// Edge sites over a common denominator, for fast length comparisons.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ScaledSites {
    /// Least common multiple of all coordinate denominators.
    scale: BigInt,
    /// `scale · (a − b)`, indexed `b * n + a`.
    xy: Vec<(BigInt, BigInt)>,
    /// The same, when every coordinate fits in an `i64`.
    small: Option<Vec<(i64, i64)>>,
}

impl ScaledSites {
    fn new(a: &[Point], b: &[Point]) -> Self {
        let scale = a
            .iter()
            .chain(b)
            .flat_map(|p| [p.x.denom(), p.y.denom()])
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let int = |v: &Scalar| v.numer() * (&scale / v.denom());
        let xy: Vec<(BigInt, BigInt)> = b
            .iter()
            .flat_map(|pb| a.iter().map(move |pa| (pa, pb)))
            .map(|(pa, pb)| (int(&pa.x) - int(&pb.x), int(&pa.y) - int(&pb.y)))
            .collect();
        let small = xy.iter().map(|(x, y)| Some((x.to_i64()?, y.to_i64()?))).collect();
        ScaledSites { scale, xy, small }
    }
}

/// Squared lengths of all edges at one translation, each multiplied by the same
/// positive constant. Only their order is meaningful.
#[derive(Clone, Debug)]
pub(crate) enum LengthKeys {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

impl Instance {
    pub fn new(a: Vec<Point>, b: Vec<Point>) -> Result<Self, GeomError> {
        if b.is_empty() {
            return Err(GeomError::EmptyPattern);
        }
        if b.len() > a.len() {
            return Err(GeomError::PatternLargerThanSet { n: a.len(), k: b.len() });
        }
        for (set, pts) in [('A', &a), ('B', &b)] {
            let mut seen = BTreeMap::new();
            for (i, p) in pts.iter().enumerate() {
                if seen.insert(p, i).is_some() {
                    return Err(GeomError::DuplicatePoint { set, index: i });
                }
            }
        }
        let sites = ScaledSites::new(&a, &b);
        Ok(Instance { a, b, sites })
    }

    pub fn from_ints(a: &[(i64, i64)], b: &[(i64, i64)]) -> Result<Self, GeomError> {
        let conv = |v: &[(i64, i64)]| v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        Instance::new(conv(a), conv(b))
    }

    pub fn a(&self) -> &[Point] {
        &self.a
    }

    pub fn b(&self) -> &[Point] {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn k(&self) -> usize {
        self.b.len()
    }

    pub fn edge_count(&self) -> usize {
        self.a.len() * self.b.len()
    }

    /// Dense index of an edge, grouped by `b`.
    pub fn edge_index(&self, e: EdgeRef) -> usize {
        e.b * self.a.len() + e.a
    }

    pub fn edge_at(&self, index: usize) -> EdgeRef {
        EdgeRef::new(index % self.a.len(), index / self.a.len())
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.edge_count()).map(move |i| self.edge_at(i))
    }

    pub fn check_edge(&self, e: EdgeRef) -> Result<(), GeomError> {
        if e.a < self.n() && e.b < self.k() {
            Ok(())
        } else {
            Err(GeomError::IndexOutOfRange { a: e.a, b: e.b })
        }
    }

    /// The site `a − b` of an edge. Panics on an invalid edge.
    pub fn site(&self, e: EdgeRef) -> Point {
        &self.a[e.a] - &self.b[e.b]
    }

    /// `‖B[b] + t − A[a]‖²`. Panics on an invalid edge.
    pub fn sq_len(&self, e: EdgeRef, t: &Point) -> Scalar {
        let a = &self.a[e.a];
        let b = &self.b[e.b];
        let dx = &b.x + &t.x - &a.x;
        let dy = &b.y + &t.y - &a.y;
        dx.square() + dy.square()
    }

    /// Squared lengths of all edges at `t`, indexed `b * n + a`, as order-preserving integer keys.
    pub(crate) fn length_keys(&self, t: &Point) -> LengthKeys {
        let dt = t.x.denom().lcm(&t.y.denom());
        let s = &self.sites.scale * &dt;
        let tx = t.x.numer() * (&s / t.x.denom());
        let ty = t.y.numer() * (&s / t.y.denom());
        if let (Some(small), Some(d), Some(x), Some(y)) = (&self.sites.small, dt.to_i64(), tx.to_i64(), ty.to_i64()) {
            let key = |&(sx, sy): &(i64, i64)| -> Option<i128> {
                let dx = (x as i128).checked_sub((sx as i128).checked_mul(d as i128)?)?;
                let dy = (y as i128).checked_sub((sy as i128).checked_mul(d as i128)?)?;
                dx.checked_mul(dx)?.checked_add(dy.checked_mul(dy)?)
            };
            if let Some(keys) = small.iter().map(key).collect() {
                return LengthKeys::Small(keys);
            }
        }
        LengthKeys::Big(
            self.sites
                .xy
                .iter()
                .map(|(sx, sy)| {
                    let dx = &tx - sx * &dt;
                    let dy = &ty - sy * &dt;
                    &dx * &dx + &dy * &dy
                })
                .collect(),
        )
    }

    pub fn translated_b(&self, t: &Point) -> Vec<Point> {
        self.b.iter().map(|b| b + t).collect()
    }
}

/// Squared length of edge `e` when `B` is translated by `t`.
pub fn squared_edge_length(inst: &Instance, e: EdgeRef, t: &Point) -> Result<Scalar, GeomError> {
    inst.check_edge(e)?;
    Ok(inst.sq_len(e, t))
}

/// `α·x + β·y = γ`, normalized so that the first nonzero of `(α, β)` is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    alpha: Scalar,
    beta: Scalar,
    gamma: Scalar,
}

impl Line {
    /// `None` when `(α, β) = (0, 0)`.
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar) -> Option<Self> {
        let lead = if !alpha.is_zero() {
            alpha.clone()
        } else if !beta.is_zero() {
            beta.clone()
        } else {
            return None;
        };
        Some(Line {
            alpha: &alpha / &lead,
            beta: &beta / &lead,
            gamma: &gamma / &lead,
        })
    }

    /// Perpendicular bisector of two distinct points.
    pub fn perpendicular_bisector(p: &Point, q: &Point) -> Option<Self> {
        // 2⟨t, q − p⟩ = ‖q‖² − ‖p‖²
        let d = q - p;
        Line::new(
            &d.x + &d.x,
            &d.y + &d.y,
            q.norm2() - p.norm2(),
        )
    }

    pub fn through(p: &Point, q: &Point) -> Option<Self> {
        let d = q - p;
        // normal (dy, −dx)
        let alpha = d.y.clone();
        let beta = -&d.x;
        let gamma = &alpha * &p.x + &beta * &p.y;
        Line::new(alpha, beta, gamma)
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn gamma(&self) -> &Scalar {
        &self.gamma
    }

    /// `α·x + β·y − γ`.
    pub fn eval(&self, p: &Point) -> Scalar {
        &self.alpha * &p.x + &self.beta * &p.y - &self.gamma
    }

    pub fn side(&self, p: &Point) -> Ordering {
        self.eval(p).signum()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn normal(&self) -> Point {
        Point::new(self.alpha.clone(), self.beta.clone())
    }

    /// A direction vector along the line.
    pub fn direction(&self) -> Point {
        Point::new(-&self.beta, self.alpha.clone())
    }

    /// Position of a point along [`Line::direction`]; monotone along the line.
    pub fn param(&self, p: &Point) -> Scalar {
        self.direction().dot(p)
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        (&self.alpha * &other.beta - &self.beta * &other.alpha).is_zero()
    }

    pub fn intersect(&self, other: &Line) -> Option<Point> {
        let det = &self.alpha * &other.beta - &self.beta * &other.alpha;
        if det.is_zero() {
            return None;
        }
        let x = (&self.gamma * &other.beta - &self.beta * &other.gamma) / &det;
        let y = (&self.alpha * &other.gamma - &self.gamma * &other.alpha) / &det;
        Some(Point::new(x, y))
    }

    /// Orthogonal projection of `p` onto the line.
    pub fn project(&self, p: &Point) -> Point {
        let n = self.normal();
        let s = self.eval(p) / n.norm2();
        p - &n.scale(&s)
    }

    /// Some point on the line.
    pub fn anchor(&self) -> Point {
        self.project(&Point::origin())
    }
}

/// Result of asking for the tie locus of two edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bisect {
    Line(Line),
    /// `b − a = b′ − a′`: the edges have equal length for every translation.
    Degenerate,
}

/// Locus of translations where `e1` and `e2` are equally long.
pub fn bisector_line(inst: &Instance, e1: EdgeRef, e2: EdgeRef) -> Result<Bisect, GeomError> {
    inst.check_edge(e1)?;
    inst.check_edge(e2)?;
    let (p, q) = (inst.site(e1), inst.site(e2));
    Ok(match Line::perpendicular_bisector(&p, &q) {
        Some(l) => Bisect::Line(l),
        None => Bisect::Degenerate,
    })
}

/// Partition of all edges by their difference vector `b − a`, in lexicographic
/// order of that vector. Each class holds at most one edge per `b`.
pub fn equivalence_classes(inst: &Instance) -> Vec<Vec<EdgeRef>> {
    let mut groups: BTreeMap<Point, Vec<EdgeRef>> = BTreeMap::new();
    for e in inst.edges() {
        let diff = &inst.b()[e.b] - &inst.a()[e.a];
        groups.entry(diff).or_default().push(e);
    }
    groups
        .into_values()
        .map(|mut v| {
            v.sort_by_key(|e| (e.b, e.a));
            v
        })
        .collect()
}

/// Lookup tables for edge equivalence classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClasses {
    n: usize,
    k: usize,
    class_of: Vec<usize>,
    members: Vec<Vec<EdgeRef>>,
}

impl EdgeClasses {
    pub fn of_instance(inst: &Instance) -> Self {
        EdgeClasses::from_partition(inst.n(), inst.k(), equivalence_classes(inst))
    }

    /// Builds the tables from an explicit partition of `[n] × [k]`.
    /// Panics when `members` is not such a partition or repeats a `b` within a class.
    pub fn from_partition(n: usize, k: usize, members: Vec<Vec<EdgeRef>>) -> Self {
        let mut class_of = alloc::vec![usize::MAX; n * k];
        for (c, class) in members.iter().enumerate() {
            for (i, e) in class.iter().enumerate() {
                assert!(e.a < n && e.b < k, "edge out of range");
                assert!(class_of[e.b * n + e.a] == usize::MAX, "edge listed twice");
                assert!(class[..i].iter().all(|f| f.b != e.b), "class repeats a b");
                class_of[e.b * n + e.a] = c;
            }
        }
        assert!(class_of.iter().all(|&c| c != usize::MAX), "partition misses an edge");
        EdgeClasses { n, k, class_of, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn class_of(&self, e: EdgeRef) -> usize {
        self.class_of[e.b * self.n + e.a]
    }

    pub fn members(&self, class: usize) -> &[EdgeRef] {
        &self.members[class]
    }

    /// The edge of `class` incident to `b`, if any.
    pub fn member_at(&self, class: usize, b: usize) -> Option<EdgeRef> {
        self.members[class].iter().copied().find(|e| e.b == b)
    }
}
