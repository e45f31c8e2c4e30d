//! Property tests for the exact primitives and the matching engine.

mod common;

use bottleneck_voronoi::diagram::label_cells_incremental_checked;
use bottleneck_voronoi::matching::has_augmenting_path;
use bottleneck_voronoi::oracle::{brute_force_e, brute_force_lex};
use bottleneck_voronoi::{
    bottleneck_matching, build_arrangement, closest_point_in_polygon, erode_polygon, lex_bottleneck_matching,
    max_matching, min_envelope_on_segment, prune_candidates, ConvexPolygon, Diagram, EdgeRef, Line, Point, Scalar,
};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Scalar::ratio(n, d)),
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Scalar::ratio(n, d)),
    ]
}

fn small_point() -> impl Strategy<Value = Point> {
    (-8i64..=8, -8i64..=8).prop_map(|(x, y)| Point::from_ints(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a.clone());
        prop_assert_eq!((&a - &b).signum(), a.cmp(&b));
    }

    #[test]
    fn bisector_points_are_equidistant(p in small_point(), q in small_point(), s in -20i64..=20) {
        prop_assume!(p != q);
        let line = Line::perpendicular_bisector(&p, &q).unwrap();
        let on = &line.anchor() + &line.direction().scale(&Scalar::ratio(s, 3));
        prop_assert!(line.contains(&on));
        prop_assert_eq!(on.dist2(&p), on.dist2(&q));
        let off = &on + &line.normal();
        prop_assert_ne!(off.dist2(&p), off.dist2(&q));
    }

    #[test]
    fn closest_point_beats_every_polygon_point(seed in any::<u64>(), p in small_point()) {
        let mut rng = rng(seed);
        let poly = random_polygon(&mut rng);
        let c = closest_point_in_polygon(&p, &poly);
        prop_assert!(poly.contains(&c));
        if poly.contains(&p) {
            prop_assert_eq!(&c, &p);
        }
        for _ in 0..20 {
            let q = point_in(&mut rng, &poly);
            prop_assert!(c.dist2(&p) <= q.dist2(&p));
        }
    }

    #[test]
    fn eroded_region_keeps_pattern_inside(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let q = random_polygon(&mut rng);
        let count = rng.gen_range(1..=3);
        let b = distinct_points(&mut rng, count, 2);
        if let Some(region) = erode_polygon(&q, &b) {
            for _ in 0..10 {
                let t = point_in(&mut rng, &region);
                prop_assert!(b.iter().all(|p| q.contains(&(p + &t))));
            }
        } else {
            // No vertex of Q itself may host the whole pattern.
            for v in q.vertices() {
                let t = v - &b[0];
                prop_assert!(!b.iter().all(|p| q.contains(&(p + &t))));
            }
        }
    }

    #[test]
    fn envelope_minimum_is_below_samples(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let inst = random_small_instance(&mut rng, 5, 3, 5);
        let edges: Vec<EdgeRef> = (0..inst.k()).map(|b| EdgeRef::new(rng.gen_range(0..inst.n()), b)).collect();
        let (p, q) = (random_point(&mut rng, 6), random_point(&mut rng, 6));
        let (at, value) = min_envelope_on_segment(&inst, &edges, (&p, &q)).unwrap();
        let env = |t: &Point| edges.iter().map(|&e| inst.sq_len(e, t)).max().unwrap();
        prop_assert_eq!(env(&at), value.clone());
        for i in 0..=40 {
            prop_assert!(value <= env(&p.lerp(&q, &Scalar::ratio(i, 40))));
        }
    }

    #[test]
    fn arrangements_satisfy_euler(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let mut lines: Vec<Line> = Vec::new();
        for _ in 0..rng.gen_range(0..=7) {
            let pts = distinct_points(&mut rng, 2, 5);
            let l = Line::through(&pts[0], &pts[1]).unwrap();
            if !lines.contains(&l) {
                lines.push(l);
            }
        }
        let arr = build_arrangement(&lines, &[]);
        prop_assert_eq!(arr.euler_characteristic(), 2);
        for c in 0..arr.cell_count() {
            let poly = arr.cell_polygon(c);
            prop_assert!(ConvexPolygon::new(poly.vertices().to_vec()).is_ok());
            prop_assert!(poly.contains_strictly(&arr.cell_sample(c)));
        }
        for (v, p) in arr.vertices().iter().enumerate() {
            let on_box = arr.lines_through(v).len() < 2;
            let (lo, hi) = arr.bounds();
            prop_assert!(!on_box || p.x == lo.x || p.x == hi.x || p.y == lo.y || p.y == hi.y);
        }
    }

    #[test]
    fn bottleneck_and_lex_match_brute_force(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let inst = random_small_instance(&mut rng, 6, 3, 5);
        let t = random_point(&mut rng, 6);
        let g = prune_candidates(&inst, &t);
        let (m, _) = bottleneck_matching(&g).unwrap();
        prop_assert_eq!(m.cost(&inst, &t), brute_force_e(&inst, &t).unwrap().0);
        let (lex, _) = lex_bottleneck_matching(&g).unwrap();
        prop_assert_eq!(lex.lex_cost(&inst, &t), brute_force_lex(&inst, &t).unwrap());
        for cap in 0..=g.max_rank() {
            prop_assert!(!has_augmenting_path(&g, cap, &max_matching(&g, cap)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn incremental_labels_track_recomputation(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let inst = random_small_instance(&mut rng, 6, 3, 4);
        prop_assert!(label_cells_incremental_checked(&Diagram::new(&inst)).is_ok());
    }
}

/// A random convex polygon with integer vertices: the hull of a few points,
/// falling back on a box when they are degenerate.
fn random_polygon(rng: &mut rand::rngs::StdRng) -> ConvexPolygon {
    let count = rng.gen_range(3..=7);
    let mut pts = distinct_points(rng, count, 6);
    pts.sort();
    let cross = |o: &Point, a: &Point, b: &Point| (a - o).cross(&(b - o));
    let mut hull: Vec<Point> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Vec<&Point> = if pass == 0 { pts.iter().collect() } else { pts.iter().rev().collect() };
        for p in iter {
            while hull.len() >= start + 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= Scalar::zero() {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
    }
    ConvexPolygon::new(hull).unwrap_or_else(|_| {
        ConvexPolygon::rectangle(Scalar::from_int(-3), Scalar::from_int(-2), Scalar::from_int(4), Scalar::from_int(5))
    })
}
