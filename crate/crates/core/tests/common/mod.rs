#![allow(dead_code)]

use bottleneck_voronoi::{ConvexPolygon, Instance, Point, Scalar};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `count` distinct integer points in `[-range, range]²`.
pub fn distinct_points(rng: &mut StdRng, count: usize, range: i64) -> Vec<Point> {
    let mut all: Vec<(i64, i64)> = Vec::new();
    for x in -range..=range {
        for y in -range..=range {
            all.push((x, y));
        }
    }
    all.shuffle(rng);
    all.truncate(count);
    all.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect()
}

pub fn random_instance(rng: &mut StdRng, n: usize, k: usize, range: i64) -> Instance {
    let a = distinct_points(rng, n, range);
    let b = distinct_points(rng, k, range);
    Instance::new(a, b).expect("valid by construction")
}

/// Random instance with `2 ≤ n ≤ max_n` and `1 ≤ k ≤ min(n, max_k)`.
pub fn random_small_instance(rng: &mut StdRng, max_n: usize, max_k: usize, range: i64) -> Instance {
    let n = rng.gen_range(2..=max_n);
    let k = rng.gen_range(1..=max_k.min(n));
    random_instance(rng, n, k, range)
}

pub fn random_rational(rng: &mut StdRng, range: i64, den: i64) -> Scalar {
    Scalar::ratio(rng.gen_range(-range * den..=range * den), den)
}

pub fn random_point(rng: &mut StdRng, range: i64) -> Point {
    let den = rng.gen_range(1..=17);
    Point::new(random_rational(rng, range, den), random_rational(rng, range, den))
}

/// A strictly interior point of a convex polygon: positive random weights on its vertices.
pub fn interior_point(rng: &mut StdRng, poly: &ConvexPolygon) -> Point {
    let vs = poly.vertices();
    let weights: Vec<i64> = vs.iter().map(|_| rng.gen_range(1..=20)).collect();
    let total: i64 = weights.iter().sum();
    let mut x = Scalar::zero();
    let mut y = Scalar::zero();
    for (v, &w) in vs.iter().zip(&weights) {
        let w = Scalar::ratio(w, total);
        x += &(&v.x * &w);
        y += &(&v.y * &w);
    }
    Point::new(x, y)
}

/// A point inside the polygon (closed), uniformly mixed from its vertices.
pub fn point_in(rng: &mut StdRng, poly: &ConvexPolygon) -> Point {
    let vs = poly.vertices();
    let weights: Vec<i64> = vs.iter().map(|_| rng.gen_range(0..=20)).collect();
    let total: i64 = weights.iter().sum::<i64>().max(1);
    let mut x = Scalar::zero();
    let mut y = Scalar::zero();
    if weights.iter().all(|&w| w == 0) {
        return vs[0].clone();
    }
    for (v, &w) in vs.iter().zip(&weights) {
        let w = Scalar::ratio(w, total);
        x += &(&v.x * &w);
        y += &(&v.y * &w);
    }
    Point::new(x, y)
}
