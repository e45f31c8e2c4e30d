//! Rectangular minimum-cost assignment with exact integer costs.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

/// Assigns every row to a distinct column minimizing total cost (Hungarian
/// method with potentials). Requires `rows ≤ cols`; returns the column of each row.
pub(crate) fn min_cost_assignment(cost: &[Vec<BigInt>]) -> Vec<usize> {
    let rows = cost.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = cost[0].len();
    assert!(rows <= cols, "more rows than columns");

    // 1-based, index 0 is the virtual source.
    let mut u = vec![BigInt::zero(); rows + 1];
    let mut v = vec![BigInt::zero(); cols + 1];
    let mut owner = vec![0usize; cols + 1];
    let mut way = vec![0usize; cols + 1];

    for i in 1..=rows {
        owner[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<BigInt>> = vec![None; cols + 1];
        let mut used = vec![false; cols + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta: Option<BigInt> = None;
            let mut j1 = 0;
            for j in 1..=cols {
                if used[j] {
                    continue;
                }
                let cur = &cost[i0 - 1][j - 1] - &u[i0] - &v[j];
                if minv[j].as_ref().map_or(true, |m| cur < *m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].as_ref().expect("set above");
                if delta.as_ref().map_or(true, |d| mj < d) {
                    delta = Some(mj.clone());
                    j1 = j;
                }
            }
            let delta = delta.expect("a free column remains while rows ≤ cols");
            for j in 0..=cols {
                if used[j] {
                    u[owner[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(m) = minv[j].as_mut() {
                    *m -= &delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut out = vec![usize::MAX; rows];
    for j in 1..=cols {
        if owner[j] != 0 {
            out[owner[j] - 1] = j - 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn costs(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect()
    }

    fn total(c: &[Vec<BigInt>], asg: &[usize]) -> BigInt {
        asg.iter().enumerate().map(|(i, &j)| c[i][j].clone()).sum()
    }

    #[test]
    fn square_instance() {
        let c = costs(&[&[4, 1, 3], &[2, 0, 5], &[3, 2, 2]]);
        let asg = min_cost_assignment(&c);
        assert_eq!(total(&c, &asg), BigInt::from(5));
    }

    #[test]
    fn rectangular_instance_matches_enumeration() {
        let c = costs(&[&[7, 3, 9, 2, 8], &[1, 6, 4, 2, 9], &[5, 5, 1, 7, 3]]);
        let asg = min_cost_assignment(&c);
        let mut best = None::<BigInt>;
        for x in 0..5 {
            for y in 0..5 {
                for z in 0..5 {
                    if x == y || y == z || x == z {
                        continue;
                    }
                    let t = total(&c, &[x, y, z]);
                    if best.as_ref().map_or(true, |b| t < *b) {
                        best = Some(t);
                    }
                }
            }
        }
        assert_eq!(Some(total(&c, &asg)), best);
    }
}
