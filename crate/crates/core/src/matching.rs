//! Bottleneck and lexicographic bottleneck assignment on candidate graphs.
//!
//! A [`CandidateGraph`] keeps, for every `b ∈ B`, the shortest `k` edges at
//! `b` (extended by ties) together with dense length ranks. Ranks are stored
//! per equivalence class, since equivalent edges are equally long everywhere.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::assignment::min_cost_assignment;
use crate::error::MatchingError;
use crate::geom::{EdgeClasses, EdgeRef, Instance, LengthKeys, Point};
use crate::scalar::Scalar;

/// Partial injection `B ↪ A`, stored as edges sorted by `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<EdgeRef>,
}

impl Matching {
    /// Rejects edge lists that reuse an `a` or a `b`.
    pub fn new(mut edges: Vec<EdgeRef>) -> Result<Self, MatchingError> {
        edges.sort_by_key(|e| (e.b, e.a));
        let mut seen_a: Vec<usize> = edges.iter().map(|e| e.a).collect();
        seen_a.sort_unstable();
        let dup_a = seen_a.windows(2).any(|w| w[0] == w[1]);
        let dup_b = edges.windows(2).any(|w| w[0].b == w[1].b);
        if dup_a || dup_b {
            return Err(MatchingError::InvalidGraph("matching reuses a vertex"));
        }
        Ok(Matching { edges })
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    fn from_mates(mate_b: &[Option<usize>]) -> Self {
        let edges = mate_b
            .iter()
            .enumerate()
            .filter_map(|(b, a)| a.map(|a| EdgeRef::new(a, b)))
            .collect();
        Matching { edges }
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True when all of `B` (size `k`) is matched.
    pub fn is_complete(&self, k: usize) -> bool {
        self.edges.len() == k
    }

    pub fn partner_of(&self, b: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.b == b).map(|e| e.a)
    }

    pub fn contains(&self, e: EdgeRef) -> bool {
        self.partner_of(e.b) == Some(e.a)
    }

    /// Matched points of `A`, ascending.
    pub fn matched_a(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.edges.iter().map(|e| e.a).collect();
        v.sort_unstable();
        v
    }

    /// Bottleneck cost `max ‖b + t − σ(b)‖²` (zero when empty).
    pub fn cost(&self, inst: &Instance, t: &Point) -> Scalar {
        self.edges.iter().map(|&e| inst.sq_len(e, t)).max().unwrap_or_else(Scalar::zero)
    }

    /// A longest edge at `t`; the first in `b` order among ties.
    pub fn longest_edge(&self, inst: &Instance, t: &Point) -> Option<EdgeRef> {
        let mut best: Option<(Scalar, EdgeRef)> = None;
        for &e in &self.edges {
            let l = inst.sq_len(e, t);
            if best.as_ref().map_or(true, |(bl, _)| l > *bl) {
                best = Some((l, e));
            }
        }
        best.map(|(_, e)| e)
    }

    pub fn lex_cost(&self, inst: &Instance, t: &Point) -> LexCostVector {
        LexCostVector::from_lengths(self.edges.iter().map(|&e| inst.sq_len(e, t)).collect())
    }
}

/// Squared edge lengths of a matching sorted decreasingly; compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LexCostVector(Vec<Scalar>);

impl LexCostVector {
    pub fn from_lengths(mut lengths: Vec<Scalar>) -> Self {
        lengths.sort_by(|a, b| b.cmp(a));
        LexCostVector(lengths)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    /// The bottleneck (first) entry.
    pub fn bottleneck(&self) -> Option<&Scalar> {
        self.0.first()
    }
}

/// Whether the two edges of an inducing pair share their `B` point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairKind {
    SameB,
    DiffB,
}

/// Bipartite graph on `(A, B)` restricted to the candidate edges `Z`, with
/// dense rank weights shared by equivalent edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateGraph {
    n: usize,
    k: usize,
    classes: Arc<EdgeClasses>,
    in_z: Vec<bool>,
    /// Rank per class; 0 when the class has no edge in `Z`.
    class_rank: Vec<u32>,
}

impl CandidateGraph {
    /// Graph with explicit ranks, for tests and small examples. Edges sharing a
    /// rank are treated as one equivalence class (so they need distinct `b`);
    /// unlisted edges are absent. Ranks are compressed to `1..`.
    pub fn from_ranked_edges(n: usize, k: usize, ranked: &[(EdgeRef, u32)]) -> Result<Self, MatchingError> {
        let mut groups: BTreeMap<u32, Vec<EdgeRef>> = BTreeMap::new();
        let mut listed = vec![false; n * k];
        for &(e, w) in ranked {
            if e.a >= n || e.b >= k {
                return Err(MatchingError::InvalidGraph("edge out of range"));
            }
            if w == 0 {
                return Err(MatchingError::InvalidGraph("ranks start at 1"));
            }
            if core::mem::replace(&mut listed[e.b * n + e.a], true) {
                return Err(MatchingError::InvalidGraph("edge listed twice"));
            }
            let group = groups.entry(w).or_default();
            if group.iter().any(|f| f.b == e.b) {
                return Err(MatchingError::InvalidGraph("equal ranks at one b"));
            }
            group.push(e);
        }
        let mut members: Vec<Vec<EdgeRef>> = Vec::new();
        let mut class_rank = Vec::new();
        for (i, (_, mut group)) in groups.into_iter().enumerate() {
            group.sort_by_key(|e| (e.b, e.a));
            members.push(group);
            class_rank.push(i as u32 + 1);
        }
        for b in 0..k {
            for a in 0..n {
                if !listed[b * n + a] {
                    members.push(vec![EdgeRef::new(a, b)]);
                    class_rank.push(0);
                }
            }
        }
        Ok(CandidateGraph {
            n,
            k,
            classes: Arc::new(EdgeClasses::from_partition(n, k, members)),
            in_z: listed,
            class_rank,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn classes(&self) -> &EdgeClasses {
        &self.classes
    }

    fn idx(&self, e: EdgeRef) -> usize {
        e.b * self.n + e.a
    }

    pub fn in_z(&self, e: EdgeRef) -> bool {
        self.in_z[self.idx(e)]
    }

    /// Rank of an edge in `Z`.
    pub fn rank(&self, e: EdgeRef) -> Option<u32> {
        if self.in_z(e) {
            Some(self.class_rank[self.classes.class_of(e)])
        } else {
            None
        }
    }

    pub fn class_rank(&self, class: usize) -> u32 {
        self.class_rank[class]
    }

    pub fn max_rank(&self) -> u32 {
        self.class_rank.iter().copied().max().unwrap_or(0)
    }

    /// All edges of `Z` in `(b, a)` order.
    pub fn z_edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::new();
        for b in 0..self.k {
            for a in 0..self.n {
                if self.in_z[b * self.n + a] {
                    out.push(EdgeRef::new(a, b));
                }
            }
        }
        out
    }

    /// `E_b`, ordered by rank then `a`.
    pub fn candidates(&self, b: usize) -> Vec<EdgeRef> {
        let mut out: Vec<EdgeRef> = (0..self.n).map(|a| EdgeRef::new(a, b)).filter(|&e| self.in_z(e)).collect();
        out.sort_by_key(|&e| (self.rank(e), e.a));
        out
    }

    /// Largest rank used by `m`; `None` if some edge of `m` is not in `Z`.
    pub fn matching_rank(&self, m: &Matching) -> Option<u32> {
        let mut r = 0;
        for &e in m.edges() {
            r = r.max(self.rank(e)?);
        }
        Some(r)
    }

    /// Structural checks: dense ranks, ranked classes are exactly those meeting `Z`.
    pub fn check_invariants(&self) -> Result<(), MatchingError> {
        let mut has_z = vec![false; self.classes.len()];
        for (i, &z) in self.in_z.iter().enumerate() {
            if z {
                has_z[self.classes.class_of(EdgeRef::new(i % self.n, i / self.n))] = true;
            }
        }
        for (c, &r) in self.class_rank.iter().enumerate() {
            if (r > 0) != has_z[c] {
                return Err(MatchingError::InvalidGraph("ranked classes and Z disagree"));
            }
        }
        let mut ranks: Vec<u32> = self.class_rank.iter().copied().filter(|&r| r > 0).collect();
        ranks.sort_unstable();
        ranks.dedup();
        if ranks.iter().enumerate().any(|(i, &r)| r != i as u32 + 1) {
            return Err(MatchingError::InvalidGraph("ranks are not dense"));
        }
        Ok(())
    }

    fn adjacency(&self, cap: u32) -> Vec<Vec<usize>> {
        (0..self.k)
            .map(|b| {
                (0..self.n)
                    .filter(|&a| self.rank(EdgeRef::new(a, b)).map_or(false, |r| r <= cap))
                    .collect()
            })
            .collect()
    }

    fn first_isolated_b(&self) -> Option<usize> {
        (0..self.k).find(|&b| (0..self.n).all(|a| !self.in_z(EdgeRef::new(a, b))))
    }

    fn compress_ranks(&mut self) {
        let mut ranks: Vec<u32> = self.class_rank.iter().copied().filter(|&r| r > 0).collect();
        ranks.sort_unstable();
        ranks.dedup();
        for r in self.class_rank.iter_mut() {
            if *r > 0 {
                *r = ranks.binary_search(r).expect("present") as u32 + 1;
            }
        }
    }
}

/// Candidate graph at translation `t`: per `b` the `k` shortest edges plus any
/// edge tying the `k`-th, ranked by distinct squared length.
pub fn prune_candidates(inst: &Instance, t: &Point) -> CandidateGraph {
    prune_candidates_with(Arc::new(EdgeClasses::of_instance(inst)), inst, t)
}

/// As [`prune_candidates`], reusing precomputed equivalence classes.
pub fn prune_candidates_with(classes: Arc<EdgeClasses>, inst: &Instance, t: &Point) -> CandidateGraph {
    match inst.length_keys(t) {
        LengthKeys::Small(keys) => prune_by_keys(classes, inst.n(), inst.k(), &keys),
        LengthKeys::Big(keys) => prune_by_keys(classes, inst.n(), inst.k(), &keys),
    }
}

fn prune_by_keys<K: Ord>(classes: Arc<EdgeClasses>, n: usize, k: usize, lens: &[K]) -> CandidateGraph {
    let mut in_z = vec![false; n * k];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for b in 0..k {
        order.clear();
        order.extend(0..n);
        order.sort_by(|&x, &y| lens[b * n + x].cmp(&lens[b * n + y]).then(x.cmp(&y)));
        let kth = &lens[b * n + order[k - 1]];
        for &a in &order {
            let l = &lens[b * n + a];
            if l > kth {
                break;
            }
            in_z[b * n + a] = true;
        }
    }
    let mut class_len: Vec<Option<&K>> = vec![None; classes.len()];
    for (i, &z) in in_z.iter().enumerate() {
        if z {
            class_len[classes.class_of(EdgeRef::new(i % n, i / n))] = Some(&lens[i]);
        }
    }
    let mut distinct: Vec<&K> = class_len.iter().flatten().copied().collect();
    distinct.sort();
    distinct.dedup();
    let class_rank = class_len
        .iter()
        .map(|l| match l {
            Some(l) => distinct.binary_search(l).expect("present") as u32 + 1,
            None => 0,
        })
        .collect();
    CandidateGraph { n, k, classes, in_z, class_rank }
}

fn try_augment(
    b: usize,
    adj: &[Vec<usize>],
    dist: &mut [u32],
    mate_b: &mut [Option<usize>],
    mate_a: &mut [Option<usize>],
) -> bool {
    for &a in &adj[b] {
        let ok = match mate_a[a] {
            None => true,
            Some(b2) => dist[b2] == dist[b] + 1 && try_augment(b2, adj, dist, mate_b, mate_a),
        };
        if ok {
            mate_a[a] = Some(b);
            mate_b[b] = Some(a);
            return true;
        }
    }
    dist[b] = u32::MAX;
    false
}

/// Hopcroft–Karp phases from the given partial matching.
fn hopcroft_karp(adj: &[Vec<usize>], mate_b: &mut [Option<usize>], mate_a: &mut [Option<usize>]) {
    let k = adj.len();
    let mut dist = vec![u32::MAX; k];
    loop {
        // Layer B vertices by alternating distance from the free ones.
        let mut queue = Vec::with_capacity(k);
        for b in 0..k {
            if mate_b[b].is_none() {
                dist[b] = 0;
                queue.push(b);
            } else {
                dist[b] = u32::MAX;
            }
        }
        let mut found = false;
        let mut head = 0;
        while head < queue.len() {
            let b = queue[head];
            head += 1;
            for &a in &adj[b] {
                match mate_a[a] {
                    None => found = true,
                    Some(b2) if dist[b2] == u32::MAX => {
                        dist[b2] = dist[b] + 1;
                        queue.push(b2);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            return;
        }
        let mut grew = false;
        for b in 0..k {
            if mate_b[b].is_none() && try_augment(b, adj, &mut dist, mate_b, mate_a) {
                grew = true;
            }
        }
        if !grew {
            return;
        }
    }
}

/// Maximum matching of `G(cap)`, the subgraph of edges with rank `≤ cap`.
pub fn max_matching(g: &CandidateGraph, cap: u32) -> Matching {
    augment_from(g, cap, &Matching::empty())
}

/// Maximum matching of `G(cap)` grown from the edges of `start` that lie in `G(cap)`.
pub fn augment_from(g: &CandidateGraph, cap: u32, start: &Matching) -> Matching {
    let adj = g.adjacency(cap);
    let mut mate_b = vec![None; g.k];
    let mut mate_a = vec![None; g.n];
    for &e in start.edges() {
        if g.rank(e).map_or(false, |r| r <= cap) {
            mate_b[e.b] = Some(e.a);
            mate_a[e.a] = Some(e.b);
        }
    }
    hopcroft_karp(&adj, &mut mate_b, &mut mate_a);
    let m = Matching::from_mates(&mate_b);
    debug_assert!(!has_augmenting_path(g, cap, &m), "Hopcroft–Karp left an augmenting path");
    m
}

/// Exhaustive search for an `m`-augmenting path in `G(cap)`.
pub fn has_augmenting_path(g: &CandidateGraph, cap: u32, m: &Matching) -> bool {
    fn reach(
        b: usize,
        adj: &[Vec<usize>],
        mate_a: &[Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &a in &adj[b] {
            if seen[a] {
                continue;
            }
            seen[a] = true;
            match mate_a[a] {
                None => return true,
                Some(b2) => {
                    if reach(b2, adj, mate_a, seen) {
                        return true;
                    }
                }
            }
        }
        false
    }
    let adj = g.adjacency(cap);
    let mut mate_a = vec![None; g.n];
    for &e in m.edges() {
        mate_a[e.a] = Some(e.b);
    }
    (0..g.k).filter(|&b| m.partner_of(b).is_none()).any(|b| {
        let mut seen = vec![false; g.n];
        reach(b, &adj, &mate_a, &mut seen)
    })
}

/// Complete matching minimizing the largest rank, by binary search over rank
/// thresholds with [`max_matching`] as the feasibility test.
///
/// Feasibility must be monotone in the threshold; every probe is checked
/// against that and a violation is reported as a contract error.
pub fn bottleneck_matching(g: &CandidateGraph) -> Result<(Matching, u32), MatchingError> {
    if let Some(b) = g.first_isolated_b() {
        return Err(MatchingError::NoCompleteMatching { b });
    }
    let top = g.max_rank();
    let full = max_matching(g, top);
    if !full.is_complete(g.k) {
        let b = (0..g.k).find(|&b| full.partner_of(b).is_none()).unwrap_or(0);
        return Err(MatchingError::NoCompleteMatching { b });
    }
    let mut probes: Vec<(u32, bool)> = vec![(top, true)];
    let (mut lo, mut hi) = (1u32, top);
    let mut best = full;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let m = max_matching(g, mid);
        let feasible = m.is_complete(g.k);
        if probes.iter().any(|&(c, f)| (f && !feasible && c <= mid) || (!f && feasible && c >= mid)) {
            return Err(MatchingError::ContractViolation("threshold feasibility is not monotone"));
        }
        probes.push((mid, feasible));
        if feasible {
            hi = mid;
            best = m;
        } else {
            lo = mid + 1;
        }
    }
    let rank = g.matching_rank(&best).unwrap_or(hi);
    if rank != hi {
        return Err(MatchingError::ContractViolation("bottleneck rank differs from the threshold"));
    }
    Ok((best, hi))
}

/// Complete matching whose decreasingly sorted rank vector is lexicographically
/// minimal, via min-cost assignment with cost `(k+1)^rank`.
pub fn lex_bottleneck_matching(g: &CandidateGraph) -> Result<(Matching, Vec<u32>), MatchingError> {
    if let Some(b) = g.first_isolated_b() {
        return Err(MatchingError::NoCompleteMatching { b });
    }
    let top = g.max_rank();
    let full = max_matching(g, top);
    if !full.is_complete(g.k) {
        let b = (0..g.k).find(|&b| full.partner_of(b).is_none()).unwrap_or(0);
        return Err(MatchingError::NoCompleteMatching { b });
    }
    let mut cols: Vec<usize> = g.z_edges().iter().map(|e| e.a).collect();
    cols.sort_unstable();
    cols.dedup();
    let base = BigInt::from(g.k as u64 + 1);
    let powers: Vec<BigInt> = (0..=top + 1).map(|w| Pow::pow(&base, w)).collect();
    let forbidden = &powers[top as usize + 1];
    let cost: Vec<Vec<BigInt>> = (0..g.k)
        .map(|b| {
            cols.iter()
                .map(|&a| match g.rank(EdgeRef::new(a, b)) {
                    Some(w) => powers[w as usize].clone(),
                    None => forbidden.clone(),
                })
                .collect()
        })
        .collect();
    let assignment = min_cost_assignment(&cost);
    let mut edges = Vec::with_capacity(g.k);
    let mut ranks = Vec::with_capacity(g.k);
    for (b, &col) in assignment.iter().enumerate() {
        let e = EdgeRef::new(cols[col], b);
        match g.rank(e) {
            Some(w) => ranks.push(w),
            None => return Err(MatchingError::NoCompleteMatching { b }),
        }
        edges.push(e);
    }
    debug_assert!(powers[0].is_one());
    ranks.sort_by(|x, y| y.cmp(x));
    Ok((Matching::new(edges)?, ranks))
}

/// Updates `(G, μ)` when the translation crosses the bisector of `pair`.
///
/// Works on the two equivalence classes of the pair. Let `lo` be the class
/// that is shorter before the crossing (it has rank `r`) and `hi` the other:
///
/// 1. `hi` is tied to rank `r`.
/// 2. At every `b` where `lo` is in `E_b` and `hi` is the first excluded edge,
///    membership swaps. If the dropped edge was matched, `μ` is re-augmented
///    within its current bottleneck rank.
/// 3. `lo` moves to rank `r + 1` (or loses its rank if it left `Z`). When `μ`'s
///    bottleneck was `lo`, a complete matching of `G(r)` replaces it if one exists.
///
/// Pairs that cannot touch `Z` are no-ops.
pub fn update_on_swap(
    g: &mut CandidateGraph,
    mu: &mut Matching,
    pair: (EdgeRef, EdgeRef),
    kind: PairKind,
) -> Result<(), MatchingError> {
    let (e1, e2) = pair;
    if e1.a >= g.n || e2.a >= g.n || e1.b >= g.k || e2.b >= g.k {
        return Err(MatchingError::InvalidGraph("edge out of range"));
    }
    let same = e1.b == e2.b;
    if same != (kind == PairKind::SameB) {
        return Err(MatchingError::ContractViolation("pair kind does not match its edges"));
    }
    if !mu.is_complete(g.k) {
        return Err(MatchingError::ContractViolation("matching is not complete before the update"));
    }
    let (c1, c2) = (g.classes.class_of(e1), g.classes.class_of(e2));
    if c1 == c2 {
        return Err(MatchingError::ContractViolation("pair edges are equivalent"));
    }
    let (r1, r2) = (g.class_rank[c1], g.class_rank[c2]);
    let (lo, hi) = match (r1, r2) {
        (0, 0) => return Ok(()),
        (_, 0) | (0, _) => {
            let (c, other) = if r1 > 0 { (c1, c2) } else { (c2, c1) };
            let crosses = (0..g.k).any(|b| {
                g.classes.member_at(c, b).map_or(false, |e| g.in_z(e)) && g.classes.member_at(other, b).is_some()
            });
            if !crosses {
                return Ok(());
            }
            (c, other)
        }
        _ => match r1.cmp(&r2) {
            Ordering::Less if r2 == r1 + 1 => (c1, c2),
            Ordering::Greater if r1 == r2 + 1 => (c2, c1),
            _ => return Err(MatchingError::ContractViolation("swapped classes are not adjacent in rank")),
        },
    };
    let r = g.class_rank[lo];

    // 1. tie
    g.class_rank[hi] = r;

    // 2. membership
    for b in 0..g.k {
        let (Some(le), Some(he)) = (g.classes.member_at(lo, b), g.classes.member_at(hi, b)) else {
            continue;
        };
        if !g.in_z(le) || g.in_z(he) {
            continue;
        }
        let (li, hi_idx) = (g.idx(le), g.idx(he));
        g.in_z[li] = false;
        g.in_z[hi_idx] = true;
        if mu.contains(le) {
            let cap = mu
                .edges()
                .iter()
                .map(|&e| if e == le { r } else { g.rank(e).unwrap_or(u32::MAX) })
                .max()
                .unwrap_or(r);
            let rest = Matching {
                edges: mu.edges().iter().copied().filter(|&e| e != le).collect(),
            };
            let grown = augment_from(g, cap, &rest);
            if !grown.is_complete(g.k) {
                return Err(MatchingError::ContractViolation("re-augmentation after a membership swap failed"));
            }
            *mu = grown;
        }
    }

    // 3. untie
    let lo_in_z = g.classes.members(lo).iter().any(|&e| g.in_z(e));
    if lo_in_z {
        for (c, w) in g.class_rank.iter_mut().enumerate() {
            if c != lo && c != hi && *w > r {
                *w += 1;
            }
        }
        g.class_rank[lo] = r + 1;
        let holds_lo = mu.edges().iter().any(|&e| g.classes.class_of(e) == lo);
        if holds_lo && g.matching_rank(mu) == Some(r + 1) {
            let better = augment_from(g, r, mu);
            if better.is_complete(g.k) {
                *mu = better;
            }
        }
    } else {
        g.class_rank[lo] = 0;
    }
    g.compress_ranks();
    if g.matching_rank(mu).is_none() {
        return Err(MatchingError::ContractViolation("matching uses an edge outside Z"));
    }
    Ok(())
}
