//! Labeled bottleneck diagrams.
//!
//! A [`Diagram`] is the arrangement of (used or all) bisectors for an
//! instance. Labeling assigns each cell a bottleneck matching that is optimal
//! on the whole closed cell, either from scratch per cell or by a traversal
//! that updates one matching across bisector crossings. Lex labels cover every
//! face of the diagram.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::arrangement::{all_bisectors, build_arrangement, used_bisectors, Arrangement, Bisector, FaceRef};
use crate::error::MatchingError;
use crate::geom::{EdgeClasses, EdgeRef, Instance, Line, Point};
use crate::matching::{
    augment_from, bottleneck_matching, lex_bottleneck_matching, prune_candidates_with, update_on_swap,
    CandidateGraph, LexCostVector, Matching, PairKind,
};
use crate::scalar::Scalar;

/// Which bisectors make up the arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Selection {
    /// The filtered subset (smaller, same labels).
    #[default]
    Used,
    /// Every bisector.
    All,
}

/// `E(t)` with a witness matching.
pub fn eval_e(inst: &Instance, t: &Point) -> (Scalar, Matching) {
    eval_e_with(&Arc::new(EdgeClasses::of_instance(inst)), inst, t)
}

pub(crate) fn eval_e_with(classes: &Arc<EdgeClasses>, inst: &Instance, t: &Point) -> (Scalar, Matching) {
    let g = prune_candidates_with(classes.clone(), inst, t);
    let (m, _) = bottleneck_matching(&g).expect("|A| ≥ |B| guarantees a complete matching");
    (m.cost(inst, t), m)
}

/// An instance together with its bisector arrangement.
#[derive(Clone, Debug)]
pub struct Diagram {
    inst: Instance,
    selection: Selection,
    bisectors: Vec<Bisector>,
    arr: Arrangement,
    classes: Arc<EdgeClasses>,
}

impl Diagram {
    pub fn new(inst: &Instance) -> Self {
        Diagram::build(inst, Selection::Used, &[])
    }

    /// The box is chosen to contain every site `a − b`, every projection of a
    /// site onto a bisector, every bisector crossing, and `extra`.
    pub fn build(inst: &Instance, selection: Selection, extra: &[Point]) -> Self {
        let all = all_bisectors(inst);
        let bisectors = match selection {
            Selection::Used => used_bisectors(inst, &all),
            Selection::All => all,
        };
        let lines: Vec<Line> = bisectors.iter().map(|h| h.line.clone()).collect();
        let sites: Vec<Point> = {
            let mut s: Vec<Point> = inst.edges().map(|e| inst.site(e)).collect();
            s.sort();
            s.dedup();
            s
        };
        let mut must: Vec<Point> = sites.clone();
        for l in &lines {
            must.extend(sites.iter().map(|s| l.project(s)));
        }
        must.extend(extra.iter().cloned());
        let arr = build_arrangement(&lines, &must);
        Diagram {
            inst: inst.clone(),
            selection,
            bisectors,
            arr,
            classes: Arc::new(EdgeClasses::of_instance(inst)),
        }
    }

    pub fn instance(&self) -> &Instance {
        &self.inst
    }

    pub fn selection(&self) -> Selection {
        self.selection
    }

    /// Bisectors, aligned with the arrangement's lines.
    pub fn bisectors(&self) -> &[Bisector] {
        &self.bisectors
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    pub fn classes(&self) -> &Arc<EdgeClasses> {
        &self.classes
    }

    pub fn candidate_graph(&self, t: &Point) -> CandidateGraph {
        prune_candidates_with(self.classes.clone(), &self.inst, t)
    }

    pub fn eval(&self, t: &Point) -> (Scalar, Matching) {
        eval_e_with(&self.classes, &self.inst, t)
    }

    /// Faces that carry lex labels: all cells, bisector edges, and vertices
    /// where at least two bisectors meet.
    pub fn diagram_faces(&self) -> Vec<(FaceRef, Point)> {
        let arr = &self.arr;
        let mut out = Vec::new();
        for c in 0..arr.cell_count() {
            out.push((FaceRef::Cell(c), arr.cell_sample(c)));
        }
        for (i, e) in arr.edges().iter().enumerate() {
            if e.line.is_some() {
                out.push((FaceRef::Edge(i), arr.edge_midpoint(i)));
            }
        }
        for (v, p) in arr.vertices().iter().enumerate() {
            if arr.lines_through(v).len() >= 2 {
                out.push((FaceRef::Vertex(v), p.clone()));
            }
        }
        out
    }
}

/// Bottleneck label of one cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellLabel {
    /// Interior sample (vertex centroid).
    pub sample: Point,
    pub matching: Matching,
    /// Longest edge of `matching` inside the cell.
    pub longest: EdgeRef,
    /// Bottleneck rank within the cell's candidate graph.
    pub rank: u32,
    /// `E` at the sample.
    pub value: Scalar,
}

impl CellLabel {
    fn new(inst: &Instance, sample: Point, matching: Matching, rank: u32) -> Self {
        let longest = matching.longest_edge(inst, &sample).expect("B is nonempty");
        let value = inst.sq_len(longest, &sample);
        CellLabel { sample, matching, longest, rank, value }
    }
}

/// Lex label of one face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLabel {
    pub face: FaceRef,
    pub sample: Point,
    pub matching: Matching,
    /// Decreasing candidate ranks of the matched edges at the sample.
    pub ranks: Vec<u32>,
    pub cost: LexCostVector,
}

/// Labels every cell by recomputing a bottleneck matching at its sample.
pub fn label_cells_recompute(d: &Diagram) -> Vec<CellLabel> {
    (0..d.arr.cell_count())
        .map(|c| {
            let t = d.arr.cell_sample(c);
            let g = d.candidate_graph(&t);
            let (m, rank) = bottleneck_matching(&g).expect("|A| ≥ |B| guarantees a complete matching");
            CellLabel::new(&d.inst, t, m, rank)
        })
        .collect()
}

/// One class-level swap per pair of equivalence classes on a line.
fn class_swaps(classes: &EdgeClasses, h: &Bisector) -> Vec<(EdgeRef, EdgeRef, PairKind)> {
    let mut seen: BTreeMap<(usize, usize), (EdgeRef, EdgeRef, PairKind)> = BTreeMap::new();
    for p in &h.pairs {
        let (c1, c2) = (classes.class_of(p.first), classes.class_of(p.second));
        seen.entry((c1.min(c2), c1.max(c2))).or_insert((p.first, p.second, p.kind));
    }
    seen.into_values().collect()
}

fn cross(
    g: &mut CandidateGraph,
    mu: &mut Matching,
    swaps: &[(EdgeRef, EdgeRef, PairKind)],
) -> Result<(), MatchingError> {
    for &(e1, e2, kind) in swaps {
        update_on_swap(g, mu, (e1, e2), kind)?;
    }
    // Several class pairs can share a line; once all are applied, the
    // bottleneck may still drop by one rank.
    while let Some(r) = g.matching_rank(mu) {
        if r <= 1 {
            break;
        }
        let better = augment_from(g, r - 1, mu);
        if !better.is_complete(g.k()) {
            break;
        }
        *mu = better;
    }
    Ok(())
}

/// Applies the crossing of arrangement line `line` to a carried state `(g, mu)`.
pub fn apply_crossing(
    d: &Diagram,
    g: &mut CandidateGraph,
    mu: &mut Matching,
    line: usize,
) -> Result<(), MatchingError> {
    cross(g, mu, &class_swaps(&d.classes, &d.bisectors[line]))
}

fn traverse(d: &Diagram, verify: bool) -> Result<Vec<CellLabel>, MatchingError> {
    let arr = &d.arr;
    let nc = arr.cell_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nc];
    for de in arr.dual_edges() {
        let (a, b) = de.cells;
        adj[a].push((b, de.edge));
        adj[b].push((a, de.edge));
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
    }
    let swaps: Vec<Vec<(EdgeRef, EdgeRef, PairKind)>> =
        d.bisectors.iter().map(|h| class_swaps(&d.classes, h)).collect();

    let mut labels: Vec<Option<CellLabel>> = vec![None; nc];
    let mut queued = vec![false; nc];
    let t0 = arr.cell_sample(0);
    let g0 = d.candidate_graph(&t0);
    let (m0, _) = bottleneck_matching(&g0)?;
    let mut queue: alloc::collections::VecDeque<(usize, CandidateGraph, Matching)> = alloc::collections::VecDeque::new();
    queue.push_back((0, g0, m0));
    queued[0] = true;
    while let Some((c, g, mu)) = queue.pop_front() {
        let t = arr.cell_sample(c);
        let rank = g.matching_rank(&mu).ok_or(MatchingError::ContractViolation("label leaves Z"))?;
        if verify {
            let fresh = d.candidate_graph(&t);
            let same_z = fresh.z_edges() == g.z_edges();
            let same_order = same_z && fresh.z_edges().iter().all(|&e| fresh.rank(e) == g.rank(e));
            if !same_order {
                return Err(MatchingError::ContractViolation("incremental candidate graph diverged"));
            }
            let (_, best) = bottleneck_matching(&fresh)?;
            if best != rank {
                return Err(MatchingError::ContractViolation("incremental label is not a bottleneck matching"));
            }
        }
        for &(nb, edge) in &adj[c] {
            if queued[nb] {
                continue;
            }
            queued[nb] = true;
            let (mut g2, mut mu2) = (g.clone(), mu.clone());
            let line = arr.edges()[edge].line.expect("dual edges are line-supported");
            cross(&mut g2, &mut mu2, &swaps[line])?;
            queue.push_back((nb, g2, mu2));
        }
        labels[c] = Some(CellLabel::new(&d.inst, t, mu, rank));
    }
    labels
        .into_iter()
        .map(|l| l.ok_or(MatchingError::ContractViolation("cell not reached")))
        .collect()
}

/// Labels cells by a breadth-first traversal of the dual graph from cell 0,
/// carrying one candidate graph and matching across each crossed bisector.
pub fn label_cells_incremental(d: &Diagram) -> Result<Vec<CellLabel>, MatchingError> {
    traverse(d, false)
}

/// As [`label_cells_incremental`], checking the carried candidate graph and
/// bottleneck rank against a recomputation in every cell.
pub fn label_cells_incremental_checked(d: &Diagram) -> Result<Vec<CellLabel>, MatchingError> {
    traverse(d, true)
}

/// Lex-bottleneck label for every diagram face, computed at its sample with
/// ties active.
pub fn label_faces_lex(d: &Diagram) -> Vec<FaceLabel> {
    d.diagram_faces()
        .into_iter()
        .map(|(face, sample)| {
            let g = d.candidate_graph(&sample);
            let (matching, ranks) = lex_bottleneck_matching(&g).expect("|A| ≥ |B| guarantees a complete matching");
            let cost = matching.lex_cost(&d.inst, &sample);
            FaceLabel { face, sample, matching, ranks, cost }
        })
        .collect()
}

/// How cell labels are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LabelMode {
    #[default]
    Recompute,
    Incremental,
}

/// A diagram with its cell labels and optional lex face labels.
#[derive(Clone, Debug)]
pub struct LabeledDiagram {
    diagram: Diagram,
    cells: Vec<CellLabel>,
    faces: Vec<FaceLabel>,
}

impl LabeledDiagram {
    pub fn new(diagram: Diagram, mode: LabelMode) -> Result<Self, MatchingError> {
        let cells = match mode {
            LabelMode::Recompute => label_cells_recompute(&diagram),
            LabelMode::Incremental => label_cells_incremental(&diagram)?,
        };
        Ok(LabeledDiagram { diagram, cells, faces: Vec::new() })
    }

    /// Adds lex labels for every face.
    pub fn with_lex(mut self) -> Self {
        self.faces = label_faces_lex(&self.diagram);
        self
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn instance(&self) -> &Instance {
        &self.diagram.inst
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.diagram.arr
    }

    pub fn cells(&self) -> &[CellLabel] {
        &self.cells
    }

    /// Empty unless built [`with_lex`](Self::with_lex).
    pub fn faces(&self) -> &[FaceLabel] {
        &self.faces
    }

    /// Cost of cell `c`'s label at `t`; equals `E(t)` for `t` in the closed cell.
    pub fn label_cost(&self, c: usize, t: &Point) -> Scalar {
        self.cells[c].matching.cost(&self.diagram.inst, t)
    }
}
