//! Result documents. Exact values are `"p/q"` strings; `approx` fields are for
//! reading only.

use bottleneck_voronoi::{
    CellLabel, CoverResult, EdgeRef, FaceLabel, FaceRef, LabeledDiagram, Matching, PathResult, Point, Scalar,
    Translation,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Exact {
    pub value: String,
    pub approx: f64,
}

impl Exact {
    pub fn new(v: &Scalar) -> Self {
        Exact { value: v.to_string(), approx: v.to_f64() }
    }

    pub fn parse(&self) -> Option<Scalar> {
        self.value.parse().ok()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactPoint {
    pub exact: [String; 2],
    pub approx: [f64; 2],
}

impl ExactPoint {
    pub fn new(p: &Point) -> Self {
        let (x, y) = p.to_f64();
        ExactPoint { exact: [p.x.to_string(), p.y.to_string()], approx: [x, y] }
    }

    pub fn parse(&self) -> Option<Point> {
        Some(Point::new(self.exact[0].parse().ok()?, self.exact[1].parse().ok()?))
    }
}

/// Matched pairs as `[a, b]` index lists, sorted by `b`.
pub fn pairs(m: &Matching) -> Vec<[usize; 2]> {
    m.edges().iter().map(|e| [e.a, e.b]).collect()
}

fn edge(e: EdgeRef) -> [usize; 2] {
    [e.a, e.b]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalOutput {
    pub t: ExactPoint,
    pub value: String,
    pub approx: f64,
    pub matching: Vec<[usize; 2]>,
}

impl EvalOutput {
    pub fn new(t: &Point, value: &Scalar, m: &Matching) -> Self {
        EvalOutput { t: ExactPoint::new(t), value: value.to_string(), approx: value.to_f64(), matching: pairs(m) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatchOutput {
    pub t: ExactPoint,
    pub value: String,
    pub approx: f64,
    pub matching: Vec<[usize; 2]>,
}

impl MatchOutput {
    pub fn new(r: &Translation) -> Self {
        MatchOutput {
            t: ExactPoint::new(&r.t),
            value: r.value.to_string(),
            approx: r.value.to_f64(),
            matching: pairs(&r.matching),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathOutput {
    pub value: String,
    pub approx: f64,
    pub polyline: Vec<ExactPoint>,
    /// `E` at each polyline vertex.
    pub values: Vec<Exact>,
}

impl PathOutput {
    pub fn new(p: &PathResult) -> Self {
        PathOutput {
            value: p.value.to_string(),
            approx: p.value.to_f64(),
            polyline: p.polyline.iter().map(ExactPoint::new).collect(),
            values: p.values.iter().map(Exact::new).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverOutput {
    /// `false` when no translation places `B` inside the polygon.
    pub feasible: bool,
    pub value: Option<String>,
    pub approx: Option<f64>,
    pub witness: Option<ExactPoint>,
    pub region: Vec<ExactPoint>,
}

impl CoverOutput {
    pub fn new(r: Option<&CoverResult>) -> Self {
        match r {
            None => CoverOutput { feasible: false, value: None, approx: None, witness: None, region: Vec::new() },
            Some(r) => CoverOutput {
                feasible: true,
                value: Some(r.value.to_string()),
                approx: Some(r.value.to_f64()),
                witness: Some(ExactPoint::new(&r.witness)),
                region: r.region.vertices().iter().map(ExactPoint::new).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub cells: usize,
    pub vertices: usize,
    pub edges: usize,
    pub used_bisectors: usize,
    pub box_min: ExactPoint,
    pub box_max: ExactPoint,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellOutput {
    pub sample: ExactPoint,
    pub polygon: Vec<ExactPoint>,
    pub matching: Vec<[usize; 2]>,
    pub longest: [usize; 2],
    pub rank: u32,
    /// `E` at the sample.
    pub value: Exact,
}

impl CellOutput {
    fn new(ld: &LabeledDiagram, c: usize, l: &CellLabel) -> Self {
        CellOutput {
            sample: ExactPoint::new(&l.sample),
            polygon: ld.arrangement().cell_polygon(c).vertices().iter().map(ExactPoint::new).collect(),
            matching: pairs(&l.matching),
            longest: edge(l.longest),
            rank: l.rank,
            value: Exact::new(&l.value),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "lowercase")]
pub enum FaceId {
    Cell(usize),
    Edge(usize),
    Vertex(usize),
}

impl From<FaceRef> for FaceId {
    fn from(f: FaceRef) -> Self {
        match f {
            FaceRef::Cell(i) => FaceId::Cell(i),
            FaceRef::Edge(i) => FaceId::Edge(i),
            FaceRef::Vertex(i) => FaceId::Vertex(i),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FaceOutput {
    pub face: FaceId,
    pub sample: ExactPoint,
    pub matching: Vec<[usize; 2]>,
    /// Squared edge lengths at the sample, in decreasing order.
    pub cost: Vec<Exact>,
}

impl FaceOutput {
    fn new(f: &FaceLabel) -> Self {
        FaceOutput {
            face: f.face.into(),
            sample: ExactPoint::new(&f.sample),
            matching: pairs(&f.matching),
            cost: f.cost.values().iter().map(Exact::new).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagramOutput {
    pub summary: Summary,
    pub cells: Vec<CellOutput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lex_faces: Option<Vec<FaceOutput>>,
}

impl DiagramOutput {
    pub fn new(ld: &LabeledDiagram, lex: bool) -> Self {
        let arr = ld.arrangement();
        let (lo, hi) = arr.bounds();
        DiagramOutput {
            summary: Summary {
                cells: arr.cell_count(),
                vertices: arr.vertices().len(),
                edges: arr.edges().len(),
                used_bisectors: ld.diagram().bisectors().len(),
                box_min: ExactPoint::new(lo),
                box_max: ExactPoint::new(hi),
            },
            cells: ld.cells().iter().enumerate().map(|(c, l)| CellOutput::new(ld, c, l)).collect(),
            lex_faces: lex.then(|| ld.faces().iter().map(FaceOutput::new).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LexOutput {
    pub t: ExactPoint,
    pub cost: Vec<Exact>,
    /// Every matching attaining the optimum.
    pub matchings: Vec<Vec<[usize; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridOutput {
    pub resolution: u32,
    pub value: String,
    pub approx: f64,
}
