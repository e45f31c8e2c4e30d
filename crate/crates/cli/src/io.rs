//! Input file formats: instances, polygons and command-line points.

use std::fmt;
use std::path::Path;

use bottleneck_voronoi::{ConvexPolygon, Instance, Point, Scalar};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::CliError;

/// One exact coordinate: a JSON integer or a `"p/q"` string. Floats are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coord(pub Scalar);

impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let text = self.0.to_string();
        match text.parse::<i64>() {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&text),
        }
    }
}

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct CoordVisitor;

        impl Visitor<'_> for CoordVisitor {
            type Value = Coord;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coord, E> {
                Ok(Coord(Scalar::from_int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coord, E> {
                let v = i64::try_from(v).map_err(|_| E::custom("integer out of range; write it as a string"))?;
                Ok(Coord(Scalar::from_int(v)))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Coord, E> {
                Err(E::custom(format!("floating-point coordinate {v}; use an integer or \"p/q\"")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Coord, E> {
                v.parse().map(Coord).map_err(|e| E::custom(format!("{e}: {v:?}")))
            }
        }

        d.deserialize_any(CoordVisitor)
    }
}

pub type PointFile = [Coord; 2];

pub fn to_point(p: &PointFile) -> Point {
    Point::new(p[0].0.clone(), p[1].0.clone())
}

pub fn from_point(p: &Point) -> PointFile {
    [Coord(p.x.clone()), Coord(p.y.clone())]
}

/// `{"A": [[x, y], ...], "B": [[x, y], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(rename = "A")]
    pub a: Vec<PointFile>,
    #[serde(rename = "B")]
    pub b: Vec<PointFile>,
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance) -> Self {
        InstanceFile { a: inst.a().iter().map(from_point).collect(), b: inst.b().iter().map(from_point).collect() }
    }

    pub fn to_instance(&self) -> Result<Instance, CliError> {
        let conv = |v: &[PointFile]| v.iter().map(to_point).collect();
        Instance::new(conv(&self.a), conv(&self.b)).map_err(|e| CliError::Input(e.to_string()))
    }
}

/// A bare vertex list or `{"polygon": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolygonFile {
    Bare(Vec<PointFile>),
    Wrapped { polygon: Vec<PointFile> },
}

impl PolygonFile {
    /// Builds the polygon, accepting either orientation.
    pub fn to_polygon(&self) -> Result<ConvexPolygon, CliError> {
        let (PolygonFile::Bare(v) | PolygonFile::Wrapped { polygon: v }) = self;
        let mut pts: Vec<Point> = v.iter().map(to_point).collect();
        if signed_double_area(&pts) < Scalar::zero() {
            pts.reverse();
        }
        ConvexPolygon::new(pts).map_err(|e| CliError::Input(format!("polygon: {e}")))
    }
}

fn signed_double_area(pts: &[Point]) -> Scalar {
    let mut area = Scalar::zero();
    for (i, p) in pts.iter().enumerate() {
        area += &p.cross(&pts[(i + 1) % pts.len()]);
    }
    area
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_instance(path: &Path) -> Result<Instance, CliError> {
    let file: InstanceFile =
        serde_json::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    file.to_instance()
}

pub fn read_polygon(path: &Path) -> Result<ConvexPolygon, CliError> {
    let file: PolygonFile =
        serde_json::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    file.to_polygon()
}

/// Parses `x,y` with each coordinate an integer or `p/q`.
pub fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y but got {s:?}"))?;
    let coord = |c: &str| c.parse::<Scalar>().map_err(|e| format!("{e}: {c:?}"));
    Ok(Point::new(coord(x)?, coord(y)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_accept_integers_and_fractions() {
        let f: InstanceFile = serde_json::from_str(r#"{"A": [[0, "1/2"], [-3, "4"]], "B": [["-7/3", 2]]}"#).unwrap();
        let inst = f.to_instance().unwrap();
        assert_eq!(inst.a()[0].y, Scalar::ratio(1, 2));
        assert_eq!(inst.b()[0].x, Scalar::ratio(-7, 3));
        assert_eq!(InstanceFile::from_instance(&inst).to_instance().unwrap(), inst);
    }

    #[test]
    fn floats_and_bad_rationals_are_rejected() {
        assert!(serde_json::from_str::<InstanceFile>(r#"{"A": [[0.5, 0]], "B": [[0, 0]]}"#).is_err());
        assert!(serde_json::from_str::<InstanceFile>(r#"{"A": [["1/0", 0]], "B": [[0, 0]]}"#).is_err());
        assert!(serde_json::from_str::<InstanceFile>(r#"{"A": [["x", 0]], "B": [[0, 0]]}"#).is_err());
    }

    #[test]
    fn clockwise_polygons_are_reoriented() {
        let f: PolygonFile = serde_json::from_str(r#"[[0, 0], [0, 1], [1, 1], [1, 0]]"#).unwrap();
        assert_eq!(f.to_polygon().unwrap().vertices().len(), 4);
        let g: PolygonFile = serde_json::from_str(r#"{"polygon": [[0, 0], [1, 0], [0, 1]]}"#).unwrap();
        assert!(g.to_polygon().is_ok());
    }

    #[test]
    fn points_parse() {
        assert_eq!(parse_point("1/2,-3").unwrap(), Point::new(Scalar::ratio(1, 2), Scalar::from_int(-3)));
        assert!(parse_point("1").is_err());
        assert!(parse_point("0.5,1").is_err());
    }
}
