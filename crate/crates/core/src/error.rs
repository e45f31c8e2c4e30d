use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("malformed rational (expected an integer or \"p/q\")")]
    Malformed,
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Errors raised while validating inputs or evaluating geometric primitives.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("point set B is empty")]
    EmptyPattern,
    #[error("|B| = {k} exceeds |A| = {n}")]
    PatternLargerThanSet { n: usize, k: usize },
    #[error("duplicate point in set {set} at index {index}")]
    DuplicatePoint { set: char, index: usize },
    #[error("edge ({a}, {b}) out of range")]
    IndexOutOfRange { a: usize, b: usize },
    #[error("polygon is not strictly convex")]
    NotConvex,
    #[error("polygon has no vertices")]
    EmptyPolygon,
    #[error("empty edge list")]
    NoEdges,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("no complete matching: point {b} of B cannot be matched")]
    NoCompleteMatching { b: usize },
    #[error("contract violation: {0}")]
    ContractViolation(&'static str),
    #[error("invalid candidate graph: {0}")]
    InvalidGraph(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("query point lies outside the bounding box")]
    OutsideBox,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration of {count} injections exceeds the budget of {budget}")]
    TooLarge { count: u128, budget: u128 },
    #[error("no translation places B inside the polygon")]
    EmptyRegion,
}
