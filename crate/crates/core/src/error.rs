//! Error type shared by every module of the crate.

use std::fmt;

/// All the ways a computation in this crate can fail.
///
/// Every operation is total on its documented domain; these variants report
/// precondition violations and malformed inputs, never internal numerical
/// trouble. The one exception is [`Error::Internal`], raised when the three
/// irreducibility criteria disagree on a pipeline-produced polygon, which
/// would contradict the underlying theorems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed polynomial/polygon/sequence text, with a byte position into
    /// the original input.
    Parse { message: String, position: usize },
    /// A variable outside the supported pairs (x,y) / (u,v).
    UnsupportedVariable { name: char, position: usize },
    /// An exponent written with a leading minus sign.
    NegativeExponent { position: usize },
    /// The zero polynomial where a nonzero one is required.
    ZeroPolynomial,
    /// Operation needs `y`-dependence but the polynomial has none.
    NoYDependence,
    /// The coefficient of the top `y`-power must be a nonzero constant.
    NonConstantLeadingCoeff,
    /// Approximate root asked with `p` not dividing the `y`-degree, or p < 2.
    BadRootExponent { degree: usize, p: usize },
    /// A monic polynomial in `y` was required.
    NotMonic,
    /// Intersection number of polynomials with a common factor is infinite.
    CommonFactor,
    /// Intersection-number precondition: `f(0,y)` must be a pure power of `y`.
    NotCenteredAtOrigin,
    /// Newton polygon of an empty support set.
    EmptySupport,
    /// Support points must lie in the first quadrant.
    NegativeSupportPoint,
    /// Polygon terms must have positive extents.
    NonPositiveTerm,
    /// Reduction/abrasion require a convenient polygon.
    NotConvenient,
    /// Reduction/abrasion require at least two compact edges.
    TooFewTerms { have: usize },
    /// Iterated operator applied more times than there are edges to remove.
    IterateTooDeep { requested: usize, max: usize },
    /// Operation requires a polygon with at least one compact edge.
    EmptyPolygon,
    /// A sequence that is not a valid Puiseux characteristic.
    InvalidCharacteristic(String),
    /// Generators failing Bresinsky's criterion (not a plane-branch semigroup).
    NotPlaneBranch { condition: u8, index: usize },
    /// Malformed integer sequence input.
    MalformedSequence(String),
    /// The defining polynomial has a multiple factor.
    NotSquarefree,
    /// The defining polynomial is zero or does not vanish at the origin.
    UnitOrZero,
    /// No shear in the search range produced two agreeing polygons.
    NormalizationFailed { tried: u32 },
    /// Recovery asked from a polygon that fails the criterion.
    CriterionFailed { condition: u8, stage: usize },
    /// Cyclotomic orders that do not embed into one another as required.
    IncompatibleOrders { have: u32, want: u32 },
    /// Malformed fractional power series (exponents, truncation, coefficients).
    BadSeries(String),
    /// Two input roots agree below the smaller truncation order.
    AmbiguousContact { i: usize, j: usize },
    /// Contact-tree construction needs at least one root.
    NoRoots,
    /// Malformed JSON input.
    Json(String),
    /// Violation of an internal invariant backed by a theorem.
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::UnsupportedVariable { .. } => "unsupported_variable",
            Error::NegativeExponent { .. } => "negative_exponent",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::NoYDependence => "no_y_dependence",
            Error::NonConstantLeadingCoeff => "non_constant_leading_coeff",
            Error::BadRootExponent { .. } => "bad_root_exponent",
            Error::NotMonic => "not_monic",
            Error::CommonFactor => "common_factor",
            Error::NotCenteredAtOrigin => "not_centered_at_origin",
            Error::EmptySupport => "empty_support",
            Error::NegativeSupportPoint => "negative_support_point",
            Error::NonPositiveTerm => "non_positive_term",
            Error::NotConvenient => "not_convenient",
            Error::TooFewTerms { .. } => "too_few_terms",
            Error::IterateTooDeep { .. } => "iterate_too_deep",
            Error::EmptyPolygon => "empty_polygon",
            Error::InvalidCharacteristic(_) => "invalid_characteristic",
            Error::NotPlaneBranch { .. } => "not_plane_branch",
            Error::MalformedSequence(_) => "malformed_sequence",
            Error::NotSquarefree => "not_squarefree",
            Error::UnitOrZero => "unit_or_zero",
            Error::NormalizationFailed { .. } => "normalization_failed",
            Error::CriterionFailed { .. } => "criterion_failed",
            Error::IncompatibleOrders { .. } => "incompatible_orders",
            Error::BadSeries(_) => "bad_series",
            Error::AmbiguousContact { .. } => "ambiguous_contact",
            Error::NoRoots => "no_roots",
            Error::Json(_) => "json",
            Error::Internal(_) => "internal",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { message, position } => {
                write!(f, "syntax error at position {position}: {message}")
            }
            Error::UnsupportedVariable { name, position } => {
                write!(f, "unsupported variable '{name}' at position {position}")
            }
            Error::NegativeExponent { position } => {
                write!(f, "negative exponent at position {position}")
            }
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::NoYDependence => write!(f, "polynomial does not depend on y"),
            Error::NonConstantLeadingCoeff => write!(
                f,
                "coefficient of the top y-power is not a nonzero constant (try a shear)"
            ),
            Error::BadRootExponent { degree, p } => {
                write!(f, "approximate root needs p >= 2 dividing the y-degree, got p = {p} for degree {degree}")
            }
            Error::NotMonic => write!(f, "polynomial is not monic in y"),
            Error::CommonFactor => write!(f, "polynomials share a factor; intersection number is infinite"),
            Error::NotCenteredAtOrigin => {
                write!(f, "restriction to x = 0 is not a pure power of y")
            }
            Error::EmptySupport => write!(f, "empty support set"),
            Error::NegativeSupportPoint => write!(f, "support point outside the first quadrant"),
            Error::NonPositiveTerm => write!(f, "elementary term with non-positive extent"),
            Error::NotConvenient => write!(f, "polygon is not convenient"),
            Error::TooFewTerms { have } => {
                write!(f, "operator needs at least 2 compact edges, polygon has {have}")
            }
            Error::IterateTooDeep { requested, max } => {
                write!(f, "cannot iterate {requested} times, at most {max} allowed")
            }
            Error::EmptyPolygon => write!(f, "polygon has no compact edges"),
            Error::InvalidCharacteristic(msg) => write!(f, "not a Puiseux characteristic: {msg}"),
            Error::NotPlaneBranch { condition, index } => write!(
                f,
                "not a plane-branch semigroup: Bresinsky condition {condition} fails at index {index}"
            ),
            Error::MalformedSequence(msg) => write!(f, "malformed sequence: {msg}"),
            Error::NotSquarefree => write!(f, "polynomial has a multiple factor"),
            Error::UnitOrZero => write!(f, "polynomial is zero or does not vanish at the origin"),
            Error::NormalizationFailed { tried } => write!(
                f,
                "no agreeing pair of polygons after trying shears up to c = {tried}"
            ),
            Error::CriterionFailed { condition, stage } => write!(
                f,
                "polygon fails the reduction criterion (condition {condition} at stage {stage})"
            ),
            Error::IncompatibleOrders { have, want } => {
                write!(f, "cyclotomic order {have} does not divide {want}")
            }
            Error::BadSeries(msg) => write!(f, "malformed fractional power series: {msg}"),
            Error::AmbiguousContact { i, j } => write!(
                f,
                "roots {i} and {j} agree below the smaller truncation order; contact is ambiguous"
            ),
            Error::NoRoots => write!(f, "need at least one root"),
            Error::Json(msg) => write!(f, "invalid JSON: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
