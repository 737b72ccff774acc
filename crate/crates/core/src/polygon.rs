//! Rational Newton polygons in canonical elementary form.
//!
//! A polygon is stored intrinsically: the sorted list of elementary terms
//! `{L|M}` of its compact edges (inclinations `L/M` strictly increasing,
//! equal inclinations merged) plus two flags recording whether it touches the
//! horizontal and vertical coordinate axes. Absolute position is not kept;
//! when the polygon touches the vertical axis its vertex chain is anchored at
//! `(0, ht)` with `ht` the total height.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rat::{fmt_rat, is_integer, parse_rat, BigRat};

/// One compact edge `{L|M}`: horizontal extent `L > 0`, vertical extent
/// (height) `M > 0`, inclination `L/M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryTerm {
    l: BigRat,
    m: BigRat,
}

impl ElementaryTerm {
    pub fn new(l: BigRat, m: BigRat) -> Result<Self> {
        if l <= BigRat::zero() || m <= BigRat::zero() {
            return Err(Error::NonPositiveTerm);
        }
        Ok(ElementaryTerm { l, m })
    }

    pub fn l(&self) -> &BigRat {
        &self.l
    }

    pub fn m(&self) -> &BigRat {
        &self.m
    }

    pub fn inclination(&self) -> BigRat {
        &self.l / &self.m
    }
}

/// A rational Newton polygon: canonical elementary terms plus axis contact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    terms: Vec<ElementaryTerm>,
    touches_horizontal: bool,
    touches_vertical: bool,
}

/// Classification data per the standard predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonClass {
    pub height: BigRat,
    pub integral: bool,
    pub convenient: bool,
    pub special: bool,
}

impl Polygon {
    /// Build a polygon from raw terms, sorting by inclination and merging
    /// terms of equal inclination.
    pub fn new(
        terms: Vec<(BigRat, BigRat)>,
        touches_horizontal: bool,
        touches_vertical: bool,
    ) -> Result<Polygon> {
        let mut checked: Vec<ElementaryTerm> = terms
            .into_iter()
            .map(|(l, m)| ElementaryTerm::new(l, m))
            .collect::<Result<_>>()?;
        checked.sort_by_key(|a| a.inclination());
        let mut merged: Vec<ElementaryTerm> = Vec::with_capacity(checked.len());
        for t in checked {
            match merged.last_mut() {
                Some(prev) if prev.inclination() == t.inclination() => {
                    prev.l += t.l;
                    prev.m += t.m;
                }
                _ => merged.push(t),
            }
        }
        Ok(Polygon { terms: merged, touches_horizontal, touches_vertical })
    }

    /// Polygon with no compact edges touching both axes (the Minkowski unit,
    /// the polygon of a support containing the origin).
    pub fn unit() -> Polygon {
        Polygon { terms: Vec::new(), touches_horizontal: true, touches_vertical: true }
    }

    /// Single elementary polygon `{l|m}`, convenient by construction.
    pub fn elementary(l: BigRat, m: BigRat) -> Result<Polygon> {
        Polygon::new(vec![(l, m)], true, true)
    }

    /// The canonical term list `(L_i, M_i)`, inclinations strictly increasing.
    pub fn canonical_terms(&self) -> &[ElementaryTerm] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn touches_horizontal(&self) -> bool {
        self.touches_horizontal
    }

    pub fn touches_vertical(&self) -> bool {
        self.touches_vertical
    }

    /// Total height: sum of the vertical extents of the compact edges.
    pub fn height(&self) -> BigRat {
        self.terms.iter().fold(BigRat::zero(), |acc, t| acc + &t.m)
    }

    /// Total width: sum of the horizontal extents.
    pub fn width(&self) -> BigRat {
        self.terms.iter().fold(BigRat::zero(), |acc, t| acc + &t.l)
    }

    /// Vertex chain anchored at `(0, ht)`, available when the polygon touches
    /// the vertical axis (otherwise absolute position is unknown).
    pub fn anchored_vertices(&self) -> Option<Vec<(BigRat, BigRat)>> {
        if !self.touches_vertical {
            return None;
        }
        let mut x = BigRat::zero();
        let mut y = self.height();
        let mut vs = vec![(x.clone(), y.clone())];
        for t in &self.terms {
            x += &t.l;
            y -= &t.m;
            vs.push((x.clone(), y.clone()));
        }
        Some(vs)
    }

    /// Convenient / special / integral flags and the height.
    ///
    /// Integrality is decided on the anchored vertex chain when the polygon
    /// touches the vertical axis; otherwise on the partial sums of the edge
    /// extents (translation is unknown, so only relative integrality is
    /// checkable).
    pub fn classify(&self) -> PolygonClass {
        let height = self.height();
        let convenient = self.touches_horizontal && self.touches_vertical;
        let one = BigRat::one();
        let special =
            self.touches_vertical && self.terms.iter().all(|t| t.inclination() > one);
        let integral = match self.anchored_vertices() {
            Some(vs) => vs.iter().all(|(x, y)| is_integer(x) && is_integer(y)),
            None => {
                let mut sl = BigRat::zero();
                let mut sm = BigRat::zero();
                self.terms.iter().all(|t| {
                    sl += &t.l;
                    sm += &t.m;
                    is_integer(&sl) && is_integer(&sm)
                })
            }
        };
        PolygonClass { height, integral, convenient, special }
    }

    /// Minkowski sum: merge the canonical term lists; the sum touches an axis
    /// iff both summands do.
    pub fn minkowski_sum(&self, other: &Polygon) -> Polygon {
        let terms = self
            .terms
            .iter()
            .chain(other.terms.iter())
            .map(|t| (t.l.clone(), t.m.clone()))
            .collect();
        Polygon::new(
            terms,
            self.touches_horizontal && other.touches_horizontal,
            self.touches_vertical && other.touches_vertical,
        )
        .expect("terms already validated")
    }

    /// Text form `{6|1}+{14|2}`; the empty polygon prints as `{}`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parse the text form. Axis flags are not encoded in it; the result is
    /// taken to be convenient (both flags set), matching every polygon the
    /// operators accept.
    pub fn from_text(text: &str) -> Result<Polygon> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "{}" {
            return Ok(Polygon::unit());
        }
        let mut terms = Vec::new();
        for (idx, piece) in s.split('+').enumerate() {
            let inner = piece
                .strip_prefix('{')
                .and_then(|p| p.strip_suffix('}'))
                .ok_or_else(|| Error::Parse {
                    message: format!("expected {{L|M}}, got {piece:?}"),
                    position: idx,
                })?;
            let (l, m) = inner.split_once('|').ok_or_else(|| Error::Parse {
                message: format!("missing '|' in {piece:?}"),
                position: idx,
            })?;
            terms.push((parse_rat(l)?, parse_rat(m)?));
        }
        Polygon::new(terms, true, true)
    }

    /// JSON form: `{"terms":[["6","1"],["14","2"]],"horizontal":true,"vertical":true}`.
    pub fn to_json(&self) -> Value {
        json!({
            "terms": self
                .terms
                .iter()
                .map(|t| json!([fmt_rat(&t.l), fmt_rat(&t.m)]))
                .collect::<Vec<_>>(),
            "horizontal": self.touches_horizontal,
            "vertical": self.touches_vertical,
        })
    }

    pub fn from_json(value: &Value) -> Result<Polygon> {
        let obj = value.as_object().ok_or_else(|| Error::Json("expected object".into()))?;
        let terms_val = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing \"terms\" array".into()))?;
        let mut terms = Vec::with_capacity(terms_val.len());
        for t in terms_val {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
                Error::Json("each term must be a [\"L\",\"M\"] pair".into())
            })?;
            let l = pair[0].as_str().ok_or_else(|| Error::Json("L must be a string".into()))?;
            let m = pair[1].as_str().ok_or_else(|| Error::Json("M must be a string".into()))?;
            terms.push((parse_rat(l)?, parse_rat(m)?));
        }
        let horizontal = obj
            .get("horizontal")
            .and_then(Value::as_bool)
            .ok_or_else(|| Error::Json("missing \"horizontal\" flag".into()))?;
        let vertical = obj
            .get("vertical")
            .and_then(Value::as_bool)
            .ok_or_else(|| Error::Json("missing \"vertical\" flag".into()))?;
        Polygon::new(terms, horizontal, vertical)
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{{{}|{}}}", fmt_rat(&t.l), fmt_rat(&t.m))?;
        }
        Ok(())
    }
}

/// Newton polygon of a finite support set: the lower-left boundary of the
/// convex hull of `S + R+^2`, with colinear edges merged.
pub fn polygon_from_support(points: &[(BigRat, BigRat)]) -> Result<Polygon> {
    if points.is_empty() {
        return Err(Error::EmptySupport);
    }
    if points.iter().any(|(x, y)| x < &BigRat::zero() || y < &BigRat::zero()) {
        return Err(Error::NegativeSupportPoint);
    }
    // Pareto-minimal points of the dominance order, sorted by x.
    let mut pts: Vec<(BigRat, BigRat)> = points.to_vec();
    pts.sort();
    pts.dedup();
    let minimal: Vec<(BigRat, BigRat)> = pts
        .iter()
        .filter(|(x, y)| {
            !pts.iter().any(|(ox, oy)| (ox, oy) != (x, y) && ox <= x && oy <= y)
        })
        .cloned()
        .collect();
    // After the Pareto filter the points are strictly increasing in x and
    // strictly decreasing in y; keep only convex-position vertices.
    let mut hull: Vec<(BigRat, BigRat)> = Vec::new();
    for p in minimal {
        while hull.len() >= 2 {
            let a = &hull[hull.len() - 2];
            let b = &hull[hull.len() - 1];
            let cross = (&b.0 - &a.0) * (&p.1 - &a.1) - (&b.1 - &a.1) * (&p.0 - &a.0);
            if cross <= BigRat::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let touches_vertical = hull.first().map(|(x, _)| x.is_zero()).unwrap_or(false);
    let touches_horizontal = hull.last().map(|(_, y)| y.is_zero()).unwrap_or(false);
    let terms = hull
        .windows(2)
        .map(|w| (&w[1].0 - &w[0].0, &w[0].1 - &w[1].1))
        .collect();
    Polygon::new(terms, touches_horizontal, touches_vertical)
}

/// Newton polygon of a polynomial's support.
pub fn polygon_of_poly(p: &crate::poly::BiPoly) -> Result<Polygon> {
    let pts: Vec<(BigRat, BigRat)> = p
        .support()
        .into_iter()
        .map(|(i, j)| (BigRat::from_integer(i.into()), BigRat::from_integer(j.into())))
        .collect();
    polygon_from_support(&pts)
}
