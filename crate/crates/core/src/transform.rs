//! The reduction and abrasion operators on convenient rational Newton
//! polygons.
//!
//! Both drop one compact edge and rescale the rest: reduction removes the
//! first edge (`L'_i = L_{i+1} - L_1/(1+M_1) * M_{i+1}`,
//! `M'_i = M_{i+1}/(1+M_1)`), abrasion removes the last
//! (`~L_i = (1+M_1+...+M_{r-1})/(1+M_1+...+M_r) * L_i`, heights unchanged).
//! They are defined only for convenient polygons with at least two edges.

use num_traits::One;

use crate::error::{Error, Result};
use crate::polygon::Polygon;
use crate::rat::BigRat;

/// Which of the two operators to iterate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolygonOp {
    Reduce,
    Abrade,
}

fn require_operable(p: &Polygon) -> Result<()> {
    if !(p.touches_horizontal() && p.touches_vertical()) {
        return Err(Error::NotConvenient);
    }
    if p.term_count() < 2 {
        return Err(Error::TooFewTerms { have: p.term_count() });
    }
    Ok(())
}

/// Drop the first edge and rescale the remaining ones.
pub fn reduce(p: &Polygon) -> Result<Polygon> {
    require_operable(p)?;
    let terms = p.canonical_terms();
    let first = &terms[0];
    let scale = BigRat::one() + first.m();
    let slope_shift = first.l() / &scale;
    let new_terms: Vec<(BigRat, BigRat)> = terms[1..]
        .iter()
        .map(|t| (t.l() - &slope_shift * t.m(), t.m() / &scale))
        .collect();
    let out = Polygon::new(new_terms, true, true)?;
    debug_assert_eq!(out.term_count(), p.term_count() - 1, "inclinations stay distinct");
    Ok(out)
}

/// Drop the last edge and shrink every horizontal extent by
/// `(1 + ht - M_r) / (1 + ht)`; heights are unchanged.
pub fn abrade(p: &Polygon) -> Result<Polygon> {
    require_operable(p)?;
    let terms = p.canonical_terms();
    let last = terms.last().unwrap();
    let full = BigRat::one() + p.height();
    let factor = (&full - last.m()) / &full;
    let new_terms: Vec<(BigRat, BigRat)> = terms[..terms.len() - 1]
        .iter()
        .map(|t| (t.l() * &factor, t.m().clone()))
        .collect();
    let out = Polygon::new(new_terms, true, true)?;
    debug_assert_eq!(out.term_count(), p.term_count() - 1);
    Ok(out)
}

/// `i`-fold application of an operator; `i = 0` is the identity. Requires
/// `i <= r - 1` so the result keeps at least one compact edge.
pub fn iterate(op: PolygonOp, p: &Polygon, i: usize) -> Result<Polygon> {
    let max = p.term_count().saturating_sub(1);
    if i > max {
        return Err(Error::IterateTooDeep { requested: i, max });
    }
    let mut current = p.clone();
    for _ in 0..i {
        current = match op {
            PolygonOp::Reduce => reduce(&current)?,
            PolygonOp::Abrade => abrade(&current)?,
        };
    }
    Ok(current)
}
