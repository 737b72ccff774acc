//! End-to-end pipeline: from a squarefree defining polynomial to its
//! jacobian Newton polygon, polar invariants, and an irreducibility verdict.
//!
//! The jacobian Newton polygon is the Newton polygon, in the discriminant
//! coordinates `(u, v)`, of `D(u, v) = Res_y(f(u,y) - v, f_y(u,y))`. It is
//! independent of coordinates for a generic projection direction; only
//! finitely many directions are bad. The pipeline certifies genericity by
//! computing the polygon for successive accepted shears `x := x + c*y` and
//! returning the first value obtained twice.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::criteria::{abrasion_criterion, gamma_criterion, reduction_criterion, CriterionVerdict};
use crate::error::{Error, Result};
use crate::poly::{is_squarefree, Axis, BiPoly};
use crate::polygon::{polygon_of_poly, Polygon};
use crate::rat::{fmt_rat, rat, to_u64, BigRat};
use crate::semigroup::{CharSeq, SgpGens};
use crate::ypoly::discriminant_surface;

/// Knobs for the normalization search.
#[derive(Debug, Clone, Copy)]
pub struct NjpOptions {
    /// Largest shear parameter tried (inclusive).
    pub max_shear: u32,
}

impl Default for NjpOptions {
    fn default() -> Self {
        NjpOptions { max_shear: 16 }
    }
}

/// A computed jacobian Newton polygon together with the shear parameters that
/// produced and certified it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NjpResult {
    pub polygon: Polygon,
    /// Accepted shear parameters and their polygons, in the order computed,
    /// ending with the second member of the agreeing pair.
    pub computations: Vec<(u32, Polygon)>,
    /// The two shear parameters whose polygons agree.
    pub agreed: (u32, u32),
}

impl NjpResult {
    /// True when anything beyond the default first two candidates was needed
    /// (the unsheared polynomial was rejected, or some candidate disagreed).
    pub fn needed_extra_shears(&self) -> bool {
        self.agreed != (0, 1)
    }
}

/// The multiset of polar invariants `(q_j, m_j)`: inclinations of the
/// jacobian Newton polygon with their edge heights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarInvariants {
    pairs: Vec<(BigRat, u64)>,
}

impl PolarInvariants {
    pub fn pairs(&self) -> &[(BigRat, u64)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Reads `(L_i/M_i, M_i)` off a polygon's canonical terms.
    pub fn from_polygon(p: &Polygon) -> PolarInvariants {
        let pairs = p
            .canonical_terms()
            .iter()
            .map(|t| {
                let m = to_u64(t.m()).expect("polynomial support has integer heights");
                (t.inclination(), m)
            })
            .collect();
        PolarInvariants { pairs }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pairs": self
                .pairs
                .iter()
                .map(|(q, m)| json!([fmt_rat(q), m.to_string()]))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for PolarInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, (q, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", fmt_rat(q), m)?;
        }
        write!(f, ">")
    }
}

/// Everything the irreducibility test learned about an input.
#[derive(Debug, Clone)]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    pub polygon: Polygon,
    pub gamma: Vec<BigRat>,
    pub reduction: CriterionVerdict,
    pub abrasion: CriterionVerdict,
    pub gamma_verdict: CriterionVerdict,
    /// Present exactly when irreducible.
    pub characteristic: Option<CharSeq>,
    pub semigroup: Option<SgpGens>,
    pub njp: NjpResult,
}

impl IrreducibilityVerdict {
    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "pass": self.irreducible,
            "gamma": self.gamma.iter().map(fmt_rat).collect::<Vec<_>>(),
            "polygon": self.polygon.to_json(),
            "criteria": {
                "reduction": self.reduction.to_json(),
                "abrasion": self.abrasion.to_json(),
                "gamma": self.gamma_verdict.to_json(),
            },
            "shears": [self.njp.agreed.0, self.njp.agreed.1],
        });
        let obj = out.as_object_mut().unwrap();
        match (&self.characteristic, &self.semigroup) {
            (Some(c), Some(s)) => {
                obj.insert("characteristic".into(), json!(c.entries()));
                obj.insert("semigroup".into(), json!(s.gens()));
            }
            _ => {
                if let CriterionVerdict::Fail { condition, stage } = &self.gamma_verdict {
                    obj.insert("condition".into(), json!(condition));
                    obj.insert("stage".into(), json!(stage));
                }
            }
        }
        out
    }
}

/// Transversality acceptance: the lowest homogeneous form must not be
/// divisible by x (the vertical axis avoids the tangent cone) and the top
/// y-coefficient must be a nonzero constant.
fn accepted(f: &BiPoly) -> bool {
    let Ok(ord) = f.order_at_origin() else {
        return false;
    };
    if f.coeff(0, ord).is_zero() {
        return false;
    }
    f.leading_y_coeff().is_constant()
}

/// The jacobian Newton polygon for one fixed shear parameter, with no
/// genericity certification. Exposed for diagnostics and tests.
pub fn polygon_for_shear(f: &BiPoly, c: u32) -> Result<Polygon> {
    let cand = if c == 0 { f.clone() } else { f.shear(Axis::X, &rat(c as i64)) };
    if !accepted(&cand) {
        return Err(Error::NonConstantLeadingCoeff);
    }
    let d = discriminant_surface(&cand)?;
    polygon_of_poly(&d)
}

fn check_input(f: &BiPoly) -> Result<()> {
    if f.is_zero() || !f.eval_origin().is_zero() {
        return Err(Error::UnitOrZero);
    }
    if !is_squarefree(f)? {
        return Err(Error::NotSquarefree);
    }
    Ok(())
}

/// Compute the jacobian Newton polygon of `f`.
///
/// Requires `f` nonzero, vanishing at the origin, and squarefree. Shear
/// parameters `c = 0, 1, 2, ...` up to the configured bound are tried in
/// order; every parameter passing the transversality checks contributes a
/// polygon, and the first polygon obtained twice is returned. Distinct
/// parameters are distinct projection directions, and bad directions are
/// finite in number, so two agreeing samples certify the generic value.
pub fn jacobian_polygon(f: &BiPoly, options: &NjpOptions) -> Result<NjpResult> {
    check_input(f)?;
    let mut computations: Vec<(u32, Polygon)> = Vec::new();
    for c in 0..=options.max_shear {
        match polygon_for_shear(f, c) {
            Ok(polygon) => {
                if let Some((c0, _)) =
                    computations.iter().find(|(_, p)| *p == polygon).cloned()
                {
                    computations.push((c, polygon.clone()));
                    return Ok(NjpResult { polygon, computations, agreed: (c0, c) });
                }
                computations.push((c, polygon));
            }
            Err(Error::NonConstantLeadingCoeff) => continue,
            Err(other) => return Err(other),
        }
    }
    Err(Error::NormalizationFailed { tried: options.max_shear })
}

/// The polar invariants of `f`: inclination and height of each edge of the
/// jacobian Newton polygon.
pub fn polar_invariants(f: &BiPoly, options: &NjpOptions) -> Result<PolarInvariants> {
    let njp = jacobian_polygon(f, options)?;
    Ok(PolarInvariants::from_polygon(&njp.polygon))
}

fn gamma_of(p: &Polygon) -> Vec<BigRat> {
    let mut gammas = vec![BigRat::one() + p.height()];
    let mut partial = BigRat::one();
    for t in p.canonical_terms() {
        gammas.push(&partial * t.inclination());
        partial += t.m();
    }
    gammas
}

/// Decide irreducibility of the germ `f = 0` by running all three criteria
/// on its jacobian Newton polygon. The criteria characterize the same set of
/// polygons, so they must agree; disagreement on a pipeline-produced polygon
/// is reported as an internal error rather than resolved silently.
pub fn test_irreducible(f: &BiPoly, options: &NjpOptions) -> Result<IrreducibilityVerdict> {
    let njp = jacobian_polygon(f, options)?;
    let polygon = njp.polygon.clone();
    let reduction = reduction_criterion(&polygon);
    let abrasion = abrasion_criterion(&polygon);
    let gamma_verdict = gamma_criterion(&polygon);
    let votes = [reduction.passed(), abrasion.passed(), gamma_verdict.passed()];
    if votes.iter().any(|&v| v != votes[0]) {
        return Err(Error::Internal(format!(
            "criteria disagree on {polygon}: reduction={}, abrasion={}, gamma={}",
            votes[0], votes[1], votes[2]
        )));
    }
    let irreducible = votes[0];
    let (characteristic, semigroup) = if irreducible {
        let (rc, rs) = match &reduction {
            CriterionVerdict::Pass { characteristic, semigroup } => {
                (characteristic.clone(), semigroup.clone())
            }
            CriterionVerdict::Fail { .. } => unreachable!("passed above"),
        };
        for other in [&abrasion, &gamma_verdict] {
            if let CriterionVerdict::Pass { characteristic, semigroup } = other {
                if characteristic != &rc || semigroup != &rs {
                    return Err(Error::Internal(format!(
                        "criteria recover different witnesses on {polygon}"
                    )));
                }
            }
        }
        (Some(rc), Some(rs))
    } else {
        (None, None)
    };
    Ok(IrreducibilityVerdict {
        irreducible,
        gamma: gamma_of(&polygon),
        polygon,
        reduction,
        abrasion,
        gamma_verdict,
        characteristic,
        semigroup,
        njp,
    })
}
