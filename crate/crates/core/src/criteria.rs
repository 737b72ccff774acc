//! The three combinatorial characterizations of jacobian Newton polygons of
//! branches, with witness recovery.
//!
//! All three take a special convenient integral polygon and decide whether it
//! is the jacobian Newton polygon of an irreducible germ:
//!
//! - the reduction test iterates the reduction operator and checks an
//!   integrality and a gcd condition at every stage, recovering the Puiseux
//!   characteristic on success;
//! - the abrasion test iterates the abrasion operator with its own stage
//!   conditions, recovering the semigroup;
//! - the gamma test reads the candidate generators straight off the polygon
//!   and applies Bresinsky's criterion.
//!
//! Failures report the first violated condition (0 = shape, then 1-3) and the
//! stage index at which it occurred.

use num_integer::Integer;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polygon::Polygon;
use crate::rat::{fmt_rat, to_u64, BigRat};
use crate::semigroup::{bresinsky_check, char_to_semigroup, semigroup_to_char, CharSeq, SgpGens};
use crate::transform::{abrade, reduce};

/// The sequence `g_0 = 1 + ht(P)`, `g_i = (1 + M_1 + ... + M_{i-1}) * L_i/M_i`
/// read off a polygon, as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSeq {
    gammas: Vec<BigRat>,
}

impl GammaSeq {
    pub fn values(&self) -> &[BigRat] {
        &self.gammas
    }
}

/// Outcome of one criterion: a pass with both witnesses, or the first failed
/// condition. Condition 0 means the polygon is not special convenient
/// integral (for the gamma test: a non-integer gamma value).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriterionVerdict {
    Pass { characteristic: CharSeq, semigroup: SgpGens },
    Fail { condition: u8, stage: usize },
}

impl CriterionVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, CriterionVerdict::Pass { .. })
    }

    /// JSON form: `{"pass":true,"characteristic":[4,6,7],"semigroup":[4,6,13]}`
    /// or `{"pass":false,"condition":3,"stage":1}`.
    pub fn to_json(&self) -> Value {
        match self {
            CriterionVerdict::Pass { characteristic, semigroup } => json!({
                "pass": true,
                "characteristic": characteristic.entries(),
                "semigroup": semigroup.gens(),
            }),
            CriterionVerdict::Fail { condition, stage } => json!({
                "pass": false,
                "condition": condition,
                "stage": stage,
            }),
        }
    }
}

fn shape_ok(p: &Polygon) -> bool {
    let class = p.classify();
    class.special && class.convenient && class.integral
}

fn pass_from_characteristic(entries: Vec<u64>) -> CriterionVerdict {
    let characteristic =
        CharSeq::new(entries).expect("recovered sequence is a valid characteristic");
    let semigroup = char_to_semigroup(&characteristic);
    CriterionVerdict::Pass { characteristic, semigroup }
}

fn one_plus_height(p: &Polygon) -> u64 {
    to_u64(&(BigRat::one() + p.height())).expect("integral polygon has integer height")
}

/// Reduction characterization. On pass the witness characteristic is
/// `(1 + ht(P), L_1^(0)/M_1^(0), ..., L_1^(r-1)/M_1^(r-1))` where the
/// superscript counts reduction stages.
pub fn reduction_criterion(p: &Polygon) -> CriterionVerdict {
    if !shape_ok(p) {
        return CriterionVerdict::Fail { condition: 0, stage: 0 };
    }
    let r = p.term_count();
    let mut entries = vec![one_plus_height(p)];
    if r == 0 {
        return pass_from_characteristic(entries);
    }
    // Condition 1: 1 + ht(P) < L_1/M_1.
    let first_incl = p.canonical_terms()[0].inclination();
    if BigRat::from_integer(entries[0].into()) >= first_incl {
        return CriterionVerdict::Fail { condition: 1, stage: 0 };
    }
    let mut current = p.clone();
    for stage in 0..r {
        // Condition 2: the stage polygon is integral and its first
        // inclination is a positive integer.
        let incl = current.canonical_terms()[0].inclination();
        let beta = match to_u64(&incl) {
            Some(b) if current.classify().integral => b,
            _ => return CriterionVerdict::Fail { condition: 2, stage },
        };
        entries.push(beta);
        // Condition 3: (1 + M_1) * gcd(L_1/M_1, 1 + ht) = 1 + ht.
        let m1 = to_u64(&(BigRat::one() + current.canonical_terms()[0].m()))
            .expect("integral polygon has integer heights");
        let ht1 = one_plus_height(&current);
        if m1 * beta.gcd(&ht1) != ht1 {
            return CriterionVerdict::Fail { condition: 3, stage };
        }
        if stage + 1 < r {
            current = reduce(&current).expect("convenient with enough terms");
        }
    }
    pass_from_characteristic(entries)
}

/// Abrasion characterization. On pass the witness semigroup is generated by
/// `1 + ht(P)` together with `(1 + M_1 + ... + M_{k-1}) * L_k/M_k`.
pub fn abrasion_criterion(p: &Polygon) -> CriterionVerdict {
    if !shape_ok(p) {
        return CriterionVerdict::Fail { condition: 0, stage: 0 };
    }
    let r = p.term_count();
    if r == 0 {
        let smooth = SgpGens::new(vec![1]).expect("smooth semigroup");
        return CriterionVerdict::Pass {
            characteristic: semigroup_to_char(&smooth),
            semigroup: smooth,
        };
    }
    let gamma0 = one_plus_height(p);
    // Condition 1: 1 + ht(P) < L_1/M_1.
    if BigRat::from_integer(gamma0.into()) >= p.canonical_terms()[0].inclination() {
        return CriterionVerdict::Fail { condition: 1, stage: 0 };
    }
    let mut current = p.clone();
    for stage in 0..r {
        // Condition 2: the stage polygon is special convenient integral, its
        // first inclination is an integer, and (when it still has at least
        // two edges) so is (1 + ht - M_last) * L_last/M_last.
        let class = current.classify();
        if !(class.special && class.convenient && class.integral) {
            return CriterionVerdict::Fail { condition: 2, stage };
        }
        let terms = current.canonical_terms();
        if to_u64(&terms[0].inclination()).is_none() {
            return CriterionVerdict::Fail { condition: 2, stage };
        }
        if terms.len() >= 2 {
            let last = terms.last().unwrap();
            let cofactor = BigRat::one() + current.height() - last.m();
            if to_u64(&(cofactor * last.inclination())).is_none() {
                return CriterionVerdict::Fail { condition: 2, stage };
            }
        }
        // Condition 3: gcd(1 + ht, L_1, ..., L_{r-i}) = 1.
        let mut acc = one_plus_height(&current);
        for t in terms {
            acc = acc.gcd(&to_u64(t.l()).expect("integral polygon has integer widths"));
        }
        if acc != 1 {
            return CriterionVerdict::Fail { condition: 3, stage };
        }
        if stage + 1 < r {
            current = abrade(&current).expect("convenient with enough terms");
        }
    }
    // Witness generators: the gamma sequence of the original polygon.
    let gens: Vec<u64> = gamma_values(p)
        .iter()
        .map(|g| to_u64(g).expect("generators are integers when the criterion passes"))
        .collect();
    let semigroup = SgpGens::new(gens).expect("passing polygon yields a branch semigroup");
    CriterionVerdict::Pass { characteristic: semigroup_to_char(&semigroup), semigroup }
}

fn gamma_values(p: &Polygon) -> Vec<BigRat> {
    let mut gammas = vec![BigRat::one() + p.height()];
    let mut partial = BigRat::one();
    for t in p.canonical_terms() {
        gammas.push(&partial * t.inclination());
        partial += t.m();
    }
    gammas
}

/// The gamma sequence of a convenient polygon with at least one edge.
pub fn gamma_sequence(p: &Polygon) -> Result<GammaSeq> {
    if p.is_empty() {
        return Err(Error::EmptyPolygon);
    }
    if !(p.touches_horizontal() && p.touches_vertical()) {
        return Err(Error::NotConvenient);
    }
    Ok(GammaSeq { gammas: gamma_values(p) })
}

/// Gamma characterization: the polygon is the jacobian Newton polygon of an
/// irreducible germ iff its gamma values are integers, strictly increasing,
/// and satisfy Bresinsky's three conditions. Meaningful only on polygons that
/// are jacobian Newton polygons of some curve.
pub fn gamma_criterion(p: &Polygon) -> CriterionVerdict {
    let gammas = gamma_values(p);
    let mut gens = Vec::with_capacity(gammas.len());
    for (i, g) in gammas.iter().enumerate() {
        match to_u64(g) {
            Some(v) => gens.push(v),
            None => return CriterionVerdict::Fail { condition: 0, stage: i },
        }
    }
    for i in 1..gens.len() {
        if gens[i] <= gens[i - 1] {
            return CriterionVerdict::Fail { condition: 2, stage: i };
        }
    }
    let report = bresinsky_check(&gens).expect("increasing positive integers");
    match report.failure {
        Some((condition, index)) => CriterionVerdict::Fail { condition, stage: index },
        None => {
            let semigroup = SgpGens::new(gens).expect("just validated");
            CriterionVerdict::Pass { characteristic: semigroup_to_char(&semigroup), semigroup }
        }
    }
}

/// The Puiseux characteristic recovered from a polygon passing the reduction
/// criterion.
pub fn recover_characteristic(p: &Polygon) -> Result<CharSeq> {
    match reduction_criterion(p) {
        CriterionVerdict::Pass { characteristic, .. } => Ok(characteristic),
        CriterionVerdict::Fail { condition, stage } => {
            Err(Error::CriterionFailed { condition, stage })
        }
    }
}

/// Text rendering of a gamma sequence, e.g. `(4, 6, 14)`.
impl std::fmt::Display for GammaSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gammas.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_rat(g))?;
        }
        write!(f, ")")
    }
}
