//! Puiseux characteristics and plane-branch semigroups.
//!
//! A characteristic sequence and the minimal generators of the corresponding
//! semigroup determine each other through the Zariski recursion; Bresinsky's
//! three gcd/growth conditions characterize which generator lists arise from
//! plane branches. Merle's formula turns a semigroup into the jacobian Newton
//! polygon of the branch.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::polygon::Polygon;
use crate::rat::{gcd_chain, rat};

/// A valid Puiseux characteristic `(b_0, ..., b_g)`: strictly increasing
/// positive integers whose running gcds strictly decrease down to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSeq {
    entries: Vec<u64>,
}

/// Minimal generators of a plane-branch semigroup, Bresinsky-validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SgpGens {
    gens: Vec<u64>,
}

/// Outcome of Bresinsky's three-condition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BresinskyReport {
    /// Condition index in {1, 2, 3} and the offending position, when invalid.
    pub failure: Option<(u8, usize)>,
}

impl BresinskyReport {
    pub fn valid(&self) -> bool {
        self.failure.is_none()
    }
}

fn check_shape(seq: &[u64]) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::MalformedSequence("empty sequence".into()));
    }
    if seq.contains(&0) {
        return Err(Error::MalformedSequence("entries must be positive".into()));
    }
    if seq.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::MalformedSequence("entries must be strictly increasing".into()));
    }
    Ok(())
}

/// True iff `seq` satisfies both gcd conditions of a Puiseux characteristic:
/// total gcd 1 and strictly decreasing running gcds.
///
/// Malformed input (empty, non-increasing, zero entries) is an error, not
/// `false`.
pub fn validate_characteristic(seq: &[u64]) -> Result<bool> {
    check_shape(seq)?;
    let chain = gcd_chain(seq);
    let descending = chain.windows(2).all(|w| w[1] < w[0]);
    Ok(descending && *chain.last().unwrap() == 1)
}

impl CharSeq {
    pub fn new(entries: Vec<u64>) -> Result<CharSeq> {
        if !validate_characteristic(&entries)? {
            return Err(Error::InvalidCharacteristic(format!("{entries:?}")));
        }
        Ok(CharSeq { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Number of characteristic exponents after the multiplicity, `g`.
    pub fn genus(&self) -> usize {
        self.entries.len() - 1
    }

    /// Running gcds `e_k = gcd(b_0, ..., b_k)`.
    pub fn gcd_chain(&self) -> Vec<u64> {
        gcd_chain(&self.entries)
    }
}

impl SgpGens {
    /// Validate a generator list with Bresinsky's criterion and wrap it.
    pub fn new(gens: Vec<u64>) -> Result<SgpGens> {
        let report = bresinsky_check(&gens)?;
        match report.failure {
            None => Ok(SgpGens { gens }),
            Some((condition, index)) => Err(Error::NotPlaneBranch { condition, index }),
        }
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    pub fn genus(&self) -> usize {
        self.gens.len() - 1
    }

    /// Running gcds `e_k`, the characteristic divisors (also written `l_k`).
    pub fn gcd_chain(&self) -> Vec<u64> {
        gcd_chain(&self.gens)
    }

    /// The quotients `n_k = e_{k-1} / e_k` for `k = 1..=g`.
    pub fn multipliers(&self) -> Vec<u64> {
        let e = self.gcd_chain();
        e.windows(2).map(|w| w[0] / w[1]).collect()
    }
}

impl fmt::Display for CharSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_list(f, &self.entries)
    }
}

impl fmt::Display for SgpGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_list(f, &self.gens)
    }
}

fn write_comma_list(f: &mut fmt::Formatter<'_>, xs: &[u64]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Bresinsky's criterion on a presented generator list (no minimality
/// reduction is performed). Conditions are evaluated in order and only the
/// first failure is reported:
///
/// 1. total gcd is 1 (reported at the last index),
/// 2. running gcds strictly decrease,
/// 3. `(e_{i-1}/e_i) * g_i < g_{i+1}` for `1 <= i <= r-1`.
pub fn bresinsky_check(gens: &[u64]) -> Result<BresinskyReport> {
    check_shape(gens)?;
    let e = gcd_chain(gens);
    let r = gens.len() - 1;
    if *e.last().unwrap() != 1 {
        return Ok(BresinskyReport { failure: Some((1, r)) });
    }
    for i in 1..=r {
        if e[i] >= e[i - 1] {
            return Ok(BresinskyReport { failure: Some((2, i)) });
        }
    }
    for i in 1..r {
        let n = e[i - 1] / e[i];
        if n * gens[i] >= gens[i + 1] {
            return Ok(BresinskyReport { failure: Some((3, i)) });
        }
    }
    Ok(BresinskyReport { failure: None })
}

/// Zariski recursion: minimal semigroup generators from a characteristic.
/// `bb_0 = b_0`, `bb_1 = b_1`, then `bb_{i+1} = n_i*bb_i + b_{i+1} - b_i`.
pub fn char_to_semigroup(c: &CharSeq) -> SgpGens {
    let b = c.entries();
    let e = c.gcd_chain();
    let mut gens = Vec::with_capacity(b.len());
    gens.push(b[0]);
    if b.len() > 1 {
        gens.push(b[1]);
        for i in 1..b.len() - 1 {
            let n_i = e[i - 1] / e[i];
            let next = n_i * gens[i] + b[i + 1] - b[i];
            gens.push(next);
        }
    }
    SgpGens::new(gens).expect("Zariski image of a valid characteristic is a branch semigroup")
}

/// Inverse Zariski recursion: the characteristic from the minimal generators.
/// Round-trips with [`char_to_semigroup`].
pub fn semigroup_to_char(g: &SgpGens) -> CharSeq {
    let gens = g.gens();
    let e = g.gcd_chain();
    let mut b = Vec::with_capacity(gens.len());
    b.push(gens[0]);
    if gens.len() > 1 {
        b.push(gens[1]);
        for i in 1..gens.len() - 1 {
            let n_i = e[i - 1] / e[i];
            // bb_{i+1} = n_i*bb_i + b_{i+1} - b_i, inverted.
            let next = gens[i + 1] + b[i] - n_i * gens[i];
            b.push(next);
        }
    }
    CharSeq::new(b).expect("inverse Zariski recursion of a branch semigroup is a characteristic")
}

/// Merle's formula: the canonical form of the jacobian Newton polygon of a
/// branch with the given semigroup,
/// `sum_k {(n_k - 1)*bb_k | (n_k - 1)*n_1*...*n_{k-1}}`.
///
/// The smooth branch `<1>` gives the empty (convenient) polygon.
pub fn merle_polygon(g: &SgpGens) -> Polygon {
    let gens = g.gens();
    if gens == [1] {
        return Polygon::unit();
    }
    let n = g.multipliers();
    let mut terms = Vec::with_capacity(n.len());
    let mut descent = 1u64; // n_1 * ... * n_{k-1}
    for (k, &nk) in n.iter().enumerate() {
        let l = (nk - 1) * gens[k + 1];
        let m = (nk - 1) * descent;
        terms.push((rat(l as i64), rat(m as i64)));
        descent *= nk;
    }
    let out = Polygon::new(terms, true, true).expect("positive extents");
    // Strictly increasing inclinations are the growth condition restated, so
    // canonicalization never merges terms.
    debug_assert_eq!(out.term_count(), n.len());
    out
}

/// The gcd `gcd(bb_0, (n_1-1)*bb_1, ..., (n_g-1)*bb_g)`; equal to 1 for every
/// plane-branch semigroup.
pub fn property1_gcd(g: &SgpGens) -> u64 {
    let gens = g.gens();
    let n = g.multipliers();
    let mut acc = gens[0];
    for (k, &nk) in n.iter().enumerate() {
        acc = acc.gcd(&((nk - 1) * gens[k + 1]));
    }
    acc
}

/// Parse a comma-separated list of positive integers, e.g. `"4,6,13"`.
pub fn parse_sequence(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Error::MalformedSequence(format!("bad integer {:?}", part.trim())))
        })
        .collect()
}

/// Enumerate every valid Puiseux characteristic with `b_0 <= max_mult` and
/// all entries `<= max_entry`, in lexicographic order. Includes the smooth
/// characteristic `(1)`.
pub fn enumerate_characteristics(max_mult: u64, max_entry: u64) -> Vec<CharSeq> {
    let mut out = Vec::new();
    out.push(CharSeq::new(vec![1]).expect("smooth"));
    for b0 in 2..=max_mult {
        let mut stack = vec![(vec![b0], b0)];
        while let Some((prefix, g)) = stack.pop() {
            let last = *prefix.last().unwrap();
            for next in last + 1..=max_entry {
                let g2 = g.gcd(&next);
                if g2 >= g {
                    continue;
                }
                let mut seq = prefix.clone();
                seq.push(next);
                if g2 == 1 {
                    out.push(CharSeq::new(seq).expect("constructed valid"));
                } else {
                    stack.push((seq, g2));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn gens(v: &[u64]) -> SgpGens {
        SgpGens::new(v.to_vec()).unwrap()
    }

    #[test]
    fn characteristic_validity() {
        assert!(validate_characteristic(&[4, 6, 7]).unwrap());
        assert!(!validate_characteristic(&[4, 6, 8]).unwrap());
        assert!(validate_characteristic(&[2, 3]).unwrap());
        assert!(validate_characteristic(&[1]).unwrap());
        assert!(!validate_characteristic(&[5]).unwrap());
        assert!(validate_characteristic(&[6, 4]).is_err());
        assert!(validate_characteristic(&[]).is_err());
        assert!(validate_characteristic(&[0, 1]).is_err());
    }

    #[test]
    fn zariski_recursion() {
        let c = CharSeq::new(vec![4, 6, 7]).unwrap();
        assert_eq!(char_to_semigroup(&c).gens(), &[4, 6, 13]);
        let c = CharSeq::new(vec![2, 3]).unwrap();
        assert_eq!(char_to_semigroup(&c).gens(), &[2, 3]);
        let c = CharSeq::new(vec![6, 9, 22]).unwrap();
        assert_eq!(char_to_semigroup(&c).gens(), &[6, 9, 31]);
    }

    #[test]
    fn zariski_inverse() {
        assert_eq!(semigroup_to_char(&gens(&[4, 6, 13])).entries(), &[4, 6, 7]);
        assert_eq!(semigroup_to_char(&gens(&[2, 3])).entries(), &[2, 3]);
        assert!(matches!(
            SgpGens::new(vec![4, 6, 14]),
            Err(Error::NotPlaneBranch { condition: 1, .. })
        ));
    }

    #[test]
    fn bresinsky_examples() {
        assert!(bresinsky_check(&[4, 6, 13]).unwrap().valid());
        assert_eq!(bresinsky_check(&[4, 6, 14]).unwrap().failure, Some((1, 2)));
        assert_eq!(bresinsky_check(&[4, 6, 11]).unwrap().failure, Some((3, 1)));
        assert_eq!(bresinsky_check(&[4, 6, 8]).unwrap().failure, Some((1, 2)));
        assert_eq!(bresinsky_check(&[4, 8, 9]).unwrap().failure, Some((2, 1)));
        assert!(bresinsky_check(&[1]).unwrap().valid());
        assert!(bresinsky_check(&[6, 4, 3]).is_err());
    }

    #[test]
    fn merle_examples() {
        let p = merle_polygon(&gens(&[4, 6, 13]));
        assert_eq!(p.to_text(), "{6|1}+{13|2}");
        let p = merle_polygon(&gens(&[2, 3]));
        assert_eq!(p.to_text(), "{3|1}");
        let p = merle_polygon(&gens(&[1]));
        assert!(p.is_empty());
        assert!(p.classify().convenient);
    }

    #[test]
    fn merle_height_is_multiplicity_minus_one() {
        for g in [vec![4, 6, 13], vec![2, 3], vec![6, 9, 31], vec![8, 12, 26, 53]] {
            let s = gens(&g);
            assert_eq!(merle_polygon(&s).height(), rat(g[0] as i64 - 1));
        }
    }

    #[test]
    fn property1_examples() {
        assert_eq!(property1_gcd(&gens(&[4, 6, 13])), 1);
        assert_eq!(property1_gcd(&gens(&[2, 3])), 1);
        assert_eq!(property1_gcd(&gens(&[6, 9, 31])), 1);
        assert_eq!(property1_gcd(&gens(&[1])), 1);
    }

    #[test]
    fn round_trip_small_exhaustive() {
        // Every valid characteristic with b_0 <= 12 and entries <= 36.
        let mut count = 0usize;
        for c in crate::semigroup::enumerate_characteristics(12, 36) {
            let s = char_to_semigroup(&c);
            assert_eq!(semigroup_to_char(&s), c);
            assert_eq!(property1_gcd(&s), 1);
            count += 1;
        }
        assert!(count > 100, "enumeration too small: {count}");
    }

    #[test]
    fn sequence_parsing() {
        assert_eq!(parse_sequence("4, 6,13").unwrap(), vec![4, 6, 13]);
        assert!(parse_sequence("4,,6").is_err());
        assert!(parse_sequence("4,-6").is_err());
    }
}
