//! Arithmetic in cyclotomic fields Q(zeta_n), represented in the power basis
//! modulo the n-th cyclotomic polynomial.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::BigRat;

/// Euler's totient.
pub fn phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result
}

// Dense univariate helpers over Q, ascending coefficients.

fn trim(mut p: Vec<BigRat>) -> Vec<BigRat> {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn mul(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

/// Remainder modulo a monic polynomial.
fn rem_monic(num: &[BigRat], den: &[BigRat]) -> Vec<BigRat> {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    while rem.len() > dd {
        let q = rem.pop().unwrap();
        if q.is_zero() {
            continue;
        }
        let shift = rem.len() - dd;
        for (j, c) in den[..dd].iter().enumerate() {
            let delta = &q * c;
            rem[shift + j] -= delta;
        }
    }
    rem
}

/// Exact division of univariate polynomials, panicking if not exact.
fn div_exact(num: &[BigRat], den: &[BigRat]) -> Vec<BigRat> {
    let den = trim(den.to_vec());
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut rem = trim(num.to_vec());
    let mut quot = vec![BigRat::zero(); rem.len().saturating_sub(dd) + 1];
    while rem.len() > dd {
        let dr = rem.len() - 1;
        let q = rem[dr].clone() / &lead;
        let shift = dr - dd;
        quot[shift] = q.clone();
        for (j, c) in den.iter().enumerate() {
            let delta = &q * c;
            rem[shift + j] -= delta;
        }
        rem = trim(rem);
    }
    assert!(rem.is_empty(), "inexact cyclotomic division");
    trim(quot)
}

/// The n-th cyclotomic polynomial, monic with ascending integer coefficients,
/// by the standard recursive division of `x^n - 1` by the lower-order ones.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigRat> {
    assert!(n >= 1);
    let mut cache: Vec<(u32, Vec<BigRat>)> = Vec::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        // x^d - 1
        let mut num = vec![BigRat::zero(); d as usize + 1];
        num[0] = -BigRat::one();
        num[d as usize] = BigRat::one();
        let mut poly = num;
        for (e, phi_e) in &cache {
            if d % e == 0 {
                poly = div_exact(&poly, phi_e);
            }
        }
        cache.push((d, poly));
    }
    cache.pop().unwrap().1
}

/// An element of Q(zeta_n) in the power basis `1, z, ..., z^(phi(n)-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloNum {
    order: u32,
    coords: Vec<BigRat>,
}

impl CycloNum {
    /// Wrap power-basis coordinates; the vector length must be `phi(order)`.
    pub fn new(order: u32, coords: Vec<BigRat>) -> Result<CycloNum> {
        if order == 0 {
            return Err(Error::BadSeries("cyclotomic order must be positive".into()));
        }
        let dim = phi(order) as usize;
        if coords.len() != dim {
            return Err(Error::BadSeries(format!(
                "coefficient vector has length {}, expected phi({order}) = {dim}",
                coords.len()
            )));
        }
        Ok(CycloNum { order, coords })
    }

    pub fn zero(order: u32) -> CycloNum {
        CycloNum { order, coords: vec![BigRat::zero(); phi(order) as usize] }
    }

    pub fn from_rat(order: u32, value: BigRat) -> CycloNum {
        let mut c = CycloNum::zero(order);
        c.coords[0] = value;
        c
    }

    pub fn one(order: u32) -> CycloNum {
        CycloNum::from_rat(order, BigRat::one())
    }

    /// `zeta_order^k`.
    pub fn root_power(order: u32, k: u32) -> CycloNum {
        let k = (k % order) as usize;
        let mut raw = vec![BigRat::zero(); k + 1];
        raw[k] = BigRat::one();
        CycloNum::reduce(order, raw)
    }

    fn reduce(order: u32, raw: Vec<BigRat>) -> CycloNum {
        let modulus = cyclotomic_polynomial(order);
        let mut coords = rem_monic(&raw, &modulus);
        coords.resize(phi(order) as usize, BigRat::zero());
        CycloNum { order, coords }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[BigRat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &CycloNum) -> CycloNum {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        CycloNum { order: self.order, coords }
    }

    pub fn sub(&self, other: &CycloNum) -> CycloNum {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        CycloNum { order: self.order, coords }
    }

    pub fn mul(&self, other: &CycloNum) -> CycloNum {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
        CycloNum::reduce(self.order, mul(&self.coords, &other.coords))
    }

    pub fn neg(&self) -> CycloNum {
        CycloNum { order: self.order, coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// Embed into Q(zeta_m) for a multiple `m` of the order, via
    /// `zeta_n = zeta_m^(m/n)`.
    pub fn embed(&self, target: u32) -> Result<CycloNum> {
        if !target.is_multiple_of(self.order) {
            return Err(Error::IncompatibleOrders { have: self.order, want: target });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as usize;
        let mut raw = vec![BigRat::zero(); (self.coords.len() - 1) * step + 1];
        for (i, c) in self.coords.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        Ok(CycloNum::reduce(target, raw))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn coeffs(p: &[BigRat]) -> Vec<i64> {
        use num_traits::ToPrimitive;
        p.iter().map(|c| c.numer().to_i64().unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(coeffs(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_relations() {
        let z = CycloNum::root_power(3, 1);
        let z2 = z.mul(&z);
        assert_eq!(z2, CycloNum::root_power(3, 2));
        assert_eq!(z2.mul(&z), CycloNum::one(3));
        // 1 + z + z^2 = 0 in Q(zeta_3).
        assert!(CycloNum::one(3).add(&z).add(&z2).is_zero());

        let w = CycloNum::root_power(6, 1);
        let mut acc = CycloNum::one(6);
        for _ in 0..6 {
            acc = acc.mul(&w);
        }
        assert_eq!(acc, CycloNum::one(6));
    }

    #[test]
    fn embedding() {
        // zeta_3 = zeta_6^2, and zeta_6^2 = zeta_6 - 1 modulo z^2 - z + 1.
        let z3 = CycloNum::root_power(3, 1);
        let embedded = z3.embed(6).unwrap();
        assert_eq!(embedded, CycloNum::root_power(6, 2));
        assert_eq!(embedded.coords(), &[rat(-1), rat(1)]);
        assert!(z3.embed(4).is_err());
        // Embedding respects multiplication.
        let z9 = z3.embed(9).unwrap();
        let cube = z9.mul(&z9).mul(&z9);
        assert_eq!(cube, CycloNum::one(9));
    }

    #[test]
    fn coordinate_validation() {
        assert!(CycloNum::new(3, vec![rat(1)]).is_err());
        assert!(CycloNum::new(3, vec![rat(1), rat(0)]).is_ok());
        assert!(CycloNum::new(0, vec![]).is_err());
    }
}
