//! Polynomials viewed as univariate in `y` over a polynomial coefficient
//! ring: Sylvester resultants by fraction-free Bareiss elimination,
//! discriminant surfaces, Abhyankar-Moh approximate roots, and intersection
//! numbers at the origin.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, VarPair};
use crate::rat::BigRat;

/// A nonzero polynomial in the second variable with [`BiPoly`] coefficients,
/// indexed by `y`-degree. The leading coefficient is never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YPoly {
    coeffs: Vec<BiPoly>,
}

impl YPoly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BiPoly>) -> Result<YPoly> {
        while coeffs.last().map(BiPoly::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(YPoly { coeffs })
    }

    /// View a bivariate polynomial as univariate in its second variable.
    pub fn from_bipoly(f: &BiPoly) -> Result<YPoly> {
        YPoly::new(f.y_coefficients())
    }

    /// The monomial `y^e`.
    pub fn y_power(vars: VarPair, e: usize) -> YPoly {
        let mut coeffs = vec![BiPoly::zero(vars); e + 1];
        coeffs[e] = BiPoly::one(vars);
        YPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BiPoly {
        self.coeffs.last().expect("nonzero")
    }

    pub fn is_monic(&self) -> bool {
        let lead = self.leading();
        lead.is_constant() && lead.eval_origin().is_one()
    }

    fn vars(&self) -> VarPair {
        self.coeffs[0].vars()
    }

    /// Back to a bivariate polynomial (coefficients must not involve the
    /// second variable themselves).
    pub fn to_bipoly(&self) -> BiPoly {
        let vars = self.vars();
        let y = BiPoly::var_y(vars);
        let mut acc = BiPoly::zero(vars);
        for (j, c) in self.coeffs.iter().enumerate() {
            debug_assert!(c.degree_y().unwrap_or(0) == 0, "coefficient involves y");
            acc = acc.add(&c.mul(&y.pow(j as u32)));
        }
        acc
    }

    pub fn add(&self, other: &YPoly) -> Result<YPoly> {
        YPoly::new(add_vecs(&self.coeffs, &other.coeffs))
    }

    fn mul_raw(a: &[BiPoly], b: &[BiPoly], vars: VarPair) -> Vec<BiPoly> {
        let mut out = vec![BiPoly::zero(vars); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&ai.mul(bj));
            }
        }
        out
    }

    pub fn mul(&self, other: &YPoly) -> YPoly {
        YPoly { coeffs: Self::mul_raw(&self.coeffs, &other.coeffs, self.vars()) }
    }

    pub fn pow(&self, n: usize) -> YPoly {
        let mut acc = YPoly::y_power(self.vars(), 0);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &BigRat) -> Result<YPoly> {
        YPoly::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    /// Evaluate the coefficients at `x = 0`, giving the restriction to the
    /// vertical axis as a list of constants.
    fn restriction_to_axis(&self) -> Vec<BigRat> {
        self.coeffs.iter().map(BiPoly::eval_origin).collect()
    }
}

fn add_vecs(a: &[BiPoly], b: &[BiPoly]) -> Vec<BiPoly> {
    let vars = a.first().or_else(|| b.first()).map(|p| p.vars()).unwrap_or(VarPair::XY);
    let n = a.len().max(b.len());
    let mut out = vec![BiPoly::zero(vars); n];
    for (i, p) in a.iter().enumerate() {
        out[i] = out[i].add(p);
    }
    for (i, p) in b.iter().enumerate() {
        out[i] = out[i].add(p);
    }
    out
}

fn vec_degree(v: &[BiPoly]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

/// Division by a monic divisor: `num = quot * den + rem` with
/// `deg rem < deg den`. Exact polynomial arithmetic, no fractions introduced.
fn divrem_monic(num: &[BiPoly], den: &YPoly) -> (Vec<BiPoly>, Vec<BiPoly>) {
    debug_assert!(den.is_monic());
    let vars = den.vars();
    let dd = den.degree();
    let mut rem: Vec<BiPoly> = num.to_vec();
    let nd = vec_degree(&rem).unwrap_or(0);
    let mut quot = vec![BiPoly::zero(vars); nd.saturating_sub(dd) + 1];
    while let Some(dr) = vec_degree(&rem) {
        if dr < dd {
            break;
        }
        let q = rem[dr].clone();
        let shift = dr - dd;
        for (j, c) in den.coeffs.iter().enumerate() {
            rem[shift + j] = rem[shift + j].sub(&q.mul(c));
        }
        quot[shift] = quot[shift].add(&q);
        debug_assert!(rem[dr].is_zero());
    }
    (quot, rem)
}

/// Sylvester matrix of `p` and `q` with respect to `y`, `p`'s coefficient
/// rows first.
pub fn sylvester_matrix(p: &YPoly, q: &YPoly) -> Vec<Vec<BiPoly>> {
    let dp = p.degree();
    let dq = q.degree();
    let n = dp + dq;
    let vars = p.vars();
    let mut m = vec![vec![BiPoly::zero(vars); n]; n];
    for s in 0..dq {
        for t in 0..=dp {
            m[s][s + t] = p.coeffs[dp - t].clone();
        }
    }
    for s in 0..dp {
        for t in 0..=dq {
            m[dq + s][s + t] = q.coeffs[dq - t].clone();
        }
    }
    m
}

/// Determinant by fraction-free Bareiss elimination with row pivoting.
/// Every division is exact in the polynomial ring.
#[allow(clippy::needless_range_loop)] // rows i and k are indexed side by side
pub fn bareiss_det(mut m: Vec<Vec<BiPoly>>, vars: VarPair) -> BiPoly {
    let n = m.len();
    if n == 0 {
        return BiPoly::one(vars);
    }
    let mut negate = false;
    let mut prev = BiPoly::one(vars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(sw) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BiPoly::zero(vars);
            };
            m.swap(k, sw);
            negate = !negate;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let head = m[i][k].clone();
            for j in k + 1..n {
                let num = m[i][j].mul(&pivot).sub(&head.mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = BiPoly::zero(vars);
        }
        prev = pivot;
    }
    let det = m.pop().unwrap().pop().unwrap();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Resultant of `p` and `q` with respect to `y`: the determinant of their
/// Sylvester matrix, `p`'s rows first.
///
/// When both polynomials are constants the matrix is empty and the value is
/// `1` by the empty-determinant convention.
pub fn resultant_y(p: &YPoly, q: &YPoly) -> BiPoly {
    bareiss_det(sylvester_matrix(p, q), p.vars())
}

// ---------------------------------------------------------------------------
// Discriminant surface.
//
// D(u, v) = Res_y(f(u,y) - v, f_y(u,y)). With a constant leading coefficient
// this equals lc(f_y)^d * prod_j (f(u, b_j(u)) - v) over the d-1 roots b_j of
// f_y counted with multiplicity. The product is assembled exactly from the
// power sums of the critical values, which are traces of powers of f reduced
// modulo f_y — pure polynomial arithmetic, no root extraction. Substituting
// z = lc * y turns the derivative into a monic integer polynomial, so the
// whole trace computation runs over Z; the known powers of lc and of the
// coefficient denominator are divided out exactly at the end. The result is
// identical, sign included, to the Bareiss determinant of the Sylvester
// matrix (asserted in the test suite).
// ---------------------------------------------------------------------------

/// Dense univariate integer polynomials, the scalar layer of the
/// discriminant computation.
mod iuni {
    use num_bigint::BigInt;
    use num_traits::Zero;

    pub type IUni = Vec<BigInt>;

    pub fn trim(mut p: IUni) -> IUni {
        while p.last().map(|c| c.is_zero()).unwrap_or(false) {
            p.pop();
        }
        p
    }

    pub fn add(a: &IUni, b: &IUni) -> IUni {
        let mut out = vec![BigInt::zero(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] += c;
        }
        trim(out)
    }

    pub fn sub(a: &IUni, b: &IUni) -> IUni {
        let mut out = vec![BigInt::zero(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] -= c;
        }
        trim(out)
    }

    pub fn mul(a: &IUni, b: &IUni) -> IUni {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
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

    pub fn scale(a: &IUni, c: &BigInt) -> IUni {
        if c.is_zero() {
            return Vec::new();
        }
        a.iter().map(|k| k * c).collect()
    }

    /// Divide every coefficient by `c`, panicking on inexact division.
    pub fn div_exact(a: &IUni, c: &BigInt) -> IUni {
        a.iter()
            .map(|k| {
                let (q, r) = num_integer::Integer::div_rem(k, c);
                assert!(r.is_zero(), "inexact scalar division in discriminant");
                q
            })
            .collect()
    }
}

use iuni::IUni;
use num_bigint::BigInt;

/// Polynomial in the scaled variable z with dense Z[x] coefficients.
type ZPoly = Vec<IUni>;

fn zpoly_degree(p: &ZPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_empty())
}

fn zpoly_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_empty() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_empty() {
                continue;
            }
            out[i + j] = iuni::add(&out[i + j], &iuni::mul(ca, cb));
        }
    }
    out
}

/// Remainder of `num` modulo a monic integer divisor.
fn zpoly_rem_monic(num: &ZPoly, den: &ZPoly) -> ZPoly {
    let dd = zpoly_degree(den).expect("nonzero divisor");
    let mut rem = num.clone();
    while let Some(dr) = zpoly_degree(&rem) {
        if dr < dd {
            break;
        }
        let q = rem[dr].clone();
        let shift = dr - dd;
        for (j, c) in den.iter().enumerate().take(dd + 1) {
            if c.is_empty() {
                continue;
            }
            rem[shift + j] = iuni::sub(&rem[shift + j], &iuni::mul(&q, c));
        }
        rem[dr] = Vec::new();
    }
    rem.truncate(dd);
    rem
}

/// Discriminant surface `D(u, v) = Res_y(f(u,y) - v, f_y(u,y))` of a curve
/// polynomial whose top `y`-coefficient is a nonzero constant.
///
/// `deg_y f = 1` yields a nonzero constant.
pub fn discriminant_surface(f: &BiPoly) -> Result<BiPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree_y().unwrap() as usize;
    if d == 0 {
        return Err(Error::NoYDependence);
    }
    let lead = f.leading_y_coeff();
    if !lead.is_constant() {
        return Err(Error::NonConstantLeadingCoeff);
    }
    if d == 1 {
        // Res_y(f - v, f_y) with f_y a nonzero constant c is just c.
        return Ok(BiPoly::constant(VarPair::UV, lead.eval_origin()));
    }
    let e = d - 1;

    // Clear denominators: F = mu * f has integer coefficients.
    let mu = f
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| num_integer::Integer::lcm(&acc, c.denom()));
    let f_int: Vec<IUni> = {
        let scaled = f.scale(&BigRat::from_integer(mu.clone()));
        scaled
            .y_coefficients()
            .iter()
            .map(|c| {
                let mut out =
                    vec![BigInt::zero(); c.degree_x().map(|dx| dx as usize + 1).unwrap_or(0)];
                for (&(i, j), coeff) in c.terms() {
                    debug_assert_eq!(j, 0);
                    debug_assert!(coeff.denom().is_one());
                    out[i as usize] = coeff.numer().clone();
                }
                out
            })
            .collect()
    };

    // lambda = lc(F_y) = d * lc(F), the scaling factor for z = lambda * y.
    let lambda = BigInt::from(d) * &f_int[d][0];
    let mut lam_pow = vec![BigInt::one()];
    for k in 1..=d * e {
        let next = &lam_pow[k - 1] * &lambda;
        lam_pow.push(next);
    }

    // Monic integer B(z) = lambda^(e-1) * F_y(z/lambda): roots are lambda*b_j.
    // The coefficient of z^j is (j+1) * c_{j+1} * lambda^(e-1-j).
    let mut b: ZPoly = Vec::with_capacity(e + 1);
    for j in 0..=e {
        if j == e {
            b.push(vec![BigInt::one()]);
        } else {
            let fy_coeff = iuni::scale(&f_int[j + 1], &BigInt::from(j + 1));
            b.push(iuni::scale(&fy_coeff, &lam_pow[e - 1 - j]));
        }
    }
    debug_assert_eq!(zpoly_degree(&b), Some(e));

    // H(z) = lambda^d * F(z/lambda), reduced modulo B. Its values at the
    // scaled roots are lambda^d times the critical values of F.
    let fh: ZPoly = f_int
        .iter()
        .enumerate()
        .map(|(j, c)| iuni::scale(c, &lam_pow[d - j]))
        .collect();
    let h = zpoly_rem_monic(&fh, &b);

    // Power sums s_k of the roots of B, k = 0 .. e-1 (Newton's identities).
    let mut s: Vec<IUni> = Vec::with_capacity(e);
    s.push(vec![BigInt::from(e)]);
    for k in 1..e {
        // s_k = -k*b_{e-k} - sum_{i=1}^{k-1} b_{e-i} * s_{k-i}
        let mut acc = iuni::scale(&b[e - k], &BigInt::from(k));
        for i in 1..k {
            acc = iuni::add(&acc, &iuni::mul(&b[e - i], &s[k - i]));
        }
        s.push(iuni::scale(&acc, &BigInt::from(-1)));
    }

    let trace = |t: &ZPoly| -> IUni {
        let mut acc = Vec::new();
        for (k, c) in t.iter().enumerate() {
            if !c.is_empty() {
                acc = iuni::add(&acc, &iuni::mul(c, &s[k]));
            }
        }
        acc
    };

    // Power sums of the scaled critical values: P_m = Tr(H^m mod B).
    let mut p: Vec<IUni> = Vec::with_capacity(e);
    let mut hm = h.clone();
    for m in 1..=e {
        if m > 1 {
            hm = zpoly_rem_monic(&zpoly_mul(&hm, &h), &b);
        }
        p.push(trace(&hm));
    }

    // Elementary symmetric functions of the scaled critical values; the
    // division by k in Newton's identity is exact over Z.
    let mut es: Vec<IUni> = Vec::with_capacity(e + 1);
    es.push(vec![BigInt::one()]);
    for k in 1..=e {
        let mut acc = Vec::new();
        let mut negate = false;
        for i in 1..=k {
            let term = iuni::mul(&es[k - i], &p[i - 1]);
            acc = if negate { iuni::sub(&acc, &term) } else { iuni::add(&acc, &term) };
            negate = !negate;
        }
        es.push(iuni::div_exact(&acc, &BigInt::from(k)));
    }

    // Res_y(F - w, F_y) = lambda^d (-1)^e sum_k (-1)^k (es_k/lambda^(dk)) w^(e-k),
    // and D(u, v) = Res_y(F - mu*v, F_y) / mu^(d+e). The coefficient of
    // v^(e-k) is therefore (+-) es_k * lambda^(d(1-k)) * mu^(-(d+k)),
    // an exact rational scaling.
    let mut out = BiPoly::zero(VarPair::UV);
    // mu^(d+k), maintained incrementally.
    let mut mu_pow = BigInt::one();
    for _ in 0..d {
        mu_pow *= &mu;
    }
    for (k, ek) in es.iter().enumerate() {
        if k > 0 {
            mu_pow *= &mu;
        }
        let numer: IUni = if k <= 1 {
            iuni::scale(ek, &lam_pow[d * (1 - k)])
        } else {
            iuni::div_exact(ek, &lam_pow[d * (k - 1)])
        };
        let sign_flip = (e + k) % 2 == 1;
        for (i, c) in numer.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let val = BigRat::new(if sign_flip { -c.clone() } else { c.clone() }, mu_pow.clone());
            out = out.add(&BiPoly::monomial(VarPair::UV, i as u32, (e - k) as u32, val));
        }
    }
    Ok(out)
}

/// The unique monic `g` of `y`-degree `d/p` with `deg_y(f - g^p) < d - d/p`.
pub fn approximate_root(f: &YPoly, p: usize) -> Result<YPoly> {
    let d = f.degree();
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if p < 2 || d == 0 || !d.is_multiple_of(p) {
        return Err(Error::BadRootExponent { degree: d, p });
    }
    let e = d / p;
    let bound = d - e;
    let inv_p = BigRat::one() / BigRat::from_integer((p as i64).into());
    let mut g = YPoly::y_power(f.vars(), e);
    for _ in 0..=e + 1 {
        let defect = add_vecs(&f.coeffs, &g.pow(p).scale(&-BigRat::one())?.coeffs);
        if vec_degree(&defect).map(|dd| dd < bound).unwrap_or(true) {
            return Ok(g);
        }
        // Newton step: g += quot(f - g^p, p * g^(p-1)).
        let (quot, _) = divrem_monic(&defect, &g.pow(p - 1));
        let step = YPoly::new(quot)
            .expect("defect of high degree gives a nonzero quotient")
            .scale(&inv_p)?;
        g = g.add(&step)?;
    }
    Err(Error::Internal("approximate-root iteration failed to settle".into()))
}

/// Intersection number at the origin: `ord_x Res_y(f, g)` for monic `f`, `g`
/// whose restrictions to `x = 0` are pure powers of `y`.
pub fn intersection_number(f: &YPoly, g: &YPoly) -> Result<u64> {
    for p in [f, g] {
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        let axis = p.restriction_to_axis();
        if axis[..p.degree()].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotCenteredAtOrigin);
        }
    }
    let res = resultant_y(f, g);
    if res.is_zero() {
        return Err(Error::CommonFactor);
    }
    Ok(u64::from(res.order_at_origin().expect("nonzero resultant")))
}
