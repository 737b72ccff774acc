//! Bivariate gcd via content/primitive-part reduction and a subresultant
//! polynomial remainder sequence, plus the squarefreeness test built on it.

use num_traits::One;

use super::BiPoly;
use crate::error::{Error, Result};
use crate::rat::BigRat;

/// Degree in x of a polynomial known to involve only the first variable.
fn uni_degree(p: &BiPoly) -> Option<u32> {
    p.degree_x()
}

/// Long division of x-only polynomials over Q.
fn uni_divrem(a: &BiPoly, b: &BiPoly) -> (BiPoly, BiPoly) {
    assert!(!b.is_zero(), "division by zero");
    let vars = a.vars();
    let db = uni_degree(b).unwrap();
    let lb = b.coeff(db, 0);
    let mut rem = a.clone();
    let mut quot = BiPoly::zero(vars);
    while let Some(dr) = uni_degree(&rem) {
        if rem.is_zero() || dr < db {
            break;
        }
        let q = BiPoly::monomial(vars, dr - db, 0, rem.coeff(dr, 0) / &lb);
        rem = rem.sub(&q.mul(b));
        quot = quot.add(&q);
    }
    (quot, rem)
}

/// Monic gcd of x-only polynomials.
fn uni_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = uni_divrem(&a, &b);
        a = b;
        b = r;
    }
    make_monic_uni(&a)
}

fn make_monic_uni(p: &BiPoly) -> BiPoly {
    match uni_degree(p) {
        None => p.clone(),
        Some(d) => {
            let lc = p.coeff(d, 0);
            p.scale(&(BigRat::one() / lc))
        }
    }
}

/// Leading coefficient of `p` viewed in y, as an x-only polynomial.
fn lc_y(p: &BiPoly) -> BiPoly {
    p.leading_y_coeff()
}

/// Content of `p` with respect to y: the monic gcd of its y-coefficients.
fn content_y(p: &BiPoly) -> BiPoly {
    let mut c = BiPoly::zero(p.vars());
    for coeff in p.y_coefficients() {
        if coeff.is_zero() {
            continue;
        }
        c = if c.is_zero() { make_monic_uni(&coeff) } else { uni_gcd(&c, &coeff) };
        if uni_degree(&c) == Some(0) {
            break;
        }
    }
    c
}

fn primitive_part_y(p: &BiPoly) -> BiPoly {
    let c = content_y(p);
    p.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` with respect to y:
/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem_y(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = b.degree_y().expect("nonzero divisor");
    let d = lc_y(b);
    let da = a.degree_y().unwrap_or(0);
    let mut e = i64::from(da) - i64::from(db) + 1;
    let mut r = a.clone();
    while !r.is_zero() && r.degree_y().unwrap() >= db {
        let dr = r.degree_y().unwrap();
        let lr = lc_y(&r);
        let shift = BiPoly::monomial(r.vars(), 0, dr - db, BigRat::one());
        r = r.mul(&d).sub(&lr.mul(&shift).mul(b));
        e -= 1;
    }
    for _ in 0..e.max(0) {
        r = r.mul(&d);
    }
    r
}

/// gcd of primitive (in y) polynomials via the subresultant PRS.
fn gcd_primitive_y(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let (mut a, mut b) = if a.degree_y() >= b.degree_y() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if b.degree_y() == Some(0) || b.degree_y().is_none() {
        return BiPoly::one(a.vars());
    }
    let mut g = BiPoly::one(a.vars());
    let mut h = BiPoly::one(a.vars());
    loop {
        let delta = a.degree_y().unwrap() - b.degree_y().unwrap();
        let r = prem_y(&a, &b);
        if r.is_zero() {
            return primitive_part_y(&b);
        }
        if r.degree_y() == Some(0) {
            return BiPoly::one(a.vars());
        }
        a = b;
        let mut divisor = g.clone();
        for _ in 0..delta {
            divisor = divisor.mul(&h);
        }
        b = r.div_exact(&divisor).expect("subresultant division is exact");
        g = lc_y(&a);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => {
                let mut num = BiPoly::one(a.vars());
                for _ in 0..delta {
                    num = num.mul(&g);
                }
                let mut den = BiPoly::one(a.vars());
                for _ in 0..delta - 1 {
                    den = den.mul(&h);
                }
                num.div_exact(&den).expect("subresultant h-update is exact")
            }
        };
    }
}

/// gcd of two bivariate polynomials, normalized so that the leading
/// coefficient (lexicographic, first variable dominant) is 1.
///
/// `gcd(p, 0)` is the normalization of `p`.
pub fn gcd(p: &BiPoly, q: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return normalize(q);
    }
    if q.is_zero() {
        return normalize(p);
    }
    let cp = content_y(p);
    let cq = content_y(q);
    let content_gcd = uni_gcd(&cp, &cq);
    let pp = p.div_exact(&cp).expect("content divides");
    let qq = q.div_exact(&cq).expect("content divides");
    let g = gcd_primitive_y(&pp, &qq);
    normalize(&content_gcd.mul(&g))
}

/// Scale so the coefficient of the highest monomial (y-degree first, then
/// x-degree) is 1, e.g. `2y^2 - 2x` becomes `y^2 - x`.
fn normalize(p: &BiPoly) -> BiPoly {
    match p.terms().max_by_key(|(&(i, j), _)| (j, i)) {
        None => p.clone(),
        Some((_, lc)) => {
            let inv = BigRat::one() / lc.clone();
            p.scale(&inv)
        }
    }
}

/// Characteristic-zero squarefreeness: true iff `gcd(f, f_x, f_y)` is a
/// nonzero constant.
pub fn is_squarefree(f: &BiPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = gcd(f, &f.deriv_x());
    let g = gcd(&g, &f.deriv_y());
    Ok(g.is_constant())
}
