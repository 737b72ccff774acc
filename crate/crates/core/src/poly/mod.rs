//! Exact bivariate polynomials over the rationals.
//!
//! A [`BiPoly`] is a sparse map from exponent pairs to nonzero rational
//! coefficients, tagged with the variable pair it is written in — `(x, y)`
//! for curve equations, `(u, v)` for discriminants. No zero coefficient is
//! ever stored, so structural equality is semantic equality.

mod gcd;
mod parse;

pub use gcd::{gcd as poly_gcd, is_squarefree};
pub use parse::parse_poly;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{fmt_rat, BigRat};

/// Which pair of variable names a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarPair {
    /// Curve coordinates `(x, y)`.
    XY,
    /// Discriminant coordinates `(u, v)`.
    UV,
}

impl VarPair {
    /// Variable names, first then second.
    pub fn names(self) -> (char, char) {
        match self {
            VarPair::XY => ('x', 'y'),
            VarPair::UV => ('u', 'v'),
        }
    }
}

/// Sparse bivariate polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    vars: VarPair,
    terms: BTreeMap<(u32, u32), BigRat>,
}

impl BiPoly {
    /// The zero polynomial.
    pub fn zero(vars: VarPair) -> Self {
        BiPoly { vars, terms: BTreeMap::new() }
    }

    /// A constant polynomial.
    pub fn constant(vars: VarPair, c: BigRat) -> Self {
        let mut p = BiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert((0, 0), c);
        }
        p
    }

    /// The constant 1.
    pub fn one(vars: VarPair) -> Self {
        BiPoly::constant(vars, BigRat::one())
    }

    /// A single monomial `c * first^i * second^j`.
    pub fn monomial(vars: VarPair, i: u32, j: u32, c: BigRat) -> Self {
        let mut p = BiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert((i, j), c);
        }
        p
    }

    /// The first variable (x or u).
    pub fn var_x(vars: VarPair) -> Self {
        BiPoly::monomial(vars, 1, 0, BigRat::one())
    }

    /// The second variable (y or v).
    pub fn var_y(vars: VarPair) -> Self {
        BiPoly::monomial(vars, 0, 1, BigRat::one())
    }

    pub fn vars(&self) -> VarPair {
        self.vars
    }

    /// Same polynomial under the other variable names.
    pub fn with_vars(&self, vars: VarPair) -> Self {
        BiPoly { vars, terms: self.terms.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the polynomial is a (possibly zero) constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    /// The coefficient of `first^i * second^j`.
    pub fn coeff(&self, i: u32, j: u32) -> BigRat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Exponent pairs with nonzero coefficient.
    pub fn support(&self) -> Vec<(u32, u32)> {
        self.terms.keys().copied().collect()
    }

    /// Iterate over `((i, j), coeff)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRat)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Degree in the first variable, `None` for the zero polynomial.
    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Degree in the second variable, `None` for the zero polynomial.
    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Order at the origin: the least total degree of a term.
    pub fn order_at_origin(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| i + j)
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// The part of lowest total degree (the tangent-cone form).
    pub fn lowest_form(&self) -> Result<BiPoly> {
        let ord = self.order_at_origin()?;
        let terms = self
            .terms
            .iter()
            .filter(|(&(i, j), _)| i + j == ord)
            .map(|(&e, c)| (e, c.clone()))
            .collect();
        Ok(BiPoly { vars: self.vars, terms })
    }

    /// Value at the origin.
    pub fn eval_origin(&self) -> BigRat {
        self.coeff(0, 0)
    }

    fn insert(&mut self, e: (u32, u32), c: BigRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn join_vars(&self, other: &BiPoly) -> VarPair {
        if self.vars == other.vars || other.is_constant() {
            self.vars
        } else if self.is_constant() {
            other.vars
        } else {
            panic!("mixed variable pairs in polynomial arithmetic");
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly { vars: self.join_vars(other), terms: self.terms.clone() };
        for (&e, c) in &other.terms {
            out.insert(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly { vars: self.join_vars(other), terms: self.terms.clone() };
        for (&e, c) in &other.terms {
            out.insert(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        let terms = self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect();
        BiPoly { vars: self.vars, terms }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero(self.join_vars(other));
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.insert((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRat) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero(self.vars);
        }
        let terms = self.terms.iter().map(|(&e, k)| (e, k * c)).collect();
        BiPoly { vars: self.vars, terms }
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut result = BiPoly::one(self.vars);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Partial derivative in the first variable.
    pub fn deriv_x(&self) -> BiPoly {
        let mut out = BiPoly::zero(self.vars);
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.insert((i - 1, j), c * BigRat::from_integer(i.into()));
            }
        }
        out
    }

    /// Partial derivative in the second variable.
    pub fn deriv_y(&self) -> BiPoly {
        let mut out = BiPoly::zero(self.vars);
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.insert((i, j - 1), c * BigRat::from_integer(j.into()));
            }
        }
        out
    }

    /// Substitute polynomials for both variables.
    pub fn compose(&self, px: &BiPoly, py: &BiPoly) -> BiPoly {
        let vars = px.join_vars(py);
        let max_i = self.degree_x().unwrap_or(0) as usize;
        let max_j = self.degree_y().unwrap_or(0) as usize;
        let pow_x = power_table(px, max_i);
        let pow_y = power_table(py, max_j);
        let mut out = BiPoly::zero(vars);
        for (&(i, j), c) in &self.terms {
            let term = pow_x[i as usize].mul(&pow_y[j as usize]).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// Linear shear. `Axis::X` maps `f(x, y)` to `f(x + c*y, y)`,
    /// `Axis::Y` maps it to `f(x, y + c*x)`.
    pub fn shear(&self, axis: Axis, c: &BigRat) -> BiPoly {
        if c.is_zero() {
            return self.clone();
        }
        let x = BiPoly::var_x(self.vars);
        let y = BiPoly::var_y(self.vars);
        match axis {
            Axis::X => self.compose(&x.add(&y.scale(c)), &y),
            Axis::Y => self.compose(&x, &y.add(&x.scale(c))),
        }
    }

    /// Coefficients as polynomials in the first variable, indexed by the
    /// second variable's exponent. Empty for the zero polynomial.
    pub fn y_coefficients(&self) -> Vec<BiPoly> {
        let Some(d) = self.degree_y() else {
            return Vec::new();
        };
        let mut coeffs = vec![BiPoly::zero(self.vars); d as usize + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[j as usize].insert((i, 0), c.clone());
        }
        coeffs
    }

    /// Coefficient of the top power of the second variable.
    pub fn leading_y_coeff(&self) -> BiPoly {
        self.y_coefficients().pop().unwrap_or_else(|| BiPoly::zero(self.vars))
    }

    /// Leading term under lexicographic order (first variable dominant).
    fn leading_term(&self) -> Option<((u32, u32), &BigRat)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &BiPoly) -> Option<BiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let vars = self.join_vars(divisor);
        let ((di, dj), dc) = divisor.leading_term().expect("nonzero divisor");
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero(vars);
        while let Some(((ri, rj), rc)) = rem.leading_term() {
            if ri < di || rj < dj {
                return None;
            }
            let qe = (ri - di, rj - dj);
            let qc = rc / &dc;
            let qt = BiPoly::monomial(vars, qe.0, qe.1, qc);
            rem = rem.sub(&qt.mul(divisor));
            quot = quot.add(&qt);
        }
        Some(quot)
    }
}

/// Precomputed powers `p^0 ..= p^max`.
fn power_table(p: &BiPoly, max: usize) -> Vec<BiPoly> {
    let mut table = Vec::with_capacity(max + 1);
    table.push(BiPoly::one(p.vars()));
    for k in 1..=max {
        let next = table[k - 1].mul(p);
        table.push(next);
    }
    table
}

/// Which variable a shear rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (xn, yn) = self.vars.names();
        // Canonical order: second variable's exponent descending, then the
        // first variable's ascending.
        let mut entries: Vec<(&(u32, u32), &BigRat)> = self.terms.iter().collect();
        entries.sort_by(|(a, _), (b, _)| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        for (idx, (&(i, j), c)) in entries.into_iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let bare = i == 0 && j == 0;
            if !mag.is_one() || bare {
                write!(f, "{}", fmt_rat(&mag))?;
            }
            if i > 0 {
                write!(f, "{xn}")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
            if j > 0 {
                write!(f, "{yn}")?;
                if j > 1 {
                    write!(f, "^{j}")?;
                }
            }
        }
        Ok(())
    }
}
