//! Property tests for the algebraic identities the library relies on.

use njp_core::poly::Axis;
use njp_core::rat::{rat, ratio, BigRat};
use njp_core::{
    abrade, approximate_root, is_squarefree, parse_poly, polygon_from_support, reduce,
    resultant_y, BiPoly, Polygon, VarPair, YPoly,
};
use num_traits::Zero;
use proptest::prelude::*;

// --- strategies -------------------------------------------------------------

/// Sparse bivariate polynomial with small support and integer coefficients.
fn arb_bipoly(max_terms: usize, max_exp: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(
        ((0..=max_exp), (0..=max_exp), (-9i64..=9).prop_filter("nonzero", |c| *c != 0)),
        1..=max_terms,
    )
    .prop_map(|terms| {
        let mut acc = BiPoly::zero(VarPair::XY);
        for (i, j, c) in terms {
            acc = acc.add(&BiPoly::monomial(VarPair::XY, i, j, rat(c)));
        }
        acc
    })
}

fn arb_nonzero_bipoly(max_terms: usize, max_exp: u32) -> impl Strategy<Value = BiPoly> {
    arb_bipoly(max_terms, max_exp).prop_filter("nonzero", |p| !p.is_zero())
}

/// Monic polynomial in y of the given degree with small x-only coefficients.
fn arb_monic_ypoly(degree: usize) -> impl Strategy<Value = YPoly> {
    prop::collection::vec(
        prop::collection::vec(-5i64..=5, 0..=2),
        degree,
    )
    .prop_map(move |coeff_rows| {
        let mut coeffs: Vec<BiPoly> = coeff_rows
            .into_iter()
            .map(|row| {
                let mut acc = BiPoly::zero(VarPair::XY);
                for (i, c) in row.into_iter().enumerate() {
                    acc = acc.add(&BiPoly::monomial(VarPair::XY, i as u32, 0, rat(c)));
                }
                acc
            })
            .collect();
        coeffs.push(BiPoly::one(VarPair::XY));
        YPoly::new(coeffs).expect("monic")
    })
}

fn arb_ypoly() -> impl Strategy<Value = YPoly> {
    (1usize..=3).prop_flat_map(|d| {
        (arb_monic_ypoly(d), -3i64..=3).prop_map(|(p, lead)| {
            if lead == 0 {
                p
            } else {
                p.scale(&rat(lead)).expect("nonzero scale")
            }
        })
    })
}

/// Canonical term data for a convenient polygon with small rational extents.
fn arb_polygon_terms(max_terms: usize) -> impl Strategy<Value = Vec<(BigRat, BigRat)>> {
    prop::collection::vec(((1i64..=40, 1i64..=4), (1i64..=8, 1i64..=3)), 1..=max_terms)
        .prop_map(|raw| {
            raw.into_iter()
                .map(|((ln, ld), (mn, md))| (ratio(ln, ld), ratio(mn, md)))
                .collect()
        })
}

fn convenient(terms: Vec<(BigRat, BigRat)>) -> Polygon {
    Polygon::new(terms, true, true).expect("positive terms")
}

// --- polynomial layer ---------------------------------------------------------

proptest! {
    #[test]
    fn print_parse_round_trip(p in arb_bipoly(6, 6)) {
        let printed = p.to_string();
        let back = parse_poly(&printed).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn squared_polynomials_are_not_squarefree(p in arb_nonzero_bipoly(3, 3)) {
        prop_assume!(!p.is_constant());
        prop_assert!(!is_squarefree(&p.mul(&p)).unwrap());
    }

    #[test]
    fn shear_by_zero_is_identity(p in arb_bipoly(6, 6)) {
        prop_assert_eq!(p.shear(Axis::X, &BigRat::zero()), p.clone());
        prop_assert_eq!(p.shear(Axis::Y, &BigRat::zero()), p);
    }

    #[test]
    fn shears_compose_additively(p in arb_bipoly(4, 4), a in -3i64..=3, b in -3i64..=3) {
        let once = p.shear(Axis::X, &rat(a)).shear(Axis::X, &rat(b));
        let direct = p.shear(Axis::X, &rat(a + b));
        prop_assert_eq!(once, direct);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_swap_sign(p in arb_ypoly(), q in arb_ypoly()) {
        let forward = resultant_y(&p, &q);
        let backward = resultant_y(&q, &p);
        let expected = if (p.degree() * q.degree()) % 2 == 1 {
            backward.neg()
        } else {
            backward
        };
        prop_assert_eq!(forward, expected);
    }

    #[test]
    fn resultant_multiplicative_on_monic(
        p in (1usize..=2).prop_flat_map(arb_monic_ypoly),
        r in (1usize..=2).prop_flat_map(arb_monic_ypoly),
        q in (1usize..=2).prop_flat_map(arb_monic_ypoly),
    ) {
        let lhs = resultant_y(&p.mul(&r), &q);
        let rhs = resultant_y(&p, &q).mul(&resultant_y(&r, &q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn approximate_root_defining_inequality(
        g in (1usize..=2).prop_flat_map(arb_monic_ypoly),
        p in 2usize..=3,
        noise in arb_bipoly(3, 2),
    ) {
        let e = g.degree();
        let d = e * p;
        // f = g^p + noise restricted to y-degrees below d - e.
        let bound = d - e;
        let mut f = g.pow(p);
        let mut shifted = BiPoly::zero(VarPair::XY);
        for (&(i, j), c) in noise.terms() {
            if (j as usize) < bound {
                shifted = shifted.add(&BiPoly::monomial(VarPair::XY, i, j, c.clone()));
            }
        }
        if !shifted.is_zero() {
            f = f.add(&YPoly::from_bipoly(&shifted).unwrap()).unwrap();
        }
        let root = approximate_root(&f, p).unwrap();
        // The unique root of g^p + low-order noise is g itself.
        prop_assert_eq!(&root, &g);
        // And the defining inequality holds for the output.
        let defect = f.to_bipoly().sub(&root.pow(p).to_bipoly());
        let defect_deg = defect.degree_y().map(|d| d as usize);
        prop_assert!(defect_deg.map(|dd| dd < bound).unwrap_or(true));
    }
}

// --- polygon layer -----------------------------------------------------------

proptest! {
    #[test]
    fn minkowski_commutative_associative(
        a in arb_polygon_terms(4),
        b in arb_polygon_terms(4),
        c in arb_polygon_terms(4),
    ) {
        let (a, b, c) = (convenient(a), convenient(b), convenient(c));
        prop_assert_eq!(a.minkowski_sum(&b), b.minkowski_sum(&a));
        prop_assert_eq!(
            a.minkowski_sum(&b).minkowski_sum(&c),
            a.minkowski_sum(&b.minkowski_sum(&c))
        );
        prop_assert_eq!(
            a.minkowski_sum(&b).height(),
            a.height() + b.height()
        );
    }

    #[test]
    fn canonical_form_is_unique(a in arb_polygon_terms(4)) {
        let p = convenient(a);
        let rebuilt = Polygon::new(
            p.canonical_terms().iter().map(|t| (t.l().clone(), t.m().clone())).collect(),
            true,
            true,
        ).unwrap();
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn support_polygon_idempotent(a in arb_polygon_terms(4)) {
        // Anchor the polygon's vertex chain and rebuild from it.
        let p = convenient(a);
        let vertices = p.anchored_vertices().unwrap();
        let q = polygon_from_support(&vertices).unwrap();
        prop_assert_eq!(&q, &p);
        let r = polygon_from_support(&q.anchored_vertices().unwrap()).unwrap();
        prop_assert_eq!(r, q);
    }

    #[test]
    fn reduction_height_law(a in arb_polygon_terms(4)) {
        let p = convenient(a);
        prop_assume!(p.term_count() >= 2);
        let m1 = p.canonical_terms()[0].m().clone();
        let reduced = reduce(&p).unwrap();
        prop_assert_eq!(
            reduced.height(),
            (p.height() - &m1) / (rat(1) + &m1)
        );
        // Inclinations stay strictly increasing, term count drops by one.
        prop_assert_eq!(reduced.term_count(), p.term_count() - 1);
    }

    #[test]
    fn abrasion_height_law(a in arb_polygon_terms(4)) {
        let p = convenient(a);
        prop_assume!(p.term_count() >= 2);
        let m_last = p.canonical_terms().last().unwrap().m().clone();
        let abraded = abrade(&p).unwrap();
        prop_assert_eq!(abraded.height(), p.height() - m_last);
    }

    #[test]
    fn reduction_reconstruction(a in arb_polygon_terms(4)) {
        // P is determined by R(P) together with its first term.
        let p = convenient(a);
        prop_assume!(p.term_count() >= 2);
        let reduced = reduce(&p).unwrap();
        let first = &p.canonical_terms()[0];
        let scale = rat(1) + first.m();
        let mut terms = vec![(first.l().clone(), first.m().clone())];
        for t in reduced.canonical_terms() {
            let m = t.m() * &scale;
            let l = t.l() + first.l() / &scale * &m;
            terms.push((l, m));
        }
        prop_assert_eq!(convenient(terms), p);
    }
}

// Ostrowski's product law: the Newton polygon of a product is the Minkowski
// sum of the polygons of the factors.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ostrowski_product_law(
        p in arb_nonzero_bipoly(4, 5),
        q in arb_nonzero_bipoly(4, 5),
    ) {
        let pp = njp_core::polygon_of_poly(&p).unwrap();
        let pq = njp_core::polygon_of_poly(&q).unwrap();
        let prod = njp_core::polygon_of_poly(&p.mul(&q)).unwrap();
        prop_assert_eq!(prod, pp.minkowski_sum(&pq));
    }
}

// --- independent squarefreeness oracle ----------------------------------------
//
// The production test runs a subresultant-PRS gcd. The oracle below decides
// squarefreeness through the resultant instead: f is squarefree iff its
// y-content is a squarefree univariate polynomial and Res_y(pp, pp_y) != 0
// for the primitive part pp. The univariate gcd here is a plain local Euclid,
// sharing no code with the gcd under test.

mod squarefree_oracle {
    use super::*;

    /// x-degree of an x-only polynomial.
    fn deg(p: &BiPoly) -> Option<u32> {
        p.degree_x()
    }

    fn divrem(a: &BiPoly, b: &BiPoly) -> (BiPoly, BiPoly) {
        let db = deg(b).unwrap();
        let lb = b.coeff(db, 0);
        let mut rem = a.clone();
        let mut quot = BiPoly::zero(VarPair::XY);
        while let Some(dr) = deg(&rem) {
            if dr < db {
                break;
            }
            let q = BiPoly::monomial(VarPair::XY, dr - db, 0, rem.coeff(dr, 0) / &lb);
            rem = rem.sub(&q.mul(b));
            quot = quot.add(&q);
        }
        (quot, rem)
    }

    fn euclid_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = divrem(&a, &b);
            a = b;
            b = r;
        }
        a
    }

    fn content_y(f: &BiPoly) -> BiPoly {
        let mut c = BiPoly::zero(VarPair::XY);
        for coeff in f.y_coefficients() {
            if coeff.is_zero() {
                continue;
            }
            c = if c.is_zero() { coeff } else { euclid_gcd(&c, &coeff) };
        }
        c
    }

    pub fn squarefree(f: &BiPoly) -> bool {
        let content = content_y(f);
        let content_sf = match deg(&content) {
            None | Some(0) => true,
            Some(_) => {
                deg(&euclid_gcd(&content, &content.deriv_x())).unwrap_or(0) == 0
            }
        };
        if !content_sf {
            return false;
        }
        let pp = f.div_exact(&content).expect("content divides");
        if pp.degree_y().unwrap_or(0) == 0 {
            return true;
        }
        let a = YPoly::from_bipoly(&pp).unwrap();
        let b = YPoly::from_bipoly(&pp.deriv_y()).unwrap();
        !resultant_y(&a, &b).is_zero()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn squarefree_matches_resultant_oracle(
        base in arb_nonzero_bipoly(3, 3),
        extra in arb_nonzero_bipoly(2, 2),
        square_it in any::<bool>(),
    ) {
        // Mix squarefree-looking inputs with deliberate squares.
        let f = if square_it { base.mul(&base).mul(&extra) } else { base.mul(&extra) };
        prop_assume!(!f.is_zero());
        prop_assert_eq!(
            is_squarefree(&f).unwrap(),
            squarefree_oracle::squarefree(&f),
            "disagreement on {}", f
        );
    }
}

#[test]
fn squarefree_oracle_agrees_on_named_examples() {
    for (fs, expected) in [
        ("(y^2-x^3)^2-x^7", true),
        ("(y-x)^2", false),
        ("y^2-x^3", true),
        ("x^2*y + x^2", false),
        ("(1+x)*((y^3-x^5)^2-9x^11)", true),
    ] {
        let f = parse_poly(fs).unwrap();
        assert_eq!(is_squarefree(&f).unwrap(), expected, "{fs}");
        assert_eq!(squarefree_oracle::squarefree(&f), expected, "oracle on {fs}");
    }
}
