//! Cross-module coherence: the polygon operators against the semigroup
//! calculus, the three criteria against one another, and shear stability of
//! the discriminant pipeline.

use njp_core::{
    abrade, abrasion_criterion, char_to_semigroup, enumerate_characteristics, merle_polygon,
    parse_poly, polygon_for_shear, reduce, reduction_criterion, CharSeq, CriterionVerdict,
    Polygon, SgpGens,
};
use njp_core::rat::rat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reducing the Merle polygon matches dividing the multiplicity out of the
/// characteristic: R(N(b_0, b_1, ..., b_g)) = N(b_0/n_1, b_2, ..., b_g).
#[test]
fn reduce_commutes_with_merle() {
    let mut checked = 0;
    for c in enumerate_characteristics(16, 40) {
        if c.genus() < 2 {
            continue;
        }
        let b = c.entries();
        let e = c.gcd_chain();
        let n1 = b[0] / e[1];
        let mut reduced_char = vec![b[0] / n1];
        reduced_char.extend_from_slice(&b[2..]);
        let reduced_char = CharSeq::new(reduced_char).expect("valid by construction");

        let lhs = reduce(&merle_polygon(&char_to_semigroup(&c))).unwrap();
        let rhs = merle_polygon(&char_to_semigroup(&reduced_char));
        assert_eq!(lhs, rhs, "characteristic {c}");
        checked += 1;
    }
    assert!(checked > 50, "only {checked} characteristics exercised");
}

/// Abrading the Merle polygon matches passing to the next characteristic
/// approximate root: A(N(<bb_0, ..., bb_g>)) = N(<bb_0/l, ..., bb_{g-1}/l>)
/// with l = gcd(bb_0, ..., bb_{g-1}).
#[test]
fn abrade_commutes_with_merle() {
    let mut checked = 0;
    for c in enumerate_characteristics(16, 40) {
        if c.genus() < 2 {
            continue;
        }
        let s = char_to_semigroup(&c);
        let gens = s.gens();
        let l = s.gcd_chain()[gens.len() - 2];
        let divided: Vec<u64> = gens[..gens.len() - 1].iter().map(|g| g / l).collect();
        let divided = SgpGens::new(divided).expect("approximate-root semigroup");

        let lhs = abrade(&merle_polygon(&s)).unwrap();
        let rhs = merle_polygon(&divided);
        assert_eq!(lhs, rhs, "semigroup {s}");
        checked += 1;
    }
    assert!(checked > 50);
}

fn random_special_polygon(rng: &mut ChaCha8Rng) -> Polygon {
    loop {
        let r = rng.gen_range(1..=3);
        let mut terms = Vec::with_capacity(r);
        for _ in 0..r {
            let m = rng.gen_range(1..=6i64);
            let l = rng.gen_range(1..=60i64);
            terms.push((rat(l), rat(m)));
        }
        let p = Polygon::new(terms, true, true).unwrap();
        let class = p.classify();
        if p.term_count() == r && class.special && class.integral {
            return p;
        }
    }
}

/// The reduction and abrasion characterizations accept exactly the same
/// polygons, and agree on the recovered branch data.
#[test]
fn criteria_agree_on_random_polygons() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut passes = 0;
    for _ in 0..300 {
        let p = random_special_polygon(&mut rng);
        let red = reduction_criterion(&p);
        let abr = abrasion_criterion(&p);
        assert_eq!(red.passed(), abr.passed(), "criteria disagree on {p}");
        if let (
            CriterionVerdict::Pass { characteristic: rc, semigroup: rs },
            CriterionVerdict::Pass { characteristic: ac, semigroup: asg },
        ) = (&red, &abr)
        {
            assert_eq!(rc, ac, "characteristic witnesses differ on {p}");
            assert_eq!(rs, asg, "semigroup witnesses differ on {p}");
            passes += 1;
        }
    }
    // Make sure the sample is not vacuous.
    assert!(passes > 0, "no passing polygon in the sample");
}

/// The pipeline's polygon does not depend on which accepted shear produced
/// it.
#[test]
fn shear_stability_on_small_corpus() {
    for fs in ["y^2 - x^3", "(y^2-x^3)^2-x^7", "y^3*(y-x^2) + x^11"] {
        let f = parse_poly(fs).unwrap();
        let p0 = polygon_for_shear(&f, 0).unwrap();
        let p1 = polygon_for_shear(&f, 1).unwrap();
        let p2 = polygon_for_shear(&f, 2).unwrap();
        assert_eq!(p0, p1, "{fs}: shear 1 disagrees");
        assert_eq!(p0, p2, "{fs}: shear 2 disagrees");
    }
}
