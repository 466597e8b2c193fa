use hyperfield::census::boxes::parse_height;
use hyperfield::padic::{newton_polygon, np_product_check};
use hyperfield::perm::Permutation;
use hyperfield::poly::{discriminant, factor_mod_p, factor_over_q, resultant, sylvester_resultant};
use hyperfield::{IntPolynomial, ModPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn nonzero_poly(max_deg: usize, range: i64) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-range..=range, 1..=max_deg + 1)
        .prop_map(|c| IntPolynomial::from_i64s(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn positive_degree(max_deg: usize, range: i64) -> impl Strategy<Value = IntPolynomial> {
    nonzero_poly(max_deg, range).prop_filter("degree >= 1", |p| p.degree().unwrap() >= 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn display_parses_back(p in nonzero_poly(8, 1000)) {
        let back: IntPolynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn resultant_matches_sylvester(a in positive_degree(5, 20), b in positive_degree(5, 20)) {
        prop_assert_eq!(resultant(&a, &b).unwrap(), sylvester_resultant(&a, &b).unwrap());
    }

    #[test]
    fn discriminant_is_translation_invariant(p in positive_degree(6, 20), k in -5i64..=5) {
        prop_assert_eq!(discriminant(&p), discriminant(&p.translate(&BigInt::from(k))));
    }

    #[test]
    fn factors_multiply_back(a in positive_degree(4, 9), b in positive_degree(4, 9)) {
        let p = &a * &b;
        let f = factor_over_q(&p).unwrap();
        prop_assert_eq!(f.product(), p);
        prop_assert!(!f.is_irreducible());
    }

    #[test]
    fn reduction_commutes_with_product(a in nonzero_poly(6, 50), b in nonzero_poly(6, 50), p in prop::sample::select(vec![2u64, 3, 5, 7, 101, 65537])) {
        let left = ModPoly::from_int(&(&a * &b), p);
        let right = ModPoly::from_int(&a, p).mul(&ModPoly::from_int(&b, p));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn modular_types_partition_the_degree(f in positive_degree(8, 30), p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 1_000_003])) {
        let monic = {
            let mut c = f.coeffs().to_vec();
            *c.last_mut().unwrap() = BigInt::one();
            IntPolynomial::new(c)
        };
        if let Ok(t) = factor_mod_p(&monic, p) {
            prop_assert_eq!(t.total(), monic.degree().unwrap());
        }
    }

    #[test]
    fn polygon_of_product_is_sum(a in nonzero_poly(5, 40), b in nonzero_poly(5, 40), q in prop::sample::select(vec![2u64, 3, 5])) {
        prop_assume!(!a.coeff(0).is_zero() && !b.coeff(0).is_zero());
        prop_assert_eq!(np_product_check(&a, &b, q), Ok(true));
    }

    #[test]
    fn polygon_width_is_degree(p in positive_degree(8, 200), q in prop::sample::select(vec![2u64, 3, 7])) {
        prop_assume!(!p.coeff(0).is_zero());
        let np = newton_polygon(&p, q).unwrap();
        prop_assert_eq!(np.width(), p.degree().unwrap());
    }

    #[test]
    fn permutation_inverse_and_rank(n in 1usize..=7, r in any::<u64>()) {
        let fact: u64 = (1..=n as u64).product();
        let g = Permutation::unrank(n, r % fact);
        prop_assert_eq!(g.rank(), r % fact);
        prop_assert!(g.compose(&g.inverse()).is_identity());
        let moved: usize = g.cycle_type().parts().iter().sum();
        prop_assert_eq!(moved, n);
    }

    #[test]
    fn heights_parse_exactly(num in 1i64..10_000, den in 1i64..100) {
        let want = BigRational::new(num.into(), den.into());
        prop_assert_eq!(parse_height(&format!("{num}/{den}")).unwrap(), want.clone());
        if den == 1 {
            prop_assert_eq!(parse_height(&num.to_string()).unwrap(), want);
        }
    }

    #[test]
    fn non_positive_heights_rejected(num in -1000i64..=0) {
        prop_assert!(parse_height(&num.to_string()).is_err());
    }
}

#[test]
fn square_has_zero_discriminant() {
    let p = IntPolynomial::from_i64s(&[1, 2, 1]);
    assert!(discriminant(&p).is_zero());
}
