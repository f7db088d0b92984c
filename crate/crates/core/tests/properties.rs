use mincone::clifford::{givens_orthogonal, irreducible_system, rational_orthogonal};
use mincone::cones::{clifford_polynomial, quadric_cone, reducible_example};
use mincone::diffgeom::{mean_curvature_operator, tau_invariant, verify_eigenfunction};
use mincone::text::parse_poly_in;
use mincone::{Coefficient, Field, Matrix, Monomial, Poly, Polynomial, Radical};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

const NVARS: usize = 3;

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn coefficient() -> impl Strategy<Value = Coefficient> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| Coefficient::new(a, b, c, d))
}

fn sparse_coefficient() -> impl Strategy<Value = Coefficient> {
    (rational(), 0usize..4).prop_map(|(q, r)| Coefficient::with_radical(q, Radical::ALL[r]))
}

fn poly(max_terms: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, NVARS), sparse_coefficient()), 0..=max_terms).prop_map(
        |terms| {
            Polynomial::from_terms(
                NVARS,
                terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e).unwrap(), c)),
            )
        },
    )
}

fn int_matrix() -> impl Strategy<Value = Matrix<Coefficient>> {
    prop::collection::vec(-2i64..=2, NVARS * NVARS)
        .prop_map(|v| Matrix::from_vec(NVARS, NVARS, v.into_iter().map(Coefficient::from).collect()))
}

fn point() -> impl Strategy<Value = Vec<Coefficient>> {
    prop::collection::vec(rational().prop_map(Coefficient::from), NVARS)
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn ring_laws(f in poly(4, 2), g in poly(4, 2), h in poly(4, 2)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(NVARS), f.clone());
    }

    #[test]
    fn divide_round_trip(f in poly(4, 3), g in poly(4, 3), h in poly(3, 2)) {
        prop_assume!(!f.is_zero());
        let fg = &f * &g;
        prop_assert_eq!(fg.exact_divide(&f).unwrap(), g);
        let other = &fg + &h;
        if let Ok(q) = other.exact_divide(&f) {
            prop_assert_eq!(&q * &f, other);
        }
    }

    #[test]
    fn sqrt_of_square(f in poly(4, 3)) {
        let sq = f.square();
        let root = sq.sqrt().unwrap();
        prop_assert_eq!(root.square(), sq);
        prop_assert!(root == f || root == -&f);
    }

    #[test]
    fn substitution_composes(f in poly(4, 3), a in int_matrix(), b in int_matrix()) {
        let stepwise = f.substitute_linear(&a).unwrap().substitute_linear(&b).unwrap();
        prop_assert_eq!(stepwise, f.substitute_linear(&a.matmul(&b)).unwrap());
    }

    #[test]
    fn substitution_matches_evaluation(f in poly(4, 3), m in int_matrix(), p in point()) {
        let lhs = f.substitute_linear(&m).unwrap().evaluate(&p).unwrap();
        prop_assert_eq!(lhs, f.evaluate(&m.apply(&p)).unwrap());
    }

    #[test]
    fn text_round_trip(f in poly(5, 4)) {
        prop_assert_eq!(parse_poly_in::<Coefficient>(&f.to_string(), NVARS).unwrap(), f);
    }

    #[test]
    fn euler_identity(f in poly(4, 3)) {
        let deg = f.degree().unwrap_or(0);
        let homogeneous = Polynomial::from_terms(
            NVARS,
            f.terms().iter().filter(|(m, _)| m.degree() == deg).cloned(),
        );
        prop_assert_eq!(homogeneous.euler_operator(), homogeneous.scale(&Coefficient::from(deg as i64)));
    }

    #[test]
    fn operator_scaling(f in poly(3, 3), a in rational()) {
        prop_assume!(!a.is_zero());
        let a = Coefficient::from(a);
        let a3 = a.mul_ref(&a).mul_ref(&a);
        prop_assert_eq!(mean_curvature_operator(&f.scale(&a)), mean_curvature_operator(&f).scale(&a3));
    }
}

proptest! {
    #![proptest_config(config(10_000))]

    #[test]
    fn coefficient_inverse(c in coefficient()) {
        prop_assume!(!c.is_zero());
        prop_assert!((c.mul_ref(&c.inverse().unwrap())).is_one());
    }
}

fn pool() -> Vec<Poly> {
    vec![
        clifford_polynomial(&irreducible_system(1).unwrap()),
        quadric_cone(2, 2).unwrap().polynomial,
        parse_poly_in("x1^3 + x2*x3*x4", 4).unwrap(),
        reducible_example().polynomial,
    ]
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn orthogonal_invariance(k in 0usize..4, seed in any::<u64>(), cayley in any::<bool>()) {
        let pool = pool();
        let f = &pool[k];
        let n = f.nvars();
        let u: Matrix<Coefficient> = if cayley && n <= 4 { rational_orthogonal(seed, n) } else { givens_orthogonal(seed, n) };
        let g = f.substitute_linear(&u).unwrap();
        let (r, r0) = (verify_eigenfunction(&g), verify_eigenfunction(f));
        prop_assert_eq!(r.is_eigenfunction, r0.is_eigenfunction);
        if let (Some(w), Some(w0)) = (&r.weight, &r0.weight) {
            prop_assert_eq!(&w0.substitute_linear(&u).unwrap(), w);
        }
        prop_assert_eq!(tau_invariant(&g), tau_invariant(f));
    }
}

#[test]
fn weight_and_tau_scale() {
    let f = clifford_polynomial(&irreducible_system(2).unwrap());
    let a = Coefficient::from_ratio(-5, 3);
    let r = verify_eigenfunction(&f.scale(&a));
    let r0 = verify_eigenfunction(&f);
    let a2 = a.mul_ref(&a);
    assert_eq!(r.weight.unwrap(), r0.weight.unwrap().scale(&a2));
    assert_eq!(r.radial_constant.unwrap(), r0.radial_constant.unwrap().mul_ref(&a2));
    assert_eq!(r.tau, r0.tau);
}
