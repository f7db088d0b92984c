use mincone::classify::{congruence_class_count, delta, hurwitz_radon, is_realizable};
use mincone::clifford::{
    conjugate_system, direct_sum, hr_family, irreducible_system, rational_orthogonal, system_invariants, verify_system,
    CliffordSystem,
};
use mincone::cones::{clifford_polynomial, det_weight_formula, determinant_cone};
use mincone::diffgeom::{gradient_norm_sq, verify_eigenfunction};
use mincone::hypercomplex::CdElement;
use mincone::{Accumulator, Coefficient, Field, Matrix, Monomial, Poly, Polynomial};

type PolyMatrix = Vec<Vec<Poly>>;

fn symbolic_a_z(s: &CliffordSystem, n: usize, offset: usize) -> PolyMatrix {
    let size = 2 * s.m;
    (0..size)
        .map(|r| {
            (0..size)
                .map(|c| {
                    let mut acc = Accumulator::new(n);
                    for (i, a) in s.matrices.iter().enumerate() {
                        acc.add_term(Monomial::var(offset + i), a.get(r, c).clone());
                    }
                    acc.finish()
                })
                .collect()
        })
        .collect()
}

fn product(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a[0][0].nvars();
    (0..a.len())
        .map(|r| {
            (0..b[0].len())
                .map(|c| {
                    let mut acc = Accumulator::new(n);
                    for k in 0..b.len() {
                        acc.add_product(&a[r][k], &b[k][c], &Coefficient::from(1));
                    }
                    acc.finish()
                })
                .collect()
        })
        .collect()
}

#[test]
fn polarized_relations_and_cube() {
    for q in 1..=5 {
        let s = irreducible_system(q).unwrap();
        let k = q + 1;
        let n = 2 * k;
        let a1 = symbolic_a_z(&s, n, 0);
        let a2 = symbolic_a_z(&s, n, k);
        let mut inner = Accumulator::new(n);
        for i in 0..k {
            inner.add_term(Monomial::var(i).mul(&Monomial::var(k + i)), Coefficient::from(2));
        }
        let two_inner = inner.finish();
        let (p12, p21) = (product(&a1, &a2), product(&a2, &a1));
        let size = 2 * s.m;
        for r in 0..size {
            for c in 0..size {
                let expected = if r == c { two_inner.clone() } else { Polynomial::zero(n) };
                assert_eq!(&p12[r][c] + &p21[r][c], expected, "q={q} entry ({r},{c})");
            }
        }
        let norm: Poly = Polynomial::sum_of_squares(n, 0..k);
        let cube = product(&product(&a1, &a1), &a1);
        for r in 0..size {
            for c in 0..size {
                assert_eq!(cube[r][c], &norm * &a1[r][c]);
            }
        }
    }
}

#[test]
fn hr_dimensions_follow_delta() {
    for k in 0..=10 {
        let f = hr_family(k).unwrap();
        assert_eq!(f.dim as u64, delta(k as u64 + 1), "k={k}");
        assert_eq!(f.matrices.len(), k);
        f.check().unwrap();
    }
}

#[test]
fn radon_duality() {
    for q in 1..=12u64 {
        for m in 1..=256u64 {
            assert_eq!(q <= hurwitz_radon(m), m % delta(q) == 0, "q={q} m={m}");
        }
    }
    // Constructibility for small cases.
    for q in 1..=8usize {
        for m in 1..=16usize {
            let h = delta(q as u64) as usize;
            if m % h == 0 {
                let s = direct_sum(q, m / h, 0).unwrap();
                assert!(verify_system(&s).passed);
                assert_eq!(s.m, m);
            }
        }
    }
}

#[test]
fn radon_periodicity() {
    for m in 1..=64u64 {
        assert_eq!(hurwitz_radon(16 * m), hurwitz_radon(m) + 8);
        let odd_part = m >> m.trailing_zeros();
        assert_eq!(hurwitz_radon(m), hurwitz_radon(m / odd_part));
    }
}

#[test]
fn realizability_outside_the_exceptional_sequence() {
    for n in 4..=4096u64 {
        if n % 16 != 1 && n != 5 && n != 9 {
            assert!(is_realizable(n).unwrap(), "n={n}");
        }
        if is_realizable(n).unwrap() {
            assert!(congruence_class_count(n).unwrap().class_count >= 1);
        }
    }
}

#[test]
fn clifford_gradient_norm() {
    for (q, kp, km) in [(1, 1, 0), (2, 1, 0), (3, 1, 0), (4, 1, 1), (1, 3, 0)] {
        let s = direct_sum(q, kp, km).unwrap();
        let phi = clifford_polynomial(&s);
        let n = phi.nvars();
        let size = 2 * s.m;
        let y2: Poly = Polynomial::sum_of_squares(n, 0..size);
        let z2: Poly = Polynomial::sum_of_squares(n, size..n);
        let mut rhs = (&y2 * &z2).scale(&Coefficient::from(4));
        for a in &s.matrices {
            let mut acc = Accumulator::new(n);
            for r in 0..size {
                for c in 0..size {
                    acc.add_term(Monomial::var(r).mul(&Monomial::var(c)), a.get(r, c).clone());
                }
            }
            rhs = &rhs + &acc.finish().square();
        }
        assert_eq!(gradient_norm_sq(&phi), rhs, "q={q}");
    }
}

#[test]
fn conjugation_preserves_validity() {
    for (s, seed) in [(irreducible_system(4).unwrap(), 1), (direct_sum(4, 1, 1).unwrap(), 2), (direct_sum(1, 3, 0).unwrap(), 3)] {
        let a = rational_orthogonal::<Coefficient>(seed, 2 * s.m);
        let d = rational_orthogonal::<Coefficient>(seed + 10, s.q + 1);
        let b = conjugate_system(&s, &a, &d).unwrap();
        assert!(verify_system(&b).passed);
        assert_eq!(system_invariants(&b), system_invariants(&s));
        let moved = clifford_polynomial(&b).substitute_linear(&Matrix::block_diag(&[a, d])).unwrap();
        assert_eq!(moved, clifford_polynomial(&s));
    }
}

#[test]
fn pythagorean_rotation_of_the_generators() {
    let s = irreducible_system(2).unwrap();
    let c = Coefficient::from_ratio;
    let mut d = Matrix::identity(3);
    d.set(0, 0, c(3, 5));
    d.set(0, 1, c(-4, 5));
    d.set(1, 0, c(4, 5));
    d.set(1, 1, c(3, 5));
    let b = conjugate_system(&s, &Matrix::identity(4), &d).unwrap();
    assert!(verify_system(&b).passed);
    let moved = clifford_polynomial(&b).substitute_linear(&Matrix::block_diag(&[Matrix::identity(4), d])).unwrap();
    assert_eq!(moved, clifford_polynomial(&s));
}

#[test]
fn conjugate_and_alternative_laws() {
    for d in [1, 2, 4, 8] {
        let n = 2 * d;
        let x = CdElement::<Coefficient>::symbolic(n, 0, d).unwrap();
        let y = CdElement::<Coefficient>::symbolic(n, d, d).unwrap();
        let xx = x.multiply(&x.conjugate()).unwrap();
        assert_eq!(xx.real(), &x.norm());
        assert!(xx.components()[1..].iter().all(Polynomial::is_zero));
        let left = x.multiply(&x).unwrap().multiply(&y).unwrap();
        let right = x.multiply(&x.multiply(&y).unwrap()).unwrap();
        assert_eq!(left, right, "d={d}");
    }
}

#[test]
fn determinant_cones_are_multilinear() {
    for m in 2..=5 {
        let psi = determinant_cone(m).unwrap().polynomial;
        assert!((0..m * m).all(|i| psi.degree_in(i) <= 1));
        assert_eq!(verify_eigenfunction(&psi).weight.unwrap(), det_weight_formula(m).unwrap());
    }
}
