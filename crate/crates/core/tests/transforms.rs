use proptest::prelude::*;
use realroots::interlacing::{chain_check, interlaces};
use realroots::poly::{factorial, int, rat};
use realroots::posets::{e_inverse, e_operator};
use realroots::rootedness::{is_real_rooted, roots_in_interval, Rootedness};
use realroots::transforms::{
    alt_diamond, aplus_check_diamond, d_phi_diamond, diamond, diamond_derivative_chain, h_xi,
    hermite_poulain, laguerre_transform, lphi_diamond, schur_product,
};
use realroots::{Degree, Polynomial, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Polynomial::from_coeffs)
}

/// Roots in `[-1, 0]` on a grid of eighths.
fn unit_roots(min: usize, max: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((0i64..=8).prop_map(|n| rat(-n, 8)), min..=max)
}

/// Distinct roots strictly inside `(-1, 0)`.
fn open_unit_simple(min: usize, max: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set(1i64..=15, min..=max)
        .prop_map(|s| s.into_iter().map(|n| rat(-n, 16)).collect())
}

fn from_roots(roots: &[Rational]) -> Polynomial {
    Polynomial::from_roots(int(1), roots)
}

fn stirling2(n: usize, k: usize) -> Rational {
    let mut table = vec![vec![int(0); n + 1]; n + 1];
    table[0][0] = int(1);
    for i in 1..=n {
        for j in 1..=i {
            table[i][j] = &table[i - 1][j - 1] + int(j as i64) * &table[i - 1][j];
        }
    }
    table[n][k].clone()
}

/// `ℰ(x^n) = Σ_k S(n,k) k! x^k`, extended linearly.
fn e_oracle(f: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (n, a) in f.coeffs().iter().enumerate() {
        for k in 0..=n {
            let c = a * stirling2(n, k) * factorial(k);
            acc = &acc + &Polynomial::monomial(c, k);
        }
    }
    acc
}

#[test]
fn small_products_by_hand() {
    let x = Polynomial::x();
    // x ◇ x = x^2 + x(x+1)
    assert_eq!(diamond(&x, &x), Polynomial::from_ints(&[0, 1, 2]));
    // (1 + x) ⊙ (2 + 3x) = 2 + 3x
    let f = Polynomial::from_ints(&[1, 1]);
    let g = Polynomial::from_ints(&[2, 3]);
    assert_eq!(schur_product(&f, &g), Polynomial::from_ints(&[2, 3]));
    // x^2 ⊙ x^2 = 2x^2
    let sq = Polynomial::from_ints(&[0, 0, 1]);
    assert_eq!(schur_product(&sq, &sq), Polynomial::from_ints(&[0, 0, 2]));
    // D^2 applied to x^3 is 6x
    let cube = Polynomial::from_ints(&[0, 0, 0, 1]);
    assert_eq!(hermite_poulain(&sq, &cube), Polynomial::from_ints(&[0, 6]));
    assert_eq!(
        laguerre_transform(&cube),
        Polynomial::monomial(rat(1, 6), 3)
    );
    // x^2 ◇ x^2 with a single factorial: x^4 + 4x^3(x+1) + 2x^2(x+1)^2
    assert_eq!(
        alt_diamond(&sq, &sq),
        Polynomial::from_ints(&[0, 0, 2, 8, 7])
    );
}

#[test]
fn e_operator_on_binomial_basis() {
    // ℰ takes C(x,2) = (x^2 - x)/2 to x^2
    let c2 = Polynomial::from_coeffs(vec![int(0), rat(-1, 2), rat(1, 2)]);
    assert_eq!(e_operator(&c2), Polynomial::from_ints(&[0, 0, 1]));
    assert_eq!(e_inverse(&Polynomial::from_ints(&[0, 0, 1])), c2);
}

#[test]
fn membership_report_for_a_simple_case() {
    let h = from_roots(&[rat(-1, 2)]);
    let f = from_roots(&[rat(-1, 3), rat(-2, 3)]);
    let report = aplus_check_diamond(&f, &h, &[rat(1, 2), int(-3)]).unwrap();
    assert_eq!(report.d, Degree::Finite(2));
    assert!(report.member, "{report:?}");
    assert!(aplus_check_diamond(&f, &Polynomial::from_ints(&[1, 0, 1]), &[]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn e_operator_matches_stirling_oracle(f in poly(7)) {
        prop_assert_eq!(e_operator(&f), e_oracle(&f));
        prop_assert_eq!(e_operator(&e_inverse(&f)), f.clone());
        prop_assert_eq!(e_inverse(&e_operator(&f)), f);
    }

    #[test]
    fn diamond_is_e_conjugated_product(f in poly(6), g in poly(6)) {
        let expected = e_oracle(&(&e_inverse(&f) * &e_inverse(&g)));
        prop_assert_eq!(diamond(&f, &g), expected);
    }

    #[test]
    fn products_are_bilinear_and_symmetric(f in poly(5), g in poly(5), k in poly(5), c in rational()) {
        for op in [diamond, alt_diamond, schur_product] {
            prop_assert_eq!(op(&f, &g), op(&g, &f));
            let lhs = op(&(&f + &k.scale(&c)), &g);
            let rhs = &op(&f, &g) + &op(&k, &g).scale(&c);
            prop_assert_eq!(lhs, rhs);
        }
        prop_assert_eq!(diamond(&Polynomial::one(), &g), g.clone());
    }

    #[test]
    fn schur_product_of_coefficients(f in poly(6), g in poly(6)) {
        let p = schur_product(&f, &g);
        for k in 0..7 {
            prop_assert_eq!(p.coeff(k), factorial(k) * f.coeff(k) * g.coeff(k));
        }
    }

    #[test]
    fn diamond_closure_on_unit_interval(a in unit_roots(1, 5), b in unit_roots(1, 5)) {
        let (f, h) = (from_roots(&a), from_roots(&b));
        for p in [diamond(&f, &h), alt_diamond(&f, &h)] {
            prop_assert!(roots_in_interval(&p, &int(-1), &int(0), true).unwrap());
        }
    }

    #[test]
    fn diamond_preserves_interlacing(a in open_unit_simple(2, 5), b in unit_roots(1, 4)) {
        let f = from_roots(&a);
        let g = f.derivative(1);
        let h = from_roots(&b);
        prop_assert!(interlaces(&diamond(&g, &h), &diamond(&f, &h), false).unwrap());
    }

    #[test]
    fn derivative_chain_is_strict(a in open_unit_simple(1, 5), b in open_unit_simple(1, 4)) {
        let (f, h) = (from_roots(&a), from_roots(&b));
        prop_assert_eq!(d_phi_diamond(&f, &h), Degree::Finite(a.len()));
        prop_assert!(chain_check(&diamond_derivative_chain(&f, &h)).unwrap());
        let report = aplus_check_diamond(&f, &h, &[rat(1, 3), int(2)]).unwrap();
        prop_assert!(report.member, "{:?}", report);
    }

    #[test]
    fn lphi_equals_hermite_poulain_of_h_xi(f in poly(6), b in unit_roots(0, 4), xi in rational()) {
        let h = from_roots(&b);
        let lhs = lphi_diamond(&f, &h, &xi);
        let rhs = hermite_poulain(&h_xi(&h, &xi), &f.translate(&xi));
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs.derivative(1), lphi_diamond(&f.derivative(1), &h, &xi));
    }

    #[test]
    fn hermite_poulain_keeps_real_roots(a in prop::collection::vec(rational(), 1..=4), g_roots in prop::collection::vec(rational(), 1..=5)) {
        let f = from_roots(&a);
        let g = from_roots(&g_roots);
        let p = hermite_poulain(&f, &g);
        prop_assume!(!p.is_zero());
        prop_assert!(is_real_rooted(&p).unwrap().is_real());
    }

    #[test]
    fn laguerre_keeps_real_roots(a in prop::collection::vec(rational(), 1..=6)) {
        let f = from_roots(&a);
        prop_assert!(is_real_rooted(&laguerre_transform(&f)).unwrap() != Rootedness::NotRealRooted);
    }
}
