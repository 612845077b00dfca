use proptest::prelude::*;
use realroots::poly::{factorial, format_rational, int, parse_rational, rat};
use realroots::{Degree, Polynomial, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Polynomial::from_coeffs)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// Naive coefficient convolution.
fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![int(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn text_form_is_lowest_degree_first() {
    let p: Polynomial = "0 1 1".parse().unwrap();
    assert_eq!(p, Polynomial::from_ints(&[0, 1, 1]));
    assert_eq!(p.degree(), Degree::Finite(2));
    assert_eq!(p.to_text(), "0 1 1");
    let q: Polynomial = "1/2 -3/4".parse().unwrap();
    assert_eq!(q.coeffs(), &[rat(1, 2), rat(-3, 4)]);
}

#[test]
fn zero_polynomial_has_negative_infinite_degree() {
    let z: Polynomial = "0 0".parse().unwrap();
    assert!(z.is_zero());
    assert_eq!(z.degree(), Degree::NegInfinity);
    assert_eq!(
        serde_json::to_string(&Degree::NegInfinity).unwrap(),
        "\"-inf\""
    );
}

#[test]
fn malformed_text_is_rejected() {
    for bad in ["1 x", "1/0", "1/2/3"] {
        assert!(bad.parse::<Polynomial>().is_err(), "{bad:?}");
    }
    assert!(parse_rational("3/0").is_err());
    assert!(Polynomial::parse_any("[\"1\", 2]").is_err());
}

#[test]
fn squarefree_decomposition_of_known_product() {
    // (x-1)^3 (x+2)
    let f = Polynomial::from_roots(int(1), &[int(1), int(1), int(1), int(-2)]);
    let parts = f.squarefree_decomposition();
    let mults: Vec<usize> = parts.iter().map(|(_, m)| *m).collect();
    assert_eq!(mults, vec![1, 3]);
    assert_eq!(parts[0].0.monic(), Polynomial::from_ints(&[2, 1]));
    assert_eq!(parts[1].0.monic(), Polynomial::from_ints(&[-1, 1]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_and_json_round_trip(p in poly(8)) {
        prop_assert_eq!(p.to_text().parse::<Polynomial>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(Polynomial::from_json(&json).unwrap(), p.clone());
        prop_assert_eq!(Polynomial::parse_any(&json).unwrap(), p);
    }

    #[test]
    fn rational_text_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn multiplication_matches_convolution(a in poly(6), b in poly(6)) {
        let expected = Polynomial::from_coeffs(convolve(a.coeffs(), b.coeffs()));
        prop_assert_eq!(&a * &b, expected);
    }

    #[test]
    fn ring_laws(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(5), b in poly(5), x in rational()) {
        prop_assert_eq!((&a * &b).evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
        prop_assert_eq!((&a + &b).evaluate(&x), a.evaluate(&x) + b.evaluate(&x));
    }

    #[test]
    fn derivative_rules(a in poly(6), b in poly(6), n in 0usize..4) {
        let lhs = (&a * &b).derivative(1);
        let rhs = &(&a.derivative(1) * &b) + &(&a * &b.derivative(1));
        prop_assert_eq!(lhs, rhs);
        // coefficient of x^k in a^(n) is (k+n)!/k! a_{k+n}
        let d = a.derivative(n);
        for k in 0..a.coeffs().len().saturating_sub(n) {
            let expected = factorial(k + n) / factorial(k) * a.coeff(k + n);
            prop_assert_eq!(d.coeff(k), expected);
        }
    }

    #[test]
    fn translation_is_composition(a in poly(6), z in rational(), x in rational()) {
        prop_assert_eq!(a.translate(&z).evaluate(&x), a.evaluate(&(&x + &z)));
    }

    #[test]
    fn division_identity(a in poly(7), b in nonzero_poly(4)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn gcd_divides_and_absorbs(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let f = &a * &c;
        let g = &b * &c;
        let h = f.gcd(&g);
        prop_assert!(h.divides(&f));
        prop_assert!(h.divides(&g));
        prop_assert!(c.divides(&h));
    }

    #[test]
    fn squarefree_decomposition_reassembles(
        roots in prop::collection::vec((-4i64..=4, 1usize..=3), 1..=4),
        lead in 1i64..=5,
    ) {
        let mut all = Vec::new();
        for (r, m) in &roots {
            all.extend(std::iter::repeat_n(int(*r), *m));
        }
        let f = Polynomial::from_roots(int(lead), &all);
        let product = f
            .squarefree_decomposition()
            .into_iter()
            .fold(Polynomial::one(), |acc, (p, m)| &acc * &p.pow(m));
        prop_assert_eq!(product.monic(), f.monic());
        let sf = f.squarefree_part();
        prop_assert!(sf.gcd(&sf.derivative(1)).is_constant());
    }
}
