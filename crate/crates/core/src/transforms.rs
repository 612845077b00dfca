//! Linear transforms and products that preserve real-rootedness.
//!
//! The operator framework is only instantiated for `φ(p) = p ◇ h`; see
//! [`aplus_check_diamond`].

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interlacing::interlaces;
use crate::poly::{factorial, rational_string, Degree, Polynomial, Rational};
use crate::rootedness::{is_real_rooted, isolate_roots, roots_in_interval, Rootedness};

/// `x^n (x+1)^n`.
fn x_xp1_pow(n: usize) -> Polynomial {
    Polynomial::from_ints(&[0, 1, 1]).pow(n)
}

/// Schur–Hadamard product `Σ k! a_k b_k x^k`.
pub fn schur_product(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let n = f.coeffs().len().min(g.coeffs().len());
    Polynomial::from_coeffs(
        (0..n)
            .map(|k| factorial(k) * &f.coeffs()[k] * &g.coeffs()[k])
            .collect(),
    )
}

/// `Σ_n (f^(n)/n!) (g^(n)/n!) x^n (x+1)^n`.
pub fn diamond(f: &Polynomial, g: &Polynomial) -> Polynomial {
    product_sum(f, g, |n| {
        let nf = factorial(n);
        &nf * &nf
    })
}

/// `Σ_n f^(n) g^(n) / n! · x^n (x+1)^n`: the diamond product with a single
/// factorial in the denominator.
pub fn alt_diamond(f: &Polynomial, g: &Polynomial) -> Polynomial {
    product_sum(f, g, factorial)
}

fn product_sum(
    f: &Polynomial,
    g: &Polynomial,
    denominator: impl Fn(usize) -> Rational,
) -> Polynomial {
    let (Some(df), Some(dg)) = (f.deg(), g.deg()) else {
        return Polynomial::zero();
    };
    let mut acc = Polynomial::zero();
    for n in 0..=df.min(dg) {
        let term = &f.derivative(n) * &g.derivative(n);
        let term = term.scale(&denominator(n).recip());
        acc = &acc + &(&term * &x_xp1_pow(n));
    }
    acc
}

/// `f(d/dx) g = Σ a_k g^(k)`.
pub fn hermite_poulain(f: &Polynomial, g: &Polynomial) -> Polynomial {
    f.coeffs()
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (k, a)| {
            &acc + &g.derivative(k).scale(a)
        })
}

/// `Σ a_k / k! · x^k`.
pub fn laguerre_transform(f: &Polynomial) -> Polynomial {
    Polynomial::from_coeffs(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| a / factorial(k))
            .collect(),
    )
}

/// `H_ξ(x) = Σ_n h^(n)(ξ) / (n!)^2 · (ξ(ξ+1) x)^n`.
pub fn h_xi(h: &Polynomial, xi: &Rational) -> Polynomial {
    let Some(d) = h.deg() else {
        return Polynomial::zero();
    };
    let t = xi * (xi + Rational::one());
    let mut t_pow = Rational::one();
    let mut coeffs = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let nf = factorial(n);
        coeffs.push(h.derivative(n).evaluate(xi) / (&nf * &nf) * &t_pow);
        t_pow *= &t;
    }
    Polynomial::from_coeffs(coeffs)
}

/// `L_φ(f)(ξ, z) = Σ_n φ(f^(n))(ξ) z^n / n!` for `φ = · ◇ h`, as a polynomial
/// in `z`.
pub fn lphi_diamond(f: &Polynomial, h: &Polynomial, xi: &Rational) -> Polynomial {
    let Some(d) = f.deg() else {
        return Polynomial::zero();
    };
    Polynomial::from_coeffs(
        (0..=d)
            .map(|n| diamond(&f.derivative(n), h).evaluate(xi) / factorial(n))
            .collect(),
    )
}

/// `d_φ(f)` for `φ = · ◇ h`: the largest `n` with `φ(f^(n)) ≠ 0`.
pub fn d_phi_diamond(f: &Polynomial, h: &Polynomial) -> Degree {
    let Some(d) = f.deg() else {
        return Degree::NegInfinity;
    };
    (0..=d)
        .rev()
        .find(|&n| !diamond(&f.derivative(n), h).is_zero())
        .map_or(Degree::NegInfinity, Degree::Finite)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiSample {
    #[serde(with = "rational_string")]
    pub xi: Rational,
    pub real_rooted: bool,
}

/// Condition-by-condition membership report for `f ∈ 𝒜⁺(· ◇ h)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AplusReport {
    pub d: Degree,
    /// `φ(f^(i))` for `i = 0..=d`.
    pub images: Vec<Polynomial>,
    /// Only set when `d = 0`: `φ(f)` is standard, real- and simple-rooted.
    pub constant_case: Option<bool>,
    /// Standard images with degrees dropping by one.
    pub condition_i: Option<bool>,
    /// `φ(f)` and `φ(f')` share no real zero.
    pub condition_ii: Option<bool>,
    /// `φ(f^(d)) ≺ φ(f^(d-1))`.
    pub condition_iii: Option<bool>,
    /// Real-rootedness of `L_φ(f)(ξ, ·)` at every probed `ξ`; a probe only,
    /// since the condition quantifies over all real `ξ`.
    pub condition_iv: Vec<XiSample>,
    pub member: bool,
}

/// Checks the membership conditions of `f` in `𝒜⁺(φ)` for `φ(p) = p ◇ h`.
///
/// `h` must be standard, simple-rooted with all roots in `(-1, 0)`.
/// Condition (iv) is probed at `xi_samples`, at a point of every isolating
/// location of the roots of `h`, and at `-1` and `0`.
pub fn aplus_check_diamond(
    f: &Polynomial,
    h: &Polynomial,
    xi_samples: &[Rational],
) -> Result<AplusReport> {
    check_h(h)?;
    let d = d_phi_diamond(f, h);
    let mut report = AplusReport {
        d,
        images: Vec::new(),
        constant_case: None,
        condition_i: None,
        condition_ii: None,
        condition_iii: None,
        condition_iv: Vec::new(),
        member: false,
    };
    let d = match d {
        Degree::NegInfinity => {
            report.member = true;
            return Ok(report);
        }
        Degree::Finite(d) => d,
    };
    report.images = (0..=d).map(|n| diamond(&f.derivative(n), h)).collect();
    let images = &report.images;
    if d == 0 {
        let ok = images[0].is_standard() && is_real_rooted(&images[0])? == Rootedness::RealSimple;
        report.constant_case = Some(ok);
        report.member = ok;
        return Ok(report);
    }

    let cond_i = images.iter().all(Polynomial::is_standard)
        && (1..=d).all(|i| images[i - 1].deg() == images[i].deg().map(|k| k + 1));
    let common = images[0].gcd(&images[1]);
    let cond_ii = common.is_constant() || isolate_roots(&common)?.roots.is_empty();
    let cond_iii = interlaces(&images[d], &images[d - 1], true)?;

    let mut xis: Vec<Rational> = xi_samples.to_vec();
    xis.extend(isolate_roots(h)?.roots.iter().map(|r| r.location.sample()));
    xis.push(-Rational::one());
    xis.push(Rational::zero());
    xis.sort();
    xis.dedup();
    for xi in xis {
        let l = lphi_diamond(f, h, &xi);
        // the zero polynomial counts as real-rooted
        let real_rooted = l.is_zero() || is_real_rooted(&l)?.is_real();
        report.condition_iv.push(XiSample { xi, real_rooted });
    }

    report.condition_i = Some(cond_i);
    report.condition_ii = Some(cond_ii);
    report.condition_iii = Some(cond_iii);
    report.member =
        cond_i && cond_ii && cond_iii && report.condition_iv.iter().all(|s| s.real_rooted);
    Ok(report)
}

fn check_h(h: &Polynomial) -> Result<()> {
    if !h.is_standard() {
        return Err(Error::PreconditionFailed(format!(
            "h = {} is not standard",
            h.pretty()
        )));
    }
    if h.is_constant() {
        return Ok(());
    }
    let lo = -Rational::one();
    let hi = Rational::zero();
    if is_real_rooted(h)? != Rootedness::RealSimple || !roots_in_interval(h, &lo, &hi, false)? {
        return Err(Error::PreconditionFailed(format!(
            "h = {} is not simple-rooted in (-1, 0)",
            h.pretty()
        )));
    }
    Ok(())
}

/// The chain `φ(f^(d)), ..., φ(f'), φ(f)` for `φ = · ◇ h`.
pub fn diamond_derivative_chain(f: &Polynomial, h: &Polynomial) -> Vec<Polynomial> {
    let Some(d) = f.deg() else {
        return Vec::new();
    };
    (0..=d)
        .rev()
        .map(|n| diamond(&f.derivative(n), h))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_product(&p("1 2 1"), &p("1 2 1")), p("1 4 2"));
        assert_eq!(schur_product(&p("3 2 1"), &p("1")), p("3"));
        assert_eq!(schur_product(&p("1 1"), &p("1 1")), p("1 1"));
    }

    #[test]
    fn diamond_examples() {
        assert_eq!(diamond(&p("0 1"), &p("0 1")), p("0 1 2"));
        assert_eq!(diamond(&p("1 1"), &p("0 1")), p("0 2 2"));
        assert_eq!(diamond(&p("4 -1 3"), &p("1")), p("4 -1 3"));
        assert_eq!(diamond(&Polynomial::zero(), &p("1 1")), Polynomial::zero());
    }

    #[test]
    fn alt_diamond_examples() {
        assert_eq!(alt_diamond(&p("0 1"), &p("0 1")), p("0 1 2"));
        assert_eq!(alt_diamond(&p("0 0 1"), &p("0 0 1")), p("0 0 2 8 7"));
        assert_eq!(alt_diamond(&p("4 -1 3"), &p("1")), p("4 -1 3"));
    }

    #[test]
    fn hermite_poulain_examples() {
        assert_eq!(hermite_poulain(&p("1 1"), &p("0 0 1")), p("0 2 1"));
        assert_eq!(hermite_poulain(&p("1"), &p("5 0 -2 1")), p("5 0 -2 1"));
        assert_eq!(hermite_poulain(&p("0 1"), &p("0 0 1")), p("0 2"));
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre_transform(&p("1 2 1")), p("1 2 1/2"));
        assert_eq!(laguerre_transform(&p("-7")), p("-7"));
        assert_eq!(laguerre_transform(&p("0 0 0 1")), p("0 0 0 1/6"));
    }

    #[test]
    fn h_xi_examples() {
        assert_eq!(h_xi(&p("1 1"), &rat(-1, 2)), p("1/2 -1/4"));
        let h = p("2 3 1");
        assert_eq!(h_xi(&h, &int(0)), p("2"));
        assert_eq!(h_xi(&h, &int(-1)), p("0"));
        assert_eq!(h_xi(&p("5 1"), &int(-1)), p("4"));
    }

    #[test]
    fn lphi_examples() {
        assert_eq!(lphi_diamond(&p("0 1"), &p("1"), &rat(3, 2)), p("3/2 1"));
        assert_eq!(
            lphi_diamond(&p("0 1"), &p("0 1"), &int(0)),
            Polynomial::zero()
        );
    }

    #[test]
    fn d_phi_examples() {
        assert_eq!(
            d_phi_diamond(&Polynomial::zero(), &p("1 1")),
            Degree::NegInfinity
        );
        assert_eq!(d_phi_diamond(&p("0 0 1"), &p("1 1")), Degree::Finite(2));
        assert_eq!(d_phi_diamond(&p("5"), &p("0 1")), Degree::Finite(0));
        assert_eq!(
            d_phi_diamond(&p("1 1"), &Polynomial::zero()),
            Degree::NegInfinity
        );
    }

    #[test]
    fn aplus_simple_rooted_member() {
        let f = p("6 5 1");
        let h = p("1/2 1");
        let xis = [int(-2), rat(-1, 2), int(0), int(1)];
        let r = aplus_check_diamond(&f, &h, &xis).unwrap();
        assert_eq!(r.d, Degree::Finite(2));
        assert_eq!(r.condition_i, Some(true));
        assert_eq!(r.condition_ii, Some(true));
        assert_eq!(r.condition_iii, Some(true));
        assert!(r.condition_iv.iter().all(|s| s.real_rooted));
        assert!(r.condition_iv.len() >= 5);
        assert!(r.member);
    }

    #[test]
    fn aplus_descriptive_cases() {
        let h = p("1/2 1");
        // double root: report is computed, no membership claim is asserted
        let r = aplus_check_diamond(&p("1 2 1"), &h, &[]).unwrap();
        assert_eq!(r.d, Degree::Finite(2));
        assert!(r.condition_i.is_some() && r.condition_ii.is_some());

        let r = aplus_check_diamond(&p("3"), &h, &[]).unwrap();
        assert_eq!(r.d, Degree::Finite(0));
        assert_eq!(r.constant_case, Some(true));
        assert!(r.member);

        let r = aplus_check_diamond(&Polynomial::zero(), &h, &[]).unwrap();
        assert!(r.member && r.d == Degree::NegInfinity);
    }

    #[test]
    fn aplus_rejects_bad_h() {
        for h in ["-1/2 -1", "1 1", "1/4 1 1", "0 0 1"] {
            assert!(
                matches!(
                    aplus_check_diamond(&p("0 1"), &p(h), &[]),
                    Err(Error::PreconditionFailed(_))
                ),
                "h = {h}"
            );
        }
    }
}
