//! Seeded generators for real-rooted polynomials and interlacing families.
//!
//! Everything is built from rational roots, so no root finding is needed to
//! know what a generated instance should satisfy.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::Rng;

use crate::poly::{rat, Polynomial, Rational};

/// Where random roots are drawn from: rationals `num/den` in `[lo, hi]` with
/// `1 <= den <= max_den`.
#[derive(Debug, Clone)]
pub struct RootRange {
    pub lo: Rational,
    pub hi: Rational,
    pub max_den: i64,
}

impl RootRange {
    pub fn new(lo: Rational, hi: Rational, max_den: i64) -> Self {
        assert!(lo < hi && max_den >= 1);
        RootRange { lo, hi, max_den }
    }

    /// `[-1, 0]` with denominators up to 8.
    pub fn unit_negative() -> Self {
        Self::new(rat(-1, 1), rat(0, 1), 8)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        let den = rng.gen_range(1..=self.max_den);
        let d = Rational::from_integer(den.into());
        let lo = (&self.lo * &d).ceil().to_integer();
        let hi = (&self.hi * &d).floor().to_integer();
        let lo: i64 = lo.try_into().expect("small bound");
        let hi: i64 = hi.try_into().expect("small bound");
        if lo > hi {
            return self.lo.clone();
        }
        rat(rng.gen_range(lo..=hi), den)
    }

    /// Sample from the open interval `(lo, hi)`.
    pub fn sample_open<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        loop {
            let x = self.sample(rng);
            if x != self.lo && x != self.hi {
                return x;
            }
        }
    }
}

/// `n` sorted roots, repeats allowed.
pub fn roots<R: Rng + ?Sized>(rng: &mut R, n: usize, range: &RootRange) -> Vec<Rational> {
    let mut v: Vec<Rational> = (0..n).map(|_| range.sample(rng)).collect();
    v.sort();
    v
}

/// `n` sorted, pairwise distinct roots in the open interval.
pub fn distinct_roots<R: Rng + ?Sized>(rng: &mut R, n: usize, range: &RootRange) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    while set.len() < n {
        set.insert(range.sample_open(rng));
    }
    set.into_iter().collect()
}

/// A nonzero rational `num/den` with `|num| <= 9`, `den <= 6`.
pub fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, positive: bool) -> Rational {
    loop {
        let n = rng.gen_range(-9i64..=9);
        if n == 0 || (positive && n < 0) {
            continue;
        }
        return rat(n, rng.gen_range(1..=6));
    }
}

/// Polynomial with the given roots and a random nonzero leading coefficient.
pub fn with_roots<R: Rng + ?Sized>(rng: &mut R, roots: &[Rational], standard: bool) -> Polynomial {
    Polynomial::from_roots(nonzero_scalar(rng, standard), roots)
}

/// Random real-rooted polynomial of the given degree with roots in `range`.
pub fn real_rooted<R: Rng + ?Sized>(
    rng: &mut R,
    degree: usize,
    range: &RootRange,
    standard: bool,
) -> Polynomial {
    let r = roots(rng, degree, range);
    with_roots(rng, &r, standard)
}

/// A point in `[a, b]` (open when `strict`) at a random multiple of `(b-a)/8`.
fn between<R: Rng + ?Sized>(rng: &mut R, a: &Rational, b: &Rational, strict: bool) -> Rational {
    let j = if strict {
        rng.gen_range(1..=7)
    } else {
        rng.gen_range(0..=8)
    };
    a + (b - a) * rat(j, 8)
}

/// Roots `(beta, alpha)` with `alpha_1 <= beta_1 <= alpha_2 <= ... <= alpha_d`
/// (all strict when `strict`); `alpha` has `d` entries and `beta` `d - 1`.
pub fn interlacing_roots<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    range: &RootRange,
    strict: bool,
) -> (Vec<Rational>, Vec<Rational>) {
    let alpha = if strict {
        distinct_roots(rng, d, range)
    } else {
        roots(rng, d, range)
    };
    let beta = alpha
        .windows(2)
        .map(|w| between(rng, &w[0], &w[1], strict))
        .collect();
    (beta, alpha)
}

/// `(g, f)` with `g ⪯ f` (`g ≺ f` when `strict`) and `deg f = d >= 1`.
pub fn interlacing_pair<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    range: &RootRange,
    strict: bool,
    standard: bool,
) -> (Polynomial, Polynomial) {
    let (beta, alpha) = interlacing_roots(rng, d, range, strict);
    (
        with_roots(rng, &beta, standard),
        with_roots(rng, &alpha, standard),
    )
}

/// Random polynomial with small rational coefficients, not necessarily
/// real-rooted; the leading coefficient is nonzero.
pub fn arbitrary<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> Polynomial {
    let mut coeffs: Vec<Rational> = (0..degree)
        .map(|_| {
            if rng.gen_bool(0.2) {
                Rational::zero()
            } else {
                rat(rng.gen_range(-12i64..=12), rng.gen_range(1..=5))
            }
        })
        .collect();
    coeffs.push(nonzero_scalar(rng, false));
    Polynomial::from_coeffs(coeffs)
}

/// Real-rooted polynomial times an irreducible quadratic `(x - c)^2 + s`.
pub fn with_nonreal_factor<R: Rng + ?Sized>(
    rng: &mut R,
    real_degree: usize,
    range: &RootRange,
) -> Polynomial {
    let real = real_rooted(rng, real_degree, range, false);
    let c = range.sample(rng);
    let s = rat(rng.gen_range(1..=20), rng.gen_range(1..=10));
    let quad = Polynomial::from_coeffs(vec![&c * &c + s, -(&c + &c), Rational::one()]);
    &real * &quad
}
