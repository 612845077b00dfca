//! Real-root counting and isolation with Sturm chains.
//!
//! Distinct roots are counted on the square-free part; multiplicities come
//! from the square-free decomposition. Isolating intervals always have
//! rational endpoints that are not roots, and rational roots are reported as
//! exact points.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{
    format_rational, int, parse_rational, rational_string, sign, IntPoly, Polynomial, Rational,
};

/// Classical Sturm chain `f, f', -rem(f, f'), ...`, stopping before zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<Polynomial>,
    /// Positive integer multiples of `polys`, for sign evaluation.
    ints: Vec<IntPoly>,
}

impl SturmChain {
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    /// Last nonzero entry: an associate of `gcd(f, f')`.
    pub fn gcd_associate(&self) -> &Polynomial {
        self.polys.last().expect("chain is nonempty")
    }

    /// Chain whose entries are positive multiples of the plain chain entries,
    /// with integer coefficients. Signs, and so variation counts, agree.
    pub(crate) fn normalized(f: &Polynomial) -> Self {
        let mut ints = vec![IntPoly::new(f)];
        let mut next = ints[0].derivative();
        while !next.is_zero() {
            let r = ints.last().unwrap().neg_rem(&next);
            ints.push(next);
            next = r;
        }
        SturmChain {
            polys: ints.iter().map(IntPoly::to_polynomial).collect(),
            ints,
        }
    }

    /// The first entry as an integer polynomial.
    pub(crate) fn head(&self) -> &IntPoly {
        &self.ints[0]
    }

    fn variations(&self, at: &Bound) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.ints {
            let s = match at {
                Bound::Finite(x) => p.sign_at(x),
                Bound::PosInfinity => p.leading_sign(),
                Bound::NegInfinity => {
                    let s = p.leading_sign();
                    if p.deg() % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                }
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in `(lo, hi]`, valid for a square-free chain.
    pub(crate) fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    pub(crate) fn count_open(&self, lo: &Rational, hi: &Rational) -> usize {
        self.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))
    }
}

/// `f, f', -rem(p_{i-1}, p_i), ...` until the remainder vanishes.
pub fn sturm_chain(f: &Polynomial) -> Result<SturmChain> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut polys = vec![f.clone()];
    let mut next = f.derivative(1);
    while !next.is_zero() {
        let r = polys.last().unwrap().rem(&next)?;
        polys.push(next);
        next = -&r;
    }
    Ok(SturmChain {
        ints: polys.iter().map(IntPoly::new).collect(),
        polys,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl Bound {
    fn resolve(&self, cauchy: &Rational) -> Rational {
        match self {
            Bound::NegInfinity => -cauchy,
            Bound::Finite(x) => x.clone(),
            Bound::PosInfinity => cauchy.clone(),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Bound::NegInfinity => 0,
            Bound::Finite(_) => 1,
            Bound::PosInfinity => 2,
        }
    }

    fn below(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

impl std::str::FromStr for Bound {
    type Err = Error;

    /// `-inf`, `inf` (or `+inf`), or a rational.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" => Ok(Bound::NegInfinity),
            "inf" | "+inf" => Ok(Bound::PosInfinity),
            t => Ok(Bound::Finite(parse_rational(t)?)),
        }
    }
}

impl From<Rational> for Bound {
    fn from(x: Rational) -> Self {
        Bound::Finite(x)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInfinity => f.write_str("-inf"),
            Bound::Finite(x) => f.write_str(&format_rational(x)),
            Bound::PosInfinity => f.write_str("inf"),
        }
    }
}

/// `1 + max |a_i / a_n|`: every root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(f: &Polynomial) -> Rational {
    let lead = f.leading().expect("nonzero polynomial").abs();
    let n = f.deg().unwrap();
    let max = f.coeffs()[..n]
        .iter()
        .map(|a| a.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// Number of distinct real roots of `f` in `(lo, hi]`.
///
/// Infinite bounds are replaced by the Cauchy root bound.
pub fn count_roots(f: &Polynomial, lo: &Bound, hi: &Bound) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !lo.below(hi) {
        return Err(Error::InvalidInterval {
            lo: lo.to_string(),
            hi: hi.to_string(),
        });
    }
    if f.is_constant() {
        return Ok(0);
    }
    let sf = f.squarefree_part();
    let b = cauchy_bound(&sf);
    let chain = SturmChain::normalized(&sf);
    Ok(chain.count(
        &Bound::Finite(lo.resolve(&b)),
        &Bound::Finite(hi.resolve(&b)),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootLocation {
    Exact(#[serde(with = "rational_string")] Rational),
    Interval {
        #[serde(with = "rational_string")]
        lo: Rational,
        #[serde(with = "rational_string")]
        hi: Rational,
    },
}

impl RootLocation {
    /// A rational point inside the location.
    pub fn sample(&self) -> Rational {
        match self {
            RootLocation::Exact(x) => x.clone(),
            RootLocation::Interval { lo, hi } => {
                (lo + hi) / Rational::from_integer(BigInt::from(2))
            }
        }
    }
}

impl fmt::Display for RootLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootLocation::Exact(x) => f.write_str(&format_rational(x)),
            RootLocation::Interval { lo, hi } => {
                write!(f, "({}, {})", format_rational(lo), format_rational(hi))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsolatedRoot {
    #[serde(flatten)]
    pub location: RootLocation,
    pub multiplicity: usize,
}

/// Sorted, disjoint isolating locations of the distinct real roots of `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootIsolation {
    pub degree: usize,
    pub roots: Vec<IsolatedRoot>,
    #[serde(skip)]
    squarefree: Polynomial,
}

impl RootIsolation {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn is_real_rooted(&self) -> bool {
        self.total_multiplicity() == self.degree
    }

    /// The square-free polynomial whose roots are isolated.
    pub fn squarefree(&self) -> &Polynomial {
        &self.squarefree
    }
}

pub fn isolate_roots(f: &Polynomial) -> Result<RootIsolation> {
    isolate_roots_with(f, true)
}

/// With `exact`, rational roots are always reported as exact points;
/// otherwise intervals are only refined until they separate the roots.
pub(crate) fn isolate_roots_with(f: &Polynomial, exact: bool) -> Result<RootIsolation> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = f.deg().unwrap();
    let squarefree = f.squarefree_part();
    let locations = isolate_squarefree(&squarefree, exact);
    let factors: Vec<(SturmChain, Polynomial, usize)> = f
        .squarefree_decomposition()
        .into_iter()
        .map(|(s, m)| (SturmChain::normalized(&s), s, m))
        .collect();
    let roots = locations
        .into_iter()
        .map(|location| {
            let multiplicity = factors
                .iter()
                .find(|(chain, s, _)| has_root_in(chain, s, &location))
                .map(|(_, _, m)| *m)
                .expect("every root of the square-free part belongs to a factor");
            IsolatedRoot {
                location,
                multiplicity,
            }
        })
        .collect();
    Ok(RootIsolation {
        degree,
        roots,
        squarefree,
    })
}

/// Whether `p` (with Sturm chain `chain`) has a root at the location. The
/// location's interval endpoints must not be roots of `p`.
pub(crate) fn has_root_in(chain: &SturmChain, p: &Polynomial, loc: &RootLocation) -> bool {
    match loc {
        RootLocation::Exact(x) => p.evaluate(x).is_zero(),
        RootLocation::Interval { lo, hi } => chain.count_open(lo, hi) > 0,
    }
}

/// A power of two strictly above every root modulus (Fujiwara's bound,
/// rounded up through bit lengths).
fn root_bound(p: &IntPoly) -> Rational {
    let coeffs = p.coeffs();
    let n = coeffs.len() - 1;
    let lead_bits = coeffs[n].bits() as i64;
    let exponent = (1..=n)
        .filter(|&k| !coeffs[n - k].is_zero())
        .map(|k| {
            let u = coeffs[n - k].bits() as i64 - lead_bits + 1;
            u.div_euclid(k as i64) + i64::from(u.rem_euclid(k as i64) != 0)
        })
        .max()
        .unwrap_or(0);
    let e = 2 + exponent;
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as usize)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// Sorted isolating locations for the roots of a square-free polynomial.
pub(crate) fn isolate_squarefree(p: &Polynomial, exact: bool) -> Vec<RootLocation> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let chain = SturmChain::normalized(p);
    let b = root_bound(chain.head());
    let lo = -b.clone();
    let n = chain.count_open(&lo, &b);
    let width_target = if exact {
        let lead = chain.head().coeffs().last().unwrap().abs();
        Rational::new(BigInt::one(), &lead * &lead)
    } else {
        b.clone() * int(4)
    };
    bisect(&chain, lo, b, n, &width_target, &mut out);
    out
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

fn bisect(
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    count: usize,
    width_target: &Rational,
    out: &mut Vec<RootLocation>,
) {
    let p = chain.head();
    match count {
        0 => {}
        1 => out.push(refine_single(p, lo, hi, width_target)),
        _ => {
            let mid = (&lo + &hi) * half();
            if p.sign_at(&mid) == 0 {
                // step away from the root until the gap contains only it
                let mut delta = (&hi - &lo) * half() * half();
                let (a, b) = loop {
                    let a = &mid - &delta;
                    let b = &mid + &delta;
                    if p.sign_at(&a) != 0 && p.sign_at(&b) != 0 && chain.count_open(&a, &b) == 1 {
                        break (a, b);
                    }
                    delta *= half();
                };
                let left = chain.count_open(&lo, &a);
                let right = chain.count_open(&b, &hi);
                bisect(chain, lo, a, left, width_target, out);
                out.push(RootLocation::Exact(mid));
                bisect(chain, b, hi, right, width_target, out);
            } else {
                let left = chain.count_open(&lo, &mid);
                bisect(chain, lo, mid.clone(), left, width_target, out);
                bisect(chain, mid, hi, count - left, width_target, out);
            }
        }
    }
}

/// Halves an isolating interval of a root of `p`, or pins the root when it
/// is the midpoint.
pub(crate) fn refine_step(p: &IntPoly, loc: &mut RootLocation) {
    let RootLocation::Interval { lo, hi } = loc else {
        return;
    };
    let mid = (&*lo + &*hi) * half();
    let sm = p.sign_at(&mid);
    if sm == 0 {
        *loc = RootLocation::Exact(mid);
    } else if sm == p.sign_at(lo) {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

/// Shrinks an interval holding exactly one simple root. A rational root of a
/// primitive integer polynomial has denominator dividing the leading
/// coefficient `L`, and two such rationals differ by at least `1/L^2`; once the
/// interval is narrower than that its simplest rational is the only candidate.
fn refine_single(
    p: &IntPoly,
    mut lo: Rational,
    mut hi: Rational,
    width_target: &Rational,
) -> RootLocation {
    let lo_sign = p.sign_at(&lo);
    for step in 0.. {
        let narrow = &(&hi - &lo) < width_target;
        if narrow || step % 4 == 0 {
            let c = simplest_between(&lo, &hi);
            if p.sign_at(&c) == 0 {
                return RootLocation::Exact(c);
            }
        }
        if narrow {
            return RootLocation::Interval { lo, hi };
        }
        let mid = (&lo + &hi) * half();
        let sm = p.sign_at(&mid);
        if sm == 0 {
            return RootLocation::Exact(mid);
        }
        if sm == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    unreachable!()
}

/// The rational with the smallest denominator in the open interval `(lo, hi)`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi, "empty interval");
    let zero = Rational::zero();
    if lo < &zero && hi > &zero {
        return zero;
    }
    if hi <= &zero {
        return -simplest_nonneg(&-hi, Some(&-lo));
    }
    simplest_nonneg(lo, Some(hi))
}

/// Simplest rational in `(lo, hi)` for `lo >= 0`; `hi = None` is `+inf`.
fn simplest_nonneg(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let fl = lo.floor();
    let next = &fl + Rational::one();
    match hi {
        None => next,
        Some(h) if &next < h => next,
        Some(h) => {
            // (lo, hi) lies within [fl, fl + 1]
            let lo_frac = lo - &fl;
            let hi_frac = h - &fl;
            let inner_lo = hi_frac.recip();
            let inner_hi = if lo_frac.is_zero() {
                None
            } else {
                Some(lo_frac.recip())
            };
            fl + simplest_nonneg(&inner_lo, inner_hi.as_ref()).recip()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rootedness {
    RealSimple,
    RealWithMultiplicity,
    NotRealRooted,
}

impl Rootedness {
    pub fn is_real(self) -> bool {
        self != Rootedness::NotRealRooted
    }
}

pub fn is_real_rooted(f: &Polynomial) -> Result<Rootedness> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let factors = f.squarefree_decomposition();
    for (s, _) in &factors {
        let chain = SturmChain::normalized(s);
        if chain.count(&Bound::NegInfinity, &Bound::PosInfinity) != s.deg().unwrap() {
            return Ok(Rootedness::NotRealRooted);
        }
    }
    if factors.iter().all(|(_, m)| *m == 1) {
        Ok(Rootedness::RealSimple)
    } else {
        Ok(Rootedness::RealWithMultiplicity)
    }
}

/// Whether `f` is real-rooted with every root in `[lo, hi]` (or `(lo, hi)`).
pub fn roots_in_interval(
    f: &Polynomial,
    lo: &Rational,
    hi: &Rational,
    closed: bool,
) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::InvalidInterval {
            lo: format_rational(lo),
            hi: format_rational(hi),
        });
    }
    if !is_real_rooted(f)?.is_real() {
        return Ok(false);
    }
    let sf = f.squarefree_part();
    let Some(distinct) = sf.deg() else {
        unreachable!()
    };
    if distinct == 0 {
        return Ok(true);
    }
    let chain = SturmChain::normalized(&sf);
    let mut inside = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
    if closed {
        if sf.evaluate(lo).is_zero() {
            inside += 1;
        }
    } else if sf.evaluate(hi).is_zero() {
        inside -= 1;
    }
    Ok(inside == distinct)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LogConcavity {
    StrictlyLogConcave,
    ViolatedAt(usize),
}

/// Checks `a_i^2 > a_{i-1} a_{i+1}` for `m < i < n`, where `m` is the lowest
/// and `n` the highest nonzero index.
pub fn log_concavity_check(f: &Polynomial) -> Result<LogConcavity> {
    let n = f.deg().ok_or(Error::ZeroPolynomial)?;
    let m = f.low_degree().unwrap();
    let a = f.coeffs();
    for i in (m + 1)..n {
        if &a[i] * &a[i] <= &a[i - 1] * &a[i + 1] {
            return Ok(LogConcavity::ViolatedAt(i));
        }
    }
    Ok(LogConcavity::StrictlyLogConcave)
}

/// A real root of a square-free polynomial, held as a refinable interval.
#[derive(Debug, Clone)]
pub struct AlgebraicRoot {
    defining: Polynomial,
    location: RootLocation,
}

impl AlgebraicRoot {
    /// `defining` must be square-free with exactly one root in `location`, and
    /// interval endpoints must not be roots.
    pub fn new(defining: Polynomial, location: RootLocation) -> Self {
        AlgebraicRoot { defining, location }
    }

    pub fn location(&self) -> &RootLocation {
        &self.location
    }

    /// All real roots of `f` (ignoring multiplicity), in increasing order.
    pub fn roots_of(f: &Polynomial) -> Result<Vec<AlgebraicRoot>> {
        let iso = isolate_roots_with(f, false)?;
        let sf = iso.squarefree().clone();
        Ok(iso
            .roots
            .into_iter()
            .map(|r| AlgebraicRoot::new(sf.clone(), r.location))
            .collect())
    }

    /// Exact sign of `p` at this root.
    pub fn sign_of(&self, p: &Polynomial) -> i8 {
        let (mut lo, mut hi) = match &self.location {
            RootLocation::Exact(x) => return p.sign_at(x),
            RootLocation::Interval { lo, hi } => (lo.clone(), hi.clone()),
        };
        if p.is_zero() {
            return 0;
        }
        let common = p.gcd(&self.defining);
        if !common.is_constant() {
            let chain = SturmChain::normalized(&common);
            if chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())) > 0 {
                return 0;
            }
        }
        if p.is_constant() {
            return sign(p.leading().unwrap());
        }
        let p_chain = SturmChain::normalized(&p.squarefree_part());
        let lo_sign = self.defining.sign_at(&lo);
        loop {
            if p_chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())) == 0 {
                return p.sign_at(&hi);
            }
            let mid = (&lo + &hi) * half();
            let sm = self.defining.sign_at(&mid);
            if sm == 0 {
                return p.sign_at(&mid);
            }
            if sm == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn sturm_chain_examples() {
        assert_eq!(
            sturm_chain(&p("-2 0 1")).unwrap().polynomials(),
            &[p("-2 0 1"), p("0 2"), p("2")]
        );
        assert_eq!(
            sturm_chain(&p("0 1")).unwrap().polynomials(),
            &[p("0 1"), p("1")]
        );
        let double = sturm_chain(&p("0 0 1")).unwrap();
        assert_eq!(double.polynomials(), &[p("0 0 1"), p("0 2")]);
        assert_eq!(double.gcd_associate(), &p("0 2"));
        assert_eq!(sturm_chain(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn counting() {
        let fin = |x: i64| Bound::Finite(int(x));
        assert_eq!(count_roots(&p("-2 0 1"), &fin(0), &fin(2)).unwrap(), 1);
        assert_eq!(
            count_roots(&p("1 0 1"), &Bound::NegInfinity, &Bound::PosInfinity).unwrap(),
            0
        );
        // roots -1 and 0: (-1, 0] holds 0, the endpoint -1 is checked separately
        let f = p("0 1 1");
        assert_eq!(count_roots(&f, &fin(-1), &fin(0)).unwrap(), 1);
        assert!(f.evaluate(&int(-1)).is_zero());
        assert_eq!(count_roots(&f, &fin(-2), &fin(0)).unwrap(), 2);
        assert!(matches!(
            count_roots(&f, &fin(1), &fin(1)),
            Err(Error::InvalidInterval { .. })
        ));
        // multiple roots are counted once
        let g = Polynomial::from_roots(int(1), &[int(1), int(1), int(2)]);
        assert_eq!(
            count_roots(&g, &Bound::NegInfinity, &Bound::PosInfinity).unwrap(),
            2
        );
    }

    #[test]
    fn isolation_examples() {
        let iso = isolate_roots(&p("0 1 2")).unwrap();
        assert_eq!(
            iso.roots,
            vec![
                IsolatedRoot {
                    location: RootLocation::Exact(rat(-1, 2)),
                    multiplicity: 1
                },
                IsolatedRoot {
                    location: RootLocation::Exact(int(0)),
                    multiplicity: 1
                },
            ]
        );
        let iso = isolate_roots(&p("0 0 1")).unwrap();
        assert_eq!(
            iso.roots,
            vec![IsolatedRoot {
                location: RootLocation::Exact(int(0)),
                multiplicity: 2
            }]
        );

        let f = p("-2 0 1");
        let iso = isolate_roots(&f).unwrap();
        assert_eq!(iso.roots.len(), 2);
        for (r, s) in iso.roots.iter().zip([-1i64, 1]) {
            let RootLocation::Interval { lo, hi } = &r.location else {
                panic!("sqrt 2 is irrational")
            };
            // lo^2 < 2 < hi^2 on the correct side of zero
            assert_eq!(lo.signum() * hi.signum(), int(1));
            assert_eq!(lo.signum(), int(s));
            assert!(f.sign_at(lo) * f.sign_at(hi) < 0);
            assert_eq!(
                count_roots(&f, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())).unwrap(),
                1
            );
        }
    }

    #[test]
    fn rational_roots_with_large_denominators_are_exact() {
        let roots = [rat(-7, 13), rat(2, 9), rat(5, 11), rat(3, 1)];
        let f = Polynomial::from_roots(rat(3, 7), &roots);
        let iso = isolate_roots(&f).unwrap();
        let found: Vec<_> = iso.roots.iter().map(|r| r.location.clone()).collect();
        assert_eq!(
            found,
            roots
                .iter()
                .cloned()
                .map(RootLocation::Exact)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn rootedness_classes() {
        assert_eq!(
            is_real_rooted(&p("1 2 1")).unwrap(),
            Rootedness::RealWithMultiplicity
        );
        assert_eq!(
            is_real_rooted(&p("1 1 1")).unwrap(),
            Rootedness::NotRealRooted
        );
        assert_eq!(is_real_rooted(&p("0 1 1")).unwrap(), Rootedness::RealSimple);
        assert_eq!(is_real_rooted(&p("7")).unwrap(), Rootedness::RealSimple);
        assert_eq!(
            is_real_rooted(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn interval_containment() {
        let (lo, hi) = (int(-1), int(0));
        assert!(roots_in_interval(&p("0 1 2"), &lo, &hi, true).unwrap());
        assert!(!roots_in_interval(&p("-1 1"), &lo, &hi, true).unwrap());
        assert!(roots_in_interval(&p("0 1 1"), &lo, &hi, true).unwrap());
        assert!(!roots_in_interval(&p("0 1 1"), &lo, &hi, false).unwrap());
        assert!(roots_in_interval(&p("1/2 1"), &lo, &hi, false).unwrap());
        assert!(roots_in_interval(&p("3"), &lo, &hi, false).unwrap());
        assert!(!roots_in_interval(&p("1 0 1"), &int(-5), &int(5), true).unwrap());
    }

    #[test]
    fn log_concavity_examples() {
        assert_eq!(
            log_concavity_check(&p("1 4 2")).unwrap(),
            LogConcavity::StrictlyLogConcave
        );
        assert_eq!(
            log_concavity_check(&p("1 1 1")).unwrap(),
            LogConcavity::ViolatedAt(1)
        );
        assert_eq!(
            log_concavity_check(&p("0 1 2")).unwrap(),
            LogConcavity::StrictlyLogConcave
        );
        assert_eq!(
            log_concavity_check(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), rat(2, 5));
        assert_eq!(simplest_between(&rat(-1, 2), &rat(1, 2)), int(0));
        assert_eq!(simplest_between(&rat(-5, 2), &rat(-9, 4)), rat(-7, 3));
        assert_eq!(simplest_between(&int(2), &int(3)), rat(5, 2));
        assert_eq!(simplest_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
    }

    #[test]
    fn signs_at_irrational_roots() {
        let roots = AlgebraicRoot::roots_of(&p("-2 0 1")).unwrap();
        // x - 1 at -sqrt 2 and sqrt 2
        assert_eq!(roots[0].sign_of(&p("-1 1")), -1);
        assert_eq!(roots[1].sign_of(&p("-1 1")), 1);
        // x^3 - 2x vanishes at both
        assert_eq!(roots[1].sign_of(&p("0 -2 0 1")), 0);
        // 3/2 - x: sqrt 2 ~ 1.414
        assert_eq!(roots[1].sign_of(&p("3/2 -1")), 1);
        assert_eq!(roots[1].sign_of(&p("-141421/100000 1")), 1);
        assert_eq!(roots[1].sign_of(&p("-141422/100000 1")), -1);
    }
}
