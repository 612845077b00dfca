//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored lowest degree first and the vector never ends in a
//! zero, so the zero polynomial is the empty vector and structural equality is
//! polynomial equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` in lowest terms. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    if t.is_empty() {
        return Err(Error::parse(0, "empty rational"));
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n
                .parse()
                .map_err(|_| Error::parse(0, format!("bad numerator in {s:?}")))?;
            let d: BigInt = d.parse().map_err(|_| {
                Error::parse(n.to_string().len() + 1, format!("bad denominator in {s:?}"))
            })?;
            if d.is_zero() {
                return Err(Error::parse(0, format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => t
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| Error::parse(0, format!("not a rational number: {s:?}"))),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde adapter writing a rational as its `p/q` string.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Degree of a polynomial; the zero polynomial has degree minus infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::NegInfinity => s.serialize_str("-inf"),
            Degree::Finite(d) => s.serialize_u64(*d as u64),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `lead * prod (x - r)` over the given roots.
    pub fn from_roots(lead: Rational, roots: &[Rational]) -> Self {
        roots.iter().fold(Self::constant(lead), |acc, r| {
            &acc * &Self::from_coeffs(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Positive leading coefficient.
    pub fn is_standard(&self) -> bool {
        self.leading().is_some_and(Signed::is_positive)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// n-th formal derivative.
    pub fn derivative(&self, n: usize) -> Self {
        if n >= self.coeffs.len() {
            return Self::zero();
        }
        let coeffs = (n..self.coeffs.len())
            .map(|k| {
                // k (k-1) ... (k-n+1)
                let falling = ((k - n + 1)..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j));
                &self.coeffs[k] * Rational::from_integer(falling)
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// `f(x + z0)`.
    pub fn translate(&self, z0: &Rational) -> Self {
        let shift = Self::from_coeffs(vec![z0.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            &(&acc * &shift) + &Self::constant(a.clone())
        })
    }

    pub fn evaluate(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x0 + a)
    }

    /// Sign of `f(x0)` as -1, 0 or 1.
    pub fn sign_at(&self, x0: &Rational) -> i8 {
        sign(&self.evaluate(x0))
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / dlead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &q * d;
                rem[k - dd + j] -= t;
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub(crate) fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.rem(self) {
            Ok(r) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Positive rational multiple with coprime integer coefficients.
    ///
    /// Signs are preserved, so sign-based root counting is unaffected.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let content = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        Polynomial {
            coeffs: nums
                .into_iter()
                .map(|n| Rational::from_integer(n / &content))
                .collect(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor").primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic product of the distinct irreducible factors, `f / gcd(f, f')`.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative(1));
        self.exact_div(&g).monic()
    }

    /// Yun's square-free decomposition: monic, pairwise coprime, square-free
    /// factors `s_i` with `f = c * prod s_i^i`. Constant factors are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative(1);
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut d = &c - &b.derivative(1);
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = &c - &b.derivative(1);
            i += 1;
        }
        out
    }

    /// Coefficient list in the whitespace-separated text format.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Human-readable form such as `2x^2 + x - 1/3`.
    pub fn pretty(&self) -> String {
        self.pretty_in("x")
    }

    pub fn pretty_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else if abs.is_integer() {
                out.push_str(&format!("{}{mono}", abs.numer()));
            } else {
                out.push_str(&format!("({}){mono}", format_rational(&abs)));
            }
        }
        out
    }

    /// Parses the JSON array-of-strings form.
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s)
            .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))
    }

    /// Accepts either the text form or, when the input starts with `[`, JSON.
    pub fn parse_any(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            Self::from_json(s)
        } else {
            s.parse()
        }
    }
}

pub(crate) fn sign(r: &Rational) -> i8 {
    match r.cmp(&Rational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

fn int_sign(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// A polynomial with coprime integer coefficients, used where many exact sign
/// evaluations are needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Positive multiple of `p`; zero maps to the empty polynomial.
    pub(crate) fn new(p: &Polynomial) -> Self {
        IntPoly {
            coeffs: p
                .primitive()
                .coeffs
                .iter()
                .map(|c| c.numer().clone())
                .collect(),
        }
    }

    fn normalize(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let content = coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() && !content.is_one() {
            for c in &mut coeffs {
                *c /= &content;
            }
        }
        IntPoly { coeffs }
    }

    pub(crate) fn to_polynomial(&self) -> Polynomial {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub(crate) fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub(crate) fn leading_sign(&self) -> i8 {
        self.coeffs.last().map_or(0, int_sign)
    }

    /// Sign of `Σ c_i a^i b^(n-i)` for `x = a/b`, `b > 0`.
    pub(crate) fn sign_at(&self, x: &Rational) -> i8 {
        let Some((lead, rest)) = self.coeffs.split_last() else {
            return 0;
        };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = lead.clone();
        let mut b_pow = BigInt::one();
        for c in rest.iter().rev() {
            b_pow *= b;
            acc = acc * a + c * &b_pow;
        }
        int_sign(&acc)
    }

    pub(crate) fn derivative(&self) -> Self {
        Self::normalize(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// A positive multiple of `-rem(self, divisor)`.
    pub(crate) fn neg_rem(&self, divisor: &Self) -> Self {
        let db = divisor.deg();
        let lb = divisor.coeffs.last().expect("nonzero divisor");
        let mut r = self.coeffs.clone();
        let mut flipped = false;
        while r.len() > db && !r.is_empty() {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - db;
            for c in &mut r {
                *c *= lb;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                r[i + shift] -= &lr * d;
            }
            if lb.is_negative() {
                flipped = !flipped;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            r = Self::normalize(r).coeffs;
        }
        if !flipped {
            for c in &mut r {
                *c = -&*c;
            }
        }
        Self::normalize(r)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]", self.to_text())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        let mut offset = 0;
        for token in s.split_whitespace() {
            let at = s[offset..].find(token).map_or(offset, |p| p + offset);
            let c = parse_rational(token).map_err(|e| match e {
                Error::Parse { position, message } => Error::parse(at + position, message),
                other => other,
            })?;
            coeffs.push(c);
            offset = at + token.len();
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn ring_arithmetic() {
        assert_eq!(&p("1 1") + &p("0 1"), p("1 2"));
        assert_eq!(&p("0 1") * &p("1 1"), p("0 1 1"));
        assert_eq!(p("1 2").scale(&rat(1, 2)), p("1/2 1"));
        assert_eq!(&p("1 1") - &p("1 1"), Polynomial::zero());
        assert!(Polynomial::zero().coeffs().is_empty());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("0 0 1").derivative(1), p("0 2"));
        assert_eq!(p("0 0 1").derivative(3), Polynomial::zero());
        assert_eq!(p("1 2 1").derivative(2), p("2"));
        assert_eq!(p("1 2 1").derivative(0), p("1 2 1"));
    }

    #[test]
    fn translation() {
        assert_eq!(p("0 0 1").translate(&int(1)), p("1 2 1"));
        assert_eq!(p("3 -1 1/2").translate(&int(0)), p("3 -1 1/2"));
        // (x-1)^2 - 1 = x^2 - 2x
        assert_eq!(p("-1 0 1").translate(&int(-1)), p("0 -2 1"));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p("0 1 1").evaluate(&int(2)), int(6));
        assert_eq!(Polynomial::zero().evaluate(&rat(7, 3)), int(0));
        assert_eq!(p("0 1 2").evaluate(&rat(-1, 2)), int(0));
    }

    #[test]
    fn degree_markers() {
        assert_eq!(Polynomial::zero().degree(), Degree::NegInfinity);
        assert_eq!(p("5").degree(), Degree::Finite(0));
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert!(p("1 -2 3").is_standard());
        assert!(!p("1 2 -3").is_standard());
        assert!(!Polynomial::zero().is_standard());
    }

    #[test]
    fn division_and_gcd() {
        let (q, r) = p("-2 0 1").div_rem(&p("0 2")).unwrap();
        assert_eq!(q, p("0 1/2"));
        assert_eq!(r, p("-2"));
        assert_eq!(
            p("1 2").div_rem(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
        // gcd((x+1)^2 (x-2), (x+1)(x+3)) = x+1
        let a = Polynomial::from_roots(int(3), &[int(-1), int(-1), int(2)]);
        let b = Polynomial::from_roots(int(-2), &[int(-1), int(-3)]);
        assert_eq!(a.gcd(&b), p("1 1"));
        assert_eq!(
            Polynomial::zero().gcd(&Polynomial::zero()),
            Polynomial::zero()
        );
        assert_eq!(Polynomial::zero().gcd(&p("0 3")), p("0 1"));
    }

    #[test]
    fn squarefree_decomposition_of_repeated_roots() {
        let f = Polynomial::from_roots(
            int(2),
            &[int(1), int(-1), int(-1), rat(1, 2), rat(1, 2), rat(1, 2)],
        );
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p("-1 1"), 1), (p("1 1"), 2), (p("-1/2 1"), 3),]);
        assert_eq!(
            f.squarefree_part(),
            Polynomial::from_roots(int(1), &[int(1), int(-1), rat(1, 2)])
        );
    }

    #[test]
    fn text_and_json_formats() {
        assert_eq!(p("0 1 1").pretty(), "x^2 + x");
        assert_eq!(p("-1/3 0 -2").pretty(), "-2x^2 - 1/3");
        assert_eq!(p("0 0 0"), Polynomial::zero());
        assert_eq!(Polynomial::zero().to_text(), "0");
        assert_eq!(
            serde_json::to_string(&p("1/2 0 -3")).unwrap(),
            r#"["1/2","0","-3"]"#
        );
        assert_eq!(
            Polynomial::parse_any(r#"["0","1","1"]"#).unwrap(),
            p("0 1 1")
        );
        match "1 2 x".parse::<Polynomial>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!("1 2/0".parse::<Polynomial>().is_err());
    }
}
