//! Labelled posets, `(P, ω)`-partitions and their E- and order polynomials.
//!
//! A `(P, ω)`-partition is an order-reversing map `σ: P → [n]` that is strict
//! (`σ(x) > σ(y)`) on every relation `x < y` with `ω(x) > ω(y)`. Surjective
//! partitions onto `[k]` are counted through the chains of up-sets
//! `σ⁻¹{1} ⊂ σ⁻¹{1,2} ⊂ ... ⊂ P`: every level must be nonempty and contain no
//! strict relation.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{factorial, int, Polynomial, Rational};

/// `E(∅)` by convention, since the defining sum starts at `k = 1`. With `1`,
/// `E(P ⊕₁ ∅) = E(P) E(∅)`.
pub const EMPTY_POSET_E: i64 = 1;

/// Largest poset accepted by the exhaustive counters.
pub const MAX_COUNTING_SIZE: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledPoset {
    names: Vec<String>,
    labels: Vec<u64>,
    /// `less[i][j]` iff `i < j`.
    less: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrdinalVariant {
    /// Labels increase from the lower block to the upper block (`⊕₀`).
    Zero,
    /// Labels decrease from the lower block to the upper block (`⊕₁`).
    One,
}

impl LabelledPoset {
    /// Builds a poset from any generating set of relations `(a, b)` meaning
    /// `a < b`. The relation is closed transitively and reduced to covers.
    pub fn new(names: Vec<String>, relations: &[(usize, usize)], labels: Vec<u64>) -> Result<Self> {
        let n = names.len();
        if labels.len() != n {
            return Err(Error::InvalidPoset(format!(
                "{} labels for {n} elements",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = names.iter().find(|s| !seen.insert(s.as_str())) {
            return Err(Error::InvalidPoset(format!("duplicate element {dup:?}")));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(**l)) {
            return Err(Error::InvalidPoset(format!("label {dup} is not injective")));
        }
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!(
                    "relation ({a}, {b}) out of range"
                )));
            }
            less[a][b] = true;
        }
        for k in 0..n {
            let via = less[k].clone();
            for row in less.iter_mut().filter(|row| row[k]) {
                for (cell, &v) in row.iter_mut().zip(&via) {
                    *cell |= v;
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| less[i][i]) {
            return Err(Error::InvalidPoset(format!("cycle through {:?}", names[i])));
        }
        let covers = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| less[i][j] && !(0..n).any(|k| less[i][k] && less[k][j]))
            .collect();
        Ok(LabelledPoset {
            names,
            labels,
            less,
            covers,
        })
    }

    pub fn empty() -> Self {
        LabelledPoset {
            names: Vec::new(),
            labels: Vec::new(),
            less: Vec::new(),
            covers: Vec::new(),
        }
    }

    pub fn singleton(name: &str) -> Self {
        Self::new(vec![name.to_string()], &[], vec![1]).unwrap()
    }

    /// Chain `0 < 1 < ... < n-1` with the given labels bottom to top.
    pub fn chain(labels: &[u64]) -> Result<Self> {
        let n = labels.len();
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(default_names(n), &rel, labels.to_vec())
    }

    pub fn antichain(n: usize) -> Self {
        Self::new(default_names(n), &[], (1..=n as u64).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn less_than(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The same order with another labelling.
    pub fn with_labels(&self, labels: Vec<u64>) -> Result<Self> {
        Self::new(self.names.clone(), &self.covers, labels)
    }

    /// Labels replaced by their ranks `1..=n`.
    pub fn canonical(&self) -> Self {
        let ranks = ranks(&self.labels);
        LabelledPoset {
            labels: ranks,
            ..self.clone()
        }
    }

    /// `P \ x` with the induced order and the restricted labelling.
    pub fn delete_element(&self, x: usize) -> Result<Self> {
        if x >= self.len() {
            return Err(Error::ElementNotFound(x.to_string()));
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != x).collect();
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        let labels = keep.iter().map(|&i| self.labels[i]).collect();
        let mut rel = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.less[i][j] {
                    rel.push((a, b));
                }
            }
        }
        Self::new(names, &rel, labels)
    }

    pub fn delete_named(&self, name: &str) -> Result<Self> {
        let x = self
            .index_of(name)
            .ok_or_else(|| Error::ElementNotFound(name.to_string()))?;
        self.delete_element(x)
    }

    /// Up-set masks: `above[i]` has bit `j` set iff `i < j`; `strict[i]`
    /// keeps only those `j` with `ω(i) > ω(j)`.
    fn masks(&self) -> (Vec<u64>, Vec<u64>) {
        let n = self.len();
        let mut above = vec![0u64; n];
        let mut strict = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if self.less[i][j] {
                    above[i] |= 1 << j;
                    if self.labels[i] > self.labels[j] {
                        strict[i] |= 1 << j;
                    }
                }
            }
        }
        (above, strict)
    }

    /// `[e_0, e_1, ..., e_p]`, where `e_k` counts surjective partitions onto
    /// `[k]` (`e_0` is 1 for the empty poset and 0 otherwise).
    pub fn surjective_partition_counts(&self) -> Result<Vec<u128>> {
        let n = self.len();
        if n > MAX_COUNTING_SIZE {
            return Err(Error::PosetTooLarge(n));
        }
        let full: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        let (above, strict) = self.masks();
        // ways[c][U][j]: chains of j nonempty levels from ∅ to the up-set U,
        // |U| = c
        let mut ways: Vec<HashMap<u64, Vec<u128>>> = vec![HashMap::new(); n + 1];
        ways[0].insert(0, vec![1]);
        for c in 0..n {
            let layer = std::mem::take(&mut ways[c]);
            for (up, counts) in &layer {
                let rest = full & !up;
                let mut level = rest;
                while level != 0 {
                    let next = up | level;
                    let valid =
                        bits(level).all(|i| above[i] & !next == 0 && strict[i] & level == 0);
                    if valid {
                        let target = ways[next.count_ones() as usize].entry(next).or_default();
                        if target.len() < counts.len() + 1 {
                            target.resize(counts.len() + 1, 0);
                        }
                        for (j, w) in counts.iter().enumerate() {
                            target[j + 1] = target[j + 1]
                                .checked_add(*w)
                                .ok_or(Error::PosetTooLarge(n))?;
                        }
                    }
                    level = (level - 1) & rest;
                }
            }
            ways[c] = layer;
        }
        let mut out = ways[n].remove(&full).unwrap_or_default();
        out.resize(n + 1, 0);
        Ok(out)
    }

    /// `e_k(P, ω)` for `1 <= k <= |P|`.
    pub fn count_surjective_partitions(&self, k: usize) -> Result<u128> {
        if k == 0 || k > self.len() {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
                allowed: format!("1..={}", self.len()),
            });
        }
        Ok(self.surjective_partition_counts()?[k])
    }

    /// `E(P, ω) = Σ_k e_k x^k`, with `E(∅) = 1`.
    pub fn e_polynomial(&self) -> Result<Polynomial> {
        if self.is_empty() {
            return Ok(Polynomial::constant(int(EMPTY_POSET_E)));
        }
        let counts = self.surjective_partition_counts()?;
        Ok(Polynomial::from_coeffs(
            counts.into_iter().map(u128_to_rational).collect(),
        ))
    }

    /// `Ω(P, ω, x) = Σ_k e_k C(x, k)`; `Ω(∅) = 1`.
    pub fn order_polynomial(&self) -> Result<Polynomial> {
        if self.is_empty() {
            return Ok(Polynomial::one());
        }
        Ok(e_inverse(&self.e_polynomial()?))
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.names.clone(),
            covers: self
                .covers
                .iter()
                .map(|&(a, b)| [self.names[a].clone(), self.names[b].clone()])
                .collect(),
            labels: self
                .names
                .iter()
                .cloned()
                .zip(self.labels.iter().copied())
                .collect(),
        }
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        let index: HashMap<&str, usize> = json
            .elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::InvalidPoset(format!("unknown element {s:?}")))
        };
        let rel = json
            .covers
            .iter()
            .map(|[a, b]| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        for name in json.labels.keys() {
            lookup(name)?;
        }
        let labels = json
            .elements
            .iter()
            .map(|e| {
                json.labels
                    .get(e)
                    .copied()
                    .ok_or_else(|| Error::InvalidPoset(format!("element {e:?} has no label")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(json.elements.clone(), &rel, labels)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: PosetJson = serde_json::from_str(s)
            .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))?;
        Self::from_json(&json)
    }
}

/// Serialized form: `{"elements": [...], "covers": [[a, b], ...], "labels": {...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
    pub labels: BTreeMap<String, u64>,
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn u128_to_rational(v: u128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Ranks `1..=n` of the values, preserving their relative order.
fn ranks(values: &[u64]) -> Vec<u64> {
    let mut sorted: Vec<u64> = values.to_vec();
    sorted.sort_unstable();
    values
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() as u64 + 1)
        .collect()
}

fn combined_names(p: &LabelledPoset, q: &LabelledPoset) -> Vec<String> {
    let mut names: Vec<String> = p.names.clone();
    let mut taken: HashSet<String> = names.iter().cloned().collect();
    for n in &q.names {
        let mut name = n.clone();
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        names.push(name);
    }
    names
}

fn shifted_covers(p: &LabelledPoset, q: &LabelledPoset) -> Vec<(usize, usize)> {
    let off = p.len();
    p.covers
        .iter()
        .copied()
        .chain(q.covers.iter().map(|&(a, b)| (a + off, b + off)))
        .collect()
}

/// `P ⊕ Q` with every element of `P` below every element of `Q`, labelled
/// canonically per the variant.
pub fn ordinal_sum(p: &LabelledPoset, q: &LabelledPoset, variant: OrdinalVariant) -> LabelledPoset {
    let off = p.len();
    let mut rel = shifted_covers(p, q);
    for i in 0..p.len() {
        for j in 0..q.len() {
            rel.push((i, j + off));
        }
    }
    let (rp, rq) = (ranks(&p.labels), ranks(&q.labels));
    let (shift_p, shift_q) = match variant {
        OrdinalVariant::Zero => (0, p.len() as u64),
        OrdinalVariant::One => (q.len() as u64, 0),
    };
    let labels = rp
        .iter()
        .map(|r| r + shift_p)
        .chain(rq.iter().map(|r| r + shift_q))
        .collect();
    LabelledPoset::new(combined_names(p, q), &rel, labels).expect("ordinal sum is a poset")
}

/// `P ⊔ Q`, labelled with the ranks of `P` followed by those of `Q`.
pub fn disjoint_union(p: &LabelledPoset, q: &LabelledPoset) -> LabelledPoset {
    let rel = shifted_covers(p, q);
    let off = p.len() as u64;
    let labels = ranks(&p.labels)
        .into_iter()
        .chain(ranks(&q.labels).into_iter().map(|r| r + off))
        .collect();
    LabelledPoset::new(combined_names(p, q), &rel, labels).expect("disjoint union is a poset")
}

/// `C(x, k) = x (x-1) ... (x-k+1) / k!`.
pub fn binomial_poly(k: usize) -> Polynomial {
    (0..k)
        .fold(Polynomial::one(), |acc, j| {
            &acc * &Polynomial::from_coeffs(vec![int(-(j as i64)), Rational::one()])
        })
        .scale(&factorial(k).recip())
}

/// `ℰ`: rewrites `f` in the basis `C(x, k)` and sends `C(x, k)` to `x^k`.
/// The binomial coordinates are the forward differences `Δ^k f(0)`.
pub fn e_operator(f: &Polynomial) -> Polynomial {
    let Some(d) = f.deg() else {
        return Polynomial::zero();
    };
    let mut values: Vec<Rational> = (0..=d).map(|n| f.evaluate(&int(n as i64))).collect();
    let mut coeffs = Vec::with_capacity(d + 1);
    for _ in 0..=d {
        coeffs.push(values[0].clone());
        values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Polynomial::from_coeffs(coeffs)
}

/// `ℰ⁻¹`: sends `x^k` to `C(x, k)`.
pub fn e_inverse(f: &Polynomial) -> Polynomial {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Polynomial::zero(), |acc, (k, c)| {
            &acc + &binomial_poly(k).scale(c)
        })
}

/// Series-parallel construction tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpExpr {
    Leaf,
    OSum0(Box<SpExpr>, Box<SpExpr>),
    OSum1(Box<SpExpr>, Box<SpExpr>),
    DUnion(Box<SpExpr>, Box<SpExpr>),
}

impl SpExpr {
    pub fn size(&self) -> usize {
        match self {
            SpExpr::Leaf => 1,
            SpExpr::OSum0(a, b) | SpExpr::OSum1(a, b) | SpExpr::DUnion(a, b) => a.size() + b.size(),
        }
    }

    pub fn osum0(a: SpExpr, b: SpExpr) -> Self {
        SpExpr::OSum0(Box::new(a), Box::new(b))
    }

    pub fn osum1(a: SpExpr, b: SpExpr) -> Self {
        SpExpr::OSum1(Box::new(a), Box::new(b))
    }

    pub fn dunion(a: SpExpr, b: SpExpr) -> Self {
        SpExpr::DUnion(Box::new(a), Box::new(b))
    }

    /// Uniform random binary split with a uniformly chosen operation.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, size: usize) -> Self {
        assert!(size >= 1);
        if size == 1 {
            return SpExpr::Leaf;
        }
        let left = rng.gen_range(1..size);
        let a = Self::random(rng, left);
        let b = Self::random(rng, size - left);
        match rng.gen_range(0..3) {
            0 => Self::osum0(a, b),
            1 => Self::osum1(a, b),
            _ => Self::dunion(a, b),
        }
    }
}

impl fmt::Display for SpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpExpr::Leaf => f.write_str("L"),
            SpExpr::OSum0(a, b) => write!(f, "s0({a},{b})"),
            SpExpr::OSum1(a, b) => write!(f, "s1({a},{b})"),
            SpExpr::DUnion(a, b) => write!(f, "du({a},{b})"),
        }
    }
}

struct SpParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl SpParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<SpExpr> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let start = self.pos;
        if rest.starts_with(b"L") {
            self.pos += 1;
            return Ok(SpExpr::Leaf);
        }
        let op = if rest.starts_with(b"s0") {
            SpExpr::osum0 as fn(SpExpr, SpExpr) -> SpExpr
        } else if rest.starts_with(b"s1") {
            SpExpr::osum1
        } else if rest.starts_with(b"du") {
            SpExpr::dunion
        } else if rest.is_empty() {
            return Err(Error::parse(start, "unexpected end of input"));
        } else {
            return Err(Error::parse(start, "expected 'L', 's0', 's1' or 'du'"));
        };
        self.pos += 2;
        self.expect(b'(')?;
        let a = self.expr()?;
        self.expect(b',')?;
        let b = self.expr()?;
        self.expect(b')')?;
        Ok(op(a, b))
    }
}

impl FromStr for SpExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = SpParser {
            src: s.as_bytes(),
            pos: 0,
        };
        let e = parser.expr()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(Error::parse(parser.pos, "trailing input"));
        }
        Ok(e)
    }
}

/// Builds the labelled poset of a series-parallel expression. Leaves are
/// named `x1, x2, ...` from left to right.
pub fn sp_build(expr: &SpExpr) -> LabelledPoset {
    fn go(e: &SpExpr, next: &mut usize) -> LabelledPoset {
        match e {
            SpExpr::Leaf => {
                *next += 1;
                LabelledPoset::singleton(&format!("x{next}"))
            }
            SpExpr::OSum0(a, b) => {
                let (p, q) = (go(a, next), go(b, next));
                ordinal_sum(&p, &q, OrdinalVariant::Zero)
            }
            SpExpr::OSum1(a, b) => {
                let (p, q) = (go(a, next), go(b, next));
                ordinal_sum(&p, &q, OrdinalVariant::One)
            }
            SpExpr::DUnion(a, b) => {
                let (p, q) = (go(a, next), go(b, next));
                disjoint_union(&p, &q)
            }
        }
    }
    go(expr, &mut 0)
}

/// Random poset on `n` elements: a random linear order thinned with edge
/// probability `density`, closed transitively, with random labels `1..=n`.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> LabelledPoset {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(density) {
                rel.push((order[i], order[j]));
            }
        }
    }
    let mut labels: Vec<u64> = (1..=n as u64).collect();
    labels.shuffle(rng);
    LabelledPoset::new(default_names(n), &rel, labels).expect("acyclic by construction")
}

/// One representative of every poset on `n` elements whose order is
/// compatible with the index order; every finite poset is isomorphic to one
/// of these.
pub fn natural_posets(n: usize) -> Vec<LabelledPoset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let rel: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let set: HashSet<_> = rel.iter().copied().collect();
        let closed = rel.iter().all(|&(a, b)| {
            rel.iter()
                .filter(|&&(c, _)| c == b)
                .all(|&(_, d)| set.contains(&(a, d)))
        });
        if closed {
            out.push(
                LabelledPoset::new(default_names(n), &rel, (1..=n as u64).collect())
                    .expect("natural order"),
            );
        }
    }
    out
}

/// All permutations of `1..=n`.
pub fn label_permutations(n: usize) -> Vec<Vec<u64>> {
    fn go(rest: &mut Vec<u64>, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n as u64).collect(), &mut Vec::new(), &mut out);
    out
}
