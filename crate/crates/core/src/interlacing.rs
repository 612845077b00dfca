//! Alternation and interlacing of zeros.
//!
//! Two polynomials are compared by isolating the roots of their square-free
//! parts and refining overlapping intervals until they separate. Shared roots
//! (the roots of the gcd) are identified exactly through the gcd's Sturm
//! chain. Root multisets are then compared as sequences of merged indices.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{rat, IntPoly, Polynomial, Rational};
use crate::rootedness::{
    has_root_in, is_real_rooted, isolate_squarefree, refine_step, AlgebraicRoot, Bound,
    RootLocation, Rootedness, SturmChain,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// Equal degrees, strictly interleaved roots.
    StrictlyAlternate,
    /// Equal degrees, weakly interleaved roots.
    Alternate,
    /// Degrees differ by one, strict.
    StrictlyInterlaces,
    /// Degrees differ by one.
    Interlaces,
    None,
}

/// Whose roots come first in the interleaved chain. For degrees differing by
/// one this is always the polynomial of larger degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Leader {
    First,
    Second,
    /// Identical root multisets: both orientations hold.
    Both,
}

impl Leader {
    pub fn swapped(self) -> Leader {
        match self {
            Leader::First => Leader::Second,
            Leader::Second => Leader::First,
            Leader::Both => Leader::Both,
        }
    }
}

/// A pair of roots, one of each argument, that breaks the interleaving.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub first_root: RootLocation,
    pub second_root: RootLocation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterlaceVerdict {
    pub relation: Relation,
    pub leader: Option<Leader>,
    pub witness: Option<Witness>,
}

impl InterlaceVerdict {
    fn none(witness: Option<Witness>) -> Self {
        InterlaceVerdict {
            relation: Relation::None,
            leader: None,
            witness,
        }
    }

    pub fn holds(&self) -> bool {
        self.relation != Relation::None
    }

    pub fn is_strict(&self) -> bool {
        matches!(
            self.relation,
            Relation::StrictlyAlternate | Relation::StrictlyInterlaces
        )
    }
}

/// Real roots of two polynomials on a common sorted list of locations.
struct MergedRoots {
    locations: Vec<RootLocation>,
    /// Location index of every root of the first polynomial, with
    /// multiplicity, sorted.
    first: Vec<usize>,
    second: Vec<usize>,
    first_real: bool,
    second_real: bool,
}

impl MergedRoots {
    fn new(f: &Polynomial, g: &Polynomial) -> Result<Self> {
        if f.is_zero() || g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = f.squarefree_part();
        let sg = g.squarefree_part();
        let mut a = isolate_squarefree(&sf, false);
        let mut b = isolate_squarefree(&sg, false);
        let common = sf.gcd(&sg);
        let common_chain = (!common.is_constant()).then(|| SturmChain::normalized(&common));
        let key = |loc: &RootLocation| common_chain.as_ref().and_then(|c| common_root_key(c, loc));
        let key_a: Vec<_> = a.iter().map(key).collect();
        let key_b: Vec<_> = b.iter().map(key).collect();
        let (pa, pb) = (IntPoly::new(&sf), IntPoly::new(&sg));
        let (mut i, mut j) = (0, 0);
        let mut entries = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let order = if j == b.len() {
                Ordering::Less
            } else if i == a.len() {
                Ordering::Greater
            } else if key_a[i].is_some() && key_a[i] == key_b[j] {
                Ordering::Equal
            } else {
                separate(&pa, &mut a[i], &pb, &mut b[j])
            };
            match order {
                Ordering::Less => {
                    entries.push((Some(i), None));
                    i += 1;
                }
                Ordering::Greater => {
                    entries.push((None, Some(j)));
                    j += 1;
                }
                Ordering::Equal => {
                    entries.push((Some(i), Some(j)));
                    i += 1;
                    j += 1;
                }
            }
        }
        let first = expand(f, &a, entries.iter().map(|e| e.0));
        let second = expand(g, &b, entries.iter().map(|e| e.1));
        let locations = entries
            .iter()
            .map(|e| match *e {
                (Some(i), _) => a[i].clone(),
                (None, Some(j)) => b[j].clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(MergedRoots {
            first_real: first.len() == f.deg().unwrap(),
            second_real: second.len() == g.deg().unwrap(),
            locations,
            first,
            second,
        })
    }

    fn witness(&self, first_idx: usize, second_idx: usize) -> Witness {
        Witness {
            first_root: self.locations[first_idx].clone(),
            second_root: self.locations[second_idx].clone(),
        }
    }
}

/// Number of roots of the common factor up to the root at `loc`, if that
/// root is one of them.
fn common_root_key(chain: &SturmChain, loc: &RootLocation) -> Option<usize> {
    let (hi, inside) = match loc {
        RootLocation::Exact(x) => (x, chain.head().sign_at(x) == 0),
        RootLocation::Interval { lo, hi } => (hi, chain.count_open(lo, hi) > 0),
    };
    inside.then(|| chain.count(&Bound::NegInfinity, &Bound::Finite(hi.clone())))
}

fn bounds(loc: &RootLocation) -> (&Rational, &Rational) {
    match loc {
        RootLocation::Exact(x) => (x, x),
        RootLocation::Interval { lo, hi } => (lo, hi),
    }
}

/// Orders two distinct roots, refining their locations until they separate.
fn separate(pa: &IntPoly, a: &mut RootLocation, pb: &IntPoly, b: &mut RootLocation) -> Ordering {
    loop {
        let ((alo, ahi), (blo, bhi)) = (bounds(a), bounds(b));
        if ahi <= blo {
            return Ordering::Less;
        }
        if bhi <= alo {
            return Ordering::Greater;
        }
        if ahi - alo >= bhi - blo {
            refine_step(pa, a);
        } else {
            refine_step(pb, b);
        }
    }
}

/// Location indices of the roots of `f`, repeated by multiplicity. `own` are
/// isolating locations for the square-free part of `f` and `slots` maps each
/// merged index to one of them.
fn expand(
    f: &Polynomial,
    own: &[RootLocation],
    slots: impl Iterator<Item = Option<usize>>,
) -> Vec<usize> {
    if f.is_constant() {
        return Vec::new();
    }
    let factors: Vec<_> = f
        .squarefree_decomposition()
        .into_iter()
        .map(|(s, m)| (SturmChain::normalized(&s), s, m))
        .collect();
    let mut out = Vec::new();
    for (i, slot) in slots.enumerate() {
        let Some(k) = slot else { continue };
        let (_, _, m) = factors
            .iter()
            .find(|(chain, s, _)| has_root_in(chain, s, &own[k]))
            .expect("every root of the square-free part belongs to a factor");
        out.extend(std::iter::repeat_n(i, *m));
    }
    out
}

/// Checks `lead_1 <= trail_1 <= lead_2 <= trail_2 <= ...` (strict `<` when
/// `strict`), where `trail` has as many entries as `lead` or one fewer.
/// Returns the offending `(lead, trail)` index pair on failure.
fn interleaved(
    lead: &[usize],
    trail: &[usize],
    strict: bool,
) -> std::result::Result<(), (usize, usize)> {
    let ok = |a: usize, b: usize| if strict { a < b } else { a <= b };
    for (i, &t) in trail.iter().enumerate() {
        if !ok(lead[i], t) {
            return Err((lead[i], t));
        }
        if let Some(&next) = lead.get(i + 1) {
            if !ok(t, next) {
                return Err((next, t));
            }
        }
    }
    Ok(())
}

/// Decides whether `f` and `g` alternate (equal degrees) or one interlaces
/// the other (degrees differing by one), reporting the strongest relation.
pub fn alternates(f: &Polynomial, g: &Polynomial) -> Result<InterlaceVerdict> {
    let merged = MergedRoots::new(f, g)?;
    let (df, dg) = (f.deg().unwrap(), g.deg().unwrap());
    if !merged.first_real || !merged.second_real || df.abs_diff(dg) > 1 {
        return Ok(InterlaceVerdict::none(None));
    }
    let (a, b) = (&merged.first, &merged.second);
    if df == dg {
        let first_leads = interleaved(a, b, false);
        let second_leads = interleaved(b, a, false);
        let (relation_for, leader) = match (&first_leads, &second_leads) {
            (Ok(()), Ok(())) => (Leader::Both, Leader::Both),
            (Ok(()), Err(_)) => (Leader::First, Leader::First),
            (Err(_), Ok(())) => (Leader::Second, Leader::Second),
            (Err((x, y)), Err(_)) => {
                let (x, y) = (*x, *y);
                return Ok(InterlaceVerdict::none(Some(merged.witness(x, y))));
            }
        };
        let strict = match relation_for {
            Leader::First => interleaved(a, b, true).is_ok(),
            Leader::Second => interleaved(b, a, true).is_ok(),
            Leader::Both => a.is_empty(),
        };
        return Ok(InterlaceVerdict {
            relation: if strict {
                Relation::StrictlyAlternate
            } else {
                Relation::Alternate
            },
            leader: Some(leader),
            witness: None,
        });
    }
    // degrees differ by one: the larger-degree polynomial leads
    let (lead, trail, leader) = if df > dg {
        (a, b, Leader::First)
    } else {
        (b, a, Leader::Second)
    };
    match interleaved(lead, trail, false) {
        Err((x, y)) => {
            let w = if df > dg {
                merged.witness(x, y)
            } else {
                merged.witness(y, x)
            };
            Ok(InterlaceVerdict::none(Some(w)))
        }
        Ok(()) => {
            let strict = interleaved(lead, trail, true).is_ok();
            Ok(InterlaceVerdict {
                relation: if strict {
                    Relation::StrictlyInterlaces
                } else {
                    Relation::Interlaces
                },
                leader: Some(leader),
                witness: None,
            })
        }
    }
}

/// `g ⪯ f` (or `g ≺ f` when `strict`): `deg f = deg g + 1`, both real-rooted
/// and `alpha_1 <= beta_1 <= alpha_2 <= ... <= beta_{d-1} <= alpha_d`.
pub fn interlaces(g: &Polynomial, f: &Polynomial, strict: bool) -> Result<bool> {
    Ok(interlace_verdict(g, f, strict)?.holds())
}

/// [`interlaces`] with a verdict; on failure the witness pairs a root of `g`
/// (first) with a root of `f` (second) that break the required order. No
/// witness is given when the degrees are wrong or a root is not real.
pub fn interlace_verdict(g: &Polynomial, f: &Polynomial, strict: bool) -> Result<InterlaceVerdict> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() != g.deg().map(|d| d + 1) {
        return Ok(InterlaceVerdict::none(None));
    }
    let merged = MergedRoots::new(g, f)?;
    if !(merged.first_real && merged.second_real) {
        return Ok(InterlaceVerdict::none(None));
    }
    match interleaved(&merged.second, &merged.first, strict) {
        Err((x, y)) => Ok(InterlaceVerdict::none(Some(merged.witness(y, x)))),
        Ok(()) => Ok(InterlaceVerdict {
            relation: if strict {
                Relation::StrictlyInterlaces
            } else {
                Relation::Interlaces
            },
            leader: Some(Leader::Second),
            witness: None,
        }),
    }
}

/// `p_0 ≺ p_1 ≺ ... ≺ p_n` with every link strict.
pub fn chain_check(polys: &[Polynomial]) -> Result<bool> {
    if polys.is_empty() {
        return Err(Error::PreconditionFailed("empty chain".into()));
    }
    if polys.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    for w in polys.windows(2) {
        if !interlaces(&w[0], &w[1], true)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The generalised Sturm sign condition: `p_{i-1}(θ) p_{i+1}(θ) < 0` at every
/// real zero `θ` of `p_i`, for each interior index `i`.
pub fn sturm_sign_condition(polys: &[Polynomial]) -> Result<bool> {
    if polys.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    for i in 1..polys.len().saturating_sub(1) {
        if polys[i].is_constant() {
            continue;
        }
        for theta in AlgebraicRoot::roots_of(&polys[i])? {
            if theta.sign_of(&polys[i - 1]) * theta.sign_of(&polys[i + 1]) >= 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `polys` is degree-graded (`deg p_i = i`) and standard.
pub fn is_graded_standard(polys: &[Polynomial]) -> bool {
    polys
        .iter()
        .enumerate()
        .all(|(i, p)| p.deg() == Some(i) && p.is_standard())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeViolation {
    #[serde(with = "crate::poly::rational_string")]
    pub alpha: Rational,
    #[serde(with = "crate::poly::rational_string")]
    pub beta: Rational,
    pub combination: Polynomial,
    pub rootedness: Rootedness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub samples: usize,
    pub skipped_zero: usize,
    /// Simple roots were required because the inputs strictly alternate.
    pub strict: bool,
    pub violation: Option<ProbeViolation>,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Samples combinations `αf + βg` of two alternating polynomials and checks
/// that each is real-rooted (simple-rooted when the inputs strictly
/// alternate). Only the forward implication can be tested this way.
pub fn obreschkoff_probe(
    f: &Polynomial,
    g: &Polynomial,
    samples: usize,
    seed: u64,
) -> Result<ProbeReport> {
    let verdict = alternates(f, g)?;
    if !verdict.holds() {
        return Err(Error::PreconditionFailed(format!(
            "{} and {} do not alternate",
            f.pretty(),
            g.pretty()
        )));
    }
    let strict = verdict.is_strict();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ProbeReport {
        samples,
        skipped_zero: 0,
        strict,
        violation: None,
    };
    for _ in 0..samples {
        let alpha = rat(rng.gen_range(-20i64..=20), rng.gen_range(1..=10));
        let beta = rat(rng.gen_range(-20i64..=20), rng.gen_range(1..=10));
        let combination = &f.scale(&alpha) + &g.scale(&beta);
        if combination.is_zero() {
            report.skipped_zero += 1;
            continue;
        }
        let rootedness = is_real_rooted(&combination)?;
        let ok = if strict {
            rootedness == Rootedness::RealSimple
        } else {
            rootedness.is_real()
        };
        if !ok {
            report.violation = Some(ProbeViolation {
                alpha,
                beta,
                combination,
                rootedness,
            });
            break;
        }
    }
    Ok(report)
}
