//! Seeded verification suites and their machine-readable reports.
//!
//! Every suite is deterministic in `(max_n, samples, seed)`: instance `i`
//! draws from its own ChaCha stream, so the fan-out across threads does not
//! change what is generated.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ferrers::{
    count_reverse_ssyt, ferrers_poset, hook_content_order_poly, partitions_of,
    verify_cover_interlacing,
};
use crate::interlacing::{chain_check, interlaces};
use crate::poly::{format_rational, int, rat, Polynomial, Rational};
use crate::posets::{
    disjoint_union, e_inverse, e_operator, label_permutations, natural_posets, ordinal_sum,
    random_poset, sp_build, LabelledPoset, OrdinalVariant, SpExpr,
};
use crate::random::{self, RootRange};
use crate::rootedness::{
    is_real_rooted, log_concavity_check, roots_in_interval, LogConcavity, Rootedness,
};
use crate::transforms::{
    alt_diamond, diamond, diamond_derivative_chain, h_xi, hermite_poulain, lphi_diamond,
    schur_product,
};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: Value,
    pub expected: Value,
    pub got: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// 0 when every instance passed, 1 when a violation was found.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} instances, {} failures (seed {})",
            self.suite,
            self.instances,
            self.failures.len(),
            self.seed
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
}

/// Instance count and failures of one run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Outcome {
    pub instances: usize,
    pub failures: Vec<Failure>,
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &str;
    fn description(&self) -> &str;
    fn default_max_n(&self) -> usize;
    fn default_samples(&self) -> usize;
    fn run(&self, params: &Params) -> Outcome;
}

struct Builtin {
    name: &'static str,
    description: &'static str,
    max_n: usize,
    samples: usize,
    run: fn(&Params) -> Outcome,
}

impl Suite for Builtin {
    fn name(&self) -> &str {
        self.name
    }

    fn description(&self) -> &str {
        self.description
    }

    fn default_max_n(&self) -> usize {
        self.max_n
    }

    fn default_samples(&self) -> usize {
        self.samples
    }

    fn run(&self, params: &Params) -> Outcome {
        (self.run)(params)
    }
}

/// Caller overrides; `None` keeps the suite default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_n: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
}

pub struct Registry {
    suites: Vec<Box<dyn Suite>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry { suites: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        for s in builtin_suites() {
            r.register(Box::new(s));
        }
        r
    }

    /// Adds a suite, replacing any suite with the same name.
    pub fn register(&mut self, suite: Box<dyn Suite>) {
        self.suites.retain(|s| s.name() != suite.name());
        self.suites.push(suite);
    }

    pub fn suites(&self) -> impl Iterator<Item = &dyn Suite> {
        self.suites.iter().map(|s| s.as_ref())
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites().find(|s| s.name() == name)
    }

    /// Runs one suite, or every suite for `"all"`. Under `all` the overrides
    /// for `max_n` and `samples` cap each suite's defaults.
    pub fn run(&self, name: &str, config: &SuiteConfig) -> Result<VerificationReport> {
        let seed = config.seed.unwrap_or(DEFAULT_SEED);
        let outcome = if name == "all" {
            let parts: Vec<(String, Outcome)> = self
                .suites
                .par_iter()
                .map(|s| {
                    let params = Params {
                        max_n: config
                            .max_n
                            .map_or(s.default_max_n(), |m| m.min(s.default_max_n())),
                        samples: config
                            .samples
                            .map_or(s.default_samples(), |k| k.min(s.default_samples())),
                        seed,
                    };
                    (s.name().to_string(), s.run(&params))
                })
                .collect();
            let mut all = Outcome::default();
            for (suite, outcome) in parts {
                all.instances += outcome.instances;
                all.failures
                    .extend(outcome.failures.into_iter().map(|f| Failure {
                        inputs: json!({ "suite": suite, "case": f.inputs }),
                        ..f
                    }));
            }
            all
        } else {
            let s = self
                .get(name)
                .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
            s.run(&Params {
                max_n: config.max_n.unwrap_or(s.default_max_n()),
                samples: config.samples.unwrap_or(s.default_samples()),
                seed,
            })
        };
        let mut failures = outcome.failures;
        failures.sort_by_cached_key(|f| serde_json::to_string(f).expect("failure serializes"));
        Ok(VerificationReport {
            suite: name.to_string(),
            seed,
            instances: outcome.instances,
            failures,
        })
    }
}

/// Runs a built-in suite.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<VerificationReport> {
    Registry::builtin().run(name, config)
}

pub fn suite_names() -> Vec<&'static str> {
    builtin_suites().iter().map(|s| s.name).collect()
}

/// The generator for instance `i`.
pub fn instance_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

/// `Ok(None)` on success, `Ok(Some((expected, got)))` on a violation.
type Verdict = Result<Option<(Value, Value)>>;

fn record(inputs: Value, verdict: Verdict) -> Option<Failure> {
    match verdict {
        Ok(None) => None,
        Ok(Some((expected, got))) => Some(Failure {
            inputs,
            expected,
            got,
        }),
        Err(e) => Some(Failure {
            inputs,
            expected: json!("no error"),
            got: json!(e.to_string()),
        }),
    }
}

fn expect_eq<T: Serialize + PartialEq>(expected: &T, got: &T) -> Option<(Value, Value)> {
    (expected != got).then(|| (json!(expected), json!(got)))
}

fn expect_true(what: &str, ok: bool) -> Option<(Value, Value)> {
    (!ok).then(|| (json!(what), json!(format!("not {what}"))))
}

fn sampled<F>(params: &Params, check: F) -> Outcome
where
    F: Fn(&mut ChaCha8Rng) -> (Value, Verdict) + Sync,
{
    let failures = (0..params.samples)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = instance_rng(params.seed, i);
            let (inputs, verdict) = check(&mut rng);
            record(json!({ "instance": i, "data": inputs }), verdict)
        })
        .collect();
    Outcome {
        instances: params.samples,
        failures,
    }
}

fn exhaustive<T: Sync, F>(items: &[T], check: F) -> Outcome
where
    F: Fn(&T) -> (Value, Verdict) + Sync,
{
    let failures = items
        .par_iter()
        .filter_map(|item| {
            let (inputs, verdict) = check(item);
            record(inputs, verdict)
        })
        .collect();
    Outcome {
        instances: items.len(),
        failures,
    }
}

fn wide_range() -> RootRange {
    RootRange::new(int(-3), int(2), 4)
}

fn open_unit_range() -> RootRange {
    RootRange::unit_negative()
}

fn nonzero_roots<R: Rng + ?Sized>(rng: &mut R, n: usize, range: &RootRange) -> Vec<Rational> {
    let mut out: Vec<Rational> = (0..n)
        .map(|_| loop {
            let r = range.sample(rng);
            if r != int(0) {
                break r;
            }
        })
        .collect();
    out.sort();
    out
}

fn degree<R: Rng + ?Sized>(rng: &mut R, lo: usize, max_n: usize) -> usize {
    rng.gen_range(lo..=max_n.max(lo))
}

fn schur(p: &Params) -> Outcome {
    sampled(p, |rng| {
        let d = degree(rng, 1, p.max_n);
        let f_roots = nonzero_roots(rng, d, &wide_range());
        let side = if rng.gen_bool(0.5) {
            RootRange::new(rat(1, 8), int(3), 4)
        } else {
            RootRange::new(int(-3), rat(-1, 8), 4)
        };
        let d = degree(rng, 1, p.max_n);
        let g_roots = nonzero_roots(rng, d, &side);
        let f = random::with_roots(rng, &f_roots, false);
        let g = random::with_roots(rng, &g_roots, false);
        let prod = schur_product(&f, &g);
        let verdict = is_real_rooted(&prod).map(|r| expect_eq(&Rootedness::RealSimple, &r));
        (json!({ "f": f, "g": g }), verdict)
    })
}

fn closure_with(p: &Params, product: fn(&Polynomial, &Polynomial) -> Polynomial) -> Outcome {
    let range = RootRange::unit_negative();
    sampled(p, |rng| {
        let d = degree(rng, 1, p.max_n);
        let f = random::real_rooted(rng, d, &range, false);
        let d = degree(rng, 1, p.max_n);
        let h = random::real_rooted(rng, d, &range, false);
        let verdict = roots_in_interval(&product(&f, &h), &int(-1), &int(0), true)
            .map(|ok| expect_true("real-rooted in [-1, 0]", ok));
        (json!({ "f": f, "h": h }), verdict)
    })
}

fn diamond_closure(p: &Params) -> Outcome {
    closure_with(p, diamond)
}

fn alt_product(p: &Params) -> Outcome {
    closure_with(p, alt_diamond)
}

/// Half the instances are strict: simple-rooted `f`, `g ≺ f`, and `h`
/// simple-rooted in `(-1, 0)`.
fn diamond_interlace(p: &Params) -> Outcome {
    sampled(p, |rng| {
        let strict = rng.gen_bool(0.5);
        let d = degree(rng, 1, p.max_n);
        let (g, f) = random::interlacing_pair(rng, d, &wide_range(), strict, true);
        let dh = degree(rng, 1, p.max_n);
        let h = if strict {
            let roots = random::distinct_roots(rng, dh, &open_unit_range());
            random::with_roots(rng, &roots, true)
        } else {
            random::real_rooted(rng, dh, &RootRange::unit_negative(), true)
        };
        let verdict = interlaces(&diamond(&g, &h), &diamond(&f, &h), strict).map(|ok| {
            expect_true(
                if strict {
                    "g◇h ≺ f◇h"
                } else {
                    "g◇h ⪯ f◇h"
                },
                ok,
            )
        });
        (json!({ "g": g, "f": f, "h": h, "strict": strict }), verdict)
    })
}

fn derivative_chain(p: &Params) -> Outcome {
    sampled(p, |rng| {
        let d = degree(rng, 1, p.max_n);
        let f_roots = random::distinct_roots(rng, d, &wide_range());
        let f = random::with_roots(rng, &f_roots, true);
        let d = degree(rng, 1, p.max_n);
        let h_roots = random::distinct_roots(rng, d, &open_unit_range());
        let h = random::with_roots(rng, &h_roots, true);
        let chain = diamond_derivative_chain(&f, &h);
        let verdict = (|| {
            let top = is_real_rooted(chain.last().expect("nonempty chain"))?;
            if top != Rootedness::RealSimple {
                return Ok(expect_eq(&Rootedness::RealSimple, &top));
            }
            Ok(expect_true(
                "strict chain φ(f^(d)) ≺ ... ≺ φ(f)",
                chain_check(&chain)?,
            ))
        })();
        (json!({ "f": f, "h": h }), verdict)
    })
}

fn e_identity(p: &Params) -> Outcome {
    sampled(p, |rng| {
        let d = degree(rng, 0, p.max_n);
        let f = random::arbitrary(rng, d);
        let d = degree(rng, 0, p.max_n);
        let g = random::arbitrary(rng, d);
        let via_e = e_operator(&(&e_inverse(&f) * &e_inverse(&g)));
        (
            json!({ "f": f, "g": g }),
            Ok(expect_eq(&diamond(&f, &g), &via_e)),
        )
    })
}

fn lphi_identity(p: &Params) -> Outcome {
    sampled(p, |rng| {
        let d = degree(rng, 0, p.max_n);
        let f = random::arbitrary(rng, d);
        let d = degree(rng, 0, p.max_n);
        let h = random::arbitrary(rng, d);
        let xi = rat(rng.gen_range(-24..=24), rng.gen_range(1..=8));
        let lphi = lphi_diamond(&f, &h, &xi);
        let via_hp = hermite_poulain(&h_xi(&h, &xi), &f.translate(&xi));
        let verdict = Ok(expect_eq(&lphi, &via_hp).or_else(|| {
            expect_eq(
                &lphi_diamond(&f.derivative(1), &h, &xi),
                &lphi.derivative(1),
            )
        }));
        (
            json!({ "f": f, "h": h, "xi": format_rational(&xi) }),
            verdict,
        )
    })
}

fn log_concavity(p: &Params) -> Outcome {
    let range = RootRange::new(int(-4), int(4), 3);
    sampled(p, |rng| {
        let d = degree(rng, 1, p.max_n);
        let f = random::real_rooted(rng, d, &range, false);
        let verdict =
            log_concavity_check(&f).map(|r| expect_eq(&LogConcavity::StrictlyLogConcave, &r));
        (json!({ "f": f }), verdict)
    })
}

/// `f = x^j · p` with `p(0) ≠ 0` and `deg g >= j`; roots of `g` are drawn
/// from a coarse grid so that repeated roots are common.
fn hermite_poulain_suite(p: &Params) -> Outcome {
    let grid = RootRange::new(int(-2), int(2), 2);
    sampled(p, |rng| {
        let j = rng.gen_range(0..=2usize.min(p.max_n));
        let d = degree(rng, 0, p.max_n - j);
        let rest = nonzero_roots(rng, d, &wide_range());
        let f = &Polynomial::monomial(int(1), j) * &random::with_roots(rng, &rest, false);
        let d = degree(rng, j.max(1), p.max_n);
        let g = random::real_rooted(rng, d, &grid, false);
        let h = hermite_poulain(&f, &g);
        let verdict = (|| {
            if !is_real_rooted(&h)?.is_real() {
                return Ok(expect_true("f(D)g real-rooted", false));
            }
            let multiple_h = h.gcd(&h.derivative(1)).squarefree_part();
            let multiple_g = g.gcd(&g.derivative(1));
            Ok(expect_true(
                "multiple zeros of f(D)g are multiple zeros of g",
                multiple_h.divides(&multiple_g),
            ))
        })();
        (json!({ "f": f, "g": g }), verdict)
    })
}

fn sp_deletion(p: &Params) -> Outcome {
    sampled(p, |rng| {
        let d = degree(rng, 1, p.max_n);
        let expr = SpExpr::random(rng, d);
        let s = sp_build(&expr);
        let verdict = (|| {
            let e = s.e_polynomial()?;
            if !is_real_rooted(&e)?.is_real() {
                return Ok(Some((json!("E(S) real-rooted"), json!(e))));
            }
            for x in 0..s.len() {
                let ex = s.delete_element(x)?.e_polynomial()?;
                if !interlaces(&ex, &e, false)? {
                    return Ok(Some((
                        json!({ "deleted": s.names()[x], "relation": "E(S \\ x) ⪯ E(S)" }),
                        json!({ "e_s": e, "e_s_minus_x": ex }),
                    )));
                }
            }
            Ok(None)
        })();
        (json!({ "expr": expr.to_string() }), verdict)
    })
}

/// Ordinal-sum and disjoint-union identities, plus invariance of `E` under an
/// order-preserving relabelling.
fn ordinal_sums(p: &Params) -> Outcome {
    sampled(p, |rng| {
        let d = degree(rng, 1, p.max_n);
        let ep = SpExpr::random(rng, d);
        let d = degree(rng, 1, p.max_n);
        let eq = SpExpr::random(rng, d);
        let na = degree(rng, 1, p.max_n);
        let density = rng.gen_range(0.0..1.0);
        let a = random_poset(rng, na, density);
        let nb = degree(rng, 1, p.max_n);
        let density = rng.gen_range(0.0..1.0);
        let b = random_poset(rng, nb, density);
        let stretch = rng.gen_range(2..=5u64);
        let verdict = (|| {
            let (sp, sq) = (sp_build(&ep), sp_build(&eq));
            let (e_p, e_q) = (sp.e_polynomial()?, sq.e_polynomial()?);
            let product = &e_p * &e_q;
            let s1 = ordinal_sum(&sp, &sq, OrdinalVariant::One).e_polynomial()?;
            let s0 = ordinal_sum(&sp, &sq, OrdinalVariant::Zero).e_polynomial()?;
            let x = Polynomial::x();
            let xp1 = Polynomial::from_ints(&[1, 1]);
            let union = disjoint_union(&a, &b);
            let (ea, eb) = (a.e_polynomial()?, b.e_polynomial()?);
            let e_union = union.e_polynomial()?;
            let omega = &a.order_polynomial()? * &b.order_polynomial()?;
            let omega_union = union.order_polynomial()?;
            let stretched: Vec<u64> = a.labels().iter().map(|l| l * stretch + 7).collect();
            let e_stretched = a.with_labels(stretched)?.e_polynomial()?;
            Ok(expect_eq(&product, &s1)
                .or_else(|| expect_eq(&(&xp1 * &product), &(&x * &s0)))
                .or_else(|| expect_eq(&diamond(&ea, &eb), &e_union))
                .or_else(|| expect_eq(&omega, &omega_union))
                .or_else(|| expect_eq(&ea, &e_stretched)))
        })();
        (
            json!({
                "p": ep.to_string(),
                "q": eq.to_string(),
                "a": a.to_json(),
                "b": b.to_json(),
            }),
            verdict,
        )
    })
}

fn partitions_up_to(max_n: usize) -> Vec<crate::ferrers::Partition> {
    (1..=max_n).flat_map(partitions_of).collect()
}

fn ferrers(p: &Params) -> Outcome {
    exhaustive(&partitions_up_to(p.max_n), |lambda| {
        let verdict = verify_cover_interlacing(lambda)
            .map(|r| (!r.passed()).then(|| (json!("all covers interlace"), json!(r))));
        (json!({ "lambda": lambda }), verdict)
    })
}

fn hook_content(p: &Params) -> Outcome {
    let cases: Vec<_> = partitions_up_to(p.max_n)
        .into_iter()
        .flat_map(|l| (0..=p.max_n).map(move |m| (l.clone(), m)))
        .collect();
    exhaustive(&cases, |(lambda, m)| {
        let omega = hook_content_order_poly(lambda);
        let value = omega.evaluate(&int(*m as i64));
        let count = Rational::from_integer(count_reverse_ssyt(lambda, *m).into());
        let verdict = (|| {
            let from_poset = ferrers_poset(lambda).order_polynomial()?;
            Ok(
                expect_eq(&format_rational(&count), &format_rational(&value))
                    .or_else(|| expect_eq(&omega, &from_poset)),
            )
        })();
        (json!({ "lambda": lambda, "m": m }), verdict)
    })
}

/// Every labelled poset on `1..=max_n` elements, one per isomorphism-
/// compatible labelling.
fn ns_small(p: &Params) -> Outcome {
    let cases: Vec<LabelledPoset> = (1..=p.max_n)
        .flat_map(|n| {
            let perms = label_permutations(n);
            natural_posets(n).into_iter().flat_map(move |poset| {
                perms
                    .clone()
                    .into_iter()
                    .map(move |l| poset.with_labels(l).expect("labels are a permutation"))
            })
        })
        .collect();
    exhaustive(&cases, |poset| {
        let verdict = poset.e_polynomial().and_then(|e| {
            let ok = roots_in_interval(&e, &int(-1), &int(0), true)?;
            Ok((!ok).then(|| (json!("real-rooted in [-1, 0]"), json!(e))))
        });
        (json!({ "poset": poset.to_json() }), verdict)
    })
}

fn builtin_suites() -> Vec<Builtin> {
    let b = |name, description, max_n, samples, run| Builtin {
        name,
        description,
        max_n,
        samples,
        run,
    };
    vec![
        b(
            "schur",
            "Schur product of real-rooted f and one-signed g is simple-rooted",
            8,
            200,
            schur as fn(&Params) -> Outcome,
        ),
        b(
            "diamond-closure",
            "[-1,0]-rooted inputs give a [-1,0]-rooted diamond product",
            8,
            200,
            diamond_closure,
        ),
        b(
            "diamond-interlace",
            "g ⪯ f (≺) implies g◇h ⪯ f◇h (≺)",
            8,
            200,
            diamond_interlace,
        ),
        b(
            "chain",
            "φ(f^(d)) ≺ ... ≺ φ(f) for φ = ·◇h",
            8,
            100,
            derivative_chain,
        ),
        b(
            "sp-deletion",
            "E(S \\ x) ⪯ E(S) for series-parallel S",
            8,
            300,
            sp_deletion,
        ),
        b(
            "ferrers",
            "E(P_μ) ⪯ E(P_λ) for every Young cover",
            6,
            0,
            ferrers,
        ),
        b(
            "hook-content",
            "hook-content order polynomial counts reverse SSYT",
            6,
            0,
            hook_content,
        ),
        b(
            "ns-small",
            "every labelled poset on few elements is [-1,0]-real-rooted",
            4,
            0,
            ns_small,
        ),
        b(
            "lphi-identity",
            "L_φ(f) = H_ξ(d/dz) f(ξ+z) and ∂L_φ(f)/∂z = L_φ(f')",
            8,
            100,
            lphi_identity,
        ),
        b(
            "alt-product",
            "[-1,0]-rooted inputs give a [-1,0]-rooted alternate product",
            8,
            200,
            alt_product,
        ),
        b("e-identity", "f◇g = ℰ(ℰ⁻¹f · ℰ⁻¹g)", 8, 200, e_identity),
        b(
            "ordinal-sum",
            "ordinal-sum and disjoint-union identities for E",
            6,
            100,
            ordinal_sums,
        ),
        b(
            "log-concavity",
            "real-rooted coefficient sequences are strictly log-concave",
            10,
            300,
            log_concavity,
        ),
        b(
            "hermite-poulain",
            "f(D)g is real-rooted; its multiple zeros are multiple zeros of g",
            8,
            100,
            hermite_poulain_suite,
        ),
    ]
}
