//! Partitions, Young's lattice, Ferrers posets and the hook-content formula.
//!
//! Cells are `(i, j)` = (row, column), 1-based; the content of a cell is
//! `j - i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interlacing::interlaces;
use crate::poly::{int, Polynomial, Rational};
use crate::posets::{e_operator, LabelledPoset};
use crate::rootedness::{is_real_rooted, roots_in_interval};
use crate::transforms::diamond;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
            .collect()
    }

    /// Number of cells in column `j`.
    fn column_len(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&len| len >= j).count()
    }

    pub fn hook(&self, (i, j): (usize, usize)) -> usize {
        (self.parts[i - 1] - j + 1) + (self.column_len(j) - i + 1) - 1
    }

    pub fn content((i, j): (usize, usize)) -> i64 {
        j as i64 - i as i64
    }

    /// Corner cells, top row first.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.parts.len())
            .filter(|&i| i + 1 == self.parts.len() || self.parts[i + 1] < self.parts[i])
            .map(|i| (i + 1, self.parts[i]))
            .collect()
    }

    /// `λ` with the corner in row `i` removed.
    fn remove_corner(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    fn hook_product(&self) -> Rational {
        self.cells()
            .into_iter()
            .map(|u| int(self.hook(u) as i64))
            .product()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Space- or comma-separated parts, optionally in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellStats {
    pub cell: (usize, usize),
    pub hook: usize,
    pub content: i64,
}

pub fn hooks_and_contents(lambda: &Partition) -> Vec<CellStats> {
    lambda
        .cells()
        .into_iter()
        .map(|cell| CellStats {
            cell,
            hook: lambda.hook(cell),
            content: Partition::content(cell),
        })
        .collect()
}

/// `Ω(P_λ, ω, z) = Π (z + c(u)) / h(u)`.
pub fn hook_content_order_poly(lambda: &Partition) -> Polynomial {
    let numerator = lambda
        .cells()
        .into_iter()
        .fold(Polynomial::one(), |acc, u| {
            &acc * &Polynomial::from_coeffs(vec![int(Partition::content(u)), int(1)])
        });
    numerator.scale(&lambda.hook_product().recip())
}

/// Partitions covered by `λ` in Young's lattice, one per corner, top row
/// first.
pub fn young_covers_down(lambda: &Partition) -> Result<Vec<Partition>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(lambda
        .corners()
        .into_iter()
        .map(|(i, _)| lambda.remove_corner(i))
        .collect())
}

/// `P_λ` with the column-strict labelling that numbers cells row by row from
/// the last row up, left to right in each row.
pub fn ferrers_poset(lambda: &Partition) -> LabelledPoset {
    let cells = lambda.cells();
    let index = |c: (usize, usize)| cells.iter().position(|&d| d == c).unwrap();
    let mut rel = Vec::new();
    for &(i, j) in &cells {
        if j < lambda.parts[i - 1] {
            rel.push((index((i, j)), index((i, j + 1))));
        }
        if i < lambda.parts.len() && j <= lambda.parts[i] {
            rel.push((index((i, j)), index((i + 1, j))));
        }
    }
    let mut labels = vec![0u64; cells.len()];
    let mut next = 1;
    for i in (1..=lambda.parts.len()).rev() {
        for j in 1..=lambda.parts[i - 1] {
            labels[index((i, j))] = next;
            next += 1;
        }
    }
    let names = cells.iter().map(|(i, j)| format!("{i},{j}")).collect();
    LabelledPoset::new(names, &rel, labels).expect("Ferrers poset is a poset")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EMethod {
    /// `ℰ` applied to the hook-content order polynomial.
    HookContent,
    /// Peel corners: `E(P_λ) = C (x + c(m)) ◇ E(P_μ)`.
    Recursion,
    /// Count surjective partitions on the Ferrers poset.
    Enumeration,
}

impl FromStr for EMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hook-content" | "hook_content" => Ok(EMethod::HookContent),
            "recursion" => Ok(EMethod::Recursion),
            "enumeration" => Ok(EMethod::Enumeration),
            _ => Err(Error::parse(0, format!("unknown method {s:?}"))),
        }
    }
}

pub fn ferrers_e_poly(lambda: &Partition, method: EMethod) -> Result<Polynomial> {
    match method {
        EMethod::HookContent => Ok(e_operator(&hook_content_order_poly(lambda))),
        EMethod::Recursion => Ok(recursive_e_poly(lambda)),
        EMethod::Enumeration => ferrers_poset(lambda).e_polynomial(),
    }
}

fn recursive_e_poly(lambda: &Partition) -> Polynomial {
    let Some(&(i, j)) = lambda.corners().last() else {
        return Polynomial::one();
    };
    let mu = lambda.remove_corner(i);
    let c = mu.hook_product() / lambda.hook_product();
    let factor = Polynomial::from_coeffs(vec![int(Partition::content((i, j))), int(1)]).scale(&c);
    diamond(&factor, &recursive_e_poly(&mu))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCheck {
    pub mu: Partition,
    pub e_mu: Polynomial,
    pub interlaces: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub lambda: Partition,
    pub e_lambda: Polynomial,
    pub real_rooted: bool,
    pub roots_in_unit_interval: bool,
    pub methods_agree: bool,
    pub covers: Vec<CoverCheck>,
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        self.real_rooted
            && self.roots_in_unit_interval
            && self.methods_agree
            && self.covers.iter().all(|c| c.interlaces)
    }
}

/// Checks `E(P_μ) ⪯ E(P_λ)` for every `μ` covered by `λ`.
pub fn verify_cover_interlacing(lambda: &Partition) -> Result<CoverReport> {
    let mus = young_covers_down(lambda)?;
    let e_lambda = ferrers_e_poly(lambda, EMethod::HookContent)?;
    let methods_agree = [EMethod::Recursion, EMethod::Enumeration]
        .into_iter()
        .map(|m| ferrers_e_poly(lambda, m))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|e| *e == e_lambda);
    let covers = mus
        .into_iter()
        .map(|mu| {
            let e_mu = ferrers_e_poly(&mu, EMethod::HookContent)?;
            let interlaces = interlaces(&e_mu, &e_lambda, false)?;
            Ok(CoverCheck {
                mu,
                e_mu,
                interlaces,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoverReport {
        real_rooted: is_real_rooted(&e_lambda)?.is_real(),
        roots_in_unit_interval: roots_in_interval(&e_lambda, &int(-1), &int(0), true)?,
        lambda: lambda.clone(),
        e_lambda,
        methods_agree,
        covers,
    })
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Reverse semistandard tableaux of shape `λ` with entries in `[1, m]`:
/// weakly decreasing along rows, strictly decreasing down columns. Counted
/// by filling cells in row-major order.
pub fn count_reverse_ssyt(lambda: &Partition, m: usize) -> u128 {
    fn go(cells: &[(usize, usize)], k: usize, fill: &mut Vec<Vec<usize>>, m: usize) -> u128 {
        let Some(&(i, j)) = cells.get(k) else {
            return 1;
        };
        let row_max = if j > 1 { fill[i - 1][j - 2] } else { m };
        let col_max = if i > 1 {
            fill[i - 2][j - 1].saturating_sub(1)
        } else {
            m
        };
        let mut total = 0;
        for v in 1..=row_max.min(col_max) {
            fill[i - 1][j - 1] = v;
            total += go(cells, k + 1, fill, m);
        }
        total
    }
    let mut fill: Vec<Vec<usize>> = lambda.parts.iter().map(|&len| vec![0; len]).collect();
    go(&lambda.cells(), 0, &mut fill, m)
}
