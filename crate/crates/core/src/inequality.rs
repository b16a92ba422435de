//! Exact verification of the Turán-number inequalities used to close the
//! extremal induction. Each instance has the form
//!
//! ```text
//! A + sum_i B_i * log2(c_i)  <  C
//! ```
//!
//! and is decided by comparing `prod c_i^B_i * 2^A` with `2^C` in big-integer
//! arithmetic.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::turan_edges;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    /// `t_{k-1}(k+1) + (log 5 + k - 3)(n-k-1) + t_{k-1}(n-k-1) < t_{k-1}(n)`,
    /// for `n > k >= 4`.
    CliquePlusOne,
    /// `t_{k-1}(k) + (log 3 + k - 3)(n-k) + t_{k-1}(n-k) < t_{k-1}(n)`,
    /// for `n > k >= 4`.
    Clique,
    /// `log 40 + (log 3 + 1)(n-4) + t_3(n-4) < t_3(n)`, for `n >= 9`.
    FourClique,
}

impl Bound {
    pub const ALL: [Bound; 3] = [Bound::CliquePlusOne, Bound::Clique, Bound::FourClique];

    pub fn name(self) -> &'static str {
        match self {
            Bound::CliquePlusOne => "clique-plus-one",
            Bound::Clique => "clique",
            Bound::FourClique => "four-clique",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactInequality {
    pub bound: Bound,
    pub description: String,
    pub k: u64,
    pub n: u64,
    /// Integer part `A` of the left side.
    pub integer_part: u64,
    /// `(c, B)` pairs: the left side carries `B * log2(c)`.
    pub log_terms: Vec<(u64, u64)>,
    /// Right side `C`.
    pub right_side: u64,
    /// Strict inequality holds.
    pub holds: bool,
    /// Both sides are equal.
    pub equality: bool,
}

impl ExactInequality {
    fn decide(bound: Bound, k: u64, n: u64, integer_part: u64, log_terms: Vec<(u64, u64)>, right_side: u64) -> Self {
        let lhs = log_terms
            .iter()
            .fold(BigUint::one() << integer_part, |acc, &(c, b)| acc * BigUint::from(c).pow(b as u32));
        let rhs = BigUint::one() << right_side;
        let logs: Vec<String> = log_terms.iter().map(|(c, b)| format!("{b}*log2({c})")).collect();
        ExactInequality {
            bound,
            description: format!("{integer_part} + {} < {right_side}", logs.join(" + ")),
            k,
            n,
            integer_part,
            log_terms,
            right_side,
            holds: lhs < rhs,
            equality: lhs == rhs,
        }
    }
}

fn t(n: u64, r: u64) -> u64 {
    turan_edges(n, r).expect("part count is positive")
}

fn check_pair(k: u64, n: u64) -> Result<()> {
    if k < 4 || n <= k {
        return Err(Error::InvalidArgument(format!("need n > k >= 4, got k = {k}, n = {n}")));
    }
    Ok(())
}

pub fn clique_plus_one(k: u64, n: u64) -> Result<ExactInequality> {
    check_pair(k, n)?;
    let rest = n - k - 1;
    let a = t(k + 1, k - 1) + (k - 3) * rest + t(rest, k - 1);
    Ok(ExactInequality::decide(Bound::CliquePlusOne, k, n, a, vec![(5, rest)], t(n, k - 1)))
}

pub fn clique(k: u64, n: u64) -> Result<ExactInequality> {
    check_pair(k, n)?;
    let rest = n - k;
    let a = t(k, k - 1) + (k - 3) * rest + t(rest, k - 1);
    Ok(ExactInequality::decide(Bound::Clique, k, n, a, vec![(3, rest)], t(n, k - 1)))
}

pub fn four_clique(n: u64) -> Result<ExactInequality> {
    if n < 9 {
        return Err(Error::InvalidArgument(format!("need n >= 9, got {n}")));
    }
    let rest = n - 4;
    // log2(40) = 3 + log2(5).
    let a = 3 + rest + t(rest, 3);
    Ok(ExactInequality::decide(Bound::FourClique, 4, n, a, vec![(5, 1), (3, rest)], t(n, 3)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranges {
    /// Clique orders for the two general bounds.
    pub k: RangeInclusive<u64>,
    /// Largest `n` for the two general bounds (`n` starts at `k + 1`).
    pub n_max: u64,
    /// `n` range for the four-clique bound.
    pub four_clique_n: RangeInclusive<u64>,
}

impl Default for Ranges {
    fn default() -> Self {
        Ranges {
            k: 4..=12,
            n_max: 200,
            four_clique_n: 9..=500,
        }
    }
}

/// Every instance of `bound` over `ranges`.
pub fn sweep(bound: Bound, ranges: &Ranges) -> Result<Vec<ExactInequality>> {
    match bound {
        Bound::FourClique => {
            if *ranges.four_clique_n.start() < 9 {
                return Err(Error::InvalidArgument("four-clique bound needs n >= 9".into()));
            }
            ranges.four_clique_n.clone().map(four_clique).collect()
        }
        Bound::CliquePlusOne | Bound::Clique => {
            if *ranges.k.start() < 4 {
                return Err(Error::InvalidArgument("clique bounds need k >= 4".into()));
            }
            let f = if bound == Bound::Clique { clique } else { clique_plus_one };
            let mut out = Vec::new();
            for k in ranges.k.clone() {
                for n in k + 1..=ranges.n_max {
                    out.push(f(k, n)?);
                }
            }
            Ok(out)
        }
    }
}
