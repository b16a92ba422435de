//! ℓ_p norms of nonnegative integer vectors and an exact Hölder check.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::count::decimal;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormValue {
    pub p: f64,
    pub value: f64,
    /// `sum x(t)^p`, exact, when `p` is a positive integer.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "optional_decimal")]
    pub power_sum: Option<BigUint>,
}

fn optional_decimal<S: serde::Serializer>(value: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => decimal(v, s),
        None => s.serialize_none(),
    }
}

/// `sum x(t)^s` in exact arithmetic.
pub fn power_sum(x: &[u64], s: u32) -> BigUint {
    x.iter().map(|&v| BigUint::from(v).pow(s)).sum()
}

pub fn lp_norm(x: &[u64], p: f64) -> Result<NormValue> {
    if p.is_nan() || p <= 0.0 || p.is_infinite() {
        return Err(Error::InvalidArgument(format!("norm exponent must be positive, got {p}")));
    }
    if p.fract() == 0.0 && p <= u32::MAX as f64 {
        let sum = power_sum(x, p as u32);
        let value = if p == 1.0 {
            sum.to_f64().unwrap_or(f64::INFINITY)
        } else if p == 2.0 {
            sum.to_f64().unwrap_or(f64::INFINITY).sqrt()
        } else {
            sum.to_f64().unwrap_or(f64::INFINITY).powf(1.0 / p)
        };
        return Ok(NormValue {
            p,
            value,
            power_sum: Some(sum),
        });
    }
    let sum: f64 = x.iter().map(|&v| (v as f64).powf(p)).sum();
    Ok(NormValue {
        p,
        value: sum.powf(1.0 / p),
        power_sum: None,
    })
}

/// Why equality holds in Hölder's inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Proportionality {
    /// The vector at this index is zero, so both sides vanish.
    ZeroVector(usize),
    /// `x_k * den_k = num_k * x_reference` for every `k`.
    Scales { reference: usize, scales: Vec<(u64, u64)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolderCheck {
    pub s: usize,
    /// `|| prod_k x_k ||_1`.
    #[serde(serialize_with = "decimal")]
    pub lhs: BigUint,
    /// `lhs^s`.
    #[serde(serialize_with = "decimal")]
    pub lhs_power: BigUint,
    /// `prod_k ||x_k||_s^s`, the `s`-th power of the right side.
    #[serde(serialize_with = "decimal")]
    pub rhs_power: BigUint,
    pub holds: bool,
    pub equality: bool,
    pub proportionality: Option<Proportionality>,
}

/// Compares `||prod x_k||_1^s` with `prod ||x_k||_s^s` exactly.
pub fn holder_check(vectors: &[Vec<u64>]) -> Result<HolderCheck> {
    let first = vectors
        .first()
        .ok_or_else(|| Error::InvalidArgument("need at least one vector".into()))?;
    let len = first.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != len) {
        return Err(Error::LengthMismatch {
            expected: len,
            found: bad.len(),
        });
    }
    let s = vectors.len();
    let lhs: BigUint = (0..len)
        .map(|t| vectors.iter().fold(BigUint::one(), |acc, x| acc * x[t]))
        .sum();
    let lhs_power = lhs.pow(s as u32);
    let rhs_power = vectors
        .iter()
        .fold(BigUint::one(), |acc, x| acc * power_sum(x, s as u32));
    Ok(HolderCheck {
        s,
        holds: lhs_power <= rhs_power,
        equality: lhs_power == rhs_power,
        proportionality: proportionality(vectors),
        lhs,
        lhs_power,
        rhs_power,
    })
}

/// A witness that the vectors are pairwise proportional or that one of them
/// is zero; `None` when neither holds.
pub fn proportionality(vectors: &[Vec<u64>]) -> Option<Proportionality> {
    if let Some(i) = vectors.iter().position(|x| x.iter().all(|&v| v == 0)) {
        return Some(Proportionality::ZeroVector(i));
    }
    let reference = &vectors[0];
    let t = reference.iter().position(|&v| v != 0)?;
    let mut scales = Vec::with_capacity(vectors.len());
    for x in vectors {
        let g = x[t].gcd(&reference[t]);
        let (num, den) = (x[t] / g, reference[t] / g);
        let matches = x
            .iter()
            .zip(reference)
            .all(|(&a, &r)| a as u128 * den as u128 == num as u128 * r as u128);
        if !matches {
            return None;
        }
        scales.push((num, den));
    }
    Some(Proportionality::Scales { reference: 0, scales })
}

impl HolderCheck {
    /// Equality and proportionality agree, as the equality condition
    /// requires.
    pub fn consistent(&self) -> bool {
        self.holds && self.equality == self.proportionality.is_some()
    }
}
