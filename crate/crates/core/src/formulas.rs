//! Closed-form connectivity predictors for zero divisor graphs of `Z_n`,
//! driven only by the factorization of `n`, and the matching deletion sets.
//!
//! | shape of `n`          | vertex | edge | min degree | value          |
//! |-----------------------|--------|------|------------|----------------|
//! | `p^2`                 | T3.1   | T4.1 | T4.5       | `p - 2`        |
//! | `p^k`, `k >= 3`       | T3.2-3.3 | T4.2 | T4.5     | `p - 1`        |
//! | two distinct primes   | T3.4   | T4.3 | T4.5       | `min p_i - 1`  |
//! | three or more primes  | T3.5   | T4.3 | T4.5       | `min p_i - 1`  |
//!
//! The `p^2` row takes precedence over the general `min p_i - 1` rule: the
//! graph there is the complete graph `K_{p-1}`.

use std::fmt;

use serde::Serialize;

use crate::arith::Factorization;
use crate::error::{Result, ZdgError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    VertexConnectivity,
    EdgeConnectivity,
    MinDegree,
}

/// Which closed-form branch produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremTag {
    #[serde(rename = "T3.1")]
    T3_1,
    #[serde(rename = "T3.2-3.3")]
    T3_2To3_3,
    #[serde(rename = "T3.4")]
    T3_4,
    #[serde(rename = "T3.5")]
    T3_5,
    #[serde(rename = "T4.1")]
    T4_1,
    #[serde(rename = "T4.2")]
    T4_2,
    #[serde(rename = "T4.3")]
    T4_3,
    #[serde(rename = "T4.5")]
    T4_5,
}

impl TheoremTag {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremTag::T3_1 => "T3.1",
            TheoremTag::T3_2To3_3 => "T3.2-3.3",
            TheoremTag::T3_4 => "T3.4",
            TheoremTag::T3_5 => "T3.5",
            TheoremTag::T4_1 => "T4.1",
            TheoremTag::T4_2 => "T4.2",
            TheoremTag::T4_3 => "T4.3",
            TheoremTag::T4_5 => "T4.5",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub n: u64,
    pub quantity: Quantity,
    pub value: u64,
    pub tag: TheoremTag,
}

enum Shape {
    PrimeSquare(u64),
    HigherPrimePower(u64),
    TwoPrimes(u64),
    ManyPrimes(u64),
}

fn shape(f: &Factorization) -> Result<Shape> {
    if !f.is_composite() {
        return Err(ZdgError::NoZeroDivisors(f.n()));
    }
    let p = f.min_prime().expect("composite n has a prime factor");
    Ok(match (f.prime_power(), f.num_primes()) {
        (Some((_, 2)), _) => Shape::PrimeSquare(p),
        (Some(_), _) => Shape::HigherPrimePower(p),
        (None, 2) => Shape::TwoPrimes(p),
        (None, _) => Shape::ManyPrimes(p),
    })
}

pub fn predict_vertex_connectivity(f: &Factorization) -> Result<Prediction> {
    let (value, tag) = match shape(f)? {
        Shape::PrimeSquare(p) => (p - 2, TheoremTag::T3_1),
        Shape::HigherPrimePower(p) => (p - 1, TheoremTag::T3_2To3_3),
        Shape::TwoPrimes(p) => (p - 1, TheoremTag::T3_4),
        Shape::ManyPrimes(p) => (p - 1, TheoremTag::T3_5),
    };
    Ok(Prediction {
        n: f.n(),
        quantity: Quantity::VertexConnectivity,
        value,
        tag,
    })
}

pub fn predict_edge_connectivity(f: &Factorization) -> Result<Prediction> {
    let (value, tag) = match shape(f)? {
        Shape::PrimeSquare(p) => (p - 2, TheoremTag::T4_1),
        Shape::HigherPrimePower(p) => (p - 1, TheoremTag::T4_2),
        Shape::TwoPrimes(p) | Shape::ManyPrimes(p) => (p - 1, TheoremTag::T4_3),
    };
    Ok(Prediction {
        n: f.n(),
        quantity: Quantity::EdgeConnectivity,
        value,
        tag,
    })
}

pub fn predict_min_degree(f: &Factorization) -> Result<Prediction> {
    let edge = predict_edge_connectivity(f)?;
    Ok(Prediction {
        quantity: Quantity::MinDegree,
        tag: TheoremTag::T4_5,
        ..edge
    })
}

/// Deletion set realizing the predicted vertex connectivity, ascending.
///
/// For `p^2` this is `{p, 2p, ..., (p-2)p}`, which leaves `K_1`. Otherwise,
/// with `p` the smallest prime, it is the `p - 1` nonzero multiples of `n/p`:
/// removing them isolates the vertex `p`.
pub fn witness_cut(f: &Factorization) -> Result<Vec<u64>> {
    let n = f.n();
    Ok(match shape(f)? {
        Shape::PrimeSquare(p) => (1..=p - 2).map(|m| m * p).collect(),
        Shape::HigherPrimePower(p) | Shape::TwoPrimes(p) | Shape::ManyPrimes(p) => {
            let step = n / p;
            (1..p).map(|m| m * step).collect()
        }
    })
}
