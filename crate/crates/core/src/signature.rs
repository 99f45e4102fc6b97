//! Fuchsian signatures `(h; m_1, ..., m_l)` and their exact arithmetic.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::divisors;

/// Default cap on the orbit genus explored by [`enumerate_signatures`].
pub const DEFAULT_MAX_ORBIT_GENUS: u32 = 4;

/// Periods are kept sorted ascending, so equality is equality of `h` and of
/// the period multiset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Signature {
    h: u32,
    periods: Vec<u32>,
}

impl Signature {
    pub fn new(h: u32, mut periods: Vec<u32>) -> Result<Signature> {
        if let Some(m) = periods.iter().find(|&&m| m < 2) {
            return Err(Error::Parse(format!("period {m} is below 2")));
        }
        periods.sort_unstable();
        Ok(Signature { h, periods })
    }

    /// Orbit genus.
    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn periods(&self) -> &[u32] {
        &self.periods
    }

    /// Number of branch values `l`.
    pub fn len(&self) -> usize {
        self.periods.len()
    }

    pub fn is_empty(&self) -> bool {
        self.periods.is_empty()
    }

    /// `3h - 3 + l`.
    pub fn teich_dim(&self) -> i64 {
        3 * self.h as i64 - 3 + self.periods.len() as i64
    }

    /// `2h - 2 + Σ (1 - 1/m_j)`.
    pub fn measure(&self) -> Ratio<i64> {
        self.periods
            .iter()
            .fold(Ratio::from_integer(2 * self.h as i64 - 2), |acc, &m| {
                acc + Ratio::new(m as i64 - 1, m as i64)
            })
    }

    /// Genus `g` of a surface with a group of the given order acting with
    /// this signature, from `2g - 2 = order * measure`.
    pub fn rh_genus(&self, order: u64) -> Result<u64> {
        let value = self.measure() * Ratio::from_integer(order as i64);
        let reason = if *self.measure().numer() <= 0 {
            "negative measure"
        } else if !value.is_integer() {
            "non-integral"
        } else if value.to_integer() % 2 != 0 {
            "odd"
        } else if value.to_integer() < 2 {
            "genus below two"
        } else {
            return Ok((value.to_integer() / 2 + 1) as u64);
        };
        Err(Error::Inadmissible { value, reason })
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.h)?;
        if self.periods.is_empty() {
            return write!(f, "-");
        }
        let periods: Vec<String> = self.periods.iter().map(u32::to_string).collect();
        write!(f, "{}", periods.join(","))
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "malformed signature '{s}' (expected h;m1,...,ml or h;-)"
            ))
        };
        let (h, rest) = s.trim().split_once(';').ok_or_else(bad)?;
        let h: u32 = h.trim().parse().map_err(|_| bad())?;
        let rest = rest.trim();
        let periods = if rest == "-" || rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|m| m.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        Signature::new(h, periods)
    }
}

impl TryFrom<String> for Signature {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Signature> for String {
    fn from(s: Signature) -> String {
        s.to_string()
    }
}

/// Every signature of Teichmüller dimension `dim` through which a group of
/// the given order can act on a genus-`genus` surface, by Riemann–Hurwitz.
/// Periods are restricted to divisors of `order`.
pub fn enumerate_signatures(genus: u64, order: u64, dim: i64) -> Vec<Signature> {
    enumerate_signatures_with_cap(genus, order, dim, DEFAULT_MAX_ORBIT_GENUS)
}

pub fn enumerate_signatures_with_cap(
    genus: u64,
    order: u64,
    dim: i64,
    max_orbit_genus: u32,
) -> Vec<Signature> {
    if genus < 2 || order == 0 {
        return Vec::new();
    }
    let periods_pool: Vec<u32> = divisors(order)
        .into_iter()
        .filter(|&d| d >= 2)
        .map(|d| d as u32)
        .collect();
    let mut out = Vec::new();
    for h in 0..=max_orbit_genus {
        let l = dim + 3 - 3 * h as i64;
        if l < 0 {
            continue;
        }
        // required value of Σ (1 - 1/m_j)
        let target =
            Ratio::new(2 * genus as i64 - 2, order as i64) - Ratio::from_integer(2 * h as i64 - 2);
        let mut periods = Vec::with_capacity(l as usize);
        collect_periods(
            &periods_pool,
            0,
            l as usize,
            Ratio::from_integer(0),
            target,
            &mut periods,
            &mut |p| {
                out.push(Signature {
                    h,
                    periods: p.to_vec(),
                })
            },
        );
    }
    out.sort();
    debug_assert!(out.iter().all(|s| s.rh_genus(order).ok() == Some(genus)));
    out
}

fn collect_periods(
    pool: &[u32],
    start: usize,
    remaining: usize,
    partial: Ratio<i64>,
    target: Ratio<i64>,
    periods: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if remaining == 0 {
        if partial == target {
            emit(periods);
        }
        return;
    }
    // each remaining term is strictly below 1
    if target - partial >= Ratio::from_integer(remaining as i64) {
        return;
    }
    for (i, &m) in pool.iter().enumerate().skip(start) {
        let term = Ratio::new(m as i64 - 1, m as i64);
        // periods are non-decreasing, so every later term is at least `term`
        if partial + term * Ratio::from_integer(remaining as i64) > target {
            break;
        }
        periods.push(m);
        collect_periods(
            pool,
            i,
            remaining - 1,
            partial + term,
            target,
            periods,
            emit,
        );
        periods.pop();
    }
}
