//! Exact rational exponents.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A rational exponent `num/den > 1`, always stored in lowest terms.
///
/// Every "length is at least `e` times the period" comparison in the crate
/// goes through [`Exponent::reaches`], which cross-multiplies in `u128`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    num: u64,
    den: u64,
}

impl Exponent {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num <= den {
            return Err(Error::ExponentTooSmall { num, den });
        }
        let g = num.gcd(&den);
        Ok(Exponent {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// `length >= e * period`, exactly.
    #[inline]
    pub fn reaches(&self, length: usize, period: usize) -> bool {
        length as u128 * self.den as u128 >= self.num as u128 * period as u128
    }

    /// `ceil(x * e)`.
    pub fn ceil_mul(&self, x: usize) -> usize {
        ceil_div(x as u128 * self.num as u128, self.den as u128)
    }

    /// `ceil(x / e)`.
    pub fn ceil_div(&self, x: usize) -> usize {
        ceil_div(x as u128 * self.den as u128, self.num as u128)
    }

    /// `ceil(x * e / (e - 1))`.
    pub fn ceil_mul_ratio(&self, x: usize) -> usize {
        ceil_div(x as u128 * self.num as u128, (self.num - self.den) as u128)
    }

    /// Smallest integer `s` with `s > e / (e - 1)`.
    pub fn level_constant(&self) -> usize {
        // s * (num - den) > num
        (self.num / (self.num - self.den) + 1) as usize
    }
}

pub(crate) fn ceil_div(a: u128, b: u128) -> usize {
    a.div_ceil(b) as usize
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syntax = || Error::ExponentSyntax(s.to_string());
        let parse = |part: &str| -> Result<u64> {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax());
            }
            part.parse().map_err(|_| syntax())
        };
        let (num, den) = match s.trim().split_once('/') {
            Some((n, d)) => (parse(n)?, parse(d)?),
            None => (parse(s.trim())?, 1),
        };
        if den == 0 {
            return Err(syntax());
        }
        Exponent::new(num, den)
    }
}

/// Parses `"N"` or `"N/D"` into a normalized exponent.
pub fn exponent_parse(s: &str) -> Result<Exponent> {
    s.parse()
}

/// `length * den >= num * period`.
pub fn reaches_exponent(length: usize, period: usize, e: Exponent) -> bool {
    e.reaches(length, period)
}
