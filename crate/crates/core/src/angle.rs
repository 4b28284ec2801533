// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Exact rotation angles stored as rational multiples of pi.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An angle of `numerator / denominator * pi` radians.
///
/// The fraction is always kept in lowest terms with a positive denominator.
/// Equality and hashing are taken modulo `2*pi`, so `-pi/4` and `7pi/4`
/// compare equal while still printing as written.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct Angle {
    numerator: i64,
    denominator: i64,
}

impl Angle {
    pub const ZERO: Angle = Angle { numerator: 0, denominator: 1 };
    pub const PI: Angle = Angle { numerator: 1, denominator: 1 };
    pub const HALF_PI: Angle = Angle { numerator: 1, denominator: 2 };
    pub const QUARTER_PI: Angle = Angle { numerator: 1, denominator: 4 };

    /// Builds `numerator/denominator * pi`, reducing to lowest terms.
    ///
    /// Panics if `denominator` is zero.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "angle denominator must be nonzero");
        let sign = if denominator < 0 { -1 } else { 1 };
        let g = gcd(numerator, denominator).max(1);
        Angle {
            numerator: sign * numerator / g,
            denominator: sign * denominator / g,
        }
    }

    /// `pi / 2^k`.
    pub fn pi_over_pow2(k: u32) -> Self {
        Angle::new(1, 1i64 << k)
    }

    pub fn numerator(self) -> i64 {
        self.numerator
    }

    pub fn denominator(self) -> i64 {
        self.denominator
    }

    pub fn halve(self) -> Self {
        Angle::new(self.numerator, self.denominator * 2)
    }

    pub fn scale(self, factor: i64) -> Self {
        Angle::new(self.numerator * factor, self.denominator)
    }

    /// Representative in `(-pi, pi]`.
    pub fn normalized(self) -> Self {
        let period = 2 * self.denominator;
        let mut n = self.numerator.rem_euclid(period);
        if n > self.denominator {
            n -= period;
        }
        Angle { numerator: n, denominator: self.denominator }
    }

    pub fn is_zero_mod_2pi(self) -> bool {
        self.normalized().numerator == 0
    }

    pub fn radians(self) -> f64 {
        self.numerator as f64 * std::f64::consts::PI / self.denominator as f64
    }
}

impl PartialEq for Angle {
    fn eq(&self, other: &Self) -> bool {
        let a = self.normalized();
        let b = other.normalized();
        a.numerator == b.numerator && a.denominator == b.denominator
    }
}

impl Eq for Angle {}

impl Hash for Angle {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let n = self.normalized();
        n.numerator.hash(state);
        n.denominator.hash(state);
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        let g = gcd(self.denominator, rhs.denominator);
        let lcm = self.denominator / g * rhs.denominator;
        Angle::new(
            self.numerator * (lcm / self.denominator) + rhs.numerator * (lcm / rhs.denominator),
            lcm,
        )
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        self + (-rhs)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle { numerator: -self.numerator, denominator: self.denominator }
    }
}

impl From<Angle> for (i64, i64) {
    fn from(a: Angle) -> Self {
        (a.numerator, a.denominator)
    }
}

impl TryFrom<(i64, i64)> for Angle {
    type Error = ParseError;
    fn try_from((n, d): (i64, i64)) -> Result<Self, Self::Error> {
        if d == 0 {
            return Err(ParseError::new(0, "angle denominator must be nonzero"));
        }
        Ok(Angle::new(n, d))
    }
}

/// Renders as `<num>/<den>pi`, the form the circuit text format uses.
impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}pi", self.numerator, self.denominator)
    }
}

/// Accepts `<num>/<den>pi`, `<num>/<den>`, `<num>pi` or `<num>`; all in units of pi.
/// Accepts `n/d pi`, `n/dpi`, `npi/d`, `-pi/4`, `pi` and the same with `π`.
impl FromStr for Angle {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::new(0, format!("malformed angle `{s}`"));
        let body: String = s.replace('π', "pi").chars().filter(|c| !c.is_whitespace()).collect();
        let (coef, rest) = body.split_once("pi").unwrap_or((&body, ""));
        let int = |t: &str| t.parse::<i64>().map_err(|_| bad());
        let (n, d) = match (coef.split_once('/'), rest) {
            (Some((n, d)), "") => (int(n)?, int(d)?),
            (None, r) => {
                let n = match coef {
                    "" | "+" => 1,
                    "-" => -1,
                    c => int(c)?,
                };
                let d = match r.strip_prefix('/') {
                    Some(d) => int(d)?,
                    None if r.is_empty() => 1,
                    None => return Err(bad()),
                };
                (n, d)
            }
            _ => return Err(bad()),
        };
        if d <= 0 {
            return Err(bad());
        }
        Ok(Angle::new(n, d))
    }
}
