//! Polynomials in `t` with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Sparse map from exponent to non-zero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPolynomial {
    terms: BTreeMap<u32, BigInt>,
}

impl TPolynomial {
    pub fn zero() -> Self {
        TPolynomial::default()
    }

    pub fn monomial(exponent: u32, coefficient: impl Into<BigInt>) -> Self {
        let mut p = TPolynomial::zero();
        p.add_term(exponent, coefficient);
        p
    }

    pub fn add_term(&mut self, exponent: u32, coefficient: impl Into<BigInt>) {
        let c = coefficient.into();
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: u32) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `{"<exponent>": coefficient, ...}`; coefficients outside the i64 range are strings.
    pub fn to_json_value(&self) -> Value {
        let mut map = Map::new();
        for (e, c) in &self.terms {
            let v = match c.to_i64() {
                Some(x) => Value::from(x),
                None => Value::from(c.to_string()),
            };
            map.insert(e.to_string(), v);
        }
        Value::Object(map)
    }

    pub fn from_json_value(value: &Value) -> Result<Self> {
        let map = value
            .as_object()
            .ok_or_else(|| Error::Parse("polynomial must be a JSON object".into()))?;
        let mut p = TPolynomial::zero();
        for (key, v) in map {
            let e: u32 = key
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {key:?}")))?;
            let c: BigInt = match v {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient {n}")))?,
                Value::String(s) => s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?,
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Add for TPolynomial {
    type Output = TPolynomial;

    fn add(mut self, rhs: TPolynomial) -> TPolynomial {
        self += rhs;
        self
    }
}

impl AddAssign for TPolynomial {
    fn add_assign(&mut self, rhs: TPolynomial) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

fn monomial_text(e: u32, magnitude: &BigInt) -> String {
    let var = match e {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{e}"),
    };
    if e == 0 {
        magnitude.to_string()
    } else if magnitude.is_one() {
        var
    } else {
        format!("{magnitude}*{var}")
    }
}

/// Ascending powers, e.g. `1 + 2*t - t^3`; the zero polynomial prints as `0`.
impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&e, c)) in self.terms.iter().enumerate() {
            let body = monomial_text(e, &c.abs());
            match (idx, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for TPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut p = TPolynomial::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let negative = rest.starts_with('-');
            if negative || rest.starts_with('+') {
                rest = &rest[1..];
            }
            let end = rest[1.min(rest.len())..]
                .find(['+', '-'])
                .map_or(rest.len(), |i| i + 1);
            let term = &rest[..end];
            rest = &rest[end..];
            let (coeff, power) = match term.split_once('t') {
                None => (term, None),
                Some((c, pow)) => (c.strip_suffix('*').unwrap_or(c), Some(pow)),
            };
            let mut c: BigInt = if coeff.is_empty() {
                if power.is_none() {
                    return Err(bad());
                }
                BigInt::one()
            } else {
                coeff.parse().map_err(|_| bad())?
            };
            let e: u32 = match power {
                None => 0,
                Some("") => 1,
                Some(pow) => pow
                    .strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?,
            };
            if negative {
                c = -c;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}
