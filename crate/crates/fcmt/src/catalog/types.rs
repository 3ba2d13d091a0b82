use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    D,
    E6,
    E7,
    E8,
    A2,
    D2,
    D3,
}

/// A singularity type, optionally primed (the endomorphism ring of the
/// maximal ideal).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RingType {
    pub family: Family,
    pub n: u32,
    pub primed: bool,
}

pub const TYPE_GRAMMAR: &str =
    "A<n> (n>=0), D<n> (n>=4), E6, E7, E8, A2:<n> (n>=1), D2:<n> (n>=1), D3, optionally followed by '";

impl RingType {
    /// Validates and normalizes: primed `A`/`A2` types become `A_{n-2}` and
    /// `A2_{n-1}`.
    pub fn new(family: Family, n: u32, primed: bool) -> Result<Self> {
        let bad = || Error::input(format!("invalid ring type; expected {TYPE_GRAMMAR}"));
        let n = match family {
            Family::A => n,
            Family::D if n >= 4 => n,
            Family::A2 | Family::D2 if n >= 1 => n,
            Family::E6 | Family::E7 | Family::E8 | Family::D3 => 0,
            _ => return Err(bad()),
        };
        match (family, primed) {
            (Family::A, true) => {
                if n < 2 {
                    return Err(Error::input(format!(
                        "A{n}' is not a ring of finite CM type in the classification"
                    )));
                }
                Ok(RingType { family, n: n - 2, primed: false })
            }
            (Family::A2, true) => {
                if n < 2 {
                    return Err(Error::input("A2:1' has no counterpart A2:0"));
                }
                Ok(RingType { family, n: n - 1, primed: false })
            }
            _ => Ok(RingType { family, n, primed }),
        }
    }

    pub fn unprimed(&self) -> RingType {
        RingType { primed: false, ..*self }
    }

    /// Number of minimal primes of the complete ring.
    pub fn num_primes(&self) -> usize {
        match self.family {
            Family::A => 1 + (self.n % 2) as usize,
            Family::D => {
                if self.n.is_multiple_of(2) {
                    3
                } else {
                    2
                }
            }
            Family::E6 | Family::E8 | Family::A2 | Family::D3 => 1,
            Family::E7 | Family::D2 => 2,
        }
    }
}

impl fmt::Display for RingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.n)?,
            Family::D => write!(f, "D{}", self.n)?,
            Family::E6 => write!(f, "E6")?,
            Family::E7 => write!(f, "E7")?,
            Family::E8 => write!(f, "E8")?,
            Family::A2 => write!(f, "A2:{}", self.n)?,
            Family::D2 => write!(f, "D2:{}", self.n)?,
            Family::D3 => write!(f, "D3")?,
        }
        if self.primed {
            write!(f, "'")?;
        }
        Ok(())
    }
}

impl FromStr for RingType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::input(format!("invalid ring type {s:?}; expected {TYPE_GRAMMAR}"));
        let s = s.trim();
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let number = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let (family, n) = if let Some((fam, n)) = body.split_once(':') {
            match fam {
                "A2" => (Family::A2, number(n)?),
                "D2" => (Family::D2, number(n)?),
                _ => return Err(bad()),
            }
        } else {
            match body {
                "E6" => (Family::E6, 0),
                "E7" => (Family::E7, 0),
                "E8" => (Family::E8, 0),
                "D3" => (Family::D3, 0),
                _ => match body.split_at_checked(1) {
                    Some(("A", n)) => (Family::A, number(n)?),
                    Some(("D", n)) => (Family::D, number(n)?),
                    _ => return Err(bad()),
                },
            }
        };
        RingType::new(family, n, primed).map_err(|e| match e {
            Error::Input(msg) if msg.starts_with("invalid ring type;") => bad(),
            other => other,
        })
    }
}
