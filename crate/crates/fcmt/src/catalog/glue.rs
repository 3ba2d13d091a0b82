use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const GLUE_GRAMMAR: &str = "--glue i=j[=k] (repeatable) or --m 0|1|2 with --case 1|2 when there are three primes and m=1";

/// Groups of minimal primes of the completion lying over a common prime.
/// Primes are numbered from 1; primes not mentioned form singleton groups.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GlueSpec {
    pub groups: Vec<Vec<usize>>,
}

impl GlueSpec {
    pub fn none() -> Self {
        GlueSpec::default()
    }

    /// Parses one group such as `1=2` or `1=2=3`.
    pub fn parse_group(s: &str) -> Result<Vec<usize>> {
        let group: Vec<usize> = s
            .split('=')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::input(format!("invalid glue {s:?}; expected {GLUE_GRAMMAR}")))?;
        if group.len() < 2 {
            return Err(Error::input(format!(
                "glue {s:?} names a single prime; expected {GLUE_GRAMMAR}"
            )));
        }
        Ok(group)
    }

    pub fn from_groups(groups: Vec<Vec<usize>>, num_primes: usize) -> Result<Self> {
        let spec = GlueSpec { groups };
        spec.validate(num_primes)?;
        Ok(spec)
    }

    /// The named gluing for `m` identified primes; `case` selects `P₁~P₂`
    /// (1) or `P₂~P₃` (2) when three primes carry one identification.
    pub fn from_m(num_primes: usize, m: usize, case: Option<u8>) -> Result<Self> {
        let groups = match (num_primes, m, case) {
            (_, 0, None) => vec![],
            (2, 1, None) => vec![vec![1, 2]],
            (3, 1, Some(1)) => vec![vec![1, 2]],
            (3, 1, Some(2)) => vec![vec![2, 3]],
            (3, 1, None) => {
                return Err(Error::input(format!(
                    "three minimal primes with m=1 need --case 1|2; expected {GLUE_GRAMMAR}"
                )))
            }
            (3, 2, None) => vec![vec![1, 2, 3]],
            _ => {
                return Err(Error::input(format!(
                    "m={m}{} is not possible with {num_primes} minimal prime(s); expected {GLUE_GRAMMAR}",
                    case.map(|c| format!(" case {c}")).unwrap_or_default()
                )))
            }
        };
        GlueSpec::from_groups(groups, num_primes)
    }

    pub fn validate(&self, num_primes: usize) -> Result<()> {
        let mut seen = vec![false; num_primes + 1];
        for p in self.groups.iter().flatten() {
            if *p == 0 || *p > num_primes {
                return Err(Error::input(format!(
                    "prime {p} out of range 1..={num_primes}; expected {GLUE_GRAMMAR}"
                )));
            }
            if std::mem::replace(&mut seen[*p], true) {
                return Err(Error::input(format!("prime {p} glued twice")));
            }
        }
        if self.groups.iter().any(|g| g.len() < 2) {
            return Err(Error::input("each glue group needs at least two primes"));
        }
        Ok(())
    }

    /// `#Spec(R̂) − #Spec(R)`.
    pub fn m(&self) -> usize {
        self.groups.iter().map(|g| g.len() - 1).sum()
    }

    /// Consecutive glued pairs `(i, j)`, 1-based.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.groups
            .iter()
            .flat_map(|g| g.windows(2).map(|w| (w[0], w[1])))
            .collect()
    }
}

impl fmt::Display for GlueSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "none");
        }
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|g| g.iter().map(usize::to_string).collect::<Vec<_>>().join("="))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_cases() {
        assert_eq!(GlueSpec::from_m(3, 1, Some(2)).unwrap().pairs(), vec![(2, 3)]);
        assert_eq!(GlueSpec::from_m(3, 2, None).unwrap().pairs(), vec![(1, 2), (2, 3)]);
        assert_eq!(GlueSpec::from_m(3, 2, None).unwrap().m(), 2);
        assert!(GlueSpec::from_m(3, 1, None).is_err());
        assert!(GlueSpec::from_m(1, 1, None).is_err());
        assert!(GlueSpec::from_m(2, 2, None).is_err());
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!(GlueSpec::parse_group("1=2=3").unwrap(), vec![1, 2, 3]);
        assert!(GlueSpec::parse_group("1").is_err());
        assert!(GlueSpec::parse_group("1=x").is_err());
        assert!(GlueSpec::from_groups(vec![vec![1, 4]], 3).is_err());
        assert!(GlueSpec::from_groups(vec![vec![1, 2], vec![2, 3]], 3).is_err());
        assert_eq!(GlueSpec::from_groups(vec![vec![1, 3]], 3).unwrap().to_string(), "1=3");
    }
}
