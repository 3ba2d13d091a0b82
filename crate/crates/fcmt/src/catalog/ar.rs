//! Rank vectors from additivity along short exact sequences.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};

/// `0 → left → ⊕ middle → right → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArSequence {
    pub left: String,
    pub middle: Vec<(String, u32)>,
    pub right: String,
}

impl ArSequence {
    pub fn new(left: &str, middle: &[(&str, u32)], right: &str) -> Self {
        ArSequence {
            left: left.to_string(),
            middle: middle.iter().map(|(m, k)| (m.to_string(), *k)).collect(),
            right: right.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArSequenceSystem {
    pub num_primes: usize,
    pub sequences: Vec<ArSequence>,
    pub known: BTreeMap<String, Vec<i64>>,
    /// Modules whose ranks are sought even if no sequence mentions them.
    #[serde(default)]
    pub unknowns: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ArSolution {
    Solved { ranks: BTreeMap<String, Vec<i64>> },
    Underdetermined { free_modules: Vec<String> },
    Inconsistent,
    /// The unique rational solution is not a nonnegative integer vector.
    NotIntegral { ranks: BTreeMap<String, Vec<String>> },
}

impl ArSequenceSystem {
    pub fn from_json(text: &str) -> Result<Self> {
        let sys: ArSequenceSystem = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        for (name, r) in &sys.known {
            if r.len() != sys.num_primes {
                return Err(Error::input(format!(
                    "rank of {name} has {} entries, expected {}",
                    r.len(),
                    sys.num_primes
                )));
            }
        }
        Ok(sys)
    }

    fn unknown_modules(&self) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        let mut add = |n: &String| {
            if !self.known.contains_key(n) && !names.contains(n) {
                names.push(n.clone());
            }
        };
        for s in &self.sequences {
            add(&s.left);
            for (m, _) in &s.middle {
                add(m);
            }
            add(&s.right);
        }
        for n in &self.unknowns {
            add(n);
        }
        names
    }

    /// `rank(middle) − rank(left) − rank(right)` for each sequence under the
    /// given ranks; all zero means every sequence is additive.
    pub fn residuals(&self, ranks: &BTreeMap<String, Vec<i64>>) -> Result<Vec<Vec<i64>>> {
        let rank = |n: &String| {
            ranks
                .get(n)
                .or_else(|| self.known.get(n))
                .cloned()
                .ok_or_else(|| Error::input(format!("no rank given for {n}")))
        };
        self.sequences
            .iter()
            .map(|s| {
                let mut r = vec![0i64; self.num_primes];
                for (m, k) in &s.middle {
                    for (x, y) in r.iter_mut().zip(rank(m)?) {
                        *x += *k as i64 * y;
                    }
                }
                for (x, (y, z)) in r.iter_mut().zip(rank(&s.left)?.into_iter().zip(rank(&s.right)?)) {
                    *x -= y + z;
                }
                Ok(r)
            })
            .collect()
    }
}

pub fn ar_rank_solve(sys: &ArSequenceSystem) -> ArSolution {
    let names = sys.unknown_modules();
    let s = sys.num_primes;
    let idx = |n: &String| names.iter().position(|m| m == n);
    let cols = names.len();
    // One system per prime coordinate, all sharing the coefficient matrix.
    let mut matrix: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Vec<Q>> = vec![Vec::new(); s];
    for seq in &sys.sequences {
        let mut row = vec![Q::zero(); cols];
        let mut constant = vec![0i64; s];
        let mut add = |name: &String, coeff: i64| match idx(name) {
            Some(i) => row[i] += linalg::q(coeff),
            None => {
                for (c, r) in constant.iter_mut().zip(&sys.known[name]) {
                    *c += coeff * r;
                }
            }
        };
        for (m, k) in &seq.middle {
            add(m, *k as i64);
        }
        add(&seq.left, -1);
        add(&seq.right, -1);
        matrix.push(row);
        for (p, c) in constant.iter().enumerate() {
            rhs[p].push(linalg::q(-c));
        }
    }

    let null = linalg::nullspace(&matrix, cols);
    if !null.is_empty() {
        let free_modules = names
            .iter()
            .enumerate()
            .filter(|(i, _)| null.iter().any(|v| !v[*i].is_zero()))
            .map(|(_, n)| n.clone())
            .collect();
        return ArSolution::Underdetermined { free_modules };
    }
    let mut per_prime = Vec::new();
    for b in &rhs {
        match linalg::solve(&matrix, b, cols) {
            Some(x) => per_prime.push(x),
            None => return ArSolution::Inconsistent,
        }
    }
    let rational: BTreeMap<String, Vec<Q>> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), per_prime.iter().map(|x| x[i].clone()).collect()))
        .collect();
    let integral: Option<BTreeMap<String, Vec<i64>>> = rational
        .iter()
        .map(|(n, v)| {
            v.iter()
                .map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten().filter(|&y| y >= 0))
                .collect::<Option<Vec<i64>>>()
                .map(|v| (n.clone(), v))
        })
        .collect();
    match integral {
        Some(ranks) => ArSolution::Solved { ranks },
        None => ArSolution::NotIntegral {
            ranks: rational
                .into_iter()
                .map(|(n, v)| (n, v.iter().map(crate::json::rational_string).collect()))
                .collect(),
        },
    }
}

/// The six sequences for the ring of type `D₆`, exactly as printed, with the
/// cyclic modules' ranks known.
pub fn d6_system() -> ArSequenceSystem {
    let p1 = "R/P1";
    let p23 = "R/(P2∩P3)";
    let known: BTreeMap<String, Vec<i64>> = [
        ("R", vec![1, 1, 1]),
        (p1, vec![1, 0, 0]),
        ("R/P2", vec![0, 1, 0]),
        ("R/P3", vec![0, 0, 1]),
        (p23, vec![0, 1, 1]),
        ("R/(P1∩P3)", vec![1, 0, 1]),
        ("R/(P1∩P2)", vec![1, 1, 0]),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    ArSequenceSystem {
        num_primes: 3,
        sequences: vec![
            ArSequence::new(p1, &[("X1", 1)], p23),
            ArSequence::new(p23, &[("Y1", 1)], p1),
            ArSequence::new("X1", &[(p23, 1), ("N1", 1)], "Y1"),
            ArSequence::new("Y1", &[(p1, 1), ("M1", 1)], "X1"),
            ArSequence::new("M1", &[("X1", 1), ("Y2", 1)], "N1"),
            ArSequence::new("N1", &[("Y1", 1), ("X2", 1)], "M1"),
        ],
        known,
        unknowns: Vec::new(),
    }
}
