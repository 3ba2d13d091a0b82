use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Largest equation coefficient accepted by [`MonoidPresentation`]; the
/// Hilbert basis search accumulates in `i128`.
pub const MAX_COEFFICIENT: i64 = 1 << 31;

/// `H = (ker(equations) ∩ ℕᵗ) ⊕ ℕᵘ` inside `ℕᵗ⁺ᵘ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoidPresentation {
    equations: IntMatrix,
    free_rank: usize,
    coefficients: Vec<Vec<i64>>,
}

/// Element of `ℕᵗ⁺ᵘ`, constrained coordinates first.
pub type MonoidElement = Vec<u64>;

#[derive(Serialize, Deserialize)]
struct PresentationFile {
    equations: Vec<Vec<i64>>,
    #[serde(default)]
    free_rank: usize,
    /// Needed only when `equations` is empty.
    #[serde(default)]
    constrained: Option<usize>,
}

impl MonoidPresentation {
    pub fn new(equations: IntMatrix, free_rank: usize) -> Result<Self> {
        let coefficients = equations
            .to_i64_rows()
            .filter(|rows| rows.iter().flatten().all(|x| x.abs() <= MAX_COEFFICIENT))
            .ok_or_else(|| {
                Error::input(format!(
                    "equation coefficients must lie in [-{MAX_COEFFICIENT}, {MAX_COEFFICIENT}]"
                ))
            })?;
        Ok(MonoidPresentation {
            equations,
            free_rank,
            coefficients,
        })
    }

    pub fn from_rows(rows: &[Vec<i64>], constrained: usize, free_rank: usize) -> Result<Self> {
        let m = IntMatrix::from_rows(rows, constrained)?;
        if !rows.is_empty() && m.cols() != constrained {
            return Err(Error::input(format!(
                "equations have {} columns, expected {constrained}",
                m.cols()
            )));
        }
        Self::new(m, free_rank)
    }

    /// The free monoid `ℕᵘ`.
    pub fn free(rank: usize) -> Self {
        Self::new(IntMatrix::zeros(0, 0), rank).expect("empty matrix")
    }

    /// Parses `{"equations": [[...]], "free_rank": u}`. A `"constrained"` key
    /// gives the column count when there are no equations.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: PresentationFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let cols = file
            .equations
            .first()
            .map_or(file.constrained.unwrap_or(0), Vec::len);
        Self::from_rows(&file.equations, cols, file.free_rank)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "equations": self.coefficients,
            "free_rank": self.free_rank,
        });
        if self.coefficients.is_empty() && self.constrained_dim() > 0 {
            obj["constrained"] = self.constrained_dim().into();
        }
        obj
    }

    pub fn equations(&self) -> &IntMatrix {
        &self.equations
    }

    pub(crate) fn coefficients(&self) -> &[Vec<i64>] {
        &self.coefficients
    }

    pub fn num_equations(&self) -> usize {
        self.equations.rows()
    }

    /// Number of constrained coordinates `t`.
    pub fn constrained_dim(&self) -> usize {
        self.equations.cols()
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Total ambient dimension `t + u`.
    pub fn dim(&self) -> usize {
        self.constrained_dim() + self.free_rank
    }

    /// Column `j` of the equation matrix (zero for free coordinates).
    pub fn column_class(&self, j: usize) -> Vec<i64> {
        if j < self.constrained_dim() {
            self.coefficients.iter().map(|row| row[j]).collect()
        } else {
            vec![0; self.num_equations()]
        }
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        if v.len() != self.dim() {
            return Err(Error::input(format!(
                "element has length {}, presentation dimension is {}",
                v.len(),
                self.dim()
            )));
        }
        if v.iter().any(|&x| x < 0) {
            return Ok(false);
        }
        let t = self.constrained_dim();
        Ok(self.coefficients.iter().all(|row| {
            row.iter()
                .zip(&v[..t])
                .map(|(&a, &x)| a as i128 * x as i128)
                .sum::<i128>()
                == 0
        }))
    }

    pub fn contains_element(&self, v: &[u64]) -> Result<bool> {
        let signed: Vec<i64> = v
            .iter()
            .map(|&x| i64::try_from(x).map_err(|_| Error::input("coordinate too large")))
            .collect::<Result<_>>()?;
        self.contains(&signed)
    }

    pub(crate) fn require_member(&self, v: &[u64]) -> Result<()> {
        if !self.contains_element(v)? {
            return Err(Error::precondition(format!(
                "{v:?} is not an element of the monoid"
            )));
        }
        Ok(())
    }

    /// Moves zero columns of the equation matrix into the free part; the
    /// returned permutation lists old coordinate indices in their new order.
    pub fn normalize_free(&self) -> (MonoidPresentation, Vec<usize>) {
        let t = self.constrained_dim();
        let (zero, nonzero): (Vec<usize>, Vec<usize>) =
            (0..t).partition(|&j| self.coefficients.iter().all(|row| row[j] == 0));
        let eq = if nonzero.is_empty() {
            IntMatrix::zeros(0, 0)
        } else {
            drop_zero_rows(&self.equations.select_columns(&nonzero))
        };
        let mut order = nonzero;
        order.extend(zero.iter().copied());
        order.extend(t..self.dim());
        let p = MonoidPresentation::new(eq, self.free_rank + zero.len()).expect("subset of entries");
        (p, order)
    }
}

fn drop_zero_rows(m: &IntMatrix) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = m
        .to_rows()
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    IntMatrix::from_big_rows(rows, m.cols()).expect("consistent widths")
}

/// Canonical element order: total degree ascending, then lexicographically
/// descending, so `(1,0,0)` precedes `(0,1,0)`.
pub fn canonical_cmp(a: &[u64], b: &[u64]) -> Ordering {
    let da: u64 = a.iter().sum();
    let db: u64 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

pub fn sort_canonical(v: &mut [MonoidElement]) {
    v.sort_by(|a, b| canonical_cmp(a, b));
}

pub fn to_bigint_vec(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
