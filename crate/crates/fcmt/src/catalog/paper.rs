//! Printed presentation matrices and the expected class groups and verdicts
//! for each row of the monoid table.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::glue::GlueSpec;
use super::types::{Family, RingType};
use crate::error::{Error, Result};
use crate::lattice::{AbelianGroupInvariants, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PaperMatrixId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
}

impl FromStr for PaperMatrixId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A1" => PaperMatrixId::A1,
            "A2" => PaperMatrixId::A2,
            "A3" => PaperMatrixId::A3,
            "A4" => PaperMatrixId::A4,
            "A5" => PaperMatrixId::A5,
            "A6" => PaperMatrixId::A6,
            _ => return Err(Error::input(format!("unknown matrix {s:?}; expected A1..A6"))),
        })
    }
}

impl fmt::Display for PaperMatrixId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn repeated(parts: &[(i64, usize)]) -> Vec<i64> {
    parts
        .iter()
        .flat_map(|&(v, k)| std::iter::repeat_n(v, k))
        .collect()
}

/// The matrix exactly as printed, for parameter `n ≥ 1`.
pub fn paper_matrix(id: PaperMatrixId, n: usize) -> Result<IntMatrix> {
    if n == 0 {
        return Err(Error::input("the parameter n must be at least 1"));
    }
    let rows: Vec<Vec<i64>> = match id {
        PaperMatrixId::A1 | PaperMatrixId::A6 => vec![repeated(&[(1, 1), (-1, n + 1), (1, n)])],
        PaperMatrixId::A2 => {
            if n < 2 {
                return Err(Error::input(
                    "A2 is printed with 1x(2n+2) columns and six fixed entries; it needs n >= 2",
                ));
            }
            vec![repeated(&[
                (1, 1),
                (-1, 1),
                (1, 1),
                (0, 1),
                (-1, 1),
                (0, 1),
                (-1, n - 2),
                (1, n - 2),
            ])]
        }
        PaperMatrixId::A3 => vec![vec![-1, 1, 1, -1]],
        PaperMatrixId::A4 => {
            let mut top = vec![1, -1, 0, 0, 1, -1];
            top.extend(repeated(&[(-1, n - 1), (1, n - 1)]));
            let mut bottom = vec![0, 1, -1, 1, -1, 0];
            bottom.extend(repeated(&[(0, 2 * n - 2)]));
            vec![top, bottom]
        }
        PaperMatrixId::A5 => vec![vec![1, -1, 1, -1, -1, 1]],
    };
    let cols = rows[0].len();
    IntMatrix::from_rows(&rows, cols)
}

/// One row of the monoid table instantiated at a parameter value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub ring: RingType,
    pub glue: GlueSpec,
    pub matrix: Option<PaperMatrixId>,
    /// Printed shape `ker(𝒜) ∩ ℕ^constrained ⊕ ℕ^free`.
    pub constrained: usize,
    pub free: usize,
    pub class_group: AbelianGroupInvariants,
}

/// The rows with `m > 0` at parameter `n`.
pub fn monoid_table(n: usize) -> Vec<TableRow> {
    let z = AbelianGroupInvariants::free(1);
    let ring = |family, k: usize, primed| RingType::new(family, k as u32, primed).expect("valid");
    let glue = |r: RingType, m, case| GlueSpec::from_m(r.num_primes(), m, case).expect("valid");
    let row = |r: RingType, m, case, matrix, constrained, free, cg: &AbelianGroupInvariants| TableRow {
        ring: r,
        glue: glue(r, m, case),
        matrix,
        constrained,
        free,
        class_group: cg.clone(),
    };
    use PaperMatrixId::*;
    let d_even = ring(Family::D, 2 * n + 2, false);
    let d_even_p = ring(Family::D, 2 * n + 2, true);
    let mut rows = vec![
        row(ring(Family::A, 2 * n + 1, false), 1, None, None, 0, n + 2, &AbelianGroupInvariants::trivial()),
        row(ring(Family::D, 2 * n + 3, false), 1, None, Some(A1), 2 * n + 2, 2 * n + 2, &z),
        row(ring(Family::D, 2 * n + 3, true), 1, None, Some(A1), 2 * n + 2, 2 * n + 1, &z),
        row(d_even, 1, Some(1), Some(A2), 2 * n + 2, 2 * n + 3, &z),
        row(d_even_p, 1, Some(1), Some(A2), 2 * n + 2, 2 * n + 2, &z),
        row(d_even, 1, Some(2), Some(A3), 4, 4 * n + 1, &z),
        row(d_even_p, 1, Some(2), Some(A3), 4, 4 * n, &z),
        row(d_even, 2, None, Some(A4), 2 * n + 4, 2 * n + 1, &AbelianGroupInvariants::free(2)),
        row(d_even_p, 2, None, Some(A4), 2 * n + 4, 2 * n, &AbelianGroupInvariants::free(2)),
    ];
    if n == 1 {
        rows.push(row(ring(Family::E7, 0, false), 1, None, Some(A5), 6, 9, &z));
        rows.push(row(ring(Family::E7, 0, true), 1, None, Some(A5), 6, 8, &z));
    }
    rows.push(row(ring(Family::D2, n, false), 1, None, Some(A6), 2 * n + 2, 2 * n + 1, &z));
    rows.push(row(ring(Family::D2, n, true), 1, None, Some(A6), 2 * n + 2, 2 * n, &z));
    rows
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub factorial: bool,
    pub half_factorial: bool,
}

/// Factoriality as classified by `m` and the completion type.
pub fn expected_verdict(ring: RingType, m: usize) -> Verdict {
    match m {
        0 => Verdict { factorial: true, half_factorial: true },
        1 if ring.family == Family::A => Verdict { factorial: true, half_factorial: true },
        1 => Verdict { factorial: false, half_factorial: true },
        _ => Verdict { factorial: false, half_factorial: false },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_matrices() {
        let a4 = paper_matrix(PaperMatrixId::A4, 2).unwrap();
        assert_eq!(
            a4.to_i64_rows().unwrap(),
            vec![vec![1, -1, 0, 0, 1, -1, -1, 1], vec![0, 1, -1, 1, -1, 0, 0, 0]]
        );
        let a4 = paper_matrix(PaperMatrixId::A4, 3).unwrap();
        assert_eq!(a4.to_i64_rows().unwrap()[0], vec![1, -1, 0, 0, 1, -1, -1, -1, 1, 1]);
        assert_eq!(
            paper_matrix(PaperMatrixId::A1, 2).unwrap().to_i64_rows().unwrap(),
            vec![vec![1, -1, -1, -1, 1, 1]]
        );
        assert_eq!(
            paper_matrix(PaperMatrixId::A2, 3).unwrap().to_i64_rows().unwrap(),
            vec![vec![1, -1, 1, 0, -1, 0, -1, 1]]
        );
        assert!(paper_matrix(PaperMatrixId::A2, 1).is_err());
        assert_eq!(paper_matrix(PaperMatrixId::A3, 1).unwrap().cols(), 4);
        assert!("A7".parse::<PaperMatrixId>().is_err());
    }

    #[test]
    fn table_sizes_match_rank_tables() {
        for n in 1..=4 {
            for row in monoid_table(n) {
                let size = super::super::rank_table(row.ring).size();
                // merged coordinates count two modules
                let merged = usize::from(row.ring.family == Family::A);
                assert_eq!(row.constrained + row.free + merged, size, "{}", row.ring);
            }
        }
        assert_eq!(monoid_table(1).len(), 13);
    }
}
