//! Hilbert bases of `ker(A) ∩ ℕⁿ` by the Contejean–Devie completion procedure.
//!
//! Candidates are grown one unit vector at a time, level by level in total
//! degree. A candidate `p` with `A·p ≠ 0` is only extended along `eᵢ` when
//! `⟨A·p, A·eᵢ⟩ < 0`, i.e. when the step moves `A·p` back towards the origin,
//! and any candidate dominating an already-found solution is discarded. The
//! cone lies in the nonnegative orthant, so it is pointed and the procedure
//! terminates with exactly the componentwise-minimal nonzero solutions.

use std::collections::BTreeMap;

use super::presentation::{sort_canonical, MonoidElement, MonoidPresentation};
use crate::error::{Error, Result};

/// Minimal nonzero solutions of `rows · x = 0` over `ℕⁿ`, canonically sorted.
pub fn solve_homogeneous(rows: &[Vec<i64>], n: usize) -> Vec<MonoidElement> {
    let columns: Vec<Vec<i128>> = (0..n)
        .map(|j| rows.iter().map(|r| r[j] as i128).collect())
        .collect();
    let mut basis: Vec<MonoidElement> = Vec::new();
    let mut level: BTreeMap<MonoidElement, Vec<i128>> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        let mut e = vec![0u64; n];
        e[j] = 1;
        level.insert(e, col.clone());
    }

    while !level.is_empty() {
        for (p, ap) in &level {
            if ap.iter().all(|&x| x == 0) {
                basis.push(p.clone());
            }
        }
        let mut next: BTreeMap<MonoidElement, Vec<i128>> = BTreeMap::new();
        for (p, ap) in &level {
            if ap.iter().all(|&x| x == 0) {
                continue;
            }
            for (i, col) in columns.iter().enumerate() {
                let dot: i128 = ap.iter().zip(col).map(|(a, b)| a * b).sum();
                if dot >= 0 {
                    continue;
                }
                let mut q = p.clone();
                q[i] += 1;
                if next.contains_key(&q) || dominates_any(&q, &basis) {
                    continue;
                }
                let aq = ap.iter().zip(col).map(|(a, b)| a + b).collect();
                next.insert(q, aq);
            }
        }
        level = next;
    }
    sort_canonical(&mut basis);
    basis
}

fn dominates_any(q: &[u64], basis: &[MonoidElement]) -> bool {
    basis
        .iter()
        .any(|b| b.iter().zip(q).all(|(bi, qi)| bi <= qi))
}

/// The atoms of `P`: minimal nonzero elements, free coordinates contributing
/// their unit vectors.
pub fn hilbert_basis(p: &MonoidPresentation) -> Vec<MonoidElement> {
    let t = p.constrained_dim();
    let u = p.free_rank();
    let mut atoms: Vec<MonoidElement> = solve_homogeneous(p.coefficients(), t)
        .into_iter()
        .map(|mut v| {
            v.resize(t + u, 0);
            v
        })
        .collect();
    for j in t..t + u {
        let mut e = vec![0u64; t + u];
        e[j] = 1;
        atoms.push(e);
    }
    sort_canonical(&mut atoms);
    atoms
}

pub fn is_atom(p: &MonoidPresentation, v: &[u64]) -> Result<bool> {
    p.require_member(v)?;
    if v.iter().all(|&x| x == 0) {
        return Err(Error::precondition("zero is not an atom candidate"));
    }
    Ok(hilbert_basis(p).iter().any(|a| a == v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(rows: &[Vec<i64>], t: usize, u: usize) -> MonoidPresentation {
        MonoidPresentation::from_rows(rows, t, u).unwrap()
    }

    #[test]
    fn block_monoid_atoms() {
        let p = pres(
            &[vec![1, -1, 0, 0, 1, -1], vec![0, 1, -1, 1, -1, 0]],
            6,
            0,
        );
        assert_eq!(
            hilbert_basis(&p),
            vec![
                vec![1, 0, 0, 0, 0, 1],
                vec![0, 1, 0, 0, 1, 0],
                vec![0, 0, 1, 1, 0, 0],
                vec![1, 1, 1, 0, 0, 0],
                vec![0, 0, 0, 1, 1, 1],
            ]
        );
    }

    #[test]
    fn no_equations_gives_unit_vectors() {
        let p = pres(&[], 3, 0);
        assert_eq!(
            hilbert_basis(&p),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
        let f = MonoidPresentation::free(2);
        assert_eq!(hilbert_basis(&f), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn single_row() {
        let p = pres(&[vec![1, -1, -1, 1]], 4, 0);
        let mut expected = vec![
            vec![1, 1, 0, 0],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 1],
        ];
        sort_canonical(&mut expected);
        assert_eq!(hilbert_basis(&p), expected);
    }

    #[test]
    fn weighted_row() {
        // 2x = 3y + z
        let atoms = solve_homogeneous(&[vec![2, -3, -1]], 3);
        let mut expected = vec![vec![1, 0, 2], vec![2, 1, 1], vec![3, 2, 0]];
        sort_canonical(&mut expected);
        assert_eq!(atoms, expected);
    }

    #[test]
    fn atom_membership() {
        let p = pres(
            &[vec![1, -1, 0, 0, 1, -1], vec![0, 1, -1, 1, -1, 0]],
            6,
            0,
        );
        assert!(is_atom(&p, &[1, 1, 1, 0, 0, 0]).unwrap());
        assert!(!is_atom(&p, &[1, 1, 1, 1, 1, 1]).unwrap());
        assert!(is_atom(&p, &[1, 0, 0, 0, 0]).is_err());
        assert!(matches!(
            is_atom(&p, &[1, 0, 0, 0, 0, 0]),
            Err(Error::Precondition(_))
        ));
        let f = MonoidPresentation::free(3);
        assert!(is_atom(&f, &[0, 1, 0]).unwrap());
    }
}
