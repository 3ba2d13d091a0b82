use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lattice::{hilbert_basis, MonoidElement, MonoidPresentation};

pub const DEFAULT_FACTORIZATION_CAP: usize = 1_000_000;

/// Multiplicity of each atom, indexed by the canonical atom order.
pub type Factorization = Vec<u64>;

pub type LengthSet = BTreeSet<u64>;

pub fn factorizations(p: &MonoidPresentation, v: &[u64]) -> Result<Vec<Factorization>> {
    factorizations_with_cap(p, v, DEFAULT_FACTORIZATION_CAP)
}

/// All factorizations of `v` into atoms, in depth-first order over the
/// canonical atom list with larger multiplicities first.
pub fn factorizations_with_cap(
    p: &MonoidPresentation,
    v: &[u64],
    cap: usize,
) -> Result<Vec<Factorization>> {
    p.require_member(v)?;
    let atoms = hilbert_basis(p);
    // reachable[i][c]: some atom with index ≥ i has coordinate c positive
    let dim = v.len();
    let mut reachable = vec![vec![false; dim]; atoms.len() + 1];
    for i in (0..atoms.len()).rev() {
        for c in 0..dim {
            reachable[i][c] = reachable[i + 1][c] || atoms[i][c] > 0;
        }
    }
    let mut out = Vec::new();
    let mut current = vec![0u64; atoms.len()];
    let mut rest = v.to_vec();
    search(&atoms, &reachable, 0, &mut rest, &mut current, &mut out, cap)?;
    Ok(out)
}

fn search(
    atoms: &[MonoidElement],
    reachable: &[Vec<bool>],
    i: usize,
    rest: &mut [u64],
    current: &mut Vec<u64>,
    out: &mut Vec<Factorization>,
    cap: usize,
) -> Result<()> {
    if rest.iter().all(|&x| x == 0) {
        if out.len() == cap {
            return Err(Error::LimitExceeded(cap));
        }
        out.push(current.clone());
        return Ok(());
    }
    if i == atoms.len() || rest.iter().zip(&reachable[i]).any(|(&r, &ok)| r > 0 && !ok) {
        return Ok(());
    }
    let a = &atoms[i];
    let max = a
        .iter()
        .zip(rest.iter())
        .filter(|(&ai, _)| ai > 0)
        .map(|(&ai, &r)| r / ai)
        .min()
        .unwrap_or(0);
    for k in (0..=max).rev() {
        for (r, &ai) in rest.iter_mut().zip(a) {
            *r -= k * ai;
        }
        current[i] = k;
        let res = search(atoms, reachable, i + 1, rest, current, out, cap);
        for (r, &ai) in rest.iter_mut().zip(a) {
            *r += k * ai;
        }
        current[i] = 0;
        res?;
    }
    Ok(())
}

pub fn length_set(p: &MonoidPresentation, v: &[u64]) -> Result<LengthSet> {
    if v.iter().all(|&x| x == 0) {
        p.require_member(v)?;
        return Err(Error::precondition("sets of lengths are defined for nonzero elements"));
    }
    Ok(factorizations(p, v)?
        .iter()
        .map(|z| z.iter().sum())
        .collect())
}

/// Number of atoms of `v` supported on a single coordinate that no other atom
/// meets (prime atoms); every factorization contains exactly this many.
pub fn prime_atom_count(p: &MonoidPresentation, v: &[u64]) -> u64 {
    let atoms = hilbert_basis(p);
    (0..p.dim())
        .filter(|&c| {
            let touching: Vec<&MonoidElement> = atoms.iter().filter(|a| a[c] > 0).collect();
            touching.len() == 1 && touching[0].iter().filter(|&&x| x > 0).count() == 1
        })
        .map(|c| {
            let a = atoms.iter().find(|a| a[c] > 0).expect("touching atom");
            v[c] / a[c]
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block() -> MonoidPresentation {
        MonoidPresentation::from_rows(
            &[vec![1, -1, 0, 0, 1, -1], vec![0, 1, -1, 1, -1, 0]],
            6,
            0,
        )
        .unwrap()
    }

    #[test]
    fn all_ones_has_two_factorizations() {
        let z = factorizations(&block(), &[1, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(z, vec![vec![1, 1, 1, 0, 0], vec![0, 0, 0, 1, 1]]);
        assert_eq!(
            length_set(&block(), &[1; 6]).unwrap(),
            LengthSet::from([2, 3])
        );
    }

    #[test]
    fn doubled_lengths() {
        assert_eq!(
            length_set(&block(), &[2; 6]).unwrap(),
            LengthSet::from([4, 5, 6])
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            length_set(&block(), &[0; 6]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            factorizations(&block(), &[1, 0, 0, 0, 0, 0]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            factorizations_with_cap(&block(), &[2; 6], 2),
            Err(Error::LimitExceeded(2))
        ));
    }

    #[test]
    fn prime_atoms() {
        let p = MonoidPresentation::from_rows(&[vec![1, -1]], 2, 2).unwrap();
        assert_eq!(prime_atom_count(&p, &[1, 1, 3, 2]), 5);
    }
}
