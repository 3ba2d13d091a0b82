use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::lattice::{
    hilbert_basis, kernel_lattice_basis, lattice_hnf, MonoidElement, MonoidPresentation,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MatchResult {
    /// Coordinate `j` of the first presentation corresponds to coordinate
    /// `permutation[j]` of the second.
    Match { permutation: Vec<usize> },
    Mismatch { report: MismatchReport },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MismatchReport {
    pub reason: String,
    pub dims: (usize, usize),
    pub atom_counts: (usize, usize),
    /// Atom counts by total degree.
    pub atom_degrees: (BTreeMap<u64, usize>, BTreeMap<u64, usize>),
    pub prime_coordinates: (usize, usize),
}

/// Searches for a coordinate permutation identifying the two monoids. A
/// permutation identifies them exactly when it maps atoms onto atoms; the
/// result is confirmed by comparing the lattices `ker(A) ⊕ ℤᵘ`.
pub fn presentations_match(p: &MonoidPresentation, q: &MonoidPresentation) -> MatchResult {
    let ap = hilbert_basis(p);
    let aq = hilbert_basis(q);
    let report = |reason: &str| MismatchReport {
        reason: reason.to_string(),
        dims: (p.dim(), q.dim()),
        atom_counts: (ap.len(), aq.len()),
        atom_degrees: (degree_profile(&ap), degree_profile(&aq)),
        prime_coordinates: (prime_coords(&ap, p.dim()).len(), prime_coords(&aq, q.dim()).len()),
    };
    if p.dim() != q.dim() {
        return MatchResult::Mismatch { report: report("different ambient dimensions") };
    }
    if ap.len() != aq.len() || degree_profile(&ap) != degree_profile(&aq) {
        return MatchResult::Mismatch { report: report("atom counts differ") };
    }
    let dim = p.dim();
    let sig_p: Vec<Signature> = (0..dim).map(|j| signature(&ap, j)).collect();
    let sig_q: Vec<Signature> = (0..dim).map(|j| signature(&aq, j)).collect();
    let mut sp = sig_p.clone();
    let mut sq = sig_q.clone();
    sp.sort();
    sq.sort();
    if sp != sq {
        return MatchResult::Mismatch { report: report("coordinate signatures differ") };
    }

    // Most constrained coordinates first.
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by_key(|&j| (sig_q.iter().filter(|s| **s == sig_p[j]).count(), j));
    let mut perm = vec![usize::MAX; dim];
    let mut used = vec![false; dim];
    let mut search = Search {
        ap: &ap,
        aq: &aq,
        sig_p: &sig_p,
        sig_q: &sig_q,
        order: &order,
    };
    if !search.extend(0, &mut perm, &mut used) {
        return MatchResult::Mismatch {
            report: report("no coordinate permutation maps atoms onto atoms"),
        };
    }
    let permuted: Vec<Vec<BigInt>> = lattice_basis(p)
        .iter()
        .map(|v| {
            let mut w = vec![BigInt::zero(); dim];
            for (j, x) in v.iter().enumerate() {
                w[perm[j]] = x.clone();
            }
            w
        })
        .collect();
    if lattice_hnf(&permuted, dim) != lattice_hnf(&lattice_basis(q), dim) {
        return MatchResult::Mismatch {
            report: report("atom sets agree but the lattices differ"),
        };
    }
    MatchResult::Match { permutation: perm }
}

/// Sorted multiset of (value, support size) over atoms meeting coordinate `j`.
type Signature = Vec<(u64, usize)>;

fn signature(atoms: &[MonoidElement], j: usize) -> Signature {
    let mut s: Signature = atoms
        .iter()
        .filter(|a| a[j] > 0)
        .map(|a| (a[j], a.iter().filter(|&&x| x > 0).count()))
        .collect();
    s.sort();
    s
}

fn degree_profile(atoms: &[MonoidElement]) -> BTreeMap<u64, usize> {
    let mut m = BTreeMap::new();
    for a in atoms {
        *m.entry(a.iter().sum()).or_insert(0) += 1;
    }
    m
}

fn prime_coords(atoms: &[MonoidElement], dim: usize) -> Vec<usize> {
    (0..dim)
        .filter(|&j| {
            atoms
                .iter()
                .any(|a| a[j] == 1 && a.iter().sum::<u64>() == 1)
        })
        .collect()
}

fn lattice_basis(p: &MonoidPresentation) -> Vec<Vec<BigInt>> {
    let dim = p.dim();
    let mut basis: Vec<Vec<BigInt>> = kernel_lattice_basis(p.equations())
        .into_iter()
        .map(|mut v| {
            v.resize(dim, BigInt::zero());
            v
        })
        .collect();
    for j in p.constrained_dim()..dim {
        let mut e = vec![BigInt::zero(); dim];
        e[j] = BigInt::one();
        basis.push(e);
    }
    basis
}

struct Search<'a> {
    ap: &'a [MonoidElement],
    aq: &'a [MonoidElement],
    sig_p: &'a [Signature],
    sig_q: &'a [Signature],
    order: &'a [usize],
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let j = self.order[depth];
        for k in 0..perm.len() {
            if used[k] || self.sig_q[k] != self.sig_p[j] {
                continue;
            }
            perm[j] = k;
            used[k] = true;
            if self.consistent(&self.order[..=depth], perm) && self.extend(depth + 1, perm, used) {
                return true;
            }
            used[k] = false;
            perm[j] = usize::MAX;
        }
        false
    }

    /// Restrictions of the atoms to the assigned coordinates must agree as
    /// multisets.
    fn consistent(&self, assigned: &[usize], perm: &[usize]) -> bool {
        let mut left: Vec<Vec<u64>> = self
            .ap
            .iter()
            .map(|a| assigned.iter().map(|&j| a[j]).collect())
            .collect();
        let mut right: Vec<Vec<u64>> = self
            .aq
            .iter()
            .map(|a| assigned.iter().map(|&j| a[perm[j]]).collect())
            .collect();
        left.sort();
        right.sort();
        left == right
    }
}
