//! Class groups and divisor-theory checks for presented Krull monoids.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::hilbert::hilbert_basis;
use super::matrix::IntMatrix;
use super::normal_form::{kernel_lattice_basis, lattice_hnf, smith_normal_form};
use super::presentation::{to_bigint_vec, MonoidElement, MonoidPresentation};
use crate::error::{Error, Result};

pub const DEFAULT_ATOM_BUDGET: usize = 3;

/// `ℤ^free_rank ⊕ ℤ/d₁ ⊕ ℤ/d₂ ⊕ …` with `d₁ | d₂ | …`, all `dᵢ > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    #[serde(serialize_with = "crate::json::serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn trivial() -> Self {
        AbelianGroupInvariants {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Cokernel of the map `ℤⁿ → ℤᵐ` given by the columns of `m`.
    pub fn cokernel(m: &IntMatrix) -> Self {
        let snf = smith_normal_form(m);
        let diag = snf.diagonal();
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        AbelianGroupInvariants {
            free_rank: m.rows() - nonzero,
            torsion: diag
                .into_iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .collect(),
        }
    }

    /// The subgroup of `ℤᵐ` generated by the columns of `m`; always free.
    pub fn image(m: &IntMatrix) -> Self {
        AbelianGroupInvariants::free(m.rank())
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Justification {
    /// The atoms are linearly independent, so the monoid is free.
    Free,
    /// The embedding is a divisor theory and the atoms span the kernel lattice.
    DivisorTheory,
    /// Computed formally; hypotheses did not verify.
    Unjustified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassGroup {
    pub group: AbelianGroupInvariants,
    pub justification: Justification,
    pub zbasis: bool,
    pub divisor_theory: bool,
}

/// Class group with the default atom budget. Fails with a precondition error
/// when neither freeness nor the divisor-theory hypotheses can be verified,
/// unless `allow_formal` is set.
pub fn class_group(p: &MonoidPresentation, allow_formal: bool) -> Result<ClassGroup> {
    class_group_with_budget(p, DEFAULT_ATOM_BUDGET, allow_formal)
}

pub fn class_group_with_budget(
    p: &MonoidPresentation,
    atom_budget: usize,
    allow_formal: bool,
) -> Result<ClassGroup> {
    let atoms = hilbert_basis(p);
    let zbasis = zbasis_from_atoms(p, &atoms);
    let divisor_theory = divisor_theory_from_atoms(p, &atoms, atom_budget)
        .iter()
        .all(CoordinateVerdict::is_proved);
    let atom_matrix = atom_matrix(&atoms, p.dim());
    if atom_matrix.rank() == atoms.len() {
        return Ok(ClassGroup {
            group: AbelianGroupInvariants::trivial(),
            justification: Justification::Free,
            zbasis,
            divisor_theory,
        });
    }
    // ℤᵗ⁺ᵘ / 𝒬(H); equals the image of the equation matrix once the atoms
    // span the kernel lattice.
    let group = AbelianGroupInvariants::cokernel(&atom_matrix.transpose());
    if zbasis && divisor_theory {
        debug_assert_eq!(group, AbelianGroupInvariants::image(p.equations()));
        return Ok(ClassGroup {
            group,
            justification: Justification::DivisorTheory,
            zbasis,
            divisor_theory,
        });
    }
    if !allow_formal {
        return Err(Error::precondition("class group formula not justified"));
    }
    Ok(ClassGroup {
        group,
        justification: Justification::Unjustified,
        zbasis,
        divisor_theory,
    })
}

fn atom_matrix(atoms: &[MonoidElement], dim: usize) -> IntMatrix {
    IntMatrix::from_big_rows(atoms.iter().map(|a| to_bigint_vec(a)).collect(), dim)
        .expect("atoms share the ambient dimension")
}

/// Entry `j` is the class `𝒜eⱼ`; free coordinates carry the zero class.
pub fn prime_divisor_classes(p: &MonoidPresentation) -> Vec<Vec<i64>> {
    (0..p.dim()).map(|j| p.column_class(j)).collect()
}

/// Whether the atoms generate the full lattice `ker(A) ⊕ ℤᵘ`.
pub fn zbasis_in_monoid_check(p: &MonoidPresentation) -> bool {
    zbasis_from_atoms(p, &hilbert_basis(p))
}

fn zbasis_from_atoms(p: &MonoidPresentation, atoms: &[MonoidElement]) -> bool {
    let dim = p.dim();
    let t = p.constrained_dim();
    let mut kernel: Vec<Vec<BigInt>> = kernel_lattice_basis(p.equations())
        .into_iter()
        .map(|mut v| {
            v.resize(dim, BigInt::zero());
            v
        })
        .collect();
    for j in t..dim {
        let mut e = vec![BigInt::zero(); dim];
        e[j] = BigInt::one();
        kernel.push(e);
    }
    let generated: Vec<Vec<BigInt>> = atoms.iter().map(|a| to_bigint_vec(a)).collect();
    lattice_hnf(&generated, dim) == lattice_hnf(&kernel, dim)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CoordinateVerdict {
    /// `eⱼ` is the componentwise minimum of the witnesses.
    Proved { witnesses: Vec<MonoidElement> },
    Failed { reason: String },
    Undetermined,
}

impl CoordinateVerdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, CoordinateVerdict::Proved { .. })
    }
}

/// Decides for each unit vector `eⱼ` whether it is a greatest lower bound of
/// finitely many elements of `H`.
///
/// Any such set consists of elements with `xⱼ ≥ 1`. An element with `xⱼ = 1`
/// contains an atom with `xⱼ = 1`, and one with `xⱼ ≥ 1, xₖ = 0` contains an
/// atom with the same property. Atoms therefore suffice as witnesses and a
/// negative answer is definitive for any budget of at least one.
pub fn divisor_theory_check(p: &MonoidPresentation, atom_budget: usize) -> Vec<CoordinateVerdict> {
    divisor_theory_from_atoms(p, &hilbert_basis(p), atom_budget)
}

fn divisor_theory_from_atoms(
    p: &MonoidPresentation,
    atoms: &[MonoidElement],
    atom_budget: usize,
) -> Vec<CoordinateVerdict> {
    (0..p.dim())
        .map(|j| {
            if atom_budget == 0 {
                CoordinateVerdict::Undetermined
            } else {
                coordinate_verdict(atoms, j)
            }
        })
        .collect()
}

fn coordinate_verdict(atoms: &[MonoidElement], j: usize) -> CoordinateVerdict {
    let through_j: Vec<&MonoidElement> = atoms.iter().filter(|a| a[j] >= 1).collect();
    let support = |v: &[u64]| v.iter().filter(|&&x| x > 0).count();
    let Some(start) = through_j
        .iter()
        .filter(|a| a[j] == 1)
        .min_by_key(|a| support(a))
    else {
        return CoordinateVerdict::Failed {
            reason: format!("no element has coordinate {} equal to 1", j + 1),
        };
    };
    let mut witnesses = vec![(*start).clone()];
    let mut current = (*start).clone();
    while support(&current) > 1 {
        let best = through_j
            .iter()
            .map(|a| {
                let meet: Vec<u64> = current.iter().zip(a.iter()).map(|(x, y)| *x.min(y)).collect();
                (support(&meet), *a, meet)
            })
            .min_by_key(|(s, _, _)| *s)
            .expect("start is in through_j");
        if best.0 == support(&current) {
            let k = (0..current.len())
                .find(|&k| k != j && current[k] > 0 && through_j.iter().all(|a| a[k] > 0))
                .expect("stuck coordinate exists");
            return CoordinateVerdict::Failed {
                reason: format!(
                    "every element with coordinate {} positive has coordinate {} positive",
                    j + 1,
                    k + 1
                ),
            };
        }
        witnesses.push(best.1.clone());
        current = best.2;
    }
    CoordinateVerdict::Proved { witnesses }
}
