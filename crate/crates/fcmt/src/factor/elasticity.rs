use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::factorizations::length_set;
use crate::error::Result;
use crate::lattice::{hilbert_basis, IntMatrix, MonoidPresentation};
use crate::linalg::{self, Q};

/// A relation `Σ uᵢaᵢ = Σ wⱼaⱼ` between atoms realizing the elasticity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElasticityWitness {
    #[serde(serialize_with = "crate::json::serialize_rational")]
    pub ratio: BigRational,
    pub u: Vec<u64>,
    pub w: Vec<u64>,
}

pub fn elasticity_element(p: &MonoidPresentation, v: &[u64]) -> Result<BigRational> {
    let lengths = length_set(p, v)?;
    let min = *lengths.first().expect("nonempty");
    let max = *lengths.last().expect("nonempty");
    Ok(BigRational::new(BigInt::from(max), BigInt::from(min)))
}

/// A relation between atoms of `p` itself with the largest ratio of lengths.
/// `|u|/|w|` is linear-fractional on the cone of relations, so the maximum
/// sits on an extreme ray: maximize `Σu` over `Σw = 1`. `None` when there
/// are no atoms.
pub fn elasticity_witness(p: &MonoidPresentation) -> Option<ElasticityWitness> {
    let atoms = hilbert_basis(p);
    let k = atoms.len();
    if k == 0 {
        return None;
    }
    let mut rows: Vec<Vec<Q>> = (0..p.dim())
        .map(|c| {
            atoms
                .iter()
                .map(|a| linalg::q(a[c] as i64))
                .chain(atoms.iter().map(|a| -linalg::q(a[c] as i64)))
                .collect()
        })
        .collect();
    rows.push((0..2 * k).map(|i| linalg::q((i >= k) as i64)).collect());
    let mut rhs = vec![Q::zero(); p.dim()];
    rhs.push(Q::one());
    let objective: Vec<Q> = (0..2 * k).map(|i| linalg::q((i < k) as i64)).collect();
    let x = simplex_max(&rows, &rhs, &objective).expect("u = w = e₁ is feasible and Σu ≤ max length");
    let den = x.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = x.iter().map(|c| (c * Q::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let ints: Vec<u64> = ints.iter().map(|c| u64::try_from(c / &g).expect("small relation")).collect();
    let (u, w) = ints.split_at(k);
    let ratio = BigRational::new(BigInt::from(u.iter().sum::<u64>()), BigInt::from(w.iter().sum::<u64>()));
    Some(ElasticityWitness {
        ratio,
        u: u.to_vec(),
        w: w.to_vec(),
    })
}

/// Maximizes `c·x` over `{x ≥ 0 : Ex = b}` for `b ≥ 0`, exactly, by the
/// two-phase simplex method with Bland's rule. `None` when infeasible or
/// unbounded.
fn simplex_max(e: &[Vec<Q>], b: &[Q], c: &[Q]) -> Option<Vec<Q>> {
    let (m, n) = (e.len(), c.len());
    let width = n + m + 1;
    let mut tab: Vec<Vec<Q>> = e
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            let mut r = row.clone();
            r.extend((0..m).map(|j| linalg::q((i == j) as i64)));
            r.push(bi.clone());
            r
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    let artificial: Vec<Q> = (0..n + m).map(|j| linalg::q((j >= n) as i64)).collect();
    run_simplex(&mut tab, &mut basis, &artificial, n + m)?;
    if basis.iter().zip(&tab).any(|(&j, r)| j >= n && !r[width - 1].is_zero()) {
        return None;
    }
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !tab[i][j].is_zero()) {
                pivot(&mut tab, &mut basis, i, j);
            }
        }
    }
    let cost: Vec<Q> = (0..n + m).map(|j| if j < n { -c[j].clone() } else { Q::zero() }).collect();
    run_simplex(&mut tab, &mut basis, &cost, n)?;
    let mut x = vec![Q::zero(); n];
    for (&j, r) in basis.iter().zip(&tab) {
        if j < n {
            x[j] = r[width - 1].clone();
        }
    }
    Some(x)
}

/// Minimizes `cost` over the first `allowed` columns from a feasible basis.
/// `None` when unbounded.
fn run_simplex(tab: &mut [Vec<Q>], basis: &mut [usize], cost: &[Q], allowed: usize) -> Option<()> {
    let last = tab.first().map_or(0, |r| r.len() - 1);
    loop {
        let entering = (0..allowed).find(|&j| {
            let reduced: Q = basis.iter().zip(tab.iter()).map(|(&bi, r)| &cost[bi] * &r[j]).sum();
            cost[j] < reduced
        });
        let Some(j) = entering else {
            return Some(());
        };
        let leaving = (0..tab.len())
            .filter(|&i| tab[i][j].is_positive())
            .map(|i| (&tab[i][last] / &tab[i][j], basis[i], i))
            .min()?;
        pivot(tab, basis, leaving.2, j);
    }
}

fn pivot(tab: &mut [Vec<Q>], basis: &mut [usize], i: usize, j: usize) {
    let p = tab[i][j].clone();
    for x in tab[i].iter_mut() {
        *x /= &p;
    }
    let row = tab[i].clone();
    for (k, r) in tab.iter_mut().enumerate() {
        if k != i && !r[j].is_zero() {
            let f = r[j].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                *x -= &f * y;
            }
        }
    }
    basis[i] = j;
}

/// Transfer to a smaller monoid with the same sets of lengths: coordinates
/// with identical nonzero columns are merged and zero columns (prime
/// coordinates) dropped.
pub fn reduce_for_transfer(p: &MonoidPresentation) -> MonoidPresentation {
    let t = p.constrained_dim();
    let mut distinct: Vec<Vec<i64>> = Vec::new();
    for j in 0..t {
        let col = p.column_class(j);
        if col.iter().any(|&x| x != 0) && !distinct.contains(&col) {
            distinct.push(col);
        }
    }
    let rows: Vec<Vec<i64>> = (0..p.num_equations())
        .map(|i| distinct.iter().map(|c| c[i]).collect())
        .filter(|r: &Vec<i64>| r.iter().any(|&x| x != 0))
        .collect();
    let eq = if rows.is_empty() {
        IntMatrix::zeros(0, distinct.len())
    } else {
        IntMatrix::from_rows(&rows, distinct.len()).expect("consistent widths")
    };
    MonoidPresentation::new(eq, 0).expect("entries taken from a valid presentation")
}

pub fn elasticity_monoid(p: &MonoidPresentation) -> BigRational {
    elasticity_witness(&reduce_for_transfer(p))
        .map(|w| w.ratio)
        .unwrap_or_else(BigRational::one)
}

pub fn is_half_factorial(p: &MonoidPresentation) -> bool {
    elasticity_monoid(p).is_one()
}

/// Whether the atoms are linearly independent, i.e. `p` is free.
pub fn is_factorial(p: &MonoidPresentation) -> bool {
    let atoms = hilbert_basis(p);
    let rows: Vec<Vec<u64>> = atoms.clone();
    IntMatrix::from_rows(&rows, p.dim())
        .map(|m| m.rank() == atoms.len())
        .unwrap_or(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{block_monoid, BlockSpec};

    fn block() -> MonoidPresentation {
        MonoidPresentation::from_rows(
            &[vec![1, -1, 0, 0, 1, -1], vec![0, 1, -1, 1, -1, 0]],
            6,
            0,
        )
        .unwrap()
    }

    #[test]
    fn block_monoid_three_halves() {
        let w = elasticity_witness(&block()).unwrap();
        assert_eq!(w.ratio, BigRational::new(3.into(), 2.into()));
        assert_eq!(w.u, vec![1, 1, 1, 0, 0]);
        assert_eq!(w.w, vec![0, 0, 0, 1, 1]);
        assert_eq!(elasticity_monoid(&block()), w.ratio);
        assert!(!is_half_factorial(&block()));
        assert!(!is_factorial(&block()));
    }

    #[test]
    fn free_and_sign_classes() {
        let f = MonoidPresentation::free(4);
        assert!(elasticity_monoid(&f).is_one());
        assert!(is_factorial(&f));
        let signs = block_monoid(&BlockSpec::new(1, vec![vec![0], vec![1], vec![-1]]).unwrap());
        assert!(is_half_factorial(&signs));
        assert!(is_factorial(&signs));
    }

    #[test]
    fn element_elasticity() {
        let p = block();
        assert_eq!(
            elasticity_element(&p, &[1; 6]).unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert!(elasticity_element(&p, &[1, 0, 0, 0, 0, 1]).unwrap().is_one());
        // h₁ + h₄
        assert!(elasticity_element(&p, &[2, 1, 1, 0, 0, 1]).unwrap().is_one());
    }

    #[test]
    fn reduction_preserves_elasticity() {
        // duplicated columns and a zero column
        let p = MonoidPresentation::from_rows(
            &[vec![1, -1, 0, 0, 1, -1, 1, 0], vec![0, 1, -1, 1, -1, 0, 0, 0]],
            8,
            1,
        )
        .unwrap();
        let r = reduce_for_transfer(&p);
        assert_eq!(r.constrained_dim(), 6);
        assert_eq!(
            elasticity_witness(&p).unwrap().ratio,
            elasticity_monoid(&p)
        );
    }
}
