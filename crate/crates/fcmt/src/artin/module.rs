//! Modules `V → W` over the Artinian pair `ℚ → K`.

use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use super::tower::TowerAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};

pub type Matrix = Vec<Vec<Q>>;

/// How `K` acts on `L × L` in the rank-4 module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// `s·(x, y) = (sx, sy)`.
    Paper,
    /// `s·(x, y) = (s^{τ²}x, sy)`.
    TauSquared,
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Convention::Paper),
            "tau2" | "tau_squared" => Ok(Convention::TauSquared),
            _ => Err(Error::input(format!("unknown convention {s:?}; expected paper or tau2"))),
        }
    }
}

/// `W` is a rational vector space with the action of `α` given as a matrix
/// (so `W` is a `K`-module); `V` is a rational subspace with `K·V = W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairModule {
    alpha: Matrix,
    v: Vec<Vec<Q>>,
}

impl PairModule {
    pub fn new(alpha: Matrix, v: Vec<Vec<Q>>) -> Result<PairModule> {
        let n = alpha.len();
        if alpha.iter().any(|r| r.len() != n) {
            return Err(Error::input("the action of alpha must be a square matrix"));
        }
        if v.iter().any(|x| x.len() != n) {
            return Err(Error::input(format!("V vectors must have length {n}")));
        }
        let a3 = linalg::mat_mul(&alpha, &linalg::mat_mul(&alpha, &alpha));
        let two: Matrix = linalg::identity(n)
            .into_iter()
            .map(|r| r.into_iter().map(|x| x * q(2)).collect())
            .collect();
        if a3 != two {
            return Err(Error::input("the action of alpha does not satisfy alpha^3 = 2"));
        }
        let m = PairModule { alpha, v: linalg::span_basis(&v) };
        if linalg::span_dim(&m.k_span(&m.v)) != n {
            return Err(Error::input(format!(
                "K.V has rational dimension {} but W has dimension {n}",
                linalg::span_dim(&m.k_span(&m.v))
            )));
        }
        Ok(m)
    }

    /// The pair `ℚ → K` itself.
    pub fn base() -> PairModule {
        let l = TowerAlgebra::new();
        let a = l.multiplication(&l.alpha());
        let alpha = a[..3].iter().map(|r| r[..3].to_vec()).collect();
        PairModule::new(alpha, vec![vec![q(1), q(0), q(0)]]).expect("valid")
    }

    pub fn direct_sum(parts: &[PairModule]) -> PairModule {
        let n: usize = parts.iter().map(PairModule::w_dim).sum();
        let mut alpha = vec![vec![Q::zero(); n]; n];
        let mut v = Vec::new();
        let mut off = 0;
        for p in parts {
            for (i, row) in p.alpha.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    alpha[off + i][off + j] = x.clone();
                }
            }
            for x in &p.v {
                let mut y = vec![Q::zero(); n];
                y[off..off + x.len()].clone_from_slice(x);
                v.push(y);
            }
            off += p.w_dim();
        }
        PairModule::new(alpha, v).expect("sums of modules are modules")
    }

    pub fn w_dim(&self) -> usize {
        self.alpha.len()
    }

    pub fn v_dim(&self) -> usize {
        self.v.len()
    }

    /// Dimension of `W` over `K`.
    pub fn k_dim(&self) -> usize {
        self.w_dim() / 3
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn v_basis(&self) -> &[Vec<Q>] {
        &self.v
    }

    /// Row basis of `K·span(vectors)`.
    pub fn k_span(&self, vectors: &[Vec<Q>]) -> Vec<Vec<Q>> {
        let mut all = vectors.to_vec();
        for x in vectors {
            let ax = linalg::mat_vec(&self.alpha, x);
            all.push(linalg::mat_vec(&self.alpha, &ax));
            all.push(ax);
        }
        linalg::span_basis(&all)
    }

    pub fn is_k_stable(&self, subspace: &[Vec<Q>]) -> bool {
        subspace
            .iter()
            .all(|x| linalg::in_span(subspace, &linalg::mat_vec(&self.alpha, x)))
    }

    /// The same module in coordinates `x' = P⁻¹x`.
    pub fn transformed(&self, p: &Matrix) -> Result<PairModule> {
        let inv = linalg::inverse(p).ok_or_else(|| Error::input("change of basis is singular"))?;
        let alpha = linalg::mat_mul(&inv, &linalg::mat_mul(&self.alpha, p));
        let v = self.v.iter().map(|x| linalg::mat_vec(&inv, x)).collect();
        PairModule::new(alpha, v)
    }

    /// The module on a `K`-stable subspace `w` of `W` with `V ∩ w`, in the
    /// coordinates of the given basis of `w`.
    pub(crate) fn restrict(&self, w: &[Vec<Q>]) -> Result<PairModule> {
        let dim = w.len();
        let cols = linalg::transpose(w, self.w_dim());
        let coords = |x: &[Q]| linalg::solve(&cols, x, dim).expect("vector lies in the subspace");
        let images: Vec<Vec<Q>> = w.iter().map(|b| coords(&linalg::mat_vec(&self.alpha, b))).collect();
        let alpha = linalg::transpose(&images, dim);
        let v = linalg::intersection(&self.v, w, self.w_dim())
            .iter()
            .map(|x| coords(x))
            .collect();
        PairModule::new(alpha, v)
    }
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len() + b.len();
    let mut m = vec![vec![Q::zero(); n]; n];
    for (i, r) in a.iter().enumerate() {
        m[i][..a.len()].clone_from_slice(r);
    }
    for (i, r) in b.iter().enumerate() {
        m[a.len() + i][a.len()..].clone_from_slice(r);
    }
    m
}

/// `L → L × L`, `u ↦ (u^{τᵇ}, u)`, with `s·(x, y) = (s^{τᵃ}x, sy)`. This is
/// a module exactly when `a ≠ b`; for `a = b` the image of `L` is already
/// `K`-stable.
pub fn twisted_rank4_module(a: u32, b: u32) -> Result<PairModule> {
    let l = TowerAlgebra::new();
    let tb = l.tau_power(b);
    let first = l.multiplication(&l.apply(&l.tau_power(a), &l.alpha()));
    let v = (0..6)
        .map(|i| {
            let e = l.field().basis_element(i);
            l.apply(&tb, &e).0.into_iter().chain(e.0).collect()
        })
        .collect();
    PairModule::new(block_diag(&first, &l.multiplication(&l.alpha())), v)
}

/// The rank-4 module under either action: `Paper` is the diagonal action
/// with `V = {(u^{τ²}, u)}`; `TauSquared` is `s·(x, y) = (s^{τ²}x, sy)` with
/// `V = {(u^τ, u)}`. Both are images of `(x, y) ↦ (x, x)` with
/// `s·(x, y) = (s^τ x, sy)` under `(x, y) ↦ (x^{τ^e}, y)`, for `e = 2, 1`.
pub fn build_rank4_module(convention: Convention) -> PairModule {
    let (a, b) = match convention {
        Convention::Paper => (0, 2),
        Convention::TauSquared => (2, 1),
    };
    twisted_rank4_module(a, b).expect("K.V = W for the rank-4 module")
}

/// `K → L × K`, `x ↦ (x, x)`, with `s·(x, y) = (s^τ x, sy)`.
pub fn build_rank3_module() -> PairModule {
    let l = TowerAlgebra::new();
    let tau_alpha = l.apply(l.tau(), &l.alpha());
    let on_k: Matrix = l.multiplication(&l.alpha())[..3].iter().map(|r| r[..3].to_vec()).collect();
    let v = (0..3)
        .map(|i| {
            let b = l.field().basis_element(i);
            b.0.iter().cloned().chain(b.0[..3].iter().cloned()).collect()
        })
        .collect();
    PairModule::new(block_diag(&l.multiplication(&tau_alpha), &on_k), v)
        .expect("K.V = W for the rank-3 module")
}

/// A rational basis of the endomorphisms of `W` commuting with `K` and
/// mapping `V` into itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndomorphismAlgebra {
    pub basis: Vec<Matrix>,
}

impl EndomorphismAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn has_non_scalar(&self) -> bool {
        self.basis.iter().any(|e| {
            let c = &e[0][0];
            e.iter().enumerate().any(|(i, r)| {
                r.iter().enumerate().any(|(j, x)| if i == j { x != c } else { !x.is_zero() })
            })
        })
    }
}

pub fn endomorphism_algebra(m: &PairModule) -> EndomorphismAlgebra {
    let n = m.w_dim();
    let idx = |i: usize, j: usize| i * n + j;
    let mut system: Vec<Vec<Q>> = Vec::new();
    // E·A − A·E = 0
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Q::zero(); n * n];
            for k in 0..n {
                row[idx(i, k)] += &m.alpha[k][j];
                row[idx(k, j)] -= &m.alpha[i][k];
            }
            system.push(row);
        }
    }
    // c·(E v) = 0 for c annihilating V
    let annihilator = linalg::nullspace(&m.v, n);
    for c in &annihilator {
        for v in &m.v {
            let mut row = vec![Q::zero(); n * n];
            for i in 0..n {
                for j in 0..n {
                    row[idx(i, j)] = &c[i] * &v[j];
                }
            }
            system.push(row);
        }
    }
    let basis = linalg::nullspace(&system, n * n)
        .into_iter()
        .map(|x| x.chunks(n).map(<[Q]>::to_vec).collect())
        .collect();
    EndomorphismAlgebra { basis }
}
