//! Splitting pair modules with idempotents of the endomorphism algebra.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::module::{endomorphism_algebra, Matrix, PairModule};
use super::tower::TowerAlgebra;
use super::upoly;
use crate::linalg::{self, Q};

/// Pseudorandom elements tried after the algebra basis and annihilators
/// before a summand is declared indecomposable.
pub const RANDOM_TRIALS: usize = 48;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    /// Row basis of `Wᵢ` in the coordinates of `W`.
    pub w: Vec<Vec<Q>>,
    /// Row basis of `Vᵢ = V ∩ Wᵢ`.
    pub v: Vec<Vec<Q>>,
}

impl Summand {
    pub fn k_dim(&self) -> usize {
        self.w.len() / 3
    }

    pub fn v_dim(&self) -> usize {
        self.v.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
}

impl Decomposition {
    /// `(K-dimension of Wᵢ, dimension of Vᵢ)` per summand, sorted.
    pub fn shape(&self) -> Vec<(usize, usize)> {
        let mut s: Vec<(usize, usize)> = self.summands.iter().map(|x| (x.k_dim(), x.v_dim())).collect();
        s.sort();
        s
    }
}

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn coefficient(&mut self) -> i64 {
        (self.next() % 7) as i64 - 3
    }
}

fn kernel(m: &Matrix) -> Vec<Vec<Q>> {
    linalg::span_basis(&linalg::nullspace(m, m.len()))
}

type Split = (Vec<Vec<Q>>, Vec<Vec<Q>>);

/// Two complementary `K`-stable subspaces from an element whose minimal
/// polynomial has coprime factors.
fn split_once(m: &PairModule, rng: &mut Lcg) -> Option<Split> {
    let algebra = endomorphism_algebra(m);
    if algebra.dim() <= 1 {
        return None;
    }
    let basis = &algebra.basis;
    let try_split = |e: &Matrix| {
        let mp = upoly::minimal_polynomial(e);
        let (g, h) = upoly::coprime_split(&mp)?;
        Some((kernel(&upoly::eval_matrix(&g, e)), kernel(&upoly::eval_matrix(&h, e))))
    };
    if let Some(found) = basis.iter().find_map(&try_split) {
        return Some(found);
    }
    // A generic element of a split matrix algebra has an irreducible minimal
    // polynomial, so random combinations of a dense basis rarely split.
    // Endomorphisms killing a fixed vector are singular, and a non-nilpotent
    // one has the coprime factor `x`.
    let probes = m.v_basis().iter().cloned().chain(linalg::identity(m.w_dim()));
    for w in probes {
        let images: Vec<Vec<Q>> = basis.iter().map(|b| linalg::mat_vec(b, &w)).collect();
        let system = linalg::transpose(&images, w.len());
        let ann: Vec<Matrix> = linalg::nullspace(&system, basis.len())
            .iter()
            .map(|c| combine(basis, c))
            .collect();
        if ann.is_empty() {
            continue;
        }
        if let Some(found) = ann.iter().find_map(&try_split) {
            return Some(found);
        }
        for _ in 0..4 {
            let c: Vec<Q> = ann.iter().map(|_| linalg::q(rng.coefficient())).collect();
            if let Some(found) = try_split(&combine(&ann, &c)) {
                return Some(found);
            }
        }
    }
    (0..RANDOM_TRIALS).find_map(|_| {
        let c: Vec<Q> = basis.iter().map(|_| linalg::q(rng.coefficient())).collect();
        try_split(&combine(basis, &c))
    })
}

fn combine(basis: &[Matrix], coefficients: &[Q]) -> Matrix {
    let n = basis[0].len();
    let mut e = vec![vec![Q::zero(); n]; n];
    for (b, c) in basis.iter().zip(coefficients) {
        if c.is_zero() {
            continue;
        }
        for (er, br) in e.iter_mut().zip(b) {
            for (x, y) in er.iter_mut().zip(br) {
                *x += c * y;
            }
        }
    }
    e
}

fn to_ambient(basis: &[Vec<Q>], coords: &[Vec<Q>], dim: usize) -> Vec<Vec<Q>> {
    let rows: Vec<Vec<Q>> = coords
        .iter()
        .map(|c| {
            (0..dim)
                .map(|k| basis.iter().zip(c).map(|(b, x)| &b[k] * x).sum())
                .collect()
        })
        .collect();
    linalg::span_basis(&rows)
}

/// `x` scaled to a primitive integer vector.
fn primitive(x: &[Q]) -> Vec<Q> {
    let den = x.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = x.iter().map(|c| (c * Q::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return x.to_vec();
    }
    ints.into_iter().map(|c| Q::from_integer(c / &g)).collect()
}

/// A basis of the summand `w` made of `v, αv, α²v` for small vectors `v` of
/// `V ∩ w`, so the restricted module has small coordinates.
fn adapted_basis(m: &PairModule, w: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.w_dim();
    let meet = linalg::intersection(m.v_basis(), w, n);
    let seeds = meet.iter().chain(w).map(|x| primitive(x));
    let mut out: Vec<Vec<Q>> = Vec::new();
    for v in seeds {
        let av = linalg::mat_vec(m.alpha(), &v);
        let aav = linalg::mat_vec(m.alpha(), &av);
        for x in [v, primitive(&av), primitive(&aav)] {
            if out.len() < w.len() && !linalg::in_span(&out, &x) {
                out.push(x);
            }
        }
    }
    out
}

fn decompose_with(m: &PairModule, rng: &mut Lcg) -> Vec<Summand> {
    let Some((w1, w2)) = split_once(m, rng) else {
        let w = linalg::span_basis(&linalg::identity(m.w_dim()));
        return vec![Summand { w, v: m.v_basis().to_vec() }];
    };
    let mut out = Vec::new();
    for w in [w1, w2] {
        let w = adapted_basis(m, &w);
        let sub = m.restrict(&w).expect("primary components are submodules");
        for s in decompose_with(&sub, rng) {
            out.push(Summand {
                w: to_ambient(&w, &s.w, m.w_dim()),
                v: to_ambient(&w, &s.v, m.w_dim()),
            });
        }
    }
    out
}

/// Splits `m` into summands none of which split further under the search.
pub fn decompose(m: &PairModule, seed: u64) -> Decomposition {
    let mut rng = Lcg(seed);
    let mut summands = decompose_with(m, &mut rng);
    summands.sort_by(|a, b| (a.k_dim(), a.v_dim(), &a.w).cmp(&(b.k_dim(), b.v_dim(), &b.w)));
    Decomposition { summands }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    pub k_stable: bool,
    pub spans_w: bool,
    pub direct: bool,
    pub v_components: bool,
    pub v_splits: bool,
}

impl DecompositionCheck {
    pub fn all(&self) -> bool {
        self.k_stable && self.spans_w && self.direct && self.v_components && self.v_splits
    }
}

pub fn check_decomposition(m: &PairModule, d: &Decomposition) -> DecompositionCheck {
    let n = m.w_dim();
    let all_w: Vec<Vec<Q>> = d.summands.iter().flat_map(|s| s.w.clone()).collect();
    let total: usize = d.summands.iter().map(|s| linalg::span_dim(&s.w)).sum();
    let v_components = d.summands.iter().all(|s| {
        let meet = linalg::intersection(m.v_basis(), &s.w, n);
        linalg::span_dim(&s.v) == meet.len()
            && s.v.iter().all(|x| linalg::in_span(&meet, x))
    });
    let all_v: Vec<Vec<Q>> = d
        .summands
        .iter()
        .flat_map(|s| linalg::intersection(m.v_basis(), &s.w, n))
        .collect();
    DecompositionCheck {
        k_stable: d.summands.iter().all(|s| m.is_k_stable(&s.w)),
        spans_w: linalg::span_dim(&all_w) == n,
        direct: total == n,
        v_components,
        v_splits: all_v.len() == m.v_dim() && linalg::span_dim(&all_v) == m.v_dim(),
    }
}

pub fn verify_decomposition(m: &PairModule, d: &Decomposition) -> bool {
    check_decomposition(m, d).all()
}

/// The two displayed rank-2 subspaces of `L × L`,
/// `{(x^{τ²} + y^{τ²}ω², x + yω)}` and `{(x^{τ²}ω + y^{τ²}, xω + yω²)}` for
/// `x, y ∈ K`, with `Vᵢ = V ∩ Wᵢ` taken from `m`.
pub fn displayed_rank4_decomposition(m: &PairModule) -> Decomposition {
    let l = TowerAlgebra::new();
    let t2 = l.tau_power(2);
    let omega = l.omega();
    let omega2 = l.mul(&omega, &omega);
    let one = l.field().one();
    let pair = |x: &crate::poly::FieldElement, y: &crate::poly::FieldElement, a: [&crate::poly::FieldElement; 4]| {
        // (x^{τ²}·a0 + y^{τ²}·a1, x·a2 + y·a3)
        let tx = l.apply(&t2, x);
        let ty = l.apply(&t2, y);
        let first = l.mul(&tx, a[0]).add(&l.mul(&ty, a[1]));
        let second = l.mul(x, a[2]).add(&l.mul(y, a[3]));
        first.0.into_iter().chain(second.0).collect::<Vec<Q>>()
    };
    let zero = l.field().zero();
    let sets = [[&one, &omega2, &one, &omega], [&omega, &one, &omega, &omega2]];
    let summands = sets
        .iter()
        .map(|a| {
            let mut w = Vec::new();
            for b in l.k_basis() {
                w.push(pair(&b, &zero, *a));
                w.push(pair(&zero, &b, *a));
            }
            let w = linalg::span_basis(&w);
            let v = linalg::intersection(m.v_basis(), &w, m.w_dim());
            Summand { w, v }
        })
        .collect();
    Decomposition { summands }
}
