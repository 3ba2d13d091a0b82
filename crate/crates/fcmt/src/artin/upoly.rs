//! Univariate polynomials over ℚ, constant term first, no trailing zeros.

use num_traits::{One, Zero};

use crate::linalg::{self, Q};

pub(crate) type UPoly = Vec<Q>;

fn trim(mut p: UPoly) -> UPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &UPoly) -> usize {
    p.len().saturating_sub(1)
}

fn monic(p: UPoly) -> UPoly {
    match p.last() {
        Some(c) if !c.is_one() => {
            let inv = c.recip();
            p.iter().map(|x| x * &inv).collect()
        }
        _ => p,
    }
}

pub(crate) fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Quotient and remainder.
pub(crate) fn divmod(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let mut r = trim(a.clone());
    let b = trim(b.clone());
    assert!(!b.is_empty(), "division by zero polynomial");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().recip();
    let mut q = vec![Q::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let (_, r) = divmod(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn derivative(p: &UPoly) -> UPoly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * linalg::q(i as i64)).collect())
}

fn sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let z = Q::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

/// Yun's algorithm: `p = c · ∏ sᵢ^i` with the `sᵢ` squarefree and coprime.
pub(crate) fn squarefree_parts(p: &UPoly) -> Vec<(UPoly, u32)> {
    let p = monic(trim(p.clone()));
    let mut out = Vec::new();
    if degree(&p) == 0 {
        return out;
    }
    let dp = derivative(&p);
    let a = gcd(&p, &dp);
    let mut b = divmod(&p, &a).0;
    let c = divmod(&dp, &a).0;
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    while degree(&b) > 0 {
        let g = gcd(&b, &d);
        if degree(&g) > 0 {
            out.push((g.clone(), i));
        }
        b = divmod(&b, &g).0;
        let c = divmod(&d, &g).0;
        d = sub(&c, &derivative(&b));
        i += 1;
    }
    out
}

pub(crate) fn pow(p: &UPoly, e: u32) -> UPoly {
    (0..e).fold(vec![Q::one()], |acc, _| mul(&acc, p))
}

/// A factorization `p = g·h` into coprime factors of positive degree, when
/// one is visible from rational roots or the squarefree decomposition.
pub(crate) fn coprime_split(p: &UPoly) -> Option<(UPoly, UPoly)> {
    let parts = squarefree_parts(p);
    if parts.len() >= 2 {
        let (s, i) = &parts[0];
        let g = pow(s, *i);
        let h = divmod(&monic(trim(p.clone())), &g).0;
        return Some((g, h));
    }
    let (s, i) = parts.first()?;
    if degree(s) < 2 {
        return None;
    }
    let m = monic(s.clone());
    let r = crate::poly::rational_root(&m[..m.len() - 1])?;
    let g = pow(&vec![-r, Q::one()], *i);
    let h = divmod(&monic(trim(p.clone())), &g).0;
    Some((g, h))
}

/// `p(m)` for a square matrix `m`.
pub(crate) fn eval_matrix(p: &UPoly, m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut acc = vec![vec![Q::zero(); n]; n];
    for c in p.iter().rev() {
        acc = linalg::mat_mul(&acc, m);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] += c;
        }
    }
    acc
}

/// Minimal polynomial of a square matrix, monic.
pub(crate) fn minimal_polynomial(m: &[Vec<Q>]) -> UPoly {
    let n = m.len();
    let flat = |a: &Vec<Vec<Q>>| a.iter().flatten().cloned().collect::<Vec<Q>>();
    let mut powers = vec![flat(&linalg::identity(n))];
    let mut current = linalg::identity(n);
    loop {
        current = linalg::mat_mul(&current, m);
        let target = flat(&current);
        let cols = powers.len();
        let system: Vec<Vec<Q>> = (0..n * n).map(|k| powers.iter().map(|p| p[k].clone()).collect()).collect();
        if let Some(x) = linalg::solve(&system, &target, cols) {
            let mut p: UPoly = x.into_iter().map(|c| -c).collect();
            p.push(Q::one());
            return p;
        }
        powers.push(target);
    }
}
