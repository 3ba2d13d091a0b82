//! Independent oracles shared by the integration tests. Nothing here calls
//! the algorithms under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn satisfies(rows: &[Vec<i64>], v: &[u64]) -> bool {
    rows.iter()
        .all(|r| r.iter().zip(v).map(|(&a, &x)| a * x as i64).sum::<i64>() == 0)
}

/// Minimal nonzero solutions of `rows · v = 0` in `ℕᵗ` with coordinate sum at
/// most `max_degree`, found by enumerating vectors in order of degree.
pub fn minimal_solutions(rows: &[Vec<i64>], t: usize, max_degree: u64) -> Vec<Vec<u64>> {
    minimal_solutions_boxed(rows, &vec![max_degree; t], max_degree)
}

/// As [`minimal_solutions`] with coordinate `i` at most `caps[i]`.
pub fn minimal_solutions_boxed(rows: &[Vec<i64>], caps: &[u64], max_degree: u64) -> Vec<Vec<u64>> {
    let t = caps.len();
    let mut found: Vec<Vec<u64>> = Vec::new();
    if t == 0 {
        return found;
    }
    // Interval of `Σ_{j ≥ i} a_j x_j` per row over the box.
    let reach: Vec<Vec<(i64, i64)>> = rows
        .iter()
        .map(|r| {
            let mut out = vec![(0, 0); t + 1];
            for i in (0..t).rev() {
                let c = r[i] * caps[i] as i64;
                let (lo, hi) = out[i + 1];
                out[i] = (lo + c.min(0), hi + c.max(0));
            }
            out
        })
        .collect();
    let mut search = Search { rows, caps, reach, found: Vec::new(), v: vec![0; t], partial: vec![0; rows.len()] };
    for d in 1..=max_degree {
        search.found = std::mem::take(&mut found);
        let mut new = Vec::new();
        search.fill(0, d, &mut new);
        found = std::mem::take(&mut search.found);
        found.extend(new);
    }
    found.sort();
    found
}

fn dominates(v: &[u64], m: &[u64]) -> bool {
    v.iter().zip(m).all(|(a, b)| a >= b)
}

struct Search<'a> {
    rows: &'a [Vec<i64>],
    caps: &'a [u64],
    reach: Vec<Vec<(i64, i64)>>,
    found: Vec<Vec<u64>>,
    v: Vec<u64>,
    partial: Vec<i64>,
}

impl Search<'_> {
    fn fill(&mut self, i: usize, left: u64, out: &mut Vec<Vec<u64>>) {
        if self.found.iter().any(|m| dominates(&self.v, m)) {
            return;
        }
        if (0..self.rows.len()).any(|r| {
            let (lo, hi) = self.reach[r][i];
            self.partial[r] + lo > 0 || self.partial[r] + hi < 0
        }) {
            return;
        }
        let t = self.v.len();
        if i + 1 == t {
            if left > self.caps[i] {
                return;
            }
            self.v[i] = left;
            let ok = self.rows.iter().zip(&self.partial).all(|(r, p)| p + r[i] * left as i64 == 0);
            if ok && !self.found.iter().any(|m| dominates(&self.v, m)) {
                out.push(self.v.clone());
            }
            self.v[i] = 0;
            return;
        }
        for x in 0..=left.min(self.caps[i]) {
            self.v[i] = x;
            for (r, p) in self.rows.iter().zip(self.partial.iter_mut()) {
                *p += r[i] * x as i64;
            }
            self.fill(i + 1, left - x, out);
            for (r, p) in self.rows.iter().zip(self.partial.iter_mut()) {
                *p -= r[i] * x as i64;
            }
        }
        self.v[i] = 0;
    }
}

fn rational_nullspace(rows: &[Vec<i64>], cols: &[usize]) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| cols.iter().map(|&c| BigRational::from_integer(r[c].into())).collect())
        .collect();
    let n = cols.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..n {
        let Some(p) = (row..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][c].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..n {
                    let d = &f * &m[row][j];
                    m[i][j] = &m[i][j] - d;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); n];
            v[free] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Nonnegative circuits of `rows`: primitive kernel vectors with minimal
/// support. They include every extreme ray of the cone `ker(rows) ∩ ℝ₊ᵗ`.
pub fn nonnegative_circuits(rows: &[Vec<i64>], t: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for size in 1..=(rows.len() + 1).min(t) {
        for support in subsets(t, size) {
            let kernel = rational_nullspace(rows, &support);
            if kernel.len() != 1 || kernel[0].iter().any(|x| x.is_zero()) {
                continue;
            }
            let v = &kernel[0];
            let denom = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            let sign = if ints[0].is_negative() { -1 } else { 1 };
            if ints.iter().any(|x| x.is_negative() != ints[0].is_negative()) {
                continue;
            }
            let mut full = vec![0u64; t];
            for (&c, x) in support.iter().zip(&ints) {
                full[c] = u64::try_from(x * sign / &g).expect("small circuit");
            }
            out.push(full);
        }
    }
    out
}

/// Hilbert basis of `ker(rows) ∩ ℕᵗ ⊕ ℕᵘ`.
///
/// Every atom `h` lies in the cone of at most `d` linearly independent
/// circuits `gᵢ` (`d` the dimension of the kernel), and `h = Σ λᵢgᵢ` with all
/// `λᵢ < 1` unless `h` is a circuit itself. So each coordinate of an atom is
/// at most the sum of the `d` largest circuit values in that coordinate, and
/// the same holds for the degree.
pub fn oracle_hilbert_basis(rows: &[Vec<i64>], t: usize, u: usize) -> Vec<Vec<u64>> {
    let circuits = nonnegative_circuits(rows, t);
    let d = rational_nullspace(rows, &(0..t).collect::<Vec<_>>()).len().max(1);
    let top = |mut xs: Vec<u64>| -> u64 {
        xs.sort_unstable_by(|a, b| b.cmp(a));
        xs.iter().take(d).sum()
    };
    let bound = top(circuits.iter().map(|c| c.iter().sum()).collect());
    let caps: Vec<u64> = (0..t).map(|i| top(circuits.iter().map(|c| c[i]).collect())).collect();
    let support: Vec<usize> = (0..t).filter(|&i| caps[i] > 0).collect();
    let reduced: Vec<Vec<i64>> = rows.iter().map(|r| support.iter().map(|&i| r[i]).collect()).collect();
    let support_caps: Vec<u64> = support.iter().map(|&i| caps[i]).collect();
    let mut out: Vec<Vec<u64>> = minimal_solutions_boxed(&reduced, &support_caps, bound)
        .into_iter()
        .map(|a| {
            let mut full = vec![0u64; t + u];
            for (&i, x) in support.iter().zip(a) {
                full[i] = x;
            }
            full
        })
        .collect();
    for j in 0..u {
        let mut e = vec![0u64; t + u];
        e[t + j] = 1;
        out.push(e);
    }
    out.sort();
    out
}

/// Every element of `ker(rows) ∩ ℕᵗ` with coordinate sum at most `max_degree`.
pub fn elements_up_to(rows: &[Vec<i64>], t: usize, max_degree: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut v = vec![0u64; t];
    fn walk(rows: &[Vec<i64>], v: &mut Vec<u64>, i: usize, left: u64, out: &mut Vec<Vec<u64>>) {
        if i == v.len() {
            if v.iter().any(|&x| x > 0) && satisfies(rows, v) {
                out.push(v.clone());
            }
            return;
        }
        for x in 0..=left {
            v[i] = x;
            walk(rows, v, i + 1, left - x, out);
        }
        v[i] = 0;
    }
    walk(rows, &mut v, 0, max_degree, &mut out);
    out
}

/// Sets of lengths by memoized recursion over the given atoms.
pub struct LengthOracle {
    atoms: Vec<Vec<u64>>,
    memo: HashMap<Vec<u64>, BTreeSet<u64>>,
}

impl LengthOracle {
    pub fn new(atoms: Vec<Vec<u64>>) -> Self {
        LengthOracle { atoms, memo: HashMap::new() }
    }

    pub fn lengths(&mut self, v: &[u64]) -> BTreeSet<u64> {
        if v.iter().all(|&x| x == 0) {
            return [0].into();
        }
        if let Some(s) = self.memo.get(v) {
            return s.clone();
        }
        let mut out = BTreeSet::new();
        for i in 0..self.atoms.len() {
            let a = &self.atoms[i];
            if dominates(v, a) {
                let rest: Vec<u64> = v.iter().zip(a).map(|(x, y)| x - y).collect();
                out.extend(self.lengths(&rest).into_iter().map(|l| l + 1));
            }
        }
        self.memo.insert(v.to_vec(), out.clone());
        out
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `gcd` of all `k × k` minors (zero when there are none or all vanish).
pub fn determinantal_divisor(m: &[Vec<BigInt>], cols: usize, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(m.len(), k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g.abs()
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], inner: usize, cols: usize) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &r[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}
