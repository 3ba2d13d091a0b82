//! Hermite and Smith normal forms over the integers, with transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `x·a + y·b = g` with `g = gcd(a, b) ≥ 0`.
pub(crate) fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Coefficients of the unimodular 2×2 transform sending `(a, b)` to `(g, 0)`.
fn gcd_transform(a: &BigInt, b: &BigInt) -> [BigInt; 4] {
    if !a.is_zero() && b.is_multiple_of(a) {
        return [BigInt::one(), BigInt::zero(), -(b / a), BigInt::one()];
    }
    let (g, x, y) = ext_gcd(a, b);
    [x, y, -(b / &g), a / &g]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    /// Row-style Hermite normal form: echelon, positive pivots, entries above
    /// each pivot reduced into `[0, pivot)`, zero rows last.
    pub h: IntMatrix,
    /// Unimodular transform with `u · m = h`.
    pub u: IntMatrix,
}

impl HermiteForm {
    /// Nonzero rows of `h`.
    pub fn rank(&self) -> usize {
        (0..self.h.rows())
            .filter(|&r| self.h.row(r).iter().any(|x| !x.is_zero()))
            .count()
    }

    /// Checks `u · m = h`, unimodularity and the echelon shape.
    pub fn satisfies_postconditions(&self, m: &IntMatrix) -> bool {
        self.u.is_unimodular()
            && self.u.mul(m).map(|p| p == self.h).unwrap_or(false)
            && is_hermite(&self.h)
    }
}

fn is_hermite(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero_row = false;
    for r in 0..h.rows() {
        let pivot = (0..h.cols()).find(|&c| !h.get(r, c).is_zero());
        match pivot {
            None => seen_zero_row = true,
            Some(c) => {
                if seen_zero_row || last_pivot.is_some_and(|p| c <= p) {
                    return false;
                }
                let p = h.get(r, c);
                if !p.is_positive() {
                    return false;
                }
                for above in 0..r {
                    let v = h.get(above, c);
                    if v.is_negative() || v >= p {
                        return false;
                    }
                }
                last_pivot = Some(c);
            }
        }
    }
    true
}

pub fn hermite_normal_form(m: &IntMatrix) -> HermiteForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h.get(i, c).is_zero() {
                continue;
            }
            let t = gcd_transform(h.get(r, c), h.get(i, c));
            let coeffs = [&t[0], &t[1], &t[2], &t[3]];
            h.combine_rows(r, i, coeffs);
            u.combine_rows(r, i, coeffs);
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h.get(r, c).clone();
        for i in 0..r {
            let q = h.get(i, c).div_floor(&pivot);
            if !q.is_zero() {
                let k = -q;
                h.add_row_multiple(i, r, &k);
                u.add_row_multiple(i, r, &k);
            }
        }
        r += 1;
    }
    let form = HermiteForm { h, u };
    assert!(
        form.satisfies_postconditions(m),
        "Hermite normal form postcondition failed"
    );
    form
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal with `d₁ | d₂ | …`, nonnegative entries.
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    /// Nonzero diagonal entries (the invariant factors).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn satisfies_postconditions(&self, m: &IntMatrix) -> bool {
        let product = self.u.mul(m).and_then(|um| um.mul(&self.v));
        if product.map(|p| p != self.d).unwrap_or(true) {
            return false;
        }
        if !self.u.is_unimodular() || !self.v.is_unimodular() {
            return false;
        }
        for r in 0..self.d.rows() {
            for c in 0..self.d.cols() {
                if r != c && !self.d.get(r, c).is_zero() {
                    return false;
                }
            }
        }
        let diag = self.diagonal();
        if diag.iter().any(Signed::is_negative) {
            return false;
        }
        diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        })
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                let x = d.get(r, c);
                if !x.is_zero() && best.is_none_or(|(br, bc)| x.abs() < d.get(br, bc).abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let tr = gcd_transform(d.get(t, t), d.get(i, t));
                let coeffs = [&tr[0], &tr[1], &tr[2], &tr[3]];
                d.combine_rows(t, i, coeffs);
                u.combine_rows(t, i, coeffs);
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let tr = gcd_transform(d.get(t, t), d.get(t, j));
                let coeffs = [&tr[0], &tr[1], &tr[2], &tr[3]];
                d.combine_cols(t, j, coeffs);
                v.combine_cols(t, j, coeffs);
            }
            if (t + 1..rows).any(|i| !d.get(i, t).is_zero()) {
                continue;
            }
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    let form = SmithForm { d, u, v };
    assert!(
        form.satisfies_postconditions(m),
        "Smith normal form postcondition failed"
    );
    form
}

/// Canonical basis (HNF rows) of the lattice spanned by `generators`.
pub fn lattice_hnf(generators: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let m = IntMatrix::from_big_rows(generators.to_vec(), dim).expect("generator length");
    let hf = hermite_normal_form(&m);
    (0..hf.h.rows())
        .map(|r| hf.h.row(r).to_vec())
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect()
}

/// ℤ-basis of `{v ∈ ℤᵗ : a·v = 0}` in Hermite normal form.
pub fn kernel_lattice_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let t = a.cols();
    let hf = hermite_normal_form(&a.transpose());
    let basis: Vec<Vec<BigInt>> = (0..t)
        .filter(|&r| hf.h.row(r).iter().all(Zero::is_zero))
        .map(|r| hf.u.row(r).to_vec())
        .collect();
    if basis.is_empty() {
        return basis;
    }
    lattice_hnf(&basis, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows, 0).unwrap()
    }

    #[test]
    fn hnf_identity_and_zero() {
        let id = IntMatrix::identity(2);
        let hf = hermite_normal_form(&id);
        assert_eq!(hf.h, id);
        assert_eq!(hf.u, id);
        let z = IntMatrix::zeros(2, 3);
        let hf = hermite_normal_form(&z);
        assert_eq!(hf.h, z);
        assert_eq!(hf.u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_small_example() {
        let a = m(&[vec![2, 4], vec![1, 3]]);
        let hf = hermite_normal_form(&a);
        // Entries above pivots reduced into [0, pivot): [[1,3],[0,2]] becomes [[1,1],[0,2]].
        assert_eq!(hf.h, m(&[vec![1, 1], vec![0, 2]]));
        assert_eq!(hf.u.mul(&a).unwrap(), hf.h);
        assert!(hf.u.determinant().unwrap().abs().is_one());
    }

    #[test]
    fn snf_examples() {
        let sf = smith_normal_form(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(sf.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let z = smith_normal_form(&IntMatrix::zeros(2, 2));
        assert!(z.d.is_zero());
    }

    #[test]
    fn snf_of_two_row_class_matrix() {
        let a4 = m(&[
            vec![1, -1, 0, 0, 1, -1, -1, 1],
            vec![0, 1, -1, 1, -1, 0, 0, 0],
        ]);
        let sf = smith_normal_form(&a4);
        assert_eq!(sf.diagonal(), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(sf.d.cols(), 8);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_lattice_basis(&m(&[vec![1, -1]]));
        assert_eq!(k, vec![vec![BigInt::from(1), BigInt::from(1)]]);
        let k = kernel_lattice_basis(&IntMatrix::zeros(0, 3));
        assert_eq!(k.len(), 3);
        assert_eq!(lattice_hnf(&k, 3), k);
        let a4 = m(&[
            vec![1, -1, 0, 0, 1, -1, -1, 1],
            vec![0, 1, -1, 1, -1, 0, 0, 0],
        ]);
        let k = kernel_lattice_basis(&a4);
        assert_eq!(k.len(), 6);
        for v in &k {
            assert!(a4.apply(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn ext_gcd_signs() {
        for (a, b) in [(0, 5), (5, 0), (-4, 6), (7, -3), (0, 0), (-2, -8)] {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            let (g, x, y) = ext_gcd(&a, &b);
            assert!(!g.is_negative());
            assert_eq!(&x * &a + &y * &b, g);
        }
    }
}
