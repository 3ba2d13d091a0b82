//! Number fields as finite-dimensional commutative ℚ-algebras with exact
//! structure constants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::json::rational_string;
use crate::linalg::{self, Q};

/// Coordinates with respect to the field's basis; the first basis element is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub Vec<Q>);

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        FieldElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        FieldElement(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Q) -> FieldElement {
        FieldElement(self.0.iter().map(|a| a * c).collect())
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Q> {
        self.0[1..].iter().all(Zero::is_zero).then(|| &self.0[0])
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(One::is_one)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    basis: Vec<String>,
    table: Vec<Vec<FieldElement>>,
    generators: Vec<(String, FieldElement)>,
    /// Monic minimal polynomial of `xi` over ℚ, constant term first.
    xi_minpoly: Vec<Q>,
    /// Roots of that polynomial inside the field, `xi` first.
    xi_roots: Vec<FieldElement>,
    description: String,
}

impl NumberField {
    pub fn rationals() -> NumberField {
        NumberField {
            basis: vec!["1".into()],
            table: vec![vec![FieldElement(vec![Q::one()])]],
            generators: Vec::new(),
            xi_minpoly: Vec::new(),
            xi_roots: Vec::new(),
            description: "Q".into(),
        }
    }

    /// `ℚ(ξ)` with `ξ² = q`; `q` must not be a rational square.
    pub fn quadratic(q: Q) -> Result<NumberField> {
        if is_rational_square(&q) {
            return Err(Error::input(format!(
                "xi^2 = {} is a rational square; X^2 - {} is reducible",
                rational_string(&q),
                rational_string(&q)
            )));
        }
        let mut k = NumberField::simple("xi", &[-q.clone(), Q::zero()]);
        k.xi_roots = vec![k.generator("xi").unwrap().clone(), k.generator("xi").unwrap().neg()];
        k.description = format!("Q(xi), xi^2 = {}", rational_string(&q));
        Ok(k)
    }

    /// `ℚ(ξ)` with `ξ³ + aξ² + bξ + c = 0`; the cubic must have no rational root.
    pub fn cubic(a: Q, b: Q, c: Q) -> Result<NumberField> {
        if let Some(r) = rational_root(&[c.clone(), b.clone(), a.clone()]) {
            return Err(Error::input(format!(
                "X^3 + ({})X^2 + ({})X + ({}) has the rational root {}",
                rational_string(&a),
                rational_string(&b),
                rational_string(&c),
                rational_string(&r)
            )));
        }
        let mut k = NumberField::simple("xi", &[c, b, a]);
        k.xi_roots = vec![k.generator("xi").unwrap().clone()];
        k.description = format!("Q(xi), {} = 0", poly_string(&k.xi_minpoly, "xi"));
        Ok(k)
    }

    /// The splitting field of `X³ + aX² + bX + c` over ℚ, built as `ℚ(ξ)` with
    /// a square root of the discriminant adjoined when it is missing. When
    /// the discriminant is −3 times a square the adjoined element is a
    /// primitive cube root of unity `omega`.
    pub fn splitting_field(a: Q, b: Q, c: Q) -> Result<NumberField> {
        let k = NumberField::cubic(a.clone(), b.clone(), c.clone())?;
        let disc = &a * &a * &b * &b - q4(&b * &b * &b) - q4(&a * &a * &a * &c) - linalg::q(27) * &c * &c
            + linalg::q(18) * &a * &b * &c;
        let (mut l, delta) = if let Some(s) = rational_sqrt(&disc) {
            let d = k.from_rational(s);
            (k, d)
        } else if let Some(r) = rational_sqrt(&(-&disc / linalg::q(3))) {
            let l = k.adjoin_quadratic("omega", &k.from_rational(-Q::one()), &k.from_rational(-Q::one()));
            let omega = l.generator("omega").unwrap().clone();
            let d = omega.scale(&linalg::q(2)).add(&l.one()).scale(&r);
            (l, d)
        } else {
            let l = k.adjoin_quadratic("delta", &k.zero(), &k.from_rational(disc.clone()));
            let d = l.generator("delta").unwrap().clone();
            (l, d)
        };
        let xi = l.generator("xi").unwrap().clone();
        // g'(ξ) = 3ξ² + 2aξ + b
        let deriv = l
            .mul(&xi, &xi)
            .scale(&linalg::q(3))
            .add(&xi.scale(&(linalg::q(2) * &a)))
            .add(&l.from_rational(b.clone()));
        let shift = l.mul(&delta, &l.inv(&deriv).expect("separable cubic"));
        let base = xi.add(&l.from_rational(a.clone())).neg();
        let half = linalg::q_frac(1, 2);
        l.xi_roots = vec![xi.clone(), base.add(&shift).scale(&half), base.sub(&shift).scale(&half)];
        l.description = format!("splitting field of {} over Q", poly_string(&l.xi_minpoly, "X"));
        if l.dim() > 3 {
            let (name, _) = l.generators.last().unwrap();
            l.description.push_str(&format!(", basis xi^i*{name}^j"));
        }
        Ok(l)
    }

    /// `ℚ[X]/(m)` for a monic `m` given without its leading coefficient.
    pub(crate) fn simple(name: &str, lower: &[Q]) -> NumberField {
        let d = lower.len();
        let basis: Vec<String> = (0..d)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => name.to_string(),
                _ => format!("{name}^{i}"),
            })
            .collect();
        // powers X^0 .. X^{2d-2} reduced modulo m
        let mut powers: Vec<Vec<Q>> = Vec::new();
        for e in 0..2 * d - 1 {
            let v = if e < d {
                let mut v = vec![Q::zero(); d];
                v[e] = Q::one();
                v
            } else {
                let prev = &powers[e - 1];
                let top = prev[d - 1].clone();
                let mut v = vec![Q::zero(); d];
                for i in (1..d).rev() {
                    v[i] = prev[i - 1].clone();
                }
                for (vi, li) in v.iter_mut().zip(lower) {
                    *vi -= &top * li;
                }
                v
            };
            powers.push(v);
        }
        let table = (0..d)
            .map(|i| (0..d).map(|j| FieldElement(powers[i + j].clone())).collect())
            .collect();
        let mut minpoly = lower.to_vec();
        minpoly.push(Q::one());
        let mut gen = vec![Q::zero(); d];
        gen[1.min(d - 1)] = Q::one();
        NumberField {
            basis,
            table,
            generators: vec![(name.to_string(), FieldElement(gen))],
            xi_minpoly: minpoly,
            xi_roots: Vec::new(),
            description: String::new(),
        }
    }

    /// Adjoins `Y` with `Y² = pY + q`. Irreducibility over `self` is the
    /// caller's responsibility.
    pub(crate) fn adjoin_quadratic(&self, name: &str, p: &FieldElement, q: &FieldElement) -> NumberField {
        let d = self.dim();
        let basis: Vec<String> = self
            .basis
            .iter()
            .map(Clone::clone)
            .chain(self.basis.iter().map(|b| if b == "1" { name.to_string() } else { format!("{b}*{name}") }))
            .collect();
        let lift = |lo: &FieldElement, hi: &FieldElement| {
            FieldElement(lo.0.iter().chain(&hi.0).cloned().collect())
        };
        let mut table = vec![vec![FieldElement(vec![Q::zero(); 2 * d]); 2 * d]; 2 * d];
        for i in 0..2 * d {
            for j in 0..2 * d {
                let m = &self.table[i % d][j % d];
                table[i][j] = match (i / d) + (j / d) {
                    0 => lift(m, &self.zero()),
                    1 => lift(&self.zero(), m),
                    _ => lift(&self.mul(m, q), &self.mul(m, p)),
                };
            }
        }
        let mut generators: Vec<(String, FieldElement)> = self
            .generators
            .iter()
            .map(|(n, g)| (n.clone(), lift(g, &self.zero())))
            .collect();
        generators.push((name.to_string(), lift(&self.zero(), &self.one())));
        NumberField {
            basis,
            table,
            generators,
            xi_minpoly: self.xi_minpoly.clone(),
            xi_roots: self.xi_roots.iter().map(|r| lift(r, &self.zero())).collect(),
            description: format!("{}({name}), {name}^2 = ({})*{name} + ({})", self.description, self.format(p), self.format(q)),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn generator(&self, name: &str) -> Option<&FieldElement> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.generators.iter().map(|(n, _)| n.as_str())
    }

    /// Minimal polynomial of `xi` over ℚ, constant term first; empty for ℚ.
    pub fn xi_minimal_polynomial(&self) -> &[Q] {
        &self.xi_minpoly
    }

    /// The roots of `xi`'s minimal polynomial that lie in this field.
    pub fn xi_roots(&self) -> &[FieldElement] {
        &self.xi_roots
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![Q::zero(); self.dim()])
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Q::one())
    }

    pub fn from_rational(&self, c: Q) -> FieldElement {
        let mut v = vec![Q::zero(); self.dim()];
        v[0] = c;
        FieldElement(v)
    }

    pub fn from_int(&self, c: i64) -> FieldElement {
        self.from_rational(linalg::q(c))
    }

    pub fn basis_element(&self, i: usize) -> FieldElement {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        FieldElement(v)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if self.dim() == 1 {
            return FieldElement(vec![&a.0[0] * &b.0[0]]);
        }
        let mut out = vec![Q::zero(); self.dim()];
        for (i, ai) in a.0.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.0.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let c = ai * bj;
                for (o, t) in out.iter_mut().zip(&self.table[i][j].0) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        FieldElement(out)
    }

    pub fn pow(&self, a: &FieldElement, e: u32) -> FieldElement {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    /// Multiplication by `a` as a matrix acting on coordinate columns.
    pub fn multiplication_matrix(&self, a: &FieldElement) -> Vec<Vec<Q>> {
        let cols: Vec<FieldElement> = (0..self.dim()).map(|j| self.mul(a, &self.basis_element(j))).collect();
        (0..self.dim()).map(|i| cols.iter().map(|c| c.0[i].clone()).collect()).collect()
    }

    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        if let Some(r) = a.as_rational() {
            return Some(self.from_rational(r.recip()));
        }
        let m = self.multiplication_matrix(a);
        linalg::solve(&m, &self.one().0, self.dim()).map(FieldElement)
    }

    /// Human-readable form such as `3/2 - xi^2*omega`.
    pub fn format(&self, a: &FieldElement) -> String {
        let mut s = String::new();
        for (c, name) in a.0.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match (name.as_str(), mag.is_one()) {
                ("1", _) => s.push_str(&rational_string(&mag)),
                (_, true) => s.push_str(name),
                _ => s.push_str(&format!("{}*{name}", rational_string(&mag))),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description)
    }
}

fn q4(x: Q) -> Q {
    x * linalg::q(4)
}

fn rational_sqrt(q: &Q) -> Option<Q> {
    if q.is_negative() {
        return None;
    }
    let n = num_integer::Roots::sqrt(q.numer());
    let d = num_integer::Roots::sqrt(q.denom());
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Q::new(n, d))
}

fn is_rational_square(q: &Q) -> bool {
    rational_sqrt(q).is_some()
}

fn poly_string(coeffs: &[Q], var: &str) -> String {
    let mut s = String::new();
    for (e, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => s.push_str(&rational_string(&mag)),
            (false, true) => s.push_str(&mono),
            (false, false) => s.push_str(&format!("{}*{mono}", rational_string(&mag))),
        }
    }
    s
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

/// A superset of `⌊ρ⌋` over the real roots `ρ` of `c` (constant term
/// first). Between consecutive critical points the polynomial is monotone,
/// so each such stretch is bisected over the integers.
fn root_floors(c: &[BigInt]) -> Vec<BigInt> {
    let d = c.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    if d == 1 {
        return vec![(-&c[0]).div_floor(&c[1])];
    }
    let lead = c[d].abs();
    let bound: BigInt = c[..d].iter().map(|a| Integer::div_ceil(&a.abs(), &lead)).max().unwrap() + 1;
    let derivative: Vec<BigInt> = c.iter().enumerate().skip(1).map(|(i, a)| a * BigInt::from(i)).collect();
    let critical = root_floors(&derivative);
    let mut cuts = vec![-bound.clone(), bound.clone()];
    for f in &critical {
        for x in [f.clone(), f + 1] {
            if x > -bound.clone() && x < bound {
                cuts.push(x);
            }
        }
    }
    cuts.sort();
    cuts.dedup();
    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if critical.contains(a) && b == &(a + 1) {
            out.push(a.clone());
            continue;
        }
        let (ga, gb) = (eval_int(c, a), eval_int(c, b));
        if ga.is_zero() {
            out.push(a.clone());
        }
        if gb.is_zero() {
            out.push(b.clone());
        }
        if ga.sign() * gb.sign() == num_bigint::Sign::Minus {
            let (mut lo, mut hi) = (a.clone(), b.clone());
            while &hi - &lo > BigInt::one() {
                let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
                if eval_int(c, &mid).sign() == ga.sign() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            out.push(lo);
            out.push(hi);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A rational root of the monic polynomial `X^k + lower[k-1]X^{k-1} + … + lower[0]`.
pub(crate) fn rational_root(lower: &[Q]) -> Option<Q> {
    let mut coeffs = lower.to_vec();
    coeffs.push(Q::one());
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
    if ints[0].is_zero() {
        return Some(Q::zero());
    }
    // With y = a·x for the leading coefficient a the polynomial becomes monic
    // over ℤ, so its rational roots are integers.
    let d = ints.len() - 1;
    let a = ints[d].clone();
    let monic: Vec<BigInt> = ints
        .iter()
        .enumerate()
        .map(|(i, c)| if i == d { BigInt::one() } else { c * num_traits::pow(a.clone(), d - 1 - i) })
        .collect();
    root_floors(&monic)
        .into_iter()
        .find(|y| eval_int(&monic, y).is_zero())
        .map(|y| Q::new(y, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn eval_minpoly(k: &NumberField, r: &FieldElement) -> FieldElement {
        k.xi_minimal_polynomial()
            .iter()
            .enumerate()
            .fold(k.zero(), |acc, (e, c)| acc.add(&k.pow(r, e as u32).scale(c)))
    }

    #[test]
    fn quadratic_arithmetic() {
        let k = NumberField::quadratic(q(2)).unwrap();
        let xi = k.generator("xi").unwrap().clone();
        assert_eq!(k.mul(&xi, &xi), k.from_int(2));
        let a = xi.add(&k.one());
        let inv = k.inv(&a).unwrap();
        assert!(k.mul(&a, &inv).is_one());
        assert_eq!(k.format(&a.neg()), "-1 - xi");
        assert!(NumberField::quadratic(q(4)).is_err());
        assert!(NumberField::quadratic(q_frac(9, 4)).is_err());
        assert!(NumberField::quadratic(q(-1)).is_ok());
    }

    use crate::linalg::q_frac;

    #[test]
    fn cubic_and_splitting() {
        assert!(NumberField::cubic(q(0), q(0), q(-8)).is_err());
        assert!(NumberField::cubic(q(1), q(0), q(0)).is_err());
        let l = NumberField::splitting_field(q(0), q(0), q(-2)).unwrap();
        assert_eq!(l.dim(), 6);
        assert!(l.generator("omega").is_some());
        for r in l.xi_roots() {
            assert!(eval_minpoly(&l, r).is_zero());
        }
        let roots = l.xi_roots();
        assert_ne!(roots[1], roots[2]);
        let omega = l.generator("omega").unwrap();
        assert_eq!(roots[1], l.mul(&roots[0], omega));
    }

    #[test]
    fn splitting_with_delta_and_cyclic() {
        // X^3 - 3X + 1 has square discriminant 81
        let l = NumberField::splitting_field(q(0), q(-3), q(1)).unwrap();
        assert_eq!(l.dim(), 3);
        let mut roots = l.xi_roots().to_vec();
        for r in &roots {
            assert!(eval_minpoly(&l, r).is_zero());
        }
        roots.sort();
        roots.dedup();
        assert_eq!(roots.len(), 3);
        // X^3 - X - 1: discriminant -23
        let l = NumberField::splitting_field(q(0), q(-1), q(-1)).unwrap();
        assert!(l.generator("delta").is_some());
        for r in l.xi_roots() {
            assert!(eval_minpoly(&l, r).is_zero());
        }
    }

    #[test]
    fn tower_is_associative_and_invertible() {
        let l = NumberField::splitting_field(q(0), q(0), q(-2)).unwrap();
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                let bi = l.basis_element(i);
                let bj = l.basis_element(j);
                assert_eq!(l.mul(&bi, &bj), l.mul(&bj, &bi));
                for k in 0..n {
                    let bk = l.basis_element(k);
                    assert_eq!(l.mul(&l.mul(&bi, &bj), &bk), l.mul(&bi, &l.mul(&bj, &bk)));
                }
            }
        }
        let x = FieldElement((1..=6).map(q).collect());
        assert!(l.mul(&x, &l.inv(&x).unwrap()).is_one());
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_root(&[q(-2), q(0), q(0)]), None);
        assert_eq!(rational_root(&[q_frac(-1, 8), q(0), q(0)]), Some(q_frac(1, 2)));
        // (x - 3/7)(x + 5)(x^2 + 1)
        assert_eq!(rational_root(&[q_frac(-15, 7), q_frac(32, 7), q_frac(-8, 7), q_frac(32, 7)]), Some(q(-5)));
        // x^2 - (2^61 - 1)^2 has large rational roots; x^2 - 2^61 + 1 has none.
        let m = Q::from_integer((BigInt::one() << 61) - 1);
        assert!(rational_root(&[-(&m * &m), q(0)]).is_some_and(|r| &r * &r == &m * &m));
        assert_eq!(rational_root(&[-m, q(0)]), None);
    }
}
