//! Buchberger's algorithm for reduced Gröbner bases in grevlex order.

use std::collections::BTreeSet;

use super::field::NumberField;
use super::polynomial::{Monomial, Polynomial};

/// Fully reduces `p` modulo `basis`.
pub fn reduce(p: &Polynomial, basis: &[Polynomial], k: &NumberField) -> Polynomial {
    let leads: Vec<_> = basis
        .iter()
        .filter_map(|g| g.leading().map(|(m, c)| (*m, k.inv(c).expect("nonzero"), g)))
        .collect();
    let mut rem = Polynomial::zero();
    let mut p = p.clone();
    while let Some((m, c)) = p.leading().map(|(m, c)| (*m, c.clone())) {
        match leads.iter().find(|(lm, _, _)| lm.divides(&m)) {
            Some((lm, inv, g)) => {
                let factor = k.mul(&c, inv);
                p = p.sub(&g.mul_term(&lm.quotient(&m), &factor, k));
            }
            None => {
                let lead = Polynomial::term(m, c);
                rem = rem.add(&lead);
                p = p.sub(&lead);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, k: &NumberField) -> Polynomial {
    let (mf, cf) = f.leading().expect("nonzero");
    let (mg, cg) = g.leading().expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient(&l), &k.inv(cf).expect("nonzero"), k);
    let b = g.mul_term(&mg.quotient(&l), &k.inv(cg).expect("nonzero"), k);
    a.sub(&b)
}

/// The reduced Gröbner basis: monic, inter-reduced, sorted by leading term.
/// The zero ideal has the empty basis.
pub fn groebner_basis(gens: &[Polynomial], k: &NumberField) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(k)).collect();
    let lead = |b: &[Polynomial], i: usize| *b[i].leading().unwrap().0;
    let mut pairs: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((lead(&basis, i).lcm(&lead(&basis, j)), i, j));
        }
    }
    // Smallest lcm first; a pair is skipped when its S-polynomial is coprime
    // or when some third element's leading monomial divides the lcm and both
    // connecting pairs are already done.
    while let Some((l, i, j)) = pairs.pop_first() {
        if lead(&basis, i).coprime(&lead(&basis, j)) {
            continue;
        }
        let pending = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            pairs.contains(&(lead(&basis, a).lcm(&lead(&basis, b)), a, b))
        };
        let chain = (0..basis.len())
            .any(|m| m != i && m != j && lead(&basis, m).divides(&l) && !pending(i, m) && !pending(j, m));
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j], k), &basis, k);
        if !r.is_zero() {
            let n = basis.len();
            basis.push(r.monic(k));
            for i in 0..n {
                pairs.insert((lead(&basis, i).lcm(&lead(&basis, n)), i, n));
            }
        }
    }
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let m = g.leading().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let n = h.leading().unwrap().0;
            j != i && n.divides(m) && (n != m || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            reduce(&minimal[i], &others, k).monic(k)
        })
        .collect();
    reduced.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    reduced
}

pub fn ideal_equal(i: &[Polynomial], j: &[Polynomial], k: &NumberField) -> bool {
    groebner_basis(i, k) == groebner_basis(j, k)
}

pub fn ideal_contains(gens: &[Polynomial], p: &Polynomial, k: &NumberField) -> bool {
    reduce(p, &groebner_basis(gens, k), k).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn parse(s: &[&str], k: &NumberField) -> Vec<Polynomial> {
        s.iter().map(|s| Polynomial::parse(s, k).unwrap()).collect()
    }

    #[test]
    fn same_ideal_different_generators() {
        let k = NumberField::rationals();
        assert!(ideal_equal(&parse(&["x", "y^2"], &k), &parse(&["y^2", "x + y^2"], &k), &k));
        assert!(!ideal_equal(&parse(&["x", "y^2"], &k), &parse(&["x", "y"], &k), &k));
        assert!(ideal_equal(&[], &parse(&["0"], &k), &k));
    }

    #[test]
    fn unit_ideal() {
        let k = NumberField::quadratic(q(2)).unwrap();
        let gb = groebner_basis(&parse(&["x - y", "xi*y + x", "x*y"], &k), &k);
        assert_eq!(gb, parse(&["y", "x"], &k));
        assert!(ideal_contains(&parse(&["x - y", "xi*y + x"], &k), &parse(&["x"], &k)[0], &k));
    }

    #[test]
    fn generators_reduce_to_zero() {
        let k = NumberField::quadratic(q(3)).unwrap();
        let gens = parse(&["x^2*y - xi*y^3", "x*y^2 - x", "x^3 - y^2*xi"], &k);
        let gb = groebner_basis(&gens, &k);
        for g in &gens {
            assert!(reduce(g, &gb, &k).is_zero());
        }
        let mut shuffled = gens.clone();
        shuffled.reverse();
        assert_eq!(groebner_basis(&shuffled, &k), gb);
    }

    #[test]
    fn two_quadrics() {
        let k = NumberField::rationals();
        let gens = parse(&["x*t - y^2", "y*t - x^2"], &k);
        assert!(ideal_contains(&gens, &Polynomial::parse("x^3 - y^3", &k).unwrap(), &k));
        assert!(!ideal_contains(&gens, &Polynomial::x(&k), &k));
    }
}
