//! Parametrizations of the branches of a plane curve and cokernel ranks at
//! its minimal primes.

use serde::Serialize;

use super::field::NumberField;
use super::mf::PolyMatrix;
use super::polynomial::Polynomial;
use crate::catalog::{Family, RingType};
use crate::error::{Error, Result};

/// `x ← x(t)`, `y ← y(t)` tracing the branch cut out by `prime`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchParam {
    pub prime: Polynomial,
    pub x: Polynomial,
    pub y: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchStrings {
    pub prime: String,
    pub x: String,
    pub y: String,
}

impl BranchParam {
    fn new(prime: &str, x: &str, y: &str, k: &NumberField) -> BranchParam {
        let p = |s: &str| Polynomial::parse(s, k).expect("branch data is well formed");
        let b = BranchParam { prime: p(prime), x: p(x), y: p(y) };
        debug_assert!(b.vanishes_on(&b.prime, k));
        b
    }

    fn with_elements(prime: Polynomial, x: Polynomial, y: Polynomial) -> BranchParam {
        BranchParam { prime, x, y }
    }

    pub fn substitute(&self, p: &Polynomial, k: &NumberField) -> Polynomial {
        p.substitute(&[self.x.clone(), self.y.clone(), Polynomial::t(k)], k)
    }

    pub fn vanishes_on(&self, p: &Polynomial, k: &NumberField) -> bool {
        self.substitute(p, k).is_zero()
    }

    pub fn strings(&self, k: &NumberField) -> BranchStrings {
        BranchStrings {
            prime: self.prime.to_string(k),
            x: self.x.to_string(k),
            y: self.y.to_string(k),
        }
    }
}

fn needs_xi_square(ring: RingType, k: &NumberField) -> Result<()> {
    let m = k.xi_minimal_polynomial();
    if m.len() == 3 && m[1] == Default::default() {
        Ok(())
    } else {
        Err(Error::input(format!("{ring} needs a field with xi^2 rational, got {k}")))
    }
}

/// One parametrization per minimal prime of the completion, in the fixed
/// prime order of the rank tables. For `A2ₙ`, `D2ₙ` and `D3` these are the
/// primes after extending scalars to `k`, which must contain `ξ` (for `D3`,
/// the roots of the cubic that `k` contains).
pub fn branch_parametrizations(ring: RingType, k: &NumberField) -> Result<Vec<BranchParam>> {
    if ring.primed {
        return Err(Error::Unsupported(format!("{ring} is not a hypersurface")));
    }
    let n = ring.n;
    let b = |prime: &str, x: &str, y: &str| BranchParam::new(prime, x, y, k);
    Ok(match ring.family {
        Family::A if n.is_multiple_of(2) => vec![b(&format!("x^2 - y^{}", n + 1), &format!("t^{}", n + 1), "t^2")],
        Family::A => {
            let m = n.div_ceil(2);
            vec![
                b(&format!("x - y^{m}"), &format!("t^{m}"), "t"),
                b(&format!("x + y^{m}"), &format!("-t^{m}"), "t"),
            ]
        }
        Family::D if n.is_multiple_of(2) => {
            let m = (n - 2) / 2;
            vec![
                b("y", "t", "0"),
                b(&format!("x - y^{m}"), &format!("t^{m}"), "t"),
                b(&format!("x + y^{m}"), &format!("-t^{m}"), "t"),
            ]
        }
        Family::D => vec![
            b("y", "t", "0"),
            b(&format!("x^2 - y^{}", n - 2), &format!("t^{}", n - 2), "t^2"),
        ],
        Family::E6 => vec![b("x^3 - y^4", "t^4", "t^3")],
        Family::E7 => vec![b("x", "0", "t"), b("x^2 - y^3", "t^3", "t^2")],
        Family::E8 => vec![b("x^3 - y^5", "t^5", "t^3")],
        Family::A2 => {
            needs_xi_square(ring, k)?;
            let e = n + 1;
            vec![
                b(&format!("x - xi*y^{e}"), &format!("xi*t^{e}"), "t"),
                b(&format!("x + xi*y^{e}"), &format!("-xi*t^{e}"), "t"),
            ]
        }
        Family::D2 => {
            needs_xi_square(ring, k)?;
            vec![
                b("x - y", "t", "t"),
                b(&format!("x - xi*y^{n}"), &format!("xi*t^{n}"), "t"),
                b(&format!("x + xi*y^{n}"), &format!("-xi*t^{n}"), "t"),
            ]
        }
        Family::D3 => {
            if k.xi_minimal_polynomial().len() != 4 {
                return Err(Error::input(format!("{ring} needs a cubic field or its splitting field, got {k}")));
            }
            let x = Polynomial::x(k);
            let t = Polynomial::t(k);
            k.xi_roots()
                .iter()
                .map(|r| {
                    let prime = Polynomial::y(k).sub(&x.scale(r, k));
                    BranchParam::with_elements(prime, t.clone(), t.scale(r, k))
                })
                .collect()
        }
    })
}

/// Rank over `K(t)` by fraction-free elimination on polynomials in `t`.
pub fn rank_over_rational_functions(m: &PolyMatrix, k: &NumberField) -> usize {
    let mut a: PolyMatrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let (pivot, lead) = (a[r][c].clone(), a[i][c].clone());
            for j in c..cols {
                a[i][j] = a[i][j].mul(&pivot, k).sub(&a[r][j].mul(&lead, k));
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Rank of `cok(M)` at the branch's minimal prime.
pub fn rank_at_branch(m: &PolyMatrix, b: &BranchParam, k: &NumberField) -> usize {
    let sub: PolyMatrix = m.iter().map(|r| r.iter().map(|p| b.substitute(p, k)).collect()).collect();
    m.len() - rank_over_rational_functions(&sub, k)
}

pub fn rank_vector(m: &PolyMatrix, ring: RingType, k: &NumberField) -> Result<Vec<usize>> {
    Ok(branch_parametrizations(ring, k)?
        .iter()
        .map(|b| rank_at_branch(m, b, k))
        .collect())
}

/// The type after adjoining `ξ` (all roots of the cubic for `D3`), whose
/// rank table indexes the branches above: `A2ₙ → A_{2n+1}`,
/// `D2ₙ → D_{2n+2}`, `D3 → D₄`. Other types are returned unchanged.
pub fn split_type(ring: RingType) -> RingType {
    let (family, n) = match ring.family {
        Family::A2 => (Family::A, 2 * ring.n + 1),
        Family::D2 => (Family::D, 2 * ring.n + 2),
        Family::D3 => (Family::D, 4),
        _ => return ring,
    };
    RingType { family, n, primed: ring.primed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::poly::{mf_family, MfSpec};

    fn k() -> NumberField {
        NumberField::quadratic(q(2)).unwrap()
    }

    #[test]
    fn a2_branches() {
        let k = k();
        let bs = branch_parametrizations("A2:2".parse().unwrap(), &k).unwrap();
        assert_eq!(bs.len(), 2);
        assert_eq!(bs[0].x.to_string(&k), "xi*t^3");
        assert_eq!(bs[1].x.to_string(&k), "-xi*t^3");
        let f = crate::poly::a2_polynomial(2, &k).unwrap();
        for b in &bs {
            assert!(b.vanishes_on(&f, &k));
        }
    }

    #[test]
    fn every_hypersurface_branch_vanishes() {
        let k = k();
        for s in ["A0", "A1", "A4", "A5", "D4", "D5", "D6", "D9", "E6", "E7", "E8", "A2:3", "D2:2"] {
            let ring: RingType = s.parse().unwrap();
            let bs = branch_parametrizations(ring, &k).unwrap();
            let expected = match ring.family {
                Family::A2 => 2,
                Family::D2 => 3,
                _ => ring.num_primes(),
            };
            assert_eq!(bs.len(), expected, "{s}");
            for b in &bs {
                assert!(b.vanishes_on(&b.prime, &k), "{s}");
                for other in &bs {
                    if other != b {
                        assert!(!b.vanishes_on(&other.prime, &k), "{s}");
                    }
                }
            }
        }
        assert!(matches!(
            branch_parametrizations("D6'".parse().unwrap(), &k),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn d3_branch_counts() {
        let cubic = NumberField::cubic(q(0), q(0), q(-2)).unwrap();
        assert_eq!(branch_parametrizations("D3".parse().unwrap(), &cubic).unwrap().len(), 1);
        let l = NumberField::splitting_field(q(0), q(0), q(-2)).unwrap();
        let bs = branch_parametrizations("D3".parse().unwrap(), &l).unwrap();
        assert_eq!(bs.len(), 3);
        let f = crate::poly::d3_polynomial(&q(0), &q(0), &q(-2), &l);
        for b in &bs {
            assert!(b.vanishes_on(&f, &l));
        }
    }

    #[test]
    fn ranks() {
        let k = k();
        let a2 = mf_family(&MfSpec::A2 { n: 2, j: 1 }, &k).unwrap();
        assert_eq!(rank_vector(&a2.phi, "A2:2".parse().unwrap(), &k).unwrap(), vec![1, 1]);
        let p1 = vec![vec![Polynomial::parse("x - xi*y^3", &k).unwrap()]];
        assert_eq!(rank_vector(&p1, "A2:2".parse().unwrap(), &k).unwrap(), vec![1, 0]);
        let d2: RingType = "D2:2".parse().unwrap();
        let psi = mf_family(&MfSpec::D2Psi { n: 2, i: 1 }, &k).unwrap();
        assert_eq!(rank_vector(&psi.phi, d2, &k).unwrap(), vec![2, 1, 1]);
        let phi = mf_family(&MfSpec::D2Phi { n: 2, i: 1 }, &k).unwrap();
        assert_eq!(rank_vector(&phi.phi, d2, &k).unwrap(), vec![0, 1, 1]);
    }
}
