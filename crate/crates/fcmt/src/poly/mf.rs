//! Polynomial matrices, matrix factorizations and Fitting ideals.

use std::fmt;

use serde::Serialize;

use super::field::NumberField;
use super::groebner::groebner_basis;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::json::rational_string;
use crate::linalg::Q;

pub type PolyMatrix = Vec<Vec<Polynomial>>;

/// Parses a JSON array of arrays of polynomial strings.
pub fn parse_matrix(json: &str, k: &NumberField) -> Result<PolyMatrix> {
    let rows: Vec<Vec<String>> = serde_json::from_str(json).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || cols == 0 {
        return Err(Error::input("matrix must have at least one row and one column"));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != cols {
                return Err(Error::input(format!("row {} has {} entries, expected {cols}", i + 1, row.len())));
            }
            row.iter()
                .enumerate()
                .map(|(j, s)| {
                    Polynomial::parse(s, k).map_err(|e| match e {
                        Error::Parse { column, message, .. } => Error::input(format!(
                            "entry ({}, {}), column {column}: {message}",
                            i + 1,
                            j + 1
                        )),
                        other => other,
                    })
                })
                .collect()
        })
        .collect()
}

pub fn matrix_strings(m: &PolyMatrix, k: &NumberField) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(|p| p.to_string(k)).collect()).collect()
}

fn cols(m: &PolyMatrix) -> usize {
    m.first().map_or(0, Vec::len)
}

pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix, k: &NumberField) -> PolyMatrix {
    (0..a.len())
        .map(|i| {
            (0..cols(b))
                .map(|j| {
                    (0..cols(a)).fold(Polynomial::zero(), |acc, l| acc.add(&a[i][l].mul(&b[l][j], k)))
                })
                .collect()
        })
        .collect()
}

/// Cofactor expansion; the matrices here are at most a few rows.
pub fn determinant(m: &PolyMatrix, k: &NumberField) -> Polynomial {
    match m.len() {
        0 => Polynomial::from_int(1, k),
        1 => m[0][0].clone(),
        n => {
            let mut det = Polynomial::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: PolyMatrix = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&determinant(&minor, k), k);
                det = if j % 2 == 0 { det.add(&term) } else { det.sub(&term) };
            }
            det
        }
    }
}

pub fn block_diagonal(blocks: &[&PolyMatrix]) -> PolyMatrix {
    let total_cols: usize = blocks.iter().map(|b| cols(b)).sum();
    let mut out = Vec::new();
    let mut offset = 0;
    for b in blocks {
        for row in b.iter() {
            let mut r = vec![Polynomial::zero(); total_cols];
            for (j, p) in row.iter().enumerate() {
                r[offset + j] = p.clone();
            }
            out.push(r);
        }
        offset += cols(b);
    }
    out
}

fn subsets(n: usize, j: usize) -> Vec<Vec<usize>> {
    if j == 0 {
        return vec![Vec::new()];
    }
    if j > n {
        return Vec::new();
    }
    let mut out = subsets(n - 1, j);
    for mut s in subsets(n - 1, j - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// All `j × j` minors.
pub fn minors(m: &PolyMatrix, j: usize, k: &NumberField) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for rows in subsets(m.len(), j) {
        for cs in subsets(cols(m), j) {
            let sub: PolyMatrix = rows.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
            out.push(determinant(&sub, k));
        }
    }
    out
}

/// Generators of the ideal of `j × j` minors: zero minors dropped, the rest
/// made monic, deduplicated and sorted.
pub fn fitting_ideal(m: &PolyMatrix, j: usize, k: &NumberField) -> Result<Vec<Polynomial>> {
    let size = m.len().min(cols(m));
    if j == 0 || j > size {
        return Err(Error::input(format!("minor size {j} outside 1..={size}")));
    }
    let mut gens: Vec<Polynomial> = minors(m, j, k)
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic(k))
        .collect();
    gens.sort();
    gens.dedup();
    Ok(gens)
}

/// The ideal generated by `gens`, in reduced Gröbner form.
pub fn ideal_basis(gens: &[Polynomial], k: &NumberField) -> Vec<Polynomial> {
    groebner_basis(gens, k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    pub phi: PolyMatrix,
    pub psi: PolyMatrix,
    pub f: Polynomial,
}

impl MatrixFactorization {
    pub fn new(phi: PolyMatrix, psi: PolyMatrix, f: Polynomial) -> Result<Self> {
        let n = phi.len();
        let square = |m: &PolyMatrix| m.len() == n && m.iter().all(|r| r.len() == n);
        if n == 0 || !square(&phi) || !square(&psi) {
            return Err(Error::input("phi and psi must be square matrices of the same size"));
        }
        Ok(MatrixFactorization { phi, psi, f })
    }

    pub fn size(&self) -> usize {
        self.phi.len()
    }

    pub fn swapped(&self) -> MatrixFactorization {
        MatrixFactorization {
            phi: self.psi.clone(),
            psi: self.phi.clone(),
            f: self.f.clone(),
        }
    }
}

/// `φψ = ψφ = f·1`.
pub fn verify_mf(mf: &MatrixFactorization, k: &NumberField) -> bool {
    let n = mf.size();
    let scalar = |m: &PolyMatrix| {
        (0..n).all(|i| (0..n).all(|j| if i == j { m[i][j] == mf.f } else { m[i][j].is_zero() }))
    };
    scalar(&mat_mul(&mf.phi, &mf.psi, k)) && scalar(&mat_mul(&mf.psi, &mf.phi, k))
}

/// No entry of either matrix is a unit.
pub fn is_reduced(mf: &MatrixFactorization) -> bool {
    mf.phi
        .iter()
        .chain(&mf.psi)
        .flatten()
        .all(|p| p.constant_term().is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CyclicLetter {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl CyclicLetter {
    pub const ALL: [CyclicLetter; 6] = [
        CyclicLetter::A,
        CyclicLetter::B,
        CyclicLetter::C,
        CyclicLetter::D,
        CyclicLetter::E,
        CyclicLetter::F,
    ];
}

impl std::str::FromStr for CyclicLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CyclicLetter::ALL
            .into_iter()
            .find(|l| format!("{l:?}").eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::input(format!("unknown cyclic matrix {s:?}; expected A..F")))
    }
}

/// One factorization from the families over `A2ₙ`, `D2ₙ` and `D3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum MfSpec {
    /// `(φ_j, ψ_j)`, `1 ≤ j ≤ 2n+2`.
    A2 { n: u32, j: u32 },
    /// `(α_j, β_j)`, `1 ≤ j ≤ n`.
    D2Alpha { n: u32, j: u32 },
    /// `(β_j, α_j)`.
    D2Beta { n: u32, j: u32 },
    /// `(φ_i, ψ_i)`, `1 ≤ i ≤ n−1`.
    D2Phi { n: u32, i: u32 },
    /// `(ψ_i, φ_i)`.
    D2Psi { n: u32, i: u32 },
    /// Cyclic `1 × 1` factorizations of the `D2ₙ` polynomial.
    Cyclic { n: u32, letter: CyclicLetter },
    D3 {
        #[serde(serialize_with = "crate::json::serialize_rational")]
        a: Q,
        #[serde(serialize_with = "crate::json::serialize_rational")]
        b: Q,
        #[serde(serialize_with = "crate::json::serialize_rational")]
        c: Q,
    },
    /// `(ψ, φ)` for `D3`.
    D3Swapped {
        #[serde(serialize_with = "crate::json::serialize_rational")]
        a: Q,
        #[serde(serialize_with = "crate::json::serialize_rational")]
        b: Q,
        #[serde(serialize_with = "crate::json::serialize_rational")]
        c: Q,
    },
}

impl fmt::Display for MfSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MfSpec::A2 { j, .. } => write!(f, "(phi_{j}, psi_{j})"),
            MfSpec::D2Alpha { j, .. } => write!(f, "(alpha_{j}, beta_{j})"),
            MfSpec::D2Beta { j, .. } => write!(f, "(beta_{j}, alpha_{j})"),
            MfSpec::D2Phi { i, .. } => write!(f, "(phi_{i}, psi_{i})"),
            MfSpec::D2Psi { i, .. } => write!(f, "(psi_{i}, phi_{i})"),
            MfSpec::Cyclic { letter, .. } => write!(f, "{letter:?}"),
            MfSpec::D3 { .. } => write!(f, "(phi, psi)"),
            MfSpec::D3Swapped { .. } => write!(f, "(psi, phi)"),
        }
    }
}

/// Every member of a family: `a2` and `d2` at parameter `n`, `cyclic` at
/// `n`, `d3` for the cubic `(a, b, c)`.
pub fn family_members(family: &str, n: u32, cubic: (Q, Q, Q)) -> Result<Vec<MfSpec>> {
    if n == 0 && family != "d3" {
        return Err(Error::input("the parameter n must be at least 1"));
    }
    Ok(match family {
        "a2" => (1..=2 * n + 2).map(|j| MfSpec::A2 { n, j }).collect(),
        "d2" => {
            let mut v = Vec::new();
            for j in 1..=n {
                v.push(MfSpec::D2Alpha { n, j });
                v.push(MfSpec::D2Beta { n, j });
            }
            for i in 1..n {
                v.push(MfSpec::D2Phi { n, i });
                v.push(MfSpec::D2Psi { n, i });
            }
            v
        }
        "cyclic" => CyclicLetter::ALL.iter().map(|&letter| MfSpec::Cyclic { n, letter }).collect(),
        "d3" => {
            let (a, b, c) = cubic;
            vec![
                MfSpec::D3 { a: a.clone(), b: b.clone(), c: c.clone() },
                MfSpec::D3Swapped { a, b, c },
            ]
        }
        _ => return Err(Error::input(format!("unknown family {family:?}; expected a2, d2, cyclic or d3"))),
    })
}

fn require_xi(k: &NumberField) -> Result<()> {
    let m = k.xi_minimal_polynomial();
    if m.len() == 3 && m[1] == Q::default() {
        Ok(())
    } else {
        Err(Error::input(format!("this family needs a field with xi^2 rational, got {k}")))
    }
}

fn check_index(name: &str, v: u32, hi: u32) -> Result<()> {
    if v == 0 || v > hi {
        Err(Error::input(format!("{name} = {v} outside 1..={hi}")))
    } else {
        Ok(())
    }
}

/// `x² − ξ²y^{2n+2}`.
pub fn a2_polynomial(n: u32, k: &NumberField) -> Result<Polynomial> {
    require_xi(k)?;
    Polynomial::parse(&format!("x^2 - xi^2*y^{}", 2 * n + 2), k)
}

/// `(x − y)(ξ²y^{2n} − x²)`, the polynomial the printed `D2ₙ` matrices factor.
pub fn d2_polynomial(n: u32, k: &NumberField) -> Result<Polynomial> {
    require_xi(k)?;
    Polynomial::parse(&format!("(x - y)*(xi^2*y^{} - x^2)", 2 * n), k)
}

pub fn d3_polynomial(a: &Q, b: &Q, c: &Q, k: &NumberField) -> Polynomial {
    let (a, b, c) = (rational_string(a), rational_string(b), rational_string(c));
    Polynomial::parse(&format!("y^3 + ({a})*y^2*x + ({b})*y*x^2 + ({c})*x^3"), k).expect("valid")
}

pub fn mf_family(spec: &MfSpec, k: &NumberField) -> Result<MatrixFactorization> {
    let p = |s: String| Polynomial::parse(&s, k).expect("family entries are well formed");
    let mat = |rows: [[String; 2]; 2]| -> PolyMatrix {
        rows.into_iter().map(|r| r.into_iter().map(p).collect()).collect()
    };
    let mf = match spec {
        &MfSpec::A2 { n, j } => {
            check_index("j", j, 2 * n + 2)?;
            let f = a2_polynomial(n, k)?;
            let e = 2 * n + 2 - j;
            MatrixFactorization::new(
                mat([[format!("-xi^2*y^{e}"), "x".into()], ["x".into(), format!("-y^{j}")]]),
                mat([[format!("y^{j}"), "x".into()], ["x".into(), format!("xi^2*y^{e}")]]),
                f,
            )?
        }
        &MfSpec::D2Alpha { n, j } | &MfSpec::D2Beta { n, j } => {
            check_index("j", j, n)?;
            let f = d2_polynomial(n, k)?;
            let e = 2 * n + 1 - j;
            let alpha = mat([
                [format!("xi^2*y^{e}"), "x*(x - y)".into()],
                ["x".into(), format!("y^{}*(x - y)", j - 1)],
            ]);
            let beta = mat([
                [format!("y^{}*(x - y)", j - 1), "-x*(x - y)".into()],
                ["-x".into(), format!("xi^2*y^{e}")],
            ]);
            let mf = MatrixFactorization::new(alpha, beta, f)?;
            if matches!(spec, MfSpec::D2Beta { .. }) {
                mf.swapped()
            } else {
                mf
            }
        }
        &MfSpec::D2Phi { n, i } | &MfSpec::D2Psi { n, i } => {
            check_index("i", i, n.saturating_sub(1))?;
            let f = d2_polynomial(n, k)?;
            let e = 2 * n - i;
            let phi = mat([[format!("xi^2*y^{e}"), "x".into()], ["x".into(), format!("y^{i}")]]);
            let psi = mat([
                [format!("y^{i}*(x - y)"), "-x*(x - y)".into()],
                ["-x*(x - y)".into(), format!("xi^2*y^{e}*(x - y)")],
            ]);
            let mf = MatrixFactorization::new(phi, psi, f)?;
            if matches!(spec, MfSpec::D2Psi { .. }) {
                mf.swapped()
            } else {
                mf
            }
        }
        &MfSpec::Cyclic { n, letter } => {
            if n == 0 {
                return Err(Error::input("the parameter n must be at least 1"));
            }
            let f = d2_polynomial(n, k)?;
            let (g, h) = match letter {
                CyclicLetter::A => ("x - y".to_string(), format!("xi^2*y^{} - x^2", 2 * n)),
                CyclicLetter::B => (format!("xi*y^{n} - x"), format!("(x - y)*(xi*y^{n} + x)")),
                CyclicLetter::C => (format!("xi*y^{n} + x"), format!("(x - y)*(xi*y^{n} - x)")),
                CyclicLetter::D => (format!("(x - y)*(xi*y^{n} - x)"), format!("xi*y^{n} + x")),
                CyclicLetter::E => (format!("(x - y)*(xi*y^{n} + x)"), format!("xi*y^{n} - x")),
                CyclicLetter::F => (format!("xi^2*y^{} - x^2", 2 * n), "x - y".to_string()),
            };
            MatrixFactorization::new(vec![vec![p(g)]], vec![vec![p(h)]], f)?
        }
        MfSpec::D3 { a, b, c } | MfSpec::D3Swapped { a, b, c } => {
            let f = d3_polynomial(a, b, c, k);
            let (a, b, c) = (rational_string(a), rational_string(b), rational_string(c));
            let phi = mat([
                ["y^2".into(), "x^2".into()],
                [format!("-({b})*y - ({c})*x"), format!("y + ({a})*x")],
            ]);
            let psi = mat([
                [format!("y + ({a})*x"), "-x^2".into()],
                [format!("({b})*y + ({c})*x"), "y^2".into()],
            ]);
            let mf = MatrixFactorization::new(phi, psi, f)?;
            if matches!(spec, MfSpec::D3Swapped { .. }) {
                mf.swapped()
            } else {
                mf
            }
        }
    };
    Ok(mf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn k() -> NumberField {
        NumberField::quadratic(q(2)).unwrap()
    }

    fn gens(s: &[&str], k: &NumberField) -> Vec<Polynomial> {
        s.iter().map(|s| Polynomial::parse(s, k).unwrap()).collect()
    }

    #[test]
    fn a2_first_pair() {
        let k = k();
        let mf = mf_family(&MfSpec::A2 { n: 2, j: 1 }, &k).unwrap();
        assert_eq!(
            matrix_strings(&mf.phi, &k),
            vec![vec!["-2*y^5".to_string(), "x".into()], vec!["x".into(), "-y".into()]]
        );
        assert_eq!(
            matrix_strings(&mf.psi, &k),
            vec![vec!["y".to_string(), "x".into()], vec!["x".into(), "2*y^5".into()]]
        );
        assert!(verify_mf(&mf, &k));
        assert!(is_reduced(&mf));
    }

    #[test]
    fn trivial_and_tampered() {
        let k = k();
        let f = a2_polynomial(1, &k).unwrap();
        let trivial = MatrixFactorization::new(vec![vec![f.clone()]], vec![vec![Polynomial::from_int(1, &k)]], f).unwrap();
        assert!(verify_mf(&trivial, &k));
        assert!(!is_reduced(&trivial));
        let mut mf = mf_family(&MfSpec::D2Alpha { n: 2, j: 1 }, &k).unwrap();
        mf.phi[1][0] = mf.phi[1][0].neg();
        assert!(!verify_mf(&mf, &k));
    }

    #[test]
    fn index_ranges() {
        let k = k();
        assert!(mf_family(&MfSpec::A2 { n: 2, j: 7 }, &k).is_err());
        assert!(mf_family(&MfSpec::D2Phi { n: 1, i: 1 }, &k).is_err());
        assert!(mf_family(&MfSpec::A2 { n: 2, j: 1 }, &NumberField::rationals()).is_err());
        assert_eq!(family_members("d2", 3, (q(0), q(0), q(-2))).unwrap().len(), 10);
    }

    #[test]
    fn d3_instance() {
        let k = NumberField::rationals();
        let mf = mf_family(&MfSpec::D3 { a: q(0), b: q(0), c: q(-2) }, &k).unwrap();
        assert_eq!(matrix_strings(&mf.phi, &k)[1], vec!["2*x".to_string(), "y".into()]);
        assert!(verify_mf(&mf, &k));
        assert!(is_reduced(&mf));
    }

    #[test]
    fn fitting_ideals() {
        let k = k();
        let mf = mf_family(&MfSpec::A2 { n: 3, j: 2 }, &k).unwrap();
        let i1 = fitting_ideal(&mf.phi, 1, &k).unwrap();
        assert!(crate::poly::ideal_equal(&i1, &gens(&["x", "y^2"], &k), &k));
        let zero = vec![vec![Polynomial::zero(); 2]; 2];
        assert!(fitting_ideal(&zero, 1, &k).unwrap().is_empty());
        assert!(fitting_ideal(&zero, 3, &k).is_err());
        let d = determinant(&mf.phi, &k);
        assert_eq!(d, mf.f.neg());
    }
}
