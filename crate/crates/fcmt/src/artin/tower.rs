//! `L = ℚ(α, ω)` with `α³ = 2`, `ω² = −1 − ω`, its subfield `K = ℚ(α)`, and
//! the Galois automorphisms `σ`, `τ`.

use serde::Serialize;

use crate::linalg::{self, q, Q};
use crate::poly::{FieldElement, NumberField};

/// Basis `αⁱωʲ` at index `i + 3j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerAlgebra {
    field: NumberField,
    sigma: Vec<Vec<Q>>,
    tau: Vec<Vec<Q>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerChecks {
    pub associative: bool,
    pub commutative: bool,
    pub sigma_order_two: bool,
    pub tau_order_three: bool,
    pub generator_images: bool,
    pub multiplicative: bool,
    pub dihedral_relation: bool,
}

impl TowerChecks {
    pub fn all(&self) -> bool {
        self.associative
            && self.commutative
            && self.sigma_order_two
            && self.tau_order_three
            && self.generator_images
            && self.multiplicative
            && self.dihedral_relation
    }
}

impl Default for TowerAlgebra {
    fn default() -> Self {
        TowerAlgebra::new()
    }
}

impl TowerAlgebra {
    pub fn new() -> TowerAlgebra {
        let k = NumberField::simple("alpha", &[q(-2), q(0), q(0)]);
        let field = k.adjoin_quadratic("omega", &k.from_int(-1), &k.from_int(-1));
        let alpha = field.generator("alpha").unwrap().clone();
        let omega = field.generator("omega").unwrap().clone();
        let omega2 = field.mul(&omega, &omega);
        let sigma = automorphism(&field, &alpha, &omega2);
        let tau = automorphism(&field, &field.mul(&alpha, &omega), &omega);
        TowerAlgebra { field, sigma, tau }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        6
    }

    pub fn alpha(&self) -> FieldElement {
        self.field.generator("alpha").unwrap().clone()
    }

    pub fn omega(&self) -> FieldElement {
        self.field.generator("omega").unwrap().clone()
    }

    /// `{1, α, α²}`, a ℚ-basis of `K`.
    pub fn k_basis(&self) -> Vec<FieldElement> {
        (0..3).map(|i| self.field.basis_element(i)).collect()
    }

    pub fn in_k(&self, a: &FieldElement) -> bool {
        a.0[3..].iter().all(num_traits::Zero::is_zero)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.field.mul(a, b)
    }

    pub fn sigma(&self) -> &[Vec<Q>] {
        &self.sigma
    }

    pub fn tau(&self) -> &[Vec<Q>] {
        &self.tau
    }

    /// `τᵉ` as a matrix on coordinates.
    pub fn tau_power(&self, e: u32) -> Vec<Vec<Q>> {
        (0..e % 3).fold(linalg::identity(6), |acc, _| linalg::mat_mul(&self.tau, &acc))
    }

    pub fn apply(&self, m: &[Vec<Q>], a: &FieldElement) -> FieldElement {
        FieldElement(linalg::mat_vec(m, &a.0))
    }

    /// Multiplication by `a` as a matrix.
    pub fn multiplication(&self, a: &FieldElement) -> Vec<Vec<Q>> {
        self.field.multiplication_matrix(a)
    }

    pub fn check(&self) -> TowerChecks {
        let basis: Vec<FieldElement> = (0..6).map(|i| self.field.basis_element(i)).collect();
        let mut associative = true;
        let mut commutative = true;
        let mut multiplicative = true;
        for a in &basis {
            for b in &basis {
                let ab = self.mul(a, b);
                commutative &= ab == self.mul(b, a);
                for m in [&self.sigma, &self.tau] {
                    multiplicative &= self.apply(m, &ab) == self.mul(&self.apply(m, a), &self.apply(m, b));
                }
                for c in &basis {
                    associative &= self.mul(&ab, c) == self.mul(a, &self.mul(b, c));
                }
            }
        }
        let id = linalg::identity(6);
        let s2 = linalg::mat_mul(&self.sigma, &self.sigma);
        let t3 = self.tau_power(3);
        let t3_direct = linalg::mat_mul(&self.tau, &linalg::mat_mul(&self.tau, &self.tau));
        let alpha = self.alpha();
        let omega = self.omega();
        let generator_images = self.apply(&self.tau, &omega) == omega
            && self.apply(&self.tau, &alpha) == self.mul(&alpha, &omega)
            && self.apply(&self.sigma, &alpha) == alpha
            && self.apply(&self.sigma, &omega) == self.mul(&omega, &omega);
        let sts = linalg::mat_mul(&self.sigma, &linalg::mat_mul(&self.tau, &self.sigma));
        TowerChecks {
            associative,
            commutative,
            sigma_order_two: s2 == id && self.sigma != id,
            tau_order_three: t3 == id && t3_direct == id && self.tau != id,
            generator_images,
            multiplicative,
            dihedral_relation: sts == self.tau_power(2),
        }
    }
}

/// The ring map fixing ℚ with `α ↦ a`, `ω ↦ w`, as a matrix whose columns
/// are the images of the basis.
fn automorphism(l: &NumberField, a: &FieldElement, w: &FieldElement) -> Vec<Vec<Q>> {
    let images: Vec<FieldElement> = (0..6)
        .map(|idx| l.mul(&l.pow(a, (idx % 3) as u32), &l.pow(w, (idx / 3) as u32)))
        .collect();
    (0..6).map(|r| images.iter().map(|c| c.0[r].clone()).collect()).collect()
}
