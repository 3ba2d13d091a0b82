mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use fcmt::lattice::{
    class_group, hermite_normal_form, hilbert_basis, is_atom, kernel_lattice_basis, smith_normal_form,
    AbelianGroupInvariants, IntMatrix, MonoidPresentation,
};

fn presentation() -> impl Strategy<Value = (Vec<Vec<i64>>, usize, usize)> {
    (1usize..=6)
        .prop_flat_map(|t| (Just(t), 0..=6 - t, 0usize..=2))
        .prop_flat_map(|(t, u, r)| (prop::collection::vec(prop::collection::vec(-2i64..=2, t), r), Just(t), Just(u)))
}

fn matrix() -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| (prop::collection::vec(prop::collection::vec(-20i64..=20, c), r), Just(c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hilbert_basis_matches_enumeration((rows, t, u) in presentation()) {
        let p = MonoidPresentation::from_rows(&rows, t, u).unwrap();
        let mut got = hilbert_basis(&p);
        got.sort();
        prop_assert_eq!(got, common::oracle_hilbert_basis(&rows, t, u));
    }

    #[test]
    fn atoms_are_incomparable_members((rows, t, u) in presentation()) {
        let p = MonoidPresentation::from_rows(&rows, t, u).unwrap();
        let atoms = hilbert_basis(&p);
        for a in &atoms {
            prop_assert!(p.contains_element(a).unwrap());
            prop_assert!(is_atom(&p, a).unwrap());
            for b in &atoms {
                prop_assert!(a == b || !a.iter().zip(b).all(|(x, y)| x >= y));
                let sum: Vec<u64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                prop_assert!(p.contains_element(&sum).unwrap());
                prop_assert!(!is_atom(&p, &sum).unwrap());
            }
        }
    }

    #[test]
    fn hilbert_basis_is_deterministic((rows, t, u) in presentation()) {
        let p = MonoidPresentation::from_rows(&rows, t, u).unwrap();
        prop_assert_eq!(hilbert_basis(&p), hilbert_basis(&p.clone()));
    }

    #[test]
    fn smith_form_matches_determinantal_divisors((rows, cols) in matrix()) {
        let m = IntMatrix::from_rows(&rows, cols).unwrap();
        let s = smith_normal_form(&m);
        prop_assert!(s.satisfies_postconditions(&m));
        let a = common::big(&rows);
        let (u, d, v) = (s.u.to_rows(), s.d.to_rows(), s.v.to_rows());
        prop_assert_eq!(common::det(&u).abs(), BigInt::one());
        prop_assert_eq!(common::det(&v).abs(), BigInt::one());
        prop_assert_eq!(common::mat_mul(&common::mat_mul(&u, &a, rows.len(), cols), &v, cols, cols), d.clone());
        let mut prev = BigInt::one();
        for k in 1..=rows.len().min(cols) {
            let dk = common::determinantal_divisor(&a, cols, k);
            let want = if dk.is_zero() { BigInt::zero() } else { &dk / &prev };
            prop_assert_eq!(&d[k - 1][k - 1], &want);
            if !dk.is_zero() {
                prev = dk;
            }
        }
    }

    #[test]
    fn hermite_form_is_canonical((rows, cols) in matrix(), seed in any::<u64>()) {
        let m = IntMatrix::from_rows(&rows, cols).unwrap();
        let h = hermite_normal_form(&m);
        prop_assert!(h.satisfies_postconditions(&m));
        let a = common::big(&rows);
        prop_assert_eq!(common::det(&h.u.to_rows()).abs(), BigInt::one());
        prop_assert_eq!(common::mat_mul(&h.u.to_rows(), &a, rows.len(), cols), h.h.to_rows());

        // Same row lattice after a unimodular change of rows gives the same form.
        let r = rows.len();
        let mut mixed = rows.clone();
        if r > 1 {
            let (i, j) = ((seed % r as u64) as usize, ((seed / 7 + 1) % r as u64) as usize);
            if i != j {
                let c = (seed % 5) as i64 - 2;
                for k in 0..cols {
                    mixed[i][k] += c * rows[j][k];
                }
            }
            mixed.swap(0, r - 1);
        }
        let h2 = hermite_normal_form(&IntMatrix::from_rows(&mixed, cols).unwrap());
        prop_assert_eq!(h.h, h2.h);
    }

    #[test]
    fn kernel_basis_spans_integer_kernel((rows, cols) in matrix()) {
        let m = IntMatrix::from_rows(&rows, cols).unwrap();
        let basis = kernel_lattice_basis(&m);
        let a = common::big(&rows);
        for v in &basis {
            let col: Vec<Vec<BigInt>> = v.iter().map(|x| vec![x.clone()]).collect();
            prop_assert!(common::mat_mul(&a, &col, cols, 1).iter().all(|r| r[0].is_zero()));
        }
        prop_assert_eq!(basis.len(), cols - m.rank());
        // A primitive lattice: the basis extends to a basis of ℤᶜᵒˡˢ, so its
        // maximal minors are coprime.
        if !basis.is_empty() {
            prop_assert_eq!(common::determinantal_divisor(&basis, cols, basis.len()), BigInt::one());
        }
    }

    #[test]
    fn cokernel_invariants_form_a_chain((rows, cols) in matrix()) {
        let m = IntMatrix::from_rows(&rows, cols).unwrap();
        let g = AbelianGroupInvariants::cokernel(&m);
        prop_assert!(g.torsion.iter().all(|d| d > &BigInt::one()));
        prop_assert!(g.torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        if rows.len() == cols {
            let det = common::det(&common::big(&rows)).abs();
            if det.is_zero() {
                prop_assert!(g.free_rank > 0);
            } else {
                prop_assert_eq!(g.free_rank, 0);
                prop_assert_eq!(g.torsion.iter().fold(BigInt::one(), |p, d| p * d), det);
            }
        }
    }
}

#[test]
fn free_monoid_has_trivial_class_group() {
    for u in 0..4 {
        let p = MonoidPresentation::free(u);
        assert!(class_group(&p, false).unwrap().group.is_trivial());
        assert_eq!(hilbert_basis(&p).len(), u);
    }
}

#[test]
fn block_monoid_m2_class_group_is_rank_two() {
    let p = MonoidPresentation::from_rows(&[vec![1, -1, 0, 0, 1, -1], vec![0, 1, -1, 1, -1, 0]], 6, 0).unwrap();
    let cg = class_group(&p, false).unwrap();
    assert_eq!(cg.group, AbelianGroupInvariants::free(2));
    assert!(cg.zbasis && cg.divisor_theory);
}

#[test]
fn huge_entries_survive_normal_forms() {
    let big = 1i64 << 40;
    let m = IntMatrix::from_rows(&[vec![big, 3], vec![6, big]], 2).unwrap();
    let s = smith_normal_form(&m);
    assert!(s.satisfies_postconditions(&m));
    let det = BigInt::from(big) * BigInt::from(big) - BigInt::from(18);
    let product: BigInt = s.invariant_factors().iter().product();
    assert_eq!(product.abs(), det);
}
