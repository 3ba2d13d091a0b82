use proptest::prelude::*;

use fcmt::catalog::{Family, RingType};
use fcmt::linalg::q;
use fcmt::poly::{
    a2_polynomial, block_diagonal, branch_parametrizations, d2_polynomial, d3_polynomial, family_members,
    groebner_basis, ideal_contains, ideal_equal, mf_family, rank_vector, reduce, verify_mf, MatrixFactorization,
    NumberField, Polynomial,
};

fn term() -> impl Strategy<Value = String> {
    (-3i64..=3, 0u32..=3, 0u32..=3)
        .prop_filter("nonzero", |(c, _, _)| *c != 0)
        .prop_map(|(c, a, b)| format!("({c})*x^{a}*y^{b}"))
}

fn polynomial() -> impl Strategy<Value = String> {
    prop::collection::vec(term(), 1..=3).prop_map(|ts| ts.join(" + "))
}

fn parse_all(src: &[String], k: &NumberField) -> Vec<Polynomial> {
    src.iter().map(|s| Polynomial::parse(s, k).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn groebner_basis_is_reduced_and_generates(gens in prop::collection::vec(polynomial(), 1..=3)) {
        let k = NumberField::rationals();
        let g = parse_all(&gens, &k);
        let gb = groebner_basis(&g, &k);
        for p in &g {
            prop_assert!(reduce(p, &gb, &k).is_zero());
        }
        for (i, b) in gb.iter().enumerate() {
            let (_, lc) = b.leading().unwrap();
            prop_assert!(lc.is_one());
            let others: Vec<Polynomial> = gb.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
            prop_assert_eq!(&reduce(b, &others, &k), b);
            prop_assert!(ideal_contains(&g, b, &k));
        }
        // Buchberger's criterion, checked directly on the output.
        for (i, a) in gb.iter().enumerate() {
            for b in &gb[i + 1..] {
                let (ma, mb) = (a.leading().unwrap().0, b.leading().unwrap().0);
                let l = ma.lcm(mb);
                let s = a.mul_term(&ma.quotient(&l), &k.one(), &k).sub(&b.mul_term(&mb.quotient(&l), &k.one(), &k));
                prop_assert!(reduce(&s, &gb, &k).is_zero());
            }
        }
    }

    #[test]
    fn groebner_basis_ignores_generator_order(gens in prop::collection::vec(polynomial(), 2..=3)) {
        let k = NumberField::rationals();
        let g = parse_all(&gens, &k);
        let mut rev = g.clone();
        rev.reverse();
        prop_assert_eq!(groebner_basis(&g, &k), groebner_basis(&rev, &k));
        prop_assert!(ideal_equal(&g, &rev, &k));
    }

    #[test]
    fn ideals_contain_combinations(gens in prop::collection::vec(polynomial(), 1..=2), m in polynomial()) {
        let k = NumberField::rationals();
        let g = parse_all(&gens, &k);
        let m = Polynomial::parse(&m, &k).unwrap();
        let combo = g.iter().fold(Polynomial::zero(), |acc, p| acc.add(&p.mul(&m, &k)));
        prop_assert!(ideal_contains(&g, &combo, &k));
    }
}

#[test]
fn branches_lie_on_the_curve() {
    let kq = NumberField::quadratic(q(2)).unwrap();
    let ks = NumberField::splitting_field(q(0), q(0), q(-2)).unwrap();
    for n in 1..=4u32 {
        let a2 = RingType::new(Family::A2, n, false).unwrap();
        let f = a2_polynomial(n, &kq).unwrap();
        let bs = branch_parametrizations(a2, &kq).unwrap();
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(|b| b.vanishes_on(&f, &kq)));

        let d2 = RingType::new(Family::D2, n, false).unwrap();
        let f = d2_polynomial(n, &kq).unwrap();
        let bs = branch_parametrizations(d2, &kq).unwrap();
        assert_eq!(bs.len(), 3);
        assert!(bs.iter().all(|b| b.vanishes_on(&f, &kq)));
        assert!(bs[0].vanishes_on(&Polynomial::parse("x - y", &kq).unwrap(), &kq));
    }
    let d3 = RingType::new(Family::D3, 0, false).unwrap();
    let f = d3_polynomial(&q(0), &q(0), &q(-2), &ks);
    let bs = branch_parametrizations(d3, &ks).unwrap();
    assert_eq!(bs.len(), 3);
    assert!(bs.iter().all(|b| b.vanishes_on(&f, &ks)));
}

/// For a reduced curve `f`, `rank cok φ + rank cok ψ` equals the matrix size
/// at every branch.
#[test]
fn ranks_of_a_pair_add_up_to_its_size() {
    let k = NumberField::quadratic(q(2)).unwrap();
    let cubic = (q(0), q(0), q(0));
    for n in 1..=3u32 {
        for (family, ring) in [("a2", Family::A2), ("d2", Family::D2), ("cyclic", Family::D2)] {
            let r = RingType::new(ring, n, false).unwrap();
            for spec in family_members(family, n, cubic.clone()).unwrap() {
                let mf = mf_family(&spec, &k).unwrap();
                let a = rank_vector(&mf.phi, r, &k).unwrap();
                let b = rank_vector(&mf.psi, r, &k).unwrap();
                assert!(a.iter().zip(&b).all(|(x, y)| x + y == mf.size()), "{spec}: {a:?} {b:?}");
            }
        }
    }
}

#[test]
fn block_diagonal_ranks_add() {
    let k = NumberField::quadratic(q(2)).unwrap();
    let r = RingType::new(Family::D2, 2, false).unwrap();
    let members = family_members("d2", 2, (q(0), q(0), q(0))).unwrap();
    for s in &members {
        for t in &members {
            let (a, b) = (mf_family(s, &k).unwrap(), mf_family(t, &k).unwrap());
            let sum = rank_vector(&block_diagonal(&[&a.phi, &b.phi]), r, &k).unwrap();
            let ra = rank_vector(&a.phi, r, &k).unwrap();
            let rb = rank_vector(&b.phi, r, &k).unwrap();
            assert_eq!(sum, ra.iter().zip(&rb).map(|(x, y)| x + y).collect::<Vec<_>>());
            let mf = MatrixFactorization::new(block_diagonal(&[&a.phi, &b.phi]), block_diagonal(&[&a.psi, &b.psi]), a.f.clone()).unwrap();
            assert!(verify_mf(&mf, &k));
        }
    }
}

#[test]
fn flipped_sign_breaks_a_factorization() {
    let k = NumberField::quadratic(q(2)).unwrap();
    for n in 1..=3 {
        for spec in family_members("a2", n, (q(0), q(0), q(0))).unwrap() {
            let mut mf = mf_family(&spec, &k).unwrap();
            mf.phi[0][1] = mf.phi[0][1].neg();
            assert!(!verify_mf(&mf, &k), "{spec}");
        }
    }
}

#[test]
fn fields_reject_reducible_polynomials() {
    assert!(NumberField::quadratic(q(4)).is_err());
    assert!(NumberField::quadratic(q(2)).is_ok());
    assert!(NumberField::cubic(q(0), q(0), q(-8)).is_err());
    assert!(NumberField::cubic(q(0), q(0), q(-2)).is_ok());
}

#[test]
fn polynomial_text_round_trips() {
    let k = NumberField::quadratic(q(2)).unwrap();
    for s in ["x^2 - xi^2*y^6", "(x - y)*(xi*y^2 + x)", "3*x*y + 1/2", "0"] {
        let p = Polynomial::parse(s, &k).unwrap();
        assert_eq!(Polynomial::parse(&p.to_string(&k), &k).unwrap(), p, "{s}");
    }
    assert!(Polynomial::parse("x +* y", &k).is_err());
}
