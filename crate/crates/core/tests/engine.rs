use diagcomm::groebner::{buchberger, initial_ideal, IdealSpec};
use diagcomm::hilbert::{
    bidegree_from_basis, degree_from_basis, grading_counts, hilbert_function_bruteforce,
    hilbert_function_from_k, k_polynomial, k_polynomial_inclusion_exclusion, monomial_dimension,
    MonomialIdeal, INCLUSION_EXCLUSION_CAP,
};
use diagcomm::permlab::Permutation;
use diagcomm::polyring::{Ring, TermOrder};
use diagcomm::schemes::{build_ideal, SchemeTag};
use diagcomm::{Ideal, Rational};
use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scheme_ideals(n: usize) -> Vec<(SchemeTag, Ideal)> {
    let mut tags = vec![
        SchemeTag::Commuting,
        SchemeTag::D,
        SchemeTag::Dz(Rational::new(7.into(), 3.into())),
        SchemeTag::D0,
        SchemeTag::E,
    ];
    for pi in Permutation::all(n) {
        tags.push(SchemeTag::EpiCandidate(pi.clone()));
        tags.push(SchemeTag::ClosureUnion(pi));
    }
    tags.into_iter()
        .map(|t| {
            let i = build_ideal(&t, n).unwrap();
            (t, i)
        })
        .collect()
}

#[test]
fn bases_pass_post_hoc_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [2, 3] {
        let ring = Ring::matrix_pair(n).unwrap();
        for (tag, ideal) in scheme_ideals(n) {
            let gb = buchberger(&ideal, &TermOrder::Grevlex);
            assert!(gb.satisfies_buchberger_criterion(), "{tag:?}");
            assert!(gb.is_reduced(), "{tag:?}");
            for g in &ideal.generators {
                assert!(gb.contains(g), "{tag:?}");
            }
            // bihomogeneous input, bihomogeneous basis (Dz is not bihomogeneous in general)
            if !matches!(tag, SchemeTag::Dz(_)) {
                for g in &gb.basis {
                    assert!(g.is_bihomogeneous(ring.grading()), "{tag:?}");
                }
            }
            let mut shuffled = ideal.generators.clone();
            shuffled.shuffle(&mut rng);
            shuffled.reverse();
            let again = buchberger(&IdealSpec::new("shuffled", shuffled), &TermOrder::Grevlex);
            assert_eq!(again.basis, gb.basis, "{tag:?}");
            assert_eq!(buchberger(&ideal, &TermOrder::Grevlex).basis, gb.basis);
        }
    }
}

#[test]
fn normal_form_is_idempotent() {
    let ring = Ring::matrix_pair(2).unwrap();
    let gb = buchberger(&build_ideal(&SchemeTag::D, 2).unwrap(), &TermOrder::Grevlex);
    for text in [
        "X[1][1]^2*Y[2][1] - 3*X[1][2]*Y[1][1] + 1",
        "X[2][1]*Y[1][2]*Y[2][2] + 2/3*Y[1][1]^3",
    ] {
        let p = ring.parse::<Rational>(text).unwrap();
        let r = gb.reduce(&p);
        assert_eq!(gb.reduce(&r), r);
        assert!(gb.contains(&(&p - &r)));
    }
}

#[test]
fn hilbert_series_matches_enumeration_for_n2() {
    let ring = Ring::matrix_pair(2).unwrap();
    let (p, q) = grading_counts(ring.grading()).unwrap();
    for (tag, ideal) in scheme_ideals(2) {
        if matches!(tag, SchemeTag::Dz(_)) {
            continue;
        }
        let gb = buchberger(&ideal, &TermOrder::Grevlex);
        let m = MonomialIdeal::from_ideal(&initial_ideal(&gb), ring.nvars()).unwrap();
        let k = k_polynomial(&m, ring.grading());
        let brute = hilbert_function_bruteforce(&m, ring.grading(), 6).unwrap();
        assert_eq!(brute, hilbert_function_from_k(&k, p, q, 6), "{tag:?}");
    }
}

#[test]
fn k_polynomial_routes_agree_on_schemes() {
    for n in [2, 3] {
        let ring = Ring::matrix_pair(n).unwrap();
        for (tag, ideal) in scheme_ideals(n) {
            let m = MonomialIdeal::from_basis(&buchberger(&ideal, &TermOrder::Grevlex));
            if m.generators().len() > INCLUSION_EXCLUSION_CAP {
                assert!(k_polynomial_inclusion_exclusion(&m, ring.grading()).is_err());
                continue;
            }
            assert_eq!(
                k_polynomial(&m, ring.grading()),
                k_polynomial_inclusion_exclusion(&m, ring.grading()).unwrap(),
                "{tag:?}"
            );
        }
    }
}

#[test]
fn gradings_and_orders_agree_on_degrees() {
    for n in [2, 3] {
        let ring = Ring::matrix_pair(n).unwrap();
        for (tag, ideal) in scheme_ideals(n) {
            if matches!(tag, SchemeTag::Dz(_)) {
                continue;
            }
            let gb = buchberger(&ideal, &TermOrder::Grevlex);
            let bd = bidegree_from_basis(&gb, &ring).unwrap();
            let codim = ring.nvars() - monomial_dimension(&MonomialIdeal::from_basis(&gb)).unwrap();
            assert_eq!(bd.degree(), Some(codim as u32), "{tag:?}");
            assert_eq!(degree_from_basis(&gb).unwrap(), bd.eval_at_one(), "{tag:?}");
            if n == 2 {
                let lex = buchberger(&ideal, &TermOrder::Lex);
                assert_eq!(bidegree_from_basis(&lex, &ring).unwrap(), bd, "{tag:?}");
            }
        }
    }
}

#[test]
fn unit_ideal_has_no_multidegree() {
    let ring = Ring::matrix_pair(1).unwrap();
    let one = IdealSpec::new(
        "unit",
        vec![diagcomm::Poly::constant(ring.nvars(), Rational::one())],
    );
    let gb = buchberger(&one, &TermOrder::Grevlex);
    assert!(gb.is_unit());
    assert!(bidegree_from_basis(&gb, &ring).is_err());
}
