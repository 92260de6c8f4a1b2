use diagcomm::groebner::{
    buchberger, ideal_equal, initial_forms_ideal, initial_forms_ideal_homogenized,
    BuchbergerOptions,
};
use diagcomm::permlab::Permutation;
use diagcomm::polyring::{weight_initial_form, Monomial, Polynomial, TermOrder};
use diagcomm::schemes::{
    build_ideal, degeneration_weight, same_up_to_sign, tau_substitute, w0_conjugate, Orientation,
    SchemeTag,
};
use diagcomm::{Ideal, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn limit_of_d_is_d0() {
    for n in [2, 3] {
        let d = build_ideal(&SchemeTag::D, n).unwrap();
        let w = degeneration_weight(n, Orientation::Standard).unwrap();
        let limit = initial_forms_ideal(&d, &w).unwrap();
        let d0 = build_ideal(&SchemeTag::D0, n).unwrap();
        assert!(ideal_equal(&limit, &d0, &TermOrder::Grevlex), "n = {n}");
    }
}

#[test]
fn both_initial_form_routes_agree_on_d2() {
    let d = build_ideal(&SchemeTag::D, 2).unwrap();
    let w = degeneration_weight(2, Orientation::Standard).unwrap();
    let direct = initial_forms_ideal(&d, &w).unwrap();
    let homogenized =
        initial_forms_ideal_homogenized(&d, &w, &BuchbergerOptions::default()).unwrap();
    assert!(ideal_equal(&direct, &homogenized, &TermOrder::Grevlex));
}

#[test]
fn flipped_orientation_gives_conjugated_limit() {
    for n in [2, 3] {
        let d = build_ideal(&SchemeTag::D, n).unwrap();
        let w = degeneration_weight(n, Orientation::Flipped).unwrap();
        let limit = initial_forms_ideal(&d, &w).unwrap();
        let d0 = build_ideal(&SchemeTag::D0, n).unwrap();
        assert!(!ideal_equal(&limit, &d0, &TermOrder::Grevlex));
        let conj = w0_conjugate(&d0, n).unwrap();
        assert!(ideal_equal(&limit, &conj, &TermOrder::Grevlex), "n = {n}");
    }
}

#[test]
fn twist_of_d0_is_e_generator_for_generator() {
    for n in 1..=4 {
        let twisted = tau_substitute(&build_ideal(&SchemeTag::D0, n).unwrap(), n).unwrap();
        let e = build_ideal(&SchemeTag::E, n).unwrap();
        assert_eq!(twisted.generators.len(), e.generators.len());
        for g in &twisted.generators {
            assert!(
                e.generators.iter().any(|h| same_up_to_sign(g, h)),
                "n = {n}"
            );
        }
        for h in &e.generators {
            assert!(
                twisted.generators.iter().any(|g| same_up_to_sign(g, h)),
                "n = {n}"
            );
        }
    }
}

fn random_element(rng: &mut ChaCha8Rng, ideal: &Ideal) -> Polynomial<Rational> {
    let nvars = ideal.nvars().unwrap();
    let mut p = Polynomial::zero(nvars);
    for _ in 0..3 {
        let g = &ideal.generators[rng.gen_range(0..ideal.generators.len())];
        let exps: Vec<u16> = (0..nvars)
            .map(|_| {
                if rng.gen_ratio(1, 6) {
                    rng.gen_range(1..=2)
                } else {
                    0
                }
            })
            .collect();
        let c = Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into());
        p = &p + &g.mul_monomial(&Monomial::from_exponents(exps), &c);
    }
    p
}

#[test]
fn initial_forms_of_elements_lie_in_limit() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in [2, 3] {
        let mut tags = vec![
            SchemeTag::Commuting,
            SchemeTag::D,
            SchemeTag::D0,
            SchemeTag::E,
        ];
        tags.push(SchemeTag::EpiCandidate(Permutation::longest(n)));
        tags.push(SchemeTag::ClosureUnion(Permutation::identity(n)));
        for tag in tags {
            let ideal = build_ideal(&tag, n).unwrap();
            for orientation in [Orientation::Standard, Orientation::Flipped] {
                let w = degeneration_weight(n, orientation).unwrap();
                let gb = buchberger(
                    &initial_forms_ideal(&ideal, &w).unwrap(),
                    &TermOrder::Grevlex,
                );
                let mut checked = 0;
                while checked < 100 {
                    let p = random_element(&mut rng, &ideal);
                    if p.is_zero() {
                        continue;
                    }
                    let f = weight_initial_form(&p, &w).unwrap();
                    assert!(gb.contains(&f), "{tag:?} n = {n}");
                    checked += 1;
                }
            }
        }
    }
}
