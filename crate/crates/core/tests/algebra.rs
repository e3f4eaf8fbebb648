mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tlgsb::presentations::{completed_basis, dimension, Family, TlAlgebra};
use tlgsb::rewrite::{is_closed_under_composition, Strategy};
use tlgsb::scalars::rational;
use tlgsb::{DeltaPoly, NcPoly, Word};

use common::*;

fn mul(alg: &TlAlgebra, p: &NcPoly, q: &NcPoly) -> NcPoly {
    alg.normal_form(&p.mul(q)).unwrap()
}

fn random_element(alg: &TlAlgebra, rng: &mut ChaCha8Rng) -> NcPoly {
    let terms = rng.gen_range(1..=3);
    NcPoly::from_terms((0..terms).map(|_| {
        let m = &alg.basis()[rng.gen_range(0..alg.dim())];
        (m.word(), random_coeff(rng))
    }))
}

#[test]
fn completed_algebras_are_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let families = [
        Family::gd1n(2, 2).unwrap(),
        Family::type_b(3).unwrap(),
        Family::type_b(4).unwrap(),
        Family::gd1n(3, 3).unwrap(),
        Family::type_a(5).unwrap(),
    ];
    for f in families {
        let alg = TlAlgebra::completed(f.clone(), 12).unwrap();
        assert!(is_closed_under_composition(alg.rules()).closed, "{f}");
        for _ in 0..300 {
            let (a, b, c) = (random_element(&alg, &mut rng), random_element(&alg, &mut rng), random_element(&alg, &mut rng));
            assert_eq!(mul(&alg, &mul(&alg, &a, &b), &c), mul(&alg, &a, &mul(&alg, &b, &c)), "{f}");
        }
    }
}

#[test]
fn unit_and_bilinearity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let alg = TlAlgebra::completed(Family::type_b(3).unwrap(), 12).unwrap();
    let one = NcPoly::word(Word::empty());
    for _ in 0..100 {
        let (a, b, c) = (random_element(&alg, &mut rng), random_element(&alg, &mut rng), random_element(&alg, &mut rng));
        assert_eq!(mul(&alg, &one, &a), a);
        assert_eq!(mul(&alg, &a, &b.add(&c)), mul(&alg, &a, &b).add(&mul(&alg, &a, &c)));
    }
}

#[test]
fn completed_type_b_dimensions_match_formula() {
    for n in 2..=5 {
        let f = Family::type_b(n).unwrap();
        let alg = TlAlgebra::completed(f.clone(), 12).unwrap();
        assert_eq!(alg.dim() as u128, dimension(&f).unwrap());
        assert_eq!(alg.dim() as u128, (n as u128 + 2) * catalan(n as u128) - 1);
    }
}

#[test]
fn hand_computed_products() {
    let alg = TlAlgebra::completed(Family::gd1n(3, 3).unwrap(), 12).unwrap();
    let delta = DeltaPoly::delta();
    // E0^3 = 2δE0
    assert_eq!(alg.product_words(&w("00"), &w("0")).unwrap(), NcPoly::term(w("0"), delta.scale(&rational(2, 1))));
    // E1E0E1·E0 = 2E1E0 (quartic with k = 1)
    assert_eq!(alg.product_words(&w("1.0.1"), &w("0")).unwrap(), NcPoly::term(w("10"), DeltaPoly::from_int(2)));
    // E1·E1 = δE1
    assert_eq!(alg.product_words(&w("1"), &w("1")).unwrap(), NcPoly::term(w("1"), delta));
}

#[test]
fn strategies_agree_on_completed_t33() {
    let rules = completed_basis(&Family::gd1n(3, 3).unwrap(), 12).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let p = random_poly(&mut rng, &[0, 1, 2]);
        assert_eq!(rules.normal_form_with(&p, Strategy::Leftmost), rules.normal_form_with(&p, Strategy::Rightmost));
    }
}
