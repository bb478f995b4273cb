use proptest::prelude::*;
use yangbaxter::hecke::HeckeAlgebra;
use yangbaxter::kkalg::KkAlgebra;
use yangbaxter::{CartanType, HeckeElt, RootDatum, Scalar, WeylElt};

fn datum(ty: CartanType, r: usize) -> RootDatum {
    RootDatum::build(ty, r).unwrap()
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..=max_len)
}

/// A small nonzero coefficient: `k e^lambda + t1` or `k / (1 - e^lambda) + t2`.
fn coefficient(rank: usize) -> impl Strategy<Value = Scalar> {
    (prop::collection::vec(-1i32..=1, rank), 1i128..=3, any::<bool>()).prop_map(|(lambda, k, poly)| {
        if poly || lambda.iter().all(|&c| c == 0) {
            Scalar::from_int(k) * Scalar::exp(&lambda) + Scalar::t1()
        } else {
            Scalar::from_int(k).div(&(Scalar::one() - Scalar::exp(&lambda))).unwrap() + Scalar::t2()
        }
    })
}

fn hecke_elt(order: usize, rank: usize) -> impl Strategy<Value = HeckeElt> {
    prop::collection::vec((0..order, coefficient(rank)), 1..=3)
        .prop_map(|terms| HeckeElt::from_coords(terms.into_iter().map(|(k, c)| (WeylElt::from_index(k), c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn word_products_respect_length_and_inverse(a in word(3, 8), b in word(3, 8)) {
        let d = datum(CartanType::B, 3);
        let (x, y) = (d.element_from_word(&a), d.element_from_word(&b));
        let xy = d.multiply(x, y);
        prop_assert!(d.length(xy) <= d.length(x) + d.length(y));
        prop_assert_eq!(d.length(xy) % 2, (d.length(x) + d.length(y)) % 2);
        prop_assert_eq!(d.inverse(xy), d.multiply(d.inverse(y), d.inverse(x)));
        prop_assert_eq!(d.length(d.inverse(x)), d.length(x));
        let mu = [1, -2, 3];
        prop_assert_eq!(d.act_weight(xy, &mu), d.act_weight(x, &d.act_weight(y, &mu)));
    }

    #[test]
    fn subwords_of_reduced_words_lie_below(v in 0usize..48, mask in any::<u16>()) {
        let d = datum(CartanType::B, 3);
        let v = WeylElt::from_index(v);
        let w = d.word(v);
        let sub: Vec<usize> = w.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect();
        let u = d.element_from_word(&sub);
        prop_assert!(d.bruhat_leq(u, v));
        prop_assert_eq!(d.bruhat_leq(u, v), d.bruhat_leq_lifting(u, v));
    }

    #[test]
    fn hecke_product_is_associative(f in hecke_elt(8, 2), g in hecke_elt(8, 2), h in hecke_elt(8, 2)) {
        let d = datum(CartanType::B, 2);
        let alg = HeckeAlgebra::new(&d);
        prop_assert_eq!(alg.mul(&alg.mul(&f, &g), &h), alg.mul(&f, &alg.mul(&g, &h)));
    }

    #[test]
    fn inner_product_adjointness(f in hecke_elt(6, 2), g in hecke_elt(6, 2), s in 0usize..2) {
        let d = datum(CartanType::A, 2);
        let alg = HeckeAlgebra::new(&d);
        let lhs = alg.inner_product(&alg.mul_generator(&f, s), &g);
        let rhs = alg.inner_product(&f, &alg.mul_generator(&g, s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn yang_baxter_words_are_word_independent(v in 0usize..12) {
        let d = datum(CartanType::G, 2);
        let alg = HeckeAlgebra::new(&d);
        let v = WeylElt::from_index(v);
        let expected = alg.yang_baxter(v);
        for w in d.reduced_words(v) {
            prop_assert_eq!(&alg.yang_baxter_word(&w).unwrap(), &expected);
        }
    }

    #[test]
    fn phi_is_multiplicative(a in word(2, 4), b in word(2, 4)) {
        let d = datum(CartanType::A, 2);
        let alg = HeckeAlgebra::new(&d);
        let kk = KkAlgebra::new(&d);
        let (x, y) = (kk.y_word(&a), kk.y_word(&b));
        let lhs = kk.phi_iso(&kk.twisted_mul(&x, &y));
        prop_assert_eq!(lhs, alg.mul(&kk.phi_iso(&x), &kk.phi_iso(&y)));
    }
}

#[test]
fn specialization_commutes_with_inversion() {
    for (ty, r) in [(CartanType::A, 2), (CartanType::B, 2)] {
        let d = datum(ty, r);
        let t = HeckeAlgebra::new(&d).transition_tables();
        for v in d.elements() {
            for w in d.elements() {
                let terms: Vec<Scalar> = d
                    .elements()
                    .map(|z| t.ptilde.value(w, z).specialize_q().unwrap() * t.p.value(z, v).specialize_q().unwrap())
                    .collect();
                let total = Scalar::sum(&terms);
                assert_eq!(total.is_one(), w == v);
                assert_eq!(total.is_zero(), w != v);
            }
        }
    }
}
