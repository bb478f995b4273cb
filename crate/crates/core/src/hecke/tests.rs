use super::*;
use crate::kkalg::{a_coeff, b_coeff};
use crate::rootdata::CartanType;

fn datum(ty: CartanType, r: usize) -> RootDatum {
    RootDatum::build(ty, r).unwrap()
}

fn word(d: &RootDatum, s: &str) -> WeylElt {
    d.parse_word(s).unwrap().0
}

fn h_e(c: Scalar) -> HeckeElt {
    HeckeElt::from_scalar(WeylElt::IDENTITY, c)
}

#[test]
fn quadratic_relation() {
    let d = datum(CartanType::A, 2);
    let alg = HeckeAlgebra::new(&d);
    let s1 = alg.generator(0);
    let expected = &s1.scale(&tsum()) - &h_e(tprod());
    assert_eq!(alg.mul(&s1, &s1), expected);
    assert_eq!(alg.mul(&s1, &alg.generator(1)), alg.h(word(&d, "s1s2")));
    for (ty, r) in [(CartanType::A, 3), (CartanType::B, 2), (CartanType::C, 3), (CartanType::D, 4), (CartanType::G, 2)] {
        let d = datum(ty, r);
        let alg = HeckeAlgebra::new(&d);
        for i in 0..r {
            let a = &alg.generator(i) - &h_e(Scalar::t1());
            let b = &alg.generator(i) - &h_e(Scalar::t2());
            assert!(alg.mul(&a, &b).is_zero());
            // left and right generator multiplication agree on basis elements
            for w in d.elements().take(12) {
                assert_eq!(alg.generator_mul(i, &alg.h(w)), alg.mul(&alg.generator(i), &alg.h(w)));
            }
        }
    }
}

#[test]
fn yang_baxter_basis_examples() {
    let d = datum(CartanType::A, 2);
    let alg = HeckeAlgebra::new(&d);
    assert_eq!(alg.yang_baxter(WeylElt::IDENTITY), alg.h(WeylElt::IDENTITY));
    for i in 0..2 {
        let c = tsum() * Scalar::e_fn_inv(d.simple_root(i)).unwrap();
        let expected = &alg.generator(i) + &h_e(c);
        assert_eq!(alg.yang_baxter(d.simple(i)), expected);
        let e = Scalar::e_fn(d.simple_root(i));
        let llt = &alg.generator(i).scale(&e.div(&tsum()).unwrap()) + &h_e(Scalar::one());
        assert_eq!(alg.llt_normalize(d.simple(i)), llt);
    }
    assert_eq!(alg.llt_normalize(WeylElt::IDENTITY), alg.h(WeylElt::IDENTITY));
    let w0 = d.longest();
    let a = alg.yang_baxter_word(&[0, 1, 0]).unwrap();
    let b = alg.yang_baxter_word(&[1, 0, 1]).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.coeff(w0), Scalar::one());
    assert!(alg.yang_baxter_word(&[0, 0]).is_err());
}

#[test]
fn llt_identity_coefficient() {
    let d = datum(CartanType::B, 2);
    let alg = HeckeAlgebra::new(&d);
    for v in d.elements() {
        let norm = d
            .inversion_sequence(v)
            .iter()
            .fold(Scalar::one(), |acc, b| acc * Scalar::e_fn(b).div(&tsum()).unwrap());
        let y = alg.yang_baxter(v);
        assert_eq!(alg.llt_normalize(v).coeff(WeylElt::IDENTITY), norm * y.coeff(WeylElt::IDENTITY));
    }
}

#[test]
fn worked_a2_values() {
    let d = datum(CartanType::A, 2);
    let alg = HeckeAlgebra::new(&d);
    let t = alg.transition_tables();
    let (a1, a2, a12) = ([2, -1], [-1, 2], [1, 1]);
    let w0 = d.longest();
    let (s1, s2) = (d.simple(0), d.simple(1));
    for v in d.elements() {
        assert!(t.p.value(v, v).is_one());
        assert!(t.ptilde.value(v, v).is_one());
    }
    assert_eq!(t.p.value(WeylElt::IDENTITY, s1), tsum() * Scalar::e_fn_inv(&a1).unwrap());
    assert_eq!(t.ptilde.value(s1, w0), b_coeff(&a2) * b_coeff(&a12));
    assert_eq!(t.ptilde.value(s2, w0), b_coeff(&a1) * b_coeff(&a12));
    let neg_a1 = [-2, 1];
    let expected = b_coeff(&a1) * b_coeff(&a2) * b_coeff(&a1) + a_coeff(&a1) * b_coeff(&a12) * a_coeff(&neg_a1);
    assert_eq!(t.ptilde.value(WeylElt::IDENTITY, w0), expected);
    // absent entries are exactly the incomparable pairs
    for w in d.elements() {
        for v in d.elements() {
            assert_eq!(t.p.get(w, v).is_some(), d.bruhat_leq(w, v));
        }
    }
}

#[test]
fn recurrences_match_tables() {
    for d in [datum(CartanType::A, 2), datum(CartanType::B, 2)] {
        let alg = HeckeAlgebra::new(&d);
        let t = alg.transition_tables();
        for side in [Side::Left, Side::Right] {
            assert_eq!(p_recurrence_table(&d, side), t.p, "{} {side:?}", d.label());
            assert_eq!(ptilde_recurrence_table(&d, side), t.ptilde, "{} {side:?}", d.label());
        }
        let s = d.simple(0);
        assert_eq!(
            recurrence_p(&d, WeylElt::IDENTITY, s, Side::Left),
            tsum() * Scalar::e_fn_inv(d.simple_root(0)).unwrap()
        );
    }
}

#[test]
fn involutions() {
    let d = datum(CartanType::A, 2);
    let alg = HeckeAlgebra::new(&d);
    let t = alg.transition_tables();
    assert!(hat_generator_check(&alg).passed());
    let y = alg.yang_baxter(d.longest());
    assert_eq!(alg.omega(&alg.omega(&y)), y);
    assert_eq!(alg.hat(&alg.hat(&y)), y);
    assert_eq!(alg.vee(&alg.vee(&y)), y);
    assert!(omega_check(&alg, &t).passed());
    // omega and hat are algebra maps
    let f = alg.yang_baxter(d.simple(0));
    let g = alg.yang_baxter(word(&d, "s2s1"));
    assert_eq!(alg.omega(&alg.mul(&f, &g)), alg.mul(&alg.omega(&f), &alg.omega(&g)));
    assert_eq!(alg.hat(&alg.mul(&f, &g)), alg.mul(&alg.hat(&f), &alg.hat(&g)));
}

#[test]
fn inner_product_examples() {
    let d = datum(CartanType::A, 2);
    let alg = HeckeAlgebra::new(&d);
    let w0 = d.longest();
    assert!(alg.inner_product(&alg.h(WeylElt::IDENTITY), &alg.h(w0)).is_one());
    // (f, g) is the h_{w0}-coefficient of f g^vee
    let f = alg.yang_baxter(word(&d, "s1s2"));
    let g = alg.yang_baxter(word(&d, "s2s1"));
    assert_eq!(alg.inner_product(&f, &g), alg.mul(&f, &alg.vee(&g)).coeff(w0));
    assert!(orthogonality_h_check(&alg).passed());
    assert!(orthogonality_y_check(&alg, &alg.transition_tables()).passed());
}

#[test]
fn duality_on_a2() {
    let d = datum(CartanType::A, 2);
    let alg = HeckeAlgebra::new(&d);
    let t = alg.transition_tables();
    let res = duality_check(&alg, &t);
    assert!(res.passed(), "{res}");
    assert_eq!(res.checked, 19);
    assert!(conjugation_symmetry_check(&alg, &t).passed());
    assert!(hat_expansion_check(&alg, &t).passed());
    assert!(basis_roundtrip_check(&alg, &t).passed());
}

#[test]
fn table_emitters() {
    let d = datum(CartanType::A, 1);
    let alg = HeckeAlgebra::new(&d);
    let t = alg.transition_tables();
    let js = t.p.to_json(&d);
    assert_eq!(js["e|s1"], "(t1*x1^2 + t2*x1^2) / [(1 - x1)*(1 + x1)]");
    assert_eq!(js["s1|s1"], "1");
    assert!(js.get("s1|e").is_none());
    let tex = t.p.to_latex(&d, "p");
    assert!(tex.starts_with("% p(w, v)"));
    assert!(tex.contains("\\begin{tabular}{l|cc}"));
    assert!(tex.trim_end().ends_with("\\end{tabular}"));
    let text = t.ptilde.to_text(&d, "ptilde");
    assert_eq!(text.lines().count(), 3);
}
