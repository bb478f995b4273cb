use rayon::prelude::*;

use crate::hecke::{HeckeAlgebra, HeckeElt, TransitionTables};
use crate::report::CheckResult;
use crate::rootdata::WeylElt;
use crate::scalars::Scalar;

use super::{KkAlgebra, TwistedElt};

/// Words with more reduced expressions than this are sampled.
const MAX_WORDS: usize = 8;

fn constant(c: Scalar) -> TwistedElt {
    TwistedElt::from_scalar(WeylElt::IDENTITY, c)
}

/// `(y_i - t1)(y_i - t2) = 0` and the braid relations of every pair.
pub fn dl_relations_check(kk: &KkAlgebra<'_>) -> CheckResult {
    let d = kk.datum();
    let mut res = CheckResult::new("quadratic and braid relations for y_i", d.label());
    for i in 0..d.rank() {
        let y = kk.dl_generator(i);
        let a = &y - &constant(Scalar::t1());
        let b = &y - &constant(Scalar::t2());
        res.record(kk.twisted_mul(&a, &b).is_zero(), || format!("quadratic relation for y{}", i + 1));
    }
    for i in 0..d.rank() {
        for j in i + 1..d.rank() {
            let m = d.coxeter_m(i, j);
            let alternating = |first: usize, second: usize| {
                let word: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { first } else { second }).collect();
                kk.y_word(&word)
            };
            res.record(alternating(i, j) == alternating(j, i), || format!("braid relation y{} y{} (m={m})", i + 1, j + 1));
        }
    }
    res
}

/// `y_w` and `Delta_{s_{i_1}} ... Delta_{s_{i_l}}` agree across reduced words,
/// the latter with `A(w) delta_w`.
pub fn word_independence_check(kk: &KkAlgebra<'_>) -> CheckResult {
    let d = kk.datum();
    let mut res = CheckResult::new("word independence of y_w and Delta_w", d.label());
    let elements: Vec<WeylElt> = d.elements().collect();
    let outcomes: Vec<(WeylElt, bool)> = elements
        .par_iter()
        .map(|&w| {
            let expected_delta = kk.delta_element(w);
            let ok = d.reduced_words(w).iter().take(MAX_WORDS).all(|word| {
                let delta = word.iter().fold(TwistedElt::delta(WeylElt::IDENTITY), |acc, &i| {
                    kk.twisted_mul(&acc, &kk.delta_element(d.simple(i)))
                });
                kk.y_word(word) == *kk.y(w) && delta == expected_delta
            });
            (w, ok)
        })
        .collect();
    for (w, ok) in outcomes {
        res.record(ok, || format!("w={}", d.word_string(w)));
    }
    res
}

/// `Delta_{s_i} = y_i - B_i` and multiplicativity along canonical words.
pub fn delta_multiplicativity_check(kk: &KkAlgebra<'_>) -> CheckResult {
    let d = kk.datum();
    let mut res = CheckResult::new("Delta_w multiplicativity", d.label());
    for i in 0..d.rank() {
        let lhs = kk.delta_element(d.simple(i));
        let rhs = &kk.dl_generator(i) - &constant(super::b_coeff(d.simple_root(i)));
        res.record(lhs == rhs, || format!("Delta of s{}", i + 1));
    }
    for w in d.elements().skip(1) {
        let i = *d.word(w).last().unwrap();
        let prefix = d.right_mul_simple(w, i);
        let lhs = kk.twisted_mul(&kk.delta_element(prefix), &kk.delta_element(d.simple(i)));
        res.record(lhs == kk.delta_element(w), || format!("w={}", d.word_string(w)));
    }
    res
}

/// `Phi(y_w) = h_w` and `Phi(Delta_w) = Y_w`.
pub fn phi_delta_check(kk: &KkAlgebra<'_>, alg: &HeckeAlgebra<'_>) -> CheckResult {
    let d = kk.datum();
    let mut res = CheckResult::new("Phi(Delta_w) = Y_w", d.label());
    let elements: Vec<WeylElt> = d.elements().collect();
    let outcomes: Vec<(WeylElt, bool)> = elements
        .par_iter()
        .map(|&w| {
            let ok = kk.phi_iso(kk.y(w)) == HeckeElt::basis(w) && kk.p_via_phi(w) == alg.yang_baxter(w);
            (w, ok)
        })
        .collect();
    for (w, ok) in outcomes {
        res.record(ok, || format!("w={}", d.word_string(w)));
    }
    res
}

/// The subword formula for `ptilde(w, v)` against the inverted table.
pub fn closed_formula_check(kk: &KkAlgebra<'_>, t: &TransitionTables) -> CheckResult {
    let d = kk.datum();
    let mut res = CheckResult::new("subword formula for ptilde", d.label());
    let elements: Vec<WeylElt> = d.elements().collect();
    let outcomes: Vec<Vec<bool>> = elements
        .par_iter()
        .map(|&v| elements.iter().map(|&w| kk.ptilde_closed(w, v) == t.ptilde.value(w, v)).collect())
        .collect();
    for (v, row) in elements.iter().zip(outcomes) {
        for (w, ok) in elements.iter().zip(row) {
            res.record(ok, || format!("w={}, v={}", d.word_string(*w), d.word_string(*v)));
        }
    }
    res
}
