//! Canonical denominator factors.
//!
//! A denominator factor is stored with integer content 1, its componentwise
//! minimal monomial divided out, and a positive first term. Binomials
//! `1 ± y^k` with `y` a primitive monomial and `k > 1` are split further into
//! cyclotomic pieces `Phi_d(y)`, which keeps every factor that arises from
//! `E(beta)` irreducible.

use super::poly::{LaurentPoly, Monomial};

pub(crate) struct Normalized {
    /// Signed integer unit: `p = coeff * mono * prod(factors)`.
    pub coeff: i128,
    pub mono: Monomial,
    pub factors: Vec<LaurentPoly>,
}

/// Content, monomial and sign normalization without splitting.
fn primitive_part(p: &LaurentPoly) -> (i128, Monomial, LaurentPoly) {
    debug_assert!(!p.is_zero());
    let c = p.content();
    let m = p.min_monomial();
    let mut q = p.mul_monomial(&m.inv()).div_int(c);
    let mut coeff = c;
    if q.first().is_some_and(|t| t.1 < 0) {
        q = q.neg();
        coeff = -coeff;
    }
    (coeff, m, q)
}

pub(crate) fn normalize(p: &LaurentPoly) -> Normalized {
    let (coeff, mono, q) = primitive_part(p);
    if q.is_monomial() {
        // a unit: q == 1 after normalization
        return Normalized { coeff, mono, factors: Vec::new() };
    }
    if let Some(pieces) = split_binomial(&q) {
        let mut factors = Vec::new();
        for piece in &pieces {
            let (_, _, f) = primitive_part(piece);
            factors.push(f);
        }
        let product = factors.iter().fold(LaurentPoly::one(), |acc, f| acc.mul(f));
        let unit = q
            .div_exact(&product)
            .expect("cyclotomic split must divide the binomial");
        debug_assert!(unit.is_monomial());
        let (um, uc) = unit.terms()[0];
        factors.sort();
        return Normalized {
            coeff: coeff * uc,
            mono: mono.mul(&um),
            factors,
        };
    }
    Normalized { coeff, mono, factors: vec![q] }
}

/// Splits `a + b*y^k` (`|a| = |b| = 1`, `y` primitive, `k > 1`) into
/// cyclotomic factors in `y`. Returns `None` when no splitting applies.
fn split_binomial(q: &LaurentPoly) -> Option<Vec<LaurentPoly>> {
    let [(m1, c1), (m2, c2)] = q.terms() else {
        return None;
    };
    if c1.abs() != 1 || c2.abs() != 1 {
        return None;
    }
    let ratio = m2.div(m1);
    let k = ratio.exponent_gcd();
    if k <= 1 {
        return None;
    }
    let y = Monomial::from_exponents(ratio.exponents().map(|e| e / k));
    let k = k as u32;
    let divisors: Vec<u32> = if c1 * c2 < 0 {
        (1..=k).filter(|d| k.is_multiple_of(*d)).collect()
    } else {
        (1..=2 * k).filter(|d| (2 * k).is_multiple_of(*d) && !k.is_multiple_of(*d)).collect()
    };
    Some(
        divisors
            .into_iter()
            .map(|d| substitute(&cyclotomic(d), &y))
            .collect(),
    )
}

/// `Phi_d` as a univariate polynomial in the first variable.
fn cyclotomic(d: u32) -> LaurentPoly {
    let y = |e: i32| Monomial::var(0, e);
    let mut num = LaurentPoly::term(y(d as i32), 1).sub(&LaurentPoly::one());
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        num = num
            .div_exact(&cyclotomic(e))
            .expect("cyclotomic recursion is exact");
    }
    num
}

fn substitute(univariate: &LaurentPoly, y: &Monomial) -> LaurentPoly {
    LaurentPoly::from_terms(
        univariate
            .terms()
            .iter()
            .map(|(m, c)| (y.pow(m.exponent(0)), *c)),
    )
}
