//! The twisted group algebra `Q_{t1,t2}(Lambda) # Z[W]` with product
//! `(f delta_w)(g delta_u) = f w(g) delta_{wu}`, the Demazure-Lusztig
//! elements `y_i = A_i delta_i + B_i`, and the isomorphism `Phi` onto the
//! Hecke algebra sending `y_w` to `h_w`.

mod checks;

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::hecke::HeckeElt;
use crate::rootdata::{RootDatum, WeylElt};
use crate::scalars::Scalar;

pub use checks::{
    closed_formula_check, delta_multiplicativity_check, dl_relations_check, phi_delta_check,
    word_independence_check,
};

/// `A_beta = (t1 + t2 e^{-beta}) / (1 - e^beta)`.
pub fn a_coeff(beta: &[i32]) -> Scalar {
    let neg: Vec<i32> = beta.iter().map(|c| -c).collect();
    let num = Scalar::t1() + Scalar::t2() * Scalar::exp(&neg);
    num.div(&(Scalar::one() - Scalar::exp(beta))).expect("beta is nonzero")
}

/// `1 / A_beta`.
pub fn a_coeff_inv(beta: &[i32]) -> Scalar {
    let neg: Vec<i32> = beta.iter().map(|c| -c).collect();
    let den = Scalar::t1() + Scalar::t2() * Scalar::exp(&neg);
    (Scalar::one() - Scalar::exp(beta)).div(&den).expect("t1 + t2 e^{-beta} is nonzero")
}

/// `B_beta = (t1 + t2) / (1 - e^{-beta})`.
pub fn b_coeff(beta: &[i32]) -> Scalar {
    let neg: Vec<i32> = beta.iter().map(|c| -c).collect();
    (Scalar::t1() + Scalar::t2()).div(&(Scalar::one() - Scalar::exp(&neg))).expect("beta is nonzero")
}

/// An element `sum_w f_w delta_w`. Zero coordinates are never stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TwistedElt {
    coords: BTreeMap<WeylElt, Scalar>,
}

impl TwistedElt {
    pub fn zero() -> Self {
        TwistedElt::default()
    }

    pub fn delta(w: WeylElt) -> Self {
        Self::from_scalar(w, Scalar::one())
    }

    pub fn from_scalar(w: WeylElt, c: Scalar) -> Self {
        Self::from_coords([(w, c)])
    }

    pub fn from_coords(terms: impl IntoIterator<Item = (WeylElt, Scalar)>) -> Self {
        let mut grouped: BTreeMap<WeylElt, Vec<Scalar>> = BTreeMap::new();
        for (w, c) in terms {
            grouped.entry(w).or_default().push(c);
        }
        let coords = grouped
            .into_iter()
            .filter_map(|(w, cs)| {
                let s = Scalar::sum(&cs);
                (!s.is_zero()).then_some((w, s))
            })
            .collect();
        TwistedElt { coords }
    }

    pub fn coeff(&self, w: WeylElt) -> Scalar {
        self.coords.get(&w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (WeylElt, &Scalar)> {
        self.coords.iter().map(|(w, c)| (*w, c))
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Left scalar multiplication `c * x`.
    pub fn scale(&self, c: &Scalar) -> Self {
        TwistedElt::from_coords(self.iter().map(|(w, x)| (w, c * x)))
    }

    /// The element with the largest index in the support.
    pub fn top(&self) -> Option<(WeylElt, &Scalar)> {
        self.coords.iter().next_back().map(|(w, c)| (*w, c))
    }
}

impl Add<&TwistedElt> for &TwistedElt {
    type Output = TwistedElt;
    fn add(self, rhs: &TwistedElt) -> TwistedElt {
        TwistedElt::from_coords(self.iter().chain(rhs.iter()).map(|(w, c)| (w, c.clone())))
    }
}

impl Sub<&TwistedElt> for &TwistedElt {
    type Output = TwistedElt;
    fn sub(self, rhs: &TwistedElt) -> TwistedElt {
        self + &(-rhs)
    }
}

impl Neg for &TwistedElt {
    type Output = TwistedElt;
    fn neg(self) -> TwistedElt {
        TwistedElt::from_coords(self.iter().map(|(w, c)| (w, -c)))
    }
}

/// Arithmetic context for one datum; caches the `y`-basis.
pub struct KkAlgebra<'d> {
    datum: &'d RootDatum,
    y_basis: OnceLock<Vec<TwistedElt>>,
}

impl<'d> KkAlgebra<'d> {
    pub fn new(datum: &'d RootDatum) -> Self {
        KkAlgebra { datum, y_basis: OnceLock::new() }
    }

    pub fn datum(&self) -> &'d RootDatum {
        self.datum
    }

    pub fn twisted_mul(&self, x: &TwistedElt, y: &TwistedElt) -> TwistedElt {
        let d = self.datum;
        let mut terms = Vec::with_capacity(x.len() * y.len());
        for (w, f) in x.iter() {
            for (u, g) in y.iter() {
                terms.push((d.multiply(w, u), f * &d.act(w, g)));
            }
        }
        TwistedElt::from_coords(terms)
    }

    /// `y_i = A_i delta_i + B_i delta_e`.
    pub fn dl_generator(&self, i: usize) -> TwistedElt {
        let alpha = self.datum.simple_root(i);
        TwistedElt::from_coords([(self.datum.simple(i), a_coeff(alpha)), (WeylElt::IDENTITY, b_coeff(alpha))])
    }

    /// `x * y_i`, using `delta_w B = w(B) delta_w`.
    pub fn mul_dl_generator(&self, x: &TwistedElt, i: usize) -> TwistedElt {
        let d = self.datum;
        let mut terms = Vec::with_capacity(2 * x.len());
        for (w, f) in x.iter() {
            let beta = d.act_weight(w, d.simple_root(i));
            terms.push((d.right_mul_simple(w, i), f * &a_coeff(&beta)));
            terms.push((w, f * &b_coeff(&beta)));
        }
        TwistedElt::from_coords(terms)
    }

    /// Product of the `y_i` along a word.
    pub fn y_word(&self, word: &[usize]) -> TwistedElt {
        word.iter().fold(TwistedElt::delta(WeylElt::IDENTITY), |acc, &i| self.mul_dl_generator(&acc, i))
    }

    /// `y_w` along the canonical word (cached).
    pub fn y(&self, w: WeylElt) -> &TwistedElt {
        &self.y_basis()[w.index()]
    }

    fn y_basis(&self) -> &Vec<TwistedElt> {
        self.y_basis.get_or_init(|| {
            let d = self.datum;
            let mut out: Vec<TwistedElt> = Vec::with_capacity(d.order());
            out.push(TwistedElt::delta(WeylElt::IDENTITY));
            for w in d.elements().skip(1) {
                let i = *d.word(w).last().unwrap();
                let prev = &out[d.right_mul_simple(w, i).index()];
                let next = self.mul_dl_generator(prev, i);
                out.push(next);
            }
            out
        })
    }

    /// `A(w) = prod_{beta in R(w)} A_beta`.
    pub fn a_of(&self, w: WeylElt) -> Scalar {
        self.datum.inversion_sequence(w).iter().fold(Scalar::one(), |acc, b| acc * a_coeff(b))
    }

    /// `1 / A(w)`, built factor by factor.
    pub fn a_of_inv(&self, w: WeylElt) -> Scalar {
        self.datum.inversion_sequence(w).iter().fold(Scalar::one(), |acc, b| acc * a_coeff_inv(b))
    }

    /// `Delta_w = A(w) delta_w`.
    pub fn delta_element(&self, w: WeylElt) -> TwistedElt {
        TwistedElt::from_scalar(w, self.a_of(w))
    }

    /// Coordinates of `x` in the `y`-basis, by back-substitution from the
    /// top of the support (the `y`-basis is unitriangular up to the
    /// diagonal `A(w)`).
    pub fn y_coordinates(&self, x: &TwistedElt) -> BTreeMap<WeylElt, Scalar> {
        let mut rest = x.clone();
        let mut out = BTreeMap::new();
        while let Some((w, c)) = rest.top() {
            let coeff = c * &self.a_of_inv(w);
            rest = &rest - &self.y(w).scale(&coeff);
            out.insert(w, coeff);
        }
        out
    }

    /// `Phi`: `y_w -> h_w`.
    pub fn phi_iso(&self, x: &TwistedElt) -> HeckeElt {
        HeckeElt::from_coords(self.y_coordinates(x))
    }

    /// `ptilde(w, v)` from the subword expansion of `y_v` along the canonical
    /// word of `v`, grouping subword prefixes by their product.
    pub fn ptilde_closed(&self, w: WeylElt, v: WeylElt) -> Scalar {
        let d = self.datum;
        let word = d.word(v);
        // suffix[j] = product of word[j..]; a state can reach w only if
        // pi^{-1} w lies below the remaining suffix
        let mut suffix = vec![WeylElt::IDENTITY; word.len() + 1];
        for j in (0..word.len()).rev() {
            suffix[j] = d.left_mul_simple(word[j], suffix[j + 1]);
        }
        let reachable = |pi: WeylElt, j: usize| d.bruhat_leq(d.multiply(d.inverse(pi), w), suffix[j]);
        let mut states: BTreeMap<WeylElt, Scalar> = BTreeMap::new();
        if reachable(WeylElt::IDENTITY, 0) {
            states.insert(WeylElt::IDENTITY, Scalar::one());
        }
        for (j, &i) in word.iter().enumerate() {
            let mut next: BTreeMap<WeylElt, Vec<Scalar>> = BTreeMap::new();
            for (pi, c) in &states {
                let beta = d.act_weight(*pi, d.simple_root(i));
                let up = d.right_mul_simple(*pi, i);
                if reachable(up, j + 1) {
                    next.entry(up).or_default().push(c * &a_coeff(&beta));
                }
                if reachable(*pi, j + 1) {
                    next.entry(*pi).or_default().push(c * &b_coeff(&beta));
                }
            }
            states = next.into_iter().map(|(pi, cs)| (pi, Scalar::sum(&cs))).collect();
        }
        states.get(&w).map_or_else(Scalar::zero, |s| s * &self.a_of_inv(w))
    }

    /// The same sum, enumerating all `2^l(v)` binary vectors.
    pub fn ptilde_closed_enumerated(&self, w: WeylElt, v: WeylElt) -> Scalar {
        let d = self.datum;
        let word = d.word(v);
        let terms: Vec<Scalar> = (0u64..1 << word.len())
            .into_par_iter()
            .filter_map(|eps| {
                let mut pi = WeylElt::IDENTITY;
                let mut prod = Scalar::one();
                for (j, &i) in word.iter().enumerate() {
                    let beta = d.act_weight(pi, d.simple_root(i));
                    if eps >> j & 1 == 1 {
                        prod = prod * a_coeff(&beta);
                        pi = d.right_mul_simple(pi, i);
                    } else {
                        prod = prod * b_coeff(&beta);
                    }
                }
                (pi == w).then_some(prod)
            })
            .collect();
        Scalar::sum(&terms) * self.a_of_inv(w)
    }

    /// The column `p(., v)`, as `Phi(Delta_v)`.
    pub fn p_via_phi(&self, v: WeylElt) -> HeckeElt {
        self.phi_iso(&self.delta_element(v))
    }
}
