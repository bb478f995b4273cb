//! The generic Hecke algebra over the fraction field `Q_{t1,t2}(Lambda)`.
//!
//! Elements are written in the standard basis `{h_w}`; scalars are central.
//! The Yang-Baxter basis is
//! `Y_v = prod_j (h_{i_j} + (t1+t2)/E(beta_j))` along a reduced word of `v`,
//! and the transition coefficients are defined by
//! `Y_v = sum_w p(w,v) h_w` and `h_v = sum_w ptilde(w,v) Y_w`.

mod checks;
mod recurrence;
mod table;

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, WeylElt};
use crate::scalars::Scalar;

pub use checks::{
    adjointness_check, basis_roundtrip_check, conjugation_symmetry_check, duality_check,
    hat_expansion_check, hat_generator_check, omega_check, orthogonality_h_check, orthogonality_y_check,
    yang_baxter_relation_check, yang_baxter_relations,
};
pub use recurrence::{
    p_recurrence_table, p_recurrence_table_at, ptilde_recurrence_table, ptilde_recurrence_table_at, recurrence_p,
    recurrence_ptilde, Params, Side,
};
pub use table::CoeffTable;

pub(crate) fn tsum() -> Scalar {
    Scalar::t1() + Scalar::t2()
}

pub(crate) fn tprod() -> Scalar {
    Scalar::t1() * Scalar::t2()
}

/// An element `sum_w c_w h_w`. Zero coordinates are never stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct HeckeElt {
    coords: BTreeMap<WeylElt, Scalar>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        HeckeElt::default()
    }

    /// The basis element `h_w`.
    pub fn basis(w: WeylElt) -> Self {
        Self::from_scalar(w, Scalar::one())
    }

    pub fn from_scalar(w: WeylElt, c: Scalar) -> Self {
        let mut out = HeckeElt::zero();
        out.add_term(w, c);
        out
    }

    pub fn from_coords(terms: impl IntoIterator<Item = (WeylElt, Scalar)>) -> Self {
        let mut out = HeckeElt::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, w: WeylElt, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coords.remove(&w) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.coords.insert(w, s);
                }
            }
            None => {
                self.coords.insert(w, c);
            }
        }
    }

    pub fn coeff(&self, w: WeylElt) -> Scalar {
        self.coords.get(&w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn get(&self, w: WeylElt) -> Option<&Scalar> {
        self.coords.get(&w)
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

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return HeckeElt::zero();
        }
        self.map_coeffs(|x| x * c)
    }

    /// Applies `f` to every coordinate, keeping the basis fixed.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        HeckeElt::from_coords(self.coords.iter().map(|(w, c)| (*w, f(c))))
    }

    /// Sums linear combinations with a single common denominator per
    /// coordinate.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a HeckeElt>) -> HeckeElt {
        let mut grouped: BTreeMap<WeylElt, Vec<&Scalar>> = BTreeMap::new();
        for x in items {
            for (w, c) in &x.coords {
                grouped.entry(*w).or_default().push(c);
            }
        }
        HeckeElt::from_coords(grouped.into_iter().map(|(w, cs)| (w, Scalar::sum(cs))))
    }

    /// `h_e`-leading text form with canonical words, e.g. `h_s1s2: ...`.
    pub fn display(&self, datum: &RootDatum) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coords
            .iter()
            .map(|(w, c)| format!("({c})*h[{}]", datum.word_string(*w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Add<&HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn add(self, rhs: &HeckeElt) -> HeckeElt {
        HeckeElt::sum([self, rhs])
    }
}

impl Sub<&HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn sub(self, rhs: &HeckeElt) -> HeckeElt {
        self + &(-rhs)
    }
}

impl Neg for &HeckeElt {
    type Output = HeckeElt;
    fn neg(self) -> HeckeElt {
        self.map_coeffs(|c| -c)
    }
}

/// Arithmetic context for one root datum; caches the hatted basis and the
/// structure constants needed by the inner product.
pub struct HeckeAlgebra<'d> {
    datum: &'d RootDatum,
    hat_basis: OnceLock<Vec<HeckeElt>>,
    top: OnceLock<Vec<Vec<Option<Scalar>>>>,
}

impl<'d> HeckeAlgebra<'d> {
    pub fn new(datum: &'d RootDatum) -> Self {
        HeckeAlgebra { datum, hat_basis: OnceLock::new(), top: OnceLock::new() }
    }

    pub fn datum(&self) -> &'d RootDatum {
        self.datum
    }

    pub fn h(&self, w: WeylElt) -> HeckeElt {
        HeckeElt::basis(w)
    }

    pub fn generator(&self, i: usize) -> HeckeElt {
        HeckeElt::basis(self.datum.simple(i))
    }

    /// `f * h_i`.
    pub fn mul_generator(&self, f: &HeckeElt, i: usize) -> HeckeElt {
        let d = self.datum;
        let mut up: Vec<(WeylElt, Scalar)> = Vec::with_capacity(f.len());
        let mut down: Vec<(WeylElt, Scalar)> = Vec::new();
        for (w, c) in f.iter() {
            let ws = d.right_mul_simple(w, i);
            if d.length(ws) > d.length(w) {
                up.push((ws, c.clone()));
            } else {
                down.push((w, c * &tsum()));
                down.push((ws, -(c * &tprod())));
            }
        }
        combine(up, down)
    }

    /// `h_i * f`.
    pub fn generator_mul(&self, i: usize, f: &HeckeElt) -> HeckeElt {
        let d = self.datum;
        let mut up: Vec<(WeylElt, Scalar)> = Vec::with_capacity(f.len());
        let mut down: Vec<(WeylElt, Scalar)> = Vec::new();
        for (w, c) in f.iter() {
            let sw = d.left_mul_simple(i, w);
            if d.length(sw) > d.length(w) {
                up.push((sw, c.clone()));
            } else {
                down.push((w, c * &tsum()));
                down.push((sw, -(c * &tprod())));
            }
        }
        combine(up, down)
    }

    /// `f * h_w`.
    pub fn mul_basis(&self, f: &HeckeElt, w: WeylElt) -> HeckeElt {
        self.datum.word(w).iter().fold(f.clone(), |acc, &i| self.mul_generator(&acc, i))
    }

    pub fn mul(&self, f: &HeckeElt, g: &HeckeElt) -> HeckeElt {
        let parts: Vec<HeckeElt> = g.iter().map(|(u, c)| self.mul_basis(f, u).scale(c)).collect();
        HeckeElt::sum(&parts)
    }

    /// `h_i(lambda) = h_i + (t1+t2)/E(lambda)`.
    pub fn spectral_generator(&self, i: usize, lambda: &[i32]) -> Result<HeckeElt> {
        if lambda.len() != self.datum.rank() {
            return Err(Error::DimensionMismatch { expected: self.datum.rank(), got: lambda.len() });
        }
        let c = tsum() * Scalar::e_fn_inv(lambda)?;
        Ok(&self.generator(i) + &HeckeElt::from_scalar(WeylElt::IDENTITY, c))
    }

    /// `Y_v` along the canonical reduced word of `v`.
    pub fn yang_baxter(&self, v: WeylElt) -> HeckeElt {
        self.yang_baxter_word(self.datum.word(v)).expect("canonical words are reduced")
    }

    /// `Y_v` along an arbitrary reduced word.
    pub fn yang_baxter_word(&self, word: &[usize]) -> Result<HeckeElt> {
        let d = self.datum;
        let mut y = HeckeElt::basis(WeylElt::IDENTITY);
        let mut prefix = WeylElt::IDENTITY;
        for &i in word {
            let next = d.right_mul_simple(prefix, i);
            if d.length(next) < d.length(prefix) {
                return Err(Error::MalformedWord {
                    word: word.iter().map(|i| format!("s{}", i + 1)).collect(),
                    reason: "word is not reduced".into(),
                });
            }
            let beta = d.act_weight(prefix, d.simple_root(i));
            let c = tsum() * Scalar::e_fn_inv(&beta)?;
            y = &self.mul_generator(&y, i) + &y.scale(&c);
            prefix = next;
        }
        Ok(y)
    }

    /// All `Y_v`, in element order.
    pub fn yang_baxter_basis(&self) -> Vec<HeckeElt> {
        let elements: Vec<WeylElt> = self.datum.elements().collect();
        elements.par_iter().map(|&v| self.yang_baxter(v)).collect()
    }

    /// `(prod_j E(beta_j)/(t1+t2)) Y_v`.
    pub fn llt_normalize(&self, v: WeylElt) -> HeckeElt {
        let factor = self
            .datum
            .inversion_sequence(v)
            .iter()
            .fold(Scalar::one(), |acc, b| acc * Scalar::e_fn(b));
        let norm = factor.div(&tsum().pow(self.datum.length(v) as i32).unwrap()).unwrap();
        self.yang_baxter(v).scale(&norm)
    }

    /// `h_w -> h_{w^{-1}}`, scalars fixed.
    pub fn vee(&self, f: &HeckeElt) -> HeckeElt {
        HeckeElt::from_coords(f.iter().map(|(w, c)| (self.datum.inverse(w), c.clone())))
    }

    /// `h_w -> h_{w0 w w0}`, scalars fixed.
    pub fn omega(&self, f: &HeckeElt) -> HeckeElt {
        HeckeElt::from_coords(f.iter().map(|(w, c)| (self.datum.conjugate_by_longest(w), c.clone())))
    }

    /// Weyl action on the coefficients only.
    pub fn act(&self, w: WeylElt, f: &HeckeElt) -> HeckeElt {
        f.map_coeffs(|c| self.datum.act(w, c))
    }

    /// `star` on the coefficients only.
    pub fn star(&self, f: &HeckeElt) -> HeckeElt {
        f.map_coeffs(Scalar::star)
    }

    /// `hat h_w` expanded in the standard basis.
    pub fn hat_basis(&self, w: WeylElt) -> &HeckeElt {
        &self.hat_basis.get_or_init(|| self.build_hat_basis())[w.index()]
    }

    fn build_hat_basis(&self) -> Vec<HeckeElt> {
        let d = self.datum;
        let mut out: Vec<HeckeElt> = Vec::with_capacity(d.order());
        out.push(HeckeElt::basis(WeylElt::IDENTITY));
        for w in d.elements().skip(1) {
            // canonical prefixes are canonical, so the prefix is already built
            let i = *d.word(w).last().unwrap();
            let prev = &out[d.right_mul_simple(w, i).index()];
            let next = &self.mul_generator(prev, i) - &prev.scale(&tsum());
            out.push(next);
        }
        out
    }

    /// The involution `h_i -> h_i - (t1+t2)`, `t1 -> -t2`, `t2 -> -t1`.
    pub fn hat(&self, f: &HeckeElt) -> HeckeElt {
        let parts: Vec<HeckeElt> = f.iter().map(|(w, c)| self.hat_basis(w).scale(&c.hat())).collect();
        HeckeElt::sum(&parts)
    }

    fn top(&self) -> &Vec<Vec<Option<Scalar>>> {
        self.top.get_or_init(|| {
            let d = self.datum;
            let w0 = d.longest();
            let elements: Vec<WeylElt> = d.elements().collect();
            elements
                .par_iter()
                .map(|&x| {
                    let mut prods: Vec<HeckeElt> = Vec::with_capacity(d.order());
                    prods.push(HeckeElt::basis(x));
                    for z in d.elements().skip(1) {
                        let i = *d.word(z).last().unwrap();
                        let prev = &prods[d.right_mul_simple(z, i).index()];
                        prods.push(self.mul_generator(prev, i));
                    }
                    prods.iter().map(|p| p.get(w0).cloned()).collect()
                })
                .collect()
        })
    }

    /// The vector `r` with `(f, g) = sum_y r[y^{-1}] g_y`.
    pub fn gram_row(&self, f: &HeckeElt) -> Vec<Scalar> {
        let top = self.top();
        let n = self.datum.order();
        (0..n)
            .map(|z| {
                let terms: Vec<Scalar> = f
                    .iter()
                    .filter_map(|(x, c)| top[x.index()][z].as_ref().map(|t| c * t))
                    .collect();
                Scalar::sum(&terms)
            })
            .collect()
    }

    /// Pairs a precomputed [`gram_row`](Self::gram_row) with `g`.
    pub fn pair_row(&self, row: &[Scalar], g: &HeckeElt) -> Scalar {
        let terms: Vec<Scalar> = g
            .iter()
            .map(|(y, c)| &row[self.datum.inverse(y).index()] * c)
            .collect();
        Scalar::sum(&terms)
    }

    /// Coefficient of `h_{w0}` in `f g^vee`.
    pub fn inner_product(&self, f: &HeckeElt, g: &HeckeElt) -> Scalar {
        self.pair_row(&self.gram_row(f), g)
    }

    /// Both transition matrices, `P` from the Yang-Baxter expansion and
    /// `Ptilde` by unitriangular back-substitution.
    pub fn transition_tables(&self) -> TransitionTables {
        let d = self.datum;
        let n = d.order();
        let ys = self.yang_baxter_basis();
        let mut p = CoeffTable::new(n);
        for (v, y) in ys.iter().enumerate() {
            for (w, c) in y.iter() {
                p.set(w, WeylElt::from_index(v), c.clone());
            }
        }
        let ptilde = invert_unitriangular(d, &p);
        TransitionTables { p, ptilde }
    }
}

fn combine(a: Vec<(WeylElt, Scalar)>, b: Vec<(WeylElt, Scalar)>) -> HeckeElt {
    if b.is_empty() {
        return HeckeElt { coords: a.into_iter().collect() };
    }
    let mut grouped: BTreeMap<WeylElt, Vec<Scalar>> = BTreeMap::new();
    for (w, c) in a.into_iter().chain(b) {
        grouped.entry(w).or_default().push(c);
    }
    HeckeElt::from_coords(grouped.into_iter().map(|(w, cs)| (w, Scalar::sum(&cs))))
}

/// Inverse of a unitriangular table, column by column in element order:
/// `x(z,v) = delta(z,v) - sum_{z <= w < v} t(w,v) x(z,w)`.
pub fn invert_unitriangular(datum: &RootDatum, t: &CoeffTable) -> CoeffTable {
    let n = datum.order();
    let mut inv = CoeffTable::new(n);
    for v in datum.elements() {
        let column: Vec<(WeylElt, Scalar)> = t.column(v).filter(|(w, _)| *w != v).map(|(w, c)| (w, c.clone())).collect();
        let rows: Vec<WeylElt> = datum.elements().take(v.index()).collect();
        let values: Vec<(WeylElt, Scalar)> = rows
            .par_iter()
            .map(|&z| {
                let terms: Vec<Scalar> = column
                    .iter()
                    .filter_map(|(w, c)| inv.get(z, *w).map(|x| -(c * x)))
                    .collect();
                (z, Scalar::sum(&terms))
            })
            .collect();
        for (z, x) in values {
            inv.set(z, v, x);
        }
        inv.set(v, v, Scalar::one());
    }
    inv
}

/// `P` and `Ptilde`, indexed `(w, v)`.
#[derive(Clone, Debug)]
pub struct TransitionTables {
    pub p: CoeffTable,
    pub ptilde: CoeffTable,
}

#[cfg(test)]
mod tests;
