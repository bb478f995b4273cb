//! The transition coefficients computed purely from two-term recurrences in
//! the length of `v`, starting from `p(w, e) = ptilde(w, e) = delta(w, e)`.
//!
//! Left recurrences peel the first letter `v = s v'`, right recurrences the
//! last letter `v = v' s`:
//!
//! * `p(w, s v') = c s[p(w, v')] - t1 t2 s[p(sw, v')]` if `sw > w`, and
//!   `(t1+t2)(1/E(alpha_s) + 1) s[p(w, v')] + s[p(sw, v')]` if `sw < w`,
//!   with `c = (t1+t2)/E(alpha_s)`;
//! * `p(w, v' s) = c' p(w, v') - t1 t2 p(ws, v')` if `ws > w`, and
//!   `(t1+t2)(1/E(v' alpha_s) + 1) p(w, v') + p(ws, v')` if `ws < w`,
//!   with `c' = (t1+t2)/E(v' alpha_s)`;
//! * `ptilde(w, s v') = B_s ptilde(w, v') + K s[ptilde(sw, v')]`;
//! * `ptilde(w, v' s) = w[B_s] ptilde(w, v') + w[K] ptilde(ws, v')`;
//!
//! where `K = 1` if the neighbour (`sw` resp. `ws`) is shorter than `w`, and
//! `K = A_s A_{-s} = (t2 - B_s)(t2 - B_{-s})` otherwise.

use std::collections::HashMap;

use crate::rootdata::{RootDatum, WeylElt};
use crate::scalars::Scalar;

use super::CoeffTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    P,
    Ptilde,
}

/// Values substituted for the Hecke parameters.
#[derive(Clone, Debug)]
pub struct Params {
    pub t1: Scalar,
    pub t2: Scalar,
}

impl Params {
    pub fn generic() -> Self {
        Params { t1: Scalar::t1(), t2: Scalar::t2() }
    }

    /// `t1 = -q^{-1}`, `t2 = 1`.
    pub fn casselman() -> Self {
        Params { t1: -Scalar::u(), t2: Scalar::one() }
    }
}

struct Recurrence<'d> {
    datum: &'d RootDatum,
    side: Side,
    kind: Kind,
    tsum: Scalar,
    tprod: Scalar,
    params: Params,
    memo: HashMap<(WeylElt, WeylElt), Scalar>,
}

fn neg(beta: &[i32]) -> Vec<i32> {
    beta.iter().map(|c| -c).collect()
}

impl<'d> Recurrence<'d> {
    fn new(datum: &'d RootDatum, side: Side, kind: Kind, params: Params) -> Self {
        Recurrence {
            datum,
            side,
            kind,
            tsum: &params.t1 + &params.t2,
            tprod: &params.t1 * &params.t2,
            params,
            memo: HashMap::new(),
        }
    }

    /// `A_beta = (t1 + t2 e^{-beta}) / (1 - e^beta)`.
    fn a_coeff(&self, beta: &[i32]) -> Scalar {
        let num = &self.params.t1 + &(&self.params.t2 * &Scalar::exp(&neg(beta)));
        num.div(&(Scalar::one() - Scalar::exp(beta))).expect("beta is nonzero")
    }

    /// `B_beta = (t1 + t2) / (1 - e^{-beta})`.
    fn b_coeff(&self, beta: &[i32]) -> Scalar {
        self.tsum.div(&(Scalar::one() - Scalar::exp(&neg(beta)))).expect("beta is nonzero")
    }

    /// `A_beta A_{-beta}`.
    fn a_pair(&self, beta: &[i32]) -> Scalar {
        self.a_coeff(beta) * self.a_coeff(&neg(beta))
    }

    fn get(&mut self, w: WeylElt, v: WeylElt) -> Scalar {
        let d = self.datum;
        if !d.bruhat_leq(w, v) {
            return Scalar::zero();
        }
        if v == WeylElt::IDENTITY {
            return Scalar::one();
        }
        if let Some(x) = self.memo.get(&(w, v)) {
            return x.clone();
        }
        let x = match (self.kind, self.side) {
            (Kind::P, Side::Left) => self.p_left(w, v),
            (Kind::P, Side::Right) => self.p_right(w, v),
            (Kind::Ptilde, Side::Left) => self.ptilde_left(w, v),
            (Kind::Ptilde, Side::Right) => self.ptilde_right(w, v),
        };
        self.memo.insert((w, v), x.clone());
        x
    }

    fn p_left(&mut self, w: WeylElt, v: WeylElt) -> Scalar {
        let d = self.datum;
        let s = d.word(v)[0];
        let vp = d.left_mul_simple(s, v);
        let sw = d.left_mul_simple(s, w);
        let sg = d.simple(s);
        let inv_e = Scalar::e_fn_inv(d.simple_root(s)).expect("simple roots are nonzero");
        let a = d.act(sg, &self.get(w, vp));
        let b = d.act(sg, &self.get(sw, vp));
        if d.length(sw) > d.length(w) {
            &self.tsum * &inv_e * a - &self.tprod * b
        } else {
            &self.tsum * &(inv_e + Scalar::one()) * a + b
        }
    }

    fn p_right(&mut self, w: WeylElt, v: WeylElt) -> Scalar {
        let d = self.datum;
        let s = *d.word(v).last().unwrap();
        let vp = d.right_mul_simple(v, s);
        let ws = d.right_mul_simple(w, s);
        let beta = d.act_weight(vp, d.simple_root(s));
        let inv_e = Scalar::e_fn_inv(&beta).expect("roots are nonzero");
        let a = self.get(w, vp);
        let b = self.get(ws, vp);
        if d.length(ws) > d.length(w) {
            &self.tsum * &inv_e * a - &self.tprod * b
        } else {
            &self.tsum * &(inv_e + Scalar::one()) * a + b
        }
    }

    fn ptilde_left(&mut self, w: WeylElt, v: WeylElt) -> Scalar {
        let d = self.datum;
        let s = d.word(v)[0];
        let vp = d.left_mul_simple(s, v);
        let sw = d.left_mul_simple(s, w);
        let alpha = d.simple_root(s).to_vec();
        let first = self.b_coeff(&alpha) * self.get(w, vp);
        let second = d.act(d.simple(s), &self.get(sw, vp));
        if d.length(sw) < d.length(w) {
            first + second
        } else {
            first + self.a_pair(&alpha) * second
        }
    }

    fn ptilde_right(&mut self, w: WeylElt, v: WeylElt) -> Scalar {
        let d = self.datum;
        let s = *d.word(v).last().unwrap();
        let vp = d.right_mul_simple(v, s);
        let ws = d.right_mul_simple(w, s);
        let beta = d.act_weight(w, d.simple_root(s));
        let first = self.b_coeff(&beta) * self.get(w, vp);
        let second = self.get(ws, vp);
        if d.length(ws) < d.length(w) {
            first + second
        } else {
            first + self.a_pair(&beta) * second
        }
    }
}

fn table(datum: &RootDatum, side: Side, kind: Kind, params: Params) -> CoeffTable {
    let mut rec = Recurrence::new(datum, side, kind, params);
    let mut out = CoeffTable::new(datum.order());
    for v in datum.elements() {
        for w in datum.elements() {
            out.set(w, v, rec.get(w, v));
        }
    }
    out
}

/// `p(w, v)` from the recurrence on the given side.
pub fn recurrence_p(datum: &RootDatum, w: WeylElt, v: WeylElt, side: Side) -> Scalar {
    Recurrence::new(datum, side, Kind::P, Params::generic()).get(w, v)
}

/// `ptilde(w, v)` from the recurrence on the given side.
pub fn recurrence_ptilde(datum: &RootDatum, w: WeylElt, v: WeylElt, side: Side) -> Scalar {
    Recurrence::new(datum, side, Kind::Ptilde, Params::generic()).get(w, v)
}

pub fn p_recurrence_table(datum: &RootDatum, side: Side) -> CoeffTable {
    table(datum, side, Kind::P, Params::generic())
}

pub fn ptilde_recurrence_table(datum: &RootDatum, side: Side) -> CoeffTable {
    table(datum, side, Kind::Ptilde, Params::generic())
}

/// The `p` recurrence with the parameters replaced by the given values.
pub fn p_recurrence_table_at(datum: &RootDatum, side: Side, params: Params) -> CoeffTable {
    table(datum, side, Kind::P, params)
}

/// The `ptilde` recurrence with the parameters replaced by the given values.
pub fn ptilde_recurrence_table_at(datum: &RootDatum, side: Side, params: Params) -> CoeffTable {
    table(datum, side, Kind::Ptilde, params)
}
