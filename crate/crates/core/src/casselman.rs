//! The specialization `t1 = -q^{-1}`, `t2 = 1` (with `u = q^{-1}`): the
//! Casselman coefficients `a = ptilde|`, `b = p|`, their sum identities, the
//! Bump-Nakasuji coefficients `m`, `mtilde` with the factorization checker,
//! and Reeder's Whittaker sum.
//!
//! In the Whittaker sum the modulus prefactor `delta^{1/2}(a)` is omitted
//! and `lambda_a` is realized as the monomial `e^mu`; no dominance condition
//! on `mu` is needed for the sum to be a Laurent polynomial.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{p_recurrence_table_at, CoeffTable, Params, Side, TransitionTables};
use crate::report::CheckResult;
use crate::rootdata::{RootDatum, WeylElt};
use crate::scalars::Scalar;

/// `a` and `b` indexed `(w, v)`.
#[derive(Clone, Debug)]
pub struct CasselmanTables {
    pub a: CoeffTable,
    pub b: CoeffTable,
}

/// Entrywise specialization of both transition tables.
pub fn casselman_tables(t: &TransitionTables) -> Result<CasselmanTables> {
    Ok(CasselmanTables { a: t.ptilde.try_map(Scalar::specialize_q)?, b: t.p.try_map(Scalar::specialize_q)? })
}

/// `(1 - u e^alpha) / (1 - e^alpha)`.
pub fn factor(alpha: &[i32]) -> Scalar {
    (Scalar::one() - Scalar::u() * Scalar::exp(alpha))
        .div(&(Scalar::one() - Scalar::exp(alpha)))
        .expect("alpha is nonzero")
}

/// `(1 - u e^beta) / (1 - e^{-beta})`.
fn whittaker_factor(beta: &[i32]) -> Scalar {
    let neg: Vec<i32> = beta.iter().map(|c| -c).collect();
    (Scalar::one() - Scalar::u() * Scalar::exp(beta)).div(&(Scalar::one() - Scalar::exp(&neg))).expect("beta is nonzero")
}

fn sign(k: usize) -> Scalar {
    Scalar::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SumIdentities {
    /// `sum_{w <= v} b(w,v)`.
    pub lhs1: Scalar,
    /// `prod_{beta in R(v)} (1 - u e^beta)/(1 - e^beta)`.
    pub rhs1: Scalar,
    /// `sum_{w <= v} b(w,v) (-u)^{l(w)}`.
    pub lhs2: Scalar,
    /// `prod_{beta in R(v)} (e^beta - u)/(1 - e^beta)`, the image of `Y_v`
    /// under the character `h_i -> -u`.
    pub rhs2: Scalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConjectureKind {
    /// `m(w,v)` against the product over `S(w,v)`.
    #[serde(rename = "m")]
    M,
    /// `mtilde(w,v)` against the signed product over `S'(w,v)`.
    #[serde(rename = "mtilde")]
    MTilde,
}

/// One qualifying pair of the factorization scan.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureEntry {
    pub kind: ConjectureKind,
    pub w: String,
    pub v: String,
    pub set_size: usize,
    pub length_difference: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub datum: String,
    /// The factorization is only claimed for simply-laced data; other data
    /// are scanned for information.
    pub simply_laced: bool,
    pub pairs_scanned: usize,
    pub entries: Vec<ConjectureEntry>,
    /// Pairs where `S'(w,v) != S(v w0, w w0)`.
    pub bridge_failures: usize,
}

impl ConjectureReport {
    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.pass).count()
    }

    pub fn summary(&self) -> String {
        let count = |k: ConjectureKind| self.entries.iter().filter(|e| e.kind == k).count();
        format!(
            "{}: {} comparable pairs, {} qualifying for m, {} qualifying for mtilde, {} failures, {} set-bridge failures{}",
            self.datum,
            self.pairs_scanned,
            count(ConjectureKind::M),
            count(ConjectureKind::MTilde),
            self.failures(),
            self.bridge_failures,
            if self.simply_laced { "" } else { " (not simply-laced: informational)" }
        )
    }
}

/// The specialized tables of one datum.
pub struct Casselman<'d> {
    datum: &'d RootDatum,
    tables: CasselmanTables,
}

impl<'d> Casselman<'d> {
    pub fn new(datum: &'d RootDatum, t: &TransitionTables) -> Result<Self> {
        Ok(Casselman { datum, tables: casselman_tables(t)? })
    }

    pub fn datum(&self) -> &'d RootDatum {
        self.datum
    }

    pub fn tables(&self) -> &CasselmanTables {
        &self.tables
    }

    pub fn a(&self, w: WeylElt, v: WeylElt) -> Scalar {
        self.tables.a.value(w, v)
    }

    pub fn b(&self, w: WeylElt, v: WeylElt) -> Scalar {
        self.tables.b.value(w, v)
    }

    pub fn sum_identities(&self, v: WeylElt) -> SumIdentities {
        let d = self.datum;
        let column: Vec<(WeylElt, &Scalar)> = self.tables.b.column(v).collect();
        let lhs1 = Scalar::sum(column.iter().map(|(_, c)| *c));
        let weighted: Vec<Scalar> = column
            .iter()
            .map(|(w, c)| *c * &(-Scalar::u()).pow(d.length(*w) as i32).unwrap())
            .collect();
        let lhs2 = Scalar::sum(&weighted);
        let roots = d.inversion_sequence(v);
        let rhs1 = roots.iter().fold(Scalar::one(), |acc, b| acc * factor(b));
        let rhs2 = roots.iter().fold(Scalar::one(), |acc, b| {
            acc * (Scalar::exp(b) - Scalar::u()).div(&(Scalar::one() - Scalar::exp(b))).unwrap()
        });
        SumIdentities { lhs1, rhs1, lhs2, rhs2 }
    }

    fn require_leq(&self, w: WeylElt, v: WeylElt) -> Result<()> {
        if self.datum.bruhat_leq(w, v) {
            Ok(())
        } else {
            Err(Error::NotComparable { w: self.datum.word_string(w), v: self.datum.word_string(v) })
        }
    }

    /// `m(w,v) = sum_{w<=z<=v} b(z,v)`.
    pub fn m(&self, w: WeylElt, v: WeylElt) -> Result<Scalar> {
        self.require_leq(w, v)?;
        let d = self.datum;
        Ok(Scalar::sum(self.tables.b.column(v).filter(|(z, _)| d.bruhat_leq(w, *z)).map(|(_, c)| c)))
    }

    /// `mtilde(w,v) = sum_{w<=z<=v} (-1)^{l(v)-l(z)} a(w,z)`.
    pub fn m_tilde(&self, w: WeylElt, v: WeylElt) -> Result<Scalar> {
        self.require_leq(w, v)?;
        let d = self.datum;
        let terms: Vec<Scalar> = d
            .interval(w, v)
            .into_iter()
            .map(|z| sign(d.length(v) - d.length(z)) * self.a(w, z))
            .collect();
        Ok(Scalar::sum(&terms))
    }

    pub fn bn_m_coeffs(&self, w: WeylElt, v: WeylElt) -> Result<(Scalar, Scalar)> {
        Ok((self.m(w, v)?, self.m_tilde(w, v)?))
    }

    /// `S(w,v) = {alpha > 0 : w <= s_alpha v < v}` and
    /// `S'(w,v) = {alpha > 0 : w < s_alpha w <= v}`, as root indices.
    pub fn s_sets(&self, w: WeylElt, v: WeylElt) -> (BTreeSet<usize>, BTreeSet<usize>) {
        let d = self.datum;
        let mut s = BTreeSet::new();
        let mut s_prime = BTreeSet::new();
        for (k, root) in d.positive_roots().iter().enumerate() {
            let t = root.reflection;
            let tv = d.multiply(t, v);
            if d.length(tv) < d.length(v) && d.bruhat_leq(w, tv) {
                s.insert(k);
            }
            let tw = d.multiply(t, w);
            if d.length(tw) > d.length(w) && d.bruhat_leq(tw, v) {
                s_prime.insert(k);
            }
        }
        (s, s_prime)
    }

    fn product(&self, set: &BTreeSet<usize>) -> Scalar {
        set.iter().fold(Scalar::one(), |acc, &k| acc * factor(&self.datum.positive_roots()[k].weight))
    }

    /// Scans every comparable pair; pairs with `|S| = l(v) - l(w)` (resp.
    /// `|S'|`) are compared with the product formula.
    pub fn conjecture_check(&self) -> ConjectureReport {
        let d = self.datum;
        let w0 = d.longest();
        let pairs: Vec<(WeylElt, WeylElt)> = d
            .elements()
            .flat_map(|v| d.elements().filter(move |&w| d.bruhat_leq(w, v)).map(move |w| (w, v)))
            .collect();
        let scanned: Vec<(Vec<ConjectureEntry>, bool)> = pairs
            .par_iter()
            .map(|&(w, v)| {
                let (s, s_prime) = self.s_sets(w, v);
                let diff = d.length(v) - d.length(w);
                let mut entries = Vec::new();
                let entry = |kind, size, lhs: Scalar, rhs: Scalar| ConjectureEntry {
                    kind,
                    w: d.word_string(w),
                    v: d.word_string(v),
                    set_size: size,
                    length_difference: diff,
                    pass: lhs == rhs,
                    lhs,
                    rhs,
                };
                if s.len() == diff {
                    entries.push(entry(ConjectureKind::M, s.len(), self.m(w, v).unwrap(), self.product(&s)));
                }
                if s_prime.len() == diff {
                    let rhs = sign(diff) * self.product(&s_prime);
                    entries.push(entry(ConjectureKind::MTilde, s_prime.len(), self.m_tilde(w, v).unwrap(), rhs));
                }
                let (mirror, _) = self.s_sets(d.multiply(v, w0), d.multiply(w, w0));
                (entries, mirror == s_prime)
            })
            .collect();
        let bridge_failures = scanned.iter().filter(|(_, ok)| !ok).count();
        ConjectureReport {
            datum: d.label().to_string(),
            simply_laced: d.is_simply_laced(),
            pairs_scanned: pairs.len(),
            entries: scanned.into_iter().flat_map(|(e, _)| e).collect(),
            bridge_failures,
        }
    }

    /// `sum_{y >= w} b(w,y) y[e^mu prod_{beta > 0, y beta > 0} (1 - u e^beta)/(1 - e^{-beta})]`,
    /// evaluated as `y(e^mu) prod_{gamma in R+ \ R(y)} (1 - u e^gamma)/(1 - e^{-gamma})`.
    ///
    /// The roots kept inside the bracket are those `y` sends to positive
    /// roots; with this reading the sum over all `w` is the
    /// Casselman-Shalika expression `prod_{alpha>0} (1 - u e^alpha) chi_mu`.
    /// The result is a Laurent polynomial for every `mu`.
    pub fn whittaker_sum(&self, w: WeylElt, mu: &[i32]) -> Result<Scalar> {
        let d = self.datum;
        if mu.len() != d.rank() {
            return Err(Error::DimensionMismatch { expected: d.rank(), got: mu.len() });
        }
        let terms: Vec<Scalar> = d
            .elements()
            .filter_map(|y| self.tables.b.get(w, y).map(|b| (y, b)))
            .map(|(y, b)| {
                let inv = d.inversion_set(y);
                let monomial = Scalar::exp(&d.act_weight(y, mu));
                let product = d
                    .positive_roots()
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| !inv.contains(k))
                    .fold(monomial, |acc, (_, root)| acc * whittaker_factor(&root.weight));
                b * &product
            })
            .collect();
        Ok(Scalar::sum(&terms))
    }

    /// `sum_w W(w, mu) = prod_{alpha>0} (1 - u e^alpha) sum_y y[e^mu / prod_{alpha>0} (1 - e^{-alpha})]`.
    pub fn casselman_shalika_check(&self, weights: &[Vec<i32>]) -> CheckResult {
        let d = self.datum;
        let mut res = CheckResult::new("sum over w of Whittaker sums = prod (1 - u e^alpha) chi_mu", d.label());
        let roots = d.positive_roots();
        let numerator = roots.iter().fold(Scalar::one(), |acc, r| acc * (Scalar::one() - Scalar::u() * Scalar::exp(&r.weight)));
        let weyl_den = roots.iter().fold(Scalar::one(), |acc, r| {
            let neg: Vec<i32> = r.weight.iter().map(|c| -c).collect();
            acc * (Scalar::one() - Scalar::exp(&neg))
        });
        for mu in weights {
            let base = Scalar::exp(mu).div(&weyl_den).unwrap();
            let chi: Vec<Scalar> = d.elements().map(|y| d.act(y, &base)).collect();
            let expected = &numerator * &Scalar::sum(&chi);
            let sums: Result<Vec<Scalar>> = d.elements().map(|w| self.whittaker_sum(w, mu)).collect();
            let ok = sums.map(|s| Scalar::sum(&s) == expected).unwrap_or(false);
            res.record(ok, || format!("mu={mu:?}"));
        }
        res
    }

    /// Both sum identities for every `v`.
    pub fn sum_identities_check(&self) -> CheckResult {
        let d = self.datum;
        let mut res = CheckResult::new("sum identities for b(w,v)", d.label());
        for v in d.elements() {
            let s = self.sum_identities(v);
            res.record(s.lhs1 == s.rhs1, || format!("unweighted sum, v={}", d.word_string(v)));
            res.record(s.lhs2 == s.rhs2, || format!("(-u)^l(w)-weighted sum, v={}", d.word_string(v)));
        }
        res
    }

    /// `mtilde(w,v) = (-1)^{l(v)-l(w)} m(v w0, w w0)` and
    /// `S'(w,v) = S(v w0, w w0)` for every comparable pair.
    pub fn bridge_check(&self) -> CheckResult {
        let d = self.datum;
        let w0 = d.longest();
        let mut res = CheckResult::new("mtilde(w,v) = sign * m(v w0, w w0) and S'(w,v) = S(v w0, w w0)", d.label());
        let pairs: Vec<(WeylElt, WeylElt)> = d
            .elements()
            .flat_map(|v| d.elements().filter(move |&w| d.bruhat_leq(w, v)).map(move |w| (w, v)))
            .collect();
        let outcomes: Vec<bool> = pairs
            .par_iter()
            .map(|&(w, v)| {
                let (vw0, ww0) = (d.multiply(v, w0), d.multiply(w, w0));
                let k = d.length(v) - d.length(w);
                let coeffs = self.m_tilde(w, v).unwrap() == sign(k) * self.m(vw0, ww0).unwrap();
                coeffs && self.s_sets(w, v).1 == self.s_sets(vw0, ww0).0
            })
            .collect();
        for ((w, v), ok) in pairs.iter().zip(outcomes) {
            res.record(ok, || format!("w={}, v={}", d.word_string(*w), d.word_string(*v)));
        }
        res
    }

    /// `sum_{w<=z<=v} mtilde(w,z) m(z,v) = delta(w,v)`.
    pub fn mobius_check(&self) -> CheckResult {
        let d = self.datum;
        let mut res = CheckResult::new("sum_z mtilde(w,z) m(z,v) = delta", d.label());
        let pairs: Vec<(WeylElt, WeylElt)> = d
            .elements()
            .flat_map(|v| d.elements().filter(move |&w| d.bruhat_leq(w, v)).map(move |w| (w, v)))
            .collect();
        let outcomes: Vec<bool> = pairs
            .par_iter()
            .map(|&(w, v)| {
                let terms: Vec<Scalar> = d
                    .interval(w, v)
                    .into_iter()
                    .map(|z| self.m_tilde(w, z).unwrap() * self.m(z, v).unwrap())
                    .collect();
                let total = Scalar::sum(&terms);
                if w == v {
                    total.is_one()
                } else {
                    total.is_zero()
                }
            })
            .collect();
        for ((w, v), ok) in pairs.iter().zip(outcomes) {
            res.record(ok, || format!("w={}, v={}", d.word_string(*w), d.word_string(*v)));
        }
        res
    }

    /// `a * b = 1` and `b` reproduced by the specialized left recurrence.
    pub fn specialization_check(&self) -> CheckResult {
        let d = self.datum;
        let mut res = CheckResult::new("a b = 1 and b from the specialized recurrence", d.label());
        let reeder = p_recurrence_table_at(d, Side::Left, Params::casselman());
        for v in d.elements() {
            for w in d.elements() {
                let terms: Vec<Scalar> = d.elements().map(|z| self.a(w, z) * self.b(z, v)).collect();
                let product = Scalar::sum(&terms);
                let expected = if w == v { Scalar::one() } else { Scalar::zero() };
                let ok = product == expected && reeder.value(w, v) == self.b(w, v);
                res.record(ok, || format!("w={}, v={}", d.word_string(w), d.word_string(v)));
            }
        }
        res
    }

    /// Whittaker sums for every `w` and every `mu` in the given list.
    pub fn whittaker_polynomiality_check(&self, weights: &[Vec<i32>]) -> CheckResult {
        let d = self.datum;
        let mut res = CheckResult::new("Whittaker sums are Laurent polynomials", d.label());
        for mu in weights {
            for w in d.elements() {
                let ok = self.whittaker_sum(w, mu).map(|s| s.is_laurent_polynomial()).unwrap_or(false);
                res.record(ok, || format!("w={}, mu={mu:?}", d.word_string(w)));
            }
        }
        res
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::HeckeAlgebra;
    use crate::rootdata::CartanType;

    fn build(ty: CartanType, r: usize) -> (RootDatum, TransitionTables) {
        let d = RootDatum::build(ty, r).unwrap();
        let t = HeckeAlgebra::new(&d).transition_tables();
        (d, t)
    }

    #[test]
    fn specialized_values() {
        let (d, t) = build(CartanType::A, 2);
        let c = Casselman::new(&d, &t).unwrap();
        let s1 = d.simple(0);
        let one_minus_u = Scalar::one() - Scalar::u();
        for v in d.elements() {
            assert!(c.a(v, v).is_one() && c.b(v, v).is_one());
        }
        let expected = one_minus_u.div(&(Scalar::exp(&[-2, 1]) - Scalar::one())).unwrap();
        assert_eq!(c.b(WeylElt::IDENTITY, s1), expected);
        let den = (Scalar::one() - Scalar::exp(&[1, -2])) * (Scalar::one() - Scalar::exp(&[-1, -1]));
        assert_eq!(c.a(s1, d.longest()), (&one_minus_u * &one_minus_u).div(&den).unwrap());
    }

    #[test]
    fn rank_one_oracles() {
        let (d, t) = build(CartanType::A, 1);
        let c = Casselman::new(&d, &t).unwrap();
        let s1 = d.simple(0);
        let x = Scalar::exp(&[2]);
        // 1 + (1-u)/(e^{-alpha}-1) = (1 - u e^alpha)/(1 - e^alpha)
        let s = c.sum_identities(s1);
        assert_eq!(s.lhs1, factor(&[2]));
        assert_eq!(s.lhs1, s.rhs1);
        assert_eq!(s.lhs2, s.rhs2);
        let e = c.sum_identities(WeylElt::IDENTITY);
        assert!(e.lhs1.is_one() && e.rhs1.is_one() && e.lhs2.is_one() && e.rhs2.is_one());
        let (m, mt) = c.bn_m_coeffs(WeylElt::IDENTITY, s1).unwrap();
        assert_eq!(m, factor(&[2]));
        assert_eq!(mt, -factor(&[2]));
        let (s, sp) = c.s_sets(WeylElt::IDENTITY, s1);
        assert_eq!((s.len(), sp.len()), (1, 1));
        assert!(matches!(c.m(s1, WeylElt::IDENTITY), Err(Error::NotComparable { .. })));
        // hand-derived: (1 - u x)/(1 - x^{-1}) + (1 - u)/(x^{-1} - 1) = -u x
        assert_eq!(c.whittaker_sum(WeylElt::IDENTITY, &[0]).unwrap(), -(Scalar::u() * x));
        // single-term boundary case
        assert_eq!(c.whittaker_sum(s1, &[3]).unwrap(), Scalar::exp(&[-3]));
    }

    #[test]
    fn a2_suites() {
        let (d, t) = build(CartanType::A, 2);
        let c = Casselman::new(&d, &t).unwrap();
        assert!(c.sum_identities_check().passed());
        assert!(c.bridge_check().passed());
        assert!(c.mobius_check().passed());
        assert!(c.specialization_check().passed());
        let report = c.conjecture_check();
        assert_eq!(report.failures(), 0, "{:?}", report.entries.iter().filter(|e| !e.pass).collect::<Vec<_>>());
        assert_eq!(report.bridge_failures, 0);
        assert_eq!(report.pairs_scanned, 19);
        assert!(report.simply_laced);
        let mut weights = Vec::new();
        for a in -2..=2 {
            for b in -2..=2 {
                weights.push(vec![a, b]);
            }
        }
        assert!(c.whittaker_polynomiality_check(&weights).passed());
        assert!(c.casselman_shalika_check(&[vec![0, 0], vec![1, 1], vec![2, 0], vec![-1, 2]]).passed());
    }
}
