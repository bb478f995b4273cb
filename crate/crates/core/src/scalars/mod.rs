//! Exact arithmetic in the coefficient field.
//!
//! A [`Scalar`] is an element of the fraction field of
//! `Z[t1^±, t2^±, u^±][Λ]`, written as
//!
//! ```text
//! numerator / (integer * f_1^k_1 * ... * f_n^k_n)
//! ```
//!
//! with the `f_i` canonical denominator factors (see the `factor` module).
//! There is no multivariate gcd: cancellation is done by exact trial
//! division of the numerator by each denominator factor. Every denominator
//! that occurs in Hecke-algebra computations is a product of binomials
//! `1 - e^mu` and `t1 + t2 e^{-beta}` (or their specializations), which the
//! factor normalization keeps irreducible, so trial division is complete for
//! them and reduced forms are unique.

mod factor;
mod poly;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
pub use poly::{LaurentPoly, Monomial, MAX_RANK};
use poly::{checked_mul, T1, T2, U};

#[derive(Clone, Default)]
pub struct Scalar {
    num: LaurentPoly,
    /// Positive integer part of the denominator.
    den_int: i128,
    /// Canonical factors with multiplicities, sorted by factor.
    den: Vec<(LaurentPoly, u32)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: LaurentPoly::zero(), den_int: 1, den: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i128) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar { num: p, den_int: 1, den: Vec::new() }
    }

    pub fn monomial(m: Monomial, c: i128) -> Self {
        Self::from_poly(LaurentPoly::term(m, c))
    }

    pub fn t1() -> Self {
        Self::monomial(Monomial::t1(), 1)
    }

    pub fn t2() -> Self {
        Self::monomial(Monomial::t2(), 1)
    }

    /// The formal variable standing for `q^{-1}`.
    pub fn u() -> Self {
        Self::monomial(Monomial::u(), 1)
    }

    /// `e^lambda` for a weight in fundamental-weight coordinates.
    pub fn exp(weight: &[i32]) -> Self {
        Self::monomial(Monomial::from_weight(weight), 1)
    }

    /// `E(lambda) = e^{-lambda} - 1`.
    pub fn e_fn(weight: &[i32]) -> Self {
        let neg: Vec<i32> = weight.iter().map(|c| -c).collect();
        Self::from_poly(LaurentPoly::term(Monomial::from_weight(&neg), 1).sub(&LaurentPoly::one()))
    }

    /// `1 / E(lambda)`, rejecting `lambda = 0`.
    pub fn e_fn_inv(weight: &[i32]) -> Result<Self> {
        Self::e_fn(weight).invert()
    }

    /// Assembles `num / (den_int * prod f^k)` for arbitrary (non-canonical)
    /// factor polynomials and reduces the result.
    pub fn from_parts(
        num: LaurentPoly,
        den_int: i128,
        factors: impl IntoIterator<Item = (LaurentPoly, u32)>,
    ) -> Result<Self> {
        if den_int == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut num = num;
        let mut den_int = den_int;
        let mut den: BTreeMap<LaurentPoly, u32> = BTreeMap::new();
        for (f, k) in factors {
            if k == 0 {
                continue;
            }
            if f.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let n = factor::normalize(&f);
            for _ in 0..k {
                num = num.mul_monomial(&n.mono.inv());
                if n.coeff < 0 {
                    num = num.neg();
                }
                den_int = checked_mul(den_int, n.coeff.abs());
            }
            for g in n.factors {
                *den.entry(g).or_insert(0) += k;
            }
        }
        if den_int < 0 {
            den_int = -den_int;
            num = num.neg();
        }
        let mut s = Scalar { num, den_int, den: den.into_iter().collect() };
        s.reduce(None);
        Ok(s)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn integer_denominator(&self) -> i128 {
        self.den_int
    }

    pub fn denominator_factors(&self) -> &[(LaurentPoly, u32)] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.den_int == 1 && self.num.is_one()
    }

    /// True iff the reduced form has no polynomial denominator factor.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Divides out every candidate factor that divides the numerator, then
    /// the integer gcd. `None` means all factors are candidates.
    fn reduce(&mut self, candidates: Option<&[bool]>) {
        if self.num.is_zero() {
            *self = Scalar::zero();
            return;
        }
        for (idx, (f, k)) in self.den.iter_mut().enumerate() {
            if candidates.is_some_and(|c| !c[idx]) {
                continue;
            }
            while *k > 0 {
                match self.num.div_exact(f) {
                    Some(q) => {
                        self.num = q;
                        *k -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, k)| *k > 0);
        self.reduce_integer();
    }

    fn reduce_integer(&mut self) {
        if self.den_int != 1 {
            let g = self.num.content().gcd(&self.den_int);
            if g > 1 {
                self.num = self.num.div_int(g);
                self.den_int /= g;
            }
        }
    }

    pub fn neg(&self) -> Self {
        Scalar { num: self.num.neg(), den_int: self.den_int, den: self.den.clone() }
    }

    fn add_impl(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.den, &other.den);
        let mut lcm = Vec::with_capacity(a.len() + b.len());
        let mut candidates = Vec::with_capacity(a.len() + b.len());
        let mut mult_a = LaurentPoly::one();
        let mut mult_b = LaurentPoly::one();
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    mult_b = mult_b.mul(&a[i].0.pow(a[i].1));
                    lcm.push(a[i].clone());
                    candidates.push(false);
                    i += 1;
                }
                Ordering::Greater => {
                    mult_a = mult_a.mul(&b[j].0.pow(b[j].1));
                    lcm.push(b[j].clone());
                    candidates.push(false);
                    j += 1;
                }
                Ordering::Equal => {
                    let (ka, kb) = (a[i].1, b[j].1);
                    match ka.cmp(&kb) {
                        Ordering::Greater => mult_b = mult_b.mul(&a[i].0.pow(ka - kb)),
                        Ordering::Less => mult_a = mult_a.mul(&a[i].0.pow(kb - ka)),
                        Ordering::Equal => {}
                    }
                    lcm.push((a[i].0.clone(), ka.max(kb)));
                    candidates.push(ka == kb);
                    i += 1;
                    j += 1;
                }
            }
        }
        let d = self.den_int.lcm(&other.den_int);
        let na = self.num.mul(&mult_a).scale(d / self.den_int);
        let nb = other.num.mul(&mult_b).scale(d / other.den_int);
        let mut s = Scalar { num: na.add(&nb), den_int: d, den: lcm };
        s.reduce(Some(&candidates));
        s
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        let mut an = self.num.clone();
        let mut bn = other.num.clone();
        let mut aden = self.den.clone();
        let mut bden = other.den.clone();
        cancel_into(&mut an, &mut bden);
        cancel_into(&mut bn, &mut aden);
        let mut den: BTreeMap<LaurentPoly, u32> = BTreeMap::new();
        for (f, k) in aden.into_iter().chain(bden) {
            if k > 0 {
                *den.entry(f).or_insert(0) += k;
            }
        }
        let mut s = Scalar {
            num: an.mul(&bn),
            den_int: checked_mul(self.den_int, other.den_int),
            den: den.into_iter().collect(),
        };
        s.reduce_integer();
        s
    }

    /// Sum of many scalars over a single common denominator.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Scalar>) -> Scalar {
        let items: Vec<&Scalar> = items.into_iter().filter(|s| !s.is_zero()).collect();
        match items.len() {
            0 => return Scalar::zero(),
            1 => return items[0].clone(),
            2 => return items[0].add_impl(items[1]),
            _ => {}
        }
        let mut lcm: BTreeMap<&LaurentPoly, u32> = BTreeMap::new();
        let mut d = 1i128;
        for s in &items {
            d = d.lcm(&s.den_int);
            for (f, k) in &s.den {
                let e = lcm.entry(f).or_insert(0);
                *e = (*e).max(*k);
            }
        }
        let mut num = LaurentPoly::zero();
        for s in &items {
            let mut term = s.num.scale(d / s.den_int);
            let own: BTreeMap<&LaurentPoly, u32> = s.den.iter().map(|(f, k)| (f, *k)).collect();
            for (f, k) in &lcm {
                let have = own.get(f).copied().unwrap_or(0);
                if *k > have {
                    term = term.mul(&f.pow(*k - have));
                }
            }
            num = num.add(&term);
        }
        let mut s = Scalar {
            num,
            den_int: d,
            den: lcm.into_iter().map(|(f, k)| (f.clone(), k)).collect(),
        };
        s.reduce(None);
        s
    }

    pub fn invert(&self) -> Result<Self> {
        self.invert_with_hints(&[])
    }

    /// Inverse, splitting the old numerator by trial division against the
    /// given factors before it joins the denominator.
    pub fn invert_with_hints(&self, hints: &[LaurentPoly]) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut new_num = LaurentPoly::constant(self.den_int);
        for (f, k) in &self.den {
            new_num = new_num.mul(&f.pow(*k));
        }
        let mut rest = self.num.clone();
        let mut pieces = Vec::new();
        for h in hints {
            let mut k = 0;
            while !h.is_monomial() {
                match rest.div_exact(h) {
                    Some(q) => {
                        rest = q;
                        k += 1;
                    }
                    None => break,
                }
            }
            if k > 0 {
                pieces.push((h.clone(), k));
            }
        }
        pieces.push((rest, 1));
        Scalar::from_parts(new_num, 1, pieces)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.invert()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Rebuilds the scalar after transforming numerator and each factor.
    /// `f` returns `(p, m)` meaning the transformed polynomial equals `p / m`.
    fn map_polys(&self, f: impl Fn(&LaurentPoly) -> (LaurentPoly, i128)) -> Result<Self> {
        let (num, m) = f(&self.num);
        let mut num = num;
        let mut factors = Vec::with_capacity(self.den.len());
        for (g, k) in &self.den {
            let (p, mg) = f(g);
            if p.is_zero() {
                return Err(Error::VanishingDenominator(g.to_string()));
            }
            num = num.scale(mg.pow(*k));
            factors.push((p, *k));
        }
        Scalar::from_parts(num, checked_mul(self.den_int, m), factors)
    }

    /// Applies a lattice automorphism (row-major `rank x rank` integer
    /// matrix) to every exponent.
    pub fn act_matrix(&self, matrix: &[i32], rank: usize) -> Self {
        self.map_polys(|p| (p.map_monomials(|m| (m.act_on_weight(matrix, rank), 1)), 1))
            .expect("lattice automorphisms cannot annihilate a factor")
    }

    /// `e^lambda -> e^{-lambda}`.
    pub fn star(&self) -> Self {
        self.map_polys(|p| (p.map_monomials(|m| (m.negate_weight(), 1)), 1))
            .expect("star cannot annihilate a factor")
    }

    /// `t1 -> -t2`, `t2 -> -t1`.
    pub fn hat(&self) -> Self {
        self.map_polys(|p| {
            let q = p.map_monomials(|m| {
                let mut e = *m.exponents();
                let (a, b) = (e[T1], e[T2]);
                e[T1] = b;
                e[T2] = a;
                let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
                (Monomial::from_exponents(e), sign)
            });
            (q, 1)
        })
        .expect("hat cannot annihilate a factor")
    }

    /// `t1 -> -u`, `t2 -> 1` with `u` standing for `q^{-1}`.
    pub fn specialize_q(&self) -> Result<Self> {
        self.map_polys(|p| {
            let q = p.map_monomials(|m| {
                let mut e = *m.exponents();
                let a = e[T1];
                e[U] += a;
                e[T1] = 0;
                e[T2] = 0;
                let sign = if a % 2 == 0 { 1 } else { -1 };
                (Monomial::from_exponents(e), sign)
            });
            (q, 1)
        })
    }

    /// Substitutes signed monomials for the Hecke parameters:
    /// `t1 -> s1 * m1`, `t2 -> s2 * m2` (each sign is `1` or `-1`).
    pub fn substitute_params(&self, t1: (i128, Monomial), t2: (i128, Monomial)) -> Result<Self> {
        self.map_polys(|p| {
            let q = p.map_monomials(|m| {
                let mut e = *m.exponents();
                let (a, b) = (e[T1], e[T2]);
                e[T1] = 0;
                e[T2] = 0;
                let image = Monomial::from_exponents(e).mul(&t1.1.pow(a)).mul(&t2.1.pow(b));
                let sign = t1.0.pow(a.unsigned_abs()) * t2.0.pow(b.unsigned_abs());
                (image, sign)
            });
            (q, 1)
        })
    }

    /// Substitutes the exact rational `u = r / s`.
    pub fn evaluate_u(&self, r: i128, s: i128) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::DivisionByZero);
        }
        self.map_polys(|p| {
            let (kmin, kmax) = p
                .terms()
                .iter()
                .map(|t| t.0.exponent(U))
                .fold((0, 0), |(lo, hi), k| (lo.min(k), hi.max(k)));
            let a = kmax.max(0);
            let b = (-kmin).max(0);
            let q = LaurentPoly::from_terms(p.terms().iter().map(|(m, c)| {
                let k = m.exponent(U);
                let mut e = *m.exponents();
                e[U] = 0;
                let coeff = checked_mul(
                    *c,
                    checked_mul(r.pow((k + b) as u32), s.pow((a - k) as u32)),
                );
                (Monomial::from_exponents(e), coeff)
            }));
            (q, checked_mul(s.pow(a as u32), r.pow(b as u32)))
        })
    }

    /// LaTeX rendering as a single `\frac` (or a bare polynomial).
    pub fn to_latex(&self) -> String {
        if self.den.is_empty() && self.den_int == 1 {
            return self.num.to_latex();
        }
        let mut den: Vec<String> = Vec::new();
        if self.den_int != 1 {
            den.push(self.den_int.to_string());
        }
        for (g, k) in &self.den {
            let base = format!("({})", g.to_latex());
            den.push(if *k > 1 { format!("{base}^{{{k}}}") } else { base });
        }
        format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), den.join(""))
    }

    /// Canonical text form, also used for JSON output.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

/// Divides `num` by the factors of `den` as far as possible, decrementing
/// multiplicities.
fn cancel_into(num: &mut LaurentPoly, den: &mut [(LaurentPoly, u32)]) {
    for (f, k) in den.iter_mut() {
        while *k > 0 {
            match num.div_exact(f) {
                Some(q) => {
                    *num = q;
                    *k -= 1;
                }
                None => break,
            }
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den_int == other.den_int && self.den == other.den {
            return true;
        }
        (self - other).is_zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() && self.den_int == 1 {
            return write!(f, "{}", self.num);
        }
        self.num.fmt_grouped(f)?;
        f.write_str(" / ")?;
        let pieces = self.den.len() + usize::from(self.den_int != 1);
        if pieces > 1 {
            f.write_str("[")?;
        }
        let mut first = true;
        if self.den_int != 1 {
            write!(f, "{}", self.den_int)?;
            first = false;
        }
        for (g, k) in &self.den {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "({g})")?;
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if pieces > 1 {
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_impl(b));
forward_binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_impl(&b.neg()));
forward_binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_impl(b));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs);
    }
}

impl From<i128> for Scalar {
    fn from(c: i128) -> Self {
        Scalar::from_int(c)
    }
}

#[cfg(test)]
mod tests;
