use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

/// Largest root-datum rank the scalar layer can represent.
pub const MAX_RANK: usize = 8;

pub(crate) const T1: usize = MAX_RANK;
pub(crate) const T2: usize = MAX_RANK + 1;
pub(crate) const U: usize = MAX_RANK + 2;
const NVARS: usize = MAX_RANK + 3;

/// A Laurent monomial `x1^a1 ... x8^a8 * t1^b1 * t2^b2 * u^c`.
///
/// The `x` variables are `e^{omega_i}` for the fundamental weights, so the
/// weight part of a monomial is a weight written in the fundamental-weight
/// basis. `t1`, `t2` are the Hecke parameters and `u` stands for `q^{-1}`.
///
/// Ordering is lexicographic on the weight part, then lexicographic on the
/// parameters read as `(u, t2, t1)` (so `t1 + t2` and `1 - u` print in the
/// natural order). It is a total order compatible with multiplication.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial([i32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn from_weight(weight: &[i32]) -> Self {
        assert!(weight.len() <= MAX_RANK, "weight rank exceeds {MAX_RANK}");
        let mut e = [0; NVARS];
        e[..weight.len()].copy_from_slice(weight);
        Monomial(e)
    }

    pub(crate) fn var(index: usize, power: i32) -> Self {
        let mut e = [0; NVARS];
        e[index] = power;
        Monomial(e)
    }

    pub fn t1() -> Self {
        Self::var(T1, 1)
    }

    pub fn t2() -> Self {
        Self::var(T2, 1)
    }

    pub fn u() -> Self {
        Self::var(U, 1)
    }

    pub fn exponent(&self, index: usize) -> i32 {
        self.0[index]
    }

    pub(crate) fn exponents(&self) -> &[i32; NVARS] {
        &self.0
    }

    pub(crate) fn from_exponents(e: [i32; NVARS]) -> Self {
        Monomial(e)
    }

    pub fn weight(&self) -> &[i32] {
        &self.0[..MAX_RANK]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when no weight variable occurs.
    pub fn is_weight_free(&self) -> bool {
        self.weight().iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(e)
    }

    pub fn div(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a -= *b;
        }
        Monomial(e)
    }

    pub fn inv(&self) -> Self {
        let mut e = self.0;
        for a in e.iter_mut() {
            *a = -*a;
        }
        Monomial(e)
    }

    pub fn pow(&self, k: i32) -> Self {
        let mut e = self.0;
        for a in e.iter_mut() {
            *a *= k;
        }
        Monomial(e)
    }

    pub(crate) fn componentwise_min(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(e)
    }

    pub(crate) fn componentwise_max(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        Monomial(e)
    }

    /// Gcd of all exponents (0 for the unit monomial).
    pub(crate) fn exponent_gcd(&self) -> i32 {
        self.0.iter().fold(0i32, |g, &e| g.gcd(&e))
    }

    /// Replace the weight part `x` by `matrix * x`, `matrix` being `rank x rank`
    /// in row-major order.
    pub fn act_on_weight(&self, matrix: &[i32], rank: usize) -> Self {
        let mut e = self.0;
        for i in 0..rank {
            let row = &matrix[i * rank..(i + 1) * rank];
            e[i] = row.iter().zip(&self.0[..rank]).map(|(m, x)| m * x).sum();
        }
        Monomial(e)
    }

    pub fn negate_weight(&self) -> Self {
        let mut e = self.0;
        for a in e[..MAX_RANK].iter_mut() {
            *a = -*a;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0[..MAX_RANK]
            .cmp(&other.0[..MAX_RANK])
            .then_with(|| self.0[MAX_RANK..].iter().rev().cmp(other.0[MAX_RANK..].iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer coefficient overflow")
}

pub(crate) fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer coefficient overflow")
}

/// Integer Laurent polynomial in the weight variables and the parameters
/// `t1`, `t2`, `u`. Terms are kept sorted by [`Monomial`] order with no zero
/// coefficients, so equal polynomials are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, i128)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: i128) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, i128)>) -> Self {
        let mut v: Vec<(Monomial, i128)> = terms.into_iter().collect();
        v.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Monomial, i128)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = checked_add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        LaurentPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, i128)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Returns the constant value if the polynomial is an integer.
    pub fn as_constant(&self) -> Option<i128> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, i128)> {
        self.terms.last()
    }

    pub fn first(&self) -> Option<&(Monomial, i128)> {
        self.terms.first()
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|&(m, c)| (m, -c)).collect(),
        }
    }

    pub fn scale(&self, k: i128) -> Self {
        if k == 0 {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|&(m, c)| (m, checked_mul(c, k))).collect(),
        }
    }

    /// Divides every coefficient by `k`, which must divide them exactly.
    pub(crate) fn div_int(&self, k: i128) -> Self {
        debug_assert!(self.terms.iter().all(|t| t.1 % k == 0));
        LaurentPoly {
            terms: self.terms.iter().map(|&(m, c)| (m, c / k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        // multiplication by a monomial preserves the order
        LaurentPoly {
            terms: self.terms.iter().map(|&(n, c)| (n.mul(m), c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = checked_add(a[i].1, b[j].1);
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms[0];
            return self.mul_monomial(&m).scale(c);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms[0];
            return other.mul_monomial(&m).scale(c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(m, c) in &self.terms {
            for &(n, d) in &other.terms {
                prods.push((m.mul(&n), checked_mul(c, d)));
            }
        }
        Self::from_terms(prods)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Gcd of the coefficients (0 for the zero polynomial), always nonnegative.
    pub fn content(&self) -> i128 {
        self.terms.iter().fold(0i128, |g, t| g.gcd(&t.1))
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        let first = it.next().map(|t| t.0).unwrap_or(Monomial::ONE);
        it.fold(first, |acc, t| acc.componentwise_min(&t.0))
    }

    pub fn max_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        let first = it.next().map(|t| t.0).unwrap_or(Monomial::ONE);
        it.fold(first, |acc, t| acc.componentwise_max(&t.0))
    }

    /// Applies a monomial map that is injective on the support (a lattice
    /// automorphism, a sign flip, ...), with a sign attached to each image.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> (Monomial, i128)) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let (n, s) = f(m);
            (n, checked_mul(*c, s))
        }))
    }

    /// Exact division in the Laurent ring. Returns `None` when `divisor` does
    /// not divide `self`.
    ///
    /// Runs the division algorithm on leading terms; termination for
    /// non-divisible inputs comes from the exponent box that any quotient
    /// must lie in (Newton polytopes add under multiplication).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.terms.len() == 1 {
            let (m, c) = divisor.terms[0];
            if self.terms.iter().any(|t| t.1 % c != 0) {
                return None;
            }
            let inv = m.inv();
            return Some(LaurentPoly {
                terms: self.terms.iter().map(|&(n, d)| (n.mul(&inv), d / c)).collect(),
            });
        }
        let lo = self.min_monomial().div(&divisor.min_monomial());
        let hi = self.max_monomial().div(&divisor.max_monomial());
        if lo.exponents().iter().zip(hi.exponents()).any(|(l, h)| l > h) {
            return None;
        }
        let (dm, dc) = *divisor.leading().unwrap();
        let mut rem: BTreeMap<Monomial, i128> = self.terms.iter().copied().collect();
        let mut quotient = Vec::new();
        while let Some((&m, &c)) = rem.last_key_value() {
            if c % dc != 0 {
                return None;
            }
            let qm = m.div(&dm);
            let inside = qm
                .exponents()
                .iter()
                .zip(lo.exponents().iter().zip(hi.exponents()))
                .all(|(q, (l, h))| l <= q && q <= h);
            if !inside {
                return None;
            }
            let qc = c / dc;
            for &(gm, gc) in &divisor.terms {
                let key = gm.mul(&qm);
                let delta = checked_mul(qc, gc);
                let entry = rem.entry(key).or_insert(0);
                *entry -= delta;
                if *entry == 0 {
                    rem.remove(&key);
                }
            }
            quotient.push((qm, qc));
        }
        quotient.reverse();
        Some(LaurentPoly { terms: quotient })
    }

    pub(crate) fn fmt_grouped(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.len() > 1 {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

fn fmt_monomial(m: &Monomial, f: &mut fmt::Formatter<'_>) -> Result<bool, fmt::Error> {
    let mut first = true;
    let mut var = |f: &mut fmt::Formatter<'_>, name: &str, e: i32| -> fmt::Result {
        if e == 0 {
            return Ok(());
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")
        } else {
            write!(f, "{name}^{e}")
        }
    };
    var(f, "t1", m.0[T1])?;
    var(f, "t2", m.0[T2])?;
    var(f, "u", m.0[U])?;
    for i in 0..MAX_RANK {
        var(f, &format!("x{}", i + 1), m.0[i])?;
    }
    Ok(!first)
}

impl LaurentPoly {
    /// LaTeX rendering with `t_1, t_2, u, x_i` variables.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if *c < 0 { " - " } else { " + " });
            }
            if m.is_one() || mag != 1 {
                out.push_str(&mag.to_string());
            }
            let mut names: Vec<(String, i32)> =
                vec![("t_1".into(), m.0[T1]), ("t_2".into(), m.0[T2]), ("u".into(), m.0[U])];
            names.extend((0..MAX_RANK).map(|i| (format!("x_{{{}}}", i + 1), m.0[i])));
            for (name, e) in names {
                match e {
                    0 => {}
                    1 => out.push_str(&name),
                    _ => out.push_str(&format!("{name}^{{{e}}}")),
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if *c < 0 {
                    f.write_str("-")?;
                }
            } else if *c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
