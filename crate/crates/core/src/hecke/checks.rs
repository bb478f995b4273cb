//! Identity suites over a built datum. Each returns a [`CheckResult`]
//! rather than panicking, so the CLI can report every failure.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::CheckResult;
use crate::rootdata::WeylElt;
use crate::scalars::Scalar;

use super::{tsum, CoeffTable, HeckeAlgebra, HeckeElt, TransitionTables};

fn sign(k: usize) -> Scalar {
    Scalar::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

fn delta(a: WeylElt, b: WeylElt) -> Scalar {
    if a == b {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

fn column(t: &CoeffTable, v: WeylElt) -> HeckeElt {
    HeckeElt::from_coords(t.column(v).map(|(w, c)| (w, c.clone())))
}

/// Both sides of the Yang-Baxter relation for `h_i`, `h_j` with spectral
/// parameters `[p, q] = p lambda + q nu`.
pub fn yang_baxter_relations(
    alg: &HeckeAlgebra<'_>,
    i: usize,
    j: usize,
    lambda: &[i32],
    nu: &[i32],
) -> Result<(HeckeElt, HeckeElt)> {
    let d = alg.datum();
    let m = d.coxeter_m(i, j);
    // (generator, p, q) along each side
    let (lhs, rhs): (Vec<(usize, i32, i32)>, Vec<(usize, i32, i32)>) = match m {
        2 => (vec![(i, 1, 0), (j, 0, 1)], vec![(j, 0, 1), (i, 1, 0)]),
        3 => (vec![(i, 1, 0), (j, 1, 1), (i, 0, 1)], vec![(j, 0, 1), (i, 1, 1), (j, 1, 0)]),
        4 => (
            vec![(i, 1, 0), (j, 1, 1), (i, 1, 2), (j, 0, 1)],
            vec![(j, 0, 1), (i, 1, 2), (j, 1, 1), (i, 1, 0)],
        ),
        6 => (
            vec![(i, 1, 0), (j, 1, 1), (i, 2, 3), (j, 1, 2), (i, 1, 3), (j, 0, 1)],
            vec![(j, 0, 1), (i, 1, 3), (j, 1, 2), (i, 2, 3), (j, 1, 1), (i, 1, 0)],
        ),
        _ => {
            return Err(Error::InvalidCartan(format!("no Yang-Baxter relation for m = {m}")));
        }
    };
    let product = |factors: &[(usize, i32, i32)]| -> Result<HeckeElt> {
        let mut acc = HeckeElt::basis(WeylElt::IDENTITY);
        for &(g, p, q) in factors {
            let weight: Vec<i32> = lambda.iter().zip(nu).map(|(l, n)| p * l + q * n).collect();
            acc = alg.mul(&acc, &alg.spectral_generator(g, &weight)?);
        }
        Ok(acc)
    };
    Ok((product(&lhs)?, product(&rhs)?))
}

/// The relation for every pair of generators, with `lambda = omega_i`,
/// `nu = omega_j` and a second, non-dominant pair.
pub fn yang_baxter_relation_check(alg: &HeckeAlgebra<'_>) -> CheckResult {
    let d = alg.datum();
    let r = d.rank();
    let mut res = CheckResult::new("Yang-Baxter relations for h_i(lambda)", d.label());
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..r).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let outcomes: Vec<(String, bool)> = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let weights = [
                (d.fundamental_weight(i), d.fundamental_weight(j)),
                (
                    d.fundamental_weight(i).iter().zip(d.fundamental_weight(j)).map(|(a, b)| 2 * a - b).collect(),
                    d.fundamental_weight(i).iter().zip(d.fundamental_weight(j)).map(|(a, b)| a + 3 * b).collect(),
                ),
            ];
            weights.into_iter().map(move |(lambda, nu): (Vec<i32>, Vec<i32>)| {
                let ok = matches!(yang_baxter_relations(alg, i, j, &lambda, &nu), Ok((a, b)) if a == b);
                let m = d.coxeter_m(i, j);
                (format!("m={m}, i=s{}, j=s{}, lambda={lambda:?}, nu={nu:?}", i + 1, j + 1), ok)
            })
        })
        .collect();
    for (detail, ok) in outcomes {
        res.record(ok, || detail);
    }
    res
}

/// `h_v = sum_w ptilde(w,v) Y_w` re-expanded in the standard basis, and
/// `P * Ptilde = 1`.
pub fn basis_roundtrip_check(alg: &HeckeAlgebra<'_>, t: &TransitionTables) -> CheckResult {
    let d = alg.datum();
    let mut res = CheckResult::new("h_v re-expanded through the Yang-Baxter basis", d.label());
    let ys: Vec<HeckeElt> = d.elements().map(|v| column(&t.p, v)).collect();
    let outcomes: Vec<bool> = d
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&v| {
            let parts: Vec<HeckeElt> = t.ptilde.column(v).map(|(w, c)| ys[w.index()].scale(c)).collect();
            HeckeElt::sum(&parts) == HeckeElt::basis(v)
        })
        .collect();
    for (v, ok) in d.elements().zip(outcomes) {
        res.record(ok, || format!("v={}", d.word_string(v)));
    }
    res
}

/// `ptilde(w,v) = (-1)^{l(v)-l(w)} p(v w0, w w0)` for every pair.
pub fn duality_check(alg: &HeckeAlgebra<'_>, t: &TransitionTables) -> CheckResult {
    let d = alg.datum();
    let w0 = d.longest();
    let mut res = CheckResult::new("duality ptilde(w,v) = sign * p(v w0, w w0)", d.label());
    for v in d.elements() {
        for w in d.elements().filter(|&w| d.bruhat_leq(w, v)) {
            let lhs = t.ptilde.value(w, v);
            let k = d.length(v) - d.length(w);
            let rhs = sign(k) * t.p.value(d.multiply(v, w0), d.multiply(w, w0));
            res.record(lhs == rhs, || format!("w={}, v={}", d.word_string(w), d.word_string(v)));
        }
    }
    res
}

/// `p(w0 w w0, w0 v w0) = star(w0[p(w,v)])` for every pair.
pub fn conjugation_symmetry_check(alg: &HeckeAlgebra<'_>, t: &TransitionTables) -> CheckResult {
    let d = alg.datum();
    let w0 = d.longest();
    let mut res = CheckResult::new("p(w0 w w0, w0 v w0) = star(w0 p(w,v))", d.label());
    for v in d.elements() {
        for w in d.elements() {
            let lhs = t.p.value(d.conjugate_by_longest(w), d.conjugate_by_longest(v));
            let rhs = d.act(w0, &t.p.value(w, v)).star();
            res.record(lhs == rhs, || format!("w={}, v={}", d.word_string(w), d.word_string(v)));
        }
    }
    res
}

/// `Omega(Y_{w0 v w0}) = star(w0(Y_v))`, acting on coefficients only.
pub fn omega_check(alg: &HeckeAlgebra<'_>, t: &TransitionTables) -> CheckResult {
    let d = alg.datum();
    let w0 = d.longest();
    let mut res = CheckResult::new("Omega(Y_{w0 v w0}) = star(w0 Y_v)", d.label());
    for v in d.elements() {
        let lhs = alg.omega(&column(&t.p, d.conjugate_by_longest(v)));
        let rhs = alg.star(&alg.act(w0, &column(&t.p, v)));
        res.record(lhs == rhs, || format!("v={}", d.word_string(v)));
    }
    res
}

/// `(h_v, hat h_{w0 w}) = delta(v, w)` for all pairs.
pub fn orthogonality_h_check(alg: &HeckeAlgebra<'_>) -> CheckResult {
    let d = alg.datum();
    let w0 = d.longest();
    let mut res = CheckResult::new("orthogonality (h_v, hat h_{w0 w}) = delta", d.label());
    let elements: Vec<WeylElt> = d.elements().collect();
    let rows: Vec<Vec<bool>> = elements
        .par_iter()
        .map(|&v| {
            let row = alg.gram_row(&HeckeElt::basis(v));
            elements
                .iter()
                .map(|&w| alg.pair_row(&row, alg.hat_basis(d.multiply(w0, w))) == delta(v, w))
                .collect()
        })
        .collect();
    for (v, row) in elements.iter().zip(rows) {
        for (w, ok) in elements.iter().zip(row) {
            res.record(ok, || format!("v={}, w={}", d.word_string(*v), d.word_string(*w)));
        }
    }
    res
}

/// `(Y_v, w0(Y_{w0 w})) = delta(v, w)` for all pairs.
pub fn orthogonality_y_check(alg: &HeckeAlgebra<'_>, t: &TransitionTables) -> CheckResult {
    let d = alg.datum();
    let w0 = d.longest();
    let mut res = CheckResult::new("orthogonality (Y_v, w0 Y_{w0 w}) = delta", d.label());
    let elements: Vec<WeylElt> = d.elements().collect();
    let duals: Vec<HeckeElt> = elements
        .par_iter()
        .map(|&w| alg.act(w0, &column(&t.p, d.multiply(w0, w))))
        .collect();
    let rows: Vec<Vec<bool>> = elements
        .par_iter()
        .map(|&v| {
            let row = alg.gram_row(&column(&t.p, v));
            elements
                .iter()
                .map(|&w| alg.pair_row(&row, &duals[w.index()]) == delta(v, w))
                .collect()
        })
        .collect();
    for (v, row) in elements.iter().zip(rows) {
        for (w, ok) in elements.iter().zip(row) {
            res.record(ok, || format!("v={}, w={}", d.word_string(*v), d.word_string(*w)));
        }
    }
    res
}

/// `Y_v = sum_w (-1)^{l(v)-l(w)} star(p(w,v)) hat h_w`.
pub fn hat_expansion_check(alg: &HeckeAlgebra<'_>, t: &TransitionTables) -> CheckResult {
    let d = alg.datum();
    let mut res = CheckResult::new("Y_v expanded in the hatted basis", d.label());
    let elements: Vec<WeylElt> = d.elements().collect();
    let outcomes: Vec<bool> = elements
        .par_iter()
        .map(|&v| {
            let parts: Vec<HeckeElt> = t
                .p
                .column(v)
                .map(|(w, c)| alg.hat_basis(w).scale(&(sign(d.length(v) - d.length(w)) * c.star())))
                .collect();
            HeckeElt::sum(&parts) == column(&t.p, v)
        })
        .collect();
    for (v, ok) in elements.iter().zip(outcomes) {
        res.record(ok, || format!("v={}", d.word_string(*v)));
    }
    res
}

/// `(f h_s, g) = (f, g h_s)` over the given sample elements.
pub fn adjointness_check(alg: &HeckeAlgebra<'_>, samples: &[HeckeElt]) -> CheckResult {
    let d = alg.datum();
    let mut res = CheckResult::new("adjointness (f h_s, g) = (f, g h_s)", d.label());
    for (a, f) in samples.iter().enumerate() {
        for (b, g) in samples.iter().enumerate() {
            for s in 0..d.rank() {
                let lhs = alg.inner_product(&alg.mul_generator(f, s), g);
                let rhs = alg.inner_product(f, &alg.mul_generator(g, s));
                res.record(lhs == rhs, || format!("sample {a}, sample {b}, s{}", s + 1));
            }
        }
    }
    res
}

/// `hat h_s = h_s - (t1+t2)` and `hat h_s h_s = -t1 t2` for every generator.
pub fn hat_generator_check(alg: &HeckeAlgebra<'_>) -> CheckResult {
    let d = alg.datum();
    let mut res = CheckResult::new("hat h_s h_s = -t1 t2", d.label());
    for i in 0..d.rank() {
        let hat = alg.hat(&alg.generator(i));
        let expected = &alg.generator(i) - &HeckeElt::from_scalar(WeylElt::IDENTITY, tsum());
        let product = alg.mul_generator(&hat, i);
        let ok = hat == expected
            && product == HeckeElt::from_scalar(WeylElt::IDENTITY, -(Scalar::t1() * Scalar::t2()));
        res.record(ok, || format!("s{}", i + 1));
    }
    res
}
