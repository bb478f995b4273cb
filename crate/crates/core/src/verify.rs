//! Every identity suite for one root datum, run in a fixed order with a
//! deterministic text rendering.

use std::fmt;

use serde::Serialize;

use crate::casselman::Casselman;
use crate::error::Result;
use crate::hecke::{self, HeckeAlgebra, Side, TransitionTables};
use crate::kkalg::{self, KkAlgebra};
use crate::report::CheckResult;
use crate::rootdata::RootDatum;

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub datum: String,
    pub order: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify {} (|W| = {})", self.datum, self.order)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failed_checks().count();
        write!(f, "{}: {} of {} suites passed", self.datum, self.checks.len() - failed, self.checks.len())
    }
}

/// `P` and `Ptilde` from both recurrences, on both sides, against the tables.
pub fn recurrence_check(datum: &RootDatum, t: &TransitionTables) -> CheckResult {
    let mut res = CheckResult::new("left and right recurrences reproduce p and ptilde", datum.label());
    for side in [Side::Left, Side::Right] {
        let tables = [
            ("p", hecke::p_recurrence_table(datum, side), &t.p),
            ("ptilde", hecke::ptilde_recurrence_table(datum, side), &t.ptilde),
        ];
        for (name, rec, table) in tables {
            for v in datum.elements() {
                for w in datum.elements() {
                    res.record(rec.get(w, v) == table.get(w, v), || {
                        format!("{name} {side:?}, w={}, v={}", datum.word_string(w), datum.word_string(v))
                    });
                }
            }
        }
    }
    res
}

/// Runs the full suite on `datum`.
pub fn verify(datum: &RootDatum) -> Result<VerifyReport> {
    let alg = HeckeAlgebra::new(datum);
    let t = alg.transition_tables();
    let kk = KkAlgebra::new(datum);
    let cas = Casselman::new(datum, &t)?;
    let samples: Vec<_> = std::iter::once(datum.identity())
        .chain((0..datum.rank()).map(|i| datum.simple(i)))
        .chain(std::iter::once(datum.longest()))
        .map(|w| alg.yang_baxter(w))
        .collect();
    let checks = vec![
        hecke::yang_baxter_relation_check(&alg),
        hecke::basis_roundtrip_check(&alg, &t),
        recurrence_check(datum, &t),
        hecke::duality_check(&alg, &t),
        hecke::conjugation_symmetry_check(&alg, &t),
        hecke::omega_check(&alg, &t),
        hecke::hat_generator_check(&alg),
        hecke::orthogonality_h_check(&alg),
        hecke::orthogonality_y_check(&alg, &t),
        hecke::hat_expansion_check(&alg, &t),
        hecke::adjointness_check(&alg, &samples),
        kkalg::dl_relations_check(&kk),
        kkalg::word_independence_check(&kk),
        kkalg::delta_multiplicativity_check(&kk),
        kkalg::phi_delta_check(&kk, &alg),
        kkalg::closed_formula_check(&kk, &t),
        cas.specialization_check(),
        cas.sum_identities_check(),
        cas.bridge_check(),
        cas.mobius_check(),
    ];
    Ok(VerifyReport { datum: datum.label().to_string(), order: datum.order(), checks })
}
