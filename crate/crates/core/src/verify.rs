//! Registry of the implemented identities and an exhaustive runner that
//! checks each of them up to a configurable size.
//!
//! Per-object identities stop at the first counterexample in enumeration
//! order; distribution identities always finish the enumeration and compare
//! exact polynomials or tables. The runner can also inject a deliberate
//! off-by-one into the span statistic to demonstrate that the suite catches
//! a corrupted implementation.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::bruhat;
use crate::enumerate::{perfect_matchings, set_partitions, Family};
use crate::error::Error;
use crate::matching::PerfectMatching;
use crate::qpoly::QPolynomial;
use crate::stats::{arc_depth_sum, stat_record, stat_record_with_span, StatRecord};
use crate::symmetry;

/// Identifiers of the registered identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdentityId {
    DiSum,
    Triple,
    DepthId,
    DindexForm,
    InumLin,
    Tvd,
    StatForm,
    LGen,
    Main,
    IGen,
    Palin,
    Phi,
    Psi,
    Witness,
    BruhatRank,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::DiSum,
        IdentityId::Triple,
        IdentityId::DepthId,
        IdentityId::DindexForm,
        IdentityId::InumLin,
        IdentityId::Tvd,
        IdentityId::StatForm,
        IdentityId::LGen,
        IdentityId::Main,
        IdentityId::IGen,
        IdentityId::Palin,
        IdentityId::Phi,
        IdentityId::Psi,
        IdentityId::Witness,
        IdentityId::BruhatRank,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::DiSum => "DI_SUM",
            IdentityId::Triple => "TRIPLE",
            IdentityId::DepthId => "DEPTH_ID",
            IdentityId::DindexForm => "DINDEX_FORM",
            IdentityId::InumLin => "INUM_LIN",
            IdentityId::Tvd => "TVD",
            IdentityId::StatForm => "STAT_FORM",
            IdentityId::LGen => "L_GEN",
            IdentityId::Main => "MAIN",
            IdentityId::IGen => "I_GEN",
            IdentityId::Palin => "PALIN",
            IdentityId::Phi => "PHI",
            IdentityId::Psi => "PSI",
            IdentityId::Witness => "WITNESS",
            IdentityId::BruhatRank => "BRUHAT_RANK",
        }
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == text)
            .ok_or_else(|| Error::UnknownIdentity(text.to_string()))
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// One registered identity: what it states and how far it runs.
#[derive(Debug, Clone, Copy)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub family: Family,
    pub description: &'static str,
    /// Size checked when no override is given.
    pub default_max_n: usize,
    /// Hard safety cap; requests beyond it are rejected.
    pub hard_cap: usize,
    /// Whether the check asserts a per-object predicate (and therefore
    /// stops at the first counterexample) or compares whole distributions.
    pub per_object: bool,
}

/// The full registry, in reporting order.
pub fn registry() -> &'static [IdentityCheck] {
    const REGISTRY: [IdentityCheck; 15] = [
        IdentityCheck {
            id: IdentityId::DiSum,
            family: Family::Partitions,
            description: "dindex + inumber = C(N, 2) for every set partition of [N]",
            default_max_n: 9,
            hard_cap: 11,
            per_object: true,
        },
        IdentityCheck {
            id: IdentityId::Triple,
            family: Family::Matchings,
            description: "cro + nst + al = C(n, 2)",
            default_max_n: 5,
            hard_cap: 7,
            per_object: true,
        },
        IdentityCheck {
            id: IdentityId::DepthId,
            family: Family::Matchings,
            description: "tvd = sum of spans and nst = sum of arc depths",
            default_max_n: 5,
            hard_cap: 7,
            per_object: true,
        },
        IdentityCheck {
            id: IdentityId::DindexForm,
            family: Family::Matchings,
            description: "dindex = n^2 + 2C(n, 2) - tvd - cro - al",
            default_max_n: 5,
            hard_cap: 7,
            per_object: true,
        },
        IdentityCheck {
            id: IdentityId::InumLin,
            family: Family::Matchings,
            description: "inumber = 3cro + 2nst + al",
            default_max_n: 5,
            hard_cap: 7,
            per_object: true,
        },
        IdentityCheck {
            id: IdentityId::Tvd,
            family: Family::Matchings,
            description: "span sum = 2(cro + nst) = 2C(n, 2) - 2al",
            default_max_n: 5,
            hard_cap: 7,
            per_object: true,
        },
        IdentityCheck {
            id: IdentityId::StatForm,
            family: Family::Matchings,
            description: "ell = cro + 2nst and dindex = n^2 + C(n, 2) - 2cro - nst",
            default_max_n: 5,
            hard_cap: 7,
            per_object: true,
        },
        IdentityCheck {
            id: IdentityId::LGen,
            family: Family::Matchings,
            description: "sum over PM_2n of q^ell equals [2n-1]_q!!",
            default_max_n: 5,
            hard_cap: 7,
            per_object: false,
        },
        IdentityCheck {
            id: IdentityId::Main,
            family: Family::Matchings,
            description: "sum over PM_2n of q^dindex equals q^C(n+1, 2) [2n-1]_q!!",
            default_max_n: 5,
            hard_cap: 7,
            per_object: false,
        },
        IdentityCheck {
            id: IdentityId::IGen,
            family: Family::Matchings,
            description: "sum over PM_2n of q^inumber equals q^C(n, 2) [2n-1]_q!!",
            default_max_n: 5,
            hard_cap: 7,
            per_object: false,
        },
        IdentityCheck {
            id: IdentityId::Palin,
            family: Family::Matchings,
            description: "[2n-1]_q!! has degree n^2 - n and is palindromic",
            default_max_n: 10,
            hard_cap: 16,
            per_object: false,
        },
        IdentityCheck {
            id: IdentityId::Phi,
            family: Family::Matchings,
            description: "the crossing/nesting exchange is an involution preserving al",
            default_max_n: 5,
            hard_cap: 6,
            per_object: true,
        },
        IdentityCheck {
            id: IdentityId::Psi,
            family: Family::Matchings,
            description: "the length complement maps level r onto level n^2 - n - r",
            default_max_n: 5,
            hard_cap: 6,
            per_object: true,
        },
        IdentityCheck {
            id: IdentityId::Witness,
            family: Family::Matchings,
            description: "dindex(pi) = C(n+1, 2) + ell(psi(phi(pi)))",
            default_max_n: 5,
            hard_cap: 6,
            per_object: true,
        },
        IdentityCheck {
            id: IdentityId::BruhatRank,
            family: Family::Matchings,
            description: "the Bruhat order on PM_2n is graded by ell",
            default_max_n: 4,
            hard_cap: 5,
            per_object: true,
        },
    ];
    &REGISTRY
}

/// Deliberate corruption of a statistic, for exercising the suite itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Every arc span reads one too large.
    SpanPlusOne,
}

/// Bounds and options for one suite run. `None` bounds fall back to each
/// identity's registered default.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    pub max_n_partitions: Option<usize>,
    pub max_n_matchings: Option<usize>,
    /// Separate knob for the all-pairs Bruhat check, which is much heavier
    /// per object than the statistic identities.
    pub max_n_bruhat: Option<usize>,
    pub mutation: Mutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

/// Outcome of one identity at one size.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub identity: &'static str,
    pub n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub objects_visited: u64,
    pub elapsed_ms: u64,
}

/// All reports of one run, in registry order and ascending `n`.
#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct SuiteReport {
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// Identities with at least one failing size.
    pub fn failing_identities(&self) -> Vec<&'static str> {
        let mut failing: Vec<&'static str> = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.identity)
            .collect();
        failing.dedup();
        failing
    }
}

/// Runs the selected identities up to the configured sizes.
pub fn run_identity_suite(ids: &[IdentityId], opts: &SuiteOptions) -> Result<SuiteReport, Error> {
    let mut checks = Vec::new();
    for entry in registry() {
        if !ids.contains(&entry.id) {
            continue;
        }
        let max_n = requested_bound(entry, opts)?;
        for n in 1..=max_n {
            let started = Instant::now();
            let outcome = run_one(entry.id, n, opts.mutation)?;
            let elapsed_ms = started.elapsed().as_millis() as u64;
            let failed = outcome.counterexample.is_some();
            checks.push(CheckReport {
                identity: entry.id.as_str(),
                n,
                status: if failed { Status::Fail } else { Status::Pass },
                counterexample: outcome.counterexample,
                objects_visited: outcome.objects,
                elapsed_ms,
            });
            if failed && entry.per_object {
                break;
            }
        }
    }
    Ok(SuiteReport { checks })
}

fn requested_bound(entry: &IdentityCheck, opts: &SuiteOptions) -> Result<usize, Error> {
    let requested = if entry.id == IdentityId::BruhatRank {
        opts.max_n_bruhat
    } else {
        match entry.family {
            Family::Partitions => opts.max_n_partitions,
            Family::Matchings => opts.max_n_matchings,
        }
    };
    let bound = requested.unwrap_or(entry.default_max_n);
    if bound > entry.hard_cap {
        return Err(Error::BoundExceeded {
            requested: bound,
            bound: entry.hard_cap,
        });
    }
    Ok(bound)
}

struct Outcome {
    counterexample: Option<String>,
    objects: u64,
}

impl Outcome {
    fn pass(objects: u64) -> Self {
        Outcome {
            counterexample: None,
            objects,
        }
    }

    fn fail(objects: u64, text: String) -> Self {
        Outcome {
            counterexample: Some(text),
            objects,
        }
    }
}

fn record_of(m: &PerfectMatching, mutation: Mutation) -> StatRecord {
    match mutation {
        Mutation::None => stat_record(m),
        Mutation::SpanPlusOne => stat_record_with_span(m, |a| a.span() + 1),
    }
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn run_one(id: IdentityId, n: usize, mutation: Mutation) -> Result<Outcome, Error> {
    match id {
        IdentityId::DiSum => Ok(check_di_sum(n)),
        IdentityId::Triple => Ok(per_matching(n, mutation, |nn, r| {
            let expected = choose2(nn);
            (r.cro + r.nst + r.al == expected)
                .then_some(())
                .ok_or(format!(
                    "cro + nst + al = {} != {expected}",
                    r.cro + r.nst + r.al
                ))
        })),
        IdentityId::DepthId => Ok(check_depth_id(n, mutation)),
        IdentityId::DindexForm => Ok(per_matching(n, mutation, |nn, r| {
            let expected = nn * nn + 2 * choose2(nn) - r.tvd - r.cro - r.al;
            (r.dindex == expected)
                .then_some(())
                .ok_or(format!("dindex = {} != {expected}", r.dindex))
        })),
        IdentityId::InumLin => Ok(per_matching(n, mutation, |_, r| {
            let expected = 3 * r.cro + 2 * r.nst + r.al;
            (r.inumber == expected)
                .then_some(())
                .ok_or(format!("inumber = {} != {expected}", r.inumber))
        })),
        IdentityId::Tvd => Ok(per_matching(n, mutation, |nn, r| {
            // the span route of the total vertex depth
            let by_pairs = 2 * (r.cro + r.nst);
            let by_alignments = 2 * choose2(nn) - 2 * r.al;
            (r.span_sum == by_pairs && r.span_sum == by_alignments)
                .then_some(())
                .ok_or(format!(
                    "span sum = {} vs {by_pairs} and {by_alignments}",
                    r.span_sum
                ))
        })),
        IdentityId::StatForm => Ok(per_matching(n, mutation, |nn, r| {
            let ell = r.cro + 2 * r.nst;
            let dindex = nn * nn + choose2(nn) - 2 * r.cro - r.nst;
            if r.ell != ell {
                Err(format!("ell = {} != {ell}", r.ell))
            } else if r.dindex != dindex {
                Err(format!("dindex = {} != {dindex}", r.dindex))
            } else {
                Ok(())
            }
        })),
        IdentityId::LGen => check_distribution(n, mutation, |r| r.ell, 0),
        IdentityId::Main => check_distribution(n, mutation, |r| r.dindex, n * (n + 1) / 2),
        IdentityId::IGen => check_distribution(n, mutation, |r| r.inumber, n * (n - 1) / 2),
        IdentityId::Palin => check_palindromic(n),
        IdentityId::Phi => Ok(check_phi(n, mutation)),
        IdentityId::Psi => Ok(check_psi(n, mutation)),
        IdentityId::Witness => Ok(check_witness(n, mutation)),
        IdentityId::BruhatRank => check_bruhat_rank(n),
    }
}

fn check_di_sum(ground_size: usize) -> Outcome {
    let expected = choose2(ground_size as u64);
    let mut visited = 0;
    for p in set_partitions(ground_size) {
        visited += 1;
        let r = crate::stats::partition_stat_record(&p);
        if r.dindex + r.inumber != expected {
            return Outcome::fail(
                visited,
                format!(
                    "{p}: dindex + inumber = {} != {expected}",
                    r.dindex + r.inumber
                ),
            );
        }
    }
    Outcome::pass(visited)
}

fn per_matching<F>(n: usize, mutation: Mutation, predicate: F) -> Outcome
where
    F: Fn(u64, &StatRecord) -> Result<(), String>,
{
    let mut visited = 0;
    for m in perfect_matchings(n) {
        visited += 1;
        let record = record_of(&m, mutation);
        if let Err(why) = predicate(n as u64, &record) {
            return Outcome::fail(visited, format!("{m}: {why}"));
        }
    }
    Outcome::pass(visited)
}

fn check_depth_id(n: usize, mutation: Mutation) -> Outcome {
    let mut visited = 0;
    for m in perfect_matchings(n) {
        visited += 1;
        let record = record_of(&m, mutation);
        let depth_sum = arc_depth_sum(&m);
        if record.tvd != record.span_sum {
            return Outcome::fail(
                visited,
                format!(
                    "{m}: tvd = {} but span sum = {}",
                    record.tvd, record.span_sum
                ),
            );
        }
        if record.nst != depth_sum {
            return Outcome::fail(
                visited,
                format!("{m}: nst = {} but arc depth sum = {depth_sum}", record.nst),
            );
        }
    }
    Outcome::pass(visited)
}

fn check_distribution<F>(
    n: usize,
    mutation: Mutation,
    value: F,
    shift: usize,
) -> Result<Outcome, Error>
where
    F: Fn(&StatRecord) -> u64,
{
    let mut poly = QPolynomial::zero();
    let mut visited = 0;
    for m in perfect_matchings(n) {
        visited += 1;
        poly.bump(value(&record_of(&m, mutation)) as usize, 1)?;
    }
    let expected = QPolynomial::q_double_factorial(n)?.shift(shift);
    if poly == expected {
        Ok(Outcome::pass(visited))
    } else {
        Ok(Outcome::fail(
            visited,
            format!("got {poly}, expected {expected}"),
        ))
    }
}

fn check_palindromic(n: usize) -> Result<Outcome, Error> {
    let poly = QPolynomial::q_double_factorial(n)?;
    let degree = poly.degree().expect("the q-double factorial is nonzero");
    if degree != n * n - n {
        return Ok(Outcome::fail(
            1,
            format!("degree {degree} != {}", n * n - n),
        ));
    }
    if !poly.is_palindromic()? {
        return Ok(Outcome::fail(1, format!("{poly} is not palindromic")));
    }
    Ok(Outcome::pass(1))
}

fn check_phi(n: usize, mutation: Mutation) -> Outcome {
    let table = match symmetry::cn_involution_with_bound(n, n) {
        Ok(table) => table,
        Err(e) => return Outcome::fail(0, format!("construction failed: {e}")),
    };
    if !table.is_involution() {
        return Outcome::fail(table.len() as u64, "not an involution".to_string());
    }
    let mut visited = 0;
    for (source, target) in table.pairs() {
        visited += 1;
        let s = record_of(source, mutation);
        let t = record_of(target, mutation);
        if t.al != s.al || t.cro != s.nst || t.nst != s.cro {
            return Outcome::fail(
                visited,
                format!(
                    "{source} -> {target}: (cro, nst, al) goes ({}, {}, {}) -> ({}, {}, {})",
                    s.cro, s.nst, s.al, t.cro, t.nst, t.al
                ),
            );
        }
    }
    Outcome::pass(visited)
}

fn check_psi(n: usize, mutation: Mutation) -> Outcome {
    let table = match symmetry::length_complement_with_bound(n, n) {
        Ok(table) => table,
        Err(e) => return Outcome::fail(0, format!("construction failed: {e}")),
    };
    if !table.is_involution() {
        return Outcome::fail(table.len() as u64, "not an involution".to_string());
    }
    let top = (n * n - n) as u64;
    let mut level_sizes = vec![0u64; n * n - n + 1];
    let mut visited = 0;
    for (source, target) in table.pairs() {
        visited += 1;
        let ell_source = record_of(source, mutation).ell;
        let ell_target = record_of(target, mutation).ell;
        if ell_source > top || ell_target != top - ell_source {
            return Outcome::fail(
                visited,
                format!("{source} -> {target}: lengths {ell_source} and {ell_target}"),
            );
        }
        level_sizes[ell_source as usize] += 1;
    }
    // level sizes must be the (palindromic) coefficients of [2n-1]_q!!
    let expected = QPolynomial::q_double_factorial(n).expect("desk-scale double factorial");
    if level_sizes != expected.coeffs() {
        return Outcome::fail(
            visited,
            format!("level sizes {level_sizes:?} != {expected}"),
        );
    }
    Outcome::pass(visited)
}

fn check_witness(n: usize, mutation: Mutation) -> Outcome {
    let table = match symmetry::depth_length_witness_with_bound(n, n) {
        Ok(table) => table,
        Err(e) => return Outcome::fail(0, format!("construction failed: {e}")),
    };
    let offset = (n * (n + 1) / 2) as u64;
    let mut visited = 0;
    for (source, target) in table.pairs() {
        visited += 1;
        let dindex = record_of(source, mutation).dindex;
        let ell = record_of(target, mutation).ell;
        if dindex != offset + ell {
            return Outcome::fail(
                visited,
                format!(
                    "{source}: dindex = {dindex} but offset + ell = {}",
                    offset + ell
                ),
            );
        }
    }
    Outcome::pass(visited)
}

fn check_bruhat_rank(n: usize) -> Result<Outcome, Error> {
    let report = bruhat::verify_rank_is_length_with_bound(n, n)?;
    if report.pass {
        Ok(Outcome::pass(report.elements))
    } else {
        Ok(Outcome::fail(
            report.elements,
            report
                .counterexample
                .unwrap_or_else(|| "gradedness check failed".to_string()),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes_everything() {
        let report = run_identity_suite(&IdentityId::ALL, &SuiteOptions::default()).unwrap();
        assert!(
            report.all_pass(),
            "failing: {:?}",
            report.failing_identities()
        );
        // one report line per (identity, n)
        assert!(report.checks.iter().all(|c| c.status == Status::Pass));
    }

    #[test]
    fn di_sum_at_size_eight_visits_all_partitions() {
        let opts = SuiteOptions {
            max_n_partitions: Some(8),
            ..Default::default()
        };
        let report = run_identity_suite(&[IdentityId::DiSum], &opts).unwrap();
        let at_eight = report.checks.iter().find(|c| c.n == 8).unwrap();
        assert_eq!(at_eight.objects_visited, 4140);
        assert_eq!(at_eight.status, Status::Pass);
    }

    #[test]
    fn main_at_two_compares_the_shifted_double_factorial() {
        let opts = SuiteOptions {
            max_n_matchings: Some(2),
            ..Default::default()
        };
        let report = run_identity_suite(&[IdentityId::Main], &opts).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.checks.len(), 2);
    }

    #[test]
    fn selection_and_bounds_are_honored() {
        let opts = SuiteOptions {
            max_n_matchings: Some(3),
            ..Default::default()
        };
        let report = run_identity_suite(&[IdentityId::Triple, IdentityId::LGen], &opts).unwrap();
        let identities: Vec<&str> = report.checks.iter().map(|c| c.identity).collect();
        assert_eq!(
            identities,
            ["TRIPLE", "TRIPLE", "TRIPLE", "L_GEN", "L_GEN", "L_GEN"]
        );
    }

    #[test]
    fn oversized_requests_are_rejected() {
        let opts = SuiteOptions {
            max_n_matchings: Some(20),
            ..Default::default()
        };
        assert!(matches!(
            run_identity_suite(&[IdentityId::Triple], &opts),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn span_fault_is_caught_by_the_span_sensitive_identities() {
        let opts = SuiteOptions {
            max_n_matchings: Some(3),
            max_n_partitions: Some(3),
            max_n_bruhat: Some(2),
            mutation: Mutation::SpanPlusOne,
        };
        let report = run_identity_suite(&IdentityId::ALL, &opts).unwrap();
        let failing = report.failing_identities();
        for expected in ["TVD", "STAT_FORM", "L_GEN"] {
            assert!(failing.contains(&expected), "{expected} not in {failing:?}");
        }
        assert!(failing.len() >= 3);
        // statistics that do not depend on spans stay green
        for untouched in ["DI_SUM", "TRIPLE", "INUM_LIN", "MAIN", "I_GEN", "PHI"] {
            assert!(!failing.contains(&untouched), "{untouched} should pass");
        }
    }

    #[test]
    fn per_object_checks_stop_after_a_failing_size() {
        let opts = SuiteOptions {
            max_n_matchings: Some(4),
            mutation: Mutation::SpanPlusOne,
            ..Default::default()
        };
        let report = run_identity_suite(&[IdentityId::Tvd], &opts).unwrap();
        // n = 1 passes (the single matching has span 0 mutated to 1... it fails);
        // whatever the first failing n is, nothing runs after it
        let last = report.checks.last().unwrap();
        assert_eq!(last.status, Status::Fail);
        assert!(report
            .checks
            .iter()
            .take(report.checks.len() - 1)
            .all(|c| c.status == Status::Pass));
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::parse(id.as_str()).unwrap(), id);
        }
        assert!(matches!(
            IdentityId::parse("NOPE"),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn report_serializes_per_check_objects() {
        let opts = SuiteOptions {
            max_n_matchings: Some(1),
            ..Default::default()
        };
        let report = run_identity_suite(&[IdentityId::Triple], &opts).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        let first = &json.as_array().unwrap()[0];
        assert_eq!(first["identity"], "TRIPLE");
        assert_eq!(first["n"], 1);
        assert_eq!(first["status"], "PASS");
        assert_eq!(first["objects_visited"], 1);
        assert!(first.get("counterexample").is_none());
    }
}
