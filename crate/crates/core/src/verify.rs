//! Exhaustive sweeps asserting the identities between the statistics.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::classical::{classical_charge, classical_cocharge};
use crate::cores::is_n_core;
use crate::enumerate::{enumerate_with, Strategy};
use crate::error::Result;
use crate::partition::{CellSet, Partition};
use crate::sequences::standard_sequences;
use crate::statistics::{Formulation, TableauStatistics};
use crate::tableau::KTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// LP and Morse cocharge agree.
    CochargeFormulations,
    /// LP and Morse charge agree.
    ChargeFormulations,
    /// Morse charge + cocharge = n(weight) - |interior|.
    Duality,
    /// The same identity with the LP formulations.
    DualityLp,
    /// Standard tableaux: J-side = m(m-1)/2 - |interior| - M-side.
    StandardDuality,
    /// Every Morse term is non-negative.
    NonNegativity,
    /// Standard tableaux: diagonals of res(i) between the top and bottom `i` hold an `i`.
    DiagonalFilling,
    /// Standard tableaux: number of res(i) diagonals meeting the restriction.
    DiagonalCount,
    /// Shapes with `k > lambda_1 + l(lambda) - 2` reproduce classical charge and cocharge.
    LargeK,
    /// Every restriction to letters `<= i` is a (k+1)-core.
    RestrictionCore,
    /// Standard sequences partition the cells.
    SequencePartition,
    /// Fast and brute-force enumeration agree.
    OracleEquivalence,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::CochargeFormulations,
        Check::ChargeFormulations,
        Check::Duality,
        Check::DualityLp,
        Check::StandardDuality,
        Check::NonNegativity,
        Check::DiagonalFilling,
        Check::DiagonalCount,
        Check::LargeK,
        Check::RestrictionCore,
        Check::SequencePartition,
        Check::OracleEquivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::CochargeFormulations => "cocharge-formulations",
            Check::ChargeFormulations => "charge-formulations",
            Check::Duality => "duality",
            Check::DualityLp => "duality-lp",
            Check::StandardDuality => "standard-duality",
            Check::NonNegativity => "non-negativity",
            Check::DiagonalFilling => "diagonal-filling",
            Check::DiagonalCount => "diagonal-count",
            Check::LargeK => "large-k",
            Check::RestrictionCore => "restriction-core",
            Check::SequencePartition => "sequence-partition",
            Check::OracleEquivalence => "oracle-equivalence",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub checked: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl CheckOutcome {
    fn new(check: Check) -> Self {
        CheckOutcome {
            check,
            checked: 0,
            failures: 0,
            first_counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }

    fn merge(&mut self, other: CheckOutcome) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_counterexample.is_none() {
            self.first_counterexample = other.first_counterexample;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub min_k: usize,
    pub max_k: usize,
    pub max_weight: usize,
    /// Also compare against the brute-force enumerator (slow).
    pub oracle: bool,
}

impl SweepConfig {
    pub fn new(max_k: usize, max_weight: usize) -> Self {
        SweepConfig {
            min_k: 1,
            max_k,
            max_weight,
            oracle: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub min_k: usize,
    pub max_k: usize,
    pub max_weight: usize,
    /// Number of (k, weight) pairs swept.
    pub cases: usize,
    pub tableaux: usize,
    /// Sequence steps whose letter kept the previous residue.
    pub repeated_residue_steps: usize,
    pub checks: Vec<CheckOutcome>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn outcome(&self, check: Check) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.check == check)
    }
}

/// Every partition weight with parts `<= k` and size `<= max_weight`, for each k in range.
pub fn sweep_cases(cfg: &SweepConfig) -> Vec<(usize, Partition)> {
    let mut cases = Vec::new();
    for k in cfg.min_k.max(1)..=cfg.max_k {
        for size in 0..=cfg.max_weight {
            for mu in Partition::of_size(size, k) {
                cases.push((k, mu));
            }
        }
    }
    cases
}

struct Partial {
    tableaux: usize,
    repeated: usize,
    checks: Vec<CheckOutcome>,
}

impl Partial {
    fn new(cfg: &SweepConfig) -> Self {
        let checks = Check::ALL
            .iter()
            .filter(|&&c| cfg.oracle || c != Check::OracleEquivalence)
            .map(|&c| CheckOutcome::new(c))
            .collect();
        Partial {
            tableaux: 0,
            repeated: 0,
            checks,
        }
    }

    fn slot(&mut self, check: Check) -> &mut CheckOutcome {
        self.checks
            .iter_mut()
            .find(|c| c.check == check)
            .expect("check enabled")
    }
}

/// Runs every check over all k-tableaux in the configured range. Cases are
/// processed in parallel and merged in a fixed order, so the report is deterministic.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let cases = sweep_cases(cfg);
    let partials: Vec<Partial> = cases
        .par_iter()
        .map(|(k, mu)| sweep_case(cfg, *k, mu))
        .collect::<Result<_>>()?;
    let mut total = Partial::new(cfg);
    for p in partials {
        total.tableaux += p.tableaux;
        total.repeated += p.repeated;
        for (acc, c) in total.checks.iter_mut().zip(p.checks) {
            acc.merge(c);
        }
    }
    Ok(SweepReport {
        min_k: cfg.min_k.max(1),
        max_k: cfg.max_k,
        max_weight: cfg.max_weight,
        cases: cases.len(),
        tableaux: total.tableaux,
        repeated_residue_steps: total.repeated,
        checks: total.checks,
    })
}

fn sweep_case(cfg: &SweepConfig, k: usize, mu: &Partition) -> Result<Partial> {
    let mut out = Partial::new(cfg);
    let tableaux = enumerate_with(Strategy::Fast, k, mu.parts(), None)?;
    if cfg.oracle {
        let oracle = enumerate_with(Strategy::Oracle, k, mu.parts(), None)?;
        let same = oracle == tableaux;
        out.slot(Check::OracleEquivalence).record(same, || {
            format!(
                "k={k} weight={mu}: fast found {}, oracle found {}",
                tableaux.len(),
                oracle.len()
            )
        });
    }
    for t in &tableaux {
        out.tableaux += 1;
        check_tableau(t, &mut out)?;
    }
    Ok(out)
}

fn describe(t: &KTableau, what: String) -> String {
    format!("{what}\n{}", t.to_text())
}

fn check_tableau(t: &KTableau, out: &mut Partial) -> Result<()> {
    let k = t.k();
    let n = t.modulus();
    let s = TableauStatistics::compute(t)?;
    out.repeated += standard_sequences(t)?
        .iter()
        .map(|q| q.repeated_residue_steps())
        .sum::<usize>();

    out.slot(Check::CochargeFormulations)
        .record(s.cocharge_lp == s.cocharge_morse, || {
            describe(
                t,
                format!("cocharge lp={} morse={}", s.cocharge_lp, s.cocharge_morse),
            )
        });
    out.slot(Check::ChargeFormulations)
        .record(s.charge_lp == s.charge_morse, || {
            describe(
                t,
                format!("charge lp={} morse={}", s.charge_lp, s.charge_morse),
            )
        });
    let constant = s.duality_constant();
    out.slot(Check::Duality)
        .record(s.charge_morse + s.cocharge_morse == constant, || {
            describe(
                t,
                format!(
                    "morse charge {} + cocharge {} != {constant}",
                    s.charge_morse, s.cocharge_morse
                ),
            )
        });
    out.slot(Check::DualityLp)
        .record(s.charge_lp + s.cocharge_lp == constant, || {
            describe(
                t,
                format!(
                    "lp charge {} + cocharge {} != {constant}",
                    s.charge_lp, s.cocharge_lp
                ),
            )
        });
    let terms_ok = s
        .tables
        .iter()
        .flat_map(|tab| &tab.rows)
        .all(|r| r.m >= 0 && r.j >= 0);
    out.slot(Check::NonNegativity).record(
        terms_ok && s.charge_morse >= 0 && s.cocharge_morse >= 0,
        || describe(t, "negative Morse term".to_string()),
    );

    let weight = t.weight();
    let restriction_bad = (1..=weight.len()).find(|&i| {
        t.restrict_leq(i)
            .map_or(true, |r| !is_n_core(r.shape(), n).unwrap_or(false))
    });
    out.slot(Check::RestrictionCore)
        .record(restriction_bad.is_none(), || {
            describe(
                t,
                format!(
                    "restriction to letters <= {} is not a core",
                    restriction_bad.unwrap_or(0)
                ),
            )
        });

    let mut seen = CellSet::new();
    let mut sequence_ok = true;
    for seq in standard_sequences(t)? {
        for e in seq.entries() {
            let rows: BTreeSet<usize> = e.cells.iter().map(|c| c.row).collect();
            sequence_ok &= rows.len() == e.cells.len();
            for c in e.cells.iter() {
                sequence_ok &= seen.insert(c) && t.letter(c) == Some(e.letter);
            }
        }
    }
    sequence_ok &= seen.len() == t.shape().size();
    out.slot(Check::SequencePartition).record(sequence_ok, || {
        describe(
            t,
            "standard sequences do not partition the cells".to_string(),
        )
    });

    let shape = t.shape();
    if !shape.is_empty() && k + 2 > shape.first() + shape.len() {
        let charge = classical_charge(t.rows())?;
        let cocharge = classical_cocharge(t.rows())?;
        let same_weight = t.residue_counts() == crate::classical::content(t.rows());
        let ok = same_weight
            && s.charge_morse == charge as i64
            && s.cocharge_morse == cocharge as i64
            && s.charge_lp == charge as i64
            && s.cocharge_lp == cocharge as i64;
        out.slot(Check::LargeK).record(ok, || {
            describe(
                t,
                format!(
                    "classical charge {charge} cocharge {cocharge}; k-charge {} k-cocharge {}",
                    s.charge_morse, s.cocharge_morse
                ),
            )
        });
    }

    if weight.iter().all(|&a| a == 1) && !weight.is_empty() {
        check_standard(t, &s, out);
    }
    Ok(())
}

fn check_standard(t: &KTableau, s: &TableauStatistics, out: &mut Partial) {
    let n = t.modulus() as i64;
    let m = t.weight().len() as i64;
    let table = &s.tables[0];
    let j_side = table.charge(Formulation::Morse);
    let m_side = table.cocharge(Formulation::Morse);
    let expected = m * (m - 1) / 2 - s.interior as i64 - m_side;
    out.slot(Check::StandardDuality)
        .record(j_side == expected, || {
            describe(t, format!("J-side {j_side} != {expected}"))
        });

    let mut filling_ok = true;
    let mut count_ok = true;
    for row in &table.rows {
        let i = row.letter;
        let cells = t.letter_cells(i);
        let r = row.residue.value() as i64;
        let (lo, hi) = {
            let (a, b) = (row.highest.diagonal(), row.lowest.diagonal());
            (a.min(b), a.max(b))
        };
        let diagonals: BTreeSet<i64> = cells.iter().map(|c| c.diagonal()).collect();
        for d in (lo + 1)..hi {
            if (d - r).rem_euclid(n) == 0 && !diagonals.contains(&d) {
                filling_ok = false;
            }
        }
        let restricted = t.restrict_leq(i).expect("letter in range");
        let meeting: BTreeSet<i64> = restricted
            .cells()
            .map(|(c, _)| c.diagonal())
            .filter(|d| (d - r).rem_euclid(n) == 0)
            .collect();
        let beta = cells.len();
        let lhs = beta + row.diag_highest_addable + row.diag_lowest_addable;
        count_ok &= lhs == meeting.len();
    }
    out.slot(Check::DiagonalFilling).record(filling_ok, || {
        describe(
            t,
            "a res(i) diagonal between the extreme i's has no i".to_string(),
        )
    });
    out.slot(Check::DiagonalCount).record(count_ok, || {
        describe(t, "diagonal count mismatch".to_string())
    });
}
