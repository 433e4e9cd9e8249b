//! Index vectors, residue orders and the k-charge / k-cocharge statistics.
//!
//! Two formulations are provided. The LP form sums the `L` (cocharge) or `I`
//! (charge) vectors, whose steps can be negative. The Morse form sums the `M`
//! or `J` vectors plus a diagonal correction per letter; every term is
//! non-negative.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cores::{k_interior, n_stat};
use crate::enumerate::enumerate_k_tableaux;
use crate::error::{Error, Result};
use crate::partition::{Cell, CellSet, Partition, Residue};
use crate::poly::TPolynomial;
use crate::sequences::{standard_sequences, StandardSequence};
use crate::tableau::KTableau;

/// Number of diagonals strictly between `c1` and `c2` carrying the residue of
/// the lower cell. On a shared row the cell with the smaller diagonal counts as lower.
pub fn diag(c1: Cell, c2: Cell, k: usize) -> usize {
    let n = (k + 1) as i64;
    let (d1, d2) = (c1.diagonal(), c2.diagonal());
    let lower = match c1.row.cmp(&c2.row) {
        std::cmp::Ordering::Less => c1,
        std::cmp::Ordering::Greater => c2,
        std::cmp::Ordering::Equal if d1 <= d2 => c1,
        std::cmp::Ordering::Equal => c2,
    };
    let r = lower.diagonal().rem_euclid(n);
    let (lo, hi) = (d1.min(d2), d1.max(d2));
    if hi - lo < 2 {
        return 0;
    }
    // integers d in (lo, hi) with d = r mod n
    ((hi - 1 - r).div_euclid(n) - (lo - r).div_euclid(n)) as usize
}

/// The cell on row 1 just past the largest diagonal of `cells`.
///
/// For a partition this is the addable corner at the end of the first row. For
/// the scattered cell sets of a standard sequence it is the row-1 cell whose
/// diagonal lies one beyond every cell of the set.
pub fn lowest_addable(cells: &CellSet) -> Result<Cell> {
    cells.bottom_row_end().ok_or(Error::NoBottomRowCell)?;
    let top = cells.max_diagonal().expect("non-empty");
    Ok(Cell::new(1, (top + 2) as usize))
}

/// The cell in column 1 just above the highest row of `cells`.
pub fn highest_addable(cells: &CellSet) -> Result<Cell> {
    cells.bottom_row_end().ok_or(Error::NoBottomRowCell)?;
    Ok(Cell::new(cells.max_row().expect("non-empty") + 1, 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Low,
    High,
}

/// A cyclic total order on residues `0..modulus` with `pivot` as its largest element.
///
/// `Low` reads `x > x+1 > ... > k > 0 > ... > x-1`; `High` reads
/// `x > x-1 > ... > 0 > k > ... > x+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueOrder {
    modulus: usize,
    pivot: Residue,
    direction: Direction,
}

impl ResidueOrder {
    pub fn new(modulus: usize, pivot: Residue, direction: Direction) -> Self {
        ResidueOrder {
            modulus,
            pivot,
            direction,
        }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn pivot(&self) -> Residue {
        self.pivot
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Position in the order; 0 is the largest residue.
    pub fn rank(&self, r: Residue) -> usize {
        let (r, x, n) = (r.value(), self.pivot.value(), self.modulus);
        match self.direction {
            Direction::Low => (r + n - x) % n,
            Direction::High => (x + n - r) % n,
        }
    }

    /// True when `a > b` in this order.
    pub fn greater(&self, a: Residue, b: Residue) -> bool {
        self.rank(a) < self.rank(b)
    }

    /// Residues from largest to smallest.
    pub fn descending(&self) -> Vec<Residue> {
        let mut all: Vec<Residue> = (0..self.modulus)
            .map(|r| Residue::new(r, self.modulus))
            .collect();
        all.sort_by_key(|&r| self.rank(r));
        all
    }
}

impl fmt::Display for ResidueOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.descending().iter().map(|r| r.to_string()).collect();
        f.write_str(&parts.join(" > "))
    }
}

pub fn low_order(cells: &CellSet, k: usize) -> Result<ResidueOrder> {
    let n = k + 1;
    Ok(ResidueOrder::new(
        n,
        lowest_addable(cells)?.residue(n),
        Direction::Low,
    ))
}

pub fn high_order(cells: &CellSet, k: usize) -> Result<ResidueOrder> {
    let n = k + 1;
    Ok(ResidueOrder::new(
        n,
        highest_addable(cells)?.residue(n),
        Direction::High,
    ))
}

/// One integer per letter of a sequence; the first entry is always 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IndexVector(pub Vec<i64>);

impl IndexVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Everything computed for one letter of a standard sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRow {
    pub letter: usize,
    pub residue: Residue,
    pub lowest: Cell,
    pub highest: Cell,
    /// `diag(i low, (i-1) low)`; zero for the first letter.
    pub diag_prev_lowest: usize,
    pub l: i64,
    pub low_order: ResidueOrder,
    pub m: i64,
    /// `diag(i low, lowest addable cell of the restriction)`.
    pub diag_lowest_addable: usize,
    pub diag_prev_highest: usize,
    pub i: i64,
    pub high_order: ResidueOrder,
    pub j: i64,
    pub diag_highest_addable: usize,
}

/// The per-letter table of one standard sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub rows: Vec<StepRow>,
}

impl SequenceTable {
    pub fn compute(seq: &StandardSequence) -> Result<Self> {
        let k = seq.k();
        let mut rows: Vec<StepRow> = Vec::with_capacity(seq.len());
        let mut restriction = CellSet::new();
        for entry in seq.entries() {
            restriction.extend(entry.cells.iter());
            let lowest = entry.lowest();
            let highest = entry.highest();
            let low = low_order(&restriction, k)?;
            let high = high_order(&restriction, k)?;
            let diag_lowest_addable = diag(lowest, lowest_addable(&restriction)?, k);
            let diag_highest_addable = diag(highest, highest_addable(&restriction)?, k);
            let row = match rows.last() {
                None => StepRow {
                    letter: entry.letter,
                    residue: entry.residue,
                    lowest,
                    highest,
                    diag_prev_lowest: 0,
                    l: 0,
                    low_order: low,
                    m: 0,
                    diag_lowest_addable,
                    diag_prev_highest: 0,
                    i: 0,
                    high_order: high,
                    j: 0,
                    diag_highest_addable,
                },
                Some(prev) => {
                    let dl = diag(lowest, prev.lowest, k);
                    let l = if prev.lowest.row < lowest.row {
                        prev.l + 1 + dl as i64
                    } else {
                        prev.l - dl as i64
                    };
                    let dh = diag(highest, prev.highest, k);
                    let i = if highest.col > prev.highest.col {
                        prev.i + 1 + dh as i64
                    } else {
                        prev.i - dh as i64
                    };
                    let m = prev.m + low.greater(entry.residue, prev.residue) as i64;
                    let j = prev.j + high.greater(entry.residue, prev.residue) as i64;
                    StepRow {
                        letter: entry.letter,
                        residue: entry.residue,
                        lowest,
                        highest,
                        diag_prev_lowest: dl,
                        l,
                        low_order: low,
                        m,
                        diag_lowest_addable,
                        diag_prev_highest: dh,
                        i,
                        high_order: high,
                        j,
                        diag_highest_addable,
                    }
                }
            };
            rows.push(row);
        }
        Ok(SequenceTable { rows })
    }

    fn column(&self, f: impl Fn(&StepRow) -> i64) -> IndexVector {
        IndexVector(self.rows.iter().map(f).collect())
    }

    pub fn l_vector(&self) -> IndexVector {
        self.column(|r| r.l)
    }

    pub fn m_vector(&self) -> IndexVector {
        self.column(|r| r.m)
    }

    pub fn i_vector(&self) -> IndexVector {
        self.column(|r| r.i)
    }

    pub fn j_vector(&self) -> IndexVector {
        self.column(|r| r.j)
    }

    pub fn diag_lowest_addable(&self) -> IndexVector {
        self.column(|r| r.diag_lowest_addable as i64)
    }

    pub fn diag_highest_addable(&self) -> IndexVector {
        self.column(|r| r.diag_highest_addable as i64)
    }

    pub fn cocharge(&self, formulation: Formulation) -> i64 {
        match formulation {
            Formulation::Lp => self.l_vector().sum(),
            Formulation::Morse => self.m_vector().sum() + self.diag_lowest_addable().sum(),
        }
    }

    pub fn charge(&self, formulation: Formulation) -> i64 {
        match formulation {
            Formulation::Lp => self.i_vector().sum(),
            Formulation::Morse => self.j_vector().sum() + self.diag_highest_addable().sum(),
        }
    }
}

pub fn index_l(seq: &StandardSequence) -> Result<IndexVector> {
    Ok(SequenceTable::compute(seq)?.l_vector())
}

pub fn index_m(seq: &StandardSequence) -> Result<IndexVector> {
    Ok(SequenceTable::compute(seq)?.m_vector())
}

pub fn index_i(seq: &StandardSequence) -> Result<IndexVector> {
    Ok(SequenceTable::compute(seq)?.i_vector())
}

pub fn index_j(seq: &StandardSequence) -> Result<IndexVector> {
    Ok(SequenceTable::compute(seq)?.j_vector())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Formulation {
    Lp,
    #[default]
    Morse,
}

impl fmt::Display for Formulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Formulation::Lp => "lp",
            Formulation::Morse => "morse",
        })
    }
}

impl FromStr for Formulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lp" => Ok(Formulation::Lp),
            "morse" => Ok(Formulation::Morse),
            other => Err(Error::Parse(format!("unknown formulation {other:?}"))),
        }
    }
}

/// Sequence tables and both formulations of both statistics for one tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauStatistics {
    pub tables: Vec<SequenceTable>,
    pub cocharge_lp: i64,
    pub cocharge_morse: i64,
    pub charge_lp: i64,
    pub charge_morse: i64,
    /// `n(weight)`.
    pub n_weight: usize,
    /// Number of cells of the shape with hook length above k.
    pub interior: usize,
}

impl TableauStatistics {
    pub fn compute(t: &KTableau) -> Result<Self> {
        let tables = standard_sequences(t)?
            .iter()
            .map(SequenceTable::compute)
            .collect::<Result<Vec<_>>>()?;
        let sum = |f: &dyn Fn(&SequenceTable) -> i64| tables.iter().map(f).sum::<i64>();
        Ok(TableauStatistics {
            cocharge_lp: sum(&|s| s.cocharge(Formulation::Lp)),
            cocharge_morse: sum(&|s| s.cocharge(Formulation::Morse)),
            charge_lp: sum(&|s| s.charge(Formulation::Lp)),
            charge_morse: sum(&|s| s.charge(Formulation::Morse)),
            n_weight: n_stat(&t.weight_partition()?),
            interior: k_interior(t.shape(), t.k()).len(),
            tables,
        })
    }

    pub fn cocharge(&self, formulation: Formulation) -> i64 {
        match formulation {
            Formulation::Lp => self.cocharge_lp,
            Formulation::Morse => self.cocharge_morse,
        }
    }

    pub fn charge(&self, formulation: Formulation) -> i64 {
        match formulation {
            Formulation::Lp => self.charge_lp,
            Formulation::Morse => self.charge_morse,
        }
    }

    /// `n(weight) - |interior|`, the value charge + cocharge should take.
    pub fn duality_constant(&self) -> i64 {
        self.n_weight as i64 - self.interior as i64
    }
}

pub fn k_cocharge(t: &KTableau, formulation: Formulation) -> Result<i64> {
    let mut total = 0;
    for seq in standard_sequences(t)? {
        total += SequenceTable::compute(&seq)?.cocharge(formulation);
    }
    Ok(total)
}

pub fn k_charge(t: &KTableau, formulation: Formulation) -> Result<i64> {
    let mut total = 0;
    for seq in standard_sequences(t)? {
        total += SequenceTable::compute(&seq)?.charge(formulation);
    }
    Ok(total)
}

/// Charge generating polynomials of the k-tableaux of weight `mu`, grouped by shape.
pub fn charge_table(
    k: usize,
    mu: &Partition,
    formulation: Formulation,
) -> Result<BTreeMap<Partition, TPolynomial>> {
    let tableaux = enumerate_k_tableaux(k, mu.parts(), None)?;
    let charges: Vec<i64> = tableaux
        .par_iter()
        .map(|t| k_charge(t, formulation))
        .collect::<Result<_>>()?;
    let mut table: BTreeMap<Partition, TPolynomial> = BTreeMap::new();
    for (t, charge) in tableaux.iter().zip(charges) {
        let exponent = u32::try_from(charge)
            .map_err(|_| Error::Parse(format!("negative charge {charge} for\n{t}")))?;
        table
            .entry(t.shape().clone())
            .or_default()
            .add_term(exponent, 1);
    }
    Ok(table)
}
