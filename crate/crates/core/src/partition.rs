//! Partitions, lattice cells and cell sets.
//!
//! Diagrams are drawn French style: row 1 is the bottom row and column 1 the
//! leftmost column. A cell `(i, j)` sits on the diagonal `j - i`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest first part or length accepted for a shape.
pub const MAX_DIMENSION: usize = 1_000_000;

/// A lattice cell, `row` counted from the bottom and `col` from the left, both from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `col - row`; positive below and to the right of the main diagonal.
    pub fn diagonal(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn residue(self, modulus: usize) -> Residue {
        Residue::of_diagonal(self.diagonal(), modulus)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A residue class `0..modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Residue(usize);

impl Residue {
    pub fn new(value: usize, modulus: usize) -> Self {
        Residue(value % modulus)
    }

    pub fn of_diagonal(diagonal: i64, modulus: usize) -> Self {
        Residue(diagonal.rem_euclid(modulus as i64) as usize)
    }

    pub fn value(self) -> usize {
        self.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite set of cells, iterated bottom row first, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellSet(BTreeSet<Cell>);

impl CellSet {
    pub fn new() -> Self {
        CellSet(BTreeSet::new())
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        self.0.insert(cell)
    }

    pub fn extend<I: IntoIterator<Item = Cell>>(&mut self, cells: I) {
        self.0.extend(cells)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.0.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().copied()
    }

    pub fn max_row(&self) -> Option<usize> {
        self.0.iter().map(|c| c.row).max()
    }

    pub fn max_diagonal(&self) -> Option<i64> {
        self.0.iter().map(|c| c.diagonal()).max()
    }

    /// Largest column among the row-1 cells.
    pub fn bottom_row_end(&self) -> Option<usize> {
        self.0.iter().filter(|c| c.row == 1).map(|c| c.col).max()
    }

    /// The partition whose diagram is exactly this set, if the set is a lower order ideal.
    pub fn to_partition(&self) -> Option<Partition> {
        let mut rows: Vec<usize> = Vec::new();
        for c in &self.0 {
            if rows.len() < c.row {
                rows.resize(c.row, 0);
            }
            rows[c.row - 1] = rows[c.row - 1].max(c.col);
        }
        let p = Partition::new(rows).ok()?;
        (p.size() == self.len()).then_some(p)
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, c) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// A weakly decreasing sequence of positive parts.
///
/// Ordering is by size, then lexicographically descending, so that
/// `(3) < (2,1) < (1,1,1) < (4)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if let Some(&first) = parts.first() {
            if first > MAX_DIMENSION {
                return Err(Error::ShapeTooLarge(first));
            }
        }
        if parts.len() > MAX_DIMENSION {
            return Err(Error::ShapeTooLarge(parts.len()));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Length of row `row` (1-based), 0 beyond the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return usize::MAX;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Height of column `col` (1-based), 0 beyond the first row's end.
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return usize::MAX;
        }
        self.0.partition_point(|&p| p >= col)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn conjugate(&self) -> Partition {
        Partition((1..=self.first()).map(|c| self.col_len(c)).collect())
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn cell_set(&self) -> CellSet {
        self.cells().collect()
    }

    /// Whether the parts are weakly decreasing; `Partition` values always are,
    /// this is for checking raw compositions.
    pub fn is_partition(parts: &[usize]) -> bool {
        parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// All partitions of `n` with parts at most `max_part`, lexicographically descending.
    pub fn of_size(n: usize, max_part: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions fitting in a box of `rows` rows and `cols` columns.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn go(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(prefix.clone()));
            if prefix.len() == rows {
                return;
            }
            for p in 1..=max {
                prefix.push(p);
                go(rows, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, p) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Parses a comma-separated list of non-negative integers, optionally wrapped
/// in parentheses. Used for partitions, weights and shapes alike.
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim();
    let inner = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
        (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(Error::Parse(format!("unbalanced parentheses in {s:?}"))),
    };
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {tok:?} in {s:?}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}
