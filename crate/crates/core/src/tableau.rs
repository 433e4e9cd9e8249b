//! k-tableaux: a filling of a (k+1)-core in which the cells carrying letter `i`
//! cover exactly `weight[i-1]` distinct residues mod k+1.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cores::{hooks, is_n_core, k_bounded_hooks};
use crate::error::{Error, Result};
use crate::partition::{Cell, CellSet, Partition, Residue};

/// First invariant a filling breaks, with the cell that shows it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    LetterOutOfRange {
        cell: Cell,
        letter: usize,
        max: usize,
    },
    RowDecreases {
        cell: Cell,
    },
    ColumnNotStrict {
        cell: Cell,
    },
    ShapeNotCore {
        modulus: usize,
        cell: Cell,
    },
    EmptyWeightPart {
        letter: usize,
    },
    WeightPartTooLarge {
        letter: usize,
        part: usize,
        k: usize,
    },
    ResidueCount {
        letter: usize,
        expected: usize,
        found: usize,
        cell: Cell,
    },
    BoundedHooks {
        weight_size: usize,
        bounded_hooks: usize,
    },
    RestrictionNotCore {
        letter: usize,
        cell: Cell,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LetterOutOfRange { cell, letter, max } => {
                write!(f, "cell {cell} holds letter {letter}, outside 1..={max}")
            }
            Violation::RowDecreases { cell } => write!(f, "row decreases after cell {cell}"),
            Violation::ColumnNotStrict { cell } => {
                write!(f, "column does not strictly increase above cell {cell}")
            }
            Violation::ShapeNotCore { modulus, cell } => {
                write!(
                    f,
                    "shape is not a {modulus}-core: cell {cell} has hook length {modulus}"
                )
            }
            Violation::EmptyWeightPart { letter } => write!(f, "letter {letter} does not occur"),
            Violation::WeightPartTooLarge { letter, part, k } => {
                write!(f, "weight part {part} of letter {letter} exceeds k = {k}")
            }
            Violation::ResidueCount {
                letter,
                expected,
                found,
                cell,
            } => write!(
                f,
                "letter {letter} covers {found} residues, expected {expected} (first cell {cell})"
            ),
            Violation::BoundedHooks {
                weight_size,
                bounded_hooks,
            } => write!(
                f,
                "weight sums to {weight_size} but the shape has {bounded_hooks} k-bounded hooks"
            ),
            Violation::RestrictionNotCore { letter, cell } => write!(
                f,
                "cells with letters <= {letter} do not form a core (at cell {cell})"
            ),
        }
    }
}

/// A filled (k+1)-core together with its claimed weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KTableau {
    k: usize,
    weight: Vec<usize>,
    shape: Partition,
    /// Bottom row first.
    rows: Vec<Vec<usize>>,
}

impl KTableau {
    /// Builds a filling with an explicit weight. Only the diagram structure is
    /// checked here; call [`KTableau::validate`] for the k-tableau conditions.
    pub fn new(k: usize, weight: Vec<usize>, rows: Vec<Vec<usize>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        if let Some(cell) = rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(j, &a)| (Cell::new(i + 1, j + 1), a))
            })
            .find_map(|(c, a)| (a == 0).then_some(c))
        {
            return Err(Error::Parse(format!("cell {cell} holds letter 0")));
        }
        Ok(KTableau {
            k,
            weight,
            shape,
            rows,
        })
    }

    /// Builds a filling whose weight is read off as the number of residues per letter.
    pub fn from_rows(k: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut t = KTableau::new(k, Vec::new(), rows)?;
        t.weight = t.residue_counts();
        Ok(t)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> usize {
        self.k + 1
    }

    pub fn weight(&self) -> &[usize] {
        &self.weight
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Rows, bottom row first.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn num_letters(&self) -> usize {
        self.weight.len()
    }

    pub fn letter(&self, cell: Cell) -> Option<usize> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &a)| (Cell::new(i + 1, j + 1), a))
        })
    }

    pub fn letter_cells(&self, letter: usize) -> CellSet {
        self.cells()
            .filter(|&(_, a)| a == letter)
            .map(|(c, _)| c)
            .collect()
    }

    pub fn residue(&self, cell: Cell) -> Residue {
        cell.residue(self.modulus())
    }

    /// Number of distinct residues carried by each letter `1..=max letter`.
    pub fn residue_counts(&self) -> Vec<usize> {
        let max = self.cells().map(|(_, a)| a).max().unwrap_or(0);
        let mut sets = vec![BTreeSet::new(); max];
        for (c, a) in self.cells() {
            sets[a - 1].insert(self.residue(c));
        }
        sets.iter().map(BTreeSet::len).collect()
    }

    /// The weight as a partition; fails for compositions that are not weakly decreasing.
    pub fn weight_partition(&self) -> Result<Partition> {
        if Partition::is_partition(&self.weight) {
            Partition::new(self.weight.clone())
        } else {
            Err(Error::WeightNotPartition(self.weight.clone()))
        }
    }

    /// Letters read bottom row to top row, each left to right.
    pub fn bottom_up_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Checks every k-tableau condition and reports the first one that fails.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let max = self.weight.len();
        for (cell, letter) in self.cells() {
            if letter > max {
                return Err(Violation::LetterOutOfRange { cell, letter, max });
            }
        }
        for (cell, letter) in self.cells() {
            if let Some(right) = self.letter(Cell::new(cell.row, cell.col + 1)) {
                if right < letter {
                    return Err(Violation::RowDecreases { cell });
                }
            }
            if let Some(above) = self.letter(Cell::new(cell.row + 1, cell.col)) {
                if above <= letter {
                    return Err(Violation::ColumnNotStrict { cell });
                }
            }
        }
        let n = self.modulus();
        if let Some((cell, _)) = hooks(&self.shape).find(|&(_, h)| h == n) {
            return Err(Violation::ShapeNotCore { modulus: n, cell });
        }
        for (idx, &part) in self.weight.iter().enumerate() {
            let letter = idx + 1;
            if part == 0 {
                return Err(Violation::EmptyWeightPart { letter });
            }
            if part > self.k {
                return Err(Violation::WeightPartTooLarge {
                    letter,
                    part,
                    k: self.k,
                });
            }
        }
        let found = self.residue_counts();
        for (idx, &expected) in self.weight.iter().enumerate() {
            let letter = idx + 1;
            let got = found.get(idx).copied().unwrap_or(0);
            if got != expected {
                let cell = self
                    .letter_cells(letter)
                    .iter()
                    .next()
                    .unwrap_or(Cell::new(1, 1));
                return Err(Violation::ResidueCount {
                    letter,
                    expected,
                    found: got,
                    cell,
                });
            }
        }
        let weight_size: usize = self.weight.iter().sum();
        let bounded_hooks = k_bounded_hooks(&self.shape, self.k);
        if weight_size != bounded_hooks {
            return Err(Violation::BoundedHooks {
                weight_size,
                bounded_hooks,
            });
        }
        for letter in 1..=max {
            let cells: CellSet = self
                .cells()
                .filter(|&(_, a)| a <= letter)
                .map(|(c, _)| c)
                .collect();
            let is_core = cells
                .to_partition()
                .map(|p| is_n_core(&p, n).unwrap_or(false))
                .unwrap_or(false);
            if !is_core {
                let cell = self
                    .letter_cells(letter)
                    .iter()
                    .next()
                    .unwrap_or(Cell::new(1, 1));
                return Err(Violation::RestrictionNotCore { letter, cell });
            }
        }
        Ok(())
    }

    /// The sub-tableau on the cells holding letters `<= letter`.
    pub fn restrict_leq(&self, letter: usize) -> Result<KTableau> {
        if letter == 0 || letter > self.num_letters() {
            return Err(Error::LetterOutOfRange {
                letter,
                max: self.num_letters(),
            });
        }
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .copied()
                    .take_while(|&a| a <= letter)
                    .collect::<Vec<_>>()
            })
            .take_while(|row| !row.is_empty())
            .collect();
        let t = KTableau::new(self.k, self.weight[..letter].to_vec(), rows)?;
        if t.shape.size() != self.cells().filter(|&(_, a)| a <= letter).count() {
            return Err(Error::NotSemistandard(format!(
                "cells with letters <= {letter} are not a partition diagram"
            )));
        }
        Ok(t)
    }

    /// Text form: a `k=<k>` header, then one line per row, top row first, with
    /// entries `letter_residue` separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut out = format!("k={}\n", self.k);
        for (i, row) in self.rows.iter().enumerate().rev() {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, a)| format!("{a}_{}", self.residue(Cell::new(i + 1, j + 1))))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text form. Entries may be `letter` or `letter_residue`; a
    /// residue annotation must match the cell it sits in. The weight is read
    /// off the filling.
    pub fn parse_text(text: &str) -> Result<KTableau> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?;
        let k: usize = header
            .strip_prefix("k=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected header k=<k>, got {header:?}")))?;
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let mut top_first: Vec<Vec<(usize, Option<usize>)>> = Vec::new();
        for line in lines {
            let row = line
                .split_whitespace()
                .map(|tok| {
                    let (letter, res) = match tok.split_once('_') {
                        Some((a, r)) => (a, Some(r)),
                        None => (tok, None),
                    };
                    let letter = letter
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?;
                    let res = res
                        .map(|r| {
                            r.parse::<usize>()
                                .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))
                        })
                        .transpose()?;
                    Ok((letter, res))
                })
                .collect::<Result<Vec<_>>>()?;
            top_first.push(row);
        }
        top_first.reverse();
        let n = k + 1;
        let mut rows = Vec::with_capacity(top_first.len());
        for (i, row) in top_first.into_iter().enumerate() {
            let mut letters = Vec::with_capacity(row.len());
            for (j, (letter, res)) in row.into_iter().enumerate() {
                let cell = Cell::new(i + 1, j + 1);
                if let Some(r) = res {
                    if r != cell.residue(n).value() {
                        return Err(Error::Parse(format!(
                            "cell {cell} is annotated with residue {r} but has residue {}",
                            cell.residue(n)
                        )));
                    }
                }
                letters.push(letter);
            }
            rows.push(letters);
        }
        KTableau::from_rows(k, rows)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(TableauJson {
            k: self.k,
            shape: self.shape.parts().to_vec(),
            rows: self.rows.clone(),
        })
        .expect("tableau serializes")
    }

    /// JSON form `{"k":..,"shape":[..],"rows":[[..],..]}` with rows bottom first.
    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn parse_json(text: &str) -> Result<KTableau> {
        let raw: TableauJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let t = KTableau::from_rows(raw.k, raw.rows)?;
        if t.shape.parts() != raw.shape.as_slice() {
            return Err(Error::Parse(format!(
                "shape {:?} does not match row lengths {}",
                raw.shape, t.shape
            )));
        }
        Ok(t)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    k: usize,
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

/// Canonical order: shape, then the bottom-up reading word.
impl Ord for KTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.bottom_up_word().cmp(&other.bottom_up_word()))
            .then_with(|| self.k.cmp(&other.k))
            .then_with(|| self.weight.cmp(&other.weight))
    }
}

impl PartialOrd for KTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
