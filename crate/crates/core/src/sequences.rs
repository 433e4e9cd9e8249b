//! Standard sequences of a semistandard k-tableau.
//!
//! A sequence picks, for letters `1, 2, ...` in turn, one residue class of that
//! letter's cells. The first entry is the right-most unused `1`; each later
//! entry takes the unused residue of the next letter met first when walking
//! counter-clockwise from the previous residue on a clock labelled `0..=k`
//! clockwise, i.e. the one minimising `(r - r') mod (k+1)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::{Cell, CellSet, Residue};
use crate::tableau::KTableau;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceEntry {
    pub letter: usize,
    pub residue: Residue,
    /// All cells holding `letter` with this residue.
    pub cells: CellSet,
}

impl SequenceEntry {
    /// The cell with the smallest row.
    pub fn lowest(&self) -> Cell {
        self.cells
            .iter()
            .min_by_key(|c| c.row)
            .expect("entries are non-empty")
    }

    /// The cell with the largest row.
    pub fn highest(&self) -> Cell {
        self.cells
            .iter()
            .max_by_key(|c| c.row)
            .expect("entries are non-empty")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardSequence {
    modulus: usize,
    entries: Vec<SequenceEntry>,
}

impl StandardSequence {
    pub fn new(modulus: usize, entries: Vec<SequenceEntry>) -> Self {
        StandardSequence { modulus, entries }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn k(&self) -> usize {
        self.modulus - 1
    }

    pub fn entries(&self) -> &[SequenceEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, letter: usize) -> Result<&SequenceEntry> {
        if letter == 0 {
            return Err(Error::LetterNotInSequence(letter));
        }
        self.entries
            .get(letter - 1)
            .ok_or(Error::LetterNotInSequence(letter))
    }

    pub fn lowest_occurrence(&self, letter: usize) -> Result<Cell> {
        Ok(self.entry(letter)?.lowest())
    }

    pub fn highest_occurrence(&self, letter: usize) -> Result<Cell> {
        Ok(self.entry(letter)?.highest())
    }

    /// Union of the cells of the entries for letters `<= letter`.
    pub fn restrict(&self, letter: usize) -> Result<CellSet> {
        self.entry(letter)?;
        let mut out = CellSet::new();
        for e in &self.entries[..letter] {
            out.extend(e.cells.iter());
        }
        Ok(out)
    }

    /// Number of steps where the next letter kept the previous residue.
    pub fn repeated_residue_steps(&self) -> usize {
        self.entries
            .windows(2)
            .filter(|w| w[0].residue == w[1].residue)
            .count()
    }

    /// Entries as `(letter, residue)` pairs.
    pub fn signature(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .map(|e| (e.letter, e.residue.value()))
            .collect()
    }
}

/// Splits a k-tableau of partition weight into its standard sequences, in
/// construction order.
pub fn standard_sequences(t: &KTableau) -> Result<Vec<StandardSequence>> {
    let weight = t.weight();
    if !weight.iter().all(|&a| a >= 1) || !weight.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::WeightNotPartition(weight.to_vec()));
    }
    if let Some(&part) = weight.iter().find(|&&a| a > t.k()) {
        return Err(Error::WeightPartTooLarge { part, k: t.k() });
    }
    let n = t.modulus();
    let mut groups: Vec<BTreeMap<Residue, CellSet>> = vec![BTreeMap::new(); weight.len()];
    for (cell, letter) in t.cells() {
        let slot = groups.get_mut(letter - 1).ok_or(Error::LetterOutOfRange {
            letter,
            max: weight.len(),
        })?;
        slot.entry(cell.residue(n)).or_default().insert(cell);
    }
    let count = weight.first().copied().unwrap_or(0);
    let mut sequences = Vec::with_capacity(count);
    for _ in 0..count {
        let first = groups[0]
            .iter()
            .max_by_key(|(_, cells)| cells.iter().map(|c| c.col).max())
            .map(|(&r, _)| r)
            .ok_or_else(|| {
                Error::NotSemistandard("letter 1 has fewer residues than its weight".into())
            })?;
        let cells = groups[0].remove(&first).expect("present");
        let mut entries = vec![SequenceEntry {
            letter: 1,
            residue: first,
            cells,
        }];
        let mut current = first;
        for (idx, slot) in groups.iter_mut().enumerate().skip(1) {
            let Some(next) = slot
                .keys()
                .copied()
                .min_by_key(|r| (current.value() + n - r.value()) % n)
            else {
                break;
            };
            let cells = slot.remove(&next).expect("present");
            entries.push(SequenceEntry {
                letter: idx + 1,
                residue: next,
                cells,
            });
            current = next;
        }
        sequences.push(StandardSequence::new(n, entries));
    }
    Ok(sequences)
}

/// Cells of `seq` with letters `<= letter`.
pub fn restrict_sequence(seq: &StandardSequence, letter: usize) -> Result<CellSet> {
    seq.restrict(letter)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> KTableau {
        // k = 4, weight (2,2,2,2,2,2,1), shape (9,5,3,2,1,1)
        KTableau::from_rows(
            4,
            vec![
                vec![1, 1, 2, 3, 4, 4, 5, 5, 6],
                vec![2, 3, 5, 5, 6],
                vec![3, 4, 7],
                vec![5, 6],
                vec![6],
                vec![7],
            ],
        )
        .unwrap()
    }

    #[test]
    fn two_sequences_with_expected_residues() {
        let t = sample();
        assert_eq!(t.weight(), &[2, 2, 2, 2, 2, 2, 1]);
        let seqs = standard_sequences(&t).unwrap();
        assert_eq!(seqs.len(), 2);
        assert_eq!(
            seqs[0].signature(),
            [(1, 1), (2, 4), (3, 3), (4, 0), (5, 2), (6, 1), (7, 0)]
        );
        assert_eq!(
            seqs[1].signature(),
            [(1, 0), (2, 2), (3, 0), (4, 4), (5, 1), (6, 3)]
        );
    }

    #[test]
    fn sequences_partition_the_cells() {
        let t = sample();
        let seqs = standard_sequences(&t).unwrap();
        let mut seen = CellSet::new();
        for s in &seqs {
            for e in s.entries() {
                for c in e.cells.iter() {
                    assert!(seen.insert(c), "{c} in two sequences");
                    assert_eq!(t.letter(c), Some(e.letter));
                    assert_eq!(c.residue(5), e.residue);
                }
            }
        }
        assert_eq!(seen.len(), t.shape().size());
    }

    #[test]
    fn occurrences() {
        let seqs = standard_sequences(&sample()).unwrap();
        assert_eq!(seqs[0].highest_occurrence(7), Ok(Cell::new(6, 1)));
        assert_eq!(seqs[0].lowest_occurrence(7), Ok(Cell::new(3, 3)));
        assert_eq!(
            seqs[1].lowest_occurrence(9),
            Err(Error::LetterNotInSequence(9))
        );
        assert_eq!(
            seqs[1].highest_occurrence(7),
            Err(Error::LetterNotInSequence(7))
        );
        assert_eq!(seqs[1].lowest_occurrence(1), seqs[1].highest_occurrence(1));
    }

    #[test]
    fn restricted_cells() {
        let seqs = standard_sequences(&sample()).unwrap();
        let expected: CellSet = [(1, 1), (1, 3), (1, 5), (1, 7), (2, 2), (2, 3), (3, 2)]
            .into_iter()
            .map(|(i, j)| Cell::new(i, j))
            .collect();
        assert_eq!(restrict_sequence(&seqs[1], 5), Ok(expected));
        assert_eq!(
            seqs[0].restrict(1).unwrap().iter().collect::<Vec<_>>(),
            [Cell::new(1, 2)]
        );
        assert_eq!(seqs[1].restrict(7), Err(Error::LetterNotInSequence(7)));
    }

    #[test]
    fn standard_tableau_has_one_sequence() {
        let t = KTableau::from_rows(
            4,
            vec![vec![1, 2, 3, 5, 7, 9], vec![4, 6], vec![5, 7], vec![8]],
        )
        .unwrap();
        let seqs = standard_sequences(&t).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].len(), 9);
        let all: CellSet = t.cells().map(|(c, _)| c).collect();
        assert_eq!(seqs[0].restrict(9).unwrap(), all);
        assert_eq!(seqs[0].lowest_occurrence(5), Ok(Cell::new(1, 4)));
        assert_eq!(seqs[0].highest_occurrence(5), Ok(Cell::new(3, 1)));
        assert_eq!(
            seqs[0].restrict(5).unwrap(),
            t.restrict_leq(5).unwrap().shape().cell_set()
        );
    }

    #[test]
    fn non_partition_weight_is_rejected() {
        let t = KTableau::new(3, vec![1, 2], vec![vec![1, 2, 2]]).unwrap();
        assert_eq!(
            standard_sequences(&t),
            Err(Error::WeightNotPartition(vec![1, 2]))
        );
    }
}
