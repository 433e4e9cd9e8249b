//! Exhaustive generation of k-tableaux of a given weight.
//!
//! Two strategies produce the same set:
//!
//! * [`Strategy::Oracle`] scans every partition in an `m x m` box (`m` the weight
//!   size), keeps the (k+1)-cores with `m` bounded hooks, backtracks over all
//!   row-weak, column-strict fillings and keeps those that validate.
//! * [`Strategy::Fast`] grows the tableau one letter at a time. For letter `i`
//!   it tries each set `R` of `weight[i]` residues, adds all addable corners of
//!   each residue of `R` exactly once, walking every run of cyclically
//!   consecutive residues upwards, and keeps the result when the new cells form
//!   a horizontal strip.
//!
//! Every core with `m` bounded hooks fits the `m x m` box: each row and each
//! column holds at least one cell of hook length `<= k`.

use std::collections::BTreeSet;

use crate::cores::{add_residue, is_n_core, k_bounded_hooks};
use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, Residue};
use crate::tableau::KTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Oracle,
    Fast,
}

fn check_weight(k: usize, weight: &[usize]) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if weight.contains(&0) {
        return Err(Error::InvalidPartition(format!(
            "weight {weight:?} has a zero part"
        )));
    }
    if let Some(&part) = weight.iter().find(|&&a| a > k) {
        return Err(Error::WeightPartTooLarge { part, k });
    }
    Ok(())
}

/// All k-tableaux of the given weight (and shape), in canonical order, using [`Strategy::Fast`].
pub fn enumerate_k_tableaux(
    k: usize,
    weight: &[usize],
    shape: Option<&Partition>,
) -> Result<Vec<KTableau>> {
    enumerate_with(Strategy::Fast, k, weight, shape)
}

pub fn enumerate_with(
    strategy: Strategy,
    k: usize,
    weight: &[usize],
    shape: Option<&Partition>,
) -> Result<Vec<KTableau>> {
    check_weight(k, weight)?;
    let mut out = match strategy {
        Strategy::Oracle => oracle(k, weight, shape),
        Strategy::Fast => fast(k, weight, shape),
    };
    out.sort();
    Ok(out)
}

/// Candidate shapes for the oracle: (k+1)-cores with exactly `m` bounded hooks.
pub fn oracle_shapes(k: usize, m: usize) -> Vec<Partition> {
    Partition::in_box(m, m)
        .into_iter()
        .filter(|p| is_n_core(p, k + 1).unwrap_or(false) && k_bounded_hooks(p, k) == m)
        .collect()
}

fn oracle(k: usize, weight: &[usize], shape: Option<&Partition>) -> Vec<KTableau> {
    let m: usize = weight.iter().sum();
    let shapes: Vec<Partition> = oracle_shapes(k, m)
        .into_iter()
        .filter(|p| shape.is_none_or(|s| s == p))
        .collect();
    let mut out = Vec::new();
    for shape in shapes {
        let mut filler = Filler::new(k, weight, &shape);
        filler.run(0, &mut out);
    }
    out
}

struct Filler<'a> {
    k: usize,
    weight: &'a [usize],
    cells: Vec<Cell>,
    rows: Vec<Vec<usize>>,
    /// `uses[letter-1][residue]` = number of cells of that letter on that residue.
    uses: Vec<Vec<usize>>,
    distinct: Vec<usize>,
}

impl<'a> Filler<'a> {
    fn new(k: usize, weight: &'a [usize], shape: &Partition) -> Self {
        Filler {
            k,
            weight,
            cells: shape.cells().collect(),
            rows: shape
                .parts()
                .iter()
                .map(|&len| Vec::with_capacity(len))
                .collect(),
            uses: vec![vec![0; k + 1]; weight.len()],
            distinct: vec![0; weight.len()],
        }
    }

    fn run(&mut self, idx: usize, out: &mut Vec<KTableau>) {
        if idx == self.cells.len() {
            if self.distinct.as_slice() != self.weight {
                return;
            }
            let t = KTableau::new(self.k, self.weight.to_vec(), self.rows.clone())
                .expect("filling of a partition");
            if t.is_valid() {
                out.push(t);
            }
            return;
        }
        let c = self.cells[idx];
        let mut lo = 1;
        if c.col > 1 {
            lo = lo.max(self.rows[c.row - 1][c.col - 2]);
        }
        if c.row > 1 {
            lo = lo.max(self.rows[c.row - 2][c.col - 1] + 1);
        }
        let r = c.residue(self.k + 1).value();
        for letter in lo..=self.weight.len() {
            let slot = letter - 1;
            let fresh = self.uses[slot][r] == 0;
            if fresh && self.distinct[slot] == self.weight[slot] {
                continue;
            }
            self.uses[slot][r] += 1;
            if fresh {
                self.distinct[slot] += 1;
            }
            self.rows[c.row - 1].push(letter);
            self.run(idx + 1, out);
            self.rows[c.row - 1].pop();
            self.uses[slot][r] -= 1;
            if fresh {
                self.distinct[slot] -= 1;
            }
        }
    }
}

/// Residues of `set` ordered so that each maximal run of cyclically consecutive
/// residues is listed from its bottom end upwards. `set` must miss at least one residue.
pub fn run_order(set: &[usize], n: usize) -> Vec<usize> {
    let members: BTreeSet<usize> = set.iter().copied().collect();
    let mut out = Vec::with_capacity(members.len());
    for &r in &members {
        if members.contains(&((r + n - 1) % n)) {
            continue;
        }
        let mut x = r;
        while members.contains(&x) && out.len() < members.len() {
            out.push(x);
            x = (x + 1) % n;
        }
    }
    out
}

/// Adds the residues of `set` to `core` in run order. Returns the new core and
/// the added cells, or `None` if some residue has no addable corner.
pub fn grow_strip(core: &Partition, set: &[usize], n: usize) -> Option<(Partition, Vec<Cell>)> {
    let mut current = core.clone();
    for r in run_order(set, n) {
        current = add_residue(&current, Residue::new(r, n), n)?;
    }
    let added: Vec<Cell> = current.cells().filter(|c| !core.contains(*c)).collect();
    Some((current, added))
}

fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < size - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

fn fast(k: usize, weight: &[usize], shape: Option<&Partition>) -> Vec<KTableau> {
    let n = k + 1;
    let subsets: Vec<Vec<Vec<usize>>> = weight.iter().map(|&a| combinations(n, a)).collect();
    let mut out = Vec::new();
    let mut stack = vec![(0usize, Partition::empty(), Vec::<Vec<usize>>::new())];
    while let Some((letter_idx, core, rows)) = stack.pop() {
        if letter_idx == weight.len() {
            if shape.is_none_or(|s| s == &core) {
                let t = KTableau::new(k, weight.to_vec(), rows).expect("grown from a partition");
                debug_assert!(t.is_valid(), "{t}");
                out.push(t);
            }
            continue;
        }
        for set in &subsets[letter_idx] {
            let Some((next, added)) = grow_strip(&core, set, n) else {
                continue;
            };
            let columns: BTreeSet<usize> = added.iter().map(|c| c.col).collect();
            if columns.len() != added.len() {
                continue;
            }
            if let Some(target) = shape {
                if !next.cells().all(|c| target.contains(c)) {
                    continue;
                }
            }
            let mut next_rows = rows.clone();
            for c in &added {
                if next_rows.len() < c.row {
                    next_rows.resize_with(c.row, Vec::new);
                }
                next_rows[c.row - 1].push(letter_idx + 1);
            }
            stack.push((letter_idx + 1, next, next_rows));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes(ts: &[KTableau]) -> Vec<String> {
        ts.iter().map(|t| t.shape().to_string()).collect()
    }

    #[test]
    fn weight_321_at_k3() {
        let ts = enumerate_k_tableaux(3, &[3, 2, 1], None).unwrap();
        assert_eq!(shapes(&ts), ["(5,2,1)", "(6,3)"]);
        assert_eq!(ts[0].rows(), &[vec![1, 1, 1, 2, 2], vec![2, 2], vec![3]]);
        assert_eq!(ts[1].rows(), &[vec![1, 1, 1, 2, 2, 3], vec![2, 2, 3]]);
    }

    #[test]
    fn standard_weight_four_at_k2() {
        let ts = enumerate_k_tableaux(2, &[1, 1, 1, 1], None).unwrap();
        assert_eq!(shapes(&ts), ["(3,1,1)", "(3,1,1)", "(4,2)", "(2,2,1,1)"]);
        let expected = [
            vec![vec![1, 2, 3], vec![3], vec![4]],
            vec![vec![1, 3, 4], vec![2], vec![3]],
            vec![vec![1, 2, 3, 4], vec![3, 4]],
            vec![vec![1, 3], vec![2, 4], vec![3], vec![4]],
        ];
        for (t, rows) in ts.iter().zip(expected) {
            assert_eq!(t.rows(), rows.as_slice());
        }
    }

    #[test]
    fn single_letter() {
        for k in 1..6 {
            let ts = enumerate_k_tableaux(k, &[1], None).unwrap();
            assert_eq!(ts.len(), 1);
            assert_eq!(ts[0].rows(), &[vec![1]]);
        }
        assert_eq!(enumerate_k_tableaux(3, &[], None).unwrap().len(), 1);
    }

    #[test]
    fn errors() {
        assert_eq!(
            enumerate_k_tableaux(2, &[3], None),
            Err(Error::WeightPartTooLarge { part: 3, k: 2 })
        );
        assert_eq!(enumerate_k_tableaux(0, &[1], None), Err(Error::ZeroK));
        assert!(enumerate_k_tableaux(2, &[1, 0], None).is_err());
    }

    #[test]
    fn shape_filter() {
        let shape: Partition = "(3,1,1)".parse().unwrap();
        let fast = enumerate_k_tableaux(2, &[1, 1, 1, 1], Some(&shape)).unwrap();
        let oracle = enumerate_with(Strategy::Oracle, 2, &[1, 1, 1, 1], Some(&shape)).unwrap();
        assert_eq!(fast.len(), 2);
        assert_eq!(fast, oracle);
    }

    #[test]
    fn run_order_walks_runs_upwards() {
        assert_eq!(run_order(&[1, 2, 3], 4), [1, 2, 3]);
        assert_eq!(run_order(&[0, 3], 4), [3, 0]);
        assert_eq!(run_order(&[0, 2, 4], 5), [2, 4, 0]);
        assert_eq!(run_order(&[], 3), Vec::<usize>::new());
    }

    #[test]
    fn letter_one_is_a_bottom_strip() {
        for k in 1..=4 {
            for a in 1..=k {
                for t in enumerate_k_tableaux(k, &[a, 1], None).unwrap() {
                    let ones: Vec<Cell> = t.letter_cells(1).iter().collect();
                    let expect: Vec<Cell> = (1..=a).map(|j| Cell::new(1, j)).collect();
                    assert_eq!(ones, expect);
                }
            }
        }
    }

    #[test]
    fn small_oracle_agreement() {
        for k in 1..=3 {
            for weight in [
                vec![1, 1, 1],
                vec![2, 1],
                vec![1, 2],
                vec![2, 2],
                vec![1, 1, 2],
            ] {
                if weight.iter().any(|&a| a > k) {
                    continue;
                }
                let fast = enumerate_with(Strategy::Fast, k, &weight, None).unwrap();
                let oracle = enumerate_with(Strategy::Oracle, k, &weight, None).unwrap();
                assert_eq!(fast, oracle, "k={k} weight={weight:?}");
            }
        }
    }
}
