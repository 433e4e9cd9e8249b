//! Hook lengths, n-cores, residues and the corner calculus on partitions.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::partition::{Cell, CellSet, Partition, Residue};

fn check_modulus(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidModulus(n))
    } else {
        Ok(())
    }
}

/// Arm + leg + 1.
pub fn hook_length(shape: &Partition, cell: Cell) -> Result<usize> {
    if !shape.contains(cell) {
        return Err(Error::CellOutsideShape(cell));
    }
    let arm = shape.row_len(cell.row) - cell.col;
    let leg = shape.col_len(cell.col) - cell.row;
    Ok(arm + leg + 1)
}

/// Every cell of `shape` paired with its hook length, bottom row first.
pub fn hooks(shape: &Partition) -> impl Iterator<Item = (Cell, usize)> + '_ {
    let conj = shape.conjugate();
    shape.cells().map(move |c| {
        let arm = shape.row_len(c.row) - c.col;
        let leg = conj.parts()[c.col - 1] - c.row;
        (c, arm + leg + 1)
    })
}

pub fn is_n_core(shape: &Partition, n: usize) -> Result<bool> {
    check_modulus(n)?;
    Ok(hooks(shape).all(|(_, h)| h != n))
}

pub fn residue(cell: Cell, n: usize) -> Residue {
    debug_assert!(n >= 2);
    cell.residue(n)
}

/// Cells `(i,j)` outside `shape` with `(i,j-1)` and `(i-1,j)` inside, where row 0 and
/// column 0 count as filled. Returned bottom row first.
pub fn addable_corners(shape: &Partition, n: usize) -> Vec<(Cell, Residue)> {
    (1..=shape.len() + 1)
        .filter_map(|row| {
            let col = shape.row_len(row) + 1;
            (shape.row_len(row - 1) >= col).then(|| {
                let c = Cell::new(row, col);
                (c, c.residue(n))
            })
        })
        .collect()
}

/// Cells `(i,j)` of `shape` with `(i,j+1)` and `(i+1,j)` outside. Bottom row first.
pub fn removable_corners(shape: &Partition, n: usize) -> Vec<(Cell, Residue)> {
    (1..=shape.len())
        .filter_map(|row| {
            let col = shape.row_len(row);
            (shape.row_len(row + 1) < col).then(|| {
                let c = Cell::new(row, col);
                (c, c.residue(n))
            })
        })
        .collect()
}

/// Cells with hook length strictly larger than `k`.
pub fn k_interior(shape: &Partition, k: usize) -> CellSet {
    hooks(shape)
        .filter(|&(_, h)| h > k)
        .map(|(c, _)| c)
        .collect()
}

/// Number of cells with hook length at most `k`.
pub fn k_bounded_hooks(shape: &Partition, k: usize) -> usize {
    hooks(shape).filter(|&(_, h)| h <= k).count()
}

/// `n(mu) = sum (i-1) mu_i`.
pub fn n_stat(mu: &Partition) -> usize {
    mu.parts().iter().enumerate().map(|(i, &p)| i * p).sum()
}

/// Adds every addable corner of residue `r`. `None` when there is no such corner.
pub fn add_residue(shape: &Partition, r: Residue, n: usize) -> Option<Partition> {
    let corners: Vec<Cell> = addable_corners(shape, n)
        .into_iter()
        .filter(|&(_, res)| res == r)
        .map(|(c, _)| c)
        .collect();
    if corners.is_empty() {
        return None;
    }
    let mut parts = shape.parts().to_vec();
    for c in corners {
        if c.row > parts.len() {
            parts.push(0);
        }
        parts[c.row - 1] += 1;
    }
    Some(Partition::new(parts).expect("adding addable corners keeps a partition"))
}

/// All n-cores with at most `max_bounded_hooks` cells of hook length below `n`,
/// grown breadth first from the empty core by adding residue classes of addable
/// corners. Sorted in canonical partition order.
pub fn enumerate_cores(n: usize, max_bounded_hooks: usize) -> Result<Vec<Partition>> {
    check_modulus(n)?;
    let k = n - 1;
    let mut seen: BTreeSet<Partition> = BTreeSet::new();
    seen.insert(Partition::empty());
    let mut queue = VecDeque::from([Partition::empty()]);
    while let Some(core) = queue.pop_front() {
        for r in 0..n {
            let Some(next) = add_residue(&core, Residue::new(r, n), n) else {
                continue;
            };
            if k_bounded_hooks(&next, k) <= max_bounded_hooks && !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// No residue labels both an addable and a removable corner.
pub fn has_corner_exclusion(shape: &Partition, n: usize) -> bool {
    let addable: BTreeSet<Residue> = addable_corners(shape, n)
        .into_iter()
        .map(|(_, r)| r)
        .collect();
    removable_corners(shape, n)
        .into_iter()
        .all(|(_, r)| !addable.contains(&r))
}

/// Cells `(i,j)` with `(i+1,j+1)` outside the shape.
pub fn extremal_cells(shape: &Partition) -> Vec<Cell> {
    shape
        .cells()
        .filter(|c| !shape.contains(Cell::new(c.row + 1, c.col + 1)))
        .collect()
}

/// Checks the propagation property of extremal cells of equal residue: row ends
/// propagate north-west and column tops propagate south-east. Returns the first
/// offending pair `(c, c')`.
pub fn extremal_propagation_violation(shape: &Partition, n: usize) -> Option<(Cell, Cell)> {
    let ext = extremal_cells(shape);
    let row_end = |c: Cell| c.col == shape.row_len(c.row);
    let col_top = |c: Cell| c.row == shape.col_len(c.col);
    for &c in &ext {
        for &c2 in &ext {
            if c == c2 || c.residue(n) != c2.residue(n) {
                continue;
            }
            let north_west = c2.row >= c.row && c2.col <= c.col;
            let south_east = c2.row <= c.row && c2.col >= c.col;
            if north_west && row_end(c) && !row_end(c2) {
                return Some((c, c2));
            }
            if south_east && col_top(c) && !col_top(c2) {
                return Some((c, c2));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Counts arm and leg by walking the diagram cell by cell.
    fn hook_by_walking(shape: &Partition, c: Cell) -> usize {
        let arm = (c.col + 1..)
            .take_while(|&j| shape.contains(Cell::new(c.row, j)))
            .count();
        let leg = (c.row + 1..)
            .take_while(|&i| shape.contains(Cell::new(i, c.col)))
            .count();
        arm + leg + 1
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(hook_length(&p("(1)"), Cell::new(1, 1)), Ok(1));
        assert_eq!(hook_length(&p("(6,2,2,1)"), Cell::new(1, 1)), Ok(9));
        assert_eq!(
            hook_length(&p("(6,2,2,1)"), Cell::new(2, 3)),
            Err(Error::CellOutsideShape(Cell::new(2, 3)))
        );
        let shape = p("(7,3,2,1,1)");
        assert!(hooks(&shape).all(|(_, h)| h != 5));
        for partition in Partition::of_size(9, 9) {
            for (c, h) in hooks(&partition) {
                assert_eq!(h, hook_by_walking(&partition, c));
            }
        }
    }

    #[test]
    fn core_predicate() {
        assert_eq!(is_n_core(&p("(7,3,2,1,1)"), 5), Ok(true));
        assert_eq!(is_n_core(&Partition::empty(), 2), Ok(true));
        assert_eq!(is_n_core(&Partition::empty(), 9), Ok(true));
        assert_eq!(is_n_core(&p("(1,1)"), 2), Ok(false));
        assert_eq!(is_n_core(&p("(1)"), 1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn residues() {
        assert_eq!(residue(Cell::new(1, 1), 5).value(), 0);
        assert_eq!(residue(Cell::new(2, 1), 5).value(), 4);
        assert_eq!(residue(Cell::new(1, 6), 5).value(), 0);
        for i in 1..6 {
            for j in 1..6 {
                assert_eq!(
                    residue(Cell::new(i, j), 4),
                    residue(Cell::new(i + 1, j + 1), 4)
                );
            }
        }
    }

    #[test]
    fn addable() {
        let got = addable_corners(&p("(2)"), 5);
        assert_eq!(
            got,
            [
                (Cell::new(1, 3), Residue::new(2, 5)),
                (Cell::new(2, 1), Residue::new(4, 5))
            ]
        );
        assert_eq!(
            addable_corners(&Partition::empty(), 5),
            [(Cell::new(1, 1), Residue::new(0, 5))]
        );
        let got = addable_corners(&p("(4,1,1)"), 5);
        assert!(got.contains(&(Cell::new(1, 5), Residue::new(4, 5))));
        assert!(got.contains(&(Cell::new(4, 1), Residue::new(2, 5))));
    }

    #[test]
    fn removable() {
        assert_eq!(
            removable_corners(&p("(1)"), 3),
            [(Cell::new(1, 1), Residue::new(0, 3))]
        );
        assert_eq!(
            removable_corners(&p("(5,2,1)"), 4),
            [
                (Cell::new(1, 5), Residue::new(0, 4)),
                (Cell::new(2, 2), Residue::new(0, 4)),
                (Cell::new(3, 1), Residue::new(2, 4)),
            ]
        );
        assert!(removable_corners(&Partition::empty(), 4).is_empty());
    }

    #[test]
    fn interior_and_bounded_hooks() {
        assert_eq!(k_interior(&p("(6,2,2,1)"), 4).len(), 2);
        assert_eq!(k_interior(&p("(9,5,3,2,1,1)"), 4).len(), 8);
        assert_eq!(k_bounded_hooks(&p("(5,2,1)"), 3), 6);
        assert_eq!(k_bounded_hooks(&p("(6,2,2,1)"), 4), 9);
        assert_eq!(k_bounded_hooks(&Partition::empty(), 4), 0);
        // the interior is empty exactly when k > first part + length - 2
        for shape in Partition::in_box(5, 5) {
            for k in 1..10 {
                let empty = k_interior(&shape, k).is_empty();
                let large = shape.is_empty() || k + 2 > shape.first() + shape.len();
                assert_eq!(empty, large, "{shape} k={k}");
                assert_eq!(
                    k_bounded_hooks(&shape, k) + k_interior(&shape, k).len(),
                    shape.size()
                );
            }
        }
    }

    #[test]
    fn n_statistic() {
        assert_eq!(n_stat(&Partition::empty()), 0);
        assert_eq!(n_stat(&Partition::new(vec![1; 9]).unwrap()), 36);
        assert_eq!(n_stat(&p("(2,2,2,2,2,2,1)")), 36);
    }

    #[test]
    fn core_enumeration() {
        assert_eq!(
            enumerate_cores(2, 2).unwrap(),
            [Partition::empty(), p("(1)"), p("(2,1)")]
        );
        assert_eq!(enumerate_cores(4, 0).unwrap(), [Partition::empty()]);
        assert!(enumerate_cores(4, 6).unwrap().contains(&p("(5,2,1)")));
        assert_eq!(enumerate_cores(1, 3), Err(Error::InvalidModulus(1)));

        // 2-cores are staircases; filter every partition of size <= 6 independently
        let staircases: Vec<Partition> = (0..=6)
            .flat_map(|m| Partition::of_size(m, m))
            .filter(|q| is_n_core(q, 2).unwrap() && k_bounded_hooks(q, 1) <= 2)
            .collect();
        assert_eq!(staircases, enumerate_cores(2, 2).unwrap());
    }

    #[test]
    fn enumeration_matches_hook_filter() {
        // every core fits in an m x m box when it has m bounded hooks
        for n in 2..=5 {
            let m = 5;
            let mut filtered: Vec<Partition> = Partition::in_box(m, m)
                .into_iter()
                .filter(|q| is_n_core(q, n).unwrap() && k_bounded_hooks(q, n - 1) <= m)
                .collect();
            filtered.sort();
            assert_eq!(filtered, enumerate_cores(n, m).unwrap(), "n={n}");
        }
    }

    #[test]
    fn corner_properties_on_small_cores() {
        for n in 2..=5 {
            for core in enumerate_cores(n, 8).unwrap() {
                assert!(has_corner_exclusion(&core, n), "{core} n={n}");
                assert_eq!(
                    extremal_propagation_violation(&core, n),
                    None,
                    "{core} n={n}"
                );
            }
        }
        // (2,2) is not a 3-core and has addable and removable corners of residue 2
        assert!(!has_corner_exclusion(&p("(2,1)"), 3));
    }
}
