//! Lascoux-Schutzenberger charge on classical semistandard tableaux and the
//! Kostka-Foulkes polynomials it generates.
//!
//! Tableaux here are plain rows of letters, bottom row first.

use std::collections::BTreeMap;

use crate::cores::n_stat;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::TPolynomial;

/// Letter counts `[#1, #2, ...]` of a filling.
pub fn content(rows: &[Vec<usize>]) -> Vec<usize> {
    let mut counts = Vec::new();
    for &a in rows.iter().flatten() {
        if a == 0 {
            continue;
        }
        if counts.len() < a {
            counts.resize(a, 0);
        }
        counts[a - 1] += 1;
    }
    counts
}

/// Checks that `rows` is a semistandard filling of a partition with partition content.
pub fn check_semistandard(rows: &[Vec<usize>]) -> Result<Partition> {
    let shape = Partition::new(rows.iter().map(Vec::len).collect())
        .map_err(|_| Error::NotSemistandard("row lengths must weakly decrease".into()))?;
    for (r, row) in rows.iter().enumerate() {
        if row.contains(&0) {
            return Err(Error::NotSemistandard("letters start at 1".into()));
        }
        if row.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotSemistandard(format!("row {} decreases", r + 1)));
        }
        if r > 0 && row.iter().zip(&rows[r - 1]).any(|(up, down)| up <= down) {
            return Err(Error::NotSemistandard(format!(
                "column not strict between rows {} and {}",
                r,
                r + 1
            )));
        }
    }
    let c = content(rows);
    if !Partition::is_partition(&c) || c.contains(&0) {
        return Err(Error::WeightNotPartition(c));
    }
    Ok(shape)
}

/// Reading word: rows from top to bottom, each read left to right.
pub fn reading_word(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().rev().flatten().copied().collect()
}

/// Charge of a word with partition content.
///
/// Repeatedly extracts a standard subword: scanning leftwards (cyclically) from
/// the right end pick a 1, then a 2, and so on. A letter's index is that of its
/// predecessor, plus one if the scan had to wrap around to reach it.
pub fn charge_of_word(word: &[usize]) -> Result<u64> {
    let c = content(&[word.to_vec()]);
    if !Partition::is_partition(&c) || c.contains(&0) || word.contains(&0) {
        return Err(Error::WeightNotPartition(c));
    }
    let mut used = vec![false; word.len()];
    let mut remaining = word.len();
    let mut total = 0u64;
    while remaining > 0 {
        let mut cursor = word.len();
        let mut index = 0u64;
        let mut letter = 1;
        loop {
            let available = |q: &usize| !used[*q] && word[*q] == letter;
            let pick = match (0..cursor).rev().find(available) {
                Some(q) => Some(q),
                None => {
                    let q = (cursor..word.len()).rev().find(available);
                    if q.is_some() && letter > 1 {
                        index += 1;
                    }
                    q
                }
            };
            let Some(q) = pick else { break };
            used[q] = true;
            remaining -= 1;
            total += index;
            cursor = q;
            letter += 1;
        }
    }
    Ok(total)
}

pub fn classical_charge(rows: &[Vec<usize>]) -> Result<u64> {
    check_semistandard(rows)?;
    charge_of_word(&reading_word(rows))
}

/// `n(content) - charge`.
pub fn classical_cocharge(rows: &[Vec<usize>]) -> Result<u64> {
    let charge = classical_charge(rows)?;
    let mu = Partition::new(content(rows))?;
    Ok(n_stat(&mu) as u64 - charge)
}

/// All semistandard tableaux of the given shape and content, bottom row first,
/// in lexicographic order of their row-by-row words.
pub fn semistandard_tableaux(shape: &Partition, weight: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if shape.size() != weight.iter().sum::<usize>() {
        return Vec::new();
    }
    let cells: Vec<_> = shape.cells().collect();
    let mut rows: Vec<Vec<usize>> = shape
        .parts()
        .iter()
        .map(|&l| Vec::with_capacity(l))
        .collect();
    let mut left = weight.to_vec();
    let mut out = Vec::new();
    fill(&cells, 0, &mut rows, &mut left, &mut out);
    out
}

fn fill(
    cells: &[crate::partition::Cell],
    idx: usize,
    rows: &mut Vec<Vec<usize>>,
    left: &mut Vec<usize>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let Some(&c) = cells.get(idx) else {
        out.push(rows.clone());
        return;
    };
    let mut lo = 1;
    if c.col > 1 {
        lo = lo.max(rows[c.row - 1][c.col - 2]);
    }
    if c.row > 1 {
        lo = lo.max(rows[c.row - 2][c.col - 1] + 1);
    }
    for letter in lo..=left.len() {
        if left[letter - 1] == 0 {
            continue;
        }
        left[letter - 1] -= 1;
        rows[c.row - 1].push(letter);
        fill(cells, idx + 1, rows, left, out);
        rows[c.row - 1].pop();
        left[letter - 1] += 1;
    }
}

/// `K_{shape, mu}(t)`: sum of `t^charge` over semistandard tableaux of that shape and content.
pub fn kostka_foulkes(shape: &Partition, mu: &Partition) -> TPolynomial {
    let mut p = TPolynomial::zero();
    for t in semistandard_tableaux(shape, mu.parts()) {
        let c = charge_of_word(&reading_word(&t)).expect("partition content");
        p.add_term(c as u32, 1);
    }
    p
}

/// Non-zero Kostka-Foulkes polynomials `K_{lambda, mu}` over all shapes `lambda` of size `|mu|`.
pub fn kostka_foulkes_table(mu: &Partition) -> BTreeMap<Partition, TPolynomial> {
    Partition::of_size(mu.size(), mu.size())
        .into_iter()
        .filter_map(|shape| {
            let p = kostka_foulkes(&shape, mu);
            (!p.is_zero()).then_some((shape, p))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn extreme_tableaux() {
        assert_eq!(classical_charge(&[vec![1], vec![2], vec![3]]), Ok(0));
        assert_eq!(classical_cocharge(&[vec![1], vec![2], vec![3]]), Ok(3));
        assert_eq!(classical_charge(&[vec![1, 2, 3]]), Ok(3));
        assert_eq!(classical_cocharge(&[vec![1, 2, 3]]), Ok(0));
    }

    #[test]
    fn word_charge() {
        assert_eq!(charge_of_word(&[2, 1]), Ok(0));
        assert_eq!(charge_of_word(&[1, 2]), Ok(1));
        // two standard subwords: 2 1 (charge 0) and 1 2 (charge 1)
        assert_eq!(charge_of_word(&[1, 2, 2, 1]), Ok(1));
        assert_eq!(charge_of_word(&[1, 1, 2]), Ok(1));
        assert_eq!(
            charge_of_word(&[2, 3]),
            Err(Error::WeightNotPartition(vec![0, 1, 1]))
        );
        assert_eq!(charge_of_word(&[]), Ok(0));
    }

    #[test]
    fn kostka_foulkes_small() {
        assert_eq!(
            kostka_foulkes(&p("(2,1)"), &p("(1,1,1)")).to_string(),
            "t + t^2"
        );
        assert_eq!(kostka_foulkes(&p("(3)"), &p("(1,1,1)")).to_string(), "t^3");
        assert_eq!(
            kostka_foulkes(&p("(1,1,1)"), &p("(1,1,1)")).to_string(),
            "1"
        );
        assert_eq!(
            kostka_foulkes(&p("(3,1)"), &p("(2,1,1)")).to_string(),
            "t + t^2"
        );
        assert_eq!(kostka_foulkes(&p("(2,2)"), &p("(2,1,1)")).to_string(), "t");
        assert!(kostka_foulkes(&p("(1,1,1)"), &p("(2,1)")).is_zero());
    }

    #[test]
    fn table_counts_are_kostka_numbers() {
        // at t = 1 the table gives Kostka numbers; for mu = 1^n they count standard tableaux
        let table = kostka_foulkes_table(&p("(1,1,1,1)"));
        let total: i64 = table
            .values()
            .map(|poly| {
                let c: i64 = poly.at_one().try_into().unwrap();
                c * c
            })
            .sum();
        assert_eq!(total, 24);
        // K_{mu,mu} = 1 and K_{lambda,mu} has degree n(mu) - n(lambda)
        for mu in Partition::of_size(5, 5) {
            let table = kostka_foulkes_table(&mu);
            assert_eq!(table[&mu].to_string(), "1");
            for (lambda, poly) in &table {
                assert_eq!(poly.degree(), Some((n_stat(&mu) - n_stat(lambda)) as u32));
            }
        }
    }

    #[test]
    fn semistandard_checks() {
        assert!(check_semistandard(&[vec![1, 1], vec![2]]).is_ok());
        assert!(check_semistandard(&[vec![2, 1]]).is_err());
        assert!(check_semistandard(&[vec![1, 2], vec![1]]).is_err());
        assert!(check_semistandard(&[vec![1], vec![2, 3]]).is_err());
        assert_eq!(
            check_semistandard(&[vec![1, 2, 2]]),
            Err(Error::WeightNotPartition(vec![1, 2]))
        );
        assert_eq!(semistandard_tableaux(&p("(2,1)"), &[1, 1, 1]).len(), 2);
        assert_eq!(semistandard_tableaux(&p("(2,2)"), &[2, 2]).len(), 1);
    }
}
