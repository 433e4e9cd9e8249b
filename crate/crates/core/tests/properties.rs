use proptest::prelude::*;

use kcharge::classical::{
    charge_of_word, classical_charge, classical_cocharge, semistandard_tableaux,
};
use kcharge::cores::{
    addable_corners, enumerate_cores, has_corner_exclusion, hooks, k_bounded_hooks,
};
use kcharge::enumerate::{enumerate_with, Strategy as Enumerator};
use kcharge::statistics::{diag, Direction, ResidueOrder};
use kcharge::{
    enumerate_k_tableaux, is_n_core, standard_sequences, Cell, CellSet, KTableau, Partition,
    Residue, TPolynomial, TableauStatistics,
};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// (k, partition weight with parts <= k and size <= max_size)
fn k_and_weight(max_k: usize, max_size: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1..=max_k).prop_flat_map(move |k| {
        (Just(k), prop::collection::vec(1..=k, 0..=max_size)).prop_map(move |(k, mut v)| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            while v.iter().sum::<usize>() > max_size {
                v.pop();
            }
            (k, v)
        })
    })
}

fn k_and_composition(max_k: usize, max_size: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1..=max_k).prop_flat_map(move |k| {
        (Just(k), prop::collection::vec(1..=k, 0..=max_size)).prop_map(move |(k, mut v)| {
            while v.iter().sum::<usize>() > max_size {
                v.pop();
            }
            (k, v)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_text_round_trip(p in partition(8, 9)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn hooks_match_conjugate(p in partition(6, 7)) {
        let q = p.conjugate();
        for (c, h) in hooks(&p) {
            let mirrored = hooks(&q).find(|(d, _)| *d == Cell::new(c.col, c.row)).unwrap().1;
            prop_assert_eq!(h, mirrored);
        }
    }

    #[test]
    fn cores_have_corner_exclusion(p in partition(6, 7), n in 2usize..6) {
        if is_n_core(&p, n).unwrap() {
            prop_assert!(has_corner_exclusion(&p, n));
        }
    }

    #[test]
    fn diag_is_symmetric_and_bounded(
        (r1, c1, r2, c2) in (1usize..8, 1usize..8, 1usize..8, 1usize..8),
        k in 1usize..6,
    ) {
        let (a, b) = (Cell::new(r1, c1), Cell::new(r2, c2));
        let d = diag(a, b, k);
        prop_assert_eq!(d, diag(b, a, k));
        let gap = (a.diagonal() - b.diagonal()).unsigned_abs() as usize;
        prop_assert!(d * (k + 1) <= gap + k);
    }

    #[test]
    fn residue_orders_are_total(n in 2usize..8, x in 0usize..8, a in 0usize..8, b in 0usize..8) {
        let (x, a, b) = (x % n, a % n, b % n);
        for dir in [Direction::Low, Direction::High] {
            let o = ResidueOrder::new(n, Residue::new(x, n), dir);
            let (ra, rb) = (Residue::new(a, n), Residue::new(b, n));
            prop_assert_eq!(o.greater(ra, rb) || o.greater(rb, ra), a != b);
            prop_assert!(!(o.greater(ra, rb) && o.greater(rb, ra)));
            prop_assert!(a == x || o.greater(Residue::new(x, n), ra));
        }
    }

    #[test]
    fn polynomial_text_round_trip(terms in prop::collection::btree_map(0u32..12, -50i64..50, 0..6)) {
        let mut p = TPolynomial::zero();
        for (e, c) in &terms {
            p.add_term(*e, *c);
        }
        let back: TPolynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(TPolynomial::from_json_value(&p.to_json_value()).unwrap(), p.clone());
        prop_assert!(p.terms().all(|(_, c)| *c != 0.into()));
    }

    #[test]
    fn enumerated_tableaux_are_valid_and_round_trip((k, weight) in k_and_composition(4, 6)) {
        for t in enumerate_k_tableaux(k, &weight, None).unwrap() {
            prop_assert!(t.validate().is_ok(), "{}", t);
            prop_assert_eq!(t.residue_counts(), weight.clone());
            prop_assert_eq!(KTableau::parse_text(&t.to_text()).unwrap(), t.clone());
            prop_assert_eq!(KTableau::parse_json(&t.to_json()).unwrap(), t.clone());
            for i in 1..=weight.len() {
                let r = t.restrict_leq(i).unwrap();
                prop_assert!(is_n_core(r.shape(), k + 1).unwrap());
            }
            prop_assert_eq!(k_bounded_hooks(t.shape(), k), weight.iter().sum::<usize>());
        }
    }

    #[test]
    fn fast_matches_oracle((k, weight) in k_and_composition(3, 5)) {
        let fast = enumerate_with(Enumerator::Fast, k, &weight, None).unwrap();
        let oracle = enumerate_with(Enumerator::Oracle, k, &weight, None).unwrap();
        prop_assert_eq!(fast, oracle);
    }

    #[test]
    fn statistics_identities((k, weight) in k_and_weight(4, 6)) {
        for t in enumerate_k_tableaux(k, &weight, None).unwrap() {
            let s = TableauStatistics::compute(&t).unwrap();
            prop_assert_eq!(s.cocharge_lp, s.cocharge_morse, "{}", t);
            prop_assert_eq!(s.charge_lp, s.charge_morse, "{}", t);
            prop_assert_eq!(s.charge_morse + s.cocharge_morse, s.duality_constant(), "{}", t);
            prop_assert!(s.charge_morse >= 0 && s.cocharge_morse >= 0);
            for table in &s.tables {
                prop_assert_eq!(table.rows[0].l, 0);
                prop_assert_eq!(table.rows[0].i, 0);
                prop_assert_eq!(table.rows[0].m, 0);
                prop_assert_eq!(table.rows[0].j, 0);
                for w in table.rows.windows(2) {
                    prop_assert!(w[1].m - w[0].m <= 1 && w[1].m >= w[0].m);
                    prop_assert!(w[1].j - w[0].j <= 1 && w[1].j >= w[0].j);
                }
            }
        }
    }

    #[test]
    fn sequences_partition_cells((k, weight) in k_and_weight(4, 7)) {
        for t in enumerate_k_tableaux(k, &weight, None).unwrap() {
            let seqs = standard_sequences(&t).unwrap();
            prop_assert_eq!(seqs.len(), weight.first().copied().unwrap_or(0));
            let mut seen = CellSet::new();
            for s in &seqs {
                for e in s.entries() {
                    for c in e.cells.iter() {
                        prop_assert!(seen.insert(c));
                        prop_assert_eq!(t.letter(c), Some(e.letter));
                    }
                }
            }
            prop_assert_eq!(seen.len(), t.shape().size());
        }
    }

    #[test]
    fn classical_charge_bounds(shape in partition(4, 4), extra in 0usize..3) {
        let size = shape.size();
        prop_assume!(size > 0);
        let mut mu = vec![1; size];
        for _ in 0..extra.min(size / 2) {
            mu.pop();
            mu[0] += 1;
        }
        let mu = Partition::new({ let mut v = mu; v.sort_unstable_by(|a, b| b.cmp(a)); v }).unwrap();
        for t in semistandard_tableaux(&shape, mu.parts()) {
            let c = classical_charge(&t).unwrap();
            let cc = classical_cocharge(&t).unwrap();
            prop_assert_eq!(c + cc, kcharge::n_stat(&mu) as u64);
        }
    }

    #[test]
    fn charge_of_permutation_word_is_bounded(perm in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle()) {
        let c = charge_of_word(&perm).unwrap();
        prop_assert!(c <= 15);
    }
}

#[test]
fn core_growth_matches_brute_force() {
    for n in 2..=4 {
        let grown = enumerate_cores(n, 6).unwrap();
        // the staircase 2-cores are the largest cores in this range
        let mut brute: Vec<Partition> = (0..=21)
            .flat_map(|s| Partition::of_size(s, s))
            .filter(|p| is_n_core(p, n).unwrap() && k_bounded_hooks(p, n - 1) <= 6)
            .collect();
        brute.sort();
        assert_eq!(grown, brute, "n={n}");
        for core in &grown {
            for (cell, r) in addable_corners(core, n) {
                assert_eq!(cell.residue(n), r);
            }
        }
    }
}
