use adduce::partitions::{induced_sum, Composition, Partition};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=9, 0..7).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).count()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn transpose_is_an_involution_up_to_30() {
    for n in 0..=30 {
        for p in Partition::all(n) {
            let t = p.transpose();
            assert_eq!(t.size(), n);
            assert_eq!(t.transpose(), p);
        }
    }
}

#[test]
fn monomial_transpose_matches_induced_sum() {
    for n in 1..=20 {
        for c in Composition::all(n) {
            let columns: Vec<Partition> = c.parts().iter().map(|&k| Partition::rectangle(1, k)).collect();
            assert_eq!(c.sorted().transpose(), induced_sum(&columns), "{c}");
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=12 {
        let all: Vec<Partition> = Partition::all(n).collect();
        let leq: Vec<Vec<bool>> = all
            .iter()
            .map(|a| all.iter().map(|b| a.dominance_leq(b).unwrap()).collect())
            .collect();
        for i in 0..all.len() {
            assert!(leq[i][i]);
            for j in 0..all.len() {
                if i != j {
                    assert!(!(leq[i][j] && leq[j][i]), "{:?} {:?}", all[i], all[j]);
                }
                if !leq[i][j] {
                    continue;
                }
                for (via, direct) in leq[j].iter().zip(&leq[i]) {
                    assert!(!via || *direct);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn induced_sum_commutes(a in partition(), b in partition()) {
        prop_assert_eq!(induced_sum([&a, &b]), induced_sum([&b, &a]));
    }

    #[test]
    fn induced_sum_associates(a in partition(), b in partition(), c in partition()) {
        let left = induced_sum([&induced_sum([&a, &b]), &c]);
        let right = induced_sum([&a, &induced_sum([&b, &c])]);
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left.largest(), a.largest() + b.largest() + c.largest());
        prop_assert_eq!(left.size(), a.size() + b.size() + c.size());
    }

    #[test]
    fn printing_round_trips(p in partition()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.tuple_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn transpose_reverses_dominance(a in partition(), b in partition()) {
        if a.size() == b.size() {
            let forward = a.dominance_leq(&b).unwrap();
            let back = b.transpose().dominance_leq(&a.transpose()).unwrap();
            prop_assert_eq!(forward, back);
        }
    }
}
