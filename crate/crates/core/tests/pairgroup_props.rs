mod common;

use std::collections::HashSet;

use common::*;
use pairframe::{act, enumerate_group, induced_pair_action, relabel, EdgeVector, Limits, VertexPermutation};
use proptest::prelude::*;

#[test]
fn homomorphism_exhaustive_small_n() {
    for n in 3..=4 {
        let perms: Vec<VertexPermutation> = VertexPermutation::all(n).collect();
        for s in &perms {
            for p in &perms {
                let lhs = induced_pair_action(&s.compose(p));
                let rhs = induced_pair_action(s).compose(&induced_pair_action(p));
                assert_eq!(lhs.index_map(), rhs.index_map());
            }
        }
    }
}

#[test]
fn homomorphism_sampled_up_to_seven() {
    let mut rng = rng(1);
    for n in 5..=7 {
        for _ in 0..200 {
            let s = random_permutation(&mut rng, n);
            let p = random_permutation(&mut rng, n);
            let lhs = induced_pair_action(&s.compose(&p));
            let rhs = induced_pair_action(&s).compose(&induced_pair_action(&p));
            assert_eq!(lhs.index_map(), rhs.index_map());
            assert_eq!(lhs.source(), rhs.source());
        }
    }
}

#[test]
fn injective_for_three_and_four() {
    for n in 3..=4 {
        let maps: HashSet<Vec<usize>> =
            VertexPermutation::all(n).map(|s| induced_pair_action(&s).index_map()).collect();
        assert_eq!(maps.len(), (1..=n).product::<usize>());
    }
}

#[test]
fn n5_group_is_closed() {
    let group = enumerate_group(5, Limits::default()).unwrap();
    assert_eq!(group.len(), 120);
    let table: HashSet<Vec<usize>> = group.iter().map(|t| t.index_map()).collect();
    assert_eq!(table.len(), 120);
    let mut rng = rng(2);
    for _ in 0..100 {
        let a = &group[rand::Rng::gen_range(&mut rng, 0..120)];
        let b = &group[rand::Rng::gen_range(&mut rng, 0..120)];
        assert!(table.contains(&a.compose(b).index_map()));
        assert!(table.contains(&a.inverse().index_map()));
    }
}

#[test]
fn index_map_follows_defining_rule() {
    let mut rng = rng(3);
    for n in 3..=7 {
        let s = random_permutation(&mut rng, n);
        let tau = induced_pair_action(&s);
        let map = tau.index_map();
        for i in 1..=n {
            for j in i + 1..=n {
                let (a, b) = (s.image(i), s.image(j));
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                assert_eq!(map[pair_rank(i, j, n)], pair_rank(a, b, n) + 1);
            }
        }
    }
}

#[test]
fn act_preserves_multiset() {
    let mut rng = rng(4);
    let group = enumerate_group(5, Limits::default()).unwrap();
    for _ in 0..100 {
        let x = random_edge_vector(&mut rng, 5);
        let tau = &group[rand::Rng::gen_range(&mut rng, 0..group.len())];
        assert_eq!(act(tau, &x).unwrap().multiset(), x.multiset());
    }
}

fn arb_case() -> impl Strategy<Value = (EdgeVector, VertexPermutation, VertexPermutation)> {
    (3usize..=7, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = rng(seed);
        (random_edge_vector(&mut rng, n), random_permutation(&mut rng, n), random_permutation(&mut rng, n))
    })
}

proptest! {
    #[test]
    fn action_axioms((x, s, p) in arb_case()) {
        let id = induced_pair_action(&VertexPermutation::identity(x.n()));
        prop_assert_eq!(act(&id, &x).unwrap(), x.clone());
        let ts = induced_pair_action(&s);
        let tp = induced_pair_action(&p);
        let composed = act(&ts.compose(&tp), &x).unwrap();
        prop_assert_eq!(&composed, &act(&ts, &act(&tp, &x).unwrap()).unwrap());
        prop_assert_eq!(relabel(&s.compose(&p), &x).unwrap(), composed);
        // inverse undoes
        prop_assert_eq!(act(&ts.inverse(), &act(&ts, &x).unwrap()).unwrap(), x);
    }
}
