use std::collections::HashSet;

use hkr_core::group::{make_group, named_group, named_suite, small_p_groups};
use hkr_core::{arith, Permutation};
use proptest::prelude::*;

fn cycle(points: &[u32], degree: usize) -> Permutation {
    Permutation::from_cycles(degree, &[points.to_vec()]).unwrap()
}

/// Closure by repeated multiplication until nothing new appears.
fn naive_closure(gens: &[Permutation], degree: usize) -> usize {
    let mut all: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    loop {
        let mut grew = false;
        let current: Vec<Permutation> = all.iter().cloned().collect();
        for a in &current {
            for g in gens {
                grew |= all.insert(a.compose(g));
            }
        }
        if !grew {
            return all.len();
        }
    }
}

#[test]
fn closure_examples_match_naive_closure() {
    let s3 = vec![cycle(&[0, 1], 3), cycle(&[0, 1, 2], 3)];
    assert_eq!(make_group(3, s3.clone()).unwrap().order(), 6);
    assert_eq!(naive_closure(&s3, 3), 6);
    let c4 = vec![cycle(&[0, 1, 2, 3], 4)];
    assert_eq!(make_group(4, c4.clone()).unwrap().order(), 4);
    assert_eq!(naive_closure(&c4, 4), 4);
}

#[test]
fn sym3_classes_by_brute_force_conjugation() {
    let g = named_group("Sym(3)").unwrap();
    let mut orbits: Vec<usize> = Vec::new();
    let mut seen = HashSet::new();
    for a in g.elements() {
        if seen.contains(a) {
            continue;
        }
        let orbit: HashSet<Permutation> = g
            .elements()
            .iter()
            .map(|h| h.compose(a).compose(&h.inverse()))
            .collect();
        orbits.push(orbit.len());
        seen.extend(orbit);
    }
    orbits.sort_unstable();
    let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
    assert_eq!(sizes, orbits);
    assert_eq!(sizes, vec![1, 2, 3]);
}

#[test]
fn centralizer_of_a_transposition() {
    let g = named_group("Sym(3)").unwrap();
    let t = cycle(&[0, 1], 3);
    let brute = g
        .elements()
        .iter()
        .filter(|h| h.compose(&t) == t.compose(h))
        .count();
    assert_eq!(g.centralizer(&[t]).unwrap().order(), brute);
    assert_eq!(brute, 2);
}

#[test]
fn named_examples() {
    assert_eq!(named_group("Sym(4)").unwrap().order(), 24);
    let v = named_group("Cyc(2)*Cyc(2)").unwrap();
    assert_eq!((v.order(), v.exponent()), (4, 2));
}

#[test]
fn class_equation_and_lagrange_for_named_suite() {
    for g in named_suite(200).unwrap() {
        let n = g.order();
        let classes = g.conjugacy_classes();
        assert_eq!(classes.iter().map(|c| c.size()).sum::<usize>(), n);
        let mut members: Vec<u32> = classes.iter().flat_map(|c| c.members.iter().copied()).collect();
        members.sort_unstable();
        assert_eq!(members, (0..n as u32).collect::<Vec<_>>());
        for c in classes {
            assert_eq!(n % c.size(), 0);
            assert_eq!(n % c.centralizer_order, 0);
            assert_eq!(c.size() * c.centralizer_order, n);
        }
    }
}

#[test]
fn symmetric_class_count_is_partition_count() {
    for m in 1..=6usize {
        let g = named_group(&format!("Sym({m})")).unwrap();
        let types: HashSet<Vec<usize>> = g.elements().iter().map(|e| e.cycle_type()).collect();
        assert_eq!(g.conjugacy_classes().len(), types.len());
        assert_eq!(types.len() as u64, arith::partition_count(m));
    }
}

#[test]
fn p_group_catalogue_orders() {
    for g in small_p_groups(16).unwrap() {
        let n = g.order() as u64;
        assert!(n == 1 || arith::prime_factors(n).len() == 1, "{:?}", g.name());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_generators_give_consistent_classes(
        a in proptest::sample::subsequence((0u32..5).collect::<Vec<_>>(), 5),
        b in proptest::sample::subsequence((0u32..5).collect::<Vec<_>>(), 5),
    ) {
        let to_perm = |order: &Vec<u32>| {
            // a permutation of 5 points from the shuffled prefix
            let mut images: Vec<u32> = (0..5).collect();
            for (i, &x) in order.iter().enumerate() {
                images.swap(i, x as usize);
            }
            Permutation::from_images(images).unwrap()
        };
        let gens = vec![to_perm(&a), to_perm(&b)];
        let g = make_group(5, gens.clone()).unwrap();
        prop_assert_eq!(g.order(), naive_closure(&gens, 5));
        let sizes: usize = g.conjugacy_classes().iter().map(|c| c.size()).sum();
        prop_assert_eq!(sizes, g.order());
        for c in g.conjugacy_classes() {
            prop_assert_eq!(g.order() % c.size(), 0);
        }
    }
}
