use std::collections::HashSet;

use hkr_core::commuting::{
    class_index, gl_action_orbits, gl_generators, hom_tuples, rank_prediction, subgroup_count, tuple_classes,
    zpn_set_count, CommutingTuple,
};
use hkr_core::group::{named_group, named_suite};
use proptest::prelude::*;

/// Sublattices of index `p^k` in `Z^n`, counted through their Hermite normal
/// forms: upper triangular with diagonal `d_i` (product `p^k`) and entries
/// above `d_j` in column `j` reduced into `[0, d_j)`. Every such lattice
/// contains `p^k Z^n`, so these are the order-`p^k` subgroups of `(Z/p^k)^n`
/// up to duality. The matrices are enumerated explicitly.
fn hnf_oracle(p: u64, n: usize, k: u32) -> u64 {
    fn diagonals(p: u64, n: usize, left: u32, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if acc.len() == n {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for e in 0..=left {
            acc.push(p.pow(e));
            diagonals(p, n, left - e, acc, out);
            acc.pop();
        }
    }
    let mut diags = Vec::new();
    diagonals(p, n, k, &mut Vec::new(), &mut diags);
    let mut count = 0;
    for d in diags {
        // free entries: column j has j entries above the diagonal, each in [0, d_j)
        let slots: Vec<u64> = (0..n).flat_map(|j| std::iter::repeat_n(d[j], j)).collect();
        let mut matrices = HashSet::new();
        let total: u64 = slots.iter().product();
        for code in 0..total {
            let mut c = code;
            let entries: Vec<u64> = slots
                .iter()
                .map(|&m| {
                    let v = c % m;
                    c /= m;
                    v
                })
                .collect();
            matrices.insert(entries);
        }
        count += matrices.len() as u64;
    }
    count
}

#[test]
fn hom_tuple_examples() {
    for (m, p) in [(4u64, 2u64), (9, 3), (8, 2)] {
        let g = named_group(&format!("Cyc({m})")).unwrap();
        for n in 1..=3usize {
            assert_eq!(hom_tuples(&g, p, n).unwrap().len() as u64, m.pow(n as u32));
        }
    }
    let s3 = named_group("Sym(3)").unwrap();
    let brute = s3
        .elements()
        .iter()
        .filter(|e| {
            let t = e.cycle_type();
            t.iter().all(|&l| l == 1 || l == 2) && t.iter().filter(|&&l| l == 2).count() <= 1
        })
        .count();
    assert_eq!(hom_tuples(&s3, 2, 1).unwrap().len(), brute);
    assert_eq!(brute, 4);
}

#[test]
fn sym4_rank_seventeen() {
    let g = named_group("Sym(4)").unwrap();
    assert_eq!(rank_prediction(&g, 2, 2).unwrap(), 17);
    // 7 + C(3+1, 2) + 3 + 1 over the partitions 4, 2+2, 2+1+1, 1+1+1+1
    assert_eq!(zpn_set_count(2, 2, 2).unwrap(), 7 + 6 + 3 + 1);
    assert_eq!(zpn_set_count(2, 2, 1).unwrap(), 4);
}

#[test]
fn gl_orbit_examples() {
    for p in [2u64, 3, 5] {
        let g = named_group(&format!("Cyc({p})")).unwrap();
        let (_, orbits) = gl_action_orbits(&g, p, 1, 1).unwrap();
        assert_eq!(orbits.len(), 2);
    }
    // brute force over all six matrices of GL_2(F_2)
    let g = named_group("Sym(3)").unwrap();
    let (classes, orbits) = gl_action_orbits(&g, 2, 2, 1).unwrap();
    let lookup = class_index(&g, &classes);
    let mut all = Vec::new();
    for code in 0..16u64 {
        let e = vec![
            vec![code & 1, (code >> 1) & 1],
            vec![(code >> 2) & 1, (code >> 3) & 1],
        ];
        if let Ok(m) = hkr_core::commuting::GLMatrix::new(2, 1, e) {
            all.push(m);
        }
    }
    assert_eq!(all.len(), 6);
    let mut brute: Vec<Vec<usize>> = Vec::new();
    for (ci, c) in classes.iter().enumerate() {
        let mut orbit: Vec<usize> = all
            .iter()
            .map(|m| lookup[&m.precompose(&g, &c.representative)])
            .collect();
        orbit.push(ci);
        orbit.sort_unstable();
        orbit.dedup();
        if !brute.contains(&orbit) {
            brute.push(orbit);
        }
    }
    brute.sort();
    assert_eq!(orbits, brute);
}

#[test]
fn subgroup_count_examples_and_hnf_oracle() {
    assert_eq!(subgroup_count(2, 2, 1).unwrap(), 3);
    assert_eq!(subgroup_count(2, 2, 2).unwrap(), 7);
    for (p, n, k) in [
        (2u64, 2usize, 1u32),
        (2, 2, 2),
        (2, 2, 3),
        (2, 2, 4),
        (2, 3, 1),
        (2, 3, 2),
        (2, 3, 3),
        (3, 2, 1),
        (3, 2, 2),
        (3, 3, 1),
        (5, 2, 2),
        (2, 4, 2),
    ] {
        assert_eq!(
            subgroup_count(p, n, k).unwrap(),
            hnf_oracle(p, n, k),
            "({p},{n},{k})"
        );
    }
}

#[test]
fn conjugation_closure_and_class_equation() {
    for g in named_suite(100).unwrap() {
        for p in [2u64, 3] {
            let tuples = hom_tuples(&g, p, 1).unwrap();
            let set: HashSet<&CommutingTuple> = tuples.iter().collect();
            for t in &tuples {
                for h in 0..g.order() as u32 {
                    assert!(set.contains(&t.conjugate(&g, h)));
                }
            }
            let classes = tuple_classes(&g, p, 1).unwrap();
            assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), tuples.len());
            for c in &classes {
                assert_eq!(c.size * c.image_centralizer_order, g.order());
            }
        }
    }
}

#[test]
fn pairs_class_equation_small_groups() {
    for g in named_suite(48).unwrap() {
        let tuples = hom_tuples(&g, 2, 2).unwrap();
        let classes = tuple_classes(&g, 2, 2).unwrap();
        assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), tuples.len());
        for c in &classes {
            assert_eq!(c.size * c.image_centralizer_order, g.order());
        }
    }
}

#[test]
fn symmetric_group_law() {
    for (p, k) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1)] {
        let g = named_group(&format!("Sym({})", p.pow(k))).unwrap();
        for n in [1usize, 2] {
            assert_eq!(
                rank_prediction(&g, p, n).unwrap() as u64,
                zpn_set_count(p, n, k).unwrap(),
                "({p},{k},{n})"
            );
        }
    }
}

#[test]
fn conjugate_tuples_stay_conjugate_under_precomposition() {
    for g in named_suite(48).unwrap() {
        let tuples = hom_tuples(&g, 2, 2).unwrap();
        let classes = tuple_classes(&g, 2, 2).unwrap();
        let lookup = class_index(&g, &classes);
        let k = hkr_core::arith::p_power_exponent(hkr_core::arith::p_part(g.exponent(), 2), 2)
            .unwrap()
            .max(1);
        for sigma in gl_generators(2, k, 2).unwrap() {
            for t in tuples.iter().step_by(3) {
                for h in [1u32, (g.order() as u32) / 2]
                    .into_iter()
                    .filter(|&h| (h as usize) < g.order())
                {
                    let a = sigma.precompose(&g, t);
                    let b = sigma.precompose(&g, &t.conjugate(&g, h));
                    assert_eq!(lookup[&a], lookup[&b]);
                }
            }
        }
    }
}

const ABELIAN: &[&str] = &[
    "Cyc(1)",
    "Cyc(2)",
    "Cyc(3)",
    "Cyc(4)",
    "Cyc(6)",
    "Cyc(8)",
    "Cyc(2)*Cyc(2)",
    "Cyc(9)",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn kunneth_for_abelian_products(a in 0..ABELIAN.len(), b in 0..ABELIAN.len(), p in prop_oneof![Just(2u64), Just(3)], n in 1usize..=2) {
        let ga = named_group(ABELIAN[a]).unwrap();
        let gb = named_group(ABELIAN[b]).unwrap();
        let prod = named_group(&format!("{}*{}", ABELIAN[a], ABELIAN[b])).unwrap();
        prop_assume!(prod.order() <= 64);
        prop_assert_eq!(
            rank_prediction(&prod, p, n).unwrap(),
            rank_prediction(&ga, p, n).unwrap() * rank_prediction(&gb, p, n).unwrap()
        );
    }
}
