use std::sync::Arc;

use hkr_core::commuting::{gl_generators, hom_tuples, GLMatrix};
use hkr_core::group::{named_group, named_suite, small_p_groups, Elem};
use hkr_core::inertia::{
    evaluation_hom_check, fix_n, gl_functoriality_check, gl_on_fix, iterate_fix_check, loops_pgroup_check,
    orbit_census, orbit_sum_prediction, GSet,
};
use hkr_core::FiniteGroup;
use proptest::prelude::*;

fn arc(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(named_group(spec).unwrap())
}

#[test]
fn brute_force_fix_for_transposition_cosets() {
    let g = arc("Sym(3)");
    let t = g
        .index_of(&hkr_core::Permutation::from_cycles(3, &[vec![0, 1]]).unwrap())
        .unwrap();
    let h = g.subgroup(&[0, t]);
    let x = GSet::cosets(g.clone(), &[t]).unwrap();
    assert_eq!(x.len(), 3);
    // a fixes gH exactly when g⁻¹ a g lies in H; count pairs (a, gH) directly
    let representatives: Vec<Elem> = {
        let mut reps = Vec::new();
        let mut covered = vec![false; g.order()];
        for a in 0..g.order() as Elem {
            if !covered[a as usize] {
                reps.push(a);
                covered[a as usize] = true;
                covered[g.mul(a, t) as usize] = true;
            }
        }
        reps
    };
    for (p, expected) in [(2u64, 6usize), (3, 3)] {
        let brute = (0..g.order() as Elem)
            .filter(|&a| g.has_p_power_order(a, p))
            .map(|a| {
                representatives
                    .iter()
                    .filter(|&&r| {
                        let c = g.mul(g.inv(r), g.mul(a, r));
                        h.index_of(g.element(c)).is_some()
                    })
                    .count()
            })
            .sum::<usize>();
        assert_eq!(brute, expected);
        assert_eq!(fix_n(&x, p, 1).unwrap().len(), expected);
    }
    let census = orbit_census(&x, 2, 1).unwrap();
    assert_eq!(census.count(), 2);
    assert_eq!(census.count(), orbit_sum_prediction(&x, 2, 1).unwrap());
}

#[test]
fn point_and_regular_examples() {
    for spec in ["Cyc(4)", "Sym(3)", "Q8"] {
        let g = arc(spec);
        let point = GSet::point(g.clone());
        assert_eq!(
            fix_n(&point, 2, 2).unwrap().len(),
            hom_tuples(&g, 2, 2).unwrap().len()
        );
        // free action: only the trivial tuple fixes anything
        let regular = GSet::regular(g.clone()).unwrap();
        assert_eq!(fix_n(&regular, 2, 2).unwrap().len(), g.order());
        assert_eq!(orbit_census(&regular, 2, 2).unwrap().count(), 1);
    }
}

fn gsets_for(g: &Arc<FiniteGroup>, seed: usize) -> Vec<GSet> {
    let n = g.order() as Elem;
    let a = (seed as Elem * 7 + 1) % n;
    let b = (seed as Elem * 13 + 3) % n;
    vec![
        GSet::cosets(g.clone(), &[a]).unwrap(),
        GSet::cosets(g.clone(), &[a, b]).unwrap(),
        GSet::cosets(g.clone(), &[a])
            .unwrap()
            .disjoint_union(&GSet::point(g.clone()))
            .unwrap(),
    ]
}

#[test]
fn disjoint_union_is_additive() {
    for g in named_suite(24).unwrap().into_iter().map(Arc::new) {
        let sets = gsets_for(&g, 1);
        let (x, y) = (&sets[0], &sets[1]);
        let u = x.disjoint_union(y).unwrap();
        for (p, n) in [(2u64, 1usize), (3, 1), (2, 2)] {
            assert_eq!(
                fix_n(&u, p, n).unwrap().len(),
                fix_n(x, p, n).unwrap().len() + fix_n(y, p, n).unwrap().len()
            );
            assert_eq!(
                orbit_census(&u, p, n).unwrap().count(),
                orbit_census(x, p, n).unwrap().count() + orbit_census(y, p, n).unwrap().count()
            );
        }
    }
}

#[test]
fn product_counts_pointwise_fixed_sets() {
    for g in named_suite(16).unwrap().into_iter().map(Arc::new) {
        let sets = gsets_for(&g, 2);
        let (x, y) = (&sets[0], &sets[2]);
        let xy = x.product(y).unwrap();
        for (p, n) in [(2u64, 1usize), (2, 2), (3, 1)] {
            let expected: usize = hom_tuples(&g, p, n)
                .unwrap()
                .iter()
                .map(|alpha| x.fixed_points(&alpha.entries).len() * y.fixed_points(&alpha.entries).len())
                .sum();
            assert_eq!(fix_n(&xy, p, n).unwrap().len(), expected);
        }
    }
}

#[test]
fn iterated_fix_is_fix_of_higher_rank() {
    for spec in ["Cyc(4)", "Sym(3)", "Dih(4)", "Cyc(2)*Cyc(2)"] {
        let g = arc(spec);
        for x in gsets_for(&g, 0) {
            for (p, n) in [(2u64, 2usize), (2, 3), (3, 2)] {
                let check = iterate_fix_check(&x, p, n).unwrap();
                assert!(check.holds, "{spec} p={p} n={n}");
            }
        }
    }
    assert!(iterate_fix_check(&GSet::point(arc("Cyc(2)")), 2, 1).is_err());
}

#[test]
fn gl_action_on_fix_is_functorial() {
    for spec in ["Cyc(4)", "Sym(3)", "Cyc(2)*Cyc(2)", "Q8"] {
        let g = arc(spec);
        let x = gsets_for(&g, 0).remove(0);
        for (n, k) in [(1usize, 2u32), (1, 3), (2, 2)] {
            let fix = fix_n(&x, 2, n).unwrap();
            assert!(gl_functoriality_check(&fix, k).unwrap(), "{spec} n={n} k={k}");
        }
    }
    let fix = fix_n(&GSet::point(arc("Cyc(4)")), 2, 1).unwrap();
    assert!(matches!(
        gl_functoriality_check(&fix, 1),
        Err(hkr_core::HkrError::LevelTooSmall { .. })
    ));
}

#[test]
fn gl_action_composes_on_arbitrary_products() {
    let g = arc("Dih(4)");
    let fix = fix_n(&GSet::point(g.clone()), 2, 2).unwrap();
    let gens = gl_generators(2, 2, 2).unwrap();
    let identity = GLMatrix::identity(2, 2, 2);
    let mut word = identity.clone();
    let mut composite: Vec<usize> = (0..fix.len()).collect();
    for s in gens.iter().cycle().take(7) {
        // composite = gl(word); extend on the right by s
        let step = gl_on_fix(&fix, s).unwrap();
        composite = step.iter().map(|&i| composite[i]).collect();
        word = word.mul(s);
        assert_eq!(composite, gl_on_fix(&fix, &word).unwrap());
    }
}

#[test]
fn loops_agree_for_p_groups() {
    for g in small_p_groups(16).unwrap() {
        for n in 1..=2 {
            let report = loops_pgroup_check(&g, n).unwrap();
            assert!(report.holds, "{:?}", g.name());
            assert_eq!(report.hom_z, report.hom_zp);
        }
    }
    assert!(loops_pgroup_check(&named_group("Sym(3)").unwrap(), 1).is_err());
}

#[test]
fn evaluation_map_is_a_homomorphism() {
    for spec in ["Cyc(4)", "Dih(4)", "Cyc(2)*Cyc(4)"] {
        let g = named_group(spec).unwrap();
        for alpha in hom_tuples(&g, 2, 2).unwrap().iter().step_by(5) {
            assert!(evaluation_hom_check(&g, 2, alpha, 2).unwrap());
        }
    }
}

#[test]
fn gset_json_round_trip() {
    let g = arc("Sym(3)");
    for x in gsets_for(&g, 3) {
        let text = x.to_json().to_string();
        let back = GSet::from_json(&text).unwrap();
        assert_eq!(back.labels(), x.labels());
        for h in 0..g.order() as Elem {
            for pt in 0..x.len() {
                assert_eq!(back.act(h, pt), x.act(h, pt));
            }
        }
    }
    let bad = r#"{"group": "Cyc(2)", "points": ["a", "b"], "action": [["a", "a"]]}"#;
    assert!(GSet::from_json(bad).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn census_matches_orbit_sum(which in 0usize..64, seed in 0usize..50, p in prop_oneof![Just(2u64), Just(3)], n in 1usize..=2) {
        let suite = named_suite(48).unwrap();
        let g = Arc::new(suite[which % suite.len()].clone());
        for x in gsets_for(&g, seed) {
            let census = orbit_census(&x, p, n).unwrap();
            prop_assert_eq!(census.count(), orbit_sum_prediction(&x, p, n).unwrap());
            let total: usize = census.orbits.iter().map(|o| o.size).sum();
            prop_assert_eq!(total, fix_n(&x, p, n).unwrap().len());
            for o in &census.orbits {
                prop_assert_eq!(o.size * o.stabilizer_order, g.order());
            }
        }
    }
}
