use std::sync::Arc;

use hkr_core::arith;
use hkr_core::charmap::{
    adams_psi, char_matrix_rank, character_map, character_table, decompose, galois_fixed_dim,
    p_power_classes, psi_level, total_power, virtual_character, CharacterTable,
};
use hkr_core::commuting::rank_prediction;
use hkr_core::group::{named_group, named_suite};
use num::{Signed, ToPrimitive};
use proptest::prelude::*;

fn tables(max: usize) -> Vec<CharacterTable> {
    named_suite(max)
        .unwrap()
        .iter()
        .map(|g| character_table(g).unwrap())
        .collect()
}

#[test]
fn degree_examples_and_orthogonality() {
    for (name, degrees) in [
        ("Sym(3)", vec![1u64, 1, 2]),
        ("Q8", vec![1, 1, 1, 1, 2]),
        ("Perm(4; (0 1 2), (0 1)(2 3))", vec![1, 1, 1, 3]),
        ("Sym(4)", vec![1, 1, 2, 3, 3]),
    ] {
        let t = character_table(&named_group(name).unwrap()).unwrap();
        let mut d = t.degrees();
        d.sort_unstable();
        assert_eq!(d, degrees, "{name}");
        t.check_orthogonality().unwrap();
    }
    for t in tables(60) {
        let order = t.group().order() as u64;
        assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), order);
        assert_eq!(t.degrees()[0], 1);
    }
}

#[test]
fn adams_operations_compose() {
    for t in tables(48) {
        for chi in t.irreducibles() {
            for a in [-1i64, 2, 3] {
                for b in [2i64, 3, 5] {
                    let lhs = adams_psi(&t, a, &adams_psi(&t, b, chi).unwrap()).unwrap();
                    assert_eq!(lhs, adams_psi(&t, a * b, chi).unwrap());
                }
            }
        }
    }
}

#[test]
fn total_power_is_multiplicative() {
    for name in ["Sym(3)", "Dih(4)", "Q8", "Perm(4; (0 1 2), (0 1)(2 3))"] {
        let t = character_table(&named_group(name).unwrap()).unwrap();
        let irr = t.irreducibles();
        for k in 1..=4 {
            for a in irr {
                for b in irr {
                    let prod = total_power(&t, k, &a.mul(b).unwrap()).unwrap();
                    let pa = total_power(&t, k, a).unwrap();
                    let pb = total_power(&t, k, b).unwrap();
                    for s in 0..prod.partitions.len() {
                        for c in 0..irr.len() {
                            let f = t.field();
                            use hkr_core::ring::Ring;
                            assert_eq!(prod.values[s][c], f.mul(&pa.values[s][c], &pb.values[s][c]));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn psi_level_one_is_adams_p() {
    for t in tables(24) {
        for chi in t.irreducibles() {
            for p in [2u64, 3, 5, 7] {
                assert_eq!(
                    psi_level(&t, p, 1, chi).unwrap(),
                    adams_psi(&t, p as i64, chi).unwrap()
                );
            }
        }
    }
}

#[test]
fn products_decompose_with_nonnegative_multiplicities() {
    for t in tables(24) {
        let irr = t.irreducibles();
        for a in irr {
            for b in irr {
                let coeffs = decompose(&t, &a.mul(b).unwrap()).unwrap();
                let total: u64 = coeffs
                    .iter()
                    .zip(t.degrees())
                    .map(|(c, d)| {
                        let q = c.to_rational().unwrap();
                        assert!(q.is_integer() && !q.is_negative());
                        q.to_integer().to_u64().unwrap() * d
                    })
                    .sum();
                let da = a.values()[0]
                    .to_rational()
                    .unwrap()
                    .to_integer()
                    .to_u64()
                    .unwrap();
                let db = b.values()[0]
                    .to_rational()
                    .unwrap()
                    .to_integer()
                    .to_u64()
                    .unwrap();
                assert_eq!(total, da * db);
            }
        }
    }
}

#[test]
fn rank_equals_prediction() {
    for t in tables(60) {
        for p in [2u64, 3, 5] {
            let rank = char_matrix_rank(&t, p).unwrap();
            assert_eq!(rank, rank_prediction(t.group(), p, 1).unwrap());
            assert_eq!(rank, p_power_classes(&t, p).len());
        }
    }
}

/// One block per orbit of classes under `g ↦ g^u`, each of dimension
/// `φ(p^k) / |stabilizer|`.
fn galois_dim_oracle(t: &CharacterTable, p: u64, k: u32) -> usize {
    let units = arith::units_mod(p.pow(k));
    let mut orbits: Vec<Vec<usize>> = p_power_classes(t, p)
        .iter()
        .map(|&c| {
            let mut orbit: Vec<usize> = units.iter().map(|&u| t.power_class(c, u as i64)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            orbit
        })
        .collect();
    orbits.sort();
    orbits.dedup();
    orbits
        .iter()
        .map(|orbit| {
            let c = orbit[0];
            let stab = units.iter().filter(|&&u| t.power_class(c, u as i64) == c).count();
            units.len() / stab
        })
        .sum()
}

#[test]
fn galois_fixed_dimension_matches_orbit_count() {
    for t in tables(48) {
        for p in [2u64, 3] {
            let e = arith::p_part(t.conductor(), p);
            let k0 = arith::p_power_exponent(e, p).unwrap().max(1);
            for k in k0..=k0 + 1 {
                assert_eq!(galois_fixed_dim(&t, p, k).unwrap(), galois_dim_oracle(&t, p, k));
                assert_eq!(galois_fixed_dim(&t, p, k).unwrap(), p_power_classes(&t, p).len());
            }
        }
    }
}

const SAMPLE: &[&str] = &[
    "Sym(3)",
    "Dih(4)",
    "Q8",
    "Cyc(4)",
    "Perm(4; (0 1 2), (0 1)(2 3))",
    "Cyc(3)*Sym(3)",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn character_map_is_a_ring_map(
        which in 0..SAMPLE.len(),
        a in proptest::collection::vec(-3i64..=3, 12),
        b in proptest::collection::vec(-3i64..=3, 12),
        p in prop_oneof![Just(2u64), Just(3)],
    ) {
        let t = character_table(&named_group(SAMPLE[which]).unwrap()).unwrap();
        let r = t.irreducibles().len();
        let (a, b) = (&a[..r], &b[..r]);
        let x = virtual_character(&t, a).unwrap();
        let y = virtual_character(&t, b).unwrap();
        let cm = |f: &hkr_core::charmap::ClassFunction| character_map(&t, p, f).unwrap();
        prop_assert_eq!(cm(&x.mul(&y).unwrap()), cm(&x).mul(&cm(&y)).unwrap());
        prop_assert_eq!(cm(&x.add(&y).unwrap()), cm(&x).add(&cm(&y)).unwrap());
        prop_assert!(Arc::ptr_eq(cm(&x).group(), t.group()));
    }
}
