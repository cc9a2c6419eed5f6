use hkr_core::arith;
use hkr_core::levelrings::{
    cpk_ring, drinfeld_dk, galois_action, galois_fixed_subring_dim, global_coordinate, localize_c0k,
    shifted_cyclotomic, tower_map, vandermonde_det, z_image, QuotientRing, RingElement,
};
use hkr_core::poly::{shifted_power_minus_one, QPoly};
use proptest::prelude::*;

fn element(ring: &QuotientRing, coeffs: &[i64]) -> RingElement {
    ring.element(&QPoly::q_from_ints(coeffs)).unwrap()
}

fn idempotent(ring: &QuotientRing, i: usize) -> RingElement {
    let n = ring.crt_factors().len();
    let parts: Vec<QPoly> = (0..n)
        .map(|j| QPoly::q_from_ints(&[if i == j { 1 } else { 0 }]))
        .collect();
    ring.element(&ring.reassemble(&parts).unwrap()).unwrap()
}

#[test]
fn vandermonde_matches_difference_product() {
    for (p, k) in [(3u64, 1u32), (2, 1), (2, 2), (5, 1), (2, 3)] {
        let ring = cpk_ring(p, k).unwrap();
        let n = p.pow(k);
        let nodes: Vec<RingElement> = (0..n)
            .map(|j| ring.element(&shifted_power_minus_one(j)).unwrap())
            .collect();
        let mut expected = element(&ring, &[1]);
        for j in 0..n as usize {
            for i in 0..j {
                expected = expected.mul(&nodes[j].sub(&nodes[i]).unwrap()).unwrap();
            }
        }
        let (det, report) = vandermonde_det(p, k).unwrap();
        assert_eq!(det, expected, "{p}^{k}");
        assert!(report.passes);
        assert_eq!(report.components.len(), k as usize + 1);
    }
}

#[test]
fn vandermonde_three_by_three_components() {
    let (_, report) = vandermonde_det(3, 1).unwrap();
    // [j](x) vanishes on the x = 0 component, so both sides vanish there
    assert!(report.components[0].det_vanishes && report.components[0].product_vanishes);
    assert!(report.components[1].unit.is_some());
}

#[test]
fn localization_and_drinfeld_rings() {
    for (p, k) in [(2u64, 1u32), (2, 2), (3, 1), (3, 2), (5, 1), (7, 1)] {
        let d = localize_c0k(p, k).unwrap();
        assert_eq!(d.dimension as u64, arith::euler_phi(p.pow(k)));
        assert!(d.eisenstein_at_p);
        let dk = drinfeld_dk(p, k).unwrap();
        assert!(dk.is_integral());
        assert_eq!(dk.modulus(), &shifted_cyclotomic(p, k));
    }
    let dk = drinfeld_dk(2, 2).unwrap();
    assert!(dk
        .element(&QPoly::new(
            hkr_core::ring::Rationals,
            vec![hkr_core::ring::rational(1, 2)]
        ))
        .is_err());
}

#[test]
fn fixed_subring_is_spanned_by_idempotents() {
    for (p, k) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)] {
        let ring = cpk_ring(p, k).unwrap();
        assert_eq!(galois_fixed_subring_dim(&ring).unwrap(), k as usize + 1);
        for i in 0..=k as usize {
            let e = idempotent(&ring, i);
            assert_eq!(e.mul(&e).unwrap(), e);
            for u in arith::units_mod(p.pow(k)) {
                assert_eq!(galois_action(u as i64, &e).unwrap(), e);
            }
        }
    }
}

#[test]
fn tower_sends_level_points_to_level_points() {
    for (p, k) in [(2u64, 1u32), (2, 2), (3, 1)] {
        let low = z_image(&cpk_ring(p, k).unwrap()).unwrap();
        let high = z_image(&cpk_ring(p, k + 1).unwrap()).unwrap();
        for j in 1..p.pow(k) as usize {
            assert_eq!(tower_map(&low[j - 1]).unwrap(), high[j * p as usize - 1]);
        }
    }
}

#[test]
fn global_coordinate_of_level_points() {
    let ring = cpk_ring(2, 2).unwrap();
    // [j](x) = y^j - 1
    for (j, a) in z_image(&ring).unwrap().iter().enumerate() {
        let mut coeffs = vec![0i64; j + 2];
        coeffs[0] = -1;
        coeffs[j + 1] = 1;
        assert_eq!(global_coordinate(a).unwrap(), QPoly::q_from_ints(&coeffs));
    }
}

fn ring_and_coeffs() -> impl Strategy<Value = ((u64, u32), Vec<i64>, Vec<i64>)> {
    prop_oneof![
        Just((2u64, 1u32)),
        Just((2, 2)),
        Just((2, 3)),
        Just((3, 1)),
        Just((3, 2))
    ]
    .prop_flat_map(|(p, k)| {
        let n = p.pow(k) as usize;
        (
            Just((p, k)),
            proptest::collection::vec(-9i64..9, n),
            proptest::collection::vec(-9i64..9, n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn crt_round_trip((level, a, b) in ring_and_coeffs()) {
        let ring = cpk_ring(level.0, level.1).unwrap();
        let x = element(&ring, &a);
        let y = element(&ring, &b);
        prop_assert_eq!(ring.reassemble(&x.project()).unwrap(), x.rep().clone());
        // projection is a ring map
        let xy = x.mul(&y).unwrap().project();
        for (i, f) in ring.crt_factors().iter().enumerate() {
            let prod = x.project()[i].mul(&y.project()[i]).rem(f).unwrap();
            prop_assert_eq!(&xy[i], &prod);
        }
    }

    #[test]
    fn galois_action_is_a_ring_automorphism((level, a, b) in ring_and_coeffs(), u in 1i64..40, v in 1i64..40) {
        let (p, k) = level;
        prop_assume!(u % p as i64 != 0 && v % p as i64 != 0);
        let ring = cpk_ring(p, k).unwrap();
        let x = element(&ring, &a);
        let y = element(&ring, &b);
        let g = |t: &RingElement| galois_action(u, t).unwrap();
        prop_assert_eq!(g(&x.mul(&y).unwrap()), g(&x).mul(&g(&y)).unwrap());
        prop_assert_eq!(g(&x.add(&y).unwrap()), g(&x).add(&g(&y)).unwrap());
        prop_assert_eq!(galois_action(v, &g(&x)).unwrap(), galois_action(u * v, &x).unwrap());
    }
}
