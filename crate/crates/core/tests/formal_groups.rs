use hkr_core::fgl::text::{multi_to_text, parse_multi, parse_series, series_to_text};
use hkr_core::fgl::{
    coprimality_check, honda_logarithm, honda_rational, make_fgl, weierstrass_degree, FglName, MultiSeries,
    TruncatedSeries, WeierstrassDegree,
};
use hkr_core::ring::{Integers, ModularIntegers, Rationals, Ring};
use num::rational::BigRational;
use num::BigInt;
use proptest::prelude::*;

fn binomial(n: i64, k: usize) -> BigInt {
    // generalized binomial coefficient, valid for negative n
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k as i64 {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// `(1+x)^m - 1` to degree `d`, from binomial coefficients.
fn shifted_power(m: i64, d: usize) -> TruncatedSeries<Integers> {
    let coeffs = (0..=d)
        .map(|j| if j == 0 { BigInt::from(0) } else { binomial(m, j) })
        .collect();
    TruncatedSeries::new(Integers, coeffs, d)
}

#[test]
fn named_laws_satisfy_axioms() {
    for d in [1usize, 4, 9, 16] {
        make_fgl(&FglName::Additive, Rationals, d)
            .unwrap()
            .check_axioms()
            .unwrap();
        make_fgl(&FglName::Multiplicative, Integers, d)
            .unwrap()
            .check_axioms()
            .unwrap();
    }
    for (p, n) in [(2u64, 1u32), (2, 2), (3, 1)] {
        honda_rational(p, n, 16).unwrap().check_axioms().unwrap();
    }
    make_fgl(&FglName::Honda { p: 2, n: 3 }, ModularIntegers::new(2, 4), 16)
        .unwrap()
        .check_axioms()
        .unwrap();
}

#[test]
fn custom_law_rejected_when_not_associative() {
    let law = parse_multi(
        &Rationals,
        "1*x + 1*y + 1*x^2*y + 1*x*y^2 + O((x,y)^6)",
        &["x", "y"],
    )
    .unwrap();
    assert!(hkr_core::fgl::FormalGroupLaw::custom("bad", law).is_err());
    let good = parse_multi(&Rationals, "1*x + 1*y + 3*x*y + O((x,y)^6)", &["x", "y"]).unwrap();
    assert!(hkr_core::fgl::FormalGroupLaw::custom("scaled", good).is_ok());
}

#[test]
fn multiplicative_series_match_binomials() {
    let d = 10;
    let law = make_fgl(&FglName::Multiplicative, Integers, d).unwrap();
    for m in -6i64..=6 {
        assert_eq!(law.m_series(m).unwrap(), shifted_power(m, d), "[{m}]");
    }
    // ι(x) = 1/(1+x) - 1
    assert_eq!(law.inverse_series().unwrap(), shifted_power(-1, d));
    let additive = make_fgl(&FglName::Additive, Integers, d).unwrap();
    assert_eq!(
        additive.m_series(-3).unwrap(),
        TruncatedSeries::from_ints(Integers, &[0, -3], d)
    );
}

#[test]
fn hand_expansions() {
    let law = make_fgl(&FglName::Multiplicative, Integers, 4).unwrap();
    assert_eq!(
        series_to_text(&law.m_series(2).unwrap(), "x"),
        "2*x + 1*x^2 + O(x^5)"
    );
    assert_eq!(
        multi_to_text(law.series(), &["x", "y"]),
        "1*x + 1*y + 1*x*y + O((x,y)^5)"
    );
    // known one degree below the law
    assert_eq!(
        law.angle_series(2, 1).unwrap(),
        TruncatedSeries::from_ints(Integers, &[2, 1], 3)
    );
    let honda = honda_rational(2, 1, 4).unwrap();
    // F(x,y) = l^{-1}(l(x)+l(y)) with l = x + x^2/2 + x^4/4; the quadratic term is -xy
    let half = BigRational::new(1.into(), 2.into());
    assert_eq!(
        honda.series().coeff(&[1, 1]),
        -BigRational::from_integer(1.into())
    );
    assert_eq!(honda_logarithm(2, 1, 4).coeff(2), half);
}

#[test]
fn honda_logarithm_linearizes_the_law() {
    for (p, n, d) in [(2u64, 1u32, 8usize), (2, 2, 8), (3, 1, 9)] {
        let law = honda_rational(p, n, d).unwrap();
        let log = honda_logarithm(p, n, d);
        let x = MultiSeries::var(Rationals, 2, 0, d);
        let y = MultiSeries::var(Rationals, 2, 1, d);
        let left = MultiSeries::compose_univariate(&log, law.series()).unwrap();
        let right = MultiSeries::compose_univariate(&log, &x)
            .unwrap()
            .add(&MultiSeries::compose_univariate(&log, &y).unwrap())
            .unwrap();
        assert_eq!(left, right);
        // every coefficient reduces mod p
        let reduced = law.map(ModularIntegers::prime_field(p), |c| {
            ModularIntegers::prime_field(p).from_rational(c)
        });
        assert!(reduced.is_some(), "honda({p},{n}) to degree {d}");
    }
}

#[test]
fn weierstrass_degrees() {
    for (p, n) in [(2u64, 1u32), (2, 2), (3, 1), (2, 3)] {
        let law = make_fgl(&FglName::Honda { p, n }, ModularIntegers::new(p, 2), 16).unwrap();
        let mut k = 1;
        while let Some(expected) = p.checked_pow(k * n).filter(|&v| v <= 16) {
            let s = law.m_series(p.pow(k) as i64).unwrap();
            assert_eq!(
                weierstrass_degree(&s),
                WeierstrassDegree::Finite(expected as usize)
            );
            k += 1;
        }
    }
    let law = make_fgl(&FglName::Additive, ModularIntegers::new(2, 1), 8).unwrap();
    assert_eq!(
        weierstrass_degree(&law.m_series(2).unwrap()),
        WeierstrassDegree::Infinite
    );
}

#[test]
fn angle_product_factorization() {
    for (p, k) in [(2u64, 3u32), (3, 2), (5, 1)] {
        let pk = p.pow(k);
        let d = pk as usize + 1;
        let law = make_fgl(&FglName::Multiplicative, Integers, d).unwrap();
        let mut acc = TruncatedSeries::x(Integers, d);
        for i in 1..=k {
            acc = acc.mul_by_nonunit(&law.angle_series(p, i).unwrap());
        }
        assert_eq!(acc, shifted_power(pk as i64, d));
    }
    for (p, i, j) in [(2u64, 0u32, 1u32), (2, 1, 3), (3, 1, 2)] {
        let c = coprimality_check(p, i, j).unwrap();
        assert!(c.coprime() && c.verify());
    }
}

#[test]
fn subtraction_unit_has_constant_term_one() {
    for name in [FglName::Additive, FglName::Multiplicative] {
        let law = make_fgl(&name, Rationals, 8).unwrap();
        let u = law.subtraction_unit().unwrap();
        assert!(Rationals.is_one(&u.constant()), "{name}");
    }
    let honda = honda_rational(2, 1, 8).unwrap();
    assert!(Rationals.is_one(&honda.subtraction_unit().unwrap().constant()));
}

#[test]
fn truncation_errors() {
    assert!(honda_rational(2, 3, 7).is_err());
    assert!(FglName::parse("honda(4,1)").is_err());
    assert_eq!(
        FglName::parse("honda(3, 2)").unwrap(),
        FglName::Honda { p: 3, n: 2 }
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn formal_sum_of_multiples(m in -6i64..=6, m2 in -6i64..=6, which in 0usize..3) {
        let d = 8;
        let law = match which {
            0 => make_fgl(&FglName::Multiplicative, Rationals, d).unwrap(),
            1 => make_fgl(&FglName::Additive, Rationals, d).unwrap(),
            _ => honda_rational(2, 1, d).unwrap(),
        };
        let left = law.m_series(m + m2).unwrap();
        let right = law.sum(&law.m_series(m).unwrap(), &law.m_series(m2).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn series_text_round_trip(coeffs in proptest::collection::vec(-20i64..20, 1..9), extra in 0usize..3) {
        let d = coeffs.len() - 1 + extra;
        let s = TruncatedSeries::from_ints(Integers, &coeffs, d);
        let text = series_to_text(&s, "x");
        prop_assert_eq!(parse_series(&Integers, &text, "x").unwrap(), s);
    }

    #[test]
    fn composition_with_reversion_is_identity(tail in proptest::collection::vec(-5i64..5, 0..6)) {
        let mut coeffs = vec![0, 1];
        coeffs.extend(tail);
        let d = 7;
        let f = TruncatedSeries::from_ints(Integers, &coeffs, d);
        let g = f.reversion().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), TruncatedSeries::x(Integers, d));
    }
}
