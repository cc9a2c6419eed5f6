use std::fmt;

use num::rational::BigRational;
use serde::Serialize;

use crate::error::{HkrError, Result};
use crate::poly::QPoly;
use crate::ring::{format_rational, is_p_integral, ModularIntegers, Rationals, Ring, RingKind};

use super::multi::MultiSeries;
use super::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FglName {
    Additive,
    Multiplicative,
    Honda { p: u64, n: u32 },
    Custom(String),
}

impl fmt::Display for FglName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FglName::Additive => write!(f, "additive"),
            FglName::Multiplicative => write!(f, "multiplicative"),
            FglName::Honda { p, n } => write!(f, "honda({p},{n})"),
            FglName::Custom(label) => write!(f, "{label}"),
        }
    }
}

impl FglName {
    /// Accepts `additive`, `multiplicative` and `honda(p,n)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "additive" => return Ok(FglName::Additive),
            "multiplicative" => return Ok(FglName::Multiplicative),
            _ => {}
        }
        let bad = || HkrError::InvalidArgument(format!("unknown formal group law `{s}`"));
        let inner = s
            .strip_prefix("honda(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, n) = inner.split_once(',').ok_or_else(bad)?;
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        if !crate::arith::is_prime(p) || n == 0 {
            return Err(HkrError::InvalidArgument(format!(
                "honda(p,n) needs p prime and n >= 1, got {s}"
            )));
        }
        Ok(FglName::Honda { p, n })
    }
}

/// A formal group law `F(x, y)` known to total degree `D`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalGroupLaw<R: Ring> {
    name: FglName,
    law: MultiSeries<R>,
}

/// Weierstrass degree of a series over a ring with residue field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeierstrassDegree {
    Finite(usize),
    /// No coefficient up to `D` is a residue unit.
    Infinite,
}

impl fmt::Display for WeierstrassDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeierstrassDegree::Finite(d) => write!(f, "{d}"),
            WeierstrassDegree::Infinite => write!(f, "infinite"),
        }
    }
}

/// Honda logarithm `Σ_{i≥0} x^{p^{ni}} / p^i` over `Q` to degree `D`.
pub fn honda_logarithm(p: u64, n: u32, degree: usize) -> TruncatedSeries<Rationals> {
    let mut coeffs = vec![BigRational::from_integer(0.into()); degree + 1];
    let step = p.pow(n);
    let (mut e, mut i) = (1u64, 0u32);
    while e as usize <= degree {
        coeffs[e as usize] = BigRational::new(1.into(), num::BigInt::from(p).pow(i));
        e *= step;
        i += 1;
    }
    TruncatedSeries::new(Rationals, coeffs, degree)
}

/// The Honda law `l^{-1}(l(x) + l(y))` over `Q`, checked `p`-integral.
pub fn honda_rational(p: u64, n: u32, degree: usize) -> Result<FormalGroupLaw<Rationals>> {
    let step = p
        .checked_pow(n)
        .filter(|&s| s as usize <= degree)
        .ok_or_else(|| HkrError::TruncationTooSmall {
            degree,
            reason: format!("honda({p},{n}) needs D >= {p}^{n}"),
        })?;
    debug_assert!(step >= 2);
    let log = honda_logarithm(p, n, degree);
    let exp = log.reversion()?;
    let lx = MultiSeries::compose_univariate(&log, &MultiSeries::var(Rationals, 2, 0, degree))?;
    let ly = MultiSeries::compose_univariate(&log, &MultiSeries::var(Rationals, 2, 1, degree))?;
    let law = MultiSeries::compose_univariate(&exp, &lx.add(&ly)?)?;
    for (_, c) in law.terms() {
        if !is_p_integral(&c, p) {
            return Err(HkrError::NotIntegral {
                coefficient: format_rational(&c),
                p,
            });
        }
    }
    Ok(FormalGroupLaw {
        name: FglName::Honda { p, n },
        law,
    })
}

/// Construct one of the named laws over `ring` to degree `D`. Honda laws are
/// built over `Q` and mapped coefficientwise, which needs the denominators to
/// be invertible in `ring`.
pub fn make_fgl<R: Ring>(name: &FglName, ring: R, degree: usize) -> Result<FormalGroupLaw<R>> {
    let one = ring.one();
    let linear = |extra: Vec<(Vec<u32>, R::Elem)>| {
        let mut terms = vec![(vec![1, 0], one.clone()), (vec![0, 1], one.clone())];
        terms.extend(extra);
        MultiSeries::from_terms(ring.clone(), 2, degree, terms)
    };
    let law = match name {
        FglName::Additive => linear(vec![]),
        FglName::Multiplicative => linear(vec![(vec![1, 1], one.clone())]),
        FglName::Honda { p, n } => {
            let q = honda_rational(*p, *n, degree)?;
            q.law
                .map(ring.clone(), |c| ring.from_rational(c))
                .ok_or_else(|| {
                    HkrError::InvalidArgument(format!("honda({p},{n}) does not reduce to {}", ring.kind()))
                })?
        }
        FglName::Custom(_) => {
            return Err(HkrError::InvalidArgument(
                "custom laws are built with FormalGroupLaw::custom".into(),
            ))
        }
    };
    Ok(FormalGroupLaw {
        name: name.clone(),
        law,
    })
}

impl<R: Ring> FormalGroupLaw<R> {
    /// A user-supplied law; all three axioms are checked to its degree.
    pub fn custom(label: impl Into<String>, law: MultiSeries<R>) -> Result<Self> {
        if law.nvars() != 2 {
            return Err(HkrError::InvalidArgument(
                "a formal group law has two variables".into(),
            ));
        }
        let f = Self {
            name: FglName::Custom(label.into()),
            law,
        };
        f.check_axioms()?;
        Ok(f)
    }

    pub fn name(&self) -> &FglName {
        &self.name
    }

    pub fn series(&self) -> &MultiSeries<R> {
        &self.law
    }

    pub fn ring(&self) -> &R {
        self.law.ring()
    }

    pub fn degree(&self) -> usize {
        self.law.degree()
    }

    /// Coefficientwise image in another ring.
    pub fn map<S: Ring>(
        &self,
        target: S,
        f: impl Fn(&R::Elem) -> Option<S::Elem>,
    ) -> Option<FormalGroupLaw<S>> {
        Some(FormalGroupLaw {
            name: self.name.clone(),
            law: self.law.map(target, f)?,
        })
    }

    /// Unit `F(x,0) = x`, commutativity, and associativity in three variables.
    pub fn check_axioms(&self) -> Result<()> {
        let d = self.degree();
        let r = self.ring().clone();
        let x2 = MultiSeries::var(r.clone(), 2, 0, d);
        let y2 = MultiSeries::var(r.clone(), 2, 1, d);
        if self.law.kill_var(1) != x2 || self.law.kill_var(0) != y2 {
            return Err(HkrError::AxiomFailure(format!("{}: unit axiom", self.name)));
        }
        if self.law.swap_vars(0, 1) != self.law {
            return Err(HkrError::AxiomFailure(format!("{}: commutativity", self.name)));
        }
        let x = MultiSeries::var(r.clone(), 3, 0, d);
        let y = MultiSeries::var(r.clone(), 3, 1, d);
        let z = MultiSeries::var(r, 3, 2, d);
        let left = self.law.substitute2(&self.law.substitute2(&x, &y)?, &z)?;
        let right = self.law.substitute2(&x, &self.law.substitute2(&y, &z)?)?;
        if left != right {
            return Err(HkrError::AxiomFailure(format!("{}: associativity", self.name)));
        }
        Ok(())
    }

    fn univariate(&self, f: &TruncatedSeries<R>) -> Result<MultiSeries<R>> {
        if f.ring() != self.ring() {
            return Err(HkrError::RingMismatch(format!(
                "{} vs {}",
                f.ring().kind(),
                self.ring().kind()
            )));
        }
        if !f.has_zero_constant() {
            return Err(HkrError::NonzeroConstantTerm);
        }
        Ok(MultiSeries::from_univariate(f, 1, 0))
    }

    /// `F(f, g)`.
    pub fn sum(&self, f: &TruncatedSeries<R>, g: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
        let s = self.law.substitute2(&self.univariate(f)?, &self.univariate(g)?)?;
        Ok(s.to_univariate().expect("one variable"))
    }

    /// The series `ι(x)` with `F(x, ι(x)) = 0`, solved one degree at a time.
    pub fn inverse_series(&self) -> Result<TruncatedSeries<R>> {
        let d = self.degree();
        let r = self.ring();
        let x = TruncatedSeries::x(r.clone(), d);
        let mut iota = TruncatedSeries::zero(r.clone(), d);
        for k in 1..=d {
            // F(x, y) = x + y + (mixed terms), so the y-linear coefficient is 1
            let c = self.sum(&x, &iota)?.coeff(k);
            let mut coeffs = iota.coeffs().to_vec();
            coeffs[k] = r.neg(&c);
            iota = TruncatedSeries::new(r.clone(), coeffs, d);
        }
        Ok(iota)
    }

    /// `ι(f)`.
    pub fn inverse(&self, f: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
        self.univariate(f)?;
        self.inverse_series()?.compose(f)
    }

    /// `[m](x)`: `[0] = 0`, `[m] = F(x, [m-1])`, `[-m] = ι([m])`.
    pub fn m_series(&self, m: i64) -> Result<TruncatedSeries<R>> {
        let d = self.degree();
        let r = self.ring();
        let mut acc = TruncatedSeries::zero(r.clone(), d);
        let mut base = TruncatedSeries::x(r.clone(), d);
        let mut e = m.unsigned_abs();
        // double-and-add; the law is associative so this agrees with iteration
        while e > 0 {
            if e & 1 == 1 {
                acc = self.sum(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.sum(&base, &base)?;
            }
        }
        if m < 0 {
            acc = self.inverse(&acc)?;
        }
        Ok(acc)
    }

    /// `⟨p^k⟩(x) = e([p^{k-1}](x))` where `[p](x) = x e(x)`; known to degree
    /// `D - 1`. The identity `[p^k] = [p^{k-1}] ⟨p^k⟩` is checked to degree `D`.
    pub fn angle_series(&self, p: u64, k: u32) -> Result<TruncatedSeries<R>> {
        if k == 0 {
            return Err(HkrError::InvalidArgument("angle series needs k >= 1".into()));
        }
        let pk1 = p
            .checked_pow(k - 1)
            .and_then(|v| i64::try_from(v).ok())
            .ok_or_else(|| HkrError::InvalidArgument(format!("{p}^{} overflows", k - 1)))?;
        let e = self.m_series(p as i64)?.divide_by_x()?;
        let prev = self.m_series(pk1)?;
        let angle = e.compose(&prev)?;
        let full = self.m_series(pk1 * p as i64)?;
        if prev.mul_by_nonunit(&angle) != full {
            return Err(HkrError::Consistency(format!(
                "[{p}^{k}] != [{p}^{}] * <{p}^{k}>",
                k - 1
            )));
        }
        if residue_characteristic(self.ring()).is_some() && first_residue_unit(&full).is_none() {
            return Err(HkrError::TruncationTooSmall {
                degree: self.degree(),
                reason: format!("[{p}^{k}] vanishes mod p up to degree D"),
            });
        }
        Ok(angle)
    }

    /// `u(x, t)` with `x -_F y = u · (x - y)` after substituting `y = x - t`.
    pub fn subtraction_unit(&self) -> Result<MultiSeries<R>> {
        let d = self.degree();
        let r = self.ring().clone();
        let x = MultiSeries::var(r.clone(), 2, 0, d);
        let t = MultiSeries::var(r.clone(), 2, 1, d);
        let y = x.sub(&t)?;
        let minus_y = MultiSeries::compose_univariate(&self.inverse_series()?, &y)?;
        let diff = self.law.substitute2(&x, &minus_y)?;
        diff.divide_by_var(1)
            .ok_or_else(|| HkrError::Consistency("x -_F y is not divisible by x - y".into()))
    }
}

fn residue_characteristic<R: Ring>(ring: &R) -> Option<u64> {
    match ring.kind() {
        RingKind::IntegersModPn { p, .. } | RingKind::PrimeField { p } => Some(p),
        _ => None,
    }
}

fn first_residue_unit<R: Ring>(s: &TruncatedSeries<R>) -> Option<usize> {
    s.coeffs().iter().position(|c| s.ring().is_residue_unit(c))
}

/// Index of the first coefficient that is a unit mod `p`.
pub fn weierstrass_degree(s: &TruncatedSeries<ModularIntegers>) -> WeierstrassDegree {
    first_residue_unit(s).map_or(WeierstrassDegree::Infinite, WeierstrassDegree::Finite)
}

/// Coefficientwise reduction of a rational series; `None` when a denominator
/// is not invertible.
pub fn reduce_series(
    s: &TruncatedSeries<Rationals>,
    ring: &ModularIntegers,
) -> Option<TruncatedSeries<ModularIntegers>> {
    s.map(*ring, |c| ring.from_rational(c))
}

/// `⟨p^i⟩(x)` of the multiplicative law as an exact polynomial over `Q`,
/// with `⟨p^0⟩(x) = x`.
pub fn multiplicative_angle_polynomial(p: u64, i: u32) -> Result<QPoly> {
    if i == 0 {
        return Ok(QPoly::x(Rationals));
    }
    let pi = p
        .checked_pow(i)
        .filter(|&v| v <= 1 << 12)
        .ok_or_else(|| HkrError::SizeCap {
            what: format!("{p}^{i}"),
            cap: 1 << 12,
        })?;
    // deg ⟨p^i⟩ = p^i - p^{i-1} < D = p^i, so the truncated series is exact
    let f = make_fgl(&FglName::Multiplicative, Rationals, pi as usize)?;
    Ok(f.angle_series(p, i)?.to_poly())
}

/// Bézout certificate `s f + t g = gcd` for `f = ⟨p^i⟩`, `g = ⟨p^j⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoprimalityCertificate {
    pub p: u64,
    pub i: u32,
    pub j: u32,
    pub f: QPoly,
    pub g: QPoly,
    pub gcd: QPoly,
    pub s: QPoly,
    pub t: QPoly,
}

impl CoprimalityCertificate {
    pub fn coprime(&self) -> bool {
        self.gcd.degree() == Some(0)
    }

    /// Recomputes `s f + t g` and compares with the stated gcd.
    pub fn verify(&self) -> bool {
        self.s.mul(&self.f).add(&self.t.mul(&self.g)) == self.gcd
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p,
            "i": self.i,
            "j": self.j,
            "f": self.f.to_text("x"),
            "g": self.g.to_text("x"),
            "gcd": self.gcd.to_text("x"),
            "s": self.s.to_text("x"),
            "t": self.t.to_text("x"),
            "coprime": self.coprime(),
        })
    }
}

/// gcd of `⟨p^i⟩` and `⟨p^j⟩` for the multiplicative law, monic over `Q`.
pub fn coprimality_check(p: u64, i: u32, j: u32) -> Result<CoprimalityCertificate> {
    if i == j {
        return Err(HkrError::InvalidArgument("coprimality needs i != j".into()));
    }
    let f = multiplicative_angle_polynomial(p, i)?;
    let g = multiplicative_angle_polynomial(p, j)?;
    let (gcd, s, t) = QPoly::ext_gcd(&f, &g).expect("Q is a field");
    Ok(CoprimalityCertificate {
        p,
        i,
        j,
        f,
        g,
        gcd,
        s,
        t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{cyclotomic_polynomial, shifted_power_minus_one};

    fn q(c: &[i64], d: usize) -> TruncatedSeries<Rationals> {
        TruncatedSeries::from_ints(Rationals, c, d)
    }

    #[test]
    fn names_round_trip() {
        for s in ["additive", "multiplicative", "honda(2,1)", "honda(3,2)"] {
            assert_eq!(FglName::parse(s).unwrap().to_string(), s);
        }
        assert!(FglName::parse("honda(4,1)").is_err());
        assert!(FglName::parse("lubin").is_err());
    }

    #[test]
    fn sum_and_inverse() {
        let add = make_fgl(&FglName::Additive, Rationals, 4).unwrap();
        let x = q(&[0, 1], 4);
        assert_eq!(add.sum(&x, &x).unwrap(), q(&[0, 2], 4));
        let mult = make_fgl(&FglName::Multiplicative, Rationals, 5).unwrap();
        let iota = mult.inverse(&q(&[0, 1], 5)).unwrap();
        assert_eq!(iota, q(&[0, -1, 1, -1, 1, -1], 5));
        assert!(mult.sum(&x.truncate(5), &iota).unwrap().is_zero());
        assert_eq!(mult.sum(&q(&[1], 5), &x), Err(HkrError::NonzeroConstantTerm));
    }

    #[test]
    fn multiplicative_m_series_is_binomial() {
        let mult = make_fgl(&FglName::Multiplicative, Rationals, 10).unwrap();
        assert_eq!(mult.m_series(1).unwrap(), q(&[0, 1], 10));
        assert_eq!(mult.m_series(2).unwrap(), q(&[0, 2, 1], 10));
        for m in [3u64, 4, 8, 9] {
            let expect = TruncatedSeries::from_poly(&shifted_power_minus_one(m), 10);
            assert_eq!(mult.m_series(m as i64).unwrap(), expect);
        }
    }

    #[test]
    fn angle_examples() {
        let mult = make_fgl(&FglName::Multiplicative, Rationals, 6).unwrap();
        assert_eq!(mult.angle_series(2, 1).unwrap(), q(&[2, 1], 5));
        assert_eq!(mult.angle_series(2, 2).unwrap(), q(&[2, 2, 1], 5));
        let add = make_fgl(&FglName::Additive, Rationals, 6).unwrap();
        for k in 1..=2 {
            assert_eq!(add.angle_series(3, k).unwrap(), q(&[3], 5));
        }
        let expect = cyclotomic_polynomial(9).compose(&QPoly::q_from_ints(&[1, 1]));
        assert_eq!(multiplicative_angle_polynomial(3, 2).unwrap(), expect);
    }

    #[test]
    fn honda_two_one_reduces_like_multiplicative() {
        let h = make_fgl(&FglName::Honda { p: 2, n: 1 }, Rationals, 4).unwrap();
        let two = h.m_series(2).unwrap();
        let f2 = ModularIntegers::prime_field(2);
        let reduced = reduce_series(&two, &f2).unwrap();
        assert_eq!(reduced.coeffs(), &[0, 0, 1, 0, 0]);
        assert_eq!(weierstrass_degree(&reduced), WeierstrassDegree::Finite(2));
    }

    #[test]
    fn honda_two_two_has_weierstrass_degree_four() {
        let h = make_fgl(&FglName::Honda { p: 2, n: 2 }, ModularIntegers::prime_field(2), 8).unwrap();
        let two = h.m_series(2).unwrap();
        assert_eq!(weierstrass_degree(&two), WeierstrassDegree::Finite(4));
        assert_eq!(two.coeff(4), 1);
    }

    #[test]
    fn truncation_too_small_over_fp() {
        let m = make_fgl(&FglName::Multiplicative, ModularIntegers::prime_field(2), 3).unwrap();
        assert!(matches!(
            m.angle_series(2, 2),
            Err(HkrError::TruncationTooSmall { .. })
        ));
        assert_eq!(
            weierstrass_degree(&m.m_series(4).unwrap()),
            WeierstrassDegree::Infinite
        );
    }

    #[test]
    fn custom_laws_are_validated() {
        let ring = Rationals;
        let good = make_fgl(&FglName::Multiplicative, ring, 4).unwrap();
        assert!(FormalGroupLaw::custom("mult", good.series().clone()).is_ok());
        let x = MultiSeries::var(ring, 2, 0, 4);
        let y = MultiSeries::var(ring, 2, 1, 4);
        let xy = x.mul(&y).unwrap();
        // x + y + x^2 y fails commutativity
        let bad = x.add(&y).unwrap().add(&xy.mul(&x).unwrap()).unwrap();
        assert!(matches!(
            FormalGroupLaw::custom("bad", bad),
            Err(HkrError::AxiomFailure(_))
        ));
        // x + y + x^2 y^2 is commutative and unital but not associative
        let bad = x.add(&y).unwrap().add(&xy.mul(&xy).unwrap()).unwrap();
        let err = FormalGroupLaw::custom("bad", bad).unwrap_err();
        assert_eq!(err, HkrError::AxiomFailure("bad: associativity".into()));
    }

    #[test]
    fn coprimality_examples() {
        for (p, i, j) in [(2, 0, 1), (2, 1, 2), (3, 1, 2)] {
            let c = coprimality_check(p, i, j).unwrap();
            assert!(c.coprime() && c.verify(), "{p} {i} {j}");
        }
        assert!(coprimality_check(2, 1, 1).is_err());
    }
}
