//! Exact coefficient rings.
//!
//! A [`Ring`] value is a context object: it carries whatever parameters the
//! ring needs (a modulus, a conductor) and performs arithmetic on plain
//! element values. Nothing here touches floating point.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith;

/// Which ring a coefficient lives in, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingKind {
    Rationals,
    Integers,
    IntegersModPn {
        p: u64,
        n: u32,
    },
    PrimeField {
        p: u64,
    },
    Cyclotomic {
        m: u64,
    },
    /// `Q[x]/(f)` or, when `integral`, `Z[x]/(f)` for monic integral `f`.
    PolynomialQuotient {
        modulus: String,
        integral: bool,
    },
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Rationals => write!(f, "Q"),
            RingKind::Integers => write!(f, "Z"),
            RingKind::IntegersModPn { p, n } => write!(f, "Z/{p}^{n}"),
            RingKind::PrimeField { p } => write!(f, "F_{p}"),
            RingKind::Cyclotomic { m } => write!(f, "Q(zeta_{m})"),
            RingKind::PolynomialQuotient { modulus, integral } => {
                write!(f, "{}[x]/({modulus})", if *integral { "Z" } else { "Q" })
            }
        }
    }
}

// `from_*` take `self` because the ring carries its parameters
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + fmt::Debug + PartialEq;

    fn kind(&self) -> RingKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Image of a rational number, when the denominator is invertible here.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inv(a).is_some()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Canonical text form of a coefficient.
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Option<Self::Elem>;

    /// Whether the element is a unit in the residue field `F_p`. Only meaningful
    /// for local rings; the default defers to [`Ring::is_unit`].
    fn is_residue_unit(&self, a: &Self::Elem) -> bool {
        self.is_unit(a)
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn kind(&self) -> RingKind {
        RingKind::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn format(&self, a: &BigRational) -> String {
        format_rational(a)
    }
    fn parse(&self, s: &str) -> Option<BigRational> {
        parse_rational(s)
    }
}

/// The ring of integers. Only `1` and `-1` are units.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn kind(&self) -> RingKind {
        RingKind::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigInt> {
        q.is_integer().then(|| q.to_integer())
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Option<BigInt> {
        s.trim().parse().ok()
    }
}

/// `Z/p^n`, including the prime field `F_p` when `n = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularIntegers {
    p: u64,
    exponent: u32,
    modulus: u64,
}

impl ModularIntegers {
    /// Panics if `p` is not prime or `p^n` does not fit in 62 bits.
    pub fn new(p: u64, n: u32) -> Self {
        assert!(arith::is_prime(p), "{p} is not prime");
        assert!(n >= 1, "exponent must be positive");
        let modulus = p
            .checked_pow(n)
            .filter(|&m| m < (1 << 62))
            .expect("modulus too large");
        Self {
            p,
            exponent: n,
            modulus,
        }
    }

    pub fn prime_field(p: u64) -> Self {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce(&self, n: i64) -> u64 {
        n.rem_euclid(self.modulus as i64) as u64
    }
}

impl Ring for ModularIntegers {
    type Elem = u64;

    fn kind(&self) -> RingKind {
        if self.exponent == 1 {
            RingKind::PrimeField { p: self.p }
        } else {
            RingKind::IntegersModPn {
                p: self.p,
                n: self.exponent,
            }
        }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.modulus
    }
    fn from_int(&self, n: i64) -> u64 {
        self.reduce(n)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.modulus);
        let r = ((n % &m) + &m) % &m;
        r.to_u64().expect("residue fits")
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        arith::inv_mod(den, self.modulus).map(|d| arith::mul_mod(num, d, self.modulus))
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        arith::mul_mod(*a, *b, self.modulus)
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        arith::inv_mod(*a, self.modulus)
    }
    fn is_unit(&self, a: &u64) -> bool {
        !a.is_multiple_of(self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Option<u64> {
        let n: i64 = s.trim().parse().ok()?;
        Some(self.reduce(n))
    }
}

/// `a` or `a/b` with `b > 1`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// Whether the denominator of `q` is prime to `p`.
pub fn is_p_integral(q: &BigRational, p: u64) -> bool {
    valuation(q.denom(), p) == 0
}
