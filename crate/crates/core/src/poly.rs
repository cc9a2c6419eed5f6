//! Dense univariate polynomials over an exact ring.

use crate::ring::{Rationals, Ring};

/// Coefficients low degree first; no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

pub type QPoly = Poly<Rationals>;

impl<R: Ring> Poly<R> {
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Self {
        let mut p = Self { ring, coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(ring: R, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| ring.from_int(c)).collect();
        Self::new(ring, coeffs)
    }

    pub fn zero(ring: R) -> Self {
        Self {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::constant(ring, one)
    }

    /// The polynomial `x`.
    pub fn x(ring: R) -> Self {
        let coeffs = vec![ring.zero(), ring.one()];
        Self::new(ring, coeffs)
    }

    pub fn monomial(ring: R, c: R::Elem, degree: usize) -> Self {
        let mut coeffs = vec![ring.zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(ring, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.ring.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.ring.is_one(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ring.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Self::new(self.ring.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ring.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Self::new(self.ring.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let r = &self.ring;
        let mut coeffs = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = r.add(&coeffs[i + j], &r.mul(a, b));
            }
        }
        Self::new(r.clone(), coeffs)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ring.clone());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let r = &self.ring;
        self.coeffs
            .iter()
            .rev()
            .fold(r.zero(), |acc, c| r.add(&r.mul(&acc, x), c))
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.ring.clone()), |acc, c| {
                acc.mul(inner).add(&Self::constant(self.ring.clone(), c.clone()))
            })
    }

    /// Division with remainder. The divisor's leading coefficient must be a unit.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let r = &self.ring;
        let lead_inv = r.inv(divisor.leading()?)?;
        let dd = divisor.degree()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(r.clone()), self.clone()));
        }
        let mut quot = vec![r.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = r.mul(&rem[i], &lead_inv);
            if r.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = r.sub(&rem[k], &r.mul(&c, d));
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Some((Self::new(r.clone(), quot), Self::new(r.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Option<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Scale to a monic polynomial (field coefficients). Zero stays zero.
    pub fn monic(&self) -> Option<Self> {
        match self.leading() {
            None => Some(self.clone()),
            Some(l) => self.ring.inv(l).map(|inv| self.scale(&inv)),
        }
    }

    /// Extended Euclid over a field: returns monic `g = gcd(a, b)` with
    /// `s·a + t·b = g`.
    pub fn ext_gcd(a: &Self, b: &Self) -> Option<(Self, Self, Self)> {
        let ring = a.ring.clone();
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(ring.clone()), Self::zero(ring.clone()));
        let (mut t0, mut t1) = (Self::zero(ring.clone()), Self::one(ring.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.leading() {
            None => Some((r0, s0, t0)),
            Some(l) => {
                let inv = ring.inv(l)?;
                Some((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
            }
        }
    }

    pub fn map<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> Poly<S> {
        let coeffs = self.coeffs.iter().map(f).collect();
        Poly::new(target, coeffs)
    }

    /// Canonical text `c0 + c1*x + c2*x^2 + ...`, zero terms omitted.
    pub fn to_text(&self, var: &str) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(i, c)| term_text(&self.ring.format(c), var, i))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

pub(crate) fn term_text(coeff: &str, var: &str, degree: usize) -> String {
    match degree {
        0 => coeff.to_string(),
        1 => format!("{coeff}*{var}"),
        d => format!("{coeff}*{var}^{d}"),
    }
}

impl QPoly {
    pub fn q_from_ints(coeffs: &[i64]) -> Self {
        Self::from_ints(Rationals, coeffs)
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Eisenstein criterion at `p` for an integral monic polynomial; a `true`
    /// result certifies irreducibility over `Q`.
    pub fn is_eisenstein_at(&self, p: u64) -> bool {
        use num::Zero;
        if !self.is_monic() || !self.is_integral() || self.coeffs.len() < 2 {
            return false;
        }
        let pb = num::BigInt::from(p);
        let n = self.coeffs.len() - 1;
        let divisible = |c: &num::BigRational| (c.numer() % &pb).is_zero();
        let lower_ok = self.coeffs[..n].iter().all(divisible);
        let c0 = self.coeffs[0].numer();
        lower_ok && !(c0 % (&pb * &pb)).is_zero()
    }
}

/// `(1 + x)^n - 1` over `Q`.
pub fn shifted_power_minus_one(n: u64) -> QPoly {
    QPoly::q_from_ints(&[1, 1]).pow(n).sub(&QPoly::one(Rationals))
}

/// The cyclotomic polynomial `Phi_m(x)` over `Q`, by exact division of
/// `x^m - 1` by `Phi_d` for proper divisors `d`.
pub fn cyclotomic_polynomial(m: u64) -> QPoly {
    assert!(m >= 1);
    let mut f = QPoly::monomial(Rationals, Rationals.one(), m as usize).sub(&QPoly::one(Rationals));
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (q, r) = f.div_rem(&cyclotomic_polynomial(d)).expect("monic divisor");
            debug_assert!(r.is_zero());
            f = q;
        }
    }
    f
}
