use crate::error::{HkrError, Result};
use crate::poly::Poly;
use crate::ring::Ring;

/// A univariate power series known modulo `x^(D+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Coefficients past the truncation degree are dropped; missing ones are zero.
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>, degree: usize) -> Self {
        coeffs.resize(degree + 1, ring.zero());
        Self { ring, coeffs }
    }

    pub fn from_ints(ring: R, coeffs: &[i64], degree: usize) -> Self {
        let c = coeffs.iter().map(|&x| ring.from_int(x)).collect();
        Self::new(ring, c, degree)
    }

    pub fn zero(ring: R, degree: usize) -> Self {
        Self::new(ring, Vec::new(), degree)
    }

    /// The series `x` (or `0` when `degree = 0`).
    pub fn x(ring: R, degree: usize) -> Self {
        let c = vec![ring.zero(), ring.one()];
        Self::new(ring, c, degree)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Truncation degree `D`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.ring.is_zero(c))
    }

    pub fn has_zero_constant(&self) -> bool {
        self.ring.is_zero(&self.coeffs[0])
    }

    pub fn truncate(&self, degree: usize) -> Self {
        Self::new(
            self.ring.clone(),
            self.coeffs[..=degree.min(self.degree())].to_vec(),
            degree,
        )
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(HkrError::RingMismatch(format!(
                "{} vs {}",
                self.ring.kind(),
                other.ring.kind()
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.degree().min(other.degree());
        let c = (0..=d)
            .map(|i| self.ring.add(&self.coeffs[i], &other.coeffs[i]))
            .collect();
        Self::new(self.ring.clone(), c, d)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let c = self.coeffs.iter().map(|a| self.ring.neg(a)).collect();
        Self::new(self.ring.clone(), c, self.degree())
    }

    pub fn scale(&self, s: &R::Elem) -> Self {
        let c = self.coeffs.iter().map(|a| self.ring.mul(a, s)).collect();
        Self::new(self.ring.clone(), c, self.degree())
    }

    /// Product truncated at the smaller degree.
    pub fn mul(&self, other: &Self) -> Self {
        let d = self.degree().min(other.degree());
        let r = &self.ring;
        let mut c = vec![r.zero(); d + 1];
        for i in 0..=d {
            if r.is_zero(&self.coeffs[i]) {
                continue;
            }
            for j in 0..=d - i {
                if !r.is_zero(&other.coeffs[j]) {
                    c[i + j] = r.add(&c[i + j], &r.mul(&self.coeffs[i], &other.coeffs[j]));
                }
            }
        }
        Self::new(r.clone(), c, d)
    }

    /// Product where `self` has zero constant term, so the result is known to
    /// one more degree than `other`: `deg = min(D_self, D_other + 1)`.
    pub fn mul_by_nonunit(&self, other: &Self) -> Self {
        let d = self.degree().min(other.degree() + 1);
        let padded = Self::new(other.ring.clone(), other.coeffs.clone(), d);
        let lhs = self.truncate(d);
        debug_assert!(lhs.has_zero_constant());
        lhs.mul(&padded)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::new(self.ring.clone(), vec![self.ring.one()], self.degree());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self ∘ inner`, truncated at the smaller degree.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_ring(inner)?;
        if !inner.has_zero_constant() {
            return Err(HkrError::NonzeroConstantTerm);
        }
        let d = self.degree().min(inner.degree());
        let inner = inner.truncate(d);
        // Horner: (((c_D) g + c_{D-1}) g + ...) + c_0
        let mut acc = Self::zero(self.ring.clone(), d);
        for c in self.coeffs[..=d].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = self.ring.add(&acc.coeffs[0], c);
        }
        Ok(acc)
    }

    /// Compositional inverse: `g` with `self ∘ g = x = g ∘ self`, solved one
    /// degree at a time. Requires zero constant term and unit linear term.
    pub fn reversion(&self) -> Result<Self> {
        if !self.has_zero_constant() {
            return Err(HkrError::NonzeroConstantTerm);
        }
        let d = self.degree();
        let r = &self.ring;
        if d == 0 {
            return Ok(Self::zero(r.clone(), 0));
        }
        let lead_inv = r
            .inv(&self.coeffs[1])
            .ok_or_else(|| HkrError::NotUnit(r.format(&self.coeffs[1])))?;
        let mut g = Self::zero(r.clone(), d);
        g.coeffs[1] = lead_inv.clone();
        for k in 2..=d {
            // with g_k = 0, the degree-k coefficient of f∘g must be cancelled by c_1 g_k
            let composed = self.compose(&g)?;
            let excess = composed.coeffs[k].clone();
            g.coeffs[k] = r.neg(&r.mul(&excess, &lead_inv));
        }
        Ok(g)
    }

    /// `f(x)/x` for `f` with zero constant term, known to degree `D - 1`.
    pub fn divide_by_x(&self) -> Result<Self> {
        if !self.has_zero_constant() {
            return Err(HkrError::NonzeroConstantTerm);
        }
        let d = self.degree();
        if d == 0 {
            return Err(HkrError::TruncationTooSmall {
                degree: 0,
                reason: "cannot divide by x".into(),
            });
        }
        Ok(Self::new(self.ring.clone(), self.coeffs[1..].to_vec(), d - 1))
    }

    pub fn map<S: Ring>(
        &self,
        target: S,
        f: impl Fn(&R::Elem) -> Option<S::Elem>,
    ) -> Option<TruncatedSeries<S>> {
        let c = self.coeffs.iter().map(f).collect::<Option<Vec<_>>>()?;
        let d = self.degree();
        Some(TruncatedSeries::new(target, c, d))
    }

    /// The coefficients as a polynomial (terms above `D` unknown, not zero).
    pub fn to_poly(&self) -> Poly<R> {
        Poly::new(self.ring.clone(), self.coeffs.clone())
    }

    pub fn from_poly(p: &Poly<R>, degree: usize) -> Self {
        Self::new(p.ring().clone(), p.coeffs().to_vec(), degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rational, Rationals};

    fn q(c: &[i64], d: usize) -> TruncatedSeries<Rationals> {
        TruncatedSeries::from_ints(Rationals, c, d)
    }

    #[test]
    fn compose_examples() {
        let x = q(&[0, 1], 3);
        let g = q(&[0, 1, 1], 3);
        assert_eq!(x.compose(&g).unwrap(), g);
        let f = q(&[0, 0, 1], 3);
        assert_eq!(f.compose(&g).unwrap(), q(&[0, 0, 1, 2], 3));
        let f = q(&[0, 1, 1], 2);
        assert_eq!(f.compose(&q(&[0, 2], 2)).unwrap(), q(&[0, 2, 4], 2));
        assert_eq!(
            f.compose(&q(&[1, 1], 2)).unwrap_err(),
            HkrError::NonzeroConstantTerm
        );
    }

    #[test]
    fn reversion_examples() {
        assert_eq!(q(&[0, 1], 4).reversion().unwrap(), q(&[0, 1], 4));
        assert_eq!(q(&[0, 1, 1], 3).reversion().unwrap(), q(&[0, 1, -1, 2], 3));
        let half = TruncatedSeries::new(Rationals, vec![rational(0, 1), rational(1, 2)], 1);
        assert_eq!(q(&[0, 2], 1).reversion().unwrap(), half);
        let z = TruncatedSeries::from_ints(crate::ring::Integers, &[0, 2, 1], 3);
        assert!(matches!(z.reversion(), Err(HkrError::NotUnit(_))));
    }

    #[test]
    fn mixed_degree_truncates_to_minimum() {
        let a = q(&[1, 1, 1, 1], 3);
        let b = q(&[1, 1], 1);
        assert_eq!(a.mul(&b).degree(), 1);
        assert_eq!(a.add(&b).degree(), 1);
    }
}
