use crate::error::{HkrError, Result};
use crate::ring::Ring;

use super::series::TruncatedSeries;

/// A power series in `nvars` variables known modulo total degree `> D`.
///
/// Coefficients are stored densely, indexed by the base-`(D+1)` encoding of
/// the exponent vector; encodings add when monomials multiply.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiSeries<R: Ring> {
    ring: R,
    nvars: usize,
    degree: usize,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> MultiSeries<R> {
    pub fn zero(ring: R, nvars: usize, degree: usize) -> Self {
        let len = (degree + 1).pow(nvars as u32);
        let coeffs = vec![ring.zero(); len];
        Self {
            ring,
            nvars,
            degree,
            coeffs,
        }
    }

    /// The variable `x_i`.
    pub fn var(ring: R, nvars: usize, i: usize, degree: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let one = ring.one();
        Self::from_terms(ring, nvars, degree, vec![(exps, one)])
    }

    /// Terms of total degree above `degree` are dropped; repeated monomials add.
    pub fn from_terms(ring: R, nvars: usize, degree: usize, terms: Vec<(Vec<u32>, R::Elem)>) -> Self {
        let mut s = Self::zero(ring, nvars, degree);
        for (exps, c) in terms {
            assert_eq!(exps.len(), nvars, "exponent vector length");
            if exps.iter().sum::<u32>() as usize <= degree {
                let code = s.encode(&exps);
                s.coeffs[code] = s.ring.add(&s.coeffs[code], &c);
            }
        }
        s
    }

    /// A univariate series viewed as a series in `x_i` of `nvars` variables.
    pub fn from_univariate(f: &TruncatedSeries<R>, nvars: usize, i: usize) -> Self {
        let terms = f
            .coeffs()
            .iter()
            .enumerate()
            .map(|(d, c)| {
                let mut e = vec![0; nvars];
                e[i] = d as u32;
                (e, c.clone())
            })
            .collect();
        Self::from_terms(f.ring().clone(), nvars, f.degree(), terms)
    }

    pub fn to_univariate(&self) -> Option<TruncatedSeries<R>> {
        (self.nvars == 1).then(|| TruncatedSeries::new(self.ring.clone(), self.coeffs.clone(), self.degree))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn encode(&self, exps: &[u32]) -> usize {
        let base = self.degree + 1;
        exps.iter().rev().fold(0, |acc, &e| acc * base + e as usize)
    }

    fn decode(&self, mut code: usize) -> Vec<u32> {
        let base = self.degree + 1;
        (0..self.nvars)
            .map(|_| {
                let e = code % base;
                code /= base;
                e as u32
            })
            .collect()
    }

    fn total_degree(&self, code: usize) -> usize {
        self.decode(code).iter().sum::<u32>() as usize
    }

    pub fn coeff(&self, exps: &[u32]) -> R::Elem {
        if exps.len() != self.nvars || exps.iter().sum::<u32>() as usize > self.degree {
            return self.ring.zero();
        }
        self.coeffs[self.encode(exps)].clone()
    }

    /// Nonzero terms ordered by total degree, then exponent vectors descending.
    pub fn terms(&self) -> Vec<(Vec<u32>, R::Elem)> {
        let mut out: Vec<(Vec<u32>, R::Elem)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(code, c)| (self.decode(code), c.clone()))
            .collect();
        out.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| b.0.cmp(&a.0))
        });
        out
    }

    fn nonzero(&self) -> Vec<(usize, usize)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(code, _)| (code, self.total_degree(code)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn constant(&self) -> R::Elem {
        self.coeffs[0].clone()
    }

    pub fn truncate(&self, degree: usize) -> Self {
        if degree == self.degree {
            return self.clone();
        }
        Self::from_terms(self.ring.clone(), self.nvars, degree, self.terms())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(HkrError::RingMismatch(format!(
                "{} vs {}",
                self.ring.kind(),
                other.ring.kind()
            )));
        }
        if self.nvars != other.nvars {
            return Err(HkrError::InvalidArgument(format!(
                "series in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self)> {
        self.check_compatible(other)?;
        let d = self.degree.min(other.degree);
        Ok((self.truncate(d), other.truncate(d)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (mut a, b) = self.aligned(other)?;
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x = self.ring.add(x, y);
        }
        Ok(a)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x = self.ring.neg(x);
        }
        a
    }

    pub fn scale(&self, s: &R::Elem) -> Self {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x = self.ring.mul(x, s);
        }
        a
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other)?;
        let d = a.degree;
        let r = &self.ring;
        let mut out = Self::zero(r.clone(), a.nvars, d);
        let bn = b.nonzero();
        for (ca, da) in a.nonzero() {
            for &(cb, db) in &bn {
                if da + db <= d {
                    let t = r.mul(&a.coeffs[ca], &b.coeffs[cb]);
                    out.coeffs[ca + cb] = r.add(&out.coeffs[ca + cb], &t);
                }
            }
        }
        Ok(out)
    }

    /// Exchange variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let terms = self
            .terms()
            .into_iter()
            .map(|(mut e, c)| {
                e.swap(i, j);
                (e, c)
            })
            .collect();
        Self::from_terms(self.ring.clone(), self.nvars, self.degree, terms)
    }

    /// Set variable `i` to zero (the variable is kept, with exponent 0 only).
    pub fn kill_var(&self, i: usize) -> Self {
        let terms = self.terms().into_iter().filter(|(e, _)| e[i] == 0).collect();
        Self::from_terms(self.ring.clone(), self.nvars, self.degree, terms)
    }

    /// Quotient by `x_i` when every term involves `x_i`, known to degree `D - 1`.
    pub fn divide_by_var(&self, i: usize) -> Option<Self> {
        if self.degree == 0 {
            return None;
        }
        let terms = self.terms();
        if terms.iter().any(|(e, _)| e[i] == 0) {
            return None;
        }
        let shifted = terms
            .into_iter()
            .map(|(mut e, c)| {
                e[i] -= 1;
                (e, c)
            })
            .collect();
        Some(Self::from_terms(
            self.ring.clone(),
            self.nvars,
            self.degree - 1,
            shifted,
        ))
    }

    /// `f(arg)` for a univariate `f` and an argument with zero constant term.
    pub fn compose_univariate(f: &TruncatedSeries<R>, arg: &Self) -> Result<Self> {
        if !arg.ring.is_zero(&arg.constant()) {
            return Err(HkrError::NonzeroConstantTerm);
        }
        let d = f.degree().min(arg.degree);
        let arg = arg.truncate(d);
        let mut acc = Self::zero(arg.ring.clone(), arg.nvars, d);
        for c in f.coeffs()[..=d].iter().rev() {
            acc = acc.mul(&arg)?;
            acc.coeffs[0] = arg.ring.add(&acc.coeffs[0], c);
        }
        Ok(acc)
    }

    /// `self(u, v)` for a two-variable `self`; `u`, `v` share a ring and
    /// variable count and have zero constant terms.
    pub fn substitute2(&self, u: &Self, v: &Self) -> Result<Self> {
        if self.nvars != 2 {
            return Err(HkrError::InvalidArgument(
                "substitute2 needs a two-variable series".into(),
            ));
        }
        u.check_compatible(v)?;
        if self.ring != u.ring {
            return Err(HkrError::RingMismatch(format!(
                "{} vs {}",
                self.ring.kind(),
                u.ring.kind()
            )));
        }
        if !u.ring.is_zero(&u.constant()) || !v.ring.is_zero(&v.constant()) {
            return Err(HkrError::NonzeroConstantTerm);
        }
        let d = self.degree.min(u.degree).min(v.degree);
        let (u, v) = (u.truncate(d), v.truncate(d));
        let r = &self.ring;
        let mut v_pows = vec![Self::from_terms(
            r.clone(),
            u.nvars,
            d,
            vec![(vec![0; u.nvars], r.one())],
        )];
        for j in 1..=d {
            let next = v_pows[j - 1].mul(&v)?;
            v_pows.push(next);
        }
        // self = Σ_i x^i w_i(y); Horner in u over w_i(v)
        let mut acc = Self::zero(r.clone(), u.nvars, d);
        for i in (0..=d).rev() {
            acc = acc.mul(&u)?;
            for j in 0..=d - i {
                let c = self.coeff(&[i as u32, j as u32]);
                if !r.is_zero(&c) {
                    acc = acc.add(&v_pows[j].scale(&c))?;
                }
            }
        }
        Ok(acc)
    }

    pub fn map<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> Option<S::Elem>) -> Option<MultiSeries<S>> {
        let coeffs = self.coeffs.iter().map(f).collect::<Option<Vec<_>>>()?;
        Some(MultiSeries {
            ring: target,
            nvars: self.nvars,
            degree: self.degree,
            coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use num::BigInt;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn multiplication_truncates_by_total_degree() {
        let x = MultiSeries::var(Integers, 2, 0, 2);
        let y = MultiSeries::var(Integers, 2, 1, 2);
        let s = x.add(&y).unwrap();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.coeff(&[1, 1]), z(2));
        assert_eq!(sq.coeff(&[2, 0]), z(1));
        let cube = sq.mul(&s).unwrap();
        assert!(cube.is_zero());
    }

    #[test]
    fn substitute_multiplicative_law_into_itself() {
        let d = 3;
        let f = MultiSeries::from_terms(
            Integers,
            2,
            d,
            vec![(vec![1, 0], z(1)), (vec![0, 1], z(1)), (vec![1, 1], z(1))],
        );
        let x = MultiSeries::var(Integers, 3, 0, d);
        let y = MultiSeries::var(Integers, 3, 1, d);
        let w = MultiSeries::var(Integers, 3, 2, d);
        let fxy = f.substitute2(&x, &y).unwrap();
        let left = f.substitute2(&fxy, &w).unwrap();
        assert_eq!(left.coeff(&[1, 1, 1]), z(1));
        assert_eq!(left.coeff(&[1, 0, 1]), z(1));
        assert_eq!(left.coeff(&[2, 0, 0]), z(0));
    }

    #[test]
    fn divide_by_var_requires_divisibility() {
        let x = MultiSeries::var(Integers, 2, 0, 3);
        let y = MultiSeries::var(Integers, 2, 1, 3);
        let xy = x.mul(&y).unwrap();
        assert_eq!(xy.divide_by_var(1).unwrap().coeff(&[1, 0]), z(1));
        assert!(x.add(&y).unwrap().divide_by_var(1).is_none());
    }
}
