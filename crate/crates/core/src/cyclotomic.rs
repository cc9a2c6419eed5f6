//! Exact arithmetic in cyclotomic fields `Q(zeta_m) = Q[z]/(Phi_m(z))`.

use std::fmt;
use std::sync::Arc;

use num::rational::BigRational;
use num::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::arith;
use crate::poly::{cyclotomic_polynomial, term_text, QPoly};
use crate::ring::{format_rational, parse_rational, Rationals, Ring, RingKind};

/// An element of `Q(zeta_m)` in the power basis `1, z, ..., z^(phi(m)-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    conductor: u64,
    coords: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coords[0].clone())
    }
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CyclotomicNumber", 2)?;
        st.serialize_field("conductor", &self.conductor)?;
        let coords: Vec<String> = self.coords.iter().map(format_rational).collect();
        st.serialize_field("coords", &coords)?;
        st.end()
    }
}

#[derive(Debug)]
struct FieldData {
    m: u64,
    dim: usize,
    modulus: QPoly,
    /// `z^l mod Phi_m` for `0 <= l < max(m, 2·dim)`.
    powers: Vec<Vec<BigRational>>,
}

/// The cyclotomic field of conductor `m`. Cheap to clone.
#[derive(Clone)]
pub struct CyclotomicField {
    data: Arc<FieldData>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicField({})", self.data.m)
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.data.m == other.data.m
    }
}

impl CyclotomicField {
    pub fn new(m: u64) -> Self {
        assert!(m >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(m);
        let dim = modulus.degree().expect("nonzero");
        let count = (m as usize).max(2 * dim);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![BigRational::zero(); dim];
        cur[0] = BigRational::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by z and reduce with the monic modulus
            let top = cur[dim - 1].clone();
            for i in (1..dim).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigRational::zero();
            if !top.is_zero() {
                for (i, c) in modulus.coeffs()[..dim].iter().enumerate() {
                    cur[i] -= &top * c;
                }
            }
        }
        Self {
            data: Arc::new(FieldData {
                m,
                dim,
                modulus,
                powers,
            }),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.data.m
    }

    /// Degree over `Q`, i.e. `phi(m)`.
    pub fn dimension(&self) -> usize {
        self.data.dim
    }

    pub fn modulus(&self) -> &QPoly {
        &self.data.modulus
    }

    fn make(&self, coords: Vec<BigRational>) -> CyclotomicNumber {
        CyclotomicNumber {
            conductor: self.data.m,
            coords,
        }
    }

    pub fn from_coords(&self, coords: Vec<BigRational>) -> CyclotomicNumber {
        assert_eq!(coords.len(), self.data.dim, "coordinate count");
        self.make(coords)
    }

    pub fn rational(&self, q: BigRational) -> CyclotomicNumber {
        let mut coords = vec![BigRational::zero(); self.data.dim];
        coords[0] = q;
        self.make(coords)
    }

    /// `zeta_m^l`.
    pub fn root_power(&self, l: i64) -> CyclotomicNumber {
        let l = l.rem_euclid(self.data.m as i64) as usize;
        self.make(self.data.powers[l].clone())
    }

    /// `sum_l counts[l] · zeta_m^l`, indices taken mod `m`.
    pub fn from_root_counts(&self, counts: &[i64]) -> CyclotomicNumber {
        let m = self.data.m as usize;
        let mut coords = vec![BigRational::zero(); self.data.dim];
        for (l, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = BigRational::from_integer(c.into());
            for (acc, b) in coords.iter_mut().zip(&self.data.powers[l % m]) {
                if !b.is_zero() {
                    *acc += &c * b;
                }
            }
        }
        self.make(coords)
    }

    pub fn to_poly(&self, a: &CyclotomicNumber) -> QPoly {
        QPoly::new(Rationals, a.coords.clone())
    }

    fn reduce(&self, coeffs: &[BigRational]) -> CyclotomicNumber {
        let dim = self.data.dim;
        let mut coords = vec![BigRational::zero(); dim];
        for (l, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if l < dim {
                coords[l] += c;
            } else {
                for (acc, b) in coords.iter_mut().zip(&self.data.powers[l]) {
                    if !b.is_zero() {
                        *acc += c * b;
                    }
                }
            }
        }
        self.make(coords)
    }

    /// Galois automorphism `zeta ↦ zeta^u` for `u` prime to `m`.
    pub fn galois(&self, u: i64, a: &CyclotomicNumber) -> CyclotomicNumber {
        let m = self.data.m as i64;
        debug_assert_eq!(arith::gcd(u.rem_euclid(m) as u64, m as u64), 1);
        let mut coords = vec![BigRational::zero(); self.data.dim];
        for (i, c) in a.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let l = (i as i64 * u).rem_euclid(m) as usize;
            for (acc, b) in coords.iter_mut().zip(&self.data.powers[l]) {
                if !b.is_zero() {
                    *acc += c * b;
                }
            }
        }
        self.make(coords)
    }

    /// Complex conjugation.
    pub fn conj(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        self.galois(-1, a)
    }

    /// Image of `a ∈ self` in `Q(zeta_target)`, where `m` divides `target`.
    pub fn embed(&self, a: &CyclotomicNumber, target: &CyclotomicField) -> CyclotomicNumber {
        let m = self.data.m;
        let big = target.conductor();
        assert_eq!(big % m, 0, "conductor {m} does not divide {big}");
        let step = (big / m) as i64;
        let mut out = target.zero();
        for (i, c) in a.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = target.scale(&target.root_power(i as i64 * step), c);
            out = target.add(&out, &term);
        }
        out
    }

    /// Express `a` in the subfield `Q(zeta_target)` if it lies there.
    pub fn restrict(&self, a: &CyclotomicNumber, target: &CyclotomicField) -> Option<CyclotomicNumber> {
        let basis: Vec<CyclotomicNumber> = (0..target.dimension())
            .map(|j| target.embed(&target.root_power(j as i64), self))
            .collect();
        // Solve sum_j c_j basis_j = a over Q.
        let rows: Vec<Vec<BigRational>> = (0..self.data.dim)
            .map(|i| basis.iter().map(|b| b.coords[i].clone()).collect())
            .collect();
        let sol = crate::linalg::solve(&Rationals, &rows, &a.coords)?;
        Some(target.from_coords(sol))
    }

    pub fn scale(&self, a: &CyclotomicNumber, c: &BigRational) -> CyclotomicNumber {
        self.make(a.coords.iter().map(|x| x * c).collect())
    }

    pub fn format_with(&self, a: &CyclotomicNumber, var: &str) -> String {
        let terms: Vec<String> = a
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| term_text(&format_rational(c), var, i))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl Ring for CyclotomicField {
    type Elem = CyclotomicNumber;

    fn kind(&self) -> RingKind {
        RingKind::Cyclotomic { m: self.data.m }
    }
    fn zero(&self) -> CyclotomicNumber {
        self.make(vec![BigRational::zero(); self.data.dim])
    }
    fn one(&self) -> CyclotomicNumber {
        self.rational(BigRational::one())
    }
    fn from_int(&self, n: i64) -> CyclotomicNumber {
        self.rational(BigRational::from_integer(n.into()))
    }
    fn from_bigint(&self, n: &num::BigInt) -> CyclotomicNumber {
        self.rational(BigRational::from_integer(n.clone()))
    }
    fn from_rational(&self, q: &BigRational) -> Option<CyclotomicNumber> {
        Some(self.rational(q.clone()))
    }
    fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.make(a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect())
    }
    fn sub(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.make(a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect())
    }
    fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        let dim = self.data.dim;
        let mut prod = vec![BigRational::zero(); 2 * dim - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(&prod)
    }
    fn neg(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        self.make(a.coords.iter().map(|x| -x).collect())
    }
    fn is_zero(&self, a: &CyclotomicNumber) -> bool {
        a.coords.iter().all(Zero::is_zero)
    }
    fn inv(&self, a: &CyclotomicNumber) -> Option<CyclotomicNumber> {
        if self.is_zero(a) {
            return None;
        }
        let (g, s, _) = QPoly::ext_gcd(&self.to_poly(a), &self.data.modulus)?;
        // Phi_m is irreducible, so the gcd is 1 for nonzero a.
        debug_assert!(g.degree() == Some(0));
        Some(self.reduce(s.coeffs()))
    }
    fn format(&self, a: &CyclotomicNumber) -> String {
        self.format_with(a, "z")
    }
    fn parse(&self, s: &str) -> Option<CyclotomicNumber> {
        let mut coeffs = Vec::new();
        for (c, d) in crate::fgl::text::parse_terms(s, "z")? {
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigRational::zero());
            }
            coeffs[d] += parse_rational(&c)?;
        }
        Some(self.reduce(&coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;

    #[test]
    fn gaussian_integers() {
        let f = CyclotomicField::new(4);
        let i = f.root_power(1);
        assert_eq!(f.mul(&i, &i), f.from_int(-1));
        assert_eq!(f.conj(&i), f.neg(&i));
        let one_plus_i = f.add(&f.one(), &i);
        let inv = f.inv(&one_plus_i).unwrap();
        assert_eq!(f.mul(&inv, &one_plus_i), f.one());
        assert_eq!(inv.coords(), &[rational(1, 2), rational(-1, 2)]);
    }

    #[test]
    fn root_sums_vanish() {
        let f = CyclotomicField::new(9);
        assert!(f.is_zero(&f.from_root_counts(&[1; 9])));
        let w = f.root_power(3);
        // 1 + w + w^2 = 0 for a primitive cube root w
        let s = f.add(&f.add(&f.one(), &w), &f.mul(&w, &w));
        assert!(f.is_zero(&s));
    }

    #[test]
    fn embed_and_restrict() {
        let small = CyclotomicField::new(3);
        let big = CyclotomicField::new(12);
        let w = small.root_power(1);
        let e = small.embed(&w, &big);
        assert_eq!(e, big.root_power(4));
        assert_eq!(big.restrict(&e, &small), Some(w));
        assert_eq!(big.restrict(&big.root_power(1), &small), None);
    }

    #[test]
    fn conductor_one_and_two() {
        let f1 = CyclotomicField::new(1);
        assert_eq!(f1.dimension(), 1);
        assert_eq!(f1.root_power(5), f1.one());
        let f2 = CyclotomicField::new(2);
        assert_eq!(f2.root_power(1), f2.from_int(-1));
    }

    #[test]
    fn text_round_trip() {
        let f = CyclotomicField::new(8);
        let a = f.from_coords(vec![
            rational(1, 2),
            rational(0, 1),
            rational(-3, 1),
            rational(0, 1),
        ]);
        let s = f.format(&a);
        assert_eq!(s, "1/2 + -3*z^2");
        assert_eq!(f.parse(&s), Some(a));
    }
}
