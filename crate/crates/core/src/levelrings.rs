//! Height-one level rings for the multiplicative formal group.
//!
//! `C'_{0,k} = Q[x]/((1+x)^{p^k} - 1)` splits by CRT into the fields
//! `Q[x]/(Phi_{p^i}(1+x))`, `i = 0..k`. Everything is exact over `Q`; the
//! `p`-adic rings are replaced by their rational models, which split the same
//! way because `Phi_{p^i}` stays irreducible over `Q_p`.
//!
//! Elements are written in the formal coordinate `x`, where `[j](x) =
//! (1+x)^j - 1`. [`global_coordinate`] rewrites them in `y = 1 + x`.

use std::sync::{Arc, OnceLock};

use num::rational::BigRational;
use num::{One, Zero};
use serde::Serialize;

use crate::arith;
use crate::error::{HkrError, Result};
use crate::linalg;
use crate::poly::{shifted_power_minus_one, QPoly};
use crate::ring::{Rationals, Ring, RingKind};

/// Largest `p^k` accepted by [`cpk_ring`] and [`drinfeld_dk`].
pub const DIMENSION_CAP: u64 = 10_000;
/// Largest `p^k` accepted by [`vandermonde_det`].
pub const VANDERMONDE_CAP: u64 = 64;

#[derive(Debug)]
struct QuotientData {
    modulus: QPoly,
    crt_factors: Vec<QPoly>,
    integral: bool,
    level: Option<(u64, u32)>,
    idempotents: OnceLock<Vec<QPoly>>,
}

/// `Q[x]/(f)` (or `Z[x]/(f)`) with a squarefree factorization of `f` into
/// irreducibles. Elements are remainders of degree below `deg f`.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    data: Arc<QuotientData>,
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.modulus == other.data.modulus && self.data.integral == other.data.integral)
    }
}

fn product(factors: &[QPoly]) -> QPoly {
    factors.iter().fold(QPoly::one(Rationals), |acc, f| acc.mul(f))
}

impl QuotientRing {
    /// `crt_factors` must be monic, pairwise coprime, and multiply to `modulus`.
    pub fn new(modulus: QPoly, crt_factors: Vec<QPoly>, integral: bool) -> Result<Self> {
        if !modulus.is_monic() || modulus.degree().unwrap_or(0) == 0 {
            return Err(HkrError::InvalidArgument(
                "modulus must be monic of positive degree".into(),
            ));
        }
        if integral && !modulus.is_integral() {
            return Err(HkrError::InvalidArgument(
                "integral quotient needs an integral modulus".into(),
            ));
        }
        if product(&crt_factors) != modulus {
            return Err(HkrError::InvalidArgument(
                "CRT factors do not multiply to the modulus".into(),
            ));
        }
        Ok(Self {
            data: Arc::new(QuotientData {
                modulus,
                crt_factors,
                integral,
                level: None,
                idempotents: OnceLock::new(),
            }),
        })
    }

    fn with_level(self, p: u64, k: u32) -> Self {
        let d = Arc::try_unwrap(self.data).expect("fresh ring");
        Self {
            data: Arc::new(QuotientData {
                level: Some((p, k)),
                ..d
            }),
        }
    }

    pub fn modulus(&self) -> &QPoly {
        &self.data.modulus
    }

    pub fn crt_factors(&self) -> &[QPoly] {
        &self.data.crt_factors
    }

    pub fn dimension(&self) -> usize {
        self.data.modulus.degree().expect("nonzero modulus")
    }

    pub fn is_integral(&self) -> bool {
        self.data.integral
    }

    /// `(p, k)` when `(1+x)^{p^k} = 1` holds in this ring.
    pub fn level(&self) -> Option<(u64, u32)> {
        self.data.level
    }

    pub fn reduce(&self, a: &QPoly) -> QPoly {
        a.rem(&self.data.modulus).expect("monic modulus")
    }

    pub fn element(&self, a: &QPoly) -> Result<RingElement> {
        if self.data.integral && !a.is_integral() {
            return Err(HkrError::InvalidArgument(format!(
                "{} is not integral",
                a.to_text("x")
            )));
        }
        Ok(RingElement {
            ring: self.clone(),
            rep: self.reduce(a),
        })
    }

    pub fn basis(&self) -> Vec<RingElement> {
        (0..self.dimension())
            .map(|i| RingElement {
                ring: self.clone(),
                rep: QPoly::monomial(Rationals, BigRational::one(), i),
            })
            .collect()
    }

    /// The field `Q[x]/(f_i)` of the `i`-th CRT component.
    pub fn component_field(&self, i: usize) -> QuotientRing {
        let f = self.data.crt_factors[i].clone();
        QuotientRing::new(f.clone(), vec![f], false).expect("irreducible factor")
    }

    /// Images in each CRT component.
    pub fn project(&self, a: &QPoly) -> Vec<QPoly> {
        self.data
            .crt_factors
            .iter()
            .map(|f| a.rem(f).expect("monic factor"))
            .collect()
    }

    fn idempotents(&self) -> &[QPoly] {
        self.data.idempotents.get_or_init(|| {
            let m = &self.data.modulus;
            self.data
                .crt_factors
                .iter()
                .map(|f| {
                    let (cofactor, r) = m.div_rem(f).expect("monic factor");
                    debug_assert!(r.is_zero());
                    let (g, s, _) = QPoly::ext_gcd(&cofactor, f).expect("field coefficients");
                    assert_eq!(g, QPoly::one(Rationals), "CRT factors must be coprime");
                    self.reduce(&s.mul(&cofactor))
                })
                .collect()
        })
    }

    /// Inverse of [`QuotientRing::project`].
    pub fn reassemble(&self, components: &[QPoly]) -> Result<QPoly> {
        if components.len() != self.data.crt_factors.len() {
            return Err(HkrError::InvalidArgument("one residue per CRT component".into()));
        }
        let sum = self
            .idempotents()
            .iter()
            .zip(components)
            .fold(QPoly::zero(Rationals), |acc, (e, c)| acc.add(&e.mul(c)));
        Ok(self.reduce(&sum))
    }

    fn mat_of(&self, f: impl Fn(&QPoly) -> QPoly) -> Vec<Vec<BigRational>> {
        let n = self.dimension();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for (col, b) in self.basis().iter().enumerate() {
            let img = f(&b.rep);
            for row in 0..n {
                m[row][col] = img.coeff(row);
            }
        }
        m
    }
}

impl Ring for QuotientRing {
    type Elem = QPoly;

    fn kind(&self) -> RingKind {
        RingKind::PolynomialQuotient {
            modulus: self.data.modulus.to_text("x"),
            integral: self.data.integral,
        }
    }
    fn zero(&self) -> QPoly {
        QPoly::zero(Rationals)
    }
    fn one(&self) -> QPoly {
        self.reduce(&QPoly::one(Rationals))
    }
    fn from_int(&self, n: i64) -> QPoly {
        self.reduce(&QPoly::q_from_ints(&[n]))
    }
    fn from_bigint(&self, n: &num::BigInt) -> QPoly {
        QPoly::constant(Rationals, BigRational::from_integer(n.clone()))
    }
    fn from_rational(&self, q: &BigRational) -> Option<QPoly> {
        (!self.data.integral || q.is_integer()).then(|| QPoly::constant(Rationals, q.clone()))
    }
    fn add(&self, a: &QPoly, b: &QPoly) -> QPoly {
        a.add(b)
    }
    fn sub(&self, a: &QPoly, b: &QPoly) -> QPoly {
        a.sub(b)
    }
    fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.reduce(&a.mul(b))
    }
    fn neg(&self, a: &QPoly) -> QPoly {
        a.neg()
    }
    fn is_zero(&self, a: &QPoly) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &QPoly) -> Option<QPoly> {
        let (g, s, _) = QPoly::ext_gcd(a, &self.data.modulus)?;
        if g != QPoly::one(Rationals) {
            return None;
        }
        let s = self.reduce(&s);
        (!self.data.integral || s.is_integral()).then_some(s)
    }
    fn format(&self, a: &QPoly) -> String {
        a.to_text("x")
    }
    fn parse(&self, s: &str) -> Option<QPoly> {
        let mut acc = QPoly::zero(Rationals);
        for (c, d) in crate::fgl::text::parse_terms(s, "x")? {
            let c = crate::ring::parse_rational(&c)?;
            acc = acc.add(&QPoly::monomial(Rationals, c, d));
        }
        Some(self.reduce(&acc))
    }
}

/// An element of a [`QuotientRing`], kept reduced.
#[derive(Clone, Debug, PartialEq)]
pub struct RingElement {
    ring: QuotientRing,
    rep: QPoly,
}

impl RingElement {
    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn rep(&self) -> &QPoly {
        &self.rep
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
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

    fn wrap(&self, rep: QPoly) -> Self {
        Self {
            ring: self.ring.clone(),
            rep,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.wrap(self.rep.add(&other.rep)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.wrap(self.rep.sub(&other.rep)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.wrap(self.ring.mul(&self.rep, &other.rep)))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.wrap(self.ring.pow(&self.rep, e))
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn inverse(&self) -> Option<Self> {
        self.ring.inv(&self.rep).map(|r| self.wrap(r))
    }

    pub fn project(&self) -> Vec<QPoly> {
        self.ring.project(&self.rep)
    }

    pub fn to_text(&self) -> String {
        self.rep.to_text("x")
    }
}

fn level_power(p: u64, k: u32) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(HkrError::InvalidArgument(format!("{p} is not prime")));
    }
    p.checked_pow(k)
        .filter(|&n| n <= DIMENSION_CAP)
        .ok_or_else(|| HkrError::SizeCap {
            what: format!("level ring dimension {p}^{k}"),
            cap: DIMENSION_CAP,
        })
}

/// `Phi_{p^i}(1+x) = [p^i](x) / [p^{i-1}](x)`, with `Phi_1(1+x) = x`.
pub fn shifted_cyclotomic(p: u64, i: u32) -> QPoly {
    if i == 0 {
        return QPoly::x(Rationals);
    }
    let top = shifted_power_minus_one(p.pow(i));
    let bottom = shifted_power_minus_one(p.pow(i - 1));
    let (q, r) = top.div_rem(&bottom).expect("monic divisor");
    debug_assert!(r.is_zero());
    q
}

/// `C'_{0,k} = Q[x]/((1+x)^{p^k} - 1)` with its CRT factors.
pub fn cpk_ring(p: u64, k: u32) -> Result<QuotientRing> {
    let n = level_power(p, k)?;
    let factors = (0..=k).map(|i| shifted_cyclotomic(p, i)).collect();
    Ok(QuotientRing::new(shifted_power_minus_one(n), factors, false)?.with_level(p, k))
}

/// `[j](x) = (1+x)^j - 1` for `j = 1, ..., p^k - 1`.
pub fn z_image(ring: &QuotientRing) -> Result<Vec<RingElement>> {
    let (p, k) = ring
        .level()
        .ok_or_else(|| HkrError::InvalidArgument("ring has no level".into()))?;
    (1..p.pow(k))
        .map(|j| ring.element(&shifted_power_minus_one(j)))
        .collect()
}

/// Per-component comparison of the determinant with `∏_{j≠0} [j]^{p^k - 1}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComponentComparison {
    pub factor: String,
    pub det_vanishes: bool,
    pub product_vanishes: bool,
    /// `det / product` in the component field when both are nonzero.
    pub unit: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VandermondeReport {
    pub p: u64,
    pub k: u32,
    pub det: String,
    pub product: String,
    pub components: Vec<ComponentComparison>,
    /// Every component has the determinant and the product vanishing together.
    pub passes: bool,
}

/// The `p^k × p^k` Vandermonde matrix on `[0], [1], ..., [p^k - 1]`, its
/// determinant over `C'_{0,k}`, and the unit comparison. The determinant is
/// computed in each CRT component field and reassembled.
pub fn vandermonde_det(p: u64, k: u32) -> Result<(RingElement, VandermondeReport)> {
    let n = level_power(p, k)?;
    if n > VANDERMONDE_CAP {
        return Err(HkrError::SizeCap {
            what: format!("Vandermonde matrix of size {n}"),
            cap: VANDERMONDE_CAP,
        });
    }
    let ring = cpk_ring(p, k)?;
    let n = n as usize;
    let nodes: Vec<QPoly> = (0..n as u64).map(shifted_power_minus_one).collect();
    let mut dets = Vec::new();
    let mut products = Vec::new();
    for i in 0..ring.crt_factors().len() {
        let field = ring.component_field(i);
        let local: Vec<QPoly> = nodes.iter().map(|a| field.reduce(a)).collect();
        let matrix: Vec<Vec<QPoly>> = local
            .iter()
            .map(|a| {
                let mut row = Vec::with_capacity(n);
                let mut acc = field.one();
                for _ in 0..n {
                    row.push(acc.clone());
                    acc = field.mul(&acc, a);
                }
                row
            })
            .collect();
        dets.push(linalg::det(&field, &matrix));
        let prod = local[1..]
            .iter()
            .fold(field.one(), |acc, a| field.mul(&acc, &field.pow(a, n as u64 - 1)));
        products.push(prod);
    }
    let det = ring.element(&ring.reassemble(&dets)?)?;
    let product = ring.element(&ring.reassemble(&products)?)?;
    let mut components = Vec::new();
    for (i, (d, q)) in dets.iter().zip(&products).enumerate() {
        let field = ring.component_field(i);
        let unit = if d.is_zero() || q.is_zero() {
            None
        } else {
            let inv = field.inv(q).expect("nonzero in a field");
            Some(field.mul(d, &inv).to_text("x"))
        };
        components.push(ComponentComparison {
            factor: ring.crt_factors()[i].to_text("x"),
            det_vanishes: d.is_zero(),
            product_vanishes: q.is_zero(),
            unit,
        });
    }
    let passes = components.iter().all(|c| c.det_vanishes == c.product_vanishes);
    let report = VandermondeReport {
        p,
        k,
        det: det.to_text(),
        product: product.to_text(),
        components,
        passes,
    };
    Ok((det, report))
}

/// The localization `C_{0,k}`: the CRT components on which every `[j](x)`,
/// `j ≠ 0`, is invertible.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LevelDescriptor {
    pub p: u64,
    pub k: u32,
    pub dimension: usize,
    /// Modulus of `C'_{0,k}`.
    pub modulus: String,
    pub surviving_factor: String,
    /// The image of `x` in the surviving field.
    pub root_description: String,
    /// The surviving factor is Eisenstein at `p` (so irreducible over `Q`).
    pub eisenstein_at_p: bool,
}

pub fn localize_c0k(p: u64, k: u32) -> Result<LevelDescriptor> {
    let ring = cpk_ring(p, k)?;
    let z = z_image(&ring)?;
    let survivors: Vec<usize> = (0..ring.crt_factors().len())
        .filter(|&i| {
            let f = &ring.crt_factors()[i];
            z.iter().all(|a| !a.rep().rem(f).expect("monic").is_zero())
        })
        .collect();
    if survivors != [k as usize] {
        return Err(HkrError::Consistency(format!(
            "expected only the top component to survive, got {survivors:?}"
        )));
    }
    let factor = &ring.crt_factors()[k as usize];
    let dimension = factor.degree().expect("nonzero");
    let pk = p.pow(k);
    if dimension as u64 != arith::euler_phi(pk) {
        return Err(HkrError::Consistency(format!(
            "surviving dimension {dimension} != phi({pk})"
        )));
    }
    Ok(LevelDescriptor {
        p,
        k,
        dimension,
        modulus: ring.modulus().to_text("x"),
        surviving_factor: factor.to_text("x"),
        root_description: format!("x = zeta_{pk} - 1, zeta_{pk} a primitive {pk}-th root of unity"),
        // Phi_1(1+x) = x is linear, hence irreducible, but not Eisenstein
        eisenstein_at_p: k == 0 || factor.is_eisenstein_at(p),
    })
}

/// `D_k = Z[x]/(Phi_{p^k}(1+x))`, checked to agree over `Q` with the
/// surviving component of `C'_{0,k}`.
pub fn drinfeld_dk(p: u64, k: u32) -> Result<QuotientRing> {
    level_power(p, k)?;
    let f = shifted_cyclotomic(p, k);
    let descriptor = localize_c0k(p, k)?;
    if descriptor.surviving_factor != f.to_text("x") {
        return Err(HkrError::Consistency(
            "D_k and C_{0,k} have different moduli".into(),
        ));
    }
    Ok(QuotientRing::new(f.clone(), vec![f], true)?.with_level(p, k))
}

/// `a(x) ↦ a([u](x))` with `[u](x) = (1+x)^u - 1`, for `u` prime to `p`.
pub fn galois_action(u: i64, a: &RingElement) -> Result<RingElement> {
    let ring = a.ring();
    let (p, k) = ring
        .level()
        .ok_or_else(|| HkrError::InvalidArgument("ring has no level".into()))?;
    let pk = p.pow(k) as i64;
    if u.rem_euclid(p as i64) == 0 {
        return Err(HkrError::NotUnit(format!("{u} mod {p}")));
    }
    let u = u.rem_euclid(pk) as u64;
    let image = ring.reduce(&shifted_power_minus_one(u));
    Ok(RingElement {
        ring: ring.clone(),
        rep: compose_mod(ring, &a.rep, &image),
    })
}

fn compose_mod(ring: &QuotientRing, f: &QPoly, inner: &QPoly) -> QPoly {
    let mut acc = QPoly::zero(Rationals);
    for c in f.coeffs().iter().rev() {
        acc = ring
            .reduce(&acc.mul(inner))
            .add(&QPoly::constant(Rationals, c.clone()));
    }
    acc
}

/// Matrix of the Galois automorphism for `u` on the monomial basis.
pub fn galois_matrix(ring: &QuotientRing, u: i64) -> Result<Vec<Vec<BigRational>>> {
    let (p, _) = ring
        .level()
        .ok_or_else(|| HkrError::InvalidArgument("ring has no level".into()))?;
    if u.rem_euclid(p as i64) == 0 {
        return Err(HkrError::NotUnit(format!("{u} mod {p}")));
    }
    Ok(ring.mat_of(|b| {
        let e = RingElement {
            ring: ring.clone(),
            rep: b.clone(),
        };
        galois_action(u, &e).expect("unit").rep
    }))
}

/// Dimension over `Q` of the subring fixed by every `u ∈ (Z/p^k)^×`.
pub fn galois_fixed_subring_dim(ring: &QuotientRing) -> Result<usize> {
    let (p, k) = ring
        .level()
        .ok_or_else(|| HkrError::InvalidArgument("ring has no level".into()))?;
    let n = ring.dimension();
    let mut stacked = Vec::new();
    for u in arith::units_mod(p.pow(k)) {
        let mut m = galois_matrix(ring, u as i64)?;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= BigRational::one();
        }
        stacked.extend(m);
    }
    if stacked.is_empty() {
        return Ok(n);
    }
    Ok(n - linalg::rank(&Rationals, &stacked))
}

/// The tower map `C'_{0,k} → C'_{0,k+1}`, `x ↦ [p](x)`.
pub fn tower_map(a: &RingElement) -> Result<RingElement> {
    let (p, k) = a
        .ring()
        .level()
        .ok_or_else(|| HkrError::InvalidArgument("ring has no level".into()))?;
    let target = cpk_ring(p, k + 1)?;
    let image = shifted_power_minus_one(p);
    let rep = compose_mod(&target, a.rep(), &image);
    target.element(&rep)
}

/// `a` rewritten in `y = 1 + x`, reduced mod `y^{p^k} - 1`.
pub fn global_coordinate(a: &RingElement) -> Result<QPoly> {
    let (p, k) = a
        .ring()
        .level()
        .ok_or_else(|| HkrError::InvalidArgument("ring has no level".into()))?;
    let y_minus_one = QPoly::q_from_ints(&[-1, 1]);
    let n = p.pow(k) as usize;
    let modulus = QPoly::monomial(Rationals, BigRational::one(), n).sub(&QPoly::one(Rationals));
    Ok(a.rep().compose(&y_minus_one).rem(&modulus).expect("monic"))
}
