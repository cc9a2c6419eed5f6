use std::sync::Arc;

use num::rational::BigRational;
use num::{One, Zero};

use crate::arith;
use crate::cyclotomic::{CyclotomicField, CyclotomicNumber};
use crate::error::{HkrError, Result};
use crate::group::Permutation;
use crate::linalg;
use crate::ring::{Rationals, Ring};

use super::classfn::ClassFunction;
use super::table::CharacterTable;

/// Largest `k` accepted by [`total_power`].
pub const TOTAL_POWER_CAP: usize = 8;

fn check_prime(p: u64) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(HkrError::InvalidArgument(format!("{p} is not prime")))
    }
}

fn check_table(table: &CharacterTable, chi: &ClassFunction) -> Result<()> {
    if !Arc::ptr_eq(table.group(), chi.group()) || !chi.is_total() || chi.field() != table.field() {
        return Err(HkrError::InvalidArgument(
            "class function must be total and come from this table".into(),
        ));
    }
    Ok(())
}

/// Indices of the classes of `p`-power-order elements, in class order.
pub fn p_power_classes(table: &CharacterTable, p: u64) -> Vec<usize> {
    let g = table.group();
    g.conjugacy_classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| g.has_p_power_order(c.representative, p))
        .map(|(i, _)| i)
        .collect()
}

/// Restriction of `chi` to the `p`-power-order classes, with values in
/// `Q(zeta_{p^a})`, `p^a` the `p`-part of the exponent.
pub fn character_map(table: &CharacterTable, p: u64, chi: &ClassFunction) -> Result<ClassFunction> {
    check_prime(p)?;
    check_table(table, chi)?;
    let restricted = chi.restrict_domain(Arc::new(p_power_classes(table, p)))?;
    let target = CyclotomicField::new(arith::p_part(table.conductor(), p));
    restricted
        .restrict_field(&target)
        .ok_or_else(|| HkrError::Consistency("value at a p-element outside Q(zeta_{p^a})".into()))
}

/// Rank over `Q(zeta_e)` of the irreducibles restricted to `p`-power classes.
pub fn char_matrix_rank(table: &CharacterTable, p: u64) -> Result<usize> {
    check_prime(p)?;
    let cols = p_power_classes(table, p);
    let m: Vec<Vec<CyclotomicNumber>> = table
        .irreducibles()
        .iter()
        .map(|chi| cols.iter().map(|&c| chi.values()[c].clone()).collect())
        .collect();
    Ok(linalg::rank(table.field(), &m))
}

/// `(ψ^m χ)(g) = χ(g^m)`.
pub fn adams_psi(table: &CharacterTable, m: i64, chi: &ClassFunction) -> Result<ClassFunction> {
    check_table(table, chi)?;
    let values = (0..chi.values().len())
        .map(|k| chi.values()[table.power_class(k, m)].clone())
        .collect();
    ClassFunction::new(
        chi.group().clone(),
        chi.field().clone(),
        Arc::new(chi.domain().to_vec()),
        values,
    )
}

/// `P_k(χ)` on `Sym(k) × G`: `values[s][c] = ∏_{cycles of σ_s} χ(g_c^{|cycle|})`
/// where `σ_s` has cycle type `partitions[s]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TotalPower {
    pub k: usize,
    /// Cycle types of `Sym(k)`, parts non-increasing.
    pub partitions: Vec<Vec<usize>>,
    pub values: Vec<Vec<CyclotomicNumber>>,
}

impl TotalPower {
    /// Row for the class of `σ`, looked up by cycle type.
    pub fn at_permutation(&self, sigma: &Permutation) -> Option<&[CyclotomicNumber]> {
        let t = sigma.cycle_type();
        self.partitions
            .iter()
            .position(|p| *p == t)
            .map(|i| self.values[i].as_slice())
    }
}

pub fn total_power(table: &CharacterTable, k: usize, chi: &ClassFunction) -> Result<TotalPower> {
    check_table(table, chi)?;
    if k == 0 || k > TOTAL_POWER_CAP {
        return Err(HkrError::InvalidArgument(format!(
            "total power needs 1 <= k <= {TOTAL_POWER_CAP}"
        )));
    }
    let f = table.field();
    let partitions = arith::partitions(k);
    let r = chi.values().len();
    let values = partitions
        .iter()
        .map(|parts| {
            (0..r)
                .map(|c| {
                    parts.iter().fold(f.one(), |acc, &len| {
                        f.mul(&acc, &chi.values()[table.power_class(c, len as i64)])
                    })
                })
                .collect()
        })
        .collect();
    Ok(TotalPower {
        k,
        partitions,
        values,
    })
}

/// Translation by `j` on `Z/n`, as a permutation of `0..n`.
pub fn cayley_translation(n: usize, j: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| ((i + j) % n) as u32).collect()).expect("bijection")
}

/// `Ψ` at level `Λ_k`: the total power `P_{p^k}`, pulled back along the
/// Cayley embedding `Z/p^k → Sym(p^k)` and evaluated at the generator `1`.
pub fn psi_level(table: &CharacterTable, p: u64, k: u32, chi: &ClassFunction) -> Result<ClassFunction> {
    check_prime(p)?;
    let n = p
        .checked_pow(k)
        .map(|n| n as usize)
        .filter(|&n| (1..=TOTAL_POWER_CAP).contains(&n))
        .ok_or_else(|| HkrError::InvalidArgument(format!("{p}^{k} exceeds the total power cap")))?;
    let power = total_power(table, n, chi)?;
    let sigma = cayley_translation(n, 1);
    let row = power
        .at_permutation(&sigma)
        .ok_or_else(|| HkrError::Consistency("cycle type missing from the partition list".into()))?;
    ClassFunction::new(
        chi.group().clone(),
        chi.field().clone(),
        Arc::new(chi.domain().to_vec()),
        row.to_vec(),
    )
}

/// Dimension over `Q` of `{f : p-power classes → Q(zeta_{p^k}) | f(g^u) =
/// σ_u f(g) for all u ∈ (Z/p^k)^×}`, by exact linear algebra.
///
/// The conditions for a generating set of units imply the rest, and the
/// system splits into one block per orbit of classes under `g ↦ g^u`.
pub fn galois_fixed_dim(table: &CharacterTable, p: u64, k: u32) -> Result<usize> {
    check_prime(p)?;
    let pk = p
        .checked_pow(k)
        .ok_or_else(|| HkrError::InvalidArgument(format!("{p}^{k} overflows")))?;
    if pk < arith::p_part(table.conductor(), p) {
        return Err(HkrError::LevelTooSmall { p, k });
    }
    let field = CyclotomicField::new(pk);
    let dim = field.dimension();
    let gens = arith::unit_generators(pk);
    // matrix of σ_u on the power basis: column i is σ_u(z^i)
    let sigmas: Vec<Vec<Vec<BigRational>>> = gens
        .iter()
        .map(|&u| {
            let images: Vec<CyclotomicNumber> = (0..dim)
                .map(|i| field.galois(u as i64, &field.root_power(i as i64)))
                .collect();
            (0..dim)
                .map(|r| images.iter().map(|im| im.coords()[r].clone()).collect())
                .collect()
        })
        .collect();

    let classes = p_power_classes(table, p);
    let mut seen = vec![false; classes.len()];
    let mut total = 0;
    for start in 0..classes.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![classes[start]];
        seen[start] = true;
        let mut i = 0;
        while i < orbit.len() {
            for &u in &gens {
                let next = table.power_class(orbit[i], u as i64);
                let slot = classes.iter().position(|&c| c == next).expect("p-power class");
                if !seen[slot] {
                    seen[slot] = true;
                    orbit.push(next);
                }
            }
            i += 1;
        }
        let unknowns = orbit.len() * dim;
        let mut rows = Vec::new();
        for (&u, sigma) in gens.iter().zip(&sigmas) {
            for (ci, &c) in orbit.iter().enumerate() {
                let image = table.power_class(c, u as i64);
                let target = orbit.iter().position(|&o| o == image).expect("orbit is closed");
                // f(g^u) - σ_u f(g) = 0, one row per coordinate
                for r in 0..dim {
                    let mut row = vec![BigRational::zero(); unknowns];
                    row[target * dim + r] += BigRational::one();
                    for i in 0..dim {
                        row[ci * dim + i] -= &sigma[r][i];
                    }
                    rows.push(row);
                }
            }
        }
        total += unknowns - linalg::rank(&Rationals, &rows);
    }
    Ok(total)
}

/// Coefficients `<χ, irreducible_i>`, which are integers for virtual characters.
pub fn decompose(table: &CharacterTable, chi: &ClassFunction) -> Result<Vec<CyclotomicNumber>> {
    table
        .irreducibles()
        .iter()
        .map(|irr| chi.inner_product(irr))
        .collect()
}

/// Integer combination `Σ c_i χ_i` of irreducibles.
pub fn virtual_character(table: &CharacterTable, coeffs: &[i64]) -> Result<ClassFunction> {
    if coeffs.len() != table.irreducibles().len() {
        return Err(HkrError::InvalidArgument(
            "one coefficient per irreducible".into(),
        ));
    }
    let mut acc = table.irreducibles()[0].scale(&BigRational::zero());
    for (c, irr) in coeffs.iter().zip(table.irreducibles()) {
        if *c != 0 {
            acc = acc.add(&irr.scale(&BigRational::from_integer((*c).into())))?;
        }
    }
    Ok(acc)
}
