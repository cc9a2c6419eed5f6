//! Character tables by the Dixon class-algebra method.
//!
//! Central characters are the common eigenvectors of the class-multiplication
//! matrices. Working over `F_q` with `q ≡ 1 mod exponent(G)`, every
//! eigenvalue lies in `F_q`; character values are then lifted to `Q(zeta_e)`
//! by counting eigenvalue multiplicities of `ρ(g)` from the values on the
//! powers of `g`.

use std::cmp::Ordering;
use std::sync::Arc;

use num::rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::arith;
use crate::cyclotomic::{CyclotomicField, CyclotomicNumber};
use crate::error::{HkrError, Result};
use crate::group::FiniteGroup;
use crate::linalg;
use crate::ring::{format_rational, ModularIntegers, Ring};

use super::classfn::ClassFunction;

/// Largest group order accepted by [`character_table`].
pub const TABLE_ORDER_CAP: usize = 2000;
/// How many primes `q` are tried before giving up.
const PRIME_ATTEMPTS: usize = 64;
const SEED: u64 = 0x5eed_c4a2;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    field: CyclotomicField,
    irreducibles: Vec<ClassFunction>,
    /// `power_map[k][t]` is the class of `g_k^t`, `0 <= t < exponent`.
    power_map: Vec<Vec<usize>>,
    /// Prime used for the modular computation.
    prime: u64,
}

impl CharacterTable {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// `Q(zeta_e)` with `e = exponent(G)`.
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor()
    }

    /// Rows ordered by degree, then by values in descending lexicographic
    /// order of their coordinates, with the trivial character first.
    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(degree_of).collect()
    }

    /// Class of `g_k^t`.
    pub fn power_class(&self, k: usize, t: i64) -> usize {
        let e = self.power_map[k].len() as i64;
        self.power_map[k][t.rem_euclid(e) as usize]
    }

    pub fn modular_prime(&self) -> u64 {
        self.prime
    }

    /// Checks both orthogonality relations exactly.
    pub fn check_orthogonality(&self) -> Result<()> {
        let f = &self.field;
        let classes = self.group.conjugacy_classes();
        let order = self.group.order();
        let r = classes.len();
        let int = |n: usize| f.from_int(n as i64);
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                let mut acc = f.zero();
                for k in 0..r {
                    let t = f.mul(&a.values()[k], &f.conj(&b.values()[k]));
                    acc = f.add(&acc, &f.mul(&t, &int(classes[k].size())));
                }
                let want = if i == j { int(order) } else { f.zero() };
                if acc != want {
                    return Err(HkrError::Consistency(format!(
                        "row orthogonality fails for rows {i}, {j}"
                    )));
                }
            }
        }
        for k in 0..r {
            for l in k..r {
                let mut acc = f.zero();
                for chi in &self.irreducibles {
                    acc = f.add(&acc, &f.mul(&chi.values()[k], &f.conj(&chi.values()[l])));
                }
                let want = if k == l {
                    int(classes[k].centralizer_order)
                } else {
                    f.zero()
                };
                if acc != want {
                    return Err(HkrError::Consistency(format!(
                        "column orthogonality fails for classes {k}, {l}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `{group, classes: [{size, rep_cycles, order}], conductor, irreducibles}`
    /// with each value given by its rational coordinates in `1, z, z^2, ...`.
    pub fn to_json(&self) -> serde_json::Value {
        let g = &self.group;
        let classes: Vec<_> = g
            .conjugacy_classes()
            .iter()
            .map(|c| {
                json!({
                    "size": c.size(),
                    "rep_cycles": g.element(c.representative).cycle_notation(),
                    "order": g.element_order(c.representative),
                })
            })
            .collect();
        let rows: Vec<Vec<Vec<String>>> = self
            .irreducibles
            .iter()
            .map(|chi| {
                chi.values()
                    .iter()
                    .map(|v| v.coords().iter().map(format_rational).collect())
                    .collect()
            })
            .collect();
        json!({
            "group": g.name().unwrap_or("?"),
            "classes": classes,
            "conductor": self.conductor(),
            "irreducibles": rows,
        })
    }
}

fn degree_of(chi: &ClassFunction) -> u64 {
    use num::ToPrimitive;
    chi.values()[0]
        .to_rational()
        .and_then(|q| q.to_integer().to_u64())
        .expect("degree is a positive integer")
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// The irreducible characters of `group`.
pub fn character_table(group: &FiniteGroup) -> Result<CharacterTable> {
    character_table_arc(Arc::new(group.clone()))
}

pub fn character_table_arc(group: Arc<FiniteGroup>) -> Result<CharacterTable> {
    let order = group.order();
    if order > TABLE_ORDER_CAP {
        return Err(HkrError::SizeCap {
            what: format!("character table for a group of order {order}"),
            cap: TABLE_ORDER_CAP as u64,
        });
    }
    let e = group.exponent();
    let classes = group.conjugacy_classes();
    let lookup = group.class_lookup();
    let power_map: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut out = Vec::with_capacity(e as usize);
            let mut acc = group.identity();
            for _ in 0..e {
                out.push(lookup[acc as usize]);
                acc = group.mul(acc, c.representative);
            }
            out
        })
        .collect();
    let structure = class_structure_constants(&group, &lookup);
    let field = CyclotomicField::new(e);

    // q > 2 sqrt|G| makes the degree unique from d^2 mod q
    let mut q = (2 * isqrt(order as u64) + 2) / e * e + 1;
    let mut attempts = 0;
    loop {
        while !arith::is_prime(q) || q <= 2 * isqrt(order as u64) + 1 {
            q += e;
        }
        attempts += 1;
        if let Some(rows) = dixon_mod_q(&group, &structure, &power_map, e, q, attempts as u64) {
            let domain = Arc::new((0..classes.len()).collect::<Vec<_>>());
            let mut irreducibles: Vec<ClassFunction> = rows
                .into_iter()
                .map(|counts| {
                    let values = counts.iter().map(|m| field.from_root_counts(m)).collect();
                    ClassFunction::new(group.clone(), field.clone(), domain.clone(), values)
                })
                .collect::<Result<_>>()?;
            irreducibles.sort_by(compare_rows);
            let table = CharacterTable {
                group,
                field,
                irreducibles,
                power_map,
                prime: q,
            };
            let sum: u64 = table.degrees().iter().map(|d| d * d).sum();
            if sum != order as u64 {
                return Err(HkrError::Consistency(format!(
                    "sum of squared degrees {sum} != {order}"
                )));
            }
            return Ok(table);
        }
        if attempts >= PRIME_ATTEMPTS {
            return Err(HkrError::NoSuitablePrime { bound: q });
        }
        q += e;
    }
}

fn compare_rows(a: &ClassFunction, b: &ClassFunction) -> Ordering {
    let trivial = |c: &ClassFunction| {
        c.values()
            .iter()
            .all(|v| v.to_rational() == Some(BigRational::from_integer(1.into())))
    };
    degree_of(a)
        .cmp(&degree_of(b))
        .then_with(|| trivial(b).cmp(&trivial(a)))
        .then_with(|| {
            let ka: Vec<&[BigRational]> = a.values().iter().map(CyclotomicNumber::coords).collect();
            let kb: Vec<&[BigRational]> = b.values().iter().map(CyclotomicNumber::coords).collect();
            kb.cmp(&ka)
        })
}

/// `a[i][j][k] = #{x ∈ C_i : x^{-1} g_k ∈ C_j}`.
fn class_structure_constants(group: &FiniteGroup, lookup: &[usize]) -> Vec<Vec<Vec<u64>>> {
    let classes = group.conjugacy_classes();
    let r = classes.len();
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for (i, ci) in classes.iter().enumerate() {
        for &x in &ci.members {
            let xi = group.inv(x);
            for (k, ck) in classes.iter().enumerate() {
                let j = lookup[group.mul(xi, ck.representative) as usize];
                a[i][j][k] += 1;
            }
        }
    }
    a
}

/// Rows of eigenvalue multiplicities (`counts[k][l]` = multiplicity of
/// `zeta_e^l` in `ρ(g_k)`), or `None` when this `q` does not work out.
fn dixon_mod_q(
    group: &FiniteGroup,
    structure: &[Vec<Vec<u64>>],
    power_map: &[Vec<usize>],
    e: u64,
    q: u64,
    seed: u64,
) -> Option<Vec<Vec<Vec<i64>>>> {
    let fq = ModularIntegers::prime_field(q);
    let classes = group.conjugacy_classes();
    let r = classes.len();
    let order = group.order() as u64;
    let matrices: Vec<Vec<Vec<u64>>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| (0..r).map(|k| structure[i][j][k] % q).collect())
                .collect()
        })
        .collect();
    let vectors = common_eigenvectors(&fq, &matrices, r, seed)?;

    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64 % q).collect();
    let inverse_class: Vec<usize> = (0..r).map(|k| power_map[k][(e - 1) as usize]).collect();
    let z = arith::pow_mod(arith::primitive_root(q), (q - 1) / e, q);
    let z_inv = fq.inv(&z)?;
    let e_inv = fq.inv(&(e % q))?;
    let max_degree = isqrt(order);

    let mut rows = Vec::with_capacity(r);
    for v in vectors {
        let lead = fq.inv(&v[0])?;
        let w: Vec<u64> = v.iter().map(|x| fq.mul(x, &lead)).collect();
        let mut s = 0;
        for k in 0..r {
            let t = fq.mul(&fq.mul(&w[k], &w[inverse_class[k]]), &fq.inv(&sizes[k])?);
            s = fq.add(&s, &t);
        }
        let d2 = fq.mul(&(order % q), &fq.inv(&s)?);
        let candidates: Vec<u64> = (1..=max_degree).filter(|d| d * d % q == d2).collect();
        let &[d] = candidates.as_slice() else {
            return None;
        };
        let chi: Vec<u64> = (0..r)
            .map(|k| fq.mul(&fq.mul(&(d % q), &w[k]), &fq.inv(&sizes[k]).expect("q ∤ |G|")))
            .collect();
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let mut counts = vec![0i64; e as usize];
            let mut total = 0;
            for (l, slot) in counts.iter_mut().enumerate() {
                let mut acc = 0;
                let step = fq.pow(&z_inv, l as u64);
                let mut zt = 1;
                for t in 0..e as usize {
                    acc = fq.add(&acc, &fq.mul(&chi[power_map[k][t]], &zt));
                    zt = fq.mul(&zt, &step);
                }
                let m = fq.mul(&acc, &e_inv);
                if m > d {
                    return None;
                }
                *slot = m as i64;
                total += m;
            }
            if total != d {
                return None;
            }
            row.push(counts);
        }
        rows.push(row);
    }
    Some(rows)
}

/// Splits `F_q^r` into common one-dimensional eigenspaces of `matrices`,
/// using random combinations first and then the matrices one at a time.
fn common_eigenvectors(
    fq: &ModularIntegers,
    matrices: &[Vec<Vec<u64>>],
    r: usize,
    seed: u64,
) -> Option<Vec<Vec<u64>>> {
    let q = fq.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ seed);
    let mut sequence = Vec::new();
    for _ in 0..2 {
        let coeffs: Vec<u64> = (0..matrices.len()).map(|_| rng.gen_range(0..q)).collect();
        let mut m = vec![vec![0u64; r]; r];
        for (c, mi) in coeffs.iter().zip(matrices) {
            for j in 0..r {
                for k in 0..r {
                    m[j][k] = fq.add(&m[j][k], &fq.mul(c, &mi[j][k]));
                }
            }
        }
        sequence.push(m);
    }
    sequence.extend(matrices.iter().skip(1).cloned());

    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    for m in &sequence {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split_space(fq, m, &space)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return None;
    }
    Some(
        spaces
            .into_iter()
            .map(|mut s| s.pop().expect("one vector"))
            .collect(),
    )
}

fn apply(fq: &ModularIntegers, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (a, b)| fq.add(&acc, &fq.mul(a, b)))
        })
        .collect()
}

/// Eigenspaces of `m` restricted to the invariant subspace spanned by `basis`.
fn split_space(fq: &ModularIntegers, m: &[Vec<u64>], basis: &[Vec<u64>]) -> Option<Vec<Vec<Vec<u64>>>> {
    let s = basis.len();
    let r = basis[0].len();
    let b: Vec<Vec<u64>> = (0..r).map(|i| basis.iter().map(|v| v[i]).collect()).collect();
    // restricted[i][j] = i-th coordinate of m·basis_j
    let mut restricted = vec![vec![0u64; s]; s];
    for (j, v) in basis.iter().enumerate() {
        let coords = linalg::solve(fq, &b, &apply(fq, m, v))?;
        for i in 0..s {
            restricted[i][j] = coords[i];
        }
    }
    let cp = linalg::charpoly(fq, &restricted);
    let roots: Vec<u64> = (0..fq.modulus())
        .filter(|t| {
            let mut acc = 0;
            for c in cp.iter().rev() {
                acc = fq.add(&fq.mul(&acc, t), c);
            }
            acc == 0
        })
        .collect();
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let mut shifted = restricted.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = fq.sub(&row[i], &lambda);
        }
        let null = linalg::nullspace(fq, &shifted, s);
        total += null.len();
        let vectors: Vec<Vec<u64>> = null
            .iter()
            .map(|c| {
                (0..r)
                    .map(|i| (0..s).fold(0, |acc, j| fq.add(&acc, &fq.mul(&c[j], &basis[j][i]))))
                    .collect()
            })
            .collect();
        out.push(vectors);
    }
    (total == s).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named_group;

    fn ints(table: &CharacterTable) -> Vec<Vec<Option<i64>>> {
        use num::ToPrimitive;
        table
            .irreducibles()
            .iter()
            .map(|chi| {
                chi.values()
                    .iter()
                    .map(|v| v.to_rational().and_then(|q| q.to_integer().to_i64()))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn cyclic_two() {
        let t = character_table(&named_group("Cyc(2)").unwrap()).unwrap();
        assert_eq!(ints(&t), vec![vec![Some(1), Some(1)], vec![Some(1), Some(-1)]]);
    }

    #[test]
    fn symmetric_three() {
        let g = named_group("Sym(3)").unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        // classes by size: identity, transpositions (3), 3-cycles (2)
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(ints(&t)[2], vec![Some(2), Some(-1), Some(0)]);
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn quaternion_degrees() {
        let t = character_table(&named_group("Q8").unwrap()).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn cyclic_five_has_irrational_values() {
        let t = character_table(&named_group("Cyc(5)").unwrap()).unwrap();
        assert_eq!(t.degrees(), vec![1; 5]);
        assert!(t.irreducibles()[1]
            .values()
            .iter()
            .skip(1)
            .all(|v| !v.is_rational()));
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn order_cap() {
        let g = named_group("Sym(7)").unwrap();
        assert!(matches!(character_table(&g), Err(HkrError::SizeCap { .. })));
    }
}
