//! Commuting tuples of `p`-power-order elements, i.e. homomorphisms
//! `Z_p^n → G`, their simultaneous-conjugation classes, the `GL_n(Z/p^k)`
//! action by precomposition, and the counting side of the rank predictions.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::arith;
use crate::error::{HkrError, Result};
use crate::group::{Elem, FiniteGroup};

pub const DEFAULT_TUPLE_WORK_CAP: u64 = 100_000_000;

/// Largest `p^(kn)` for which [`subgroup_count`] enumerates subgroups.
pub const SUBGROUP_ENUMERATION_CAP: u64 = 1_000_000;

const GL_MATRIX_CAP: u64 = 5_000_000;

/// An `n`-tuple of pairwise commuting `p`-power-order elements, by element index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CommutingTuple {
    pub entries: Vec<Elem>,
}

impl CommutingTuple {
    pub fn new(entries: Vec<Elem>) -> Self {
        Self { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Simultaneous conjugation `g α g⁻¹`.
    pub fn conjugate(&self, group: &FiniteGroup, g: Elem) -> Self {
        Self::new(self.entries.iter().map(|&a| group.conj(g, a)).collect())
    }

    /// Whether the tuple is a valid homomorphism `Z_p^n → G`.
    pub fn is_valid(&self, group: &FiniteGroup, p: u64) -> bool {
        self.entries.iter().all(|&a| group.has_p_power_order(a, p))
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(i, &a)| self.entries[i + 1..].iter().all(|&b| group.commute(a, b)))
    }

    /// `α(l) = ∏ g_i^{l_i}`.
    pub fn evaluate(&self, group: &FiniteGroup, exponents: &[u64]) -> Elem {
        self.entries
            .iter()
            .zip(exponents)
            .fold(group.identity(), |acc, (&g, &e)| {
                group.mul(acc, group.pow(g, e as i64))
            })
    }

    pub fn cycle_notation(&self, group: &FiniteGroup) -> Vec<String> {
        self.entries
            .iter()
            .map(|&e| group.element(e).cycle_notation())
            .collect()
    }
}

/// A conjugacy class of commuting tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleClass {
    /// Least tuple of the class in lexicographic element order.
    pub representative: CommutingTuple,
    pub size: usize,
    /// Order of the centralizer of the subgroup generated by the entries.
    pub image_centralizer_order: usize,
}

fn check_prime(p: u64) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(HkrError::InvalidArgument(format!("{p} is not prime")))
    }
}

/// All commuting `n`-tuples drawn from `pool`, in lexicographic order.
/// Each entry is chosen from the members of `pool` that centralize the
/// earlier entries.
pub(crate) fn commuting_tuples_from(
    group: &FiniteGroup,
    pool: &[Elem],
    n: usize,
    cap: u64,
) -> Result<Vec<CommutingTuple>> {
    fn extend(
        group: &FiniteGroup,
        pool: &[Elem],
        n: usize,
        partial: &mut Vec<Elem>,
        out: &mut Vec<CommutingTuple>,
        work: &mut u64,
        cap: u64,
    ) -> Result<()> {
        if partial.len() == n {
            out.push(CommutingTuple::new(partial.clone()));
            return Ok(());
        }
        for &c in pool {
            partial.push(c);
            let next: Vec<Elem> = if partial.len() < n {
                *work += pool.len() as u64;
                if *work > cap {
                    return Err(HkrError::TupleWorkCap { cap });
                }
                pool.iter().copied().filter(|&d| group.commute(c, d)).collect()
            } else {
                *work += 1;
                Vec::new()
            };
            extend(group, &next, n, partial, out, work, cap)?;
            partial.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut work = 0;
    extend(group, pool, n, &mut Vec::new(), &mut out, &mut work, cap)?;
    Ok(out)
}

/// `Hom(Z_p^n, G)` as commuting tuples of `p`-power-order elements.
pub fn hom_tuples(group: &FiniteGroup, p: u64, n: usize) -> Result<Vec<CommutingTuple>> {
    hom_tuples_capped(group, p, n, DEFAULT_TUPLE_WORK_CAP)
}

pub fn hom_tuples_capped(group: &FiniteGroup, p: u64, n: usize, cap: u64) -> Result<Vec<CommutingTuple>> {
    check_prime(p)?;
    commuting_tuples_from(group, &group.p_elements(p), n, cap)
}

/// Simultaneous-conjugation classes of commuting tuples drawn from `pool`
/// (a conjugation-stable set), computed one entry at a time: the classes
/// with a fixed first entry `a` are the `C(a)`-classes of the remaining
/// entries, and so on.
pub(crate) fn tuple_classes_from(
    group: &FiniteGroup,
    pool_mask: &[bool],
    n: usize,
    cap: u64,
) -> Result<Vec<TupleClass>> {
    struct Ctx<'a> {
        group: &'a FiniteGroup,
        pool_mask: &'a [bool],
        n: usize,
        work: u64,
        cap: u64,
        out: Vec<TupleClass>,
    }
    fn rec(ctx: &mut Ctx<'_>, partial: &mut Vec<Elem>, stabilizer: &[Elem]) -> Result<()> {
        if partial.len() == ctx.n {
            ctx.out.push(TupleClass {
                representative: CommutingTuple::new(partial.clone()),
                size: ctx.group.order() / stabilizer.len(),
                image_centralizer_order: stabilizer.len(),
            });
            return Ok(());
        }
        let group = ctx.group;
        let last = partial.len() + 1 == ctx.n;
        // (representative, orbit size) of each stabilizer-orbit in the pool
        let mut orbits: Vec<(Elem, usize)> = Vec::new();
        if partial.is_empty() {
            // the stabilizer is all of G, whose orbits are the conjugacy classes
            for class in group.conjugacy_classes() {
                if ctx.pool_mask[class.representative as usize] {
                    orbits.push((class.representative, class.size()));
                }
            }
            ctx.work += group.order() as u64;
        } else {
            let mut visited = vec![false; group.order()];
            for &c in stabilizer {
                if !ctx.pool_mask[c as usize] || visited[c as usize] {
                    continue;
                }
                ctx.work += stabilizer.len() as u64;
                if ctx.work > ctx.cap {
                    return Err(HkrError::TupleWorkCap { cap: ctx.cap });
                }
                let mut size = 0;
                for &h in stabilizer {
                    let y = group.conj(h, c) as usize;
                    if !visited[y] {
                        visited[y] = true;
                        size += 1;
                    }
                }
                orbits.push((c, size));
            }
        }
        for (c, size) in orbits {
            partial.push(c);
            if last {
                let centralizer = stabilizer.len() / size;
                ctx.out.push(TupleClass {
                    representative: CommutingTuple::new(partial.clone()),
                    size: group.order() / centralizer,
                    image_centralizer_order: centralizer,
                });
            } else {
                ctx.work += stabilizer.len() as u64;
                if ctx.work > ctx.cap {
                    return Err(HkrError::TupleWorkCap { cap: ctx.cap });
                }
                let next: Vec<Elem> = stabilizer
                    .iter()
                    .copied()
                    .filter(|&h| group.commute(h, c))
                    .collect();
                rec(ctx, partial, &next)?;
            }
            partial.pop();
        }
        Ok(())
    }
    let all: Vec<Elem> = (0..group.order() as Elem).collect();
    let mut ctx = Ctx {
        group,
        pool_mask,
        n,
        work: 0,
        cap,
        out: Vec::new(),
    };
    rec(&mut ctx, &mut Vec::new(), &all)?;
    let mut out = ctx.out;
    out.sort_by(|a, b| (a.size, &a.representative).cmp(&(b.size, &b.representative)));
    Ok(out)
}

fn p_mask(group: &FiniteGroup, p: u64) -> Vec<bool> {
    let mut mask = vec![false; group.order()];
    for e in group.p_elements(p) {
        mask[e as usize] = true;
    }
    mask
}

/// Conjugacy classes of `Hom(Z_p^n, G)`, ordered by `(size, representative)`.
pub fn tuple_classes(group: &FiniteGroup, p: u64, n: usize) -> Result<Vec<TupleClass>> {
    tuple_classes_capped(group, p, n, DEFAULT_TUPLE_WORK_CAP)
}

pub fn tuple_classes_capped(group: &FiniteGroup, p: u64, n: usize, cap: u64) -> Result<Vec<TupleClass>> {
    check_prime(p)?;
    tuple_classes_from(group, &p_mask(group, p), n, cap)
}

/// `|Hom(Z_p^n, G)/G|`, the predicted rank of `p⁻¹E⁰ ⊗ E⁰(BG)` at height `n`.
/// This is a prediction: torsion in `E⁰(BG)` is not accounted for.
pub fn rank_prediction(group: &FiniteGroup, p: u64, n: usize) -> Result<usize> {
    Ok(tuple_classes(group, p, n)?.len())
}

/// An invertible `n × n` matrix over `Z/p^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GLMatrix {
    p: u64,
    k: u32,
    entries: Vec<Vec<u64>>,
}

impl GLMatrix {
    pub fn new(p: u64, k: u32, entries: Vec<Vec<u64>>) -> Result<Self> {
        check_prime(p)?;
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(HkrError::InvalidArgument("matrix must be square".into()));
        }
        let modulus = p.pow(k);
        let entries: Vec<Vec<u64>> = entries
            .into_iter()
            .map(|r| r.into_iter().map(|x| x % modulus).collect())
            .collect();
        let m = Self { p, k, entries };
        if m.det_mod_p() == 0 {
            return Err(HkrError::InvalidArgument(
                "matrix is not invertible: determinant is divisible by p".into(),
            ));
        }
        Ok(m)
    }

    pub fn identity(p: u64, k: u32, n: usize) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        Self { p, k, entries }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.k
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.k)
    }

    fn det_mod_p(&self) -> u64 {
        let f = crate::ring::ModularIntegers::prime_field(self.p);
        let m: Vec<Vec<u64>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x % self.p).collect())
            .collect();
        crate::linalg::det(&f, &m)
    }

    /// Matrix product `self · other` over `Z/p^k`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.rank();
        let q = self.modulus();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(0u64, |acc, l| {
                            (acc + arith::mul_mod(self.entries[i][l], other.entries[l][j], q)) % q
                        })
                    })
                    .collect()
            })
            .collect();
        Self {
            p: self.p,
            k: self.k,
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.rank();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
            .collect();
        Self {
            p: self.p,
            k: self.k,
            entries,
        }
    }

    /// Precomposition `α ∘ σ`: entry `i` is `∏_j g_j^{σ_{ji}}`.
    pub fn precompose(&self, group: &FiniteGroup, alpha: &CommutingTuple) -> CommutingTuple {
        let n = self.rank();
        CommutingTuple::new(
            (0..n)
                .map(|i| {
                    let column: Vec<u64> = (0..n).map(|j| self.entries[j][i]).collect();
                    alpha.evaluate(group, &column)
                })
                .collect(),
        )
    }
}

/// Every matrix in `GL_n(Z/p^k)`.
pub fn gl_matrices(p: u64, k: u32, n: usize) -> Result<Vec<GLMatrix>> {
    check_prime(p)?;
    let q = p.pow(k);
    let count = (n * n) as u32;
    let total = q
        .checked_pow(count)
        .filter(|&t| t <= GL_MATRIX_CAP)
        .ok_or_else(|| HkrError::SizeCap {
            what: format!("enumerating all {n}x{n} matrices over Z/{q}"),
            cap: GL_MATRIX_CAP,
        })?;
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let entries: Vec<Vec<u64>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let d = c % q;
                        c /= q;
                        d
                    })
                    .collect()
            })
            .collect();
        if let Ok(m) = GLMatrix::new(p, k, entries) {
            out.push(m);
        }
    }
    Ok(out)
}

/// A generating set of `GL_n(Z/p^k)`: elementary transvections and
/// `diag(u, 1, …, 1)` for every unit `u` (sufficient over a local ring).
pub fn gl_generators(p: u64, k: u32, n: usize) -> Result<Vec<GLMatrix>> {
    check_prime(p)?;
    let q = p.pow(k);
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = GLMatrix::identity(p, k, n);
                m.entries[i][j] = 1;
                gens.push(m);
            }
        }
    }
    if n > 0 {
        for u in arith::units_mod(q) {
            if u == 1 {
                continue;
            }
            let mut m = GLMatrix::identity(p, k, n);
            m.entries[0][0] = u;
            gens.push(m);
        }
    }
    Ok(gens)
}

/// Fails with [`HkrError::LevelTooSmall`] unless `p^k` kills every `p`-element.
pub fn check_level(group: &FiniteGroup, p: u64, k: u32) -> Result<()> {
    let q = p
        .checked_pow(k)
        .ok_or_else(|| HkrError::InvalidArgument("level too large".into()))?;
    let ok = group
        .p_elements(p)
        .iter()
        .all(|&e| group.pow(e, q as i64) == group.identity());
    if ok {
        Ok(())
    } else {
        Err(HkrError::LevelTooSmall { p, k })
    }
}

/// Map from every tuple of `Hom(Z_p^n, G)` to the index of its class.
pub fn class_index(group: &FiniteGroup, classes: &[TupleClass]) -> HashMap<CommutingTuple, usize> {
    let mut map = HashMap::new();
    for (ci, class) in classes.iter().enumerate() {
        for g in 0..group.order() as Elem {
            map.entry(class.representative.conjugate(group, g)).or_insert(ci);
        }
    }
    map
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Partition of the tuple classes into `GL_n(Z/p^k)`-orbits. Orbits are
/// lists of indices into `tuple_classes(group, p, n)`, each sorted, ordered
/// by least member.
pub fn gl_action_orbits(
    group: &FiniteGroup,
    p: u64,
    n: usize,
    k: u32,
) -> Result<(Vec<TupleClass>, Vec<Vec<usize>>)> {
    check_prime(p)?;
    check_level(group, p, k)?;
    let classes = tuple_classes(group, p, n)?;
    let lookup = class_index(group, &classes);
    let mut parent: Vec<usize> = (0..classes.len()).collect();
    for sigma in gl_generators(p, k, n)? {
        for (ci, class) in classes.iter().enumerate() {
            let image = sigma.precompose(group, &class.representative);
            let cj = *lookup
                .get(&image)
                .ok_or_else(|| HkrError::Consistency("precomposition left Hom(Z_p^n, G)".into()))?;
            let (a, b) = (find(&mut parent, ci), find(&mut parent, cj));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for ci in 0..classes.len() {
        let root = find(&mut parent, ci);
        groups.entry(root).or_default().push(ci);
    }
    let mut orbits: Vec<Vec<usize>> = groups.into_values().collect();
    orbits.sort();
    Ok((classes, orbits))
}

/// Elements of the finite abelian group `(Z/q)^n`, encoded base `q`.
struct AbelianGroup {
    q: u64,
    n: usize,
    size: u64,
}

impl AbelianGroup {
    fn add(&self, a: u64, b: u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += ((a % self.q + b % self.q) % self.q) * place;
            a /= self.q;
            b /= self.q;
            place *= self.q;
        }
        out
    }

    fn scale(&self, a: u64, s: u64) -> u64 {
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += ((a % self.q) * s % self.q) * place;
            a /= self.q;
            place *= self.q;
        }
        out
    }
}

/// Number of subgroups of order `p^k` in `(Z/p^k)^n` (equivalently in
/// `(Q_p/Z_p)^n`), by explicit enumeration of subgroups. Every subgroup of a
/// `p`-group is reached through a chain of index-`p` extensions, so layer
/// `l+1` is built from layer `l` by adjoining one element `g` with `pg ∈ H`.
pub fn subgroup_count(p: u64, n: usize, k: u32) -> Result<u64> {
    check_prime(p)?;
    if n == 0 {
        return Err(HkrError::InvalidArgument("rank n must be at least 1".into()));
    }
    if k == 0 {
        return Ok(1);
    }
    let q = p.pow(k);
    let size = q
        .checked_pow(n as u32)
        .filter(|&s| s <= SUBGROUP_ENUMERATION_CAP)
        .ok_or_else(|| HkrError::SizeCap {
            what: format!("enumerating subgroups of (Z/{q})^{n}"),
            cap: SUBGROUP_ENUMERATION_CAP,
        })?;
    let ab = AbelianGroup { q, n, size };
    let mut layer: HashSet<Vec<u64>> = HashSet::from([vec![0]]);
    for _ in 0..k {
        let mut next: HashSet<Vec<u64>> = HashSet::new();
        for h in &layer {
            for g in 0..ab.size {
                if h.binary_search(&g).is_ok() || h.binary_search(&ab.scale(g, p)).is_err() {
                    continue;
                }
                let mut bigger = Vec::with_capacity(h.len() * p as usize);
                let mut shift = 0;
                for _ in 0..p {
                    bigger.extend(h.iter().map(|&x| ab.add(x, shift)));
                    shift = ab.add(shift, g);
                }
                bigger.sort_unstable();
                next.insert(bigger);
            }
        }
        layer = next;
    }
    Ok(layer.len() as u64)
}

/// Number of isomorphism classes of `Z_p^n`-sets with `p^k` points: multisets
/// of transitive `Z_p^n`-sets (of sizes `p^d`, counted by
/// [`subgroup_count`]) whose sizes sum to `p^k`.
pub fn zpn_set_count(p: u64, n: usize, k: u32) -> Result<u64> {
    check_prime(p)?;
    if k == 0 {
        return Ok(1);
    }
    let target = p.pow(k) as usize;
    // coefficients of prod_d (1 - x^{p^d})^{-t_d} up to x^target
    let mut ways = vec![0u128; target + 1];
    ways[0] = 1;
    for d in 0..=k {
        let part = p.pow(d) as usize;
        let kinds = subgroup_count(p, n, d)?;
        // each of the `kinds` transitive types is a separate unbounded part
        for _ in 0..kinds {
            for total in part..=target {
                ways[total] =
                    ways[total]
                        .checked_add(ways[total - part])
                        .ok_or_else(|| HkrError::SizeCap {
                            what: "Z_p^n-set count overflow".into(),
                            cap: u64::MAX,
                        })?;
            }
        }
    }
    u64::try_from(ways[target]).map_err(|_| HkrError::SizeCap {
        what: "Z_p^n-set count overflow".into(),
        cap: u64::MAX,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named_group;

    #[test]
    fn trivial_group_has_one_tuple() {
        let g = named_group("Cyc(1)").unwrap();
        for n in 0..4 {
            assert_eq!(hom_tuples(&g, 2, n).unwrap().len(), 1);
            assert_eq!(rank_prediction(&g, 3, n).unwrap(), 1);
        }
    }

    #[test]
    fn rank_zero_is_the_empty_tuple() {
        let g = named_group("Sym(3)").unwrap();
        let t = hom_tuples(&g, 2, 0).unwrap();
        assert_eq!(t, vec![CommutingTuple::new(vec![])]);
        assert_eq!(rank_prediction(&g, 2, 0).unwrap(), 1);
    }

    #[test]
    fn cyclic_counts() {
        let g = named_group("Cyc(4)").unwrap();
        assert_eq!(hom_tuples(&g, 2, 2).unwrap().len(), 16);
        assert_eq!(rank_prediction(&g, 2, 2).unwrap(), 16);
        assert_eq!(rank_prediction(&g, 3, 2).unwrap(), 1);
    }

    #[test]
    fn sym3_classes() {
        let g = named_group("Sym(3)").unwrap();
        assert_eq!(hom_tuples(&g, 2, 1).unwrap().len(), 4);
        let sizes: Vec<usize> = tuple_classes(&g, 2, 1).unwrap().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3]);
        let sizes: Vec<usize> = tuple_classes(&g, 3, 1).unwrap().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2]);
        assert_eq!(rank_prediction(&named_group("Sym(2)").unwrap(), 2, 1).unwrap(), 2);
    }

    #[test]
    fn representative_is_least_in_class() {
        let g = named_group("Dih(4)").unwrap();
        let all = hom_tuples(&g, 2, 2).unwrap();
        let classes = tuple_classes(&g, 2, 2).unwrap();
        let lookup = class_index(&g, &classes);
        assert_eq!(lookup.len(), all.len());
        for (ci, class) in classes.iter().enumerate() {
            let least = all.iter().filter(|t| lookup[t] == ci).min().unwrap();
            assert_eq!(least, &class.representative);
        }
    }

    #[test]
    fn work_cap_is_enforced() {
        let g = named_group("Sym(4)").unwrap();
        assert!(matches!(
            hom_tuples_capped(&g, 2, 3, 100),
            Err(HkrError::TupleWorkCap { cap: 100 })
        ));
    }

    #[test]
    fn gl_orbits_small_cases() {
        let c = named_group("Cyc(3)").unwrap();
        let (_, orbits) = gl_action_orbits(&c, 3, 1, 1).unwrap();
        assert_eq!(orbits.len(), 2);
        let t = named_group("Cyc(1)").unwrap();
        assert_eq!(gl_action_orbits(&t, 2, 2, 1).unwrap().1.len(), 1);
        let c4 = named_group("Cyc(4)").unwrap();
        assert_eq!(
            gl_action_orbits(&c4, 2, 1, 1).unwrap_err(),
            HkrError::LevelTooSmall { p: 2, k: 1 }
        );
    }

    #[test]
    fn gl_matrix_validation() {
        assert!(GLMatrix::new(2, 1, vec![vec![1, 1], vec![1, 1]]).is_err());
        assert_eq!(gl_matrices(2, 1, 2).unwrap().len(), 6);
        assert_eq!(gl_matrices(3, 1, 1).unwrap().len(), 2);
        let m = GLMatrix::new(2, 2, vec![vec![1, 2], vec![0, 3]]).unwrap();
        assert_eq!(m.mul(&GLMatrix::identity(2, 2, 2)), m);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(subgroup_count(2, 2, 0).unwrap(), 1);
        assert_eq!(subgroup_count(2, 2, 1).unwrap(), 3);
        assert_eq!(subgroup_count(2, 2, 2).unwrap(), 7);
        assert_eq!(subgroup_count(3, 1, 2).unwrap(), 1);
        assert_eq!(subgroup_count(3, 2, 1).unwrap(), 4);
        assert!(matches!(subgroup_count(2, 30, 1), Err(HkrError::SizeCap { .. })));
    }

    #[test]
    fn zpn_counts() {
        assert_eq!(zpn_set_count(2, 2, 0).unwrap(), 1);
        assert_eq!(zpn_set_count(2, 2, 1).unwrap(), 4);
        assert_eq!(zpn_set_count(2, 2, 2).unwrap(), 17);
        // n = 1: 4, 2+2, 2+1+1, 1+1+1+1
        assert_eq!(zpn_set_count(2, 1, 2).unwrap(), 4);
    }
}
