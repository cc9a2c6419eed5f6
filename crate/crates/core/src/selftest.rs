//! The acceptance suite: ten exact checks, each with its own time budget.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::arith;
use crate::charmap::{self, ClassFunction};
use crate::commuting;
use crate::cyclotomic::{CyclotomicField, CyclotomicNumber};
use crate::error::Result;
use crate::fgl::{self, FglName, TruncatedSeries, WeierstrassDegree};
use crate::group::{self, Elem, FiniteGroup, Permutation};
use crate::inertia::{self, GSet};
use crate::levelrings;
use crate::ring::{Integers, ModularIntegers, Rationals, Ring};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionOutcome {
    /// `PASS  3 subgroup counts (0.01 s): ...`
    pub fn line(&self) -> String {
        format!(
            "{}  {:>2} {} ({:.2} s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.seconds,
            self.detail
        )
    }
}

type Check = fn() -> std::result::Result<String, String>;

const CRITERIA: &[(u8, &str, u64, Check)] = &[
    (1, "cyclic rank law", 10, cyclic_rank_law),
    (2, "symmetric-group numerology", 60, symmetric_numerology),
    (3, "subgroup counts", 60, subgroup_counts),
    (4, "formal group suite", 30, formal_group_suite),
    (5, "C0 tower", 120, c0_tower),
    (6, "character-map rank", 300, character_map_rank),
    (7, "operations coherence", 300, operations_coherence),
    (8, "fixed-point dimension", 300, fixed_point_dimension),
    (9, "inertia suite", 300, inertia_suite),
    (10, "character table orthogonality", 300, orthogonality),
];

/// Criterion ids and titles, in order.
pub fn criteria() -> Vec<(u8, &'static str)> {
    CRITERIA.iter().map(|&(id, title, _, _)| (id, title)).collect()
}

/// Runs one criterion; an unknown id yields `None`.
pub fn run_criterion(id: u8) -> Option<CriterionOutcome> {
    let &(id, title, budget, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed > Duration::from_secs(budget) {
        passed = false;
        detail = format!("{detail}; over the {budget} s budget");
    }
    Some(CriterionOutcome {
        id,
        title,
        passed,
        detail,
        seconds: elapsed.as_secs_f64(),
    })
}

pub fn run_all() -> Vec<CriterionOutcome> {
    CRITERIA.iter().filter_map(|c| run_criterion(c.0)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cyclic_rank_law() -> std::result::Result<String, String> {
    let mut cases = 0;
    for p in [2u64, 3, 5] {
        let mut k = 1;
        while p.pow(k) <= 4096 {
            let g = ok(group::named_group(&format!("Cyc({})", p.pow(k))))?;
            let mut n = 1;
            while let Some(expected) = p.checked_pow(k * n).filter(|&v| v <= 4096) {
                let r = ok(commuting::rank_prediction(&g, p, n as usize))?;
                ensure(r as u64 == expected, || {
                    format!("Cyc({}) p={p} n={n}: {r} != {expected}", p.pow(k))
                })?;
                cases += 1;
                n += 1;
            }
            k += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn symmetric_numerology() -> std::result::Result<String, String> {
    let mut seen = Vec::new();
    for (p, k) in [(2u64, 1u32), (2, 2), (3, 1)] {
        let g = ok(group::named_group(&format!("Sym({})", p.pow(k))))?;
        for n in [1usize, 2] {
            let rank = ok(commuting::rank_prediction(&g, p, n))? as u64;
            let sets = ok(commuting::zpn_set_count(p, n, k))?;
            ensure(rank == sets, || {
                format!("Sym({}) p={p} n={n}: rank {rank} vs {sets} Z_p^n-sets", p.pow(k))
            })?;
            seen.push(format!("({p},{n},{k})={rank}"));
        }
    }
    let r = ok(commuting::rank_prediction(
        &ok(group::named_group("Sym(4)"))?,
        2,
        2,
    ))?;
    ensure(r == 17, || format!("Sym(4) p=2 n=2 gave {r}, expected 17"))?;
    Ok(seen.join(" "))
}

/// Order-`p` subgroups of `(Z/p)^n`, each named by its unique generator in
/// reduced echelon form (first nonzero coordinate 1); the spans are also
/// enumerated and deduplicated as a cross-check.
fn echelon_subgroup_oracle(p: u64, n: u32) -> u64 {
    let size = p.pow(n);
    let digits = |mut v: u64| -> Vec<u64> {
        (0..n)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    };
    let mut echelon = 0;
    let mut spans: HashSet<Vec<Vec<u64>>> = HashSet::new();
    for v in 1..size {
        let d = digits(v);
        if d.iter().find(|&&x| x != 0) == Some(&1) {
            echelon += 1;
        }
        let mut span: Vec<Vec<u64>> = (1..p).map(|l| d.iter().map(|x| x * l % p).collect()).collect();
        span.sort();
        spans.insert(span);
    }
    assert_eq!(
        echelon,
        spans.len() as u64,
        "echelon representatives must name distinct subgroups"
    );
    echelon
}

fn subgroup_counts() -> std::result::Result<String, String> {
    let c = ok(commuting::subgroup_count(2, 2, 2))?;
    ensure(c == 7, || format!("subgroup_count(2,2,2) = {c}"))?;
    let mut cases = 0;
    for p in (2..=625u64).filter(|&p| arith::is_prime(p)) {
        let mut n = 1;
        while p.pow(n) <= 625 {
            let count = ok(commuting::subgroup_count(p, n as usize, 1))?;
            let oracle = echelon_subgroup_oracle(p, n);
            ensure(count == oracle, || {
                format!("p={p} n={n}: {count} vs oracle {oracle}")
            })?;
            cases += 1;
            n += 1;
        }
    }
    Ok(format!(
        "subgroup_count(2,2,2) = 7; {cases} (p,n) cases match the echelon oracle"
    ))
}

fn formal_group_suite() -> std::result::Result<String, String> {
    const D: usize = 16;
    // axioms
    let mut laws = vec![
        ok(fgl::make_fgl(&FglName::Additive, Rationals, D))?,
        ok(fgl::make_fgl(&FglName::Multiplicative, Rationals, D))?,
    ];
    for (p, n) in [(2u64, 1u32), (2, 2), (3, 1)] {
        laws.push(ok(fgl::honda_rational(p, n, D))?);
    }
    for law in &laws {
        ok(law.check_axioms()).map_err(|e| format!("{}: {e}", law.name()))?;
    }
    for (p, n) in [(2u64, 3u32), (3, 2), (5, 1)] {
        let law = ok(fgl::make_fgl(
            &FglName::Honda { p, n },
            ModularIntegers::new(p, 3),
            D,
        ))?;
        ok(law.check_axioms()).map_err(|e| format!("{} mod {p}^3: {e}", law.name()))?;
    }

    // [p^k] = x ∏ ⟨p^i⟩ for the multiplicative law, and the closed form (1+x)^{p^k} - 1
    let mut products = 0;
    for p in (2..=27u64).filter(|&p| arith::is_prime(p)) {
        let mut k = 1;
        while p.pow(k) <= 27 {
            let pk = p.pow(k);
            let d = pk as usize + 1;
            let law = ok(fgl::make_fgl(&FglName::Multiplicative, Integers, d))?;
            let mut acc = TruncatedSeries::x(Integers, d);
            for i in 1..=k {
                acc = acc.mul_by_nonunit(&ok(law.angle_series(p, i))?);
            }
            let full = ok(law.m_series(pk as i64))?;
            ensure(acc == full, || format!("[{pk}] != x * prod <{p}^i>"))?;
            let binomials: Vec<i64> = (0..=pk)
                .map(|j| if j == 0 { 0 } else { binomial(pk, j) })
                .collect();
            let closed = TruncatedSeries::from_ints(Integers, &binomials, d);
            ensure(full == closed, || format!("[{pk}] is not (1+x)^{pk} - 1"))?;
            products += 1;
            k += 1;
        }
    }

    // coprimality certificates
    let mut certs = 0;
    for p in [2u64, 3] {
        for j in 1..=3u32 {
            for i in 0..j {
                let c = ok(fgl::coprimality_check(p, i, j))?;
                ensure(c.coprime() && c.verify(), || {
                    format!("<{p}^{i}>, <{p}^{j}> not certified coprime")
                })?;
                certs += 1;
            }
        }
    }

    // Weierstrass degrees and integrality
    let mut degrees = 0;
    for p in (2..=16u64).filter(|&p| arith::is_prime(p)) {
        let mut n = 1;
        while p.pow(n) <= 16 {
            ok(fgl::honda_rational(p, n, D))?;
            let law = ok(fgl::make_fgl(
                &FglName::Honda { p, n },
                ModularIntegers::new(p, 2),
                D,
            ))?;
            let mut k = 1;
            while let Some(expected) = p.checked_pow(k * n).filter(|&v| v <= 16) {
                let series = ok(law.m_series(p.pow(k) as i64))?;
                let w = fgl::weierstrass_degree(&series);
                ensure(w == WeierstrassDegree::Finite(expected as usize), || {
                    format!("honda({p},{n}) [{p}^{k}] has Weierstrass degree {w}, expected {expected}")
                })?;
                degrees += 1;
                k += 1;
            }
            n += 1;
        }
    }
    Ok(format!(
        "{} laws satisfy the axioms to D = {D}; {products} product identities; {certs} coprimality certificates; {degrees} Weierstrass degrees",
        laws.len() + 3
    ))
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn c0_tower() -> std::result::Result<String, String> {
    for (p, k) in [(2u64, 1u32), (3, 1), (2, 2), (2, 3), (3, 2)] {
        let (_, report) = ok(levelrings::vandermonde_det(p, k))?;
        ensure(report.passes, || {
            format!("Vandermonde comparison fails at {p}^{k}")
        })?;
    }
    let mut localized = 0;
    for p in (2..=31u64).filter(|&p| arith::is_prime(p)) {
        let mut k = 0;
        while p.pow(k) <= 32 {
            let d = ok(levelrings::localize_c0k(p, k))?;
            let phi = arith::euler_phi(p.pow(k)) as usize;
            ensure(d.dimension == phi && d.eisenstein_at_p, || {
                format!(
                    "C_(0,{k}) at p={p}: dimension {} (phi = {phi}), irreducible: {}",
                    d.dimension, d.eisenstein_at_p
                )
            })?;
            localized += 1;
            k += 1;
        }
    }
    let mut fixed = 0;
    for p in (2..=16u64).filter(|&p| arith::is_prime(p)) {
        let mut k = 1;
        while p.pow(k) <= 16 {
            let dim = ok(levelrings::galois_fixed_subring_dim(&ok(levelrings::cpk_ring(
                p, k,
            ))?))?;
            ensure(dim == k as usize + 1, || {
                format!("fixed subring at {p}^{k} has dimension {dim}")
            })?;
            fixed += 1;
            k += 1;
        }
    }
    Ok(format!(
        "5 Vandermonde comparisons; {localized} localizations; {fixed} fixed subrings"
    ))
}

fn character_map_rank() -> std::result::Result<String, String> {
    let groups = ok(group::named_suite(100))?;
    for g in &groups {
        let table = ok(charmap::character_table(g))?;
        for p in [2u64, 3, 5] {
            let rank = ok(charmap::char_matrix_rank(&table, p))?;
            let predicted = ok(commuting::rank_prediction(g, p, 1))?;
            let classes = charmap::p_power_classes(&table, p).len();
            ensure(rank == predicted && predicted == classes, || {
                format!(
                    "{} p={p}: rank {rank}, prediction {predicted}, classes {classes}",
                    name(g)
                )
            })?;
        }
    }
    Ok(format!("{} groups, p in {{2,3,5}}", groups.len()))
}

fn name(g: &FiniteGroup) -> String {
    g.name().unwrap_or("?").to_string()
}

/// Matrices of a representation given on the generators, extended to the
/// whole group; `None` if the assignment is not a homomorphism.
fn representation(
    group: &FiniteGroup,
    field: &CyclotomicField,
    gens: &[Vec<Vec<CyclotomicNumber>>],
) -> Option<Vec<Vec<Vec<CyclotomicNumber>>>> {
    let d = gens.first().map_or(1, Vec::len);
    let matmul =
        |a: &Vec<Vec<CyclotomicNumber>>, b: &Vec<Vec<CyclotomicNumber>>| -> Vec<Vec<CyclotomicNumber>> {
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            (0..d).fold(field.zero(), |acc, l| {
                                field.add(&acc, &field.mul(&a[i][l], &b[l][j]))
                            })
                        })
                        .collect()
                })
                .collect()
        };
    let mut mats: Vec<Option<Vec<Vec<CyclotomicNumber>>>> = vec![None; group.order()];
    mats[0] = Some(
        (0..d)
            .map(|i| (0..d).map(|j| field.from_int((i == j) as i64)).collect())
            .collect(),
    );
    let idx = group.generator_indices();
    let mut queue = vec![0 as Elem];
    let mut i = 0;
    while i < queue.len() {
        let h = queue[i];
        i += 1;
        for (&s, m) in idx.iter().zip(gens) {
            let sh = group.mul(s, h);
            let prod = matmul(m, mats[h as usize].as_ref().expect("visited"));
            match &mats[sh as usize] {
                Some(existing) if *existing != prod => return None,
                Some(_) => {}
                None => {
                    mats[sh as usize] = Some(prod);
                    queue.push(sh);
                }
            }
        }
    }
    mats.into_iter().collect()
}

/// `tr(S ∘ (A ⊗ A))` with `S` the swap of tensor factors, from the explicit
/// `d² × d²` matrices.
fn swap_trace(field: &CyclotomicField, a: &[Vec<CyclotomicNumber>]) -> CyclotomicNumber {
    let d = a.len();
    let kron = |r: usize, c: usize| field.mul(&a[r / d][c / d], &a[r % d][c % d]);
    let swap = |r: usize| (r % d) * d + r / d;
    // (S K)_{rr} = K_{swap(r), r}
    (0..d * d).fold(field.zero(), |acc, r| field.add(&acc, &kron(swap(r), r)))
}

/// The permutation representation of a permutation group on its points.
fn permutation_matrices(field: &CyclotomicField, gens: &[Permutation]) -> Vec<Vec<Vec<CyclotomicNumber>>> {
    gens.iter()
        .map(|g| {
            let d = g.degree();
            (0..d)
                .map(|i| (0..d).map(|j| field.from_int((g.apply(j) == i) as i64)).collect())
                .collect()
        })
        .collect()
}

fn swap_trace_cases() -> std::result::Result<usize, String> {
    let mut checked = 0;
    for spec in ["Sym(3)", "Sym(4)", "Dih(4)", "Dih(5)", "Cyc(5)", "Cyc(4)", "Q8"] {
        let g = Arc::new(ok(group::named_group(spec))?);
        let table = ok(charmap::character_table_arc(g.clone()))?;
        let field = table.field().clone();
        let z = |l: i64| field.root_power(l);
        let mut reps = vec![permutation_matrices(&field, g.generators())];
        match spec {
            "Cyc(5)" | "Cyc(4)" => reps.push(vec![vec![vec![z(1)]]]),
            "Q8" => {
                // left multiplication by i and j on the quaternions, as 2x2 complex matrices
                let i = z(1);
                let (zero, one) = (field.zero(), field.one());
                reps.push(vec![
                    vec![vec![i.clone(), zero.clone()], vec![zero.clone(), field.neg(&i)]],
                    vec![vec![zero.clone(), one.clone()], vec![field.neg(&one), zero]],
                ]);
            }
            _ => {}
        }
        for gens in reps {
            let mats =
                representation(&g, &field, &gens).ok_or_else(|| format!("{spec}: not a representation"))?;
            let trace = |m: &Vec<Vec<CyclotomicNumber>>| {
                (0..m.len()).fold(field.zero(), |acc, i| field.add(&acc, &m[i][i]))
            };
            let classes = g.conjugacy_classes();
            let chi = ClassFunction::from_fn(g.clone(), field.clone(), |c| {
                trace(&mats[classes[c].representative as usize])
            });
            let p2 = ok(charmap::total_power(&table, 2, &chi))?;
            let transposition = Permutation::from_cycles(2, &[vec![0, 1]]).expect("valid");
            let row = p2
                .at_permutation(&transposition)
                .ok_or("missing cycle type [2]")?;
            for (c, class) in classes.iter().enumerate() {
                let oracle = swap_trace(&field, &mats[class.representative as usize]);
                ensure(row[c] == oracle, || {
                    format!("{spec}: P_2 at (transposition, class {c}) differs from the swap trace")
                })?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn operations_coherence() -> std::result::Result<String, String> {
    let groups = ok(group::named_suite(48))?;
    let mut compared = 0;
    for g in groups {
        let table = ok(charmap::character_table_arc(Arc::new(g)))?;
        for (p, k) in [(2u64, 1u32), (2, 2), (3, 1)] {
            for chi in table.irreducibles() {
                let level = ok(charmap::psi_level(&table, p, k, chi))?;
                let adams = ok(charmap::adams_psi(&table, p.pow(k) as i64, chi))?;
                ensure(level == adams, || {
                    format!("{}: psi_level({p},{k}) != psi^{}", name(table.group()), p.pow(k))
                })?;
                compared += 1;
            }
        }
    }
    let swaps = swap_trace_cases()?;
    Ok(format!(
        "{compared} psi_level/adams comparisons; {swaps} swap-trace values"
    ))
}

fn fixed_point_dimension() -> std::result::Result<String, String> {
    let groups = ok(group::named_suite(48))?;
    let mut cases = 0;
    for g in &groups {
        let table = ok(charmap::character_table(g))?;
        for p in [2u64, 3, 5] {
            let need = arith::p_power_exponent(arith::p_part(table.conductor(), p), p).unwrap_or(0);
            let dim = ok(charmap::galois_fixed_dim(&table, p, need.max(1)))?;
            let predicted = ok(commuting::rank_prediction(g, p, 1))?;
            ensure(dim == predicted, || {
                format!("{} p={p}: dimension {dim}, prediction {predicted}", name(g))
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (group, p) cases"))
}

/// Point, regular orbit, `G/⟨g⟩` for a representative of each class, one
/// disjoint union and one product.
fn test_gsets(g: &Arc<FiniteGroup>) -> Result<Vec<GSet>> {
    let mut out = vec![GSet::point(g.clone()), GSet::regular(g.clone())?];
    for class in g.conjugacy_classes().iter().skip(1) {
        out.push(GSet::cosets(g.clone(), &[class.representative])?);
    }
    let last = out.last().expect("nonempty").clone();
    out.push(last.disjoint_union(&out[0])?);
    if out.len() > 3 {
        out.push(out[2].product(&last)?);
    }
    Ok(out)
}

fn inertia_suite() -> std::result::Result<String, String> {
    let groups = ok(group::small_p_groups(16))?;
    let mut sets = 0;
    for g in groups {
        let g = Arc::new(g);
        let label = name(&g);
        let p = g.p_group_prime().unwrap_or(2);
        let k = arith::p_power_exponent(g.exponent(), p).unwrap_or(0).max(1);
        for n in [1usize, 2] {
            let report = ok(inertia::loops_pgroup_check(&g, n))?;
            ensure(report.holds, || {
                format!("{label} n={n}: Hom(Z^n,G) and Hom(Z_p^n,G) differ")
            })?;
            for x in ok(test_gsets(&g))? {
                let census = ok(inertia::orbit_census(&x, p, n))?.count();
                let predicted = ok(inertia::orbit_sum_prediction(&x, p, n))?;
                ensure(census == predicted, || {
                    format!(
                        "{label} n={n} |X|={}: census {census} vs orbit sum {predicted}",
                        x.len()
                    )
                })?;
                if n == 2 {
                    let it = ok(inertia::iterate_fix_check(&x, p, n))?;
                    ensure(it.holds, || {
                        format!("{label} |X|={}: iterated Fix fails", x.len())
                    })?;
                }
                let fix = ok(inertia::fix_n(&x, p, n))?;
                ensure(ok(inertia::gl_functoriality_check(&fix, k))?, || {
                    format!("{label} n={n} |X|={}: GL action not functorial", x.len())
                })?;
                sets += 1;
            }
        }
    }
    Ok(format!(
        "{sets} (G-set, n) cases over the p-groups of order <= 16"
    ))
}

fn orthogonality() -> std::result::Result<String, String> {
    let groups = ok(group::named_suite(200))?;
    for g in &groups {
        let table = ok(charmap::character_table(g))?;
        ok(table.check_orthogonality()).map_err(|e| format!("{}: {e}", name(g)))?;
    }
    Ok(format!("{} groups", groups.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_oracle_small_cases() {
        assert_eq!(echelon_subgroup_oracle(2, 2), 3);
        assert_eq!(echelon_subgroup_oracle(3, 3), 13);
    }

    #[test]
    fn swap_trace_of_identity_is_dimension() {
        let f = CyclotomicField::new(1);
        let id: Vec<Vec<CyclotomicNumber>> = (0..3)
            .map(|i| (0..3).map(|j| f.from_int((i == j) as i64)).collect())
            .collect();
        assert_eq!(swap_trace(&f, &id), f.from_int(3));
    }

    #[test]
    fn ids_are_sequential() {
        let ids: Vec<u8> = criteria().iter().map(|c| c.0).collect();
        assert_eq!(ids, (1..=10).collect::<Vec<_>>());
        assert!(run_criterion(11).is_none());
    }
}
