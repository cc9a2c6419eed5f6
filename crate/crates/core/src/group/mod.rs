//! Finite permutation groups: closure, conjugacy classes, centralizers and
//! the named families of the group expression language.

mod finite;
mod parse;
mod perm;

pub use finite::{ConjugacyClass, Elem, FiniteGroup, DEFAULT_ORDER_CAP};
pub use parse::{parse_group_expr, GroupExpr};
pub use perm::Permutation;

use crate::error::Result;

/// Closure of `generators` on `degree` points.
pub fn make_group(degree: usize, generators: Vec<Permutation>) -> Result<FiniteGroup> {
    FiniteGroup::generate(degree, generators)
}

/// Parse and construct a group from the expression language.
pub fn named_group(spec: &str) -> Result<FiniteGroup> {
    named_group_capped(spec, DEFAULT_ORDER_CAP)
}

pub fn named_group_capped(spec: &str, cap: usize) -> Result<FiniteGroup> {
    let expr = parse_group_expr(spec)?;
    let (degree, gens) = generators_for(&expr)?;
    Ok(FiniteGroup::generate_capped(degree, gens, cap)?.with_name(expr.canonical()))
}

fn cycle(points: impl IntoIterator<Item = u32>, degree: usize) -> Permutation {
    let c: Vec<u32> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[c]).expect("valid cycle")
}

/// Quaternion units `±1, ±i, ±j, ±k` encoded as `sign * 4 + unit`.
fn quaternion_mul(a: usize, b: usize) -> usize {
    // unit products: TABLE[x][y] = (sign, unit) of e_x e_y with e = (1, i, j, k)
    const TABLE: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (sa, ua) = (a / 4, a % 4);
    let (sb, ub) = (b / 4, b % 4);
    let (s, u) = TABLE[ua][ub];
    ((sa + sb + s) % 2) * 4 + u
}

fn generators_for(expr: &GroupExpr) -> Result<(usize, Vec<Permutation>)> {
    Ok(match expr {
        GroupExpr::Sym(m) => {
            let m = *m;
            let gens = if m >= 2 {
                vec![cycle([0, 1], m), cycle(0..m as u32, m)]
            } else {
                vec![]
            };
            (m, gens)
        }
        GroupExpr::Cyc(m) => {
            let m = *m;
            let gens = if m >= 2 {
                vec![cycle(0..m as u32, m)]
            } else {
                vec![]
            };
            (m, gens)
        }
        GroupExpr::Dih(m) => match *m {
            1 => (2, vec![cycle([0, 1], 2)]),
            2 => {
                let a = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])?;
                let b = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]])?;
                (4, vec![a, b])
            }
            m => {
                let rotation = cycle(0..m as u32, m);
                let reflection = Permutation::from_images((0..m).map(|i| ((m - i) % m) as u32).collect())?;
                (m, vec![rotation, reflection])
            }
        },
        GroupExpr::Q8 => {
            let perms = [1usize, 2]
                .iter()
                .map(|&g| Permutation::from_images((0..8).map(|x| quaternion_mul(g, x) as u32).collect()))
                .collect::<Result<Vec<_>>>()?;
            (8, perms)
        }
        GroupExpr::Perm { degree, generators } => (*degree, generators.clone()),
        GroupExpr::Product(parts) => {
            let built = parts.iter().map(generators_for).collect::<Result<Vec<_>>>()?;
            let total: usize = built.iter().map(|(d, _)| d).sum();
            let mut gens = Vec::new();
            let mut offset = 0;
            for (d, gs) in built {
                gens.extend(gs.iter().map(|g| g.shifted(offset, total)));
                offset += d;
            }
            (total, gens)
        }
    })
}

/// The named-group suite used by the property and acceptance checks.
pub const NAMED_SUITE: &[&str] = &[
    "Cyc(1)",
    "Cyc(2)",
    "Cyc(3)",
    "Cyc(4)",
    "Cyc(5)",
    "Cyc(6)",
    "Cyc(7)",
    "Cyc(8)",
    "Cyc(9)",
    "Cyc(10)",
    "Cyc(12)",
    "Cyc(16)",
    "Cyc(25)",
    "Cyc(27)",
    "Sym(2)",
    "Sym(3)",
    "Sym(4)",
    "Sym(5)",
    "Dih(3)",
    "Dih(4)",
    "Dih(5)",
    "Dih(6)",
    "Dih(8)",
    "Dih(9)",
    "Dih(10)",
    "Dih(12)",
    "Q8",
    "Cyc(2)*Cyc(2)",
    "Cyc(2)*Cyc(4)",
    "Cyc(2)*Cyc(2)*Cyc(2)",
    "Cyc(3)*Cyc(3)",
    "Cyc(4)*Cyc(4)",
    "Cyc(3)*Cyc(6)",
    "Cyc(5)*Cyc(5)",
    "Sym(3)*Cyc(2)",
    "Sym(3)*Cyc(3)",
    "Sym(3)*Sym(3)",
    "Dih(4)*Cyc(2)",
    "Q8*Cyc(2)",
    "Q8*Cyc(3)",
    "Q8*Sym(3)",
    "Sym(4)*Cyc(2)",
    "Sym(4)*Cyc(3)",
    "Sym(3)*Sym(4)",
    "Sym(4)*Sym(4)",
    "Perm(4; (0 1 2), (0 1)(2 3))",
    "Perm(5; (0 1 2 3 4), (0 1 2))",
    "Perm(7; (0 1 2 3 4 5 6), (1 2 4)(3 6 5))",
    "Perm(5; (0 1 2 3 4), (1 2 4 3))",
    "Perm(4; (0 1 2), (0 1)(2 3))*Cyc(2)",
];

/// Members of [`NAMED_SUITE`] with order at most `max_order`.
pub fn named_suite(max_order: usize) -> Result<Vec<FiniteGroup>> {
    let mut out = Vec::new();
    for spec in NAMED_SUITE {
        let g = named_group(spec)?;
        if g.order() <= max_order {
            out.push(g);
        }
    }
    Ok(out)
}

/// `<a, b | a^m, b^n = a^s, b a b⁻¹ = a^r>` on the words `a^i b^j`, which is
/// a group of order `mn` when `r^n ≡ 1` and `rs ≡ s (mod m)`.
fn metacyclic(m: usize, n: usize, r: usize, s: usize) -> Result<FiniteGroup> {
    let mul = move |x: usize, y: usize| {
        let (i, j) = (x % m, x / m);
        let (i2, j2) = (y % m, y / m);
        let rj = (0..j).fold(1, |acc, _| acc * r % m);
        let mut e = i + rj * i2;
        let mut t = j + j2;
        if t >= n {
            t -= n;
            e += s;
        }
        e % m + m * t
    };
    let gens: Vec<usize> = if n > 1 { vec![1, m] } else { vec![1] };
    FiniteGroup::from_multiplication(m * n, mul, &gens)
}

/// `(Z/2)² ⋊ Z/4` with the generator of `Z/4` swapping the two factors.
fn swap_by_four() -> Result<FiniteGroup> {
    let swap = |v: usize| ((v & 1) << 1) | (v >> 1);
    let mul = move |x: usize, y: usize| {
        let (v, j) = (x % 4, x / 4);
        let (w, k) = (y % 4, y / 4);
        let w = if j % 2 == 1 { swap(w) } else { w };
        (v ^ w) + 4 * ((j + k) % 4)
    };
    FiniteGroup::from_multiplication(16, mul, &[1, 4])
}

/// The Pauli group `{i^k X^a Z^b}`, using `Z X = -X Z`.
fn pauli() -> Result<FiniteGroup> {
    let mul = |x: usize, y: usize| {
        let (k, a, b) = (x % 4, (x / 4) % 2, x / 8);
        let (k2, a2, b2) = (y % 4, (y / 4) % 2, y / 8);
        (k + k2 + 2 * b * a2) % 4 + 4 * (a ^ a2) + 8 * (b ^ b2)
    };
    FiniteGroup::from_multiplication(16, mul, &[1, 4, 8])
}

/// One group of each isomorphism type of order a prime power at most
/// `max_order` (at most 16), plus the trivial group. Groups outside the
/// expression language are named by their small-group library id.
pub fn small_p_groups(max_order: usize) -> Result<Vec<FiniteGroup>> {
    if max_order > 16 {
        return Err(crate::HkrError::InvalidArgument(
            "the p-group catalogue stops at order 16".into(),
        ));
    }
    let specs = [
        "Cyc(1)",
        "Cyc(2)",
        "Cyc(3)",
        "Cyc(4)",
        "Cyc(2)*Cyc(2)",
        "Cyc(5)",
        "Cyc(7)",
        "Cyc(8)",
        "Cyc(4)*Cyc(2)",
        "Cyc(2)*Cyc(2)*Cyc(2)",
        "Dih(4)",
        "Q8",
        "Cyc(9)",
        "Cyc(3)*Cyc(3)",
        "Cyc(11)",
        "Cyc(13)",
        "Cyc(16)",
        "Cyc(4)*Cyc(4)",
        "Cyc(8)*Cyc(2)",
        "Dih(8)",
        "Cyc(4)*Cyc(2)*Cyc(2)",
        "Dih(4)*Cyc(2)",
        "Q8*Cyc(2)",
        "Cyc(2)*Cyc(2)*Cyc(2)*Cyc(2)",
    ];
    let mut out = Vec::new();
    for spec in specs {
        let g = named_group(spec)?;
        if g.order() <= max_order {
            out.push(g);
        }
    }
    if max_order >= 16 {
        out.push(swap_by_four()?.with_name("SmallGroup(16,3)"));
        out.push(metacyclic(4, 4, 3, 0)?.with_name("SmallGroup(16,4)"));
        out.push(metacyclic(8, 2, 5, 0)?.with_name("SmallGroup(16,6)"));
        out.push(metacyclic(8, 2, 3, 0)?.with_name("SmallGroup(16,8)"));
        out.push(metacyclic(8, 2, 7, 4)?.with_name("SmallGroup(16,9)"));
        out.push(pauli()?.with_name("SmallGroup(16,13)"));
    }
    out.sort_by_key(|g| g.order());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        let cases = [
            ("Cyc(1)", 1),
            ("Sym(0)", 1),
            ("Sym(1)", 1),
            ("Sym(4)", 24),
            ("Cyc(2)*Cyc(2)", 4),
            ("Dih(1)", 2),
            ("Dih(2)", 4),
            ("Dih(5)", 10),
            ("Q8", 8),
            ("Perm(4; (0 1)(2 3), (0 2)(1 3))", 4),
            ("Perm(4; (0 1)(2 3), (0 2))", 8),
            ("Perm(5; (0 1 2 3 4), (0 1 2))", 60),
        ];
        for (spec, order) in cases {
            assert_eq!(named_group(spec).unwrap().order(), order, "{spec}");
        }
    }

    #[test]
    fn klein_four_has_exponent_two() {
        let g = named_group("Cyc(2)*Cyc(2)").unwrap();
        assert_eq!(g.exponent(), 2);
        assert_eq!(g.name(), Some("Cyc(2)*Cyc(2)"));
    }

    #[test]
    fn quaternion_structure() {
        let g = named_group("Q8").unwrap();
        assert_eq!(g.exponent(), 4);
        assert!(!g.is_abelian());
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn suite_orders_within_bound() {
        let suite = named_suite(200).unwrap();
        assert_eq!(suite.len(), NAMED_SUITE.len() - 1);
        assert!(suite.iter().all(|g| g.order() <= 200));
    }

    #[test]
    fn p_groups_of_order_sixteen_are_distinct() {
        let groups = small_p_groups(16).unwrap();
        assert_eq!(groups.len(), 30);
        let sixteen: Vec<&FiniteGroup> = groups.iter().filter(|g| g.order() == 16).collect();
        assert_eq!(sixteen.len(), 14);
        let signature = |g: &FiniteGroup| {
            let mut orders: Vec<u64> = (0..16).map(|a| g.element_order(a)).collect();
            orders.sort_unstable();
            let squares: std::collections::HashSet<Elem> = (0..16).map(|a| g.mul(a, a)).collect();
            let center = g.conjugacy_classes().iter().filter(|c| c.size() == 1).count();
            (orders, squares.len(), center, g.conjugacy_classes().len())
        };
        let distinct: std::collections::HashSet<_> = sixteen.iter().map(|g| signature(g)).collect();
        assert_eq!(distinct.len(), 14);
    }
}
