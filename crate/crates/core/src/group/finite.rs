use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::arith;
use crate::error::{HkrError, Result};

use super::perm::Permutation;

pub const DEFAULT_ORDER_CAP: usize = 100_000;

/// Above this order the multiplication table is not materialized.
const TABLE_LIMIT: usize = 4096;

/// Index of an element in [`FiniteGroup::elements`].
pub type Elem = u32;

/// A finite permutation group with its full, lexicographically sorted element
/// list. Index 0 is always the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, Elem>,
    inverses: Vec<Elem>,
    name: Option<String>,
    table: OnceLock<Option<Vec<Elem>>>,
    classes: OnceLock<Vec<ConjugacyClass>>,
}

/// A conjugacy class, stored by element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least member.
    pub representative: Elem,
    /// Sorted member indices.
    pub members: Vec<Elem>,
    pub centralizer_order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl FiniteGroup {
    /// Closure of `generators` with the default order cap.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::generate_capped(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn generate_capped(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(HkrError::MalformedPermutation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        let mut found = Vec::new();
        while let Some(e) = queue.pop_front() {
            for s in &generators {
                let next = e.compose(s);
                if !seen.contains_key(&next) {
                    if seen.len() >= cap {
                        return Err(HkrError::OrderCap { cap });
                    }
                    seen.insert(next.clone(), ());
                    queue.push_back(next);
                }
            }
            found.push(e);
        }
        Ok(Self::from_sorted_elements(degree, generators, found))
    }

    /// Build from an element list known to be closed under composition.
    pub(crate) fn from_sorted_elements(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort();
        elements.dedup();
        let index: HashMap<Permutation, Elem> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as Elem))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        Self {
            degree,
            generators,
            elements,
            index,
            inverses,
            name: None,
            table: OnceLock::new(),
            classes: OnceLock::new(),
        }
    }

    /// Regular representation of an abstract group given by its
    /// multiplication rule on `0..order` (with `0` the identity).
    pub fn from_multiplication(
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
        generators: &[usize],
    ) -> Result<Self> {
        let perms = generators
            .iter()
            .map(|&g| Permutation::from_images((0..order).map(|x| mul(g, x) as u32).collect()))
            .collect::<Result<Vec<_>>>()?;
        Self::generate(order, perms)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> Vec<Elem> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: Elem) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> Elem {
        0
    }

    fn table(&self) -> Option<&Vec<Elem>> {
        self.table
            .get_or_init(|| {
                let n = self.order();
                (n <= TABLE_LIMIT).then(|| self.build_table())
            })
            .as_ref()
    }

    /// Column `b` of the table is filled from column `b'` where `b = b' ∘ s`
    /// for a generator `s`, so only `|G| · #generators` compositions are hashed.
    fn build_table(&self) -> Vec<Elem> {
        let n = self.order();
        let right: Vec<Vec<Elem>> = self
            .generators
            .iter()
            .map(|s| self.elements.iter().map(|e| self.index[&e.compose(s)]).collect())
            .collect();
        let mut t = vec![0 as Elem; n * n];
        let mut done = vec![false; n];
        for a in 0..n {
            t[a * n] = a as Elem;
        }
        done[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(b) = queue.pop_front() {
            for r in &right {
                let c = r[b] as usize;
                if done[c] {
                    continue;
                }
                done[c] = true;
                for a in 0..n {
                    t[a * n + c] = r[t[a * n + b] as usize];
                }
                queue.push_back(c);
            }
        }
        t
    }

    /// Index of `a ∘ b`.
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self.table() {
            Some(t) => t[a as usize * self.order() + b as usize],
            None => self.index[&self.element(a).compose(self.element(b))],
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a as usize]
    }

    /// `g a g⁻¹`.
    #[inline]
    pub fn conj(&self, g: Elem, a: Elem) -> Elem {
        self.mul(self.mul(g, a), self.inv(g))
    }

    #[inline]
    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        let mut base = if e < 0 { self.inv(a) } else { a };
        let mut exp = e.unsigned_abs();
        let mut acc = self.identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> u64 {
        let mut cur = a;
        let mut n = 1;
        while cur != self.identity() {
            cur = self.mul(cur, a);
            n += 1;
        }
        n
    }

    /// Whether the order of `a` is a power of `p`, by repeated `p`-th powering.
    pub fn has_p_power_order(&self, a: Elem, p: u64) -> bool {
        // a p-element has order dividing the p-part of |G|
        let steps = arith::p_power_exponent(arith::p_part(self.order() as u64, p), p).unwrap_or(0);
        let mut cur = a;
        for _ in 0..steps {
            cur = self.pow(cur, p as i64);
        }
        cur == self.identity()
    }

    pub fn p_elements(&self, p: u64) -> Vec<Elem> {
        (0..self.order() as Elem)
            .filter(|&a| self.has_p_power_order(a, p))
            .collect()
    }

    pub fn exponent(&self) -> u64 {
        self.conjugacy_classes()
            .iter()
            .map(|c| self.element_order(c.representative))
            .fold(1, arith::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter().all(|&a| gens.iter().all(|&b| self.commute(a, b)))
    }

    /// Conjugacy classes ordered by size, then least representative.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.classes.get_or_init(|| {
            let n = self.order();
            let gens = self.generator_indices();
            let mut seen = vec![false; n];
            let mut classes = Vec::new();
            for start in 0..n as Elem {
                if seen[start as usize] {
                    continue;
                }
                seen[start as usize] = true;
                let mut members = vec![start];
                let mut i = 0;
                while i < members.len() {
                    let x = members[i];
                    for &g in &gens {
                        let y = self.conj(g, x);
                        if !seen[y as usize] {
                            seen[y as usize] = true;
                            members.push(y);
                        }
                    }
                    i += 1;
                }
                members.sort_unstable();
                classes.push(ConjugacyClass {
                    representative: members[0],
                    centralizer_order: n / members.len(),
                    members,
                });
            }
            classes.sort_by_key(|c| (c.members.len(), c.representative));
            classes
        })
    }

    /// Map from element index to class index.
    pub fn class_lookup(&self) -> Vec<usize> {
        let mut lookup = vec![0; self.order()];
        for (ci, c) in self.conjugacy_classes().iter().enumerate() {
            for &m in &c.members {
                lookup[m as usize] = ci;
            }
        }
        lookup
    }

    /// Indices of `{g : g s = s g for all s}`, sorted.
    pub fn centralizer_indices(&self, set: &[Elem]) -> Vec<Elem> {
        (0..self.order() as Elem)
            .filter(|&g| set.iter().all(|&s| self.commute(g, s)))
            .collect()
    }

    /// The centralizer of a set of permutations as a group in its own right.
    pub fn centralizer(&self, set: &[Permutation]) -> Result<FiniteGroup> {
        let idx = set
            .iter()
            .map(|s| self.index_of(s).ok_or(HkrError::NotInGroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup(&self.centralizer_indices(&idx)))
    }

    /// The subgroup with the given (closed) element set, with a small
    /// generating set chosen greedily.
    pub fn subgroup(&self, members: &[Elem]) -> FiniteGroup {
        let mut generated: Vec<Elem> = vec![self.identity()];
        let mut inside = vec![false; self.order()];
        inside[self.identity() as usize] = true;
        let mut gens: Vec<Elem> = Vec::new();
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        for &m in &sorted {
            if inside[m as usize] {
                continue;
            }
            gens.push(m);
            // re-close under right multiplication by all generators
            let mut i = 0;
            let mut queue = generated.clone();
            while i < queue.len() {
                let x = queue[i];
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !inside[y as usize] {
                        inside[y as usize] = true;
                        generated.push(y);
                        queue.push(y);
                    }
                }
                i += 1;
            }
        }
        debug_assert_eq!(generated.len(), sorted.len(), "member set is not a subgroup");
        let elems = sorted.iter().map(|&i| self.element(i).clone()).collect();
        let gen_perms = gens.iter().map(|&i| self.element(i).clone()).collect();
        FiniteGroup::from_sorted_elements(self.degree, gen_perms, elems)
    }

    /// Embed an element of a subgroup built by [`FiniteGroup::subgroup`] (same degree).
    pub fn translate_from(&self, other: &FiniteGroup, a: Elem) -> Option<Elem> {
        self.index_of(other.element(a))
    }

    /// `Some(p)` when the order is a power of a prime `p` (trivial group: `None`).
    pub fn p_group_prime(&self) -> Option<u64> {
        let n = self.order() as u64;
        let f = arith::prime_factors(n);
        (f.len() == 1).then(|| f[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(c: &[u32], degree: usize) -> Permutation {
        Permutation::from_cycles(degree, &[c.to_vec()]).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::generate(1, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().len(), 1);
        let g0 = FiniteGroup::generate(0, vec![]).unwrap();
        assert_eq!(g0.order(), 1);
    }

    #[test]
    fn symmetric_three() {
        let g = FiniteGroup::generate(3, vec![cyc(&[0, 1], 3), cyc(&[0, 1, 2], 3)]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        for c in g.conjugacy_classes() {
            assert_eq!(c.size() * c.centralizer_order, 6);
        }
        let t = g.centralizer(&[cyc(&[0, 1], 3)]).unwrap();
        assert_eq!(t.order(), 2);
        assert!(!g.is_abelian());
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn cyclic_four() {
        let g = FiniteGroup::generate(4, vec![cyc(&[0, 1, 2, 3], 4)]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.conjugacy_classes().len(), 4);
        assert!(g.is_abelian());
        let all: Vec<Permutation> = g.elements().to_vec();
        assert_eq!(g.centralizer(&all).unwrap().order(), 4);
        assert_eq!(g.centralizer(&[Permutation::identity(4)]).unwrap().order(), 4);
    }

    #[test]
    fn order_cap_and_membership() {
        let gens = vec![cyc(&[0, 1], 5), cyc(&[0, 1, 2, 3, 4], 5)];
        assert_eq!(
            FiniteGroup::generate_capped(5, gens, 100).unwrap_err(),
            HkrError::OrderCap { cap: 100 }
        );
        let g = FiniteGroup::generate(3, vec![cyc(&[0, 1, 2], 3)]).unwrap();
        assert_eq!(
            g.centralizer(&[cyc(&[0, 1], 3)]).unwrap_err(),
            HkrError::NotInGroup
        );
    }

    #[test]
    fn p_power_orders() {
        let g = FiniteGroup::generate(3, vec![cyc(&[0, 1], 3), cyc(&[0, 1, 2], 3)]).unwrap();
        assert_eq!(g.p_elements(2).len(), 4);
        assert_eq!(g.p_elements(3).len(), 3);
        assert_eq!(g.p_elements(5).len(), 1);
    }
}
