//! Finite `G`-sets and their `n`-fold inertia `Fix_n(X)`: the `G`-set of
//! pairs `(α, x)` with `α ∈ Hom(Z_p^n, G)` and `x` fixed by the image of `α`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::commuting::{self, CommutingTuple, GLMatrix};
use crate::error::{HkrError, Result};
use crate::group::{named_group, Elem, FiniteGroup};

/// Largest `|G| · |X|` for which the full action table is materialized.
pub const GSET_ACTION_CAP: u64 = 20_000_000;

/// Largest `|Λ_k^n × C(im α)|` checked exhaustively by [`evaluation_hom_check`].
pub const EVALUATION_DOMAIN_CAP: u64 = 4096;

/// A finite set with a left action of a permutation group.
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    labels: Vec<String>,
    /// `action[g * len + x] = g · x`
    action: Vec<u32>,
}

impl PartialEq for GSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.labels == other.labels && self.action == other.action
    }
}

fn check_size(group: &FiniteGroup, points: usize) -> Result<()> {
    let work = group.order() as u64 * points as u64;
    if work > GSET_ACTION_CAP {
        return Err(HkrError::SizeCap {
            what: format!(
                "action table of a {points}-point G-set for a group of order {}",
                group.order()
            ),
            cap: GSET_ACTION_CAP,
        });
    }
    Ok(())
}

impl GSet {
    /// Build from the action of each generator of `group` (in generator
    /// order), given as the image of every point. The action is extended to
    /// all of `G` and the extension is checked to be well defined.
    pub fn from_generator_images(
        group: Arc<FiniteGroup>,
        labels: Vec<String>,
        images: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let size = labels.len();
        if labels.iter().collect::<HashSet<_>>().len() != size {
            return Err(HkrError::InvalidGSet("duplicate point labels".into()));
        }
        let gens = group.generator_indices();
        if images.len() != gens.len() {
            return Err(HkrError::InvalidGSet(format!(
                "{} generator actions for {} generators",
                images.len(),
                gens.len()
            )));
        }
        for img in &images {
            let mut hit = vec![false; size];
            if img.len() != size
                || img
                    .iter()
                    .any(|&y| y >= size || std::mem::replace(&mut hit[y], true))
            {
                return Err(HkrError::InvalidGSet(
                    "generator image is not a permutation of the points".into(),
                ));
            }
        }
        check_size(&group, size)?;
        let order = group.order();
        let mut maps: Vec<Option<Vec<u32>>> = vec![None; order];
        maps[group.identity() as usize] = Some((0..size as u32).collect());
        let mut queue = vec![group.identity()];
        let mut i = 0;
        while i < queue.len() {
            let h = queue[i];
            i += 1;
            for (&s, img) in gens.iter().zip(&images) {
                let sh = group.mul(s, h);
                let composed: Vec<u32> = maps[h as usize]
                    .as_ref()
                    .expect("visited")
                    .iter()
                    .map(|&x| img[x as usize] as u32)
                    .collect();
                match &maps[sh as usize] {
                    Some(existing) if *existing != composed => {
                        return Err(HkrError::InvalidGSet(
                            "generator actions do not satisfy the group relations".into(),
                        ));
                    }
                    Some(_) => {}
                    None => {
                        maps[sh as usize] = Some(composed);
                        queue.push(sh);
                    }
                }
            }
        }
        let action = maps
            .into_iter()
            .flat_map(|m| m.expect("group is generated"))
            .collect();
        Ok(Self {
            group,
            labels,
            action,
        })
    }

    fn from_fn(
        group: Arc<FiniteGroup>,
        labels: Vec<String>,
        act: impl Fn(Elem, usize) -> usize,
    ) -> Result<Self> {
        check_size(&group, labels.len())?;
        let size = labels.len();
        let mut action = Vec::with_capacity(group.order() * size);
        for g in 0..group.order() as Elem {
            action.extend((0..size).map(|x| act(g, x) as u32));
        }
        Ok(Self {
            group,
            labels,
            action,
        })
    }

    /// The one-point `G`-set.
    pub fn point(group: Arc<FiniteGroup>) -> Self {
        Self::from_fn(group, vec!["*".into()], |_, _| 0).expect("one point")
    }

    /// `G` acting on itself by left multiplication.
    pub fn regular(group: Arc<FiniteGroup>) -> Result<Self> {
        Self::cosets(group, &[])
    }

    /// Left cosets `G/H` for `H` generated by `subgroup_gens`, labelled by
    /// the least element of each coset.
    pub fn cosets(group: Arc<FiniteGroup>, subgroup_gens: &[Elem]) -> Result<Self> {
        let order = group.order();
        if subgroup_gens.iter().any(|&h| h as usize >= order) {
            return Err(HkrError::NotInGroup);
        }
        let mut members = vec![group.identity()];
        let mut inside = vec![false; order];
        inside[group.identity() as usize] = true;
        let mut i = 0;
        while i < members.len() {
            for &h in subgroup_gens {
                let y = group.mul(members[i], h);
                if !inside[y as usize] {
                    inside[y as usize] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        let mut coset_of = vec![usize::MAX; order];
        let mut reps = Vec::new();
        for g in 0..order as Elem {
            if coset_of[g as usize] != usize::MAX {
                continue;
            }
            for &h in &members {
                coset_of[group.mul(g, h) as usize] = reps.len();
            }
            reps.push(g);
        }
        let labels = reps
            .iter()
            .map(|&g| format!("{}H", group.element(g).cycle_notation()))
            .collect();
        let g2 = group.clone();
        Self::from_fn(group, labels, move |g, x| coset_of[g2.mul(g, reps[x]) as usize])
    }

    /// `X ⊔ Y`, labels prefixed by `0.` and `1.`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let a = self.len();
        let labels = self
            .labels
            .iter()
            .map(|l| format!("0.{l}"))
            .chain(other.labels.iter().map(|l| format!("1.{l}")))
            .collect();
        Self::from_fn(self.group.clone(), labels, |g, x| {
            if x < a {
                self.act(g, x)
            } else {
                a + other.act(g, x - a)
            }
        })
    }

    /// `X × Y` with the diagonal action, points ordered lexicographically.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let b = other.len();
        let mut labels = Vec::with_capacity(self.len() * b);
        for l in &self.labels {
            for m in &other.labels {
                labels.push(format!("({l},{m})"));
            }
        }
        Self::from_fn(self.group.clone(), labels, |g, x| {
            self.act(g, x / b) * b + other.act(g, x % b)
        })
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) {
            Ok(())
        } else {
            Err(HkrError::InvalidGSet("G-sets over different groups".into()))
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `g · x`.
    #[inline]
    pub fn act(&self, g: Elem, x: usize) -> usize {
        self.action[g as usize * self.len() + x] as usize
    }

    /// Orbits, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let gens = self.group.generator_indices();
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                for &s in &gens {
                    let y = self.act(s, orbit[i]);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Elements fixing `x`, sorted.
    pub fn stabilizer(&self, x: usize) -> Vec<Elem> {
        (0..self.group.order() as Elem)
            .filter(|&g| self.act(g, x) == x)
            .collect()
    }

    /// Points fixed by every element of `set`.
    pub fn fixed_points(&self, set: &[Elem]) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| set.iter().all(|&g| self.act(g, x) == x))
            .collect()
    }

    /// Whether `f` (point images into `other`) commutes with the actions.
    pub fn is_equivariant_map(&self, other: &Self, f: &[usize]) -> bool {
        f.len() == self.len()
            && Arc::ptr_eq(&self.group, &other.group)
            && self
                .group
                .generator_indices()
                .iter()
                .all(|&s| (0..self.len()).all(|x| f[self.act(s, x)] == other.act(s, f[x])))
    }

    /// Parse `{"group": spec, "points": [labels], "action": ...}` where
    /// `action` is either an array with one entry per generator (in the
    /// group's generator order) or an object keyed by generator cycle
    /// notation; each entry lists the images of `points`, in order, by label.
    pub fn from_json(text: &str) -> Result<Self> {
        let bad = |m: &str| HkrError::InvalidGSet(m.to_string());
        let v: Value = serde_json::from_str(text).map_err(|e| HkrError::InvalidGSet(e.to_string()))?;
        let spec = v["group"]
            .as_str()
            .ok_or_else(|| bad("`group` must be a string"))?;
        let group = Arc::new(named_group(spec)?);
        let label = |x: &Value| -> Result<String> {
            match x {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                _ => Err(bad("labels must be strings or numbers")),
            }
        };
        let labels = v["points"]
            .as_array()
            .ok_or_else(|| bad("`points` must be an array"))?
            .iter()
            .map(label)
            .collect::<Result<Vec<_>>>()?;
        let position: HashMap<&str, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let to_images = |entry: &Value| -> Result<Vec<usize>> {
            entry
                .as_array()
                .ok_or_else(|| bad("each generator action must be an array of labels"))?
                .iter()
                .map(|x| {
                    let l = label(x)?;
                    position
                        .get(l.as_str())
                        .copied()
                        .ok_or_else(|| HkrError::InvalidGSet(format!("unknown point `{l}`")))
                })
                .collect()
        };
        let images = match &v["action"] {
            Value::Array(entries) => entries.iter().map(to_images).collect::<Result<Vec<_>>>()?,
            Value::Object(map) => {
                let mut out = Vec::new();
                for g in group.generators() {
                    let key = g.cycle_notation();
                    let entry = map.get(&key).ok_or_else(|| {
                        HkrError::InvalidGSet(format!("no action given for generator {key}"))
                    })?;
                    out.push(to_images(entry)?);
                }
                if map.len() != out.len() {
                    return Err(bad("action keys must be exactly the generators"));
                }
                out
            }
            _ => return Err(bad("`action` must be an array or an object")),
        };
        Self::from_generator_images(group, labels, images)
    }

    /// JSON in the [`GSet::from_json`] format, action keyed by generator.
    pub fn to_json(&self) -> Value {
        let mut action = serde_json::Map::new();
        for (s, perm) in self.group.generator_indices().iter().zip(self.group.generators()) {
            let images: Vec<&str> = (0..self.len())
                .map(|x| self.labels[self.act(*s, x)].as_str())
                .collect();
            action.insert(perm.cycle_notation(), json!(images));
        }
        json!({
            "group": self.group.name().unwrap_or(""),
            "points": self.labels,
            "action": action,
        })
    }
}

/// A point `(α, x)` of `Fix_n(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FixPoint {
    pub alpha: CommutingTuple,
    pub point: usize,
}

/// `Fix_n(X)` with its points in canonical `(α, x)` order and the action
/// `g · (α, x) = (gαg⁻¹, g · x)`.
#[derive(Clone, Debug)]
pub struct FixSet {
    p: u64,
    n: usize,
    points: Vec<FixPoint>,
    index: HashMap<FixPoint, usize>,
    gset: GSet,
}

impl FixSet {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[FixPoint] {
        &self.points
    }

    pub fn index_of(&self, point: &FixPoint) -> Option<usize> {
        self.index.get(point).copied()
    }

    pub fn gset(&self) -> &GSet {
        &self.gset
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn fix_n(x: &GSet, p: u64, n: usize) -> Result<FixSet> {
    let group = x.group().clone();
    let tuples = commuting::hom_tuples(&group, p, n)?;
    let mut points = Vec::new();
    for alpha in tuples {
        for pt in x.fixed_points(&alpha.entries) {
            points.push(FixPoint {
                alpha: alpha.clone(),
                point: pt,
            });
        }
    }
    let index: HashMap<FixPoint, usize> = points.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
    let labels = points
        .iter()
        .map(|q| {
            format!(
                "[{}] {}",
                q.alpha.cycle_notation(&group).join(", "),
                x.labels()[q.point]
            )
        })
        .collect();
    let gset = GSet::from_fn(group.clone(), labels, |g, i| {
        let q = &points[i];
        let image = FixPoint {
            alpha: q.alpha.conjugate(&group, g),
            point: x.act(g, q.point),
        };
        index[&image]
    })?;
    Ok(FixSet {
        p,
        n,
        points,
        index,
        gset,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusOrbit {
    pub size: usize,
    pub stabilizer_order: usize,
    /// Entries of `α` at the orbit's least point, in cycle notation.
    pub alpha_rep: Vec<String>,
    pub point_rep: String,
}

/// The `G`-orbits of `Fix_n(X)`, ordered by least point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub orbits: Vec<CensusOrbit>,
}

impl Census {
    pub fn count(&self) -> usize {
        self.orbits.len()
    }
}

pub fn orbit_census(x: &GSet, p: u64, n: usize) -> Result<Census> {
    let fix = fix_n(x, p, n)?;
    let group = x.group();
    let orbits = fix
        .gset()
        .orbits()
        .into_iter()
        .map(|orbit| {
            let q = &fix.points()[orbit[0]];
            CensusOrbit {
                size: orbit.len(),
                stabilizer_order: group.order() / orbit.len(),
                alpha_rep: q.alpha.cycle_notation(group),
                point_rep: x.labels()[q.point].clone(),
            }
        })
        .collect();
    Ok(Census { orbits })
}

/// `Σ_{G/H ⊆ X} |Hom(Z_p^n, H)/H|`, one term per orbit of `X` with `H` the
/// stabilizer of its least point.
pub fn orbit_sum_prediction(x: &GSet, p: u64, n: usize) -> Result<usize> {
    let group = x.group();
    x.orbits()
        .iter()
        .map(|orbit| commuting::rank_prediction(&group.subgroup(&x.stabilizer(orbit[0])), p, n))
        .sum()
}

/// Outcome of [`iterate_fix_check`]: `bijection[i]` is the index in
/// `Fix_n(X)` of point `i` of `Fix_1(Fix_{n-1}(X))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IterateCheck {
    pub holds: bool,
    pub bijection: Vec<usize>,
}

/// Compare `Fix_1(Fix_{n-1}(X))` with `Fix_n(X)` through
/// `(α_n, ((α_1, …, α_{n-1}), x)) ↦ ((α_1, …, α_n), x)`.
pub fn iterate_fix_check(x: &GSet, p: u64, n: usize) -> Result<IterateCheck> {
    if n < 2 {
        return Err(HkrError::InvalidArgument("iterated Fix needs n >= 2".into()));
    }
    let inner = fix_n(x, p, n - 1)?;
    let outer = fix_n(inner.gset(), p, 1)?;
    let target = fix_n(x, p, n)?;
    let mut bijection = Vec::with_capacity(outer.len());
    let mut holds = outer.len() == target.len();
    for q in outer.points() {
        let y = &inner.points()[q.point];
        let mut entries = y.alpha.entries.clone();
        entries.extend(&q.alpha.entries);
        let image = FixPoint {
            alpha: CommutingTuple::new(entries),
            point: y.point,
        };
        match target.index_of(&image) {
            Some(i) => bijection.push(i),
            None => {
                holds = false;
                bijection.push(usize::MAX);
            }
        }
    }
    if holds {
        let mut hit = vec![false; target.len()];
        holds = bijection.iter().all(|&i| !std::mem::replace(&mut hit[i], true))
            && outer.gset().is_equivariant_map(target.gset(), &bijection);
    }
    Ok(IterateCheck { holds, bijection })
}

/// The bijection of `Fix_n(X)` induced by `σ ∈ GL_n(Z/p^k)`:
/// `(α, x) ↦ (α ∘ σᵀ, x)`. Precomposing with the transpose makes this a
/// left action, `gl_on_fix(σ) ∘ gl_on_fix(τ) = gl_on_fix(στ)`.
pub fn gl_on_fix(fix: &FixSet, sigma: &GLMatrix) -> Result<Vec<usize>> {
    if sigma.p() != fix.p() || sigma.rank() != fix.n() {
        return Err(HkrError::InvalidArgument(format!(
            "expected a {n}x{n} matrix over Z/{p}^k",
            n = fix.n(),
            p = fix.p()
        )));
    }
    let group = fix.gset().group();
    commuting::check_level(group, fix.p(), sigma.level())?;
    let t = sigma.transpose();
    fix.points()
        .iter()
        .map(|q| {
            let image = FixPoint {
                alpha: t.precompose(group, &q.alpha),
                point: q.point,
            };
            fix.index_of(&image)
                .ok_or_else(|| HkrError::Consistency("precomposition left Fix_n(X)".into()))
        })
        .collect()
}

/// Checks, for `σ, τ` ranging over a generating set of `GL_n(Z/p^k)` and the
/// identity, that each `gl_on_fix(σ)` is a `G`-equivariant bijection fixing
/// the image sets, and that `gl_on_fix(σ) ∘ gl_on_fix(τ) = gl_on_fix(στ)`.
pub fn gl_functoriality_check(fix: &FixSet, k: u32) -> Result<bool> {
    let mut mats = vec![GLMatrix::identity(fix.p(), k, fix.n())];
    mats.extend(commuting::gl_generators(fix.p(), k, fix.n())?);
    let maps = mats
        .iter()
        .map(|m| gl_on_fix(fix, m))
        .collect::<Result<Vec<_>>>()?;
    let group = fix.gset().group();
    for f in &maps {
        let mut hit = vec![false; f.len()];
        if f.iter().any(|&i| std::mem::replace(&mut hit[i], true))
            || !fix.gset().is_equivariant_map(fix.gset(), f)
        {
            return Ok(false);
        }
        for (i, &j) in f.iter().enumerate() {
            let (a, b) = (&fix.points()[i], &fix.points()[j]);
            if a.point != b.point || image_set(group, &a.alpha) != image_set(group, &b.alpha) {
                return Ok(false);
            }
        }
    }
    for (s, fs) in mats.iter().zip(&maps) {
        for (t, ft) in mats.iter().zip(&maps) {
            let composed: Vec<usize> = ft.iter().map(|&i| fs[i]).collect();
            if composed != gl_on_fix(fix, &s.mul(t))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The subgroup generated by the entries of `α`, as a sorted element list.
fn image_set(group: &FiniteGroup, alpha: &CommutingTuple) -> Vec<Elem> {
    let mut members = vec![group.identity()];
    let mut inside: HashSet<Elem> = members.iter().copied().collect();
    let mut i = 0;
    while i < members.len() {
        for &a in &alpha.entries {
            let y = group.mul(members[i], a);
            if inside.insert(y) {
                members.push(y);
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

/// Exhaustively checks that `Λ_k^n × C(im α) → G`, `(l, c) ↦ α(l) · c`, is a
/// homomorphism, `Λ_k = Z/p^k`.
pub fn evaluation_hom_check(group: &FiniteGroup, p: u64, alpha: &CommutingTuple, k: u32) -> Result<bool> {
    if !alpha.is_valid(group, p) {
        return Err(HkrError::InvalidArgument(
            "tuple entries must commute and have p-power order".into(),
        ));
    }
    let q = p
        .checked_pow(k)
        .ok_or_else(|| HkrError::InvalidArgument("level too large".into()))?;
    if alpha
        .entries
        .iter()
        .any(|&a| group.pow(a, q as i64) != group.identity())
    {
        return Err(HkrError::LevelTooSmall { p, k });
    }
    let n = alpha.rank();
    let centralizer = group.centralizer_indices(&alpha.entries);
    let lattice = q.checked_pow(n as u32).unwrap_or(u64::MAX);
    let domain = lattice.saturating_mul(centralizer.len() as u64);
    if domain > EVALUATION_DOMAIN_CAP {
        return Err(HkrError::SizeCap {
            what: "evaluation map domain".into(),
            cap: EVALUATION_DOMAIN_CAP,
        });
    }
    let decode = |mut code: u64| -> Vec<u64> {
        (0..n)
            .map(|_| {
                let d = code % q;
                code /= q;
                d
            })
            .collect()
    };
    let ls: Vec<Vec<u64>> = (0..lattice).map(decode).collect();
    let values: Vec<Elem> = ls.iter().map(|l| alpha.evaluate(group, l)).collect();
    for (i, l) in ls.iter().enumerate() {
        for (j, m) in ls.iter().enumerate() {
            let sum: Vec<u64> = l.iter().zip(m).map(|(a, b)| (a + b) % q).collect();
            let at_sum = alpha.evaluate(group, &sum);
            for &c in &centralizer {
                for &d in &centralizer {
                    let lhs = group.mul(at_sum, group.mul(c, d));
                    let rhs = group.mul(group.mul(values[i], c), group.mul(values[j], d));
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Counts behind [`loops_pgroup_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopsReport {
    pub p: u64,
    pub n: usize,
    /// `|Hom(Z^n, G)|`: all commuting `n`-tuples.
    pub hom_z: usize,
    /// `|Hom(Z_p^n, G)|`: commuting `n`-tuples of `p`-power-order elements.
    pub hom_zp: usize,
    pub classes_z: usize,
    pub classes_zp: usize,
    pub holds: bool,
}

fn conjugation_orbit_count(group: &FiniteGroup, tuples: &[CommutingTuple]) -> usize {
    let mut seen: HashSet<CommutingTuple> = HashSet::new();
    let mut count = 0;
    for t in tuples {
        if seen.contains(t) {
            continue;
        }
        count += 1;
        for g in 0..group.order() as Elem {
            seen.insert(t.conjugate(group, g));
        }
    }
    count
}

/// For a `p`-group `G`, compares `Hom(Z^n, G)` with `Hom(Z_p^n, G)` and their
/// conjugation quotients. The trivial group is treated as a `2`-group.
pub fn loops_pgroup_check(group: &FiniteGroup, n: usize) -> Result<LoopsReport> {
    let p = match group.p_group_prime() {
        Some(p) => p,
        None if group.order() == 1 => 2,
        None => return Err(HkrError::NotPGroup { order: group.order() }),
    };
    let all: Vec<Elem> = (0..group.order() as Elem).collect();
    let z = commuting::commuting_tuples_from(group, &all, n, commuting::DEFAULT_TUPLE_WORK_CAP)?;
    let zp = commuting::hom_tuples(group, p, n)?;
    let classes_z = conjugation_orbit_count(group, &z);
    let classes_zp = conjugation_orbit_count(group, &zp);
    Ok(LoopsReport {
        p,
        n,
        hom_z: z.len(),
        hom_zp: zp.len(),
        classes_z,
        classes_zp,
        holds: z == zp && classes_z == classes_zp,
    })
}
