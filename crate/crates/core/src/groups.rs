//! Finite groups of unit quaternions: closure, Cayley tables, conjugacy
//! classes and normal ("permutable") subgroups.
//!
//! The four named groups are built once and cached:
//!
//! | group | order | field  | construction                                   |
//! |-------|-------|--------|------------------------------------------------|
//! | Q8    | 8     | Q      | `±1, ±i, ±j, ±k`                               |
//! | Q24   | 24    | Q      | the Hurwitz units                              |
//! | Q48   | 48    | Q(√2)  | Q24 and `(±e_a ± e_b)/√2`                      |
//! | Q120  | 120   | Q(√5)  | Q24 and even permutations of `(0,±1,±φ,±1/φ)/2` |
//!
//! The cyclic and dihedral series are not constructed.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::scalar::{Field, QuadScalar};
use crate::units::hurwitz_units;

/// A finite multiplicatively closed set of unit quaternions.
#[derive(Clone, Debug)]
pub struct QGroup {
    name: String,
    field: Field,
    elements: Vec<Quaternion>,
    index: HashMap<Quaternion, usize>,
    cayley: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    identity: usize,
}

impl PartialEq for QGroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for QGroup {}

impl QGroup {
    /// Validates and indexes an explicit element list. Elements are
    /// deduplicated and sorted by canonical text.
    pub fn from_elements(
        name: impl Into<String>,
        field: Field,
        elements: impl IntoIterator<Item = Quaternion>,
    ) -> Result<QGroup> {
        let name = name.into();
        let mut elements: Vec<Quaternion> = elements
            .into_iter()
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        sort_canonical(&mut elements);

        let one = QuadScalar::one();
        for e in &elements {
            if e.field() != Field::Rational && e.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.radicand(),
                    right: e.field().radicand(),
                });
            }
            if e.norm() != one {
                return Err(Error::Construction(format!("{name}: {e} is not a unit")));
            }
        }
        let index: HashMap<Quaternion, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();

        let mut cayley = Vec::with_capacity(elements.len());
        for a in &elements {
            let mut row = Vec::with_capacity(elements.len());
            for b in &elements {
                let p = a.try_mul(b)?;
                let &k = index.get(&p).ok_or_else(|| {
                    Error::Construction(format!("{name}: {a}·{b} = {p} escapes the set"))
                })?;
                row.push(k);
            }
            cayley.push(row);
        }
        Self::assemble(name, field, elements, index, cayley)
    }

    fn assemble(
        name: String,
        field: Field,
        elements: Vec<Quaternion>,
        index: HashMap<Quaternion, usize>,
        cayley: Vec<Vec<usize>>,
    ) -> Result<QGroup> {
        let identity = *index
            .get(&Quaternion::one())
            .ok_or_else(|| Error::Construction(format!("{name}: identity missing")))?;
        let inverses = elements
            .iter()
            .map(|e| {
                index
                    .get(&e.conj())
                    .copied()
                    .ok_or_else(|| Error::Construction(format!("{name}: inverse of {e} missing")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QGroup {
            name,
            field,
            elements,
            index,
            cayley,
            inverses,
            identity,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Quaternion] {
        &self.elements
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn index_of(&self, q: &Quaternion) -> Option<usize> {
        self.index.get(q).copied()
    }

    pub fn contains(&self, q: &Quaternion) -> bool {
        self.index.contains_key(q)
    }

    /// Every row and column of the Cayley table is a permutation.
    pub fn is_latin_square(&self) -> bool {
        let n = self.order();
        fn is_perm(n: usize, mut it: impl Iterator<Item = usize>) -> bool {
            let mut seen = vec![false; n];
            it.all(|k| k < n && !std::mem::replace(&mut seen[k], true))
        }
        (0..n).all(|r| is_perm(n, self.cayley[r].iter().copied()))
            && (0..n).all(|c| is_perm(n, (0..n).map(|r| self.cayley[r][c])))
    }

    /// `g·x·g⁻¹` by index.
    pub fn conjugate_index(&self, g: usize, x: usize) -> usize {
        self.cayley[self.cayley[g][x]][self.inverses[g]]
    }

    /// The subgroup on a set of indices that is already known to be closed,
    /// with its Cayley table read off the parent.
    fn sub_from_indices(&self, name: String, mut indices: Vec<usize>) -> Result<QGroup> {
        indices.sort_unstable();
        let local: HashMap<usize, usize> =
            indices.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let mut cayley = Vec::with_capacity(indices.len());
        for &a in &indices {
            let row = indices
                .iter()
                .map(|&b| {
                    local.get(&self.cayley[a][b]).copied().ok_or_else(|| {
                        Error::Construction(format!("{name}: index set is not closed"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            cayley.push(row);
        }
        let elements: Vec<Quaternion> = indices.iter().map(|&i| self.elements[i].clone()).collect();
        let field = elements
            .iter()
            .fold(Field::Rational, |f, e| f.join(e.field()).unwrap_or(f));
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Self::assemble(name, field, elements, index, cayley)
    }
}

fn sort_canonical(elements: &mut [Quaternion]) {
    elements.sort_by_cached_key(|e| e.to_string());
}

/// Smallest group containing the seeds. Fails once more than `cap` elements
/// have been discovered.
pub fn closure(seed: &[Quaternion], cap: usize) -> Result<QGroup> {
    if cap == 0 {
        return Err(Error::Domain("closure cap must be at least 1".into()));
    }
    let one = QuadScalar::one();
    let mut field = Field::Rational;
    for s in seed {
        field = field.join(s.field())?;
        if s.norm() != one {
            return Err(Error::Domain(format!("seed {s} is not a unit")));
        }
    }
    let mut gens: Vec<Quaternion> = Vec::new();
    for s in seed {
        for g in [s.clone(), s.conj()] {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
    }

    let mut found: HashSet<Quaternion> = HashSet::from([Quaternion::one()]);
    let mut order = vec![Quaternion::one()];
    let mut queue = VecDeque::from([Quaternion::one()]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.try_mul(g)?;
            if found.insert(y.clone()) {
                if found.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    QGroup::from_elements(format!("<{} generators>", seed.len()), field, order)
}

fn named(name: &str, field: Field, elements: Vec<Quaternion>, order: usize) -> QGroup {
    let g = QGroup::from_elements(name, field, elements)
        .unwrap_or_else(|e| panic!("built-in group {name} failed validation: {e}"));
    assert_eq!(g.order(), order, "built-in group {name} has wrong order");
    g
}

pub fn group_q8() -> &'static QGroup {
    static G: OnceLock<QGroup> = OnceLock::new();
    G.get_or_init(|| {
        let els = hurwitz_units()[..8]
            .iter()
            .map(|u| u.value().clone())
            .collect();
        named("Q8", Field::Rational, els, 8)
    })
}

pub fn group_q24() -> &'static QGroup {
    static G: OnceLock<QGroup> = OnceLock::new();
    G.get_or_init(|| {
        let els = hurwitz_units().iter().map(|u| u.value().clone()).collect();
        named("Q24", Field::Rational, els, 24)
    })
}

pub fn group_q48() -> &'static QGroup {
    static G: OnceLock<QGroup> = OnceLock::new();
    G.get_or_init(|| named("Q48", Field::Sqrt2, q48_elements(), 48))
}

pub fn group_q120() -> &'static QGroup {
    static G: OnceLock<QGroup> = OnceLock::new();
    G.get_or_init(|| named("Q120", Field::Sqrt5, q120_elements(), 120))
}

/// Looks up `q8`, `q24`, `q48` or `q120` (case-insensitive).
pub fn group_by_name(name: &str) -> Result<&'static QGroup> {
    match name.to_ascii_lowercase().as_str() {
        "q8" => Ok(group_q8()),
        "q24" => Ok(group_q24()),
        "q48" => Ok(group_q48()),
        "q120" => Ok(group_q120()),
        _ => Err(Error::UnknownGroup(name.to_string())),
    }
}

fn quat(c: [QuadScalar; 4]) -> Quaternion {
    let [w, x, y, z] = c;
    Quaternion::new(w, x, y, z).expect("components share a field")
}

/// The 24 units `(±e_a ± e_b)/√2` for `a < b`.
pub fn q48_extra_elements() -> Vec<Quaternion> {
    let half_root2 = QuadScalar::surd(0, 1, 1, 2, Field::Sqrt2).expect("valid surd");
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in a + 1..4 {
            for sa in [1i64, -1] {
                for sb in [1i64, -1] {
                    let mut c: [QuadScalar; 4] = Default::default();
                    c[a] = &half_root2 * &QuadScalar::int(sa);
                    c[b] = &half_root2 * &QuadScalar::int(sb);
                    out.push(quat(c));
                }
            }
        }
    }
    out
}

fn q48_elements() -> Vec<Quaternion> {
    let mut els: Vec<Quaternion> = hurwitz_units().iter().map(|u| u.value().clone()).collect();
    els.extend(q48_extra_elements());
    els
}

fn is_even(p: &[usize; 4]) -> bool {
    let inversions = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct: HashSet<_> = p.iter().collect();
                    if distinct.len() == 4 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// The 96 icosians outside Q24: even coordinate permutations of
/// `(0, ±1, ±φ, ±φ⁻¹)/2` with `φ = (1+√5)/2`.
pub fn q120_extra_elements() -> Vec<Quaternion> {
    let half = QuadScalar::ratio(1, 2);
    let half_phi = QuadScalar::surd(1, 4, 1, 4, Field::Sqrt5).expect("valid surd");
    let half_phi_inv = QuadScalar::surd(-1, 4, 1, 4, Field::Sqrt5).expect("valid surd");
    let base = [QuadScalar::zero(), half, half_phi, half_phi_inv];

    let mut out = Vec::with_capacity(96);
    for p in permutations4().into_iter().filter(is_even) {
        for signs in 0..8u8 {
            let mut c: [QuadScalar; 4] = Default::default();
            for (src, &dst) in p.iter().enumerate() {
                let neg = src > 0 && signs & (1 << (src - 1)) != 0;
                c[dst] = if neg { -&base[src] } else { base[src].clone() };
            }
            out.push(quat(c));
        }
    }
    out
}

fn q120_elements() -> Vec<Quaternion> {
    let mut els: Vec<Quaternion> = hurwitz_units().iter().map(|u| u.value().clone()).collect();
    els.extend(q120_extra_elements());
    els
}

/// Every element of `h` lies in `g`. Rational groups embed into either
/// extension; √2 and √5 groups are incomparable.
pub fn is_subgroup(h: &QGroup, g: &QGroup) -> Result<bool> {
    h.field.join(g.field)?;
    Ok(h.elements.iter().all(|e| g.contains(e))
        && h.cayley.iter().flatten().all(|&k| k < h.order()))
}

/// Normality: `x·h·x⁻¹ ∈ h` for every `x ∈ g`, `h ∈ h`.
pub fn is_permutable(h: &QGroup, g: &QGroup) -> Result<bool> {
    if !is_subgroup(h, g)? {
        return Err(Error::NotASubgroup {
            sub: h.name.clone(),
            group: g.name.clone(),
        });
    }
    let members: HashSet<usize> = h
        .elements
        .iter()
        .map(|e| g.index_of(e).expect("checked subgroup"))
        .collect();
    Ok((0..g.order()).all(|x| {
        members
            .iter()
            .all(|&y| members.contains(&g.conjugate_index(x, y)))
    }))
}

/// Conjugacy classes as sorted index sets, ordered by smallest member.
pub fn conjugacy_classes(g: &QGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..n)
            .map(|h| g.conjugate_index(h, x))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        class.sort_unstable();
        for &c in &class {
            assigned[c] = true;
        }
        classes.push(class);
    }
    classes
}

/// Every normal subgroup, ordered by size then by elements. Candidates are
/// unions of conjugacy classes containing the identity whose size divides
/// the group order; each candidate is kept iff it is closed.
pub fn normal_subgroups(g: &QGroup) -> Vec<QGroup> {
    let classes = conjugacy_classes(g);
    let (identity_class, others): (Vec<_>, Vec<_>) =
        classes.into_iter().partition(|c| c.contains(&g.identity));
    let base = identity_class
        .into_iter()
        .next()
        .expect("identity has a class");
    assert!(others.len() < 24, "too many classes for union enumeration");

    let mut found: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let size = base.len()
            + others
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, c)| c.len())
                .sum::<usize>();
        if !g.order().is_multiple_of(size) {
            continue;
        }
        let mut members = vec![false; g.order()];
        let mut set = base.clone();
        for (b, c) in others.iter().enumerate() {
            if mask & (1 << b) != 0 {
                set.extend(c);
            }
        }
        for &m in &set {
            members[m] = true;
        }
        let closed = set
            .iter()
            .all(|&a| set.iter().all(|&b| members[g.cayley[a][b]]));
        if closed {
            set.sort_unstable();
            found.push(set);
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
        .into_iter()
        .map(|set| {
            let name = if set.len() == g.order() {
                g.name.clone()
            } else {
                format!("{}/N{}", g.name, set.len())
            };
            g.sub_from_indices(name, set)
                .expect("class unions that pass the closure test are subgroups")
        })
        .collect()
}

/// JSON export of a group: elements, Cayley table and conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupExport {
    pub name: String,
    pub order: usize,
    pub radicand: u32,
    pub elements: Vec<Quaternion>,
    pub cayley: Vec<Vec<usize>>,
    pub classes: Vec<Vec<usize>>,
}

impl From<&QGroup> for GroupExport {
    fn from(g: &QGroup) -> Self {
        GroupExport {
            name: g.name.clone(),
            order: g.order(),
            radicand: g.field.radicand(),
            elements: g.elements.clone(),
            cayley: g.cayley.clone(),
            classes: conjugacy_classes(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    fn class_sizes(g: &QGroup) -> Vec<usize> {
        let mut s: Vec<_> = conjugacy_classes(g).iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    #[test]
    fn closure_examples() {
        let g = closure(&[Quaternion::i(), Quaternion::j()], 1000).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g, *group_q8());

        let trivial = closure(&[Quaternion::one()], 10).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.elements(), &[Quaternion::one()]);

        let h1 = Quaternion::from_ratios([1, 1, 1, 1], 2);
        let g = closure(&[h1, Quaternion::i()], 1000).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g, *group_q24());
    }

    #[test]
    fn closure_cap_and_preconditions() {
        let h1 = Quaternion::from_ratios([1, 1, 1, 1], 2);
        assert_eq!(
            closure(&[h1, Quaternion::i()], 10),
            Err(Error::CapExceeded { cap: 10 })
        );
        assert!(closure(&[q("(1,1,0,0)")], 100).is_err());
        assert!(closure(&[Quaternion::one()], 0).is_err());
        // (3/5 + 4/5 i) has infinite order
        assert_eq!(
            closure(&[q("(3/5,4/5,0,0)")], 50),
            Err(Error::CapExceeded { cap: 50 })
        );
    }

    #[test]
    fn closure_is_idempotent() {
        for g in [group_q8(), group_q24(), group_q48()] {
            let again = closure(g.elements(), 200).unwrap();
            assert_eq!(again.elements(), g.elements());
        }
    }

    #[test]
    fn named_orders() {
        assert_eq!(group_q8().order(), 8);
        assert_eq!(group_q24().order(), 24);
        assert_eq!(group_q48().order(), 48);
        assert_eq!(group_q120().order(), 120);
        let units: HashSet<_> = hurwitz_units().iter().map(|u| u.value().clone()).collect();
        let q24: HashSet<_> = group_q24().elements().iter().cloned().collect();
        assert_eq!(units, q24);
    }

    #[test]
    fn canonical_element_order() {
        let texts: Vec<String> = group_q8()
            .elements()
            .iter()
            .map(|e| e.to_string())
            .collect();
        let mut sorted = texts.clone();
        sorted.sort();
        assert_eq!(texts, sorted);
    }

    #[test]
    fn latin_squares_and_inverses() {
        for g in [group_q8(), group_q24(), group_q48(), group_q120()] {
            assert!(g.is_latin_square(), "{}", g.name());
            for (i, e) in g.elements().iter().enumerate() {
                let inv = &g.elements()[g.inverse_index(i)];
                assert_eq!(inv, &e.conj());
                assert_eq!(inv * e, Quaternion::one());
            }
        }
    }

    #[test]
    fn extension_elements_are_irrational() {
        for e in q48_extra_elements() {
            assert_eq!(e.field(), Field::Sqrt2);
        }
        let extra = q120_extra_elements();
        assert_eq!(extra.len(), 96);
        for e in &extra {
            assert_eq!(e.field(), Field::Sqrt5);
        }
    }

    #[test]
    fn subgroup_relations() {
        assert!(is_subgroup(group_q8(), group_q24()).unwrap());
        assert!(is_subgroup(group_q24(), group_q48()).unwrap());
        assert!(!is_subgroup(group_q24(), group_q8()).unwrap());
        assert!(is_subgroup(group_q24(), group_q120()).unwrap());
        assert!(matches!(
            is_subgroup(group_q48(), group_q120()),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn permutability() {
        assert!(is_permutable(group_q8(), group_q24()).unwrap());
        assert!(is_permutable(group_q8(), group_q48()).unwrap());
        assert!(is_permutable(group_q24(), group_q48()).unwrap());
        assert!(!is_permutable(group_q24(), group_q120()).unwrap());
        let trivial = closure(&[Quaternion::one()], 1).unwrap();
        for g in [group_q8(), group_q24(), group_q48(), group_q120()] {
            assert!(is_permutable(&trivial, g).unwrap());
        }
        assert!(matches!(
            is_permutable(group_q24(), group_q8()),
            Err(Error::NotASubgroup { .. })
        ));
        // <i> is normal in Q8 but not in Q24
        let ci = closure(&[Quaternion::i()], 8).unwrap();
        assert!(is_permutable(&ci, group_q8()).unwrap());
        assert!(!is_permutable(&ci, group_q24()).unwrap());
    }

    #[test]
    fn class_size_examples() {
        assert_eq!(class_sizes(group_q8()), vec![1, 1, 2, 2, 2]);
        assert_eq!(
            class_sizes(group_q120()),
            vec![1, 1, 12, 12, 12, 12, 20, 20, 30]
        );
        for g in [group_q8(), group_q24(), group_q48(), group_q120()] {
            let classes = conjugacy_classes(g);
            assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
            assert!(classes.contains(&vec![g.identity_index()]));
            assert!(classes.iter().all(|c| g.order() % c.len() == 0));
        }
    }

    #[test]
    fn normal_subgroup_examples() {
        let orders = |g: &QGroup| {
            normal_subgroups(g)
                .iter()
                .map(QGroup::order)
                .collect::<Vec<_>>()
        };
        assert_eq!(orders(group_q120()), vec![1, 2, 120]);
        assert_eq!(orders(group_q8()), vec![1, 2, 4, 4, 4, 8]);
        assert_eq!(orders(group_q24()), vec![1, 2, 8, 24]);
        assert_eq!(orders(group_q48()), vec![1, 2, 8, 24, 48]);
        let trivial = closure(&[Quaternion::one()], 1).unwrap();
        let subs = normal_subgroups(&trivial);
        assert_eq!(subs, vec![trivial]);

        let pm1 = &normal_subgroups(group_q120())[1];
        let expect: HashSet<_> = [Quaternion::one(), -Quaternion::one()].into();
        assert_eq!(
            pm1.elements().iter().cloned().collect::<HashSet<_>>(),
            expect
        );
        assert!(pm1.is_latin_square());
    }

    #[test]
    fn group_lookup() {
        assert_eq!(group_by_name("Q48").unwrap().order(), 48);
        assert!(matches!(group_by_name("q16"), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn export_round_trips_through_json() {
        let e = GroupExport::from(group_q8());
        let s = serde_json::to_string(&e).unwrap();
        let back: GroupExport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
    }
}
