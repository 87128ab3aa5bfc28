//! Hurwitz integers, the 24 Hurwitz units, and the 81 trit-quaternions.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::charge::electric_charge;
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::scalar::Field;

/// One of the 24 Hurwitz units together with its canonical name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitAtom {
    name: &'static str,
    value: Quaternion,
}

impl UnitAtom {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn value(&self) -> &Quaternion {
        &self.value
    }
}

impl fmt::Display for UnitAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

const HAMILTON: [(&str, [i64; 4]); 8] = [
    ("1", [1, 0, 0, 0]),
    ("-1", [-1, 0, 0, 0]),
    ("i", [0, 1, 0, 0]),
    ("-i", [0, -1, 0, 0]),
    ("j", [0, 0, 1, 0]),
    ("-j", [0, 0, -1, 0]),
    ("k", [0, 0, 0, 1]),
    ("-k", [0, 0, 0, -1]),
];

// Doubled coordinates of h1..h8; sign pattern of (x, y, z) counts down in
// binary with + before -.
const HALF: [(&str, [i64; 4]); 8] = [
    ("h1", [1, 1, 1, 1]),
    ("h2", [1, 1, 1, -1]),
    ("h3", [1, 1, -1, 1]),
    ("h4", [1, 1, -1, -1]),
    ("h5", [1, -1, 1, 1]),
    ("h6", [1, -1, 1, -1]),
    ("h7", [1, -1, -1, 1]),
    ("h8", [1, -1, -1, -1]),
];

const NEG_HALF: [&str; 8] = ["-h8", "-h7", "-h6", "-h5", "-h4", "-h3", "-h2", "-h1"];

/// The 24 Hurwitz units in table order: `±1, ±i, ±j, ±k`, then `h1..h8`,
/// then `-h8..-h1`.
pub fn hurwitz_units() -> &'static [UnitAtom] {
    static UNITS: OnceLock<Vec<UnitAtom>> = OnceLock::new();
    UNITS.get_or_init(|| {
        let mut out: Vec<UnitAtom> = HAMILTON
            .iter()
            .map(|&(name, [w, x, y, z])| UnitAtom {
                name,
                value: Quaternion::from_ints(w, x, y, z),
            })
            .collect();
        out.extend(HALF.iter().map(|&(name, c)| UnitAtom {
            name,
            value: Quaternion::from_ratios(c, 2),
        }));
        out.extend(NEG_HALF.iter().enumerate().map(|(n, &name)| UnitAtom {
            name,
            value: -Quaternion::from_ratios(HALF[7 - n].1, 2),
        }));
        out
    })
}

/// `±1, ±i, ±j, ±k`, the first eight entries of [`hurwitz_units`].
pub fn hamilton_units() -> &'static [UnitAtom] {
    &hurwitz_units()[..8]
}

pub fn unit_by_name(name: &str) -> Option<&'static UnitAtom> {
    hurwitz_units().iter().find(|u| u.name == name)
}

pub fn unit_index(value: &Quaternion) -> Option<usize> {
    hurwitz_units().iter().position(|u| &u.value == value)
}

pub fn unit_by_value(value: &Quaternion) -> Option<&'static UnitAtom> {
    unit_index(value).map(|i| &hurwitz_units()[i])
}

/// All components integers, or all odd multiples of 1/2.
pub fn is_hurwitz_integer(q: &Quaternion) -> Result<bool> {
    if q.field() != Field::Rational {
        return Err(Error::Domain(format!(
            "Hurwitz integers are rational quaternions; {q} has irrational components"
        )));
    }
    let c = q.components();
    Ok(c.iter().all(|s| s.is_integer()) || c.iter().all(|s| s.is_half_odd()))
}

/// Quaternion with every component in {-1, 0, +1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TritQuaternion {
    value: Quaternion,
    trits: [i8; 4],
    pos_count: u8,
    neg_count: u8,
}

impl TritQuaternion {
    pub fn new(trits: [i8; 4]) -> Result<Self> {
        if trits.iter().any(|t| !(-1..=1).contains(t)) {
            return Err(Error::Domain(format!("{trits:?} is not a trit pattern")));
        }
        let [w, x, y, z] = trits.map(i64::from);
        Ok(TritQuaternion {
            value: Quaternion::from_ints(w, x, y, z),
            trits,
            pos_count: trits.iter().filter(|&&t| t > 0).count() as u8,
            neg_count: trits.iter().filter(|&&t| t < 0).count() as u8,
        })
    }

    /// `None` unless every component is -1, 0 or +1.
    pub fn from_quaternion(q: &Quaternion) -> Option<Self> {
        let mut trits = [0i8; 4];
        for (t, c) in trits.iter_mut().zip(q.components()) {
            *t = match c.to_string().as_str() {
                "-1" => -1,
                "0" => 0,
                "1" => 1,
                _ => return None,
            };
        }
        Self::new(trits).ok()
    }

    pub fn value(&self) -> &Quaternion {
        &self.value
    }

    pub fn trits(&self) -> [i8; 4] {
        self.trits
    }

    pub fn pos_count(&self) -> u8 {
        self.pos_count
    }

    pub fn neg_count(&self) -> u8 {
        self.neg_count
    }

    pub fn negate(&self) -> TritQuaternion {
        Self::new(self.trits.map(|t| -t)).expect("negated trits stay in range")
    }

    pub fn conj(&self) -> TritQuaternion {
        let [w, x, y, z] = self.trits;
        Self::new([w, -x, -y, -z]).expect("conjugated trits stay in range")
    }

    pub fn is_real(&self) -> bool {
        self.trits[1..].iter().all(|&t| t == 0)
    }
}

/// All 81 trit-quaternions, lexicographic over (w, x, y, z) with -1 < 0 < 1.
pub fn trit_quaternions() -> Vec<TritQuaternion> {
    const T: [i8; 3] = [-1, 0, 1];
    let mut out = Vec::with_capacity(81);
    for w in T {
        for x in T {
            for y in T {
                for z in T {
                    out.push(TritQuaternion::new([w, x, y, z]).expect("trits in range"));
                }
            }
        }
    }
    out
}

/// Positive entries number zero or an odd count, and likewise negatives.
pub fn parity_rule(t: &TritQuaternion) -> bool {
    let ok = |n: u8| matches!(n, 0 | 1 | 3);
    ok(t.pos_count) && ok(t.neg_count)
}

pub fn parity_survivors() -> Vec<TritQuaternion> {
    trit_quaternions().into_iter().filter(parity_rule).collect()
}

pub fn parity_survivor_count() -> usize {
    parity_survivors().len()
}

/// Partition under `q ~ conj(q)`, classes in order of first appearance.
pub fn conjugation_classes(items: &[TritQuaternion]) -> Vec<Vec<TritQuaternion>> {
    let mut seen = HashSet::new();
    let mut classes = Vec::new();
    for t in items {
        if !seen.insert(t.clone()) {
            continue;
        }
        let mut class = vec![t.clone()];
        let c = t.conj();
        if c != *t && items.contains(&c) {
            seen.insert(c.clone());
            class.push(c);
        }
        classes.push(class);
    }
    classes
}

/// Export row for unit lists and survivor reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitRow {
    pub name: String,
    pub value: Quaternion,
    pub f_nb: crate::scalar::QuadScalar,
    pub z_el: crate::scalar::QuadScalar,
}

impl UnitRow {
    pub fn new(name: impl Into<String>, value: &Quaternion) -> Self {
        UnitRow {
            name: name.into(),
            value: value.clone(),
            f_nb: value.scal(),
            z_el: electric_charge(value),
        }
    }
}

pub fn unit_rows() -> Vec<UnitRow> {
    hurwitz_units()
        .iter()
        .map(|u| UnitRow::new(u.name, &u.value))
        .collect()
}

/// Survivor rows, named by their compact quaternion text.
pub fn survivor_rows() -> Vec<UnitRow> {
    parity_survivors()
        .iter()
        .map(|t| UnitRow::new(t.value.to_compact_string(), &t.value))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QuadScalar;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    #[test]
    fn hurwitz_predicate_examples() {
        assert!(is_hurwitz_integer(&q("(1,-1,0,0)")).unwrap());
        assert!(is_hurwitz_integer(&q("(1/2,1/2,1/2,1/2)")).unwrap());
        assert!(!is_hurwitz_integer(&q("(1/2,0,0,0)")).unwrap());
        assert!(!is_hurwitz_integer(&q("(1/4,1/4,1/4,1/4)")).unwrap());
        assert!(matches!(
            is_hurwitz_integer(&q("(1/2*sqrt(2),1/2*sqrt(2),0,0)")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn twenty_four_units() {
        let units = hurwitz_units();
        assert_eq!(units.len(), 24);
        let names: HashSet<_> = units.iter().map(|u| u.name).collect();
        let values: HashSet<_> = units.iter().map(|u| u.value.clone()).collect();
        assert_eq!(names.len(), 24);
        assert_eq!(values.len(), 24);
        for u in units {
            assert_eq!(u.value.norm(), QuadScalar::one(), "{}", u.name);
            assert!(is_hurwitz_integer(&u.value).unwrap());
        }
        assert_eq!(unit_by_name("h2").unwrap().value, q("(1/2,1/2,1/2,-1/2)"));
        assert_eq!(
            unit_by_name("-h3").unwrap().value,
            q("(-1/2,-1/2,1/2,-1/2)")
        );
    }

    #[test]
    fn table_order() {
        let names: Vec<_> = hurwitz_units().iter().map(|u| u.name).collect();
        assert_eq!(
            &names[..9],
            &["1", "-1", "i", "-i", "j", "-j", "k", "-k", "h1"]
        );
        assert_eq!(names[15], "h8");
        assert_eq!(names[16], "-h8");
        assert_eq!(names[23], "-h1");
    }

    #[test]
    fn hamilton_subset() {
        let h = hamilton_units();
        assert_eq!(h.len(), 8);
        assert!(h.iter().any(|u| u.name == "-k"));
        assert!(h.iter().all(|u| u.value.w().is_integer()));
    }

    #[test]
    fn units_closed_under_conj_and_negation() {
        for u in hurwitz_units() {
            assert!(unit_by_value(&u.value.conj()).is_some());
            assert!(unit_by_value(&-&u.value).is_some());
        }
        assert_eq!(
            unit_by_value(&unit_by_name("h1").unwrap().value.conj())
                .unwrap()
                .name,
            "h8"
        );
    }

    #[test]
    fn units_are_exactly_norm_one_hurwitz_integers() {
        // every Hurwitz integer with doubled coordinates in [-2, 2]
        let mut found = HashSet::new();
        for w in -2..=2i64 {
            for x in -2..=2i64 {
                for y in -2..=2i64 {
                    for z in -2..=2i64 {
                        let v = Quaternion::from_ratios([w, x, y, z], 2);
                        if is_hurwitz_integer(&v).unwrap() && v.norm() == QuadScalar::one() {
                            found.insert(v);
                        }
                    }
                }
            }
        }
        let units: HashSet<_> = hurwitz_units().iter().map(|u| u.value.clone()).collect();
        assert_eq!(found, units);
    }

    #[test]
    fn trit_enumeration() {
        let all = trit_quaternions();
        assert_eq!(all.len(), 81);
        assert_eq!(all[0].trits(), [-1, -1, -1, -1]);
        assert_eq!(all[40].trits(), [0, 0, 0, 0]);
        assert_eq!(all[80].trits(), [1, 1, 1, 1]);
        for t in &all {
            assert_eq!(TritQuaternion::from_quaternion(t.value()).as_ref(), Some(t));
        }
    }

    #[test]
    fn parity_examples() {
        let e = TritQuaternion::new([1, -1, -1, -1]).unwrap();
        assert_eq!((e.pos_count(), e.neg_count()), (1, 3));
        assert!(parity_rule(&e));
        assert!(parity_rule(&TritQuaternion::new([0, 0, 0, 0]).unwrap()));
        assert!(!parity_rule(&TritQuaternion::new([1, 1, 0, 0]).unwrap()));
    }

    #[test]
    fn parity_symmetric_under_negation() {
        for t in trit_quaternions() {
            assert_eq!(parity_rule(&t), parity_rule(&t.negate()));
        }
        let survivors: HashSet<_> = parity_survivors().into_iter().collect();
        assert!(survivors.iter().all(|t| survivors.contains(&t.negate())));
    }

    #[test]
    fn conjugation_class_shapes() {
        let classes = conjugation_classes(&trit_quaternions());
        let one = TritQuaternion::new([1, 0, 0, 0]).unwrap();
        let c = classes.iter().find(|c| c.contains(&one)).unwrap();
        assert_eq!(c.len(), 1);
        let d_r = TritQuaternion::new([1, -1, 0, 0]).unwrap();
        let c = classes.iter().find(|c| c.contains(&d_r)).unwrap();
        let expect: HashSet<_> = [d_r.clone(), TritQuaternion::new([1, 1, 0, 0]).unwrap()].into();
        assert_eq!(c.iter().cloned().collect::<HashSet<_>>(), expect);
        for c in &classes {
            assert_eq!(c.len() == 1, c[0].is_real());
        }
    }

    #[test]
    fn conjugation_classes_respect_subset() {
        // conj partner outside the input list leaves a singleton
        let items = vec![TritQuaternion::new([1, 1, 0, 0]).unwrap()];
        assert_eq!(conjugation_classes(&items).len(), 1);
    }
}
