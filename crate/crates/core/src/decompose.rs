//! Exhaustive searches expressing Lambek charges through Hurwitz units.
//!
//! Every search is a brute-force scan over the 24 × 24 unit pairs, so each
//! result is exhaustive by construction.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::particles::{Category, Registry};
use crate::quaternion::Quaternion;
use crate::scalar::Field;
use crate::units::{hurwitz_units, unit_by_name, UnitAtom};

fn require_rational(q: &Quaternion) -> Result<()> {
    if q.field() != Field::Rational {
        return Err(Error::FieldMismatch {
            left: 1,
            right: q.field().radicand(),
        });
    }
    Ok(())
}

/// Unordered unit pairs `{a, b}` with `a + b = target`; each pair listed
/// once with `a` no later than `b` in table order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumDecomposition {
    pub target: Quaternion,
    pub pairs: Vec<(&'static UnitAtom, &'static UnitAtom)>,
}

pub fn sum_decompositions(target: &Quaternion) -> Result<SumDecomposition> {
    require_rational(target)?;
    let units = hurwitz_units();
    let mut pairs = Vec::new();
    for (ia, a) in units.iter().enumerate() {
        for b in &units[ia..] {
            if &(a.value() + b.value()) == target {
                pairs.push((a, b));
            }
        }
    }
    Ok(SumDecomposition {
        target: target.clone(),
        pairs,
    })
}

/// Ordered unit pairs `(a, b)` with `a − b = target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffDecomposition {
    pub target: Quaternion,
    pub pairs: Vec<(&'static UnitAtom, &'static UnitAtom)>,
}

pub fn diff_decompositions(target: &Quaternion) -> Result<DiffDecomposition> {
    require_rational(target)?;
    let units = hurwitz_units();
    let pairs = units
        .iter()
        .flat_map(|a| units.iter().map(move |b| (a, b)))
        .filter(|(a, b)| &(a.value() - b.value()) == target)
        .collect();
    Ok(DiffDecomposition {
        target: target.clone(),
        pairs,
    })
}

/// All ordered `(H_n, H_m)` with `H_n + H_m = up` and `H_n + conj(H_m) = down`.
pub fn doublet_search(
    up: &Quaternion,
    down: &Quaternion,
) -> Result<Vec<(&'static UnitAtom, &'static UnitAtom)>> {
    require_rational(up)?;
    require_rational(down)?;
    let units = hurwitz_units();
    Ok(units
        .iter()
        .flat_map(|n| units.iter().map(move |m| (n, m)))
        .filter(|(n, m)| &(n.value() + m.value()) == up && &(n.value() + &m.value().conj()) == down)
        .collect())
}

/// One signed, possibly conjugated, unit in a [`HurwitzForm`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormTerm {
    pub negative: bool,
    pub unit: &'static UnitAtom,
    pub conj: bool,
}

impl FormTerm {
    pub fn value(&self) -> Quaternion {
        let v = if self.conj {
            self.unit.value().conj()
        } else {
            self.unit.value().clone()
        };
        if self.negative {
            -v
        } else {
            v
        }
    }

    /// The unit this term names, carrying the term's sign.
    pub fn signed_unit(&self) -> &'static UnitAtom {
        if self.negative {
            crate::units::unit_by_value(&-self.unit.value()).expect("units closed under negation")
        } else {
            self.unit
        }
    }
}

/// A charge written as a signed sum of Hurwitz units, e.g. `+h5+conj(h1)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HurwitzForm {
    pub terms: Vec<FormTerm>,
}

impl HurwitzForm {
    fn term(mut self, negative: bool, name: &str, conj: bool) -> Self {
        let unit = unit_by_name(name).expect("known unit name");
        self.terms.push(FormTerm {
            negative,
            unit,
            conj,
        });
        self
    }

    pub fn plus(self, unit: &UnitAtom) -> Self {
        self.term(false, unit.name(), false)
    }

    pub fn minus(self, unit: &UnitAtom) -> Self {
        self.term(true, unit.name(), false)
    }

    pub fn plus_conj(self, unit: &UnitAtom) -> Self {
        self.term(false, unit.name(), true)
    }

    pub fn negated(&self) -> Self {
        HurwitzForm {
            terms: self
                .terms
                .iter()
                .map(|t| FormTerm {
                    negative: !t.negative,
                    ..t.clone()
                })
                .collect(),
        }
    }

    pub fn value(&self) -> Quaternion {
        self.terms
            .iter()
            .fold(Quaternion::zero(), |acc, t| acc + t.value())
    }
}

impl fmt::Display for HurwitzForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            f.write_str(if t.negative { "-" } else { "+" })?;
            if t.conj {
                write!(f, "conj({})", t.unit)?;
            } else {
                write!(f, "{}", t.unit)?;
            }
        }
        Ok(())
    }
}

impl Serialize for HurwitzForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubletAssignment {
    pub up_name: String,
    pub down_name: String,
    pub n: &'static UnitAtom,
    pub m: &'static UnitAtom,
}

impl DoubletAssignment {
    pub fn up_form(&self) -> HurwitzForm {
        HurwitzForm::default().plus(self.n).plus(self.m)
    }

    pub fn down_form(&self) -> HurwitzForm {
        HurwitzForm::default().plus(self.n).plus_conj(self.m)
    }
}

pub const DOUBLETS: [(&str, &str); 4] =
    [("nu", "e-"), ("u_R", "d_R"), ("u_B", "d_B"), ("u_G", "d_G")];

/// The isospin-raising partner expected in every doublet, and the `H_n`
/// expected per doublet in [`DOUBLETS`] order.
const EXPECTED_M: &str = "h1";
const EXPECTED_N: [&str; 4] = ["h8", "h5", "h3", "h2"];

/// Gluons written with h4, h6 and h7; their antigluons are the negations.
const GLUON_UNITS: [&str; 3] = ["h4", "h6", "h7"];
pub const GLUONS: [(&str, &str); 3] = [
    ("g_BbarG", "g_GbarB"),
    ("g_GbarR", "g_RbarG"),
    ("g_RbarB", "g_BbarR"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitFormRow {
    pub name: String,
    pub category: Category,
    pub lambda: Quaternion,
    pub form: Option<HurwitzForm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitForms {
    pub rows: Vec<UnitFormRow>,
    pub doublets: Vec<DoubletAssignment>,
    /// W± and gluon charges with every difference decomposition.
    pub boson_differences: Vec<(String, DiffDecomposition)>,
}

/// Runs the doublet search for the four isospin doublets, requiring a
/// unique answer each time, and assembles the unit form of every row.
pub fn unit_form_assignments(reg: &Registry) -> Result<UnitForms> {
    let mut doublets = Vec::new();
    for (idx, (up, down)) in DOUBLETS.iter().enumerate() {
        let found = doublet_search(reg.lambda(up)?, reg.lambda(down)?)?;
        if found.len() != 1 {
            return Err(Error::Uniqueness {
                up: up.to_string(),
                down: down.to_string(),
                found: found.len(),
            });
        }
        let (n, m) = found[0];
        if n.name() != EXPECTED_N[idx] || m.name() != EXPECTED_M {
            return Err(Error::IdentityFailed(format!(
                "doublet ({up}, {down}) resolved to ({n}, {m})"
            )));
        }
        doublets.push(DoubletAssignment {
            up_name: up.to_string(),
            down_name: down.to_string(),
            n,
            m,
        });
    }

    let mut forms: Vec<(String, HurwitzForm)> = Vec::new();
    for d in &doublets {
        let up = if d.up_name == "nu" {
            // h8 + h1 = 1
            HurwitzForm::default().plus(unit_by_name("1").expect("unit 1"))
        } else {
            d.up_form()
        };
        let down = d.down_form();
        for (name, form) in [(&d.up_name, up), (&d.down_name, down)] {
            let anti = reg
                .antiparticle(reg.get(name)?)
                .ok_or_else(|| Error::UnknownParticle(format!("antiparticle of {name}")))?;
            forms.push((anti.name.clone(), form.negated()));
            forms.push((name.clone(), form));
        }
    }

    let ijk = ["i", "j", "k"].map(|n| unit_by_name(n).expect("imaginary unit"));
    let w_plus = ijk.iter().fold(HurwitzForm::default(), |f, u| f.plus(u));
    forms.push(("W-".into(), w_plus.negated()));
    forms.push(("W+".into(), w_plus));

    let mut boson_differences = Vec::new();
    for w in ["W+", "W-"] {
        boson_differences.push((w.to_string(), diff_decompositions(reg.lambda(w)?)?));
    }
    for (gluon, anti) in GLUONS {
        let diffs = diff_decompositions(reg.lambda(gluon)?)?;
        let chosen = diffs
            .pairs
            .iter()
            .find(|(a, b)| GLUON_UNITS.contains(&a.name()) && GLUON_UNITS.contains(&b.name()))
            .ok_or_else(|| Error::IdentityFailed(format!("no h4/h6/h7 difference for {gluon}")))?;
        let form = HurwitzForm::default().plus(chosen.0).minus(chosen.1);
        forms.push((anti.to_string(), form.negated()));
        forms.push((gluon.to_string(), form));
        boson_differences.push((gluon.to_string(), diffs));
        boson_differences.push((anti.to_string(), diff_decompositions(reg.lambda(anti)?)?));
    }

    let rows = reg
        .rows()
        .iter()
        .map(|p| {
            let form = forms
                .iter()
                .find(|(n, _)| n == &p.name)
                .map(|(_, f)| f.clone());
            if let Some(f) = &form {
                if f.value() != p.lambda {
                    return Err(Error::IdentityFailed(format!(
                        "{}: {f} = {} but the charge is {}",
                        p.name,
                        f.value(),
                        p.lambda
                    )));
                }
            }
            Ok(UnitFormRow {
                name: p.name.clone(),
                category: p.category,
                lambda: p.lambda.clone(),
                form,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(UnitForms {
        rows,
        doublets,
        boson_differences,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exclusion {
    pub form: HurwitzForm,
    pub value: Quaternion,
    pub conjugate_of: String,
    pub in_registry: bool,
}

/// Doublet sums built from h4, h6 and h7 land exactly on the conjugates of
/// quark charges, none of which is itself a particle.
pub fn conjugate_exclusions(reg: &Registry) -> Result<Vec<Exclusion>> {
    let h1 = unit_by_name("h1").expect("h1");
    let cases = [
        ("h4", false, "d_R"),
        ("h4", true, "u_R"),
        ("h6", false, "d_B"),
        ("h6", true, "u_B"),
        ("h7", false, "d_G"),
        ("h7", true, "u_G"),
    ];
    cases
        .iter()
        .map(|&(n, conj, target)| {
            let base = HurwitzForm::default().plus(unit_by_name(n).expect("unit"));
            let form = if conj {
                base.plus_conj(h1)
            } else {
                base.plus(h1)
            };
            let value = form.value();
            let expected = reg.lambda(target)?.conj();
            if value != expected {
                return Err(Error::IdentityFailed(format!(
                    "{form} = {value}, expected conj({target}) = {expected}"
                )));
            }
            let in_registry = reg.has_charge(&value);
            if in_registry {
                return Err(Error::IdentityFailed(format!(
                    "conj({target}) = {value} is a registered charge"
                )));
            }
            Ok(Exclusion {
                form,
                value,
                conjugate_of: target.to_string(),
                in_registry,
            })
        })
        .collect()
}

/// Units named (with sign) by a set of forms, in table order.
pub fn units_used<'a>(forms: impl IntoIterator<Item = &'a HurwitzForm>) -> Vec<&'static UnitAtom> {
    let used: BTreeSet<usize> = forms
        .into_iter()
        .flat_map(|f| f.terms.iter())
        .map(|t| crate::units::unit_index(t.signed_unit().value()).expect("term names a unit"))
        .collect();
    used.into_iter().map(|i| &hurwitz_units()[i]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub used: Vec<&'static UnitAtom>,
    pub missing: Vec<&'static UnitAtom>,
}

/// Which Hurwitz units the unit forms use; all 24 must appear.
pub fn unit_coverage_report(table: &UnitForms) -> Result<Coverage> {
    let used = units_used(table.rows.iter().filter_map(|r| r.form.as_ref()));
    let missing: Vec<&'static UnitAtom> = hurwitz_units()
        .iter()
        .filter(|u| !used.contains(u))
        .collect();
    if !missing.is_empty() {
        return Err(Error::CoverageGap(
            missing.iter().map(|u| u.name().to_string()).collect(),
        ));
    }
    Ok(Coverage { used, missing })
}
