//! The Lambek particle registry and the quantum-number formulas read off it.
//!
//! Only the charge quaternion, the baryon number `N` and the isospin
//! projection `I_z` are transcribed. Fermion number and electric charge are
//! always recomputed from the charge.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::charge::{electric_charge, fermion_number};
use crate::error::{Error, Result};
use crate::groups::q48_extra_elements;
use crate::quaternion::Quaternion;
use crate::scalar::QuadScalar;
use crate::units::{is_hurwitz_integer, parity_rule, TritQuaternion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Category {
    GaugeBoson,
    Fermion,
    Antifermion,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::GaugeBoson => "gauge-boson",
            Category::Fermion => "fermion",
            Category::Antifermion => "antifermion",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Particle {
    pub name: String,
    pub category: Category,
    pub lambda: Quaternion,
    pub f_nb: BigRational,
    pub z_el: BigRational,
    pub n: BigRational,
    pub i_z: BigRational,
}

impl Particle {
    fn new(
        name: &str,
        category: Category,
        lambda: [i64; 4],
        n: (i64, i64),
        i_z: (i64, i64),
    ) -> Self {
        let [w, x, y, z] = lambda;
        let lambda = Quaternion::from_ints(w, x, y, z);
        Particle {
            name: name.to_string(),
            category,
            f_nb: fermion_number(&lambda).expect("integer charge"),
            z_el: rational(&electric_charge(&lambda)),
            lambda,
            n: BigRational::new(n.0.into(), n.1.into()),
            i_z: BigRational::new(i_z.0.into(), i_z.1.into()),
        }
    }

    /// `N/2 + I_z`.
    pub fn heisenberg_charge(&self) -> BigRational {
        &self.n / BigRational::from_integer(2.into()) + &self.i_z
    }
}

fn rational(s: &QuadScalar) -> BigRational {
    s.as_rational()
        .expect("rational charge has rational quantum numbers")
        .clone()
}

use Category::{Antifermion as AF, Fermion as F, GaugeBoson as GB};

/// (numerator, denominator)
type Frac = (i64, i64);

// name, category, charge (1, i, j, k), N, I_z
#[rustfmt::skip]
const TABLE: [(&str, Category, [i64; 4], Frac, Frac); 28] = [
    ("gamma",   GB, [0, 0, 0, 0],     (0, 1),  (0, 1)),
    ("Z0",      GB, [0, 0, 0, 0],     (0, 1),  (0, 1)),
    ("g_CbarC", GB, [0, 0, 0, 0],     (0, 1),  (0, 1)),
    ("g_CCbar", GB, [0, 0, 0, 0],     (0, 1),  (0, 1)),
    ("W-",      GB, [0, -1, -1, -1],  (0, 1),  (-1, 1)),
    ("W+",      GB, [0, 1, 1, 1],     (0, 1),  (1, 1)),
    ("g_BbarG", GB, [0, 0, 1, -1],    (0, 1),  (0, 1)),
    ("g_GbarR", GB, [0, -1, 0, 1],    (0, 1),  (0, 1)),
    ("g_RbarB", GB, [0, 1, -1, 0],    (0, 1),  (0, 1)),
    ("g_GbarB", GB, [0, 0, -1, 1],    (0, 1),  (0, 1)),
    ("g_RbarG", GB, [0, 1, 0, -1],    (0, 1),  (0, 1)),
    ("g_BbarR", GB, [0, -1, 1, 0],    (0, 1),  (0, 1)),
    ("nu",      F,  [1, 0, 0, 0],     (-1, 1), (1, 2)),
    ("e-",      F,  [1, -1, -1, -1],  (-1, 1), (-1, 2)),
    ("u_R",     F,  [1, 0, 1, 1],     (1, 3),  (1, 2)),
    ("u_B",     F,  [1, 1, 0, 1],     (1, 3),  (1, 2)),
    ("u_G",     F,  [1, 1, 1, 0],     (1, 3),  (1, 2)),
    ("d_R",     F,  [1, -1, 0, 0],    (1, 3),  (-1, 2)),
    ("d_B",     F,  [1, 0, -1, 0],    (1, 3),  (-1, 2)),
    ("d_G",     F,  [1, 0, 0, -1],    (1, 3),  (-1, 2)),
    ("nubar",   AF, [-1, 0, 0, 0],    (1, 1),  (-1, 2)),
    ("e+",      AF, [-1, 1, 1, 1],    (1, 1),  (1, 2)),
    ("ubar_R",  AF, [-1, 0, -1, -1],  (-1, 3), (-1, 2)),
    ("ubar_B",  AF, [-1, -1, 0, -1],  (-1, 3), (-1, 2)),
    ("ubar_G",  AF, [-1, -1, -1, 0],  (-1, 3), (-1, 2)),
    ("dbar_R",  AF, [-1, 1, 0, 0],    (-1, 3), (1, 2)),
    ("dbar_B",  AF, [-1, 0, 1, 0],    (-1, 3), (1, 2)),
    ("dbar_G",  AF, [-1, 0, 0, 1],    (-1, 3), (1, 2)),
];

/// The 28 rows in table order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Registry {
    rows: Vec<Particle>,
}

impl Registry {
    pub fn standard() -> Registry {
        Registry {
            rows: TABLE
                .iter()
                .map(|&(name, cat, lambda, n, i_z)| Particle::new(name, cat, lambda, n, i_z))
                .collect(),
        }
    }

    /// A registry with one row's isospin projection flipped, for exercising
    /// failure paths.
    pub fn corrupted(name: &str) -> Result<Registry> {
        let mut reg = Self::standard();
        let row = reg
            .rows
            .iter_mut()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::UnknownParticle(name.to_string()))?;
        row.i_z = if row.i_z.is_zero() {
            BigRational::from_integer(1.into())
        } else {
            -&row.i_z
        };
        Ok(reg)
    }

    /// A copy with one row's charge replaced; quantum numbers derived from
    /// the charge are recomputed.
    pub fn with_charge(&self, name: &str, lambda: Quaternion) -> Result<Registry> {
        let mut reg = self.clone();
        let row = reg
            .rows
            .iter_mut()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::UnknownParticle(name.to_string()))?;
        row.f_nb = fermion_number(&lambda)?;
        row.z_el = rational(&electric_charge(&lambda));
        row.lambda = lambda;
        Ok(reg)
    }

    pub fn rows(&self) -> &[Particle] {
        &self.rows
    }

    pub fn get(&self, name: &str) -> Result<&Particle> {
        self.rows
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::UnknownParticle(name.to_string()))
    }

    pub fn lambda(&self, name: &str) -> Result<&Quaternion> {
        self.get(name).map(|p| &p.lambda)
    }

    pub fn fermions(&self) -> impl Iterator<Item = &Particle> {
        self.rows.iter().filter(|p| p.category == Category::Fermion)
    }

    /// The row whose charge is the negation of `p`'s. Neutral bosons are
    /// their own antiparticles.
    pub fn antiparticle(&self, p: &Particle) -> Option<&Particle> {
        if p.lambda.is_zero() {
            return self.rows.iter().find(|r| r.name == p.name);
        }
        let target = -&p.lambda;
        let opposite = match p.category {
            Category::Fermion => Category::Antifermion,
            Category::Antifermion => Category::Fermion,
            Category::GaugeBoson => Category::GaugeBoson,
        };
        self.rows
            .iter()
            .find(|r| r.category == opposite && r.lambda == target)
    }

    pub fn has_charge(&self, q: &Quaternion) -> bool {
        self.rows.iter().any(|r| &r.lambda == q)
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::standard()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeisenbergRow {
    pub name: String,
    pub z_el: BigRational,
    pub half_n: BigRational,
    pub i_z: BigRational,
    pub holds: bool,
}

/// `Z_el = N/2 + I_z` for every row. Fails on the first row that disagrees.
pub fn heisenberg_consistency(reg: &Registry) -> Result<Vec<HeisenbergRow>> {
    reg.rows
        .iter()
        .map(|p| {
            let rhs = p.heisenberg_charge();
            if rhs != p.z_el {
                return Err(Error::Inconsistent {
                    row: p.name.clone(),
                    detail: format!("Z_el = {} but N/2 + I_z = {}", p.z_el, rhs),
                });
            }
            Ok(HeisenbergRow {
                name: p.name.clone(),
                z_el: p.z_el.clone(),
                half_n: &p.n / BigRational::from_integer(2.into()),
                i_z: p.i_z.clone(),
                holds: true,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityRow {
    pub name: String,
    pub lambda: Quaternion,
    pub pos_count: u8,
    pub neg_count: u8,
    pub pass: bool,
}

/// The parity rule applied to every nonzero charge in the registry.
pub fn verify_parity_rule(reg: &Registry) -> Vec<ParityRow> {
    reg.rows
        .iter()
        .filter(|p| !p.lambda.is_zero())
        .map(|p| {
            let t = TritQuaternion::from_quaternion(&p.lambda);
            ParityRow {
                name: p.name.clone(),
                lambda: p.lambda.clone(),
                pos_count: t.as_ref().map_or(0, TritQuaternion::pos_count),
                neg_count: t.as_ref().map_or(0, TritQuaternion::neg_count),
                pass: t.as_ref().is_some_and(parity_rule),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Q48Row {
    pub value: Quaternion,
    pub f_nb: QuadScalar,
    pub z_el: QuadScalar,
    pub norm: QuadScalar,
    pub hurwitz: bool,
}

/// The 24 units of Q48 outside Q24 with their exact fermion number and
/// charge. No particle assignment is attempted.
pub fn q48_exploration() -> Vec<Q48Row> {
    let mut rows: Vec<Q48Row> = q48_extra_elements()
        .into_iter()
        .map(|q| Q48Row {
            f_nb: q.scal(),
            z_el: electric_charge(&q),
            norm: q.norm(),
            hurwitz: matches!(is_hurwitz_integer(&q), Ok(true)),
            value: q,
        })
        .collect();
    rows.sort_by_cached_key(|r| r.value.to_string());
    rows
}
