//! Interaction vertices and additive conservation of the Lambek charge.
//!
//! A vertex conserves charge when the incoming charges minus the outgoing
//! charges sum to the zero quaternion.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::particles::Registry;
use crate::quaternion::Quaternion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    In,
    Out,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leg {
    pub particle: String,
    pub orientation: Orientation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: String,
    pub legs: Vec<Leg>,
}

impl Vertex {
    pub fn new(label: impl Into<String>, incoming: &[&str], outgoing: &[&str]) -> Vertex {
        let leg = |o| {
            move |p: &&str| Leg {
                particle: p.to_string(),
                orientation: o,
            }
        };
        Vertex {
            label: label.into(),
            legs: incoming
                .iter()
                .map(leg(Orientation::In))
                .chain(outgoing.iter().map(leg(Orientation::Out)))
                .collect(),
        }
    }

    /// Parses `a + b -> c + d`. Either side may be `0` for no particles; the
    /// `+` separators must be surrounded by whitespace since names such as
    /// `e+` contain the character.
    pub fn parse(s: &str) -> Result<Vertex> {
        let (lhs, rhs) = s
            .split_once("->")
            .ok_or_else(|| Error::parse(0, "expected `->` between incoming and outgoing legs"))?;
        let side = |part: &str| -> Vec<String> {
            part.split_whitespace()
                .filter(|t| *t != "+" && *t != "0")
                .map(String::from)
                .collect()
        };
        let (inc, out) = (side(lhs), side(rhs));
        let inc: Vec<&str> = inc.iter().map(String::as_str).collect();
        let out: Vec<&str> = out.iter().map(String::as_str).collect();
        let v = Vertex::new(s.trim(), &inc, &out);
        if v.legs.len() < 2 {
            return Err(Error::parse(0, "a vertex needs at least two legs"));
        }
        Ok(v)
    }

    /// The same vertex with every leg's orientation reversed.
    pub fn flipped(&self) -> Vertex {
        Vertex {
            label: format!("flip({})", self.label),
            legs: self
                .legs
                .iter()
                .map(|l| Leg {
                    particle: l.particle.clone(),
                    orientation: match l.orientation {
                        Orientation::In => Orientation::Out,
                        Orientation::Out => Orientation::In,
                    },
                })
                .collect(),
        }
    }

    /// Moves leg `idx` to the other side.
    pub fn crossed(&self, idx: usize) -> Vertex {
        let mut v = self.clone();
        let l = &mut v.legs[idx];
        l.orientation = match l.orientation {
            Orientation::In => Orientation::Out,
            Orientation::Out => Orientation::In,
        };
        v
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |o| {
            let names: Vec<&str> = self
                .legs
                .iter()
                .filter(|l| l.orientation == o)
                .map(|l| l.particle.as_str())
                .collect();
            if names.is_empty() {
                "0".to_string()
            } else {
                names.join(" + ")
            }
        };
        write!(f, "{} -> {}", side(Orientation::In), side(Orientation::Out))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCheck {
    pub label: String,
    pub legs: String,
    pub residual: Quaternion,
    pub pass: bool,
}

/// Sums incoming charges minus outgoing charges.
pub fn check_vertex(reg: &Registry, v: &Vertex) -> Result<VertexCheck> {
    let mut residual = Quaternion::zero();
    for leg in &v.legs {
        let q = reg.lambda(&leg.particle)?;
        residual = match leg.orientation {
            Orientation::In => residual.try_add(q)?,
            Orientation::Out => residual.try_sub(q)?,
        };
    }
    Ok(VertexCheck {
        label: v.label.clone(),
        legs: v.to_string(),
        pass: residual.is_zero(),
        residual,
    })
}

const COLORS: [&str; 3] = ["R", "B", "G"];

/// Tree-level three-leg vertices of the first generation.
pub fn vertex_catalog() -> Vec<Vertex> {
    let mut out = vec![Vertex::new(
        "lepton charged current",
        &["W-"],
        &["e-", "nubar"],
    )];

    for c in COLORS {
        let u = format!("u_{c}");
        let dbar = format!("dbar_{c}");
        out.push(Vertex::new(
            format!("quark charged current {c}"),
            &["W+"],
            &[&u, &dbar],
        ));
    }

    // g_{C̄C'} -> q_{C'} + q̄_C
    for flavor in ["u", "d"] {
        for from in COLORS {
            for to in COLORS.iter().filter(|&&t| t != from) {
                let gluon = format!("g_{from}bar{to}");
                let q = format!("{flavor}_{to}");
                let qbar = format!("{flavor}bar_{from}");
                out.push(Vertex::new(
                    format!("gluon {gluon} on {flavor}"),
                    &[&gluon],
                    &[&q, &qbar],
                ));
            }
        }
    }

    let charged = ["e-", "u_R", "u_B", "u_G", "d_R", "d_B", "d_G"];
    for f in charged {
        out.push(Vertex::new(
            format!("{f} pair to photon"),
            &[f, &antiname(f)],
            &["gamma"],
        ));
    }
    for f in std::iter::once("nu").chain(charged) {
        out.push(Vertex::new(
            format!("{f} pair to Z0"),
            &[f, &antiname(f)],
            &["Z0"],
        ));
    }
    for f in &charged[1..] {
        for g in ["g_CbarC", "g_CCbar"] {
            out.push(Vertex::new(
                format!("{f} pair to {g}"),
                &[f, &antiname(f)],
                &[g],
            ));
        }
    }

    out.push(Vertex::new("W pair to photon", &["W+", "W-"], &["gamma"]));
    out.push(Vertex::new(
        "triple gluon",
        &["g_BbarG", "g_GbarR", "g_RbarB"],
        &[],
    ));
    out.push(Vertex::new(
        "triple antigluon",
        &["g_GbarB", "g_RbarG", "g_BbarR"],
        &[],
    ));
    out
}

fn antiname(f: &str) -> String {
    match f {
        "nu" => "nubar".into(),
        "e-" => "e+".into(),
        q => {
            let (flavor, color) = q.split_once('_').expect("quark names are flavor_color");
            format!("{flavor}bar_{color}")
        }
    }
}

/// `W+ -> u_R + dbar_B`, which violates color and must fail.
pub fn color_violating_control() -> Vertex {
    Vertex::new("color-violating control", &["W+"], &["u_R", "dbar_B"])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_contents() {
        let cat = vertex_catalog();
        let count = |prefix: &str| cat.iter().filter(|v| v.label.starts_with(prefix)).count();
        assert_eq!(count("lepton charged current"), 1);
        assert_eq!(count("quark charged current"), 3);
        assert_eq!(count("gluon "), 12);
        assert_eq!(count("W pair"), 1);
        assert_eq!(count("triple"), 2);
        assert!(cat.len() >= 20);
        assert!(cat.iter().all(|v| v.legs.len() >= 2));
    }

    #[test]
    fn every_catalog_vertex_conserves() {
        let reg = Registry::standard();
        for v in vertex_catalog() {
            let c = check_vertex(&reg, &v).unwrap();
            assert!(c.pass, "{}: residual {}", v.label, c.residual);
            assert!(c.residual.is_zero());
        }
    }

    #[test]
    fn worked_examples() {
        let reg = Registry::standard();
        let w = Vertex::parse("W- -> e- + nubar").unwrap();
        assert!(check_vertex(&reg, &w).unwrap().pass);
        let g = Vertex::parse("g_GbarR -> u_R + ubar_G").unwrap();
        assert!(check_vertex(&reg, &g).unwrap().pass);
        let ann = Vertex::parse("e- + e+ -> gamma").unwrap();
        assert!(check_vertex(&reg, &ann).unwrap().pass);
    }

    #[test]
    fn negative_control_fails() {
        let reg = Registry::standard();
        let c = check_vertex(&reg, &color_violating_control()).unwrap();
        assert!(!c.pass);
        // (0,1,1,1) - (1,0,1,1) - (-1,0,1,0)
        assert_eq!(c.residual, Quaternion::from_ints(0, 1, -1, 0));
    }

    #[test]
    fn flipping_and_crossing_preserve_conservation() {
        let reg = Registry::standard();
        for v in vertex_catalog() {
            assert!(check_vertex(&reg, &v.flipped()).unwrap().pass);
            for i in 0..v.legs.len() {
                // move leg i across and replace it by its antiparticle
                let mut crossed = v.crossed(i);
                let anti = reg
                    .antiparticle(reg.get(&v.legs[i].particle).unwrap())
                    .unwrap();
                crossed.legs[i].particle = anti.name.clone();
                assert!(
                    check_vertex(&reg, &crossed).unwrap().pass,
                    "{} leg {i}",
                    v.label
                );
            }
        }
    }

    #[test]
    fn unknown_particle() {
        let reg = Registry::standard();
        let v = Vertex::parse("W+ -> top + bbar").unwrap();
        assert!(matches!(
            check_vertex(&reg, &v),
            Err(Error::UnknownParticle(_))
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(Vertex::parse("W+ e-").is_err());
        assert!(Vertex::parse("W+ -> 0").is_err());
        let v = Vertex::parse("g_BbarG + g_GbarR + g_RbarB -> 0").unwrap();
        assert_eq!(v.legs.len(), 3);
        assert_eq!(v.to_string(), "g_BbarG + g_GbarR + g_RbarB -> 0");
    }
}
