//! Report builders behind each CLI subcommand.
//!
//! Everything here is pure and deterministic, so the command-line front end
//! and the browser demo only choose a format and print.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Signed;

use crate::charge::electric_charge;
use crate::decompose::{
    conjugate_exclusions, diff_decompositions, doublet_search, sum_decompositions,
    unit_coverage_report, unit_form_assignments, DOUBLETS, GLUONS,
};
use crate::error::{Error, Result};
use crate::groups::{
    conjugacy_classes, group_by_name, group_q120, group_q24, group_q48, group_q8, is_permutable,
    is_subgroup, normal_subgroups, GroupExport, QGroup,
};
use crate::particles::{
    heisenberg_consistency, q48_exploration, verify_parity_rule, Category, Registry,
};
use crate::quaternion::Quaternion;
use crate::report::{Check, Payload, ReportEnvelope, Table};
use crate::units::{
    conjugation_classes, hurwitz_units, parity_survivor_count, parity_survivors, unit_by_value,
    unit_rows,
};
use crate::vertex::{check_vertex, color_violating_control, vertex_catalog, Vertex};
use crate::QuadScalar;

/// `+1`, `-1/2`, `0`.
pub fn signed(r: &BigRational) -> String {
    if r.is_positive() {
        format!("+{r}")
    } else {
        r.to_string()
    }
}

fn components(q: &Quaternion) -> [String; 4] {
    q.components().map(|c| c.to_string())
}

fn envelope(command: impl Into<String>, tables: Vec<Table>, checks: Vec<Check>) -> ReportEnvelope {
    ReportEnvelope::new(
        command,
        Payload {
            tables,
            checks,
            group: None,
        },
    )
}

pub fn particle_table(reg: &Registry) -> Table {
    let mut t = Table::new(
        "particle charges",
        &["name", "w", "x", "y", "z", "F_nb", "Z_el", "N", "I_z"],
    );
    for p in reg.rows() {
        let [w, x, y, z] = components(&p.lambda);
        // regenerate rather than trust the stored row
        let f = p.lambda.scal();
        let ze = electric_charge(&p.lambda);
        t.push(vec![
            p.name.clone(),
            w,
            x,
            y,
            z,
            f.to_signed_string(),
            ze.to_signed_string(),
            signed(&p.n),
            signed(&p.i_z),
        ]);
    }
    t
}

pub fn unit_table() -> Table {
    let mut t = Table::new(
        "Hurwitz units",
        &["name", "w", "x", "y", "z", "F_nb", "Z_el"],
    );
    for row in unit_rows() {
        let [w, x, y, z] = components(&row.value);
        t.push(vec![
            row.name,
            w,
            x,
            y,
            z,
            row.f_nb.to_signed_string(),
            row.z_el.to_signed_string(),
        ]);
    }
    t
}

pub fn unit_form_table(reg: &Registry) -> Result<Table> {
    let forms = unit_form_assignments(reg)?;
    let mut t = Table::new(
        "charges as unit forms",
        &["name", "w", "x", "y", "z", "F_nb", "Z_el", "hurwitz"],
    );
    for row in &forms.rows {
        let [w, x, y, z] = components(&row.lambda);
        t.push(vec![
            row.name.clone(),
            w,
            x,
            y,
            z,
            row.lambda.scal().to_signed_string(),
            electric_charge(&row.lambda).to_signed_string(),
            row.form.as_ref().map(|f| f.to_string()).unwrap_or_default(),
        ]);
    }
    Ok(t)
}

pub fn cmd_tables(which: u8, reg: &Registry) -> Result<ReportEnvelope> {
    let table = match which {
        1 => particle_table(reg),
        2 => unit_table(),
        3 => unit_form_table(reg)?,
        n => {
            return Err(Error::Domain(format!(
                "unknown table {n}; expected 1, 2 or 3"
            )))
        }
    };
    Ok(envelope(format!("tables {which}"), vec![table], Vec::new()))
}

type CheckFn<'a> = Box<dyn Fn() -> Result<(bool, String)> + 'a>;

fn run(name: &str, f: CheckFn<'_>) -> Check {
    match f() {
        Ok((pass, detail)) => Check::new(name, pass, detail),
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

fn bool_list(items: &[(String, bool)]) -> (bool, String) {
    let bad: Vec<&str> = items
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n.as_str())
        .collect();
    if bad.is_empty() {
        (true, format!("{} of {} hold", items.len(), items.len()))
    } else {
        (false, format!("failing: {}", bad.join(", ")))
    }
}

fn check_normal(sub: &QGroup, g: &QGroup) -> Result<(bool, String)> {
    let ok = is_permutable(sub, g)?;
    Ok((ok, format!("{} normal in {}: {ok}", sub.name(), g.name())))
}

fn group_orders(g: &QGroup) -> Vec<usize> {
    normal_subgroups(g).iter().map(QGroup::order).collect()
}

/// Every claim, in a fixed order. Failures of individual checks are
/// recorded, never propagated.
pub fn verify_checks(reg: &Registry) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(run(
        "particle-table",
        Box::new(|| {
            let items: Vec<(String, bool)> = reg
                .rows()
                .iter()
                .map(|p| {
                    let f = p.lambda.scal().as_rational().cloned();
                    let z = electric_charge(&p.lambda).as_rational().cloned();
                    let expect_f = match p.category {
                        Category::GaugeBoson => 0,
                        Category::Fermion => 1,
                        Category::Antifermion => -1,
                    };
                    let ok = f.as_ref() == Some(&p.f_nb)
                        && z.as_ref() == Some(&p.z_el)
                        && p.f_nb == BigRational::from_integer(expect_f.into());
                    (p.name.clone(), ok)
                })
                .collect();
            let (ok, detail) = bool_list(&items);
            Ok((
                ok && items.len() == 28,
                format!("{} rows; {detail}", items.len()),
            ))
        }),
    ));

    checks.push(run(
        "unit-table",
        Box::new(|| {
            let units = hurwitz_units();
            let one = QuadScalar::one();
            let norms = units.iter().all(|u| u.value().norm() == one);
            let distinct = units
                .iter()
                .map(|u| u.value().clone())
                .collect::<std::collections::HashSet<_>>()
                .len();
            let rows = unit_rows();
            let h2 = rows
                .iter()
                .find(|r| r.name == "h2")
                .map(|r| (r.f_nb.to_signed_string(), r.z_el.to_signed_string()));
            let ok = units.len() == 24
                && distinct == 24
                && norms
                && h2 == Some(("+1/2".into(), "+1/6".into()));
            Ok((
                ok,
                format!(
                    "{} distinct units of norm 1; h2 F_nb, Z_el = +1/2, +1/6",
                    distinct
                ),
            ))
        }),
    ));

    checks.push(run(
        "unit-form-table",
        Box::new(|| {
            let forms = unit_form_assignments(reg)?;
            let verified = forms
                .rows
                .iter()
                .all(|r| r.form.as_ref().is_none_or(|f| f.value() == r.lambda));
            let formed = forms.rows.iter().filter(|r| r.form.is_some()).count();
            Ok((verified, format!("{formed} unit forms match their charges")))
        }),
    ));

    checks.push(run(
        "heisenberg",
        Box::new(|| {
            let rows = heisenberg_consistency(reg)?;
            Ok((
                rows.iter().all(|r| r.holds),
                format!("Z_el = N/2 + I_z on {} rows", rows.len()),
            ))
        }),
    ));

    checks.push(run(
        "parity-rule",
        Box::new(|| {
            let rows = verify_parity_rule(reg);
            let items: Vec<(String, bool)> =
                rows.iter().map(|r| (r.name.clone(), r.pass)).collect();
            let (ok, detail) = bool_list(&items);
            Ok((ok && rows.len() == 24, detail))
        }),
    ));

    checks.push(run(
        "parity-survivors",
        Box::new(|| {
            let n = parity_survivor_count();
            Ok((n == 37, format!("{n} of 81 trit quaternions survive")))
        }),
    ));

    checks.push(run(
        "conjugation-classes",
        Box::new(|| {
            let all = crate::units::trit_quaternions();
            let n = conjugation_classes(&all).len();
            let s = conjugation_classes(&parity_survivors()).len();
            Ok((
                n == 42,
                format!("{n} classes over all 81, {s} over survivors"),
            ))
        }),
    ));

    checks.push(run(
        "vertex-catalog",
        Box::new(|| {
            let cat = vertex_catalog();
            let mut items = Vec::new();
            for v in &cat {
                let c = check_vertex(reg, v)?;
                items.push((v.label.clone(), c.pass));
            }
            let (ok, detail) = bool_list(&items);
            let control = check_vertex(reg, &color_violating_control())?;
            let ok = ok && cat.len() >= 20 && !control.pass;
            Ok((
                ok,
                format!(
                    "{detail}; control residual {}",
                    control.residual.to_compact_string()
                ),
            ))
        }),
    ));

    checks.push(run(
        "doublet-uniqueness",
        Box::new(|| {
            let mut parts = Vec::new();
            let mut ok = true;
            for (up, down) in DOUBLETS {
                let found = doublet_search(reg.lambda(up)?, reg.lambda(down)?)?;
                ok &= found.len() == 1;
                let names: Vec<String> = found
                    .iter()
                    .map(|(n, m)| format!("({},{})", n.name(), m.name()))
                    .collect();
                parts.push(format!("{up}/{down} {}", names.join("")));
            }
            Ok((ok, parts.join("; ")))
        }),
    ));

    checks.push(run(
        "conjugate-exclusions",
        Box::new(|| {
            let ex = conjugate_exclusions(reg)?;
            let ok = ex.iter().all(|e| !e.in_registry);
            Ok((
                ok,
                format!("{} conjugated forms, none a registered charge", ex.len()),
            ))
        }),
    ));

    checks.push(run(
        "unit-coverage",
        Box::new(|| {
            let cov = unit_coverage_report(&unit_form_assignments(reg)?)?;
            Ok((
                cov.missing.is_empty(),
                format!("{} of 24 units used", cov.used.len()),
            ))
        }),
    ));

    checks.push(run(
        "unit-product-closure",
        Box::new(|| {
            let units = hurwitz_units();
            let closed = units
                .iter()
                .flat_map(|a| units.iter().map(move |b| a.value() * b.value()))
                .filter(|p| unit_by_value(p).is_some())
                .count();
            Ok((closed == 576, format!("{closed} of 576 products are units")))
        }),
    ));

    checks.push(run(
        "decomposition-multiplicities",
        Box::new(|| {
            let sum =
                |n: &str| -> Result<usize> { Ok(sum_decompositions(reg.lambda(n)?)?.pairs.len()) };
            let diff =
                |n: &str| -> Result<usize> { Ok(diff_decompositions(reg.lambda(n)?)?.pairs.len()) };
            let mut ok = sum("nu")? == 4 && sum("e-")? == 1;
            for c in ["R", "B", "G"] {
                ok &= sum(&format!("u_{c}"))? == 1 && sum(&format!("d_{c}"))? == 3;
            }
            ok &= diff("W+")? == 2 && diff("W-")? == 2;
            for (g, a) in GLUONS {
                ok &= diff(g)? == 6 && diff(a)? == 6;
            }
            Ok((ok, "sum: nu 4, e- 1, u 1, d 3; diff: W 2, gluons 6".into()))
        }),
    ));

    checks.push(run(
        "group-orders",
        Box::new(|| {
            let gs = [group_q8(), group_q24(), group_q48(), group_q120()];
            let orders: Vec<usize> = gs.iter().map(|g| g.order()).collect();
            let latin = gs.iter().all(|g| g.is_latin_square());
            Ok((
                orders == [8, 24, 48, 120] && latin,
                format!("orders {orders:?}, Latin squares: {latin}"),
            ))
        }),
    ));

    checks.push(run(
        "q8-normal-in-q24",
        Box::new(|| check_normal(group_q8(), group_q24())),
    ));
    checks.push(run(
        "q8-normal-in-q48",
        Box::new(|| check_normal(group_q8(), group_q48())),
    ));
    checks.push(run(
        "q24-normal-in-q48",
        Box::new(|| check_normal(group_q24(), group_q48())),
    ));

    checks.push(run(
        "q120-normal-subgroups",
        Box::new(|| {
            let orders = group_orders(group_q120());
            Ok((orders == [1, 2, 120], format!("orders {orders:?}")))
        }),
    ));

    checks.push(run(
        "q120-class-sizes",
        Box::new(|| {
            let mut sizes: Vec<usize> = conjugacy_classes(group_q120())
                .iter()
                .map(Vec::len)
                .collect();
            sizes.sort_unstable();
            Ok((
                sizes == [1, 1, 12, 12, 12, 12, 20, 20, 30],
                format!("sizes {sizes:?}"),
            ))
        }),
    ));

    checks
}

pub fn cmd_verify(reg: &Registry) -> ReportEnvelope {
    envelope("verify", Vec::new(), verify_checks(reg))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecomposeMode {
    Sum,
    Diff,
    Doublet,
}

impl std::str::FromStr for DecomposeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(DecomposeMode::Sum),
            "diff" => Ok(DecomposeMode::Diff),
            "doublet" => Ok(DecomposeMode::Doublet),
            other => Err(Error::parse(0, format!("unknown mode `{other}`"))),
        }
    }
}

impl std::fmt::Display for DecomposeMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DecomposeMode::Sum => "sum",
            DecomposeMode::Diff => "diff",
            DecomposeMode::Doublet => "doublet",
        })
    }
}

/// Accepts quaternion text or, failing that, a registered particle name.
pub fn resolve_target(reg: &Registry, s: &str) -> Result<Quaternion> {
    let s = s.trim();
    if s.starts_with('(') {
        return s.parse();
    }
    reg.lambda(s).cloned().or_else(|_| s.parse())
}

pub fn cmd_decompose(
    reg: &Registry,
    targets: &[&str],
    mode: DecomposeMode,
) -> Result<ReportEnvelope> {
    let needed = if mode == DecomposeMode::Doublet { 2 } else { 1 };
    if targets.len() != needed {
        return Err(Error::Domain(format!(
            "{mode} mode takes {needed} target(s), got {}",
            targets.len()
        )));
    }
    let qs = targets
        .iter()
        .map(|t| resolve_target(reg, t))
        .collect::<Result<Vec<_>>>()?;
    let target_text = qs
        .iter()
        .map(Quaternion::to_compact_string)
        .collect::<Vec<_>>()
        .join(" ");
    let (cols, pairs): ([&str; 2], Vec<(&str, &str)>) = match mode {
        DecomposeMode::Sum => (
            ["a", "b"],
            sum_decompositions(&qs[0])?
                .pairs
                .iter()
                .map(|(a, b)| (a.name(), b.name()))
                .collect(),
        ),
        DecomposeMode::Diff => (
            ["a", "b"],
            diff_decompositions(&qs[0])?
                .pairs
                .iter()
                .map(|(a, b)| (a.name(), b.name()))
                .collect(),
        ),
        DecomposeMode::Doublet => (
            ["n", "m"],
            doublet_search(&qs[0], &qs[1])?
                .iter()
                .map(|(n, m)| (n.name(), m.name()))
                .collect(),
        ),
    };
    let mut summary = Table::new("decomposition", &["target", "mode", "multiplicity"]);
    summary.push(vec![
        target_text.clone(),
        mode.to_string(),
        pairs.len().to_string(),
    ]);
    let mut list = Table::new("pairs", &cols);
    for (a, b) in &pairs {
        list.push(vec![a.to_string(), b.to_string()]);
    }
    Ok(envelope(
        format!("decompose {mode} {target_text}"),
        vec![summary, list],
        Vec::new(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupAction {
    Order,
    Cayley,
    Classes,
    NormalSubgroups,
    CheckNormal(String),
}

fn element_table(g: &QGroup) -> Table {
    let mut t = Table::new(format!("{} elements", g.name()), &["index", "element"]);
    for (i, e) in g.elements().iter().enumerate() {
        t.push(vec![i.to_string(), e.to_compact_string()]);
    }
    t
}

fn join_indices(ix: &[usize]) -> String {
    ix.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

pub fn cmd_groups(name: &str, action: &GroupAction) -> Result<ReportEnvelope> {
    let g = group_by_name(name)?;
    let command = match action {
        GroupAction::Order => format!("groups {} order", g.name()),
        GroupAction::Cayley => format!("groups {} cayley", g.name()),
        GroupAction::Classes => format!("groups {} classes", g.name()),
        GroupAction::NormalSubgroups => format!("groups {} normal-subgroups", g.name()),
        GroupAction::CheckNormal(s) => format!("groups {} check-normal {s}", g.name()),
    };
    let mut payload = Payload::default();
    match action {
        GroupAction::Order => {
            let mut t = Table::new("order", &["group", "order", "radicand"]);
            t.push(vec![
                g.name().into(),
                g.order().to_string(),
                g.field().radicand().to_string(),
            ]);
            payload.tables.push(t);
        }
        GroupAction::Cayley => {
            payload.tables.push(element_table(g));
            let cols: Vec<String> = (0..g.order()).map(|i| i.to_string()).collect();
            let mut t = Table {
                title: format!("{} Cayley table", g.name()),
                columns: std::iter::once("row".to_string()).chain(cols).collect(),
                rows: Vec::new(),
            };
            for (i, row) in g.cayley().iter().enumerate() {
                t.push(
                    std::iter::once(i.to_string())
                        .chain(row.iter().map(usize::to_string))
                        .collect(),
                );
            }
            payload.tables.push(t);
            payload.checks.push(Check::new(
                "latin-square",
                g.is_latin_square(),
                format!("{} rows", g.order()),
            ));
            payload.group = Some(GroupExport::from(g));
        }
        GroupAction::Classes => {
            payload.tables.push(element_table(g));
            let mut t = Table::new(
                format!("{} conjugacy classes", g.name()),
                &["class", "size", "members"],
            );
            for (i, c) in conjugacy_classes(g).iter().enumerate() {
                t.push(vec![i.to_string(), c.len().to_string(), join_indices(c)]);
            }
            payload.tables.push(t);
            payload.group = Some(GroupExport::from(g));
        }
        GroupAction::NormalSubgroups => {
            let mut t = Table::new(
                format!("{} normal subgroups", g.name()),
                &["name", "order", "elements"],
            );
            for n in normal_subgroups(g) {
                let els = n
                    .elements()
                    .iter()
                    .map(Quaternion::to_compact_string)
                    .collect::<Vec<_>>();
                t.push(vec![n.name().into(), n.order().to_string(), els.join(";")]);
            }
            payload.tables.push(t);
        }
        GroupAction::CheckNormal(sub) => {
            let h = group_by_name(sub)?;
            let check_name = format!("{} normal in {}", h.name(), g.name());
            let check = match is_subgroup(h, g).and_then(|_| is_permutable(h, g)) {
                Ok(ok) => Check::new(check_name, ok, ok.to_string()),
                Err(e) => Check::new(check_name, false, e.to_string()),
            };
            payload.checks.push(check);
        }
    }
    Ok(ReportEnvelope::new(command, payload))
}

pub fn cmd_explore_q48() -> ReportEnvelope {
    let rows = q48_exploration();
    let mut t = Table::new(
        "Q48 elements outside Q24",
        &["w", "x", "y", "z", "F_nb", "Z_el", "norm", "hurwitz"],
    );
    let mut f_values = BTreeMap::new();
    let mut z_values = BTreeMap::new();
    for r in &rows {
        let [w, x, y, z] = components(&r.value);
        *f_values.entry(r.f_nb.to_signed_string()).or_insert(0) += 1;
        *z_values.entry(r.z_el.to_signed_string()).or_insert(0) += 1;
        t.push(vec![
            w,
            x,
            y,
            z,
            r.f_nb.to_signed_string(),
            r.z_el.to_signed_string(),
            r.norm.to_string(),
            r.hurwitz.to_string(),
        ]);
    }
    let allowed = |v: &str, set: &[&str]| set.contains(&v);
    let f_set = ["0", "+1/2*sqrt(2)", "-1/2*sqrt(2)"];
    let z_set = [
        "0",
        "+1/6*sqrt(2)",
        "-1/6*sqrt(2)",
        "+1/3*sqrt(2)",
        "-1/3*sqrt(2)",
    ];
    let checks = vec![
        Check::new(
            "element-count",
            rows.len() == 24,
            format!("{} elements", rows.len()),
        ),
        Check::new(
            "f_nb-values",
            f_values.keys().all(|v| allowed(v, &f_set)),
            f_values.keys().cloned().collect::<Vec<_>>().join(" "),
        ),
        Check::new(
            "z_el-values",
            z_values.keys().all(|v| allowed(v, &z_set)),
            z_values.keys().cloned().collect::<Vec<_>>().join(" "),
        ),
        Check::new(
            "outside-hurwitz",
            rows.iter().all(|r| !r.hurwitz),
            "no element is a Hurwitz integer",
        ),
    ];
    envelope("explore-q48", vec![t], checks)
}

/// Checks the catalog plus any extra vertices, given as `a + b -> c`.
pub fn cmd_vertices(reg: &Registry, extra: &[&str]) -> Result<ReportEnvelope> {
    let mut vs = vertex_catalog();
    vs.push(color_violating_control());
    for e in extra {
        vs.push(Vertex::parse(e)?);
    }
    let mut t = Table::new(
        "vertices",
        &["label", "vertex", "w", "x", "y", "z", "conserved"],
    );
    let mut checks = Vec::new();
    for v in &vs {
        let c = check_vertex(reg, v)?;
        let [w, x, y, z] = components(&c.residual);
        t.push(vec![
            c.label.clone(),
            c.legs.clone(),
            w,
            x,
            y,
            z,
            c.pass.to_string(),
        ]);
        let is_control = v.label == color_violating_control().label;
        let ok = c.pass != is_control;
        let detail = if is_control {
            "rejected as expected"
        } else {
            "conserved"
        };
        checks.push(Check::new(
            &c.label,
            ok,
            if ok {
                detail.into()
            } else {
                format!("residual {}", c.residual)
            },
        ));
    }
    Ok(envelope("vertices", vec![t], checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn particle_table_e_minus_row() {
        let r = cmd_tables(1, &Registry::standard()).unwrap();
        let text = crate::report::render_text(&r);
        assert!(text.contains("\ne- (1,-1,-1,-1) +1 -1 -1 -1/2\n"), "{text}");
    }

    #[test]
    fn unit_form_gluon_row() {
        let t = unit_form_table(&Registry::standard()).unwrap();
        assert_eq!(t.lookup("g_BbarG", "hurwitz"), Some("+h6-h7"));
        assert_eq!(t.lookup("gamma", "hurwitz"), Some(""));
    }

    #[test]
    fn unknown_table() {
        assert!(cmd_tables(4, &Registry::standard()).is_err());
    }

    #[test]
    fn verify_passes() {
        let r = cmd_verify(&Registry::standard());
        for c in &r.payload.checks {
            assert!(c.pass, "{}: {}", c.name, c.detail);
        }
        assert!(r.pass_count >= 12);
    }

    #[test]
    fn decompose_examples() {
        let reg = Registry::standard();
        let sum = cmd_decompose(&reg, &["(1,-1,0,0)"], DecomposeMode::Sum).unwrap();
        assert_eq!(sum.payload.tables[0].rows[0][2], "3");
        let diff = cmd_decompose(&reg, &["(0,1,1,1)"], DecomposeMode::Diff).unwrap();
        assert_eq!(diff.payload.tables[1].rows.len(), 2);
        let d = cmd_decompose(&reg, &["(1,0,1,1)", "(1,-1,0,0)"], DecomposeMode::Doublet).unwrap();
        assert_eq!(
            d.payload.tables[1].rows,
            vec![vec!["h5".to_string(), "h1".to_string()]]
        );
        assert!(cmd_decompose(&reg, &["(1,0,1,1)"], DecomposeMode::Doublet).is_err());
        let by_name = cmd_decompose(&reg, &["nu"], DecomposeMode::Sum).unwrap();
        assert_eq!(by_name.payload.tables[1].rows.len(), 4);
    }

    #[test]
    fn decompose_rejects_irrational() {
        let r = cmd_decompose(
            &Registry::standard(),
            &["(sqrt(2),0,0,0)"],
            DecomposeMode::Sum,
        );
        assert!(matches!(r, Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn group_examples() {
        let o = cmd_groups("q48", &GroupAction::Order).unwrap();
        assert_eq!(o.payload.tables[0].rows[0][1], "48");
        let n = cmd_groups("q24", &GroupAction::CheckNormal("q8".into())).unwrap();
        assert_eq!((n.pass_count, n.fail_count), (1, 0));
        let bad = cmd_groups("q8", &GroupAction::CheckNormal("q24".into())).unwrap();
        assert_eq!(bad.fail_count, 1);
        assert!(bad.payload.checks[0].detail.contains("subgroup"));
        let mixed = cmd_groups("q120", &GroupAction::CheckNormal("q48".into())).unwrap();
        assert_eq!(mixed.fail_count, 1);
        assert!(cmd_groups("q7", &GroupAction::Order).is_err());
    }

    #[test]
    fn explore_q48_checks() {
        let r = cmd_explore_q48();
        assert_eq!(r.fail_count, 0, "{:?}", r.payload.checks);
        assert_eq!(r.payload.tables[0].rows.len(), 24);
    }

    #[test]
    fn vertices_report() {
        let r = cmd_vertices(&Registry::standard(), &["e- + e+ -> gamma"]).unwrap();
        assert_eq!(r.fail_count, 0);
        assert!(cmd_vertices(&Registry::standard(), &["nonsense"]).is_err());
    }
}
