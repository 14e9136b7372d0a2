use std::fmt::Write;

use crate::forms::BilinearForm;
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;

/// A characteristic ideal together with every name under which it appeared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedIdeal {
    pub names: Vec<String>,
    pub subspace: Subspace,
}

fn push(out: &mut Vec<NamedIdeal>, name: String, s: Subspace) {
    match out.iter_mut().find(|e| e.subspace == s) {
        Some(e) => {
            if !e.names.contains(&name) {
                e.names.push(name);
            }
        }
        None => out.push(NamedIdeal {
            names: vec![name],
            subspace: s,
        }),
    }
}

/// The named characteristic ideals, deduplicated, sorted by dimension and
/// then by first appearance.
pub fn named_ideals(
    l: &LieAlgebra,
    form: Option<&BilinearForm>,
    extra: &[(String, Subspace)],
) -> Vec<NamedIdeal> {
    let n = l.dim();
    let mut raw: Vec<(String, Subspace)> = vec![("0".into(), Subspace::zero(n))];
    let series = l.series();
    for (t, z) in series.upper_central.iter().enumerate().skip(1) {
        let name = if t == 1 { "Z".to_string() } else { format!("Z_{t}") };
        raw.push((name, z.clone()));
    }
    for (t, d) in series.derived.iter().enumerate().skip(1) {
        raw.push((format!("g^({})", t + 1), d.clone()));
    }
    for (t, c) in series.lower_central.iter().enumerate().skip(1) {
        raw.push((format!("g^{}", t + 1), c.clone()));
    }
    raw.push(("rad".into(), l.radical()));
    let nil = l.nilradical();
    raw.push(("n".into(), nil.clone()));
    raw.push(("J".into(), l.jacobson_radical()));
    for (t, c) in l.subalgebra_lower_central(&nil).iter().enumerate().skip(1) {
        raw.push((format!("n^{}", t + 1), c.clone()));
    }
    for (t, z) in l.subalgebra_upper_central(&nil).iter().enumerate().skip(1) {
        let name = if t == 1 { "Z(n)".to_string() } else { format!("Z_{t}(n)") };
        raw.push((name, z.clone()));
    }
    for (t, d) in l.subalgebra_derived(&nil).iter().enumerate().skip(1) {
        raw.push((format!("n^({})", t + 1), d.clone()));
    }
    raw.extend(extra.iter().cloned());
    if let Some(phi) = form {
        let perps: Vec<(String, Subspace)> = raw
            .iter()
            .filter(|(name, _)| name != "0")
            .map(|(name, s)| (format!("{name}^perp"), phi.perp_unchecked(s)))
            .collect();
        raw.extend(perps);
    }
    raw.push(("g".into(), Subspace::full(n)));
    let mut out = Vec::new();
    for (name, s) in raw {
        push(&mut out, name, s);
    }
    // stable sort keeps first-appearance order within a dimension
    out.sort_by_key(|e| e.subspace.dim());
    out
}

/// Pairs `(i, j)` with `ideals[i] ⊊ ideals[j]` and nothing strictly between.
pub fn covering_edges(ideals: &[NamedIdeal]) -> Vec<(usize, usize)> {
    let below = |a: usize, b: usize| {
        ideals[a].subspace.dim() < ideals[b].subspace.dim()
            && ideals[b].subspace.contains(&ideals[a].subspace).unwrap_or(false)
    };
    let mut edges = Vec::new();
    for i in 0..ideals.len() {
        for j in 0..ideals.len() {
            if below(i, j) && !(0..ideals.len()).any(|k| below(i, k) && below(k, j)) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// DOT digraph of the named ideals with covering edges pointing upward.
pub fn chain_dot(l: &LieAlgebra, form: Option<&BilinearForm>) -> String {
    chain_dot_with(l, form, &[])
}

pub fn chain_dot_with(
    l: &LieAlgebra,
    form: Option<&BilinearForm>,
    extra: &[(String, Subspace)],
) -> String {
    let ideals = named_ideals(l, form, extra);
    let edges = covering_edges(&ideals);
    let mut s = String::from("digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, e) in ideals.iter().enumerate() {
        let label = e.names.join(" = ").replace('"', "\\\"");
        writeln!(s, "  n{i} [label=\"{label}\\ndim {}\"];", e.subspace.dim()).unwrap();
    }
    for (a, b) in edges {
        writeln!(s, "  n{a} -> n{b};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Number of node lines in a DOT text produced by [`chain_dot`].
pub fn dot_node_count(dot: &str) -> usize {
    dot.lines().filter(|l| l.trim_start().starts_with('n') && l.contains("[label=")).count()
}

/// True when the covering edges form a single chain through every node.
pub fn is_chain(ideals: &[NamedIdeal]) -> bool {
    ideals
        .windows(2)
        .all(|w| w[1].subspace.contains(&w[0].subspace).unwrap_or(false) && w[0].subspace != w[1].subspace)
}
