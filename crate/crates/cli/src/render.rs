use std::fmt::Write;

use serde_json::{json, Value};

use eqres::eqmod::{LatticeModel, ModuleModel};
use eqres::partitions::Partition;
use eqres::rep_ring::{dim_schur, RepSum};
use eqres::report::CheckReport;
use eqres::resolutions::BettiTable;
use eqres::suites::{GridBounds, Suite};

pub const SCHEMA: &str = "eqres/1";

fn document(command: &str, mut body: Value) -> String {
    let mut doc = json!({ "schema": SCHEMA, "command": command });
    doc.as_object_mut()
        .unwrap()
        .append(body.as_object_mut().expect("object body"));
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
    out.push('\n');
    out
}

fn terms_text(terms: &RepSum, m: &ModuleModel) -> String {
    let mut items: Vec<_> = terms.iter().collect();
    items.reverse();
    items
        .into_iter()
        .map(|(p, c)| {
            let d = dim_schur(p, m.ctx);
            if c == 1 {
                format!("{p} dim {d}")
            } else {
                format!("{c}×{p} dim {d}")
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn tor_text(m: &ModuleModel, table: &BettiTable) -> String {
    let mut out = format!("Tor of {m}\n");
    if table.is_empty() {
        out.push_str("(zero module)\n");
    }
    for (i, d, terms) in table.iter() {
        writeln!(out, "i={i} degree={d}: {}", terms_text(terms, m)).unwrap();
    }
    out
}

pub fn tor_json(m: &ModuleModel, table: &BettiTable) -> String {
    let rows: Vec<Value> = table
        .iter()
        .map(|(i, d, terms)| {
            let parts: Vec<Value> = terms
                .iter()
                .map(|(p, c)| json!({ "partition": p, "multiplicity": c, "dim": dim_schur(p, m.ctx) as u64 }))
                .collect();
            json!({ "i": i, "degree": d, "terms": parts })
        })
        .collect();
    document("tor", json!({ "module": m, "table": table, "rows": rows }))
}

fn node_label(model: &LatticeModel, id: usize) -> String {
    let v = model.node(id);
    format!("{}@{}", v.partition, v.degree)
}

pub fn lattice_dot(title: &str, model: &LatticeModel) -> String {
    let mut out = String::from("digraph lattice {\n");
    writeln!(out, "  label=\"{title}\";").unwrap();
    out.push_str("  rankdir=TB;\n");
    for v in &model.nodes {
        writeln!(out, "  n{} [label=\"{}\"];", v.id, node_label(model, v.id)).unwrap();
    }
    for (a, b) in &model.edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn lattice_json(title: &str, dmax: usize, model: &LatticeModel) -> String {
    document("lattice", json!({ "module": title, "dmax": dmax, "lattice": model }))
}

pub fn lattice_text(title: &str, model: &LatticeModel) -> String {
    let mut out = format!("Lattice of {title}\n");
    let mut degrees: Vec<usize> = model.nodes.iter().map(|v| v.degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        let labels: Vec<String> = model.nodes_in_degree(d).map(|v| v.partition.to_string()).collect();
        writeln!(out, "degree {d}: {}", labels.join(" ")).unwrap();
    }
    for (a, b) in &model.edges {
        writeln!(out, "{} -> {}", node_label(model, *a), node_label(model, *b)).unwrap();
    }
    out
}

pub fn verify_text(suite: Suite, reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        if r.passed {
            writeln!(out, "PASS {}", r.instance).unwrap();
        } else {
            writeln!(out, "FAIL {}: {}", r.instance, r.mismatches.join("; ")).unwrap();
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    writeln!(out, "{suite}: {passed}/{} passed", reports.len()).unwrap();
    out
}

pub fn verify_json(suite: Suite, bounds: GridBounds, reports: &[CheckReport]) -> String {
    let failed = reports.iter().filter(|r| !r.passed).count();
    document(
        "verify",
        json!({
            "suite": suite,
            "bounds": bounds,
            "passed": failed == 0,
            "total": reports.len(),
            "failed": failed,
            "reports": reports,
        }),
    )
}

pub fn ext_text(lambda: &Partition, eta: &Partition, degrees: &[usize]) -> String {
    let list: Vec<String> = degrees.iter().map(ToString::to_string).collect();
    format!("Ext^i(S{lambda}, S{eta}) = k for i in [{}]\n", list.join(", "))
}

pub fn ext_json(lambda: &Partition, eta: &Partition, n: usize, degrees: &[usize]) -> String {
    document(
        "ext",
        json!({ "lambda": lambda, "eta": eta, "n": n, "degrees": degrees }),
    )
}
