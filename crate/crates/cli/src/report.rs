//! Text and JSON renderings of command results.

use std::collections::BTreeMap;

use kcharge::statistics::{Formulation, StepRow};
use kcharge::{KTableau, Partition, SweepReport, TPolynomial, TableauStatistics};
use serde_json::{json, Value};

fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("json value serializes");
    s.push('\n');
    s
}

fn parts_text(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("({})", inner.join(","))
}

/// Left-aligned columns separated by two spaces.
fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|i| {
            rows.iter()
                .filter_map(|r| r.get(i))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:<w$}", w = widths[i]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn enumeration(
    k: usize,
    weight: &[usize],
    shape: Option<&Partition>,
    ts: &[KTableau],
    json: bool,
) -> String {
    if json {
        let mut v = json!({ "k": k, "weight": weight });
        if let Some(s) = shape {
            v["shape"] = json!(s.parts());
        }
        v["count"] = json!(ts.len());
        v["tableaux"] = Value::Array(ts.iter().map(KTableau::to_json_value).collect());
        return to_json(&v);
    }
    let mut out = String::new();
    for t in ts {
        out.push_str(&t.to_text());
        out.push('\n');
    }
    out.push_str(&format!("count: {}\n", ts.len()));
    out
}

fn step_json(r: &StepRow) -> Value {
    json!({
        "letter": r.letter,
        "residue": r.residue.value(),
        "lowest": [r.lowest.row, r.lowest.col],
        "highest": [r.highest.row, r.highest.col],
        "L": r.l,
        "low_order": r.low_order.to_string(),
        "M": r.m,
        "diag_low": r.diag_lowest_addable,
        "I": r.i,
        "high_order": r.high_order.to_string(),
        "J": r.j,
        "diag_high": r.diag_highest_addable,
    })
}

pub fn statistics(t: &KTableau, s: &TableauStatistics, json: bool) -> String {
    if json {
        let sequences: Vec<Value> = s
            .tables
            .iter()
            .map(|table| {
                json!({
                    "cocharge": { "lp": table.cocharge(Formulation::Lp), "morse": table.cocharge(Formulation::Morse) },
                    "charge": { "lp": table.charge(Formulation::Lp), "morse": table.charge(Formulation::Morse) },
                    "entries": table.rows.iter().map(step_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        let v = json!({
            "k": t.k(),
            "shape": t.shape().parts(),
            "weight": t.weight(),
            "cocharge": { "lp": s.cocharge_lp, "morse": s.cocharge_morse },
            "charge": { "lp": s.charge_lp, "morse": s.charge_morse },
            "n_weight": s.n_weight,
            "interior": s.interior,
            "sequences": sequences,
        });
        return to_json(&v);
    }
    let mut out = format!(
        "k={} shape={} weight={}\n",
        t.k(),
        t.shape(),
        parts_text(t.weight())
    );
    out.push_str(&format!(
        "k-cocharge: lp={} morse={}\n",
        s.cocharge_lp, s.cocharge_morse
    ));
    out.push_str(&format!(
        "k-charge: lp={} morse={}\n",
        s.charge_lp, s.charge_morse
    ));
    out.push_str(&format!(
        "n(weight)={} interior={}\n",
        s.n_weight, s.interior
    ));
    for (idx, table) in s.tables.iter().enumerate() {
        out.push_str(&format!(
            "\nsequence {}: cocharge lp={} morse={}, charge lp={} morse={}\n",
            idx + 1,
            table.cocharge(Formulation::Lp),
            table.cocharge(Formulation::Morse),
            table.charge(Formulation::Lp),
            table.charge(Formulation::Morse),
        ));
        let header = [
            "entry",
            "L",
            "low_order",
            "M",
            "diag_low",
            "I",
            "high_order",
            "J",
            "diag_high",
        ];
        let mut rows = vec![header.iter().map(|h| h.to_string()).collect::<Vec<_>>()];
        for r in &table.rows {
            rows.push(vec![
                format!("{}_{}", r.letter, r.residue),
                r.l.to_string(),
                r.low_order.to_string(),
                r.m.to_string(),
                r.diag_lowest_addable.to_string(),
                r.i.to_string(),
                r.high_order.to_string(),
                r.j.to_string(),
                r.diag_highest_addable.to_string(),
            ]);
        }
        out.push_str(&columns(&rows));
    }
    out
}

pub fn table(
    k: Option<usize>,
    weight: &Partition,
    formulation: Formulation,
    classical: bool,
    table: &BTreeMap<Partition, TPolynomial>,
    json: bool,
) -> String {
    if json {
        let rows: Vec<Value> = table
            .iter()
            .map(|(shape, poly)| json!({ "shape": shape.parts(), "polynomial": poly.to_json_value() }))
            .collect();
        let mut v = json!({});
        if let Some(k) = k {
            v["k"] = json!(k);
        }
        v["weight"] = json!(weight.parts());
        if classical {
            v["classical"] = json!(true);
        } else {
            v["formulation"] = json!(formulation.to_string());
        }
        v["rows"] = Value::Array(rows);
        return to_json(&v);
    }
    table
        .iter()
        .map(|(shape, poly)| format!("{shape}: {poly}\n"))
        .collect()
}

pub fn sweep(report: &SweepReport, json: bool) -> String {
    if json {
        let mut v = serde_json::to_value(report).expect("report serializes");
        v["passed"] = json!(report.passed());
        return to_json(&v);
    }
    let mut out = format!(
        "sweep: k={}..{} |weight|<={}, {} weights, {} tableaux\n",
        report.min_k, report.max_k, report.max_weight, report.cases, report.tableaux
    );
    for c in &report.checks {
        if c.passed() {
            out.push_str(&format!("PASS {}: {} checked\n", c.check, c.checked));
        } else {
            out.push_str(&format!(
                "FAIL {}: {} of {} failed\n",
                c.check, c.failures, c.checked
            ));
            if let Some(example) = &c.first_counterexample {
                for line in example.lines() {
                    out.push_str(&format!("    {line}\n"));
                }
            }
        }
    }
    out.push_str(&format!(
        "repeated-residue steps: {}\n",
        report.repeated_residue_steps
    ));
    out.push_str(if report.passed() {
        "result: PASS\n"
    } else {
        "result: FAIL\n"
    });
    out
}

pub fn classical(
    shape: &Partition,
    content: &[usize],
    charge: u64,
    cocharge: u64,
    json: bool,
) -> String {
    if json {
        return to_json(&json!({
            "shape": shape.parts(),
            "weight": content,
            "charge": charge,
            "cocharge": cocharge,
        }));
    }
    format!(
        "shape={shape} weight={} charge={charge} cocharge={cocharge}\n",
        parts_text(content)
    )
}
