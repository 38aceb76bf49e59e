use serde_json::json;

use crate::Outcome;

/// Bumped whenever the shape of the JSON output changes.
pub const SCHEMA_VERSION: u32 = 1;

pub fn json(o: &Outcome) -> String {
    let v = json!({
        "schema": SCHEMA_VERSION,
        "command": o.command,
        "result": o.result,
        "checks": o.report.checks,
        "passed": o.report.passed(),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("serialisable");
    s.push('\n');
    s
}

pub fn table(o: &Outcome) -> String {
    let mut s = o.table.clone();
    if !s.is_empty() && !s.ends_with('\n') {
        s.push('\n');
    }
    if !o.report.checks.is_empty() {
        s.push_str("\nchecks:\n");
        for c in &o.report.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            match &c.detail {
                Some(d) if !c.passed => s.push_str(&format!("  [{mark}] {} ({d})\n", c.name)),
                _ => s.push_str(&format!("  [{mark}] {}\n", c.name)),
            }
        }
        let failed = o.report.failures().count();
        s.push_str(&format!("{} checks, {failed} failed\n", o.report.checks.len()));
    }
    s
}

/// Left-aligned columns.
pub fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..width).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|x| x.chars().count()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().enumerate().map(|(c, x)| format!("{x:<w$}", w = widths[c])).collect();
        s.push_str(cells.join("  ").trim_end());
        s.push('\n');
    }
    s
}
