use std::fmt::Write;

use bihom_core::exactlin::DenseMap;
use bihom_core::structures::CheckReport;

/// Matrix as aligned rows of canonical scalars.
pub fn matrix(m: &DenseMap) -> String {
    let cells: Vec<Vec<String>> = (0..m.dst_dim()).map(|r| m.row(r).iter().map(|s| s.to_canonical()).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "  [ {} ]", line.join(" ")).unwrap();
    }
    out
}

pub fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn report(title: &str, r: &CheckReport) -> String {
    let mut out = String::new();
    writeln!(out, "{title}: {} ({} diagrams)", verdict(r.passed()), r.diagrams.len()).unwrap();
    for d in &r.diagrams {
        write!(out, "  {}  {}  [{}]", verdict(d.passed), d.name, d.anchor).unwrap();
        if let Some(c) = &d.counterexample {
            write!(out, "  {c}").unwrap();
        }
        out.push('\n');
    }
    out
}
