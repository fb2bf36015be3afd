//! Contour pictures: a value grid with `y` decreasing downwards, and a DOT
//! graph with one complete component per value.

use std::fmt::Write;

use quasitrivial::{OpTable, TotalOrdering};

/// Rows are `y` from the greatest to the least element of `order`, columns
/// are `x` in `order`; the cell holds `F(x, y)`.
pub fn grid(f: &OpTable, order: &TotalOrdering) -> String {
    let width = f.n().to_string().len();
    let axis = order.as_slice();
    let mut out = String::new();
    for &y in axis.iter().rev() {
        let cells: Vec<String> = axis.iter().map(|&x| format!("{:>width$}", f.get(x, y))).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn dot(f: &OpTable) -> String {
    let n = f.n();
    let mut out = String::from("graph contour {\n  node [shape=point];\n");
    for v in 1..=n {
        let cells: Vec<(usize, usize)> =
            (1..=n).flat_map(|x| (1..=n).map(move |y| (x, y))).filter(|&(x, y)| f.get(x, y) == v).collect();
        if cells.is_empty() {
            continue;
        }
        writeln!(out, "  subgraph cluster_{v} {{\n    label=\"{v}\";").unwrap();
        for &(x, y) in &cells {
            writeln!(out, "    \"{x},{y}\" [pos=\"{x},{y}!\"];").unwrap();
        }
        for (i, &(x1, y1)) in cells.iter().enumerate() {
            for &(x2, y2) in &cells[i + 1..] {
                writeln!(out, "    \"{x1},{y1}\" -- \"{x2},{y2}\";").unwrap();
            }
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
