//! Text rendering of the two degree-8 tables: partitions with small defect,
//! and the triples inducing covers between triangular orbifolds.
//!
//! Both renderers are generic in the degree; the golden files pin d = 8.

use std::cmp::Ordering;

use crate::enumerate::{partitions_defect_at_most, triangular_candidates};
use crate::euler::{geometry_class, induced_orbifold_cover};
use crate::model::Partition;

/// Rows per block in the partition table.
const BLOCKS: usize = 3;

/// Fixed-width left-aligned cells joined by `sep`, trailing space trimmed.
fn render_row(cells: &[String], width: usize, sep: &str) -> String {
    let line: Vec<String> = cells.iter().map(|c| format!("{c:<width$}")).collect();
    line.join(sep).trim_end().to_string()
}

/// Partitions of d with defect at most 3, excluding (1^d). They are laid
/// out column-major over three blocks of rows Pi / l / c, in reverse
/// lexicographic order.
pub fn partition_table(d: u32) -> String {
    let parts: Vec<Partition> = partitions_defect_at_most(d, 3).into_iter().filter(|p| !p.is_trivial()).collect();
    let width = parts.iter().map(|p| p.to_string().len()).max().unwrap_or(0);
    let mut out = format!("Partitions of {d} with c <= 3\n");
    for block in 0..BLOCKS {
        let members: Vec<&Partition> = parts.iter().skip(block).step_by(BLOCKS).collect();
        if members.is_empty() {
            continue;
        }
        out.push('\n');
        let rows: [(&str, Vec<String>); 3] = [
            ("Pi", members.iter().map(|p| p.to_string()).collect()),
            ("l ", members.iter().map(|p| p.len().to_string()).collect()),
            ("c ", members.iter().map(|p| p.defect().to_string()).collect()),
        ];
        for (label, cells) in rows {
            out.push_str(&format!("{label} | {}\n", render_row(&cells, width, " | ")));
        }
    }
    out
}

/// Display order inside a row: largest entry descending, then length
/// descending.
fn display_order(a: &Partition, b: &Partition) -> Ordering {
    b.largest().cmp(&a.largest()).then(b.len().cmp(&a.len()))
}

/// Triangular candidates of degree d with their induced cover and source
/// geometry, rows sorted by the first partition ascending.
pub fn triangular_table(d: u32) -> String {
    let mut sorted: Vec<(Vec<Partition>, crate::euler::OrbifoldCover)> = triangular_candidates(d)
        .iter()
        .map(|c| {
            let mut parts: Vec<Partition> = c.partitions().to_vec();
            parts.sort_by(display_order);
            (parts, induced_orbifold_cover(c))
        })
        .collect();
    sorted.sort_by(|a, b| a.0[0].entries().cmp(b.0[0].entries()));
    let rows: Vec<Vec<String>> = sorted
        .iter()
        .map(|(parts, oc)| {
            let mut row: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
            row.push(format!("{} ~> {}", oc.source, oc.target));
            row.push(geometry_class(&oc.source).letter().to_string());
            row
        })
        .collect();
    let header: Vec<String> = ["Pi1", "Pi2", "Pi3", "cover", "geometry"].iter().map(|s| s.to_string()).collect();
    let mut widths = vec![0usize; header.len()];
    for r in std::iter::once(&header).chain(rows.iter()) {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |r: &Vec<String>| {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        cells.join("  ").trim_end().to_string()
    };
    let mut out = format!("Triples of partitions of {d} inducing covers between triangular orbifolds\n\n");
    out.push_str(&line(&header));
    out.push('\n');
    for r in &rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

/// Table by its number (1 or 2) at degree 8.
pub fn table(number: u8) -> Option<String> {
    match number {
        1 => Some(partition_table(8)),
        2 => Some(triangular_table(8)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_degree_tables_render() {
        let t = partition_table(4);
        assert!(t.contains("(4)") && !t.contains("(1,1,1,1)"));
        assert!(t.lines().all(|l| l == l.trim_end()));
        assert!(triangular_table(2).lines().count() == 3);
        assert_eq!(table(3), None);
    }

    #[test]
    fn triangular_rows_count() {
        assert_eq!(triangular_table(8).lines().count(), 3 + 4);
    }
}
