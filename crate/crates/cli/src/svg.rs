//! Minimal static scatter plot: per-cell success rate against edge
//! probability, one series per graph order.

use crate::experiment::RunRecord;
use std::collections::BTreeMap;
use std::fmt::Write as _;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN: f64 = 56.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Renders rows into a self-contained SVG document.
pub fn render_scatter(rows: &[RunRecord]) -> String {
    // Cell key (n, p); value (successes, runs).
    let mut cells: BTreeMap<(usize, u64), (usize, usize)> = BTreeMap::new();
    for r in rows {
        let e = cells.entry((r.n, r.p.to_bits())).or_insert((0, 0));
        e.0 += usize::from(r.success);
        e.1 += 1;
    }
    let ps: Vec<f64> = cells.keys().map(|&(_, bits)| f64::from_bits(bits)).collect();
    let (p_lo, p_hi) = ps
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &p| (lo.min(p), hi.max(p)));
    let span = if p_hi > p_lo { p_hi - p_lo } else { 1.0 };
    let x = |p: f64| MARGIN + (p - p_lo) / span * (WIDTH - 2.0 * MARGIN);
    let y = |rate: f64| HEIGHT - MARGIN - rate * (HEIGHT - 2.0 * MARGIN);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    for (frac, label) in [(0.0, "0"), (0.5, "0.5"), (1.0, "1")] {
        let gy = y(frac);
        let _ = writeln!(
            out,
            r##"<line x1="{}" y1="{gy}" x2="{}" y2="{gy}" stroke="#ddd"/>"##,
            MARGIN,
            WIDTH - MARGIN
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="12" text-anchor="end">{label}</text>"#,
            MARGIN - 6.0,
            gy + 4.0
        );
    }
    let _ = writeln!(
        out,
        r#"<line x1="{m}" y1="{b}" x2="{r}" y2="{b}" stroke="black"/>"#,
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    );
    let _ = writeln!(
        out,
        r#"<line x1="{m}" y1="{t}" x2="{m}" y2="{b}" stroke="black"/>"#,
        m = MARGIN,
        t = MARGIN,
        b = HEIGHT - MARGIN
    );
    for p in [p_lo, p_hi] {
        let tx = x(p);
        let _ = writeln!(
            out,
            r#"<text x="{tx}" y="{}" font-size="12" text-anchor="middle">{p:.4}</text>"#,
            HEIGHT - MARGIN + 18.0
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-size="13" text-anchor="middle">edge probability p</text>"#,
        WIDTH / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        out,
        r#"<text x="16" y="{}" font-size="13" text-anchor="middle" transform="rotate(-90 16 {})">success rate</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );

    let ns: Vec<usize> = {
        let mut v: Vec<usize> = cells.keys().map(|&(n, _)| n).collect();
        v.dedup();
        v
    };
    for (i, &n) in ns.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        for (&(cn, bits), &(ok, total)) in &cells {
            if cn != n {
                continue;
            }
            let rate = ok as f64 / total as f64;
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="5" fill="{color}" fill-opacity="0.8"/>"#,
                x(f64::from_bits(bits)),
                y(rate)
            );
        }
        let ly = MARGIN + 16.0 * i as f64;
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="5" fill="{color}"/><text x="{}" y="{}" font-size="12">n = {n}</text>"#,
            WIDTH - MARGIN - 70.0,
            ly,
            WIDTH - MARGIN - 60.0,
            ly + 4.0
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(n: usize, p: f64, success: bool) -> RunRecord {
        RunRecord {
            seed: 0,
            n,
            p_rule: p.to_string(),
            p,
            variant: "dense".into(),
            success,
            rank: 0,
            target_rank: 0,
            iterations: 0,
            switcher_retries: 0,
            posa_rotations: 0,
            wall_ms: 0,
        }
    }

    #[test]
    fn scatter_contains_a_point_per_cell_and_is_deterministic() {
        let rows = vec![row(5, 0.2, true), row(5, 0.2, false), row(7, 0.8, true)];
        let svg = render_scatter(&rows);
        assert_eq!(svg.matches("<circle").count(), 2 + 2);
        assert!(svg.contains("n = 5") && svg.contains("n = 7"));
        assert_eq!(svg, render_scatter(&rows));
    }
}
