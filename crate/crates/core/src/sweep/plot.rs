use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

use super::SweepTable;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 460.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 130.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 55.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

struct Frame {
    x0: f64,
    x1: f64,
    y1: f64,
}

impl Frame {
    fn px(&self, a: f64) -> f64 {
        LEFT + (a - self.x0) / (self.x1 - self.x0) * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - y / self.y1 * (HEIGHT - TOP - BOTTOM)
    }
}

/// SVG 1.1 document with one ξ-vs-a series per k and a dashed line at ξ = 1.
/// Degenerate points break a series; isolated points become markers.
pub fn render_svg(table: &SweepTable) -> Result<String> {
    let ns = table.n_values();
    match ns.len() {
        0 => return Err(Error::domain("cannot plot an empty table")),
        1 => {}
        _ => {
            return Err(Error::domain(format!(
                "plot needs a single N, table has {ns:?}"
            )))
        }
    }
    let n = ns[0];
    let mut ks: Vec<usize> = table.rows.iter().map(|r| r.k).collect();
    ks.sort_unstable();
    ks.dedup();

    let a_min = table.rows.iter().map(|r| r.a).fold(f64::INFINITY, f64::min);
    let a_max = table
        .rows
        .iter()
        .map(|r| r.a)
        .fold(f64::NEG_INFINITY, f64::max);
    let (x0, x1) = if a_max > a_min {
        (a_min, a_max)
    } else {
        (
            (a_min - 0.05).max(0.0),
            (a_max + 0.05).min(1.0).max(a_min + 0.05),
        )
    };
    let y_peak = table
        .rows
        .iter()
        .filter_map(|r| r.xi)
        .fold(1.0f64, f64::max);
    let frame = Frame {
        x0,
        x1,
        y1: ((y_peak * 1.05) / 0.25).ceil() * 0.25,
    };
    let label = if table.squared { "ξ²" } else { "ξ" };

    let mut svg = String::new();
    let w = &mut svg;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        w,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="18" text-anchor="middle" font-size="14">{label} vs a, N = {n}</text>"#,
        (LEFT + WIDTH - RIGHT) / 2.0
    );

    // Axes and ticks.
    let (bx, by) = (frame.px(x0), frame.py(0.0));
    let _ = writeln!(
        w,
        r#"<g id="axes" stroke="black" fill="none"><line x1="{bx:.2}" y1="{by:.2}" x2="{:.2}" y2="{by:.2}"/><line x1="{bx:.2}" y1="{by:.2}" x2="{bx:.2}" y2="{:.2}"/></g>"#,
        frame.px(x1),
        frame.py(frame.y1)
    );
    let _ = writeln!(w, r#"<g id="ticks">"#);
    for i in 0..=5 {
        let a = x0 + (x1 - x0) * i as f64 / 5.0;
        let y = frame.y1 * i as f64 / 5.0;
        let _ = writeln!(
            w,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{a:.2}</text>"#,
            frame.px(a),
            by + 18.0
        );
        let _ = writeln!(
            w,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{y:.2}</text>"#,
            bx - 6.0,
            frame.py(y) + 4.0
        );
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">a</text>"#,
        (LEFT + WIDTH - RIGHT) / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        w,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{label}</text>"#,
        (TOP + HEIGHT - BOTTOM) / 2.0,
        (TOP + HEIGHT - BOTTOM) / 2.0
    );

    let _ = writeln!(
        w,
        r#"<line id="reference" x1="{bx:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray" stroke-dasharray="6 4"/>"#,
        frame.py(1.0),
        frame.px(x1),
        frame.py(1.0)
    );

    for (idx, &k) in ks.iter().enumerate() {
        let colour = PALETTE[idx % PALETTE.len()];
        let _ = writeln!(
            w,
            r#"<g class="series" data-k="{k}" stroke="{colour}" fill="none">"#
        );
        let mut rows: Vec<_> = table.rows.iter().filter(|r| r.k == k).collect();
        rows.sort_by(|p, q| p.a.total_cmp(&q.a));
        let mut segments: Vec<Vec<(f64, f64)>> = vec![Vec::new()];
        for r in rows {
            match r.xi {
                Some(y) => segments.last_mut().expect("non-empty").push((r.a, y)),
                None => segments.push(Vec::new()),
            }
        }
        for seg in segments.iter().filter(|s| !s.is_empty()) {
            if seg.len() == 1 {
                let (a, y) = seg[0];
                let _ = writeln!(
                    w,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{colour}"/>"#,
                    frame.px(a),
                    frame.py(y)
                );
            } else {
                let pts: Vec<String> = seg
                    .iter()
                    .map(|&(a, y)| format!("{:.2},{:.2}", frame.px(a), frame.py(y)))
                    .collect();
                let _ = writeln!(
                    w,
                    r#"<polyline stroke-width="1.5" points="{}"/>"#,
                    pts.join(" ")
                );
            }
        }
        let _ = writeln!(w, "</g>");
        let ly = TOP + 10.0 + 18.0 * idx as f64;
        let lx = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            w,
            r#"<g class="legend"><line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{colour}" stroke-width="2"/><text x="{:.2}" y="{:.2}">k = {k}</text></g>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0
        );
    }
    let _ = writeln!(w, "</svg>");
    Ok(svg)
}

pub fn emit_plot(table: &SweepTable, path: &Path) -> Result<()> {
    let svg = render_svg(table)?;
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    std::fs::write(path, svg).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::{run_sweep, KSelection, Mode, SweepConfig, SweepRow};

    fn row(n: usize, k: usize, a: f64, xi: Option<f64>) -> SweepRow {
        SweepRow {
            n,
            k,
            a,
            xi,
            tperp_min: None,
            mean_spin_len: 1.0,
            squeezed: false,
            degenerate: xi.is_none(),
            xi_oracle: None,
            oracle_diff: None,
        }
    }

    #[test]
    fn five_series_for_n20() {
        let cfg = SweepConfig {
            n_list: vec![20],
            k: KSelection::All { max: Some(5) },
            a_grid: "0:1:41".parse().unwrap(),
            mode: Mode::Closed,
            ..SweepConfig::default()
        };
        let svg = render_svg(&run_sweep(&cfg).unwrap()).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 5);
        assert_eq!(svg.matches(r#"id="reference""#).count(), 1);
        assert_eq!(svg.matches("k = ").count(), 5);
    }

    #[test]
    fn single_point_is_a_marker() {
        let t = SweepTable {
            rows: vec![row(4, 1, 0.5, Some(0.9))],
            ..SweepTable::default()
        };
        let svg = render_svg(&t).unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<polyline").count(), 0);
    }

    #[test]
    fn degenerate_rows_split_series() {
        let t = SweepTable {
            rows: vec![
                row(4, 2, 0.0, Some(1.2)),
                row(4, 2, 0.1, Some(1.1)),
                row(4, 2, 0.2, None),
                row(4, 2, 0.3, Some(0.9)),
                row(4, 2, 0.4, Some(0.95)),
            ],
            ..SweepTable::default()
        };
        assert_eq!(render_svg(&t).unwrap().matches("<polyline").count(), 2);
    }

    #[test]
    fn refuses_multi_n_and_empty() {
        let t = SweepTable {
            rows: vec![row(4, 1, 0.5, Some(0.9)), row(6, 1, 0.5, Some(0.9))],
            ..SweepTable::default()
        };
        assert!(render_svg(&t).is_err());
        assert!(render_svg(&SweepTable::default()).is_err());
    }
}
