//! Dependency-free SVG line charts.
//!
//! Geometry is fixed: a `CHART_WIDTH × CHART_HEIGHT` canvas, plot area inset by
//! 64 px (left), 24 px (right), 40 px (top) and 56 px (bottom), five tick
//! intervals on each axis, legend in the upper-right corner of the plot area.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use super::{CliError, SweepRow};

pub const CHART_WIDTH: f64 = 640.0;
pub const CHART_HEIGHT: f64 = 420.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 56.0;
const TICKS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineStyle {
    Solid,
    Dashed,
    Dotted,
}

impl LineStyle {
    fn dasharray(self) -> Option<&'static str> {
        match self {
            LineStyle::Solid => None,
            LineStyle::Dashed => Some("8,5"),
            LineStyle::Dotted => Some("2,4"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub color: &'static str,
    pub style: LineStyle,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Charts {
    pub classical: String,
    pub quantum: String,
}

fn series(rows: &[SweepRow], label: &str, color: &'static str, style: LineStyle, f: fn(&SweepRow) -> f64) -> Series {
    Series {
        label: label.to_string(),
        color,
        style,
        points: rows.iter().map(|r| (r.alpha, f(r))).collect(),
    }
}

pub fn render_charts(rows: &[SweepRow]) -> Charts {
    let classical = [
        series(rows, "C(B|A)", "#1f77b4", LineStyle::Solid, |r| r.report.classical_a),
        series(rows, "C(A|B)", "#d62728", LineStyle::Dashed, |r| r.report.classical_b),
    ];
    let quantum = [
        series(rows, "D(B|A)", "#1f77b4", LineStyle::Solid, |r| r.report.discord_a),
        series(rows, "D(A|B)", "#d62728", LineStyle::Dashed, |r| r.report.discord_b),
        series(rows, "D(MID)", "#2ca02c", LineStyle::Dotted, |r| r.report.mid_quantum),
    ];
    Charts {
        classical: line_chart("Classical correlation", &classical),
        quantum: line_chart("Quantum correlation", &quantum),
    }
}

/// Writes `classical.svg` and `quantum.svg` into `dir`, creating it if needed.
pub fn write_charts(charts: &Charts, dir: &Path) -> Result<(PathBuf, PathBuf), CliError> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| CliError::Io { path, source }
    };
    std::fs::create_dir_all(dir).map_err(io(dir))?;
    let classical = dir.join("classical.svg");
    let quantum = dir.join("quantum.svg");
    std::fs::write(&classical, &charts.classical).map_err(io(&classical))?;
    std::fs::write(&quantum, &charts.quantum).map_err(io(&quantum))?;
    Ok((classical, quantum))
}

pub fn line_chart(title: &str, series: &[Series]) -> String {
    let xs = series.iter().flat_map(|s| s.points.iter().map(|p| p.0));
    let (x_min, x_max) = xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
    let (x_min, x_max) = if x_min < x_max { (x_min, x_max) } else { (0.0, 1.0) };
    let y_top = series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.1))
        .fold(0.0f64, f64::max);
    let (y_min, y_max) = (0.0, if y_top <= 1.0 + 1e-9 { 1.0 } else { 2.0 });

    let plot_w = CHART_WIDTH - LEFT - RIGHT;
    let plot_h = CHART_HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x_min) / (x_max - x_min) * plot_w;
    let sy = |y: f64| TOP + (1.0 - (y.clamp(y_min, y_max) - y_min) / (y_max - y_min)) * plot_h;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CHART_WIDTH}" height="{CHART_HEIGHT}" viewBox="0 0 {CHART_WIDTH} {CHART_HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{CHART_WIDTH}" height="{CHART_HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="24" text-anchor="middle" font-family="sans-serif" font-size="16">{}</text>"#,
        LEFT + plot_w / 2.0,
        escape(title)
    );

    for k in 0..=TICKS {
        let f = k as f64 / TICKS as f64;
        let x = x_min + f * (x_max - x_min);
        let y = y_min + f * (y_max - y_min);
        let (px, py) = (sx(x), sy(y));
        let _ = writeln!(
            s,
            r##"<line x1="{px:.2}" y1="{TOP:.2}" x2="{px:.2}" y2="{:.2}" stroke="#e0e0e0" stroke-width="1"/>"##,
            TOP + plot_h
        );
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT:.2}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="#e0e0e0" stroke-width="1"/>"##,
            LEFT + plot_w
        );
        let _ = writeln!(
            s,
            r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="12">{x:.3}</text>"#,
            TOP + plot_h + 18.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end" font-family="sans-serif" font-size="12">{y:.2}</text>"#,
            LEFT - 8.0,
            py + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black" stroke-width="1"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-family="sans-serif" font-size="14">dilaton α</text>"#,
        LEFT + plot_w / 2.0,
        CHART_HEIGHT - 14.0
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.1}" text-anchor="middle" font-family="sans-serif" font-size="14" transform="rotate(-90 16 {:.1})">bits</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );

    for (k, ser) in series.iter().enumerate() {
        let points: Vec<String> = ser
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        let dash = ser
            .style
            .dasharray()
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{}" stroke-width="2"{dash} points="{}"><title>{}</title></polyline>"#,
            ser.color,
            points.join(" "),
            escape(&ser.label)
        );

        let ly = TOP + 18.0 + 20.0 * k as f64;
        let lx = LEFT + plot_w - 110.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{}" stroke-width="2"{dash}/>"#,
            lx + 30.0,
            ser.color
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12">{}</text>"#,
            lx + 38.0,
            ly + 4.0,
            escape(&ser.label)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chart_structure() {
        let s = Series {
            label: "a<b".into(),
            color: "#000",
            style: LineStyle::Dashed,
            points: vec![(0.0, 1.0), (0.5, 0.8), (1.0, 0.4)],
        };
        let svg = line_chart("t", &[s]);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains("a&lt;b"));
        assert!(svg.contains(r#"stroke-dasharray="8,5""#));
    }
}
