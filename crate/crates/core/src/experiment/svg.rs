//! Field plot of one trial: true unknown positions (blue circles), anchors
//! (red squares), estimates (green crosses) and a gray segment from each
//! node to its estimate.
//!
//! Element classes are stable so the output can be inspected structurally:
//! every `<circle>` is an unknown node and every `<rect>` an anchor; legend
//! markers and the field border are drawn as `<path>`.

use std::fmt::Write as _;
use std::path::Path;

use super::output::OutputError;
use super::runner::TrialDetail;

/// User units per meter.
pub const UNITS_PER_METER: f64 = 6.0;
const MARGIN: f64 = 24.0;
const LEGEND_WIDTH: f64 = 170.0;
const TITLE_HEIGHT: f64 = 28.0;

const BLUE: &str = "#1f5fbf";
const RED: &str = "#d62728";
const GREEN: &str = "#2ca02c";
const GRAY: &str = "#9a9a9a";

const NODE_RADIUS: f64 = 3.0;
const ANCHOR_SIDE: f64 = 9.0;
const CROSS_HALF: f64 = 4.0;

struct Frame {
    height_m: f64,
}

impl Frame {
    fn x(&self, x: f64) -> f64 {
        MARGIN + x * UNITS_PER_METER
    }

    fn y(&self, y: f64) -> f64 {
        TITLE_HEIGHT + MARGIN + (self.height_m - y) * UNITS_PER_METER
    }
}

fn cross_path(cx: f64, cy: f64, class: &str) -> String {
    let h = CROSS_HALF;
    format!(
        r#"<path class="{class}" d="M{:.2} {:.2} L{:.2} {:.2} M{:.2} {:.2} L{:.2} {:.2}" stroke="{GREEN}" stroke-width="1.6" fill="none"/>"#,
        cx - h,
        cy - h,
        cx + h,
        cy + h,
        cx - h,
        cy + h,
        cx + h,
        cy - h
    )
}

fn circle_path(cx: f64, cy: f64, r: f64, class: &str) -> String {
    format!(
        r#"<path class="{class}" d="M{:.2} {:.2} a{r:.2} {r:.2} 0 1 0 {:.2} 0 a{r:.2} {r:.2} 0 1 0 {:.2} 0" fill="{BLUE}"/>"#,
        cx - r,
        cy,
        2.0 * r,
        -2.0 * r
    )
}

/// SVG markup for one trial.
pub fn render_field_svg(detail: &TrialDetail) -> String {
    let field = detail.deployment.field();
    let frame = Frame {
        height_m: field.height,
    };
    let plot_w = field.width * UNITS_PER_METER;
    let plot_h = field.height * UNITS_PER_METER;
    let width = 2.0 * MARGIN + plot_w + LEGEND_WIDTH;
    let height = TITLE_HEIGHT + 2.0 * MARGIN + plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.2} {height:.2}" font-family="sans-serif">"#
    );
    let _ = writeln!(s, r#"<path class="background" d="M0 0 H{width:.2} V{height:.2} H0 Z" fill="white"/>"#);

    let localized = detail.localized_count();
    let mean_error = {
        let errs: Vec<f64> = detail.nodes.iter().filter_map(|n| n.error).collect();
        if errs.is_empty() {
            "n/a".to_string()
        } else {
            format!("{:.2} m", errs.iter().sum::<f64>() / errs.len() as f64)
        }
    };
    let _ = writeln!(
        s,
        r#"<text x="{MARGIN:.2}" y="{:.2}" font-size="14">{} trial {}: {}/{} localized, mean error {}</text>"#,
        TITLE_HEIGHT - 6.0,
        detail.algorithm,
        detail.trial_index,
        localized,
        detail.nodes.len(),
        mean_error
    );

    let (x0, y0) = (frame.x(0.0), frame.y(field.height));
    let _ = writeln!(
        s,
        r##"<path class="field" d="M{x0:.2} {y0:.2} H{:.2} V{:.2} H{x0:.2} Z" fill="none" stroke="#333333" stroke-width="1"/>"##,
        x0 + plot_w,
        y0 + plot_h
    );

    s.push_str("<g class=\"errors\">\n");
    for n in &detail.nodes {
        if let Some(est) = n.estimate {
            let _ = writeln!(
                s,
                r#"<line class="error" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{GRAY}" stroke-width="0.8"/>"#,
                frame.x(n.true_position.x()),
                frame.y(n.true_position.y()),
                frame.x(est.x()),
                frame.y(est.y())
            );
        }
    }
    s.push_str("</g>\n<g class=\"unknowns\">\n");
    for n in &detail.nodes {
        let _ = writeln!(
            s,
            r#"<circle class="unknown" cx="{:.2}" cy="{:.2}" r="{NODE_RADIUS:.2}" fill="{BLUE}"/>"#,
            frame.x(n.true_position.x()),
            frame.y(n.true_position.y())
        );
    }
    s.push_str("</g>\n<g class=\"estimates\">\n");
    for est in detail.nodes.iter().filter_map(|n| n.estimate) {
        s.push_str(&cross_path(frame.x(est.x()), frame.y(est.y()), "estimate"));
        s.push('\n');
    }
    s.push_str("</g>\n<g class=\"anchors\">\n");
    for a in detail.deployment.anchors() {
        let _ = writeln!(
            s,
            r#"<rect class="anchor" x="{:.2}" y="{:.2}" width="{ANCHOR_SIDE:.2}" height="{ANCHOR_SIDE:.2}" fill="{RED}"/>"#,
            frame.x(a.x()) - ANCHOR_SIDE / 2.0,
            frame.y(a.y()) - ANCHOR_SIDE / 2.0
        );
    }
    s.push_str("</g>\n");

    // legend
    let lx = 2.0 * MARGIN + plot_w;
    let ly = TITLE_HEIGHT + MARGIN + 10.0;
    let label = |s: &mut String, row: f64, text: &str| {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="12">{text}</text>"#,
            lx + 16.0,
            ly + row * 20.0 + 4.0
        );
    };
    s.push_str("<g class=\"legend\">\n");
    s.push_str(&circle_path(lx + 4.0, ly, NODE_RADIUS, "legend-unknown"));
    s.push('\n');
    label(&mut s, 0.0, "unknown node");
    let (ax, ay) = (lx + 4.0 - ANCHOR_SIDE / 2.0, ly + 20.0 - ANCHOR_SIDE / 2.0);
    let _ = writeln!(
        s,
        r#"<path class="legend-anchor" d="M{ax:.2} {ay:.2} h{ANCHOR_SIDE:.2} v{ANCHOR_SIDE:.2} h{:.2} Z" fill="{RED}"/>"#,
        -ANCHOR_SIDE
    );
    label(&mut s, 1.0, "anchor");
    s.push_str(&cross_path(lx + 4.0, ly + 40.0, "legend-estimate"));
    s.push('\n');
    label(&mut s, 2.0, "estimate");
    let _ = writeln!(
        s,
        r#"<path class="legend-error" d="M{:.2} {:.2} H{:.2}" stroke="{GRAY}" stroke-width="0.8"/>"#,
        lx - 2.0,
        ly + 60.0,
        lx + 10.0
    );
    label(&mut s, 3.0, "error");
    let _ = writeln!(
        s,
        r#"<text x="{lx:.2}" y="{:.2}" font-size="11">R = {:.2} m</text>"#,
        ly + 90.0,
        detail.comm_range
    );
    s.push_str("</g>\n</svg>\n");
    s
}

pub fn write_field_svg(detail: &TrialDetail, path: impl AsRef<Path>) -> Result<(), OutputError> {
    let path = path.as_ref();
    std::fs::write(path, render_field_svg(detail)).map_err(|source| OutputError::Io {
        path: path.to_path_buf(),
        source,
    })
}
