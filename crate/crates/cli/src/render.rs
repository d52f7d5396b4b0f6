//! Hand-written SVG for scatter plots with curves and for cell heatmaps.
//!
//! Data are integers throughout; floating point is used only to place marks,
//! and every coordinate is printed with two decimals so equal inputs give equal
//! bytes.

use std::fmt::Write;

const WIDTH: f64 = 900.0;
const HEIGHT: f64 = 560.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 55.0;

fn c(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Inclusive integer data range mapped onto the plot box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: i64,
    pub hi: i64,
}

impl Range {
    pub fn new(lo: i64, hi: i64) -> Range {
        assert!(lo <= hi, "empty axis range {lo}..={hi}");
        Range { lo, hi }
    }
}

/// Multiples of a 1-2-5 step inside `r`, at most about `target` of them.
pub fn ticks(r: Range, target: i64) -> Vec<i64> {
    let span = (r.hi - r.lo).max(1);
    let mut step = 1i64;
    'outer: loop {
        for m in [1, 2, 5] {
            if span / (step * m) <= target {
                step *= m;
                break 'outer;
            }
        }
        step *= 10;
    }
    let first = r.lo.div_euclid(step) * step + if r.lo.rem_euclid(step) == 0 { 0 } else { step };
    (0..)
        .map(|i| first + i * step)
        .take_while(|&t| t <= r.hi)
        .collect()
}

/// Maps data to pixels. `pad` widens both ends by half a cell for heatmaps.
#[derive(Clone, Copy, Debug)]
struct Frame {
    x: Range,
    y: Range,
    pad: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        let (lo, hi) = (self.x.lo as f64 - self.pad, self.x.hi as f64 + self.pad);
        let span = if hi > lo { hi - lo } else { 1.0 };
        LEFT + (x - lo) / span * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        let (lo, hi) = (self.y.lo as f64 - self.pad, self.y.hi as f64 + self.pad);
        let span = if hi > lo { hi - lo } else { 1.0 };
        HEIGHT - BOTTOM - (y - lo) / span * (HEIGHT - TOP - BOTTOM)
    }
}

struct Doc {
    buf: String,
}

impl Doc {
    fn new(title: &str, frame: &Frame) -> Doc {
        let mut buf = String::new();
        let _ = writeln!(
            buf,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" data-x-min="{x0}" data-x-max="{x1}" data-y-min="{y0}" data-y-max="{y1}">"#,
            w = WIDTH,
            h = HEIGHT,
            x0 = frame.x.lo,
            x1 = frame.x.hi,
            y0 = frame.y.lo,
            y1 = frame.y.hi,
        );
        let _ = writeln!(buf, "<title>{}</title>", escape(title));
        let _ = writeln!(
            buf,
            r##"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##
        );
        let _ = writeln!(
            buf,
            r#"<defs><clipPath id="plot-area"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath></defs>"#,
            c(LEFT),
            c(TOP),
            c(WIDTH - LEFT - RIGHT),
            c(HEIGHT - TOP - BOTTOM)
        );
        Doc { buf }
    }

    fn axes(&mut self, frame: &Frame, title: &str, x_label: &str, y_label: &str) {
        let (x0, x1) = (LEFT, WIDTH - RIGHT);
        let (y0, y1) = (HEIGHT - BOTTOM, TOP);
        let b = &mut self.buf;
        let _ = writeln!(
            b,
            r##"<g class="axes" stroke="#000000" stroke-width="1" fill="none">"##
        );
        let _ = writeln!(
            b,
            r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
            c(x0),
            c(y1),
            c(x1 - x0),
            c(y0 - y1)
        );
        for t in ticks(frame.x, 10) {
            let x = frame.px(t as f64);
            let _ = writeln!(
                b,
                r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
                c(x),
                c(y0),
                c(y0 + 5.0)
            );
        }
        for t in ticks(frame.y, 8) {
            let y = frame.py(t as f64);
            let _ = writeln!(
                b,
                r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
                c(y),
                c(x0 - 5.0),
                c(x0)
            );
        }
        let _ = writeln!(b, "</g>");
        let _ = writeln!(
            b,
            r##"<g class="labels" font-family="sans-serif" font-size="12" fill="#000000">"##
        );
        for t in ticks(frame.x, 10) {
            let x = frame.px(t as f64);
            let _ = writeln!(
                b,
                r#"<text x="{}" y="{}" text-anchor="middle">{t}</text>"#,
                c(x),
                c(y0 + 18.0)
            );
        }
        for t in ticks(frame.y, 8) {
            let y = frame.py(t as f64);
            let _ = writeln!(
                b,
                r#"<text x="{}" y="{}" text-anchor="end">{t}</text>"#,
                c(x0 - 8.0),
                c(y + 4.0)
            );
        }
        let _ = writeln!(
            b,
            r#"<text x="{}" y="{}" text-anchor="middle" font-size="15">{}</text>"#,
            c((x0 + x1) / 2.0),
            c(TOP - 14.0),
            escape(title)
        );
        let _ = writeln!(
            b,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            c((x0 + x1) / 2.0),
            c(HEIGHT - 12.0),
            escape(x_label)
        );
        let (lx, ly) = (18.0, (y0 + y1) / 2.0);
        let _ = writeln!(
            b,
            r#"<text x="{}" y="{}" text-anchor="middle" transform="rotate(-90 {} {})">{}</text>"#,
            c(lx),
            c(ly),
            c(lx),
            c(ly),
            escape(y_label)
        );
        let _ = writeln!(b, "</g>");
    }

    fn legend(&mut self, entries: &[(&str, &str)]) {
        let b = &mut self.buf;
        let x = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            b,
            r#"<g class="legend" font-family="sans-serif" font-size="11">"#
        );
        for (i, (name, color)) in entries.iter().enumerate() {
            let y = TOP + 8.0 + 15.0 * i as f64;
            let _ = writeln!(
                b,
                r##"<rect x="{}" y="{}" width="10" height="10" fill="{color}" stroke="#000000" stroke-width="0.5"/>"##,
                c(x),
                c(y - 8.0)
            );
            let _ = writeln!(
                b,
                r##"<text x="{}" y="{}" fill="#000000">{}</text>"##,
                c(x + 15.0),
                c(y + 1.0),
                escape(name)
            );
        }
        let _ = writeln!(b, "</g>");
    }

    fn finish(mut self) -> String {
        self.buf.push_str("</svg>\n");
        self.buf
    }
}

/// Disconnected points.
#[derive(Clone, Debug)]
pub struct Points {
    pub name: String,
    pub color: String,
    pub data: Vec<(i64, i64)>,
}

/// A polyline through integer samples, clipped to the plot box.
#[derive(Clone, Debug)]
pub struct Curve {
    pub name: String,
    pub color: String,
    pub data: Vec<(i64, i64)>,
}

#[derive(Clone, Debug)]
pub struct Chart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub x: Range,
    pub y: Range,
    pub curves: Vec<Curve>,
    pub points: Vec<Points>,
}

impl Chart {
    pub fn to_svg(&self) -> String {
        let frame = Frame {
            x: self.x,
            y: self.y,
            pad: 0.0,
        };
        let mut doc = Doc::new(&self.title, &frame);
        {
            let b = &mut doc.buf;
            let _ = writeln!(b, r#"<g clip-path="url(#plot-area)">"#);
            for curve in &self.curves {
                let pts: Vec<String> = curve
                    .data
                    .iter()
                    .map(|&(x, y)| format!("{},{}", c(frame.px(x as f64)), c(frame.py(y as f64))))
                    .collect();
                let _ = writeln!(
                    b,
                    r#"<polyline class="curve" data-name="{}" fill="none" stroke="{}" stroke-width="1.2" points="{}"/>"#,
                    escape(&curve.name),
                    curve.color,
                    pts.join(" ")
                );
            }
            for series in &self.points {
                let _ = writeln!(
                    b,
                    r#"<g class="points" data-name="{}" fill="{}">"#,
                    escape(&series.name),
                    series.color
                );
                for &(x, y) in &series.data {
                    let _ = writeln!(
                        b,
                        r#"<circle cx="{}" cy="{}" r="2.20"/>"#,
                        c(frame.px(x as f64)),
                        c(frame.py(y as f64))
                    );
                }
                let _ = writeln!(b, "</g>");
            }
            let _ = writeln!(b, "</g>");
        }
        doc.axes(&frame, &self.title, &self.x_label, &self.y_label);
        let legend: Vec<(&str, &str)> = self
            .points
            .iter()
            .map(|p| (p.name.as_str(), p.color.as_str()))
            .chain(
                self.curves
                    .iter()
                    .map(|c| (c.name.as_str(), c.color.as_str())),
            )
            .collect();
        doc.legend(&legend);
        doc.finish()
    }
}

/// A grid of colored cells; `colors[i][j]` is the cell at `x.lo + i`, `y.lo + j`.
#[derive(Clone, Debug)]
pub struct Heatmap {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub x: Range,
    pub y: Range,
    pub colors: Vec<Vec<String>>,
    pub legend: Vec<(String, String)>,
}

impl Heatmap {
    /// Horizontal runs of equal color are merged into one `rect` per run;
    /// `data-y` and `data-x` (`lo:hi`) name the cells a run covers.
    pub fn to_svg(&self) -> String {
        let frame = Frame {
            x: self.x,
            y: self.y,
            pad: 0.5,
        };
        let mut doc = Doc::new(&self.title, &frame);
        {
            let b = &mut doc.buf;
            let _ = writeln!(b, r#"<g class="cells" shape-rendering="crispEdges">"#);
            let columns = self.colors.len();
            let rows = (self.y.hi - self.y.lo + 1) as usize;
            for j in 0..rows {
                let y = self.y.lo + j as i64;
                let (top, bottom) = (frame.py(y as f64 + 0.5), frame.py(y as f64 - 0.5));
                let mut i = 0;
                while i < columns {
                    let color = &self.colors[i][j];
                    let mut end = i;
                    while end + 1 < columns && &self.colors[end + 1][j] == color {
                        end += 1;
                    }
                    let (x_lo, x_hi) = (self.x.lo + i as i64, self.x.lo + end as i64);
                    let (left, right) = (frame.px(x_lo as f64 - 0.5), frame.px(x_hi as f64 + 0.5));
                    let _ = writeln!(
                        b,
                        r#"<rect data-y="{y}" data-x="{x_lo}:{x_hi}" x="{}" y="{}" width="{}" height="{}" fill="{color}"/>"#,
                        c(left),
                        c(top),
                        c(right - left),
                        c(bottom - top)
                    );
                    i = end + 1;
                }
            }
            let _ = writeln!(b, "</g>");
        }
        doc.axes(&frame, &self.title, &self.x_label, &self.y_label);
        let legend: Vec<(&str, &str)> = self
            .legend
            .iter()
            .map(|(n, c)| (n.as_str(), c.as_str()))
            .collect();
        doc.legend(&legend);
        doc.finish()
    }
}
