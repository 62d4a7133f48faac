//! Self-contained log-log SVG rendering of a count series.

use std::fmt::Write as _;

use fermat_bundle_core::enumerate::{CountClass, CountSeries};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 520.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 190.0;
const MARGIN_Y: f64 = 50.0;

fn color(class: CountClass) -> &'static str {
    match class {
        CountClass::All => "#000000",
        CountClass::InZ => "#d62728",
        CountClass::NotInZ => "#1f77b4",
        CountClass::InSomeV => "#2ca02c",
        CountClass::LiftableOnly => "#9467bd",
        CountClass::SingularFiber => "#ff7f0e",
    }
}

fn decades(lo: f64, hi: f64) -> Vec<i32> {
    (lo.floor() as i32..=hi.ceil() as i32).collect()
}

pub fn render_svg(series: &CountSeries) -> String {
    let xs: Vec<f64> = series.bounds.iter().map(|&b| (b as f64).log10()).collect();
    let ys: Vec<f64> = series
        .counts
        .values()
        .flatten()
        .filter(|&&c| c > 0)
        .map(|&c| (c as f64).log10())
        .collect();
    let (x_lo, x_hi) = span(&xs);
    let (y_lo, y_hi) = if ys.is_empty() { (0.0, 1.0) } else { span(&ys) };
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - 2.0 * MARGIN_Y;
    let px = |x: f64| MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let py = |y: f64| HEIGHT - MARGIN_Y - (y - y_lo) / (y_hi - y_lo) * plot_h;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let (left, right, top, bottom) = (
        MARGIN_LEFT,
        WIDTH - MARGIN_RIGHT,
        MARGIN_Y,
        HEIGHT - MARGIN_Y,
    );
    writeln!(s, r#"<polyline points="{left},{top} {left},{bottom} {right},{bottom}" fill="none" stroke="black"/>"#).unwrap();
    for d in decades(x_lo, x_hi) {
        let x = d as f64;
        if x < x_lo || x > x_hi {
            continue;
        }
        let p = px(x);
        writeln!(
            s,
            r#"<line x1="{p:.2}" y1="{bottom}" x2="{p:.2}" y2="{:.2}" stroke="black"/>"#,
            bottom + 5.0
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{p:.2}" y="{:.2}" text-anchor="middle">1e{d}</text>"#,
            bottom + 20.0
        )
        .unwrap();
    }
    for d in decades(y_lo, y_hi) {
        let y = d as f64;
        if y < y_lo || y > y_hi {
            continue;
        }
        let p = py(y);
        writeln!(
            s,
            r#"<line x1="{:.2}" y1="{p:.2}" x2="{left}" y2="{p:.2}" stroke="black"/>"#,
            left - 5.0
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">1e{d}</text>"#,
            left - 8.0,
            p + 4.0
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">height bound B</text>"#,
        (left + right) / 2.0,
        HEIGHT - 10.0
    )
    .unwrap();
    writeln!(s, r#"<text x="15" y="{:.2}" transform="rotate(-90 15 {:.2})" text-anchor="middle">N(B)</text>"#, (top + bottom) / 2.0, (top + bottom) / 2.0).unwrap();

    for (row, (class, counts)) in series.counts.iter().enumerate() {
        let points: Vec<String> = xs
            .iter()
            .zip(counts)
            .filter(|(_, &c)| c > 0)
            .map(|(&x, &c)| format!("{:.2},{:.2}", px(x), py((c as f64).log10())))
            .collect();
        if !points.is_empty() {
            writeln!(
                s,
                r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
                points.join(" "),
                color(*class)
            )
            .unwrap();
        }
        let ly = top + 20.0 * row as f64;
        let lx = right + 20.0;
        writeln!(
            s,
            r#"<line x1="{lx}" y1="{ly}" x2="{:.2}" y2="{ly}" stroke="{}" stroke-width="2"/>"#,
            lx + 25.0,
            color(*class)
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 32.0,
            ly + 4.0,
            class.label()
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

fn span(v: &[f64]) -> (f64, f64) {
    let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi - lo < 1e-9 {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}
