//! SVG drawing of a rectangular patch of the standard apartment.

use std::fmt::Write as _;

use g2_core::apartment::{euclidean, Root, VertexType};
use g2_core::arith::Rational;
use num_traits::ToPrimitive;

use crate::VertexRecord;

const SCALE: f64 = 80.0;
const MARGIN: f64 = 20.0;

fn f(q: &Rational) -> f64 {
    q.to_f64().expect("finite rational")
}

fn color(t: VertexType) -> &'static str {
    match t {
        VertexType::Type1 => "gold",
        VertexType::Type2 => "red",
        _ => "blue",
    }
}

/// Endpoints of `a·x + b·y + c = 0` inside `[x0, x1] × [y0, y1]`.
fn clip(
    a: f64,
    b: f64,
    c: f64,
    (x0, y0, x1, y1): (f64, f64, f64, f64),
) -> Option<((f64, f64), (f64, f64))> {
    const EPS: f64 = 1e-9;
    let mut pts: Vec<(f64, f64)> = Vec::new();
    if b.abs() > EPS {
        for x in [x0, x1] {
            let y = -(a * x + c) / b;
            if y >= y0 - EPS && y <= y1 + EPS {
                pts.push((x, y));
            }
        }
    }
    if a.abs() > EPS {
        for y in [y0, y1] {
            let x = -(b * y + c) / a;
            if x >= x0 - EPS && x <= x1 + EPS {
                pts.push((x, y));
            }
        }
    }
    pts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    pts.dedup_by(|p, q| (p.0 - q.0).abs() < EPS && (p.1 - q.1).abs() < EPS);
    match pts.as_slice() {
        [first, .., last] => Some((*first, *last)),
        _ => None,
    }
}

/// Renders the hyperplanes `⟨α, x⟩ + n = 0` and the given vertices, colored
/// gold, red and blue for types 1, 2 and 3.
pub fn render(
    x0: &Rational,
    y0: &Rational,
    x1: &Rational,
    y1: &Rational,
    vertices: &[VertexRecord],
) -> String {
    let rect = (f(x0), f(y0), f(x1), f(y1));
    let corners = [
        (rect.0, rect.1),
        (rect.0, rect.3),
        (rect.2, rect.1),
        (rect.2, rect.3),
    ]
    .map(|(x, y)| euclidean(x, y));
    let min_x = corners.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    let max_x = corners
        .iter()
        .map(|c| c.0)
        .fold(f64::NEG_INFINITY, f64::max);
    let min_y = corners.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    let max_y = corners
        .iter()
        .map(|c| c.1)
        .fold(f64::NEG_INFINITY, f64::max);
    let width = (max_x - min_x) * SCALE + 2.0 * MARGIN;
    let height = (max_y - min_y) * SCALE + 2.0 * MARGIN;
    let screen = |x: f64, y: f64| {
        let (ex, ey) = euclidean(x, y);
        ((ex - min_x) * SCALE + MARGIN, (max_y - ey) * SCALE + MARGIN)
    };

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(s, r#"<g stroke="gray" stroke-width="0.8">"#).unwrap();
    for root in Root::POSITIVE {
        // ⟨α, x⟩ = a·x + b·y for the point x·δ∨ + y·γ∨.
        let (a, b) = (
            (2 * root.m - 3 * root.n) as f64,
            (2 * root.n - root.m) as f64,
        );
        let values = [
            (rect.0, rect.1),
            (rect.0, rect.3),
            (rect.2, rect.1),
            (rect.2, rect.3),
        ]
        .map(|(x, y)| a * x + b * y);
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min).floor() as i64;
        let hi = values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
            .ceil() as i64;
        for n in -hi..=-lo {
            if let Some((p, q)) = clip(a, b, n as f64, rect) {
                let ((px, py), (qx, qy)) = (screen(p.0, p.1), screen(q.0, q.1));
                writeln!(
                    s,
                    r#"<line x1="{px:.2}" y1="{py:.2}" x2="{qx:.2}" y2="{qy:.2}"/>"#
                )
                .unwrap();
            }
        }
    }
    writeln!(s, "</g>").unwrap();
    for v in vertices {
        let (x, y) = (
            f(&v.x.parse().expect("rational")),
            f(&v.y.parse().expect("rational")),
        );
        let (cx, cy) = screen(x, y);
        writeln!(
            s,
            r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="4" fill="{}"><title>({}, {}) {} {}</title></circle>"#,
            color(v.vertex_type),
            v.x,
            v.y,
            v.vertex_type,
            v.order
        )
        .unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clipping() {
        let seg = clip(1.0, 0.0, 0.0, (-1.0, -1.0, 1.0, 1.0)).unwrap();
        assert_eq!(seg, ((0.0, -1.0), (0.0, 1.0)));
        assert!(clip(1.0, 0.0, -5.0, (-1.0, -1.0, 1.0, 1.0)).is_none());
    }
}
