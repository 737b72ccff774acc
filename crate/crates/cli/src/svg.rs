//! SVG rendering of a Newton polygon: vertices, compact edges, axis rays and
//! per-edge inclination labels. Purely presentational; layout rounding uses
//! integer arithmetic on the exact rational coordinates.

use njp_core::rat::{fmt_rat, rat, BigRat};
use njp_core::Polygon;
use num_traits::{One, ToPrimitive, Zero};

const CANVAS: i64 = 520;
const MARGIN: i64 = 40;

/// Pixel coordinate of a rational value under `unit` pixels per axis unit.
fn px(value: &BigRat, unit: &BigRat) -> i64 {
    let scaled = value * unit;
    // Round to nearest integer pixel.
    let rounded = (scaled + BigRat::new(1.into(), 2.into())).floor();
    rounded.to_integer().to_i64().unwrap_or(0)
}

pub fn render(polygon: &Polygon) -> String {
    // Vertex chain anchored at (0, ht); the same anchoring is used for
    // drawing even when the polygon does not touch the vertical axis.
    let height = polygon.height();
    let mut vertices = vec![(BigRat::zero(), height.clone())];
    {
        let mut x = BigRat::zero();
        let mut y = height.clone();
        for t in polygon.canonical_terms() {
            x += t.l();
            y -= t.m();
            vertices.push((x.clone(), y.clone()));
        }
    }
    let width = polygon.width();
    let span = if width > height { width.clone() } else { height.clone() };
    let span = if span.is_zero() { BigRat::one() } else { span };
    let unit = rat(CANVAS - 2 * MARGIN) / span;

    let xpix = |v: &BigRat| MARGIN + px(v, &unit);
    let ypix = |v: &BigRat| CANVAS - MARGIN - px(v, &unit);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {CANVAS} {CANVAS}\" \
         font-family=\"monospace\" font-size=\"13\">\n"
    ));
    // Coordinate axes.
    out.push_str(&format!(
        "  <line x1=\"{m}\" y1=\"{m}\" x2=\"{m}\" y2=\"{b}\" stroke=\"#999\"/>\n",
        m = MARGIN,
        b = CANVAS - MARGIN
    ));
    out.push_str(&format!(
        "  <line x1=\"{m}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"#999\"/>\n",
        m = MARGIN,
        b = CANVAS - MARGIN,
        r = CANVAS - MARGIN
    ));

    // Infinite sides of the polygon: vertical ray up from the first vertex,
    // horizontal ray right from the last.
    let first = &vertices[0];
    let last = vertices.last().unwrap();
    out.push_str(&format!(
        "  <line x1=\"{x}\" y1=\"{y}\" x2=\"{x}\" y2=\"{top}\" stroke=\"#444\" stroke-dasharray=\"6 4\"/>\n",
        x = xpix(&first.0),
        y = ypix(&first.1),
        top = MARGIN / 2
    ));
    out.push_str(&format!(
        "  <line x1=\"{x}\" y1=\"{y}\" x2=\"{right}\" y2=\"{y}\" stroke=\"#444\" stroke-dasharray=\"6 4\"/>\n",
        x = xpix(&last.0),
        y = ypix(&last.1),
        right = CANVAS - MARGIN / 2
    ));

    // Compact edges with inclination labels at the midpoints.
    for (pair, term) in vertices.windows(2).zip(polygon.canonical_terms()) {
        let (a, b) = (&pair[0], &pair[1]);
        out.push_str(&format!(
            "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#06c\" stroke-width=\"2\"/>\n",
            x1 = xpix(&a.0),
            y1 = ypix(&a.1),
            x2 = xpix(&b.0),
            y2 = ypix(&b.1)
        ));
        let half = BigRat::new(1.into(), 2.into());
        let mx = (&a.0 + &b.0) * &half;
        let my = (&a.1 + &b.1) * &half;
        out.push_str(&format!(
            "  <text x=\"{x}\" y=\"{y}\" fill=\"#06c\">{label}</text>\n",
            x = xpix(&mx) + 8,
            y = ypix(&my) - 6,
            label = fmt_rat(&term.inclination())
        ));
    }

    // Vertices with coordinate labels.
    for (x, y) in &vertices {
        out.push_str(&format!(
            "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"3.5\" fill=\"#c22\"/>\n",
            cx = xpix(x),
            cy = ypix(y)
        ));
        out.push_str(&format!(
            "  <text x=\"{tx}\" y=\"{ty}\" fill=\"#c22\">({xl},{yl})</text>\n",
            tx = xpix(x) + 6,
            ty = ypix(y) + 16,
            xl = fmt_rat(x),
            yl = fmt_rat(y)
        ));
    }
    out.push_str("</svg>\n");
    out
}
