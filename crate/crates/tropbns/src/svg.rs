//! Circle plots of rank-two bounds. Output is pure string building
//! with fixed-precision coordinates, so identical inputs give
//! byte-identical files.

use crate::sigma::ArcSet;

const SIZE: f64 = 400.0;
const CX: f64 = 200.0;
const CY: f64 = 200.0;
const R: f64 = 140.0;
const RAY: f64 = 185.0;

fn fmt(v: f64) -> String {
    let v = if v.abs() < 5e-5 { 0.0 } else { v };
    format!("{:.4}", v)
}

fn unit(d: &[i64]) -> (f64, f64) {
    let (x, y) = (d[0] as f64, d[1] as f64);
    let n = (x * x + y * y).sqrt();
    (x / n, y / n)
}

/// Screen position of a direction at radius `r`; the vertical axis is
/// flipped so the picture uses the usual orientation.
fn at(d: &[i64], r: f64) -> (f64, f64) {
    let (x, y) = unit(d);
    (CX + r * x, CY - r * y)
}

fn angle(d: &[i64]) -> f64 {
    (d[1] as f64).atan2(d[0] as f64)
}

/// One figure: the unit circle in grey, the rays of the negated
/// tropical set in blue, the exact arcs in red, with hollow markers on
/// isolated excluded directions (blue for the bound, red for the arcs).
pub fn plot_circle(
    arcs: Option<&ArcSet>,
    trop_rays: &[Vec<i64>],
    bound_excluded: &[Vec<i64>],
) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
        SIZE as i64
    ));
    s.push_str(&format!(
        "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n",
        fmt(CX),
        fmt(CY),
        fmt(R)
    ));
    for d in trop_rays {
        let (x, y) = at(d, RAY);
        s.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#1f6feb\" stroke-width=\"1.5\"/>\n",
            fmt(CX),
            fmt(CY),
            fmt(x),
            fmt(y)
        ));
    }
    if let Some(a) = arcs {
        if a.full_circle {
            s.push_str(&format!(
                "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\"/>\n",
                fmt(CX),
                fmt(CY),
                fmt(R)
            ));
        }
        for arc in &a.arcs {
            let (sx, sy) = at(&arc.start, R);
            let (ex, ey) = at(&arc.end, R);
            let span = (angle(&arc.end) - angle(&arc.start)).rem_euclid(std::f64::consts::TAU);
            let large = if span > std::f64::consts::PI { 1 } else { 0 };
            // sweep 0: screen angles run backwards, so this traces the
            // arc counterclockwise in the plotted orientation
            s.push_str(&format!(
                "  <path d=\"M {} {} A {} {} 0 {} 0 {} {}\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n",
                fmt(sx),
                fmt(sy),
                fmt(R),
                fmt(R),
                large,
                fmt(ex),
                fmt(ey)
            ));
        }
        for d in &a.excluded {
            let (x, y) = at(d, R);
            s.push_str(&format!(
                "  <circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"#ffffff\" stroke=\"#d62728\" stroke-width=\"2\"/>\n",
                fmt(x),
                fmt(y)
            ));
        }
    }
    for d in bound_excluded {
        let (x, y) = at(d, R);
        s.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3.5\" fill=\"#ffffff\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n",
            fmt(x),
            fmt(y)
        ));
    }
    s.push_str("</svg>\n");
    s
}
