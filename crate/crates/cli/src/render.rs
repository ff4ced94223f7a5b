//! SVG drawing of the real part of an arrangement in the chart `z = 1`.

use std::fmt::Write as _;

use multinet_core::arrangement::{IncidenceLattice, MultiArrangement, ProjPoint};
use multinet_core::exactfield::CycloElem;

const SIZE: f64 = 600.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

/// `[x_min, x_max] × [y_min, y_max]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Default for Window {
    fn default() -> Self {
        Window {
            x0: -3.0,
            x1: 3.0,
            y0: -3.0,
            y1: 3.0,
        }
    }
}

impl std::str::FromStr for Window {
    type Err = String;

    /// `x0,x1,y0,y1`.
    fn from_str(s: &str) -> Result<Self, String> {
        let v: Vec<f64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|e| format!("bad window bound '{}': {e}", t.trim()))
            })
            .collect::<Result<_, _>>()?;
        if v.len() != 4 {
            return Err("window needs four numbers x0,x1,y0,y1".into());
        }
        if !(v[0] < v[1] && v[2] < v[3]) || v.iter().any(|x| !x.is_finite()) {
            return Err("window bounds must be finite with x0 < x1 and y0 < y1".into());
        }
        Ok(Window {
            x0: v[0],
            x1: v[1],
            y0: v[2],
            y1: v[3],
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rendered {
    pub svg: String,
    /// Labels of the drawn lines.
    pub segments: Vec<String>,
    /// Points of multiplicity at least three that were marked.
    pub marked_points: usize,
    pub omitted_nonreal: usize,
    pub omitted_outside: usize,
    pub at_infinity: bool,
    pub warnings: Vec<String>,
}

fn real(c: &CycloElem) -> Option<f64> {
    c.is_real().then(|| c.embed_complex(53).re)
}

fn real_triple(c: &[CycloElem; 3]) -> Option<[f64; 3]> {
    Some([real(&c[0])?, real(&c[1])?, real(&c[2])?])
}

/// Finite real affine coordinates of a point, if it has them.
fn affine(p: &ProjPoint) -> Option<(f64, f64)> {
    let [x, y, z] = real_triple(p.coords())?;
    (z != 0.0 && !p.coords()[2].is_zero()).then(|| (x / z, y / z))
}

/// Clips `a x + b y + c = 0` to the window.
fn clip(a: f64, b: f64, c: f64, w: &Window) -> Option<((f64, f64), (f64, f64))> {
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let eps = 1e-12;
    if b.abs() > eps {
        for x in [w.x0, w.x1] {
            let y = -(a * x + c) / b;
            if y >= w.y0 - eps && y <= w.y1 + eps {
                pts.push((x, y));
            }
        }
    }
    if a.abs() > eps {
        for y in [w.y0, w.y1] {
            let x = -(b * y + c) / a;
            if x >= w.x0 - eps && x <= w.x1 + eps {
                pts.push((x, y));
            }
        }
    }
    pts.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    let (first, last) = (*pts.first()?, *pts.last()?);
    let d = (first.0 - last.0).hypot(first.1 - last.1);
    (d > eps).then_some((first, last))
}

pub fn render(
    arr: &MultiArrangement,
    lat: &IncidenceLattice,
    window: &Window,
    classes: Option<&[Vec<usize>]>,
) -> Result<Rendered, String> {
    let lines = arr
        .lines()
        .map_err(|_| "abstract arrangements cannot be drawn".to_string())?;
    let sx = |x: f64| (x - window.x0) / (window.x1 - window.x0) * SIZE;
    let sy = |y: f64| (window.y1 - y) / (window.y1 - window.y0) * SIZE;
    let color = |l: usize| -> &'static str {
        classes
            .and_then(|cs| cs.iter().position(|c| c.contains(&l)))
            .map_or("#333333", |i| PALETTE[i % PALETTE.len()])
    };
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    let mut segments = Vec::new();
    let (mut nonreal, mut outside) = (0, 0);
    let mut at_infinity = false;
    for (i, l) in lines.iter().enumerate() {
        let Some([a, b, c]) = real_triple(l.coeffs()) else {
            nonreal += 1;
            continue;
        };
        if a == 0.0 && b == 0.0 {
            at_infinity = true;
            continue;
        }
        let Some(((x0, y0), (x1, y1))) = clip(a, b, c, window) else {
            outside += 1;
            continue;
        };
        let _ = writeln!(
            svg,
            r#"<line class="arr-line" data-label="{}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{}" stroke-width="2"/>"#,
            l.label(),
            sx(x0),
            sy(y0),
            sx(x1),
            sy(y1),
            color(i)
        );
        // label near the end of the segment, multiplicity when above one
        let m = arr.multiplicities()[i];
        let text = if m > 1 {
            m.to_string()
        } else {
            l.label().to_string()
        };
        let (tx, ty) = (x0 + 0.92 * (x1 - x0), y0 + 0.92 * (y1 - y0));
        let class = if m > 1 { "mult" } else { "label" };
        let _ = writeln!(
            svg,
            r#"<text class="{class}" x="{:.3}" y="{:.3}" font-size="14" fill="{}">{}</text>"#,
            sx(tx) + 4.0,
            sy(ty) - 4.0,
            color(i),
            text
        );
        segments.push(l.label().to_string());
    }
    let mut marked = 0;
    for p in lat.points() {
        if p.multiplicity() < 3 {
            continue;
        }
        let Some((x, y)) = p.coords.as_ref().and_then(affine) else {
            continue;
        };
        if x < window.x0 || x > window.x1 || y < window.y0 || y > window.y1 {
            continue;
        }
        let _ = writeln!(
            svg,
            r#"<circle class="point" cx="{:.3}" cy="{:.3}" r="5" fill="black"/>"#,
            sx(x),
            sy(y)
        );
        marked += 1;
    }
    svg.push_str("</svg>\n");
    let mut warnings = Vec::new();
    if nonreal > 0 {
        warnings.push(format!("{nonreal} non-real lines omitted"));
    }
    if at_infinity {
        warnings.push("the line at infinity is not drawn".to_string());
    }
    if outside > 0 {
        warnings.push(format!("{outside} lines miss the window"));
    }
    Ok(Rendered {
        svg,
        segments,
        marked_points: marked,
        omitted_nonreal: nonreal,
        omitted_outside: outside,
        at_infinity,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clip_diagonal() {
        let w = Window::default();
        let ((x0, y0), (x1, y1)) = clip(1.0, -1.0, 0.0, &w).unwrap();
        assert_eq!((x0, y0, x1, y1), (-3.0, -3.0, 3.0, 3.0));
        assert!(clip(1.0, 0.0, -5.0, &w).is_none());
    }

    #[test]
    fn window_parse() {
        assert_eq!("-1,1,-2,2".parse::<Window>().unwrap().y1, 2.0);
        assert!("1,0,0,1".parse::<Window>().is_err());
        assert!("1,2,3".parse::<Window>().is_err());
    }
}
