//! SVG diagrams of reflexive polygons.
//!
//! This is the only place floating point appears. Lattice coordinates map to
//! the fixed 400x400 viewBox by `x' = 200 + s x`, `y' = 200 - s y` with
//! `s = 160 / max |vertex coordinate|`, printed with six decimals. Every marked
//! point also carries its exact coordinates in a `data-exact` attribute.

use std::fmt::Write as _;

use num_traits::Signed;
use toriclogk::rational::{fmt_rat, to_f64, Rat};
use toriclogk::{q_beta, Error, LatticePolytope, RatVec};

const SIZE: f64 = 400.0;
const HALF: f64 = 200.0;
const REACH: f64 = 160.0;

struct Frame {
    scale: f64,
}

impl Frame {
    fn x(&self, v: &RatVec) -> String {
        format!("{:.6}", HALF + self.scale * to_f64(&v[0]))
    }

    fn y(&self, v: &RatVec) -> String {
        format!("{:.6}", HALF - self.scale * to_f64(&v[1]))
    }

    fn xy(&self, v: &RatVec) -> String {
        format!("{},{}", self.x(v), self.y(v))
    }
}

fn exact(v: &RatVec) -> String {
    v.coords().iter().map(fmt_rat).collect::<Vec<_>>().join(",")
}

/// Vertices in boundary order, walking from facet to adjacent facet.
fn boundary_cycle(p: &LatticePolytope) -> Vec<usize> {
    let m = p.vertices().len();
    let edges: Vec<[usize; 2]> = (0..p.facets().len())
        .map(|f| {
            let v = p.facet_vertices(f);
            [v[0], v[1]]
        })
        .collect();
    let mut order = vec![0];
    let mut prev = usize::MAX;
    while order.len() < m {
        let cur = *order.last().unwrap();
        let next = edges
            .iter()
            .find_map(|e| match *e {
                [a, b] if a == cur && b != prev => Some(b),
                [a, b] if b == cur && a != prev => Some(a),
                _ => None,
            })
            .expect("polygon boundary is a cycle");
        prev = cur;
        order.push(next);
    }
    order
}

fn marker(out: &mut String, frame: &Frame, id: &str, label: &str, v: &RatVec, fill: &str) {
    writeln!(
        out,
        r#"  <circle id="{id}" cx="{}" cy="{}" r="4" fill="{fill}" data-exact="{}"/>"#,
        frame.x(v),
        frame.y(v),
        exact(v)
    )
    .unwrap();
    writeln!(
        out,
        r#"  <text x="{:.6}" y="{:.6}" font-size="12" font-family="sans-serif">{label}</text>"#,
        HALF + frame.scale * to_f64(&v[0]) + 6.0,
        HALF - frame.scale * to_f64(&v[1]) - 6.0
    )
    .unwrap();
}

/// Polygon, axes, lattice points, facet normals, and the points `O`, `P_c`, `Q`
/// and (with `beta`) `Q_beta`.
pub fn render_svg(p: &LatticePolytope, beta: Option<&Rat>) -> Result<String, Error> {
    if p.dim() != 2 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    let extent = p
        .vertices()
        .iter()
        .flat_map(|v| v.coords().iter().map(|c| to_f64(&c.abs())))
        .fold(1.0f64, f64::max);
    let frame = Frame {
        scale: REACH / extent,
    };
    let pc = p.barycenter().clone();
    let q = if !pc.is_zero() && p.origin_is_interior() {
        let d = -&pc;
        Some(d.scale(&p.ray_exit_scale(&d)?))
    } else {
        None
    };
    let qb = match beta {
        Some(b) if !pc.is_zero() => Some(q_beta(p, b)?),
        _ => None,
    };

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        "<!-- toriclogk polygon diagram: x' = {HALF} + s*x, y' = {HALF} - s*y, s = {REACH}/{extent} = {:.6}; coordinates rounded to 6 decimals -->",
        frame.scale
    )
    .unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    )
    .unwrap();
    writeln!(
        s,
        r##"  <defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="#555"/></marker></defs>"##
    )
    .unwrap();
    writeln!(
        s,
        r##"  <g id="axes" stroke="#bbb" stroke-width="1"><line x1="0" y1="{HALF}" x2="{SIZE}" y2="{HALF}"/><line x1="{HALF}" y1="0" x2="{HALF}" y2="{SIZE}"/></g>"##
    )
    .unwrap();

    let cycle = boundary_cycle(p);
    let points: Vec<String> = cycle.iter().map(|&i| frame.xy(&p.vertices()[i])).collect();
    writeln!(
        s,
        r##"  <polygon id="polytope" points="{}" fill="#eef3fb" stroke="#1f4e9c" stroke-width="2"/>"##,
        points.join(" ")
    )
    .unwrap();

    writeln!(s, r##"  <g id="lattice" fill="#1f4e9c">"##).unwrap();
    for pt in p.lattice_points(1) {
        writeln!(s, r#"    <circle cx="{}" cy="{}" r="1.5"/>"#, frame.x(&pt), frame.y(&pt)).unwrap();
    }
    writeln!(s, "  </g>").unwrap();

    writeln!(s, r##"  <g id="normals" stroke="#555" stroke-width="1.2">"##).unwrap();
    let arrow = Rat::new(2.into(), 5.into());
    for (i, f) in p.facets().iter().enumerate() {
        let vs = p.facet_vertices(i);
        let mid = (&p.vertices()[vs[0]] + &p.vertices()[vs[1]]).scale(&Rat::new(1.into(), 2.into()));
        let tip = &mid + &f.normal_vec().scale(&arrow);
        writeln!(
            s,
            r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" marker-end="url(#arrow)" data-normal="{}"/>"#,
            frame.x(&mid),
            frame.y(&mid),
            frame.x(&tip),
            frame.y(&tip),
            exact(&f.normal_vec())
        )
        .unwrap();
    }
    writeln!(s, "  </g>").unwrap();

    if let Some(q) = &q {
        writeln!(
            s,
            r##"  <line id="ray" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#c0392b" stroke-dasharray="4 3"/>"##,
            frame.x(&pc),
            frame.y(&pc),
            frame.x(q),
            frame.y(q)
        )
        .unwrap();
    }
    marker(&mut s, &frame, "O", "O", &RatVec::zeros(2), "#000");
    marker(&mut s, &frame, "Pc", "P_c", &pc, "#c0392b");
    if let Some(q) = &q {
        marker(&mut s, &frame, "Q", "Q", q, "#8e44ad");
    }
    if let (Some(qb), Some(b)) = (&qb, beta) {
        marker(&mut s, &frame, "Qbeta", &format!("Q_{{{}}}", fmt_rat(b)), qb, "#27ae60");
    }
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}
