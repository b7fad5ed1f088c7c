//! DOT and SVG renderings with fixed positions.
//!
//! Grid points and apexes sit at their positions in the plane; other
//! vertices are spread evenly on a circle in label order.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt::Write;

use crate::document::{DocKind, GraphDocument, Label};

/// Position of every vertex, in plane units.
pub fn layout(doc: &GraphDocument) -> BTreeMap<&Label, (f64, f64)> {
    let loose: Vec<&Label> = doc.vertices.iter().filter(|v| v.vertex().is_none()).collect();
    let radius = (loose.len() as f64 / TAU).max(1.0);
    let mut pos = BTreeMap::new();
    for v in &doc.vertices {
        if let Some(p) = v.vertex() {
            pos.insert(v, p.cartesian());
        }
    }
    let count = loose.len() as f64;
    for (i, v) in loose.into_iter().enumerate() {
        let angle = TAU * i as f64 / count;
        pos.insert(v, (radius * angle.cos(), radius * angle.sin()));
    }
    pos
}

/// Fixed-precision coordinate without a negative zero.
fn coord(x: f64) -> String {
    let s = format!("{:.4}", x);
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn display_names(doc: &GraphDocument) -> BTreeMap<&Label, &str> {
    doc.labels.iter().map(|(name, v)| (v, name.as_str())).collect()
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn emit_dot(doc: &GraphDocument) -> String {
    let directed = doc.kind == DocKind::Oriented;
    let (keyword, link) = if directed { ("digraph", "->") } else { ("graph", "--") };
    let pos = layout(doc);
    let names = display_names(doc);
    let mut out = String::new();
    writeln!(out, "{keyword} trigrid {{").unwrap();
    writeln!(out, "  node [shape=circle, fixedsize=true, width=0.3, fontsize=10];").unwrap();
    for v in &doc.vertices {
        let (x, y) = pos[v];
        let text = names.get(v).copied().unwrap_or(v.as_str());
        writeln!(
            out,
            "  \"{}\" [label=\"{}\", pos=\"{},{}!\"];",
            escape(v.as_str()),
            escape(text),
            coord(x),
            coord(y)
        )
        .unwrap();
    }
    let links = if directed { &doc.arcs } else { &doc.edges };
    for (a, b) in links {
        writeln!(out, "  \"{}\" {link} \"{}\";", escape(a.as_str()), escape(b.as_str())).unwrap();
    }
    out.push_str("}\n");
    out
}

const SCALE: f64 = 80.0;
const MARGIN: f64 = 30.0;
const NODE_RADIUS: f64 = 5.0;

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Straight lines and dots on the DOT layout, arrowheads for arcs.
pub fn emit_svg(doc: &GraphDocument) -> String {
    let directed = doc.kind == DocKind::Oriented;
    let pos = layout(doc);
    let names = display_names(doc);
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(&(x, y)) = pos.values().next() {
        (min_x, min_y, max_x, max_y) = (x, y, x, y);
    }
    for &(x, y) in pos.values() {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    let width = (max_x - min_x) * SCALE + 2.0 * MARGIN;
    let height = (max_y - min_y) * SCALE + 2.0 * MARGIN;
    // SVG's y axis points down.
    let screen = |(x, y): (f64, f64)| ((x - min_x) * SCALE + MARGIN, (max_y - y) * SCALE + MARGIN);
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        coord(width),
        coord(height),
        coord(width),
        coord(height)
    )
    .unwrap();
    if directed {
        out.push_str(
            "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" \
             markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\
             <path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n",
        );
    }
    let links = if directed { &doc.arcs } else { &doc.edges };
    for (a, b) in links {
        let (x1, y1) = screen(pos[a]);
        let (x2, y2) = screen(pos[b]);
        // Stop short of the head so the arrowhead stays visible.
        let len = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt().max(1e-9);
        let trim = if directed { NODE_RADIUS / len } else { 0.0 };
        let (ex, ey) = (x2 - (x2 - x1) * trim, y2 - (y2 - y1) * trim);
        write!(
            out,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"",
            coord(x1),
            coord(y1),
            coord(ex),
            coord(ey)
        )
        .unwrap();
        if directed {
            out.push_str(" marker-end=\"url(#arrow)\"");
        }
        out.push_str("/>\n");
    }
    for v in &doc.vertices {
        let (x, y) = screen(pos[v]);
        let fill = if v.vertex().is_some_and(|p| p.is_apex()) { "white" } else { "black" };
        writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{NODE_RADIUS}\" fill=\"{fill}\" stroke=\"black\"/>",
            coord(x),
            coord(y)
        )
        .unwrap();
        let text = names.get(v).copied().unwrap_or(v.as_str());
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"10\">{}</text>",
            coord(x + 7.0),
            coord(y - 7.0),
            xml_escape(text)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
