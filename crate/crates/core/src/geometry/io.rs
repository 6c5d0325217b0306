//! Drawing JSON (`{"n", "edges", "pos", "kind"}`) and SVG output.

use serde::{Deserialize, Serialize};

use super::{check_strict, classify_lengths, Drawing, DrawingKind, Point};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// On-disk drawing schema; fields serialize in declaration order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub pos: Vec<[f64; 2]>,
    pub kind: DrawingKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl DrawingJson {
    pub fn from_drawing(d: &Drawing, seed: Option<u64>) -> Self {
        DrawingJson {
            n: d.n(),
            edges: d.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            pos: d.pos.iter().map(|p| [p.x, p.y]).collect(),
            kind: d.kind,
            degenerate: Some(!check_strict(d, 1e-9)),
            seed,
        }
    }

    pub fn into_drawing(self) -> Result<Drawing> {
        let graph = Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        Drawing::new(graph, self.pos.iter().map(|p| Point::new(p[0], p[1])).collect(), self.kind)
    }
}

/// Newline-terminated JSON. The `degenerate` flag is recomputed with the
/// default tolerance; `seed` is included when given.
pub fn to_json(d: &Drawing, seed: Option<u64>) -> String {
    let mut s = serde_json::to_string(&DrawingJson::from_drawing(d, seed)).expect("drawing serializes");
    s.push('\n');
    s
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let before: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    before + column.saturating_sub(1)
}

pub fn parse_drawing(text: &str) -> Result<Drawing> {
    let raw: DrawingJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        offset: byte_offset(text, e.line(), e.column()),
        message: e.to_string(),
    })?;
    raw.into_drawing()
}

/// SVG 1.1 picture: edges coloured by length class (zero-length class red
/// and dashed), vertices as circles.
pub fn to_svg(d: &Drawing, rel_tol: f64) -> String {
    let classes = classify_lengths(d, rel_tol);
    let k = classes.count().max(1);
    let (mut lo, mut hi) = (Point::new(0.0, 0.0), Point::new(0.0, 0.0));
    if let Some(&p0) = d.pos.first() {
        lo = p0;
        hi = p0;
    }
    for p in &d.pos {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-12);
    let margin = 0.05 * span;
    let size = 600.0;
    let scale = size / (span + 2.0 * margin);
    let tx = |p: Point| ((p.x - lo.x + margin) * scale, (hi.y - p.y + margin) * scale);
    let w = (hi.x - lo.x + 2.0 * margin) * scale;
    let h = (hi.y - lo.y + 2.0 * margin) * scale;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"0 0 {w:.2} {h:.2}\">\n"
    ));
    s.push_str("<g stroke-width=\"1.5\" stroke-linecap=\"round\">\n");
    for (e, &(u, v)) in d.graph.edges().iter().enumerate() {
        let c = classes.class_of[e];
        let (x1, y1) = tx(d.pos[u]);
        let (x2, y2) = tx(d.pos[v]);
        let style = if Some(c) == classes.zero_class {
            "stroke=\"#ff0000\" stroke-dasharray=\"4 3\"".to_string()
        } else {
            format!("stroke=\"hsl({:.1},70%,45%)\"", 360.0 * c as f64 / k as f64)
        };
        s.push_str(&format!(
            "<line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" {style}><title>class {c}</title></line>\n"
        ));
    }
    s.push_str("</g>\n<g fill=\"#222\">\n");
    for (v, &p) in d.pos.iter().enumerate() {
        let (x, y) = tx(p);
        s.push_str(&format!("<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\"><title>{v}</title></circle>\n"));
    }
    s.push_str("</g>\n</svg>\n");
    s
}
