//! Deterministic SVG rendering of arc diagrams.
//!
//! Vertices sit as labeled dots on a horizontal baseline with arcs drawn as
//! half-ellipses above it, higher for wider arcs. In extended mode every
//! opener receives a half-arc from the left canvas edge and every closer one
//! to the right edge; the half-arcs on each side are nested quarter-ellipses
//! fanned by opener/closer rank, so they never cross each other. Identical
//! specs produce byte-identical documents.

use std::fmt::Write as _;

use arcstat::{Arc, PerfectMatching, SetPartition};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RenderError {
    #[error("highlighting pair types requires a perfect matching")]
    HighlightNeedsMatching,
    #[error("canvas {0}x{1} is too small to draw on")]
    CanvasTooSmall(u32, u32),
}

/// The object being drawn.
#[derive(Debug, Clone)]
pub enum RenderObject {
    Partition(SetPartition),
    Matching(PerfectMatching),
}

impl RenderObject {
    fn ground_size(&self) -> usize {
        match self {
            RenderObject::Partition(p) => p.ground_size(),
            RenderObject::Matching(m) => m.ground_size(),
        }
    }

    fn arcs(&self) -> Vec<Arc> {
        match self {
            RenderObject::Partition(p) => p.arcs(),
            RenderObject::Matching(m) => m.arcs().to_vec(),
        }
    }

    fn openers(&self) -> Vec<usize> {
        match self {
            RenderObject::Partition(p) => p.openers(),
            RenderObject::Matching(m) => m.openers(),
        }
    }

    fn closers(&self) -> Vec<usize> {
        match self {
            RenderObject::Partition(p) => p.closers(),
            RenderObject::Matching(m) => m.closers(),
        }
    }
}

/// Which pair type to emphasize (matchings only).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Crossings,
    Nestings,
    Alignments,
}

/// A full description of one drawing; rendering is a pure function of it.
#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub object: RenderObject,
    pub extended: bool,
    pub width: u32,
    pub height: u32,
    pub highlight: Option<PairKind>,
}

const MARGIN: f64 = 48.0;
const DOT_RADIUS: f64 = 3.5;
const ARC_COLOR: &str = "#222222";
const HALF_ARC_COLOR: &str = "#c0392b";
const HIGHLIGHT_COLOR: &str = "#1565c0";

/// Renders the spec to an SVG 1.1 document.
pub fn render_svg(spec: &RenderSpec) -> Result<String, RenderError> {
    if spec.width < 160 || spec.height < 120 {
        return Err(RenderError::CanvasTooSmall(spec.width, spec.height));
    }
    if spec.highlight.is_some() && matches!(spec.object, RenderObject::Partition(_)) {
        return Err(RenderError::HighlightNeedsMatching);
    }

    let n = spec.object.ground_size();
    let arcs = spec.object.arcs();
    let width = f64::from(spec.width);
    let height = f64::from(spec.height);
    let baseline = height - 44.0;
    let x_of = |v: usize| -> f64 {
        if n <= 1 {
            width / 2.0
        } else {
            MARGIN + (v - 1) as f64 * (width - 2.0 * MARGIN) / (n - 1) as f64
        }
    };

    let highlighted = highlighted_arcs(spec, &arcs);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width,
        h = spec.height,
    );
    let _ = writeln!(svg, r#"<g fill="none" stroke-linecap="round">"#);

    // full arcs as half-ellipses, height proportional to width
    let max_rx = arcs
        .iter()
        .map(|a| (x_of(a.hi) - x_of(a.lo)) / 2.0)
        .fold(0.0_f64, f64::max);
    let vertical_room = baseline - 16.0;
    let squash = if max_rx > vertical_room {
        vertical_room / max_rx
    } else {
        1.0
    };
    for (i, arc) in arcs.iter().enumerate() {
        let x1 = x_of(arc.lo);
        let x2 = x_of(arc.hi);
        let rx = (x2 - x1) / 2.0;
        let ry = rx * squash;
        let (color, stroke_width) = if highlighted.contains(&i) {
            (HIGHLIGHT_COLOR, 2.5)
        } else {
            (ARC_COLOR, 1.5)
        };
        let _ = writeln!(
            svg,
            r#"<path class="arc" stroke="{color}" stroke-width="{stroke_width}" d="M {} {} A {} {} 0 0 1 {} {}"/>"#,
            fmt(x1),
            fmt(baseline),
            fmt(rx),
            fmt(ry),
            fmt(x2),
            fmt(baseline),
        );
    }

    if spec.extended {
        // openers leave to the left edge, the k-th smallest exiting k-th
        // lowest; closers mirror this on the right, largest lowest
        let openers = spec.object.openers();
        let closers = spec.object.closers();
        let fan = |count: usize| -> f64 {
            if count <= 1 {
                16.0
            } else {
                16.0_f64.min((baseline - 36.0) / (count - 1) as f64)
            }
        };
        let gap = fan(openers.len());
        for (rank, &opener) in openers.iter().enumerate() {
            let exit_y = baseline - 28.0 - rank as f64 * gap;
            let x = x_of(opener);
            let _ = writeln!(
                svg,
                r#"<path class="half-arc" stroke="{HALF_ARC_COLOR}" stroke-width="1.5" d="M {} {} A {} {} 0 0 0 {} {}"/>"#,
                fmt(x),
                fmt(baseline),
                fmt(x),
                fmt(baseline - exit_y),
                fmt(0.0),
                fmt(exit_y),
            );
        }
        let gap = fan(closers.len());
        for (rank, &closer) in closers.iter().rev().enumerate() {
            let exit_y = baseline - 28.0 - rank as f64 * gap;
            let x = x_of(closer);
            let _ = writeln!(
                svg,
                r#"<path class="half-arc" stroke="{HALF_ARC_COLOR}" stroke-width="1.5" d="M {} {} A {} {} 0 0 1 {} {}"/>"#,
                fmt(x),
                fmt(baseline),
                fmt(width - x),
                fmt(baseline - exit_y),
                fmt(width),
                fmt(exit_y),
            );
        }
    }

    let _ = writeln!(svg, "</g>");

    for v in 1..=n {
        let _ = writeln!(
            svg,
            r##"<circle class="vertex" cx="{}" cy="{}" r="{}" fill="#000000"/>"##,
            fmt(x_of(v)),
            fmt(baseline),
            fmt(DOT_RADIUS),
        );
    }
    for v in 1..=n {
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="13" text-anchor="middle">{v}</text>"#,
            fmt(x_of(v)),
            fmt(baseline + 20.0),
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

// indices of arcs involved in at least one pair of the requested kind
fn highlighted_arcs(spec: &RenderSpec, arcs: &[Arc]) -> Vec<usize> {
    let Some(kind) = spec.highlight else {
        return Vec::new();
    };
    if !matches!(spec.object, RenderObject::Matching(_)) {
        return Vec::new();
    }
    let mut marked = Vec::new();
    for (i, e) in arcs.iter().enumerate() {
        for (j, f) in arcs.iter().enumerate().skip(i + 1) {
            // arcs sorted by lo: e.lo < f.lo
            let is_kind = match kind {
                PairKind::Crossings => f.lo < e.hi && e.hi < f.hi,
                PairKind::Nestings => f.hi < e.hi,
                PairKind::Alignments => e.hi < f.lo,
            };
            if is_kind {
                if !marked.contains(&i) {
                    marked.push(i);
                }
                if !marked.contains(&j) {
                    marked.push(j);
                }
            }
        }
    }
    marked
}

fn fmt(value: f64) -> String {
    format!("{value:.1}")
}
