//! Direct tests of the SVG renderer.

use arcstat::{PerfectMatching, SetPartition};
use arcstat_cli::render::{render_svg, PairKind, RenderError, RenderObject, RenderSpec};

fn partition_spec(text: &str, n: usize, extended: bool) -> RenderSpec {
    RenderSpec {
        object: RenderObject::Partition(SetPartition::parse(text, n).unwrap()),
        extended,
        width: 640,
        height: 280,
        highlight: None,
    }
}

fn count(haystack: &str, needle: &str) -> usize {
    haystack.matches(needle).count()
}

#[test]
fn plain_diagram_has_one_path_per_arc_and_one_dot_per_vertex() {
    let svg = render_svg(&partition_spec("1378|26|45", 8, false)).unwrap();
    assert_eq!(count(&svg, r#"class="arc""#), 5);
    assert_eq!(count(&svg, r#"class="half-arc""#), 0);
    assert_eq!(count(&svg, r#"class="vertex""#), 8);
    assert_eq!(count(&svg, "<text"), 8);
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn extended_diagram_adds_two_half_arcs_per_block() {
    let svg = render_svg(&partition_spec("1378|26|45", 8, true)).unwrap();
    assert_eq!(count(&svg, r#"class="arc""#), 5);
    assert_eq!(count(&svg, r#"class="half-arc""#), 6);
}

#[test]
fn single_vertex_extended_diagram_renders() {
    let svg = render_svg(&partition_spec("1", 1, true)).unwrap();
    assert_eq!(count(&svg, r#"class="arc""#), 0);
    assert_eq!(count(&svg, r#"class="half-arc""#), 2);
    assert_eq!(count(&svg, r#"class="vertex""#), 1);
}

#[test]
fn rendering_is_deterministic() {
    let spec = partition_spec("1378|26|45", 8, true);
    assert_eq!(render_svg(&spec).unwrap(), render_svg(&spec).unwrap());
    // and sensitive to the spec
    let other = partition_spec("1378|26|45", 8, false);
    assert_ne!(render_svg(&spec).unwrap(), render_svg(&other).unwrap());
}

#[test]
fn highlight_marks_exactly_the_crossing_arcs() {
    let spec = RenderSpec {
        object: RenderObject::Matching(PerfectMatching::parse("1-3,2-4").unwrap()),
        extended: false,
        width: 320,
        height: 200,
        highlight: Some(PairKind::Crossings),
    };
    let svg = render_svg(&spec).unwrap();
    assert_eq!(count(&svg, "#1565c0"), 2);

    // the nested matching has no crossings, so nothing is emphasized
    let spec = RenderSpec {
        object: RenderObject::Matching(PerfectMatching::parse("1-4,2-3").unwrap()),
        extended: false,
        width: 320,
        height: 200,
        highlight: Some(PairKind::Crossings),
    };
    let svg = render_svg(&spec).unwrap();
    assert_eq!(count(&svg, "#1565c0"), 0);

    // ...but it is one nesting pair
    let spec = RenderSpec {
        highlight: Some(PairKind::Nestings),
        ..spec
    };
    let svg = render_svg(&spec).unwrap();
    assert_eq!(count(&svg, "#1565c0"), 2);
}

#[test]
fn highlight_rejects_partitions() {
    let spec = RenderSpec {
        highlight: Some(PairKind::Alignments),
        ..partition_spec("12|34", 4, false)
    };
    assert_eq!(render_svg(&spec), Err(RenderError::HighlightNeedsMatching));
}

#[test]
fn tiny_canvases_are_rejected() {
    let spec = RenderSpec {
        width: 10,
        height: 10,
        ..partition_spec("1", 1, false)
    };
    assert_eq!(render_svg(&spec), Err(RenderError::CanvasTooSmall(10, 10)));
}
