//! Library half of the `arcstat` command-line tool: the SVG arc-diagram
//! renderer, kept separate from the binary so it can be tested directly.

pub mod render;
