//! Schematic SVG of a circle configuration: one marker per point labeled by
//! its multiplier, and one colored arc per gap labeled by its letter.
//!
//! Coordinates come from the exact positions rendered to decimals, then
//! formatted with fixed precision, so the same configuration always yields
//! byte-identical output.

use std::f64::consts::TAU;
use std::fmt::Write;

use thiserror::Error;
use threegap_core::{CircleConfig, Letter};

pub const DEFAULT_MAX_POINTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("{n} points exceed the rendering limit of {max}")]
    TooManyPoints { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Style {
    pub size: f64,
    pub radius: f64,
    pub max_points: usize,
}

impl Default for Style {
    fn default() -> Self {
        Self {
            size: 640.0,
            radius: 240.0,
            max_points: DEFAULT_MAX_POINTS,
        }
    }
}

fn color(letter: Letter) -> &'static str {
    match letter {
        Letter::A => "#1f77b4",
        Letter::B => "#2ca02c",
        Letter::C => "#d62728",
    }
}

fn multiplier_label(m: usize) -> String {
    match m {
        0 => "0".to_string(),
        1 => "α".to_string(),
        _ => format!("{m}α"),
    }
}

/// Position on the circle in turns, counter-clockwise from the positive x-axis.
fn at(style: &Style, turns: f64, r: f64) -> (f64, f64) {
    let c = style.size / 2.0;
    let theta = TAU * turns;
    (c + r * theta.cos(), c - r * theta.sin())
}

pub fn render_svg(config: &CircleConfig) -> Result<String, RenderError> {
    render_svg_with(config, &Style::default())
}

pub fn render_svg_with(config: &CircleConfig, style: &Style) -> Result<String, RenderError> {
    let n = config.n();
    if n > style.max_points {
        return Err(RenderError::TooManyPoints {
            n,
            max: style.max_points,
        });
    }
    // display only
    let turns: Vec<f64> = config.points().iter().map(|y| y.to_f64()).collect();
    let widths: Vec<f64> = config.gaps().iter().map(|g| g.to_f64()).collect();
    let r = style.radius;
    let font = if n > 60 { 8 } else { 12 };

    let mut svg = String::new();
    let s = style.size;
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s:.0}" height="{s:.0}" viewBox="0 0 {s:.0} {s:.0}">"#
    )
    .unwrap();
    writeln!(
        svg,
        r#"<title>N = {n}, alpha = {}, word {}</title>"#,
        config.alpha(),
        config.word()
    )
    .unwrap();
    writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    writeln!(svg, r#"<g class="arcs" fill="none" stroke-width="4">"#).unwrap();
    for (j, (&start, &width)) in turns.iter().zip(&widths).enumerate() {
        let letter = config.word().letters()[j];
        let end = start + width;
        let (x0, y0) = at(style, start, r);
        let (xm, ym) = at(style, start + width / 2.0, r);
        let (x1, y1) = at(style, end, r);
        // two half-arcs so a gap spanning the whole circle still draws
        writeln!(
            svg,
            r#"<path class="arc" stroke="{}" d="M {x0:.2} {y0:.2} A {r:.2} {r:.2} 0 0 0 {xm:.2} {ym:.2} A {r:.2} {r:.2} 0 0 0 {x1:.2} {y1:.2}"/>"#,
            color(letter)
        )
        .unwrap();
    }
    writeln!(svg, "</g>").unwrap();

    writeln!(
        svg,
        r#"<g class="arc-labels" font-family="serif" font-style="italic" font-size="{}" text-anchor="middle" dominant-baseline="middle">"#,
        font + 2
    )
    .unwrap();
    for (j, (&start, &width)) in turns.iter().zip(&widths).enumerate() {
        let letter = config.word().letters()[j];
        let (x, y) = at(style, start + width / 2.0, r - 18.0);
        writeln!(
            svg,
            r#"<text class="arc-label" x="{x:.2}" y="{y:.2}" fill="{}">{letter}</text>"#,
            color(letter)
        )
        .unwrap();
    }
    writeln!(svg, "</g>").unwrap();

    writeln!(
        svg,
        r#"<g class="points" font-family="serif" font-size="{font}" text-anchor="middle" dominant-baseline="middle">"#
    )
    .unwrap();
    for (&t, &m) in turns.iter().zip(config.visit()) {
        let (x, y) = at(style, t, r);
        let (lx, ly) = at(style, t, r + 20.0);
        writeln!(
            svg,
            r#"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/><text class="point-label" x="{lx:.2}" y="{ly:.2}">{}</text>"#,
            multiplier_label(m)
        )
        .unwrap();
    }
    writeln!(svg, "</g>").unwrap();
    svg.push_str("</svg>\n");
    Ok(svg)
}
