//! Deterministic SVG rendering for dimensions one and two.
//!
//! Every pixel coordinate is an exactly rounded integer and every label is
//! an exact rational, so rendering the same input always produces the same
//! bytes. Dimensions above two are rejected.

use std::fmt::Write as _;

use cubeops_core::approximation::expansion;
use cubeops_core::geometry::Interval;
use cubeops_core::operad::{Configuration, LittleCube};
use cubeops_core::Rational;
use serde::Deserialize;

/// What to draw, as parsed from the CLI's JSON input file.
#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RenderInput {
    /// A configuration of labeled cubes inside the unit cube.
    Configuration { configuration: Configuration },
    /// Frames of the expansion path of `cube` away from `point`, one per
    /// listed time.
    Expansion { cube: LittleCube, point: Vec<Rational>, times: Vec<Rational> },
    /// A cubical support, shaded inside the unit cube; `None` draws the
    /// empty support.
    Support { dim: usize, rect: Option<Vec<Interval>> },
}

const MARGIN: i64 = 40;
const SPAN: i64 = 560;
const TRACK: i64 = 56;
const FRAME_GAP: i64 = 36;

fn px(origin: i64, r: &Rational, span: i64) -> i64 {
    origin + r.scaled_round_i64(span as u64)
}

fn py(origin: i64, r: &Rational, span: i64) -> i64 {
    origin + (Rational::one() - r).scaled_round_i64(span as u64)
}

fn header(width: i64, height: i64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width} {height}\" \
         width=\"{width}\" height=\"{height}\" font-family=\"monospace\" font-size=\"14\">\n"
    )
}

fn rect_el(out: &mut String, x: i64, y: i64, w: i64, h: i64, style: &str) {
    let _ = writeln!(out, "  <rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" {style}/>");
}

fn text_el(out: &mut String, x: i64, y: i64, body: &str) {
    let _ = writeln!(out, "  <text x=\"{x}\" y=\"{y}\" fill=\"#222\">{body}</text>");
}

const FRAME_STYLE: &str = "fill=\"none\" stroke=\"#222\" stroke-width=\"2\"";
const CUBE_STYLE: &str = "fill=\"#e8f0fe\" stroke=\"#1a55c0\" stroke-width=\"2\"";
const SUPPORT_STYLE: &str = "fill=\"#888\" fill-opacity=\"0.35\" stroke=\"#555\" stroke-width=\"1\"";

fn interval_label(iv: &Interval) -> String {
    format!("[{}, {}]", iv.lo(), iv.hi())
}

fn check_dim(dim: usize) -> Result<(), String> {
    match dim {
        1 | 2 => Ok(()),
        _ => Err(format!("rendering supports dimensions 1 and 2, got {dim}")),
    }
}

/// Renders the input to a complete SVG document.
pub fn render_svg(input: &RenderInput) -> Result<String, String> {
    match input {
        RenderInput::Configuration { configuration } => render_configuration(configuration),
        RenderInput::Expansion { cube, point, times } => render_expansion(cube, point, times),
        RenderInput::Support { dim, rect } => render_support(*dim, rect.as_deref()),
    }
}

fn render_configuration(config: &Configuration) -> Result<String, String> {
    check_dim(config.dim())?;
    if config.dim() == 1 {
        let height = 2 * MARGIN + TRACK + FRAME_GAP;
        let mut out = header(2 * MARGIN + SPAN, height);
        text_el(&mut out, MARGIN, MARGIN - 12, &format!("configuration, arity {}", config.arity()));
        rect_el(&mut out, MARGIN, MARGIN, SPAN, TRACK, FRAME_STYLE);
        for (i, cube) in config.cubes().iter().enumerate() {
            let side = cube.image().side(0).clone();
            let x0 = px(MARGIN, side.lo(), SPAN);
            let x1 = px(MARGIN, side.hi(), SPAN);
            rect_el(&mut out, x0, MARGIN + 6, x1 - x0, TRACK - 12, CUBE_STYLE);
            text_el(
                &mut out,
                x0 + 4,
                MARGIN + TRACK + 24,
                &format!("{i}: {}", interval_label(&side)),
            );
        }
        out.push_str("</svg>\n");
        return Ok(out);
    }

    let size = 2 * MARGIN + SPAN;
    let mut out = header(size, size + FRAME_GAP);
    text_el(&mut out, MARGIN, MARGIN - 12, &format!("configuration, arity {}", config.arity()));
    rect_el(&mut out, MARGIN, MARGIN, SPAN, SPAN, FRAME_STYLE);
    for (i, cube) in config.cubes().iter().enumerate() {
        let image = cube.image();
        let (sx, sy) = (image.side(0), image.side(1));
        let x0 = px(MARGIN, sx.lo(), SPAN);
        let x1 = px(MARGIN, sx.hi(), SPAN);
        let y0 = py(MARGIN, sy.hi(), SPAN);
        let y1 = py(MARGIN, sy.lo(), SPAN);
        rect_el(&mut out, x0, y0, x1 - x0, y1 - y0, CUBE_STYLE);
        text_el(&mut out, (x0 + x1) / 2 - 4, (y0 + y1) / 2 + 5, &i.to_string());
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn render_expansion(
    cube: &LittleCube,
    point: &[Rational],
    times: &[Rational],
) -> Result<String, String> {
    check_dim(cube.dim())?;
    if times.is_empty() {
        return Err("expansion rendering needs at least one time".to_string());
    }
    for time in times {
        if !time.in_unit() {
            return Err(format!("expansion time {time} lies outside [0, 1]"));
        }
    }
    let path = expansion(cube, point).map_err(|e| format!("invalid expansion input: {e}"))?;

    if cube.dim() == 1 {
        let row = TRACK + FRAME_GAP;
        let height = 2 * MARGIN + row * times.len() as i64;
        let mut out = header(2 * MARGIN + SPAN, height);
        for (k, time) in times.iter().enumerate() {
            let frame = path.at(time);
            let side = frame.image().side(0).clone();
            let y = MARGIN + row * k as i64;
            rect_el(&mut out, MARGIN, y, SPAN, TRACK, FRAME_STYLE);
            let x0 = px(MARGIN, side.lo(), SPAN);
            let x1 = px(MARGIN, side.hi(), SPAN);
            rect_el(&mut out, x0, y + 6, x1 - x0, TRACK - 12, CUBE_STYLE);
            let xp = px(MARGIN, &point[0], SPAN);
            let _ = writeln!(
                out,
                "  <line x1=\"{xp}\" y1=\"{y}\" x2=\"{xp}\" y2=\"{}\" \
                 stroke=\"#c01a1a\" stroke-width=\"2\"/>",
                y + TRACK
            );
            text_el(
                &mut out,
                MARGIN,
                y + TRACK + 24,
                &format!("t = {time}: {}", interval_label(&side)),
            );
        }
        out.push_str("</svg>\n");
        return Ok(out);
    }

    let small = 240i64;
    let step = small + MARGIN;
    let width = MARGIN + step * times.len() as i64;
    let height = 2 * MARGIN + small + FRAME_GAP;
    let mut out = header(width, height);
    for (k, time) in times.iter().enumerate() {
        let frame = path.at(time);
        let image = frame.image();
        let ox = MARGIN + step * k as i64;
        rect_el(&mut out, ox, MARGIN, small, small, FRAME_STYLE);
        let (sx, sy) = (image.side(0), image.side(1));
        let x0 = px(ox, sx.lo(), small);
        let x1 = px(ox, sx.hi(), small);
        let y0 = py(MARGIN, sy.hi(), small);
        let y1 = py(MARGIN, sy.lo(), small);
        rect_el(&mut out, x0, y0, x1 - x0, y1 - y0, CUBE_STYLE);
        let cx = px(ox, &point[0], small);
        let cy = py(MARGIN, &point[1], small);
        let _ = writeln!(out, "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"4\" fill=\"#c01a1a\"/>");
        text_el(&mut out, ox, MARGIN + small + 24, &format!("t = {time}"));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn render_support(dim: usize, rect: Option<&[Interval]>) -> Result<String, String> {
    check_dim(dim)?;
    if let Some(sides) = rect {
        if sides.len() != dim {
            return Err(format!("support rect has {} sides but dim is {dim}", sides.len()));
        }
    }

    if dim == 1 {
        let mut out = header(2 * MARGIN + SPAN, 2 * MARGIN + TRACK + FRAME_GAP);
        rect_el(&mut out, MARGIN, MARGIN, SPAN, TRACK, FRAME_STYLE);
        match rect {
            Some(sides) => {
                let side = &sides[0];
                let x0 = px(MARGIN, side.lo(), SPAN);
                let x1 = px(MARGIN, side.hi(), SPAN);
                rect_el(&mut out, x0, MARGIN, (x1 - x0).max(2), TRACK, SUPPORT_STYLE);
                text_el(
                    &mut out,
                    MARGIN,
                    MARGIN + TRACK + 24,
                    &format!("support {}", interval_label(side)),
                );
            }
            None => text_el(&mut out, MARGIN, MARGIN + TRACK + 24, "support empty"),
        }
        out.push_str("</svg>\n");
        return Ok(out);
    }

    let size = 2 * MARGIN + SPAN;
    let mut out = header(size, size + FRAME_GAP);
    rect_el(&mut out, MARGIN, MARGIN, SPAN, SPAN, FRAME_STYLE);
    match rect {
        Some(sides) => {
            let (sx, sy) = (&sides[0], &sides[1]);
            let x0 = px(MARGIN, sx.lo(), SPAN);
            let x1 = px(MARGIN, sx.hi(), SPAN);
            let y0 = py(MARGIN, sy.hi(), SPAN);
            let y1 = py(MARGIN, sy.lo(), SPAN);
            rect_el(&mut out, x0, y0, (x1 - x0).max(2), (y1 - y0).max(2), SUPPORT_STYLE);
            text_el(
                &mut out,
                MARGIN,
                MARGIN + SPAN + 24,
                &format!("support {} x {}", interval_label(sx), interval_label(sy)),
            );
        }
        None => text_el(&mut out, MARGIN, MARGIN + SPAN + 24, "support empty"),
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubeops_core::geometry::Rect;

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    fn interval(lo: Rational, hi: Rational) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn configuration_rendering_is_deterministic() {
        let input = RenderInput::Configuration { configuration: Configuration::halves(2) };
        let first = render_svg(&input).unwrap();
        let second = render_svg(&input).unwrap();
        assert_eq!(first, second);
        assert_eq!(first.matches("<rect").count(), 3, "frame plus two cubes");
    }

    #[test]
    fn expansion_frames_match_the_worked_example() {
        let cube = LittleCube::from_image(
            &Rect::new(vec![interval(q(1, 4), q(1, 2))]).unwrap(),
        )
        .unwrap();
        let input = RenderInput::Expansion {
            cube,
            point: vec![q(3, 8)],
            times: vec![Rational::zero(), q(1, 2), Rational::one()],
        };
        let svg = render_svg(&input).unwrap();
        assert!(svg.contains("t = 0: [1/4, 1/2]"));
        assert!(svg.contains("t = 1/2: [1/8, 5/8]"));
        assert!(svg.contains("t = 1: [0, 3/4]"));
    }

    #[test]
    fn support_rendering_shades_the_rect() {
        let input = RenderInput::Support {
            dim: 2,
            rect: Some(vec![interval(q(1, 4), q(3, 4)), interval(q(1, 3), q(2, 3))]),
        };
        let svg = render_svg(&input).unwrap();
        assert!(svg.contains("fill-opacity"));
        assert!(svg.contains("support [1/4, 3/4] x [1/3, 2/3]"));

        let empty = RenderInput::Support { dim: 1, rect: None };
        assert!(render_svg(&empty).unwrap().contains("support empty"));
    }

    #[test]
    fn high_dimensions_are_rejected() {
        let input = RenderInput::Support { dim: 3, rect: None };
        assert!(render_svg(&input).is_err());
    }

    #[test]
    fn expansion_validates_its_inputs() {
        let cube = LittleCube::from_image(
            &Rect::new(vec![interval(q(1, 4), q(1, 2))]).unwrap(),
        )
        .unwrap();
        let no_times = RenderInput::Expansion {
            cube: cube.clone(),
            point: vec![q(3, 8)],
            times: vec![],
        };
        assert!(render_svg(&no_times).is_err());
        let bad_time = RenderInput::Expansion {
            cube,
            point: vec![q(3, 8)],
            times: vec![q(3, 2)],
        };
        assert!(render_svg(&bad_time).is_err());
    }
}
