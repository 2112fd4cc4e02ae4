//! SVG rendering. The renderer reads nothing but the document, so a figure
//! is always reproducible from its JSON alone.

use std::fmt::Write;

use crate::document::{DiagramDocument, DocEnd};

const CANVAS: f64 = 720.0;
const PLOT_RADIUS: f64 = 320.0;

const PALETTE: [&str; 8] = [
    "#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085", "#7f8c8d", "#b8860b",
];

struct Frame {
    scale: f64,
}

impl Frame {
    fn of(doc: &DiagramDocument) -> Frame {
        let rmax = doc
            .configuration
            .rings
            .iter()
            .map(|r| r.radius)
            .fold(0.0_f64, f64::max);
        Frame {
            scale: PLOT_RADIUS / if rmax > 0.0 { rmax } else { 1.0 },
        }
    }

    fn x(&self, v: f64) -> f64 {
        CANVAS / 2.0 + v * self.scale
    }

    fn y(&self, v: f64) -> f64 {
        CANVAS / 2.0 - v * self.scale
    }
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

fn polar(fr: &Frame, r: f64, theta: f64) -> (f64, f64) {
    (fr.x(r * theta.cos()), fr.y(r * theta.sin()))
}

fn wedge_path(fr: &Frame, lo: f64, hi: f64, radius: f64) -> String {
    let c = CANVAS / 2.0;
    let (x0, y0) = polar(fr, radius, lo);
    let (x1, y1) = polar(fr, radius, hi);
    let rp = radius * fr.scale;
    // Increasing mathematical angle runs against SVG's sweep direction.
    format!(
        "M {} {} L {} {} A {} {} 0 0 0 {} {} Z",
        fmt(c),
        fmt(c),
        fmt(x0),
        fmt(y0),
        fmt(rp),
        fmt(rp),
        fmt(x1),
        fmt(y1)
    )
}

pub fn render(doc: &DiagramDocument) -> String {
    let fr = Frame::of(doc);
    let cfg = &doc.configuration;
    let c = CANVAS / 2.0;
    let mut out = String::new();
    let _ = write!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
        CANVAS as u32
    );
    let _ = write!(out, "<title>{}</title>\n", doc.type_label);
    let _ = write!(
        out,
        "<rect width=\"{0}\" height=\"{0}\" fill=\"#ffffff\"/>\n",
        CANVAS as u32
    );

    // Gray zone: the wedge and its antipode, behind everything else.
    if let Some(gz) = &cfg.gray_zone {
        let reach = PLOT_RADIUS / fr.scale * 1.06;
        for base in [0.0, std::f64::consts::PI] {
            let _ = write!(
                out,
                "<path d=\"{}\" fill=\"#cccccc\" fill-opacity=\"0.45\"/>\n",
                wedge_path(&fr, gz.lo + base, gz.hi + base, reach)
            );
        }
    }

    // Axes as dashed diameters.
    if let Some(axes) = &cfg.axes {
        let reach = PLOT_RADIUS / fr.scale * 1.08;
        for (angle, dash) in [(axes.l_plus, "6 4"), (axes.l_minus, "2 4")] {
            let (x0, y0) = polar(&fr, reach, angle);
            let (x1, y1) = polar(&fr, reach, angle + std::f64::consts::PI);
            let _ = write!(
                out,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"{}\"/>\n",
                fmt(x0), fmt(y0), fmt(x1), fmt(y1), dash
            );
        }
    }

    // Ring outlines.
    for ring in &cfg.rings {
        let mut pts = String::new();
        for k in 0..ring.count {
            let theta = ring.phase + 2.0 * std::f64::consts::PI * k as f64 / ring.count as f64;
            let (x, y) = polar(&fr, ring.radius, theta);
            let _ = write!(pts, "{},{} ", fmt(x), fmt(y));
        }
        let _ = write!(
            out,
            "<polygon points=\"{}\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\"/>\n",
            pts.trim_end()
        );
    }

    // Diagram content: hulls first, segments on top.
    for (d, diag) in doc.diagrams.iter().enumerate() {
        let color = PALETTE[d % PALETTE.len()];
        let _ = write!(out, "<g data-name=\"{}\" data-kind=\"{}\">\n", diag.name, diag.kind);
        for block in &diag.blocks {
            match block.hull.len() {
                0 => {}
                1 => {
                    let _ = write!(
                        out,
                        "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\" fill-opacity=\"0.5\"/>\n",
                        fmt(fr.x(block.hull[0][0])),
                        fmt(fr.y(block.hull[0][1])),
                        color
                    );
                }
                2 => {
                    let _ = write!(
                        out,
                        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"3\" stroke-opacity=\"0.5\"/>\n",
                        fmt(fr.x(block.hull[0][0])),
                        fmt(fr.y(block.hull[0][1])),
                        fmt(fr.x(block.hull[1][0])),
                        fmt(fr.y(block.hull[1][1])),
                        color
                    );
                }
                _ => {
                    let mut pts = String::new();
                    for p in &block.hull {
                        let _ = write!(pts, "{},{} ", fmt(fr.x(p[0])), fmt(fr.y(p[1])));
                    }
                    let _ = write!(
                        out,
                        "<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.18\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
                        pts.trim_end(),
                        color,
                        color
                    );
                }
            }
        }
        for seg in &diag.segments {
            let _ = write!(
                out,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"1.8\"/>\n",
                fmt(fr.x(seg.coords[0][0])),
                fmt(fr.y(seg.coords[0][1])),
                fmt(fr.x(seg.coords[1][0])),
                fmt(fr.y(seg.coords[1][1])),
                color
            );
            // Glyph at an origin endpoint: a ring around the center marks
            // which origin point the segment uses.
            for (end, _) in [(seg.a, 0), (seg.b, 1)] {
                if end == DocEnd::Origin {
                    let slot = cfg
                        .origin
                        .iter()
                        .position(|o| Some(o.orbit) == seg.label)
                        .unwrap_or(0);
                    let _ = write!(
                        out,
                        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
                        fmt(c),
                        fmt(c),
                        4 + 3 * slot,
                        color
                    );
                }
            }
        }
        let _ = write!(out, "</g>\n");
    }

    // Ring vertices above segments.
    for ring in &cfg.rings {
        for k in 0..ring.count {
            let theta = ring.phase + 2.0 * std::f64::consts::PI * k as f64 / ring.count as f64;
            let (x, y) = polar(&fr, ring.radius, theta);
            let _ = write!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"2.4\" fill=\"#333333\"/>\n",
                fmt(x),
                fmt(y)
            );
        }
    }

    // Origin points with small labels.
    for o in &cfg.origin {
        let _ = write!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"2.8\" fill=\"#333333\"/>\n",
            fmt(c),
            fmt(c)
        );
        let _ = write!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"11\" font-family=\"monospace\" fill=\"#333333\">o{}</text>\n",
            fmt(c + 8.0),
            fmt(c - 6.0 - 12.0 * o.slot as f64),
            o.orbit
        );
    }

    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::{expanded_configuration, new_document, root_diagram_entry};
    use crate::scene::Scene;
    use coxplane_core::coxeter::TypeLabel;

    #[test]
    fn render_is_a_pure_function_of_the_document() {
        let sc = Scene::build(TypeLabel::parse("H3").unwrap()).unwrap();
        let mut doc = new_document("H3", sc.sys().h, expanded_configuration(&sc.exp));
        doc.diagrams.push(root_diagram_entry(
            sc.sys(),
            &sc.ap,
            &sc.exp,
            0,
            &sc.diagrams[0].segments,
        ));
        let a = render(&doc);
        let b = render(&doc);
        assert_eq!(a, b);
        // Rebuilding the document from its JSON must reproduce the SVG.
        let back: crate::document::DiagramDocument =
            serde_json::from_str(&crate::document::to_json(&doc)).unwrap();
        assert_eq!(render(&back), a);
    }

    #[test]
    fn h3_figure_has_ring_vertices_and_origin_glyphs() {
        let sc = Scene::build(TypeLabel::parse("H3").unwrap()).unwrap();
        let doc = new_document("H3", sc.sys().h, expanded_configuration(&sc.exp));
        let svg = render(&doc);
        // One ring of h+2 = 12 vertices plus 2 labeled origin points.
        assert_eq!(svg.matches("r=\"2.4\"").count(), 12);
        assert_eq!(svg.matches("r=\"2.8\"").count(), 2);
        assert!(svg.contains("</svg>"));
        assert!(svg.contains("fill=\"#cccccc\""));
    }

    #[test]
    fn chord_types_render_without_axes_annotations_lost() {
        let sc = Scene::build(TypeLabel::parse("A3").unwrap()).unwrap();
        let mut doc = new_document("A3", sc.sys().h, expanded_configuration(&sc.exp));
        for idx in 0..sc.ap.len() {
            doc.diagrams.push(root_diagram_entry(
                sc.sys(),
                &sc.ap,
                &sc.exp,
                idx,
                &sc.diagrams[idx].segments,
            ));
        }
        let svg = render(&doc);
        assert_eq!(svg.matches("<g data-name=").count(), sc.ap.len());
        assert_eq!(svg.matches("stroke-dasharray").count(), 2);
    }
}
