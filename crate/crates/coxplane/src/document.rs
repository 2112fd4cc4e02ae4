//! Versioned JSON document model for figures and verification reports.
//!
//! Documents are the single source of truth for rendered output: the SVG
//! renderer consumes nothing else, and serialization is byte-deterministic
//! (stable field order, quantized decimals, no platform-dependent maps).

use std::collections::BTreeMap;

use coxplane_core::clusters::ApRoots;
use coxplane_core::coxeter::CoxeterSystem;
use coxplane_core::diagrams::{End, Expanded, LabeledSegment};
use coxplane_core::noncrossing::PartitionDiagram;
use serde::{Deserialize, Serialize};

use crate::scene::{root_name, Projection};

pub const SCHEMA: &str = "coxplane/1";

/// Quantize to 12 significant digits. Documents never store raw doubles:
/// the quantized value round-trips exactly through its shortest decimal
/// form, which keeps re-serialization byte-identical.
pub fn q(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("quantized float reparses")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramDocument {
    pub schema: String,
    pub type_label: String,
    pub h: usize,
    pub configuration: DocConfiguration,
    pub diagrams: Vec<NamedDiagram>,
    pub reports: Vec<DocReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocConfiguration {
    /// Outermost ring first.
    pub rings: Vec<DocRing>,
    pub origin: Vec<DocOriginPoint>,
    pub axes: Option<DocAxes>,
    pub gray_zone: Option<DocGrayZone>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocRing {
    pub radius: f64,
    pub count: usize,
    pub phase: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocOriginPoint {
    pub slot: usize,
    /// Orbit index of the point that projects to the origin.
    pub orbit: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocAxes {
    pub l_plus: f64,
    pub l_minus: f64,
}

/// One wedge as an angle interval; the antipodal wedge is implied.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocGrayZone {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedDiagram {
    pub name: String,
    /// "root", "partition", or "cluster".
    pub kind: String,
    pub segments: Vec<DocSegment>,
    pub blocks: Vec<DocBlock>,
    pub verdicts: BTreeMap<String, bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocSegment {
    pub a: DocEnd,
    pub b: DocEnd,
    /// Orbit index of the origin point, when an end lies at the origin.
    pub label: Option<usize>,
    pub coords: [[f64; 2]; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "at", rename_all = "lowercase")]
pub enum DocEnd {
    Origin,
    Vertex { ring: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocBlock {
    /// Orbit indices of the block members.
    pub members: Vec<usize>,
    pub hull: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocReport {
    pub check: String,
    pub total: usize,
    pub exact: bool,
    /// Recorded expectation for this type, when one exists.
    pub expected: Option<bool>,
    pub mismatch_count: usize,
    /// First mismatches, capped at [`MISMATCH_CAP`].
    pub mismatches: Vec<DocMismatch>,
}

pub const MISMATCH_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocMismatch {
    pub a: String,
    pub b: Option<String>,
    pub geometric: bool,
    pub algebraic: bool,
}

pub fn new_document(label: &str, h: usize, configuration: DocConfiguration) -> DiagramDocument {
    DiagramDocument {
        schema: SCHEMA.to_string(),
        type_label: label.to_string(),
        h,
        configuration,
        diagrams: Vec::new(),
        reports: Vec::new(),
    }
}

/// Configuration section from the raw projection (rings of orbit points).
pub fn projected_configuration(proj: &Projection) -> DocConfiguration {
    DocConfiguration {
        rings: proj
            .cfg
            .rings
            .iter()
            .map(|r| DocRing {
                radius: q(r.radius),
                count: r.count,
                phase: q(r.phase),
            })
            .collect(),
        origin: proj
            .cfg
            .origin_labels
            .iter()
            .enumerate()
            .map(|(slot, &orbit)| DocOriginPoint { slot, orbit })
            .collect(),
        axes: Some(DocAxes {
            l_plus: q(proj.basis.l_plus_angle),
            l_minus: q(proj.basis.l_minus_angle),
        }),
        gray_zone: None,
    }
}

/// Configuration section from the expanded configuration (rings of h+2
/// vertices with the axis and gray-zone annotations).
pub fn expanded_configuration(exp: &Expanded) -> DocConfiguration {
    DocConfiguration {
        rings: exp
            .rings
            .iter()
            .map(|r| DocRing {
                radius: q(r.radius),
                count: exp.h2,
                phase: q(r.phase),
            })
            .collect(),
        origin: exp
            .origin_labels
            .iter()
            .enumerate()
            .map(|(slot, &orbit)| DocOriginPoint { slot, orbit })
            .collect(),
        axes: Some(DocAxes {
            l_plus: q(exp.l_plus),
            l_minus: q(exp.l_minus),
        }),
        gray_zone: Some(DocGrayZone {
            lo: q(exp.gray_lo),
            hi: q(exp.gray_hi),
        }),
    }
}

fn doc_end(e: End) -> DocEnd {
    match e {
        End::Origin => DocEnd::Origin,
        End::Vertex { ring, k } => DocEnd::Vertex { ring, k },
    }
}

pub fn doc_segments(exp: &Expanded, segs: &[LabeledSegment]) -> Vec<DocSegment> {
    segs.iter()
        .map(|s| {
            let (pa, pb) = exp.segment_coords(s);
            DocSegment {
                a: doc_end(s.a),
                b: doc_end(s.b),
                label: s.label,
                coords: [[q(pa[0]), q(pa[1])], [q(pb[0]), q(pb[1])]],
            }
        })
        .collect()
}

/// The diagram of one almost positive root as a named document entry.
pub fn root_diagram_entry(
    sys: &CoxeterSystem,
    ap: &ApRoots,
    exp: &Expanded,
    idx: usize,
    segs: &[LabeledSegment],
) -> NamedDiagram {
    NamedDiagram {
        name: root_name(sys, ap, idx),
        kind: "root".to_string(),
        segments: doc_segments(exp, segs),
        blocks: Vec::new(),
        verdicts: BTreeMap::new(),
    }
}

/// A partition diagram (blocks with hulls, chords between orbit points) as
/// a named document entry. Endpoints are resolved through the projection's
/// placement map.
pub fn partition_diagram_entry(
    proj: &Projection,
    diag: &PartitionDiagram,
    hulls: &[Vec<[f64; 2]>],
    name: String,
    verdicts: BTreeMap<String, bool>,
) -> NamedDiagram {
    use coxplane_core::plane::Place;
    let place_end = |p: usize| -> (DocEnd, Option<usize>) {
        match proj.cfg.place[p] {
            Place::OnRing { ring, k } => (DocEnd::Vertex { ring, k }, None),
            Place::AtOrigin { .. } => (DocEnd::Origin, Some(p)),
        }
    };
    let segments = diag
        .segments
        .iter()
        .map(|&(i, j)| {
            let (a, la) = place_end(i);
            let (b, lb) = place_end(j);
            let (ca, cb) = (proj.cfg.coords[i], proj.cfg.coords[j]);
            DocSegment {
                a,
                b,
                label: la.or(lb),
                coords: [[q(ca[0]), q(ca[1])], [q(cb[0]), q(cb[1])]],
            }
        })
        .collect();
    let blocks = diag
        .blocks
        .iter()
        .zip(hulls)
        .map(|(members, hull)| DocBlock {
            members: members.clone(),
            hull: hull.iter().map(|p| [q(p[0]), q(p[1])]).collect(),
        })
        .collect();
    NamedDiagram {
        name,
        kind: "partition".to_string(),
        segments,
        blocks,
        verdicts,
    }
}

pub fn to_json(doc: &DiagramDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

/// Structural validation: schema tag, resolvable endpoint references, and
/// coordinates consistent with the ring geometry within `tol`.
pub fn validate(doc: &DiagramDocument, tol: f64) -> Result<(), String> {
    if doc.schema != SCHEMA {
        return Err(format!("schema {:?}, expected {SCHEMA:?}", doc.schema));
    }
    let cfg = &doc.configuration;
    for (d, diag) in doc.diagrams.iter().enumerate() {
        for (s, seg) in diag.segments.iter().enumerate() {
            for (end, coord) in [(seg.a, seg.coords[0]), (seg.b, seg.coords[1])] {
                match end {
                    DocEnd::Origin => {
                        let Some(label) = seg.label else {
                            return Err(format!(
                                "diagram {d} segment {s}: origin end without a label"
                            ));
                        };
                        if !cfg.origin.iter().any(|o| o.orbit == label) {
                            return Err(format!(
                                "diagram {d} segment {s}: origin label {label} not in configuration"
                            ));
                        }
                        if coord[0].abs() > tol || coord[1].abs() > tol {
                            return Err(format!(
                                "diagram {d} segment {s}: origin end off the origin"
                            ));
                        }
                    }
                    DocEnd::Vertex { ring, k } => {
                        let Some(r) = cfg.rings.get(ring) else {
                            return Err(format!("diagram {d} segment {s}: ring {ring} missing"));
                        };
                        if k >= r.count {
                            return Err(format!(
                                "diagram {d} segment {s}: vertex {k} outside ring of {}",
                                r.count
                            ));
                        }
                        let theta = r.phase + 2.0 * std::f64::consts::PI * k as f64 / r.count as f64;
                        let (ex, ey) = (r.radius * theta.cos(), r.radius * theta.sin());
                        if (coord[0] - ex).abs() > tol || (coord[1] - ey).abs() > tol {
                            return Err(format!(
                                "diagram {d} segment {s}: vertex coordinates disagree with ring geometry"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::Scene;
    use coxplane_core::coxeter::TypeLabel;

    fn scene(label: &str) -> Scene {
        Scene::build(TypeLabel::parse(label).unwrap()).unwrap()
    }

    #[test]
    fn quantization_is_idempotent_and_tight() {
        for x in [0.0, -0.0, 1.0, -1.0 / 3.0, 0.29389262614624, 1e-15, -2.5e3] {
            let once = q(x);
            assert_eq!(once, q(once));
            if x != 0.0 {
                assert!(((once - x) / x).abs() < 5e-12, "{x} -> {once}");
            }
        }
        assert_eq!(q(-0.0).to_bits(), 0.0f64.to_bits());
    }

    #[test]
    fn document_round_trips_through_json() {
        let sc = scene("H3");
        let mut doc = new_document("H3", sc.sys().h, expanded_configuration(&sc.exp));
        for idx in [0, 3, 10] {
            doc.diagrams.push(root_diagram_entry(
                sc.sys(),
                &sc.ap,
                &sc.exp,
                idx,
                &sc.diagrams[idx].segments,
            ));
        }
        doc.reports.push(DocReport {
            check: "cl2".to_string(),
            total: 153,
            exact: true,
            expected: Some(true),
            mismatch_count: 0,
            mismatches: Vec::new(),
        });
        let json = to_json(&doc);
        let back: DiagramDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_json(&back), json);
        validate(&doc, 1e-9).unwrap();
    }

    #[test]
    fn validation_rejects_dangling_references() {
        let sc = scene("B3");
        let mut doc = new_document("B3", sc.sys().h, expanded_configuration(&sc.exp));
        doc.diagrams.push(root_diagram_entry(
            sc.sys(),
            &sc.ap,
            &sc.exp,
            2,
            &sc.diagrams[2].segments,
        ));
        validate(&doc, 1e-9).unwrap();

        let mut bad = doc.clone();
        bad.diagrams[0].segments[0].a = DocEnd::Vertex { ring: 9, k: 0 };
        assert!(validate(&bad, 1e-9).is_err());

        let mut bad = doc.clone();
        if let DocEnd::Vertex { ring, .. } = bad.diagrams[0].segments[0].a {
            bad.diagrams[0].segments[0].a = DocEnd::Vertex {
                ring,
                k: bad.configuration.rings[ring].count,
            };
        }
        assert!(validate(&bad, 1e-9).is_err());

        let mut bad = doc.clone();
        bad.schema = "coxplane/0".to_string();
        assert!(validate(&bad, 1e-9).is_err());

        let mut bad = doc;
        bad.diagrams[0].segments[0].coords[0][0] += 1e-3;
        assert!(validate(&bad, 1e-9).is_err());
    }

    #[test]
    fn empty_diagram_list_is_a_valid_document() {
        let sc = scene("F4");
        let doc = new_document("F4", sc.sys().h, expanded_configuration(&sc.exp));
        validate(&doc, 1e-9).unwrap();
        let back: DiagramDocument = serde_json::from_str(&to_json(&doc)).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn origin_segments_carry_resolvable_labels() {
        let sc = scene("D4");
        // Negative simples of the fork type include origin-anchored segments.
        let mut doc = new_document("D4", sc.sys().h, expanded_configuration(&sc.exp));
        for idx in 0..sc.ap.len() {
            doc.diagrams.push(root_diagram_entry(
                sc.sys(),
                &sc.ap,
                &sc.exp,
                idx,
                &sc.diagrams[idx].segments,
            ));
        }
        validate(&doc, 1e-9).unwrap();
        let origin_segments = doc
            .diagrams
            .iter()
            .flat_map(|d| &d.segments)
            .filter(|s| matches!(s.a, DocEnd::Origin) || matches!(s.b, DocEnd::Origin))
            .count();
        assert!(origin_segments > 0);
    }
}
