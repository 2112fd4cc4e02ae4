//! Diagrams for almost positive roots in the projection plane: matching
//! segments for each reflection, expansion of every h-gon ring into a
//! regular (h+2)-gon, the two symmetry axes with their gray zone, the tau
//! action on labeled segments, and equivariant propagation of diagrams from
//! the negative simples to every root.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::clusters::{ApRoots, Sign, Tau};
use crate::coxeter::{CoxeterSystem, OrbitPoints};
use crate::geom::P2;
use crate::math::{self, fm, PI};
use crate::plane::{Bipartition, Place, ProjectedConfiguration};
use crate::{CoxError, Result};

/// Angular tolerance on snapped data: genuine angle gaps are at least
/// pi/(h+2) with h <= 128.
const ANGLE_TOL: f64 = 1e-7;

/// Endpoint of a diagram segment: a ring vertex of the expanded
/// configuration, or the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum End {
    Origin,
    Vertex { ring: usize, k: usize },
}

/// Segment with unordered endpoints; origin endpoints carry the orbit index
/// of the origin point they represent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabeledSegment {
    pub a: End,
    pub b: End,
    pub label: Option<usize>,
}

impl LabeledSegment {
    pub fn new(a: End, b: End, label: Option<usize>) -> LabeledSegment {
        assert!(
            !(a == End::Origin && b == End::Origin),
            "segments never join two origin points"
        );
        let has_origin = a == End::Origin || b == End::Origin;
        assert_eq!(has_origin, label.is_some(), "label exactly for origin endpoints");
        if a <= b {
            LabeledSegment { a, b, label }
        } else {
            LabeledSegment { a: b, b: a, label }
        }
    }

    pub fn touches_origin(&self) -> bool {
        self.label.is_some()
    }
}

/// Diagram of one almost positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDiagram {
    pub ap: usize,
    pub segments: Vec<LabeledSegment>,
}

/// Matching segments of reflection t on the orbit: unordered index pairs
/// {x, t x} with x != t x. The projections are all parallel because every
/// difference x - t x is a multiple of the root of t.
pub fn reflection_segments(
    sys: &CoxeterSystem,
    o: &OrbitPoints,
    cfg: &ProjectedConfiguration,
    t: usize,
) -> Vec<(usize, usize)> {
    let beta = &sys.roots[sys.reflections[t] as usize].coord;
    let mut pairs = Vec::new();
    for x in 0..o.len() {
        let mut img = o.points[x].clone();
        let inner = math::dot(beta, &o.points[x]);
        math::axpy(&mut img, -2.0 * inner, beta);
        let y = o.index_of(&img).expect("orbit closed under reflections");
        if y > x {
            pairs.push((x, y));
        }
    }
    let dir = |&(x, y): &(usize, usize)| -> P2 {
        [
            cfg.coords[y][0] - cfg.coords[x][0],
            cfg.coords[y][1] - cfg.coords[x][1],
        ]
    };
    if let Some(first) = pairs.first() {
        let d0 = dir(first);
        let n0 = fm::hypot(d0[0], d0[1]);
        for p in &pairs {
            let d = dir(p);
            let cross = d[0] * d0[1] - d[1] * d0[0];
            assert!(
                fm::fabs(cross) < 1e-6 * n0 * fm::hypot(d[0], d[1]),
                "matching segments of one reflection are parallel"
            );
        }
    }
    for &(x, y) in &pairs {
        let both_origin = matches!(cfg.place[x], Place::AtOrigin { .. })
            && matches!(cfg.place[y], Place::AtOrigin { .. });
        assert!(!both_origin, "no reflection relates two origin points");
    }
    pairs
}

#[derive(Debug, Clone)]
pub struct ExpandedRing {
    pub radius: f64,
    pub phase: f64,
}

/// The expanded configuration: every ring regularized to h+2 vertices with
/// the two new vertices subdividing the distinguished edges, the origin
/// points carried over, the axes of the tau reflections, and the gray zone.
/// The frame is canonical: the axis fixing the S_+ diagrams lies on the
/// x-axis.
#[derive(Clone)]
pub struct Expanded {
    /// Vertices per ring, h + 2.
    pub h2: usize,
    pub rings: Vec<ExpandedRing>,
    /// Orbit index -> endpoint (origin points map to Origin).
    pub point_end: Vec<End>,
    /// Orbit indices of the origin points.
    pub origin_labels: Vec<usize>,
    /// The inserted vertices, two per ring.
    pub new_vertices: Vec<(usize, usize)>,
    /// Axis angles in [0, pi): reflection in l_plus fixes the diagram of
    /// every negative simple of S_-, reflection in l_minus those of S_+.
    pub l_plus: f64,
    pub l_minus: f64,
    /// Base wedge of the gray zone; the full zone adds the antipodal copy.
    pub gray_lo: f64,
    pub gray_hi: f64,
    /// Origin label maps of the part products (orbit index -> orbit index).
    label_plus: BTreeMap<usize, usize>,
    label_minus: BTreeMap<usize, usize>,
    /// Transported matching segments of the simple reflections.
    neg_segments: Vec<Vec<LabeledSegment>>,
}

impl Expanded {
    pub fn vertex_angle(&self, ring: usize, k: usize) -> f64 {
        math::wrap_angle(
            self.rings[ring].phase + 2.0 * PI * k as f64 / self.h2 as f64,
            2.0 * PI,
        )
    }

    pub fn end_coord(&self, e: End) -> P2 {
        match e {
            End::Origin => [0.0, 0.0],
            End::Vertex { ring, k } => {
                let a = self.vertex_angle(ring, k);
                let r = self.rings[ring].radius;
                [r * fm::cos(a), r * fm::sin(a)]
            }
        }
    }

    pub fn segment_coords(&self, s: &LabeledSegment) -> (P2, P2) {
        (self.end_coord(s.a), self.end_coord(s.b))
    }

    /// Direction (full angle) of the non-origin endpoint of an
    /// origin-touching segment.
    pub fn origin_direction(&self, s: &LabeledSegment) -> Option<f64> {
        if !s.touches_origin() {
            return None;
        }
        let v = if s.a == End::Origin { s.b } else { s.a };
        match v {
            End::Vertex { ring, k } => Some(self.vertex_angle(ring, k)),
            End::Origin => unreachable!(),
        }
    }

    /// Reflect a vertex through the line at angle theta, combinatorially:
    /// the new angular index is derived from an integer constant per ring.
    fn reflect_end(&self, theta: f64, e: End) -> End {
        match e {
            End::Origin => End::Origin,
            End::Vertex { ring, k } => {
                let m = self.h2 as f64;
                let raw = (2.0 * theta - 2.0 * self.rings[ring].phase) * m / (2.0 * PI);
                let r = fm::round(raw);
                assert!(
                    fm::fabs(raw - r) < 1e-6,
                    "axis must be a symmetry of every ring"
                );
                let k2 = (r as i64 - k as i64).rem_euclid(self.h2 as i64) as usize;
                End::Vertex { ring, k: k2 }
            }
        }
    }

    fn label_map(&self, eps: Sign) -> &BTreeMap<usize, usize> {
        match eps {
            Sign::Plus => &self.label_plus,
            Sign::Minus => &self.label_minus,
        }
    }

    /// Reflect a segment set through an axis with a given origin-label map,
    /// applying the exception: an origin segment perpendicular to the axis
    /// is left entirely unchanged.
    fn apply_reflection(
        &self,
        theta: f64,
        labels: &BTreeMap<usize, usize>,
        segs: &[LabeledSegment],
    ) -> Vec<LabeledSegment> {
        let mut out: Vec<LabeledSegment> = segs
            .iter()
            .map(|s| {
                if let Some(dir) = self.origin_direction(s) {
                    if math::angle_dist(dir, theta + PI / 2.0, PI) < ANGLE_TOL {
                        return *s;
                    }
                }
                let a = self.reflect_end(theta, s.a);
                let b = self.reflect_end(theta, s.b);
                let label = s.label.map(|l| labels[&l]);
                LabeledSegment::new(a, b, label)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The two opposite wedges of the gray zone as closed angular intervals.
    pub fn gray_zone(&self) -> [(f64, f64); 2] {
        [
            (self.gray_lo, self.gray_hi),
            (self.gray_lo + PI, self.gray_hi + PI),
        ]
    }

    /// Which side of the gray zone a direction lies on; None strictly
    /// inside one of the open wedges. A boundary direction belongs to the
    /// unique complement arc it bounds: this is the assignment under which
    /// reflection through either axis preserves sides, matching how the
    /// fork half-diameters of the D types sit exactly on the boundary line
    /// yet count as lying left or right of the zone.
    pub fn gray_side(&self, theta: f64) -> Option<usize> {
        let t = math::wrap_angle(theta - self.gray_lo, 2.0 * PI);
        let width = self.gray_hi - self.gray_lo;
        for (bound, side) in [
            (0.0, 1),
            (width, 0),
            (PI, 0),
            (PI + width, 1),
        ] {
            if math::angle_dist(t, bound, 2.0 * PI) < ANGLE_TOL {
                return Some(side);
            }
        }
        if t < width || t > PI && t < PI + width {
            return None;
        }
        if t < PI {
            Some(0)
        } else {
            Some(1)
        }
    }
}

/// Distinguished edges of one source ring: edge (k, k+1) whose midpoint
/// lies on one of the source axes (equivalently, the edge is perpendicular
/// to that axis). Every ring has exactly two.
fn distinguished_edges(
    sys: &CoxeterSystem,
    phase: f64,
    h: usize,
    ring: usize,
) -> Result<(usize, usize)> {
    let axes = [0.0, PI - PI / h as f64];
    let mut hits = Vec::new();
    for k in 0..h {
        let mid = phase + 2.0 * PI * (k as f64 + 0.5) / h as f64;
        if axes.iter().any(|&ax| math::angle_dist(mid, ax, PI) < ANGLE_TOL) {
            hits.push(k);
        }
    }
    if hits.len() != 2 {
        return Err(CoxError::DistinguishedEdgeCountError(format!(
            "{}: ring {ring} has {} distinguished edges",
            sys.label,
            hits.len()
        )));
    }
    Ok((hits[0], hits[1]))
}

/// Expand every ring of the projected configuration into a regular
/// (h+2)-gon, transport the orbit points and the simple reflections'
/// matching segments, locate the axes, and rotate into the canonical frame.
///
/// Several polygon axes can fix the negative simple diagrams setwise, so
/// the axes are anchored geometrically: every distinguished edge lies on a
/// source axis, and the new vertex subdividing it continues that axis into
/// the expansion. The source axis fixing the S_+ chord sets continues to
/// l_minus (which fixes the S_+ diagrams), the other one to l_plus.
pub fn expand_configuration(
    sys: &CoxeterSystem,
    bip: &Bipartition,
    o: &OrbitPoints,
    cfg: &ProjectedConfiguration,
) -> Result<Expanded> {
    let h = sys.h;
    let h2 = h + 2;

    // Ring geometry and the vertex transport.
    let mut rings = Vec::new();
    let mut new_vertices = Vec::new();
    let mut gaps = Vec::new();
    for (r, ring) in cfg.rings.iter().enumerate() {
        let (g1, g2) = distinguished_edges(sys, ring.phase, h, r)?;
        gaps.push((g1, g2));
        new_vertices.push((r, g1 + 1));
        new_vertices.push((r, g2 + 2));
        rings.push(ExpandedRing {
            radius: ring.radius,
            phase: ring.phase_step as f64 * PI / h2 as f64,
        });
    }
    let point_end: Vec<End> = cfg
        .place
        .iter()
        .map(|p| match *p {
            Place::AtOrigin { .. } => End::Origin,
            Place::OnRing { ring, k } => {
                let (g1, g2) = gaps[ring];
                let k2 = k + usize::from(k > g1) + usize::from(k > g2);
                End::Vertex { ring, k: k2 }
            }
        })
        .collect();

    // Origin label maps from the stored slot permutations.
    let slot_map = |perm: &[usize]| -> BTreeMap<usize, usize> {
        perm.iter()
            .enumerate()
            .map(|(s, &img)| (cfg.origin_labels[s], cfg.origin_labels[img]))
            .collect()
    };
    let label_plus = slot_map(&cfg.cplus_origin);
    let label_minus = slot_map(&cfg.cminus_origin);

    // Transported matching segments of the simple reflections.
    let neg_segments: Vec<Vec<LabeledSegment>> = (0..sys.n)
        .map(|s| {
            let mut segs: Vec<LabeledSegment> = reflection_segments(sys, o, cfg, s)
                .into_iter()
                .map(|(x, y)| {
                    let (ex, ey) = (point_end[x], point_end[y]);
                    let label = if ex == End::Origin {
                        Some(x)
                    } else if ey == End::Origin {
                        Some(y)
                    } else {
                        None
                    };
                    LabeledSegment::new(ex, ey, label)
                })
                .collect();
            segs.sort_unstable();
            segs.dedup();
            assert!(!segs.is_empty(), "a simple reflection moves orbit points");
            segs
        })
        .collect();

    let mut exp = Expanded {
        h2,
        rings,
        point_end,
        origin_labels: cfg.origin_labels.clone(),
        new_vertices,
        l_plus: 0.0,
        l_minus: 0.0,
        gray_lo: 0.0,
        gray_hi: 0.0,
        label_plus,
        label_minus,
        neg_segments,
    };

    // Anchor the axes: a distinguished edge whose midpoint lies on the
    // source minus axis is subdivided by a vertex of l_plus, and one on the
    // source plus axis by a vertex of l_minus (the parts swap roles between
    // the two pictures). Every ring must anchor consistently.
    let step = PI / h2 as f64;
    let mut anchor_minus: Option<f64> = None;
    let mut anchor_plus: Option<f64> = None;
    for (r, ring) in cfg.rings.iter().enumerate() {
        let (g1, g2) = gaps[r];
        for (g, slot) in [(g1, g1 + 1), (g2, g2 + 2)] {
            let mid = ring.phase + 2.0 * PI * (g as f64 + 0.5) / h as f64;
            let on_source_minus = math::angle_dist(mid, 0.0, PI) < ANGLE_TOL;
            let a = math::wrap_angle(
                exp.rings[r].phase + 2.0 * PI * slot as f64 / h2 as f64,
                PI,
            );
            let target = if on_source_minus {
                &mut anchor_plus
            } else {
                &mut anchor_minus
            };
            match target {
                None => *target = Some(a),
                Some(prev) => {
                    if math::angle_dist(*prev, a, PI) >= ANGLE_TOL {
                        return Err(CoxError::AxisNotUnique(format!(
                            "{}: rings anchor conflicting axes",
                            sys.label
                        )));
                    }
                }
            }
        }
    }
    let theta_m = match (anchor_minus, anchor_plus) {
        (Some(m), Some(p)) => {
            assert!(
                math::angle_dist(p, m + step, PI) < ANGLE_TOL,
                "anchored axes sit one polygon step apart"
            );
            m
        }
        (Some(m), None) => m,
        (None, Some(p)) => math::wrap_angle(p - step, PI),
        (None, None) => unreachable!("every ring has two distinguished edges"),
    };
    let theta_p = math::wrap_angle(theta_m + step, PI);

    // The anchored axes must actually fix the opposite parts' diagrams.
    let fixes_part = |theta: f64, eps: Sign, part: &[usize]| -> bool {
        part.iter().all(|&s| {
            exp.apply_reflection(theta, exp.label_map(eps), &exp.neg_segments[s])
                == exp.neg_segments[s]
        })
    };
    if !fixes_part(theta_m, Sign::Minus, &bip.s_plus)
        || !fixes_part(theta_p, Sign::Plus, &bip.s_minus)
    {
        return Err(CoxError::AxisNotFound(format!(
            "{}: anchored axes do not fix the negative simple diagrams",
            sys.label
        )));
    }

    // Canonical frame: rotate l_minus onto the x-axis.
    for ring in &mut exp.rings {
        ring.phase = math::wrap_angle(ring.phase - theta_m, 2.0 * PI);
    }
    exp.l_minus = 0.0;
    exp.l_plus = step;
    exp.gray_lo = PI / 2.0;
    exp.gray_hi = PI / 2.0 + step;

    // The axes still fix the respective diagrams in the rotated frame.
    for &s in &bip.s_plus {
        assert!(
            exp.apply_reflection(exp.l_minus, &exp.label_minus, &exp.neg_segments[s])
                == exp.neg_segments[s]
        );
    }
    for &s in &bip.s_minus {
        assert!(
            exp.apply_reflection(exp.l_plus, &exp.label_plus, &exp.neg_segments[s])
                == exp.neg_segments[s]
        );
    }
    Ok(exp)
}

/// Diagram of the negative simple root -alpha_s: the transported matching
/// segments of s.
pub fn negative_simple_diagram(exp: &Expanded, s: usize) -> RootDiagram {
    RootDiagram {
        ap: s,
        segments: exp.neg_segments[s].clone(),
    }
}

/// Action of tau_eps on a diagram: reflect non-origin endpoints through the
/// axis of eps, permute origin labels by c_eps, and keep origin segments
/// perpendicular to the axis entirely fixed.
pub fn tau_on_diagram(exp: &Expanded, tau: &Tau, eps: Sign, diag: &RootDiagram) -> RootDiagram {
    let theta = match eps {
        Sign::Plus => exp.l_plus,
        Sign::Minus => exp.l_minus,
    };
    RootDiagram {
        ap: tau.apply(eps, diag.ap),
        segments: exp.apply_reflection(theta, exp.label_map(eps), &diag.segments),
    }
}

/// Propagate diagrams from the negative simples over the tau action to
/// every almost positive root. Reaching a root along two routes must give
/// the same diagram; distinct roots always get distinct diagrams.
pub fn all_root_diagrams(
    sys: &CoxeterSystem,
    exp: &Expanded,
    ap: &ApRoots,
    tau: &Tau,
) -> Result<Vec<RootDiagram>> {
    let m = ap.len();
    let mut diagrams: Vec<Option<RootDiagram>> = vec![None; m];
    let mut queue: Vec<usize> = Vec::new();
    for s in 0..sys.n {
        diagrams[s] = Some(negative_simple_diagram(exp, s));
        queue.push(s);
    }
    let mut head = 0;
    while head < queue.len() {
        let b = queue[head];
        head += 1;
        let diag = diagrams[b].clone().unwrap();
        for eps in [Sign::Plus, Sign::Minus] {
            let g = tau.apply(eps, b);
            let img = tau_on_diagram(exp, tau, eps, &diag);
            match &diagrams[g] {
                None => {
                    diagrams[g] = Some(img);
                    queue.push(g);
                }
                Some(existing) => {
                    if existing.segments != img.segments {
                        return Err(CoxError::InconsistentPropagation(format!(
                            "{}: two tau routes assign different diagrams to root {g}",
                            sys.label
                        )));
                    }
                }
            }
        }
    }
    let out: Vec<RootDiagram> = diagrams
        .into_iter()
        .enumerate()
        .map(|(j, d)| d.unwrap_or_else(|| panic!("root {j} not reached by the tau action")))
        .collect();
    for i in 0..m {
        for j in i + 1..m {
            if out[i].segments == out[j].segments {
                return Err(CoxError::InconsistentPropagation(format!(
                    "{}: roots {i} and {j} received identical diagrams",
                    sys.label
                )));
            }
        }
    }
    Ok(out)
}
