//! Pairwise relations between diagram segments and the five geometric
//! compatibility criteria, with exhaustive verification of each criterion
//! against the algebraic compatibility relation.

use alloc::vec::Vec;

use crate::clusters::Compat;
use crate::coxeter::{CoxeterSystem, TypeLabel};
use crate::diagrams::{End, Expanded, LabeledSegment, RootDiagram};
use crate::geom::{self, P2, SegSeg, GEOM_TOL};
use crate::math::{self, fm};

/// Angular comparisons on snapped directions.
const ANGLE_TOL: f64 = 1e-7;
/// A crossing point this close to an annulus boundary radius would make the
/// open-annulus test ill-posed; it cannot happen for snapped configurations.
const RADIUS_TOL: f64 = 1e-6;

/// How two segments of one expanded configuration relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentRelation {
    Disjoint,
    /// Intersection is a single point that is an endpoint of at least one
    /// of the segments.
    TouchAtEndpoint,
    /// Interiors meet in a single point and the supporting lines differ.
    Cross,
    /// Identical unlabeled endpoint geometry (labels may differ).
    Coincide,
    /// Collinear with an overlap of positive length, but not identical.
    OverlapCollinear,
}

/// The five geometric compatibility criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    Cl1,
    Cl2,
    Cl3,
    Cl4,
    Cl5,
}

impl Criterion {
    pub const ALL: [Criterion; 5] = [
        Criterion::Cl1,
        Criterion::Cl2,
        Criterion::Cl3,
        Criterion::Cl4,
        Criterion::Cl5,
    ];

    pub fn parse(s: &str) -> Option<Criterion> {
        match s {
            "cl1" => Some(Criterion::Cl1),
            "cl2" => Some(Criterion::Cl2),
            "cl3" => Some(Criterion::Cl3),
            "cl4" => Some(Criterion::Cl4),
            "cl5" => Some(Criterion::Cl5),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Cl1 => "cl1",
            Criterion::Cl2 => "cl2",
            Criterion::Cl3 => "cl3",
            Criterion::Cl4 => "cl4",
            Criterion::Cl5 => "cl5",
        }
    }
}

impl core::fmt::Display for Criterion {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Ring radii of an expanded configuration, outermost first, with the
/// outer-ring assignment for segments.
pub struct RingContext {
    pub radii: Vec<f64>,
}

impl RingContext {
    pub fn new(exp: &Expanded) -> RingContext {
        let radii: Vec<f64> = exp.rings.iter().map(|r| r.radius).collect();
        for w in radii.windows(2) {
            assert!(w[0] > w[1] + GEOM_TOL, "ring radii strictly decrease");
        }
        RingContext { radii }
    }

    pub fn outermost(&self) -> usize {
        0
    }

    pub fn innermost(&self) -> usize {
        self.radii.len() - 1
    }

    /// Index of the larger ring touched by the segment; an origin endpoint
    /// counts as radius zero, so an origin segment's outer ring is that of
    /// its other endpoint.
    pub fn outer_ring(&self, s: &LabeledSegment) -> usize {
        match (s.a, s.b) {
            (End::Vertex { ring: r1, .. }, End::Vertex { ring: r2, .. }) => r1.min(r2),
            (End::Origin, End::Vertex { ring, .. })
            | (End::Vertex { ring, .. }, End::Origin) => ring,
            (End::Origin, End::Origin) => unreachable!("no origin-origin segments"),
        }
    }
}

/// Per-segment data reused across pair predicates.
#[derive(Debug, Clone, Copy)]
struct SegPrep {
    seg: LabeledSegment,
    pa: P2,
    pb: P2,
    /// Direction of the non-origin endpoint for origin segments.
    dir: Option<f64>,
    outer: usize,
}

fn prep(exp: &Expanded, ctx: &RingContext, segs: &[LabeledSegment]) -> Vec<SegPrep> {
    segs.iter()
        .map(|s| SegPrep {
            seg: *s,
            pa: exp.end_coord(s.a),
            pb: exp.end_coord(s.b),
            dir: exp.origin_direction(s),
            outer: ctx.outer_ring(s),
        })
        .collect()
}

fn relate(s: &SegPrep, t: &SegPrep) -> (SegmentRelation, Option<P2>) {
    if (s.seg.a, s.seg.b) == (t.seg.a, t.seg.b) {
        return (SegmentRelation::Coincide, None);
    }
    match geom::seg_seg(s.pa, s.pb, t.pa, t.pb, GEOM_TOL) {
        SegSeg::Disjoint => (SegmentRelation::Disjoint, None),
        SegSeg::Touch(_) => (SegmentRelation::TouchAtEndpoint, None),
        SegSeg::Cross(p) => (SegmentRelation::Cross, Some(p)),
        SegSeg::Overlap(_, _) => (SegmentRelation::OverlapCollinear, None),
    }
}

/// Relation between two segments of the same expanded configuration.
pub fn segment_relation(
    exp: &Expanded,
    s: &LabeledSegment,
    t: &LabeledSegment,
) -> SegmentRelation {
    let ctx = RingContext::new(exp);
    let sp = prep(exp, &ctx, core::slice::from_ref(s));
    let tp = prep(exp, &ctx, core::slice::from_ref(t));
    relate(&sp[0], &tp[0]).0
}

/// Two origin segments with a common label leave the origin in directions
/// that straddle the gray zone: their directions lie in the two different
/// components of the complement of the closed zone. Collinear unions are
/// one common line and always allowed.
fn straddles_gray_zone(exp: &Expanded, s: &SegPrep, t: &SegPrep) -> bool {
    let (d1, d2) = match (s.dir, t.dir) {
        (Some(d1), Some(d2)) => (d1, d2),
        _ => return false,
    };
    if math::angle_dist(d1, d2, math::PI) < ANGLE_TOL {
        return false;
    }
    match (exp.gray_side(d1), exp.gray_side(d2)) {
        (Some(x), Some(y)) => x != y,
        _ => false,
    }
}

fn same_labeled_origin(s: &SegPrep, t: &SegPrep) -> bool {
    match (s.seg.label, t.seg.label) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    }
}

/// Marks, over the combined segment list of a pair of diagrams, the least
/// fixpoint of: a segment is active when its outer ring is the outermost
/// ring of the pair, or when it shares an endpoint with an active segment
/// whose outer ring is one step larger. Origin points share regardless of
/// label.
fn active_flags(union: &[SegPrep]) -> Vec<bool> {
    let Some(outermost) = union.iter().map(|s| s.outer).min() else {
        return Vec::new();
    };
    let mut active: Vec<bool> = union.iter().map(|s| s.outer == outermost).collect();
    let mut queue: Vec<usize> = (0..union.len()).filter(|&i| active[i]).collect();
    let shares_end = |i: usize, j: usize| -> bool {
        let (a, b) = (union[i].seg, union[j].seg);
        a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b
    };
    let mut head = 0;
    while head < queue.len() {
        let i = queue[head];
        head += 1;
        for j in 0..union.len() {
            if !active[j] && union[j].outer == union[i].outer + 1 && shares_end(i, j) {
                active[j] = true;
                queue.push(j);
            }
        }
    }
    active
}

fn cl12_prep(c1: &[SegPrep], c2: &[SegPrep], allow_coincide: bool) -> bool {
    for s in c1 {
        for t in c2 {
            match relate(s, t).0 {
                SegmentRelation::Cross | SegmentRelation::OverlapCollinear => return false,
                SegmentRelation::Coincide if !allow_coincide => return false,
                _ => {}
            }
        }
    }
    true
}

fn cl3_prep(exp: &Expanded, c1: &[SegPrep], c2: &[SegPrep]) -> bool {
    if !cl12_prep(c1, c2, true) {
        return false;
    }
    for s in c1 {
        for t in c2 {
            if same_labeled_origin(s, t) && straddles_gray_zone(exp, s, t) {
                return false;
            }
        }
    }
    true
}

fn cl45_prep(
    exp: &Expanded,
    ctx: &RingContext,
    c1: &[SegPrep],
    c2: &[SegPrep],
    with_gray_rule: bool,
) -> bool {
    let union: Vec<SegPrep> = c1.iter().chain(c2.iter()).copied().collect();
    let active = active_flags(&union);
    let n1 = c1.len();
    for (i, s) in c1.iter().enumerate() {
        if !active[i] {
            continue;
        }
        for (j, t) in c2.iter().enumerate() {
            if !active[n1 + j] {
                continue;
            }
            if let (SegmentRelation::Cross, Some(p)) = relate(s, t) {
                // The annulus reaches from this segment pair's outer ring
                // down to the next smaller ring; when the pair's outer ring
                // is the innermost, the region is the whole open disk,
                // center included (diameters cross exactly there).
                let pair_outer = s.outer.min(t.outer);
                let outer_radius = ctx.radii[pair_outer];
                let inner_radius = ctx.radii.get(pair_outer + 1).copied();
                let r = fm::hypot(p[0], p[1]);
                assert!(
                    fm::fabs(r - outer_radius) > RADIUS_TOL,
                    "crossing point on the outer annulus boundary"
                );
                if let Some(ir) = inner_radius {
                    assert!(
                        fm::fabs(r - ir) > RADIUS_TOL,
                        "crossing point on the inner annulus boundary"
                    );
                }
                if r < outer_radius && inner_radius.is_none_or(|ir| r > ir) {
                    return false;
                }
            }
            if with_gray_rule
                && same_labeled_origin(s, t)
                && on_innermost(ctx, s)
                && on_innermost(ctx, t)
                && straddles_gray_zone(exp, s, t)
            {
                return false;
            }
        }
    }
    true
}

fn on_innermost(ctx: &RingContext, s: &SegPrep) -> bool {
    s.seg.touches_origin() && s.outer == ctx.innermost()
}

/// Criterion 1: no cross-collection segment pair crosses, overlaps along a
/// line, or coincides.
pub fn cl1(exp: &Expanded, c1: &[LabeledSegment], c2: &[LabeledSegment]) -> bool {
    let ctx = RingContext::new(exp);
    cl12_prep(&prep(exp, &ctx, c1), &prep(exp, &ctx, c2), false)
}

/// Criterion 2: like criterion 1, but coinciding segments are allowed.
pub fn cl2(exp: &Expanded, c1: &[LabeledSegment], c2: &[LabeledSegment]) -> bool {
    let ctx = RingContext::new(exp);
    cl12_prep(&prep(exp, &ctx, c1), &prep(exp, &ctx, c2), true)
}

/// Criterion 3: criterion 2, and segments sharing a labeled origin point
/// must be collinear or stay on one side of the gray zone.
pub fn cl3(exp: &Expanded, c1: &[LabeledSegment], c2: &[LabeledSegment]) -> bool {
    let ctx = RingContext::new(exp);
    cl3_prep(exp, &prep(exp, &ctx, c1), &prep(exp, &ctx, c2))
}

/// Criterion 4: no two active cross-collection segments cross at a point
/// whose radius falls in the open annulus between the pair's outermost ring
/// and the next smaller ring.
pub fn cl4(exp: &Expanded, c1: &[LabeledSegment], c2: &[LabeledSegment]) -> bool {
    let ctx = RingContext::new(exp);
    cl45_prep(exp, &ctx, &prep(exp, &ctx, c1), &prep(exp, &ctx, c2), false)
}

/// Criterion 5: criterion 4, and active segments joining the same labeled
/// origin point to the innermost ring must be collinear or stay on one side
/// of the gray zone.
pub fn cl5(exp: &Expanded, c1: &[LabeledSegment], c2: &[LabeledSegment]) -> bool {
    let ctx = RingContext::new(exp);
    cl45_prep(exp, &ctx, &prep(exp, &ctx, c1), &prep(exp, &ctx, c2), true)
}

/// Evaluate one criterion on a pair of diagrams.
pub fn criterion_verdict(
    exp: &Expanded,
    crit: Criterion,
    c1: &[LabeledSegment],
    c2: &[LabeledSegment],
) -> bool {
    match crit {
        Criterion::Cl1 => cl1(exp, c1, c2),
        Criterion::Cl2 => cl2(exp, c1, c2),
        Criterion::Cl3 => cl3(exp, c1, c2),
        Criterion::Cl4 => cl4(exp, c1, c2),
        Criterion::Cl5 => cl5(exp, c1, c2),
    }
}

/// One disagreement between a criterion and the algebraic relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub a: usize,
    pub b: usize,
    pub geometric: bool,
    pub algebraic: bool,
}

/// Outcome of checking one criterion against the algebraic compatibility
/// relation over every unordered pair of distinct almost positive roots.
#[derive(Debug, Clone)]
pub struct ExactnessReport {
    pub label: TypeLabel,
    pub criterion: Criterion,
    pub total_pairs: usize,
    pub mismatches: Vec<Mismatch>,
    /// Unordered root pairs with at least one coinciding segment pair.
    pub coincide_pairs: usize,
}

impl ExactnessReport {
    pub fn exact(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Exhaustively compare a criterion's verdicts with the algebraic relation.
pub fn verify_criterion(
    sys: &CoxeterSystem,
    exp: &Expanded,
    diagrams: &[RootDiagram],
    compat: &Compat,
    crit: Criterion,
) -> ExactnessReport {
    assert_eq!(diagrams.len(), compat.len());
    let ctx = RingContext::new(exp);
    let preps: Vec<Vec<SegPrep>> = diagrams
        .iter()
        .map(|d| prep(exp, &ctx, &d.segments))
        .collect();
    let m = diagrams.len();
    let mut mismatches = Vec::new();
    let mut coincide_pairs = 0;
    let mut total_pairs = 0;
    for a in 0..m {
        for b in a + 1..m {
            total_pairs += 1;
            let (c1, c2) = (&preps[a], &preps[b]);
            if c1.iter().any(|s| {
                c2.iter()
                    .any(|t| relate(s, t).0 == SegmentRelation::Coincide)
            }) {
                coincide_pairs += 1;
            }
            let geometric = match crit {
                Criterion::Cl1 => cl12_prep(c1, c2, false),
                Criterion::Cl2 => cl12_prep(c1, c2, true),
                Criterion::Cl3 => cl3_prep(exp, c1, c2),
                Criterion::Cl4 => cl45_prep(exp, &ctx, c1, c2, false),
                Criterion::Cl5 => cl45_prep(exp, &ctx, c1, c2, true),
            };
            let algebraic = compat.compatible(a, b);
            if geometric != algebraic {
                mismatches.push(Mismatch {
                    a,
                    b,
                    geometric,
                    algebraic,
                });
            }
        }
    }
    ExactnessReport {
        label: sys.label,
        criterion: crit,
        total_pairs,
        mismatches,
        coincide_pairs,
    }
}
