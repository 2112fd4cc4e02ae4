//! Planar primitives for the crossing predicates.
//!
//! All inputs are snapped coordinates: every genuinely distinct value pair
//! (radii, angles, crossing parameters) differs by far more than the
//! tolerance, so tolerance-gated floating-point predicates behave like exact
//! ones. Degenerate inputs outside that regime are bugs upstream, not cases
//! to handle gracefully.

use alloc::vec::Vec;

use crate::math::fm;

pub type P2 = [f64; 2];

/// Geometry tolerance for coordinate comparisons. Configurations have O(1)
/// size and their smallest genuine feature separations are above 1e-3.
pub const GEOM_TOL: f64 = 1e-6;

#[inline]
pub fn sub(a: P2, b: P2) -> P2 {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
pub fn cross(a: P2, b: P2) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

#[inline]
pub fn dot2(a: P2, b: P2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

#[inline]
pub fn dist(a: P2, b: P2) -> f64 {
    fm::hypot(a[0] - b[0], a[1] - b[1])
}

#[inline]
pub fn norm2(a: P2) -> f64 {
    fm::hypot(a[0], a[1])
}

/// Signed area of the triangle a, b, c (positive = counterclockwise).
#[inline]
pub fn orient(a: P2, b: P2, c: P2) -> f64 {
    cross(sub(b, a), sub(c, a))
}

/// Distance from p to the closed segment [a, b].
pub fn point_segment_distance(p: P2, a: P2, b: P2) -> f64 {
    let ab = sub(b, a);
    let len2 = dot2(ab, ab);
    if len2 == 0.0 {
        return dist(p, a);
    }
    let t = (dot2(sub(p, a), ab) / len2).clamp(0.0, 1.0);
    dist(p, [a[0] + t * ab[0], a[1] + t * ab[1]])
}

/// Convex hull by monotone chain, counterclockwise, deduplicated, without a
/// repeated first vertex. Collinear interior points are dropped, so a fully
/// collinear input yields its two extreme points and a single (possibly
/// duplicated) input yields one point.
pub fn convex_hull(points: &[P2], tol: f64) -> Vec<P2> {
    let mut pts: Vec<P2> = Vec::new();
    for &p in points {
        if !pts.iter().any(|&q| dist(p, q) < tol) {
            pts.push(p);
        }
    }
    if pts.len() <= 2 {
        return pts;
    }
    pts.sort_by(|a, b| (a[0], a[1]).partial_cmp(&(b[0], b[1])).unwrap());
    let mut hull: Vec<P2> = Vec::with_capacity(2 * pts.len());
    // Lower chain, then upper chain.
    for pass in 0..2 {
        let start = hull.len();
        let iter: Vec<P2> = if pass == 0 {
            pts.clone()
        } else {
            pts.iter().rev().copied().collect()
        };
        for p in iter {
            while hull.len() >= start + 2
                && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= tol
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() < 2 {
        // All points collinear: the chains collapse; return the extremes.
        return alloc::vec![pts[0], pts[pts.len() - 1]];
    }
    hull
}

/// Is p inside (or within tol of) the convex region spanned by the hull?
/// Works for point, segment, and polygon hulls.
pub fn point_in_hull(p: P2, hull: &[P2], tol: f64) -> bool {
    match hull.len() {
        0 => false,
        1 => dist(p, hull[0]) <= tol,
        2 => point_segment_distance(p, hull[0], hull[1]) <= tol,
        n => (0..n).all(|i| orient(hull[i], hull[(i + 1) % n], p) >= -tol),
    }
}

/// Is p on the relative boundary of the hull? For a polygon that is its edge
/// cycle; for a segment only the two endpoints (the open segment is relative
/// interior); a single point is its own boundary.
pub fn on_relative_boundary(p: P2, hull: &[P2], tol: f64) -> bool {
    match hull.len() {
        0 => false,
        1 => dist(p, hull[0]) <= tol,
        2 => dist(p, hull[0]) <= tol || dist(p, hull[1]) <= tol,
        n => (0..n).any(|i| point_segment_distance(p, hull[i], hull[(i + 1) % n]) <= tol),
    }
}

/// Classification of the intersection of two closed segments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegSeg {
    Disjoint,
    /// Single common point involving an endpoint of at least one segment.
    Touch(P2),
    /// Single common point interior to both segments, supporting lines
    /// distinct.
    Cross(P2),
    /// Collinear with a common sub-segment of positive length.
    Overlap(P2, P2),
}

/// Intersect closed segments [p1, p2] and [q1, q2].
pub fn seg_seg(p1: P2, p2: P2, q1: P2, q2: P2, tol: f64) -> SegSeg {
    let d1 = sub(p2, p1);
    let d2 = sub(q2, q1);
    let len1 = norm2(d1);
    let len2 = norm2(d2);
    debug_assert!(len1 > tol && len2 > tol, "degenerate segment input");

    // Collinear case: both q endpoints on the supporting line of p.
    let off1 = cross(d1, sub(q1, p1)) / len1;
    let off2 = cross(d1, sub(q2, p1)) / len1;
    if fm::fabs(off1) <= tol && fm::fabs(off2) <= tol {
        let t1 = dot2(sub(q1, p1), d1) / (len1 * len1);
        let t2 = dot2(sub(q2, p1), d1) / (len1 * len1);
        let (lo, hi) = (t1.min(t2), t1.max(t2));
        let start = lo.max(0.0);
        let end = hi.min(1.0);
        let overlap_len = (end - start) * len1;
        if overlap_len > tol {
            let a = [p1[0] + start * d1[0], p1[1] + start * d1[1]];
            let b = [p1[0] + end * d1[0], p1[1] + end * d1[1]];
            return SegSeg::Overlap(a, b);
        }
        if overlap_len > -tol {
            let m = 0.5 * (start + end);
            return SegSeg::Touch([p1[0] + m * d1[0], p1[1] + m * d1[1]]);
        }
        return SegSeg::Disjoint;
    }

    let denom = cross(d1, d2);
    if fm::fabs(denom) <= tol * (len1 * len2) {
        // Parallel, not collinear: snapped inputs keep a genuine gap.
        return SegSeg::Disjoint;
    }
    let t = cross(sub(q1, p1), d2) / denom;
    let u = cross(sub(q1, p1), d1) / denom;
    let et = tol / len1;
    let eu = tol / len2;
    if t < -et || t > 1.0 + et || u < -eu || u > 1.0 + eu {
        return SegSeg::Disjoint;
    }
    let x = [p1[0] + t * d1[0], p1[1] + t * d1[1]];
    let p_end = t <= et || t >= 1.0 - et;
    let q_end = u <= eu || u >= 1.0 - eu;
    if p_end || q_end {
        SegSeg::Touch(x)
    } else {
        SegSeg::Cross(x)
    }
}

/// How two convex hulls meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullRelation {
    Disjoint,
    /// Exactly one common point, lying on the relative boundary of both.
    TouchPointBoundary,
    /// Any other nonempty intersection.
    Other,
}

fn hull_edges(hull: &[P2]) -> Vec<(P2, P2)> {
    match hull.len() {
        0 | 1 => Vec::new(),
        2 => alloc::vec![(hull[0], hull[1])],
        n => (0..n).map(|i| (hull[i], hull[(i + 1) % n])).collect(),
    }
}

/// Relation of two convex hulls (each a point, segment, or CCW polygon):
/// collect the intersection's witness points (edge-edge meetings plus
/// mutually contained vertices); empty means disjoint, a single point on
/// both relative boundaries is a boundary touch, anything else is Other.
pub fn hull_relation(hp: &[P2], hq: &[P2], tol: f64) -> HullRelation {
    let mut witness: Vec<P2> = Vec::new();
    for &(a, b) in &hull_edges(hp) {
        for &(c, d) in &hull_edges(hq) {
            match seg_seg(a, b, c, d, tol) {
                SegSeg::Disjoint => {}
                SegSeg::Touch(x) | SegSeg::Cross(x) => witness.push(x),
                SegSeg::Overlap(x, y) => {
                    witness.push(x);
                    witness.push(y);
                }
            }
        }
    }
    // Containment without edge contact (nested hulls, points inside).
    for &v in hp {
        if point_in_hull(v, hq, tol) {
            witness.push(v);
        }
    }
    for &v in hq {
        if point_in_hull(v, hp, tol) {
            witness.push(v);
        }
    }
    if witness.is_empty() {
        return HullRelation::Disjoint;
    }
    let diameter = witness
        .iter()
        .flat_map(|&a| witness.iter().map(move |&b| dist(a, b)))
        .fold(0.0, f64::max);
    if diameter > tol {
        return HullRelation::Other;
    }
    let p = witness[0];
    if on_relative_boundary(p, hp, tol) && on_relative_boundary(p, hq, tol) {
        HullRelation::TouchPointBoundary
    } else {
        HullRelation::Other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: f64 = 1e-6;

    #[test]
    fn hull_of_square_with_interior_point() {
        let pts = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.5, 0.5]];
        let h = convex_hull(&pts, T);
        assert_eq!(h.len(), 4);
        // Counterclockwise orientation.
        for i in 0..4 {
            assert!(orient(h[i], h[(i + 1) % 4], h[(i + 2) % 4]) > 0.0);
        }
        assert!(point_in_hull([0.5, 0.5], &h, T));
        assert!(!point_in_hull([1.5, 0.5], &h, T));
        assert!(on_relative_boundary([0.5, 0.0], &h, T));
        assert!(!on_relative_boundary([0.5, 0.5], &h, T));
    }

    #[test]
    fn hull_degenerate_inputs() {
        assert_eq!(convex_hull(&[[1.0, 2.0], [1.0, 2.0]], T).len(), 1);
        let seg = convex_hull(&[[0.0, 0.0], [2.0, 0.0], [1.0, 0.0]], T);
        assert_eq!(seg.len(), 2);
        // Segment: interior is not relative boundary, endpoints are.
        assert!(on_relative_boundary([0.0, 0.0], &seg, T));
        assert!(!on_relative_boundary([1.0, 0.0], &seg, T));
        assert!(point_in_hull([1.0, 0.0], &seg, T));
    }

    #[test]
    fn seg_seg_cases() {
        // Proper crossing.
        match seg_seg([0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0], T) {
            SegSeg::Cross(x) => assert!(dist(x, [0.5, 0.5]) < 1e-9),
            other => panic!("{other:?}"),
        }
        // Shared endpoint.
        match seg_seg([0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [2.0, 1.0], T) {
            SegSeg::Touch(x) => assert!(dist(x, [1.0, 0.0]) < 1e-9),
            other => panic!("{other:?}"),
        }
        // T-junction: endpoint of one interior to the other.
        match seg_seg([0.0, 0.0], [2.0, 0.0], [1.0, 0.0], [1.0, 1.0], T) {
            SegSeg::Touch(x) => assert!(dist(x, [1.0, 0.0]) < 1e-9),
            other => panic!("{other:?}"),
        }
        // Parallel.
        assert_eq!(
            seg_seg([0.0, 0.0], [1.0, 0.0], [0.0, 0.5], [1.0, 0.5], T),
            SegSeg::Disjoint
        );
        // Collinear overlap.
        match seg_seg([0.0, 0.0], [2.0, 0.0], [1.0, 0.0], [3.0, 0.0], T) {
            SegSeg::Overlap(a, b) => {
                assert!(dist(a, [1.0, 0.0]) < 1e-9);
                assert!(dist(b, [2.0, 0.0]) < 1e-9);
            }
            other => panic!("{other:?}"),
        }
        // Collinear meeting at one point.
        match seg_seg([0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [2.0, 0.0], T) {
            SegSeg::Touch(x) => assert!(dist(x, [1.0, 0.0]) < 1e-9),
            other => panic!("{other:?}"),
        }
        // Collinear disjoint.
        assert_eq!(
            seg_seg([0.0, 0.0], [1.0, 0.0], [1.5, 0.0], [2.0, 0.0], T),
            SegSeg::Disjoint
        );
    }

    #[test]
    fn hull_relations() {
        let unit = convex_hull(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]], T);
        let far = convex_hull(&[[3.0, 0.0], [4.0, 0.0], [4.0, 1.0]], T);
        assert_eq!(hull_relation(&unit, &far, T), HullRelation::Disjoint);

        // Vertex-to-vertex touch.
        let corner = convex_hull(&[[1.0, 1.0], [2.0, 1.0], [2.0, 2.0]], T);
        assert_eq!(hull_relation(&unit, &corner, T), HullRelation::TouchPointBoundary);

        // Overlapping squares.
        let shifted = convex_hull(&[[0.5, 0.5], [1.5, 0.5], [1.5, 1.5], [0.5, 1.5]], T);
        assert_eq!(hull_relation(&unit, &shifted, T), HullRelation::Other);

        // Nested: no edge crossings, still Other.
        let inner = convex_hull(&[[0.25, 0.25], [0.75, 0.25], [0.75, 0.75], [0.25, 0.75]], T);
        assert_eq!(hull_relation(&unit, &inner, T), HullRelation::Other);

        // Point on a polygon vertex vs interior.
        let origin = [[0.0f64, 0.0]];
        assert_eq!(hull_relation(&origin, &unit, T), HullRelation::TouchPointBoundary);
        let center = [[0.5f64, 0.5]];
        assert_eq!(hull_relation(&center, &unit, T), HullRelation::Other);

        // Two coincident points.
        assert_eq!(
            hull_relation(&origin, &[[0.0, 0.0]], T),
            HullRelation::TouchPointBoundary
        );

        // Segment crossed through its interior by another segment: single
        // point, but interior to both, hence Other.
        let sa = [[-1.0f64, 0.0], [1.0, 0.0]];
        let sb = [[0.0f64, -1.0], [0.0, 1.0]];
        assert_eq!(hull_relation(&sa, &sb, T), HullRelation::Other);

        // Segment endpoint on another segment's endpoint: boundary touch.
        let sc = [[1.0f64, 0.0], [2.0, 1.0]];
        assert_eq!(hull_relation(&sa, &sc, T), HullRelation::TouchPointBoundary);

        // Point in the interior of a segment: Other (not on its relative
        // boundary).
        let mid = [[0.0f64, 0.0]];
        assert_eq!(hull_relation(&mid, &sa, T), HullRelation::Other);
    }
}
