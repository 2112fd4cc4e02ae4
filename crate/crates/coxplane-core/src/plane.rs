//! The rotation plane of the bipartite Coxeter element and the projection of
//! orbits onto it.
//!
//! The element c = c_- c_+ rotates a unique 2-dimensional invariant plane P
//! by 2 pi/h. Projecting a group orbit to P decomposes it into concentric
//! regular h-gons (one per c-orbit) plus points at the origin. Everything
//! downstream works on the snapped combinatorial data produced here: ring
//! index, angular index, exact phase, and origin labels.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, GroupElement, OrbitPoints};
use crate::math::{self, fm, Mat, PI};
use crate::{CoxError, Result};

/// Angle tolerance for snapping phases and verifying rotation actions. The
/// smallest genuine angular gap in any supported configuration is
/// pi/(h+2) >= pi/130 ~ 0.024, five orders of magnitude above this.
pub const ANGLE_TOL: f64 = 1e-7;

/// The two-coloring of the diagram with the elements it induces.
#[derive(Debug, Clone)]
pub struct Bipartition {
    pub s_plus: Vec<usize>,
    pub s_minus: Vec<usize>,
    pub c_plus: GroupElement,
    pub c_minus: GroupElement,
    /// c = c_minus * c_plus (c_plus applied first).
    pub c: GroupElement,
}

/// Canonical bipartition: simple 0 lands in the plus part.
pub fn bipartition(sys: &CoxeterSystem) -> Bipartition {
    build_bipartition(sys, false)
}

/// The opposite coloring (plus and minus swapped). Criterion verdicts must
/// not depend on this choice; tests exercise both.
pub fn bipartition_swapped(sys: &CoxeterSystem) -> Bipartition {
    build_bipartition(sys, true)
}

fn build_bipartition(sys: &CoxeterSystem, swapped: bool) -> Bipartition {
    let (s_plus, s_minus) = if swapped {
        (sys.s_minus.clone(), sys.s_plus.clone())
    } else {
        (sys.s_plus.clone(), sys.s_minus.clone())
    };
    let product = |part: &[usize]| {
        let mut w = sys.identity();
        for &i in part {
            w = sys.multiply(&w, sys.simple(i).expect("part index in range"));
        }
        w
    };
    let c_plus = product(&s_plus);
    let c_minus = product(&s_minus);
    let c = sys.multiply(&c_minus, &c_plus);
    debug_assert!(sys.multiply(&c_plus, &c_plus).is_identity());
    debug_assert!(sys.multiply(&c_minus, &c_minus).is_identity());
    Bipartition {
        s_plus,
        s_minus,
        c_plus,
        c_minus,
        c,
    }
}

/// Orthonormal coordinates on the rotation plane P, canonically rotated so
/// that L_- is the x-axis and c rotates by +2 pi/h.
#[derive(Debug, Clone)]
pub struct PlaneBasis {
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    /// Angle of the line L_+ = H_s cap P (s in S_+), in [0, pi).
    pub l_plus_angle: f64,
    /// Angle of L_-; zero by the canonical rotation.
    pub l_minus_angle: f64,
}

impl PlaneBasis {
    /// Project a vector to (x, y) coordinates on P.
    pub fn project(&self, x: &[f64]) -> [f64; 2] {
        [math::dot(x, &self.u), math::dot(x, &self.v)]
    }
}

/// Extract the Coxeter plane: the 2-dimensional eigenspace of
/// (M + M^T)/2 for eigenvalue cos(2 pi/h), where M is the matrix of c.
pub fn coxeter_plane(sys: &CoxeterSystem, bip: &Bipartition) -> Result<PlaneBasis> {
    let n = sys.n;
    let h = sys.h;
    let m = &bip.c.matrix;
    let mut q = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            q.set(i, j, 0.5 * (m.get(i, j) + m.get(j, i)));
        }
    }
    let target = fm::cos(2.0 * PI / h as f64);
    let (vals, vecs) = math::jacobi_eigen(&q);
    let picked: Vec<usize> = (0..n).filter(|&k| fm::fabs(vals[k] - target) < 1e-6).collect();
    if picked.len() != 2 {
        return Err(CoxError::EigenbasisDegenerate(format!(
            "{}: eigenvalue cos(2 pi/{h}) has multiplicity {}",
            sys.label,
            picked.len()
        )));
    }
    let mut u = vecs.col(picked[0]);
    let mut v = vecs.col(picked[1]);
    // Re-orthonormalize within the eigenspace for belt and braces.
    let basis = math::orthonormalize(&[u.clone(), v.clone()], 1e-9);
    u = basis[0].clone();
    v = basis[1].clone();

    // Orient: c must rotate (u, v) by +2 pi/h.
    let rot_entry = |a: &[f64], b: &[f64]| math::dot(a, &m.apply(b));
    if rot_entry(&v, &u) < 0.0 {
        math::scale(&mut v, -1.0);
    }
    let verify_rotation = |u: &[f64], v: &[f64]| -> bool {
        let (c11, c12) = (rot_entry(u, u), rot_entry(u, v));
        let (c21, c22) = (rot_entry(v, u), rot_entry(v, v));
        let (ch, sh) = (fm::cos(2.0 * PI / h as f64), fm::sin(2.0 * PI / h as f64));
        fm::fabs(c11 - ch) < ANGLE_TOL
            && fm::fabs(c22 - ch) < ANGLE_TOL
            && fm::fabs(c21 - sh) < ANGLE_TOL
            && fm::fabs(c12 + sh) < ANGLE_TOL
    };
    assert!(verify_rotation(&u, &v), "c does not act as a +2 pi/h rotation on P");

    // Line angle of H_s cap P for a simple s: perpendicular (within P) to
    // the projected root normal, which never vanishes on P.
    let line_angle = |u: &[f64], v: &[f64], s: usize| -> f64 {
        let alpha = sys.simple_coords.row(s);
        let (a, b) = (math::dot(alpha, u), math::dot(alpha, v));
        assert!(
            fm::hypot(a, b) > 1e-6,
            "no reflection hyperplane contains the Coxeter plane"
        );
        math::wrap_angle(fm::atan2(b, a) + PI / 2.0, PI)
    };
    let part_angle = |u: &[f64], v: &[f64], part: &[usize]| -> f64 {
        let angles: Vec<f64> = part.iter().map(|&s| line_angle(u, v, s)).collect();
        for w in angles.windows(2) {
            assert!(
                math::angle_dist(w[0], w[1], PI) < ANGLE_TOL,
                "hyperplanes of one part must cut P in a single line"
            );
        }
        angles[0]
    };

    let theta0 = part_angle(&u, &v, &bip.s_minus);
    // Rotate the frame so that L_- is the x-axis (preserves orientation).
    let (ct, st) = (fm::cos(theta0), fm::sin(theta0));
    let new_u: Vec<f64> = u.iter().zip(&v).map(|(x, y)| ct * x + st * y).collect();
    let new_v: Vec<f64> = u.iter().zip(&v).map(|(x, y)| -st * x + ct * y).collect();
    let (u, v) = (new_u, new_v);
    assert!(verify_rotation(&u, &v));

    let l_minus_angle = 0.0;
    debug_assert!(math::angle_dist(part_angle(&u, &v, &bip.s_minus), 0.0, PI) < ANGLE_TOL);
    let l_plus_angle = part_angle(&u, &v, &bip.s_plus);
    // c = (reflection in L_-)(reflection in L_+) rotating by +2 pi/h forces
    // the angle from L_+ up to L_- to be pi/h.
    assert!(
        math::angle_dist(l_plus_angle, PI - PI / h as f64, PI) < ANGLE_TOL,
        "L_+ must sit at -pi/h mod pi"
    );

    // The part products act on P as the reflections in their lines.
    for (el, angle) in [(&bip.c_minus, l_minus_angle), (&bip.c_plus, l_plus_angle)] {
        let dir: Vec<f64> = u
            .iter()
            .zip(&v)
            .map(|(x, y)| fm::cos(angle) * x + fm::sin(angle) * y)
            .collect();
        let normal: Vec<f64> = u
            .iter()
            .zip(&v)
            .map(|(x, y)| -fm::sin(angle) * x + fm::cos(angle) * y)
            .collect();
        let on_axis = el.apply(&dir);
        let off_axis = el.apply(&normal);
        for i in 0..n {
            assert!(fm::fabs(on_axis[i] - dir[i]) < 1e-7, "part product fixes its line");
            assert!(fm::fabs(off_axis[i] + normal[i]) < 1e-7, "part product flips the normal");
        }
    }

    Ok(PlaneBasis {
        u,
        v,
        l_plus_angle: math::wrap_angle(PI - PI / h as f64, PI),
        l_minus_angle,
    })
}

/// One c-orbit in the projection: a regular h-gon. Vertex k sits at angle
/// `phase + 2 pi k / h`; `phase` is snapped to an exact multiple of pi/h.
#[derive(Debug, Clone)]
pub struct Ring {
    pub radius: f64,
    pub count: usize,
    pub phase: f64,
    /// 0 if phase = 0, 1 if phase = pi/h.
    pub phase_step: usize,
}

/// Where an orbit point lands in the projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    OnRing { ring: usize, k: usize },
    AtOrigin { slot: usize },
}

/// The snapped projection of one orbit: rings sorted by decreasing radius,
/// plus labeled origin points and the c_+/c_- action on the origin slots.
#[derive(Debug, Clone)]
pub struct ProjectedConfiguration {
    pub h: usize,
    pub rings: Vec<Ring>,
    /// Orbit index -> place.
    pub place: Vec<Place>,
    /// Slot -> orbit index of the origin point (ascending).
    pub origin_labels: Vec<usize>,
    /// Slot permutations of the origin points under c_plus / c_minus.
    pub cplus_origin: Vec<usize>,
    pub cminus_origin: Vec<usize>,
    /// Planar coordinates per orbit index (snapped positions).
    pub coords: Vec<[f64; 2]>,
}

impl ProjectedConfiguration {
    /// Exact vertex angle for a ring position.
    pub fn vertex_angle(&self, ring: usize, k: usize) -> f64 {
        let r = &self.rings[ring];
        math::wrap_angle(r.phase + 2.0 * PI * k as f64 / r.count as f64, 2.0 * PI)
    }

    pub fn num_points(&self) -> usize {
        self.place.len()
    }
}

/// Project an orbit to P and snap it to rings and origin points.
pub fn project_orbit(
    sys: &CoxeterSystem,
    bip: &Bipartition,
    pb: &PlaneBasis,
    o: &OrbitPoints,
) -> Result<ProjectedConfiguration> {
    let h = sys.h;
    let raw: Vec<[f64; 2]> = o.points.iter().map(|p| pb.project(p)).collect();

    // Origin points: the projection either vanishes exactly (up to rounding)
    // or the point lies on a ring of macroscopic radius.
    let mut origin_labels: Vec<usize> = Vec::new();
    let mut ring_members: Vec<Vec<usize>> = Vec::new();
    let mut radii: Vec<f64> = Vec::new();
    for (i, p) in raw.iter().enumerate() {
        let r = fm::hypot(p[0], p[1]);
        if r < 1e-9 {
            origin_labels.push(i);
            continue;
        }
        if r < 1e-3 {
            return Err(CoxError::SnapFailure(format!(
                "{}: projected radius {r} is neither zero nor macroscopic",
                sys.label
            )));
        }
        match radii.iter().position(|&q| fm::fabs(q - r) < 1e-7) {
            Some(g) => ring_members[g].push(i),
            None => {
                radii.push(r);
                ring_members.push(vec![i]);
            }
        }
    }
    // Sort rings by strictly decreasing radius.
    let mut order: Vec<usize> = (0..radii.len()).collect();
    order.sort_by(|&a, &b| radii[b].partial_cmp(&radii[a]).unwrap());
    for w in order.windows(2) {
        assert!(
            radii[w[0]] - radii[w[1]] > 1e-6,
            "distinct rings must have well-separated radii"
        );
    }

    let mut rings: Vec<Ring> = Vec::new();
    let mut place: Vec<Place> = vec![Place::AtOrigin { slot: usize::MAX }; o.len()];
    for (slot, &i) in origin_labels.iter().enumerate() {
        place[i] = Place::AtOrigin { slot };
    }
    for (ring_idx, &g) in order.iter().enumerate() {
        let members = &ring_members[g];
        if members.len() != h {
            return Err(CoxError::SnapFailure(format!(
                "{}: ring of radius {} has {} points, expected h={h}",
                sys.label,
                radii[g],
                members.len()
            )));
        }
        // All member angles agree modulo 2 pi/h; the common residue must be
        // an exact multiple of pi/h because the configuration is symmetric
        // under the reflection in L_-.
        let step = 2.0 * PI / h as f64;
        let rep = fm::atan2(raw[members[0]][1], raw[members[0]][0]);
        let rep_mod = math::wrap_angle(rep, step);
        for &i in members {
            let a = fm::atan2(raw[i][1], raw[i][0]);
            if math::angle_dist(a, rep, step) > ANGLE_TOL {
                return Err(CoxError::SnapFailure(format!(
                    "{}: ring point off the regular-polygon lattice",
                    sys.label
                )));
            }
        }
        let half = PI / h as f64;
        let steps = fm::round(rep_mod / half);
        if fm::fabs(rep_mod - steps * half) > ANGLE_TOL {
            return Err(CoxError::SnapFailure(format!(
                "{}: ring phase {rep_mod} is not a multiple of pi/{h}",
                sys.label
            )));
        }
        let phase_step = (steps as usize) % 2;
        let phase = phase_step as f64 * half;
        for &i in members {
            let a = fm::atan2(raw[i][1], raw[i][0]);
            let k_real = math::wrap_angle(a - phase, 2.0 * PI) / step;
            let k = (fm::round(k_real) as usize) % h;
            assert!(
                math::angle_dist(a, phase + k as f64 * step, 2.0 * PI) < ANGLE_TOL,
                "angular index must snap"
            );
            place[i] = Place::OnRing { ring: ring_idx, k };
        }
        rings.push(Ring {
            radius: radii[g],
            count: h,
            phase,
            phase_step,
        });
    }
    // Each ring position is hit exactly once.
    for (ri, ring) in rings.iter().enumerate() {
        let mut seen = vec![false; ring.count];
        for p in &place {
            if let Place::OnRing { ring: r, k } = *p {
                if r == ri {
                    assert!(!seen[k], "duplicate angular index");
                    seen[k] = true;
                }
            }
        }
        assert!(seen.iter().all(|&s| s), "missing angular index");
    }

    // Snapped coordinates.
    let coords: Vec<[f64; 2]> = place
        .iter()
        .map(|p| match *p {
            Place::AtOrigin { .. } => [0.0, 0.0],
            Place::OnRing { ring, k } => {
                let r = &rings[ring];
                let a = r.phase + 2.0 * PI * k as f64 / r.count as f64;
                [r.radius * fm::cos(a), r.radius * fm::sin(a)]
            }
        })
        .collect();

    // c advances the angular index by +1 on every ring.
    let advance = |el: &GroupElement, i: usize| -> usize {
        let img = el.apply(&o.points[i]);
        o.index_of(&img).expect("orbit closed under the group")
    };
    for i in 0..o.len() {
        let j = advance(&bip.c, i);
        match (place[i], place[j]) {
            (Place::OnRing { ring: r1, k: k1 }, Place::OnRing { ring: r2, k: k2 }) => {
                assert_eq!(r1, r2, "c preserves rings");
                assert_eq!((k1 + 1) % h, k2, "c advances angular index by one");
            }
            (Place::AtOrigin { .. }, Place::AtOrigin { .. }) => {}
            _ => panic!("c must preserve the origin fiber"),
        }
    }

    // Origin-slot action of the part products (each an involution).
    let origin_perm = |el: &GroupElement| -> Vec<usize> {
        let perm: Vec<usize> = origin_labels
            .iter()
            .map(|&i| {
                let j = advance(el, i);
                origin_labels
                    .iter()
                    .position(|&x| x == j)
                    .expect("part products preserve the origin fiber")
            })
            .collect();
        for (a, &b) in perm.iter().enumerate() {
            assert_eq!(perm[b], a, "origin action of an involution is an involution");
        }
        perm
    };
    let cplus_origin = origin_perm(&bip.c_plus);
    let cminus_origin = origin_perm(&bip.c_minus);

    Ok(ProjectedConfiguration {
        h,
        rings,
        place,
        origin_labels,
        cplus_origin,
        cminus_origin,
        coords,
    })
}

/// Result of the dichotomy check on reflection hyperplanes under the
/// conjugation action of the part products.
#[derive(Debug, Clone)]
pub struct HyperplaneOrbitReport {
    /// Orbits of reflection indices, each sorted, ordered by first element.
    pub orbits: Vec<Vec<usize>>,
    pub failures: Vec<String>,
}

impl HyperplaneOrbitReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Partition the reflections into orbits of the conjugation action of
/// c_+ and c_-, and check the size/simple/longest-element dichotomy: an
/// orbit either has h/2 elements, contains exactly one simple hyperplane,
/// and that hyperplane is preserved by w_0; or it has h elements and
/// contains exactly two simple hyperplanes, swapped by w_0.
pub fn hyperplane_orbit_check(sys: &CoxeterSystem, bip: &Bipartition) -> HyperplaneOrbitReport {
    let conj_refl = |el: &GroupElement, t: usize| -> usize {
        let img = el.perm[sys.root_of_reflection(t)] as usize;
        sys.reflection_of_root(img)
    };
    let mut orbit_of = vec![usize::MAX; sys.num_reflections()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for t0 in 0..sys.num_reflections() {
        if orbit_of[t0] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![t0];
        orbit_of[t0] = id;
        let mut head = 0;
        while head < members.len() {
            let t = members[head];
            head += 1;
            for el in [&bip.c_plus, &bip.c_minus] {
                let u = conj_refl(el, t);
                if orbit_of[u] == usize::MAX {
                    orbit_of[u] = id;
                    members.push(u);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }

    let w0 = sys.longest_element();
    let w0_refl = |t: usize| -> usize {
        let img = w0.perm[sys.root_of_reflection(t)] as usize;
        sys.reflection_of_root(img)
    };
    let mut failures: Vec<String> = Vec::new();
    let h = sys.h;
    for (id, members) in orbits.iter().enumerate() {
        let simples: Vec<usize> = members.iter().copied().filter(|&t| t < sys.n).collect();
        if members.len() * 2 == h {
            if simples.len() != 1 {
                failures.push(format!(
                    "orbit {id}: size h/2 with {} simple hyperplanes",
                    simples.len()
                ));
                continue;
            }
            if w0_refl(simples[0]) != simples[0] {
                failures.push(format!("orbit {id}: w0 moves the simple hyperplane"));
            }
        } else if members.len() == h {
            if simples.len() != 2 {
                failures.push(format!(
                    "orbit {id}: size h with {} simple hyperplanes",
                    simples.len()
                ));
                continue;
            }
            if w0_refl(simples[0]) != simples[1] {
                failures.push(format!("orbit {id}: w0 does not swap the simple pair"));
            }
        } else {
            failures.push(format!(
                "orbit {id}: size {} is neither h/2 nor h",
                members.len()
            ));
        }
    }
    HyperplaneOrbitReport { orbits, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_coxeter_system, TypeLabel};

    fn setup(label: &str) -> (CoxeterSystem, Bipartition) {
        let s = build_coxeter_system(TypeLabel::parse(label).unwrap()).unwrap();
        let b = bipartition(&s);
        (s, b)
    }

    #[test]
    fn bipartition_parts_match_conventions() {
        let (_, b) = setup("A3");
        assert_eq!((b.s_plus, b.s_minus), (vec![0, 2], vec![1]));
        let (_, b) = setup("H3");
        assert_eq!((b.s_plus, b.s_minus), (vec![0, 2], vec![1]));
        let (_, b) = setup("E6");
        assert_eq!((b.s_plus, b.s_minus), (vec![0, 3, 5], vec![1, 2, 4]));
        let (_, b) = setup("F4");
        assert_eq!((b.s_plus, b.s_minus), (vec![0, 2], vec![1, 3]));
        // D4: the two fork tips share a color with each other.
        let (_, b) = setup("D4");
        assert_eq!((b.s_plus, b.s_minus), (vec![0, 2, 3], vec![1]));
    }

    #[test]
    fn bipartition_element_orders() {
        for label in ["A3", "B4", "D5", "H3", "F4", "I2(7)", "E6"] {
            let (s, b) = setup(label);
            assert!(s.multiply(&b.c_plus, &b.c_plus).is_identity());
            assert!(s.multiply(&b.c_minus, &b.c_minus).is_identity());
            let mut acc = b.c.clone();
            let mut ord = 1;
            while !acc.is_identity() {
                acc = s.multiply(&acc, &b.c);
                ord += 1;
            }
            assert_eq!(ord, s.h, "{label}: order of c");
            // Swapped coloring gives the inverse Coxeter element.
            let bs = bipartition_swapped(&s);
            assert!(s.multiply(&bs.c, &b.c).is_identity());
        }
    }

    #[test]
    fn plane_rejects_rank_one() {
        let (s, b) = setup("A1");
        assert!(matches!(
            coxeter_plane(&s, &b),
            Err(CoxError::EigenbasisDegenerate(_))
        ));
    }

    #[test]
    fn plane_is_identity_for_dihedral() {
        for label in ["A2", "I2(5)", "I2(12)"] {
            let (s, b) = setup(label);
            let pb = coxeter_plane(&s, &b).unwrap();
            // u, v span all of V: projection preserves norms.
            for r in &s.roots {
                let p = pb.project(&r.coord);
                assert!(fm::fabs(fm::hypot(p[0], p[1]) - 1.0) < 1e-9, "{label}");
            }
            assert_eq!(pb.l_minus_angle, 0.0);
            assert!(math::angle_dist(pb.l_plus_angle, PI - PI / s.h as f64, PI) < 1e-9);
        }
    }

    #[test]
    fn canonical_frame_for_all_types() {
        for label in ["A3", "B3", "D4", "D5", "H3", "H4", "F4", "E6"] {
            let (s, b) = setup(label);
            let pb = coxeter_plane(&s, &b).unwrap();
            assert_eq!(pb.l_minus_angle, 0.0, "{label}");
            assert!(
                math::angle_dist(pb.l_plus_angle, PI - PI / s.h as f64, PI) < 1e-9,
                "{label}"
            );
            assert!(fm::fabs(math::dot(&pb.u, &pb.v)) < 1e-9);
            assert!(fm::fabs(math::norm(&pb.u) - 1.0) < 1e-9);
            assert!(fm::fabs(math::norm(&pb.v) - 1.0) < 1e-9);
        }
    }

    #[test]
    fn ring_structure_per_type() {
        // (label, ring count, origin multiplicity)
        for (label, nrings, norigin) in [
            ("A2", 1, 0),
            ("A3", 1, 0),
            ("A4", 1, 0),
            ("B2", 1, 0),
            ("B3", 1, 0),
            ("B4", 1, 0),
            ("D4", 1, 2),
            ("D5", 1, 2),
            ("I2(7)", 1, 0),
            ("H3", 1, 2),
            ("F4", 2, 0),
            ("E6", 2, 3),
        ] {
            let (s, b) = setup(label);
            let pb = coxeter_plane(&s, &b).unwrap();
            let o = s.smallest_orbit();
            let cfg = project_orbit(&s, &b, &pb, &o).unwrap();
            assert_eq!(cfg.rings.len(), nrings, "{label} rings");
            assert_eq!(cfg.origin_labels.len(), norigin, "{label} origin");
            assert_eq!(
                cfg.rings.len() * s.h + cfg.origin_labels.len(),
                o.len(),
                "{label} point count"
            );
            for w in cfg.rings.windows(2) {
                assert!(w[0].radius > w[1].radius, "{label} ring order");
            }
        }
    }

    #[test]
    fn ring_structure_largest_types() {
        for (label, nrings, norigin) in [("E7", 3, 2), ("H4", 4, 0), ("E8", 8, 0)] {
            let (s, b) = setup(label);
            let pb = coxeter_plane(&s, &b).unwrap();
            let o = s.smallest_orbit();
            let cfg = project_orbit(&s, &b, &pb, &o).unwrap();
            assert_eq!(cfg.rings.len(), nrings, "{label} rings");
            assert_eq!(cfg.origin_labels.len(), norigin, "{label} origin");
        }
    }

    #[test]
    fn projection_commutes_with_c() {
        let (s, b) = setup("H3");
        let pb = coxeter_plane(&s, &b).unwrap();
        let o = s.smallest_orbit();
        let step = 2.0 * PI / s.h as f64;
        for p in &o.points {
            let before = pb.project(p);
            let after = pb.project(&b.c.apply(p));
            let rotated = [
                before[0] * fm::cos(step) - before[1] * fm::sin(step),
                before[0] * fm::sin(step) + before[1] * fm::cos(step),
            ];
            assert!(fm::fabs(after[0] - rotated[0]) < 1e-9);
            assert!(fm::fabs(after[1] - rotated[1]) < 1e-9);
        }
    }

    #[test]
    fn hyperplane_orbit_dichotomy() {
        // B2 (h=4): two orbits of size 2, each with one simple hyperplane.
        let (s, b) = setup("B2");
        let rep = hyperplane_orbit_check(&s, &b);
        assert!(rep.ok(), "{:?}", rep.failures);
        let mut sizes: Vec<usize> = rep.orbits.iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2]);

        // A2 (h=3, odd): one orbit of size 3 with two simple hyperplanes.
        let (s, b) = setup("A2");
        let rep = hyperplane_orbit_check(&s, &b);
        assert!(rep.ok(), "{:?}", rep.failures);
        assert_eq!(rep.orbits.len(), 1);
        assert_eq!(rep.orbits[0].len(), 3);

        for label in ["A3", "A4", "B3", "B4", "D4", "D5", "H3", "H4", "F4", "E6", "I2(9)"] {
            let (s, b) = setup(label);
            let rep = hyperplane_orbit_check(&s, &b);
            assert!(rep.ok(), "{label}: {:?}", rep.failures);
            let total: usize = rep.orbits.iter().map(|o| o.len()).sum();
            assert_eq!(total, s.num_reflections(), "{label}");
        }
    }

    #[test]
    fn origin_actions_are_stored_involutions() {
        for label in ["D4", "D5", "H3", "E6"] {
            let (s, b) = setup(label);
            let pb = coxeter_plane(&s, &b).unwrap();
            let o = s.smallest_orbit();
            let cfg = project_orbit(&s, &b, &pb, &o).unwrap();
            for perm in [&cfg.cplus_origin, &cfg.cminus_origin] {
                assert_eq!(perm.len(), cfg.origin_labels.len(), "{label}");
                for (a, &bb) in perm.iter().enumerate() {
                    assert_eq!(perm[bb], a, "{label}");
                }
            }
        }
    }
}
