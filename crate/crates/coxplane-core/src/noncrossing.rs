//! Noncrossing parabolics: the absolute-order interval below the bipartite
//! Coxeter element, orbit partition diagrams in the projection plane, and
//! the geometric crossing tests compared against that interval.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, GroupElement, OrbitPoints, Parabolic, Partition, TypeLabel};
use crate::geom::{self, HullRelation, P2, GEOM_TOL};
use crate::math;
use crate::plane::{Bipartition, ProjectedConfiguration};
use crate::{CoxError, Result};

/// Interval below the bipartite Coxeter element in absolute order, graded by
/// reflection length, together with the reflection sets of the parabolic
/// closures of its elements. Those closures are pairwise distinct, so the
/// set decides membership for parabolics.
pub struct Interval {
    /// Level k holds the elements of reflection length k below c.
    pub elements_by_rank: Vec<Vec<GroupElement>>,
    /// Sorted reflection sets of the parabolic closures, one per element.
    pub noncrossing_sets: Vec<u128>,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.elements_by_rank.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Membership of a parabolic in the interval's image under the
    /// fixed-space closure map.
    pub fn is_noncrossing(&self, par: &Parabolic) -> bool {
        self.noncrossing_sets.binary_search(&par.reflset).is_ok()
    }
}

/// Enumerate the interval by levels: an element of length k + 1 below c is
/// w t for some w of length k below c and a reflection t, so extending every
/// level element by every reflection and filtering on the two length
/// conditions reaches the whole interval.
pub fn enumerate_interval(sys: &CoxeterSystem, bip: &Bipartition) -> Interval {
    let n = sys.n;
    let nt = sys.num_reflections();
    let c_inv = sys.inverse(&bip.c);
    let mut levels: Vec<Vec<GroupElement>> = vec![vec![sys.identity()]];
    for k in 0..n {
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut next: Vec<GroupElement> = Vec::new();
        for w in &levels[k] {
            for t in 0..nt {
                let u = sys.multiply(w, sys.reflection(t).unwrap());
                if seen.contains(&u.perm) || sys.reflection_length(&u) != k + 1 {
                    continue;
                }
                let rest = sys.multiply(&sys.inverse(&u), &bip.c);
                if sys.reflection_length(&rest) != n - k - 1 {
                    continue;
                }
                seen.insert(u.perm.clone());
                next.push(u);
            }
        }
        next.sort();
        levels.push(next);
    }
    assert_eq!(levels[n].len(), 1, "the top level is the Coxeter element alone");
    assert!(sys.multiply(&levels[n][0], &c_inv).is_identity());

    let mut sets: Vec<u128> = levels
        .iter()
        .flatten()
        .map(|w| sys.parabolic_of_element(w).reflset)
        .collect();
    let total = sets.len();
    sets.sort_unstable();
    sets.dedup();
    assert_eq!(sets.len(), total, "interval elements have distinct parabolic closures");

    Interval {
        elements_by_rank: levels,
        noncrossing_sets: sets,
    }
}

/// Orbit partition of a parabolic together with the drawn matching
/// segments: one segment per reflection-related pair of orbit points.
/// Segments are unordered pairs of orbit indices.
pub struct PartitionDiagram {
    pub blocks: Partition,
    pub segments: Vec<(usize, usize)>,
}

pub fn partition_diagram(
    sys: &CoxeterSystem,
    par: &Parabolic,
    o: &OrbitPoints,
    cfg: &ProjectedConfiguration,
) -> Result<PartitionDiagram> {
    let blocks = sys.orbit_partition(par, o);
    let mut segs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for t in par.reflections() {
        let beta = &sys.roots[sys.reflections[t] as usize].coord;
        for x in 0..o.len() {
            let mut img = o.points[x].clone();
            let inner = math::dot(beta, &o.points[x]);
            math::axpy(&mut img, -2.0 * inner, beta);
            let y = o.index_of(&img).expect("orbit closed under reflections");
            if y == x {
                continue;
            }
            let (a, b) = (x.min(y), x.max(y));
            if geom::dist(cfg.coords[a], cfg.coords[b]) <= GEOM_TOL {
                // A reflection-related pair differs by a multiple of the
                // root, which never projects to zero, so coincident
                // endpoints indicate corrupted input.
                return Err(CoxError::DegenerateSegment(format!(
                    "{}: orbit points {a} and {b} project to the same position",
                    sys.label
                )));
            }
            segs.insert((a, b));
        }
    }
    Ok(PartitionDiagram {
        blocks,
        segments: segs.into_iter().collect(),
    })
}

/// Convex hulls of the blocks in snapped plane coordinates.
pub fn block_hulls(diag: &PartitionDiagram, cfg: &ProjectedConfiguration) -> Vec<Vec<P2>> {
    diag.blocks
        .iter()
        .map(|b| {
            let pts: Vec<P2> = b.iter().map(|&i| cfg.coords[i]).collect();
            geom::convex_hull(&pts, GEOM_TOL)
        })
        .collect()
}

/// Strict disjointness: every pair of block hulls has empty intersection.
/// Coincident origin points in different blocks already violate this.
pub fn nc_criterion_a(diag: &PartitionDiagram, cfg: &ProjectedConfiguration) -> bool {
    let hulls = block_hulls(diag, cfg);
    for i in 0..hulls.len() {
        for j in i + 1..hulls.len() {
            if geom::hull_relation(&hulls[i], &hulls[j], GEOM_TOL) != HullRelation::Disjoint {
                return false;
            }
        }
    }
    true
}

/// Relaxed disjointness: block hulls may also meet in a single point lying
/// on the relative boundary of both.
pub fn nc_criterion_d(diag: &PartitionDiagram, cfg: &ProjectedConfiguration) -> bool {
    let hulls = block_hulls(diag, cfg);
    for i in 0..hulls.len() {
        for j in i + 1..hulls.len() {
            if geom::hull_relation(&hulls[i], &hulls[j], GEOM_TOL) == HullRelation::Other {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NcCriterion {
    A,
    D,
}

impl core::fmt::Display for NcCriterion {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            NcCriterion::A => write!(f, "ncA"),
            NcCriterion::D => write!(f, "ncD"),
        }
    }
}

/// Aggregate for parabolics sharing rank and reflection-set size (which
/// separates the conjugacy classes in the small ranks under study).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassProfile {
    pub rank: usize,
    pub set_size: u32,
    pub total: usize,
    /// Count below the Coxeter element (the algebraic definition).
    pub noncrossing: usize,
    /// Count passing the geometric criterion.
    pub geometric: usize,
}

/// Comparison of a geometric criterion against the interval oracle over all
/// parabolics of a system.
pub struct NcReport {
    pub label: TypeLabel,
    pub criterion: NcCriterion,
    pub total: usize,
    /// Geometric pass, oracle crossing.
    pub false_positives: Vec<u128>,
    /// Geometric fail, oracle noncrossing.
    pub false_negatives: Vec<u128>,
    pub profiles: Vec<ClassProfile>,
}

impl NcReport {
    pub fn exact(&self) -> bool {
        self.false_positives.is_empty() && self.false_negatives.is_empty()
    }
}

/// Run one geometric criterion over every parabolic subgroup and compare
/// with interval membership. `budget` caps the parabolic enumeration.
pub fn verify_nc(
    sys: &CoxeterSystem,
    bip: &Bipartition,
    criterion: NcCriterion,
    budget: usize,
) -> Result<NcReport> {
    let interval = enumerate_interval(sys, bip);
    let o = sys.smallest_orbit();
    let pb = crate::plane::coxeter_plane(sys, bip)?;
    let cfg = crate::plane::project_orbit(sys, bip, &pb, &o)?;
    let pars = sys.enumerate_parabolics(budget)?;

    let mut false_positives = Vec::new();
    let mut false_negatives = Vec::new();
    let mut profile_map: BTreeMap<(usize, u32), ClassProfile> = BTreeMap::new();
    for par in &pars {
        let diag = partition_diagram(sys, par, &o, &cfg)?;
        let geo = match criterion {
            NcCriterion::A => nc_criterion_a(&diag, &cfg),
            NcCriterion::D => nc_criterion_d(&diag, &cfg),
        };
        let alg = interval.is_noncrossing(par);
        if geo && !alg {
            false_positives.push(par.reflset);
        }
        if !geo && alg {
            false_negatives.push(par.reflset);
        }
        let entry = profile_map
            .entry((par.rank, par.reflset.count_ones()))
            .or_insert(ClassProfile {
                rank: par.rank,
                set_size: par.reflset.count_ones(),
                total: 0,
                noncrossing: 0,
                geometric: 0,
            });
        entry.total += 1;
        entry.noncrossing += alg as usize;
        entry.geometric += geo as usize;
    }
    Ok(NcReport {
        label: sys.label,
        criterion,
        total: pars.len(),
        false_positives,
        false_negatives,
        profiles: profile_map.into_values().collect(),
    })
}

/// Group parabolics into orbits under conjugation by the two bipartite
/// factors (hence by the whole dihedral group they generate, which contains
/// the Coxeter element).
pub fn conjugation_classes(
    sys: &CoxeterSystem,
    bip: &Bipartition,
    pars: &[Parabolic],
) -> Vec<Vec<usize>> {
    let index_of: BTreeMap<u128, usize> =
        pars.iter().enumerate().map(|(i, p)| (p.reflset, i)).collect();
    let mut class_of: Vec<Option<usize>> = vec![None; pars.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..pars.len() {
        if class_of[start].is_some() {
            continue;
        }
        let cid = classes.len();
        let mut members = vec![start];
        class_of[start] = Some(cid);
        let mut head = 0;
        while head < members.len() {
            let cur = members[head];
            head += 1;
            for g in [&bip.c_plus, &bip.c_minus] {
                let img = sys.conjugate_parabolic(g, &pars[cur]);
                let j = *index_of
                    .get(&img.reflset)
                    .expect("conjugation permutes the parabolics");
                if class_of[j].is_none() {
                    class_of[j] = Some(cid);
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}
