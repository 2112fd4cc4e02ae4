//! Staged pipeline composition: a [`Projection`] carries everything up to
//! the planar orbit configuration, a [`Scene`] adds the almost positive
//! roots, their diagrams, and the compatibility oracle.

use coxplane_core::clusters::{
    almost_positive_roots, compatibility, tau_maps, ApRoots, Compat, Tau,
};
use coxplane_core::coxeter::{build_coxeter_system, CoxeterSystem, OrbitPoints, TypeLabel};
use coxplane_core::diagrams::{all_root_diagrams, expand_configuration, Expanded, RootDiagram};
use coxplane_core::plane::{
    bipartition, coxeter_plane, project_orbit, Bipartition, PlaneBasis, ProjectedConfiguration,
};
use coxplane_core::Result;

/// Group data through the snapped planar projection of the smallest orbit.
pub struct Projection {
    pub sys: CoxeterSystem,
    pub bip: Bipartition,
    pub orbit: OrbitPoints,
    pub basis: PlaneBasis,
    pub cfg: ProjectedConfiguration,
}

impl Projection {
    pub fn build(label: TypeLabel) -> Result<Projection> {
        let sys = build_coxeter_system(label)?;
        let bip = bipartition(&sys);
        let orbit = sys.smallest_orbit();
        let basis = coxeter_plane(&sys, &bip)?;
        let cfg = project_orbit(&sys, &bip, &basis, &orbit)?;
        Ok(Projection {
            sys,
            bip,
            orbit,
            basis,
            cfg,
        })
    }
}

/// A projection extended with the expanded configuration, one diagram per
/// almost positive root, and the algebraic compatibility relation.
pub struct Scene {
    pub proj: Projection,
    pub ap: ApRoots,
    pub tau: Tau,
    pub exp: Expanded,
    pub diagrams: Vec<RootDiagram>,
    pub compat: Compat,
}

impl Scene {
    pub fn build(label: TypeLabel) -> Result<Scene> {
        let proj = Projection::build(label)?;
        let ap = almost_positive_roots(&proj.sys);
        let tau = tau_maps(&proj.sys, &proj.bip, &ap)?;
        let exp = expand_configuration(&proj.sys, &proj.bip, &proj.orbit, &proj.cfg)?;
        let diagrams = all_root_diagrams(&proj.sys, &exp, &ap, &tau)?;
        let compat = compatibility(&proj.sys, &proj.bip)?;
        Ok(Scene {
            proj,
            ap,
            tau,
            exp,
            diagrams,
            compat,
        })
    }

    pub fn sys(&self) -> &CoxeterSystem {
        &self.proj.sys
    }
}

/// Stable display name of an almost positive root: `-a3` for a negative
/// simple, `+a3` for a positive simple, `+r17` (registry index) otherwise.
pub fn root_name(sys: &CoxeterSystem, ap: &ApRoots, idx: usize) -> String {
    if ap.is_negative_simple(idx) {
        return format!("-a{}", idx + 1);
    }
    let reg = ap.registry_index(idx);
    if reg < sys.n {
        format!("+a{}", reg + 1)
    } else {
        format!("+r{reg}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scene_builds_and_names_are_unique() {
        let scene = Scene::build(TypeLabel::parse("B3").unwrap()).unwrap();
        let sys = scene.sys();
        assert_eq!(scene.diagrams.len(), sys.num_almost_positive());
        let names: std::collections::BTreeSet<String> = (0..scene.ap.len())
            .map(|i| root_name(sys, &scene.ap, i))
            .collect();
        assert_eq!(names.len(), scene.ap.len());
        assert!(names.contains("-a1"));
        assert!(names.contains("+a3"));
    }

    #[test]
    fn projection_fails_cleanly_without_a_plane() {
        // Rank 1 has no rotation eigenplane; the algebraic layer still works.
        let err = Projection::build(TypeLabel::parse("A1").unwrap());
        assert!(err.is_err());
    }
}
