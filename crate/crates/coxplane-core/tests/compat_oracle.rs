//! Independent derivation of the compatibility relation. The relation is
//! pinned down by two facts: the coefficient rule on pairs involving a
//! negative simple, and invariance under both tau maps. So partition all
//! unordered pairs into orbits of the simultaneous tau action, read the
//! verdict off the base pairs each orbit contains, and demand that the
//! walk-based table agrees on every member, with no orbit left undecided
//! and no internal contradiction.

use std::collections::BTreeMap;

use coxplane_core::clusters::{compatibility, Sign};
use coxplane_core::coxeter::{build_coxeter_system, TypeLabel};
use coxplane_core::plane::bipartition;

#[test]
fn compatibility_agrees_with_orbit_propagation() {
    for label in ["A2", "A3", "B2", "B3", "D4", "I2(5)", "I2(8)", "H3", "F4"] {
        let sys = build_coxeter_system(TypeLabel::parse(label).unwrap()).unwrap();
        let bip = bipartition(&sys);
        let compat = compatibility(&sys, &bip).unwrap();
        let m = compat.len();

        let norm = |a: usize, b: usize| (a.min(b), a.max(b));
        let mut orbit_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
        for a in 0..m {
            for b in a..m {
                if orbit_of.contains_key(&(a, b)) {
                    continue;
                }
                let id = orbits.len();
                let mut members = vec![(a, b)];
                orbit_of.insert((a, b), id);
                let mut head = 0;
                while head < members.len() {
                    let (x, y) = members[head];
                    head += 1;
                    for eps in [Sign::Plus, Sign::Minus] {
                        let img = norm(compat.tau.apply(eps, x), compat.tau.apply(eps, y));
                        if !orbit_of.contains_key(&img) {
                            orbit_of.insert(img, id);
                            members.push(img);
                        }
                    }
                }
                orbits.push(members);
            }
        }

        // Verdict per orbit from the coefficient rule, then exhaustive
        // comparison.
        for members in &orbits {
            let mut verdict: Option<bool> = None;
            for &(x, y) in members {
                for (s, other) in [(x, y), (y, x)] {
                    if !compat.ap.is_negative_simple(s) {
                        continue;
                    }
                    let coeff = sys.roots[compat.ap.registry_index(other)].coeff[s];
                    let v = coeff < 1e-6;
                    match verdict {
                        None => verdict = Some(v),
                        Some(prev) => assert_eq!(prev, v, "{label}: contradictory base pairs"),
                    }
                }
            }
            let verdict = verdict.unwrap_or_else(|| {
                panic!("{label}: an orbit contains no pair with a negative simple")
            });
            for &(x, y) in members {
                assert_eq!(compat.compatible(x, y), verdict, "{label}: pair ({x}, {y})");
            }
        }
    }
}
