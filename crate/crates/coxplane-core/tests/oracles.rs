//! Brute-force oracles for the algebraic layer.
//!
//! These tests recompute core quantities by definition (graph searches over
//! whole groups) and compare them against the faster linear-algebra paths
//! used by the library.

use std::collections::BTreeMap;

use coxplane_core::coxeter::{build_coxeter_system, CoxeterSystem, GroupElement, TypeLabel};

fn sys(label: &str) -> CoxeterSystem {
    build_coxeter_system(TypeLabel::parse(label).unwrap()).unwrap()
}

/// Enumerate the whole group by BFS over the reflection generators,
/// returning each element with its distance from the identity.
fn cayley_distances(s: &CoxeterSystem) -> Vec<(GroupElement, usize)> {
    let mut dist: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let id = s.identity();
    dist.insert(id.perm.clone(), 0);
    let mut queue = vec![id];
    let mut out = Vec::new();
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head].clone();
        head += 1;
        let d = dist[&w.perm];
        out.push((w.clone(), d));
        for t in 0..s.num_reflections() {
            let next = s.multiply(s.reflection(t).unwrap(), &w);
            if !dist.contains_key(&next.perm) {
                dist.insert(next.perm.clone(), d + 1);
                queue.push(next);
            }
        }
    }
    out
}

#[test]
fn reflection_length_equals_cayley_distance() {
    for label in ["A2", "A3", "B2", "B3", "I2(5)", "I2(8)", "H3"] {
        let s = sys(label);
        let all = cayley_distances(&s);
        assert_eq!(all.len() as u128, s.order(), "{label} group order");
        for (w, d) in &all {
            assert_eq!(
                s.reflection_length(w),
                *d,
                "{label}: rank-based length disagrees with T-word distance"
            );
        }
    }
}

#[test]
fn fixed_space_dimension_complements_length() {
    for label in ["A3", "B3", "H3"] {
        let s = sys(label);
        for (w, d) in cayley_distances(&s) {
            assert_eq!(s.fixed_space(&w).len(), s.n - d, "{label}");
        }
    }
}

#[test]
fn longest_element_involution_normalizes_reflections() {
    // w0 negates all positive roots, so it is an involution and conjugation
    // by it permutes the reflection set.
    for label in ["A2", "A3", "B3", "I2(7)", "H3"] {
        let s = sys(label);
        let w0 = s.longest_element();
        assert!(s.multiply(&w0, &w0).is_identity(), "{label}: w0 is an involution");
        for t in 0..s.num_reflections() {
            let conj = s.multiply(&s.multiply(&w0, s.reflection(t).unwrap()), &w0);
            assert_eq!(s.reflection_length(&conj), 1, "{label}: conjugation preserves T");
        }
    }
}
