//! Almost positive roots, the two tau involutions attached to a
//! bipartition, their orbit structure, the compatibility relation, and
//! cluster enumeration as maximal compatible sets.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::plane::Bipartition;
use crate::{CoxError, Result};

/// Coefficients this small count as zero in simple-root expansions. Genuine
/// nonzero coefficients are at least 1 in every type.
pub const COEFF_ZERO_TOL: f64 = 1e-6;

/// The almost positive roots: the n negative simples (by simple index)
/// followed by the positive roots in registry order.
pub struct ApRoots {
    pub n: usize,
    to_registry: Vec<usize>,
    from_registry: Vec<Option<usize>>,
}

pub fn almost_positive_roots(sys: &CoxeterSystem) -> ApRoots {
    let n = sys.n;
    let mut to_registry: Vec<usize> = (0..n).map(|i| sys.roots[i].neg as usize).collect();
    to_registry.extend((0..sys.num_roots()).filter(|&r| sys.roots[r].positive));
    let mut from_registry = vec![None; sys.num_roots()];
    for (ap, &reg) in to_registry.iter().enumerate() {
        from_registry[reg] = Some(ap);
    }
    let ap = ApRoots {
        n,
        to_registry,
        from_registry,
    };
    assert_eq!(ap.len(), sys.num_almost_positive());
    ap
}

impl ApRoots {
    pub fn len(&self) -> usize {
        self.to_registry.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_registry.is_empty()
    }

    /// Index into sys.roots.
    pub fn registry_index(&self, ap: usize) -> usize {
        self.to_registry[ap]
    }

    /// Inverse map; None for negative non-simple roots.
    pub fn ap_index(&self, registry: usize) -> Option<usize> {
        self.from_registry[registry]
    }

    /// The first n entries are the negative simples.
    pub fn is_negative_simple(&self, ap: usize) -> bool {
        ap < self.n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// The involutions tau_plus and tau_minus as permutations of almost
/// positive root indices: tau_eps fixes the negative simples of the
/// opposite part and acts by the bipartite factor c_eps everywhere else.
pub struct Tau {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl Tau {
    pub fn apply(&self, eps: Sign, ap: usize) -> usize {
        match eps {
            Sign::Plus => self.plus[ap],
            Sign::Minus => self.minus[ap],
        }
    }
}

fn tau_perm(
    sys: &CoxeterSystem,
    ap: &ApRoots,
    c_eps: &GroupElement,
    fixed_part: &[usize],
) -> Result<Vec<usize>> {
    let mut perm = Vec::with_capacity(ap.len());
    for j in 0..ap.len() {
        if ap.is_negative_simple(j) && fixed_part.contains(&j) {
            perm.push(j);
            continue;
        }
        let img = c_eps.perm[ap.registry_index(j)] as usize;
        match ap.ap_index(img) {
            Some(k) => perm.push(k),
            None => {
                return Err(CoxError::RootEscaped(format!(
                    "{}: tau image of almost positive root {j} left the almost positive set",
                    sys.label
                )))
            }
        }
    }
    for (j, &k) in perm.iter().enumerate() {
        assert_eq!(perm[k], j, "tau is an involution");
    }
    Ok(perm)
}

pub fn tau_maps(sys: &CoxeterSystem, bip: &Bipartition, ap: &ApRoots) -> Result<Tau> {
    Ok(Tau {
        plus: tau_perm(sys, ap, &bip.c_plus, &bip.s_minus)?,
        minus: tau_perm(sys, ap, &bip.c_minus, &bip.s_plus)?,
    })
}

/// Negative-simple involution induced by the longest element:
/// w0 sends alpha_i to -alpha_{star[i]}.
pub fn neg_simple_star(sys: &CoxeterSystem) -> Vec<usize> {
    let w0 = sys.longest_element();
    (0..sys.n)
        .map(|i| {
            let img = w0.perm[i] as usize;
            assert!(!sys.roots[img].positive, "w0 negates every simple root");
            let j = sys.roots[img].neg as usize;
            assert!(j < sys.n);
            j
        })
        .collect()
}

fn orbit_of(tau: &Tau, start: usize) -> Vec<usize> {
    let mut members = vec![start];
    let mut head = 0;
    while head < members.len() {
        let cur = members[head];
        head += 1;
        for img in [tau.plus[cur], tau.minus[cur]] {
            if !members.contains(&img) {
                members.push(img);
            }
        }
    }
    members.sort_unstable();
    members
}

/// Check one orbit against the dichotomy: size (h+2)/2 with one negative
/// simple fixed by -w0, or size h+2 with two negative simples swapped by
/// -w0.
fn orbit_dichotomy(
    sys: &CoxeterSystem,
    ap: &ApRoots,
    star: &[usize],
    orbit: &[usize],
) -> core::result::Result<(), String> {
    let negs: Vec<usize> = orbit.iter().copied().filter(|&j| ap.is_negative_simple(j)).collect();
    let full = sys.h + 2;
    if orbit.len() == full {
        if negs.len() != 2 {
            return Err(format!(
                "{}: orbit of size {full} meets the negative simples {} times",
                sys.label,
                negs.len()
            ));
        }
        if star[negs[0]] != negs[1] {
            return Err(format!(
                "{}: -w0 does not swap simples {} and {}",
                sys.label, negs[0], negs[1]
            ));
        }
    } else if full % 2 == 0 && orbit.len() == full / 2 {
        if negs.len() != 1 {
            return Err(format!(
                "{}: orbit of size {} meets the negative simples {} times",
                sys.label,
                orbit.len(),
                negs.len()
            ));
        }
        if star[negs[0]] != negs[0] {
            return Err(format!("{}: -w0 does not fix simple {}", sys.label, negs[0]));
        }
    } else {
        return Err(format!(
            "{}: orbit size {} is neither {} nor {}",
            sys.label,
            orbit.len(),
            full / 2,
            full
        ));
    }
    Ok(())
}

/// Orbit of an almost positive root under both tau maps, sorted. Panics if
/// the size/intersection dichotomy or the -w0 relations fail.
pub fn tau_orbit(sys: &CoxeterSystem, ap: &ApRoots, tau: &Tau, start: usize) -> Vec<usize> {
    let orbit = orbit_of(tau, start);
    let star = neg_simple_star(sys);
    if let Err(msg) = orbit_dichotomy(sys, ap, &star, &orbit) {
        panic!("{msg}");
    }
    orbit
}

/// Orbit partition of all almost positive roots with collected dichotomy
/// violations instead of panics.
pub struct TauOrbitReport {
    pub orbits: Vec<Vec<usize>>,
    pub failures: Vec<String>,
}

impl TauOrbitReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn tau_orbit_check(sys: &CoxeterSystem, ap: &ApRoots, tau: &Tau) -> TauOrbitReport {
    let star = neg_simple_star(sys);
    let mut seen = vec![false; ap.len()];
    let mut orbits = Vec::new();
    let mut failures = Vec::new();
    for start in 0..ap.len() {
        if seen[start] {
            continue;
        }
        let orbit = orbit_of(tau, start);
        for &j in &orbit {
            seen[j] = true;
        }
        if let Err(msg) = orbit_dichotomy(sys, ap, &star, &orbit) {
            failures.push(msg);
        }
        orbits.push(orbit);
    }
    TauOrbitReport { orbits, failures }
}

/// Compatibility of almost positive roots, stored as a symmetric table.
pub struct Compat {
    pub ap: ApRoots,
    pub tau: Tau,
    table: Vec<bool>,
}

impl Compat {
    pub fn len(&self) -> usize {
        self.ap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ap.is_empty()
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.table[a * self.ap.len() + b]
    }
}

/// Base rule: a root is compatible with -alpha_s exactly when alpha_s has
/// coefficient zero in its simple-root expansion (negative coefficients,
/// which occur only for the root's own negative, also pass).
fn base_rule(sys: &CoxeterSystem, ap: &ApRoots, s: usize, other: usize) -> bool {
    sys.roots[ap.registry_index(other)].coeff[s] < COEFF_ZERO_TOL
}

/// Decide one pair by the alternating walk: apply tau_minus, tau_plus,
/// tau_minus, ... to both roots at once until one of them is a negative
/// simple, then answer by the base rule.
fn compatible_pair(
    sys: &CoxeterSystem,
    ap: &ApRoots,
    tau: &Tau,
    mut a: usize,
    mut b: usize,
) -> Result<bool> {
    let mut eps = Sign::Minus;
    for _ in 0..=(sys.h + 2) {
        let a_neg = ap.is_negative_simple(a);
        let b_neg = ap.is_negative_simple(b);
        if a_neg && b_neg {
            let from_a = base_rule(sys, ap, a, b);
            let from_b = base_rule(sys, ap, b, a);
            assert_eq!(from_a, from_b, "base rule agrees from both sides");
            return Ok(from_a);
        }
        if a_neg {
            return Ok(base_rule(sys, ap, a, b));
        }
        if b_neg {
            return Ok(base_rule(sys, ap, b, a));
        }
        a = tau.apply(eps, a);
        b = tau.apply(eps, b);
        eps = eps.flip();
    }
    Err(CoxError::NoNegativeSimpleReached(format!(
        "{}: pair ({a}, {b}) reached no negative simple within {} alternations",
        sys.label,
        sys.h + 2
    )))
}

/// Build the full compatibility table. Self-compatibility is true by
/// convention (and by the walk, which sends every root to a negative simple
/// whose own coefficient is negative).
pub fn compatibility(sys: &CoxeterSystem, bip: &Bipartition) -> Result<Compat> {
    let ap = almost_positive_roots(sys);
    let tau = tau_maps(sys, bip, &ap)?;
    let m = ap.len();
    let mut table = vec![false; m * m];
    for a in 0..m {
        for b in a..m {
            let v = compatible_pair(sys, &ap, &tau, a, b)?;
            table[a * m + b] = v;
            table[b * m + a] = v;
        }
    }
    Ok(Compat { ap, tau, table })
}

/// Fixed-width bitset covering the largest almost positive root sets
/// (E8 has 128, I2(128) has 130).
#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct Bits([u64; 3]);

impl Bits {
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0 == [0; 3]
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits([self.0[0] & o.0[0], self.0[1] & o.0[1], self.0[2] & o.0[2]])
    }

    fn and_not(&self, o: &Bits) -> Bits {
        Bits([self.0[0] & !o.0[0], self.0[1] & !o.0[1], self.0[2] & !o.0[2]])
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..3).flat_map(move |w| {
            let word = self.0[w];
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

fn bron_kerbosch(
    adj: &[Bits],
    r: &mut Vec<usize>,
    p: Bits,
    x: Bits,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.and(&adj[u]).count())
        .unwrap();
    let candidates: Vec<usize> = p.and_not(&adj[pivot]).iter().collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        r.push(v);
        bron_kerbosch(adj, r, p.and(&adj[v]), x.and(&adj[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// All clusters: maximal sets of pairwise compatible almost positive roots.
/// Every one has exactly n members (asserted); returned sorted.
pub fn enumerate_clusters(sys: &CoxeterSystem, compat: &Compat) -> Vec<Vec<usize>> {
    let m = compat.len();
    assert!(m <= 192);
    let mut adj = vec![Bits::default(); m];
    for a in 0..m {
        for b in 0..m {
            if a != b && compat.compatible(a, b) {
                adj[a].insert(b);
            }
        }
    }
    let mut p = Bits::default();
    for v in 0..m {
        p.insert(v);
    }
    let mut out = Vec::new();
    bron_kerbosch(&adj, &mut Vec::new(), p, Bits::default(), &mut out);
    for clique in &out {
        assert_eq!(clique.len(), sys.n, "every cluster has n elements");
    }
    out.sort();
    out
}
