//! Finite irreducible Coxeter systems realized as orthogonal matrix groups
//! acting on an explicit root system.
//!
//! The construction is fully generic over the classification: a type label
//! determines a Coxeter matrix, the matrix determines the bilinear form, a
//! Cholesky factorization turns simple roots into concrete unit vectors, and
//! closing the simple roots under simple reflections produces the whole root
//! system. Group elements are stored as exact permutations of the root index
//! set (identified once through a snap tolerance), so all downstream
//! combinatorics is exact; the cached orthogonal matrix is used only for
//! geometry (fixed spaces, projections).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::math::{self, fm, Mat, PI};
use crate::{CoxError, Result};

/// Snap tolerance: vectors are identified when within this distance in
/// max-norm. All genuinely distinct roots and orbit points in the supported
/// groups are separated by at least 1e-2, while accumulated rounding over the
/// closure stays below 1e-12.
pub const SNAP_TOL: f64 = 1e-9;

/// Threshold for rank decisions on matrices of the form `w - id` with `w`
/// orthogonal of order dividing h <= 30: every nonzero singular value is at
/// least `2 sin(pi/30) ~ 0.209`, so anything below this bound is noise.
pub const RANK_TOL: f64 = 1e-6;

/// Largest number of reflections we can track in a 128-bit reflection set.
pub const MAX_REFLECTIONS: usize = 128;

/// Symbolic type of a finite irreducible Coxeter group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeLabel {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Dihedral group of order 2m.
    I2(usize),
}

impl TypeLabel {
    /// Parse labels like `A3`, `b4`, `E6`, `F4`, `H3`, `I2(7)`.
    pub fn parse(s: &str) -> Result<TypeLabel> {
        let t = s.trim();
        let unknown = || CoxError::UnknownType(String::from(t));
        let mut chars = t.chars();
        let fam = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let rest: String = chars.collect();
        let label = match fam {
            'A' => TypeLabel::A(rest.parse().map_err(|_| unknown())?),
            'B' | 'C' => TypeLabel::B(rest.parse().map_err(|_| unknown())?),
            'D' => TypeLabel::D(rest.parse().map_err(|_| unknown())?),
            'E' => TypeLabel::E(rest.parse().map_err(|_| unknown())?),
            'F' => {
                if rest == "4" {
                    TypeLabel::F4
                } else {
                    return Err(unknown());
                }
            }
            'H' => TypeLabel::H(rest.parse().map_err(|_| unknown())?),
            'I' => {
                // Accept I2(m) and Im.
                let inner = rest
                    .strip_prefix("2(")
                    .and_then(|r| r.strip_suffix(')'))
                    .unwrap_or(rest.as_str());
                TypeLabel::I2(inner.parse().map_err(|_| unknown())?)
            }
            _ => return Err(unknown()),
        };
        Ok(label)
    }

    /// Rank of the group (always 2 for dihedral types).
    pub fn rank(&self) -> usize {
        match *self {
            TypeLabel::A(n) | TypeLabel::B(n) | TypeLabel::D(n) | TypeLabel::E(n) | TypeLabel::H(n) => n,
            TypeLabel::F4 => 4,
            TypeLabel::I2(_) => 2,
        }
    }
}

impl core::fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            TypeLabel::A(n) => write!(f, "A{n}"),
            TypeLabel::B(n) => write!(f, "B{n}"),
            TypeLabel::D(n) => write!(f, "D{n}"),
            TypeLabel::E(n) => write!(f, "E{n}"),
            TypeLabel::F4 => write!(f, "F4"),
            TypeLabel::H(n) => write!(f, "H{n}"),
            TypeLabel::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// One root, stored both in coordinates and as coefficients over the simple
/// roots. All roots have unit length under the bilinear form.
#[derive(Debug, Clone)]
pub struct Root {
    pub coeff: Vec<f64>,
    pub coord: Vec<f64>,
    pub positive: bool,
    /// Registry index of the negated root.
    pub neg: u32,
    /// Index into `reflections` of the reflection fixing this root's
    /// hyperplane (shared by the root and its negative).
    pub refl: u32,
}

/// A group element: an exact permutation of the root registry plus its
/// orthogonal matrix. Equality, ordering, and hashing use only the
/// permutation (the matrix is determined by it, since roots span the space).
#[derive(Debug, Clone)]
pub struct GroupElement {
    pub perm: Vec<u32>,
    pub matrix: Mat,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}
impl Eq for GroupElement {}
impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.perm.cmp(&other.perm)
    }
}

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// Apply the element to an arbitrary vector (matrix action).
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.matrix.apply(v)
    }
}

/// A parabolic subgroup in canonical form: the set of all reflections whose
/// hyperplanes contain the fixed subspace, plus an orthonormal basis of that
/// subspace.
#[derive(Debug, Clone)]
pub struct Parabolic {
    /// Bit t set iff reflection t belongs to the subgroup.
    pub reflset: u128,
    /// Orthonormal basis of the pointwise-fixed subspace.
    pub fixed_basis: Vec<Vec<f64>>,
    /// Codimension of the fixed subspace.
    pub rank: usize,
}

impl Parabolic {
    pub fn reflections(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_REFLECTIONS).filter(move |&t| self.reflset >> t & 1 == 1)
    }

    pub fn size(&self) -> usize {
        self.reflset.count_ones() as usize
    }
}

/// One W-orbit of unit vectors, with a canonical (construction-order) index.
#[derive(Debug, Clone)]
pub struct OrbitPoints {
    pub points: Vec<Vec<f64>>,
}

impl OrbitPoints {
    pub fn index_of(&self, v: &[f64]) -> Option<usize> {
        self.points.iter().position(|p| max_dist(p, v) < SNAP_TOL)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Blocks of a set partition of orbit-point indices, each block sorted, and
/// the list of blocks sorted by smallest member.
pub type Partition = Vec<Vec<usize>>;

/// A finite irreducible Coxeter system with its full root system.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    pub label: TypeLabel,
    pub n: usize,
    /// Entries m(s,s'), diagonal 1.
    pub coxeter_matrix: Vec<Vec<u32>>,
    /// Bilinear form: -cos(pi/m) off-diagonal, 1 on the diagonal.
    pub form: Mat,
    /// Row i = coordinates of simple root alpha_i (Cholesky factor of form).
    pub simple_coords: Mat,
    pub roots: Vec<Root>,
    /// Reflection t -> registry index of its positive root.
    pub reflections: Vec<u32>,
    pub h: usize,
    /// Exponents, ascending; eigen-angles of the bipartite Coxeter element
    /// are 2 pi e_i / h.
    pub exponents: Vec<usize>,
    /// Two-coloring of the diagram tree with simple 0 in the plus part.
    pub s_plus: Vec<usize>,
    pub s_minus: Vec<usize>,
    refl_elements: Vec<GroupElement>,
}

fn max_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| fm::fabs(x - y))
        .fold(0.0, f64::max)
}

/// Coxeter matrix of the given type, or an error if the label is outside the
/// supported range (rank bounds keep every reflection set within 128 bits).
fn coxeter_matrix(label: TypeLabel) -> Result<Vec<Vec<u32>>> {
    let unsupported = |msg: String| Err(CoxError::Unsupported(msg));
    let n = label.rank();
    // Edges of the diagram as (i, j, m). Chains are implicit where possible.
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    match label {
        TypeLabel::A(n) => {
            if n < 1 || n > 15 {
                return unsupported(format!("A{n}: rank must be in 1..=15"));
            }
            edges.extend((0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)));
        }
        TypeLabel::B(n) => {
            if n < 2 || n > 11 {
                return unsupported(format!("B{n}: rank must be in 2..=11"));
            }
            edges.extend((0..n - 2).map(|i| (i, i + 1, 3)));
            edges.push((n - 2, n - 1, 4));
        }
        TypeLabel::D(n) => {
            if n < 4 || n > 11 {
                return unsupported(format!("D{n}: rank must be in 4..=11"));
            }
            edges.extend((0..n - 2).map(|i| (i, i + 1, 3)));
            edges.push((n - 3, n - 1, 3));
        }
        TypeLabel::E(n) => {
            if !(6..=8).contains(&n) {
                return unsupported(format!("E{n}: rank must be 6, 7, or 8"));
            }
            // Chain 1-3-4-5-6(-7(-8)) with node 2 attached to node 4.
            edges.push((0, 2, 3));
            edges.extend((2..n - 1).map(|i| (i, i + 1, 3)));
            edges.push((1, 3, 3));
        }
        TypeLabel::F4 => {
            edges.extend([(0, 1, 3), (1, 2, 4), (2, 3, 3)]);
        }
        TypeLabel::H(n) => {
            if !(3..=4).contains(&n) {
                return unsupported(format!("H{n}: rank must be 3 or 4"));
            }
            edges.extend((0..n - 2).map(|i| (i, i + 1, 3)));
            edges.push((n - 2, n - 1, 5));
        }
        TypeLabel::I2(m) => {
            if m < 3 || m > MAX_REFLECTIONS {
                return unsupported(format!("I2({m}): m must be in 3..=128"));
            }
            edges.push((0, 1, m as u32));
        }
    }
    let mut mat = vec![vec![2u32; n]; n];
    for i in 0..n {
        mat[i][i] = 1;
    }
    for (i, j, m) in edges {
        mat[i][j] = m;
        mat[j][i] = m;
    }
    Ok(mat)
}

/// Order of the finite Coxeter group with the given connected diagram,
/// classified by tree shape and edge labels (classical closed forms).
fn connected_diagram_order(nodes: &[usize], cox: &[Vec<u32>]) -> u128 {
    let k = nodes.len();
    if k == 1 {
        return 2;
    }
    if k == 2 {
        return 2 * u128::from(cox[nodes[0]][nodes[1]]);
    }
    let adj: Vec<Vec<usize>> = nodes
        .iter()
        .map(|&i| {
            nodes
                .iter()
                .copied()
                .filter(|&j| j != i && cox[i][j] >= 3)
                .collect()
        })
        .collect();
    let factorial = |m: usize| -> u128 { (1..=m as u128).product() };
    if let Some(branch) = adj.iter().position(|a| a.len() == 3) {
        // Branched tree with unit edge labels: D or E shape, identified by
        // the sorted arm lengths from the unique degree-3 node.
        let mut arms: Vec<usize> = adj[branch]
            .iter()
            .map(|&first| {
                let mut len = 1;
                let mut prev = nodes[branch];
                let mut cur = first;
                loop {
                    let next = nodes
                        .iter()
                        .copied()
                        .find(|&j| j != prev && cox[cur][j] >= 3 && nodes.contains(&j));
                    match next {
                        Some(nx) => {
                            len += 1;
                            prev = cur;
                            cur = nx;
                        }
                        None => break,
                    }
                }
                len
            })
            .collect();
        arms.sort_unstable();
        return match (arms[0], arms[1], arms[2]) {
            (1, 1, _) => (1u128 << (k - 1)) * factorial(k),
            (1, 2, 2) => 51_840,
            (1, 2, 3) => 2_903_040,
            (1, 2, 4) => 696_729_600,
            _ => unreachable!("arm profile outside the finite classification"),
        };
    }
    // Path: walk from one endpoint and collect the edge labels in order.
    let start = adj.iter().position(|a| a.len() == 1).expect("path endpoint");
    let mut order_on_path = vec![nodes[start]];
    let mut labels: Vec<u32> = Vec::new();
    let mut prev = usize::MAX;
    let mut cur = nodes[start];
    for _ in 1..k {
        let next = nodes
            .iter()
            .copied()
            .find(|&j| j != prev && j != cur && cox[cur][j] >= 3)
            .expect("path continues");
        labels.push(cox[cur][next]);
        order_on_path.push(next);
        prev = cur;
        cur = next;
    }
    let max_label = labels.iter().copied().max().unwrap();
    match max_label {
        3 => factorial(k + 1),
        4 => {
            let at_end = labels[0] == 4 || labels[k - 2] == 4;
            if at_end {
                (1u128 << k) * factorial(k)
            } else {
                debug_assert_eq!(k, 4);
                1152
            }
        }
        5 => match k {
            3 => 120,
            4 => 14_400,
            _ => unreachable!("no finite path of length > 4 with a 5-label"),
        },
        _ => unreachable!("path labels outside the finite classification"),
    }
}

/// Build the full system for a type label.
pub fn build_coxeter_system(label: TypeLabel) -> Result<CoxeterSystem> {
    let cox = coxeter_matrix(label)?;
    let n = label.rank();

    let mut form = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = if i == j {
                1.0
            } else {
                -fm::cos(PI / f64::from(cox[i][j]))
            };
            form.set(i, j, v);
        }
    }

    // Positive definiteness of the form is exactly finiteness of the group.
    let simple_coords = math::cholesky(&form, 1e-12)
        .ok_or_else(|| CoxError::NonFiniteSystem(format!("{label}")))?;

    // Close the simple roots under all simple reflections, working on
    // coefficient vectors: s_i sends coeffs c to c - 2 (form c)_i e_i.
    // |roots| = n h with h <= MAX_REFLECTIONS across the supported types.
    let max_roots = 2 * n * MAX_REFLECTIONS;
    let mut coeffs: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            e
        })
        .collect();
    let mut head = 0;
    while head < coeffs.len() {
        let cur = coeffs[head].clone();
        head += 1;
        let fc = form.apply(&cur);
        for i in 0..n {
            let mut img = cur.clone();
            img[i] -= 2.0 * fc[i];
            if !coeffs.iter().any(|c| max_dist(c, &img) < SNAP_TOL) {
                coeffs.push(img);
                if coeffs.len() > max_roots {
                    return Err(CoxError::NonFiniteSystem(format!(
                        "{label}: root closure exceeded {max_roots} roots"
                    )));
                }
            }
        }
    }

    // Assemble the registry with signs, negation pairing, and coordinates.
    let lookup = |coeffs: &[Vec<f64>], target: &[f64]| -> Option<usize> {
        coeffs.iter().position(|c| max_dist(c, target) < SNAP_TOL)
    };
    let mut roots: Vec<Root> = coeffs
        .iter()
        .map(|c| {
            let lead = c
                .iter()
                .copied()
                .max_by(|a, b| fm::fabs(*a).partial_cmp(&fm::fabs(*b)).unwrap())
                .unwrap();
            let positive = lead > 0.0;
            debug_assert!(
                c.iter().all(|&x| if positive { x > -1e-7 } else { x < 1e-7 }),
                "root coefficients must not mix signs"
            );
            let coord = simple_coords.transpose().apply(c);
            debug_assert!(fm::fabs(math::norm(&coord) - 1.0) < 1e-9);
            Root {
                coeff: c.clone(),
                coord,
                positive,
                neg: u32::MAX,
                refl: u32::MAX,
            }
        })
        .collect();
    for r in 0..roots.len() {
        let negc: Vec<f64> = roots[r].coeff.iter().map(|x| -x).collect();
        let idx = lookup(&coeffs, &negc).expect("root system closed under negation");
        roots[r].neg = idx as u32;
    }
    let reflections: Vec<u32> = (0..roots.len() as u32).filter(|&r| roots[r as usize].positive).collect();
    let num_t = reflections.len();
    if num_t > MAX_REFLECTIONS {
        return Err(CoxError::Unsupported(format!(
            "{label}: {num_t} reflections exceed the 128-bit reflection sets"
        )));
    }
    debug_assert_eq!(2 * num_t, roots.len());
    for (t, &r) in reflections.iter().enumerate() {
        let neg = roots[r as usize].neg;
        roots[r as usize].refl = t as u32;
        roots[neg as usize].refl = t as u32;
    }
    // Simple roots were seeded first, so reflection i is the simple s_i.
    for i in 0..n {
        debug_assert_eq!(roots[i].refl as usize, i);
    }

    // Reflection elements: exact root permutations plus Householder matrices.
    let refl_elements: Vec<GroupElement> = (0..num_t)
        .map(|t| {
            let beta = &roots[reflections[t] as usize];
            let mut matrix = Mat::identity(n);
            for i in 0..n {
                for j in 0..n {
                    let v = matrix.get(i, j) - 2.0 * beta.coord[i] * beta.coord[j];
                    matrix.set(i, j, v);
                }
            }
            let perm: Vec<u32> = roots
                .iter()
                .map(|g| {
                    let inner = math::dot(&beta.coord, &g.coord);
                    let mut img = g.coeff.clone();
                    math::axpy(&mut img, -2.0 * inner, &beta.coeff);
                    lookup(&coeffs, &img).expect("reflection permutes the registry") as u32
                })
                .collect();
            GroupElement { perm, matrix }
        })
        .collect();

    // Two-coloring of the diagram tree, simple 0 in the plus part.
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && cox[i][j] >= 3 && color[j] == u8::MAX {
                color[j] = 1 - color[i];
                stack.push(j);
            }
        }
    }
    debug_assert!(color.iter().all(|&c| c != u8::MAX), "diagram must be connected");
    let s_plus: Vec<usize> = (0..n).filter(|&i| color[i] == 0).collect();
    let s_minus: Vec<usize> = (0..n).filter(|&i| color[i] == 1).collect();

    let mut sys = CoxeterSystem {
        label,
        n,
        coxeter_matrix: cox,
        form,
        simple_coords,
        roots,
        reflections,
        h: 0,
        exponents: Vec::new(),
        s_plus,
        s_minus,
        refl_elements,
    };

    // Coxeter number: order of the bipartite Coxeter element c = c_- c_+ as
    // a root permutation. Cross-checked against 2|T|/n.
    let c = sys.multiply(&sys.part_product(false), &sys.part_product(true));
    let mut h = 1usize;
    let mut acc = c.clone();
    while !acc.is_identity() {
        acc = sys.multiply(&acc, &c);
        h += 1;
        assert!(
            h <= MAX_REFLECTIONS,
            "Coxeter number exceeds the classification bound"
        );
    }
    assert_eq!(n * h, 2 * num_t, "n h = 2 |T| must hold");
    sys.h = h;

    // Exponents from the spectrum of (M + M^T)/2 where M is the matrix of c:
    // each rotation angle 2 pi e / h of c contributes eigenvalue cos(2 pi e/h)
    // twice (for the exponent pair e, h - e), and the angle-pi eigenvalue
    // (exponent h/2) contributes -1 once per occurrence.
    let mut q = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            q.set(i, j, 0.5 * (c.matrix.get(i, j) + c.matrix.get(j, i)));
        }
    }
    let (vals, _) = math::jacobi_eigen(&q);
    let mut mult = vec![0usize; h / 2 + 1];
    for lambda in vals {
        let theta = fm::acos(lambda.clamp(-1.0, 1.0));
        let e_real = theta * h as f64 / (2.0 * PI);
        let e = fm::round(e_real) as usize;
        if fm::fabs(theta - 2.0 * PI * e as f64 / h as f64) > 1e-6 {
            return Err(CoxError::SnapFailure(format!(
                "eigen-angle {theta} is not a multiple of 2 pi/{h}"
            )));
        }
        assert!(e >= 1 && 2 * e <= h, "exponent angle out of range");
        mult[e] += 1;
    }
    let mut exponents: Vec<usize> = Vec::with_capacity(n);
    for e in 1..=h / 2 {
        if 2 * e == h {
            exponents.extend(core::iter::repeat(e).take(mult[e]));
        } else {
            assert!(mult[e] % 2 == 0, "paired exponents must have even multiplicity");
            exponents.extend(core::iter::repeat(e).take(mult[e] / 2));
            exponents.extend(core::iter::repeat(h - e).take(mult[e] / 2));
        }
    }
    exponents.sort_unstable();
    assert_eq!(exponents.len(), n);
    assert_eq!(exponents.iter().sum::<usize>(), num_t, "sum of exponents = |T|");
    sys.exponents = exponents;

    Ok(sys)
}

impl CoxeterSystem {
    pub fn num_reflections(&self) -> usize {
        self.reflections.len()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Group order from the exponents.
    pub fn order(&self) -> u128 {
        self.exponents.iter().map(|&e| (e + 1) as u128).product()
    }

    /// The generalized Catalan number for this group: the product over
    /// exponents of (e + h + 1)/(e + 1), always an exact integer.
    pub fn catalan(&self) -> u64 {
        let num: u128 = self
            .exponents
            .iter()
            .map(|&e| (e + self.h + 1) as u128)
            .product();
        let den = self.order();
        assert_eq!(num % den, 0, "Catalan product must divide exactly");
        (num / den) as u64
    }

    /// Number of almost positive roots: |T| + n = n(h+2)/2.
    pub fn num_almost_positive(&self) -> usize {
        self.num_reflections() + self.n
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            perm: (0..self.roots.len() as u32).collect(),
            matrix: Mat::identity(self.n),
        }
    }

    /// The reflection with index t (simple reflections are t = 0..n-1).
    pub fn reflection(&self, t: usize) -> Result<&GroupElement> {
        self.refl_elements
            .get(t)
            .ok_or_else(|| CoxError::IndexOutOfRange(format!("reflection {t}")))
    }

    pub fn simple(&self, i: usize) -> Result<&GroupElement> {
        if i >= self.n {
            return Err(CoxError::IndexOutOfRange(format!("simple {i}")));
        }
        self.reflection(i)
    }

    /// Compose: `multiply(a, b)` applies b first, then a.
    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let perm: Vec<u32> = b.perm.iter().map(|&r| a.perm[r as usize]).collect();
        GroupElement {
            perm,
            matrix: a.matrix.mul(&b.matrix),
        }
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        let mut perm = vec![0u32; a.perm.len()];
        for (i, &p) in a.perm.iter().enumerate() {
            perm[p as usize] = i as u32;
        }
        GroupElement {
            perm,
            matrix: a.matrix.transpose(),
        }
    }

    /// Product of the simple reflections listed in `word`, left to right
    /// (the leftmost letter is applied last).
    pub fn element_from_simples(&self, word: &[usize]) -> Result<GroupElement> {
        let mut w = self.identity();
        for &i in word {
            w = self.multiply(&w, self.simple(i)?);
        }
        Ok(w)
    }

    /// Product of the commuting simple reflections in one part of the
    /// two-coloring (`plus` selects s_plus).
    pub(crate) fn part_product(&self, plus: bool) -> GroupElement {
        let part = if plus { &self.s_plus } else { &self.s_minus };
        let mut w = self.identity();
        for &i in part {
            w = self.multiply(&w, &self.refl_elements[i]);
        }
        w
    }

    /// Orthonormal basis of the fixed subspace of an element.
    pub fn fixed_space(&self, el: &GroupElement) -> Vec<Vec<f64>> {
        let diff = el.matrix.sub(&Mat::identity(self.n));
        math::nullspace(&diff, RANK_TOL)
    }

    /// Absolute (reflection) length: the codimension of the fixed subspace.
    pub fn reflection_length(&self, el: &GroupElement) -> usize {
        let diff = el.matrix.sub(&Mat::identity(self.n));
        math::rank(&diff, RANK_TOL)
    }

    /// The longest element, by greedy right multiplication: while some
    /// simple root is sent to a positive root, append that simple. Takes
    /// exactly |T| steps and ends at the element negating all positive roots.
    pub fn longest_element(&self) -> GroupElement {
        let mut w = self.identity();
        let mut steps = 0usize;
        loop {
            let up = (0..self.n).find(|&i| {
                let img = w.perm[i] as usize;
                self.roots[img].positive
            });
            match up {
                Some(i) => {
                    w = self.multiply(&w, &self.refl_elements[i]);
                    steps += 1;
                    assert!(steps <= self.num_reflections(), "descent overran |T| steps");
                }
                None => break,
            }
        }
        assert_eq!(steps, self.num_reflections());
        w
    }

    /// Index of the positive root of reflection t.
    pub fn root_of_reflection(&self, t: usize) -> usize {
        self.reflections[t] as usize
    }

    /// Reflection index of a root registry index.
    pub fn reflection_of_root(&self, r: usize) -> usize {
        self.roots[r].refl as usize
    }

    /// Look up a registry index from a coefficient vector.
    pub fn root_index_by_coeff(&self, coeff: &[f64]) -> Option<usize> {
        self.roots.iter().position(|r| max_dist(&r.coeff, coeff) < SNAP_TOL)
    }

    /// Orbit sizes of the fundamental-weight directions, computed as group
    /// index |W| / |W_{S minus i}| without enumerating W.
    fn weight_orbit_sizes(&self) -> Vec<u128> {
        let w_order = self.order();
        (0..self.n)
            .map(|i| {
                let rest: Vec<usize> = (0..self.n).filter(|&j| j != i).collect();
                let mut stab: u128 = 1;
                let mut seen = vec![false; self.n];
                for &start in &rest {
                    if seen[start] {
                        continue;
                    }
                    // Connected component of the subdiagram through `start`.
                    let mut comp = vec![start];
                    seen[start] = true;
                    let mut head = 0;
                    while head < comp.len() {
                        let cur = comp[head];
                        head += 1;
                        for &j in &rest {
                            if !seen[j] && self.coxeter_matrix[cur][j] >= 3 {
                                seen[j] = true;
                                comp.push(j);
                            }
                        }
                    }
                    comp.sort_unstable();
                    stab *= connected_diagram_order(&comp, &self.coxeter_matrix);
                }
                w_order / stab
            })
            .collect()
    }

    /// The smallest orbit of fundamental-weight directions (unit vectors),
    /// ties broken by the lowest simple index. Points are enumerated by BFS
    /// under the simple reflections, which fixes the canonical indexing.
    pub fn smallest_orbit(&self) -> OrbitPoints {
        let sizes = self.weight_orbit_sizes();
        let best = (0..self.n).min_by_key(|&i| (sizes[i], i)).unwrap();

        // Unit vector orthogonal to all simple roots except `best`.
        let seed = if self.n == 1 {
            vec![1.0]
        } else {
            let others: Vec<Vec<f64>> = (0..self.n)
                .filter(|&j| j != best)
                .map(|j| self.simple_coords.row(j).to_vec())
                .collect();
            let ns = math::nullspace(&Mat::from_rows(&others), RANK_TOL);
            assert_eq!(ns.len(), 1, "weight direction must be one-dimensional");
            let mut w = ns.into_iter().next().unwrap();
            // Orient to the positive side of the remaining simple root.
            if math::dot(&w, self.simple_coords.row(best)) < 0.0 {
                math::scale(&mut w, -1.0);
            }
            w
        };

        let mut points = vec![seed];
        let mut head = 0;
        while head < points.len() {
            let cur = points[head].clone();
            head += 1;
            for i in 0..self.n {
                let img = self.refl_elements[i].apply(&cur);
                if !points.iter().any(|p| max_dist(p, &img) < SNAP_TOL) {
                    points.push(img);
                }
            }
        }
        assert_eq!(points.len() as u128, sizes[best], "orbit size matches the index formula");
        let orbit = OrbitPoints { points };
        debug_assert_eq!(
            math::rank(&Mat::from_rows(&orbit.points), RANK_TOL),
            self.n,
            "a nontrivial orbit spans the whole space"
        );
        orbit
    }

    /// Canonical parabolic generated by a seed set of reflection indices:
    /// fixed space = intersection of the seed hyperplanes, reflection set =
    /// all t whose hyperplane contains that space.
    pub fn parabolic_from_reflections(&self, seed: &[usize]) -> Parabolic {
        let rows: Vec<Vec<f64>> = seed
            .iter()
            .map(|&t| self.roots[self.reflections[t] as usize].coord.clone())
            .collect();
        let span = math::orthonormalize(&rows, RANK_TOL);
        let fixed_basis = math::orthonormal_complement(&span, self.n, RANK_TOL);
        let rank = self.n - fixed_basis.len();
        let mut reflset: u128 = 0;
        for t in 0..self.num_reflections() {
            let beta = &self.roots[self.reflections[t] as usize].coord;
            // t fixes the subspace pointwise iff beta is orthogonal to it.
            let orthogonal = fixed_basis.iter().all(|v| fm::fabs(math::dot(beta, v)) < RANK_TOL);
            if orthogonal {
                reflset |= 1u128 << t;
            }
        }
        Parabolic {
            reflset,
            fixed_basis,
            rank,
        }
    }

    /// Parabolic whose fixed space is the fixed space of `el`.
    pub fn parabolic_of_element(&self, el: &GroupElement) -> Parabolic {
        let fixed_basis = self.fixed_space(el);
        let rank = self.n - fixed_basis.len();
        let mut reflset: u128 = 0;
        for t in 0..self.num_reflections() {
            let beta = &self.roots[self.reflections[t] as usize].coord;
            let orthogonal = fixed_basis.iter().all(|v| fm::fabs(math::dot(beta, v)) < RANK_TOL);
            if orthogonal {
                reflset |= 1u128 << t;
            }
        }
        Parabolic {
            reflset,
            fixed_basis,
            rank,
        }
    }

    /// All parabolic subgroups, by breadth-first search over intersection
    /// subspaces (rank level by rank level). Every rank-(k+1) subspace
    /// contains a rank-k subspace with one more hyperplane, so adding single
    /// reflections to each level reaches everything.
    pub fn enumerate_parabolics(&self, max_count: usize) -> Result<Vec<Parabolic>> {
        let trivial = Parabolic {
            reflset: 0,
            fixed_basis: (0..self.n)
                .map(|i| {
                    let mut e = vec![0.0; self.n];
                    e[i] = 1.0;
                    e
                })
                .collect(),
            rank: 0,
        };
        let mut by_set: Vec<u128> = vec![0];
        let mut out: Vec<Parabolic> = vec![trivial];
        let mut level: Vec<usize> = vec![0];
        while !level.is_empty() {
            let mut next_level: Vec<usize> = Vec::new();
            for &pi in &level {
                for t in 0..self.num_reflections() {
                    if out[pi].reflset >> t & 1 == 1 {
                        continue;
                    }
                    let seed: Vec<usize> = out[pi].reflections().chain([t]).collect();
                    let cand = self.parabolic_from_reflections(&seed);
                    debug_assert_eq!(cand.rank, out[pi].rank + 1);
                    if by_set.contains(&cand.reflset) {
                        continue;
                    }
                    if out.len() >= max_count {
                        return Err(CoxError::BudgetExceeded {
                            budget: max_count,
                            what: format!("parabolic enumeration for {}", self.label),
                        });
                    }
                    by_set.push(cand.reflset);
                    next_level.push(out.len());
                    out.push(cand);
                }
            }
            level = next_level;
        }
        out.sort_by_key(|p| (p.rank, p.reflset));
        Ok(out)
    }

    /// Conjugate parabolic g P g^{-1}, computed exactly on reflection sets
    /// through the root permutation of g.
    pub fn conjugate_parabolic(&self, g: &GroupElement, par: &Parabolic) -> Parabolic {
        let mut reflset: u128 = 0;
        for t in par.reflections() {
            let img_root = g.perm[self.reflections[t] as usize] as usize;
            reflset |= 1u128 << self.roots[img_root].refl;
        }
        debug_assert_eq!(reflset.count_ones(), par.reflset.count_ones());
        let fixed_basis: Vec<Vec<f64>> = par.fixed_basis.iter().map(|v| g.apply(v)).collect();
        Parabolic {
            reflset,
            fixed_basis,
            rank: par.rank,
        }
    }

    /// Partition of the orbit points into subgroup orbits: connected
    /// components of the graph with an edge {x, t x} for every t in the
    /// parabolic's reflection set.
    pub fn orbit_partition(&self, par: &Parabolic, o: &OrbitPoints) -> Partition {
        let mut uf: Vec<usize> = (0..o.len()).collect();
        fn find(uf: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while uf[r] != r {
                r = uf[r];
            }
            let mut c = x;
            while uf[c] != r {
                let nx = uf[c];
                uf[c] = r;
                c = nx;
            }
            r
        }
        for t in par.reflections() {
            let beta = &self.roots[self.reflections[t] as usize].coord;
            for x in 0..o.len() {
                let mut img = o.points[x].clone();
                let inner = math::dot(beta, &o.points[x]);
                math::axpy(&mut img, -2.0 * inner, beta);
                let y = o.index_of(&img).expect("orbit closed under reflections");
                let (rx, ry) = (find(&mut uf, x), find(&mut uf, y));
                if rx != ry {
                    uf[rx] = ry;
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of_root: Vec<Option<usize>> = vec![None; o.len()];
        for x in 0..o.len() {
            let r = find(&mut uf, x);
            match block_of_root[r] {
                Some(b) => blocks[b].push(x),
                None => {
                    block_of_root[r] = Some(blocks.len());
                    blocks.push(vec![x]);
                }
            }
        }
        // Blocks come out sorted by smallest member because x ascends.
        blocks
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn sys(label: &str) -> CoxeterSystem {
        build_coxeter_system(TypeLabel::parse(label).unwrap()).unwrap()
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["A3", "B4", "D5", "E7", "F4", "H3", "I2(7)"] {
            let l = TypeLabel::parse(s).unwrap();
            assert_eq!(alloc::format!("{l}"), s);
        }
        assert_eq!(TypeLabel::parse("b3").unwrap(), TypeLabel::B(3));
        assert_eq!(TypeLabel::parse("i2(12)").unwrap(), TypeLabel::I2(12));
        assert!(matches!(TypeLabel::parse("Q3"), Err(CoxError::UnknownType(_))));
        // E9 parses as a label but is rejected at build time.
        assert!(matches!(
            build_coxeter_system(TypeLabel::E(9)),
            Err(CoxError::Unsupported(_))
        ));
    }

    #[test]
    fn rejects_out_of_range_ranks() {
        for bad in ["A16", "B12", "D3", "D12", "E9", "H5", "I2(2)", "I2(129)"] {
            let l = TypeLabel::parse(bad);
            let err = l.and_then(build_coxeter_system);
            assert!(err.is_err(), "{bad} must be rejected");
        }
    }

    #[test]
    fn dihedral_range_extremes_build() {
        // The large end exercises the closure and Coxeter-number guards,
        // which must be sized for h up to MAX_REFLECTIONS, not just the
        // crystallographic maximum of 30.
        for (m, label) in [(3usize, "I2(3)"), (128, "I2(128)")] {
            let s = sys(label);
            assert_eq!(s.h, m);
            assert_eq!(s.num_reflections(), m);
            assert_eq!(s.num_roots(), 2 * m);
        }
    }

    // Classical data: (label, h, exponents, |T|).
    fn classical_table() -> Vec<(&'static str, usize, Vec<usize>, usize)> {
        vec![
            ("A1", 2, vec![1], 1),
            ("A2", 3, vec![1, 2], 3),
            ("A3", 4, vec![1, 2, 3], 6),
            ("A4", 5, vec![1, 2, 3, 4], 10),
            ("B2", 4, vec![1, 3], 4),
            ("B3", 6, vec![1, 3, 5], 9),
            ("B4", 8, vec![1, 3, 5, 7], 16),
            ("D4", 6, vec![1, 3, 3, 5], 12),
            ("D5", 8, vec![1, 3, 4, 5, 7], 20),
            ("E6", 12, vec![1, 4, 5, 7, 8, 11], 36),
            ("E7", 18, vec![1, 5, 7, 9, 11, 13, 17], 63),
            ("E8", 30, vec![1, 7, 11, 13, 17, 19, 23, 29], 120),
            ("F4", 12, vec![1, 5, 7, 11], 24),
            ("H3", 10, vec![1, 5, 9], 15),
            ("H4", 30, vec![1, 11, 19, 29], 60),
            ("I2(5)", 5, vec![1, 4], 5),
            ("I2(6)", 6, vec![1, 5], 6),
            ("I2(7)", 7, vec![1, 6], 7),
        ]
    }

    #[test]
    fn builds_match_classical_invariants() {
        for (label, h, exps, t) in classical_table() {
            let s = sys(label);
            assert_eq!(s.h, h, "{label} h");
            assert_eq!(s.exponents, exps, "{label} exponents");
            assert_eq!(s.num_reflections(), t, "{label} |T|");
            assert_eq!(s.num_roots(), s.n * s.h, "{label} |roots| = n h");
            assert_eq!(2 * s.num_reflections(), s.n * s.h, "{label} |T| = n h / 2");
        }
    }

    #[test]
    fn group_order_matches_diagram_classification() {
        // The exponent product and the closed-form table must agree on the
        // full diagram; this cross-validates both paths.
        for (label, _, _, _) in classical_table() {
            let s = sys(label);
            let nodes: Vec<usize> = (0..s.n).collect();
            let comps = connected_diagram_order(&nodes, &s.coxeter_matrix);
            assert_eq!(s.order(), comps, "{label} order");
        }
    }

    #[test]
    fn catalan_values() {
        for (label, expect) in [
            ("A1", 2),
            ("A2", 5),
            ("A3", 14),
            ("A4", 42),
            ("B2", 6),
            ("B3", 20),
            ("B4", 70),
            ("D4", 50),
            ("D5", 182),
            ("H3", 32),
            ("H4", 280),
            ("F4", 105),
            ("E6", 833),
            ("E7", 4160),
            ("E8", 25080),
            ("I2(5)", 7),
            ("I2(6)", 8),
            ("I2(12)", 14),
        ] {
            assert_eq!(sys(label).catalan(), expect, "{label}");
        }
    }

    #[test]
    fn roots_have_uniform_sign_and_unit_norm() {
        for label in ["A3", "B3", "D4", "H3", "F4", "I2(7)"] {
            let s = sys(label);
            for r in &s.roots {
                assert!(fm::fabs(math::norm(&r.coord) - 1.0) < 1e-9);
                let pos = r.coeff.iter().all(|&c| c > -1e-7);
                let neg = r.coeff.iter().all(|&c| c < 1e-7);
                assert!(pos || neg);
                assert_eq!(pos, r.positive);
                // Negation pairing is involutive and sign-flipping.
                let other = &s.roots[r.neg as usize];
                assert_eq!(other.positive, !r.positive);
                assert_eq!(other.refl, r.refl);
            }
        }
    }

    #[test]
    fn braid_relation_in_a2() {
        let s = sys("A2");
        let lhs = s.element_from_simples(&[0, 1, 0]).unwrap();
        let rhs = s.element_from_simples(&[1, 0, 1]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn involutions_and_identity() {
        let s = sys("B3");
        assert!(s.element_from_simples(&[]).unwrap().is_identity());
        for i in 0..3 {
            assert!(s.element_from_simples(&[i, i]).unwrap().is_identity());
        }
        assert!(s.element_from_simples(&[7]).is_err());
    }

    #[test]
    fn perm_commutes_with_negation_and_matrix() {
        for label in ["A3", "H3", "F4"] {
            let s = sys(label);
            let w = s
                .element_from_simples(&(0..s.n).chain(1..s.n).collect::<Vec<_>>())
                .unwrap();
            for (r, root) in s.roots.iter().enumerate() {
                let img = w.perm[r] as usize;
                let img_of_neg = w.perm[root.neg as usize] as usize;
                assert_eq!(s.roots[img].neg as usize, img_of_neg);
                // Matrix action lands on the permuted root's coordinates.
                let via_matrix = w.apply(&root.coord);
                assert!(max_dist(&via_matrix, &s.roots[img].coord) < 1e-9);
            }
            // Orthogonality of the cached matrix.
            let wtw = w.matrix.transpose().mul(&w.matrix);
            assert!(wtw.max_abs_diff(&Mat::identity(s.n)) < 1e-9);
        }
    }

    #[test]
    fn reflection_length_basics() {
        let s = sys("A3");
        assert_eq!(s.reflection_length(&s.identity()), 0);
        for t in 0..s.num_reflections() {
            assert_eq!(s.reflection_length(s.reflection(t).unwrap()), 1);
        }
        let c = s.multiply(&s.part_product(false), &s.part_product(true));
        assert_eq!(s.reflection_length(&c), 3);
    }

    #[test]
    fn longest_element_properties() {
        // A1: the unique reflection.
        let a1 = sys("A1");
        assert_eq!(a1.longest_element(), *a1.reflection(0).unwrap());

        // B2: central -identity.
        let b2 = sys("B2");
        let w0 = b2.longest_element();
        assert!(w0.matrix.max_abs_diff(&Mat::zeros(2, 2).sub(&Mat::identity(2))) < 1e-9);

        // A2: w0 maps alpha_1 to -alpha_2.
        let a2 = sys("A2");
        let w0 = a2.longest_element();
        let img = w0.perm[0] as usize;
        assert_eq!(img, a2.roots[1].neg as usize);

        // Always: every positive root goes negative.
        for label in ["A4", "D4", "H3"] {
            let s = sys(label);
            let w0 = s.longest_element();
            for t in 0..s.num_reflections() {
                let img = w0.perm[s.reflections[t] as usize] as usize;
                assert!(!s.roots[img].positive);
            }
        }
    }

    #[test]
    fn smallest_orbit_sizes() {
        for (label, size) in [
            ("A3", 4),
            ("A4", 5),
            ("B2", 4),
            ("B3", 6),
            ("B4", 8),
            ("D4", 8),
            ("D5", 10),
            ("I2(5)", 5),
            ("I2(12)", 12),
            ("H3", 12),
            ("H4", 120),
            ("F4", 24),
            ("E6", 27),
        ] {
            let s = sys(label);
            let o = s.smallest_orbit();
            assert_eq!(o.len(), size, "{label}");
            // Deterministic: unit vectors, closed under every simple.
            for p in &o.points {
                assert!(fm::fabs(math::norm(p) - 1.0) < 1e-9);
                for i in 0..s.n {
                    let img = s.reflection(i).unwrap().apply(p);
                    assert!(o.index_of(&img).is_some());
                }
            }
        }
    }

    #[test]
    fn smallest_orbit_sizes_large_types() {
        assert_eq!(sys("E7").smallest_orbit().len(), 56);
        assert_eq!(sys("E8").smallest_orbit().len(), 240);
    }

    #[test]
    fn parabolic_closure_in_a3() {
        let s = sys("A3");
        // Simples s1, s2 generate an A2 whose closure contains a third
        // reflection (the hyperplanes through their common fixed line).
        let p = s.parabolic_from_reflections(&[0, 1]);
        assert_eq!(p.rank, 2);
        assert_eq!(p.size(), 3);
        // Empty and single seeds.
        let trivial = s.parabolic_from_reflections(&[]);
        assert_eq!((trivial.rank, trivial.size()), (0, 0));
        for t in 0..s.num_reflections() {
            let p1 = s.parabolic_from_reflections(&[t]);
            assert_eq!((p1.rank, p1.size()), (1, 1));
            assert_eq!(p1.reflset, 1u128 << t);
        }
    }

    #[test]
    fn enumerate_parabolics_counts() {
        assert_eq!(sys("A2").enumerate_parabolics(100).unwrap().len(), 5);
        assert_eq!(sys("A3").enumerate_parabolics(100).unwrap().len(), 15);
        for m in [3usize, 5, 8] {
            let s = sys(&alloc::format!("I2({m})"));
            assert_eq!(s.enumerate_parabolics(200).unwrap().len(), m + 2);
        }
        // Budget error fires.
        assert!(matches!(
            sys("A3").enumerate_parabolics(7),
            Err(CoxError::BudgetExceeded { budget: 7, .. })
        ));
    }

    #[test]
    fn enumerate_parabolics_closed_under_generator_conjugation() {
        for label in ["A3", "B3", "H3"] {
            let s = sys(label);
            let pars = s.enumerate_parabolics(10_000).unwrap();
            let sets: BTreeSet<u128> = pars.iter().map(|p| p.reflset).collect();
            assert_eq!(sets.len(), pars.len(), "canonical reflsets are unique");
            for p in &pars {
                for i in 0..s.n {
                    let conj = s.conjugate_parabolic(s.simple(i).unwrap(), p);
                    assert!(sets.contains(&conj.reflset));
                }
            }
        }
    }

    #[test]
    fn h3_rank2_conjugacy_class_sizes() {
        // Rank-2 flats of the icosahedral arrangement come in three classes
        // distinguished by how many reflections fix the flat: 3, 2, or 5.
        let s = sys("H3");
        let pars = s.enumerate_parabolics(10_000).unwrap();
        let mut counts = [0usize; 3];
        for p in pars.iter().filter(|p| p.rank == 2) {
            match p.size() {
                3 => counts[0] += 1,
                2 => counts[1] += 1,
                5 => counts[2] += 1,
                other => panic!("unexpected rank-2 reflection count {other}"),
            }
        }
        assert_eq!(counts, [10, 15, 6]);
        assert_eq!(pars.len(), 1 + 15 + 31 + 1);
    }

    #[test]
    fn orbit_partition_h3_standard_parabolics() {
        let s = sys("H3");
        let o = s.smallest_orbit();
        // <s1, s2>: four blocks of three.
        let p12 = s.parabolic_from_reflections(&[0, 1]);
        let blocks = s.orbit_partition(&p12, &o);
        let mut sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3, 3, 3]);
        // <s2, s3>: two blocks of five and two singletons.
        let p23 = s.parabolic_from_reflections(&[1, 2]);
        let blocks = s.orbit_partition(&p23, &o);
        let mut sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 5, 5]);
        // Trivial parabolic: all singletons.
        let trivial = s.parabolic_from_reflections(&[]);
        assert!(s.orbit_partition(&trivial, &o).iter().all(|b| b.len() == 1));
    }

    #[test]
    fn fixed_space_complements_block_differences() {
        // The fixed space of a parabolic is recoverable from any orbit
        // partition: it is the orthogonal complement of the span of all
        // within-block difference vectors.
        for label in ["A3", "B3", "D4", "H3"] {
            let s = sys(label);
            let o = s.smallest_orbit();
            let pars = s.enumerate_parabolics(10_000).unwrap();
            for p in &pars {
                let blocks = s.orbit_partition(p, &o);
                let mut diffs: Vec<Vec<f64>> = Vec::new();
                for b in &blocks {
                    for k in 1..b.len() {
                        let d: Vec<f64> = o.points[b[k]]
                            .iter()
                            .zip(&o.points[b[0]])
                            .map(|(x, y)| x - y)
                            .collect();
                        diffs.push(d);
                    }
                }
                let span = math::orthonormalize(&diffs, RANK_TOL);
                let comp = math::orthonormal_complement(&span, s.n, RANK_TOL);
                assert_eq!(comp.len(), p.fixed_basis.len(), "{label} dims");
                // Same subspace: every fixed vector lies in the complement.
                for v in &p.fixed_basis {
                    let mut residual = v.clone();
                    for b in &comp {
                        let c = math::dot(&residual, b);
                        math::axpy(&mut residual, -c, b);
                    }
                    assert!(math::norm(&residual) < 1e-7, "{label} span mismatch");
                }
            }
        }
    }
}
