//! Small Coxeter systems: validation, the integer bilinear form, the
//! reflection representation, breadth-first enumeration of positive roots
//! with depth, and the word problem in W used to define purity.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::words::Word;

/// Sentinel for an infinite bond m_st = ∞.
pub const INF: u32 = 0;

/// A Coxeter matrix: symmetric, 1 on the diagonal, off-diagonal entries
/// at least 2 (or [`INF`]).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    size: usize,
    entries: Vec<u32>,
}

/// Simply-laced (ADE) diagram presets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoxeterType {
    A(usize),
    D(usize),
    E(usize),
}

impl CoxeterType {
    pub fn rank(&self) -> usize {
        match *self {
            CoxeterType::A(n) | CoxeterType::D(n) | CoxeterType::E(n) => n,
        }
    }

    pub fn matrix(&self) -> CoxeterMatrix {
        let n = self.rank();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match *self {
            CoxeterType::A(_) => {
                for i in 1..n {
                    edges.push((i - 1, i));
                }
            }
            CoxeterType::D(_) => {
                // path on 0..n-2 with an extra leaf n-1 attached to n-3
                for i in 1..n - 1 {
                    edges.push((i - 1, i));
                }
                edges.push((n - 3, n - 1));
            }
            CoxeterType::E(_) => {
                // path on 0..n-2 with the leaf n-1 attached to node 2
                for i in 1..n - 1 {
                    edges.push((i - 1, i));
                }
                edges.push((2, n - 1));
            }
        }
        CoxeterMatrix::from_bonds(n, &edges.iter().map(|&(a, b)| (a, b, 3)).collect::<Vec<_>>())
            .expect("preset diagrams are valid")
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("unknown Coxeter type `{s}`"));
        let (family, rank) = s.split_at(1);
        let n: usize = rank.parse().map_err(|_| bad())?;
        match (family, n) {
            ("A" | "a", n) if n >= 1 => Ok(CoxeterType::A(n)),
            ("D" | "d", n) if n >= 4 => Ok(CoxeterType::D(n)),
            ("E" | "e", 6..=8) => Ok(CoxeterType::E(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
        }
    }
}

/// Validation flags: see [`CoxeterMatrix::validate`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ValidationReport {
    pub small: bool,
    pub triangle_free: bool,
    pub finite_type: bool,
}

impl CoxeterMatrix {
    pub fn new(size: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::BadMatrix("entry count does not match size".into()));
        }
        let m = CoxeterMatrix { size, entries };
        for s in 0..size {
            if m.bond(s, s) != 1 {
                return Err(Error::BadMatrix("diagonal entries must be 1".into()));
            }
            for t in 0..s {
                let b = m.bond(s, t);
                if b != m.bond(t, s) {
                    return Err(Error::BadMatrix("matrix must be symmetric".into()));
                }
                if b == 1 {
                    return Err(Error::BadMatrix(
                        "off-diagonal entries must be at least 2 or INF".into(),
                    ));
                }
            }
        }
        Ok(m)
    }

    /// Builds from a bond list; unlisted pairs get m_st = 2.
    pub fn from_bonds(size: usize, bonds: &[(usize, usize, u32)]) -> Result<Self> {
        let mut entries = vec![2u32; size * size];
        for s in 0..size {
            entries[s * size + s] = 1;
        }
        for &(s, t, m) in bonds {
            if s >= size || t >= size || s == t {
                return Err(Error::BadMatrix(format!("bad bond ({s},{t})")));
            }
            entries[s * size + t] = m;
            entries[t * size + s] = m;
        }
        CoxeterMatrix::new(size, entries)
    }

    pub fn rank(&self) -> usize {
        self.size
    }

    /// m_st, with [`INF`] meaning ∞.
    pub fn bond(&self, s: usize, t: usize) -> u32 {
        self.entries[s * self.size + t]
    }

    pub fn is_small(&self) -> bool {
        (0..self.size).all(|s| (0..s).all(|t| matches!(self.bond(s, t), 2 | 3)))
    }

    pub fn is_triangle_free(&self) -> bool {
        let big = |s: usize, t: usize| self.bond(s, t) == INF || self.bond(s, t) > 2;
        for s in 0..self.size {
            for t in 0..s {
                for r in 0..t {
                    if big(s, t) && big(t, r) && big(r, s) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Finite-type test by matching connected components against the
    /// classification of finite Coxeter diagrams. For small matrices this
    /// reduces to recognizing ADE trees.
    pub fn is_finite_type(&self) -> bool {
        self.components().iter().all(|c| self.component_is_finite(c))
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            small: self.is_small(),
            triangle_free: self.is_triangle_free(),
            finite_type: self.is_finite_type(),
        }
    }

    fn neighbors(&self, s: usize) -> Vec<usize> {
        (0..self.size)
            .filter(|&t| t != s && self.bond(s, t) != 2)
            .collect()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                for t in self.neighbors(s) {
                    if !seen[t] {
                        seen[t] = true;
                        comp.push(t);
                        stack.push(t);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn component_is_finite(&self, comp: &[usize]) -> bool {
        let edges: Vec<(usize, usize, u32)> = comp
            .iter()
            .flat_map(|&s| {
                self.neighbors(s)
                    .into_iter()
                    .filter(move |&t| t > s)
                    .map(move |t| (s, t, self.bond(s, t)))
            })
            .collect();
        if edges.iter().any(|&(_, _, m)| m == INF) {
            return false;
        }
        // finite diagrams are trees
        if edges.len() + 1 != comp.len() {
            return false;
        }
        let degree = |s: usize| self.neighbors(s).len();
        let branch_nodes: Vec<usize> = comp.iter().copied().filter(|&s| degree(s) >= 3).collect();
        if comp.iter().any(|&s| degree(s) > 3) || branch_nodes.len() > 1 {
            return false;
        }
        let big_bonds: Vec<u32> = edges.iter().map(|e| e.2).filter(|&m| m > 3).collect();

        if let [center] = branch_nodes[..] {
            // D or E shapes: all bonds simple, arm lengths (1,1,*), (1,2,2),
            // (1,2,3) or (1,2,4)
            if !big_bonds.is_empty() {
                return false;
            }
            let mut arms: Vec<usize> = self
                .neighbors(center)
                .into_iter()
                .map(|first| {
                    let mut len = 1;
                    let mut prev = center;
                    let mut cur = first;
                    loop {
                        let next: Vec<usize> =
                            self.neighbors(cur).into_iter().filter(|&t| t != prev).collect();
                        match next[..] {
                            [n] => {
                                prev = cur;
                                cur = n;
                                len += 1;
                            }
                            [] => return len,
                            _ => unreachable!("single branch node"),
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            matches!(arms[..], [1, 1, _] | [1, 2, 2] | [1, 2, 3] | [1, 2, 4])
        } else {
            // path: A_n, B_n/C_n, F4, H3, H4 or a dihedral I2(m)
            match big_bonds[..] {
                [] => true,
                [m] => {
                    if comp.len() == 2 {
                        return true; // I2(m)
                    }
                    let (s, t, _) = *edges.iter().find(|e| e.2 > 3).unwrap();
                    let at_end = degree(s) == 1 || degree(t) == 1;
                    match m {
                        4 => at_end || comp.len() == 4, // B/C at an end, F4 in the middle of 4
                        5 => at_end && comp.len() <= 4, // H3, H4
                        _ => false,
                    }
                }
                _ => false,
            }
        }
    }

    /// ⟨α_s, α_t⟩ of the bilinear form on the root basis: 2 on the diagonal,
    /// 0 for m_st = 2 and −1 for m_st = 3. Defined only for small matrices.
    pub fn gram(&self, s: usize, t: usize) -> Result<i64> {
        if s == t {
            return Ok(2);
        }
        match self.bond(s, t) {
            2 => Ok(0),
            3 => Ok(-1),
            _ => Err(Error::NonSmall),
        }
    }
}

/// A positive root as an integer vector over the simple-root basis, with
/// its depth cached.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Root {
    pub coords: Vec<i64>,
    pub depth: usize,
}

/// ⟨β, γ⟩ for coordinate vectors over the simple roots.
pub fn form(matrix: &CoxeterMatrix, beta: &[i64], gamma: &[i64]) -> Result<i64> {
    let n = matrix.rank();
    assert_eq!(beta.len(), n);
    assert_eq!(gamma.len(), n);
    let mut acc = 0i64;
    for s in 0..n {
        if beta[s] == 0 {
            continue;
        }
        for t in 0..n {
            if gamma[t] != 0 {
                acc += beta[s] * matrix.gram(s, t)? * gamma[t];
            }
        }
    }
    Ok(acc)
}

/// ⟨α_s, x⟩.
pub fn pair_with_simple(matrix: &CoxeterMatrix, s: usize, x: &[i64]) -> Result<i64> {
    let mut acc = 0i64;
    for (t, &c) in x.iter().enumerate() {
        if c != 0 {
            acc += matrix.gram(s, t)? * c;
        }
    }
    Ok(acc)
}

/// s(x) = x − ⟨α_s, x⟩ α_s.
pub fn reflect(matrix: &CoxeterMatrix, s: usize, x: &[i64]) -> Result<Vec<i64>> {
    let c = pair_with_simple(matrix, s, x)?;
    let mut out = x.to_vec();
    out[s] -= c;
    Ok(out)
}

/// Depth change of s·β for β ∈ Φ⁺ \ {α_s}: −1, 0 or +1 as ⟨α_s, β⟩ is
/// positive, zero or negative.
pub fn depth_step(matrix: &CoxeterMatrix, s: usize, beta: &Root) -> Result<i64> {
    if is_simple_of(s, &beta.coords) {
        return Err(Error::DepthStepOnOwnSimpleRoot);
    }
    Ok(-pair_with_simple(matrix, s, &beta.coords)?.signum())
}

fn is_simple_of(s: usize, coords: &[i64]) -> bool {
    coords.iter().enumerate().all(|(t, &c)| c == i64::from(t == s))
}

/// The ⋆-action of a word on a positive root: apply each letter's
/// reflection and fold negative results back into Φ⁺.
pub fn star(matrix: &CoxeterMatrix, word: &Word, beta: &[i64]) -> Result<Vec<i64>> {
    let mut cur = beta.to_vec();
    // left action: rightmost letter acts first; signs are irrelevant since
    // generators of W are involutions
    for &(s, _) in word.letters().iter().rev() {
        if s >= matrix.rank() {
            return Err(Error::GeneratorOutOfRange(s, matrix.rank()));
        }
        cur = reflect(matrix, s, &cur)?;
        if cur.iter().all(|&c| c <= 0) {
            for c in &mut cur {
                *c = -*c;
            }
        }
    }
    Ok(cur)
}

/// The reflection matrix of generator s on the simple-root basis.
pub fn reflection_matrix(matrix: &CoxeterMatrix, s: usize) -> Result<SquareMatrix<i64>> {
    let n = matrix.rank();
    let mut m = SquareMatrix::identity(n);
    for j in 0..n {
        m.update(s, j, |v| v - matrix.gram(s, j).unwrap_or(0));
        matrix.gram(s, j)?;
    }
    Ok(m)
}

/// Image of a braid word in W under σ_s ↦ s; inverse letters map to the
/// same reflection. Matrix equality in the (faithful) reflection
/// representation decides the W word problem.
pub fn project_to_w(matrix: &CoxeterMatrix, word: &Word) -> Result<SquareMatrix<i64>> {
    let mut acc = SquareMatrix::identity(matrix.rank());
    for &(s, _) in word.letters() {
        if s >= matrix.rank() {
            return Err(Error::GeneratorOutOfRange(s, matrix.rank()));
        }
        acc = acc.mul(&reflection_matrix(matrix, s)?);
    }
    Ok(acc)
}

/// True iff the word lies in the pure Artin group, the kernel of B ↠ W.
pub fn is_pure(matrix: &CoxeterMatrix, word: &Word) -> Result<bool> {
    Ok(project_to_w(matrix, word)?.is_identity())
}

/// The enumerated positive roots of a small system, in canonical order
/// (by depth, then lexicographically by coordinates).
#[derive(Clone, Debug)]
pub struct RootSystem {
    matrix: CoxeterMatrix,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    complete: bool,
}

impl RootSystem {
    /// All positive roots of depth ≤ `depth_bound`, by breadth-first
    /// closure of the simple reflections starting from the simple roots.
    /// A root of depth d+1 is s·β for some depth-d root β with
    /// ⟨α_s, β⟩ < 0, so the closure is complete level by level.
    pub fn enumerate(matrix: &CoxeterMatrix, depth_bound: usize) -> Result<Self> {
        if !matrix.is_small() {
            return Err(Error::NonSmall);
        }
        if depth_bound < 1 {
            return Err(Error::BadParams("depth bound must be at least 1".into()));
        }
        let n = matrix.rank();
        let mut roots: Vec<Root> = Vec::new();
        let mut index = HashMap::new();
        let mut level: Vec<Vec<i64>> = (0..n)
            .map(|s| {
                let mut c = vec![0i64; n];
                c[s] = 1;
                c
            })
            .collect();
        let mut depth = 1usize;
        let mut exhausted = false;
        loop {
            level.sort();
            level.dedup();
            for coords in &level {
                if !index.contains_key(coords) {
                    index.insert(coords.clone(), roots.len());
                    roots.push(Root {
                        coords: coords.clone(),
                        depth,
                    });
                }
            }
            if depth == depth_bound {
                break;
            }
            let mut next = Vec::new();
            for coords in &level {
                for s in 0..n {
                    if pair_with_simple(matrix, s, coords)? < 0 {
                        let up = reflect(matrix, s, coords)?;
                        if !index.contains_key(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            if next.is_empty() {
                exhausted = true;
                break;
            }
            level = next;
            depth += 1;
        }
        Ok(RootSystem {
            matrix: matrix.clone(),
            roots,
            index,
            complete: exhausted,
        })
    }

    /// The full positive system of a finite-type small matrix.
    pub fn enumerate_all(matrix: &CoxeterMatrix) -> Result<Self> {
        if !matrix.is_small() {
            return Err(Error::NonSmall);
        }
        if !matrix.is_finite_type() {
            return Err(Error::InfiniteType);
        }
        // |Φ⁺| is finite, so some level is empty; usize::MAX never binds.
        let sys = Self::enumerate(matrix, usize::MAX)?;
        debug_assert!(sys.complete);
        Ok(sys)
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Whether the closure terminated (all of Φ⁺ is present).
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of the simple root α_s.
    pub fn simple(&self, s: usize) -> usize {
        let mut c = vec![0i64; self.rank()];
        c[s] = 1;
        self.index[&c]
    }

    /// The ⋆-action of generator s as a permutation of root indices.
    pub fn star_of_generator(&self, s: usize) -> Result<Vec<usize>> {
        (0..self.len())
            .map(|i| {
                let img = star(&self.matrix, &Word::generator(s), &self.roots[i].coords)?;
                self.index_of(&img).ok_or(Error::UnknownRoot(img))
            })
            .collect()
    }

    /// The ⋆-action of a whole word as a permutation of root indices.
    pub fn star_permutation(&self, word: &Word) -> Result<Vec<usize>> {
        (0..self.len())
            .map(|i| {
                let img = star(&self.matrix, word, &self.roots[i].coords)?;
                self.index_of(&img).ok_or(Error::UnknownRoot(img))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> CoxeterMatrix {
        CoxeterType::A(n).matrix()
    }

    #[test]
    fn validate_presets() {
        let report = a(3).validate();
        assert!(report.small && report.triangle_free && report.finite_type);

        let triangle =
            CoxeterMatrix::from_bonds(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)]).unwrap();
        let report = triangle.validate();
        assert!(report.small);
        assert!(!report.triangle_free);
        assert!(!report.finite_type);

        let a1_tilde = CoxeterMatrix::from_bonds(2, &[(0, 1, INF)]).unwrap();
        let report = a1_tilde.validate();
        assert!(!report.small);
        assert!(report.triangle_free);
        assert!(!report.finite_type);
    }

    #[test]
    fn validate_non_small_families() {
        let b3 = CoxeterMatrix::from_bonds(3, &[(0, 1, 4), (1, 2, 3)]).unwrap();
        assert!(b3.is_finite_type() && !b3.is_small());
        let f4 = CoxeterMatrix::from_bonds(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)]).unwrap();
        assert!(f4.is_finite_type());
        let h4 = CoxeterMatrix::from_bonds(4, &[(0, 1, 5), (1, 2, 3), (2, 3, 3)]).unwrap();
        assert!(h4.is_finite_type());
        let h5 = CoxeterMatrix::from_bonds(
            5,
            &[(0, 1, 5), (1, 2, 3), (2, 3, 3), (3, 4, 3)],
        )
        .unwrap();
        assert!(!h5.is_finite_type());
        // 4-cycle: small, triangle-free, affine
        let cycle = CoxeterMatrix::from_bonds(4, &[(0, 1, 3), (1, 2, 3), (2, 3, 3), (3, 0, 3)])
            .unwrap();
        let report = cycle.validate();
        assert!(report.small && report.triangle_free && !report.finite_type);
        // affine D̃4 star: degree 4 node
        let star = CoxeterMatrix::from_bonds(
            5,
            &[(0, 1, 3), (0, 2, 3), (0, 3, 3), (0, 4, 3)],
        )
        .unwrap();
        assert!(!star.is_finite_type());
        assert!(CoxeterType::E(8).matrix().is_finite_type());
    }

    #[test]
    fn form_values() {
        let m = a(2);
        let alpha_s = [1, 0];
        let alpha_t = [0, 1];
        assert_eq!(form(&m, &alpha_s, &alpha_s).unwrap(), 2);
        assert_eq!(form(&m, &alpha_s, &alpha_t).unwrap(), -1);
        let m2 = CoxeterMatrix::from_bonds(2, &[]).unwrap();
        assert_eq!(form(&m2, &alpha_s, &alpha_t).unwrap(), 0);

        let b2 = CoxeterMatrix::from_bonds(2, &[(0, 1, 4)]).unwrap();
        assert_eq!(form(&b2, &alpha_s, &alpha_t), Err(Error::NonSmall));
    }

    #[test]
    fn reflect_examples() {
        let m = a(2);
        assert_eq!(reflect(&m, 0, &[1, 0]).unwrap(), vec![-1, 0]);
        // s(α_t) = α_t + α_s in A2
        assert_eq!(reflect(&m, 0, &[0, 1]).unwrap(), vec![1, 1]);
        // fixed vector with ⟨α_s, x⟩ = 0
        let m2 = CoxeterMatrix::from_bonds(2, &[]).unwrap();
        assert_eq!(reflect(&m2, 0, &[0, 5]).unwrap(), vec![0, 5]);
        // involution on arbitrary vectors
        let m3 = a(3);
        let x = vec![3, -1, 4];
        assert_eq!(reflect(&m3, 1, &reflect(&m3, 1, &x).unwrap()).unwrap(), x);
    }

    #[test]
    fn a2_positive_roots() {
        let sys = RootSystem::enumerate(&a(2), 10).unwrap();
        assert!(sys.is_complete());
        let got: Vec<(Vec<i64>, usize)> = sys
            .roots()
            .iter()
            .map(|r| (r.coords.clone(), r.depth))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![0, 1], 1),
                (vec![1, 0], 1),
                (vec![1, 1], 2)
            ]
        );
    }

    #[test]
    fn root_counts() {
        // |Φ⁺| = n(n+1)/2 for A_n
        for n in 1..=4 {
            let sys = RootSystem::enumerate_all(&a(n)).unwrap();
            assert_eq!(sys.len(), n * (n + 1) / 2);
        }
        let d4 = CoxeterType::D(4).matrix();
        let sys = RootSystem::enumerate_all(&d4).unwrap();
        assert_eq!(sys.len(), 12);
        // every root has norm 2
        for r in sys.roots() {
            assert_eq!(form(&d4, &r.coords, &r.coords).unwrap(), 2);
        }
    }

    #[test]
    fn depth_bound_truncates() {
        let triangle =
            CoxeterMatrix::from_bonds(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)]).unwrap();
        let sys = RootSystem::enumerate(&triangle, 4).unwrap();
        assert!(!sys.is_complete());
        assert!(sys.roots().iter().all(|r| r.depth <= 4));
        assert!(RootSystem::enumerate_all(&triangle).is_err());
    }

    #[test]
    fn depth_step_cases() {
        let m = a(2);
        let sys = RootSystem::enumerate_all(&m).unwrap();
        let high = sys.root(sys.index_of(&[1, 1]).unwrap()).clone();
        // ⟨α_s, α_s+α_t⟩ = 1 > 0 → −1
        assert_eq!(depth_step(&m, 0, &high).unwrap(), -1);
        let alpha_t = sys.root(sys.index_of(&[0, 1]).unwrap()).clone();
        // ⟨α_s, α_t⟩ = −1 < 0 → +1
        assert_eq!(depth_step(&m, 0, &alpha_t).unwrap(), 1);
        // orthogonal case in A1×A1
        let m2 = CoxeterMatrix::from_bonds(2, &[]).unwrap();
        let beta = Root {
            coords: vec![0, 1],
            depth: 1,
        };
        assert_eq!(depth_step(&m2, 0, &beta).unwrap(), 0);
        // excluded on the generator's own simple root
        let alpha_s = sys.root(sys.index_of(&[1, 0]).unwrap()).clone();
        assert_eq!(
            depth_step(&m, 0, &alpha_s),
            Err(Error::DepthStepOnOwnSimpleRoot)
        );
    }

    #[test]
    fn depth_step_matches_enumerated_depths() {
        // exhaustive over A2, A3, A4, D4
        let mats = vec![a(2), a(3), a(4), CoxeterType::D(4).matrix()];
        for m in mats {
            let sys = RootSystem::enumerate_all(&m).unwrap();
            for beta in sys.roots() {
                for s in 0..m.rank() {
                    if is_simple_of(s, &beta.coords) {
                        continue;
                    }
                    let image = star(&m, &Word::generator(s), &beta.coords).unwrap();
                    let image_depth = sys.root(sys.index_of(&image).unwrap()).depth as i64;
                    assert_eq!(
                        image_depth - beta.depth as i64,
                        depth_step(&m, s, beta).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        let m = a(2);
        // s ⋆ α_s = α_s
        assert_eq!(
            star(&m, &Word::generator(0), &[1, 0]).unwrap(),
            vec![1, 0]
        );
        // s ⋆ α_t = α_s + α_t
        assert_eq!(
            star(&m, &Word::generator(0), &[0, 1]).unwrap(),
            vec![1, 1]
        );
        // empty word
        assert_eq!(star(&m, &Word::empty(), &[1, 1]).unwrap(), vec![1, 1]);
    }

    #[test]
    fn star_is_an_action() {
        let m = a(3);
        let sys = RootSystem::enumerate_all(&m).unwrap();
        let mut state = 12345u64;
        let mut next = move |bound: usize| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 33) as usize % bound
        };
        for _ in 0..50 {
            let w1 = Word::new((0..next(6)).map(|_| (next(3), 1)).collect());
            let w2 = Word::new((0..next(6)).map(|_| (next(3), 1)).collect());
            let beta = &sys.root(next(sys.len())).coords;
            let combined = star(&m, &w1.concat(&w2), beta).unwrap();
            let nested = star(&m, &w1, &star(&m, &w2, beta).unwrap()).unwrap();
            assert_eq!(combined, nested);
        }
    }

    #[test]
    fn form_is_w_invariant() {
        let m = a(3);
        let sys = RootSystem::enumerate_all(&m).unwrap();
        let w = Word::parse_sigma("s1 s3 s2 s1").unwrap();
        for b in sys.roots() {
            for g in sys.roots() {
                let wb = {
                    let mut cur = b.coords.clone();
                    for &(s, _) in w.letters().iter().rev() {
                        cur = reflect(&m, s, &cur).unwrap();
                    }
                    cur
                };
                let wg = {
                    let mut cur = g.coords.clone();
                    for &(s, _) in w.letters().iter().rev() {
                        cur = reflect(&m, s, &cur).unwrap();
                    }
                    cur
                };
                assert_eq!(
                    form(&m, &b.coords, &g.coords).unwrap(),
                    form(&m, &wb, &wg).unwrap()
                );
            }
        }
    }

    #[test]
    fn projection_and_purity() {
        let m = a(2);
        let id = SquareMatrix::<i64>::identity(2);
        assert_eq!(
            project_to_w(&m, &Word::parse_sigma("s1 s1^-1").unwrap()).unwrap(),
            id
        );
        assert_eq!(
            project_to_w(&m, &Word::parse_sigma("s1 s1").unwrap()).unwrap(),
            id
        );
        // st has order 3
        let st = project_to_w(&m, &Word::parse_sigma("s1 s2").unwrap()).unwrap();
        assert!(!st.is_identity());
        assert!(!st.pow(2).is_identity());
        assert!(st.pow(3).is_identity());

        assert!(is_pure(&m, &Word::parse_sigma("s1 s1").unwrap()).unwrap());
        assert!(!is_pure(&m, &Word::parse_sigma("s1").unwrap()).unwrap());
        let full_twist = Word::parse_sigma("s1 s2").unwrap().pow(3);
        assert!(is_pure(&m, &full_twist).unwrap());
    }
}
