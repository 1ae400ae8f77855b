//! Simplicial complexes on an ordered ground set, stored by their facets.

use std::collections::HashSet;
use std::fmt;

use crate::error::{invalid, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simplicial complex on the ground set `[m]`, determined by its facet antichain.
///
/// Ground-set elements that lie in no facet are ghost vertices. The void complex `{∅}` has the
/// single facet `∅`; every complex contains `∅`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    m: usize,
    facets: Vec<VertexSet>,
}

/// A full subcomplex re-indexed onto `[|I|]`, together with the original labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    pub complex: Complex,
    /// `vertices[k]` is the original label of new vertex `k + 1`.
    pub vertices: Vec<usize>,
}

/// Drops duplicate and dominated sets, returning the inclusion-maximal ones in canonical order.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Drops duplicates and supersets, returning the inclusion-minimal sets in canonical order.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl Complex {
    /// Builds the complex generated by `generators`; an empty generator list yields `{∅}`.
    pub fn new(m: usize, generators: Vec<VertexSet>) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(invalid(format!("ground set of size {m} exceeds {MAX_VERTICES}")));
        }
        let ground = VertexSet::full(m);
        if let Some(bad) = generators.iter().find(|g| !g.is_subset(ground)) {
            return Err(invalid(format!("generator {bad} is not contained in [{m}]")));
        }
        Ok(Self::from_generators_unchecked(m, generators))
    }

    /// Builds a complex from vertex lists, validating the range of every vertex.
    pub fn from_lists(m: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut gens = Vec::with_capacity(lists.len());
        for list in lists {
            if let Some(&v) = list.iter().find(|&&v| v == 0 || v > m) {
                return Err(invalid(format!("vertex {v} outside ground set [{m}]")));
            }
            gens.push(list.iter().copied().collect());
        }
        Self::new(m, gens)
    }

    pub(crate) fn from_generators_unchecked(m: usize, generators: Vec<VertexSet>) -> Self {
        let facets = if generators.is_empty() {
            vec![VertexSet::EMPTY]
        } else {
            maximal_sets(generators)
        };
        Complex { m, facets }
    }

    /// The void complex `{∅}` on `[m]`.
    pub fn void(m: usize) -> Self {
        Complex { m, facets: vec![VertexSet::EMPTY] }
    }

    /// The full simplex `Δ_[m]`.
    pub fn simplex(m: usize) -> Self {
        Complex { m, facets: vec![VertexSet::full(m)] }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.m)
    }

    pub fn has_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Vertices that belong to some facet.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc | *f)
    }

    pub fn ghosts(&self) -> VertexSet {
        self.ground_set().difference(self.vertex_set())
    }

    /// `max |facet| - 1`; the void complex has dimension −1.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == self.ground_set()
    }

    pub fn is_void(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// `K = ∂Δ_[m]`: the facets are exactly the `(m-1)`-subsets of `[m]`.
    pub fn is_simplex_boundary(&self) -> bool {
        self.m >= 1
            && self.facets.len() == self.m
            && self.facets.iter().all(|f| f.len() == self.m - 1)
    }

    /// Number of points if `K` is a set of `ℓ ≥ 1` disjoint points (ghosts allowed).
    pub fn disjoint_points(&self) -> Option<usize> {
        (self.facets.iter().all(|f| f.len() == 1)).then_some(self.facets.len())
    }

    /// All faces (including `∅`), sorted by size and then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        faces
    }

    /// Faces grouped by cardinality: entry `k` holds the faces with `k` vertices.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let faces = self.faces();
        let top = faces.last().map_or(0, |f| f.len());
        let mut out = vec![Vec::new(); top + 1];
        for f in faces {
            out[f.len()].push(f);
        }
        out
    }

    /// Inclusion-minimal non-faces in canonical order; empty iff `K = Δ_[m]`.
    ///
    /// Level-by-level search: a set of size `k` is a candidate only when all of its
    /// `(k-1)`-subsets are faces.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let mut result = Vec::new();
        let mut level: HashSet<VertexSet> = HashSet::from([VertexSet::EMPTY]);
        while !level.is_empty() {
            let mut next = HashSet::new();
            for &face in &level {
                for v in (face.max_vertex() + 1)..=self.m {
                    let cand = face.with(v);
                    if !cand.iter().all(|u| level.contains(&cand.without(u))) {
                        continue;
                    }
                    if self.has_face(cand) {
                        next.insert(cand);
                    } else {
                        result.push(cand);
                    }
                }
            }
            level = next;
        }
        result.sort_unstable();
        result
    }

    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|s| s.len() <= 2)
    }

    /// `link_K(S) = {T ⊆ S^c : S ⊔ T ∈ K}`, kept on the same ground set with the vertices of
    /// `S` (and anything outside the star) as ghosts.
    pub fn link(&self, s: VertexSet) -> Result<Complex> {
        if !self.has_face(s) {
            return Err(invalid(format!("{s} is not a face, its link is undefined")));
        }
        let gens = self
            .facets
            .iter()
            .filter(|f| s.is_subset(**f))
            .map(|f| f.difference(s))
            .collect();
        Ok(Self::from_generators_unchecked(self.m, gens))
    }

    /// `K_I = K ∩ 2^I` re-indexed onto `[|I|]` in increasing label order.
    pub fn full_subcomplex(&self, subset: VertexSet) -> Result<Subcomplex> {
        if !subset.is_subset(self.ground_set()) {
            return Err(invalid(format!("{subset} is not contained in [{}]", self.m)));
        }
        let vertices = subset.to_vec();
        let mut index = vec![0usize; self.m];
        for (k, &v) in vertices.iter().enumerate() {
            index[v - 1] = k + 1;
        }
        let gens = self
            .facets
            .iter()
            .map(|f| f.intersection(subset).map(&index))
            .collect();
        Ok(Subcomplex {
            complex: Self::from_generators_unchecked(vertices.len(), gens),
            vertices,
        })
    }

    /// Full subcomplex on `[m] ∖ {i}`.
    pub fn deletion(&self, i: usize) -> Result<Subcomplex> {
        if i == 0 || i > self.m {
            return Err(invalid(format!("vertex {i} outside ground set [{}]", self.m)));
        }
        self.full_subcomplex(self.ground_set().without(i))
    }

    /// `K ⋆ L` on `[m_K] ⊔ [m_L]`, with the vertices of `L` shifted by `m_K`.
    pub fn join(&self, other: &Complex) -> Complex {
        let m = self.m + other.m;
        assert!(m <= MAX_VERTICES, "join exceeds {MAX_VERTICES} vertices");
        let mut gens = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                gens.push(*f | g.shifted(self.m));
            }
        }
        Self::from_generators_unchecked(m, gens)
    }

    /// Cone with apex `m + 1`.
    pub fn cone(&self) -> Complex {
        self.join(&Complex::simplex(1))
    }

    /// Suspension with the two new vertices `m + 1`, `m + 2`.
    pub fn suspension(&self) -> Complex {
        self.join(&crate::builders::points(2, 2).expect("two points"))
    }

    /// Stellar subdivision of the face `F` by a new vertex `m + 1`.
    pub fn stellar_subdivision(&self, face: VertexSet) -> Result<Complex> {
        if face.is_empty() {
            return Err(invalid("stellar subdivision of the empty face"));
        }
        if !self.has_face(face) {
            return Err(invalid(format!("{face} is not a face")));
        }
        let w = self.m + 1;
        if w > MAX_VERTICES {
            return Err(invalid("stellar subdivision exceeds the vertex limit"));
        }
        let mut gens = Vec::new();
        for &h in &self.facets {
            if face.is_subset(h) {
                for v in face.iter() {
                    gens.push(h.without(v).with(w));
                }
            } else {
                gens.push(h);
            }
        }
        Ok(Self::from_generators_unchecked(w, gens))
    }

    /// Relabels vertex `v` as `map[v - 1]` on a ground set of size `new_m`.
    pub fn relabel(&self, map: &[usize], new_m: usize) -> Result<Complex> {
        if map.len() != self.m {
            return Err(invalid("relabeling map has the wrong length"));
        }
        if map.iter().any(|&v| v == 0 || v > new_m) {
            return Err(invalid("relabeling map leaves the target ground set"));
        }
        let gens = self.facets.iter().map(|f| f.map(map)).collect();
        Complex::new(new_m, gens)
    }

    /// The same complex on its vertex set, re-indexed; returns the original labels as well.
    pub fn without_ghosts(&self) -> Subcomplex {
        self.full_subcomplex(self.vertex_set()).expect("vertex set lies in the ground set")
    }

    /// `f_{-1}, f_0, ...`: number of faces by size.
    pub fn face_counts(&self) -> Vec<u64> {
        self.faces_by_size().iter().map(|l| l.len() as u64).collect()
    }

    /// Unreduced Euler characteristic `Σ (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &n)| if k % 2 == 1 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(m={}, ", self.m)?;
        f.debug_list().entries(self.facets.iter()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "⟩ on [{}]", self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{boundary_simplex, cross_polytope, cycle, points};

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn cx(m: usize, facets: &[&[usize]]) -> Complex {
        Complex::new(m, facets.iter().map(|f| vs(f)).collect()).unwrap()
    }

    #[test]
    fn dominated_generators_removed() {
        let k = cx(3, &[&[1, 2], &[2], &[2, 3]]);
        assert_eq!(k.facets(), &[vs(&[1, 2]), vs(&[2, 3])]);
    }

    #[test]
    fn out_of_range_generator_rejected() {
        assert!(Complex::new(3, vec![vs(&[1, 4])]).is_err());
        assert!(Complex::from_lists(3, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn void_complex() {
        let k = cx(3, &[&[]]);
        assert!(k.is_void());
        assert_eq!(k.dim(), -1);
        assert_eq!(k.minimal_nonfaces(), vec![vs(&[1]), vs(&[2]), vs(&[3])]);
        assert!(k.has_face(VertexSet::EMPTY));
    }

    #[test]
    fn four_cycle_faces() {
        let k = cx(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert!(!k.has_face(vs(&[1, 3])));
        assert!(k.has_face(vs(&[1, 2])));
        assert!(k.is_flag() && k.is_pure());
        assert_eq!(k.dim(), 1);
        assert_eq!(k.minimal_nonfaces(), vec![vs(&[1, 3]), vs(&[2, 4])]);
    }

    #[test]
    fn five_cycle_nonfaces() {
        let k = cycle(5).unwrap();
        let expect: Vec<_> = [[1, 3], [1, 4], [2, 4], [2, 5], [3, 5]].iter().map(|p| vs(p)).collect();
        assert_eq!(k.minimal_nonfaces(), expect);
    }

    #[test]
    fn simplex_boundary_nonfaces() {
        let k = boundary_simplex(3).unwrap();
        assert_eq!(k.minimal_nonfaces(), vec![vs(&[1, 2, 3])]);
        assert!(!k.is_flag());
        assert!(Complex::simplex(3).minimal_nonfaces().is_empty());
    }

    #[test]
    fn links_and_full_subcomplexes() {
        let k = cycle(4).unwrap();
        let lk = k.link(vs(&[1])).unwrap();
        assert_eq!(lk.facets(), &[vs(&[2]), vs(&[4])]);
        assert_eq!(k.link(VertexSet::EMPTY).unwrap(), k);
        assert!(k.link(vs(&[1, 3])).is_err());
        let sub = k.full_subcomplex(vs(&[1, 3])).unwrap();
        assert_eq!(sub.complex, points(2, 2).unwrap());
        assert_eq!(sub.vertices, vec![1, 3]);
        let del = k.deletion(4).unwrap();
        assert_eq!(del.complex.facets(), &[vs(&[1, 2]), vs(&[2, 3])]);
    }

    #[test]
    fn joins_cones_suspensions() {
        let s0 = points(2, 2).unwrap();
        let sq = s0.join(&s0);
        assert!(crate::isomorphism::are_isomorphic(&sq, &cycle(4).unwrap()).is_some());
        let path = s0.cone();
        assert_eq!(path.facets(), &[vs(&[1, 3]), vs(&[2, 3])]);
        let oct = cycle(4).unwrap().suspension();
        assert!(crate::isomorphism::are_isomorphic(&oct, &cross_polytope(3).unwrap()).is_some());
    }

    #[test]
    fn non_pure_example() {
        let k = cx(3, &[&[1], &[2, 3]]);
        assert!(!k.is_pure());
    }

    #[test]
    fn stellar_edge_of_triangle_boundary() {
        let k = boundary_simplex(3).unwrap();
        let s = k.stellar_subdivision(vs(&[1, 2])).unwrap();
        assert_eq!(s.facets(), &[vs(&[1, 3]), vs(&[1, 4]), vs(&[2, 3]), vs(&[2, 4])]);
        assert!(crate::isomorphism::are_isomorphic(&s, &cycle(4).unwrap()).is_some());
    }

    #[test]
    fn stellar_facet_of_tetrahedron_boundary() {
        let k = boundary_simplex(4).unwrap();
        let s = k.stellar_subdivision(vs(&[1, 2, 3])).unwrap();
        assert_eq!(s.m(), 5);
        assert_eq!(s.facets().len(), 6);
        assert_eq!(s.euler_characteristic(), 2);
        assert!(s.has_face(vs(&[1, 2, 5])) && !s.has_face(vs(&[1, 2, 3])));
    }

    #[test]
    fn stellar_errors() {
        let k = boundary_simplex(3).unwrap();
        assert!(k.stellar_subdivision(VertexSet::EMPTY).is_err());
        assert!(k.stellar_subdivision(vs(&[1, 2, 3])).is_err());
    }

    #[test]
    fn ghost_handling() {
        let k = cx(4, &[&[1, 2]]);
        assert_eq!(k.ghosts(), vs(&[3, 4]));
        let stripped = k.without_ghosts();
        assert_eq!(stripped.complex, Complex::simplex(2));
        assert_eq!(stripped.vertices, vec![1, 2]);
    }
}
