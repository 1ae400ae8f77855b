//! Reduced simplicial cohomology over exact fields.
//!
//! Cochains are augmented: the empty simplex spans degree −1, so the void complex `{∅}` has
//! `H̃^{-1} = k`. Degree `d` cochains live on the faces with `d + 1` vertices, and the
//! coboundary is `(δf)(σ) = Σ_{v∈σ} (−1)^{#{u∈σ : u<v}} f(σ∖v)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::linalg::{rank, rank_and_kernel, run_exact, EchelonBasis, FieldTag, Ring, RingTask};
use crate::vertex_set::VertexSet;

/// The faces of a complex organized as cochain bases: `by_size[s]` lists the faces with `s`
/// vertices in canonical order, and `pos` gives each face's index within its size class.
#[derive(Clone, Debug)]
pub struct Cochains {
    by_size: Vec<Vec<VertexSet>>,
    pos: HashMap<VertexSet, usize>,
}

impl Cochains {
    /// `faces` must be closed under taking subsets and contain `∅`.
    pub fn from_faces(faces: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new()];
        for f in faces {
            if by_size.len() <= f.len() {
                by_size.resize(f.len() + 1, Vec::new());
            }
            by_size[f.len()].push(f);
        }
        let mut pos = HashMap::new();
        for level in &mut by_size {
            level.sort_unstable();
            level.dedup();
            for (k, f) in level.iter().enumerate() {
                pos.insert(*f, k);
            }
        }
        Cochains { by_size, pos }
    }

    pub fn of_complex(k: &Complex) -> Self {
        Self::from_faces(k.faces())
    }

    /// Cochains of the full subcomplex on `subset`, keeping the original labels.
    pub fn restricted(&self, subset: VertexSet) -> Self {
        Self::from_faces(self.by_size.iter().flatten().copied().filter(|f| f.is_subset(subset)))
    }

    /// Largest face size present.
    pub fn top_size(&self) -> usize {
        self.by_size.len() - 1
    }

    pub fn faces(&self, size: usize) -> &[VertexSet] {
        self.by_size.get(size).map_or(&[], |v| v.as_slice())
    }

    pub fn position(&self, face: VertexSet) -> Option<usize> {
        self.pos.get(&face).copied()
    }

    /// Rows of the coboundary from faces of size `size` to faces of size `size + 1`.
    pub fn coboundary_rows<R: Ring>(&self, ring: &R, size: usize) -> Vec<Vec<R::E>> {
        let width = self.faces(size + 1).len();
        let mut rows = vec![vec![ring.zero(); width]; self.faces(size).len()];
        let one = ring.from_i64(1);
        let minus = ring.from_i64(-1);
        for (col, sigma) in self.faces(size + 1).iter().enumerate() {
            for (k, v) in sigma.iter().enumerate() {
                let row = self.pos[&sigma.without(v)];
                rows[row][col] = if k % 2 == 0 { one.clone() } else { minus.clone() };
            }
        }
        rows
    }

    /// Image of a degree-`(size-1)` cochain under the coboundary.
    pub fn coboundary<R: Ring>(&self, ring: &R, size: usize, f: &[R::E]) -> Vec<R::E> {
        let mut out = vec![ring.zero(); self.faces(size + 1).len()];
        for (col, sigma) in self.faces(size + 1).iter().enumerate() {
            let mut acc = ring.zero();
            for (k, v) in sigma.iter().enumerate() {
                let x = &f[self.pos[&sigma.without(v)]];
                if !ring.is_zero(x) {
                    let term = if k % 2 == 0 { x.clone() } else { ring.mul(x, &ring.from_i64(-1)) };
                    acc = ring.add(&acc, &term);
                }
            }
            out[col] = acc;
        }
        out
    }

    /// Reduced cohomology ranks `(degree, rank)` for every degree from −1 to the top.
    pub fn cohomology_ranks<R: Ring>(&self, ring: &R) -> Vec<(isize, usize)> {
        let top = self.top_size();
        let ranks: Vec<usize> = (0..=top).map(|s| rank(ring, self.coboundary_rows(ring, s))).collect();
        (0..=top)
            .map(|s| {
                let incoming = if s == 0 { 0 } else { ranks[s - 1] };
                (s as isize - 1, self.faces(s).len() - ranks[s] - incoming)
            })
            .collect()
    }

    /// Cocycle representatives per face size, with the coboundary space kept for membership
    /// tests.
    pub fn cohomology<'r, R: Ring>(&self, ring: &'r R) -> Vec<DegreeData<'r, R>> {
        let top = self.top_size();
        let mut out = Vec::with_capacity(top + 1);
        let mut incoming = EchelonBasis::new(ring);
        for s in 0..=top {
            let rows = self.coboundary_rows(ring, s);
            let (_, kernel) = rank_and_kernel(ring, &rows, self.faces(s + 1).len());
            let mut quotient = EchelonBasis::new(ring);
            for (_, r) in incoming.rows() {
                quotient.insert(r.to_vec());
            }
            let mut reps = Vec::new();
            for z in kernel {
                if quotient.insert(z.clone()).is_some() {
                    reps.push(z);
                }
            }
            let mut next = EchelonBasis::new(ring);
            for r in rows {
                next.insert(r);
            }
            out.push(DegreeData { size: s, reps, coboundaries: std::mem::replace(&mut incoming, next) });
        }
        out
    }
}

/// Cohomology in the degree carried by faces of `size` vertices.
pub struct DegreeData<'r, R: Ring> {
    pub size: usize,
    /// Cocycles whose classes form a basis.
    pub reps: Vec<Vec<R::E>>,
    /// Span of the coboundaries landing in this degree.
    pub coboundaries: EchelonBasis<'r, R>,
}

impl<R: Ring> DegreeData<'_, R> {
    pub fn degree(&self) -> isize {
        self.size as isize - 1
    }
}

/// Reduced cohomology in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyDegree {
    pub degree: isize,
    pub rank: usize,
    /// The simplices indexing the coefficient vectors.
    pub simplices: Vec<Vec<usize>>,
    /// Cocycles whose classes form a basis. Over `ℚ` they are primitive integer vectors,
    /// over `GF(p)` entries lie in `0..p`.
    pub representatives: Vec<Vec<BigInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyBasis {
    pub field: FieldTag,
    /// Degrees −1 through `dim K`.
    pub degrees: Vec<CohomologyDegree>,
}

impl CohomologyBasis {
    pub fn rank(&self, degree: isize) -> usize {
        self.degrees.iter().find(|d| d.degree == degree).map_or(0, |d| d.rank)
    }

    /// `(degree, rank)` for the nonzero groups.
    pub fn nonzero(&self) -> Vec<(isize, usize)> {
        self.degrees.iter().filter(|d| d.rank > 0).map(|d| (d.degree, d.rank)).collect()
    }
}

/// Reduced cohomology of `K` over `field`, with explicit cocycle representatives.
pub fn reduced_cohomology(k: &Complex, field: FieldTag) -> CohomologyBasis {
    struct Task<'a>(&'a Cochains);
    impl RingTask for Task<'_> {
        type Output = Vec<CohomologyDegree>;
        fn run<R: Ring>(&self, ring: &R) -> Self::Output {
            self.0
                .cohomology(ring)
                .into_iter()
                .map(|d| CohomologyDegree {
                    degree: d.degree(),
                    rank: d.reps.len(),
                    simplices: self.0.faces(d.size).iter().map(|f| f.to_vec()).collect(),
                    representatives: d
                        .reps
                        .iter()
                        .map(|r| r.iter().map(|x| ring.to_bigint(x)).collect())
                        .collect(),
                })
                .collect()
        }
    }
    let cochains = Cochains::of_complex(k);
    CohomologyBasis { field, degrees: run_exact(field, &Task(&cochains)) }
}

/// Reduced cohomology ranks `(degree, rank)`, degrees −1 through `dim K`.
pub fn cohomology_ranks(cochains: &Cochains, field: FieldTag) -> Vec<(isize, usize)> {
    struct Task<'a>(&'a Cochains);
    impl RingTask for Task<'_> {
        type Output = Vec<(isize, usize)>;
        fn run<R: Ring>(&self, ring: &R) -> Self::Output {
            self.0.cohomology_ranks(ring)
        }
    }
    run_exact(field, &Task(cochains))
}

/// Whether the reduced rational cohomology is that of `S^d` (`d = −1` is the void complex).
pub fn is_homology_sphere_of_dim(cochains: &Cochains, d: isize) -> bool {
    cohomology_ranks(cochains, FieldTag::RATIONALS)
        .iter()
        .all(|&(deg, r)| r == usize::from(deg == d))
        && cochains.top_size() as isize > d
}

/// Homology `(n−1)`-sphere test: `K` is pure of dimension `n − 1` and every link of a face
/// `σ` (including `∅`) has the rational homology of `S^{n−1−|σ|}`.
pub fn homology_sphere_check(k: &Complex, n: usize) -> bool {
    if !k.is_pure() || k.dim() + 1 != n as isize {
        return false;
    }
    let all = Cochains::of_complex(k);
    k.faces().into_iter().all(|sigma| {
        let star_faces = all
            .by_size
            .iter()
            .flatten()
            .filter(|f| f.is_disjoint(sigma) && all.pos.contains_key(&(**f | sigma)))
            .copied();
        let link = Cochains::from_faces(star_faces);
        is_homology_sphere_of_dim(&link, n as isize - 1 - sigma.len() as isize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{boundary_simplex, cycle, points};

    #[test]
    fn circle() {
        let h = reduced_cohomology(&cycle(4).unwrap(), FieldTag::RATIONALS);
        assert_eq!(h.nonzero(), vec![(1, 1)]);
        let rep = &h.degrees.iter().find(|d| d.degree == 1).unwrap().representatives[0];
        assert_eq!(rep.len(), 4);
    }

    #[test]
    fn two_points_and_void() {
        assert_eq!(reduced_cohomology(&points(2, 2).unwrap(), FieldTag::GF2).nonzero(), vec![(0, 1)]);
        assert_eq!(reduced_cohomology(&Complex::void(3), FieldTag::RATIONALS).nonzero(), vec![(-1, 1)]);
        assert_eq!(reduced_cohomology(&Complex::void(0), FieldTag::RATIONALS).nonzero(), vec![(-1, 1)]);
    }

    #[test]
    fn simplex_is_acyclic() {
        assert!(reduced_cohomology(&Complex::simplex(4), FieldTag::RATIONALS).nonzero().is_empty());
    }

    #[test]
    fn representatives_are_cocycles() {
        let k = boundary_simplex(4).unwrap();
        let h = reduced_cohomology(&k, FieldTag::new(3).unwrap());
        assert_eq!(h.nonzero(), vec![(2, 1)]);
    }

    #[test]
    fn sphere_checks() {
        assert!(homology_sphere_check(&cycle(6).unwrap(), 2));
        assert!(!homology_sphere_check(&cycle(6).unwrap(), 3));
        let path = Complex::from_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert!(!homology_sphere_check(&path, 2));
        // Two triangles' boundaries sharing a vertex: the link of the shared vertex has H̃_0 = k^3.
        let bouquet = Complex::from_lists(5, &[vec![1, 2], vec![2, 3], vec![1, 3], vec![1, 4], vec![4, 5], vec![1, 5]]).unwrap();
        assert!(!homology_sphere_check(&bouquet, 2));
    }
}
