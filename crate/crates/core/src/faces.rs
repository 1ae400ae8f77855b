//! f-, h- and γ-vectors, and a brute-force search for flag complexes realizing a γ-vector.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::{maximal_sets, Complex};
use crate::vertex_set::VertexSet;

/// `f_{−1} = 1, f_0, ..., f_{n−1}` for a complex of dimension `n − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceVector {
    pub n: usize,
    pub f: Vec<u64>,
}

pub fn f_vector(k: &Complex) -> FaceVector {
    let f = k.face_counts();
    FaceVector { n: f.len() - 1, f }
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Coefficients of `(t − 1)^e`, constant term first.
fn shifted_power(e: usize) -> Vec<i64> {
    (0..=e)
        .map(|j| binomial(e, j) * if (e - j).is_multiple_of(2) { 1 } else { -1 })
        .collect()
}

/// `h_0, ..., h_n` from `Σ h_k t^{n−k} = Σ_i f_{i−1} (t − 1)^{n−i}`.
pub fn h_vector(k: &Complex) -> Vec<i64> {
    let fv = f_vector(k);
    let n = fv.n;
    // poly[e] = coefficient of t^e
    let mut poly = vec![0i64; n + 1];
    for (i, &fi) in fv.f.iter().enumerate() {
        for (e, c) in shifted_power(n - i).into_iter().enumerate() {
            poly[e] += fi as i64 * c;
        }
    }
    (0..=n).map(|k| poly[n - k]).collect()
}

pub fn is_dehn_sommerville(k: &Complex) -> bool {
    let h = h_vector(k);
    h.iter().eq(h.iter().rev())
}

/// `γ_0, ..., γ_{⌊n/2⌋}` with `Σ h_i t^i = Σ γ_i t^i (1 + t)^{n−2i}`, or `None` if `h` is not
/// symmetric.
pub fn gamma_from_h(h: &[i64]) -> Option<Vec<i64>> {
    if !h.iter().eq(h.iter().rev()) || h.is_empty() {
        return None;
    }
    let n = h.len() - 1;
    let mut gamma: Vec<i64> = Vec::with_capacity(n / 2 + 1);
    for (i, hi) in h.iter().enumerate().take(n / 2 + 1) {
        let known: i64 = gamma.iter().enumerate().map(|(k, g)| g * binomial(n - 2 * k, i - k)).sum();
        gamma.push(hi - known);
    }
    Some(gamma)
}

pub fn gamma_vector(k: &Complex) -> Option<Vec<i64>> {
    gamma_from_h(&h_vector(k))
}

/// Expands `Σ γ_i t^i (1 + t)^{n−2i}` back into an h-vector of length `n + 1`.
pub fn h_from_gamma(gamma: &[i64], n: usize) -> Vec<i64> {
    let mut h = vec![0i64; n + 1];
    for (i, g) in gamma.iter().enumerate() {
        for j in 0..=(n - 2 * i) {
            h[i + j] += g * binomial(n - 2 * i, j);
        }
    }
    h
}

/// The clique complex of a graph on `[n]`.
pub fn clique_complex(n: usize, edges: &[(usize, usize)]) -> Complex {
    let mut adj = vec![VertexSet::EMPTY; n];
    for &(a, b) in edges {
        adj[a - 1] = adj[a - 1].with(b);
        adj[b - 1] = adj[b - 1].with(a);
    }
    let cliques = VertexSet::full(n)
        .subsets()
        .filter(|s| s.iter().all(|v| s.without(v).is_subset(adj[v - 1])))
        .collect();
    Complex::new(n, maximal_sets(cliques)).expect("cliques lie in [n]")
}

/// A flag complex without ghosts whose f-vector is `(γ_0, γ_1, ...)`, found by trying every
/// graph on `γ_1` vertices with `γ_2` edges in lexicographic order of edge sets.
pub fn realize_gamma_as_flag_f(gamma: &[i64], max_vertices: usize) -> Option<Complex> {
    if gamma.first() != Some(&1) || gamma.iter().any(|&g| g < 0) {
        return None;
    }
    let n = gamma.get(1).copied().unwrap_or(0) as usize;
    let e = gamma.get(2).copied().unwrap_or(0) as usize;
    if n > max_vertices || n > 12 {
        return None;
    }
    let target: Vec<u64> = gamma.iter().map(|&g| g as u64).collect();
    let matches = |k: &Complex| {
        let f = k.face_counts();
        let len = f.len().max(target.len());
        (0..len).all(|i| f.get(i).copied().unwrap_or(0) == target.get(i).copied().unwrap_or(0))
    };
    let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
    if e > pairs.len() {
        return None;
    }
    pairs
        .into_iter()
        .combinations(e)
        .map(|edges| clique_complex(n, &edges))
        .find(|k| matches(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{boundary_simplex, cross_polytope, cycle};

    #[test]
    fn polygon_vectors() {
        let hex = cycle(6).unwrap();
        assert_eq!(f_vector(&hex).f, vec![1, 6, 6]);
        assert_eq!(h_vector(&hex), vec![1, 4, 1]);
        assert_eq!(gamma_vector(&hex), Some(vec![1, 2]));
        assert_eq!(h_vector(&cycle(5).unwrap()), vec![1, 3, 1]);
        assert_eq!(gamma_vector(&cycle(5).unwrap()), Some(vec![1, 1]));
    }

    #[test]
    fn triangle_boundary_gamma_is_negative() {
        let tri = boundary_simplex(3).unwrap();
        assert_eq!(h_vector(&tri), vec![1, 1, 1]);
        assert_eq!(gamma_vector(&tri), Some(vec![1, -1]));
        assert!(realize_gamma_as_flag_f(&[1, -1], 4).is_none());
    }

    #[test]
    fn path_is_not_dehn_sommerville() {
        let path = Complex::from_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert!(!is_dehn_sommerville(&path));
        assert_eq!(gamma_vector(&path), None);
    }

    #[test]
    fn cross_polytope_h_is_binomial() {
        assert_eq!(h_vector(&cross_polytope(3).unwrap()), vec![1, 3, 3, 1]);
        assert_eq!(gamma_vector(&cross_polytope(3).unwrap()), Some(vec![1, 0]));
    }

    #[test]
    fn small_realizations() {
        assert_eq!(realize_gamma_as_flag_f(&[1, 2], 4).unwrap(), Complex::from_lists(2, &[vec![1], vec![2]]).unwrap());
        assert_eq!(realize_gamma_as_flag_f(&[1, 1], 4).unwrap().face_counts(), vec![1, 1]);
        assert!(realize_gamma_as_flag_f(&[1, 0], 4).unwrap().is_void());
        // A triangle as a graph is a 2-simplex, so f = (1,3,3) cannot be flag-realized.
        assert!(realize_gamma_as_flag_f(&[1, 3, 3], 5).is_none());
        assert!(realize_gamma_as_flag_f(&[1, 3, 3, 1], 5).is_some());
    }

    #[test]
    fn gamma_round_trip() {
        let h = vec![1, 5, 8, 5, 1];
        let g = gamma_from_h(&h).unwrap();
        assert_eq!(h_from_gamma(&g, 4), h);
    }
}
