//! Isomorphism testing and canonical forms for complexes on small ground sets.

use std::collections::HashSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::vertex_set::VertexSet;

/// A bijection between ground sets; `map[v - 1]` is the image of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

impl Isomorphism {
    pub fn identity(m: usize) -> Self {
        Isomorphism { map: (1..=m).collect() }
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v - 1]
    }

    pub fn apply_set(&self, s: VertexSet) -> VertexSet {
        s.map(&self.map)
    }

    pub fn apply(&self, k: &Complex) -> Complex {
        k.relabel(&self.map, self.map.len())
            .expect("an isomorphism is a permutation of the ground set")
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (k, &v) in self.map.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Isomorphism { map: inv }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Isomorphism) -> Self {
        Isomorphism { map: self.map.iter().map(|&v| other.image(v)).collect() }
    }

    /// Whether the map is a bijection sending the facets of `source` onto those of `target`.
    pub fn is_isomorphism(&self, source: &Complex, target: &Complex) -> bool {
        let m = source.m();
        if target.m() != m || self.map.len() != m {
            return false;
        }
        let mut seen = vec![false; m];
        for &v in &self.map {
            if v == 0 || v > m || seen[v - 1] {
                return false;
            }
            seen[v - 1] = true;
        }
        let mut image: Vec<VertexSet> = source.facets().iter().map(|f| self.apply_set(*f)).collect();
        image.sort_unstable();
        image == target.facets()
    }
}

/// Per-vertex data preserved by every isomorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct VertexSignature {
    star_sizes: Vec<usize>,
    link_counts: Vec<u64>,
}

fn signatures(k: &Complex) -> Vec<VertexSignature> {
    (1..=k.m())
        .map(|v| {
            let star: Vec<VertexSet> = k.facets().iter().filter(|f| f.contains(v)).copied().collect();
            let mut star_sizes: Vec<usize> = star.iter().map(|f| f.len()).collect();
            star_sizes.sort_unstable();
            let link_counts = if star.is_empty() {
                Vec::new()
            } else {
                k.link(VertexSet::singleton(v)).expect("vertex of K").face_counts()
            };
            VertexSignature { star_sizes, link_counts }
        })
        .collect()
}

fn adjacency(k: &Complex) -> Vec<VertexSet> {
    let mut adj = vec![VertexSet::EMPTY; k.m()];
    for f in k.facets() {
        for v in f.iter() {
            adj[v - 1] = adj[v - 1] | f.without(v);
        }
    }
    adj
}

/// Finds a facet-preserving bijection `K → L` (ghosts go to ghosts), or `None`.
///
/// Backtracking over vertex assignments, pruned by vertex signatures (star facet sizes and
/// link f-vectors), edge consistency with the already-assigned vertices, and a check that
/// every fully assigned facet lands on a facet. The search order is deterministic.
pub fn are_isomorphic(k: &Complex, l: &Complex) -> Option<Isomorphism> {
    let m = k.m();
    if l.m() != m || k.facets().len() != l.facets().len() || k.face_counts() != l.face_counts() {
        return None;
    }
    let sig_k = signatures(k);
    let sig_l = signatures(l);
    let mut sorted_k = sig_k.clone();
    let mut sorted_l = sig_l.clone();
    sorted_k.sort();
    sorted_l.sort();
    if sorted_k != sorted_l {
        return None;
    }
    let adj_k = adjacency(k);
    let adj_l = adjacency(l);

    // Order: start at the vertex with the rarest signature, then grow along edges.
    let class_size = |v: usize| sig_k.iter().filter(|s| **s == sig_k[v - 1]).count();
    let mut order: Vec<usize> = Vec::with_capacity(m);
    let mut placed = VertexSet::EMPTY;
    while order.len() < m {
        let frontier: Vec<usize> = (1..=m)
            .filter(|&v| !placed.contains(v))
            .filter(|&v| order.is_empty() || !adj_k[v - 1].intersection(placed).is_empty())
            .collect();
        let pool: Vec<usize> = if frontier.is_empty() {
            (1..=m).filter(|&v| !placed.contains(v)).collect()
        } else {
            frontier
        };
        let next = *pool
            .iter()
            .min_by_key(|&&v| (class_size(v), std::cmp::Reverse(adj_k[v - 1].intersection(placed).len()), v))
            .expect("unplaced vertex remains");
        order.push(next);
        placed = placed.with(next);
    }

    // Facets of K that become fully assigned at each step of the order.
    let mut position = vec![0usize; m];
    for (p, &v) in order.iter().enumerate() {
        position[v - 1] = p;
    }
    let mut finished_at: Vec<Vec<VertexSet>> = vec![Vec::new(); m];
    for f in k.facets() {
        if let Some(last) = f.iter().map(|v| position[v - 1]).max() {
            finished_at[last].push(*f);
        }
    }
    let l_facets: HashSet<VertexSet> = l.facets().iter().copied().collect();

    struct Search<'a> {
        order: &'a [usize],
        sig_k: &'a [VertexSignature],
        sig_l: &'a [VertexSignature],
        adj_k: &'a [VertexSet],
        adj_l: &'a [VertexSet],
        finished_at: &'a [Vec<VertexSet>],
        l_facets: &'a HashSet<VertexSet>,
        map: Vec<usize>,
        used: VertexSet,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            for w in 1..=self.map.len() {
                if self.used.contains(w) || self.sig_k[v - 1] != self.sig_l[w - 1] {
                    continue;
                }
                let consistent = self.order[..depth].iter().all(|&u| {
                    self.adj_k[v - 1].contains(u) == self.adj_l[w - 1].contains(self.map[u - 1])
                });
                if !consistent {
                    continue;
                }
                self.map[v - 1] = w;
                let facets_ok = self.finished_at[depth]
                    .iter()
                    .all(|f| self.l_facets.contains(&f.map(&self.map)));
                if facets_ok {
                    self.used = self.used.with(w);
                    if self.run(depth + 1) {
                        return true;
                    }
                    self.used = self.used.without(w);
                }
                self.map[v - 1] = 0;
            }
            false
        }
    }

    let mut search = Search {
        order: &order,
        sig_k: &sig_k,
        sig_l: &sig_l,
        adj_k: &adj_k,
        adj_l: &adj_l,
        finished_at: &finished_at,
        l_facets: &l_facets,
        map: vec![0; m],
        used: VertexSet::EMPTY,
    };
    if search.run(0) {
        let iso = Isomorphism { map: search.map };
        debug_assert!(iso.is_isomorphism(k, l));
        Some(iso)
    } else {
        None
    }
}

/// Splits cells by incidence with the facets until the ordered partition is stable.
fn refine(k: &Complex, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut color = vec![0usize; k.m()];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                color[v - 1] = c;
            }
        }
        let facet_colors: Vec<Vec<usize>> = k
            .facets()
            .iter()
            .map(|f| f.iter().map(|v| color[v - 1]).sorted_unstable().collect())
            .collect();
        let vertex_key = |v: usize| -> Vec<&Vec<usize>> {
            k.facets()
                .iter()
                .zip(&facet_colors)
                .filter(|(f, _)| f.contains(v))
                .map(|(_, c)| c)
                .sorted()
                .collect()
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<&Vec<usize>>, usize)> = cell.iter().map(|&v| (vertex_key(v), v)).collect();
            keyed.sort();
            for (_, group) in &keyed.into_iter().chunk_by(|(key, _)| key.clone()) {
                next.push(group.map(|(_, v)| v).collect());
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn canonical_search(k: &Complex, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<VertexSet>, Vec<usize>)>) {
    let cells = refine(k, cells);
    if cells.iter().all(|c| c.len() == 1) {
        let mut map = vec![0usize; k.m()];
        for (pos, cell) in cells.iter().enumerate() {
            map[cell[0] - 1] = pos + 1;
        }
        let mut facets: Vec<VertexSet> = k.facets().iter().map(|f| f.map(&map)).collect();
        facets.sort_unstable();
        if best.as_ref().is_none_or(|(b, _)| facets < *b) {
            *best = Some((facets, map));
        }
        return;
    }
    let (target, _) = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .expect("non-discrete partition");
    for &v in &cells[target] {
        let mut split = cells.clone();
        let rest: Vec<usize> = cells[target].iter().copied().filter(|&u| u != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        canonical_search(k, split, best);
    }
}

/// Relabeling of `K` whose facet list is minimal among all labelings reachable by
/// individualization and refinement; isomorphic complexes yield identical results.
pub fn canonical_labeling(k: &Complex) -> (Complex, Isomorphism) {
    let mut best = None;
    canonical_search(k, vec![(1..=k.m()).collect()], &mut best);
    let (_, map) = best.expect("the search always reaches a leaf");
    let iso = Isomorphism { map };
    (iso.apply(k), iso)
}

/// Canonical string `m:[[..],..]`, identical exactly for isomorphic complexes.
pub fn canonical_form(k: &Complex) -> String {
    let (canon, _) = canonical_labeling(k);
    format!("{}:{}", canon.m(), serde_json::to_string(&canon.facet_lists()).expect("json"))
}

/// Canonical form of the complex with ghost vertices removed (its combinatorial type).
pub fn combinatorial_type(k: &Complex) -> String {
    canonical_form(&k.without_ghosts().complex)
}

/// Number of ground-set permutations preserving `K`, by exhaustive enumeration.
pub fn automorphism_count(k: &Complex) -> u64 {
    assert!(k.m() <= 8, "automorphism enumeration is limited to 8 vertices");
    (1..=k.m())
        .permutations(k.m())
        .filter(|p| Isomorphism { map: p.clone() }.is_isomorphism(k, k))
        .count()
        .max(1) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bier::bier_sphere;
    use crate::builders::{cross_polytope, cycle, points};

    #[test]
    fn relabeled_cycle() {
        let a = cycle(4).unwrap();
        let b = Complex::from_lists(4, &[vec![1, 3], vec![3, 2], vec![2, 4], vec![4, 1]]).unwrap();
        let iso = are_isomorphic(&a, &b).unwrap();
        assert!(iso.is_isomorphism(&a, &b));
        assert!(iso.inverse().is_isomorphism(&b, &a));
    }

    #[test]
    fn different_cycles() {
        assert!(are_isomorphic(&cycle(4).unwrap(), &cycle(5).unwrap()).is_none());
    }

    #[test]
    fn hexagon_is_bier_of_three_points() {
        let b = bier_sphere(&points(3, 3).unwrap()).unwrap();
        assert!(are_isomorphic(&cycle(6).unwrap(), &b).is_some());
    }

    #[test]
    fn ghosts_must_match() {
        let a = Complex::from_lists(3, &[vec![1, 2]]).unwrap();
        let b = Complex::from_lists(3, &[vec![1, 2], vec![3]]).unwrap();
        assert!(are_isomorphic(&a, &b).is_none());
    }

    #[test]
    fn canonical_forms_agree_on_relabelings() {
        let a = cross_polytope(3).unwrap();
        let iso = Isomorphism { map: vec![4, 6, 1, 3, 2, 5] };
        let b = iso.apply(&a);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&cycle(6).unwrap()));
    }

    #[test]
    fn automorphisms_of_square() {
        assert_eq!(automorphism_count(&cycle(4).unwrap()), 8);
        assert_eq!(automorphism_count(&Complex::void(3)), 6);
    }
}
