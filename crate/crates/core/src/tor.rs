//! Bigraded Betti numbers of face rings and the product structure on Tor.
//!
//! Tables are keyed by `(i, 2j)` with `i ≥ 0` the homological degree (written `−i` in the
//! cohomological convention) and `j = |J|` the size of the squarefree multidegree.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::homology::{Cochains, DegreeData};
use crate::linalg::{rank, run_exact, FieldTag, Ring, RingTask};
use crate::vertex_set::VertexSet;

/// Largest ground set for the `2^m` sweeps.
pub const MAX_SWEEP_VERTICES: usize = 16;
/// Largest ground set for the Koszul oracle.
pub const MAX_KOSZUL_VERTICES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedBetti {
    pub field: FieldTag,
    pub m: usize,
    /// `(i, 2j) → β^{−i,2j}`; zero entries are omitted.
    pub table: BTreeMap<(usize, usize), u64>,
}

impl BigradedBetti {
    fn new(field: FieldTag, m: usize) -> Self {
        BigradedBetti { field, m, table: BTreeMap::new() }
    }

    fn add(&mut self, i: usize, two_j: usize, r: u64) {
        if r > 0 {
            *self.table.entry((i, two_j)).or_insert(0) += r;
        }
    }

    fn merge(mut self, other: BigradedBetti) -> Self {
        for ((i, tj), r) in other.table {
            self.add(i, tj, r);
        }
        self
    }

    pub fn get(&self, i: usize, two_j: usize) -> u64 {
        self.table.get(&(i, two_j)).copied().unwrap_or(0)
    }

    /// `[i, 2j, rank]` triples in increasing order.
    pub fn entries(&self) -> Vec<[u64; 3]> {
        self.table.iter().map(|(&(i, tj), &r)| [i as u64, tj as u64, r]).collect()
    }
}

impl fmt::Display for BigradedBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.table.iter().map(|((i, tj), r)| format!("({i},{tj}):{r}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn check_size(k: &Complex, limit: usize) -> Result<()> {
    if k.m() > limit {
        return Err(Error::ResourceLimit(format!("{} vertices exceed the limit of {limit}", k.m())));
    }
    Ok(())
}

/// `β^{−i,2j} = Σ_{|J|=j} rank H̃^{j−i−1}(K_J)` over all `J ⊆ [m]`.
pub fn hochster_betti(k: &Complex, field: FieldTag) -> Result<BigradedBetti> {
    check_size(k, MAX_SWEEP_VERTICES)?;
    let all = Cochains::of_complex(k);
    let m = k.m();
    let table = VertexSet::full(m)
        .subsets()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|j| {
            let mut part = BigradedBetti::new(field, m);
            let sub = all.restricted(j);
            for (deg, r) in crate::homology::cohomology_ranks(&sub, field) {
                // deg = |J| − i − 1
                let i = j.len() as isize - deg - 1;
                debug_assert!(i >= 0);
                part.add(i as usize, 2 * j.len(), r as u64);
            }
            part
        })
        .reduce(|| BigradedBetti::new(field, m), BigradedBetti::merge);
    Ok(table)
}

/// Betti numbers straight from the Koszul complex `k[K] ⊗ Λ[u_1..u_m]`, restricted to
/// squarefree multidegrees; an oracle independent of [`hochster_betti`].
///
/// In multidegree `J` the basis is `x_σ u_τ` with `σ ∈ K`, `σ ⊔ τ = J`, and
/// `d(x_σ u_τ) = Σ_{i∈τ} (−1)^{#{t∈τ : t<i}} x_{σ∪i} u_{τ∖i}`, dropping terms with `σ∪i ∉ K`.
pub fn koszul_betti_oracle(k: &Complex, field: FieldTag) -> Result<BigradedBetti> {
    check_size(k, MAX_KOSZUL_VERTICES)?;
    struct Task<'a>(&'a Complex);
    impl RingTask for Task<'_> {
        type Output = BigradedBetti;
        fn run<R: Ring>(&self, ring: &R) -> BigradedBetti {
            let k = self.0;
            let mut out = BigradedBetti::new(FieldTag::RATIONALS, k.m());
            for j in VertexSet::full(k.m()).subsets() {
                // by_t[t] = the faces σ ⊆ J (so τ = J∖σ has size t)
                let mut by_t: Vec<Vec<VertexSet>> = vec![Vec::new(); j.len() + 1];
                for sigma in j.subsets() {
                    if k.has_face(sigma) {
                        by_t[j.len() - sigma.len()].push(sigma);
                    }
                }
                by_t.iter_mut().for_each(|level| level.sort_unstable());
                // rank of d_t : C_t → C_{t-1}
                let ranks: Vec<usize> = (0..=j.len())
                    .map(|t| {
                        if t == 0 {
                            return 0;
                        }
                        let target = &by_t[t - 1];
                        let rows = by_t[t].iter().map(|&sigma| {
                            let tau = j.difference(sigma);
                            let mut row = vec![ring.zero(); target.len()];
                            for i in tau.iter() {
                                let up = sigma.with(i);
                                if let Ok(col) = target.binary_search(&up) {
                                    let sign = if tau.rank_of(i) % 2 == 0 { 1 } else { -1 };
                                    row[col] = ring.from_i64(sign);
                                }
                            }
                            row
                        });
                        rank(ring, rows.collect::<Vec<_>>())
                    })
                    .collect();
                for t in 0..=j.len() {
                    let next = if t < j.len() { ranks[t + 1] } else { 0 };
                    let h = by_t[t].len() - ranks[t] - next;
                    out.add(t, 2 * j.len(), h as u64);
                }
            }
            out
        }
    }
    let mut out = run_exact(field, &Task(k));
    out.field = field;
    Ok(out)
}

/// A nonzero product of basis classes `H̃^{p−1}(K_I) ⊗ H̃^{q−1}(K_J) → H̃^{p+q−1}(K_{I⊔J})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProductWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub left_degree: isize,
    pub right_degree: isize,
    pub left_class: usize,
    pub right_class: usize,
}

struct SubsetCohomology<'r, R: Ring> {
    subset: VertexSet,
    cochains: Cochains,
    degrees: Vec<DegreeData<'r, R>>,
}

/// `μ(α ⊗ β)(L ⊔ M) = ε(L, M) α(L) β(M)` for `L ⊔ M` a face of the target, where `ε` is the
/// sign of the shuffle sorting `L ⊔ M`.
fn cochain_product<R: Ring>(
    ring: &R,
    left: (&Cochains, usize, &[R::E]),
    right: (&Cochains, usize, &[R::E]),
    target: &Cochains,
) -> Vec<R::E> {
    let (lc, ls, a) = left;
    let (rc, rs, b) = right;
    let mut out = vec![ring.zero(); target.faces(ls + rs).len()];
    for (x, l) in a.iter().zip(lc.faces(ls)) {
        if ring.is_zero(x) {
            continue;
        }
        for (y, mm) in b.iter().zip(rc.faces(rs)) {
            if ring.is_zero(y) {
                continue;
            }
            if let Some(pos) = target.position(*l | *mm) {
                let inversions: usize = l.iter().map(|v| mm.rank_of(v)).sum();
                let mut term = ring.mul(x, y);
                if inversions % 2 == 1 {
                    term = ring.mul(&term, &ring.from_i64(-1));
                }
                out[pos] = ring.add(&out[pos], &term);
            }
        }
    }
    out
}

/// Options for the product scan.
#[derive(Clone, Copy, Debug, Default)]
pub struct ProductScan {
    /// Stop after this many witnesses.
    pub limit: Option<usize>,
    /// Replace every representative by itself plus a random coboundary drawn from this seed.
    pub perturb: Option<u64>,
}

struct ProductTask<'a> {
    k: &'a Complex,
    scan: ProductScan,
}

impl RingTask for ProductTask<'_> {
    type Output = Vec<ProductWitness>;

    fn run<R: Ring>(&self, ring: &R) -> Vec<ProductWitness> {
        let k = self.k;
        let all = Cochains::of_complex(k);
        let subsets: Vec<VertexSet> = VertexSet::full(k.m()).subsets().collect();
        let mut data: Vec<SubsetCohomology<R>> = subsets
            .par_iter()
            .map(|&s| {
                let cochains = all.restricted(s);
                let degrees = cochains.cohomology(ring);
                SubsetCohomology { subset: s, cochains, degrees }
            })
            .collect();
        if let Some(seed) = self.scan.perturb {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for d in &mut data {
                for s in 1..d.degrees.len() {
                    let below = d.cochains.faces(s - 1).len();
                    let mut reps = std::mem::take(&mut d.degrees[s].reps);
                    for rep in &mut reps {
                        let f: Vec<R::E> = (0..below).map(|_| ring.from_i64(rng.gen_range(-2..=2))).collect();
                        let cob = d.cochains.coboundary(ring, s - 1, &f);
                        for (x, y) in rep.iter_mut().zip(&cob) {
                            *x = ring.add(x, y);
                        }
                    }
                    d.degrees[s].reps = reps;
                }
            }
        }
        // `subsets()` enumerates masks in increasing order, so the index of a subset is its mask.
        let by_mask = |s: VertexSet| &data[s.bits() as usize];
        let mut witnesses = Vec::new();
        for left in data.iter().filter(|d| !d.subset.is_empty()) {
            for right in data.iter().filter(|d| !d.subset.is_empty()) {
                if !left.subset.is_disjoint(right.subset) || left.subset.min_vertex() > right.subset.min_vertex() {
                    continue;
                }
                let union = by_mask(left.subset | right.subset);
                for ld in left.degrees.iter().filter(|d| !d.reps.is_empty()) {
                    for rd in right.degrees.iter().filter(|d| !d.reps.is_empty()) {
                        let size = ld.size + rd.size;
                        let Some(target) = union.degrees.get(size) else { continue };
                        for (li, a) in ld.reps.iter().enumerate() {
                            for (ri, b) in rd.reps.iter().enumerate() {
                                let prod = cochain_product(
                                    ring,
                                    (&left.cochains, ld.size, a),
                                    (&right.cochains, rd.size, b),
                                    &union.cochains,
                                );
                                if prod.iter().all(|x| ring.is_zero(x)) || target.coboundaries.contains(&prod) {
                                    continue;
                                }
                                witnesses.push(ProductWitness {
                                    left: left.subset.to_vec(),
                                    right: right.subset.to_vec(),
                                    left_degree: ld.degree(),
                                    right_degree: rd.degree(),
                                    left_class: li,
                                    right_class: ri,
                                });
                                if self.scan.limit.is_some_and(|n| witnesses.len() >= n) {
                                    return witnesses;
                                }
                            }
                        }
                    }
                }
            }
        }
        witnesses
    }
}

/// Every nonzero product of basis classes over disjoint nonempty `I, J` (each unordered
/// pair once, `min I < min J`).
pub fn tor_products(k: &Complex, field: FieldTag) -> Result<Vec<ProductWitness>> {
    tor_products_with(k, field, ProductScan::default())
}

pub fn tor_products_with(k: &Complex, field: FieldTag, scan: ProductScan) -> Result<Vec<ProductWitness>> {
    check_size(k, MAX_SWEEP_VERTICES)?;
    Ok(run_exact(field, &ProductTask { k, scan }))
}

/// All products of positive-degree Tor classes vanish (Massey products are not examined).
pub fn is_product_golod(k: &Complex, field: FieldTag) -> Result<bool> {
    Ok(tor_products_with(k, field, ProductScan { limit: Some(1), perturb: None })?.is_empty())
}

/// Not product-Golod, while every single-vertex deletion is.
pub fn is_min_non_golod_product(k: &Complex, field: FieldTag) -> Result<bool> {
    if is_product_golod(k, field)? {
        return Ok(false);
    }
    for i in 1..=k.m() {
        if !is_product_golod(&k.deletion(i)?.complex, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that the coboundary squares to zero and that products of cocycles are cocycles on
/// the given complex; used by tests as a sanity check of the sign conventions.
pub fn product_is_cocycle(k: &Complex, field: FieldTag) -> bool {
    struct Task<'a>(&'a Complex);
    impl RingTask for Task<'_> {
        type Output = bool;
        fn run<R: Ring>(&self, ring: &R) -> bool {
            let all = Cochains::of_complex(self.0);
            for s in 0..all.top_size() {
                let rows = all.coboundary_rows(ring, s);
                for r in &rows {
                    let dd = all.coboundary(ring, s + 1, r);
                    if !dd.iter().all(|x| ring.is_zero(x)) {
                        return false;
                    }
                }
            }
            let m = self.0.m();
            for i in VertexSet::full(m).subsets().filter(|s| !s.is_empty()) {
                let rest = i.complement(m);
                for j in rest.subsets().filter(|s| !s.is_empty()) {
                    let (ci, cj, cu) = (all.restricted(i), all.restricted(j), all.restricted(i | j));
                    let (hi, hj) = (ci.cohomology(ring), cj.cohomology(ring));
                    for a in hi.iter().flat_map(|d| d.reps.iter().map(move |r| (d.size, r))) {
                        for b in hj.iter().flat_map(|d| d.reps.iter().map(move |r| (d.size, r))) {
                            let p = cochain_product(ring, (&ci, a.0, a.1), (&cj, b.0, b.1), &cu);
                            let dp = cu.coboundary(ring, a.0 + b.0, &p);
                            if !dp.iter().all(|x| ring.is_zero(x)) {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        }
    }
    run_exact(field, &Task(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bier::bier_sphere;
    use crate::builders::{boundary_simplex, cycle, points};

    fn table(entries: &[((usize, usize), u64)]) -> BTreeMap<(usize, usize), u64> {
        entries.iter().copied().collect()
    }

    #[test]
    fn square_betti() {
        let b = hochster_betti(&cycle(4).unwrap(), FieldTag::RATIONALS).unwrap();
        assert_eq!(b.table, table(&[((0, 0), 1), ((1, 4), 2), ((2, 8), 1)]));
    }

    #[test]
    fn triangle_boundary_betti() {
        let b = hochster_betti(&boundary_simplex(3).unwrap(), FieldTag::GF2).unwrap();
        assert_eq!(b.table, table(&[((0, 0), 1), ((1, 6), 1)]));
    }

    #[test]
    fn oracle_agrees_on_small_complexes() {
        for k in [cycle(4).unwrap(), cycle(5).unwrap(), boundary_simplex(4).unwrap(), points(2, 4).unwrap()] {
            for f in [FieldTag::RATIONALS, FieldTag::GF2] {
                assert_eq!(hochster_betti(&k, f).unwrap(), koszul_betti_oracle(&k, f).unwrap());
            }
        }
    }

    #[test]
    fn square_has_one_product() {
        let w = tor_products(&cycle(4).unwrap(), FieldTag::RATIONALS).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!((w[0].left.clone(), w[0].right.clone()), (vec![1, 3], vec![2, 4]));
    }

    #[test]
    fn golod_predicates() {
        let tri = boundary_simplex(3).unwrap();
        assert!(tor_products(&tri, FieldTag::RATIONALS).unwrap().is_empty());
        let path = Complex::from_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert!(is_product_golod(&path, FieldTag::GF2).unwrap());
        let sq = cycle(4).unwrap();
        assert!(is_min_non_golod_product(&sq, FieldTag::RATIONALS).unwrap());
        let hex = bier_sphere(&points(3, 3).unwrap()).unwrap();
        assert!(is_min_non_golod_product(&hex, FieldTag::RATIONALS).unwrap());
    }

    #[test]
    fn sign_conventions() {
        assert!(product_is_cocycle(&cycle(5).unwrap(), FieldTag::RATIONALS));
        assert!(product_is_cocycle(&boundary_simplex(4).unwrap().suspension(), FieldTag::new(3).unwrap()));
    }

    #[test]
    fn perturbed_representatives_give_the_same_witnesses() {
        let k = cycle(6).unwrap();
        let plain = tor_products(&k, FieldTag::RATIONALS).unwrap();
        let scan = ProductScan { limit: None, perturb: Some(7) };
        assert_eq!(plain, tor_products_with(&k, FieldTag::RATIONALS, scan).unwrap());
    }
}
