//! Murai spheres: generalized Bier spheres of proper c-multicomplexes.
//!
//! The vertex `x_i^{(j)}` (block `i`, level `0 ≤ j ≤ c_i`) is labeled `offset_i + j + 1`
//! with `offset_i = Σ_{k<i} (c_k + 1)`, the same index as the polarized variable `x_{i,j}`.

use crate::bier::BierClassification;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::ideal::{flat_index, polarize, star_polarize, MonomialIdeal, Variables};
use crate::multicomplex::Multicomplex;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Label of `x_i^{(j)}` for a 0-based block `i`.
pub fn murai_vertex(c: &[usize], i: usize, j: usize) -> usize {
    flat_index(c, i, j)
}

fn undefined(mc: &Multicomplex) -> Error {
    Error::UndefinedDual(format!("the full c-box for c = {:?}", mc.c()))
}

/// `Bier_c(M)`, generated by `F_c(x^a) ∖ {x_i^{(j)}}` for `x^a ∈ M`, `a_i < j ≤ c_i` and
/// `x^a x_i^{j−a_i} ∉ M`, where `F_c(x^a) = X̃ ∖ {x_1^{(a_1)}, ..., x_m^{(a_m)}}`.
pub fn murai_sphere(mc: &Multicomplex) -> Result<Complex> {
    if mc.is_full() {
        return Err(undefined(mc));
    }
    let c = mc.c();
    let n = mc.m() + mc.total();
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit(format!("{n} Murai vertices exceed {MAX_VERTICES}")));
    }
    let all = VertexSet::full(n);
    let mut gens = Vec::new();
    for a in mc.members() {
        let base = (0..mc.m()).fold(all, |acc, i| acc.without(murai_vertex(c, i, a[i])));
        for i in 0..mc.m() {
            for j in (a[i] + 1)..=c[i] {
                let mut b = a.clone();
                b[i] = j;
                if !mc.contains(&b) {
                    gens.push(base.without(murai_vertex(c, i, j)));
                }
            }
        }
    }
    let sphere = Complex::new(n, gens)?;
    debug_assert!(sphere.facets().iter().all(|f| f.len() + 1 == mc.total()));
    Ok(sphere)
}

/// `pol(I_c(M)) + pol*(I_c(M∨)) + pol(x_1^{c_1+1}, ..., x_m^{c_m+1})` before minimalization.
pub fn murai_ideal_parts(mc: &Multicomplex) -> Result<[MonomialIdeal; 3]> {
    let dual = mc.c_dual().map_err(|_| undefined(mc))?;
    let c = mc.c();
    let m = mc.m();
    let plain = |gens| MonomialIdeal::new(Variables::Plain(m), gens);
    let powers = (0..m)
        .map(|i| (0..m).map(|k| if k == i { c[i] + 1 } else { 0 }).collect())
        .collect();
    Ok([
        polarize(&plain(mc.minimal_nonmembers())?, c)?,
        star_polarize(&plain(dual.minimal_nonmembers())?, c)?,
        polarize(&plain(powers)?, c)?,
    ])
}

/// The face ideal of `Bier_c(M)` assembled from `M` and `M∨`, minimalized.
pub fn murai_face_ideal(mc: &Multicomplex) -> Result<MonomialIdeal> {
    let [a, b, p] = murai_ideal_parts(mc)?;
    a.sum(&b)?.sum(&p)
}

/// For `c = (1, ..., 1)`: `x_i^{(0)} ↦ i`, `x_i^{(1)} ↦ m + i`, identifying the Murai sphere
/// with the Bier sphere.
pub fn bier_relabeling(m: usize) -> Vec<usize> {
    (1..=2 * m).map(|v| if v % 2 == 1 { v.div_ceil(2) } else { m + v / 2 }).collect()
}

/// Flag kind of the Murai sphere by isomorphism with the reference families.
pub fn classify_murai(mc: &Multicomplex) -> Result<BierClassification> {
    Ok(BierClassification::from_sphere(&murai_sphere(mc)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bier::{bier_sphere, BierTag, FlagKind};
    use crate::builders::{cross_polytope, cycle, points};
    use crate::isomorphism::are_isomorphic;

    fn mc(c: &[usize], gens: &[&[usize]]) -> Multicomplex {
        Multicomplex::new(c.to_vec(), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn pentagon() {
        let s = murai_sphere(&mc(&[2, 1], &[&[1, 0], &[0, 1]])).unwrap();
        let expect = Complex::from_lists(5, &[vec![2, 5], vec![1, 5], vec![1, 3], vec![3, 4], vec![2, 4]]).unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn square_from_one_variable() {
        let s = murai_sphere(&mc(&[3], &[&[1]])).unwrap();
        assert_eq!(s.m(), 4);
        assert!(are_isomorphic(&s, &cycle(4).unwrap()).is_some());
    }

    #[test]
    fn reduces_to_bier_for_unit_caps() {
        let k = points(3, 3).unwrap();
        let s = murai_sphere(&Multicomplex::from_complex(&k).unwrap()).unwrap();
        assert_eq!(s.relabel(&bier_relabeling(3), 6).unwrap(), bier_sphere(&k).unwrap());
    }

    #[test]
    fn face_ideal_of_x_with_caps_2_1() {
        let m = mc(&[2, 1], &[&[1, 0]]);
        let ideal = murai_face_ideal(&m).unwrap();
        assert_eq!(ideal.to_string(), "(x20, x12x21, x10x11)");
        let supports = ideal.supports();
        assert_eq!(supports, murai_sphere(&m).unwrap().minimal_nonfaces());
        let y = murai_face_ideal(&mc(&[2, 1], &[&[0, 1]])).unwrap();
        assert!(y.generators.contains(&vec![1, 0, 0, 0, 0]));
    }

    #[test]
    fn hexagon_ideal() {
        let m = Multicomplex::from_complex(&points(3, 3).unwrap()).unwrap();
        let ideal = murai_face_ideal(&m).unwrap();
        assert_eq!(ideal.generators.len(), 9);
        assert!(ideal.is_squarefree());
    }

    #[test]
    fn classifications() {
        let p5 = classify_murai(&mc(&[2, 1], &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(p5.tags, vec![BierTag::FlagFamily(FlagKind::CubeTimesP5(0))]);
        let sq = classify_murai(&mc(&[1, 1, 1], &[&[1, 1, 0]])).unwrap();
        assert_eq!(sq.tags, vec![BierTag::FlagFamily(FlagKind::Cube(2))]);
        // max = {(x_1^{c_1})^c}: a cross-polytope boundary avoiding x_1^{(0)}.
        let cp = murai_sphere(&mc(&[2, 1, 1], &[&[0, 1, 1]])).unwrap();
        assert_eq!(cp.ghosts(), VertexSet::singleton(murai_vertex(&[2, 1, 1], 0, 0)));
        assert!(are_isomorphic(&cp.without_ghosts().complex, &cross_polytope(3).unwrap()).is_some());
    }
}
