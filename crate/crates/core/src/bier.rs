//! Alexander duality, Bier spheres and their combinatorial classification.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::builders::{cross_polytope, cycle, nerve_q2_3};
use crate::complex::{maximal_sets, minimal_sets, Complex};
use crate::error::{Error, Result};
use crate::isomorphism::{are_isomorphic, Isomorphism};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// `K∨` on the same ground set: facets are the complements of the minimal non-faces of `K`.
pub fn alexander_dual(k: &Complex) -> Result<Complex> {
    if k.is_full_simplex() {
        return Err(Error::UndefinedDual(format!("the full simplex on [{}]", k.m())));
    }
    let m = k.m();
    let gens = k.minimal_nonfaces().into_iter().map(|s| s.complement(m)).collect();
    Ok(Complex::from_generators_unchecked(m, gens))
}

fn check_bier_size(k: &Complex) -> Result<()> {
    if 2 * k.m() > MAX_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "a Bier sphere over [{}] needs {} vertices",
            k.m(),
            2 * k.m()
        )));
    }
    Ok(())
}

/// `Bier(K) = K *_Δ K∨` on `[2m]`, where vertex `i′` of the dual is `m + i`.
///
/// Facets are generated directly: `A ⊔ ([m] ∖ (A ∪ {b}))′` for every face `A` and every
/// `b ∉ A` with `A ∪ {b} ∉ K`.
pub fn bier_sphere(k: &Complex) -> Result<Complex> {
    if k.is_full_simplex() {
        return Err(Error::UndefinedDual(format!("the full simplex on [{}]", k.m())));
    }
    check_bier_size(k)?;
    let m = k.m();
    let mut gens = Vec::new();
    for a in k.faces() {
        for b in a.complement(m).iter() {
            let ab = a.with(b);
            if !k.has_face(ab) {
                gens.push(a | ab.complement(m).shifted(m));
            }
        }
    }
    let bier = Complex::from_generators_unchecked(2 * m, gens);
    debug_assert!(bier.facets().iter().all(|f| f.len() + 1 == m));
    Ok(bier)
}

/// The deleted join computed from scratch: every disjoint pair `I ∈ K`, `J ∈ K∨`, then
/// maximality filtering. Kept as an oracle for [`bier_sphere`].
pub fn bier_sphere_brute_force(k: &Complex) -> Result<Complex> {
    let dual = alexander_dual(k)?;
    check_bier_size(k)?;
    let m = k.m();
    let dual_faces = dual.faces();
    let mut gens = Vec::new();
    for i in k.faces() {
        for j in &dual_faces {
            if i.is_disjoint(*j) {
                gens.push(i | j.shifted(m));
            }
        }
    }
    Ok(Complex::from_generators_unchecked(2 * m, maximal_sets(gens)))
}

/// `min(K) ∪ min(K∨)′ ∪ {{i, i′}}` before minimalization; may contain redundant sets.
pub fn bier_nonface_generators(k: &Complex) -> Result<Vec<VertexSet>> {
    let dual = alexander_dual(k)?;
    check_bier_size(k)?;
    let m = k.m();
    let mut gens = k.minimal_nonfaces();
    gens.extend(dual.minimal_nonfaces().into_iter().map(|s| s.shifted(m)));
    gens.extend((1..=m).map(|i| VertexSet::from_vertices([i, m + i])));
    Ok(gens)
}

/// Minimal non-faces of `Bier(K)` read off from those of `K` and `K∨`.
pub fn bier_minimal_nonfaces(k: &Complex) -> Result<Vec<VertexSet>> {
    Ok(minimal_sets(bier_nonface_generators(k)?))
}

/// The swap `i ↔ i′`, an isomorphism `Bier(K) → Bier(K∨)`.
pub fn swap_isomorphism(k: &Complex) -> Result<Isomorphism> {
    if k.is_full_simplex() {
        return Err(Error::UndefinedDual(format!("the full simplex on [{}]", k.m())));
    }
    let m = k.m();
    let map = (1..=2 * m).map(|v| if v <= m { v + m } else { v - m }).collect();
    Ok(Isomorphism { map })
}

/// Nerve complexes of the flag Bier polytopes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FlagKind {
    /// Nerve of `Iⁿ`, the boundary of the `n`-dimensional cross-polytope (`n ≥ 1`).
    Cube(usize),
    CubeTimesP5(usize),
    CubeTimesP6(usize),
    CubeTimesQ23(usize),
}

impl FlagKind {
    /// The labeled reference complex of this kind.
    pub fn reference(self) -> Complex {
        let cube = |n: usize| cross_polytope(n).expect("cross-polytope");
        match self {
            FlagKind::Cube(n) => cube(n),
            FlagKind::CubeTimesP5(n) => cube(n).join(&cycle(5).expect("pentagon")),
            FlagKind::CubeTimesP6(n) => cube(n).join(&cycle(6).expect("hexagon")),
            FlagKind::CubeTimesQ23(n) => cube(n).join(&nerve_q2_3()),
        }
    }
}

impl fmt::Display for FlagKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlagKind::Cube(n) => write!(f, "Cube({n})"),
            FlagKind::CubeTimesP5(n) => write!(f, "CubeTimesP5({n})"),
            FlagKind::CubeTimesP6(n) => write!(f, "CubeTimesP6({n})"),
            FlagKind::CubeTimesQ23(n) => write!(f, "CubeTimesQ23({n})"),
        }
    }
}

/// Identifies a complex (ghosts ignored) with one of the four reference families.
///
/// The candidate parameter `n` is fixed by the number of vertices, so at most four
/// isomorphism tests are run. The returned isomorphism maps the ghost-free complex onto
/// the reference.
pub fn flag_kind(k: &Complex) -> Option<(FlagKind, Isomorphism)> {
    let core = k.without_ghosts().complex;
    let v = core.m();
    let mut candidates = Vec::new();
    if v.is_multiple_of(2) && v >= 2 {
        candidates.push(FlagKind::Cube(v / 2));
    }
    if v >= 5 && (v - 5).is_multiple_of(2) {
        candidates.push(FlagKind::CubeTimesP5((v - 5) / 2));
    }
    if v >= 6 && v.is_multiple_of(2) {
        candidates.push(FlagKind::CubeTimesP6((v - 6) / 2));
    }
    if v >= 8 && v.is_multiple_of(2) {
        candidates.push(FlagKind::CubeTimesQ23((v - 8) / 2));
    }
    candidates
        .into_iter()
        .find_map(|kind| are_isomorphic(&core, &kind.reference()).map(|iso| (kind, iso)))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BierTag {
    Simplex,
    FlagFamily(FlagKind),
    /// `K` or `K∨` is `ℓ` disjoint points.
    GolodFamily(usize),
    Other,
}

impl fmt::Display for BierTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BierTag::Simplex => write!(f, "Simplex"),
            BierTag::FlagFamily(kind) => write!(f, "FlagFamily({kind})"),
            BierTag::GolodFamily(l) => write!(f, "GolodFamily({l})"),
            BierTag::Other => write!(f, "Other"),
        }
    }
}

/// All tags that apply (a hexagon is both a flag sphere and a truncation polytope nerve),
/// or `[Other]`. For flag spheres the witness maps the ghost-free sphere onto the reference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BierClassification {
    pub tags: Vec<BierTag>,
    pub flag_witness: Option<Isomorphism>,
}

impl BierClassification {
    pub fn has(&self, tag: &BierTag) -> bool {
        self.tags.contains(tag)
    }

    pub fn flag_kind(&self) -> Option<FlagKind> {
        self.tags.iter().find_map(|t| match t {
            BierTag::FlagFamily(kind) => Some(*kind),
            _ => None,
        })
    }

    pub(crate) fn from_sphere(sphere: &Complex) -> Self {
        let mut tags = Vec::new();
        let mut flag_witness = None;
        if sphere.is_flag() {
            if let Some((kind, iso)) = flag_kind(sphere) {
                tags.push(BierTag::FlagFamily(kind));
                flag_witness = Some(iso);
            }
        }
        if tags.is_empty() {
            tags.push(BierTag::Other);
        }
        BierClassification { tags, flag_witness }
    }
}

impl fmt::Display for BierClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.tags.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", names.join(" + "))
    }
}

/// Classifies `Bier(K)` by the definitions: simplex boundary from `K` or `K∨` being `∂Δ_[m]`,
/// Golod family from `K` or `K∨` being disjoint points, and flag kind by isomorphism.
pub fn classify_bier(k: &Complex) -> Result<BierClassification> {
    let dual = alexander_dual(k)?;
    let sphere = bier_sphere(k)?;
    let mut tags = Vec::new();
    if k.is_simplex_boundary() || dual.is_simplex_boundary() {
        tags.push(BierTag::Simplex);
    }
    let mut flag_witness = None;
    if sphere.is_flag() {
        if let Some((kind, iso)) = flag_kind(&sphere) {
            tags.push(BierTag::FlagFamily(kind));
            flag_witness = Some(iso);
        }
    }
    if let Some(l) = k.disjoint_points().or_else(|| dual.disjoint_points()) {
        tags.push(BierTag::GolodFamily(l));
    }
    if tags.is_empty() {
        tags.push(BierTag::Other);
    }
    Ok(BierClassification { tags, flag_witness })
}
