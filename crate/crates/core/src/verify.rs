//! Theorem-verification suites over the exhaustive census.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bier::{alexander_dual, bier_sphere, flag_kind};
use crate::builders::{cycle, points};
use crate::census::{compositions, enumerate_multicomplexes, proper_complexes};
use crate::complex::Complex;
use crate::cubical::{boundary_complex, cone_cubulation, cubical_homology, gw_partition_check, z_complex, z_complex_by_predicate};
use crate::error::{invalid, Error, Result};
use crate::faces::{gamma_vector, is_dehn_sommerville, realize_gamma_as_flag_f};
use crate::homology::homology_sphere_check;
use crate::isomorphism::{are_isomorphic, combinatorial_type};
use crate::json::{ComplexJson, MulticomplexJson};
use crate::linalg::FieldTag;
use crate::multicomplex::Multicomplex;
use crate::murai::{bier_relabeling, murai_face_ideal, murai_sphere};
use crate::tor::{is_min_non_golod_product, is_product_golod};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Suite {
    Bier1dim,
    Bier13types,
    FlagBier,
    FlagMurai,
    Golod,
    DehnSommerville,
    MuraiSphere,
    IdealConsistency,
    Cubical,
    GwDuality,
    Suspension,
    NpGamma,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Bier1dim,
        Suite::Bier13types,
        Suite::FlagBier,
        Suite::FlagMurai,
        Suite::Golod,
        Suite::DehnSommerville,
        Suite::MuraiSphere,
        Suite::IdealConsistency,
        Suite::Cubical,
        Suite::GwDuality,
        Suite::Suspension,
        Suite::NpGamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bier1dim => "bier-1dim",
            Suite::Bier13types => "bier-13types",
            Suite::FlagBier => "flag-bier",
            Suite::FlagMurai => "flag-murai",
            Suite::Golod => "golod",
            Suite::DehnSommerville => "dehn-sommerville",
            Suite::MuraiSphere => "murai-sphere",
            Suite::IdealConsistency => "ideal-consistency",
            Suite::Cubical => "cubical",
            Suite::GwDuality => "gw-duality",
            Suite::Suspension => "suspension",
            Suite::NpGamma => "np-gamma",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<Suite> for String {
    fn from(s: Suite) -> String {
        s.name().to_string()
    }
}

impl TryFrom<String> for Suite {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| invalid(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: Suite,
    /// `"exhaustive"` for every suite currently shipped.
    pub coverage: String,
    pub instances: usize,
    pub passed: usize,
    pub counterexamples: Vec<Value>,
    /// Suite-specific aggregates such as class lists and counts.
    pub summary: BTreeMap<String, Value>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.passed == self.instances
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} passed, {} counterexamples",
            self.suite,
            self.passed,
            self.instances,
            self.counterexamples.len()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Fields for the Golod suite.
    pub fields: Vec<FieldTag>,
    pub seed: u64,
    pub gw_resolution: usize,
    pub gw_random_points: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { fields: vec![FieldTag::RATIONALS, FieldTag::GF2], seed: 0, gw_resolution: 4, gw_random_points: 64 }
    }
}

/// Accumulates instance outcomes in input order.
struct Tally {
    report: VerificationReport,
}

impl Tally {
    fn new(suite: Suite) -> Self {
        Tally {
            report: VerificationReport {
                schema_version: SCHEMA_VERSION,
                suite,
                coverage: "exhaustive".into(),
                instances: 0,
                passed: 0,
                counterexamples: Vec::new(),
                summary: BTreeMap::new(),
            },
        }
    }

    fn record(&mut self, outcome: Option<Value>) {
        self.report.instances += 1;
        match outcome {
            None => self.report.passed += 1,
            Some(payload) => self.report.counterexamples.push(payload),
        }
    }

    fn check(&mut self, ok: bool, payload: impl FnOnce() -> Value) {
        self.record((!ok).then(payload));
    }

    fn extend(&mut self, outcomes: Vec<Option<Value>>) {
        outcomes.into_iter().for_each(|o| self.record(o));
    }

    fn summary(&mut self, key: &str, value: Value) {
        self.report.summary.insert(key.into(), value);
    }
}

fn cj(k: &Complex) -> Value {
    serde_json::to_value(ComplexJson::from(k)).expect("json")
}

fn mj(mc: &Multicomplex) -> Value {
    serde_json::to_value(MulticomplexJson::from(mc)).expect("json")
}

fn failure(input: Value, reason: impl Into<String>) -> Value {
    json!({ "input": input, "reason": reason.into() })
}

fn stripped_bier(k: &Complex) -> Result<Complex> {
    Ok(bier_sphere(k)?.without_ghosts().complex)
}

/// Every proper multicomplex with `lo ≤ |c| ≤ hi`.
pub fn multicomplex_scope(lo: usize, hi: usize) -> Result<Vec<Multicomplex>> {
    let mut out = Vec::new();
    for total in lo..=hi {
        for c in compositions(total) {
            out.extend(enumerate_multicomplexes(&c)?);
        }
    }
    Ok(out)
}

/// Runs one suite with the default configuration.
pub fn verify(suite: Suite) -> Result<VerificationReport> {
    verify_with(suite, &VerifyConfig::default())
}

pub fn verify_with(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    let mut t = Tally::new(suite);
    match suite {
        Suite::Bier1dim => bier_1dim(&mut t)?,
        Suite::Bier13types => bier_13types(&mut t)?,
        Suite::FlagBier => flag_bier(&mut t)?,
        Suite::FlagMurai => flag_murai(&mut t)?,
        Suite::Golod => golod(&mut t, &config.fields)?,
        Suite::DehnSommerville => dehn_sommerville(&mut t)?,
        Suite::MuraiSphere => murai_spheres(&mut t)?,
        Suite::IdealConsistency => ideal_consistency(&mut t)?,
        Suite::Cubical => cubical(&mut t)?,
        Suite::GwDuality => gw_duality(&mut t, config)?,
        Suite::Suspension => suspension(&mut t)?,
        Suite::NpGamma => np_gamma(&mut t)?,
    }
    Ok(t.report)
}

/// `(K facets on [3], polygon size)` for the listed one-dimensional cases.
pub const POLYGON_ASSIGNMENT: [(&[&[usize]], usize); 5] = [
    (&[&[1, 2], &[1, 3], &[2, 3]], 3),
    (&[&[1, 2], &[2, 3]], 4),
    (&[&[1, 2]], 4),
    (&[&[1], &[2, 3]], 5),
    (&[&[1], &[2], &[3]], 6),
];

fn from_slices(m: usize, facets: &[&[usize]]) -> Complex {
    let lists: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
    Complex::from_lists(m, &lists).expect("static complex")
}

fn bier_1dim(t: &mut Tally) -> Result<()> {
    let polygons: Vec<(usize, String)> = (3..=6).map(|n| (n, combinatorial_type(&cycle(n).expect("cycle")))).collect();
    let mut hits: BTreeMap<usize, usize> = BTreeMap::new();
    for k in proper_complexes(3, false)? {
        let ty = combinatorial_type(&bier_sphere(&k)?);
        let class = polygons.iter().find(|(_, p)| *p == ty).map(|(n, _)| *n);
        if let Some(n) = class {
            *hits.entry(n).or_insert(0) += 1;
        }
        t.check(class.is_some(), || failure(cj(&k), format!("Bier sphere of type {ty} is not a polygon")));
    }
    for (facets, n) in POLYGON_ASSIGNMENT {
        let k = from_slices(3, facets);
        let sphere = stripped_bier(&k)?;
        t.check(are_isomorphic(&sphere, &cycle(n)?).is_some(), || {
            failure(cj(&k), format!("expected the boundary of a {n}-gon"))
        });
    }
    t.check(hits.len() == 4, || failure(json!(hits), "not every polygon occurs"));
    t.summary("polygon_counts", json!(hits));
    Ok(())
}

fn bier_13types(t: &mut Tally) -> Result<()> {
    let ks = proper_complexes(4, false)?;
    let results: Vec<(String, Option<Value>)> = ks
        .par_iter()
        .map(|k| {
            let sphere = stripped_bier(k)?;
            let ok = homology_sphere_check(&sphere, 3);
            Ok((combinatorial_type(&sphere), (!ok).then(|| failure(cj(k), "not a homology 2-sphere"))))
        })
        .collect::<Result<_>>()?;
    let mut types: BTreeMap<String, usize> = BTreeMap::new();
    for (ty, outcome) in results {
        *types.entry(ty).or_insert(0) += 1;
        t.record(outcome);
    }
    t.check(types.len() == 13, || failure(json!(types.len()), "expected 13 combinatorial types"));
    t.summary("types", json!(types.len()));
    t.summary("type_list", json!(types.keys().collect::<Vec<_>>()));
    Ok(())
}

fn flag_bier(t: &mut Tally) -> Result<()> {
    let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
    for m in 2..=5 {
        let out: Vec<Option<(Option<String>, Value)>> = proper_complexes(m, true)?
            .par_iter()
            .map(|k| {
                let sphere = stripped_bier(k)?;
                if !sphere.is_flag() {
                    return Ok(None);
                }
                Ok(Some((flag_kind(&sphere).map(|(kind, _)| kind.to_string()), cj(k))))
            })
            .collect::<Result<_>>()?;
        for (kind, input) in out.into_iter().flatten() {
            match kind {
                Some(kind) => {
                    *kinds.entry(kind).or_insert(0) += 1;
                    t.record(None);
                }
                None => t.record(Some(failure(input, "flag Bier sphere outside the four families"))),
            }
        }
    }
    t.summary("kinds", json!(kinds));
    Ok(())
}

fn flag_murai(t: &mut Tally) -> Result<()> {
    let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
    let mut at_three: BTreeSet<String> = BTreeSet::new();
    for mc in multicomplex_scope(2, 4)? {
        let sphere = murai_sphere(&mc)?;
        if !sphere.is_flag() {
            continue;
        }
        if mc.total() == 3 {
            at_three.insert(combinatorial_type(&sphere));
        }
        match flag_kind(&sphere) {
            Some((kind, _)) => {
                *kinds.entry(kind.to_string()).or_insert(0) += 1;
                t.record(None);
            }
            None => t.record(Some(failure(mj(&mc), "flag Murai sphere outside the four families"))),
        }
    }
    let polygons: BTreeSet<String> = (4..=6).map(|n| combinatorial_type(&cycle(n).expect("cycle"))).collect();
    t.check(at_three == polygons, || failure(json!(at_three), "flag classes at |c| = 3 differ from {P4, P5, P6}"));
    t.summary("kinds", json!(kinds));
    t.summary("classes_at_3", json!(at_three.len()));
    Ok(())
}

fn golod(t: &mut Tally, fields: &[FieldTag]) -> Result<()> {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for m in 3..=5 {
        let ks = proper_complexes(m, true)?;
        for &field in fields {
            let out: Vec<(bool, bool, Option<Value>)> = ks
                .par_iter()
                .map(|k| {
                    let dual = alexander_dual(k)?;
                    let sphere = stripped_bier(k)?;
                    let golod = is_product_golod(&sphere, field)?;
                    let mng = is_min_non_golod_product(&sphere, field)?;
                    let want_golod = k.is_simplex_boundary() || dual.is_simplex_boundary();
                    let want_mng = k.disjoint_points().is_some() || dual.disjoint_points().is_some();
                    let bad = (golod != want_golod || mng != want_mng).then(|| {
                        json!({
                            "input": cj(k),
                            "field": field.characteristic(),
                            "golod": golod,
                            "min_non_golod": mng,
                            "reason": "Golod predicates disagree with the classification",
                        })
                    });
                    Ok((golod, mng, bad))
                })
                .collect::<Result<_>>()?;
            for (golod, mng, bad) in out {
                let key = format!("m={m} field={field}");
                *counts.entry(format!("{key} golod")).or_insert(0) += usize::from(golod);
                *counts.entry(format!("{key} min_non_golod")).or_insert(0) += usize::from(mng);
                t.record(bad);
            }
        }
    }
    t.summary("counts", json!(counts));
    Ok(())
}

/// Bier spheres over the iso classes of `m ≤ 5` and Murai spheres with `|c| ≤ 5`, labeled
/// for reports.
fn sphere_scope() -> Result<Vec<(Value, Complex)>> {
    let mut out = Vec::new();
    for m in 2..=5 {
        for k in proper_complexes(m, true)? {
            out.push((json!({ "bier": cj(&k) }), bier_sphere(&k)?));
        }
    }
    for mc in multicomplex_scope(2, 5)? {
        out.push((json!({ "murai": mj(&mc) }), murai_sphere(&mc)?));
    }
    Ok(out)
}

fn dehn_sommerville(t: &mut Tally) -> Result<()> {
    let out: Vec<Option<Value>> = sphere_scope()?
        .par_iter()
        .map(|(input, s)| (!is_dehn_sommerville(s)).then(|| failure(input.clone(), "h-vector is not symmetric")))
        .collect();
    t.extend(out);
    Ok(())
}

/// Largest graph searched for γ-realizations within the suites.
const NP_VERTEX_LIMIT: usize = 12;

fn np_gamma(t: &mut Tally) -> Result<()> {
    let out: Vec<Option<Option<Value>>> = sphere_scope()?
        .par_iter()
        .map(|(input, s)| {
            if !s.is_flag() {
                return None;
            }
            let ok = gamma_vector(s).and_then(|g| realize_gamma_as_flag_f(&g, NP_VERTEX_LIMIT)).is_some();
            Some((!ok).then(|| failure(input.clone(), "no flag complex realizes the γ-vector")))
        })
        .collect();
    t.extend(out.into_iter().flatten().collect());
    Ok(())
}

fn murai_spheres(t: &mut Tally) -> Result<()> {
    let out: Vec<Option<Value>> = multicomplex_scope(1, 5)?
        .par_iter()
        .map(|mc| {
            let sphere = murai_sphere(mc)?;
            let ok = homology_sphere_check(&sphere, mc.total() - 1);
            Ok((!ok).then(|| failure(mj(mc), format!("not a homology {}-sphere", mc.total() as isize - 2))))
        })
        .collect::<Result<_>>()?;
    t.extend(out);
    Ok(())
}

fn ideal_consistency(t: &mut Tally) -> Result<()> {
    let out: Vec<Option<Value>> = multicomplex_scope(1, 4)?
        .par_iter()
        .map(|mc| {
            let ideal = murai_face_ideal(mc)?;
            let nonfaces = murai_sphere(mc)?.minimal_nonfaces();
            let ok = ideal.is_squarefree() && ideal.supports() == nonfaces;
            Ok((!ok).then(|| failure(mj(mc), format!("ideal {ideal} does not match the minimal non-faces"))))
        })
        .collect::<Result<_>>()?;
    t.extend(out);
    for m in 1..=4 {
        for k in proper_complexes(m, false)? {
            let murai = murai_sphere(&Multicomplex::from_complex(&k)?)?;
            let ok = murai.relabel(&bier_relabeling(m), 2 * m)? == bier_sphere(&k)?;
            t.check(ok, || failure(cj(&k), "relabeled Murai sphere differs from the Bier sphere"));
        }
    }
    Ok(())
}

/// Checks of the cubical model for one `K`; returns the first failing property.
pub fn cubical_failure(k: &Complex) -> Result<Option<String>> {
    let m = k.m();
    let facets = bier_sphere(k)?.facets().len();
    let z = z_complex(k)?;
    if z != z_complex_by_predicate(k)? {
        return Ok(Some("triple closure differs from the cell predicate".into()));
    }
    let acyclic = |ranks: Vec<(isize, usize)>| ranks.iter().all(|r| r.1 == 0);
    let sphere_of = |ranks: Vec<(isize, usize)>, d: isize| ranks.iter().all(|&(deg, r)| r == usize::from(deg == d));
    if !acyclic(cubical_homology(&z, FieldTag::RATIONALS)) {
        return Ok(Some("Z(K, K∨) is not acyclic".into()));
    }
    if z.cells_of_dim(m - 1).len() != facets {
        return Ok(Some("top-cell count differs from the Bier facet count".into()));
    }
    let b = boundary_complex(&z)?;
    if !sphere_of(cubical_homology(&b, FieldTag::RATIONALS), m as isize - 2) {
        return Ok(Some(format!("boundary is not a homology {}-sphere", m as isize - 2)));
    }
    let boundary_tops = if m >= 2 { b.cells_of_dim(m - 2).len() } else { 0 };
    if boundary_tops != (m - 1) * facets {
        return Ok(Some("boundary top-cell count differs from (m−1)·#facets".into()));
    }
    if b.euler_characteristic() != 1 + if m.is_multiple_of(2) { 1 } else { -1 } {
        return Ok(Some("boundary Euler characteristic is wrong".into()));
    }
    if !acyclic(cubical_homology(&cone_cubulation(k), FieldTag::RATIONALS)) {
        return Ok(Some("cone cubulation is not acyclic".into()));
    }
    Ok(None)
}

fn cubical(t: &mut Tally) -> Result<()> {
    for m in 1..=4 {
        let out: Vec<Option<Value>> = proper_complexes(m, false)?
            .par_iter()
            .map(|k| Ok(cubical_failure(k)?.map(|reason| failure(cj(k), reason))))
            .collect::<Result<_>>()?;
        t.extend(out);
    }
    let three = points(3, 3)?;
    let z = z_complex(&three)?;
    let tops = z.maximal_cells();
    let b = boundary_complex(&z)?;
    let ok = tops.len() == 6 && tops.iter().all(|c| c.dim() == 2) && b.counts() == vec![12, 12];
    t.check(ok, || failure(cj(&three), "expected six squares with a 12-vertex, 12-edge boundary"));
    Ok(())
}

fn gw_duality(t: &mut Tally, config: &VerifyConfig) -> Result<()> {
    let mut points_checked = 0;
    for m in 1..=4 {
        let ks = proper_complexes(m, false)?;
        let out: Vec<(usize, Option<Value>)> = ks
            .par_iter()
            .enumerate()
            .map(|(i, k)| {
                let seed = config.seed ^ ((m as u64) << 32) ^ i as u64;
                let rep = gw_partition_check(k, config.gw_resolution, config.gw_random_points, seed)?;
                let n = rep.grid_points + rep.random_points;
                let bad = (!rep.is_clean()).then(|| {
                    json!({ "input": cj(k), "violations": rep.violations, "reason": "partition fails" })
                });
                Ok((n, bad))
            })
            .collect::<Result<_>>()?;
        for (n, bad) in out {
            points_checked += n;
            t.record(bad);
        }
    }
    t.summary("points", json!(points_checked));
    Ok(())
}

fn suspension(t: &mut Tally) -> Result<()> {
    for m in 1..=4 {
        let out: Vec<Option<Value>> = proper_complexes(m, false)?
            .par_iter()
            .map(|k| {
                let lhs = bier_sphere(&k.cone())?;
                let rhs = bier_sphere(k)?.suspension();
                Ok(are_isomorphic(&lhs, &rhs).is_none().then(|| failure(cj(k), "Bier(cone K) ≇ Σ Bier(K)")))
            })
            .collect::<Result<_>>()?;
        t.extend(out);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), json!(s.name()));
        }
        assert!("bier".parse::<Suite>().is_err());
    }

    #[test]
    fn one_dimensional_suite() {
        let r = verify(Suite::Bier1dim).unwrap();
        assert!(r.is_clean(), "{:?}", r.counterexamples);
        assert_eq!(r.instances, 18 + 5 + 1);
    }
}
