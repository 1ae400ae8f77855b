//! Exhaustive enumeration of small complexes and multicomplexes, and per-class census records.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bier::{bier_sphere, classify_bier};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::faces::{f_vector, gamma_vector, h_vector};
use crate::isomorphism::{canonical_labeling, combinatorial_type};
use crate::linalg::FieldTag;
use crate::multicomplex::{box_points, divides, ExponentVector, Multicomplex};
use crate::tor::{hochster_betti, is_min_non_golod_product, is_product_golod};
use crate::vertex_set::VertexSet;

/// Largest ground set for exhaustive complex enumeration.
pub const MAX_CENSUS_VERTICES: usize = 5;
/// Largest `|c|` for exhaustive multicomplex enumeration.
pub const MAX_CENSUS_CAP: usize = 5;

/// Every nonempty antichain of `items` under `below`, in a fixed depth-first order.
fn antichains<T: Clone>(items: &[T], below: impl Fn(&T, &T) -> bool) -> Vec<Vec<T>> {
    fn rec<T: Clone>(
        items: &[T],
        start: usize,
        chosen: &mut Vec<T>,
        below: &impl Fn(&T, &T) -> bool,
        out: &mut Vec<Vec<T>>,
    ) {
        for i in start..items.len() {
            let x = &items[i];
            if chosen.iter().all(|y| !below(x, y) && !below(y, x)) {
                chosen.push(x.clone());
                out.push(chosen.clone());
                rec(items, i + 1, chosen, below, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(items, 0, &mut Vec::new(), &below, &mut out);
    out
}

/// All simplicial complexes on `[m]`, including `{∅}` and `Δ_[m]`.
///
/// With `up_to_iso`, one canonically labeled representative per class, ordered by canonical
/// form; otherwise every labeled complex, ordered by facet list.
pub fn enumerate_complexes(m: usize, up_to_iso: bool) -> Result<Vec<Complex>> {
    if m > MAX_CENSUS_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "exhaustive enumeration is limited to m ≤ {MAX_CENSUS_VERTICES}, got {m}"
        )));
    }
    let subsets: Vec<VertexSet> = VertexSet::full(m).subsets().collect();
    let mut labeled: Vec<Complex> = antichains(&subsets, |a, b| a.is_subset(*b) && a != b)
        .into_iter()
        .map(|facets| Complex::new(m, facets).expect("subsets of [m]"))
        .collect();
    labeled.sort_by_cached_key(|k| k.facet_lists());
    if !up_to_iso {
        return Ok(labeled);
    }
    let classes: BTreeMap<String, Complex> = labeled
        .par_iter()
        .map(|k| {
            let (canon, _) = canonical_labeling(k);
            (crate::isomorphism::canonical_form(&canon), canon)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(classes.into_values().collect())
}

/// [`enumerate_complexes`] without the full simplex, for which duals are undefined.
pub fn proper_complexes(m: usize, up_to_iso: bool) -> Result<Vec<Complex>> {
    Ok(enumerate_complexes(m, up_to_iso)?.into_iter().filter(|k| !k.is_full_simplex()).collect())
}

/// Every proper c-multicomplex, i.e. every nonempty antichain of the c-box except `{x^c}`.
pub fn enumerate_multicomplexes(c: &[usize]) -> Result<Vec<Multicomplex>> {
    let total: usize = c.iter().sum();
    if total > MAX_CENSUS_CAP {
        return Err(Error::ResourceLimit(format!(
            "multicomplex enumeration is limited to |c| ≤ {MAX_CENSUS_CAP}, got {total}"
        )));
    }
    let points = box_points(c);
    let mut out: Vec<Multicomplex> = antichains(&points, |a: &ExponentVector, b| a != b && divides(a, b))
        .into_iter()
        .map(|gens| Multicomplex::new(c.to_vec(), gens))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|mc| !mc.is_full())
        .collect();
    out.sort_by(|a, b| a.max_monomials().cmp(b.max_monomials()));
    Ok(out)
}

/// Ordered compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out.sort();
    out
}

/// Summary of one isomorphism class of `K` and its Bier sphere (ghosts stripped).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub canonical: String,
    pub field: u64,
    pub classification: String,
    pub sphere_type: String,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub gamma: Option<Vec<i64>>,
    /// SHA-256 of the Betti entries `[[i, 2j, rank], ...]` as JSON.
    pub betti_digest: String,
    pub flag: bool,
    pub product_golod: bool,
    pub min_non_golod: bool,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn census_record(k: &Complex, field: FieldTag) -> Result<CensusRecord> {
    let sphere = bier_sphere(k)?.without_ghosts().complex;
    let betti = hochster_betti(&sphere, field)?;
    Ok(CensusRecord {
        canonical: crate::isomorphism::canonical_form(k),
        field: field.characteristic(),
        classification: classify_bier(k)?.to_string(),
        sphere_type: combinatorial_type(&sphere),
        f: f_vector(&sphere).f,
        h: h_vector(&sphere),
        gamma: gamma_vector(&sphere),
        betti_digest: sha256_hex(serde_json::to_string(&betti.entries()).expect("json").as_bytes()),
        flag: sphere.is_flag(),
        product_golod: is_product_golod(&sphere, field)?,
        min_non_golod: is_min_non_golod_product(&sphere, field)?,
    })
}
