//! File formats: `{"m", "facets"}` for complexes and `{"c", "max_monomials"}` for
//! multicomplexes, plus the Betti and face-vector reports.

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{invalid, Result};
use crate::faces::{f_vector, gamma_vector, h_vector, is_dehn_sommerville, realize_gamma_as_flag_f};
use crate::multicomplex::{ExponentVector, Multicomplex};
use crate::tor::{BigradedBetti, ProductWitness};

/// 1-based vertices, facets in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&Complex> for ComplexJson {
    fn from(k: &Complex) -> Self {
        ComplexJson { m: k.m(), facets: k.facet_lists() }
    }
}

impl TryFrom<ComplexJson> for Complex {
    type Error = crate::error::Error;
    fn try_from(j: ComplexJson) -> Result<Complex> {
        Complex::from_lists(j.m, &j.facets)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulticomplexJson {
    pub c: Vec<usize>,
    pub max_monomials: Vec<ExponentVector>,
}

impl From<&Multicomplex> for MulticomplexJson {
    fn from(mc: &Multicomplex) -> Self {
        MulticomplexJson { c: mc.c().to_vec(), max_monomials: mc.max_monomials().to_vec() }
    }
}

impl TryFrom<MulticomplexJson> for Multicomplex {
    type Error = crate::error::Error;
    fn try_from(j: MulticomplexJson) -> Result<Multicomplex> {
        Multicomplex::new(j.c, j.max_monomials)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| invalid(format!("malformed JSON: {e}")))
}

pub fn parse_complex(text: &str) -> Result<Complex> {
    parse::<ComplexJson>(text)?.try_into()
}

pub fn parse_multicomplex(text: &str) -> Result<Multicomplex> {
    parse::<MulticomplexJson>(text)?.try_into()
}

pub fn complex_to_json(k: &Complex) -> String {
    serde_json::to_string(&ComplexJson::from(k)).expect("plain data serializes")
}

pub fn multicomplex_to_json(mc: &Multicomplex) -> String {
    serde_json::to_string(&MulticomplexJson::from(mc)).expect("plain data serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub field: u64,
    /// `[i, 2j, rank]`.
    pub betti: Vec<[u64; 3]>,
    pub witnesses: Vec<ProductWitness>,
}

impl BettiJson {
    pub fn new(table: &BigradedBetti, witnesses: Vec<ProductWitness>) -> Self {
        BettiJson { field: table.field.characteristic(), betti: table.entries(), witnesses }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacesJson {
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub gamma: Option<Vec<i64>>,
    pub dehn_sommerville: bool,
    /// Facets of a flag complex whose f-vector is γ, when `K` is flag and one exists.
    pub np_witness: Option<ComplexJson>,
}

/// Largest graph searched for a γ-realization in reports.
pub const NP_SEARCH_VERTICES: usize = 10;

impl FacesJson {
    pub fn of(k: &Complex) -> Self {
        let gamma = gamma_vector(k);
        let np_witness = match &gamma {
            Some(g) if k.is_flag() => {
                realize_gamma_as_flag_f(g, NP_SEARCH_VERTICES).map(|w| ComplexJson::from(&w))
            }
            _ => None,
        };
        FacesJson { f: f_vector(k).f, h: h_vector(k), gamma, dehn_sommerville: is_dehn_sommerville(k), np_witness }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::cycle;

    #[test]
    fn complex_round_trip() {
        let k = parse_complex(r#"{"m": 4, "facets": [[2, 3], [1, 2]]}"#).unwrap();
        assert_eq!(complex_to_json(&k), r#"{"m":4,"facets":[[1,2],[2,3]]}"#);
        assert!(parse_complex(r#"{"m": 2, "facets": [[3]]}"#).is_err());
        assert!(parse_complex("[1, 2]").is_err());
    }

    #[test]
    fn multicomplex_round_trip() {
        let mc = parse_multicomplex(r#"{"c": [2, 1], "max_monomials": [[1, 0], [0, 1]]}"#).unwrap();
        assert_eq!(multicomplex_to_json(&mc), r#"{"c":[2,1],"max_monomials":[[0,1],[1,0]]}"#);
        assert!(parse_multicomplex(r#"{"c": [1], "max_monomials": [[2]]}"#).is_err());
    }

    #[test]
    fn hexagon_faces() {
        let j = FacesJson::of(&cycle(6).unwrap());
        assert_eq!(j.gamma, Some(vec![1, 2]));
        assert!(j.dehn_sommerville);
        assert_eq!(j.np_witness.unwrap().facets, vec![vec![1], vec![2]]);
    }
}
