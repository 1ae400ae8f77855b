//! Monomial ideals by minimal generators, with polarization and *-polarization.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::multicomplex::{minimal_vectors, ExponentVector};
use crate::vertex_set::VertexSet;

/// Index of the polarized variable `x_{i,j}` (0-based block `i`) in the flattened order
/// `x_{1,0}, ..., x_{1,c_1}, x_{2,0}, ...`; 1-based, matching the Murai vertex labels.
pub fn flat_index(c: &[usize], i: usize, j: usize) -> usize {
    assert!(j <= c[i], "level {j} exceeds c_{} = {}", i + 1, c[i]);
    c[..i].iter().map(|ck| ck + 1).sum::<usize>() + j + 1
}

/// Inverse of [`flat_index`]: `(i, j)` with 0-based block `i`.
pub fn unflatten(c: &[usize], v: usize) -> (usize, usize) {
    let mut rest = v - 1;
    for (i, &ci) in c.iter().enumerate() {
        if rest <= ci {
            return (i, rest);
        }
        rest -= ci + 1;
    }
    panic!("vertex {v} outside the polarized variable set for c = {c:?}");
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variables {
    /// `x_1, ..., x_m`.
    Plain(usize),
    /// `x_{i,j}` for `0 ≤ j ≤ c_i`, flattened by [`flat_index`].
    Polarized(Vec<usize>),
}

impl Variables {
    pub fn len(&self) -> usize {
        match self {
            Variables::Plain(m) => *m,
            Variables::Polarized(c) => c.iter().map(|ci| ci + 1).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn name(&self, v: usize) -> String {
        match self {
            Variables::Plain(_) => format!("x{v}"),
            Variables::Polarized(c) => {
                let (i, j) = unflatten(c, v);
                format!("x{}{}", i + 1, j)
            }
        }
    }
}

/// A monomial ideal stored by its unique minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    pub variables: Variables,
    pub generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimalizes `generators` under divisibility.
    pub fn new(variables: Variables, generators: Vec<ExponentVector>) -> Result<Self> {
        let n = variables.len();
        if let Some(bad) = generators.iter().find(|g| g.len() != n) {
            return Err(invalid(format!("generator {bad:?} does not have {n} exponents")));
        }
        Ok(MonomialIdeal { variables, generators: minimal_vectors(generators) })
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    /// Supports of the generators, in canonical order; meaningful for squarefree ideals.
    pub fn supports(&self) -> Vec<VertexSet> {
        let mut s: Vec<VertexSet> = self
            .generators
            .iter()
            .map(|g| g.iter().enumerate().filter(|(_, e)| **e > 0).map(|(k, _)| k + 1).collect())
            .collect();
        s.sort_unstable();
        s
    }

    /// `I + J` on the same variables.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.variables != other.variables {
            return Err(invalid("ideals over different variable sets"));
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        MonomialIdeal::new(self.variables.clone(), gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| {
                let mut s = String::new();
                for (k, &e) in g.iter().enumerate() {
                    if e > 0 {
                        s.push_str(&self.variables.name(k + 1));
                        if e > 1 {
                            s.push_str(&format!("^{e}"));
                        }
                    }
                }
                if s.is_empty() {
                    "1".to_string()
                } else {
                    s
                }
            })
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

fn polarize_with(ideal: &MonomialIdeal, c: &[usize], levels: impl Fn(usize, usize) -> Vec<usize>) -> Result<MonomialIdeal> {
    if ideal.variables != Variables::Plain(c.len()) {
        return Err(invalid("polarization expects an ideal in x_1..x_m with m = |c|"));
    }
    let vars = Variables::Polarized(c.to_vec());
    let mut gens = Vec::with_capacity(ideal.generators.len());
    for g in &ideal.generators {
        let mut out = vec![0; vars.len()];
        for (i, &a) in g.iter().enumerate() {
            if a > c[i] + 1 {
                return Err(invalid(format!("exponent {a} of x_{} exceeds c_{} + 1", i + 1, i + 1)));
            }
            for j in levels(i, a) {
                out[flat_index(c, i, j) - 1] = 1;
            }
        }
        gens.push(out);
    }
    MonomialIdeal::new(vars, gens)
}

/// `pol(x^a) = Π_i x_{i,0} x_{i,1} ⋯ x_{i,a_i−1}`.
pub fn polarize(ideal: &MonomialIdeal, c: &[usize]) -> Result<MonomialIdeal> {
    polarize_with(ideal, c, |_, a| (0..a).collect())
}

/// `pol*(x^a) = Π_i x_{i,c_i} x_{i,c_i−1} ⋯ x_{i,c_i−a_i+1}`.
pub fn star_polarize(ideal: &MonomialIdeal, c: &[usize]) -> Result<MonomialIdeal> {
    polarize_with(ideal, c, |i, a| ((c[i] + 1 - a)..=c[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(m: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::new(Variables::Plain(m), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn flattening() {
        let c = [2, 1];
        assert_eq!(flat_index(&c, 0, 0), 1);
        assert_eq!(flat_index(&c, 1, 1), 5);
        assert_eq!(unflatten(&c, 4), (1, 0));
    }

    #[test]
    fn polarizations_of_a_square() {
        let i = plain(1, &[&[2]]);
        assert_eq!(polarize(&i, &[2]).unwrap().to_string(), "(x10x11)");
        assert_eq!(star_polarize(&i, &[2]).unwrap().to_string(), "(x11x12)");
        assert_eq!(polarize(&plain(1, &[&[2]]), &[1]).unwrap().to_string(), "(x10x11)");
        assert!(polarize(&plain(1, &[&[3]]), &[1]).is_err());
    }

    #[test]
    fn minimal_generators() {
        let i = plain(2, &[&[1, 0], &[2, 1], &[0, 2]]);
        assert_eq!(i.generators, vec![vec![0, 2], vec![1, 0]]);
    }
}
