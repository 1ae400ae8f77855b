//! c-multicomplexes: divisibility-closed sets of monomials `x^a` with `a ≤ c`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{invalid, Error, Result};

/// Exponents `a_1, ..., a_m` of a monomial `x^a`.
pub type ExponentVector = Vec<usize>;

/// `a ≤ b` componentwise, i.e. `x^a` divides `x^b`.
pub fn divides(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Divisibility-maximal vectors, sorted lexicographically.
pub fn maximal_vectors(mut vs: Vec<ExponentVector>) -> Vec<ExponentVector> {
    vs.sort_unstable_by(|a, b| b.iter().sum::<usize>().cmp(&a.iter().sum()).then(a.cmp(b)));
    vs.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for v in vs {
        if !kept.iter().any(|k| divides(&v, k)) {
            kept.push(v);
        }
    }
    kept.sort_unstable();
    kept
}

/// Divisibility-minimal vectors, sorted lexicographically.
pub fn minimal_vectors(mut vs: Vec<ExponentVector>) -> Vec<ExponentVector> {
    vs.sort_unstable_by(|a, b| a.iter().sum::<usize>().cmp(&b.iter().sum()).then(a.cmp(b)));
    vs.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for v in vs {
        if !kept.iter().any(|k| divides(k, &v)) {
            kept.push(v);
        }
    }
    kept.sort_unstable();
    kept
}

/// Every `a` with `0 ≤ a ≤ c`, by total degree and then lexicographically.
pub fn box_points(c: &[usize]) -> Vec<ExponentVector> {
    let mut points: Vec<ExponentVector> = vec![Vec::new()];
    for &ci in c {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=ci).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    points.sort_by(|a, b| a.iter().sum::<usize>().cmp(&b.iter().sum()).then(a.cmp(b)));
    points
}

/// A c-multicomplex given by its maximal monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multicomplex {
    c: Vec<usize>,
    max_monomials: Vec<ExponentVector>,
}

impl Multicomplex {
    /// The multicomplex generated by `gens`; no generators yields `{1}`.
    pub fn new(c: Vec<usize>, gens: Vec<ExponentVector>) -> Result<Self> {
        if c.is_empty() || c.contains(&0) {
            return Err(invalid(format!("cap vector {c:?} must be nonempty and positive")));
        }
        if let Some(bad) = gens.iter().find(|g| g.len() != c.len() || !divides(g, &c)) {
            return Err(invalid(format!("exponent {bad:?} is not bounded by c = {c:?}")));
        }
        let gens = if gens.is_empty() { vec![vec![0; c.len()]] } else { gens };
        Ok(Multicomplex { max_monomials: maximal_vectors(gens), c })
    }

    /// A complex on `[m]` read as a `(1, ..., 1)`-multicomplex.
    pub fn from_complex(k: &Complex) -> Result<Self> {
        let m = k.m();
        let gens = k
            .facets()
            .iter()
            .map(|f| (1..=m).map(|i| usize::from(f.contains(i))).collect())
            .collect();
        Multicomplex::new(vec![1; m], gens)
    }

    pub fn c(&self) -> &[usize] {
        &self.c
    }

    pub fn m(&self) -> usize {
        self.c.len()
    }

    /// `|c| = c_1 + ... + c_m`.
    pub fn total(&self) -> usize {
        self.c.iter().sum()
    }

    pub fn max_monomials(&self) -> &[ExponentVector] {
        &self.max_monomials
    }

    pub fn contains(&self, a: &[usize]) -> bool {
        a.len() == self.c.len() && self.max_monomials.iter().any(|g| divides(a, g))
    }

    /// `M` contains `x^c`.
    pub fn is_full(&self) -> bool {
        self.max_monomials.len() == 1 && self.max_monomials[0] == self.c
    }

    /// All members, by degree and then lexicographically.
    pub fn members(&self) -> Vec<ExponentVector> {
        box_points(&self.c).into_iter().filter(|a| self.contains(a)).collect()
    }

    /// Divisibility-minimal c-monomials outside `M`; empty iff `M` is full.
    pub fn minimal_nonmembers(&self) -> Vec<ExponentVector> {
        let mut out: Vec<ExponentVector> = box_points(&self.c)
            .into_iter()
            .filter(|a| {
                !self.contains(a)
                    && (0..a.len()).filter(|&i| a[i] > 0).all(|i| {
                        let mut b = a.clone();
                        b[i] -= 1;
                        self.contains(&b)
                    })
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// `M∨` with `max(M∨) = {c − g : g ∈ min(M)}`.
    pub fn c_dual(&self) -> Result<Multicomplex> {
        if self.is_full() {
            return Err(Error::UndefinedDual(format!("the full c-box for c = {:?}", self.c)));
        }
        let gens = self
            .minimal_nonmembers()
            .into_iter()
            .map(|g| self.c.iter().zip(&g).map(|(c, x)| c - x).collect())
            .collect();
        Multicomplex::new(self.c.clone(), gens)
    }
}

/// `x^2y`, or `x1^2x3` beyond three variables; `1` for the constant.
pub fn monomial_string(a: &[usize]) -> String {
    let names = ["x", "y", "z"];
    let mut s = String::new();
    for (i, &e) in a.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if a.len() <= 3 {
            s.push_str(names[i]);
        } else {
            s.push_str(&format!("x{}", i + 1));
        }
        if e > 1 {
            s.push_str(&format!("^{e}"));
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

impl fmt::Display for Multicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.max_monomials.iter().map(|a| monomial_string(a)).collect();
        write!(f, "⟨{}⟩ with c = {:?}", gens.join(", "), self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mc(c: &[usize], gens: &[&[usize]]) -> Multicomplex {
        Multicomplex::new(c.to_vec(), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn membership() {
        let m = mc(&[2, 1], &[&[1, 0]]);
        assert!(!m.contains(&[2, 0]));
        assert!(m.contains(&[0, 0]));
        assert!(Multicomplex::new(vec![2, 1], vec![vec![3, 0]]).is_err());
    }

    #[test]
    fn antichain_reduction() {
        let m = mc(&[3], &[&[1], &[3]]);
        assert_eq!(m.max_monomials(), &[vec![3]]);
        assert!(m.is_full());
    }

    #[test]
    fn minimal_nonmembers_examples() {
        assert_eq!(mc(&[2, 1], &[&[1, 0]]).minimal_nonmembers(), vec![vec![0, 1], vec![2, 0]]);
        assert_eq!(mc(&[1, 1, 1], &[&[1, 0, 0]]).minimal_nonmembers(), vec![vec![0, 0, 1], vec![0, 1, 0]]);
        assert_eq!(mc(&[3], &[&[1]]).minimal_nonmembers(), vec![vec![2]]);
        assert!(mc(&[3], &[&[3]]).minimal_nonmembers().is_empty());
    }

    #[test]
    fn duals() {
        let m = mc(&[2, 1], &[&[1, 0]]);
        assert_eq!(m.c_dual().unwrap(), mc(&[2, 1], &[&[2, 0], &[0, 1]]));
        assert_eq!(mc(&[3], &[&[1]]).c_dual().unwrap(), mc(&[3], &[&[1]]));
        assert_eq!(mc(&[2, 1], &[&[0, 1]]).c_dual().unwrap(), mc(&[2, 1], &[&[1, 1]]));
        let xyz = mc(&[1, 1, 1], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(xyz.c_dual().unwrap(), xyz);
        assert!(matches!(mc(&[2], &[&[2]]).c_dual(), Err(Error::UndefinedDual(_))));
    }

    #[test]
    fn printing() {
        assert_eq!(monomial_string(&[2, 1]), "x^2y");
        assert_eq!(monomial_string(&[0, 0]), "1");
        assert_eq!(mc(&[2, 1], &[&[1, 0], &[0, 1]]).to_string(), "⟨y, x⟩ with c = [2, 1]");
    }
}
