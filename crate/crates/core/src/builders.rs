//! Deterministically labeled standard complexes.

use std::str::FromStr;

use crate::complex::Complex;
use crate::error::{invalid, Error, Result};
use crate::vertex_set::VertexSet;

/// `∂Δ_[m]`: all `(m-1)`-subsets of `[m]`.
pub fn boundary_simplex(m: usize) -> Result<Complex> {
    if m == 0 {
        return Err(invalid("boundary of the empty simplex"));
    }
    let full = VertexSet::full(m);
    Complex::new(m, (1..=m).map(|v| full.without(v)).collect())
}

/// The `n`-cycle `1 - 2 - ... - n - 1`.
pub fn cycle(n: usize) -> Result<Complex> {
    if n < 3 {
        return Err(invalid(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let edges = (1..=n)
        .map(|i| VertexSet::from_vertices([i, i % n + 1]))
        .collect();
    Complex::new(n, edges)
}

/// Boundary of the `n`-dimensional cross-polytope, the nerve of the cube `I^n`, as the
/// `n`-fold join of `S⁰`; vertices `2k-1` and `2k` are antipodal.
pub fn cross_polytope(n: usize) -> Result<Complex> {
    let s0 = points(2, 2)?;
    Ok((0..n).fold(Complex::void(0), |acc, _| acc.join(&s0)))
}

/// `ℓ` disjoint points `{1}, ..., {ℓ}` on the ground set `[m]`; `ℓ = 0` gives `{∅}`.
pub fn points(l: usize, m: usize) -> Result<Complex> {
    if l > m {
        return Err(invalid(format!("{l} points do not fit in [{m}]")));
    }
    Complex::new(m, (1..=l).map(VertexSet::singleton).collect())
}

/// Nerve complex of the cube with two adjacent edges cut: `∂` of the octahedron with two
/// edges of the triangle `{1,3,5}` stellarly subdivided (`{1,3}` by 7, then `{1,5}` by 8).
pub fn nerve_q2_3() -> Complex {
    let oct = cross_polytope(3).expect("octahedron");
    oct.stellar_subdivision(VertexSet::from_vertices([1, 3]))
        .and_then(|k| k.stellar_subdivision(VertexSet::from_vertices([1, 5])))
        .expect("both edges are faces")
}

/// A builder request as accepted on the command line, e.g. `cycle:6` or `points:2:4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardComplex {
    BoundarySimplex(usize),
    Simplex(usize),
    Void(usize),
    Cycle(usize),
    CrossPolytope(usize),
    Points(usize, usize),
    NerveQ23,
}

impl StandardComplex {
    pub fn build(self) -> Result<Complex> {
        match self {
            StandardComplex::BoundarySimplex(m) => boundary_simplex(m),
            StandardComplex::Simplex(m) => Ok(Complex::simplex(m)),
            StandardComplex::Void(m) => Ok(Complex::void(m)),
            StandardComplex::Cycle(n) => cycle(n),
            StandardComplex::CrossPolytope(n) => cross_polytope(n),
            StandardComplex::Points(l, m) => points(l, m),
            StandardComplex::NerveQ23 => Ok(nerve_q2_3()),
        }
    }
}

impl FromStr for StandardComplex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |k: usize| -> Result<usize> {
            parts
                .get(k)
                .ok_or_else(|| invalid(format!("missing parameter in '{s}'")))?
                .parse()
                .map_err(|_| invalid(format!("bad parameter in '{s}'")))
        };
        match parts[0] {
            "boundary-simplex" => Ok(StandardComplex::BoundarySimplex(num(1)?)),
            "simplex" => Ok(StandardComplex::Simplex(num(1)?)),
            "void" => Ok(StandardComplex::Void(num(1)?)),
            "cycle" => Ok(StandardComplex::Cycle(num(1)?)),
            "cross-polytope" => Ok(StandardComplex::CrossPolytope(num(1)?)),
            "points" => Ok(StandardComplex::Points(num(1)?, num(2)?)),
            "q23" => Ok(StandardComplex::NerveQ23),
            other => Err(invalid(format!("unknown standard complex '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_polytope_two_is_square() {
        assert_eq!(
            cross_polytope(2).unwrap().facet_lists(),
            vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
        assert!(cross_polytope(0).unwrap().is_void());
    }

    #[test]
    fn hexagon_counts() {
        assert_eq!(cycle(6).unwrap().face_counts(), vec![1, 6, 6]);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn q23_counts() {
        let q = nerve_q2_3();
        assert_eq!(q.face_counts(), vec![1, 8, 18, 12]);
        assert_eq!(q.euler_characteristic(), 2);
        assert!(q.is_flag());
    }

    #[test]
    fn parse_builders() {
        assert_eq!("points:2:4".parse::<StandardComplex>().unwrap(), StandardComplex::Points(2, 4));
        assert_eq!("q23".parse::<StandardComplex>().unwrap().build().unwrap(), nerve_q2_3());
        assert!("cycle".parse::<StandardComplex>().is_err());
        assert!("blob:3".parse::<StandardComplex>().is_err());
    }
}
