//! Cubical cells of the subdivided cube `J^m = [−1, 1]^m`, the complex `Z(K, K∨)` and its
//! boundary, cone cubulations, cellular homology, and the polyhedral-product partition of
//! `J^m` by `K` and `K∨`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bier::alexander_dual;
use crate::complex::Complex;
use crate::error::{invalid, Result};
use crate::linalg::{rank, run_exact, FieldTag, Ring, RingTask};
use crate::vertex_set::VertexSet;

/// Per-coordinate state of a cell: a fixed value in `{−1, 0, 1}` or one of the two halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellState {
    Minus,
    Zero,
    Plus,
    /// `[−1, 0]`
    SpanMinus,
    /// `[0, 1]`
    SpanPlus,
}

impl CellState {
    pub const ALL: [CellState; 5] =
        [CellState::Minus, CellState::Zero, CellState::Plus, CellState::SpanMinus, CellState::SpanPlus];

    pub fn is_span(self) -> bool {
        matches!(self, CellState::SpanMinus | CellState::SpanPlus)
    }

    /// `(lower, upper)` endpoints of a span.
    pub fn endpoints(self) -> Option<(CellState, CellState)> {
        match self {
            CellState::SpanMinus => Some((CellState::Minus, CellState::Zero)),
            CellState::SpanPlus => Some((CellState::Zero, CellState::Plus)),
            _ => None,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CellState::Minus => "-",
            CellState::Zero => "0",
            CellState::Plus => "+",
            CellState::SpanMinus => "[-0]",
            CellState::SpanPlus => "[0+]",
        }
    }
}

impl FromStr for CellState {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        CellState::ALL
            .into_iter()
            .find(|c| c.symbol() == s)
            .ok_or_else(|| invalid(format!("unknown cell state '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CubeCell(pub Vec<CellState>);

impl CubeCell {
    pub fn dim(&self) -> usize {
        self.0.iter().filter(|s| s.is_span()).count()
    }

    /// Coordinates in the positive half: `+` or `[0+]`.
    pub fn positive(&self) -> VertexSet {
        self.coords(|s| matches!(s, CellState::Plus | CellState::SpanPlus))
    }

    /// Coordinates in the negative half: `−` or `[−0]`.
    pub fn negative(&self) -> VertexSet {
        self.coords(|s| matches!(s, CellState::Minus | CellState::SpanMinus))
    }

    fn coords(&self, pred: impl Fn(CellState) -> bool) -> VertexSet {
        self.0.iter().enumerate().filter(|(_, s)| pred(**s)).map(|(k, _)| k + 1).collect()
    }

    /// Codimension-one faces with incidence signs: crossing the `k`-th coordinate contributes
    /// `(−1)^{#spans before k}`, positive at the upper endpoint and negative at the lower.
    pub fn boundary(&self) -> Vec<(CubeCell, i64)> {
        let mut out = Vec::with_capacity(2 * self.dim());
        let mut spans_before = 0;
        for (k, s) in self.0.iter().enumerate() {
            if let Some((lo, hi)) = s.endpoints() {
                let sign = if spans_before % 2 == 0 { 1 } else { -1 };
                let mut upper = self.clone();
                upper.0[k] = hi;
                let mut lower = self.clone();
                lower.0[k] = lo;
                out.push((upper, sign));
                out.push((lower, -sign));
                spans_before += 1;
            }
        }
        out
    }
}

impl fmt::Display for CubeCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(|s| s.symbol()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for CubeCell {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(CubeCell(s.split_whitespace().map(str::parse).collect::<Result<_>>()?))
    }
}

/// A face-closed set of cells in `J^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicalComplex {
    pub m: usize,
    pub cells: BTreeSet<CubeCell>,
}

impl CubicalComplex {
    /// The closure of `generators` under taking faces.
    pub fn closure(m: usize, generators: impl IntoIterator<Item = CubeCell>) -> Self {
        let mut cells = BTreeSet::new();
        let mut stack: Vec<CubeCell> = generators.into_iter().collect();
        while let Some(c) = stack.pop() {
            if cells.contains(&c) {
                continue;
            }
            stack.extend(c.boundary().into_iter().map(|(f, _)| f));
            cells.insert(c);
        }
        CubicalComplex { m, cells }
    }

    pub fn dim(&self) -> isize {
        self.cells.iter().map(|c| c.dim() as isize).max().unwrap_or(-1)
    }

    pub fn cells_of_dim(&self, d: usize) -> Vec<&CubeCell> {
        self.cells.iter().filter(|c| c.dim() == d).collect()
    }

    /// Number of cells by dimension.
    pub fn counts(&self) -> Vec<usize> {
        let top = self.dim();
        (0..=top.max(-1)).map(|d| self.cells_of_dim(d as usize).len()).collect()
    }

    /// Cells that are faces of no other cell.
    pub fn maximal_cells(&self) -> Vec<&CubeCell> {
        let mut covered = BTreeSet::new();
        for c in &self.cells {
            for (f, _) in c.boundary() {
                covered.insert(f);
            }
        }
        self.cells.iter().filter(|c| !covered.contains(*c)).collect()
    }

    pub fn is_pure(&self) -> bool {
        let top = self.dim();
        self.maximal_cells().iter().all(|c| c.dim() as isize == top)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts().iter().enumerate().map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    /// One cell per line, coordinates separated by spaces.
    pub fn dump(&self) -> String {
        let mut sorted: Vec<&CubeCell> = self.cells.iter().collect();
        sorted.sort_by(|a, b| a.dim().cmp(&b.dim()).then(a.cmp(b)));
        sorted.iter().map(|c| format!("{c}\n")).collect()
    }
}

/// Which half-interval plays the role of `A` in the polyhedral product `Z_K(J, A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `A = J_{≤0}`: membership iff `{i : x_i > 0} ∈ K`.
    Nonpositive,
    /// `A = J_{≥0}`: membership iff `{i : x_i < 0} ∈ K`.
    Nonnegative,
    /// `A = J_{>0}`: membership iff `{i : x_i ≤ 0} ∈ K`.
    Positive,
}

/// `x ∈ Z_K(J, A)`: the coordinates outside `A` form a face of `K`.
pub fn point_membership(x: &[Rational64], k: &Complex, side: Side) -> Result<bool> {
    if x.len() != k.m() {
        return Err(invalid(format!("point has {} coordinates, expected {}", x.len(), k.m())));
    }
    let one = Rational64::from_integer(1);
    if x.iter().any(|xi| *xi > one || *xi < -one) {
        return Err(invalid("coordinates must lie in [-1, 1]"));
    }
    let zero = Rational64::from_integer(0);
    let missing: VertexSet = x
        .iter()
        .enumerate()
        .filter(|(_, xi)| match side {
            Side::Nonpositive => **xi > zero,
            Side::Nonnegative => **xi < zero,
            Side::Positive => **xi <= zero,
        })
        .map(|(i, _)| i + 1)
        .collect();
    Ok(k.has_face(missing))
}

/// `Z(K, K∨)` as the closure of the cells `(J_{≥0})^A × {0}^B × (J_{≤0})^C` over all
/// `A ∈ K`, `C ∈ K∨` with `A ⊔ B ⊔ C = [m]`.
pub fn z_complex(k: &Complex) -> Result<CubicalComplex> {
    let dual = alexander_dual(k)?;
    let m = k.m();
    let mut tops = Vec::new();
    for a in k.faces() {
        for c in dual.faces() {
            if !a.is_disjoint(c) {
                continue;
            }
            let states = (1..=m)
                .map(|i| {
                    if a.contains(i) {
                        CellState::SpanPlus
                    } else if c.contains(i) {
                        CellState::SpanMinus
                    } else {
                        CellState::Zero
                    }
                })
                .collect();
            tops.push(CubeCell(states));
        }
    }
    Ok(CubicalComplex::closure(m, tops))
}

/// `Z(K, K∨)` as the cells whose positive part lies in `K` and negative part in `K∨`.
pub fn z_complex_by_predicate(k: &Complex) -> Result<CubicalComplex> {
    let dual = alexander_dual(k)?;
    let m = k.m();
    let mut cells = BTreeSet::new();
    let mut states = vec![CellState::Minus; m];
    fn rec(
        pos: usize,
        states: &mut Vec<CellState>,
        k: &Complex,
        dual: &Complex,
        cells: &mut BTreeSet<CubeCell>,
    ) {
        if pos == states.len() {
            let cell = CubeCell(states.clone());
            if k.has_face(cell.positive()) && dual.has_face(cell.negative()) {
                cells.insert(cell);
            }
            return;
        }
        for s in CellState::ALL {
            states[pos] = s;
            rec(pos + 1, states, k, dual, cells);
        }
    }
    rec(0, &mut states, k, &dual, &mut cells);
    Ok(CubicalComplex { m, cells })
}

/// The `(d−1)`-cells lying in exactly one top cell of a pure `d`-dimensional complex,
/// together with their faces.
pub fn boundary_complex(z: &CubicalComplex) -> Result<CubicalComplex> {
    if !z.is_pure() {
        return Err(invalid("boundary requested for a non-pure cubical complex"));
    }
    let top = z.dim();
    if top < 1 {
        return Ok(CubicalComplex { m: z.m, cells: BTreeSet::new() });
    }
    let mut cofaces: BTreeMap<CubeCell, usize> = BTreeMap::new();
    for c in z.cells_of_dim(top as usize) {
        for (f, _) in c.boundary() {
            *cofaces.entry(f).or_insert(0) += 1;
        }
    }
    let free = cofaces.into_iter().filter(|(_, n)| *n == 1).map(|(f, _)| f);
    Ok(CubicalComplex::closure(z.m, free))
}

/// Cells in `{0, +, [0+]}^m` whose nonzero coordinates form a face of `L`: the cubical cone
/// over `L`.
pub fn cone_cubulation(l: &Complex) -> CubicalComplex {
    let m = l.m();
    let tops = l.facets().iter().map(|f| {
        CubeCell((1..=m).map(|i| if f.contains(i) { CellState::SpanPlus } else { CellState::Zero }).collect())
    });
    CubicalComplex::closure(m, tops)
}

/// Reduced cellular homology ranks `(d, rank)` for `d = −1, ..., dim`.
pub fn cubical_homology(c: &CubicalComplex, field: FieldTag) -> Vec<(isize, usize)> {
    struct Task<'a>(&'a CubicalComplex);
    impl RingTask for Task<'_> {
        type Output = Vec<(isize, usize)>;
        fn run<R: Ring>(&self, ring: &R) -> Self::Output {
            let c = self.0;
            let top = c.dim();
            // levels[d + 1] = cells of dimension d; level 0 is the augmentation target.
            let mut levels: Vec<Vec<&CubeCell>> = vec![Vec::new()];
            for d in 0..=top.max(-1) {
                levels.push(c.cells_of_dim(d as usize));
            }
            let index: Vec<BTreeMap<&CubeCell, usize>> =
                levels.iter().map(|l| l.iter().enumerate().map(|(i, c)| (*c, i)).collect()).collect();
            let sizes: Vec<usize> = levels.iter().enumerate().map(|(l, v)| if l == 0 { 1 } else { v.len() }).collect();
            // ranks[l] = rank of ∂ from level l to level l - 1
            let mut ranks = vec![0usize; levels.len() + 1];
            for l in 1..levels.len() {
                let rows: Vec<Vec<R::E>> = levels[l]
                    .iter()
                    .map(|cell| {
                        let mut row = vec![ring.zero(); sizes[l - 1]];
                        if l == 1 {
                            row[0] = ring.from_i64(1);
                        } else {
                            for (f, s) in cell.boundary() {
                                let j = index[l - 1][&f];
                                row[j] = ring.add(&row[j], &ring.from_i64(s));
                            }
                        }
                        row
                    })
                    .collect();
                ranks[l] = rank(ring, rows);
            }
            (0..levels.len()).map(|l| (l as isize - 1, sizes[l] - ranks[l] - ranks[l + 1])).collect()
        }
    }
    run_exact(field, &Task(c))
}

/// Counts from the Grujić–Welker partition check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwReport {
    pub grid_points: usize,
    pub random_points: usize,
    /// Points in exactly one of `Z_K(J, J_{≤0})` and `Z_{K∨}(J, J_{>0})`.
    pub partitioned: usize,
    pub in_both: usize,
    pub in_neither: usize,
    /// Offending points, as decimal strings.
    pub violations: Vec<Vec<String>>,
}

impl GwReport {
    pub fn is_clean(&self) -> bool {
        self.in_both == 0 && self.in_neither == 0
    }
}

/// Checks that `Z_K(J, J_{≤0})` and `Z_{K∨}(J, J_{>0})` partition `J^m` on the grid
/// `{−1 + 2k/r}^m` and on `random` seeded points with rational coordinates.
pub fn gw_partition_check(k: &Complex, resolution: usize, random: usize, seed: u64) -> Result<GwReport> {
    if resolution == 0 {
        return Err(invalid("grid resolution must be positive"));
    }
    let dual = alexander_dual(k)?;
    let m = k.m();
    let r = resolution as i64;
    let axis: Vec<Rational64> = (0..=r).map(|i| Rational64::new(-r + 2 * i, r)).collect();
    let mut report = GwReport::default();
    let check = |x: &[Rational64], report: &mut GwReport| -> Result<()> {
        let a = point_membership(x, k, Side::Nonpositive)?;
        let b = point_membership(x, &dual, Side::Positive)?;
        match (a, b) {
            (true, false) | (false, true) => report.partitioned += 1,
            (true, true) => report.in_both += 1,
            (false, false) => report.in_neither += 1,
        }
        if a == b && report.violations.len() < 16 {
            report.violations.push(x.iter().map(|v| v.to_string()).collect());
        }
        Ok(())
    };
    let total = (resolution + 1).pow(m as u32);
    for mut idx in 0..total {
        let mut x = Vec::with_capacity(m);
        for _ in 0..m {
            x.push(axis[idx % (resolution + 1)]);
            idx /= resolution + 1;
        }
        check(&x, &mut report)?;
        report.grid_points += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        // A quarter of the coordinates are exactly zero, the boundary case of the partition.
        let x: Vec<Rational64> = (0..m)
            .map(|_| if rng.gen_ratio(1, 4) { Rational64::from_integer(0) } else { Rational64::new(rng.gen_range(-1000..=1000), 1000) })
            .collect();
        check(&x, &mut report)?;
        report.random_points += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bier::bier_sphere;
    use crate::builders::{cycle, points};

    fn q(v: &[i64]) -> Vec<Rational64> {
        v.iter().map(|&x| Rational64::from_integer(x)).collect()
    }

    #[test]
    fn membership_examples() {
        let k = points(3, 3).unwrap();
        assert!(point_membership(&q(&[0, 0, 0]), &k, Side::Nonpositive).unwrap());
        assert!(!point_membership(&q(&[1, 1, 0]), &k, Side::Nonpositive).unwrap());
        assert!(point_membership(&q(&[1, -1, 0]), &k, Side::Nonpositive).unwrap());
        assert!(point_membership(&q(&[2, 0, 0]), &k, Side::Nonpositive).is_err());
    }

    #[test]
    fn six_squares() {
        let k = points(3, 3).unwrap();
        let z = z_complex(&k).unwrap();
        assert_eq!(z, z_complex_by_predicate(&k).unwrap());
        assert_eq!(z.cells_of_dim(2).len(), 6);
        assert_eq!(cubical_homology(&z, FieldTag::RATIONALS).iter().map(|x| x.1).sum::<usize>(), 0);
        let b = boundary_complex(&z).unwrap();
        assert_eq!(b.counts(), vec![12, 12]);
        assert_eq!(cubical_homology(&b, FieldTag::GF2), vec![(-1, 0), (0, 0), (1, 1)]);
    }

    #[test]
    fn path_gives_square() {
        let k = Complex::from_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        let z = z_complex(&k).unwrap();
        assert_eq!(z.cells_of_dim(2).len(), bier_sphere(&k).unwrap().facets().len());
        assert_eq!(boundary_complex(&z).unwrap().counts(), vec![8, 8]);
    }

    #[test]
    fn cones_are_acyclic() {
        let seg = cone_cubulation(&Complex::simplex(1));
        assert_eq!(seg.counts(), vec![2, 1]);
        let c4 = cone_cubulation(&cycle(4).unwrap());
        assert_eq!(c4.cells_of_dim(2).len(), 4);
        assert!(cubical_homology(&c4, FieldTag::RATIONALS).iter().all(|x| x.1 == 0));
    }

    #[test]
    fn empty_complex_homology() {
        let empty = CubicalComplex { m: 2, cells: BTreeSet::new() };
        assert_eq!(cubical_homology(&empty, FieldTag::RATIONALS), vec![(-1, 1)]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let cell: CubeCell = "[0+] [-0] 0 [0+]".parse().unwrap();
        let mut total: BTreeMap<CubeCell, i64> = BTreeMap::new();
        for (f, a) in cell.boundary() {
            for (g, b) in f.boundary() {
                *total.entry(g).or_default() += a * b;
            }
        }
        assert!(total.values().all(|&v| v == 0));
        assert_eq!(cell.boundary().len(), 6);
    }

    #[test]
    fn cell_round_trip() {
        let cell: CubeCell = "[0+] 0 [-0] +".parse().unwrap();
        assert_eq!(cell.dim(), 2);
        assert_eq!(cell.to_string().parse::<CubeCell>().unwrap(), cell);
    }

    #[test]
    fn gw_on_three_points() {
        let rep = gw_partition_check(&points(3, 3).unwrap(), 4, 50, 1).unwrap();
        assert_eq!(rep.grid_points, 125);
        assert!(rep.is_clean());
        assert_eq!(rep.partitioned, 175);
    }
}
