//! Exact linear algebra over `ℚ` and prime fields.
//!
//! Rational computations run fraction-free on integer rows (every row is kept primitive by
//! dividing out its content). They first run on checked `i128` and are repeated on
//! [`BigInt`] if any intermediate overflows, so results never depend on machine precision.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Coefficient field: characteristic 0 (the rationals) or a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldTag(u64);

impl FieldTag {
    pub const RATIONALS: FieldTag = FieldTag(0);
    pub const GF2: FieldTag = FieldTag(2);

    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            return Ok(FieldTag(0));
        }
        if characteristic >= 1 << 31 {
            return Err(invalid(format!("characteristic {characteristic} is too large")));
        }
        if characteristic < 2 || (2..).take_while(|d| d * d <= characteristic).any(|d| characteristic.is_multiple_of(d)) {
            return Err(invalid(format!("{characteristic} is not zero or a prime")));
        }
        Ok(FieldTag(characteristic))
    }

    pub fn characteristic(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for FieldTag {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        FieldTag::new(p)
    }
}

impl From<FieldTag> for u64 {
    fn from(f: FieldTag) -> u64 {
        f.0
    }
}

impl FromStr for FieldTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let p: u64 = s.trim().parse().map_err(|_| invalid(format!("bad field '{s}'")))?;
        FieldTag::new(p)
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            write!(f, "Q")
        } else {
            write!(f, "GF({})", self.0)
        }
    }
}

/// Arithmetic used by the elimination routines.
///
/// `eliminate` clears `target[col]` using a row whose first nonzero entry sits at `col`;
/// `normalize` puts a row into the canonical scaling of the ring.
pub trait Ring: Sync {
    type E: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::E;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, x: i64) -> Self::E;
    fn is_zero(&self, x: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn eliminate(&self, target: &mut [Self::E], pivot: &[Self::E], col: usize);
    fn normalize(&self, row: &mut [Self::E]);
    fn to_bigint(&self, x: &Self::E) -> BigInt;
}

/// `GF(p)` with elements in `0..p`.
pub struct ModP {
    p: u64,
}

impl ModP {
    pub fn new(p: u64) -> Self {
        assert!((2..1 << 31).contains(&p), "modulus out of range");
        ModP { p }
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Ring for ModP {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn eliminate(&self, target: &mut [u64], pivot: &[u64], col: usize) {
        let t = target[col];
        if t == 0 {
            return;
        }
        // Pivot rows are normalized to a leading 1.
        for (x, y) in target.iter_mut().zip(pivot).skip(col) {
            *x = (*x + (self.p - t) * y) % self.p;
        }
    }
    fn normalize(&self, row: &mut [u64]) {
        if let Some(&lead) = row.iter().find(|x| **x != 0) {
            let inv = self.inv(lead);
            for x in row.iter_mut() {
                *x = *x * inv % self.p;
            }
        }
    }
    fn to_bigint(&self, x: &u64) -> BigInt {
        BigInt::from(*x)
    }
}

/// Integers in `i128` with overflow detection; results are meaningless once
/// [`CheckedInt::overflowed`] reports true.
#[derive(Default)]
pub struct CheckedInt {
    overflow: AtomicBool,
}

impl CheckedInt {
    pub fn overflowed(&self) -> bool {
        self.overflow.load(Ordering::Relaxed)
    }

    fn flag(&self) -> i128 {
        self.overflow.store(true, Ordering::Relaxed);
        0
    }
}

impl Ring for CheckedInt {
    type E = i128;

    fn zero(&self) -> i128 {
        0
    }
    fn from_i64(&self, x: i64) -> i128 {
        x as i128
    }
    fn is_zero(&self, x: &i128) -> bool {
        *x == 0
    }
    fn add(&self, a: &i128, b: &i128) -> i128 {
        a.checked_add(*b).unwrap_or_else(|| self.flag())
    }
    fn mul(&self, a: &i128, b: &i128) -> i128 {
        a.checked_mul(*b).unwrap_or_else(|| self.flag())
    }
    fn eliminate(&self, target: &mut [i128], pivot: &[i128], col: usize) {
        let t = target[col];
        if t == 0 {
            return;
        }
        let p = pivot[col];
        let g = t.gcd(&p);
        let (a, b) = (p / g, t / g);
        for (x, y) in target.iter_mut().zip(pivot) {
            let lhs = x.checked_mul(a);
            let rhs = y.checked_mul(b);
            *x = match (lhs, rhs) {
                (Some(l), Some(r)) => l.checked_sub(r).unwrap_or_else(|| self.flag()),
                _ => self.flag(),
            };
        }
        self.normalize(target);
    }
    fn normalize(&self, row: &mut [i128]) {
        let g = row.iter().fold(0i128, |g, x| g.gcd(x));
        if g == 0 {
            return;
        }
        let g = if row.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) { -g } else { g };
        for x in row.iter_mut() {
            *x /= g;
        }
    }
    fn to_bigint(&self, x: &i128) -> BigInt {
        BigInt::from(*x)
    }
}

/// Arbitrary-precision integers.
pub struct BigIntRing;

impl Ring for BigIntRing {
    type E = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn from_i64(&self, x: i64) -> BigInt {
        BigInt::from(x)
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn eliminate(&self, target: &mut [BigInt], pivot: &[BigInt], col: usize) {
        if target[col].is_zero() {
            return;
        }
        let g = target[col].gcd(&pivot[col]);
        let a = &pivot[col] / &g;
        let b = &target[col] / &g;
        for (x, y) in target.iter_mut().zip(pivot) {
            *x = &*x * &a - y * &b;
        }
        self.normalize(target);
    }
    fn normalize(&self, row: &mut [BigInt]) {
        let mut g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() || (g.is_one() && !row.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative())) {
            return;
        }
        if row.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            g = -g;
        }
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    fn to_bigint(&self, x: &BigInt) -> BigInt {
        x.clone()
    }
}

/// An incrementally built row-echelon basis.
///
/// Rows are kept in insertion order; each new row is reduced against the earlier ones, so
/// its pivot (first nonzero entry) differs from every earlier pivot and reduction in
/// insertion order leaves earlier pivots cleared.
pub struct EchelonBasis<'r, R: Ring> {
    ring: &'r R,
    rows: Vec<(usize, Vec<R::E>)>,
}

impl<'r, R: Ring> EchelonBasis<'r, R> {
    pub fn new(ring: &'r R) -> Self {
        EchelonBasis { ring, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[R::E])> {
        self.rows.iter().map(|(p, r)| (*p, r.as_slice()))
    }

    pub fn reduce(&self, v: &mut [R::E]) {
        for (col, row) in &self.rows {
            if !self.ring.is_zero(&v[*col]) {
                self.ring.eliminate(v, row, *col);
            }
        }
    }

    /// Whether `v` lies in the span of the basis.
    pub fn contains(&self, v: &[R::E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.ring.is_zero(x))
    }

    /// Adds `v` if it is independent; returns the pivot of the new row.
    pub fn insert(&mut self, mut v: Vec<R::E>) -> Option<usize> {
        self.reduce(&mut v);
        let col = v.iter().position(|x| !self.ring.is_zero(x))?;
        self.ring.normalize(&mut v);
        self.rows.push((col, v));
        Some(col)
    }
}

/// Rank of the span of `rows`.
pub fn rank<R: Ring>(ring: &R, rows: impl IntoIterator<Item = Vec<R::E>>) -> usize {
    let mut basis = EchelonBasis::new(ring);
    for r in rows {
        basis.insert(r);
    }
    basis.rank()
}

/// Rank and a kernel basis of the map sending basis vector `i` to `images[i]` (a vector of
/// length `width`).
///
/// Kernel vectors come out in echelon form with respect to the domain basis order.
pub fn rank_and_kernel<R: Ring>(ring: &R, images: &[Vec<R::E>], width: usize) -> (usize, Vec<Vec<R::E>>) {
    let n = images.len();
    let mut basis = EchelonBasis::new(ring);
    for (i, img) in images.iter().enumerate() {
        debug_assert_eq!(img.len(), width);
        let mut row = Vec::with_capacity(width + n);
        row.extend(img.iter().cloned());
        row.extend((0..n).map(|j| if i == j { ring.from_i64(1) } else { ring.zero() }));
        basis.insert(row);
    }
    let mut image_rank = 0;
    let mut kernel = Vec::new();
    for (col, row) in basis.rows() {
        if col < width {
            image_rank += 1;
        } else {
            kernel.push(row[width..].to_vec());
        }
    }
    (image_rank, kernel)
}

/// A computation that can run over any [`Ring`]; see [`run_exact`].
pub trait RingTask {
    type Output;
    fn run<R: Ring>(&self, ring: &R) -> Self::Output;
}

/// Runs `task` over `GF(p)`, or over the integers for `ℚ` (checked `i128` first, repeated
/// with big integers on overflow).
pub fn run_exact<T: RingTask>(field: FieldTag, task: &T) -> T::Output {
    match field.characteristic() {
        0 => {
            let ring = CheckedInt::default();
            let out = task.run(&ring);
            if ring.overflowed() {
                log::debug!("i128 overflow; repeating with big integers");
                task.run(&BigIntRing)
            } else {
                out
            }
        }
        p => task.run(&ModP::new(p)),
    }
}

/// Converts a big integer into a machine integer when it fits.
pub fn small(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(ring: &impl Ring<E = i128>, data: &[&[i64]]) -> Vec<Vec<i128>> {
        data.iter().map(|r| r.iter().map(|x| ring.from_i64(*x)).collect()).collect()
    }

    #[test]
    fn field_tags() {
        assert!(FieldTag::new(4).is_err());
        assert!(FieldTag::new(1).is_err());
        assert_eq!("3".parse::<FieldTag>().unwrap().characteristic(), 3);
        assert_eq!(FieldTag::RATIONALS.to_string(), "Q");
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2
        let m: &[&[i64]] = &[&[1, 1], &[1, -1]];
        let q = CheckedInt::default();
        assert_eq!(rank(&q, rows(&q, m)), 2);
        let f2 = ModP::new(2);
        assert_eq!(rank(&f2, m.iter().map(|r| r.iter().map(|x| f2.from_i64(*x)).collect())), 1);
    }

    #[test]
    fn kernel_of_projection() {
        let q = CheckedInt::default();
        let images = rows(&q, &[&[1, 0], &[0, 1], &[1, 1]]);
        let (r, ker) = rank_and_kernel(&q, &images, 2);
        assert_eq!(r, 2);
        assert_eq!(ker.len(), 1);
        let k = &ker[0];
        // k0·(1,0) + k1·(0,1) + k2·(1,1) = 0
        assert_eq!(k[0] + k[2], 0);
        assert_eq!(k[1] + k[2], 0);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        struct Det;
        impl RingTask for Det {
            type Output = usize;
            fn run<R: Ring>(&self, ring: &R) -> usize {
                let big = ring.from_i64(i64::MAX);
                let sq = ring.mul(&big, &big);
                let cube = ring.mul(&sq, &big);
                rank(ring, vec![vec![cube.clone(), ring.from_i64(1)], vec![cube, ring.from_i64(1)]])
            }
        }
        assert_eq!(run_exact(FieldTag::RATIONALS, &Det), 1);
    }

    #[test]
    fn echelon_membership() {
        let f3 = ModP::new(3);
        let mut b = EchelonBasis::new(&f3);
        assert!(b.insert(vec![1, 2, 0]).is_some());
        assert!(b.insert(vec![2, 1, 0]).is_none());
        assert!(b.contains(&[2, 1, 0]));
        assert!(!b.contains(&[0, 0, 1]));
    }
}
