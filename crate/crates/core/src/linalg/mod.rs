//! Exact linear algebra over a prime field GF(p).
//!
//! Vectors are plain `Vec<u32>` of residues in `[0, p)`. Every [`Subspace`]
//! is kept in reduced row echelon form, so two subspaces are equal exactly
//! when their stored bases are equal.

pub mod gf2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arithmetic context for GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Largest accepted modulus; keeps products inside `u64`.
    pub const MAX_P: u64 = (1 << 31) - 1;

    pub fn new(p: u64) -> Result<Self> {
        if p > Self::MAX_P || !is_prime(p) {
            return Err(Error::FieldNotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse by Fermat. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// `dst += c * src`
    pub fn axpy(&self, dst: &mut [u32], c: u32, src: &[u32]) {
        if c == 0 {
            return;
        }
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = self.add(*d, self.mul(c, s));
            }
        }
    }

    pub fn scale(&self, v: &mut [u32], c: u32) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }
}

/// Row-reduces `rows` in place to reduced row echelon form, dropping zero
/// rows. Returns the pivot column of each remaining row.
pub(crate) fn rref_rows(field: &PrimeField, rows: &mut Vec<Vec<u32>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(rows[r][col]);
        field.scale(&mut rows[r], inv);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = field.neg(row[col]);
                field.axpy(row, c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Dense matrix over GF(p), stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Vec<u32>>,
}

impl Mat {
    pub fn new(field: PrimeField, ncols: usize, rows: Vec<Vec<u32>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x % field.p()).collect())
            .collect();
        Mat { field, ncols, rows }
    }

    pub fn zeros(field: PrimeField, nrows: usize, ncols: usize) -> Self {
        Mat { field, ncols, rows: vec![vec![0; ncols]; nrows] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.rows[i][i] = 1;
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| self.field.add(acc, self.field.mul(a, b)))
            })
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.ncols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                t.rows[j][i] = x;
            }
        }
        t
    }

    /// Reduced row echelon form with zero rows removed.
    pub fn rref(&self) -> Mat {
        let mut rows = self.rows.clone();
        rref_rows(&self.field, &mut rows, self.ncols);
        Mat { field: self.field, ncols: self.ncols, rows }
    }

    pub fn rank(&self) -> usize {
        self.rref().nrows()
    }

    /// `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let mut rows = self.rows.clone();
        let pivots = rref_rows(&self.field, &mut rows, self.ncols);
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let basis: Vec<Vec<u32>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![0; self.ncols];
                v[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = self.field.neg(row[f]);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.ncols, basis)
    }

    /// Some `v` with `self * v = b`, free coordinates set to zero.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.nrows());
        let n = self.ncols;
        let mut aug: Vec<Vec<u32>> = self
            .rows
            .iter()
            .zip(b)
            .map(|(row, &bi)| {
                let mut r = row.clone();
                r.push(bi % self.field.p());
                r
            })
            .collect();
        let pivots = rref_rows(&self.field, &mut aug, n + 1);
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut v = vec![0; n];
        for (row, &pc) in aug.iter().zip(&pivots) {
            v[pc] = row[n];
        }
        Some(v)
    }
}

/// A subspace of GF(p)^n in canonical (RREF) form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Mat::identity(field, ambient).row_space()
    }

    pub fn span<I>(field: PrimeField, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut rows: Vec<Vec<u32>> = vectors
            .into_iter()
            .inspect(|v| {
                assert_eq!(v.len(), ambient, "vector length does not match ambient");
            })
            .collect();
        let pivots = rref_rows(&field, &mut rows, ambient);
        Subspace { field, ambient, rows, pivots }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn as_mat(&self) -> Mat {
        Mat { field: self.field, ncols: self.ambient, rows: self.rows.clone() }
    }

    /// Canonical representative of `v` modulo this subspace: all pivot
    /// coordinates cleared.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut out = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if out[pc] != 0 {
                let c = self.field.neg(out[pc]);
                self.field.axpy(&mut out, c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::span(
            self.field,
            self.ambient,
            self.rows.iter().chain(&other.rows).cloned(),
        ))
    }

    /// Intersection via the Zassenhaus stacking `[a | a ; b | 0]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut stacked: Vec<Vec<u32>> = Vec::with_capacity(self.dim() + other.dim());
        for r in &self.rows {
            let mut row = r.clone();
            row.extend_from_slice(r);
            stacked.push(row);
        }
        for r in &other.rows {
            let mut row = r.clone();
            row.extend(std::iter::repeat_n(0, n));
            stacked.push(row);
        }
        let pivots = rref_rows(&self.field, &mut stacked, 2 * n);
        let meet = stacked
            .into_iter()
            .zip(pivots)
            .filter(|(_, pc)| *pc >= n)
            .map(|(row, _)| row[n..].to_vec());
        Ok(Subspace::span(self.field, n, meet))
    }

    /// A linear complement of `self` inside `outer`, built from `outer`'s
    /// canonical basis rows in order.
    pub fn complement_in(&self, outer: &Subspace) -> Result<Vec<Vec<u32>>> {
        self.check_ambient(outer)?;
        let mut acc = self.clone();
        let mut out = Vec::new();
        for r in &outer.rows {
            if !acc.contains(r) {
                acc = acc.sum(&Subspace::span(self.field, self.ambient, [r.clone()]))?;
                out.push(r.clone());
            }
        }
        Ok(out)
    }
}

impl Mat {
    pub fn row_space(&self) -> Subspace {
        Subspace::span(self.field, self.ncols, self.rows.clone())
    }
}

/// Some element of `(point + w) ∩ u`, or `None` when the coset misses `u`.
pub fn affine_meet(point: &[u32], w: &Subspace, u: &Subspace) -> Option<Vec<u32>> {
    let field = u.field();
    assert_eq!(point.len(), u.ambient());
    assert_eq!(w.ambient(), u.ambient());
    // Solve reduce_u(point) + sum_j c_j reduce_u(w_j) = 0 for c.
    let target: Vec<u32> = u.reduce(point).iter().map(|&x| field.neg(x)).collect();
    let cols: Vec<Vec<u32>> = w.basis().iter().map(|r| u.reduce(r)).collect();
    let n = u.ambient();
    let system = Mat::new(
        field,
        cols.len(),
        (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect(),
    );
    let coeffs = system.solve(&target)?;
    let mut out = point.to_vec();
    for (c, row) in coeffs.iter().zip(w.basis()) {
        field.axpy(&mut out, *c, row);
    }
    Some(out)
}
