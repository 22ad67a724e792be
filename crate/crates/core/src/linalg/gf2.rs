//! Bit-packed GF(2) path for ambient dimension at most 64.
//!
//! Coordinate `j` lives in bit `j`; the pivot of a row is its lowest set bit,
//! which matches the column order of the generic path.

use super::{PrimeField, Subspace};

pub const MAX_BITS: usize = 64;

#[inline]
fn pivot(v: u64) -> u32 {
    v.trailing_zeros()
}

/// Subspace of GF(2)^n (n <= 64) in RREF, rows sorted by pivot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitSubspace {
    rows: Vec<u64>,
}

impl BitSubspace {
    pub fn zero() -> Self {
        BitSubspace { rows: Vec::new() }
    }

    pub fn span<I: IntoIterator<Item = u64>>(vectors: I) -> Self {
        let mut s = Self::zero();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    #[inline]
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            if v >> pivot(r) & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v` to the span, keeping RREF. Returns whether the dimension grew.
    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let pc = pivot(v);
        for r in self.rows.iter_mut() {
            if *r >> pc & 1 == 1 {
                *r ^= v;
            }
        }
        let at = self.rows.partition_point(|&r| pivot(r) < pc);
        self.rows.insert(at, v);
        true
    }

    pub fn sum(&self, other: &BitSubspace) -> BitSubspace {
        let (big, small) = if self.dim() >= other.dim() { (self, other) } else { (other, self) };
        let mut out = big.clone();
        for &r in &small.rows {
            out.insert(r);
        }
        out
    }

    /// `dim(self + other)` without materialising when the caller only needs
    /// a directness test.
    pub fn is_direct_with(&self, other: &BitSubspace) -> bool {
        let mut acc = self.clone();
        other.rows.iter().all(|&r| acc.insert(r))
    }

    pub fn is_subspace_of(&self, other: &BitSubspace) -> bool {
        self.rows.iter().all(|&r| other.contains(r))
    }

    /// Zassenhaus intersection on 128-bit stacked rows.
    pub fn intersect(&self, other: &BitSubspace) -> BitSubspace {
        let mut stacked: Vec<u128> = Vec::with_capacity(self.dim() + other.dim());
        for &r in &self.rows {
            stacked.push(r as u128 | (r as u128) << 64);
        }
        for &r in &other.rows {
            stacked.push(r as u128);
        }
        let rows = rref_u128(stacked);
        BitSubspace::span(
            rows.into_iter()
                .filter(|&r| r as u64 == 0)
                .map(|r| (r >> 64) as u64),
        )
    }

    /// All elements of the subspace, in Gray-code order starting at zero.
    pub fn elements(&self) -> Vec<u64> {
        let d = self.dim();
        assert!(d < 32, "enumerating a subspace of dimension {d}");
        let mut out = Vec::with_capacity(1 << d);
        let mut cur = 0u64;
        out.push(cur);
        for k in 1u64..(1 << d) {
            cur ^= self.rows[k.trailing_zeros() as usize];
            out.push(cur);
        }
        out
    }

    pub fn to_subspace(&self, ambient: usize) -> Subspace {
        let field = PrimeField::new(2).expect("2 is prime");
        Subspace::span(field, ambient, self.rows.iter().map(|&r| unpack(r, ambient)))
    }

    pub fn from_subspace(s: &Subspace) -> BitSubspace {
        assert_eq!(s.field().p(), 2);
        assert!(s.ambient() <= MAX_BITS);
        BitSubspace::span(s.basis().iter().map(|r| pack(r)))
    }
}

fn rref_u128(mut rows: Vec<u128>) -> Vec<u128> {
    let mut out: Vec<u128> = Vec::new();
    for v in rows.drain(..) {
        let mut v = v;
        for &r in &out {
            if v >> r.trailing_zeros() & 1 == 1 {
                v ^= r;
            }
        }
        if v == 0 {
            continue;
        }
        let pc = v.trailing_zeros();
        for r in out.iter_mut() {
            if *r >> pc & 1 == 1 {
                *r ^= v;
            }
        }
        out.push(v);
    }
    out
}

pub fn pack(v: &[u32]) -> u64 {
    assert!(v.len() <= MAX_BITS);
    v.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &x)| acc | (((x & 1) as u64) << i))
}

pub fn unpack(v: u64, ambient: usize) -> Vec<u32> {
    (0..ambient).map(|i| (v >> i & 1) as u32).collect()
}

/// Kernel of the matrix whose rows are `rows`, over `ncols` columns.
pub fn kernel(rows: &[u64], ncols: usize) -> BitSubspace {
    let reduced = BitSubspace::span(rows.iter().copied());
    let pivots: Vec<u32> = reduced.rows.iter().map(|&r| pivot(r)).collect();
    BitSubspace::span((0..ncols as u32).filter(|c| !pivots.contains(c)).map(|free| {
        let mut v = 1u64 << free;
        for (&r, &pc) in reduced.rows.iter().zip(&pivots) {
            if r >> free & 1 == 1 {
                v |= 1 << pc;
            }
        }
        v
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_keeps_canonical_form() {
        let a = BitSubspace::span([0b011, 0b001]);
        let b = BitSubspace::span([0b010, 0b001]);
        assert_eq!(a, b);
        assert_eq!(a.rows(), &[0b001, 0b010]);
    }

    #[test]
    fn intersect_and_kernel() {
        let p = BitSubspace::span([0b001, 0b010]);
        let q = BitSubspace::span([0b010, 0b100]);
        assert_eq!(p.intersect(&q), BitSubspace::span([0b010]));
        let k = kernel(&[0b011], 3);
        assert_eq!(k, BitSubspace::span([0b011, 0b100]));
    }

    #[test]
    fn elements_enumerates_span() {
        let s = BitSubspace::span([0b001, 0b110]);
        let mut e = s.elements();
        e.sort();
        assert_eq!(e, vec![0, 0b001, 0b110, 0b111]);
    }
}
