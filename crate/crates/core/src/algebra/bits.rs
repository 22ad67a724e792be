//! Bit-packed view of a GF(2) algebra of dimension at most 64, used by the
//! exhaustive searches.

use super::{Algebra, Element};
use crate::linalg::gf2::{self, BitSubspace};
use crate::linalg::Subspace;

#[derive(Debug, Clone)]
pub struct Gf2View {
    dim: usize,
    /// `prod[i * dim + j]` = `b_i * b_j`.
    prod: Vec<u64>,
    generators: Vec<u64>,
}

impl Gf2View {
    pub fn new(alg: &Algebra) -> Option<Self> {
        if alg.field().p() != 2 || alg.dim() > gf2::MAX_BITS {
            return None;
        }
        let dim = alg.dim();
        let mut prod = vec![0u64; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                prod[i * dim + j] = alg
                    .basis_product(i, j)
                    .into_iter()
                    .fold(0u64, |acc, (k, _)| acc ^ (1 << k));
            }
        }
        let generators = alg.generators().iter().map(|g| gf2::pack(g.coeffs())).collect();
        Some(Gf2View { dim, prod, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let mut out = 0;
        let mut ra = a;
        while ra != 0 {
            let i = ra.trailing_zeros() as usize;
            ra &= ra - 1;
            let mut rb = b;
            while rb != 0 {
                let j = rb.trailing_zeros() as usize;
                rb &= rb - 1;
                out ^= self.prod[i * self.dim + j];
            }
        }
        out
    }

    /// All bits except the unit coordinate.
    pub fn maximal_mask(&self) -> u64 {
        let all = if self.dim == 64 { u64::MAX } else { (1u64 << self.dim) - 1 };
        all & !1
    }

    pub fn maximal_ideal(&self) -> BitSubspace {
        BitSubspace::span((1..self.dim).map(|i| 1u64 << i))
    }

    /// `R z`, the span of `b_i * z`.
    pub fn cyclic(&self, z: u64) -> BitSubspace {
        let mut s = BitSubspace::zero();
        if z == 0 {
            return s;
        }
        for i in 0..self.dim {
            s.insert(self.mul(1 << i, z));
        }
        s
    }

    /// `{v in M : g v = 0 for every generator g}`.
    pub fn socle(&self) -> BitSubspace {
        let d = self.dim;
        // Row k of the stacked system: coordinate k of g * v, over all g.
        let mut rows = Vec::new();
        for &g in &self.generators {
            let images: Vec<u64> = (0..d).map(|j| self.mul(g, 1 << j)).collect();
            for k in 0..d {
                rows.push(images.iter().enumerate().fold(0u64, |acc, (j, &im)| {
                    acc | ((im >> k & 1) << j)
                }));
            }
        }
        // Restrict to M by also requiring coordinate 0 to vanish.
        rows.push(1);
        gf2::kernel(&rows, d)
    }

    /// `M * S` for an ideal `S`.
    pub fn maximal_times(&self, s: &BitSubspace) -> BitSubspace {
        let mut out = BitSubspace::zero();
        for &g in &self.generators {
            for &r in s.rows() {
                out.insert(self.mul(g, r));
            }
        }
        out
    }

    pub fn pack(&self, e: &Element) -> u64 {
        gf2::pack(e.coeffs())
    }

    pub fn unpack(&self, v: u64) -> Element {
        Element::from_coeffs(gf2::unpack(v, self.dim))
    }

    pub fn to_subspace(&self, s: &BitSubspace) -> Subspace {
        s.to_subspace(self.dim)
    }
}
