//! Finite-dimensional commutative algebras given by a basis and a
//! multiplication table.
//!
//! Algebras built from a [`RingPresentation`] use the standard monomials as
//! basis (ordered by degree, then lexicographically with the first variable
//! largest), so the table maps each pair of basis indices to a single basis
//! index or to zero. Quotients carry general structure constants instead.

pub mod bits;
mod expr;
pub mod presentation;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{Mat, PrimeField};

pub use presentation::{Monomial, RingPresentation};

/// Default guard on the number of standard monomials.
pub const DEFAULT_MAX_DIM: usize = 4096;

const ZERO_PRODUCT: u32 = u32::MAX;

/// Coefficient vector over an algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coeffs: Vec<u32>,
}

impl Element {
    pub fn from_coeffs(coeffs: Vec<u32>) -> Self {
        Element { coeffs }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone)]
enum MulTable {
    /// `dim * dim` entries; basis index of the product or `ZERO_PRODUCT`.
    Monomial(Vec<u32>),
    /// `dim * dim` sparse products.
    Structure(Vec<Vec<(u32, u32)>>),
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub max_dim: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_dim: DEFAULT_MAX_DIM }
    }
}

#[derive(Debug, Clone)]
pub struct Algebra {
    field: PrimeField,
    vars: Vec<String>,
    presentation: Option<RingPresentation>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    table: MulTable,
    generators: Vec<Element>,
    truncated: bool,
}

impl Algebra {
    pub fn build(pres: &RingPresentation) -> Result<Self> {
        Self::build_with(pres, BuildOptions::default())
    }

    pub fn build_with(pres: &RingPresentation, opts: BuildOptions) -> Result<Self> {
        let n = pres.vars().len();
        let bounds: Vec<u32> = (0..n)
            .map(|i| {
                let pure = pres
                    .relations()
                    .iter()
                    .filter(|r| r.pure_power_of() == Some(i))
                    .map(|r| r.0[i])
                    .min();
                match (pure, pres.truncate()) {
                    (Some(a), Some(t)) => a.min(t),
                    (Some(a), None) => a,
                    (None, Some(t)) => t,
                    (None, None) => unreachable!("validated presentation"),
                }
            })
            .collect();

        let mut basis = Vec::new();
        let mut cur = Monomial::one(n);
        enumerate_standard(pres, &bounds, 0, &mut cur, &mut basis, opts.max_dim)?;
        basis.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0)));

        let index: HashMap<Monomial, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let dim = basis.len();
        let mut table = vec![ZERO_PRODUCT; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                if let Some(&k) = index.get(&basis[i].mul(&basis[j])) {
                    table[i * dim + j] = k as u32;
                    table[j * dim + i] = k as u32;
                }
            }
        }
        let generators = (0..n)
            .map(|i| {
                let mut c = vec![0; dim];
                if let Some(&k) = index.get(&Monomial::var(n, i, 1)) {
                    c[k] = 1;
                }
                Element::from_coeffs(c)
            })
            .collect();
        Ok(Algebra {
            field: pres.field(),
            vars: pres.vars().to_vec(),
            presentation: Some(pres.clone()),
            basis,
            index,
            table: MulTable::Monomial(table),
            generators,
            truncated: pres.truncate().is_some(),
        })
    }

    /// Algebra given by explicit structure constants. Index 0 must be the unit.
    pub(crate) fn from_structure(
        field: PrimeField,
        vars: Vec<String>,
        basis: Vec<Monomial>,
        products: Vec<Vec<(u32, u32)>>,
        generators: Vec<Element>,
        truncated: bool,
    ) -> Self {
        let dim = basis.len();
        assert_eq!(products.len(), dim * dim);
        Algebra {
            field,
            vars,
            presentation: None,
            basis,
            index: HashMap::new(),
            table: MulTable::Structure(products),
            generators,
            truncated,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// The presentation this algebra was built from; `None` for quotients.
    pub fn presentation(&self) -> Option<&RingPresentation> {
        self.presentation.as_ref()
    }

    /// Basis labels. For quotients these are the coset representatives.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Images of the presentation variables; they generate the maximal ideal.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn zero(&self) -> Element {
        Element::from_coeffs(vec![0; self.dim()])
    }

    pub fn one(&self) -> Element {
        self.basis_element(0)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut c = vec![0; self.dim()];
        c[i] = 1;
        Element::from_coeffs(c)
    }

    fn check(&self, a: &Element) -> Result<()> {
        if a.len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element::from_coeffs(
            a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| self.field.add(x, y)).collect(),
        )
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        Element::from_coeffs(
            a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| self.field.sub(x, y)).collect(),
        )
    }

    pub fn scale(&self, a: &Element, c: u32) -> Element {
        Element::from_coeffs(a.coeffs.iter().map(|&x| self.field.mul(x, c)).collect())
    }

    /// Accumulates `c * (b_i * b_j)` into `out`.
    #[inline]
    fn add_basis_product(&self, out: &mut [u32], i: usize, j: usize, c: u32) {
        let dim = self.dim();
        match &self.table {
            MulTable::Monomial(t) => {
                let k = t[i * dim + j];
                if k != ZERO_PRODUCT {
                    out[k as usize] = self.field.add(out[k as usize], c);
                }
            }
            MulTable::Structure(s) => {
                for &(k, v) in &s[i * dim + j] {
                    let k = k as usize;
                    out[k] = self.field.add(out[k], self.field.mul(c, v));
                }
            }
        }
    }

    pub(crate) fn mul_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.dim()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    self.add_basis_product(&mut out, i, j, self.field.mul(ai, bj));
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(Element::from_coeffs(self.mul_raw(&a.coeffs, &b.coeffs)))
    }

    pub fn pow(&self, a: &Element, e: u32) -> Element {
        let mut acc = self.one();
        for _ in 0..e {
            acc = Element::from_coeffs(self.mul_raw(&acc.coeffs, &a.coeffs));
        }
        acc
    }

    /// Units of a local algebra are exactly the elements with nonzero
    /// constant term.
    pub fn is_unit(&self, a: &Element) -> bool {
        a.coeffs.first().is_some_and(|&c| c != 0)
    }

    pub fn in_maximal_ideal(&self, a: &Element) -> bool {
        !self.is_unit(a)
    }

    /// Matrix of `v -> v * z`: column `j` holds `b_j * z`.
    pub fn mult_matrix(&self, z: &Element) -> Mat {
        let dim = self.dim();
        let mut rows = vec![vec![0u32; dim]; dim];
        for j in 0..dim {
            let mut col = vec![0; dim];
            for (k, &zk) in z.coeffs.iter().enumerate() {
                if zk != 0 {
                    self.add_basis_product(&mut col, j, k, zk);
                }
            }
            for (row, v) in rows.iter_mut().zip(col) {
                row[j] = v;
            }
        }
        Mat::new(self.field, dim, rows)
    }

    /// `b_j * z` for every basis index `j`.
    pub fn basis_multiples(&self, z: &Element) -> Vec<Vec<u32>> {
        (0..self.dim())
            .map(|j| {
                let mut col = vec![0; self.dim()];
                for (k, &zk) in z.coeffs.iter().enumerate() {
                    if zk != 0 {
                        self.add_basis_product(&mut col, j, k, zk);
                    }
                }
                col
            })
            .collect()
    }

    /// Sparse structure constants of `b_i * b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<(usize, u32)> {
        let mut out = vec![0; self.dim()];
        self.add_basis_product(&mut out, i, j, 1);
        out.into_iter().enumerate().filter(|(_, c)| *c != 0).collect()
    }

    /// Writes `z = a * x^n` with `a` a unit and `n >= 1`, where `n` is the
    /// largest exponent with `z` in the ideal generated by `x^n`. The unit is
    /// the canonical representative of its coset modulo `Ann(x^n)`.
    pub fn power_form(&self, x: &Element, z: &Element) -> Result<(Element, u32)> {
        self.check(x)?;
        self.check(z)?;
        if z.is_zero() {
            return Err(Error::NotExpressible);
        }
        let mut best: Option<(Vec<u32>, Mat)> = None;
        let mut n = 0u32;
        let mut xn = self.one();
        loop {
            n += 1;
            xn = Element::from_coeffs(self.mul_raw(&xn.coeffs, &x.coeffs));
            if xn.is_zero() || n as usize > self.dim() + 1 {
                break;
            }
            let m = self.mult_matrix(&xn);
            match m.solve(&z.coeffs) {
                Some(r) => best = Some((r, m)),
                None => break,
            }
        }
        let Some((r, m)) = best else {
            return Err(Error::NotExpressible);
        };
        let n = n - 1;
        let unit = Element::from_coeffs(m.kernel().reduce(&r));
        if !self.is_unit(&unit) {
            return Err(Error::NotExpressible);
        }
        Ok((unit, n))
    }

    /// Polynomial rendering, e.g. `x^2 + 2*x*y`.
    pub fn format_element(&self, a: &Element) -> String {
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let m = self.basis[i].display(&self.vars).to_string();
                match (c, m.as_str()) {
                    (1, _) => m,
                    (_, "1") => c.to_string(),
                    _ => format!("{c}*{m}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Parses a polynomial over the ring variables; only algebras built from
    /// a presentation support this.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        expr::parse_polynomial(self, text)
    }

    /// Parses a comma-separated generator list. Blank input gives no
    /// generators.
    pub fn parse_elements(&self, text: &str) -> Result<Vec<Element>> {
        if text.trim().is_empty() {
            return Ok(Vec::new());
        }
        text.split(',').map(|t| self.parse_element(t)).collect()
    }
}

fn enumerate_standard(
    pres: &RingPresentation,
    bounds: &[u32],
    var: usize,
    cur: &mut Monomial,
    out: &mut Vec<Monomial>,
    max_dim: usize,
) -> Result<()> {
    if var == bounds.len() {
        if out.len() >= max_dim {
            return Err(Error::DimensionLimit { limit: max_dim });
        }
        out.push(cur.clone());
        return Ok(());
    }
    for e in 0..bounds[var] {
        cur.0[var] = e;
        // Standard monomials form an order ideal: once cur is non-standard,
        // every larger exponent of this variable is too.
        if !pres.is_standard(cur) {
            break;
        }
        enumerate_standard(pres, bounds, var + 1, cur, out, max_dim)?;
    }
    cur.0[var] = 0;
    Ok(())
}
