//! Ideals as canonical subspaces closed under multiplication by the
//! generators of the maximal ideal.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    space: Subspace,
}

impl Ideal {
    pub(crate) fn from_space_unchecked(space: Subspace) -> Self {
        Ideal { space }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn basis(&self) -> impl Iterator<Item = Element> + '_ {
        self.space.basis().iter().cloned().map(Element::from_coeffs)
    }

    pub fn contains(&self, z: &Element) -> bool {
        z.len() == self.space.ambient() && self.space.contains(z.coeffs())
    }

    pub fn is_subideal_of(&self, other: &Ideal) -> bool {
        self.space.is_subspace_of(&other.space)
    }
}

impl Algebra {
    pub(crate) fn check_ideal(&self, i: &Ideal) -> Result<()> {
        if i.space.ambient() != self.dim() || i.space.field() != self.field() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Whether `space` is closed under multiplication by every generator.
    pub fn is_closed(&self, space: &Subspace) -> bool {
        self.generators().iter().all(|g| {
            space
                .basis()
                .iter()
                .all(|v| space.contains(&self.mul_raw(g.coeffs(), v)))
        })
    }

    /// Wraps a subspace as an ideal after checking closure.
    pub fn ideal_from_space(&self, space: Subspace) -> Result<Ideal> {
        if space.ambient() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        if !self.is_closed(&space) {
            return Err(Error::HypothesisNotSatisfied("subspace is not an ideal".into()));
        }
        Ok(Ideal { space })
    }

    fn wrap(&self, space: Subspace) -> Ideal {
        debug_assert!(self.is_closed(&space), "ideal closure violated");
        Ideal { space }
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal { space: Subspace::zero(self.field(), self.dim()) }
    }

    pub fn unit_ideal(&self) -> Ideal {
        Ideal { space: Subspace::full(self.field(), self.dim()) }
    }

    /// Span of every basis monomial except the unit.
    pub fn maximal_ideal(&self) -> Ideal {
        let vecs = (1..self.dim()).map(|i| self.basis_element(i).into_coeffs());
        self.wrap(Subspace::span(self.field(), self.dim(), vecs))
    }

    pub fn ideal_from_generators(&self, gens: &[Element]) -> Result<Ideal> {
        let mut vecs = Vec::new();
        for g in gens {
            if g.len() != self.dim() {
                return Err(Error::AlgebraMismatch);
            }
            vecs.extend(self.basis_multiples(g));
        }
        Ok(self.wrap(Subspace::span(self.field(), self.dim(), vecs)))
    }

    /// `R z`.
    pub fn cyclic(&self, z: &Element) -> Result<Ideal> {
        self.ideal_from_generators(std::slice::from_ref(z))
    }

    pub fn ideal_sum(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        self.check_ideal(a)?;
        self.check_ideal(b)?;
        Ok(self.wrap(a.space.sum(&b.space)?))
    }

    pub fn ideal_intersect(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        self.check_ideal(a)?;
        self.check_ideal(b)?;
        Ok(self.wrap(a.space.intersect(&b.space)?))
    }

    /// Ideal generated by the pairwise products of basis rows.
    pub fn ideal_product(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        self.check_ideal(a)?;
        self.check_ideal(b)?;
        let mut prods = Vec::new();
        for u in a.space.basis() {
            for v in b.space.basis() {
                prods.push(Element::from_coeffs(self.mul_raw(u, v)));
            }
        }
        self.ideal_from_generators(&prods)
    }

    /// `M * I`, spanned by generator multiples of a basis of `I`.
    pub fn maximal_times(&self, i: &Ideal) -> Result<Ideal> {
        self.check_ideal(i)?;
        let vecs = self
            .generators()
            .iter()
            .flat_map(|g| i.space.basis().iter().map(move |v| self.mul_raw(g.coeffs(), v)));
        Ok(self.wrap(Subspace::span(self.field(), self.dim(), vecs)))
    }

    /// `Ann(z)`: the kernel of multiplication by `z`.
    pub fn annihilator(&self, z: &Element) -> Result<Ideal> {
        if z.len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.wrap(self.mult_matrix(z).kernel()))
    }

    /// `Ann(I)`: the intersection of the annihilators of a basis of `I`.
    pub fn annihilator_of_ideal(&self, i: &Ideal) -> Result<Ideal> {
        self.check_ideal(i)?;
        let dim = self.dim();
        let mut rows = Vec::new();
        for v in i.space.basis() {
            rows.extend(self.mult_matrix(&Element::from_coeffs(v.clone())).rows().iter().cloned());
        }
        if rows.is_empty() {
            return Ok(self.unit_ideal());
        }
        Ok(self.wrap(Mat::new(self.field(), dim, rows).kernel()))
    }

    /// `Ann(M) ∩ M`.
    pub fn socle(&self) -> Ideal {
        let m = self.maximal_ideal();
        let ann = self.annihilator_of_ideal(&m).expect("same algebra");
        self.ideal_intersect(&ann, &m).expect("same algebra")
    }

    /// A nonzero ideal killed by `M` of dimension one.
    pub fn is_simple(&self, i: &Ideal) -> bool {
        i.dim() == 1 && self.maximal_times(i).is_ok_and(|mi| mi.is_zero())
    }

    /// Minimal number of generators, `dim(I) - dim(M I)`.
    pub fn min_generators(&self, i: &Ideal) -> Result<usize> {
        Ok(i.dim() - self.maximal_times(i)?.dim())
    }

    pub fn is_principal(&self, i: &Ideal) -> Result<bool> {
        Ok(self.min_generators(i)? <= 1)
    }

    pub fn ideal_contains(&self, i: &Ideal, z: &Element) -> Result<bool> {
        self.check_ideal(i)?;
        if z.len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(i.contains(z))
    }

    pub fn quotient_algebra(&self, i: &Ideal) -> Result<QuotientMap> {
        QuotientMap::new(self, i)
    }

    /// Canonical basis rows rendered as polynomials.
    pub fn format_ideal(&self, i: &Ideal) -> Vec<String> {
        i.basis().map(|e| self.format_element(&e)).collect()
    }
}

/// `R -> R/I` with a linear section on the non-pivot coordinates of `I`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    ideal: Ideal,
    source_dim: usize,
    /// Source coordinates that survive as the target basis.
    reps: Vec<usize>,
    target: Algebra,
}

impl QuotientMap {
    fn new(alg: &Algebra, i: &Ideal) -> Result<Self> {
        alg.check_ideal(i)?;
        if i.contains(&alg.one()) {
            return Err(Error::NotProper);
        }
        let dim = alg.dim();
        let pivots = i.space.pivots();
        let reps: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
        debug_assert_eq!(reps[0], 0, "proper ideals of a local algebra lie in M");

        let project = |v: &[u32]| -> Vec<u32> {
            let r = i.space.reduce(v);
            reps.iter().map(|&k| r[k]).collect()
        };
        let t = reps.len();
        let mut products = Vec::with_capacity(t * t);
        for a in 0..t {
            for b in 0..t {
                let prod = alg.mul_raw(
                    alg.basis_element(reps[a]).coeffs(),
                    alg.basis_element(reps[b]).coeffs(),
                );
                products.push(
                    project(&prod)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| *c != 0)
                        .map(|(k, c)| (k as u32, c))
                        .collect(),
                );
            }
        }
        let generators =
            alg.generators().iter().map(|g| Element::from_coeffs(project(g.coeffs()))).collect();
        let basis = reps.iter().map(|&k| alg.basis()[k].clone()).collect();
        let target = Algebra::from_structure(
            alg.field(),
            alg.vars().to_vec(),
            basis,
            products,
            generators,
            alg.is_truncated(),
        );
        Ok(QuotientMap { ideal: i.clone(), source_dim: dim, reps, target })
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn kernel(&self) -> &Ideal {
        &self.ideal
    }

    pub fn project(&self, v: &Element) -> Element {
        let r = self.ideal.space.reduce(v.coeffs());
        Element::from_coeffs(self.reps.iter().map(|&k| r[k]).collect())
    }

    pub fn section(&self, v: &Element) -> Element {
        let mut out = vec![0; self.source_dim];
        for (&k, &c) in self.reps.iter().zip(v.coeffs()) {
            out[k] = c;
        }
        Element::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingPresentation;

    fn alg(src: &str) -> Algebra {
        Algebra::build(&RingPresentation::parse(src).unwrap()).unwrap()
    }

    const XY3: &str = "field 2\nvars x y\nrel x^3\nrel y^3\nrel x*y\n";

    fn span(a: &Algebra, polys: &[&str]) -> Ideal {
        let vecs = polys.iter().map(|p| a.parse_element(p).unwrap().into_coeffs());
        a.ideal_from_space(Subspace::span(a.field(), a.dim(), vecs)).unwrap()
    }

    fn el(a: &Algebra, s: &str) -> Element {
        a.parse_element(s).unwrap()
    }

    #[test]
    fn generated_ideals() {
        let a = alg(XY3);
        assert!(a.ideal_from_generators(&[]).unwrap().is_zero());
        assert_eq!(a.ideal_from_generators(&[el(&a, "x")]).unwrap(), span(&a, &["x", "x^2"]));
        assert_eq!(
            a.ideal_from_generators(&[el(&a, "x + y")]).unwrap(),
            span(&a, &["x + y", "x^2", "y^2"])
        );
    }

    #[test]
    fn ideal_arithmetic() {
        let a = alg(XY3);
        let rx = a.cyclic(&el(&a, "x")).unwrap();
        let ry = a.cyclic(&el(&a, "y")).unwrap();
        assert!(a.ideal_product(&rx, &ry).unwrap().is_zero());
        let m = a.maximal_ideal();
        assert_eq!(a.ideal_product(&m, &m).unwrap(), span(&a, &["x^2", "y^2"]));
        assert_eq!(a.ideal_sum(&rx, &a.zero_ideal()).unwrap(), rx);
        assert_eq!(a.ideal_intersect(&rx, &rx).unwrap(), rx);
        assert_eq!(a.ideal_product(&rx, &a.unit_ideal()).unwrap(), rx);
        assert_eq!(a.ideal_sum(&rx, &ry).unwrap(), m);
    }

    #[test]
    fn annihilators() {
        let a = alg(XY3);
        assert!(a.annihilator(&a.one()).unwrap().is_zero());
        assert_eq!(a.annihilator(&el(&a, "x + y")).unwrap(), span(&a, &["x^2", "y^2"]));
        assert_eq!(a.annihilator(&el(&a, "x")).unwrap(), span(&a, &["y", "x^2", "y^2"]));
        assert_eq!(a.socle(), span(&a, &["x^2", "y^2"]));
    }

    #[test]
    fn quotients() {
        let a = alg(XY3);
        let q0 = a.quotient_algebra(&a.zero_ideal()).unwrap();
        assert_eq!(q0.target().dim(), 5);
        let ann = a.annihilator(&el(&a, "x + y")).unwrap();
        let q = a.quotient_algebra(&ann).unwrap();
        assert_eq!(q.target().dim(), 3);
        let t = q.target();
        assert_eq!(t.min_generators(&t.maximal_ideal()).unwrap(), 2);
        let k = span(&a, &["y", "y^2"]);
        let q2 = a.quotient_algebra(&k).unwrap();
        let labels: Vec<String> = q2
            .target()
            .basis()
            .iter()
            .map(|m| m.display(a.vars()).to_string())
            .collect();
        assert_eq!(labels, ["1", "x", "x^2"]);
        assert_eq!(a.quotient_algebra(&a.unit_ideal()).unwrap_err(), Error::NotProper);
        // projection after section is the identity
        for i in 0..q.target().dim() {
            let e = q.target().basis_element(i);
            assert_eq!(q.project(&q.section(&e)), e);
        }
    }

    #[test]
    fn cyclic_and_simple() {
        let a = alg(XY3);
        assert!(a.cyclic(&a.zero()).unwrap().is_zero());
        assert_eq!(a.cyclic(&el(&a, "x")).unwrap().dim(), 2);
        assert_eq!(a.cyclic(&el(&a, "x + y")).unwrap().dim(), 3);
        assert!(!a.is_simple(&a.zero_ideal()));
        assert!(a.is_simple(&span(&a, &["x^2"])));
        assert!(!a.is_simple(&a.cyclic(&el(&a, "x")).unwrap()));
    }

    #[test]
    fn generator_counts() {
        let a = alg(XY3);
        assert_eq!(a.min_generators(&a.zero_ideal()).unwrap(), 0);
        assert_eq!(a.min_generators(&a.maximal_ideal()).unwrap(), 2);
        let b = alg("field 2\nvars x\nrel x^4\n");
        assert_eq!(b.min_generators(&b.maximal_ideal()).unwrap(), 1);
    }

    #[test]
    fn rejects_non_ideal_subspace() {
        let a = alg(XY3);
        let s = Subspace::span(a.field(), a.dim(), [el(&a, "x").into_coeffs()]);
        assert!(a.ideal_from_space(s).is_err());
    }
}
