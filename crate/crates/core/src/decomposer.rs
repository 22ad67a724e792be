//! Constructive decomposition of an ideal into cyclic summands, given a
//! splitting `M = Rx ⊕ Ry ⊕ L` with `L` semisimple.
//!
//! With `n0` minimal such that `x^n0 + l ∈ I` for some `l ∈ L` (and `m0`
//! likewise for `y`), and `J` the projection of `I` to `L` along `Rx ⊕ Ry`,
//! either `I = Rx' ⊕ Ry' ⊕ (I ∩ J)` or `I = Rz' ⊕ (I ∩ J)` for any `z'`
//! outside the first sum.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::{affine_meet, Mat, Subspace};
use crate::structure::MDecomposition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Inside `Rx` or `Ry` (or the whole ring).
    Principal,
    /// Inside `L`.
    Semisimple,
    /// Inside `Rx ⊕ L` or `Ry ⊕ L`: `Rx' ⊕ (I ∩ J)`.
    OneAxis(Axis),
    /// `Rx' ⊕ Ry' ⊕ (I ∩ J)`.
    TwoAxes,
    /// `Rz' ⊕ (I ∩ J)`.
    Diagonal,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Principal => f.write_str("principal"),
            Branch::Semisimple => f.write_str("semisimple"),
            Branch::OneAxis(Axis::X) => f.write_str("one-axis-x"),
            Branch::OneAxis(Axis::Y) => f.write_str("one-axis-y"),
            Branch::TwoAxes => f.write_str("two-axes"),
            Branch::Diagonal => f.write_str("diagonal"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTrace {
    pub branch: Branch,
    pub n0: Option<u32>,
    pub m0: Option<u32>,
    /// `l` with `x^n0 + l ∈ I`.
    pub lx: Option<Element>,
    /// `l` with `y^m0 + l ∈ I`.
    pub ly: Option<Element>,
    /// False when a truncated model makes the exponents unreliable.
    pub trusted: bool,
}

impl DecompositionTrace {
    fn plain(branch: Branch) -> Self {
        DecompositionTrace { branch, n0: None, m0: None, lx: None, ly: None, trusted: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDecomposition {
    pub generators: Vec<Element>,
    pub simple_flags: Vec<bool>,
    pub trace: DecompositionTrace,
}

impl CyclicDecomposition {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn nonsimple_count(&self) -> usize {
        self.simple_flags.iter().filter(|s| !**s).count()
    }

    fn new(alg: &Algebra, generators: Vec<Element>, trace: DecompositionTrace) -> Result<Self> {
        let generators: Vec<Element> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let simple_flags = generators
            .iter()
            .map(|g| Ok(alg.is_simple(&alg.cyclic(g)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclicDecomposition { generators, simple_flags, trace })
    }

    pub fn dims(&self, alg: &Algebra) -> Result<Vec<usize>> {
        self.generators.iter().map(|g| Ok(alg.cyclic(g)?.dim())).collect()
    }
}

/// True iff the cyclic modules of the generators sum directly to `i`.
pub fn verify_decomposition(alg: &Algebra, i: &Ideal, d: &CyclicDecomposition) -> bool {
    let mut sum = alg.zero_ideal();
    let mut total = 0;
    for g in &d.generators {
        let Ok(c) = alg.cyclic(g) else { return false };
        total += c.dim();
        sum = match alg.ideal_sum(&sum, &c) {
            Ok(s) => s,
            Err(_) => return false,
        };
    }
    &sum == i && total == i.dim()
}

/// Any basis of an ideal killed by `M` gives simple summands.
pub fn semisimple_decompose(alg: &Algebra, i: &Ideal) -> Result<CyclicDecomposition> {
    alg.check_ideal(i)?;
    if !alg.maximal_times(i)?.is_zero() {
        return Err(Error::NotSemisimple);
    }
    CyclicDecomposition::new(alg, i.basis().collect(), DecompositionTrace::plain(Branch::Semisimple))
}

fn axis_element(dec: &MDecomposition, axis: Axis) -> Option<&Element> {
    match axis {
        Axis::X => dec.x.as_ref(),
        Axis::Y => dec.y.as_ref(),
    }
}

/// Smallest `n0 >= 1` with `x^n0 + l ∈ i` for some `l ∈ L`, together with
/// such an `l` (zero whenever `x^n0 ∈ i`).
pub fn minimal_exponent(
    alg: &Algebra,
    dec: &MDecomposition,
    i: &Ideal,
    axis: Axis,
) -> Result<(u32, Element)> {
    alg.check_ideal(i)?;
    let x = axis_element(dec, axis).ok_or(Error::NoSuchExponent)?;
    let l = dec.semisimple_part(alg);
    let mut xn = alg.one();
    for n in 1..=alg.dim() as u32 + 1 {
        xn = alg.mul(&xn, x)?;
        if let Some(hit) = affine_meet(xn.coeffs(), l.space(), i.space()) {
            return Ok((n, alg.sub(&Element::from_coeffs(hit), &xn)));
        }
        if xn.is_zero() {
            break;
        }
    }
    Err(Error::NoSuchExponent)
}

/// `J`: the `L`-components of the elements of `i`.
fn projection_to_l(alg: &Algebra, dec: &MDecomposition, i: &Ideal) -> Result<Subspace> {
    let field = alg.field();
    let mut cols: Vec<Vec<u32>> = Vec::new();
    for g in dec.x.iter().chain(dec.y.iter()) {
        cols.extend(alg.cyclic(g)?.space().basis().iter().cloned());
    }
    let axis_count = cols.len();
    cols.extend(dec.simples.iter().map(|w| w.coeffs().to_vec()));
    let n = alg.dim();
    let system = Mat::new(field, cols.len(), (0..n).map(|r| cols.iter().map(|c| c[r]).collect()).collect());
    let mut images = Vec::new();
    for v in i.space().basis() {
        let coeffs = system.solve(v).ok_or_else(|| {
            Error::InternalContradiction("ideal element outside Rx ⊕ Ry ⊕ L".into())
        })?;
        let mut l = vec![0; n];
        for (c, col) in coeffs.iter().zip(&cols).skip(axis_count) {
            field.axpy(&mut l, *c, col);
        }
        images.push(l);
    }
    Ok(Subspace::span(field, n, images))
}

/// Moves simple axis summands into `L` and puts a lone axis in the `x` slot.
fn normalize(alg: &Algebra, dec: &MDecomposition) -> Result<MDecomposition> {
    let mut out = dec.clone();
    for slot in [&mut out.x, &mut out.y] {
        if let Some(g) = slot.take() {
            if alg.is_simple(&alg.cyclic(&g)?) {
                out.simples.push(g);
            } else {
                *slot = Some(g);
            }
        }
    }
    if out.x.is_none() {
        out.x = out.y.take();
    }
    Ok(out)
}

fn exponent_trusted(alg: &Algebra, n: u32) -> bool {
    match alg.presentation().and_then(|p| p.truncate()) {
        Some(t) if alg.is_truncated() => n + 1 < t,
        _ => true,
    }
}

/// `x' = x^n0` when that lies in `i`, otherwise `x^n0 + l0`.
fn axis_generator(alg: &Algebra, x: &Element, n0: u32, l0: &Element) -> Result<Element> {
    let xn = alg.pow(x, n0);
    if l0.is_zero() {
        return Ok(xn);
    }
    let shifted = alg.add(&xn, l0);
    if alg.annihilator(&shifted)? != alg.annihilator(&xn)? {
        return Err(Error::InternalContradiction("Ann(x^n0 + l0) differs from Ann(x^n0)".into()));
    }
    Ok(shifted)
}

fn finish(alg: &Algebra, i: &Ideal, d: CyclicDecomposition) -> Result<CyclicDecomposition> {
    if !verify_decomposition(alg, i, &d) {
        return Err(Error::InternalContradiction(format!(
            "{} branch produced a sum that is not direct or misses the ideal",
            d.trace.branch
        )));
    }
    Ok(d)
}

/// Decomposes `i` using the verified splitting `dec` of `M`.
pub fn decompose_ideal(alg: &Algebra, dec: &MDecomposition, i: &Ideal) -> Result<CyclicDecomposition> {
    alg.check_ideal(i)?;
    if let Err(e) = dec.verify(alg) {
        return Err(match e {
            Error::WitnessInvalid(m) => Error::WitnessInvalid(m),
            other => Error::WitnessInvalid(other.to_string()),
        });
    }
    if i.is_zero() {
        return Ok(CyclicDecomposition {
            generators: vec![],
            simple_flags: vec![],
            trace: DecompositionTrace::plain(Branch::Semisimple),
        });
    }
    if i.contains(&alg.one()) {
        let d = CyclicDecomposition::new(alg, vec![alg.one()], DecompositionTrace::plain(Branch::Principal))?;
        return finish(alg, i, d);
    }

    let dec = normalize(alg, dec)?;
    let l = dec.semisimple_part(alg);
    let rx = dec.x.as_ref().map(|x| alg.cyclic(x)).transpose()?.unwrap_or_else(|| alg.zero_ideal());
    let ry = dec.y.as_ref().map(|y| alg.cyclic(y)).transpose()?.unwrap_or_else(|| alg.zero_ideal());

    // Inside one axis: a power of the axis generator.
    for (axis, r) in [(Axis::X, &rx), (Axis::Y, &ry)] {
        if !r.is_zero() && i.is_subideal_of(r) {
            let g = axis_element(&dec, axis).expect("nonzero axis");
            let mut n = u32::MAX;
            for v in i.basis().filter(|v| !v.is_zero()) {
                n = n.min(alg.power_form(g, &v)?.1);
            }
            let d = CyclicDecomposition::new(alg, vec![alg.pow(g, n)], DecompositionTrace::plain(Branch::Principal))?;
            return finish(alg, i, d);
        }
    }

    if i.is_subideal_of(&l) {
        return finish(alg, i, semisimple_decompose(alg, i)?);
    }

    let j = Ideal::from_space_unchecked(projection_to_l(alg, &dec, i)?);
    let ij = alg.ideal_intersect(i, &j)?;
    let rest: Vec<Element> = ij.basis().collect();

    let rxl = alg.ideal_sum(&rx, &l)?;
    let ryl = alg.ideal_sum(&ry, &l)?;
    let one_axis = if i.is_subideal_of(&rxl) {
        Some(Axis::X)
    } else if i.is_subideal_of(&ryl) {
        Some(Axis::Y)
    } else {
        None
    };

    if let Some(axis) = one_axis {
        let g = axis_element(&dec, axis).expect("i is not inside L");
        let (n0, l0) = minimal_exponent(alg, &dec, i, axis)?;
        let xp = axis_generator(alg, g, n0, &l0)?;
        let mut trace = DecompositionTrace::plain(Branch::OneAxis(axis));
        trace.trusted = exponent_trusted(alg, n0);
        match axis {
            Axis::X => (trace.n0, trace.lx) = (Some(n0), Some(l0)),
            Axis::Y => (trace.m0, trace.ly) = (Some(n0), Some(l0)),
        }
        let gens = std::iter::once(xp).chain(rest).collect();
        return finish(alg, i, CyclicDecomposition::new(alg, gens, trace)?);
    }

    let (x, y) = (dec.x.as_ref().expect("two axes"), dec.y.as_ref().expect("two axes"));
    let (n0, lx) = minimal_exponent(alg, &dec, i, Axis::X)?;
    let (m0, ly) = minimal_exponent(alg, &dec, i, Axis::Y)?;
    let xp = axis_generator(alg, x, n0, &lx)?;
    let yp = axis_generator(alg, y, m0, &ly)?;
    let trace = |branch| DecompositionTrace {
        branch,
        n0: Some(n0),
        m0: Some(m0),
        lx: Some(lx.clone()),
        ly: Some(ly.clone()),
        trusted: exponent_trusted(alg, n0) && exponent_trusted(alg, m0),
    };

    let a = alg.ideal_sum(&alg.ideal_sum(&alg.cyclic(&xp)?, &alg.cyclic(&yp)?)?, &ij)?;
    if &a == i {
        let gens = [xp, yp].into_iter().chain(rest).collect();
        return finish(alg, i, CyclicDecomposition::new(alg, gens, trace(Branch::TwoAxes))?);
    }

    // Any element of i outside A works; take the first canonical one.
    let outside = a.space().complement_in(i.space())?;
    let zp = Element::from_coeffs(outside[0].clone());
    check_diagonal_shape(alg, &dec, &zp, n0, m0)?;
    let gens = std::iter::once(zp).chain(rest).collect();
    finish(alg, i, CyclicDecomposition::new(alg, gens, trace(Branch::Diagonal))?)
}

/// `z' = c x^(n0-1) + d y^(m0-1) + l` with `c`, `d` units.
fn check_diagonal_shape(alg: &Algebra, dec: &MDecomposition, z: &Element, n0: u32, m0: u32) -> Result<()> {
    let bad = |m: &str| Error::InternalContradiction(format!("diagonal generator: {m}"));
    if n0 < 2 || m0 < 2 {
        return Err(bad("exponents below 2"));
    }
    let (x, y) = (dec.x.as_ref().expect("two axes"), dec.y.as_ref().expect("two axes"));
    let rx = alg.cyclic(x)?;
    let ry = alg.cyclic(y)?;
    let field = alg.field();
    let cols: Vec<Vec<u32>> = rx
        .space()
        .basis()
        .iter()
        .chain(ry.space().basis())
        .cloned()
        .chain(dec.simples.iter().map(|w| w.coeffs().to_vec()))
        .collect();
    let n = alg.dim();
    let system = Mat::new(field, cols.len(), (0..n).map(|r| cols.iter().map(|c| c[r]).collect()).collect());
    let coeffs = system.solve(z.coeffs()).ok_or_else(|| bad("outside M"))?;
    let part = |range: std::ops::Range<usize>| {
        let mut v = vec![0; n];
        for k in range {
            field.axpy(&mut v, coeffs[k], &cols[k]);
        }
        Element::from_coeffs(v)
    };
    let (dx, dy) = (rx.dim(), ry.dim());
    let a = part(0..dx);
    let b = part(dx..dx + dy);
    let (_, s) = alg.power_form(x, &a).map_err(|_| bad("no unit multiple of a power of x"))?;
    let (_, t) = alg.power_form(y, &b).map_err(|_| bad("no unit multiple of a power of y"))?;
    if s + 1 != n0 || t + 1 != m0 {
        return Err(bad("exponents differ from n0 - 1, m0 - 1"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingPresentation;
    use crate::structure::{find_m_decomposition, SearchBounds};

    fn setup(src: &str) -> (Algebra, MDecomposition) {
        let a = Algebra::build(&RingPresentation::parse(src).unwrap()).unwrap();
        let d = find_m_decomposition(&a, &SearchBounds::default()).unwrap().unwrap();
        (a, d)
    }

    const XY3: &str = "field 2\nvars x y\nrel x^3\nrel y^3\nrel x*y\n";
    const XW: &str = "field 2\nvars x w\nrel x^3\nrel x*w\nrel w^2\n";

    fn gens(a: &Algebra, d: &CyclicDecomposition) -> Vec<String> {
        d.generators.iter().map(|g| a.format_element(g)).collect()
    }

    fn ideal(a: &Algebra, s: &str) -> Ideal {
        a.ideal_from_generators(&a.parse_elements(s).unwrap()).unwrap()
    }

    #[test]
    fn semisimple_examples() {
        let (a, _) = setup(XY3);
        assert!(semisimple_decompose(&a, &a.zero_ideal()).unwrap().is_empty());
        let d = semisimple_decompose(&a, &ideal(&a, "x^2, y^2")).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.simple_flags.iter().all(|s| *s));
        assert_eq!(semisimple_decompose(&a, &a.maximal_ideal()), Err(Error::NotSemisimple));

        let (r2, _) = setup("field 2\nvars x1 x2 x3\nrel x1^2\nrel x2^2\nrel x3^2\nrel x1*x2\nrel x1*x3\nrel x2*x3\n");
        let i = ideal(&r2, "x1 + x2, x3");
        let d = semisimple_decompose(&r2, &i).unwrap();
        assert_eq!(d.len(), 2);
        assert!(verify_decomposition(&r2, &i, &d));
    }

    #[test]
    fn minimal_exponent_examples() {
        let a = Algebra::build(&RingPresentation::parse("field 2\nvars x\nrel x^4\n").unwrap()).unwrap();
        let dec = MDecomposition::verified(&a, a.parse_element("x").ok(), None, vec![]).unwrap();
        let (n, l) = minimal_exponent(&a, &dec, &ideal(&a, "x^2"), Axis::X).unwrap();
        assert_eq!((n, l.is_zero()), (2, true));

        let (b, dec) = setup(XW);
        assert_eq!(b.format_element(dec.x.as_ref().unwrap()), "x");
        let (n, l) = minimal_exponent(&b, &dec, &ideal(&b, "x^2 + w"), Axis::X).unwrap();
        assert_eq!((n, b.format_element(&l).as_str()), (2, "w"));
        let (n, l) = minimal_exponent(&b, &dec, &ideal(&b, "x"), Axis::X).unwrap();
        assert_eq!((n, l.is_zero()), (1, true));
    }

    #[test]
    fn decompose_examples() {
        let (a, dec) = setup(XY3);
        let d = decompose_ideal(&a, &dec, &a.maximal_ideal()).unwrap();
        assert_eq!(gens(&a, &d), ["x", "y"]);
        assert_eq!(d.trace.branch, Branch::TwoAxes);
        assert_eq!((d.trace.n0, d.trace.m0), (Some(1), Some(1)));

        let d = decompose_ideal(&a, &dec, &ideal(&a, "x + y")).unwrap();
        assert_eq!(gens(&a, &d), ["x + y"]);
        assert_eq!(d.trace.branch, Branch::Diagonal);
        assert_eq!((d.trace.n0, d.trace.m0), (Some(2), Some(2)));

        let i = ideal(&a, "x^2, y^2");
        let d = decompose_ideal(&a, &dec, &i).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.simple_flags.iter().all(|s| *s));
        assert!(verify_decomposition(&a, &i, &d));

        let c = Algebra::build(&RingPresentation::parse("field 2\nvars x\nrel x^4\n").unwrap()).unwrap();
        let cdec = MDecomposition::verified(&c, c.parse_element("x").ok(), None, vec![]).unwrap();
        let d = decompose_ideal(&c, &cdec, &ideal(&c, "x^3")).unwrap();
        assert_eq!(gens(&c, &d), ["x^3"]);
        assert_eq!(d.trace.branch, Branch::Principal);
    }

    #[test]
    fn one_axis_with_shift() {
        let (b, dec) = setup(XW);
        let i = ideal(&b, "x^2 + w");
        let d = decompose_ideal(&b, &dec, &i).unwrap();
        assert_eq!(d.trace.branch, Branch::OneAxis(Axis::X));
        assert_eq!(gens(&b, &d), ["w + x^2"]);
    }

    #[test]
    fn verify_examples() {
        let (a, dec) = setup(XY3);
        let empty = CyclicDecomposition {
            generators: vec![],
            simple_flags: vec![],
            trace: DecompositionTrace::plain(Branch::Semisimple),
        };
        assert!(verify_decomposition(&a, &a.zero_ideal(), &empty));
        let m = a.maximal_ideal();
        let good = decompose_ideal(&a, &dec, &m).unwrap();
        assert!(verify_decomposition(&a, &m, &good));
        let mut bad = good.clone();
        bad.generators = a.parse_elements("x + y, x").unwrap();
        assert!(!verify_decomposition(&a, &m, &bad));
    }

    #[test]
    fn rejects_unverified_witness() {
        let (a, _) = setup(XY3);
        let dec = MDecomposition::unverified(a.parse_element("x + y").ok(), None, vec![]);
        assert!(matches!(decompose_ideal(&a, &dec, &a.maximal_ideal()), Err(Error::WitnessInvalid(_))));
    }
}
