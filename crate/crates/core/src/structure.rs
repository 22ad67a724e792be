//! Structural analysis of a local algebra `(R, M)`.
//!
//! Every ideal of `R` is a direct sum of cyclic modules exactly when
//! `M = Rx ⊕ Ry ⊕ (⊕ Rw)` with each `Rw` simple and `R/Ann(x)`, `R/Ann(y)`
//! principal ideal rings. This module searches for such a splitting,
//! certifies it, and derives the verdict and the prime spectrum from it.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::bits::Gf2View;
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::gf2::BitSubspace;
use crate::linalg::Subspace;
use crate::oracle::{self, Oracle};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest `dim(M)` for the exhaustive witness search (GF(2) only).
    pub max_search_dim: usize,
    /// Largest `dim(M)` for the ideal census (GF(2) only).
    pub max_oracle_dim: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_search_dim: 12, max_oracle_dim: oracle::DEFAULT_MAX_DIM }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectSumCertificate {
    /// Dimensions of `Rx`, `Ry` (when present) and then each `Rw`.
    pub summand_dims: Vec<usize>,
    pub maximal_dim: usize,
}

/// `M = Rx ⊕ Ry ⊕ (⊕ Rw)`; `certificate` is only set by [`MDecomposition::verified`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MDecomposition {
    pub x: Option<Element>,
    pub y: Option<Element>,
    pub simples: Vec<Element>,
    pub certificate: Option<DirectSumCertificate>,
}

impl MDecomposition {
    pub fn unverified(x: Option<Element>, y: Option<Element>, simples: Vec<Element>) -> Self {
        MDecomposition { x, y, simples, certificate: None }
    }

    pub fn verified(
        alg: &Algebra,
        x: Option<Element>,
        y: Option<Element>,
        simples: Vec<Element>,
    ) -> Result<Self> {
        let mut dec = Self::unverified(x, y, simples);
        dec.certificate = Some(dec.verify(alg)?);
        Ok(dec)
    }

    pub fn is_verified(&self) -> bool {
        self.certificate.is_some()
    }

    /// Number of summands, which bounds the length of every ideal's
    /// decomposition.
    pub fn summand_count(&self) -> usize {
        self.x.iter().count() + self.y.iter().count() + self.simples.len()
    }

    /// Summand generators in order: x, y, then the simples.
    pub fn generators(&self) -> impl Iterator<Item = &Element> {
        self.x.iter().chain(self.y.iter()).chain(self.simples.iter())
    }

    /// `L = ⊕ Rw`, which is just the span of the simple generators.
    pub fn semisimple_part(&self, alg: &Algebra) -> Ideal {
        let vecs = self.simples.iter().map(|w| w.coeffs().to_vec());
        Ideal::from_space_unchecked(Subspace::span(alg.field(), alg.dim(), vecs))
    }

    /// Checks the splitting and the principal-ideal-ring conditions on
    /// `R/Ann(x)` and `R/Ann(y)`.
    pub fn verify(&self, alg: &Algebra) -> Result<DirectSumCertificate> {
        let bad = |m: &str| Error::WitnessInvalid(m.to_string());
        for g in self.generators() {
            if g.len() != alg.dim() {
                return Err(Error::AlgebraMismatch);
            }
            if g.is_zero() {
                return Err(bad("zero summand generator"));
            }
            if !alg.in_maximal_ideal(g) {
                return Err(bad("summand generator is a unit"));
            }
        }
        let m = alg.maximal_ideal();
        let mut sum = alg.zero_ideal();
        let mut dims = Vec::new();
        for (k, g) in self.generators().enumerate() {
            let c = alg.cyclic(g)?;
            if k >= self.x.iter().count() + self.y.iter().count() && !alg.is_simple(&c) {
                return Err(bad("listed simple summand is not simple"));
            }
            dims.push(c.dim());
            sum = alg.ideal_sum(&sum, &c)?;
        }
        if sum != m {
            return Err(bad("summands do not span the maximal ideal"));
        }
        if dims.iter().sum::<usize>() != m.dim() {
            return Err(bad("summand dimensions do not add up"));
        }
        if let (Some(x), Some(y)) = (&self.x, &self.y) {
            if !alg.mul(x, y)?.is_zero() {
                return Err(bad("x*y is nonzero"));
            }
        }
        for g in self.x.iter().chain(self.y.iter()) {
            let ann = alg.annihilator(g)?;
            let q = alg.quotient_algebra(&ann)?;
            if !is_principal_ideal_ring(q.target()) {
                return Err(bad("R/Ann of a non-simple summand is not a principal ideal ring"));
            }
        }
        Ok(DirectSumCertificate { summand_dims: dims, maximal_dim: m.dim() })
    }
}

/// A local algebra is a principal ideal ring iff its maximal ideal is cyclic.
pub fn is_principal_ideal_ring(alg: &Algebra) -> bool {
    alg.min_generators(&alg.maximal_ideal()).expect("same algebra") <= 1
}

/// The variables split `M` directly; grouped by whether `R v` is simple.
#[derive(Debug, Clone)]
pub struct VariableSplit {
    pub nonsimple: Vec<Element>,
    pub simple: Vec<Element>,
}

/// `Some` when `M` is the direct sum of the cyclic modules of the
/// (nonzero) generators.
pub fn variable_split(alg: &Algebra) -> Option<VariableSplit> {
    let m = alg.maximal_ideal();
    let mut split = VariableSplit { nonsimple: Vec::new(), simple: Vec::new() };
    let mut total = 0;
    let mut sum = alg.zero_ideal();
    for g in alg.generators().iter().filter(|g| !g.is_zero()) {
        let c = alg.cyclic(g).ok()?;
        total += c.dim();
        sum = alg.ideal_sum(&sum, &c).ok()?;
        if alg.is_simple(&c) {
            split.simple.push(g.clone());
        } else {
            split.nonsimple.push(g.clone());
        }
    }
    (total == m.dim() && sum == m).then_some(split)
}

fn split_to_decomposition(alg: &Algebra, split: &VariableSplit) -> Option<MDecomposition> {
    if split.nonsimple.len() > 2 {
        return None;
    }
    let mut ns = split.nonsimple.iter().cloned();
    MDecomposition::verified(alg, ns.next(), ns.next(), split.simple.clone()).ok()
}

/// Exhaustive search over pairs of cyclic submodules of `M` (GF(2) only):
/// `M = Rx ⊕ Ry ⊕ K` with `K` a complement inside the socle.
pub fn exhaustive_witness_search(alg: &Algebra, bounds: &SearchBounds) -> Result<Option<MDecomposition>> {
    let dm = alg.dim() - 1;
    let view = match Gf2View::new(alg) {
        Some(v) if dm <= bounds.max_search_dim => v,
        _ => {
            return Err(Error::SearchSpaceExceeded(format!(
                "exhaustive witness search needs p = 2 and dim(M) <= {} (have p = {}, dim(M) = {dm})",
                bounds.max_search_dim,
                alg.field().p()
            )))
        }
    };
    let soc = view.socle();
    let build = |x: Option<u64>, y: Option<u64>| -> Option<MDecomposition> {
        let mut acc = BitSubspace::zero();
        for z in x.iter().chain(y.iter()) {
            acc = acc.sum(&view.cyclic(*z));
        }
        let simples: Vec<Element> =
            soc.rows().iter().filter(|&&r| acc.insert(r)).map(|&r| view.unpack(r)).collect();
        MDecomposition::verified(alg, x.map(|v| view.unpack(v)), y.map(|v| view.unpack(v)), simples)
            .ok()
    };
    if soc.dim() == dm {
        return Ok(build(None, None));
    }

    // Distinct cyclic submodules generated outside the socle, in element order.
    let mut seen = HashSet::new();
    let mut cands: Vec<(u64, BitSubspace, BitSubspace)> = Vec::new();
    for v in 1u64..(1u64 << dm) {
        let z = v << 1;
        if soc.contains(z) {
            continue;
        }
        let c = view.cyclic(z);
        if seen.insert(c.clone()) {
            let with_soc = c.sum(&soc);
            cands.push((z, c, with_soc));
        }
    }
    for (z, _, with_soc) in &cands {
        if with_soc.dim() == dm {
            if let Some(dec) = build(Some(*z), None) {
                return Ok(Some(dec));
            }
        }
    }
    for a in 0..cands.len() {
        let (za, ca, sa) = &cands[a];
        for (zb, cb, _) in &cands[a + 1..] {
            if ca.dim() + cb.dim() + soc.dim() < dm || !ca.is_direct_with(cb) {
                continue;
            }
            if sa.sum(cb).dim() == dm {
                if let Some(dec) = build(Some(*za), Some(*zb)) {
                    return Ok(Some(dec));
                }
            }
        }
    }
    Ok(None)
}

/// Variables first; if they do not split `M` with at most two non-simple
/// summands, fall back to the exhaustive search.
pub fn find_m_decomposition(alg: &Algebra, bounds: &SearchBounds) -> Result<Option<MDecomposition>> {
    if let Some(dec) = variable_split(alg).and_then(|s| split_to_decomposition(alg, &s)) {
        return Ok(Some(dec));
    }
    exhaustive_witness_search(alg, bounds)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Answer {
    #[serde(rename = "yes")]
    Yes,
    #[serde(rename = "no")]
    No,
    #[serde(rename = "undecided")]
    UndecidedBySearch,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::UndecidedBySearch => "undecided",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProofToken {
    /// Every family of cyclic submodules was tried.
    ExhaustiveSearch,
    /// Three non-simple cyclic summands of `M` force `R(x+y) + R(x+z)` to be
    /// indecomposable; not re-checked by enumeration.
    ThreeNonSimpleSummands,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub ideal: Ideal,
    /// Canonical basis of the ideal, as polynomials.
    pub basis: Vec<String>,
    /// Generators when the ideal came from a construction.
    pub generators: Vec<String>,
    pub proof: ProofToken,
    /// Index of the failing factor for product rings.
    pub factor: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Local(MDecomposition),
    Product(Vec<Witness>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DscVerdict {
    pub answer: Answer,
    pub witness: Option<Witness>,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl DscVerdict {
    fn yes(dec: MDecomposition, note: impl Into<String>) -> Self {
        DscVerdict {
            answer: Answer::Yes,
            witness: Some(Witness::Local(dec)),
            counterexample: None,
            notes: vec![note.into()],
        }
    }

    pub(crate) fn no(c: Counterexample, note: impl Into<String>) -> Self {
        DscVerdict { answer: Answer::No, witness: None, counterexample: Some(c), notes: vec![note.into()] }
    }

    fn undecided(note: impl Into<String>) -> Self {
        DscVerdict {
            answer: Answer::UndecidedBySearch,
            witness: None,
            counterexample: None,
            notes: vec![note.into()],
        }
    }

    /// The local witness, if this is a yes-verdict for a single local ring.
    pub fn local_witness(&self) -> Option<&MDecomposition> {
        match &self.witness {
            Some(Witness::Local(d)) => Some(d),
            _ => None,
        }
    }
}

/// Decides whether every ideal of `alg` is a direct sum of cyclic modules.
pub fn classify_dsc(alg: &Algebra, bounds: &SearchBounds) -> DscVerdict {
    let mut notes = Vec::new();
    if alg.is_truncated() {
        notes.push("truncated model".to_string());
    }
    let with_notes = |mut v: DscVerdict, notes: &[String]| {
        v.notes.splice(0..0, notes.iter().cloned());
        v
    };

    if let Some(split) = variable_split(alg) {
        if let Some(dec) = split_to_decomposition(alg, &split) {
            return with_notes(DscVerdict::yes(dec, "witness from the presentation variables"), &notes);
        }
        if split.nonsimple.len() >= 3 {
            return with_notes(refute_three_summands(alg, &split, bounds), &notes);
        }
    }

    match exhaustive_witness_search(alg, bounds) {
        Ok(Some(dec)) => with_notes(DscVerdict::yes(dec, "witness from exhaustive pair search"), &notes),
        Ok(None) => {
            notes.push("exhaustive pair search found no witness".into());
            match Oracle::new(alg, bounds.max_oracle_dim) {
                Ok(mut oracle) => with_notes(oracle.oracle_dsc(), &notes),
                Err(e) => with_notes(DscVerdict::undecided(e.to_string()), &notes),
            }
        }
        Err(e) => with_notes(DscVerdict::undecided(e.to_string()), &notes),
    }
}

fn refute_three_summands(alg: &Algebra, split: &VariableSplit, bounds: &SearchBounds) -> DscVerdict {
    let [x, y, z] = [&split.nonsimple[0], &split.nonsimple[1], &split.nonsimple[2]];
    let rest: Vec<Element> = split.nonsimple[3..].iter().chain(&split.simple).cloned().collect();
    let k = alg.ideal_from_generators(&rest).expect("same algebra");
    let j = match oracle::obstruction_ideal(alg, x, y, z, &k) {
        Ok(j) => j,
        Err(e) => return DscVerdict::undecided(e.to_string()),
    };
    let generators = vec![
        alg.format_element(&alg.add(x, y)),
        alg.format_element(&alg.add(x, z)),
    ];
    let proof = match Oracle::new(alg, bounds.max_oracle_dim) {
        Ok(mut oracle) => match oracle.brute_decompose(&j) {
            Ok(None) => ProofToken::ExhaustiveSearch,
            Ok(Some(_)) => {
                return DscVerdict::undecided(
                    "internal contradiction: obstruction ideal decomposed by exhaustive search",
                )
            }
            Err(_) => ProofToken::ThreeNonSimpleSummands,
        },
        Err(_) => ProofToken::ThreeNonSimpleSummands,
    };
    let c = Counterexample {
        basis: alg.format_ideal(&j),
        ideal: j,
        generators,
        proof,
        factor: None,
    };
    DscVerdict::no(c, "three non-simple cyclic summands among the variables")
}

/// Componentwise verdict for a finite product of local rings.
pub fn classify_product(verdicts: &[DscVerdict]) -> Result<DscVerdict> {
    if let Some(i) = verdicts.iter().position(|v| v.answer == Answer::UndecidedBySearch) {
        return Err(Error::FactorUndecided(i));
    }
    if let Some(i) = verdicts.iter().position(|v| v.answer == Answer::No) {
        let mut c = verdicts[i].counterexample.clone().ok_or(Error::FactorUndecided(i))?;
        c.factor = Some(i);
        return Ok(DscVerdict::no(c, format!("factor {i} is not DSC")));
    }
    let witnesses = verdicts
        .iter()
        .map(|v| v.witness.clone().ok_or(Error::NoWitness))
        .collect::<Result<Vec<_>>>()?;
    Ok(DscVerdict {
        answer: Answer::Yes,
        witness: Some(Witness::Product(witnesses)),
        counterexample: None,
        notes: vec![format!("all {} factors are DSC", verdicts.len())],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecCase {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for SpecCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SpecCase::A => "a",
            SpecCase::B => "b",
            SpecCase::C => "c",
            SpecCase::D => "d",
            SpecCase::E => "e",
        };
        f.write_str(s)
    }
}

/// A prime described by generators over the witness elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicPrime {
    Zero,
    Maximal,
    /// `R g1 ⊕ R g2 ⊕ ...`, generators rendered as polynomials.
    Sum(Vec<String>),
}

impl fmt::Display for SymbolicPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicPrime::Zero => f.write_str("(0)"),
            SymbolicPrime::Maximal => f.write_str("M"),
            SymbolicPrime::Sum(gs) if gs.is_empty() => f.write_str("(0)"),
            SymbolicPrime::Sum(gs) => {
                let parts: Vec<String> = gs
                    .iter()
                    .map(|g| {
                        if g.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                            format!("R{g}")
                        } else {
                            format!("R({g})")
                        }
                    })
                    .collect();
                f.write_str(&parts.join(" ⊕ "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecReport {
    pub case: SpecCase,
    pub primes: Vec<SymbolicPrime>,
    pub krull_dim: u8,
    /// The algebra was a truncation; the primes describe the untruncated ring.
    pub truncated_model: bool,
}

impl SpecReport {
    pub fn prime_strings(&self) -> Vec<String> {
        self.primes.iter().map(|p| p.to_string()).collect()
    }
}

/// Nilpotency in the untruncated ring: every monomial in the support must be
/// nilpotent.
pub fn is_nilpotent_untruncated(alg: &Algebra, e: &Element) -> Result<bool> {
    let pres = alg.presentation().ok_or_else(|| {
        Error::HypothesisNotSatisfied("nilpotency needs a presentation".into())
    })?;
    Ok(e.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .all(|(i, _)| pres.monomial_is_nilpotent(&alg.basis()[i])))
}

/// Prime spectrum from a verified witness.
pub fn spec_classify(alg: &Algebra, dec: &MDecomposition) -> Result<SpecReport> {
    match &dec.certificate {
        Some(cert) if dec.verify(alg).as_ref() == Ok(cert) => {}
        _ => return Err(Error::DecompositionNotVerified),
    }
    let nil = |e: &Option<Element>| -> Result<bool> {
        match e {
            Some(e) => is_nilpotent_untruncated(alg, e),
            None => Ok(true),
        }
    };
    let fmt = |e: &Element| alg.format_element(e);
    let l: Vec<String> = dec.simples.iter().map(fmt).collect();
    let with_l = |e: &Option<Element>| -> SymbolicPrime {
        SymbolicPrime::Sum(e.iter().map(fmt).chain(l.iter().cloned()).collect())
    };

    let (case, primes) = if is_principal_ideal_ring(alg) {
        let z = dec.generators().next().cloned();
        if nil(&z)? {
            (SpecCase::A, vec![SymbolicPrime::Maximal])
        } else {
            (SpecCase::B, vec![SymbolicPrime::Zero, SymbolicPrime::Maximal])
        }
    } else {
        match (nil(&dec.x)?, nil(&dec.y)?) {
            (true, true) => (SpecCase::A, vec![SymbolicPrime::Maximal]),
            (false, true) => (SpecCase::C, vec![SymbolicPrime::Maximal, with_l(&dec.y)]),
            (true, false) => (SpecCase::D, vec![SymbolicPrime::Maximal, with_l(&dec.x)]),
            (false, false) => (
                SpecCase::E,
                vec![SymbolicPrime::Maximal, with_l(&dec.x), with_l(&dec.y)],
            ),
        }
    };
    let krull_dim = if case == SpecCase::A { 0 } else { 1 };
    Ok(SpecReport { case, primes, krull_dim, truncated_model: alg.is_truncated() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingPresentation;

    fn alg(src: &str) -> Algebra {
        Algebra::build(&RingPresentation::parse(src).unwrap()).unwrap()
    }

    const XY3: &str = "field 2\nvars x y\nrel x^3\nrel y^3\nrel x*y\n";
    const THREE_CUBES: &str = "field 2\nvars x1 x2 x3\nrel x1^3\nrel x2^3\nrel x3^3\n\
                               rel x1*x2\nrel x1*x3\nrel x2*x3\n";

    fn names(a: &Algebra, es: &[Element]) -> Vec<String> {
        es.iter().map(|e| a.format_element(e)).collect()
    }

    #[test]
    fn pir_examples() {
        assert!(is_principal_ideal_ring(&alg("field 2\nvars x\nrel x^4\n")));
        let a = alg(XY3);
        assert!(!is_principal_ideal_ring(&a));
        let ann = a.annihilator(&a.parse_element("x").unwrap()).unwrap();
        assert!(is_principal_ideal_ring(a.quotient_algebra(&ann).unwrap().target()));
    }

    #[test]
    fn decomposition_examples() {
        let b = SearchBounds::default();
        let r2 = alg("field 2\nvars x1 x2\nrel x1^2\nrel x1*x2\nrel x2^2\n");
        let d = find_m_decomposition(&r2, &b).unwrap().unwrap();
        assert!(d.x.is_none() && d.y.is_none());
        assert_eq!(names(&r2, &d.simples), ["x1", "x2"]);

        let a = alg(XY3);
        let d = find_m_decomposition(&a, &b).unwrap().unwrap();
        assert_eq!(a.format_element(d.x.as_ref().unwrap()), "x");
        assert_eq!(a.format_element(d.y.as_ref().unwrap()), "y");
        assert!(d.simples.is_empty());

        assert!(find_m_decomposition(&alg(THREE_CUBES), &b).unwrap().is_none());
    }

    #[test]
    fn exhaustive_search() {
        let b = SearchBounds::default();
        let d = exhaustive_witness_search(&alg(XY3), &b).unwrap().unwrap();
        assert!(d.x.is_some() && d.y.is_some());
        assert!(d.is_verified());
        // M = span{x, y, xy}: every cyclic submodule contains xy.
        let glued = alg("field 2\nvars x y\nrel x^2\nrel y^2\n");
        assert!(exhaustive_witness_search(&glued, &b).unwrap().is_none());
        assert_eq!(classify_dsc(&glued, &b).answer, Answer::No);
        let odd = alg("field 3\nvars x y\nrel x^2\nrel y^2\n");
        assert!(matches!(exhaustive_witness_search(&odd, &b), Err(Error::SearchSpaceExceeded(_))));
        assert_eq!(classify_dsc(&odd, &b).answer, Answer::UndecidedBySearch);
    }

    #[test]
    fn classify_examples() {
        let b = SearchBounds::default();
        assert_eq!(classify_dsc(&alg(XY3), &b).answer, Answer::Yes);
        assert_eq!(classify_dsc(&alg("field 2\nvars x\nrel x^3\n"), &b).answer, Answer::Yes);
        let c = alg(THREE_CUBES);
        let v = classify_dsc(&c, &b);
        assert_eq!(v.answer, Answer::No);
        let ce = v.counterexample.unwrap();
        assert_eq!(ce.proof, ProofToken::ExhaustiveSearch);
        let gens = [c.parse_element("x1 + x2").unwrap(), c.parse_element("x1 + x3").unwrap()];
        assert_eq!(ce.ideal, c.ideal_from_generators(&gens).unwrap());
    }

    #[test]
    fn product_verdicts() {
        let b = SearchBounds::default();
        let yes = classify_dsc(&alg(XY3), &b);
        let no = classify_dsc(&alg(THREE_CUBES), &b);
        assert_eq!(classify_product(&[yes.clone(), yes.clone()]).unwrap().answer, Answer::Yes);
        let mixed = classify_product(&[yes.clone(), no]).unwrap();
        assert_eq!(mixed.answer, Answer::No);
        assert_eq!(mixed.counterexample.unwrap().factor, Some(1));
        assert_eq!(classify_product(&[]).unwrap().answer, Answer::Yes);
        let undecided = DscVerdict::undecided("x");
        assert_eq!(classify_product(&[yes, undecided]), Err(Error::FactorUndecided(1)));
    }

    #[test]
    fn spec_examples() {
        let b = SearchBounds::default();
        let spec = |src: &str| {
            let a = alg(src);
            let d = find_m_decomposition(&a, &b).unwrap().unwrap();
            let r = spec_classify(&a, &d).unwrap();
            (r.case, r.prime_strings(), r.krull_dim)
        };
        assert_eq!(spec("field 2\nvars x\ntruncate 6\n"), (SpecCase::B, vec!["(0)".into(), "M".into()], 1));
        assert_eq!(
            spec("field 2\nvars x y\nrel x*y\nrel y^2\ntruncate 6\n"),
            (SpecCase::C, vec!["M".into(), "Ry".into()], 1)
        );
        assert_eq!(
            spec("field 2\nvars x y\nrel x*y\ntruncate 6\n"),
            (SpecCase::E, vec!["M".into(), "Rx".into(), "Ry".into()], 1)
        );
        assert_eq!(spec(XY3), (SpecCase::A, vec!["M".into()], 0));
        assert_eq!(
            spec("field 2\nvars x1 x2\nrel x1^2\nrel x1*x2\nrel x2^2\n"),
            (SpecCase::A, vec!["M".into()], 0)
        );
        assert_eq!(
            spec("field 2\nvars x y\nrel x*y\nrel x^2\ntruncate 6\n"),
            (SpecCase::C, vec!["M".into(), "Rx".into()], 1)
        );
    }

    #[test]
    fn spec_requires_verified_witness() {
        let a = alg(XY3);
        let d = MDecomposition::unverified(a.parse_element("x").ok(), a.parse_element("y").ok(), vec![]);
        assert_eq!(spec_classify(&a, &d), Err(Error::DecompositionNotVerified));
    }

    #[test]
    fn witness_verification_rejects_bad_splittings() {
        let a = alg(XY3);
        let x = a.parse_element("x").unwrap();
        let s = a.parse_element("x + y").unwrap();
        assert!(MDecomposition::verified(&a, Some(s), Some(x.clone()), vec![]).is_err());
        assert!(MDecomposition::verified(&a, Some(x), None, vec![]).is_err());
    }
}
