//! Brute-force ground truth for small GF(2) algebras: every ideal, every
//! family of cyclic submodules.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::algebra::bits::Gf2View;
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::gf2::BitSubspace;
use crate::structure::{self, Counterexample, DscVerdict, ProofToken, SearchBounds, Witness};

/// Default bound on `dim(M)` for exhaustive enumeration.
pub const DEFAULT_MAX_DIM: usize = 8;

/// Element enumeration inside an ideal is capped here regardless of the
/// configured bound.
const HARD_MAX_DIM: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub ideal: Ideal,
    pub decomposable: bool,
    /// Distinct lengths of all cyclic decompositions, ascending.
    pub lengths: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealCensus {
    pub entries: Vec<CensusEntry>,
}

impl IdealCensus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ideals(&self) -> impl Iterator<Item = &Ideal> {
        self.entries.iter().map(|e| &e.ideal)
    }
}

/// Exhaustive machinery bound to one algebra, caching per-ideal work.
pub struct Oracle<'a> {
    alg: &'a Algebra,
    view: Gf2View,
    ideals: Option<Vec<BitSubspace>>,
    cyclics: HashMap<BitSubspace, Vec<(u64, BitSubspace)>>,
}

impl<'a> Oracle<'a> {
    pub fn new(alg: &'a Algebra, max_dim: usize) -> Result<Self> {
        let dm = alg.dim() - 1;
        let limit = max_dim.min(HARD_MAX_DIM);
        match Gf2View::new(alg) {
            Some(view) if dm <= limit => {
                Ok(Oracle { alg, view, ideals: None, cyclics: HashMap::new() })
            }
            _ => Err(Error::InfeasibleSize(format!(
                "ideal census needs p = 2 and dim(M) <= {limit} (have p = {}, dim(M) = {dm})",
                alg.field().p()
            ))),
        }
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.alg
    }

    fn to_bits(&self, i: &Ideal) -> Result<BitSubspace> {
        if i.space().ambient() != self.alg.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(BitSubspace::from_subspace(i.space()))
    }

    fn to_ideal(&self, s: &BitSubspace) -> Ideal {
        Ideal::from_space_unchecked(self.view.to_subspace(s))
    }

    fn all_ideals(&mut self) -> &[BitSubspace] {
        if self.ideals.is_none() {
            self.ideals = Some(self.enumerate_bits());
        }
        self.ideals.as_deref().expect("just filled")
    }

    /// Breadth-first over covers: every ideal `J ⊋ I` contains `I + span(v)`
    /// for some `v ∈ J` with `M v ⊆ I`.
    fn enumerate_bits(&self) -> Vec<BitSubspace> {
        let view = &self.view;
        let d = view.dim();
        let m = view.maximal_ideal();
        let mut seen: HashSet<BitSubspace> = HashSet::new();
        let mut frontier = vec![BitSubspace::zero()];
        seen.insert(BitSubspace::zero());
        while let Some(i) = frontier.pop() {
            // {v ∈ M : g v ∈ I for every generator g}
            let mut rows = Vec::new();
            for &g in view.generators() {
                let images: Vec<u64> = (0..d).map(|j| i.reduce(view.mul(g, 1 << j))).collect();
                for k in 0..d {
                    rows.push(images.iter().enumerate().fold(0u64, |acc, (j, &im)| acc | ((im >> k & 1) << j)));
                }
            }
            rows.push(1);
            let s = crate::linalg::gf2::kernel(&rows, d).intersect(&m);
            let comp: Vec<u64> = {
                let mut acc = i.clone();
                s.rows().iter().copied().filter(|&r| acc.insert(r)).collect()
            };
            for mask in 1u64..(1u64 << comp.len()) {
                let v = comp
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .fold(0u64, |acc, (_, &r)| acc ^ r);
                let mut j = i.clone();
                j.insert(v);
                if seen.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        let mut out: Vec<BitSubspace> = seen.into_iter().collect();
        out.push(BitSubspace::span((0..d).map(|k| 1u64 << k)));
        out.sort_by(|a, b| (a.dim(), a.rows()).cmp(&(b.dim(), b.rows())));
        out
    }

    /// All ideals including `0` and `R`, by dimension then canonical basis.
    pub fn enumerate_ideals(&mut self) -> Vec<Ideal> {
        let bits = self.all_ideals().to_vec();
        bits.iter().map(|s| self.to_ideal(s)).collect()
    }

    /// Distinct nonzero cyclic submodules of `i`, keyed by their first
    /// generator in integer order.
    fn cyclics_of(&mut self, i: &BitSubspace) -> &[(u64, BitSubspace)] {
        if !self.cyclics.contains_key(i) {
            let mut seen = HashSet::new();
            let mut elems = i.elements();
            elems.sort_unstable();
            let list: Vec<(u64, BitSubspace)> = elems
                .into_iter()
                .filter(|&z| z != 0)
                .filter_map(|z| {
                    let c = self.view.cyclic(z);
                    seen.insert(c.clone()).then_some((z, c))
                })
                .collect();
            self.cyclics.insert(i.clone(), list);
        }
        &self.cyclics[i]
    }

    /// First direct family of cyclic submodules summing to `i`, or `None`
    /// when none exists.
    pub fn brute_decompose(&mut self, i: &Ideal) -> Result<Option<Vec<Element>>> {
        let target = self.to_bits(i)?;
        let cands = self.cyclics_of(&target).to_vec();
        let mut failed: HashSet<BitSubspace> = HashSet::new();
        let mut chosen = Vec::new();
        let found = dfs(&target, &cands, 0, &BitSubspace::zero(), &mut chosen, &mut failed);
        Ok(found.then(|| chosen.iter().map(|&z| self.view.unpack(z)).collect()))
    }

    /// Bitmask of all lengths `k` for which `i` is a direct sum of `k`
    /// nonzero cyclic submodules.
    fn length_mask(&mut self, target: &BitSubspace) -> u64 {
        let cands = self.cyclics_of(target).to_vec();
        let mut by_dim: BTreeMap<usize, HashMap<BitSubspace, u64>> = BTreeMap::new();
        by_dim.entry(0).or_default().insert(BitSubspace::zero(), 1);
        let full = target.dim();
        let mut d = 0;
        while d < full {
            let layer = by_dim.remove(&d).unwrap_or_default();
            for (s, mask) in layer {
                for (_, c) in &cands {
                    if s.dim() + c.dim() > full || !s.is_direct_with(c) {
                        continue;
                    }
                    let t = s.sum(c);
                    *by_dim.entry(t.dim()).or_default().entry(t).or_insert(0) |= mask << 1;
                }
            }
            d += 1;
        }
        by_dim.get(&full).and_then(|m| m.get(target)).copied().unwrap_or(if full == 0 { 1 } else { 0 })
    }

    pub fn decomposition_lengths(&mut self, i: &Ideal) -> Result<Vec<usize>> {
        let target = self.to_bits(i)?;
        let mask = self.length_mask(&target);
        Ok((0..64).filter(|k| mask >> k & 1 == 1).collect())
    }

    pub fn census(&mut self) -> IdealCensus {
        let ideals = self.all_ideals().to_vec();
        let entries = ideals
            .iter()
            .map(|s| {
                let mask = self.length_mask(s);
                CensusEntry {
                    ideal: self.to_ideal(s),
                    decomposable: mask != 0,
                    lengths: (0..64).filter(|k| mask >> k & 1 == 1).collect(),
                }
            })
            .collect();
        IdealCensus { entries }
    }

    /// Yes iff every ideal decomposes; otherwise the first one that does not.
    pub fn oracle_dsc(&mut self) -> DscVerdict {
        let ideals = self.all_ideals().to_vec();
        for s in &ideals {
            let ideal = self.to_ideal(s);
            if self.brute_decompose(&ideal).expect("ideal of this algebra").is_none() {
                let c = Counterexample {
                    basis: self.alg.format_ideal(&ideal),
                    ideal,
                    generators: vec![],
                    proof: ProofToken::ExhaustiveSearch,
                    factor: None,
                };
                return DscVerdict::no(c, format!("checked {} ideals exhaustively", ideals.len()));
            }
        }
        let bounds = SearchBounds { max_search_dim: HARD_MAX_DIM, max_oracle_dim: HARD_MAX_DIM };
        let witness = structure::exhaustive_witness_search(self.alg, &bounds).ok().flatten();
        let mut notes = vec![format!("all {} ideals decompose", ideals.len())];
        if witness.is_none() {
            notes.push("no splitting of M with at most two non-simple summands found".into());
        }
        DscVerdict {
            answer: structure::Answer::Yes,
            witness: witness.map(Witness::Local),
            counterexample: None,
            notes,
        }
    }
}

fn dfs(
    target: &BitSubspace,
    cands: &[(u64, BitSubspace)],
    start: usize,
    sum: &BitSubspace,
    chosen: &mut Vec<u64>,
    failed: &mut HashSet<BitSubspace>,
) -> bool {
    if sum.dim() == target.dim() {
        return true;
    }
    if failed.contains(sum) {
        return false;
    }
    for k in start..cands.len() {
        let (z, c) = &cands[k];
        if sum.dim() + c.dim() > target.dim() || !sum.is_direct_with(c) {
            continue;
        }
        let next = sum.sum(c);
        chosen.push(*z);
        if dfs(target, cands, k + 1, &next, chosen, failed) {
            return true;
        }
        chosen.pop();
    }
    failed.insert(sum.clone());
    false
}

pub fn enumerate_ideals(alg: &Algebra, max_dim: usize) -> Result<Vec<Ideal>> {
    Ok(Oracle::new(alg, max_dim)?.enumerate_ideals())
}

/// Independent enumeration for `dim(M) <= 4`: the ideal generated by every
/// subset of `M`, plus `R`.
pub fn enumerate_ideals_by_generators(alg: &Algebra) -> Result<Vec<Ideal>> {
    let view = Gf2View::new(alg).filter(|_| alg.dim() <= 5).ok_or_else(|| {
        Error::InfeasibleSize("subset enumeration needs p = 2 and dim(M) <= 4".into())
    })?;
    let elems: Vec<u64> = view.maximal_ideal().elements().into_iter().filter(|&v| v != 0).collect();
    let mut seen: HashSet<BitSubspace> = HashSet::new();
    for subset in 0u64..(1u64 << elems.len()) {
        let gens: Vec<Element> = elems
            .iter()
            .enumerate()
            .filter(|(k, _)| subset >> k & 1 == 1)
            .map(|(_, &v)| view.unpack(v))
            .collect();
        let i = alg.ideal_from_generators(&gens)?;
        seen.insert(BitSubspace::from_subspace(i.space()));
    }
    seen.insert(BitSubspace::span((0..alg.dim()).map(|k| 1u64 << k)));
    let mut out: Vec<BitSubspace> = seen.into_iter().collect();
    out.sort_by(|a, b| (a.dim(), a.rows()).cmp(&(b.dim(), b.rows())));
    Ok(out.iter().map(|s| Ideal::from_space_unchecked(view.to_subspace(s))).collect())
}

pub fn brute_decompose(alg: &Algebra, i: &Ideal, max_dim: usize) -> Result<Option<Vec<Element>>> {
    Oracle::new(alg, max_dim)?.brute_decompose(i)
}

pub fn census(alg: &Algebra, max_dim: usize) -> Result<IdealCensus> {
    Ok(Oracle::new(alg, max_dim)?.census())
}

pub fn oracle_dsc(alg: &Algebra, max_dim: usize) -> Result<DscVerdict> {
    Ok(Oracle::new(alg, max_dim)?.oracle_dsc())
}

/// `R(x+y) + R(x+z)` for `M = Rx ⊕ Ry ⊕ Rz ⊕ K` with none of `Rx`, `Ry`,
/// `Rz` simple; such an ideal is never a direct sum of cyclic modules.
pub fn obstruction_ideal(alg: &Algebra, x: &Element, y: &Element, z: &Element, k: &Ideal) -> Result<Ideal> {
    let unmet = |m: &str| Error::HypothesisNotSatisfied(m.to_string());
    let mut sum = k.clone();
    let mut total = k.dim();
    for g in [x, y, z] {
        if g.is_zero() {
            return Err(unmet("zero summand"));
        }
        let c = alg.cyclic(g)?;
        if alg.is_simple(&c) {
            return Err(unmet("one of Rx, Ry, Rz is simple"));
        }
        total += c.dim();
        sum = alg.ideal_sum(&sum, &c)?;
    }
    let m = alg.maximal_ideal();
    if sum != m || total != m.dim() {
        return Err(unmet("Rx + Ry + Rz + K is not a direct splitting of M"));
    }
    alg.ideal_from_generators(&[alg.add(x, y), alg.add(x, z)])
}

/// Every ideal has a single decomposition length.
pub fn length_invariance(census: &IdealCensus) -> bool {
    census.entries.iter().all(|e| e.lengths.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingPresentation;
    use crate::structure::Answer;

    fn alg(src: &str) -> Algebra {
        Algebra::build(&RingPresentation::parse(src).unwrap()).unwrap()
    }

    const XY3: &str = "field 2\nvars x y\nrel x^3\nrel y^3\nrel x*y\n";
    const THREE: &str = "field 2\nvars x1 x2 x3\nrel x1^3\nrel x2^3\nrel x3^3\n\
                         rel x1*x2\nrel x1*x3\nrel x2*x3\n";

    #[test]
    fn small_censuses() {
        assert_eq!(enumerate_ideals(&alg("field 2\nvars x\nrel x^2\n"), 8).unwrap().len(), 3);
        let sq = alg("field 2\nvars x y\nrel x^2\nrel x*y\nrel y^2\n");
        assert_eq!(enumerate_ideals(&sq, 8).unwrap().len(), 6);
        assert_eq!(enumerate_ideals_by_generators(&sq).unwrap(), enumerate_ideals(&sq, 8).unwrap());
        let a = alg(XY3);
        assert_eq!(enumerate_ideals_by_generators(&a).unwrap(), enumerate_ideals(&a, 8).unwrap());
    }

    #[test]
    fn census_is_ordered_and_closed() {
        let a = alg(XY3);
        let ideals = enumerate_ideals(&a, 8).unwrap();
        assert!(ideals[0].is_zero());
        assert_eq!(ideals.last().unwrap().dim(), a.dim());
        for w in ideals.windows(2) {
            assert!(w[0].dim() <= w[1].dim());
            assert_ne!(w[0], w[1]);
        }
        for i in &ideals {
            assert!(a.is_closed(i.space()));
        }
    }

    #[test]
    fn brute_examples() {
        let a = alg(XY3);
        let d = brute_decompose(&a, &a.maximal_ideal(), 8).unwrap().unwrap();
        assert_eq!(d.len(), 2);
        let p = a.cyclic(&a.parse_element("x + y^2").unwrap()).unwrap();
        assert_eq!(brute_decompose(&a, &p, 8).unwrap().unwrap().len(), 1);

        let c = alg(THREE);
        let j = c.ideal_from_generators(&c.parse_elements("x1 + x2, x1 + x3").unwrap()).unwrap();
        assert_eq!(brute_decompose(&c, &j, 8).unwrap(), None);
    }

    #[test]
    fn oracle_verdicts() {
        assert_eq!(oracle_dsc(&alg("field 2\nvars x\nrel x^3\n"), 8).unwrap().answer, Answer::Yes);
        assert_eq!(oracle_dsc(&alg(XY3), 8).unwrap().answer, Answer::Yes);
        assert_eq!(oracle_dsc(&alg(THREE), 8).unwrap().answer, Answer::No);
        assert!(matches!(oracle_dsc(&alg("field 3\nvars x\nrel x^3\n"), 8), Err(Error::InfeasibleSize(_))));
    }

    #[test]
    fn obstruction_examples() {
        let c = alg(THREE);
        let [x1, x2, x3] = ["x1", "x2", "x3"].map(|v| c.parse_element(v).unwrap());
        let j = obstruction_ideal(&c, &x1, &x2, &x3, &c.zero_ideal()).unwrap();
        let expect = c.ideal_from_generators(&c.parse_elements("x1 + x2, x1 + x3").unwrap()).unwrap();
        assert_eq!(j, expect);

        let renamed = alg("field 2\nvars a b c\nrel a^3\nrel b^3\nrel c^3\nrel a*b\nrel a*c\nrel b*c\n");
        let [a, b, cc] = ["a", "b", "c"].map(|v| renamed.parse_element(v).unwrap());
        let j2 = obstruction_ideal(&renamed, &a, &b, &cc, &renamed.zero_ideal()).unwrap();
        assert_eq!(j2.space(), j.space());

        let s = alg("field 2\nvars x y z\nrel x^3\nrel y^3\nrel z^2\nrel x*y\nrel x*z\nrel y*z\n");
        let [x, y, z] = ["x", "y", "z"].map(|v| s.parse_element(v).unwrap());
        assert!(matches!(
            obstruction_ideal(&s, &x, &y, &z, &s.zero_ideal()),
            Err(Error::HypothesisNotSatisfied(_))
        ));
    }

    #[test]
    fn lengths_are_invariant_on_small_rings() {
        let c = census(&alg(XY3), 8).unwrap();
        assert!(c.entries.iter().all(|e| e.decomposable));
        assert!(length_invariance(&c));
        let m = c.entries.iter().find(|e| e.ideal.dim() == 4).unwrap();
        assert_eq!(m.lengths, [2]);
    }
}
