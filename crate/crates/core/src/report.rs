//! Serializable views of verdicts, decompositions and censuses.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::decomposer::CyclicDecomposition;
use crate::error::Result;
use crate::ideal::Ideal;
use crate::oracle::CensusEntry;
use crate::structure::{Answer, DscVerdict, MDecomposition, ProofToken, SpecCase, SpecReport, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WitnessReport {
    Local {
        x: Option<String>,
        y: Option<String>,
        simples: Vec<String>,
        summand_dims: Vec<usize>,
    },
    Product {
        factors: Vec<WitnessReport>,
    },
}

impl WitnessReport {
    pub fn local(alg: &Algebra, dec: &MDecomposition) -> Self {
        WitnessReport::Local {
            x: dec.x.as_ref().map(|e| alg.format_element(e)),
            y: dec.y.as_ref().map(|e| alg.format_element(e)),
            simples: dec.simples.iter().map(|e| alg.format_element(e)).collect(),
            summand_dims: dec.certificate.as_ref().map(|c| c.summand_dims.clone()).unwrap_or_default(),
        }
    }

    /// `algs[k]` must be the algebra of the `k`-th local witness, in order.
    fn from_witness(algs: &[&Algebra], w: &Witness) -> Self {
        match (w, algs) {
            (Witness::Local(d), [alg, ..]) => Self::local(alg, d),
            (Witness::Product(ws), _) => WitnessReport::Product {
                factors: ws.iter().zip(algs).map(|(w, a)| Self::from_witness(&[*a], w)).collect(),
            },
            (Witness::Local(_), []) => WitnessReport::Product { factors: vec![] },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
    pub proof: ProofToken,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecSummary {
    pub case: SpecCase,
    pub primes: Vec<String>,
    pub krull_dim: u8,
    pub truncated_model: bool,
}

impl From<&SpecReport> for SpecSummary {
    fn from(r: &SpecReport) -> Self {
        SpecSummary {
            case: r.case,
            primes: r.prime_strings(),
            krull_dim: r.krull_dim,
            truncated_model: r.truncated_model,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub dsc: Answer,
    pub witness: Option<WitnessReport>,
    pub counterexample: Option<CounterexampleReport>,
    pub spec: Option<SpecSummary>,
    pub notes: Vec<String>,
}

impl VerdictReport {
    /// `algs` holds one algebra per factor (a single one for a local ring).
    pub fn new(algs: &[&Algebra], v: &DscVerdict, spec: Option<&SpecReport>) -> Self {
        VerdictReport {
            dsc: v.answer,
            witness: v.witness.as_ref().map(|w| WitnessReport::from_witness(algs, w)),
            counterexample: v.counterexample.as_ref().map(|c| CounterexampleReport {
                basis: c.basis.clone(),
                generators: c.generators.clone(),
                proof: c.proof,
                factor: c.factor,
            }),
            spec: spec.map(SpecSummary::from),
            notes: v.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub ideal: Vec<String>,
    pub branch: String,
    pub n0: Option<u32>,
    pub m0: Option<u32>,
    pub lx: Option<String>,
    pub ly: Option<String>,
    pub trusted: bool,
    pub generators: Vec<String>,
    pub simple: Vec<bool>,
    pub dims: Vec<usize>,
}

impl DecompositionReport {
    pub fn new(alg: &Algebra, i: &Ideal, d: &CyclicDecomposition) -> Result<Self> {
        let t = &d.trace;
        Ok(DecompositionReport {
            ideal: alg.format_ideal(i),
            branch: t.branch.to_string(),
            n0: t.n0,
            m0: t.m0,
            lx: t.lx.as_ref().map(|e| alg.format_element(e)),
            ly: t.ly.as_ref().map(|e| alg.format_element(e)),
            trusted: t.trusted,
            generators: d.generators.iter().map(|g| alg.format_element(g)).collect(),
            simple: d.simple_flags.clone(),
            dims: d.dims(alg)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusLine {
    pub basis: Vec<String>,
    pub dim: usize,
    pub decomposable: bool,
    pub min_length: Option<usize>,
    pub max_length: Option<usize>,
}

impl CensusLine {
    pub fn new(alg: &Algebra, e: &CensusEntry) -> Self {
        CensusLine {
            basis: alg.format_ideal(&e.ideal),
            dim: e.ideal.dim(),
            decomposable: e.decomposable,
            min_length: e.lengths.first().copied(),
            max_length: e.lengths.last().copied(),
        }
    }
}
