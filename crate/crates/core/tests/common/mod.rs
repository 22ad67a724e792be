#![allow(dead_code)]

use dscring_core::corpus::{self, CorpusEntry, Manifest};
use dscring_core::{Algebra, Element, Ideal, Monomial, RingPresentation};

pub fn ring(src: &str) -> Algebra {
    Algebra::build(&RingPresentation::parse(src).unwrap()).unwrap()
}

pub fn corpus_algebra(key: &str) -> Algebra {
    let dir = corpus::default_dir();
    let m = Manifest::load(&dir).unwrap();
    let e = m.entries.iter().find(|e| e.key == key).unwrap_or_else(|| panic!("no entry {key}"));
    corpus::load_algebra(&dir, e).unwrap()
}

pub fn corpus_entries() -> Vec<(CorpusEntry, Algebra)> {
    let dir = corpus::default_dir();
    let m = Manifest::load(&dir).unwrap();
    m.entries.iter().map(|e| (e.clone(), corpus::load_algebra(&dir, e).unwrap())).collect()
}

/// Every GF(2) presentation with 1 to 3 variables, pure powers `x_i^e` with
/// `e` in {2, 3}, and any subset of the products `x_i x_j`, kept when
/// `dim(M) <= max_m`.
pub fn sweep_family(max_m: usize) -> Vec<(String, Algebra)> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for exps in 0..(1u32 << n) {
            for subset in 0..(1u32 << pairs.len()) {
                let mut rels = Vec::new();
                let mut label = Vec::new();
                for i in 0..n {
                    let e = 2 + (exps >> i & 1);
                    rels.push(Monomial::var(n, i, e));
                    label.push(format!("x{}^{e}", i + 1));
                }
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    if subset >> k & 1 == 1 {
                        let mut m = vec![0; n];
                        m[i] = 1;
                        m[j] = 1;
                        rels.push(Monomial(m));
                        label.push(format!("x{}*x{}", i + 1, j + 1));
                    }
                }
                let pres = RingPresentation::new(2, vars.clone(), rels, None).unwrap();
                let alg = Algebra::build(&pres).unwrap();
                if alg.dim() - 1 <= max_m {
                    out.push((label.join(","), alg));
                }
            }
        }
    }
    out
}

/// All elements of an ideal over GF(2), by brute force on its basis.
pub fn gf2_elements(i: &Ideal) -> Vec<Element> {
    let basis: Vec<Element> = i.basis().collect();
    let len = i.space().ambient();
    (0u64..(1u64 << basis.len()))
        .map(|mask| {
            let mut v = vec![0u32; len];
            for (k, b) in basis.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    for (x, y) in v.iter_mut().zip(b.coeffs()) {
                        *x ^= y;
                    }
                }
            }
            Element::from_coeffs(v)
        })
        .collect()
}
