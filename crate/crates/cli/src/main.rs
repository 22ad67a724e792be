use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dscring_core::corpus;
use dscring_core::oracle::Oracle;
use dscring_core::report::{CensusLine, DecompositionReport, SpecSummary, VerdictReport};
use dscring_core::structure::{classify_dsc, classify_product, spec_classify, Answer, SearchBounds};
use dscring_core::{decompose_ideal, Algebra, DscVerdict, Error, RingPresentation};

const EXIT_NO: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;
const EXIT_ERROR: u8 = 3;

/// Decide whether every ideal of a finite local ring is a direct sum of
/// cyclic modules.
#[derive(Parser, Debug)]
#[command(name = "dscring", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Override (or add) the truncation degree of every ring file.
    #[arg(long, global = true, value_name = "N")]
    truncate: Option<u32>,
    /// Largest dim(M) for the exhaustive witness search.
    #[arg(long, global = true, value_name = "D", default_value_t = 12,
          value_parser = clap::value_parser!(u32).range(1..))]
    max_dim: u32,
    /// Largest dim(M) for the ideal census.
    #[arg(long, global = true, value_name = "D", default_value_t = 8,
          value_parser = clap::value_parser!(u32).range(1..))]
    max_oracle_dim: u32,
}

impl Global {
    fn bounds(&self) -> SearchBounds {
        SearchBounds {
            max_search_dim: self.max_dim as usize,
            max_oracle_dim: self.max_oracle_dim as usize,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one ring, or the product of several.
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Decompose an ideal into cyclic summands.
    Decompose {
        file: PathBuf,
        /// Comma-separated generators, e.g. "x + y, x^2".
        #[arg(long)]
        ideal: String,
    },
    /// Describe the prime spectrum.
    Spec { file: PathBuf },
    /// List every ideal with its decomposition lengths.
    Oracle { file: PathBuf },
    /// Run the bundled regression corpus.
    Corpus {
        /// Corpus key or group; everything when omitted.
        selector: Option<String>,
        #[arg(long)]
        no_oracle: bool,
        #[arg(long, value_name = "DIR")]
        corpus_dir: Option<PathBuf>,
    },
}

fn load(path: &Path, g: &Global) -> Result<Algebra, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut pres = RingPresentation::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if g.truncate.is_some() {
        pres = pres.with_truncate(g.truncate).map_err(|e| e.to_string())?;
    }
    Algebra::build(&pres).map_err(|e| format!("{}: {e}", path.display()))
}

fn print_json<T: serde::Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("report serializes"));
}

fn exit_for(a: Answer) -> ExitCode {
    match a {
        Answer::Yes => ExitCode::SUCCESS,
        Answer::No => ExitCode::from(EXIT_NO),
        Answer::UndecidedBySearch => ExitCode::from(EXIT_UNDECIDED),
    }
}

fn print_verdict(r: &VerdictReport) {
    println!("dsc: {}", r.dsc);
    if let Some(w) = &r.witness {
        print_witness(w, "");
    }
    if let Some(c) = &r.counterexample {
        if let Some(k) = c.factor {
            println!("failing factor: {k}");
        }
        println!("counterexample: span{{{}}}", c.basis.join(", "));
        if !c.generators.is_empty() {
            println!("  generated by: {}", c.generators.join(", "));
        }
        println!("  proof: {}", serde_json::to_value(c.proof).expect("token").as_str().unwrap_or(""));
    }
    if let Some(s) = &r.spec {
        print_spec(s);
    }
    for n in &r.notes {
        println!("note: {n}");
    }
}

fn print_witness(w: &dscring_core::report::WitnessReport, indent: &str) {
    use dscring_core::report::WitnessReport;
    match w {
        WitnessReport::Local { x, y, simples, summand_dims } => {
            let mut parts: Vec<String> = x.iter().chain(y.iter()).map(|g| format!("R({g})")).collect();
            parts.extend(simples.iter().map(|g| format!("R({g})")));
            let shown = if parts.is_empty() { "(0)".to_string() } else { parts.join(" ⊕ ") };
            println!("{indent}witness: M = {shown}");
            println!("{indent}  summand dims: {summand_dims:?}");
        }
        WitnessReport::Product { factors } => {
            for (k, f) in factors.iter().enumerate() {
                println!("{indent}factor {k}:");
                print_witness(f, &format!("{indent}  "));
            }
        }
    }
}

fn print_spec(s: &SpecSummary) {
    println!("spec case: {}", s.case);
    println!("primes: {{{}}}", s.primes.join(", "));
    println!("krull dimension: {}", s.krull_dim);
    if s.truncated_model {
        println!("note: computed on a truncated model; primes describe the untruncated ring");
    }
}

fn classify(files: &[PathBuf], g: &Global) -> Result<ExitCode, String> {
    let algs = files.iter().map(|f| load(f, g)).collect::<Result<Vec<_>, _>>()?;
    let verdicts: Vec<DscVerdict> = algs.iter().map(|a| classify_dsc(a, &g.bounds())).collect();
    let refs: Vec<&Algebra> = algs.iter().collect();
    let (verdict, spec) = if algs.len() == 1 {
        let v = verdicts.into_iter().next().expect("one file");
        let spec = v.local_witness().and_then(|w| spec_classify(&algs[0], w).ok());
        (v, spec)
    } else {
        match classify_product(&verdicts) {
            Ok(v) => (v, None),
            Err(Error::FactorUndecided(k)) => {
                let mut v = verdicts[k].clone();
                v.notes.push(format!("factor {k} ({}) is undecided", files[k].display()));
                (v, None)
            }
            Err(e) => return Err(e.to_string()),
        }
    };
    let report = VerdictReport::new(&refs, &verdict, spec.as_ref());
    if g.json {
        print_json(&report);
    } else {
        print_verdict(&report);
    }
    Ok(exit_for(verdict.answer))
}

fn decompose(file: &Path, ideal: &str, g: &Global) -> Result<ExitCode, String> {
    let alg = load(file, g)?;
    let gens = alg.parse_elements(ideal).map_err(|e| format!("--ideal: {e}"))?;
    let i = alg.ideal_from_generators(&gens).map_err(|e| e.to_string())?;
    let v = classify_dsc(&alg, &g.bounds());
    let w = match (v.answer, v.local_witness()) {
        (_, Some(w)) => w,
        (Answer::No, _) => return Err(Error::NotDsc.to_string()),
        _ => return Err(Error::NoWitness.to_string()),
    };
    let d = decompose_ideal(&alg, w, &i).map_err(|e| e.to_string())?;
    let r = DecompositionReport::new(&alg, &i, &d).map_err(|e| e.to_string())?;
    if g.json {
        print_json(&r);
    } else {
        println!("ideal: span{{{}}}", r.ideal.join(", "));
        println!("branch: {}", r.branch);
        if let Some(n) = r.n0 {
            println!("n0: {n}{}", r.lx.as_ref().map(|l| format!(" (l = {l})")).unwrap_or_default());
        }
        if let Some(m) = r.m0 {
            println!("m0: {m}{}", r.ly.as_ref().map(|l| format!(" (l = {l})")).unwrap_or_default());
        }
        if !r.trusted {
            println!("note: exponents reach the truncation degree and may be artifacts");
        }
        println!("length: {}", r.generators.len());
        for ((gen, simple), dim) in r.generators.iter().zip(&r.simple).zip(&r.dims) {
            println!("  R({gen})  dim {dim}{}", if *simple { "  simple" } else { "" });
        }
        println!("certificate: dims {:?} sum to {}", r.dims, r.ideal.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn spec(file: &Path, g: &Global) -> Result<ExitCode, String> {
    let alg = load(file, g)?;
    let v = classify_dsc(&alg, &g.bounds());
    let w = v.local_witness().ok_or_else(|| Error::NoWitness.to_string())?;
    let r = spec_classify(&alg, w).map_err(|e| e.to_string())?;
    let s = SpecSummary::from(&r);
    if g.json {
        print_json(&s);
    } else {
        print_spec(&s);
    }
    Ok(ExitCode::SUCCESS)
}

fn oracle(file: &Path, g: &Global) -> Result<ExitCode, String> {
    let alg = load(file, g)?;
    let mut o = Oracle::new(&alg, g.max_oracle_dim as usize).map_err(|e| e.to_string())?;
    let census = o.census();
    for e in &census.entries {
        let line = CensusLine::new(&alg, e);
        if g.json {
            println!("{}", serde_json::to_string(&line).expect("census line serializes"));
        } else {
            let lengths = match (line.min_length, line.max_length) {
                (Some(a), Some(b)) if a == b => a.to_string(),
                (Some(a), Some(b)) => format!("{a}..{b}"),
                _ => "-".into(),
            };
            println!("dim {:>2}  length {:>4}  span{{{}}}", line.dim, lengths, line.basis.join(", "));
        }
    }
    if !g.json {
        println!("{} ideals", census.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn run_corpus(selector: Option<&str>, no_oracle: bool, dir: Option<&Path>, g: &Global) -> Result<ExitCode, String> {
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(corpus::default_dir);
    let outcomes = corpus::run(&dir, selector, &g.bounds(), !no_oracle).map_err(|e| e.to_string())?;
    if g.json {
        print_json(&outcomes);
    } else {
        let width = outcomes.iter().map(|o| o.key.len()).max().unwrap_or(0);
        for o in &outcomes {
            let oracle = match o.oracle_agrees {
                Some(true) => "oracle agrees".to_string(),
                Some(false) => "oracle disagrees".to_string(),
                None => o.notes.join("; "),
            };
            println!("{:<width$}  {}  {oracle}", o.key, if o.pass { "pass" } else { "FAIL" });
            for d in &o.diffs {
                println!("{:<width$}    {d}", "");
            }
        }
    }
    let ok = outcomes.iter().all(|o| o.pass);
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_NO) })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage errors share the generic error status; 2 means undecided.
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let g = &cli.global;
    let result = match &cli.command {
        Command::Classify { files } => classify(files, g),
        Command::Decompose { file, ideal } => decompose(file, ideal, g),
        Command::Spec { file } => spec(file, g),
        Command::Oracle { file } => oracle(file, g),
        Command::Corpus { selector, no_oracle, corpus_dir } => {
            run_corpus(selector.as_deref(), *no_oracle, corpus_dir.as_deref(), g)
        }
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_ERROR)
    })
}
