//! Ring files: one declaration per line, `#` starts a comment.
//!
//! ```text
//! field 2
//! vars x y
//! rel x^3
//! rel y^3
//! rel x*y
//! truncate 6      # optional
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// Exponent vector over the presentation's variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = e;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Index of the variable if this is a pure power `v^e` with `e >= 1`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut support = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, _) = support.next()?;
        support.next().is_none().then_some(i)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn display<'a>(&'a self, vars: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, vars }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    vars: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.vars[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Textual model of `F_p[vars] / <relations>` (optionally truncated).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingPresentation {
    field: PrimeField,
    vars: Vec<String>,
    relations: Vec<Monomial>,
    truncate: Option<u32>,
    nonnilpotent: Vec<bool>,
}

impl RingPresentation {
    pub fn new(
        p: u64,
        vars: Vec<String>,
        relations: Vec<Monomial>,
        truncate: Option<u32>,
    ) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let n = vars.len();
        let mut relations = relations;
        for r in &relations {
            assert_eq!(r.0.len(), n, "relation arity");
            if r.degree() <= 1 {
                return Err(Error::DegreeOneRelation(r.display(&vars).to_string()));
            }
        }
        relations.sort();
        relations.dedup();
        if let Some(t) = truncate {
            if t < 2 {
                return Err(Error::DegreeOneRelation(format!("truncate {t}")));
            }
        }
        let nonnilpotent: Vec<bool> = (0..n)
            .map(|i| !relations.iter().any(|r| r.pure_power_of() == Some(i)))
            .collect();
        if truncate.is_none() {
            if let Some(i) = nonnilpotent.iter().position(|&b| b) {
                return Err(Error::InfiniteDimensional(vars[i].clone()));
            }
        }
        Ok(RingPresentation { field, vars, relations, truncate, nonnilpotent })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::default().parse(text)
    }

    /// Same ring with a different (or new) truncation degree.
    pub fn with_truncate(&self, truncate: Option<u32>) -> Result<Self> {
        Self::new(self.field.p() as u64, self.vars.clone(), self.relations.clone(), truncate)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn relations(&self) -> &[Monomial] {
        &self.relations
    }

    pub fn truncate(&self) -> Option<u32> {
        self.truncate
    }

    /// Per variable: true iff no pure power of it is a relation.
    pub fn nonnilpotent_flags(&self) -> &[bool] {
        &self.nonnilpotent
    }

    /// Whether monomial `m` is nilpotent in the untruncated ring: some power
    /// of it is divisible by a relation, i.e. some relation's support lies
    /// inside the support of `m`.
    pub fn monomial_is_nilpotent(&self, m: &Monomial) -> bool {
        if m.degree() == 0 {
            return false;
        }
        self.relations
            .iter()
            .any(|r| r.support().all(|i| m.0[i] > 0))
    }

    /// Whether `m` is a standard monomial (nonzero in the algebra).
    pub fn is_standard(&self, m: &Monomial) -> bool {
        if let Some(t) = self.truncate {
            if m.degree() >= t {
                return false;
            }
        }
        !self.relations.iter().any(|r| r.divides(m))
    }

    /// Render back into ring-file syntax.
    pub fn to_ring_file(&self) -> String {
        let mut out = format!("field {}\nvars {}\n", self.field.p(), self.vars.join(" "));
        for r in &self.relations {
            out.push_str(&format!("rel {}\n", r.display(&self.vars)));
        }
        if let Some(t) = self.truncate {
            out.push_str(&format!("truncate {t}\n"));
        }
        out
    }
}

#[derive(Default)]
struct Parser {
    field: Option<u64>,
    vars: Option<Vec<String>>,
    relations: Vec<(Monomial, usize, usize)>,
    truncate: Option<u32>,
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, col, message: message.into() }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits a line into whitespace-separated words with their 1-based columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

impl Parser {
    fn parse(mut self, text: &str) -> Result<RingPresentation> {
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("");
            let ws = words(line);
            let Some(&(kcol, keyword)) = ws.first() else { continue };
            let args = &ws[1..];
            match keyword {
                "field" => {
                    if self.field.is_some() {
                        return Err(syntax(line_no, kcol, "duplicate `field` declaration"));
                    }
                    let [(col, arg)] = args else {
                        return Err(syntax(line_no, kcol, "expected `field <prime>`"));
                    };
                    let p: u64 = arg
                        .parse()
                        .map_err(|_| syntax(line_no, *col, format!("invalid field size `{arg}`")))?;
                    PrimeField::new(p)?;
                    self.field = Some(p);
                }
                "vars" => {
                    if self.vars.is_some() {
                        return Err(syntax(line_no, kcol, "duplicate `vars` declaration"));
                    }
                    if args.is_empty() {
                        return Err(syntax(line_no, kcol, "expected at least one variable"));
                    }
                    let mut names: Vec<String> = Vec::new();
                    for &(col, name) in args {
                        let mut chars = name.chars();
                        let ok = chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char);
                        if !ok {
                            return Err(syntax(line_no, col, format!("invalid variable name `{name}`")));
                        }
                        if names.iter().any(|n| n == name) {
                            return Err(syntax(line_no, col, format!("duplicate variable `{name}`")));
                        }
                        names.push(name.to_string());
                    }
                    self.vars = Some(names);
                }
                "rel" => {
                    let Some(vars) = &self.vars else {
                        return Err(syntax(line_no, kcol, "`rel` before `vars`"));
                    };
                    let Some(&(start_col, _)) = args.first() else {
                        return Err(syntax(line_no, kcol, "expected a monomial after `rel`"));
                    };
                    let text = &line[start_col - 1..];
                    let mono = parse_monomial(text, vars, line_no, start_col)?;
                    self.relations.push((mono, line_no, start_col));
                }
                "truncate" => {
                    if self.truncate.is_some() {
                        return Err(syntax(line_no, kcol, "duplicate `truncate` declaration"));
                    }
                    let [(col, arg)] = args else {
                        return Err(syntax(line_no, kcol, "expected `truncate <N>`"));
                    };
                    let t: u32 = arg
                        .parse()
                        .map_err(|_| syntax(line_no, *col, format!("invalid truncation degree `{arg}`")))?;
                    self.truncate = Some(t);
                }
                other => {
                    return Err(syntax(line_no, kcol, format!("unknown declaration `{other}`")));
                }
            }
        }
        let p = self.field.ok_or_else(|| syntax(last_line + 1, 1, "missing `field` declaration"))?;
        let vars = self.vars.ok_or_else(|| syntax(last_line + 1, 1, "missing `vars` declaration"))?;
        let relations = self.relations.into_iter().map(|(m, _, _)| m).collect();
        RingPresentation::new(p, vars, relations, self.truncate)
    }
}

/// `monomial := term ('*' term)*`, `term := var ('^' positive-int)?`
fn parse_monomial(text: &str, vars: &[String], line: usize, col0: usize) -> Result<Monomial> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut mono = Monomial::one(vars.len());
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        let start = pos;
        if pos >= chars.len() || !is_ident_start(chars[pos]) {
            return Err(syntax(line, col0 + pos, "expected a variable"));
        }
        while pos < chars.len() && is_ident_char(chars[pos]) {
            pos += 1;
        }
        let name: String = chars[start..pos].iter().collect();
        let Some(vi) = vars.iter().position(|v| *v == name) else {
            return Err(syntax(line, col0 + start, format!("unknown variable `{name}`")));
        };
        skip_ws(&mut pos);
        let mut exp = 1u32;
        if pos < chars.len() && chars[pos] == '^' {
            pos += 1;
            skip_ws(&mut pos);
            let s = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits: String = chars[s..pos].iter().collect();
            exp = match digits.parse::<u32>() {
                Ok(e) if e > 0 => e,
                _ => return Err(syntax(line, col0 + s, "expected a positive exponent")),
            };
            skip_ws(&mut pos);
        }
        mono.0[vi] += exp;
        if pos >= chars.len() {
            break;
        }
        if chars[pos] != '*' {
            return Err(syntax(line, col0 + pos, format!("unexpected `{}`", chars[pos])));
        }
        pos += 1;
    }
    Ok(mono)
}
