// Polynomial expressions: `expr := sign? term (sign term)*`,
// `term := factor ('*' factor)*`, `factor := int | var ('^' int)?`.

use super::{Algebra, Element, Monomial};
use crate::error::{Error, Result};

fn err(col: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line: 1, col, message: message.into() }
}

pub(super) fn parse_polynomial(alg: &Algebra, text: &str) -> Result<Element> {
    if alg.presentation().is_none() {
        return Err(Error::AlgebraMismatch);
    }
    let field = alg.field();
    let n = alg.vars().len();
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let mut out = vec![0u32; alg.dim()];

    let skip = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let number = |pos: &mut usize| -> Option<u64> {
        let s = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let digits: String = chars[s..*pos].iter().collect();
        // Reduce digit by digit so long literals cannot overflow.
        (!digits.is_empty()).then(|| {
            digits.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % field.p() as u64)
        })
    };

    skip(&mut pos);
    if pos >= chars.len() {
        return Err(err(1, "empty expression"));
    }
    let mut first = true;
    loop {
        skip(&mut pos);
        let mut negative = false;
        if pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
            negative = chars[pos] == '-';
            pos += 1;
        } else if !first {
            return Err(err(pos + 1, "expected `+` or `-`"));
        }
        first = false;

        let mut coeff = 1u32;
        let mut mono = Monomial::one(n);
        loop {
            skip(&mut pos);
            if pos >= chars.len() {
                return Err(err(pos + 1, "expected a term"));
            }
            let c = chars[pos];
            if c.is_ascii_digit() {
                let v = number(&mut pos).expect("digit present");
                coeff = field.mul(coeff, v as u32);
            } else if c.is_ascii_alphabetic() || c == '_' {
                let s = pos;
                while pos < chars.len() && (chars[pos].is_ascii_alphanumeric() || chars[pos] == '_') {
                    pos += 1;
                }
                let name: String = chars[s..pos].iter().collect();
                let Some(vi) = alg.vars().iter().position(|v| *v == name) else {
                    return Err(err(s + 1, format!("unknown variable `{name}`")));
                };
                skip(&mut pos);
                let mut e = 1u32;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    skip(&mut pos);
                    let s = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let digits: String = chars[s..pos].iter().collect();
                    e = digits.parse().map_err(|_| err(s + 1, "expected an exponent"))?;
                }
                mono.0[vi] = mono.0[vi].saturating_add(e);
            } else {
                return Err(err(pos + 1, format!("unexpected `{c}`")));
            }
            skip(&mut pos);
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        if negative {
            coeff = field.neg(coeff);
        }
        // Non-standard monomials are zero in the algebra.
        if let Some(k) = alg.index_of(&mono) {
            out[k] = field.add(out[k], coeff);
        }
        skip(&mut pos);
        if pos >= chars.len() {
            break;
        }
    }
    Ok(Element::from_coeffs(out))
}
