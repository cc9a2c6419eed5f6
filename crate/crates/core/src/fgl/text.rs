//! Canonical text form of truncated series.
//!
//! Univariate: `c0 + c1*x + c2*x^2 + O(x^5)`, zero terms omitted, the `O`
//! term naming the first unknown degree `D + 1`. Bivariate:
//! `1*x + 1*y + 1*x*y + O((x,y)^5)`, terms by total degree and then by
//! descending power of `x`. Coefficients use the ring's own format.

use crate::error::{HkrError, Result};
use crate::ring::Ring;

use super::multi::MultiSeries;
use super::series::TruncatedSeries;

fn monomial_text(coeff: &str, vars: &[&str], exps: &[u32]) -> String {
    let mut s = coeff.to_string();
    for (v, &e) in vars.iter().zip(exps) {
        match e {
            0 => {}
            1 => s.push_str(&format!("*{v}")),
            e => s.push_str(&format!("*{v}^{e}")),
        }
    }
    s
}

pub fn series_to_text<R: Ring>(f: &TruncatedSeries<R>, var: &str) -> String {
    let r = f.ring();
    let mut terms: Vec<String> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !r.is_zero(c))
        .map(|(i, c)| monomial_text(&r.format(c), &[var], &[i as u32]))
        .collect();
    if terms.is_empty() {
        terms.push("0".into());
    }
    terms.push(format!("O({var}^{})", f.degree() + 1));
    terms.join(" + ")
}

pub fn multi_to_text<R: Ring>(f: &MultiSeries<R>, vars: &[&str]) -> String {
    assert_eq!(vars.len(), f.nvars(), "one name per variable");
    let r = f.ring();
    let mut terms: Vec<String> = f
        .terms()
        .iter()
        .map(|(e, c)| monomial_text(&r.format(c), vars, e))
        .collect();
    if terms.is_empty() {
        terms.push("0".into());
    }
    terms.push(format!("O(({})^{})", vars.join(","), f.degree() + 1));
    terms.join(" + ")
}

/// Split `c*v^i*w^j + ...` into coefficient strings and exponent vectors.
/// A bare monomial such as `x^2` or `-x` has an implicit coefficient.
pub fn parse_monomials(s: &str, vars: &[&str]) -> Option<Vec<(String, Vec<u32>)>> {
    let mut out = Vec::new();
    for raw in s.split('+') {
        let term = raw.trim();
        if term.is_empty() {
            return None;
        }
        let mut exps = vec![0u32; vars.len()];
        let mut coeff = None;
        for (idx, factor) in term.split('*').map(str::trim).enumerate() {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim().parse::<u32>().ok()?),
                None => (factor, 1),
            };
            let (sign, name) = match base.strip_prefix('-') {
                Some(rest) if idx == 0 && vars.contains(&rest.trim()) => ("-1", rest.trim()),
                _ => ("1", base),
            };
            if let Some(pos) = vars.iter().position(|v| *v == name) {
                if idx == 0 {
                    coeff = Some(sign.to_string());
                }
                exps[pos] += exp;
            } else if idx == 0 && factor == base {
                coeff = Some(base.to_string());
            } else {
                return None;
            }
        }
        out.push((coeff?, exps));
    }
    Some(out)
}

/// Univariate form of [`parse_monomials`]: `(coefficient, degree)` pairs.
pub fn parse_terms(s: &str, var: &str) -> Option<Vec<(String, usize)>> {
    Some(
        parse_monomials(s, &[var])?
            .into_iter()
            .map(|(c, e)| (c, e[0] as usize))
            .collect(),
    )
}

fn parse_error(message: impl Into<String>) -> HkrError {
    HkrError::Parse {
        offset: 0,
        message: message.into(),
    }
}

fn split_order_term<'a>(s: &'a str, inner: &str) -> Result<(&'a str, usize)> {
    let s = s.trim();
    let start = s
        .rfind("O(")
        .ok_or_else(|| parse_error("missing truncation term O(...)"))?;
    let tail = s[start + 2..]
        .strip_suffix(')')
        .ok_or_else(|| parse_error("unterminated truncation term"))?;
    let exp = tail
        .trim()
        .strip_prefix(inner)
        .and_then(|t| t.trim().strip_prefix('^'))
        .and_then(|t| t.trim().parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| parse_error(format!("truncation term must read O({inner}^N) with N >= 1")))?;
    let body = s[..start].trim_end();
    let body = body
        .strip_suffix('+')
        .ok_or_else(|| parse_error("expected `+` before the truncation term"))?;
    Ok((body, exp - 1))
}

fn coefficient<R: Ring>(ring: &R, c: &str) -> Result<R::Elem> {
    ring.parse(c)
        .ok_or_else(|| parse_error(format!("bad coefficient `{c}` for {}", ring.kind())))
}

/// Inverse of [`series_to_text`].
pub fn parse_series<R: Ring>(ring: &R, s: &str, var: &str) -> Result<TruncatedSeries<R>> {
    let (body, degree) = split_order_term(s, var)?;
    let terms = parse_terms(body, var).ok_or_else(|| parse_error("malformed term"))?;
    let mut coeffs = vec![ring.zero(); degree + 1];
    for (c, d) in terms {
        let c = coefficient(ring, &c)?;
        if d <= degree {
            coeffs[d] = ring.add(&coeffs[d], &c);
        } else if !ring.is_zero(&c) {
            return Err(parse_error(format!("term of degree {d} beyond the truncation")));
        }
    }
    Ok(TruncatedSeries::new(ring.clone(), coeffs, degree))
}

/// Inverse of [`multi_to_text`].
pub fn parse_multi<R: Ring>(ring: &R, s: &str, vars: &[&str]) -> Result<MultiSeries<R>> {
    let inner = format!("({})", vars.join(","));
    let (body, degree) = split_order_term(s, &inner)?;
    let parsed = parse_monomials(body, vars).ok_or_else(|| parse_error("malformed term"))?;
    let mut terms = Vec::new();
    for (c, e) in parsed {
        let c = coefficient(ring, &c)?;
        if e.iter().sum::<u32>() as usize > degree && !ring.is_zero(&c) {
            return Err(parse_error("term beyond the truncation"));
        }
        terms.push((e, c));
    }
    Ok(MultiSeries::from_terms(ring.clone(), vars.len(), degree, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ModularIntegers, Rationals};

    #[test]
    fn univariate_round_trip() {
        let f = TruncatedSeries::from_ints(Rationals, &[0, -1, 1, 0, 3], 5);
        let t = series_to_text(&f, "x");
        assert_eq!(t, "-1*x + 1*x^2 + 3*x^4 + O(x^6)");
        assert_eq!(parse_series(&Rationals, &t, "x").unwrap(), f);
        let z = TruncatedSeries::zero(Rationals, 2);
        assert_eq!(series_to_text(&z, "x"), "0 + O(x^3)");
        assert_eq!(parse_series(&Rationals, "0 + O(x^3)", "x").unwrap(), z);
    }

    #[test]
    fn bare_monomials_and_modular_coefficients() {
        let m = ModularIntegers::new(2, 3);
        let f = parse_series(&m, "x + -x^2 + 11*x^3 + O(x^4)", "x").unwrap();
        assert_eq!(f.coeffs(), &[0, 1, 7, 3]);
    }

    #[test]
    fn bivariate_round_trip() {
        let f = parse_multi(&Rationals, "x + y + 1*x*y + O((x,y)^3)", &["x", "y"]).unwrap();
        let t = multi_to_text(&f, &["x", "y"]);
        assert_eq!(t, "1*x + 1*y + 1*x*y + O((x,y)^3)");
        assert_eq!(parse_multi(&Rationals, &t, &["x", "y"]).unwrap(), f);
    }

    #[test]
    fn rejects_malformed_text() {
        assert!(parse_series(&Rationals, "1 + x", "x").is_err());
        assert!(parse_series(&Rationals, "1 + x^5 + O(x^3)", "x").is_err());
        assert!(parse_series(&Rationals, "1 + y + O(x^3)", "x").is_err());
        assert!(parse_series(&Rationals, "1 + + x + O(x^3)", "x").is_err());
    }
}
