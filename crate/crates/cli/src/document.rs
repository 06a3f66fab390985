//! The versioned JSON tensor document.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use ybe_core::{Cplx, GlTensor2, Rat, ScalarKind};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    /// "p/q" or "p".
    Rational(String),
    /// [re, im].
    Complex([f64; 2]),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub pipeline: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_sign: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation_drift: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorDocument {
    pub schema_version: u32,
    pub n: usize,
    pub scalar: String,
    pub terms: Vec<Term>,
    pub provenance: Provenance,
}

fn terms_of<S: ybe_core::Scalar>(t: &GlTensor2<S>, f: impl Fn(&S) -> Coeff) -> Vec<Term> {
    t.terms()
        .iter()
        .map(|(&[i, j, k, l], c)| Term { i, j, k, l, coeff: f(c) })
        .collect()
}

impl TensorDocument {
    pub fn from_rational(t: &GlTensor2<Rat>, provenance: Provenance) -> Self {
        TensorDocument {
            schema_version: SCHEMA_VERSION,
            n: t.n(),
            scalar: ScalarKind::Rational.as_str().into(),
            terms: terms_of(t, |c| Coeff::Rational(c.to_string())),
            provenance,
        }
    }

    pub fn from_complex(t: &GlTensor2<Cplx>, provenance: Provenance) -> Self {
        TensorDocument {
            schema_version: SCHEMA_VERSION,
            n: t.n(),
            scalar: ScalarKind::Complex.as_str().into(),
            terms: terms_of(t, |c| Coeff::Complex([c.re, c.im])),
            provenance,
        }
    }

    pub fn to_json(&self) -> CliResult<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> CliResult<Self> {
        let doc: TensorDocument = serde_json::from_str(s)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::Invalid(format!("unsupported schema version {}", doc.schema_version)));
        }
        Ok(doc)
    }

    pub fn to_rational(&self) -> CliResult<GlTensor2<Rat>> {
        let mut entries = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = match &t.coeff {
                Coeff::Rational(s) => parse_rational(s)?,
                Coeff::Complex(_) => return Err(CliError::Invalid("complex coefficient in a rational document".into())),
            };
            entries.push(([t.i, t.j, t.k, t.l], c));
        }
        Ok(GlTensor2::from_terms(self.n, entries)?)
    }

    pub fn to_complex(&self) -> CliResult<GlTensor2<Cplx>> {
        let mut entries = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = match &t.coeff {
                Coeff::Complex([re, im]) => Cplx::new(*re, *im),
                Coeff::Rational(s) => {
                    let r = parse_rational(s)?;
                    Cplx::new(ybe_core::scalar::rat_to_f64(&r), 0.0)
                }
            };
            entries.push(([t.i, t.j, t.k, t.l], c));
        }
        Ok(GlTensor2::from_terms(self.n, entries)?)
    }
}

/// Accepts "p", "p/q" and finite decimals "a.b".
pub fn parse_rational(s: &str) -> CliResult<Rat> {
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(CliError::Invalid(format!("not a rational number: {s:?}")));
        }
        let digits = format!("{int}{frac}");
        let num = num_bigint::BigInt::from_str(&digits).map_err(|_| CliError::Invalid(format!("not a rational number: {s:?}")))?;
        let den = num_bigint::BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(Rat::new(num, den));
    }
    match s.split_once('/') {
        Some((_, den)) if den.trim_start_matches(['+', '-']).chars().all(|c| c == '0') => {
            Err(CliError::Invalid(format!("zero denominator in {s:?}")))
        }
        _ => Rat::from_str(s).map_err(|_| CliError::Invalid(format!("not a rational number: {s:?}"))),
    }
}

/// Accepts "a", "bi", "a+bi", "a-bi", with "i" alone meaning 1i.
pub fn parse_complex(s: &str) -> CliResult<Cplx> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::Invalid(format!("not a complex number: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| Cplx::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not an exponent sign or the leading one
    let bytes = body.as_bytes();
    let mut cut = None;
    for idx in (1..bytes.len()).rev() {
        if (bytes[idx] == b'+' || bytes[idx] == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
            cut = Some(idx);
            break;
        }
    }
    let imag = |p: &str| -> CliResult<f64> {
        match p {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => p.parse::<f64>().map_err(|_| bad()),
        }
    };
    match cut {
        Some(idx) => Ok(Cplx::new(body[..idx].parse::<f64>().map_err(|_| bad())?, imag(&body[idx..])?)),
        None => Ok(Cplx::new(0.0, imag(body)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ybe_core::rat;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("-2").unwrap(), rat(-2, 1));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn complexes() {
        assert_eq!(parse_complex("0.3+1i").unwrap(), Cplx::new(0.3, 1.0));
        assert_eq!(parse_complex("i").unwrap(), Cplx::new(0.0, 1.0));
        assert_eq!(parse_complex("-2i").unwrap(), Cplx::new(0.0, -2.0));
        assert_eq!(parse_complex("1e-3-0.5i").unwrap(), Cplx::new(1e-3, -0.5));
        assert_eq!(parse_complex("0.7").unwrap(), Cplx::new(0.7, 0.0));
        assert!(parse_complex("abc").is_err());
    }
}
