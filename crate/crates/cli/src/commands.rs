//! One function per subcommand; each returns what goes to stdout.

use std::path::Path;

use serde::Serialize;
use ybe_core::cuspidal::{assemble_r, build_j};
use ybe_core::elliptic::{resolve_v_sign, BelavinR, ThetaContext};
use ybe_core::stolin::assemble_stolin_r;
use ybe_core::{require_coprime, Cplx, Matrix, Rat};

use crate::document::{parse_rational, Provenance, TensorDocument};
use crate::emit;
use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Debug, PartialEq)]
pub enum KChoice {
    Default,
    NegJ,
    File(String),
}

impl std::str::FromStr for KChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "default" => KChoice::Default,
            "neg-j" => KChoice::NegJ,
            path => KChoice::File(path.to_string()),
        })
    }
}

pub fn render(doc: &TensorDocument, format: Format) -> CliResult<String> {
    match format {
        Format::Json => doc.to_json(),
        Format::Latex => emit::latex(doc),
        Format::Text => Ok(emit::text(doc)),
    }
}

#[derive(Serialize)]
struct JDoc {
    e: usize,
    d: usize,
    n: usize,
    matrix: Vec<Vec<u8>>,
}

pub fn cmd_jmatrix(e: usize, d: usize, format: Format) -> CliResult<String> {
    require_coprime(e, d)?;
    let j = build_j(e, d)?;
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&JDoc { e, d, n: j.n(), matrix: j.grid() })?),
        Format::Text | Format::Latex => Ok(j.to_string()),
    }
}

fn split_n_d(n: usize, d: usize) -> CliResult<(usize, usize)> {
    if d == 0 || d >= n {
        return Err(CliError::Invalid(format!("need 0 < d < n, got n={n}, d={d}")));
    }
    require_coprime(n, d)?;
    Ok((n - d, d))
}

fn distinct(x: &Rat, y: &Rat) -> CliResult<()> {
    if x == y {
        return Err(CliError::Invalid("x and y must differ".into()));
    }
    Ok(())
}

fn params(pairs: &[(&str, String)]) -> std::collections::BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

pub fn rational_document(n: usize, d: usize, x: &Rat, y: &Rat) -> CliResult<TensorDocument> {
    let (e, d) = split_n_d(n, d)?;
    distinct(x, y)?;
    let r = assemble_r(e, d, x, y)?;
    let provenance = Provenance {
        pipeline: "cuspidal".into(),
        parameters: params(&[("n", n.to_string()), ("d", d.to_string()), ("e", e.to_string()), ("x", x.to_string()), ("y", y.to_string())]),
        ..Provenance::default()
    };
    Ok(TensorDocument::from_rational(&r, provenance))
}

/// Reads K from a JSON array of rows; entries may be integers or rational strings.
pub fn read_k_file(path: &Path, n: usize) -> CliResult<Matrix<Rat>> {
    let raw = std::fs::read_to_string(path)?;
    let rows: Vec<Vec<serde_json::Value>> = serde_json::from_str(&raw)?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let mut r = Vec::with_capacity(row.len());
        for v in row {
            r.push(match v {
                serde_json::Value::String(s) => parse_rational(&s)?,
                serde_json::Value::Number(num) => parse_rational(&num.to_string())?,
                other => return Err(CliError::Invalid(format!("bad K entry {other}"))),
            });
        }
        out.push(r);
    }
    let k = Matrix::from_rows(out).map_err(|e| CliError::Invalid(e.to_string()))?;
    if k.rows() != n || k.cols() != n {
        return Err(CliError::Invalid(format!("K must be {n}x{n}, got {}x{}", k.rows(), k.cols())));
    }
    Ok(k)
}

pub fn stolin_document(n: usize, e: usize, k: &KChoice, x: &Rat, y: &Rat) -> CliResult<TensorDocument> {
    if e == 0 || e >= n {
        return Err(CliError::Invalid(format!("need 0 < e < n, got n={n}, e={e}")));
    }
    require_coprime(n, e)?;
    distinct(x, y)?;
    let d = n - e;
    let j = build_j(e, d)?.m;
    let (kmat, label) = match k {
        KChoice::Default => (j, "default".to_string()),
        KChoice::NegJ => (j.scale(&-Rat::from_integer(1.into())), "neg-j".to_string()),
        KChoice::File(path) => (read_k_file(Path::new(path), n)?, format!("file:{path}")),
    };
    let r = assemble_stolin_r(e, d, &kmat, x, y)?;
    let provenance = Provenance {
        pipeline: "stolin".into(),
        parameters: params(&[("n", n.to_string()), ("e", e.to_string()), ("k", label), ("x", x.to_string()), ("y", y.to_string())]),
        ..Provenance::default()
    };
    Ok(TensorDocument::from_rational(&r, provenance))
}

pub fn elliptic_document(n: usize, d: usize, tau: Cplx, x: Cplx, y: Cplx, terms: usize) -> CliResult<TensorDocument> {
    if d == 0 || d >= n {
        return Err(CliError::Invalid(format!("need 0 < d < n, got n={n}, d={d}")));
    }
    require_coprime(n, d)?;
    if x == y {
        return Err(CliError::Invalid("x and y must differ".into()));
    }
    let ctx = ThetaContext::with_terms(tau, terms, ThetaContext::DEFAULT_TOL).map_err(|e| CliError::Invalid(e.to_string()))?;
    let sign = resolve_v_sign(n, d, &ctx)?;
    let r = BelavinR::with_sign(n, d, ctx, sign.chosen)?;
    let tensor = r.at(x, y)?;
    let drift = r.truncation_drift(sign.chosen.apply(x, y))?;
    let provenance = Provenance {
        pipeline: "elliptic".into(),
        parameters: params(&[
            ("n", n.to_string()),
            ("d", d.to_string()),
            ("tau", format!("{tau}")),
            ("x", format!("{x}")),
            ("y", format!("{y}")),
        ]),
        v_sign: Some(sign.chosen.as_str().into()),
        truncation: Some(terms),
        truncation_drift: Some(drift),
    };
    Ok(TensorDocument::from_complex(&tensor, provenance))
}
