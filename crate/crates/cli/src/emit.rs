//! LaTeX and plain-text renderings of a tensor document, terms in (i,j,k,l) order.

use crate::document::{parse_rational, Coeff, TensorDocument};
use crate::error::CliResult;

fn unit(i: usize, j: usize) -> String {
    format!("e_{{{i},{j}}}")
}

fn latex_coeff(c: &Coeff) -> CliResult<(bool, String)> {
    Ok(match c {
        Coeff::Rational(s) => {
            let r = parse_rational(s)?;
            let neg = r < num_traits::Zero::zero();
            let a = if neg { -r } else { r };
            let body = if *a.denom() == num_bigint::BigInt::from(1) {
                if *a.numer() == num_bigint::BigInt::from(1) { String::new() } else { a.numer().to_string() }
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            (neg, body)
        }
        Coeff::Complex([re, im]) => (false, format!("({re:e} {} {:e}\\,i)", if *im < 0.0 { '-' } else { '+' }, im.abs())),
    })
}

pub fn latex(doc: &TensorDocument) -> CliResult<String> {
    if doc.terms.is_empty() {
        return Ok("0".into());
    }
    let mut out = String::new();
    for (idx, t) in doc.terms.iter().enumerate() {
        let (neg, body) = latex_coeff(&t.coeff)?;
        let sep = match (idx, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let scale = if body.is_empty() { String::new() } else { format!("{body}\\, ") };
        out.push_str(&format!("{sep}{scale}{} \\otimes {}", unit(t.i, t.j), unit(t.k, t.l)));
    }
    Ok(out)
}

pub fn text(doc: &TensorDocument) -> String {
    let mut out = format!("# n = {}, scalar = {}, pipeline = {}\n", doc.n, doc.scalar, doc.provenance.pipeline);
    for t in &doc.terms {
        let c = match &t.coeff {
            Coeff::Rational(s) => s.clone(),
            Coeff::Complex([re, im]) => format!("{re:+.15e} {im:+.15e}i"),
        };
        out.push_str(&format!("e{}{} (x) e{}{}  {c}\n", t.i, t.j, t.k, t.l));
    }
    out
}
