//! Documents produced by each subcommand, independent of the output format.

use serde::{Deserialize, Serialize};
use spinval_core::critical::{main_identity, projection_coeffs, rankin_g20_value, two_delta_product, CRITICAL_RANGE};
use spinval_core::numeric::{
    petersson_norm, render_exact, stored_norm, verify_tables, Branch, Ctx, NormSource, Norms, Reference,
};
use spinval_core::qexp::{delta_qexp, g20_qexp, rankin_coeffs};

use crate::record::{factored, OutputRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Form {
    Delta,
    G20,
    Rankin,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormStrings {
    pub delta_delta: String,
    pub g20_g20: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub table: u8,
    pub rows: Vec<OutputRecord>,
    pub petersson: NormStrings,
    pub precision_digits: u32,
    /// Dirichlet coefficients behind freshly computed norms; 0 with stored ones.
    pub coefficients_used: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub n: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientDocument {
    pub form: String,
    pub rows: Vec<CoefficientRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub s: i64,
    pub branch: String,
    pub factored: String,
    pub pi_exponent: i64,
    pub exact_numeric: String,
    pub direct: String,
    pub reference: String,
    pub rel_diff: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub rows: Vec<VerifyRecord>,
    pub petersson: NormStrings,
    pub precision_digits: u32,
    pub coefficients_used: usize,
    pub norms: String,
    pub against: String,
    pub tolerance: String,
    pub max_rel_diff: String,
    pub passed: bool,
}

pub fn norm_label(source: NormSource) -> &'static str {
    match source {
        NormSource::Stored => "stored",
        NormSource::Fresh => "fresh",
    }
}

pub fn reference_label(reference: Reference) -> &'static str {
    match reference {
        Reference::Published => "published",
        Reference::Exact => "exact",
    }
}

fn norms_with_count(source: NormSource, ctx: &Ctx) -> spinval_core::Result<(Norms, usize)> {
    match source {
        NormSource::Stored => Ok((Norms { delta: stored_norm(12, ctx)?, g20: stored_norm(20, ctx)? }, 0)),
        NormSource::Fresh => {
            let d = petersson_norm(12, 4, ctx)?;
            let g = petersson_norm(20, 8, ctx)?;
            let used = d.terms.max(g.terms);
            Ok((Norms { delta: d.value, g20: g.value }, used))
        }
    }
}

fn norm_strings(norms: &Norms, ctx: &Ctx) -> NormStrings {
    NormStrings {
        delta_delta: norms.delta.to_decimal(ctx.digits(), ctx),
        g20_g20: norms.g20.to_decimal(ctx.digits(), ctx),
    }
}

/// Tables 1–4: the holomorphic-projection coefficients, then the exact
/// critical values of `L(s-9,Δ)L(s-10,Δ)`, `L(s,Δ⊗g20)` and the spin
/// L-function.
pub fn table(which: u8, ctx: &Ctx, source: NormSource) -> spinval_core::Result<TableDocument> {
    let (norms, used) = norms_with_count(source, ctx)?;
    let digits = ctx.digits();
    let mut rows = Vec::new();
    match which {
        1 => {
            for s in 3..=10 {
                let p = projection_coeffs(s)?;
                for (label, v) in [("A1", &p.a1), ("A2", &p.a2)] {
                    let (q, e) = v.as_monomial()?;
                    let numeric = ctx.pi_value(v).to_decimal(digits, ctx);
                    rows.push(OutputRecord::new(s, Some(label), q, e, numeric));
                }
            }
        }
        2..=4 => {
            for s in CRITICAL_RANGE {
                let r = match which {
                    2 => two_delta_product(s)?,
                    3 => rankin_g20_value(s)?,
                    _ => main_identity(s)?,
                };
                let numeric = render_exact(&r, &norms, ctx).to_decimal(digits, ctx);
                rows.push(OutputRecord::new(s, None, &r.rational, r.pi_exponent, numeric));
            }
        }
        _ => {
            return Err(spinval_core::Error::OutOfRange { what: "table", value: which as i64, range: "1..=4" });
        }
    }
    Ok(TableDocument {
        table: which,
        rows,
        petersson: norm_strings(&norms, ctx),
        precision_digits: digits,
        coefficients_used: used,
    })
}

/// `a(1), …, a(n_max)`.
pub fn coefficients(form: Form, n_max: usize) -> CoefficientDocument {
    let (name, values) = match form {
        Form::Delta => ("delta", delta_qexp(n_max).integer_coeffs().expect("integral")[1..].to_vec()),
        Form::G20 => ("g20", g20_qexp(n_max).integer_coeffs().expect("integral")[1..].to_vec()),
        Form::Rankin => ("rankin", rankin_coeffs(n_max).values().to_vec()),
    };
    CoefficientDocument {
        form: name.to_owned(),
        rows: values
            .iter()
            .enumerate()
            .map(|(i, v)| CoefficientRow { n: i + 1, value: v.to_string() })
            .collect(),
    }
}

pub fn verify(
    ctx: &Ctx,
    m: usize,
    source: NormSource,
    reference: Reference,
    tol: f64,
) -> spinval_core::Result<VerifyDocument> {
    let (norms, _) = norms_with_count(source, ctx)?;
    let report = verify_tables(ctx, m, &norms, reference)?;
    let digits = ctx.digits();
    let short = |x: f64| format!("{x:.3e}");
    let rows = report
        .rows
        .iter()
        .flat_map(|row| {
            row.checks.iter().map(move |c| {
                let diff = c.rel_diff.to_f64();
                VerifyRecord {
                    s: row.s,
                    branch: c.branch.label().to_owned(),
                    factored: factored(&c.exact.rational),
                    pi_exponent: c.exact.pi_exponent,
                    exact_numeric: c.rendered.to_decimal(digits, ctx),
                    direct: c.direct.to_decimal(digits, ctx),
                    reference: c.reference.to_decimal(digits, ctx),
                    rel_diff: short(diff),
                    pass: diff <= tol,
                }
            })
        })
        .collect::<Vec<_>>();
    let passed = rows.iter().all(|r| r.pass);
    debug_assert_eq!(rows.len(), 8 * Branch::ALL.len());
    Ok(VerifyDocument {
        rows,
        petersson: norm_strings(&norms, ctx),
        precision_digits: digits,
        coefficients_used: m,
        norms: norm_label(source).to_owned(),
        against: reference_label(reference).to_owned(),
        tolerance: short(tol),
        max_rel_diff: short(report.max_rel_diff()),
        passed,
    })
}
