use alloc::vec::Vec;

use super::lfun::{degree2_terms, l_degree2, l_rankin4};
use super::petersson::{petersson_norm, stored_norm};
use super::real::{Ctx, Real};
use crate::critical::{main_identity, rankin_g20_value, two_delta_product, CriticalValueResult, PeterssonFactors, CRITICAL_RANGE};
use crate::qexp::{delta_qexp, rankin_coeffs};
use crate::Result;

/// Values as printed in the published tables, for `s = 12, …, 19`.
pub mod published {
    /// `L(s-9, Δ) L(s-10, Δ)` from the exact column times `⟨Δ,Δ⟩`.
    pub const TWO_DELTA: [&str; 8] = [
        "0.046143339818118", "0.158130732552033", "0.334433094416363", "0.528115574483468",
        "0.694972239760782", "0.816559651925946", "0.895457859377812", "0.942700248523234",
    ];
    /// `L(s, Δ⊗g20)` from the exact column times `⟨g20,g20⟩`.
    pub const RANKIN: [&str; 8] = [
        "5.380003562880315", "5.618889612918517", "3.513063561721911", "1.981288433718698",
        "1.303635536350500", "1.072197252248449", "1.007825020916877", "0.994683426196918",
    ];
    /// `L(s, F12, spin)` from the exact column times both norms.
    pub const SPIN: [&str; 8] = [
        "0.248251332624670", "0.888519130619814", "1.174884717828030", "1.046349279390801",
        "0.905990508529256", "0.875513015091950", "0.902464835857626", "0.937688313077777",
    ];
    /// Direct numerical evaluation of `L(s-9, Δ) L(s-10, Δ)`.
    pub const TWO_DELTA_DIRECT: [&str; 8] = [
        "0.046143339853964", "0.158130732674877", "0.334433094676168", "0.528115574893734",
        "0.694972240300672", "0.816559652560290", "0.895457860073449", "0.942700249255570",
    ];
    /// Direct numerical evaluation of `L(s, Δ⊗g20)`.
    pub const RANKIN_DIRECT: [&str; 8] = [
        "5.38000356288032", "5.61888961291852", "3.51306356172191", "1.98128843371870",
        "1.30363553635050", "1.07219725224845", "1.00782502091688", "0.99468342619692",
    ];
    /// Direct numerical evaluation of the spin L-value.
    pub const SPIN_DIRECT: [&str; 8] = [
        "0.24825133281752", "0.88851913131006", "1.17488471874074", "1.04634928020366",
        "0.90599050923308", "0.87551301577209", "0.90246483655871", "0.93768831380622",
    ];
    /// Norms with the number of digits used for the exact columns.
    pub const DELTA_NORM_SHORT: &str = "0.000001035362056";
    pub const G20_NORM_SHORT: &str = "0.00000826554153165970";
}

/// Where the Petersson norms come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormSource {
    /// The 40-digit constants.
    Stored,
    /// Recomputed at the working precision.
    Fresh,
}

/// What the direct numerical values are compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reference {
    /// The printed 15-digit renderings of the exact columns.
    Published,
    /// Our own rendering of the exact values with the chosen norms.
    Exact,
}

#[derive(Debug, Clone)]
pub struct Norms {
    pub delta: Real,
    pub g20: Real,
}

impl Norms {
    pub fn new(source: NormSource, ctx: &Ctx) -> Result<Self> {
        match source {
            NormSource::Stored => Ok(Self { delta: stored_norm(12, ctx)?, g20: stored_norm(20, ctx)? }),
            NormSource::Fresh => Ok(Self {
                delta: petersson_norm(12, 4, ctx)?.value,
                g20: petersson_norm(20, 8, ctx)?.value,
            }),
        }
    }

    fn factor(&self, f: PeterssonFactors) -> Real {
        match f {
            PeterssonFactors::DeltaDelta => self.delta.clone(),
            PeterssonFactors::G20G20 => self.g20.clone(),
            PeterssonFactors::Both => &self.delta * &self.g20,
        }
    }
}

/// `rational · π^e · norms` at the context precision.
pub fn render_exact(r: &CriticalValueResult, norms: &Norms, ctx: &Ctx) -> Real {
    ctx.pi_value(&r.value()) * norms.factor(r.petersson_factors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `L(s-9, Δ) L(s-10, Δ)`.
    TwoDelta,
    /// `L(s, Δ⊗g20)`.
    Rankin,
    /// `L(s, F12, spin)`, the product of the other two.
    Spin,
}

impl Branch {
    pub const ALL: [Branch; 3] = [Branch::TwoDelta, Branch::Rankin, Branch::Spin];

    pub fn label(self) -> &'static str {
        match self {
            Branch::TwoDelta => "two-delta",
            Branch::Rankin => "rankin",
            Branch::Spin => "spin",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BranchCheck {
    pub branch: Branch,
    pub exact: CriticalValueResult,
    /// The exact value rendered with the chosen norms.
    pub rendered: Real,
    pub direct: Real,
    /// The value `direct` is compared against.
    pub reference: Real,
    pub rel_diff: Real,
}

#[derive(Debug, Clone)]
pub struct VerificationRow {
    pub s: i64,
    pub checks: Vec<BranchCheck>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub digits: u32,
    pub coefficients: usize,
    pub reference: Reference,
    pub norms: Norms,
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn max_rel_diff(&self) -> f64 {
        self.checks().map(|c| c.rel_diff.to_f64()).fold(0.0, f64::max)
    }

    /// `(s, branch)` pairs whose relative difference exceeds `tol`.
    pub fn failures(&self, tol: f64) -> Vec<(i64, Branch)> {
        self.rows
            .iter()
            .flat_map(|r| r.checks.iter().map(move |c| (r.s, c)))
            .filter(|(_, c)| {
                let d = c.rel_diff.to_f64();
                d.is_nan() || d > tol
            })
            .map(|(s, c)| (s, c.branch))
            .collect()
    }

    fn checks(&self) -> impl Iterator<Item = &BranchCheck> {
        self.rows.iter().flat_map(|r| r.checks.iter())
    }
}

/// Compares every exact critical value with a direct numerical evaluation.
///
/// The degree-2 values use at least 12 coefficients and as many more as the
/// tail bound asks for; the Rankin values use exactly `m`.
pub fn verify_tables(ctx: &Ctx, m: usize, norms: &Norms, reference: Reference) -> Result<VerificationReport> {
    let delta_terms = (2..=10).map(|s| degree2_terms(12, s as f64, ctx.digits())).max().unwrap_or(12).max(12);
    let delta = delta_qexp(delta_terms);
    let rankin = rankin_coeffs(m);
    let mut rows = Vec::new();
    for (i, s) in CRITICAL_RANGE.enumerate() {
        let l1 = l_degree2(&delta, 12, &ctx.int(s - 9), ctx, delta_terms)?;
        let l2 = l_degree2(&delta, 12, &ctx.int(s - 10), ctx, delta_terms)?;
        let two = l1 * l2;
        let rk = l_rankin4(&rankin, s, ctx, m)?;
        let spin = &two * &rk;
        let exact = [two_delta_product(s)?, rankin_g20_value(s)?, main_identity(s)?];
        let published = [published::TWO_DELTA[i], published::RANKIN[i], published::SPIN[i]];
        let checks = Branch::ALL
            .iter()
            .zip(exact)
            .zip([two, rk, spin])
            .zip(published)
            .map(|(((&branch, exact), direct), printed)| {
                let rendered = render_exact(&exact, norms, ctx);
                let reference = match reference {
                    Reference::Published => ctx.parse(printed),
                    Reference::Exact => rendered.clone(),
                };
                let rel_diff = ((&direct - &reference) / &reference).abs();
                BranchCheck { branch, exact, rendered, direct, reference, rel_diff }
            })
            .collect();
        rows.push(VerificationRow { s, checks });
    }
    Ok(VerificationReport { digits: ctx.digits(), coefficients: m, reference, norms: norms.clone(), rows })
}
