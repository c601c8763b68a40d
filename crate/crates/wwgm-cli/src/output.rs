//! Machine-readable output. Coefficients are serialized as exact rational
//! strings; formal-unit exponents appear as explicit power fields (omitted
//! when zero, except the always-present hbar power). Floating-point numbers
//! appear only in the numerical-oracle reports.

use num_traits::One;
use serde::Serialize;

use wwgm::diffop::DiffOp;
use wwgm::fock::{DerivativeReport, FdReport, FockReport};
use wwgm::oppoly::OpPoly;
use wwgm::ordering::OrderExpansion;
use wwgm::phasepoly::PhasePoly;
use wwgm::scalar::{Coeff, Powers, Rat, Scalar};
use wwgm::verify::Check;
use wwgm::winfinity::{CentralExtensionReport, GeneratorRow, IsomorphismReport};

fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn is_zero_u32(v: &u32) -> bool {
    *v == 0
}

#[derive(Serialize)]
pub struct ScalarTermJson {
    pub re: String,
    pub im: String,
    pub hbar_pow: u32,
    #[serde(skip_serializing_if = "is_zero_u32")]
    pub s_pow: u32,
    #[serde(skip_serializing_if = "is_zero_u32")]
    pub r_pow: u32,
}

fn scalar_terms(s: &Scalar) -> Vec<(Powers, Coeff)> {
    let mut v: Vec<_> = s.terms().map(|(p, c)| (*p, c.clone())).collect();
    v.reverse();
    v
}

pub fn scalar_json(s: &Scalar) -> Vec<ScalarTermJson> {
    scalar_terms(s)
        .into_iter()
        .map(|(p, c)| ScalarTermJson {
            re: rat_str(&c.re),
            im: rat_str(&c.im),
            hbar_pow: p.hbar,
            s_pow: p.s,
            r_pow: p.r,
        })
        .collect()
}

#[derive(Serialize)]
pub struct OpTermJson {
    pub n: u32,
    pub m: u32,
    pub re: String,
    pub im: String,
    pub hbar_pow: u32,
    #[serde(skip_serializing_if = "is_zero_u32")]
    pub s_pow: u32,
    #[serde(skip_serializing_if = "is_zero_u32")]
    pub r_pow: u32,
}

#[derive(Serialize)]
pub struct OpJson {
    pub terms: Vec<OpTermJson>,
}

pub fn op_json(op: &OpPoly) -> OpJson {
    let mut terms = Vec::new();
    let mut keys: Vec<_> = op.terms().map(|(k, c)| (*k, c.clone())).collect();
    keys.reverse();
    for ((n, m), c) in keys {
        for (p, coeff) in scalar_terms(&c) {
            terms.push(OpTermJson {
                n,
                m,
                re: rat_str(&coeff.re),
                im: rat_str(&coeff.im),
                hbar_pow: p.hbar,
                s_pow: p.s,
                r_pow: p.r,
            });
        }
    }
    OpJson { terms }
}

#[derive(Serialize)]
pub struct PhaseTermJson {
    pub a: u32,
    pub b: u32,
    pub re: String,
    pub im: String,
    pub hbar_pow: u32,
    #[serde(skip_serializing_if = "is_zero_u32")]
    pub s_pow: u32,
    #[serde(skip_serializing_if = "is_zero_u32")]
    pub r_pow: u32,
}

#[derive(Serialize)]
pub struct PhaseJson {
    pub vars: &'static str,
    pub terms: Vec<PhaseTermJson>,
}

pub fn phase_json(f: &PhasePoly) -> PhaseJson {
    let mut terms = Vec::new();
    let mut keys: Vec<_> = f.terms().map(|(k, c)| (*k, c.clone())).collect();
    keys.reverse();
    for ((a, b), c) in keys {
        for (p, coeff) in scalar_terms(&c) {
            terms.push(PhaseTermJson {
                a,
                b,
                re: rat_str(&coeff.re),
                im: rat_str(&coeff.im),
                hbar_pow: p.hbar,
                s_pow: p.s,
                r_pow: p.r,
            });
        }
    }
    PhaseJson { vars: f.vars().name(), terms }
}

#[derive(Serialize)]
pub struct DiffTermJson {
    pub v1_pow: u32,
    pub v2_pow: u32,
    pub d1_pow: u32,
    pub d2_pow: u32,
    pub re: String,
    pub im: String,
    pub hbar_pow: u32,
    #[serde(skip_serializing_if = "is_zero_u32")]
    pub s_pow: u32,
    #[serde(skip_serializing_if = "is_zero_u32")]
    pub r_pow: u32,
}

#[derive(Serialize)]
pub struct DiffJson {
    pub vars: &'static str,
    pub terms: Vec<DiffTermJson>,
}

pub fn diff_json(d: &DiffOp) -> DiffJson {
    let mut terms = Vec::new();
    let mut keys: Vec<_> = d.terms().map(|(k, c)| (*k, c.clone())).collect();
    keys.reverse();
    for ((a, b, c, e), coeffs) in keys {
        for (p, coeff) in scalar_terms(&coeffs) {
            terms.push(DiffTermJson {
                v1_pow: a,
                v2_pow: b,
                d1_pow: c,
                d2_pow: e,
                re: rat_str(&coeff.re),
                im: rat_str(&coeff.im),
                hbar_pow: p.hbar,
                s_pow: p.s,
                r_pow: p.r,
            });
        }
    }
    DiffJson { vars: d.vars().name(), terms }
}

#[derive(Serialize)]
pub struct ExpansionTermJson {
    pub k: u32,
    pub coeff: Vec<ScalarTermJson>,
}

#[derive(Serialize)]
pub struct ExpansionJson {
    pub n: u32,
    pub m: u32,
    pub terms: Vec<ExpansionTermJson>,
}

pub fn expansion_json(e: &OrderExpansion) -> ExpansionJson {
    ExpansionJson {
        n: e.n,
        m: e.m,
        terms: e
            .terms
            .iter()
            .map(|(k, c)| ExpansionTermJson { k: *k, coeff: scalar_json(c) })
            .collect(),
    }
}

pub fn expansion_text(e: &OrderExpansion) -> String {
    if e.terms.is_empty() {
        return "0".to_string();
    }
    e.terms
        .iter()
        .map(|(k, c)| format!("({}) * t[{},{}]", c, e.n - k, e.m - k))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Serialize)]
pub struct TableRowJson {
    pub n: u32,
    pub m: u32,
    pub op: OpJson,
    pub generator: DiffJson,
}

pub fn table_json(rows: &[GeneratorRow]) -> Vec<TableRowJson> {
    rows.iter()
        .map(|row| TableRowJson {
            n: row.n,
            m: row.m,
            op: op_json(&row.op),
            generator: diff_json(&row.gamma),
        })
        .collect()
}

#[derive(Serialize)]
pub struct IsomorphismJson {
    pub pass: bool,
    pub lhs: PhaseJson,
    pub rhs: PhaseJson,
    pub difference: PhaseJson,
}

pub fn isomorphism_json(rep: &IsomorphismReport) -> IsomorphismJson {
    IsomorphismJson {
        pass: rep.pass,
        lhs: phase_json(&rep.lhs),
        rhs: phase_json(&rep.rhs),
        difference: phase_json(&rep.difference),
    }
}

#[derive(Serialize)]
pub struct CentralExtensionJson {
    pub pass: bool,
    pub central_charge: Vec<ScalarTermJson>,
    pub commutator: DiffJson,
    pub expected: DiffJson,
}

pub fn central_extension_json(rep: &CentralExtensionReport) -> CentralExtensionJson {
    CentralExtensionJson {
        pass: rep.pass,
        central_charge: scalar_json(&rep.central_charge),
        commutator: diff_json(&rep.commutator),
        expected: diff_json(&rep.expected),
    }
}

#[derive(Serialize)]
pub struct FockReportJson {
    pub pass: bool,
    pub deviation: f64,
    pub tol: f64,
    pub detail: String,
}

pub fn fock_report_json(rep: &FockReport) -> FockReportJson {
    FockReportJson {
        pass: rep.pass,
        deviation: rep.deviation,
        tol: rep.tol,
        detail: rep.detail.clone(),
    }
}

#[derive(Serialize)]
pub struct FdReportJson {
    pub pass: bool,
    pub err_h: f64,
    pub err_half_h: f64,
    pub ratio: f64,
    pub tol: f64,
    pub detail: String,
}

fn fd_json(rep: &FdReport) -> FdReportJson {
    FdReportJson {
        pass: rep.pass,
        err_h: rep.err_h,
        err_half_h: rep.err_half_h,
        ratio: rep.ratio,
        tol: rep.tol,
        detail: rep.detail.clone(),
    }
}

#[derive(Serialize)]
pub struct DerivativeJson {
    pub basis_derivative: FdReportJson,
    pub generator_action: FdReportJson,
}

pub fn derivative_json(rep: &DerivativeReport) -> DerivativeJson {
    DerivativeJson {
        basis_derivative: fd_json(&rep.basis_derivative),
        generator_action: fd_json(&rep.generator_action),
    }
}

#[derive(Serialize)]
pub struct CheckJson {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub pass: bool,
    pub checks: Vec<CheckJson>,
}

pub fn verify_json(checks: &[Check]) -> VerifyJson {
    VerifyJson {
        pass: checks.iter().all(|c| c.pass),
        checks: checks
            .iter()
            .map(|c| CheckJson { name: c.name, pass: c.pass, detail: c.detail.clone() })
            .collect(),
    }
}
