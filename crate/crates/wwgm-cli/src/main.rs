//! Command-line interface: every kernel operation behind a subcommand, with
//! text or JSON output. Exit codes: 0 success, 1 check failure, 2 usage or
//! parse error.

mod output;
mod parser;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_traits::ToPrimitive;

use wwgm::correspondence::{
    bopp, bopp_symbol, quantize, symbol, BoppBasis, BoppSpec, Side, Which,
};
use wwgm::fock::{
    derivative_check, displacement_check, generator_commutator_check, route_agreement_check,
    FockConfig,
};
use wwgm::oppoly::Algebra;
use wwgm::ordering::{convert_order, hermitian_combo, s_ordered, symmetrize_oracle};
use wwgm::phasepoly::VarPair;
use wwgm::scalar::{Coeff, Scalar};
use wwgm::star::{evolve, moyal, moyal_series, poisson, star, PoissonConvention};
use wwgm::verify;
use wwgm::winfinity::{central_extension_report, generator_table, isomorphism_check};

use output as out;
use parser::{parse_gauss, parse_op, parse_phase};

#[derive(Parser)]
#[command(
    name = "wwgm",
    about = "Exact s-ordered operator calculus, star products, and their phase-space realizations",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Also write the output to a file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Cap on carrier exponents (degree overflow beyond it).
    #[arg(long, global = true)]
    max_degree: Option<u32>,

    /// Value substituted for hbar in symbolic outputs: a rational, or
    /// "symbolic" to keep it formal.
    #[arg(long, global = true, default_value = "symbolic", allow_hyphen_values = true)]
    hbar: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    Qp,
    Aadag,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Algebra {
        match a {
            AlgebraArg::Qp => Algebra::Qp,
            AlgebraArg::Aadag => Algebra::AAdag,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Paper,
    Standard,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    D,
    Delta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    L,
    R,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    Q,
    P,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VarsArg {
    #[value(name = "qp")]
    Qp,
    #[value(name = "xi_eta")]
    XiEta,
    #[value(name = "z_zbar")]
    SmallZ,
    #[value(name = "Z_Zbar")]
    BigZ,
}

impl From<VarsArg> for VarPair {
    fn from(v: VarsArg) -> VarPair {
        match v {
            VarsArg::Qp => VarPair::Qp,
            VarsArg::XiEta => VarPair::XiEta,
            VarsArg::SmallZ => VarPair::SmallZ,
            VarsArg::BigZ => VarPair::BigZ,
        }
    }
}

#[derive(Args)]
struct SFlag {
    /// Ordering parameter: rational/Gaussian-rational literal or "symbolic".
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    s: String,
}

#[derive(Args)]
struct RFlag {
    /// Second ordering parameter: literal or "symbolic".
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    r: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// s-ordered product of generator powers.
    Order {
        n: u32,
        m: u32,
        #[command(flatten)]
        s: SFlag,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Qp)]
        algebra: AlgebraArg,
    },
    /// Expansion of the s-ordered product over the r-ordered basis.
    Convert {
        n: u32,
        m: u32,
        #[command(flatten)]
        s: SFlag,
        /// Target ordering parameter: literal or "symbolic".
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        r: String,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Qp)]
        algebra: AlgebraArg,
    },
    /// Average over all generator words (the symmetrization oracle).
    Symmetrize {
        n: u32,
        m: u32,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Qp)]
        algebra: AlgebraArg,
    },
    /// Hermitian combination of ordered products at a concrete parameter.
    Hermitian {
        n: u32,
        m: u32,
        /// Mixing coefficient (Gaussian-rational literal).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Qp)]
        algebra: AlgebraArg,
    },
    /// s-parametrized star product of two symbols.
    Star {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        s: SFlag,
    },
    /// s-Moyal bracket of two symbols.
    Moyal {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        s: SFlag,
    },
    /// Low-order expansion of the s-Moyal bracket.
    Series {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        s: SFlag,
        #[arg(long, default_value_t = 3)]
        order: u32,
    },
    /// Poisson bracket.
    Poisson {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::Paper)]
        convention: ConventionArg,
    },
    /// Quantization map: symbol to operator at ordering s.
    Quantize {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[command(flatten)]
        s: SFlag,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Qp)]
        algebra: AlgebraArg,
    },
    /// Symbol map: operator to symbol at ordering s.
    Symbol {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[command(flatten)]
        s: SFlag,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Qp)]
        algebra: AlgebraArg,
    },
    /// Hermitian conjugate of an operator expression.
    Adjoint {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Qp)]
        algebra: AlgebraArg,
    },
    /// Normal-ordered product of two operator expressions.
    Opmul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Qp)]
        algebra: AlgebraArg,
    },
    /// One s-parametrized Bopp operator.
    Bopp {
        #[arg(long, value_enum)]
        basis: BasisArg,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum)]
        which: WhichArg,
        #[command(flatten)]
        s: SFlag,
        /// Coordinate pair; defaults to the basis's real pair.
        #[arg(long, value_enum)]
        vars: Option<VarsArg>,
    },
    /// Symbol of the r-ordered product via the Bopp route.
    Bsymbol {
        n: u32,
        m: u32,
        #[command(flatten)]
        r: RFlag,
        #[command(flatten)]
        s: SFlag,
    },
    /// Weyl-basis generator as a differential operator on (xi, eta).
    Tgen {
        n: u32,
        m: u32,
        #[command(flatten)]
        r: RFlag,
        #[command(flatten)]
        s: SFlag,
    },
    /// Wigner-basis generator as a differential operator on (q, p).
    Gamma {
        n: u32,
        m: u32,
        #[command(flatten)]
        r: RFlag,
        #[command(flatten)]
        s: SFlag,
    },
    /// Table of (ordered product, Weyl-basis generator) rows.
    Ttable {
        #[arg(long, default_value_t = 2)]
        max: u32,
        #[command(flatten)]
        r: RFlag,
        #[command(flatten)]
        s: SFlag,
    },
    /// Table of (ordered product, Wigner-basis generator) rows.
    Wtable {
        #[arg(long, default_value_t = 2)]
        max: u32,
        #[command(flatten)]
        r: RFlag,
        #[command(flatten)]
        s: SFlag,
    },
    /// Bracket isomorphism and central-extension reports for one quadruple.
    Wcheck {
        n: u32,
        m: u32,
        k: u32,
        l: u32,
        #[command(flatten)]
        r: RFlag,
        #[command(flatten)]
        s: SFlag,
    },
    /// Taylor coefficients of the bracket flow generated by a Hamiltonian.
    Evolve {
        #[arg(allow_hyphen_values = true)]
        hamiltonian: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        order: u32,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        s: String,
    },
    /// Numerical checks on the truncated oscillator matrices.
    Fock {
        #[command(subcommand)]
        sub: FockCmd,
    },
    /// Run the full invariant suite; exit 0 iff every check passes.
    Verify,
}

#[derive(Args)]
struct FockCommon {
    /// Truncation dimension.
    #[arg(long = "fock-n", default_value_t = 64)]
    fock_n: usize,
    /// Override the comparison rank (default: dimension - 8).
    #[arg(long)]
    rank: Option<usize>,
    /// Override the check tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Numeric value of hbar (rational literal).
    #[arg(long, default_value = "1")]
    hbar: String,
}

#[derive(Subcommand)]
enum FockCmd {
    /// Projected commutation relations of the generator matrices.
    Gens {
        #[command(flatten)]
        common: FockCommon,
    },
    /// Numeric agreement of the two ordered-product routes.
    Routes {
        #[command(flatten)]
        common: FockCommon,
        #[arg(long, default_value_t = 4)]
        max: u32,
        #[arg(long, default_value = "0")]
        s: String,
    },
    /// Displacement covariance of an operator expression.
    Displacement {
        #[command(flatten)]
        common: FockCommon,
        #[arg(long, allow_negative_numbers = true)]
        xi: f64,
        #[arg(long, allow_negative_numbers = true)]
        eta: f64,
        /// Operator expression (operator mode over the canonical pair).
        #[arg(long, default_value = "Q*P")]
        f: String,
    },
    /// Finite-difference derivative identities of the displacement basis.
    Derivative {
        #[command(flatten)]
        common: FockCommon,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        r: String,
        #[arg(long, default_value_t = 0.2, allow_negative_numbers = true)]
        xi0: f64,
        #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
        eta0: f64,
        #[arg(long, default_value_t = 1e-4)]
        step: f64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<parser::ParseError> for Failure {
    fn from(e: parser::ParseError) -> Failure {
        usage(e.to_string())
    }
}

impl From<wwgm::Error> for Failure {
    fn from(e: wwgm::Error) -> Failure {
        usage(e.to_string())
    }
}

struct Outcome {
    body: String,
    failed_check: bool,
}

impl Outcome {
    fn ok(body: String) -> Outcome {
        Outcome { body, failed_check: false }
    }
}

fn json_body<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization is infallible")
}

/// Parse an ordering-parameter flag: "symbolic" maps to the given formal
/// unit, anything else must be a concrete Gaussian rational.
fn scalar_flag(text: &str, symbolic_unit: Scalar) -> Result<Scalar, Failure> {
    if text == "symbolic" {
        Ok(symbolic_unit)
    } else {
        Ok(Scalar::from_coeff(parse_gauss(text)?))
    }
}

fn gauss_flag(text: &str, flag: &str) -> Result<Coeff, Failure> {
    parse_gauss(text).map_err(|e| usage(format!("--{flag}: {e}")))
}

fn hbar_subst(cli_hbar: &str) -> Result<Option<Coeff>, Failure> {
    if cli_hbar == "symbolic" {
        Ok(None)
    } else {
        Ok(Some(gauss_flag(cli_hbar, "hbar")?))
    }
}

fn f64_flag(text: &str, flag: &str) -> Result<f64, Failure> {
    let c = gauss_flag(text, flag)?;
    if !c.im.to_f64().unwrap_or(0.0).eq(&0.0) {
        return Err(usage(format!("--{flag}: expected a real value")));
    }
    c.re.to_f64()
        .ok_or_else(|| usage(format!("--{flag}: out of range")))
}

fn c64_flag(text: &str, flag: &str) -> Result<Complex64, Failure> {
    let c = gauss_flag(text, flag)?;
    match (c.re.to_f64(), c.im.to_f64()) {
        (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
        _ => Err(usage(format!("--{flag}: out of range"))),
    }
}

fn fock_config(common: &FockCommon) -> Result<FockConfig, Failure> {
    let mut cfg = FockConfig::new(common.fock_n);
    cfg.hbar = f64_flag(&common.hbar, "hbar")?;
    if let Some(rank) = common.rank {
        cfg.proj_rank = rank;
    }
    cfg.tol = common.tol;
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    if let Some(cap) = cli.max_degree {
        wwgm::set_degree_cap(cap);
    }
    let hbar = hbar_subst(&cli.hbar)?;
    let sub_op = |v: wwgm::OpPoly| match &hbar {
        Some(h) => v.subst_hbar(h),
        None => v,
    };
    let sub_phase = |v: wwgm::PhasePoly| match &hbar {
        Some(h) => v.subst_hbar(h),
        None => v,
    };
    let sub_diff = |v: wwgm::DiffOp| match &hbar {
        Some(h) => v.subst_hbar(h),
        None => v,
    };
    let emit_op = |v: wwgm::OpPoly| {
        let v = sub_op(v);
        Ok(Outcome::ok(match cli.format {
            Format::Text => v.to_string(),
            Format::Json => json_body(&out::op_json(&v)),
        }))
    };
    let emit_phase = |v: wwgm::PhasePoly| {
        let v = sub_phase(v);
        Ok(Outcome::ok(match cli.format {
            Format::Text => v.to_string(),
            Format::Json => json_body(&out::phase_json(&v)),
        }))
    };
    let emit_diff = |v: wwgm::DiffOp| {
        let v = sub_diff(v);
        Ok(Outcome::ok(match cli.format {
            Format::Text => v.to_string(),
            Format::Json => json_body(&out::diff_json(&v)),
        }))
    };

    match &cli.cmd {
        Cmd::Order { n, m, s, algebra } => {
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            emit_op(s_ordered(*n, *m, &s, (*algebra).into())?)
        }
        Cmd::Convert { n, m, s, r, algebra } => {
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            let r = scalar_flag(r, Scalar::sym_r())?;
            let e = convert_order(*n, *m, &s, &r, (*algebra).into());
            Ok(Outcome::ok(match cli.format {
                Format::Text => out::expansion_text(&e),
                Format::Json => json_body(&out::expansion_json(&e)),
            }))
        }
        Cmd::Symmetrize { n, m, algebra } => {
            emit_op(symmetrize_oracle(*n, *m, (*algebra).into())?)
        }
        Cmd::Hermitian { n, m, alpha, s, algebra } => {
            let alpha = gauss_flag(alpha, "alpha")?;
            let s = gauss_flag(s, "s")?;
            emit_op(hermitian_combo(*n, *m, &s, &alpha, (*algebra).into())?)
        }
        Cmd::Star { f, g, s } => {
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            emit_phase(star(&parse_phase(f)?, &parse_phase(g)?, &s)?)
        }
        Cmd::Moyal { f, g, s } => {
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            emit_phase(moyal(&parse_phase(f)?, &parse_phase(g)?, &s)?)
        }
        Cmd::Series { f, g, s, order } => {
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            emit_phase(moyal_series(&parse_phase(f)?, &parse_phase(g)?, &s, *order)?)
        }
        Cmd::Poisson { f, g, convention } => {
            let conv = match convention {
                ConventionArg::Paper => PoissonConvention::Paper,
                ConventionArg::Standard => PoissonConvention::Standard,
            };
            emit_phase(poisson(&parse_phase(f)?, &parse_phase(g)?, conv)?)
        }
        Cmd::Quantize { f, s, algebra } => {
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            if Algebra::from(*algebra) == Algebra::AAdag {
                return Err(usage(
                    "quantize over the boson pair takes scaled complex symbols, which the \
                     expression grammar does not name; use the library API for that route",
                ));
            }
            emit_op(quantize(&parse_phase(f)?, &s)?)
        }
        Cmd::Symbol { a, s, algebra } => {
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            emit_phase(symbol(&parse_op(a, (*algebra).into())?, &s))
        }
        Cmd::Adjoint { a, algebra } => {
            emit_op(parse_op(a, (*algebra).into())?.adjoint()?)
        }
        Cmd::Opmul { a, b, algebra } => {
            let algebra: Algebra = (*algebra).into();
            emit_op(parse_op(a, algebra)?.mul(&parse_op(b, algebra)?)?)
        }
        Cmd::Bopp { basis, side, which, s, vars } => {
            let basis = match basis {
                BasisArg::D => BoppBasis::D,
                BasisArg::Delta => BoppBasis::Delta,
            };
            let vars: VarPair = match vars {
                Some(v) => (*v).into(),
                None => match basis {
                    BoppBasis::D => VarPair::XiEta,
                    BoppBasis::Delta => VarPair::Qp,
                },
            };
            let spec = BoppSpec {
                basis,
                side: match side {
                    SideArg::L => Side::Left,
                    SideArg::R => Side::Right,
                },
                which: match which {
                    WhichArg::Q => Which::Q,
                    WhichArg::P => Which::P,
                },
                s: scalar_flag(&s.s, Scalar::sym_s())?,
                vars,
            };
            emit_diff(bopp(&spec)?)
        }
        Cmd::Bsymbol { n, m, r, s } => {
            let r = scalar_flag(&r.r, Scalar::sym_r())?;
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            emit_phase(bopp_symbol(*n, *m, &r, &s)?)
        }
        Cmd::Tgen { n, m, r, s } => {
            let r = scalar_flag(&r.r, Scalar::sym_r())?;
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            emit_diff(wwgm::correspondence::t_generator(*n, *m, &r, &s)?)
        }
        Cmd::Gamma { n, m, r, s } => {
            let r = scalar_flag(&r.r, Scalar::sym_r())?;
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            emit_diff(wwgm::correspondence::gamma_generator(*n, *m, &r, &s)?)
        }
        Cmd::Ttable { max, r, s } | Cmd::Wtable { max, r, s } => {
            let weyl_basis = matches!(cli.cmd, Cmd::Ttable { .. });
            let r = scalar_flag(&r.r, Scalar::sym_r())?;
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            let mut rows = Vec::new();
            for row in generator_table(&r, &s, *max, *max)? {
                if row.n + row.m > *max {
                    continue;
                }
                let generator = if weyl_basis {
                    wwgm::correspondence::t_generator(row.n, row.m, &r, &s)?
                } else {
                    row.gamma
                };
                rows.push(wwgm::winfinity::GeneratorRow {
                    n: row.n,
                    m: row.m,
                    op: sub_op(row.op),
                    gamma: sub_diff(generator),
                });
            }
            Ok(Outcome::ok(match cli.format {
                Format::Json => json_body(&out::table_json(&rows)),
                Format::Text => {
                    let label = if weyl_basis { "T" } else { "Gamma" };
                    let mut body = String::new();
                    for row in &rows {
                        let _ = writeln!(
                            body,
                            "t[{},{}] = {}\n{}[{},{}] = {}",
                            row.n, row.m, row.op, label, row.n, row.m, row.gamma
                        );
                    }
                    body.trim_end().to_string()
                }
            }))
        }
        Cmd::Wcheck { n, m, k, l, r, s } => {
            let r = scalar_flag(&r.r, Scalar::sym_r())?;
            let s = scalar_flag(&s.s, Scalar::sym_s())?;
            let iso = isomorphism_check(*n, *m, *k, *l, &s)?;
            let ext = central_extension_report(*n, *m, *k, *l, &r, &s)?;
            let failed = !(iso.pass && ext.pass);
            let body = match cli.format {
                Format::Json => json_body(&serde_json::json!({
                    "isomorphism": out::isomorphism_json(&iso),
                    "central_extension": out::central_extension_json(&ext),
                })),
                Format::Text => {
                    let mut body = String::new();
                    let _ = writeln!(
                        body,
                        "isomorphism {}: bracket action = {}",
                        if iso.pass { "PASS" } else { "FAIL" },
                        iso.lhs
                    );
                    if !iso.pass {
                        let _ = writeln!(body, "  difference = {}", iso.difference);
                    }
                    let _ = writeln!(
                        body,
                        "central extension {}: charge = {}",
                        if ext.pass { "PASS" } else { "FAIL" },
                        ext.central_charge
                    );
                    body.trim_end().to_string()
                }
            };
            Ok(Outcome { body, failed_check: failed })
        }
        Cmd::Evolve { hamiltonian, f, order, s } => {
            let s = scalar_flag(s, Scalar::sym_s())?;
            let coeffs = evolve(&parse_phase(hamiltonian)?, &parse_phase(f)?, &s, *order)?;
            let coeffs: Vec<_> = coeffs.into_iter().map(sub_phase).collect();
            Ok(Outcome::ok(match cli.format {
                Format::Json => json_body(&serde_json::json!({
                    "coefficients": coeffs.iter().map(out::phase_json).collect::<Vec<_>>(),
                })),
                Format::Text => coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| format!("t^{k}: {c}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            }))
        }
        Cmd::Fock { sub } => run_fock(cli, sub),
        Cmd::Verify => {
            let checks = verify::run_all();
            let failed = checks.iter().any(|c| !c.pass);
            let body = match cli.format {
                Format::Json => json_body(&out::verify_json(&checks)),
                Format::Text => {
                    let mut body = String::new();
                    for c in &checks {
                        let _ = writeln!(
                            body,
                            "{} {} - {}",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        );
                    }
                    let _ = write!(
                        body,
                        "{} of {} checks passed",
                        checks.iter().filter(|c| c.pass).count(),
                        checks.len()
                    );
                    body
                }
            };
            Ok(Outcome { body, failed_check: failed })
        }
    }
}

fn run_fock(cli: &Cli, sub: &FockCmd) -> Result<Outcome, Failure> {
    match sub {
        FockCmd::Gens { common } => {
            let cfg = fock_config(common)?;
            let rep = generator_commutator_check(&cfg)?;
            fock_outcome(cli, &rep)
        }
        FockCmd::Routes { common, max, s } => {
            let cfg = fock_config(common)?;
            let s_val = f64_flag(s, "s")?;
            let mut worst: Option<wwgm::fock::FockReport> = None;
            for n in 0..=*max {
                for m in 0..=*max {
                    let rep = route_agreement_check(n, m, s_val, &cfg)?;
                    if worst.as_ref().is_none_or(|w| rep.deviation > w.deviation) {
                        worst = Some(rep);
                    }
                }
            }
            fock_outcome(cli, &worst.expect("at least one index pair"))
        }
        FockCmd::Displacement { common, xi, eta, f } => {
            let cfg = fock_config(common)?;
            let op = parse_op(f, Algebra::Qp)?;
            let op = op.subst_hbar(&gauss_flag(&common.hbar, "hbar")?);
            let rep = displacement_check(*xi, *eta, &op, &cfg)?;
            fock_outcome(cli, &rep)
        }
        FockCmd::Derivative { common, n, m, s, r, xi0, eta0, step } => {
            let cfg = fock_config(common)?;
            let s_val = c64_flag(s, "s")?;
            let r_val = f64_flag(r, "r")?;
            let rep = derivative_check(s_val, (*xi0, *eta0), *step, *n, *m, r_val, &cfg)?;
            let failed = !(rep.basis_derivative.pass && rep.generator_action.pass);
            let body = match cli.format {
                Format::Json => json_body(&out::derivative_json(&rep)),
                Format::Text => format!(
                    "basis derivative {}: err {:.3e} (half-step ratio {:.3})\n\
                     generator action {}: err {:.3e} (half-step ratio {:.3})",
                    if rep.basis_derivative.pass { "PASS" } else { "FAIL" },
                    rep.basis_derivative.err_h,
                    rep.basis_derivative.ratio,
                    if rep.generator_action.pass { "PASS" } else { "FAIL" },
                    rep.generator_action.err_h,
                    rep.generator_action.ratio,
                ),
            };
            Ok(Outcome { body, failed_check: failed })
        }
    }
}

fn fock_outcome(cli: &Cli, rep: &wwgm::fock::FockReport) -> Result<Outcome, Failure> {
    let body = match cli.format {
        Format::Json => json_body(&out::fock_report_json(rep)),
        Format::Text => format!(
            "{}: deviation {:.3e} (tol {:.1e}) - {}",
            if rep.pass { "PASS" } else { "FAIL" },
            rep.deviation,
            rep.tol,
            rep.detail
        ),
    };
    Ok(Outcome { body, failed_check: !rep.pass })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            println!("{}", outcome.body);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, format!("{}\n", outcome.body)) {
                    eprintln!("error writing {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if outcome.failed_check {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
