//! The `bcchow` command line: Bott-Chern forms, symmetric functions, the
//! Chow ring and the arithmetic Chow ring of grassmannians, and the
//! verification suites.

mod expr;
mod verify;

use std::fmt::Write as _;

use bcchow::arakelov::{hat_chern_q, hat_chern_s, normal_form, ArakelovElem, HatPoly};
use bcchow::bottchern::{bc_flat_general, bc_projflat_general, deformation_oracle, ClassSpec, Mode};
use bcchow::json::{arakelov_to_json, bcform_to_json, symf_to_json};
use bcchow::symfunc::box_reduce;
use bcchow::{Basis, IdentityReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use expr::{parse_class_expr, parse_ring_operand, parse_sym_expr};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(message: impl Into<String>) -> Self {
        CommandResult { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {}\n", message.into()) }
    }
}

#[derive(Parser, Debug)]
#[command(name = "bcchow", version, about = "Exact Bott-Chern forms and arithmetic Chow rings of grassmannians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bott-Chern form of an invariant polynomial for the tautological sequence.
    Bc(BcArgs),
    /// Convert a symmetric function between bases, optionally reducing to a box.
    Symf(SymfArgs),
    /// Products in the cohomology ring of G(r, r+s).
    Chow(ChowArgs),
    /// Computations in the arithmetic Chow ring of G(r, r+s).
    Arakelov(ArakelovArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Flat,
    Projflat,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Flat => Mode::Flat,
            ModeArg::Projflat => Mode::ProjFlat,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    E,
    H,
    P,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::E => Basis::E,
            BasisArg::H => Basis::H,
            BasisArg::P => Basis::P,
            BasisArg::S => Basis::S,
        }
    }
}

fn parse_ranks(text: &str) -> Result<(u32, u32), String> {
    let (r, s) = text.split_once(',').ok_or("expected R,S")?;
    let r: u32 = r.trim().parse().map_err(|_| "R must be a positive integer")?;
    let s: u32 = s.trim().parse().map_err(|_| "S must be a positive integer")?;
    if r == 0 || s == 0 {
        return Err("R and S must be positive".into());
    }
    Ok((r, s))
}

#[derive(Args, Debug)]
struct BcArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Invariant polynomial, e.g. `s[2,1]`, `c3`, `ch2 - 1/2*p[1,1]`.
    #[arg(long, allow_hyphen_values = true)]
    phi: String,
    /// Rank of E.
    #[arg(long)]
    n: u32,
    /// Rank of the subbundle S.
    #[arg(long)]
    r: u32,
    /// Evaluate the deformation integral instead of the closed form.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SymfArgs {
    #[arg(allow_hyphen_values = true)]
    expr: String,
    /// Target basis.
    #[arg(long, value_enum, default_value = "s")]
    to: BasisArg,
    /// Reduce to Schubert classes of G(R, R+S).
    #[arg(long = "box", value_name = "R,S", value_parser = parse_ranks)]
    box_ranks: Option<(u32, u32)>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ChowArgs {
    #[arg(long, value_name = "R,S", value_parser = parse_ranks)]
    g: (u32, u32),
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true, required = true)]
    mul: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("op").required(true))]
struct ArakelovArgs {
    #[arg(long, value_name = "R,S", value_parser = parse_ranks)]
    g: (u32, u32),
    /// Product of two operands (`sigma[..]`, `a[..]` or a polynomial in ĉ(Q)).
    #[arg(long, num_args = 2, value_names = ["A", "B"], group = "op", allow_hyphen_values = true)]
    star: Option<Vec<String>>,
    /// Normal form of one operand.
    #[arg(long, value_name = "X", group = "op", allow_hyphen_values = true)]
    normal_form: Option<String>,
    /// k-th arithmetic Chern class of the subbundle.
    #[arg(long, value_name = "K", group = "op")]
    chern_s: Option<u32>,
    /// k-th arithmetic Chern class of the quotient.
    #[arg(long, value_name = "K", group = "op")]
    chern_q: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    Oracle,
    Ring,
    Heights,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Bound for the identity sweeps (default 12) and heights (default 4).
    #[arg(long)]
    max_n: Option<u32>,
    /// Largest weight in the oracle sweep (default 6).
    #[arg(long)]
    max_weight: Option<u32>,
    /// Largest r and s in the oracle and ring sweeps (default 3).
    #[arg(long)]
    max_rank: Option<u32>,
    #[arg(long)]
    json: bool,
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandResult { code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                CommandResult::ok(rendered)
            };
        }
    };
    let outcome = match cli.command {
        Command::Bc(a) => run_bc(a),
        Command::Symf(a) => run_symf(a),
        Command::Chow(a) => run_chow(a),
        Command::Arakelov(a) => run_arakelov(a),
        Command::Verify(a) => return run_verify(a),
    };
    match outcome {
        Ok(stdout) => CommandResult::ok(stdout),
        Err(message) => CommandResult::usage(message),
    }
}

fn line(text: impl std::fmt::Display) -> String {
    format!("{text}\n")
}

fn pretty(value: serde_json::Value) -> String {
    line(serde_json::to_string_pretty(&value).expect("serializable"))
}

fn run_bc(a: BcArgs) -> Result<String, String> {
    let phi = parse_sym_expr(&a.phi)?;
    let spec = ClassSpec::new(&phi, a.n, a.r).map_err(|e| e.to_string())?;
    let mode = Mode::from(a.mode);
    let form = if a.oracle {
        deformation_oracle(&spec, mode)
    } else {
        match mode {
            Mode::Flat => bc_flat_general(&spec),
            Mode::ProjFlat => bc_projflat_general(&spec),
        }
    }
    .map_err(|e| e.to_string())?;
    Ok(if a.json { pretty(bcform_to_json(&form)) } else { line(&form) })
}

fn run_symf(a: SymfArgs) -> Result<String, String> {
    let f = parse_sym_expr(&a.expr)?;
    let out = match a.box_ranks {
        Some((r, s)) => box_reduce(&f, r, s).to_basis(a.to.into()),
        None => f.to_basis(a.to.into()),
    };
    Ok(if a.json { pretty(symf_to_json(&out)) } else { line(&out) })
}

fn run_chow(a: ChowArgs) -> Result<String, String> {
    let (r, s) = a.g;
    let x = box_reduce(&parse_sym_expr(&a.mul[0])?, r, s);
    let y = box_reduce(&parse_sym_expr(&a.mul[1])?, r, s);
    let out = box_reduce(&x.mul(&y), r, s);
    Ok(if a.json { pretty(symf_to_json(&out)) } else { line(&out) })
}

fn run_arakelov(a: ArakelovArgs) -> Result<String, String> {
    let (r, s) = a.g;
    let err = |e: bcchow::Error| e.to_string();
    let x: ArakelovElem = if let Some(ops) = &a.star {
        let x = parse_ring_operand(&ops[0], r, s)?;
        let y = parse_ring_operand(&ops[1], r, s)?;
        x.star(&y).map_err(err)?
    } else if let Some(text) = &a.normal_form {
        match parse_sym_expr(text) {
            Ok(f) => normal_form(&HatPoly::new(&f, r, s).map_err(err)?),
            Err(_) => parse_ring_operand(text, r, s)?,
        }
    } else if let Some(k) = a.chern_s {
        hat_chern_s(k, r, s).map_err(err)?
    } else if let Some(k) = a.chern_q {
        hat_chern_q(k, r, s).map_err(err)?
    } else {
        unreachable!("clap requires one operation")
    };
    Ok(if a.json { pretty(arakelov_to_json(&x)) } else { line(&x) })
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Identities => "identities",
        Suite::Oracle => "oracle",
        Suite::Ring => "ring",
        Suite::Heights => "heights",
        Suite::All => "all",
    }
}

fn collect(a: &VerifyArgs) -> bcchow::Result<Vec<IdentityReport>> {
    let max_weight = a.max_weight.unwrap_or(6);
    let max_rank = a.max_rank.unwrap_or(3);
    let mut reports = Vec::new();
    let wants = |s: Suite| a.suite == s || a.suite == Suite::All;
    if wants(Suite::Identities) {
        reports.extend(verify::identities(a.max_n.unwrap_or(12))?);
    }
    if wants(Suite::Oracle) {
        reports.extend(verify::oracle(max_weight, max_rank)?);
    }
    if wants(Suite::Ring) {
        reports.extend(verify::ring(max_rank)?);
    }
    if wants(Suite::Heights) {
        reports.extend(verify::heights(a.max_n.unwrap_or(4))?);
    }
    Ok(reports)
}

fn run_verify(a: VerifyArgs) -> CommandResult {
    let reports = match collect(&a) {
        Ok(r) => r,
        Err(e) => {
            return CommandResult { code: EXIT_FAILED, stdout: String::new(), stderr: format!("error: {e}\n") };
        }
    };
    let failed = reports.iter().filter(|r| !r.holds()).count();
    let passed = reports.len() - failed;
    let stdout = if a.json {
        pretty(json!({
            "kind": "verify",
            "suite": suite_name(a.suite),
            "holds": failed == 0,
            "passed": passed,
            "failed": failed,
            "reports": reports.iter().map(IdentityReport::to_json).collect::<Vec<_>>(),
        }))
    } else {
        let mut out = String::new();
        for r in &reports {
            writeln!(out, "{r}").expect("write to string");
        }
        writeln!(out, "{}: {passed} passed, {failed} failed", suite_name(a.suite)).expect("write to string");
        out
    };
    CommandResult { code: if failed == 0 { EXIT_OK } else { EXIT_FAILED }, stdout, stderr: String::new() }
}
