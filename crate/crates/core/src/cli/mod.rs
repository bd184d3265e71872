//! Command-line surface: the instance file format and the subcommands.
//!
//! Every invocation prints one JSON envelope (sorted keys) on standard output
//! and exits with 0 when every check passed, 1 when some check or
//! precondition failed, and 2 for malformed input.

pub mod format;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::parse_scalar;
use crate::families::{
    coset_function_subalgebra, group_algebra, subgroup_quotient_ideal, subgroup_subalgebra,
    twisted_dual_group_algebra,
};
use crate::hopfmod::{check_hopf_module, divisibility_report, q_regular, regular_hopf_module, tensor_with_regular};
use crate::multilinear::TensorElement;
use crate::qba::check_quasibialgebra;
use crate::qha::{
    antipode_bijectivity, canonical_pair, check_quasi_antipode, gauge, lambda_maps, lambda_opcop_relation,
};
use crate::quotient::{
    build_quotient, check_biideal, check_s_stability, grouplike_count_report, lagrange_report,
    synthesize_quotient_antipode,
};
use crate::report::Report;
use crate::subalg::{is_subquasibialgebra, subprop_condition, subprop_extract};
use format::{ModuleSpec, SpecFile, SubspaceRole};

#[derive(Parser, Debug)]
#[command(name = "quasihopf", version, about = "Exact checks for quasi-Hopf algebras given by structure constants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Instance file (JSON Lines).
    #[arg(long)]
    pub file: PathBuf,
    /// Treat failed preconditions as errors (default).
    #[arg(long, conflicts_with = "lenient")]
    pub strict: bool,
    /// Report failed preconditions as warnings and continue.
    #[arg(long)]
    pub lenient: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify the quasibialgebra axioms and, with an antipode, the
    /// quasi-antipode identities, the canonical maps and bijectivity.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Build the quotient by a named ideal and synthesize its antipode.
    Quotient {
        #[command(flatten)]
        input: Input,
        /// Name of an `ideal` section
        #[arg(long)]
        ideal: String,
        /// Write the derived instance here instead of embedding it in the report
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Restrict to a named subspace and extract its antipode.
    Subalgebra {
        #[command(flatten)]
        input: Input,
        /// Name of a `subspace` section
        #[arg(long)]
        subspace: String,
        /// Write the derived instance here instead of embedding it in the report
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a Hopf module section and the divisibility of its dimension.
    Hopfmod {
        #[command(flatten)]
        input: Input,
        /// Section name; optional when the file has exactly one module.
        #[arg(long)]
        module: Option<String>,
    },
    /// Generate an instance file.
    Example {
        kind: ExampleKind,
        /// Order of the cyclic group
        #[arg(long)]
        n: usize,
        /// Cocycle class, taken mod n
        #[arg(long, default_value_t = 0)]
        s: usize,
        /// Add the ideal whose quotient is functions on the subgroup of this order.
        #[arg(long)]
        quotient_order: Option<usize>,
        /// Add the subspace attached to the subgroup of this order.
        #[arg(long)]
        subgroup_order: Option<usize>,
        /// Write the instance here instead of embedding it in the report
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gauge-transform the antipode by a unit `u` given as `idx:scalar,...`.
    Gauge {
        #[command(flatten)]
        input: Input,
        /// Unit of the algebra, e.g. `0:2,1:1+z,2:1,3:-z`
        #[arg(long, allow_hyphen_values = true)]
        unit: String,
        /// Write the gauged instance here instead of embedding it in the report
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimension divisibility for a quotient and the character count.
    Lagrange {
        #[command(flatten)]
        input: Input,
        /// Name of an `ideal` section; without it only the characters are counted
        #[arg(long)]
        ideal: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ExampleKind {
    /// The twisted dual group algebra `k^{ℤ_n}_{ω_s}`.
    ZnOmega,
    /// The group algebra `kℤ_n`.
    Group,
    /// `k^{ℤ_n}_{ω_s}` with a subgroup ideal and three Hopf modules.
    HopfModule,
}

/// Exit code and standard output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
}

/// Parse arguments and run; never panics on bad input.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            use clap::error::ErrorKind::*;
            if matches!(e.kind(), DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand) {
                Outcome {
                    exit_code: 0,
                    stdout: e.to_string(),
                }
            } else {
                let mut env = Envelope::new("usage");
                env.error = Some(json!({"kind": "usage", "message": e.to_string()}));
                env.finish(2)
            }
        }
    }
}

struct Envelope {
    command: &'static str,
    reports: Vec<Report>,
    warnings: Vec<String>,
    error: Option<Value>,
    extra: Map<String, Value>,
}

impl Envelope {
    fn new(command: &'static str) -> Self {
        Envelope {
            command,
            reports: Vec::new(),
            warnings: Vec::new(),
            error: None,
            extra: Map::new(),
        }
    }

    fn passed(&self) -> bool {
        self.reports.iter().all(Report::all_passed)
    }

    fn finish(self, exit_code: i32) -> Outcome {
        let mut m = self.extra;
        m.insert("command".into(), self.command.into());
        m.insert("exit_code".into(), exit_code.into());
        m.insert("passed".into(), (exit_code == 0).into());
        m.insert("reports".into(), self.reports.iter().map(Report::to_json).collect());
        m.insert("warnings".into(), self.warnings.into());
        if let Some(e) = self.error {
            m.insert("error".into(), e);
        }
        let mut stdout = serde_json::to_string_pretty(&Value::Object(m)).expect("envelope serializes");
        stdout.push('\n');
        Outcome { exit_code, stdout }
    }

    fn fail(mut self, e: &Error) -> Outcome {
        let code = exit_code_for(e);
        self.error = Some(json!({"kind": error_kind(e), "message": e.to_string()}));
        self.finish(code)
    }

    fn verdict(self) -> Outcome {
        let code = if self.passed() { 0 } else { 1 };
        self.finish(code)
    }

    /// Record a derived file: written to `out` when given, else embedded.
    fn derived(&mut self, spec: &SpecFile, out: Option<&Path>) -> Result<()> {
        let text = spec.to_jsonl();
        match out {
            Some(p) => {
                std::fs::write(p, &text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                self.extra.insert("derived_file".into(), p.display().to_string().into());
            }
            None => {
                self.extra.insert("derived_spec".into(), text.into());
            }
        }
        Ok(())
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Format { .. }
        | Error::ScalarLiteral { .. }
        | Error::Io(_)
        | Error::ShapeMismatch { .. }
        | Error::LegOutOfRange { .. }
        | Error::ConductorMismatch(..) => 2,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division_by_zero",
        Error::ConductorMismatch(..) => "conductor_mismatch",
        Error::ScalarLiteral { .. } => "scalar_literal",
        Error::ShapeMismatch { .. } => "shape_mismatch",
        Error::LegOutOfRange { .. } => "leg_out_of_range",
        Error::NotInvertible { .. } => "not_invertible",
        Error::NotAUnit => "not_a_unit",
        Error::Precondition(_) => "precondition",
        Error::InternalInconsistency(_) => "internal_inconsistency",
        Error::Unsupported(_) => "unsupported",
        Error::Format { .. } => "format",
        Error::Io(_) => "io",
    }
}

fn execute(command: Command) -> Outcome {
    let name = match &command {
        Command::Check { .. } => "check",
        Command::Quotient { .. } => "quotient",
        Command::Subalgebra { .. } => "subalgebra",
        Command::Hopfmod { .. } => "hopfmod",
        Command::Example { .. } => "example",
        Command::Gauge { .. } => "gauge",
        Command::Lagrange { .. } => "lagrange",
    };
    let mut env = Envelope::new(name);
    match dispatch(command, &mut env) {
        Ok(()) => env.verdict(),
        Err(e) => env.fail(&e),
    }
}

fn load(input: &Input) -> Result<SpecFile> {
    let text = std::fs::read_to_string(&input.file)
        .map_err(|e| Error::Io(format!("{}: {e}", input.file.display())))?;
    SpecFile::parse(&text)
}

/// Run the axiom checks a command presupposes. Strict mode stops on failure
/// (the failing reports are kept); lenient mode records a warning.
fn precondition(env: &mut Envelope, input: &Input, spec: &SpecFile) -> Result<bool> {
    let mut reports = vec![check_quasibialgebra(&spec.algebra)?];
    if let Some(a) = &spec.antipode {
        reports.push(check_quasi_antipode(&spec.algebra, a)?);
    }
    let ok = reports.iter().all(Report::all_passed);
    if ok {
        return Ok(true);
    }
    if input.lenient {
        env.warnings.push("input fails its axiom checks; continuing (--lenient)".into());
        Ok(true)
    } else {
        env.reports.extend(reports);
        Ok(false)
    }
}

fn subspace<'a>(spec: &'a SpecFile, name: &str, role: SubspaceRole) -> Result<&'a crate::multilinear::Subspace> {
    match spec.subspaces.get(name) {
        Some(s) if s.role == role => Ok(&s.space),
        _ => Err(Error::Format {
            line: 0,
            reason: format!("no {} section named {name}", if role == SubspaceRole::Ideal { "ideal" } else { "subspace" }),
        }),
    }
}

fn dispatch(command: Command, env: &mut Envelope) -> Result<()> {
    match command {
        Command::Check { input } => cmd_check(env, &input),
        Command::Quotient { input, ideal, out } => cmd_quotient(env, &input, &ideal, out.as_deref()),
        Command::Subalgebra { input, subspace, out } => cmd_subalgebra(env, &input, &subspace, out.as_deref()),
        Command::Hopfmod { input, module } => cmd_hopfmod(env, &input, module.as_deref()),
        Command::Example {
            kind,
            n,
            s,
            quotient_order,
            subgroup_order,
            out,
        } => {
            let spec = example_spec(kind, n, s, quotient_order, subgroup_order)?;
            env.derived(&spec, out.as_deref())
        }
        Command::Gauge { input, unit, out } => cmd_gauge(env, &input, &unit, out.as_deref()),
        Command::Lagrange { input, ideal } => cmd_lagrange(env, &input, ideal.as_deref()),
    }
}

fn cmd_check(env: &mut Envelope, input: &Input) -> Result<()> {
    let spec = load(input)?;
    let h = &spec.algebra;
    env.reports.push(check_quasibialgebra(h)?);
    let Some(a) = &spec.antipode else { return Ok(()) };
    let axioms = check_quasi_antipode(h, a)?;
    let axioms_ok = axioms.all_passed();
    env.reports.push(axioms);
    if !axioms_ok && !input.lenient {
        return Ok(());
    }
    if !axioms_ok {
        env.warnings
            .push("quasi-antipode axioms fail; canonical maps computed anyway (--lenient)".into());
    }
    let mut maps = Report::new("canonical maps");
    for (name, result) in [
        ("canonical_iso_round_trip", canonical_pair(h, a).map(drop)),
        ("lambda_round_trip", lambda_maps(h, a).map(drop)),
    ] {
        match result {
            Ok(()) => maps.push_verdict(name, true, None),
            Err(Error::InternalInconsistency(m)) => maps.push_verdict(name, false, Some(m)),
            Err(e) => return Err(e),
        }
    }
    if maps.all_passed() {
        maps.absorb("opcop", lambda_opcop_relation(h, a)?);
    }
    env.reports.push(maps);
    env.reports.push(antipode_bijectivity(h, a)?);
    Ok(())
}

fn cmd_quotient(env: &mut Envelope, input: &Input, ideal: &str, out: Option<&Path>) -> Result<()> {
    let spec = load(input)?;
    let i = subspace(&spec, ideal, SubspaceRole::Ideal)?;
    if !precondition(env, input, &spec)? {
        return Ok(());
    }
    let h = &spec.algebra;
    let biideal = check_biideal(h, i)?;
    let ok = biideal.all_passed();
    env.reports.push(biideal);
    if !ok {
        return Ok(());
    }
    let p = build_quotient(h, i)?;
    let antipode = match &spec.antipode {
        Some(a) => {
            env.reports.push(check_s_stability(h, a, i)?);
            let s = synthesize_quotient_antipode(h, a, &p)?;
            env.reports.push(check_quasi_antipode(&p.quotient, &s)?);
            Some(s)
        }
        None => None,
    };
    env.reports.push(lagrange_report(h, &p));
    env.derived(&SpecFile::new(p.quotient.clone(), antipode), out)
}

fn cmd_subalgebra(env: &mut Envelope, input: &Input, name: &str, out: Option<&Path>) -> Result<()> {
    let spec = load(input)?;
    let k = subspace(&spec, name, SubspaceRole::Subspace)?;
    if !precondition(env, input, &spec)? {
        return Ok(());
    }
    let h = &spec.algebra;
    let sub = is_subquasibialgebra(h, k)?;
    let ok = sub.all_passed();
    env.reports.push(sub);
    if !ok {
        return Ok(());
    }
    let Some(a) = &spec.antipode else {
        let induced = crate::subalg::SubQba::new(h, k)?.induced;
        return env.derived(&SpecFile::new(induced, None), out);
    };
    let cond = subprop_condition(h, a, k)?;
    let ok = cond.all_passed();
    env.reports.push(cond);
    if !ok {
        return Ok(());
    }
    let (sub, extracted) = subprop_extract(h, a, k)?;
    env.reports.push(check_quasi_antipode(&sub.induced, &extracted)?);
    env.derived(&SpecFile::new(sub.induced, Some(extracted)), out)
}

fn cmd_hopfmod(env: &mut Envelope, input: &Input, name: Option<&str>) -> Result<()> {
    let spec = load(input)?;
    let module = match name {
        Some(n) => spec.modules.get(n),
        None if spec.modules.len() == 1 => spec.modules.values().next(),
        None => None,
    }
    .ok_or_else(|| Error::Format {
        line: 0,
        reason: match name {
            Some(n) => format!("no hopf_module section named {n}"),
            None => "--module is required unless the file has exactly one hopf_module section".into(),
        },
    })?;
    if !precondition(env, input, &spec)? {
        return Ok(());
    }
    let m = module.build(&spec)?;
    env.reports.push(check_hopf_module(&m)?);
    env.reports.push(divisibility_report(&m));
    Ok(())
}

fn cmd_gauge(env: &mut Envelope, input: &Input, unit: &str, out: Option<&Path>) -> Result<()> {
    let spec = load(input)?;
    let h = &spec.algebra;
    let a = spec.antipode.as_ref().ok_or_else(|| Error::Format {
        line: 0,
        reason: "gauge needs an antipode section".into(),
    })?;
    let u = parse_unit(unit, h.dim(), h.conductor())?;
    if !precondition(env, input, &spec)? {
        return Ok(());
    }
    let gauged = gauge(h, a, &u)?;
    env.reports.push(check_quasi_antipode(h, &gauged)?);
    let mut derived = spec.clone();
    derived.antipode = Some(gauged);
    env.derived(&derived, out)
}

fn cmd_lagrange(env: &mut Envelope, input: &Input, ideal: Option<&str>) -> Result<()> {
    let spec = load(input)?;
    let h = &spec.algebra;
    if let Some(name) = ideal {
        let i = subspace(&spec, name, SubspaceRole::Ideal)?;
        if !precondition(env, input, &spec)? {
            return Ok(());
        }
        let biideal = check_biideal(h, i)?;
        let ok = biideal.all_passed();
        env.reports.push(biideal);
        if !ok {
            return Ok(());
        }
        env.reports.push(lagrange_report(h, &build_quotient(h, i)?));
    }
    match grouplike_count_report(h) {
        Ok(r) => env.reports.push(r),
        Err(Error::Unsupported(m)) => env.warnings.push(format!("character count skipped: {m}")),
        Err(e) => return Err(e),
    }
    Ok(())
}

/// `"0:1,2:-1/2*z"` ↦ `e_0 - ½ζ e_2`.
pub fn parse_unit(text: &str, dim: usize, conductor: u32) -> Result<TensorElement> {
    let bad = |reason: String| Error::Format { line: 0, reason };
    let mut entries = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (idx, lit) = part
            .split_once(':')
            .ok_or_else(|| bad(format!("unit term {part:?} is not idx:scalar")))?;
        let i: usize = idx.trim().parse().map_err(|_| bad(format!("bad index {idx:?}")))?;
        if i >= dim {
            return Err(bad(format!("index {i} out of range for dimension {dim}")));
        }
        entries.push((vec![i], parse_scalar(lit.trim(), conductor)?));
    }
    TensorElement::from_entries(vec![dim], entries)
}

/// The instance files produced by `example`.
pub fn example_spec(
    kind: ExampleKind,
    n: usize,
    s: usize,
    quotient_order: Option<usize>,
    subgroup_order: Option<usize>,
) -> Result<SpecFile> {
    match kind {
        ExampleKind::Group => {
            let q = group_algebra(n)?;
            let mut spec = SpecFile::new(q.algebra, Some(q.antipode));
            if let Some(m) = subgroup_order {
                spec = spec.with_subspace("subgroup", SubspaceRole::Subspace, subgroup_subalgebra(n, m)?);
            }
            if quotient_order.is_some() {
                return Err(Error::Precondition("--quotient-order applies to zn-omega and hopf-module".into()));
            }
            Ok(spec)
        }
        ExampleKind::ZnOmega => {
            let q = twisted_dual_group_algebra(n, s)?;
            let mut spec = SpecFile::new(q.algebra, Some(q.antipode));
            if let Some(m) = quotient_order {
                spec = spec.with_subspace("subgroup_quotient", SubspaceRole::Ideal, subgroup_quotient_ideal(n, m)?);
            }
            if let Some(m) = subgroup_order {
                spec = spec.with_subspace("coset_functions", SubspaceRole::Subspace, coset_function_subalgebra(n, m)?);
            }
            Ok(spec)
        }
        ExampleKind::HopfModule => {
            let q = twisted_dual_group_algebra(n, s)?;
            let m = quotient_order.unwrap_or(n);
            let ideal = subgroup_quotient_ideal(n, m)?;
            let p = build_quotient(&q.algebra, &ideal)?;
            let qm = q_regular(&p)?;
            let name = "subgroup_quotient".to_string();
            let spec = SpecFile::new(q.algebra.clone(), Some(q.antipode))
                .with_subspace(&name, SubspaceRole::Ideal, ideal)
                .with_module("regular", ModuleSpec::from_module(&regular_hopf_module(&q.algebra), None))
                .with_module("quotient", ModuleSpec::from_module(&qm, Some(name.clone())))
                .with_module(
                    "quotient_tensor_regular",
                    ModuleSpec::from_module(&tensor_with_regular(&qm)?, Some(name)),
                );
            Ok(spec)
        }
    }
}
