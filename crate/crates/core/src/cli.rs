//! Command-line front end. [`run`] parses arguments and returns the exit
//! status together with everything that would be written, so the binary
//! stays a thin wrapper and the commands can be tested in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{check_left_leibniz, leibniz_kernel, lie_quotient, parse_structure_constants, LeibnizAlgebra};
use crate::bimodule::{Bimodule, Kind, OneDimBimodule};
use crate::cohomology::{ce_cohomology, leibniz_cohomology, CohomologyResult};
use crate::error::{Error, Result};
use crate::ext::{
    ext_hemi_oracle, ext_hemi_spectral, ext_simple_closed, ext_trivial_closed, ext_trivial_spectral, HemiSimple,
};
use crate::linear::{Scalar, SubspaceBasis};
use crate::quiver::{quiver_hemi, quiver_trivial, Quiver};
use crate::repsl2::{simple_module, sl2, SL2Module};

/// Exit status for invalid input.
pub const EXIT_INPUT: i32 = 1;
/// Exit status for a failed internal consistency check.
pub const EXIT_CONSISTENCY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "leibniz", version, about = "Exact cohomology, Ext groups and Gabriel quivers of Leibniz algebras")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Leibniz identity and report Leib(h) and h_Lie.
    Check {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Leibniz cohomology HL^q(h, M) for q ≤ qmax.
    Cohomology {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        bimodule: PathBuf,
        #[arg(long)]
        qmax: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        /// Also print cocycle and coboundary bases.
        #[arg(long)]
        bases: bool,
    },
    /// Chevalley–Eilenberg cohomology of sl2 with coefficients such as `V2` or `V2+V0`.
    Ce {
        #[arg(long)]
        module: String,
        #[arg(long)]
        pmax: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        #[arg(long)]
        bases: bool,
    },
    /// Ext groups between simple bimodules.
    #[command(subcommand)]
    Ext(ExtCommand),
    /// Gabriel quivers.
    #[command(subcommand)]
    Quiver(QuiverCommand),
}

#[derive(Subcommand, Debug)]
pub enum ExtCommand {
    /// One-dimensional bimodules over the trivial algebra: K, a[:λ], s[:λ].
    Trivial {
        #[arg(long)]
        src: String,
        #[arg(long)]
        dst: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = TrivialMethod::Closed)]
        method: TrivialMethod,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Simple bimodules over V_n ⋊ sl2: K or V0, Vp^s, Vm^a.
    Hemi(HemiArgs),
}

#[derive(Args, Debug)]
pub struct HemiArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub src: String,
    #[arg(long)]
    pub dst: String,
    #[arg(long, default_value_t = 1)]
    pub degree: usize,
    #[arg(long, value_enum, default_value_t = HemiMethod::Closed)]
    pub method: HemiMethod,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
}

#[derive(Subcommand, Debug)]
pub enum QuiverCommand {
    /// Quiver of K and M^a_λ, M^s_λ over the trivial algebra.
    Trivial {
        #[arg(long, value_delimiter = ',', required = true)]
        lambdas: Vec<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Quiver of V_n ⋊ sl2 truncated to weights ≤ max-weight.
    Hemi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_weight: usize,
        /// Recompute every multiplicity through N̂ and abort on mismatch.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrivialMethod {
    Closed,
    Spectral,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum HemiMethod {
    Closed,
    /// N̂ in degree 1, the spectral sequences otherwise.
    Oracle,
    Spectral,
    /// Closed form and oracle.
    Both,
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Stability(_) | Error::Complex { .. } | Error::CollapseNotCertified { .. } | Error::Verification(_) => {
            EXIT_CONSISTENCY
        }
        Error::ModuleAxiom(_)
        | Error::Dimension(_)
        | Error::NonIntegralWeight { .. }
        | Error::UnsupportedDegree(_)
        | Error::Input(_) => EXIT_INPUT,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => execute(&config),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}

/// Runs an already parsed configuration.
pub fn execute(config: &RunConfig) -> Outcome {
    let mut out = Outcome::default();
    if let Err(e) = dispatch(config, &mut out) {
        out.code = out.code.max(exit_code(&e));
        let _ = writeln!(out.stderr, "error: {e}");
    }
    out
}

fn dispatch(config: &RunConfig, out: &mut Outcome) -> Result<()> {
    match &config.command {
        Command::Check { algebra, format } => check(algebra, *format, out),
        Command::Cohomology { algebra, bimodule, qmax, format, bases } => {
            let h = LeibnizAlgebra::from_json(&read(algebra)?)?;
            let m = Bimodule::from_json(&h, &read(bimodule)?)?;
            let result = leibniz_cohomology(&h, &m, *qmax)?;
            print_cohomology("HL", &result, *format, *bases, out);
            Ok(())
        }
        Command::Ce { module, pmax, format, bases } => {
            let v = parse_sl2_module(module)?;
            let result = ce_cohomology(&sl2(), v.module(), *pmax)?;
            print_cohomology("H", &result, *format, *bases, out);
            Ok(())
        }
        Command::Ext(ExtCommand::Trivial { src, dst, nmax, method, format }) => {
            let a = parse_one_dim(src)?;
            let b = parse_one_dim(dst)?;
            let mut rows = Vec::new();
            if matches!(method, TrivialMethod::Closed | TrivialMethod::Both) {
                rows.push(("closed", ext_trivial_closed(&a, &b, *nmax), None));
            }
            if matches!(method, TrivialMethod::Spectral | TrivialMethod::Both) {
                let r = ext_trivial_spectral(&a, &b, *nmax)?;
                rows.push(("spectral", r.dims, Some(r.certificate.is_certified())));
            }
            print_ext(&a.to_string(), &b.to_string(), &rows, *format, out)
        }
        Command::Ext(ExtCommand::Hemi(args)) => ext_hemi(args, out),
        Command::Quiver(QuiverCommand::Trivial { lambdas, format }) => {
            let lambdas = lambdas.iter().map(|l| Scalar::from_str(l)).collect::<Result<Vec<_>>>()?;
            print_quiver(&quiver_trivial(&lambdas)?, *format, out);
            Ok(())
        }
        Command::Quiver(QuiverCommand::Hemi { n, max_weight, verify, format }) => {
            print_quiver(&quiver_hemi(*n, *max_weight, *verify)?, *format, out);
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn check(path: &Path, format: TableFormat, out: &mut Outcome) -> Result<()> {
    let (constants, labels) = parse_structure_constants(&read(path)?)?;
    let dim = constants.dim();
    if !check_left_leibniz(&constants) {
        match format {
            TableFormat::Text => {
                let _ = writeln!(out.stdout, "dim {dim}\nleft Leibniz identity: fails");
            }
            TableFormat::Json => {
                let _ = writeln!(out.stdout, "{}", json!({"dim": dim, "leibniz": false}));
            }
        }
        out.code = EXIT_INPUT;
        return Ok(());
    }
    let h = LeibnizAlgebra::new(constants, labels)?;
    let leib = leibniz_kernel(&h);
    let q = lie_quotient(&h);
    match format {
        TableFormat::Text => {
            let _ = writeln!(out.stdout, "dim {dim}");
            let _ = writeln!(out.stdout, "left Leibniz identity: holds");
            let _ = writeln!(out.stdout, "Lie algebra: {}", if h.is_lie() { "yes" } else { "no" });
            let _ = writeln!(out.stdout, "Leib(h): dim {}", leib.dim());
            for v in leib.vectors() {
                let _ = writeln!(out.stdout, "  {}", vector(v));
            }
            let _ = writeln!(out.stdout, "h_Lie: dim {} (basis {})", q.dim(), q.algebra.labels().join(", "));
            let _ = write!(out.stdout, "{}", q.algebra.as_leibniz());
        }
        TableFormat::Json => {
            let value = json!({
                "dim": dim,
                "leibniz": true,
                "lie": h.is_lie(),
                "leib_dim": leib.dim(),
                "lie_quotient_dim": q.dim(),
                "lie_quotient_basis": q.algebra.labels(),
            });
            let _ = writeln!(out.stdout, "{value}");
        }
    }
    Ok(())
}

fn vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

fn basis_strings(b: &SubspaceBasis) -> Vec<Vec<String>> {
    b.vectors().iter().map(|v| v.iter().map(Scalar::to_string).collect()).collect()
}

fn print_cohomology(name: &str, result: &CohomologyResult, format: TableFormat, bases: bool, out: &mut Outcome) {
    let dims = result.dims();
    match format {
        TableFormat::Text => {
            let width = dims.len().saturating_sub(1).to_string().len();
            for (n, d) in result.degrees.iter().enumerate() {
                let _ = writeln!(out.stdout, "{name}^{n:<width$}  {}", d.dim);
                if bases {
                    for v in d.cocycles.vectors() {
                        let _ = writeln!(out.stdout, "    cocycle     {}", vector(v));
                    }
                    for v in d.coboundaries.vectors() {
                        let _ = writeln!(out.stdout, "    coboundary  {}", vector(v));
                    }
                }
            }
        }
        TableFormat::Json => {
            let mut value = json!({ name: dims });
            if bases {
                let degrees: Vec<_> = result
                    .degrees
                    .iter()
                    .map(|d| json!({"cocycles": basis_strings(&d.cocycles), "coboundaries": basis_strings(&d.coboundaries)}))
                    .collect();
                value["bases"] = json!(degrees);
            }
            let _ = writeln!(out.stdout, "{value}");
        }
    }
}

fn join(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Prints one line per method; fails if the methods disagree.
fn print_ext(
    src: &str,
    dst: &str,
    rows: &[(&str, Vec<usize>, Option<bool>)],
    format: TableFormat,
    out: &mut Outcome,
) -> Result<()> {
    match format {
        TableFormat::Text => {
            for (_, dims, _) in rows {
                let _ = writeln!(out.stdout, "{}", join(dims));
            }
        }
        TableFormat::Json => {
            let pairs: Vec<_> = rows
                .iter()
                .map(|(method, dims, certified)| {
                    json!({"src": src, "dst": dst, "method": method, "dims": dims, "certified": certified})
                })
                .collect();
            let _ = writeln!(out.stdout, "{}", json!({"ext": {"pairs": pairs}}));
        }
    }
    if let Some((first, rest)) = rows.split_first() {
        for other in rest {
            if other.1 != first.1 {
                return Err(Error::Verification(format!(
                    "Ext({src}, {dst}): {} gives [{}], {} gives [{}]",
                    first.0,
                    join(&first.1),
                    other.0,
                    join(&other.1)
                )));
            }
        }
    }
    Ok(())
}

fn ext_hemi(args: &HemiArgs, out: &mut Outcome) -> Result<()> {
    let src: HemiSimple = args.src.parse()?;
    let dst: HemiSimple = args.dst.parse()?;
    let (n, degree) = (args.n, args.degree);
    let mut rows = Vec::new();
    if matches!(args.method, HemiMethod::Closed | HemiMethod::Both) {
        rows.push(("closed", vec![ext_simple_closed(n, src, dst, degree)?], None));
    }
    if matches!(args.method, HemiMethod::Oracle | HemiMethod::Both) {
        rows.push(("oracle", vec![ext_hemi_oracle(n, src, dst, degree)?], None));
    }
    if args.method == HemiMethod::Spectral {
        let r = ext_hemi_spectral(n, src, dst, degree)?;
        rows.push(("spectral", vec![r.dims[degree]], Some(r.certificate.is_certified())));
    }
    print_ext(&src.to_string(), &dst.to_string(), &rows, args.format, out)
}

fn print_quiver(q: &Quiver, format: GraphFormat, out: &mut Outcome) {
    let text = match format {
        GraphFormat::Dot => q.to_dot(),
        GraphFormat::Json => q.to_json(),
    };
    let _ = writeln!(out.stdout, "{text}");
}

/// `K`, or a kind (`a`, `anti`, `antisymmetric`, `s`, `sym`, `symmetric`)
/// with an optional `:λ` (default 1).
pub fn parse_one_dim(s: &str) -> Result<OneDimBimodule> {
    let (kind, lambda) = match s.trim().split_once(':') {
        Some((k, l)) => (k.trim(), Some(Scalar::from_str(l)?)),
        None => (s.trim(), None),
    };
    let kind = match kind {
        "K" | "k" | "trivial" => Kind::Trivial,
        "a" | "anti" | "antisymmetric" | "Ma" | "M^a" => Kind::Antisymmetric,
        "s" | "sym" | "symmetric" | "Ms" | "M^s" => Kind::Symmetric,
        other => return Err(Error::Input(format!("unknown bimodule kind {other:?}; use K, a[:λ] or s[:λ]"))),
    };
    match (kind, lambda) {
        (Kind::Trivial, Some(l)) if !l.is_zero() => Err(Error::Input("K takes no eigenvalue".into())),
        (Kind::Trivial, _) => Ok(OneDimBimodule::trivial()),
        (k, l) => OneDimBimodule::new(k, l.unwrap_or_else(Scalar::one)),
    }
}

/// `V2`, `V2+V0+V0`, … as a direct sum of simple sl2-modules.
pub fn parse_sl2_module(s: &str) -> Result<SL2Module> {
    let mut parts = s.split('+').map(|p| {
        p.trim()
            .strip_prefix('V')
            .and_then(|w| w.parse::<usize>().ok())
            .map(simple_module)
            .ok_or_else(|| Error::Input(format!("expected Vm or a sum like V2+V0, got {s:?}")))
    });
    let first = parts.next().expect("split yields at least one part")?;
    parts.try_fold(first, |acc, p| Ok(acc.direct_sum(&p?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> Outcome {
        run(std::iter::once("leibniz").chain(args.split_whitespace()))
    }

    #[test]
    fn ext_trivial_both() {
        let o = call("ext trivial --src K --dst K --nmax 3 --method both");
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout, "1 2 2 2\n1 2 2 2\n");
    }

    #[test]
    fn ext_hemi_both() {
        let o = call("ext hemi --n 2 --src V2^s --dst V0^a --method both");
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout, "2\n2\n");
    }

    #[test]
    fn quiver_trivial_json() {
        let o = call("quiver trivial --lambdas 1 --format json");
        assert_eq!(o.code, 0);
        let q = Quiver::from_json(o.stdout.trim()).unwrap();
        assert_eq!(q.vertices.len(), 3);
        assert_eq!(q.arrow_count(), 4);
    }

    #[test]
    fn bad_input_exits_one() {
        assert_eq!(call("ext trivial --src X --dst K --nmax 1").code, EXIT_INPUT);
        assert_eq!(call("quiver trivial --lambdas 0").code, EXIT_INPUT);
        assert_eq!(call("quiver trivial --lambdas 1 --format text").code, EXIT_INPUT);
        assert_eq!(call("ce --module W2 --pmax 3").code, EXIT_INPUT);
        assert_eq!(call("ext hemi --n 1 --src K --dst K --degree 3").code, EXIT_INPUT);
        assert_eq!(call("frobnicate").code, EXIT_INPUT);
    }

    #[test]
    fn help_exits_zero() {
        let o = call("--help");
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("quiver"));
    }

    #[test]
    fn ce_json() {
        let o = call("ce --module V0 --pmax 3 --format json");
        assert_eq!(o.stdout.trim(), r#"{"H":[1,0,0,1]}"#);
        let o = call("ce --module V2+V0 --pmax 3");
        assert_eq!(o.stdout, "H^0  1\nH^1  0\nH^2  0\nH^3  1\n");
    }

    #[test]
    fn one_dim_parsing() {
        assert_eq!(parse_one_dim("s:1/2").unwrap().to_string(), "M^s_1/2");
        assert_eq!(parse_one_dim("a").unwrap().to_string(), "M^a_1");
        assert!(parse_one_dim("a:0").is_err());
        assert!(parse_one_dim("K:2").is_err());
    }
}
