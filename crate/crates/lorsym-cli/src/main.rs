//! Command-line front end: parse coefficient JSON, run the certified
//! membership tester or the definitional oracle, rewrite bases, emit family
//! members, sample the degree-3 membership regions as CSV, and print the
//! certified operation counts.
//!
//! Exit codes: 0 = the mathematical verdict is "yes" (Lorentzian / member),
//! 2 = the verdict is "no", 1 = the request could not be evaluated.

use std::io::Read;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use lorsym::closedform::degree3;
use lorsym::error::Error;
use lorsym::families::{
    chromatic_symmetric, elementary, indifference_graph, mconvex_generating, normalized_schur,
    DyckPath,
};
use lorsym::lorentz::{is_lorentzian, Mode};
use lorsym::oracle::oracle_is_lorentzian;
use lorsym::partitions::Partition;
use lorsym::rational::{rat_to_string, Rat};
use lorsym::symfunc::{convert_basis, expand, Basis, SymPoly};

#[derive(Parser)]
#[command(
    name = "lorsym",
    version,
    about = "Exact Lorentzian-membership tester for symmetric polynomials",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Symmetric-function mode: membership for every variable count at once.
    Function,
    /// Fixed variable count; requires --nvars.
    Polynomial,
}

#[derive(Subcommand)]
enum Command {
    /// Decide Lorentzian membership with the certified reduced tester.
    Check {
        /// Coefficient JSON: a file path, an inline JSON object, or "-" for stdin.
        #[arg(long)]
        input: String,
        /// Membership mode (defaults to polynomial when --nvars is given,
        /// function otherwise).
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Number of variables for polynomial mode.
        #[arg(long)]
        nvars: Option<usize>,
        /// Output format (this command emits json).
        #[arg(long, default_value = "json")]
        out: String,
    },
    /// Expand to explicit variables and run the definitional oracle.
    Oracle {
        /// Coefficient JSON: a file path, an inline JSON object, or "-" for stdin.
        #[arg(long)]
        input: String,
        /// Number of variables to expand into.
        #[arg(long)]
        nvars: usize,
        /// Output format (this command emits json).
        #[arg(long, default_value = "json")]
        out: String,
    },
    /// Rewrite a symmetric polynomial in another basis.
    Convert {
        /// Coefficient JSON: a file path, an inline JSON object, or "-" for stdin.
        #[arg(long)]
        input: String,
        /// Target basis: m, mtilde, s, or ns.
        #[arg(long)]
        basis: String,
        /// Output format (this command emits json).
        #[arg(long, default_value = "json")]
        out: String,
    },
    /// Emit a named family member as coefficient JSON.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Sample the degree-3 membership regions on the simplex grid a+b+c = 1.
    Region {
        /// Output format (this command emits csv).
        #[arg(long, default_value = "csv")]
        out: String,
    },
    /// Print the certified operation counts for dense fixed-degree inputs
    /// across variable counts 10, 100, and 1000.
    Bench,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Normalized Schur polynomial of a partition shape, e.g. --shape "[2,1]".
    Ns {
        #[arg(long)]
        shape: String,
    },
    /// Elementary symmetric polynomial of a degree.
    E {
        #[arg(long)]
        degree: u32,
    },
    /// Generating function of the dominance interval below a shape.
    Mconvex {
        #[arg(long)]
        shape: String,
    },
    /// Chromatic symmetric polynomial of a Dyck-path indifference graph,
    /// e.g. --path NNEE, in the monomial basis.
    Chromatic {
        #[arg(long)]
        path: String,
        #[arg(long)]
        nvars: usize,
    },
}

/// Everything a request produces: the output document, diagnostics, and the
/// process exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn ok(stdout: String, code: i32) -> Outcome {
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}

fn fail(err: impl std::fmt::Display) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {err}\n"),
        code: 1,
    }
}

/// Resolve the --input convention: "-" reads stdin, a leading '{' is inline
/// JSON, anything else is a file path.
fn read_input(spec: &str) -> Result<String, Error> {
    if spec == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    if spec.trim_start().starts_with('{') {
        return Ok(spec.to_string());
    }
    std::fs::read_to_string(spec)
        .map_err(|e| Error::Parse(format!("cannot read file {spec:?}: {e}")))
}

fn require_format(out: &str, expected: &str) -> Result<(), Error> {
    if out == expected {
        Ok(())
    } else {
        Err(Error::Invalid(format!(
            "this command emits {expected}, not {out:?}"
        )))
    }
}

fn resolve_mode(mode: Option<ModeArg>, nvars: Option<usize>) -> Result<Mode, Error> {
    match (mode, nvars) {
        (Some(ModeArg::Function), None) | (None, None) => Ok(Mode::Function),
        (Some(ModeArg::Function), Some(_)) => Err(Error::Invalid(
            "--nvars is only meaningful in polynomial mode".into(),
        )),
        (Some(ModeArg::Polynomial), Some(n)) | (None, Some(n)) => Ok(Mode::Polynomial(n)),
        (Some(ModeArg::Polynomial), None) => {
            Err(Error::Invalid("polynomial mode requires --nvars".into()))
        }
    }
}

fn run_check(input: &str, mode: Option<ModeArg>, nvars: Option<usize>, out: &str) -> Outcome {
    let attempt = || -> Result<(String, i32), Error> {
        require_format(out, "json")?;
        let mode = resolve_mode(mode, nvars)?;
        let f = SymPoly::from_json(&read_input(input)?)?;
        let verdict = is_lorentzian(&f, mode)?;
        let code = if verdict.lorentzian { 0 } else { 2 };
        Ok((format!("{}\n", verdict.to_json()), code))
    };
    match attempt() {
        Ok((stdout, code)) => ok(stdout, code),
        Err(e) => fail(e),
    }
}

fn run_oracle(input: &str, nvars: usize, out: &str) -> Outcome {
    let attempt = || -> Result<(String, i32), Error> {
        require_format(out, "json")?;
        let f = SymPoly::from_json(&read_input(input)?)?;
        let g = expand(&f, nvars)?;
        let verdict = oracle_is_lorentzian(&g)?;
        let code = if verdict.lorentzian { 0 } else { 2 };
        Ok((format!("{}\n", verdict.to_json()), code))
    };
    match attempt() {
        Ok((stdout, code)) => ok(stdout, code),
        Err(e) => fail(e),
    }
}

fn run_convert(input: &str, basis: &str, out: &str) -> Outcome {
    let attempt = || -> Result<String, Error> {
        require_format(out, "json")?;
        let target = Basis::from_tag(basis)?;
        let f = SymPoly::from_json(&read_input(input)?)?;
        Ok(format!("{}\n", convert_basis(&f, target).to_json()))
    };
    match attempt() {
        Ok(stdout) => ok(stdout, 0),
        Err(e) => fail(e),
    }
}

fn run_family(family: &FamilyCommand) -> Outcome {
    let attempt = || -> Result<String, Error> {
        let poly = match family {
            FamilyCommand::Ns { shape } => normalized_schur(&shape.parse::<Partition>()?),
            FamilyCommand::E { degree } => elementary(*degree)?,
            FamilyCommand::Mconvex { shape } => mconvex_generating(&shape.parse::<Partition>()?),
            FamilyCommand::Chromatic { path, nvars } => {
                let dyck: DyckPath = path.parse()?;
                let graph = indifference_graph(&dyck);
                let (_, sym) = chromatic_symmetric(&graph, *nvars)?;
                sym
            }
        };
        Ok(format!("{}\n", poly.to_json()))
    };
    match attempt() {
        Ok(stdout) => ok(stdout, 0),
        Err(e) => fail(e),
    }
}

/// Grid height for the simplex sample: all lattice points (i, j, k) with
/// i + j + k = 140 give (141 * 142) / 2 = 10011 rational points of a+b+c = 1.
const GRID_HEIGHT: i64 = 140;

fn run_region(out: &str) -> Outcome {
    if let Err(e) = require_format(out, "csv") {
        return fail(e);
    }
    let h = GRID_HEIGHT;
    let mut doc = String::from("a,b,c,n2,n5,fn\n");
    for i in 0..=h {
        for j in 0..=(h - i) {
            let k = h - i - j;
            let a = Rat::new(i.into(), h.into());
            let b = Rat::new(j.into(), h.into());
            let c = Rat::new(k.into(), h.into());
            let n2 = degree3(&a, &b, &c, Mode::Polynomial(2)).member;
            let n5 = degree3(&a, &b, &c, Mode::Polynomial(5)).member;
            let func = degree3(&a, &b, &c, Mode::Function).member;
            doc.push_str(&format!(
                "{},{},{},{},{},{}\n",
                rat_to_string(&a),
                rat_to_string(&b),
                rat_to_string(&c),
                u8::from(n2),
                u8::from(n5),
                u8::from(func),
            ));
        }
    }
    ok(doc, 0)
}

fn run_bench() -> Outcome {
    let attempt = || -> Result<String, Error> {
        let mut doc = String::new();
        for d in [3u32, 4, 5, 6] {
            let top = Partition::new(vec![d])?;
            let f = mconvex_generating(&top);
            for n in [10usize, 100, 1000] {
                let verdict = is_lorentzian(&f, Mode::Polynomial(n))?;
                doc.push_str(&format!("d={d} n={n} opCount={}\n", verdict.op_count));
            }
        }
        Ok(doc)
    };
    match attempt() {
        Ok(stdout) => ok(stdout, 0),
        Err(e) => fail(e),
    }
}

/// Evaluate one request. Pure apart from --input file/stdin resolution; the
/// same arguments always produce byte-identical documents.
pub fn run<I>(args: I) -> Outcome
where
    I: IntoIterator<Item = String>,
{
    let argv = std::iter::once("lorsym".to_string()).chain(args);
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version are informational, not failures; every
            // other parse problem is an error exit.
            let informational = matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            return Outcome {
                stdout: if informational {
                    format!("{err}")
                } else {
                    String::new()
                },
                stderr: if informational {
                    String::new()
                } else {
                    format!("{err}")
                },
                code: if informational { 0 } else { 1 },
            };
        }
    };
    match &cli.command {
        Command::Check {
            input,
            mode,
            nvars,
            out,
        } => run_check(input, *mode, *nvars, out),
        Command::Oracle { input, nvars, out } => run_oracle(input, *nvars, out),
        Command::Convert { input, basis, out } => run_convert(input, basis, out),
        Command::Family { family } => run_family(family),
        Command::Region { out } => run_region(out),
        Command::Bench => run_bench(),
    }
}

fn main() {
    use std::io::Write;
    let outcome = run(std::env::args().skip(1));
    // A consumer that stops reading (e.g. `lorsym region | head`) closes the
    // pipe; treat the resulting write failure as a normal early exit rather
    // than a panic. The exit code still carries the verdict.
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stdout.flush();
    let mut stderr = std::io::stderr().lock();
    let _ = stderr.write_all(outcome.stderr.as_bytes());
    let _ = stderr.flush();
    std::process::exit(outcome.code);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(args.iter().map(|s| s.to_string()))
    }

    const QUARTIC: &str = r#"{"degree":4,"basis":"mtilde","coeffs":{"[4]":"1","[3,1]":"2","[2,2]":"2","[2,1,1]":"5","[1,1,1,1]":"5"}}"#;

    #[test]
    fn check_quartic_depends_on_variable_count() {
        let at4 = call(&["check", "--input", QUARTIC, "--nvars", "4"]);
        assert_eq!(at4.code, 0, "{}", at4.stderr);
        assert!(at4.stdout.contains("\"lorentzian\":true"));

        let at5 = call(&["check", "--input", QUARTIC, "--nvars", "5"]);
        assert_eq!(at5.code, 2);
        assert!(at5.stdout.contains("\"kind\":\"hessian-H\""));

        let explicit = call(&[
            "check",
            "--input",
            QUARTIC,
            "--mode",
            "polynomial",
            "--nvars",
            "5",
        ]);
        assert_eq!(explicit.stdout, at5.stdout);
        assert_eq!(explicit.code, 2);
    }

    #[test]
    fn family_pipes_into_check_and_oracle() {
        let family = call(&["family", "ns", "--shape", "[2,1]"]);
        assert_eq!(family.code, 0, "{}", family.stderr);
        let check = call(&["check", "--input", family.stdout.trim(), "--mode", "function"]);
        assert_eq!(check.code, 0, "{}", check.stderr);
        assert!(check.stdout.contains("\"lorentzian\":true"));

        let oracle = call(&["oracle", "--input", family.stdout.trim(), "--nvars", "3"]);
        assert_eq!(oracle.code, 0, "{}", oracle.stderr);
        assert!(oracle.stdout.contains("\"opCount\":0"));
    }

    #[test]
    fn convert_normalized_schur_cubic() {
        let input = r#"{"degree":3,"basis":"ns","coeffs":{"[3]":"1","[2,1]":"2","[1,1,1]":"-1"}}"#;
        let converted = call(&["convert", "--input", input, "--basis", "mtilde"]);
        assert_eq!(converted.code, 0, "{}", converted.stderr);
        assert_eq!(
            converted.stdout.trim(),
            r#"{"degree":3,"basis":"mtilde","coeffs":{"[3]":"1","[2,1]":"3","[1,1,1]":"4"}}"#
        );
    }

    #[test]
    fn region_grid_has_fixed_header_size_and_nesting() {
        let region = call(&["region"]);
        assert_eq!(region.code, 0);
        let lines: Vec<&str> = region.stdout.lines().collect();
        assert_eq!(lines[0], "a,b,c,n2,n5,fn");
        assert_eq!(lines.len() as i64, 1 + (GRID_HEIGHT + 1) * (GRID_HEIGHT + 2) / 2);
        for line in &lines[1..] {
            let cols: Vec<&str> = line.split(',').collect();
            assert_eq!(cols.len(), 6);
            let n2 = cols[3] == "1";
            let n5 = cols[4] == "1";
            let func = cols[5] == "1";
            assert!(!func || n5, "function region must sit inside n = 5: {line}");
            assert!(!n5 || n2, "n = 5 region must sit inside n = 2: {line}");
        }
        // Byte-identical on repeat runs.
        assert_eq!(call(&["region"]).stdout, region.stdout);
    }

    #[test]
    fn bench_reports_constant_counts_across_variable_counts() {
        let bench = call(&["bench"]);
        assert_eq!(bench.code, 0, "{}", bench.stderr);
        let lines: Vec<&str> = bench.stdout.lines().collect();
        assert_eq!(lines.len(), 12);
        for chunk in lines.chunks(3) {
            let counts: Vec<&str> = chunk
                .iter()
                .map(|line| line.rsplit('=').next().unwrap())
                .collect();
            assert_eq!(counts[0], counts[1], "{chunk:?}");
            assert_eq!(counts[1], counts[2], "{chunk:?}");
        }
    }

    #[test]
    fn malformed_requests_exit_one() {
        assert_eq!(call(&["check", "--input", "{not json"]).code, 1);
        assert_eq!(call(&["check", "--input", QUARTIC, "--mode", "polynomial"]).code, 1);
        assert_eq!(
            call(&["check", "--input", QUARTIC, "--mode", "function", "--nvars", "3"]).code,
            1
        );
        assert_eq!(call(&["convert", "--input", QUARTIC, "--basis", "q"]).code, 1);
        assert_eq!(call(&["family", "chromatic", "--path", "NEEN", "--nvars", "3"]).code, 1);
        assert_eq!(call(&["region", "--out", "json"]).code, 1);
        assert_eq!(call(&["nonsense"]).code, 1);
    }

    #[test]
    fn family_chromatic_emits_monomial_coefficients() {
        let out = call(&["family", "chromatic", "--path", "NNNEEE", "--nvars", "3"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(
            out.stdout.trim(),
            r#"{"degree":3,"basis":"m","coeffs":{"[1,1,1]":"6"}}"#
        );
    }

    #[test]
    fn help_is_informational() {
        let help = call(&["--help"]);
        assert_eq!(help.code, 0);
        assert!(help.stdout.contains("check"));
        assert!(help.stderr.is_empty());
    }
}
