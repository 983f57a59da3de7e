//! Command surface for `polymat`: parse ideals, decompose, localize, run
//! checks and verification suites, with plain-text or JSON output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use polymat_core::classify::{is_cm_polymatroidal, is_generalized_cm, split_maximal_component, theorem_th_classify};
use polymat_core::codim1::is_connected_codim_one;
use polymat_core::decompose::{hv_presentation, is_equidimensional, is_unmixed, primary_decomposition};
use polymat_core::harness::{run_suite, SuiteParams, DEFAULT_BUDGET, SUITES};
use polymat_core::ideal::{MonomialIdeal, VarMask};
use polymat_core::localize::at_mask;
use polymat_core::oracle::complex::stanley_reisner_complex;
use polymat_core::oracle::homology::reduced_homology_ranks;
use polymat_core::oracle::polarize::polarize;
use polymat_core::oracle::{is_cm_reisner, Field};
use polymat_core::polymatroid::{is_matroidal, is_polymatroidal, recognize_cm_shape, PolymatroidVerdict};
use polymat_core::text::{parse_ideal, render_ideal, render_monomial};
use polymat_core::Error;

pub const REPORT_SCHEMA: &str = "polymat.report/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Check names accepted by `check --checks`, in report order.
pub const CHECKS: [&str; 10] = [
    "polymatroidal",
    "matroidal",
    "cm-shape",
    "codim1",
    "unmixed",
    "equidimensional",
    "cm",
    "gcm",
    "theorem-th",
    "cm-oracle",
];

#[derive(Debug, Parser)]
#[command(name = "polymat", version, about = "Monomial ideals, polymatroids and Cohen-Macaulay classification")]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// File holding the ideal, or `-` for stdin.
    #[arg(conflicts_with = "expr", required_unless_present = "expr")]
    pub path: Option<String>,
    /// The ideal given inline, e.g. `(x1*x2, x2*x3)`.
    #[arg(short = 'e', long)]
    pub expr: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and print the normalized ideal.
    Parse(Input),
    /// Primary and irreducible decomposition.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// List irreducible components instead of primary ones.
        #[arg(long)]
        irreducible: bool,
        /// Also give the prime-power presentation of a polymatroidal ideal.
        #[arg(long)]
        hv: bool,
    },
    /// Monomial localization.
    Localize {
        #[command(flatten)]
        input: Input,
        /// Variables set to 1, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "at", required_unless_present = "at")]
        kill: Vec<String>,
        /// Variables of the prime to localize at, comma separated.
        #[arg(long, value_delimiter = ',')]
        at: Vec<String>,
    },
    /// Run named checks and report verdicts.
    Check(CheckArgs),
    /// Reduced homology of the Stanley-Reisner complex of the polarization.
    Homology {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Largest number of variables.
        #[arg(long)]
        n: Option<usize>,
        /// Largest generating degree.
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, env = "POLYMAT_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: Input,
    /// Comma-separated check names; `all` selects every check.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,
    #[arg(long)]
    pub polymatroidal: bool,
    #[arg(long)]
    pub matroidal: bool,
    #[arg(long)]
    pub cm_shape: bool,
    #[arg(long)]
    pub codim1: bool,
    /// Include the connectivity certificate with `codim1`.
    #[arg(long)]
    pub certificate: bool,
    #[arg(long)]
    pub unmixed: bool,
    #[arg(long)]
    pub equidimensional: bool,
    #[arg(long)]
    pub cm: bool,
    #[arg(long)]
    pub gcm: bool,
    #[arg(long)]
    pub theorem_th: bool,
    #[arg(long)]
    pub cm_oracle: bool,
    /// Coefficient field for the oracle: `q` or `f<p>`.
    #[arg(long, default_value = "q")]
    pub field: String,
}

impl CheckArgs {
    fn selected(&self) -> Result<Vec<&'static str>, String> {
        let mut wanted: Vec<String> = self.checks.iter().map(|c| c.trim().to_string()).collect();
        for (on, name) in [
            (self.polymatroidal, "polymatroidal"),
            (self.matroidal, "matroidal"),
            (self.cm_shape, "cm-shape"),
            (self.codim1, "codim1"),
            (self.unmixed, "unmixed"),
            (self.equidimensional, "equidimensional"),
            (self.cm, "cm"),
            (self.gcm, "gcm"),
            (self.theorem_th, "theorem-th"),
            (self.cm_oracle, "cm-oracle"),
        ] {
            if on {
                wanted.push(name.to_string());
            }
        }
        if let Some(bad) = wanted.iter().find(|w| *w != "all" && !CHECKS.contains(&w.as_str())) {
            return Err(format!("unknown check `{bad}`; known checks: {}", CHECKS.join(", ")));
        }
        if wanted.is_empty() {
            return Err("no checks selected; pass --checks or individual flags".into());
        }
        let all = wanted.iter().any(|w| w == "all");
        Ok(CHECKS.iter().copied().filter(|c| all || wanted.iter().any(|w| w == c)).collect())
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Runs the CLI on `args` (program name first), reading `-` inputs from `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = Outcome { code: EXIT_OK, stdout: String::new(), stderr: String::new() };
    match dispatch(&cli, stdin, &mut out) {
        Ok(()) => {}
        Err(Failure::Usage(msg)) => {
            out.code = EXIT_USAGE;
            let _ = writeln!(out.stderr, "error: {msg}");
        }
        Err(Failure::Core(e)) => {
            out.code = if matches!(e, Error::BudgetExceeded { .. }) { EXIT_BUDGET } else { EXIT_USAGE };
            let _ = writeln!(out.stderr, "error: {e}");
        }
    }
    out
}

fn read_input(input: &Input, stdin: &mut dyn Read, out: &mut Outcome) -> Result<(String, MonomialIdeal), Failure> {
    let text = match (&input.expr, input.path.as_deref()) {
        (Some(e), _) => e.clone(),
        (None, Some("-")) => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            s
        }
        (None, Some(p)) => std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {p}: {e}")))?,
        (None, None) => return Err(Failure::Usage("no input given".into())),
    };
    let parsed = parse_ideal(&text).map_err(Error::from)?;
    if parsed.implicit_vars {
        let _ = writeln!(
            out.stderr,
            "warning: no `vars` header; assuming x1..x{} from the largest index",
            parsed.ideal.nvars()
        );
    }
    Ok((text, parsed.ideal))
}

fn names_to_mask(ideal: &MonomialIdeal, names: &[String]) -> Result<VarMask, Failure> {
    let mut mask = VarMask::EMPTY;
    for n in names.iter().map(|n| n.trim()).filter(|n| !n.is_empty()) {
        let i = ideal.vars().index_of(n).ok_or_else(|| Failure::Usage(format!("unknown variable `{n}`")))?;
        mask = mask.with(i);
    }
    Ok(mask)
}

fn generators(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.gens().iter().map(|g| render_monomial(ideal.vars(), g)).collect()
}

fn emit(out: &mut Outcome, json_mode: bool, value: &Value, text: String) {
    if json_mode {
        out.stdout.push_str(&serde_json::to_string_pretty(value).expect("JSON values serialize"));
        out.stdout.push('\n');
    } else {
        out.stdout.push_str(&text);
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut Outcome) -> Result<(), Failure> {
    match &cli.command {
        Command::Parse(input) => {
            let (_, ideal) = read_input(input, stdin, out)?;
            let value = json!({
                "schema": REPORT_SCHEMA,
                "variables": ideal.vars().names(),
                "normalized_generators": generators(&ideal),
            });
            let text = format!("vars {}\n{}\n", ideal.vars().names().join(","), render_ideal(&ideal));
            emit(out, cli.json, &value, text);
        }
        Command::Decompose { input, irreducible, hv } => {
            let (_, ideal) = read_input(input, stdin, out)?;
            let dec = primary_decomposition(&ideal)?;
            let mut text = String::new();
            let records = if *irreducible { dec.irreducible_records() } else { dec.primary_records() };
            let parts: Vec<&MonomialIdeal> = if *irreducible {
                Vec::new()
            } else {
                dec.components.iter().map(|c| &c.ideal).collect()
            };
            if *irreducible {
                for c in dec.components.iter().flat_map(|c| c.irreducibles.iter()) {
                    let _ = writeln!(text, "{}", render_ideal(&c.to_ideal(ideal.vars())));
                }
            } else {
                for (c, p) in dec.components.iter().zip(parts) {
                    let tag = if c.minimal { "minimal" } else { "embedded" };
                    let _ = writeln!(text, "{}  [{} ({})]", render_ideal(p), tag, c.prime.names().join(","));
                }
            }
            let mut value = json!({
                "schema": REPORT_SCHEMA,
                "normalized_generators": generators(&ideal),
                "kind": if *irreducible { "irreducible" } else { "primary" },
                "components": records,
            });
            if *hv {
                let pres = hv_presentation(&ideal)?;
                let powers: Vec<Value> = pres
                    .powers
                    .iter()
                    .map(|p| json!({"prime": p.prime.names(), "exponent": p.exponent}))
                    .collect();
                let _ = writeln!(
                    text,
                    "hv: {} ∩ m^{}",
                    pres.powers
                        .iter()
                        .map(|p| format!("({})^{}", p.prime.names().join(","), p.exponent))
                        .collect::<Vec<_>>()
                        .join(" ∩ "),
                    pres.s
                );
                value["hv"] = json!({"powers": powers, "s": pres.s});
            }
            emit(out, cli.json, &value, text);
        }
        Command::Localize { input, kill, at } => {
            let (_, ideal) = read_input(input, stdin, out)?;
            let keep = if at.is_empty() {
                names_to_mask(&ideal, kill)?.complement(ideal.nvars())
            } else {
                names_to_mask(&ideal, at)?
            };
            let local = at_mask(&ideal, keep);
            let value = json!({
                "schema": REPORT_SCHEMA,
                "prime": ideal.vars().mask_names(keep),
                "unit": local.is_unit(),
                "normalized_generators": generators(&local),
            });
            let shown = if local.is_unit() { "(1)".to_string() } else { render_ideal(&local) };
            emit(out, cli.json, &value, format!("{shown}\n"));
        }
        Command::Check(args) => check(cli.json, args, stdin, out)?,
        Command::Homology { input, field } => {
            let (_, ideal) = read_input(input, stdin, out)?;
            let field: Field = field.parse()?;
            let (pol, _) = polarize(&ideal)?;
            let complex = stanley_reisner_complex(&pol)?;
            let betti = reduced_homology_ranks(&complex, field);
            let verdict = is_cm_reisner(&ideal, field)?;
            let value = json!({
                "schema": REPORT_SCHEMA,
                "field": field.to_string(),
                "polarized_variables": pol.vars().names(),
                "f_vector": complex.f_vector(),
                "reduced_betti": betti,
                "cohen_macaulay": verdict.cohen_macaulay,
                "failing_face": verdict.failing_face,
            });
            let text = format!(
                "field {field}\npolarized variables {}\nf-vector {:?}\nreduced betti (from dim -1) {:?}\ncohen-macaulay {}\n",
                pol.nvars(),
                complex.f_vector(),
                betti,
                verdict.cohen_macaulay
            );
            emit(out, cli.json, &value, text);
        }
        Command::Verify { suite, n, d, budget, seed } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Failure::Usage(format!("unknown suite `{suite}`; known suites: {}", SUITES.join(", "))));
            }
            let params = SuiteParams { n: *n, d: *d, budget: *budget, seed: *seed };
            let report = run_suite(suite, &params)?;
            let value = json!({"schema": REPORT_SCHEMA, "report": report});
            let mut text = format!(
                "suite {} (n <= {}, d <= {}): population {}, {} counterexamples, {} ms\n",
                report.suite,
                report.n_max,
                report.d_max,
                report.population,
                report.count("counterexamples"),
                report.elapsed_ms
            );
            for (k, v) in &report.counts {
                let _ = writeln!(text, "  {k}: {v}");
            }
            for c in &report.counterexamples {
                let _ = writeln!(text, "counterexample: {}\n  {}", c.detail, c.ideal.replace('\n', "\n  "));
            }
            emit(out, cli.json, &value, text);
            if !report.clean() {
                out.code = EXIT_COUNTEREXAMPLE;
            }
        }
    }
    Ok(())
}

fn polymatroid_json(ideal: &MonomialIdeal, v: &PolymatroidVerdict) -> Value {
    match v {
        PolymatroidVerdict::Polymatroidal => json!({"holds": true}),
        PolymatroidVerdict::NotSingleDegree => json!({"holds": false, "reason": "not_single_degree"}),
        PolymatroidVerdict::ExchangeFails { u, v, i } => json!({
            "holds": false,
            "reason": "exchange_fails",
            "witness": {
                "u": render_monomial(ideal.vars(), u),
                "v": render_monomial(ideal.vars(), v),
                "variable": ideal.vars().name(*i),
            }
        }),
    }
}

fn run_check(name: &str, ideal: &MonomialIdeal, args: &CheckArgs, field: Field) -> polymat_core::Result<Value> {
    Ok(match name {
        "polymatroidal" => polymatroid_json(ideal, &is_polymatroidal(ideal)?),
        "matroidal" => json!({"holds": is_matroidal(ideal)?}),
        "cm-shape" => {
            let shape = recognize_cm_shape(ideal)?;
            json!({"holds": shape.is_cm(), "shape": shape})
        }
        "codim1" => {
            let v = is_connected_codim_one(ideal)?;
            if args.certificate {
                json!({"holds": v.connected, "certificate": v.certificate})
            } else {
                json!({"holds": v.connected})
            }
        }
        "unmixed" => json!({"holds": is_unmixed(ideal)?}),
        "equidimensional" => json!({"holds": is_equidimensional(ideal)?}),
        "cm" => json!({"holds": is_cm_polymatroidal(ideal)?}),
        "gcm" => {
            let v = is_generalized_cm(ideal)?;
            json!({
                "holds": v.generalized_cm,
                "equidimensional": v.equidimensional,
                "witness": v.witness,
                "failing_localizations": v.failures.len(),
            })
        }
        "theorem-th" => match split_maximal_component(ideal)? {
            None => json!({"holds": null, "reason": "maximal_component_not_a_power"}),
            Some((j, s)) => {
                let r = theorem_th_classify(&j, s)?;
                json!({
                    "holds": r.clauses.any(),
                    "j": render_ideal(&j),
                    "s": s,
                    "clauses": r.clauses.labels(),
                    "polymatroidal": r.polymatroidal,
                    "gcm": r.generalized_cm,
                    "consistent": r.consistent(),
                })
            }
        },
        "cm-oracle" => {
            let v = is_cm_reisner(ideal, field)?;
            json!({"holds": v.cohen_macaulay, "field": field.to_string(), "detail": v})
        }
        _ => unreachable!("check names are validated before dispatch"),
    })
}

fn check(json_mode: bool, args: &CheckArgs, stdin: &mut dyn Read, out: &mut Outcome) -> Result<(), Failure> {
    let selected = args.selected().map_err(Failure::Usage)?;
    let field: Field = args.field.parse()?;
    let (text_in, ideal) = read_input(&args.input, stdin, out)?;
    let mut checks = BTreeMap::new();
    let mut timings = BTreeMap::new();
    let mut text = format!("{}\n", render_ideal(&ideal));
    for name in &selected {
        let start = Instant::now();
        let verdict = match run_check(name, &ideal, args, field) {
            Ok(v) => v,
            Err(e) if matches!(e, Error::Parse(_)) => return Err(e.into()),
            Err(e) => json!({"holds": null, "error": e.to_string()}),
        };
        timings.insert(name.to_string(), start.elapsed().as_secs_f64() * 1000.0);
        let shown = match &verdict["holds"] {
            Value::Bool(b) => b.to_string(),
            _ => format!("n/a ({})", verdict["error"].as_str().or(verdict["reason"].as_str()).unwrap_or("")),
        };
        let _ = writeln!(text, "{name}: {shown}");
        if let Some(w) = verdict.get("witness").filter(|w| !w.is_null()) {
            let _ = writeln!(text, "  witness: {w}");
        }
        if let Some(c) = verdict.get("clauses") {
            let _ = writeln!(text, "  clauses: {c}");
        }
        if let Some(c) = verdict.get("certificate") {
            let _ = writeln!(text, "  certificate: {c}");
        }
        checks.insert(name.to_string(), verdict);
    }
    let value = json!({
        "schema": REPORT_SCHEMA,
        "input": text_in.trim(),
        "variables": ideal.vars().names(),
        "normalized_generators": generators(&ideal),
        "checks": checks,
        "timings_ms": timings,
    });
    emit(out, json_mode, &value, text);
    Ok(())
}
