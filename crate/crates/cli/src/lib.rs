//! Command-line front end for the `monomial-crystal` library.
//!
//! [`run`] parses arguments, dispatches, and returns the exit code together with
//! the report text, which keeps the whole dispatcher testable without a process.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use monomial_crystal::crystal::{classify_params, fundamental, product_crystal, weight_space};
use monomial_crystal::export::{from_json_str, to_dot, to_json, SCHEMA_VERSION};
use monomial_crystal::hw::{enumerate_highest_weights, finite_dim_test, HwProblem};
use monomial_crystal::monomial::{
    decompose, is_highest_weight_monomial, monomial_from_data, weight,
};
use monomial_crystal::regularity::{enumerate_by_regularity, is_regular, Regularity};
use monomial_crystal::typea::{flag_diagram, flag_table, render_diagram, verify_flag_isomorphism};
use monomial_crystal::verify::{run_all, VerifyOptions};
use monomial_crystal::{
    Crystal, DynkinDiagram, Error, Monomial, Multiset, MultisetTuple, ParamSet, WeightVec,
    DEFAULT_CAP,
};
use serde::Deserialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "moncrys", version, about = "Monomial crystals and product monomial crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Diagram name such as A2, D4, E6.
    #[arg(long = "type", global = true)]
    diagram: Option<String>,

    /// Parameters, e.g. "1:0,2;3:-1".
    #[arg(long = "R", global = true, allow_hyphen_values = true)]
    r: Option<String>,

    /// Weight in fundamental-weight coordinates, e.g. "1,0,-1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    mu: Option<String>,

    /// JSON problem file with keys type, flip_parity, R, S, mu.
    #[arg(long, global = true)]
    spec: Option<PathBuf>,

    /// Swap the two parity classes of the diagram.
    #[arg(long, global = true)]
    flip_parity: bool,

    /// Bound on element insertions during generation.
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The fundamental crystal B(varpi_i, c).
    Fundamental {
        #[arg(long)]
        node: usize,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<i64>,
    },
    /// The product monomial crystal B(lambda, R).
    Product,
    /// Weight multiplicities of B(lambda, R), or one weight space with --mu.
    Weights,
    /// Highest-weight data S of weight mu via multiset inclusions.
    HighestWeights,
    /// Regularity verdict for (R, S).
    CheckRegular {
        /// S data, same syntax as --R.
        #[arg(long = "S", allow_hyphen_values = true)]
        s: Option<String>,
    },
    /// All regular S of weight mu.
    EnumerateRegular,
    /// Generic / well-spaced / maximally singular classification.
    Classify,
    /// The flag crystal F_n(R) and its isomorphism table.
    FlagCrystal {
        #[arg(long)]
        n: usize,
        /// Values of R, e.g. "0,0,2".
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        /// Include text pictures of each element's data.
        #[arg(long)]
        ascii: bool,
    },
    /// Run every cross-check suite.
    Verify {
        /// Fewer randomized cases.
        #[arg(long)]
        quick: bool,
    },
    /// Export B(lambda, R), or re-export a crystal JSON file given with --input.
    Export {
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemSpec {
    #[serde(rename = "type")]
    diagram: Option<String>,
    #[serde(default)]
    flip_parity: bool,
    #[serde(rename = "R")]
    r: Option<MultisetTuple>,
    #[serde(rename = "S")]
    s: Option<MultisetTuple>,
    mu: Option<Vec<i64>>,
}

struct Ctx {
    cli: Cli,
    spec: ProblemSpec,
}

type Out = Result<String, Error>;

impl Ctx {
    fn diagram(&self) -> Result<DynkinDiagram, Error> {
        let name = self
            .cli
            .diagram
            .clone()
            .or_else(|| self.spec.diagram.clone())
            .ok_or_else(|| Error::Invalid("--type is required".into()))?;
        let flip = self.cli.flip_parity || self.spec.flip_parity;
        Ok(DynkinDiagram::from_name(&name)?.with_parity_flip(flip))
    }

    fn params(&self, d: &DynkinDiagram) -> Result<ParamSet, Error> {
        let r = match (&self.cli.r, &self.spec.r) {
            (Some(text), _) => text
                .parse::<MultisetTuple>()
                .map_err(|e| Error::Invalid(format!("--R: {e}")))?,
            (None, Some(r)) => r.clone(),
            (None, None) => return Err(Error::Invalid("--R is required".into())),
        };
        ParamSet::new(d, r)
    }

    fn mu(&self, d: &DynkinDiagram) -> Result<Option<WeightVec>, Error> {
        let mu = match (&self.cli.mu, &self.spec.mu) {
            (Some(text), _) => Some(parse_ints(text).map_err(|e| Error::Invalid(format!("--mu: {e}")))?),
            (None, Some(v)) => Some(v.clone()),
            (None, None) => None,
        };
        match mu {
            Some(v) if v.len() != d.rank() => Err(Error::Invalid(format!(
                "--mu has {} entries, {d} has rank {}",
                v.len(),
                d.rank()
            ))),
            other => Ok(other.map(WeightVec)),
        }
    }

    fn required_mu(&self, d: &DynkinDiagram) -> Result<WeightVec, Error> {
        self.mu(d)?
            .ok_or_else(|| Error::Invalid("--mu is required".into()))
    }

    fn cap(&self) -> usize {
        self.cli.cap.unwrap_or(DEFAULT_CAP)
    }
}

fn parse_ints(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
        .collect()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn crystal_report(c: &Crystal, format: Format) -> String {
    match format {
        Format::Dot => to_dot(c),
        Format::Json => pretty(&serde_json::to_value(to_json(c)).expect("crystal json")),
        Format::Text => {
            let mut out = format!("{} elements, {} edges\n", c.len(), c.edges().len());
            for (idx, p) in c.elements().iter().enumerate() {
                let mark = if c.highest().contains(&idx) { " *" } else { "" };
                out.push_str(&format!("{idx:>5}  {p}  wt {}{mark}\n", c.weight_of(idx)));
            }
            out
        }
    }
}

fn s_list(items: &[MultisetTuple]) -> Vec<Value> {
    items.iter().map(|s| json!(s)).collect()
}

fn dispatch(ctx: &Ctx) -> Out {
    let format = ctx.cli.format;
    match &ctx.cli.command {
        Command::Fundamental { node, c } => {
            let d = ctx.diagram()?;
            let c = c.unwrap_or_else(|| d.parity(*node));
            Ok(crystal_report(&fundamental(&d, *node, c)?, format))
        }
        Command::Product => {
            let d = ctx.diagram()?;
            let r = ctx.params(&d)?;
            Ok(crystal_report(&product_crystal(&d, &r, ctx.cap())?, format))
        }
        Command::Export { input } => match input {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
                Ok(crystal_report(&from_json_str(&text)?, format))
            }
            None => {
                let d = ctx.diagram()?;
                let r = ctx.params(&d)?;
                Ok(crystal_report(&product_crystal(&d, &r, ctx.cap())?, format))
            }
        },
        Command::Weights => {
            let d = ctx.diagram()?;
            let r = ctx.params(&d)?;
            let c = product_crystal(&d, &r, ctx.cap())?;
            match ctx.mu(&d)? {
                Some(mu) => {
                    let elems: Vec<&Monomial> = weight_space(&c, &mu);
                    let rows: Vec<Value> = elems
                        .iter()
                        .map(|p| {
                            let s = decompose(&d, r.multisets(), p)?;
                            Ok(json!({"monomial": p.to_string(), "S": s}))
                        })
                        .collect::<Result<_, Error>>()?;
                    Ok(pretty(&json!({
                        "schema_version": SCHEMA_VERSION,
                        "mu": mu,
                        "size": rows.len(),
                        "elements": rows,
                    })))
                }
                None => {
                    let mults: BTreeMap<String, usize> = c
                        .weight_index()
                        .into_iter()
                        .map(|(w, idx)| (w.to_string(), idx.len()))
                        .collect();
                    if format == Format::Text {
                        return Ok(mults.iter().map(|(w, n)| format!("{w} {n}\n")).collect());
                    }
                    Ok(pretty(&json!({
                        "schema_version": SCHEMA_VERSION,
                        "size": c.len(),
                        "multiplicities": mults,
                    })))
                }
            }
        }
        Command::HighestWeights => {
            let d = ctx.diagram()?;
            let r = ctx.params(&d)?;
            let mu = ctx.required_mu(&d)?;
            let prob = HwProblem::new(&d, r.clone(), mu.clone())?;
            let found = enumerate_highest_weights(&prob)?;
            let rows: Vec<Value> = found
                .iter()
                .map(|s| {
                    let p = monomial_from_data(&d, r.multisets(), s);
                    let fd = finite_dim_test(&d, &r, s)?;
                    Ok(json!({
                        "S": s,
                        "monomial": p.to_string(),
                        "highest_weight": is_highest_weight_monomial(&d, &p),
                        "finite_dimensional": fd.finite,
                        "polys": fd.polys.map(|ps| ps.iter().map(|np| json!({
                            "node": np.node,
                            "P": np.p.to_string(),
                            "Q": np.q.to_string(),
                        })).collect::<Vec<_>>()),
                    }))
                })
                .collect::<Result<_, Error>>()?;
            Ok(pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "mu": mu,
                "m": prob.m,
                "dominant": prob.dominant,
                "count": rows.len(),
                "solutions": rows,
            })))
        }
        Command::CheckRegular { s } => {
            let d = ctx.diagram()?;
            let r = ctx.params(&d)?;
            let s = match (s, &ctx.spec.s) {
                (Some(text), _) => text
                    .parse::<MultisetTuple>()
                    .map_err(|e| Error::Invalid(format!("--S: {e}")))?,
                (None, Some(s)) => s.clone(),
                (None, None) => return Err(Error::Invalid("--S is required".into())),
            };
            let verdict = is_regular(&d, &r, &s)?;
            let p = monomial_from_data(&d, r.multisets(), &s);
            let mut out = json!({
                "schema_version": SCHEMA_VERSION,
                "diagram": d.name(),
                "monomial": p.to_string(),
                "regular": verdict.is_regular(),
            });
            if let Regularity::NotRegular { witness } = &verdict {
                out["witness"] = json!({
                    "node": witness.node,
                    "n": witness.n,
                    "q": witness.q.to_string(),
                    "U": witness.u,
                    "value": witness.value,
                });
            }
            if format == Format::Text {
                let mut text = render_diagram(&d, r.multisets(), &s);
                text.push_str(&match &verdict {
                    Regularity::Regular => "regular\n".to_string(),
                    Regularity::NotRegular { witness } => format!(
                        "not regular: E_q = {} for q = {} (node {}, n = {})\n",
                        witness.value, witness.q, witness.node, witness.n
                    ),
                });
                return Ok(text);
            }
            Ok(pretty(&out))
        }
        Command::EnumerateRegular => {
            let d = ctx.diagram()?;
            let r = ctx.params(&d)?;
            let mu = ctx.required_mu(&d)?;
            let found = enumerate_by_regularity(&d, &r, &mu)?;
            Ok(pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "mu": mu,
                "count": found.len(),
                "solutions": s_list(&found),
            })))
        }
        Command::Classify => {
            let d = ctx.diagram()?;
            let r = ctx.params(&d)?;
            let class = classify_params(&d, &r, ctx.cap())?;
            Ok(pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "well_spaced": class.well_spaced,
                "generic": class.generic,
                "maximally_singular": class.maximally_singular,
                "product_size": class.product_size,
                "tensor_bound": class.tensor_bound.to_string(),
                "component_size": class.component_size,
                "gap_bound": class.gap_bound,
            })))
        }
        Command::FlagCrystal { n, values, ascii } => {
            let r: Multiset = parse_ints(values)
                .map_err(|e| Error::Invalid(format!("--values: {e}")))?
                .into_iter()
                .collect();
            let d = flag_diagram(*n, &r)?;
            let report = verify_flag_isomorphism(*n, &r)?;
            let table = flag_table(*n, &r)?;
            let mut rt = MultisetTuple::new();
            rt.set(1, r.clone());
            if format == Format::Text || *ascii {
                let mut out = format!(
                    "F_{n}({r}): {} flags, isomorphism {}\n",
                    report.flags,
                    if report.holds() { "verified" } else { "FAILED" }
                );
                for (f, s, p) in &table {
                    out.push_str(&format!("{f}  ->  {p}\n"));
                    if *ascii {
                        out.push_str(&render_diagram(&d, &rt, s));
                    }
                }
                return Ok(out);
            }
            let rows: Vec<Value> = table
                .iter()
                .map(|(f, s, p)| {
                    json!({
                        "flag": f.steps(),
                        "S": s,
                        "monomial": p.to_string(),
                        "weight": weight(&d, p),
                    })
                })
                .collect();
            Ok(pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "n": n,
                "R": r,
                "report": report,
                "isomorphism": rows,
            })))
        }
        Command::Verify { quick } => Ok(run_verify(ctx, *quick).1),
    }
}

fn run_verify(ctx: &Ctx, quick: bool) -> (i32, String) {
    let mut opts = VerifyOptions {
        seed: ctx.cli.seed,
        ..VerifyOptions::default()
    };
    if quick {
        opts.kashiwara_cases = 1_000;
        opts.chain_cases = 100;
    }
    let results = run_all(&opts);
    let failed = results.iter().filter(|r| !r.passed).count();
    let text = if ctx.cli.format == Format::Json {
        pretty(&json!({
            "schema_version": SCHEMA_VERSION,
            "seed": opts.seed,
            "failed": failed,
            "checks": results,
        }))
    } else {
        let mut t = format!("seed {}\n", opts.seed);
        for r in &results {
            t.push_str(&r.line());
            t.push('\n');
        }
        t
    };
    (if failed > 0 { EXIT_FAIL } else { EXIT_OK }, text)
}

/// Runs the command line and returns `(exit code, report)`.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    let spec = match &cli.spec {
        None => ProblemSpec::default(),
        Some(path) => {
            let parsed = fs::read_to_string(path)
                .map_err(|e| format!("{}: {e}", path.display()))
                .and_then(|text| serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display())));
            match parsed {
                Ok(spec) => spec,
                Err(msg) => return (EXIT_INVALID, format!("error: --spec {msg}\n")),
            }
        }
    };
    let ctx = Ctx { cli, spec };
    if let Command::Verify { quick } = ctx.cli.command {
        return run_verify(&ctx, quick);
    }
    match dispatch(&ctx) {
        Ok(text) => (EXIT_OK, text),
        Err(e @ Error::CapExceeded { .. }) => (EXIT_CAP, format!("error: {e}\n")),
        Err(e) => (EXIT_INVALID, format!("error: {e}\n")),
    }
}
