//! `eigenlogic`: command-line front end for the compiler.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain
//! error.

use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eigenlogic::elective::{format_canonical, MultilinearPoly};
use eigenlogic::formula::{self, Formula, VariableOrder};
use eigenlogic::observable::{from_truth_vector, trace_select, LogicalObservable};
use eigenlogic::state::{expectation, parse_amplitudes, InterpretationState};
use eigenlogic::truthtable::{truth_vector_with, Interpretation, TruthVector};
use eigenlogic::{verify, Error, Limits};
use num_bigint::BigUint;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "eigenlogic",
    version,
    about = "Compile propositional formulas to elective polynomials and projection observables"
)]
struct Cli {
    /// Variable order, comma separated; may add unused variables.
    #[arg(long, global = true)]
    vars: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Largest arity for explicit matrices.
    #[arg(long, global = true, default_value_t = Limits::default().dense_cap)]
    dense_cap: usize,
    /// Largest arity for truth tables and observables.
    #[arg(long, global = true, default_value_t = Limits::default().arity_cap)]
    arity_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    /// JSON with the same values as the text form.
    Structured,
}

#[derive(Args)]
struct FormulaArg {
    /// Formula text; read from standard input when absent.
    formula: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Truth table in row order, with its function index.
    Table(FormulaArg),
    /// Expanded multilinear polynomial.
    Poly {
        #[command(flatten)]
        formula: FormulaArg,
        /// Sum of minterms with (1-x) factors instead.
        #[arg(long)]
        canonical: bool,
    },
    /// Diagonal of the logical observable.
    Observable {
        #[command(flatten)]
        formula: FormulaArg,
        /// Print the full integer matrix.
        #[arg(long)]
        dense: bool,
    },
    /// Truth value at an assignment given as bits in variable order.
    Eval { formula: String, assignment: String },
    /// Expectation value on a state: `uniform` or amplitudes `re` / `re,im`
    /// separated by spaces or `;`.
    Expect { formula: String, amplitudes: String },
    /// Truth vector to function index, or index to truth vector with --arity.
    Index {
        value: String,
        #[arg(long)]
        arity: Option<usize>,
    },
    /// Exhaustive operator invariant suite.
    Verify {
        #[arg(long, default_value_t = 2)]
        arity: usize,
    },
}

enum Failure {
    Verify,
    Parse(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(p) => Failure::Parse(p.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<formula::ParseError> for Failure {
    fn from(e: formula::ParseError) -> Failure {
        Failure::Parse(e.to_string())
    }
}

struct Rendered {
    text: String,
    value: Value,
    ok: bool,
}

impl Rendered {
    fn new(text: String, value: Value) -> Rendered {
        Rendered {
            text,
            value,
            ok: true,
        }
    }
}

struct Compiled {
    formula: Formula,
    order: VariableOrder,
    tv: TruthVector,
}

impl Compiled {
    fn header(&self) -> Value {
        json!({
            "formula": self.formula.to_string(),
            "variables": self.order.names(),
            "arity": self.order.len(),
        })
    }
}

struct Context {
    vars: Option<String>,
    limits: Limits,
}

impl Context {
    fn compile(&self, text: &str) -> Result<Compiled, Failure> {
        let formula = formula::parse(text)?;
        let order = match &self.vars {
            Some(list) => VariableOrder::parse_list(list)?,
            None => formula.variables(),
        };
        let tv = truth_vector_with(&formula, &order, &self.limits)?;
        Ok(Compiled { formula, order, tv })
    }
}

fn read_formula(arg: FormulaArg) -> Result<String, Failure> {
    match arg.formula {
        Some(text) => Ok(text),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Domain(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}

fn with_header(c: &Compiled, extra: Value) -> Value {
    let mut value = c.header();
    if let (Value::Object(base), Value::Object(more)) = (&mut value, extra) {
        base.extend(more);
    }
    value
}

fn table(ctx: &Context, text: &str) -> Result<Rendered, Failure> {
    let c = ctx.compile(text)?;
    let mut lines = vec![format!("{} | f", c.order.names().join(" "))
        .trim_start()
        .to_string()];
    let mut rows = Vec::new();
    for itp in Interpretation::all(c.order.len()) {
        let value = u8::from(c.tv.at(&itp)?);
        let bits: Vec<String> = itp
            .bits()
            .iter()
            .map(|&b| u8::from(b).to_string())
            .collect();
        lines.push(
            format!("{} | {value}", bits.join(" "))
                .trim_start()
                .to_string(),
        );
        rows.push(json!({ "assignment": bits.concat(), "value": value }));
    }
    let index = c.tv.function_index();
    lines.push(format!("truth vector: {}", c.tv));
    lines.push(format!("function index: f_{index}"));
    let value = with_header(
        &c,
        json!({ "rows": rows, "truth_vector": c.tv.to_string(), "function_index": index.to_string() }),
    );
    Ok(Rendered::new(lines.join("\n"), value))
}

fn poly(ctx: &Context, text: &str, canonical: bool) -> Result<Rendered, Failure> {
    let c = ctx.compile(text)?;
    let p = MultilinearPoly::from_truth_vector(&c.tv)?;
    let rendered = if canonical {
        format_canonical(&c.tv, &c.order)
    } else {
        p.format_with(&c.order)
    };
    let monomials: Vec<Value> = p
        .monomials()
        .into_iter()
        .map(|(vars, coefficient)| {
            let names: Vec<&str> = vars.iter().map(|&k| c.order.names()[k].as_str()).collect();
            json!({ "variables": names, "coefficient": coefficient })
        })
        .collect();
    let form = if canonical { "canonical" } else { "polynomial" };
    let value = with_header(&c, json!({ form: rendered, "monomials": monomials }));
    Ok(Rendered::new(rendered, value))
}

fn observable(ctx: &Context, text: &str, dense: bool) -> Result<Rendered, Failure> {
    let c = ctx.compile(text)?;
    let op = from_truth_vector(&c.tv);
    let mut value = with_header(&c, json!({ "diagonal": op.diagonal() }));
    let text = if dense {
        let m = op.dense_with(&ctx.limits)?;
        value["dense"] = json!(m.rows());
        m.to_string()
    } else {
        op.to_string()
    };
    Ok(Rendered::new(text, value))
}

fn observable_of(ctx: &Context, text: &str) -> Result<(Compiled, LogicalObservable), Failure> {
    let c = ctx.compile(text)?;
    let op = from_truth_vector(&c.tv);
    Ok((c, op))
}

fn eval(ctx: &Context, text: &str, assignment: &str) -> Result<Rendered, Failure> {
    let (c, op) = observable_of(ctx, text)?;
    let itp: Interpretation = assignment.parse()?;
    let value = trace_select(&op, &itp)?;
    let json = with_header(&c, json!({ "assignment": itp.to_string(), "value": value }));
    Ok(Rendered::new(value.to_string(), json))
}

/// Rounds to 12 significant digits and prints the shortest form.
fn significant(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn expect(ctx: &Context, text: &str, amplitudes: &str) -> Result<Rendered, Failure> {
    let (c, op) = observable_of(ctx, text)?;
    let n = c.order.len();
    let state = if amplitudes.trim() == "uniform" {
        InterpretationState::uniform(n)?
    } else {
        InterpretationState::from_amplitudes(n, parse_amplitudes(amplitudes)?)?
    };
    let e = significant(expectation(&op, &state)?);
    let json = with_header(
        &c,
        json!({ "expectation": e, "was_normalized": state.was_normalized() }),
    );
    Ok(Rendered::new(e.to_string(), json))
}

fn index(value: &str, arity: Option<usize>) -> Result<Rendered, Failure> {
    let tv = match arity {
        Some(n) => {
            let index: BigUint = value
                .trim()
                .parse()
                .map_err(|_| Failure::Domain(format!("invalid function index `{value}`")))?;
            TruthVector::from_index(n, &index)?
        }
        None => value.parse()?,
    };
    let index = tv.function_index();
    let text = match arity {
        Some(_) => tv.to_string(),
        None => format!("f_{index}"),
    };
    let json = json!({
        "arity": tv.arity(),
        "truth_vector": tv.to_string(),
        "function_index": index.to_string(),
    });
    Ok(Rendered::new(text, json))
}

fn run_verify(arity: usize) -> Result<Rendered, Failure> {
    let report = verify::run(arity)?;
    let mut lines = vec![format!(
        "arity {}: {} observables",
        report.arity, report.observables
    )];
    for p in &report.properties {
        let status = if p.passed { "PASS" } else { "FAIL" };
        let mut line = format!("{status} {} ({} cases)", p.name, p.cases);
        if let Some(detail) = &p.detail {
            line.push_str(": ");
            line.push_str(detail);
        }
        lines.push(line);
    }
    let mut value = serde_json::to_value(&report).map_err(|e| Failure::Domain(e.to_string()))?;
    value["passed"] = json!(report.passed());
    Ok(Rendered {
        text: lines.join("\n"),
        value,
        ok: report.passed(),
    })
}

fn dispatch(cli: Cli) -> Result<Rendered, Failure> {
    let ctx = Context {
        vars: cli.vars,
        limits: Limits {
            arity_cap: cli.arity_cap,
            dense_cap: cli.dense_cap,
        },
    };
    match cli.command {
        Command::Table(f) => table(&ctx, &read_formula(f)?),
        Command::Poly { formula, canonical } => poly(&ctx, &read_formula(formula)?, canonical),
        Command::Observable { formula, dense } => observable(&ctx, &read_formula(formula)?, dense),
        Command::Eval {
            formula,
            assignment,
        } => eval(&ctx, &formula, &assignment),
        Command::Expect {
            formula,
            amplitudes,
        } => expect(&ctx, &formula, &amplitudes),
        Command::Index { value, arity } => index(&value, arity),
        Command::Verify { arity } => run_verify(arity),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output;
    let result = dispatch(cli).and_then(|r| {
        match output {
            Output::Text => println!("{}", r.text),
            Output::Structured => println!(
                "{}",
                serde_json::to_string_pretty(&r.value).expect("JSON values serialize")
            ),
        }
        if r.ok {
            Ok(())
        } else {
            Err(Failure::Verify)
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
