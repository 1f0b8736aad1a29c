use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use qhpp::output::ReportRecord;
use qhpp::scalar::approx;
use qhpp::sweep::parse_range;
use qhpp::verify::{self, Suite};
use qhpp::{
    build, expand, render, singularity_types, weights, Chain, FamilyId, Format, KollarParams, Report, SweepSpec,
};

#[derive(Parser)]
#[command(
    name = "qhpp",
    version,
    about = "Exact computations with cyclic quotient singularities and rational surfaces of Picard number one"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a Hirzebruch-Jung continued fraction [n1,...,nl].
    Eval {
        #[arg(required = true, allow_negative_numbers = true)]
        entries: Vec<BigInt>,
    },
    /// Expand q/q1 into its Hirzebruch-Jung continued fraction.
    Expand {
        #[arg(allow_negative_numbers = true)]
        q: BigInt,
        #[arg(allow_negative_numbers = true)]
        q1: BigInt,
    },
    /// Weights and singularity types of the Kollar hypersurface.
    Kollar {
        #[arg(num_args = 4, required = true, allow_negative_numbers = true)]
        a: Vec<i64>,
    },
    /// Build a family member and classify its canonical class.
    Family {
        id: FamilyId,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        /// Print the report as one JSON record.
        #[arg(long)]
        json: bool,
        /// Write the dual graph of all tracked curves to this file.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "dot")]
        graph_format: GraphFormat,
        /// Also print a decimal approximation of E.f*K.
        #[arg(long)]
        decimal: bool,
    },
    /// Classify every parameter tuple in the given inclusive ranges (lo..hi).
    Sweep {
        id: FamilyId,
        #[arg(required = true, value_parser = parse_range_arg)]
        ranges: Vec<std::ops::RangeInclusive<i64>>,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        decimal: bool,
    },
    /// Run an invariant suite.
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Text,
}

fn parse_range_arg(s: &str) -> Result<std::ops::RangeInclusive<i64>, String> {
    parse_range(s).map_err(|e| e.to_string())
}

fn fraction(r: &qhpp::Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn cmd_eval(entries: Vec<BigInt>) -> Result<()> {
    let w = Chain::new(entries)?;
    let value = w.evaluate()?;
    let d = w.discrepancy_coefficients()?;
    let d: Vec<String> = d.iter().map(ToString::to_string).collect();
    println!("{}, |w|={}, d=({})", fraction(&value), w.determinant(), d.join(","));
    println!("{}", w.partial_orders());
    println!("type {}", w.singularity()?);
    Ok(())
}

fn cmd_expand(q: BigInt, q1: BigInt) -> Result<()> {
    let w = expand(q.clone(), q1.clone())?;
    println!("{w}");
    println!("type 1/{q}(1,{q1}), reversed {}", w.reverse());
    Ok(())
}

fn cmd_kollar(a: Vec<i64>) -> Result<()> {
    let p = KollarParams::<BigInt>::from_ints([a[0], a[1], a[2], a[3]])?;
    let kw = weights(&p);
    let w: Vec<String> = kw.w.iter().map(ToString::to_string).collect();
    println!("w=({}), d={}", w.join(","), kw.d);
    if !kw.wstar.is_one() {
        println!("w*={}; singularity types not applicable (need w*=1)", kw.wstar);
        return Ok(());
    }
    println!("w*=1, s1={}, s2={}", kw.s1, kw.s2);
    let (x, y) = singularity_types(&p)?;
    println!("types {}, {}", x.singularity, y.singularity);
    println!("chain1 {}", x.chain);
    println!("chain2 {}", y.chain);
    Ok(())
}

fn cmd_family(
    id: FamilyId,
    params: Vec<i64>,
    json: bool,
    graph: Option<PathBuf>,
    graph_format: GraphFormat,
    decimal: bool,
) -> Result<()> {
    let b = build(id, &params)?;
    b.validate()?;
    let report: Report = b.report()?;
    if let Some(path) = graph {
        let g = b.model.full_dual_graph();
        let text = match graph_format {
            GraphFormat::Dot => g.to_dot(&format!("{id}({})", join(&params))),
            GraphFormat::Text => g.to_text(),
        };
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    if json {
        println!("{}", ReportRecord::new(id, &params, &report).to_json());
        return Ok(());
    }
    println!("{id}({})", join(&params));
    for (i, p) in report.points.iter().enumerate() {
        println!("point {}: {} chain {} curves {}", i + 1, p.singularity, p.chain, p.curves.join(","));
    }
    println!("rho={}", report.rho);
    println!("k_class={}", report.k_class);
    if decimal {
        println!("k_value={} ({:.6}) on {}", report.k_value, approx(&report.k_value), report.test_curve);
    } else {
        println!("k_value={} on {}", report.k_value, report.test_curve);
    }
    Ok(())
}

fn join(params: &[i64]) -> String {
    params.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_sweep(
    id: FamilyId,
    ranges: Vec<std::ops::RangeInclusive<i64>>,
    format: Format,
    output: Option<PathBuf>,
    decimal: bool,
) -> Result<()> {
    let mut spec = SweepSpec::new(id, ranges, format)?;
    spec.output = output;
    let rows = spec.run()?;
    let text = render(id, &rows, format, decimal)?;
    match &spec.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_verify(suite: Suite) -> bool {
    let results = verify::run(suite);
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        println!("all {} checks passed", results.len());
    } else {
        println!("{failed} of {} checks failed", results.len());
    }
    failed == 0
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Eval { entries } => cmd_eval(entries)?,
        Command::Expand { q, q1 } => cmd_expand(q, q1)?,
        Command::Kollar { a } => {
            if a.len() != 4 {
                bail!("expected four exponents");
            }
            cmd_kollar(a)?
        }
        Command::Family { id, params, json, graph, graph_format, decimal } => {
            cmd_family(id, params, json, graph, graph_format, decimal)?
        }
        Command::Sweep { id, ranges, format, output, decimal } => cmd_sweep(id, ranges, format, output, decimal)?,
        Command::Verify { suite } => return Ok(cmd_verify(suite)),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
