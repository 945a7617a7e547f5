use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use arcstat::bruhat;
use arcstat::enumerate::{
    generating_polynomial, joint_distribution, perfect_matchings, set_partitions, Family, Statistic,
};
use arcstat::qpoly::QPolynomial;
use arcstat::stats::{length_ds, partition_stat_record, stat_record};
use arcstat::symmetry;
use arcstat::verify::{run_identity_suite, IdentityId, Mutation, SuiteOptions};
use arcstat::{PerfectMatching, SetPartition};
use arcstat_cli::render::{render_svg, PairKind, RenderObject, RenderSpec};

/// Statistics, identities, generating polynomials and arc diagrams of set
/// partitions and perfect matchings.
#[derive(Parser)]
#[command(name = "arcstat", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every statistic of one partition or matching
    Stats {
        #[command(flatten)]
        object: ObjectArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Generating polynomial of a statistic over a family
    Poly {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// One of dindex, inumber, ell, cro, nst, al, tvd
        #[arg(long)]
        stat: String,
        /// Compare against the known closed form (dindex, ell, inumber only)
        #[arg(long)]
        compare_closed_form: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stream a whole family with its statistics
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Aggregate a joint distribution of comma-separated statistics
        /// instead of listing objects
        #[arg(long, value_delimiter = ',')]
        joint: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the registered identity checks exhaustively
    Verify(VerifyArgs),
    /// The Bruhat order on fixed-point-free involutions
    Bruhat {
        #[arg(long)]
        n: usize,
        /// Emit the Hasse diagram as a DOT digraph
        #[arg(long)]
        covers: bool,
        /// Check that the order is graded by ell and emit a JSON report
        #[arg(long, conflicts_with = "covers")]
        check_rank: bool,
    },
    /// Export a statistic-exchanging bijection table
    Bijection {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Render an arc diagram as SVG
    Render {
        #[command(flatten)]
        object: ObjectArgs,
        /// Draw the extended diagram with opener/closer half-arcs
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        width: Option<u32>,
        #[arg(long)]
        height: Option<u32>,
        /// Emphasize the arcs of one pair type (matchings only)
        #[arg(long, value_enum)]
        highlight: Option<HighlightArg>,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every registered identity
    #[arg(long, conflicts_with = "identities")]
    all: bool,
    /// Comma-separated identity ids (see --list)
    #[arg(long, value_delimiter = ',')]
    identities: Vec<String>,
    /// List the registry and exit
    #[arg(long, exclusive = true)]
    list: bool,
    /// Bound for matching families (default: per-identity, 5)
    #[arg(long)]
    max_n: Option<usize>,
    /// Bound for the partition family (default 9)
    #[arg(long)]
    max_n_partitions: Option<usize>,
    /// Bound for the Bruhat gradedness check (default 4)
    #[arg(long)]
    max_n_bruhat: Option<usize>,
    /// Corrupt a statistic on purpose to demonstrate the suite catches it
    #[arg(long, value_enum)]
    inject_fault: Option<FaultArg>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    /// Every arc span reads one too large
    SpanPlusOne,
}

#[derive(Args)]
struct ObjectArgs {
    /// A set partition in bar notation (or as JSON {"n":..,"blocks":[..]})
    #[arg(long, group = "object")]
    partition: Option<String>,
    /// A perfect matching as a pair list like 1-4,2-3 (bar notation with
    /// blocks of size 2 also works)
    #[arg(long, group = "object")]
    matching: Option<String>,
    /// Ground-set size; inferred from the input when omitted
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Partitions,
    Matchings,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Partitions => Family::Partitions,
            FamilyArg::Matchings => Family::Matchings,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    /// The crossing/nesting exchanging involution
    Phi,
    /// The length-complementing involution
    Psi,
    /// Their composition carrying dindex onto shifted ell
    Witness,
}

#[derive(Clone, Copy, ValueEnum)]
enum HighlightArg {
    Crossings,
    Nestings,
    Alignments,
}

impl From<HighlightArg> for PairKind {
    fn from(h: HighlightArg) -> PairKind {
        match h {
            HighlightArg::Crossings => PairKind::Crossings,
            HighlightArg::Nestings => PairKind::Nestings,
            HighlightArg::Alignments => PairKind::Alignments,
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error:#}");
            // anything that is not a verification verdict is a usage problem
            ExitCode::from(2)
        }
    }
}

const VERIFY_FAILED: u8 = 1;

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Stats { object, format } => cmd_stats(&object, format),
        Command::Poly {
            family,
            n,
            stat,
            compare_closed_form,
            format,
        } => cmd_poly(family.into(), n, &stat, compare_closed_form, format),
        Command::Enumerate {
            family,
            n,
            joint,
            format,
        } => cmd_enumerate(family.into(), n, &joint, format),
        Command::Verify(args) => cmd_verify(&args),
        Command::Bruhat {
            n,
            covers,
            check_rank,
        } => cmd_bruhat(n, covers, check_rank),
        Command::Bijection { n, map, format } => cmd_bijection(n, map, format),
        Command::Render {
            object,
            extended,
            width,
            height,
            highlight,
            output,
        } => cmd_render(&object, extended, width, height, highlight, output),
    }
}

enum ParsedObject {
    Partition(SetPartition),
    Matching(PerfectMatching),
}

impl ObjectArgs {
    fn parse(&self) -> Result<ParsedObject> {
        if let Some(text) = &self.partition {
            let trimmed = text.trim();
            let partition = if trimmed.starts_with('{') {
                serde_json::from_str::<SetPartition>(trimmed).context("invalid partition JSON")?
            } else if let Some(n) = self.n {
                SetPartition::parse(trimmed, n).context("invalid partition")?
            } else {
                SetPartition::parse_infer(trimmed).context("invalid partition")?
            };
            if let Some(n) = self.n {
                if partition.ground_size() != n {
                    bail!(
                        "--n {n} does not match the ground set of size {}",
                        partition.ground_size()
                    );
                }
            }
            return Ok(ParsedObject::Partition(partition));
        }
        let Some(text) = self.matching.as_ref() else {
            bail!("give an object with --partition or --matching");
        };
        let matching = PerfectMatching::parse(text).context("invalid matching")?;
        if let Some(n) = self.n {
            if matching.ground_size() != n {
                bail!(
                    "--n {n} does not match the ground set of size {}",
                    matching.ground_size()
                );
            }
        }
        Ok(ParsedObject::Matching(matching))
    }
}

fn cmd_stats(object: &ObjectArgs, format: Format) -> Result<ExitCode> {
    match object.parse()? {
        ParsedObject::Partition(p) => {
            let record = partition_stat_record(&p);
            let mut value = serde_json::json!({
                "object": p.to_string(),
                "n": p.ground_size(),
            });
            merge(&mut value, serde_json::to_value(record)?);
            emit_record(&value, format)
        }
        ParsedObject::Matching(m) => {
            let record = stat_record(&m);
            let mut value = serde_json::json!({
                "object": m.to_string(),
                "n": m.ground_size(),
            });
            merge(&mut value, serde_json::to_value(record)?);
            emit_record(&value, format)
        }
    }
}

fn merge(into: &mut serde_json::Value, from: serde_json::Value) {
    let (Some(into), Some(from)) = (into.as_object_mut(), from.as_object()) else {
        unreachable!("records serialize to objects")
    };
    for (key, value) in from {
        into.insert(key.clone(), value.clone());
    }
}

fn emit_record(value: &serde_json::Value, format: Format) -> Result<ExitCode> {
    let object = value.as_object().expect("record is an object");
    match format {
        Format::Json => println!("{}", serde_json::to_string(value)?),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            writer.write_record(object.keys())?;
            writer.write_record(object.values().map(json_scalar))?;
            writer.flush()?;
        }
        Format::Text => {
            for (key, val) in object {
                println!("{key} = {}", json_scalar(val));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn json_scalar(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn closed_form(stat: Statistic, n: usize) -> Result<Option<QPolynomial>> {
    let double_factorial = QPolynomial::q_double_factorial(n)?;
    Ok(match stat {
        Statistic::Ell => Some(double_factorial),
        Statistic::Dindex => Some(double_factorial.shift(n * (n + 1) / 2)),
        Statistic::Inumber => Some(double_factorial.shift(n * (n - 1) / 2)),
        _ => None,
    })
}

fn cmd_poly(
    family: Family,
    n: usize,
    stat: &str,
    compare: bool,
    format: Format,
) -> Result<ExitCode> {
    let stat = Statistic::parse(stat)?;
    let poly = generating_polynomial(family, n, stat)?;
    let expected = if compare {
        let Some(expected) = closed_form(stat, n)? else {
            bail!("no closed form registered for statistic `{stat}` (try dindex, ell or inumber)");
        };
        if family != Family::Matchings {
            bail!("closed forms apply to the matchings family");
        }
        Some(expected)
    } else {
        None
    };

    let matched = expected.as_ref().map(|e| *e == poly);
    match format {
        Format::Json => {
            let mut value = serde_json::json!({
                "family": family,
                "n": n,
                "stat": stat,
                "coeffs": poly,
            });
            if let Some(expected) = &expected {
                merge(
                    &mut value,
                    serde_json::json!({ "closed_form": expected, "match": matched.unwrap() }),
                );
            }
            println!("{}", serde_json::to_string(&value)?);
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            writer.write_record(["exponent", "count"])?;
            for (e, &c) in poly.coeffs().iter().enumerate() {
                writer.write_record([e.to_string(), c.to_string()])?;
            }
            writer.flush()?;
        }
        Format::Text => match matched {
            None => println!("{poly}"),
            Some(true) => println!("MATCH: {poly}"),
            Some(false) => {
                println!("MISMATCH: got {poly}, expected {}", expected.unwrap());
            }
        },
    }
    Ok(if matched == Some(false) {
        ExitCode::from(VERIFY_FAILED)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_enumerate(family: Family, n: usize, joint: &[String], format: Format) -> Result<ExitCode> {
    if !joint.is_empty() {
        let stats: Vec<Statistic> = joint
            .iter()
            .map(|s| Statistic::parse(s))
            .collect::<Result<_, _>>()?;
        let table = joint_distribution(family, n, &stats)?;
        match format {
            Format::Json => {
                let counts: Vec<serde_json::Value> = table
                    .entries()
                    .map(|(key, count)| serde_json::json!({ "key": key, "count": count }))
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "family": family,
                        "n": n,
                        "stats": table.stats(),
                        "total": table.total(),
                        "counts": counts,
                    })
                );
            }
            Format::Csv | Format::Text => {
                let mut writer = csv::Writer::from_writer(std::io::stdout());
                let mut header: Vec<String> =
                    table.stats().iter().map(|s| s.name().to_string()).collect();
                header.push("count".to_string());
                writer.write_record(&header)?;
                for (key, count) in table.entries() {
                    let mut row: Vec<String> = key.iter().map(u64::to_string).collect();
                    row.push(count.to_string());
                    writer.write_record(&row)?;
                }
                writer.flush()?;
            }
        }
        return Ok(ExitCode::SUCCESS);
    }

    match family {
        Family::Matchings => {
            let rows = perfect_matchings(n).map(|m| {
                let r = stat_record(&m);
                (
                    m.to_string(),
                    serde_json::to_value(r).expect("record serializes"),
                )
            });
            emit_rows(rows, format)
        }
        Family::Partitions => {
            let rows = set_partitions(n).map(|p| {
                let r = partition_stat_record(&p);
                (
                    p.to_string(),
                    serde_json::to_value(r).expect("record serializes"),
                )
            });
            emit_rows(rows, format)
        }
    }
}

fn emit_rows(
    rows: impl Iterator<Item = (String, serde_json::Value)>,
    format: Format,
) -> Result<ExitCode> {
    match format {
        Format::Text => {
            for (object, _) in rows {
                println!("{object}");
            }
        }
        Format::Json => {
            for (object, record) in rows {
                let mut value = serde_json::json!({ "object": object });
                merge(&mut value, record);
                println!("{value}");
            }
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            let mut wrote_header = false;
            for (object, record) in rows {
                let fields = record.as_object().expect("record is an object");
                if !wrote_header {
                    let mut header = vec!["object".to_string()];
                    header.extend(fields.keys().cloned());
                    writer.write_record(&header)?;
                    wrote_header = true;
                }
                let mut row = vec![object];
                row.extend(fields.values().map(json_scalar));
                writer.write_record(&row)?;
            }
            writer.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    if args.list {
        for entry in arcstat::verify::registry() {
            println!(
                "{:<12} {:<10} default n <= {:<2}  {}",
                entry.id.as_str(),
                entry.family.to_string(),
                entry.default_max_n,
                entry.description
            );
        }
        return Ok(ExitCode::SUCCESS);
    }
    let selection: Vec<IdentityId> = if args.all || args.identities.is_empty() {
        if !args.all && args.identities.is_empty() {
            bail!("select identities with --all or --identities");
        }
        IdentityId::ALL.to_vec()
    } else {
        args.identities
            .iter()
            .map(|name| IdentityId::parse(name))
            .collect::<Result<_, _>>()?
    };
    let opts = SuiteOptions {
        max_n_matchings: args.max_n,
        max_n_partitions: args.max_n_partitions,
        max_n_bruhat: args.max_n_bruhat,
        mutation: match args.inject_fault {
            None => Mutation::None,
            Some(FaultArg::SpanPlusOne) => Mutation::SpanPlusOne,
        },
    };
    let report = run_identity_suite(&selection, &opts)?;
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            writer.write_record([
                "identity",
                "n",
                "status",
                "counterexample",
                "objects_visited",
                "elapsed_ms",
            ])?;
            for check in &report.checks {
                writer.write_record([
                    check.identity.to_string(),
                    check.n.to_string(),
                    format!("{:?}", check.status).to_uppercase(),
                    check.counterexample.clone().unwrap_or_default(),
                    check.objects_visited.to_string(),
                    check.elapsed_ms.to_string(),
                ])?;
            }
            writer.flush()?;
        }
        Format::Text => {
            for check in &report.checks {
                let status = format!("{:?}", check.status).to_uppercase();
                print!(
                    "{status} {} n={} ({} objects, {} ms)",
                    check.identity, check.n, check.objects_visited, check.elapsed_ms
                );
                match &check.counterexample {
                    Some(counterexample) => println!("  counterexample: {counterexample}"),
                    None => println!(),
                }
            }
        }
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERIFY_FAILED)
    })
}

fn cmd_bruhat(n: usize, covers: bool, check_rank: bool) -> Result<ExitCode> {
    if covers {
        let cover_pairs = bruhat::hasse_covers(n)?;
        let mut out = String::new();
        out.push_str("digraph bruhat {\n  rankdir=BT;\n");
        for m in perfect_matchings(n) {
            out.push_str(&format!(
                "  \"{m}\" [label=\"{m}\\nell={}\"];\n",
                length_ds(&m)
            ));
        }
        for (a, b) in &cover_pairs {
            out.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        out.push_str("}\n");
        print!("{out}");
        return Ok(ExitCode::SUCCESS);
    }
    if check_rank {
        let report = bruhat::verify_rank_is_length(n)?;
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(if report.pass {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(VERIFY_FAILED)
        });
    }
    Err(anyhow!("choose --covers or --check-rank"))
}

fn cmd_bijection(n: usize, map: MapKind, format: Format) -> Result<ExitCode> {
    let table = match map {
        MapKind::Phi => symmetry::cn_involution(n)?,
        MapKind::Psi => symmetry::length_complement(n)?,
        MapKind::Witness => symmetry::depth_length_witness(n)?,
    };
    match format {
        Format::Csv | Format::Text => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            writer.write_record(["source", "image"])?;
            for (source, image) in table.pairs() {
                writer.write_record([source.to_string(), image.to_string()])?;
            }
            writer.flush()?;
        }
        Format::Json => {
            for (source, image) in table.pairs() {
                println!(
                    "{}",
                    serde_json::json!({ "source": source.to_string(), "image": image.to_string() })
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_render(
    object: &ObjectArgs,
    extended: bool,
    width: Option<u32>,
    height: Option<u32>,
    highlight: Option<HighlightArg>,
    output: Option<PathBuf>,
) -> Result<ExitCode> {
    let render_object = match object.parse()? {
        ParsedObject::Partition(p) => RenderObject::Partition(p),
        ParsedObject::Matching(m) => RenderObject::Matching(m),
    };
    let n = match &render_object {
        RenderObject::Partition(p) => p.ground_size(),
        RenderObject::Matching(m) => m.ground_size(),
    };
    let spec = RenderSpec {
        object: render_object,
        extended,
        width: width.unwrap_or_else(|| (60 * n as u32 + 160).max(320)),
        height: height.unwrap_or(280),
        highlight: highlight.map(PairKind::from),
    };
    let svg = render_svg(&spec)?;
    match output {
        Some(path) => {
            fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout().write_all(svg.as_bytes())?,
    }
    Ok(ExitCode::SUCCESS)
}
