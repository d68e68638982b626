//! `rainbowj`: generate graphs, decide, construct and verify J-colourings,
//! survey closed forms against exact search, and check cordial labelings.
//!
//! Exit codes: 0 = yes/valid, 1 = no/invalid, 2 = error or budget exceeded.

mod table;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use rainbowj::budget::DEFAULT_BUDGET_MS;
use rainbowj::coloring::r_chi;
use rainbowj::cordial::{find_cordial_labeling, labeling_stats, BinaryLabeling};
use rainbowj::family::{jahangir_instances, survey_row, FamilyInstance, SurveyRow};
use rainbowj::format::{from_json, graph_to_json, to_dot, Certificate};
use rainbowj::generators;
use rainbowj::jcolor::{self, JDecision};
use rainbowj::{Budget, Error, Graph, Variant};

#[derive(Parser)]
#[command(name = "rainbowj", version, about = "J-colourings of cycles, wheels and Jahangir graphs")]
struct Cli {
    /// Wall-clock budget for each exact search, in milliseconds.
    #[arg(long, global = true, env = "RAINBOWJ_BUDGET_MS", default_value_t = DEFAULT_BUDGET_MS)]
    budget_ms: u64,
    /// Node cap for each exact search; unlike the time budget this is
    /// reproducible across machines.
    #[arg(long, global = true)]
    max_nodes: Option<u64>,
    /// Worker threads for surveys.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph as JSON or DOT.
    Gen {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a J-colouring exists and report the J-number.
    Decide {
        #[command(flatten)]
        source: GraphSource,
        /// Also run the exact search and report agreement.
        #[arg(long)]
        oracle: bool,
        /// Ask about J*-colourings (rainbow condition on internal vertices only).
        #[arg(long)]
        jstar: bool,
    },
    /// Emit a certificate (graph + colouring + claim) for an admitting input.
    Construct {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        jstar: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate.
    Verify { certificate: PathBuf },
    /// Compare closed forms with exact search over a range of a family.
    Survey {
        #[arg(long, value_enum)]
        family: SurveyFamily,
        #[arg(long, default_value_t = 3)]
        min: usize,
        #[arg(long, default_value_t = 12)]
        max: usize,
        /// Jahangir only: include every J(n, m) with at most this many vertices.
        #[arg(long, default_value_t = 21)]
        max_vertices: usize,
        /// Jahangir only: smallest n.
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long)]
        jstar: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
    },
    /// Rainbow counts over the χ⁻-colourings of a graph.
    Rchi { graph: PathBuf },
    /// Cordial labelings.
    Cordial {
        #[command(subcommand)]
        action: CordialAction,
    },
}

#[derive(Subcommand)]
enum CordialAction {
    /// Exit 0 iff the labeling is cordial.
    Check { graph: PathBuf, labeling: PathBuf },
    /// Search for a cordial labeling; exit 1 if none exists.
    Find {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphSource {
    #[arg(long, value_enum, required_unless_present = "graph")]
    family: Option<Family>,
    /// Base family for mycielski-of / complement-of.
    #[arg(long, value_enum)]
    base: Option<Family>,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(short)]
    n: Option<usize>,
    #[arg(short)]
    m: Option<usize>,
    #[arg(short)]
    c: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Wheel,
    Jahangir,
    Complete,
    MycielskiOf,
    ComplementOf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SurveyFamily {
    Path,
    Cycle,
    Wheel,
    Jahangir,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Markdown,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let budget = Budget { max_nodes: cli.max_nodes, ..Budget::millis(cli.budget_ms) };
    match cli.command {
        Command::Gen { source, format, out } => {
            let graph = source.graph()?;
            let text = match format {
                Format::Json => graph_to_json(&graph) + "\n",
                Format::Dot => to_dot(&graph, None)?,
            };
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decide { source, oracle, jstar } => decide(&source, oracle, variant(jstar), &budget),
        Command::Construct { source, jstar, format, out } => {
            construct(&source, variant(jstar), format, out.as_deref(), &budget)
        }
        Command::Verify { certificate } => verify(&certificate),
        Command::Survey { family, min, max, max_vertices, min_n, jstar, format } => {
            let instances: Vec<FamilyInstance> = match family {
                SurveyFamily::Path => (min..=max).map(|n| FamilyInstance::Path { n }).collect(),
                SurveyFamily::Cycle => (min..=max).map(|c| FamilyInstance::Cycle { c }).collect(),
                SurveyFamily::Wheel => (min..=max).map(|c| FamilyInstance::Wheel { c }).collect(),
                SurveyFamily::Jahangir => jahangir_instances(min_n, max_vertices),
            };
            survey(&instances, variant(jstar), format, &budget, cli.threads)
        }
        Command::Rchi { graph } => rchi(&read_json::<Graph>(&graph)?, &budget),
        Command::Cordial { action } => cordial(action, &budget),
    }
}

fn variant(jstar: bool) -> Variant {
    if jstar {
        Variant::JStar
    } else {
        Variant::J
    }
}

fn exit_for(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

impl GraphSource {
    fn param(&self, name: char, value: Option<usize>) -> Result<usize> {
        value.ok_or_else(|| anyhow!("missing -{name}"))
    }

    /// The closed-form family instance, when the source names one.
    fn instance(&self) -> Result<Option<FamilyInstance>> {
        Ok(match self.family {
            Some(Family::Path) => Some(FamilyInstance::Path { n: self.param('n', self.n)? }),
            Some(Family::Cycle) => Some(FamilyInstance::Cycle { c: self.param('c', self.c)? }),
            Some(Family::Wheel) => Some(FamilyInstance::Wheel { c: self.param('c', self.c)? }),
            Some(Family::Jahangir) => Some(FamilyInstance::Jahangir {
                n: self.param('n', self.n)?,
                m: self.param('m', self.m)?,
            }),
            _ => None,
        })
    }

    fn graph(&self) -> Result<Graph> {
        match (self.family, &self.graph) {
            (None, Some(path)) => read_json(path),
            (Some(family @ (Family::MycielskiOf | Family::ComplementOf)), _) | (Some(family), None) => {
                self.family_graph(family)
            }
            (Some(_), Some(_)) => bail!("--graph only combines with mycielski-of or complement-of"),
            (None, None) => bail!("give --family or --graph"),
        }
    }

    fn family_graph(&self, family: Family) -> Result<Graph> {
        Ok(match family {
            Family::Complete => generators::complete(self.param('n', self.n)?)?,
            Family::MycielskiOf => generators::mycielski(&self.base_graph()?)?,
            Family::ComplementOf => self.base_graph()?.complement(),
            _ => self.instance()?.expect("closed-form family").graph()?,
        })
    }

    fn base_graph(&self) -> Result<Graph> {
        match (self.base, &self.graph) {
            (Some(Family::MycielskiOf | Family::ComplementOf), _) => {
                bail!("--base must be a plain family")
            }
            (Some(base), _) => GraphSource {
                family: Some(base),
                base: None,
                graph: None,
                n: self.n,
                m: self.m,
                c: self.c,
            }
            .family_graph(base),
            (None, Some(path)) => read_json(path),
            (None, None) => bail!("mycielski-of and complement-of need --base or --graph"),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => match io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        },
    }
}

fn describe(d: &JDecision) -> String {
    match d.j_number {
        Some(k) => format!("admits, {}={k}", d.variant),
        None => "not admits".to_string(),
    }
}

fn decide(source: &GraphSource, run_oracle: bool, variant: Variant, budget: &Budget) -> Result<ExitCode> {
    let closed = match source.instance()? {
        Some(inst) => match inst.closed_form(variant) {
            Ok(d) => {
                println!("{inst}: {}, rule={}", describe(&d), d.rule);
                Some(d)
            }
            Err(Error::InvalidParameter(msg)) if msg.contains("closed forms") => None,
            Err(e) => return Err(e.into()),
        },
        None => None,
    };
    if let (Some(c), false) = (&closed, run_oracle) {
        return Ok(exit_for(c.admits));
    }
    let graph = source.graph()?;
    let exact = jcolor::oracle(&graph, variant, budget)?;
    match &closed {
        Some(c) => println!(
            "oracle: {}, {}",
            describe(&exact),
            if exact.agrees_with(c) { "agrees" } else { "DISAGREES" }
        ),
        None => println!("{}, rule={}", describe(&exact), exact.rule),
    }
    if let Some(w) = &exact.witness {
        println!("witness: {}", serde_json::to_string(w)?);
    }
    Ok(exit_for(exact.admits))
}

fn construct(
    source: &GraphSource,
    variant: Variant,
    format: Format,
    out: Option<&Path>,
    budget: &Budget,
) -> Result<ExitCode> {
    let graph = source.graph()?;
    let closed = match source.instance()? {
        Some(inst) => inst.closed_form(variant).ok(),
        None => None,
    };
    let decision = match closed {
        Some(d) => d,
        None => jcolor::oracle(&graph, variant, budget)?,
    };
    let Some(coloring) = decision.witness else {
        eprintln!("no {variant}-colouring exists (rule={})", decision.rule);
        return Ok(ExitCode::from(1));
    };
    let text = match format {
        Format::Json => {
            serde_json::to_string_pretty(&Certificate::new(graph, coloring, variant))? + "\n"
        }
        Format::Dot => to_dot(&graph, Some(&coloring))?,
    };
    emit(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(path: &Path) -> Result<ExitCode> {
    let cert: Certificate = read_json(path)?;
    let check = cert.check()?;
    if check.valid {
        println!("valid {}-colouring with k={}", cert.claim, cert.k);
        return Ok(ExitCode::SUCCESS);
    }
    println!("invalid {}-colouring claim with k={}", cert.claim, cert.k);
    for (u, v) in &check.conflicting_edges {
        println!("  edge {u}-{v}: both ends coloured {}", cert.coloring.color(*u));
    }
    if check.colors_used != cert.k {
        println!("  colours used: {} of {}", check.colors_used, cert.k);
    }
    for v in &check.non_rainbow {
        println!("  vertex {v}: closed neighbourhood is not rainbow");
    }
    Ok(ExitCode::from(1))
}

fn survey(
    instances: &[FamilyInstance],
    variant: Variant,
    format: TableFormat,
    budget: &Budget,
    threads: usize,
) -> Result<ExitCode> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build()?;
    let rows: Vec<SurveyRow> = pool.install(|| {
        instances
            .par_iter()
            .map(|&inst| survey_row(inst, variant, budget))
            .collect::<rainbowj::Result<_>>()
    })?;
    let text = match format {
        TableFormat::Csv => table::csv(&rows),
        TableFormat::Markdown => table::markdown(&rows),
    };
    emit(None, &text)?;
    if rows.iter().any(|r| r.oracle.is_none()) {
        return Ok(ExitCode::from(2));
    }
    Ok(exit_for(rows.iter().all(|r| r.agree)))
}

fn rchi(graph: &Graph, budget: &Budget) -> Result<ExitCode> {
    let r = r_chi(graph, budget)?;
    let theta: Vec<String> = r.chi_minus.theta.iter().map(usize::to_string).collect();
    let mut text = format!(
        "chi={} theta=({}) colourings={}\nr_chi (min, max) = ({}, {}) of n={}\n",
        r.chi_minus.chi,
        theta.join(","),
        r.counts.len(),
        r.min,
        r.max,
        graph.num_vertices()
    );
    for (coloring, count) in r.chi_minus.colorings.iter().zip(&r.counts) {
        text += &format!("{:?} rainbow={count}\n", coloring.colors());
    }
    emit(None, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cordial(action: CordialAction, budget: &Budget) -> Result<ExitCode> {
    match action {
        CordialAction::Check { graph, labeling } => {
            let g: Graph = read_json(&graph)?;
            let f: BinaryLabeling = read_json(&labeling)?;
            let s = labeling_stats(&g, &f)?;
            println!("v0={} v1={} e0={} e1={}", s.v0, s.v1, s.e0, s.e1);
            println!("{}", if s.is_cordial() { "cordial" } else { "not cordial" });
            Ok(exit_for(s.is_cordial()))
        }
        CordialAction::Find { source, out } => {
            let g = source.graph()?;
            match find_cordial_labeling(&g, budget)? {
                Some(f) => {
                    emit(out.as_deref(), &(serde_json::to_string(&f)? + "\n"))?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    eprintln!("no cordial labeling exists");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}
