//! The `wellcovered` command line.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certificate::{build_plan_with, plan_at_m, CertificatePlan, PlanOptions, TargetSequence, DEFAULT_M_CAP};
use crate::enumeration::{
    check_property_p, independence_polynomial, independence_polynomial_brute_force, is_well_covered,
    mt_inequality_check,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, read_all, to_graph6_string};
use crate::hkqm::{HkqmLayout, HkqmParams, DEFAULT_VERTEX_BUDGET};
use crate::rational;
use crate::rollercoaster::{realize_with, RealizationReport, RealizeOptions, TailPermutation};

#[derive(Parser, Debug)]
#[command(name = "wellcovered", version, about = "Well-covered graphs with prescribed independence-sequence tails")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build H(k,q;m) and write it as graph6.
    Construct(ConstructArgs),
    /// Analyze graph6 input.
    Check(CheckArgs),
    /// Plan a certificate for a target sequence.
    Plan(PlanArgs),
    /// Realize a tail permutation.
    Realize(RealizeArgs),
    /// Randomized cross-checks of the counting routines.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(short)]
    pub k: usize,
    #[arg(short)]
    pub q: usize,
    #[arg(short)]
    pub m: usize,
    /// Write the vertex labels as JSON to this file.
    #[arg(long)]
    pub labels: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
    pub budget: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Wellcovered,
    PropertyP,
    Mt,
    Indpoly,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub mode: CheckMode,
    #[arg(short)]
    pub k: Option<usize>,
    #[arg(short)]
    pub q: Option<usize>,
    #[arg(short)]
    pub m: Option<usize>,
    /// graph6 file, one graph per line; stdin when omitted or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PlanArgs {
    /// Target coefficients a_1,...,a_q (integers, decimals or p/q).
    #[arg(long)]
    pub target: String,
    /// Expected degree; checked against the target length.
    #[arg(short)]
    pub q: Option<usize>,
    #[arg(long, default_value = "1/3")]
    pub epsilon: String,
    #[arg(long, default_value_t = DEFAULT_M_CAP)]
    pub mcap: u64,
    /// Plan at this m without searching; the result may be uncertified.
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug)]
pub struct RealizeArgs {
    #[arg(short)]
    pub q: usize,
    /// Images of the tail in increasing order (`3,2`) or a JSON map (`{"2":3,"3":2}`).
    #[arg(long)]
    pub pi: String,
    /// Build the graph when it fits the budget.
    #[arg(long)]
    pub materialize: bool,
    #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
    pub budget: usize,
    #[arg(long, default_value_t = DEFAULT_M_CAP)]
    pub mcap: u64,
    /// Also write the materialized graph as graph6 to this file.
    #[arg(long)]
    pub graph_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub rounds: usize,
}

/// Parses `std::env::args` and runs; returns the process exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 4 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<()> {
    let mut out = open_out(cli.out.as_deref())?;
    match &cli.command {
        Command::Construct(a) => construct(a, &mut *out)?,
        Command::Check(a) => check(a, cli.format, &mut *out)?,
        Command::Plan(a) => plan(a, cli.format, &mut *out)?,
        Command::Realize(a) => realize(a, cli.format, &mut *out)?,
        Command::Selftest(a) => selftest(a, cli.format, &mut *out)?,
    }
    out.flush()?;
    Ok(())
}

fn construct(a: &ConstructArgs, out: &mut dyn Write) -> Result<()> {
    let layout = HkqmLayout::new(HkqmParams::new(a.k, a.q, a.m)?, a.budget)?;
    layout.write_graph6(&mut &mut *out)?;
    out.write_all(b"\n")?;
    if let Some(path) = &a.labels {
        let mut f = BufWriter::new(File::create(path)?);
        layout.write_label_sidecar(&mut f)?;
        f.flush()?;
    }
    Ok(())
}

fn read_input(path: Option<&Path>) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    match path {
        Some(p) if p != Path::new("-") => {
            File::open(p)?.read_to_end(&mut buf)?;
        }
        _ => {
            io::stdin().lock().read_to_end(&mut buf)?;
        }
    }
    Ok(buf)
}

fn require(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameters(format!("--mode property-p needs -{name}")))
}

fn check(a: &CheckArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    let graphs = read_all(&read_input(a.input.as_deref())?)?;
    if graphs.is_empty() {
        return Err(Error::Graph6("no graph in input".into()));
    }
    for g in &graphs {
        match a.mode {
            CheckMode::Indpoly => {
                let p = independence_polynomial(g);
                match format {
                    Format::Json => emit_json(out, &p)?,
                    Format::Text => writeln!(out, "{p}")?,
                }
            }
            CheckMode::Wellcovered => {
                let r = is_well_covered(g);
                match format {
                    Format::Json => emit_json(out, &r)?,
                    Format::Text => match &r.witness {
                        None => writeln!(out, "well-covered, alpha = {}", r.alpha)?,
                        Some((s, l)) => writeln!(out, "not well-covered: maximal independent sets {s:?} and {l:?}")?,
                    },
                }
            }
            CheckMode::PropertyP => {
                let (k, q, m) = (require(a.k, "k")?, require(a.q, "q")?, require(a.m, "m")?);
                let r = check_property_p(g, k, q, m)?;
                match format {
                    Format::Json => emit_json(out, &r)?,
                    Format::Text => {
                        writeln!(out, "P({k},{q};{m}) {}", if r.holds { "holds" } else { "fails" })?;
                        writeln!(out, "maximal cliques: {}", r.maximal_cliques)?;
                        for v in &r.violations {
                            writeln!(out, "condition {}: clique {:?}, observed {}", v.condition, v.clique, v.observed)?;
                        }
                    }
                }
            }
            CheckMode::Mt => {
                let r = mt_inequality_check(g)?;
                match format {
                    Format::Json => emit_json(out, &r)?,
                    Format::Text => match r.first_violation {
                        None => writeln!(out, "holds, alpha = {}, counts {}", r.alpha, r.counts)?,
                        Some(t) => writeln!(out, "fails at t = {t}, counts {}", r.counts)?,
                    },
                }
            }
        }
    }
    Ok(())
}

fn parse_target(s: &str) -> Result<TargetSequence> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    let a = body
        .split(',')
        .map(|x| rational::parse(x.trim().trim_matches('"')))
        .collect::<Result<Vec<_>>>()?;
    TargetSequence::new(a.len(), a)
}

fn write_plan_text(out: &mut dyn Write, plan: &CertificatePlan) -> Result<()> {
    writeln!(out, "q = {}, epsilon = {}, m = {}", plan.q, rational::format(&plan.epsilon), plan.m)?;
    writeln!(out, "T = {}", plan.scale)?;
    for c in &plan.components {
        writeln!(
            out,
            "  {} x complement(H({},{};{})), {} vertices each",
            c.copies, c.k, plan.q, c.m, c.vertices_per_copy
        )?;
    }
    for (t, (p, d)) in plan.predicted.iter().zip(&plan.deviations).enumerate() {
        writeln!(out, "  i_{} = {}  deviation {}", t + 1, p, rational::format(d))?;
    }
    writeln!(out, "total vertices {}", plan.total_vertices)?;
    writeln!(out, "{}", if plan.certified { "certified" } else { "not certified" })?;
    Ok(())
}

fn plan(a: &PlanArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    let target = parse_target(&a.target)?;
    if let Some(q) = a.q {
        if q != target.q() {
            return Err(Error::InvalidParameters(format!(
                "-q {q} does not match {} target values",
                target.q()
            )));
        }
    }
    let epsilon: BigRational = rational::parse(&a.epsilon)?;
    let plan = match a.m {
        Some(m) => plan_at_m(&target, &epsilon, m)?,
        None => build_plan_with(&target, &epsilon, &PlanOptions { m_cap: a.mcap })?,
    };
    match format {
        Format::Json => emit_json(out, &plan),
        Format::Text => write_plan_text(out, &plan),
    }
}

fn write_report_text(out: &mut dyn Write, r: &RealizationReport) -> Result<()> {
    write_plan_text(out, &r.plan)?;
    let chain: Vec<String> = r.chain.iter().map(|e| format!("i_{} = {}", e.index, e.count)).collect();
    writeln!(out, "{}", chain.join(" < "))?;
    writeln!(out, "ordering verified: {}", r.ordering_verified)?;
    writeln!(out, "materialized: {}", r.materialized)?;
    Ok(())
}

fn realize(a: &RealizeArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    let p = TailPermutation::parse(a.q, &a.pi)?;
    let options = RealizeOptions {
        m_cap: a.mcap,
        materialize: a.materialize || a.graph_out.is_some(),
        vertex_budget: a.budget,
    };
    let (report, graph) = realize_with(&p, &options)?;
    if let Some(path) = &a.graph_out {
        let g = graph.as_ref().ok_or_else(|| Error::Budget {
            what: "realized graph".into(),
            needed: report.plan.total_vertices.clone(),
            budget: a.budget,
        })?;
        let mut f = BufWriter::new(File::create(path)?);
        crate::graph6::write_graph6(g, &mut f)?;
        f.write_all(b"\n")?;
        f.flush()?;
    }
    match format {
        Format::Json => emit_json(out, &report),
        Format::Text => write_report_text(out, &report),
    }
}

fn random_graph(rng: &mut ChaCha8Rng, sizes: std::ops::RangeInclusive<usize>) -> Graph {
    let n = rng.gen_range(sizes);
    let p: f64 = rng.gen_range(0.1..0.9);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("valid edges")
}

#[derive(Serialize)]
struct SelftestSummary {
    seed: u64,
    rounds: usize,
    indpoly_vs_brute_force: usize,
    join_additivity: usize,
    graph6_round_trip: usize,
    failures: Vec<String>,
}

fn selftest(a: &SelftestArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut s = SelftestSummary {
        seed: a.seed,
        rounds: a.rounds,
        indpoly_vs_brute_force: 0,
        join_additivity: 0,
        graph6_round_trip: 0,
        failures: Vec::new(),
    };
    for round in 0..a.rounds {
        let g = random_graph(&mut rng, 0..=16);
        if independence_polynomial(&g) == independence_polynomial_brute_force(&g)? {
            s.indpoly_vs_brute_force += 1;
        } else {
            s.failures.push(format!("round {round}: indpoly {}", to_graph6_string(&g)));
        }

        let h = random_graph(&mut rng, 1..=10);
        let g1 = random_graph(&mut rng, 1..=10);
        let joined = independence_polynomial(&Graph::join_refs(&[&g1, &h])?);
        let (pg, ph) = (independence_polynomial(&g1), independence_polynomial(&h));
        let len = pg.coeffs().len().max(ph.coeffs().len());
        if (1..len).all(|t| joined.coeff(t) == pg.coeff(t) + ph.coeff(t)) && joined.coeffs().len() == len {
            s.join_additivity += 1;
        } else {
            s.failures.push(format!("round {round}: join"));
        }

        let big = random_graph(&mut rng, 0..=60);
        if from_graph6(to_graph6_string(&big).as_bytes())? == big {
            s.graph6_round_trip += 1;
        } else {
            s.failures.push(format!("round {round}: graph6 {}", to_graph6_string(&big)));
        }
    }
    match format {
        Format::Json => emit_json(out, &s)?,
        Format::Text => {
            writeln!(out, "seed {} rounds {}", s.seed, s.rounds)?;
            writeln!(out, "indpoly vs brute force: {}/{}", s.indpoly_vs_brute_force, s.rounds)?;
            writeln!(out, "join additivity: {}/{}", s.join_additivity, s.rounds)?;
            writeln!(out, "graph6 round trip: {}/{}", s.graph6_round_trip, s.rounds)?;
            for f in &s.failures {
                writeln!(out, "FAIL {f}")?;
            }
        }
    }
    if s.failures.is_empty() {
        Ok(())
    } else {
        Err(Error::Internal(format!("{} selftest failures", s.failures.len())))
    }
}
