//! Command-line front end. Every subcommand prints either a human-readable report or,
//! with `--json`, a single JSON object whose integers are decimal strings.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cc::{cc_map, frieze_from_tube, growth_via_homogeneous, homogeneous_powers};
use crate::chebyshev::chebyshev_t;
use crate::cluster::{
    check_relations, mutation_class_search, parse_generators, reach_eshape, ModularAction, Quiver, Seed,
    DEFAULT_MAX_NODES,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::frieze::{default_depth, FriezePattern, Quiddity};
use crate::laurent::LaurentPoly;
use crate::rep::{euler_characteristic, default_primes, grassmannian_table, DimVector, QuiverRep};
use crate::reproduce;
use crate::theta::{find_growth_double_arrow, growth_from_affine_quiver, theta, theta_invariance};
use crate::cluster::MutationWord;

#[derive(Parser, Debug)]
#[command(name = "friezelab", version, about = "Exact computations with infinite friezes and cluster algebras of affine type")]
pub struct Cli {
    /// Emit one JSON object instead of a human-readable report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate the frieze of a quiddity sequence and report its growth coefficients.
    Frieze(FriezeArgs),
    /// Mutate a quiver (or its initial seed) along a word of vertex labels.
    Mutate(MutateArgs),
    /// Breadth-first search of the mutation class.
    Search(SearchArgs),
    /// Apply cluster modular group generators to an E-shaped seed.
    Modular(ModularArgs),
    /// Evaluate the growth element of a quiver.
    Theta(ThetaArgs),
    /// Euler characteristics of quiver Grassmannians.
    Grassmannian(GrassmannianArgs),
    /// Caldero-Chapoton value of a representation.
    Cc(CcArgs),
    /// Frieze generated by the quasi-simples at the mouth of a tube.
    TubeFrieze(TubeFriezeArgs),
    /// Compare u_k - u_(k-2) with T_k(x1).
    GrowthIdentity(GrowthIdentityArgs),
    /// Run the end-to-end checks against the shipped fixtures.
    ReproducePaper(ReproduceArgs),
    /// Write the built-in fixtures as JSON files.
    Fixtures(FixturesArgs),
}

fn quiddity_entry(s: &str) -> std::result::Result<i64, String> {
    match s.trim().parse::<i64>() {
        Ok(x) if x > 0 => Ok(x),
        Ok(_) => Err("quiddity entries must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn prime(s: &str) -> std::result::Result<u64, String> {
    let p: u64 = s.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
    if crate::rep::is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not prime"))
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args, Debug)]
pub struct FriezeArgs {
    /// Comma-separated positive integers, e.g. 8,2.
    #[arg(long, value_delimiter = ',', required = true, value_parser = quiddity_entry)]
    pub quiddity: Vec<i64>,
    /// Rows below the row of ones (default 3n+1).
    #[arg(long, value_parser = positive)]
    pub depth: Option<usize>,
    /// Report s_1..s_K.
    #[arg(long, value_parser = positive)]
    pub growth: Option<usize>,
}

#[derive(Args, Debug)]
pub struct MutateArgs {
    #[arg(long)]
    pub quiver: PathBuf,
    /// Comma-separated vertex labels, mutated first to last.
    #[arg(long, default_value = "")]
    pub word: String,
    /// Also track cluster variables.
    #[arg(long)]
    pub seed: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub quiver: PathBuf,
    /// `double-arrow` or `eshape`.
    #[arg(long, default_value = "double-arrow")]
    pub find: String,
    #[arg(long, default_value_t = DEFAULT_MAX_NODES, value_parser = positive)]
    pub max_nodes: usize,
}

#[derive(Args, Debug)]
pub struct ModularArgs {
    /// E-shaped quiver (labels 0, 1, a, b, b1, c, c1, ...) or an affine E quiver to mutate into one.
    #[arg(long)]
    pub quiver: PathBuf,
    /// Generators ta, tb, tc, gamma separated by commas, applied first to last.
    #[arg(long, default_value = "")]
    pub word: String,
    #[arg(long)]
    pub check_relations: bool,
}

#[derive(Args, Debug)]
pub struct ThetaArgs {
    #[arg(long)]
    pub quiver: PathBuf,
    /// Print only the integer value.
    #[arg(long)]
    pub at_ones: bool,
    /// Semicolon-separated words of vertex labels to test invariance on.
    #[arg(long)]
    pub invariance_words: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_NODES, value_parser = positive)]
    pub max_nodes: usize,
}

#[derive(Args, Debug)]
pub struct GrassmannianArgs {
    #[arg(long)]
    pub rep: PathBuf,
    /// A single subdimension vector such as 1,1,1,0,0.
    #[arg(long)]
    pub dimvec: Option<String>,
    #[arg(long, value_delimiter = ',', value_parser = prime)]
    pub primes: Vec<u64>,
    /// Print the full table (the default when no vector is given).
    #[arg(long)]
    pub table: bool,
}

#[derive(Args, Debug)]
pub struct CcArgs {
    #[arg(long)]
    pub rep: PathBuf,
    #[arg(long)]
    pub at_ones: bool,
}

#[derive(Args, Debug)]
pub struct TubeFriezeArgs {
    /// Quiver the tube lives on; checked against the representations when given.
    #[arg(long)]
    pub quiver: Option<PathBuf>,
    /// JSON list of the quasi-simple representations in tube order.
    #[arg(long)]
    pub tube: PathBuf,
    #[arg(long, value_parser = positive)]
    pub depth: Option<usize>,
    #[arg(long, value_parser = positive)]
    pub growth: Option<usize>,
}

#[derive(Args, Debug)]
pub struct GrowthIdentityArgs {
    #[arg(long)]
    pub x1: BigInt,
    #[arg(long, value_parser = positive)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    /// Restrict to groups or check names (d4, e6, modular, kronecker, ...).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FixturesArgs {
    /// Directory to write into (defaults to the source tree's fixtures/).
    #[arg(long)]
    pub dir: Option<PathBuf>,
}

/// Output of one subcommand: a JSON value and its human rendering.
pub struct Report {
    pub json: Value,
    pub human: String,
    pub success: bool,
}

impl Report {
    fn ok(json: Value, human: String) -> Self {
        Report { json, human, success: true }
    }
}

fn s(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn strs(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(s).collect())
}

/// Rows in the staggered layout: odd rows under the quiddity entries, even rows between them.
pub fn render_staggered(f: &FriezePattern, periods: usize) -> String {
    let mut rows: Vec<Vec<String>> = vec![vec!["0".into(); f.period()], vec!["1".into(); f.period()]];
    rows.extend(f.rows().iter().map(|r| r.iter().map(BigInt::to_string).collect()));
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1) + 2;
    let mut out = String::new();
    for (r, row) in rows.iter().enumerate() {
        // row index r - 1 in frieze terms; rows of ones (r = 1) and odd frieze rows align
        let shift = if r % 2 == 0 { width / 2 } else { 0 };
        let mut line = " ".repeat(shift);
        for _ in 0..periods {
            for x in row {
                line.push_str(&format!("{x:^width$}"));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn frieze_report(f: &FriezePattern, growth: Option<usize>) -> Result<Report> {
    let mut json = json!({
        "quiddity": strs(f.quiddity().entries()),
        "depth": f.depth(),
        "rows": f.rows().iter().map(|r| strs(r)).collect::<Vec<_>>(),
    });
    let mut human = render_staggered(f, 3);
    if let Some(k) = growth {
        let coeffs = f.growth_coefficients(k)?;
        let map: BTreeMap<String, Value> = (1..=k).map(|i| (i.to_string(), s(&coeffs[i]))).collect();
        json["growth"] = json!(map);
        json["class"] = json!(f.classify_growth()?.to_string());
        human.push('\n');
        for i in 1..=k {
            human.push_str(&format!("s_{i} = {}\n", coeffs[i]));
        }
    }
    Ok(Report::ok(json, human))
}

fn labels_to_indices(q: &Quiver, word: &str) -> Result<Vec<usize>> {
    word.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| q.index_of(w).map_err(Error::from))
        .collect()
}

fn quiver_json(q: &Quiver) -> Value {
    serde_json::to_value(q.to_json(&[])).expect("serializable")
}

fn laurent_value(p: &LaurentPoly) -> Value {
    json!({ "text": p.to_string(), "laurent": p.to_json() })
}

fn seed_json(seed: &Seed) -> Value {
    json!({
        "quiver": quiver_json(seed.quiver()),
        "variables": seed.vars().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

fn seed_human(seed: &Seed) -> String {
    let mut out = format!("quiver: {}\n", seed.quiver());
    for (i, v) in seed.vars().iter().enumerate() {
        out.push_str(&format!("  {} : {}\n", seed.quiver().label(i), v));
    }
    out
}

fn run_mutate(a: &MutateArgs) -> Result<Report> {
    let (q, frozen) = fixtures::load_quiver(&a.quiver)?;
    let word = labels_to_indices(&q, &a.word)?;
    if a.seed {
        let seed = Seed::initial_with_frozen(&q, &frozen)?.mutate_word(&word)?;
        Ok(Report::ok(seed_json(&seed), seed_human(&seed)))
    } else {
        let m = q.mutate_word(&word)?;
        Ok(Report::ok(json!({ "quiver": quiver_json(&m) }), format!("{m}\n")))
    }
}

fn run_search(a: &SearchArgs) -> Result<Report> {
    let (q, frozen) = fixtures::load_quiver(&a.quiver)?;
    match a.find.as_str() {
        "double-arrow" => {
            let hit = mutation_class_search(&q, &frozen, Quiver::has_double_arrow, a.max_nodes)?;
            let word: Vec<&str> = hit.word.steps.iter().map(|&i| q.label(i)).collect();
            Ok(Report::ok(
                json!({ "quiver": quiver_json(&hit.quiver), "word": word, "visited": hit.visited }),
                format!("found {} after word [{}] ({} quivers visited)\n", hit.quiver, word.join(","), hit.visited),
            ))
        }
        "eshape" => {
            let (seed, word) = reach_eshape(&q, a.max_nodes)?;
            let labels: Vec<&str> = word.steps.iter().map(|&i| q.label(i)).collect();
            let mut json = seed_json(&seed);
            json["word"] = json!(labels);
            Ok(Report::ok(json, format!("word [{}]\n{}", labels.join(","), seed_human(&seed))))
        }
        other => Err(Error::Invalid(format!("unknown search target {other:?}; use double-arrow or eshape"))),
    }
}

/// An E-shaped seed from the file, mutating into E-shape first if needed.
fn eshape_seed(path: &std::path::Path) -> Result<Seed> {
    let (q, _) = fixtures::load_quiver(path)?;
    if crate::cluster::EShape::from_labels(&q).is_ok() {
        Ok(Seed::initial(&q))
    } else {
        Ok(reach_eshape(&q, DEFAULT_MAX_NODES)?.0)
    }
}

fn run_modular(a: &ModularArgs) -> Result<Report> {
    let seed = eshape_seed(&a.quiver)?;
    let action = ModularAction::new(seed.quiver())?;
    let gens = parse_generators(&a.word)?;
    let out = action.apply_word(&seed, &gens)?;
    let mut json = seed_json(&out);
    json["word_order"] = json!(format!("{:?}", action.order()));
    let mut human = format!("word order: {:?}\n{}", action.order(), seed_human(&out));
    if a.check_relations {
        let r = check_relations(&action, &seed)?;
        json["relations"] = json!({
            "k": r.k,
            "tau_powers_agree": r.tau_powers_agree,
            "tau_is_nontrivial": r.tau_is_nontrivial,
            "gamma": r.gamma_relations.map(|(a, b, c)| json!({"gamma_squared": a, "commutes_with_tau_a": b, "swaps_tau_b_tau_c": c})),
            "all_hold": r.all_hold(),
        });
        human.push_str(&format!("relations hold: {}\n", r.all_hold()));
        if !r.all_hold() {
            return Ok(Report { json, human, success: false });
        }
    }
    Ok(Report::ok(json, human))
}

fn run_theta(a: &ThetaArgs) -> Result<Report> {
    let (q, _) = fixtures::load_quiver(&a.quiver)?;
    let (value, seed, word) = match find_growth_double_arrow(&q) {
        Some((u, v)) => {
            let seed = Seed::initial(&q);
            (theta(&seed, u, v)?, seed, Vec::new())
        }
        None => {
            let g = growth_from_affine_quiver(&q, a.max_nodes)?;
            let seed = Seed::initial(&q).mutate_word(&g.word)?;
            (g.theta, seed, g.word)
        }
    };
    let labels: Vec<&str> = word.iter().map(|&i| q.label(i)).collect();
    let mut json = json!({ "value": s(&value.integer), "word": labels });
    if !a.at_ones {
        json["theta"] = laurent_value(&value.laurent);
    }
    let mut human = if a.at_ones { format!("{}\n", value.integer) } else { format!("{}\nvalue at 1: {}\n", value.laurent, value.integer) };
    if let Some(ws) = &a.invariance_words {
        let words = ws
            .split(';')
            .map(|w| labels_to_indices(seed.quiver(), w).map(MutationWord::new))
            .collect::<Result<Vec<_>>>()?;
        let inv = theta_invariance(&seed, &words)?;
        json["invariant"] = json!(inv);
        human.push_str(&format!("invariant: {inv}\n"));
    }
    Ok(Report::ok(json, human))
}

fn run_grassmannian(a: &GrassmannianArgs) -> Result<Report> {
    let m = fixtures::load_rep(&a.rep)?;
    match (&a.dimvec, a.table) {
        (Some(e), false) => {
            let e: DimVector = e.parse()?;
            let degree: u32 = e.0.iter().zip(&m.dims().0).map(|(&x, &d)| x * d.saturating_sub(x)).sum();
            let primes = if a.primes.is_empty() { default_primes(&m, degree as usize + 2) } else { a.primes.clone() };
            let (chi, poly) = euler_characteristic(&m, &e, &primes)?;
            Ok(Report::ok(
                json!({ "e": e, "chi": s(&chi), "polynomial": poly }),
                format!("chi(Gr_{e}) = {chi}\ncounting polynomial coefficients {:?}\n", poly.coefficients),
            ))
        }
        _ => {
            let t = grassmannian_table(&m, (!a.primes.is_empty()).then_some(a.primes.as_slice()))?;
            let mut human = String::new();
            for r in &t.rows {
                human.push_str(&format!("{:<20}{}\n", r.e.to_string(), r.chi));
            }
            human.push_str(&format!("total {}\n", t.total()));
            Ok(Report::ok(json!({ "rows": t.rows, "total": s(&t.total()) }), human))
        }
    }
}

fn run_cc(a: &CcArgs) -> Result<Report> {
    let v = cc_map(&fixtures::load_rep(&a.rep)?)?;
    let mut json = json!({ "value": s(&v.at_ones) });
    if !a.at_ones {
        json["cc"] = laurent_value(&v.laurent);
    }
    let human = if a.at_ones { format!("{}\n", v.at_ones) } else { format!("{}\nvalue at 1: {}\n", v.laurent, v.at_ones) };
    Ok(Report::ok(json, human))
}

fn run_tube_frieze(a: &TubeFriezeArgs) -> Result<Report> {
    let tube: Vec<QuiverRep> = fixtures::load_tube(&a.tube)?;
    if let Some(path) = &a.quiver {
        let (q, _) = fixtures::load_quiver(path)?;
        if tube.iter().any(|m| m.quiver().matrix() != q.matrix()) {
            return Err(Error::Invalid("tube representations live on a different quiver".into()));
        }
    }
    let n = tube.len().max(1);
    let f = frieze_from_tube(&tube, a.depth.unwrap_or_else(|| default_depth(n)))?;
    frieze_report(&f, a.growth)
}

fn run_growth_identity(a: &GrowthIdentityArgs) -> Result<Report> {
    let u = homogeneous_powers(&a.x1, a.k);
    let g = growth_via_homogeneous(&a.x1, a.k)?;
    let t = chebyshev_t(a.k, &a.x1);
    Ok(Report {
        json: json!({ "u": strs(&u), "growth": s(&g), "chebyshev_t": s(&t), "agree": g == t }),
        human: format!("u_0..u_{} = {}\ns_{} = {}\nT_{} = {}\n", a.k, u.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "), a.k, g, a.k, t),
        success: g == t,
    })
}

fn run_reproduce(a: &ReproduceArgs) -> Result<Report> {
    let dir = a.fixtures.clone().unwrap_or_else(fixtures::default_dir);
    let results = reproduce::run(&dir, &a.only);
    if results.is_empty() {
        return Err(Error::Invalid(format!("no checks match {:?}", a.only)));
    }
    let mut human = String::new();
    for r in &results {
        human.push_str(&format!("{:<4} {:<24} {:>7} ms  {}\n", if r.passed { "PASS" } else { "FAIL" }, r.name, r.millis, r.detail));
    }
    let success = results.iter().all(|r| r.passed);
    human.push_str(&format!("{} of {} checks passed\n", results.iter().filter(|r| r.passed).count(), results.len()));
    Ok(Report { json: json!({ "checks": results, "passed": success }), human, success })
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Frieze(a) => {
            let q = Quiddity::from_ints(&a.quiddity)?;
            let f = FriezePattern::generate(&q, a.depth.unwrap_or_else(|| default_depth(q.period())))?;
            frieze_report(&f, a.growth)
        }
        Command::Mutate(a) => run_mutate(a),
        Command::Search(a) => run_search(a),
        Command::Modular(a) => run_modular(a),
        Command::Theta(a) => run_theta(a),
        Command::Grassmannian(a) => run_grassmannian(a),
        Command::Cc(a) => run_cc(a),
        Command::TubeFrieze(a) => run_tube_frieze(a),
        Command::GrowthIdentity(a) => run_growth_identity(a),
        Command::ReproducePaper(a) => run_reproduce(a),
        Command::Fixtures(a) => {
            let dir = a.dir.clone().unwrap_or_else(fixtures::default_dir);
            fixtures::write_all(&dir)?;
            Ok(Report::ok(json!({ "written": dir.display().to_string() }), format!("wrote fixtures to {}\n", dir.display())))
        }
    }
}

/// Caps the rayon pool at `FRIEZELAB_THREADS` when set.
pub fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("FRIEZELAB_THREADS") {
        let n: usize = v.parse().map_err(|_| Error::Invalid(format!("FRIEZELAB_THREADS={v:?} is not a number")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Invalid(e.to_string()))?;
    }
    Ok(())
}

pub fn main_with(cli: Cli) -> ExitCode {
    let result = configure_threads().and_then(|_| run(&cli));
    match result {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                print!("{}", report.human);
            }
            if report.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            let obj = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            eprintln!("{obj}");
            ExitCode::FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    fn parse(args: &[&str]) -> std::result::Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("friezelab").chain(args.iter().copied()))
    }

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn nonpositive_quiddity_is_a_usage_error() {
        let err = parse(&["frieze", "--quiddity", "0,5"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn frieze_growth_report() {
        let cli = parse(&["--json", "frieze", "--quiddity", "8,2", "--depth", "6", "--growth", "2"]).unwrap();
        let r = run(&cli).unwrap();
        assert_eq!(r.json["growth"], json!({"1": "14", "2": "194"}));
        assert_eq!(r.json["rows"][1], json!(["15", "15"]));
    }

    #[test]
    fn staggered_layout() {
        let f = FriezePattern::generate(&Quiddity::from_ints(&[8, 2]).unwrap(), 2).unwrap();
        let text = render_staggered(&f, 1);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with(' '));
        assert!(lines[2].trim_start().starts_with('8'));
    }
}
