//! Exact invariants of wild quotient singularities for `Z/p ⋊ Z/m`:
//! group data, stratum dimensions, v-function tables, stringy motives,
//! Euler numbers, extension counts, and a/b-invariants.
//!
//! All numeric output is exact; fractions print as `n/d` and polynomials
//! in `L` as `L^3 + 4*L^2 + L`. `--json` switches to a single structured
//! document with the inputs echoed. Exit status: 0 on success, 1 on domain
//! errors (inadmissible jumps, divergence, …), 2 on malformed input.

mod config;
mod selftest;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use wild_mckay::group::MetacyclicGroup;
use wild_mckay::invariants::{
    classify_singularities_with_window, crepant_euler, invariant_report_with_window,
};
use wild_mckay::moduli::{count_extensions, enumerate_jumps, stratum_dimension, stratum_info};
use wild_mckay::motive::{euler_number, stringy_motive};
use wild_mckay::vfunction::v_rep;

use config::{JobConfig, RawInputs, UsageError};

#[derive(Parser)]
#[command(
    name = "wild-mckay",
    version,
    about = "Exact wild-quotient invariants for G = Z/p ⋊ Z/m in characteristic p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// The characteristic p (prime)
    #[arg(long)]
    p: Option<u64>,
    /// The tame order m (coprime to p)
    #[arg(long)]
    m: Option<u64>,
    /// The action exponent a, with tau sigma tau^-1 = sigma^a
    #[arg(long)]
    a: Option<u64>,
    /// Representation summand d:s; repeat once per summand
    #[arg(long = "rep", value_name = "d:s")]
    rep: Vec<String>,
    /// Component index gamma in {0, .., m-1}
    #[arg(long)]
    gamma: Option<u64>,
    /// Ramification jump r
    #[arg(long)]
    r: Option<u64>,
    /// Residue field size q (a power of p)
    #[arg(long)]
    q: Option<u64>,
    /// Upper bound for jump enumerations
    #[arg(long)]
    bound: Option<u64>,
    /// Extend invariant-scan windows to [1, mult*m_gamma*p - 1]
    #[arg(long = "window-multiplier")]
    window_multiplier: Option<u64>,
    /// Key-value config file; flags win on conflict
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    /// Emit one structured JSON document instead of text
    #[arg(long)]
    json: bool,
}

impl CommonArgs {
    fn resolve(self) -> Result<(JobConfig, bool), UsageError> {
        let json = self.json;
        let cfg = JobConfig::resolve(RawInputs {
            p: self.p,
            m: self.m,
            a: self.a,
            rep: self.rep,
            gamma: self.gamma,
            r: self.r,
            q: self.q,
            bound: self.bound,
            window_multiplier: self.window_multiplier,
            config: self.config,
        })?;
        Ok((cfg, json))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate the group data and print its derived invariants
    Group(CommonArgs),
    /// Table of v-values over the admissible jumps up to a bound
    Vfn(CommonArgs),
    /// Stratum dimensions and parameter-space shapes up to a bound
    Dim(CommonArgs),
    /// Stringy motive of V/G (exact polynomial or rational expression)
    Motive(CommonArgs),
    /// Stringy Euler number of V/G
    Euler(CommonArgs),
    /// Number of G-extensions of F_q((t)) with fixed jump
    Count(CommonArgs),
    /// Full a/b-invariant report for V/G
    Invariants(CommonArgs),
    /// Canonical/terminal classification of V/G
    Classify(CommonArgs),
    /// Reproduce the built-in worked examples and print a pass/fail table
    Selftest {
        /// Emit the table as JSON
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(UsageError),
    Domain(wild_mckay::Error),
    SelftestFailed,
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

impl From<wild_mckay::Error> for Failure {
    fn from(e: wild_mckay::Error) -> Self {
        Failure::Domain(e)
    }
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            std::process::ExitCode::from(1)
        }
        Err(Failure::SelftestFailed) => {
            eprintln!("error: selftest failed");
            std::process::ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            std::process::ExitCode::from(2)
        }
    }
}

fn group_json(g: &MetacyclicGroup) -> Value {
    json!({
        "p": g.p(),
        "m": g.m(),
        "a": g.a(),
        "n": g.n(),
        "n_dagger": g.n_dagger(),
        "n1": g.n1(),
        "c": g.root_of_unity_exponent(),
        "h_prime": g.h_prime().to_string(),
        "h": g.h().to_string(),
        "order": g.order(),
        "center_order": g.center_order(),
        "tame_class_exponents": g.tame_class_exponents(),
    })
}

fn inputs_json(cfg: &JobConfig) -> Value {
    let mut inputs = serde_json::Map::new();
    inputs.insert("p".into(), cfg.p.into());
    inputs.insert("m".into(), cfg.m.into());
    inputs.insert("a".into(), cfg.a.into());
    if let Some(rep) = &cfg.rep {
        let pairs: Vec<Value> = rep.iter().map(|&(d, s)| json!([d, s])).collect();
        inputs.insert("rep".into(), Value::Array(pairs));
    }
    for (key, value) in [
        ("gamma", cfg.gamma),
        ("r", cfg.r),
        ("q", cfg.q),
        ("bound", cfg.bound),
    ] {
        if let Some(v) = value {
            inputs.insert(key.into(), v.into());
        }
    }
    inputs.insert("window_multiplier".into(), cfg.window_multiplier.into());
    Value::Object(inputs)
}

fn emit(
    command: &str,
    cfg: &JobConfig,
    g: &MetacyclicGroup,
    result: Value,
    json_mode: bool,
    text: String,
) {
    if json_mode {
        let doc = json!({
            "command": command,
            "inputs": inputs_json(cfg),
            "group": group_json(g),
            "result": result,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print!("{text}");
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Group(args) => {
            let (cfg, json_mode) = args.resolve()?;
            let g = cfg.group()?;
            let text = format!(
                "group Z/{p} x| Z/{m}  (order {order})\n\
                 a = {a}, n = {n}, n_dagger = {nd}, n1 = {n1}\n\
                 root-of-unity exponent c = {c}\n\
                 h' = {hp}, h = {h} (informational)\n\
                 center order = {z}\n\
                 tame class exponents = {tame:?}\n",
                p = g.p(),
                m = g.m(),
                order = g.order(),
                a = g.a(),
                n = g.n(),
                nd = g.n_dagger(),
                n1 = g.n1(),
                c = g.root_of_unity_exponent(),
                hp = g.h_prime(),
                h = g.h(),
                z = g.center_order(),
                tame = g.tame_class_exponents(),
            );
            let result = group_json(&g);
            emit("group", &cfg, &g, result, json_mode, text);
            Ok(())
        }
        Command::Vfn(args) => {
            let (cfg, json_mode) = args.resolve()?;
            let g = cfg.group()?;
            let v = cfg.representation(&g)??;
            let bound = cfg.bound.unwrap_or(g.m() * g.p());
            let mut rows = Vec::new();
            let mut text = format!("v-function table up to r = {bound}\n");
            text.push_str("gamma      r    dim    v        dim - v\n");
            for gamma in 0..g.m() {
                for r in enumerate_jumps(&g, gamma, bound) {
                    let dim = stratum_dimension(&g, gamma, r)?;
                    let value = v_rep(&g, &v, gamma, r)?;
                    let excess = num::BigRational::from_integer(dim.into()) - &value;
                    text.push_str(&format!(
                        "{gamma:<10} {r:<4} {dim:<6} {value:<8} {excess}\n"
                    ));
                    rows.push(json!({
                        "gamma": gamma,
                        "r": r,
                        "dim": dim,
                        "v": value.to_string(),
                        "dim_minus_v": excess.to_string(),
                    }));
                }
            }
            emit(
                "vfn",
                &cfg,
                &g,
                json!({"bound": bound, "rows": rows}),
                json_mode,
                text,
            );
            Ok(())
        }
        Command::Dim(args) => {
            let (cfg, json_mode) = args.resolve()?;
            let g = cfg.group()?;
            let bound = cfg.bound.unwrap_or(g.m() * g.p());
            let gammas: Vec<u64> = match cfg.gamma {
                Some(gamma) => vec![gamma % g.m()],
                None => (0..g.m()).collect(),
            };
            let mut rows = Vec::new();
            let mut text = format!("stratum dimensions up to r = {bound}\n");
            text.push_str("gamma      r    dim    mu_order  components\n");
            for &gamma in &gammas {
                for r in enumerate_jumps(&g, gamma, bound) {
                    let info = stratum_info(&g, gamma, r)?;
                    text.push_str(&format!(
                        "{gamma:<10} {r:<4} {dim:<6} {mu:<9} {comp}\n",
                        dim = info.dim,
                        mu = info.mu_order,
                        comp = info.components,
                    ));
                    rows.push(json!({
                        "gamma": gamma,
                        "r": r,
                        "dim": info.dim,
                        "mu_order": info.mu_order,
                        "components": info.components,
                    }));
                }
            }
            emit(
                "dim",
                &cfg,
                &g,
                json!({"bound": bound, "rows": rows}),
                json_mode,
                text,
            );
            Ok(())
        }
        Command::Motive(args) => {
            let (cfg, json_mode) = args.resolve()?;
            let g = cfg.group()?;
            let v = cfg.representation(&g)??;
            let motive = stringy_motive(&g, &v);
            let euler = euler_number(&g, &v).ok();
            let mut text = format!("stringy motive: {motive}\nkind: {}\n", motive.kind());
            if let Some(e) = &euler {
                text.push_str(&format!("stringy euler number: {e}\n"));
            }
            let result = json!({
                "d_v": v.d_invariant(),
                "dim": v.dim(),
                "motive": serde_json::to_value(&motive).unwrap(),
                "text": motive.to_string(),
                "euler": euler.map(|e| e.to_string()),
            });
            emit("motive", &cfg, &g, result, json_mode, text);
            Ok(())
        }
        Command::Euler(args) => {
            let (cfg, json_mode) = args.resolve()?;
            let g = cfg.group()?;
            let v = cfg.representation(&g)??;
            let euler = euler_number(&g, &v)?;
            let wild_part = &euler - num::BigRational::from_integer(g.m().into());
            let text = format!(
                "stringy euler number: {euler}\n\
                 decomposition: {m} tame classes + {wild} from the wild part\n\
                 equals the l-adic Euler characteristic of a crepant resolution, when one exists\n",
                m = g.m(),
                wild = wild_part,
            );
            let result = json!({
                "d_v": v.d_invariant(),
                "euler": euler.to_string(),
                "tame_part": g.m().to_string(),
                "wild_part": wild_part.to_string(),
                "valid_only_if_crepant_resolution_exists": true,
            });
            emit("euler", &cfg, &g, result, json_mode, text);
            Ok(())
        }
        Command::Count(args) => {
            let (cfg, json_mode) = args.resolve()?;
            let g = cfg.group()?;
            let q = cfg.require("q", cfg.q)?;
            let gamma = cfg.require("gamma", cfg.gamma)?;
            let r = cfg.require("r", cfg.r)?;
            let count = count_extensions(&g, q, gamma, r)?;
            let text = format!("{count}\n");
            let result = json!({
                "q": q,
                "gamma": gamma,
                "r": r,
                "count": count.to_string(),
            });
            emit("count", &cfg, &g, result, json_mode, text);
            Ok(())
        }
        Command::Invariants(args) => {
            let (cfg, json_mode) = args.resolve()?;
            let g = cfg.group()?;
            let v = cfg.representation(&g)??;
            let report = invariant_report_with_window(&g, &v, cfg.window_multiplier)?;
            let crepant = crepant_euler(&g, &v)?;
            let b_text = match report.b_value {
                wild_mckay::invariants::BValue::Finite(b) => b.to_string(),
                wild_mckay::invariants::BValue::Infinite => "infinite".into(),
                wild_mckay::invariants::BValue::Undefined => "undefined".into(),
            };
            let mut text = format!(
                "a-invariant: {a} ({att})\nb-invariant: {b}\nclassification: {cls}\nsup(dim - v): {sup}\n",
                a = report.a_value,
                att = if report.a_attained { "attained" } else { "unattained tail limit" },
                b = b_text,
                cls = classification_str(report.classification),
                sup = report.sup_dim_minus_v,
            );
            text.push_str("attaining loci:\n");
            for locus in &report.attaining {
                match locus.locus {
                    wild_mckay::invariants::Locus::Tame { k } => text.push_str(&format!(
                        "  tame class k = {k} (v = {v}, dim 0)\n",
                        v = locus.v
                    )),
                    wild_mckay::invariants::Locus::Wild { gamma, r } => text.push_str(&format!(
                        "  stratum (gamma = {gamma}, r = {r}) (v = {v}, dim {dim})\n",
                        v = locus.v,
                        dim = locus.dim
                    )),
                }
            }
            text.push_str(&format!(
                "crepant resolution euler characteristic (valid only if one exists): {crepant}\n"
            ));
            let result = json!({
                "report": serde_json::to_value(&report).unwrap(),
                "crepant_euler": crepant.to_string(),
                "valid_only_if_crepant_resolution_exists": true,
            });
            emit("invariants", &cfg, &g, result, json_mode, text);
            Ok(())
        }
        Command::Classify(args) => {
            let (cfg, json_mode) = args.resolve()?;
            let g = cfg.group()?;
            let v = cfg.representation(&g)??;
            let classification = classify_singularities_with_window(&g, &v, cfg.window_multiplier);
            let text = format!("{}\n", classification_str(classification));
            let result = json!({ "classification": serde_json::to_value(classification).unwrap() });
            emit("classify", &cfg, &g, result, json_mode, text);
            Ok(())
        }
        Command::Selftest { json } => selftest::run(json),
    }
}

fn classification_str(c: wild_mckay::invariants::Classification) -> &'static str {
    match c {
        wild_mckay::invariants::Classification::Terminal => "terminal",
        wild_mckay::invariants::Classification::CanonicalNotTerminal => "canonical_not_terminal",
        wild_mckay::invariants::Classification::NotCanonical => "not_canonical",
    }
}
