//! Command-line front end. [`run`] parses arguments, executes one command,
//! and returns a JSON payload with an exit code; the binary only prints.
//!
//! Exit codes: `0` ok, `1` a mathematical violation was found, `2` usage,
//! input or range errors.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::extremal::{build_extremal, detect_extremal_structural, extremal_k, partition_profile};
use crate::graph::EdgeList;
use crate::graph::{Graph, VertexSet};
use crate::outerplanar::{find_forbidden_subdivision, is_outerplanar, SUBDIVISION_ORACLE_CAP};
use crate::secure::{self, SecureFailure};
use crate::solver::{gamma, gamma_s, lower_bound};
use crate::sweep::{
    verify_lemma1, verify_lower_bound, verify_thm2_equivalence, verify_thm2_random, SweepOptions,
    SweepReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    /// Plain-text rendering, printed unless `--json` was given.
    pub text: String,
    pub json: bool,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// What the binary writes to stdout (or stderr for errors).
    pub fn output(&self) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(&self.payload).expect("payload serializes");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }

    fn error(msg: impl Into<String>, json: bool) -> Self {
        let msg = msg.into();
        CommandResult {
            status: Status::Error,
            payload: json!({ "status": "error", "error": msg }),
            text: format!("error: {msg}\n"),
            json,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "secdom", version, about = "Secure domination on small graphs")]
struct Cli {
    /// Print the JSON payload instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SolveVariant {
    Gamma,
    GammaS,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckVariant {
    Dominating,
    Secure,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum (secure) dominating set with certificate.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "gamma-s")]
        variant: SolveVariant,
    },
    /// Checks whether a given set is dominating or secure dominating.
    Check {
        file: PathBuf,
        /// 0-based comma-separated vertices, e.g. `0,2,5`.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum, default_value = "secure")]
        variant: CheckVariant,
    },
    /// Outerplanarity test.
    Outerplanar {
        file: PathBuf,
        /// Report a K4 or K2,3 subdivision when the graph is not outerplanar.
        #[arg(long)]
        witness: bool,
    },
    /// Writes the extremal graph G_k and its labeling.
    GenExtremal {
        k: usize,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Minimum secure dominating set, bound and G_k structure of a graph on 5k+1 vertices.
    Characterize { file: PathBuf },
    /// Checks the lower bound on every connected outerplanar graph up to N vertices.
    VerifyBound {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write every enumerated graph in graph6 to this file.
        #[arg(long)]
        emit_graph6: Option<PathBuf>,
        /// Allow N = 10.
        #[arg(long)]
        allow_n10: bool,
    },
    /// Checks |Y| <= 2|X| - 2 on connected bipartite outerplanar graphs.
    VerifyLemma1 {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        allow_n10: bool,
    },
    /// Compares the swap and private-neighbor defense tests.
    VerifyThm2 {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Additional random instances.
        #[arg(long, default_value_t = 0)]
        random: u64,
        /// Order of the random graphs.
        #[arg(long, default_value_t = 10)]
        random_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let status = if e.use_stderr() { Status::Error } else { Status::Ok };
            return CommandResult {
                status,
                payload: json!({ "status": status, "message": text }),
                text,
                json: false,
            };
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok((status, mut payload, text)) => {
            if let Value::Object(map) = &mut payload {
                map.insert("status".into(), json!(status));
            }
            CommandResult {
                status,
                payload,
                text,
                json,
            }
        }
        Err(msg) => CommandResult::error(msg, json),
    }
}

type Outcome = std::result::Result<(Status, Value, String), String>;

fn execute(cmd: Command) -> Outcome {
    match cmd {
        Command::Solve { file, variant } => solve_cmd(&file, variant),
        Command::Check { file, set, variant } => check_cmd(&file, &set, variant),
        Command::Outerplanar { file, witness } => outerplanar_cmd(&file, witness),
        Command::GenExtremal { k, format, output } => gen_extremal_cmd(k, format, output.as_deref()),
        Command::Characterize { file } => characterize_cmd(&file),
        Command::VerifyBound {
            max_n,
            jobs,
            emit_graph6,
            allow_n10,
        } => {
            let mut sink = match &emit_graph6 {
                Some(p) => Some(std::io::BufWriter::new(
                    fs::File::create(p).map_err(|e| format!("cannot create {}: {e}", p.display()))?,
                )),
                None => None,
            };
            let opts = SweepOptions {
                jobs,
                allow_n10,
                emit_graph6: sink.as_mut().map(|w| w as &mut dyn std::io::Write),
            };
            let report = verify_lower_bound(max_n, opts).map_err(err)?;
            if let Some(mut w) = sink {
                std::io::Write::flush(&mut w).map_err(|e| e.to_string())?;
            }
            Ok(report_outcome(&report))
        }
        Command::VerifyLemma1 {
            max_n,
            jobs,
            allow_n10,
        } => {
            let opts = SweepOptions {
                jobs,
                allow_n10,
                emit_graph6: None,
            };
            Ok(report_outcome(&verify_lemma1(max_n, opts).map_err(err)?))
        }
        Command::VerifyThm2 {
            max_n,
            jobs,
            random,
            random_n,
            seed,
        } => {
            let opts = SweepOptions {
                jobs,
                ..SweepOptions::default()
            };
            let exhaustive = verify_thm2_equivalence(max_n, opts).map_err(err)?;
            let randomized = if random > 0 {
                Some(verify_thm2_random(random_n, random, seed).map_err(err)?)
            } else {
                None
            };
            let clean = exhaustive.is_clean() && randomized.as_ref().is_none_or(|r| r.is_clean());
            let mut text = exhaustive.to_table();
            if let Some(r) = &randomized {
                text.push_str(&r.to_table());
            }
            let mut payload = json!({ "exhaustive": exhaustive });
            if let Some(r) = randomized {
                payload["random"] = json!(r);
            }
            Ok((verdict(clean), payload, text))
        }
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn verdict(clean: bool) -> Status {
    if clean {
        Status::Ok
    } else {
        Status::Violation
    }
}

fn report_outcome(r: &SweepReport) -> (Status, Value, String) {
    (verdict(r.is_clean()), json!(r), r.to_table())
}

/// Reads a graph in edge-list or graph6 form. A first data line holding a
/// single token is taken as graph6; `-` reads standard input.
pub fn read_graph(path: &Path) -> std::result::Result<Graph, String> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("cannot read standard input: {e}"))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
    };
    parse_graph(&text)
}

pub fn parse_graph(text: &str) -> std::result::Result<Graph, String> {
    let data: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    let Some(first) = data.first() else {
        return Err("input is empty".into());
    };
    let list = if first.split_whitespace().count() == 1 {
        if data.len() > 1 {
            return Err("graph6 input must hold exactly one graph".into());
        }
        EdgeList::from_graph6(first).map_err(err)?
    } else {
        EdgeList::parse_edge_list(text).map_err(err)?
    };
    list.to_graph().map_err(err)
}

fn parse_set(g: &Graph, text: &str) -> std::result::Result<VertexSet, String> {
    let mut s = VertexSet::EMPTY;
    let text = text.trim();
    if text.is_empty() {
        return Ok(s);
    }
    for tok in text.split(',') {
        let v: usize = tok
            .trim()
            .parse()
            .map_err(|_| format!("--set: `{}` is not a vertex index", tok.trim()))?;
        if v >= g.n() {
            return Err(format!("--set: vertex {v} out of range for a graph on {} vertices", g.n()));
        }
        s.insert(v);
    }
    Ok(s)
}

fn set_json(s: VertexSet) -> Value {
    json!(s.to_vec())
}

fn defenders_text(pairs: &[(usize, usize)]) -> String {
    pairs
        .iter()
        .map(|(u, v)| format!("{u}<-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn solve_cmd(file: &Path, variant: SolveVariant) -> Outcome {
    let g = read_graph(file)?;
    let (name, r) = match variant {
        SolveVariant::Gamma => ("gamma", gamma(&g).map_err(err)?),
        SolveVariant::GammaS => ("gamma_s", gamma_s(&g).map_err(err)?),
    };
    let mut text = format!("{name} = {}\nset: {}\n", r.value, r.set);
    if let Some(c) = &r.certificate {
        text.push_str(&format!("defenders: {}\n", defenders_text(&c.defenders)));
    }
    let payload = json!({
        "command": "solve",
        "variant": name,
        "n": g.n(),
        "m": g.m(),
        "result": r,
    });
    Ok((Status::Ok, payload, text))
}

fn check_cmd(file: &Path, set: &str, variant: CheckVariant) -> Outcome {
    let g = read_graph(file)?;
    let s = parse_set(&g, set)?;
    let (payload, text) = match variant {
        CheckVariant::Dominating => {
            let ok = secure::is_dominating(&g, s);
            let missing = (g.vertices() - g.closed_neighborhood_of(s)).first();
            let mut p = json!({ "command": "check", "variant": "dominating", "set": set_json(s), "verdict": ok });
            let text = match missing {
                None => "dominating: yes\n".to_string(),
                Some(u) => {
                    p["first_undominated"] = json!(u);
                    format!("dominating: no (vertex {u} is undominated)\n")
                }
            };
            (p, text)
        }
        CheckVariant::Secure => {
            let outcome = secure::secure_check(&g, s).map_err(err)?;
            let mut p = json!({ "command": "check", "variant": "secure", "set": set_json(s), "verdict": outcome.is_ok() });
            let text = match outcome {
                Ok(cert) => {
                    let t = format!("secure dominating: yes\ndefenders: {}\n", defenders_text(&cert.defenders));
                    p["certificate"] = json!(cert);
                    t
                }
                Err(failure) => {
                    p["failure"] = json!(failure);
                    match failure {
                        SecureFailure::Undominated(u) => {
                            format!("secure dominating: no (vertex {u} is undominated)\n")
                        }
                        SecureFailure::Undefended(u) => {
                            format!("secure dominating: no (vertex {u} is undefended)\n")
                        }
                    }
                }
            };
            (p, text)
        }
    };
    Ok((Status::Ok, payload, text))
}

fn outerplanar_cmd(file: &Path, witness: bool) -> Outcome {
    let g = read_graph(file)?;
    let op = is_outerplanar(&g);
    let mut payload = json!({ "command": "outerplanar", "n": g.n(), "outerplanar": op });
    let mut text = format!("outerplanar: {}\n", if op { "yes" } else { "no" });
    if witness && !op {
        if g.n() > SUBDIVISION_ORACLE_CAP {
            return Err(format!(
                "--witness supports at most {SUBDIVISION_ORACLE_CAP} vertices, got {}",
                g.n()
            ));
        }
        let w = find_forbidden_subdivision(&g)
            .map_err(err)?
            .ok_or("no forbidden subdivision found for a non-outerplanar graph")?;
        text.push_str(&format!(
            "witness: {:?} subdivision, branch vertices {:?}\n",
            w.kind, w.branch_vertices
        ));
        for p in &w.paths {
            text.push_str(&format!("  path {p:?}\n"));
        }
        payload["witness"] = json!(w);
    }
    Ok((Status::Ok, payload, text))
}

fn gen_extremal_cmd(k: usize, format: Format, output: Option<&Path>) -> Outcome {
    let (g, witness) = build_extremal(k).map_err(err)?;
    let graph_text = match format {
        Format::Edgelist => g.to_edge_list().to_edge_list_string(),
        Format::Graph6 => format!("{}\n", g.to_graph6()),
    };
    let mut payload = json!({
        "command": "gen-extremal",
        "k": k,
        "n": g.n(),
        "m": g.m(),
        "witness": witness,
    });
    let text = match output {
        Some(path) => {
            fs::write(path, &graph_text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            payload["output"] = json!(path.display().to_string());
            format!("{}\n", serde_json::to_string(&witness).expect("witness serializes"))
        }
        None => {
            payload["graph"] = json!(graph_text);
            graph_text
        }
    };
    Ok((Status::Ok, payload, text))
}

fn characterize_cmd(file: &Path) -> Outcome {
    let g = read_graph(file)?;
    let k = extremal_k(g.n()).map_err(err)?;
    let op = is_outerplanar(&g);
    let r = gamma_s(&g).map_err(err)?;
    let bound = lower_bound(g.n());
    let witness = detect_extremal_structural(&g).map_err(err)?;
    let (profile, profile_error) = match partition_profile(&g, r.set) {
        Ok(p) => (Some(p), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let mut text = format!(
        "n = {}, k = {k}, outerplanar: {}\ngamma_s = {} (bound {bound})\nset: {}\n",
        g.n(),
        if op { "yes" } else { "no" },
        r.value,
        r.set
    );
    match &witness {
        Some(w) => text.push_str(&format!(
            "extremal witness: hub {}, spokes {:?}, rim {:?}, triangles {:?}\n",
            w.hub, w.spokes, w.rim, w.triangles
        )),
        None => text.push_str("extremal witness: none\n"),
    }
    match (&profile, &profile_error) {
        (Some(p), _) => text.push_str(&format!(
            "profile: x2 = {}, x1 = {}, x0 = {}, c = {}, x = {}, y = {}\n",
            p.x2, p.x1, p.x0, p.c, p.x, p.y
        )),
        (None, Some(e)) => text.push_str(&format!("profile: unavailable ({e})\n")),
        (None, None) => {}
    }
    let violated = op && r.value < bound;
    let mut payload = json!({
        "command": "characterize",
        "n": g.n(),
        "k": k,
        "outerplanar": op,
        "gamma_s": r.value,
        "bound": bound,
        "set": set_json(r.set),
        "certificate": r.certificate,
        "extremal_witness": witness.map_or(json!("none"), |w| json!(w)),
        "profile": profile,
    });
    if let Some(e) = profile_error {
        payload["profile_error"] = json!(e);
    }
    Ok((verdict(!violated), payload, text))
}
