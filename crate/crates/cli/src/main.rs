//! `ogt`: command-line access to the census, homomorphism search,
//! compressibility sweeps and the check battery.
//!
//! Exit codes: 0 success or a positive answer, 1 a negative answer (no
//! homomorphism, failed check), 2 usage error, 3 a size cap was hit.

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ogt_core::census::{tournaments, Predicate};
use ogt_core::domination::{classify_domination, domination_graph};
use ogt_core::extremal::{exact_ex_oriented, turan_density_term};
use ogt_core::format::{to_digraph6, to_hex};
use ogt_core::hom::{contains_copy, hom_exists};
use ogt_core::layered::{canonical_hom_to_q, check_layers, VertexTag};
use ogt_core::suite::{run_check, Scale, CHECK_IDS};
use ogt_core::tau::{tau_family, DEFAULT_MAX_K};
use ogt_core::{expr, Error, OrientedGraph, Tournament};

#[derive(Parser)]
#[command(name = "ogt", version, about = "Compressibility of acyclic oriented graphs")]
struct Cli {
    /// JSON lines on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker thread cap.
    #[arg(long, global = true, env = "OGT_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a graph and print it in digraph6 (and n:HEX for tournaments).
    Construct { expr: String },
    /// Search for a homomorphism H -> T.
    Hom { h: String, t: String },
    /// Search for a copy of P inside G.
    Contains { g: String, p: String },
    /// Compressibility by census sweep.
    Tau {
        h: String,
        #[arg(long, default_value_t = DEFAULT_MAX_K)]
        max_k: usize,
        /// Further family members, comma separated.
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
    },
    /// List tournaments on n vertices up to isomorphism.
    Enumerate {
        n: usize,
        /// strongly_connected, tt_free(k) or all_k_subsets_dominated(k).
        #[arg(long)]
        pred: Option<String>,
    },
    /// Domination graph of a tournament.
    Dom {
        t: String,
        #[arg(long)]
        classify: bool,
    },
    /// Layer typing modulo L.
    Layered {
        h: String,
        #[arg(long)]
        ell: usize,
        /// Also print the canonical map into Q_L.
        #[arg(long)]
        to_q: bool,
    },
    /// Exact oriented Turán number on n vertices.
    Ex {
        n: usize,
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        forbid: Vec<String>,
    },
    /// Run checks from the battery (all by default).
    Verify {
        ids: Vec<String>,
        /// key=value scale parameters.
        #[arg(long, num_args = 1..)]
        scale: Vec<String>,
        #[arg(long, default_value_t = ogt_core::random::DEFAULT_SEED)]
        seed: u64,
    },
}

/// A failed command with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_cap() { 3 } else { 2 };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// A construction expression, encoded graph, or file holding one.
fn graph_arg(s: &str) -> Result<OrientedGraph, Failure> {
    let path = Path::new(s);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure {
            code: 2,
            msg: format!("{s}: {e}"),
        })?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or_else(|| Failure {
                code: 2,
                msg: format!("{s}: no graph found"),
            })?;
        return Ok(expr::parse(line)?);
    }
    Ok(expr::parse(s)?)
}

fn tournament_arg(s: &str) -> Result<Tournament, Failure> {
    Tournament::try_from(graph_arg(s)?).map_err(|_| Failure {
        code: 2,
        msg: format!("{s} is not a tournament"),
    })
}

fn encodings(g: &OrientedGraph) -> Value {
    let hex = Tournament::try_from(g.clone()).ok().map(|t| to_hex(&t));
    json!({"n": g.order(), "arcs": g.arc_count(), "digraph6": to_digraph6(g), "hex": hex})
}

/// One line to stdout; a closed pipe (`ogt enumerate 8 | head`) ends the process quietly.
fn say(line: impl std::fmt::Display) {
    if writeln!(std::io::stdout().lock(), "{line}").is_err() {
        std::process::exit(0);
    }
}

struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, value: Value, text: impl FnOnce() -> String) {
        if self.json {
            say(value);
        } else {
            say(text());
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let out = Out { json: cli.json };
    match cli.cmd {
        Cmd::Construct { expr } => {
            let g = graph_arg(&expr)?;
            let enc = encodings(&g);
            out.emit(enc.clone(), || match enc["hex"].as_str() {
                Some(h) => format!("{}\n{h}", enc["digraph6"].as_str().unwrap()),
                None => enc["digraph6"].as_str().unwrap().to_string(),
            });
            Ok(true)
        }
        Cmd::Hom { h, t } => {
            let (h, t) = (graph_arg(&h)?, graph_arg(&t)?);
            let found = hom_exists(&h, &t);
            report_map(&out, "homomorphism", found.as_ref().map(|m| m.map()));
            Ok(found.is_some())
        }
        Cmd::Contains { g, p } => {
            let (g, p) = (graph_arg(&g)?, graph_arg(&p)?);
            let found = contains_copy(&g, &p);
            report_map(&out, "copy", found.as_ref().map(|m| m.map()));
            Ok(found.is_some())
        }
        Cmd::Tau { h, max_k, family } => {
            let mut members = vec![graph_arg(&h)?];
            for f in &family {
                members.push(graph_arg(f)?);
            }
            let res = tau_family(&members, max_k)?;
            let exact = res.is_exact();
            out.emit(
                json!({"tau": res.tau, "p": res.p, "status": res.status, "exact": exact,
                       "witnesses": res.witness_hex(), "verified_at_tau": res.verified_at_tau}),
                || {
                    let mut s = if exact {
                        res.tau.to_string()
                    } else {
                        format!(">= {} (no member fits any level up to {max_k})", res.tau)
                    };
                    for (k, w) in res.witness_hex() {
                        s.push_str(&format!("\nlevel {k} witness {w}"));
                    }
                    s
                },
            );
            if exact {
                Ok(true)
            } else {
                Err(Failure {
                    code: 3,
                    msg: format!("sweep cap {max_k} reached"),
                })
            }
        }
        Cmd::Enumerate { n, pred } => {
            let pred = pred.as_deref().map(Predicate::parse).transpose()?;
            let census = tournaments(n)?;
            let mut count = 0;
            for t in census.tournaments() {
                if pred.map_or(true, |p| p.holds(&t)) {
                    count += 1;
                    out.emit(json!({"hex": to_hex(&t), "digraph6": to_digraph6(&t)}), || to_hex(&t));
                }
            }
            if !out.json {
                eprintln!("{count} of {} tournaments on {n} vertices", census.len());
            }
            Ok(true)
        }
        Cmd::Dom { t, classify } => {
            let t = tournament_arg(&t)?;
            let dom = domination_graph(&t);
            let arcs: Vec<(usize, usize)> = dom.arcs().map(|a| (a.source, a.target)).collect();
            let class = classify.then(|| classify_domination(&dom));
            out.emit(
                json!({"digraph6": to_digraph6(&dom), "arcs": arcs, "classification": class}),
                || {
                    let mut s = format!("{}\narcs {arcs:?}", to_digraph6(&dom));
                    if let Some(c) = &class {
                        s.push_str(&format!("\n{} {:?}", c.shape(), c.details()));
                    }
                    s
                },
            );
            Ok(true)
        }
        Cmd::Layered { h, ell, to_q } => {
            let h = graph_arg(&h)?;
            match check_layers(&h, ell)? {
                Ok(typing) => {
                    let q_map = if to_q {
                        Some(canonical_hom_to_q(&h, &typing)?.map().to_vec())
                    } else {
                        None
                    };
                    out.emit(json!({"layered": true, "ell": ell, "tags": typing.tags, "q_map": q_map}), || {
                        let mut s = format!("{ell}-layered");
                        for (v, tag) in typing.tags.iter().enumerate() {
                            let t = match tag {
                                VertexTag::Type(i, j) => format!("({i}, {j})"),
                                other => format!("{other:?}").to_lowercase(),
                            };
                            s.push_str(&format!("\n{v}: {t}"));
                        }
                        if let Some(m) = &q_map {
                            s.push_str(&format!("\nmap to Q_{ell}: {m:?}"));
                        }
                        s
                    });
                    Ok(true)
                }
                Err(c) => {
                    out.emit(json!({"layered": false, "ell": ell, "conflict": c}), || {
                        format!(
                            "not {ell}-layered: vertex {} has source distances {:?} and sink distances {:?} mod {ell}",
                            c.vertex, c.from_sources, c.to_sinks
                        )
                    });
                    Ok(false)
                }
            }
        }
        Cmd::Ex { n, forbid } => {
            let forbidden = forbid.iter().map(|f| graph_arg(f)).collect::<Result<Vec<_>, _>>()?;
            let res = exact_ex_oriented(n, &forbidden)?;
            let tau = tau_family(&forbidden, DEFAULT_MAX_K.min(7)).ok().filter(|r| r.is_exact());
            let density = tau
                .as_ref()
                .and_then(|r| turan_density_term(r.tau, n).ok())
                .map(|d| d.to_string());
            out.emit(
                json!({"n": n, "value": res.value, "witness": to_digraph6(&res.witness),
                       "stream_index": res.stream_index, "density_term": density}),
                || {
                    let mut s = format!("ex({n}) = {}\nwitness {}", res.value, to_digraph6(&res.witness));
                    if let Some(d) = &density {
                        s.push_str(&format!("\ndensity term {d}"));
                    }
                    s
                },
            );
            Ok(true)
        }
        Cmd::Verify { ids, scale, seed } => {
            let scale = Scale::parse(scale.iter().map(String::as_str))?;
            let ids: Vec<String> = if ids.is_empty() {
                CHECK_IDS.iter().map(|s| s.to_string()).collect()
            } else {
                ids
            };
            if let Some(bad) = ids.iter().find(|id| !CHECK_IDS.contains(&id.as_str())) {
                return Err(Failure {
                    code: 2,
                    msg: format!("unknown check {bad}; known: {}", CHECK_IDS.join(" ")),
                });
            }
            let mut all = true;
            for id in &ids {
                let r = run_check(id, &scale, seed)?;
                all &= r.passed;
                if out.json {
                    say(serde_json::to_string(&r).expect("serializable"));
                } else {
                    say(format!(
                        "{} {} ({} ms)",
                        if r.passed { "PASS" } else { "FAIL" },
                        r.check_id,
                        r.runtime_ms
                    ));
                    for n in &r.notes {
                        say(format!("  {n}"));
                    }
                    for w in &r.witnesses {
                        say(format!("  {}: {}", w.label, w.hex.as_deref().unwrap_or(&w.digraph6)));
                    }
                }
            }
            Ok(all)
        }
    }
}

fn report_map(out: &Out, what: &str, map: Option<&[usize]>) {
    out.emit(json!({"found": map.is_some(), "map": map}), || match map {
        Some(m) => m.iter().enumerate().map(|(v, w)| format!("{v} -> {w}")).collect::<Vec<_>>().join("\n"),
        None => format!("no {what}"),
    });
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
