//! Command-line front end.
//!
//! Exit codes: 0 for any answer (including undecidable verdicts and
//! unknown membership), 2 for input errors, 3 for unsupported contexts,
//! 4 for internal invariant violations.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::decompose::{decompose, DecomposeError};
use crate::detector::{classify, find_forbidden, Evidence};
use crate::dihedral::DihedralGroup;
use crate::elementary::{CleanContext, ElementaryError};
use crate::graph::ArtinGraph;
use crate::oracle::{member_rational, member_submonoid, GroupContext, OracleError, RationalExpr};
use crate::raag::{RaagContext, RaagError};
use crate::witness::{make_witness, verify_witness};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "artin", version, about = "Membership decidability for Artin groups, with certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, Args)]
#[group(multiple = false)]
pub struct Format {
    /// JSON output (default)
    #[arg(long)]
    pub json: bool,
    /// Human-readable text output
    #[arg(long)]
    pub text: bool,
    /// Graphviz DOT output
    #[arg(long)]
    pub dot: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide rational subset / submonoid membership and subgroup separability
    Analyze {
        graph: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Print the elementary decomposition of a clean graph
    Decompose {
        graph: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Build and verify a poisonous subgroup witness
    Witness {
        graph: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Normal form of a word
    Nf {
        /// Dihedral Artin group D_m on generators a, b
        #[arg(long, value_name = "M", group = "ctx")]
        dihedral: Option<u32>,
        /// Right-angled Artin group from a graph file
        #[arg(long, value_name = "FILE", group = "ctx")]
        raag: Option<PathBuf>,
        /// Clean Artin group from a graph file
        #[arg(long, value_name = "FILE", group = "ctx")]
        artin: Option<PathBuf>,
        word: String,
    },
    /// Bounded search for submonoid or rational subset membership
    Member {
        #[arg(long, value_name = "FILE", required_unless_present = "dihedral")]
        graph: Option<PathBuf>,
        #[arg(long, value_name = "M", conflicts_with = "graph")]
        dihedral: Option<u32>,
        /// Comma-separated generator words
        #[arg(long, required_unless_present = "regex", conflicts_with = "regex")]
        gens: Option<String>,
        /// Rational expression
        #[arg(long)]
        regex: Option<String>,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 10)]
        bound: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }

    fn unsupported(message: impl Into<String>) -> Self {
        Failure { code: EXIT_UNSUPPORTED, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INTERNAL, message: message.into() }
    }
}

impl From<DecomposeError> for Failure {
    fn from(e: DecomposeError) -> Self {
        match e {
            DecomposeError::PoisonousGraph(p) => Failure::unsupported(format!(
                "graph contains the forbidden pattern {p}; run `artin analyze` or `artin witness`"
            )),
            e => Failure::internal(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::UnsupportedContext(_) => Failure::unsupported(e.to_string()),
            OracleError::Certificate(_) => Failure::internal(e.to_string()),
            _ => Failure::input(e.to_string()),
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CliOutput { code, stdout: text, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => CliOutput { code: EXIT_OK, stdout, stderr: String::new() },
        Err(f) => CliOutput { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}

fn load_graph(path: &Path) -> Result<ArtinGraph, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    ArtinGraph::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn parse_word(text: &str, names: &[String]) -> Result<Word, Failure> {
    Word::parse_with(text, names).map_err(|e| Failure::input(e.to_string()))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn execute(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Analyze { graph, format } => analyze(&load_graph(&graph)?, format),
        Command::Decompose { graph, format } => {
            let g = load_graph(&graph)?;
            let tree = decompose(&g)?;
            tree.verify(&g).map_err(Failure::internal)?;
            Ok(if format.text {
                format!("{}\n", tree.describe())
            } else if format.dot {
                tree.to_dot()
            } else {
                pretty(&json!({ "tree": tree, "description": tree.describe() }))
            })
        }
        Command::Witness { graph, format } => {
            let g = load_graph(&graph)?;
            let Some(pat) = find_forbidden(&g) else {
                return Err(Failure::unsupported(
                    "graph has no forbidden pattern, so there is no poisonous subgroup to exhibit",
                ));
            };
            let report = make_witness(&g, &pat).map_err(|e| Failure::internal(e.to_string()))?;
            let report = verify_witness(&g, &report).map_err(|e| Failure::internal(e.to_string()))?;
            if !report.verified {
                return Err(Failure::internal(format!("built-in witness failed:\n{}", report.sketch())));
            }
            Ok(if format.text { report.sketch() } else { pretty(&report.to_json()) })
        }
        Command::Nf { dihedral, raag, artin, word } => {
            if let Some(m) = dihedral {
                let group = DihedralGroup::standard(m).map_err(|e| Failure::input(e.to_string()))?;
                let w = parse_word(&word, group.gens())?;
                let nf = group.normal_form(&w).map_err(|e| Failure::input(e.to_string()))?;
                Ok(format!("{}\n", nf.render(group.gens())))
            } else if let Some(path) = raag {
                let g = load_graph(&path)?;
                let w = parse_word(&word, g.vertex_names())?;
                let ctx = RaagContext::new(g).map_err(|e| Failure::unsupported(e.to_string()))?;
                let r = ctx.reduce(&w).map_err(|e: RaagError| Failure::input(e.to_string()))?;
                Ok(format!("{r}\n"))
            } else if let Some(path) = artin {
                let g = load_graph(&path)?;
                let w = parse_word(&word, g.vertex_names())?;
                let ctx = CleanContext::new(g).map_err(|e| match e {
                    ElementaryError::NotClean(DecomposeError::PoisonousGraph(p)) => Failure::unsupported(format!(
                        "graph contains the forbidden pattern {p}; only clean graphs are supported \
                         (see `artin analyze`)"
                    )),
                    ElementaryError::NotClean(e) => e.into(),
                    e => Failure::input(e.to_string()),
                })?;
                let key = ctx.normal_key(&w).map_err(|e| Failure::input(e.to_string()))?;
                Ok(format!("{key}\n"))
            } else {
                Err(Failure::input("one of --dihedral, --raag, --artin is required"))
            }
        }
        Command::Member { graph, dihedral, gens, regex, target, bound } => {
            let ctx = match (graph, dihedral) {
                (Some(path), _) => GroupContext::from_graph(load_graph(&path)?)?,
                (None, Some(m)) => {
                    GroupContext::Dihedral(DihedralGroup::standard(m).map_err(|e| Failure::input(e.to_string()))?)
                }
                (None, None) => return Err(Failure::input("--graph or --dihedral is required")),
            };
            let names = ctx.generators();
            let target = parse_word(&target, &names)?;
            let result = if let Some(expr) = regex {
                let expr = RationalExpr::parse_with(&expr, &names)?;
                member_rational(&ctx, &expr, &target, bound)?
            } else {
                let gens = gens
                    .unwrap_or_default()
                    .split(',')
                    .map(|s| parse_word(s, &names))
                    .collect::<Result<Vec<_>, _>>()?;
                member_submonoid(&ctx, &gens, &target, bound)?
            };
            Ok(pretty(&result.to_json()))
        }
    }
}

fn analyze(g: &ArtinGraph, format: Format) -> Result<String, Failure> {
    let verdict = classify(g)?;
    if !verdict.fields_agree() {
        return Err(Failure::internal("verdict fields disagree"));
    }
    if let Evidence::Pattern(p) = &verdict.evidence {
        if !p.validate(g) {
            return Err(Failure::internal(format!("pattern {p} does not re-validate")));
        }
    }
    if format.dot {
        let highlight = match &verdict.evidence {
            Evidence::Pattern(p) => p.vertex_ids(g).unwrap_or_default(),
            Evidence::Decomposition(_) => Vec::new(),
        };
        return Ok(g.to_dot(&highlight));
    }
    if format.text {
        let answer = if verdict.is_decidable() { "decidable" } else { "undecidable" };
        let evidence = match &verdict.evidence {
            Evidence::Pattern(p) => format!("forbidden pattern {p}"),
            Evidence::Decomposition(t) => format!("A(Γ) ≅ {}", t.describe()),
        };
        let mut out = format!(
            "rational subset membership: {answer}\nsubmonoid membership: {answer}\nsubgroup separable: {}\nevidence: {evidence}\n",
            if verdict.is_decidable() { "yes" } else { "no" }
        );
        for n in &verdict.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        return Ok(out);
    }
    Ok(pretty(&verdict.to_json()))
}
