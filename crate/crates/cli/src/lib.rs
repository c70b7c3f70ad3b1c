//! Argument handling and rendering for the `rvar` binary.
//!
//! [`run`] does all the work and returns the exit code with both output
//! streams, so tests can drive the CLI without spawning a process.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rvariety::engine::{Descendants, LevelStep};
use rvariety::parse::{parse_elements, parse_semigroup};
use rvariety::{
    build_tree, chain_to, descendants, genus_level_trace, minimal_vsystem, oracle,
    restrict_variety, restricted_closure, variety_closure, ClosureKind, Error, NumericalSemigroup,
    RFamily, RVariety, TreeNode,
};
use serde::Serialize;

pub const DEFAULT_GENUS_BOUND: u64 = 40;

#[derive(Debug, Parser)]
#[command(name = "rvar", version, about = "R-varieties of numerical semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Ld,
    Pl,
}

impl From<Kind> for ClosureKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Ld => ClosureKind::Ld,
            Kind::Pl => ClosureKind::Pl,
        }
    }
}

/// Exactly one descriptor.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct VarietyArgs {
    /// Every semigroup between two bounds, "LO:HI"
    #[arg(long, value_name = "LO:HI")]
    pub interval: Option<String>,
    /// Semigroups of T containing A, "a1,a2,...:T"
    #[arg(long, value_name = "A:T")]
    pub restricted: Option<String>,
    /// The R-variety generated by a family under DELTA, "S1;S2;...:DELTA"
    #[arg(long, value_name = "F:DELTA")]
    pub generated: Option<String>,
}

/// At most one descriptor.
#[derive(Debug, Clone, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalVarietyArgs {
    #[arg(long, value_name = "LO:HI")]
    pub interval: Option<String>,
    #[arg(long, value_name = "A:T")]
    pub restricted: Option<String>,
    #[arg(long, value_name = "F:DELTA")]
    pub generated: Option<String>,
}

impl VarietyArgs {
    fn build(&self) -> rvariety::Result<RVariety> {
        build_variety(&self.interval, &self.restricted, &self.generated)?
            .ok_or_else(|| Error::InvalidDescriptor("no descriptor given".into()))
    }
}

fn build_variety(
    interval: &Option<String>,
    restricted: &Option<String>,
    generated: &Option<String>,
) -> rvariety::Result<Option<RVariety>> {
    Ok(match (interval, restricted, generated) {
        (Some(t), _, _) => Some(RVariety::parse_interval(t)?),
        (_, Some(t), _) => Some(RVariety::parse_restricted(t)?),
        (_, _, Some(t)) => Some(RVariety::parse_generated(t)?),
        _ => None,
    })
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basic invariants of a semigroup
    Info {
        semigroup: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Minimal system of generators
    Msg {
        semigroup: String,
    },
    /// Frobenius number, or F_T(S) with --within T
    Frobenius {
        semigroup: String,
        #[arg(long, value_name = "T")]
        within: Option<String>,
    },
    Genus {
        semigroup: String,
    },
    /// Intersection of two or more semigroups
    Intersect {
        #[arg(num_args = 2.., required = true)]
        semigroups: Vec<String>,
    },
    /// The chain from S up to T by adjoining restricted Frobenius numbers
    Chain {
        from: String,
        to: String,
    },
    /// Minimal system of generators relative to a variety
    Minsys {
        #[command(flatten)]
        variety: VarietyArgs,
        semigroup: String,
    },
    /// The tree of a variety
    Tree {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        genus_bound: Option<u64>,
    },
    /// Members of a given genus
    GenusLevel {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long)]
        genus: u64,
        /// Print every level visited on the way
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The subtree hanging from a member
    Descendants {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long, value_name = "S")]
        of: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        genus_bound: Option<u64>,
    },
    /// LD/PL closure of a set, or the minimal V-system of a semigroup
    Closure {
        /// Element set, or a semigroup with --minimal-system
        input: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_name = "T", conflicts_with = "minimal_system")]
        within: Option<String>,
        #[arg(long)]
        minimal_system: bool,
    },
    /// Intersect every member with a semigroup
    Restrict {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long, value_name = "U")]
        by: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        genus_bound: Option<u64>,
    },
    /// Compare the engine with the brute-force oracles
    Verify {
        #[command(flatten)]
        variety: OptionalVarietyArgs,
        #[arg(long, default_value_t = 30)]
        genus_bound: u64,
    },
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

/// Parses `argv` (including the program name) and executes it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stderr: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    ..Outcome::default()
                }
            };
        }
    };
    let mut out = Outcome::default();
    match execute(&cli.command, &mut out) {
        Ok(code) => out.code = code,
        Err(Failure::Usage(msg)) => {
            out.code = 1;
            let _ = writeln!(out.stderr, "error: {msg}");
        }
        Err(Failure::Domain(e)) => {
            out.code = 2;
            let _ = writeln!(out.stderr, "error: {e}");
        }
    }
    out
}

/// Default bound for finite varieties; infinite ones need an explicit one.
fn bound_for(variety: &RVariety, explicit: Option<u64>) -> Result<u64, Failure> {
    match explicit {
        Some(b) => Ok(b),
        None if variety.is_finite() => Ok(DEFAULT_GENUS_BOUND),
        None => Err(Failure::Usage(format!(
            "{variety} has infinitely many members; pass --genus-bound"
        ))),
    }
}

fn execute(command: &Command, out: &mut Outcome) -> Result<i32, Failure> {
    let so = &mut out.stdout;
    match command {
        Command::Info { semigroup, format } => {
            let s = parse_semigroup(semigroup)?;
            so.push_str(&render_info(&s, *format));
        }
        Command::Msg { semigroup } => {
            let s = parse_semigroup(semigroup)?;
            let _ = writeln!(so, "{}", list(s.msg()));
        }
        Command::Frobenius { semigroup, within } => {
            let s = parse_semigroup(semigroup)?;
            match within {
                Some(t) => {
                    let t = parse_semigroup(t)?;
                    let _ = writeln!(so, "{}", s.restricted_frobenius(&t)?);
                }
                None => {
                    let _ = writeln!(so, "{}", s.frobenius());
                }
            }
        }
        Command::Genus { semigroup } => {
            let _ = writeln!(so, "{}", parse_semigroup(semigroup)?.genus());
        }
        Command::Intersect { semigroups } => {
            let parsed = semigroups
                .iter()
                .map(|t| parse_semigroup(t))
                .collect::<rvariety::Result<Vec<_>>>()?;
            let meet = parsed[1..]
                .iter()
                .fold(parsed[0].clone(), |acc, s| acc.intersect(s));
            let _ = writeln!(so, "{meet}");
        }
        Command::Chain { from, to } => {
            let chain = chain_to(&parse_semigroup(from)?, &parse_semigroup(to)?)?;
            for (i, link) in chain.links.iter().enumerate() {
                match chain.fill_values.get(i) {
                    Some(x) => {
                        let _ = writeln!(so, "{link}  F_T={x}");
                    }
                    None => {
                        let _ = writeln!(so, "{link}");
                    }
                }
            }
        }
        Command::Minsys { variety, semigroup } => {
            let v = variety.build()?;
            let s = parse_semigroup(semigroup)?;
            let _ = writeln!(so, "{}", list(&v.minimal_system(&s)?));
        }
        Command::Tree {
            variety,
            format,
            genus_bound,
        } => {
            let v = variety.build()?;
            let bound = bound_for(&v, *genus_bound)?;
            let tree = build_tree(&v, bound)?;
            note_truncation(&tree, bound, &mut out.stderr);
            out.stdout = render_tree(&tree, *format);
        }
        Command::GenusLevel {
            variety,
            genus,
            trace,
            format,
        } => {
            let v = variety.build()?;
            let steps = genus_level_trace(&v, *genus)?;
            out.stdout = render_levels(&v, &steps, *genus, *trace, *format)?;
        }
        Command::Descendants {
            variety,
            of,
            format,
            genus_bound,
        } => {
            let v = variety.build()?;
            let top = parse_semigroup(of)?;
            let d: Descendants<'_, RVariety> = descendants(&v, &top)?;
            let bound = bound_for(&v, *genus_bound)?;
            let tree = build_tree(&d, bound)?;
            note_truncation(&tree, bound, &mut out.stderr);
            out.stdout = render_tree(&tree, *format);
        }
        Command::Closure {
            input,
            kind,
            within,
            minimal_system,
        } => {
            let kind = ClosureKind::from(*kind);
            if *minimal_system {
                let m = parse_semigroup(input)?;
                let _ = writeln!(so, "{}", list(&minimal_vsystem(kind, &m)?));
            } else {
                let a = parse_elements(input)?;
                let s = match within {
                    Some(t) => restricted_closure(kind, &a, &parse_semigroup(t)?)?,
                    None => variety_closure(kind, &a)?,
                };
                let _ = writeln!(so, "{s}");
            }
        }
        Command::Restrict {
            variety,
            by,
            format,
            genus_bound,
        } => {
            let v = variety.build()?;
            let u = parse_semigroup(by)?;
            let bound = bound_for(&v, *genus_bound)?;
            let found = restrict_variety(&v, &u, bound)?;
            if !found.complete {
                let _ = writeln!(
                    out.stderr,
                    "note: members above genus {bound} were not restricted"
                );
            }
            out.stdout = render_set(&found.members, *format);
        }
        Command::Verify {
            variety,
            genus_bound,
        } => {
            let v = build_variety(&variety.interval, &variety.restricted, &variety.generated)?;
            let report = oracle::verify(v.as_ref(), *genus_bound)?;
            let _ = write!(so, "{report}");
            return Ok(if report.passed() { 0 } else { 2 });
        }
    }
    Ok(0)
}

fn note_truncation(tree: &TreeNode, bound: u64, stderr: &mut String) {
    let cut = tree.preorder().iter().any(|(_, n)| {
        n.children.is_empty() && n.genus() >= bound && n.branching().next().is_some()
    });
    if cut {
        let _ = writeln!(stderr, "note: tree truncated at genus {bound}");
    }
}

/// `[a,b,c]`
pub fn list(xs: &[u64]) -> String {
    let items: Vec<String> = xs.iter().map(u64::to_string).collect();
    format!("[{}]", items.join(","))
}

#[derive(Debug, Serialize)]
struct InfoRecord {
    sg: String,
    msg: Vec<u64>,
    small_elements: Vec<u64>,
    gaps: Vec<u64>,
    conductor: u64,
    frobenius: i64,
    genus: u64,
    multiplicity: u64,
    embedding_dimension: usize,
}

pub fn render_info(s: &NumericalSemigroup, format: Format) -> String {
    let record = InfoRecord {
        sg: s.to_string(),
        msg: s.msg().to_vec(),
        small_elements: s.small_elements().to_vec(),
        gaps: s.gaps(),
        conductor: s.conductor(),
        frobenius: s.frobenius(),
        genus: s.genus(),
        multiplicity: s.multiplicity(),
        embedding_dimension: s.embedding_dimension(),
    };
    match format {
        Format::Json => serde_json::to_string(&record).expect("plain record serializes") + "\n",
        Format::Text | Format::Dot => {
            let mut out = String::new();
            let _ = writeln!(out, "semigroup: {}", record.sg);
            let _ = writeln!(out, "minimal generators: {}", list(&record.msg));
            let _ = writeln!(out, "small elements: {}", list(&record.small_elements));
            let _ = writeln!(out, "gaps: {}", list(&record.gaps));
            let _ = writeln!(out, "conductor: {}", record.conductor);
            let _ = writeln!(out, "frobenius: {}", record.frobenius);
            let _ = writeln!(out, "genus: {}", record.genus);
            let _ = writeln!(out, "multiplicity: {}", record.multiplicity);
            let _ = writeln!(out, "embedding dimension: {}", record.embedding_dimension);
            out
        }
    }
}

/// One line of structured tree output.
#[derive(Debug, Serialize)]
pub struct VertexRecord {
    pub id: usize,
    pub parent: Option<usize>,
    pub sg: String,
    pub msg: Vec<u64>,
    pub minsys: Vec<u64>,
    pub fdelta: i64,
    pub genus: u64,
}

/// Renders a tree in preorder, children by removed element ascending.
pub fn render_tree(root: &TreeNode, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for (depth, node) in root.preorder() {
                let _ = writeln!(
                    out,
                    "{:indent$}{}  {}  F_Δ={}",
                    "",
                    node.semigroup,
                    list(&node.minimal_system),
                    node.restricted_frobenius,
                    indent = 2 * depth
                );
            }
        }
        Format::Dot => {
            out.push_str("digraph G {\n  rankdir=BT;\n  node [shape=box];\n");
            let ids = numbered(root);
            for (id, _, node) in &ids {
                let _ = writeln!(out, "  n{id} [label=\"{}\"];", node.semigroup);
            }
            for (id, parent, _) in &ids {
                if let Some(p) = parent {
                    let _ = writeln!(out, "  n{id} -> n{p};");
                }
            }
            out.push_str("}\n");
        }
        Format::Json => {
            for (id, parent, node) in numbered(root) {
                let record = VertexRecord {
                    id,
                    parent,
                    sg: node.semigroup.to_string(),
                    msg: node.semigroup.msg().to_vec(),
                    minsys: node.minimal_system.clone(),
                    fdelta: node.restricted_frobenius,
                    genus: node.genus(),
                };
                out.push_str(&serde_json::to_string(&record).expect("plain record serializes"));
                out.push('\n');
            }
        }
    }
    out
}

/// Preorder ids with parent ids.
fn numbered(root: &TreeNode) -> Vec<(usize, Option<usize>, &TreeNode)> {
    let mut out = Vec::new();
    let mut stack = vec![(None, root)];
    while let Some((parent, node)) = stack.pop() {
        let id = out.len();
        out.push((id, parent, node));
        for child in node.children.iter().rev() {
            stack.push((Some(id), child));
        }
    }
    out
}

#[derive(Debug, Serialize)]
struct SetRecord {
    sg: String,
    msg: Vec<u64>,
    genus: u64,
}

pub fn render_set<'a>(
    set: impl IntoIterator<Item = &'a NumericalSemigroup>,
    format: Format,
) -> String {
    let mut out = String::new();
    for s in set {
        match format {
            Format::Json => {
                let record = SetRecord {
                    sg: s.to_string(),
                    msg: s.msg().to_vec(),
                    genus: s.genus(),
                };
                out.push_str(&serde_json::to_string(&record).expect("plain record serializes"));
                out.push('\n');
            }
            Format::Text | Format::Dot => {
                let _ = writeln!(out, "{s}");
            }
        }
    }
    out
}

#[derive(Debug, Serialize)]
struct LevelRecord {
    genus: u64,
    sg: String,
    msg: Vec<u64>,
    minsys: Vec<u64>,
    branching: Vec<u64>,
}

fn render_levels(
    v: &RVariety,
    steps: &[LevelStep],
    genus: u64,
    trace: bool,
    format: Format,
) -> Result<String, Failure> {
    let reached = steps.last().is_some_and(|s| s.genus == genus);
    if !trace {
        let level: BTreeSet<_> = match steps.last() {
            Some(step) if reached => step.semigroups.iter().collect(),
            _ => BTreeSet::new(),
        };
        return Ok(render_set(level, format));
    }
    let mut out = String::new();
    for step in steps {
        for (i, s) in step.semigroups.iter().enumerate() {
            let branching = step.branching.get(i).cloned().unwrap_or_default();
            match format {
                Format::Json => {
                    let record = LevelRecord {
                        genus: step.genus,
                        sg: s.to_string(),
                        msg: s.msg().to_vec(),
                        minsys: v.minimal_system(s)?,
                        branching,
                    };
                    out.push_str(&serde_json::to_string(&record).expect("plain record serializes"));
                    out.push('\n');
                }
                Format::Text | Format::Dot => {
                    let _ = write!(out, "i={}  {s}", step.genus);
                    if step.genus != genus {
                        let _ = write!(out, "  B={}", list(&branching));
                    }
                    out.push('\n');
                }
            }
        }
    }
    if !reached && format != Format::Json {
        let _ = writeln!(out, "no members of genus {genus}");
    }
    Ok(out)
}
