//! Verb implementations.  Each produces a [`Report`] carrying both the
//! human text and the machine records, plus the exit status; rendering and
//! process exit stay in `main`.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use quasigraph_core::io::{self, IoError, Record};
use quasigraph_core::{
    analyze, classify_representation, consecutive_twisting, decide_quasi_graphic,
    enumerate_frameworks, enumerate_frameworks_naive, fat_theta, four_twisting, is_excluded_minor,
    pinch, simple_curling, verify_framework, BiasedGraph, EnumOptions, Matroid, Multigraph,
    QgVerdict, TwistPart,
};

use crate::{Cli, Target, Verb};

const EXIT_TRUE: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;

pub struct Report {
    pub exit: u8,
    pub records: Vec<Record>,
    pub text: String,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Missing(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Data(_) => 65,
            CliError::Missing(_) => 66,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Missing(m) => f.write_str(m),
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> CliError {
        match e {
            IoError::Read { .. } => CliError::Missing(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

/// Wraps any domain error as input-data trouble (exit 65).
fn data(e: impl fmt::Display) -> CliError {
    CliError::Data(e.to_string())
}

pub struct Ctx {
    pub jobs: usize,
    pub max_vertices: Option<usize>,
    pub max_elements: Option<usize>,
    pub seed: u64,
}

impl Ctx {
    fn options(&self, connected_only: bool, shortcut: bool) -> EnumOptions {
        let mut opts = EnumOptions::default();
        opts.jobs = self.jobs;
        opts.max_vertices = self.max_vertices;
        if let Some(m) = self.max_elements {
            opts.max_elements = m;
        }
        opts.connected_only = connected_only;
        opts.three_connected_shortcut = shortcut;
        opts
    }
}

pub fn run(cli: Cli) -> Result<Report, CliError> {
    let ctx = Ctx {
        jobs: resolve_jobs(cli.jobs)?,
        max_vertices: cli.max_vertices,
        max_elements: cli.max_elements,
        seed: cli.seed,
    };
    match cli.verb {
        Verb::Verify { graph, matroid } => verify(&ctx, &graph, &matroid),
        Verb::Decide { matroid, out, connected_only, no_shortcut } => {
            decide(&ctx, &matroid, &out, connected_only, !no_shortcut)
        }
        Verb::Enumerate { matroid, naive, connected_only, no_shortcut } => {
            enumerate(&ctx, &matroid, naive, connected_only, !no_shortcut)
        }
        Verb::Analyze { graph, matroid, max_balancing } => {
            analyze_verb(&ctx, &graph, &matroid, max_balancing)
        }
        Verb::Construct { spec, out } => construct(&ctx, &spec, &out),
        Verb::Minor { base, pattern } => minor(&ctx, &base, &pattern),
        Verb::Reproduce { target } => reproduce(&ctx, target),
    }
}

fn resolve_jobs(flag: Option<usize>) -> Result<usize, CliError> {
    let jobs = match flag {
        Some(j) => j,
        None => match std::env::var("QUASIGRAPH_JOBS") {
            Ok(s) => s.trim().parse().map_err(|_| {
                CliError::Usage(format!("QUASIGRAPH_JOBS must be a positive integer, got `{s}`"))
            })?,
            Err(_) => 1,
        },
    };
    if jobs == 0 {
        return Err(CliError::Usage("jobs must be at least 1".into()));
    }
    Ok(jobs)
}

// ---------------------------------------------------------------- helpers

fn header(verb: &str, seed: u64) -> Record {
    Record::new("run").push("verb", verb).push("seed", seed)
}

fn finish(exit: u8, records: Vec<Record>, lines: Vec<String>) -> Result<Report, CliError> {
    let mut text = lines.join("\n");
    text.push('\n');
    Ok(Report { exit, records, text })
}

/// Whitespace-free form for record values that may contain prose.
fn token(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join("-")
}

fn csv<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(",")
    }
}

fn pair_list(pairs: &[(usize, usize)]) -> String {
    if pairs.is_empty() {
        return "-".to_string();
    }
    pairs
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn edge_labels(g: &Multigraph, mask: u32) -> String {
    csv((0..g.edge_count()).filter(|e| mask >> e & 1 == 1).map(|e| g.label(e).to_string()))
}

fn mask_labels(m: &Matroid, mask: u32) -> String {
    csv(
        (0..m.ground_size())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| m.element_names()[i].clone()),
    )
}

fn representation_words(is_frame: bool, is_lift: bool) -> &'static str {
    match (is_frame, is_lift) {
        (true, true) => "frame lift",
        (true, false) => "frame",
        (false, true) => "lift",
        (false, false) => "framework only",
    }
}

fn matroid_line(name: &str, m: &Matroid) -> String {
    format!("matroid: {name} (rank {}, {} elements)", m.rank(), m.ground_size())
}

fn graph_line(name: &str, g: &Multigraph) -> String {
    format!("graph: {name} ({} vertices, {} edges)", g.vertex_count(), g.edge_count())
}

/// Appends `suffix` to a path as plain text (`w` -> `w.graph`).
fn suffixed(prefix: &Path, suffix: &str) -> PathBuf {
    PathBuf::from(format!("{}{suffix}", prefix.display()))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text)
        .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display())))
}

const INLINE_FORMS: [&str; 4] = ["uniform", "graphic", "dual", "named"];

/// A matroid argument: a single file path, or an inline body form of the
/// matroid file format (`uniform 3 7`, `graphic k4.graph`, `named F7`,
/// `dual m.matroid`); inline file references resolve against the working
/// directory.
fn matroid_from_args(args: &[String]) -> Result<(String, Matroid), CliError> {
    if args.is_empty() {
        return Err(CliError::Usage("missing matroid specification".into()));
    }
    if INLINE_FORMS.contains(&args[0].as_str()) {
        let text = format!("matroid inline\n{}\n", args.join(" "));
        return io::parse_matroid_text(&text, Path::new("<matroid>"), Path::new("."), 0).map_err(
            |e| match e {
                IoError::Read { .. } => CliError::Missing(e.to_string()),
                IoError::Parse { path, message, .. } if path == Path::new("<matroid>") => {
                    CliError::Usage(format!("bad matroid arguments `{}`: {message}", args.join(" ")))
                }
                other => CliError::Data(other.to_string()),
            },
        );
    }
    if args[0] == "ground" {
        return Err(CliError::Usage(
            "inline `ground` matroids are not supported; put the circuits in a file".into(),
        ));
    }
    if args.len() == 1 {
        return Ok(io::load_matroid(Path::new(&args[0]))?);
    }
    Err(CliError::Usage(format!(
        "matroid arguments must be a file path or one of `uniform <r> <n>`, `graphic <file>`, \
         `named <name>`, `dual <file>`; got `{}`",
        args.join(" ")
    )))
}

// ------------------------------------------------------------------ verify

fn verify(ctx: &Ctx, graph: &Path, matroid: &[String]) -> Result<Report, CliError> {
    let file = io::load_graph(graph)?;
    let (mname, n) = matroid_from_args(matroid)?;
    let outcome = verify_framework(&file.graph, &n);
    let mut records = vec![header("verify", ctx.seed)];
    let mut lines = vec![graph_line(&file.name, &file.graph), matroid_line(&mname, &n)];
    if outcome.valid {
        let derived = outcome.derived.expect("a valid report carries the derived bias");
        let rep = classify_representation(&derived, &n).map_err(data)?;
        records.push(
            Record::new("verify")
                .push("valid", true)
                .push("frame", rep.is_frame)
                .push("lift", rep.is_lift),
        );
        lines.push("framework: valid".to_string());
        lines.push(format!(
            "representation: {}",
            representation_words(rep.is_frame, rep.is_lift)
        ));
        finish(EXIT_TRUE, records, lines)
    } else {
        let failure = outcome.failure.expect("an invalid report carries its failure");
        records.push(
            Record::new("verify")
                .push("valid", false)
                .push("axiom", failure.axiom())
                .push("detail", token(&failure.describe())),
        );
        lines.push("framework: INVALID".to_string());
        lines.push(format!("axiom: {}", failure.axiom()));
        lines.push(format!("detail: {}", failure.describe()));
        finish(EXIT_FALSE, records, lines)
    }
}

// ------------------------------------------------------------------ decide

fn decide(
    ctx: &Ctx,
    matroid: &[String],
    out: &Path,
    connected_only: bool,
    shortcut: bool,
) -> Result<Report, CliError> {
    let (mname, n) = matroid_from_args(matroid)?;
    let result = enumerate_frameworks(&n, &ctx.options(connected_only, shortcut)).map_err(data)?;
    let mut records = vec![header("decide", ctx.seed)];
    let mut lines = vec![matroid_line(&mname, &n)];
    match result.classes.first() {
        Some(class) => {
            let graph_path = suffixed(out, ".graph");
            let bias_path = suffixed(out, ".bias");
            let wname = format!("{mname}-witness");
            write_file(&graph_path, &io::graph_file_text(&wname, &class.graph))?;
            write_file(&bias_path, &io::bias_file_text(&wname, &class.bias))?;
            reverify_witness(&bias_path, &n)?;
            records.push(
                Record::new("verdict")
                    .push("value", "quasi-graphic")
                    .push("classes", result.classes.len())
                    .push("bounded", result.bounded),
            );
            records.push(
                Record::new("witness")
                    .push("vertices", class.graph.vertex_count())
                    .push("edges", io::edge_code(&class.graph))
                    .push("balanced", io::balanced_code(&class.bias))
                    .push("frame", class.is_frame)
                    .push("lift", class.is_lift),
            );
            records.push(
                Record::new("files")
                    .push("graph", graph_path.display())
                    .push("bias", bias_path.display()),
            );
            lines.push("verdict: quasi-graphic".to_string());
            lines.push(format!("classes: {}", result.classes.len()));
            lines.push(format!("bounded: {}", result.bounded));
            lines.push(format!(
                "witness: {} vertices, edges {}, balanced {}",
                class.graph.vertex_count(),
                io::edge_code(&class.graph),
                io::balanced_code(&class.bias)
            ));
            lines.push(format!(
                "representation: {}",
                representation_words(class.is_frame, class.is_lift)
            ));
            lines.push(format!(
                "witness files: {} {} (re-verified)",
                graph_path.display(),
                bias_path.display()
            ));
            finish(EXIT_TRUE, records, lines)
        }
        None if result.bounded => {
            records.push(Record::new("verdict").push("value", "unknown").push("bounded", true));
            lines.push("verdict: unknown (vertex bound truncated the search)".to_string());
            lines.push("bounded: true".to_string());
            finish(EXIT_UNDECIDED, records, lines)
        }
        None => {
            records
                .push(Record::new("verdict").push("value", "not-quasi-graphic").push("bounded", false));
            lines.push("verdict: not quasi-graphic (exhaustive search)".to_string());
            lines.push("bounded: false".to_string());
            finish(EXIT_FALSE, records, lines)
        }
    }
}

/// Reloads an emitted witness file and checks it still verifies and still
/// describes the bias we meant to write.
fn reverify_witness(bias_path: &Path, n: &Matroid) -> Result<(), CliError> {
    let file = io::load_graph(bias_path)?;
    let recorded = file
        .bias()
        .map_err(|e| CliError::Data(format!("emitted witness does not re-verify: {e}")))?;
    let outcome = verify_framework(&file.graph, n);
    if !outcome.valid {
        let why = outcome.failure.map(|f| f.describe()).unwrap_or_default();
        return Err(CliError::Data(format!("emitted witness does not re-verify: {why}")));
    }
    let derived = outcome.derived.expect("a valid report carries the derived bias");
    let a: Vec<u32> = recorded.balanced_cycles().map(|c| c.edges).collect();
    let b: Vec<u32> = derived.balanced_cycles().map(|c| c.edges).collect();
    if a != b {
        return Err(CliError::Data(
            "emitted witness does not re-verify: balanced cycles drifted".into(),
        ));
    }
    Ok(())
}

// --------------------------------------------------------------- enumerate

fn enumerate(
    ctx: &Ctx,
    matroid: &[String],
    naive: bool,
    connected_only: bool,
    shortcut: bool,
) -> Result<Report, CliError> {
    let (mname, n) = matroid_from_args(matroid)?;
    let opts = ctx.options(connected_only, shortcut);
    let search = if naive { enumerate_frameworks_naive } else { enumerate_frameworks };
    let result = search(&n, &opts).map_err(data)?;

    // group classes by underlying unlabeled graph, in first-appearance order
    let mut shapes: Vec<(Vec<u8>, Vec<usize>)> = Vec::new();
    for (i, class) in result.classes.iter().enumerate() {
        let code = class.graph.canonical_shape_code();
        match shapes.iter_mut().find(|(c, _)| *c == code) {
            Some((_, members)) => members.push(i),
            None => shapes.push((code, vec![i])),
        }
    }

    let mut records = vec![header("enumerate", ctx.seed)];
    records.push(
        Record::new("result")
            .push("classes", result.classes.len())
            .push("shapes", shapes.len())
            .push("bounded", result.bounded),
    );
    for (i, (_, members)) in shapes.iter().enumerate() {
        let rep = &result.classes[members[0]];
        records.push(
            Record::new("shape")
                .push("index", i)
                .push("vertices", rep.graph.vertex_count())
                .push("edges", rep.graph.edge_count())
                .push("classes", members.len())
                .push("rep", io::edge_code(&rep.graph)),
        );
    }
    records.extend(io::class_records(&result.classes));

    let mut lines = vec![matroid_line(&mname, &n)];
    lines.push(format!("classes: {}", result.classes.len()));
    lines.push(format!("bounded: {}", result.bounded));
    lines.push(format!("underlying graph shapes: {}", shapes.len()));
    for (i, (_, members)) in shapes.iter().enumerate() {
        let rep = &result.classes[members[0]];
        lines.push(format!(
            "  shape {i}: {} vertices, {} edges, {} classes (e.g. {})",
            rep.graph.vertex_count(),
            rep.graph.edge_count(),
            members.len(),
            io::edge_code(&rep.graph)
        ));
    }
    let exit = if !result.classes.is_empty() {
        EXIT_TRUE
    } else if result.bounded {
        EXIT_UNDECIDED
    } else {
        EXIT_FALSE
    };
    finish(exit, records, lines)
}

// ----------------------------------------------------------------- analyze

fn analyze_verb(
    ctx: &Ctx,
    graph: &Path,
    matroid: &[String],
    max_balancing: usize,
) -> Result<Report, CliError> {
    let file = io::load_graph(graph)?;
    let (mname, n) = matroid_from_args(matroid)?;
    let mut lines = vec![graph_line(&file.name, &file.graph), matroid_line(&mname, &n)];
    if file.signature.is_some() || file.balanced.is_some() {
        lines.push("note: bias lines in the graph file are ignored; the bias is derived".into());
    }
    let a = analyze(file.graph, n).map_err(data)?;

    let mut records = vec![header("analyze", ctx.seed)];
    records.push(
        Record::new("analysis")
            .push("frame", a.representation.is_frame)
            .push("lift", a.representation.is_lift)
            .push("loops_dropped", a.loops_dropped)
            .push("vertices", a.h.vertex_count())
            .push("edges", a.h.edge_count()),
    );
    lines.push(format!(
        "representation: {}",
        representation_words(a.representation.is_frame, a.representation.is_lift)
    ));
    lines.push(format!("loops dropped: {}", if a.loops_dropped { "yes" } else { "no" }));

    let blocking = a.framework_blocking_vertices();
    records.push(Record::new("blocking").push("vertices", csv(blocking.iter())));
    lines.push(format!(
        "blocking vertices: {}",
        if blocking.is_empty() { "none".to_string() } else { csv(blocking.iter()) }
    ));

    let pairs = a.blocking_pairs();
    records.push(Record::new("pairs").push("list", pair_list(&pairs)));
    lines.push(format!(
        "blocking pairs: {}",
        if pairs.is_empty() {
            "none".to_string()
        } else {
            pairs.iter().map(|(x, y)| format!("({x},{y})")).collect::<Vec<_>>().join(" ")
        }
    ));

    match a.fixed_vertices() {
        Ok(fixed) => {
            records.push(Record::new("fixed").push("vertices", csv(fixed.iter())));
            lines.push(format!(
                "fixed vertices: {}",
                if fixed.is_empty() { "none".to_string() } else { csv(fixed.iter()) }
            ));
        }
        Err(e) => {
            records.push(Record::new("fixed").push("skipped", token(&e.to_string())));
            lines.push(format!("fixed vertices: unavailable ({e})"));
        }
    }

    let sets = a.minimal_balancing_sets_mixed(max_balancing);
    lines.push(format!("minimal balancing sets (size <= {max_balancing}): {}", sets.len()));
    for (i, set) in sets.iter().enumerate() {
        records.push(
            Record::new("balancing")
                .push("index", i)
                .push("vertices", csv(set.vertices.iter()))
                .push("edges", edge_labels(&a.h, set.edges)),
        );
        lines.push(format!(
            "  #{i}: vertices {}, edges {}",
            csv(set.vertices.iter()),
            edge_labels(&a.h, set.edges)
        ));
    }

    let violations = a.invariant_violations();
    records.push(Record::new("invariants").push("violations", violations.len()));
    for v in &violations {
        records.push(
            Record::new("violation").push("check", v.check).push("detail", token(&v.detail)),
        );
    }
    if violations.is_empty() {
        lines.push("invariants: ok".to_string());
    } else {
        lines.push(format!("invariants: {} violations", violations.len()));
        for v in &violations {
            lines.push(format!("  {v}"));
        }
    }
    finish(if violations.is_empty() { EXIT_TRUE } else { EXIT_FALSE }, records, lines)
}

// --------------------------------------------------------------- construct

#[derive(Debug)]
struct PartSpec {
    graph: PathBuf,
    x: usize,
    y: usize,
    z: Option<usize>,
}

#[derive(Debug)]
enum Construction {
    Pinch { graph: PathBuf, v1: usize, v2: usize },
    Curl { graph: PathBuf, v: usize },
    FourTwist(Vec<PartSpec>),
    KTwist(Vec<PartSpec>),
    FatTheta(Vec<PartSpec>),
}

impl Construction {
    fn kind(&self) -> &'static str {
        match self {
            Construction::Pinch { .. } => "pinch",
            Construction::Curl { .. } => "curl",
            Construction::FourTwist(_) => "four-twist",
            Construction::KTwist(_) => "k-twist",
            Construction::FatTheta(_) => "fat-theta",
        }
    }

    /// Fat thetas give lift representations; everything else frame ones.
    fn expects_lift(&self) -> bool {
        matches!(self, Construction::FatTheta(_))
    }
}

fn construct(ctx: &Ctx, spec: &[String], out: &Path) -> Result<Report, CliError> {
    let construction = if spec.len() == 1 && !is_construct_kind(&spec[0]) {
        parse_construct_file(Path::new(&spec[0]))?
    } else {
        parse_construct_args(spec, Path::new("."), |msg| CliError::Usage(msg))?
    };
    let (bias, base) = realize(&construction)?;

    let stem = out
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "constructed".to_string());
    let h_path = suffixed(out, ".graph");
    let base_path = suffixed(out, "-base.graph");
    write_file(&h_path, &io::bias_file_text(&stem, &bias))?;
    write_file(&base_path, &io::graph_file_text(&format!("{stem}-base"), &base))?;

    // reload what we wrote and re-verify the advertised representation
    let h_file = io::load_graph(&h_path)?;
    let reread = h_file.bias().map_err(data)?;
    let base_file = io::load_graph(&base_path)?;
    let base_matroid = Matroid::from_graph(&base_file.graph).map_err(data)?;
    let rep = classify_representation(&reread, &base_matroid).map_err(data)?;
    let expected = if construction.expects_lift() { rep.is_lift } else { rep.is_frame };
    let framework = verify_framework(&h_file.graph, &base_matroid);
    if !expected || !framework.valid {
        return Err(CliError::Data(format!(
            "construction output failed re-verification (kind {})",
            construction.kind()
        )));
    }

    let mut records = vec![header("construct", ctx.seed)];
    records.push(
        Record::new("construct")
            .push("kind", construction.kind())
            .push("graph", h_path.display())
            .push("base", base_path.display()),
    );
    records.push(
        Record::new("representation").push("frame", rep.is_frame).push("lift", rep.is_lift),
    );
    records.push(Record::new("reverify").push("valid", true));

    let lines = vec![
        format!("construction: {}", construction.kind()),
        format!(
            "biased graph: {} vertices, {} edges -> {}",
            bias.graph().vertex_count(),
            bias.graph().edge_count(),
            h_path.display()
        ),
        format!(
            "base graph: {} vertices, {} edges -> {}",
            base.vertex_count(),
            base.edge_count(),
            base_path.display()
        ),
        format!("representation: {}", representation_words(rep.is_frame, rep.is_lift)),
        "re-verified against the base cycle matroid: ok".to_string(),
    ];
    finish(EXIT_TRUE, records, lines)
}

fn is_construct_kind(word: &str) -> bool {
    matches!(word, "pinch" | "curl" | "four-twist" | "k-twist" | "fat-theta")
}

/// Parses inline construction arguments: `pinch <graph> <v1> <v2>`,
/// `curl <graph> <v>`, or a part-based kind followed by `<graph> <x> <y> [z]`
/// groups (`z` for the twistings, none for fat thetas).  `err` shapes the
/// complaint (usage for command-line args, data for spec files).
fn parse_construct_args(
    args: &[String],
    base_dir: &Path,
    err: impl Fn(String) -> CliError,
) -> Result<Construction, CliError> {
    let kind = args[0].as_str();
    let rest = &args[1..];
    let int = |tok: &String, what: &str| -> Result<usize, CliError> {
        tok.parse().map_err(|_| err(format!("bad {what} `{tok}`")))
    };
    match kind {
        "pinch" => {
            if rest.len() != 3 {
                return Err(err("pinch takes `<graph-file> <v1> <v2>`".into()));
            }
            Ok(Construction::Pinch {
                graph: base_dir.join(&rest[0]),
                v1: int(&rest[1], "vertex")?,
                v2: int(&rest[2], "vertex")?,
            })
        }
        "curl" => {
            if rest.len() != 2 {
                return Err(err("curl takes `<graph-file> <v>`".into()));
            }
            Ok(Construction::Curl { graph: base_dir.join(&rest[0]), v: int(&rest[1], "vertex")? })
        }
        "four-twist" | "k-twist" | "fat-theta" => {
            let chunk = if kind == "fat-theta" { 3 } else { 4 };
            if rest.is_empty() || rest.len() % chunk != 0 {
                return Err(err(format!(
                    "{kind} takes `<graph-file> <x> <y>{}` groups",
                    if chunk == 4 { " <z>" } else { "" }
                )));
            }
            let mut parts = Vec::new();
            for group in rest.chunks(chunk) {
                parts.push(PartSpec {
                    graph: base_dir.join(&group[0]),
                    x: int(&group[1], "mark")?,
                    y: int(&group[2], "mark")?,
                    z: if chunk == 4 { Some(int(&group[3], "mark")?) } else { None },
                });
            }
            Ok(match kind {
                "four-twist" => Construction::FourTwist(parts),
                "k-twist" => Construction::KTwist(parts),
                _ => Construction::FatTheta(parts),
            })
        }
        other => Err(err(format!(
            "unknown construction `{other}` (pinch, curl, four-twist, k-twist, fat-theta)"
        ))),
    }
}

/// Spec files hold the same arguments split over lines:
///
/// ```text
/// construct <kind> [inline args]
/// part <graph-file> <x> <y> [z]
/// ```
///
/// Part file paths resolve relative to the spec file.
fn parse_construct_file(path: &Path) -> Result<Construction, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Missing(format!("{}: {e}", path.display())))?;
    let base_dir = path.parent().unwrap_or_else(|| Path::new(".")).to_path_buf();
    let mut args: Vec<String> = Vec::new();
    let mut seen_construct = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> =
            raw.split('#').next().unwrap_or("").split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let parse_err =
            |msg: String| CliError::Data(format!("{}:{line}: {msg}", path.display()));
        match tokens[0] {
            "construct" if !seen_construct => {
                if tokens.len() < 2 {
                    return Err(parse_err("expected `construct <kind> [args]`".into()));
                }
                seen_construct = true;
                args.extend(tokens[1..].iter().map(|t| t.to_string()));
            }
            "construct" => return Err(parse_err("more than one construct line".into())),
            "part" if seen_construct => {
                if !(3..=4).contains(&(tokens.len() - 1)) {
                    return Err(parse_err("expected `part <graph-file> <x> <y> [z]`".into()));
                }
                args.extend(tokens[1..].iter().map(|t| t.to_string()));
            }
            other => {
                return Err(parse_err(format!("unknown directive `{other}`")));
            }
        }
    }
    if !seen_construct {
        return Err(CliError::Data(format!(
            "{}: missing `construct <kind>` line",
            path.display()
        )));
    }
    parse_construct_args(&args, &base_dir, |msg| {
        CliError::Data(format!("{}: {msg}", path.display()))
    })
}

fn realize(c: &Construction) -> Result<(BiasedGraph, Multigraph), CliError> {
    let load = |p: &Path| -> Result<Multigraph, CliError> { Ok(io::load_graph(p)?.graph) };
    match c {
        Construction::Pinch { graph, v1, v2 } => pinch(load(graph)?, *v1, *v2).map_err(data),
        Construction::Curl { graph, v } => {
            let g = load(graph)?;
            let base = g.clone();
            Ok((simple_curling(g, *v).map_err(data)?, base))
        }
        Construction::FourTwist(parts) => four_twisting(twist_parts(parts, true)?).map_err(data),
        Construction::KTwist(parts) => {
            consecutive_twisting(twist_parts(parts, true)?).map_err(data)
        }
        Construction::FatTheta(parts) => fat_theta(twist_parts(parts, false)?).map_err(data),
    }
}

fn twist_parts(parts: &[PartSpec], needs_z: bool) -> Result<Vec<TwistPart>, CliError> {
    let mut out = Vec::with_capacity(parts.len());
    for (i, spec) in parts.iter().enumerate() {
        let graph = io::load_graph(&spec.graph)?.graph;
        out.push(match (needs_z, spec.z) {
            (true, Some(z)) => TwistPart::marked3(graph, spec.x, spec.y, z),
            (true, None) => {
                return Err(CliError::Data(format!("part {i} needs a third mark `z`")))
            }
            (false, None) => TwistPart::marked(graph, spec.x, spec.y),
            (false, Some(_)) => {
                return Err(CliError::Data(format!("part {i} takes only two marks `x y`")))
            }
        });
    }
    Ok(out)
}

// ------------------------------------------------------------------- minor

fn minor(ctx: &Ctx, base: &[String], pattern: &[String]) -> Result<Report, CliError> {
    let (bname, b) = matroid_from_args(base)?;
    let (pname, p) = matroid_from_args(pattern)?;
    let mut records = vec![header("minor", ctx.seed)];
    let mut lines = vec![
        format!("base: {bname} (rank {}, {} elements)", b.rank(), b.ground_size()),
        format!("pattern: {pname} (rank {}, {} elements)", p.rank(), p.ground_size()),
    ];
    match b.find_minor(&p) {
        Some((contract, delete)) => {
            if !b.minor(contract, delete).is_isomorphic(&p) {
                return Err(CliError::Data("minor witness failed re-verification".into()));
            }
            records.push(
                Record::new("minor")
                    .push("found", true)
                    .push("contract", mask_labels(&b, contract))
                    .push("delete", mask_labels(&b, delete)),
            );
            lines.push("minor: found".to_string());
            lines.push(format!("contract: {}", mask_labels(&b, contract)));
            lines.push(format!("delete: {}", mask_labels(&b, delete)));
            finish(EXIT_TRUE, records, lines)
        }
        None => {
            records.push(Record::new("minor").push("found", false));
            lines.push("minor: none".to_string());
            finish(EXIT_FALSE, records, lines)
        }
    }
}

// --------------------------------------------------------------- reproduce

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

fn verdict_name(v: &QgVerdict) -> &'static str {
    match v {
        QgVerdict::QuasiGraphic(_) => "quasi-graphic",
        QgVerdict::NotQuasiGraphic => "not-quasi-graphic",
        QgVerdict::Unknown => "unknown",
    }
}

fn reproduce(ctx: &Ctx, target: Target) -> Result<Report, CliError> {
    let opts = ctx.options(false, true);
    let (name, checks) = match target {
        Target::Thm31 => ("thm-3.1", thm_3_1(&opts)?),
        Target::Thm32 => ("thm-3.2", thm_3_2(&opts)?),
        Target::Thm33Small => ("thm-3.3-small", thm_3_3_small(&opts)?),
        Target::WheelCount => ("wheel-count", wheel_count(&opts)?),
    };
    let all_pass = checks.iter().all(|c| c.pass);
    let mut records = vec![header("reproduce", ctx.seed)];
    records.push(Record::new("target").push("name", name).push("pass", all_pass));
    let mut lines = vec![format!("target: {name}")];
    for c in &checks {
        records.push(
            Record::new("check")
                .push("name", c.name)
                .push("pass", c.pass)
                .push("detail", token(&c.detail)),
        );
        lines.push(format!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail));
    }
    lines.push(format!("result: {}", if all_pass { "PASS" } else { "FAIL" }));
    finish(if all_pass { EXIT_TRUE } else { EXIT_FALSE }, records, lines)
}

/// Frameworks of U_{3,6} all sit on the doubled triangle; U_{3,7} is an
/// excluded minor.
fn thm_3_1(opts: &EnumOptions) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let u36 = Matroid::uniform(3, 6);
    let result = enumerate_frameworks(&u36, opts).map_err(data)?;
    let doubled = Multigraph::complete(3).k_multiply(2).expect("doubling a triangle");
    let all_doubled = result.classes.iter().all(|c| c.graph.shape_isomorphic(&doubled));
    checks.push(check(
        "u36-frameworks-doubled-triangle",
        !result.classes.is_empty() && !result.bounded && all_doubled,
        format!("classes={} doubled-triangle={all_doubled}", result.classes.len()),
    ));

    let u37 = Matroid::uniform(3, 7);
    let verdict = decide_quasi_graphic(&u37, opts).map_err(data)?;
    checks.push(check(
        "u37-not-quasi-graphic",
        verdict.decided() == Some(false),
        format!("verdict={}", verdict_name(&verdict)),
    ));

    let exclusion = is_excluded_minor(&u37, opts).map_err(data)?;
    checks.push(check(
        "u37-excluded-minor",
        exclusion.excluded == Some(true),
        format!("minors-checked={}", exclusion.minors.len()),
    ));
    Ok(checks)
}

/// The doubled 4-cycle with one copy of each of two opposite sides removed:
/// the second underlying graph for U_{4,6} frameworks.
fn k_graph() -> Multigraph {
    let mut g = Multigraph::new(4);
    for (label, u, v) in
        [("a", 0, 1), ("b1", 1, 2), ("b2", 1, 2), ("c", 2, 3), ("d1", 3, 0), ("d2", 3, 0)]
    {
        g.add_edge(label, u, v).expect("fixed edge list");
    }
    g
}

/// Frameworks of U_{4,6} sit on K_4 or on the graph K; U_{4,7} is an
/// excluded minor.
fn thm_3_2(opts: &EnumOptions) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let u46 = Matroid::uniform(4, 6);
    let result = enumerate_frameworks(&u46, opts).map_err(data)?;
    let k4 = Multigraph::complete(4);
    let k = k_graph();
    let (mut on_k4, mut on_k, mut other) = (0usize, 0usize, 0usize);
    for class in &result.classes {
        if class.graph.shape_isomorphic(&k4) {
            on_k4 += 1;
        } else if class.graph.shape_isomorphic(&k) {
            on_k += 1;
        } else {
            other += 1;
        }
    }
    checks.push(check(
        "u46-frameworks-k4-or-k",
        !result.bounded && on_k4 > 0 && on_k > 0 && other == 0,
        format!("classes={} k4={on_k4} k={on_k} other={other}", result.classes.len()),
    ));

    let u47 = Matroid::uniform(4, 7);
    let verdict = decide_quasi_graphic(&u47, opts).map_err(data)?;
    checks.push(check(
        "u47-not-quasi-graphic",
        verdict.decided() == Some(false),
        format!("verdict={}", verdict_name(&verdict)),
    ));

    let exclusion = is_excluded_minor(&u47, opts).map_err(data)?;
    checks.push(check(
        "u47-excluded-minor",
        exclusion.excluded == Some(true),
        format!("minors-checked={}", exclusion.minors.len()),
    ));
    Ok(checks)
}

/// Excluded-minor plus connectivity facts for both uniform instances.
fn thm_3_3_small(opts: &EnumOptions) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let u37 = Matroid::uniform(3, 7);
    let u47 = Matroid::uniform(4, 7);

    let ex37 = is_excluded_minor(&u37, opts).map_err(data)?;
    checks.push(check(
        "u37-excluded-minor",
        ex37.excluded == Some(true),
        format!("minors-checked={}", ex37.minors.len()),
    ));
    let ex47 = is_excluded_minor(&u47, opts).map_err(data)?;
    checks.push(check(
        "u47-excluded-minor",
        ex47.excluded == Some(true),
        format!("minors-checked={}", ex47.minors.len()),
    ));

    for (name, m) in [("u37-connectivity", &u37), ("u47-connectivity", &u47)] {
        let report = m.separation_report();
        let three = m.is_k_connected(3);
        let tutte = report
            .tutte_connectivity
            .map(|t| t.to_string())
            .unwrap_or_else(|| "none".to_string());
        checks.push(check(
            name,
            three && report.tutte_connectivity.is_none(),
            format!("three-connected={three} tutte={tutte}"),
        ));
    }
    Ok(checks)
}

/// The rank-4 wheel admits at least 2^4 inequivalent frameworks.
fn wheel_count(opts: &EnumOptions) -> Result<Vec<Check>, CliError> {
    let wheel = Multigraph::wheel(4);
    let m = Matroid::from_graph(&wheel).map_err(data)?;
    let result = enumerate_frameworks(&m, opts).map_err(data)?;
    Ok(vec![check(
        "wheel-4-classes",
        result.classes.len() >= 16 && !result.bounded,
        format!("classes={} bounded={}", result.classes.len(), result.bounded),
    )])
}
