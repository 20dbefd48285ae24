use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tiso_core::affine::{dta_words_from_greys, BorelAtlas};
use tiso_core::graph::{build_graph, class_json, node_label, node_name, GraphMode};
use tiso_core::orbit::{act, approx_decompose, classes_at_degree, enumerate_class, Anchored};
use tiso_core::reflect::{corners, edge_flags, pseudo_corners};
use tiso_core::{verify, BorderWord, Diagram, Error, OddRoot, OrbitClass, RectShape, Shuffle};

#[derive(Parser, Debug)]
#[command(name = "tiso", version, about = "Odd reflections on Young diagrams in an n x m rectangle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Show a diagram as partition, border word, shuffle and dual.
    Convert(Single),
    /// List outer and inner corners and pseudo-corners.
    Corners(Single),
    /// Act on the class [λ, k] by a signed odd root.
    Act(ActArgs),
    /// Enumerate the class of (λ, k).
    Class(Single),
    /// List the classes of each degree in a window.
    Degree(WindowArgs),
    /// Emit the hasse or cayley graph on a degree window.
    Graph(GraphArgs),
    /// Global simple roots of the Borel of (λ, k), or words from grey nodes.
    Borel(BorelArgs),
    /// Run the property suite and print a pass/fail table.
    Verify(WindowArgs),
}

#[derive(Args, Debug, Clone)]
struct ShapeArgs {
    /// Number of rows.
    #[arg(long)]
    n: usize,
    /// Number of columns.
    #[arg(long)]
    m: usize,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct Encoding {
    /// Partition, largest part first, e.g. 3,1.
    #[arg(long, allow_hyphen_values = true)]
    partition: Option<String>,
    /// Border word in r and d, e.g. rdrrd.
    #[arg(long)]
    word: Option<String>,
    /// Shuffle in one-line notation, e.g. 1',1,2',3',2.
    #[arg(long)]
    shuffle: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct Single {
    #[command(flatten)]
    shape: ShapeArgs,
    #[command(flatten)]
    input: Encoding,
    /// Rotation number.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    k: i64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct ActArgs {
    #[command(flatten)]
    single: Single,
    /// Signed odd root, e.g. +e2-d1 or -e1-d3.
    #[arg(long, allow_hyphen_values = true)]
    root: String,
}

#[derive(Args, Debug)]
struct WindowArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Degree window lo:hi (inclusive); defaults to 0:mn.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    deg: Option<(i64, i64)>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[command(flatten)]
    window: WindowArgs,
    #[arg(long, value_enum, default_value_t = Mode::Hasse)]
    mode: Mode,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Mode {
    Hasse,
    Cayley,
}

#[derive(Args, Debug)]
struct BorelArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, allow_hyphen_values = true)]
    partition: Option<String>,
    #[arg(long, conflicts_with = "partition")]
    word: Option<String>,
    #[arg(long, conflicts_with_all = ["partition", "word"])]
    shuffle: Option<String>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    k: i64,
    /// Grey node indices, e.g. 0,2; prints the words read off the cycle.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["partition", "word", "shuffle"])]
    greys: Option<Vec<usize>>,
    #[command(flatten)]
    output: Output,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: i64 = a.trim().parse().map_err(|e| format!("lo: {e}"))?;
    let hi: i64 = b.trim().parse().map_err(|e| format!("hi: {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}:{hi}"));
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_domain() {
            Failure::Domain(e)
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = Result<String, Failure>;

fn shape_of(a: &ShapeArgs) -> Result<RectShape, Failure> {
    Ok(RectShape::new(a.n, a.m)?)
}

fn diagram_of(shape: &RectShape, e: &Encoding) -> Result<Diagram, Failure> {
    decode(shape, e.partition.as_deref(), e.word.as_deref(), e.shuffle.as_deref())
}

fn decode(shape: &RectShape, p: Option<&str>, w: Option<&str>, s: Option<&str>) -> Result<Diagram, Failure> {
    match (p, w, s) {
        (Some(p), None, None) => Ok(Diagram::parse(shape, p)?),
        (None, Some(w), None) => Ok(BorderWord::parse(shape, w)?.to_diagram(shape)),
        (None, None, Some(s)) => Ok(Shuffle::parse(shape, s)?.to_diagram(shape)),
        _ => Err(Failure::Usage("give exactly one of --partition, --word, --shuffle".into())),
    }
}

fn no_dot(o: &Output) -> Result<(), Failure> {
    if o.format == Format::Dot {
        return Err(Failure::Usage("--format dot is only valid for the graph subcommand".into()));
    }
    Ok(())
}

fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn join<T: ToString>(xs: &[T]) -> String {
    if xs.is_empty() {
        "-".to_string()
    } else {
        xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    }
}

fn window(shape: &RectShape, deg: Option<(i64, i64)>) -> (i64, i64) {
    deg.unwrap_or((0, (shape.n() * shape.m()) as i64))
}

fn convert(a: &Single) -> Outcome {
    no_dot(&a.output)?;
    let shape = shape_of(&a.shape)?;
    let d = diagram_of(&shape, &a.input)?;
    let dual = d.dual(&shape);
    let sigma = d.to_shuffle(&shape);
    if a.output.format == Format::Json {
        return Ok(render_json(&json!({
            "partition": d.parts(),
            "word": d.to_word(&shape).to_string(),
            "shuffle": sigma.to_string(),
            "dual": dual,
            "size": d.size(),
            "simple_roots": sigma.simple_roots(&shape).roots.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "partition     {d}");
    let _ = writeln!(out, "word          {}", d.to_word(&shape));
    let _ = writeln!(out, "shuffle       {sigma}");
    let _ = writeln!(out, "dual          {}", dual.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    let _ = writeln!(out, "size          {}", d.size());
    let _ = writeln!(out, "simple roots  {}", sigma.simple_roots(&shape));
    Ok(out)
}

fn corners_cmd(a: &Single) -> Outcome {
    no_dot(&a.output)?;
    let shape = shape_of(&a.shape)?;
    let d = diagram_of(&shape, &a.input)?;
    let c = corners(&shape, &d);
    let p = pseudo_corners(&shape, &d);
    let f = edge_flags(&shape, &d);
    if a.output.format == Format::Json {
        let roots = |v: &[OddRoot]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        return Ok(render_json(&json!({
            "partition": d.parts(),
            "outer": roots(&c.outer),
            "inner": roots(&c.inner),
            "pseudo": {"outer": p.outer, "inner": p.inner},
            "edges": {"-r": f.row_minus, "+r": f.row_plus, "-c": f.col_minus, "+c": f.col_plus},
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "outer   {}", join(&c.outer));
    let _ = writeln!(out, "inner   {}", join(&c.inner));
    let _ = writeln!(out, "pseudo  outer={} inner={}", p.outer, p.inner);
    let _ = writeln!(out, "edges   -r={} +r={} -c={} +c={}", f.row_minus, f.row_plus, f.col_minus, f.col_plus);
    Ok(out)
}

fn class_text(shape: &RectShape, c: &OrbitClass) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "class {}  degree {}  label {}", node_name(c), c.degree(shape), node_label(shape, c));
    for r in c.reps() {
        let _ = writeln!(out, "  {:<12} {:<10} k={}", r.item.to_string(), r.item.to_word(shape).to_string(), r.k);
    }
    out
}

fn act_cmd(a: &ActArgs) -> Outcome {
    let s = &a.single;
    no_dot(&s.output)?;
    let shape = shape_of(&s.shape)?;
    let d = diagram_of(&shape, &s.input)?;
    let root: OddRoot = a.root.parse()?;
    let from = enumerate_class(&shape, &Anchored::new(d, s.k))?;
    let to = act(&shape, &from, root)?;
    if s.output.format == Format::Json {
        return Ok(render_json(&json!({
            "root": root.to_string(),
            "src": class_json(&shape, &from),
            "dst": class_json(&shape, &to),
        })));
    }
    Ok(format!("{} --{}--> {}\n{}", node_label(&shape, &from), root, node_label(&shape, &to), class_text(&shape, &to)))
}

fn class_cmd(a: &Single) -> Outcome {
    no_dot(&a.output)?;
    let shape = shape_of(&a.shape)?;
    let d = diagram_of(&shape, &a.input)?;
    let c = enumerate_class(&shape, &Anchored::new(d, a.k))?;
    let parts = approx_decompose(&shape, &c)?;
    if a.output.format == Format::Json {
        let mut v = serde_json::to_value(class_json(&shape, &c)).expect("serializes");
        v["row_parts"] = json!(parts
            .iter()
            .map(|p| p.iter().map(|r| json!({"partition": r.item.parts(), "k": r.k})).collect::<Vec<_>>())
            .collect::<Vec<_>>());
        return Ok(render_json(&v));
    }
    let mut out = class_text(&shape, &c);
    for (j, p) in parts.iter().enumerate() {
        let members: Vec<String> = p.iter().map(|r| format!("({})^{}", r.item, r.k)).collect();
        let _ = writeln!(out, "row part {j}: {}", members.join(" "));
    }
    Ok(out)
}

fn degree_cmd(a: &WindowArgs) -> Outcome {
    no_dot(&a.output)?;
    let shape = shape_of(&a.shape)?;
    let (lo, hi) = window(&shape, a.deg);
    let mut rows = Vec::new();
    for d in lo..=hi {
        rows.push((d, classes_at_degree(&shape, d)?));
    }
    if a.output.format == Format::Json {
        let v: Vec<Value> = rows
            .iter()
            .map(
                |(d, cs)| json!({"degree": d, "classes": cs.iter().map(|c| class_json(&shape, c)).collect::<Vec<_>>()}),
            )
            .collect();
        return Ok(render_json(&json!({"n": shape.n(), "m": shape.m(), "degrees": v})));
    }
    let mut out = String::new();
    for (d, cs) in rows {
        let labels: Vec<String> = cs.iter().map(|c| node_label(&shape, c)).collect();
        let _ = writeln!(out, "degree {d}: {}", labels.join(" "));
    }
    Ok(out)
}

fn graph_cmd(a: &GraphArgs) -> Outcome {
    let shape = shape_of(&a.window.shape)?;
    let (lo, hi) = window(&shape, a.window.deg);
    let mode = match a.mode {
        Mode::Hasse => GraphMode::Hasse,
        Mode::Cayley => GraphMode::Cayley,
    };
    let g = build_graph(&shape, lo..=hi, mode)?;
    Ok(match a.window.output.format {
        Format::Text => g.to_text(),
        Format::Json => render_json(&serde_json::to_value(g.to_json()).expect("serializes")),
        Format::Dot => g.to_dot(),
    })
}

fn borel_cmd(a: &BorelArgs) -> Outcome {
    no_dot(&a.output)?;
    let shape = shape_of(&a.shape)?;
    if let Some(greys) = &a.greys {
        let words = dta_words_from_greys(&shape, greys)?;
        let words: Vec<String> = words.iter().map(ToString::to_string).collect();
        if a.output.format == Format::Json {
            return Ok(render_json(&json!({"greys": greys, "words": words})));
        }
        let mut out = String::new();
        for (i, w) in words.iter().enumerate() {
            let _ = writeln!(out, "w{i} {w}");
        }
        return Ok(out);
    }
    let d = if a.partition.is_none() && a.word.is_none() && a.shuffle.is_none() {
        shape.empty()
    } else {
        decode(&shape, a.partition.as_deref(), a.word.as_deref(), a.shuffle.as_deref())?
    };
    let pair = Anchored::new(d, a.k);
    let degree = pair.degree(&shape);
    let atlas = BorelAtlas::build(&shape, degree..=degree)?;
    let b = atlas.finite_borel(&pair)?;
    if a.output.format == Format::Json {
        return Ok(render_json(&serde_json::to_value(b.to_json(&shape)).expect("serializes")));
    }
    let mut out = String::new();
    let _ = writeln!(out, "local    ({}, {})  shuffle {}", pair.item, pair.k, b.sigma);
    let _ = writeln!(out, "deleted  node {}: {}", b.deleted, b.dk.nodes()[b.deleted]);
    let _ = writeln!(out, "simple roots:");
    for node in b.simple_nodes() {
        let r = &b.dk.nodes()[node];
        let _ = writeln!(out, "  node {node:<3} {:<5} {r}", if r.is_isotropic() { "grey" } else { "white" });
    }
    Ok(out)
}

fn verify_cmd(a: &WindowArgs) -> Result<(String, bool), Failure> {
    no_dot(&a.output)?;
    let shape = shape_of(&a.shape)?;
    let (lo, hi) = window(&shape, a.deg);
    let report = verify::run_all(&shape, lo..=hi)?;
    let ok = report.passed();
    if a.output.format == Format::Json {
        let v: Vec<Value> = report
            .results
            .iter()
            .map(
                |r| json!({"property": r.name, "passed": r.passed(), "checked": r.checked, "violations": r.violations}),
            )
            .collect();
        return Ok((render_json(&json!({"n": shape.n(), "m": shape.m(), "passed": ok, "properties": v})), ok));
    }
    let verdict = if ok { "all properties hold" } else { "some properties FAIL" };
    Ok((format!("{report}{}x{} degrees {lo}..={hi}: {verdict}\n", shape.n(), shape.m()), ok))
}

fn emit(text: String, out: Option<&PathBuf>) -> Result<(), Failure> {
    let text = if text.ends_with('\n') { text } else { text + "\n" };
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let (text, ok, out) = match &cli.command {
        Command::Convert(a) => (convert(a)?, true, &a.output.out),
        Command::Corners(a) => (corners_cmd(a)?, true, &a.output.out),
        Command::Act(a) => (act_cmd(a)?, true, &a.single.output.out),
        Command::Class(a) => (class_cmd(a)?, true, &a.output.out),
        Command::Degree(a) => (degree_cmd(a)?, true, &a.output.out),
        Command::Graph(a) => (graph_cmd(a)?, true, &a.window.output.out),
        Command::Borel(a) => (borel_cmd(a)?, true, &a.output.out),
        Command::Verify(a) => {
            let (t, ok) = verify_cmd(a)?;
            (t, ok, &a.output.out)
        }
    };
    emit(text, out.as_ref())?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("io error: {msg}");
            ExitCode::from(1)
        }
    }
}
