//! The `coxtile` command line, callable in-process through [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use coxtile::cases::{partition_relations, run_case, Case};
use coxtile::config::Config;
use coxtile::coxeter::{CoxeterGroup, CoxeterType, Family};
use coxtile::embeddings::{
    embed_word, parse_sigma_consistent, table_row, verify_induced_matrix, AdmissiblePartition,
    TableRow,
};
use coxtile::error::Error;
use coxtile::parse::{parse_element, parse_relations};
use coxtile::render::{render_tiling, Palette, RenderConfig};
use coxtile::tilings::{kind_counts, subtiling, tile_word, DGeometry, EdgeBasis, Tiling};
use coxtile::words::{count_reduced, enumerate_reduced, partition_words, RelationSet, Word};

/// Environment variable naming the default config file.
pub const CONFIG_ENV: &str = "COXTILE_CONFIG";

#[derive(Parser, Debug)]
#[command(
    name = "coxtile",
    version,
    about = "Reduced words, commutation classes and Elnitsky tilings"
)]
struct Cli {
    /// key = value config file (default: $COXTILE_CONFIG)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_name = "N")]
    max_group_order: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    max_words: Option<u64>,
    /// Worker threads for exhaustive sweeps
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Minimum edge angle from the horizontal in strict type D mode
    #[arg(long, global = true, value_name = "DEG")]
    steepness_degrees: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe a host group or a table row
    Info(Target),
    /// Reduced words of an element
    #[command(subcommand)]
    Words(WordsCommand),
    /// Equivalence classes of reduced words (same as `words classes`)
    Classes(ClassArgs),
    /// Admissible partitions: blocks, induced matrix, word maps
    Embed(EmbedArgs),
    /// Tiling of Y(w) for a reduced host word
    Tile(TileArgs),
    /// Subtiling for a reduced word of the embedded group
    Subtile(SubtileArgs),
    /// Word/tiling bijection suites
    Verify(VerifyArgs),
    /// Write an SVG for a host word or an embedded word
    Render(RenderArgs),
}

#[derive(Args, Debug)]
struct Target {
    #[arg(long, conflicts_with = "row", required_unless_present = "row")]
    host: Option<CoxeterType>,
    #[arg(long)]
    row: Option<TableRow>,
}

#[derive(Subcommand, Debug)]
enum WordsCommand {
    /// List (or count) the reduced words
    Enumerate(ElementArgs),
    /// Partition the reduced words into classes
    Classes(ClassArgs),
}

#[derive(Args, Debug)]
struct ElementArgs {
    #[arg(long)]
    host: CoxeterType,
    /// One-line form (`3 1 2`, signed for type D) or a word `s1 s2`
    #[arg(long, allow_hyphen_values = true)]
    element: String,
    #[arg(long)]
    count_only: bool,
}

#[derive(Args, Debug)]
struct ClassArgs {
    #[command(flatten)]
    element: ElementArgs,
    /// elnitsky | all-commuting | none | custom:1-3,2-4
    #[arg(long, default_value = "elnitsky")]
    relations: String,
}

#[derive(Args, Debug)]
struct EmbedArgs {
    #[arg(long)]
    row: TableRow,
    /// Word over T to map into the host
    #[arg(long)]
    word: Option<String>,
    /// Host word to factor into blocks
    #[arg(long)]
    sword: Option<String>,
    /// Check the induced matrix against the target type
    #[arg(long)]
    verify_matrix: bool,
}

#[derive(Args, Debug)]
struct DrawArgs {
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Regular polygon border instead of strict angles (type D)
    #[arg(long)]
    regular: bool,
    #[arg(long, default_value = "default")]
    palette: Palette,
    #[arg(long)]
    labels: bool,
}

#[derive(Args, Debug)]
struct TileArgs {
    #[arg(long)]
    host: CoxeterType,
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    #[command(flatten)]
    draw: DrawArgs,
}

#[derive(Args, Debug)]
struct SubtileArgs {
    #[arg(long)]
    row: TableRow,
    #[arg(long)]
    xword: String,
    #[command(flatten)]
    draw: DrawArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Case name, or `all`
    #[arg(long)]
    case: String,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[arg(
        long,
        conflicts_with = "row",
        required_unless_present = "row",
        requires = "word"
    )]
    host: Option<CoxeterType>,
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,
    #[arg(long, requires = "xword")]
    row: Option<TableRow>,
    #[arg(long)]
    xword: Option<String>,
    #[command(flatten)]
    draw: DrawArgs,
}

#[derive(Debug)]
enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A check came out false or a limit was hit: exit 1.
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Failed(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line `args` (including the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = load_config(&cli).and_then(|config| dispatch(cli.command, &config, out));
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn load_config(cli: &Cli) -> std::result::Result<Config, Failure> {
    let path = cli
        .config
        .clone()
        .or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    let mut config = match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", p.display())))?;
            Config::parse(&text)?
        }
        None => Config::default(),
    };
    if let Some(v) = cli.max_group_order {
        config.set("max_group_order", &v.to_string())?;
    }
    if let Some(v) = cli.max_words {
        config.set("max_words", &v.to_string())?;
    }
    if let Some(v) = cli.jobs {
        config.set("jobs", &v.to_string())?;
    }
    if let Some(v) = cli.steepness_degrees {
        config.set("steepness_degrees", &v.to_string())?;
    }
    Ok(config)
}

fn dispatch(command: Command, config: &Config, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Info(t) => info(t, config, out),
        Command::Words(WordsCommand::Enumerate(a)) => enumerate(a, config, out),
        Command::Words(WordsCommand::Classes(a)) | Command::Classes(a) => classes(a, config, out),
        Command::Embed(a) => embed(a, config, out),
        Command::Tile(a) => {
            let group = CoxeterGroup::host(a.host, config)?;
            let word = parse_word(&a.word)?;
            let t = tile_word(&group, &word)?;
            report_tiling(&t, &a.draw, config, out)
        }
        Command::Subtile(a) => {
            let p = table_row(a.row, config)?;
            let t = subtiling(&p, &parse_word(&a.xword)?)?;
            report_tiling(&t, &a.draw, config, out)
        }
        Command::Verify(a) => verify(a, config, out),
        Command::Render(a) => {
            let t = match (a.host, a.row) {
                (Some(host), _) => {
                    let group = CoxeterGroup::host(host, config)?;
                    tile_word(&group, &parse_word(a.word.as_deref().unwrap_or(""))?)?
                }
                (None, Some(row)) => {
                    let p = table_row(row, config)?;
                    subtiling(&p, &parse_word(a.xword.as_deref().unwrap_or(""))?)?
                }
                (None, None) => return Err(Failure::Usage("render needs --host or --row".into())),
            };
            let svg = svg_for(&t, &a.draw, config)?;
            match &a.draw.svg {
                Some(path) if path != Path::new("-") => write_file(path, &svg),
                _ => Ok(out.write_all(svg.as_bytes())?),
            }
        }
    }
}

fn parse_word(text: &str) -> std::result::Result<Word, Failure> {
    Ok(text.parse::<Word>()?)
}

fn info(t: Target, config: &Config, out: &mut dyn Write) -> Outcome {
    if let Some(row) = t.row {
        let p = table_row(row, config)?;
        return describe_partition(&p, out);
    }
    let host = t.host.expect("clap enforces --host or --row");
    let g = CoxeterGroup::host(host, config)?;
    let sys = &g.system;
    writeln!(
        out,
        "type={} rank={} order={} longest_length={}",
        host,
        sys.rank(),
        g.table.len(),
        g.table.max_length()
    )?;
    writeln!(out, "matrix:\n{}", sys.matrix())?;
    for i in 0..sys.rank() {
        writeln!(out, "s{} = {}", i + 1, sys.format_element(sys.generator(i)))?;
    }
    for (native, node) in sys.relabeled_nodes() {
        writeln!(out, "s{} is diagram node {}", native + 1, node + 1)?;
    }
    writeln!(out, "w0 = {}", sys.format_element(&g.longest()))?;
    writeln!(out, "relations={}", RelationSet::elnitsky(sys))?;
    Ok(())
}

fn describe_partition(p: &AdmissiblePartition, out: &mut dyn Write) -> Outcome {
    writeln!(
        out,
        "row={} host={} x={}",
        p.row(),
        p.row().host_type(),
        p.x_type()
    )?;
    for (t, block) in p.blocks().iter().enumerate() {
        let gens: Vec<String> = block.iter().map(|g| format!("s{}", g + 1)).collect();
        writeln!(
            out,
            "t{} = {{{}}} -> {}",
            t + 1,
            gens.join(","),
            p.expansion(t)
        )?;
    }
    writeln!(out, "matrix:\n{}", p.x().system.matrix())?;
    writeln!(out, "K={}", partition_relations(p))?;
    Ok(())
}

fn element_of(
    a: &ElementArgs,
    config: &Config,
) -> std::result::Result<(CoxeterGroup, coxtile::coxeter::GroupElement), Failure> {
    let group = CoxeterGroup::host(a.host, config)?;
    let e = parse_element(&group.system, &a.element)?;
    if group.table.index_of(&e).is_none() {
        return Err(Error::NotInGroup.into());
    }
    Ok((group, e))
}

fn enumerate(a: ElementArgs, config: &Config, out: &mut dyn Write) -> Outcome {
    let (group, e) = element_of(&a, config)?;
    if a.count_only {
        writeln!(out, "{}", count_reduced(&group, &e)?)?;
        return Ok(());
    }
    for w in enumerate_reduced(&group, &e, config)? {
        writeln!(out, "{w}")?;
    }
    Ok(())
}

fn classes(a: ClassArgs, config: &Config, out: &mut dyn Write) -> Outcome {
    let (group, e) = element_of(&a.element, config)?;
    let rels = parse_relations(&group.system, &a.relations)?;
    let words = enumerate_reduced(&group, &e, config)?;
    let classes = partition_words(&group.system, &words, &rels);
    writeln!(
        out,
        "words={} classes={} relations={}",
        words.len(),
        classes.len(),
        rels
    )?;
    if !a.element.count_only {
        for (k, class) in classes.iter().enumerate() {
            let ws: Vec<String> = class.iter().map(Word::to_string).collect();
            writeln!(out, "class {}: {}", k + 1, ws.join(" | "))?;
        }
    }
    Ok(())
}

fn embed(a: EmbedArgs, config: &Config, out: &mut dyn Write) -> Outcome {
    let p = table_row(a.row, config)?;
    let mut any = false;
    if a.verify_matrix {
        any = true;
        let m = verify_induced_matrix(&p)?;
        writeln!(out, "matrix:\n{m}")?;
        writeln!(out, "ok=true")?;
    }
    if let Some(w) = &a.word {
        any = true;
        writeln!(out, "{}", embed_word(&p, &parse_word(w)?)?)?;
    }
    if let Some(w) = &a.sword {
        any = true;
        match parse_sigma_consistent(&p, &parse_word(w)?)? {
            Some(parse) => writeln!(out, "{parse}\nx_word={}", parse.x_word())?,
            None => return Err(Failure::Failed("word is not sigma-consistent".into())),
        }
    }
    if !any {
        describe_partition(&p, out)?;
    }
    Ok(())
}

fn basis_for(
    t: &Tiling,
    regular: bool,
    config: &Config,
) -> std::result::Result<EdgeBasis, Failure> {
    let n = t.host.rank;
    Ok(match t.host.family {
        Family::A => EdgeBasis::regular_a(n + 1)?,
        Family::D if regular => EdgeBasis::d(n, DGeometry::Regular)?,
        Family::D => EdgeBasis::d(
            n,
            DGeometry::Strict {
                threshold: config.steepness,
            },
        )?,
        _ => return Err(Error::UnsupportedType(t.host).into()),
    })
}

fn svg_for(t: &Tiling, draw: &DrawArgs, config: &Config) -> std::result::Result<String, Failure> {
    let basis = basis_for(t, draw.regular, config)?;
    let rc = RenderConfig {
        palette: draw.palette,
        show_labels: draw.labels,
        regular_mode: draw.regular,
        ..RenderConfig::default()
    };
    Ok(render_tiling(t, &basis, &rc)?)
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text)
        .map_err(|e| Failure::Failed(format!("cannot write {}: {e}", path.display())))
}

fn report_tiling(t: &Tiling, draw: &DrawArgs, config: &Config, out: &mut dyn Write) -> Outcome {
    let counts: Vec<String> = kind_counts(t)
        .iter()
        .map(|(k, n)| format!("{k}={n}"))
        .collect();
    writeln!(
        out,
        "host={} border={} tiles={} {}",
        t.host,
        border_text(t),
        t.len(),
        counts.join(" ")
    )?;
    out.write_all(t.dump().as_bytes())?;
    if let Some(path) = &draw.svg {
        write_file(path, &svg_for(t, draw, config)?)?;
    }
    Ok(())
}

fn border_text(t: &Tiling) -> String {
    t.border()
        .iter()
        .map(|&l| t.symbols.symbol(l).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn verify(a: VerifyArgs, config: &Config, out: &mut dyn Write) -> Outcome {
    let cases: Vec<Case> = if a.case == "all" {
        Case::ALL.to_vec()
    } else {
        vec![a.case.parse()?]
    };
    let mut all_ok = true;
    for case in cases {
        let r = run_case(case, config)?;
        writeln!(out, "{r}")?;
        all_ok &= r.report.ok;
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Failed("bijection check failed".into()))
    }
}
