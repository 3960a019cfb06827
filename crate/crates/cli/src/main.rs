use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use scsplit::constructors::Construction;
use scsplit::degree_seq::{is_forcibly_sc, realization_closure};
use scsplit::enumeration::count_table;
use scsplit::iso::find_antimorphism;
use scsplit::oracle::{generate_sc, Filter};
use scsplit::partitions::{
    any_diamond, diamond_from_antimorphism, is_self_complementary_partition, rectangle_partition,
    FourPartition,
};
use scsplit::recognition::{pseudo_split_partition, split_partition};
use scsplit::{graph6, DegreeSequence, Graph, Permutation, PseudoSplitPartition, SplitPartition};

const DEFAULT_ORDERS: [usize; 10] = [4, 5, 8, 9, 12, 13, 16, 17, 20, 21];

#[derive(Parser)]
#[command(
    name = "scsplit",
    version,
    about = "Self-complementary split and pseudo-split graphs"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Read input from this file instead of stdin.
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of SC split / pseudo-split graphs of each order.
    Count {
        /// Orders, comma or space separated [default: 4,5,8,9,...,20,21].
        #[arg(value_delimiter = ',')]
        orders: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Family::Both)]
        family: Family,
    },
    /// Analyze graphs read as graph6 lines.
    Check {
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = CheckKind::all())]
        checks: Vec<CheckKind>,
    },
    /// Build a graph from a construction string such as `gibbs:k=2,d=5`.
    Build { construction: Construction },
    /// All SC graphs of order n (of a family) up to isomorphism, as graph6.
    Census {
        n: usize,
        /// split, pseudo-split or all.
        #[arg(long, default_value = "split")]
        filter: Filter,
    },
    /// Realizations of a degree sequence up to isomorphism, flagging SC ones.
    /// Without an argument, one sequence is read per input line.
    Realizations {
        degree_sequence: Option<DegreeSequence>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Split,
    PseudoSplit,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Sc,
    Split,
    PseudoSplit,
    Forcibly,
    Partition,
}

impl CheckKind {
    fn all() -> Vec<CheckKind> {
        CheckKind::value_variants().to_vec()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let text = match cli.command {
        Command::Count { orders, family } => cmd_count(&orders, family, cli.json)?,
        Command::Check { checks } => {
            cmd_check(&read_input(cli.input.as_deref())?, &checks, cli.json)?
        }
        Command::Build { construction } => {
            let g = construction.build()?;
            if cli.json {
                json(&serde_json::json!({ "graph6": graph6::write(&g), "order": g.order() }))?
            } else {
                format!("{}\n", graph6::write(&g))
            }
        }
        Command::Census { n, filter } => {
            let census = generate_sc(n, filter)?;
            eprintln!("{} graphs", census.len());
            if cli.json {
                let graphs: Vec<String> = census.graphs.iter().map(graph6::write).collect();
                json(&serde_json::json!({
                    "order": n,
                    "filter": filter.to_string(),
                    "count": census.len(),
                    "graphs": graphs,
                }))?
            } else {
                census.to_graph6()
            }
        }
        Command::Realizations { degree_sequence } => {
            let sequences = match degree_sequence {
                Some(ds) => vec![ds],
                None => read_input(cli.input.as_deref())?
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(|l| l.parse().with_context(|| format!("parsing {l:?}")))
                    .collect::<Result<_>>()?,
            };
            cmd_realizations(&sequences, cli.json)?
        }
    };
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn read_input(path: Option<&Path>) -> Result<String> {
    let mut s = String::new();
    match path {
        Some(p) => {
            File::open(p)
                .with_context(|| format!("opening {}", p.display()))?
                .read_to_string(&mut s)?;
        }
        None => {
            io::stdin().read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn cmd_count(orders: &[usize], family: Family, as_json: bool) -> Result<String> {
    let orders = if orders.is_empty() {
        &DEFAULT_ORDERS[..]
    } else {
        orders
    };
    let rows = count_table(orders);
    let show_split = family != Family::PseudoSplit;
    let show_pseudo = family != Family::Split;
    if as_json {
        #[derive(Serialize)]
        struct Row {
            n: usize,
            #[serde(skip_serializing_if = "Option::is_none")]
            split: Option<String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            pseudo_split: Option<String>,
        }
        let rows: Vec<Row> = rows
            .iter()
            .map(|r| Row {
                n: r.n,
                split: show_split.then(|| r.split.to_string()),
                pseudo_split: show_pseudo.then(|| r.pseudo_split.to_string()),
            })
            .collect();
        return json(&rows);
    }
    let mut table = vec![vec!["n".to_string()]];
    if show_split {
        table[0].push("split".into());
    }
    if show_pseudo {
        table[0].push("pseudo-split".into());
    }
    for r in &rows {
        let mut line = vec![r.n.to_string()];
        if show_split {
            line.push(r.split.to_string());
        }
        if show_pseudo {
            line.push(r.pseudo_split.to_string());
        }
        table.push(line);
    }
    Ok(align(&table))
}

/// Right-aligned columns separated by two spaces.
fn align(table: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..table[0].len())
        .map(|c| table.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for row in table {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        s += &cells.join("  ");
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
struct PartitionReport {
    partition: FourPartition,
    self_complementary: bool,
}

#[derive(Serialize, Default)]
struct GraphReport {
    graph6: String,
    order: usize,
    degree_sequence: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    self_complementary: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    antimorphism: Option<Permutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    split: Option<Option<SplitPartition>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pseudo_split: Option<Option<PseudoSplitPartition>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    forcibly_sc: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diamond: Option<Option<PartitionReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rectangle: Option<Option<PartitionReport>>,
}

fn report(g: &Graph, checks: &[CheckKind]) -> GraphReport {
    let ds = DegreeSequence::of(g);
    let mut r = GraphReport {
        graph6: graph6::write(g),
        order: g.order(),
        degree_sequence: ds.to_string(),
        ..GraphReport::default()
    };
    let with_symmetry = |p: FourPartition| PartitionReport {
        self_complementary: is_self_complementary_partition(g, &p),
        partition: p,
    };
    for check in checks {
        match check {
            CheckKind::Sc => {
                r.antimorphism = find_antimorphism(g);
                r.self_complementary = Some(r.antimorphism.is_some());
            }
            CheckKind::Split => r.split = Some(split_partition(g)),
            CheckKind::PseudoSplit => r.pseudo_split = Some(pseudo_split_partition(g)),
            CheckKind::Forcibly => r.forcibly_sc = Some(is_forcibly_sc(&ds)),
            CheckKind::Partition => {
                // The diamond built from an antimorphism is the symmetric one.
                let diamond = find_antimorphism(g)
                    .and_then(|sigma| diamond_from_antimorphism(g, &sigma).ok())
                    .or_else(|| any_diamond(g).ok());
                r.diamond = Some(diamond.map(with_symmetry));
                r.rectangle = Some(rectangle_partition(g).map(with_symmetry));
            }
        }
    }
    r
}

fn cmd_check(input: &str, checks: &[CheckKind], as_json: bool) -> Result<String> {
    let graphs = graph6::read_all(input)?;
    let reports: Vec<GraphReport> = graphs.iter().map(|g| report(g, checks)).collect();
    if as_json {
        return json(&reports);
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let part = |p: &Option<PartitionReport>| match p {
        Some(p) => format!(
            "{} (self-complementary: {})",
            p.partition,
            yes_no(p.self_complementary)
        ),
        None => "none".to_string(),
    };
    let mut s = String::new();
    for r in &reports {
        s += &format!(
            "{}  n={}  degrees=({})\n",
            r.graph6, r.order, r.degree_sequence
        );
        if let Some(sc) = r.self_complementary {
            s += &format!("  self-complementary: {}", yes_no(sc));
            if let Some(a) = &r.antimorphism {
                s += &format!("  antimorphism={a}");
            }
            s.push('\n');
        }
        if let Some(p) = &r.split {
            s += &format!("  split: {}\n", p.map_or("no".into(), |p| p.to_string()));
        }
        if let Some(p) = &r.pseudo_split {
            s += &format!(
                "  pseudo-split: {}\n",
                p.map_or("no".into(), |p| p.to_string())
            );
        }
        if let Some(f) = r.forcibly_sc {
            s += &format!("  forcibly self-complementary degrees: {}\n", yes_no(f));
        }
        if let Some(p) = &r.diamond {
            s += &format!("  diamond: {}\n", part(p));
        }
        if let Some(p) = &r.rectangle {
            s += &format!("  rectangle: {}\n", part(p));
        }
    }
    Ok(s)
}

#[derive(Serialize)]
struct Realization {
    graph6: String,
    self_complementary: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    antimorphism: Option<Permutation>,
}

#[derive(Serialize)]
struct RealizationReport {
    degree_sequence: DegreeSequence,
    forcibly_sc: bool,
    realizations: Vec<Realization>,
}

fn cmd_realizations(sequences: &[DegreeSequence], as_json: bool) -> Result<String> {
    let mut reports = Vec::new();
    for ds in sequences {
        let realizations = realization_closure(ds, true)?
            .into_iter()
            .map(|g| {
                let antimorphism = find_antimorphism(&g);
                Realization {
                    graph6: graph6::write(&g),
                    self_complementary: antimorphism.is_some(),
                    antimorphism,
                }
            })
            .collect();
        reports.push(RealizationReport {
            degree_sequence: ds.clone(),
            forcibly_sc: is_forcibly_sc(ds),
            realizations,
        });
    }
    if as_json {
        return json(&reports);
    }
    let mut s = String::new();
    for r in &reports {
        if sequences.len() > 1 {
            s += &format!("# ({})\n", r.degree_sequence);
        }
        for g in &r.realizations {
            let verdict = if g.self_complementary { "sc" } else { "not-sc" };
            s += &format!("{} {verdict}\n", g.graph6);
        }
    }
    Ok(s)
}
