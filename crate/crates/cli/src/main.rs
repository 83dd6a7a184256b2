mod document;

use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypercuboid::bounds::{bound_report, existence_bound};
use hypercuboid::codes::{
    build_endomorphism, code_is_clique, code_metrics, code_to_cuboid, cuboid_to_code, is_mds,
    max_code_bruteforce, verify_endomorphism,
};
use hypercuboid::constructions::{extend_cube, matrix_cube, modular_class1, seed_cube, MatrixSpec};
use hypercuboid::enumeration::{
    complete_partial, count_semi_reduced, enumerate_semi_reduced, table2, CountResult,
    SearchOptions,
};
use hypercuboid::{validate, CuboidShape, Error, Hypercuboid};
use num_bigint::BigUint;
use serde_json::{json, Value};

use document::{parse, CodeDocument, CuboidDocument};

const BUDGET_VAR: &str = "LATIN_NODE_BUDGET";

#[derive(Parser)]
#[command(
    name = "lhc",
    version,
    about = "Latin hypercuboids of class r: validation, bounds, constructions, counting and codes"
)]
#[command(
    after_help = "Exit codes: 0 success or valid, 1 invalid or check failed, 2 usage, 3 bad data, 4 resource limit.\n\
Set LATIN_NODE_BUDGET to cap the number of search nodes."
)]
struct Cli {
    /// Output encoding; csv is only available for count tables.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Read and write symbols starting from 1 instead of 0.
    #[arg(long, global = true)]
    one_based: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check a cuboid document; the verdict is the exit code.
    Validate {
        /// Cuboid document, or - for standard input.
        file: String,
    },
    /// Existence bound for a shape, or code size bounds for alphabets.
    Bounds(BoundsArgs),
    /// Build a hypercuboid from one of the explicit constructions.
    #[command(subcommand)]
    Construct(Construct),
    /// Count (and optionally list) semi-reduced hypercuboids.
    Enumerate(EnumerateArgs),
    /// Fill the empty cells of a partial hypercuboid.
    Complete {
        file: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Convert between cuboid and code documents.
    #[command(subcommand)]
    Convert(Convert),
    /// Check code and graph properties.
    #[command(subcommand)]
    Verify(Verify),
    /// Exhaustive reference computations.
    #[command(subcommand)]
    Oracle(Oracle),
    /// Recount the desk-sized published semi-reduced counts and compare
    /// them with the expected values.
    #[command(name = "reproduce-table2")]
    ReproduceTable2 {
        /// Include the long-running entries.
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// Cuboid sizes, e.g. 3,2,2.
    #[arg(long, value_delimiter = ',', requires = "class", conflicts_with_all = ["alphabets", "delta"])]
    shape: Option<Vec<usize>>,
    #[arg(long)]
    class: Option<usize>,
    /// Code alphabet sizes, e.g. 3,3,2.
    #[arg(long, value_delimiter = ',', requires = "delta")]
    alphabets: Option<Vec<usize>>,
    /// Minimum distance.
    #[arg(long)]
    delta: Option<usize>,
}

#[derive(Subcommand)]
enum Construct {
    /// Coordinate sum modulo n1 (class 1).
    Modular {
        #[arg(long, value_delimiter = ',', required = true)]
        shape: Vec<usize>,
    },
    /// LHC(r+1, n, r) from an n x n Latin square (the cyclic one by default).
    Seed {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: usize,
        /// Cuboid document holding the square.
        #[arg(long)]
        square: Option<String>,
    },
    /// Embed a cubic LHC(d, n, r) into LHC(d+1, n, r) using the layers of
    /// an LHC(r+1, n, r).
    Extend {
        #[arg(long)]
        cube: String,
        #[arg(long)]
        seed: String,
    },
    /// The linear map x -> x f over GF(p).
    Matrix {
        #[arg(long)]
        prime: usize,
        /// Matrix rows separated by ';', entries by ',', e.g. "1,0;0,1;1,1;1,2".
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Depth at which the search tree is split into work units.
    #[arg(long)]
    split_depth: Option<usize>,
    /// Abort after this many search nodes (overrides LATIN_NODE_BUDGET).
    #[arg(long)]
    node_budget: Option<u64>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    shape: Vec<usize>,
    #[arg(long)]
    class: usize,
    /// Only count; do not list solutions.
    #[arg(long)]
    count_only: bool,
    /// Stop after this many solutions.
    #[arg(long)]
    limit: Option<u64>,
    /// Emit only the total number of hypercuboids.
    #[arg(long)]
    total: bool,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Subcommand)]
enum Convert {
    /// Cuboid document to code document.
    ToCode {
        file: String,
        /// Spell symbols out as their r-tuples.
        #[arg(long)]
        expand: bool,
    },
    /// Code document of length d + r to cuboid document.
    FromCode {
        file: String,
        /// Number of leading symbol coordinates.
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Is the code a (maximal) clique for distances low-dist..=d?
    Clique {
        file: String,
        #[arg(long)]
        low_dist: usize,
    },
    /// Does the cuboid induce a minimal-rank endomorphism?
    Endo { file: String },
    /// Does the code meet the Singleton bound?
    Mds { file: String },
}

#[derive(Subcommand)]
enum Oracle {
    /// Largest code with the given minimum distance, by exhaustive search.
    MaxCode {
        #[arg(long, value_delimiter = ',', required = true)]
        alphabets: Vec<usize>,
        #[arg(long)]
        delta: usize,
    },
}

/// A finished command: what to print and how to exit.
enum Reply {
    Json(Value, u8),
    Csv(Vec<Vec<String>>, u8),
    Silent(u8),
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Lib(Error::Parameter(_)) => 2,
            Failure::Lib(Error::Resource { .. }) => 4,
            Failure::Lib(_) => 3,
        }
    }
}

fn big(n: &BigUint) -> Value {
    Value::Number(
        serde_json::Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"),
    )
}

fn count_json(shape: &CuboidShape, res: &CountResult) -> Value {
    json!({
        "sizes": shape.sizes(),
        "class": shape.class(),
        "semiReduced": big(&res.semi_reduced),
        "totalFactor": big(&res.total_factor),
        "total": big(&res.total),
        "nodesVisited": res.nodes_visited,
        "millis": res.elapsed.as_millis() as u64,
        "shortCircuited": res.short_circuited,
        "truncated": res.truncated,
    })
}

const CSV_HEADER: [&str; 6] = ["sizes", "class", "semiReduced", "total", "nodes", "millis"];

fn count_row(shape: &CuboidShape, res: &CountResult) -> Vec<String> {
    let sizes: Vec<String> = shape.sizes().iter().map(|n| n.to_string()).collect();
    vec![
        sizes.join(","),
        shape.class().to_string(),
        res.semi_reduced.to_string(),
        res.total.to_string(),
        res.nodes_visited.to_string(),
        res.elapsed.as_millis().to_string(),
    ]
}

fn search_options(args: &SearchArgs) -> Result<SearchOptions, Failure> {
    let mut opts = SearchOptions::default().with_workers(args.workers);
    opts.split_depth = args.split_depth;
    opts.node_budget = match args.node_budget {
        Some(b) => Some(b),
        None => match std::env::var(BUDGET_VAR) {
            Ok(v) => Some(v.trim().parse().map_err(|_| {
                Failure::Usage(format!(
                    "{BUDGET_VAR} must be a non-negative integer, got {v:?}"
                ))
            })?),
            Err(_) => None,
        },
    };
    Ok(opts)
}

fn shape_arg(sizes: &[usize], class: usize) -> Result<CuboidShape, Failure> {
    CuboidShape::new(sizes.to_vec(), class).map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_matrix(text: &str) -> Result<Vec<Vec<usize>>, Failure> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    x.trim().parse().map_err(|_| {
                        Failure::Usage(format!("matrix entry {x:?} is not a non-negative integer"))
                    })
                })
                .collect()
        })
        .collect()
}

struct Ctx {
    base: u64,
}

impl Ctx {
    fn cuboid(&self, path: &str) -> Result<Hypercuboid, Failure> {
        Ok(parse::<CuboidDocument>(path)?.to_cuboid(self.base)?)
    }

    fn code(&self, path: &str) -> Result<hypercuboid::codes::MixedCode, Failure> {
        Ok(parse::<CodeDocument>(path)?.to_code(self.base)?)
    }

    fn cuboid_json(&self, c: &Hypercuboid) -> Value {
        serde_json::to_value(CuboidDocument::from_cuboid(c, self.base))
            .expect("documents serialize")
    }

    fn code_json(&self, c: &hypercuboid::codes::MixedCode) -> Value {
        serde_json::to_value(CodeDocument::from_code(c, self.base)).expect("documents serialize")
    }
}

fn run(cli: Cli) -> Result<Reply, Failure> {
    let ctx = Ctx {
        base: cli.one_based as u64,
    };
    let table_command = matches!(
        cli.command,
        Command::Enumerate(_) | Command::ReproduceTable2 { .. }
    );
    if cli.format == Format::Csv && !table_command {
        return Err(Failure::Usage(
            "csv output is only available for enumerate and reproduce-table2".into(),
        ));
    }
    let csv = cli.format == Format::Csv;
    match cli.command {
        Command::Validate { file } => {
            let c = ctx.cuboid(&file)?;
            match validate(&c).first_violation {
                None => Ok(Reply::Silent(0)),
                Some(v) => {
                    eprintln!(
                        "invalid: {:?} in the subarray varying coordinates {:?} with {:?} fixed",
                        v.kind,
                        v.selector.varying(),
                        v.selector.fixed()
                    );
                    Ok(Reply::Silent(1))
                }
            }
        }
        Command::Bounds(args) => match (args.shape, args.class, args.alphabets, args.delta) {
            (Some(sizes), Some(class), None, None) => {
                let (shape, _) = CuboidShape::normalized(&sizes, class)
                    .map_err(|e| Failure::Usage(e.to_string()))?;
                let v = existence_bound(&shape);
                Ok(Reply::Json(
                    json!({
                        "sizes": shape.sizes(),
                        "class": shape.class(),
                        "lhs": v.lhs,
                        "rhs": v.rhs,
                        "applies": v.applies,
                        "satisfied": v.satisfied,
                        "ethierMax": v.ethier_max,
                        "cubicMax": v.cubic_max,
                    }),
                    0,
                ))
            }
            (None, None, Some(alphabets), Some(delta)) => {
                let b = bound_report(&alphabets, delta)?;
                Ok(Reply::Json(
                    json!({
                        "alphabets": b.alphabets,
                        "delta": b.delta,
                        "singleton": b.singleton,
                        "hammingRadius": b.hamming_radius,
                        "hamming": b.hamming,
                        "plotkin": b.plotkin,
                        "plotkinRho": b.plotkin_rho.to_string(),
                        "exact": b.exact,
                        "best": b.best(),
                    }),
                    0,
                ))
            }
            _ => Err(Failure::Usage(
                "give either --shape and --class, or --alphabets and --delta".into(),
            )),
        },
        Command::Construct(kind) => {
            let c = match kind {
                Construct::Modular { shape } => modular_class1(&shape_arg(&shape, 1)?)?,
                Construct::Seed { n, class, square } => {
                    let square = match square {
                        Some(path) => ctx.cuboid(&path)?,
                        None => modular_class1(&shape_arg(&[n, n], 1)?)?,
                    };
                    seed_cube(n, class, &square)?
                }
                Construct::Extend { cube, seed } => {
                    extend_cube(&ctx.cuboid(&cube)?, &ctx.cuboid(&seed)?)?
                }
                Construct::Matrix { prime, matrix } => {
                    matrix_cube(&MatrixSpec::new(prime, parse_matrix(&matrix)?)?)?
                }
            };
            Ok(Reply::Json(ctx.cuboid_json(&c), 0))
        }
        Command::Enumerate(args) => {
            let shape = shape_arg(&args.shape, args.class)?;
            let mut opts = search_options(&args.search)?;
            opts.count_only = args.count_only || args.total || csv;
            opts.limit = args.limit;
            let found = Mutex::new(Vec::new());
            let res = enumerate_semi_reduced(&shape, &opts, |c| {
                found.lock().unwrap().push(c.clone());
                Ok(())
            })?;
            if csv {
                let header = CSV_HEADER.iter().map(|s| s.to_string()).collect();
                return Ok(Reply::Csv(vec![header, count_row(&shape, &res)], 0));
            }
            if args.total {
                return Ok(Reply::Json(json!({ "total": big(&res.total) }), 0));
            }
            let mut doc = count_json(&shape, &res);
            if !opts.count_only {
                let mut found = found.into_inner().unwrap();
                found.sort();
                doc["solutions"] = found.iter().map(|c| ctx.cuboid_json(c)).collect();
            }
            Ok(Reply::Json(doc, 0))
        }
        Command::Complete { file, search } => {
            let p = ctx.cuboid(&file)?;
            let completion = complete_partial(&p, &search_options(&search)?)?;
            let code = if completion.is_some() { 0 } else { 1 };
            Ok(Reply::Json(
                json!({ "completion": completion.map(|c| ctx.cuboid_json(&c)) }),
                code,
            ))
        }
        Command::Convert(Convert::ToCode { file, expand }) => {
            let code = cuboid_to_code(&ctx.cuboid(&file)?, expand)?;
            Ok(Reply::Json(ctx.code_json(&code), 0))
        }
        Command::Convert(Convert::FromCode { file, r }) => {
            let c = code_to_cuboid(&ctx.code(&file)?, r)?;
            Ok(Reply::Json(ctx.cuboid_json(&c), 0))
        }
        Command::Verify(Verify::Clique { file, low_dist }) => {
            let check = code_is_clique(&ctx.code(&file)?, low_dist);
            Ok(Reply::Json(
                json!({ "clique": check.clique, "maximal": check.maximal }),
                if check.clique && check.maximal { 0 } else { 1 },
            ))
        }
        Command::Verify(Verify::Endo { file }) => {
            let c = ctx.cuboid(&file)?;
            let e = build_endomorphism(&c)?;
            let ok = verify_endomorphism(&e)?;
            let classes: Vec<usize> = e.kernel_classes().iter().map(Vec::len).collect();
            let uniform = classes.windows(2).all(|w| w[0] == w[1]);
            Ok(Reply::Json(
                json!({
                    "endomorphism": ok,
                    "rank": e.rank(),
                    "order": c.order(),
                    "distanceSet": e.distance_set(),
                    "kernelClassSizes": classes,
                    "uniformKernel": uniform,
                }),
                if ok && uniform && e.rank() == c.order() {
                    0
                } else {
                    1
                },
            ))
        }
        Command::Verify(Verify::Mds { file }) => {
            let code = ctx.code(&file)?;
            let m = code_metrics(&code);
            let mds = is_mds(&code);
            Ok(Reply::Json(
                json!({
                    "size": m.size,
                    "distanceSet": m.distance_set,
                    "minDistance": m.min_distance,
                    "isAdditive": m.is_additive,
                    "minWeight": m.min_weight,
                    "mds": mds,
                }),
                if mds { 0 } else { 1 },
            ))
        }
        Command::Oracle(Oracle::MaxCode { alphabets, delta }) => {
            let (size, witness) = max_code_bruteforce(&alphabets, delta)?;
            Ok(Reply::Json(
                json!({ "size": size, "witness": ctx.code_json(&witness) }),
                0,
            ))
        }
        Command::ReproduceTable2 { extended, search } => {
            let mut opts = search_options(&search)?;
            opts.count_only = true;
            let mut entries = table2::DESK.to_vec();
            if extended {
                entries.extend_from_slice(table2::EXTENDED);
            }
            let mut rows = Vec::new();
            let mut table = vec![CSV_HEADER
                .iter()
                .chain(&["expected", "match"])
                .map(|s| s.to_string())
                .collect()];
            let mut all_match = true;
            for (sizes, class, expected) in entries {
                let shape = shape_arg(sizes, class)?;
                let res = count_semi_reduced(&shape, &opts)?;
                let matched = res.semi_reduced == BigUint::from(expected);
                all_match &= matched;
                let mut row = count_row(&shape, &res);
                row.extend([expected.to_string(), matched.to_string()]);
                table.push(row);
                let mut doc = count_json(&shape, &res);
                doc["expected"] = json!(expected);
                doc["match"] = json!(matched);
                rows.push(doc);
            }
            let code = if all_match { 0 } else { 1 };
            if csv {
                Ok(Reply::Csv(table, code))
            } else {
                Ok(Reply::Json(
                    json!({ "entries": rows, "allMatch": all_match }),
                    code,
                ))
            }
        }
    }
}

fn emit(reply: Reply) -> std::io::Result<u8> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match reply {
        Reply::Json(v, code) => {
            serde_json::to_writer_pretty(&mut out, &v)?;
            writeln!(out)?;
            Ok(code)
        }
        Reply::Csv(rows, code) => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.write_record(&row)?;
            }
            w.flush()?;
            Ok(code)
        }
        Reply::Silent(code) => Ok(code),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(reply) => match emit(reply) {
            Ok(code) => ExitCode::from(code),
            // a closed pipe (e.g. `| head`) is the reader's choice
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("lhc: writing output: {e}");
                ExitCode::from(3)
            }
        },
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("lhc: {msg}"),
                Failure::Lib(e) => eprintln!("lhc: {e}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
