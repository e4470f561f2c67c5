use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kmosaic::generator::{count_mosaics_with, generate, iterate_mosaics, EnumerationOptions, GenerationSpec};
use kmosaic::invariants::{
    is_unknot_with, jones_polynomial_with, possibly_isotopic_with, BracketOptions, LaurentPoly, Oracle,
    DEFAULT_CROSSING_CAP,
};
use kmosaic::io::{parse_mosaic, write_mosaic, Format};
use kmosaic::pdcode::{pd_code, pd_code_strict};
use kmosaic::render::{render, RenderFormat, RenderOptions};
use kmosaic::tangles::{rational_tangle, tangle_join, TangleValue};
use kmosaic::traversal::{number_of_components, strands, zoom};
use kmosaic::{Execution, Mosaic, MosaicError};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "kmosaic", version, about = "Knot mosaics: validation, invariants, tangles, generation")]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,

    /// Run state sums, enumeration and generation on one thread
    #[arg(long, global = true)]
    sequential: bool,

    /// Largest crossing count accepted by bracket and Jones computations
    #[arg(long, global = true, default_value_t = DEFAULT_CROSSING_CAP)]
    crossing_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every connection point is matched
    Validate { file: PathBuf },
    /// Dimension, crossing count and component count
    Stats { file: PathBuf },
    /// Planar diagram code
    Pd {
        file: PathBuf,
        /// Fail when a component has no crossings
        #[arg(long)]
        strict: bool,
    },
    /// Jones polynomial
    Jones { file: PathBuf },
    /// Constrained random mosaic
    Random {
        #[arg(short = 'n', long = "size")]
        n: usize,
        #[arg(long)]
        crossings: Option<usize>,
        #[arg(long)]
        components: Option<usize>,
        #[arg(long)]
        unknot: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draw every cell from all eleven tiles, no constraints
        #[arg(long)]
        any_tiles: bool,
        #[arg(long, default_value_t = kmosaic::generator::DEFAULT_MAX_ATTEMPTS)]
        max_attempts: usize,
        /// Command printing the knot Floer total rank of a PD code read on stdin
        #[arg(long, env = "KMOSAIC_ORACLE")]
        oracle: Option<String>,
    },
    /// Rational tangle mosaic for an integer or `inf`
    Tangle {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Join two integer tangles into one mosaic
    Join {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
    },
    /// Replace each tile by a 3x3 block
    Zoom { file: PathBuf },
    /// Reflect left to right
    Flip { file: PathBuf },
    /// Count suitably connected n-mosaics
    Count {
        #[arg(short = 'n', long = "size")]
        n: usize,
        /// Stop after this many mosaics
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Decide whether a knot mosaic is the unknot
    Unknot {
        file: PathBuf,
        #[arg(long, env = "KMOSAIC_ORACLE")]
        oracle: Option<String>,
    },
    /// Compare component counts and Jones polynomials
    Isotopic { first: PathBuf, second: PathBuf },
    /// Draw a mosaic as text or SVG
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: bool,
        /// Plain ASCII glyphs instead of box drawing
        #[arg(long)]
        plain: bool,
        #[arg(long, default_value_t = 100.0)]
        tile_size: f64,
        #[arg(long, default_value_t = 12.0)]
        gap: f64,
    },
    /// Trace every component
    Strands { file: PathBuf },
}

enum Failure {
    /// Exit 1 with a message on stderr.
    Domain(String),
    /// Exit 1 after the result has already been printed.
    Quiet,
    Usage(String),
    Oracle(String),
}

impl From<MosaicError> for Failure {
    fn from(e: MosaicError) -> Self {
        match e {
            MosaicError::Parse { .. } | MosaicError::NotSquare { .. } | MosaicError::BadTileId { .. } => {
                Failure::Usage(e.to_string())
            }
            MosaicError::OracleFailure(_) => Failure::Oracle(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read_mosaic(path: &Path) -> Result<Mosaic, Failure> {
    let (text, format) = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        (buf, Format::Auto)
    } else {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let format = match Format::from_path(path) {
            Format::Json => Format::Json,
            _ => Format::Auto,
        };
        (text, format)
    };
    parse_mosaic(&text, format).map_err(|e| match e {
        MosaicError::Parse { .. } | MosaicError::NotSquare { .. } | MosaicError::BadTileId { .. } => {
            Failure::Usage(format!("{}: {e}", path.display()))
        }
        e => e.into(),
    })
}

fn oracle(cmd: Option<&str>) -> Result<Option<Oracle>, Failure> {
    cmd.map(Oracle::from_command_line).transpose().map_err(Failure::from)
}

struct Ctx {
    json: bool,
    bracket: BracketOptions,
}

impl Ctx {
    fn print_mosaic(&self, m: &Mosaic) {
        print!("{}", write_mosaic(m, if self.json { Format::Json } else { Format::Text }));
    }

    fn print_json(&self, v: Value) {
        println!("{v}");
    }
}

fn polynomial_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| match i64::try_from(c) {
            Ok(c) => json!([e, c]),
            Err(_) => json!([e, c.to_string()]),
        })
        .collect();
    json!({ "polynomial": p.to_string(), "exponent_denominator": 4, "terms": terms })
}

fn run(cli: Cli) -> CmdResult {
    let execution = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    let ctx = Ctx { json: cli.json, bracket: BracketOptions { crossing_cap: cli.crossing_cap, execution } };
    match cli.command {
        Command::Validate { file } => {
            let ok = read_mosaic(&file)?.is_suitably_connected();
            if ctx.json {
                ctx.print_json(json!({ "suitably_connected": ok }));
            } else {
                println!("suitably_connected: {ok}");
            }
            if ok {
                Ok(())
            } else {
                Err(Failure::Quiet)
            }
        }
        Command::Stats { file } => {
            let m = read_mosaic(&file)?;
            let components = m.is_suitably_connected().then(|| number_of_components(&m)).transpose()?;
            if ctx.json {
                ctx.print_json(json!({
                    "n": m.dim(),
                    "crossings": m.number_of_crossings(),
                    "components": components,
                    "suitably_connected": components.is_some(),
                }));
            } else {
                match components {
                    Some(c) => println!("n={} crossings={} components={c}", m.dim(), m.number_of_crossings()),
                    None => println!("n={} crossings={}", m.dim(), m.number_of_crossings()),
                }
            }
            match components {
                Some(_) => Ok(()),
                None => Err(Failure::Domain("mosaic is not suitably connected".into())),
            }
        }
        Command::Pd { file, strict } => {
            let m = read_mosaic(&file)?;
            let pd = if strict { pd_code_strict(&m)? } else { pd_code(&m)? };
            println!("{}", pd.to_json());
            Ok(())
        }
        Command::Jones { file } => {
            let v = jones_polynomial_with(&read_mosaic(&file)?, &ctx.bracket)?;
            if ctx.json {
                ctx.print_json(polynomial_json(&v));
            } else {
                println!("{v}");
            }
            Ok(())
        }
        Command::Random { n, crossings, components, unknot, seed, any_tiles, max_attempts, oracle: cmd } => {
            let mut spec = GenerationSpec::new(n).seed(seed).max_attempts(max_attempts).unknot(unknot);
            spec.number_of_crossings = crossings;
            spec.number_of_components = components;
            spec.suitably_connected = !any_tiles;
            spec.oracle = oracle(cmd.as_deref())?;
            spec.bracket = ctx.bracket;
            let generated = generate(&spec).map_err(|e| match e {
                MosaicError::InvalidSpec(_) => Failure::Usage(e.to_string()),
                e => e.into(),
            })?;
            if ctx.json {
                ctx.print_json(json!({
                    "n": n,
                    "tiles": generated.mosaic.to_rows(),
                    "attempts": generated.attempts,
                    "unknot_method": generated.unknot_method,
                }));
            } else {
                ctx.print_mosaic(&generated.mosaic);
            }
            Ok(())
        }
        Command::Tangle { value } => {
            let v: TangleValue = value.parse().map_err(|e: MosaicError| Failure::Usage(e.to_string()))?;
            ctx.print_mosaic(&rational_tangle(v));
            Ok(())
        }
        Command::Join { a, b } => {
            let m = tangle_join(a, b).map_err(|e| Failure::Usage(e.to_string()))?;
            ctx.print_mosaic(&m);
            Ok(())
        }
        Command::Zoom { file } => {
            ctx.print_mosaic(&zoom(&read_mosaic(&file)?));
            Ok(())
        }
        Command::Flip { file } => {
            ctx.print_mosaic(&read_mosaic(&file)?.flip());
            Ok(())
        }
        Command::Count { n, limit } => {
            let count = match limit {
                Some(l) => iterate_mosaics(n, |_| {}, Some(l)),
                None => count_mosaics_with(n, &EnumerationOptions { execution, cancel: None })
                    .expect("no cancellation flag"),
            };
            if ctx.json {
                ctx.print_json(json!({ "n": n, "count": count, "limit": limit }));
            } else {
                println!("{count}");
            }
            Ok(())
        }
        Command::Unknot { file, oracle: cmd } => {
            let m = read_mosaic(&file)?;
            let verdict = is_unknot_with(&m, oracle(cmd.as_deref())?.as_ref(), &ctx.bracket)?;
            if ctx.json {
                ctx.print_json(json!(verdict));
            } else {
                let method = serde_json::to_value(verdict.method).expect("method serializes");
                println!("unknot: {} (method: {})", verdict.result, method.as_str().unwrap_or_default());
            }
            Ok(())
        }
        Command::Isotopic { first, second } => {
            let (a, b) = (read_mosaic(&first)?, read_mosaic(&second)?);
            let same = possibly_isotopic_with(&a, &b, &ctx.bracket)?;
            let note = "matching component counts and Jones polynomials do not prove isotopy";
            if ctx.json {
                ctx.print_json(json!({ "invariants_match": same, "note": note }));
            } else {
                println!("invariants_match: {same}");
                println!("note: {note}");
            }
            Ok(())
        }
        Command::Render { file, svg, plain, tile_size, gap } => {
            let m = read_mosaic(&file)?;
            let opts = RenderOptions {
                format: if svg { RenderFormat::Svg } else { RenderFormat::Ascii },
                tile_size,
                gap,
                unicode: !plain,
            };
            if !opts.is_valid() {
                return Err(Failure::Usage("tile size must exceed twice the gap".into()));
            }
            let out = render(&m, &opts);
            if out.ends_with('\n') {
                print!("{out}");
            } else {
                println!("{out}");
            }
            Ok(())
        }
        Command::Strands { file } => {
            let m = read_mosaic(&file)?;
            let traces = strands(&m)?;
            if ctx.json {
                let comps: Vec<Value> = traces
                    .iter()
                    .map(|t| {
                        let steps: Vec<Value> = t
                            .steps()
                            .iter()
                            .map(|s| json!([s.position.row, s.position.col, s.motion.name()]))
                            .collect();
                        json!(steps)
                    })
                    .collect();
                ctx.print_json(json!({ "components": comps }));
            } else {
                for (i, t) in traces.iter().enumerate() {
                    let path: Vec<String> = t.positions().map(|p| p.to_string()).collect();
                    println!("component {i} ({} steps): {}", t.len(), path.join(" "));
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Quiet) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Oracle(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
