//! Command-line frontend: classification, decomposition, representation
//! rendering, exhaustive enumeration, generating-function queries, census
//! verification, and OEIS b-file output.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use semiorders::ascent::ParseSequenceError;
use semiorders::counts::BRUTE_FORCE_CAP;
use semiorders::verify::{run_verification, VerifyOptions};
use semiorders::{
    catalan, decompose, dim2_gf, dim2_nodh_gf, hereditary_gf, hereditary_nodh_gf, AscentSequence,
    IntervalRepresentation, RationalGf,
};

#[derive(Parser)]
#[command(
    name = "semiorder",
    about = "Interval orders and semiorders via ascent sequences",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the minimal endpoint interval representation of a sequence
    Repr(ReprArgs),
    /// Classify the poset coded by a sequence
    Classify {
        /// Ascent sequence, e.g. "(0,1,0,1,2,0,2)"
        sequence: String,
    },
    /// Print the block decomposition of a hereditary sequence
    Decompose {
        /// Ascent sequence, e.g. "(0,1,0)"
        sequence: String,
    },
    /// Exhaustively classify all sequences of each length 1..=N
    Enumerate(EnumerateArgs),
    /// Print series coefficients of a counting generating function
    Gf(GfArgs),
    /// Run the cross-oracle and count-table verification suite
    Verify(VerifyArgs),
    /// Emit an OEIS b-file for one of the counting sequences
    Bfile(BfileArgs),
}

#[derive(Args)]
struct ReprArgs {
    /// Ascent sequence, e.g. "(0,1,2,3,1,0,1,3)"
    sequence: String,
    /// JSON form {"n": .., "intervals": [{"l", "r", "mult"}, ..]}
    #[arg(long, conflicts_with = "ascii")]
    json: bool,
    /// ASCII diagram, one interval per line plus a tick row
    #[arg(long)]
    ascii: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest length to census (capped at 12)
    #[arg(long)]
    n: u32,
    /// Count only sequences with no equal adjacent entries
    #[arg(long)]
    nodh: bool,
    /// CSV instead of aligned text
    #[arg(long)]
    csv: bool,
    /// Worker threads (default: machine parallelism)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GfWhich {
    Hereditary,
    Dim2,
    #[value(name = "hereditary-nodh")]
    HereditaryNodh,
    #[value(name = "dim2-nodh")]
    Dim2Nodh,
}

#[derive(Args)]
struct GfArgs {
    /// Which counting series to expand
    #[arg(long, value_enum)]
    which: GfWhich,
    /// Number of coefficients to print (n = 1..=terms)
    #[arg(long)]
    terms: usize,
    /// Also print the dominant pole, growth rate, and constant
    #[arg(long)]
    asymptotics: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Bound for the exhaustive families (table comparisons reach 25)
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    /// Worker threads (default: machine parallelism)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BfileWhich {
    #[value(name = "A293499")]
    A293499,
    #[value(name = "A293498")]
    A293498,
    #[value(name = "A293501")]
    A293501,
}

#[derive(Args)]
struct BfileArgs {
    /// Which OEIS sequence to emit
    #[arg(long, value_enum)]
    which: BfileWhich,
    /// Number of terms (offset 1)
    #[arg(long)]
    terms: usize,
}

enum Failure {
    /// Bad arguments or inputs: exit status 2.
    Usage(String),
    /// Verification found a violated criterion: exit status 1.
    Verification,
}

fn parse_sequence(text: &str) -> Result<AscentSequence, Failure> {
    text.parse()
        .map_err(|e: ParseSequenceError| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Repr(args) => {
            let rep = IntervalRepresentation::from_sequence(&parse_sequence(&args.sequence)?);
            if args.json {
                println!("{}", rep.to_json());
            } else if args.ascii {
                print!("{}", rep.ascii_diagram());
            } else {
                println!("{rep}");
            }
        }
        Command::Classify { sequence } => {
            let seq = match sequence.parse::<AscentSequence>() {
                Ok(seq) => seq,
                Err(ParseSequenceError::Invalid(e)) => {
                    println!("valid=false reason=\"{e}\"");
                    return Ok(());
                }
                Err(e) => return Err(Failure::Usage(e.to_string())),
            };
            let rep = IntervalRepresentation::from_sequence(&seq);
            let semiorder = rep.is_semiorder();
            let decomposition = decompose(&seq).ok();
            let hereditary = decomposition.is_some();
            let dim = if !semiorder {
                "-".to_string()
            } else if rep.point_count() <= 1
                || (rep.distinct_count() == rep.point_count()
                    && rep.iter().all(|(iv, _)| iv.is_trivial()))
            {
                "1".to_string() // a chain: distinct trivial intervals only
            } else {
                match &decomposition {
                    Some(d) if d.dimension_at_most_2() => "2".to_string(),
                    _ => "3".to_string(), // optional/interior-C structure, or not hereditary
                }
            };
            println!(
                "valid=true semiorder={semiorder} hereditary={hereditary} restricted={} nodh={} dim={dim}",
                seq.is_restricted(),
                seq.has_no_duplicated_holdings(),
            );
        }
        Command::Decompose { sequence } => match decompose(&parse_sequence(&sequence)?) {
            Ok(d) => println!("{d}"),
            Err(e) => println!("{e}"),
        },
        Command::Enumerate(args) => {
            if args.n == 0 || args.n > BRUTE_FORCE_CAP {
                return Err(Failure::Usage(format!(
                    "--n must be between 1 and {BRUTE_FORCE_CAP}"
                )));
            }
            let rows = semiorders::brute_force_table(args.n, args.jobs)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let header: [&str; 5] = if args.nodh {
                [
                    "n",
                    "nodh-semiorders",
                    "nodh-hereditary",
                    "nodh-dim2",
                    "nodh-dim3",
                ]
            } else {
                ["n", "semiorders", "hereditary", "dim2", "dim3"]
            };
            let table: Vec<[String; 5]> = rows
                .iter()
                .map(|r| {
                    let cells = if args.nodh {
                        [
                            r.nodh_semiorders,
                            r.nodh_hereditary,
                            r.nodh_dim2,
                            r.nodh_dim3,
                        ]
                    } else {
                        [r.semiorders, r.hereditary, r.dim2, r.dim3]
                    };
                    [
                        r.n.to_string(),
                        cells[0].to_string(),
                        cells[1].to_string(),
                        cells[2].to_string(),
                        cells[3].to_string(),
                    ]
                })
                .collect();
            if args.csv {
                println!("{}", header.join(","));
                for row in &table {
                    println!("{}", row.join(","));
                }
            } else {
                let mut widths = header.map(str::len);
                for row in &table {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.len());
                    }
                }
                let fmt_row = |cells: [&str; 5]| {
                    cells
                        .iter()
                        .zip(widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                println!("{}", fmt_row(header));
                for row in &table {
                    println!("{}", fmt_row(row.each_ref().map(String::as_str)));
                }
            }
        }
        Command::Gf(args) => {
            let series: RationalGf = match args.which {
                GfWhich::Hereditary => hereditary_gf(),
                GfWhich::Dim2 => dim2_gf(),
                GfWhich::HereditaryNodh => hereditary_nodh_gf(),
                GfWhich::Dim2Nodh => dim2_nodh_gf(),
            };
            if args.terms == 0 {
                return Err(Failure::Usage("--terms must be at least 1".into()));
            }
            if args.asymptotics && matches!(args.which, GfWhich::HereditaryNodh | GfWhich::Dim2Nodh)
            {
                return Err(Failure::Usage(
                    "asymptotics are provided for the hereditary and dim2 series only".into(),
                ));
            }
            let coeffs = series.coefficients(args.terms);
            let line = coeffs[1..]
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            println!("{line}");
            if args.asymptotics {
                let asy = series
                    .dominant_asymptotics()
                    .map_err(|e| Failure::Usage(e.to_string()))?;
                println!(
                    "rho={:.6} growth={:.6} constant={:.6}",
                    asy.rho, asy.growth, asy.constant
                );
            }
        }
        Command::Verify(args) => {
            if args.n_max == 0 {
                return Err(Failure::Usage("--n-max must be at least 1".into()));
            }
            let opts = VerifyOptions::capped(args.n_max, args.jobs);
            let results = run_verification(&opts);
            let mut all_passed = true;
            for r in &results {
                println!(
                    "criterion {:2} [{}] {} — {}",
                    r.index,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
                all_passed &= r.passed;
            }
            if !all_passed {
                return Err(Failure::Verification);
            }
        }
        Command::Bfile(args) => {
            if args.terms == 0 {
                return Err(Failure::Usage("--terms must be at least 1".into()));
            }
            let values = match args.which {
                BfileWhich::A293499 => hereditary_gf().coefficients(args.terms),
                BfileWhich::A293498 => dim2_gf().coefficients(args.terms),
                BfileWhich::A293501 => {
                    let dim2 = dim2_gf().coefficients(args.terms);
                    (0..=args.terms)
                        .map(|n| catalan(n as u64) - &dim2[n])
                        .collect()
                }
            };
            for (n, value) in values.iter().enumerate().skip(1) {
                println!("{n} {value}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
