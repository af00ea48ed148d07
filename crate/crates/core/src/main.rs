use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fftest::bootstrap::{bootstrap_pvalue, BootstrapConfig};
use fftest::ff2d::{ff_statistic, ff_test, pearson_r, Method, TestOutcome};
use fftest::peacock::peacock_statistic;
use fftest::report::{format_sig, render_json, render_text};
use fftest::samples::{Point2D, Sample2D};
use fftest::stream::{derive_stream, standard_normal};

const EXIT_DATA_ERROR: u8 = 2;
const EXIT_USAGE_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fftest",
    about = "Two-sample Kolmogorov-Smirnov tests in two dimensions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the two-sample test on two CSV files of (x, y) points.
    Test(TestArgs),
    /// Benchmark runtime scaling on synthetic bivariate-normal samples.
    Bench(BenchArgs),
}

#[derive(Args)]
struct TestArgs {
    /// First sample CSV (columns: x, y)
    #[arg(long)]
    s1: String,
    /// Second sample CSV (columns: x, y)
    #[arg(long)]
    s2: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Analytic)]
    method: MethodArg,
    /// Bootstrap iterations (bootstrap method only; default 1000)
    #[arg(long)]
    n_bootstrap: Option<usize>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Treat the first row of each CSV as a header
    #[arg(long)]
    header: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated sample sizes
    #[arg(long, default_value = "10,100,1000")]
    sizes: String,
    /// Comma-separated test tags: ff, peacock, ff-bootstrap
    #[arg(long, default_value = "ff")]
    tests: String,
    #[arg(long, default_value_t = 10)]
    replicates: usize,
    #[arg(long, default_value_t = 100)]
    n_bootstrap: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MethodArg {
    Analytic,
    Bootstrap,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq)]
enum BenchTest {
    Ff,
    Peacock,
    FfBootstrap,
}

impl BenchTest {
    fn parse(tag: &str) -> Option<Self> {
        match tag {
            "ff" => Some(BenchTest::Ff),
            "peacock" => Some(BenchTest::Peacock),
            "ff-bootstrap" => Some(BenchTest::FfBootstrap),
            _ => None,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            BenchTest::Ff => "ff",
            BenchTest::Peacock => "peacock",
            BenchTest::FfBootstrap => "ff-bootstrap",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE_ERROR,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Test(args) => cmd_test(&args),
        Command::Bench(args) => cmd_bench(&args),
    }
}

fn cmd_test(args: &TestArgs) -> ExitCode {
    if args.method == MethodArg::Analytic && args.n_bootstrap.is_some() {
        eprintln!("warning: --n-bootstrap has no effect with --method analytic; ignored");
    }
    let outcome = match run_test(args) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_DATA_ERROR);
        }
    };
    match args.format {
        FormatArg::Text => print!("{}", render_text(&outcome)),
        FormatArg::Json => println!("{}", render_json(&outcome)),
    }
    if outcome.degenerate_correlation && outcome.method == Method::Analytic {
        eprintln!(
            "warning: zero variance in a coordinate; r set to 0. \
             The bootstrap method is recommended for such data."
        );
    }
    ExitCode::SUCCESS
}

fn run_test(args: &TestArgs) -> fftest::Result<TestOutcome> {
    let s1 = Sample2D::load_csv(&args.s1, args.header)?;
    let s2 = Sample2D::load_csv(&args.s2, args.header)?;
    match args.method {
        MethodArg::Analytic => ff_test(&s1, &s2),
        MethodArg::Bootstrap => {
            let start = Instant::now();
            let cfg = BootstrapConfig {
                n_bootstrap: args.n_bootstrap.unwrap_or(1000),
                master_seed: args.seed,
                workers: args.threads,
            };
            let res = bootstrap_pvalue(&s1, &s2, &cfg)?;
            let stat = ff_statistic(&s1, &s2)?;
            let c1 = pearson_r(&s1)?;
            let c2 = pearson_r(&s2)?;
            Ok(TestOutcome {
                statistic: stat.d,
                d1: stat.d1,
                d2: stat.d2,
                p_value: res.p_value,
                method: Method::Bootstrap,
                n1: s1.len(),
                n2: s2.len(),
                r1: c1.value,
                r2: c2.value,
                runtime_seconds: start.elapsed().as_secs_f64(),
                seed: Some(cfg.master_seed),
                n_bootstrap: Some(cfg.n_bootstrap),
                degenerate_correlation: c1.degenerate || c2.degenerate,
            })
        }
    }
}

fn cmd_bench(args: &BenchArgs) -> ExitCode {
    let tests: Vec<BenchTest> = match args
        .tests
        .split(',')
        .map(|t| BenchTest::parse(t.trim()).ok_or(t.trim()))
        .collect::<Result<_, _>>()
    {
        Ok(tests) => tests,
        Err(tag) => {
            eprintln!("error: unknown test tag '{tag}' (expected ff, peacock, ff-bootstrap)");
            return ExitCode::from(EXIT_USAGE_ERROR);
        }
    };
    let sizes: Vec<usize> = match args
        .sizes
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
    {
        Ok(sizes) => sizes,
        Err(_) => {
            eprintln!("error: --sizes must be a comma-separated list of integers");
            return ExitCode::from(EXIT_USAGE_ERROR);
        }
    };
    if args.replicates < 1 || sizes.iter().any(|&n| n < 1) {
        eprintln!("error: sizes and --replicates must be positive");
        return ExitCode::from(EXIT_USAGE_ERROR);
    }

    println!("test,n,replicates,workers,mean_seconds");
    let mut stream_index = 0u64;
    for &test in &tests {
        for &n in &sizes {
            let mut total = 0.0f64;
            for _ in 0..args.replicates {
                let s1 = normal_sample(n, args.seed, stream_index);
                let s2 = normal_sample(n, args.seed, stream_index + 1);
                stream_index += 2;
                let start = Instant::now();
                let result = match test {
                    BenchTest::Ff => ff_test(&s1, &s2).map(|_| ()),
                    BenchTest::Peacock => peacock_statistic(&s1, &s2).map(|_| ()),
                    BenchTest::FfBootstrap => {
                        let cfg = BootstrapConfig {
                            n_bootstrap: args.n_bootstrap,
                            master_seed: args.seed,
                            workers: args.threads,
                        };
                        bootstrap_pvalue(&s1, &s2, &cfg).map(|_| ())
                    }
                };
                if let Err(e) = result {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_DATA_ERROR);
                }
                total += start.elapsed().as_secs_f64();
            }
            let workers = match test {
                BenchTest::FfBootstrap => args.threads,
                _ => 1,
            };
            println!(
                "{},{},{},{},{}",
                test.tag(),
                n,
                args.replicates,
                workers,
                format_sig(total / args.replicates as f64, 4)
            );
        }
    }
    ExitCode::SUCCESS
}

fn normal_sample(n: usize, seed: u64, index: u64) -> Sample2D {
    let mut rng = derive_stream(seed, index);
    let points: Vec<Point2D> = (0..n)
        .map(|_| Point2D::new(standard_normal(&mut rng), standard_normal(&mut rng)))
        .collect();
    Sample2D::new(points, format!("bench-{index}")).expect("finite generated sample")
}
