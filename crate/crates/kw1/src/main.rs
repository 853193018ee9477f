use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kw1::output::{render, reports_document, results_document, Format};
use kw1::run::{self, CliError, LemmaConfig, RunConfig, Source};

#[derive(Parser, Debug)]
#[command(name = "kw1", version, about = "Check the first Kac-Weisfeiler conjecture on concrete Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full per-prime verdict.
    Check(Common),
    /// Index over Q and modulo each prime.
    Index(Common),
    /// The p-map in use.
    Pmap(Common),
    /// Bounded center basis.
    Center(Common),
    /// Rank of the bounded center over the p-center.
    Rank(Common),
    /// Largest simple dimension of the reduced enveloping algebras.
    Oracle(Common),
    /// Rank of a polynomial ring over a subring containing the p-th powers.
    Lemma1(Lemma),
    /// List the builtin algebras.
    Examples(Output),
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct Common {
    /// Builtin algebra, e.g. sl2, abelian:3, remark:1:2.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    example: Option<String>,
    /// JSON input document.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Comma-separated primes.
    #[arg(long, value_delimiter = ',', default_value = "3,5", conflicts_with = "prime")]
    primes: Vec<u64>,
    /// A single prime (shorthand for --primes P).
    #[arg(long)]
    prime: Option<u64>,
    /// Degree of the working field over F_p.
    #[arg(long)]
    ext: Option<u32>,
    #[arg(long)]
    degree_bound: Option<u32>,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    /// Attach the oracle estimate to `check` reports.
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct Lemma {
    #[arg(long, value_delimiter = ',', default_value = "x,y")]
    vars: Vec<String>,
    /// A generator polynomial; repeat for several.
    #[arg(long = "gen")]
    generators: Vec<String>,
    #[arg(long, default_value_t = 3)]
    prime: u64,
    #[arg(long)]
    ext: Option<u32>,
    /// Largest total degree of products tried before giving up.
    #[arg(long, default_value_t = 16)]
    bound: usize,
    #[command(flatten)]
    output: Output,
}

impl Common {
    fn source(&self) -> Source {
        match (&self.example, &self.input) {
            (Some(name), _) => Source::Example(name.clone()),
            (None, Some(path)) => Source::Input(path.clone()),
            (None, None) => unreachable!("clap requires one of --example/--input"),
        }
    }

    fn config(&self) -> RunConfig {
        RunConfig {
            primes: self.prime.map_or_else(|| self.primes.clone(), |p| vec![p]),
            ext: self.ext,
            degree_bound: self.degree_bound,
            samples: self.samples,
            seed: self.output.seed,
            with_oracle: self.oracle,
        }
    }
}

fn emit(out: &Output, doc: &serde_json::Value) -> Result<(), CliError> {
    let text = render(doc, out.format).map_err(|e| CliError::Internal(e.to_string()))?;
    match &out.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    run::validate_registry()?;
    let single = |c: &Common, name: &str, f: fn(&kw1::input::ParsedInput, &RunConfig) -> Result<Vec<serde_json::Value>, CliError>| {
        let parsed = run::load_source(&c.source())?;
        let results = f(&parsed, &c.config())?;
        emit(&c.output, &results_document(name, results))?;
        Ok(0)
    };
    match cli.command {
        Command::Check(c) => {
            let parsed = run::load_source(&c.source())?;
            let (reports, code) = run::run_check(&parsed, &c.config())?;
            emit(&c.output, &reports_document(&reports))?;
            Ok(code)
        }
        Command::Index(c) => single(&c, "index", run::run_index),
        Command::Pmap(c) => single(&c, "pmap", run::run_pmap),
        Command::Center(c) => single(&c, "center", run::run_center),
        Command::Rank(c) => single(&c, "rank", run::run_rank),
        Command::Oracle(c) => single(&c, "oracle", run::run_oracle),
        Command::Lemma1(l) => {
            let cfg = LemmaConfig {
                vars: l.vars.clone(),
                generators: l.generators.clone(),
                p: l.prime,
                ext: l.ext,
                stabilization_bound: l.bound,
                seed: l.output.seed,
            };
            let result = run::run_lemma(&cfg)?;
            emit(&l.output, &results_document("lemma1", vec![result]))?;
            Ok(0)
        }
        Command::Examples(o) => {
            emit(&o, &results_document("examples", run::run_examples(o.seed)))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
