use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use annigraph::theorems::RandomGraphs;
use annigraph::{
    build_ag, build_zd, default_corpus, enumerate_ideals_with, is_reduced, nilradical, run_corpus,
    zero_divisor_set, zr_condition_profile, CorpusSpec, Error, InvariantReport, Limits, RingSpec,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Finite commutative ring workbench: ideal lattices, annihilating-ideal
/// and zero-divisor graphs, and corpus-wide theorem checks.
#[derive(Debug, Parser)]
#[command(name = "annigraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    caps: Caps,
}

#[derive(Debug, Args)]
struct Caps {
    /// Largest ring order that will be built.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_ring_order: Option<u64>,
    /// Largest ideal lattice that will be enumerated.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_ideals: Option<u64>,
    /// Largest graph handed to the clique and coloring searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_search_vertices: Option<u64>,
    /// Backtracking budget per chromatic-number query.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_coloring_steps: Option<u64>,
}

impl Caps {
    fn apply(&self, mut limits: Limits) -> Limits {
        if let Some(v) = self.max_ring_order {
            limits.max_ring_order = v as usize;
        }
        if let Some(v) = self.max_ideals {
            limits.max_ideals = v as usize;
        }
        if let Some(v) = self.max_search_vertices {
            limits.max_search_vertices = v as usize;
        }
        if let Some(v) = self.max_coloring_steps {
            limits.max_coloring_steps = v;
        }
        limits
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summarise a ring: order, characteristic, nilradical, zero-divisors, ideals.
    RingInfo {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build AG(R) or Γ(R) and report its invariants.
    Graph {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Ag)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = GraphFormat::Text)]
        format: GraphFormat,
    },
    /// Run every check over a corpus; exits 5 when any check is violated.
    Verify {
        /// Corpus file; the built-in default corpus when omitted.
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Seed for the corpus' random graphs.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the ideal lattice of a ring.
    Ideals {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the built-in default corpus as JSON.
    DefaultCorpus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Ag,
    Zd,
}

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Violated,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violated) => ExitCode::from(5),
        Err(Failure::Io(path, e)) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) | Error::InvalidSpec(_) | Error::Usage(_) => 2,
                Error::Axiom { .. } => 3,
                Error::Resource { .. } => 4,
            })
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.clone(), e))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let limits = cli.caps.apply(Limits::default());
    match &cli.command {
        Command::RingInfo { spec, format } => ring_info(spec, *format, &limits),
        Command::Graph { spec, kind, format } => graph(spec, *kind, *format, &limits),
        Command::Verify {
            corpus,
            jobs,
            seed,
            format,
        } => verify(corpus.as_ref(), *jobs as usize, *seed, *format, &cli.caps),
        Command::Ideals { spec, format } => ideals(spec, *format, &limits),
        Command::DefaultCorpus => {
            println!("{}", default_corpus().to_json());
            Ok(())
        }
    }
}

fn load_ring(path: &PathBuf, limits: &Limits) -> Result<annigraph::FiniteRing, Failure> {
    let spec = RingSpec::from_json(&read(path)?)?;
    Ok(spec.build_with(limits)?)
}

fn ring_info(path: &PathBuf, format: Format, limits: &Limits) -> Result<(), Failure> {
    let ring = load_ring(path, limits)?;
    let lattice = enumerate_ideals_with(&ring, limits)?;
    let zd = zero_divisor_set(&ring, &lattice);
    let profile = zr_condition_profile(&ring, &lattice, &zd);
    let nil = nilradical(&ring, &lattice);
    let info = serde_json::json!({
        "ring": ring.name(),
        "order": ring.order(),
        "characteristic": ring.characteristic(),
        "reduced": is_reduced(&ring),
        "local": lattice.is_local(),
        "nilradical": lattice.ideal(nil).len(),
        "zero_divisors": zd.len(),
        "zero_divisors_ideal": zd.ideal.map(|i| lattice.label(&ring, i)),
        "zr_profile": profile,
        "ideals": lattice.len(),
        "annihilating_ideals": lattice.annihilating_ideals().len(),
    });
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&info).expect("json")),
        Format::Text => {
            println!("ring: {}", ring.name());
            println!("order: {}", ring.order());
            println!("characteristic: {}", ring.characteristic());
            println!("reduced: {}", is_reduced(&ring));
            println!("local: {}", lattice.is_local());
            println!("nilradical: {}", lattice.ideal(nil).len());
            print!("Z(R): {}", zd.len());
            match zd.ideal {
                Some(i) => println!(" (ideal {})", lattice.label(&ring, i)),
                None => println!(" (not an ideal)"),
            }
            println!("Z(R)^2 = 0: {}", profile.zsq_zero);
            println!("Z(R) prime ideal: {}", profile.z_is_prime_ideal);
            println!(
                "Z(R) = P1 u P2, P1 n P2 = 0: {}",
                profile.z_union_two_primes_meet_zero
            );
            println!("ideals: {}", lattice.len());
            println!("A(R)*: {}", lattice.annihilating_ideals().len());
        }
    }
    Ok(())
}

fn graph(path: &PathBuf, kind: Kind, format: GraphFormat, limits: &Limits) -> Result<(), Failure> {
    let ring = load_ring(path, limits)?;
    let g = match kind {
        Kind::Ag => build_ag(&ring, &enumerate_ideals_with(&ring, limits)?),
        Kind::Zd => build_zd(&ring),
    };
    let report = InvariantReport::compute(&g, limits)?;
    match format {
        GraphFormat::Text => print!("{}", report.render_text(&g)),
        GraphFormat::Json => {
            let out = serde_json::json!({
                "name": g.name(),
                "graph": g.to_json_value(),
                "report": report,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        GraphFormat::Dot => {
            for line in report.render_text(&g).lines() {
                println!("// {line}");
            }
            print!("{}", g.export_dot());
        }
    }
    Ok(())
}

fn verify(
    path: Option<&PathBuf>,
    jobs: usize,
    seed: Option<u64>,
    format: Format,
    caps: &Caps,
) -> Result<(), Failure> {
    let mut corpus = match path {
        Some(p) => CorpusSpec::from_json(&read(p)?)?,
        None => default_corpus(),
    };
    corpus.limits = caps.apply(corpus.limits);
    if let Some(seed) = seed {
        let r = corpus.random_graphs.get_or_insert(RandomGraphs {
            count: 0,
            max_vertices: 10,
            seed,
        });
        r.seed = seed;
    }
    let start = Instant::now();
    let report = run_corpus(&corpus, jobs)?;
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    eprintln!(
        "checked {} subjects with {jobs} job(s) in {:.2?}",
        report.subjects,
        start.elapsed()
    );
    if report.is_clean() {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn ideals(path: &PathBuf, format: Format, limits: &Limits) -> Result<(), Failure> {
    let ring = load_ring(path, limits)?;
    let lattice = enumerate_ideals_with(&ring, limits)?;
    let rows: Vec<serde_json::Value> = (0..lattice.len())
        .map(|i| {
            serde_json::json!({
                "index": i,
                "label": lattice.label(&ring, i),
                "size": lattice.ideal(i).len(),
                "annihilator": lattice.annihilator(i),
                "prime": lattice.is_prime(i),
                "maximal": lattice.is_maximal(i),
                "minimal_prime": lattice.is_minimal_prime(i),
                "annihilating": lattice.is_annihilating(i),
            })
        })
        .collect();
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "ring": ring.name(),
                "ideals": rows,
            }))
            .expect("json")
        ),
        Format::Text => {
            println!("ring: {} ({} ideals)", ring.name(), lattice.len());
            for i in 0..lattice.len() {
                let mut flags = Vec::new();
                if lattice.is_maximal(i) {
                    flags.push("maximal");
                } else if lattice.is_prime(i) {
                    flags.push("prime");
                }
                if lattice.is_minimal_prime(i) {
                    flags.push("minimal-prime");
                }
                if lattice.is_annihilating(i) {
                    flags.push("annihilating");
                }
                println!(
                    "{i:>4}  {:<24} size {:<5} Ann = {:<16} {}",
                    lattice.label(&ring, i),
                    lattice.ideal(i).len(),
                    lattice.label(&ring, lattice.annihilator(i)),
                    flags.join(" ")
                );
            }
        }
    }
    Ok(())
}
