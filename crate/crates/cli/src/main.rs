use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use linspec::chromatic::{chromatic_number, is_color_critical, named_graph};
use linspec::designs::{gdd, steiner_triple_system, transversal_design, GroupDivision};
use linspec::expansion::{expand, search_expansion, verify_embedding, Search, DEFAULT_SEARCH_BUDGET};
use linspec::harness::{random_linear_hypergraph, render_records, render_table, verify_all, verify_hypergraph};
use linspec::harness::{CorpusConfig, VerificationReport, VerifyConfig};
use linspec::hypercore::io::{read_graph, read_hypergraph, write_graph, write_hypergraph};
use linspec::shadow::{global_bound_check, lconn_check, shadow};
use linspec::spectral::spectral_radius;
use linspec::{Graph, Hypergraph, SpectralOptions};

#[derive(Parser)]
#[command(name = "linspec", version, about = "Spectral and extremal toolkit for linear uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Iteration {
    /// Stop once the eigenvalue bracket is narrower than this.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 100_000)]
    max_iter: usize,
}

impl Iteration {
    fn options(&self) -> SpectralOptions {
        SpectralOptions { tol: self.tol, max_iter: self.max_iter, ..SpectralOptions::default() }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Table,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius and Perron data of a hypergraph.
    Spectral {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        iteration: Iteration,
        /// Run on each connected component instead of rejecting disconnected input.
        #[arg(long)]
        per_component: bool,
        /// Also print the Perron vector.
        #[arg(long)]
        vector: bool,
    },
    /// Shadow graph plus the shadow-transfer and global bounds.
    Shadow {
        #[arg(long)]
        input: PathBuf,
        /// Where to write the shadow graph.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        iteration: Iteration,
    },
    /// Build a design.
    Design {
        #[command(subcommand)]
        kind: DesignCommand,
    },
    /// r-expansion of a graph.
    Expand {
        #[command(flatten)]
        pattern: Pattern,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact search for an expanded pattern in a linear host.
    Contains {
        #[arg(long)]
        host: PathBuf,
        #[command(flatten)]
        pattern: Pattern,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chromatic number, optionally with a criticality test.
    Chromatic {
        #[command(flatten)]
        pattern: Pattern,
        /// Test (k+1)-colour-criticality for this k+1.
        #[arg(long)]
        critical: Option<usize>,
    },
    /// Seeded random linear hypergraph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every applicable bound on one hypergraph.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Group division file, one group per line.
        #[arg(long)]
        groups: Option<PathBuf>,
        #[command(flatten)]
        iteration: Iteration,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every suite over the design corpus and a random corpus.
    VerifyAll {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        instances: usize,
        #[command(flatten)]
        iteration: Iteration,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DesignCommand {
    /// Steiner triple system on n points.
    Sts {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transversal design TD(r, m), m prime.
    Td {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        groups: Option<PathBuf>,
    },
    /// Group divisible design of type m^k with block size r.
    Gdd {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        groups: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Pattern {
    /// Named graph: k<n>, p<n>, c<n>, e<n>, t<k>_<n>.
    #[arg(long)]
    pattern: Option<String>,
    /// Graph file.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl Pattern {
    fn load(&self) -> Result<Graph, Failure> {
        match (&self.pattern, &self.input) {
            (Some(name), _) => Ok(named_graph(name)?),
            (None, Some(path)) => Ok(read_graph(&read(path)?)?),
            (None, None) => Err(Failure::Input("need --pattern or --input".into())),
        }
    }
}

enum Failure {
    /// Bad input, bad parameters, I/O trouble.
    Input(String),
    /// The computation ran, and something did not hold.
    Verification(String),
}

impl From<linspec::Error> for Failure {
    fn from(e: linspec::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    read_hypergraph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Writes to `out` if given, else to stdout.
fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Spectral { input, iteration, per_component, vector } => {
            let h = load_hypergraph(&input)?;
            let opts = iteration.options();
            if !per_component {
                return spectral_summary(&h, &opts, vector, None);
            }
            for comp in h.components() {
                let sub = h.restrict_to(&comp)?;
                if sub.edge_count() == 0 {
                    println!("component {:?}: isolated", comp);
                    continue;
                }
                spectral_summary(&sub, &opts, vector, Some(&comp))?;
            }
            Ok(())
        }
        Command::Shadow { input, out, iteration } => {
            let h = load_hypergraph(&input)?;
            let opts = iteration.options();
            let g = shadow(&h);
            if let Some(path) = &out {
                emit(Some(path), &write_graph(&g))?;
            }
            println!("shadow_edges {}", g.edge_count());
            let t = lconn_check(&h, &opts)?;
            println!("rho {:.12}", t.rho);
            println!("rho_shadow_scaled {:.12}", t.shadow_scaled);
            println!("gap {:.3e}", t.gap);
            println!("equality {}", t.equality);
            println!("regular {}", t.regular);
            let gb = global_bound_check(&h, &opts)?;
            println!("global_bound {:.12}", gb.bound);
            println!("is_design {}", gb.is_design);
            if t.pass() && gb.pass(1e-6) {
                Ok(())
            } else {
                Err(Failure::Verification("bound check failed".into()))
            }
        }
        Command::Design { kind } => design(kind),
        Command::Expand { pattern, r, out } => {
            let exp = expand(&pattern.load()?, r)?;
            emit(out.as_deref(), &write_hypergraph(exp.hypergraph()))
        }
        Command::Contains { host, pattern, r, budget, out } => {
            let h = load_hypergraph(&host)?;
            let f = pattern.load()?;
            match search_expansion(&h, &f, r, budget)? {
                Search::Found(emb) => {
                    if !verify_embedding(&h, &expand(&f, r)?, &emb) {
                        return Err(Failure::Verification("embedding failed certification".into()));
                    }
                    emit(out.as_deref(), &emb.write())
                }
                Search::Absent => {
                    println!("none");
                    Ok(())
                }
                Search::BudgetExhausted => Err(Failure::Verification(format!("search budget of {budget} nodes exhausted"))),
            }
        }
        Command::Chromatic { pattern, critical } => {
            let g = pattern.load()?;
            println!("chi {}", chromatic_number(&g)?);
            if let Some(k1) = critical {
                let c = is_color_critical(&g, k1)?;
                match c.witness {
                    Some((a, b)) => println!("critical true witness {a} {b}"),
                    None => println!("critical false"),
                }
            }
            Ok(())
        }
        Command::Random { n, r, edges, seed, out } => {
            let sample = random_linear_hypergraph(n, r, edges, seed)?;
            if !sample.reached_target() {
                eprintln!("note: stopped at {} of {} edges", sample.hypergraph.edge_count(), edges);
            }
            emit(out.as_deref(), &write_hypergraph(&sample.hypergraph))
        }
        Command::Verify { input, groups, iteration, format, out } => {
            let h = load_hypergraph(&input)?;
            let groups = groups.map(|p| read(&p).and_then(|t| Ok(GroupDivision::read(&t)?))).transpose()?;
            let cfg = VerifyConfig { spectral: iteration.options(), ..VerifyConfig::default() };
            let name = input.file_stem().map_or_else(|| "input".into(), |s| s.to_string_lossy().into_owned());
            report(&verify_hypergraph(&name, &h, groups, &cfg), format, out.as_deref())
        }
        Command::VerifyAll { seed, instances, iteration, format, out } => {
            let mut cfg = CorpusConfig { random_instances: instances, ..CorpusConfig::default() };
            cfg.verify.spectral = iteration.options();
            report(&verify_all(&cfg, seed)?, format, out.as_deref())
        }
    }
}

fn spectral_summary(h: &Hypergraph, opts: &SpectralOptions, vector: bool, comp: Option<&[usize]>) -> Result<(), Failure> {
    let rep = spectral_radius(h, opts)?;
    let mut text = String::new();
    if let Some(c) = comp {
        writeln!(text, "component {c:?}").unwrap();
    }
    writeln!(text, "rho {:.12}", rep.rho).unwrap();
    writeln!(text, "residual {:.3e}", rep.residual).unwrap();
    writeln!(text, "iterations {}", rep.iterations).unwrap();
    writeln!(text, "converged {}", rep.converged).unwrap();
    writeln!(text, "bracket {:.12} {:.12}", rep.lower, rep.upper).unwrap();
    if vector {
        let xs: Vec<String> = rep.perron.iter().map(|x| format!("{x:.12}")).collect();
        writeln!(text, "perron {}", xs.join(" ")).unwrap();
    }
    print!("{text}");
    if rep.converged {
        Ok(())
    } else {
        Err(Failure::Verification(format!("not converged after {} iterations", rep.iterations)))
    }
}

fn design(kind: DesignCommand) -> Result<(), Failure> {
    let (h, groups, out, groups_out) = match kind {
        DesignCommand::Sts { n, out } => (steiner_triple_system(n)?, None, out, None),
        DesignCommand::Td { r, m, out, groups } => {
            let (h, g) = transversal_design(r, m)?;
            (h, Some(g), out, groups)
        }
        DesignCommand::Gdd { m, k, r, out, groups } => {
            let (h, g) = gdd(m, k, r)?;
            (h, Some(g), out, groups)
        }
    };
    emit(out.as_deref(), &write_hypergraph(&h))?;
    if let (Some(g), Some(path)) = (groups, groups_out) {
        emit(Some(&path), &g.write())?;
    }
    Ok(())
}

fn report(reports: &[VerificationReport], format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let text = match format {
        Format::Table => render_table(reports),
        Format::Records => render_records(reports),
    };
    emit(out, &text)?;
    let failed = reports.iter().filter(|r| !r.pass()).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{failed} of {} reports failed", reports.len())))
    }
}
