use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use spinal_core::{
    check_lemma21, check_remark22, chromatic_number_exact, complete_minus_clique,
    default_rotations, eq6_bound, face_coloring_from_sources, interlace, minimality_report,
    parse_complex, parse_edge_list, parse_quad, parse_vertex_coloring, permute_rotations,
    quadrangulate, spine_for, verify_surface, Graph, RotationSystem, SpineRecipe, VertexId,
    DEFAULT_SOLVER_CAP,
};

/// Spinal quadrangulations of closed orientable surfaces.
#[derive(Debug, Parser)]
#[command(name = "spinal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the 2-fold interlacement of a spine.
    Interlace {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the spinal quadrangulation of a spine.
    Quadrangulate {
        #[arg(long = "in")]
        input: PathBuf,
        /// Rotation seed; 0 keeps every rotation in ascending order.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a .quad file is a closed orientable surface.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Betti numbers of a graph or a simplicial complex.
    Betti(BettiInput),
    /// Components and handles of the thickened spine, with the Betti identities.
    Thicken {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exact vertex chromatic number with an optimal coloring.
    Chroma {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color the faces of a .quad file by their source vertices.
    Facecolor {
        #[arg(long = "in")]
        input: PathBuf,
        /// Spine vertex coloring file.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spine for a target genus, chromatic number and vertex count.
    Spine {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        chi: u64,
        #[arg(long)]
        vertices: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimality certificate for K_n minus the edges of K_m.
    Family {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        emit_spine: Option<PathBuf>,
    },
    /// Fewest vertices of any quadrangulation of the genus-g surface.
    Bound {
        #[arg(long)]
        genus: u64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct BettiInput {
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    complex: Option<PathBuf>,
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Pass,
    Fail,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_spine(path: &Path) -> Result<Graph> {
    parse_edge_list::<VertexId>(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn rotations_for(spine: &Graph, seed: u64) -> RotationSystem {
    let base = default_rotations(spine);
    if seed == 0 {
        base
    } else {
        permute_rotations(&base, seed)
    }
}

fn verdict(pass: bool) -> Verdict {
    if pass {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn run(cli: Cli) -> Result<Verdict> {
    match cli.command {
        Command::Interlace { input, out } => {
            let il = interlace(&read_spine(&input)?);
            emit(out.as_deref(), &il.graph().to_edge_list())?;
        }
        Command::Quadrangulate { input, seed, out } => {
            let spine = read_spine(&input)?;
            let q = quadrangulate(&spine, &rotations_for(&spine, seed))?;
            emit(out.as_deref(), &q.to_quad_file())?;
        }
        Command::Verify { input } => {
            let parsed = parse_quad(&read(&input)?)
                .with_context(|| format!("parsing {}", input.display()))?;
            let report = verify_surface(&parsed.embedding);
            let header_ok = parsed.header_matches();
            let pass = header_ok && report.passed();
            print!("header={}\n{}", if header_ok { "match" } else { "mismatch" }, report.to_key_values());
            println!("status={}", if pass { "pass" } else { "fail" });
            return Ok(verdict(pass));
        }
        Command::Betti(BettiInput { graph, complex }) => {
            let complex = match (graph, complex) {
                (Some(g), _) => spinal_core::SimplicialComplex::from_graph(&read_spine(&g)?),
                (None, Some(c)) => parse_complex(&read(&c)?)
                    .with_context(|| format!("parsing {}", c.display()))?,
                (None, None) => unreachable!("clap enforces one input"),
            };
            let ep = complex.euler_poincare_check();
            let b = ep.betti;
            println!("b0={}\nb1={}\nb2={}", b.b0, b.b1, b.b2);
            println!("euler={}\neuler_poincare={}", ep.from_counts, ep.holds());
            return Ok(verdict(ep.holds()));
        }
        Command::Thicken { input } => {
            let spine = read_spine(&input)?;
            let handles = check_lemma21(&spine)?;
            let betti = check_remark22(&spine)?;
            let b = handles.spine_betti;
            let s = betti.from_homology;
            println!("comp={}\nhand={}", handles.comp, handles.hand);
            println!("spine_betti={} {} {}", b.b0, b.b1, b.b2);
            println!("surface_betti={} {} {}", s.b0, s.b1, s.b2);
            println!("comp_hand_identity={}", handles.holds());
            println!("betti_identity={}", betti.holds());
            return Ok(verdict(handles.holds() && betti.holds()));
        }
        Command::Chroma { input, cap, out } => {
            let spine = read_spine(&input)?;
            let (chi, witness) = chromatic_number_exact(&spine, cap)?;
            let text = format!("# chi={chi}\n{}", witness.to_file());
            emit(out.as_deref(), &text)?;
            if out.is_some() {
                println!("chi={chi}");
            }
        }
        Command::Facecolor { input, coloring, out } => {
            let parsed = parse_quad(&read(&input)?)
                .with_context(|| format!("parsing {}", input.display()))?;
            let spine_coloring = parse_vertex_coloring::<VertexId>(&read(&coloring)?)
                .with_context(|| format!("parsing {}", coloring.display()))?;
            let faces = face_coloring_from_sources(&parsed.embedding, &spine_coloring)?;
            emit(out.as_deref(), &format!("{}# proper=true\n", faces.to_file()))?;
        }
        Command::Spine { genus, chi, vertices, out } => {
            let recipe = SpineRecipe::new(genus, chi, vertices)?;
            emit(out.as_deref(), &spine_for(&recipe).to_edge_list())?;
        }
        Command::Family { n, m, emit_spine } => {
            let certificate = minimality_report(n, m)?;
            if let Some(path) = emit_spine {
                let spine = complete_minus_clique(n as u32, m as u32)?;
                emit(Some(&path), &spine.to_edge_list())?;
            }
            println!("{certificate}");
        }
        Command::Bound { genus } => println!("{}", eq6_bound(genus)?),
    }
    Ok(Verdict::Pass)
}

/// Failed verdicts exit 1; bad input of any kind exits 2.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<spinal_core::Error>() {
        Some(spinal_core::Error::Verification(_) | spinal_core::Error::ImproperColoring(..)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
