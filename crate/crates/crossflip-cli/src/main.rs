//! Terminal front end: load complexes from facet files or bundled
//! fixtures, run checks and searches, emit flat key=value reports.

mod fixtures;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use crossflip::{
    all_vertex_links_isomorphic, betti_f2, build_bundle_double, classify_surface,
    cross_polytope_boundary, dunce_relations, explore_flip_graph, find_coloring, flip_catalog, io,
    is_normal_pseudomanifold, orientable_bundle_16, reduce, singular_faces,
    stacked_cross_polytopal_sphere, standard_sphere, suspension_tower, twisted_bundle_12,
    BundleKind, Complex, Coloring, Face, ReduceOptions,
};

#[derive(Parser)]
#[command(name = "crossflip", version, about = "Balanced triangulations and cross-flips")]
struct Cli {
    /// Cap the number of worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the f-vector and Euler characteristic of a complex.
    Fvector {
        /// Facet file path or bundled fixture name.
        input: String,
    },
    /// Compute structural invariants, optionally against expectations.
    Check {
        input: String,
        /// Expected f-vector as comma-separated counts starting with 1.
        #[arg(long)]
        expect_f: Option<String>,
        /// Expected Betti numbers over the two-element field.
        #[arg(long)]
        expect_betti: Option<String>,
        /// Coloring file to verify instead of searching for one.
        #[arg(long)]
        coloring: Option<String>,
        /// Facet-order file to verify as a shelling.
        #[arg(long)]
        shelling: Option<String>,
        /// Edge file whose edges must all be present.
        #[arg(long)]
        protect: Option<String>,
        /// Classify the underlying closed surface (2-complexes).
        #[arg(long)]
        surface: bool,
        /// Test whether all vertex links are pairwise isomorphic.
        #[arg(long)]
        links: bool,
    },
    /// Barycentrically subdivide a complex.
    Subdivide {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a named complex from a recipe.
    ///
    /// Recipes: cross-polytope:D, simplex-sphere:D, stacked:D:N,
    /// bundle:twisted, bundle:orientable, double:twisted,
    /// double:orientable, suspend:K (needs --base).
    Construct {
        recipe: String,
        /// Input complex for recipes that transform one.
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a smaller balanced triangulation by cross-flips.
    Reduce {
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Total number of flips allowed.
        #[arg(long, default_value_t = 500)]
        budget: usize,
        /// Random up-flips applied when no down-flip is available.
        #[arg(long, default_value_t = 3)]
        upflip_burst: usize,
        /// Stop once the complex has at most this many vertices.
        #[arg(long)]
        target_f0: Option<usize>,
        /// Edge file of edges no flip may remove.
        #[arg(long)]
        protect: Option<String>,
        /// Write the best complex found here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the flip-by-flip history here.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Explore the flip graph up to isomorphism, below a vertex cap.
    Flipgraph {
        input: String,
        /// Do not up-flip from complexes with this many vertices or more.
        #[arg(long, default_value_t = 10)]
        cap: usize,
        /// Restrict to the generating subset of templates.
        #[arg(long)]
        sufficient: bool,
        /// Write the graph in DOT format here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List bundled fixtures and per-dimension flip-catalog sizes.
    Catalog,
}

enum AppError {
    Usage(String),
    Lib(crossflip::Error),
}

impl From<crossflip::Error> for AppError {
    fn from(e: crossflip::Error) -> Self {
        AppError::Lib(e)
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Lib(crossflip::Error::Io(e))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .ok();
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

/// Resolves an input as a file path first, then as a fixture name.
fn load_complex(input: &str) -> Result<Complex, AppError> {
    let text = load_text(input)?;
    Ok(io::read_facets(&text)?)
}

fn load_text(input: &str) -> Result<String, AppError> {
    if Path::new(input).is_file() {
        return Ok(fs::read_to_string(input)?);
    }
    if let Some(fx) = fixtures::find(input) {
        return Ok(fixtures::load(fx));
    }
    if let Some(text) = fixtures::load_aux(input) {
        return Ok(text);
    }
    Err(AppError::Usage(format!(
        "{input}: not a file and not a bundled fixture"
    )))
}

fn coloring_for(complex: &Complex) -> Result<Coloring, AppError> {
    find_coloring(complex).ok_or_else(|| {
        AppError::Lib(crossflip::Error::NotBalanced(
            (complex.dim().max(0) as usize) + 1,
        ))
    })
}

fn counts(list: &str) -> Result<Vec<usize>, AppError> {
    list.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| AppError::Usage(format!("bad count {t:?} in {list:?}")))
        })
        .collect()
}

fn joined(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn write_out(path: &Path, text: &str) -> Result<(), AppError> {
    fs::write(path, text)?;
    Ok(())
}

/// Prints one report line; exits quietly if the reader closed the pipe.
fn emit_line(line: std::fmt::Arguments) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}

macro_rules! report {
    ($($arg:tt)*) => { emit_line(format_args!($($arg)*)) };
}

fn run(command: Command) -> Result<bool, AppError> {
    match command {
        Command::Fvector { input } => {
            let c = load_complex(&input)?;
            let f = c.f_vector();
            report!("f={}", joined(&f.0));
            report!("euler={}", f.euler_characteristic());
            Ok(true)
        }
        Command::Check {
            input,
            expect_f,
            expect_betti,
            coloring,
            shelling,
            protect,
            surface,
            links,
        } => {
            let c = load_complex(&input)?;
            let mut ok = true;
            let f = c.f_vector();
            report!("dim={}", c.dim());
            report!("f={}", joined(&f.0));
            report!("euler={}", f.euler_characteristic());
            match coloring {
                Some(file) => {
                    let k = io::read_coloring(&load_text(&file)?)?;
                    let rank = (c.dim().max(0) as usize) + 1;
                    let proper = k.is_proper(&c) && k.class_sizes().len() == rank;
                    report!("coloring_proper={proper}");
                    ok &= proper;
                }
                None => {
                    let found = find_coloring(&c);
                    report!("balanced={}", found.is_some());
                    if let Some(k) = &found {
                        report!("color_classes={}", joined(&k.class_sizes()));
                    }
                }
            }
            report!("pseudomanifold={}", c.is_pseudomanifold());
            report!("normal={}", is_normal_pseudomanifold(&c));
            let betti = betti_f2(&c);
            report!("betti={}", joined(&betti.betti));
            if c.dim() == 2 && c.is_pure() {
                let sing = singular_faces(&c)?;
                report!("singular_edges={}", sing.edges.len());
                report!("singular_vertices={}", sing.vertices.len());
                report!("singular_f0={}", sing.f0_sing);
                report!("dunce_relations={}", dunce_relations(&c)?);
            }
            if let Some(edge_file) = protect {
                let edges = io::read_edges(&load_text(&edge_file)?)?;
                let present = edges.iter().all(|e| c.has_face(e));
                report!("protected_present={present}");
                ok &= present;
            }
            if let Some(expect) = expect_f {
                let want = counts(&expect)?;
                let got = f.0.clone();
                report!("f_matches={}", got == want);
                ok &= got == want;
            }
            if let Some(expect) = expect_betti {
                let want = counts(&expect)?;
                report!("betti_matches={}", betti.betti == want);
                ok &= betti.betti == want;
            }
            if let Some(order_file) = shelling {
                let order = io::read_face_list(&load_text(&order_file)?)?;
                let valid = crossflip::verify_shelling(&c, &order)?;
                report!("shelling={}", if valid { "valid" } else { "invalid" });
                ok &= valid;
            }
            if surface {
                match classify_surface(&c) {
                    Ok(s) => {
                        report!("surface={}", s.name());
                        report!("orientable={}", s.orientable);
                    }
                    Err(e) => {
                        report!("surface=none ({e})");
                        ok = false;
                    }
                }
            }
            if links {
                report!("links_isomorphic={}", all_vertex_links_isomorphic(&c)?);
            }
            Ok(ok)
        }
        Command::Subdivide { input, out } => {
            let c = load_complex(&input)?.barycentric_subdivision();
            report!("f={}", joined(&c.f_vector().0));
            if let Some(path) = out {
                write_out(&path, &io::write_facets(&c))?;
                report!("out={}", path.display());
            }
            Ok(true)
        }
        Command::Construct { recipe, base, out } => {
            let c = build_recipe(&recipe, base.as_deref())?;
            report!("recipe={recipe}");
            report!("f={}", joined(&c.f_vector().0));
            report!("balanced={}", find_coloring(&c).is_some());
            if let Some(path) = out {
                write_out(&path, &io::write_facets(&c))?;
                report!("out={}", path.display());
            }
            Ok(true)
        }
        Command::Reduce {
            input,
            seed,
            budget,
            upflip_burst,
            target_f0,
            protect,
            out,
            log,
        } => {
            let c = load_complex(&input)?;
            let coloring = coloring_for(&c)?;
            let protected: Vec<Face> = match protect {
                Some(p) => io::read_edges(&load_text(&p)?)?,
                None => Vec::new(),
            };
            let options = ReduceOptions {
                budget,
                seed,
                upflip_burst,
                target_f0,
                protected: protected.clone(),
                time_limit: None,
            };
            let state = reduce(&c, &coloring, &options)?;
            report!("seed={seed}");
            report!("budget={budget}");
            report!("flips={}", state.flips_used);
            report!("start_f0={}", c.n_vertices());
            report!("final_f0={}", state.complex.n_vertices());
            report!("best_f0={}", state.best.n_vertices());
            report!("best_f={}", joined(&state.best.f_vector().0));
            report!("protected={}", protected.len());
            if let Some(t) = target_f0 {
                report!("target_reached={}", state.best.n_vertices() <= t);
            }
            if let Some(path) = out {
                write_out(&path, &io::write_facets(&state.best))?;
                report!("out={}", path.display());
            }
            if let Some(path) = log {
                write_out(&path, &io::write_flip_log(&state.history))?;
                report!("log={}", path.display());
            }
            Ok(true)
        }
        Command::Flipgraph {
            input,
            cap,
            sufficient,
            dot,
        } => {
            let c = load_complex(&input)?;
            let coloring = coloring_for(&c)?;
            let graph = explore_flip_graph(&c, &coloring, cap, sufficient)?;
            report!("nodes={}", graph.nodes.len());
            report!("edges={}", graph.edges.len());
            let f0s: Vec<usize> = graph.nodes.iter().map(|n| n.f0).collect();
            report!("f0_min={}", f0s.iter().min().unwrap());
            report!("f0_max={}", f0s.iter().max().unwrap());
            if let Some(path) = dot {
                write_out(&path, &graph.to_dot())?;
                report!("dot={}", path.display());
            }
            Ok(true)
        }
        Command::Catalog => {
            for d in 2..=3 {
                let templates = flip_catalog(d);
                let sufficient = templates.iter().filter(|t| t.sufficient).count();
                report!(
                    "catalog_d{d}={} sufficient={} (directed templates)",
                    templates.len(),
                    sufficient
                );
            }
            for fx in fixtures::FIXTURES {
                let mut line = String::new();
                write!(
                    line,
                    "fixture={} file={} f={} betti={}",
                    fx.name,
                    fx.file,
                    joined(fx.f),
                    joined(fx.betti)
                )
                .unwrap();
                if let Some(s) = fx.shelling_file {
                    write!(line, " shelling={s}").unwrap();
                }
                if let Some(k) = fx.knot_file {
                    write!(line, " knot={k}").unwrap();
                }
                write!(line, " note={:?}", fx.note).unwrap();
                report!("{line}");
            }
            Ok(true)
        }
    }
}

fn build_recipe(recipe: &str, base: Option<&str>) -> Result<Complex, AppError> {
    let parts: Vec<&str> = recipe.split(':').collect();
    let usage = |msg: &str| Err(AppError::Usage(format!("recipe {recipe:?}: {msg}")));
    let parse = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| AppError::Usage(format!("recipe {recipe:?}: bad number {t:?}")))
    };
    match parts.as_slice() {
        ["cross-polytope", d] => Ok(cross_polytope_boundary(parse(d)?)),
        ["simplex-sphere", d] => Ok(standard_sphere(parse(d)?)),
        ["stacked", d, n] => Ok(stacked_cross_polytopal_sphere(parse(d)?, parse(n)?).0),
        ["bundle", "twisted"] | ["s2xs1-12"] => Ok(twisted_bundle_12().complex),
        ["bundle", "orientable"] => Ok(orientable_bundle_16().complex),
        ["double", "twisted"] | ["bundle2", "twisted"] => {
            Ok(build_bundle_double(BundleKind::Twisted).complex)
        }
        ["double", "orientable"] | ["bundle2", "orientable"] => {
            Ok(build_bundle_double(BundleKind::Orientable).complex)
        }
        ["suspend", k] => match base {
            Some(input) => Ok(suspension_tower(&load_complex(input)?, parse(k)?)),
            None => usage("suspend needs --base"),
        },
        _ => usage(
            "known recipes: cross-polytope:D, simplex-sphere:D, stacked:D:N, bundle:twisted \
             (alias s2xs1-12), bundle:orientable, double:twisted, double:orientable \
             (aliases bundle2:*), suspend:K",
        ),
    }
}

