mod counting;
mod manifest;
mod render;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use convexham::convexity::{find_non_convex_triangle, find_non_geometric_k5, is_convex_by_k5};
use convexham::{generators, io, oracle, plane, subdrawings};
use convexham::{Certificate, Claims, Drawing, Edge, Error, Lemma, NotConvexEvidence, SimpleDrawing};

use counting::Counting;
use manifest::RunManifest;

/// Largest `n` for which `find` checks the triangle characterization of
/// convexity before constructing anything.
const GATE_MAX_N: usize = 32;

#[derive(Parser)]
#[command(
    name = "convexham",
    version,
    about = "Plane Hamiltonian structures in convex drawings of K_n"
)]
struct Cli {
    /// Write the run manifest to this file instead of stderr.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// Drawing JSON file; stdin when absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a drawing.
    Gen {
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Leave out the crossing list of geometric drawings.
        #[arg(long)]
        omit_crossings: bool,
    },
    /// Decide convexity.
    CheckConvex {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Triangles)]
        method: Method,
    },
    /// Construct a certified plane structure.
    Find {
        task: Task,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        star: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Edge as `u,v`.
        #[arg(long, value_parser = parse_edge)]
        edge: Option<Edge>,
        /// Two edges as `u,v x,y`.
        #[arg(long, value_parser = parse_edge, num_args = 2)]
        edges: Vec<Edge>,
        /// Skip the convexity gate and the oracle.
        #[arg(long)]
        no_verify: bool,
    },
    /// Maximal plane subdrawing and its size.
    MaxPlane {
        #[command(flatten)]
        input: Input,
        /// Extend a plane Hamiltonian cycle instead of starting empty.
        #[arg(long)]
        seed_cycle: bool,
        /// Number of random greedy orders to compare sizes against.
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a certificate against a drawing.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cert: PathBuf,
    },
    /// SVG of a geometric drawing.
    Render {
        #[command(flatten)]
        input: Input,
        /// Certificate whose edges are highlighted.
        #[arg(long)]
        highlight: Option<PathBuf>,
    },
    /// Crossing-query counts of the star-avoiding cycle on random point sets.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "250,500,1000,2000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        star: usize,
        /// Also run the oracle on each result.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    ConvexPosition,
    Twisted,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Triangles,
    K5,
}

#[derive(Clone, Copy, ValueEnum)]
enum Task {
    Hc,
    StPath,
    StarHc,
    EmptyCycle,
    EdgePath,
    MaxPlane,
    TwoEdgePath,
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    let (a, b) = s.split_once(',').ok_or("expected u,v")?;
    let a: usize = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a == 0 || b == 0 {
        return Err("vertices are 1-based".into());
    }
    Edge::try_new(a, b).ok_or_else(|| "endpoints must differ".into())
}

enum Failure {
    Usage(String),
    Domain(Error),
    Other(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

/// Result of a command: stdout text and whether it reports a negative verdict.
struct Output {
    stdout: String,
    ok: bool,
}

impl Output {
    fn json(v: &impl serde::Serialize, ok: bool) -> Self {
        Self {
            stdout: serde_json::to_string(v).expect("output serializes") + "\n",
            ok,
        }
    }
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or("Error")
        .to_string()
}

fn error_json(e: &Error) -> Value {
    match e {
        Error::NotConvexEvidence(ev) => json!({"error": "NotConvexEvidence", "evidence": ev, "message": e.to_string()}),
        Error::NotConvex(t) => json!({"error": "NotConvex", "triangle": t, "message": e.to_string()}),
        _ => json!({"error": error_kind(e), "message": e.to_string()}),
    }
}

fn read_input(input: &Input, m: &mut RunManifest) -> anyhow::Result<Vec<u8>> {
    let bytes = match &input.input {
        Some(p) => std::fs::read(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).context("reading stdin")?;
            buf
        }
    };
    m.hash_input(&bytes);
    Ok(bytes)
}

fn read_drawing(input: &Input, m: &mut RunManifest) -> Result<Drawing, Failure> {
    let bytes = read_input(input, m)?;
    let text = String::from_utf8(bytes).map_err(|e| anyhow::anyhow!("input is not UTF-8: {e}"))?;
    Ok(io::from_json(&text)?)
}

fn read_certificate(path: &PathBuf) -> Result<Certificate, Failure> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| Failure::Domain(Error::Json(e)))
}

/// Refuses drawings with a triangle that has no convex side.
fn convexity_gate<D: SimpleDrawing>(d: &D) -> Result<(), Error> {
    if d.n() > GATE_MAX_N {
        return Ok(());
    }
    if let Some(t) = find_non_convex_triangle(d)? {
        let [a, b, c] = t.triangle;
        let fmt = |e: Option<Edge>| e.map_or_else(|| "-".to_string(), |e| e.to_string());
        let detail = format!(
            "neither side of triangle {a},{b},{c} is convex: {} and {} cross its boundary",
            fmt(t.blocker_a),
            fmt(t.blocker_b)
        );
        return Err(NotConvexEvidence::new(Lemma::NoConvexSide, t.triangle.to_vec(), detail).into());
    }
    Ok(())
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("this task needs {flag}")))
}

struct FindArgs {
    s: Option<usize>,
    t: Option<usize>,
    star: Option<usize>,
    k: Option<usize>,
    edge: Option<Edge>,
    edges: Vec<Edge>,
    verify: bool,
}

fn find<D: SimpleDrawing>(d: &D, raw: &Drawing, task: Task, a: &FindArgs) -> Result<Certificate, Failure> {
    if a.verify {
        convexity_gate(d)?;
    }
    let claims = |f: fn(&mut Claims)| {
        let mut c = Claims {
            plane: true,
            hamiltonian: true,
            ..Claims::default()
        };
        f(&mut c);
        c
    };
    let cert = match task {
        Task::Hc if a.verify => plane::hamiltonian_cycle(d)?,
        Task::Hc => Certificate::cycle(plane::hamiltonian_cycle_vertices(d)?, claims(|_| {})),
        Task::StPath => {
            let (s, t) = (need(a.s, "--s")?, need(a.t, "--t")?);
            if a.verify {
                plane::st_hamiltonian_path(d, s, t)?
            } else {
                let mut c = claims(|_| {});
                c.endpoints = Some((s, t));
                Certificate::path(plane::st_hamiltonian_path_vertices(d, s, t)?, c)
            }
        }
        Task::StarHc => {
            let v = need(a.star, "--star")?;
            if a.verify {
                plane::star_avoiding_hamiltonian_cycle(d, v)?
            } else {
                let mut c = claims(|_| {});
                c.star_avoiding = Some(v);
                Certificate::cycle(plane::star_avoiding_hamiltonian_cycle_vertices(d, v)?, c)
            }
        }
        Task::EmptyCycle => {
            let k = need(a.k, "--k")?;
            let v = a.star.unwrap_or(d.n());
            if a.verify {
                plane::empty_k_cycle(d, k, v)?
            } else {
                let mut c = claims(|c| c.empty_side = true);
                c.hamiltonian = k == d.n();
                Certificate::cycle(plane::empty_k_cycle_vertices(d, k, v)?, c)
            }
        }
        Task::EdgePath => {
            let e = need(a.edge, "--edge")?;
            if a.verify {
                plane::path_containing_edge(d, e)?
            } else {
                let mut c = claims(|_| {});
                c.contains = vec![e];
                Certificate::path(plane::path_containing_edge_vertices(d, e)?, c)
            }
        }
        Task::TwoEdgePath => {
            let (e, f) = match a.edges[..] {
                [e, f] => (e, f),
                _ => return Err(Failure::Usage("this task needs --edges u,v x,y".into())),
            };
            if a.verify {
                plane::geometric_path_with_two_edges(raw, e, f)?
            } else {
                let mut c = claims(|_| {});
                c.contains = vec![e, f];
                Certificate::path(plane::geometric_path_with_two_edges_vertices(raw, e, f)?, c)
            }
        }
        Task::MaxPlane => {
            let sub = subdrawings::greedy_maximal_plane(d, &[], &subdrawings::default_order(d))?;
            let c = Claims {
                plane: true,
                maximal: true,
                ..Claims::default()
            };
            let cert = Certificate::subdrawing(sub.edges, c);
            if a.verify {
                plane::certify(d, cert)?
            } else {
                cert
            }
        }
    };
    Ok(cert)
}

fn max_plane(d: &Drawing, seed_cycle: bool, trials: usize, seed: u64, m: &mut RunManifest) -> Result<Output, Failure> {
    let c = Counting::new(d);
    let size = subdrawings::max_plane_size(&c)?;
    let sub = if seed_cycle {
        let hc = plane::hamiltonian_cycle(&c)?;
        subdrawings::extend_cycle(&c, &hc.vertices)?
    } else {
        subdrawings::greedy_maximal_plane(&c, &[], &subdrawings::default_order(&c))?
    };
    m.add_queries(c.queries());
    m.seeds.push(seed);
    let edges: Vec<Edge> = d.edges().collect();
    let workers = std::thread::available_parallelism()
        .map_or(1, |p| p.get())
        .min(trials.max(1));
    let mut sizes = vec![0usize; trials];
    std::thread::scope(|scope| {
        for (w, chunk) in sizes.chunks_mut(trials.div_ceil(workers).max(1)).enumerate() {
            let edges = &edges;
            let base = w * trials.div_ceil(workers).max(1);
            scope.spawn(move || {
                for (j, slot) in chunk.iter_mut().enumerate() {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream((base + j) as u64);
                    let mut order = edges.clone();
                    order.shuffle(&mut rng);
                    *slot = subdrawings::greedy_maximal_plane(d, &[], &order)
                        .expect("edges are in range")
                        .len();
                }
            });
        }
    });
    let invariant = sizes.iter().all(|&s| s == size) && sub.len() == size;
    let out = json!({
        "size": sub.len(),
        "edges": sub.edges,
        "maximal": sub.maximal,
        "trial_sizes": sizes,
        "size_invariant": invariant,
    });
    Ok(Output::json(&out, invariant))
}

fn bench(sizes: &[usize], seed: u64, star: usize, verify: bool, m: &mut RunManifest) -> Result<Output, Failure> {
    m.seeds.push(seed);
    let mut rows = Vec::new();
    for &n in sizes {
        let d = generators::random_geometric(n, seed)?;
        let c = Counting::new(&d);
        let start = Instant::now();
        if verify {
            plane::star_avoiding_hamiltonian_cycle(&c, star)?;
        } else {
            plane::star_avoiding_hamiltonian_cycle_vertices(&c, star)?;
        }
        let ms = start.elapsed().as_secs_f64() * 1e3;
        m.add_queries(c.queries());
        rows.push((n, c.queries(), ms));
    }
    let slopes: Vec<f64> = rows
        .windows(2)
        .map(|w| ((w[1].1 as f64) / (w[0].1 as f64)).ln() / ((w[1].0 as f64) / (w[0].0 as f64)).ln())
        .collect();
    let rows: Vec<Value> = rows
        .iter()
        .map(|&(n, q, ms)| json!({"n": n, "queries": q, "ms": ms}))
        .collect();
    Ok(Output::json(
        &json!({"task": "star-hc", "seed": seed, "star": star, "rows": rows, "slopes": slopes}),
        true,
    ))
}

fn run(cmd: Command, m: &mut RunManifest) -> Result<Output, Failure> {
    match cmd {
        Command::Gen {
            kind,
            n,
            seed,
            omit_crossings,
        } => {
            let d = match kind {
                GenKind::ConvexPosition => Drawing::from_points(generators::convex_points(n)?),
                GenKind::Twisted => {
                    if n < 3 {
                        return Err(Error::TooFewVertices(n).into());
                    }
                    generators::twisted(n)
                }
                GenKind::Random => {
                    let seed = seed.unwrap_or(0);
                    m.seeds.push(seed);
                    generators::random_geometric(n, seed)?
                }
            };
            Ok(Output {
                stdout: io::to_json(&d, omit_crossings) + "\n",
                ok: true,
            })
        }
        Command::CheckConvex { input, method } => {
            let d = read_drawing(&input, m)?;
            let c = Counting::new(&d);
            let out = match method {
                Method::Triangles => {
                    let w = find_non_convex_triangle(&c)?;
                    json!({
                        "convex": w.is_none(),
                        "method": "triangles",
                        "witness": w.map(|t| json!({"triangle": t.triangle, "blockers": [t.blocker_a, t.blocker_b]})),
                    })
                }
                Method::K5 => {
                    if d.n() < 5 {
                        json!({"convex": is_convex_by_k5(&c)?, "method": "k5", "witness": null})
                    } else {
                        let w = find_non_geometric_k5(&c);
                        json!({
                            "convex": w.is_none(),
                            "method": "k5",
                            "witness": w.map(|(q, class)| json!({"subset": q, "class": class.name()})),
                        })
                    }
                }
            };
            m.add_queries(c.queries());
            Ok(Output::json(&out, true))
        }
        Command::Find {
            task,
            input,
            s,
            t,
            star,
            k,
            edge,
            edges,
            no_verify,
        } => {
            let d = read_drawing(&input, m)?;
            let c = Counting::new(&d);
            let args = FindArgs {
                s,
                t,
                star,
                k,
                edge,
                edges,
                verify: !no_verify,
            };
            let r = find(&c, &d, task, &args);
            if !matches!(task, Task::TwoEdgePath) {
                m.add_queries(c.queries());
            }
            Ok(Output::json(&r?, true))
        }
        Command::MaxPlane {
            input,
            seed_cycle,
            trials,
            seed,
        } => {
            let d = read_drawing(&input, m)?;
            max_plane(&d, seed_cycle, trials, seed, m)
        }
        Command::Verify { input, cert } => {
            let d = read_drawing(&input, m)?;
            let cert = read_certificate(&cert)?;
            let c = Counting::new(&d);
            let diagnosis = oracle::verify(&c, &cert);
            m.add_queries(c.queries());
            Ok(Output::json(&diagnosis, diagnosis.ok))
        }
        Command::Render { input, highlight } => {
            let d = read_drawing(&input, m)?;
            let hl = match highlight {
                Some(p) => read_certificate(&p)?.edges,
                None => Vec::new(),
            };
            Ok(Output {
                stdout: render::svg(&d, &hl)?,
                ok: true,
            })
        }
        Command::Bench {
            sizes,
            seed,
            star,
            verify,
        } => bench(&sizes, seed, star, verify, m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut m = RunManifest::new(args.join(" "));
    let start = Instant::now();
    let result = run(cli.command, &mut m);
    m.wall_ms = start.elapsed().as_millis() as u64;
    let mut stdout = std::io::stdout().lock();
    let code = match result {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stdout, "{}", error_json(&e));
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            1
        }
    };
    let _ = stdout.flush();
    let line = serde_json::to_string(&m).expect("manifest serializes");
    match &cli.manifest {
        Some(p) => {
            if let Err(e) = std::fs::write(p, line + "\n") {
                eprintln!("error: writing manifest {}: {e}", p.display());
                return ExitCode::from(1);
            }
        }
        None => eprintln!("{line}"),
    }
    ExitCode::from(code)
}
