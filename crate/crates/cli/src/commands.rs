use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::{json, Value};
use tritile::bounds::bound_table;
use tritile::generators::{
    extremal_instance, five_part_instance, parse_metadata, random_coloring, random_graph, random_min_degree_graph,
    stream_seed, PartMethod,
};
use tritile::io::{parse_colored, parse_graph, parse_tiling, write_colored, write_tiling, GraphFile};
use tritile::regularity::{density, dominating_greedy, regularity_refuter, typical_vertex_filter};
use tritile::report::{
    certificate_json, chromatic_json, dominating_json, five_part_json, reduction_json, witness_json, SolveReport,
};
use tritile::solver::{check_tiling, heuristic_tiling, max_mono_tiling_exact_with, verify_tiling};
use tritile::theory::{
    admissible_c, auxiliary_reduction, chromatic_parameters, classify_f2_copies, f2_tiling_exact, five_part_tiler,
};
use tritile::{ColoredGraph, Exact, Graph, Mode, Scalar, VertexSet};

use crate::{BoundsArgs, Cli, CliError, Command, GenerateArgs, SolveArgs, TheoryCommand, VerifyArgs};

pub fn run(cli: &Cli) -> Result<(), CliError> {
    if cli.threads == 0 {
        return Err(CliError::Input("--threads must be at least 1".into()));
    }
    // a second initialisation in the same process is harmless
    let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    match &cli.command {
        Command::Generate(a) => generate(a),
        Command::Solve(a) => solve(a, cli.threads > 1),
        Command::Verify(a) => verify(a),
        Command::Bounds(a) => bounds(a),
        Command::Theory(a) => theory(&a.command),
        Command::Experiment(a) => crate::experiment::run(a, cli.threads > 1),
    }
}

pub fn parse_rational(s: &str, what: &str) -> Result<Exact, CliError> {
    Exact::parse_exact(s).ok_or_else(|| CliError::Input(format!("{what}: cannot read {s:?} as a rational")))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn sidecar_path(instance: &Path) -> PathBuf {
    let mut s = instance.as_os_str().to_owned();
    s.push(".meta");
    PathBuf::from(s)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("value serializes"));
}

fn generate(a: &GenerateArgs) -> Result<(), CliError> {
    if a.extremal {
        let delta = a.delta.ok_or_else(|| CliError::Input("--extremal needs --delta".into()))?;
        let method: PartMethod = a.method.parse().map_err(|e: tritile::Error| CliError::Input(e.to_string()))?;
        let inst = extremal_instance(a.n, delta, method, a.seed)?;
        write(&a.out, &write_colored(&inst.colored_graph))?;
        write(&sidecar_path(&a.out), &inst.metadata())?;
        return Ok(());
    }
    let g = match a.delta {
        Some(delta) => random_min_degree_graph(a.n, delta, stream_seed(a.seed, 0))?,
        None => {
            if !(0.0..=1.0).contains(&a.p_edge) {
                return Err(CliError::Input(format!("--p-edge {} not in [0, 1]", a.p_edge)));
            }
            random_graph(a.n, a.p_edge, stream_seed(a.seed, 0))
        }
    };
    let cg = random_coloring(&g, a.p_red, stream_seed(a.seed, 1))?;
    write(&a.out, &write_colored(&cg))
}

fn load_colored(path: &Path) -> Result<ColoredGraph, CliError> {
    Ok(parse_colored(&read(path)?)?)
}

fn solve(a: &SolveArgs, parallel: bool) -> Result<(), CliError> {
    let g = load_colored(&a.instance)?;
    let (n, delta) = (g.n(), g.graph().min_degree());
    if n == 0 {
        return Err(CliError::Input("instance has no vertices".into()));
    }
    let gamma = parse_rational(&a.gamma, "--gamma")?;
    let mode: Mode = a.mode.into();
    let start = Instant::now();
    let (mut report, tiling) = if a.heuristic {
        let seed = a.seed.ok_or_else(|| CliError::Input("--heuristic needs --seed".into()))?;
        let t = heuristic_tiling(&g, mode, a.iters, seed);
        let b = bound_table(n, delta, Some(gamma), None, None)?;
        (SolveReport::from_heuristic(n, delta, &t, &b), t)
    } else {
        let r = max_mono_tiling_exact_with(&g, mode, a.budget, parallel);
        let (weak, strong) = match mode {
            Mode::Weak => (Some(&r), None),
            Mode::Strong => (None, Some(&r)),
        };
        let b = bound_table(n, delta, Some(gamma), weak, strong)?;
        (SolveReport::from_exact(n, delta, mode, &r, &b), r.tiling)
    };
    let elapsed = start.elapsed().as_millis();
    if !verify_tiling(&g, &tiling) {
        return Err(CliError::Internal("solver produced an invalid tiling".into()));
    }
    let meta_path = sidecar_path(&a.instance);
    if meta_path.exists() {
        let meta = parse_metadata(&read(&meta_path)?)?;
        let bounds: serde_json::Map<String, Value> = meta
            .iter()
            .filter_map(|(k, v)| k.strip_prefix("certificate.").map(|key| (key.to_string(), v.parse::<usize>().ok())))
            .map(|(k, v)| (k, json!(v)))
            .collect();
        if !bounds.is_empty() {
            let best = bounds.values().filter_map(Value::as_u64).min();
            report.certificate = Some(json!({
                "bounds": bounds,
                "best": best,
                "respected": best.is_none_or(|b| report.size as u64 <= b),
            }));
        }
    }
    let text = report.to_json(if a.no_runtime { None } else { Some(elapsed) });
    match &a.out {
        Some(p) => write(p, &(text + "\n"))?,
        None => println!("{text}"),
    }
    if let Some(p) = &a.tiling_out {
        write(p, &write_tiling(&tiling))?;
    }
    Ok(())
}

fn verify(a: &VerifyArgs) -> Result<(), CliError> {
    let g = load_colored(&a.instance)?;
    let t = parse_tiling(&read(&a.tiling)?, a.mode.into())?;
    match check_tiling(&g, &t) {
        Ok(()) => {
            println!("valid: {} triangles", t.len());
            Ok(())
        }
        Err(v) => Err(CliError::Input(format!("invalid tiling: {v:?}"))),
    }
}

fn bounds(a: &BoundsArgs) -> Result<(), CliError> {
    let gamma = parse_rational(&a.gamma, "--gamma")?;
    let b = bound_table(a.n, a.delta, Some(gamma), None, None)?;
    let upper = b.construction_upper.as_ref().map_or("n/a".to_string(), |x| x.to_string());
    if a.json {
        print_json(&json!({
            "n": b.n,
            "delta": b.delta,
            "gamma": b.gamma.to_string(),
            "thm3_lower": b.guaranteed_lower.to_string(),
            "remarkA_upper": upper,
            "bft_weak": b.bft_weak.to_string(),
        }));
    } else {
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, "n={}", b.n);
        let _ = writeln!(out, "delta={}", b.delta);
        let _ = writeln!(out, "gamma={}", b.gamma);
        let _ = writeln!(out, "thm3_lower={}", b.guaranteed_lower);
        let _ = writeln!(out, "remarkA_upper={upper}");
        let _ = writeln!(out, "bft_weak={}", b.bft_weak);
    }
    Ok(())
}

fn named_graph(name: &str) -> Result<Graph, CliError> {
    Ok(match name {
        "bowtie" | "f2" => Graph::bowtie(),
        "k2" => Graph::complete(2),
        "k3" => Graph::complete(3),
        "k4" => Graph::complete(4),
        "c5" => Graph::cycle(5),
        "petersen" => Graph::petersen(),
        path => match parse_graph(&read(Path::new(path))?)? {
            GraphFile::Plain(g) => g,
            GraphFile::Colored(cg) => cg.graph().clone(),
        },
    })
}

fn theory(cmd: &TheoryCommand) -> Result<(), CliError> {
    match cmd {
        TheoryCommand::Chromatic { graph } => {
            let p = chromatic_parameters::<Exact>(&named_graph(graph)?)?;
            print_json(&json!({ "theory": { "chromatic": chromatic_json(&p) } }));
        }
        TheoryCommand::Admissible { k, delta, c_f2 } => {
            let c_f2 = parse_rational(c_f2, "--c-f2")?;
            let c = admissible_c(*k, *delta, &c_f2)?;
            print_json(&json!({ "theory": { "k": k, "delta": delta, "C_F2": c_f2.to_string(), "C": c.to_string() } }));
        }
        TheoryCommand::Reduce { instance, k, delta, seed, c, c_f2, tile, budget } => {
            let base = match (instance, k, delta, seed) {
                (Some(path), _, _, _) => named_graph(&path.to_string_lossy())?,
                (None, Some(k), Some(d), Some(s)) => random_min_degree_graph(*k, *d, *s)?,
                _ => return Err(CliError::Input("give --instance, or --k, --delta and --seed".into())),
            };
            let c_f2 = parse_rational(c_f2, "--c-f2")?;
            let c = match c {
                Some(c) => parse_rational(c, "--c")?,
                None => admissible_c(base.n(), base.min_degree(), &c_f2)?,
            };
            let r = auxiliary_reduction(&base, &c)?;
            let mut out = reduction_json(&r, &c_f2, None);
            if *tile {
                let t = f2_tiling_exact(&r.aux, true, *budget);
                let counts = if t.perfect {
                    let cls = classify_f2_copies(&t.copies, &r.w, r.k, r.delta, &r.c)
                        .map_err(|e| CliError::Internal(e.to_string()))?;
                    Some(cls)
                } else {
                    None
                };
                out = reduction_json(&r, &c_f2, counts.as_ref());
                out["tiling"] = json!({ "perfect": t.perfect, "exact": t.exact, "copies": t.copies.len(), "nodes": t.nodes });
            }
            print_json(&json!({ "theory": { "reduction": out } }));
        }
        TheoryCommand::Pair { instance, split, d, eps, samples, seed } => {
            let g = named_graph(&instance.to_string_lossy())?;
            if *split == 0 || *split >= g.n() {
                return Err(CliError::Input(format!("--split must be in 1..{}", g.n())));
            }
            let (d, eps) = (parse_rational(d, "--d")?, parse_rational(eps, "--eps")?);
            let a = VertexSet::range(g.n(), 0..*split);
            let b = VertexSet::range(g.n(), *split..g.n());
            let dens: Exact = density(&g, &a, &b)?;
            let witness = regularity_refuter(&g, &a, &b, &eps, *samples, *seed)?;
            let (typical, atypical) = typical_vertex_filter(&g, &a, &b, &b, &d, &eps)?;
            // the greedy needs d > 2 eps; report null rather than failing the whole diagnostic
            let dom = dominating_greedy(&g, &a, &b, &d, &eps).ok();
            print_json(&json!({ "regularity": {
                "density": dens.to_string(),
                "eps": eps.to_string(),
                "witness": witness.as_ref().map(witness_json),
                "typical": typical.len(),
                "atypical": atypical.len(),
                "dominating": dom.as_ref().map(dominating_json),
            }}));
        }
        TheoryCommand::FivePart { m, density, p_red, eps, seed } => {
            let eps = parse_rational(eps, "--eps")?;
            let inst = five_part_instance(*m, *density, *p_red, *seed)?;
            let out = five_part_tiler(&inst, &eps);
            if !verify_tiling(&inst.colored_graph, &out.tiling) {
                return Err(CliError::Internal("five-part tiler produced an invalid tiling".into()));
            }
            print_json(&json!({ "theory": { "five_part": five_part_json(&out), "eps": eps.to_string(), "beta": "3/10" } }));
        }
    }
    Ok(())
}

/// Used by the experiment runner for extremal rows.
pub fn extremal_certificate(n: usize, delta: usize, seed: u64) -> Result<(ColoredGraph, Value), CliError> {
    let inst = extremal_instance(n, delta, PartMethod::CirculantCatalog, seed)?;
    let cert = certificate_json(&inst);
    Ok((inst.colored_graph, cert))
}
