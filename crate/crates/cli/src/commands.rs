use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use mcfilter::errorsim::{self, monte_carlo_with_depth, Graph, SimReport};
use mcfilter::filter::{min_filter, product_filter, FilterMode};
use mcfilter::ingest::{self, CsvOptions};
use mcfilter::{markov, spectral, Embedding, Error};

use crate::args::{CircleArgs, EmbedArgs, FilterKind, GraphSpec, SimulateArgs};
use crate::svg;
use crate::CliError;

/// Arc segments used to color circle embeddings.
const CIRCLE_SEGMENTS: usize = 8;

fn stage<T>(name: &'static str, result: mcfilter::Result<T>) -> Result<T, CliError> {
    result.map_err(|source| CliError::Stage { stage: name, source })
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn check_epsilon(epsilon: f64) -> Result<(), CliError> {
    if epsilon > 0.0 && epsilon.is_finite() {
        Ok(())
    } else {
        Err(usage(format!("--epsilon must be positive, got {epsilon}")))
    }
}

fn check_depth(k: usize) -> Result<(), CliError> {
    if k >= 2 {
        Ok(())
    } else {
        Err(usage(format!("--filter-k must be at least 2, got {k}")))
    }
}

/// `index,phi1,..,label`, LF line endings, shortest round-trip floats.
pub fn embedding_csv(e: &Embedding, labels: Option<&[usize]>) -> String {
    let mut out = String::from("index");
    for c in 1..=e.dims() {
        let _ = write!(out, ",phi{c}");
    }
    out.push_str(",label\n");
    for (i, p) in e.points().enumerate() {
        let _ = write!(out, "{i}");
        for x in p {
            let _ = write!(out, ",{x}");
        }
        match labels {
            Some(l) => {
                let _ = writeln!(out, ",{}", l[i]);
            }
            None => out.push_str(",\n"),
        }
    }
    out
}

fn embedding_svg(e: &Embedding, labels: Option<&[usize]>) -> String {
    let pts: Vec<(f64, f64)> = e.points().map(|p| (p[0], p[1])).collect();
    svg::scatter(&pts, labels)
}

/// `dir/stem.ext` → `dir/stem{suffix}.ext`.
pub fn suffixed(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}{suffix}.{}", ext.to_string_lossy()),
        None => format!("{stem}{suffix}"),
    };
    path.with_file_name(name)
}

pub fn run_embed(args: &EmbedArgs, out: &mut dyn Write) -> Result<(), CliError> {
    check_epsilon(args.epsilon)?;
    if !(2..=3).contains(&args.dims) {
        return Err(usage(format!("--dims must be 2 or 3, got {}", args.dims)));
    }
    if args.filter != FilterKind::None {
        check_depth(args.filter_k)?;
    }

    let options = CsvOptions {
        label_column: args.label_col,
        has_header: args.header,
        skip_columns: args.skip_col.clone(),
    };
    let cloud = stage("load", ingest::load_csv_path(&args.input, &options))?;
    let cloud = ingest::standardize(&cloud);
    let w = stage("kernel", markov::gaussian_kernel(&cloud, args.epsilon))?;
    let p = stage("normalize", markov::column_normalize(&w))?;
    let p_star = stage("delazify", markov::delazify(&p))?;

    let mode = if args.lenient {
        FilterMode::Lenient
    } else {
        FilterMode::Strict
    };
    let weights = match args.filter {
        FilterKind::None => p_star.into_matrix(),
        FilterKind::Min => {
            let report = stage("filter", min_filter(&p_star, args.filter_k, mode))?;
            report_filter(out, &report)?;
            report.q.into_matrix()
        }
        FilterKind::Product => {
            let report = stage("filter", product_filter(&p_star, mode))?;
            report_filter(out, &report)?;
            report.q.into_matrix()
        }
    };
    let embedding = stage("embed", spectral::embed(&weights, args.dims))?;
    if !embedding.trivial_is_constant {
        writeln!(out, "warning: trivial eigenvector is not constant")?;
    }
    writeln!(out, "points: {} (d = {})", cloud.n(), cloud.d())?;
    writeln!(out, "eigenvalues: {:?}", embedding.eigenvalues)?;

    let labels = cloud.labels();
    if let Some(l) = labels {
        if cloud.label_names().len() == 2 {
            let fit = stage("classify", spectral::halfspace_error(&embedding, l))?;
            writeln!(out, "half-space error: {:.1}%", 100.0 * fit.error_rate)?;
        }
    }
    if let Some(path) = &args.out_csv {
        write_file(path, &embedding_csv(&embedding, labels))?;
    }
    if let Some(path) = &args.out_svg {
        write_file(path, &embedding_svg(&embedding, labels))?;
    }
    Ok(())
}

fn report_filter(out: &mut dyn Write, report: &mcfilter::FilterReport) -> Result<(), CliError> {
    writeln!(out, "filter removed {} supported pairs", report.zeroed_pairs)?;
    if !report.annihilated_columns.is_empty() {
        writeln!(
            out,
            "warning: {} column(s) annihilated",
            report.annihilated_columns.len()
        )?;
    }
    Ok(())
}

pub fn run_circle(args: &CircleArgs, out: &mut dyn Write) -> Result<(), CliError> {
    check_epsilon(args.epsilon)?;
    check_depth(args.filter_k)?;
    let outcome = stage(
        "circle",
        errorsim::circle_experiment(args.points, args.epsilon, args.edges, args.filter_k, args.seed),
    )?;
    let labels: Vec<usize> = (0..args.points)
        .map(|i| i * CIRCLE_SEGMENTS / args.points)
        .collect();

    writeln!(
        out,
        "circle: {} points, epsilon {}, {} injected edges, seed {}",
        args.points, args.epsilon, args.edges, args.seed
    )?;
    for (name, e) in [("P", &outcome.p_embedding), ("Q", &outcome.q_embedding)] {
        writeln!(
            out,
            "{name}: radius ratio {:.6}, cyclic order preservation {:.3}",
            errorsim::radius_ratio(e),
            errorsim::cyclic_order_preservation(e)
        )?;
    }
    if let Some(path) = &args.out_csv {
        write_file(&suffixed(path, "_p"), &embedding_csv(&outcome.p_embedding, Some(&labels)))?;
        write_file(&suffixed(path, "_q"), &embedding_csv(&outcome.q_embedding, Some(&labels)))?;
    }
    if let Some(path) = &args.out_svg {
        write_file(&suffixed(path, "_p"), &embedding_svg(&outcome.p_embedding, Some(&labels)))?;
        write_file(&suffixed(path, "_q"), &embedding_svg(&outcome.q_embedding, Some(&labels)))?;
    }
    Ok(())
}

fn load_graph(spec: &GraphSpec) -> Result<Graph, CliError> {
    match spec {
        GraphSpec::Cycle(n) if *n >= 3 => Ok(Graph::cycle(*n)),
        GraphSpec::Grid(m) if *m >= 2 => Ok(Graph::grid(*m)),
        GraphSpec::Cycle(_) | GraphSpec::Grid(_) => Err(usage(format!("graph {spec} is too small"))),
        GraphSpec::File(path) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Stage {
                stage: "graph",
                source: Error::Io {
                    path: path.clone(),
                    source,
                },
            })?;
            stage("graph", Graph::parse_edge_list(&text))
        }
    }
}

pub fn simulation_csv(report: &SimReport) -> String {
    let mut out = String::from("trial,N_ordered,N_unordered\n");
    for (t, (o, u)) in report
        .ordered_counts
        .iter()
        .zip(&report.unordered_counts)
        .enumerate()
    {
        let _ = writeln!(out, "{t},{o},{u}");
    }
    out
}

pub fn simulation_text(spec: &GraphSpec, report: &SimReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph: {spec} (n = {}, c = {})", report.n, report.c);
    let _ = writeln!(s, "edge probability: {}", report.p);
    let _ = writeln!(s, "filter depth: {}", report.depth);
    let _ = writeln!(s, "trials: {} (seed {})", report.trials, report.seed);
    let _ = writeln!(s, "mean added edges: {:.3}", report.mean_added());
    let _ = writeln!(
        s,
        "mean surviving errors (unordered): {:.4} (standard error {:.4})",
        report.mean_unordered(),
        report.standard_error()
    );
    let _ = writeln!(s, "mean surviving errors (ordered): {:.4}", report.mean_ordered());
    let _ = writeln!(s, "bound: {:.6}", report.bound);
    let _ = writeln!(
        s,
        "mean annihilated columns: {:.3} / {}",
        report.mean_annihilated(),
        report.n
    );
    if report.annihilated_counts.iter().all(|&a| a == report.n) {
        let _ = writeln!(s, "all columns annihilated in every trial");
    }
    let verdict = if report.passes() { "PASS" } else { "FAIL" };
    let _ = writeln!(s, "result: {verdict} (mean <= bound + 2 standard errors)");
    s
}

pub fn run_simulate(args: &SimulateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    check_depth(args.filter_k)?;
    if !(0.0..1.0).contains(&args.p) {
        return Err(usage(format!("--p must lie in [0, 1), got {}", args.p)));
    }
    if args.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    let graph = load_graph(&args.graph)?;
    let report = stage(
        "simulate",
        monte_carlo_with_depth(&graph, args.p, args.trials, args.seed, args.filter_k),
    )?;
    let text = simulation_text(&args.graph, &report);
    out.write_all(text.as_bytes())?;
    if let Some(path) = &args.out_csv {
        write_file(path, &simulation_csv(&report))?;
    }
    if let Some(path) = &args.out_report {
        write_file(path, &text)?;
    }
    Ok(())
}
