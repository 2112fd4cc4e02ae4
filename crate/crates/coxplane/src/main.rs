//! Command-line surface: info, nc, clusters, verify, project.
//!
//! Exit codes: 0 success (and, for `verify`, all recorded expectations
//! matched), 1 verification mismatch, 2 usage error (unknown type, bad
//! flags, bad tolerance, exceeded budget), 3 internal error.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coxplane_core::clusters::{enumerate_clusters, Sign};
use coxplane_core::coxeter::TypeLabel;
use coxplane_core::criteria::{verify_criterion, Criterion};
use coxplane_core::noncrossing::{
    block_hulls, conjugation_classes, enumerate_interval, nc_criterion_a, nc_criterion_d,
    partition_diagram, verify_nc, NcCriterion,
};
use coxplane_core::CoxError;
use serde::Serialize;

use coxplane::document::{
    self, expanded_configuration, new_document, partition_diagram_entry, projected_configuration,
    DiagramDocument, DocMismatch, DocReport, NamedDiagram, MISMATCH_CAP,
};
use coxplane::expect::expected_exact;
use coxplane::scene::{root_name, Projection, Scene};
use coxplane::svg;

/// Parabolic-enumeration cap applied when --budget is absent. Sized for
/// every rank at most 4 plus H3 through D6; larger systems fall back to an
/// interval-only report.
const DEFAULT_NC_BUDGET: usize = 5000;

#[derive(Parser)]
#[command(
    name = "coxplane",
    version,
    about = "Coxeter-plane diagrams for noncrossing partitions and cluster compatibility"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print group invariants and the projected orbit structure.
    Info {
        type_label: String,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Classify parabolic subgroups as noncrossing or crossing.
    Nc {
        type_label: String,
        /// Write one SVG per conjugation-class representative.
        #[arg(long, value_name = "DIR")]
        figures: Option<PathBuf>,
        /// Parabolic enumeration cap.
        #[arg(long, value_name = "N")]
        budget: Option<usize>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Enumerate clusters, check the Catalan count, and report tau-orbits.
    Clusters {
        type_label: String,
        /// Write one SVG per cluster.
        #[arg(long, value_name = "DIR")]
        figures: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Check geometric criteria against the algebraic oracles.
    Verify {
        type_label: String,
        /// Comma-separated subset of cl1,cl2,cl3,cl4,cl5,ncA,ncD.
        #[arg(long, value_delimiter = ',', required = true)]
        criteria: Vec<String>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Emit the projected orbit configuration as a document.
    Project {
        type_label: String,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // A closed output pipe (e.g. piping into `head`) aborts printing with a
    // panic; treat that as a normal early exit rather than an internal error.
    let default_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(move |info| {
        if !panic_is_broken_pipe(info.payload()) {
            default_hook(info);
        }
    }));
    let cli = Cli::parse();
    let tol = match read_tolerance() {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match std::panic::catch_unwind(move || run(cli, tol)) {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
        Err(payload) if panic_is_broken_pipe(payload.as_ref()) => ExitCode::SUCCESS,
        Err(_) => {
            // The panic hook has already printed the message.
            ExitCode::from(3)
        }
    }
}

fn panic_is_broken_pipe(payload: &(dyn std::any::Any + Send)) -> bool {
    payload
        .downcast_ref::<String>()
        .map(String::as_str)
        .or_else(|| payload.downcast_ref::<&str>().copied())
        .is_some_and(|m| m.contains("Broken pipe"))
}

/// COXPLANE_TOL overrides the document-validation tolerance. Geometric
/// predicates in the core use fixed tolerances proven against the minimum
/// feature separations, so the override applies to artifact checks only.
fn read_tolerance() -> Result<f64, String> {
    match std::env::var("COXPLANE_TOL") {
        Err(_) => Ok(1e-9),
        Ok(raw) => {
            let v: f64 = raw
                .parse()
                .map_err(|_| format!("COXPLANE_TOL {raw:?} is not a number"))?;
            if v > 0.0 && v < 1e-3 {
                Ok(v)
            } else {
                Err(format!("COXPLANE_TOL {v} outside (0, 1e-3)"))
            }
        }
    }
}

fn exit_for(e: &Error) -> ExitCode {
    match e {
        Error::Cox(
            CoxError::UnknownType(_) | CoxError::Unsupported(_) | CoxError::BudgetExceeded { .. },
        )
        | Error::Usage(_) => ExitCode::from(2),
        _ => ExitCode::from(3),
    }
}

#[derive(Debug)]
enum Error {
    Cox(CoxError),
    Io(std::io::Error),
    Doc(String),
    Usage(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Cox(e) => write!(f, "{e}"),
            Error::Io(e) => write!(f, "{e}"),
            Error::Doc(m) => write!(f, "invalid document: {m}"),
            Error::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<CoxError> for Error {
    fn from(e: CoxError) -> Error {
        Error::Cox(e)
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Io(e)
    }
}

fn run(cli: Cli, tol: f64) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Info { type_label, json } => cmd_info(&type_label, json.as_deref()),
        Command::Nc {
            type_label,
            figures,
            budget,
            json,
        } => cmd_nc(
            &type_label,
            figures.as_deref(),
            budget.unwrap_or(DEFAULT_NC_BUDGET),
            json.as_deref(),
            tol,
        ),
        Command::Clusters {
            type_label,
            figures,
            json,
        } => cmd_clusters(&type_label, figures.as_deref(), json.as_deref(), tol),
        Command::Verify {
            type_label,
            criteria,
            json,
        } => cmd_verify(&type_label, &criteria, json.as_deref(), tol),
        Command::Project { type_label, json } => cmd_project(&type_label, json.as_deref(), tol),
    }
}

fn parse_label(s: &str) -> Result<TypeLabel, Error> {
    Ok(TypeLabel::parse(s)?)
}

fn write_document(doc: &DiagramDocument, path: &Path, tol: f64) -> Result<(), Error> {
    document::validate(doc, tol).map_err(Error::Doc)?;
    let json = document::to_json(doc);
    let back: DiagramDocument =
        serde_json::from_str(&json).map_err(|e| Error::Doc(e.to_string()))?;
    if back != *doc {
        return Err(Error::Doc("JSON round trip altered the document".into()));
    }
    std::fs::write(path, json)?;
    Ok(())
}

fn write_figure(dir: &Path, name: &str, doc: &DiagramDocument) -> Result<(), Error> {
    std::fs::write(dir.join(format!("{name}.svg")), svg::render(doc))?;
    Ok(())
}

fn ring_summary(counts: &[usize], origins: usize) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < counts.len() {
        let mut j = i;
        while j < counts.len() && counts[j] == counts[i] {
            j += 1;
        }
        parts.push(format!("{} ring{} x {}", j - i, if j - i == 1 { "" } else { "s" }, counts[i]));
        i = j;
    }
    if parts.is_empty() {
        parts.push("0 rings".to_string());
    }
    format!(
        "{} + {} origin point{}",
        parts.join(" + "),
        origins,
        if origins == 1 { "" } else { "s" }
    )
}

#[derive(Serialize)]
struct InfoDump {
    type_label: String,
    rank: usize,
    coxeter_number: usize,
    exponents: Vec<usize>,
    reflections: usize,
    almost_positive_roots: usize,
    catalan: u64,
    orbit: usize,
    rings: Vec<usize>,
    origin_points: usize,
    projection_error: Option<String>,
}

fn cmd_info(label_str: &str, json: Option<&Path>) -> Result<ExitCode, Error> {
    let label = parse_label(label_str)?;
    let sys = coxplane_core::coxeter::build_coxeter_system(label)?;
    println!("type: {}", sys.label);
    println!("rank: {}", sys.n);
    println!("coxeter number h: {}", sys.h);
    let exps: Vec<String> = sys.exponents.iter().map(|e| e.to_string()).collect();
    println!("exponents: {}", exps.join(", "));
    println!("reflections: {}", sys.num_reflections());
    println!("almost positive roots: {}", sys.num_almost_positive());
    println!("catalan number: {}", sys.catalan());
    let orbit = sys.smallest_orbit();
    println!("smallest orbit: {} points", orbit.len());

    let mut rings: Vec<usize> = Vec::new();
    let mut origin_points = 0;
    let mut projection_error = None;
    match Projection::build(label) {
        Ok(proj) => {
            rings = proj.cfg.rings.iter().map(|r| r.count).collect();
            origin_points = proj.cfg.origin_labels.len();
            println!("projection: {}", ring_summary(&rings, origin_points));
        }
        Err(e) => {
            println!("projection: unavailable ({e})");
            projection_error = Some(e.to_string());
        }
    }
    if let Some(path) = json {
        let dump = InfoDump {
            type_label: sys.label.to_string(),
            rank: sys.n,
            coxeter_number: sys.h,
            exponents: sys.exponents.clone(),
            reflections: sys.num_reflections(),
            almost_positive_roots: sys.num_almost_positive(),
            catalan: sys.catalan(),
            orbit: orbit.len(),
            rings,
            origin_points,
            projection_error,
        };
        let mut out = serde_json::to_string_pretty(&dump).expect("info serializes");
        out.push('\n');
        std::fs::write(path, out)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_project(label_str: &str, json: Option<&Path>, tol: f64) -> Result<ExitCode, Error> {
    let label = parse_label(label_str)?;
    let proj = Projection::build(label)?;
    let doc = new_document(
        &proj.sys.label.to_string(),
        proj.sys.h,
        projected_configuration(&proj),
    );
    println!(
        "type {}: {}",
        proj.sys.label,
        ring_summary(
            &proj.cfg.rings.iter().map(|r| r.count).collect::<Vec<_>>(),
            proj.cfg.origin_labels.len()
        )
    );
    for (i, r) in doc.configuration.rings.iter().enumerate() {
        println!(
            "ring {i}: {} points, radius {:.6}, phase {:.6}",
            r.count, r.radius, r.phase
        );
    }
    for o in &doc.configuration.origin {
        println!("origin slot {}: orbit point {}", o.slot, o.orbit);
    }
    if let Some(path) = json {
        write_document(&doc, path, tol)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_nc(
    label_str: &str,
    figures: Option<&Path>,
    budget: usize,
    json: Option<&Path>,
    tol: f64,
) -> Result<ExitCode, Error> {
    let label = parse_label(label_str)?;
    let proj = Projection::build(label)?;
    let sys = &proj.sys;
    let interval = enumerate_interval(sys, &proj.bip);
    println!(
        "type {}: interval [1,c] has {} elements (catalan {})",
        sys.label,
        interval.len(),
        sys.catalan()
    );

    let pars = match sys.enumerate_parabolics(budget) {
        Ok(pars) => pars,
        Err(CoxError::BudgetExceeded { .. }) => {
            println!(
                "parabolic enumeration skipped: more than {budget} subgroups; \
                 interval-only report (raise --budget to classify)"
            );
            return Ok(ExitCode::SUCCESS);
        }
        Err(e) => return Err(e.into()),
    };
    let noncrossing = pars.iter().filter(|p| interval.is_noncrossing(p)).count();
    println!(
        "parabolic subgroups: {} total, {} noncrossing",
        pars.len(),
        noncrossing
    );

    let classes = conjugation_classes(sys, &proj.bip, &pars);
    println!("conjugation classes under <c_plus, c_minus>: {}", classes.len());

    let mut doc = new_document(
        &sys.label.to_string(),
        sys.h,
        projected_configuration(&proj),
    );
    if let Some(dir) = figures {
        std::fs::create_dir_all(dir)?;
    }
    for (ci, class) in classes.iter().enumerate() {
        let rep = &pars[class[0]];
        let rep_diag = partition_diagram(sys, rep, &proj.orbit, &proj.cfg)?;
        let nc_count = class
            .iter()
            .filter(|&&i| interval.is_noncrossing(&pars[i]))
            .count();
        let oracle = interval.is_noncrossing(rep);
        let a = nc_criterion_a(&rep_diag, &proj.cfg);
        let d = nc_criterion_d(&rep_diag, &proj.cfg);
        let gens: Vec<String> = rep.reflections().map(|t| format!("t{t}")).collect();
        println!(
            "class {ci:03}: rank {}, {} member{}, {} noncrossing, representative {} [{}] ncA={} ncD={}",
            rep.rank,
            class.len(),
            if class.len() == 1 { "" } else { "s" },
            nc_count,
            if gens.is_empty() { "{}".to_string() } else { format!("{{{}}}", gens.join(", ")) },
            if oracle { "noncrossing" } else { "crossing" },
            a,
            d
        );
        let name = format!(
            "class-{ci:03}-{}",
            if oracle { "noncrossing" } else { "crossing" }
        );
        let hulls = block_hulls(&rep_diag, &proj.cfg);
        let mut verdicts = BTreeMap::new();
        verdicts.insert("noncrossing".to_string(), oracle);
        verdicts.insert("ncA".to_string(), a);
        verdicts.insert("ncD".to_string(), d);
        let entry = partition_diagram_entry(&proj, &rep_diag, &hulls, name.clone(), verdicts);
        if let Some(dir) = figures {
            let mut fig = new_document(
                &sys.label.to_string(),
                sys.h,
                projected_configuration(&proj),
            );
            fig.diagrams.push(entry.clone());
            write_figure(dir, &name, &fig)?;
        }
        doc.diagrams.push(entry);
    }
    if let Some(dir) = figures {
        println!("figures: {} files in {}", classes.len(), dir.display());
    }

    for crit in [NcCriterion::A, NcCriterion::D] {
        let rep = verify_nc(sys, &proj.bip, crit, budget)?;
        println!(
            "{crit}: {} over {} parabolics ({} false positives, {} false negatives)",
            if rep.exact() { "exact" } else { "not exact" },
            rep.total,
            rep.false_positives.len(),
            rep.false_negatives.len()
        );
        doc.reports.push(nc_report(&rep, None));
    }
    if let Some(path) = json {
        write_document(&doc, path, tol)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn nc_report(rep: &coxplane_core::noncrossing::NcReport, expected: Option<bool>) -> DocReport {
    let mut mismatches = Vec::new();
    for (&set, geometric) in rep
        .false_positives
        .iter()
        .map(|s| (s, true))
        .chain(rep.false_negatives.iter().map(|s| (s, false)))
    {
        if mismatches.len() == MISMATCH_CAP {
            break;
        }
        mismatches.push(DocMismatch {
            a: format!("{set:#x}"),
            b: None,
            geometric,
            algebraic: !geometric,
        });
    }
    DocReport {
        check: rep.criterion.to_string(),
        total: rep.total,
        exact: rep.exact(),
        expected,
        mismatch_count: rep.false_positives.len() + rep.false_negatives.len(),
        mismatches,
    }
}

fn cluster_orbits(scene: &Scene, clusters: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let index: BTreeMap<&[usize], usize> = clusters
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_slice(), i))
        .collect();
    let mut seen = vec![false; clusters.len()];
    let mut orbits = Vec::new();
    for start in 0..clusters.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut stack = vec![start];
        seen[start] = true;
        orbit.insert(start);
        while let Some(cur) = stack.pop() {
            for eps in [Sign::Plus, Sign::Minus] {
                let mut img: Vec<usize> = clusters[cur]
                    .iter()
                    .map(|&r| scene.tau.apply(eps, r))
                    .collect();
                img.sort_unstable();
                let j = index[img.as_slice()];
                if orbit.insert(j) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

fn cluster_entry(scene: &Scene, name: String, cluster: &[usize]) -> NamedDiagram {
    let mut segments = Vec::new();
    for &r in cluster {
        segments.extend(document::doc_segments(
            &scene.exp,
            &scene.diagrams[r].segments,
        ));
    }
    NamedDiagram {
        name,
        kind: "cluster".to_string(),
        segments,
        blocks: Vec::new(),
        verdicts: BTreeMap::new(),
    }
}

fn cmd_clusters(
    label_str: &str,
    figures: Option<&Path>,
    json: Option<&Path>,
    tol: f64,
) -> Result<ExitCode, Error> {
    let label = parse_label(label_str)?;
    let scene = Scene::build(label)?;
    let sys = scene.sys();
    let clusters = enumerate_clusters(sys, &scene.compat);
    let catalan = sys.catalan();
    let count_ok = clusters.len() as u64 == catalan;
    println!(
        "type {}: {} clusters of size {} (catalan {}){}",
        sys.label,
        clusters.len(),
        sys.n,
        catalan,
        if count_ok { "" } else { " MISMATCH" }
    );

    let orbits = cluster_orbits(&scene, &clusters);
    let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    sizes.sort_unstable();
    let sizes_str: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
    println!(
        "tau-orbits: {} classes of sizes [{}]",
        orbits.len(),
        sizes_str.join(", ")
    );

    let mut doc = new_document(
        &sys.label.to_string(),
        sys.h,
        expanded_configuration(&scene.exp),
    );
    // The document records one representative per tau-orbit; figures, when
    // requested, cover every cluster.
    for (oi, orbit) in orbits.iter().enumerate() {
        let rep = orbit[0];
        let names: Vec<String> = clusters[rep]
            .iter()
            .map(|&r| root_name(sys, &scene.ap, r))
            .collect();
        println!(
            "orbit {oi:03}: {} clusters, representative {{{}}}",
            orbit.len(),
            names.join(", ")
        );
        doc.diagrams
            .push(cluster_entry(&scene, format!("orbit-{oi:03}"), &clusters[rep]));
    }
    doc.reports.push(DocReport {
        check: "clusters".to_string(),
        total: clusters.len(),
        exact: count_ok,
        expected: Some(true),
        mismatch_count: usize::from(!count_ok),
        mismatches: Vec::new(),
    });

    if let Some(dir) = figures {
        std::fs::create_dir_all(dir)?;
        for (i, cluster) in clusters.iter().enumerate() {
            let name = format!("cluster-{i:04}");
            let mut fig = new_document(
                &sys.label.to_string(),
                sys.h,
                expanded_configuration(&scene.exp),
            );
            fig.diagrams.push(cluster_entry(&scene, name.clone(), cluster));
            write_figure(dir, &name, &fig)?;
        }
        println!("figures: {} files in {}", clusters.len(), dir.display());
    }
    if let Some(path) = json {
        write_document(&doc, path, tol)?;
    }
    Ok(if count_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify(
    label_str: &str,
    criteria: &[String],
    json: Option<&Path>,
    tol: f64,
) -> Result<ExitCode, Error> {
    let label = parse_label(label_str)?;
    let mut cl_checks: Vec<Criterion> = Vec::new();
    let mut nc_checks: Vec<NcCriterion> = Vec::new();
    for c in criteria {
        if let Some(crit) = Criterion::parse(c) {
            cl_checks.push(crit);
        } else {
            match c.as_str() {
                "ncA" => nc_checks.push(NcCriterion::A),
                "ncD" => nc_checks.push(NcCriterion::D),
                other => {
                    return Err(Error::Usage(format!(
                        "unknown criterion {other:?} (expected cl1..cl5, ncA, ncD)"
                    )))
                }
            }
        }
    }

    let mut all_match = true;
    let mut reports = Vec::new();

    let scene = if cl_checks.is_empty() {
        None
    } else {
        Some(Scene::build(label)?)
    };
    if let Some(scene) = &scene {
        let sys = scene.sys();
        for &crit in &cl_checks {
            let rep = verify_criterion(sys, &scene.exp, &scene.diagrams, &scene.compat, crit);
            let expected = expected_exact(label, crit.name());
            let matched = expected.map(|e| e == rep.exact());
            all_match &= matched.unwrap_or(true);
            let witness = rep.mismatches.first().map(|m| {
                format!(
                    " (first: {} vs {})",
                    root_name(sys, &scene.ap, m.a),
                    root_name(sys, &scene.ap, m.b)
                )
            });
            println!(
                "{}: {} over {} pairs{}{}",
                crit.name(),
                if rep.exact() {
                    "exact".to_string()
                } else {
                    format!("{} mismatches", rep.mismatches.len())
                },
                rep.total_pairs,
                witness.unwrap_or_default(),
                expectation_suffix(expected, rep.exact())
            );
            let mismatches: Vec<DocMismatch> = rep
                .mismatches
                .iter()
                .take(MISMATCH_CAP)
                .map(|m| DocMismatch {
                    a: root_name(sys, &scene.ap, m.a),
                    b: Some(root_name(sys, &scene.ap, m.b)),
                    geometric: m.geometric,
                    algebraic: m.algebraic,
                })
                .collect();
            reports.push(DocReport {
                check: crit.name().to_string(),
                total: rep.total_pairs,
                exact: rep.exact(),
                expected,
                mismatch_count: rep.mismatches.len(),
                mismatches,
            });
        }
    }

    let proj = if nc_checks.is_empty() {
        None
    } else {
        Some(Projection::build(label)?)
    };
    if let Some(proj) = &proj {
        for &crit in &nc_checks {
            let rep = verify_nc(&proj.sys, &proj.bip, crit, DEFAULT_NC_BUDGET)?;
            let name = crit.to_string();
            let expected = expected_exact(label, &name);
            let matched = expected.map(|e| e == rep.exact());
            all_match &= matched.unwrap_or(true);
            println!(
                "{name}: {} over {} parabolics{}",
                if rep.exact() {
                    "exact".to_string()
                } else {
                    format!(
                        "{} mismatches",
                        rep.false_positives.len() + rep.false_negatives.len()
                    )
                },
                rep.total,
                expectation_suffix(expected, rep.exact())
            );
            reports.push(nc_report(&rep, expected));
        }
    }

    if let Some(path) = json {
        let configuration = match (&scene, &proj) {
            (Some(sc), _) => expanded_configuration(&sc.exp),
            (None, Some(pr)) => projected_configuration(pr),
            (None, None) => unreachable!("criteria list is validated non-empty"),
        };
        let (label_str, h) = match (&scene, &proj) {
            (Some(sc), _) => (sc.sys().label.to_string(), sc.sys().h),
            (None, Some(pr)) => (pr.sys.label.to_string(), pr.sys.h),
            (None, None) => unreachable!(),
        };
        let mut doc = new_document(&label_str, h, configuration);
        doc.reports = reports;
        write_document(&doc, path, tol)?;
    }

    println!(
        "verdict: {}",
        if all_match {
            "all recorded expectations matched"
        } else {
            "MISMATCH against recorded expectations"
        }
    );
    Ok(if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn expectation_suffix(expected: Option<bool>, observed: bool) -> String {
    match expected {
        None => " [no recorded expectation]".to_string(),
        Some(e) if e == observed => {
            format!(" [expected {}: match]", if e { "exact" } else { "not exact" })
        }
        Some(e) => format!(
            " [expected {}: MISMATCH]",
            if e { "exact" } else { "not exact" }
        ),
    }
}
