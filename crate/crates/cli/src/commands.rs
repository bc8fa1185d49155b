use std::fmt::Write as _;
use std::fs;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use chordpow::chordal::{chordless_cycle, is_chordal};
use chordpow::cones::{entrywise_power, is_psd, CliqueSumSampler};
use chordpow::exponent::{
    conjecture_scan, critical_exponent_clique_formula, estimate_ce_numeric, find_counterexample,
    hset_bipartite, hset_chordal, hset_complete, hset_cycle, point_seed, HSet, Membership,
    ScanConfig, WitnessReport,
};
use chordpow::graph::{max_near_complete_order_fast, parse_graph_stream};
use chordpow::{Graph, PowerFamily};

use crate::args::{Command, Format, GraphArgs, Powers};
use crate::input::load_graph;
use crate::output::{csv_line, json, json_pretty, sig6};
use crate::table1::table1_rows;
use crate::{Outcome, RunConfig, EXIT_NOT_FOUND, EXIT_OK};

pub fn dispatch(command: &Command, config: &RunConfig) -> Outcome {
    let result = match command {
        Command::Ce { graph, powers, grid_step } => cmd_ce(graph, *powers, *grid_step, config),
        Command::Hset { graph, powers } => cmd_hset(graph, *powers, config),
        Command::Witness { graph, alpha, powers, verify, output } => match verify {
            Some(path) => cmd_witness_verify(graph, path, config),
            None => cmd_witness(graph, alpha.expect("clap requires --alpha"), *powers, output, config),
        },
        Command::Verify { graph, alpha_grid, powers, samples, rank } => {
            cmd_verify(graph, alpha_grid, *powers, *samples, *rank, config)
        }
        Command::Table1 { n_max } => cmd_table1(*n_max, config),
        Command::Scan { file, powers, grid_step } => cmd_scan(file, *powers, *grid_step, config),
    };
    result.unwrap_or_else(Outcome::usage)
}

type CmdResult = Result<Outcome, String>;

fn err(e: chordpow::Error) -> String {
    e.to_string()
}

fn with_code(code: i32, stdout: String, stderr: String) -> Outcome {
    Outcome { code, stdout, stderr }
}

/// Closed-form set for `g` when one is known, with the name of the case.
pub fn known_hset(g: &Graph, family: PowerFamily) -> Option<(HSet, &'static str)> {
    if g.n() < 2 {
        return None;
    }
    if g.is_complete() {
        return hset_complete(g.n(), family).ok().map(|h| (h, "complete"));
    }
    if is_chordal(g) {
        return hset_chordal(g, family).ok().map(|h| (h, "chordal"));
    }
    if g.is_cycle() {
        return hset_cycle(g.n(), family).ok().map(|h| (h, "cycle"));
    }
    hset_bipartite(g, family).ok().map(|h| (h, "bipartite"))
}

#[derive(Serialize)]
struct ChordalCe {
    n: usize,
    chordal: bool,
    ce: usize,
    r: usize,
    clique_formula: usize,
    near_complete_minus_two: usize,
    agree: bool,
}

#[derive(Serialize)]
struct BracketCe {
    n: usize,
    chordal: bool,
    chordless_cycle: Vec<usize>,
    r: usize,
    conjectured: usize,
    family: PowerFamily,
    lower: f64,
    upper: f64,
    upper_is_heuristic: bool,
    label: &'static str,
    grid_step: f64,
    grid_points_tested: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    known: Option<String>,
}

fn cmd_ce(args: &GraphArgs, powers: Powers, grid_step: f64, config: &RunConfig) -> CmdResult {
    let g = load_graph(args, config.seed)?;
    if g.n() < 2 {
        return Err(format!("critical exponent needs at least 2 vertices, got {}", g.n()));
    }
    let r = max_near_complete_order_fast(&g).map_err(err)?;
    if is_chordal(&g) {
        let formula = critical_exponent_clique_formula(&g).map_err(err)?;
        let report = ChordalCe {
            n: g.n(),
            chordal: true,
            ce: formula,
            r,
            clique_formula: formula,
            near_complete_minus_two: r - 2,
            agree: formula == r - 2,
        };
        let stdout = match config.format {
            Format::Json => json(&report),
            Format::Csv => {
                "n,chordal,ce,r,clique_formula,near_complete_minus_two,agree\n".to_string()
                    + &csv_line(&[
                        g.n().to_string(),
                        "true".into(),
                        formula.to_string(),
                        r.to_string(),
                        formula.to_string(),
                        (r - 2).to_string(),
                        report.agree.to_string(),
                    ])
            }
            Format::Text => format!(
                "CE {formula}\nr {r}\nchordal: clique formula {formula}, r-2 {} ({})\n",
                r - 2,
                if report.agree { "agree" } else { "DISAGREE" }
            ),
        };
        if !report.agree {
            return Ok(with_code(
                EXIT_NOT_FOUND,
                stdout,
                "error: clique formula and r-2 disagree\n".into(),
            ));
        }
        return Ok(Outcome::ok(stdout));
    }

    let family = PowerFamily::from(powers);
    let bracket = estimate_ce_numeric(&g, family, grid_step, &config.search(), config.seed)
        .map_err(err)?;
    let cycle: Vec<usize> = chordless_cycle(&g).unwrap_or_default().iter().map(|v| v + 1).collect();
    let known = known_hset(&g, family)
        .filter(|(h, _)| h.exact)
        .map(|(h, src)| format!("{h} ({src})"));
    let report = BracketCe {
        n: g.n(),
        chordal: false,
        chordless_cycle: cycle.clone(),
        r,
        conjectured: r - 2,
        family,
        lower: bracket.lower,
        upper: bracket.upper,
        upper_is_heuristic: bracket.upper_is_heuristic,
        label: "heuristic",
        grid_step,
        grid_points_tested: bracket.grid_points_tested,
        known: known.clone(),
    };
    let stdout = match config.format {
        Format::Json => json(&report),
        Format::Csv => {
            "n,chordal,r,conjectured,family,lower,upper,label\n".to_string()
                + &csv_line(&[
                    g.n().to_string(),
                    "false".into(),
                    r.to_string(),
                    (r - 2).to_string(),
                    family.to_string(),
                    format!("{:?}", bracket.lower),
                    format!("{:?}", bracket.upper),
                    "heuristic".into(),
                ])
        }
        Format::Text => {
            let cyc: Vec<String> = cycle.iter().map(usize::to_string).collect();
            let mut s = format!(
                "not chordal (chordless cycle {})\nr {r}\nnumeric bracket [{}, {}] for {family} powers (heuristic: upper bound rests on failed searches)\n",
                cyc.join("-"),
                sig6(bracket.lower),
                sig6(bracket.upper),
            );
            if let Some(k) = known {
                let _ = writeln!(s, "known set: {k}");
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

#[derive(Serialize)]
struct HsetReport<'a> {
    symbolic: String,
    exact: bool,
    source: &'a str,
    hset: &'a HSet,
}

fn cmd_hset(args: &GraphArgs, powers: Powers, config: &RunConfig) -> CmdResult {
    let g = load_graph(args, config.seed)?;
    let family = PowerFamily::from(powers);
    if g.n() < 2 {
        return Err(format!("power sets need at least 2 vertices, got {}", g.n()));
    }
    let (h, source) = known_hset(&g, family).ok_or_else(|| {
        "no closed form for this graph; `ce` reports a numeric bracket".to_string()
    })?;
    let report = HsetReport {
        symbolic: h.to_string(),
        exact: h.exact,
        source,
        hset: &h,
    };
    let stdout = match config.format {
        Format::Json => json(&report),
        Format::Csv => {
            "symbolic,exact,source,lattice,ray_start\n".to_string()
                + &csv_line(&[
                    h.to_string(),
                    h.exact.to_string(),
                    source.into(),
                    serde_json::to_value(h.lattice).unwrap().as_str().unwrap().to_string(),
                    format!("{:?}", h.ray_start),
                ])
        }
        Format::Text => format!(
            "{h}\n{} ({source})\n{}\n",
            if h.exact { "exact" } else { "partial" },
            h.to_json()
        ),
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_witness(
    args: &GraphArgs,
    alpha: f64,
    powers: Powers,
    output: &Option<std::path::PathBuf>,
    config: &RunConfig,
) -> CmdResult {
    if !alpha.is_finite() {
        return Err(format!("--alpha must be finite, got {alpha}"));
    }
    let g = load_graph(args, config.seed)?;
    let family = PowerFamily::from(powers);
    let found = find_counterexample(&g, alpha, family, &config.search(), config.seed).map_err(err)?;
    let Some(w) = found else {
        let stdout = match config.format {
            Format::Json => json(&serde_json::json!({ "found": false, "alpha": alpha, "family": family })),
            _ => "none found in budget\n".into(),
        };
        return Ok(with_code(EXIT_NOT_FOUND, stdout, String::new()));
    };
    let text = w.to_json() + "\n";
    if let Some(path) = output {
        fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    let stdout = match config.format {
        Format::Json => text,
        Format::Csv => w.matrix.to_csv(),
        Format::Text => format!(
            "witness found ({}): image λmin {} at scale {} (threshold {})\n{text}",
            serde_json::to_value(w.construction).unwrap().as_str().unwrap(),
            sig6(w.image_min_eigenvalue),
            sig6(w.image_scale),
            sig6(w.threshold),
        ),
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_witness_verify(args: &GraphArgs, path: &std::path::Path, config: &RunConfig) -> CmdResult {
    if args.input.is_some() || args.family.is_some() {
        return Err("--verify reads the graph from the witness file; give no other graph".into());
    }
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let w = WitnessReport::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let check = w.verify(config.tol_scale, config.witness_threshold).map_err(err)?;
    let stdout = match config.format {
        Format::Json => json(&serde_json::json!({ "valid": check.valid(), "check": check })),
        Format::Csv => {
            "valid,matrix_psd,conforms,image_certified_negative,image_min_eigenvalue,image_scale\n"
                .to_string()
                + &csv_line(&[
                    check.valid().to_string(),
                    check.matrix_psd.to_string(),
                    check.conforms.to_string(),
                    check.image_certified_negative.to_string(),
                    format!("{:?}", check.image.min_eigenvalue),
                    format!("{:?}", check.image.scale),
                ])
        }
        Format::Text => format!(
            "{}\nmatrix PSD: {}\npattern conforms: {}\nimage λmin {} < -{} x {}: {}\n",
            if check.valid() { "valid witness" } else { "INVALID witness" },
            check.matrix_psd,
            check.conforms,
            sig6(check.image.min_eigenvalue),
            sig6(config.witness_threshold),
            sig6(check.image.scale),
            check.image_certified_negative,
        ),
    };
    let code = if check.valid() { EXIT_OK } else { EXIT_NOT_FOUND };
    Ok(with_code(code, stdout, String::new()))
}

#[derive(Serialize)]
struct VerifyRow {
    alpha: f64,
    samples: usize,
    min_relative_eigenvalue: f64,
    failures: usize,
    pass: bool,
    expected: Option<Membership>,
    contradiction: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

#[derive(Serialize)]
struct VerifyReport {
    family: PowerFamily,
    rank: usize,
    expected_set: Option<String>,
    results: Vec<VerifyRow>,
    contradictions: usize,
}

/// Sampling check of one exponent. `failures` counts samples whose image
/// fails the PSD test.
pub(crate) fn sample_check(
    g: &Graph,
    alpha: f64,
    family: PowerFamily,
    samples: usize,
    rank: usize,
    tol_scale: f64,
    seed: u64,
) -> chordpow::Result<(f64, usize)> {
    let sampler = CliqueSumSampler::new(g, rank).nonnegative(family == PowerFamily::Plain);
    let mut rng = ChaCha8Rng::seed_from_u64(point_seed(seed, alpha));
    let mut min_rel = f64::INFINITY;
    let mut failures = 0;
    for _ in 0..samples {
        let image = entrywise_power(&sampler.sample(&mut rng), alpha, family)?;
        let v = is_psd(&image, tol_scale)?;
        min_rel = min_rel.min(v.relative_min());
        failures += usize::from(!v.is_psd);
    }
    Ok((min_rel, failures))
}

fn cmd_verify(
    args: &GraphArgs,
    grid: &[f64],
    powers: Powers,
    samples: usize,
    rank: usize,
    config: &RunConfig,
) -> CmdResult {
    if grid.is_empty() || grid.iter().any(|a| !a.is_finite()) {
        return Err("--alpha-grid must list finite exponents".into());
    }
    if samples == 0 || rank == 0 {
        return Err("--samples and --rank must be positive".into());
    }
    let g = load_graph(args, config.seed)?;
    let family = PowerFamily::from(powers);
    let known = known_hset(&g, family);
    let mut results = Vec::new();
    for &alpha in grid {
        let (min_rel, failures) =
            sample_check(&g, alpha, family, samples, rank, config.tol_scale, config.seed)
                .map_err(err)?;
        let expected = known.as_ref().map(|(h, _)| h.membership(alpha));
        let pass = failures == 0;
        let contradiction = !pass && expected == Some(Membership::Member);
        let note = match (pass, expected) {
            (true, Some(Membership::NonMember)) => {
                Some("sampling did not refute a known non-member; see `witness`")
            }
            (false, _) if !contradiction => Some("sample failures refute membership"),
            _ => None,
        };
        results.push(VerifyRow {
            alpha,
            samples,
            min_relative_eigenvalue: min_rel,
            failures,
            pass,
            expected,
            contradiction,
            note,
        });
    }
    let contradictions = results.iter().filter(|r| r.contradiction).count();
    let report = VerifyReport {
        family,
        rank,
        expected_set: known.as_ref().map(|(h, _)| h.to_string()),
        results,
        contradictions,
    };
    let stdout = match config.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut s = "alpha,samples,min_relative_eigenvalue,failures,pass,expected,contradiction\n"
                .to_string();
            for r in &report.results {
                s += &csv_line(&[
                    format!("{:?}", r.alpha),
                    r.samples.to_string(),
                    format!("{:?}", r.min_relative_eigenvalue),
                    r.failures.to_string(),
                    r.pass.to_string(),
                    membership_name(r.expected).into(),
                    r.contradiction.to_string(),
                ]);
            }
            s
        }
        Format::Text => {
            let mut s = match &report.expected_set {
                Some(h) => format!("expected set: {h}\n"),
                None => "expected set: unknown\n".into(),
            };
            for r in &report.results {
                let _ = writeln!(
                    s,
                    "α = {}: {} ({} samples, min λ/scale {}, expected {}){}",
                    sig6(r.alpha),
                    if r.pass { "pass" } else { "FAIL" },
                    r.samples,
                    sig6(r.min_relative_eigenvalue),
                    membership_name(r.expected),
                    r.note.map(|n| format!("; {n}")).unwrap_or_default(),
                );
            }
            s
        }
    };
    let code = if contradictions > 0 { EXIT_NOT_FOUND } else { EXIT_OK };
    Ok(with_code(code, stdout, String::new()))
}

fn membership_name(m: Option<Membership>) -> &'static str {
    match m {
        Some(Membership::Member) => "member",
        Some(Membership::NonMember) => "non-member",
        Some(Membership::Unknown) | None => "unknown",
    }
}

fn cmd_table1(n_max: usize, config: &RunConfig) -> CmdResult {
    if n_max < 3 {
        return Err("--n-max must be at least 3".into());
    }
    let rows = table1_rows(n_max).map_err(err)?;
    let mismatches = rows.iter().filter(|r| !r.matches).count();
    let stdout = match config.format {
        Format::Json => json_pretty(&serde_json::json!({ "rows": rows, "mismatches": mismatches })),
        Format::Csv => {
            let mut s = "family,params,n,closed_form,expected,computed,matches\n".to_string();
            for r in &rows {
                s += &csv_line(&[
                    r.family.clone(),
                    r.params.clone(),
                    r.n.to_string(),
                    r.closed_form.clone(),
                    r.expected.to_string(),
                    r.computed.to_string(),
                    r.matches.to_string(),
                ]);
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{:<20} {:<32} {:>3} {:<26} {:>8} {:>8}\n",
                "family", "params", "n", "closed form", "expected", "computed"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:<20} {:<32} {:>3} {:<26} {:>8} {:>8}{}",
                    r.family,
                    r.params,
                    r.n,
                    r.closed_form,
                    r.expected,
                    r.computed,
                    if r.matches { "" } else { "  MISMATCH" }
                );
            }
            let _ = writeln!(s, "{} rows, {mismatches} mismatches", rows.len());
            s
        }
    };
    let code = if mismatches > 0 { EXIT_NOT_FOUND } else { EXIT_OK };
    Ok(with_code(code, stdout, String::new()))
}

fn cmd_scan(path: &std::path::Path, powers: Powers, grid_step: f64, config: &RunConfig) -> CmdResult {
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(format!("--grid-step must be positive, got {grid_step}"));
    }
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let scan = ScanConfig {
        family: PowerFamily::from(powers),
        grid_step,
        search: config.search(),
        seed: config.seed,
    };
    let report = conjecture_scan(parse_graph_stream(&text), &scan);
    let s = report.summary;
    let summary = format!(
        "scanned {} graphs: {} agreements, {} flags, {} errors, {} formula mismatches\n",
        s.graphs, s.agreements, s.flags, s.errors, s.formula_mismatches
    );
    let stdout = match config.format {
        Format::Json => report.to_json_lines(),
        Format::Csv => {
            let mut out = "index,n,chordal,r,predicted,clique_formula,lower,upper,flagged,error\n".to_string();
            let opt = |x: Option<String>| x.unwrap_or_default();
            for r in &report.records {
                out += &csv_line(&[
                    r.index.to_string(),
                    opt(r.n.map(|v| v.to_string())),
                    opt(r.chordal.map(|v| v.to_string())),
                    opt(r.r.map(|v| v.to_string())),
                    opt(r.predicted.map(|v| v.to_string())),
                    opt(r.clique_formula.map(|v| v.to_string())),
                    opt(r.lower.map(|v| format!("{v:?}"))),
                    opt(r.upper.map(|v| format!("{v:?}"))),
                    opt(r.flagged.map(|v| v.to_string())),
                    opt(r.error.clone()),
                ]);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &report.records {
                match &r.error {
                    Some(e) => {
                        let _ = writeln!(out, "graph {}: error: {e}", r.index);
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            "graph {}: n={} r-2={} bracket [{}, {}]{}",
                            r.index,
                            r.n.unwrap_or(0),
                            r.predicted.unwrap_or(0),
                            sig6(r.lower.unwrap_or(0.0)),
                            sig6(r.upper.unwrap_or(0.0)),
                            if r.flagged == Some(true) { " FLAGGED" } else { "" }
                        );
                    }
                }
            }
            out + &summary
        }
    };
    let stderr = if config.format == Format::Text { String::new() } else { summary };
    Ok(with_code(EXIT_OK, stdout, stderr))
}
