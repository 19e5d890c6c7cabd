use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde_json::json;
use threshold_spectra::report::{plain, plain_opt, to_json, write_gap_csv, write_spectra_csv};
use threshold_spectra::spectral::{Spectrum, TrivialMults};
use threshold_spectra::threshold::{
    enumerate_threshold, parse_edge_list, recognize, CreationSequence, DenseGraph, NsgForm,
    Recognition, WeightRealization,
};
use threshold_spectra::verifier::{
    check_antiregular_bounds, check_chain, check_gap, reduction_chain, scan_conjecture, scan_gap,
    scan_gap_detailed, GapReport, ScanConfig, ScanReport, GAP_HIGH, GAP_LOW,
};
use threshold_spectra::Error;

use crate::args::{BatchSource, Cli, Command, EdgeSource, Format, Order, Scan, Source};
use crate::{EXIT_FAILED, EXIT_USAGE};

/// Assembled and dense spectra must agree this closely.
const SPECTRUM_AGREEMENT_TOL: f64 = 1e-7;

pub struct Report {
    pub text: String,
    pub passed: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

pub enum Failure {
    Usage(String),
    Core(Error),
    NotThreshold(PathBuf),
}

impl Failure {
    pub fn message(&self) -> String {
        match self {
            Failure::Usage(msg) => msg.clone(),
            Failure::Core(e) => e.to_string(),
            Failure::NotThreshold(p) => format!("{} is not a threshold graph", p.display()),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::NotThreshold(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<Report, Failure>;

pub fn execute(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Gen(b) => gen(b, fmt),
        Command::Spectrum(b) => spectrum(b, fmt),
        Command::CheckGap(s) => gap_one(s, fmt),
        Command::ScanGap(s) => scan_gap_cmd(s, fmt),
        Command::ScanConjecture(s) => scan_conjecture_cmd(s, fmt),
        Command::CheckAntiregular(o) => antiregular(o, fmt),
        Command::Reduce(s) => reduce(s, fmt),
        Command::Recognize(e) => recognize_cmd(e, fmt),
    }
}

fn read_edges(path: &Path) -> Result<Recognition, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let (order, edges) = parse_edge_list(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(recognize(order, &edges)?)
}

fn load(seq: &Option<String>, nsg: &Option<String>, edges: &Option<PathBuf>) -> Result<CreationSequence, Failure> {
    if let Some(s) = seq {
        return Ok(CreationSequence::parse(s)?);
    }
    if let Some(s) = nsg {
        return Ok(NsgForm::parse(s)?.to_creation());
    }
    let path = edges.as_ref().ok_or_else(|| Failure::Usage("no input graph given".into()))?;
    match read_edges(path)? {
        Recognition::Threshold { sequence, .. } => Ok(sequence),
        Recognition::NotThreshold { .. } => Err(Failure::NotThreshold(path.clone())),
    }
}

fn load_source(s: &Source) -> Result<CreationSequence, Failure> {
    load(&s.seq, &s.nsg, &s.edges)
}

fn batch_order(b: &BatchSource) -> Result<Option<usize>, Failure> {
    match b.one.order {
        None if b.connected_only => Err(Failure::Usage("--connected-only requires --order".into())),
        None => Ok(None),
        Some(0) => Err(Failure::Core(Error::OrderTooSmall(0))),
        Some(n) if n > b.order_cap => {
            Err(Failure::Core(Error::OrderCapExceeded { order: n, cap: b.order_cap }))
        }
        Some(n) => Ok(Some(n)),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn json_text(v: &impl serde::Serialize) -> Result<String, Failure> {
    Ok(to_json(v)?)
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Core(Error::Io(e.to_string()));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Core(Error::Io(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn buffer(f: impl FnOnce(&mut Vec<u8>) -> threshold_spectra::Result<()>) -> Result<String, Failure> {
    let mut buf = Vec::new();
    f(&mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
}

fn gen(b: &BatchSource, fmt: Format) -> Outcome {
    if let Some(order) = batch_order(b)? {
        let seqs: Vec<CreationSequence> = enumerate_threshold(order, b.connected_only).collect();
        let text = match fmt {
            Format::Plain => seqs.iter().map(|s| format!("{s} {}\n", NsgForm::from_creation(s))).collect(),
            Format::Json => json_text(
                &seqs
                    .iter()
                    .map(|s| json!({"sequence": s, "nsg": NsgForm::from_creation(s).to_string()}))
                    .collect::<Vec<_>>(),
            )?,
            Format::Csv => csv_text(
                &["sequence", "nsg", "order", "edges", "connected"],
                seqs.iter().map(|s| {
                    vec![
                        s.to_string(),
                        NsgForm::from_creation(s).to_string(),
                        s.order().to_string(),
                        s.edge_count().to_string(),
                        s.is_connected().to_string(),
                    ]
                }),
            )?,
        };
        return Ok(Report::ok(text));
    }

    let seq = load(&b.one.seq, &b.one.nsg, &b.one.edges)?;
    let form = NsgForm::from_creation(&seq);
    let g = DenseGraph::from_creation(&seq);
    let w = WeightRealization::from_creation(&seq);
    let tags = form.vertex_tags();
    let text = match fmt {
        // Comment lines keep the output a valid edge-list file.
        Format::Plain => {
            let mut s = String::new();
            let _ = writeln!(s, "# sequence {seq}");
            let _ = writeln!(s, "# nsg {form}");
            let _ = writeln!(s, "# connected {}", seq.is_connected());
            let _ = writeln!(s, "# threshold {}", w.threshold);
            let _ = writeln!(s, "# weights {}", join(&w.weights));
            let _ = writeln!(s, "# classes {}", join(&tags));
            s.push_str(&g.to_edge_list());
            s
        }
        Format::Json => json_text(&json!({
            "sequence": seq,
            "nsg": form.to_string(),
            "order": seq.order(),
            "connected": seq.is_connected(),
            "threshold": w.threshold,
            "weights": w.weights,
            "classes": tags.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "edges": g.edges(),
        }))?,
        Format::Csv => csv_text(
            &["vertex", "symbol", "class", "weight", "degree"],
            (0..seq.order()).map(|v| {
                vec![
                    v.to_string(),
                    seq.symbols()[v].as_char().to_string(),
                    tags[v].to_string(),
                    w.weights[v].to_string(),
                    g.degree(v).to_string(),
                ]
            }),
        )?,
    };
    Ok(Report::ok(text))
}

fn spectrum(b: &BatchSource, fmt: Format) -> Outcome {
    if let Some(order) = batch_order(b)? {
        let rows = enumerate_threshold(order, b.connected_only)
            .map(|s| Ok((s.clone(), Spectrum::assemble(&NsgForm::from_creation(&s))?)))
            .collect::<Result<Vec<_>, Failure>>()?;
        let text = match fmt {
            Format::Plain => rows
                .iter()
                .map(|(s, sp)| format!("{s}: {}\n", join(sp.values.iter().map(|&v| plain(v)))))
                .collect(),
            Format::Json => json_text(
                &rows
                    .iter()
                    .map(|(s, sp)| json!({"sequence": s, "eigenvalues": sp.values}))
                    .collect::<Vec<_>>(),
            )?,
            Format::Csv => buffer(|buf| write_spectra_csv(buf, &rows))?,
        };
        return Ok(Report::ok(text));
    }

    let seq = load(&b.one.seq, &b.one.nsg, &b.one.edges)?;
    let form = NsgForm::from_creation(&seq);
    let assembled = Spectrum::assemble(&form)?;
    let dense = Spectrum::dense(&DenseGraph::from_creation(&seq))?;
    let diff = assembled.max_sorted_distance(&dense);
    let mults = TrivialMults::of(&form);
    let (eta_plus, eta_minus) = assembled.eta_extremes();
    let passed = diff.is_some_and(|d| d < SPECTRUM_AGREEMENT_TOL);
    let text = match fmt {
        Format::Plain => {
            let mut s = String::new();
            let _ = writeln!(s, "sequence: {seq}");
            let _ = writeln!(s, "nsg: {form}");
            let _ = writeln!(s, "assembled: {}", join(assembled.values.iter().map(|&v| plain(v))));
            let _ = writeln!(s, "dense: {}", join(dense.values.iter().map(|&v| plain(v))));
            let _ = writeln!(s, "max_difference: {}", plain_opt(diff));
            let _ = writeln!(s, "mult0: {}", mults.mult0);
            let _ = writeln!(s, "multm1: {}", mults.multm1);
            let _ = writeln!(s, "eta_plus: {}", plain_opt(eta_plus));
            let _ = writeln!(s, "eta_minus: {}", plain_opt(eta_minus));
            s
        }
        Format::Json => json_text(&json!({
            "sequence": seq,
            "nsg": form.to_string(),
            "assembled": assembled.values,
            "dense": dense.values,
            "max_difference": diff,
            "mult0": mults.mult0,
            "multm1": mults.multm1,
            "eta_plus": eta_plus,
            "eta_minus": eta_minus,
        }))?,
        Format::Csv => buffer(|buf| write_spectra_csv(buf, &[(seq.clone(), assembled.clone())]))?,
    };
    Ok(Report { text, passed })
}

fn gap_passed(r: &GapReport) -> bool {
    r.verdict.passed() && r.subgap_count == 0
}

fn gap_plain(r: &GapReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph: {}", r.graph);
    let _ = writeln!(s, "order: {}", r.order);
    let _ = writeln!(s, "interval: [{}, {}]", plain(GAP_LOW), plain(GAP_HIGH));
    let _ = writeln!(s, "count_in_interval: {}", r.count_in_interval);
    let _ = writeln!(s, "expected_trivial: {}", r.expected_trivial);
    let _ = writeln!(s, "min_nontrivial_distance: {}", plain_opt(r.min_nontrivial_distance));
    let _ = writeln!(s, "subgap_count: {}", r.subgap_count);
    let _ = writeln!(s, "eta_plus: {}", plain_opt(r.eta_plus));
    let _ = writeln!(s, "eta_minus: {}", plain_opt(r.eta_minus));
    let _ = writeln!(s, "verdict: {}", if gap_passed(r) { "pass" } else { "fail" });
    s
}

fn gap_one(src: &Source, fmt: Format) -> Outcome {
    let seq = load_source(src)?;
    let r = check_gap(&NsgForm::from_creation(&seq))?;
    let text = match fmt {
        Format::Plain => gap_plain(&r),
        Format::Json => json_text(&r)?,
        Format::Csv => buffer(|buf| write_gap_csv(buf, std::slice::from_ref(&r)))?,
    };
    Ok(Report { passed: gap_passed(&r), text })
}

fn config(s: &Scan) -> ScanConfig {
    ScanConfig { order_cap: s.order_cap, workers: s.workers as usize }
}

fn scan_plain(r: &ScanReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "scan: {}", json!(r.kind).as_str().unwrap_or(""));
    let _ = writeln!(s, "order: {}", r.order);
    let _ = writeln!(s, "graphs_checked: {}", r.graphs_checked);
    if r.kind == threshold_spectra::verifier::ScanKind::Gap {
        let _ = writeln!(s, "failures: {}", r.failures.len());
        for f in &r.failures {
            let _ = writeln!(
                s,
                "  {} count_in_interval={} expected_trivial={}",
                f.graph, f.count_in_interval, f.expected_trivial
            );
        }
        let _ = writeln!(s, "subgap_violations: {}", r.subgap_violations);
        let _ = writeln!(s, "min_nontrivial_distance: {}", plain_opt(r.min_nontrivial_distance));
    }
    let ext = |e: &Option<threshold_spectra::verifier::Extremal>| {
        e.as_ref().map_or_else(|| "none".to_string(), |e| format!("{} at {}", plain(e.value), e.sequence))
    };
    let _ = writeln!(s, "min_eta_plus: {}", ext(&r.extremal_eta_plus));
    let _ = writeln!(s, "max_eta_minus: {}", ext(&r.extremal_eta_minus));
    let _ = writeln!(s, "anti_regular: {}", r.anti_regular);
    let _ = writeln!(s, "conjecture_holds: {}", r.conjecture_holds);
    let _ = writeln!(s, "result: {}", if r.passed() { "pass" } else { "fail" });
    s
}

fn scan_gap_cmd(s: &Scan, fmt: Format) -> Outcome {
    let cfg = config(s);
    if fmt == Format::Csv {
        let rows = scan_gap_detailed(s.order, &cfg)?;
        let passed = rows.iter().all(gap_passed);
        return Ok(Report { text: buffer(|buf| write_gap_csv(buf, &rows))?, passed });
    }
    let r = scan_gap(s.order, &cfg)?;
    let text = if fmt == Format::Json { json_text(&r)? } else { scan_plain(&r) };
    Ok(Report { passed: r.passed(), text })
}

fn scan_conjecture_cmd(s: &Scan, fmt: Format) -> Outcome {
    let r = scan_conjecture(s.order, &config(s))?;
    let text = match fmt {
        Format::Plain => scan_plain(&r),
        Format::Json => json_text(&r)?,
        Format::Csv => {
            let val = |e: &Option<threshold_spectra::verifier::Extremal>| {
                e.as_ref().map_or((String::new(), String::new()), |e| (plain(e.value), e.sequence.to_string()))
            };
            let (p, pg) = val(&r.extremal_eta_plus);
            let (m, mg) = val(&r.extremal_eta_minus);
            csv_text(
                &[
                    "order",
                    "graphs_checked",
                    "min_eta_plus",
                    "min_eta_plus_graph",
                    "max_eta_minus",
                    "max_eta_minus_graph",
                    "anti_regular",
                    "conjecture_holds",
                ],
                [vec![
                    r.order.to_string(),
                    r.graphs_checked.to_string(),
                    p,
                    pg,
                    m,
                    mg,
                    r.anti_regular.to_string(),
                    r.conjecture_holds.to_string(),
                ]],
            )?
        }
    };
    Ok(Report { passed: r.passed(), text })
}

fn antiregular(o: &Order, fmt: Format) -> Outcome {
    let b = check_antiregular_bounds(o.order)?;
    let seq = NsgForm::anti_regular(o.order)?.to_creation();
    let text = match fmt {
        Format::Plain => {
            let mut s = String::new();
            let _ = writeln!(s, "graph: A_{} ({seq})", b.order);
            let _ = writeln!(s, "eta_plus: {}", plain_opt(b.eta_plus));
            let _ = writeln!(s, "plus_margin: {}", plain_opt(b.plus_margin()));
            let _ = writeln!(s, "eta_minus: {}", plain_opt(b.eta_minus));
            let _ = writeln!(s, "minus_margin: {}", plain_opt(b.minus_margin()));
            let _ = writeln!(s, "result: {}", if b.passed { "pass" } else { "fail" });
            s
        }
        Format::Json => json_text(&json!({
            "order": b.order,
            "sequence": seq,
            "eta_plus": b.eta_plus,
            "plus_margin": b.plus_margin(),
            "eta_minus": b.eta_minus,
            "minus_margin": b.minus_margin(),
            "passed": b.passed,
        }))?,
        Format::Csv => csv_text(
            &["order", "sequence", "eta_plus", "plus_margin", "eta_minus", "minus_margin", "passed"],
            [vec![
                b.order.to_string(),
                seq.to_string(),
                b.eta_plus.map_or_else(String::new, plain),
                b.plus_margin().map_or_else(String::new, plain),
                b.eta_minus.map_or_else(String::new, plain),
                b.minus_margin().map_or_else(String::new, plain),
                b.passed.to_string(),
            ]],
        )?,
    };
    Ok(Report { passed: b.passed, text })
}

fn reduce(src: &Source, fmt: Format) -> Outcome {
    let seq = load_source(src)?;
    let chain = reduction_chain(&NsgForm::from_creation(&seq))?;
    let check = check_chain(&chain)?;
    let passed = check.steps_ok && check.monotone;
    let text = match fmt {
        Format::Plain => {
            let mut s = String::new();
            for (i, (step, &(ep, em))) in chain.steps.iter().zip(&check.etas).enumerate() {
                let g = TrivialMults::of(&step.parent);
                let h = TrivialMults::of(&step.child);
                let _ = writeln!(
                    s,
                    "step {}: {} - {} -> {} {:?} mult0 {}->{} multm1 {}->{} eta_plus {} eta_minus {}",
                    i + 1,
                    step.parent,
                    step.deleted_class,
                    step.child,
                    step.case_tag,
                    g.mult0,
                    h.mult0,
                    g.multm1,
                    h.multm1,
                    plain_opt(ep),
                    plain_opt(em),
                );
            }
            let (ep, em) = *check.etas.last().expect("terminal etas");
            let _ = writeln!(
                s,
                "terminal: {} A_{} eta_plus {} eta_minus {}",
                chain.terminal,
                chain.terminal.order(),
                plain_opt(ep),
                plain_opt(em)
            );
            let _ = writeln!(s, "relations: {}", if check.steps_ok { "ok" } else { "fail" });
            let _ = writeln!(s, "monotone: {}", if check.monotone { "ok" } else { "fail" });
            s
        }
        Format::Json => json_text(&json!({"chain": chain, "check": check}))?,
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = chain
                .steps
                .iter()
                .zip(&check.etas)
                .enumerate()
                .map(|(i, (step, &(ep, em)))| {
                    let g = TrivialMults::of(&step.parent);
                    vec![
                        (i + 1).to_string(),
                        step.parent.to_string(),
                        step.deleted_class.to_string(),
                        format!("{:?}", step.case_tag),
                        step.child.to_string(),
                        g.mult0.to_string(),
                        g.multm1.to_string(),
                        ep.map_or_else(String::new, plain),
                        em.map_or_else(String::new, plain),
                    ]
                })
                .collect();
            let (ep, em) = *check.etas.last().expect("terminal etas");
            let t = TrivialMults::of(&chain.terminal);
            rows.push(vec![
                "terminal".into(),
                chain.terminal.to_string(),
                String::new(),
                String::new(),
                String::new(),
                t.mult0.to_string(),
                t.multm1.to_string(),
                ep.map_or_else(String::new, plain),
                em.map_or_else(String::new, plain),
            ]);
            csv_text(
                &["step", "parent", "deleted_class", "case", "child", "mult0", "multm1", "eta_plus", "eta_minus"],
                rows,
            )?
        }
    };
    Ok(Report { passed, text })
}

fn recognize_cmd(e: &EdgeSource, fmt: Format) -> Outcome {
    let r = read_edges(&e.edges)?;
    let edge_text = |edges: &[(usize, usize)]| join(edges.iter().map(|(u, v)| format!("{u}-{v}")));
    let text = match fmt {
        Format::Plain => match &r {
            Recognition::Threshold { sequence, vertex_order } => format!(
                "Threshold\nsequence: {sequence}\nnsg: {}\nvertex_order: {}\n",
                NsgForm::from_creation(sequence),
                join(vertex_order)
            ),
            Recognition::NotThreshold { witness } => format!(
                "NotThreshold\nwitness_vertices: {}\nwitness_edges: {}\n",
                join(&witness.vertices),
                edge_text(&witness.edges)
            ),
        },
        Format::Json => json_text(&r)?,
        Format::Csv => {
            let row = match &r {
                Recognition::Threshold { sequence, vertex_order } => vec![
                    "threshold".into(),
                    sequence.to_string(),
                    join(vertex_order),
                    String::new(),
                    String::new(),
                ],
                Recognition::NotThreshold { witness } => vec![
                    "not_threshold".into(),
                    String::new(),
                    String::new(),
                    join(&witness.vertices),
                    edge_text(&witness.edges),
                ],
            };
            csv_text(&["kind", "sequence", "vertex_order", "witness_vertices", "witness_edges"], [row])?
        }
    };
    Ok(Report { passed: r.is_threshold(), text })
}
