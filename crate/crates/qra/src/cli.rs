//! Command-line front end: `reversibilize`, `run`, `compare`, `demo`,
//! `validate`. Exit codes: 0 success, 2 parse or usage error, 3 unknown
//! symbol or alphabet mismatch, 4 amplitude cap exceeded, 5 divergence
//! found by `compare`. Successful runs write to stdout only.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::automata::{dfa_accepts, enumerate_words, reversibilize_dfa, run_reversible};
use crate::error::{Error, Result};
use crate::formats::{
    emit_tapeqfa, emit_truth_table, format_word, parse_model, parse_word, Model,
};
use crate::mcqfa::{self, mc_accept_prob};
use crate::reversible::{
    bennett_compose, garbage_stats, no_cloning_demo, reversibilize_table, TruthTable,
};
use crate::tapeqfa::{
    accept_prob_traced, from_reversible_dfa, run_full_n, DEFAULT_MAX_AMPLITUDES,
};

const COMPARE_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "qra", version, about = "Reversible and quantum automaton workbench")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Turn a truth table into a reversible table, or a DFA into a tape
    /// automaton driven by a permutation unitary.
    Reversibilize {
        /// Input file (`table` or `dfa` format)
        input: PathBuf,
        /// Write here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a machine on one word or on a file of words.
    #[command(group(clap::ArgGroup::new("input").required(true).multiple(false)))]
    Run {
        /// Model file (`dfa`, `mcqfa` or `tapeqfa` format)
        model: PathBuf,
        /// A single word; pass '' for the empty word
        #[arg(long, group = "input")]
        word: Option<String>,
        /// File with one word per line (blank lines and # comments skipped)
        #[arg(long, group = "input")]
        words: Option<PathBuf>,
        /// Simulation path for tape automata
        #[arg(long, value_enum, default_value_t = SimPath::Full)]
        path: SimPath,
        /// Emit a JSON array of reports
        #[arg(long, group = "format")]
        json: bool,
        /// Emit CSV (word,prob,steps,garbage_cells)
        #[arg(long, group = "format")]
        csv: bool,
    },
    /// Run two machines on every word up to a length and report divergence.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// Compare all words of length 0..=N
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
    },
    /// Print a worked demonstration.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
    /// Check a model file and report violations.
    Validate { model: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SimPath {
    /// Keep the whole tape state (exponential memory, exact)
    Full,
    /// Trace out each written cell (linear memory)
    Traced,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    /// Unitary copying is exact only on basis states
    NoCloning,
    /// Compute, copy the result, uncompute: sources restored
    Bennett,
    /// One written cell per step for the DFA embedding
    GarbageGrowth,
}

/// Probability with 12 significant digits; identical text in every format.
pub fn format_prob(p: f64) -> String {
    if p == 0.0 {
        return "0.000000000000".into();
    }
    let exp = p.abs().log10().floor() as i32;
    if (-4..=0).contains(&exp) {
        format!("{:.*}", (11 - exp) as usize, p)
    } else {
        format!("{p:.11e}")
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn amplitude_cap() -> Result<usize> {
    match std::env::var("QRA_MAX_AMPLITUDES") {
        Ok(v) => v.parse().map_err(|_| {
            Error::InvalidModel(format!("QRA_MAX_AMPLITUDES must be a positive integer, got '{v}'"))
        }),
        Err(_) => Ok(DEFAULT_MAX_AMPLITUDES),
    }
}

struct RunReport {
    model: &'static str,
    word: String,
    accepted: Option<bool>,
    prob: f64,
    steps: usize,
    garbage_cells: usize,
    wall_ms: f64,
}

fn report_line(r: &RunReport) -> String {
    let value = match r.accepted {
        Some(a) => format!("accepted={a}"),
        None => format!("prob={}", format_prob(r.prob)),
    };
    format!(
        "word={} model={} {} steps={} garbage_cells={}",
        r.word, r.model, value, r.steps, r.garbage_cells
    )
}

fn report_json(reports: &[RunReport]) -> String {
    let items: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            let mut obj = serde_json::Map::new();
            obj.insert("model".into(), r.model.into());
            obj.insert("word".into(), r.word.clone().into());
            match r.accepted {
                Some(a) => obj.insert("accepted".into(), a.into()),
                None => obj.insert("prob".into(), format_prob(r.prob).into()),
            };
            obj.insert("steps".into(), r.steps.into());
            obj.insert("garbage_cells".into(), r.garbage_cells.into());
            obj.insert("wall_ms".into(), ((r.wall_ms * 1000.0).round() / 1000.0).into());
            serde_json::Value::Object(obj)
        })
        .collect();
    serde_json::to_string_pretty(&items).expect("report serialization cannot fail")
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn report_csv(reports: &[RunReport]) -> String {
    let mut out = String::from("word,prob,steps,garbage_cells\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{}\n",
            csv_field(&r.word),
            format_prob(r.prob),
            r.steps,
            r.garbage_cells
        ));
    }
    out
}

fn run_one(model: &Model, path: SimPath, word: &[usize], cap: usize) -> Result<RunReport> {
    let start = Instant::now();
    let (kind, accepted, prob, garbage) = match model {
        Model::Dfa(d) => {
            let a = dfa_accepts(d, word)?;
            ("dfa", Some(a), if a { 1.0 } else { 0.0 }, 0)
        }
        Model::Mc(q) => ("mcqfa", None, mc_accept_prob(q, word)?, 0),
        Model::Tape(q) => match path {
            SimPath::Full => {
                let state = run_full_n(q, &q.basis_word_state_cap(word, cap)?, word.len(), cap)?;
                let prob = state.acceptance_probability(q.accept());
                ("tape-full", None, prob, state.garbage_cells_used(q))
            }
            SimPath::Traced => {
                let prob = accept_prob_traced(q, &q.basis_cells(word)?)?;
                ("tape-traced", None, prob, word.len())
            }
        },
        Model::Table(_) => {
            return Err(Error::InvalidModel(
                "run expects an automaton model (dfa, mcqfa or tapeqfa)".into(),
            ))
        }
    };
    Ok(RunReport {
        model: kind,
        word: format_word(model_alphabet(model).expect("checked above"), word),
        accepted,
        prob,
        steps: word.len(),
        garbage_cells: garbage,
        wall_ms: start.elapsed().as_secs_f64() * 1000.0,
    })
}

fn model_alphabet(model: &Model) -> Option<&[String]> {
    match model {
        Model::Dfa(d) => Some(d.alphabet()),
        Model::Mc(q) => Some(q.alphabet()),
        Model::Tape(q) => Some(q.symbols()),
        Model::Table(_) => None,
    }
}

fn cmd_reversibilize(input: &Path, output: Option<&Path>) -> Result<()> {
    match parse_model(&read_file(input)?)? {
        Model::Table(t) => {
            let p = reversibilize_table(&t);
            let table = TruthTable::new(p.width(), p.width(), p.mapping().to_vec())?;
            write_output(output, &emit_truth_table(&table))
        }
        Model::Dfa(d) => {
            let q = from_reversible_dfa(&reversibilize_dfa(&d), d.accept());
            write_output(output, &emit_tapeqfa(&q))
        }
        _ => Err(Error::InvalidModel(
            "reversibilize expects a 'table' or 'dfa' file".into(),
        )),
    }
}

fn cmd_run(
    model_path: &Path,
    word: Option<&str>,
    words: Option<&Path>,
    path: SimPath,
    json: bool,
    csv: bool,
) -> Result<()> {
    let model = parse_model(&read_file(model_path)?)?;
    let alphabet = model_alphabet(&model)
        .ok_or_else(|| {
            Error::InvalidModel("run expects an automaton model (dfa, mcqfa or tapeqfa)".into())
        })?
        .to_vec();
    let cap = amplitude_cap()?;

    let mut parsed_words = Vec::new();
    if let Some(w) = word {
        parsed_words.push(parse_word(&alphabet, w)?);
    }
    if let Some(file) = words {
        for raw in read_file(file)?.lines() {
            let text = raw.split('#').next().unwrap_or("").trim();
            if !text.is_empty() {
                parsed_words.push(parse_word(&alphabet, text)?);
            }
        }
    }

    let mut reports = Vec::with_capacity(parsed_words.len());
    for w in &parsed_words {
        reports.push(run_one(&model, path, w, cap)?);
    }

    if json {
        println!("{}", report_json(&reports));
    } else if csv {
        print!("{}", report_csv(&reports));
    } else {
        for r in &reports {
            println!("{}", report_line(r));
        }
    }
    Ok(())
}

/// Acceptance probability of one word under any word-reading model, using
/// the traced path for tape automata so memory stays linear.
fn compare_prob(model: &Model, word: &[usize]) -> Result<f64> {
    match model {
        Model::Dfa(d) => Ok(if dfa_accepts(d, word)? { 1.0 } else { 0.0 }),
        Model::Mc(q) => mc_accept_prob(q, word),
        Model::Tape(q) => accept_prob_traced(q, &q.basis_cells(word)?),
        Model::Table(_) => {
            Err(Error::InvalidModel("compare expects automaton models".into()))
        }
    }
}

/// Returns the exit code: 0 on agreement, 5 on divergence.
fn cmd_compare(a_path: &Path, b_path: &Path, maxlen: usize) -> Result<u8> {
    let a = parse_model(&read_file(a_path)?)?;
    let b = parse_model(&read_file(b_path)?)?;
    let alpha_a = model_alphabet(&a)
        .ok_or_else(|| Error::InvalidModel("compare expects automaton models".into()))?;
    let alpha_b = model_alphabet(&b)
        .ok_or_else(|| Error::InvalidModel("compare expects automaton models".into()))?;
    if alpha_a != alpha_b {
        return Err(Error::AlphabetMismatch {
            left: alpha_a.join(" "),
            right: alpha_b.join(" "),
        });
    }
    let alphabet = alpha_a.to_vec();

    let words = enumerate_words(alphabet.len(), maxlen);
    let mut max_div = 0.0f64;
    let mut first: Option<(Vec<usize>, f64, f64)> = None;
    for w in &words {
        let pa = compare_prob(&a, w)?;
        let pb = compare_prob(&b, w)?;
        let diff = (pa - pb).abs();
        max_div = max_div.max(diff);
        if diff > COMPARE_TOLERANCE && first.is_none() {
            first = Some((w.clone(), pa, pb));
        }
    }

    println!("compared {} words of length 0..={maxlen}", words.len());
    println!("max divergence: {}", format_prob(max_div));
    match first {
        None => {
            println!("models agree within {COMPARE_TOLERANCE:e}");
            Ok(0)
        }
        Some((w, pa, pb)) => {
            let shown = if w.is_empty() {
                "(empty word)".to_string()
            } else {
                format_word(&alphabet, &w)
            };
            println!(
                "first divergence: {shown} ({} vs {})",
                format_prob(pa),
                format_prob(pb)
            );
            Ok(5)
        }
    }
}

fn demo_no_cloning() -> Result<()> {
    println!("fidelity of |s,0> -> (copy) -> against the ideal clone |s,s>:");
    let sqrt_half = std::f64::consts::FRAC_1_SQRT_2;
    let cases = [
        ("|0>", Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
        ("|1>", Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
        ("(|0>+|1>)/sqrt(2)", Complex64::new(sqrt_half, 0.0), Complex64::new(sqrt_half, 0.0)),
        ("(|0>+i|1>)/sqrt(2)", Complex64::new(sqrt_half, 0.0), Complex64::new(0.0, sqrt_half)),
        ("sqrt(0.3)|0>+sqrt(0.7)|1>", Complex64::new(0.3f64.sqrt(), 0.0), Complex64::new(0.7f64.sqrt(), 0.0)),
    ];
    for (label, alpha, beta) in cases {
        let f = no_cloning_demo(alpha, beta)?;
        println!("  {:28} fidelity = {}", label, format_prob(f));
    }
    println!("the copy map is linear, so it duplicates basis states exactly but");
    println!("sends a|0> + b|1> to a|00> + b|11>, never to the product clone");
    Ok(())
}

fn demo_bennett() -> Result<()> {
    let gate = reversibilize_table(&TruthTable::and2());
    let composite = bennett_compose(&gate)?;
    println!("and-gate via compute, copy, uncompute (lines: x1 x2 source ancilla):");
    for x in 0..4usize {
        let input = x << 2;
        let output = composite.apply(input);
        println!(
            "  (x={}{}, source={}, ancilla={}) -> (x={}{}, source={}, result={})",
            x >> 1,
            x & 1,
            input >> 1 & 1,
            input & 1,
            output >> 3 & 1,
            output >> 2 & 1,
            output >> 1 & 1,
            output & 1
        );
    }
    let direct = garbage_stats(std::slice::from_ref(&gate));
    let chained = garbage_stats(std::slice::from_ref(&composite));
    println!("direct reversible gate: {} garbage line(s)", direct.garbage_lines);
    println!(
        "composite of {} stages: {} garbage line(s); sources restored to 0",
        composite.stages(),
        chained.garbage_lines
    );
    Ok(())
}

fn demo_garbage_growth() -> Result<()> {
    let d = crate::automata::corpus()
        .into_iter()
        .find(|(name, _)| *name == "parity-of-a")
        .expect("corpus contains parity-of-a")
        .1;
    let r = reversibilize_dfa(&d);
    println!("parity automaton, reversible embedding: cells written per input length");
    println!("  length  garbage_cells");
    for len in 1..=8usize {
        let word = vec![0; len];
        let (_, record) = run_reversible(&r, &word)?;
        println!("  {len:6}  {:13}", record.len());
    }
    println!("growth is one cell per read symbol; uncomputing (see 'demo bennett')");
    println!("returns every source cell to blank at the cost of rerunning the machine");
    Ok(())
}

fn cmd_validate(model_path: &Path) -> Result<u8> {
    match parse_model(&read_file(model_path)?)? {
        Model::Mc(q) => {
            let violations = mcqfa::validate(&q);
            if violations.is_empty() {
                println!("ok: mcqfa is well-formed");
                Ok(0)
            } else {
                for v in &violations {
                    println!("violation: {v}");
                }
                Ok(1)
            }
        }
        m => {
            println!("ok: {} is well-formed", m.kind());
            Ok(0)
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::UnknownSymbol { .. } | Error::AlphabetMismatch { .. } => 3,
        Error::ResourceCap { .. } => 4,
        _ => 2,
    }
}

/// Entry point for the `qra` binary; returns the process exit code.
pub fn main() -> u8 {
    let cli = Cli::parse();
    let outcome: Result<u8> = match &cli.cmd {
        Cmd::Reversibilize { input, output } => {
            cmd_reversibilize(input, output.as_deref()).map(|()| 0)
        }
        Cmd::Run { model, word, words, path, json, csv } => {
            cmd_run(model, word.as_deref(), words.as_deref(), *path, *json, *csv).map(|()| 0)
        }
        Cmd::Compare { a, b, maxlen } => cmd_compare(a, b, *maxlen),
        Cmd::Demo { name } => match name {
            DemoName::NoCloning => demo_no_cloning().map(|()| 0),
            DemoName::Bennett => demo_bennett().map(|()| 0),
            DemoName::GarbageGrowth => demo_garbage_growth().map(|()| 0),
        },
        Cmd::Validate { model } => cmd_validate(model),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::ResourceCap { .. }) {
                eprintln!("hint: rerun with --path traced, or raise QRA_MAX_AMPLITUDES");
            }
            exit_code_for(&e)
        }
    }
}
