//! Text formats for truth tables, DFAs and the two automaton models, with
//! canonical emission: parse(emit(x)) == x and emit(parse(s)) is stable
//! byte-for-byte. `#` starts a comment anywhere; blank lines are ignored.

use num_complex::Complex64;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::mcqfa::McQfa;
use crate::reversible::TruthTable;
use crate::tapeqfa::{default_symbols, TapeQfa};
use crate::tensor::{ComplexOperator, ComplexVector};

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Comment-stripped, non-empty lines with their 1-based numbers.
fn clean_lines(src: &str) -> Vec<(usize, String)> {
    src.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.split('#').next().unwrap_or("").trim();
            (!text.is_empty()).then(|| (i + 1, text.to_string()))
        })
        .collect()
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize> {
    token.parse().map_err(|_| perr(line, format!("invalid {what} '{token}'")))
}

fn parse_complex(line: usize, token: &str) -> Result<Complex64> {
    let (re, im) = token
        .split_once(',')
        .ok_or_else(|| perr(line, format!("expected re,im pair, got '{token}'")))?;
    let re: f64 =
        re.parse().map_err(|_| perr(line, format!("invalid real part '{re}'")))?;
    let im: f64 =
        im.parse().map_err(|_| perr(line, format!("invalid imaginary part '{im}'")))?;
    Ok(Complex64::new(re, im))
}

fn fmt_complex(c: Complex64) -> String {
    format!("{},{}", c.re, c.im)
}

fn bits_to_index(line: usize, bits: &str, width: usize) -> Result<usize> {
    if bits.len() != width {
        return Err(perr(line, format!("expected {width} bits, got '{bits}'")));
    }
    let mut index = 0;
    for ch in bits.chars() {
        index = index * 2
            + match ch {
                '0' => 0,
                '1' => 1,
                _ => return Err(perr(line, format!("invalid bit '{ch}' in '{bits}'"))),
            };
    }
    Ok(index)
}

fn index_to_bits(index: usize, width: usize) -> String {
    (0..width).rev().map(|b| if index >> b & 1 == 1 { '1' } else { '0' }).collect()
}

/// Parses the `table` format: header `table <n_in> <n_out>`, then one
/// `IN_BITS -> OUT_BITS` row per input. Every input must appear exactly once.
pub fn parse_truth_table(src: &str) -> Result<TruthTable> {
    let lines = clean_lines(src);
    let mut it = lines.into_iter();
    let (hline, header) = it.next().ok_or_else(|| perr(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "table" {
        return Err(perr(hline, "expected header 'table <n_in> <n_out>'"));
    }
    let n_in = parse_usize(hline, toks[1], "input line count")?;
    let n_out = parse_usize(hline, toks[2], "output line count")?;
    if n_in == 0 || n_out == 0 || n_in > 16 {
        return Err(perr(hline, format!("unsupported table size {n_in} x {n_out}")));
    }

    let mut rows: Vec<Option<usize>> = vec![None; 1 << n_in];
    for (ln, line) in it {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 || toks[1] != "->" {
            return Err(perr(ln, "expected 'IN_BITS -> OUT_BITS'"));
        }
        let x = bits_to_index(ln, toks[0], n_in)?;
        let y = bits_to_index(ln, toks[2], n_out)?;
        if rows[x].is_some() {
            return Err(perr(ln, format!("duplicate row for input {}", toks[0])));
        }
        rows[x] = Some(y);
    }
    let mut table = Vec::with_capacity(rows.len());
    for (x, row) in rows.into_iter().enumerate() {
        table.push(row.ok_or_else(|| {
            perr(1, format!("missing row for input {}", index_to_bits(x, n_in)))
        })?);
    }
    TruthTable::new(n_in, n_out, table)
}

pub fn emit_truth_table(t: &TruthTable) -> String {
    assert!(t.n_in() >= 1 && t.n_out() >= 1, "degenerate tables have no text form");
    let mut out = format!("table {} {}\n", t.n_in(), t.n_out());
    for x in 0..1usize << t.n_in() {
        out.push_str(&index_to_bits(x, t.n_in()));
        out.push_str(" -> ");
        out.push_str(&index_to_bits(t.eval(x), t.n_out()));
        out.push('\n');
    }
    out
}

/// Parses the `dfa` format: `states:`, `alphabet:`, `start:`, `accept:`
/// directives and one `delta: q a -> q'` line per transition.
pub fn parse_dfa(src: &str) -> Result<Dfa> {
    let lines = clean_lines(src);
    let mut it = lines.into_iter();
    let (hline, header) = it.next().ok_or_else(|| perr(1, "empty input"))?;
    if header != "dfa" {
        return Err(perr(hline, "expected header 'dfa'"));
    }

    let mut states: Option<Vec<String>> = None;
    let mut alphabet: Option<Vec<String>> = None;
    let mut start: Option<(usize, String)> = None;
    let mut accept: Option<(usize, Vec<String>)> = None;
    let mut deltas: Vec<(usize, String, String, String)> = Vec::new();

    for (ln, line) in it {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "states:" | "alphabet:" => {
                let names: Vec<String> = toks[1..].iter().map(|s| s.to_string()).collect();
                if names.is_empty() {
                    return Err(perr(ln, format!("'{}' needs at least one name", toks[0])));
                }
                let target = if toks[0] == "states:" { &mut states } else { &mut alphabet };
                if target.is_some() {
                    return Err(perr(ln, format!("duplicate '{}' directive", toks[0])));
                }
                *target = Some(names);
            }
            "start:" => {
                if start.is_some() {
                    return Err(perr(ln, "duplicate 'start:' directive"));
                }
                if toks.len() != 2 {
                    return Err(perr(ln, "expected 'start: <state>'"));
                }
                start = Some((ln, toks[1].to_string()));
            }
            "accept:" => {
                if accept.is_some() {
                    return Err(perr(ln, "duplicate 'accept:' directive"));
                }
                accept = Some((ln, toks[1..].iter().map(|s| s.to_string()).collect()));
            }
            "delta:" => {
                if toks.len() != 5 || toks[3] != "->" {
                    return Err(perr(ln, "expected 'delta: <state> <symbol> -> <state>'"));
                }
                deltas.push((ln, toks[1].to_string(), toks[2].to_string(), toks[4].to_string()));
            }
            other => return Err(perr(ln, format!("unknown directive '{other}'"))),
        }
    }

    let states = states.ok_or_else(|| perr(1, "missing 'states:' directive"))?;
    let alphabet = alphabet.ok_or_else(|| perr(1, "missing 'alphabet:' directive"))?;
    let (start_ln, start_name) = start.ok_or_else(|| perr(1, "missing 'start:' directive"))?;
    let (accept_ln, accept_names) =
        accept.ok_or_else(|| perr(1, "missing 'accept:' directive"))?;

    let state_index = |ln: usize, name: &str| {
        states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| perr(ln, format!("unknown state '{name}'")))
    };
    let symbol_index = |ln: usize, name: &str| {
        alphabet
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| perr(ln, format!("unknown symbol '{name}'")))
    };

    let start_idx = state_index(start_ln, &start_name)?;
    let accept_idx = accept_names
        .iter()
        .map(|name| state_index(accept_ln, name))
        .collect::<Result<Vec<_>>>()?;

    let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet.len()]; states.len()];
    for (ln, q, x, q2) in deltas {
        let qi = state_index(ln, &q)?;
        let xi = symbol_index(ln, &x)?;
        let ti = state_index(ln, &q2)?;
        if delta[qi][xi].is_some() {
            return Err(perr(ln, format!("duplicate transition for {q} {x}")));
        }
        delta[qi][xi] = Some(ti);
    }
    let mut total = Vec::with_capacity(states.len());
    for (qi, row) in delta.into_iter().enumerate() {
        let mut filled = Vec::with_capacity(alphabet.len());
        for (xi, entry) in row.into_iter().enumerate() {
            filled.push(entry.ok_or_else(|| {
                perr(1, format!("missing transition for {} {}", states[qi], alphabet[xi]))
            })?);
        }
        total.push(filled);
    }
    Dfa::new(states, alphabet, start_idx, accept_idx, total)
}

pub fn emit_dfa(d: &Dfa) -> String {
    let mut out = String::from("dfa\n");
    out.push_str(&format!("states: {}\n", d.state_names().join(" ")));
    out.push_str(&format!("alphabet: {}\n", d.alphabet().join(" ")));
    out.push_str(&format!("start: {}\n", d.state_names()[d.start()]));
    let accept_names: Vec<&str> =
        d.accept().iter().map(|&q| d.state_names()[q].as_str()).collect();
    out.push_str(&format!("accept: {}\n", accept_names.join(" ")).replace("accept: \n", "accept:\n"));
    for q in 0..d.n_states() {
        for (x, symbol) in d.alphabet().iter().enumerate() {
            out.push_str(&format!(
                "delta: {} {} -> {}\n",
                d.state_names()[q],
                symbol,
                d.state_names()[d.delta(q, x)]
            ));
        }
    }
    out
}

/// Reads `count` whitespace-separated complex pairs from one line.
fn parse_complex_row(ln: usize, line: &str, count: usize) -> Result<Vec<Complex64>> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != count {
        return Err(perr(ln, format!("expected {count} complex pairs, got {}", toks.len())));
    }
    toks.iter().map(|t| parse_complex(ln, t)).collect()
}

fn fmt_complex_row(row: &[Complex64]) -> String {
    row.iter().map(|&c| fmt_complex(c)).collect::<Vec<_>>().join(" ")
}

/// Parses the `mcqfa` format: `dim:`, `alphabet:`, `init:`, `accept:` and a
/// `unitary <symbol>:` block of dim rows per symbol.
pub fn parse_mcqfa(src: &str) -> Result<McQfa> {
    let lines = clean_lines(src);
    let mut i = 0;
    let next = |i: &mut usize| -> Option<(usize, String)> {
        let item = lines.get(*i).cloned();
        *i += 1;
        item
    };

    let (hline, header) = next(&mut i).ok_or_else(|| perr(1, "empty input"))?;
    if header != "mcqfa" {
        return Err(perr(hline, "expected header 'mcqfa'"));
    }

    let mut dim: Option<usize> = None;
    let mut alphabet: Option<Vec<String>> = None;
    let mut init: Option<ComplexVector> = None;
    let mut accept: Option<Vec<usize>> = None;
    let mut unitaries: Vec<(String, ComplexOperator)> = Vec::new();

    while let Some((ln, line)) = next(&mut i) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "dim:" => {
                if toks.len() != 2 || dim.is_some() {
                    return Err(perr(ln, "expected a single 'dim: <n>' directive"));
                }
                let n = parse_usize(ln, toks[1], "dimension")?;
                if n == 0 {
                    return Err(perr(ln, "dimension must be positive"));
                }
                dim = Some(n);
            }
            "alphabet:" => {
                if toks.len() < 2 || alphabet.is_some() {
                    return Err(perr(ln, "expected a single non-empty 'alphabet:' directive"));
                }
                alphabet = Some(toks[1..].iter().map(|s| s.to_string()).collect());
            }
            "init:" => {
                let n = dim.ok_or_else(|| perr(ln, "'dim:' must come before 'init:'"))?;
                if init.is_some() {
                    return Err(perr(ln, "duplicate 'init:' directive"));
                }
                let rest = line["init:".len()..].trim();
                init = Some(ComplexVector::new(parse_complex_row(ln, rest, n)?));
            }
            "accept:" => {
                if accept.is_some() {
                    return Err(perr(ln, "duplicate 'accept:' directive"));
                }
                accept = Some(
                    toks[1..]
                        .iter()
                        .map(|t| parse_usize(ln, t, "accept index"))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            "unitary" => {
                let n = dim.ok_or_else(|| perr(ln, "'dim:' must come before 'unitary'"))?;
                let symbol = toks
                    .get(1)
                    .and_then(|s| s.strip_suffix(':'))
                    .filter(|s| !s.is_empty() && toks.len() == 2)
                    .ok_or_else(|| perr(ln, "expected 'unitary <symbol>:'"))?;
                let mut entries = Vec::with_capacity(n * n);
                for _ in 0..n {
                    let (rln, row) = next(&mut i)
                        .ok_or_else(|| perr(ln, format!("unitary {symbol}: missing rows")))?;
                    entries.extend(parse_complex_row(rln, &row, n)?);
                }
                unitaries.push((symbol.to_string(), ComplexOperator::from_entries(n, n, entries)));
            }
            other => return Err(perr(ln, format!("unknown directive '{other}'"))),
        }
    }

    let dim = dim.ok_or_else(|| perr(1, "missing 'dim:' directive"))?;
    let alphabet = alphabet.ok_or_else(|| perr(1, "missing 'alphabet:' directive"))?;
    let init = init.ok_or_else(|| perr(1, "missing 'init:' directive"))?;
    let accept = accept.ok_or_else(|| perr(1, "missing 'accept:' directive"))?;

    let mut ordered = Vec::with_capacity(alphabet.len());
    for symbol in &alphabet {
        let found = unitaries.iter().filter(|(s, _)| s == symbol).count();
        if found != 1 {
            return Err(perr(1, format!("expected exactly one unitary for symbol '{symbol}'")));
        }
        ordered.push(unitaries.iter().find(|(s, _)| s == symbol).unwrap().1.clone());
    }
    if unitaries.len() != alphabet.len() {
        let extra = unitaries.iter().find(|(s, _)| !alphabet.contains(s)).unwrap();
        return Err(perr(1, format!("unitary for undeclared symbol '{}'", extra.0)));
    }
    McQfa::new(dim, init, alphabet, accept, ordered)
}

pub fn emit_mcqfa(q: &McQfa) -> String {
    let mut out = String::from("mcqfa\n");
    out.push_str(&format!("dim: {}\n", q.dim()));
    out.push_str(&format!("alphabet: {}\n", q.alphabet().join(" ")));
    out.push_str(&format!("init: {}\n", fmt_complex_row(q.s_init().amplitudes())));
    let accept: Vec<String> = q.accept().iter().map(|i| i.to_string()).collect();
    out.push_str(&format!("accept: {}\n", accept.join(" ")).replace("accept: \n", "accept:\n"));
    for (x, symbol) in q.alphabet().iter().enumerate() {
        out.push_str(&format!("unitary {symbol}:\n"));
        let u = q.unitary(x);
        for row in 0..u.rows() {
            let entries: Vec<Complex64> = (0..u.cols()).map(|c| u.get(row, c)).collect();
            out.push_str(&fmt_complex_row(&entries));
            out.push('\n');
        }
    }
    out
}

/// Parses the `tapeqfa` format: `dims: <h> <i> <sg>`, `blank:`, optional
/// `alphabet:` (cell symbol names; defaults to a, b, …), `init:`, `accept:`,
/// then either a `unitary:` matrix block or a `permutation:` block of
/// `q x s -> q' x' s'` triple lines covering every basis state.
pub fn parse_tapeqfa(src: &str) -> Result<TapeQfa> {
    let lines = clean_lines(src);
    let mut i = 0;
    let next = |i: &mut usize| -> Option<(usize, String)> {
        let item = lines.get(*i).cloned();
        *i += 1;
        item
    };

    let (hline, header) = next(&mut i).ok_or_else(|| perr(1, "empty input"))?;
    if header != "tapeqfa" {
        return Err(perr(hline, "expected header 'tapeqfa'"));
    }

    let mut dims: Option<(usize, usize, usize)> = None;
    let mut blank: Option<usize> = None;
    let mut alphabet: Option<Vec<String>> = None;
    let mut init: Option<ComplexVector> = None;
    let mut accept: Option<Vec<usize>> = None;
    let mut unitary: Option<ComplexOperator> = None;

    while let Some((ln, line)) = next(&mut i) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "dims:" => {
                if toks.len() != 4 || dims.is_some() {
                    return Err(perr(ln, "expected a single 'dims: <h> <i> <sg>' directive"));
                }
                let h = parse_usize(ln, toks[1], "internal dimension")?;
                let ic = parse_usize(ln, toks[2], "input cell dimension")?;
                let sg = parse_usize(ln, toks[3], "source-garbage dimension")?;
                if h == 0 || ic == 0 || sg == 0 {
                    return Err(perr(ln, "dimensions must be positive"));
                }
                dims = Some((h, ic, sg));
            }
            "blank:" => {
                if toks.len() != 2 || blank.is_some() {
                    return Err(perr(ln, "expected a single 'blank: <index>' directive"));
                }
                blank = Some(parse_usize(ln, toks[1], "blank index")?);
            }
            "alphabet:" => {
                if toks.len() < 2 || alphabet.is_some() {
                    return Err(perr(ln, "expected a single non-empty 'alphabet:' directive"));
                }
                alphabet = Some(toks[1..].iter().map(|s| s.to_string()).collect());
            }
            "init:" => {
                let (h, _, _) =
                    dims.ok_or_else(|| perr(ln, "'dims:' must come before 'init:'"))?;
                if init.is_some() {
                    return Err(perr(ln, "duplicate 'init:' directive"));
                }
                let rest = line["init:".len()..].trim();
                init = Some(ComplexVector::new(parse_complex_row(ln, rest, h)?));
            }
            "accept:" => {
                if accept.is_some() {
                    return Err(perr(ln, "duplicate 'accept:' directive"));
                }
                accept = Some(
                    toks[1..]
                        .iter()
                        .map(|t| parse_usize(ln, t, "accept index"))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            "unitary:" => {
                let (h, ic, sg) =
                    dims.ok_or_else(|| perr(ln, "'dims:' must come before 'unitary:'"))?;
                if unitary.is_some() {
                    return Err(perr(ln, "duplicate evolution block"));
                }
                let n = h * ic * sg;
                let mut entries = Vec::with_capacity(n * n);
                for _ in 0..n {
                    let (rln, row) =
                        next(&mut i).ok_or_else(|| perr(ln, "unitary: missing rows"))?;
                    entries.extend(parse_complex_row(rln, &row, n)?);
                }
                unitary = Some(ComplexOperator::from_entries(n, n, entries));
            }
            "permutation:" => {
                let (h, ic, sg) =
                    dims.ok_or_else(|| perr(ln, "'dims:' must come before 'permutation:'"))?;
                if unitary.is_some() {
                    return Err(perr(ln, "duplicate evolution block"));
                }
                let n = h * ic * sg;
                let triple = |ln: usize, toks: &[&str]| -> Result<usize> {
                    let q = parse_usize(ln, toks[0], "state index")?;
                    let x = parse_usize(ln, toks[1], "input index")?;
                    let s = parse_usize(ln, toks[2], "cell index")?;
                    if q >= h || x >= ic || s >= sg {
                        return Err(perr(
                            ln,
                            format!("triple {q} {x} {s} out of range for dims {h} {ic} {sg}"),
                        ));
                    }
                    Ok((q * ic + x) * sg + s)
                };
                let mut map: Vec<Option<usize>> = vec![None; n];
                for _ in 0..n {
                    let (rln, row) =
                        next(&mut i).ok_or_else(|| perr(ln, "permutation: missing rows"))?;
                    let toks: Vec<&str> = row.split_whitespace().collect();
                    if toks.len() != 7 || toks[3] != "->" {
                        return Err(perr(rln, "expected 'q x s -> q x s'"));
                    }
                    let from = triple(rln, &toks[0..3])?;
                    let to = triple(rln, &toks[4..7])?;
                    if map[from].is_some() {
                        return Err(perr(rln, "duplicate permutation input triple"));
                    }
                    map[from] = Some(to);
                }
                let map: Vec<usize> = map.into_iter().map(|m| m.unwrap()).collect();
                let mut seen = vec![false; n];
                for &to in &map {
                    if seen[to] {
                        return Err(perr(ln, "permutation block is not a bijection"));
                    }
                    seen[to] = true;
                }
                unitary = Some(ComplexOperator::permutation(map));
            }
            other => return Err(perr(ln, format!("unknown directive '{other}'"))),
        }
    }

    let (h, ic, sg) = dims.ok_or_else(|| perr(1, "missing 'dims:' directive"))?;
    let blank = blank.ok_or_else(|| perr(1, "missing 'blank:' directive"))?;
    let init = init.ok_or_else(|| perr(1, "missing 'init:' directive"))?;
    let accept = accept.ok_or_else(|| perr(1, "missing 'accept:' directive"))?;
    let unitary = unitary.ok_or_else(|| perr(1, "missing 'unitary:' or 'permutation:' block"))?;
    let symbols = match alphabet {
        Some(symbols) => {
            if symbols.len() != ic {
                return Err(perr(1, format!("alphabet must name all {ic} cell basis states")));
            }
            symbols
        }
        None => default_symbols(ic),
    };
    let _ = h;
    TapeQfa::new(init, accept, ic, sg, blank, unitary, symbols)
}

pub fn emit_tapeqfa(q: &TapeQfa) -> String {
    let mut out = String::from("tapeqfa\n");
    out.push_str(&format!("dims: {} {} {}\n", q.h_dim(), q.i_dim(), q.sg_dim()));
    out.push_str(&format!("blank: {}\n", q.blank()));
    out.push_str(&format!("alphabet: {}\n", q.symbols().join(" ")));
    out.push_str(&format!("init: {}\n", fmt_complex_row(q.s0().amplitudes())));
    let accept: Vec<String> = q.accept().iter().map(|i| i.to_string()).collect();
    out.push_str(&format!("accept: {}\n", accept.join(" ")).replace("accept: \n", "accept:\n"));
    let (ic, sg) = (q.i_dim(), q.sg_dim());
    let u = q.unitary();
    match u.as_permutation() {
        Some(map) => {
            out.push_str("permutation:\n");
            let triple = |idx: usize| {
                let s = idx % sg;
                let rest = idx / sg;
                format!("{} {} {}", rest / ic, rest % ic, s)
            };
            for (from, &to) in map.iter().enumerate() {
                out.push_str(&format!("{} -> {}\n", triple(from), triple(to)));
            }
        }
        None => {
            out.push_str("unitary:\n");
            for row in 0..u.rows() {
                let entries: Vec<Complex64> = (0..u.cols()).map(|c| u.get(row, c)).collect();
                out.push_str(&fmt_complex_row(&entries));
                out.push('\n');
            }
        }
    }
    out
}

/// Any of the parseable machine kinds, distinguished by the header line.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    Table(TruthTable),
    Dfa(Dfa),
    Mc(McQfa),
    Tape(TapeQfa),
}

impl Model {
    pub fn kind(&self) -> &'static str {
        match self {
            Model::Table(_) => "table",
            Model::Dfa(_) => "dfa",
            Model::Mc(_) => "mcqfa",
            Model::Tape(_) => "tapeqfa",
        }
    }
}

/// Parses any model file, dispatching on the header.
pub fn parse_model(src: &str) -> Result<Model> {
    let lines = clean_lines(src);
    let (ln, header) = lines.first().cloned().ok_or_else(|| perr(1, "empty input"))?;
    match header.split_whitespace().next().unwrap_or("") {
        "table" => parse_truth_table(src).map(Model::Table),
        "dfa" => parse_dfa(src).map(Model::Dfa),
        "mcqfa" => parse_mcqfa(src).map(Model::Mc),
        "tapeqfa" => parse_tapeqfa(src).map(Model::Tape),
        other => Err(perr(ln, format!("unknown model header '{other}'"))),
    }
}

/// Word syntax: single-character symbols concatenate ("aba"); otherwise
/// symbols are comma-separated ("s0,s1"). The empty string is the empty word.
pub fn parse_word(alphabet: &[String], text: &str) -> Result<Vec<usize>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let lookup = |s: &str| {
        alphabet
            .iter()
            .position(|a| a == s)
            .ok_or_else(|| Error::UnknownSymbol { symbol: s.to_string() })
    };
    if text.contains(',') {
        text.split(',').map(|t| lookup(t.trim())).collect()
    } else if alphabet.iter().all(|s| s.chars().count() == 1) {
        text.chars().map(|c| lookup(&c.to_string())).collect()
    } else {
        Ok(vec![lookup(text)?])
    }
}

/// Renders a word back to the command-line syntax.
pub fn format_word(alphabet: &[String], word: &[usize]) -> String {
    let names: Vec<&str> = word.iter().map(|&x| alphabet[x].as_str()).collect();
    if alphabet.iter().all(|s| s.chars().count() == 1) {
        names.concat()
    } else {
        names.join(",")
    }
}
