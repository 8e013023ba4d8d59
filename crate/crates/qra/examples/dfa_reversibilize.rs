//! Make a DFA step reversible by writing what it would otherwise forget.
//!
//! A DFA transition (q, x) -> q' discards q and x. The reversible step keeps
//! a dedicated cell per input symbol: it replaces the consumed symbol's cell
//! content with a garbage value that encodes (q, x), so the whole run can be
//! played backwards from the final state and the written cells alone.
//!
//! Run with: cargo run --example dfa_reversibilize

use qra::automata::{corpus, invert_run, reversibilize_dfa, run_reversible};
use qra::formats::format_word;

fn main() -> qra::Result<()> {
    let (name, d) = corpus().into_iter().find(|(n, _)| *n == "count-a-mod-3").unwrap();
    let r = reversibilize_dfa(&d);
    println!(
        "{name}: {} states, {} symbols -> step bijection on {} x {} x {} triples",
        d.n_states(),
        d.alphabet().len(),
        d.n_states(),
        d.alphabet().len(),
        r.sg_dim(),
    );

    let word = qra::formats::parse_word(d.alphabet(), "abaab")?;
    let (q_end, record) = run_reversible(&r, &word)?;
    println!(
        "forward run on '{}': end state {}, {} garbage cells written",
        format_word(d.alphabet(), &word),
        r.state_names()[q_end],
        record.len()
    );
    for (k, (x_out, s_out)) in record.iter().enumerate() {
        println!("  cell {}: input slot now {}, garbage value {}", k + 1, x_out, s_out);
    }

    // run the inverse from (q_end, record) only: the input comes back
    let (q0, recovered, sources) = invert_run(&r, q_end, &record);
    println!(
        "backward run recovers: start={}, word='{}', sources all blank: {}",
        r.state_names()[q0],
        format_word(d.alphabet(), &recovered),
        sources.iter().all(|&s| s == r.blank()),
    );
    assert_eq!(recovered, word);
    Ok(())
}
