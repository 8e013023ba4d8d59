//! Compute, copy the result, uncompute: garbage-free reversible evaluation.
//!
//! A reversibilized gate leaves garbage lines holding a copy of its input.
//! Running the gate, copying the result bits onto fresh ancilla lines, and
//! then running the gate backwards restores every source line to blank, so
//! the only extra output is the result itself.
//!
//! Run with: cargo run --example bennett_uncompute

use qra::reversible::{bennett_compose, garbage_stats, reversibilize_table, TruthTable};

fn main() -> qra::Result<()> {
    let and = TruthTable::and2();
    let gate = reversibilize_table(&and);
    let composite = bennett_compose(&gate)?;

    println!("composite lines: x1 x2 | source | ancilla");
    for x in 0..4usize {
        let input = x << 2; // blank source, blank ancilla
        let output = composite.apply(input);
        println!(
            "  x={}{}  source=0 ancilla=0  ->  x={}{} source={} result={}",
            x >> 1,
            x & 1,
            output >> 3 & 1,
            output >> 2 & 1,
            output >> 1 & 1,
            output & 1,
        );
        assert_eq!(output, input | and.eval(x), "source restored, result copied");
    }

    let direct = garbage_stats(std::slice::from_ref(&gate));
    let uncomputed = garbage_stats(std::slice::from_ref(&composite));
    println!("direct gate:      {} garbage line(s), {} stage(s)", direct.garbage_lines, direct.gate_count);
    println!("with uncompute:   {} garbage line(s), {} stage(s)", uncomputed.garbage_lines, uncomputed.gate_count);
    println!("the price of zero garbage is running the gate twice (plus the copy)");
    Ok(())
}
