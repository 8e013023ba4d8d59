//! Turn the irreversible AND gate into a bijection on three lines.
//!
//! AND loses information: two different inputs map to output 0. Adding a
//! blank source line per output bit and carrying the input along makes the
//! map injective, and a deterministic completion extends it to a bijection
//! that a reversible (or quantum) circuit can implement.
//!
//! Run with: cargo run --example reversible_and_gate

use qra::reversible::{reversibilize_table, TruthTable};

fn main() -> qra::Result<()> {
    let and = TruthTable::and2();
    let gate = reversibilize_table(&and);

    println!("AND on two lines becomes a bijection on {} lines:", gate.width());
    println!("  (source, x1, x2) -> (result, g1, g2)");
    for input in 0..1usize << gate.width() {
        let output = gate.apply(input);
        let marker = if input >> 2 == 0 { "   <- defined row" } else { "" };
        println!("  ({:03b})        -> ({:03b}){marker}", input, output);
    }

    // the inverse is just the transposed permutation: nothing is lost
    let inverse = gate.inverse();
    for input in 0..1usize << gate.width() {
        assert_eq!(inverse.apply(gate.apply(input)), input);
    }
    println!("inverse verified on all {} points", 1 << gate.width());

    // the same bijection as a unitary operator on C^8
    let u = gate.to_operator();
    println!(
        "as a {}x{} permutation matrix: unitary = {}",
        u.rows(),
        u.cols(),
        qra::tensor::is_unitary(&u, 0.0)?
    );
    Ok(())
}
