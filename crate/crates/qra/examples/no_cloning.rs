//! Why a unitary copier cannot exist: it would have to be nonlinear.
//!
//! The permutation that copies basis states, |x, 0> -> |x, x>, is perfectly
//! unitary. Applied to a superposition a|0> + b|1> it yields the entangled
//! state a|00> + b|11>, not the product clone (a|0> + b|1>)^(x2). The
//! fidelity against the ideal clone quantifies the failure.
//!
//! Run with: cargo run --example no_cloning

use num_complex::Complex64;
use qra::reversible::no_cloning_demo;

fn main() -> qra::Result<()> {
    println!("{:>8} {:>8}   fidelity |<ideal clone | copied state>|^2", "|a|^2", "|b|^2");
    for k in 0..=10 {
        let p = k as f64 / 10.0;
        let alpha = Complex64::new(p.sqrt(), 0.0);
        let beta = Complex64::new((1.0 - p).sqrt(), 0.0);
        let fidelity = no_cloning_demo(alpha, beta)?;
        let bar: String = std::iter::repeat('#').take((fidelity * 40.0).round() as usize).collect();
        println!("{:8.2} {:8.2}   {:.6}  {bar}", p, 1.0 - p, fidelity);
    }
    println!();
    println!("fidelity is 1 exactly when the state is a basis state (|a|^2 = 0 or 1)");
    println!("and drops to 1/2 at the equal superposition: copying quantum");
    println!("information would require a map that is linear on basis states");
    println!("but quadratic on amplitudes, which no unitary provides.");
    Ok(())
}
