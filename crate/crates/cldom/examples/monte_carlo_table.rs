//! Sweeps the middle score s2 over 0, 0.1, .., 1 and estimates how often
//! the rule (1, s2, 0) elects a Condorcet loser in 101-voter electorates
//! drawn from the impartial anonymous culture. The curve is U-shaped and
//! exactly zero at the Borda point s2 = 1/2.
//!
//! Usage: monte_carlo_table [SAMPLES] (default 200000)

use cldom::{format_rational, table2_sweep, Culture};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples: u64 = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(200_000);

    let n = 101;
    let seed = 42;
    let rows = table2_sweep(n, Culture::Iac, samples, seed)?;

    println!("Condorcet-loser selection frequency, n = {n}, IAC, {samples} samples, seed {seed}");
    println!();
    println!("{:>6}  {:>12}  {:>10}  {:>12}  {:>10}", "s2", "conditional", "std err", "unconditional", "std err");
    for row in &rows {
        println!(
            "{:>6}  {:>12.5}  {:>10.5}  {:>12.5}  {:>10.5}",
            format_rational(&row.s2),
            row.conditional.point,
            row.conditional.std_error,
            row.unconditional.point,
            row.unconditional.std_error,
        );
    }
    println!();
    println!(
        "{} of {} draws had a Condorcet loser",
        rows[0].conditional.qualifying, samples
    );
    Ok(())
}
