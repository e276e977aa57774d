//! Exhaustively confirms that the Borda rule never elects a Condorcet
//! loser on any three-alternative profile with up to ten voters, then spot
//! checks ten thousand random four-alternative electorates.

use cldom::montecarlo::{sample_profile, sample_seed, Culture};
use cldom::oracle::{borda_audit, cumulative_space_size, selects_cl, DEFAULT_BUDGET};
use cldom::ScoreVector;

fn main() -> cldom::Result<()> {
    let n_max = 10;
    let violations = borda_audit(3, n_max, DEFAULT_BUDGET)?;
    println!(
        "exhaustive: {} profiles with up to {n_max} voters, {violations} Borda violations",
        cumulative_space_size(6, n_max)
    );

    let borda4 = ScoreVector::borda(4)?;
    let mut random_violations = 0;
    for index in 0..10_000u64 {
        let profile = sample_profile(Culture::Iac, 1 + index % 25, 4, sample_seed(8, index))?;
        random_violations += selects_cl(&profile, &borda4)? as u64;
    }
    println!("random: 10000 four-alternative profiles, {random_violations} Borda violations");
    Ok(())
}
