//! Searches the full space of small three-alternative electorates for the
//! fewest voters on which plurality uniquely elects a Condorcet loser that
//! the Borda count does not elect. The answer is seven.

use cldom::model::{rat, write_profile};
use cldom::oracle::{minimal_witness_search, DEFAULT_BUDGET};
use cldom::ScoreVector;

fn main() -> cldom::Result<()> {
    let plurality = ScoreVector::three(rat(0))?;
    let borda = ScoreVector::borda(3)?;
    match minimal_witness_search(&plurality, &borda, 9, DEFAULT_BUDGET)? {
        Some((n, profile)) => {
            println!("minimal witness at n = {n}");
            print!("{}", write_profile(&profile));
        }
        None => println!("no witness with nine voters or fewer"),
    }

    // The reverse direction can never succeed: no profile exists on which
    // the Borda count elects a Condorcet loser.
    match minimal_witness_search(&borda, &plurality, 9, DEFAULT_BUDGET)? {
        Some(_) => unreachable!("the Borda rule never elects a Condorcet loser"),
        None => println!("reverse direction: no witness, as guaranteed"),
    }
    Ok(())
}
