//! The classic disagreement: a 21-voter electorate where plurality elects
//! an alternative that loses every head-to-head majority contest, while the
//! Borda count elects someone else entirely.

use cldom::model::profile_from_lines;
use cldom::{format_rational, ScoreVector};

fn main() -> cldom::Result<()> {
    let profile = profile_from_lines(
        &["A", "B", "C"],
        &[
            (8, &["A", "B", "C"]),
            (7, &["B", "C", "A"]),
            (6, &["C", "B", "A"]),
        ],
    )?;
    let alts = profile.alternatives();

    for rule in [
        ScoreVector::three(cldom::model::rat(0))?,
        ScoreVector::borda(3)?,
    ] {
        println!("rule ({rule}):");
        for (id, total) in profile.total_scores(&rule)?.iter().enumerate() {
            println!("  score {} = {}", alts.name(cldom::Alt(id)), format_rational(total));
        }
        let winners: Vec<&str> = profile
            .winners(&rule)?
            .into_iter()
            .map(|a| alts.name(a))
            .collect();
        println!("  winners: {}", winners.join(" "));
    }

    match profile.condorcet_loser() {
        Some(a) => println!("Condorcet loser: {}", alts.name(a)),
        None => println!("Condorcet loser: none"),
    }
    Ok(())
}
