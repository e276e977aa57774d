//! Synthesizes a five-alternative witness profile: the first rule uniquely
//! elects the Condorcet loser, the second does not elect it. The trace
//! shows how the construction recurses down to three alternatives.

use cldom::model::{parse_score_vector, write_profile};
use cldom::witness;

fn main() -> cldom::Result<()> {
    let s = parse_score_vector("1, 2/3, 1/3, 1/4, 0", 5)?;
    let sp = parse_score_vector("borda", 5)?;
    let report = witness(&s, &sp)?;

    println!("f  = ({s})");
    println!("f' = ({sp})");
    println!("target: {}", report.profile.alternatives().name(report.target));
    for step in &report.trace {
        println!("trace: {step}");
    }
    println!(
        "verified: CL {}, unique under f {}, excluded by f' {}",
        report.verdicts.0, report.verdicts.1, report.verdicts.2
    );
    println!();
    println!("{} voters:", report.profile.voter_count());
    print!("{}", write_profile(&report.profile));
    Ok(())
}
