//! Enumerates every three-alternative profile with up to eight voters and
//! tabulates where plurality and antiplurality elect a Condorcet loser.
//! Neither set of failures contains the other: each rule fails on profiles
//! the other handles.

use cldom::model::{rat, write_profile};
use cldom::oracle::{dominance_scan, DEFAULT_BUDGET};
use cldom::ScoreVector;

fn main() -> cldom::Result<()> {
    let plurality = ScoreVector::three(rat(0))?;
    let antiplurality = ScoreVector::three(rat(1))?;
    let report = dominance_scan(&plurality, &antiplurality, 8, DEFAULT_BUDGET)?;

    println!(
        "{:>4} {:>10} {:>10} {:>10} {:>10}",
        "n", "plurality", "antiplur.", "only-plur", "only-anti"
    );
    for row in &report.rows {
        println!(
            "{:>4} {:>10} {:>10} {:>10} {:>10}",
            row.n, row.in_s, row.in_sp, row.only_s, row.only_sp
        );
    }

    if let Some(example) = &report.example_only_s {
        println!("\nonly plurality elects the loser here:");
        print!("{}", write_profile(example));
    }
    if let Some(example) = &report.example_only_sp {
        println!("\nonly antiplurality elects the loser here:");
        print!("{}", write_profile(example));
    }
    Ok(())
}
