//! Builds a three-alternative profile where plurality uniquely elects the
//! Condorcet loser but the Borda count does not, and shows the closed-form
//! score gaps that make the construction work.

use cldom::model::{frac, rat, write_profile};
use cldom::witness3::witness_three;
use cldom::{format_rational, verify_witness, ScoreVector};

fn main() -> cldom::Result<()> {
    let s2 = rat(0); // plurality
    let s2p = frac(1, 2); // Borda
    let (profile, params) = witness_three(&s2, &s2p)?;

    println!("construction: {}", params.case.label());
    println!("parameter b = {}", format_rational(&params.b));
    println!();
    print!("{}", write_profile(&profile));
    println!();

    let s = ScoreVector::three(s2.clone())?;
    let sp = ScoreVector::three(s2p.clone())?;
    let alts = profile.alternatives();
    let target = profile.condorcet_loser().expect("loser exists");
    let (cl, unique, excluded) = verify_witness(&profile, &s, &sp, target)?;
    println!("target {}: CL {cl}, unique winner under f {unique}, excluded by f' {excluded}", alts.name(target));

    for check in params.gap_checks(&s2, &s2p) {
        println!(
            "gap [{}] {} leads {} by {}",
            check.label,
            alts.name(check.ahead),
            alts.name(check.behind),
            format_rational(&check.value)
        );
    }
    Ok(())
}
