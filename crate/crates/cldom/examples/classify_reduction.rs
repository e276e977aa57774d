//! Shows which reduction applies to pairs of rules with four or more
//! alternatives: averaging the middles, dropping the top score, dropping
//! the bottom one, or the direct cyclic constructions for the two special
//! constant-middle families.

use cldom::model::parse_score_vector;
use cldom::reduce::{classify, derived_vectors, ReductionCase};
use cldom::{format_rational, ScoreVector};

fn show(s: &ScoreVector, sp: &ScoreVector) -> cldom::Result<()> {
    println!("({s})  vs  ({sp})");
    let derived = derived_vectors(s)?;
    println!("  middle mean of f: {}", format_rational(&derived.middle_mean));
    let case = classify(s, sp)?;
    match &case {
        ReductionCase::Average { s, sp }
        | ReductionCase::DropFirst { s, sp }
        | ReductionCase::DropLast { s, sp } => {
            println!("  route: {}, recurse on ({s}) vs ({sp})", case.label());
        }
        ReductionCase::SpecialLow { alpha } | ReductionCase::SpecialHigh { alpha } => {
            println!(
                "  route: {}, direct cyclic profile with alpha = {}",
                case.label(),
                format_rational(alpha)
            );
        }
    }
    Ok(())
}

fn main() -> cldom::Result<()> {
    let pairs = [
        ("plurality", "borda"),
        ("1, 3/4, 1/4, 0", "1, 1/2, 1/4, 0"),
        ("1, 1/2, 1/4, 0", "1, 3/8, 3/8, 0"),
        ("1, 1/2, 1/2, 0", "1, 1/4, 1/4, 0"),
        ("1, 1/2, 1/2, 0", "1, 3/4, 3/4, 0"),
    ];
    for (a, b) in pairs {
        show(&parse_score_vector(a, 4)?, &parse_score_vector(b, 4)?)?;
    }
    Ok(())
}
