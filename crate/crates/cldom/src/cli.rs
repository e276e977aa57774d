//! Command-line front end. Every subcommand is deterministic given its
//! arguments and prints line-oriented text, so outputs diff cleanly.
//!
//! Exit codes: 0 success; 1 parse or domain error; 2 not applicable (for
//! example, asking for a witness against the Borda rule); 3 enumeration
//! budget refusal; 4 a `verify` run that completed but found at least one
//! condition false.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::model::{
    format_rational, parse_rational, parse_score_vector, read_profile_file, score_notation_len,
    write_profile, Profile, Rational, ScoreVector,
};
use crate::montecarlo::{estimate_cl_selection, Culture, Estimate};
use crate::oracle::{
    borda_audit, cumulative_space_size, dominance_scan, minimal_witness_search, DEFAULT_BUDGET,
};
use crate::reduce::{classify, ReductionCase};
use crate::witness3::ThreeCase;
use crate::witnessgen::{verify_witness, witness};

#[derive(Parser)]
#[command(
    name = "cldom",
    version,
    about = "Positional scoring rules, Condorcet losers, and witness profiles"
)]
struct Cli {
    /// Alternative count used to expand score-vector aliases like
    /// `plurality`; an explicit comma list overrides it.
    #[arg(long, global = true, default_value_t = 3)]
    m: usize,

    /// Maximum number of profiles an enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a profile on which rule S uniquely elects a Condorcet
    /// loser that rule S' does not elect.
    Witness {
        s: String,
        sp: String,
        /// Also write the profile to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Annotate the profile with the construction steps.
        #[arg(long)]
        trace: bool,
    },
    /// Check the three witness conditions of a profile file.
    Verify {
        profile: PathBuf,
        s: String,
        sp: String,
        /// Alternative name, as declared in the profile file.
        target: String,
    },
    /// Report which construction route the pair of rules takes.
    Classify { s: String, sp: String },
    /// Exhaustively confirm that the Borda rule elects no Condorcet loser
    /// on any profile with up to NMAX voters.
    Audit {
        #[arg(long)]
        nmax: u64,
    },
    /// Enumerate all three-alternative profiles with up to NMAX voters and
    /// compare where the two rules elect Condorcet losers.
    Scan {
        s: String,
        sp: String,
        #[arg(long)]
        nmax: u64,
    },
    /// Find the fewest voters admitting a witness profile for S against S'.
    Minimal {
        s: String,
        sp: String,
        #[arg(long)]
        nmax: u64,
    },
    /// Estimate how often rules (1, s2, 0) elect a Condorcet loser on
    /// sampled electorates.
    Estimate {
        /// Middle scores to evaluate, comma separated (e.g. `0,1/2,1`).
        #[arg(long, value_delimiter = ',', required = true)]
        s2: Vec<String>,
        /// Voters per sampled electorate.
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "iac")]
        culture: String,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Report the proportion among profiles that have a Condorcet
        /// loser instead of among all draws.
        #[arg(long)]
        conditional: bool,
    },
    /// Print exact tallies, winners, and the Condorcet loser of a profile.
    Tally { profile: PathBuf, s: String },
}

/// Runs the CLI against explicit arguments and streams; returns the exit
/// code. `main` is a thin wrapper around this.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let stream: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(stream, "{e}");
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::NotApplicable(_) => 2,
                Error::BudgetExceeded { .. } => 3,
                _ => 1,
            }
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let m = cli.m;
    let budget = cli.budget;
    match cli.command {
        Command::Witness { s, sp, out: file, trace } => {
            let (s, sp) = parse_rule_pair(&s, &sp, m)?;
            cmd_witness(&s, &sp, file.as_deref(), trace, out)
        }
        Command::Verify { profile, s, sp, target } => {
            let profile = read_profile_file(&profile)?;
            let (s, sp) = parse_rules_for_profile(&s, &sp, &profile)?;
            cmd_verify(&profile, &s, &sp, &target, out)
        }
        Command::Classify { s, sp } => {
            let (s, sp) = parse_rule_pair(&s, &sp, m)?;
            cmd_classify(&s, &sp, out)
        }
        Command::Audit { nmax } => cmd_audit(m, nmax, budget, out),
        Command::Scan { s, sp, nmax } => {
            let (s, sp) = parse_rule_pair(&s, &sp, 3)?;
            cmd_scan(&s, &sp, nmax, budget, out)
        }
        Command::Minimal { s, sp, nmax } => {
            let (s, sp) = parse_rule_pair(&s, &sp, 3)?;
            cmd_minimal(&s, &sp, nmax, budget, out)
        }
        Command::Estimate { s2, n, culture, samples, seed, conditional } => {
            let s2: Vec<Rational> = s2.iter().map(|t| parse_rational(t)).collect::<Result<_>>()?;
            cmd_estimate(&s2, n, culture.parse()?, samples, seed, conditional, out)
        }
        Command::Tally { profile, s } => {
            let profile = read_profile_file(&profile)?;
            let s = parse_score_vector(&s, profile.m())?;
            cmd_tally(&profile, &s, out)
        }
    }
}

/// Parses two score vectors that must share one length: an explicit comma
/// list fixes it, aliases adopt it, and `--m` decides when both are aliases.
fn parse_rule_pair(a: &str, b: &str, m: usize) -> Result<(ScoreVector, ScoreVector)> {
    let (la, lb) = (score_notation_len(a), score_notation_len(b));
    if let (Some(x), Some(y)) = (la, lb) {
        if x != y {
            return Err(Error::DimensionMismatch { got: y, want: x });
        }
    }
    let m = la.or(lb).unwrap_or(m);
    Ok((parse_score_vector(a, m)?, parse_score_vector(b, m)?))
}

fn parse_rules_for_profile(
    a: &str,
    b: &str,
    profile: &Profile,
) -> Result<(ScoreVector, ScoreVector)> {
    Ok((
        parse_score_vector(a, profile.m())?,
        parse_score_vector(b, profile.m())?,
    ))
}

fn cmd_witness(
    s: &ScoreVector,
    sp: &ScoreVector,
    file: Option<&std::path::Path>,
    trace: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let report = witness(s, sp)?;
    let mut text = String::new();
    text.push_str(&format!("# f: ({s})\n# f': ({sp})\n"));
    text.push_str(&format!(
        "# target: {}\n",
        report.profile.alternatives().name(report.target)
    ));
    if trace {
        for step in &report.trace {
            text.push_str(&format!("# trace: {step}\n"));
        }
    }
    text.push_str(&write_profile(&report.profile));
    if let Some(path) = file {
        std::fs::write(path, &text)?;
    }
    write!(out, "{text}")?;
    Ok(0)
}

fn cmd_verify(
    profile: &Profile,
    s: &ScoreVector,
    sp: &ScoreVector,
    target: &str,
    out: &mut dyn Write,
) -> Result<i32> {
    let target = profile.alternatives().by_name(target)?;
    let (cl, unique, excluded) = verify_witness(profile, s, sp, target)?;
    let word = |b: bool| if b { "yes" } else { "no" };
    writeln!(
        out,
        "CL: {}; f-unique-winner: {}; f'-excludes: {}",
        word(cl),
        word(unique),
        word(excluded)
    )?;
    Ok(if cl && unique && excluded { 0 } else { 4 })
}

fn cmd_classify(s: &ScoreVector, sp: &ScoreVector, out: &mut dyn Write) -> Result<i32> {
    if s.len() == 3 {
        if s.len() != sp.len() {
            return Err(Error::DimensionMismatch { got: sp.len(), want: s.len() });
        }
        if s.is_borda() {
            return Err(Error::NotApplicable(
                "the Borda rule never elects a Condorcet loser, so it has no witness".into(),
            ));
        }
        if s == sp {
            return Err(Error::NotApplicable(
                "identical rules select identical winners on every profile".into(),
            ));
        }
        let case = ThreeCase::of(s.at(2), sp.at(2))?;
        writeln!(out, "route: three-alternative; case = {}", case.label())?;
        return Ok(0);
    }
    let case = classify(s, sp)?;
    match &case {
        ReductionCase::Average { s, sp }
        | ReductionCase::DropFirst { s, sp }
        | ReductionCase::DropLast { s, sp } => {
            writeln!(
                out,
                "route: {}; derived f = ({s}); derived f' = ({sp})",
                case.label()
            )?;
        }
        ReductionCase::SpecialLow { alpha } | ReductionCase::SpecialHigh { alpha } => {
            writeln!(out, "route: {}; alpha = {}", case.label(), format_rational(alpha))?;
        }
    }
    Ok(0)
}

fn cmd_audit(m: usize, nmax: u64, budget: u128, out: &mut dyn Write) -> Result<i32> {
    let violations = borda_audit(m, nmax, budget)?;
    let parts: u64 = (1..=m as u64).product();
    writeln!(out, "profiles: {}", cumulative_space_size(parts, nmax))?;
    writeln!(out, "violations: {violations}")?;
    Ok(0)
}

fn cmd_scan(
    s: &ScoreVector,
    sp: &ScoreVector,
    nmax: u64,
    budget: u128,
    out: &mut dyn Write,
) -> Result<i32> {
    let report = dominance_scan(s, sp, nmax, budget)?;
    writeln!(
        out,
        "{:>6} {:>10} {:>10} {:>10} {:>10}",
        "n", "elects-f", "elects-f'", "only-f", "only-f'"
    )?;
    for row in &report.rows {
        writeln!(
            out,
            "{:>6} {:>10} {:>10} {:>10} {:>10}",
            row.n, row.in_s, row.in_sp, row.only_s, row.only_sp
        )?;
    }
    writeln!(out, "total only-f: {}", report.total_only_s())?;
    writeln!(out, "total only-f': {}", report.total_only_sp())?;
    if let Some(example) = &report.example_only_s {
        writeln!(out, "\n# profile where only f elects the Condorcet loser:")?;
        write!(out, "{}", write_profile(example))?;
    }
    if let Some(example) = &report.example_only_sp {
        writeln!(out, "\n# profile where only f' elects the Condorcet loser:")?;
        write!(out, "{}", write_profile(example))?;
    }
    Ok(0)
}

fn cmd_minimal(
    s: &ScoreVector,
    sp: &ScoreVector,
    nmax: u64,
    budget: u128,
    out: &mut dyn Write,
) -> Result<i32> {
    match minimal_witness_search(s, sp, nmax, budget)? {
        Some((n, profile)) => {
            writeln!(out, "minimal witness at n = {n}")?;
            write!(out, "{}", write_profile(&profile))?;
        }
        None => writeln!(out, "no witness within n <= {nmax}")?,
    }
    Ok(0)
}

fn cmd_estimate(
    s2s: &[Rational],
    n: u64,
    culture: Culture,
    samples: u64,
    seed: u64,
    conditional: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let estimates: Vec<Estimate> = s2s
        .iter()
        .map(|s2| estimate_cl_selection(s2, n, culture, samples, conditional, seed))
        .collect::<Result<_>>()?;
    writeln!(
        out,
        "culture: {culture}; n: {n}; samples: {samples}; seed: {seed}; conditional: {}",
        if conditional { "yes" } else { "no" }
    )?;
    writeln!(
        out,
        "{:>8} {:>12} {:>12} {:>10} {:>12}",
        "s2", "point", "std-err", "hits", "qualifying"
    )?;
    for (s2, e) in s2s.iter().zip(&estimates) {
        writeln!(
            out,
            "{:>8} {:>12.6} {:>12.6} {:>10} {:>12}",
            format_rational(s2),
            e.point,
            e.std_error,
            e.hits,
            e.qualifying
        )?;
    }
    writeln!(out)?;
    for (s2, e) in s2s.iter().zip(&estimates) {
        writeln!(
            out,
            "record s2={} point={:.7} stderr={:.7} samples={} culture={culture} conditional={}",
            format_rational(s2),
            e.point,
            e.std_error,
            e.qualifying,
            e.conditional
        )?;
    }
    Ok(0)
}

fn cmd_tally(profile: &Profile, s: &ScoreVector, out: &mut dyn Write) -> Result<i32> {
    let alts = profile.alternatives();
    writeln!(out, "voters: {}", profile.voter_count())?;
    for (id, total) in profile.total_scores(s)?.iter().enumerate() {
        writeln!(
            out,
            "score {} = {}",
            alts.name(crate::model::Alt(id)),
            format_rational(total)
        )?;
    }
    let winners: Vec<&str> = profile
        .winners(s)?
        .into_iter()
        .map(|a| alts.name(a))
        .collect();
    writeln!(out, "winners: {}", winners.join(" "))?;
    match profile.condorcet_loser() {
        Some(a) => writeln!(out, "condorcet loser: {}", alts.name(a))?,
        None => writeln!(out, "condorcet loser: none")?,
    }
    Ok(0)
}
