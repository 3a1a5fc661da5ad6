//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
//! exceeded.

pub mod output;

use std::collections::HashMap;
use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use crate::bijections::{
    all_choice_sequences, ballot_to_monomial, ballot_to_tree, monomial_to_ballot,
    monomial_to_choices, tree_to_ballot,
};
use crate::coefficient::{catalan, triangle_row, BinomialTable};
use crate::error::{Error, Result};
use crate::greedy;
use crate::identities::verify_identities;
use crate::maxsearch::{self, max_coefficient, Method, SearchBounds};
use crate::monomial::{self, Monomial};
use crate::oracle;

pub use output::{Format, OutputRecord, Row, TextLayout};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Largest `n` for which every choice sequence (`n!` of them) is listed.
pub const CHOICE_COUNT_BOUND: usize = 9;
/// Largest `n` for which the local-move monotonicity is checked everywhere.
pub const TRANSFORM_CHECK_BOUND: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "pncoef",
    version,
    about = "Coefficients of the monomials of x1(x1+x2)...(x1+...+xn)"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Largest n for full expansion / full coefficient rows.
    #[arg(long, global = true, env = "PNCOEF_ORACLE_BOUND", default_value_t = oracle::DEFAULT_ORACLE_BOUND)]
    pub oracle_bound: usize,

    /// Largest n for exhaustive search over all monomials.
    #[arg(long, global = true, env = "PNCOEF_BRUTE_BOUND", default_value_t = SearchBounds::default().bruteforce)]
    pub brute_bound: usize,

    /// Largest n for search over nonincreasing monomials.
    #[arg(long, global = true, default_value_t = SearchBounds::default().sorted)]
    pub sorted_bound: usize,

    /// Largest n for search over staircase monomials.
    #[arg(long, global = true, default_value_t = SearchBounds::default().stairs)]
    pub stairs_bound: usize,
}

impl Default for Config {
    fn default() -> Self {
        let b = SearchBounds::default();
        Config {
            threads: None,
            oracle_bound: oracle::DEFAULT_ORACLE_BOUND,
            brute_bound: b.bruteforce,
            sorted_bound: b.sorted,
            stairs_bound: b.stairs,
        }
    }
}

impl Config {
    pub fn search_bounds(&self) -> SearchBounds {
        SearchBounds {
            bruteforce: self.brute_bound,
            sorted: self.sorted_bound,
            stairs: self.stairs_bound,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodArg {
    Bruteforce,
    Sorted,
    Stairs,
    Greedy,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Bruteforce => Method::Bruteforce,
            MethodArg::Sorted => Method::Sorted,
            MethodArg::Stairs => Method::Stairs,
            MethodArg::Greedy => Method::Greedy,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient triangle rows 1..=n in monomial order.
    Triangle {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every identity, bijection and search invariant up to n_max.
    Verify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
    },
    /// Maximal coefficient of p_n (or of p_n..=p_to).
    Max {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Last n of a consecutive run; adds the quotients m_(n+1)/m_n.
        #[arg(long)]
        to: Option<u64>,
        #[arg(long, value_enum, default_value_t = MethodArg::Stairs)]
        method: MethodArg,
        /// List every maximizing monomial instead of the first.
        #[arg(long)]
        all_argmax: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Greedy sequence r_1..r_l with coefficients s_1..s_l.
    Greedy {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        l: u64,
        /// Omit the monomials r_n.
        #[arg(long)]
        coefficients_only: bool,
        /// Print the candidates considered at step n (repeatable).
        #[arg(long)]
        explain: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List monomial / ballot sequence / plane tree / choice correspondences.
    Bijection {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

/// Coefficient triangle rows `1..=n`, indexed consecutively from 1.
pub fn cmd_triangle(n: usize, config: &Config) -> Result<OutputRecord> {
    if n > config.oracle_bound {
        return Err(Error::BudgetExceeded {
            what: "triangle rows",
            n,
            bound: config.oracle_bound,
        });
    }
    let mut rows = Vec::new();
    for k in 1..=n {
        for (a, c) in triangle_row(k)?.entries {
            rows.push(Row::new(rows.len() + 1, c.into_inner()).with_monomial(a));
        }
    }
    Ok(OutputRecord::new(rows, TextLayout::Grouped))
}

/// Maximal coefficients for `n..=to`. With `all_argmax` every maximizer
/// gets its own row (same index).
pub fn cmd_max(
    n: usize,
    to: Option<usize>,
    method: Method,
    all_argmax: bool,
    config: &Config,
) -> Result<OutputRecord> {
    let to = to.unwrap_or(n);
    if to < n {
        return Err(Error::Precondition(format!("--to {to} is below n = {n}")));
    }
    let bounds = config.search_bounds();
    let results = (n..=to)
        .map(|k| max_coefficient(k, method, &bounds))
        .collect::<Result<Vec<_>>>()?;
    let ms: Vec<_> = results.iter().map(|r| r.m.clone()).collect();
    let qs = maxsearch::quotients(&ms)?;
    let mut rows = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        let q = qs.get(i).map(|q| q.to_string());
        let take = if all_argmax { r.argmax.len() } else { 1 };
        for a in r.argmax.into_iter().take(take) {
            let mut row = Row::new(r.n, r.m.value().clone()).with_monomial(a);
            if let Some(q) = &q {
                row = row.with_quotient(q.clone());
            }
            rows.push(row);
        }
    }
    Ok(OutputRecord::new(rows, TextLayout::Rows))
}

/// The greedy run as `(n, s_n, r_n)` rows plus a plain-text report on ties
/// and the quotient pattern.
pub fn cmd_greedy(
    l: usize,
    coefficients_only: bool,
    explain: &[usize],
) -> Result<(OutputRecord, Vec<String>)> {
    let mut report = Vec::new();
    let mut rows = Vec::new();
    let mut s = Vec::new();
    for step in greedy::Greedy::new().take(l) {
        if step.had_tie() {
            report.push(format!(
                "warning: tie at n = {} between positions {:?}; took position {} -> {}",
                step.n, step.tied_positions, step.tied_positions[0], step.r
            ));
        }
        if explain.contains(&step.n) {
            report.push(format!("step {}: candidates in scan order", step.n));
            for c in &step.candidates {
                let mark = if c.monomial == step.r {
                    " <- chosen"
                } else {
                    ""
                };
                report.push(format!(
                    "  position {:>3}: {} coefficient {}{mark}",
                    c.position, c.monomial, c.coefficient
                ));
            }
        }
        let mut row = Row::new(step.n, step.s.value().clone());
        if !coefficients_only {
            row = row.with_monomial(step.r);
        }
        rows.push(row);
        s.push(step.s);
    }
    let pattern = greedy::quotient_pattern(&s)?;
    let fmt_list = |v: Vec<String>| v.join(", ");
    report.push(format!(
        "integral quotients s_(n+1)/s_n at n = {}",
        fmt_list(
            pattern
                .integral_positions()
                .iter()
                .map(|n| n.to_string())
                .collect()
        )
    ));
    report.push(format!(
        "integers missing among integral quotients: {{{}}}",
        fmt_list(pattern.missing.iter().map(|q| q.to_string()).collect())
    ));
    Ok((OutputRecord::new(rows, TextLayout::Rows), report))
}

/// One line of `verify` output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub n: usize,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} n={}: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.n,
            self.detail
        )
    }
}

fn check(name: &str, n: usize, pass: bool, detail: String) -> CheckReport {
    CheckReport {
        name: name.to_string(),
        n,
        pass,
        detail,
    }
}

/// Runs every verification for sizes `1..=n_max`. Checks whose cost grows
/// too fast are limited to their bounds and say so in the output.
pub fn verify_reports(n_max: usize, config: &Config) -> Result<Vec<CheckReport>> {
    if n_max == 0 {
        return Err(Error::SizeTooSmall { n: 0, min: 1 });
    }
    let bounds = config.search_bounds();
    let mut out = Vec::new();
    for n in 1..=n_max {
        let enumerable = n <= config.oracle_bound;

        if enumerable {
            let count = monomial::enumerate(n)?.count();
            let want = catalan(n as u64);
            out.push(check(
                "count",
                n,
                BigUint::from(count) == want,
                format!("|A_n| = {count}, C_n = {want}"),
            ));

            let poly = oracle::expand_bounded(n, config.oracle_bound)?;
            let row = triangle_row(n)?;
            let mismatches = row
                .entries
                .iter()
                .filter(|(a, c)| poly.coefficient(a.exponents()) != Some(c.value()))
                .count();
            out.push(check(
                "oracle_equivalence",
                n,
                mismatches == 0 && poly.len() == row.entries.len(),
                format!("{} oracle terms, {} mismatches", poly.len(), mismatches),
            ));
        }

        for r in verify_identities(n, config.oracle_bound)? {
            let mut detail = format!(
                "params={:?} formula={} check={} ({})",
                r.parameters, r.formula_value, r.enumerated_value, r.mode
            );
            if let Some(note) = &r.note {
                detail.push_str(" -- ");
                detail.push_str(note);
            }
            out.push(check(r.name, n, r.pass, detail));
        }

        if enumerable {
            let mut failures = 0usize;
            let mut trees = std::collections::HashSet::new();
            for a in monomial::enumerate(n)? {
                let b = monomial_to_ballot(&a);
                let t = ballot_to_tree(&b);
                let ok = ballot_to_monomial(&b) == a
                    && tree_to_ballot(&t).as_ref() == Ok(&b)
                    && t.num_vertices() == n + 1;
                let ch = monomial_to_choices(&a);
                let ok = ok && ch.exponents() == a.exponents();
                if !ok {
                    failures += 1;
                }
                trees.insert(t);
            }
            let want = catalan(n as u64);
            out.push(check(
                "bijection_round_trips",
                n,
                failures == 0 && BigUint::from(trees.len()) == want,
                format!("{failures} failures, {} distinct trees", trees.len()),
            ));
        }

        if n <= CHOICE_COUNT_BOUND {
            let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
            for c in all_choice_sequences(n) {
                *counts.entry(c.exponents()).or_default() += 1;
            }
            let table = BinomialTable::new(n);
            let mismatches = counts
                .iter()
                .filter(|(v, &k)| {
                    Monomial::new(v.to_vec())
                        .map(|a| table.coefficient(&a) != k)
                        .unwrap_or(true)
                })
                .count();
            out.push(check(
                "choice_counting",
                n,
                mismatches == 0 && BigUint::from(counts.len()) == catalan(n as u64),
                format!(
                    "{} monomials reached, {mismatches} mismatches",
                    counts.len()
                ),
            ));
        }

        if n <= TRANSFORM_CHECK_BOUND {
            let (swaps, smooths, violations) = transform_violations(n)?;
            out.push(check(
                "transform_monotonicity",
                n,
                violations == 0,
                format!("{swaps} swaps, {smooths} smoothings, {violations} violations"),
            ));
        }

        if n <= bounds.bruteforce {
            let brute = max_coefficient(n, Method::Bruteforce, &bounds)?;
            let sorted = max_coefficient(n, Method::Sorted, &bounds)?;
            let stairs = max_coefficient(n, Method::Stairs, &bounds)?;
            let greedy_s = greedy::run(n)?.s(n).cloned().expect("n steps");
            let pass = brute.m == sorted.m && sorted.m == stairs.m && stairs.m == greedy_s;
            out.push(check(
                "max_agreement",
                n,
                pass,
                format!(
                    "bruteforce={} sorted={} stairs={} greedy={}",
                    brute.m, sorted.m, stairs.m, greedy_s
                ),
            ));
        }
    }
    Ok(out)
}

/// Applies every applicable swap and smoothing move to every monomial of
/// `p_n`; returns (swap count, smoothing count, violations).
pub fn transform_violations(n: usize) -> Result<(usize, usize, usize)> {
    let table = BinomialTable::new(n);
    let (mut swaps, mut smooths, mut bad) = (0, 0, 0);
    for a in monomial::enumerate(n)? {
        let c = table.coefficient(&a);
        let v = a.exponents();
        for i in 1..n {
            if v[i - 1] < v[i] {
                swaps += 1;
                let b = maxsearch::swap_transform(&a, i)?;
                if table.coefficient(&b) <= c {
                    bad += 1;
                }
            }
            if v[i - 1] > v[i] + 1 {
                smooths += 1;
                let b = maxsearch::smooth_transform(&a, i)?;
                if table.coefficient(&b) < c {
                    bad += 1;
                }
            }
        }
    }
    Ok((swaps, smooths, bad))
}

/// Correspondence listing for `bijection`.
pub fn bijection_lines(n: usize, config: &Config) -> Result<Vec<String>> {
    if n > config.oracle_bound {
        return Err(Error::BudgetExceeded {
            what: "bijection listing",
            n,
            bound: config.oracle_bound,
        });
    }
    let mut lines = vec!["monomial\tballot\ttree\tchoices".to_string()];
    for a in monomial::enumerate(n)? {
        let b = monomial_to_ballot(&a);
        let t = ballot_to_tree(&b);
        let ch = monomial_to_choices(&a);
        lines.push(format!("{a}\t{:?}\t{t}\t{:?}", b.entries(), ch.indices()));
    }
    Ok(lines)
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// Parses the process arguments, runs the command and returns the exit
/// code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

pub fn run(cli: Cli) -> Result<i32> {
    if let Some(t) = cli.config.threads {
        // only fails if a pool already exists, in which case it is kept
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let config = &cli.config;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut emit = |s: &str| {
        let _ = out.write_all(s.as_bytes());
    };
    match cli.command {
        Command::Triangle { n, format } => {
            emit(&cmd_triangle(n as usize, config)?.render(format));
        }
        Command::Max {
            n,
            to,
            method,
            all_argmax,
            format,
        } => {
            let rec = cmd_max(
                n as usize,
                to.map(|t| t as usize),
                method.into(),
                all_argmax && format != Format::Bfile,
                config,
            )?;
            emit(&rec.render(format));
        }
        Command::Greedy {
            l,
            coefficients_only,
            explain,
            format,
        } => {
            let (rec, report) = cmd_greedy(l as usize, coefficients_only, &explain)?;
            emit(&rec.render(format));
            for line in report {
                eprintln!("{line}");
            }
        }
        Command::Verify { n_max } => {
            let reports = verify_reports(n_max as usize, config)?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            for r in &reports {
                emit(&format!("{r}\n"));
            }
            emit(&format!("{} checks, {failed} failed\n", reports.len()));
            if failed > 0 {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Bijection { n } => {
            for line in bijection_lines(n as usize, config)? {
                emit(&format!("{line}\n"));
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_text_rows() {
        let rec = cmd_triangle(3, &Config::default()).unwrap();
        assert_eq!(rec.render(Format::Text), "1\n1 1\n1 2 1 1 1\n");
        let rec = cmd_triangle(1, &Config::default()).unwrap();
        assert_eq!(rec.render(Format::Bfile), "1 1\n");
        let rec = cmd_triangle(5, &Config::default()).unwrap();
        assert_eq!(rec.rows.len(), 64);
    }

    #[test]
    fn triangle_budget() {
        let config = Config {
            oracle_bound: 4,
            ..Config::default()
        };
        let e = cmd_triangle(5, &config).unwrap_err();
        assert_eq!(exit_code_for(&e), EXIT_BUDGET);
    }

    #[test]
    fn greedy_single_row() {
        let (rec, _) = cmd_greedy(1, false, &[]).unwrap();
        assert_eq!(rec.render(Format::Text), "1 1 (1)\n");
    }

    #[test]
    fn max_rows() {
        let config = Config::default();
        let rec = cmd_max(7, None, Method::Stairs, false, &config).unwrap();
        assert_eq!(rec.render(Format::Text), "7 96 (3,2,1,1,0,0,0)\n");
        let rec = cmd_max(5, None, Method::Bruteforce, true, &config).unwrap();
        assert_eq!(rec.rows.len(), 2);
        let rec = cmd_max(4, Some(5), Method::Stairs, false, &config).unwrap();
        assert_eq!(rec.rows[0].quotient.as_deref(), Some("9/4"));
        assert!(cmd_max(5, Some(4), Method::Stairs, false, &config).is_err());
    }

    #[test]
    fn verify_small_passes() {
        let reports = verify_reports(6, &Config::default()).unwrap();
        assert!(reports.iter().all(|r| r.pass), "{reports:#?}");
        assert!(verify_reports(0, &Config::default()).is_err());
    }
}
