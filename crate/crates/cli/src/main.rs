use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use formwidth::bench::{run_bench, BenchConfig, Family};
use formwidth::cases::{builtin_case, builtin_case_specs, verify_case};
use formwidth::enumerate::{enumerate_abc_acb, enumerate_fw_alt, EnumerationQuery};
use formwidth::fixtures::{diff_lines, Appendix, GoldenFixture};
use formwidth::fw::{fw, fw_pv_with, Algorithm, FwOptions};
use formwidth::{alternation_length, par, parse_sequence};

#[derive(Parser)]
#[command(name = "formwidth", version, about = "Formation width of sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Pv,
    Tree,
    Binary,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Pv => Algorithm::PermutationVector,
            AlgoArg::Tree => Algorithm::Tree,
            AlgoArg::Binary => Algorithm::Binary,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Lines,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Abc,
    Abcd,
}

#[derive(Subcommand)]
enum Command {
    /// Print the formation width of a sequence.
    Fw {
        sequence: String,
        #[arg(long, value_enum, default_value = "pv")]
        algo: AlgoArg,
        /// Run the other algorithms too and fail unless all agree.
        #[arg(long)]
        crosscheck: bool,
        /// Also print a binary formation with one block fewer that avoids the sequence.
        #[arg(long)]
        witness: bool,
        /// Reject input that is not already normalized.
        #[arg(long)]
        no_normalize: bool,
        /// Enable dominance pruning of match vectors.
        #[arg(long)]
        prune: bool,
    },
    /// Print the alternation length of a sequence.
    Altlen {
        sequence: String,
        #[arg(long)]
        no_normalize: bool,
    },
    /// List every sequence with formation width X and alternation length X+1.
    Enumerate {
        #[arg(long = "fw")]
        x: usize,
        #[arg(long, default_value_t = 3)]
        letters: usize,
        #[arg(long)]
        max_len: Option<usize>,
        /// Also report sequences using fewer than LETTERS distinct letters.
        #[arg(long)]
        any_alphabet: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "lines")]
        format: Format,
        #[arg(long, env = "FORMWIDTH_THREADS")]
        threads: Option<usize>,
    },
    /// List words built from blocks 012 (bit 1) and 021 (bit 0) as "<bits> <sequence> <fw>".
    AbcEnum {
        #[arg(long)]
        blocks: usize,
        /// Keep every word instead of only those with formation width 2T-1.
        #[arg(long)]
        all: bool,
    },
    /// Check the 4-block coverage cases behind the 2t+3 families.
    VerifyProp {
        /// Case number 1-5, or "all".
        #[arg(long, default_value = "all")]
        case: String,
    },
    /// Regenerate a shipped appendix listing and compare it line by line.
    Golden { appendix: String },
    /// Time the tree and permutation-vector algorithms on (abc)^t or (abcd)^t.
    Bench {
        #[arg(long, value_enum, default_value = "abc")]
        family: FamilyArg,
        #[arg(long, default_value_t = 10)]
        t_max: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>()
        .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

fn emit(stdout: &mut impl Write, out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            write!(stdout, "{text}")?;
            Ok(())
        }
    }
}

/// Returns whether every requested check passed.
fn run(cli: Cli) -> Result<bool> {
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Fw {
            sequence,
            algo,
            crosscheck,
            witness,
            no_normalize,
            prune,
        } => {
            let u = parse_sequence(&sequence, !no_normalize)?;
            let opts = FwOptions {
                dominance_pruning: prune,
                ..FwOptions::default()
            };
            let res = fw(&u, algo.into(), crosscheck, opts)?;
            writeln!(stdout, "{}", res.s)?;
            if witness {
                match res.witness {
                    Some(w) if w.blocks() == 0 => writeln!(stdout, "witness: (empty)")?,
                    Some(w) => writeln!(stdout, "witness: {w}")?,
                    None => writeln!(stdout, "witness: none")?,
                }
            }
            Ok(true)
        }
        Command::Altlen {
            sequence,
            no_normalize,
        } => {
            let u = parse_sequence(&sequence, !no_normalize)?;
            writeln!(stdout, "{}", alternation_length(&u))?;
            Ok(true)
        }
        Command::Enumerate {
            x,
            letters,
            max_len,
            any_alphabet,
            out,
            format,
            threads,
        } => {
            if let Some(n) = threads {
                par::set_threads(n.max(1));
            }
            let mut q = EnumerationQuery::new(x, letters);
            q.max_len = max_len;
            q.require_exact_alphabet = !any_alphabet;
            q.parallel = threads.map_or(q.parallel, |n| n > 1);
            let found = enumerate_fw_alt(&q)?;
            let mut text = String::new();
            for u in &found {
                match format {
                    Format::Lines => text.push_str(&format!("{u}\n")),
                    Format::Json => {
                        let start = Instant::now();
                        let res = fw_pv_with(u, FwOptions::sequential())?;
                        let record = json!({
                            "sequence": u.to_string(),
                            "fw": res.s,
                            "algorithm": res.algorithm.name(),
                            "elapsed_s": start.elapsed().as_secs_f64(),
                        });
                        text.push_str(&format!("{record}\n"));
                    }
                }
            }
            emit(&mut stdout, &out, &text)?;
            Ok(true)
        }
        Command::AbcEnum { blocks, all } => {
            for rec in enumerate_abc_acb(blocks, !all, FwOptions::default().parallel)? {
                writeln!(stdout, "{rec}")?;
            }
            Ok(true)
        }
        Command::VerifyProp { case } => {
            let specs = if case == "all" {
                builtin_case_specs()
            } else {
                let id: usize = case
                    .parse()
                    .with_context(|| format!("unknown case {case:?}"))?;
                vec![builtin_case(id)?]
            };
            let mut ok = true;
            writeln!(
                stdout,
                "{:<5} {:<18} {:<28} {:<28} result",
                "case", "family", "computed", "claimed"
            )?;
            for spec in &specs {
                let rep = verify_case(spec)?;
                ok &= rep.pass;
                writeln!(
                    stdout,
                    "{:<5} {:<18} {:<28} {:<28} {}",
                    rep.id,
                    spec.family,
                    rep.computed.join(","),
                    rep.claimed.join(","),
                    if rep.pass { "PASS" } else { "FAIL" }
                )?;
                writeln!(stdout, "      witnesses: {}", spec.witnesses.join(" "))?;
            }
            Ok(ok)
        }
        Command::Golden { appendix } => {
            let appendix: Appendix = appendix.parse()?;
            let fixture = GoldenFixture::builtin(appendix);
            let generated: Vec<String> = match appendix.width() {
                Some(x) => enumerate_fw_alt(&EnumerationQuery::new(x, 3))?
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
                None => {
                    let mut lines = Vec::new();
                    for t in 3..=12 {
                        lines.extend(
                            enumerate_abc_acb(t, true, true)?
                                .iter()
                                .map(ToString::to_string),
                        );
                    }
                    lines
                }
            };
            let diff = diff_lines(&fixture, &generated);
            for m in &diff.missing {
                writeln!(stdout, "missing {m}")?;
            }
            for e in &diff.extra {
                writeln!(stdout, "extra {e}")?;
            }
            for f in &diff.flagged {
                writeln!(
                    stdout,
                    "flagged {f} (listed in appendix {appendix} but fails its criteria)"
                )?;
            }
            if !diff.order_matches {
                writeln!(stdout, "order differs")?;
            }
            let ok = diff.is_clean();
            writeln!(
                stdout,
                "appendix {appendix}: {} generated, {} listed: {}",
                generated.len(),
                fixture.lines.len(),
                if ok { "PASS" } else { "FAIL" }
            )?;
            Ok(ok)
        }
        Command::Bench {
            family,
            t_max,
            trials,
            out,
        } => {
            if trials == 0 {
                bail!("--trials must be at least 1");
            }
            let family = match family {
                FamilyArg::Abc => Family::Abc,
                FamilyArg::Abcd => Family::Abcd,
            };
            let report = run_bench(&BenchConfig::new(family, t_max, trials))?;
            match &out {
                Some(_) => {
                    emit(&mut stdout, &out, &report.to_csv())?;
                    write!(stdout, "{}", report.to_table())?;
                }
                None => write!(stdout, "{}", report.to_csv())?,
            }
            Ok(true)
        }
    }
}
