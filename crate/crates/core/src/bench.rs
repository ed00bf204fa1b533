//! Wall-clock comparison of formation-width algorithms.
//!
//! Each `(sequence, algorithm)` pair gets one untimed warmup run followed by
//! the configured number of timed trials. Algorithms always run sequentially
//! and one at a time.

use std::fmt::Write as _;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::fw::{fw, Algorithm, FwOptions};
use crate::sequence::Sequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `(abc)^t`
    Abc,
    /// `(abcd)^t`
    Abcd,
    /// Fixed sequences; the `t` values are ignored.
    Explicit(Vec<Sequence>),
}

impl Family {
    pub fn instances(&self, t_values: &[usize]) -> Vec<(String, Sequence)> {
        let periodic = |base: &str, t: usize| {
            let label = format!("({base})^{t}");
            let word: Vec<u8> = (0..base.len() as u8).cycle().take(base.len() * t).collect();
            (
                label,
                Sequence::from_normalized(word).expect("periodic word is normalized"),
            )
        };
        match self {
            Family::Abc => t_values.iter().map(|&t| periodic("abc", t)).collect(),
            Family::Abcd => t_values.iter().map(|&t| periodic("abcd", t)).collect(),
            Family::Explicit(seqs) => seqs.iter().map(|s| (s.to_string(), s.clone())).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub families: Vec<Family>,
    pub t_values: Vec<usize>,
    pub trials: usize,
    pub algorithms: Vec<Algorithm>,
}

impl BenchConfig {
    /// Tree against permutation-vector over `t = 1..=t_max`.
    pub fn new(family: Family, t_max: usize, trials: usize) -> Self {
        BenchConfig {
            families: vec![family],
            t_values: (1..=t_max).collect(),
            trials,
            algorithms: vec![Algorithm::Tree, Algorithm::PermutationVector],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Timing {
    pub algorithm: Algorithm,
    pub trials: Vec<f64>,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub label: String,
    pub sequence: Sequence,
    pub fw: usize,
    pub timings: Vec<Timing>,
}

impl BenchRow {
    pub fn mean(&self, algorithm: Algorithm) -> Option<f64> {
        self.timings
            .iter()
            .find(|t| t.algorithm == algorithm)
            .map(|t| t.mean)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    if config.trials == 0 {
        return Err(Error::Parse("at least one trial is required".into()));
    }
    let opts = FwOptions::sequential();
    let mut rows = Vec::new();
    for family in &config.families {
        for (label, sequence) in family.instances(&config.t_values) {
            let mut fw_value: Option<(Algorithm, usize)> = None;
            for &algorithm in &config.algorithms {
                let warm = fw(&sequence, algorithm, false, opts)?.s;
                match fw_value {
                    Some((first, s)) if s != warm => {
                        return Err(Error::Mismatch {
                            sequence: sequence.to_string(),
                            detail: format!("{first} gives {s}, {algorithm} gives {warm}"),
                        })
                    }
                    None => fw_value = Some((algorithm, warm)),
                    _ => {}
                }
            }
            // Trials alternate between algorithms so background noise lands on both.
            let mut samples = vec![Vec::with_capacity(config.trials); config.algorithms.len()];
            for _ in 0..config.trials {
                for (&algorithm, out) in config.algorithms.iter().zip(&mut samples) {
                    let start = Instant::now();
                    let res = fw(&sequence, algorithm, false, opts)?;
                    out.push(start.elapsed().as_secs_f64());
                    debug_assert_eq!(Some(res.s), fw_value.map(|(_, s)| s));
                }
            }
            let timings = config
                .algorithms
                .iter()
                .zip(samples)
                .map(|(&algorithm, trials)| {
                    let mean = trials.iter().sum::<f64>() / trials.len() as f64;
                    Timing {
                        algorithm,
                        trials,
                        mean,
                    }
                })
                .collect();
            let fw = fw_value.map_or(0, |(_, s)| s);
            rows.push(BenchRow {
                label,
                sequence,
                fw,
                timings,
            });
        }
    }
    Ok(BenchReport { rows })
}

impl BenchReport {
    /// Per-trial rows, a blank line, then the per-algorithm means.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("sequence,algorithm,trial,seconds\n");
        for row in &self.rows {
            for t in &row.timings {
                for (i, secs) in t.trials.iter().enumerate() {
                    let _ = writeln!(out, "{},{},{},{:.9}", row.label, t.algorithm, i + 1, secs);
                }
            }
        }
        out.push_str("\nsequence,algorithm,mean_seconds\n");
        for row in &self.rows {
            for t in &row.timings {
                let _ = writeln!(out, "{},{},{:.9}", row.label, t.algorithm, t.mean);
            }
        }
        out
    }

    /// Aligned text table with one mean column per algorithm.
    pub fn to_table(&self) -> String {
        let algos: Vec<Algorithm> = self
            .rows
            .first()
            .map(|r| r.timings.iter().map(|t| t.algorithm).collect())
            .unwrap_or_default();
        let mut out = format!("{:<16} {:>4}", "Sequence", "fw");
        for a in &algos {
            let _ = write!(out, " {:>14}", format!("Mean ({})", short_name(*a)));
        }
        out.push('\n');
        for row in &self.rows {
            let _ = write!(out, "{:<16} {:>4}", row.label, row.fw);
            for t in &row.timings {
                let _ = write!(out, " {:>14.6}", t.mean);
            }
            out.push('\n');
        }
        out
    }
}

fn short_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Binary => "BF",
        Algorithm::Tree => "FT",
        Algorithm::PermutationVector => "PV",
    }
}
