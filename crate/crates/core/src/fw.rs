//! Formation width: the minimum number of blocks `s` such that every binary
//! `(r, s)`-formation on the sequence's `r` letters contains it.
//!
//! Three algorithms compute the same value:
//!
//! * [`fw_binary`] checks every canonical binary formation for each `s`.
//! * [`fw_tree`] grows formations one block at a time and stops extending a
//!   formation as soon as it contains the sequence.
//! * [`fw_pv`] replaces formations by their prefix-match vectors, one entry
//!   per permutation of the alphabet, and deduplicates identical vectors. The
//!   frontier is then bounded by `n^{r!}` independently of `s`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::formation::{initial_vector, BinaryFormation, ExtensionTable, MAX_BLOCKS};
use crate::par;
use crate::perm::PermutationTable;
use crate::sequence::{contains_isomorphic, Sequence};

/// Largest block count [`fw_binary`] will try.
pub const BINARY_MAX_BLOCKS: usize = 20;

/// Crosschecks include [`fw_binary`] only for sequences within these limits.
pub const CROSSCHECK_BINARY_MAX_R: usize = 3;
pub const CROSSCHECK_BINARY_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Binary,
    Tree,
    PermutationVector,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Binary => "binary",
            Algorithm::Tree => "tree",
            Algorithm::PermutationVector => "pv",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binary" => Ok(Algorithm::Binary),
            "tree" | "ft" => Ok(Algorithm::Tree),
            "pv" => Ok(Algorithm::PermutationVector),
            other => Err(Error::Parse(format!("unknown algorithm {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FwOptions {
    /// Spread frontier work over the rayon pool (needs the `parallel` feature).
    pub parallel: bool,
    /// Drop match vectors that dominate another vector entrywise (PV only).
    pub dominance_pruning: bool,
}

impl Default for FwOptions {
    fn default() -> Self {
        FwOptions {
            parallel: cfg!(feature = "parallel"),
            dominance_pruning: false,
        }
    }
}

impl FwOptions {
    pub fn sequential() -> Self {
        FwOptions {
            parallel: false,
            ..Self::default()
        }
    }
}

/// Outcome of one formation-width computation.
///
/// Equality compares only the width and algorithm; the witness and round
/// counts are diagnostics.
#[derive(Debug, Clone)]
pub struct FwResult {
    pub s: usize,
    pub algorithm: Algorithm,
    /// A binary `(r, s−1)`-formation avoiding the sequence, when one was tracked.
    pub witness: Option<BinaryFormation>,
    /// Frontier size (formations or vectors still avoiding) at each round.
    pub rounds: Vec<usize>,
}

impl PartialEq for FwResult {
    fn eq(&self, other: &Self) -> bool {
        self.s == other.s && self.algorithm == other.algorithm
    }
}

impl Eq for FwResult {}

fn zero(algorithm: Algorithm) -> FwResult {
    FwResult {
        s: 0,
        algorithm,
        witness: None,
        rounds: Vec::new(),
    }
}

fn avoids(f: &BinaryFormation, u: &Sequence, table: &PermutationTable) -> bool {
    contains_isomorphic(&f.materialize(), u, table)
        .expect("formation and sequence share the table's alphabet")
        .is_none()
}

/// Checks every canonical binary formation for `s = 0, 1, 2, …` up to `s_cap`.
pub fn fw_binary(u: &Sequence, s_cap: usize) -> Result<FwResult> {
    fw_binary_with(u, s_cap, FwOptions::default())
}

pub fn fw_binary_with(u: &Sequence, s_cap: usize, opts: FwOptions) -> Result<FwResult> {
    if u.is_empty() {
        return Ok(zero(Algorithm::Binary));
    }
    if s_cap > BINARY_MAX_BLOCKS {
        return Err(Error::CapExceeded(format!(
            "binary search capped at {BINARY_MAX_BLOCKS} blocks, asked for {s_cap}"
        )));
    }
    let table = PermutationTable::new(u.r())?;
    let mut witness = None;
    let mut rounds = Vec::new();
    for s in 0..=s_cap {
        let (lo, hi) = if s == 0 {
            (0, 1)
        } else {
            (1u64 << (s - 1), 1u64 << s)
        };
        let formation =
            |bits: u64| BinaryFormation::from_bits(u.r(), s, bits).expect("bits within range");
        let first_avoider = par::find_first(lo, hi, opts.parallel, |bits| {
            avoids(&formation(bits), u, &table)
        });
        rounds.push((hi - lo) as usize);
        match first_avoider {
            None => {
                return Ok(FwResult {
                    s,
                    algorithm: Algorithm::Binary,
                    witness,
                    rounds,
                });
            }
            Some(bits) => witness = Some(formation(bits)),
        }
    }
    Err(Error::CapExceeded(format!(
        "no answer within {s_cap} blocks"
    )))
}

/// Grows the tree of binary formations, extending only formations that avoid `u`.
pub fn fw_tree(u: &Sequence) -> Result<FwResult> {
    fw_tree_with(u, FwOptions::default())
}

pub fn fw_tree_with(u: &Sequence, opts: FwOptions) -> Result<FwResult> {
    if u.is_empty() {
        return Ok(zero(Algorithm::Tree));
    }
    let table = PermutationTable::new(u.r())?;
    let mut frontier = vec![BinaryFormation::root(u.r())];
    let mut witness = BinaryFormation::empty(u.r());
    let mut rounds = Vec::new();
    let mut s = 1;
    loop {
        let keep = par::map(&frontier, opts.parallel, |f| avoids(f, u, &table));
        let avoiders: Vec<BinaryFormation> = frontier
            .iter()
            .zip(keep)
            .filter_map(|(f, k)| k.then_some(*f))
            .collect();
        rounds.push(avoiders.len());
        let Some(first) = avoiders.first() else {
            return Ok(FwResult {
                s,
                algorithm: Algorithm::Tree,
                witness: Some(witness),
                rounds,
            });
        };
        witness = *first;
        if s >= MAX_BLOCKS {
            return Err(Error::CapExceeded(format!(
                "formation tree deeper than {MAX_BLOCKS}"
            )));
        }
        frontier = avoiders
            .iter()
            .flat_map(|f| [f.child(false), f.child(true)])
            .collect::<Result<Vec<_>>>()?;
        s += 1;
    }
}

/// Tracks prefix-match vectors instead of formations.
pub fn fw_pv(u: &Sequence) -> Result<FwResult> {
    fw_pv_with(u, FwOptions::default())
}

pub fn fw_pv_with(u: &Sequence, opts: FwOptions) -> Result<FwResult> {
    Ok(pv_rounds(u, None, opts)?.expect("unbounded run always finishes"))
}

/// `Some(result)` when `fw(u) ≤ limit`, `None` otherwise; stops after `limit` rounds.
pub fn fw_pv_at_most(u: &Sequence, limit: usize, opts: FwOptions) -> Result<Option<FwResult>> {
    pv_rounds(u, Some(limit), opts)
}

/// Distinct match vectors of one round, stored back to back, each with the
/// bits of one formation it summarizes.
#[derive(Debug, Clone, Default)]
struct Frontier {
    width: usize,
    entries: Vec<u16>,
    bits: Vec<u64>,
}

impl Frontier {
    fn len(&self) -> usize {
        self.bits.len()
    }

    fn vector(&self, i: usize) -> &[u16] {
        &self.entries[i * self.width..(i + 1) * self.width]
    }
}

fn pv_rounds(u: &Sequence, limit: Option<usize>, opts: FwOptions) -> Result<Option<FwResult>> {
    let algorithm = Algorithm::PermutationVector;
    if u.is_empty() {
        return Ok(Some(zero(algorithm)));
    }
    if limit == Some(0) {
        return Ok(None);
    }
    let table = PermutationTable::new(u.r())?;
    let ext = ExtensionTable::new(u, &table)?;
    let init = initial_vector(u, &table)?;
    if init.is_complete() {
        let witness = Some(BinaryFormation::empty(u.r()));
        return Ok(Some(FwResult {
            s: 1,
            algorithm,
            witness,
            rounds: vec![0],
        }));
    }
    let width = table.len();
    let mut frontier = Frontier {
        width,
        entries: init.entries().to_vec(),
        bits: vec![1],
    };
    let mut next = Frontier {
        width,
        ..Frontier::default()
    };
    let mut children = Vec::new();
    let mut alive = Vec::new();
    let mut rounds = vec![1];
    let mut s = 1;
    loop {
        if limit.is_some_and(|l| s >= l) {
            return Ok(None);
        }
        // Bits are only meaningful while the formation fits in a word.
        let track = s < MAX_BLOCKS;
        children.clear();
        children.resize(frontier.len() * 2 * width, 0u16);
        let complete = par::map_chunks_mut(&mut children, 2 * width, opts.parallel, |i, out| {
            let parent = frontier.vector(i);
            let (desc, asc) = out.split_at_mut(width);
            [
                ext.extend_into(parent, false, desc),
                ext.extend_into(parent, true, asc),
            ]
        });
        let child_bits = |c: usize| {
            if track {
                (frontier.bits[c / 2] << 1) | (c % 2) as u64
            } else {
                0
            }
        };
        let child = |c: usize| &children[c * width..(c + 1) * width];
        alive.clear();
        alive.extend((0..complete.len() * 2).filter(|&c| !complete[c / 2][c % 2]));
        s += 1;
        if alive.is_empty() {
            let witness = BinaryFormation::from_bits(u.r(), s - 1, frontier.bits[0]).ok();
            rounds.push(0);
            return Ok(Some(FwResult {
                s,
                algorithm,
                witness,
                rounds,
            }));
        }
        // Sorting by (vector, bits) then keeping the first of each run of equal
        // vectors picks the smallest bit pattern, independent of scheduling.
        par::sort_unstable_by(&mut alive, opts.parallel, |&a, &b| {
            child(a)
                .cmp(child(b))
                .then(child_bits(a).cmp(&child_bits(b)))
        });
        alive.dedup_by(|b, a| child(*a) == child(*b));
        if opts.dominance_pruning {
            alive = drop_dominating(std::mem::take(&mut alive), child);
        }
        next.entries.clear();
        next.bits.clear();
        for &c in &alive {
            next.entries.extend_from_slice(child(c));
            next.bits.push(child_bits(c));
        }
        rounds.push(next.len());
        std::mem::swap(&mut frontier, &mut next);
    }
}

/// Keeps only vectors that are entrywise-minimal: a vector at least as large
/// as another everywhere completes no later than it.
fn drop_dominating<'a>(ids: Vec<usize>, vector: impl Fn(usize) -> &'a [u16]) -> Vec<usize> {
    let le = |a: &[u16], b: &[u16]| a.iter().zip(b).all(|(x, y)| x <= y);
    ids.iter()
        .copied()
        .filter(|&i| !ids.iter().any(|&j| j != i && le(vector(j), vector(i))))
        .collect()
}

/// Runs `algorithm`; with `crosscheck`, also runs the others and insists they agree.
pub fn fw(
    u: &Sequence,
    algorithm: Algorithm,
    crosscheck: bool,
    opts: FwOptions,
) -> Result<FwResult> {
    let run = |a: Algorithm| match a {
        Algorithm::Binary => fw_binary_with(u, u.len(), opts),
        Algorithm::Tree => fw_tree_with(u, opts),
        Algorithm::PermutationVector => fw_pv_with(u, opts),
    };
    let primary = run(algorithm)?;
    if !crosscheck {
        return Ok(primary);
    }
    let mut others = vec![Algorithm::PermutationVector, Algorithm::Tree];
    if u.r() <= CROSSCHECK_BINARY_MAX_R && u.len() <= CROSSCHECK_BINARY_MAX_N {
        others.push(Algorithm::Binary);
    }
    for a in others.into_iter().filter(|&a| a != algorithm) {
        let other = run(a)?;
        if other.s != primary.s {
            return Err(Error::Mismatch {
                sequence: u.to_string(),
                detail: format!("{} gives {}, {} gives {}", algorithm, primary.s, a, other.s),
            });
        }
    }
    Ok(primary)
}
