//! Exhaustive searches over normalized sequences.
//!
//! [`enumerate_fw_alt`] lists every sequence with a given formation width `x`
//! and alternation length `x + 1`. Both quantities can only grow when letters
//! are appended, so a depth-first search over normalized words can discard a
//! prefix as soon as either one overshoots. Formation width is at least
//! `⌈n / r⌉`, which bounds the length by `r · x`.
//!
//! [`enumerate_abc_acb`] covers the narrower family of words built from the
//! blocks `012` and `021`.

use std::fmt;

use crate::error::{Error, Result};
use crate::fw::{fw_pv_at_most, fw_pv_with, FwOptions};
use crate::par;
use crate::perm::MAX_ALPHABET;
use crate::sequence::{alternation_length, Sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationQuery {
    /// Target formation width.
    pub x: usize,
    /// Alphabet size.
    pub r: usize,
    /// Length cap; `None` means `r · x`.
    pub max_len: Option<usize>,
    /// Only report sequences using all `r` letters.
    pub require_exact_alphabet: bool,
    pub parallel: bool,
}

impl EnumerationQuery {
    pub fn new(x: usize, r: usize) -> Self {
        EnumerationQuery {
            x,
            r,
            max_len: None,
            require_exact_alphabet: true,
            parallel: cfg!(feature = "parallel"),
        }
    }

    pub fn length_cap(&self) -> usize {
        self.max_len.unwrap_or(self.r * self.x)
    }
}

/// Longest run-collapsed restriction to each letter pair, updated letter by letter.
#[derive(Debug, Clone)]
struct AltState {
    r: usize,
    // (length, last letter) per unordered pair a < b, row-major
    pairs: Vec<(usize, u8)>,
    best: usize,
}

impl AltState {
    fn new(r: usize) -> Self {
        AltState {
            r,
            pairs: vec![(0, u8::MAX); r * r],
            best: 0,
        }
    }

    fn push(&mut self, c: u8) {
        let c_us = c as usize;
        for other in 0..self.r {
            if other == c_us {
                continue;
            }
            let (a, b) = if other < c_us {
                (other, c_us)
            } else {
                (c_us, other)
            };
            let slot = &mut self.pairs[a * self.r + b];
            if slot.1 != c {
                *slot = (slot.0 + 1, c);
                self.best = self.best.max(slot.0);
            }
        }
        if self.r == 1 {
            self.best = 1;
        }
    }
}

struct Search {
    q: EnumerationQuery,
    max_len: usize,
    opts: FwOptions,
}

/// A prefix that still needs expanding.
struct Pending {
    prefix: Sequence,
    alt: AltState,
}

impl Search {
    /// Visits `prefix` (already pushed): reports it if it matches, and expands
    /// its children down to `stop_depth`, where remaining work is handed back.
    fn visit(
        &self,
        prefix: &mut Sequence,
        alt: &AltState,
        stop_depth: usize,
        found: &mut Vec<Sequence>,
        pending: &mut Vec<Pending>,
    ) -> Result<()> {
        let x = self.q.x;
        if alt.best > x + 1 {
            return Ok(());
        }
        let Some(res) = fw_pv_at_most(prefix, x, self.opts)? else {
            return Ok(());
        };
        let alphabet_ok = !self.q.require_exact_alphabet || prefix.r() == self.q.r;
        if res.s == x && alt.best == x + 1 && alphabet_ok {
            found.push(prefix.clone());
        }
        if prefix.len() >= self.max_len {
            return Ok(());
        }
        if prefix.len() >= stop_depth {
            pending.push(Pending {
                prefix: prefix.clone(),
                alt: alt.clone(),
            });
            return Ok(());
        }
        let top = prefix.r().min(self.q.r - 1) as u8;
        for c in 0..=top {
            let mut next = alt.clone();
            next.push(c);
            prefix.push(c);
            let r = self.visit(prefix, &next, stop_depth, found, pending);
            prefix.pop();
            r?;
        }
        Ok(())
    }
}

/// Work inside a search is already split across subtrees or words, and
/// dominance pruning keeps the vector frontiers small.
const SEARCH_OPTS: FwOptions = FwOptions {
    parallel: false,
    dominance_pruning: true,
};

/// Prefix length at which the search fans out into parallel subtrees.
const SPLIT_DEPTH: usize = 6;

/// All normalized sequences with formation width `q.x` and alternation length
/// `q.x + 1`, sorted by length and then lexicographically.
pub fn enumerate_fw_alt(q: &EnumerationQuery) -> Result<Vec<Sequence>> {
    if q.x == 0 {
        return Err(Error::Parse(
            "formation width target must be at least 1".into(),
        ));
    }
    if q.r < 2 || q.r > MAX_ALPHABET {
        return Err(Error::AlphabetTooLarge {
            r: q.r,
            max: MAX_ALPHABET,
        });
    }
    let search = Search {
        q: *q,
        max_len: q.length_cap(),
        opts: SEARCH_OPTS,
    };
    let mut found = Vec::new();
    let mut pending = Vec::new();
    let mut root = Sequence::empty();
    let mut alt = AltState::new(q.r);
    alt.push(0);
    root.push(0);
    search.visit(&mut root, &alt, SPLIT_DEPTH, &mut found, &mut pending)?;
    let rest = par::flat_map_coarse(&pending, q.parallel, |p| {
        let mut found = Vec::new();
        let mut nothing = Vec::new();
        let mut prefix = p.prefix.clone();
        let top = prefix.r().min(q.r - 1) as u8;
        for c in 0..=top {
            let mut next = p.alt.clone();
            next.push(c);
            prefix.push(c);
            let r = search.visit(&mut prefix, &next, usize::MAX, &mut found, &mut nothing);
            prefix.pop();
            if let Err(e) = r {
                return vec![Err(e)];
            }
        }
        found.into_iter().map(Ok).collect()
    });
    for item in rest {
        found.push(item?);
    }
    found.sort_by(|a, b| (a.len(), a.letters()).cmp(&(b.len(), b.letters())));
    Ok(found)
}

/// One word of the `012`/`021` block family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbcAcbRecord {
    pub bits: String,
    pub sequence: Sequence,
    pub fw: usize,
}

impl fmt::Display for AbcAcbRecord {
    /// `<bits> <sequence> <fw>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.bits, self.sequence, self.fw)
    }
}

/// Replaces each `1` with `012` and each `0` with `021`.
pub fn bits_to_sequence(bits: &str) -> Result<Sequence> {
    if !bits.starts_with('1') || !bits.chars().all(|c| c == '0' || c == '1') {
        return Err(Error::MalformedBits(bits.to_string()));
    }
    let letters: Vec<u8> = bits
        .chars()
        .flat_map(|c| if c == '1' { [0, 1, 2] } else { [0, 2, 1] })
        .collect();
    Sequence::from_normalized(letters)
}

/// Every `t`-block word of the family, by increasing bit string; with
/// `filter`, only those whose formation width is `2t − 1` (alternation
/// length `2t`).
pub fn enumerate_abc_acb(t: usize, filter: bool, parallel: bool) -> Result<Vec<AbcAcbRecord>> {
    if t == 0 || t > 40 {
        return Err(Error::CapExceeded(format!(
            "block count {t} outside 1..=40"
        )));
    }
    let codes: Vec<u64> = ((1u64 << (t - 1))..(1u64 << t)).collect();
    let opts = SEARCH_OPTS;
    let records = par::map(&codes, parallel, |&code| -> Result<Option<AbcAcbRecord>> {
        let bits = format!("{code:0t$b}");
        let sequence = bits_to_sequence(&bits)?;
        if !filter {
            let fw = fw_pv_with(&sequence, opts)?.s;
            return Ok(Some(AbcAcbRecord { bits, sequence, fw }));
        }
        // Every word here contains (ab)^t, so fw ≥ 2t − 1 and only the
        // first 2t − 1 rounds need running.
        let target = 2 * t - 1;
        let Some(res) = fw_pv_at_most(&sequence, target, opts)? else {
            return Ok(None);
        };
        let keep = res.s == target && alternation_length(&sequence) == 2 * t;
        Ok(keep.then_some(AbcAcbRecord {
            bits,
            sequence,
            fw: res.s,
        }))
    });
    records.into_iter().filter_map(Result::transpose).collect()
}
